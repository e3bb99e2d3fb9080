//! Arithmetic in `GF(p^r)` modulo the lexicographically smallest monic
//! irreducible polynomial of degree `r`.

use std::fmt;

use crate::error::{Error, Result};
use crate::nt::{checked_pow, gcd, pow_mod, prime_divisors, Prime};

/// Largest field order [`FieldGF::new`] accepts.
pub const DEFAULT_FIELD_CAP: u64 = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldGF {
    p: Prime,
    r: u32,
    /// Coefficients of the modulus, constant term first; `modulus[r] == 1`.
    modulus: Vec<u64>,
    q: u64,
}

/// An element of `GF(p^r)` as `r` coefficients, constant term first.
///
/// Elements compare by [`FieldGF::index_of`], i.e. lexicographically from
/// the highest coefficient down.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FieldElement {
    coeffs: Vec<u64>,
}

impl FieldElement {
    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }
}

impl PartialOrd for FieldElement {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for FieldElement {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.coeffs.iter().rev().cmp(other.coeffs.iter().rev())
    }
}

/// Remainder of `a` modulo the monic polynomial `m` over `F_p`.
fn poly_rem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let mut a = a.to_vec();
    let dm = m.len() - 1;
    while a.len() > dm {
        let lead = a.pop().expect("nonempty");
        if lead != 0 {
            let shift = a.len() - dm;
            for (i, &mi) in m[..dm].iter().enumerate() {
                let t = lead * mi % p;
                a[shift + i] = (a[shift + i] + p - t) % p;
            }
        }
    }
    a
}

fn monic_from_index(index: u64, degree: u32, p: u64) -> Vec<u64> {
    let mut coeffs = Vec::with_capacity(degree as usize + 1);
    let mut k = index;
    for _ in 0..degree {
        coeffs.push(k % p);
        k /= p;
    }
    coeffs.push(1);
    coeffs
}

/// No monic factor of degree `1..=deg/2` divides `poly`.
pub fn is_irreducible(poly: &[u64], p: Prime) -> bool {
    let p = p.get();
    let degree = (poly.len() - 1) as u32;
    for d in 1..=degree / 2 {
        let count = p.pow(d);
        for index in 0..count {
            let divisor = monic_from_index(index, d, p);
            if poly_rem(poly, &divisor, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

impl FieldGF {
    pub fn new(p: u64, r: u32) -> Result<Self> {
        FieldGF::with_cap(p, r, DEFAULT_FIELD_CAP)
    }

    pub fn with_cap(p: u64, r: u32, cap: u64) -> Result<Self> {
        let p = Prime::new(p)?;
        if r == 0 {
            return Err(Error::InvalidParameter("field degree must be positive".into()));
        }
        let q = match checked_pow(p.get(), r) {
            Some(q) if q <= cap => q,
            _ => {
                return Err(Error::FieldTooLarge {
                    q: (p.get() as u128).checked_pow(r).unwrap_or(u128::MAX),
                    cap,
                })
            }
        };
        let modulus = (0..q)
            .map(|k| monic_from_index(k, r, p.get()))
            .find(|m| is_irreducible(m, p))
            .expect("an irreducible polynomial exists in every degree");
        Ok(FieldGF { p, r, modulus, q })
    }

    pub fn characteristic(&self) -> Prime {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.r
    }

    pub fn order(&self) -> u64 {
        self.q
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement {
            coeffs: vec![0; self.r as usize],
        }
    }

    pub fn one(&self) -> FieldElement {
        self.from_int(1)
    }

    /// Image of the integer `n` in the prime field.
    pub fn from_int(&self, n: i64) -> FieldElement {
        let p = self.p.get() as i64;
        let mut e = self.zero();
        e.coeffs[0] = n.rem_euclid(p) as u64;
        e
    }

    /// The class of `x` (the generator of the extension); `x = 0` when `r = 1`.
    pub fn generator(&self) -> FieldElement {
        let mut e = self.zero();
        if self.r > 1 {
            e.coeffs[1] = 1;
        } else {
            e.coeffs[0] = (self.p.get() - self.modulus[0]) % self.p.get();
        }
        e
    }

    pub fn element(&self, index: u64) -> FieldElement {
        assert!(index < self.q, "element index out of range");
        let mut coeffs = monic_from_index(index, self.r, self.p.get());
        coeffs.pop();
        FieldElement { coeffs }
    }

    pub fn index_of(&self, e: &FieldElement) -> u64 {
        e.coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| acc * self.p.get() + c)
    }

    /// All elements in index order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.q).map(|i| self.element(i))
    }

    pub fn is_zero(&self, a: &FieldElement) -> bool {
        a.coeffs.iter().all(|&c| c == 0)
    }

    pub fn add(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        let p = self.p.get();
        FieldElement {
            coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| (x + y) % p).collect(),
        }
    }

    pub fn neg(&self, a: &FieldElement) -> FieldElement {
        let p = self.p.get();
        FieldElement {
            coeffs: a.coeffs.iter().map(|x| (p - x) % p).collect(),
        }
    }

    pub fn sub(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        let p = self.p.get();
        let mut prod = vec![0u64; 2 * self.r as usize - 1];
        for (i, &x) in a.coeffs.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.coeffs.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % p;
            }
        }
        let mut coeffs = poly_rem(&prod, &self.modulus, p);
        coeffs.resize(self.r as usize, 0);
        FieldElement { coeffs }
    }

    pub fn pow(&self, a: &FieldElement, mut e: u64) -> FieldElement {
        let mut acc = self.one();
        let mut base = a.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// `a^(q-2)`, the inverse in `F_q^*`.
    pub fn inv(&self, a: &FieldElement) -> Result<FieldElement> {
        if self.is_zero(a) {
            return Err(Error::ZeroInverse);
        }
        Ok(self.pow(a, self.q - 2))
    }

    pub fn frobenius(&self, a: &FieldElement) -> FieldElement {
        self.pow(a, self.p.get())
    }

    /// Multiplicative order of a nonzero element.
    pub fn multiplicative_order(&self, a: &FieldElement) -> Result<u64> {
        if self.is_zero(a) {
            return Err(Error::ZeroInverse);
        }
        let mut order = self.q - 1;
        for l in prime_divisors(self.q - 1) {
            while order.is_multiple_of(l.get()) && self.pow(a, order / l.get()) == self.one() {
                order /= l.get();
            }
        }
        Ok(order)
    }

    /// The first element, in index order, generating `F_q^*`.
    pub fn primitive_element(&self) -> FieldElement {
        (1..self.q)
            .map(|i| self.element(i))
            .find(|a| self.multiplicative_order(a).ok() == Some(self.q - 1))
            .expect("F_q^* is cyclic")
    }
}

impl fmt::Display for FieldGF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}) = F_{}[x]/(", self.q, self.p)?;
        let mut first = true;
        for (i, &c) in self.modulus.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (i, c) {
                (0, c) => write!(f, "{c}")?,
                (1, 1) => write!(f, "x")?,
                (1, c) => write!(f, "{c}x")?,
                (i, 1) => write!(f, "x^{i}")?,
                (i, c) => write!(f, "{c}x^{i}")?,
            }
        }
        write!(f, ")")
    }
}

/// Smallest `t` in `{1..q-1}` of exact multiplicative order `d` modulo the
/// prime `q`, found among the powers `g^(k(q-1)/d)` of a primitive root `g`.
pub fn unit_element_of_order(q: u64, d: u64) -> Result<u64> {
    let q = Prime::new(q)?;
    let q = q.get();
    if d == 0 || (q - 1) % d != 0 {
        return Err(Error::InvalidParameter(format!("{d} does not divide {q} - 1")));
    }
    if d == 1 {
        return Ok(1);
    }
    let factors = prime_divisors(q - 1);
    let g = (2..q)
        .find(|&g| factors.iter().all(|l| pow_mod(g, (q - 1) / l.get(), q) != 1))
        .expect("a primitive root exists modulo a prime");
    let step = (q - 1) / d;
    Ok((1..d)
        .filter(|&k| gcd(k, d) == 1)
        .map(|k| pow_mod(g, k * step, q))
        .min()
        .expect("d > 1 has a unit residue"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_examples() {
        assert_eq!(FieldGF::new(2, 2).unwrap().modulus(), &[1, 1, 1]);
        assert_eq!(FieldGF::new(3, 1).unwrap().modulus(), &[0, 1]);
        assert_eq!(FieldGF::new(3, 2).unwrap().modulus(), &[1, 0, 1]);
        assert_eq!(FieldGF::new(3, 2).unwrap().to_string(), "GF(9) = F_3[x]/(x^2 + 1)");
    }

    #[test]
    fn construction_errors() {
        assert_eq!(FieldGF::new(4, 1).unwrap_err(), Error::NotPrime(4));
        assert!(matches!(FieldGF::new(2, 30), Err(Error::FieldTooLarge { .. })));
        assert!(FieldGF::new(2, 0).is_err());
    }

    // Brute force: the chosen modulus is irreducible, found by checking for
    // roots and quadratic factors by hand, and every smaller monic
    // candidate of the same degree is reducible.
    #[test]
    fn modulus_is_smallest_irreducible() {
        for (p, r) in [(2u64, 2u32), (2, 3), (2, 4), (3, 2), (3, 3), (5, 2), (7, 2), (2, 6)] {
            let f = FieldGF::new(p, r).unwrap();
            let pp = Prime::new(p).unwrap();
            assert!(is_irreducible(f.modulus(), pp));
            let chosen = f.modulus()[..r as usize].iter().rev().fold(0, |a, &c| a * p + c);
            for k in 0..chosen {
                assert!(!is_irreducible(&monic_from_index(k, r, p), pp));
            }
        }
    }

    #[test]
    fn f4_arithmetic() {
        let f = FieldGF::new(2, 2).unwrap();
        let x = f.generator();
        assert_eq!(f.mul(&x, &x), f.add(&x, &f.one()));
    }

    #[test]
    fn field_axioms_exhaustive() {
        for (p, r) in [(2, 1), (2, 2), (3, 1), (2, 3), (5, 1), (7, 1), (3, 2), (2, 4), (5, 2), (3, 3), (2, 5), (7, 2), (2, 6)] {
            let f = FieldGF::new(p, r).unwrap();
            assert!(f.order() <= 64);
            let els: Vec<FieldElement> = f.elements().collect();
            let zero = f.zero();
            let one = f.one();
            for a in &els {
                assert_eq!(f.add(a, &zero), *a);
                assert_eq!(f.mul(a, &one), *a);
                assert_eq!(f.add(a, &f.neg(a)), zero);
                if !f.is_zero(a) {
                    assert_eq!(f.mul(a, &f.inv(a).unwrap()), one);
                    assert_eq!(f.pow(a, f.order() - 1), one);
                }
                for b in &els {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    assert_eq!(f.frobenius(&f.add(a, b)), f.add(&f.frobenius(a), &f.frobenius(b)));
                    assert_eq!(f.frobenius(&f.mul(a, b)), f.mul(&f.frobenius(a), &f.frobenius(b)));
                }
            }
            // associativity and distributivity on a sparser grid keeps this quick
            for a in els.iter().step_by(3) {
                for b in &els {
                    for c in els.iter().step_by(2) {
                        assert_eq!(f.mul(&f.mul(a, b), c), f.mul(a, &f.mul(b, c)));
                        assert_eq!(f.add(&f.add(a, b), c), f.add(a, &f.add(b, c)));
                        assert_eq!(f.mul(a, &f.add(b, c)), f.add(&f.mul(a, b), &f.mul(a, c)));
                    }
                }
            }
            let frob: std::collections::HashSet<FieldElement> = els.iter().map(|a| f.frobenius(a)).collect();
            assert_eq!(frob.len(), els.len());
            let g = f.primitive_element();
            let powers: std::collections::HashSet<FieldElement> = (0..f.order() - 1).map(|k| f.pow(&g, k)).collect();
            assert_eq!(powers.len() as u64, f.order() - 1);
        }
    }

    #[test]
    fn zero_has_no_inverse() {
        let f = FieldGF::new(5, 1).unwrap();
        assert_eq!(f.inv(&f.zero()).unwrap_err(), Error::ZeroInverse);
    }

    #[test]
    fn unit_element_examples() {
        assert_eq!(unit_element_of_order(5, 4).unwrap(), 2);
        assert_eq!(unit_element_of_order(19, 9).unwrap(), 4);
        assert_eq!(unit_element_of_order(13, 1).unwrap(), 1);
        assert!(unit_element_of_order(13, 5).is_err());
        assert!(unit_element_of_order(15, 2).is_err());
    }

    #[test]
    fn unit_element_is_smallest_of_its_order() {
        for q in [3u64, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 97, 101] {
            for d in 1..q {
                if (q - 1) % d != 0 {
                    continue;
                }
                let t = unit_element_of_order(q, d).unwrap();
                let ord = |x: u64| (1..=q).find(|&k| pow_mod(x, k, q) == 1).unwrap();
                assert_eq!(ord(t), d);
                assert!((1..t).all(|x| ord(x) != d), "q={q} d={d}");
            }
        }
    }
}
