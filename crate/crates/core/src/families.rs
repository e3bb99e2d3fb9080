//! Named group families as descriptors with closed-form invariants.
//!
//! Each descriptor knows its order without enumeration and can build a
//! concrete permutation realization on demand when the order is within the
//! enumeration cap.

use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::field::unit_element_of_order;
use crate::group::{ConcreteGroup, DEFAULT_CAP};
use crate::nt::{checked_pow, is_prime, padic_valuation, prime_power, Characteristic, Prime};
use crate::perm::Permutation;
use crate::psl2::{psl2_order, psl2_permutation_group};
use crate::sylow::SylowClass;

/// Largest `n` accepted by [`make_alternating`].
pub const MAX_ALTERNATING_DEGREE: u32 = 8;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    Cyclic { n: u64 },
    /// Dihedral group of order `2m`.
    Dihedral { m: u64 },
    ElementaryAbelian { p: Prime, r: u32 },
    Alternating { n: u32 },
    /// `C_{p^n} ⋉ C_q` with `C_{p^n}` acting through `x ↦ t x`.
    Metacyclic { p: Prime, n: u32, q: u64, t: u64 },
    Psl2 { p: Prime, r: u32 },
    /// A group given by explicit permutation generators.
    Permutation { degree: usize, generators: Vec<Permutation> },
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Cyclic { n } => write!(f, "C{n}"),
            Family::Dihedral { m } => write!(f, "D{} (dihedral of order {})", m, 2 * m),
            Family::ElementaryAbelian { p, r } => write!(f, "(C{p})^{r}"),
            Family::Alternating { n } => write!(f, "A{n}"),
            Family::Metacyclic { p, n, q, .. } => write!(f, "C{}^{} ⋉ C{}", p, n, q),
            Family::Psl2 { p, r } => write!(f, "PSL2({})", p.get().pow(*r)),
            Family::Permutation { degree, generators } => {
                write!(f, "<")?;
                for (i, g) in generators.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{g}")?;
                }
                write!(f, "> on {degree} points")
            }
        }
    }
}

/// A group from one of the named families.
pub struct GroupDescriptor {
    family: Family,
    order: u64,
    cap: u64,
    concrete: OnceLock<ConcreteGroup>,
}

impl Clone for GroupDescriptor {
    fn clone(&self) -> Self {
        let concrete = OnceLock::new();
        if let Some(g) = self.concrete.get() {
            let _ = concrete.set(g.clone());
        }
        GroupDescriptor {
            family: self.family.clone(),
            order: self.order,
            cap: self.cap,
            concrete,
        }
    }
}

impl PartialEq for GroupDescriptor {
    fn eq(&self, other: &Self) -> bool {
        self.family == other.family
    }
}

impl Eq for GroupDescriptor {}

impl fmt::Debug for GroupDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GroupDescriptor")
            .field("family", &self.family)
            .field("order", &self.order)
            .finish()
    }
}

impl fmt::Display for GroupDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.family.fmt(f)
    }
}

fn unsupported(operation: &'static str, family: &Family) -> Error {
    Error::UnsupportedFamily {
        operation,
        family: family.to_string(),
    }
}

fn cycle(points: impl IntoIterator<Item = u32>) -> Vec<u32> {
    points.into_iter().collect()
}

impl GroupDescriptor {
    fn new(family: Family, order: u64) -> Self {
        GroupDescriptor {
            family,
            order,
            cap: DEFAULT_CAP,
            concrete: OnceLock::new(),
        }
    }

    /// Replaces the enumeration cap used by [`GroupDescriptor::concrete`].
    pub fn with_cap(mut self, cap: u64) -> Self {
        self.cap = cap;
        self
    }

    pub fn family(&self) -> &Family {
        &self.family
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn cap(&self) -> u64 {
        self.cap
    }

    /// Whether a concrete realization fits under the cap.
    pub fn is_enumerable(&self) -> bool {
        self.order <= self.cap
    }

    /// The concrete permutation group, enumerated on first use.
    pub fn concrete(&self) -> Result<&ConcreteGroup> {
        if let Some(g) = self.concrete.get() {
            return Ok(g);
        }
        if !self.is_enumerable() {
            return Err(Error::TooLarge { cap: self.cap });
        }
        let group = self.build_concrete()?;
        if group.order() != self.order {
            return Err(Error::Internal(format!(
                "{} enumerated to order {} instead of {}",
                self.family,
                group.order(),
                self.order
            )));
        }
        Ok(self.concrete.get_or_init(|| group))
    }

    fn build_concrete(&self) -> Result<ConcreteGroup> {
        let cap = self.cap;
        let (degree, generators) = match &self.family {
            Family::Cyclic { n } => {
                let n = *n as usize;
                let gens = if n > 1 {
                    vec![Permutation::from_cycles(n, &[cycle(0..n as u32)])?]
                } else {
                    vec![]
                };
                (n, gens)
            }
            Family::Dihedral { m } => match *m {
                1 => (2, vec![Permutation::from_cycles(2, &[vec![0, 1]])?]),
                2 => (
                    4,
                    vec![
                        Permutation::from_cycles(4, &[vec![0, 1]])?,
                        Permutation::from_cycles(4, &[vec![2, 3]])?,
                    ],
                ),
                m => {
                    let m32 = m as u32;
                    let rotation = Permutation::from_cycles(m as usize, &[cycle(0..m32)])?;
                    let reflection =
                        Permutation::from_images((0..m32).map(|i| (m32 - i) % m32).collect())?;
                    (m as usize, vec![rotation, reflection])
                }
            },
            Family::ElementaryAbelian { p, r } => {
                let p = p.get() as u32;
                let degree = (p * r) as usize;
                let gens = (0..*r)
                    .map(|i| Permutation::from_cycles(degree, &[cycle(i * p..(i + 1) * p)]))
                    .collect::<Result<Vec<_>>>()?;
                (degree, gens)
            }
            Family::Alternating { n } => {
                let degree = *n as usize;
                let gens = (2..*n)
                    .map(|i| Permutation::from_cycles(degree, &[vec![0, 1, i]]))
                    .collect::<Result<Vec<_>>>()?;
                (degree, gens)
            }
            Family::Metacyclic { q, t, .. } => {
                let (q, t) = (*q, *t);
                let shift = Permutation::from_images((0..q).map(|x| ((x + 1) % q) as u32).collect())?;
                let twist = Permutation::from_images((0..q).map(|x| (x * t % q) as u32).collect())?;
                (q as usize, vec![shift, twist])
            }
            Family::Psl2 { p, r } => {
                let q = checked_pow(p.get(), *r).ok_or(Error::Overflow("q = p^r"))?;
                return psl2_permutation_group(q, cap);
            }
            Family::Permutation { degree, generators } => (*degree, generators.clone()),
        };
        ConcreteGroup::from_generators(degree, generators, cap)
    }

    /// Sylow class from the family's closed form.
    pub fn structural_sylow(&self, l: Prime) -> Result<SylowClass> {
        let lv = l.get();
        Ok(match &self.family {
            Family::Cyclic { n } => SylowClass::cyclic(l, padic_valuation(*n, l)),
            Family::Dihedral { m } => {
                if lv == 2 {
                    match padic_valuation(*m, l) {
                        0 => SylowClass::cyclic(l, 1),
                        k => SylowClass::dihedral(1 << (k + 1)),
                    }
                } else {
                    SylowClass::cyclic(l, padic_valuation(*m, l))
                }
            }
            Family::ElementaryAbelian { p, r } => {
                SylowClass::elementary_abelian(l, if *p == l { *r } else { 0 })
            }
            Family::Metacyclic { p, n, q, .. } => {
                if *p == l {
                    SylowClass::cyclic(l, *n)
                } else {
                    SylowClass::cyclic(l, u32::from(*q == lv))
                }
            }
            Family::Psl2 { p, r } => {
                let q = p.get().pow(*r);
                if *p == l {
                    SylowClass::elementary_abelian(l, *r)
                } else {
                    let v = psl2_valuation(q, l);
                    if lv == 2 {
                        SylowClass::dihedral(1 << v)
                    } else {
                        SylowClass::cyclic(l, v)
                    }
                }
            }
            family @ (Family::Alternating { .. } | Family::Permutation { .. }) => {
                return Err(unsupported("structural_sylow", family));
            }
        })
    }

    /// Sylow class, using the closed form when there is one.
    pub fn sylow(&self, l: Prime) -> Result<SylowClass> {
        match self.structural_sylow(l) {
            Err(Error::UnsupportedFamily { .. }) => Ok(self.concrete()?.classify_sylow(l)),
            other => other,
        }
    }

    /// Weak tameness at `l` from the family's closed form, falling back to
    /// the concrete group for the small non-simple cases.
    pub fn structural_weakly_tame(&self, l: impl Into<Characteristic>) -> Result<bool> {
        let l = match l.into() {
            Characteristic::Zero => return Ok(true),
            Characteristic::Prime(l) => l,
        };
        if !self.order.is_multiple_of(l.get()) {
            return Ok(true);
        }
        Ok(match &self.family {
            Family::Cyclic { .. } => false,
            Family::ElementaryAbelian { .. } => false,
            // The rotation subgroup's l-part is normal; for odd m >= 3 the
            // reflections generate the whole group.
            Family::Dihedral { m } => l.get() == 2 && m % 2 == 1 && *m >= 3,
            Family::Metacyclic { q, .. } => l.get() != *q,
            Family::Psl2 { p, r } if p.get().pow(*r) > 3 => true,
            Family::Alternating { n } if *n >= 5 => true,
            _ => self.concrete()?.is_weakly_tame(l),
        })
    }

    /// Largest `s` such that the group has an element of order `l^s`.
    pub fn structural_max_element_order(&self, l: Prime) -> Result<u32> {
        let lv = l.get();
        Ok(match &self.family {
            Family::Cyclic { n } => padic_valuation(*n, l),
            Family::Dihedral { m } => {
                let v = padic_valuation(*m, l);
                if lv == 2 {
                    v.max(1)
                } else {
                    v
                }
            }
            Family::ElementaryAbelian { p, r } => u32::from(*p == l && *r > 0),
            Family::Alternating { n } => {
                // An l^s-cycle is even for odd l; for l = 2 it needs a
                // second even-length cycle, at least a transposition.
                let n = u64::from(*n);
                let mut s = 0;
                let extra = if lv == 2 { 2 } else { 0 };
                while lv.pow(s + 1) + extra <= n {
                    s += 1;
                }
                s
            }
            Family::Metacyclic { p, n, q, .. } => {
                if *p == l {
                    *n
                } else {
                    u32::from(*q == lv)
                }
            }
            Family::Psl2 { p, r } => {
                let q = p.get().pow(*r);
                if *p == l {
                    1
                } else if q % 2 == 1 {
                    padic_valuation((q - 1) / 2, l).max(padic_valuation(q.div_ceil(2), l))
                } else {
                    padic_valuation(q - 1, l).max(padic_valuation(q + 1, l))
                }
            }
            family @ Family::Permutation { .. } => {
                return Err(unsupported("structural_max_element_order", family));
            }
        })
    }

    /// Largest `s` with an element of order `l^s`, by closed form or by
    /// enumeration.
    pub fn max_element_order(&self, l: Prime) -> Result<u32> {
        match self.structural_max_element_order(l) {
            Err(Error::UnsupportedFamily { .. }) => {
                Ok(self.concrete()?.max_prime_power_element_order(l))
            }
            other => other,
        }
    }

    /// Whether this group is `A_5`, recognized as `A_5`, `PSL_2(4)` or `PSL_2(5)`.
    pub fn is_a5(&self) -> bool {
        match self.family {
            Family::Alternating { n } => n == 5,
            Family::Psl2 { p, r } => matches!((p.get(), r), (2, 2) | (5, 1)),
            _ => false,
        }
    }

    /// `(p, n)` when this is the cyclic group of order `p^n`, `n >= 1`.
    pub fn as_cyclic_prime_power(&self) -> Option<(Prime, u32)> {
        match self.family {
            Family::Cyclic { n } if n > 1 => prime_power(n).ok(),
            _ => None,
        }
    }
}

/// `v_l(|PSL_2(q)|)` for `l` not dividing `q`.
fn psl2_valuation(q: u64, l: Prime) -> u32 {
    let v = padic_valuation(q - 1, l) + padic_valuation(q + 1, l);
    if l.get() == 2 && q % 2 == 1 {
        v - 1
    } else {
        v
    }
}

pub fn make_cyclic(n: u64) -> Result<GroupDescriptor> {
    if n == 0 {
        return Err(Error::InvalidParameter("cyclic order must be positive".into()));
    }
    if n > u64::from(u32::MAX) {
        return Err(Error::InvalidParameter(format!("cyclic order {n} is too large")));
    }
    Ok(GroupDescriptor::new(Family::Cyclic { n }, n))
}

/// The dihedral group of order `2m`.
pub fn make_dihedral(m: u64) -> Result<GroupDescriptor> {
    if m == 0 {
        return Err(Error::InvalidParameter("dihedral parameter must be positive".into()));
    }
    if m > u64::from(u32::MAX) {
        return Err(Error::InvalidParameter(format!("dihedral parameter {m} is too large")));
    }
    Ok(GroupDescriptor::new(Family::Dihedral { m }, 2 * m))
}

pub fn make_elementary_abelian(p: u64, r: u32) -> Result<GroupDescriptor> {
    let p = Prime::new(p)?;
    if r == 0 {
        return Err(Error::InvalidParameter("rank must be positive".into()));
    }
    let order = checked_pow(p.get(), r).ok_or(Error::Overflow("p^r"))?;
    if p.get().checked_mul(u64::from(r)).is_none_or(|d| d > u64::from(u32::MAX)) {
        return Err(Error::InvalidParameter(format!("({p})^{r} is too large")));
    }
    Ok(GroupDescriptor::new(Family::ElementaryAbelian { p, r }, order))
}

pub fn make_alternating(n: u32) -> Result<GroupDescriptor> {
    if n == 0 || n > MAX_ALTERNATING_DEGREE {
        return Err(Error::InvalidParameter(format!(
            "alternating degree must be in 1..={MAX_ALTERNATING_DEGREE}, got {n}"
        )));
    }
    let factorial: u64 = (1..=u64::from(n)).product();
    let order = if n >= 2 { factorial / 2 } else { 1 };
    Ok(GroupDescriptor::new(Family::Alternating { n }, order))
}

/// `C_{p^n} ⋉ C_q` with the smallest twist `t` of order `p^n` modulo `q`.
pub fn make_metacyclic(p: u64, n: u32, q: u64) -> Result<GroupDescriptor> {
    let p = Prime::new(p)?;
    if n == 0 {
        return Err(Error::InvalidParameter(
            "metacyclic exponent n must be positive".into(),
        ));
    }
    if !is_prime(q) {
        return Err(Error::NotPrime(q));
    }
    let pn = checked_pow(p.get(), n).ok_or(Error::Overflow("p^n"))?;
    if !(q - 1).is_multiple_of(pn) {
        return Err(Error::NoFaithfulAction { order: pn, q });
    }
    if q > u64::from(u32::MAX) {
        return Err(Error::InvalidParameter(format!("q = {q} is too large")));
    }
    let t = unit_element_of_order(q, pn)?;
    let order = q.checked_mul(pn).ok_or(Error::Overflow("q * p^n"))?;
    Ok(GroupDescriptor::new(Family::Metacyclic { p, n, q, t }, order))
}

pub fn make_psl2(q: u64) -> Result<GroupDescriptor> {
    let (p, r) = prime_power(q)?;
    if q > u64::from(u32::MAX) {
        return Err(Error::InvalidParameter(format!("q = {q} is too large")));
    }
    Ok(GroupDescriptor::new(Family::Psl2 { p, r }, psl2_order(q)?))
}

/// A group given by explicit generators; enumerated immediately to learn
/// its order.
pub fn make_permutation_group(
    degree: usize,
    generators: Vec<Permutation>,
    cap: u64,
) -> Result<GroupDescriptor> {
    let group = ConcreteGroup::from_generators(degree, generators.clone(), cap)?;
    let desc = GroupDescriptor::new(
        Family::Permutation { degree, generators },
        group.order(),
    )
    .with_cap(cap);
    let _ = desc.concrete.set(group);
    Ok(desc)
}
