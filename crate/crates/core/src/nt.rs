//! Exact 64-bit integer utilities: primality, factorization, valuations and
//! the search for primes in the progression `m * p^n + 1`.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// A prime number, validated on construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Prime(u64);

impl Prime {
    pub fn new(n: u64) -> Result<Self> {
        if is_prime(n) {
            Ok(Prime(n))
        } else {
            Err(Error::NotPrime(n))
        }
    }

    pub fn get(self) -> u64 {
        self.0
    }
}

impl TryFrom<u64> for Prime {
    type Error = Error;

    fn try_from(n: u64) -> Result<Self> {
        Prime::new(n)
    }
}

impl From<Prime> for u64 {
    fn from(p: Prime) -> u64 {
        p.0
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// A prime, or the zero marker standing for characteristic 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Characteristic {
    Zero,
    Prime(Prime),
}

impl From<Prime> for Characteristic {
    fn from(p: Prime) -> Self {
        Characteristic::Prime(p)
    }
}

impl Characteristic {
    /// `0` maps to [`Characteristic::Zero`]; anything else must be prime.
    pub fn new(n: u64) -> Result<Self> {
        if n == 0 {
            Ok(Characteristic::Zero)
        } else {
            Prime::new(n).map(Characteristic::Prime)
        }
    }

    pub fn get(self) -> u64 {
        match self {
            Characteristic::Zero => 0,
            Characteristic::Prime(p) => p.get(),
        }
    }
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// `base^exp`, or `None` on overflow.
pub fn checked_pow(base: u64, exp: u32) -> Option<u64> {
    base.checked_pow(exp)
}

// The first twelve primes are a complete witness set below 3.3 * 10^24.
const MR_WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

/// Deterministic Miller-Rabin for the whole `u64` range.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &MR_WITNESSES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &MR_WITNESSES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Prime factorization with primes strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Factorization {
    pairs: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn pairs(&self) -> &[(u64, u32)] {
        &self.pairs
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.pairs.iter().map(|&(p, _)| p)
    }

    pub fn exponent_of(&self, p: u64) -> u32 {
        self.pairs
            .iter()
            .find(|&&(q, _)| q == p)
            .map_or(0, |&(_, e)| e)
    }

    pub fn product(&self) -> u128 {
        self.pairs
            .iter()
            .map(|&(p, e)| (p as u128).pow(e))
            .product()
    }

    /// `Some((p, e))` when the factored number is `p^e` with `e >= 1`.
    pub fn as_prime_power(&self) -> Option<(u64, u32)> {
        match self.pairs.as_slice() {
            [(p, e)] => Some((*p, *e)),
            _ => None,
        }
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.pairs.is_empty() {
            return write!(f, "1");
        }
        for (i, &(p, e)) in self.pairs.iter().enumerate() {
            if i > 0 {
                write!(f, " * ")?;
            }
            if e == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{e}")?;
            }
        }
        Ok(())
    }
}

const TRIAL_BOUND: u64 = 1 << 10;

/// Trial division up to a small bound, then Brent's variant of Pollard rho.
pub fn factorize(n: u64) -> Factorization {
    assert!(n >= 1, "factorize expects a positive integer");
    let mut primes = Vec::new();
    let mut rest = n;
    let mut d = 2u64;
    while d < TRIAL_BOUND && d * d <= rest {
        while rest.is_multiple_of(d) {
            primes.push(d);
            rest /= d;
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if rest > 1 {
        split_into(rest, &mut primes);
    }
    primes.sort_unstable();
    let mut pairs: Vec<(u64, u32)> = Vec::new();
    for p in primes {
        match pairs.last_mut() {
            Some((q, e)) if *q == p => *e += 1,
            _ => pairs.push((p, 1)),
        }
    }
    Factorization { pairs }
}

fn split_into(n: u64, out: &mut Vec<u64>) {
    if n == 1 {
        return;
    }
    if is_prime(n) {
        out.push(n);
        return;
    }
    let d = pollard_brent(n);
    split_into(d, out);
    split_into(n / d, out);
}

// Fixed seeds: x0 = 2 and c = 1, 2, 3, ... until a proper divisor appears.
fn pollard_brent(n: u64) -> u64 {
    if n.is_multiple_of(2) {
        return 2;
    }
    let f = |x: u64, c: u64| (mul_mod(x, x, n) + c) % n;
    for c in 1.. {
        let mut y = 2u64;
        let mut r = 1u64;
        let mut q = 1u64;
        let mut g = 1u64;
        let mut x = y;
        let mut ys = y;
        const M: u64 = 128;
        while g == 1 {
            x = y;
            for _ in 0..r {
                y = f(y, c);
            }
            let mut k = 0;
            while k < r && g == 1 {
                ys = y;
                for _ in 0..M.min(r - k) {
                    y = f(y, c);
                    q = mul_mod(q, x.abs_diff(y), n);
                }
                g = gcd(q, n);
                k += M;
            }
            r *= 2;
        }
        if g == n {
            loop {
                ys = f(ys, c);
                g = gcd(x.abs_diff(ys), n);
                if g > 1 {
                    break;
                }
            }
        }
        if g != n {
            return g;
        }
    }
    unreachable!()
}

/// Largest `e` with `l^e | n`.
pub fn padic_valuation(mut n: u64, l: Prime) -> u32 {
    assert!(n >= 1, "valuation of zero is undefined");
    let l = l.get();
    let mut e = 0;
    while n.is_multiple_of(l) {
        n /= l;
        e += 1;
    }
    e
}

/// `l`-adic part of `n`, i.e. `l^{v_l(n)}`.
pub fn padic_part(n: u64, l: Prime) -> u64 {
    l.get().pow(padic_valuation(n, l))
}

/// Smallest `m <= m_max` with `m * p^n + 1` prime, returned as `(m, q)`.
pub fn dirichlet_search(p: Prime, n: u32, m_max: u64) -> Result<Option<(u64, u64)>> {
    let modulus = checked_pow(p.get(), n).ok_or(Error::Overflow("p^n"))?;
    for m in 1..=m_max {
        let Some(q) = m.checked_mul(modulus).and_then(|x| x.checked_add(1)) else {
            return Ok(None);
        };
        if is_prime(q) {
            return Ok(Some((m, q)));
        }
    }
    Ok(None)
}

/// Interprets `q` as `p^r`, failing when `q` is not a prime power.
pub fn prime_power(q: u64) -> Result<(Prime, u32)> {
    if q < 2 {
        return Err(Error::NotPrimePower(q));
    }
    factorize(q)
        .as_prime_power()
        .map(|(p, r)| (Prime(p), r))
        .ok_or(Error::NotPrimePower(q))
}

/// Primes dividing `n` in increasing order.
pub fn prime_divisors(n: u64) -> Vec<Prime> {
    factorize(n).primes().map(Prime).collect()
}
