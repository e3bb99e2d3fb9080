//! Essential-dimension bounds: closed-form `ed^loc` values, the
//! Ledet-conditional lower bound, the characteristic-p formula and a table of
//! known values.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::families::{Family, GroupDescriptor};
use crate::nt::{padic_valuation, prime_divisors, prime_power, Prime};

pub mod provenance {
    pub const ED_LOC_PSL2: &str =
        "ed^loc(PSL2(q)) = r for q = p^r even and max(2, r) for q odd, from the Sylow structure: (C_p)^r at p, cyclic at odd l != p, dihedral at l = 2";
    pub const ED_LOC_METACYCLIC: &str =
        "ed^loc_C(C_{p^n} ⋉ C_q) = 1 since every Sylow subgroup is cyclic";
    pub const ED_AT_P: &str =
        "over a field of characteristic p, ed(G; p) = 1 if p divides |G| and 0 otherwise";
    pub const LEDET: &str =
        "G weakly tame at l with an element of order l^s gives ed_K(G) >= s for char K = 0, provided ed(C_{l^s}) = s in characteristic l (Ledet's conjecture)";
    pub const LEDET_KNOWN: &str =
        "Ledet's conjecture is known for n = 1 and n = 2, so bounds with s <= 2 are unconditional";
    pub const LEDET_CYCLIC: &str =
        "Ledet's conjecture: ed_k(C_{p^n}) = n over a field k of characteristic p";
    pub const NO_WEAKLY_TAME_PRIME: &str =
        "no prime divisor of |G| at which G is weakly tame; only the trivial bound 0 applies";
    pub const LITERAL: &str =
        "largest s with 2 l^s dividing q^2 - 1, reported as stated and not merged with the element-order bound";
    pub const INTERESTING: &str =
        "the Ledet-conditional bound is new exactly when s >= max(r + 1, 5)";
    pub const C4_REALS: &str = "ed_R(C4) = 2";
    pub const C4_QUADRATIC: &str =
        "ed_{Q(sqrt p)}(C4) = 1 if p = 1 mod 4 and 2 if p = 3 mod 4 (1 iff -1 is a square mod p)";
    pub const A5_COMPLEX: &str = "ed_C(A5) = 2";
    pub const A5_CHAR_2: &str =
        "A5 = SL2(F4) has a faithful 2-dimensional representation over any field containing F4, so ed_k(A5) = 1 in characteristic 2";
    pub const CYCLIC_CHAR_P: &str =
        "in characteristic p, ed(C_{p^n}) <= n for n >= 1 and ed(C_{p^n}) >= 2 for n >= 2";
    pub const METACYCLIC_SMALL_N: &str =
        "ed_C(C_{p^n} ⋉ C_q) >= n holds unconditionally for n = 2 and n = 3, via the classification of groups of essential dimension 1 and 2 over C";
}

/// The base fields bounds are stated over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldContext {
    /// An algebraically closed field of characteristic 0, e.g. `C`.
    C,
    Q,
    R,
    /// `Q(sqrt p)` for an odd prime `p`.
    QSqrt(Prime),
    /// A field of characteristic `p` containing the algebraic closure of `F_p`.
    CharP(Prime),
    /// A field of characteristic `p`, for essential dimension at `p`.
    CharPAtP(Prime),
}

impl FieldContext {
    pub fn quadratic(p: Prime) -> Result<Self> {
        if p.get() == 2 {
            return Err(Error::InvalidParameter(
                "Q(sqrt p) requires an odd prime p".into(),
            ));
        }
        Ok(FieldContext::QSqrt(p))
    }

    /// The characteristic, `0` for the characteristic-zero fields.
    pub fn characteristic(self) -> u64 {
        match self {
            FieldContext::C | FieldContext::Q | FieldContext::R | FieldContext::QSqrt(_) => 0,
            FieldContext::CharP(p) | FieldContext::CharPAtP(p) => p.get(),
        }
    }

    pub fn is_char_zero(self) -> bool {
        self.characteristic() == 0
    }
}

/// The command-line flag form: `C`, `Q`, `R`, `Qsqrt:p`, `Fpbar:p`, `Fp-at-p:p`.
impl fmt::Display for FieldContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldContext::C => write!(f, "C"),
            FieldContext::Q => write!(f, "Q"),
            FieldContext::R => write!(f, "R"),
            FieldContext::QSqrt(p) => write!(f, "Qsqrt:{p}"),
            FieldContext::CharP(p) => write!(f, "Fpbar:{p}"),
            FieldContext::CharPAtP(p) => write!(f, "Fp-at-p:{p}"),
        }
    }
}

impl FromStr for FieldContext {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let unknown = || Error::UnknownField(s.to_string());
        let prime = |t: &str| -> Result<Prime> {
            let n: u64 = t.trim().parse().map_err(|_| unknown())?;
            Prime::new(n).map_err(|_| unknown())
        };
        match s.trim() {
            "C" => Ok(FieldContext::C),
            "Q" => Ok(FieldContext::Q),
            "R" => Ok(FieldContext::R),
            t => match t.split_once(':') {
                Some(("Qsqrt", p)) => FieldContext::quadratic(prime(p)?).map_err(|_| unknown()),
                Some(("Fpbar", p)) => Ok(FieldContext::CharP(prime(p)?)),
                Some(("Fp-at-p", p)) => Ok(FieldContext::CharPAtP(prime(p)?)),
                _ => Err(unknown()),
            },
        }
    }
}

/// A lower bound, optionally with an upper bound, on an essential dimension.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EdBound {
    pub lower: u64,
    pub upper: Option<u64>,
    /// Whether the bound assumes Ledet's conjecture.
    pub conditional: bool,
    /// `lower == upper` and unconditional.
    pub exact: bool,
    pub provenance: Vec<String>,
}

fn strings(prov: &[&str]) -> Vec<String> {
    prov.iter().map(|s| s.to_string()).collect()
}

impl EdBound {
    pub fn exact(value: u64, prov: &[&str]) -> Self {
        EdBound {
            lower: value,
            upper: Some(value),
            conditional: false,
            exact: true,
            provenance: strings(prov),
        }
    }

    pub fn at_least(lower: u64, conditional: bool, prov: &[&str]) -> Self {
        EdBound {
            lower,
            upper: None,
            conditional,
            exact: false,
            provenance: strings(prov),
        }
    }

    pub fn between(lower: u64, upper: u64, prov: &[&str]) -> Self {
        debug_assert!(lower <= upper);
        EdBound {
            lower,
            upper: Some(upper),
            conditional: false,
            exact: lower == upper,
            provenance: strings(prov),
        }
    }

    /// The value `n` asserted by Ledet's conjecture, unconditional for `n <= 2`.
    pub fn ledet_value(n: u64, prov: &[&str]) -> Self {
        EdBound {
            lower: n,
            upper: Some(n),
            conditional: n > 2,
            exact: n <= 2,
            provenance: strings(prov),
        }
    }
}

impl fmt::Display for EdBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.upper {
            Some(u) if u == self.lower => write!(f, "= {u}")?,
            Some(u) => write!(f, "in [{}, {u}]", self.lower)?,
            None => write!(f, ">= {}", self.lower)?,
        }
        if self.exact {
            write!(f, " (exact)")
        } else if self.conditional {
            write!(f, " (conditional on Ledet's conjecture)")
        } else {
            write!(f, " (unconditional)")
        }
    }
}

/// `ed^loc(PSL_2(p^r))`: `r` for even `q`, `max(2, r)` for odd `q`.
pub fn ed_local_psl2(p: Prime, r: u32) -> EdBound {
    let value = if p.get() == 2 { r } else { r.max(2) };
    EdBound::exact(u64::from(value), &[provenance::ED_LOC_PSL2])
}

/// `ed(G; p)` over a field of characteristic `p`.
pub fn ed_char_p_at_p(g: &GroupDescriptor, p: Prime) -> EdBound {
    EdBound::exact(u64::from(g.order().is_multiple_of(p.get())), &[provenance::ED_AT_P])
}

/// The prime and exponent realizing the Ledet-conditional bound.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LedetBound {
    #[serde(serialize_with = "serialize_opt_prime")]
    pub prime: Option<Prime>,
    pub s: u32,
    pub bound: EdBound,
}

fn serialize_opt_prime<S: Serializer>(p: &Option<Prime>, s: S) -> std::result::Result<S::Ok, S::Error> {
    p.map(Prime::get).serialize(s)
}

/// Maximizes `s` over primes `l | |G|` at which `G` is weakly tame and has an
/// element of order `l^s`; ties go to the smallest `l`.
pub fn ledet_conditional_bound(g: &GroupDescriptor, ctx: FieldContext) -> Result<LedetBound> {
    if !ctx.is_char_zero() {
        return Err(Error::NotCharacteristicZero(ctx.to_string()));
    }
    let mut best: Option<(Prime, u32)> = None;
    for l in prime_divisors(g.order()) {
        if !g.structural_weakly_tame(l)? {
            continue;
        }
        let s = g.max_element_order(l)?;
        if best.is_none_or(|(_, b)| s > b) {
            best = Some((l, s));
        }
    }
    Ok(match best {
        Some((l, s)) => {
            let prov: &[&str] = if s <= 2 {
                &[provenance::LEDET, provenance::LEDET_KNOWN]
            } else {
                &[provenance::LEDET]
            };
            LedetBound {
                prime: Some(l),
                s,
                bound: EdBound::at_least(u64::from(s), s > 2, prov),
            }
        }
        None => LedetBound {
            prime: None,
            s: 0,
            bound: EdBound::at_least(0, false, &[provenance::NO_WEAKLY_TAME_PRIME]),
        },
    })
}

/// Largest `s` with `2 l^s | q^2 - 1`, for odd `q` and `l` not dividing `q`.
pub fn psl2_literal_condition(q: u64, l: Prime) -> Result<u32> {
    let (p, _) = prime_power(q)?;
    if p.get() == 2 || p == l {
        return Err(Error::VacuousCase { q, l: l.get() });
    }
    let v = padic_valuation(q - 1, l) + padic_valuation(q + 1, l);
    Ok(if l.get() == 2 { v - 1 } else { v })
}

/// Whether a conditional bound `s` for `PSL_2(p^r)` goes beyond what is
/// known unconditionally.
pub fn interesting_flag(_p: Prime, r: u32, s: u32) -> bool {
    s >= (r + 1).max(5)
}

/// Tabulated exact values and unconditional bounds.
pub fn known_values(g: &GroupDescriptor, ctx: FieldContext) -> Option<EdBound> {
    use provenance::*;
    let family = g.family();
    match (family, ctx) {
        (Family::Cyclic { n: 4 }, FieldContext::R) => Some(EdBound::exact(2, &[C4_REALS])),
        (Family::Cyclic { n: 4 }, FieldContext::QSqrt(p)) => {
            let value = if p.get() % 4 == 1 { 1 } else { 2 };
            Some(EdBound::exact(value, &[C4_QUADRATIC]))
        }
        (_, FieldContext::C) if g.is_a5() => Some(EdBound::exact(2, &[A5_COMPLEX])),
        (_, FieldContext::CharP(p)) if p.get() == 2 && g.is_a5() => {
            Some(EdBound::exact(1, &[A5_CHAR_2]))
        }
        (Family::Cyclic { .. }, FieldContext::CharP(p)) => {
            let (l, n) = g.as_cyclic_prime_power()?;
            if l != p {
                return None;
            }
            let n = u64::from(n);
            Some(EdBound::between(n.min(2), n, &[CYCLIC_CHAR_P]))
        }
        (Family::Metacyclic { n, .. }, FieldContext::C) if (2..=3).contains(n) => {
            Some(EdBound::at_least(u64::from(*n), false, &[METACYCLIC_SMALL_N]))
        }
        _ => None,
    }
}

/// `ed^loc` where a closed form is in scope: `PSL_2` and the metacyclic
/// groups, over `C`.
pub fn ed_local(g: &GroupDescriptor, ctx: FieldContext) -> Option<EdBound> {
    if ctx != FieldContext::C {
        return None;
    }
    match g.family() {
        Family::Psl2 { p, r } => Some(ed_local_psl2(*p, *r)),
        Family::Metacyclic { .. } => Some(EdBound::exact(1, &[provenance::ED_LOC_METACYCLIC])),
        _ => None,
    }
}
