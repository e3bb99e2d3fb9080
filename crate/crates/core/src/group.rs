//! Enumerated permutation groups.

use std::collections::BTreeSet;
use std::sync::OnceLock;

use indexmap::IndexSet;

use crate::error::{Error, Result};
use crate::nt::Prime;
use crate::perm::Permutation;

/// Default bound on the number of elements an enumeration may produce.
pub const DEFAULT_CAP: u64 = 2_000_000;

/// A finite permutation group with its complete element list.
///
/// Elements are kept in lexicographic order of their image sequences, so
/// every derived report is deterministic.
#[derive(Debug)]
pub struct ConcreteGroup {
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
    orders: OnceLock<Vec<u64>>,
}

impl Clone for ConcreteGroup {
    fn clone(&self) -> Self {
        ConcreteGroup {
            degree: self.degree,
            generators: self.generators.clone(),
            elements: self.elements.clone(),
            orders: OnceLock::new(),
        }
    }
}

/// Breadth-first closure of `{id} ∪ generators` under left multiplication by
/// the generators. Returns `None` once more than `limit` elements appear.
pub(crate) fn closure(
    degree: usize,
    generators: &[Permutation],
    limit: usize,
) -> Option<IndexSet<Permutation>> {
    let mut set = IndexSet::new();
    set.insert(Permutation::identity(degree));
    let mut i = 0;
    while i < set.len() {
        let x = set[i].clone();
        for g in generators {
            if set.insert(g.after(&x)) && set.len() > limit {
                return None;
            }
        }
        i += 1;
    }
    Some(set)
}

fn check_degrees(degree: usize, generators: &[Permutation]) -> Result<()> {
    if degree == 0 {
        return Err(Error::InvalidPermutation("degree must be positive".into()));
    }
    for g in generators {
        if g.degree() != degree {
            return Err(Error::DegreeMismatch {
                left: degree,
                right: g.degree(),
            });
        }
    }
    Ok(())
}

fn cap_to_limit(cap: u64) -> usize {
    usize::try_from(cap).unwrap_or(usize::MAX)
}

/// All elements of `⟨generators⟩`, sorted, or an error if there are more
/// than `cap` of them.
pub fn generate_elements(
    degree: usize,
    generators: &[Permutation],
    cap: u64,
) -> Result<Vec<Permutation>> {
    check_degrees(degree, generators)?;
    if cap == 0 {
        return Err(Error::InvalidParameter("cap must be at least 1".into()));
    }
    let set = closure(degree, generators, cap_to_limit(cap)).ok_or(Error::TooLarge { cap })?;
    let mut elements: Vec<Permutation> = set.into_iter().collect();
    elements.sort_unstable();
    Ok(elements)
}

impl ConcreteGroup {
    pub fn from_generators(degree: usize, generators: Vec<Permutation>, cap: u64) -> Result<Self> {
        let elements = generate_elements(degree, &generators, cap)?;
        Ok(ConcreteGroup {
            degree,
            generators,
            elements,
            orders: OnceLock::new(),
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// Elements in lexicographic order.
    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn order(&self) -> u64 {
        self.elements.len() as u64
    }

    pub fn identity(&self) -> Permutation {
        Permutation::identity(self.degree)
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        g.degree() == self.degree && self.elements.binary_search(g).is_ok()
    }

    /// Element orders, aligned with [`ConcreteGroup::elements`].
    pub fn element_orders(&self) -> &[u64] {
        self.orders
            .get_or_init(|| self.elements.iter().map(Permutation::order).collect())
    }

    /// Largest `n` such that some element has order exactly `p^n`.
    pub fn max_prime_power_element_order(&self, p: Prime) -> u32 {
        self.element_orders()
            .iter()
            .filter_map(|&o| prime_power_exponent(o, p.get()))
            .max()
            .unwrap_or(0)
    }

    /// Smallest normal subgroup containing `seed`.
    pub fn normal_closure(&self, seed: &[Permutation]) -> Result<BTreeSet<Permutation>> {
        if seed.iter().any(|g| !self.contains(g)) {
            return Err(Error::NotInGroup);
        }
        let set = self
            .normal_closure_bounded(seed, self.elements.len())
            .ok_or_else(|| Error::Internal("normal closure larger than the group".into()))?;
        Ok(set.into_iter().collect())
    }

    /// Normal closure, abandoned once it exceeds `limit` elements.
    pub(crate) fn normal_closure_bounded(
        &self,
        seed: &[Permutation],
        limit: usize,
    ) -> Option<IndexSet<Permutation>> {
        let mut gens: Vec<Permutation> = seed.iter().filter(|g| !g.is_identity()).cloned().collect();
        let mut set = closure(self.degree, &gens, limit)?;
        let mut i = 0;
        // A subgroup is normal once every conjugate of each of its generators
        // by each group generator lies inside it.
        while i < gens.len() {
            let h = gens[i].clone();
            for s in &self.generators {
                let c = s.conjugate(&h);
                if !set.contains(&c) {
                    gens.push(c);
                    set = closure(self.degree, &gens, limit)?;
                }
            }
            i += 1;
        }
        Some(set)
    }

    /// True when `subset` is closed under conjugation by the group.
    pub fn is_normal(&self, subset: &BTreeSet<Permutation>) -> bool {
        subset
            .iter()
            .all(|h| self.generators.iter().all(|s| subset.contains(&s.conjugate(h))))
    }
}

/// `Some(k)` when `n = p^k`.
pub(crate) fn prime_power_exponent(mut n: u64, p: u64) -> Option<u32> {
    let mut k = 0;
    while n.is_multiple_of(p) {
        n /= p;
        k += 1;
    }
    (n == 1).then_some(k)
}

/// True when `subset` is closed under composition and inverses.
pub fn is_subgroup(subset: &BTreeSet<Permutation>) -> bool {
    let Some(first) = subset.first() else {
        return false;
    };
    subset.contains(&Permutation::identity(first.degree()))
        && subset.iter().all(|a| subset.contains(&a.inverse()))
        && subset
            .iter()
            .all(|a| subset.iter().all(|b| subset.contains(&a.after(b))))
}
