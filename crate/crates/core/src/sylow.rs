//! Sylow subgroups, p-cores, tameness predicates and Sylow classification.

use std::collections::BTreeSet;
use std::fmt;

use indexmap::IndexSet;
use serde::Serialize;

use crate::group::{closure, prime_power_exponent, ConcreteGroup};
use crate::nt::{padic_part, Characteristic, Prime};
use crate::perm::Permutation;

/// Structural shape of a Sylow subgroup.
///
/// Precedence when several shapes fit: the trivial group is reported as
/// elementary abelian of rank 0, a group of prime order as cyclic, and the
/// Klein four-group as elementary abelian rather than dihedral.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SylowClass {
    Cyclic { order: u64 },
    Dihedral { order: u64 },
    ElementaryAbelian { prime: u64, rank: u32 },
    Explicit { order: u64, witness: Vec<Permutation> },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum SylowTag {
    Cyclic,
    Dihedral,
    ElementaryAbelian,
    Explicit,
}

impl SylowClass {
    pub fn tag(&self) -> SylowTag {
        match self {
            SylowClass::Cyclic { .. } => SylowTag::Cyclic,
            SylowClass::Dihedral { .. } => SylowTag::Dihedral,
            SylowClass::ElementaryAbelian { .. } => SylowTag::ElementaryAbelian,
            SylowClass::Explicit { .. } => SylowTag::Explicit,
        }
    }

    pub fn order(&self) -> u64 {
        match self {
            SylowClass::Cyclic { order }
            | SylowClass::Dihedral { order }
            | SylowClass::Explicit { order, .. } => *order,
            SylowClass::ElementaryAbelian { prime, rank } => prime.pow(*rank),
        }
    }

    pub fn rank(&self) -> Option<u32> {
        match self {
            SylowClass::ElementaryAbelian { rank, .. } => Some(*rank),
            _ => None,
        }
    }

    /// Canonical class of a cyclic `l`-group of order `l^k`.
    pub fn cyclic(l: Prime, k: u32) -> SylowClass {
        match k {
            0 => SylowClass::ElementaryAbelian { prime: l.get(), rank: 0 },
            _ => SylowClass::Cyclic { order: l.get().pow(k) },
        }
    }

    /// Canonical class of `(C_l)^rank`.
    pub fn elementary_abelian(l: Prime, rank: u32) -> SylowClass {
        match rank {
            1 => SylowClass::Cyclic { order: l.get() },
            _ => SylowClass::ElementaryAbelian { prime: l.get(), rank },
        }
    }

    /// Canonical class of a dihedral 2-group of the given order (`>= 4`).
    pub fn dihedral(order: u64) -> SylowClass {
        match order {
            4 => SylowClass::ElementaryAbelian { prime: 2, rank: 2 },
            2 => SylowClass::Cyclic { order: 2 },
            _ => SylowClass::Dihedral { order },
        }
    }

    /// Same class, ignoring any witness set.
    pub fn same_shape(&self, other: &SylowClass) -> bool {
        self.tag() == other.tag() && self.order() == other.order()
    }
}

impl fmt::Display for SylowClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SylowClass::Cyclic { order } => write!(f, "cyclic C{order}"),
            SylowClass::Dihedral { order } => write!(f, "dihedral D{order}"),
            SylowClass::ElementaryAbelian { prime, rank } => {
                if *rank == 0 {
                    write!(f, "trivial")
                } else {
                    write!(f, "elementary abelian (C{prime})^{rank}")
                }
            }
            SylowClass::Explicit { order, .. } => write!(f, "explicit group of order {order}"),
        }
    }
}

struct PGroup {
    generators: Vec<Permutation>,
    elements: IndexSet<Permutation>,
}

impl ConcreteGroup {
    fn sylow_with_generators(&self, p: Prime) -> PGroup {
        let target = padic_part(self.order(), p) as usize;
        let orders = self.element_orders();
        let mut generators: Vec<Permutation> = Vec::new();
        let mut elements = IndexSet::from([self.identity()]);
        while elements.len() < target {
            // Any p-element normalizing P but outside it extends P to a
            // larger p-group; one always exists while |P| < target.
            let next = self
                .elements()
                .iter()
                .zip(orders)
                .filter(|&(_, &o)| o > 1 && prime_power_exponent(o, p.get()).is_some())
                .map(|(g, _)| g)
                .find(|g| {
                    !elements.contains(*g)
                        && generators.iter().all(|h| elements.contains(&g.conjugate(h)))
                })
                .expect("Sylow extension step always finds a normalizing p-element")
                .clone();
            generators.push(next);
            elements = closure(self.degree(), &generators, target)
                .expect("extension of a normalized p-subgroup is a p-subgroup");
        }
        PGroup { generators, elements }
    }

    /// A Sylow `p`-subgroup; `{id}` when `p` does not divide the order.
    pub fn sylow_subgroup(&self, p: Prime) -> BTreeSet<Permutation> {
        self.sylow_with_generators(p).elements.into_iter().collect()
    }

    /// The largest normal `p`-subgroup `O_p(G)`.
    ///
    /// Computed as the intersection of all conjugates of a Sylow
    /// `p`-subgroup `P`: an element lies in every conjugate exactly when its
    /// whole conjugacy class lies in `P`, so the intersection is the largest
    /// subset of `P` stable under conjugation by the generators.
    pub fn p_core(&self, p: Prime) -> BTreeSet<Permutation> {
        let sylow = self.sylow_with_generators(p);
        let mut core = sylow.elements;
        let inverses: Vec<Permutation> = self.generators().iter().map(Permutation::inverse).collect();
        loop {
            if core.len() == 1 {
                break;
            }
            let next: IndexSet<Permutation> = core
                .iter()
                .filter(|x| inverses.iter().all(|s| core.contains(&s.conjugate(x))))
                .cloned()
                .collect();
            if next.len() == core.len() {
                break;
            }
            core = next;
        }
        core.into_iter().collect()
    }

    /// True iff `p` is zero or `p` does not divide `|G|`.
    pub fn is_tame(&self, p: impl Into<Characteristic>) -> bool {
        match p.into() {
            Characteristic::Zero => true,
            Characteristic::Prime(p) => !self.order().is_multiple_of(p.get()),
        }
    }

    /// True iff `p` is zero or `G` has no non-trivial normal `p`-subgroup.
    pub fn is_weakly_tame(&self, p: impl Into<Characteristic>) -> bool {
        match p.into() {
            Characteristic::Zero => true,
            Characteristic::Prime(p) => self.is_tame(p) || self.p_core(p).len() == 1,
        }
    }

    pub fn classify_sylow(&self, p: Prime) -> SylowClass {
        let PGroup { generators, elements } = self.sylow_with_generators(p);
        let order = elements.len() as u64;
        if order == 1 {
            return SylowClass::ElementaryAbelian { prime: p.get(), rank: 0 };
        }
        if elements.iter().any(|g| g.order() == order) {
            return SylowClass::Cyclic { order };
        }
        let abelian = generators
            .iter()
            .enumerate()
            .all(|(i, a)| generators[i + 1..].iter().all(|b| a.after(b) == b.after(a)));
        if abelian && elements.iter().all(|g| g.order() <= p.get()) {
            let rank = prime_power_exponent(order, p.get()).expect("p-group order");
            return SylowClass::ElementaryAbelian { prime: p.get(), rank };
        }
        if p.get() == 2 && order >= 8 && is_dihedral(&elements, order) {
            return SylowClass::Dihedral { order };
        }
        let mut witness: Vec<Permutation> = elements.into_iter().collect();
        witness.sort_unstable();
        SylowClass::Explicit { order, witness }
    }
}

// A cyclic subgroup C of index 2 plus an involution t outside C inverting C.
fn is_dihedral(elements: &IndexSet<Permutation>, order: u64) -> bool {
    elements.iter().filter(|c| c.order() == order / 2).any(|c| {
        let cyclic: BTreeSet<Permutation> = (0..order / 2).map(|k| c.pow(k)).collect();
        let c_inv = c.inverse();
        elements.iter().any(|t| {
            !cyclic.contains(t) && t.order() == 2 && t.after(c).after(t) == c_inv
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{is_subgroup, DEFAULT_CAP};

    fn p(n: u64) -> Prime {
        Prime::new(n).unwrap()
    }

    fn cyc(degree: usize, cycles: &[&[u32]]) -> Permutation {
        let cycles: Vec<Vec<u32>> = cycles.iter().map(|c| c.to_vec()).collect();
        Permutation::from_cycles(degree, &cycles).unwrap()
    }

    fn group(degree: usize, gens: Vec<Permutation>) -> ConcreteGroup {
        ConcreteGroup::from_generators(degree, gens, DEFAULT_CAP).unwrap()
    }

    fn sym(n: usize) -> ConcreteGroup {
        let all: Vec<u32> = (0..n as u32).collect();
        group(n, vec![cyc(n, &[&[0, 1]]), cyc(n, &[&all])])
    }

    fn alt5() -> ConcreteGroup {
        group(5, vec![cyc(5, &[&[0, 1, 2]]), cyc(5, &[&[0, 1, 3]]), cyc(5, &[&[0, 1, 4]])])
    }

    // Literal intersection of g P g^-1 over every element g.
    fn brute_core(g: &ConcreteGroup, p: Prime) -> BTreeSet<Permutation> {
        let sylow = g.sylow_subgroup(p);
        sylow
            .iter()
            .filter(|x| g.elements().iter().all(|h| sylow.contains(&h.inverse().conjugate(x))))
            .cloned()
            .collect()
    }

    #[test]
    fn sylow_examples() {
        assert_eq!(sym(3).sylow_subgroup(p(3)).len(), 3);
        let a5 = alt5();
        assert_eq!(a5.order(), 60);
        assert_eq!(a5.sylow_subgroup(p(7)), BTreeSet::from([a5.identity()]));
        let s4 = sym(4);
        let p2 = s4.sylow_subgroup(p(2));
        assert_eq!(p2.len(), 8);
        assert!(is_subgroup(&p2));
    }

    #[test]
    fn p_core_examples() {
        let c4 = group(4, vec![cyc(4, &[&[0, 1, 2, 3]])]);
        assert_eq!(c4.p_core(p(2)).len(), 4);
        let s4 = sym(4);
        let core = s4.p_core(p(2));
        let v4: BTreeSet<Permutation> = [
            Permutation::identity(4),
            cyc(4, &[&[0, 1], &[2, 3]]),
            cyc(4, &[&[0, 2], &[1, 3]]),
            cyc(4, &[&[0, 3], &[1, 2]]),
        ]
        .into();
        assert_eq!(core, v4);
        assert_eq!(brute_core(&s4, p(2)), v4);
        assert_eq!(s4.p_core(p(3)).len(), 1);
    }

    #[test]
    fn tameness_examples() {
        let a5 = alt5();
        for l in [2, 3, 5] {
            assert!(a5.is_weakly_tame(p(l)));
            assert!(!a5.is_tame(p(l)));
        }
        assert!(a5.is_tame(p(7)));
        assert!(a5.is_tame(Characteristic::Zero));
        assert!(a5.is_weakly_tame(Characteristic::Zero));
        let c9 = group(9, vec![cyc(9, &[&[0, 1, 2, 3, 4, 5, 6, 7, 8]])]);
        assert!(!c9.is_weakly_tame(p(3)));
        assert!(c9.is_weakly_tame(Characteristic::Zero));
    }

    #[test]
    fn classification_of_small_sylows() {
        let s4 = sym(4);
        assert_eq!(s4.classify_sylow(p(2)), SylowClass::Dihedral { order: 8 });
        assert_eq!(s4.classify_sylow(p(3)), SylowClass::Cyclic { order: 3 });
        assert_eq!(s4.classify_sylow(p(5)), SylowClass::ElementaryAbelian { prime: 5, rank: 0 });
        let a4 = group(4, vec![cyc(4, &[&[0, 1, 2]]), cyc(4, &[&[0, 1], &[2, 3]])]);
        assert_eq!(a4.classify_sylow(p(2)), SylowClass::ElementaryAbelian { prime: 2, rank: 2 });
        let c8 = group(8, vec![cyc(8, &[&[0, 1, 2, 3, 4, 5, 6, 7]])]);
        assert_eq!(c8.classify_sylow(p(2)), SylowClass::Cyclic { order: 8 });
        // C4 x C2 is neither cyclic, elementary abelian nor dihedral
        let c4c2 = group(6, vec![cyc(6, &[&[0, 1, 2, 3]]), cyc(6, &[&[4, 5]])]);
        match c4c2.classify_sylow(p(2)) {
            SylowClass::Explicit { order, witness } => {
                assert_eq!(order, 8);
                assert_eq!(witness.len(), 8);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn quaternion_group_is_explicit() {
        // Q8 as its regular representation on 8 points
        let i = Permutation::from_images(vec![2, 3, 1, 0, 6, 7, 5, 4]).unwrap();
        let j = Permutation::from_images(vec![4, 5, 7, 6, 1, 0, 2, 3]).unwrap();
        let q8 = group(8, vec![i, j]);
        assert_eq!(q8.order(), 8);
        assert_eq!(q8.classify_sylow(p(2)).tag(), SylowTag::Explicit);
    }

    #[test]
    fn sylow_conjugate_count_is_one_mod_p() {
        let s4 = sym(4);
        for l in [2, 3] {
            let sylow = s4.sylow_subgroup(p(l));
            let conjugates: BTreeSet<BTreeSet<Permutation>> = s4
                .elements()
                .iter()
                .map(|g| sylow.iter().map(|x| g.conjugate(x)).collect())
                .collect();
            assert_eq!(conjugates.len() as u64 % l, 1);
        }
    }

    #[test]
    fn p_core_agrees_with_literal_intersection() {
        let groups = [sym(3), sym(4), sym(5), alt5()];
        for g in &groups {
            for l in [2, 3, 5] {
                assert_eq!(g.p_core(p(l)), brute_core(g, p(l)));
            }
        }
    }
}
