//! Independent cross-check for [`ConcreteGroup::p_core`].
//!
//! Here `O_p(G)` is rebuilt as the subgroup generated by every `p`-element
//! whose normal closure is a `p`-group. It shares no code path with the
//! Sylow-intersection computation beyond subgroup closure.

use std::collections::BTreeSet;

use crate::group::{closure, prime_power_exponent, ConcreteGroup};
use crate::nt::{padic_part, Prime};
use crate::perm::Permutation;

pub fn p_core_by_normal_closure(group: &ConcreteGroup, p: Prime) -> BTreeSet<Permutation> {
    let limit = padic_part(group.order(), p) as usize;
    let mut generators: Vec<Permutation> = Vec::new();
    let mut core: BTreeSet<Permutation> = BTreeSet::from([group.identity()]);
    for (g, &o) in group.elements().iter().zip(group.element_orders()) {
        if o == 1 || prime_power_exponent(o, p.get()).is_none() || core.contains(g) {
            continue;
        }
        // A p-subgroup never has more than |G|_p elements.
        let Some(nc) = group.normal_closure_bounded(std::slice::from_ref(g), limit) else {
            continue;
        };
        if prime_power_exponent(nc.len() as u64, p.get()).is_none() {
            continue;
        }
        generators.push(g.clone());
        core = closure(group.degree(), &generators, limit)
            .expect("product of normal p-subgroups is a p-subgroup")
            .into_iter()
            .collect();
    }
    core
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::DEFAULT_CAP;

    fn p(n: u64) -> Prime {
        Prime::new(n).unwrap()
    }

    #[test]
    fn agrees_on_symmetric_groups() {
        for n in 2..=5usize {
            let all: Vec<u32> = (0..n as u32).collect();
            let g = ConcreteGroup::from_generators(
                n,
                vec![
                    Permutation::from_cycles(n, &[vec![0, 1]]).unwrap(),
                    Permutation::from_cycles(n, &[all]).unwrap(),
                ],
                DEFAULT_CAP,
            )
            .unwrap();
            for l in [2, 3, 5, 7] {
                assert_eq!(p_core_by_normal_closure(&g, p(l)), g.p_core(p(l)), "S{n} at {l}");
            }
        }
    }
}
