//! Enumerations of small family instances used for oracle sweeps.

use crate::error::Result;
use crate::families::{
    make_alternating, make_cyclic, make_dihedral, make_elementary_abelian, make_metacyclic,
    make_permutation_group, make_psl2, GroupDescriptor, MAX_ALTERNATING_DEGREE,
};
use crate::nt::{is_prime, prime_power};
use crate::perm::Permutation;
use crate::psl2::psl2_order;

/// Orders at or below this bound are swept for the abelian and dihedral
/// families, whose concrete realizations have degree close to the order.
pub const SMALL_FAMILY_ORDER: u64 = 512;

/// Default order bound for the oracle sweeps.
pub const SWEEP_ORDER: u64 = 5000;

/// Every metacyclic `(p, n, q)` with `q * p^n <= max_order`.
pub fn metacyclic_instances(max_order: u64) -> Vec<GroupDescriptor> {
    let mut out = Vec::new();
    for q in (3..=max_order / 2).filter(|&q| is_prime(q)) {
        // p^n runs over the prime-power divisors of q - 1
        for k in (2..q).filter(|&k| (q - 1) % k == 0 && q * k <= max_order) {
            if let Ok((p, n)) = prime_power(k) {
                out.push(make_metacyclic(p.get(), n, q).expect("p^n divides q - 1"));
            }
        }
    }
    out
}

/// Every `PSL_2(q)` of order at most `max_order`.
pub fn psl2_instances(max_order: u64) -> Vec<GroupDescriptor> {
    // (q-1)q(q+1)/2 bounds the order from below for every q
    (2u64..)
        .take_while(|&q| (q - 1) * q * (q + 1) / 2 <= max_order)
        .filter(|&q| prime_power(q).is_ok() && psl2_order(q).unwrap() <= max_order)
        .map(|q| make_psl2(q).expect("prime power"))
        .collect()
}

pub fn alternating_instances(max_order: u64) -> Vec<GroupDescriptor> {
    (1..=MAX_ALTERNATING_DEGREE)
        .map(|n| make_alternating(n).expect("in range"))
        .filter(|g| g.order() <= max_order)
        .collect()
}

/// Cyclic, dihedral and elementary abelian groups of order at most `max_order`.
pub fn abelian_and_dihedral_instances(max_order: u64) -> Vec<GroupDescriptor> {
    let mut out = Vec::new();
    for n in 1..=max_order {
        out.push(make_cyclic(n).expect("positive"));
    }
    for m in 1..=max_order / 2 {
        out.push(make_dihedral(m).expect("positive"));
    }
    for k in 2..=max_order {
        if let Ok((p, r)) = prime_power(k) {
            if r >= 2 {
                out.push(make_elementary_abelian(p.get(), r).expect("prime"));
            }
        }
    }
    out
}

/// All family instances of order at most `max_order`, with the cyclic,
/// dihedral and elementary abelian families cut off at `small_order`.
pub fn family_instances(max_order: u64, small_order: u64) -> Vec<GroupDescriptor> {
    let mut out = abelian_and_dihedral_instances(small_order.min(max_order));
    out.extend(alternating_instances(max_order));
    out.extend(metacyclic_instances(max_order));
    out.extend(psl2_instances(max_order));
    out
}

/// Symmetric groups and the quaternion group, as explicit generators.
pub fn extra_permutation_groups(cap: u64) -> Result<Vec<GroupDescriptor>> {
    let mut out = Vec::new();
    for n in 3..=5usize {
        let all: Vec<u32> = (0..n as u32).collect();
        out.push(make_permutation_group(
            n,
            vec![
                Permutation::from_cycles(n, &[vec![0, 1]])?,
                Permutation::from_cycles(n, &[all])?,
            ],
            cap,
        )?);
    }
    // Q8 in its regular representation: i = (0 1 2 3)(4 5 6 7), j = (0 4 2 6)(1 7 3 5).
    out.push(make_permutation_group(
        8,
        vec![
            Permutation::from_cycles(8, &[vec![0, 1, 2, 3], vec![4, 5, 6, 7]])?,
            Permutation::from_cycles(8, &[vec![0, 4, 2, 6], vec![1, 7, 3, 5]])?,
        ],
        cap,
    )?);
    Ok(out)
}
