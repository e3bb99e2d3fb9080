//! Permutations of `{0..degree-1}`.

use std::fmt;
use std::hash::{Hash, Hasher};

use crate::error::{Error, Result};

/// A bijection of `{0..degree-1}`; `images[i]` is the image of point `i`.
///
/// Ordering is lexicographic on the image sequence.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

// Hashing a prefix is enough to spread the elements of the groups this crate
// enumerates; equality still compares the full image sequence.
const HASH_PREFIX: usize = 16;

impl Hash for Permutation {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.images.len().hash(state);
        self.images[..self.images.len().min(HASH_PREFIX)].hash(state);
    }
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        assert!(degree >= 1, "degree must be positive");
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        if images.is_empty() {
            return Err(Error::InvalidPermutation("degree must be positive".into()));
        }
        let mut seen = vec![false; images.len()];
        for &x in &images {
            let slot = seen.get_mut(x as usize).ok_or_else(|| {
                Error::InvalidPermutation(format!("image {x} out of range"))
            })?;
            if *slot {
                return Err(Error::InvalidPermutation(format!("image {x} repeated")));
            }
            *slot = true;
        }
        Ok(Permutation { images })
    }

    /// Product of disjoint cycles on `degree` points.
    pub fn from_cycles(degree: usize, cycles: &[Vec<u32>]) -> Result<Self> {
        if degree == 0 {
            return Err(Error::InvalidPermutation("degree must be positive".into()));
        }
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut moved = vec![false; degree];
        for cycle in cycles {
            for (i, &a) in cycle.iter().enumerate() {
                let ai = a as usize;
                if ai >= degree {
                    return Err(Error::InvalidPermutation(format!(
                        "point {a} out of range for degree {degree}"
                    )));
                }
                if moved[ai] {
                    return Err(Error::InvalidPermutation(format!(
                        "point {a} appears twice"
                    )));
                }
                moved[ai] = true;
                images[ai] = cycle[(i + 1) % cycle.len()];
            }
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn apply(&self, point: u32) -> u32 {
        self.images[point as usize]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// `self ∘ other`: apply `other` first, then `self`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(self.after(other))
    }

    pub(crate) fn after(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: other
                .images
                .iter()
                .map(|&x| self.images[x as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u32; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x as usize] = i as u32;
        }
        Permutation { images }
    }

    /// `g h g^-1` with `g = self`.
    pub fn conjugate(&self, h: &Permutation) -> Permutation {
        // (g h g^-1)(g(i)) = g(h(i))
        let mut images = vec![0u32; self.degree()];
        for (i, &hi) in h.images.iter().enumerate() {
            images[self.images[i] as usize] = self.images[hi as usize];
        }
        Permutation { images }
    }

    pub fn pow(&self, mut e: u64) -> Permutation {
        let mut acc = Permutation::identity(self.degree());
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.after(&base);
            }
            base = base.after(&base);
            e >>= 1;
        }
        acc
    }

    /// Cycles of length at least two, each starting at its smallest point.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.images[start] as usize == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x as u32);
                x = self.images[x] as usize;
            }
            out.push(cycle);
        }
        out
    }

    /// Least `n >= 1` with `self^n = id`: the lcm of the cycle lengths.
    pub fn order(&self) -> u64 {
        let mut seen = vec![false; self.degree()];
        let mut acc = 1u64;
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut len = 0u64;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                len += 1;
                x = self.images[x] as usize;
            }
            acc = acc / crate::nt::gcd(acc, len) * len;
        }
        acc
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

/// Cycle notation; the identity prints as `()`.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            write!(f, "(")?;
            for (i, x) in c.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn cyc(degree: usize, cycles: &[&[u32]]) -> Permutation {
        let cycles: Vec<Vec<u32>> = cycles.iter().map(|c| c.to_vec()).collect();
        Permutation::from_cycles(degree, &cycles).unwrap()
    }

    #[test]
    fn transposition_squared_is_identity() {
        let t = cyc(3, &[&[1, 2]]);
        assert!(t.compose(&t).unwrap().is_identity());
    }

    #[test]
    fn identity_is_neutral() {
        let s = cyc(5, &[&[0, 3, 1], &[2, 4]]);
        assert_eq!(Permutation::identity(5).compose(&s).unwrap(), s);
        assert_eq!(s.compose(&Permutation::identity(5)).unwrap(), s);
    }

    #[test]
    fn hand_composition() {
        let p = Permutation::from_images(vec![1, 2, 0]).unwrap();
        let q = Permutation::from_images(vec![1, 0, 2]).unwrap();
        assert_eq!(p.compose(&q).unwrap().images(), &[2, 1, 0]);
    }

    #[test]
    fn degree_mismatch_is_an_error() {
        let e = Permutation::identity(3)
            .compose(&Permutation::identity(4))
            .unwrap_err();
        assert_eq!(e, Error::DegreeMismatch { left: 3, right: 4 });
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::from_images(vec![0, 0, 1]).is_err());
        assert!(Permutation::from_images(vec![0, 3, 1]).is_err());
        assert!(Permutation::from_images(vec![]).is_err());
        assert!(Permutation::from_cycles(3, &[vec![0, 1], vec![1, 2]]).is_err());
        assert!(Permutation::from_cycles(3, &[vec![0, 5]]).is_err());
    }

    #[test]
    fn element_orders() {
        assert_eq!(Permutation::identity(4).order(), 1);
        assert_eq!(cyc(5, &[&[0, 1], &[2, 3, 4]]).order(), 6);
        // x -> 4x on Z/19
        let images = (0..19u32).map(|x| (4 * x) % 19).collect();
        assert_eq!(Permutation::from_images(images).unwrap().order(), 9);
    }

    #[test]
    fn display_uses_cycle_notation() {
        assert_eq!(cyc(5, &[&[0, 1], &[2, 3, 4]]).to_string(), "(0 1)(2 3 4)");
        assert_eq!(Permutation::identity(3).to_string(), "()");
    }

    fn arb_perm() -> impl Strategy<Value = Permutation> {
        (1usize..12)
            .prop_flat_map(|n| Just((0..n as u32).collect::<Vec<_>>()).prop_shuffle())
            .prop_map(|v| Permutation::from_images(v).unwrap())
    }

    proptest! {
        #[test]
        fn inverse_cancels(p in arb_perm()) {
            prop_assert!(p.compose(&p.inverse()).unwrap().is_identity());
            prop_assert!(p.inverse().compose(&p).unwrap().is_identity());
        }

        #[test]
        fn order_annihilates(p in arb_perm()) {
            let n = p.order();
            prop_assert!(p.pow(n).is_identity());
            for k in 1..n {
                prop_assert!(!p.pow(k).is_identity());
            }
        }

        #[test]
        fn conjugate_matches_composition(g in arb_perm(), seed in any::<u64>()) {
            let n = g.degree() as u32;
            let mut images: Vec<u32> = (0..n).collect();
            images.rotate_left((seed % n as u64) as usize);
            let h = Permutation::from_images(images).unwrap();
            let direct = g.compose(&h).unwrap().compose(&g.inverse()).unwrap();
            prop_assert_eq!(g.conjugate(&h), direct);
        }

        #[test]
        fn cycles_roundtrip(p in arb_perm()) {
            prop_assert_eq!(Permutation::from_cycles(p.degree(), &p.cycles()).unwrap(), p);
        }
    }
}
