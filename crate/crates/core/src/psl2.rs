//! `PSL_2(q)` acting on the projective line `P^1(F_q)`.

use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldGF};
use crate::group::ConcreteGroup;
use crate::nt::prime_power;
use crate::perm::Permutation;

/// `|PSL_2(q)|`: `(q-1)q(q+1)/2` for odd `q`, `(q-1)q(q+1)` for even `q`.
pub fn psl2_order(q: u64) -> Result<u64> {
    if q < 2 {
        return Err(Error::NotPrimePower(q));
    }
    let q = q as u128;
    let full = (q - 1) * q * (q + 1);
    let order = if q % 2 == 1 { full / 2 } else { full };
    u64::try_from(order).map_err(|_| Error::Overflow("|PSL2(q)|"))
}

/// A normalized point of `P^1(F_q)`: first nonzero coordinate is 1.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ProjPoint {
    /// `(1 : 0)`
    Infinity,
    /// `(a : 1)`
    Affine(FieldElement),
}

/// The projective line with points indexed `∞ = 0`, then `(a : 1)` at
/// `1 + index(a)`.
pub struct ProjectiveLine {
    field: FieldGF,
}

impl ProjectiveLine {
    pub fn new(field: FieldGF) -> Self {
        ProjectiveLine { field }
    }

    pub fn field(&self) -> &FieldGF {
        &self.field
    }

    pub fn len(&self) -> usize {
        self.field.order() as usize + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn points(&self) -> Vec<ProjPoint> {
        std::iter::once(ProjPoint::Infinity)
            .chain(self.field.elements().map(ProjPoint::Affine))
            .collect()
    }

    pub fn index_of(&self, point: &ProjPoint) -> u32 {
        match point {
            ProjPoint::Infinity => 0,
            ProjPoint::Affine(a) => 1 + self.field.index_of(a) as u32,
        }
    }

    fn normalize(&self, x: FieldElement, y: FieldElement) -> ProjPoint {
        if self.field.is_zero(&y) {
            assert!(!self.field.is_zero(&x), "(0 : 0) is not a projective point");
            ProjPoint::Infinity
        } else {
            let y_inv = self.field.inv(&y).expect("nonzero");
            ProjPoint::Affine(self.field.mul(&x, &y_inv))
        }
    }

    /// `(x : y) ↦ (a x + b y : c x + d y)` for the matrix `[[a, b], [c, d]]`.
    pub fn mobius(&self, m: &[FieldElement; 4], point: &ProjPoint) -> ProjPoint {
        let f = &self.field;
        let (x, y) = match point {
            ProjPoint::Infinity => (f.one(), f.zero()),
            ProjPoint::Affine(a) => (a.clone(), f.one()),
        };
        let nx = f.add(&f.mul(&m[0], &x), &f.mul(&m[1], &y));
        let ny = f.add(&f.mul(&m[2], &x), &f.mul(&m[3], &y));
        self.normalize(nx, ny)
    }

    /// The permutation of point indices induced by an invertible matrix.
    pub fn permutation_of(&self, m: &[FieldElement; 4]) -> Result<Permutation> {
        let f = &self.field;
        let det = f.sub(&f.mul(&m[0], &m[3]), &f.mul(&m[1], &m[2]));
        if f.is_zero(&det) {
            return Err(Error::InvalidParameter("singular matrix".into()));
        }
        let images = self
            .points()
            .iter()
            .map(|pt| self.index_of(&self.mobius(m, pt)))
            .collect();
        Permutation::from_images(images)
    }
}

/// Generators of `SL_2(F_q)`: the elementary matrices `[[1,1],[0,1]]`,
/// `[[0,-1],[1,0]]` and the torus element `diag(w, w^-1)` for a primitive `w`.
///
/// The first two only generate `SL_2(F_p)`; conjugating `[[1,1],[0,1]]` by the
/// torus element spans every upper unipotent matrix over `F_q`.
pub fn sl2_generators(field: &FieldGF) -> [[FieldElement; 4]; 3] {
    let zero = field.zero();
    let one = field.one();
    let w = field.primitive_element();
    let w_inv = field.inv(&w).expect("primitive element is nonzero");
    [
        [one.clone(), one.clone(), zero.clone(), one.clone()],
        [zero.clone(), field.neg(&one), one, zero.clone()],
        [w, zero.clone(), zero, w_inv],
    ]
}

/// `PSL_2(q)` as a permutation group of degree `q + 1`.
pub fn psl2_permutation_group(q: u64, cap: u64) -> Result<ConcreteGroup> {
    let (p, r) = prime_power(q)?;
    let expected = psl2_order(q)?;
    if expected > cap {
        return Err(Error::TooLarge { cap });
    }
    let field = FieldGF::new(p.get(), r)?;
    let line = ProjectiveLine::new(field);
    let generators = sl2_generators(line.field())
        .iter()
        .map(|m| line.permutation_of(m))
        .collect::<Result<Vec<_>>>()?;
    let group = ConcreteGroup::from_generators(line.len(), generators, cap)?;
    if group.order() != expected {
        return Err(Error::Internal(format!(
            "PSL2({q}) enumerated to order {} instead of {expected}",
            group.order()
        )));
    }
    Ok(group)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::DEFAULT_CAP;

    #[test]
    fn closed_form_orders() {
        assert_eq!(psl2_order(5).unwrap(), 60);
        assert_eq!(psl2_order(4).unwrap(), 60);
        assert_eq!(psl2_order(7).unwrap(), 168);
        assert_eq!(psl2_order(8).unwrap(), 504);
        assert_eq!(psl2_order(961).unwrap(), 443_751_360);
    }

    #[test]
    fn enumerated_orders() {
        for (q, order, degree) in [(2, 6, 3), (3, 12, 4), (4, 60, 5), (5, 60, 6), (7, 168, 8), (8, 504, 9), (9, 360, 10)] {
            let g = psl2_permutation_group(q, DEFAULT_CAP).unwrap();
            assert_eq!(g.order(), order, "q = {q}");
            assert_eq!(g.degree(), degree);
        }
    }

    #[test]
    fn too_large_for_cap() {
        assert_eq!(
            psl2_permutation_group(961, DEFAULT_CAP).unwrap_err(),
            Error::TooLarge { cap: DEFAULT_CAP }
        );
        assert!(matches!(psl2_permutation_group(12, DEFAULT_CAP), Err(Error::NotPrimePower(12))));
    }

    #[test]
    fn line_has_q_plus_one_points() {
        let line = ProjectiveLine::new(FieldGF::new(3, 2).unwrap());
        let pts = line.points();
        assert_eq!(pts.len(), 10);
        assert_eq!(pts[0], ProjPoint::Infinity);
        for (i, pt) in pts.iter().enumerate() {
            assert_eq!(line.index_of(pt) as usize, i);
        }
    }

    // Only +-1 acts trivially on P^1, so PSL2 acts faithfully.
    #[test]
    fn action_is_faithful() {
        for q in [4u64, 5, 7, 9] {
            let (p, r) = prime_power(q).unwrap();
            let line = ProjectiveLine::new(FieldGF::new(p.get(), r).unwrap());
            let f = line.field();
            let els: Vec<FieldElement> = f.elements().collect();
            let mut trivial = 0;
            let mut sl2 = 0;
            for a in &els {
                for b in &els {
                    for c in &els {
                        for d in &els {
                            let det = f.sub(&f.mul(a, d), &f.mul(b, c));
                            if det != f.one() {
                                continue;
                            }
                            sl2 += 1;
                            let m = [a.clone(), b.clone(), c.clone(), d.clone()];
                            if line.permutation_of(&m).unwrap().is_identity() {
                                trivial += 1;
                            }
                        }
                    }
                }
            }
            assert_eq!(sl2, q * (q * q - 1));
            assert_eq!(trivial, if q % 2 == 0 { 1 } else { 2 });
        }
    }
}
