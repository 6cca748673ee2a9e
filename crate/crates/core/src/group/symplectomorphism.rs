use std::fmt;

use rand::RngExt;
use serde::Serialize;

use super::{ext_gcd, gcd, GroupElement, PointSet};
use crate::error::{Error, Result};

/// A 2x2 matrix over Z_n with determinant 1, acting on column vectors:
/// rows `(a b)` and `(c d)`, so `x` maps to `(a x1 + b x2, c x1 + d x2)`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct Symplectomorphism {
    a: u32,
    b: u32,
    c: u32,
    d: u32,
    n: u32,
}

impl Symplectomorphism {
    /// Builds the matrix with rows `(a b)`, `(c d)` reduced mod `n`,
    /// rejecting it unless the determinant is 1 mod n.
    pub fn new(n: u32, a: i64, b: i64, c: i64, d: i64) -> Result<Self> {
        assert!(n >= 2, "modulus must be at least 2, got {n}");
        let m = i64::from(n);
        let (a, b, c, d) = (
            a.rem_euclid(m) as u32,
            b.rem_euclid(m) as u32,
            c.rem_euclid(m) as u32,
            d.rem_euclid(m) as u32,
        );
        let det = det_mod(n, a, b, c, d);
        if det != 1 {
            return Err(Error::NotSymplectic { det, n });
        }
        Ok(Symplectomorphism { a, b, c, d, n })
    }

    pub fn identity(n: u32) -> Self {
        Symplectomorphism::new(n, 1, 0, 0, 1).expect("identity")
    }

    /// The 90 degree counterclockwise rotation `(s1, s2) -> (-s2, s1)`.
    pub fn rotation(n: u32) -> Self {
        Symplectomorphism::new(n, 0, -1, 1, 0).expect("rotation")
    }

    pub fn modulus(self) -> u32 {
        self.n
    }

    pub fn entries(self) -> (u32, u32, u32, u32) {
        (self.a, self.b, self.c, self.d)
    }

    pub fn apply(self, x: GroupElement) -> GroupElement {
        assert_eq!(self.n, x.modulus(), "modulus mismatch in apply");
        let n = u64::from(self.n);
        let y1 = (u64::from(self.a) * u64::from(x.x1()) + u64::from(self.b) * u64::from(x.x2())) % n;
        let y2 = (u64::from(self.c) * u64::from(x.x1()) + u64::from(self.d) * u64::from(x.x2())) % n;
        GroupElement::new(self.n, y1 as i64, y2 as i64)
    }

    /// Image of a whole set; a symplectomorphism is invertible, so the
    /// cardinality is preserved.
    pub fn apply_set(self, set: &PointSet) -> PointSet {
        assert_eq!(self.n, set.modulus(), "modulus mismatch in apply_set");
        let image = PointSet::from_elements(self.n, set.iter().map(|&x| self.apply(x)))
            .expect("image set");
        debug_assert_eq!(image.len(), set.len());
        image
    }

    pub fn inverse(self) -> Self {
        let m = i64::from(self.n);
        Symplectomorphism::new(
            self.n,
            i64::from(self.d),
            m - i64::from(self.b),
            m - i64::from(self.c),
            i64::from(self.a),
        )
        .expect("inverse of a determinant-1 matrix")
    }

    /// Uniform-ish random symplectomorphism by rejection sampling.
    pub fn random<R: RngExt>(n: u32, rng: &mut R) -> Self {
        loop {
            let a = rng.random_range(0..n);
            let b = rng.random_range(0..n);
            let c = rng.random_range(0..n);
            let d = rng.random_range(0..n);
            if det_mod(n, a, b, c, d) == 1 {
                return Symplectomorphism { a, b, c, d, n };
            }
        }
    }

    /// A symplectomorphism carrying `x` to the canonical position `(0, d)`
    /// where `d = gcd(n, x1, x2)`, together with that `d`.
    ///
    /// Write `x = d * u` with `u` primitive; any `w` with
    /// `u1*w2 - u2*w1 = 1 (mod n)` yields the matrix with rows
    /// `(u2, -u1)` and `(w2, -w1)`, which has determinant 1 and sends
    /// `u` to `(0, 1)`.
    pub fn canonicalizing(x: GroupElement) -> (Self, u32) {
        let n = x.modulus();
        let d = gcd(n, gcd(x.x1(), x.x2()));
        let u = primitive_part(x, d);
        let (w1, w2) = unimodular_partner(n, u);
        let m = Symplectomorphism::new(
            n,
            i64::from(u.x2()),
            -i64::from(u.x1()),
            i64::from(w2),
            -i64::from(w1),
        )
        .expect("canonicalizing matrix has determinant 1");
        debug_assert_eq!(m.apply(x), GroupElement::new(n, 0, i64::from(d % n)));
        (m, d)
    }
}

impl fmt::Display for Symplectomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]] mod {}", self.a, self.b, self.c, self.d, self.n)
    }
}

fn det_mod(n: u32, a: u32, b: u32, c: u32, d: u32) -> u32 {
    let m = u64::from(n);
    let pos = u64::from(a) * u64::from(d) % m;
    let neg = u64::from(b) * u64::from(c) % m;
    ((pos + m - neg) % m) as u32
}

/// A primitive `u` with `d * u = x (mod n)`: lift `(x1/d, x2/d)` by multiples
/// of `n/d` until the content is coprime to `n`. The search space has at most
/// `d^2` candidates and always contains a primitive lift.
fn primitive_part(x: GroupElement, d: u32) -> GroupElement {
    let n = x.modulus();
    let base1 = x.x1() / d;
    let base2 = x.x2() / d;
    let step = n / d;
    for s in 0..d {
        for t in 0..d {
            let u1 = (base1 + s * step) % n;
            let u2 = (base2 + t * step) % n;
            if gcd(n, gcd(u1, u2)) == 1 {
                return GroupElement::new(n, i64::from(u1), i64::from(u2));
            }
        }
    }
    unreachable!("every element of content d has a primitive lift");
}

/// Solves `u1*w2 - u2*w1 = 1 (mod n)` for a primitive `u` via the extended
/// gcd: with `s*u1 + t*u2 = g` and `g` invertible mod n, take
/// `w2 = s/g, w1 = -t/g`.
fn unimodular_partner(n: u32, u: GroupElement) -> (u32, u32) {
    let (g, s, t) = ext_gcd(i64::from(u.x1()), i64::from(u.x2()));
    let g = g.rem_euclid(i64::from(n)) as u32;
    let g_inv = mod_inverse(g, n).expect("content of a primitive vector is invertible");
    let m = i64::from(n);
    let w2 = (s.rem_euclid(m) * i64::from(g_inv)).rem_euclid(m) as u32;
    let w1 = (-t.rem_euclid(m) * i64::from(g_inv)).rem_euclid(m) as u32;
    (w1, w2)
}

fn mod_inverse(a: u32, n: u32) -> Option<u32> {
    let (g, s, _) = ext_gcd(i64::from(a), i64::from(n));
    if g.abs() != 1 {
        return None;
    }
    Some((s * g.signum()).rem_euclid(i64::from(n)) as u32)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{symplectic_form, sym_residue};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn el(n: u32, x1: i64, x2: i64) -> GroupElement {
        GroupElement::new(n, x1, x2)
    }

    #[test]
    fn rejects_non_unit_determinant() {
        assert!(matches!(
            Symplectomorphism::new(4, 2, 0, 0, 2),
            Err(Error::NotSymplectic { .. })
        ));
    }

    #[test]
    fn identity_fixes_sets() {
        let a = PointSet::from_pairs(4, [(0, 0), (3, 0), (0, 3), (3, 3)]);
        assert_eq!(Symplectomorphism::identity(4).apply_set(&a), a);
    }

    #[test]
    fn shear_moves_a_point() {
        let m = Symplectomorphism::new(4, 1, 0, 1, 1).unwrap();
        let image = m.apply_set(&PointSet::from_pairs(4, [(1, 0)]));
        assert_eq!(image, PointSet::from_pairs(4, [(1, 1)]));
    }

    #[test]
    fn rotation_swaps_axes() {
        let m = Symplectomorphism::new(4, 0, 1, -1, 0).unwrap();
        let axis = PointSet::from_pairs(4, (0..4).map(|k| (k, 0)));
        let image = m.apply_set(&axis);
        assert_eq!(image, PointSet::from_pairs(4, (0..4).map(|k| (0, k))));
    }

    #[test]
    fn inverse_composes_to_identity() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in [2u32, 3, 4, 6, 9, 12] {
            for _ in 0..20 {
                let m = Symplectomorphism::random(n, &mut rng);
                let inv = m.inverse();
                for x1 in 0..n {
                    for x2 in 0..n {
                        let x = el(n, i64::from(x1), i64::from(x2));
                        assert_eq!(inv.apply(m.apply(x)), x);
                    }
                }
            }
        }
    }

    #[test]
    fn random_matrices_preserve_the_form() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for n in [2u32, 4, 5, 9, 12] {
            for _ in 0..50 {
                let m = Symplectomorphism::random(n, &mut rng);
                let x = el(n, rng.random_range(0..i64::from(n)), rng.random_range(0..i64::from(n)));
                let y = el(n, rng.random_range(0..i64::from(n)), rng.random_range(0..i64::from(n)));
                assert_eq!(
                    symplectic_form(m.apply(x), m.apply(y)).unwrap(),
                    symplectic_form(x, y).unwrap()
                );
            }
        }
    }

    #[test]
    fn canonicalizing_hits_the_target() {
        for n in [2u32, 4, 8, 9, 12] {
            for x1 in 0..n {
                for x2 in 0..n {
                    let x = el(n, i64::from(x1), i64::from(x2));
                    let (m, d) = Symplectomorphism::canonicalizing(x);
                    assert_eq!(d, super::gcd(n, super::gcd(x1, x2)));
                    assert_eq!(m.apply(x), el(n, 0, i64::from(d % n)), "n={n}, x={x}");
                    // still a symplectomorphism
                    let (a, b, c, dd) = m.entries();
                    assert_eq!(det_mod(n, a, b, c, dd), 1);
                }
            }
        }
    }

    #[test]
    fn canonicalizing_keeps_pairings() {
        let x = el(12, 4, 6);
        let (m, _) = Symplectomorphism::canonicalizing(x);
        for y1 in 0..12 {
            for y2 in 0..12 {
                let y = el(12, y1, y2);
                assert_eq!(sym_residue(m.apply(x), m.apply(y)), sym_residue(x, y));
            }
        }
    }
}
