//! Euclidean and symplectic Fourier transforms of indicator functions.
//!
//! Transforms of indicator functions are held exactly as [`CycloSum`]s: the
//! transform of `A` at `xi` contributes one root of unity per element of `A`,
//! with exponent given by the chosen pairing. Zero sets are computed by an
//! exhaustive scan over the group; at desk scale exactness beats speed.

use serde::Serialize;

use crate::cyclotomic::CycloSum;
use crate::error::{Error, Result};
use crate::group::{euc_residue, sym_residue, GroupElement, PointSet, Subgroup, Symplectomorphism};
use crate::report::{SearchConfig, VerificationReport, Witness};

/// Which pairing feeds the character: the Euclidean inner product or the
/// symplectic form.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Form {
    Euclidean,
    Symplectic,
}

impl Form {
    pub fn label(self) -> &'static str {
        match self {
            Form::Euclidean => "euclidean",
            Form::Symplectic => "symplectic",
        }
    }

    fn residue(self, a: GroupElement, xi: GroupElement) -> u32 {
        match self {
            Form::Euclidean => euc_residue(a, xi),
            Form::Symplectic => sym_residue(a, xi),
        }
    }
}

/// The zero set of a transform, tagged with the form it came from so the
/// rotation API cannot be misapplied.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct ZeroSet {
    form: Form,
    points: PointSet,
}

impl ZeroSet {
    pub fn form(&self) -> Form {
        self.form
    }

    pub fn points(&self) -> &PointSet {
        &self.points
    }

    pub fn contains(&self, xi: GroupElement) -> bool {
        self.points.contains(xi)
    }
}

/// Transform of the indicator of `A` at the point `xi`: one root `w^e` per
/// `a` in `A`, with `e` the chosen pairing of `a` and `xi`.
pub fn ft_at(a: &PointSet, xi: GroupElement, form: Form) -> Result<CycloSum> {
    if a.modulus() != xi.modulus() {
        return Err(Error::ModulusMismatch {
            left: a.modulus(),
            right: xi.modulus(),
        });
    }
    if a.modulus() > crate::cyclotomic::MAX_CYCLOTOMIC_N {
        return Err(Error::ModulusTooLarge {
            n: a.modulus(),
            bound: crate::cyclotomic::MAX_CYCLOTOMIC_N,
        });
    }
    let mut sum = CycloSum::zero(a.modulus());
    for &elem in a.iter() {
        sum.add_root(form.residue(elem, xi));
    }
    Ok(sum)
}

/// All points where the transform of `1_A` vanishes, by exhaustive scan.
/// The source set must be nonempty (the transform at 0 equals `|A| > 0`,
/// so `(0,0)` never appears).
pub fn zero_set(a: &PointSet, form: Form) -> Result<ZeroSet> {
    if a.is_empty() {
        return Err(Error::EmptySet { context: "zero_set" });
    }
    let n = a.modulus();
    let mut points = Vec::new();
    for x1 in 0..n {
        for x2 in 0..n {
            let xi = GroupElement::new(n, i64::from(x1), i64::from(x2));
            if ft_at(a, xi, form)?.is_zero() {
                points.push(xi);
            }
        }
    }
    let points = PointSet::from_elements(n, points)?;
    debug_assert!(!points.contains(GroupElement::zero(n)));
    Ok(ZeroSet { form, points })
}

/// Carries a Euclidean zero set to the symplectic one of the same set via the
/// pointwise 90 degree rotation `(s1, s2) -> (-s2, s1)`.
pub fn rotate_euclidean_to_symplectic(z: &ZeroSet) -> Result<ZeroSet> {
    if z.form != Form::Euclidean {
        return Err(Error::WrongForm {
            expected: "euclidean",
            actual: z.form.label(),
        });
    }
    let rot = Symplectomorphism::rotation(z.points.modulus());
    Ok(ZeroSet {
        form: Form::Symplectic,
        points: rot.apply_set(&z.points),
    })
}

/// Checks pointwise over the whole group that the symplectic transform of a
/// subgroup indicator is `|H|` on the symplectic orthogonal and zero off it,
/// and that its zero set is exactly the complement of the orthogonal.
/// Failures are reported, not thrown, so sweeps can log them.
pub fn subgroup_transform_identity(h: &Subgroup) -> VerificationReport {
    let start = std::time::Instant::now();
    let mut report = VerificationReport::new(
        "subgroup-transform-identity",
        SearchConfig::exhaustive(),
    );
    let n = h.modulus();
    let perp = h.symplectic_orthogonal();
    let order = h.order() as i64;

    for x1 in 0..n {
        for x2 in 0..n {
            let xi = GroupElement::new(n, i64::from(x1), i64::from(x2));
            let value = ft_at(h.carrier(), xi, Form::Symplectic).expect("same modulus");
            report.instances_checked += 1;
            let ok = if perp.contains(xi) {
                // all exponents pair to zero, so the sum is |H| at exponent 0
                value.counts()[0] == order
                    && value.counts().iter().skip(1).all(|&c| c == 0)
            } else {
                value.is_zero()
            };
            if !ok {
                report.failures.push(Witness {
                    n,
                    description: format!(
                        "transform of 1_H at {xi} does not match |H| * 1_(H^perp)"
                    ),
                    sets: vec![
                        ("H".into(), h.carrier().clone()),
                        ("H_perp".into(), perp.carrier().clone()),
                    ],
                    offender: Some(xi),
                });
            }
        }
    }

    // Equivalent statement through the zero set.
    let z = zero_set(h.carrier(), Form::Symplectic).expect("subgroup is nonempty");
    if z.points() != &perp.carrier().complement() {
        report.failures.push(Witness {
            n,
            description: "Z(1_H^sym) differs from the complement of H^perp".into(),
            sets: vec![
                ("H".into(), h.carrier().clone()),
                ("zero_set".into(), z.points().clone()),
            ],
            offender: None,
        });
    }

    report.sort_witnesses();
    report.elapsed = start.elapsed();
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{RngExt, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn el(n: u32, x1: i64, x2: i64) -> GroupElement {
        GroupElement::new(n, x1, x2)
    }

    fn axis(n: u32) -> PointSet {
        PointSet::from_pairs(n, (0..i64::from(n)).map(|k| (k, 0)))
    }

    fn random_nonempty_set(rng: &mut ChaCha8Rng, n: u32) -> PointSet {
        loop {
            let pairs: Vec<(i64, i64)> = (0..n)
                .flat_map(|x1| (0..n).map(move |x2| (i64::from(x1), i64::from(x2))))
                .filter(|_| rng.random_bool(0.5))
                .collect();
            if !pairs.is_empty() {
                return PointSet::from_pairs(n, pairs);
            }
        }
    }

    #[test]
    fn ft_along_axis_vanishes() {
        // <<(a1,0),(0,1)>> = a1, so the sum collects every fourth root once.
        let sum = ft_at(&axis(4), el(4, 0, 1), Form::Symplectic).unwrap();
        assert_eq!(sum.counts(), &[1, 1, 1, 1]);
        assert!(sum.is_zero());
    }

    #[test]
    fn ft_at_origin_is_cardinality() {
        let a = PointSet::from_pairs(4, [(0, 0), (3, 0), (0, 3), (3, 3)]);
        for form in [Form::Euclidean, Form::Symplectic] {
            let sum = ft_at(&a, el(4, 0, 0), form).unwrap();
            assert_eq!(sum.counts()[0], 4);
            assert!(sum.counts().iter().skip(1).all(|&c| c == 0));
            assert!(!sum.is_zero());
        }
    }

    #[test]
    fn ft_of_two_point_factor() {
        // 1 + w^2 = 0 at every xi with second coordinate 2.
        let a = PointSet::from_pairs(4, [(0, 0), (1, 0)]);
        for x1 in 0..4 {
            let sum = ft_at(&a, el(4, x1, 2), Form::Symplectic).unwrap();
            assert!(sum.is_zero());
        }
    }

    #[test]
    fn figure_one_zero_sets() {
        let a = axis(4);
        let euc = zero_set(&a, Form::Euclidean).unwrap();
        let left_column = PointSet::from_pairs(4, (0..4).map(|k| (0, k)));
        assert_eq!(euc.points(), &left_column.complement());

        let sym = zero_set(&a, Form::Symplectic).unwrap();
        assert_eq!(sym.points(), &a.complement());
    }

    #[test]
    fn worked_zero_set_of_product_set() {
        let a = PointSet::from_pairs(4, [(0, 0), (1, 0), (0, 2), (1, 2)]);
        let z = zero_set(&a, Form::Symplectic).unwrap();
        let stripes = PointSet::from_pairs(
            4,
            (0..4)
                .flat_map(|k| [(1i64, k), (3, k)])
                .chain((0..4).map(|j| (j, 2))),
        );
        assert_eq!(z.points(), &stripes);
    }

    #[test]
    fn zero_set_rejects_empty_input() {
        assert!(matches!(
            zero_set(&PointSet::empty(4), Form::Symplectic),
            Err(Error::EmptySet { .. })
        ));
    }

    #[test]
    fn rotation_examples() {
        let a = axis(4);
        let euc = zero_set(&a, Form::Euclidean).unwrap();
        let rotated = rotate_euclidean_to_symplectic(&euc).unwrap();
        let sym = zero_set(&a, Form::Symplectic).unwrap();
        assert_eq!(rotated, sym);

        let singleton = ZeroSet {
            form: Form::Euclidean,
            points: PointSet::from_pairs(4, [(1, 0)]),
        };
        let rot = rotate_euclidean_to_symplectic(&singleton).unwrap();
        assert_eq!(rot.points(), &PointSet::from_pairs(4, [(0, 1)]));

        let sym_tagged = ZeroSet {
            form: Form::Symplectic,
            points: PointSet::empty(4),
        };
        assert!(matches!(
            rotate_euclidean_to_symplectic(&sym_tagged),
            Err(Error::WrongForm { .. })
        ));
    }

    #[test]
    fn rotation_duality_on_random_sets() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..50 {
            let n = rng.random_range(2..=9u32);
            let a = random_nonempty_set(&mut rng, n);
            let euc = zero_set(&a, Form::Euclidean).unwrap();
            let sym = zero_set(&a, Form::Symplectic).unwrap();
            assert_eq!(
                rotate_euclidean_to_symplectic(&euc).unwrap().points(),
                sym.points(),
                "A = {a}"
            );
        }
    }

    #[test]
    fn conjugate_symmetry_of_zero_sets() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..30 {
            let n = rng.random_range(2..=9u32);
            let a = random_nonempty_set(&mut rng, n);
            let z = zero_set(&a, Form::Symplectic).unwrap();
            for &xi in z.points().iter() {
                assert!(z.contains(-xi));
            }
        }
    }

    #[test]
    fn subgroup_identity_for_named_subgroups() {
        let axis_subgroup = Subgroup::generated(4, &[el(4, 1, 0)]);
        let report = subgroup_transform_identity(&axis_subgroup);
        assert!(report.pass());

        let trivial = Subgroup::trivial(4);
        let report = subgroup_transform_identity(&trivial);
        assert!(report.pass());
        let z = zero_set(trivial.carrier(), Form::Symplectic).unwrap();
        assert!(z.points().is_empty());

        let noncyclic = Subgroup::generated(4, &[el(4, 2, 0), el(4, 0, 2)]);
        let report = subgroup_transform_identity(&noncyclic);
        assert!(report.pass());
        let z = zero_set(noncyclic.carrier(), Form::Symplectic).unwrap();
        assert_eq!(z.points().len(), 12);
        assert!(z.points().is_disjoint(noncyclic.carrier()).unwrap());
    }
}
