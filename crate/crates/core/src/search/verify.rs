//! Verification sweeps: the counting identity with its V_k refinement, the
//! two disjointness statements for complements of the non-cyclic Lagrangian,
//! the three cases of the spectra/complements coincidence, and the
//! counterexample sweep over cyclic Lagrangians.
//!
//! Sweeps are parallel over candidate instances; worker output is merged in
//! candidate order and witnesses are re-sorted canonically, so reports do not
//! depend on the worker count.

use std::collections::BTreeSet;
use std::time::Instant;

use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::enumerate::{
    complements_bounded, enumerate_symplectic_spectra, enumerate_tiling_complements,
    sample_transversals, spectra_bounded,
};
use crate::cyclotomic::CycloSum;
use crate::error::{Error, Result};
use crate::group::{
    enumerate_lagrangians, sym_residue, GroupElement, PointSet, Subgroup, Symplectomorphism,
};
use crate::report::{SearchConfig, SearchMode, VerificationReport, Witness};
use crate::setops::{difference_set, is_spectral_pair, is_tiling_pair};
use crate::transform::{ft_at, Form};
use crate::MAX_MODULUS;

/// Partner enumeration cap per instance when a sweep runs in sampled mode.
const SAMPLED_PARTNER_LIMIT: usize = 64;

fn run_in_pool<T: Send>(workers: usize, f: impl FnOnce() -> T + Send) -> T {
    if workers == 0 {
        return f();
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .expect("worker pool")
        .install(f)
}

fn is_prime(p: u32) -> bool {
    p >= 2 && (2..p).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

/// `(p, m)` with `o = p^m`, `m >= 1`, if the order is a prime power.
fn prime_power_order(o: u32) -> Option<(u32, u32)> {
    if o < 2 {
        return None;
    }
    let p = (2..=o).find(|d| o.is_multiple_of(*d)).expect("o >= 2 has a factor");
    let mut rest = o;
    let mut m = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        m += 1;
    }
    (rest == 1).then_some((p, m))
}

/// The unique non-cyclic Lagrangian of Z_{p^2} x Z_{p^2}: all elements of
/// order dividing p, generated by (p, 0) and (0, p).
pub fn noncyclic_lagrangian(p: u32) -> Result<Subgroup> {
    if !is_prime(p) {
        return Err(Error::InvalidArgument(format!("p must be prime, got {p}")));
    }
    let n = p.checked_mul(p).filter(|&n| n <= MAX_MODULUS).ok_or(
        Error::ModulusTooLarge {
            n: p.saturating_mul(p),
            bound: MAX_MODULUS,
        },
    )?;
    let h = Subgroup::generated(
        n,
        &[
            GroupElement::new(n, i64::from(p), 0),
            GroupElement::new(n, 0, i64::from(p)),
        ],
    );
    debug_assert!(h.is_lagrangian() && !h.is_cyclic());
    Ok(h)
}

// ---------------------------------------------------------------------------
// counting identity
// ---------------------------------------------------------------------------

struct CountingTables {
    x: GroupElement,
    p: u32,
    /// exponent of w contributed by each cell at x
    exps: Vec<u32>,
    in_perp_x: Vec<bool>,
    in_perp_px: Vec<bool>,
    /// cell index after the canonicalizing symplectomorphism
    perm: Vec<usize>,
    /// V_k class of each canonical-frame cell, if any
    vclass: Vec<Option<u32>>,
}

fn counting_tables(n: u32) -> Vec<CountingTables> {
    let cells = (n as usize) * (n as usize);
    let mut out = Vec::new();
    for idx in 0..cells {
        let x = GroupElement::from_index(n, idx);
        let Some((p, _m)) = prime_power_order(x.order()) else {
            continue;
        };
        let perp_x = Subgroup::generated(n, &[x]).symplectic_orthogonal();
        let perp_px = Subgroup::generated(n, &[x.scale(i64::from(p))]).symplectic_orthogonal();
        let (mat, d) = Symplectomorphism::canonicalizing(x);
        debug_assert_eq!(d, n / x.order());
        let pm = x.order();
        let pm1 = pm / p;
        let mut exps = Vec::with_capacity(cells);
        let mut in_perp_x = Vec::with_capacity(cells);
        let mut in_perp_px = Vec::with_capacity(cells);
        let mut perm = Vec::with_capacity(cells);
        let mut vclass = Vec::with_capacity(cells);
        for g_idx in 0..cells {
            let g = GroupElement::from_index(n, g_idx);
            exps.push(sym_residue(g, x));
            in_perp_x.push(perp_x.contains(g));
            in_perp_px.push(perp_px.contains(g));
            perm.push(mat.apply(g).index());
            let r = g.x1() % pm;
            vclass.push(r.is_multiple_of(pm1).then_some(r / pm1));
        }
        out.push(CountingTables {
            x,
            p,
            exps,
            in_perp_x,
            in_perp_px,
            perm,
            vclass,
        });
    }
    out
}

struct SweepTally {
    checked: u64,
    skipped: u64,
    failures: Vec<Witness>,
    findings: Vec<Witness>,
}

impl SweepTally {
    fn empty() -> Self {
        SweepTally {
            checked: 0,
            skipped: 0,
            failures: Vec::new(),
            findings: Vec::new(),
        }
    }

    fn absorb(&mut self, other: SweepTally) {
        self.checked += other.checked;
        self.skipped += other.skipped;
        self.failures.extend(other.failures);
        self.findings.extend(other.findings);
    }
}

fn check_counting_instance(
    n: u32,
    members: &[usize],
    tables: &[CountingTables],
    tally: &mut SweepTally,
) {
    for t in tables {
        let mut counts = vec![0i64; n as usize];
        for &i in members {
            counts[t.exps[i] as usize] += 1;
        }
        if !CycloSum::from_counts(counts).is_zero() {
            tally.skipped += 1;
            continue;
        }
        tally.checked += 1;

        let c_x = members.iter().filter(|&&i| t.in_perp_x[i]).count() as u32;
        let c_px = members.iter().filter(|&&i| t.in_perp_px[i]).count() as u32;
        let mut vcounts = vec![0u32; t.p as usize];
        for &i in members {
            if let Some(k) = t.vclass[t.perm[i]] {
                vcounts[k as usize] += 1;
            }
        }
        debug_assert_eq!(vcounts.iter().sum::<u32>(), c_px);

        if c_px != t.p * c_x {
            tally.failures.push(Witness {
                n,
                description: format!(
                    "count identity failed at x = {}: |A ^ <px>^perp| = {c_px}, \
                     p * |A ^ <x>^perp| = {}",
                    t.x,
                    t.p * c_x
                ),
                sets: vec![("A".into(), PointSet::from_indices(n, members.iter().copied()))],
                offender: Some(t.x),
            });
        }
        if vcounts.windows(2).any(|w| w[0] != w[1]) {
            tally.failures.push(Witness {
                n,
                description: format!(
                    "V_k refinement failed at x = {}: class counts {vcounts:?}",
                    t.x
                ),
                sets: vec![("A".into(), PointSet::from_indices(n, members.iter().copied()))],
                offender: Some(t.x),
            });
        }
    }
}

/// Sweeps subsets `A` and prime-power-order points `x` in the zero set of
/// `1_A^sym`, asserting the intersection-count identity and its V_k
/// refinement (after moving `x` to the canonical position `(0, n/p^m)`).
/// Instances where `x` is not in the zero set are skipped: that is the
/// hypothesis gate, not a failure.
pub fn verify_counting_lemma(n: u32, config: SearchConfig) -> Result<VerificationReport> {
    config.validate()?;
    if !(2..=MAX_MODULUS).contains(&n) {
        return Err(Error::ModulusTooLarge {
            n,
            bound: MAX_MODULUS,
        });
    }
    let start = Instant::now();
    let mut report = VerificationReport::new("counting-lemma", config);
    report
        .notes
        .push("V_k refinement read with index set Z_d, d = n/p^m".into());
    let cells = (n as usize) * (n as usize);
    let tables = counting_tables(n);
    report
        .notes
        .push(format!("{} candidate points of prime-power order", tables.len()));

    let subsets: Vec<Vec<usize>> = match config.mode {
        SearchMode::Exhaustive => {
            let estimate = pow2_saturating(cells as u32);
            if estimate > super::ENUMERATION_BOUND {
                return Err(Error::SearchSpaceTooLarge {
                    estimate,
                    bound: super::ENUMERATION_BOUND,
                });
            }
            (1u64..1 << cells)
                .map(|mask| (0..cells).filter(|&i| mask >> i & 1 == 1).collect())
                .collect()
        }
        SearchMode::Sampled => {
            let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
            (0..config.sample_count)
                .map(|_| loop {
                    let members: Vec<usize> =
                        (0..cells).filter(|_| rng.random_bool(0.5)).collect();
                    if !members.is_empty() {
                        break members;
                    }
                })
                .collect()
        }
    };

    let tallies: Vec<SweepTally> = run_in_pool(config.workers, || {
        subsets
            .par_iter()
            .map(|members| {
                let mut tally = SweepTally::empty();
                check_counting_instance(n, members, &tables, &mut tally);
                tally
            })
            .collect()
    });
    let mut total = SweepTally::empty();
    for t in tallies {
        total.absorb(t);
    }
    report.instances_checked = total.checked;
    report.skipped = total.skipped;
    report.failures = total.failures;
    report.sort_witnesses();
    report.elapsed = start.elapsed();
    Ok(report)
}

fn pow2_saturating(bits: u32) -> u128 {
    if bits >= 127 {
        u128::MAX
    } else {
        1u128 << bits
    }
}

// ---------------------------------------------------------------------------
// disjointness of complements of the non-cyclic Lagrangian
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, PartialEq, Eq)]
enum DisjointnessKind {
    SelfSet,
    DiffSet,
}

fn lemma_disjointness_sweep(
    p: u32,
    config: SearchConfig,
    kind: DisjointnessKind,
) -> Result<VerificationReport> {
    config.validate()?;
    let h = noncyclic_lagrangian(p)?;
    let n = h.modulus();
    let suite = match kind {
        DisjointnessKind::SelfSet => "lemma-self-disjoint",
        DisjointnessKind::DiffSet => "lemma-diff-disjoint",
    };
    let start = Instant::now();
    let mut report = VerificationReport::new(suite, config);
    if kind == DisjointnessKind::SelfSet {
        report.notes.push(
            "self-disjointness is asserted in the origin-containing normalization the \
             proof establishes (every shift A - a, a in A, plus A itself when 0 in A); \
             unshifted complements that avoid the origin can meet their zero set and are \
             reported as findings, not failures"
                .into(),
        );
    } else {
        report.notes.push(
            "every complement is checked as found and re-checked shifted to place each \
             of its elements at the origin; the difference set is shift-invariant, so \
             both forms must agree"
                .into(),
        );
    }

    let complements = match config.mode {
        SearchMode::Exhaustive => enumerate_tiling_complements(h.carrier())?,
        SearchMode::Sampled => sample_transversals(&h, config.sample_count, config.seed),
    };

    let tallies: Vec<SweepTally> = run_in_pool(config.workers, || {
        complements
            .par_iter()
            .map(|a| {
                let mut tally = SweepTally::empty();
                tally.checked = 1;
                let shifts =
                    std::iter::once(a.clone()).chain(a.iter().map(|&e| a.translate(-e)));
                for variant in shifts {
                    let normalized = variant.contains(GroupElement::zero(n));
                    let targets = match kind {
                        DisjointnessKind::SelfSet => variant.clone(),
                        DisjointnessKind::DiffSet => difference_set(&variant),
                    };
                    for &t in targets.iter() {
                        let value =
                            ft_at(&variant, t, Form::Symplectic).expect("same modulus");
                        if !value.is_zero() {
                            continue;
                        }
                        let witness = Witness {
                            n,
                            description: match kind {
                                DisjointnessKind::SelfSet if normalized => {
                                    "origin-normalized complement of the non-cyclic \
                                     Lagrangian meets its own symplectic zero set"
                                }
                                DisjointnessKind::SelfSet => {
                                    "unshifted complement of the non-cyclic Lagrangian \
                                     meets its own symplectic zero set"
                                }
                                DisjointnessKind::DiffSet => {
                                    "difference set of a complement of the non-cyclic \
                                     Lagrangian meets its symplectic zero set"
                                }
                            }
                            .into(),
                            sets: vec![
                                ("A".into(), a.clone()),
                                ("checked".into(), variant.clone()),
                            ],
                            offender: Some(t),
                        };
                        if kind == DisjointnessKind::SelfSet && !normalized {
                            tally.findings.push(witness);
                        } else {
                            tally.failures.push(witness);
                        }
                    }
                }
                tally
            })
            .collect()
    });
    let mut total = SweepTally::empty();
    for t in tallies {
        total.absorb(t);
    }
    report.instances_checked = total.checked;
    report.failures = total.failures;
    report.findings = total.findings;
    report.sort_witnesses();
    report.elapsed = start.elapsed();
    Ok(report)
}

/// `A ^ Z(1_A^sym) = {}` for complements `A` of the non-cyclic Lagrangian of
/// Z_{p^2} x Z_{p^2}, in the origin-containing normalization its proof
/// establishes; exhaustive when the transversal space fits the bound.
/// Unshifted origin-avoiding complements can violate the disjointness (the
/// sweep demonstrates this concretely) and are reported as findings.
pub fn verify_lemma_self(p: u32, config: SearchConfig) -> Result<VerificationReport> {
    lemma_disjointness_sweep(p, config, DisjointnessKind::SelfSet)
}

/// `ΔA ^ Z(1_A^sym) = {}` over the same sweep as [`verify_lemma_self`].
pub fn verify_lemma_diff(p: u32, config: SearchConfig) -> Result<VerificationReport> {
    lemma_disjointness_sweep(p, config, DisjointnessKind::DiffSet)
}

// ---------------------------------------------------------------------------
// spectra/complements coincidence (the three main cases)
// ---------------------------------------------------------------------------

/// Which family of sets the coincidence sweep walks.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TheoremCase {
    /// Lagrangians of Z_n x Z_n.
    Lagrangian,
    /// Size-p tiles of Z_p x Z_p.
    PrimeGroup,
    /// Complements of the non-cyclic Lagrangian of Z_{p^2} x Z_{p^2}.
    PrimeSquared,
}

fn spectrum_failure(n: u32, a: &PointSet, b: &PointSet) -> Witness {
    Witness {
        n,
        description: "tiling complement is not a symplectic spectral partner".into(),
        sets: vec![("A".into(), a.clone()), ("B".into(), b.clone())],
        offender: None,
    }
}

fn tiling_failure(n: u32, a: &PointSet, s: &PointSet) -> Witness {
    Witness {
        n,
        description: "symplectic spectrum is not a tiling complement".into(),
        sets: vec![("A".into(), a.clone()), ("S".into(), s.clone())],
        offender: None,
    }
}

/// Both directions of the coincidence for one base set: every tiling
/// complement is a spectral partner, every spectrum is a tiling complement.
fn check_both_directions(
    a: &PointSet,
    complements: &[PointSet],
    spectra: &[PointSet],
    tally: &mut SweepTally,
) -> Result<()> {
    let n = a.modulus();
    for b in complements {
        tally.checked += 1;
        if !is_spectral_pair(b, a, Form::Symplectic)?.holds {
            tally.failures.push(spectrum_failure(n, a, b));
        }
    }
    for s in spectra {
        tally.checked += 1;
        if !is_tiling_pair(a, s)?.holds {
            tally.failures.push(tiling_failure(n, a, s));
        }
    }
    Ok(())
}

fn theorem_case_lagrangian(n: u32, config: SearchConfig) -> Result<VerificationReport> {
    if !(2..=8).contains(&n) {
        return Err(Error::InvalidArgument(format!(
            "the Lagrangian case sweep supports 2 <= n <= 8, got {n}"
        )));
    }
    let start = Instant::now();
    let mut report = VerificationReport::new("theorem-main-lagrangian", config);
    let lagrangians = enumerate_lagrangians(n)?;
    report
        .notes
        .push(format!("{} Lagrangians of Z_{n} x Z_{n}", lagrangians.len()));

    let tallies: Result<Vec<SweepTally>> = run_in_pool(config.workers, || {
        lagrangians
            .par_iter()
            .enumerate()
            .map(|(li, lagr)| {
                let mut tally = SweepTally::empty();
                let a = lagr.carrier();
                match config.mode {
                    SearchMode::Exhaustive => {
                        let complements = enumerate_tiling_complements(a)?;
                        let spectra = enumerate_symplectic_spectra(a)?;
                        check_both_directions(a, &complements, &spectra, &mut tally)?;
                    }
                    SearchMode::Sampled => {
                        let seed = config.seed.wrapping_add(li as u64);
                        let complements =
                            sample_transversals(lagr, config.sample_count, seed);
                        for b in &complements {
                            tally.checked += 1;
                            if !is_spectral_pair(b, a, Form::Symplectic)?.holds {
                                tally.failures.push(spectrum_failure(n, a, b));
                            }
                        }
                        // spectra direction: draw random same-size sets and
                        // test the implication "spectral => tiling"
                        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
                        let cells = (n as usize) * (n as usize);
                        for _ in 0..config.sample_count {
                            let mut picks = BTreeSet::new();
                            while picks.len() < a.len() {
                                picks.insert(rng.random_range(0..cells));
                            }
                            let s = PointSet::from_indices(n, picks);
                            if is_spectral_pair(a, &s, Form::Symplectic)?.holds {
                                tally.checked += 1;
                                if !is_tiling_pair(a, &s)?.holds {
                                    tally.failures.push(tiling_failure(n, a, &s));
                                }
                            } else {
                                tally.skipped += 1;
                            }
                        }
                    }
                }
                Ok(tally)
            })
            .collect()
    });
    let mut total = SweepTally::empty();
    for t in tallies? {
        total.absorb(t);
    }
    if config.mode == SearchMode::Sampled {
        report.notes.push(
            "sampled mode draws transversals for the complement direction and random \
             same-size sets gated on spectrality for the tiling direction"
                .into(),
        );
    }
    report.instances_checked = total.checked;
    report.skipped = total.skipped;
    report.failures = total.failures;
    report.sort_witnesses();
    report.elapsed = start.elapsed();
    Ok(report)
}

/// Is the set a translate of a subgroup? Equivalent to `A - a` carrying a
/// subgroup for any fixed `a` in `A`.
fn is_subgroup_translate(a: &PointSet) -> bool {
    match a.iter().next() {
        None => false,
        Some(&first) => a.translate(-first).is_subgroup_carrier(),
    }
}

fn combinations(cells: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fn rec(start: usize, cells: usize, k: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        if cells - start < k - current.len() {
            return;
        }
        for v in start..cells {
            current.push(v);
            rec(v + 1, cells, k, current, out);
            current.pop();
        }
    }
    rec(0, cells, k, &mut current, &mut out);
    out
}

fn theorem_case_prime_group(p: u32, config: SearchConfig) -> Result<VerificationReport> {
    if ![2, 3, 5].contains(&p) {
        return Err(Error::InvalidArgument(format!(
            "the prime-group sweep supports p in {{2, 3, 5}}, got {p}"
        )));
    }
    let start = Instant::now();
    let mut report = VerificationReport::new("theorem-main-prime-group", config);
    if config.mode == SearchMode::Sampled {
        report
            .notes
            .push("prime-group sweep is always exhaustive; sampled mode ignored".into());
    }
    let n = p;
    let cells = (n as usize) * (n as usize);
    let candidates = combinations(cells, n as usize);
    report.notes.push(format!(
        "scanned all {} size-{p} subsets of Z_{p} x Z_{p}; tiling is translation \
         invariant while being a subgroup is not, so the good-group claim is checked \
         as: one component is a translate of a Lagrangian; trivial-size pairs are \
         checked for a translate-of-subgroup component",
        candidates.len()
    ));

    let tallies: Result<Vec<SweepTally>> = run_in_pool(config.workers, || {
        candidates
            .par_iter()
            .map(|indices| {
                let mut tally = SweepTally::empty();
                let a = PointSet::from_indices(n, indices.iter().copied());
                let complements = enumerate_tiling_complements(&a)?;
                if complements.is_empty() {
                    tally.skipped += 1; // not a tile
                    return Ok(tally);
                }
                let a_lagrangian = is_subgroup_translate(&a);
                for b in &complements {
                    tally.checked += 1;
                    if !(a_lagrangian || is_subgroup_translate(b)) {
                        tally.failures.push(Witness {
                            n,
                            description:
                                "tiling pair without a translate-of-Lagrangian component".into(),
                            sets: vec![("A".into(), a.clone()), ("B".into(), b.clone())],
                            offender: None,
                        });
                    }
                    if !is_spectral_pair(b, &a, Form::Symplectic)?.holds {
                        tally.failures.push(spectrum_failure(n, &a, b));
                    }
                }
                let spectra = enumerate_symplectic_spectra(&a)?;
                for s in &spectra {
                    tally.checked += 1;
                    if !is_tiling_pair(&a, s)?.holds {
                        tally.failures.push(tiling_failure(n, &a, s));
                    }
                }
                Ok(tally)
            })
            .collect()
    });
    let mut total = SweepTally::empty();
    for t in tallies? {
        total.absorb(t);
    }

    // Trivial-size pairs: a singleton and the whole group tile each other and
    // have the full group as subgroup component.
    let full = PointSet::full(n);
    for idx in 0..cells {
        let t = PointSet::from_indices(n, [idx]);
        total.checked += 1;
        if !is_tiling_pair(&t, &full)?.holds || !full.is_subgroup_carrier() {
            total.failures.push(Witness {
                n,
                description: "trivial-size tiling pair misbehaves".into(),
                sets: vec![("A".into(), t.clone()), ("B".into(), full.clone())],
                offender: None,
            });
        }
    }

    report.instances_checked = total.checked;
    report.skipped = total.skipped;
    report.failures = total.failures;
    report.sort_witnesses();
    report.elapsed = start.elapsed();
    Ok(report)
}

fn theorem_case_prime_squared(p: u32, config: SearchConfig) -> Result<VerificationReport> {
    if ![2, 3].contains(&p) {
        return Err(Error::InvalidArgument(format!(
            "the prime-squared sweep supports p in {{2, 3}}, got {p}"
        )));
    }
    let start = Instant::now();
    let mut report = VerificationReport::new("theorem-main-prime-squared", config);
    let h = noncyclic_lagrangian(p)?;

    let bases = match config.mode {
        SearchMode::Exhaustive => enumerate_tiling_complements(h.carrier())?,
        SearchMode::Sampled => sample_transversals(&h, config.sample_count, config.seed),
    };
    report.notes.push(format!(
        "{} complements of the non-cyclic Lagrangian examined",
        bases.len()
    ));

    let sampled = config.mode == SearchMode::Sampled;
    let tallies: Result<Vec<(SweepTally, bool)>> = run_in_pool(config.workers, || {
        bases
            .par_iter()
            .map(|a| {
                let mut tally = SweepTally::empty();
                let mut truncated = false;
                let (complements, spectra) = if sampled {
                    let (c, tc) = complements_bounded(a, SAMPLED_PARTNER_LIMIT)?;
                    let (s, ts) = spectra_bounded(a, SAMPLED_PARTNER_LIMIT)?;
                    truncated = tc || ts;
                    (c, s)
                } else {
                    (
                        enumerate_tiling_complements(a)?,
                        enumerate_symplectic_spectra(a)?,
                    )
                };
                check_both_directions(a, &complements, &spectra, &mut tally)?;
                Ok((tally, truncated))
            })
            .collect()
    });
    let mut total = SweepTally::empty();
    let mut any_truncated = false;
    for (t, truncated) in tallies? {
        total.absorb(t);
        any_truncated |= truncated;
    }
    if any_truncated {
        report.notes.push(format!(
            "partner enumeration truncated at {SAMPLED_PARTNER_LIMIT} per instance in sampled mode"
        ));
    }
    report.instances_checked = total.checked;
    report.skipped = total.skipped;
    report.failures = total.failures;
    report.sort_witnesses();
    report.elapsed = start.elapsed();
    Ok(report)
}

/// Verifies the spectra/complements coincidence for one of its three
/// hypothesis families. `n_or_p` is the modulus for [`TheoremCase::Lagrangian`]
/// and the prime for the other two cases.
pub fn verify_theorem_main(
    case: TheoremCase,
    n_or_p: u32,
    config: SearchConfig,
) -> Result<VerificationReport> {
    config.validate()?;
    match case {
        TheoremCase::Lagrangian => theorem_case_lagrangian(n_or_p, config),
        TheoremCase::PrimeGroup => theorem_case_prime_group(n_or_p, config),
        TheoremCase::PrimeSquared => theorem_case_prime_squared(n_or_p, config),
    }
}

// ---------------------------------------------------------------------------
// counterexample sweep over cyclic Lagrangians
// ---------------------------------------------------------------------------

/// Sweeps complements `A` of the cyclic Lagrangians of Z_n x Z_n and records
/// every `A` whose difference set meets its own symplectic zero set. These
/// are findings, not failures: they demonstrate that "non-cyclic" cannot be
/// dropped from the disjointness statements. At n = 4 the exhaustive sweep
/// must rediscover the worked counterexample `{0,1} x {0,2}`, and its absence
/// is reported as a failure.
pub fn search_counterexamples_cyclic(n: u32, config: SearchConfig) -> Result<VerificationReport> {
    config.validate()?;
    let start = Instant::now();
    let mut report = VerificationReport::new("cyclic-counterexample-search", config);
    let cyclic: Vec<Subgroup> = enumerate_lagrangians(n)?
        .into_iter()
        .filter(Subgroup::is_cyclic)
        .collect();
    report
        .notes
        .push(format!("{} cyclic Lagrangians of Z_{n} x Z_{n}", cyclic.len()));

    let mut total = SweepTally::empty();
    for (hi, h) in cyclic.iter().enumerate() {
        let complements = match config.mode {
            SearchMode::Exhaustive => enumerate_tiling_complements(h.carrier())?,
            SearchMode::Sampled => sample_transversals(
                h,
                config.sample_count,
                config.seed.wrapping_add(hi as u64),
            ),
        };
        let tallies: Vec<SweepTally> = run_in_pool(config.workers, || {
            complements
                .par_iter()
                .map(|a| {
                    let mut tally = SweepTally::empty();
                    tally.checked = 1;
                    let violation = difference_set(a)
                        .iter()
                        .find(|&&d| {
                            ft_at(a, d, Form::Symplectic)
                                .expect("same modulus")
                                .is_zero()
                        })
                        .copied();
                    if let Some(d) = violation {
                        tally.findings.push(Witness {
                            n,
                            description:
                                "complement of a cyclic Lagrangian whose difference set meets \
                                 its symplectic zero set"
                                    .into(),
                            sets: vec![
                                ("A".into(), a.clone()),
                                ("H".into(), h.carrier().clone()),
                            ],
                            offender: Some(d),
                        });
                    }
                    tally
                })
                .collect()
        });
        for t in tallies {
            total.absorb(t);
        }
    }

    if n == 4 && config.mode == SearchMode::Exhaustive {
        let expected = PointSet::from_pairs(4, [(0, 0), (1, 0), (0, 2), (1, 2)]);
        let found = total
            .findings
            .iter()
            .any(|w| w.set("A") == Some(&expected));
        if !found {
            total.failures.push(Witness {
                n,
                description: "expected counterexample {0,1} x {0,2} was not rediscovered".into(),
                sets: vec![("expected_A".into(), expected)],
                offender: None,
            });
        }
    }

    report.instances_checked = total.checked;
    report.failures = total.failures;
    report.findings = total.findings;
    report.sort_witnesses();
    report.elapsed = start.elapsed();
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(n: u32, x1: i64, x2: i64) -> GroupElement {
        GroupElement::new(n, x1, x2)
    }

    #[test]
    fn prime_power_order_detection() {
        assert_eq!(prime_power_order(1), None);
        assert_eq!(prime_power_order(2), Some((2, 1)));
        assert_eq!(prime_power_order(4), Some((2, 2)));
        assert_eq!(prime_power_order(9), Some((3, 2)));
        assert_eq!(prime_power_order(6), None);
        assert_eq!(prime_power_order(12), None);
    }

    #[test]
    fn worked_counting_instance() {
        // A = Z_4 x {0}, x = (0,1): the zero-set gate passes and the
        // intersection counts are 1 and 2.
        let n = 4;
        let a = PointSet::from_pairs(n, (0..4).map(|k| (k, 0)));
        let x = el(n, 0, 1);
        let sum = ft_at(&a, x, Form::Symplectic).unwrap();
        assert!(sum.is_zero());

        let perp_x = Subgroup::generated(n, &[x]).symplectic_orthogonal();
        let perp_px = Subgroup::generated(n, &[x.scale(2)]).symplectic_orthogonal();
        let c_x = a.iter().filter(|&&g| perp_x.contains(g)).count();
        let c_px = a.iter().filter(|&&g| perp_px.contains(g)).count();
        assert_eq!(c_x, 1);
        assert_eq!(c_px, 2);
        assert_eq!(c_px, 2 * c_x);
    }

    #[test]
    fn counting_lemma_exhaustive_tiny() {
        let report = verify_counting_lemma(2, SearchConfig::exhaustive()).unwrap();
        assert!(report.pass());
        assert!(report.instances_checked > 0);
        assert!(report.skipped > 0);
    }

    #[test]
    fn counting_lemma_sampled_is_deterministic() {
        let config = SearchConfig::sampled(64, 42);
        let a = verify_counting_lemma(8, config).unwrap();
        let b = verify_counting_lemma(8, config).unwrap();
        assert!(a.pass());
        assert!(a.outcome_eq(&b));
        // results are independent of the worker count (the config echo differs)
        let c = verify_counting_lemma(8, config.with_workers(2)).unwrap();
        assert_eq!(a.instances_checked, c.instances_checked);
        assert_eq!(a.skipped, c.skipped);
        assert_eq!(a.failures, c.failures);
        assert_eq!(a.findings, c.findings);
    }

    #[test]
    fn counting_lemma_rejects_oversized_exhaustive() {
        assert!(matches!(
            verify_counting_lemma(8, SearchConfig::exhaustive()),
            Err(Error::SearchSpaceTooLarge { .. })
        ));
    }

    #[test]
    fn lemma_sweeps_pass_for_p2() {
        let self_report = verify_lemma_self(2, SearchConfig::exhaustive()).unwrap();
        assert!(self_report.pass());
        assert_eq!(self_report.instances_checked, 256);
        // the unshifted divergence is real and must be surfaced: exactly the
        // origin-avoiding complements can meet their own zero set
        assert!(!self_report.findings.is_empty());
        let violators: std::collections::BTreeSet<&PointSet> = self_report
            .findings
            .iter()
            .map(|w| w.set("A").unwrap())
            .collect();
        assert_eq!(violators.len(), 192);
        for a in &violators {
            assert!(!a.contains(el(4, 0, 0)));
        }

        let diff_report = verify_lemma_diff(2, SearchConfig::exhaustive()).unwrap();
        assert!(diff_report.pass());
        assert_eq!(diff_report.instances_checked, 256);
        assert!(diff_report.findings.is_empty());
    }

    #[test]
    fn unshifted_self_disjointness_counterexample_replays() {
        // a frozen witness for the divergence: this complement of the
        // non-cyclic Lagrangian contains (0,2), and its transform vanishes
        // there (1 + 1 + w^2 + w^2 = 0).
        let a = PointSet::from_pairs(4, [(0, 1), (0, 2), (1, 0), (1, 1)]);
        let h = noncyclic_lagrangian(2).unwrap();
        assert!(is_tiling_pair(&a, h.carrier()).unwrap().holds);
        let offender = el(4, 0, 2);
        assert!(a.contains(offender));
        assert!(ft_at(&a, offender, Form::Symplectic).unwrap().is_zero());
        // while every origin-containing shift of it is clean
        for &e in a.iter() {
            let shifted = a.translate(-e);
            for &t in shifted.iter() {
                assert!(!ft_at(&shifted, t, Form::Symplectic).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn lemma_sweep_rejects_exhaustive_p3() {
        assert!(matches!(
            verify_lemma_self(3, SearchConfig::exhaustive()),
            Err(Error::SearchSpaceTooLarge { .. })
        ));
    }

    #[test]
    fn lemma_sweep_rejects_composite_p() {
        assert!(matches!(
            verify_lemma_self(4, SearchConfig::exhaustive()),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn worked_example_violates_diff_disjointness() {
        // the cyclic-Lagrangian control: every difference of {0,1} x {0,2}
        // lies inside the zero set, so the disjointness fails maximally.
        let a = PointSet::from_pairs(4, [(0, 0), (1, 0), (0, 2), (1, 2)]);
        let violations: Vec<GroupElement> = difference_set(&a)
            .iter()
            .filter(|&&d| ft_at(&a, d, Form::Symplectic).unwrap().is_zero())
            .copied()
            .collect();
        assert_eq!(violations.len(), difference_set(&a).len());
    }

    #[test]
    fn theorem_lagrangian_case_small() {
        for n in 2..=4u32 {
            let report =
                verify_theorem_main(TheoremCase::Lagrangian, n, SearchConfig::exhaustive())
                    .unwrap();
            assert!(report.pass(), "n = {n}");
            assert!(report.instances_checked > 0);
        }
    }

    #[test]
    fn theorem_prime_group_case_p2() {
        let report =
            verify_theorem_main(TheoremCase::PrimeGroup, 2, SearchConfig::exhaustive()).unwrap();
        assert!(report.pass());
        assert!(report.instances_checked > 0);
        // every 2-subset of Z_2 x Z_2 is a tile, so nothing is skipped
        assert_eq!(report.skipped, 0);
    }

    #[test]
    fn theorem_prime_group_case_p3() {
        let report =
            verify_theorem_main(TheoremCase::PrimeGroup, 3, SearchConfig::exhaustive()).unwrap();
        assert!(report.pass());
        // a 3-subset has at most 3 difference directions but Z_3 x Z_3 has 4
        // lines, so one line always survives as a complement: no non-tiles yet
        assert_eq!(report.skipped, 0);
    }

    #[test]
    fn good_group_claim_needs_translates() {
        // a frozen tiling pair of Z_2 x Z_2 in which neither component is a
        // subgroup, though both are translates of Lagrangians
        let a = PointSet::from_pairs(2, [(0, 1), (1, 0)]);
        let b = PointSet::from_pairs(2, [(0, 1), (1, 1)]);
        assert!(is_tiling_pair(&a, &b).unwrap().holds);
        assert!(!a.is_subgroup_carrier() && !b.is_subgroup_carrier());
        assert!(is_subgroup_translate(&a) && is_subgroup_translate(&b));
    }

    #[test]
    fn theorem_prime_squared_case_p2() {
        let report =
            verify_theorem_main(TheoremCase::PrimeSquared, 2, SearchConfig::exhaustive()).unwrap();
        assert!(report.pass());
    }

    #[test]
    fn counterexample_sweep_rediscovers_the_witness() {
        let report = search_counterexamples_cyclic(4, SearchConfig::exhaustive()).unwrap();
        assert!(report.pass());
        assert!(!report.findings.is_empty());
        let expected = PointSet::from_pairs(4, [(0, 0), (1, 0), (0, 2), (1, 2)]);
        assert!(report.findings.iter().any(|w| w.set("A") == Some(&expected)));
    }

    #[test]
    fn counterexample_findings_replay() {
        let report = search_counterexamples_cyclic(4, SearchConfig::exhaustive()).unwrap();
        for finding in &report.findings {
            let a = finding.set("A").unwrap();
            let d = finding.offender.unwrap();
            assert!(difference_set(a).contains(d));
            assert!(ft_at(a, d, Form::Symplectic).unwrap().is_zero());
        }
    }

    #[test]
    fn counterexample_sweep_finds_nothing_at_n2() {
        let report = search_counterexamples_cyclic(2, SearchConfig::exhaustive()).unwrap();
        assert!(report.pass());
        assert!(report.findings.is_empty());
    }
}
