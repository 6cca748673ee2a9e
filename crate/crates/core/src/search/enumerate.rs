//! Candidate enumeration: coset transversals for subgroups, clique
//! backtracking over compatibility graphs for everything else.

use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::ENUMERATION_BOUND;
use crate::error::{Error, Result};
use crate::group::{GroupElement, PointSet, Subgroup};
use crate::transform::{zero_set, Form};

/// How a clique search ended.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub(crate) enum SearchOutcome {
    Complete,
    TruncatedByLimit,
    BudgetExhausted,
}

/// Undirected compatibility graph on the cells of Z_n x Z_n, with adjacency
/// stored as bitset rows. Built from a negation-symmetric difference rule.
pub(crate) struct CompatGraph {
    n: u32,
    cells: usize,
    adj: Vec<Vec<u64>>,
}

impl CompatGraph {
    /// `compatible(d)` decides adjacency of `u` and `v` from `d = u - v`;
    /// it must be symmetric under negation and is never asked about zero.
    pub(crate) fn new(n: u32, compatible: impl Fn(GroupElement) -> bool) -> Self {
        let cells = (n as usize) * (n as usize);
        let words = cells.div_ceil(64);
        let mut adj = vec![vec![0u64; words]; cells];
        for u in 0..cells {
            let eu = GroupElement::from_index(n, u);
            for v in (u + 1)..cells {
                let ev = GroupElement::from_index(n, v);
                if compatible(eu - ev) {
                    adj[u][v / 64] |= 1 << (v % 64);
                    adj[v][u / 64] |= 1 << (u % 64);
                }
            }
        }
        CompatGraph { n, cells, adj }
    }

    /// All cliques of exactly `k` vertices, in lexicographic order of their
    /// vertex vectors. `limit` truncates the output; `node_budget` caps the
    /// number of search-tree nodes visited.
    pub(crate) fn cliques_of_size(
        &self,
        k: usize,
        limit: Option<usize>,
        mut node_budget: u128,
    ) -> (Vec<Vec<u16>>, SearchOutcome) {
        let words = self.adj.first().map_or(1, Vec::len);
        let mut all = vec![0u64; words];
        for v in 0..self.cells {
            all[v / 64] |= 1 << (v % 64);
        }
        let mut out = Vec::new();
        let mut chosen: Vec<u16> = Vec::with_capacity(k);
        let outcome = self.dfs(k, &all, 0, &mut chosen, &mut out, limit, &mut node_budget);
        (out, outcome)
    }

    #[allow(clippy::too_many_arguments)]
    fn dfs(
        &self,
        k: usize,
        candidates: &[u64],
        min_vertex: usize,
        chosen: &mut Vec<u16>,
        out: &mut Vec<Vec<u16>>,
        limit: Option<usize>,
        node_budget: &mut u128,
    ) -> SearchOutcome {
        if chosen.len() == k {
            out.push(chosen.clone());
            if limit.is_some_and(|l| out.len() >= l) {
                return SearchOutcome::TruncatedByLimit;
            }
            return SearchOutcome::Complete;
        }
        let need = k - chosen.len();
        let mut available: usize = candidates
            .iter()
            .enumerate()
            .map(|(w, &bits)| {
                let masked = if w * 64 >= min_vertex {
                    bits
                } else if (w + 1) * 64 <= min_vertex {
                    0
                } else {
                    bits & !((1u64 << (min_vertex % 64)) - 1)
                };
                masked.count_ones() as usize
            })
            .sum();
        if available < need {
            return SearchOutcome::Complete;
        }
        for v in min_vertex..self.cells {
            if candidates[v / 64] >> (v % 64) & 1 == 0 {
                continue;
            }
            if available < need {
                break;
            }
            available -= 1;
            if *node_budget == 0 {
                return SearchOutcome::BudgetExhausted;
            }
            *node_budget -= 1;
            chosen.push(v as u16);
            let next: Vec<u64> = candidates
                .iter()
                .zip(&self.adj[v])
                .map(|(&c, &a)| c & a)
                .collect();
            let outcome = self.dfs(k, &next, v + 1, chosen, out, limit, node_budget);
            chosen.pop();
            if outcome != SearchOutcome::Complete {
                return outcome;
            }
        }
        SearchOutcome::Complete
    }

    pub(crate) fn modulus(&self) -> u32 {
        self.n
    }
}

fn binomial_saturating(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = match acc.checked_mul(n - i) {
            Some(v) => v / (i + 1),
            None => return u128::MAX,
        };
    }
    acc
}

fn pow_saturating(base: u128, exp: u32) -> u128 {
    let mut acc: u128 = 1;
    for _ in 0..exp {
        acc = match acc.checked_mul(base) {
            Some(v) => v,
            None => return u128::MAX,
        };
    }
    acc
}

fn indices_to_sets(n: u32, cliques: Vec<Vec<u16>>) -> Vec<PointSet> {
    let mut sets: Vec<PointSet> = cliques
        .into_iter()
        .map(|c| PointSet::from_indices(n, c.into_iter().map(usize::from)))
        .collect();
    sets.sort();
    sets
}

/// Every transversal of the cosets of `H`, i.e. every tiling complement of a
/// subgroup, generated by an odometer over the coset list.
fn transversals(h: &Subgroup) -> Result<Vec<PointSet>> {
    let n = h.modulus();
    let cosets = h.cosets();
    let estimate = pow_saturating(h.order() as u128, cosets.len() as u32);
    if estimate > ENUMERATION_BOUND {
        return Err(Error::SearchSpaceTooLarge {
            estimate,
            bound: ENUMERATION_BOUND,
        });
    }
    let mut picks = vec![0usize; cosets.len()];
    let mut out = Vec::with_capacity(estimate as usize);
    loop {
        let choice = cosets
            .iter()
            .zip(&picks)
            .map(|(coset, &i)| coset.elements()[i]);
        out.push(PointSet::from_elements(n, choice).expect("transversal"));
        // advance the odometer
        let mut pos = 0;
        loop {
            if pos == picks.len() {
                let mut sets = out;
                sets.sort();
                return Ok(sets);
            }
            picks[pos] += 1;
            if picks[pos] < cosets[pos].len() {
                break;
            }
            picks[pos] = 0;
            pos += 1;
        }
    }
}

/// Uniform random coset transversals of `H`, reproducible from the seed.
pub fn sample_transversals(h: &Subgroup, count: u64, seed: u64) -> Vec<PointSet> {
    let n = h.modulus();
    let cosets = h.cosets();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let choice = cosets
                .iter()
                .map(|coset| coset.elements()[rng.random_range(0..coset.len())]);
            PointSet::from_elements(n, choice).expect("sampled transversal")
        })
        .collect()
}

/// All tiling complements of `A`, in canonical order.
///
/// When `A` carries a subgroup its complements are exactly its coset
/// transversals, which are generated directly; otherwise candidates of the
/// right size are enumerated by backtracking over the graph whose edges avoid
/// the differences of `A`.
pub fn enumerate_tiling_complements(a: &PointSet) -> Result<Vec<PointSet>> {
    if a.is_empty() {
        return Err(Error::EmptySet {
            context: "enumerate_tiling_complements",
        });
    }
    let n = a.modulus();
    let cells = (n as usize) * (n as usize);
    if !cells.is_multiple_of(a.len()) {
        return Ok(Vec::new());
    }
    if a.is_subgroup_carrier() {
        let h = Subgroup::from_carrier(a.clone()).expect("carrier checked");
        return transversals(&h);
    }
    let k = cells / a.len();
    let estimate = binomial_saturating(cells as u128, k as u128);
    if estimate > ENUMERATION_BOUND {
        return Err(Error::SearchSpaceTooLarge {
            estimate,
            bound: ENUMERATION_BOUND,
        });
    }
    let delta = crate::setops::difference_set(a);
    let graph = CompatGraph::new(n, |d| !delta.contains(d));
    let (cliques, outcome) = graph.cliques_of_size(k, None, ENUMERATION_BOUND);
    if outcome == SearchOutcome::BudgetExhausted {
        return Err(Error::SearchSpaceTooLarge {
            estimate: u128::MAX,
            bound: ENUMERATION_BOUND,
        });
    }
    Ok(indices_to_sets(n, cliques))
}

/// All symplectic spectra of `A`: the sets `S` with `|S| = |A|` whose
/// differences all land in `Z(1_A^sym)`, i.e. the size-|A| cliques of the
/// compatibility graph induced by the zero set.
pub fn enumerate_symplectic_spectra(a: &PointSet) -> Result<Vec<PointSet>> {
    let (cliques, outcome, graph) = spectra_cliques(a, None)?;
    if outcome == SearchOutcome::BudgetExhausted {
        return Err(Error::SearchSpaceTooLarge {
            estimate: u128::MAX,
            bound: ENUMERATION_BOUND,
        });
    }
    Ok(indices_to_sets(graph.modulus(), cliques))
}

fn spectra_cliques(
    a: &PointSet,
    limit: Option<usize>,
) -> Result<(Vec<Vec<u16>>, SearchOutcome, CompatGraph)> {
    if a.is_empty() {
        return Err(Error::EmptySet {
            context: "enumerate_symplectic_spectra",
        });
    }
    let n = a.modulus();
    let cells = (n as usize) * (n as usize);
    let k = a.len();
    if limit.is_none() {
        let estimate = binomial_saturating(cells as u128, k as u128);
        if estimate > ENUMERATION_BOUND {
            return Err(Error::SearchSpaceTooLarge {
                estimate,
                bound: ENUMERATION_BOUND,
            });
        }
    }
    let z = zero_set(a, Form::Symplectic)?;
    let graph = CompatGraph::new(n, |d| z.contains(d));
    let (cliques, outcome) = graph.cliques_of_size(k, limit, ENUMERATION_BOUND);
    Ok((cliques, outcome, graph))
}

/// First `limit` complements of `A` in canonical search order, without the
/// a-priori bound check. Used by sampled sweeps; the flag reports truncation.
pub(crate) fn complements_bounded(a: &PointSet, limit: usize) -> Result<(Vec<PointSet>, bool)> {
    if a.is_empty() {
        return Err(Error::EmptySet {
            context: "enumerate_tiling_complements",
        });
    }
    let n = a.modulus();
    let cells = (n as usize) * (n as usize);
    if !cells.is_multiple_of(a.len()) {
        return Ok((Vec::new(), false));
    }
    let k = cells / a.len();
    let delta = crate::setops::difference_set(a);
    let graph = CompatGraph::new(n, |d| !delta.contains(d));
    let (cliques, outcome) = graph.cliques_of_size(k, Some(limit), ENUMERATION_BOUND);
    Ok((
        indices_to_sets(n, cliques),
        outcome != SearchOutcome::Complete,
    ))
}

/// First `limit` symplectic spectra of `A`, same contract as
/// [`complements_bounded`].
pub(crate) fn spectra_bounded(a: &PointSet, limit: usize) -> Result<(Vec<PointSet>, bool)> {
    let (cliques, outcome, graph) = spectra_cliques(a, Some(limit))?;
    Ok((
        indices_to_sets(graph.modulus(), cliques),
        outcome != SearchOutcome::Complete,
    ))
}
