use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use super::{sym_residue, GroupElement, PointSet};
use crate::error::{Error, Result};
use crate::MAX_MODULUS;

/// A subgroup of Z_n x Z_n, carried as a canonical [`PointSet`] together with
/// a generating set.
///
/// Equality and ordering compare carriers only; the generator list is
/// presentation metadata.
#[derive(Clone, Debug, Serialize)]
pub struct Subgroup {
    carrier: PointSet,
    generators: Vec<GroupElement>,
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.carrier == other.carrier
    }
}

impl Eq for Subgroup {}

impl PartialOrd for Subgroup {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Subgroup {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.carrier.cmp(&other.carrier)
    }
}

impl Subgroup {
    /// The subgroup generated by `gens` (the trivial subgroup for no
    /// generators), computed by worklist saturation.
    pub fn generated(n: u32, gens: &[GroupElement]) -> Self {
        for g in gens {
            assert_eq!(g.modulus(), n, "modulus mismatch in generators");
        }
        let carrier = close_under_addition(n, gens);
        Subgroup {
            carrier,
            generators: gens.to_vec(),
        }
    }

    /// Wraps an explicit carrier, verifying closure. A small generating set
    /// is recovered greedily for presentation.
    pub fn from_carrier(carrier: PointSet) -> Result<Self> {
        if carrier.is_empty() {
            return Err(Error::NotASubgroup {
                reason: "empty carrier".into(),
            });
        }
        if !carrier.contains(GroupElement::zero(carrier.modulus())) {
            return Err(Error::NotASubgroup {
                reason: "does not contain (0, 0)".into(),
            });
        }
        for &a in carrier.iter() {
            for &b in carrier.iter() {
                if !carrier.contains(a - b) {
                    return Err(Error::NotASubgroup {
                        reason: format!("not closed: {a} - {b} = {} is missing", a - b),
                    });
                }
            }
        }
        let generators = small_generating_set(&carrier);
        Ok(Subgroup { carrier, generators })
    }

    pub fn trivial(n: u32) -> Self {
        Subgroup::generated(n, &[])
    }

    pub fn full(n: u32) -> Self {
        Subgroup::generated(n, &[GroupElement::new(n, 1, 0), GroupElement::new(n, 0, 1)])
    }

    pub fn carrier(&self) -> &PointSet {
        &self.carrier
    }

    pub fn generators(&self) -> &[GroupElement] {
        &self.generators
    }

    pub fn modulus(&self) -> u32 {
        self.carrier.modulus()
    }

    pub fn order(&self) -> usize {
        self.carrier.len()
    }

    pub fn contains(&self, e: GroupElement) -> bool {
        self.carrier.contains(e)
    }

    /// True when some single element generates the whole subgroup.
    pub fn is_cyclic(&self) -> bool {
        self.carrier
            .iter()
            .any(|&g| g.order() as usize == self.order())
    }

    /// The symplectic orthogonal `H^perp = { g : <<g, h>> = 0 for all h in H }`.
    pub fn symplectic_orthogonal(&self) -> Subgroup {
        let n = self.modulus();
        let mut elems = Vec::new();
        for x1 in 0..n {
            for x2 in 0..n {
                let g = GroupElement::new(n, i64::from(x1), i64::from(x2));
                if self.carrier.iter().all(|&h| sym_residue(g, h) == 0) {
                    elems.push(g);
                }
            }
        }
        let carrier = PointSet::from_elements(n, elems).expect("orthogonal carrier");
        debug_assert!(carrier.is_subgroup_carrier());
        let generators = small_generating_set(&carrier);
        Subgroup { carrier, generators }
    }

    /// True when `H` equals its own symplectic orthogonal. By the order-n
    /// classification this coincides with `|H| = n`, which is cross-checked
    /// in debug builds.
    pub fn is_lagrangian(&self) -> bool {
        let result = self.symplectic_orthogonal().carrier == self.carrier;
        debug_assert_eq!(result, self.order() == self.modulus() as usize);
        result
    }

    /// The cosets of the subgroup, ordered by their least representative.
    /// Together they partition Z_n x Z_n.
    pub fn cosets(&self) -> Vec<PointSet> {
        let n = self.modulus();
        let cells = (n as usize) * (n as usize);
        let mut seen = vec![false; cells];
        let mut out = Vec::with_capacity(cells / self.order());
        for idx in 0..cells {
            if seen[idx] {
                continue;
            }
            let rep = GroupElement::from_index(n, idx);
            let coset = self.carrier.translate(rep);
            for e in coset.iter() {
                seen[e.index()] = true;
            }
            out.push(coset);
        }
        out
    }
}

impl fmt::Display for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ">")
    }
}

fn close_under_addition(n: u32, gens: &[GroupElement]) -> PointSet {
    let mut set = BTreeSet::new();
    set.insert(GroupElement::zero(n));
    let mut work = vec![GroupElement::zero(n)];
    while let Some(e) = work.pop() {
        for &g in gens {
            let next = e + g;
            if set.insert(next) {
                work.push(next);
            }
        }
    }
    PointSet::from_elements(n, set).expect("closure carrier")
}

/// Greedy small generating set: repeatedly adjoin the least carrier element
/// not yet generated. Terminates quickly since each step at least doubles the
/// closure.
fn small_generating_set(carrier: &PointSet) -> Vec<GroupElement> {
    let n = carrier.modulus();
    let mut gens: Vec<GroupElement> = Vec::new();
    let mut closure = close_under_addition(n, &gens);
    while closure.len() < carrier.len() {
        let next = carrier
            .iter()
            .find(|&&e| !closure.contains(e))
            .copied()
            .expect("carrier exceeds closure");
        gens.push(next);
        closure = close_under_addition(n, &gens);
    }
    gens
}

/// All subgroups of Z_n x Z_n, canonically ordered.
///
/// Every subgroup of a rank-2 group is generated by at most two elements, so
/// it suffices to merge pairs of cyclic subgroups and deduplicate by carrier.
pub fn enumerate_subgroups(n: u32) -> Result<Vec<Subgroup>> {
    if n > MAX_MODULUS {
        return Err(Error::ModulusTooLarge {
            n,
            bound: MAX_MODULUS,
        });
    }
    let mut cyclic: BTreeSet<PointSet> = BTreeSet::new();
    for x1 in 0..n {
        for x2 in 0..n {
            let g = GroupElement::new(n, i64::from(x1), i64::from(x2));
            cyclic.insert(close_under_addition(n, &[g]));
        }
    }
    let cyclic: Vec<PointSet> = cyclic.into_iter().collect();

    let mut carriers: BTreeSet<PointSet> = cyclic.iter().cloned().collect();
    for (i, h1) in cyclic.iter().enumerate() {
        for h2 in cyclic.iter().skip(i + 1) {
            // H1 and H2 are subgroups, so their join is the set of sums.
            let mut sum = BTreeSet::new();
            for &a in h1.iter() {
                for &b in h2.iter() {
                    sum.insert(a + b);
                }
            }
            carriers.insert(PointSet::from_elements(n, sum).expect("join carrier"));
        }
    }

    Ok(carriers
        .into_iter()
        .map(|carrier| {
            let generators = small_generating_set(&carrier);
            Subgroup { carrier, generators }
        })
        .collect())
}

/// All Lagrangians (order-n subgroups) of Z_n x Z_n, canonically ordered.
pub fn enumerate_lagrangians(n: u32) -> Result<Vec<Subgroup>> {
    Ok(enumerate_subgroups(n)?
        .into_iter()
        .filter(|h| h.order() == n as usize)
        .collect())
}
