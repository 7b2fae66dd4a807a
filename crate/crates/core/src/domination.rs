//! Dominating sets of permutation graphs.
//!
//! The exact solver works on the domination matrix: row `v` is the bit vector
//! of N[v], and a dominating set is a set of rows whose bitwise or has no zero
//! bits. Subsets are tried by increasing size, each size in lexicographic
//! order, so the first hit is the lexicographically smallest minimum
//! dominating set.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::PermutationGraph;
use crate::perm::Permutation;
use crate::vertex_set::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Exact,
    #[serde(rename = "quick_rule_1n")]
    QuickRule1n,
    QuickRuleEnds,
    Heuristic,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DominationResult {
    pub gamma: usize,
    pub witness: VertexSet,
    pub method: Method,
    /// Set only by the heuristic, when its clique cover had to be patched up
    /// greedily to reach a dominating set.
    pub repaired: bool,
}

impl DominationResult {
    fn new(witness: VertexSet, method: Method) -> Self {
        DominationResult { gamma: witness.len(), witness, method, repaired: false }
    }
}

pub fn is_dominating(g: &PermutationGraph, d: VertexSet) -> bool {
    covered_by(g, d) == g.vertices()
}

/// N[D].
pub fn covered_by(g: &PermutationGraph, d: VertexSet) -> VertexSet {
    d.intersection(g.vertices())
        .iter()
        .fold(VertexSet::EMPTY, |acc, v| acc.union(g.closed(v)))
}

/// Calls `visit` on every `size`-subset of `0..rows.len()` (as a bit mask)
/// whose rows or to `full`, in lexicographic order, until `visit` returns
/// `false`.
fn search_row_covers(rows: &[u64], full: u64, size: usize, visit: &mut dyn FnMut(u64) -> bool) {
    fn go(
        rows: &[u64],
        full: u64,
        start: usize,
        left: usize,
        chosen: u64,
        acc: u64,
        visit: &mut dyn FnMut(u64) -> bool,
    ) -> bool {
        if left == 0 {
            return acc != full || visit(chosen);
        }
        for i in start..=rows.len() - left {
            if !go(rows, full, i + 1, left - 1, chosen | 1 << i, acc | rows[i], visit) {
                return false;
            }
        }
        true
    }
    if size <= rows.len() {
        go(rows, full, 0, size, 0, 0, visit);
    }
}

fn first_cover_of_size(rows: &[u64], full: u64, size: usize) -> Option<VertexSet> {
    let mut found = None;
    search_row_covers(rows, full, size, &mut |mask| {
        found = Some(VertexSet::from_bits(mask));
        false
    });
    found
}

/// Domination number with the lexicographically smallest minimum dominating
/// set as witness.
pub fn domination_number_exact(g: &PermutationGraph) -> DominationResult {
    let rows = g.domination_rows();
    let full = g.vertices().bits();
    if g.order() == 0 {
        return DominationResult::new(VertexSet::EMPTY, Method::Exact);
    }
    for size in 1..=g.order() {
        if let Some(witness) = first_cover_of_size(&rows, full, size) {
            return DominationResult::new(witness, Method::Exact);
        }
    }
    unreachable!("the full vertex set always dominates")
}

/// Every minimum dominating set, sorted lexicographically.
pub fn all_minimum_dominating_sets(g: &PermutationGraph) -> Vec<VertexSet> {
    let gamma = domination_number_exact(g).gamma;
    dominating_sets_of_size(g, gamma)
}

pub fn dominating_sets_of_size(g: &PermutationGraph, size: usize) -> Vec<VertexSet> {
    let rows = g.domination_rows();
    let mut out = Vec::new();
    search_row_covers(&rows, g.vertices().bits(), size, &mut |mask| {
        out.push(VertexSet::from_bits(mask));
        true
    });
    out
}

/// Vertices `k` with N[k] = V.
pub fn singleton_dominators(g: &PermutationGraph) -> VertexSet {
    let full = g.vertices();
    g.vertices().iter().filter(|&k| g.closed(k) == full).collect()
}

pub fn count_singleton_dominators(g: &PermutationGraph) -> usize {
    singleton_dominators(g).len()
}

/// Singleton dominators read off the one-line notation: `k` dominates alone
/// iff it sits at position `n + 1 - k` with every smaller value to its right
/// and every larger value to its left.
pub fn singleton_dominators_positional(p: &Permutation) -> Vec<usize> {
    let n = p.len();
    let pos = p.positions();
    (1..=n)
        .filter(|&k| {
            let pk = pos[k - 1];
            pk == n + 1 - k && (1..k).all(|j| pos[j - 1] > pk) && (k + 1..=n).all(|i| pos[i - 1] < pk)
        })
        .collect()
}

/// Private/shared split of the vertices with respect to a dominating set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NeighborClassification {
    /// Vertex → the unique member of D in its closed neighborhood.
    pub private_of: BTreeMap<usize, usize>,
    /// Vertices whose closed neighborhood meets D at least twice.
    pub shared: VertexSet,
}

pub fn classify_neighbors(g: &PermutationGraph, d: VertexSet) -> Result<NeighborClassification> {
    if !is_dominating(g, d) {
        return Err(Error::NotDominating);
    }
    let mut private_of = BTreeMap::new();
    let mut shared = VertexSet::EMPTY;
    for v in g.vertices() {
        let hits = g.closed(v).intersection(d);
        match hits.len() {
            0 => unreachable!("d dominates"),
            1 => {
                private_of.insert(v, hits.first().unwrap());
            }
            _ => shared.insert(v),
        }
    }
    Ok(NeighborClassification { private_of, shared })
}

/// Dominating, with pairwise disjoint closed neighborhoods.
pub fn is_efficient_dominating(g: &PermutationGraph, d: VertexSet) -> bool {
    if d.is_empty() || !d.is_subset(g.vertices()) {
        return false;
    }
    let mut union = VertexSet::EMPTY;
    for v in d {
        let nv = g.closed(v);
        if !union.intersection(nv).is_empty() {
            return false;
        }
        union = union.union(nv);
    }
    union == g.vertices()
}

/// `{1, n}` when 1 and n sit next to each other in the one-line notation,
/// `π(1) != n` and `π(n) != 1`.
pub fn quick_rule_value_ends(p: &Permutation) -> Option<DominationResult> {
    let n = p.len();
    if n < 2 {
        return None;
    }
    let pos = p.positions();
    let (p1, pn) = (pos[0], pos[n - 1]);
    if p1.abs_diff(pn) == 1 && p.at(1) != n && p.at(n) != 1 {
        Some(DominationResult::new([1, n].into_iter().collect(), Method::QuickRule1n))
    } else {
        None
    }
}

/// `{π(1), π(n)}` when those two values differ by one, `π(1) != n` and
/// `π(n) != 1`.
pub fn quick_rule_position_ends(p: &Permutation) -> Option<DominationResult> {
    let n = p.len();
    if n < 2 {
        return None;
    }
    let (first, last) = (p.at(1), p.at(n));
    if first.abs_diff(last) == 1 && first != n && last != 1 {
        Some(DominationResult::new([first, last].into_iter().collect(), Method::QuickRuleEnds))
    } else {
        None
    }
}
