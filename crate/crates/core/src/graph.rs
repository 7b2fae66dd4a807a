//! Permutation graphs: vertices `1..=n`, with `{i, j}` (i < j) an edge exactly
//! when `j` appears before `i` in the one-line notation.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::vertex_set::{VertexSet, MAX_VERTICES};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermutationGraph {
    n: usize,
    /// `adjacency[v - 1]` is the open neighborhood N(v).
    adjacency: Vec<VertexSet>,
    source: Permutation,
}

/// Edge list export used by the CLI.
#[derive(Clone, Debug, Serialize)]
pub struct GraphExport {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    pub degrees: Vec<usize>,
}

pub fn build_graph(p: &Permutation) -> Result<PermutationGraph> {
    let n = p.len();
    if n > MAX_VERTICES {
        return Err(Error::OrderTooLarge { n, max: MAX_VERTICES });
    }
    let mut adjacency = vec![VertexSet::EMPTY; n];
    // Scanning left to right, each value is adjacent to every larger value
    // already seen.
    let mut seen = VertexSet::EMPTY;
    for &v in p.as_slice() {
        let larger_before = seen.difference(VertexSet::full(v));
        for u in larger_before {
            adjacency[v - 1].insert(u);
            adjacency[u - 1].insert(v);
        }
        seen.insert(v);
    }
    Ok(PermutationGraph { n, adjacency, source: p.clone() })
}

impl PermutationGraph {
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn source(&self) -> &Permutation {
        &self.source
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn neighbors(&self, v: usize) -> Result<VertexSet> {
        self.check_vertex(v)?;
        Ok(self.adjacency[v - 1])
    }

    /// N[v] = N(v) ∪ {v}.
    pub fn closed_neighborhood(&self, v: usize) -> Result<VertexSet> {
        self.check_vertex(v)?;
        Ok(self.closed(v))
    }

    /// Rows of the domination matrix (adjacency plus identity).
    pub fn domination_rows(&self) -> Vec<u64> {
        (1..=self.n).map(|v| self.closed(v).bits()).collect()
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        Ok(self.neighbors(v)?.len())
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        (1..=self.n).contains(&u) && self.adjacency[u - 1].contains(v)
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        (1..=self.n)
            .flat_map(|u| self.adjacency[u - 1].iter().filter(move |&v| v > u).map(move |v| (u, v)))
            .collect()
    }

    pub fn export(&self) -> GraphExport {
        GraphExport {
            n: self.n,
            edges: self.edges(),
            degrees: self.adjacency.iter().map(|s| s.len()).collect(),
        }
    }

    /// N[v] for a vertex already known to be in range.
    pub(crate) fn closed(&self, v: usize) -> VertexSet {
        let mut s = self.adjacency[v - 1];
        s.insert(v);
        s
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if (1..=self.n).contains(&v) {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    /// Connectivity by breadth-first search over the adjacency rows.
    pub fn is_connected_by_search(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut reached = VertexSet::singleton(1);
        let mut frontier = reached;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier {
                next = next.union(self.adjacency[v - 1]);
            }
            frontier = next.difference(reached);
            reached = reached.union(frontier);
        }
        reached == self.vertices()
    }
}

/// Lengths of the blocks cut by every `k` whose prefix `π(1..=k)` is exactly
/// `{1..k}`.
fn prefix_cuts(p: &Permutation) -> Vec<usize> {
    let mut cuts = Vec::new();
    let mut max_seen = 0;
    for (i, &v) in p.as_slice().iter().enumerate() {
        max_seen = max_seen.max(v);
        if max_seen == i + 1 {
            cuts.push(i + 1);
        }
    }
    cuts
}

/// Connected iff no proper prefix of the one-line notation is `{1..k}`.
pub fn is_connected(g: &PermutationGraph) -> bool {
    permutation_is_connected(g.source())
}

/// The prefix criterion evaluated directly on a permutation.
pub fn permutation_is_connected(p: &Permutation) -> bool {
    prefix_cuts(p).len() <= 1
}

/// A connected component: its vertices are `offset + 1 ..= offset + m` and it
/// is the graph of `permutation`, shifted by `offset`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Component {
    pub offset: usize,
    pub permutation: Permutation,
}

/// Components in increasing vertex order. Each occupies a block of
/// consecutive positions holding a block of consecutive values.
pub fn components(g: &PermutationGraph) -> Vec<Component> {
    permutation_components(g.source())
}

pub fn permutation_components(p: &Permutation) -> Vec<Component> {
    let mut out = Vec::new();
    let mut start = 0;
    for end in prefix_cuts(p) {
        let image = p.as_slice()[start..end].iter().map(|&v| v - start).collect();
        out.push(Component { offset: start, permutation: Permutation::new(image).expect("block is a bijection") });
        start = end;
    }
    out
}

/// Checks that every vertex `i` is displaced by at most its degree and with
/// the same parity: `|π⁻¹(i) − i| <= deg(i)` and `π⁻¹(i) − i ≡ deg(i) (mod 2)`.
pub fn degree_bound_check(p: &Permutation) -> Result<bool> {
    let g = build_graph(p)?;
    let pos = p.positions();
    Ok((1..=p.len()).all(|i| {
        let displacement = pos[i - 1].abs_diff(i);
        let deg = g.adjacency[i - 1].len();
        displacement <= deg && (deg - displacement) % 2 == 0
    }))
}
