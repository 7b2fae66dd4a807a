//! Clique-cover heuristic for dominating sets.
//!
//! Cliques of a permutation graph are exactly the decreasing subsequences of
//! its one-line notation. The heuristic collects every maximum clique, plus
//! every maximal clique through each vertex that lies in no maximum clique,
//! then repeatedly takes the vertex occurring in the most remaining cliques
//! (smallest vertex on ties) and drops the cliques it hits.

use std::collections::BTreeSet;

use crate::domination::{covered_by, is_dominating, DominationResult, Method};
use crate::graph::PermutationGraph;
use crate::vertex_set::VertexSet;

/// All maximal cliques (Bron–Kerbosch with pivoting), sorted.
pub fn maximal_cliques(g: &PermutationGraph) -> Vec<VertexSet> {
    fn expand(g: &PermutationGraph, r: u64, mut p: u64, mut x: u64, out: &mut Vec<VertexSet>) {
        if p == 0 {
            if x == 0 {
                out.push(VertexSet::from_bits(r));
            }
            return;
        }
        let nb = |v: usize| g.neighbors(v).expect("vertex in range").bits();
        let pivot = VertexSet::from_bits(p | x)
            .iter()
            .max_by_key(|&u| (nb(u) & p).count_ones())
            .expect("p | x is nonempty");
        for v in VertexSet::from_bits(p & !nb(pivot)) {
            let bit = 1u64 << (v - 1);
            expand(g, r | bit, p & nb(v), x & nb(v), out);
            p &= !bit;
            x |= bit;
        }
    }
    let mut out = Vec::new();
    if g.order() > 0 {
        expand(g, 0, g.vertices().bits(), 0, &mut out);
    }
    out.sort_by_key(|c| c.to_vec());
    out
}

/// The cliques the heuristic works through, in a deterministic order: the
/// maximum cliques first, then the extra maximal cliques.
pub fn collected_cliques(g: &PermutationGraph) -> Vec<VertexSet> {
    let all = maximal_cliques(g);
    let top = all.iter().map(|c| c.len()).max().unwrap_or(0);
    let maximum: Vec<VertexSet> = all.iter().copied().filter(|c| c.len() == top).collect();
    let in_maximum = maximum.iter().fold(VertexSet::EMPTY, |acc, c| acc.union(*c));
    let mut extra = BTreeSet::new();
    for k in g.vertices().difference(in_maximum) {
        for c in all.iter().filter(|c| c.contains(k)) {
            extra.insert(c.to_vec());
        }
    }
    maximum
        .into_iter()
        .chain(extra.into_iter().map(|v| v.into_iter().collect()))
        .collect()
}

pub fn heuristic_dominating_set(g: &PermutationGraph) -> DominationResult {
    let mut lists = collected_cliques(g);
    let mut chosen = VertexSet::EMPTY;
    while !lists.is_empty() {
        let mut freq = vec![0usize; g.order() + 1];
        for c in &lists {
            for v in *c {
                freq[v] += 1;
            }
        }
        // max_by_key keeps the last maximum, so scan from the top down.
        let best = (1..=g.order()).rev().max_by_key(|&v| freq[v]).expect("nonempty graph");
        chosen.insert(best);
        lists.retain(|c| !c.contains(best));
    }

    let mut repaired = false;
    while !is_dominating(g, chosen) {
        repaired = true;
        let uncovered = g.vertices().difference(covered_by(g, chosen));
        let best = g
            .vertices()
            .iter()
            .rev()
            .max_by_key(|&v| g.closed_neighborhood(v).expect("in range").intersection(uncovered).len())
            .expect("nonempty graph");
        chosen.insert(best);
    }
    DominationResult { gamma: chosen.len(), witness: chosen, method: Method::Heuristic, repaired }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domination::domination_number_exact;
    use crate::graph::build_graph;
    use crate::perm::{all_permutations, parse_permutation};

    fn graph(s: &str) -> PermutationGraph {
        build_graph(&parse_permutation(s).unwrap()).unwrap()
    }

    /// Maximal decreasing subsequences by brute force over all subsets.
    fn maximal_decreasing_brute(s: &str) -> Vec<Vec<usize>> {
        let p = parse_permutation(s).unwrap();
        let n = p.len();
        let decreasing = |mask: u32| {
            let vals: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).map(|i| p.at(i + 1)).collect();
            vals.windows(2).all(|w| w[0] > w[1])
        };
        let mut out: Vec<Vec<usize>> = (1..1u32 << n)
            .filter(|&m| decreasing(m) && (0..n).all(|i| m & (1 << i) != 0 || !decreasing(m | 1 << i)))
            .map(|m| {
                let mut v: Vec<usize> = (0..n).filter(|i| m & (1 << i) != 0).map(|i| p.at(i + 1)).collect();
                v.sort();
                v
            })
            .collect();
        out.sort();
        out
    }

    #[test]
    fn cliques_are_maximal_decreasing_subsequences() {
        for s in ["3,1,4,2", "2,5,1,3,6,4", "4,6,1,5,2,3", "1,2,3"] {
            let got: Vec<Vec<usize>> = maximal_cliques(&graph(s)).into_iter().map(|c| c.to_vec()).collect();
            assert_eq!(got, maximal_decreasing_brute(s), "{s}");
        }
    }

    #[test]
    fn complete_graph_picks_one() {
        let r = heuristic_dominating_set(&graph("4,3,2,1"));
        assert_eq!(r.witness.to_vec(), vec![1]);
        assert!(!r.repaired);
    }

    #[test]
    fn empty_graph_takes_everything() {
        let r = heuristic_dominating_set(&graph("1,2,3,4,5"));
        assert_eq!(r.gamma, 5);
    }

    #[test]
    fn path_on_four() {
        let g = graph("3,1,4,2");
        let r = heuristic_dominating_set(&g);
        assert!(is_dominating(&g, r.witness));
        assert!(r.gamma >= 2);
        // Cliques {1,3},{2,3},{2,4}: 2 and 3 tie at two hits, 2 wins, leaving
        // {1,3}, where 1 wins the tie. The optimum is reached.
        assert_eq!(r.witness.to_vec(), vec![1, 2]);
    }

    #[test]
    fn always_dominates_on_s6() {
        for p in all_permutations(6) {
            let g = build_graph(&p).unwrap();
            let r = heuristic_dominating_set(&g);
            assert!(is_dominating(&g, r.witness), "{p}");
            assert!(r.gamma >= domination_number_exact(&g).gamma);
        }
    }
}
