//! Sweeps over all of S_n against small oracles written from the definitions,
//! independent of the library's bitset code.

use std::collections::{BTreeMap, HashSet};

use num_bigint::BigUint;
use permdom::counting::{f1, g1, pair_count, SingletonTable};
use permdom::domination::{all_minimum_dominating_sets, domination_number_exact, singleton_dominators};
use permdom::graph::{build_graph, permutation_is_connected};
use permdom::perm::all_permutations;
use permdom::Permutation;

/// Edge {i, j}, i < j, when j appears before i.
fn naive_adjacency(p: &[usize]) -> Vec<Vec<bool>> {
    let n = p.len();
    let mut pos = vec![0; n + 1];
    for (i, &v) in p.iter().enumerate() {
        pos[v] = i;
    }
    let mut adj = vec![vec![false; n + 1]; n + 1];
    for i in 1..=n {
        for j in i + 1..=n {
            if pos[j] < pos[i] {
                adj[i][j] = true;
                adj[j][i] = true;
            }
        }
    }
    adj
}

fn naive_dominates(adj: &[Vec<bool>], set: &[usize]) -> bool {
    let n = adj.len() - 1;
    (1..=n).all(|v| set.iter().any(|&d| d == v || adj[d][v]))
}

/// Every minimum dominating set, each as a sorted vertex list, sorted.
fn naive_minimum_sets(adj: &[Vec<bool>]) -> Vec<Vec<usize>> {
    let n = adj.len() - 1;
    let mut best: Option<usize> = None;
    let mut sets = Vec::new();
    for mask in 0u32..1 << n {
        let set: Vec<usize> = (1..=n).filter(|v| mask >> (v - 1) & 1 == 1).collect();
        if !naive_dominates(adj, &set) {
            continue;
        }
        match best {
            Some(b) if set.len() > b => {}
            Some(b) if set.len() == b => sets.push(set),
            _ => {
                best = Some(set.len());
                sets = vec![set];
            }
        }
    }
    sets.sort();
    sets
}

fn naive_connected(adj: &[Vec<bool>]) -> bool {
    let n = adj.len() - 1;
    let mut seen = vec![false; n + 1];
    let mut stack = vec![1];
    seen[1] = true;
    while let Some(v) = stack.pop() {
        for w in 1..=n {
            if adj[v][w] && !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen[1..].iter().all(|&s| s)
}

fn naive_strong_fixed_points(p: &[usize]) -> usize {
    (0..p.len()).filter(|&i| p[..i].iter().all(|&x| x < p[i]) && p[i + 1..].iter().all(|&x| x > p[i])).count()
}

#[test]
fn exact_solver_matches_subset_oracle() {
    for n in 1..=6 {
        for p in all_permutations(n) {
            let adj = naive_adjacency(p.as_slice());
            let want = naive_minimum_sets(&adj);
            let g = build_graph(&p).unwrap();
            let exact = domination_number_exact(&g);
            assert_eq!(exact.gamma, want[0].len(), "{p}");
            assert_eq!(exact.witness.to_vec(), want[0], "canonical witness of {p}");
            let all: Vec<Vec<usize>> = all_minimum_dominating_sets(&g).iter().map(|s| s.to_vec()).collect();
            assert_eq!(all, want, "{p}");
        }
    }
}

#[test]
fn connectivity_matches_search() {
    for n in 1..=7 {
        for p in all_permutations(n) {
            let adj = naive_adjacency(p.as_slice());
            assert_eq!(permutation_is_connected(&p), naive_connected(&adj), "{p}");
        }
    }
}

#[test]
fn connected_graphs_have_small_domination_number() {
    for n in 2..=7 {
        for p in all_permutations(n) {
            if permutation_is_connected(&p) {
                let gamma = domination_number_exact(&build_graph(&p).unwrap()).gamma;
                assert!(gamma <= n / 2, "{p}: {gamma}");
            }
        }
    }
}

#[test]
fn graph_determines_permutation() {
    let mut seen = HashSet::new();
    for p in all_permutations(5) {
        assert!(seen.insert(build_graph(&p).unwrap().edges()), "{p}");
    }
    assert_eq!(seen.len(), 120);
}

/// Singleton-dominator distributions from the naive oracle, frozen against
/// the recursion for n <= 7.
#[test]
fn singleton_distribution_from_definitions() {
    let table = SingletonTable::new(7);
    for n in 1..=7 {
        let mut by_dominators: BTreeMap<usize, u64> = BTreeMap::new();
        let mut by_fixed_points: BTreeMap<usize, u64> = BTreeMap::new();
        for p in all_permutations(n) {
            let adj = naive_adjacency(p.as_slice());
            let singles = (1..=n).filter(|&v| naive_dominates(&adj, &[v])).count();
            *by_dominators.entry(singles).or_default() += 1;
            *by_fixed_points.entry(naive_strong_fixed_points(p.reverse().as_slice())).or_default() += 1;
            assert_eq!(singleton_dominators(&build_graph(&p).unwrap()).len(), singles, "{p}");
        }
        assert_eq!(by_dominators, by_fixed_points, "n={n}");
        for t in 0..=n {
            let got = by_dominators.get(&t).copied().unwrap_or(0);
            assert_eq!(table.f1(n, t), BigUint::from(got), "f1({n},{t})");
        }
    }
}

#[test]
fn frozen_values() {
    // Hand tallies over S_3 and S_4, plus values from the subset oracle above.
    assert_eq!(g1(3), 3u32.into());
    assert_eq!(g1(4), 10u32.into());
    assert_eq!(g1(5), 43u32.into());
    assert_eq!(f1(4, 0), 14u32.into());
    assert_eq!(f1(5, 1), 29u32.into());
    assert_eq!(f1(7, 0), 3676u32.into());
    // Pair counts against direct enumeration.
    for n in 2..=6 {
        for u in 1..n {
            for v in u + 1..=n {
                let got = all_permutations(n)
                    .filter(|p| naive_dominates(&naive_adjacency(p.as_slice()), &[u, v]))
                    .count();
                assert_eq!(pair_count(n, u, v).unwrap(), BigUint::from(got), "n={n} {{{u},{v}}}");
            }
        }
    }
}

#[test]
fn reverse_and_inverse_are_involutions() {
    for p in all_permutations(6) {
        assert_eq!(p.reverse().reverse(), p);
        assert_eq!(p.inverse().inverse(), p);
        assert_eq!(Permutation::from_lex_rank(6, p.lex_rank()), p);
    }
}
