//! Extremal permutations: combs with domination number `n/2`, the
//! domination-preserving insertion of a new maximum, and connected graphs
//! with any feasible domination number.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::domination::domination_number_exact;
use crate::error::{Error, Result};
use crate::graph::{build_graph, is_connected, PermutationGraph};
use crate::perm::Permutation;
use crate::vertex_set::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CombVariant {
    /// Leaves are the vertices ≡ 0 or 1 (mod 4).
    Sigma,
    /// Leaves are the vertices ≡ 2 or 3 (mod 4).
    Tau,
}

fn check_comb_order(n: usize) -> Result<()> {
    if n % 2 == 1 {
        return Err(Error::OddOrder(n));
    }
    if n < 6 {
        return Err(Error::OrderTooSmall { n, min: 6 });
    }
    Ok(())
}

/// The comb permutation whose leaves are the values ≡ 0 or 1 (mod 4).
pub fn comb_sigma(n: usize) -> Result<Permutation> {
    check_comb_order(n)?;
    let image = (1..=n)
        .map(|i| {
            if n.is_multiple_of(4) {
                match i {
                    1 => 3,
                    _ if i == n => n - 2,
                    _ if i % 4 == 1 => i - 3,
                    _ if i % 4 == 2 => i - 1,
                    _ if i % 4 == 3 => i + 1,
                    _ => i + 3,
                }
            } else {
                match i {
                    1 => 3,
                    _ if i == n - 2 => n,
                    _ if i % 4 == 1 => i - 3,
                    _ if i % 4 == 2 => i - 1,
                    _ if i % 4 == 3 => i + 1,
                    _ => i + 3,
                }
            }
        })
        .collect();
    Permutation::new(image).map_err(|e| Error::ConstructionFailed(format!("sigma({n}): {e}")))
}

/// The comb permutation whose leaves are the values ≡ 2 or 3 (mod 4).
pub fn comb_tau(n: usize) -> Result<Permutation> {
    check_comb_order(n)?;
    let image = (1..=n)
        .map(|i| {
            if n.is_multiple_of(4) {
                match i {
                    3 => 1,
                    _ if i == n - 2 => n,
                    _ if i % 4 == 1 => i + 1,
                    _ if i % 4 == 2 => i + 3,
                    _ if i % 4 == 3 => i - 3,
                    _ => i - 1,
                }
            } else {
                match i {
                    3 => 1,
                    _ if i == n => n - 2,
                    _ if i % 4 == 1 => i + 1,
                    _ if i % 4 == 2 => i + 3,
                    _ if i % 4 == 3 => i - 3,
                    _ => i - 1,
                }
            }
        })
        .collect();
    Permutation::new(image).map_err(|e| Error::ConstructionFailed(format!("tau({n}): {e}")))
}

pub fn comb(n: usize, variant: CombVariant) -> Result<Permutation> {
    match variant {
        CombVariant::Sigma => comb_sigma(n),
        CombVariant::Tau => comb_tau(n),
    }
}

/// A comb decomposition: the spine induces a path, the teeth are pairwise
/// nonadjacent, and `matching` pairs each spine vertex with its own tooth.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CombWitness {
    pub spine: VertexSet,
    pub teeth: VertexSet,
    pub matching: BTreeMap<usize, usize>,
}

/// Recognizes combs. The teeth are the degree-one vertices, except on two
/// vertices where both ends of the single edge have degree one and vertex 1
/// is taken as the (one-vertex) spine.
pub fn is_comb(g: &PermutationGraph) -> Result<Option<CombWitness>> {
    let n = g.order();
    if n % 2 == 1 {
        return Err(Error::OddOrder(n));
    }
    if n == 0 {
        return Ok(None);
    }
    let degree = |v: usize| g.neighbors(v).expect("in range").len();
    if n == 2 {
        return Ok(g.has_edge(1, 2).then(|| CombWitness {
            spine: VertexSet::singleton(1),
            teeth: VertexSet::singleton(2),
            matching: BTreeMap::from([(1, 2)]),
        }));
    }
    let teeth: VertexSet = g.vertices().iter().filter(|&v| degree(v) == 1).collect();
    if teeth.len() != n / 2 {
        return Ok(None);
    }
    let spine = g.vertices().difference(teeth);
    let mut matching = BTreeMap::new();
    for t in teeth {
        let anchor = g.neighbors(t).expect("in range").first().expect("degree one");
        if teeth.contains(anchor) || matching.insert(anchor, t).is_some() {
            return Ok(None);
        }
    }
    // Spine must induce a path: connected, |spine| - 1 edges, max degree 2.
    let inner = |v: usize| g.neighbors(v).expect("in range").intersection(spine);
    let edges: usize = spine.iter().map(|v| inner(v).len()).sum::<usize>() / 2;
    if edges + 1 != spine.len() || spine.iter().any(|v| inner(v).len() > 2) {
        return Ok(None);
    }
    let mut reached = VertexSet::singleton(spine.first().expect("nonempty spine"));
    loop {
        let next = reached.iter().fold(reached, |acc, v| acc.union(inner(v)));
        if next == reached {
            break;
        }
        reached = next;
    }
    if reached != spine {
        return Ok(None);
    }
    Ok(Some(CombWitness { spine, teeth, matching }))
}

/// Inserts `n + 1` immediately left of the member of the canonical minimum
/// dominating set that sits furthest right in the one-line notation. The
/// result is connected with the same domination number; both are re-checked.
pub fn extend_preserving_gamma(p: &Permutation) -> Result<Permutation> {
    let g = build_graph(p)?;
    if !is_connected(&g) {
        return Err(Error::DisconnectedInput);
    }
    let before = domination_number_exact(&g);
    let pos = p.positions();
    let anchor = before
        .witness
        .iter()
        .max_by_key(|&v| pos[v - 1])
        .expect("nonempty dominating set");
    let extended = p.insert_new_max(pos[anchor - 1]);

    let h = build_graph(&extended)?;
    let after = domination_number_exact(&h).gamma;
    if !is_connected(&h) || after != before.gamma {
        return Err(Error::ConstructionFailed(format!(
            "extending {p} gave {extended} with domination number {after} (expected {})",
            before.gamma
        )));
    }
    Ok(extended)
}

/// A permutation of order `n` whose graph is connected with domination
/// number `k`, for any `1 <= k <= n/2` (and `k = 1` when `n = 1`).
///
/// Starts from the complete graph (`k = 1`), the path `[3,1,4,2]` (`k = 2`),
/// or the comb on `2k` vertices, then applies the extension until the order
/// reaches `n`.
pub fn connected_with_gamma(n: usize, k: usize) -> Result<Permutation> {
    if n == 0 || k == 0 || k > (n / 2).max(1) {
        return Err(Error::InfeasibleGamma { n, k });
    }
    let mut p = match k {
        1 => return verified(Permutation::decreasing(n), k),
        2 => Permutation::new(vec![3, 1, 4, 2]).expect("valid"),
        _ => comb_sigma(2 * k)?,
    };
    while p.len() < n {
        p = extend_preserving_gamma(&p)?;
    }
    verified(p, k)
}

fn verified(p: Permutation, k: usize) -> Result<Permutation> {
    let g = build_graph(&p)?;
    let gamma = domination_number_exact(&g).gamma;
    if !is_connected(&g) || gamma != k {
        return Err(Error::ConstructionFailed(format!("{p} has domination number {gamma}, wanted {k}")));
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::parse_permutation;

    fn p(s: &str) -> Permutation {
        parse_permutation(s).unwrap()
    }

    #[test]
    fn comb_tables() {
        assert_eq!(comb_sigma(6).unwrap(), p("3,1,4,6,2,5"));
        assert_eq!(comb_sigma(8).unwrap(), p("3,1,4,7,2,5,8,6"));
        assert_eq!(comb_tau(6).unwrap(), p("2,5,1,3,6,4"));
        assert_eq!(comb_tau(8).unwrap(), p("2,5,1,3,6,8,4,7"));
        assert!(matches!(comb_sigma(4), Err(Error::OrderTooSmall { .. })));
        assert!(matches!(comb_tau(7), Err(Error::OddOrder(7))));
    }

    /// Transcription check: each entry must satisfy exactly one displayed
    /// condition of the piecewise tables, and take that case's value.
    #[test]
    fn comb_tables_match_case_analysis() {
        for n in (6..=40).step_by(2) {
            let s = comb_sigma(n).unwrap();
            let t = comb_tau(n).unwrap();
            let last = if n % 4 == 0 { n } else { n - 2 };
            let t_last = if n % 4 == 0 { n - 2 } else { n };
            for i in 1..=n {
                let sigma_cases: [(bool, i64); 6] = [
                    (i == 1, 3),
                    (i == last, if n % 4 == 0 { n as i64 - 2 } else { n as i64 }),
                    (i > 1 && i % 4 == 1, i as i64 - 3),
                    (i % 4 == 2, i as i64 - 1),
                    (i % 4 == 3, i as i64 + 1),
                    (i < last && i % 4 == 0, i as i64 + 3),
                ];
                let tau_cases: [(bool, i64); 6] = [
                    (i == 3, 1),
                    (i == t_last, if n % 4 == 0 { n as i64 } else { n as i64 - 2 }),
                    (i % 4 == 1, i as i64 + 1),
                    (i < t_last && i % 4 == 2, i as i64 + 3),
                    (i > 3 && i % 4 == 3, i as i64 - 3),
                    (i % 4 == 0, i as i64 - 1),
                ];
                for (name, perm, cases) in [("sigma", &s, sigma_cases), ("tau", &t, tau_cases)] {
                    let hits: Vec<i64> = cases.iter().filter(|c| c.0).map(|c| c.1).collect();
                    assert_eq!(hits.len(), 1, "{name}({n}) at {i}: overlapping or missing case");
                    assert_eq!(perm.at(i) as i64, hits[0], "{name}({n}) at {i}");
                }
            }
        }
    }

    #[test]
    fn comb_recognition() {
        let g = build_graph(&comb_sigma(6).unwrap()).unwrap();
        let w = is_comb(&g).unwrap().unwrap();
        assert_eq!(w.spine.to_vec(), vec![2, 3, 6]);
        assert_eq!(w.teeth.to_vec(), vec![1, 4, 5]);
        assert_eq!(w.matching, BTreeMap::from([(2, 4), (3, 1), (6, 5)]));

        assert!(is_comb(&build_graph(&Permutation::decreasing(4)).unwrap()).unwrap().is_none());
        let w = is_comb(&build_graph(&p("2,1")).unwrap()).unwrap().unwrap();
        assert_eq!((w.spine.to_vec(), w.teeth.to_vec()), (vec![1], vec![2]));
        assert!(is_comb(&build_graph(&p("1,2")).unwrap()).unwrap().is_none());
        assert!(is_comb(&build_graph(&p("3,1,4,2")).unwrap()).unwrap().is_some());
        assert!(matches!(is_comb(&build_graph(&p("1,2,3")).unwrap()), Err(Error::OddOrder(3))));
    }

    #[test]
    fn leaves_follow_residues() {
        for n in (6..=12).step_by(2) {
            let ws = is_comb(&build_graph(&comb_sigma(n).unwrap()).unwrap()).unwrap().unwrap();
            assert!(ws.teeth.iter().all(|v| v % 4 == 0 || v % 4 == 1), "sigma({n})");
            let wt = is_comb(&build_graph(&comb_tau(n).unwrap()).unwrap()).unwrap().unwrap();
            assert!(wt.teeth.iter().all(|v| v % 4 == 2 || v % 4 == 3), "tau({n})");
        }
    }

    #[test]
    fn extension_examples() {
        assert_eq!(extend_preserving_gamma(&p("2,1")).unwrap(), p("2,3,1"));
        assert_eq!(extend_preserving_gamma(&p("3,1,4,2")).unwrap(), p("3,1,4,5,2"));
        assert_eq!(extend_preserving_gamma(&p("1,3,2")), Err(Error::DisconnectedInput));
    }

    #[test]
    fn existence_examples() {
        assert_eq!(connected_with_gamma(5, 2).unwrap(), p("3,1,4,5,2"));
        assert_eq!(connected_with_gamma(6, 3).unwrap(), p("3,1,4,6,2,5"));
        assert_eq!(connected_with_gamma(1, 1).unwrap(), p("1"));
        assert_eq!(connected_with_gamma(5, 3), Err(Error::InfeasibleGamma { n: 5, k: 3 }));
        assert_eq!(connected_with_gamma(5, 0), Err(Error::InfeasibleGamma { n: 5, k: 0 }));
    }
}
