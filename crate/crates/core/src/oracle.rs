//! Exhaustive ground truth over `S_n`.
//!
//! The rank space `0..n!` is cut into contiguous chunks; each chunk unranks
//! its first permutation and walks forward in lexicographic order. Per-chunk
//! results are merged in chunk order, so the output does not depend on how
//! many workers ran.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::counting::{CountKind, CountTable};
use crate::domination::{
    count_singleton_dominators, domination_number_exact, is_dominating, is_efficient_dominating,
    quick_rule_position_ends, quick_rule_value_ends, singleton_dominators,
};
use crate::error::{Error, Result};
use crate::graph::{build_graph, permutation_is_connected};
use crate::heuristic::heuristic_dominating_set;
use crate::perm::{factorial_u64, Permutation};
use crate::vertex_set::VertexSet;

pub const DEFAULT_CAP: usize = 9;
pub const HARD_CAP: usize = 11;

#[derive(Clone, Copy, Debug)]
pub struct Oracle {
    cap: usize,
    jobs: usize,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle { cap: DEFAULT_CAP, jobs: 1 }
    }
}

fn as_strings<S: Serializer>(map: &BTreeMap<usize, u64>, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_map(map.iter().map(|(k, v)| (k, v.to_string())))
}

/// Exact tallies over all of `S_n`. Maps hold nonzero entries only.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TallyReport {
    pub n: usize,
    /// Domination number → count.
    #[serde(serialize_with = "as_strings")]
    pub g: BTreeMap<usize, u64>,
    /// Same, connected graphs only.
    #[serde(serialize_with = "as_strings")]
    pub c: BTreeMap<usize, u64>,
    /// Same, disconnected graphs only.
    #[serde(serialize_with = "as_strings")]
    pub d: BTreeMap<usize, u64>,
    /// Number of singleton dominating sets → count.
    #[serde(serialize_with = "as_strings")]
    pub f1: BTreeMap<usize, u64>,
    /// Number of strong fixed points of the permutation → count.
    #[serde(serialize_with = "as_strings")]
    pub st: BTreeMap<usize, u64>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl TallyReport {
    fn empty(n: usize) -> Self {
        TallyReport {
            n,
            g: BTreeMap::new(),
            c: BTreeMap::new(),
            d: BTreeMap::new(),
            f1: BTreeMap::new(),
            st: BTreeMap::new(),
            elapsed: Duration::ZERO,
        }
    }

    fn merge(mut self, other: TallyReport) -> TallyReport {
        for (mine, theirs) in [
            (&mut self.g, other.g),
            (&mut self.c, other.c),
            (&mut self.d, other.d),
            (&mut self.f1, other.f1),
            (&mut self.st, other.st),
        ] {
            for (k, v) in theirs {
                *mine.entry(k).or_default() += v;
            }
        }
        self
    }

    pub fn total(&self) -> u64 {
        self.g.values().sum()
    }

    /// Checks the internal identities every report must satisfy: both
    /// distributions sum to `n!`, `g = c + d` pointwise, and the strong fixed
    /// point distribution equals the singleton-dominator distribution.
    pub fn identities_hold(&self) -> bool {
        let fact = factorial_u64(self.n);
        let keys = self.g.keys().chain(self.c.keys()).chain(self.d.keys());
        let split_ok = keys.into_iter().all(|k| {
            self.g.get(k).copied().unwrap_or(0)
                == self.c.get(k).copied().unwrap_or(0) + self.d.get(k).copied().unwrap_or(0)
        });
        self.total() == fact && self.f1.values().sum::<u64>() == fact && split_ok && self.st == self.f1
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct PairTally {
    pub nonadjacent: u64,
    pub adjacent: u64,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct HeuristicQuality {
    pub n: usize,
    pub total: u64,
    /// Permutations meeting either quick-rule hypothesis.
    pub excluded: u64,
    /// Non-excluded permutations where the heuristic hit the domination number.
    pub optimal: u64,
    /// Outputs that dominate (all of them, if the heuristic is sound).
    pub dominating: u64,
    /// Outputs that needed the greedy repair step.
    pub repaired: u64,
}

impl HeuristicQuality {
    pub fn optimal_rate(&self) -> f64 {
        let considered = self.total - self.excluded;
        if considered == 0 {
            1.0
        } else {
            self.optimal as f64 / considered as f64
        }
    }

    fn merge(self, o: HeuristicQuality) -> HeuristicQuality {
        HeuristicQuality {
            n: self.n,
            total: self.total + o.total,
            excluded: self.excluded + o.excluded,
            optimal: self.optimal + o.optimal,
            dominating: self.dominating + o.dominating,
            repaired: self.repaired + o.repaired,
        }
    }
}

impl Oracle {
    pub fn new() -> Self {
        Self::default()
    }

    /// Raises or lowers the enumeration cap; never above [`HARD_CAP`].
    pub fn with_cap(mut self, cap: usize) -> Result<Self> {
        if cap > HARD_CAP {
            return Err(Error::OrderCapExceeded { n: cap, cap: HARD_CAP });
        }
        self.cap = cap;
        Ok(self)
    }

    pub fn with_jobs(mut self, jobs: usize) -> Self {
        self.jobs = jobs.max(1);
        self
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn jobs(&self) -> usize {
        self.jobs
    }

    fn check(&self, n: usize) -> Result<()> {
        if n > self.cap {
            Err(Error::OrderCapExceeded { n, cap: self.cap })
        } else {
            Ok(())
        }
    }

    /// Folds `step` over all of `S_n`, chunk by chunk, merging chunk results
    /// in rank order.
    pub fn fold<T, I, S, M>(&self, n: usize, init: I, step: S, merge: M) -> Result<T>
    where
        T: Send,
        I: Fn() -> T + Sync,
        S: Fn(&mut T, &Permutation) + Sync,
        M: Fn(T, T) -> T,
    {
        self.check(n)?;
        let total = factorial_u64(n);
        let chunks = (self.jobs as u64 * 4).min(total).max(1);
        let bounds: Vec<(u64, u64)> =
            (0..chunks).map(|i| (total * i / chunks, total * (i + 1) / chunks)).collect();
        let run_chunk = |&(lo, hi): &(u64, u64)| {
            let mut acc = init();
            if lo < hi {
                let mut p = Permutation::from_lex_rank(n, lo);
                step(&mut acc, &p);
                for _ in lo + 1..hi {
                    p.next_lex();
                    step(&mut acc, &p);
                }
            }
            acc
        };
        let parts: Vec<T> = if self.jobs == 1 {
            bounds.iter().map(run_chunk).collect()
        } else {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(self.jobs)
                .build()
                .expect("thread pool");
            pool.install(|| bounds.par_iter().map(run_chunk).collect())
        };
        let mut iter = parts.into_iter();
        let first = iter.next().expect("at least one chunk");
        Ok(iter.fold(first, merge))
    }

    pub fn full_tally(&self, n: usize) -> Result<TallyReport> {
        if n == 0 {
            return Err(Error::IndexOutOfRange("the oracle needs n >= 1".into()));
        }
        let start = Instant::now();
        let mut report = self.fold(
            n,
            || TallyReport::empty(n),
            |t, p| {
                let g = build_graph(p).expect("n within cap");
                let gamma = domination_number_exact(&g).gamma;
                *t.g.entry(gamma).or_default() += 1;
                let side = if permutation_is_connected(p) { &mut t.c } else { &mut t.d };
                *side.entry(gamma).or_default() += 1;
                *t.f1.entry(count_singleton_dominators(&g)).or_default() += 1;
                *t.st.entry(p.strong_fixed_points().len()).or_default() += 1;
            },
            TallyReport::merge,
        )?;
        report.elapsed = start.elapsed();
        Ok(report)
    }

    /// For each vertex `k`, the number of graphs in which `{k}` dominates.
    pub fn singleton_dominator_tally(&self, n: usize) -> Result<Vec<u64>> {
        self.fold(
            n,
            || vec![0u64; n + 1],
            |acc, p| {
                let g = build_graph(p).expect("n within cap");
                for k in singleton_dominators(&g) {
                    acc[k] += 1;
                }
            },
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        )
    }

    pub fn pair_tally(&self, n: usize, u: usize, v: usize) -> Result<PairTally> {
        if u == 0 || u >= v || v > n {
            return Err(Error::IndexOutOfRange(format!("need 1 <= u < v <= n, got n={n}, u={u}, v={v}")));
        }
        Ok(self.all_pair_tallies(n)?[&(u, v)])
    }

    /// Pair tallies for every `u < v` in one pass over `S_n`.
    pub fn all_pair_tallies(&self, n: usize) -> Result<BTreeMap<(usize, usize), PairTally>> {
        let pairs: Vec<(usize, usize)> = (1..=n).flat_map(|u| (u + 1..=n).map(move |v| (u, v))).collect();
        let counts = self.fold(
            n,
            || vec![PairTally::default(); pairs.len()],
            |acc, p| {
                let g = build_graph(p).expect("n within cap");
                for (slot, &(u, v)) in acc.iter_mut().zip(&pairs) {
                    let d: VertexSet = [u, v].into_iter().collect();
                    if is_dominating(&g, d) {
                        if g.has_edge(u, v) {
                            slot.adjacent += 1;
                        } else {
                            slot.nonadjacent += 1;
                        }
                    }
                }
            },
            |mut a, b| {
                for (x, y) in a.iter_mut().zip(b) {
                    x.adjacent += y.adjacent;
                    x.nonadjacent += y.nonadjacent;
                }
                a
            },
        )?;
        Ok(pairs.into_iter().zip(counts).collect())
    }

    pub fn efficient_tally(&self, n: usize, a: &[usize]) -> Result<u64> {
        if a.is_empty() || a.iter().any(|&v| v == 0 || v > n) {
            return Err(Error::IndexOutOfRange(format!("vertices {a:?} must lie in 1..={n}")));
        }
        let d: VertexSet = a.iter().copied().collect();
        self.fold(
            n,
            || 0u64,
            |acc, p| {
                if is_efficient_dominating(&build_graph(p).expect("n within cap"), d) {
                    *acc += 1;
                }
            },
            |a, b| a + b,
        )
    }

    pub fn heuristic_quality(&self, n: usize) -> Result<HeuristicQuality> {
        if n > 8 {
            return Err(Error::OrderCapExceeded { n, cap: 8 });
        }
        self.fold(
            n,
            || HeuristicQuality { n, ..Default::default() },
            |q, p| {
                let g = build_graph(p).expect("n within cap");
                let h = heuristic_dominating_set(&g);
                q.total += 1;
                if is_dominating(&g, h.witness) {
                    q.dominating += 1;
                }
                if h.repaired {
                    q.repaired += 1;
                }
                if quick_rule_value_ends(p).is_some() || quick_rule_position_ends(p).is_some() {
                    q.excluded += 1;
                } else if h.gamma == domination_number_exact(&g).gamma {
                    q.optimal += 1;
                }
            },
            HeuristicQuality::merge,
        )
    }

    /// Every permutation of `S_n` satisfying `pred`, in lexicographic order.
    pub fn find<P>(&self, n: usize, pred: P) -> Result<Vec<Permutation>>
    where
        P: Fn(&Permutation) -> bool + Sync,
    {
        self.fold(
            n,
            Vec::new,
            |acc, p| {
                if pred(p) {
                    acc.push(p.clone());
                }
            },
            |mut a, b| {
                a.extend(b);
                a
            },
        )
    }
}

/// c(m, k) for every order covered by the given reports.
pub fn connected_table<'a>(reports: impl IntoIterator<Item = &'a TallyReport>) -> CountTable {
    let mut table = CountTable::new(CountKind::C);
    for r in reports {
        table.cover(r.n);
        for (&k, &v) in &r.c {
            table.insert(vec![r.n, k], v.into());
        }
    }
    table
}

pub fn full_tally(n: usize) -> Result<TallyReport> {
    Oracle::new().full_tally(n)
}

pub fn pair_tally(n: usize, u: usize, v: usize) -> Result<PairTally> {
    Oracle::new().pair_tally(n, u, v)
}

pub fn efficient_tally(n: usize, a: &[usize]) -> Result<u64> {
    Oracle::new().efficient_tally(n, a)
}

pub fn heuristic_quality(n: usize) -> Result<HeuristicQuality> {
    Oracle::new().heuristic_quality(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn map(entries: &[(usize, u64)]) -> BTreeMap<usize, u64> {
        entries.iter().copied().collect()
    }

    #[test]
    fn tally_s3() {
        let t = full_tally(3).unwrap();
        assert_eq!(t.g, map(&[(1, 3), (2, 2), (3, 1)]));
        assert_eq!(t.c, map(&[(1, 3)]));
        assert_eq!(t.d, map(&[(2, 2), (3, 1)]));
        assert_eq!(t.f1, map(&[(0, 3), (1, 2), (3, 1)]));
        assert!(t.identities_hold());
    }

    #[test]
    fn tally_s1_s2() {
        let t = full_tally(1).unwrap();
        assert_eq!((t.g.clone(), t.c.clone(), t.st.clone()), (map(&[(1, 1)]), map(&[(1, 1)]), map(&[(1, 1)])));
        let t = full_tally(2).unwrap();
        assert_eq!(t.g, map(&[(1, 1), (2, 1)]));
        assert_eq!(t.f1, map(&[(0, 1), (2, 1)]));
    }

    #[test]
    fn worker_count_does_not_change_results() {
        let one = Oracle::new().full_tally(6).unwrap();
        let many = Oracle::new().with_jobs(3).full_tally(6).unwrap();
        assert_eq!(one, TallyReport { elapsed: one.elapsed, ..many });
    }

    #[test]
    fn pair_and_efficient_tallies() {
        assert_eq!(pair_tally(3, 1, 3).unwrap(), PairTally { nonadjacent: 2, adjacent: 3 });
        assert_eq!(pair_tally(2, 1, 2).unwrap(), PairTally { nonadjacent: 1, adjacent: 1 });
        assert_eq!(efficient_tally(4, &[1, 4]).unwrap(), 6);
        assert_eq!(efficient_tally(3, &[1, 2, 3]).unwrap(), 1);
        assert_eq!(efficient_tally(4, &[1, 2, 3, 4]).unwrap(), 1);
    }

    #[test]
    fn caps() {
        assert!(matches!(full_tally(10), Err(Error::OrderCapExceeded { n: 10, cap: 9 })));
        assert!(Oracle::new().with_cap(12).is_err());
        assert!(matches!(heuristic_quality(9), Err(Error::OrderCapExceeded { .. })));
    }

    #[test]
    fn heuristic_small() {
        let q = heuristic_quality(3).unwrap();
        assert_eq!((q.total, q.dominating), (6, 6));
        let q = heuristic_quality(4).unwrap();
        assert_eq!(q.dominating, 24);
    }
}
