//! Exact counts of permutation graphs with prescribed domination data.
//!
//! Every count here is over `S_n` (equivalently over labeled permutation
//! graphs on `1..=n`, since a permutation is determined by its inversion
//! set) and is computed with arbitrary-precision integers.

mod combinatorics;
mod table;

use num_bigint::BigUint;
use num_traits::{One, Zero};

pub use combinatorics::{binomial, factorial, multinomial, Compositions, Factorials};
pub use table::{parse_count_table_csv, CountKind, CountTable};

/// Serializes a big integer as a decimal string.
pub fn serialize_decimal<S: serde::Serializer>(v: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

use crate::error::{Error, Result};

/// Graphs on `n` vertices in which `{k}` alone dominates: `(n-k)! (k-1)!`.
pub fn singleton_dom_count(n: usize, k: usize) -> Result<BigUint> {
    if k == 0 || k > n {
        return Err(Error::IndexOutOfRange(format!("need 1 <= k <= n, got n={n}, k={k}")));
    }
    Ok(factorial(n - k) * factorial(k - 1))
}

/// Memo table for the domination-number-one recursions.
///
/// `g1[n]` counts graphs on `n` vertices with a dominating vertex, and
/// `f1[n][t]` those with exactly `t` dominating vertices. Filled bottom-up:
///
/// ```text
/// g(0,1) = 0,   g(n,1) = Σ_{k=1..n} (n-k)! f(k-1,1,0)
/// f(n,1,0) = n! - g(n,1)
/// f(n,1,t) = Σ_{k=1..n-t+1} f(n-k,1,t-1) f(k-1,1,0)      (1 <= t <= n)
/// ```
#[derive(Clone, Debug)]
pub struct SingletonTable {
    g1: Vec<BigUint>,
    f1: Vec<Vec<BigUint>>,
}

impl SingletonTable {
    pub fn new(max_n: usize) -> Self {
        let fact = Factorials::up_to(max_n);
        let mut g1: Vec<BigUint> = Vec::with_capacity(max_n + 1);
        let mut f1: Vec<Vec<BigUint>> = Vec::with_capacity(max_n + 1);
        for n in 0..=max_n {
            let g = (1..=n).fold(BigUint::zero(), |acc, k| acc + fact.get(n - k) * &f1[k - 1][0]);
            let mut row = vec![fact.get(n) - &g];
            for t in 1..=n {
                let f = (1..=n - t + 1).fold(BigUint::zero(), |acc, k| {
                    let rest = f1[n - k].get(t - 1).cloned().unwrap_or_default();
                    acc + rest * &f1[k - 1][0]
                });
                row.push(f);
            }
            g1.push(g);
            f1.push(row);
        }
        SingletonTable { g1, f1 }
    }

    pub fn max_n(&self) -> usize {
        self.g1.len() - 1
    }

    pub fn g1(&self, n: usize) -> &BigUint {
        &self.g1[n]
    }

    /// Zero for `t > n`.
    pub fn f1(&self, n: usize, t: usize) -> BigUint {
        self.f1[n].get(t).cloned().unwrap_or_default()
    }

    pub fn f1_row(&self, n: usize) -> &[BigUint] {
        &self.f1[n]
    }
}

pub fn g1(n: usize) -> BigUint {
    SingletonTable::new(n).g1(n).clone()
}

pub fn f1(n: usize, t: usize) -> BigUint {
    SingletonTable::new(n).f1(n, t)
}

fn check_pair(n: usize, u: usize, v: usize) -> Result<()> {
    if u == 0 || u >= v || v > n {
        return Err(Error::IndexOutOfRange(format!("need 1 <= u < v <= n, got n={n}, u={u}, v={v}")));
    }
    Ok(())
}

/// Graphs on `n` vertices dominated by `{u, v}` with `u`, `v` not adjacent:
///
/// ```text
/// Σ (y1+z2)! (x1+z1)! (x2+y2)! C(u-1,x1) C(v-u-1,y1) C(n-v,z1)
/// over x1+x2 = u-1, y1+y2 = v-u-1, z1+z2 = n-v
/// ```
pub fn pair_count_nonadjacent(n: usize, u: usize, v: usize) -> Result<BigUint> {
    check_pair(n, u, v)?;
    let f = Factorials::up_to(n);
    let (below, between, above) = (u - 1, v - u - 1, n - v);
    let mut total = BigUint::zero();
    for x1 in 0..=below {
        let x2 = below - x1;
        for y1 in 0..=between {
            let y2 = between - y1;
            for z1 in 0..=above {
                let z2 = above - z1;
                total += f.get(y1 + z2) * f.get(x1 + z1) * f.get(x2 + y2)
                    * f.binomial(below, x1)
                    * f.binomial(between, y1)
                    * f.binomial(above, z1);
            }
        }
    }
    Ok(total)
}

/// Graphs on `n` vertices dominated by `{u, v}` with `u`, `v` adjacent:
///
/// ```text
/// Σ (x1+z2)! (z1+x3+y1)! (y2+x2)! C(v-u-1,x1) C(v-u-1-x1,x2) C(u-1,y1) C(n-v,z1)
/// over x1+x2+x3 = v-u-1, y1+y2 = u-1, z1+z2 = n-v
/// ```
pub fn pair_count_adjacent(n: usize, u: usize, v: usize) -> Result<BigUint> {
    check_pair(n, u, v)?;
    let f = Factorials::up_to(n);
    let (below, between, above) = (u - 1, v - u - 1, n - v);
    let mut total = BigUint::zero();
    for xs in Compositions::new(between, 3) {
        let (x1, x2, x3) = (xs[0], xs[1], xs[2]);
        let choose_x = f.binomial(between, x1) * f.binomial(between - x1, x2);
        for y1 in 0..=below {
            let y2 = below - y1;
            for z1 in 0..=above {
                let z2 = above - z1;
                total += f.get(x1 + z2) * f.get(z1 + x3 + y1) * f.get(y2 + x2)
                    * &choose_x
                    * f.binomial(below, y1)
                    * f.binomial(above, z1);
            }
        }
    }
    Ok(total)
}

/// All graphs on `n` vertices dominated by `{u, v}`.
pub fn pair_count(n: usize, u: usize, v: usize) -> Result<BigUint> {
    Ok(pair_count_nonadjacent(n, u, v)? + pair_count_adjacent(n, u, v)?)
}

/// Graphs on `n` vertices efficiently dominated by the strictly increasing
/// set `a`.
///
/// Write `g_i = a_{i+1} - a_i - 1` for the gaps and split each gap as
/// `x_{i,1} + x_{i,2} = g_i`. The one-line notation is then a block of
/// `x_{1,1}` values, `a_1`, a block, `a_2`, ..., `a_k`, and a final block of
/// `x_{k-1,2}` values; each block may be arranged freely, which gives one
/// factorial per block and one binomial per gap. For a single vertex the
/// count is the number of graphs it dominates alone.
pub fn efficient_dom_count(n: usize, a: &[usize]) -> Result<BigUint> {
    if a.is_empty() {
        return Err(Error::IndexOutOfRange("the dominating set is empty".into()));
    }
    if a.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::NotSorted(a.to_vec()));
    }
    if a[0] == 0 || a[a.len() - 1] > n {
        return Err(Error::IndexOutOfRange(format!("vertices {a:?} must lie in 1..={n}")));
    }
    let k = a.len();
    if k == 1 {
        return singleton_dom_count(n, a[0]);
    }
    let f = Factorials::up_to(n);
    let gaps: Vec<usize> = a.windows(2).map(|w| w[1] - w[0] - 1).collect();
    let before_first = a[0] - 1;
    let after_last = n - a[k - 1];

    let mut total = BigUint::zero();
    match k {
        2 => {
            for x1 in 0..=gaps[0] {
                let x2 = gaps[0] - x1;
                total += f.get(x1) * f.get(before_first + after_last) * f.get(x2) * f.binomial(gaps[0], x1);
            }
        }
        3 => {
            for x11 in 0..=gaps[0] {
                let x12 = gaps[0] - x11;
                for x21 in 0..=gaps[1] {
                    let x22 = gaps[1] - x21;
                    total += f.get(x11)
                        * f.get(before_first + x21)
                        * f.get(after_last + x12)
                        * f.get(x22)
                        * f.binomial(gaps[0], x11)
                        * f.binomial(gaps[1], x21);
                }
            }
        }
        _ => {
            // first[i] = x_{i+1,1}, second[i] = x_{i+1,2} (0-based gap index).
            let mut first = vec![0; k - 1];
            loop {
                let second: Vec<usize> = gaps.iter().zip(&first).map(|(g, x)| g - x).collect();
                let mut term = f.get(first[0])
                    * f.get(before_first + first[1])
                    * f.get(second[k - 2])
                    * f.get(after_last + second[k - 3]);
                // Interior blocks: the block between a_{i+1} and a_{i+2}
                // holds x_{i,2} + x_{i+2,1} values, for i = 1..=k-3.
                for i in 0..k - 3 {
                    term *= f.get(second[i] + first[i + 2]);
                }
                for (g, x) in gaps.iter().zip(&first) {
                    term *= f.binomial(*g, *x);
                }
                total += term;
                // Odometer over every split of every gap.
                let mut idx = 0;
                loop {
                    if idx == k - 1 {
                        return Ok(total);
                    }
                    if first[idx] < gaps[idx] {
                        first[idx] += 1;
                        break;
                    }
                    first[idx] = 0;
                    idx += 1;
                }
            }
        }
    }
    Ok(total)
}

/// Disconnected graphs on `n` vertices with domination number `k`, from the
/// counts `c(m, j)` of connected graphs of smaller order:
///
/// ```text
/// d(n,k) = Σ_{r=2..k} Σ_{l=1..r} Σ_{r_1+..+r_l = r} Σ_{n_1<..<n_l, Σ r_i n_i = n}
///          Σ_{k_1+..+k_l = k, k_i >= r_i}
///          (r; r_1,..,r_l) Π_i Σ_{k_{i,1}+..+k_{i,r_i} = k_i} Π_t c(n_i, k_{i,t})
/// ```
///
/// A graph with `r` components has `r` distinct component sizes grouped as
/// `r_i` components of size `n_i`; the multinomial places the groups along
/// the one-line notation and each component contributes a connected graph of
/// its own order.
pub fn disconnected_count(n: usize, k: usize, c: &CountTable) -> Result<BigUint> {
    if k == 0 {
        return Err(Error::IndexOutOfRange("domination number must be at least 1".into()));
    }
    let mut total = BigUint::zero();
    for r in 2..=k {
        for l in 1..=r {
            for rs in Compositions::bounded_below(r, l, 1) {
                let mut sizes = Vec::with_capacity(l);
                for_each_increasing_sizes(&rs, n, 1, &mut sizes, &mut |sizes| {
                    for ks in Compositions::bounded_below(k, l, 0) {
                        if ks.iter().zip(&rs).any(|(ki, ri)| ki < ri) {
                            continue;
                        }
                        let mut term = multinomial(&rs);
                        for i in 0..l {
                            term *= same_size_groups(c, sizes[i], rs[i], ks[i])?;
                            if term.is_zero() {
                                break;
                            }
                        }
                        total += term;
                    }
                    Ok(())
                })?;
            }
        }
    }
    Ok(total)
}

/// Calls `visit` with every strictly increasing `n_1 < .. < n_l` (all at least
/// `min`) such that `Σ rs[i] * n_i = remaining`.
fn for_each_increasing_sizes(
    rs: &[usize],
    remaining: usize,
    min: usize,
    sizes: &mut Vec<usize>,
    visit: &mut dyn FnMut(&[usize]) -> Result<()>,
) -> Result<()> {
    let i = sizes.len();
    if i == rs.len() {
        return if remaining == 0 { visit(sizes) } else { Ok(()) };
    }
    // Later sizes are strictly larger, so they need at least this much room.
    let tail_floor = |s: usize| -> usize { rs[i..].iter().enumerate().map(|(j, r)| r * (s + j)).sum() };
    let mut s = min;
    while tail_floor(s) <= remaining {
        sizes.push(s);
        for_each_increasing_sizes(rs, remaining - rs[i] * s, s + 1, sizes, visit)?;
        sizes.pop();
        s += 1;
    }
    Ok(())
}

/// Σ over `k_1 + .. + k_q = total` (each at least 1) of Π c(m, k_t): ordered
/// choices of `q` connected components of order `m`.
fn same_size_groups(c: &CountTable, m: usize, q: usize, total: usize) -> Result<BigUint> {
    let mut sum = BigUint::zero();
    for ks in Compositions::bounded_below(total, q, 1) {
        let mut prod = BigUint::one();
        for &kt in &ks {
            prod *= c.pair(m, kt)?;
            if prod.is_zero() {
                break;
            }
        }
        sum += prod;
    }
    Ok(sum)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn singleton_examples() {
        assert_eq!(singleton_dom_count(4, 2).unwrap(), big(2));
        assert_eq!(singleton_dom_count(5, 3).unwrap(), big(4));
        for n in 1..8 {
            assert_eq!(singleton_dom_count(n, 1).unwrap(), factorial(n - 1));
        }
        assert!(singleton_dom_count(3, 0).is_err());
        assert!(singleton_dom_count(3, 4).is_err());
    }

    #[test]
    fn g1_examples() {
        assert_eq!(g1(0), big(0));
        assert_eq!(g1(3), big(3));
        assert_eq!(g1(4), big(10));
        assert_eq!(g1(5), big(43));
    }

    #[test]
    fn f1_examples() {
        assert_eq!(f1(2, 2), big(1));
        assert_eq!(f1(2, 1), big(0));
        assert_eq!(f1(3, 0), big(3));
        assert_eq!(f1(0, 0), big(1));
        assert_eq!(f1(3, 7), big(0));
    }

    #[test]
    fn singleton_table_identities() {
        let t = SingletonTable::new(25);
        for n in 0..=25 {
            let row_sum = t.f1_row(n).iter().fold(BigUint::zero(), |a, b| a + b);
            assert_eq!(row_sum, factorial(n), "row {n}");
            let positive = t.f1_row(n).iter().skip(1).fold(BigUint::zero(), |a, b| a + b);
            assert_eq!(&positive, t.g1(n));
        }
    }

    #[test]
    fn pair_examples() {
        assert_eq!(pair_count_nonadjacent(2, 1, 2).unwrap(), big(1));
        assert_eq!(pair_count_nonadjacent(3, 1, 3).unwrap(), big(2));
        assert_eq!(pair_count_nonadjacent(3, 1, 2).unwrap(), big(2));
        assert_eq!(pair_count_adjacent(2, 1, 2).unwrap(), big(1));
        assert_eq!(pair_count_adjacent(3, 1, 3).unwrap(), big(3));
        assert_eq!(pair_count_adjacent(3, 2, 3).unwrap(), big(2));
        assert_eq!(pair_count(2, 1, 2).unwrap(), big(2));
        assert_eq!(pair_count(3, 1, 3).unwrap(), big(5));
        assert!(pair_count(3, 2, 2).is_err());
        assert!(pair_count(3, 0, 2).is_err());
        assert!(pair_count(3, 1, 4).is_err());
    }

    #[test]
    fn efficient_examples() {
        assert_eq!(efficient_dom_count(4, &[1, 4]).unwrap(), big(6));
        assert_eq!(efficient_dom_count(3, &[1, 2, 3]).unwrap(), big(1));
        assert_eq!(efficient_dom_count(4, &[1, 2, 3, 4]).unwrap(), big(1));
        assert_eq!(efficient_dom_count(5, &[3]).unwrap(), singleton_dom_count(5, 3).unwrap());
        assert!(matches!(efficient_dom_count(4, &[3, 1]), Err(Error::NotSorted(_))));
        assert!(matches!(efficient_dom_count(4, &[1, 5]), Err(Error::IndexOutOfRange(_))));
        assert!(matches!(efficient_dom_count(4, &[]), Err(Error::IndexOutOfRange(_))));
    }

    fn connected_table() -> CountTable {
        // c(m, j) for m <= 3, from hand enumeration of S_1..S_3.
        let mut c = CountTable::new(CountKind::C);
        c.insert(vec![1, 1], big(1));
        c.insert(vec![2, 1], big(1));
        c.insert(vec![3, 1], big(3));
        c
    }

    #[test]
    fn disconnected_examples() {
        let c = connected_table();
        assert_eq!(disconnected_count(2, 2, &c).unwrap(), big(1));
        assert_eq!(disconnected_count(3, 2, &c).unwrap(), big(2));
        assert_eq!(disconnected_count(4, 2, &c).unwrap(), big(7));
        assert_eq!(disconnected_count(3, 1, &c).unwrap(), big(0));
        assert!(matches!(disconnected_count(10, 2, &c), Err(Error::MissingTableEntry { .. })));
    }
}
