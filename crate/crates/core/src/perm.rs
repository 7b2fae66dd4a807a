//! Permutations in one-line notation.
//!
//! Values and positions are 1-indexed at the interface: `p.at(1)` is the first
//! entry of the one-line notation and every value lies in `1..=n`.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    /// Builds a permutation from its one-line notation, checking that it is a
    /// bijection on `1..=n`. The empty sequence is accepted here (it is the
    /// base case of several recursions); [`parse_permutation`] rejects it.
    pub fn new(image: Vec<usize>) -> Result<Self> {
        let n = image.len();
        let mut seen = vec![false; n + 1];
        for &v in &image {
            if v == 0 || v > n {
                return Err(Error::NotABijection { n, detail: format!("value {v} is out of range") });
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::NotABijection { n, detail: format!("value {v} appears twice") });
            }
        }
        Ok(Permutation { image })
    }

    pub fn empty() -> Self {
        Permutation { image: Vec::new() }
    }

    pub fn identity(n: usize) -> Self {
        Permutation { image: (1..=n).collect() }
    }

    /// `[n, n-1, ..., 1]`, whose graph is complete.
    pub fn decreasing(n: usize) -> Self {
        Permutation { image: (1..=n).rev().collect() }
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    /// π(i) for a 1-indexed position `i`.
    pub fn at(&self, i: usize) -> usize {
        self.image[i - 1]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.image
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.image
    }

    /// `positions()[v - 1]` is π⁻¹(v).
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.len()];
        for (i, &v) in self.image.iter().enumerate() {
            pos[v - 1] = i + 1;
        }
        pos
    }

    pub fn inverse(&self) -> Permutation {
        Permutation { image: self.positions() }
    }

    /// The one-line notation read backwards.
    pub fn reverse(&self) -> Permutation {
        Permutation { image: self.image.iter().rev().copied().collect() }
    }

    /// Values `k` such that every smaller value sits to the left of `k` and
    /// every larger value to its right, in increasing order.
    pub fn strong_fixed_points(&self) -> Vec<usize> {
        let pos = self.positions();
        let n = self.len();
        (1..=n)
            .filter(|&k| {
                let pk = pos[k - 1];
                (1..k).all(|j| pos[j - 1] < pk) && (k + 1..=n).all(|i| pos[i - 1] > pk)
            })
            .collect()
    }

    /// Inserts `value` so that it ends up at 1-indexed position `at`, shifting
    /// later entries right. Used by the domination-preserving extension, which
    /// always inserts `n + 1`.
    pub(crate) fn insert_new_max(&self, at: usize) -> Permutation {
        let mut image = self.image.clone();
        image.insert(at - 1, self.len() + 1);
        Permutation { image }
    }

    /// Rank in lexicographic order of `S_n`, counting from 0. Requires
    /// `n <= 20` so that `n!` fits in a `u64`.
    pub fn lex_rank(&self) -> u64 {
        let n = self.len();
        assert!(n <= 20, "lexicographic ranks need n <= 20");
        let mut used = vec![false; n + 1];
        let mut rank = 0u64;
        for (i, &v) in self.image.iter().enumerate() {
            let smaller_unused = (1..v).filter(|&u| !used[u]).count() as u64;
            rank += smaller_unused * factorial_u64(n - 1 - i);
            used[v] = true;
        }
        rank
    }

    /// Inverse of [`Permutation::lex_rank`].
    pub fn from_lex_rank(n: usize, mut rank: u64) -> Permutation {
        assert!(n <= 20, "lexicographic ranks need n <= 20");
        assert!(rank < factorial_u64(n), "rank {rank} out of range for S_{n}");
        let mut pool: Vec<usize> = (1..=n).collect();
        let mut image = Vec::with_capacity(n);
        for i in (0..n).rev() {
            let f = factorial_u64(i);
            let idx = (rank / f) as usize;
            rank %= f;
            image.push(pool.remove(idx));
        }
        Permutation { image }
    }

    /// Advances to the lexicographic successor in place; returns `false`
    /// (leaving `self` unchanged) when already at the last permutation.
    pub fn next_lex(&mut self) -> bool {
        let a = &mut self.image;
        if a.len() < 2 {
            return false;
        }
        let mut i = a.len() - 1;
        while i > 0 && a[i - 1] >= a[i] {
            i -= 1;
        }
        if i == 0 {
            return false;
        }
        let mut j = a.len() - 1;
        while a[j] <= a[i - 1] {
            j -= 1;
        }
        a.swap(i - 1, j);
        a[i..].reverse();
        true
    }
}

pub(crate) fn factorial_u64(n: usize) -> u64 {
    (1..=n as u64).product()
}

/// All of `S_n` in lexicographic order.
pub fn all_permutations(n: usize) -> Lexicographic {
    Lexicographic { next: Some(Permutation::identity(n)) }
}

pub struct Lexicographic {
    next: Option<Permutation>,
}

impl Iterator for Lexicographic {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        if succ.next_lex() {
            self.next = Some(succ);
        }
        Some(current)
    }
}

/// Comma-separated decimal integers, optionally wrapped in one of the given
/// delimiter pairs, with arbitrary whitespace around tokens.
pub(crate) fn parse_integer_list(text: &str, delimiters: &[(char, char)]) -> Result<Vec<usize>> {
    let unbalanced = || Error::Parse { token: text.trim().to_string(), reason: "unbalanced bracket".into() };
    let mut body = text.trim();
    if let Some(&(_, close)) = delimiters.iter().find(|(open, _)| body.starts_with(*open)) {
        body = body[1..].strip_suffix(close).ok_or_else(unbalanced)?;
    } else if delimiters.iter().any(|&(_, close)| body.ends_with(close)) {
        return Err(unbalanced());
    }
    let body = body.trim();
    if body.is_empty() {
        return Err(Error::EmptyInput);
    }
    body.split(',')
        .map(|tok| {
            let tok = tok.trim();
            tok.parse::<usize>()
                .map_err(|e| Error::Parse { token: tok.to_string(), reason: e.to_string() })
        })
        .collect()
}

/// Parses one-line notation: comma-separated decimal integers, optionally
/// wrapped in `[` `]`, with arbitrary whitespace around tokens.
pub fn parse_permutation(text: &str) -> Result<Permutation> {
    Permutation::new(parse_integer_list(text, &[('[', ']')])?)
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_permutation(s)
    }
}

/// Bracketless, comma-separated one-line notation.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.image.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        parse_permutation(s).unwrap()
    }

    #[test]
    fn parse_examples() {
        let q = p("3,1,2,5,4");
        assert_eq!(q.at(1), 3);
        assert_eq!(q.at(5), 4);
        assert_eq!(p("[1]"), Permutation::identity(1));
        assert_eq!(p(" [ 3, 1 ,2 ] "), Permutation::new(vec![3, 1, 2]).unwrap());
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(parse_permutation("2,2,1"), Err(Error::NotABijection { .. })));
        assert!(matches!(parse_permutation("1,4"), Err(Error::NotABijection { .. })));
        assert!(matches!(parse_permutation("0"), Err(Error::NotABijection { .. })));
        assert!(matches!(parse_permutation(""), Err(Error::EmptyInput)));
        assert!(matches!(parse_permutation("[]"), Err(Error::EmptyInput)));
        assert!(matches!(parse_permutation("1,,2"), Err(Error::Parse { .. })));
        assert!(matches!(parse_permutation("1,x"), Err(Error::Parse { .. })));
        assert!(matches!(parse_permutation("[1,2"), Err(Error::Parse { .. })));
        assert!(matches!(parse_permutation("1,2]"), Err(Error::Parse { .. })));
        assert!(matches!(parse_permutation("-1"), Err(Error::Parse { .. })));
    }

    #[test]
    fn inverse_examples() {
        // q(p(i)) = i checked by composition, values frozen from that check.
        for (src, inv) in [("3,1,2,5,4", "2,3,1,5,4"), ("1,2,3", "1,2,3"), ("2,3,1", "3,1,2")] {
            let src = p(src);
            let q = src.inverse();
            for i in 1..=src.len() {
                assert_eq!(q.at(src.at(i)), i);
            }
            assert_eq!(q, p(inv));
        }
    }

    #[test]
    fn reverse_examples() {
        assert_eq!(p("3,1,2,5,4").reverse(), p("4,5,2,1,3"));
        assert_eq!(p("1").reverse(), p("1"));
        assert_eq!(p("2,3,1").reverse(), p("1,3,2"));
    }

    #[test]
    fn strong_fixed_point_examples() {
        assert_eq!(p("1,2,3").strong_fixed_points(), vec![1, 2, 3]);
        assert!(p("2,1").strong_fixed_points().is_empty());
        assert_eq!(p("1,3,2").strong_fixed_points(), vec![1]);
    }

    #[test]
    fn ranks_round_trip_over_s5() {
        for (r, q) in all_permutations(5).enumerate() {
            assert_eq!(q.lex_rank(), r as u64);
            assert_eq!(Permutation::from_lex_rank(5, r as u64), q);
        }
        assert_eq!(all_permutations(5).count(), 120);
        assert_eq!(all_permutations(0).count(), 1);
    }

    #[test]
    fn display_is_bracketless() {
        assert_eq!(p("[3,1,2]").to_string(), "3,1,2");
    }
}
