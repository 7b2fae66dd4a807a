use std::fmt;

use serde::{Serialize, Serializer};

/// Largest vertex label a [`VertexSet`] can hold.
pub const MAX_VERTICES: usize = 64;

/// A set of vertices drawn from `1..=64`, stored as a single machine word.
///
/// Vertex `v` occupies bit `v - 1`.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    /// All of `1..=n`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "vertex sets hold at most {MAX_VERTICES} vertices");
        if n == MAX_VERTICES {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        let mut s = Self::EMPTY;
        s.insert(v);
        s
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn insert(&mut self, v: usize) {
        assert!((1..=MAX_VERTICES).contains(&v), "vertex {v} out of range");
        self.0 |= 1u64 << (v - 1);
    }

    pub fn remove(&mut self, v: usize) {
        if (1..=MAX_VERTICES).contains(&v) {
            self.0 &= !(1u64 << (v - 1));
        }
    }

    pub fn contains(self, v: usize) -> bool {
        (1..=MAX_VERTICES).contains(&v) && self.0 & (1u64 << (v - 1)) != 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Smallest member, if any.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize + 1)
    }

    /// Members in increasing order.
    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Iter;

    fn into_iter(self) -> Iter {
        self.iter()
    }
}

pub struct Iter(u64);

impl Iterator for Iter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize + 1;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl DoubleEndedIterator for Iter {
    fn next_back(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let top = 63 - self.0.leading_zeros() as usize;
        self.0 &= !(1u64 << top);
        Some(top + 1)
    }
}

impl ExactSizeIterator for Iter {}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

/// Parses a vertex list such as `1,4` or `{1, 4}`. Order and repeats are
/// kept as written; vertex 0 and vertices above [`MAX_VERTICES`] are rejected.
pub fn parse_vertex_list(text: &str) -> crate::Result<Vec<usize>> {
    let list = crate::perm::parse_integer_list(text, &[('{', '}'), ('[', ']')])?;
    if let Some(&bad) = list.iter().find(|&&v| v == 0 || v > MAX_VERTICES) {
        return Err(crate::Error::VertexOutOfRange { vertex: bad, n: MAX_VERTICES });
    }
    Ok(list)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn membership_and_order() {
        let s: VertexSet = [5, 1, 64, 3].into_iter().collect();
        assert_eq!(s.to_vec(), vec![1, 3, 5, 64]);
        assert!(s.contains(64));
        assert!(!s.contains(0));
        assert!(!s.contains(65));
        assert_eq!(s.first(), Some(1));
        assert_eq!(s.iter().rev().collect::<Vec<_>>(), vec![64, 5, 3, 1]);
        assert_eq!(format!("{s}"), "{1,3,5,64}");
    }

    #[test]
    fn full_sets() {
        assert_eq!(VertexSet::full(0), VertexSet::EMPTY);
        assert_eq!(VertexSet::full(3).to_vec(), vec![1, 2, 3]);
        assert_eq!(VertexSet::full(64).len(), 64);
    }

    #[test]
    fn vertex_lists() {
        assert_eq!(parse_vertex_list("1,4").unwrap(), vec![1, 4]);
        assert_eq!(parse_vertex_list(" { 2 , 1 } ").unwrap(), vec![2, 1]);
        assert_eq!(parse_vertex_list("[3]").unwrap(), vec![3]);
        assert!(parse_vertex_list("{1,2").is_err());
        assert!(parse_vertex_list("").is_err());
        assert!(parse_vertex_list("0,1").is_err());
        assert!(parse_vertex_list("65").is_err());
        assert!(parse_vertex_list("1;2").is_err());
    }
}
