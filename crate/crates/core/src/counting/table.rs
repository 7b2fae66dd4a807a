use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use num_bigint::BigUint;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CountKind {
    /// g(n,1), indexed by `(n)`.
    G1,
    /// f(n,1,t), indexed by `(n, t)`.
    F1t,
    /// Connected graphs c(n,k).
    C,
    /// Disconnected graphs d(n,k).
    D,
    /// All graphs g(n,k).
    G,
}

/// Exact tallies keyed by index tuples.
///
/// A table records which orders `n` it covers. Looking up a two-index entry
/// at a covered order returns zero when the entry is absent; at an uncovered
/// order it is an error.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountTable {
    pub kind: CountKind,
    entries: BTreeMap<Vec<usize>, BigUint>,
    orders: BTreeSet<usize>,
}

impl CountTable {
    pub fn new(kind: CountKind) -> Self {
        CountTable { kind, entries: BTreeMap::new(), orders: BTreeSet::new() }
    }

    /// Stores a value; the first index is the order and is marked covered.
    pub fn insert(&mut self, index: Vec<usize>, value: BigUint) {
        if let Some(&n) = index.first() {
            self.orders.insert(n);
        }
        self.entries.insert(index, value);
    }

    /// Marks an order covered without storing anything (all its entries are
    /// zero).
    pub fn cover(&mut self, n: usize) {
        self.orders.insert(n);
    }

    pub fn covers(&self, n: usize) -> bool {
        self.orders.contains(&n)
    }

    pub fn get(&self, index: &[usize]) -> Option<&BigUint> {
        self.entries.get(index)
    }

    pub fn pair(&self, n: usize, k: usize) -> Result<BigUint> {
        match self.entries.get(&[n, k][..]) {
            Some(v) => Ok(v.clone()),
            None if self.covers(n) => Ok(BigUint::ZERO),
            None => Err(Error::MissingTableEntry { n, k }),
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&[usize], &BigUint)> {
        self.entries.iter().map(|(k, v)| (k.as_slice(), v))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Two-index tables as `n,k,value` CSV with a header row.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,k,value\n");
        for (idx, v) in &self.entries {
            let cols: Vec<String> = idx.iter().map(|i| i.to_string()).collect();
            let _ = writeln!(out, "{},{}", cols.join(","), v);
        }
        out
    }
}

fn parse_err(line: usize, token: &str, reason: &str) -> Error {
    Error::Parse { token: token.to_string(), reason: format!("line {line}: {reason}") }
}

/// Reads a two-index table from `n,k,value` CSV. The header row is optional;
/// blank lines are skipped. Every row needs `n >= 1`, `1 <= k <= n`, and a
/// decimal value; a repeated `(n, k)` is rejected.
pub fn parse_count_table_csv(kind: CountKind, text: &str) -> Result<CountTable> {
    let mut table = CountTable::new(kind);
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        let cols: Vec<&str> = line.split(',').map(str::trim).collect();
        if i == 0 && cols == ["n", "k", "value"] {
            continue;
        }
        if cols.len() != 3 {
            return Err(parse_err(line_no, line, "expected three columns n,k,value"));
        }
        let index = |tok: &str| -> Result<usize> {
            tok.parse::<usize>().map_err(|e| parse_err(line_no, tok, &e.to_string()))
        };
        let n = index(cols[0])?;
        let k = index(cols[1])?;
        if n == 0 || k == 0 || k > n {
            return Err(parse_err(line_no, line, "need n >= 1 and 1 <= k <= n"));
        }
        if cols[2].is_empty() || !cols[2].bytes().all(|b| b.is_ascii_digit()) {
            return Err(parse_err(line_no, cols[2], "value must be a nonnegative decimal integer"));
        }
        let value: BigUint = cols[2].parse().map_err(|_| parse_err(line_no, cols[2], "bad integer"))?;
        if table.get(&[n, k]).is_some() {
            return Err(parse_err(line_no, line, "duplicate entry"));
        }
        table.insert(vec![n, k], value);
    }
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_round_trip() {
        let text = "n,k,value\n1,1,1\n2,1,1\n3,1,3\n4,1,13\n4,2,1\n";
        let t = parse_count_table_csv(CountKind::C, text).unwrap();
        assert_eq!(t.len(), 5);
        assert_eq!(t.pair(4, 1).unwrap(), BigUint::from(13u32));
        assert_eq!(t.pair(3, 2).unwrap(), BigUint::ZERO);
        assert!(matches!(t.pair(5, 1), Err(Error::MissingTableEntry { n: 5, k: 1 })));
        assert_eq!(t.to_csv(), text);
    }

    #[test]
    fn csv_without_header_and_with_blanks() {
        let t = parse_count_table_csv(CountKind::C, "\n 2 , 1 , 1 \n\n").unwrap();
        assert_eq!(t.pair(2, 1).unwrap(), BigUint::from(1u32));
    }

    #[test]
    fn csv_rejects_garbage() {
        for bad in ["1,1", "1,1,1,1", "a,1,1", "1,1,-3", "1,1,", "0,1,1", "2,3,1", "1,1,1\n1,1,2", "1,1,1e3"] {
            assert!(parse_count_table_csv(CountKind::C, bad).is_err(), "{bad:?}");
        }
    }
}
