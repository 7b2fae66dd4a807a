//! Permutations by number of strong fixed points.
//!
//! `St(n, k)` counts permutations of `[n]` with exactly `k` strong fixed
//! points. Reversal maps them onto graphs with exactly `k` singleton
//! dominating sets, so `St(n, k) = f(n, 1, k)`. For a fixed offset `r`,
//! `St(k + r, k)` is a polynomial in `k`, obtained here from the lower
//! offsets by exact rational arithmetic.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use crate::counting::{binomial, CountKind, CountTable, SingletonTable};
use crate::error::{Error, Result};
use crate::polynomial::RationalPolynomial;

pub fn st(n: usize, k: usize) -> Result<BigUint> {
    if k > n {
        return Err(Error::IndexOutOfRange(format!("need 0 <= k <= n, got n={n}, k={k}")));
    }
    Ok(SingletonTable::new(n).f1(n, k))
}

/// `St(k + r, k)` from the known closed forms, `r <= 5`.
pub fn st_closed_form(r: usize, k: usize) -> Result<BigUint> {
    let k = BigUint::from(k);
    let one = BigUint::from(1u32);
    Ok(match r {
        0 => one,
        1 => BigUint::zero(),
        2 => k + one,
        3 => (k + one) * 3u32,
        4 => (&k + &one) * (&k + 28u32) / 2u32,
        5 => (&k + &one) * (k * 3u32 + 77u32),
        _ => return Err(Error::UnsupportedOffset(r)),
    })
}

/// The polynomial giving `St(k + r, k)`, together with `St(r, 0)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StOffsetFamily {
    pub r: usize,
    pub polynomial: RationalPolynomial,
    #[serde(serialize_with = "crate::counting::serialize_decimal")]
    pub k0_value: BigUint,
}

impl StOffsetFamily {
    /// Offsets 0 and 1 are the constants 1 and 0.
    pub fn base(r: usize) -> Result<Self> {
        let value = match r {
            0 => 1u32,
            1 => 0,
            _ => return Err(Error::UnsupportedOffset(r)),
        };
        Ok(StOffsetFamily { r, polynomial: RationalPolynomial::constant(value), k0_value: value.into() })
    }

    /// `St(k + r, k)` as an integer; fails only if the polynomial is not
    /// integer-valued at `k`, which would be a bug.
    pub fn value_at(&self, k: usize) -> BigUint {
        let v = self.polynomial.eval_int(k as i64);
        assert!(v.is_integer(), "non-integer value {v} at k={k} for offset {}", self.r);
        v.to_integer().to_biguint().expect("nonnegative count")
    }
}

/// The driving term `R(k) = Σ_{i=2}^{r+1} St(k+r-i, k-1) St(i-1, 0)` as a
/// polynomial in `k`. The `i`-th term has offset `s = r - i + 1`: `s = 0` is
/// the constant 1, `s = 1` vanishes, and larger `s` comes from `lower`.
pub fn driving_polynomial(r: usize, lower: &[StOffsetFamily]) -> Result<RationalPolynomial> {
    let anchors = SingletonTable::new(r);
    let mut acc = RationalPolynomial::zero();
    for i in 2..=r + 1 {
        let s = r + 1 - i;
        let term = match s {
            0 => RationalPolynomial::constant(1),
            1 => continue,
            _ => {
                let family = lower.iter().find(|f| f.r == s).ok_or(Error::MissingLowerOffset(s))?;
                family.polynomial.shift_down()
            }
        };
        let weight = anchors.f1(i - 1, 0);
        if weight.is_zero() {
            continue;
        }
        acc = acc.add(&term.scale(&BigRational::from_integer(BigInt::from(weight))));
    }
    Ok(acc)
}

/// Solves `p(k) - p(k-1) = R(k)` for `p` of degree `deg R + 1`, anchored at
/// `p(0) = St(r, 0)`.
pub fn lift_polynomial(r: usize, lower: &[StOffsetFamily]) -> Result<StOffsetFamily> {
    let driving = driving_polynomial(r, lower)?;
    let Some(deg_r) = driving.degree() else {
        return Err(Error::DegenerateR(r));
    };
    let n = deg_r + 1;
    let b = |i: usize| driving.coefficient(i);
    let q = |v: BigUint| BigRational::from_integer(BigInt::from(v));

    let mut a = vec![BigRational::zero(); n + 1];
    a[n] = b(n - 1) / q(BigUint::from(n));
    for j in 1..n {
        let mut rhs = b(n - j - 1);
        for i in 0..j {
            let term = q(binomial(n - i, j + 1 - i)) * &a[n - i];
            // (-1)^{j-i}
            if (j - i) % 2 == 0 {
                rhs -= term;
            } else {
                rhs += term;
            }
        }
        a[n - j] = rhs / q(BigUint::from(n - j));
    }
    let k0_value = SingletonTable::new(r).f1(r, 0);
    a[0] = q(k0_value.clone());
    Ok(StOffsetFamily { r, polynomial: RationalPolynomial::new(a), k0_value })
}

/// Families for offsets `0..=max_r`, each lifted from the ones before it.
pub fn lift_all(max_r: usize) -> Result<Vec<StOffsetFamily>> {
    let mut families = Vec::with_capacity(max_r + 1);
    for r in 0..=max_r {
        let family = if r < 2 { StOffsetFamily::base(r)? } else { lift_polynomial(r, &families)? };
        families.push(family);
    }
    Ok(families)
}

/// The triangle `St(n, k)` for `0 <= k <= n <= max_n` and the column
/// `g(n, 1) = n! - St(n, 0)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SequenceTable {
    pub rows: Vec<Vec<BigUint>>,
    pub g1: Vec<BigUint>,
}

impl SequenceTable {
    /// Triangle entries as a table indexed by `(n, k)`, including `n = 0`.
    pub fn to_count_table(&self) -> CountTable {
        let mut t = CountTable::new(CountKind::F1t);
        for (n, row) in self.rows.iter().enumerate() {
            for (k, v) in row.iter().enumerate() {
                t.insert(vec![n, k], v.clone());
            }
        }
        t
    }
}

pub fn sequence_table(max_n: usize) -> SequenceTable {
    let table = SingletonTable::new(max_n);
    SequenceTable {
        rows: (0..=max_n).map(|n| table.f1_row(n).to_vec()).collect(),
        g1: (0..=max_n).map(|n| table.g1(n).clone()).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn st_examples() {
        assert_eq!(st(2, 0).unwrap(), 1u32.into());
        for k in 0..10 {
            assert_eq!(st(k, k).unwrap(), 1u32.into());
            assert_eq!(st(k + 1, k).unwrap(), 0u32.into());
        }
        assert!(matches!(st(2, 3), Err(Error::IndexOutOfRange(_))));
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(st_closed_form(3, 2).unwrap(), 9u32.into());
        assert_eq!(st_closed_form(4, 0).unwrap(), 14u32.into());
        assert_eq!(st_closed_form(5, 0).unwrap(), 77u32.into());
        assert_eq!(st_closed_form(6, 0), Err(Error::UnsupportedOffset(6)));
    }

    #[test]
    fn lifted_coefficients() {
        let fams = lift_all(5).unwrap();
        assert_eq!(driving_polynomial(3, &fams).unwrap(), RationalPolynomial::from_integers([3]));
        assert_eq!(driving_polynomial(4, &fams).unwrap(), RationalPolynomial::from_integers([14, 1]));
        assert_eq!(driving_polynomial(5, &fams).unwrap(), RationalPolynomial::from_integers([77, 6]));
        assert_eq!(fams[2].polynomial, RationalPolynomial::from_integers([1, 1]));
        assert_eq!(fams[3].polynomial, RationalPolynomial::from_integers([3, 3]));
        assert_eq!(fams[4].polynomial.coefficients(), &[q(14, 1), q(29, 2), q(1, 2)]);
        assert_eq!(fams[5].polynomial, RationalPolynomial::from_integers([77, 80, 3]));
    }

    #[test]
    fn lift_errors() {
        assert_eq!(lift_polynomial(4, &lift_all(2).unwrap()), Err(Error::MissingLowerOffset(3)));
        assert_eq!(lift_polynomial(1, &[]), Err(Error::DegenerateR(1)));
        assert_eq!(lift_polynomial(0, &[]), Err(Error::DegenerateR(0)));
    }

    #[test]
    fn table_rows() {
        let t = sequence_table(5);
        let as_u32 = |row: &[BigUint]| row.iter().map(|v| u32::try_from(v).unwrap()).collect::<Vec<_>>();
        assert_eq!(as_u32(&t.rows[3]), vec![3, 2, 0, 1]);
        assert_eq!(as_u32(&t.rows[2]), vec![1, 0, 1]);
        assert_eq!(t.g1[5], 43u32.into());
        assert_eq!(t.to_count_table().pair(3, 1).unwrap(), 2u32.into());
    }
}
