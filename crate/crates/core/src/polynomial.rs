use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::counting::binomial;

/// A univariate polynomial with exact rational coefficients, lowest degree
/// first. Trailing zeros are trimmed, so the zero polynomial has no
/// coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct RationalPolynomial {
    coefficients: Vec<BigRational>,
}

fn int(v: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(v.into())
}

impl RationalPolynomial {
    pub fn new(coefficients: Vec<BigRational>) -> Self {
        let mut p = RationalPolynomial { coefficients };
        while p.coefficients.last().is_some_and(Zero::is_zero) {
            p.coefficients.pop();
        }
        p
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::new(vec![int(c)])
    }

    /// Integer coefficients, lowest degree first.
    pub fn from_integers<T: Into<BigInt>>(coefficients: impl IntoIterator<Item = T>) -> Self {
        Self::new(coefficients.into_iter().map(int).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coefficients.len().checked_sub(1)
    }

    pub fn coefficients(&self) -> &[BigRational] {
        &self.coefficients
    }

    /// Coefficient of `k^i`, zero past the degree.
    pub fn coefficient(&self, i: usize) -> BigRational {
        self.coefficients.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coefficients.iter().rev().fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_int(&self, x: i64) -> BigRational {
        self.eval(&int(x))
    }

    /// The polynomial `k ↦ p(k - 1)`.
    pub fn shift_down(&self) -> Self {
        let mut out = vec![BigRational::zero(); self.coefficients.len()];
        for (d, c) in self.coefficients.iter().enumerate() {
            for (j, slot) in out.iter_mut().enumerate().take(d + 1) {
                let term = c * int(binomial(d, j));
                if (d - j) % 2 == 0 {
                    *slot += term;
                } else {
                    *slot -= term;
                }
            }
        }
        Self::new(out)
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coefficients.len().max(other.coefficients.len());
        Self::new((0..len).map(|i| self.coefficient(i) + other.coefficient(i)).collect())
    }

    pub fn scale(&self, factor: &BigRational) -> Self {
        Self::new(self.coefficients.iter().map(|c| c * factor).collect())
    }

    /// Coefficients highest degree first, as `"p/q"` or `"p"` strings.
    pub fn coefficient_strings_descending(&self) -> Vec<String> {
        self.coefficients.iter().rev().map(ToString::to_string).collect()
    }
}

impl fmt::Display for RationalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, c) in self.coefficients.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mag = c.abs();
            let show_coeff = d == 0 || !mag.is_one();
            if show_coeff {
                if mag.is_integer() {
                    write!(f, "{mag}")?;
                } else {
                    write!(f, "({mag})")?;
                }
            }
            match d {
                0 => {}
                1 => write!(f, "k")?,
                _ => write!(f, "k^{d}")?,
            }
        }
        Ok(())
    }
}

impl Serialize for RationalPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.coefficients.iter().map(ToString::to_string))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn normalizes_and_evaluates() {
        let p = RationalPolynomial::new(vec![q(14, 1), q(29, 2), q(1, 2), q(0, 1)]);
        assert_eq!(p.degree(), Some(2));
        assert_eq!(p.eval_int(2), q(45, 1));
        assert_eq!(RationalPolynomial::from_integers([0, 0]).degree(), None);
        assert_eq!(p.to_string(), "(1/2)k^2 + (29/2)k + 14");
        assert_eq!(RationalPolynomial::from_integers([-1, 0, -1]).to_string(), "-k^2 - 1");
        assert_eq!(RationalPolynomial::zero().to_string(), "0");
    }

    #[test]
    fn shift_matches_evaluation() {
        let p = RationalPolynomial::new(vec![q(3, 7), q(-2, 1), q(5, 3), q(1, 4)]);
        let s = p.shift_down();
        for x in -5..6 {
            assert_eq!(s.eval_int(x), p.eval_int(x - 1));
        }
    }

    #[test]
    fn arithmetic() {
        let a = RationalPolynomial::from_integers([1, 2]);
        let b = RationalPolynomial::from_integers([-1, -2, 3]);
        assert_eq!(a.add(&b), RationalPolynomial::from_integers([0, 0, 3]));
        assert_eq!(a.scale(&q(1, 2)).coefficients(), &[q(1, 2), q(1, 1)]);
        assert!(a.scale(&q(0, 1)).is_zero());
    }
}
