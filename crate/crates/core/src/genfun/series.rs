//! Power series in `t` over the rationals, truncated at a fixed order.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Coefficients of `t^0..=t^N`. Every operation is exact and closed at the
/// smaller order of its operands.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncSeries {
    coeffs: Vec<BigRational>,
}

impl TruncSeries {
    pub fn zero(order: usize) -> Self {
        TruncSeries {
            coeffs: vec![BigRational::zero(); order + 1],
        }
    }

    pub fn constant(order: usize, c: BigRational) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    pub fn one(order: usize) -> Self {
        Self::constant(order, BigRational::one())
    }

    /// The monomial `c * t^k` (zero when `k` exceeds the order).
    pub fn monomial(order: usize, c: BigRational, k: usize) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    /// The series variable `t`.
    pub fn t(order: usize) -> Self {
        Self::monomial(order, BigRational::one(), 1)
    }

    /// Pads with zeros or truncates so that the order is exactly `order`.
    pub fn from_coeffs(order: usize, mut coeffs: Vec<BigRational>) -> Self {
        coeffs.resize(order + 1, BigRational::zero());
        TruncSeries { coeffs }
    }

    pub fn from_integers(order: usize, coeffs: &[i64]) -> Self {
        Self::from_coeffs(order, coeffs.iter().map(|&c| BigRational::from_integer(c.into())).collect())
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &BigRational {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigRational> {
        self.coeffs
    }

    /// Index of the first nonzero coefficient, `None` for the zero series.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.valuation().is_none()
    }

    /// Integer coefficients, or `None` if any coefficient is fractional.
    pub fn to_integers(&self) -> Option<Vec<BigInt>> {
        self.coeffs.iter().map(|c| c.is_integer().then(|| c.to_integer())).collect()
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        TruncSeries {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiplicative inverse. The constant term must be nonzero.
    pub fn inverse(&self) -> Result<Self> {
        let a0 = &self.coeffs[0];
        if a0.is_zero() {
            return Err(Error::Inadmissible("series has zero constant term and is not invertible".into()));
        }
        let n = self.order();
        let inv0 = a0.recip();
        let mut b = vec![BigRational::zero(); n + 1];
        b[0] = inv0.clone();
        for k in 1..=n {
            let mut acc = BigRational::zero();
            for j in 1..=k {
                acc += &self.coeffs[j] * &b[k - j];
            }
            b[k] = -acc * &inv0;
        }
        Ok(TruncSeries { coeffs: b })
    }

    /// `self / other`; `other` must have a nonzero constant term.
    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.inverse()?)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one(self.order());
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                out = &out * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        out
    }

    /// Fails unless every coefficient below `min_order` vanishes.
    pub fn assert_order(&self, min_order: usize, what: &str) -> Result<()> {
        match self.valuation() {
            Some(v) if v < min_order => Err(Error::Contract(format!(
                "{what} has a nonzero t^{v} coefficient but should have order at least {min_order}"
            ))),
            _ => Ok(()),
        }
    }
}

impl<'a> Add<&'a TruncSeries> for &'a TruncSeries {
    type Output = TruncSeries;

    fn add(self, rhs: &TruncSeries) -> TruncSeries {
        let n = self.order().min(rhs.order());
        TruncSeries {
            coeffs: (0..=n).map(|k| &self.coeffs[k] + &rhs.coeffs[k]).collect(),
        }
    }
}

impl<'a> Sub<&'a TruncSeries> for &'a TruncSeries {
    type Output = TruncSeries;

    fn sub(self, rhs: &TruncSeries) -> TruncSeries {
        let n = self.order().min(rhs.order());
        TruncSeries {
            coeffs: (0..=n).map(|k| &self.coeffs[k] - &rhs.coeffs[k]).collect(),
        }
    }
}

impl<'a> Mul<&'a TruncSeries> for &'a TruncSeries {
    type Output = TruncSeries;

    fn mul(self, rhs: &TruncSeries) -> TruncSeries {
        let n = self.order().min(rhs.order());
        let mut coeffs = vec![BigRational::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(n + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(n + 1 - i) {
                coeffs[i + j] += a * b;
            }
        }
        TruncSeries { coeffs }
    }
}

impl Neg for &TruncSeries {
    type Output = TruncSeries;

    fn neg(self) -> TruncSeries {
        TruncSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})t")?,
                _ => write!(f, "({c})t^{k}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(t^{})", self.order() + 1)
    }
}

/// Serializes as an array of exact coefficient strings.
impl Serialize for TruncSeries {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.coeffs.iter().map(|c| c.to_string()))
    }
}
