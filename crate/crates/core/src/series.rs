//! Truncated exponential generating functions over exact rationals, and the
//! differential-equation residuals used to check the counting recursions.

use num::{BigInt, BigRational, BigUint, One, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SeriesError {
    #[error("truncation degree {0} is too small to form the highest derivative (need >= 3)")]
    TruncationTooSmall(usize),
}

/// A power series truncated at a known degree, with exact rational
/// coefficients; `coeff(i)` is the coefficient of `x^i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalSeries {
    coeffs: Vec<BigRational>,
}

impl RationalSeries {
    pub fn new(coeffs: Vec<BigRational>) -> Self {
        RationalSeries { coeffs }
    }

    /// The EGF truncation `sum a_n x^n / n!` of a counting sequence.
    pub fn from_counts(counts: &[BigUint]) -> Self {
        let mut fact = BigInt::one();
        let coeffs = counts
            .iter()
            .enumerate()
            .map(|(n, a)| {
                if n > 0 {
                    fact *= BigInt::from(n);
                }
                BigRational::new(BigInt::from(a.clone()), fact.clone())
            })
            .collect();
        RationalSeries { coeffs }
    }

    /// Truncation of `e^x` to the given degree.
    pub fn exp(degree: usize) -> Self {
        let mut fact = BigInt::one();
        let coeffs = (0..=degree)
            .map(|n| {
                if n > 0 {
                    fact *= BigInt::from(n);
                }
                BigRational::new(BigInt::one(), fact.clone())
            })
            .collect();
        RationalSeries { coeffs }
    }

    /// The monomial `x`, truncated to the given degree.
    pub fn x(degree: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); degree + 1];
        if degree >= 1 {
            coeffs[1] = BigRational::one();
        }
        RationalSeries { coeffs }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn derivative(&self) -> RationalSeries {
        if self.coeffs.len() <= 1 {
            return RationalSeries {
                coeffs: vec![BigRational::zero()],
            };
        }
        let coeffs = self.coeffs[1..]
            .iter()
            .enumerate()
            .map(|(i, c)| c * BigRational::from(BigInt::from(i + 1)))
            .collect();
        RationalSeries { coeffs }
    }

    /// Cauchy product truncated to `degree`.
    pub fn mul_truncated(&self, other: &RationalSeries, degree: usize) -> RationalSeries {
        let mut coeffs = vec![BigRational::zero(); degree + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if i > degree || a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if i + j > degree {
                    break;
                }
                coeffs[i + j] += a * b;
            }
        }
        RationalSeries { coeffs }
    }

    pub fn sub(&self, other: &RationalSeries) -> RationalSeries {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|i| self.coeff(i) - other.coeff(i)).collect();
        RationalSeries { coeffs }
    }

    pub fn truncate(&self, degree: usize) -> RationalSeries {
        let mut coeffs = self.coeffs.clone();
        coeffs.truncate(degree + 1);
        coeffs.resize(degree + 1, BigRational::zero());
        RationalSeries { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }
}

/// Residual of `y'' = y' + y(e^x - 1) + e^x` for a series of degree `N`,
/// valid (and truncated) through degree `N - 2`.
pub fn ode_residual_first_family(y: &RationalSeries) -> RationalSeries {
    let deg = y.degree().saturating_sub(2);
    let y2 = y.derivative().derivative().truncate(deg);
    let y1 = y.derivative().truncate(deg);
    let expm1 = RationalSeries::exp(deg).sub(&RationalSeries::new(vec![BigRational::one()]));
    let prod = y.mul_truncated(&expm1, deg);
    y2.sub(&y1).sub(&prod).sub(&RationalSeries::exp(deg))
}

/// Residual of `y''' = y'' + x y' + y` for a series of degree `N`, valid
/// (and truncated) through degree `N - 3`.
pub fn ode_residual_second_family(y: &RationalSeries) -> RationalSeries {
    let deg = y.degree().saturating_sub(3);
    let y3 = y.derivative().derivative().derivative().truncate(deg);
    let y2 = y.derivative().derivative().truncate(deg);
    let xy1 = RationalSeries::x(deg).mul_truncated(&y.derivative(), deg);
    y3.sub(&y2).sub(&xy1).sub(&y.truncate(deg))
}
