//! Truncated formal power series with exact coefficients.
//!
//! A [`Series`] is generic over its coefficient ring: exact rationals give
//! the univariate [`TruncatedSeries`], and polynomials in the marker `q`
//! give the bivariate [`QPolySeries`]. Only the operations needed by the
//! generating-series [`catalog`] are provided.

pub mod catalog;
mod poly;

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub use catalog::{
    base_series, catalog_delta_series, edge_series_closed, edge_series_via_delta, vertex_series,
    BaseSeries,
};
pub use poly::QPolynomial;

/// The exact ring operations a series coefficient needs.
pub trait Coefficient: Clone + PartialEq + fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negated(&self) -> Self;
    fn scaled(&self, r: &BigRational) -> Self;
    /// Exact quotient; `None` when the division leaves a remainder.
    fn div_exact(&self, divisor: &Self) -> Option<Self>;
}

impl Coefficient for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negated(&self) -> Self {
        -self
    }
    fn scaled(&self, r: &BigRational) -> Self {
        self * r
    }
    fn div_exact(&self, divisor: &Self) -> Option<Self> {
        (!Zero::is_zero(divisor)).then(|| self / divisor)
    }
}

impl Coefficient for QPolynomial {
    fn zero() -> Self {
        QPolynomial::default()
    }
    fn one() -> Self {
        QPolynomial::from_ints(&[1])
    }
    fn is_zero(&self) -> bool {
        QPolynomial::is_zero(self)
    }
    fn is_one(&self) -> bool {
        self.coeffs().len() == 1 && One::is_one(&self.coeffs()[0])
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negated(&self) -> Self {
        -self
    }
    fn scaled(&self, r: &BigRational) -> Self {
        self.scale(r)
    }
    fn div_exact(&self, divisor: &Self) -> Option<Self> {
        QPolynomial::div_exact(self, divisor)
    }
}

/// `a_0 + a_1 x + ... + a_N x^N (mod x^{N+1})`.
#[derive(Clone, PartialEq, Eq)]
pub struct Series<C> {
    coeffs: Vec<C>,
}

pub type TruncatedSeries = Series<BigRational>;
pub type QPolySeries = Series<QPolynomial>;

#[allow(clippy::should_implement_trait)]
impl<C: Coefficient> Series<C> {
    /// Builds a series of the given order, padding with zeros or dropping
    /// terms beyond `x^order`.
    pub fn from_coeffs(order: usize, mut coeffs: Vec<C>) -> Self {
        coeffs.resize(order + 1, C::zero());
        Series { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Series::from_coeffs(order, Vec::new())
    }

    pub fn one(order: usize) -> Self {
        Series::from_coeffs(order, vec![C::one()])
    }

    /// `c x^k`, or zero when `k` exceeds the order.
    pub fn monomial(order: usize, k: usize, c: C) -> Self {
        let mut s = Series::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn coefficient(&self, n: usize) -> Result<&C> {
        self.coeffs.get(n).ok_or_else(|| {
            Error::Series(format!(
                "coefficient {n} requested from a series of order {}",
                self.order()
            ))
        })
    }

    pub fn truncate(&self, order: usize) -> Result<Self> {
        if order > self.order() {
            return Err(Error::Series(format!(
                "cannot extend a series of order {} to order {order}",
                self.order()
            )));
        }
        Ok(Series {
            coeffs: self.coeffs[..=order].to_vec(),
        })
    }

    /// Index of the first nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    fn check_order(&self, other: &Self, op: &str) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::Series(format!(
                "{op}: order mismatch ({} vs {})",
                self.order(),
                other.order()
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_order(other, "add")?;
        Ok(self.zip(other, C::plus))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_order(other, "sub")?;
        Ok(self.zip(other, C::minus))
    }

    fn zip(&self, other: &Self, f: impl Fn(&C, &C) -> C) -> Self {
        Series {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| f(a, b))
                .collect(),
        }
    }

    /// Cauchy product truncated at the common order.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other, "mul")?;
        let n = self.order();
        let mut out = vec![C::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=n - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = out[i + j].plus(&a.times(b));
                }
            }
        }
        Ok(Series { coeffs: out })
    }

    pub fn neg(&self) -> Self {
        self.map(C::negated)
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &C) -> Self {
        self.map(|a| a.times(c))
    }

    pub fn scale_rational(&self, r: &BigRational) -> Self {
        self.map(|a| a.scaled(r))
    }

    pub fn map<D: Coefficient>(&self, f: impl Fn(&C) -> D) -> Series<D> {
        Series {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    /// Quotient `self / divisor`.
    ///
    /// A divisor of valuation `v` is handled by cancelling `x^v` from both
    /// sides, which requires `self` to vanish below `x^v`; the result then
    /// has order `N - v`. Each coefficient is obtained by an exact division
    /// by the divisor's leading coefficient, and any remainder is reported
    /// as an error.
    pub fn div(&self, divisor: &Self) -> Result<Self> {
        self.check_order(divisor, "div")?;
        let v = divisor
            .valuation()
            .ok_or_else(|| Error::Series("division by the zero series".into()))?;
        if let Some(k) = self.coeffs[..v].iter().position(|c| !c.is_zero()) {
            return Err(Error::Series(format!(
                "dividend has a nonzero x^{k} term but the divisor has valuation {v}"
            )));
        }
        let a = &self.coeffs[v..];
        let b = &divisor.coeffs[v..];
        let lead = &b[0];
        let mut out: Vec<C> = Vec::with_capacity(a.len());
        for n in 0..a.len() {
            let mut num = a[n].clone();
            for k in 1..=n {
                if !b[k].is_zero() {
                    num = num.minus(&b[k].times(&out[n - k]));
                }
            }
            let c = num.div_exact(lead).ok_or_else(|| {
                Error::Series(format!(
                    "inexact division at x^{n}: {num:?} is not divisible by {lead:?}"
                ))
            })?;
            out.push(c);
        }
        Ok(Series { coeffs: out })
    }

    /// Square root with constant term 1, by peeling coefficients off
    /// `s^2 = a`.
    pub fn sqrt(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::Series(format!(
                "square root needs constant term 1, found {:?}",
                self.coeffs[0]
            )));
        }
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        let mut s: Vec<C> = Vec::with_capacity(self.coeffs.len());
        s.push(C::one());
        for n in 1..self.coeffs.len() {
            let mut num = self.coeffs[n].clone();
            for k in 1..n {
                num = num.minus(&s[k].times(&s[n - k]));
            }
            s.push(num.scaled(&half));
        }
        Ok(Series { coeffs: s })
    }
}

impl QPolySeries {
    /// Substitutes a value for `q`.
    pub fn at_q(&self, q: &BigRational) -> TruncatedSeries {
        self.map(|c| c.eval(q))
    }

    /// `[d/dq S(q; x)]` at `q = 1`.
    pub fn q_derivative_at_one(&self) -> TruncatedSeries {
        let one = <BigRational as One>::one();
        self.map(|c| c.derivative().eval(&one))
    }
}

impl TruncatedSeries {
    pub fn from_ints(order: usize, coeffs: &[i64]) -> Self {
        Series::from_coeffs(
            order,
            coeffs
                .iter()
                .map(|&c| BigRational::from_integer(c.into()))
                .collect(),
        )
    }

    /// The coefficients as integers, if they all are.
    pub fn to_integers(&self) -> Option<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }
}

/// `p` for integers, `p/q` otherwise.
pub fn format_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Debug for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(format_rational).collect();
        write!(f, "TruncatedSeries[{}]", parts.join(", "))
    }
}

impl fmt::Debug for QPolySeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(|c| format!("({c})")).collect();
        write!(f, "QPolySeries[{}]", parts.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(order: usize, c: &[i64]) -> TruncatedSeries {
        TruncatedSeries::from_ints(order, c)
    }

    fn ints(series: &TruncatedSeries) -> Vec<i64> {
        series
            .to_integers()
            .unwrap()
            .into_iter()
            .map(|c| i64::try_from(c).unwrap())
            .collect()
    }

    #[test]
    fn product_of_conjugates() {
        let p = s(3, &[1, 1]).mul(&s(3, &[1, -1])).unwrap();
        assert_eq!(ints(&p), [1, 0, -1, 0]);
    }

    #[test]
    fn order_mismatch_is_an_error() {
        assert!(s(3, &[1]).add(&s(4, &[1])).is_err());
        assert!(s(3, &[1]).mul(&s(4, &[1])).is_err());
    }

    #[test]
    fn valuation_shift_division() {
        let q = s(4, &[0, 1, 1]).div(&s(4, &[0, 1])).unwrap();
        assert_eq!(q.order(), 3);
        assert_eq!(ints(&q), [1, 1, 0, 0]);
        assert!(s(4, &[1, 1]).div(&s(4, &[0, 1])).is_err());
        assert!(s(4, &[1]).div(&s(4, &[])).is_err());
    }

    #[test]
    fn sqrt_examples() {
        // generalized binomial oracle: [x^n] (1-4x)^{1/2} = -2 C(2n-2, n-1) / n
        let r = s(4, &[1, -4]).sqrt().unwrap();
        assert_eq!(ints(&r), [1, -2, -2, -4, -10]);
        assert_eq!(ints(&s(0, &[1]).sqrt().unwrap()), [1]);
        let r = s(3, &[1, -2, -3]).sqrt().unwrap();
        assert_eq!(ints(&r), [1, -1, -2, -2]);
        assert_eq!(r.mul(&r).unwrap(), s(3, &[1, -2, -3]));
        assert!(s(3, &[2, 1]).sqrt().is_err());
    }

    #[test]
    fn catalan_from_radical() {
        let num = s(5, &[1]).sub(&s(5, &[1, -4]).sqrt().unwrap()).unwrap();
        let c = num.div(&s(5, &[0, 2])).unwrap();
        assert_eq!(ints(&c), [1, 1, 2, 5, 14]);
    }

    #[test]
    fn q_substitution_and_derivative() {
        let f = QPolySeries::from_coeffs(
            2,
            vec![
                QPolynomial::from_ints(&[1]),
                QPolynomial::from_ints(&[0, 1]),
                QPolynomial::from_ints(&[1, 3, 1]),
            ],
        );
        assert_eq!(ints(&f.at_q(&<BigRational as One>::one())), [1, 1, 5]);
        assert_eq!(ints(&f.q_derivative_at_one()), [0, 1, 5]);
    }

    #[test]
    fn coefficient_out_of_range() {
        let b = s(3, &[1, 2, 6, 20]);
        assert_eq!(
            b.coefficient(3).unwrap(),
            &BigRational::from_integer(20.into())
        );
        assert!(b.coefficient(4).is_err());
        assert!(b.truncate(5).is_err());
    }
}
