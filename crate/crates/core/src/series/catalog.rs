//! The generating series of each path class, expanded exactly from their
//! radical and rational closed forms.

use std::fmt;
use std::str::FromStr;

use super::{QPolySeries, QPolynomial, Series, TruncatedSeries};
use crate::error::{Error, Result};
use crate::path::ClassKind;

/// Every closed form below has a removable singularity of order at most 2
/// at `x = 0`; working this far past the requested order leaves enough
/// terms after the valuation shift.
const HEADROOM: usize = 2;

/// A bivariate polynomial, `terms[k]` being the `q`-coefficients of `x^k`.
fn qx(order: usize, terms: &[&[i64]]) -> QPolySeries {
    Series::from_coeffs(
        order,
        terms.iter().map(|t| QPolynomial::from_ints(t)).collect(),
    )
}

fn rx(order: usize, coeffs: &[i64]) -> TruncatedSeries {
    TruncatedSeries::from_ints(order, coeffs)
}

/// The univariate counting series of the base sequences.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BaseSeries {
    /// Central binomial coefficients.
    B,
    /// Catalan numbers.
    C,
    /// Central trinomial coefficients.
    T,
    /// Motzkin numbers.
    M,
    /// Central Delannoy numbers.
    D,
    /// Large Schröder numbers.
    R,
}

impl BaseSeries {
    pub const ALL: [BaseSeries; 6] = [
        BaseSeries::B,
        BaseSeries::C,
        BaseSeries::T,
        BaseSeries::M,
        BaseSeries::D,
        BaseSeries::R,
    ];

    pub const fn symbol(self) -> &'static str {
        match self {
            BaseSeries::B => "B",
            BaseSeries::C => "C",
            BaseSeries::T => "T",
            BaseSeries::M => "M",
            BaseSeries::D => "d",
            BaseSeries::R => "r",
        }
    }
}

impl fmt::Display for BaseSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl FromStr for BaseSeries {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        BaseSeries::ALL
            .into_iter()
            .find(|b| b.symbol() == s)
            .ok_or_else(|| {
                Error::Usage(format!(
                    "unknown base series {s:?} (expected one of B, C, T, M, d, r)"
                ))
            })
    }
}

pub fn base_series(name: BaseSeries, order: usize) -> Result<TruncatedSeries> {
    let w = order + HEADROOM;
    let one = rx(w, &[1]);
    let s = match name {
        BaseSeries::B => one.div(&rx(w, &[1, -4]).sqrt()?)?,
        BaseSeries::C => one.sub(&rx(w, &[1, -4]).sqrt()?)?.div(&rx(w, &[0, 2]))?,
        BaseSeries::T => one.div(&rx(w, &[1, -2, -3]).sqrt()?)?,
        BaseSeries::M => rx(w, &[1, -1])
            .sub(&rx(w, &[1, -2, -3]).sqrt()?)?
            .div(&rx(w, &[0, 0, 2]))?,
        BaseSeries::D => one.div(&rx(w, &[1, -6, 1]).sqrt()?)?,
        BaseSeries::R => rx(w, &[1, -1])
            .sub(&rx(w, &[1, -6, 1]).sqrt()?)?
            .div(&rx(w, &[0, 2]))?,
    };
    s.truncate(order)
}

/// Generating series of `|P_n|`, from the base series rather than from the
/// bivariate catalog.
pub fn vertex_series(kind: ClassKind, order: usize) -> Result<TruncatedSeries> {
    let w = order + HEADROOM;
    match kind {
        ClassKind::DD => base_series(BaseSeries::C, order),
        ClassKind::GD => base_series(BaseSeries::B, order),
        ClassKind::MM => base_series(BaseSeries::M, order),
        ClassKind::GM => base_series(BaseSeries::T, order),
        ClassKind::SS => base_series(BaseSeries::R, order),
        ClassKind::GS => base_series(BaseSeries::D, order),
        ClassKind::FF => rx(w, &[1]).div(&rx(w, &[1, -1, -1]))?.truncate(order),
        ClassKind::GF => rx(w, &[1]).div(&rx(w, &[1, -1, -2]))?.truncate(order),
    }
}

/// `Σ_n Σ_{γ ∈ P_n} q^{|Δγ|} x^n`, where `Δγ` is the set of covers of `γ`.
pub fn catalog_delta_series(kind: ClassKind, order: usize) -> Result<QPolySeries> {
    let w = order + HEADROOM;
    let one = qx(w, &[&[1]]);
    let s = match kind {
        ClassKind::DD => {
            let radical = qx(w, &[&[1], &[-2, -2], &[1, -2, 1]]).sqrt()?;
            qx(w, &[&[1], &[-1, 1]])
                .sub(&radical)?
                .div(&qx(w, &[&[], &[0, 2]]))?
        }
        ClassKind::GD => one.div(&qx(w, &[&[1], &[-2, -2], &[1, -2, 1]]).sqrt()?)?,
        ClassKind::MM => {
            let radical = qx(w, &[&[1], &[1]])
                .mul(&qx(w, &[&[1], &[-1, -2], &[-1, 0, 1], &[1, -2, 1]]))?
                .sqrt()?;
            qx(w, &[&[1], &[0, -1], &[-1, 1]])
                .sub(&radical)?
                .div(&qx(w, &[&[], &[], &[0, 2]]))?
        }
        ClassKind::GM => {
            let radical = qx(w, &[&[1], &[1]])
                .mul(&qx(w, &[&[1], &[-1, -2], &[-1, 0, 1], &[1, -2, 1]]))?
                .sqrt()?;
            qx(w, &[&[1], &[1, -1]]).div(&radical)?
        }
        ClassKind::SS => {
            let radical = qx(w, &[&[1], &[-2, -4], &[1, -4, 4]]).sqrt()?;
            qx(w, &[&[1], &[-1]])
                .sub(&radical)?
                .div(&qx(w, &[&[], &[0, 2], &[0, 2, -2]]))?
        }
        ClassKind::GS => one.div(&qx(w, &[&[1], &[-2, -4], &[1, -4, 4]]).sqrt()?)?,
        ClassKind::FF => {
            qx(w, &[&[1], &[1, -1]]).div(&qx(w, &[&[1], &[0, -1], &[-1], &[-1, 1]]))?
        }
        ClassKind::GF => {
            qx(w, &[&[1], &[1, -1]]).div(&qx(w, &[&[1], &[0, -1], &[-1, -1], &[-1, 0, 1]]))?
        }
    };
    s.truncate(order)
}

/// Edge series obtained as `∂_q` of the Δ-series at `q = 1`.
pub fn edge_series_via_delta(kind: ClassKind, order: usize) -> Result<TruncatedSeries> {
    Ok(catalog_delta_series(kind, order)?.q_derivative_at_one())
}

/// Edge series from its own closed form.
pub fn edge_series_closed(kind: ClassKind, order: usize) -> Result<TruncatedSeries> {
    let w = order + HEADROOM;
    let s = match kind {
        ClassKind::DD => {
            let root = rx(w, &[1, -4]).sqrt()?;
            rx(w, &[1, -3])
                .sub(&rx(w, &[1, -1]).mul(&root)?)?
                .div(&rx(w, &[0, 2]).mul(&root)?)?
        }
        ClassKind::GD => {
            let root = rx(w, &[1, -4]).sqrt()?;
            rx(w, &[0, 1]).div(&rx(w, &[1, -4]).mul(&root)?)?
        }
        ClassKind::MM => {
            let root = rx(w, &[1, -2, -3]).sqrt()?;
            let inner = rx(w, &[1, -2, -1]).sub(&rx(w, &[1, -1]).mul(&root)?)?;
            rx(w, &[1, 1])
                .mul(&inner)?
                .div(&rx(w, &[0, 0, 2]).mul(&root)?)?
        }
        ClassKind::GM => {
            let root = rx(w, &[1, -2, -3]).sqrt()?;
            rx(w, &[0, 0, 2]).div(&rx(w, &[1, -3]).mul(&root)?)?
        }
        ClassKind::SS => {
            let root = rx(w, &[1, -6, 1]).sqrt()?;
            let inner = rx(w, &[1, -4, 1]).sub(&rx(w, &[1, -1]).mul(&root)?)?;
            rx(w, &[1, -1])
                .mul(&inner)?
                .div(&rx(w, &[0, 2]).mul(&root)?)?
        }
        ClassKind::GS => {
            let root = rx(w, &[1, -6, 1]).sqrt()?;
            rx(w, &[0, 2, -2]).div(&rx(w, &[1, -6, 1]).mul(&root)?)?
        }
        ClassKind::FF => {
            let d = rx(w, &[1, -1, -1]);
            rx(w, &[0, 0, 1]).div(&d.mul(&d)?)?
        }
        ClassKind::GF => {
            let d = rx(w, &[1, -1, -2]);
            rx(w, &[0, 0, 2]).div(&d.mul(&d)?)?
        }
    };
    s.truncate(order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn q_one() -> BigRational {
        BigRational::from_integer(1.into())
    }

    fn ints(s: &TruncatedSeries) -> Vec<i64> {
        s.to_integers()
            .expect("integral series")
            .into_iter()
            .map(|c| i64::try_from(c).unwrap())
            .collect()
    }

    #[test]
    fn base_series_against_recurrence_oracles() {
        assert_eq!(
            ints(&base_series(BaseSeries::C, 4).unwrap()),
            [1, 1, 2, 5, 14]
        );
        assert_eq!(
            ints(&base_series(BaseSeries::T, 4).unwrap()),
            [1, 1, 3, 7, 19]
        );
        assert_eq!(
            ints(&base_series(BaseSeries::D, 3).unwrap()),
            [1, 3, 13, 63]
        );
        assert_eq!(ints(&base_series(BaseSeries::B, 3).unwrap()), [1, 2, 6, 20]);
        assert_eq!(
            ints(&base_series(BaseSeries::M, 5).unwrap()),
            [1, 1, 2, 4, 9, 21]
        );
        assert_eq!(
            ints(&base_series(BaseSeries::R, 4).unwrap()),
            [1, 2, 6, 22, 90]
        );

        // Catalan convolution oracle
        let c = ints(&base_series(BaseSeries::C, 12).unwrap());
        let mut oracle = vec![1i64];
        for n in 0..12 {
            oracle.push((0..=n).map(|k| oracle[k] * oracle[n - k]).sum());
        }
        assert_eq!(c, oracle);
    }

    #[test]
    fn base_series_squares() {
        let b = base_series(BaseSeries::B, 4).unwrap();
        assert_eq!(ints(&b.mul(&b).unwrap()), [1, 4, 16, 64, 256]);
        let c = base_series(BaseSeries::C, 5).unwrap();
        let one_minus_xc = rx(5, &[1]).sub(&rx(5, &[0, 1]).mul(&c).unwrap()).unwrap();
        assert_eq!(ints(&c.mul(&one_minus_xc).unwrap()), [1, 0, 0, 0, 0, 0]);
    }

    #[test]
    fn base_series_names() {
        assert_eq!("d".parse::<BaseSeries>(), Ok(BaseSeries::D));
        assert!("D".parse::<BaseSeries>().is_err());
    }

    #[test]
    fn dyck_delta_series_gives_narayana() {
        let f = catalog_delta_series(ClassKind::DD, 4).unwrap();
        assert_eq!(f.coeffs()[3], QPolynomial::from_ints(&[1, 3, 1]));
        assert_eq!(f.coeffs()[4], QPolynomial::from_ints(&[1, 6, 6, 1]));
        for kind in ClassKind::ALL {
            let f = catalog_delta_series(kind, 3).unwrap();
            assert_eq!(f.coeffs()[0], QPolynomial::from_ints(&[1]), "{kind}");
        }
    }

    #[test]
    fn grand_dyck_vertex_count() {
        let f = catalog_delta_series(ClassKind::GD, 2).unwrap();
        assert_eq!(ints(&f.at_q(&q_one())), [1, 2, 6]);
    }

    #[test]
    fn edge_series_first_terms() {
        assert_eq!(
            ints(&edge_series_via_delta(ClassKind::DD, 6).unwrap()),
            [0, 0, 1, 5, 21, 84, 330]
        );
        assert_eq!(
            ints(&edge_series_via_delta(ClassKind::FF, 6).unwrap()),
            [0, 0, 1, 2, 5, 10, 20]
        );
        assert_eq!(
            ints(&edge_series_closed(ClassKind::GD, 5).unwrap()),
            [0, 1, 6, 30, 140, 630]
        );
        assert_eq!(
            ints(&edge_series_closed(ClassKind::GS, 4).unwrap()),
            [0, 2, 16, 114, 768]
        );
        assert_eq!(
            ints(&edge_series_closed(ClassKind::GF, 6).unwrap()),
            [0, 0, 2, 4, 14, 32, 82]
        );
        let m = edge_series_closed(ClassKind::MM, 10).unwrap();
        assert_eq!(ints(&m)[10], 9069);
    }

    #[test]
    fn edge_series_routes_agree_and_specialize() {
        for kind in ClassKind::ALL {
            assert_eq!(
                edge_series_via_delta(kind, 12).unwrap(),
                edge_series_closed(kind, 12).unwrap(),
                "{kind}"
            );
            assert_eq!(
                catalog_delta_series(kind, 12).unwrap().at_q(&q_one()),
                vertex_series(kind, 12).unwrap(),
                "{kind}"
            );
        }
    }

    #[test]
    fn edge_series_decompositions() {
        let n = 12;
        let b = base_series(BaseSeries::B, n).unwrap();
        let c = base_series(BaseSeries::C, n).unwrap();
        let half = BigRational::new(1.into(), 2.into());
        let dyck = rx(n, &[1])
            .add(&b)
            .unwrap()
            .scale_rational(&half)
            .sub(&c)
            .unwrap();
        assert_eq!(dyck, edge_series_closed(ClassKind::DD, n).unwrap());

        let t = base_series(BaseSeries::T, n).unwrap();
        let m = base_series(BaseSeries::M, n).unwrap();
        let motzkin = rx(n, &[1, 1]).mul(&t.sub(&m).unwrap()).unwrap();
        assert_eq!(motzkin, edge_series_closed(ClassKind::MM, n).unwrap());

        let d = base_series(BaseSeries::D, n).unwrap();
        let r = base_series(BaseSeries::R, n).unwrap();
        let schroder = rx(n, &[1, -1]).mul(&d.sub(&r).unwrap()).unwrap();
        assert_eq!(schroder, edge_series_closed(ClassKind::SS, n).unwrap());
    }
}
