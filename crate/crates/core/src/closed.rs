//! Closed-form counts: base sequences, edge-count identities, exact Hasse
//! indices, leading-order asymptotics and the Boolean classification.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::path::ClassKind;

/// `C(n, k)`, zero outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> BigUint {
    if n < 0 || k < 0 || k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k) as u64;
    let n = n as u64;
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Multiset coefficient `((n, k)) = C(n + k - 1, k)`, with `((0, 0)) = 1`.
pub fn multichoose(n: i64, k: i64) -> BigUint {
    if k == 0 {
        return BigUint::one();
    }
    binomial(n + k - 1, k)
}

/// Coefficients of `(1 + x + x^2)^n`, by repeated convolution.
pub fn trinomial_row(n: usize) -> Vec<BigUint> {
    let mut row = vec![BigUint::one()];
    for _ in 0..n {
        let mut next = vec![BigUint::zero(); row.len() + 2];
        for (i, c) in row.iter().enumerate() {
            next[i] += c;
            next[i + 1] += c;
            next[i + 2] += c;
        }
        row = next;
    }
    row
}

/// `[x^k] (1 + x + x^2)^n`, zero when `k` is negative or above `2n`.
pub fn trinomial(n: i64, k: i64) -> BigUint {
    if n < 0 || k < 0 || k > 2 * n {
        return BigUint::zero();
    }
    trinomial_row(n as usize).swap_remove(k as usize)
}

pub fn central_binomial(n: usize) -> BigUint {
    binomial(2 * n as i64, n as i64)
}

pub fn catalan(n: usize) -> BigUint {
    central_binomial(n) / (n + 1)
}

/// Runs `(k+a) x_k = (b k + c) x_{k-1} + (d k + e) x_{k-2}` forward from
/// two seeds. Each step must divide exactly.
fn three_term(n: usize, seeds: [u64; 2], step: impl Fn(i64) -> (i64, i64, i64)) -> BigUint {
    let mut prev = BigInt::from(seeds[0]);
    if n == 0 {
        return prev.to_biguint().expect("nonnegative");
    }
    let mut cur = BigInt::from(seeds[1]);
    for k in 2..=n as i64 {
        let (div, a, b) = step(k);
        let num = &cur * a + &prev * b;
        let (q, r) = num.div_rem(&BigInt::from(div));
        debug_assert!(r.is_zero());
        prev = std::mem::replace(&mut cur, q);
    }
    cur.to_biguint().expect("nonnegative")
}

/// `[x^n] (1 + x + x^2)^n`.
pub fn central_trinomial(n: usize) -> BigUint {
    three_term(n, [1, 1], |k| (k, 2 * k - 1, 3 * (k - 1)))
}

pub fn motzkin(n: usize) -> BigUint {
    three_term(n, [1, 1], |k| (k + 2, 2 * k + 1, 3 * (k - 1)))
}

pub fn central_delannoy(n: usize) -> BigUint {
    three_term(n, [1, 3], |k| (k, 3 * (2 * k - 1), -(k - 1)))
}

pub fn large_schroder(n: usize) -> BigUint {
    three_term(n, [1, 2], |k| (k + 1, 3 * (2 * k - 1), -(k - 2)))
}

fn linear_pair(n: usize, a0: u64, a1: u64, weight: u64) -> BigUint {
    let (mut a, mut b) = (BigUint::from(a0), BigUint::from(a1));
    for _ in 0..n {
        let next = &b + &a * weight;
        a = std::mem::replace(&mut b, next);
    }
    a
}

pub fn fibonacci(n: usize) -> BigUint {
    linear_pair(n, 0, 1, 1)
}

pub fn lucas(n: usize) -> BigUint {
    linear_pair(n, 2, 1, 1)
}

/// `J_n = J_{n-1} + 2 J_{n-2}`, `J_0 = 0`, `J_1 = 1`.
pub fn jacobsthal(n: usize) -> BigUint {
    linear_pair(n, 0, 1, 2)
}

/// The named integer sequences.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SequenceId {
    CentralBinomial,
    Catalan,
    /// Two-index; needs `k`.
    Trinomial,
    CentralTrinomial,
    Motzkin,
    CentralDelannoy,
    LargeSchroder,
    Fibonacci,
    Lucas,
    Jacobsthal,
}

impl SequenceId {
    pub const ALL: [SequenceId; 10] = [
        SequenceId::CentralBinomial,
        SequenceId::Catalan,
        SequenceId::Trinomial,
        SequenceId::CentralTrinomial,
        SequenceId::Motzkin,
        SequenceId::CentralDelannoy,
        SequenceId::LargeSchroder,
        SequenceId::Fibonacci,
        SequenceId::Lucas,
        SequenceId::Jacobsthal,
    ];

    pub const fn name(self) -> &'static str {
        match self {
            SequenceId::CentralBinomial => "central_binomial",
            SequenceId::Catalan => "catalan",
            SequenceId::Trinomial => "trinomial",
            SequenceId::CentralTrinomial => "central_trinomial",
            SequenceId::Motzkin => "motzkin",
            SequenceId::CentralDelannoy => "central_delannoy",
            SequenceId::LargeSchroder => "large_schroder",
            SequenceId::Fibonacci => "fibonacci",
            SequenceId::Lucas => "lucas",
            SequenceId::Jacobsthal => "jacobsthal",
        }
    }
}

impl FromStr for SequenceId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SequenceId::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| Error::Usage(format!("unknown sequence {s:?}")))
    }
}

pub fn sequence_value(id: SequenceId, n: usize, k: Option<usize>) -> Result<BigUint> {
    if id == SequenceId::Trinomial {
        let k = k.ok_or_else(|| Error::Usage("trinomial needs a second index k".into()))?;
        if k > 2 * n {
            return Err(Error::Usage(format!(
                "trinomial index k = {k} is out of range 0..={}",
                2 * n
            )));
        }
        return Ok(trinomial(n as i64, k as i64));
    }
    if k.is_some() {
        return Err(Error::Usage(format!("{} takes a single index", id.name())));
    }
    Ok(match id {
        SequenceId::CentralBinomial => central_binomial(n),
        SequenceId::Catalan => catalan(n),
        SequenceId::CentralTrinomial => central_trinomial(n),
        SequenceId::Motzkin => motzkin(n),
        SequenceId::CentralDelannoy => central_delannoy(n),
        SequenceId::LargeSchroder => large_schroder(n),
        SequenceId::Fibonacci => fibonacci(n),
        SequenceId::Lucas => lucas(n),
        SequenceId::Jacobsthal => jacobsthal(n),
        SequenceId::Trinomial => unreachable!(),
    })
}

/// `|P_n|` for each class.
pub fn vertex_count(kind: ClassKind, n: usize) -> BigUint {
    match kind {
        ClassKind::DD => catalan(n),
        ClassKind::GD => central_binomial(n),
        ClassKind::MM => motzkin(n),
        ClassKind::GM => central_trinomial(n),
        ClassKind::SS => large_schroder(n),
        ClassKind::GS => central_delannoy(n),
        ClassKind::FF => fibonacci(n + 1),
        ClassKind::GF => jacobsthal(n + 1),
    }
}

fn int(u: BigUint) -> BigInt {
    BigInt::from(u)
}

fn rat(u: BigUint) -> BigRational {
    BigRational::from_integer(int(u))
}

fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(num.into(), den.into())
}

fn pow_rat(base: i64, exp: i64) -> BigRational {
    let b = BigRational::from_integer(base.into());
    if exp >= 0 {
        num_traits::pow(b, exp as usize)
    } else {
        num_traits::pow(b.recip(), (-exp) as usize)
    }
}

/// A named closed-form identity evaluated at one `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityValue {
    pub name: &'static str,
    pub value: BigRational,
}

fn identity(name: &'static str, value: BigRational) -> IdentityValue {
    IdentityValue { name, value }
}

/// Every closed form available for `ℓ(P_n)`, evaluated independently.
/// Forms whose stated range excludes `n` are omitted; the list is never
/// empty.
pub fn edge_identities(kind: ClassKind, n: usize) -> Vec<IdentityValue> {
    let ni = n as i64;
    let mut out = Vec::new();
    match kind {
        ClassKind::DD => {
            out.push(identity("binomial", rat(binomial(2 * ni - 1, ni - 2))));
            if n >= 1 {
                let v = rat(central_binomial(n)) * ratio(ni - 1, 2 * (ni + 1));
                out.push(identity("central-binomial", v));
            }
        }
        ClassKind::GD => {
            out.push(identity(
                "central-binomial",
                rat(central_binomial(n)) * ratio(ni, 2),
            ));
        }
        ClassKind::MM => {
            if n == 0 {
                out.push(identity("convention", BigRational::zero()));
            } else {
                let v = int(central_trinomial(n)) - int(motzkin(n)) + int(central_trinomial(n - 1))
                    - int(motzkin(n - 1));
                out.push(identity(
                    "trinomial-minus-motzkin",
                    BigRational::from_integer(v),
                ));
                let sum = (0..=ni / 2)
                    .map(|k| {
                        rat(binomial(ni, k) * binomial(ni - k, k)) * ratio(k * (ni - k), k + 1)
                    })
                    .fold(BigRational::zero(), |a, b| a + b);
                out.push(identity("binomial-sum", sum * ratio(2, ni)));
            }
            if n >= 3 {
                let v = trinomial(ni, ni - 2) + trinomial(ni - 1, ni - 3);
                out.push(identity("shifted-trinomial", rat(v)));
            }
        }
        ClassKind::GM => {
            if n < 2 {
                out.push(identity("convention", BigRational::zero()));
            } else {
                let m = ni - 2;
                let three = BigUint::from(3u32);
                let a: BigUint = (0..=m)
                    .map(|k| central_trinomial(k as usize) * three.pow((m - k) as u32))
                    .sum();
                out.push(identity("trinomial-convolution", rat(a * 2u32)));

                let b = (0..=m)
                    .map(|k| {
                        let sign = if (m - k) % 2 == 0 { 1 } else { -1 };
                        rat(central_binomial(k as usize) * central_binomial((m - k) as usize))
                            * BigRational::from_integer(((2 * k + 1) * sign).into())
                            * pow_rat(3, k)
                    })
                    .fold(BigRational::zero(), |a, b| a + b);
                out.push(identity(
                    "binomial-product",
                    b * ratio(2, 1) / pow_rat(4, m),
                ));

                let c = (0..=m)
                    .map(|k| {
                        let v = int(binomial(m + 1, k + 1)
                            * central_binomial(k as usize)
                            * three.pow((m - k) as u32));
                        if k % 2 == 0 {
                            v
                        } else {
                            -v
                        }
                    })
                    .fold(BigInt::zero(), |a, b| a + b);
                out.push(identity(
                    "alternating-sum",
                    BigRational::from_integer(c * 2),
                ));
            }
        }
        ClassKind::SS => {
            if n == 0 {
                out.push(identity("convention", BigRational::zero()));
            } else {
                let v = int(central_delannoy(n))
                    - int(large_schroder(n))
                    - int(central_delannoy(n - 1))
                    + int(large_schroder(n - 1));
                out.push(identity(
                    "delannoy-minus-schroder",
                    BigRational::from_integer(v),
                ));
            }
            let sum = (0..=ni)
                .map(|k| {
                    rat(multichoose(2 * k, ni - k) * central_binomial(k as usize)) * ratio(k, k + 1)
                })
                .fold(BigRational::zero(), |a, b| a + b);
            out.push(identity("multiset-sum", sum));
        }
        ClassKind::GS => {
            let a: BigUint = (0..ni)
                .map(|k| binomial(ni + k, 2 * k) * central_binomial(k as usize) * (ni - k) as u64)
                .sum();
            out.push(identity("binomial-sum", rat(a * 2u32)));
            let b = (0..=ni / 2)
                .map(|k| {
                    rat(binomial(ni, k) * binomial(ni - k, k))
                        * ratio((ni - 2 * k) * (ni + k + 2), k + 1)
                        * pow_rat(2, k + 1)
                        * pow_rat(3, ni - 2 * k - 2)
                })
                .fold(BigRational::zero(), |a, b| a + b);
            out.push(identity("trinomial-type-sum", b));
        }
        ClassKind::FF => {
            let num = int(lucas(n)) * ni - int(fibonacci(n));
            out.push(identity("lucas-fibonacci", BigRational::new(num, 5.into())));
        }
        ClassKind::GF => {
            let sign = if n.is_multiple_of(2) { 1 } else { -1 };
            let num = BigInt::from(3 * ni - 1) * (BigInt::one() << (n + 1))
                + BigInt::from(sign * 2 * (3 * ni + 1));
            out.push(identity("powers-of-two", BigRational::new(num, 27.into())));
        }
    }
    out
}

/// `ℓ(P_n)`: all available identities are evaluated, required to be
/// integral, and required to agree.
pub fn edge_count_formula(kind: ClassKind, n: usize) -> Result<BigUint> {
    let forms = edge_identities(kind, n);
    let first = &forms[0];
    for f in &forms {
        if !f.value.is_integer() || f.value.is_negative() {
            return Err(Error::Invariant(format!(
                "{kind} identity {} gives non-integral value {} at n = {n}",
                f.name, f.value
            )));
        }
        if f.value != first.value {
            return Err(Error::Invariant(format!(
                "{kind} identities {} and {} disagree at n = {n}: {} vs {}",
                first.name, f.name, first.value, f.value
            )));
        }
    }
    Ok(first
        .value
        .to_integer()
        .to_biguint()
        .expect("checked nonnegative"))
}

/// `i(P_n) = ℓ(P_n) / |P_n|`, reduced.
pub fn hasse_index_exact(kind: ClassKind, n: usize) -> Result<BigRational> {
    let edges = edge_count_formula(kind, n)?;
    Ok(BigRational::new(int(edges), int(vertex_count(kind, n))))
}

/// A sequence with a leading-order asymptotic formula.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Quantity {
    CentralTrinomial,
    Motzkin,
    CentralDelannoy,
    LargeSchroder,
    /// `ℓ(P_n)`; available for MM, GM, SS, GS, FF and GF.
    Edges(ClassKind),
}

impl Quantity {
    pub const ALL: [Quantity; 10] = [
        Quantity::CentralTrinomial,
        Quantity::Motzkin,
        Quantity::CentralDelannoy,
        Quantity::LargeSchroder,
        Quantity::Edges(ClassKind::MM),
        Quantity::Edges(ClassKind::GM),
        Quantity::Edges(ClassKind::SS),
        Quantity::Edges(ClassKind::GS),
        Quantity::Edges(ClassKind::FF),
        Quantity::Edges(ClassKind::GF),
    ];

    pub fn exact(self, n: usize) -> Result<BigUint> {
        Ok(match self {
            Quantity::CentralTrinomial => central_trinomial(n),
            Quantity::Motzkin => motzkin(n),
            Quantity::CentralDelannoy => central_delannoy(n),
            Quantity::LargeSchroder => large_schroder(n),
            Quantity::Edges(kind) => edge_count_formula(kind, n)?,
        })
    }
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Quantity::CentralTrinomial => f.write_str("central_trinomial"),
            Quantity::Motzkin => f.write_str("motzkin"),
            Quantity::CentralDelannoy => f.write_str("central_delannoy"),
            Quantity::LargeSchroder => f.write_str("large_schroder"),
            Quantity::Edges(k) => write!(f, "edges({k})"),
        }
    }
}

const SILVER: f64 = 1.0 + std::f64::consts::SQRT_2;

fn golden() -> f64 {
    (1.0 + 5f64.sqrt()) / 2.0
}

/// Natural log of the leading-order estimate.
pub fn ln_asymptotic_estimate(quantity: Quantity, n: usize) -> Result<f64> {
    use std::f64::consts::{LN_2, PI, SQRT_2};
    if n == 0 {
        return Err(Error::Usage("asymptotic estimates need n >= 1".into()));
    }
    let x = n as f64;
    let ln3 = 3f64.ln();
    let ls = SILVER.ln();
    Ok(match quantity {
        Quantity::CentralTrinomial => x * ln3 - LN_2 + 0.5 * (3.0 / (x * PI)).ln(),
        Quantity::Motzkin => (x + 1.0) * ln3 - (2.0 * x).ln() + 0.5 * (3.0 / (x * PI)).ln(),
        Quantity::CentralDelannoy => (2.0 * x + 1.0) * ls - (2.0 * (SQRT_2 * x * PI).sqrt()).ln(),
        Quantity::LargeSchroder => {
            (2.0 * x + 1.0) * ls - x.ln() - 0.5 * (2.0 * SQRT_2 * x * PI).ln()
        }
        Quantity::Edges(ClassKind::MM) => LN_2 + x * ln3 - 0.5 * (3.0 * x * PI).ln(),
        Quantity::Edges(ClassKind::GM) => LN_2 + (x - 2.0) * ln3 + 0.5 * (3.0 * x / PI).ln(),
        Quantity::Edges(ClassKind::SS) => 2.0 * x * ls - 0.5 * (SQRT_2 * x * PI).ln(),
        Quantity::Edges(ClassKind::GS) => 0.5 * (x / (2.0 * SQRT_2 * PI)).ln() + 2.0 * x * ls,
        Quantity::Edges(ClassKind::FF) => (x / 5.0).ln() + x * golden().ln(),
        Quantity::Edges(ClassKind::GF) => (x / 9.0).ln() + (x + 1.0) * LN_2,
        Quantity::Edges(kind) => {
            return Err(Error::Usage(format!(
                "no asymptotic formula is tabulated for the edges of {kind}"
            )))
        }
    })
}

/// Leading-order estimate in double precision (may overflow to infinity
/// for large `n`; prefer [`ln_asymptotic_estimate`]).
pub fn asymptotic_estimate(quantity: Quantity, n: usize) -> Result<f64> {
    Ok(ln_asymptotic_estimate(quantity, n)?.exp())
}

/// Natural log of a positive big integer, accurate to double precision.
pub fn ln_biguint(x: &BigUint) -> f64 {
    let bits = x.bits();
    if bits <= 64 {
        return x.to_f64().expect("fits").ln();
    }
    let shift = bits - 64;
    let top = (x >> shift).to_f64().expect("fits");
    top.ln() + shift as f64 * std::f64::consts::LN_2
}

/// Exact value against its estimate, compared in log space.
#[derive(Debug, Clone, Serialize)]
pub struct AsymptoticReport {
    pub quantity: String,
    pub n: usize,
    #[serde(serialize_with = "as_decimal")]
    pub exact: BigUint,
    pub estimate: f64,
    /// `exact / estimate`.
    pub ratio: f64,
    /// `ln(exact) - ln(estimate)`.
    pub log_gap: f64,
}

fn as_decimal<S: serde::Serializer>(v: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

pub fn asymptotic_report(quantity: Quantity, n: usize) -> Result<AsymptoticReport> {
    let exact = quantity.exact(n)?;
    let ln_est = ln_asymptotic_estimate(quantity, n)?;
    let log_gap = ln_biguint(&exact) - ln_est;
    Ok(AsymptoticReport {
        quantity: quantity.to_string(),
        n,
        exact,
        estimate: ln_est.exp(),
        ratio: log_gap.exp(),
        log_gap,
    })
}

/// Largest distance from the Boolean slope `1/2` still called "quasi".
pub const QUASI_BOOLEAN_BOUND: f64 = 0.1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum HasseCategory {
    /// `i(P_n) = n/2` exactly.
    Boolean,
    /// `i(P_n) ~ n/2`.
    AsymptoticallyBoolean,
    /// `i(P_n) ~ (1/2 ± c) n` with `0 < c <= 1/10`.
    AsymptoticallyQuasiBoolean,
    NotQuasiBoolean,
}

impl fmt::Display for HasseCategory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            HasseCategory::Boolean => "Boolean",
            HasseCategory::AsymptoticallyBoolean => "asymptotically Boolean",
            HasseCategory::AsymptoticallyQuasiBoolean => "asymptotically quasi Boolean",
            HasseCategory::NotQuasiBoolean => "not quasi Boolean",
        })
    }
}

/// Limit of `i(P_n) / n`, with a readable closed form.
pub fn index_slope(kind: ClassKind) -> (f64, &'static str) {
    match kind {
        ClassKind::DD | ClassKind::GD => (0.5, "1/2"),
        ClassKind::MM | ClassKind::GM => (4.0 / 9.0, "4/9"),
        ClassKind::SS | ClassKind::GS => (2.0 - std::f64::consts::SQRT_2, "2-sqrt(2)"),
        ClassKind::FF => (1.0 / (5f64.sqrt() * golden()), "1/(sqrt(5)*phi)"),
        ClassKind::GF => (1.0 / 3.0, "1/3"),
    }
}

fn index_form(kind: ClassKind) -> &'static str {
    match kind {
        ClassKind::DD => "(n-1)/2",
        ClassKind::GD => "n/2",
        ClassKind::MM | ClassKind::GM => "~ (4/9) n",
        ClassKind::SS | ClassKind::GS => "~ (2-sqrt(2)) n",
        ClassKind::FF => "~ n/(sqrt(5)*phi)",
        ClassKind::GF => "~ n/3",
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassificationReport {
    pub class: ClassKind,
    pub index_form: &'static str,
    pub slope: f64,
    pub slope_form: &'static str,
    /// `|slope - 1/2|`.
    pub c: f64,
    pub category: HasseCategory,
    /// Same limiting slope as the partner class.
    pub tamed: bool,
}

/// Range over which an exactly Boolean index is confirmed.
const BOOLEAN_CHECK_RANGE: std::ops::RangeInclusive<usize> = 1..=40;

pub fn classification_report(kind: ClassKind) -> Result<ClassificationReport> {
    let (slope, slope_form) = index_slope(kind);
    let c = (slope - 0.5).abs();
    let mut exactly_boolean = true;
    for n in BOOLEAN_CHECK_RANGE {
        if hasse_index_exact(kind, n)? != ratio(n as i64, 2) {
            exactly_boolean = false;
            break;
        }
    }
    let category = if exactly_boolean {
        HasseCategory::Boolean
    } else if c < 1e-12 {
        HasseCategory::AsymptoticallyBoolean
    } else if c <= QUASI_BOOLEAN_BOUND {
        HasseCategory::AsymptoticallyQuasiBoolean
    } else {
        HasseCategory::NotQuasiBoolean
    };
    let tamed = (index_slope(kind.partner()).0 - slope).abs() < 1e-12;
    Ok(ClassificationReport {
        class: kind,
        index_form: index_form(kind),
        slope,
        slope_form,
        c,
        category,
        tamed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(6, 3), u(20));
        assert_eq!(binomial(-1, -2), u(0));
        assert_eq!(binomial(3, 4), u(0));
        assert_eq!(multichoose(2, 1), u(2));
        assert_eq!(multichoose(0, 3), u(0));
        assert_eq!(multichoose(0, 0), u(1));
    }

    #[test]
    fn sequence_examples() {
        use SequenceId::*;
        assert_eq!(sequence_value(Catalan, 3, None).unwrap(), u(5));
        assert_eq!(sequence_value(Trinomial, 2, Some(2)).unwrap(), u(3));
        assert_eq!(sequence_value(Trinomial, 7, Some(0)).unwrap(), u(1));
        assert_eq!(sequence_value(Lucas, 4, None).unwrap(), u(7));
        assert_eq!(sequence_value(Fibonacci, 4, None).unwrap(), u(3));
        assert!(sequence_value(Trinomial, 2, Some(5)).is_err());
        assert!(sequence_value(Trinomial, 2, None).is_err());
        assert!(sequence_value(Motzkin, 2, Some(1)).is_err());
        assert_eq!("large_schroder".parse::<SequenceId>(), Ok(LargeSchroder));
    }

    #[test]
    fn recurrences_against_direct_definitions() {
        for n in 0..40usize {
            let row = trinomial_row(n);
            assert_eq!(central_trinomial(n), row[n], "T_{n}");
            // Motzkin: M_n = sum_k C(n, 2k) C_k
            let m: BigUint = (0..=n / 2)
                .map(|k| binomial(n as i64, 2 * k as i64) * catalan(k))
                .sum();
            assert_eq!(motzkin(n), m, "M_{n}");
            // Delannoy: d_n = sum_k C(n, k) C(n + k, k)
            let d: BigUint = (0..=n as i64)
                .map(|k| binomial(n as i64, k) * binomial(n as i64 + k, k))
                .sum();
            assert_eq!(central_delannoy(n), d, "d_{n}");
            // large Schröder: r_n = sum_k C(n + k, n - k) C_k
            let r: BigUint = (0..=n as i64)
                .map(|k| binomial(n as i64 + k, n as i64 - k) * catalan(k as usize))
                .sum();
            assert_eq!(large_schroder(n), r, "r_{n}");
        }
        assert_eq!(jacobsthal(5), u(11));
    }

    #[test]
    fn formula_examples() {
        assert_eq!(edge_count_formula(ClassKind::DD, 4).unwrap(), u(21));
        assert_eq!(edge_count_formula(ClassKind::GF, 4).unwrap(), u(14));
        assert_eq!(edge_count_formula(ClassKind::MM, 10).unwrap(), u(9069));
        assert_eq!(edge_count_formula(ClassKind::FF, 2).unwrap(), u(1));
        for kind in ClassKind::ALL {
            assert_eq!(edge_count_formula(kind, 0).unwrap(), u(0), "{kind}");
        }
    }

    #[test]
    fn every_identity_family_has_its_alternatives() {
        let count = |k, n| edge_identities(k, n).len();
        assert_eq!(count(ClassKind::MM, 10), 3);
        assert_eq!(count(ClassKind::GM, 10), 3);
        assert_eq!(count(ClassKind::SS, 10), 2);
        assert_eq!(count(ClassKind::GS, 10), 2);
        assert_eq!(count(ClassKind::DD, 10), 2);
    }

    #[test]
    fn hasse_index_examples() {
        assert_eq!(hasse_index_exact(ClassKind::GD, 9).unwrap(), ratio(9, 2));
        assert_eq!(hasse_index_exact(ClassKind::DD, 1).unwrap(), ratio(0, 1));
        assert_eq!(hasse_index_exact(ClassKind::DD, 8).unwrap(), ratio(7, 2));
    }

    #[test]
    fn fibonacci_estimate_example() {
        let est = asymptotic_estimate(Quantity::Edges(ClassKind::FF), 10).unwrap();
        assert!((est - 245.99).abs() < 0.01, "{est}");
        let r = asymptotic_report(Quantity::CentralTrinomial, 300).unwrap();
        assert!((r.ratio - 1.0).abs() < 0.05);
        assert!(ln_asymptotic_estimate(Quantity::Edges(ClassKind::DD), 5).is_err());
        assert!(ln_asymptotic_estimate(Quantity::Motzkin, 0).is_err());
    }

    #[test]
    fn ln_of_big_integers() {
        let x = BigUint::from(3u32).pow(1000);
        let expected = 1000.0 * 3f64.ln();
        assert!((ln_biguint(&x) - expected).abs() < 1e-9 * expected);
        assert!((ln_biguint(&u(1000)) - 1000f64.ln()).abs() < 1e-12);
    }

    #[test]
    fn classification() {
        let gd = classification_report(ClassKind::GD).unwrap();
        assert_eq!(gd.category, HasseCategory::Boolean);
        assert_eq!(gd.c, 0.0);
        let dd = classification_report(ClassKind::DD).unwrap();
        assert_eq!(dd.category, HasseCategory::AsymptoticallyBoolean);
        let mm = classification_report(ClassKind::MM).unwrap();
        assert_eq!(mm.category, HasseCategory::AsymptoticallyQuasiBoolean);
        assert!((mm.c - 1.0 / 18.0).abs() < 1e-12);
        let ss = classification_report(ClassKind::SS).unwrap();
        assert_eq!(ss.category, HasseCategory::AsymptoticallyQuasiBoolean);
        assert!((ss.c - 0.0858).abs() < 1e-3);
        let ff = classification_report(ClassKind::FF).unwrap();
        assert_eq!(ff.category, HasseCategory::NotQuasiBoolean);
        assert!((ff.slope - 0.276).abs() < 1e-3);
        assert!(!ff.tamed);
        let gf = classification_report(ClassKind::GF).unwrap();
        assert_eq!(gf.category, HasseCategory::NotQuasiBoolean);
        for kind in [
            ClassKind::DD,
            ClassKind::GD,
            ClassKind::MM,
            ClassKind::GM,
            ClassKind::SS,
            ClassKind::GS,
        ] {
            assert!(classification_report(kind).unwrap().tamed, "{kind}");
        }
    }
}
