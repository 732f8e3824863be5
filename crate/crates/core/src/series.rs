//! Truncated formal power series with exact integer coefficients.
//!
//! A [`TruncatedSeries`] carries coefficients of `z^0 ..= z^N` and knows its
//! order `N`; arithmetic truncates to the smaller operand order. A
//! [`RationalGF`] is a quotient of integer polynomials whose denominator has
//! constant term `±1`, which is what keeps every expansion integral.
//!
//! Truncation orders are always passed explicitly. Nothing here assumes a
//! global precision.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::exactnum::{factorial, BigCount};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("denominator constant term must be ±1 for an integral expansion, got {0}")]
    NonUnitDenominator(BigInt),
    #[error("denominator has zero constant term")]
    ZeroDenominator,
    #[error("{0}")]
    InvalidParameter(String),
}

/// Dense integer polynomial, coefficient `i` multiplies `z^i`. Trailing zeros
/// are trimmed.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Polynomial(Vec<BigInt>);

impl Polynomial {
    pub fn new<T: Into<BigInt>>(coeffs: impl IntoIterator<Item = T>) -> Self {
        let mut p = Polynomial(coeffs.into_iter().map(Into::into).collect());
        p.trim();
        p
    }

    pub fn zero() -> Self {
        Polynomial(Vec::new())
    }

    pub fn one() -> Self {
        Polynomial(vec![BigInt::one()])
    }

    /// `c z^exp`.
    pub fn monomial(coeff: impl Into<BigInt>, exp: usize) -> Self {
        let mut v = vec![BigInt::zero(); exp + 1];
        v[exp] = coeff.into();
        Polynomial::new(v)
    }

    /// Builds a polynomial from `(coefficient, exponent)` terms, combining
    /// repeated exponents.
    pub fn from_terms(terms: &[(i64, usize)]) -> Self {
        let degree = terms.iter().map(|&(_, e)| e).max().unwrap_or(0);
        let mut v = vec![BigInt::zero(); degree + 1];
        for &(c, e) in terms {
            v[e] += c;
        }
        Polynomial::new(v)
    }

    fn trim(&mut self) {
        while self.0.last().is_some_and(Zero::is_zero) {
            self.0.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.0
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.0.get(i).cloned().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let len = self.0.len().max(rhs.0.len());
        Polynomial::new((0..len).map(|i| self.coeff(i) + rhs.coeff(i)))
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let len = self.0.len().max(rhs.0.len());
        Polynomial::new((0..len).map(|i| self.coeff(i) - rhs.coeff(i)))
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut v = vec![BigInt::zero(); self.0.len() + rhs.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in rhs.0.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        Polynomial::new(v)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.0.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mag = c.abs();
            match (i, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => f.write_str("z")?,
                (1, false) => write!(f, "{mag}z")?,
                (_, true) => write!(f, "z^{i}")?,
                (_, false) => write!(f, "{mag}z^{i}")?,
            }
        }
        Ok(())
    }
}

/// Coefficients `c_0 ..= c_N` of a power series known modulo `z^{N+1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<BigInt>,
}

impl TruncatedSeries {
    /// A series of order `coeffs.len() - 1`. Panics on an empty vector; a
    /// series always knows at least `c_0`.
    pub fn new<T: Into<BigInt>>(coeffs: impl IntoIterator<Item = T>) -> Self {
        let coeffs: Vec<BigInt> = coeffs.into_iter().map(Into::into).collect();
        assert!(
            !coeffs.is_empty(),
            "a truncated series needs at least one coefficient"
        );
        TruncatedSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![BigInt::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::from_polynomial(&Polynomial::one(), order)
    }

    /// `p mod z^{order+1}`.
    pub fn from_polynomial(p: &Polynomial, order: usize) -> Self {
        TruncatedSeries {
            coeffs: (0..=order).map(|i| p.coeff(i)).collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `z^n`. Panics if `n` exceeds the order.
    pub fn coeff(&self, n: usize) -> &BigInt {
        &self.coeffs[n]
    }

    /// Coefficient of `z^n` as a count. Panics if it is negative.
    pub fn count(&self, n: usize) -> BigCount {
        BigCount::from_bigint(&self.coeffs[n])
            .unwrap_or_else(|| panic!("coefficient of z^{n} is negative"))
    }

    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order(), "cannot extend a truncated series");
        TruncatedSeries {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    /// Multiplication by `z^shift`, keeping the order.
    pub fn shift(&self, shift: usize) -> Self {
        let order = self.order();
        TruncatedSeries {
            coeffs: (0..=order)
                .map(|i| {
                    if i >= shift {
                        self.coeffs[i - shift].clone()
                    } else {
                        BigInt::zero()
                    }
                })
                .collect(),
        }
    }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(rhs.order());
        TruncatedSeries {
            coeffs: (0..=order)
                .map(|i| &self.coeffs[i] + &rhs.coeffs[i])
                .collect(),
        }
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn sub(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(rhs.order());
        TruncatedSeries {
            coeffs: (0..=order)
                .map(|i| &self.coeffs[i] - &rhs.coeffs[i])
                .collect(),
        }
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn neg(self) -> TruncatedSeries {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(rhs.order());
        let mut coeffs = vec![BigInt::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                coeffs[i + j] += a * b;
            }
        }
        TruncatedSeries { coeffs }
    }
}

pub fn series_add(a: &TruncatedSeries, b: &TruncatedSeries) -> TruncatedSeries {
    a + b
}

/// Cauchy product truncated to the smaller order.
pub fn series_mul(a: &TruncatedSeries, b: &TruncatedSeries) -> TruncatedSeries {
    a * b
}

/// `numerator / denominator` with an invertible denominator constant term.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalGF {
    numerator: Polynomial,
    denominator: Polynomial,
}

impl RationalGF {
    pub fn new(numerator: Polynomial, denominator: Polynomial) -> Result<Self, SeriesError> {
        if denominator.coeff(0).is_zero() {
            return Err(SeriesError::ZeroDenominator);
        }
        Ok(RationalGF {
            numerator,
            denominator,
        })
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.numerator
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.denominator
    }

    pub fn expand(&self, order: usize) -> Result<TruncatedSeries, SeriesError> {
        series_from_rational(self, order)
    }
}

impl Mul for &RationalGF {
    type Output = RationalGF;
    fn mul(self, rhs: &RationalGF) -> RationalGF {
        RationalGF {
            numerator: &self.numerator * &rhs.numerator,
            denominator: &self.denominator * &rhs.denominator,
        }
    }
}

impl fmt::Display for RationalGF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.numerator, self.denominator)
    }
}

/// Expands `gf` to order `order` by long division: with denominator
/// `d_0 + d_1 z + ...`, `c_n = (a_n - Σ_{i≥1} d_i c_{n-i}) / d_0`.
pub fn series_from_rational(gf: &RationalGF, order: usize) -> Result<TruncatedSeries, SeriesError> {
    let d0 = gf.denominator.coeff(0);
    if !d0.abs().is_one() {
        return Err(SeriesError::NonUnitDenominator(d0));
    }
    let den = gf.denominator.coeffs();
    let mut coeffs: Vec<BigInt> = Vec::with_capacity(order + 1);
    for n in 0..=order {
        let mut acc = gf.numerator.coeff(n);
        for (i, d) in den.iter().enumerate().take(n + 1).skip(1) {
            if !d.is_zero() {
                acc -= d * &coeffs[n - i];
            }
        }
        coeffs.push(acc * &d0);
    }
    Ok(TruncatedSeries { coeffs })
}

fn require_positive(k: u32, what: &str) -> Result<usize, SeriesError> {
    if k == 0 {
        Err(SeriesError::InvalidParameter(format!(
            "{what}: k must be at least 1"
        )))
    } else {
        Ok(k as usize)
    }
}

/// `F_k(z) = (1 - z) z^k / (1 - 2z + z^k)`, counting compositions whose first
/// part `k` strictly exceeds every later part.
pub fn gf_leading_strict(k: u32) -> Result<RationalGF, SeriesError> {
    let k = require_positive(k, "strict leading-summand gf")?;
    RationalGF::new(
        Polynomial::from_terms(&[(1, k), (-1, k + 1)]),
        Polynomial::from_terms(&[(1, 0), (-2, 1), (1, k)]),
    )
}

/// `F*_k(z) = (1 - z) z^k / (1 - 2z + z^{k+1})`, the weak variant.
pub fn gf_leading_weak(k: u32) -> Result<RationalGF, SeriesError> {
    let k = require_positive(k, "weak leading-summand gf")?;
    RationalGF::new(
        Polynomial::from_terms(&[(1, k), (-1, k + 1)]),
        Polynomial::from_terms(&[(1, 0), (-2, 1), (1, k + 1)]),
    )
}

/// `1 / (1 - z - z^2 - ... - z^m)`, whose coefficients count compositions
/// into parts at most `m`.
pub fn gf_higher_fibonacci(m: u32) -> RationalGF {
    let mut terms = vec![(1, 0)];
    terms.extend((1..=m as usize).map(|i| (-1, i)));
    RationalGF::new(Polynomial::one(), Polynomial::from_terms(&terms)).expect("constant term is 1")
}

/// `z/(1 - 2z)`, all compositions of `n >= 1`.
pub fn gf_all_compositions() -> RationalGF {
    RationalGF::new(
        Polynomial::monomial(1, 1),
        Polynomial::from_terms(&[(1, 0), (-2, 1)]),
    )
    .expect("constant term is 1")
}

/// `q/(1 - q)` with `q = (z - z^k + z^{k+1})/(1 - z)`, i.e.
/// `(z - z^k + z^{k+1}) / (1 - 2z + z^k - z^{k+1})`: compositions with no
/// part equal to `k`.
pub fn gf_avoiding(k: u32) -> Result<RationalGF, SeriesError> {
    let k = require_positive(k, "part-avoiding gf")?;
    RationalGF::new(
        Polynomial::from_terms(&[(1, 1), (-1, k), (1, k + 1)]),
        Polynomial::from_terms(&[(1, 0), (-2, 1), (1, k), (-1, k + 1)]),
    )
}

/// A generating function given as the difference of two rational ones.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GfDifference {
    pub minuend: RationalGF,
    pub subtrahend: RationalGF,
}

impl GfDifference {
    pub fn expand(&self, order: usize) -> Result<TruncatedSeries, SeriesError> {
        Ok(&self.minuend.expand(order)? - &self.subtrahend.expand(order)?)
    }
}

/// `z/(1-2z) - (z - z^k + z^{k+1})/(1 - 2z + z^k - z^{k+1})`: compositions in
/// which some part equals `k`.
pub fn gf_containing(k: u32) -> Result<GfDifference, SeriesError> {
    Ok(GfDifference {
        minuend: gf_all_compositions(),
        subtrahend: gf_avoiding(k)?,
    })
}

/// `Σ_{k≥1} k! z^{k(k+1)/2} / ((1-z)(1-z^2)...(1-z^k))` to order `order`:
/// compositions into distinct parts.
///
/// Term `k` starts at `z^{k(k+1)/2}`, so only `k` with `k(k+1)/2 <= order`
/// contribute.
pub fn gf_distinct_total(order: usize) -> TruncatedSeries {
    let mut total = TruncatedSeries::zero(order);
    let mut denominator = Polynomial::one();
    for k in 1.. {
        let lowest = k * (k + 1) / 2;
        if lowest > order {
            break;
        }
        denominator = &denominator * &Polynomial::from_terms(&[(1, 0), (-1, k)]);
        let numerator = Polynomial::monomial(factorial(k as u64).to_bigint(), lowest);
        let term = RationalGF::new(numerator, denominator.clone())
            .and_then(|gf| gf.expand(order))
            .expect("product of (1 - z^j) has constant term 1");
        total = &total + &term;
    }
    total
}

/// `F(z) = Σ_{k≥1} F_k(z)` to order `order`. `F_k` starts at `z^k`, so
/// `k <= order` suffices.
pub fn gf_leading_strict_total(order: usize) -> TruncatedSeries {
    sum_over_k(order, gf_leading_strict)
}

/// `F*(z) = Σ_{k≥1} F*_k(z)` to order `order`.
pub fn gf_leading_weak_total(order: usize) -> TruncatedSeries {
    sum_over_k(order, gf_leading_weak)
}

fn sum_over_k(
    order: usize,
    gf: impl Fn(u32) -> Result<RationalGF, SeriesError>,
) -> TruncatedSeries {
    let mut total = TruncatedSeries::zero(order);
    for k in 1..=order {
        let k = u32::try_from(k).expect("order fits in u32");
        let term = gf(k)
            .and_then(|g| g.expand(order))
            .expect("leading-summand gf has unit denominator");
        total = &total + &term;
    }
    total
}
