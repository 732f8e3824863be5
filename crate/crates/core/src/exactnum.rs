//! Exact nonnegative counts and the classical special numbers.
//!
//! Everything here works over [`BigCount`], an arbitrary-precision
//! nonnegative integer. Counting functions are total: arguments outside the
//! natural support give zero rather than an error. The only error is
//! structural misuse, such as a multinomial whose parts do not sum to `n`.
//!
//! Two of the Stirling routines deliberately take the long way round, summing
//! over integer compositions, so they can be checked against the standard
//! triangle recurrences.

use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Mul, MulAssign, Sub};
use std::str::FromStr;
use std::sync::{Mutex, OnceLock};

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

/// Errors raised by the exact-number routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("multinomial parts sum to {actual}, expected {expected}")]
    PartSumMismatch { expected: u64, actual: u64 },
}

/// An arbitrary-precision nonnegative integer holding a count.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BigCount(BigUint);

impl BigCount {
    pub fn zero() -> Self {
        BigCount(BigUint::zero())
    }

    pub fn one() -> Self {
        BigCount(BigUint::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// `2^exp`.
    pub fn pow2(exp: u64) -> Self {
        BigCount(BigUint::one() << exp)
    }

    pub fn pow(&self, exp: u32) -> Self {
        BigCount(self.0.pow(exp))
    }

    pub fn as_biguint(&self) -> &BigUint {
        &self.0
    }

    pub fn into_biguint(self) -> BigUint {
        self.0
    }

    /// Signed view, for series arithmetic.
    pub fn to_bigint(&self) -> BigInt {
        BigInt::from_biguint(Sign::Plus, self.0.clone())
    }

    /// Converts a signed integer known to be nonnegative. Returns `None` for
    /// negative input.
    pub fn from_bigint(value: &BigInt) -> Option<Self> {
        value.to_biguint().map(BigCount)
    }

    pub fn to_u64(&self) -> Option<u64> {
        self.0.to_u64()
    }

    pub fn checked_sub(&self, rhs: &BigCount) -> Option<BigCount> {
        if self.0 >= rhs.0 {
            Some(BigCount(&self.0 - &rhs.0))
        } else {
            None
        }
    }

    /// Division with a zero-remainder check.
    pub fn checked_exact_div(&self, divisor: &BigCount) -> Option<BigCount> {
        if divisor.is_zero() {
            return None;
        }
        let (q, r) = self.0.div_rem(&divisor.0);
        r.is_zero().then_some(BigCount(q))
    }

    /// Division that is known to be exact.
    ///
    /// Panics if the remainder is nonzero: every caller divides by a quantity
    /// that a counting identity guarantees to be a divisor, so a remainder
    /// means an arithmetic bug.
    pub fn exact_div(&self, divisor: &BigCount) -> BigCount {
        match self.checked_exact_div(divisor) {
            Some(q) => q,
            None => panic!("inexact division: {self} / {divisor}"),
        }
    }
}

impl fmt::Display for BigCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl fmt::Debug for BigCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BigCount({})", self.0)
    }
}

impl FromStr for BigCount {
    type Err = num_bigint::ParseBigIntError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        BigUint::from_str(s).map(BigCount)
    }
}

macro_rules! from_unsigned {
    ($($t:ty),*) => {$(
        impl From<$t> for BigCount {
            fn from(v: $t) -> Self {
                BigCount(BigUint::from(v))
            }
        }
    )*};
}
from_unsigned!(u8, u16, u32, u64, u128, usize);

impl From<BigUint> for BigCount {
    fn from(v: BigUint) -> Self {
        BigCount(v)
    }
}

impl Add for BigCount {
    type Output = BigCount;
    fn add(self, rhs: BigCount) -> BigCount {
        BigCount(self.0 + rhs.0)
    }
}

impl<'a> Add<&'a BigCount> for BigCount {
    type Output = BigCount;
    fn add(self, rhs: &'a BigCount) -> BigCount {
        BigCount(self.0 + &rhs.0)
    }
}

impl<'a> Add<&'a BigCount> for &BigCount {
    type Output = BigCount;
    fn add(self, rhs: &'a BigCount) -> BigCount {
        BigCount(&self.0 + &rhs.0)
    }
}

impl AddAssign<&BigCount> for BigCount {
    fn add_assign(&mut self, rhs: &BigCount) {
        self.0 += &rhs.0;
    }
}

impl AddAssign for BigCount {
    fn add_assign(&mut self, rhs: BigCount) {
        self.0 += rhs.0;
    }
}

/// Panics on underflow, like `BigUint`. Use [`BigCount::checked_sub`] when
/// the sign is not guaranteed.
impl Sub for BigCount {
    type Output = BigCount;
    fn sub(self, rhs: BigCount) -> BigCount {
        BigCount(self.0 - rhs.0)
    }
}

impl<'a> Sub<&'a BigCount> for &BigCount {
    type Output = BigCount;
    fn sub(self, rhs: &'a BigCount) -> BigCount {
        BigCount(&self.0 - &rhs.0)
    }
}

impl Mul for BigCount {
    type Output = BigCount;
    fn mul(self, rhs: BigCount) -> BigCount {
        BigCount(self.0 * rhs.0)
    }
}

impl<'a> Mul<&'a BigCount> for &BigCount {
    type Output = BigCount;
    fn mul(self, rhs: &'a BigCount) -> BigCount {
        BigCount(&self.0 * &rhs.0)
    }
}

impl<'a> Mul<&'a BigCount> for BigCount {
    type Output = BigCount;
    fn mul(self, rhs: &'a BigCount) -> BigCount {
        BigCount(self.0 * &rhs.0)
    }
}

impl Mul<u64> for BigCount {
    type Output = BigCount;
    fn mul(self, rhs: u64) -> BigCount {
        BigCount(self.0 * rhs)
    }
}

impl MulAssign<&BigCount> for BigCount {
    fn mul_assign(&mut self, rhs: &BigCount) {
        self.0 *= &rhs.0;
    }
}

impl Sum for BigCount {
    fn sum<I: Iterator<Item = BigCount>>(iter: I) -> Self {
        iter.fold(BigCount::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a BigCount> for BigCount {
    fn sum<I: Iterator<Item = &'a BigCount>>(iter: I) -> Self {
        iter.fold(BigCount::zero(), |acc, x| acc + x)
    }
}

impl Product for BigCount {
    fn product<I: Iterator<Item = BigCount>>(iter: I) -> Self {
        iter.fold(BigCount::one(), |acc, x| acc * x)
    }
}

// Factorials are requested over and over by the composition sums; keep a
// shared prefix table. Entries are only ever appended.
fn factorial_table() -> &'static Mutex<Vec<BigUint>> {
    static TABLE: OnceLock<Mutex<Vec<BigUint>>> = OnceLock::new();
    TABLE.get_or_init(|| Mutex::new(vec![BigUint::one()]))
}

/// `n!`.
pub fn factorial(n: u64) -> BigCount {
    let idx = usize::try_from(n).expect("factorial argument exceeds usize");
    let mut table = factorial_table()
        .lock()
        .unwrap_or_else(|poisoned| poisoned.into_inner());
    while table.len() <= idx {
        let next = table.last().unwrap() * BigUint::from(table.len());
        table.push(next);
    }
    BigCount(table[idx].clone())
}

/// `n` choose `k`, zero outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> BigCount {
    if n < 0 || k < 0 || k > n {
        return BigCount::zero();
    }
    let k = k.min(n - k) as u64;
    let n = n as u64;
    let mut acc = BigUint::one();
    for i in 1..=k {
        acc = acc * (n - k + i) / i;
    }
    BigCount(acc)
}

/// `n! / (p_1! p_2! ... p_m!)` for parts summing to `n`.
pub fn multinomial(n: u64, parts: &[u64]) -> Result<BigCount, ExactError> {
    let actual: u64 = parts.iter().sum();
    if actual != n {
        return Err(ExactError::PartSumMismatch {
            expected: n,
            actual,
        });
    }
    let denominator: BigCount = parts.iter().map(|&p| factorial(p)).product();
    Ok(factorial(n).exact_div(&denominator))
}

/// The `n`-th Bell number, from the Bell triangle.
pub fn bell(n: u64) -> BigCount {
    let mut row = vec![BigUint::one()];
    for _ in 0..n {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(row.last().unwrap().clone());
        for entry in &row {
            let value = next.last().unwrap() + entry;
            next.push(value);
        }
        row = next;
    }
    BigCount(row.swap_remove(0))
}

/// Stirling numbers of the second kind, `{n k}`.
pub fn stirling2(n: u64, k: u64) -> BigCount {
    stirling_row(n, k, |_, j| j)
}

/// Unsigned Stirling numbers of the first kind, `[n k]`.
pub fn stirling1(n: u64, k: u64) -> BigCount {
    stirling_row(n, k, |i, _| i - 1)
}

// Shared triangle driver: T(i, j) = weight(i, j) * T(i-1, j) + T(i-1, j-1).
fn stirling_row(n: u64, k: u64, weight: impl Fn(u64, u64) -> u64) -> BigCount {
    if k > n {
        return BigCount::zero();
    }
    let k = k as usize;
    let mut prev = vec![BigUint::zero(); k + 1];
    prev[0] = BigUint::one();
    for i in 1..=n {
        let mut curr = vec![BigUint::zero(); k + 1];
        for j in 1..=k.min(i as usize) {
            curr[j] = &prev[j] * weight(i, j as u64) + &prev[j - 1];
        }
        prev = curr;
    }
    BigCount(prev.swap_remove(k))
}

/// Calls `visit` with every composition of `n` into exactly `k` positive
/// parts, in lexicographic order.
pub(crate) fn for_each_positive_composition(n: u64, k: u64, mut visit: impl FnMut(&[u64])) {
    fn go(remaining: u64, slots: u64, buf: &mut Vec<u64>, visit: &mut dyn FnMut(&[u64])) {
        if slots == 0 {
            if remaining == 0 {
                visit(buf);
            }
            return;
        }
        if remaining < slots {
            return;
        }
        let max_part = remaining - (slots - 1);
        for part in 1..=max_part {
            buf.push(part);
            go(remaining - part, slots - 1, buf, visit);
            buf.pop();
        }
    }
    let mut buf = Vec::with_capacity(k as usize);
    go(n, k, &mut buf, &mut visit);
}

/// `{n k}` as `(1/k!)` times the sum of multinomials over all compositions of
/// `n` into `k` positive parts.
pub fn stirling2_via_compositions(n: u64, k: u64) -> BigCount {
    let mut total = BigCount::zero();
    for_each_positive_composition(n, k, |parts| {
        total += multinomial(n, parts).expect("composition parts sum to n");
    });
    total.exact_div(&factorial(k))
}

/// `[n k]` as `(n!/k!)` times the sum of `1/(i_1 i_2 ... i_k)` over all
/// compositions of `n` into `k` positive parts, accumulated as an exact
/// rational.
pub fn stirling1_via_compositions(n: u64, k: u64) -> BigCount {
    let mut sum = BigRational::zero();
    for_each_positive_composition(n, k, |parts| {
        let denom: BigInt = parts.iter().map(|&p| BigInt::from(p)).product();
        sum += BigRational::new(BigInt::one(), denom);
    });
    let scaled = sum * BigRational::from_integer(factorial(n).to_bigint())
        / BigRational::from_integer(factorial(k).to_bigint());
    assert!(
        scaled.is_integer(),
        "composition sum for [{n} {k}] is not integral: {scaled}"
    );
    BigCount::from_bigint(&scaled.to_integer()).expect("positive sum")
}

/// Set partitions of an `eta`-set into `kappa` blocks that all have size
/// `lambda`: `eta! / (kappa! (lambda!)^kappa)` when `eta = kappa * lambda`,
/// zero otherwise.
pub fn equal_block_partitions(eta: u64, kappa: u64, lambda: u64) -> BigCount {
    if kappa.checked_mul(lambda) != Some(eta) {
        return BigCount::zero();
    }
    if lambda == 0 {
        // eta == 0 here; only the empty partition has no blocks.
        return if kappa == 0 {
            BigCount::one()
        } else {
            BigCount::zero()
        };
    }
    let exp = u32::try_from(kappa).expect("block count exceeds u32");
    let denominator = factorial(kappa) * factorial(lambda).pow(exp);
    factorial(eta).exact_div(&denominator)
}

/// Compositions of `n` into `k` positive parts counted through partitions:
/// the sum over multiplicity vectors `lambda` with `sum i*lambda_i = n` and
/// `sum lambda_i = k` of `k! / (lambda_1! ... lambda_n!)`.
pub fn binomial_via_partition_multiplicities(n: u64, k: u64) -> BigCount {
    // Walk partitions of n into exactly k parts as nonincreasing sequences,
    // collapsing runs into multiplicities.
    fn go(
        remaining: u64,
        slots: u64,
        max_part: u64,
        parts: &mut Vec<u64>,
        k_fact: &BigCount,
        total: &mut BigCount,
    ) {
        if slots == 0 {
            if remaining == 0 {
                let mut denominator = BigCount::one();
                for run in parts.chunk_by(|a, b| a == b) {
                    denominator *= &factorial(run.len() as u64);
                }
                *total += k_fact.exact_div(&denominator);
            }
            return;
        }
        // Every remaining slot holds at least 1 and at most `max_part`.
        if remaining < slots || remaining > slots * max_part {
            return;
        }
        let hi = max_part.min(remaining - (slots - 1));
        for part in (1..=hi).rev() {
            parts.push(part);
            go(remaining - part, slots - 1, part, parts, k_fact, total);
            parts.pop();
        }
    }
    let k_fact = factorial(k);
    let mut total = BigCount::zero();
    go(n, k, n.max(1), &mut Vec::new(), &k_fact, &mut total);
    total
}
