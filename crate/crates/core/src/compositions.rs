//! Integer compositions under part constraints.
//!
//! A composition of `n` is an ordered sequence of parts summing to `n`. The
//! counters in this module cover bounded parts, pairwise distinct parts,
//! compositions whose leading summand bounds the rest, and compositions that
//! avoid or contain a given part. [`enumerate_compositions`] lists solutions
//! explicitly and is the reference every counter is tested against.
//!
//! Counting functions take signed arguments and return zero outside their
//! support, so recurrences can index below zero without special cases.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::exactnum::{binomial, factorial, BigCount};

/// Default ceiling on the number of compositions an enumeration may return.
pub const DEFAULT_ENUMERATION_LIMIT: usize = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CompositionError {
    #[error("enumeration would exceed the limit of {limit} compositions")]
    EnumerationLimit { limit: usize },
    #[error("invalid part bounds: lower {lower} exceeds upper {upper}")]
    InvalidBounds { lower: u64, upper: u64 },
}

/// An ordered sequence of nonnegative parts.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Composition(Vec<u64>);

impl Composition {
    pub fn new(parts: Vec<u64>) -> Self {
        Composition(parts)
    }

    pub fn parts(&self) -> &[u64] {
        &self.0
    }

    /// The number being composed.
    pub fn total(&self) -> u64 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

/// Upper limit on part size.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UpperBound {
    Finite(u64),
    Unbounded,
}

/// Inclusive range `[lower, upper]` every part must lie in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PartBounds {
    lower: u64,
    upper: UpperBound,
}

impl PartBounds {
    pub fn new(lower: u64, upper: UpperBound) -> Result<Self, CompositionError> {
        if let UpperBound::Finite(upper) = upper {
            if lower > upper {
                return Err(CompositionError::InvalidBounds { lower, upper });
            }
        }
        Ok(PartBounds { lower, upper })
    }

    /// `[lower, upper]`.
    pub fn between(lower: u64, upper: u64) -> Result<Self, CompositionError> {
        Self::new(lower, UpperBound::Finite(upper))
    }

    /// `[lower, ∞)`.
    pub fn at_least(lower: u64) -> Self {
        PartBounds {
            lower,
            upper: UpperBound::Unbounded,
        }
    }

    /// Parts may be zero.
    pub fn nonnegative() -> Self {
        Self::at_least(0)
    }

    /// Ordinary compositions.
    pub fn positive() -> Self {
        Self::at_least(1)
    }

    pub fn lower(&self) -> u64 {
        self.lower
    }

    pub fn upper(&self) -> UpperBound {
        self.upper
    }

    fn upper_or(&self, fallback: u64) -> u64 {
        match self.upper {
            UpperBound::Finite(b) => b,
            UpperBound::Unbounded => fallback,
        }
    }
}

/// A predicate on the parts of a candidate composition.
pub type PartFilter<'a> = &'a dyn Fn(&[u64]) -> bool;

/// Lists every solution of `i_1 + ... + i_k = n` with parts inside `bounds`
/// that passes `filter`, in lexicographic order.
pub fn enumerate_compositions(
    n: i64,
    k: i64,
    bounds: PartBounds,
    filter: Option<PartFilter<'_>>,
) -> Result<Vec<Composition>, CompositionError> {
    enumerate_compositions_with_limit(n, k, bounds, filter, DEFAULT_ENUMERATION_LIMIT)
}

/// [`enumerate_compositions`] with an explicit output limit.
pub fn enumerate_compositions_with_limit(
    n: i64,
    k: i64,
    bounds: PartBounds,
    filter: Option<PartFilter<'_>>,
    limit: usize,
) -> Result<Vec<Composition>, CompositionError> {
    let mut out = Vec::new();
    if n < 0 || k < 0 {
        return Ok(out);
    }
    let (n, k) = (n as u64, k as u64);
    let lower = bounds.lower;
    let upper = bounds.upper_or(n);

    struct Walk<'a> {
        lower: u64,
        upper: u64,
        filter: Option<PartFilter<'a>>,
        limit: usize,
        buf: Vec<u64>,
        out: &'a mut Vec<Composition>,
    }

    impl Walk<'_> {
        fn go(&mut self, remaining: u64, slots: u64) -> Result<(), CompositionError> {
            if slots == 0 {
                if remaining == 0 && self.filter.is_none_or(|f| f(&self.buf)) {
                    if self.out.len() == self.limit {
                        return Err(CompositionError::EnumerationLimit { limit: self.limit });
                    }
                    self.out.push(Composition(self.buf.clone()));
                }
                return Ok(());
            }
            let rest = slots - 1;
            // The other slots must absorb what this part leaves over.
            let lo = self
                .lower
                .max(remaining.saturating_sub(rest.saturating_mul(self.upper)));
            let Some(hi_room) = remaining.checked_sub(rest.saturating_mul(self.lower)) else {
                return Ok(());
            };
            let hi = self.upper.min(hi_room);
            for part in lo..=hi {
                self.buf.push(part);
                let r = self.go(remaining - part, rest);
                self.buf.pop();
                r?;
            }
            Ok(())
        }
    }

    let mut walk = Walk {
        lower,
        upper,
        filter,
        limit,
        buf: Vec::with_capacity(k as usize),
        out: &mut out,
    };
    walk.go(n, k)?;
    Ok(out)
}

/// `C(n, k, a, b)`: the number of compositions of `n` into `k` parts, each in
/// `[a, b]`.
///
/// Uses the binomial closed forms for `[0, ∞)` and `[1, ∞)` and
/// [`count_restricted_dp`] otherwise.
pub fn count_restricted(n: i64, k: i64, bounds: PartBounds) -> BigCount {
    if n < 0 || k < 0 {
        return BigCount::zero();
    }
    if k == 0 {
        return if n == 0 {
            BigCount::one()
        } else {
            BigCount::zero()
        };
    }
    match (bounds.lower, bounds.upper) {
        (0, UpperBound::Unbounded) => binomial(n + k - 1, k - 1),
        (1, UpperBound::Unbounded) => binomial(n - 1, k - 1),
        _ => count_restricted_dp(n, k, bounds),
    }
}

/// `C(n, k, a, b)` by dynamic programming over (parts placed, sum so far).
pub fn count_restricted_dp(n: i64, k: i64, bounds: PartBounds) -> BigCount {
    if n < 0 || k < 0 {
        return BigCount::zero();
    }
    let (n, k) = (n as u64, k as u64);
    // Shift every part down by `a`: parts in [0, b - a] summing to n - k*a.
    let Some(base) = k.checked_mul(bounds.lower) else {
        return BigCount::zero();
    };
    let Some(target) = n.checked_sub(base) else {
        return BigCount::zero();
    };
    let target = target as usize;
    let width = match bounds.upper {
        UpperBound::Finite(b) => ((b - bounds.lower) as usize).min(target),
        UpperBound::Unbounded => target,
    };

    let mut ways = vec![BigCount::zero(); target + 1];
    ways[0] = BigCount::one();
    for _ in 0..k {
        // next[s] = sum of ways[s - j] for j in 0..=width, via a sliding window.
        let mut next = Vec::with_capacity(target + 1);
        let mut window = BigCount::zero();
        for s in 0..=target {
            window += &ways[s];
            if s > width {
                window = &window - &ways[s - width - 1];
            }
            next.push(window.clone());
        }
        ways = next;
    }
    ways.swap_remove(target)
}

fn distinct_table(n: i64, k: i64, weight: impl Fn(u64) -> u64) -> BigCount {
    if n < 0 || k < 0 {
        return BigCount::zero();
    }
    let (n, k) = (n as usize, k as usize);
    // table[m][j] for m <= n, j <= k; recurrence T[m,j] = T[m-j,j] + w(j) T[m-j,j-1].
    let mut table = vec![vec![BigCount::zero(); k + 1]; n + 1];
    table[0][0] = BigCount::one();
    for m in 1..=n {
        for j in 1..=k.min(m) {
            let prev = &table[m - j];
            let value = &prev[j] + &(prev[j - 1].clone() * weight(j as u64));
            table[m][j] = value;
        }
    }
    table[n].swap_remove(k)
}

/// `Π[n, k]`: partitions of `n` into `k` distinct nonzero parts.
///
/// Recurrence `Π[n,k] = Π[n-k,k] + Π[n-k,k-1]`, `Π[0,0] = 1`.
pub fn count_partitions_distinct(n: i64, k: i64) -> BigCount {
    distinct_table(n, k, |_| 1)
}

/// `C[n, k]`: compositions of `n` into `k` distinct nonzero parts.
///
/// Recurrence `C[n,k] = C[n-k,k] + k C[n-k,k-1]`, `C[0,0] = 1`. Equal to
/// `k! Π[n,k]`.
pub fn count_compositions_distinct(n: i64, k: i64) -> BigCount {
    distinct_table(n, k, |j| j)
}

/// `C[n] = Σ_{k≥1} C[n,k]`. Zero for `n <= 0`, since the sum starts at `k = 1`.
pub fn count_compositions_distinct_total(n: i64) -> BigCount {
    if n <= 0 {
        return BigCount::zero();
    }
    // C[n,k] vanishes once the smallest distinct sum k(k+1)/2 exceeds n.
    (1..)
        .take_while(|&k: &i64| k * (k + 1) / 2 <= n)
        .map(|k| count_compositions_distinct(n, k))
        .sum()
}

// Runs s_m = 2 s_{m-1} - s_{m-lag} + [m == k] - [m == k+1] up to m = n, with
// s_m = 0 for m < k. Both leading-summand generating functions have
// denominators of this shape.
fn leading_recurrence(n: i64, k: i64, lag: i64) -> BigCount {
    if k < 1 || n < k {
        return BigCount::zero();
    }
    let len = (n + 1) as usize;
    let mut s: Vec<BigInt> = vec![BigInt::zero(); len];
    let at = |s: &[BigInt], i: i64| -> BigInt {
        if i < 0 {
            BigInt::zero()
        } else {
            s[i as usize].clone()
        }
    };
    for m in k..=n {
        let mut v = at(&s, m - 1) * 2 - at(&s, m - lag);
        if m == k {
            v += BigInt::one();
        }
        if m == k + 1 {
            v -= BigInt::one();
        }
        s[m as usize] = v;
    }
    BigCount::from_bigint(&s[n as usize]).expect("leading-summand count is nonnegative")
}

/// `f_n(k)`: compositions of `n` whose first part is `k` and whose other parts
/// are all strictly less than `k`.
///
/// Recurrence `f_n(k) = 2 f_{n-1}(k) - f_{n-k}(k) + δ_{n,k} - δ_{n,k+1}`.
pub fn count_leading_strict(n: i64, k: i64) -> BigCount {
    leading_recurrence(n, k, k)
}

/// `f*_n(k)`: compositions of `n` whose first part is `k` and whose other
/// parts are all at most `k`.
///
/// Recurrence `f*_n(k) = 2 f*_{n-1}(k) - f*_{n-k-1}(k) + δ_{n,k} - δ_{n,k+1}`.
pub fn count_leading_weak(n: i64, k: i64) -> BigCount {
    leading_recurrence(n, k, k + 1)
}

/// `f_n = Σ_{k≥1} f_n(k)`: compositions of `n` whose first part is strictly
/// larger than every other part.
pub fn count_leading_strict_total(n: i64) -> BigCount {
    (1..=n.max(0)).map(|k| count_leading_strict(n, k)).sum()
}

/// `f*_n = Σ_{k≥1} f*_n(k)`: compositions of `n` whose first part is a
/// (weak) maximum. Equals `f_{n+1}` for `n >= 1`.
pub fn leading_weak_total(n: i64) -> BigCount {
    (1..=n.max(0)).map(|k| count_leading_weak(n, k)).sum()
}

/// `2^{n-1}` compositions of `n >= 1`; zero otherwise.
pub fn total_compositions(n: i64) -> BigCount {
    if n < 1 {
        BigCount::zero()
    } else {
        BigCount::pow2((n - 1) as u64)
    }
}

/// `C*_k(n)`: compositions of `n` with no part equal to `k`.
///
/// For `n >= k + 2` this runs `c_n = 2c_{n-1} - c_{n-k} + c_{n-k-1}`, the
/// relation read off the denominator `1 - 2z + z^k - z^{k+1}`. Values up to
/// `k + 1` come from a direct count over the last part. Zero for `n <= 0` or
/// `k < 1`.
pub fn count_avoiding(n: i64, k: i64) -> BigCount {
    if n <= 0 || k < 1 {
        return BigCount::zero();
    }
    let n_us = n as usize;
    let k_us = k as usize;
    let seed_end = n_us.min(k_us + 1);

    // Direct count: a_m = Σ_{j=1..m, j≠k} a_{m-j}, a_0 = 1 for the empty prefix.
    let mut c: Vec<BigInt> = Vec::with_capacity(n_us + 1);
    c.push(BigInt::one());
    for m in 1..=seed_end {
        let v: BigInt = (1..=m).filter(|&j| j != k_us).map(|j| &c[m - j]).sum();
        c.push(v);
    }
    for m in seed_end + 1..=n_us {
        let v = &c[m - 1] * 2 - &c[m - k_us] + &c[m - k_us - 1];
        c.push(v);
    }
    BigCount::from_bigint(&c[n_us]).expect("avoiding count is nonnegative")
}

/// `C_k(n)`: compositions of `n` in which at least one part equals `k`.
pub fn count_containing(n: i64, k: i64) -> BigCount {
    if k < 1 {
        return BigCount::zero();
    }
    total_compositions(n) - count_avoiding(n, k)
}

/// `Φ^{(m)}_n`: compositions of `n` into parts of size at most `m`, the
/// coefficients of `1/(1 - z - z^2 - ... - z^m)`. `Φ^{(m)}_0 = 1`.
pub fn fibonacci_higher(m: i64, n: i64) -> BigCount {
    if n < 0 {
        return BigCount::zero();
    }
    let m = m.max(0) as usize;
    let n = n as usize;
    let mut phi: Vec<BigCount> = Vec::with_capacity(n + 1);
    phi.push(BigCount::one());
    let mut window = BigCount::zero();
    for i in 1..=n {
        window += &phi[i - 1];
        if i > m {
            window = &window - &phi[i - 1 - m];
        }
        phi.push(window.clone());
    }
    phi.swap_remove(n)
}

/// Which array a [`Triangle`] holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TriangleKind {
    /// `Π[n, k]`
    PartitionsDistinct,
    /// `C[n, k]`
    CompositionsDistinct,
}

/// Rows `0..rows` of the `Π[n,k]` or `C[n,k]` array; row `n` has entries for
/// `k = 0..=n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Triangle {
    pub kind: TriangleKind,
    pub rows: Vec<Vec<BigCount>>,
}

/// Builds the first `rows` rows of the chosen triangle.
pub fn triangle(kind: TriangleKind, rows: usize) -> Triangle {
    let weight = |j: usize| -> u64 {
        match kind {
            TriangleKind::PartitionsDistinct => 1,
            TriangleKind::CompositionsDistinct => j as u64,
        }
    };
    let mut out: Vec<Vec<BigCount>> = Vec::with_capacity(rows);
    for n in 0..rows {
        let mut row = vec![BigCount::zero(); n + 1];
        if n == 0 {
            row[0] = BigCount::one();
        }
        for (j, slot) in row.iter_mut().enumerate().skip(1) {
            if j > n {
                break;
            }
            // Entry (n-j, j) lives in an earlier row, or is zero past its diagonal.
            let prev = &out[n - j];
            let get = |col: usize| prev.get(col).cloned().unwrap_or_default();
            *slot = get(j) + get(j - 1) * weight(j);
        }
        out.push(row);
    }
    Triangle { kind, rows: out }
}

impl fmt::Display for Triangle {
    /// One row per line, entries space-separated.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            let line: Vec<String> = row.iter().map(BigCount::to_string).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

/// True when all parts are pairwise different.
pub fn has_distinct_parts(parts: &[u64]) -> bool {
    let mut sorted = parts.to_vec();
    sorted.sort_unstable();
    sorted.windows(2).all(|w| w[0] != w[1])
}

/// `k!` times `Π[n,k]`, the product form of `C[n,k]`.
pub fn compositions_distinct_from_partitions(n: i64, k: i64) -> BigCount {
    if k < 0 {
        return BigCount::zero();
    }
    factorial(k as u64) * count_partitions_distinct(n, k)
}
