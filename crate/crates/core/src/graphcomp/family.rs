use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::graph::LabeledGraph;
use super::GraphError;
use crate::exactnum::{bell, BigCount};

/// Graph families with a known composition count.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GraphFamily {
    Path,
    /// Built as a star; every tree on `n` vertices has the same count.
    Tree,
    Complete,
    /// `K_n` minus the edge `{0, 1}`.
    CompleteMinusEdge,
    Cycle,
    /// `P_n × P_2`: `2n` vertices, rung `i` on vertices `2i` and `2i+1`.
    Ladder,
}

impl GraphFamily {
    pub const ALL: [GraphFamily; 6] = [
        GraphFamily::Path,
        GraphFamily::Tree,
        GraphFamily::Complete,
        GraphFamily::CompleteMinusEdge,
        GraphFamily::Cycle,
        GraphFamily::Ladder,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GraphFamily::Path => "path",
            GraphFamily::Tree => "tree",
            GraphFamily::Complete => "complete",
            GraphFamily::CompleteMinusEdge => "kminus",
            GraphFamily::Cycle => "cycle",
            GraphFamily::Ladder => "ladder",
        }
    }

    /// Smallest valid size parameter.
    pub fn min_n(self) -> u64 {
        match self {
            GraphFamily::Path | GraphFamily::Tree | GraphFamily::Complete => 0,
            GraphFamily::Ladder => 1,
            GraphFamily::CompleteMinusEdge => 2,
            GraphFamily::Cycle => 3,
        }
    }

    fn check(self, n: u64) -> Result<(), GraphError> {
        if n < self.min_n() {
            Err(GraphError::BelowFamilyMinimum {
                family: self.name(),
                n,
                min: self.min_n(),
            })
        } else {
            Ok(())
        }
    }
}

impl fmt::Display for GraphFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GraphFamily {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        GraphFamily::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| format!("unknown graph family {s:?}"))
    }
}

/// Closed-form composition count for a family member.
///
/// Paths and trees give `2^{n-1}` (and 1 at `n = 0`), complete graphs `B_n`,
/// `K_n` minus an edge `B_n - B_{n-2}`, cycles `2^n - n`, and ladders follow
/// `L_1 = 2`, `L_2 = 12`, `L_n = 6 L_{n-1} + L_{n-2}`.
pub fn family_count(family: GraphFamily, n: u64) -> Result<BigCount, GraphError> {
    family.check(n)?;
    Ok(match family {
        GraphFamily::Path | GraphFamily::Tree => {
            if n == 0 {
                BigCount::one()
            } else {
                BigCount::pow2(n - 1)
            }
        }
        GraphFamily::Complete => bell(n),
        GraphFamily::CompleteMinusEdge => bell(n) - bell(n - 2),
        GraphFamily::Cycle => BigCount::pow2(n) - BigCount::from(n),
        GraphFamily::Ladder => {
            let (mut prev, mut curr) = (BigCount::from(2u32), BigCount::from(12u32));
            if n == 1 {
                return Ok(prev);
            }
            for _ in 2..n {
                let next = curr.clone() * 6 + &prev;
                prev = std::mem::replace(&mut curr, next);
            }
            curr
        }
    })
}

/// The explicit labeled graph for a family member.
pub fn build_family(family: GraphFamily, n: u64) -> Result<LabeledGraph, GraphError> {
    family.check(n)?;
    let n = usize::try_from(n).expect("family size fits in usize");
    let edges: Vec<(usize, usize)> = match family {
        GraphFamily::Path => (1..n).map(|i| (i - 1, i)).collect(),
        GraphFamily::Tree => (1..n).map(|i| (0, i)).collect(),
        GraphFamily::Complete => all_pairs(n).collect(),
        GraphFamily::CompleteMinusEdge => all_pairs(n).filter(|&e| e != (0, 1)).collect(),
        GraphFamily::Cycle => (0..n).map(|i| (i, (i + 1) % n)).collect(),
        GraphFamily::Ladder => {
            let rungs = (0..n).map(|i| (2 * i, 2 * i + 1));
            let rails = (1..n).flat_map(|i| [(2 * i - 2, 2 * i), (2 * i - 1, 2 * i + 1)]);
            rungs.chain(rails).collect()
        }
    };
    let vertices = if family == GraphFamily::Ladder {
        2 * n
    } else {
        n
    };
    LabeledGraph::new(vertices, edges)
}

fn all_pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |u| (u + 1..n).map(move |v| (u, v)))
}

/// `a + b√10` with integer `a`, `b`.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Sqrt10 {
    rational: BigInt,
    surd: BigInt,
}

impl Sqrt10 {
    fn one() -> Self {
        Sqrt10 {
            rational: BigInt::one(),
            surd: BigInt::zero(),
        }
    }

    fn conjugate(&self) -> Self {
        Sqrt10 {
            rational: self.rational.clone(),
            surd: -&self.surd,
        }
    }

    fn pow(&self, mut exp: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Sqrt10::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            exp >>= 1;
        }
        acc
    }
}

impl Mul for &Sqrt10 {
    type Output = Sqrt10;
    fn mul(self, rhs: &Sqrt10) -> Sqrt10 {
        Sqrt10 {
            rational: &self.rational * &rhs.rational + &self.surd * &rhs.surd * 10,
            surd: &self.rational * &rhs.surd + &self.surd * &rhs.rational,
        }
    }
}

/// Ladder count from the characteristic roots of `x^2 = 6x + 1`:
/// `L_n = ((3 + √10)^n - (3 - √10)^n) / √10`, evaluated exactly in `Z[√10]`.
pub fn ladder_binet(n: u64) -> Result<BigCount, GraphError> {
    GraphFamily::Ladder.check(n)?;
    let root = Sqrt10 {
        rational: BigInt::from(3),
        surd: BigInt::one(),
    };
    let up = root.pow(n);
    let down = root.conjugate().pow(n);
    // up - down = 0 + (2b)√10, so dividing by √10 leaves the integer 2b.
    let diff_rational = &up.rational - &down.rational;
    assert!(
        diff_rational.is_zero(),
        "conjugate difference has rational part {diff_rational}"
    );
    let value = &up.surd - &down.surd;
    Ok(BigCount::from_bigint(&value).expect("ladder count is positive"))
}
