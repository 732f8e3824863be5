//! Oracle cross-checks behind `compcount verify`.
//!
//! Every check compares a fast counter against an independent route:
//! explicit enumeration, a generating-function expansion, or a second
//! formula. Counters are taken from a [`Counters`] table so tests can swap in
//! a deliberately broken one and confirm the suite notices.

use std::fmt;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::compositions::{self, enumerate_compositions, has_distinct_parts, PartBounds};
use crate::exactnum::{self, bell, binomial, factorial, BigCount};
use crate::graphcomp::{
    self, build_family, enumerate_graph_compositions, random, GraphError, GraphFamily, LabeledGraph,
};
use crate::series;

/// Which group of checks to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    All,
    Compositions,
    Series,
    Graphs,
}

type Count2 = fn(i64, i64) -> BigCount;
type Count1 = fn(i64) -> BigCount;
type GraphCount = fn(&LabeledGraph, usize) -> Result<BigCount, GraphError>;

/// The counters under test.
#[derive(Clone, Copy)]
pub struct Counters {
    pub restricted: fn(i64, i64, PartBounds) -> BigCount,
    pub partitions_distinct: Count2,
    pub compositions_distinct: Count2,
    pub compositions_distinct_total: Count1,
    pub leading_strict: Count2,
    pub leading_weak: Count2,
    pub leading_strict_total: Count1,
    pub leading_weak_total: Count1,
    pub avoiding: Count2,
    pub containing: Count2,
    pub fibonacci_higher: Count2,
    pub stirling1_via_compositions: fn(u64, u64) -> BigCount,
    pub stirling2_via_compositions: fn(u64, u64) -> BigCount,
    pub equal_block_partitions: fn(u64, u64, u64) -> BigCount,
    pub binomial_via_partition_multiplicities: fn(u64, u64) -> BigCount,
    pub graph: GraphCount,
    pub reduce: GraphCount,
    pub family: fn(GraphFamily, u64) -> Result<BigCount, GraphError>,
    pub ladder_binet: fn(u64) -> Result<BigCount, GraphError>,
}

impl Counters {
    pub fn standard() -> Self {
        Counters {
            restricted: compositions::count_restricted,
            partitions_distinct: compositions::count_partitions_distinct,
            compositions_distinct: compositions::count_compositions_distinct,
            compositions_distinct_total: compositions::count_compositions_distinct_total,
            leading_strict: compositions::count_leading_strict,
            leading_weak: compositions::count_leading_weak,
            leading_strict_total: compositions::count_leading_strict_total,
            leading_weak_total: compositions::leading_weak_total,
            avoiding: compositions::count_avoiding,
            containing: compositions::count_containing,
            fibonacci_higher: compositions::fibonacci_higher,
            stirling1_via_compositions: exactnum::stirling1_via_compositions,
            stirling2_via_compositions: exactnum::stirling2_via_compositions,
            equal_block_partitions: exactnum::equal_block_partitions,
            binomial_via_partition_multiplicities: exactnum::binomial_via_partition_multiplicities,
            graph: graphcomp::count_compositions_graph_with_cap,
            reduce: graphcomp::reduce_and_count_with_cap,
            family: graphcomp::family_count,
            ladder_binet: graphcomp::ladder_binet,
        }
    }
}

impl Default for Counters {
    fn default() -> Self {
        Self::standard()
    }
}

/// Settings for one verification run.
#[derive(Debug, Clone, Copy)]
pub struct VerifyConfig {
    pub suite: Suite,
    pub max_n: usize,
    pub seed: u64,
    pub cap: usize,
}

/// Outcome of one named check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub name: &'static str,
    pub cases: u64,
    /// The first few mismatches, for the report.
    pub failures: Vec<String>,
    pub failure_count: u64,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.failure_count == 0
    }
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "{status} {} ({} cases", self.name, self.cases)?;
        if !self.passed() {
            write!(f, ", {} failed", self.failure_count)?;
        }
        f.write_str(")")?;
        for msg in &self.failures {
            write!(f, "\n  {msg}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub checks: Vec<CheckResult>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckResult::passed)
    }
}

const MAX_REPORTED_FAILURES: usize = 5;

struct Check {
    result: CheckResult,
}

impl Check {
    fn new(name: &'static str) -> Self {
        Check {
            result: CheckResult {
                name,
                cases: 0,
                failures: Vec::new(),
                failure_count: 0,
            },
        }
    }

    fn eq<T: PartialEq + fmt::Debug>(&mut self, case: impl FnOnce() -> String, got: T, want: T) {
        self.result.cases += 1;
        if got != want {
            self.fail(format!("{}: got {got:?}, expected {want:?}", case()));
        }
    }

    fn holds(&mut self, case: impl FnOnce() -> String, ok: bool) {
        self.result.cases += 1;
        if !ok {
            self.fail(case());
        }
    }

    fn fail(&mut self, msg: String) {
        self.result.failure_count += 1;
        if self.result.failures.len() < MAX_REPORTED_FAILURES {
            self.result.failures.push(msg);
        }
    }

    fn finish(self) -> CheckResult {
        self.result
    }
}

fn enumerated(n: i64, k: i64, bounds: PartBounds, filter: &dyn Fn(&[u64]) -> bool) -> BigCount {
    let found = enumerate_compositions(n, k, bounds, Some(filter))
        .expect("oracle enumeration stays under the limit");
    BigCount::from(found.len())
}

/// Enumerated count over compositions of `n` with any number of positive parts.
fn enumerated_any_length(n: i64, filter: &dyn Fn(&[u64]) -> bool) -> BigCount {
    if n < 1 {
        return BigCount::zero();
    }
    (1..=n)
        .map(|k| enumerated(n, k, PartBounds::positive(), filter))
        .sum()
}

fn count(v: u64) -> BigCount {
    BigCount::from(v)
}

/// Runs the selected checks.
pub fn run_suite(config: &VerifyConfig, counters: &Counters) -> VerifyReport {
    let mut checks = Vec::new();
    let all = config.suite == Suite::All;
    if all || config.suite == Suite::Compositions {
        checks.extend(composition_checks(config.max_n as i64, counters));
        checks.extend(appendix_checks(config.max_n as u64, counters));
    }
    if all || config.suite == Suite::Series {
        checks.extend(series_checks(config.max_n.max(40), counters));
    }
    if all || config.suite == Suite::Graphs {
        checks.extend(graph_checks(config, counters));
    }
    VerifyReport { checks }
}

fn composition_checks(max_n: i64, c: &Counters) -> Vec<CheckResult> {
    let mut out = Vec::new();
    let decreasing = |p: &[u64]| p.windows(2).all(|w| w[0] > w[1]);

    let mut check = Check::new("distinct-partitions-vs-enumeration");
    for n in 0..=max_n {
        for k in 0..=n {
            let want = enumerated(n, k, PartBounds::positive(), &decreasing);
            check.eq(
                || format!("Π[{n},{k}]"),
                (c.partitions_distinct)(n, k),
                want,
            );
        }
    }
    out.push(check.finish());

    let mut check = Check::new("distinct-compositions-vs-enumeration");
    for n in 0..=max_n {
        for k in 0..=n {
            let want = enumerated(n, k, PartBounds::positive(), &has_distinct_parts);
            check.eq(
                || format!("C[{n},{k}]"),
                (c.compositions_distinct)(n, k),
                want,
            );
        }
    }
    out.push(check.finish());

    let mut check = Check::new("distinct-compositions-factorial-identity");
    for n in 0..=max_n.max(30) {
        for k in 0..=n {
            let want = factorial(k as u64) * (c.partitions_distinct)(n, k);
            check.eq(
                || format!("C[{n},{k}] = {k}!Π[{n},{k}]"),
                (c.compositions_distinct)(n, k),
                want,
            );
        }
    }
    out.push(check.finish());

    let mut check = Check::new("distinct-total-vs-enumeration");
    for n in 0..=max_n {
        let want = enumerated_any_length(n, &has_distinct_parts);
        check.eq(
            || format!("C[{n}]"),
            (c.compositions_distinct_total)(n),
            want,
        );
    }
    out.push(check.finish());

    let mut check = Check::new("restricted-vs-enumeration");
    let bound_sets = [
        PartBounds::nonnegative(),
        PartBounds::positive(),
        PartBounds::between(1, 2).unwrap(),
        PartBounds::between(0, 3).unwrap(),
        PartBounds::between(2, 4).unwrap(),
    ];
    for bounds in bound_sets {
        for n in 0..=max_n {
            for k in 0..=max_n.min(8) {
                let want = enumerated(n, k, bounds, &|_| true);
                check.eq(
                    || format!("C({n},{k},{bounds:?})"),
                    (c.restricted)(n, k, bounds),
                    want,
                );
            }
        }
    }
    out.push(check.finish());

    let mut check = Check::new("leading-strict-vs-enumeration");
    let mut weak = Check::new("leading-weak-vs-enumeration");
    for n in 0..=max_n {
        for k in 1..=max_n {
            let lead = k as u64;
            let strict = move |p: &[u64]| p[0] == lead && p[1..].iter().all(|&x| x < lead);
            let want = enumerated_any_length(n, &strict);
            check.eq(|| format!("f_{n}({k})"), (c.leading_strict)(n, k), want);
            let weak_pred = move |p: &[u64]| p[0] == lead && p[1..].iter().all(|&x| x <= lead);
            let want = enumerated_any_length(n, &weak_pred);
            weak.eq(|| format!("f*_{n}({k})"), (c.leading_weak)(n, k), want);
        }
    }
    out.push(check.finish());
    out.push(weak.finish());

    let mut check = Check::new("leading-totals-vs-enumeration");
    for n in 0..=max_n {
        let strict = |p: &[u64]| p[1..].iter().all(|&x| x < p[0]);
        let weak = |p: &[u64]| p[1..].iter().all(|&x| x <= p[0]);
        check.eq(
            || format!("f_{n}"),
            (c.leading_strict_total)(n),
            enumerated_any_length(n, &strict),
        );
        check.eq(
            || format!("f*_{n}"),
            (c.leading_weak_total)(n),
            enumerated_any_length(n, &weak),
        );
    }
    out.push(check.finish());

    let mut check = Check::new("leading-total-shift");
    for n in 1..=max_n.max(39) {
        check.eq(
            || format!("f_{} = f*_{n}", n + 1),
            (c.leading_strict_total)(n + 1),
            (c.leading_weak_total)(n),
        );
    }
    out.push(check.finish());

    let mut check = Check::new("avoiding-containing-vs-enumeration");
    for n in 0..=max_n {
        for k in 1..=max_n.max(1) {
            let part = k as u64;
            let avoid = move |p: &[u64]| !p.contains(&part);
            let contain = move |p: &[u64]| p.contains(&part);
            check.eq(
                || format!("C*_{k}({n})"),
                (c.avoiding)(n, k),
                enumerated_any_length(n, &avoid),
            );
            check.eq(
                || format!("C_{k}({n})"),
                (c.containing)(n, k),
                enumerated_any_length(n, &contain),
            );
        }
    }
    out.push(check.finish());

    let mut check = Check::new("higher-fibonacci-vs-enumeration");
    for m in 1..=6 {
        for n in 0..=max_n {
            let bounds = PartBounds::between(1, m as u64).unwrap();
            let want: BigCount = (0..=n).map(|k| enumerated(n, k, bounds, &|_| true)).sum();
            check.eq(|| format!("Φ^({m})_{n}"), (c.fibonacci_higher)(m, n), want);
        }
    }
    out.push(check.finish());

    out
}

fn appendix_checks(max_n: u64, c: &Counters) -> Vec<CheckResult> {
    let mut out = Vec::new();
    let top = max_n.min(12);

    let mut check = Check::new("stirling-via-compositions");
    for n in 0..=top {
        for k in 0..=n {
            check.eq(
                || format!("{{{n} {k}}}"),
                (c.stirling2_via_compositions)(n, k),
                exactnum::stirling2(n, k),
            );
            if k >= 1 {
                check.eq(
                    || format!("[{n} {k}]"),
                    (c.stirling1_via_compositions)(n, k),
                    exactnum::stirling1(n, k),
                );
            }
        }
    }
    out.push(check.finish());

    // Set partitions of an m-set are exactly the compositions of K_m.
    let mut check = Check::new("equal-block-partitions-vs-enumeration");
    for eta in 0..=max_n.min(9) {
        let k_eta = build_family(GraphFamily::Complete, eta).expect("complete graph");
        let partitions = enumerate_graph_compositions(&k_eta).expect("small set");
        for lambda in 1..=eta.max(1) {
            for kappa in 0..=eta {
                let want = partitions
                    .iter()
                    .filter(|p| {
                        p.blocks().len() as u64 == kappa
                            && p.blocks().iter().all(|b| b.len() as u64 == lambda)
                    })
                    .count() as u64;
                check.eq(
                    || format!("{{{eta} {kappa}}}_{lambda}"),
                    (c.equal_block_partitions)(eta, kappa, lambda),
                    count(want),
                );
            }
        }
    }
    out.push(check.finish());

    let mut check = Check::new("partition-multiplicities-binomial");
    for n in 1..=max_n.max(18) {
        for k in 1..=n {
            check.eq(
                || format!("({n},{k})"),
                (c.binomial_via_partition_multiplicities)(n, k),
                binomial(n as i64 - 1, k as i64 - 1),
            );
        }
    }
    out.push(check.finish());

    let mut check = Check::new("bell-vs-stirling-row");
    for n in 0..=max_n.max(15) {
        let row: BigCount = (0..=n).map(|k| exactnum::stirling2(n, k)).sum();
        check.eq(|| format!("B_{n}"), bell(n), row);
    }
    out.push(check.finish());

    out
}

fn series_checks(order: usize, c: &Counters) -> Vec<CheckResult> {
    let mut out = Vec::new();
    let n_max = order as i64;

    type Gf = fn(u32) -> Result<series::RationalGF, series::SeriesError>;
    let families: [(&'static str, Gf, Count2); 3] = [
        (
            "strict-leading-gf-vs-recurrence",
            series::gf_leading_strict,
            c.leading_strict,
        ),
        (
            "weak-leading-gf-vs-recurrence",
            series::gf_leading_weak,
            c.leading_weak,
        ),
        ("avoiding-gf-vs-recurrence", series::gf_avoiding, c.avoiding),
    ];
    for (name, gf, counter) in families {
        let mut check = Check::new(name);
        for k in 1..=6u32 {
            let s = gf(k)
                .and_then(|g| g.expand(order))
                .expect("unit denominator");
            for n in 0..=n_max {
                check.eq(
                    || format!("k={k} n={n}"),
                    counter(n, k as i64),
                    s.count(n as usize),
                );
            }
        }
        out.push(check.finish());
    }

    let mut check = Check::new("containing-gf-vs-recurrence");
    for k in 1..=6u32 {
        let s = series::gf_containing(k)
            .and_then(|g| g.expand(order))
            .expect("unit denominator");
        for n in 0..=n_max {
            check.eq(
                || format!("k={k} n={n}"),
                (c.containing)(n, k as i64),
                s.count(n as usize),
            );
        }
    }
    out.push(check.finish());

    let mut check = Check::new("distinct-total-gf-vs-recurrence");
    let s = series::gf_distinct_total(order);
    for n in 0..=n_max {
        check.eq(
            || format!("n={n}"),
            (c.compositions_distinct_total)(n),
            s.count(n as usize),
        );
    }
    out.push(check.finish());

    let mut check = Check::new("leading-gf-fibonacci-factorisation");
    for k in 1..=6u32 {
        let rational = series::gf_leading_strict(k)
            .and_then(|g| g.expand(order))
            .unwrap();
        let fib = series::gf_higher_fibonacci(k - 1).expand(order).unwrap();
        check.eq(|| format!("F_{k}"), rational.clone(), fib.shift(k as usize));
        let weak = series::gf_leading_weak(k)
            .and_then(|g| g.expand(order))
            .unwrap();
        let fib = series::gf_higher_fibonacci(k).expand(order).unwrap();
        check.eq(|| format!("F*_{k}"), weak, fib.shift(k as usize));
        for n in 0..=n_max {
            check.eq(
                || format!("f_{n}({k}) = Φ^({})_{}", k - 1, n - k as i64),
                (c.leading_strict)(n, k as i64),
                (c.fibonacci_higher)(k as i64 - 1, n - k as i64),
            );
        }
    }
    out.push(check.finish());

    let mut check = Check::new("leading-total-series-identity");
    let f = series::gf_leading_strict_total(order);
    let f_star = series::gf_leading_weak_total(order);
    let z = series::TruncatedSeries::from_polynomial(&series::Polynomial::monomial(1, 1), order);
    check.eq(|| "zF*(z) = F(z) - z".into(), f_star.shift(1), &f - &z);
    for n in 0..=n_max {
        check.eq(
            || format!("f_{n}"),
            (c.leading_strict_total)(n),
            f.count(n as usize),
        );
    }
    out.push(check.finish());

    out
}

fn graph_checks(config: &VerifyConfig, c: &Counters) -> Vec<CheckResult> {
    let mut out = Vec::new();
    let cap = config.cap;
    let max_n = config.max_n as u64;
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);

    let mut check = Check::new("families-vs-subset-dp");
    for family in GraphFamily::ALL {
        let top = match family {
            GraphFamily::Ladder => (max_n / 2).min(7),
            GraphFamily::Complete | GraphFamily::CompleteMinusEdge => max_n.min(10),
            _ => max_n.min(14),
        };
        for n in family.min_n()..=top {
            let g = build_family(family, n).expect("n within family range");
            let closed = (c.family)(family, n);
            let dp = (c.graph)(&g, cap);
            check.eq(|| format!("{family} n={n}"), closed, dp);
        }
    }
    out.push(check.finish());

    let mut check = Check::new("random-trees");
    for n in 1..=max_n.min(14) as usize {
        let t = random::random_tree(n, &mut rng);
        check.eq(
            || format!("tree {:?}", t.to_edge_list()),
            (c.graph)(&t, cap),
            Ok(BigCount::pow2(n as u64 - 1)),
        );
    }
    out.push(check.finish());

    let mut check = Check::new("subset-dp-vs-enumeration");
    for i in 0..40 {
        let n = i % (config.max_n.min(8) + 1);
        let g = random::random_graph(n, (1, 2), &mut rng);
        let listed = enumerate_graph_compositions(&g).map(|v| BigCount::from(v.len()));
        check.eq(
            || format!("graph {:?}", g.to_edge_list()),
            (c.graph)(&g, cap),
            listed,
        );
    }
    out.push(check.finish());

    let mut check = Check::new("sandwich-bound");
    for i in 0..200 {
        let n = 1 + i % config.max_n.clamp(1, 10);
        let g = random::random_connected_graph(n, (1, 3), &mut rng);
        let value = (c.graph)(&g, cap);
        let ok = value
            .as_ref()
            .is_ok_and(|v| *v >= BigCount::pow2(n as u64 - 1) && *v <= bell(n as u64));
        check.holds(|| format!("C = {value:?} for {:?}", g.to_edge_list()), ok);
    }
    out.push(check.finish());

    let mut check = Check::new("edge-monotonicity");
    for i in 0..30 {
        let n = 2 + i % config.max_n.clamp(2, 9).saturating_sub(1);
        let mut g = random::random_graph(n, (1, 4), &mut rng);
        let mut before = (c.graph)(&g, cap);
        while random::add_random_edge(&mut g, &mut rng).is_some() {
            let after = (c.graph)(&g, cap);
            let ok = matches!((&before, &after), (Ok(b), Ok(a)) if a >= b);
            check.holds(
                || format!("{before:?} -> {after:?} on {:?}", g.to_edge_list()),
                ok,
            );
            before = after;
        }
    }
    out.push(check.finish());

    let mut check = Check::new("block-reduction-vs-subset-dp");
    for i in 0..100 {
        let n = i % (config.max_n.min(12) + 1);
        let odds = [(1, 6), (1, 4), (1, 3), (1, 2)][i % 4];
        let g = random::random_graph(n, odds, &mut rng);
        check.eq(
            || format!("graph {:?}", g.to_edge_list()),
            (c.reduce)(&g, cap),
            (c.graph)(&g, cap),
        );
    }
    out.push(check.finish());

    let mut check = Check::new("ladder-binet-vs-recurrence");
    for n in 1..=max_n.max(50) {
        check.eq(
            || format!("L_{n}"),
            (c.ladder_binet)(n),
            (c.family)(GraphFamily::Ladder, n),
        );
    }
    out.push(check.finish());

    out
}
