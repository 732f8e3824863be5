//! Brute-force reference counts, written without the library's recurrences.
#![allow(dead_code)]

use std::collections::HashMap;

use num_bigint::BigUint;

pub fn big(v: u64) -> BigUint {
    BigUint::from(v)
}

/// Pascal's triangle, row by row.
pub fn pascal(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::default();
    }
    let mut row = vec![big(1)];
    for _ in 0..n {
        let mut next = vec![big(1); row.len() + 1];
        for j in 1..row.len() {
            next[j] = &row[j - 1] + &row[j];
        }
        row = next;
    }
    row[k].clone()
}

pub fn factorial(n: u64) -> BigUint {
    (1..=n).map(big).product()
}

/// Calls `visit` on every composition of `n` with parts in `1..=n`.
pub fn each_composition(n: u64, visit: &mut dyn FnMut(&[u64])) {
    fn go(rem: u64, parts: &mut Vec<u64>, visit: &mut dyn FnMut(&[u64])) {
        if rem == 0 {
            visit(parts);
            return;
        }
        for p in 1..=rem {
            parts.push(p);
            go(rem - p, parts, visit);
            parts.pop();
        }
    }
    if n > 0 {
        go(n, &mut Vec::new(), visit);
    }
}

/// Compositions of `n` (positive parts, any length) accepted by `pred`,
/// listed explicitly.
pub fn count_by_listing(n: u64, pred: impl Fn(&[u64]) -> bool) -> u64 {
    let mut count = 0;
    each_composition(n, &mut |c| {
        if pred(c) {
            count += 1;
        }
    });
    count
}

/// Exhaustive search over part sequences, memoized on (remaining, state).
/// `step(state, part)` returns the next state or `None` if the part is
/// forbidden; `accept(state)` decides whether a finished sequence counts.
pub struct Automaton<S> {
    pub start: S,
    pub step: fn(&S, u64, u64) -> Option<S>,
    pub accept: fn(&S) -> bool,
    pub k: u64,
}

impl<S: Clone + Eq + std::hash::Hash> Automaton<S> {
    pub fn count(&self, n: u64) -> BigUint {
        let mut memo = HashMap::new();
        if n == 0 {
            return BigUint::default();
        }
        self.go(n, self.start.clone(), &mut memo)
    }

    /// Counts for every `n` in `0..=max`, sharing one memo table.
    pub fn count_all(&self, max: u64) -> Vec<BigUint> {
        let mut memo = HashMap::new();
        let mut out = vec![BigUint::default()];
        for n in 1..=max {
            out.push(self.go(n, self.start.clone(), &mut memo));
        }
        out
    }

    fn go(&self, rem: u64, state: S, memo: &mut HashMap<(u64, S), BigUint>) -> BigUint {
        if rem == 0 {
            return if (self.accept)(&state) {
                big(1)
            } else {
                big(0)
            };
        }
        if let Some(v) = memo.get(&(rem, state.clone())) {
            return v.clone();
        }
        let mut total = BigUint::default();
        for p in 1..=rem {
            if let Some(next) = (self.step)(&state, p, self.k) {
                total += self.go(rem - p, next, memo);
            }
        }
        memo.insert((rem, state), total.clone());
        total
    }
}

/// State: the leading part once chosen.
pub fn leading_strict(k: u64) -> Automaton<Option<u64>> {
    Automaton {
        start: None,
        step: |s, p, k| match s {
            None => (p == k).then_some(Some(p)),
            Some(lead) => (p < *lead).then_some(Some(*lead)),
        },
        accept: |s| s.is_some(),
        k,
    }
}

pub fn leading_weak(k: u64) -> Automaton<Option<u64>> {
    Automaton {
        start: None,
        step: |s, p, k| match s {
            None => (p == k).then_some(Some(p)),
            Some(lead) => (p <= *lead).then_some(Some(*lead)),
        },
        accept: |s| s.is_some(),
        k,
    }
}

pub fn avoiding(k: u64) -> Automaton<()> {
    Automaton {
        start: (),
        step: |_, p, k| (p != k).then_some(()),
        accept: |_| true,
        k,
    }
}

pub fn containing(k: u64) -> Automaton<bool> {
    Automaton {
        start: false,
        step: |seen, p, k| Some(*seen || p == k),
        accept: |seen| *seen,
        k,
    }
}

/// Partitions of `n` into distinct parts, as decreasing part lists.
pub fn distinct_partitions(n: u64) -> Vec<Vec<u64>> {
    fn go(rem: u64, max: u64, parts: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if rem == 0 {
            out.push(parts.clone());
            return;
        }
        for p in (1..=max.min(rem)).rev() {
            parts.push(p);
            go(rem - p, p - 1, parts, out);
            parts.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Compositions of `n` into distinct parts: each distinct-part partition
/// with `k` parts has `k!` orderings.
pub fn distinct_compositions_total(n: u64) -> BigUint {
    if n == 0 {
        return BigUint::default();
    }
    distinct_partitions(n)
        .iter()
        .map(|p| factorial(p.len() as u64))
        .sum()
}

/// Set partitions of `0..n` as block-label vectors.
pub fn set_partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(i: usize, n: usize, labels: &mut Vec<usize>, blocks: usize, out: &mut Vec<Vec<usize>>) {
        if i == n {
            out.push(labels.clone());
            return;
        }
        for b in 0..=blocks {
            labels.push(b);
            go(i + 1, n, labels, blocks.max(b + 1), out);
            labels.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, &mut Vec::new(), 0, &mut out);
    out
}

/// Permutations of `0..n` tallied by cycle count.
pub fn cycle_counts(n: usize) -> Vec<u64> {
    fn permute(perm: &mut Vec<usize>, i: usize, tally: &mut Vec<u64>) {
        if i == perm.len() {
            let mut seen = vec![false; perm.len()];
            let mut cycles = 0;
            for s in 0..perm.len() {
                if !seen[s] {
                    cycles += 1;
                    let mut v = s;
                    while !seen[v] {
                        seen[v] = true;
                        v = perm[v];
                    }
                }
            }
            tally[cycles] += 1;
            return;
        }
        for j in i..perm.len() {
            perm.swap(i, j);
            permute(perm, i + 1, tally);
            perm.swap(i, j);
        }
    }
    let mut tally = vec![0; n + 1];
    permute(&mut (0..n).collect(), 0, &mut tally);
    tally
}

/// Graph compositions by checking every set partition with a flood fill
/// over an adjacency matrix.
pub fn graph_compositions(n: usize, edges: &[(usize, usize)]) -> u64 {
    let mut adj = vec![vec![false; n]; n];
    for &(u, v) in edges {
        adj[u][v] = true;
        adj[v][u] = true;
    }
    set_partitions(n)
        .iter()
        .filter(|labels| {
            let blocks = labels.iter().max().map_or(0, |m| m + 1);
            (0..blocks).all(|b| {
                let members: Vec<usize> = (0..n).filter(|&v| labels[v] == b).collect();
                let mut reached = vec![members[0]];
                let mut stack = vec![members[0]];
                while let Some(u) = stack.pop() {
                    for &w in &members {
                        if adj[u][w] && !reached.contains(&w) {
                            reached.push(w);
                            stack.push(w);
                        }
                    }
                }
                reached.len() == members.len()
            })
        })
        .count() as u64
}

/// `2, 12, 74, ...` from `L_n = 6 L_{n-1} + L_{n-2}`.
pub fn ladder_sequence(len: usize) -> Vec<BigUint> {
    let mut seq = vec![big(2), big(12)];
    while seq.len() < len {
        let next = &seq[seq.len() - 1] * 6u32 + &seq[seq.len() - 2];
        seq.push(next);
    }
    seq.truncate(len);
    seq
}
