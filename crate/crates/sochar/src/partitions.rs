//! Generalized partitions, conjugation, interlacing, epsilon subtraction, and
//! odd orthogonal Gelfand-Tsetlin chains.
//!
//! Parts are stored doubled so that the half-integer pivot entries of the
//! type-B patterns stay in integer arithmetic. The declared length is part of
//! the value: `(1)` and `(1, 0)` are different generalized partitions, and the
//! dual-basis machinery genuinely distinguishes them.

use serde_json::{json, Value};
use std::fmt;
use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum PartitionError {
    #[error("parts must be weakly decreasing and nonnegative")]
    NotWeaklyDecreasing,
    #[error("operation requires integer parts")]
    HalfIntegerParts,
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct GeneralizedPartition {
    /// Doubled parts, weakly decreasing, nonnegative; length is the declared
    /// length (zeros are tracked).
    parts: Vec<i32>,
}

impl GeneralizedPartition {
    pub fn empty() -> Self {
        GeneralizedPartition { parts: Vec::new() }
    }

    pub fn from_doubled(parts: Vec<i32>) -> Result<Self, PartitionError> {
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.last().map_or(false, |&p| p < 0) {
            return Err(PartitionError::NotWeaklyDecreasing);
        }
        Ok(GeneralizedPartition { parts })
    }

    pub fn from_ints(parts: &[i64]) -> Result<Self, PartitionError> {
        Self::from_doubled(parts.iter().map(|&p| (p * 2) as i32).collect())
    }

    /// Declared length, zero parts included.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of nonzero parts.
    pub fn nonzero_len(&self) -> usize {
        self.parts.iter().filter(|&&p| p > 0).count()
    }

    pub fn doubled(&self) -> &[i32] {
        &self.parts
    }

    /// Doubled part at `i`, zero beyond the declared length.
    pub fn part_doubled(&self, i: usize) -> i32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Integer part at `i`; the caller must know the partition is integral.
    pub fn part_int(&self, i: usize) -> i64 {
        let d = self.part_doubled(i);
        debug_assert!(d % 2 == 0);
        (d / 2) as i64
    }

    /// Weight in doubled units.
    pub fn weight_doubled(&self) -> i64 {
        self.parts.iter().map(|&p| p as i64).sum()
    }

    /// Integer weight; requires integral parts.
    pub fn weight_int(&self) -> i64 {
        debug_assert!(self.is_integral());
        self.weight_doubled() / 2
    }

    pub fn is_integral(&self) -> bool {
        self.parts.iter().all(|&p| p % 2 == 0)
    }

    /// All parts even (as an integer partition).
    pub fn is_even(&self) -> bool {
        self.parts.iter().all(|&p| p % 4 == 0)
    }

    /// Extend with zeros to the declared length `len`.
    pub fn padded(&self, len: usize) -> Self {
        let mut parts = self.parts.clone();
        while parts.len() < len {
            parts.push(0);
        }
        GeneralizedPartition { parts }
    }

    /// Drop trailing zero parts.
    pub fn normalized(&self) -> Self {
        let mut parts = self.parts.clone();
        while parts.last() == Some(&0) {
            parts.pop();
        }
        GeneralizedPartition { parts }
    }

    /// Containment of Young diagrams (zero parts are irrelevant here).
    pub fn contains(&self, inner: &Self) -> bool {
        (0..inner.len()).all(|i| inner.part_doubled(i) <= self.part_doubled(i))
    }

    /// Conjugate partition; requires integer parts. The result has
    /// `lambda_1` rows and drops any dependence on trailing zeros.
    pub fn conjugate(&self) -> Result<Self, PartitionError> {
        if !self.is_integral() {
            return Err(PartitionError::HalfIntegerParts);
        }
        let first = (self.part_doubled(0) / 2) as usize;
        let parts = (1..=first)
            .map(|i| {
                let count = self
                    .parts
                    .iter()
                    .filter(|&&p| (p / 2) as usize >= i)
                    .count();
                (count * 2) as i32
            })
            .collect();
        Ok(GeneralizedPartition { parts })
    }

    pub fn to_json(&self) -> Value {
        json!({ "doubled": self.parts, "len": self.parts.len() })
    }
}

impl fmt::Display for GeneralizedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, &p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            if p % 2 == 0 {
                write!(f, "{}", p / 2)?;
            } else {
                write!(f, "{}/2", p)?;
            }
        }
        write!(f, ")")
    }
}

/// Partitions that interlace `outer` from below.
///
/// With `half_last == false`: all integer rows of length `l - 1` sandwiched
/// entrywise, `outer[i+1] <= row[i] <= outer[i]`.
///
/// With `half_last == true`: rows of the same length `l` whose first `l - 1`
/// entries are sandwiched the same way and whose last entry moves in
/// half-integer steps through `0 <= last <= min(outer[l-1], last_cap)`; the
/// cap is ignored when absent (the boundary row of a pattern has no
/// lower neighbor).
pub fn interlacings(
    outer: &GeneralizedPartition,
    half_last: bool,
    last_cap: Option<i32>,
) -> Vec<GeneralizedPartition> {
    let l = outer.len();
    let mut out = Vec::new();
    if !half_last {
        if l == 0 {
            return out;
        }
        let mut current = Vec::with_capacity(l - 1);
        fill_sandwiched(outer, &mut current, l - 1, 2, &mut |row| {
            out.push(GeneralizedPartition {
                parts: row.to_vec(),
            });
        });
        return out;
    }
    if l == 0 {
        out.push(GeneralizedPartition::empty());
        return out;
    }
    let mut hi = outer.part_doubled(l - 1);
    if let Some(cap) = last_cap {
        hi = hi.min(cap);
    }
    let mut current = Vec::with_capacity(l);
    fill_sandwiched(outer, &mut current, l - 1, 2, &mut |row| {
        for last in 0..=hi {
            let mut parts = row.to_vec();
            parts.push(last);
            out.push(GeneralizedPartition { parts });
        }
    });
    out
}

/// Enumerate, in lexicographic order, length-`k` integer rows with
/// `outer[i+1] <= row[i] <= outer[i]`, stepping by `step` in doubled units.
fn fill_sandwiched(
    outer: &GeneralizedPartition,
    current: &mut Vec<i32>,
    k: usize,
    step: i32,
    emit: &mut dyn FnMut(&[i32]),
) {
    if current.len() == k {
        emit(current);
        return;
    }
    let i = current.len();
    let lo = outer.part_doubled(i + 1);
    let hi = outer.part_doubled(i);
    let mut v = lo;
    while v <= hi {
        current.push(v);
        fill_sandwiched(outer, current, k, step, emit);
        current.pop();
        v += step;
    }
}

/// Same-length interlacing `mu < lambda`: `lambda[i+1] <= mu[i] <= lambda[i]`
/// with the convention `lambda[len] = 0`.
pub fn interlacings_same_length(outer: &GeneralizedPartition) -> Vec<GeneralizedPartition> {
    let l = outer.len();
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(l);
    fill_sandwiched(outer, &mut current, l, 2, &mut |row| {
        out.push(GeneralizedPartition {
            parts: row.to_vec(),
        });
    });
    out
}

/// All `mu = lambda - eps` with `eps` a 0/1 vector over the declared length,
/// keeping only weakly decreasing nonnegative results; `|eps|` is returned
/// alongside. Enumeration follows binary counting on `eps`.
pub fn epsilon_subtractions(lambda: &GeneralizedPartition) -> Vec<(GeneralizedPartition, u32)> {
    let n = lambda.len();
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << n) {
        let mut parts = Vec::with_capacity(n);
        let mut ok = true;
        let mut weight = 0u32;
        for i in 0..n {
            let e = ((mask >> i) & 1) as i32;
            weight += e as u32;
            let v = lambda.part_doubled(i) - 2 * e;
            if v < 0 || parts.last().map_or(false, |&prev| prev < v) {
                ok = false;
                break;
            }
            parts.push(v);
        }
        if ok {
            out.push((GeneralizedPartition { parts }, weight));
        }
    }
    out
}

/// A chain of interlacing rows z_0, ..., z_{2N} forming an odd orthogonal
/// Gelfand-Tsetlin pattern; row z_k has length l + ceil(k/2).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GTChain {
    pub rows: Vec<GeneralizedPartition>,
}

impl GTChain {
    /// Doubled exponent of the variable `x_{i+1}` contributed by this chain:
    /// 2|z_{2i+1}| - |z_{2i+2}| - |z_{2i}| in doubled weights.
    pub fn exponent_doubled(&self, i: usize) -> i64 {
        2 * self.rows[2 * i + 1].weight_doubled()
            - self.rows[2 * i + 2].weight_doubled()
            - self.rows[2 * i].weight_doubled()
    }

    pub fn to_json(&self) -> Value {
        json!({ "rows": self.rows.iter().map(|r| r.to_json()).collect::<Vec<_>>() })
    }
}

/// Enumerate the odd orthogonal Gelfand-Tsetlin chains from `mu` (length `l`)
/// up to `lambda` (padded to length `l + n`).
///
/// Between an even row and the odd row above it the entries interlace with a
/// new half-integer entry appended; between an odd row and the even row above
/// it the rows have equal length and the shorter prefix interlaces. The last
/// entry of each odd row is capped by both even neighbors, taking the minimum
/// over entries that exist.
pub fn gt_chains(
    mu: &GeneralizedPartition,
    lambda: &GeneralizedPartition,
    n: usize,
) -> Result<Vec<GTChain>, PartitionError> {
    if !mu.is_integral() || !lambda.is_integral() {
        return Err(PartitionError::HalfIntegerParts);
    }
    let l = mu.len();
    let mut chains = Vec::new();
    if lambda.nonzero_len() > l + n || !lambda.contains(mu) {
        return Ok(chains);
    }
    if n == 0 {
        if lambda.padded(l) == *mu {
            chains.push(GTChain {
                rows: vec![mu.clone()],
            });
        }
        return Ok(chains);
    }
    let top = lambda.padded(l + n);
    // Build downward from z_{2n} = lambda; stack holds z_{2n}, z_{2n-1}, ...
    let mut stack: Vec<GeneralizedPartition> = vec![top];
    descend(&mut stack, mu, n, &mut chains);
    Ok(chains)
}

fn descend(
    stack: &mut Vec<GeneralizedPartition>,
    mu: &GeneralizedPartition,
    n: usize,
    chains: &mut Vec<GTChain>,
) {
    let depth = stack.len() - 1; // how many rows below z_{2n} are fixed
    let k = 2 * n - depth; // index of the next row to choose minus... current row is z_k
    if k == 0 {
        let mut rows: Vec<GeneralizedPartition> = stack.clone();
        rows.reverse();
        chains.push(GTChain { rows });
        return;
    }
    let current = stack.last().unwrap().clone();
    if k % 2 == 0 {
        // choose the odd row z_{k-1}, same length, half-integer last entry;
        // the lower cap from z_{k-2} (or mu) is enforced when that row is
        // chosen, except at the bottom where mu is already fixed.
        let m = current.len();
        let mut cap = current.part_doubled(m - 1);
        if k == 2 {
            // z_0 = mu is fixed; its last entry caps z_1 only if it exists
            if mu.len() > 0 {
                cap = cap.min(mu.part_doubled(mu.len() - 1));
            }
        }
        let mut prefix = Vec::with_capacity(m);
        let snapshot = current.clone();
        collect_odd_rows(&snapshot, cap, &mut prefix, &mut |row| {
            stack.push(row);
            descend(stack, mu, n, chains);
            stack.pop();
        });
    } else {
        // choose the even row z_{k-1}, one entry shorter, integer entries,
        // sandwiched by the odd row.
        let m = current.len();
        if k == 1 {
            // z_0 = mu: check the sandwich directly.
            if mu.len() + 1 == m {
                let ok = (0..mu.len()).all(|j| {
                    current.part_doubled(j + 1) <= mu.part_doubled(j)
                        && mu.part_doubled(j) <= current.part_doubled(j)
                });
                if ok {
                    stack.push(mu.clone());
                    descend(stack, mu, n, chains);
                    stack.pop();
                }
            }
            return;
        }
        let mut row = Vec::with_capacity(m - 1);
        let snapshot = current.clone();
        collect_even_rows(&snapshot, &mut row, &mut |r| {
            stack.push(r);
            descend(stack, mu, n, chains);
            stack.pop();
        });
    }
}

/// Odd-row candidates below an even row: equal length, integer entries
/// sandwiched on the prefix, half-integer steps on the last entry in
/// [0, cap].
fn collect_odd_rows(
    even: &GeneralizedPartition,
    cap: i32,
    prefix: &mut Vec<i32>,
    emit: &mut dyn FnMut(GeneralizedPartition),
) {
    let m = even.len();
    if prefix.len() == m - 1 {
        for last in 0..=cap {
            let mut parts = prefix.clone();
            parts.push(last);
            emit(GeneralizedPartition { parts });
        }
        return;
    }
    let j = prefix.len();
    let lo = even.part_doubled(j + 1);
    let hi = even.part_doubled(j);
    let mut v = lo;
    while v <= hi {
        prefix.push(v);
        collect_odd_rows(even, cap, prefix, emit);
        prefix.pop();
        v += 2;
    }
}

/// Even-row candidates below an odd row: one entry shorter, integer entries
/// with odd[j+1] <= row[j] <= odd[j]. The lower bound at the last position is
/// the odd row's half entry, rounded up to the next integer, which is what
/// caps that half entry from below.
fn collect_even_rows(
    odd: &GeneralizedPartition,
    row: &mut Vec<i32>,
    emit: &mut dyn FnMut(GeneralizedPartition),
) {
    let m = odd.len();
    if row.len() == m - 1 {
        emit(GeneralizedPartition { parts: row.clone() });
        return;
    }
    let j = row.len();
    // round half-integer lower bounds up to the next even doubled value
    let lo_raw = odd.part_doubled(j + 1);
    let lo = if lo_raw % 2 == 0 { lo_raw } else { lo_raw + 1 };
    let hi = odd.part_doubled(j);
    let mut v = lo;
    while v <= hi {
        row.push(v);
        collect_even_rows(odd, row, emit);
        row.pop();
        v += 2;
    }
}

/// All integer partitions of weight at most `max_weight` with at most
/// `max_parts` parts, in lexicographic order of their doubled part vectors
/// (trailing zeros dropped).
pub fn partitions_up_to(max_weight: usize, max_parts: usize) -> Vec<GeneralizedPartition> {
    let mut out = vec![GeneralizedPartition::empty()];
    let mut current: Vec<i32> = Vec::new();
    fn rec(
        current: &mut Vec<i32>,
        remaining: i64,
        max_parts: usize,
        out: &mut Vec<GeneralizedPartition>,
    ) {
        if current.len() == max_parts {
            return;
        }
        let hi = current.last().copied().unwrap_or(i32::MAX);
        let mut v = 2;
        while (v as i64) <= remaining && v <= hi {
            current.push(v);
            out.push(GeneralizedPartition {
                parts: current.clone(),
            });
            rec(current, remaining - v as i64, max_parts, out);
            current.pop();
            v += 2;
        }
    }
    rec(&mut current, 2 * max_weight as i64, max_parts, &mut out);
    out.sort();
    out
}

/// All generalized partitions of declared length exactly `len` and integer
/// weight at most `max_weight` (zero parts allowed).
pub fn generalized_partitions(max_weight: usize, len: usize) -> Vec<GeneralizedPartition> {
    partitions_up_to(max_weight, len)
        .into_iter()
        .map(|p| p.padded(len))
        .collect::<std::collections::BTreeSet<_>>()
        .into_iter()
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gp(parts: &[i64]) -> GeneralizedPartition {
        GeneralizedPartition::from_ints(parts).unwrap()
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(gp(&[2, 1]).conjugate().unwrap(), gp(&[2, 1]));
        assert_eq!(gp(&[3]).conjugate().unwrap(), gp(&[1, 1, 1]));
        assert_eq!(gp(&[4, 2, 1]).conjugate().unwrap(), gp(&[3, 2, 1, 1]));
        assert_eq!(gp(&[1, 0]).conjugate().unwrap(), gp(&[1]));
    }

    #[test]
    fn conjugate_involution() {
        for p in partitions_up_to(8, 8) {
            assert_eq!(p.conjugate().unwrap().conjugate().unwrap(), p.normalized());
        }
    }

    #[test]
    fn conjugate_rejects_halves() {
        let half = GeneralizedPartition::from_doubled(vec![3]).unwrap();
        assert!(half.conjugate().is_err());
    }

    #[test]
    fn interlacing_examples() {
        // half-integer steps, no outer cap: (1) -> {(0), (1/2), (1)}
        let rows = interlacings(&gp(&[1]), true, None);
        let expected: Vec<GeneralizedPartition> = vec![
            GeneralizedPartition::from_doubled(vec![0]).unwrap(),
            GeneralizedPartition::from_doubled(vec![1]).unwrap(),
            GeneralizedPartition::from_doubled(vec![2]).unwrap(),
        ];
        assert_eq!(rows, expected);

        let rows = interlacings(&gp(&[2, 1]), false, None);
        assert_eq!(rows, vec![gp(&[1]), gp(&[2])]);

        let rows = interlacings(&gp(&[0]), false, None);
        assert_eq!(rows, vec![GeneralizedPartition::empty()]);
    }

    #[test]
    fn epsilon_examples() {
        assert_eq!(
            epsilon_subtractions(&gp(&[1])),
            vec![(gp(&[1]), 0), (gp(&[0]), 1)]
        );
        assert_eq!(epsilon_subtractions(&gp(&[0, 0])), vec![(gp(&[0, 0]), 0)]);
        let subs = epsilon_subtractions(&gp(&[2, 2]));
        assert_eq!(
            subs,
            vec![(gp(&[2, 2]), 0), (gp(&[2, 1]), 1), (gp(&[1, 1]), 2)]
        );
    }

    #[test]
    fn gt_chain_counts() {
        let chains = gt_chains(&GeneralizedPartition::empty(), &gp(&[1]), 1).unwrap();
        assert_eq!(chains.len(), 3);
        let chains = gt_chains(&gp(&[1]), &gp(&[1]), 1).unwrap();
        assert_eq!(chains.len(), 1);
        let chains = gt_chains(&gp(&[2]), &gp(&[1]), 1).unwrap();
        assert!(chains.is_empty());
    }

    #[test]
    fn gt_chain_rows_interlace() {
        let n = 2usize;
        for mu in partitions_up_to(2, 1) {
            for lambda in partitions_up_to(4, 3) {
                if lambda.nonzero_len() > mu.len() + n || !lambda.contains(&mu) {
                    continue;
                }
                let chains = gt_chains(&mu, &lambda, n).unwrap();
                assert!(!chains.is_empty(), "no chains for {lambda}/{mu}");
                for chain in chains {
                    let rows = &chain.rows;
                    assert_eq!(rows.len(), 2 * n + 1);
                    assert_eq!(rows[0], mu);
                    assert_eq!(rows[2 * n], lambda.padded(mu.len() + n));
                    for k in 0..rows.len() - 1 {
                        let below = &rows[k];
                        let above = &rows[k + 1];
                        // z_{k+1, j} <= z_{k, j-1} <= z_{k+1, j-1}
                        for j in 1..above.len() {
                            if j - 1 < below.len() {
                                assert!(above.part_doubled(j) <= below.part_doubled(j - 1));
                                assert!(below.part_doubled(j - 1) <= above.part_doubled(j - 1));
                            }
                        }
                    }
                    // half-integer pivots bounded by both even neighbors
                    for i in 1..=n {
                        let odd = &rows[2 * i - 1];
                        let last = odd.part_doubled(odd.len() - 1);
                        assert!(last >= 0);
                        let above = &rows[2 * i];
                        assert!(last <= above.part_doubled(odd.len() - 1));
                        let below = &rows[2 * i - 2];
                        if below.len() > 0 {
                            assert!(last <= below.part_doubled(below.len() - 1));
                        }
                    }
                }
            }
        }
    }
}
