//! Enumeration and exact counting of avoidance classes, their even/odd
//! refinements, the counting sequences for the barred pattern `1,2|3`, and
//! the generating-function checks for their recursions.

use crate::matcher::contains;
use crate::partition::{all_partitions, rg_prefixes, Partitions, SetPartition, Sign};
use crate::pattern::GenPattern;
use crate::registry;
use crate::series::{
    ode_residual_first_family, ode_residual_second_family, RationalSeries, SeriesError,
};
use num::{BigUint, One, Zero};
use serde::Serialize;
use std::str::FromStr;

/// Exact class size split by sign.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ParityCount {
    #[serde(serialize_with = "crate::export::biguint_as_string")]
    pub even: BigUint,
    #[serde(serialize_with = "crate::export::biguint_as_string")]
    pub odd: BigUint,
}

impl ParityCount {
    pub fn total(&self) -> BigUint {
        &self.even + &self.odd
    }
}

/// One row of an exported sequence: which family, which index, the value,
/// and how it was computed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SeqRecord {
    pub family: String,
    pub n: usize,
    pub value: String,
    pub source: SeqSource,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SeqSource {
    Brute,
    Closed,
    Recursion,
}

/// Stream of the partitions of `[n]` avoiding every pattern in `patterns`,
/// in restricted-growth order.
pub fn avoiders<'a>(
    n: usize,
    patterns: &'a [GenPattern],
) -> impl Iterator<Item = SetPartition> + 'a {
    all_partitions(n).filter(move |sigma| patterns.iter().all(|p| !contains(sigma, p)))
}

/// Exact size of the avoidance class.
pub fn count_avoiders(n: usize, patterns: &[GenPattern]) -> BigUint {
    count_avoiders_jobs(n, patterns, 1)
}

/// Exact size of the avoidance class, with the scan split over `jobs`
/// threads by restricted-growth prefix. Identical to the serial result.
pub fn count_avoiders_jobs(n: usize, patterns: &[GenPattern], jobs: usize) -> BigUint {
    let per_chunk = scan_chunks(n, jobs, |sigma| {
        if patterns.iter().all(|p| !contains(sigma, p)) {
            1u64
        } else {
            0
        }
    });
    per_chunk.into_iter().map(BigUint::from).sum()
}

/// Even/odd counts over the avoidance class.
pub fn parity_counts(n: usize, patterns: &[GenPattern]) -> ParityCount {
    parity_counts_jobs(n, patterns, 1)
}

pub fn parity_counts_jobs(n: usize, patterns: &[GenPattern], jobs: usize) -> ParityCount {
    let per_chunk = scan_chunks(n, jobs, |sigma| {
        if patterns.iter().all(|p| !contains(sigma, p)) {
            match sigma.sign() {
                Sign::Even => (1u64, 0u64),
                Sign::Odd => (0, 1),
            }
        } else {
            (0, 0)
        }
    });
    let (mut even, mut odd) = (BigUint::zero(), BigUint::zero());
    for (e, o) in per_chunk {
        even += e;
        odd += o;
    }
    ParityCount { even, odd }
}

/// Maps every partition of `[n]` through `per_sigma` and sums per
/// restricted-growth chunk. With `jobs > 1` the chunks are processed on
/// scoped threads; the chunk totals are assembled in prefix order, so the
/// result does not depend on scheduling.
pub(crate) fn scan_chunks<T, F>(n: usize, jobs: usize, per_sigma: F) -> Vec<T>
where
    T: Send + Sum2 + Default,
    F: Fn(&SetPartition) -> T + Sync,
{
    let jobs = jobs.max(1);
    let depth = if jobs == 1 { 0 } else { split_depth(n, jobs) };
    let prefixes = rg_prefixes(n, depth);
    if jobs == 1 || prefixes.len() == 1 {
        return prefixes
            .into_iter()
            .map(|pre| {
                let mut acc = T::default();
                for sigma in Partitions::with_prefix(n, pre) {
                    acc.add(per_sigma(&sigma));
                }
                acc
            })
            .collect();
    }
    let mut results: Vec<Option<T>> = Vec::new();
    results.resize_with(prefixes.len(), || None);
    let next = std::sync::atomic::AtomicUsize::new(0);
    let slots = std::sync::Mutex::new(&mut results);
    std::thread::scope(|scope| {
        for _ in 0..jobs.min(prefixes.len()) {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
                if i >= prefixes.len() {
                    break;
                }
                let mut acc = T::default();
                for sigma in Partitions::with_prefix(n, prefixes[i].clone()) {
                    acc.add(per_sigma(&sigma));
                }
                slots.lock().unwrap()[i] = Some(acc);
            });
        }
    });
    results
        .into_iter()
        .map(|r| r.expect("chunk done"))
        .collect()
}

/// Accumulators mergeable by addition; the reductions stay associative and
/// order-independent so parallel runs are bit-identical to serial ones.
pub(crate) trait Sum2 {
    fn add(&mut self, other: Self);
}

impl Sum2 for u64 {
    fn add(&mut self, other: Self) {
        *self += other;
    }
}

impl Sum2 for (u64, u64) {
    fn add(&mut self, other: Self) {
        self.0 += other.0;
        self.1 += other.1;
    }
}

impl Sum2 for [(u64, u64); 32] {
    fn add(&mut self, other: Self) {
        for (a, b) in self.iter_mut().zip(other) {
            a.0 += b.0;
            a.1 += b.1;
        }
    }
}

impl Sum2 for std::collections::BTreeMap<u64, u64> {
    fn add(&mut self, other: Self) {
        for (k, v) in other {
            *self.entry(k).or_insert(0) += v;
        }
    }
}

fn split_depth(n: usize, jobs: usize) -> usize {
    // Bell(d) chunks; aim for several chunks per worker.
    let bells = [1usize, 1, 2, 5, 15, 52, 203, 877];
    for (d, &chunks) in bells.iter().enumerate().take(n + 1) {
        if chunks >= 4 * jobs {
            return d;
        }
    }
    bells.len().min(n + 1).saturating_sub(1)
}

/// Fibonacci numbers indexed so that `F(0) = F(1) = 1`.
pub fn fibonacci(n: usize) -> BigUint {
    let mut a = BigUint::one();
    let mut b = BigUint::one();
    for _ in 0..n {
        let next = &a + &b;
        a = b;
        b = next;
    }
    a
}

/// Which generalized-pattern counting sequence: `A` counts the avoiders of
/// `1,2|3` alone, `B` those of `{1,2,3, 1,2|3}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GenKind {
    A,
    B,
}

impl FromStr for GenKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "a" => Ok(GenKind::A),
            "b" => Ok(GenKind::B),
            other => Err(format!(
                "unknown sequence kind {other:?} (expected \"a\" or \"b\")"
            )),
        }
    }
}

impl GenKind {
    /// The avoided pattern set defining the family.
    pub fn patterns(self) -> Vec<GenPattern> {
        match self {
            GenKind::A => vec!["1,2|3".parse().expect("valid")],
            GenKind::B => vec![
                "1,2,3".parse().expect("valid"),
                "1,2|3".parse().expect("valid"),
            ],
        }
    }
}

fn binom(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    num::integer::binomial(BigUint::from(n), BigUint::from(k))
}

/// `a_n` or `b_n` by their recursions:
/// `a_n = a_{n-1} + 1 + sum_{k=1}^{n-2} C(n-2,k) a_{n-k-2}` with
/// `a_0 = a_1 = 1`, and `b_n = b_{n-1} + (n-2) b_{n-3}` with
/// `b_0 = b_1 = 1, b_2 = 2`.
pub fn gen_sequence(kind: GenKind, n: usize) -> BigUint {
    gen_sequence_table(kind, n).pop().expect("nonempty")
}

pub(crate) fn gen_sequence_table(kind: GenKind, n: usize) -> Vec<BigUint> {
    let mut table: Vec<BigUint> = Vec::with_capacity(n + 1);
    for m in 0..=n {
        let value = match kind {
            GenKind::A => match m {
                0 | 1 => BigUint::one(),
                _ => {
                    let mut v = table[m - 1].clone() + BigUint::one();
                    for k in 1..=m - 2 {
                        v += binom(m - 2, k) * &table[m - k - 2];
                    }
                    v
                }
            },
            GenKind::B => match m {
                0 | 1 => BigUint::one(),
                2 => BigUint::from(2u32),
                _ => table[m - 1].clone() + BigUint::from(m - 2) * &table[m - 3],
            },
        };
        table.push(value);
    }
    table
}

/// Coupled even/odd recursions for the two families; the base values up to
/// `n = 2` come from brute force.
pub fn gen_parity_sequence(kind: GenKind, n: usize) -> ParityCount {
    let (evens, odds) = gen_parity_table(kind, n);
    ParityCount {
        even: evens[n].clone(),
        odd: odds[n].clone(),
    }
}

pub(crate) fn gen_parity_table(kind: GenKind, n: usize) -> (Vec<BigUint>, Vec<BigUint>) {
    let patterns = kind.patterns();
    let mut evens: Vec<BigUint> = Vec::with_capacity(n + 1);
    let mut odds: Vec<BigUint> = Vec::with_capacity(n + 1);
    for m in 0..=n {
        if m <= 2 {
            let pc = parity_counts(m, &patterns);
            evens.push(pc.even);
            odds.push(pc.odd);
            continue;
        }
        let (e, o) = match kind {
            GenKind::A => {
                // even l pairs keep parity, odd l flips it; the lone block
                // 12…n contributes by the parity of n-1.
                let mut e = evens[m - 1].clone();
                let mut o = odds[m - 1].clone();
                if m % 2 == 1 {
                    e += BigUint::one();
                } else {
                    o += BigUint::one();
                }
                for l in 1..=m - 2 {
                    let c = binom(m - 2, l);
                    if l % 2 == 0 {
                        e += &c * &evens[m - 2 - l];
                        o += &c * &odds[m - 2 - l];
                    } else {
                        e += &c * &odds[m - 2 - l];
                        o += &c * &evens[m - 2 - l];
                    }
                }
                (e, o)
            }
            GenKind::B => {
                let f = BigUint::from(m - 2);
                (
                    evens[m - 1].clone() + &f * &odds[m - 3],
                    odds[m - 1].clone() + &f * &evens[m - 3],
                )
            }
        };
        evens.push(e);
        odds.push(o);
    }
    (evens, odds)
}

/// Builds the truncated EGF of the family through degree `n_max` and returns
/// the residual of its differential equation, truncated to degree
/// `n_max - 3`. The contract is that the residual is identically zero.
pub fn egf_ode_residual(kind: GenKind, n_max: usize) -> Result<RationalSeries, SeriesError> {
    if n_max < 3 {
        return Err(SeriesError::TruncationTooSmall(n_max));
    }
    let counts = gen_sequence_table(kind, n_max);
    let y = RationalSeries::from_counts(&counts);
    let res = match kind {
        GenKind::A => ode_residual_first_family(&y),
        GenKind::B => ode_residual_second_family(&y),
    };
    Ok(res.truncate(n_max - 3))
}

/// Closed-form value for an avoidance class of classical three-element
/// patterns, when the registry covers it at this `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClosedValue {
    Count(BigUint),
    Parity(ParityCount),
}

/// Registry lookup. `patterns` must all be classical patterns of `[3]`;
/// anything else (or an `n` below the formula's range) yields `None` and the
/// caller falls back to brute force.
pub fn closed_form(n: usize, patterns: &[GenPattern], parity: bool) -> Option<ClosedValue> {
    let mask = registry::pi3_mask(patterns)?;
    if parity {
        let (even, odd) = registry::closed_parity(n, mask)?;
        Some(ClosedValue::Parity(ParityCount { even, odd }))
    } else {
        Some(ClosedValue::Count(registry::closed_count(n, mask)?))
    }
}

/// One pass over all partitions of `[n]` recording, for each subset of the
/// five classical three-element patterns, how many even/odd partitions
/// contain exactly that subset. Every table row then reads off by summation.
pub fn pi3_profile(n: usize, jobs: usize) -> Pi3Profile {
    let pats = registry::pi3_patterns();
    let per_chunk = scan_chunks(n, jobs, |sigma| {
        let mut mask = 0usize;
        for (i, p) in pats.iter().enumerate() {
            if contains(sigma, p) {
                mask |= 1 << i;
            }
        }
        let mut cells = [(0u64, 0u64); 32];
        match sigma.sign() {
            Sign::Even => cells[mask].0 = 1,
            Sign::Odd => cells[mask].1 = 1,
        }
        cells
    });
    let mut cells = [(0u64, 0u64); 32];
    for c in per_chunk {
        cells.add(c);
    }
    Pi3Profile { n, cells }
}

/// Containment profile of `[n]` against the five classical patterns of
/// `[3]`, in the bit order of [`registry::pi3_patterns`].
#[derive(Debug, Clone)]
pub struct Pi3Profile {
    pub n: usize,
    cells: [(u64, u64); 32],
}

impl Pi3Profile {
    /// Number of partitions avoiding every pattern in `avoid_mask`.
    pub fn count(&self, avoid_mask: u8) -> BigUint {
        let pc = self.parity(avoid_mask);
        pc.total()
    }

    pub fn parity(&self, avoid_mask: u8) -> ParityCount {
        let mut even = 0u64;
        let mut odd = 0u64;
        for (m, &(e, o)) in self.cells.iter().enumerate() {
            if m & avoid_mask as usize == 0 {
                even += e;
                odd += o;
            }
        }
        ParityCount {
            even: BigUint::from(even),
            odd: BigUint::from(odd),
        }
    }
}
