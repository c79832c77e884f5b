//! Bijections between restricted partitions and restricted permutations,
//! the sign-reversing involution on the layered class, and just enough
//! permutation-pattern machinery to cross-check them.

use crate::partition::SetPartition;
use num::BigUint;
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MapsError {
    #[error("permutation values must be a rearrangement of 1..=n")]
    NotAPermutation,
    #[error("input contains the forbidden pattern {0}")]
    OutsideDomain(String),
    #[error("partition is not layered")]
    NotLayered,
    #[error("need n >= 2 to toggle the final element")]
    TooSmall,
    #[error("unexpected character {0:?}")]
    UnexpectedChar(char),
    #[error("unclosed '('")]
    UnclosedParen,
}

/// A permutation of `1..=n` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    values: Vec<usize>,
}

impl Permutation {
    pub fn new(values: Vec<usize>) -> Result<Self, MapsError> {
        let n = values.len();
        let mut seen = vec![false; n + 1];
        for &v in &values {
            if v == 0 || v > n || seen[v] {
                return Err(MapsError::NotAPermutation);
            }
            seen[v] = true;
        }
        Ok(Permutation { values })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            values: (1..=n).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// Positions `i` (1-based) with `q_i > q_{i+1}`.
    pub fn descent_positions(&self) -> Vec<usize> {
        self.values
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] > w[1])
            .map(|(i, _)| i + 1)
            .collect()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &v in &self.values {
            crate::partition::write_element(f, v)?;
        }
        Ok(())
    }
}

impl FromStr for Permutation {
    type Err = MapsError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut values = Vec::new();
        let mut chars = s.chars().peekable();
        while let Some(c) = chars.next() {
            match c {
                c if c.is_whitespace() => {}
                '0'..='9' => values.push(c as usize - '0' as usize),
                '(' => {
                    let mut num = String::new();
                    loop {
                        match chars.next() {
                            Some(')') => break,
                            Some(d @ '0'..='9') => num.push(d),
                            Some(other) => return Err(MapsError::UnexpectedChar(other)),
                            None => return Err(MapsError::UnclosedParen),
                        }
                    }
                    if num.is_empty() {
                        return Err(MapsError::NotAPermutation);
                    }
                    values.push(num.parse().expect("digits"));
                }
                other => return Err(MapsError::UnexpectedChar(other)),
            }
        }
        Permutation::new(values)
    }
}

/// Lexicographic stream of all permutations of `1..=n`.
pub fn all_permutations(n: usize) -> Permutations {
    Permutations {
        current: Some((1..=n).collect()),
    }
}

pub struct Permutations {
    current: Option<Vec<usize>>,
}

impl Iterator for Permutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let cur = self.current.take()?;
        let out = Permutation {
            values: cur.clone(),
        };
        let mut next = cur;
        // Standard next-permutation step.
        let n = next.len();
        let mut i = n.saturating_sub(1);
        while i > 0 && next[i - 1] >= next[i] {
            i -= 1;
        }
        if i > 0 {
            let mut j = n - 1;
            while next[j] <= next[i - 1] {
                j -= 1;
            }
            next.swap(i - 1, j);
            next[i..].reverse();
            self.current = Some(next);
        }
        Some(out)
    }
}

/// Concatenates the blocks in reverse block order, elements increasing
/// inside each block: `1/23/4/56` maps to `564231`.
pub fn block_reversal(sigma: &SetPartition) -> Permutation {
    let values: Vec<usize> = sigma
        .blocks()
        .iter()
        .rev()
        .flat_map(|b| b.iter().copied())
        .collect();
    Permutation { values }
}

fn forbidden_patterns() -> [Permutation; 3] {
    [
        Permutation::new(vec![1, 2, 3]).unwrap(),
        Permutation::new(vec![1, 3, 2]).unwrap(),
        Permutation::new(vec![2, 1, 3]).unwrap(),
    ]
}

/// Inverse of [`block_reversal`] on its image: cuts the word at its
/// descent positions, reading the maximal ascending runs right to left as
/// the blocks. Defined only on permutations avoiding 123, 132, and 213.
pub fn block_reversal_inverse(q: &Permutation) -> Result<SetPartition, MapsError> {
    for p in forbidden_patterns() {
        if perm_contains(q, &p) {
            return Err(MapsError::OutsideDomain(p.to_string()));
        }
    }
    let n = q.n();
    if n == 0 {
        return Ok(SetPartition::empty());
    }
    let mut cuts = q.descent_positions();
    cuts.push(n);
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut start = 0;
    for cut in cuts {
        blocks.push(q.values()[start..cut].to_vec());
        start = cut;
    }
    blocks.reverse();
    SetPartition::from_blocks(blocks).map_err(|_| MapsError::NotAPermutation)
}

/// The sign-reversing involution on layered partitions: if the last block
/// is the singleton `{n}`, merge `n` into the block before it; otherwise
/// split `n` off into its own block.
pub fn toggle_final_singleton(sigma: &SetPartition) -> Result<SetPartition, MapsError> {
    if !sigma.is_layered() {
        return Err(MapsError::NotLayered);
    }
    let n = sigma.n();
    if n < 2 {
        return Err(MapsError::TooSmall);
    }
    let mut blocks: Vec<Vec<usize>> = sigma.blocks().to_vec();
    let last = blocks.last().unwrap();
    if last.len() == 1 {
        blocks.pop();
        blocks.last_mut().unwrap().push(n);
    } else {
        blocks.last_mut().unwrap().pop();
        blocks.push(vec![n]);
    }
    Ok(SetPartition::from_blocks(blocks).expect("still a partition"))
}

/// Number of subsequences of `q` standardizing to `p`.
pub fn perm_count_copies(q: &Permutation, p: &Permutation) -> u64 {
    let mut count = 0u64;
    subsequence_scan(q, p, &mut |_| {
        count += 1;
        false
    });
    count
}

/// Whether `q` contains the pattern `p`; stops at the first copy.
pub fn perm_contains(q: &Permutation, p: &Permutation) -> bool {
    let mut found = false;
    subsequence_scan(q, p, &mut |_| {
        found = true;
        true
    });
    found
}

/// Visits each subsequence of `q` whose standardization is `p`; the visitor
/// returns `true` to stop early.
fn subsequence_scan(q: &Permutation, p: &Permutation, visit: &mut dyn FnMut(&[usize]) -> bool) {
    let k = p.n();
    let n = q.n();
    if k > n {
        return;
    }
    // rank[v] = position of v in p, so chosen values must compare like p.
    let mut chosen: Vec<usize> = Vec::with_capacity(k);
    fn rec(
        q: &[usize],
        p: &[usize],
        start: usize,
        chosen: &mut Vec<usize>,
        visit: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        let j = chosen.len();
        if j == p.len() {
            return visit(chosen);
        }
        for t in start..q.len() {
            let v = q[t];
            // Standardization check against all already-chosen values: the
            // order of values must match the order of the pattern entries.
            let ok = chosen
                .iter()
                .enumerate()
                .all(|(i, &u)| (u < v) == (p[i] < p[j]));
            if ok {
                chosen.push(v);
                if rec(q, p, t + 1, chosen, visit) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    rec(q.values(), p.values(), 0, &mut chosen, visit);
}

/// Brute-force count of the permutations of `[n]` avoiding every pattern.
pub fn perm_avoider_count(n: usize, patterns: &[Permutation]) -> BigUint {
    BigUint::from(perm_avoiders(n, patterns).len())
}

/// The avoiders themselves, in lexicographic order.
pub fn perm_avoiders(n: usize, patterns: &[Permutation]) -> Vec<Permutation> {
    all_permutations(n)
        .filter(|q| patterns.iter().all(|p| !perm_contains(q, p)))
        .collect()
}

/// The four triple-restriction families whose avoider classes have exactly
/// `n` elements: almost-monotone words with one element `k` displaced.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PermFamily {
    /// `[n] \ {k}` descending, then `k`: avoids 123, 132, 231.
    DescendingThenK,
    /// `k`, then `[n] \ {k}` descending: avoids 123, 213, 312.
    KThenDescending,
    /// `k`, then `[n] \ {k}` ascending: avoids 132, 231, 321.
    KThenAscending,
    /// `[n] \ {k}` ascending, then `k`: avoids 213, 312, 321.
    AscendingThenK,
}

impl PermFamily {
    pub fn all() -> [PermFamily; 4] {
        [
            PermFamily::DescendingThenK,
            PermFamily::KThenDescending,
            PermFamily::KThenAscending,
            PermFamily::AscendingThenK,
        ]
    }

    /// The three patterns the family avoids.
    pub fn avoided_patterns(self) -> [Permutation; 3] {
        let lists: [[usize; 3]; 3] = match self {
            PermFamily::DescendingThenK => [[1, 2, 3], [1, 3, 2], [2, 3, 1]],
            PermFamily::KThenDescending => [[1, 2, 3], [2, 1, 3], [3, 1, 2]],
            PermFamily::KThenAscending => [[1, 3, 2], [2, 3, 1], [3, 2, 1]],
            PermFamily::AscendingThenK => [[2, 1, 3], [3, 1, 2], [3, 2, 1]],
        };
        lists.map(|l| Permutation::new(l.to_vec()).unwrap())
    }

    /// The `n` members of the family, sorted.
    pub fn members(self, n: usize) -> Vec<Permutation> {
        let mut out: Vec<Permutation> = (1..=n.max(1)).map(|k| self.member(n, k)).collect();
        if n == 0 {
            out = vec![Permutation::identity(0)];
        }
        out.sort();
        out.dedup();
        out
    }

    fn member(self, n: usize, k: usize) -> Permutation {
        let rest_asc: Vec<usize> = (1..=n).filter(|&v| v != k).collect();
        let rest_desc: Vec<usize> = rest_asc.iter().rev().copied().collect();
        let values = match self {
            PermFamily::DescendingThenK => {
                let mut v = rest_desc;
                v.push(k);
                v
            }
            PermFamily::KThenDescending => {
                let mut v = vec![k];
                v.extend(rest_desc);
                v
            }
            PermFamily::KThenAscending => {
                let mut v = vec![k];
                v.extend(rest_asc);
                v
            }
            PermFamily::AscendingThenK => {
                let mut v = rest_asc;
                v.push(k);
                v
            }
        };
        Permutation { values }
    }
}
