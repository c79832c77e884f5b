//! Set partitions of `{1, …, n}` in canonical order, their enumeration in
//! restricted-growth order, and the arc-diagram representation.
//!
//! A partition is stored as its list of blocks with elements increasing
//! inside each block and blocks ordered by their minima, so structural
//! equality coincides with equality of partitions.

use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PartitionError {
    #[error("duplicate element {0}")]
    DuplicateElement(usize),
    #[error("elements must cover 1..={max} but {missing} is missing")]
    NonContiguous { missing: usize, max: usize },
    #[error("ground set size {given} does not match the elements present (max {max})")]
    GroundSetMismatch { given: usize, max: usize },
    #[error("elements start at 1; found 0")]
    ZeroElement,
    #[error("empty block")]
    EmptyBlock,
    #[error("unexpected character {0:?}")]
    UnexpectedChar(char),
    #[error("unclosed '('")]
    UnclosedParen,
    #[error("empty '()'")]
    EmptyParen,
}

/// Parity of a partition: `(-1)^(n - k)` where `k` is the number of blocks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Even,
    Odd,
}

impl Sign {
    pub fn value(self) -> i32 {
        match self {
            Sign::Even => 1,
            Sign::Odd => -1,
        }
    }

    pub fn is_even(self) -> bool {
        self == Sign::Even
    }
}

/// Structural predicates used by the avoidance characterizations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Classification {
    /// Blocks are consecutive intervals `[1,i]/[i+1,j]/…`.
    pub layered: bool,
    /// Every block has at most two elements.
    pub matching: bool,
}

#[derive(Deserialize)]
struct RawPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

/// A set partition of `{1, …, n}` in canonical order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawPartition")]
pub struct SetPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl TryFrom<RawPartition> for SetPartition {
    type Error = PartitionError;

    fn try_from(raw: RawPartition) -> Result<Self, Self::Error> {
        let p = SetPartition::from_blocks(raw.blocks)?;
        if p.n != raw.n {
            return Err(PartitionError::GroundSetMismatch {
                given: raw.n,
                max: p.n,
            });
        }
        Ok(p)
    }
}

impl SetPartition {
    /// The unique partition of the empty set.
    pub fn empty() -> Self {
        SetPartition {
            n: 0,
            blocks: Vec::new(),
        }
    }

    /// Builds a partition from blocks given in any order, canonicalizing.
    ///
    /// The ground set is inferred: the elements must be exactly `1..=n` for
    /// `n` the largest element present.
    pub fn from_blocks(mut blocks: Vec<Vec<usize>>) -> Result<Self, PartitionError> {
        if blocks.iter().any(Vec::is_empty) {
            return Err(PartitionError::EmptyBlock);
        }
        let mut all: Vec<usize> = blocks.iter().flatten().copied().collect();
        if all.contains(&0) {
            return Err(PartitionError::ZeroElement);
        }
        all.sort_unstable();
        for w in all.windows(2) {
            if w[0] == w[1] {
                return Err(PartitionError::DuplicateElement(w[0]));
            }
        }
        let max = all.last().copied().unwrap_or(0);
        if all.len() != max {
            // Sorted, distinct, positive: a gap exists iff fewer than max.
            let missing = all
                .iter()
                .enumerate()
                .find(|(i, &e)| e != i + 1)
                .map(|(i, _)| i + 1)
                .unwrap_or(all.len() + 1);
            return Err(PartitionError::NonContiguous { missing, max });
        }
        for b in &mut blocks {
            b.sort_unstable();
        }
        blocks.sort_by_key(|b| b[0]);
        Ok(SetPartition { n: max, blocks })
    }

    /// Builds a partition from a restricted-growth string: element `i+1`
    /// belongs to block `rgs[i]`, first occurrences increasing.
    pub(crate) fn from_rgs(rgs: &[usize]) -> Self {
        let k = rgs.iter().copied().max().map_or(0, |m| m + 1);
        let mut blocks: Vec<Vec<usize>> = vec![Vec::new(); k];
        for (i, &b) in rgs.iter().enumerate() {
            blocks[b].push(i + 1);
        }
        SetPartition {
            n: rgs.len(),
            blocks,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of blocks.
    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// For each element `1..=n`, the index of the block containing it.
    /// Entry 0 is unused.
    pub fn block_index(&self) -> Vec<usize> {
        let mut idx = vec![usize::MAX; self.n + 1];
        for (b, block) in self.blocks.iter().enumerate() {
            for &e in block {
                idx[e] = b;
            }
        }
        idx
    }

    /// The complement: every element `a` is replaced by `n - a + 1`.
    pub fn complement(&self) -> SetPartition {
        let n = self.n;
        let mut blocks: Vec<Vec<usize>> = self
            .blocks
            .iter()
            .map(|b| b.iter().rev().map(|&a| n - a + 1).collect())
            .collect();
        blocks.sort_by_key(|b: &Vec<usize>| b[0]);
        SetPartition { n, blocks }
    }

    pub fn sign(&self) -> Sign {
        if (self.n - self.block_count()).is_multiple_of(2) {
            Sign::Even
        } else {
            Sign::Odd
        }
    }

    pub fn is_layered(&self) -> bool {
        // Canonical order makes "every block is an interval" equivalent to
        // the layered form [1,i]/[i+1,j]/….
        self.blocks
            .iter()
            .all(|b| b[b.len() - 1] - b[0] + 1 == b.len())
    }

    pub fn is_matching(&self) -> bool {
        self.blocks.iter().all(|b| b.len() <= 2)
    }

    pub fn classify(&self) -> Classification {
        Classification {
            layered: self.is_layered(),
            matching: self.is_matching(),
        }
    }

    /// The standard representation: an edge joins consecutive elements of a
    /// block, and each singleton block carries a loop.
    pub fn standard_representation(&self) -> ArcDiagram {
        let mut edges = Vec::new();
        for b in &self.blocks {
            if b.len() == 1 {
                edges.push((b[0], b[0]));
            } else {
                for w in b.windows(2) {
                    edges.push((w[0], w[1]));
                }
            }
        }
        edges.sort_unstable();
        ArcDiagram { n: self.n, edges }
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                f.write_str("/")?;
            }
            for &e in b {
                write_element(f, e)?;
            }
        }
        Ok(())
    }
}

pub(crate) fn write_element(f: &mut fmt::Formatter<'_>, e: usize) -> fmt::Result {
    if e < 10 {
        write!(f, "{e}")
    } else {
        write!(f, "({e})")
    }
}

impl FromStr for SetPartition {
    type Err = PartitionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_partition(s)
    }
}

/// Parses the textual form `137/26/45`; multi-digit elements are
/// parenthesized, e.g. `(10)`. Blocks may arrive in any order.
pub fn parse_partition(text: &str) -> Result<SetPartition, PartitionError> {
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut current: Vec<usize> = Vec::new();
    let mut chars = text.chars();
    while let Some(c) = chars.next() {
        match c {
            c if c.is_whitespace() => {}
            '/' => {
                if current.is_empty() {
                    return Err(PartitionError::EmptyBlock);
                }
                blocks.push(std::mem::take(&mut current));
            }
            '0'..='9' => current.push(c as usize - '0' as usize),
            '(' => {
                let mut num = String::new();
                loop {
                    match chars.next() {
                        Some(')') => break,
                        Some(d @ '0'..='9') => num.push(d),
                        Some(other) => return Err(PartitionError::UnexpectedChar(other)),
                        None => return Err(PartitionError::UnclosedParen),
                    }
                }
                if num.is_empty() {
                    return Err(PartitionError::EmptyParen);
                }
                current.push(num.parse().expect("digits"));
            }
            other => return Err(PartitionError::UnexpectedChar(other)),
        }
    }
    if !current.is_empty() {
        blocks.push(current);
    } else if !blocks.is_empty() {
        return Err(PartitionError::EmptyBlock); // text ended right after '/'
    }
    SetPartition::from_blocks(blocks)
}

/// Arc-diagram form of a partition: pairs `(a, b)` with `a <= b`, loops on
/// singletons. Reconstructing the blocks recovers the partition exactly.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ArcDiagram {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl ArcDiagram {
    pub fn n(&self) -> usize {
        self.n
    }

    /// All edges, loops included, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// The proper arcs `(a, b)` with `a < b`, sorted by left endpoint.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied().filter(|&(a, b)| a < b)
    }

    /// Rebuilds the partition whose standard representation this is.
    pub fn reconstruct(&self) -> SetPartition {
        let mut parent: Vec<usize> = (0..=self.n).collect();
        fn find(parent: &mut Vec<usize>, x: usize) -> usize {
            if parent[x] != x {
                let r = find(parent, parent[x]);
                parent[x] = r;
            }
            parent[x]
        }
        for &(a, b) in &self.edges {
            let ra = find(&mut parent, a);
            let rb = find(&mut parent, b);
            if ra != rb {
                parent[ra] = rb;
            }
        }
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        let mut root_block: Vec<Option<usize>> = vec![None; self.n + 1];
        for e in 1..=self.n {
            let r = find(&mut parent, e);
            match root_block[r] {
                Some(i) => blocks[i].push(e),
                None => {
                    root_block[r] = Some(blocks.len());
                    blocks.push(vec![e]);
                }
            }
        }
        SetPartition { n: self.n, blocks }
    }
}

/// Iterates every partition of `[n]` exactly once, in lexicographic order of
/// the restricted-growth encoding. The count is the Bell number of `n`.
pub fn all_partitions(n: usize) -> Partitions {
    Partitions::with_prefix(n, Vec::new())
}

/// Restricted-growth enumeration, optionally pinned to a fixed prefix.
/// Disjoint prefixes yield disjoint streams, which is how counting work is
/// split across threads.
pub struct Partitions {
    n: usize,
    rgs: Vec<usize>,
    maxes: Vec<usize>,
    fixed: usize,
    started: bool,
    done: bool,
}

impl Partitions {
    /// Stream of the partitions whose restricted-growth string starts with
    /// `prefix` (which must itself be a valid restricted-growth string).
    pub fn with_prefix(n: usize, prefix: Vec<usize>) -> Partitions {
        debug_assert!(prefix.len() <= n);
        debug_assert!(is_valid_rgs(&prefix));
        let fixed = prefix.len();
        let mut rgs = prefix;
        rgs.resize(n, 0);
        let mut maxes = vec![0; n];
        let mut running = 0;
        for i in 0..n {
            running = running.max(rgs[i]);
            maxes[i] = running;
        }
        Partitions {
            n,
            rgs,
            maxes,
            fixed,
            started: false,
            done: false,
        }
    }

    fn advance(&mut self) -> bool {
        let n = self.n;
        let mut i = n;
        while i > self.fixed {
            i -= 1;
            let cap = if i == 0 { 0 } else { self.maxes[i - 1] + 1 };
            if self.rgs[i] < cap {
                self.rgs[i] += 1;
                for j in i + 1..n {
                    self.rgs[j] = 0;
                }
                let mut running = if i == 0 { 0 } else { self.maxes[i - 1] };
                for j in i..n {
                    running = running.max(self.rgs[j]);
                    self.maxes[j] = running;
                }
                return true;
            }
        }
        false
    }
}

impl Iterator for Partitions {
    type Item = SetPartition;

    fn next(&mut self) -> Option<SetPartition> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(SetPartition::from_rgs(&self.rgs));
        }
        if self.advance() {
            Some(SetPartition::from_rgs(&self.rgs))
        } else {
            self.done = true;
            None
        }
    }
}

pub(crate) fn is_valid_rgs(rgs: &[usize]) -> bool {
    let mut max_seen = 0;
    for (i, &a) in rgs.iter().enumerate() {
        if i == 0 {
            if a != 0 {
                return false;
            }
        } else if a > max_seen + 1 {
            return false;
        }
        max_seen = max_seen.max(a);
    }
    true
}

/// All valid restricted-growth strings of length `depth`, in lexicographic
/// order; used as work-splitting prefixes.
pub(crate) fn rg_prefixes(n: usize, depth: usize) -> Vec<Vec<usize>> {
    let depth = depth.min(n);
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(cur: &mut Vec<usize>, depth: usize, out: &mut Vec<Vec<usize>>) {
        if cur.len() == depth {
            out.push(cur.clone());
            return;
        }
        let cap = cur.iter().copied().max().map_or(0, |m| m + 1);
        for a in 0..=cap {
            cur.push(a);
            rec(cur, depth, out);
            cur.pop();
        }
    }
    rec(&mut cur, depth, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::BigUint;
    use proptest::prelude::*;

    /// Independent Bell-number oracle via the Bell triangle.
    fn bell_triangle(upto: usize) -> Vec<BigUint> {
        let mut bells = vec![BigUint::from(1u32)];
        let mut row = vec![BigUint::from(1u32)];
        for _ in 1..=upto {
            let mut next = vec![row.last().unwrap().clone()];
            for v in &row {
                let last = next.last().unwrap().clone();
                next.push(last + v);
            }
            bells.push(next[0].clone());
            row = next;
        }
        bells
    }

    fn p(s: &str) -> SetPartition {
        parse_partition(s).unwrap()
    }

    #[test]
    fn parse_worked_example() {
        let sigma = p("137/26/45");
        assert_eq!(sigma.n(), 7);
        assert_eq!(sigma.block_count(), 3);
        assert_eq!(sigma.blocks(), &[vec![1, 3, 7], vec![2, 6], vec![4, 5]][..]);
    }

    #[test]
    fn parse_empty_and_reordered() {
        assert_eq!(p(""), SetPartition::empty());
        assert_eq!(p("   "), SetPartition::empty());
        assert_eq!(p("45/26/137"), p("137/26/45"));
    }

    #[test]
    fn parse_multidigit() {
        let sigma = p("1(10)/23456789");
        assert_eq!(sigma.n(), 10);
        assert_eq!(sigma.blocks()[0], vec![1, 10]);
        assert_eq!(sigma.to_string(), "1(10)/23456789");
    }

    #[test]
    fn parse_errors() {
        assert_eq!(
            parse_partition("12/21").unwrap_err(),
            PartitionError::DuplicateElement(1)
        );
        assert_eq!(
            parse_partition("13").unwrap_err(),
            PartitionError::NonContiguous { missing: 2, max: 3 }
        );
        assert_eq!(
            parse_partition("1//2").unwrap_err(),
            PartitionError::EmptyBlock
        );
        assert_eq!(
            parse_partition("12/").unwrap_err(),
            PartitionError::EmptyBlock
        );
        assert_eq!(
            parse_partition("/12").unwrap_err(),
            PartitionError::EmptyBlock
        );
        assert_eq!(
            parse_partition("10/2").unwrap_err(),
            PartitionError::ZeroElement
        );
        assert!(matches!(
            parse_partition("1x").unwrap_err(),
            PartitionError::UnexpectedChar('x')
        ));
        assert_eq!(
            parse_partition("(12").unwrap_err(),
            PartitionError::UnclosedParen
        );
        assert_eq!(
            parse_partition("()1").unwrap_err(),
            PartitionError::EmptyParen
        );
    }

    #[test]
    fn counts_match_bell_triangle() {
        for (n, bell) in bell_triangle(10).iter().enumerate() {
            let count = all_partitions(n).count();
            assert_eq!(&BigUint::from(count), bell, "n={n}");
        }
    }

    #[test]
    fn enumeration_order_is_deterministic_and_first_last_are_extreme() {
        let all: Vec<SetPartition> = all_partitions(4).collect();
        assert_eq!(all.len(), 15);
        assert_eq!(all[0], p("1234"));
        assert_eq!(all[14], p("1/2/3/4"));
        // No duplicates.
        let mut sorted = all.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), 15);
    }

    #[test]
    fn prefix_streams_partition_the_space() {
        for n in [0usize, 1, 5, 6] {
            let whole: Vec<SetPartition> = all_partitions(n).collect();
            for depth in 0..=3.min(n) {
                let mut glued = Vec::new();
                for pre in rg_prefixes(n, depth) {
                    glued.extend(Partitions::with_prefix(n, pre));
                }
                assert_eq!(glued, whole, "n={n} depth={depth}");
            }
        }
    }

    #[test]
    fn complement_worked_example() {
        assert_eq!(p("126/3/45").complement(), p("156/23/4"));
        assert_eq!(SetPartition::empty().complement(), SetPartition::empty());
    }

    #[test]
    fn complement_is_involution_on_pi6() {
        for sigma in all_partitions(6) {
            assert_eq!(sigma.complement().complement(), sigma);
        }
    }

    #[test]
    fn sign_examples() {
        assert_eq!(p("137/26/45").sign(), Sign::Even);
        for n in 1..=6 {
            let singletons = SetPartition::from_rgs(&(0..n).collect::<Vec<_>>());
            assert_eq!(singletons.sign(), Sign::Even);
        }
        // The complement preserves the sign.
        for sigma in all_partitions(5) {
            assert_eq!(sigma.sign(), sigma.complement().sign());
        }
    }

    #[test]
    fn classify_examples() {
        assert!(p("123/4/56/789").is_layered());
        let c = p("137/26/45").classify();
        assert!(!c.layered);
        assert!(!c.matching);
        let c = p("12/34").classify();
        assert!(c.layered);
        assert!(c.matching);
        assert!(SetPartition::empty().is_layered());
        assert!(SetPartition::empty().is_matching());
    }

    #[test]
    fn standard_representation_examples() {
        assert_eq!(
            p("137/26/45").standard_representation().edges(),
            &[(1, 3), (2, 6), (3, 7), (4, 5)][..]
        );
        assert_eq!(
            p("1/2/3").standard_representation().edges(),
            &[(1, 1), (2, 2), (3, 3)][..]
        );
    }

    #[test]
    fn arc_diagram_roundtrip_and_edge_count_on_pi6() {
        for sigma in all_partitions(6) {
            let d = sigma.standard_representation();
            assert_eq!(d.reconstruct(), sigma);
            let arcs = d.arcs().count();
            let expected: usize = sigma
                .blocks()
                .iter()
                .filter(|b| b.len() > 1)
                .map(|b| b.len() - 1)
                .sum();
            assert_eq!(arcs, expected);
        }
    }

    #[test]
    fn json_roundtrip() {
        let sigma = p("137/26/45");
        let js = serde_json::to_string(&sigma).unwrap();
        assert_eq!(js, r#"{"n":7,"blocks":[[1,3,7],[2,6],[4,5]]}"#);
        let back: SetPartition = serde_json::from_str(&js).unwrap();
        assert_eq!(back, sigma);
        assert!(serde_json::from_str::<SetPartition>(r#"{"n":3,"blocks":[[1,2]]}"#).is_err());
        assert!(serde_json::from_str::<SetPartition>(r#"{"n":2,"blocks":[[1],[1,2]]}"#).is_err());
    }

    fn arb_partition(max_n: usize) -> impl Strategy<Value = SetPartition> {
        (0..=max_n).prop_flat_map(|n| {
            proptest::collection::vec(0..=n.max(1), n.saturating_sub(1)).prop_map(move |raw| {
                // Clamp an arbitrary integer string into a valid RGS.
                let mut rgs = Vec::with_capacity(n);
                if n > 0 {
                    rgs.push(0);
                    let mut max_seen = 0;
                    for v in raw {
                        let a = v.min(max_seen + 1);
                        max_seen = max_seen.max(a);
                        rgs.push(a);
                    }
                }
                SetPartition::from_rgs(&rgs)
            })
        })
    }

    proptest! {
        #[test]
        fn display_parse_roundtrip(sigma in arb_partition(11)) {
            let text = sigma.to_string();
            prop_assert_eq!(parse_partition(&text).unwrap(), sigma);
        }

        #[test]
        fn complement_involution(sigma in arb_partition(11)) {
            prop_assert_eq!(sigma.complement().complement(), sigma.clone());
            prop_assert_eq!(sigma.complement().sign(), sigma.sign());
        }

        #[test]
        fn arc_roundtrip(sigma in arb_partition(11)) {
            prop_assert_eq!(sigma.standard_representation().reconstruct(), sigma);
        }
    }
}
