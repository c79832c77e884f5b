//! The textual language of generalized partition patterns.
//!
//! A pattern is a partition of `{1, …, k}` whose notation may carry three
//! kinds of extra constraints:
//!
//! * a `|` between two blocks requires their host blocks to be adjacent in
//!   the containing partition's canonical order (in either relative order);
//! * a `-` between two elements of a block (an arc) requires their images to
//!   be adjacent within the host block;
//! * an `m` (`M`) flag on an element requires its image to be the minimum
//!   (maximum) of its host block.
//!
//! Grammar, whitespace-insensitive (a missing connector between two elements
//! of a block reads as `,`):
//!
//! ```text
//! expr    := pattern ('+' pattern)*
//! pattern := block (('/' | '|') block)*
//! block   := element (('-' | ',')? element)*
//! element := number flags? ; number := digit | '(' digit+ ')' ; flags := 'm'? 'M'?
//! ```
//!
//! The canonical spelling always writes a connector (`,` when there is no
//! arc) and flags in the order `m` then `M`; blocks must be written in
//! canonical order (increasing minima, elements increasing inside a block).

use crate::partition::SetPartition;
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PatternError {
    #[error("empty pattern")]
    Empty,
    #[error("expected an element")]
    ExpectedElement,
    #[error("duplicate element {0}")]
    DuplicateElement(usize),
    #[error("elements must be exactly 1..={max} but {missing} is missing")]
    MissingElement { missing: usize, max: usize },
    #[error("elements start at 1; found 0")]
    ZeroElement,
    #[error("elements within a block must increase")]
    NonIncreasingBlock,
    #[error("blocks must be written in canonical order (increasing minima)")]
    BlocksNotCanonical,
    #[error("misplaced or repeated flag {0:?} (flags are 'm' then 'M')")]
    BadFlag(char),
    #[error("unexpected character {0:?}")]
    UnexpectedChar(char),
    #[error("unclosed '('")]
    UnclosedParen,
    #[error("empty '()'")]
    EmptyParen,
    #[error("length mismatch between elements and their annotations")]
    AnnotationLength,
}

/// One block of a generalized pattern.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PatternBlock {
    elements: Vec<usize>,
    /// Arc between consecutive elements `i`, `i+1`.
    elem_adjacent: Vec<bool>,
    /// Per-element "must be the host-block minimum" flag.
    min_mark: Vec<bool>,
    /// Per-element "must be the host-block maximum" flag.
    max_mark: Vec<bool>,
}

impl PatternBlock {
    pub fn new(
        elements: Vec<usize>,
        elem_adjacent: Vec<bool>,
        min_mark: Vec<bool>,
        max_mark: Vec<bool>,
    ) -> Result<Self, PatternError> {
        if elements.is_empty() {
            return Err(PatternError::Empty);
        }
        if elem_adjacent.len() + 1 != elements.len()
            || min_mark.len() != elements.len()
            || max_mark.len() != elements.len()
        {
            return Err(PatternError::AnnotationLength);
        }
        if !elements.windows(2).all(|w| w[0] < w[1]) {
            return Err(PatternError::NonIncreasingBlock);
        }
        Ok(PatternBlock {
            elements,
            elem_adjacent,
            min_mark,
            max_mark,
        })
    }

    /// Plain block on the given elements, no arcs, no marks.
    pub fn plain(elements: Vec<usize>) -> Result<Self, PatternError> {
        let k = elements.len();
        PatternBlock::new(
            elements,
            vec![false; k.saturating_sub(1)],
            vec![false; k],
            vec![false; k],
        )
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elem_adjacent(&self) -> &[bool] {
        &self.elem_adjacent
    }

    pub fn min_mark(&self) -> &[bool] {
        &self.min_mark
    }

    pub fn max_mark(&self) -> &[bool] {
        &self.max_mark
    }

    fn is_plain(&self) -> bool {
        !self.elem_adjacent.iter().any(|&b| b)
            && !self.min_mark.iter().any(|&b| b)
            && !self.max_mark.iter().any(|&b| b)
    }
}

/// A generalized partition pattern.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GenPattern {
    k: usize,
    blocks: Vec<PatternBlock>,
    /// `true` between consecutive blocks joined by `|`.
    boundary_adjacent: Vec<bool>,
}

impl GenPattern {
    pub fn new(
        blocks: Vec<PatternBlock>,
        boundary_adjacent: Vec<bool>,
    ) -> Result<Self, PatternError> {
        if blocks.is_empty() {
            return Err(PatternError::Empty);
        }
        if boundary_adjacent.len() + 1 != blocks.len() {
            return Err(PatternError::AnnotationLength);
        }
        if !blocks
            .windows(2)
            .all(|w| w[0].elements[0] < w[1].elements[0])
        {
            return Err(PatternError::BlocksNotCanonical);
        }
        let mut all: Vec<usize> = blocks
            .iter()
            .flat_map(|b| b.elements.iter().copied())
            .collect();
        if all.contains(&0) {
            return Err(PatternError::ZeroElement);
        }
        all.sort_unstable();
        for w in all.windows(2) {
            if w[0] == w[1] {
                return Err(PatternError::DuplicateElement(w[0]));
            }
        }
        let max = all.last().copied().unwrap_or(0);
        if all.len() != max {
            let missing = all
                .iter()
                .enumerate()
                .find(|(i, &e)| e != i + 1)
                .map(|(i, _)| i + 1)
                .unwrap_or(all.len() + 1);
            return Err(PatternError::MissingElement { missing, max });
        }
        Ok(GenPattern {
            k: max,
            blocks,
            boundary_adjacent,
        })
    }

    /// Pattern ground-set size.
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn blocks(&self) -> &[PatternBlock] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    pub fn boundary_adjacent(&self) -> &[bool] {
        &self.boundary_adjacent
    }

    /// Drops every adjacency restriction and mark.
    pub fn underlying_classical(&self) -> GenPattern {
        let blocks = self
            .blocks
            .iter()
            .map(|b| PatternBlock::plain(b.elements.clone()).expect("valid block"))
            .collect();
        GenPattern {
            k: self.k,
            blocks,
            boundary_adjacent: vec![false; self.boundary_adjacent.len()],
        }
    }

    pub fn is_classical(&self) -> bool {
        !self.boundary_adjacent.iter().any(|&b| b) && self.blocks.iter().all(PatternBlock::is_plain)
    }

    /// The underlying block structure as a set partition of `[k]`.
    pub fn to_partition(&self) -> SetPartition {
        SetPartition::from_blocks(self.blocks.iter().map(|b| b.elements.clone()).collect())
            .expect("pattern blocks form a partition")
    }

    /// A classical (unadorned) pattern from a partition of `[k]`.
    pub fn from_partition(p: &SetPartition) -> GenPattern {
        let blocks = p
            .blocks()
            .iter()
            .map(|b| PatternBlock::plain(b.clone()).expect("valid block"))
            .collect::<Vec<_>>();
        let bars = vec![false; blocks.len().saturating_sub(1)];
        GenPattern::new(blocks, bars).expect("valid pattern")
    }
}

impl fmt::Display for GenPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                f.write_str(if self.boundary_adjacent[i - 1] {
                    "|"
                } else {
                    "/"
                })?;
            }
            for (j, &e) in b.elements.iter().enumerate() {
                if j > 0 {
                    f.write_str(if b.elem_adjacent[j - 1] { "-" } else { "," })?;
                }
                crate::partition::write_element(f, e)?;
                if b.min_mark[j] {
                    f.write_str("m")?;
                }
                if b.max_mark[j] {
                    f.write_str("M")?;
                }
            }
        }
        Ok(())
    }
}

impl FromStr for GenPattern {
    type Err = PatternError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_pattern(s)
    }
}

/// A formal sum of patterns; evaluating it on a partition sums the copy
/// counts of the terms.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PatternExpr {
    terms: Vec<GenPattern>,
}

impl PatternExpr {
    pub fn new(terms: Vec<GenPattern>) -> Result<Self, PatternError> {
        if terms.is_empty() {
            return Err(PatternError::Empty);
        }
        Ok(PatternExpr { terms })
    }

    pub fn terms(&self) -> &[GenPattern] {
        &self.terms
    }
}

impl From<GenPattern> for PatternExpr {
    fn from(p: GenPattern) -> Self {
        PatternExpr { terms: vec![p] }
    }
}

impl fmt::Display for PatternExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

impl FromStr for PatternExpr {
    type Err = PatternError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_expr(s)
    }
}

struct Cursor<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
}

impl<'a> Cursor<'a> {
    fn new(s: &'a str) -> Self {
        Cursor {
            chars: s.chars().peekable(),
        }
    }

    fn peek(&mut self) -> Option<char> {
        while let Some(&c) = self.chars.peek() {
            if c.is_whitespace() {
                self.chars.next();
            } else {
                return Some(c);
            }
        }
        None
    }

    fn bump(&mut self) -> Option<char> {
        self.peek()?;
        self.chars.next()
    }
}

fn parse_number(cur: &mut Cursor) -> Result<usize, PatternError> {
    match cur.peek() {
        Some(c @ '0'..='9') => {
            cur.bump();
            Ok(c as usize - '0' as usize)
        }
        Some('(') => {
            cur.bump();
            let mut num = String::new();
            loop {
                match cur.bump() {
                    Some(')') => break,
                    Some(d @ '0'..='9') => num.push(d),
                    Some(other) => return Err(PatternError::UnexpectedChar(other)),
                    None => return Err(PatternError::UnclosedParen),
                }
            }
            if num.is_empty() {
                return Err(PatternError::EmptyParen);
            }
            Ok(num.parse().expect("digits"))
        }
        _ => Err(PatternError::ExpectedElement),
    }
}

fn parse_element(cur: &mut Cursor) -> Result<(usize, bool, bool), PatternError> {
    let value = parse_number(cur)?;
    let mut min = false;
    let mut max = false;
    loop {
        match cur.peek() {
            Some('m') => {
                if min || max {
                    return Err(PatternError::BadFlag('m'));
                }
                min = true;
                cur.bump();
            }
            Some('M') => {
                if max {
                    return Err(PatternError::BadFlag('M'));
                }
                max = true;
                cur.bump();
            }
            _ => break,
        }
    }
    Ok((value, min, max))
}

fn starts_element(c: char) -> bool {
    c.is_ascii_digit() || c == '('
}

fn parse_block(cur: &mut Cursor) -> Result<PatternBlock, PatternError> {
    let mut elements = Vec::new();
    let mut arcs = Vec::new();
    let mut mins = Vec::new();
    let mut maxs = Vec::new();
    let (e, mn, mx) = parse_element(cur)?;
    elements.push(e);
    mins.push(mn);
    maxs.push(mx);
    loop {
        match cur.peek() {
            Some('-') => {
                cur.bump();
                let (e, mn, mx) = parse_element(cur)?;
                elements.push(e);
                mins.push(mn);
                maxs.push(mx);
                arcs.push(true);
            }
            Some(',') => {
                cur.bump();
                let (e, mn, mx) = parse_element(cur)?;
                elements.push(e);
                mins.push(mn);
                maxs.push(mx);
                arcs.push(false);
            }
            // Juxtaposed elements read as ',' (e.g. "13|2", "1m3/2m").
            Some(c) if starts_element(c) => {
                let (e, mn, mx) = parse_element(cur)?;
                elements.push(e);
                mins.push(mn);
                maxs.push(mx);
                arcs.push(false);
            }
            _ => break,
        }
    }
    PatternBlock::new(elements, arcs, mins, maxs)
}

fn parse_one_pattern(cur: &mut Cursor) -> Result<GenPattern, PatternError> {
    let mut blocks = vec![parse_block(cur)?];
    let mut bars = Vec::new();
    loop {
        match cur.peek() {
            Some('/') => {
                cur.bump();
                blocks.push(parse_block(cur)?);
                bars.push(false);
            }
            Some('|') => {
                cur.bump();
                blocks.push(parse_block(cur)?);
                bars.push(true);
            }
            _ => break,
        }
    }
    GenPattern::new(blocks, bars)
}

/// Parses a single generalized pattern.
pub fn parse_pattern(text: &str) -> Result<GenPattern, PatternError> {
    let mut cur = Cursor::new(text);
    if cur.peek().is_none() {
        return Err(PatternError::Empty);
    }
    let p = parse_one_pattern(&mut cur)?;
    match cur.peek() {
        None => Ok(p),
        Some(c) => Err(PatternError::UnexpectedChar(c)),
    }
}

/// Parses a formal sum of patterns joined by `+`.
pub fn parse_expr(text: &str) -> Result<PatternExpr, PatternError> {
    let mut cur = Cursor::new(text);
    if cur.peek().is_none() {
        return Err(PatternError::Empty);
    }
    let mut terms = vec![parse_one_pattern(&mut cur)?];
    loop {
        match cur.peek() {
            Some('+') => {
                cur.bump();
                terms.push(parse_one_pattern(&mut cur)?);
            }
            None => break,
            Some(c) => return Err(PatternError::UnexpectedChar(c)),
        }
    }
    PatternExpr::new(terms)
}

/// Canonical spelling, `parse_pattern(format_pattern(p)) == p`.
pub fn format_pattern(p: &GenPattern) -> String {
    p.to_string()
}
