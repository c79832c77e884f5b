//! Partition statistics computed from the block and arc-diagram
//! definitions, and their encodings as formal sums of generalized patterns.
//!
//! Each statistic is computed directly here, with no pattern matching
//! involved; `pattern_expr` returns the equivalent pattern sum so the two
//! routes can be checked against each other.

use crate::enumeration::scan_chunks;
use crate::partition::SetPartition;
use crate::pattern::{GenPattern, PatternExpr};
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StatError {
    #[error("unknown statistic {0:?}")]
    Unknown(String),
    #[error("k must be at least 2 for cr_k/ne_k, got {0}")]
    BadK(usize),
}

/// The named statistics; `CrK`/`NeK` carry their parameter `k >= 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Statistic {
    Inv,
    Maj,
    DualInv,
    DualMaj,
    Lb,
    Ls,
    Rb,
    Rs,
    Cr,
    Ne,
    Al,
    CrK(usize),
    NeK(usize),
}

impl Statistic {
    pub fn cr_k(k: usize) -> Result<Statistic, StatError> {
        if k < 2 {
            return Err(StatError::BadK(k));
        }
        Ok(Statistic::CrK(k))
    }

    pub fn ne_k(k: usize) -> Result<Statistic, StatError> {
        if k < 2 {
            return Err(StatError::BadK(k));
        }
        Ok(Statistic::NeK(k))
    }

    fn validate(self) -> Result<Statistic, StatError> {
        match self {
            Statistic::CrK(k) | Statistic::NeK(k) if k < 2 => Err(StatError::BadK(k)),
            s => Ok(s),
        }
    }

    /// The eleven unparameterized statistics plus `cr_k`/`ne_k` for the
    /// given extra parameters.
    pub fn all(ks: &[usize]) -> Vec<Statistic> {
        let mut v = vec![
            Statistic::Inv,
            Statistic::Maj,
            Statistic::DualInv,
            Statistic::DualMaj,
            Statistic::Lb,
            Statistic::Ls,
            Statistic::Rb,
            Statistic::Rs,
            Statistic::Cr,
            Statistic::Ne,
            Statistic::Al,
        ];
        for &k in ks {
            v.push(Statistic::CrK(k));
            v.push(Statistic::NeK(k));
        }
        v
    }
}

impl fmt::Display for Statistic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Statistic::Inv => write!(f, "inv"),
            Statistic::Maj => write!(f, "maj"),
            Statistic::DualInv => write!(f, "dualinv"),
            Statistic::DualMaj => write!(f, "dualmaj"),
            Statistic::Lb => write!(f, "lb"),
            Statistic::Ls => write!(f, "ls"),
            Statistic::Rb => write!(f, "rb"),
            Statistic::Rs => write!(f, "rs"),
            Statistic::Cr => write!(f, "cr"),
            Statistic::Ne => write!(f, "ne"),
            Statistic::Al => write!(f, "al"),
            Statistic::CrK(k) => write!(f, "cr_{k}"),
            Statistic::NeK(k) => write!(f, "ne_{k}"),
        }
    }
}

impl FromStr for Statistic {
    type Err = StatError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let stat = match s {
            "inv" => Statistic::Inv,
            "maj" => Statistic::Maj,
            "dualinv" => Statistic::DualInv,
            "dualmaj" => Statistic::DualMaj,
            "lb" => Statistic::Lb,
            "ls" => Statistic::Ls,
            "rb" => Statistic::Rb,
            "rs" => Statistic::Rs,
            "cr" => Statistic::Cr,
            "ne" => Statistic::Ne,
            "al" => Statistic::Al,
            other => {
                let k = other
                    .strip_prefix("cr_")
                    .or_else(|| other.strip_prefix("ne_"))
                    .and_then(|t| t.parse::<usize>().ok())
                    .ok_or_else(|| StatError::Unknown(other.to_string()))?;
                if other.starts_with("cr_") {
                    return Statistic::cr_k(k);
                }
                return Statistic::ne_k(k);
            }
        };
        Ok(stat)
    }
}

/// Value of the statistic on a partition, from the definitions.
pub fn compute_stat(sigma: &SetPartition, stat: Statistic) -> Result<u64, StatError> {
    let stat = stat.validate()?;
    Ok(match stat {
        Statistic::Inv => inversions(sigma),
        Statistic::Maj => major_index(sigma),
        Statistic::DualInv => dual_inversions(sigma),
        Statistic::DualMaj => dual_major_index(sigma),
        Statistic::Lb => pair_scan(sigma, PairKind::LeftBigger),
        Statistic::Ls => pair_scan(sigma, PairKind::LeftSmaller),
        Statistic::Rb => pair_scan(sigma, PairKind::RightBigger),
        Statistic::Rs => pair_scan(sigma, PairKind::RightSmaller),
        Statistic::Cr => arc_pairs(sigma, ArcRelation::Crossing),
        Statistic::Ne => arc_pairs(sigma, ArcRelation::Nesting),
        Statistic::Al => arc_pairs(sigma, ArcRelation::Alignment),
        Statistic::CrK(k) => arc_chains(sigma, k, true),
        Statistic::NeK(k) => arc_chains(sigma, k, false),
    })
}

/// An inversion is a pair `(b, B_j)` with `b` in an earlier block and
/// `b > min B_j`.
fn inversions(sigma: &SetPartition) -> u64 {
    let mut count = 0;
    for (i, block) in sigma.blocks().iter().enumerate() {
        for later in &sigma.blocks()[i + 1..] {
            count += block.iter().filter(|&&b| b > later[0]).count() as u64;
        }
    }
    count
}

/// A descent is a pair `(b, B_{i+1})` with `b` in `B_i` exceeding
/// `min B_{i+1}`; each descent out of `B_i` contributes `i`.
fn major_index(sigma: &SetPartition) -> u64 {
    let mut total = 0u64;
    for (i, pair) in sigma.blocks().windows(2).enumerate() {
        let descents = pair[0].iter().filter(|&&b| b > pair[1][0]).count() as u64;
        total += (i as u64 + 1) * descents;
    }
    total
}

/// Dual inversions: pairs `(b, B_j)` with `b` in a later block and
/// `b > min B_j`; the canonical order makes every such pair count.
fn dual_inversions(sigma: &SetPartition) -> u64 {
    let mut count = 0;
    for (i, block) in sigma.blocks().iter().enumerate() {
        for earlier in &sigma.blocks()[..i] {
            count += block.iter().filter(|&&b| b > earlier[0]).count() as u64;
        }
    }
    count
}

/// `sum over blocks of (i-1) * #B_i`.
fn dual_major_index(sigma: &SetPartition) -> u64 {
    sigma
        .blocks()
        .iter()
        .enumerate()
        .map(|(i, b)| (i as u64) * b.len() as u64)
        .sum()
}

enum PairKind {
    LeftBigger,
    LeftSmaller,
    RightBigger,
    RightSmaller,
}

/// The four pair statistics, as one quadrant scan over `(b, B_j)`:
/// left/right selects whether `b`'s block precedes or follows `B_j`;
/// bigger/smaller compares `b` against `min B_j` or `max B_j`.
fn pair_scan(sigma: &SetPartition, kind: PairKind) -> u64 {
    let mut count = 0u64;
    for (i, block) in sigma.blocks().iter().enumerate() {
        for (j, other) in sigma.blocks().iter().enumerate() {
            if i == j {
                continue;
            }
            let hit = |b: usize| match kind {
                PairKind::LeftBigger => i < j && b > other[0],
                PairKind::LeftSmaller => i > j && b > other[0],
                PairKind::RightBigger => i < j && b < *other.last().unwrap(),
                PairKind::RightSmaller => i > j && b < *other.last().unwrap(),
            };
            count += block.iter().filter(|&&b| hit(b)).count() as u64;
        }
    }
    count
}

enum ArcRelation {
    Crossing,
    Nesting,
    Alignment,
}

/// Pairs of proper arcs of the standard representation in the given
/// relative position; loops never qualify since all inequalities on the
/// endpoints of one arc are strict.
fn arc_pairs(sigma: &SetPartition, rel: ArcRelation) -> u64 {
    let diagram = sigma.standard_representation();
    let arcs: Vec<(usize, usize)> = diagram.arcs().collect();
    let mut count = 0u64;
    for (i, &(a1, b1)) in arcs.iter().enumerate() {
        for &(a2, b2) in &arcs[i + 1..] {
            // arcs are sorted by left endpoint, so a1 <= a2
            let hit = match rel {
                ArcRelation::Crossing => a1 < a2 && a2 < b1 && b1 < b2,
                ArcRelation::Nesting => a1 < a2 && b2 < b1,
                ArcRelation::Alignment => b1 <= a2,
            };
            if hit {
                count += 1;
            }
        }
    }
    count
}

/// `k`-crossings (`i_1<…<i_k<j_1<…<j_k`) or `k`-nestings
/// (`i_1<…<i_k<j_k<…<j_1`) among the proper arcs.
fn arc_chains(sigma: &SetPartition, k: usize, crossing: bool) -> u64 {
    let diagram = sigma.standard_representation();
    let arcs: Vec<(usize, usize)> = diagram.arcs().collect();
    let mut chosen: Vec<(usize, usize)> = Vec::with_capacity(k);
    let mut count = 0u64;
    fn rec(
        arcs: &[(usize, usize)],
        start: usize,
        k: usize,
        crossing: bool,
        chosen: &mut Vec<(usize, usize)>,
        count: &mut u64,
    ) {
        if chosen.len() == k {
            *count += 1;
            return;
        }
        for t in start..arcs.len() {
            let (a, b) = arcs[t];
            let ok = match chosen.last() {
                None => true,
                Some(&(pa, pb)) => {
                    if crossing {
                        a > pa && b > pb && a < pb
                    } else {
                        a > pa && b < pb
                    }
                }
            };
            // For crossings the left endpoints must also all precede the
            // first right endpoint.
            let ok = ok && (!crossing || chosen.first().is_none_or(|&(_, fb)| a < fb));
            if ok {
                chosen.push((a, b));
                rec(arcs, t + 1, k, crossing, chosen, count);
                chosen.pop();
            }
        }
    }
    rec(&arcs, 0, k, crossing, &mut chosen, &mut count);
    count
}

/// The pattern sum whose value on any partition equals the statistic.
pub fn pattern_expr(stat: Statistic) -> Result<PatternExpr, StatError> {
    let stat = stat.validate()?;
    let text = match stat {
        Statistic::Inv | Statistic::Lb => "1m3/2m".to_string(),
        Statistic::Maj => "1m3|2m + 1m/2m4|3m".to_string(),
        Statistic::DualInv | Statistic::DualMaj | Statistic::Ls => "1m/2m + 1m/2m3".to_string(),
        // Right-bigger pairs split by whether b is its block's minimum,
        // whether the partner block is a singleton, and (for non-minimal b
        // with a non-singleton partner) whether b clears the partner's
        // minimum; each case is one term.
        Statistic::Rb => "1m/2m,3M + 1m3/2m,4M + 1m2/3m,4M + 1m/2mM + 1m2/3mM".to_string(),
        Statistic::Rs => "1m,3M/2m + 1m,4M/2m3".to_string(),
        Statistic::Cr => "1-3/2-4".to_string(),
        Statistic::Ne => "1-4/2-3".to_string(),
        Statistic::Al => "1-2/3-4 + 1-2,3-4 + 1-2-3".to_string(),
        Statistic::CrK(k) => chain_pattern(k, true),
        Statistic::NeK(k) => chain_pattern(k, false),
    };
    Ok(text.parse().expect("builtin pattern expression parses"))
}

fn spell(e: usize) -> String {
    if e < 10 {
        e.to_string()
    } else {
        format!("({e})")
    }
}

/// `1-(k+1)/2-(k+2)/…/k-(2k)` for k-crossings,
/// `1-(2k)/2-(2k-1)/…/k-(k+1)` for k-nestings.
fn chain_pattern(k: usize, crossing: bool) -> String {
    let blocks: Vec<String> = (1..=k)
        .map(|i| {
            let partner = if crossing { k + i } else { 2 * k + 1 - i };
            format!("{}-{}", spell(i), spell(partner))
        })
        .collect();
    blocks.join("/")
}

/// Histogram of the statistic over the partitions of `[n]`, optionally
/// restricted to an avoidance class.
pub fn distribution(
    n: usize,
    stat: Statistic,
    avoid: &[GenPattern],
    jobs: usize,
) -> Result<BTreeMap<u64, u64>, StatError> {
    let stat = stat.validate()?;
    let per_chunk = scan_chunks(n, jobs, |sigma| {
        let mut h = BTreeMap::new();
        if avoid.iter().all(|p| !crate::matcher::contains(sigma, p)) {
            let v = compute_stat(sigma, stat).expect("validated");
            h.insert(v, 1u64);
        }
        h
    });
    let mut hist = BTreeMap::new();
    for h in per_chunk {
        for (k, v) in h {
            *hist.entry(k).or_insert(0) += v;
        }
    }
    Ok(hist)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matcher::evaluate_expr;
    use crate::partition::{all_partitions, parse_partition};

    fn p(s: &str) -> SetPartition {
        parse_partition(s).unwrap()
    }

    fn val(sigma: &SetPartition, s: Statistic) -> u64 {
        compute_stat(sigma, s).unwrap()
    }

    #[test]
    fn worked_example_values() {
        let sigma = p("137/26/45");
        assert_eq!(val(&sigma, Statistic::Inv), 4);
        assert_eq!(val(&sigma, Statistic::Maj), 4);
        assert_eq!(val(&sigma, Statistic::DualInv), 6);
        assert_eq!(val(&sigma, Statistic::DualMaj), 6);
        assert_eq!(val(&sigma, Statistic::Lb), 4);
        assert_eq!(val(&sigma, Statistic::Ls), 6);
        assert_eq!(val(&sigma, Statistic::Rb), 5);
        assert_eq!(val(&sigma, Statistic::Rs), 6);
        assert_eq!(val(&sigma, Statistic::Al), 2);
        // The arc diagram is {(1,3),(3,7),(2,6),(4,5)}: its crossings are
        // {(1,3),(2,6)} and {(2,6),(3,7)}, its nestings {(2,6),(4,5)} and
        // {(3,7),(4,5)}.
        assert_eq!(val(&sigma, Statistic::Cr), 2);
        assert_eq!(val(&sigma, Statistic::Ne), 2);
    }

    #[test]
    fn k_crossing_examples() {
        let sigma = p("14/25/36");
        assert_eq!(val(&sigma, Statistic::CrK(2)), 3);
        assert_eq!(val(&sigma, Statistic::CrK(3)), 1);
        assert_eq!(val(&sigma, Statistic::NeK(2)), 0);
        let nested = p("16/25/34");
        assert_eq!(val(&nested, Statistic::NeK(3)), 1);
        assert_eq!(val(&nested, Statistic::NeK(2)), 3);
    }

    #[test]
    fn k_parameter_validation() {
        assert_eq!(Statistic::cr_k(1), Err(StatError::BadK(1)));
        assert!(compute_stat(&p("12"), Statistic::CrK(1)).is_err());
        assert!(pattern_expr(Statistic::NeK(0)).is_err());
        assert_eq!("cr_3".parse::<Statistic>(), Ok(Statistic::CrK(3)));
        assert!("cr_1".parse::<Statistic>().is_err());
        assert!("zz".parse::<Statistic>().is_err());
    }

    #[test]
    fn pattern_expr_spellings() {
        assert_eq!(pattern_expr(Statistic::Inv).unwrap().to_string(), "1m,3/2m");
        assert_eq!(
            pattern_expr(Statistic::NeK(2)).unwrap().to_string(),
            "1-4/2-3"
        );
        assert_eq!(
            pattern_expr(Statistic::CrK(3)).unwrap().to_string(),
            "1-4/2-5/3-6"
        );
        assert_eq!(
            pattern_expr(Statistic::NeK(3)).unwrap().to_string(),
            "1-6/2-5/3-4"
        );
        assert_eq!(
            pattern_expr(Statistic::CrK(5)).unwrap().to_string(),
            "1-6/2-7/3-8/4-9/5-(10)"
        );
    }

    #[test]
    fn encodings_match_definitions_on_pi5() {
        let stats = Statistic::all(&[2, 3]);
        for sigma in all_partitions(5) {
            for &s in &stats {
                let direct = val(&sigma, s);
                let via_patterns = evaluate_expr(&sigma, &pattern_expr(s).unwrap());
                assert_eq!(direct, via_patterns, "sigma={sigma} stat={s}");
            }
        }
    }

    #[test]
    fn pointwise_identities_on_pi6() {
        for sigma in all_partitions(6) {
            assert_eq!(val(&sigma, Statistic::Lb), val(&sigma, Statistic::Inv));
            assert_eq!(val(&sigma, Statistic::Ls), val(&sigma, Statistic::DualInv));
            assert_eq!(
                val(&sigma, Statistic::DualInv),
                val(&sigma, Statistic::DualMaj)
            );
            assert_eq!(val(&sigma, Statistic::Cr), val(&sigma, Statistic::CrK(2)));
            assert_eq!(val(&sigma, Statistic::Ne), val(&sigma, Statistic::NeK(2)));
        }
    }

    #[test]
    fn loops_never_participate_in_arc_statistics() {
        // Singleton blocks contribute loops to the diagram, never arc pairs.
        for s in ["1/2/3/4", "1/23/4", "1/2/3/4/5"] {
            let sigma = p(s);
            for stat in [Statistic::Cr, Statistic::Ne, Statistic::Al] {
                assert_eq!(val(&sigma, stat), 0, "{s} {stat}");
            }
        }
        // Removing the singletons (and standardizing) changes no arc pairs.
        let with = p("1/26/3/45/7");
        let without = p("14/23");
        for stat in [
            Statistic::Cr,
            Statistic::Ne,
            Statistic::Al,
            Statistic::CrK(2),
        ] {
            assert_eq!(val(&with, stat), val(&without, stat));
        }
    }

    #[test]
    fn distribution_examples() {
        let cr3 = distribution(3, Statistic::Cr, &[], 1).unwrap();
        assert_eq!(cr3, BTreeMap::from([(0, 5)]));
        let cr4 = distribution(4, Statistic::Cr, &[], 1).unwrap();
        assert_eq!(cr4, BTreeMap::from([(0, 14), (1, 1)]));
        // Crossing and nesting numbers are symmetrically distributed.
        for n in 0..=6 {
            assert_eq!(
                distribution(n, Statistic::Cr, &[], 1).unwrap(),
                distribution(n, Statistic::Ne, &[], 1).unwrap(),
                "n={n}"
            );
        }
    }

    #[test]
    fn distribution_restricted_and_parallel() {
        let avoid = vec!["1,3/2".parse().unwrap()];
        let restricted = distribution(5, Statistic::Inv, &avoid, 1).unwrap();
        assert_eq!(restricted.values().sum::<u64>(), 16); // 2^(5-1) layered
        assert_eq!(
            distribution(6, Statistic::Maj, &[], 4).unwrap(),
            distribution(6, Statistic::Maj, &[], 1).unwrap()
        );
    }
}
