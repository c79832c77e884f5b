//! Exact combinatorics of set partitions restricted by patterns.
//!
//! The crate enumerates set partitions of `{1, …, n}`, decides containment of
//! classical and generalized partition patterns (block-adjacency bars,
//! element-adjacency arcs, block-min/max marks), maintains a registry of
//! closed forms and recursions for the avoidance classes of three-element
//! patterns (with even/odd refinements), and computes the standard partition
//! statistics both from their definitions and through their pattern
//! encodings.
//!
//! Everything is exact: class counts are big integers and the generating
//! function checks run over big rationals. The `verify` module cross-checks
//! every closed form against brute-force enumeration; the `ppc` binary
//! exposes the same machinery on the command line.

pub mod enumeration;
pub mod export;
pub mod maps;
pub mod matcher;
pub mod partition;
pub mod pattern;
pub mod registry;
pub mod series;
pub mod statistics;
pub mod verify;

pub use enumeration::{
    avoiders, closed_form, count_avoiders, count_avoiders_jobs, fibonacci, gen_parity_sequence,
    gen_sequence, parity_counts, parity_counts_jobs, ClosedValue, GenKind, ParityCount, SeqRecord,
};
pub use matcher::{contains, count_copies, evaluate_expr, find_copies, Occurrence};
pub use partition::{all_partitions, ArcDiagram, SetPartition, Sign};
pub use pattern::{GenPattern, PatternBlock, PatternExpr};
pub use series::RationalSeries;
pub use statistics::{compute_stat, distribution, pattern_expr, Statistic};
