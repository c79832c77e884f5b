//! The property suites behind `ppc verify`: every closed form, recursion,
//! bijection, and statistic encoding is checked against brute force up to a
//! caller-chosen ground-set size, with a machine-readable result per check.

use crate::enumeration::{
    avoiders, count_avoiders_jobs, egf_ode_residual, gen_parity_sequence, gen_sequence,
    parity_counts, pi3_profile, GenKind,
};
use crate::maps::{
    all_permutations, block_reversal, block_reversal_inverse, perm_avoiders,
    toggle_final_singleton, PermFamily, Permutation,
};
use crate::matcher::{contains, evaluate_expr};
use crate::partition::{all_partitions, SetPartition, Sign};
use crate::pattern::GenPattern;
use crate::registry;
use crate::statistics::{compute_stat, distribution, pattern_expr, Statistic};
use num::BigUint;
use serde::Serialize;
use std::collections::BTreeMap;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    All,
    Enum,
    Parity,
    Gen,
    Stats,
    Maps,
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "all" => Ok(Suite::All),
            "enum" => Ok(Suite::Enum),
            "parity" => Ok(Suite::Parity),
            "gen" => Ok(Suite::Gen),
            "stats" => Ok(Suite::Stats),
            "maps" => Ok(Suite::Maps),
            other => Err(format!(
                "unknown suite {other:?} (expected all, enum, parity, gen, stats, or maps)"
            )),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub id: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl CheckResult {
    fn pass(id: impl Into<String>) -> Self {
        CheckResult {
            id: id.into(),
            passed: true,
            detail: None,
        }
    }

    fn from_failures(id: impl Into<String>, failures: Vec<String>) -> Self {
        match failures.into_iter().next() {
            None => CheckResult::pass(id),
            Some(first) => CheckResult {
                id: id.into(),
                passed: false,
                detail: Some(first),
            },
        }
    }
}

/// Runs the named suite for every `n` up to `max_n`; brute-force scans use
/// up to `jobs` threads and the report is identical for any job count.
pub fn run_suite(suite: Suite, max_n: usize, jobs: usize) -> Vec<CheckResult> {
    let mut out = Vec::new();
    match suite {
        Suite::All => {
            out.extend(run_suite(Suite::Enum, max_n, jobs));
            out.extend(run_suite(Suite::Parity, max_n, jobs));
            out.extend(run_suite(Suite::Gen, max_n, jobs));
            out.extend(run_suite(Suite::Stats, max_n, jobs));
            out.extend(run_suite(Suite::Maps, max_n, jobs));
        }
        Suite::Enum => enum_suite(max_n, jobs, &mut out),
        Suite::Parity => parity_suite(max_n, jobs, &mut out),
        Suite::Gen => gen_suite(max_n, jobs, &mut out),
        Suite::Stats => stats_suite(max_n, jobs, &mut out),
        Suite::Maps => maps_suite(max_n, jobs, &mut out),
    }
    out
}

fn bell_numbers(upto: usize) -> Vec<BigUint> {
    let mut bells = vec![BigUint::from(1u32)];
    let mut row = vec![BigUint::from(1u32)];
    for _ in 1..=upto {
        let mut next = vec![row.last().unwrap().clone()];
        for v in &row {
            let sum = next.last().unwrap() + v;
            next.push(sum);
        }
        bells.push(next[0].clone());
        row = next;
    }
    bells
}

fn pi3(i: usize) -> GenPattern {
    registry::pi3_patterns()[i].clone()
}

fn mask_patterns(mask: u8) -> Vec<GenPattern> {
    (0..5).filter(|i| mask & (1 << i) != 0).map(pi3).collect()
}

fn enum_suite(max_n: usize, jobs: usize, out: &mut Vec<CheckResult>) {
    let profiles: Vec<_> = (0..=max_n).map(|n| pi3_profile(n, jobs)).collect();

    // Totals against the Bell triangle.
    let bells = bell_numbers(max_n);
    let mut failures = Vec::new();
    for (n, bell) in bells.iter().enumerate() {
        let total = profiles[n].count(0);
        if &total != bell {
            failures.push(format!(
                "n={n}: stream yields {total}, triangle says {bell}"
            ));
        }
    }
    out.push(CheckResult::from_failures("enum:bell-totals", failures));

    // Arc-diagram round trip.
    let mut failures = Vec::new();
    for n in 0..=max_n {
        for sigma in all_partitions(n) {
            if sigma.standard_representation().reconstruct() != sigma {
                failures.push(format!("n={n}: {sigma}"));
            }
        }
    }
    out.push(CheckResult::from_failures("enum:arc-roundtrip", failures));

    // Structural characterizations of the two single-pattern classes.
    let layered_pat = pi3(3);
    let matching_pat = pi3(4);
    let mut lay_fail = Vec::new();
    let mut mat_fail = Vec::new();
    for n in 0..=max_n {
        for sigma in all_partitions(n) {
            if sigma.is_layered() != !contains(&sigma, &layered_pat) {
                lay_fail.push(format!("{sigma}"));
            }
            if sigma.is_matching() != !contains(&sigma, &matching_pat) {
                mat_fail.push(format!("{sigma}"));
            }
        }
    }
    out.push(CheckResult::from_failures(
        "enum:layered-avoids-13/2",
        lay_fail,
    ));
    out.push(CheckResult::from_failures(
        "enum:matching-avoids-123",
        mat_fail,
    ));

    // Complementing the pattern complements the avoidance class.
    let mut failures = Vec::new();
    for i in 0..5 {
        let pat = [pi3(i)];
        let comp_mask = registry::complement_mask(1 << i);
        let comp_pat = mask_patterns(comp_mask);
        for n in 0..=max_n {
            let mut mapped: Vec<SetPartition> = avoiders(n, &pat).map(|s| s.complement()).collect();
            mapped.sort();
            let mut direct: Vec<SetPartition> = avoiders(n, &comp_pat).collect();
            direct.sort();
            if mapped != direct {
                failures.push(format!(
                    "pattern {} at n={n}: complemented class differs",
                    registry::PI3_LABELS[i]
                ));
            }
        }
    }
    out.push(CheckResult::from_failures(
        "enum:complement-equivariance",
        failures,
    ));

    // Closed-form counts versus brute force, grouped by canonical key.
    for canon in registry::all_canonical_masks() {
        let id = format!("enum:count-{}", registry::mask_label(canon));
        let mut failures = Vec::new();
        for mask in [canon, registry::complement_mask(canon)] {
            for (n, profile) in profiles.iter().enumerate() {
                if let Some(closed) = registry::closed_count(n, mask) {
                    let brute = profile.count(mask);
                    if closed != brute {
                        failures.push(format!(
                            "{{{}}} at n={n}: closed {closed} vs brute {brute}",
                            registry::mask_label(mask)
                        ));
                    }
                }
            }
        }
        out.push(CheckResult::from_failures(id, failures));
    }

    // Explicit class descriptions versus the enumerated classes.
    for canon in registry::all_canonical_masks() {
        if registry::explicit_avoiders(4.min(max_n), canon).is_none()
            && registry::explicit_avoiders(max_n, canon).is_none()
        {
            continue;
        }
        let id = format!("enum:class-elements-{}", registry::mask_label(canon));
        let mut failures = Vec::new();
        for mask in [canon, registry::complement_mask(canon)] {
            for n in 0..=max_n {
                if let Some(listed) = registry::explicit_avoiders(n, mask) {
                    let mut brute: Vec<SetPartition> = avoiders(n, &mask_patterns(mask)).collect();
                    brute.sort();
                    if listed != brute {
                        failures.push(format!(
                            "{{{}}} at n={n}: listed class differs from enumeration",
                            registry::mask_label(mask)
                        ));
                    }
                }
            }
        }
        out.push(CheckResult::from_failures(id, failures));
    }
}

fn parity_suite(max_n: usize, jobs: usize, out: &mut Vec<CheckResult>) {
    // The sign is complement-invariant, so paired classes split alike.
    let mut failures = Vec::new();
    for n in 0..=max_n {
        for sigma in all_partitions(n) {
            if sigma.sign() != sigma.complement().sign() {
                failures.push(format!("{sigma}"));
            }
        }
    }
    out.push(CheckResult::from_failures(
        "parity:sign-complement",
        failures,
    ));

    let profiles: Vec<_> = (0..=max_n).map(|n| pi3_profile(n, jobs)).collect();
    for canon in registry::all_canonical_masks() {
        if (0..=max_n).all(|n| registry::closed_parity(n, canon).is_none()) {
            continue;
        }
        let id = format!("parity:split-{}", registry::mask_label(canon));
        let mut failures = Vec::new();
        for mask in [canon, registry::complement_mask(canon)] {
            for (n, profile) in profiles.iter().enumerate() {
                if let Some((even, odd)) = registry::closed_parity(n, mask) {
                    let brute = profile.parity(mask);
                    if even != brute.even || odd != brute.odd {
                        failures.push(format!(
                            "{{{}}} at n={n}: closed ({even},{odd}) vs brute ({},{})",
                            registry::mask_label(mask),
                            brute.even,
                            brute.odd
                        ));
                    }
                }
            }
        }
        out.push(CheckResult::from_failures(id, failures));
    }
}

/// The adjacency-relaxation identities: each spelling on the right avoids
/// exactly the same partitions as the plain pattern on the left.
pub fn relaxation_identity_pairs() -> Vec<(&'static str, &'static str)> {
    vec![
        ("1/2/3", "1|2/3"),
        ("1/2/3", "1/2|3"),
        ("1/2/3", "1|2|3"),
        ("1/23", "1|23"),
        ("1/23", "1/2-3"),
        ("1/23", "1|2-3"),
        ("13/2", "1-3/2"),
        ("13/2", "13|2"),
        ("13/2", "1-3|2"),
        ("123", "1-2,3"),
        ("123", "1,2-3"),
        ("123", "1-2-3"),
        ("12/3", "1-2/3"),
        ("12|3", "1-2|3"),
    ]
}

/// Structural description of the `1,2|3` avoiders: every block of size at
/// least two has singleton neighbors, and the singleton after it sits below
/// all of its non-minimal elements.
pub fn blocked_structure_holds(sigma: &SetPartition) -> bool {
    let blocks = sigma.blocks();
    let k = blocks.len();
    for t in 0..k {
        if blocks[t].len() < 2 {
            continue;
        }
        if t > 0 && blocks[t - 1].len() != 1 {
            return false;
        }
        if t + 1 < k {
            if blocks[t + 1].len() != 1 {
                return false;
            }
            let a = blocks[t + 1][0];
            if a >= blocks[t][1] {
                return false;
            }
        }
    }
    true
}

fn gen_suite(max_n: usize, jobs: usize, out: &mut Vec<CheckResult>) {
    // Dropping or adding adjacency restrictions that provably do not
    // restrict: equal avoidance classes, pair by pair.
    for (plain, adorned) in relaxation_identity_pairs() {
        let id = format!("gen:equivalence-{plain}~{adorned}");
        let p: GenPattern = plain.parse().expect("valid");
        let q: GenPattern = adorned.parse().expect("valid");
        let mut failures = Vec::new();
        for n in 0..=max_n {
            let a: Vec<SetPartition> = avoiders(n, std::slice::from_ref(&p)).collect();
            let b: Vec<SetPartition> = avoiders(n, std::slice::from_ref(&q)).collect();
            if a != b {
                failures.push(format!("n={n}: classes differ"));
            }
        }
        out.push(CheckResult::from_failures(id, failures));
    }

    // Adding the barred pattern to a side set S cuts the same class as
    // adding the plain one whenever S forces short or layered partitions
    // (it contains 1/2/3 or 13/2). For the two remaining side sets {1/23}
    // and {1/23, 123} the classes genuinely differ: 13/2/4 and its padded
    // extensions avoid 1/23, 123, and the barred pattern while containing
    // the plain one, so there the inclusion is strict.
    let barred: GenPattern = "1,2|3".parse().expect("valid");
    let plain: GenPattern = "1,2/3".parse().expect("valid");
    for s_mask in 1u8..32 {
        if s_mask & 0b00100 != 0 || s_mask == 0b10000 {
            continue; // S omits 12/3 and is not exactly {123}
        }
        let side = mask_patterns(s_mask);
        let equality_holds = s_mask & 0b01001 != 0; // S meets {1/2/3, 13/2}
        let id = if equality_holds {
            format!("gen:bar-reduction-S={{{}}}", registry::mask_label(s_mask))
        } else {
            format!("gen:bar-strict-S={{{}}}", registry::mask_label(s_mask))
        };
        let mut failures = Vec::new();
        for n in 0..=max_n {
            let mut with_bar = side.clone();
            with_bar.push(barred.clone());
            let mut with_plain = side.clone();
            with_plain.push(plain.clone());
            let a: Vec<SetPartition> = avoiders(n, &with_bar).collect();
            let b: Vec<SetPartition> = avoiders(n, &with_plain).collect();
            if equality_holds {
                if a != b {
                    failures.push(format!("n={n}: classes differ"));
                }
            } else {
                // Always a superset, and strictly larger once n reaches 4.
                if !b.iter().all(|sigma| a.contains(sigma)) {
                    failures.push(format!("n={n}: barred class is not a superset"));
                }
                if n >= 4 && a.len() <= b.len() {
                    failures.push(format!("n={n}: inclusion failed to be strict"));
                }
            }
        }
        out.push(CheckResult::from_failures(id, failures));
    }

    // Membership in the barred class matches the block-structure predicate.
    let mut failures = Vec::new();
    for n in 0..=max_n {
        for sigma in all_partitions(n) {
            if !contains(&sigma, &barred) != blocked_structure_holds(&sigma) {
                failures.push(format!("{sigma}"));
            }
        }
    }
    out.push(CheckResult::from_failures(
        "gen:blocked-structure-1,2|3",
        failures,
    ));

    // The counting recursions against brute force.
    for (kind, name) in [(GenKind::A, "a"), (GenKind::B, "b")] {
        let patterns = kind.patterns();
        let mut failures = Vec::new();
        for n in 0..=max_n {
            let rec = gen_sequence(kind, n);
            let brute = count_avoiders_jobs(n, &patterns, jobs);
            if rec != brute {
                failures.push(format!("n={n}: recursion {rec} vs brute {brute}"));
            }
        }
        out.push(CheckResult::from_failures(
            format!("gen:seq-{name}"),
            failures,
        ));

        let mut failures = Vec::new();
        for n in 0..=max_n {
            let rec = gen_parity_sequence(kind, n);
            let brute = parity_counts(n, &patterns);
            if rec != brute {
                failures.push(format!(
                    "n={n}: recursion ({},{}) vs brute ({},{})",
                    rec.even, rec.odd, brute.even, brute.odd
                ));
            }
        }
        out.push(CheckResult::from_failures(
            format!("gen:parity-seq-{name}"),
            failures,
        ));

        let mut failures = Vec::new();
        match egf_ode_residual(kind, max_n.max(3)) {
            Ok(res) => {
                if !res.is_zero() {
                    failures.push(format!("nonzero residual through degree {}", res.degree()));
                }
            }
            Err(e) => failures.push(e.to_string()),
        }
        out.push(CheckResult::from_failures(
            format!("gen:ode-{name}"),
            failures,
        ));
    }
}

fn stats_suite(max_n: usize, _jobs: usize, out: &mut Vec<CheckResult>) {
    let stats = Statistic::all(&[2, 3]);
    let exprs: Vec<_> = stats
        .iter()
        .map(|&s| pattern_expr(s).expect("valid statistic"))
        .collect();
    let mut failures: BTreeMap<usize, Vec<String>> = BTreeMap::new();
    for n in 0..=max_n {
        for sigma in all_partitions(n) {
            for (idx, &s) in stats.iter().enumerate() {
                let direct = compute_stat(&sigma, s).expect("valid statistic");
                let via = evaluate_expr(&sigma, &exprs[idx]);
                if direct != via {
                    failures
                        .entry(idx)
                        .or_default()
                        .push(format!("{sigma}: direct {direct} vs patterns {via}"));
                }
            }
        }
    }
    for (idx, &s) in stats.iter().enumerate() {
        out.push(CheckResult::from_failures(
            format!("stats:encoding-{s}"),
            failures.remove(&idx).unwrap_or_default(),
        ));
    }

    let mut left = Vec::new();
    let mut dual = Vec::new();
    let mut k2 = Vec::new();
    for n in 0..=max_n {
        for sigma in all_partitions(n) {
            let v = |s| compute_stat(&sigma, s).expect("valid");
            if v(Statistic::Lb) != v(Statistic::Inv) || v(Statistic::Ls) != v(Statistic::DualInv) {
                left.push(format!("{sigma}"));
            }
            if v(Statistic::DualInv) != v(Statistic::DualMaj) {
                dual.push(format!("{sigma}"));
            }
            if v(Statistic::Cr) != v(Statistic::CrK(2)) || v(Statistic::Ne) != v(Statistic::NeK(2))
            {
                k2.push(format!("{sigma}"));
            }
        }
    }
    out.push(CheckResult::from_failures(
        "stats:left-pairs-are-inversions",
        left,
    ));
    out.push(CheckResult::from_failures(
        "stats:dual-inv-equals-dual-maj",
        dual,
    ));
    out.push(CheckResult::from_failures("stats:k2-specialization", k2));

    let mut failures = Vec::new();
    for n in 0..=max_n {
        let cr = distribution(n, Statistic::Cr, &[], 1).expect("valid");
        let ne = distribution(n, Statistic::Ne, &[], 1).expect("valid");
        if cr != ne {
            failures.push(format!("n={n}: crossing and nesting histograms differ"));
        }
    }
    out.push(CheckResult::from_failures(
        "stats:crossing-nesting-symmetry",
        failures,
    ));
}

fn maps_suite(max_n: usize, _jobs: usize, out: &mut Vec<CheckResult>) {
    let layered_matching: Vec<GenPattern> = vec![
        "1,3/2".parse().expect("valid"),
        "1,2,3".parse().expect("valid"),
    ];
    let forbidden = [
        Permutation::new(vec![1, 2, 3]).unwrap(),
        Permutation::new(vec![1, 3, 2]).unwrap(),
        Permutation::new(vec![2, 1, 3]).unwrap(),
    ];

    // Restricted block reversal: a bijection with a two-sided inverse.
    let mut failures = Vec::new();
    for n in 0..=max_n {
        let mut image: Vec<Permutation> = avoiders(n, &layered_matching)
            .map(|sigma| block_reversal(&sigma))
            .collect();
        image.sort();
        let target = perm_avoiders(n, &forbidden);
        if image != target {
            failures.push(format!("n={n}: image differs from the restricted class"));
            continue;
        }
        for sigma in avoiders(n, &layered_matching) {
            match block_reversal_inverse(&block_reversal(&sigma)) {
                Ok(back) if back == sigma => {}
                _ => failures.push(format!("n={n}: inverse fails on {sigma}")),
            }
        }
        for q in &target {
            match block_reversal_inverse(q) {
                Ok(sigma) if &block_reversal(&sigma) == q => {}
                _ => failures.push(format!("n={n}: inverse fails on {q}")),
            }
        }
    }
    out.push(CheckResult::from_failures(
        "maps:block-reversal-bijection",
        failures,
    ));

    // The Fibonacci count of the image class.
    let mut failures = Vec::new();
    for n in 0..=max_n {
        let got = BigUint::from(perm_avoiders(n, &forbidden).len());
        let want = crate::enumeration::fibonacci(n);
        if got != want {
            failures.push(format!("n={n}: {got} vs {want}"));
        }
    }
    out.push(CheckResult::from_failures("maps:fibonacci-class", failures));

    // The four n-element families.
    for family in PermFamily::all() {
        let patterns = family.avoided_patterns();
        let label: Vec<String> = patterns.iter().map(|p| p.to_string()).collect();
        let id = format!("maps:perm-family-{}", label.join(";"));
        let mut failures = Vec::new();
        for n in 1..=max_n {
            let brute = perm_avoiders(n, &patterns);
            if family.members(n) != brute {
                failures.push(format!("n={n}: family differs from brute force"));
            }
            if brute.len() != n {
                failures.push(format!("n={n}: class has {} members", brute.len()));
            }
        }
        out.push(CheckResult::from_failures(id, failures));
    }

    // Sign-reversing involution on the layered class.
    let layered_pat: [GenPattern; 1] = ["1,3/2".parse().expect("valid")];
    let mut failures = Vec::new();
    for n in 2..=max_n {
        let class: Vec<SetPartition> = avoiders(n, &layered_pat).collect();
        let mut even = BigUint::from(0u32);
        for sigma in &class {
            match toggle_final_singleton(sigma) {
                Ok(tau) => {
                    if !tau.is_layered()
                        || &tau == sigma
                        || tau.sign() == sigma.sign()
                        || toggle_final_singleton(&tau).as_ref() != Ok(sigma)
                    {
                        failures.push(format!("n={n}: involution misbehaves on {sigma}"));
                    }
                }
                Err(e) => failures.push(format!("n={n}: {sigma}: {e}")),
            }
            if sigma.sign() == Sign::Even {
                even += 1u32;
            }
        }
        let half = BigUint::from(class.len()) / BigUint::from(2u32);
        if even != half {
            failures.push(format!(
                "n={n}: even count {even} is not half of {}",
                class.len()
            ));
        }
    }
    out.push(CheckResult::from_failures(
        "maps:final-singleton-involution",
        failures,
    ));

    // Worked micro-examples.
    let mut failures = Vec::new();
    let q: Permutation = "32145".parse().expect("valid");
    let p213 = Permutation::new(vec![2, 1, 3]).unwrap();
    let p132 = Permutation::new(vec![1, 3, 2]).unwrap();
    if crate::maps::perm_count_copies(&q, &p213) != 6 {
        failures.push("32145 should contain six copies of 213".to_string());
    }
    if crate::maps::perm_count_copies(&q, &p132) != 0 {
        failures.push("32145 should avoid 132".to_string());
    }
    if all_permutations(3).count() != 6 {
        failures.push("S_3 should have six elements".to_string());
    }
    out.push(CheckResult::from_failures("maps:worked-examples", failures));
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_suite_passes_at_small_n() {
        let results = run_suite(Suite::All, 4, 1);
        assert!(results.len() > 40);
        for r in &results {
            assert!(r.passed, "{}: {:?}", r.id, r.detail);
        }
    }

    #[test]
    fn suite_output_is_deterministic() {
        let a = run_suite(Suite::Gen, 5, 1);
        let b = run_suite(Suite::Gen, 5, 3);
        let ida: Vec<_> = a.iter().map(|r| (&r.id, r.passed)).collect();
        let idb: Vec<_> = b.iter().map(|r| (&r.id, r.passed)).collect();
        assert_eq!(ida, idb);
    }

    #[test]
    fn suite_parsing() {
        assert_eq!("all".parse::<Suite>(), Ok(Suite::All));
        assert_eq!("stats".parse::<Suite>(), Ok(Suite::Stats));
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn blocked_structure_examples() {
        let yes = [
            "", "1", "12345", "134/2", "1/234", "13/2/4", "1/24/3", "1/2/34",
        ];
        let no = ["12/34", "123/4", "12/3/4", "1/23/4"];
        for s in yes {
            assert!(
                blocked_structure_holds(&s.parse().unwrap()),
                "{s} should satisfy the predicate"
            );
        }
        for s in no {
            assert!(
                !blocked_structure_holds(&s.parse().unwrap()),
                "{s} should fail the predicate"
            );
        }
    }
}
