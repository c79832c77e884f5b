//! `ppc`: exact counting and verification for pattern-restricted set
//! partitions on the command line.

use clap::{Parser, Subcommand, ValueEnum};
use num::BigUint;
use partition_patterns::enumeration::{
    self, count_avoiders_jobs, gen_parity_sequence, gen_sequence, parity_counts_jobs, GenKind,
    ParityCount, SeqRecord, SeqSource,
};
use partition_patterns::evaluate_expr;
use partition_patterns::export;
use partition_patterns::partition::SetPartition;
use partition_patterns::pattern::GenPattern;
use partition_patterns::registry;
use partition_patterns::statistics::{compute_stat, distribution, pattern_expr, Statistic};
use partition_patterns::verify::{run_suite, Suite};
use serde::Serialize;
use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "ppc",
    version,
    about = "Exact enumeration of set partitions avoiding (generalized) patterns",
    long_about = None
)]
struct Cli {
    /// Worker threads for brute-force scans; output is identical to serial.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Csv,
    Jsonl,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum DistFormat {
    Plain,
    Csv,
    Jsonl,
    Json,
    Poly,
}

#[derive(Subcommand)]
enum Cmd {
    /// Count avoiders for each n, with the registered closed form when
    /// available; exits 1 if they disagree.
    Count {
        /// Range of ground-set sizes, e.g. "4..9" (inclusive) or "7".
        #[arg(long = "n")]
        n: String,
        /// Patterns to avoid, separated by ';', e.g. "13/2;123".
        #[arg(long, default_value = "")]
        avoid: String,
        /// Split the counts by partition sign.
        #[arg(long)]
        parity: bool,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// List the avoiders of a pattern set, in enumeration order.
    Avoiders {
        #[arg(long = "n")]
        n: usize,
        #[arg(long, default_value = "")]
        avoid: String,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Evaluate statistics on one partition.
    Stat {
        /// The partition, e.g. "137/26/45".
        #[arg(long)]
        sigma: String,
        /// Comma-separated statistics (default: all, with k = 2, 3).
        #[arg(long)]
        stat: Option<String>,
        /// Also evaluate each statistic's pattern encoding; exit 1 on
        /// disagreement.
        #[arg(long)]
        check: bool,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Histogram of a statistic over the partitions of [n].
    Dist {
        #[arg(long = "n")]
        n: usize,
        #[arg(long)]
        stat: String,
        #[arg(long, default_value = "")]
        avoid: String,
        #[arg(long, value_enum, default_value_t = DistFormat::Plain)]
        format: DistFormat,
    },
    /// Values of a counting sequence family, or of an ad-hoc avoidance
    /// count.
    Seq {
        /// One of a, b, oa, ea, ob, eb.
        #[arg(long, conflicts_with = "avoid")]
        family: Option<String>,
        /// Pattern set counted by brute force instead of a family.
        #[arg(long, default_value = "")]
        avoid: String,
        #[arg(long = "n")]
        n: String,
        /// Split ad-hoc counts by sign (not valid with --oeis).
        #[arg(long)]
        parity: bool,
        /// Emit OEIS b-file lines "n value".
        #[arg(long)]
        oeis: bool,
        /// Re-derive each value by brute force; exit 1 on disagreement.
        #[arg(long)]
        check: bool,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Reproduce a verification table row by row; exits 1 on disagreement.
    Table {
        /// "3.3" (triples) or "4.7" (even/odd splits).
        #[arg(long)]
        name: String,
        #[arg(long = "n")]
        n: String,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Run the property suites; prints a JSON report, exits 1 on failure.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long = "max-n")]
        max_n: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let jobs = cli.jobs.max(1);
    let result = match cli.cmd {
        Cmd::Count {
            n,
            avoid,
            parity,
            format,
        } => cmd_count(&n, &avoid, parity, format, jobs),
        Cmd::Avoiders { n, avoid, format } => cmd_avoiders(n, &avoid, format),
        Cmd::Stat {
            sigma,
            stat,
            check,
            format,
        } => cmd_stat(&sigma, stat.as_deref(), check, format),
        Cmd::Dist {
            n,
            stat,
            avoid,
            format,
        } => cmd_dist(n, &stat, &avoid, format, jobs),
        Cmd::Seq {
            family,
            avoid,
            n,
            parity,
            oeis,
            check,
            format,
        } => cmd_seq(
            family.as_deref(),
            &avoid,
            &n,
            parity,
            oeis,
            check,
            format,
            jobs,
        ),
        Cmd::Table { name, n, format } => cmd_table(&name, &n, format, jobs),
        Cmd::Verify { suite, max_n } => cmd_verify(&suite, max_n, jobs),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn parse_range(s: &str) -> Result<(usize, usize), String> {
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (a, b),
        None => (s, s),
    };
    let lo: usize = lo.trim().parse().map_err(|_| format!("bad range {s:?}"))?;
    let hi: usize = hi.trim().parse().map_err(|_| format!("bad range {s:?}"))?;
    if lo > hi {
        return Err(format!("empty range {s:?}"));
    }
    Ok((lo, hi))
}

/// Patterns on the command line are separated by ';' (',' is a connector
/// inside the pattern language).
fn parse_patterns(s: &str) -> Result<Vec<GenPattern>, String> {
    let mut out = Vec::new();
    for piece in s.split(';') {
        let piece = piece.trim();
        if piece.is_empty() {
            continue;
        }
        out.push(
            piece
                .parse::<GenPattern>()
                .map_err(|e| format!("pattern {piece:?}: {e}"))?,
        );
    }
    Ok(out)
}

fn parse_sigma(s: &str) -> Result<SetPartition, String> {
    s.parse::<SetPartition>()
        .map_err(|e| format!("partition {s:?}: {e}"))
}

fn emit_rows(format: Format, headers: &[&str], rows: &[Vec<String>]) {
    match format {
        Format::Plain => print!("{}", export::render_table(headers, rows)),
        Format::Csv => {
            println!("{}", headers.join(","));
            for row in rows {
                println!("{}", export::csv_line(row));
            }
        }
        Format::Jsonl => {
            for row in rows {
                let obj: serde_json::Map<String, serde_json::Value> = headers
                    .iter()
                    .zip(row)
                    .map(|(h, v)| (h.to_string(), serde_json::Value::from(v.clone())))
                    .collect();
                println!("{}", serde_json::Value::Object(obj));
            }
        }
    }
}

/// Recognizes pattern sets with a registered counting sequence.
fn gen_family_of(patterns: &[GenPattern]) -> Option<GenKind> {
    let mut spellings: Vec<String> = patterns.iter().map(|p| p.to_string()).collect();
    spellings.sort();
    spellings.dedup();
    if spellings == ["1,2|3"] {
        Some(GenKind::A)
    } else if spellings == ["1,2,3", "1,2|3"] {
        Some(GenKind::B)
    } else {
        None
    }
}

fn closed_count_of(n: usize, patterns: &[GenPattern]) -> Option<BigUint> {
    if let Some(kind) = gen_family_of(patterns) {
        return Some(gen_sequence(kind, n));
    }
    match enumeration::closed_form(n, patterns, false) {
        Some(enumeration::ClosedValue::Count(c)) => Some(c),
        _ => None,
    }
}

fn closed_parity_of(n: usize, patterns: &[GenPattern]) -> Option<ParityCount> {
    if let Some(kind) = gen_family_of(patterns) {
        return Some(gen_parity_sequence(kind, n));
    }
    match enumeration::closed_form(n, patterns, true) {
        Some(enumeration::ClosedValue::Parity(pc)) => Some(pc),
        _ => None,
    }
}

fn cmd_count(
    n_range: &str,
    avoid: &str,
    parity: bool,
    format: Format,
    jobs: usize,
) -> Result<bool, String> {
    let (lo, hi) = parse_range(n_range)?;
    let patterns = parse_patterns(avoid)?;
    let cache = Cache::open(if parity { "parity" } else { "count" }, avoid);
    let mut rows = Vec::new();
    let mut all_agree = true;
    for n in lo..=hi {
        if parity {
            let brute = match cache.get2(n) {
                Some((e, o)) => ParityCount { even: e, odd: o },
                None => {
                    let pc = parity_counts_jobs(n, &patterns, jobs);
                    cache.put2(n, &pc.even, &pc.odd);
                    pc
                }
            };
            let closed = closed_parity_of(n, &patterns);
            let agree = closed.as_ref().map(|c| c == &brute).unwrap_or(true);
            all_agree &= agree;
            rows.push(vec![
                n.to_string(),
                brute.even.to_string(),
                brute.odd.to_string(),
                closed.as_ref().map_or("-".into(), |c| c.even.to_string()),
                closed.as_ref().map_or("-".into(), |c| c.odd.to_string()),
                if closed.is_none() {
                    "-".into()
                } else if agree {
                    "ok".into()
                } else {
                    "MISMATCH".into()
                },
            ]);
        } else {
            let brute = match cache.get1(n) {
                Some(v) => v,
                None => {
                    let v = count_avoiders_jobs(n, &patterns, jobs);
                    cache.put1(n, &v);
                    v
                }
            };
            let closed = closed_count_of(n, &patterns);
            let agree = closed.as_ref().map(|c| c == &brute).unwrap_or(true);
            all_agree &= agree;
            rows.push(vec![
                n.to_string(),
                brute.to_string(),
                closed.as_ref().map_or("-".into(), |c| c.to_string()),
                if closed.is_none() {
                    "-".into()
                } else if agree {
                    "ok".into()
                } else {
                    "MISMATCH".into()
                },
            ]);
        }
    }
    cache.flush();
    if parity {
        emit_rows(
            format,
            &["n", "even", "odd", "closed_even", "closed_odd", "ok"],
            &rows,
        );
    } else {
        emit_rows(format, &["n", "count", "closed", "ok"], &rows);
    }
    Ok(all_agree)
}

fn cmd_avoiders(n: usize, avoid: &str, format: Format) -> Result<bool, String> {
    let patterns = parse_patterns(avoid)?;
    match format {
        Format::Plain => {
            for sigma in enumeration::avoiders(n, &patterns) {
                println!("{sigma}");
            }
        }
        Format::Csv => {
            println!("n,partition");
            for sigma in enumeration::avoiders(n, &patterns) {
                println!("{n},{sigma}");
            }
        }
        Format::Jsonl => {
            for sigma in enumeration::avoiders(n, &patterns) {
                println!("{}", serde_json::to_string(&sigma).expect("serializable"));
            }
        }
    }
    Ok(true)
}

fn parse_stats(names: Option<&str>) -> Result<Vec<Statistic>, String> {
    match names {
        None => Ok(Statistic::all(&[2, 3])),
        Some(s) => s
            .split(',')
            .map(|x| x.trim().parse::<Statistic>().map_err(|e| e.to_string()))
            .collect(),
    }
}

fn cmd_stat(sigma: &str, stats: Option<&str>, check: bool, format: Format) -> Result<bool, String> {
    let sigma = parse_sigma(sigma)?;
    let stats = parse_stats(stats)?;
    let mut rows = Vec::new();
    let mut all_agree = true;
    for s in stats {
        let direct = compute_stat(&sigma, s).map_err(|e| e.to_string())?;
        if check {
            let expr = pattern_expr(s).map_err(|e| e.to_string())?;
            let via = evaluate_expr(&sigma, &expr);
            let agree = direct == via;
            all_agree &= agree;
            rows.push(vec![
                s.to_string(),
                direct.to_string(),
                via.to_string(),
                if agree {
                    "ok".into()
                } else {
                    "MISMATCH".into()
                },
            ]);
        } else {
            rows.push(vec![s.to_string(), direct.to_string()]);
        }
    }
    if check {
        emit_rows(format, &["stat", "value", "patterns", "ok"], &rows);
    } else {
        emit_rows(format, &["stat", "value"], &rows);
    }
    Ok(all_agree)
}

fn cmd_dist(
    n: usize,
    stat: &str,
    avoid: &str,
    format: DistFormat,
    jobs: usize,
) -> Result<bool, String> {
    let stat: Statistic = stat
        .parse()
        .map_err(|e: partition_patterns::statistics::StatError| e.to_string())?;
    let patterns = parse_patterns(avoid)?;
    let hist: BTreeMap<u64, u64> =
        distribution(n, stat, &patterns, jobs).map_err(|e| e.to_string())?;
    match format {
        DistFormat::Json => println!("{}", export::histogram_json(&hist)),
        DistFormat::Poly => println!("{}", export::histogram_poly(&hist)),
        DistFormat::Plain | DistFormat::Csv | DistFormat::Jsonl => {
            let rows: Vec<Vec<String>> = hist
                .iter()
                .map(|(v, c)| vec![v.to_string(), c.to_string()])
                .collect();
            let f = match format {
                DistFormat::Plain => Format::Plain,
                DistFormat::Csv => Format::Csv,
                _ => Format::Jsonl,
            };
            emit_rows(f, &["value", "count"], &rows);
        }
    }
    Ok(true)
}

#[allow(clippy::too_many_arguments)]
fn cmd_seq(
    family: Option<&str>,
    avoid: &str,
    n_range: &str,
    parity: bool,
    oeis: bool,
    check: bool,
    format: Format,
    jobs: usize,
) -> Result<bool, String> {
    let (lo, hi) = parse_range(n_range)?;
    if oeis && parity {
        return Err("--oeis needs a scalar sequence; drop --parity".into());
    }
    let mut rows = Vec::new();
    let mut json_rows = Vec::new();
    let mut bfile = Vec::new();
    let mut all_agree = true;
    if let Some(fam) = family {
        type ParityPick = fn(&ParityCount) -> BigUint;
        let (kind, which): (GenKind, Option<ParityPick>) = match fam {
            "a" => (GenKind::A, None),
            "b" => (GenKind::B, None),
            "oa" => (GenKind::A, Some(|pc| pc.odd.clone())),
            "ea" => (GenKind::A, Some(|pc| pc.even.clone())),
            "ob" => (GenKind::B, Some(|pc| pc.odd.clone())),
            "eb" => (GenKind::B, Some(|pc| pc.even.clone())),
            other => return Err(format!("unknown family {other:?}")),
        };
        let cache = Cache::open("seq", fam);
        for n in lo..=hi {
            let value = match cache.get1(n) {
                Some(v) => v,
                None => {
                    let v = match which {
                        None => gen_sequence(kind, n),
                        Some(pick) => pick(&gen_parity_sequence(kind, n)),
                    };
                    cache.put1(n, &v);
                    v
                }
            };
            if check {
                let patterns = kind.patterns();
                let brute = match which {
                    None => count_avoiders_jobs(n, &patterns, jobs),
                    Some(pick) => pick(&parity_counts_jobs(n, &patterns, jobs)),
                };
                if brute != value {
                    all_agree = false;
                }
            }
            bfile.push(export::bfile_line(n, &value));
            rows.push(vec![
                fam.to_string(),
                n.to_string(),
                value.to_string(),
                "recursion".into(),
            ]);
            json_rows.push(
                serde_json::to_value(SeqRecord {
                    family: fam.to_string(),
                    n,
                    value: value.to_string(),
                    source: SeqSource::Recursion,
                })
                .expect("serializable"),
            );
        }
        cache.flush();
    } else {
        let patterns = parse_patterns(avoid)?;
        let label = format!("avoid:{avoid}");
        let cache = Cache::open(if parity { "parity" } else { "count" }, avoid);
        for n in lo..=hi {
            if parity {
                let pc = match cache.get2(n) {
                    Some((e, o)) => ParityCount { even: e, odd: o },
                    None => {
                        let pc = parity_counts_jobs(n, &patterns, jobs);
                        cache.put2(n, &pc.even, &pc.odd);
                        pc
                    }
                };
                rows.push(vec![
                    label.clone(),
                    n.to_string(),
                    format!("{}|{}", pc.even, pc.odd),
                    "brute".into(),
                ]);
                json_rows.push(serde_json::json!({
                    "family": label,
                    "n": n,
                    "even": pc.even.to_string(),
                    "odd": pc.odd.to_string(),
                    "source": "brute",
                }));
            } else {
                let value = match cache.get1(n) {
                    Some(v) => v,
                    None => {
                        let v = count_avoiders_jobs(n, &patterns, jobs);
                        cache.put1(n, &v);
                        v
                    }
                };
                bfile.push(export::bfile_line(n, &value));
                rows.push(vec![
                    label.clone(),
                    n.to_string(),
                    value.to_string(),
                    "brute".into(),
                ]);
                json_rows.push(
                    serde_json::to_value(SeqRecord {
                        family: label.clone(),
                        n,
                        value: value.to_string(),
                        source: SeqSource::Brute,
                    })
                    .expect("serializable"),
                );
            }
        }
        cache.flush();
    }
    if oeis {
        for line in bfile {
            println!("{line}");
        }
        return Ok(all_agree);
    }
    match format {
        Format::Jsonl => {
            for row in json_rows {
                println!("{row}");
            }
        }
        _ => emit_rows(format, &["family", "n", "value", "source"], &rows),
    }
    Ok(all_agree)
}

fn cmd_table(name: &str, n_range: &str, format: Format, jobs: usize) -> Result<bool, String> {
    let (lo, hi) = parse_range(n_range)?;
    let masks: Vec<u8> = match name {
        "3.3" => registry::table_33_masks().to_vec(),
        "4.7" => registry::table_47_masks().to_vec(),
        other => {
            return Err(format!(
                "unknown table {other:?} (expected \"3.3\" or \"4.7\")"
            ))
        }
    };
    let mut rows = Vec::new();
    let mut all_agree = true;
    for n in lo..=hi {
        let profile = enumeration::pi3_profile(n, jobs);
        for &mask in &masks {
            let label = registry::mask_label(mask);
            if name == "3.3" {
                let brute = profile.count(mask);
                let closed = registry::closed_count(n, mask);
                let listed = registry::explicit_avoiders(n, mask);
                let class_ok = listed.as_ref().is_none_or(|set| {
                    let mut brute_set: Vec<SetPartition> =
                        enumeration::avoiders(n, &mask_patterns(mask)).collect();
                    brute_set.sort();
                    set == &brute_set
                });
                let agree = closed.as_ref().is_none_or(|c| c == &brute) && class_ok;
                all_agree &= agree;
                rows.push(vec![
                    n.to_string(),
                    label,
                    brute.to_string(),
                    closed.map_or("-".into(), |c| c.to_string()),
                    listed.map_or("-".into(), |set| {
                        if set.is_empty() {
                            "(empty)".into()
                        } else {
                            set.iter()
                                .map(|p| p.to_string())
                                .collect::<Vec<_>>()
                                .join(" ")
                        }
                    }),
                    if agree {
                        "ok".into()
                    } else {
                        "MISMATCH".into()
                    },
                ]);
            } else {
                let brute = profile.parity(mask);
                let closed = registry::closed_parity(n, mask);
                let agree = closed
                    .as_ref()
                    .is_none_or(|(e, o)| e == &brute.even && o == &brute.odd);
                all_agree &= agree;
                rows.push(vec![
                    n.to_string(),
                    label,
                    brute.even.to_string(),
                    brute.odd.to_string(),
                    closed.as_ref().map_or("-".into(), |(e, _)| e.to_string()),
                    closed.as_ref().map_or("-".into(), |(_, o)| o.to_string()),
                    if agree {
                        "ok".into()
                    } else {
                        "MISMATCH".into()
                    },
                ]);
            }
        }
    }
    if name == "3.3" {
        emit_rows(
            format,
            &["n", "patterns", "count", "closed", "class", "ok"],
            &rows,
        );
    } else {
        emit_rows(
            format,
            &[
                "n",
                "patterns",
                "even",
                "odd",
                "closed_even",
                "closed_odd",
                "ok",
            ],
            &rows,
        );
    }
    Ok(all_agree)
}

fn mask_patterns(mask: u8) -> Vec<GenPattern> {
    (0..5)
        .filter(|i| mask & (1 << i) != 0)
        .map(|i| registry::pi3_patterns()[i].clone())
        .collect()
}

#[derive(Serialize)]
struct VerifyReport {
    suite: String,
    max_n: usize,
    total: usize,
    failed: usize,
    checks: Vec<partition_patterns::verify::CheckResult>,
}

fn cmd_verify(suite: &str, max_n: usize, jobs: usize) -> Result<bool, String> {
    let suite_parsed: Suite = suite.parse()?;
    if max_n < 4 {
        return Err("--max-n must be at least 4".into());
    }
    let checks = run_suite(suite_parsed, max_n, jobs);
    let failed = checks.iter().filter(|c| !c.passed).count();
    let report = VerifyReport {
        suite: suite.to_string(),
        max_n,
        total: checks.len(),
        failed,
        checks,
    };
    println!(
        "{}",
        serde_json::to_string_pretty(&report).expect("serializable")
    );
    Ok(failed == 0)
}

/// Flat-file sequence cache, enabled by setting `PPC_CACHE` to a directory.
/// Each query key owns one file of `n value` (or `n even odd`) lines.
struct Cache {
    path: Option<PathBuf>,
    entries: std::cell::RefCell<BTreeMap<usize, Vec<BigUint>>>,
    dirty: std::cell::Cell<bool>,
}

impl Cache {
    fn open(kind: &str, query: &str) -> Cache {
        let Some(dir) = std::env::var_os("PPC_CACHE") else {
            return Cache {
                path: None,
                entries: Default::default(),
                dirty: Default::default(),
            };
        };
        let key = format!("{kind}:{query}");
        let name: String = key.bytes().map(|b| format!("{b:02x}")).collect();
        let path = PathBuf::from(dir).join(format!("{name}.seq"));
        let mut entries = BTreeMap::new();
        if let Ok(text) = std::fs::read_to_string(&path) {
            for line in text.lines() {
                let mut fields = line.split_whitespace();
                let Some(Ok(n)) = fields.next().map(str::parse::<usize>) else {
                    continue;
                };
                let values: Option<Vec<BigUint>> =
                    fields.map(|f| f.parse::<BigUint>().ok()).collect();
                if let Some(values) = values {
                    if !values.is_empty() {
                        entries.insert(n, values);
                    }
                }
            }
        }
        Cache {
            path: Some(path),
            entries: std::cell::RefCell::new(entries),
            dirty: Default::default(),
        }
    }

    fn get1(&self, n: usize) -> Option<BigUint> {
        self.path.as_ref()?;
        let entries = self.entries.borrow();
        entries
            .get(&n)
            .filter(|v| v.len() == 1)
            .map(|v| v[0].clone())
    }

    fn get2(&self, n: usize) -> Option<(BigUint, BigUint)> {
        self.path.as_ref()?;
        let entries = self.entries.borrow();
        entries
            .get(&n)
            .filter(|v| v.len() == 2)
            .map(|v| (v[0].clone(), v[1].clone()))
    }

    fn put1(&self, n: usize, v: &BigUint) {
        if self.path.is_some() {
            self.entries.borrow_mut().insert(n, vec![v.clone()]);
            self.dirty.set(true);
        }
    }

    fn put2(&self, n: usize, even: &BigUint, odd: &BigUint) {
        if self.path.is_some() {
            self.entries
                .borrow_mut()
                .insert(n, vec![even.clone(), odd.clone()]);
            self.dirty.set(true);
        }
    }

    fn flush(&self) {
        let (Some(path), true) = (self.path.as_ref(), self.dirty.get()) else {
            return;
        };
        if let Some(dir) = path.parent() {
            let _ = std::fs::create_dir_all(dir);
        }
        let mut text = String::new();
        for (n, values) in self.entries.borrow().iter() {
            text.push_str(&n.to_string());
            for v in values {
                text.push(' ');
                text.push_str(&v.to_string());
            }
            text.push('\n');
        }
        let _ = std::fs::write(path, text);
    }
}
