//! Command-line front end: check, construct, bounds, search, conjectures,
//! and tables subcommands with text, JSON, and (tables only) CSV output.
//!
//! Exit codes: 0 success, 1 failed check or refuted conjecture, 2 usage
//! error, 3 budget exceeded. The report goes to stdout; progress and cache
//! diagnostics go to stderr, so scripted callers can parse stdout alone.

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::bounds::{sat_bounds, ssat_bounds, xi_bounds, BoundReport};
use crate::cache::Cache;
use crate::constructions::{
    alt_saturated, double_last_extend, power_block_saturated, ssat_alt, ssat_constant,
    ssat_general, two_letter_saturated, up, ConstructionOutput,
};
use crate::pattern::Pattern;
use crate::predicates::{
    check_saturated, check_semisaturated, check_semisaturated_anchored, check_structure_alt,
    StructuralReport, Verdict, Witness,
};
use crate::search::{
    search, verify_conjecture_sat_alt, verify_conjecture_ssat_alt, verify_tables,
    ConjectureReport, PointStatus, SearchConfig, SearchKind, SearchResult, SearchValue,
};
use crate::tables::{
    conjectured_saturated_length, conjectured_semisaturated_length, verify_saturated_row,
    verify_semisaturated_row, RowVerification, SATURATED_ROWS, SEMISATURATED_ROWS,
};
use crate::text::{format_letters, parse_pattern, parse_sequence};
use crate::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "seqsat",
    version,
    about = "Saturation and semisaturation of forbidden-subsequence sequences: \
             checkers, constructions, bounds, exact search, conjecture sweeps"
)]
pub struct Cli {
    /// Report format on stdout (csv applies to `tables` only).
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Verify a sequence: saturation, semisaturation, or the structural
    /// facts of alternation-saturated hosts.
    Check {
        #[arg(long, value_enum)]
        kind: CheckKind,
        /// Forbidden pattern (kinds sat and ssat).
        #[arg(long)]
        pattern: Option<String>,
        /// Alternation order (kinds ssat-anchored and structure).
        #[arg(long)]
        s: Option<u32>,
        /// Alphabet size the sequence is read over.
        #[arg(long)]
        n: u32,
        /// The sequence, as comma/whitespace-separated letter ids.
        #[arg(long)]
        sequence: String,
    },
    /// Emit one of the closed-form constructions and re-verify its claim.
    Construct {
        #[arg(long, value_enum)]
        construction: ConstructionKind,
        #[arg(long)]
        n: Option<u32>,
        /// Alternation order (alt-sat, ssat-alt).
        #[arg(long)]
        s: Option<u32>,
        /// Distinct letters per block (power-block).
        #[arg(long)]
        k: Option<u32>,
        /// Repetition count (power-block, up).
        #[arg(long)]
        reps: Option<u32>,
        #[arg(long)]
        pattern: Option<String>,
        /// Saturated host to extend (double-last), over the alphabet --n.
        #[arg(long)]
        host: Option<String>,
    },
    /// Shape-driven lower/upper bounds with the list of applied clauses.
    Bounds {
        #[arg(long, value_enum)]
        target: TargetKind,
        #[arg(long)]
        pattern: Option<String>,
        #[arg(long)]
        n: u32,
        /// Alternation order (target xi).
        #[arg(long)]
        s: Option<u32>,
    },
    /// Exact minimum saturated / semisaturated length or maximum avoiding
    /// length, by exhaustive canonical search.
    Search {
        #[arg(long)]
        pattern: String,
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum)]
        kind: ValueKind,
        /// Node budget; exceeding it reports a verified interval (exit 3).
        #[arg(long)]
        budget: Option<u64>,
        /// Keep every witness instead of a capped sample.
        #[arg(long)]
        enumerate: bool,
        /// Worker threads (0 = default pool).
        #[arg(long)]
        jobs: Option<usize>,
        /// JSON-lines result cache; hits are re-verified before use.
        #[arg(long, env = "SEQSAT_CACHE")]
        cache: Option<PathBuf>,
    },
    /// Sweep a conjectured formula against exhaustive values, or re-verify
    /// the bundled reference tables.
    Conjectures {
        #[arg(long, value_enum)]
        which: ConjectureKind,
        /// Alternation order (sat-alt, ssat-alt).
        #[arg(long)]
        s: Option<u32>,
        /// Sweep n = 2..=n-max (sat-alt, ssat-alt).
        #[arg(long)]
        n_max: Option<u32>,
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Print the bundled reference tables with verification columns.
    Tables {
        #[arg(long, value_enum)]
        which: TableKind,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CheckKind {
    Sat,
    Ssat,
    SsatAnchored,
    Structure,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ConstructionKind {
    AltSat,
    PowerBlock,
    TwoLetter,
    DoubleLast,
    Up,
    SsatAlt,
    SsatConst,
    SsatGeneral,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TargetKind {
    Sat,
    Ssat,
    Xi,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ValueKind {
    Sat,
    Ssat,
    Ex,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ConjectureKind {
    SatAlt,
    SsatAlt,
    Tables,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TableKind {
    Sat,
    Ssat,
}

/// A finished report: the exact stdout payload plus the process exit code.
struct Report {
    body: String,
    code: i32,
}

impl Report {
    fn new(body: String, code: i32) -> Self {
        Report { body, code }
    }
}

/// Runs a parsed invocation; prints the report and returns the exit code.
pub fn run(cli: Cli) -> i32 {
    match dispatch(cli) {
        Ok(report) => {
            use std::io::Write;
            let mut out = std::io::stdout().lock();
            match writeln!(out, "{}", report.body.trim_end()) {
                Ok(()) => report.code,
                // A closed pipe (e.g. piping into `head`) is not a failure
                // of the computation itself.
                Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => report.code,
                Err(e) => {
                    eprintln!("error: cannot write report: {e}");
                    EXIT_USAGE
                }
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_USAGE
        }
    }
}

fn dispatch(cli: Cli) -> Result<Report, Error> {
    let format = cli.format;
    if format == Format::Csv && !matches!(cli.command, Command::Tables { .. }) {
        return Err(Error::unsupported("csv output is only available for `tables`"));
    }
    match cli.command {
        Command::Check { kind, pattern, s, n, sequence } => {
            run_check(format, kind, pattern, s, n, &sequence)
        }
        Command::Construct { construction, n, s, k, reps, pattern, host } => {
            run_construct(format, construction, n, s, k, reps, pattern, host)
        }
        Command::Bounds { target, pattern, n, s } => run_bounds(format, target, pattern, n, s),
        Command::Search { pattern, n, kind, budget, enumerate, jobs, cache } => {
            run_search(format, &pattern, n, kind, budget, enumerate, jobs, cache)
        }
        Command::Conjectures { which, s, n_max, budget, jobs } => {
            run_conjectures(format, which, s, n_max, budget, jobs)
        }
        Command::Tables { which } => Ok(run_tables(format, which)),
    }
}

fn require<T>(value: Option<T>, flag: &str, context: &str) -> Result<T, Error> {
    value.ok_or_else(|| Error::unsupported(format!("--{flag} is required for {context}")))
}

/// String form of a unit enum's serialized tag (the spelling JSON uses).
fn tag<T: Serialize>(value: &T) -> String {
    match serde_json::to_value(value) {
        Ok(serde_json::Value::String(s)) => s,
        Ok(other) => other.to_string(),
        Err(_) => String::from("?"),
    }
}

fn witness_line(witness: &Witness) -> String {
    match witness {
        Witness::Embedding { embedding } => format!(
            "embedding at positions {:?} via letters {}",
            embedding.positions,
            format_letters(&embedding.letter_map)
        ),
        Witness::Insertion { letter, position } => {
            format!("admissible insertion: letter {letter} at position {position}")
        }
        Witness::Sparsity { position } => format!("sparsity violation at position {position}"),
    }
}

fn verdict_report(format: Format, verdict: &Verdict) -> Report {
    let code = if verdict.is_success() { EXIT_OK } else { EXIT_FAILED };
    let body = match format {
        Format::Json => serde_json::to_string(verdict).expect("verdicts serialize"),
        _ => {
            let mut out = tag(&verdict.status);
            if let Some(w) = &verdict.witness {
                out.push('\n');
                out.push_str(&witness_line(w));
            }
            out
        }
    };
    Report::new(body, code)
}

fn structure_report(format: Format, report: &StructuralReport) -> Report {
    let code = if report.all_hold() { EXIT_OK } else { EXIT_FAILED };
    let body = match format {
        Format::Json => serde_json::to_string(report).expect("reports serialize"),
        _ => {
            let mut lines = Vec::new();
            if !report.valid_input {
                lines.push(format!(
                    "invalid input: {}",
                    report.invalid_reason.as_deref().unwrap_or("not a saturated host")
                ));
            }
            for c in &report.checks {
                let state = if !c.applicable {
                    "not applicable"
                } else if c.holds {
                    "holds"
                } else {
                    "FAILS"
                };
                let mut line = format!("{}: {state}", c.id);
                if let Some(ce) = &c.counterexample {
                    line.push_str(&format!(" ({ce})"));
                }
                lines.push(line);
            }
            lines.push(
                if report.all_hold() { "all checks hold" } else { "CHECKS FAILED" }.to_string(),
            );
            lines.join("\n")
        }
    };
    Report::new(body, code)
}

fn run_check(
    format: Format,
    kind: CheckKind,
    pattern: Option<String>,
    s: Option<u32>,
    n: u32,
    sequence: &str,
) -> Result<Report, Error> {
    let host = parse_sequence(sequence, n)?;
    match kind {
        CheckKind::Sat | CheckKind::Ssat => {
            let text = require(pattern, "pattern", "kinds sat and ssat")?;
            let u = parse_pattern(&text)?;
            let verdict = match kind {
                CheckKind::Sat => check_saturated(&host, &u),
                _ => check_semisaturated(&host, &u),
            };
            Ok(verdict_report(format, &verdict))
        }
        CheckKind::SsatAnchored => {
            let order = require(s, "s", "kind ssat-anchored")?;
            Ok(verdict_report(format, &check_semisaturated_anchored(&host, order)))
        }
        CheckKind::Structure => {
            let order = require(s, "s", "kind structure")?;
            Ok(structure_report(format, &check_structure_alt(&host, order)))
        }
    }
}

/// What the emitted sequence is claimed to be, re-checked before printing.
enum Claim {
    Saturated(Pattern),
    Semisaturated(Pattern),
    /// Length identity only (the `up` building block claims nothing else).
    None,
}

#[allow(clippy::too_many_arguments)]
fn run_construct(
    format: Format,
    construction: ConstructionKind,
    n: Option<u32>,
    s: Option<u32>,
    k: Option<u32>,
    reps: Option<u32>,
    pattern: Option<String>,
    host: Option<String>,
) -> Result<Report, Error> {
    let parse = |text: &Option<String>| -> Result<Pattern, Error> {
        parse_pattern(require(text.as_deref(), "pattern", "this construction")?)
    };
    let (out, claim): (ConstructionOutput, Claim) = match construction {
        ConstructionKind::AltSat => {
            let (n, s) = (require(n, "n", "alt-sat")?, require(s, "s", "alt-sat")?);
            (alt_saturated(n, s)?, Claim::Saturated(Pattern::alternation(s)))
        }
        ConstructionKind::PowerBlock => {
            let k = require(k, "k", "power-block")?;
            let t = require(reps, "reps", "power-block")?;
            let n = require(n, "n", "power-block")?;
            let block: Vec<u32> = (0..t).flat_map(|_| 0..k).collect();
            (power_block_saturated(k, t, n)?, Claim::Saturated(Pattern::new(&block)?))
        }
        ConstructionKind::TwoLetter => {
            let u = parse(&pattern)?;
            let n = require(n, "n", "two-letter")?;
            (two_letter_saturated(&u, n)?, Claim::Saturated(u))
        }
        ConstructionKind::DoubleLast => {
            let u = parse(&pattern)?;
            let n = require(n, "n", "double-last")?;
            let host = parse_sequence(&require(host, "host", "double-last")?, n)?;
            let doubled = u.with_last_doubled();
            (double_last_extend(&u, &host)?, Claim::Saturated(doubled))
        }
        ConstructionKind::Up => {
            let n = require(n, "n", "up")?;
            let t = require(reps, "reps", "up")?;
            let sequence = up(n, t);
            let out = ConstructionOutput {
                claimed_length: (n as usize) * (t as usize),
                sequence,
                construction_id: "up",
                parameters: [("n".to_string(), json!(n)), ("reps".to_string(), json!(t))]
                    .into_iter()
                    .collect(),
            };
            (out, Claim::None)
        }
        ConstructionKind::SsatAlt => {
            let (n, s) = (require(n, "n", "ssat-alt")?, require(s, "s", "ssat-alt")?);
            (ssat_alt(n, s)?, Claim::Semisaturated(Pattern::alternation(s)))
        }
        ConstructionKind::SsatConst => {
            let u = parse(&pattern)?;
            let out = ssat_constant(&u)?;
            (out, Claim::Semisaturated(u))
        }
        ConstructionKind::SsatGeneral => {
            let u = parse(&pattern)?;
            let n = require(n, "n", "ssat-general")?;
            (ssat_general(&u, n)?, Claim::Semisaturated(u))
        }
    };

    let seq = &out.sequence;
    let verified = match &claim {
        Claim::Saturated(u) => check_saturated(seq, u).is_success(),
        Claim::Semisaturated(u) => check_semisaturated(seq, u).is_success(),
        Claim::None => true,
    } && seq.len() == out.claimed_length;
    let sequence_text = format_letters(seq.letters());
    let meta = json!({
        "construction": out.construction_id,
        "parameters": out.parameters,
        "n": seq.alphabet_size(),
        "length": seq.len(),
        "claimed_length": out.claimed_length,
        "verified": verified,
    });
    let code = if verified { EXIT_OK } else { EXIT_FAILED };
    let body = match format {
        Format::Json => {
            let mut obj = meta;
            obj["sequence"] = json!(sequence_text);
            obj.to_string()
        }
        _ => format!("{sequence_text}\n{meta}"),
    };
    Ok(Report::new(body, code))
}

fn bounds_text(report: &BoundReport) -> String {
    let fmt = |v: Option<u64>| v.map_or("none".to_string(), |x| x.to_string());
    let mut lines = vec![format!(
        "{} on {} letters: lower {}, upper {}{}, classification {}",
        tag(&report.target).to_lowercase(),
        report.n,
        fmt(report.lower),
        fmt(report.upper),
        if report.exact { " (exact)" } else { "" },
        tag(&report.classification),
    )];
    for c in &report.clauses {
        let value = c.value.map_or(String::new(), |v| format!(" {v}"));
        let applicable = if c.applicable { "" } else { " [not applicable]" };
        lines.push(format!("  {} ({}){value}{applicable}: {}", c.id, tag(&c.kind), c.statement));
    }
    lines.join("\n")
}

fn run_bounds(
    format: Format,
    target: TargetKind,
    pattern: Option<String>,
    n: u32,
    s: Option<u32>,
) -> Result<Report, Error> {
    let report = match target {
        TargetKind::Xi => xi_bounds(n, require(s, "s", "target xi")?)?,
        TargetKind::Sat | TargetKind::Ssat => {
            let u = parse_pattern(&require(pattern, "pattern", "targets sat and ssat")?)?;
            match target {
                TargetKind::Sat => sat_bounds(&u, n)?,
                _ => ssat_bounds(&u, n)?,
            }
        }
    };
    let body = match format {
        Format::Json => serde_json::to_string(&report).expect("bound reports serialize"),
        _ => bounds_text(&report),
    };
    Ok(Report::new(body, EXIT_OK))
}

fn search_text(result: &SearchResult) -> String {
    let mut lines = vec![format!(
        "{} for pattern {} on {} letters",
        tag(&result.kind),
        result.pattern,
        result.n
    )];
    match result.value {
        SearchValue::Exact { value } => {
            lines.push(format!("value {value} (exact), {} witnesses", result.witness_count));
        }
        SearchValue::BudgetExceeded { verified_lower, upper } => {
            let upper = upper.map_or("unknown".to_string(), |u| u.to_string());
            lines.push(format!(
                "budget exceeded: value at least {verified_lower}, upper bound {upper}"
            ));
        }
    }
    for w in &result.witnesses {
        lines.push(format_letters(w));
    }
    lines.push(format!(
        "visited {} nodes in {} ms (lengths {}..={})",
        result.stats.nodes, result.stats.elapsed_ms, result.stats.first_level,
        result.stats.last_level
    ));
    lines.join("\n")
}

#[allow(clippy::too_many_arguments)]
fn run_search(
    format: Format,
    pattern: &str,
    n: u32,
    kind: ValueKind,
    budget: Option<u64>,
    enumerate: bool,
    jobs: Option<usize>,
    cache_path: Option<PathBuf>,
) -> Result<Report, Error> {
    let u = parse_pattern(pattern)?;
    let kind = match kind {
        ValueKind::Sat => SearchKind::MinSat,
        ValueKind::Ssat => SearchKind::MinSsat,
        ValueKind::Ex => SearchKind::MaxFree,
    };
    let mut config = SearchConfig::default();
    if let Some(b) = budget {
        config.max_nodes = b;
    }
    if enumerate {
        config.witness_cap = usize::MAX;
    }
    if let Some(j) = jobs {
        config.jobs = j;
    }

    let mut cache = match &cache_path {
        Some(path) => match Cache::load(path) {
            Ok(cache) => {
                if cache.rejected() > 0 {
                    eprintln!(
                        "cache: dropped {} stale or malformed line(s) from {}",
                        cache.rejected(),
                        path.display()
                    );
                }
                Some(cache)
            }
            Err(e) => {
                eprintln!("cache: ignoring unreadable {}: {e}", path.display());
                None
            }
        },
        None => None,
    };

    let cached = cache.as_ref().and_then(|c| c.get(&u, n, kind)).filter(|hit| {
        // A capped witness sample cannot serve an enumeration request.
        !enumerate || hit.witnesses.len() as u64 == hit.witness_count
    });
    let result = match cached {
        Some(hit) => {
            eprintln!("cache: hit for ({}, {n}, {})", hit.pattern, tag(&kind));
            hit.clone()
        }
        None => {
            let result = search(kind, &u, n, &config)?;
            if let (Some(cache), Some(path)) = (cache.as_mut(), &cache_path) {
                if cache.insert(result.clone()) {
                    match cache.save(path) {
                        Ok(()) => eprintln!("cache: stored result in {}", path.display()),
                        Err(e) => eprintln!("cache: could not write {}: {e}", path.display()),
                    }
                }
            }
            result
        }
    };

    let code = match result.value {
        SearchValue::Exact { .. } => EXIT_OK,
        SearchValue::BudgetExceeded { .. } => EXIT_BUDGET,
    };
    let body = match format {
        Format::Json => serde_json::to_string(&result).expect("search results serialize"),
        _ => search_text(&result),
    };
    Ok(Report::new(body, code))
}

fn conjecture_text(report: &ConjectureReport) -> String {
    let mut lines = vec![report.conjecture.clone()];
    for p in &report.points {
        let mut line = format!("s={} n={} {}: {}", p.s, p.n, tag(&p.status), p.detail);
        if let Some(ce) = &p.counterexample {
            line.push_str(&format!(" [counterexample {ce}]"));
        }
        lines.push(line);
    }
    lines.join("\n")
}

fn run_conjectures(
    format: Format,
    which: ConjectureKind,
    s: Option<u32>,
    n_max: Option<u32>,
    budget: Option<u64>,
    jobs: Option<usize>,
) -> Result<Report, Error> {
    let mut config = SearchConfig::default();
    if let Some(b) = budget {
        config.max_nodes = b;
    }
    if let Some(j) = jobs {
        config.jobs = j;
    }
    let report = match which {
        ConjectureKind::Tables => verify_tables(),
        ConjectureKind::SatAlt | ConjectureKind::SsatAlt => {
            let s = require(s, "s", "sat-alt and ssat-alt")?;
            let n_max = require(n_max, "n-max", "sat-alt and ssat-alt")?;
            if n_max < 2 {
                return Err(Error::unsupported("--n-max must be at least 2"));
            }
            match which {
                ConjectureKind::SatAlt => verify_conjecture_sat_alt(s, 2..=n_max, &config)?,
                _ => verify_conjecture_ssat_alt(s, 2..=n_max, &config)?,
            }
        }
    };
    let code = if report.refuted() {
        EXIT_FAILED
    } else if report.points.iter().any(|p| p.status == PointStatus::Skipped) {
        EXIT_BUDGET
    } else {
        EXIT_OK
    };
    let body = match format {
        Format::Json => serde_json::to_string(&report).expect("conjecture reports serialize"),
        _ => conjecture_text(&report),
    };
    Ok(Report::new(body, code))
}

fn run_tables(format: Format, which: TableKind) -> Report {
    struct Row {
        s: u32,
        n: u32,
        length: usize,
        conjectured: usize,
        verification: RowVerification,
        sequence: String,
    }
    let rows: Vec<Row> = match which {
        TableKind::Sat => SATURATED_ROWS
            .iter()
            .map(|row| Row {
                s: row.order,
                n: row.alphabet_size,
                length: row.letters.len(),
                conjectured: conjectured_saturated_length(row.order, row.alphabet_size),
                verification: verify_saturated_row(row),
                sequence: format_letters(row.letters),
            })
            .collect(),
        TableKind::Ssat => SEMISATURATED_ROWS
            .iter()
            .map(|row| Row {
                s: row.order,
                n: row.alphabet_size,
                length: row.letters.len(),
                conjectured: conjectured_semisaturated_length(row.order, row.alphabet_size),
                verification: verify_semisaturated_row(row),
                sequence: format_letters(row.letters),
            })
            .collect(),
    };
    let ok = rows.iter().all(|r| r.verification != RowVerification::Failed);
    let body = match format {
        Format::Json => {
            let items: Vec<_> = rows
                .iter()
                .map(|r| {
                    json!({
                        "s": r.s,
                        "n": r.n,
                        "length": r.length,
                        "conjectured_length": r.conjectured,
                        "verification": tag(&r.verification),
                        "sequence": r.sequence,
                    })
                })
                .collect();
            serde_json::to_string(&items).expect("rows serialize")
        }
        Format::Csv => {
            let mut out = String::from("s,n,length,conjectured_length,verification,sequence\n");
            for r in &rows {
                out.push_str(&format!(
                    "{},{},{},{},{},\"{}\"\n",
                    r.s,
                    r.n,
                    r.length,
                    r.conjectured,
                    tag(&r.verification),
                    r.sequence
                ));
            }
            out
        }
        Format::Text => {
            let mut lines = vec![format!(
                "{:>2} {:>2} {:>6} {:>11} {:>12}  sequence",
                "s", "n", "length", "conjectured", "verification"
            )];
            for r in &rows {
                lines.push(format!(
                    "{:>2} {:>2} {:>6} {:>11} {:>12}  {}",
                    r.s,
                    r.n,
                    r.length,
                    r.conjectured,
                    tag(&r.verification),
                    r.sequence
                ));
            }
            lines.join("\n")
        }
    };
    Report::new(body, if ok { EXIT_OK } else { EXIT_FAILED })
}
