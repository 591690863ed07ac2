//! Command-line surface: classify sequences, enumerate and search per-length
//! tables, realize sequences as tournaments, certify tournaments from
//! edge-list files, and run the acceptance checks.
//!
//! Exit codes: 0 success (including an "unknown" classification), 2 input
//! error, 3 inconclusive certification. `verify` exits 1 when a criterion
//! fails.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use tournalink::cache::{CacheMiss, TableCache};
use tournalink::cg::{certify_tournament8, CertificationOutcome};
use tournalink::digraph::{Digraph, Tournament};
use tournalink::output::{headline, trace_lines, OutputRecord, CSV_HEADER};
use tournalink::rules::{Classifier, Status};
use tournalink::scoreseq::{Fragment, ScoreSequence, DEFAULT_MAX_N};
use tournalink::verify;

#[derive(Parser)]
#[command(
    name = "tournalink",
    version,
    about = "Classify tournament score sequences by directed linking behavior"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum StatusFilter {
    Linkless,
    #[value(name = "il-representative", alias = "il")]
    IlRepresentative,
    Unknown,
}

impl StatusFilter {
    fn status(self) -> Status {
        match self {
            StatusFilter::Linkless => Status::Linkless,
            StatusFilter::IlRepresentative => Status::HasIlRep,
            StatusFilter::Unknown => Status::Unknown,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Classify a single score sequence.
    Classify {
        /// Comma-separated values, optional parentheses, e.g. "(1, 1, 1, 3)".
        sequence: String,
        /// Sort unsorted input instead of rejecting it.
        #[arg(long)]
        sort: bool,
        /// Emit a JSON record instead of text.
        #[arg(long)]
        json: bool,
        /// Cap on classified sequence length.
        #[arg(long, default_value_t = DEFAULT_MAX_N)]
        max_n: usize,
    },
    /// List every score sequence of length n with its status.
    Enumerate {
        n: usize,
        /// Keep only sequences with this status.
        #[arg(long, value_enum)]
        status: Option<StatusFilter>,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
        /// Skip the on-disk table cache.
        #[arg(long)]
        no_cache: bool,
        #[arg(long, default_value_t = DEFAULT_MAX_N)]
        max_n: usize,
    },
    /// List the sequences of length n containing every given fragment.
    Search {
        n: usize,
        /// A fragment such as "1,2,2"; repeatable, all must be contained.
        #[arg(long = "contains")]
        contains: Vec<String>,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
        #[arg(long)]
        no_cache: bool,
        #[arg(long, default_value_t = DEFAULT_MAX_N)]
        max_n: usize,
    },
    /// Print an edge list of a tournament realizing the sequence.
    Realize {
        sequence: String,
        #[arg(long)]
        sort: bool,
        /// Vary which realization the backtracking finds first.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Certify an 8-vertex tournament (edge-list file) as not intrinsically
    /// linked; exits 3 when inconclusive.
    Certify { path: PathBuf },
    /// Classify the score sequence of a tournament given as an edge list.
    ClassifyTournament {
        path: PathBuf,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = DEFAULT_MAX_N)]
        max_n: usize,
    },
    /// Run the acceptance checks and print one line per criterion.
    Verify,
}

fn main() -> ExitCode {
    // Die quietly on a closed pipe (`tournalink enumerate 11 | head`).
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match cli.command {
        Command::Classify {
            sequence,
            sort,
            json,
            max_n,
        } => cmd_classify(&sequence, sort, json, max_n),
        Command::Enumerate {
            n,
            status,
            format,
            no_cache,
            max_n,
        } => cmd_listing(n, status, &[], format, no_cache, max_n),
        Command::Search {
            n,
            contains,
            format,
            no_cache,
            max_n,
        } => match contains
            .iter()
            .map(|text| Fragment::parse(text))
            .collect::<Result<Vec<Fragment>, _>>()
        {
            Ok(frags) => cmd_listing(n, None, &frags, format, no_cache, max_n),
            Err(e) => input_error(format!("bad fragment: {e}")),
        },
        Command::Realize {
            sequence,
            sort,
            seed,
        } => cmd_realize(&sequence, sort, seed),
        Command::Certify { path } => cmd_certify(&path),
        Command::ClassifyTournament { path, json, max_n } => {
            cmd_classify_tournament(&path, json, max_n)
        }
        Command::Verify => cmd_verify(),
    }
}

fn input_error(message: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {message}");
    ExitCode::from(2)
}

fn cmd_classify(sequence: &str, sort: bool, json: bool, max_n: usize) -> ExitCode {
    let s = match ScoreSequence::parse(sequence, sort) {
        Ok(s) => s,
        Err(e) => return input_error(e),
    };
    let mut classifier = Classifier::new(max_n);
    let verdict = match classifier.classify(&s) {
        Ok(v) => v,
        Err(tournalink::rules::ClassifyError::LengthCap { n, max }) => {
            return input_error(format!("sequence length {n} exceeds the cap {max}"));
        }
        Err(e) => panic!("classification aborted: {e}"),
    };
    if json {
        let record = OutputRecord::new(&s, &verdict);
        println!(
            "{}",
            serde_json::to_string_pretty(&record).expect("serializable")
        );
    } else {
        println!("{}", headline(&verdict));
        for line in trace_lines(&verdict) {
            println!("  {line}");
        }
    }
    ExitCode::SUCCESS
}

/// Shared body of `enumerate` and `search`: fetch or compute the table for
/// length n, filter, and print in the requested format with a summary line.
fn cmd_listing(
    n: usize,
    status_filter: Option<StatusFilter>,
    fragments: &[Fragment],
    format: Format,
    no_cache: bool,
    max_n: usize,
) -> ExitCode {
    if n < 1 || n > max_n {
        return input_error(format!("n = {n} out of range 1..={max_n}"));
    }
    let records = match table_records(n, max_n, no_cache) {
        Ok(records) => records,
        Err(code) => return code,
    };
    let summary = summary_line(n, &records);
    let filtered: Vec<&OutputRecord> = records
        .iter()
        .filter(|r| match status_filter {
            Some(f) => r.status() == Some(f.status()),
            None => true,
        })
        .filter(|r| {
            if fragments.is_empty() {
                return true;
            }
            ScoreSequence::new(r.sequence.clone())
                .map(|s| s.contains_fragments(fragments))
                .unwrap_or(false)
        })
        .collect();

    match format {
        Format::Table => {
            let width = filtered
                .iter()
                .map(|r| r.sequence_text().len())
                .max()
                .unwrap_or(8)
                .max("sequence".len());
            println!("{:width$}  {:17}  rule", "sequence", "status");
            for r in &filtered {
                println!(
                    "{:width$}  {:17}  {}",
                    r.sequence_text(),
                    r.status,
                    r.headline_rule()
                );
            }
            println!("{summary}");
        }
        Format::Csv => {
            println!("{CSV_HEADER}");
            for r in &filtered {
                println!("{}", r.csv_row());
            }
            println!("# {summary}");
        }
        Format::Json => {
            let doc = serde_json::json!({
                "n": n,
                "records": filtered,
                "summary": {
                    "total": records.len(),
                    "linkless": count_status(&records, Status::Linkless),
                    "il": count_status(&records, Status::HasIlRep),
                    "unknown": count_status(&records, Status::Unknown),
                    "listed": filtered.len(),
                },
            });
            println!(
                "{}",
                serde_json::to_string_pretty(&doc).expect("serializable")
            );
        }
    }
    ExitCode::SUCCESS
}

fn count_status(records: &[OutputRecord], status: Status) -> usize {
    records
        .iter()
        .filter(|r| r.status() == Some(status))
        .count()
}

fn summary_line(n: usize, records: &[OutputRecord]) -> String {
    format!(
        "n={n} total={} linkless={} il={} unknown={}",
        records.len(),
        count_status(records, Status::Linkless),
        count_status(records, Status::HasIlRep),
        count_status(records, Status::Unknown)
    )
}

fn table_records(n: usize, max_n: usize, no_cache: bool) -> Result<Vec<OutputRecord>, ExitCode> {
    let cache = if no_cache {
        None
    } else {
        Some(TableCache::resolve())
    };
    if let Some(cache) = &cache {
        match cache.load(n) {
            Ok(records) => return Ok(records),
            Err(CacheMiss::Absent) => {}
            Err(miss) => eprintln!("cache: regenerating table for n={n} ({})", miss.describe()),
        }
    }
    let mut classifier = Classifier::new(max_n);
    let table = match classifier.classify_all(n) {
        Ok(table) => table,
        Err(tournalink::rules::ClassifyError::LengthCap { n, max })
        | Err(tournalink::rules::ClassifyError::Enumerate(
            tournalink::scoreseq::EnumerateError::OutOfRange { n, max },
        )) => {
            return Err(input_error(format!("n = {n} out of range 1..={max}")));
        }
        Err(e) => panic!("classification aborted: {e}"),
    };
    let records: Vec<OutputRecord> = table
        .entries
        .iter()
        .map(|(s, v)| OutputRecord::new(s, v))
        .collect();
    if let Some(cache) = &cache {
        if let Err(e) = cache.store(n, &records) {
            eprintln!("cache: could not store table for n={n}: {e}");
        }
    }
    Ok(records)
}

fn cmd_realize(sequence: &str, sort: bool, seed: Option<u64>) -> ExitCode {
    let s = match ScoreSequence::parse(sequence, sort) {
        Ok(s) => s,
        Err(e) => return input_error(e),
    };
    let t = match seed {
        Some(seed) => Tournament::realize_seeded(&s, seed),
        None => Tournament::realize(&s),
    };
    print!("# tournament realizing {s}\n{}", t.digraph().to_edge_list());
    ExitCode::SUCCESS
}

fn read_tournament(path: &PathBuf) -> Result<Tournament, ExitCode> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| input_error(format!("{}: {e}", path.display())))?;
    let g = Digraph::parse_edge_list(&text).map_err(input_error)?;
    Tournament::from_digraph(g).map_err(input_error)
}

fn cmd_certify(path: &PathBuf) -> ExitCode {
    let t = match read_tournament(path) {
        Ok(t) => t,
        Err(code) => return code,
    };
    if t.n() != 8 {
        return input_error(format!("certification needs 8 vertices, got {}", t.n()));
    }
    match certify_tournament8(&t) {
        Some(report) => {
            let mut out = String::new();
            for (i, step) in report.steps.iter().enumerate() {
                let _ = writeln!(
                    out,
                    "step {}: contract arc {} -> {} (merged vertex {})",
                    i + 1,
                    step.arc.0,
                    step.arc.1,
                    step.merged
                );
            }
            match &report.outcome {
                CertificationOutcome::SevenVertex(cert) => {
                    let _ = writeln!(
                        out,
                        "certified: 7-vertex placement with labels {}",
                        cert.labeling
                    );
                }
                CertificationOutcome::SixVertex(evidence) => {
                    let _ = writeln!(out, "certified: 6-vertex reduction, {evidence}");
                }
            }
            print!("{out}");
            ExitCode::SUCCESS
        }
        None => {
            println!("inconclusive");
            ExitCode::from(3)
        }
    }
}

fn cmd_classify_tournament(path: &PathBuf, json: bool, max_n: usize) -> ExitCode {
    let t = match read_tournament(path) {
        Ok(t) => t,
        Err(code) => return code,
    };
    let s = t.score_sequence();
    let mut classifier = Classifier::new(max_n);
    let verdict = match classifier.classify(&s) {
        Ok(v) => v,
        Err(tournalink::rules::ClassifyError::LengthCap { n, max }) => {
            return input_error(format!("tournament has {n} vertices, cap is {max}"));
        }
        Err(e) => panic!("classification aborted: {e}"),
    };
    if json {
        let record = OutputRecord::new(&s, &verdict);
        println!(
            "{}",
            serde_json::to_string_pretty(&record).expect("serializable")
        );
    } else {
        println!("score sequence {s}");
        println!("{}", headline(&verdict));
        for line in trace_lines(&verdict) {
            println!("  {line}");
        }
    }
    ExitCode::SUCCESS
}

fn cmd_verify() -> ExitCode {
    let checks = tournalink::constructions::oracle_suite();
    for check in &checks {
        println!("{check}");
    }
    let results = verify::run_all();
    for r in &results {
        println!("{}", r.line());
    }
    let failed =
        results.iter().filter(|r| !r.passed).count() + checks.iter().filter(|c| !c.passed).count();
    if failed == 0 {
        println!("all {} criteria passed", results.len());
        ExitCode::SUCCESS
    } else {
        println!("{failed} checks failed");
        ExitCode::from(1)
    }
}
