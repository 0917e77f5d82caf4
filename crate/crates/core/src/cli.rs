//! The `treecount` command line.
//!
//! Exit codes: 0 success, 1 verification failure or brute/closed mismatch,
//! 2 usage or parse error, 3 budget exceeded.

use std::ffi::OsString;
use std::fmt;
use std::io::Write;
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::counting::{self, check_budget, BruteOptions, CountError, DEFAULT_BUDGET};
use crate::extremal::{
    self, decimal, CensusCache, CensusOptions, CensusRecord, ExtremalError, ReportStatus, TheoremId, VerificationReport,
};
use crate::schemes::Scheme;
use crate::treelib::{self, canonical_code, degree_profile, CanonicalCode, Tree, TreeError};
use crate::CountValue;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

/// Environment variable naming the census cache directory.
pub const CACHE_DIR_ENV: &str = "TREECOUNT_CACHE_DIR";

/// `q^n` up to which `--method auto` double-checks a closed form by search.
pub const AUTO_CHECK_BUDGET: u64 = 1 << 24;

/// Inclusive integer range written `A` or `A..B`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IntRange {
    pub start: u32,
    pub end: u32,
}

impl IntRange {
    pub fn values(self) -> RangeInclusive<u32> {
        self.start..=self.end
    }
}

impl FromStr for IntRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let parse = |p: &str| {
            p.trim()
                .parse::<u32>()
                .map_err(|_| format!("`{p}` is not a nonnegative integer"))
        };
        let (start, end) = match s.split_once("..") {
            Some((a, b)) => (parse(a)?, parse(b.trim_start_matches('='))?),
            None => {
                let v = parse(s)?;
                (v, v)
            }
        };
        if start > end {
            return Err(format!("empty range `{s}`"));
        }
        Ok(IntRange { start, end })
    }
}

impl fmt::Display for IntRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.start == self.end {
            write!(f, "{}", self.start)
        } else {
            write!(f, "{}..{}", self.start, self.end)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Table,
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    /// Closed form when one applies, spot-checked by search at small size.
    Auto,
    Brute,
    Closed,
}

/// Theorem selector for `verify`: one id or `all`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremSelection(pub Vec<TheoremId>);

impl FromStr for TheoremSelection {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        if s.eq_ignore_ascii_case("all") {
            return Ok(TheoremSelection(TheoremId::ALL.to_vec()));
        }
        s.split(',')
            .map(|id| id.parse::<TheoremId>().map_err(|e| e.to_string()))
            .collect::<Result<Vec<_>, _>>()
            .map(TheoremSelection)
    }
}

#[derive(Debug, Parser)]
#[command(name = "treecount", version, about = "Exact generalized coloring counts on trees")]
pub struct CommandRequest {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Table)]
    pub format: OutputFormat,

    /// Worker threads for census and search (default: all cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,

    /// Directory for cached census results.
    #[arg(long, global = true, env = CACHE_DIR_ENV)]
    pub cache_dir: Option<PathBuf>,

    /// Largest q^n a brute-force search may attempt.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    pub budget: u64,

    #[command(subcommand)]
    pub command: Subcommands,
}

#[derive(Debug, Subcommand)]
pub enum Subcommands {
    /// Count the valid colorings of one tree.
    Count {
        /// path:N, star:N, dstar:S,T, edges:N;a-b,..., or pruefer:a,b,...
        #[arg(long)]
        tree: String,
        #[arg(long)]
        scheme: Scheme,
        #[arg(short)]
        q: u32,
        #[arg(long, value_enum, default_value_t = Method::Auto)]
        method: Method,
    },
    /// Count every free tree on n vertices.
    Census {
        #[arg(short)]
        n: IntRange,
        #[arg(short)]
        q: IntRange,
        #[arg(long)]
        scheme: Scheme,
    },
    /// Check the extremal statements against a census.
    Verify {
        /// CF, ODD, SR, NM, SCF2, STARCOL, XHOM, a comma list, or `all`.
        #[arg(long)]
        theorem: TheoremSelection,
        #[arg(short)]
        n: IntRange,
        #[arg(short)]
        q: IntRange,
    },
    /// List the maximizing trees with the full ranked census.
    Explore {
        #[arg(short)]
        n: u32,
        #[arg(short)]
        q: u32,
        #[arg(long)]
        scheme: Scheme,
    },
    /// List free trees with canonical codes and degree profiles.
    Trees {
        #[arg(short)]
        n: IntRange,
    },
}

/// Failure of a single run, classified by exit code.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Budget(String),
    Failure(String),
    Io(std::io::Error),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Budget(m) | CliError::Failure(m) => f.write_str(m),
            CliError::Io(e) => write!(f, "output error: {e}"),
        }
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Budget(_) => EXIT_BUDGET,
            CliError::Failure(_) | CliError::Io(_) => EXIT_FAILURE,
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<TreeError> for CliError {
    fn from(e: TreeError) -> Self {
        match e {
            TreeError::OverBudget { .. } => CliError::Budget(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<CountError> for CliError {
    fn from(e: CountError) -> Self {
        match e {
            CountError::BudgetExceeded { .. } | CountError::Overflow => CliError::Budget(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<ExtremalError> for CliError {
    fn from(e: ExtremalError) -> Self {
        match e {
            ExtremalError::Tree(e) => e.into(),
            ExtremalError::Count(e) => e.into(),
            ExtremalError::Io { .. } => CliError::Failure(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Failure(e.to_string())
    }
}

/// One census line as emitted by `census --format csv|json`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusRow {
    pub canonical_code: CanonicalCode,
    pub n: usize,
    pub q: u32,
    pub scheme: Scheme,
    #[serde(with = "decimal")]
    pub count: CountValue,
    pub is_min: bool,
    pub is_max: bool,
}

impl CensusRow {
    pub fn record(&self) -> CensusRecord {
        CensusRecord {
            canonical_code: self.canonical_code.clone(),
            n: self.n,
            q: self.q,
            scheme: self.scheme,
            count: self.count,
        }
    }
}

fn rows_for(records: &[CensusRecord]) -> Result<Vec<CensusRow>, CliError> {
    let summary = extremal::extremal_report(records)?;
    Ok(records
        .iter()
        .map(|r| CensusRow {
            canonical_code: r.canonical_code.clone(),
            n: r.n,
            q: r.q,
            scheme: r.scheme,
            count: r.count,
            is_min: r.count == summary.min_value,
            is_max: r.count == summary.max_value,
        })
        .collect())
}

#[derive(Debug, Serialize)]
struct CountOutput {
    tree: String,
    canonical_code: CanonicalCode,
    n: usize,
    q: u32,
    scheme: Scheme,
    method: &'static str,
    #[serde(with = "decimal")]
    count: CountValue,
}

#[derive(Debug, Serialize)]
struct TreeRow {
    canonical_code: CanonicalCode,
    n: usize,
    edges: String,
    degrees: String,
    leaf_count: usize,
    even_degree_count: usize,
}

#[derive(Debug, Serialize)]
struct ClaimRow<'a> {
    theorem: TheoremId,
    n: usize,
    q: u32,
    claim: &'a str,
    status: &'a str,
}

#[derive(Debug, Serialize)]
struct MaximizerRow {
    canonical_code: CanonicalCode,
    #[serde(with = "decimal")]
    count: CountValue,
}

#[derive(Debug, Serialize)]
struct ExploreOutput {
    maximizers: Vec<MaximizerRow>,
    census: Vec<CensusRow>,
}

struct Runner<'a> {
    format: OutputFormat,
    budget: u64,
    cache: Option<CensusCache>,
    out: &'a mut (dyn Write + Send),
}

impl Runner<'_> {
    fn census_options(&self) -> CensusOptions {
        CensusOptions {
            brute: BruteOptions {
                budget: self.budget,
                parallel: true,
            },
            parallel: true,
        }
    }

    fn census(&self, n: usize, q: u32, scheme: Scheme) -> Result<Vec<CensusRecord>, CliError> {
        let opts = self.census_options();
        Ok(match &self.cache {
            Some(cache) => cache.census(n, q, scheme, &opts)?,
            None => extremal::census_with(n, q, scheme, &opts)?,
        })
    }

    fn json(&mut self, value: &impl Serialize) -> Result<(), CliError> {
        let text = serde_json::to_string_pretty(value).expect("output serializes");
        writeln!(self.out, "{text}")?;
        Ok(())
    }

    fn csv<T: Serialize>(&mut self, rows: &[T]) -> Result<(), CliError> {
        let mut writer = csv::Writer::from_writer(&mut *self.out);
        for row in rows {
            writer.serialize(row)?;
        }
        writer.flush()?;
        Ok(())
    }

    fn count(&mut self, spec: &str, scheme: Scheme, q: u32, method: Method) -> Result<(), CliError> {
        let tree = treelib::parse_tree_spec(spec)?;
        let n = tree.n();
        let brute_opts = BruteOptions {
            budget: self.budget,
            parallel: true,
        };
        let brute = || counting::brute_count_with::<CountValue>(&tree, q, scheme, &brute_opts);
        let closed = counting::closed_count::<CountValue>(&tree, q, scheme);
        let (count, label) = match (method, closed) {
            (Method::Brute, _) | (Method::Auto, None) => (brute()?, "brute"),
            (Method::Closed, None) => {
                return Err(CliError::Usage(format!(
                    "no closed form for scheme {scheme} on {spec}; use --method brute"
                )))
            }
            (Method::Closed, Some(closed)) => (closed?, "closed"),
            (Method::Auto, Some(closed)) => {
                let closed = closed?;
                if check_budget(n, q, self.budget.min(AUTO_CHECK_BUDGET)).is_ok() {
                    let searched = brute()?;
                    if searched != closed {
                        return Err(CliError::Failure(format!(
                            "closed form gives {closed} but search gives {searched} for {scheme} on {spec} with q = {q}"
                        )));
                    }
                    (closed, "closed+brute")
                } else {
                    (closed, "closed")
                }
            }
        };
        let output = CountOutput {
            tree: tree.to_string(),
            canonical_code: canonical_code(&tree),
            n,
            q,
            scheme,
            method: label,
            count,
        };
        match self.format {
            OutputFormat::Table => writeln!(self.out, "{count}")?,
            OutputFormat::Csv => self.csv(&[output])?,
            OutputFormat::Json => self.json(&output)?,
        }
        Ok(())
    }

    fn census_cmd(&mut self, ns: IntRange, qs: IntRange, scheme: Scheme) -> Result<(), CliError> {
        let mut rows = Vec::new();
        for n in ns.values() {
            for q in qs.values() {
                rows.extend(rows_for(&self.census(n as usize, q, scheme)?)?);
            }
        }
        match self.format {
            OutputFormat::Json => self.json(&rows)?,
            OutputFormat::Csv => self.csv(&rows)?,
            OutputFormat::Table => {
                let width = rows.iter().map(|r| r.canonical_code.to_hex().len()).max().unwrap_or(0);
                writeln!(
                    self.out,
                    "{:<width$}  {:>2}  {:>3}  {:<7}  {:>20}  extreme",
                    "canonical_code", "n", "q", "scheme", "count"
                )?;
                for r in &rows {
                    let flag = match (r.is_min, r.is_max) {
                        (true, true) => "min,max",
                        (true, false) => "min",
                        (false, true) => "max",
                        _ => "",
                    };
                    writeln!(
                        self.out,
                        "{:<width$}  {:>2}  {:>3}  {:<7}  {:>20}  {flag}",
                        r.canonical_code.to_hex(),
                        r.n,
                        r.q,
                        r.scheme.to_string(),
                        r.count
                    )?;
                }
            }
        }
        Ok(())
    }

    fn verify(&mut self, theorems: &[TheoremId], ns: IntRange, qs: IntRange) -> Result<bool, CliError> {
        let mut reports: Vec<VerificationReport> = Vec::new();
        for &id in theorems {
            for n in ns.values() {
                for q in qs.values() {
                    let records = self.census(n as usize, q, id.scheme())?;
                    reports.push(extremal::verify_records(id, n as usize, q, &records)?);
                }
            }
        }
        let all_pass = reports.iter().all(VerificationReport::passed);
        match self.format {
            OutputFormat::Json => self.json(&reports)?,
            OutputFormat::Csv => {
                let rows: Vec<ClaimRow> = reports
                    .iter()
                    .flat_map(|r| {
                        r.checked_claims.iter().map(move |c| ClaimRow {
                            theorem: r.theorem_id,
                            n: r.n,
                            q: r.q,
                            claim: &c.label,
                            status: status_name(c.status),
                        })
                    })
                    .collect();
                self.csv(&rows)?;
            }
            OutputFormat::Table => {
                for r in &reports {
                    let status = match r.status {
                        ReportStatus::Pass => "PASS",
                        ReportStatus::Fail => "FAIL",
                    };
                    writeln!(self.out, "{} n={} q={}: {status}", r.theorem_id, r.n, r.q)?;
                    for c in &r.checked_claims {
                        writeln!(self.out, "  [{}] {}", status_name(c.status), c.label)?;
                    }
                    for x in &r.counterexamples {
                        writeln!(
                            self.out,
                            "  counterexample ({}): {} count {}",
                            x.claim, x.canonical_code, x.count
                        )?;
                    }
                }
            }
        }
        Ok(all_pass)
    }

    fn explore(&mut self, n: usize, q: u32, scheme: Scheme) -> Result<(), CliError> {
        let exploration = extremal::explore_records(self.census(n, q, scheme)?)?;
        let census = rows_for(&exploration.ranked)?;
        let output = ExploreOutput {
            maximizers: exploration
                .maximizers
                .iter()
                .map(|(code, count)| MaximizerRow {
                    canonical_code: code.clone(),
                    count: *count,
                })
                .collect(),
            census,
        };
        match self.format {
            OutputFormat::Json => self.json(&output)?,
            OutputFormat::Csv => self.csv(&output.census)?,
            OutputFormat::Table => {
                for m in &output.maximizers {
                    let tree = Tree::from_canonical_code(&m.canonical_code)?;
                    writeln!(self.out, "max {} {} ({tree})", m.count, m.canonical_code)?;
                }
                for r in &output.census {
                    writeln!(self.out, "{:>20}  {}", r.count, r.canonical_code)?;
                }
            }
        }
        Ok(())
    }

    fn trees(&mut self, ns: IntRange) -> Result<(), CliError> {
        let mut rows = Vec::new();
        for n in ns.values() {
            for t in treelib::enumerate_free_trees(n as usize)? {
                let profile = degree_profile(&t);
                rows.push(TreeRow {
                    canonical_code: canonical_code(&t),
                    n: t.n(),
                    edges: t.to_string(),
                    degrees: profile
                        .degrees
                        .iter()
                        .map(ToString::to_string)
                        .collect::<Vec<_>>()
                        .join(" "),
                    leaf_count: profile.leaf_count,
                    even_degree_count: profile.even_degree_count,
                });
            }
        }
        match self.format {
            OutputFormat::Json => self.json(&rows)?,
            OutputFormat::Csv => self.csv(&rows)?,
            OutputFormat::Table => {
                for r in &rows {
                    writeln!(
                        self.out,
                        "{}  n={}  leaves={}  even={}  degrees=[{}]",
                        r.canonical_code, r.n, r.leaf_count, r.even_degree_count, r.degrees
                    )?;
                }
            }
        }
        Ok(())
    }
}

fn status_name(status: extremal::ClaimStatus) -> &'static str {
    match status {
        extremal::ClaimStatus::Pass => "pass",
        extremal::ClaimStatus::Fail => "fail",
        extremal::ClaimStatus::Vacuous => "vacuous",
        extremal::ClaimStatus::NotApplicable => "not_applicable",
    }
}

/// Executes a parsed request, writing results to `out`.
pub fn execute(request: CommandRequest, out: &mut (dyn Write + Send)) -> Result<i32, CliError> {
    let mut runner = Runner {
        format: request.format,
        budget: request.budget,
        cache: request.cache_dir.map(CensusCache::new),
        out,
    };
    let dispatch = move |runner: &mut Runner| -> Result<i32, CliError> {
        match request.command {
            Subcommands::Count {
                tree,
                scheme,
                q,
                method,
            } => runner.count(&tree, scheme, q, method)?,
            Subcommands::Census { n, q, scheme } => runner.census_cmd(n, q, scheme)?,
            Subcommands::Verify { theorem, n, q } => {
                if !runner.verify(&theorem.0, n, q)? {
                    return Ok(EXIT_FAILURE);
                }
            }
            Subcommands::Explore { n, q, scheme } => runner.explore(n as usize, q, scheme)?,
            Subcommands::Trees { n } => runner.trees(n)?,
        }
        Ok(EXIT_OK)
    };
    match request.jobs {
        Some(jobs) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(jobs)
                .build()
                .map_err(|e| CliError::Usage(e.to_string()))?;
            pool.install(|| dispatch(&mut runner))
        }
        None => dispatch(&mut runner),
    }
}

/// Parses `args` (including the program name), runs, and returns the exit code.
pub fn run<I, T>(args: I, out: &mut (dyn Write + Send), err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let request = match CommandRequest::try_parse_from(args) {
        Ok(request) => request,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{e}");
                return EXIT_USAGE;
            }
            let _ = write!(out, "{e}");
            return EXIT_OK;
        }
    };
    match execute(request, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(
            std::iter::once("treecount").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn ranges_parse() {
        assert_eq!("7".parse::<IntRange>().unwrap(), IntRange { start: 7, end: 7 });
        assert_eq!("4..9".parse::<IntRange>().unwrap(), IntRange { start: 4, end: 9 });
        assert_eq!("4..=9".parse::<IntRange>().unwrap(), IntRange { start: 4, end: 9 });
        assert!("9..4".parse::<IntRange>().is_err());
        assert!("x".parse::<IntRange>().is_err());
        assert_eq!("4..9".parse::<IntRange>().unwrap().to_string(), "4..9");
    }

    #[test]
    fn count_worked_example() {
        let (code, out, _) = run_args(&["count", "--tree", "path:6", "--scheme", "kscf:2", "-q", "3"]);
        assert_eq!((code, out.as_str()), (0, "6\n"));
        let (code, out, _) = run_args(&["count", "--tree", "dstar:2,2", "--scheme", "kscf:2", "-q", "3"]);
        assert_eq!((code, out.as_str()), (0, "66\n"));
    }

    #[test]
    fn count_methods() {
        let (code, out, _) = run_args(&[
            "count",
            "--tree",
            "dstar:2,2",
            "--scheme",
            "cf",
            "-q",
            "3",
            "--method",
            "closed",
        ]);
        assert_eq!(code, EXIT_USAGE, "{out}");
        let (code, out, _) = run_args(&[
            "count", "--tree", "path:16", "--scheme", "odd", "-q", "16", "--format", "json",
        ]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["method"], "closed");
        assert_eq!(v["count"], (16u128.pow(14) * 225).to_string());
        let (code, _, err) = run_args(&[
            "count", "--tree", "path:16", "--scheme", "odd", "-q", "16", "--method", "brute",
        ]);
        assert_eq!(code, EXIT_BUDGET, "{err}");
        let (code, out, _) = run_args(&[
            "count", "--tree", "star:5", "--scheme", "sr", "-q", "5", "--format", "csv",
        ]);
        assert_eq!(code, 0);
        assert!(
            out.starts_with("tree,canonical_code,n,q,scheme,method,count\n"),
            "{out}"
        );
        assert!(out.trim_end().ends_with("closed+brute,120"), "{out}");
    }

    #[test]
    fn usage_errors() {
        let (code, _, err) = run_args(&["count", "--tree", "edges:4;0-1,1-2,0-2", "--scheme", "cf", "-q", "2"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("cycle"), "{err}");
        assert_eq!(
            run_args(&["count", "--tree", "path:4", "--scheme", "bogus", "-q", "2"]).0,
            EXIT_USAGE
        );
        assert_eq!(run_args(&["frobnicate"]).0, EXIT_USAGE);
        assert_eq!(
            run_args(&["census", "-n", "13", "-q", "2", "--scheme", "cf"]).0,
            EXIT_BUDGET
        );
        assert_eq!(
            run_args(&["verify", "--theorem", "XYZ", "-n", "4", "-q", "2"]).0,
            EXIT_USAGE
        );
    }

    #[test]
    fn verify_exit_codes() {
        let (code, out, _) = run_args(&["verify", "--theorem", "CF", "-n", "7", "-q", "3", "--format", "json"]);
        assert_eq!(code, 0);
        let reports: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(reports[0]["status"], "pass");
        assert_eq!(reports[0]["theorem_id"], "CF");
        let (code, out, _) = run_args(&["verify", "--theorem", "SR", "-n", "5", "-q", "2"]);
        assert_eq!(code, EXIT_FAILURE);
        assert!(out.contains("FAIL"));
    }

    #[test]
    fn census_json_round_trips() {
        let (code, out, _) = run_args(&[
            "census", "-n", "4..6", "-q", "3", "--scheme", "kscf:2", "--format", "json",
        ]);
        assert_eq!(code, 0);
        let rows: Vec<CensusRow> = serde_json::from_str(&out).unwrap();
        let records: Vec<CensusRecord> = rows.iter().map(CensusRow::record).collect();
        let mut expected = Vec::new();
        for n in 4..=6 {
            expected.extend(extremal::census(n, 3, Scheme::KStrongConflictFree(2)).unwrap());
        }
        assert_eq!(records, expected);
        let (_, again, _) = run_args(&[
            "census", "-n", "4..6", "-q", "3", "--scheme", "kscf:2", "--format", "json",
        ]);
        assert_eq!(out, again);
    }

    #[test]
    fn census_csv_header() {
        let (code, out, _) = run_args(&["census", "-n", "4", "-q", "2", "--scheme", "cf", "--format", "csv"]);
        assert_eq!(code, 0);
        let mut lines = out.lines();
        assert_eq!(lines.next(), Some("canonical_code,n,q,scheme,count,is_min,is_max"));
        assert_eq!(lines.count(), 2);
    }

    #[test]
    fn explore_and_trees() {
        let (code, out, _) = run_args(&["explore", "-n", "6", "-q", "3", "--scheme", "kscf:2"]);
        assert_eq!(code, 0);
        let ds = canonical_code(&Tree::double_star(2, 2).unwrap());
        assert!(out.starts_with(&format!("max 66 {ds}")), "{out}");
        let (code, out, _) = run_args(&["trees", "-n", "6", "--format", "csv"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().count(), 1 + 6);
    }

    #[test]
    fn cache_directory_is_used() {
        let dir = tempfile::tempdir().unwrap();
        let dir_arg = dir.path().to_str().unwrap();
        let args = [
            "census",
            "-n",
            "5",
            "-q",
            "2",
            "--scheme",
            "odd",
            "--cache-dir",
            dir_arg,
        ];
        let (code, first, _) = run_args(&args);
        assert_eq!(code, 0);
        assert!(dir.path().join("census-v1-n5-q2-odd.json").exists());
        let (_, second, _) = run_args(&args);
        assert_eq!(first, second);
    }

    #[test]
    fn jobs_flag() {
        let (code, out, _) = run_args(&[
            "--jobs", "2", "count", "--tree", "star:6", "--scheme", "kscf:2", "-q", "3",
        ]);
        assert_eq!((code, out.as_str()), (0, "30\n"));
    }
}
