//! Census of coloring counts over every free tree on `n` vertices, and checks
//! of which trees attain the extremes.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::counting::{self, check_budget, BruteOptions, CountError};
use crate::schemes::Scheme;
use crate::treelib::{self, canonical_code, degree_profile, CanonicalCode, Tree, TreeError};
use crate::CountValue;

#[derive(Debug, Error)]
pub enum ExtremalError {
    #[error(transparent)]
    Tree(#[from] TreeError),
    #[error(transparent)]
    Count(#[from] CountError),
    #[error("no census records")]
    Empty,
    #[error("records mix several (n, q, scheme) combinations")]
    Mixed,
    #[error("unknown theorem `{0}` (expected CF, ODD, SR, NM, SCF2, STARCOL or XHOM)")]
    UnknownTheorem(String),
    #[error("cache I/O on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

pub type Result<T> = std::result::Result<T, ExtremalError>;

/// Decimal-string (de)serialization for counts, which may exceed 64 bits.
pub mod decimal {
    use serde::{de, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(value: &u128, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(value)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<u128, D::Error> {
        String::deserialize(d)?.parse().map_err(de::Error::custom)
    }
}

/// One tree's count in a census.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusRecord {
    pub canonical_code: CanonicalCode,
    pub n: usize,
    pub q: u32,
    pub scheme: Scheme,
    #[serde(with = "decimal")]
    pub count: CountValue,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CensusOptions {
    pub brute: BruteOptions,
    /// Count different trees concurrently.
    pub parallel: bool,
}

impl Default for CensusOptions {
    fn default() -> Self {
        CensusOptions {
            brute: BruteOptions::default(),
            parallel: true,
        }
    }
}

/// Counts for every free tree on `n` vertices, sorted by canonical code.
pub fn census(n: usize, q: u32, scheme: Scheme) -> Result<Vec<CensusRecord>> {
    census_with(n, q, scheme, &CensusOptions::default())
}

pub fn census_with(n: usize, q: u32, scheme: Scheme, opts: &CensusOptions) -> Result<Vec<CensusRecord>> {
    if q == 0 {
        return Err(CountError::ZeroColors.into());
    }
    check_budget(n, q, opts.brute.budget)?;
    let trees = treelib::enumerate_free_trees(n)?;
    let record = |t: &Tree| -> Result<CensusRecord> {
        Ok(CensusRecord {
            canonical_code: canonical_code(t),
            n,
            q,
            scheme,
            count: counting::brute_count_with(t, q, scheme, &opts.brute)?,
        })
    };
    let mut records = if opts.parallel {
        trees.par_iter().map(record).collect::<Result<Vec<_>>>()?
    } else {
        trees.iter().map(record).collect::<Result<Vec<_>>>()?
    };
    records.sort_by(|a, b| a.canonical_code.cmp(&b.canonical_code));
    Ok(records)
}

/// Extreme values of a census and every tree attaining them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtremalSummary {
    #[serde(with = "decimal")]
    pub min_value: CountValue,
    pub min_codes: Vec<CanonicalCode>,
    #[serde(with = "decimal")]
    pub max_value: CountValue,
    pub max_codes: Vec<CanonicalCode>,
}

pub fn extremal_report(records: &[CensusRecord]) -> Result<ExtremalSummary> {
    let first = records.first().ok_or(ExtremalError::Empty)?;
    if records
        .iter()
        .any(|r| (r.n, r.q, r.scheme) != (first.n, first.q, first.scheme))
    {
        return Err(ExtremalError::Mixed);
    }
    let min_value = records.iter().map(|r| r.count).min().unwrap();
    let max_value = records.iter().map(|r| r.count).max().unwrap();
    let achievers = |value| {
        let mut codes: Vec<_> = records
            .iter()
            .filter(|r| r.count == value)
            .map(|r| r.canonical_code.clone())
            .collect();
        codes.sort();
        codes
    };
    Ok(ExtremalSummary {
        min_value,
        min_codes: achievers(min_value),
        max_value,
        max_codes: achievers(max_value),
    })
}

fn neighbor_masks(t: &Tree) -> Vec<u32> {
    (0..t.n())
        .map(|v| t.neighbors(v).iter().fold(0u32, |m, &w| m | 1 << w))
        .collect()
}

/// Visits every connected vertex subset exactly once, as a bitmask.
///
/// Subsets are grown from their smallest vertex; a vertex joins the frontier
/// only when it is adjacent to the newest member and to nothing already in
/// or around the subset. Stops early when `visit` returns `true`.
pub fn for_each_connected_subset(t: &Tree, mut visit: impl FnMut(u32) -> bool) -> bool {
    let nbrs = neighbor_masks(t);
    fn extend(
        nbrs: &[u32],
        subset: u32,
        closed: u32,
        mut frontier: u32,
        above_seed: u32,
        visit: &mut dyn FnMut(u32) -> bool,
    ) -> bool {
        if visit(subset) {
            return true;
        }
        while frontier != 0 {
            let w = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let exclusive = nbrs[w] & !closed & above_seed;
            if extend(
                nbrs,
                subset | 1 << w,
                closed | nbrs[w] | 1 << w,
                frontier | exclusive,
                above_seed,
                visit,
            ) {
                return true;
            }
        }
        false
    }
    for seed in 0..t.n() {
        let above_seed = !((2u32 << seed) - 1);
        let subset = 1u32 << seed;
        let closed = subset | nbrs[seed];
        if extend(&nbrs, subset, closed, nbrs[seed] & above_seed, above_seed, &mut visit) {
            return true;
        }
    }
    false
}

/// A connected subset of at least two vertices in which every vertex has
/// exactly one neighbor outside the subset, if the tree has one.
pub fn exposed_subtree(t: &Tree) -> Option<Vec<usize>> {
    let nbrs = neighbor_masks(t);
    let mut witness = None;
    for_each_connected_subset(t, |subset| {
        let exposed = subset.count_ones() >= 2
            && (0..t.n())
                .filter(|&v| subset >> v & 1 == 1)
                .all(|v| (nbrs[v] & !subset).count_ones() == 1);
        if exposed {
            witness = Some((0..t.n()).filter(|&v| subset >> v & 1 == 1).collect());
        }
        exposed
    });
    witness
}

pub fn has_exposed_subtree(t: &Tree) -> bool {
    exposed_subtree(t).is_some()
}

/// The extremal statements that [`verify_theorem`] checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TheoremId {
    #[serde(rename = "CF")]
    Cf,
    #[serde(rename = "ODD")]
    Odd,
    #[serde(rename = "SR")]
    Sr,
    #[serde(rename = "NM")]
    Nm,
    #[serde(rename = "SCF2")]
    Scf2,
    #[serde(rename = "STARCOL")]
    StarCol,
    #[serde(rename = "XHOM")]
    Xhom,
}

impl TheoremId {
    pub const ALL: [TheoremId; 7] = [
        TheoremId::Cf,
        TheoremId::Odd,
        TheoremId::Sr,
        TheoremId::Nm,
        TheoremId::Scf2,
        TheoremId::StarCol,
        TheoremId::Xhom,
    ];

    pub fn scheme(self) -> Scheme {
        match self {
            TheoremId::Cf => Scheme::ConflictFree,
            TheoremId::Odd => Scheme::Odd,
            TheoremId::Sr => Scheme::StarRainbow,
            TheoremId::Nm => Scheme::NonMonochromatic,
            TheoremId::Scf2 => Scheme::KStrongConflictFree(2),
            TheoremId::StarCol => Scheme::StarColoring,
            TheoremId::Xhom => Scheme::XHomLooped,
        }
    }

    /// Smallest number of colors the statement covers.
    pub fn min_colors(self) -> u32 {
        match self {
            TheoremId::Scf2 | TheoremId::StarCol => 3,
            _ => 2,
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TheoremId::Cf => "CF",
            TheoremId::Odd => "ODD",
            TheoremId::Sr => "SR",
            TheoremId::Nm => "NM",
            TheoremId::Scf2 => "SCF2",
            TheoremId::StarCol => "STARCOL",
            TheoremId::Xhom => "XHOM",
        })
    }
}

impl FromStr for TheoremId {
    type Err = ExtremalError;

    fn from_str(s: &str) -> Result<Self> {
        TheoremId::ALL
            .into_iter()
            .find(|id| id.to_string().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| ExtremalError::UnknownTheorem(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ClaimStatus {
    Pass,
    Fail,
    /// A uniqueness statement over a census with a single tree.
    Vacuous,
    /// `q` lies outside the range the statement covers.
    NotApplicable,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimResult {
    pub label: String,
    pub status: ClaimStatus,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub claim: String,
    pub canonical_code: CanonicalCode,
    #[serde(with = "decimal")]
    pub count: CountValue,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ReportStatus {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub theorem_id: TheoremId,
    pub n: usize,
    pub q: u32,
    pub status: ReportStatus,
    pub checked_claims: Vec<ClaimResult>,
    pub counterexamples: Vec<Counterexample>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.status == ReportStatus::Pass
    }
}

struct ClaimLog<'a> {
    records: &'a [CensusRecord],
    claims: Vec<ClaimResult>,
    counterexamples: Vec<Counterexample>,
}

impl ClaimLog<'_> {
    /// Records a claim; `offenders` are the codes that falsify it.
    fn check(&mut self, label: &str, offenders: impl IntoIterator<Item = CanonicalCode>) {
        let offenders: BTreeSet<_> = offenders.into_iter().collect();
        let status = if offenders.is_empty() {
            ClaimStatus::Pass
        } else {
            ClaimStatus::Fail
        };
        for r in self.records.iter().filter(|r| offenders.contains(&r.canonical_code)) {
            self.counterexamples.push(Counterexample {
                claim: label.to_string(),
                canonical_code: r.canonical_code.clone(),
                count: r.count,
            });
        }
        self.claims.push(ClaimResult {
            label: label.to_string(),
            status,
        });
    }

    fn mark(&mut self, label: &str, status: ClaimStatus) {
        self.claims.push(ClaimResult {
            label: label.to_string(),
            status,
        });
    }
}

/// Which tree a theorem names as the extreme.
#[derive(Clone, Copy, PartialEq, Eq)]
enum Named {
    Star,
    Path,
}

/// Evaluates a theorem's claims against a precomputed census for
/// `(n, q, id.scheme())`.
pub fn verify_records(id: TheoremId, n: usize, q: u32, records: &[CensusRecord]) -> Result<VerificationReport> {
    let summary = extremal_report(records)?;
    let first = &records[0];
    if (first.n, first.q, first.scheme) != (n, q, id.scheme()) {
        return Err(ExtremalError::Mixed);
    }
    let star = canonical_code(&Tree::star(n)?);
    let path = canonical_code(&Tree::path(n)?);
    let count_of: BTreeMap<_, _> = records.iter().map(|r| (r.canonical_code.clone(), r.count)).collect();
    let mut log = ClaimLog {
        records,
        claims: Vec::new(),
        counterexamples: Vec::new(),
    };

    let (min_tree, max_tree) = match id {
        TheoremId::Scf2 => (Named::Path, None),
        TheoremId::StarCol => (Named::Path, Some(Named::Star)),
        _ => (Named::Star, Some(Named::Path)),
    };
    let code_of = |which: Named| match which {
        Named::Star => &star,
        Named::Path => &path,
    };
    let name_of = |which: Named| match which {
        Named::Star => "star",
        Named::Path => "path",
    };

    if q < id.min_colors() {
        log.mark(&format!("{} minimizes", name_of(min_tree)), ClaimStatus::NotApplicable);
        if let Some(max_tree) = max_tree {
            log.mark(&format!("{} maximizes", name_of(max_tree)), ClaimStatus::NotApplicable);
        }
    } else {
        let low = count_of[code_of(min_tree)];
        log.check(
            &format!("{} minimizes", name_of(min_tree)),
            records
                .iter()
                .filter(|r| r.count < low)
                .map(|r| r.canonical_code.clone()),
        );
        if let Some(max_tree) = max_tree {
            let high = count_of[code_of(max_tree)];
            log.check(
                &format!("{} maximizes", name_of(max_tree)),
                records
                    .iter()
                    .filter(|r| r.count > high)
                    .map(|r| r.canonical_code.clone()),
            );
        }

        let single_class = records.len() == 1;
        let unique = |log: &mut ClaimLog, which: Named, achievers: &[CanonicalCode], side: &str| {
            let label = format!("{} is the unique {side}", name_of(which));
            if single_class {
                log.mark(&label, ClaimStatus::Vacuous);
            } else {
                let target = code_of(which);
                let mut offenders: Vec<_> = achievers.iter().filter(|c| *c != target).cloned().collect();
                if !achievers.contains(target) {
                    offenders.push(target.clone());
                }
                log.check(&label, offenders);
            }
        };

        // Equality in the lower bound.
        match id {
            TheoremId::Cf | TheoremId::Odd if q == 2 => {
                let (label, expected): (&str, BTreeSet<CanonicalCode>) = if id == TheoremId::Cf {
                    (
                        "minimizers are the trees without an exposed subtree",
                        records
                            .iter()
                            .map(|r| Tree::from_canonical_code(&r.canonical_code))
                            .collect::<std::result::Result<Vec<_>, _>>()?
                            .iter()
                            .filter(|t| !has_exposed_subtree(t))
                            .map(canonical_code)
                            .collect(),
                    )
                } else {
                    (
                        "minimizers are the trees with at most one even-degree vertex",
                        records
                            .iter()
                            .map(|r| Tree::from_canonical_code(&r.canonical_code))
                            .collect::<std::result::Result<Vec<_>, _>>()?
                            .iter()
                            .filter(|t| degree_profile(t).even_degree_count <= 1)
                            .map(canonical_code)
                            .collect(),
                    )
                };
                let actual: BTreeSet<_> = summary.min_codes.iter().cloned().collect();
                log.check(label, actual.symmetric_difference(&expected).cloned());
            }
            _ => unique(&mut log, min_tree, &summary.min_codes, "minimizer"),
        }
        if let Some(max_tree) = max_tree {
            unique(&mut log, max_tree, &summary.max_codes, "maximizer");
        }
        if matches!(id, TheoremId::Cf | TheoremId::Odd | TheoremId::Nm) {
            let proper: CountValue = counting::proper_count(n, q)?;
            let low = count_of[&star];
            log.check("star count equals q(q-1)^(n-1)", (low != proper).then(|| star.clone()));
        }
    }

    let status = if log.claims.iter().any(|c| c.status == ClaimStatus::Fail) {
        ReportStatus::Fail
    } else {
        ReportStatus::Pass
    };
    Ok(VerificationReport {
        theorem_id: id,
        n,
        q,
        status,
        checked_claims: log.claims,
        counterexamples: log.counterexamples,
    })
}

pub fn verify_theorem(id: TheoremId, n: usize, q: u32) -> Result<VerificationReport> {
    verify_theorem_with(id, n, q, &CensusOptions::default())
}

pub fn verify_theorem_with(id: TheoremId, n: usize, q: u32, opts: &CensusOptions) -> Result<VerificationReport> {
    let records = census_with(n, q, id.scheme(), opts)?;
    verify_records(id, n, q, &records)
}

/// Maximizing trees plus the whole census ordered by decreasing count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Exploration {
    pub maximizers: Vec<(CanonicalCode, CountValue)>,
    pub ranked: Vec<CensusRecord>,
}

pub fn explore_max(n: usize, q: u32, scheme: Scheme) -> Result<Exploration> {
    explore_records(census(n, q, scheme)?)
}

pub fn explore_records(mut records: Vec<CensusRecord>) -> Result<Exploration> {
    let summary = extremal_report(&records)?;
    records.sort_by(|a, b| {
        b.count
            .cmp(&a.count)
            .then_with(|| a.canonical_code.cmp(&b.canonical_code))
    });
    Ok(Exploration {
        maximizers: summary
            .max_codes
            .into_iter()
            .map(|code| (code, summary.max_value))
            .collect(),
        ranked: records,
    })
}

/// Bumped whenever the on-disk census layout changes.
pub const CACHE_FORMAT_VERSION: u32 = 1;

#[derive(Debug, Serialize, Deserialize)]
struct CacheFile {
    format_version: u32,
    n: usize,
    q: u32,
    scheme: Scheme,
    records: Vec<CensusRecord>,
}

/// Census results persisted as one JSON file per `(n, q, scheme)`.
#[derive(Debug, Clone)]
pub struct CensusCache {
    dir: PathBuf,
}

impl CensusCache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        CensusCache { dir: dir.into() }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn file_for(&self, n: usize, q: u32, scheme: Scheme) -> PathBuf {
        self.dir.join(format!(
            "census-v{CACHE_FORMAT_VERSION}-n{n}-q{q}-{}.json",
            scheme.slug()
        ))
    }

    /// Cached records, if a readable file with a matching header exists.
    pub fn load(&self, n: usize, q: u32, scheme: Scheme) -> Option<Vec<CensusRecord>> {
        let text = fs::read_to_string(self.file_for(n, q, scheme)).ok()?;
        let file: CacheFile = serde_json::from_str(&text).ok()?;
        let consistent = file.format_version == CACHE_FORMAT_VERSION
            && (file.n, file.q, file.scheme) == (n, q, scheme)
            && !file.records.is_empty()
            && file.records.iter().all(|r| (r.n, r.q, r.scheme) == (n, q, scheme));
        consistent.then_some(file.records)
    }

    pub fn store(&self, records: &[CensusRecord]) -> Result<()> {
        let first = records.first().ok_or(ExtremalError::Empty)?;
        let io = |path: &Path| {
            let path = path.to_path_buf();
            move |source| ExtremalError::Io { path, source }
        };
        fs::create_dir_all(&self.dir).map_err(io(&self.dir))?;
        let target = self.file_for(first.n, first.q, first.scheme);
        let file = CacheFile {
            format_version: CACHE_FORMAT_VERSION,
            n: first.n,
            q: first.q,
            scheme: first.scheme,
            records: records.to_vec(),
        };
        let text = serde_json::to_string_pretty(&file).expect("census records serialize");
        let tmp = target.with_extension("json.tmp");
        fs::write(&tmp, text).map_err(io(&tmp))?;
        fs::rename(&tmp, &target).map_err(io(&target))?;
        Ok(())
    }

    pub fn census(&self, n: usize, q: u32, scheme: Scheme, opts: &CensusOptions) -> Result<Vec<CensusRecord>> {
        if let Some(records) = self.load(n, q, scheme) {
            return Ok(records);
        }
        let records = census_with(n, q, scheme, opts)?;
        self.store(&records)?;
        Ok(records)
    }
}
