//! Experiment sweeps over graph families, bound/tightness reporting, and
//! report serialization (CSV and JSON).
//!
//! One sweep row describes one Mycielski instance `M(G)` for `G` drawn from a
//! family: the exact code number next to the applicable closed form, the
//! proven lower/upper bounds, and the size of the constructive witness. Rows
//! violating `lower <= exact <= upper` abort the sweep; that would be a bug,
//! not a data point.

use std::fmt;
use std::path::Path;
use std::time::Instant;

use rand::SeedableRng;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::checker::{self, CodeKind};
use crate::construct;
use crate::format::{parse_edge_list, EdgeListError, ParsedGraph};
use crate::formulas;
use crate::graph::{connected_graph_catalog, random_connected, Graph, GraphError, GraphFamily};
use crate::solver::{gamma_budgeted, SolveOutcome, DEFAULT_NODE_BUDGET};

#[derive(Debug, Error)]
pub enum SweepError {
    #[error("row {family} n={n} {kind}: bound interval violated (lower={lower:?}, exact={exact}, upper={upper:?})")]
    IntervalViolation {
        family: GraphFamily,
        n: usize,
        kind: CodeKind,
        lower: Option<usize>,
        exact: usize,
        upper: Option<usize>,
    },
    #[error("family {0} cannot be swept (only path, cycle and star)")]
    UnsupportedFamily(GraphFamily),
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error(transparent)]
    EdgeList(#[from] EdgeListError),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

/// `exact` cell of a row: a number, or a first-class marker.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExactCell {
    Value(usize),
    Budget,
    Inadmissible,
}

impl ExactCell {
    pub fn value(&self) -> Option<usize> {
        match self {
            ExactCell::Value(v) => Some(*v),
            _ => None,
        }
    }
}

impl fmt::Display for ExactCell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExactCell::Value(v) => write!(f, "{v}"),
            ExactCell::Budget => f.write_str("budget"),
            ExactCell::Inadmissible => f.write_str("inadmissible"),
        }
    }
}

impl Serialize for ExactCell {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            ExactCell::Value(v) => s.serialize_u64(*v as u64),
            ExactCell::Budget => s.serialize_str("budget"),
            ExactCell::Inadmissible => s.serialize_str("inadmissible"),
        }
    }
}

impl<'de> Deserialize<'de> for ExactCell {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Number(u64),
            Text(String),
        }
        match Raw::deserialize(d)? {
            Raw::Number(v) => Ok(ExactCell::Value(v as usize)),
            Raw::Text(t) => match t.as_str() {
                "budget" => Ok(ExactCell::Budget),
                "inadmissible" => Ok(ExactCell::Inadmissible),
                other => Err(D::Error::custom(format!("bad exact cell {other:?}"))),
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepRow {
    pub family: GraphFamily,
    pub n: usize,
    pub kind: CodeKind,
    pub exact: ExactCell,
    pub formula: Option<usize>,
    pub lower: Option<usize>,
    pub upper: Option<usize>,
    pub construction: Option<usize>,
    pub tight_lower: bool,
    pub tight_upper: bool,
    pub ms: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub rows: Vec<SweepRow>,
}

pub const CSV_HEADER: &str =
    "family,n,kind,exact,formula,lower,upper,construction,tight_lower,tight_upper,ms";

fn opt_cell(v: Option<usize>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

impl SweepReport {
    pub fn to_csv(&self) -> String {
        let mut out = String::from(CSV_HEADER);
        out.push('\n');
        for r in &self.rows {
            out.push_str(&format!(
                "{},{},{},{},{},{},{},{},{},{},{}\n",
                r.family,
                r.n,
                r.kind,
                r.exact,
                opt_cell(r.formula),
                opt_cell(r.lower),
                opt_cell(r.upper),
                opt_cell(r.construction),
                r.tight_lower,
                r.tight_upper,
                r.ms
            ));
        }
        out
    }

    pub fn to_json(&self) -> Result<String, SweepError> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn from_json(text: &str) -> Result<Self, SweepError> {
        Ok(serde_json::from_str(text)?)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ReportFormat {
    Csv,
    Json,
}

impl std::str::FromStr for ReportFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "csv" => Ok(ReportFormat::Csv),
            "json" => Ok(ReportFormat::Json),
            other => Err(format!("unknown format {other:?} (expected csv or json)")),
        }
    }
}

// ---------------------------------------------------------------------------
// Sweep configuration (flat key=value file)
// ---------------------------------------------------------------------------

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConfigError {
    #[error("line {line}: expected key=value")]
    Malformed { line: usize },
    #[error("line {line}: unknown key {key:?}")]
    UnknownKey { line: usize, key: String },
    #[error("line {line}: bad value for {key}: {message}")]
    BadValue {
        line: usize,
        key: String,
        message: String,
    },
    #[error("missing required key {key:?}")]
    Missing { key: &'static str },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepConfig {
    pub families: Vec<GraphFamily>,
    pub n_min: usize,
    pub n_max: usize,
    pub kinds: Vec<CodeKind>,
    pub budget: u64,
    pub out: Option<String>,
    pub format: ReportFormat,
}

impl SweepConfig {
    /// Parses a flat `key=value` file with `#` comments. Keys: `families`,
    /// `n_min`, `n_max`, `kinds`, `budget`, `out`, `format`.
    pub fn parse(text: &str) -> Result<Self, ConfigError> {
        let mut families = None;
        let mut n_min = None;
        let mut n_max = None;
        let mut kinds = None;
        let mut budget = DEFAULT_NODE_BUDGET;
        let mut out = None;
        let mut format = ReportFormat::Csv;

        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = raw.trim();
            if content.is_empty() || content.starts_with('#') {
                continue;
            }
            let (key, value) = content
                .split_once('=')
                .map(|(k, v)| (k.trim(), v.trim()))
                .ok_or(ConfigError::Malformed { line })?;
            let bad = |message: String| ConfigError::BadValue {
                line,
                key: key.to_string(),
                message,
            };
            match key {
                "families" => {
                    let parsed: Result<Vec<GraphFamily>, _> =
                        value.split(',').map(|t| t.trim().parse()).collect();
                    families = Some(parsed.map_err(bad)?);
                }
                "kinds" => {
                    let parsed: Result<Vec<CodeKind>, _> =
                        value.split(',').map(|t| t.trim().parse()).collect();
                    kinds = Some(parsed.map_err(bad)?);
                }
                "n_min" => n_min = Some(value.parse().map_err(|e| bad(format!("{e}")))?),
                "n_max" => n_max = Some(value.parse().map_err(|e| bad(format!("{e}")))?),
                "budget" => budget = value.parse().map_err(|e| bad(format!("{e}")))?,
                "out" => out = Some(value.to_string()),
                "format" => format = value.parse().map_err(bad)?,
                other => {
                    return Err(ConfigError::UnknownKey {
                        line,
                        key: other.to_string(),
                    });
                }
            }
        }

        Ok(SweepConfig {
            families: families.ok_or(ConfigError::Missing { key: "families" })?,
            n_min: n_min.ok_or(ConfigError::Missing { key: "n_min" })?,
            n_max: n_max.ok_or(ConfigError::Missing { key: "n_max" })?,
            kinds: kinds.ok_or(ConfigError::Missing { key: "kinds" })?,
            budget,
            out,
            format,
        })
    }
}

// ---------------------------------------------------------------------------
// Sweep execution
// ---------------------------------------------------------------------------

fn base_graph(family: GraphFamily, n: usize) -> Option<Graph> {
    match family {
        GraphFamily::Path => Graph::path(n).ok(),
        GraphFamily::Cycle => Graph::cycle(n).ok(),
        GraphFamily::Star => Graph::star(n).ok(),
        _ => None,
    }
}

/// The closed-form value of `γ_kind(M(G_n))` when one is known.
fn closed_form(kind: CodeKind, family: GraphFamily, n: usize) -> Option<usize> {
    if let Some(small) = formulas::small_case(kind, family, n, true) {
        return Some(small.value);
    }
    match (kind, family) {
        (CodeKind::Old, GraphFamily::Path) => formulas::old_path(n).ok().map(|f| f.value + 2),
        (CodeKind::Ld | CodeKind::Ltd, GraphFamily::Star) => formulas::star_numbers(n, kind)
            .ok()
            .map(|(_, lifted)| lifted.value),
        _ => None,
    }
}

/// Row bounds on `γ_kind(M(G_n))`: the generic Mycielski interval, with the
/// upper end replaced by the family-specific bound where one is proven.
fn row_bounds(kind: CodeKind, family: GraphFamily, n: usize, gamma_g: usize) -> (usize, usize) {
    let base = formulas::mycielski_bounds(kind, gamma_g, family).expect("gamma_g >= 1");
    let upper = match (kind, family) {
        (CodeKind::Ld, GraphFamily::Path | GraphFamily::Cycle) => {
            formulas::ub_ld_mycielski(n, family)
                .map(|f| f.value)
                .unwrap_or(base.hi)
        }
        (CodeKind::Ltd, GraphFamily::Path | GraphFamily::Cycle) => {
            formulas::ub_ltd_mycielski(n, family)
                .map(|f| f.value)
                .unwrap_or(base.hi)
        }
        _ => base.hi,
    };
    (base.lo, upper)
}

/// Size of the constructive witness applicable to this row, if any.
fn construction_size(
    kind: CodeKind,
    family: GraphFamily,
    n: usize,
    g: &Graph,
    budget: u64,
) -> Option<usize> {
    let witness_for = |k: CodeKind| -> Option<crate::set::VertexSet> {
        match gamma_budgeted(g, k, budget).outcome {
            SolveOutcome::Solved { witness, .. } => Some(witness),
            _ => None,
        }
    };
    match kind {
        CodeKind::Dom => None,
        CodeKind::Tdom => {
            let w = witness_for(CodeKind::Tdom)?;
            construct::total_dom_lift(g, &w, 0)
                .ok()
                .map(|o| o.set.len())
        }
        CodeKind::Old => {
            let w = witness_for(CodeKind::Old)?;
            construct::old_lift(g, &w, 0).ok().map(|o| o.set.len())
        }
        CodeKind::Ld => {
            if family == GraphFamily::Path && n >= 6 {
                construct::ld_set_mycielski_path(n)
                    .ok()
                    .map(|o| o.set.len())
            } else {
                let w = witness_for(CodeKind::Ld)?;
                construct::doubling_lift(g, &w, CodeKind::Ld)
                    .ok()
                    .map(|o| o.set.len())
            }
        }
        CodeKind::Ltd => match family {
            GraphFamily::Cycle => construct::ltd_set_mycielski_cycle(n)
                .ok()
                .map(|o| o.set.len()),
            GraphFamily::Path if checker::admits_old(g) => {
                // an OLD-set of M(G) is in particular an LTD-set
                let w = witness_for(CodeKind::Old)?;
                let out = construct::old_lift(g, &w, 0).ok()?;
                checker::is_code(&out.graph, &out.set, CodeKind::Ltd)
                    .ok()
                    .filter(|v| v.ok())
                    .map(|_| out.set.len())
            }
            _ => {
                let w = witness_for(CodeKind::Ltd)?;
                construct::doubling_lift(g, &w, CodeKind::Ltd)
                    .ok()
                    .map(|o| o.set.len())
            }
        },
    }
}

fn compute_row(
    family: GraphFamily,
    n: usize,
    kind: CodeKind,
    budget: u64,
) -> Result<Option<SweepRow>, SweepError> {
    let Some(g) = base_graph(family, n) else {
        return Ok(None);
    };
    let started = Instant::now();
    let mg = g.mycielski()?;
    let base_solve = gamma_budgeted(&g, kind, budget);
    let lifted_solve = gamma_budgeted(&mg, kind, budget);

    let exact = match lifted_solve.outcome {
        SolveOutcome::Solved { value, .. } => ExactCell::Value(value),
        SolveOutcome::Inadmissible(_) => ExactCell::Inadmissible,
        SolveOutcome::BudgetExhausted => ExactCell::Budget,
    };
    let (lower, upper) = match base_solve.outcome {
        SolveOutcome::Solved { value, .. } if value >= 1 => {
            let (lo, hi) = row_bounds(kind, family, n, value);
            (Some(lo), Some(hi))
        }
        _ => (None, None),
    };
    let formula = closed_form(kind, family, n);
    let construction = construction_size(kind, family, n, &g, budget);

    if let ExactCell::Value(v) = exact {
        let lower_ok = lower.is_none_or(|lo| lo <= v);
        let upper_ok = upper.is_none_or(|hi| v <= hi);
        if !lower_ok || !upper_ok {
            return Err(SweepError::IntervalViolation {
                family,
                n,
                kind,
                lower,
                exact: v,
                upper,
            });
        }
        if let Some(c) = construction {
            if c < v {
                return Err(SweepError::IntervalViolation {
                    family,
                    n,
                    kind,
                    lower: Some(c),
                    exact: v,
                    upper,
                });
            }
        }
    }

    let tight_lower = matches!((exact.value(), lower), (Some(v), Some(lo)) if v == lo);
    let tight_upper = matches!((exact.value(), upper), (Some(v), Some(hi)) if v == hi);

    Ok(Some(SweepRow {
        family,
        n,
        kind,
        exact,
        formula,
        lower,
        upper,
        construction,
        tight_lower,
        tight_upper,
        ms: started.elapsed().as_millis() as u64,
    }))
}

/// Runs one row per `(family, n, kind)` triple; rows are ordered by family,
/// then `n`, then kind. Budget exhaustion is recorded in the row, never
/// aborting the sweep; a violated bound interval does abort it.
pub fn run_sweep(config: &SweepConfig) -> Result<SweepReport, SweepError> {
    for &family in &config.families {
        if !matches!(
            family,
            GraphFamily::Path | GraphFamily::Cycle | GraphFamily::Star
        ) {
            return Err(SweepError::UnsupportedFamily(family));
        }
    }
    let mut families = config.families.clone();
    families.sort_unstable();
    families.dedup();
    let mut kinds = config.kinds.clone();
    kinds.sort_unstable();
    kinds.dedup();

    let mut rows = Vec::new();
    for &family in &families {
        for n in config.n_min..=config.n_max {
            for &kind in &kinds {
                if let Some(row) = compute_row(family, n, kind, config.budget)? {
                    rows.push(row);
                }
            }
        }
    }
    Ok(SweepReport { rows })
}

/// Reads a graph from an edge-list file.
pub fn load_graph(path: impl AsRef<Path>) -> Result<ParsedGraph, SweepError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|source| SweepError::Io {
        path: path.display().to_string(),
        source,
    })?;
    Ok(parse_edge_list(&text)?)
}

/// Writes a report in the requested format.
pub fn save_report(
    report: &SweepReport,
    path: impl AsRef<Path>,
    format: ReportFormat,
) -> Result<(), SweepError> {
    let path = path.as_ref();
    let payload = match format {
        ReportFormat::Csv => report.to_csv(),
        ReportFormat::Json => report.to_json()?,
    };
    std::fs::write(path, payload).map_err(|source| SweepError::Io {
        path: path.display().to_string(),
        source,
    })
}

// ---------------------------------------------------------------------------
// Tightness search
// ---------------------------------------------------------------------------

/// Which equality to look for. Both test `γ_kind(M(G)) = γ_kind(G) + 1`;
/// `OldPlusOne` is the same relation viewed as the lower end of the
/// OLD-specific interval `[γ+1, γ+2]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum TightnessRelation {
    LowerPlusOne,
    OldPlusOne,
}

impl std::str::FromStr for TightnessRelation {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().replace('_', "-").as_str() {
            "lower-plus-one" => Ok(TightnessRelation::LowerPlusOne),
            "old-plus-one" => Ok(TightnessRelation::OldPlusOne),
            other => Err(format!(
                "unknown relation {other:?} (expected lower-plus-one or old-plus-one)"
            )),
        }
    }
}

#[derive(Debug, Clone)]
pub enum SearchSpace {
    Paths {
        lo: usize,
        hi: usize,
    },
    Cycles {
        lo: usize,
        hi: usize,
    },
    Stars {
        lo: usize,
        hi: usize,
    },
    AllConnected {
        max_n: usize,
    },
    RandomConnected {
        max_n: usize,
        count: usize,
        seed: u64,
    },
}

impl SearchSpace {
    fn describe(&self) -> String {
        match self {
            SearchSpace::Paths { lo, hi } => format!("paths {lo}..={hi}"),
            SearchSpace::Cycles { lo, hi } => format!("cycles {lo}..={hi}"),
            SearchSpace::Stars { lo, hi } => format!("stars {lo}..={hi}"),
            SearchSpace::AllConnected { max_n } => {
                format!("all connected graphs with n <= {max_n}")
            }
            SearchSpace::RandomConnected { max_n, count, seed } => {
                format!("{count} random connected graphs with n <= {max_n} (seed {seed})")
            }
        }
    }

    fn instances(&self) -> Result<Vec<Graph>, SweepError> {
        let graphs = match self {
            SearchSpace::Paths { lo, hi } => {
                (*lo..=*hi).filter_map(|n| Graph::path(n).ok()).collect()
            }
            SearchSpace::Cycles { lo, hi } => {
                (*lo..=*hi).filter_map(|n| Graph::cycle(n).ok()).collect()
            }
            SearchSpace::Stars { lo, hi } => {
                (*lo..=*hi).filter_map(|n| Graph::star(n).ok()).collect()
            }
            SearchSpace::AllConnected { max_n } => {
                let mut all = Vec::new();
                for n in 2..=*max_n {
                    all.extend(connected_graph_catalog(n)?);
                }
                all
            }
            SearchSpace::RandomConnected { max_n, count, seed } => {
                let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(*seed);
                (0..*count)
                    .map(|_| {
                        let n = 2 + (rand::Rng::gen_range(&mut rng, 0..max_n.saturating_sub(1)));
                        random_connected(&mut rng, n, 0.35)
                    })
                    .collect()
            }
        };
        Ok(graphs)
    }
}

/// Syntax: `paths:LO..HI`, `cycles:LO..HI`, `stars:LO..HI`,
/// `connected:MAX`, `random:MAX,COUNT,SEED`.
impl std::str::FromStr for SearchSpace {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let (name, rest) = s.split_once(':').ok_or("expected NAME:ARGS")?;
        let range = |rest: &str| -> Result<(usize, usize), String> {
            let (lo, hi) = rest.split_once("..").ok_or("expected LO..HI")?;
            Ok((
                lo.parse().map_err(|e| format!("{e}"))?,
                hi.parse().map_err(|e| format!("{e}"))?,
            ))
        };
        match name {
            "paths" => range(rest).map(|(lo, hi)| SearchSpace::Paths { lo, hi }),
            "cycles" => range(rest).map(|(lo, hi)| SearchSpace::Cycles { lo, hi }),
            "stars" => range(rest).map(|(lo, hi)| SearchSpace::Stars { lo, hi }),
            "connected" => Ok(SearchSpace::AllConnected {
                max_n: rest.parse().map_err(|e| format!("{e}"))?,
            }),
            "random" => {
                let parts: Vec<&str> = rest.split(',').collect();
                if parts.len() != 3 {
                    return Err("expected random:MAX,COUNT,SEED".to_string());
                }
                Ok(SearchSpace::RandomConnected {
                    max_n: parts[0].parse().map_err(|e| format!("{e}"))?,
                    count: parts[1].parse().map_err(|e| format!("{e}"))?,
                    seed: parts[2].parse().map_err(|e| format!("{e}"))?,
                })
            }
            other => Err(format!("unknown search space {other:?}")),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct TightnessExample {
    pub label: String,
    pub base_value: usize,
    pub lifted_value: usize,
}

/// Result of a tightness search: a witness instance, or an exhaustion report
/// scoped to the searched space. `exhausted` is only set when every
/// admissible candidate was fully solved.
#[derive(Debug, Clone, Serialize)]
pub struct TightnessReport {
    pub kind: CodeKind,
    pub relation: TightnessRelation,
    pub space: String,
    pub example: Option<TightnessExample>,
    pub examined: usize,
    pub exhausted: bool,
}

pub fn find_tightness_example(
    kind: CodeKind,
    relation: TightnessRelation,
    space: &SearchSpace,
    budget: u64,
) -> Result<TightnessReport, SweepError> {
    let mut examined = 0usize;
    let mut fully_solved = true;
    for g in space.instances()? {
        let base = gamma_budgeted(&g, kind, budget);
        let base_value = match base.outcome {
            SolveOutcome::Solved { value, .. } => value,
            SolveOutcome::Inadmissible(_) => continue,
            SolveOutcome::BudgetExhausted => {
                fully_solved = false;
                continue;
            }
        };
        let mg = g.mycielski()?;
        let lifted = gamma_budgeted(&mg, kind, budget);
        let lifted_value = match lifted.outcome {
            SolveOutcome::Solved { value, .. } => value,
            SolveOutcome::Inadmissible(_) => continue,
            SolveOutcome::BudgetExhausted => {
                fully_solved = false;
                continue;
            }
        };
        examined += 1;
        if lifted_value == base_value + 1 {
            // re-validate with fresh exact solves before reporting
            let again_base = gamma_budgeted(&g, kind, budget).value();
            let again_lifted = gamma_budgeted(&mg, kind, budget).value();
            if again_base == Some(base_value) && again_lifted == Some(lifted_value) {
                return Ok(TightnessReport {
                    kind,
                    relation,
                    space: space.describe(),
                    example: Some(TightnessExample {
                        label: g.label().unwrap_or("unnamed").to_string(),
                        base_value,
                        lifted_value,
                    }),
                    examined,
                    exhausted: false,
                });
            }
        }
    }
    Ok(TightnessReport {
        kind,
        relation,
        space: space.describe(),
        example: None,
        examined,
        exhausted: fully_solved,
    })
}
