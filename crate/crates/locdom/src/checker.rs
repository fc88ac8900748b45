//! Predicates deciding whether a vertex set is a dominating, total-dominating,
//! LD-, LTD- or OLD-set, with deterministic failure witnesses.
//!
//! Verdicts report the lowest-index violation: domination is scanned first in
//! vertex order, then separation over pairs in lexicographic order. This keeps
//! every verdict reproducible and testable.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;
use crate::set::VertexSet;

/// The five code variants this crate works with.
///
/// `Dom`/`Tdom` are plain (total-)domination; `Ld`, `Ltd` and `Old` add the
/// separation requirements:
/// - an LD-set is dominating and separates (closed neighborhoods) all pairs
///   of distinct vertices outside the set;
/// - an LTD-set is total-dominating with the same pair requirement;
/// - an OLD-set is total-dominating and total-separates (open neighborhoods)
///   all pairs of distinct vertices of the graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CodeKind {
    Dom,
    Tdom,
    Ld,
    Ltd,
    Old,
}

impl CodeKind {
    pub const ALL: [CodeKind; 5] = [
        CodeKind::Dom,
        CodeKind::Tdom,
        CodeKind::Ld,
        CodeKind::Ltd,
        CodeKind::Old,
    ];

    /// The three locating kinds, in the order of the standard chain
    /// `γ_LD <= γ_LTD <= γ_OLD`.
    pub const LOCATING: [CodeKind; 3] = [CodeKind::Ld, CodeKind::Ltd, CodeKind::Old];

    /// Whether domination uses open neighborhoods (members need an outside
    /// dominator too).
    pub fn open_domination(self) -> bool {
        matches!(self, CodeKind::Tdom | CodeKind::Ltd | CodeKind::Old)
    }

    /// Whether the separation predicate uses open neighborhoods.
    pub fn open_separation(self) -> bool {
        matches!(self, CodeKind::Ltd | CodeKind::Old)
    }

    /// Whether separation quantifies over all pairs (`Old`) rather than pairs
    /// outside the code (`Ld`/`Ltd`), or not at all (`Dom`/`Tdom`).
    pub fn separation(self) -> Separation {
        match self {
            CodeKind::Dom | CodeKind::Tdom => Separation::None,
            CodeKind::Ld | CodeKind::Ltd => Separation::OutsideCode,
            CodeKind::Old => Separation::AllPairs,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            CodeKind::Dom => "DOM",
            CodeKind::Tdom => "TDOM",
            CodeKind::Ld => "LD",
            CodeKind::Ltd => "LTD",
            CodeKind::Old => "OLD",
        }
    }
}

impl fmt::Display for CodeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for CodeKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "dom" => Ok(CodeKind::Dom),
            "tdom" => Ok(CodeKind::Tdom),
            "ld" => Ok(CodeKind::Ld),
            "ltd" => Ok(CodeKind::Ltd),
            "old" => Ok(CodeKind::Old),
            other => Err(format!(
                "unknown code kind {other:?} (expected dom, tdom, ld, ltd or old)"
            )),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Separation {
    None,
    OutsideCode,
    AllPairs,
}

/// The first violated requirement, if any.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "failure")]
pub enum CheckFailure {
    Undominated { vertex: usize },
    Unseparated { a: usize, b: usize },
}

impl fmt::Display for CheckFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CheckFailure::Undominated { vertex } => write!(f, "vertex {vertex} undominated"),
            CheckFailure::Unseparated { a, b } => write!(f, "pair ({a},{b}) unseparated"),
        }
    }
}

/// Outcome of a predicate check. `ok()` holds exactly when no failure was
/// recorded.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CheckVerdict {
    failure: Option<CheckFailure>,
}

impl CheckVerdict {
    pub const PASS: CheckVerdict = CheckVerdict { failure: None };

    fn fail(failure: CheckFailure) -> Self {
        CheckVerdict {
            failure: Some(failure),
        }
    }

    pub fn ok(&self) -> bool {
        self.failure.is_none()
    }

    pub fn failure(&self) -> Option<CheckFailure> {
        self.failure
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CheckError {
    #[error(
        "vertex set built for universe {set_universe} used with a graph on {graph_order} vertices"
    )]
    UniverseMismatch {
        set_universe: usize,
        graph_order: usize,
    },
    #[error("vertex {vertex} out of range for a graph on {order} vertices")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("separation is only defined for distinct vertices, got {vertex} twice")]
    IdenticalPair { vertex: usize },
}

fn check_universe(g: &Graph, c: &VertexSet) -> Result<(), CheckError> {
    if c.universe() != g.n() {
        return Err(CheckError::UniverseMismatch {
            set_universe: c.universe(),
            graph_order: g.n(),
        });
    }
    Ok(())
}

fn domination_verdict(g: &Graph, c: &VertexSet, open: bool) -> CheckVerdict {
    let bits = c.mask();
    for v in 0..g.n() {
        let nbhd = if open {
            g.adjacency_mask(v)
        } else {
            g.closed_mask(v)
        };
        if nbhd & bits == 0 {
            return CheckVerdict::fail(CheckFailure::Undominated { vertex: v });
        }
    }
    CheckVerdict::PASS
}

/// Every vertex must see a member of `c` in its closed neighborhood.
pub fn is_dominating(g: &Graph, c: &VertexSet) -> Result<CheckVerdict, CheckError> {
    check_universe(g, c)?;
    Ok(domination_verdict(g, c, false))
}

/// Every vertex must see a member of `c` in its open neighborhood.
pub fn is_total_dominating(g: &Graph, c: &VertexSet) -> Result<CheckVerdict, CheckError> {
    check_universe(g, c)?;
    Ok(domination_verdict(g, c, true))
}

fn separation_pair(
    g: &Graph,
    c: &VertexSet,
    a: usize,
    b: usize,
    open: bool,
) -> Result<bool, CheckError> {
    check_universe(g, c)?;
    for v in [a, b] {
        if v >= g.n() {
            return Err(CheckError::VertexOutOfRange {
                vertex: v,
                order: g.n(),
            });
        }
    }
    if a == b {
        return Err(CheckError::IdenticalPair { vertex: a });
    }
    let (ma, mb) = if open {
        (g.adjacency_mask(a), g.adjacency_mask(b))
    } else {
        (g.closed_mask(a), g.closed_mask(b))
    };
    Ok(ma & c.mask() != mb & c.mask())
}

/// `N[a] ∩ C != N[b] ∩ C`.
pub fn separates(g: &Graph, c: &VertexSet, a: usize, b: usize) -> Result<bool, CheckError> {
    separation_pair(g, c, a, b, false)
}

/// `N(a) ∩ C != N(b) ∩ C`.
pub fn total_separates(g: &Graph, c: &VertexSet, a: usize, b: usize) -> Result<bool, CheckError> {
    separation_pair(g, c, a, b, true)
}

/// Full membership test for `kind`, reporting the first violated requirement:
/// domination in vertex order, then separation in lexicographic pair order
/// over the kind's pair universe. On an empty graph the verdict is vacuously
/// positive.
pub fn is_code(g: &Graph, c: &VertexSet, kind: CodeKind) -> Result<CheckVerdict, CheckError> {
    check_universe(g, c)?;
    let dom = domination_verdict(g, c, kind.open_domination());
    if !dom.ok() {
        return Ok(dom);
    }
    let bits = c.mask();
    let open = kind.open_separation();
    match kind.separation() {
        Separation::None => {}
        Separation::OutsideCode => {
            for a in 0..g.n() {
                if bits & (1u128 << a) != 0 {
                    continue;
                }
                for b in a + 1..g.n() {
                    if bits & (1u128 << b) != 0 {
                        continue;
                    }
                    if !trace_differs(g, bits, a, b, open) {
                        return Ok(CheckVerdict::fail(CheckFailure::Unseparated { a, b }));
                    }
                }
            }
        }
        Separation::AllPairs => {
            for a in 0..g.n() {
                for b in a + 1..g.n() {
                    if !trace_differs(g, bits, a, b, open) {
                        return Ok(CheckVerdict::fail(CheckFailure::Unseparated { a, b }));
                    }
                }
            }
        }
    }
    Ok(CheckVerdict::PASS)
}

fn trace_differs(g: &Graph, bits: u128, a: usize, b: usize, open: bool) -> bool {
    let (ma, mb) = if open {
        (g.adjacency_mask(a), g.adjacency_mask(b))
    } else {
        (g.closed_mask(a), g.closed_mask(b))
    };
    ma & bits != mb & bits
}

/// A graph admits an OLD-set iff it has no isolated vertex and no false
/// twins (false twins can never be total-separated).
pub fn admits_old(g: &Graph) -> bool {
    g.isolated_vertex().is_none() && g.false_twin_pairs().is_empty()
}
