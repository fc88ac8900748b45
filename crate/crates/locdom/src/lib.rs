//! Locating-domination codes on Mycielski graphs.
//!
//! The crate computes and cross-checks minimum locating-dominating (LD),
//! locating total-dominating (LTD) and open locating-dominating (OLD) sets —
//! plus plain and total domination — with a focus on how these numbers behave
//! under the Mycielski construction:
//!
//! - [`graph`]: graphs, family generators (paths, cycles, stars, a
//!   distance-(1,2) circulant) and the Mycielski operator;
//! - [`checker`]: the code-membership predicates with failure witnesses;
//! - [`solver`]: exact numbers by pruned search, with a naive enumeration
//!   oracle for cross-validation;
//! - [`formulas`]: closed forms and proven bounds as pure integer functions;
//! - [`construct`]: constructive witnesses (lifts to the Mycielski graph and
//!   periodic patterns), all validated before being returned;
//! - [`sweep`]: family sweeps, tightness search and CSV/JSON reports.

pub mod checker;
pub mod construct;
pub mod format;
pub mod formulas;
pub mod graph;
pub mod set;
pub mod solver;
pub mod sweep;

pub use checker::{CheckFailure, CheckVerdict, CodeKind};
pub use graph::{Graph, GraphFamily};
pub use set::VertexSet;
pub use solver::{SolveOutcome, SolveResult};
