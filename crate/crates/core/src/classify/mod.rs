//! The three enumeration engines and the staged filter pipeline.
//!
//! Stage "pre" keeps candidates whose P-orbit quotient is strongly connected and whose
//! det p(t) is a cyclotomic product vanishing to order at least 3 at t = 1. Stage
//! "full" adds strong connectivity, the spectral radius 6 - s for normal M, and
//! nonnegativity of the Hilbert series prefix. Output is grouped by quiver
//! isomorphism under the fixed P.

mod engine;
mod filters;
mod forms;
mod gamma;

pub use engine::{
    classify, enumerate_four_cycle, enumerate_three_cycle, enumerate_two_two, rule_out_report,
    CandidateReport, Classification, ClassifyOptions, RuleOut, RuleOutReason,
    DEFAULT_HILBERT_TERMS,
};
pub use filters::{Evaluation, FilterKind, FilterOutcome, MIN_ROOT1_MULTIPLICITY};
pub use forms::{PermClass, ThreeCycleForm, TwoTwoForm};
pub use gamma::{gamma_max_table, GammaRow};
