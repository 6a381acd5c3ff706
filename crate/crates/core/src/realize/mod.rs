//! Constructions realizing quiver types: exact arithmetic in Q(ζ24), finite matrix
//! groups and their characters, McKay matrices, homological determinants, winding
//! permutations, and the Ore-extension and graded-twist type transforms.

pub mod catalog;
mod cyc24;
mod group;
mod groupfile;
mod mckay;
mod superpot;
mod transform;

use thiserror::Error;

pub use cyc24::Cyc24;
pub use group::{group_closure, CycMatrix, MatrixGroup, DEFAULT_CLOSURE_CAP};
pub use groupfile::{
    bundled_group, parse_cyc_matrix, parse_group_file, perm4, GroupData, HdetSpec, RealizedGroup,
    RepDecl, RepKind, BUNDLED_GROUPS,
};
pub use mckay::{
    class_function, inner_product, mckay_matrix, verify_irreps, winding_permutation, Irrep,
    McKayResult,
};
pub use superpot::{hdet_of_linear_action, hdet_of_superpotential_action, FreeElement};
pub use transform::{ore_type, twist_type};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RealizeError {
    #[error("group closure exceeded {cap} elements")]
    ClosureCapExceeded { cap: usize },
    #[error("McKay entry ({row}, {col}) is not a nonnegative integer")]
    NonIntegerEntry { row: usize, col: usize },
    #[error("g(ω) is not a scalar multiple of ω")]
    NotEigenvector,
    #[error("no irreducible character matches {irrep} twisted by the given character")]
    NoMatchingCharacter { irrep: String },
    #[error("representation {name} is not irreducible")]
    NotIrreducible { name: String },
    #[error("irreps {first} and {second} are isomorphic")]
    DuplicateIrrep { first: String, second: String },
    #[error("{name} is not a linear character")]
    NotLinearCharacter { name: String },
    #[error("unknown representation {name}")]
    UnknownRepresentation { name: String },
    #[error("unknown group {name}")]
    UnknownGroup { name: String },
    #[error("expected four vertices, found {count}")]
    NotFourVertices { count: usize },
    #[error("the Ore transform takes s = 2 inputs, got s = {s}")]
    OreNeedsDegreeTwo { s: u32 },
    #[error("invalid type: {0}")]
    InvalidType(String),
    #[error("catalog entry {id}: recipe gives {computed}, catalogued {expected}")]
    CatalogMismatch { id: String, computed: String, expected: String },
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}
