//! Exact-arithmetic calculator for abstract open books of contact
//! 3-manifolds: page complexity, monodromy action on homology, the handle
//! complex of the bounding Lefschetz fibration, the d3 invariant, and
//! interval bounds on support genus, binding number and support norm.

pub mod cli;
pub mod constructions;
pub mod format;
pub mod invariants;
pub mod lefschetz;
pub mod linalg;
pub mod monodromy;
pub mod reproduction;
pub mod surface;
