//! Exact scalars, tensor-indexed matrices, subspaces, quotients and a solver
//! for unknown linear maps.

mod echelon;
mod linmap;
mod quotient;
mod scalar;
mod shape;
mod solver;
mod subspace;

pub use echelon::{sparse_from_dense, sparse_to_dense, Echelon, SparseVec};
pub use linmap::{tensor_all, LinMap};
pub use quotient::{balanced_relators, QuotientSpace};
pub use scalar::{FieldSpec, Scalar};
pub use shape::Shape;
pub use solver::{solve_constrained_map, LinExpr, Solution};
pub use subspace::Subspace;
