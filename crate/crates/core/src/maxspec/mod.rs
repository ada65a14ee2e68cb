//! The quantale `Max A` for `A = ⊕ₖ Mₙₖ(ℚ[i])`.
//!
//! Elements of `Max A` are linear subspaces of `A`, stored by their reduced
//! row-echelon basis so that equality is structural. In finite dimension
//! every subspace is closed, so the closures in the quantale operations are
//! plain spans.
//!
//! Hilbert points are taken to be the block projections
//! `A → Mₙₖ = B(ℂ^{nₖ})`: every irreducible representation of a finite
//! direct sum of matrix algebras is equivalent to one of them.

mod algebra;
mod diagonal;
mod hilbert;
mod obstruction;
mod reflection;
mod sample;
mod starhom;
mod subspace;

pub use algebra::{AlgElement, Algebra};
pub use diagonal::{
    diagonal_support, hyperplane, is_prime_by_supports, primes_diagonal, refute_prime,
    spatialization_diagonal, standard_lines, support_subspace, DiagonalSpatialization, PrimeRefutation,
    MAX_DIAGONAL,
};
pub use hilbert::HilbertPoint;
pub use obstruction::{
    atom_reachability, coproduct_obstruction_check, generator_product, zero_patterns, AtomReachability,
    ObstructionReport, ZeroPattern,
};
pub use reflection::{commutative_reflection, CommutativeReflection};
pub use sample::{
    random_element, random_projection, random_right_ideal, random_scalar, random_subspace,
};
pub use starhom::{unital_star_homs_c2_c2, unital_star_homs_c2_m2, StarHom};
pub use subspace::Subspace;

use alloc::string::String;
use thiserror::Error;

use crate::exactnum::ExactError;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum MaxError {
    #[error("operands belong to different algebras")]
    AlgebraMismatch,
    #[error("element has shape {found}, expected {expected}")]
    Shape { expected: String, found: String },
    #[error("subspace is not a right ideal")]
    NotRightIdeal,
    #[error("block {index} out of range for {blocks} blocks")]
    BadBlock { index: usize, blocks: usize },
    #[error("algebra is not commutative (all blocks must have size 1)")]
    NotDiagonal,
    #[error("not a unital *-homomorphism: {0}")]
    InvalidHom(&'static str),
    #[error("cannot parse algebra: {0}")]
    Parse(String),
    #[error(transparent)]
    Exact(#[from] ExactError),
}
