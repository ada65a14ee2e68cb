//! Finite quantales, sup-lattices and the quantale `Max A` of a
//! finite-dimensional C*-algebra, computed exactly.
//!
//! The crate is `no_std` and only needs `alloc`. Everything here is a pure
//! function over immutable values; file formats, the command line and the
//! bundled corpus live in the `qlab` companion crate.
//!
//! Module map:
//!
//! - [`exactnum`]: rationals, Gaussian rationals, row reduction, row spaces.
//! - [`suplattice`]: finite complete lattices and the endomorphism quantale `Q(S)`.
//! - [`quantale`]: axiom checking, sided elements, primes, spatialization.
//! - [`representation`]: representations on finite sup-lattices and point enumeration.
//! - [`locale`]: finite frames presented by posets, well-inside, coproducts.
//! - [`maxspec`]: subspaces of `⊕ Mₙ(ℚ[i])` and the functor `Max`.
//! - [`iso`]: isomorphism search and canonical certificates for finite structures.
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod exactnum;
pub mod iso;
pub mod locale;
pub mod maxspec;
pub mod quantale;
pub mod representation;
pub mod suplattice;

mod verdict;

pub use verdict::Verdict;
