//! Finite quantales given by tables.
//!
//! A [`FiniteQuantale`] is a finite lattice with a product table, an optional
//! unit and an optional involution. Construction only checks table shapes;
//! whether the tables satisfy the quantale laws is a question answered by
//! [`verify_axioms`], which reports violations as data.

mod axioms;
mod elements;
mod hom;
mod spatialize;

pub use axioms::{verify_axioms, AxiomReport, AxiomViolation, ClassificationReport};
pub use elements::{
    is_gelfand, is_spatial_by_primes, localic_reflection_map, meet_of_primes_above, primes,
    sided_elements, LocalicReflection, Side,
};
pub use hom::{check_hom, enumerate_homs, HomFlags, HomReport, QuantaleHom};
pub use spatialize::{spatialize, Spatialization};

use alloc::vec::Vec;
use thiserror::Error;

use crate::suplattice::{LatticeError, SupLattice};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum QuantaleError {
    #[error("{table} table has {found} entries, expected {expected}")]
    TableShape {
        table: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("index {index} in {table} out of range for size {size}")]
    IndexOutOfRange {
        table: &'static str,
        index: usize,
        size: usize,
    },
    #[error("operation needs a unit and an involution")]
    MissingUnitOrStar,
    #[error("operation needs a unit")]
    MissingUnit,
    #[error("{side:?}-sided elements differ from the image of the sided closure at {element}")]
    SidedMismatch { side: Side, element: usize },
    #[error("point {index} is not a quantale homomorphism")]
    PointNotAHomomorphism { index: usize },
    #[error("point {index} has a different source quantale")]
    PointSourceMismatch { index: usize },
    #[error("quotient operations depend on representatives at classes {a} and {b}")]
    NotACongruence { a: usize, b: usize },
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

/// A finite lattice with a product table, optional unit and involution.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteQuantale {
    lattice: SupLattice,
    product: Vec<usize>,
    unit: Option<usize>,
    star: Option<Vec<usize>>,
}

impl FiniteQuantale {
    /// `product[a * n + b] = a ⊙ b`.
    pub fn new(
        lattice: SupLattice,
        product: Vec<usize>,
        unit: Option<usize>,
        star: Option<Vec<usize>>,
    ) -> Result<Self, QuantaleError> {
        let n = lattice.size();
        if product.len() != n * n {
            return Err(QuantaleError::TableShape {
                table: "product",
                expected: n * n,
                found: product.len(),
            });
        }
        if let Some(&index) = product.iter().find(|&&x| x >= n) {
            return Err(QuantaleError::IndexOutOfRange {
                table: "product",
                index,
                size: n,
            });
        }
        if let Some(index) = unit.filter(|&e| e >= n) {
            return Err(QuantaleError::IndexOutOfRange {
                table: "unit",
                index,
                size: n,
            });
        }
        if let Some(star) = &star {
            if star.len() != n {
                return Err(QuantaleError::TableShape {
                    table: "star",
                    expected: n,
                    found: star.len(),
                });
            }
            if let Some(&index) = star.iter().find(|&&x| x >= n) {
                return Err(QuantaleError::IndexOutOfRange {
                    table: "star",
                    index,
                    size: n,
                });
            }
        }
        Ok(Self {
            lattice,
            product,
            unit,
            star,
        })
    }

    /// The locale structure on a lattice: product = meet, unit = top,
    /// trivial involution.
    pub fn locale(lattice: SupLattice) -> Self {
        let n = lattice.size();
        let product = (0..n * n).map(|k| lattice.meet(k / n, k % n)).collect();
        let unit = Some(lattice.top());
        let star = Some((0..n).collect());
        Self {
            lattice,
            product,
            unit,
            star,
        }
    }

    pub fn lattice(&self) -> &SupLattice {
        &self.lattice
    }

    pub fn size(&self) -> usize {
        self.lattice.size()
    }

    pub fn bottom(&self) -> usize {
        self.lattice.bottom()
    }

    pub fn top(&self) -> usize {
        self.lattice.top()
    }

    pub fn unit(&self) -> Option<usize> {
        self.unit
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.lattice.leq(a, b)
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.lattice.join(a, b)
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.lattice.meet(a, b)
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.product[a * self.size() + b]
    }

    /// `a ⊙ b ⊙ c`, associated to the left.
    pub fn mul3(&self, a: usize, b: usize, c: usize) -> usize {
        self.mul(self.mul(a, b), c)
    }

    pub fn star(&self, a: usize) -> Option<usize> {
        self.star.as_ref().map(|s| s[a])
    }

    pub fn product_table(&self) -> &[usize] {
        &self.product
    }

    pub fn star_table(&self) -> Option<&[usize]> {
        self.star.as_deref()
    }

    pub fn is_trivial(&self) -> bool {
        self.size() == 1
    }

    /// The element acting as a two-sided unit, whether declared or not.
    pub fn find_unit(&self) -> Option<usize> {
        let n = self.size();
        (0..n).find(|&e| (0..n).all(|a| self.mul(e, a) == a && self.mul(a, e) == a))
    }

    /// The one-element quantale.
    pub fn trivial() -> Self {
        Self::locale(SupLattice::chain(1).expect("one-element chain"))
    }
}
