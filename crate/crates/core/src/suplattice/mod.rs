//! Finite complete lattices and the quantale `Q(S)` of join-preserving
//! endomaps.
//!
//! Elements are dense indices `0..size`. Join and meet tables are derived
//! from the order relation at construction time and never supplied directly.

mod endo;
mod order;
mod small;

pub use endo::{endo_quantale, EndoMap, EndoQuantale, DEFAULT_ENDO_CAP};
pub use order::{check_partial_order, transitive_closure, OrderViolation};
pub use small::enumerate_lattices;

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("a lattice needs at least one element")]
    Empty,
    #[error("order relation has {found} entries, expected {expected}")]
    RelationShape { expected: usize, found: usize },
    #[error("not a partial order: {0}")]
    NotPartialOrder(OrderViolation),
    #[error("not complete: elements {a} and {b} have no least upper bound")]
    NoJoin { a: usize, b: usize },
    #[error("not complete: elements {a} and {b} have no greatest lower bound")]
    NoMeet { a: usize, b: usize },
    #[error("not complete: no least element")]
    NoBottom,
    #[error("lattice of size {size} exceeds the cap of {cap}")]
    CapExceeded { size: usize, cap: usize },
    #[error("element index {index} out of range for size {size}")]
    IndexOutOfRange { index: usize, size: usize },
}

/// A finite complete lattice.
///
/// `names` are carried along for display only and take no part in equality.
#[derive(Clone, Debug)]
pub struct SupLattice {
    size: usize,
    leq: Vec<bool>,
    join: Vec<usize>,
    meet: Vec<usize>,
    bottom: usize,
    top: usize,
    names: Vec<String>,
}

impl PartialEq for SupLattice {
    fn eq(&self, other: &Self) -> bool {
        self.size == other.size && self.leq == other.leq
    }
}

impl Eq for SupLattice {}

impl SupLattice {
    /// Builds a lattice from a full `size × size` order relation, row-major
    /// (`leq[a * size + b]` means `a ≤ b`).
    pub fn from_leq(size: usize, leq: Vec<bool>) -> Result<Self, LatticeError> {
        if size == 0 {
            return Err(LatticeError::Empty);
        }
        if leq.len() != size * size {
            return Err(LatticeError::RelationShape {
                expected: size * size,
                found: leq.len(),
            });
        }
        check_partial_order(size, &leq).map_err(LatticeError::NotPartialOrder)?;
        let le = |a: usize, b: usize| leq[a * size + b];

        let bottom = (0..size)
            .find(|&x| (0..size).all(|y| le(x, y)))
            .ok_or(LatticeError::NoBottom)?;

        let mut join = alloc::vec![0; size * size];
        let mut meet = alloc::vec![0; size * size];
        for a in 0..size {
            for b in 0..size {
                let upper: Vec<usize> = (0..size).filter(|&u| le(a, u) && le(b, u)).collect();
                let lub = upper
                    .iter()
                    .copied()
                    .find(|&u| upper.iter().all(|&v| le(u, v)))
                    .ok_or(LatticeError::NoJoin { a, b })?;
                join[a * size + b] = lub;
                let lower: Vec<usize> = (0..size).filter(|&l| le(l, a) && le(l, b)).collect();
                let glb = lower
                    .iter()
                    .copied()
                    .find(|&l| lower.iter().all(|&v| le(v, l)))
                    .ok_or(LatticeError::NoMeet { a, b })?;
                meet[a * size + b] = glb;
            }
        }
        let top = (0..size)
            .find(|&x| (0..size).all(|y| le(y, x)))
            .expect("a finite poset with a bottom and all binary joins has a top");
        Ok(Self {
            size,
            leq,
            join,
            meet,
            bottom,
            top,
            names: (0..size).map(|k| k.to_string()).collect(),
        })
    }

    /// Builds a lattice from generating pairs `(a, b)` meaning `a ≤ b`; the
    /// order is their reflexive-transitive closure.
    pub fn from_pairs(size: usize, pairs: &[(usize, usize)]) -> Result<Self, LatticeError> {
        let mut leq = alloc::vec![false; size * size];
        for &(a, b) in pairs {
            for x in [a, b] {
                if x >= size {
                    return Err(LatticeError::IndexOutOfRange { index: x, size });
                }
            }
            leq[a * size + b] = true;
        }
        Self::from_leq(size, transitive_closure(size, leq))
    }

    /// The chain `0 < 1 < … < n-1`.
    pub fn chain(n: usize) -> Result<Self, LatticeError> {
        let pairs: Vec<(usize, usize)> = (1..n).map(|k| (k - 1, k)).collect();
        Self::from_pairs(n, &pairs)
    }

    /// The powerset of an `n`-element set, elements indexed by bitmask.
    pub fn boolean(n: u32) -> Result<Self, LatticeError> {
        let size = 1usize << n;
        let mut leq = alloc::vec![false; size * size];
        for a in 0..size {
            for b in 0..size {
                leq[a * size + b] = a & b == a;
            }
        }
        Self::from_leq(size, leq)
    }

    pub fn with_names(mut self, names: Vec<String>) -> Self {
        if names.len() == self.size {
            self.names = names;
        }
        self
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, x: usize) -> &str {
        &self.names[x]
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a * self.size + b]
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq(a, b)
    }

    pub fn leq_relation(&self) -> &[bool] {
        &self.leq
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a * self.size + b]
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a * self.size + b]
    }

    /// `⋁ items`; the empty join is the bottom.
    pub fn join_all<I: IntoIterator<Item = usize>>(&self, items: I) -> usize {
        items
            .into_iter()
            .fold(self.bottom, |acc, x| self.join(acc, x))
    }

    /// `⋀ items`; the empty meet is the top.
    pub fn meet_all<I: IntoIterator<Item = usize>>(&self, items: I) -> usize {
        items.into_iter().fold(self.top, |acc, x| self.meet(acc, x))
    }

    /// Elements that are not the join of the elements strictly below them.
    pub fn join_irreducibles(&self) -> Vec<usize> {
        (0..self.size)
            .filter(|&x| self.join_all((0..self.size).filter(|&y| self.lt(y, x))) != x)
            .collect()
    }

    /// Whether `a ∧ (b ∨ c) = (a ∧ b) ∨ (a ∧ c)` for all triples; on a
    /// finite lattice this is the full frame distributivity law.
    pub fn is_distributive(&self) -> bool {
        let n = self.size;
        (0..n).all(|a| {
            (0..n).all(|b| {
                (0..n).all(|c| {
                    self.meet(a, self.join(b, c)) == self.join(self.meet(a, b), self.meet(a, c))
                })
            })
        })
    }

    /// Indices ordered so that every element comes after everything below it.
    pub fn linear_extension(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.size).collect();
        order.sort_by_key(|&x| ((0..self.size).filter(|&y| self.leq(y, x)).count(), x));
        order
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn two_chain_tables() {
        let l = SupLattice::chain(2).unwrap();
        assert_eq!((l.bottom(), l.top()), (0, 1));
        assert_eq!(l.join(0, 1), 1);
        assert_eq!(l.meet(0, 1), 0);
    }

    #[test]
    fn boolean_four_is_a_lattice() {
        let l = SupLattice::boolean(2).unwrap();
        assert_eq!(l.join(1, 2), 3);
        assert_eq!(l.meet(1, 2), 0);
        assert!(l.is_distributive());
    }

    #[test]
    fn missing_top_is_not_complete() {
        // 0 below two incomparable atoms, nothing above them.
        let err = SupLattice::from_pairs(3, &[(0, 1), (0, 2)]).unwrap_err();
        assert_eq!(err, LatticeError::NoJoin { a: 1, b: 2 });
    }

    #[test]
    fn non_antisymmetric_relation_rejected() {
        let err = SupLattice::from_pairs(2, &[(0, 1), (1, 0)]).unwrap_err();
        assert!(matches!(err, LatticeError::NotPartialOrder(_)));
        let err = SupLattice::from_leq(2, vec![true, true, false, false]).unwrap_err();
        assert!(matches!(err, LatticeError::NotPartialOrder(OrderViolation::NotReflexive { element: 1 })));
    }

    #[test]
    fn join_irreducibles_of_small_lattices() {
        assert_eq!(SupLattice::chain(2).unwrap().join_irreducibles(), vec![1]);
        assert_eq!(SupLattice::boolean(2).unwrap().join_irreducibles(), vec![1, 2]);
        assert_eq!(SupLattice::chain(3).unwrap().join_irreducibles(), vec![1, 2]);
    }

    #[test]
    fn pentagon_is_not_distributive() {
        // 0 < a < c < 1, 0 < b < 1
        let l = SupLattice::from_pairs(5, &[(0, 1), (1, 3), (3, 4), (0, 2), (2, 4)]).unwrap();
        assert!(!l.is_distributive());
    }

    #[test]
    fn empty_lattice_rejected() {
        assert_eq!(SupLattice::from_leq(0, vec![]), Err(LatticeError::Empty));
    }
}
