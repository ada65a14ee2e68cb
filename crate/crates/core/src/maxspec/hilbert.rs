use alloc::vec::Vec;

use super::{Algebra, MaxError, Subspace};
use crate::exactnum::{GaussRational, RowSpace};

/// The Hilbert point of `Max A` induced by the projection of `A` onto one of
/// its blocks `Mₙ = B(ℂⁿ)`, acting on subspaces of `ℂⁿ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertPoint {
    algebra: Algebra,
    block: usize,
    n: usize,
}

impl HilbertPoint {
    pub fn new(algebra: &Algebra, block: usize) -> Result<Self, MaxError> {
        let n = algebra.check_block(block)?;
        Ok(Self {
            algebra: algebra.clone(),
            block,
            n,
        })
    }

    /// One point per block.
    pub fn all(algebra: &Algebra) -> Vec<Self> {
        (0..algebra.blocks().len())
            .map(|k| Self::new(algebra, k).expect("block in range"))
            .collect()
    }

    pub fn block(&self) -> usize {
        self.block
    }

    /// Dimension of the Hilbert space `ℂⁿ`.
    pub fn space_dim(&self) -> usize {
        self.n
    }

    /// `π̃(V)(W) = span{π(a)x : a ∈ V, x ∈ W}`.
    ///
    /// With this formula `π̃(V ⊙ V′)(W) = π̃(V)(π̃(V′)(W))`.
    pub fn act(&self, v: &Subspace, w: &RowSpace) -> Result<RowSpace, MaxError> {
        if v.algebra() != &self.algebra {
            return Err(MaxError::AlgebraMismatch);
        }
        if w.ambient() != self.n {
            return Err(MaxError::Shape {
                expected: alloc::format!("{}", self.n),
                found: alloc::format!("{}", w.ambient()),
            });
        }
        let mut images = Vec::new();
        for a in v.basis() {
            let m = a.block(self.block);
            for x in w.basis_vectors() {
                let y: Vec<GaussRational> = (0..self.n)
                    .map(|i| {
                        (0..self.n).fold(GaussRational::zero(), |acc, j| &acc + &(m.get(i, j) * &x[j]))
                    })
                    .collect();
                images.push(y);
            }
        }
        Ok(RowSpace::span(self.n, images)?)
    }
}
