//! The commutative reflection of `A = ⊕ Mₙₖ`: the largest commutative
//! quotient `A / [A, A]`, which is `ℂᶜ` for `c` the number of `1×1` blocks.
//! Its spectrum is the discrete space on `c` points, whose frame of opens is
//! the Boolean algebra `2ᶜ`.

use alloc::vec::Vec;

use super::starhom::basis;
use super::{Algebra, MaxError, Subspace};
use crate::locale::{FiniteFrame, Poset};

#[derive(Clone, Debug)]
pub struct CommutativeReflection {
    pub reflection: Algebra,
    /// Opens of the spectrum of the reflection.
    pub frame: FiniteFrame,
    /// The two-sided ideal generated by all commutators.
    pub commutator_ideal: Subspace,
    /// `dim A − dim [A, A]`, which must equal the number of `1×1` blocks.
    pub quotient_dim: usize,
}

impl CommutativeReflection {
    /// The commutator count agrees with the block count.
    pub fn consistent(&self) -> bool {
        self.quotient_dim == self.reflection.dim()
    }
}

pub fn commutative_reflection(algebra: &Algebra) -> Result<CommutativeReflection, MaxError> {
    let c = algebra.commutative_blocks();
    let b = basis(algebra);
    let commutators: Vec<_> = b
        .iter()
        .flat_map(|x| b.iter().map(move |y| x.mul(y).sub(&y.mul(x))))
        .collect();
    let commutator_ideal = Subspace::span(algebra, &commutators)?.two_sided_closure();
    let frame = FiniteFrame::of_downsets(Poset::antichain(c)).expect("at most the block count of points");
    Ok(CommutativeReflection {
        reflection: Algebra::diagonal(c),
        frame,
        quotient_dim: algebra.dim() - commutator_ideal.rank(),
        commutator_ideal,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn matrix_algebra_has_trivial_reflection() {
        let r = commutative_reflection(&Algebra::matrix(2)).unwrap();
        assert!(r.consistent());
        assert_eq!(r.frame.size(), 1);
        assert!(r.commutator_ideal.is_top());
    }

    #[test]
    fn m2_plus_c_reflects_to_c() {
        let r = commutative_reflection(&Algebra::new(vec![2, 1]).unwrap()).unwrap();
        assert!(r.consistent());
        assert_eq!(r.reflection, Algebra::diagonal(1));
        assert_eq!(r.frame.size(), 2);
    }

    #[test]
    fn diagonal_algebra_is_its_own_reflection() {
        let r = commutative_reflection(&Algebra::diagonal(3)).unwrap();
        assert!(r.consistent());
        assert!(r.commutator_ideal.is_zero());
        assert_eq!(r.frame.size(), 8);
        assert!(r.frame.is_boolean());
    }
}
