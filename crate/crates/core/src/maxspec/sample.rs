//! Random elements of `A` and `Max A` with small Gaussian-rational entries.

use alloc::vec::Vec;
use rand::Rng;

use super::{AlgElement, Algebra, Subspace};
use crate::exactnum::{ExactMatrix, GaussRational};

/// `(a + bi)/d` with `a, b ∈ [−3, 3]` and `d ∈ {1, 2, 3}`; zero a third of
/// the time so that sparse elements show up.
pub fn random_scalar<R: Rng + ?Sized>(rng: &mut R) -> GaussRational {
    if rng.gen_ratio(1, 3) {
        return GaussRational::zero();
    }
    let d = rng.gen_range(1..=3);
    let re = GaussRational::from_ratio(rng.gen_range(-3..=3), d);
    let im = GaussRational::from_ratio(rng.gen_range(-3..=3), d);
    &re + &(&im * &GaussRational::i())
}

pub fn random_element<R: Rng + ?Sized>(rng: &mut R, algebra: &Algebra) -> AlgElement {
    let v: Vec<GaussRational> = (0..algebra.dim()).map(|_| random_scalar(rng)).collect();
    AlgElement::from_vector(algebra, &v).expect("vector of the algebra's dimension")
}

/// The span of up to `dim A` random elements, biased towards low rank.
pub fn random_subspace<R: Rng + ?Sized>(rng: &mut R, algebra: &Algebra) -> Subspace {
    let dim = algebra.dim();
    let count = match rng.gen_range(0..4) {
        0 => 0,
        1 => 1,
        2 => rng.gen_range(1..=2.min(dim)),
        _ => rng.gen_range(0..=dim),
    };
    let spanners: Vec<AlgElement> = (0..count).map(|_| random_element(rng, algebra)).collect();
    Subspace::span(algebra, &spanners).expect("elements of the algebra")
}

/// An orthogonal projection in each block: `V(V*V)⁻¹V*` for a random `V`
/// of full column rank and random rank.
pub fn random_projection<R: Rng + ?Sized>(rng: &mut R, algebra: &Algebra) -> AlgElement {
    let blocks = algebra
        .blocks()
        .iter()
        .map(|&n| {
            let k = rng.gen_range(0..=n);
            loop {
                let entries: Vec<GaussRational> = (0..n * k).map(|_| random_scalar(rng)).collect();
                let v = ExactMatrix::new(n, k, entries).expect("n×k");
                if k == 0 {
                    break ExactMatrix::zeros(n, n);
                }
                let vs = v.conj_transpose();
                let gram = vs.mul(&v).expect("k×k");
                if let Some(inv) = gram.inverse() {
                    break v.mul(&inv).and_then(|m| m.mul(&vs)).expect("n×n");
                }
            }
        })
        .collect();
    AlgElement::new(algebra, blocks).expect("block shapes")
}

/// `⟨p⟩ ⊙ ⊤` for a random projection, or the right ideal generated by a
/// random subspace.
pub fn random_right_ideal<R: Rng + ?Sized>(rng: &mut R, algebra: &Algebra) -> Subspace {
    if rng.gen_bool(0.5) {
        let p = random_projection(rng, algebra);
        Subspace::span(algebra, &[p]).expect("element of the algebra").right_closure()
    } else {
        random_subspace(rng, algebra).right_closure()
    }
}
