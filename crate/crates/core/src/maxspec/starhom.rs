use alloc::vec::Vec;

use super::{AlgElement, Algebra, MaxError, Subspace};
use crate::exactnum::{ExactMatrix, GaussRational};

/// A unital `*`-homomorphism, given by the images of the standard basis of
/// the source (matrix units in flattened order).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarHom {
    source: Algebra,
    target: Algebra,
    images: Vec<AlgElement>,
}

impl StarHom {
    /// Verifies multiplicativity and the involution on all pairs of basis
    /// elements, and `f(1) = 1`.
    pub fn new(source: &Algebra, target: &Algebra, images: Vec<AlgElement>) -> Result<Self, MaxError> {
        if images.len() != source.dim() {
            return Err(MaxError::InvalidHom("one image per basis element is required"));
        }
        for x in &images {
            AlgElement::new(target, x.blocks().to_vec())?;
        }
        let f = Self {
            source: source.clone(),
            target: target.clone(),
            images,
        };
        let basis = basis(source);
        for a in &basis {
            if f.apply(&a.star()) != f.apply(a).star() {
                return Err(MaxError::InvalidHom("does not preserve the involution"));
            }
            for b in &basis {
                if f.apply(&a.mul(b)) != f.apply(a).mul(&f.apply(b)) {
                    return Err(MaxError::InvalidHom("not multiplicative"));
                }
            }
        }
        if f.apply(&AlgElement::identity(source)) != AlgElement::identity(target) {
            return Err(MaxError::InvalidHom("not unital"));
        }
        Ok(f)
    }

    /// Defines `f` by a function on basis elements.
    pub fn from_fn(
        source: &Algebra,
        target: &Algebra,
        on_basis: impl Fn(&AlgElement) -> AlgElement,
    ) -> Result<Self, MaxError> {
        Self::new(source, target, basis(source).iter().map(on_basis).collect())
    }

    pub fn identity(algebra: &Algebra) -> Self {
        Self {
            source: algebra.clone(),
            target: algebra.clone(),
            images: basis(algebra),
        }
    }

    pub fn source(&self) -> &Algebra {
        &self.source
    }

    pub fn target(&self) -> &Algebra {
        &self.target
    }

    pub fn apply(&self, x: &AlgElement) -> AlgElement {
        x.to_vector()
            .iter()
            .zip(&self.images)
            .filter(|(c, _)| !c.is_zero())
            .fold(AlgElement::zero(&self.target), |acc, (c, img)| acc.add(&img.scale(c)))
    }

    /// `g ∘ self`.
    pub fn then(&self, g: &StarHom) -> Result<StarHom, MaxError> {
        if self.target != g.source {
            return Err(MaxError::AlgebraMismatch);
        }
        Ok(Self {
            source: self.source.clone(),
            target: g.target.clone(),
            images: self.images.iter().map(|x| g.apply(x)).collect(),
        })
    }

    /// `Max f(M) = span f[M]`.
    pub fn max_image(&self, m: &Subspace) -> Result<Subspace, MaxError> {
        if m.algebra() != &self.source {
            return Err(MaxError::AlgebraMismatch);
        }
        let images: Vec<AlgElement> = m.basis().iter().map(|x| self.apply(x)).collect();
        Subspace::span(&self.target, &images)
    }

    /// `R f(J) = Max f(J) ⊙ ⊤` on right ideals.
    pub fn rs_functor(&self, j: &Subspace) -> Result<Subspace, MaxError> {
        if !j.is_right_ideal() {
            return Err(MaxError::NotRightIdeal);
        }
        Ok(self.max_image(j)?.right_closure())
    }
}

/// Matrix units, in the order of the flattened coordinates.
pub(crate) fn basis(algebra: &Algebra) -> Vec<AlgElement> {
    let mut out = Vec::with_capacity(algebra.dim());
    for (k, &n) in algebra.blocks().iter().enumerate() {
        for i in 0..n {
            for j in 0..n {
                out.push(AlgElement::unit_matrix(algebra, k, i, j));
            }
        }
    }
    out
}

/// The four unital `*`-homomorphisms `ℂ² → ℂ²`: identity, swap, and the two
/// maps through a coordinate.
pub fn unital_star_homs_c2_c2() -> Vec<StarHom> {
    let c2 = Algebra::diagonal(2);
    let one = GaussRational::one;
    let zero = GaussRational::zero;
    // images of e1 = (1,0) and e2 = (0,1)
    type Entry = fn() -> GaussRational;
    let tables: [[[Entry; 2]; 2]; 4] = [
        [[one, zero], [zero, one]],
        [[zero, one], [one, zero]],
        [[one, one], [zero, zero]],
        [[zero, zero], [one, one]],
    ];
    tables
        .iter()
        .map(|t| {
            let images = t.iter().map(|row| AlgElement::diagonal(&[row[0](), row[1]()])).collect();
            StarHom::new(&c2, &c2, images).expect("listed maps are unital *-homs")
        })
        .collect()
}

/// Orthogonal projection onto the line through `v`.
fn projection(v: [GaussRational; 2]) -> ExactMatrix {
    let norm = &v[0].norm_sqr() + &v[1].norm_sqr();
    let inv = GaussRational::from(norm.recip());
    let mut m = ExactMatrix::zeros(2, 2);
    for i in 0..2 {
        for j in 0..2 {
            m.set(i, j, &(&v[i] * &v[j].conj()) * &inv);
        }
    }
    m
}

/// Unital `*`-homomorphisms `ℂ² → M₂`: the two scalar embeddings and
/// `(a, b) ↦ a·p + b·(1 − p)` for the projections `p` onto the lines through
/// `(1,0)`, `(0,1)`, `(1,1)`, `(1,−1)`, `(1,i)`, `(1,−i)` and `(1,2)`.
pub fn unital_star_homs_c2_m2() -> Vec<StarHom> {
    let c2 = Algebra::diagonal(2);
    let m2 = Algebra::matrix(2);
    let g = |re: i64, im: i64| GaussRational::from_parts(re, im);
    let lines = [
        [g(1, 0), g(0, 0)],
        [g(0, 0), g(1, 0)],
        [g(1, 0), g(1, 0)],
        [g(1, 0), g(-1, 0)],
        [g(1, 0), g(0, 1)],
        [g(1, 0), g(0, -1)],
        [g(1, 0), g(2, 0)],
    ];
    let id = ExactMatrix::identity(2);
    let mut pairs = alloc::vec![(id.clone(), ExactMatrix::zeros(2, 2)), (ExactMatrix::zeros(2, 2), id.clone())];
    for v in lines {
        let p = projection(v);
        let q = id.add(&p.scale(&-GaussRational::one())).expect("2x2");
        pairs.push((p, q));
    }
    pairs
        .into_iter()
        .map(|(p, q)| {
            let images = alloc::vec![
                AlgElement::new(&m2, alloc::vec![p]).expect("2x2"),
                AlgElement::new(&m2, alloc::vec![q]).expect("2x2"),
            ];
            StarHom::new(&c2, &m2, images).expect("orthogonal projections summing to 1")
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn c2(x: i64, y: i64) -> AlgElement {
        AlgElement::diagonal(&[GaussRational::from(x), GaussRational::from(y)])
    }

    fn line(x: i64, y: i64) -> Subspace {
        Subspace::span(&Algebra::diagonal(2), &[c2(x, y)]).unwrap()
    }

    fn diag_embedding() -> StarHom {
        unital_star_homs_c2_m2().remove(2)
    }

    #[test]
    fn rejects_non_homs() {
        let c2a = Algebra::diagonal(2);
        // (a, b) ↦ (a, a + b) is linear and unital but not multiplicative
        let bad = StarHom::new(&c2a, &c2a, vec![c2(1, 1), c2(0, 1)]);
        assert_eq!(bad, Err(MaxError::InvalidHom("not multiplicative")));
        let not_unital = StarHom::new(&c2a, &c2a, vec![c2(1, 0), c2(0, 0)]);
        assert_eq!(not_unital, Err(MaxError::InvalidHom("not unital")));
        let m1 = Algebra::matrix(1);
        assert!(StarHom::new(&c2a, &m1, vec![]).is_err());
    }

    #[test]
    fn max_of_identity_is_identity() {
        let id = StarHom::identity(&Algebra::diagonal(2));
        for s in [line(1, 0), line(1, 1), line(2, -3)] {
            assert_eq!(id.max_image(&s).unwrap(), s);
        }
    }

    #[test]
    fn diagonal_embedding_images() {
        let f = diag_embedding();
        let m2 = Algebra::matrix(2);
        let id2 = AlgElement::identity(&m2);
        assert_eq!(f.max_image(&line(1, 1)).unwrap(), Subspace::unit(&m2));
        let flip = AlgElement::unit_matrix(&m2, 0, 0, 0).sub(&AlgElement::unit_matrix(&m2, 0, 1, 1));
        assert_eq!(f.max_image(&line(1, -1)).unwrap(), Subspace::span(&m2, &[flip]).unwrap());
        assert_eq!(f.apply(&c2(1, 1)), id2);
    }

    #[test]
    fn rs_functor_examples() {
        let homs = unital_star_homs_c2_c2();
        let swap = &homs[1];
        assert_eq!(swap.rs_functor(&line(1, 0)).unwrap(), line(0, 1));
        let id = StarHom::identity(&Algebra::diagonal(2));
        assert_eq!(id.rs_functor(&line(1, 0)).unwrap(), line(1, 0));
        assert_eq!(id.rs_functor(&line(1, 1)), Err(MaxError::NotRightIdeal));
        let signatures: Vec<(Subspace, Subspace)> = homs
            .iter()
            .map(|f| (f.rs_functor(&line(1, 0)).unwrap(), f.rs_functor(&line(0, 1)).unwrap()))
            .collect();
        for i in 0..4 {
            for j in i + 1..4 {
                assert_ne!(signatures[i], signatures[j]);
            }
        }
    }

    #[test]
    fn hom_counts() {
        assert_eq!(unital_star_homs_c2_c2().len(), 4);
        assert_eq!(unital_star_homs_c2_m2().len(), 9);
    }

    #[test]
    fn composition_is_functorial() {
        let f = &unital_star_homs_c2_c2()[1];
        let g = &unital_star_homs_c2_m2()[8];
        let gf = f.then(g).unwrap();
        for s in [line(1, 0), line(1, 1), line(1, 2), Subspace::top(&Algebra::diagonal(2))] {
            assert_eq!(gf.max_image(&s).unwrap(), g.max_image(&f.max_image(&s).unwrap()).unwrap());
        }
        assert_eq!(g.then(f), Err(MaxError::AlgebraMismatch));
    }
}
