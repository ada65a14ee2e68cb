use alloc::vec::Vec;
use core::fmt;

use super::{AlgElement, Algebra, MaxError};
use crate::exactnum::RowSpace;

/// An element of `Max A`: a linear subspace of the algebra.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subspace {
    algebra: Algebra,
    space: RowSpace,
}

impl Subspace {
    pub fn span(algebra: &Algebra, spanners: &[AlgElement]) -> Result<Self, MaxError> {
        for x in spanners {
            AlgElement::new(algebra, x.blocks().to_vec())?;
        }
        let vectors: Vec<_> = spanners.iter().map(AlgElement::to_vector).collect();
        Ok(Self {
            algebra: algebra.clone(),
            space: RowSpace::span(algebra.dim(), vectors)?,
        })
    }

    pub fn from_row_space(algebra: &Algebra, space: RowSpace) -> Result<Self, MaxError> {
        if space.ambient() != algebra.dim() {
            return Err(MaxError::Shape {
                expected: alloc::format!("{}", algebra.dim()),
                found: alloc::format!("{}", space.ambient()),
            });
        }
        Ok(Self {
            algebra: algebra.clone(),
            space,
        })
    }

    pub fn zero(algebra: &Algebra) -> Self {
        Self {
            algebra: algebra.clone(),
            space: RowSpace::zero(algebra.dim()),
        }
    }

    pub fn top(algebra: &Algebra) -> Self {
        Self {
            algebra: algebra.clone(),
            space: RowSpace::full(algebra.dim()),
        }
    }

    /// `e = ⟨1⟩`.
    pub fn unit(algebra: &Algebra) -> Self {
        Self::span(algebra, &[AlgElement::identity(algebra)]).expect("identity has the right shape")
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn row_space(&self) -> &RowSpace {
        &self.space
    }

    pub fn rank(&self) -> usize {
        self.space.rank()
    }

    pub fn is_zero(&self) -> bool {
        self.space.is_zero()
    }

    pub fn is_top(&self) -> bool {
        self.space.is_full()
    }

    /// The canonical basis, as algebra elements.
    pub fn basis(&self) -> Vec<AlgElement> {
        self.space
            .basis_vectors()
            .map(|v| AlgElement::from_vector(&self.algebra, v).expect("vector of length dim"))
            .collect()
    }

    pub fn contains(&self, x: &AlgElement) -> Result<bool, MaxError> {
        Ok(self.space.contains(&x.to_vector())?)
    }

    fn same_algebra(&self, other: &Subspace) -> Result<(), MaxError> {
        if self.algebra != other.algebra {
            return Err(MaxError::AlgebraMismatch);
        }
        Ok(())
    }

    pub fn leq(&self, other: &Subspace) -> bool {
        self.algebra == other.algebra && self.space.leq(&other.space)
    }

    pub fn join(&self, other: &Subspace) -> Result<Subspace, MaxError> {
        self.same_algebra(other)?;
        Ok(Self {
            algebra: self.algebra.clone(),
            space: self.space.join(&other.space)?,
        })
    }

    pub fn meet(&self, other: &Subspace) -> Result<Subspace, MaxError> {
        self.same_algebra(other)?;
        Ok(Self {
            algebra: self.algebra.clone(),
            space: self.space.meet(&other.space)?,
        })
    }

    /// `span{mᵢnⱼ}` over the two bases.
    pub fn product(&self, other: &Subspace) -> Result<Subspace, MaxError> {
        self.same_algebra(other)?;
        let (ms, ns) = (self.basis(), other.basis());
        let products: Vec<AlgElement> = ms.iter().flat_map(|m| ns.iter().map(move |n| m.mul(n))).collect();
        Self::span(&self.algebra, &products)
    }

    /// `a ⊙ b ⊙ c`.
    pub fn product3(&self, b: &Subspace, c: &Subspace) -> Result<Subspace, MaxError> {
        self.product(b)?.product(c)
    }

    pub fn star(&self) -> Subspace {
        let stars: Vec<AlgElement> = self.basis().iter().map(AlgElement::star).collect();
        Self::span(&self.algebra, &stars).expect("same algebra")
    }

    pub fn is_right_ideal(&self) -> bool {
        self.product(&Self::top(&self.algebra)).expect("same algebra").leq(self)
    }

    pub fn is_left_ideal(&self) -> bool {
        Self::top(&self.algebra).product(self).expect("same algebra").leq(self)
    }

    /// `M ⊙ ⊤`, the least right ideal containing `M`.
    pub fn right_closure(&self) -> Subspace {
        self.product(&Self::top(&self.algebra)).expect("same algebra")
    }

    /// `⊤ ⊙ M ⊙ ⊤`, the least two-sided ideal containing `M`.
    pub fn two_sided_closure(&self) -> Subspace {
        let top = Self::top(&self.algebra);
        top.product(self).and_then(|x| x.product(&top)).expect("same algebra")
    }

    /// `M ⊙ M* ⊙ M = M`; only defined for right ideals.
    pub fn gelfand_identity(&self) -> Result<bool, MaxError> {
        if !self.is_right_ideal() {
            return Err(MaxError::NotRightIdeal);
        }
        Ok(self.product3(&self.star(), self)? == *self)
    }
}

impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "⟨")?;
        for (k, x) in self.basis().iter().enumerate() {
            if k > 0 {
                write!(f, "; ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "⟩")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{ExactMatrix, GaussRational};
    use alloc::string::ToString;
    use alloc::vec;

    fn c2(x: i64, y: i64) -> AlgElement {
        AlgElement::diagonal(&[GaussRational::from(x), GaussRational::from(y)])
    }

    fn m2(values: [i64; 4]) -> AlgElement {
        AlgElement::new(&Algebra::matrix(2), vec![ExactMatrix::from_ints(2, 2, &values).unwrap()]).unwrap()
    }

    fn e(i: usize, j: usize) -> AlgElement {
        AlgElement::unit_matrix(&Algebra::matrix(2), 0, i, j)
    }

    fn span_m2(xs: &[AlgElement]) -> Subspace {
        Subspace::span(&Algebra::matrix(2), xs).unwrap()
    }

    /// Top-row matrices.
    fn r() -> Subspace {
        span_m2(&[e(0, 0), e(0, 1)])
    }

    /// First-column matrices.
    fn l_prime() -> Subspace {
        span_m2(&[e(0, 0), e(1, 0)])
    }

    /// Symmetric matrices.
    fn p() -> Subspace {
        span_m2(&[e(0, 0), m2([0, 1, 1, 0]), e(1, 1)])
    }

    #[test]
    fn span_examples() {
        let m = Algebra::matrix(2);
        assert_eq!(Subspace::span(&m, &[AlgElement::identity(&m)]).unwrap(), Subspace::unit(&m));
        assert!(Subspace::span(&m, &[]).unwrap().is_zero());
        let c = Algebra::diagonal(2);
        assert!(Subspace::span(&c, &[c2(1, 1), c2(1, -1)]).unwrap().is_top());
    }

    #[test]
    fn join_and_meet() {
        let c = Algebra::diagonal(2);
        let a = Subspace::span(&c, &[c2(1, 0)]).unwrap();
        let b = Subspace::span(&c, &[c2(0, 1)]).unwrap();
        let d = Subspace::span(&c, &[c2(1, 1)]).unwrap();
        assert_eq!(a.join(&Subspace::zero(&c)).unwrap(), a);
        assert!(a.join(&b).unwrap().is_top());
        assert!(d.meet(&a).unwrap().is_zero());
        assert_eq!(a.join(&Subspace::zero(&Algebra::matrix(1))), Err(MaxError::AlgebraMismatch));
    }

    #[test]
    fn row_times_top_times_column_is_corner() {
        let m = Algebra::matrix(2);
        let x = r().product3(&Subspace::top(&m), &l_prime()).unwrap();
        assert_eq!(x, span_m2(&[e(0, 0)]));
        assert!(x.leq(&p()));
        assert!(!r().leq(&p()) && !l_prime().leq(&p()));
    }

    #[test]
    fn pushout_identities() {
        let l = span_m2(&[m2([1, 1, 0, 0]), m2([0, 0, 1, 1])]);
        let rr = span_m2(&[m2([1, 0, 1, 0]), m2([0, 1, 0, 1])]);
        let id = span_m2(&[m2([1, 0, 0, 1])]);
        let flip = span_m2(&[m2([1, 0, 0, -1])]);
        assert_eq!(l.product3(&id, &rr).unwrap().rank(), 4);
        assert_eq!(l.product3(&flip, &rr).unwrap().rank(), 0);
    }

    #[test]
    fn star_examples() {
        assert_eq!(r().star(), l_prime());
        assert_eq!(p().star(), p());
        let c = Algebra::diagonal(2);
        let i_line = Subspace::span(&c, &[AlgElement::diagonal(&[GaussRational::one(), GaussRational::i()])]).unwrap();
        assert_eq!(i_line.star().star(), i_line);
        assert_ne!(i_line.star(), i_line);
    }

    #[test]
    fn ideals_and_closure() {
        let c = Algebra::diagonal(2);
        let d = Subspace::span(&c, &[c2(1, 1)]).unwrap();
        assert!(d.two_sided_closure().is_top());
        assert!(r().is_right_ideal());
        assert!(!r().is_left_ideal());
        assert_eq!(r().right_closure(), r());
        assert!(Subspace::zero(&c).two_sided_closure().is_zero());
    }

    #[test]
    fn gelfand_identity_examples() {
        let m = Algebra::matrix(2);
        assert_eq!(r().gelfand_identity(), Ok(true));
        assert_eq!(Subspace::top(&m).gelfand_identity(), Ok(true));
        assert_eq!(Subspace::zero(&m).gelfand_identity(), Ok(true));
        assert_eq!(l_prime().gelfand_identity(), Err(MaxError::NotRightIdeal));
    }

    #[test]
    fn display() {
        let c = Algebra::diagonal(2);
        assert_eq!(Subspace::span(&c, &[c2(2, 2)]).unwrap().to_string(), "⟨(1,1)⟩");
        assert_eq!(span_m2(&[e(0, 0)]).to_string(), "⟨[[1, 0], [0, 0]]⟩");
    }
}
