use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use super::MaxError;
use crate::exactnum::{ExactMatrix, GaussRational};

/// `⊕ₖ Mₙₖ(ℚ[i])`, identified with `ℚ[i]^dim` by concatenating the blocks
/// in row-major order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Algebra {
    blocks: Vec<usize>,
}

impl Algebra {
    /// Blocks of size zero are rejected; an empty list is the zero algebra.
    pub fn new(blocks: Vec<usize>) -> Result<Self, MaxError> {
        if blocks.contains(&0) {
            return Err(MaxError::Parse(String::from("block sizes must be positive")));
        }
        Ok(Self { blocks })
    }

    /// `ℂⁿ`.
    pub fn diagonal(n: usize) -> Self {
        Self {
            blocks: alloc::vec![1; n],
        }
    }

    /// `Mₙ`.
    pub fn matrix(n: usize) -> Self {
        Self {
            blocks: alloc::vec![n],
        }
    }

    pub fn blocks(&self) -> &[usize] {
        &self.blocks
    }

    pub fn dim(&self) -> usize {
        self.blocks.iter().map(|n| n * n).sum()
    }

    /// Position of block `k` in the flattened vector.
    pub fn offset(&self, k: usize) -> usize {
        self.blocks[..k].iter().map(|n| n * n).sum()
    }

    pub fn is_commutative(&self) -> bool {
        self.blocks.iter().all(|&n| n == 1)
    }

    /// Number of one-dimensional blocks.
    pub fn commutative_blocks(&self) -> usize {
        self.blocks.iter().filter(|&&n| n == 1).count()
    }

    pub fn check_block(&self, k: usize) -> Result<usize, MaxError> {
        self.blocks.get(k).copied().ok_or(MaxError::BadBlock {
            index: k,
            blocks: self.blocks.len(),
        })
    }
}

impl fmt::Display for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "blocks=[")?;
        for (k, n) in self.blocks.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{n}")?;
        }
        write!(f, "]")
    }
}

/// Accepts `blocks=[2,1]` or the bare list `[2,1]`.
impl FromStr for Algebra {
    type Err = MaxError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let list = s.strip_prefix("blocks=").unwrap_or(s).trim();
        let inner = list
            .strip_prefix('[')
            .and_then(|l| l.strip_suffix(']'))
            .ok_or_else(|| MaxError::Parse(String::from(s)))?;
        let blocks = if inner.trim().is_empty() {
            Vec::new()
        } else {
            inner
                .split(',')
                .map(|t| t.trim().parse::<usize>().map_err(|_| MaxError::Parse(String::from(s))))
                .collect::<Result<Vec<_>, _>>()?
        };
        Self::new(blocks)
    }
}

/// An element of an [`Algebra`], one square matrix per block.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AlgElement {
    blocks: Vec<ExactMatrix>,
}

impl AlgElement {
    pub fn new(algebra: &Algebra, blocks: Vec<ExactMatrix>) -> Result<Self, MaxError> {
        let ok = blocks.len() == algebra.blocks().len()
            && blocks
                .iter()
                .zip(algebra.blocks())
                .all(|(m, &n)| m.rows() == n && m.cols() == n);
        if !ok {
            let shape = |bs: &mut dyn Iterator<Item = (usize, usize)>| {
                let parts: Vec<String> = bs.map(|(r, c)| alloc::format!("{r}x{c}")).collect();
                parts.join("+")
            };
            return Err(MaxError::Shape {
                expected: shape(&mut algebra.blocks().iter().map(|&n| (n, n))),
                found: shape(&mut blocks.iter().map(|m| (m.rows(), m.cols()))),
            });
        }
        Ok(Self { blocks })
    }

    pub fn zero(algebra: &Algebra) -> Self {
        Self {
            blocks: algebra.blocks().iter().map(|&n| ExactMatrix::zeros(n, n)).collect(),
        }
    }

    pub fn identity(algebra: &Algebra) -> Self {
        Self {
            blocks: algebra.blocks().iter().map(|&n| ExactMatrix::identity(n)).collect(),
        }
    }

    /// The matrix unit `E_ij` in block `k`.
    pub fn unit_matrix(algebra: &Algebra, k: usize, i: usize, j: usize) -> Self {
        let mut e = Self::zero(algebra);
        e.blocks[k].set(i, j, GaussRational::one());
        e
    }

    /// An element of `ℂⁿ` from its coordinates.
    pub fn diagonal(values: &[GaussRational]) -> Self {
        Self {
            blocks: values
                .iter()
                .map(|v| ExactMatrix::new(1, 1, alloc::vec![v.clone()]).expect("1x1"))
                .collect(),
        }
    }

    pub fn from_vector(algebra: &Algebra, v: &[GaussRational]) -> Result<Self, MaxError> {
        if v.len() != algebra.dim() {
            return Err(MaxError::Shape {
                expected: alloc::format!("{}", algebra.dim()),
                found: alloc::format!("{}", v.len()),
            });
        }
        let mut rest = v;
        let blocks = algebra
            .blocks()
            .iter()
            .map(|&n| {
                let (head, tail) = rest.split_at(n * n);
                rest = tail;
                ExactMatrix::new(n, n, head.to_vec()).expect("n*n entries")
            })
            .collect();
        Ok(Self { blocks })
    }

    pub fn to_vector(&self) -> Vec<GaussRational> {
        self.blocks.iter().flat_map(|m| m.entries().iter().cloned()).collect()
    }

    pub fn blocks(&self) -> &[ExactMatrix] {
        &self.blocks
    }

    pub fn block(&self, k: usize) -> &ExactMatrix {
        &self.blocks[k]
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(ExactMatrix::is_zero)
    }

    pub fn mul(&self, rhs: &AlgElement) -> AlgElement {
        AlgElement {
            blocks: self
                .blocks
                .iter()
                .zip(&rhs.blocks)
                .map(|(a, b)| a.mul(b).expect("matching blocks"))
                .collect(),
        }
    }

    pub fn add(&self, rhs: &AlgElement) -> AlgElement {
        AlgElement {
            blocks: self
                .blocks
                .iter()
                .zip(&rhs.blocks)
                .map(|(a, b)| a.add(b).expect("matching blocks"))
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &AlgElement) -> AlgElement {
        self.add(&rhs.scale(&-GaussRational::one()))
    }

    pub fn scale(&self, s: &GaussRational) -> AlgElement {
        AlgElement {
            blocks: self.blocks.iter().map(|m| m.scale(s)).collect(),
        }
    }

    /// Blockwise conjugate transpose.
    pub fn star(&self) -> AlgElement {
        AlgElement {
            blocks: self.blocks.iter().map(ExactMatrix::conj_transpose).collect(),
        }
    }
}

impl fmt::Display for AlgElement {
    /// Tuples for `ℂⁿ`, otherwise blocks joined by `⊕`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.blocks.iter().all(|m| m.rows() == 1) {
            write!(f, "(")?;
            for (k, m) in self.blocks.iter().enumerate() {
                if k > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", m.get(0, 0))?;
            }
            return write!(f, ")");
        }
        for (k, m) in self.blocks.iter().enumerate() {
            if k > 0 {
                write!(f, " ⊕ ")?;
            }
            if m.rows() == 1 {
                write!(f, "{}", m.get(0, 0))?;
            } else {
                write!(f, "{m}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    #[test]
    fn parse_and_display() {
        let a: Algebra = "blocks=[2,1]".parse().unwrap();
        assert_eq!(a.blocks(), &[2, 1]);
        assert_eq!(a.dim(), 5);
        assert_eq!(a.to_string(), "blocks=[2,1]");
        assert_eq!("[1, 1]".parse::<Algebra>().unwrap(), Algebra::diagonal(2));
        assert_eq!("blocks=[]".parse::<Algebra>().unwrap().dim(), 0);
        assert!("blocks=[0]".parse::<Algebra>().is_err());
        assert!("blocks=2".parse::<Algebra>().is_err());
    }

    #[test]
    fn star_laws_on_matrix_units() {
        let a = Algebra::new(vec![2, 1]).unwrap();
        let x = AlgElement::unit_matrix(&a, 0, 0, 1).scale(&GaussRational::i());
        let y = AlgElement::unit_matrix(&a, 0, 1, 1).add(&AlgElement::identity(&a));
        assert_eq!(x.star().star(), x);
        assert_eq!(x.mul(&y).star(), y.star().mul(&x.star()));
    }

    #[test]
    fn vector_round_trip() {
        let a = Algebra::new(vec![2, 1]).unwrap();
        let x = AlgElement::unit_matrix(&a, 0, 1, 0).add(&AlgElement::unit_matrix(&a, 1, 0, 0));
        let v = x.to_vector();
        assert_eq!(v.len(), 5);
        assert_eq!(AlgElement::from_vector(&a, &v).unwrap(), x);
        assert!(AlgElement::from_vector(&a, &v[..4]).is_err());
        assert!(AlgElement::new(&a, vec![ExactMatrix::identity(2)]).is_err());
    }

    #[test]
    fn display() {
        let c2 = Algebra::diagonal(2);
        assert_eq!(AlgElement::identity(&c2).to_string(), "(1,1)");
        let m2 = Algebra::matrix(2);
        assert_eq!(AlgElement::identity(&m2).to_string(), "[[1, 0], [0, 1]]");
    }
}
