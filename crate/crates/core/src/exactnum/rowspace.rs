use alloc::vec::Vec;
use core::fmt;

use super::{ExactError, ExactMatrix, GaussRational};

/// A linear subspace of `ℚ[i]ⁿ`, stored as the nonzero rows of its reduced
/// row-echelon basis. Two row spaces are equal iff their bases are identical.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RowSpace {
    ambient: usize,
    basis: ExactMatrix,
}

impl RowSpace {
    pub fn zero(ambient: usize) -> Self {
        Self {
            ambient,
            basis: ExactMatrix::zeros(0, ambient),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Self {
            ambient,
            basis: ExactMatrix::identity(ambient),
        }
    }

    pub fn span<I, V>(ambient: usize, vectors: I) -> Result<Self, ExactError>
    where
        I: IntoIterator<Item = V>,
        V: AsRef<[GaussRational]>,
    {
        let mut entries = Vec::new();
        let mut rows = 0;
        for v in vectors {
            let v = v.as_ref();
            if v.len() != ambient {
                return Err(ExactError::DimensionMismatch {
                    expected: ambient,
                    found: v.len(),
                });
            }
            if v.iter().all(GaussRational::is_zero) {
                continue;
            }
            entries.extend(v.iter().cloned());
            rows += 1;
        }
        let m = ExactMatrix::new(rows, ambient, entries)?;
        Ok(Self::from_matrix(m))
    }

    /// Canonical row space of an arbitrary matrix.
    pub fn from_matrix(mut m: ExactMatrix) -> Self {
        let ambient = m.cols();
        let rank = m.rref_in_place();
        let mut entries = m.into_entries();
        entries.truncate(rank * ambient);
        let basis = ExactMatrix::new(rank, ambient, entries).expect("truncated to rank rows");
        Self { ambient, basis }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn rank(&self) -> usize {
        self.basis.rows()
    }

    pub fn basis(&self) -> &ExactMatrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> impl Iterator<Item = &[GaussRational]> {
        self.basis.row_iter()
    }

    pub fn is_zero(&self) -> bool {
        self.rank() == 0
    }

    pub fn is_full(&self) -> bool {
        self.rank() == self.ambient
    }

    fn pivots(&self) -> Vec<usize> {
        self.basis_vectors()
            .map(|row| {
                row.iter()
                    .position(|x| !x.is_zero())
                    .expect("basis rows are nonzero")
            })
            .collect()
    }

    /// Membership test by reduction against the RREF pivots.
    pub fn contains(&self, v: &[GaussRational]) -> Result<bool, ExactError> {
        if v.len() != self.ambient {
            return Err(ExactError::DimensionMismatch {
                expected: self.ambient,
                found: v.len(),
            });
        }
        let mut rest: Vec<GaussRational> = v.to_vec();
        for (row, p) in self.basis_vectors().zip(self.pivots()) {
            let factor = rest[p].clone();
            if factor.is_zero() {
                continue;
            }
            for (x, b) in rest.iter_mut().zip(row) {
                *x = &*x - &(&factor * b);
            }
        }
        Ok(rest.iter().all(GaussRational::is_zero))
    }

    pub fn leq(&self, other: &RowSpace) -> bool {
        self.ambient == other.ambient
            && self.rank() <= other.rank()
            && self
                .basis_vectors()
                .all(|v| other.contains(v).expect("same ambient"))
    }

    pub fn join(&self, other: &RowSpace) -> Result<RowSpace, ExactError> {
        self.check_ambient(other)?;
        RowSpace::span(
            self.ambient,
            self.basis_vectors().chain(other.basis_vectors()),
        )
    }

    /// Intersection by the Zassenhaus algorithm: row-reduce `[U U; W 0]`;
    /// rows whose left half vanishes carry a basis of `U ∩ W` on the right.
    pub fn meet(&self, other: &RowSpace) -> Result<RowSpace, ExactError> {
        self.check_ambient(other)?;
        let n = self.ambient;
        let mut rows = Vec::new();
        for u in self.basis_vectors() {
            let mut r = u.to_vec();
            r.extend(u.iter().cloned());
            rows.push(r);
        }
        for w in other.basis_vectors() {
            let mut r = w.to_vec();
            r.extend(core::iter::repeat_n(GaussRational::zero(), n));
            rows.push(r);
        }
        let (reduced, rank) = ExactMatrix::from_rows(2 * n, rows)?.rref();
        let meet_rows = (0..rank)
            .map(|r| reduced.row(r))
            .filter(|row| row[..n].iter().all(GaussRational::is_zero))
            .map(|row| row[n..].to_vec());
        RowSpace::span(n, meet_rows)
    }

    fn check_ambient(&self, other: &RowSpace) -> Result<(), ExactError> {
        if self.ambient != other.ambient {
            return Err(ExactError::DimensionMismatch {
                expected: self.ambient,
                found: other.ambient,
            });
        }
        Ok(())
    }
}

impl fmt::Display for RowSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "⟨")?;
        for (k, row) in self.basis_vectors().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "(")?;
            for (c, x) in row.iter().enumerate() {
                if c > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, ")")?;
        }
        write!(f, "⟩")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn v(xs: &[i64]) -> Vec<GaussRational> {
        xs.iter().map(|&x| GaussRational::from(x)).collect()
    }

    #[test]
    fn distinct_lines_meet_in_zero() {
        let a = RowSpace::span(2, [v(&[1, 1])]).unwrap();
        let b = RowSpace::span(2, [v(&[1, 0])]).unwrap();
        assert_eq!(a.meet(&b).unwrap(), RowSpace::zero(2));
        assert_eq!(a.join(&b).unwrap(), RowSpace::full(2));
    }

    #[test]
    fn meet_of_planes_in_three_space() {
        let a = RowSpace::span(3, [v(&[1, 0, 0]), v(&[0, 1, 0])]).unwrap();
        let b = RowSpace::span(3, [v(&[0, 1, 0]), v(&[0, 0, 1])]).unwrap();
        assert_eq!(
            a.meet(&b).unwrap(),
            RowSpace::span(3, [v(&[0, 1, 0])]).unwrap()
        );
    }

    #[test]
    fn span_is_canonical() {
        let a = RowSpace::span(2, [v(&[1, 1]), v(&[1, -1])]).unwrap();
        assert_eq!(a, RowSpace::full(2));
        let b = RowSpace::span(2, [v(&[2, 2])]).unwrap();
        let c = RowSpace::span(2, [v(&[-3, -3]), v(&[0, 0])]).unwrap();
        assert_eq!(b, c);
        assert!(b.leq(&a));
        assert!(!a.leq(&b));
    }

    #[test]
    fn display_lists_basis() {
        let a = RowSpace::span(2, [vec![GaussRational::from(2), GaussRational::i()]]).unwrap();
        assert_eq!(alloc::format!("{a}"), "⟨(1,0+1/2i)⟩");
    }
}
