use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use super::{LatticeError, SupLattice};
use crate::quantale::FiniteQuantale;

/// Largest carrier for which [`endo_quantale`] will enumerate `Q(S)`.
pub const DEFAULT_ENDO_CAP: usize = 6;

/// Exhaustive subset checks are used up to this many elements; above it the
/// binary-plus-empty check (equivalent on finite lattices) takes over.
const ALL_SUBSETS_LIMIT: usize = 16;

/// A map `S → S` given by the image of every element.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EndoMap {
    values: Vec<usize>,
}

impl EndoMap {
    pub fn new(values: Vec<usize>) -> Self {
        Self { values }
    }

    pub fn identity(n: usize) -> Self {
        Self::new((0..n).collect())
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn apply(&self, x: usize) -> usize {
        self.values[x]
    }

    /// `f(⋁X) = ⋁f(X)` for every subset `X`, including `X = ∅`.
    pub fn preserves_all_joins(&self, s: &SupLattice) -> bool {
        let n = s.size();
        if self.values.len() != n || self.values.iter().any(|&v| v >= n) {
            return false;
        }
        if n > ALL_SUBSETS_LIMIT {
            return self.values[s.bottom()] == s.bottom()
                && (0..n).all(|a| {
                    (0..n).all(|b| self.values[s.join(a, b)] == s.join(self.values[a], self.values[b]))
                });
        }
        (0u32..(1u32 << n)).all(|mask| {
            let members = (0..n).filter(|&k| mask & (1 << k) != 0);
            let lhs = self.values[s.join_all(members.clone())];
            let rhs = s.join_all(members.map(|k| self.values[k]));
            lhs == rhs
        })
    }

    /// Pointwise order.
    pub fn leq(&self, other: &EndoMap, s: &SupLattice) -> bool {
        self.values
            .iter()
            .zip(&other.values)
            .all(|(&a, &b)| s.leq(a, b))
    }

    /// `self ⊙ other = other ∘ self`.
    pub fn then(&self, other: &EndoMap) -> EndoMap {
        EndoMap::new(self.values.iter().map(|&x| other.values[x]).collect())
    }
}

/// `Q(S)`: the quantale of join-preserving endomaps of a finite sup-lattice,
/// joins pointwise, `f ⊙ g = g ∘ f`, unit the identity map.
#[derive(Clone, Debug)]
pub struct EndoQuantale {
    carrier: SupLattice,
    maps: Vec<EndoMap>,
    index: BTreeMap<EndoMap, usize>,
    quantale: Arc<FiniteQuantale>,
}

impl EndoQuantale {
    pub fn carrier(&self) -> &SupLattice {
        &self.carrier
    }

    pub fn quantale(&self) -> &Arc<FiniteQuantale> {
        &self.quantale
    }

    pub fn maps(&self) -> &[EndoMap] {
        &self.maps
    }

    pub fn map(&self, k: usize) -> &EndoMap {
        &self.maps[k]
    }

    pub fn index_of(&self, f: &EndoMap) -> Option<usize> {
        self.index.get(f).copied()
    }

    pub fn identity(&self) -> usize {
        self.quantale.unit().expect("Q(S) is unital")
    }
}

/// Enumerates `Q(S)` in lexicographic order of the image vectors.
///
/// Candidates are assignments on the join-irreducibles of `S`, extended by
/// `f(x) = ⋁{f(j) : j ≤ x}` and then filtered by the all-subsets
/// join-preservation check.
pub fn endo_quantale(s: &SupLattice, cap: usize) -> Result<EndoQuantale, LatticeError> {
    let n = s.size();
    if n > cap {
        return Err(LatticeError::CapExceeded { size: n, cap });
    }
    let irreducibles = s.join_irreducibles();
    let below: Vec<Vec<usize>> = (0..n)
        .map(|x| {
            irreducibles
                .iter()
                .enumerate()
                .filter(|&(_, &j)| s.leq(j, x))
                .map(|(k, _)| k)
                .collect()
        })
        .collect();

    let mut maps = Vec::new();
    let mut assignment = alloc::vec![0usize; irreducibles.len()];
    loop {
        let values: Vec<usize> = below
            .iter()
            .map(|ks| s.join_all(ks.iter().map(|&k| assignment[k])))
            .collect();
        let f = EndoMap::new(values);
        if f.preserves_all_joins(s) {
            maps.push(f);
        }
        // odometer over assignments
        let mut k = 0;
        loop {
            if k == assignment.len() {
                return finish(s, maps);
            }
            assignment[k] += 1;
            if assignment[k] < n {
                break;
            }
            assignment[k] = 0;
            k += 1;
        }
    }
}

fn finish(s: &SupLattice, mut maps: Vec<EndoMap>) -> Result<EndoQuantale, LatticeError> {
    maps.sort();
    maps.dedup();
    let m = maps.len();
    let index: BTreeMap<EndoMap, usize> = maps.iter().cloned().zip(0..).collect();
    let mut leq = alloc::vec![false; m * m];
    for a in 0..m {
        for b in 0..m {
            leq[a * m + b] = maps[a].leq(&maps[b], s);
        }
    }
    let names: Vec<String> = maps.iter().map(|f| format!("{:?}", f.values())).collect();
    let lattice = SupLattice::from_leq(m, leq)?.with_names(names);
    let mut product = alloc::vec![0; m * m];
    for a in 0..m {
        for b in 0..m {
            product[a * m + b] = index[&maps[a].then(&maps[b])];
        }
    }
    let unit = index[&EndoMap::identity(s.size())];
    let quantale = FiniteQuantale::new(lattice, product, Some(unit), None)
        .expect("tables built with matching shapes");
    Ok(EndoQuantale {
        carrier: s.clone(),
        maps,
        index,
        quantale: Arc::new(quantale),
    })
}
