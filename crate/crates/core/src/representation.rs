//! Representations `r: Q → Q(S)` of finite quantales on finite sup-lattices.
//!
//! The module action is `x · a = r(a)(x)`. Irreducibility is tested in the
//! form "`x · 1 ≤ x` only for `x ∈ {0, 1}`". Points are enumerated by brute
//! force over every lattice up to a size cap, one carrier per isomorphism
//! class, with representations identified up to carrier automorphisms.

use alloc::sync::Arc;
use alloc::vec::Vec;
use thiserror::Error;

use crate::iso::{automorphisms, Structure};
use crate::quantale::{check_hom, enumerate_homs, FiniteQuantale, HomFlags, QuantaleError, QuantaleHom};
use crate::suplattice::{endo_quantale, enumerate_lattices, EndoQuantale, LatticeError, DEFAULT_ENDO_CAP};

/// Largest source quantale accepted by the enumerators.
pub const MAX_SOURCE_SIZE: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum RepresentationError {
    #[error("map is not a quantale homomorphism into Q(S)")]
    NotAHomomorphism,
    #[error("source quantale has no unit")]
    MissingUnit,
    #[error("size {size} exceeds the cap {cap}")]
    CapExceeded { size: usize, cap: usize },
    #[error(transparent)]
    Quantale(#[from] QuantaleError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

/// A quantale homomorphism into `Q(S)` for a finite sup-lattice `S`.
#[derive(Clone, Debug)]
pub struct Representation {
    endo: Arc<EndoQuantale>,
    hom: QuantaleHom,
}

impl Representation {
    /// `map[a]` is the index in `endo` of the endomap representing `a`.
    pub fn new(
        source: Arc<FiniteQuantale>,
        endo: Arc<EndoQuantale>,
        map: Vec<usize>,
    ) -> Result<Self, RepresentationError> {
        let hom = QuantaleHom::new(source, Arc::clone(endo.quantale()), map)?;
        if !check_hom(&hom, HomFlags::default()).is_hom() {
            return Err(RepresentationError::NotAHomomorphism);
        }
        Ok(Self { endo, hom })
    }

    pub fn source(&self) -> &Arc<FiniteQuantale> {
        self.hom.source()
    }

    pub fn endo(&self) -> &Arc<EndoQuantale> {
        &self.endo
    }

    pub fn carrier(&self) -> &crate::suplattice::SupLattice {
        self.endo.carrier()
    }

    pub fn hom(&self) -> &QuantaleHom {
        &self.hom
    }

    /// `x · a`.
    pub fn action(&self, x: usize, a: usize) -> usize {
        self.endo.map(self.hom.apply(a)).apply(x)
    }

    /// `x · 1 ≤ x` implies `x = 0` or `x = 1`.
    pub fn is_irreducible(&self) -> bool {
        let s = self.carrier();
        let top = self.source().top();
        (0..s.size())
            .filter(|&x| x != s.bottom() && x != s.top())
            .all(|x| !s.leq(self.action(x, top), x))
    }

    /// `r(1)` is the top of `Q(S)`.
    pub fn is_strong(&self) -> bool {
        self.hom.apply(self.source().top()) == self.endo.quantale().top()
    }

    /// The identity endomap lies below `r(e)`.
    pub fn is_pre_unital(&self) -> Result<bool, RepresentationError> {
        let q = self.source();
        let e = q.unit().or_else(|| q.find_unit()).ok_or(RepresentationError::MissingUnit)?;
        let target = self.endo.quantale();
        Ok(target.leq(self.endo.identity(), self.hom.apply(e)))
    }

    /// Every element acts as the constant bottom map.
    pub fn is_zero(&self) -> bool {
        let zero = self.endo.quantale().bottom();
        self.hom.map().iter().all(|&f| f == zero)
    }
}

/// `Q(S)` for one lattice `S` of each isomorphism type up to a size cap,
/// with the automorphism group of each `S`.
#[derive(Clone, Debug)]
pub struct CarrierFamily {
    carriers: Vec<(Arc<EndoQuantale>, Vec<Vec<usize>>)>,
}

impl CarrierFamily {
    pub fn up_to(carrier_cap: usize) -> Result<Self, RepresentationError> {
        if carrier_cap > DEFAULT_ENDO_CAP {
            return Err(RepresentationError::CapExceeded {
                size: carrier_cap,
                cap: DEFAULT_ENDO_CAP,
            });
        }
        let carriers = enumerate_lattices(carrier_cap)?
            .iter()
            .map(|s| {
                let endo = endo_quantale(s, DEFAULT_ENDO_CAP)?;
                let autos = automorphisms(&Structure::lattice(s));
                Ok((Arc::new(endo), autos))
            })
            .collect::<Result<Vec<_>, LatticeError>>()?;
        Ok(Self { carriers })
    }

    pub fn len(&self) -> usize {
        self.carriers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.carriers.is_empty()
    }

    pub fn endo_quantales(&self) -> impl Iterator<Item = &Arc<EndoQuantale>> {
        self.carriers.iter().map(|(e, _)| e)
    }
}

/// `σ ∘ f ∘ σ⁻¹` for a carrier automorphism `σ`.
fn conjugate(endo: &EndoQuantale, sigma: &[usize], f: usize) -> usize {
    let values = endo.map(f).values();
    let mut out = alloc::vec![0; values.len()];
    for (x, &fx) in values.iter().enumerate() {
        out[sigma[x]] = sigma[fx];
    }
    endo.index_of(&crate::suplattice::EndoMap::new(out))
        .expect("conjugate of a join-preserving map is join-preserving")
}

/// Every representation of `q` on the carriers of `family`, one per orbit
/// under carrier automorphisms. Carriers come in the family's order and
/// representations on one carrier in lexicographic order of their maps.
pub fn enumerate_representations_on(
    q: &Arc<FiniteQuantale>,
    family: &CarrierFamily,
) -> Result<Vec<Representation>, RepresentationError> {
    if q.size() > MAX_SOURCE_SIZE {
        return Err(RepresentationError::CapExceeded {
            size: q.size(),
            cap: MAX_SOURCE_SIZE,
        });
    }
    let mut out = Vec::new();
    for (endo, autos) in &family.carriers {
        let homs = enumerate_homs(q, endo.quantale());
        let mut seen = alloc::collections::BTreeSet::new();
        for map in homs {
            let canonical = autos
                .iter()
                .map(|sigma| map.iter().map(|&f| conjugate(endo, sigma, f)).collect::<Vec<_>>())
                .min()
                .unwrap_or_else(|| map.clone());
            if seen.insert(canonical.clone()) {
                out.push(Representation::new(Arc::clone(q), Arc::clone(endo), canonical)?);
            }
        }
    }
    Ok(out)
}

pub fn enumerate_representations(
    q: &Arc<FiniteQuantale>,
    carrier_cap: usize,
) -> Result<Vec<Representation>, RepresentationError> {
    enumerate_representations_on(q, &CarrierFamily::up_to(carrier_cap)?)
}

/// The irreducible representations among [`enumerate_representations`].
/// Zero representations are kept; they are irreducible on carriers with
/// fewer than three elements.
pub fn enumerate_points(
    q: &Arc<FiniteQuantale>,
    carrier_cap: usize,
) -> Result<Vec<Representation>, RepresentationError> {
    let mut all = enumerate_representations(q, carrier_cap)?;
    all.retain(Representation::is_irreducible);
    Ok(all)
}

/// Whether the representations separate elements: `a = b` whenever
/// `r(a) = r(b)` for every `r`. The witness is the first inseparable pair.
pub fn separates(q: &FiniteQuantale, reps: &[Representation]) -> crate::Verdict<(usize, usize)> {
    let n = q.size();
    let witness = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .find(|&(a, b)| reps.iter().all(|r| r.hom().apply(a) == r.hom().apply(b)));
    crate::Verdict::from_witness(witness)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::suplattice::SupLattice;
    use alloc::vec;

    fn locale(l: SupLattice) -> Arc<FiniteQuantale> {
        Arc::new(FiniteQuantale::locale(l))
    }

    fn nonzero(points: &[Representation]) -> Vec<&Representation> {
        points.iter().filter(|r| !r.is_zero()).collect()
    }

    #[test]
    fn two_chain_has_one_nonzero_point_on_two() {
        let q = locale(SupLattice::chain(2).unwrap());
        let points = enumerate_points(&q, 2).unwrap();
        let nz = nonzero(&points);
        assert_eq!(nz.len(), 1);
        assert_eq!(nz[0].carrier().size(), 2);
        assert!(nz[0].is_strong());
    }

    #[test]
    fn boolean_four_has_two_points_on_two() {
        let q = locale(SupLattice::boolean(2).unwrap());
        let points = enumerate_points(&q, 2).unwrap();
        assert_eq!(nonzero(&points).len(), 2);
        assert!(separates(&q, &points).holds());
    }

    #[test]
    fn trivial_quantale_representations() {
        let q = Arc::new(FiniteQuantale::trivial());
        let reps = enumerate_representations(&q, 3).unwrap();
        // one zero representation per carrier: sizes 1, 2 and 3
        assert_eq!(reps.len(), 3);
        assert!(reps.iter().all(Representation::is_zero));
        let irreducible: Vec<usize> = reps.iter().filter(|r| r.is_irreducible()).map(|r| r.carrier().size()).collect();
        assert_eq!(irreducible, vec![1, 2]);
    }

    #[test]
    fn constant_bottom_on_three_chain_is_reducible() {
        let q = locale(SupLattice::chain(2).unwrap());
        let endo = Arc::new(endo_quantale(&SupLattice::chain(3).unwrap(), 6).unwrap());
        let zero = endo.quantale().bottom();
        let r = Representation::new(q, endo, vec![zero, zero]).unwrap();
        assert!(!r.is_irreducible());
        assert!(!r.is_strong());
    }

    #[test]
    fn identity_representation_of_two() {
        let q = locale(SupLattice::chain(2).unwrap());
        let endo = Arc::new(endo_quantale(&SupLattice::chain(2).unwrap(), 6).unwrap());
        let id = endo.identity();
        let r = Representation::new(q, Arc::clone(&endo), vec![endo.quantale().bottom(), id]).unwrap();
        assert!(r.is_strong() && r.is_irreducible());
        assert_eq!(r.is_pre_unital(), Ok(true));
    }

    #[test]
    fn zero_representation_on_boolean_four_is_not_strong() {
        let q = locale(SupLattice::chain(2).unwrap());
        let endo = Arc::new(endo_quantale(&SupLattice::boolean(2).unwrap(), 6).unwrap());
        let zero = endo.quantale().bottom();
        let r = Representation::new(q, endo, vec![zero, zero]).unwrap();
        assert!(!r.is_strong());
        assert!(!r.is_irreducible());
    }

    #[test]
    fn non_hom_rejected() {
        let q = locale(SupLattice::chain(2).unwrap());
        let endo = Arc::new(endo_quantale(&SupLattice::chain(2).unwrap(), 6).unwrap());
        let id = endo.identity();
        assert_eq!(
            Representation::new(q, endo, vec![id, id]).unwrap_err(),
            RepresentationError::NotAHomomorphism
        );
    }

    #[test]
    fn action_laws_and_strong_implies_irreducible() {
        let q = locale(SupLattice::chain(3).unwrap());
        for r in enumerate_representations(&q, 4).unwrap() {
            let s = r.carrier();
            for x in 0..s.size() {
                for a in 0..q.size() {
                    for b in 0..q.size() {
                        assert_eq!(r.action(x, q.mul(a, b)), r.action(r.action(x, a), b));
                    }
                }
            }
            if r.is_strong() {
                assert!(r.is_irreducible());
            }
        }
    }

    #[test]
    fn carrier_cap_enforced() {
        let q = locale(SupLattice::chain(2).unwrap());
        assert!(matches!(
            enumerate_points(&q, 7),
            Err(RepresentationError::CapExceeded { size: 7, cap: 6 })
        ));
    }
}
