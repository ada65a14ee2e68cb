use alloc::vec::Vec;

use super::{FiniteQuantale, QuantaleError};
use crate::Verdict;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Right,
    Left,
    Two,
}

fn is_sided(q: &FiniteQuantale, side: Side, a: usize) -> bool {
    let top = q.top();
    let right = || q.leq(q.mul(a, top), a);
    let left = || q.leq(q.mul(top, a), a);
    match side {
        Side::Right => right(),
        Side::Left => left(),
        Side::Two => right() && left(),
    }
}

fn sided_closure(q: &FiniteQuantale, side: Side, a: usize) -> usize {
    let top = q.top();
    match side {
        Side::Right => q.mul(a, top),
        Side::Left => q.mul(top, a),
        Side::Two => q.mul3(top, a, top),
    }
}

/// Right-sided (`a ⊙ 1 ≤ a`), left-sided (`1 ⊙ a ≤ a`) or two-sided elements.
///
/// When the quantale has a unit the result is also compared against the
/// image `Q ⊙ 1`, `1 ⊙ Q` or `1 ⊙ Q ⊙ 1`; a disagreement means the tables are
/// not a unital quantale and is reported as an error.
pub fn sided_elements(q: &FiniteQuantale, side: Side) -> Result<Vec<usize>, QuantaleError> {
    let n = q.size();
    let sided: Vec<usize> = (0..n).filter(|&a| is_sided(q, side, a)).collect();
    if q.unit().or_else(|| q.find_unit()).is_some() {
        let mut image: Vec<usize> = (0..n).map(|a| sided_closure(q, side, a)).collect();
        image.sort_unstable();
        image.dedup();
        if image != sided {
            let element = sided
                .iter()
                .chain(&image)
                .copied()
                .find(|x| sided.binary_search(x).is_err() || image.binary_search(x).is_err())
                .expect("sets differ");
            return Err(QuantaleError::SidedMismatch { side, element });
        }
    }
    Ok(sided)
}

/// `a ⊙ a* ⊙ a = a` for every right-sided `a`; the witness is the first
/// right-sided element where it fails.
pub fn is_gelfand(q: &FiniteQuantale) -> Result<Verdict<usize>, QuantaleError> {
    if q.unit().or_else(|| q.find_unit()).is_none() || q.star_table().is_none() {
        return Err(QuantaleError::MissingUnitOrStar);
    }
    let witness = (0..q.size())
        .filter(|&a| is_sided(q, Side::Right, a))
        .find(|&a| q.mul3(a, q.star(a).expect("checked"), a) != a);
    Ok(Verdict::from_witness(witness))
}

/// Elements `p ≠ 1` such that `a ⊙ 1 ⊙ b ≤ p` implies `a ≤ p` or `b ≤ p`.
///
/// The top satisfies the implication vacuously and is excluded, as is usual
/// for prime elements; it is the empty meet, so spatiality is unaffected.
pub fn primes(q: &FiniteQuantale) -> Vec<usize> {
    let n = q.size();
    let top = q.top();
    (0..n)
        .filter(|&p| p != top)
        .filter(|&p| {
            (0..n).all(|a| {
                q.leq(a, p)
                    || (0..n).all(|b| q.leq(b, p) || !q.leq(q.mul3(a, top, b), p))
            })
        })
        .collect()
}

/// `⋀{p prime : a ≤ p}`.
pub fn meet_of_primes_above(q: &FiniteQuantale, primes: &[usize], a: usize) -> usize {
    q.lattice()
        .meet_all(primes.iter().copied().filter(|&p| q.leq(a, p)))
}

/// Every element is a meet of primes; the witness is the first element that
/// is not.
pub fn is_spatial_by_primes(q: &FiniteQuantale) -> Verdict<usize> {
    let ps = primes(q);
    Verdict::from_witness((0..q.size()).find(|&a| meet_of_primes_above(q, &ps, a) != a))
}

/// The map `a ↦ 1 ⊙ a ⊙ 1` and its image.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalicReflection {
    pub map: Vec<usize>,
    pub image: Vec<usize>,
}

pub fn localic_reflection_map(q: &FiniteQuantale) -> LocalicReflection {
    let map: Vec<usize> = (0..q.size()).map(|a| sided_closure(q, Side::Two, a)).collect();
    let mut image = map.clone();
    image.sort_unstable();
    image.dedup();
    LocalicReflection { map, image }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::suplattice::{endo_quantale, SupLattice};
    use alloc::vec;

    fn three_chain_gelfand_failure() -> FiniteQuantale {
        // 0 < a < 1, meet except a ⊙ a = 0.
        let l = SupLattice::chain(3).unwrap();
        FiniteQuantale::new(l, vec![0, 0, 0, 0, 0, 1, 0, 1, 2], Some(2), Some(vec![0, 1, 2])).unwrap()
    }

    #[test]
    fn locale_elements_are_all_sided() {
        let q = FiniteQuantale::locale(SupLattice::boolean(2).unwrap());
        for side in [Side::Right, Side::Left, Side::Two] {
            assert_eq!(sided_elements(&q, side).unwrap(), vec![0, 1, 2, 3]);
        }
        assert_eq!(sided_elements(&FiniteQuantale::trivial(), Side::Two).unwrap(), vec![0]);
    }

    #[test]
    fn right_sided_elements_of_endo_quantale_by_brute_force() {
        let e = endo_quantale(&SupLattice::chain(3).unwrap(), 6).unwrap();
        let q = e.quantale();
        let top = q.top();
        // f ⊙ ⊤ = ⊤ ∘ f, pointwise below f.
        let expected: Vec<usize> = (0..q.size())
            .filter(|&f| {
                let fm = e.map(f);
                let tm = e.map(top);
                (0..3).all(|x| q.lattice().size() > 0 && e.carrier().leq(tm.apply(fm.apply(x)), fm.apply(x)))
            })
            .collect();
        assert_eq!(sided_elements(q, Side::Right).unwrap(), expected);
    }

    #[test]
    fn gelfand_checks() {
        let loc = FiniteQuantale::locale(SupLattice::chain(4).unwrap());
        assert_eq!(is_gelfand(&loc).unwrap(), Verdict::Holds);
        assert_eq!(is_gelfand(&three_chain_gelfand_failure()).unwrap(), Verdict::Refuted(1));
        let e = endo_quantale(&SupLattice::chain(2).unwrap(), 6).unwrap();
        assert_eq!(is_gelfand(e.quantale()), Err(QuantaleError::MissingUnitOrStar));
    }

    #[test]
    fn primes_of_small_locales() {
        assert_eq!(primes(&FiniteQuantale::locale(SupLattice::chain(2).unwrap())), vec![0]);
        // coatoms of Boolean 4 are 1 = {x} and 2 = {y}
        assert_eq!(primes(&FiniteQuantale::locale(SupLattice::boolean(2).unwrap())), vec![1, 2]);
        assert!(primes(&FiniteQuantale::trivial()).is_empty());
    }

    #[test]
    fn spatial_locales() {
        assert!(is_spatial_by_primes(&FiniteQuantale::locale(SupLattice::boolean(2).unwrap())).holds());
        assert!(is_spatial_by_primes(&FiniteQuantale::locale(SupLattice::chain(3).unwrap())).holds());
        assert!(is_spatial_by_primes(&FiniteQuantale::trivial()).holds());
    }

    #[test]
    fn zero_product_chain_is_not_spatial() {
        let q = FiniteQuantale::new(SupLattice::chain(2).unwrap(), vec![0; 4], None, None).unwrap();
        assert_eq!(is_spatial_by_primes(&q), Verdict::Refuted(0));
    }

    #[test]
    fn reflection_of_locale_is_identity() {
        let q = FiniteQuantale::locale(SupLattice::boolean(2).unwrap());
        let r = localic_reflection_map(&q);
        assert_eq!(r.map, vec![0, 1, 2, 3]);
        assert_eq!(r.image, vec![0, 1, 2, 3]);
        let t = localic_reflection_map(&FiniteQuantale::trivial());
        assert_eq!(t.map, vec![0]);
    }

    #[test]
    fn reflection_image_is_two_sided() {
        let e = endo_quantale(&SupLattice::boolean(2).unwrap(), 6).unwrap();
        let q = e.quantale();
        let r = localic_reflection_map(q);
        let two = sided_elements(q, Side::Two).unwrap();
        assert_eq!(r.image, two);
    }
}
