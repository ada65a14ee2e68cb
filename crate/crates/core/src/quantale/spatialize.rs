use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use super::{check_hom, FiniteQuantale, HomFlags, QuantaleError, QuantaleHom};
use crate::suplattice::SupLattice;

/// The quotient of a quantale by the kernel of a family of points.
#[derive(Clone, Debug)]
pub struct Spatialization {
    pub quotient: Arc<FiniteQuantale>,
    /// The natural surjection onto the quotient.
    pub map: QuantaleHom,
    /// Members of each class, ascending; class `k` is labelled by
    /// `classes[k][0]`.
    pub classes: Vec<Vec<usize>>,
}

/// Identifies `a` and `b` when every point agrees on them.
///
/// Each point must be a join- and product-preserving map out of `q`. The
/// quotient carries the unit of `q` if there is one, and the induced
/// involution when `q` has a star and every point preserves it.
pub fn spatialize(
    q: &Arc<FiniteQuantale>,
    points: &[QuantaleHom],
) -> Result<Spatialization, QuantaleError> {
    let mut all_involutive = true;
    for (index, p) in points.iter().enumerate() {
        if p.source().as_ref() != q.as_ref() {
            return Err(QuantaleError::PointSourceMismatch { index });
        }
        let report = check_hom(p, HomFlags { involutive: true, ..HomFlags::default() });
        if !report.is_hom() {
            return Err(QuantaleError::PointNotAHomomorphism { index });
        }
        all_involutive &= report.involutive == Some(true);
    }

    let n = q.size();
    let mut by_signature: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
    let mut class_of = Vec::with_capacity(n);
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for a in 0..n {
        let signature: Vec<usize> = points.iter().map(|p| p.apply(a)).collect();
        let k = *by_signature.entry(signature).or_insert_with(|| {
            classes.push(Vec::new());
            classes.len() - 1
        });
        classes[k].push(a);
        class_of.push(k);
    }
    let m = classes.len();
    let rep = |k: usize| classes[k][0];

    let congruent = |op: &dyn Fn(usize, usize) -> usize| -> Result<Vec<usize>, QuantaleError> {
        let mut table = alloc::vec![0; m * m];
        for a in 0..m {
            for b in 0..m {
                let value = class_of[op(rep(a), rep(b))];
                for &x in &classes[a] {
                    for &y in &classes[b] {
                        if class_of[op(x, y)] != value {
                            return Err(QuantaleError::NotACongruence { a, b });
                        }
                    }
                }
                table[a * m + b] = value;
            }
        }
        Ok(table)
    };
    let join = congruent(&|x, y| q.join(x, y))?;
    let product = congruent(&|x, y| q.mul(x, y))?;

    let leq: Vec<bool> = (0..m * m).map(|k| join[k] == k % m).collect();
    let names: Vec<String> = (0..m).map(|k| String::from(q.lattice().name(rep(k)))).collect();
    let lattice = SupLattice::from_leq(m, leq)?.with_names(names);
    let unit = q.unit().map(|e| class_of[e]);
    let star = match q.star_table() {
        Some(s) if all_involutive => {
            let induced: Vec<usize> = (0..m).map(|k| class_of[s[rep(k)]]).collect();
            if let Some(a) = (0..n).find(|&a| class_of[s[a]] != induced[class_of[a]]) {
                let k = class_of[a];
                return Err(QuantaleError::NotACongruence { a: k, b: k });
            }
            Some(induced)
        }
        _ => None,
    };
    let quotient = Arc::new(FiniteQuantale::new(lattice, product, unit, star)?);
    let map = QuantaleHom::new(Arc::clone(q), Arc::clone(&quotient), class_of)?;
    Ok(Spatialization {
        quotient,
        map,
        classes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::iso::quantale_isomorphism;
    use crate::quantale::verify_axioms;
    use alloc::vec;

    fn boolean4() -> Arc<FiniteQuantale> {
        Arc::new(FiniteQuantale::locale(SupLattice::boolean(2).unwrap()))
    }

    #[test]
    fn identity_point_gives_isomorphic_quotient() {
        let q = boolean4();
        let s = spatialize(&q, &[QuantaleHom::identity(&q)]).unwrap();
        assert_eq!(s.classes.len(), 4);
        assert!(quantale_isomorphism(&q, &s.quotient).is_some());
    }

    #[test]
    fn no_points_give_trivial_quotient() {
        let q = boolean4();
        let s = spatialize(&q, &[]).unwrap();
        assert!(s.quotient.is_trivial());
        assert_eq!(s.classes, vec![vec![0, 1, 2, 3]]);
    }

    #[test]
    fn two_frame_points_separate_boolean_four() {
        let q = boolean4();
        let two = Arc::new(FiniteQuantale::locale(SupLattice::chain(2).unwrap()));
        // bitmask elements; point i sends a to 1 iff bit i is set
        let points: Vec<QuantaleHom> = (0..2)
            .map(|i| QuantaleHom::new(Arc::clone(&q), Arc::clone(&two), (0..4).map(|a| (a >> i) & 1).collect()).unwrap())
            .collect();
        let s = spatialize(&q, &points).unwrap();
        assert!(quantale_isomorphism(&q, &s.quotient).is_some());
        assert!(verify_axioms(&s.quotient).flags.locale);
    }

    #[test]
    fn one_point_collapses_to_two() {
        let q = boolean4();
        let two = Arc::new(FiniteQuantale::locale(SupLattice::chain(2).unwrap()));
        let p = QuantaleHom::new(Arc::clone(&q), two, vec![0, 1, 0, 1]).unwrap();
        let s = spatialize(&q, &[p]).unwrap();
        assert_eq!(s.classes, vec![vec![0, 2], vec![1, 3]]);
        assert_eq!(s.quotient.unit(), Some(1));
        assert!(s.quotient.star_table().is_some());
    }

    #[test]
    fn non_hom_point_rejected() {
        let q = boolean4();
        let two = Arc::new(FiniteQuantale::locale(SupLattice::chain(2).unwrap()));
        let p = QuantaleHom::new(Arc::clone(&q), two, vec![0, 1, 1, 0]).unwrap();
        assert_eq!(spatialize(&q, &[p]).unwrap_err(), QuantaleError::PointNotAHomomorphism { index: 0 });
    }
}
