use alloc::vec::Vec;

use super::FiniteQuantale;

/// First failing instance of a quantale law.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AxiomViolation {
    NotAssociative { a: usize, b: usize, c: usize },
    /// `a ⊙ ⋁subset ≠ ⋁(a ⊙ b)`.
    LeftDistributivity { a: usize, subset: Vec<usize> },
    /// `(⋁subset) ⊙ b ≠ ⋁(a ⊙ b)`.
    RightDistributivity { subset: Vec<usize>, b: usize },
    UnitLaw { unit: usize, element: usize },
    StarNotInvolutive { element: usize },
    StarNotAntiMultiplicative { a: usize, b: usize },
    StarNotJoinPreserving { subset: Vec<usize> },
}

/// Which kinds of quantale the tables describe.
///
/// `involutive` and `gelfand` are `None` when no involution is given.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct ClassificationReport {
    pub is_quantale: bool,
    pub unital: bool,
    pub strong: bool,
    pub involutive: Option<bool>,
    pub gelfand: Option<bool>,
    pub strictly_two_sided: bool,
    pub locale: bool,
    pub trivial: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    pub flags: ClassificationReport,
    pub violation: Option<AxiomViolation>,
    /// The unit in effect: the declared one if it satisfies the unit law,
    /// otherwise one found by search when none was declared.
    pub unit: Option<usize>,
}

/// Subsets over which join-distributivity is checked: the empty set and all
/// pairs. Every finite join is an iterated binary join, so this covers every
/// subset of a finite lattice; a failing subset is reported as-is.
fn distributivity_subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
    core::iter::once(Vec::new()).chain(
        (0..n).flat_map(move |x| (x..n).map(move |y| if x == y { alloc::vec![x] } else { alloc::vec![x, y] })),
    )
}

fn associativity(q: &FiniteQuantale) -> Option<AxiomViolation> {
    let n = q.size();
    for a in 0..n {
        for b in 0..n {
            let ab = q.mul(a, b);
            for c in 0..n {
                if q.mul(ab, c) != q.mul(a, q.mul(b, c)) {
                    return Some(AxiomViolation::NotAssociative { a, b, c });
                }
            }
        }
    }
    None
}

fn distributivity(q: &FiniteQuantale) -> Option<AxiomViolation> {
    let n = q.size();
    let l = q.lattice();
    for subset in distributivity_subsets(n) {
        let joined = l.join_all(subset.iter().copied());
        for a in 0..n {
            let lhs = q.mul(a, joined);
            let rhs = l.join_all(subset.iter().map(|&b| q.mul(a, b)));
            if lhs != rhs {
                return Some(AxiomViolation::LeftDistributivity { a, subset });
            }
            let lhs = q.mul(joined, a);
            let rhs = l.join_all(subset.iter().map(|&x| q.mul(x, a)));
            if lhs != rhs {
                return Some(AxiomViolation::RightDistributivity { subset, b: a });
            }
        }
    }
    None
}

fn unit_law(q: &FiniteQuantale, e: usize) -> Option<AxiomViolation> {
    // e ⊙ e first, then every other element.
    core::iter::once(e)
        .chain((0..q.size()).filter(|&a| a != e))
        .find(|&a| q.mul(e, a) != a || q.mul(a, e) != a)
        .map(|element| AxiomViolation::UnitLaw { unit: e, element })
}

fn star_laws(q: &FiniteQuantale, star: &[usize]) -> Option<AxiomViolation> {
    let n = q.size();
    let l = q.lattice();
    if let Some(element) = (0..n).find(|&a| star[star[a]] != a) {
        return Some(AxiomViolation::StarNotInvolutive { element });
    }
    for a in 0..n {
        for b in 0..n {
            if star[q.mul(a, b)] != q.mul(star[b], star[a]) {
                return Some(AxiomViolation::StarNotAntiMultiplicative { a, b });
            }
        }
    }
    distributivity_subsets(n)
        .find(|subset| {
            star[l.join_all(subset.iter().copied())] != l.join_all(subset.iter().map(|&x| star[x]))
        })
        .map(|subset| AxiomViolation::StarNotJoinPreserving { subset })
}

/// Runs every quantale law exhaustively and classifies the structure.
pub fn verify_axioms(q: &FiniteQuantale) -> AxiomReport {
    let n = q.size();
    let l = q.lattice();
    let mut violation = associativity(q).or_else(|| distributivity(q));
    let is_quantale = violation.is_none();

    let unit = match q.unit() {
        Some(e) => match unit_law(q, e) {
            None => Some(e),
            Some(v) => {
                violation.get_or_insert(v);
                None
            }
        },
        None => q.find_unit(),
    };
    let unital = unit.is_some();

    let involutive = q.star_table().map(|star| match star_laws(q, star) {
        None => true,
        Some(v) => {
            violation.get_or_insert(v);
            false
        }
    });

    let right_sided = |a: usize| l.leq(q.mul(a, q.top()), a);
    let gelfand = involutive.map(|inv| {
        inv && unital
            && (0..n)
                .filter(|&a| right_sided(a))
                .all(|a| q.mul3(a, q.star(a).expect("star present"), a) == a)
    });

    let strong = q.mul(q.top(), q.top()) == q.top();
    let strictly_two_sided = unit == Some(q.top());
    let product_is_meet = (0..n).all(|a| (0..n).all(|b| q.mul(a, b) == l.meet(a, b)));
    let locale = is_quantale && product_is_meet && strictly_two_sided && l.is_distributive();

    AxiomReport {
        flags: ClassificationReport {
            is_quantale,
            unital,
            strong,
            involutive,
            gelfand,
            strictly_two_sided,
            locale,
            trivial: q.is_trivial(),
        },
        violation,
        unit,
    }
}
