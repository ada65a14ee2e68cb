use alloc::sync::Arc;
use alloc::vec::Vec;

use super::{FiniteQuantale, QuantaleError};

/// A map between finite quantales, given by the image of each source index.
///
/// Construction checks only the shape of the map; [`check_hom`] decides
/// whether it is a homomorphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuantaleHom {
    source: Arc<FiniteQuantale>,
    target: Arc<FiniteQuantale>,
    map: Vec<usize>,
}

impl QuantaleHom {
    pub fn new(
        source: Arc<FiniteQuantale>,
        target: Arc<FiniteQuantale>,
        map: Vec<usize>,
    ) -> Result<Self, QuantaleError> {
        if map.len() != source.size() {
            return Err(QuantaleError::TableShape {
                table: "map",
                expected: source.size(),
                found: map.len(),
            });
        }
        if let Some(&index) = map.iter().find(|&&y| y >= target.size()) {
            return Err(QuantaleError::IndexOutOfRange {
                table: "map",
                index,
                size: target.size(),
            });
        }
        Ok(Self {
            source,
            target,
            map,
        })
    }

    pub fn identity(q: &Arc<FiniteQuantale>) -> Self {
        Self {
            source: Arc::clone(q),
            target: Arc::clone(q),
            map: (0..q.size()).collect(),
        }
    }

    pub fn source(&self) -> &Arc<FiniteQuantale> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FiniteQuantale> {
        &self.target
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn apply(&self, a: usize) -> usize {
        self.map[a]
    }

    pub fn preserves_joins(&self) -> bool {
        let (s, t) = (&self.source, &self.target);
        let n = s.size();
        self.map[s.bottom()] == t.bottom()
            && (0..n).all(|a| (a..n).all(|b| self.map[s.join(a, b)] == t.join(self.map[a], self.map[b])))
    }

    pub fn preserves_product(&self) -> bool {
        let (s, t) = (&self.source, &self.target);
        let n = s.size();
        (0..n).all(|a| (0..n).all(|b| self.map[s.mul(a, b)] == t.mul(self.map[a], self.map[b])))
    }
}

/// Optional properties to check on top of join and product preservation.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct HomFlags {
    pub unital: bool,
    pub pre_unital: bool,
    pub strong: bool,
    pub involutive: bool,
}

impl HomFlags {
    pub const ALL: HomFlags = HomFlags {
        unital: true,
        pre_unital: true,
        strong: true,
        involutive: true,
    };
}

/// Outcome of [`check_hom`]. Unrequested properties are `None`, and so is
/// the involution check when either side has no star.
///
/// A requested unit condition fails when either side lacks a unit.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HomReport {
    pub joins: bool,
    pub product: bool,
    pub unital: Option<bool>,
    pub pre_unital: Option<bool>,
    pub strong: Option<bool>,
    pub involutive: Option<bool>,
}

impl HomReport {
    pub fn is_hom(&self) -> bool {
        self.joins && self.product
    }

    /// Every check that was run passed.
    pub fn passes(&self) -> bool {
        self.is_hom()
            && [self.unital, self.pre_unital, self.strong, self.involutive]
                .iter()
                .all(|f| f.unwrap_or(true))
    }
}

pub fn check_hom(h: &QuantaleHom, flags: HomFlags) -> HomReport {
    let (s, t) = (h.source(), h.target());
    let units = s
        .unit()
        .or_else(|| s.find_unit())
        .zip(t.unit().or_else(|| t.find_unit()));
    let requested = |on: bool, check: &dyn Fn() -> bool| on.then(check);
    HomReport {
        joins: h.preserves_joins(),
        product: h.preserves_product(),
        unital: requested(flags.unital, &|| units.is_some_and(|(e, e2)| h.apply(e) == e2)),
        pre_unital: requested(flags.pre_unital, &|| units.is_some_and(|(e, e2)| t.leq(e2, h.apply(e)))),
        strong: requested(flags.strong, &|| h.apply(s.top()) == t.top()),
        involutive: match (s.star_table(), t.star_table()) {
            (Some(ss), Some(_)) if flags.involutive => {
                Some((0..s.size()).all(|a| h.apply(ss[a]) == t.star(h.apply(a)).expect("star")))
            }
            _ => None,
        },
    }
}

/// Every join- and product-preserving map `source → target`, in
/// lexicographic order of the image vectors.
///
/// A join-preserving map is fixed by its values on join-irreducibles, so
/// the search assigns those in a linear extension and checks joins and
/// products among the elements that become determined at each step.
pub fn enumerate_homs(source: &FiniteQuantale, target: &FiniteQuantale) -> Vec<Vec<usize>> {
    let mut search = HomSearch::new(source, target);
    search.run(0);
    search.found.sort();
    search.found
}

struct HomSearch<'a> {
    s: &'a FiniteQuantale,
    t: &'a FiniteQuantale,
    /// Join-irreducibles of the source, in a linear extension.
    irreducibles: Vec<usize>,
    /// For each step, the source elements that become determined.
    determined_at: Vec<Vec<usize>>,
    /// For each source element, the irreducibles below it.
    below: Vec<Vec<usize>>,
    map: Vec<Option<usize>>,
    found: Vec<Vec<usize>>,
}

impl<'a> HomSearch<'a> {
    fn new(s: &'a FiniteQuantale, t: &'a FiniteQuantale) -> Self {
        let l = s.lattice();
        let n = s.size();
        let order = l.linear_extension();
        let irr_set = l.join_irreducibles();
        let irreducibles: Vec<usize> = order.into_iter().filter(|x| irr_set.contains(x)).collect();
        let position = |j: usize| irreducibles.iter().position(|&i| i == j).expect("irreducible");
        let below: Vec<Vec<usize>> = (0..n)
            .map(|x| irreducibles.iter().copied().filter(|&j| l.leq(j, x)).collect())
            .collect();
        let mut determined_at = alloc::vec![Vec::new(); irreducibles.len()];
        for (x, under) in below.iter().enumerate() {
            if let Some(last) = under.iter().map(|&j| position(j)).max() {
                determined_at[last].push(x);
            }
        }
        let mut map = alloc::vec![None; n];
        map[l.bottom()] = Some(t.bottom());
        Self {
            s,
            t,
            irreducibles,
            determined_at,
            below,
            map,
            found: Vec::new(),
        }
    }

    /// Joins and products among determined elements, for every triple that
    /// involves a freshly determined element.
    fn consistent(&self, fresh: &[usize]) -> bool {
        let (s, t) = (self.s, self.t);
        let n = s.size();
        let mut is_fresh = alloc::vec![false; n];
        for &x in fresh {
            is_fresh[x] = true;
        }
        for p in 0..n {
            let Some(fp) = self.map[p] else { continue };
            for q in 0..n {
                let Some(fq) = self.map[q] else { continue };
                let (j, m) = (s.join(p, q), s.mul(p, q));
                let touched = |r: usize| is_fresh[p] || is_fresh[q] || is_fresh[r];
                if let Some(fj) = self.map[j] {
                    if touched(j) && fj != t.join(fp, fq) {
                        return false;
                    }
                }
                if let Some(fm) = self.map[m] {
                    if touched(m) && fm != t.mul(fp, fq) {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn run(&mut self, depth: usize) {
        if depth == self.irreducibles.len() {
            if self.consistent(&[self.s.bottom()]) {
                self.found.push(self.map.iter().map(|m| m.expect("complete")).collect());
            }
            return;
        }
        let j = self.irreducibles[depth];
        let fresh = self.determined_at[depth].clone();
        for y in 0..self.t.size() {
            // monotone on the irreducibles already placed below j
            if !self.below[j]
                .iter()
                .filter(|&&i| i != j)
                .all(|&i| self.t.leq(self.map[i].expect("earlier"), y))
            {
                continue;
            }
            self.map[j] = Some(y);
            for &x in &fresh {
                if x != j {
                    let v = self.t.lattice().join_all(self.below[x].iter().map(|&i| self.map[i].expect("earlier")));
                    self.map[x] = Some(v);
                }
            }
            if self.consistent(&fresh) {
                self.run(depth + 1);
            }
            for &x in &fresh {
                self.map[x] = None;
            }
        }
    }
}
