//! Isomorphism search for small finite structures.
//!
//! A [`Structure`] is a finite set carrying relations, binary and unary
//! operations and named constants. [`find_isomorphism`] runs a backtracking
//! search with degree-based candidate pruning; [`lattice_certificate`] gives
//! a canonical form for lattices small enough to permute exhaustively.

use alloc::vec::Vec;

use crate::quantale::FiniteQuantale;
use crate::suplattice::SupLattice;

/// Borrowed view of a finite structure. All tables are row-major over
/// `0..size`.
#[derive(Clone, Debug, Default)]
pub struct Structure<'a> {
    pub size: usize,
    pub relations: Vec<&'a [bool]>,
    pub operations: Vec<&'a [usize]>,
    pub unary: Vec<&'a [usize]>,
    pub constants: Vec<usize>,
}

impl<'a> Structure<'a> {
    pub fn lattice(l: &'a SupLattice) -> Self {
        Self {
            size: l.size(),
            relations: alloc::vec![l.leq_relation()],
            ..Self::default()
        }
    }

    /// Order, product, unit (when present) and involution (when present).
    pub fn quantale(q: &'a FiniteQuantale) -> Self {
        let mut s = Self::lattice(q.lattice());
        s.operations.push(q.product_table());
        if let Some(e) = q.unit() {
            s.constants.push(e);
        }
        if let Some(star) = q.star_table() {
            s.unary.push(star);
        }
        s
    }

    fn compatible_shape(&self, other: &Structure<'_>) -> bool {
        self.size == other.size
            && self.relations.len() == other.relations.len()
            && self.operations.len() == other.operations.len()
            && self.unary.len() == other.unary.len()
            && self.constants.len() == other.constants.len()
    }

    /// Cheap per-element invariant used to prune candidates.
    fn signature(&self, x: usize) -> Vec<usize> {
        let n = self.size;
        let mut sig = Vec::new();
        for rel in &self.relations {
            sig.push((0..n).filter(|&y| rel[x * n + y]).count());
            sig.push((0..n).filter(|&y| rel[y * n + x]).count());
            sig.push(rel[x * n + x] as usize);
        }
        for op in &self.operations {
            sig.push((0..n).filter(|&y| op[x * n + y] == x).count());
            sig.push((0..n).filter(|&y| op[y * n + x] == x).count());
            sig.push((op[x * n + x] == x) as usize);
        }
        for u in &self.unary {
            sig.push((u[x] == x) as usize);
        }
        for &c in &self.constants {
            sig.push((c == x) as usize);
        }
        sig
    }
}

struct Search<'s, 'a> {
    a: &'s Structure<'a>,
    b: &'s Structure<'a>,
    candidates: Vec<Vec<usize>>,
    map: Vec<Option<usize>>,
    used: Vec<bool>,
    order: Vec<usize>,
    found: Vec<Vec<usize>>,
    limit: usize,
}

impl Search<'_, '_> {
    fn consistent(&self, x: usize, y: usize) -> bool {
        let n = self.a.size;
        let assigned = |u: usize| self.map[u];
        for (ra, rb) in self.a.relations.iter().zip(&self.b.relations) {
            if ra[x * n + x] != rb[y * n + y] {
                return false;
            }
            for u in 0..n {
                if let Some(v) = assigned(u) {
                    if ra[x * n + u] != rb[y * n + v] || ra[u * n + x] != rb[v * n + y] {
                        return false;
                    }
                }
            }
        }
        for (ua, ub) in self.a.unary.iter().zip(&self.b.unary) {
            let img = if ua[x] == x { Some(y) } else { assigned(ua[x]) };
            if let Some(v) = img {
                if ub[y] != v {
                    return false;
                }
            }
        }
        true
    }

    /// Full operation check once every element is mapped.
    fn operations_preserved(&self, f: &[usize]) -> bool {
        let n = self.a.size;
        self.a
            .operations
            .iter()
            .zip(&self.b.operations)
            .all(|(oa, ob)| {
                (0..n).all(|u| (0..n).all(|v| f[oa[u * n + v]] == ob[f[u] * n + f[v]]))
            })
            && self
                .a
                .unary
                .iter()
                .zip(&self.b.unary)
                .all(|(ua, ub)| (0..n).all(|u| f[ua[u]] == ub[f[u]]))
    }

    /// Partial check of operations among the already-mapped elements.
    fn partial_operations_ok(&self) -> bool {
        let n = self.a.size;
        for (oa, ob) in self.a.operations.iter().zip(&self.b.operations) {
            for u in 0..n {
                let Some(fu) = self.map[u] else { continue };
                for v in 0..n {
                    let Some(fv) = self.map[v] else { continue };
                    if let Some(fw) = self.map[oa[u * n + v]] {
                        if ob[fu * n + fv] != fw {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    fn run(&mut self, depth: usize) {
        if self.found.len() >= self.limit {
            return;
        }
        if depth == self.order.len() {
            let f: Vec<usize> = self.map.iter().map(|m| m.expect("complete")).collect();
            if self.operations_preserved(&f) {
                self.found.push(f);
            }
            return;
        }
        let x = self.order[depth];
        for k in 0..self.candidates[x].len() {
            let y = self.candidates[x][k];
            if self.used[y] || !self.consistent(x, y) {
                continue;
            }
            self.map[x] = Some(y);
            self.used[y] = true;
            if self.partial_operations_ok() {
                self.run(depth + 1);
            }
            self.map[x] = None;
            self.used[y] = false;
            if self.found.len() >= self.limit {
                return;
            }
        }
    }
}

fn search(a: &Structure<'_>, b: &Structure<'_>, limit: usize) -> Vec<Vec<usize>> {
    if !a.compatible_shape(b) {
        return Vec::new();
    }
    let n = a.size;
    let sig_b: Vec<Vec<usize>> = (0..n).map(|y| b.signature(y)).collect();
    let mut candidates: Vec<Vec<usize>> = (0..n)
        .map(|x| {
            let sx = a.signature(x);
            (0..n).filter(|&y| sig_b[y] == sx).collect()
        })
        .collect();
    for (&ca, &cb) in a.constants.iter().zip(&b.constants) {
        candidates[ca].retain(|&y| y == cb);
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&x| (candidates[x].len(), x));
    let mut s = Search {
        a,
        b,
        candidates,
        map: alloc::vec![None; n],
        used: alloc::vec![false; n],
        order,
        found: Vec::new(),
        limit,
    };
    s.run(0);
    s.found
}

/// An isomorphism `a → b` as an index map, if one exists.
pub fn find_isomorphism(a: &Structure<'_>, b: &Structure<'_>) -> Option<Vec<usize>> {
    search(a, b, 1).into_iter().next()
}

/// Every automorphism of `a`.
pub fn automorphisms(a: &Structure<'_>) -> Vec<Vec<usize>> {
    search(a, a, usize::MAX)
}

pub fn lattice_isomorphism(a: &SupLattice, b: &SupLattice) -> Option<Vec<usize>> {
    find_isomorphism(&Structure::lattice(a), &Structure::lattice(b))
}

pub fn quantale_isomorphism(a: &FiniteQuantale, b: &FiniteQuantale) -> Option<Vec<usize>> {
    find_isomorphism(&Structure::quantale(a), &Structure::quantale(b))
}

/// Poset isomorphism for row-major order relations.
pub fn order_isomorphism(size_a: usize, a: &[bool], size_b: usize, b: &[bool]) -> Option<Vec<usize>> {
    let sa = Structure {
        size: size_a,
        relations: alloc::vec![a],
        ..Structure::default()
    };
    let sb = Structure {
        size: size_b,
        relations: alloc::vec![b],
        ..Structure::default()
    };
    find_isomorphism(&sa, &sb)
}

/// Canonical form of a lattice: the lexicographically least order relation
/// over all relabellings that put the bottom first and the top last.
/// Intended for lattices of at most eight or so elements.
pub fn lattice_certificate(l: &SupLattice) -> Vec<bool> {
    let n = l.size();
    if n == 1 {
        return alloc::vec![true];
    }
    let mut inner: Vec<usize> = (0..n).filter(|&x| x != l.bottom() && x != l.top()).collect();
    let mut best: Option<Vec<bool>> = None;
    permute(&mut inner, 0, &mut |perm| {
        let mut label = Vec::with_capacity(n);
        label.push(l.bottom());
        label.extend_from_slice(perm);
        label.push(l.top());
        let cert: Vec<bool> = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .map(|(i, j)| l.leq(label[i], label[j]))
            .collect();
        if best.as_ref().is_none_or(|b| cert < *b) {
            best = Some(cert);
        }
    });
    best.expect("at least one labelling")
}

fn permute(items: &mut [usize], k: usize, visit: &mut impl FnMut(&[usize])) {
    if k == items.len() {
        visit(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute(items, k + 1, visit);
        items.swap(k, i);
    }
}
