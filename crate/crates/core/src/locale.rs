//! Finite frames presented by posets.
//!
//! A finite distributive lattice is the lattice of downsets of its poset of
//! join-irreducibles. [`FiniteFrame`] stores that poset and the downsets as
//! bitmasks, so frame coproducts become products of posets.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use thiserror::Error;

use crate::quantale::FiniteQuantale;
use crate::suplattice::{check_partial_order, transitive_closure, LatticeError, OrderViolation, SupLattice};
use crate::Verdict;

/// Largest base poset: downsets are stored as `u64` masks.
pub const MAX_POINTS: usize = 64;

/// Refuses to materialize frames with more elements than this.
pub const MAX_FRAME_SIZE: usize = 1 << 16;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum LocaleError {
    #[error("not a partial order: {0}")]
    NotPartialOrder(OrderViolation),
    #[error("index {index} out of range for {size} points")]
    IndexOutOfRange { index: usize, size: usize },
    #[error("{points} points exceed the limit of {cap}")]
    TooManyPoints { points: usize, cap: usize },
    #[error("frame would have more than {cap} elements")]
    FrameTooLarge { cap: usize },
    #[error("lattice is not distributive")]
    NotDistributive,
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

/// A finite poset, row-major `leq[a * size + b]` meaning `a ≤ b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poset {
    size: usize,
    leq: Vec<bool>,
    names: Vec<String>,
}

impl Poset {
    pub fn new(size: usize, leq: Vec<bool>) -> Result<Self, LocaleError> {
        check_partial_order(size, &leq).map_err(LocaleError::NotPartialOrder)?;
        Ok(Self {
            size,
            leq,
            names: (0..size).map(|k| alloc::format!("{k}")).collect(),
        })
    }

    /// Reflexive-transitive closure of the given pairs.
    pub fn from_pairs(size: usize, pairs: &[(usize, usize)]) -> Result<Self, LocaleError> {
        let mut leq = alloc::vec![false; size * size];
        for &(a, b) in pairs {
            if let Some(&index) = [a, b].iter().find(|&&x| x >= size) {
                return Err(LocaleError::IndexOutOfRange { index, size });
            }
            leq[a * size + b] = true;
        }
        Self::new(size, transitive_closure(size, leq))
    }

    pub fn antichain(size: usize) -> Self {
        Self::from_pairs(size, &[]).expect("discrete order")
    }

    pub fn chain(size: usize) -> Self {
        let pairs: Vec<(usize, usize)> = (1..size).map(|k| (k - 1, k)).collect();
        Self::from_pairs(size, &pairs).expect("chain order")
    }

    pub fn with_names(mut self, names: Vec<String>) -> Self {
        if names.len() == self.size {
            self.names = names;
        }
        self
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a * self.size + b]
    }

    pub fn leq_relation(&self) -> &[bool] {
        &self.leq
    }

    /// Componentwise order on pairs, `(a, b)` at index `a * other.size + b`.
    pub fn product(&self, other: &Poset) -> Poset {
        let (n, m) = (self.size, other.size);
        let size = n * m;
        let leq = (0..size * size)
            .map(|k| {
                let (x, y) = (k / size, k % size);
                self.leq(x / m, y / m) && other.leq(x % m, y % m)
            })
            .collect();
        let names = (0..size)
            .map(|x| alloc::format!("({},{})", self.names[x / m], other.names[x % m]))
            .collect();
        Poset { size, leq, names }
    }
}

/// The frame of downsets of a finite poset.
///
/// Elements are indexed in increasing `(cardinality, mask)` order, so `0` is
/// the empty downset and the last index is the whole poset.
#[derive(Clone, Debug)]
pub struct FiniteFrame {
    base: Poset,
    downsets: Vec<u64>,
    index: BTreeMap<u64, usize>,
    lattice: SupLattice,
}

impl PartialEq for FiniteFrame {
    fn eq(&self, other: &Self) -> bool {
        self.base == other.base
    }
}

impl FiniteFrame {
    pub fn of_downsets(base: Poset) -> Result<Self, LocaleError> {
        let n = base.size();
        if n > MAX_POINTS {
            return Err(LocaleError::TooManyPoints { points: n, cap: MAX_POINTS });
        }
        let below: Vec<u64> = (0..n)
            .map(|x| (0..n).filter(|&y| base.leq(y, x)).fold(0u64, |m, y| m | 1 << y))
            .collect();
        // closure under unions of principal downsets, grown level by level
        let mut downsets: Vec<u64> = alloc::vec![0];
        let mut seen = alloc::collections::BTreeSet::from([0u64]);
        let mut k = 0;
        while k < downsets.len() {
            let d = downsets[k];
            for &p in &below {
                let e = d | p;
                if seen.insert(e) {
                    downsets.push(e);
                    if downsets.len() > MAX_FRAME_SIZE {
                        return Err(LocaleError::FrameTooLarge { cap: MAX_FRAME_SIZE });
                    }
                }
            }
            k += 1;
        }
        downsets.sort_by_key(|&d| (d.count_ones(), d));
        let index: BTreeMap<u64, usize> = downsets.iter().enumerate().map(|(i, &d)| (d, i)).collect();
        let size = downsets.len();
        let leq = (0..size * size)
            .map(|k| {
                let (a, b) = (downsets[k / size], downsets[k % size]);
                a & !b == 0
            })
            .collect();
        let names = downsets
            .iter()
            .map(|&d| {
                let members: Vec<&str> = (0..n).filter(|&x| d & (1 << x) != 0).map(|x| base.names[x].as_str()).collect();
                alloc::format!("{{{}}}", members.join(","))
            })
            .collect();
        let lattice = SupLattice::from_leq(size, leq)?.with_names(names);
        Ok(Self {
            base,
            downsets,
            index,
            lattice,
        })
    }

    /// The frame of a finite distributive lattice, presented by its
    /// join-irreducibles. Returns the frame and the index of each lattice
    /// element in it.
    pub fn from_lattice(l: &SupLattice) -> Result<(Self, Vec<usize>), LocaleError> {
        if !l.is_distributive() {
            return Err(LocaleError::NotDistributive);
        }
        let irr = l.join_irreducibles();
        let k = irr.len();
        let leq = (0..k * k).map(|t| l.leq(irr[t / k], irr[t % k])).collect();
        let names = irr.iter().map(|&j| String::from(l.name(j))).collect();
        let frame = Self::of_downsets(Poset::new(k, leq)?.with_names(names))?;
        let map = (0..l.size())
            .map(|x| {
                let mask = (0..k).filter(|&t| l.leq(irr[t], x)).fold(0u64, |m, t| m | 1 << t);
                frame.index_of(mask).expect("downset of irreducibles")
            })
            .collect();
        Ok((frame, map))
    }

    pub fn base_poset(&self) -> &Poset {
        &self.base
    }

    pub fn lattice(&self) -> &SupLattice {
        &self.lattice
    }

    pub fn size(&self) -> usize {
        self.downsets.len()
    }

    pub fn bottom(&self) -> usize {
        0
    }

    pub fn top(&self) -> usize {
        self.size() - 1
    }

    pub fn downset(&self, a: usize) -> u64 {
        self.downsets[a]
    }

    pub fn index_of(&self, mask: u64) -> Option<usize> {
        self.index.get(&mask).copied()
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.index[&(self.downsets[a] & self.downsets[b])]
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.index[&(self.downsets[a] | self.downsets[b])]
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.downsets[a] & !self.downsets[b] == 0
    }

    /// Product = meet, unit = top, trivial involution.
    pub fn as_quantale(&self) -> FiniteQuantale {
        FiniteQuantale::locale(self.lattice.clone())
    }

    /// The poset of join-irreducibles of the frame, which is isomorphic to
    /// the base poset.
    pub fn join_irreducible_poset(&self) -> Poset {
        let irr = self.lattice.join_irreducibles();
        let k = irr.len();
        let leq = (0..k * k).map(|t| self.leq(irr[t / k], irr[t % k])).collect();
        Poset::new(k, leq).expect("restriction of a partial order")
    }

    /// `a′ ⋖ a`: a witness `b` with `a′ ∧ b = 0` and `a ∨ b = 1`.
    pub fn well_inside(&self, a_prime: usize, a: usize) -> Option<usize> {
        (0..self.size())
            .find(|&b| self.meet(a_prime, b) == self.bottom() && self.join(a, b) == self.top())
    }

    /// Every `a` is the join of the elements well inside it; the witness is
    /// the first element that is not.
    pub fn is_regular(&self) -> Verdict<usize> {
        let l = &self.lattice;
        Verdict::from_witness((0..self.size()).find(|&a| {
            l.join_all((0..self.size()).filter(|&x| self.well_inside(x, a).is_some())) != a
        }))
    }

    /// Every element has a complement.
    pub fn is_boolean(&self) -> bool {
        (0..self.size()).all(|a| {
            (0..self.size()).any(|b| self.meet(a, b) == self.bottom() && self.join(a, b) == self.top())
        })
    }
}

/// A frame coproduct with its two coprojections, given as index maps.
#[derive(Clone, Debug)]
pub struct FrameCoproduct {
    pub frame: FiniteFrame,
    pub inj1: Vec<usize>,
    pub inj2: Vec<usize>,
}

/// `L1 ⊕ L2` as the downsets of the product of the base posets, with
/// `ι₁(a) = a × P2` and `ι₂(b) = P1 × b`.
pub fn frame_coproduct(l1: &FiniteFrame, l2: &FiniteFrame) -> Result<FrameCoproduct, LocaleError> {
    let (p1, p2) = (l1.base_poset(), l2.base_poset());
    let (n, m) = (p1.size(), p2.size());
    let frame = FiniteFrame::of_downsets(p1.product(p2))?;
    let inj1 = (0..l1.size())
        .map(|a| {
            let d = l1.downset(a);
            let mask = (0..n * m).filter(|&x| d & (1 << (x / m)) != 0).fold(0u64, |acc, x| acc | 1 << x);
            frame.index_of(mask).expect("cylinder is a downset")
        })
        .collect();
    let inj2 = (0..l2.size())
        .map(|b| {
            let d = l2.downset(b);
            let mask = (0..n * m).filter(|&x| d & (1 << (x % m)) != 0).fold(0u64, |acc, x| acc | 1 << x);
            frame.index_of(mask).expect("cylinder is a downset")
        })
        .collect();
    Ok(FrameCoproduct { frame, inj1, inj2 })
}

/// `ι₁(a) ⊙ ι₂(b) = ι₂(b) ⊙ ι₁(a)` for all `a`, `b`, with the frame's
/// product; the witness is the first failing pair.
pub fn check_generator_commutation(c: &FrameCoproduct) -> Verdict<(usize, usize)> {
    let q = c.frame.as_quantale();
    let witness = c.inj1.iter().enumerate().find_map(|(a, &x)| {
        c.inj2
            .iter()
            .position(|&y| q.mul(x, y) != q.mul(y, x))
            .map(|b| (a, b))
    });
    Verdict::from_witness(witness)
}

/// `f(⋁) = ⋁f`, `f(a ∧ b) = f(a) ∧ f(b)` and `f(1) = 1`.
pub fn is_frame_hom(src: &FiniteFrame, dst: &FiniteFrame, f: &[usize]) -> bool {
    let n = src.size();
    f[src.bottom()] == dst.bottom()
        && f[src.top()] == dst.top()
        && (0..n).all(|a| {
            (0..n).all(|b| f[src.join(a, b)] == dst.join(f[a], f[b]) && f[src.meet(a, b)] == dst.meet(f[a], f[b]))
        })
}

/// Every frame homomorphism `src → dst`, found by assigning images to the
/// join-irreducibles of `src` and extending by joins.
pub fn frame_homs(src: &FiniteFrame, dst: &FiniteFrame) -> Vec<Vec<usize>> {
    let l = src.lattice();
    let irr: Vec<usize> = l.linear_extension().into_iter().filter(|x| l.join_irreducibles().contains(x)).collect();
    let mut out = Vec::new();
    let mut images = alloc::vec![0usize; irr.len()];
    fn go(
        k: usize,
        irr: &[usize],
        images: &mut Vec<usize>,
        src: &FiniteFrame,
        dst: &FiniteFrame,
        out: &mut Vec<Vec<usize>>,
    ) {
        if k == irr.len() {
            let f: Vec<usize> = (0..src.size())
                .map(|x| {
                    dst.lattice()
                        .join_all((0..irr.len()).filter(|&t| src.leq(irr[t], x)).map(|t| images[t]))
                })
                .collect();
            if is_frame_hom(src, dst, &f) {
                out.push(f);
            }
            return;
        }
        for y in 0..dst.size() {
            if (0..k).all(|t| !src.leq(irr[t], irr[k]) || dst.leq(images[t], y)) {
                images[k] = y;
                go(k + 1, irr, images, src, dst, out);
            }
        }
    }
    go(0, &irr, &mut images, src, dst, &mut out);
    out.sort();
    out
}

/// Checks the coproduct universal property against `test`: every pair of
/// frame maps `f: L1 → test`, `g: L2 → test` factors through exactly one
/// frame map `h` with `h ∘ ι₁ = f` and `h ∘ ι₂ = g`. The witness is the
/// first pair `(f, g)` (as indices into [`frame_homs`]) with zero or several
/// factorizations.
pub fn verify_coproduct_universal(
    l1: &FiniteFrame,
    l2: &FiniteFrame,
    c: &FrameCoproduct,
    test: &FiniteFrame,
) -> Verdict<(usize, usize)> {
    let fs = frame_homs(l1, test);
    let gs = frame_homs(l2, test);
    let hs = frame_homs(&c.frame, test);
    let mut counts: BTreeMap<(Vec<usize>, Vec<usize>), usize> = BTreeMap::new();
    for h in &hs {
        let f: Vec<usize> = c.inj1.iter().map(|&x| h[x]).collect();
        let g: Vec<usize> = c.inj2.iter().map(|&y| h[y]).collect();
        *counts.entry((f, g)).or_default() += 1;
    }
    let witness = fs.iter().enumerate().find_map(|(i, f)| {
        gs.iter()
            .enumerate()
            .find(|(_, g)| counts.get(&(f.clone(), (*g).clone())) != Some(&1))
            .map(|(j, _)| (i, j))
    });
    Verdict::from_witness(witness)
}
