//! The atoms of `Max ℂ⁴` reachable from the images of the two coprojections
//! `γ₁(z, w) = (z, z, w, w)` and `γ₂(z′, w′) = (z′, w′, z′, w′)`.
//!
//! `ℂ⁴` is commutative and `⟨a⟩ ⊙ ⟨b⟩ = ⟨ab⟩`, so any product of image atoms
//! collapses to one factor from each image: `(zz′, zw′, wz′, ww′)`. The
//! involution only conjugates entries. An atom is never a join of other
//! atoms, so an atom of the generated subquantale must be such a product.

use alloc::vec::Vec;

use crate::exactnum::GaussRational;

/// Which of `z, w, z′, w′` vanish, and which product coordinates vanish.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ZeroPattern {
    /// Bits for `z, w, z′, w′`.
    pub factors: u8,
    /// Bits for the four coordinates of `(zz′, zw′, wz′, ww′)`.
    pub product: u8,
}

impl ZeroPattern {
    pub fn product_zeros(&self) -> u32 {
        self.product.count_ones()
    }
}

/// All 16 zero patterns of the factors with the induced product pattern.
pub fn zero_patterns() -> Vec<ZeroPattern> {
    (0u8..16)
        .map(|factors| {
            let zero = |bit: u8| factors & (1 << bit) != 0;
            let (z, w, z2, w2) = (zero(0), zero(1), zero(2), zero(3));
            let coords = [z || z2, z || w2, w || z2, w || w2];
            let product = coords
                .iter()
                .enumerate()
                .fold(0u8, |acc, (k, &c)| if c { acc | 1 << k } else { acc });
            ZeroPattern { factors, product }
        })
        .collect()
}

/// Whether `⟨t⟩` is `⟨(zz′, zw′, wz′, ww′)⟩` for some scalars, with the
/// factors when it is.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AtomReachability {
    pub target: [GaussRational; 4],
    /// Coordinates of `t` that vanish.
    pub zeros: u32,
    /// `t₁t₄ = t₂t₃`: the 2×2 arrangement of `t` has rank one.
    pub rank_one: bool,
    /// `(z, w, z′, w′)` with `(zz′, zw′, wz′, ww′) = t`.
    pub witness: Option<[GaussRational; 4]>,
}

impl AtomReachability {
    pub fn reachable(&self) -> bool {
        self.witness.is_some()
    }
}

/// Decides reachability of a nonzero `t` exactly. Arranged as the matrix
/// `[[t₁, t₂], [t₃, t₄]] = (z, w)ᵀ(z′, w′)`, `t` is reachable iff it has
/// rank one; a witness is read off a nonzero entry.
pub fn atom_reachability(t: [GaussRational; 4]) -> AtomReachability {
    let zeros = t.iter().filter(|x| x.is_zero()).count() as u32;
    let rank_one = zeros < 4 && &t[0] * &t[3] == &t[1] * &t[2];
    let witness = rank_one.then(|| {
        let k = t.iter().position(|x| !x.is_zero()).expect("nonzero target");
        let (i, j) = (k / 2, k % 2);
        let pivot = t[k].inv().expect("nonzero pivot");
        // u = column j, v = row i / t_ij
        let u = [t[j].clone(), t[2 + j].clone()];
        let v = [&t[2 * i] * &pivot, &t[2 * i + 1] * &pivot];
        [u[0].clone(), u[1].clone(), v[0].clone(), v[1].clone()]
    });
    AtomReachability {
        target: t,
        zeros,
        rank_one,
        witness,
    }
}

/// The product `(zz′, zw′, wz′, ww′)`.
pub fn generator_product(f: &[GaussRational; 4]) -> [GaussRational; 4] {
    [&f[0] * &f[2], &f[0] * &f[3], &f[1] * &f[2], &f[1] * &f[3]]
}

/// Summary of the zero-pattern argument and the per-target decisions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObstructionReport {
    pub patterns: Vec<ZeroPattern>,
    /// No product pattern has exactly one zero.
    pub single_zero_impossible: bool,
    pub targets: Vec<AtomReachability>,
    /// Every witness multiplies out to its target.
    pub witnesses_verified: bool,
    /// A grid search over `{0, 1, −1, i, 2}` found a preimage for every
    /// reachable target among those that are proportional to a grid product.
    pub grid_agrees: bool,
}

impl ObstructionReport {
    /// `(1,0,1,1)` is unreachable and everything else checks out.
    pub fn holds(&self) -> bool {
        let g = GaussRational::from;
        let key = [g(1), g(0), g(1), g(1)];
        self.single_zero_impossible
            && self.witnesses_verified
            && self.grid_agrees
            && self.targets.iter().any(|t| t.target == key && !t.reachable())
    }
}

fn grid() -> Vec<GaussRational> {
    alloc::vec![
        GaussRational::zero(),
        GaussRational::one(),
        GaussRational::from(-1),
        GaussRational::i(),
        GaussRational::from(2),
    ]
}

pub fn coproduct_obstruction_check(targets: &[[GaussRational; 4]]) -> ObstructionReport {
    let patterns = zero_patterns();
    let single_zero_impossible = patterns.iter().all(|p| p.product_zeros() != 1);
    let decisions: Vec<AtomReachability> = targets.iter().cloned().map(atom_reachability).collect();
    let witnesses_verified = decisions
        .iter()
        .all(|d| d.witness.as_ref().is_none_or(|w| generator_product(w) == d.target));

    // grid oracle: which targets are hit exactly by some grid product
    let g = grid();
    let mut hit = alloc::vec![false; targets.len()];
    for a in &g {
        for b in &g {
            for c in &g {
                for d in &g {
                    let p = generator_product(&[a.clone(), b.clone(), c.clone(), d.clone()]);
                    for (k, t) in targets.iter().enumerate() {
                        hit[k] |= p == *t;
                    }
                }
            }
        }
    }
    // a grid hit proves reachability; no unreachable target may be hit
    let grid_agrees = decisions.iter().zip(&hit).all(|(d, &h)| !h || d.reachable());
    ObstructionReport {
        patterns,
        single_zero_impossible,
        targets: decisions,
        witnesses_verified,
        grid_agrees,
    }
}
