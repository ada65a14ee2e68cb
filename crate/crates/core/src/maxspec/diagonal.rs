use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::{AlgElement, Algebra, HilbertPoint, MaxError, Subspace};
use crate::exactnum::{GaussRational, RowSpace};
use crate::iso::quantale_isomorphism;
use crate::locale::{FiniteFrame, Poset};
use crate::quantale::FiniteQuantale;
use crate::suplattice::SupLattice;

/// Largest `n` for which `ℂⁿ` supports are handled as bitmasks and the
/// `2ⁿ × 2ⁿ` support tests are run.
pub const MAX_DIAGONAL: usize = 8;

fn check_diagonal(algebra: &Algebra) -> Result<usize, MaxError> {
    if !algebra.is_commutative() || algebra.dim() > MAX_DIAGONAL {
        return Err(MaxError::NotDiagonal);
    }
    Ok(algebra.dim())
}

/// Coordinates where some element of `M ⊆ ℂⁿ` is nonzero, as a bitmask
/// (bit `x` for coordinate `x`, counting from zero).
pub fn diagonal_support(m: &Subspace) -> Result<u64, MaxError> {
    check_diagonal(m.algebra())?;
    Ok(m.row_space()
        .basis_vectors()
        .flat_map(|v| v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(k, _)| k))
        .fold(0u64, |acc, k| acc | 1 << k))
}

/// The coordinate subspace `{v : v_x = 0 for x ∉ S}`.
pub fn support_subspace(n: usize, mask: u64) -> Subspace {
    let algebra = Algebra::diagonal(n);
    let gens: Vec<AlgElement> = (0..n)
        .filter(|&x| mask & (1 << x) != 0)
        .map(|x| AlgElement::unit_matrix(&algebra, x, 0, 0))
        .collect();
    Subspace::span(&algebra, &gens).expect("diagonal generators")
}

/// `I_x = {v : v_x = 0}`.
pub fn hyperplane(n: usize, x: usize) -> Subspace {
    support_subspace(n, ((1u64 << n) - 1) & !(1 << x))
}

/// The primes of `Max ℂⁿ`: the `n` coordinate hyperplanes.
pub fn primes_diagonal(n: usize) -> Vec<Subspace> {
    (0..n).map(|x| hyperplane(n, x)).collect()
}

/// Primality of `P ⊆ ℂⁿ` decided on coordinate subspaces: `P ≠ ⊤` and for
/// all supports `S`, `T`, `C_{S∩T} ≤ P` implies `C_S ≤ P` or `C_T ≤ P`,
/// using `C_S ⊙ ⊤ ⊙ C_T = C_{S∩T}`.
pub fn is_prime_by_supports(p: &Subspace) -> Result<bool, MaxError> {
    let n = check_diagonal(p.algebra())?;
    if p.is_top() {
        return Ok(false);
    }
    let below: Vec<bool> = (0..1u64 << n).map(|s| support_subspace(n, s).leq(p)).collect();
    Ok((0..1usize << n).all(|s| (0..1usize << n).all(|t| !below[s & t] || below[s] || below[t])))
}

/// The three comparisons behind a refutation of primality of `P`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeRefutation {
    pub product: Subspace,
    pub product_below: bool,
    pub a_below: bool,
    pub b_below: bool,
}

impl PrimeRefutation {
    /// `a ⊙ ⊤ ⊙ b ≤ P` while neither `a` nor `b` is below `P`.
    pub fn refuted(&self) -> bool {
        self.product_below && !self.a_below && !self.b_below
    }
}

pub fn refute_prime(p: &Subspace, a: &Subspace, b: &Subspace) -> Result<PrimeRefutation, MaxError> {
    let product = a.product3(&Subspace::top(p.algebra()), b)?;
    Ok(PrimeRefutation {
        product_below: product.leq(p),
        a_below: a.leq(p),
        b_below: b.leq(p),
        product,
    })
}

/// The spatialization of `Max ℂⁿ` by its Hilbert points, computed on a
/// finite sample of subspaces that always includes every coordinate
/// subspace.
#[derive(Clone, Debug)]
pub struct DiagonalSpatialization {
    pub n: usize,
    pub sample: Vec<Subspace>,
    /// Hilbert-point signature of each sample element: bit `k` is set when
    /// point `k` sends `ℂ` to `ℂ`.
    pub signatures: Vec<u64>,
    /// Distinct signatures, ascending; class `i` is `classes[i]`.
    pub classes: Vec<u64>,
    pub quotient: FiniteQuantale,
    /// Every sampled join, product and involution respects the classes.
    pub congruence: bool,
    /// Every sample element has signature equal to its support, and
    /// `⊤ ⊙ M ⊙ ⊤` is the coordinate subspace of that support.
    pub agrees_with_closure: bool,
    /// Isomorphism from the quotient to the Boolean frame `2ⁿ`.
    pub boolean_iso: Option<Vec<usize>>,
}

fn hilbert_signature(points: &[HilbertPoint], m: &Subspace) -> Result<u64, MaxError> {
    let mut sig = 0u64;
    for p in points {
        if !p.act(m, &RowSpace::full(1))?.is_zero() {
            sig |= 1 << p.block();
        }
    }
    Ok(sig)
}

pub fn spatialization_diagonal(n: usize, extra: &[Subspace]) -> Result<DiagonalSpatialization, MaxError> {
    let algebra = Algebra::diagonal(n);
    check_diagonal(&algebra)?;
    let points = HilbertPoint::all(&algebra);
    let mut sample: Vec<Subspace> = (0..1u64 << n).map(|s| support_subspace(n, s)).collect();
    for m in extra {
        if m.algebra() != &algebra {
            return Err(MaxError::AlgebraMismatch);
        }
        if !sample.contains(m) {
            sample.push(m.clone());
        }
    }
    let signatures = sample
        .iter()
        .map(|m| hilbert_signature(&points, m))
        .collect::<Result<Vec<_>, _>>()?;
    let mut classes = signatures.clone();
    classes.sort_unstable();
    classes.dedup();
    let class_of: BTreeMap<u64, usize> = classes.iter().enumerate().map(|(i, &s)| (s, i)).collect();
    let rep: Vec<usize> = classes
        .iter()
        .map(|s| signatures.iter().position(|t| t == s).expect("observed"))
        .collect();
    let m = classes.len();

    let sig = |x: &Subspace| hilbert_signature(&points, x);
    let mut join = alloc::vec![0; m * m];
    let mut product = alloc::vec![0; m * m];
    let mut congruence = true;
    for i in 0..m {
        for j in 0..m {
            let (a, b) = (&sample[rep[i]], &sample[rep[j]]);
            join[i * m + j] = class_of.get(&sig(&a.join(b)?)?).copied().ok_or(MaxError::NotDiagonal)?;
            product[i * m + j] = class_of.get(&sig(&a.product(b)?)?).copied().ok_or(MaxError::NotDiagonal)?;
        }
    }
    for (x, &sx) in sample.iter().zip(&signatures) {
        for (y, &sy) in sample.iter().zip(&signatures) {
            let (i, j) = (class_of[&sx], class_of[&sy]);
            congruence &= sig(&x.join(y)?)? == classes[join[i * m + j]];
            congruence &= sig(&x.product(y)?)? == classes[product[i * m + j]];
        }
    }
    let mut star = Vec::with_capacity(m);
    for i in 0..m {
        star.push(class_of[&sig(&sample[rep[i]].star())?]);
    }
    for (x, &sx) in sample.iter().zip(&signatures) {
        congruence &= sig(&x.star())? == classes[star[class_of[&sx]]];
    }
    let unit = class_of.get(&sig(&Subspace::unit(&algebra))?).copied();

    let leq = (0..m * m).map(|k| join[k] == k % m).collect();
    let lattice = SupLattice::from_leq(m, leq).map_err(|_| MaxError::NotDiagonal)?;
    let lattice = lattice.with_names(classes.iter().map(|&s| mask_name(s)).collect());
    let quotient = FiniteQuantale::new(lattice, product, unit, Some(star)).map_err(|_| MaxError::NotDiagonal)?;

    let mut agrees_with_closure = true;
    for (x, &sx) in sample.iter().zip(&signatures) {
        agrees_with_closure &= diagonal_support(x)? == sx && x.two_sided_closure() == support_subspace(n, sx);
    }
    let boolean = FiniteFrame::of_downsets(Poset::antichain(n))
        .map_err(|_| MaxError::NotDiagonal)?
        .as_quantale();
    let boolean_iso = quantale_isomorphism(&quotient, &boolean);
    Ok(DiagonalSpatialization {
        n,
        sample,
        signatures,
        classes,
        quotient,
        congruence,
        agrees_with_closure,
        boolean_iso,
    })
}

/// `{1,3}` style name of a support, counting coordinates from one.
pub(crate) fn mask_name(mask: u64) -> alloc::string::String {
    let members: Vec<alloc::string::String> =
        (0..64).filter(|&x| mask & (1 << x) != 0).map(|x| alloc::format!("{}", x + 1)).collect();
    alloc::format!("{{{}}}", members.join(","))
}

/// Lines through `e_x + e_y`, `e_x − e_y` and `(1, …, 1)` in `ℂⁿ`.
pub fn standard_lines(n: usize) -> Vec<Subspace> {
    let algebra = Algebra::diagonal(n);
    let mut out = Vec::new();
    let coords = |f: &dyn Fn(usize) -> i64| AlgElement::diagonal(&(0..n).map(|k| GaussRational::from(f(k))).collect::<Vec<_>>());
    for x in 0..n {
        for y in x + 1..n {
            for s in [1, -1] {
                let v = coords(&|k| if k == x { 1 } else if k == y { s } else { 0 });
                out.push(Subspace::span(&algebra, &[v]).expect("diagonal"));
            }
        }
    }
    out.push(Subspace::span(&algebra, &[coords(&|_| 1)]).expect("diagonal"));
    out
}
