use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::{check_partial_order, LatticeError, SupLattice};
use crate::iso::lattice_certificate;

/// Largest size accepted by [`enumerate_lattices`].
const MAX_ENUMERATED: usize = 7;

/// All lattices with at most `max_size` elements, one per isomorphism class,
/// ordered by size and then by canonical certificate.
///
/// A finite lattice with more than one element is a poset on the remaining
/// `size - 2` elements with a bottom and a top adjoined, so the search walks
/// every partial order on `size - 2` labelled points and keeps those whose
/// bounded completion has all binary joins.
pub fn enumerate_lattices(max_size: usize) -> Result<Vec<SupLattice>, LatticeError> {
    if max_size > MAX_ENUMERATED {
        return Err(LatticeError::CapExceeded {
            size: max_size,
            cap: MAX_ENUMERATED,
        });
    }
    let mut out = Vec::new();
    if max_size >= 1 {
        out.push(SupLattice::chain(1)?);
    }
    for size in 2..=max_size {
        let mut classes: BTreeMap<Vec<bool>, SupLattice> = BTreeMap::new();
        for inner in partial_orders(size - 2) {
            if let Some(l) = bounded_completion(size - 2, &inner) {
                classes.entry(lattice_certificate(&l)).or_insert(l);
            }
        }
        out.extend(classes.into_values());
    }
    Ok(out)
}

/// Every partial order on `k` labelled points, as row-major relations.
fn partial_orders(k: usize) -> Vec<Vec<bool>> {
    let pairs: Vec<(usize, usize)> = (0..k)
        .flat_map(|a| (0..k).filter(move |&b| b != a).map(move |b| (a, b)))
        .collect();
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << pairs.len()) {
        let mut rel = alloc::vec![false; k * k];
        for a in 0..k {
            rel[a * k + a] = true;
        }
        for (bit, &(a, b)) in pairs.iter().enumerate() {
            if mask & (1 << bit) != 0 {
                rel[a * k + b] = true;
            }
        }
        if check_partial_order(k, &rel).is_ok() {
            out.push(rel);
        }
    }
    out
}

/// Adjoins a new bottom (index 0) and top (index `k + 1`).
fn bounded_completion(k: usize, inner: &[bool]) -> Option<SupLattice> {
    let n = k + 2;
    let mut leq = alloc::vec![false; n * n];
    for a in 0..n {
        leq[a] = true; // 0 ≤ a
        leq[a * n + (n - 1)] = true; // a ≤ top
    }
    for a in 0..k {
        for b in 0..k {
            leq[(a + 1) * n + (b + 1)] = inner[a * k + b];
        }
    }
    SupLattice::from_leq(n, leq).ok()
}
