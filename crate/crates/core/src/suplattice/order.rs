use alloc::vec::Vec;
use core::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrderViolation {
    NotReflexive { element: usize },
    NotAntisymmetric { a: usize, b: usize },
    NotTransitive { a: usize, b: usize, c: usize },
}

impl fmt::Display for OrderViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            OrderViolation::NotReflexive { element } => write!(f, "{element} ≰ {element}"),
            OrderViolation::NotAntisymmetric { a, b } => {
                write!(f, "{a} ≤ {b} and {b} ≤ {a} with {a} ≠ {b}")
            }
            OrderViolation::NotTransitive { a, b, c } => {
                write!(f, "{a} ≤ {b} ≤ {c} but {a} ≰ {c}")
            }
        }
    }
}

/// Checks that a row-major `size × size` relation is a partial order.
pub fn check_partial_order(size: usize, leq: &[bool]) -> Result<(), OrderViolation> {
    let le = |a: usize, b: usize| leq[a * size + b];
    for a in 0..size {
        if !le(a, a) {
            return Err(OrderViolation::NotReflexive { element: a });
        }
    }
    for a in 0..size {
        for b in (a + 1)..size {
            if le(a, b) && le(b, a) {
                return Err(OrderViolation::NotAntisymmetric { a, b });
            }
        }
    }
    for a in 0..size {
        for b in 0..size {
            if !le(a, b) {
                continue;
            }
            for c in 0..size {
                if le(b, c) && !le(a, c) {
                    return Err(OrderViolation::NotTransitive { a, b, c });
                }
            }
        }
    }
    Ok(())
}

/// Reflexive-transitive closure (Warshall) of a row-major relation.
pub fn transitive_closure(size: usize, mut rel: Vec<bool>) -> Vec<bool> {
    for a in 0..size {
        rel[a * size + a] = true;
    }
    for k in 0..size {
        for i in 0..size {
            if !rel[i * size + k] {
                continue;
            }
            for j in 0..size {
                if rel[k * size + j] {
                    rel[i * size + j] = true;
                }
            }
        }
    }
    rel
}
