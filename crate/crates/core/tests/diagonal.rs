//! Supports, primes and the Hilbert-point spatialization of `Max ℂⁿ`.

use qlab_core::maxspec::{
    diagonal_support, is_prime_by_supports, primes_diagonal, random_subspace, spatialization_diagonal,
    standard_lines, support_subspace, Algebra, Subspace,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn spatialization_agrees_with_two_sided_closure() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for n in 1..=4 {
        let alg = Algebra::diagonal(n);
        let mut extra = standard_lines(n);
        extra.extend((0..20).map(|_| random_subspace(&mut rng, &alg)));
        let s = spatialization_diagonal(n, &extra).unwrap();
        assert_eq!(s.classes.len(), 1 << n);
        assert!(s.congruence, "n = {n}");
        assert!(s.agrees_with_closure, "n = {n}");
        assert!(s.boolean_iso.is_some(), "n = {n}");
        // same class iff same two-sided closure
        for (x, sx) in s.sample.iter().zip(&s.signatures) {
            for (y, sy) in s.sample.iter().zip(&s.signatures) {
                assert_eq!(sx == sy, x.two_sided_closure() == y.two_sided_closure());
            }
        }
    }
}

#[test]
fn primes_are_exactly_the_hyperplanes() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for n in 1..=4 {
        let alg = Algebra::diagonal(n);
        let primes = primes_diagonal(n);
        let mut candidates: Vec<Subspace> = (0..1u64 << n).map(|s| support_subspace(n, s)).collect();
        candidates.extend(standard_lines(n));
        candidates.extend((0..20).map(|_| random_subspace(&mut rng, &alg)));
        for p in &candidates {
            assert_eq!(is_prime_by_supports(p).unwrap(), primes.contains(p), "{p}");
        }
    }
}

#[test]
fn support_of_products_is_intersection() {
    let mut rng = ChaCha8Rng::seed_from_u64(29);
    let alg = Algebra::diagonal(4);
    let top = Subspace::top(&alg);
    for _ in 0..50 {
        let a = random_subspace(&mut rng, &alg);
        let b = random_subspace(&mut rng, &alg);
        let p = a.product3(&top, &b).unwrap();
        assert_eq!(diagonal_support(&p).unwrap(), diagonal_support(&a).unwrap() & diagonal_support(&b).unwrap());
    }
}
