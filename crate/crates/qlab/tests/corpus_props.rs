use std::sync::Arc;

use qlab::corpus;
use qlab::formats::QuantaleFile;
use qlab_core::iso::{lattice_isomorphism, order_isomorphism, quantale_isomorphism};
use qlab_core::locale::{frame_coproduct, FiniteFrame, Poset};
use qlab_core::quantale::{primes, spatialize, verify_axioms, FiniteQuantale, QuantaleHom};
use qlab_core::representation::{enumerate_points, enumerate_representations};

fn small_quantales(cap: usize) -> Vec<corpus::CorpusQuantale> {
    corpus::quantales().into_iter().filter(|q| q.quantale.size() <= cap).collect()
}

#[test]
fn json_round_trip_is_identity() {
    for q in corpus::quantales() {
        let file = QuantaleFile::from_quantale(&q.quantale);
        let text = serde_json::to_string(&file).unwrap();
        let back = qlab::formats::parse_quantale(&text).unwrap();
        assert!(quantale_isomorphism(&q.quantale, &back).is_some(), "{}", q.name);
    }
}

/// `p ≠ 1` with `a ⊙ 1 ⊙ b ≤ p ⇒ a ≤ p or b ≤ p`, checked on all pairs.
fn primes_oracle(q: &FiniteQuantale) -> Vec<usize> {
    let n = q.size();
    (0..n)
        .filter(|&p| p != q.top())
        .filter(|&p| {
            (0..n).all(|a| (0..n).all(|b| !q.leq(q.mul3(a, q.top(), b), p) || q.leq(a, p) || q.leq(b, p)))
        })
        .collect()
}

#[test]
fn primes_match_oracle() {
    for q in corpus::quantales() {
        let mut found = primes(&q.quantale);
        found.sort_unstable();
        assert_eq!(found, primes_oracle(&q.quantale), "{}", q.name);
    }
}

#[test]
fn elements_below_unit_form_a_subquantale() {
    for q in corpus::quantales() {
        let q = &q.quantale;
        let Some(e) = q.unit() else { continue };
        let below: Vec<usize> = (0..q.size()).filter(|&a| q.leq(a, e)).collect();
        for &a in &below {
            if let Some(s) = q.star(a) {
                assert!(q.leq(s, e));
            }
            for &b in &below {
                assert!(q.leq(q.mul(a, b), q.meet(a, b)));
                assert!(q.leq(q.join(a, b), e));
            }
        }
    }
}

#[test]
fn locale_flag_matches_meet_product_oracle() {
    for q in corpus::quantales() {
        let q = &q.quantale;
        let n = q.size();
        let oracle = q.lattice().is_distributive() && (0..n).all(|a| (0..n).all(|b| q.mul(a, b) == q.meet(a, b)));
        assert_eq!(verify_axioms(q).flags.locale, oracle);
    }
}

#[test]
fn representations_satisfy_action_laws() {
    for cq in small_quantales(4) {
        let q = &cq.quantale;
        for r in enumerate_representations(q, 4).unwrap() {
            let s = r.carrier();
            for x in 0..s.size() {
                for a in 0..q.size() {
                    assert_eq!(r.action(s.bottom(), a), s.bottom());
                    for b in 0..q.size() {
                        assert_eq!(r.action(x, q.mul(a, b)), r.action(r.action(x, a), b), "{}", cq.name);
                        assert_eq!(r.action(x, q.join(a, b)), s.join(r.action(x, a), r.action(x, b)));
                    }
                }
            }
        }
    }
}

#[test]
fn spatialization_by_points_is_sound() {
    for cq in small_quantales(6) {
        let q = &cq.quantale;
        let points: Vec<QuantaleHom> = enumerate_points(q, 3).unwrap().iter().map(|r| r.hom().clone()).collect();
        let s = spatialize(q, &points).unwrap();
        assert!(verify_axioms(&s.quotient).flags.is_quantale, "{}", cq.name);
        for a in 0..q.size() {
            for b in 0..q.size() {
                let (fa, fb) = (s.map.apply(a), s.map.apply(b));
                assert_eq!(s.map.apply(q.mul(a, b)), s.quotient.mul(fa, fb));
                assert_eq!(s.map.apply(q.join(a, b)), s.quotient.join(fa, fb));
            }
        }
        // spatializing the quotient again changes nothing
        let q2 = Arc::clone(&s.quotient);
        let again: Vec<QuantaleHom> = enumerate_points(&q2, 3).unwrap().iter().map(|r| r.hom().clone()).collect();
        assert_eq!(spatialize(&q2, &again).unwrap().classes.len(), q2.size(), "{}", cq.name);
    }
}

#[test]
fn birkhoff_round_trip() {
    for (name, p) in corpus::posets() {
        let f = FiniteFrame::of_downsets(p.clone()).unwrap();
        let j = f.join_irreducible_poset();
        assert!(
            order_isomorphism(p.size(), p.leq_relation(), j.size(), j.leq_relation()).is_some(),
            "{name}"
        );
    }
}

#[test]
fn frames_are_strictly_two_sided_locales() {
    for (name, f) in corpus::frames() {
        let flags = verify_axioms(&f.as_quantale()).flags;
        assert!(flags.is_quantale && flags.locale && flags.unital && flags.strong && flags.strictly_two_sided, "{name}");
        assert_eq!(flags.involutive, Some(true));
        assert_eq!(flags.gelfand, Some(true));
    }
}

#[test]
fn frame_recognition_round_trip() {
    for (name, f) in corpus::frames() {
        let (g, _) = FiniteFrame::from_lattice(f.lattice()).unwrap();
        assert!(lattice_isomorphism(f.lattice(), g.lattice()).is_some(), "{name}");
    }
}

#[test]
fn coproduct_is_commutative_and_associative() {
    let small: Vec<(String, Poset)> = corpus::posets().into_iter().filter(|(_, p)| p.size() <= 2).collect();
    let frame = |p: &Poset| FiniteFrame::of_downsets(p.clone()).unwrap();
    for (_, a) in &small {
        for (_, b) in &small {
            let (fa, fb) = (frame(a), frame(b));
            let ab = frame_coproduct(&fa, &fb).unwrap().frame;
            let ba = frame_coproduct(&fb, &fa).unwrap().frame;
            assert!(lattice_isomorphism(ab.lattice(), ba.lattice()).is_some());
            for (_, c) in &small {
                let fc = frame(c);
                let left = frame_coproduct(&ab, &fc).unwrap().frame;
                let bc = frame_coproduct(&fb, &fc).unwrap().frame;
                let right = frame_coproduct(&fa, &bc).unwrap().frame;
                assert!(lattice_isomorphism(left.lattice(), right.lattice()).is_some());
            }
        }
    }
}
