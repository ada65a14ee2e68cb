//! One PASS/FAIL line per acceptance criterion. Run with
//! `cargo test -p qlab --test acceptance -- --nocapture` to see the lines.

use std::process::Command;
use std::time::{Duration, Instant};

use qlab::cex::KRUML_CAP;
use qlab::corpus;
use qlab_core::iso::lattice_isomorphism;
use qlab_core::locale::{frame_coproduct, verify_coproduct_universal, FiniteFrame, Poset};
use qlab_core::maxspec::{random_right_ideal, random_subspace, Algebra, Subspace};
use qlab_core::representation::{enumerate_representations_on, CarrierFamily};
use qlab_core::suplattice::SupLattice;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

const MAX_SEED: u64 = 20_240_601;
const MAX_TRIPLES: usize = 200;

struct Outcome {
    pass: bool,
    detail: String,
}

fn criterion(number: usize, title: &str, limit: Duration, body: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let outcome = body();
    let elapsed = start.elapsed();
    let pass = outcome.pass && elapsed < limit;
    println!(
        "criterion {number:>2} {}: {title} ({}; {:.2?} of {:?})",
        if pass { "PASS" } else { "FAIL" },
        outcome.detail,
        elapsed,
        limit
    );
    pass
}

/// Runs `qlab cex <args> --format json` and checks the verdict and the
/// named steps.
fn scenario(args: &[&str], required_steps: &[&str]) -> Outcome {
    let output = Command::new(env!("CARGO_BIN_EXE_qlab"))
        .arg("cex")
        .args(args)
        .args(["--format", "json"])
        .output()
        .expect("qlab runs");
    let report: Value = match serde_json::from_slice(&output.stdout) {
        Ok(v) => v,
        Err(e) => {
            return Outcome {
                pass: false,
                detail: format!("unreadable report: {e}"),
            }
        }
    };
    let transcript = report["transcript"].as_array().cloned().unwrap_or_default();
    let missing: Vec<&str> = required_steps
        .iter()
        .copied()
        .filter(|label| !transcript.iter().any(|s| s["step"] == *label && s["check"] == true))
        .collect();
    let verdict = report["verdict"].as_str().unwrap_or("missing").to_string();
    Outcome {
        pass: output.status.code() == Some(0) && verdict == "pass" && missing.is_empty(),
        detail: if missing.is_empty() {
            format!("verdict {verdict}")
        } else {
            format!("verdict {verdict}, missing checks {missing:?}")
        },
    }
}

fn property_suite() -> Outcome {
    let family = CarrierFamily::up_to(KRUML_CAP).expect("carrier family");
    let mut reps = 0;
    let mut failures = Vec::new();
    for q in corpus::quantales() {
        if q.quantale.unit().or_else(|| q.quantale.find_unit()).is_none() {
            continue;
        }
        for r in enumerate_representations_on(&q.quantale, &family).expect("enumeration") {
            reps += 1;
            let (strong, irreducible) = (r.is_strong(), r.is_irreducible());
            if strong && !irreducible {
                failures.push(format!("{}: strong but reducible", q.name));
            }
            if r.is_pre_unital().expect("unital source") && irreducible != strong {
                failures.push(format!("{}: pre-unital with irreducible ≠ strong", q.name));
            }
        }
    }
    Outcome {
        pass: reps > 0 && failures.is_empty(),
        detail: format!("{reps} representations, {} counterexamples {:?}", failures.len(), failures),
    }
}

fn max_law_suite() -> Outcome {
    let mut checked = 0;
    let mut failures = Vec::new();
    for blocks in ["[1,1]", "[1,1,1,1]", "[2]", "[2,1]"] {
        let alg: Algebra = blocks.parse().expect("algebra");
        let e = Subspace::unit(&alg);
        let mut rng = ChaCha8Rng::seed_from_u64(MAX_SEED);
        for _ in 0..MAX_TRIPLES {
            let a = random_subspace(&mut rng, &alg);
            let b = random_subspace(&mut rng, &alg);
            let c = random_subspace(&mut rng, &alg);
            let ab = a.product(&b).unwrap();
            let laws = [
                ("associativity", ab.product(&c).unwrap() == a.product(&b.product(&c).unwrap()).unwrap()),
                (
                    "left distributivity",
                    a.product(&b.join(&c).unwrap()).unwrap() == ab.join(&a.product(&c).unwrap()).unwrap(),
                ),
                (
                    "right distributivity",
                    a.join(&b).unwrap().product(&c).unwrap()
                        == a.product(&c).unwrap().join(&b.product(&c).unwrap()).unwrap(),
                ),
                ("unit", e.product(&a).unwrap() == a && a.product(&e).unwrap() == a),
                ("star involutive", a.star().star() == a),
                ("star reverses products", ab.star() == b.star().product(&a.star()).unwrap()),
                ("star preserves joins", a.join(&b).unwrap().star() == a.star().join(&b.star()).unwrap()),
            ];
            for (law, ok) in laws {
                checked += 1;
                if !ok {
                    failures.push(format!("{blocks}: {law}"));
                }
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(MAX_SEED + 1);
        for _ in 0..MAX_TRIPLES {
            let j = random_right_ideal(&mut rng, &alg);
            checked += 1;
            if !j.gelfand_identity().unwrap_or(false) {
                failures.push(format!("{blocks}: gelfand at {j}"));
            }
        }
    }
    Outcome {
        pass: failures.is_empty(),
        detail: format!("{checked} exact checks, seed {MAX_SEED}, {} failures {:?}", failures.len(), failures),
    }
}

/// Regularity straight from the definition: every `a` is the join of the
/// `c` that have some `b` with `c ∧ b = 0` and `a ∨ b = 1`.
fn regular_by_complement_scan(l: &SupLattice) -> bool {
    let n = l.size();
    (0..n).all(|a| {
        let well_inside = (0..n).filter(|&c| (0..n).any(|b| l.meet(c, b) == l.bottom() && l.join(a, b) == l.top()));
        l.join_all(well_inside) == a
    })
}

fn locale_suite() -> Outcome {
    let b4 = FiniteFrame::of_downsets(Poset::antichain(2)).unwrap();
    let b16 = FiniteFrame::of_downsets(Poset::antichain(4)).unwrap();
    let c = frame_coproduct(&b4, &b4).unwrap();
    let iso = lattice_isomorphism(c.frame.lattice(), b16.lattice()).is_some();
    let tests: Vec<(String, FiniteFrame)> = corpus::frames().into_iter().filter(|(_, f)| f.size() <= 8).collect();
    let universal: Vec<&str> = tests
        .iter()
        .filter(|(_, t)| !verify_coproduct_universal(&b4, &b4, &c, t).holds())
        .map(|(n, _)| n.as_str())
        .collect();

    let mut frames: Vec<(String, FiniteFrame)> = corpus::frames();
    for q in corpus::quantales() {
        if let Ok((f, _)) = FiniteFrame::from_lattice(q.quantale.lattice()) {
            frames.push((q.name, f));
        }
    }
    let regular_mismatch: Vec<&str> = frames
        .iter()
        .filter(|(_, f)| f.is_regular().holds() != regular_by_complement_scan(f.lattice()))
        .map(|(n, _)| n.as_str())
        .collect();
    Outcome {
        pass: iso && universal.is_empty() && regular_mismatch.is_empty() && !tests.is_empty(),
        detail: format!(
            "B4 ⊕ B4 ≅ B16: {iso}; universal property against {} frames, failures {:?}; regularity on {} frames, mismatches {:?}",
            tests.len(),
            universal,
            frames.len(),
            regular_mismatch
        ),
    }
}

#[test]
fn acceptance() {
    let s = Duration::from_secs;
    let results = [
        criterion(1, "m2-not-spatial", s(1), || {
            scenario(&["m2-not-spatial"], &["R ⊙ ⊤ ⊙ L′ = ⟨E₁₁⟩", "R ⊙ ⊤ ⊙ L′ ≤ P", "R ≰ P", "L′ ≰ P"])
        }),
        criterion(2, "pushout-collapse", s(1), || {
            scenario(&["pushout-collapse"], &["L ⊙ ⟨I₂⟩ ⊙ R = M₂", "L ⊙ ⟨diag(1,−1)⟩ ⊙ R = 0"])
        }),
        criterion(3, "spatialization-cn --n 4", s(5), || {
            scenario(
                &["spatialization-cn", "--n", "4"],
                &["classes = 2^4", "quotient ≅ Boolean frame 2ⁿ", "classes agree with M ↦ ⊤ ⊙ M ⊙ ⊤"],
            )
        }),
        criterion(4, "kruml-crosscheck", s(60), || scenario(&["kruml-crosscheck"], &["diagonal-fragment", "boolean4"])),
        criterion(5, "representation property suite", s(60), property_suite),
        criterion(6, "Max law suite", s(120), max_law_suite),
        criterion(7, "coproduct-not-preserved", s(1), || {
            scenario(
                &["coproduct-not-preserved"],
                &["a product with one zero coordinate has at least two", "⟨(1,0,1,1)⟩ is unreachable"],
            )
        }),
        criterion(8, "product-not-preserved", s(1), || {
            scenario(&["product-not-preserved"], &["five pairwise distinct elements of Max ℂ²"])
        }),
        criterion(9, "commutative-reflection", s(1), || {
            scenario(
                &["commutative-reflection"],
                &["blocks=[2,1]: frame of the reflection", "blocks=[2]: frame of the reflection"],
            )
        }),
        criterion(10, "faithful-sample", s(5), || {
            scenario(
                &["faithful-sample"],
                &["ℂ² → ℂ²: Max images differ on some atom", "ℂ² → M₂: Max images differ on some atom"],
            )
        }),
        criterion(11, "locale suite", s(60), locale_suite),
    ];
    let passed = results.iter().filter(|&&p| p).count();
    println!("acceptance: {passed}/{} criteria pass", results.len());
    assert_eq!(passed, results.len());
}
