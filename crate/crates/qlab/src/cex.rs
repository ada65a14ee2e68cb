//! Bundled scenarios. Each one replays a fixed computation and records
//! every intermediate object together with the checks made on it.

use std::fmt::Display;

use qlab_core::exactnum::{ExactMatrix, GaussRational, RowSpace};
use qlab_core::maxspec::{
    commutative_reflection, coproduct_obstruction_check, generator_product, is_prime_by_supports, primes_diagonal,
    refute_prime, spatialization_diagonal, standard_lines, unital_star_homs_c2_c2, unital_star_homs_c2_m2,
    AlgElement, Algebra, HilbertPoint, StarHom, Subspace, MAX_DIAGONAL,
};
use qlab_core::quantale::is_spatial_by_primes;
use qlab_core::representation::{enumerate_representations_on, separates, CarrierFamily, Representation};
use serde::Serialize;
use thiserror::Error;

use crate::corpus::{self, ScenarioInfo};

/// Largest source and carrier size in the Kruml cross-check.
pub const KRUML_CAP: usize = 6;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CexError {
    #[error("unknown scenario {0:?}")]
    UnknownScenario(String),
    #[error("n = {n} is outside 1..={max}")]
    BadDimension { n: usize, max: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Step {
    pub step: String,
    pub output: String,
    /// `None` for steps that only record a value.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub check: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub scenario: String,
    pub location: String,
    pub verdict: Outcome,
    pub transcript: Vec<Step>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.verdict == Outcome::Pass
    }

    pub fn render_text(&self) -> String {
        let mut out = format!("scenario: {}\nlocation: {}\n", self.scenario, self.location);
        for s in &self.transcript {
            let mark = match s.check {
                Some(true) => "[ok]  ",
                Some(false) => "[FAIL]",
                None => "      ",
            };
            out.push_str(&format!("{mark} {}: {}\n", s.step, s.output));
        }
        let verdict = match self.verdict {
            Outcome::Pass => "PASS",
            Outcome::Fail => "FAIL",
        };
        out.push_str(&format!("verdict: {verdict}\n"));
        out
    }
}

#[derive(Clone, Copy, Debug)]
pub struct Options {
    /// Dimension for `spatialization-cn`.
    pub n: usize,
}

impl Default for Options {
    fn default() -> Self {
        Self { n: 4 }
    }
}

#[derive(Default)]
struct Transcript {
    steps: Vec<Step>,
}

impl Transcript {
    fn note(&mut self, step: impl Into<String>, output: impl Display) {
        self.steps.push(Step {
            step: step.into(),
            output: output.to_string(),
            check: None,
        });
    }

    fn check(&mut self, step: impl Into<String>, output: impl Display, ok: bool) -> bool {
        self.steps.push(Step {
            step: step.into(),
            output: output.to_string(),
            check: Some(ok),
        });
        ok
    }
}

pub fn list() -> Vec<ScenarioInfo> {
    corpus::scenarios()
}

pub fn run(name: &str, options: &Options) -> Result<Report, CexError> {
    let info = list()
        .into_iter()
        .find(|s| s.name == name)
        .ok_or_else(|| CexError::UnknownScenario(name.into()))?;
    if name == "spatialization-cn" && !(1..=MAX_DIAGONAL).contains(&options.n) {
        return Err(CexError::BadDimension {
            n: options.n,
            max: MAX_DIAGONAL,
        });
    }
    let mut t = Transcript::default();
    let result = match name {
        "m2-not-spatial" => m2_not_spatial(&mut t),
        "c2-diagonal-not-prime" => c2_diagonal_not_prime(&mut t),
        "spatialization-cn" => spatialization_cn(&mut t, options.n),
        "pushout-collapse" => pushout_collapse(&mut t),
        "spmax-m2-nontrivial" => spmax_m2_nontrivial(&mut t),
        "no-natural-spatialization" => no_natural_spatialization(&mut t),
        "coproduct-not-preserved" => coproduct_not_preserved(&mut t),
        "product-not-preserved" => product_not_preserved(&mut t),
        "faithful-sample" => faithful_sample(&mut t),
        "commutative-reflection" => commutative_reflection_scenario(&mut t),
        "kruml-crosscheck" => kruml_crosscheck(&mut t),
        _ => return Err(CexError::UnknownScenario(name.into())),
    };
    if let Err(e) = result {
        t.check("error", e, false);
    }
    let ok = !t.steps.is_empty() && t.steps.iter().all(|s| s.check != Some(false)) && t.steps.iter().any(|s| s.check.is_some());
    Ok(Report {
        scenario: info.name,
        location: info.location,
        verdict: if ok { Outcome::Pass } else { Outcome::Fail },
        transcript: t.steps,
    })
}

/// Every scenario, run in parallel, sorted by name.
pub fn run_all(options: &Options) -> Vec<Report> {
    let names: Vec<String> = list().into_iter().map(|s| s.name).collect();
    let mut reports: Vec<Report> = std::thread::scope(|scope| {
        let handles: Vec<_> = names
            .iter()
            .map(|name| scope.spawn(move || run(name, options)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("scenario thread").expect("bundled scenario"))
            .collect()
    });
    reports.sort_by(|a, b| a.scenario.cmp(&b.scenario));
    reports
}

type Run = anyhow::Result<()>;

fn g(x: i64) -> GaussRational {
    GaussRational::from(x)
}

fn m2(entries: [i64; 4]) -> AlgElement {
    let m = ExactMatrix::from_ints(2, 2, &entries).expect("2×2");
    AlgElement::new(&Algebra::matrix(2), vec![m]).expect("M₂ element")
}

fn diag(xs: &[i64]) -> AlgElement {
    AlgElement::diagonal(&xs.iter().map(|&x| g(x)).collect::<Vec<_>>())
}

fn line(xs: &[i64]) -> Subspace {
    Subspace::span(&Algebra::diagonal(xs.len()), &[diag(xs)]).expect("diagonal element")
}

fn span_m2(xs: &[[i64; 4]]) -> Subspace {
    let elements: Vec<AlgElement> = xs.iter().map(|&e| m2(e)).collect();
    Subspace::span(&Algebra::matrix(2), &elements).expect("M₂ elements")
}

fn vector_line(xs: &[GaussRational]) -> RowSpace {
    RowSpace::span(xs.len(), [xs.to_vec()]).expect("vector")
}

fn m2_not_spatial(t: &mut Transcript) -> Run {
    let r = span_m2(&[[1, 0, 0, 0], [0, 1, 0, 0]]);
    let l = span_m2(&[[1, 0, 0, 0], [0, 0, 1, 0]]);
    let p = span_m2(&[[1, 0, 0, 0], [0, 0, 0, 1], [0, 1, 1, 0]]);
    let top = Subspace::top(&Algebra::matrix(2));
    t.note("R (top row)", &r);
    t.note("L′ (left column)", &l);
    t.note("P (symmetric matrices)", &p);
    t.check("P is a hyperplane of M₂", format!("rank {}", p.rank()), p.rank() == 3);
    t.check("P* = P", p.star(), p.star() == p);
    let product = r.product3(&top, &l)?;
    let e11 = span_m2(&[[1, 0, 0, 0]]);
    t.check("R ⊙ ⊤ ⊙ L′ = ⟨E₁₁⟩", &product, product == e11);
    t.check("R ⊙ ⊤ ⊙ L′ ≤ P", product.leq(&p), product.leq(&p));
    t.check("R ≰ P", format!("R ≤ P is {}", r.leq(&p)), !r.leq(&p));
    t.check("L′ ≰ P", format!("L′ ≤ P is {}", l.leq(&p)), !l.leq(&p));
    let refutation = refute_prime(&p, &r, &l)?;
    t.check("P is not prime", refutation.refuted(), refutation.refuted());
    t.check("R is a right ideal", r.is_right_ideal(), r.is_right_ideal());
    t.check("R* = L′", r.star(), r.star() == l);
    Ok(())
}

fn c2_diagonal_not_prime(t: &mut Transcript) -> Run {
    let c2 = Algebra::diagonal(2);
    let p = line(&[1, 1]);
    let a = line(&[1, 0]);
    let b = line(&[0, 1]);
    t.note("P", &p);
    t.check("P is maximal (rank dim − 1)", format!("rank {}", p.rank()), p.rank() + 1 == c2.dim());
    let r = refute_prime(&p, &a, &b)?;
    t.check("⟨(1,0)⟩ ⊙ ⊤ ⊙ ⟨(0,1)⟩ ≤ P", &r.product, r.product_below);
    t.check("⟨(1,0)⟩ ≰ P and ⟨(0,1)⟩ ≰ P", format!("⟨(1,0)⟩ ≤ P is {}, ⟨(0,1)⟩ ≤ P is {}", r.a_below, r.b_below), !r.a_below && !r.b_below);
    let closure = p.two_sided_closure();
    t.check("⊤ ⊙ P ⊙ ⊤ = ℂ²", &closure, closure.is_top());
    let by_supports = is_prime_by_supports(&p)?;
    t.check("P is not prime by supports", by_supports, !by_supports);
    let primes = primes_diagonal(2);
    let shown: Vec<String> = primes.iter().map(ToString::to_string).collect();
    let all_prime = primes.iter().all(|q| is_prime_by_supports(q).unwrap_or(false));
    t.check("primes of Max ℂ²", shown.join(", "), all_prime && !primes.contains(&p));
    Ok(())
}

fn spatialization_cn(t: &mut Transcript, n: usize) -> Run {
    let lines = standard_lines(n);
    let s = spatialization_diagonal(n, &lines)?;
    t.note("n", n);
    t.note("sample size", s.sample.len());
    let names: Vec<&str> = s.quotient.lattice().names().iter().map(String::as_str).collect();
    t.check(format!("classes = 2^{n}"), format!("{} [{}]", s.classes.len(), names.join(" ")), s.classes.len() == 1 << n);
    t.check("quotient respects joins, products and star", s.congruence, s.congruence);
    match &s.boolean_iso {
        Some(iso) => t.check("quotient ≅ Boolean frame 2ⁿ", format!("{iso:?}"), true),
        None => t.check("quotient ≅ Boolean frame 2ⁿ", "no isomorphism", false),
    };
    t.check("classes agree with M ↦ ⊤ ⊙ M ⊙ ⊤", s.agrees_with_closure, s.agrees_with_closure);
    let all_ones = s.sample.iter().position(|m| *m == line(&vec![1; n]));
    let full = (1u64 << n) - 1;
    if let Some(k) = all_ones {
        t.check("⟨(1,…,1)⟩ is identified with ⊤", s.signatures[k] == full, s.signatures[k] == full);
    }
    Ok(())
}

/// `(a, b) ↦ diag(a, b)`.
fn diagonal_embedding() -> anyhow::Result<StarHom> {
    let c2 = Algebra::diagonal(2);
    let m = Algebra::matrix(2);
    Ok(StarHom::new(&c2, &m, vec![m2([1, 0, 0, 0]), m2([0, 0, 0, 1])])?)
}

/// `L` has equal columns, `R` equal rows.
fn pushout_ideals() -> (Subspace, Subspace) {
    (span_m2(&[[1, 1, 0, 0], [0, 0, 1, 1]]), span_m2(&[[1, 0, 1, 0], [0, 1, 0, 1]]))
}

fn pushout_collapse(t: &mut Transcript) -> Run {
    let f = diagonal_embedding()?;
    let (e, fl) = (line(&[1, 1]), line(&[1, -1]));
    let fe = f.max_image(&e)?;
    let ff = f.max_image(&fl)?;
    t.check("Max f(⟨(1,1)⟩) = ⟨I₂⟩", &fe, fe == span_m2(&[[1, 0, 0, 1]]));
    t.check("Max f(⟨(1,−1)⟩) = ⟨diag(1,−1)⟩", &ff, ff == span_m2(&[[1, 0, 0, -1]]));
    let (l, r) = pushout_ideals();
    t.note("L", &l);
    t.note("R", &r);
    let top = l.product3(&fe, &r)?;
    let zero = l.product3(&ff, &r)?;
    t.check("L ⊙ ⟨I₂⟩ ⊙ R = M₂", format!("rank {}", top.rank()), top.is_top() && top.rank() == 4);
    t.check("L ⊙ ⟨diag(1,−1)⟩ ⊙ R = 0", format!("rank {}", zero.rank()), zero.is_zero());
    Ok(())
}

fn probes(n: usize) -> Vec<RowSpace> {
    let gi = GaussRational::i();
    let mut out = vec![RowSpace::zero(n)];
    if n == 2 {
        for v in [[g(1), g(0)], [g(0), g(1)], [g(1), g(1)], [g(1), g(-1)], [g(1), gi]] {
            out.push(vector_line(&v));
        }
    }
    out.push(RowSpace::full(n));
    out
}

fn spmax_m2_nontrivial(t: &mut Transcript) -> Run {
    let m = Algebra::matrix(2);
    let p = HilbertPoint::new(&m, 0)?;
    let e = Subspace::unit(&m);
    let zero = Subspace::zero(&m);
    let top = Subspace::top(&m);
    let mut identity = true;
    let mut kills = true;
    let mut transitive = true;
    for w in probes(2) {
        identity &= p.act(&e, &w)? == w;
        kills &= p.act(&zero, &w)?.is_zero();
        transitive &= w.is_zero() || p.act(&top, &w)?.is_full();
    }
    t.check("⟨I₂⟩ acts as the identity on every probe", identity, identity);
    t.check("0 acts as 0", kills, kills);
    t.check("⊤ sends every nonzero probe to ℂ²", transitive, transitive);
    let full = RowSpace::full(2);
    let (a, b) = (p.act(&e, &full)?, p.act(&zero, &full)?);
    t.check("the point separates ⟨I₂⟩ from 0", format!("{a} vs {b}"), a != b);
    Ok(())
}

fn no_natural_spatialization(t: &mut Transcript) -> Run {
    let (e, fl) = (line(&[1, 1]), line(&[1, -1]));
    let s = spatialization_diagonal(2, &[e.clone(), fl.clone()])?;
    let sig = |m: &Subspace| s.sample.iter().position(|x| x == m).map(|k| s.signatures[k]);
    let (se, sf) = (sig(&e), sig(&fl));
    t.check("⟨(1,1)⟩ ~ ⟨(1,−1)⟩ in the spatialization of Max ℂ²", format!("{se:?} {sf:?}"), se.is_some() && se == sf);
    let f = diagonal_embedding()?;
    let fe = f.max_image(&e)?;
    let ff = f.max_image(&fl)?;
    t.note("Max f(⟨(1,1)⟩)", &fe);
    t.note("Max f(⟨(1,−1)⟩)", &ff);
    let (l, r) = pushout_ideals();
    let top = l.product3(&fe, &r)?;
    let zero = l.product3(&ff, &r)?;
    t.check("L ⊙ Max f(⟨(1,1)⟩) ⊙ R = ⊤", &top, top.is_top());
    t.check("L ⊙ Max f(⟨(1,−1)⟩) ⊙ R = 0", &zero, zero.is_zero());
    t.note(
        "naturality",
        "would give spat(Max f(⟨(1,1)⟩)) = spat(Max f(⟨(1,−1)⟩)), hence spat(⊤) = spat(0) in the spatialization of Max M₂",
    );
    let m = Algebra::matrix(2);
    let p = HilbertPoint::new(&m, 0)?;
    let full = RowSpace::full(2);
    let (pt, p0) = (p.act(&Subspace::top(&m), &full)?, p.act(&Subspace::zero(&m), &full)?);
    t.check("the Hilbert point of M₂ separates ⊤ from 0", format!("{pt} vs {p0}"), pt != p0);
    let w = vector_line(&[g(1), g(1)]);
    let (xe, xf) = (p.act(&fe, &w)?, p.act(&ff, &w)?);
    t.check("and separates Max f(⟨(1,1)⟩) from Max f(⟨(1,−1)⟩)", format!("{xe} vs {xf}"), xe != xf);
    Ok(())
}

fn coproduct_not_preserved(t: &mut Transcript) -> Run {
    let c2 = Algebra::diagonal(2);
    let c4 = Algebra::diagonal(4);
    let gamma1 = StarHom::new(&c2, &c4, vec![diag(&[1, 1, 0, 0]), diag(&[0, 0, 1, 1])]);
    let gamma2 = StarHom::new(&c2, &c4, vec![diag(&[1, 0, 1, 0]), diag(&[0, 1, 0, 1])]);
    t.check("γ₁(z, w) = (z, z, w, w) is a unital *-homomorphism", gamma1.is_ok(), gamma1.is_ok());
    t.check("γ₂(z′, w′) = (z′, w′, z′, w′) is a unital *-homomorphism", gamma2.is_ok(), gamma2.is_ok());
    let (gamma1, gamma2) = (gamma1?, gamma2?);

    let targets: Vec<[GaussRational; 4]> =
        [[1, 0, 1, 1], [1, 0, 0, 1], [1, 1, 1, 1], [1, 0, 0, 0]].iter().map(|v| v.map(g)).collect();
    let report = coproduct_obstruction_check(&targets);
    let patterns: Vec<String> = report
        .patterns
        .iter()
        .map(|p| format!("{:04b}→{}", p.factors, p.product_zeros()))
        .collect();
    t.note("zero patterns (z w z′ w′ → zeros of the product)", patterns.join(" "));
    t.check(
        "a product with one zero coordinate has at least two",
        report.single_zero_impossible,
        report.single_zero_impossible,
    );
    for d in &report.targets {
        let shown: Vec<String> = d.target.iter().map(ToString::to_string).collect();
        let detail = match &d.witness {
            Some(w) => {
                let w: Vec<String> = w.iter().map(ToString::to_string).collect();
                format!("reachable with (z, w, z′, w′) = ({})", w.join(", "))
            }
            None => format!("unreachable ({} zeros, rank one: {})", d.zeros, d.rank_one),
        };
        t.note(format!("target ({})", shown.join(",")), detail);
    }
    let key = report.targets.iter().find(|d| d.target == targets[0]);
    t.check("⟨(1,0,1,1)⟩ is unreachable", key.map(|d| d.reachable()) == Some(false), key.is_some_and(|d| !d.reachable()));
    t.check("witnesses multiply out and the grid oracle agrees", report.witnesses_verified && report.grid_agrees, report.holds());

    // the same products computed in Max ℂ⁴
    let grid = [g(0), g(1), g(-1), GaussRational::i(), g(2)];
    let key_atom = Subspace::span(&c4, &[AlgElement::diagonal(&targets[0])])?;
    let mut agree = true;
    let mut hits = 0usize;
    for z in &grid {
        for w in &grid {
            let a = gamma1.max_image(&Subspace::span(&c2, &[AlgElement::diagonal(&[z.clone(), w.clone()])])?)?;
            for z2 in &grid {
                for w2 in &grid {
                    let b = gamma2.max_image(&Subspace::span(&c2, &[AlgElement::diagonal(&[z2.clone(), w2.clone()])])?)?;
                    let prod = a.product(&b)?;
                    let expected = generator_product(&[z.clone(), w.clone(), z2.clone(), w2.clone()]);
                    agree &= prod == Subspace::span(&c4, &[AlgElement::diagonal(&expected)])?;
                    hits += usize::from(prod == key_atom);
                }
            }
        }
    }
    t.check("Max γ₁ atom ⊙ Max γ₂ atom = ⟨(zz′, zw′, wz′, ww′)⟩ on the grid", agree, agree);
    t.check("no grid product equals ⟨(1,0,1,1)⟩", hits, hits == 0);
    let join = line(&[1, 0, 0, 0]).join(&line(&[0, 0, 1, 1]))?;
    t.check("a join of distinct atoms is not an atom", format!("rank {}", join.rank()), join.rank() == 2);
    Ok(())
}

fn product_not_preserved(t: &mut Transcript) -> Run {
    let c1 = Algebra::diagonal(1);
    let c2 = Algebra::diagonal(2);
    // subspaces of ℂ are determined by their rank
    let max_c: Vec<Subspace> = vec![Subspace::zero(&c1), Subspace::top(&c1)];
    t.check("|Max ℂ| = 2", max_c.len(), max_c.len() == 2 && max_c[0] != max_c[1]);
    let product_size = max_c.len() * max_c.len();
    t.note("|Max ℂ × Max ℂ|", product_size);
    let five = [Subspace::zero(&c2), line(&[1, 0]), line(&[0, 1]), line(&[1, 1]), Subspace::top(&c2)];
    let shown: Vec<String> = five.iter().map(ToString::to_string).collect();
    let distinct = five.iter().enumerate().all(|(i, a)| five[i + 1..].iter().all(|b| a != b));
    t.check("five pairwise distinct elements of Max ℂ²", shown.join(", "), distinct && five.len() > product_size);
    let proj = |first: bool| -> anyhow::Result<StarHom> {
        let (one, zero) = (AlgElement::identity(&c1), AlgElement::zero(&c1));
        let images = if first { vec![one, zero] } else { vec![zero, one] };
        Ok(StarHom::new(&c2, &c1, images)?)
    };
    let (p1, p2) = (proj(true)?, proj(false)?);
    let pair = |m: &Subspace| -> anyhow::Result<(usize, usize)> { Ok((p1.max_image(m)?.rank(), p2.max_image(m)?.rank())) };
    let (a, b) = (pair(&line(&[1, 1]))?, pair(&Subspace::top(&c2))?);
    t.check("(Max π₁, Max π₂) identifies ⟨(1,1)⟩ with ℂ²", format!("{a:?} {b:?}"), a == b);
    Ok(())
}

fn separated_by(f: &StarHom, g: &StarHom, atoms: &[Subspace]) -> anyhow::Result<Option<usize>> {
    for (k, a) in atoms.iter().enumerate() {
        if f.max_image(a)? != g.max_image(a)? {
            return Ok(Some(k));
        }
    }
    Ok(None)
}

fn faithful_sample(t: &mut Transcript) -> Run {
    let (_, atoms) = corpus::atoms_c2();
    let shown: Vec<String> = atoms.iter().map(ToString::to_string).collect();
    t.note("atoms", shown.join(", "));
    let ideals = [line(&[1, 0]), line(&[0, 1])];
    for (label, homs) in [("ℂ² → ℂ²", unital_star_homs_c2_c2()), ("ℂ² → M₂", unital_star_homs_c2_m2())] {
        let basis = [diag(&[1, 0]), diag(&[0, 1])];
        let distinct = homs.iter().enumerate().all(|(i, f)| {
            homs[i + 1..].iter().all(|g| basis.iter().any(|b| f.apply(b) != g.apply(b)))
        });
        t.check(format!("{label}: {} pairwise distinct homs", homs.len()), distinct, distinct);
        let mut max_ok = true;
        let mut rs_ok = true;
        for (i, f) in homs.iter().enumerate() {
            for g in &homs[i + 1..] {
                max_ok &= separated_by(f, g, &atoms)?.is_some();
                let mut differ = false;
                for j in &ideals {
                    differ |= f.rs_functor(j)? != g.rs_functor(j)?;
                }
                rs_ok &= differ;
            }
        }
        t.check(format!("{label}: Max images differ on some atom"), max_ok, max_ok);
        t.check(format!("{label}: R f differs on a coordinate ideal"), rs_ok, rs_ok);
    }
    let swap = &unital_star_homs_c2_c2()[1];
    let image = swap.rs_functor(&ideals[0])?;
    t.check("R swap(⟨(1,0)⟩) = ⟨(0,1)⟩", &image, image == ideals[1]);
    Ok(())
}

fn commutative_reflection_scenario(t: &mut Transcript) -> Run {
    for (blocks, frame_size) in [(vec![2, 1], 2), (vec![2], 1), (vec![1, 1, 1], 8)] {
        let a = Algebra::new(blocks)?;
        let r = commutative_reflection(&a)?;
        t.note(format!("{a}: commutator ideal"), format!("rank {}", r.commutator_ideal.rank()));
        t.check(
            format!("{a}: reflection"),
            format!("{} (dim A − dim [A,A] = {})", r.reflection, r.quotient_dim),
            r.consistent(),
        );
        t.check(
            format!("{a}: frame of the reflection"),
            format!("{} elements, Boolean: {}", r.frame.size(), r.frame.is_boolean()),
            r.frame.size() == frame_size && r.frame.is_boolean(),
        );
    }
    Ok(())
}

fn kruml_crosscheck(t: &mut Transcript) -> Run {
    let family = CarrierFamily::up_to(KRUML_CAP)?;
    t.note("carrier lattices", family.len());
    for q in corpus::quantales().into_iter().filter(|q| q.quantale.size() <= KRUML_CAP) {
        let spatial = is_spatial_by_primes(&q.quantale);
        let mut points: Vec<Representation> = enumerate_representations_on(&q.quantale, &family)?;
        points.retain(Representation::is_irreducible);
        let sep = separates(&q.quantale, &points);
        let name = |x: usize| q.quantale.lattice().name(x).to_string();
        let detail = format!(
            "spatial by primes: {} ({}), {} irreducible representations, separating: {} ({})",
            spatial.holds(),
            spatial.witness().map_or_else(|| "-".into(), |&w| name(w)),
            points.len(),
            sep.holds(),
            sep.witness().map_or_else(|| "-".into(), |&(a, b)| format!("{} ~ {}", name(a), name(b))),
        );
        t.check(q.name.clone(), detail, spatial.holds() == sep.holds());
    }
    Ok(())
}
