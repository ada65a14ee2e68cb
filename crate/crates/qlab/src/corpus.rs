//! The bundled corpus: small quantales, posets for finite frames, an atom
//! set of `Max ℂ²`, and the scenario index.

use std::sync::Arc;

use qlab_core::locale::{FiniteFrame, Poset};
use qlab_core::maxspec::{Algebra, Subspace};
use qlab_core::quantale::FiniteQuantale;
use qlab_core::suplattice::{endo_quantale, SupLattice};
use serde::Deserialize;

use crate::formats::{build_element, parse_poset, parse_quantale, QuantaleFile, SubspaceFile};

macro_rules! bundled {
    ($dir:literal: $($name:literal),* $(,)?) => {
        &[$(($name, include_str!(concat!("../corpus/", $dir, "/", $name, ".json")))),*]
    };
}

const QUANTALES: &[(&str, &str)] = bundled!("quantales":
    "trivial",
    "two",
    "chain3",
    "chain4",
    "boolean4",
    "two-by-three",
    "boolean8",
    "zero-product-two",
    "nilpotent-chain3",
    "gelfand-failure-chain3",
    "left-projection-chain3",
    "diagonal-fragment",
);

const POSETS: &[(&str, &str)] = bundled!("posets":
    "empty",
    "point",
    "antichain2",
    "chain2",
    "antichain3",
    "chain3",
    "vee",
    "wedge",
    "chain2-plus-point",
    "antichain4",
    "zigzag",
);

const ATOMS_C2: &str = include_str!("../corpus/atoms-c2.json");
const SCENARIOS: &str = include_str!("../corpus/scenarios.json");

#[derive(Clone, Debug)]
pub struct CorpusQuantale {
    pub name: String,
    pub note: Option<String>,
    pub quantale: Arc<FiniteQuantale>,
}

/// The bundled quantale files followed by `Q(S)` for the chains of sizes 2
/// and 3 and for Boolean 4, which are generated rather than stored.
pub fn quantales() -> Vec<CorpusQuantale> {
    let mut out: Vec<CorpusQuantale> = QUANTALES
        .iter()
        .map(|(name, text)| {
            let file: QuantaleFile = serde_json::from_str(text).expect("bundled quantale parses");
            CorpusQuantale {
                name: (*name).into(),
                note: file.note.clone(),
                quantale: Arc::new(parse_quantale(text).expect("bundled quantale builds")),
            }
        })
        .collect();
    let generated = [
        ("endo-chain2", SupLattice::chain(2)),
        ("endo-chain3", SupLattice::chain(3)),
        ("endo-boolean4", SupLattice::boolean(2)),
    ];
    for (name, s) in generated {
        let s = s.expect("small lattice");
        let e = endo_quantale(&s, qlab_core::suplattice::DEFAULT_ENDO_CAP).expect("under the cap");
        out.push(CorpusQuantale {
            name: name.into(),
            note: Some(format!("join-preserving endomaps of a {}-element lattice", s.size())),
            quantale: Arc::clone(e.quantale()),
        });
    }
    out
}

pub fn quantale(name: &str) -> Option<CorpusQuantale> {
    quantales().into_iter().find(|q| q.name == name)
}

pub fn posets() -> Vec<(String, Poset)> {
    POSETS
        .iter()
        .map(|(name, text)| ((*name).into(), parse_poset(text).expect("bundled poset parses")))
        .collect()
}

/// The frames of downsets of the bundled posets.
pub fn frames() -> Vec<(String, FiniteFrame)> {
    posets()
        .into_iter()
        .map(|(name, p)| (name, FiniteFrame::of_downsets(p).expect("small poset")))
        .collect()
}

#[derive(Deserialize)]
struct AtomFile {
    algebra: String,
    atoms: Vec<SubspaceFile>,
}

/// Lines of `ℂ²` used to compare `Max` images.
pub fn atoms_c2() -> (Algebra, Vec<Subspace>) {
    let file: AtomFile = serde_json::from_str(ATOMS_C2).expect("bundled atoms parse");
    let algebra: Algebra = file.algebra.parse().expect("bundled algebra");
    let atoms = file
        .atoms
        .iter()
        .map(|spanners| {
            let elements: Vec<_> = spanners
                .iter()
                .map(|e| build_element(&algebra, e).expect("bundled element"))
                .collect();
            Subspace::span(&algebra, &elements).expect("bundled atom")
        })
        .collect();
    (algebra, atoms)
}

#[derive(Clone, Debug, Deserialize)]
pub struct ScenarioInfo {
    pub name: String,
    pub location: String,
    pub summary: String,
}

/// Sorted by name.
pub fn scenarios() -> Vec<ScenarioInfo> {
    let mut list: Vec<ScenarioInfo> = serde_json::from_str(SCENARIOS).expect("bundled scenario index");
    list.sort_by(|a, b| a.name.cmp(&b.name));
    list
}
