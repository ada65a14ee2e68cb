//! JSON file formats.
//!
//! Lattices list element names and an order relation, which is closed
//! reflexively and transitively on load, so covering pairs are enough.
//! Element references may be names or indices.

use std::sync::Arc;

use qlab_core::exactnum::{ExactError, ExactMatrix, GaussRational};
use qlab_core::locale::{LocaleError, Poset};
use qlab_core::maxspec::{AlgElement, Algebra, MaxError, Subspace};
use qlab_core::quantale::{FiniteQuantale, QuantaleError, QuantaleHom};
use qlab_core::suplattice::{LatticeError, SupLattice};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unknown element {0:?}")]
    UnknownElement(String),
    #[error("element index {index} out of range for {size} elements")]
    IndexOutOfRange { index: usize, size: usize },
    #[error("product table must be {n}×{n}")]
    ProductShape { n: usize },
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Quantale(#[from] QuantaleError),
    #[error(transparent)]
    Locale(#[from] LocaleError),
    #[error(transparent)]
    Max(#[from] MaxError),
    #[error(transparent)]
    Exact(#[from] ExactError),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ElementRef {
    Index(usize),
    Name(String),
}

impl ElementRef {
    fn resolve(&self, names: &[String]) -> Result<usize, FormatError> {
        match self {
            ElementRef::Index(i) if *i < names.len() => Ok(*i),
            ElementRef::Index(i) => Err(FormatError::IndexOutOfRange {
                index: *i,
                size: names.len(),
            }),
            ElementRef::Name(s) => names
                .iter()
                .position(|n| n == s)
                .ok_or_else(|| FormatError::UnknownElement(s.clone())),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct LatticeFile {
    pub elements: Vec<String>,
    pub leq: Vec<[ElementRef; 2]>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct QuantaleFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    pub lattice: LatticeFile,
    pub product: Vec<Vec<ElementRef>>,
    #[serde(default)]
    pub unit: Option<ElementRef>,
    #[serde(default)]
    pub star: Option<Vec<ElementRef>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PosetFile {
    pub points: Vec<String>,
    pub leq: Vec<[ElementRef; 2]>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PointFile {
    pub target: QuantaleFile,
    pub map: Vec<ElementRef>,
}

/// Spanning elements; each element is a list of blocks, each block a list
/// of rows of scalar literals such as `"1"`, `"-1/2"` or `"0+1i"`.
pub type SubspaceFile = Vec<Vec<Vec<Vec<String>>>>;

fn resolve_pairs(pairs: &[[ElementRef; 2]], names: &[String]) -> Result<Vec<(usize, usize)>, FormatError> {
    pairs
        .iter()
        .map(|[a, b]| Ok((a.resolve(names)?, b.resolve(names)?)))
        .collect()
}

impl LatticeFile {
    pub fn build(&self) -> Result<SupLattice, FormatError> {
        let pairs = resolve_pairs(&self.leq, &self.elements)?;
        Ok(SupLattice::from_pairs(self.elements.len(), &pairs)?.with_names(self.elements.clone()))
    }

    /// Covering pairs only.
    pub fn from_lattice(l: &SupLattice) -> Self {
        let n = l.size();
        let covers = (0..n)
            .flat_map(|a| (0..n).map(move |b| (a, b)))
            .filter(|&(a, b)| l.lt(a, b) && !(0..n).any(|c| l.lt(a, c) && l.lt(c, b)));
        Self {
            elements: l.names().to_vec(),
            leq: covers
                .map(|(a, b)| [ElementRef::Name(l.name(a).into()), ElementRef::Name(l.name(b).into())])
                .collect(),
        }
    }
}

impl QuantaleFile {
    pub fn build(&self) -> Result<FiniteQuantale, FormatError> {
        let lattice = self.lattice.build()?;
        let names = &self.lattice.elements;
        let n = names.len();
        if self.product.len() != n || self.product.iter().any(|row| row.len() != n) {
            return Err(FormatError::ProductShape { n });
        }
        let product = self
            .product
            .iter()
            .flatten()
            .map(|x| x.resolve(names))
            .collect::<Result<Vec<_>, _>>()?;
        let unit = self.unit.as_ref().map(|e| e.resolve(names)).transpose()?;
        let star = self
            .star
            .as_ref()
            .map(|s| s.iter().map(|x| x.resolve(names)).collect::<Result<Vec<_>, _>>())
            .transpose()?;
        Ok(FiniteQuantale::new(lattice, product, unit, star)?)
    }

    pub fn from_quantale(q: &FiniteQuantale) -> Self {
        let l = q.lattice();
        let name = |x: usize| ElementRef::Name(l.name(x).into());
        let n = q.size();
        Self {
            note: None,
            lattice: LatticeFile::from_lattice(l),
            product: (0..n).map(|a| (0..n).map(|b| name(q.mul(a, b))).collect()).collect(),
            unit: q.unit().map(name),
            star: q.star_table().map(|s| s.iter().map(|&x| name(x)).collect()),
        }
    }
}

impl PosetFile {
    pub fn build(&self) -> Result<Poset, FormatError> {
        let pairs = resolve_pairs(&self.leq, &self.points)?;
        Ok(Poset::from_pairs(self.points.len(), &pairs)?.with_names(self.points.clone()))
    }
}

impl PointFile {
    pub fn build(&self, source: &Arc<FiniteQuantale>) -> Result<QuantaleHom, FormatError> {
        let target = self.target.build()?;
        let names = &self.target.lattice.elements;
        let map = self.map.iter().map(|x| x.resolve(names)).collect::<Result<Vec<_>, _>>()?;
        Ok(QuantaleHom::new(Arc::clone(source), Arc::new(target), map)?)
    }
}

pub fn parse_lattice(text: &str) -> Result<SupLattice, FormatError> {
    serde_json::from_str::<LatticeFile>(text)?.build()
}

pub fn parse_quantale(text: &str) -> Result<FiniteQuantale, FormatError> {
    serde_json::from_str::<QuantaleFile>(text)?.build()
}

pub fn parse_poset(text: &str) -> Result<Poset, FormatError> {
    serde_json::from_str::<PosetFile>(text)?.build()
}

pub fn parse_point(text: &str, source: &Arc<FiniteQuantale>) -> Result<QuantaleHom, FormatError> {
    serde_json::from_str::<PointFile>(text)?.build(source)
}

pub fn build_element(algebra: &Algebra, blocks: &[Vec<Vec<String>>]) -> Result<AlgElement, FormatError> {
    let matrices = blocks
        .iter()
        .zip(algebra.blocks())
        .map(|(rows, &n)| {
            let rows = rows
                .iter()
                .map(|r| r.iter().map(|s| s.parse::<GaussRational>()).collect::<Result<Vec<_>, _>>())
                .collect::<Result<Vec<_>, _>>()?;
            Ok(ExactMatrix::from_rows(n, rows)?)
        })
        .collect::<Result<Vec<_>, FormatError>>()?;
    if matrices.len() != blocks.len() || blocks.len() != algebra.blocks().len() {
        return Err(MaxError::Shape {
            expected: format!("{} blocks", algebra.blocks().len()),
            found: format!("{} blocks", blocks.len()),
        }
        .into());
    }
    Ok(AlgElement::new(algebra, matrices)?)
}

pub fn parse_subspace(text: &str, algebra: &Algebra) -> Result<Subspace, FormatError> {
    let file: SubspaceFile = serde_json::from_str(text)?;
    let elements = file
        .iter()
        .map(|e| build_element(algebra, e))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Subspace::span(algebra, &elements)?)
}

/// The canonical basis, in the subspace file format.
pub fn subspace_to_file(m: &Subspace) -> SubspaceFile {
    m.basis()
        .iter()
        .map(|x| {
            x.blocks()
                .iter()
                .map(|b| b.row_iter().map(|r| r.iter().map(|z| z.to_string()).collect()).collect())
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    const CHAIN3: &str = r#"{
        "lattice": {"elements": ["0", "a", "1"], "leq": [["0", "a"], ["a", "1"]]},
        "product": [["0","0","0"],["0","a","a"],["0","a","1"]],
        "unit": "1",
        "star": [0, 1, 2]
    }"#;

    #[test]
    fn quantale_round_trip() {
        let q = parse_quantale(CHAIN3).unwrap();
        assert_eq!(q.unit(), Some(2));
        let text = serde_json::to_string(&QuantaleFile::from_quantale(&q)).unwrap();
        assert_eq!(parse_quantale(&text).unwrap(), q);
    }

    #[test]
    fn unknown_names_and_bad_shapes() {
        let bad = CHAIN3.replace(r#""unit": "1""#, r#""unit": "e""#);
        assert!(matches!(parse_quantale(&bad), Err(FormatError::UnknownElement(_))));
        let short = r#"{"lattice": {"elements": ["0"], "leq": []}, "product": []}"#;
        assert!(matches!(parse_quantale(short), Err(FormatError::ProductShape { n: 1 })));
        let open = r#"{"elements": ["0", "a", "b"], "leq": [["0","a"],["0","b"]]}"#;
        assert!(matches!(parse_lattice(open), Err(FormatError::Lattice(_))));
    }

    #[test]
    fn subspace_round_trip() {
        let m2 = Algebra::matrix(2);
        let text = r#"[[[["1","0"],["0","0+1i"]]], [[["1","0"],["0","-1/2"]]]]"#;
        let s = parse_subspace(text, &m2).unwrap();
        assert_eq!(s.rank(), 2);
        let again = serde_json::to_string(&subspace_to_file(&s)).unwrap();
        assert_eq!(parse_subspace(&again, &m2).unwrap(), s);
        assert!(parse_subspace(r#"[[[["1"]]]]"#, &m2).is_err());
    }

    #[test]
    fn poset_file() {
        let p = parse_poset(r#"{"points": ["a","b","c"], "leq": [["a","c"],["b","c"]]}"#).unwrap();
        assert!(p.leq(0, 2) && !p.leq(0, 1));
    }
}
