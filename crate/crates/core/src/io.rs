//! JSON file formats for relations, sets, coverings and implication frames.
//!
//! ```json
//! {"universe": ["a", "b", "c"], "pairs": [["a", "b"], ["b", "c"]]}
//! {"universe": {"size": 3}, "pairs": [["0", "1"]]}
//! {"set": ["a", "c"]}
//! {"universe": ["a", "b", "c"], "blocks": [["a", "b"], ["b", "c"]]}
//! {"propositions": ["p", "q", "r"], "implies": [["p", "q"]]}
//! ```
//!
//! Elements are referred to by label; a bare integer is accepted as an
//! index. Unknown keys are rejected.

use serde::{Deserialize, Serialize};

use crate::covering::Covering;
use crate::error::{Error, Result};
use crate::logic::ImplicationFrame;
use crate::relation::{BinaryRelation, Universe};
use crate::subset::SubsetOfV;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum UniverseSpec {
    Labels(Vec<String>),
    Sized(SizedUniverse),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SizedUniverse {
    pub size: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ElementRef {
    Label(String),
    Index(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RelationFile {
    pub universe: UniverseSpec,
    pub pairs: Vec<(ElementRef, ElementRef)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SetFile {
    pub set: Vec<ElementRef>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoveringFile {
    pub universe: UniverseSpec,
    pub blocks: Vec<Vec<ElementRef>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FrameFile {
    pub propositions: Vec<String>,
    pub implies: Vec<(ElementRef, ElementRef)>,
}

fn parse<'a, T: Deserialize<'a>>(what: &str, text: &'a str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Input(format!("{what}: {e}")))
}

impl UniverseSpec {
    pub fn build(&self) -> Result<Universe> {
        match self {
            UniverseSpec::Labels(l) => Universe::labelled(l.iter().cloned()),
            UniverseSpec::Sized(s) => Universe::new(s.size),
        }
    }

    pub fn of(u: &Universe) -> Self {
        match u.labels() {
            Some(l) => UniverseSpec::Labels(l.to_vec()),
            None => UniverseSpec::Sized(SizedUniverse { size: u.size() }),
        }
    }
}

fn resolve(u: &Universe, e: &ElementRef) -> Result<usize> {
    match e {
        ElementRef::Label(s) => u.index_of(s).ok_or_else(|| Error::Input(format!("unknown element {s:?}"))),
        ElementRef::Index(i) if *i < u.size() => Ok(*i),
        ElementRef::Index(i) => Err(Error::OutOfRange { index: *i, size: u.size() }),
    }
}

fn resolve_pairs(u: &Universe, pairs: &[(ElementRef, ElementRef)]) -> Result<Vec<(usize, usize)>> {
    pairs
        .iter()
        .enumerate()
        .map(|(i, (a, b))| {
            let ctx = |e: Error| Error::Input(format!("pairs[{i}]: {e}"));
            Ok((resolve(u, a).map_err(ctx)?, resolve(u, b).map_err(ctx)?))
        })
        .collect()
}

fn resolve_set(u: &Universe, items: &[ElementRef], field: &str) -> Result<SubsetOfV> {
    let idx = items
        .iter()
        .enumerate()
        .map(|(i, e)| resolve(u, e).map_err(|err| Error::Input(format!("{field}[{i}]: {err}"))))
        .collect::<Result<Vec<_>>>()?;
    SubsetOfV::from_indices(u.size(), idx)
}

pub fn parse_relation(text: &str) -> Result<BinaryRelation> {
    let f: RelationFile = parse("relation", text)?;
    let u = f.universe.build()?;
    let pairs = resolve_pairs(&u, &f.pairs)?;
    BinaryRelation::build(u, &pairs)
}

/// A set against the universe of an already-loaded relation.
pub fn parse_set(text: &str, universe: &Universe) -> Result<SubsetOfV> {
    let f: SetFile = parse("set", text)?;
    resolve_set(universe, &f.set, "set")
}

pub fn parse_covering(text: &str) -> Result<Covering> {
    let f: CoveringFile = parse("covering", text)?;
    let u = f.universe.build()?;
    let blocks = f
        .blocks
        .iter()
        .enumerate()
        .map(|(i, b)| resolve_set(&u, b, &format!("blocks[{i}]")))
        .collect::<Result<Vec<_>>>()?;
    Covering::new(u, blocks)
}

pub fn parse_frame(text: &str) -> Result<ImplicationFrame> {
    let f: FrameFile = parse("frame", text)?;
    let u = Universe::labelled(f.propositions.iter().cloned())?;
    let pairs = resolve_pairs(&u, &f.implies)?;
    ImplicationFrame::from_implications(u, &pairs)
}

pub fn relation_file(r: &BinaryRelation) -> RelationFile {
    let u = r.universe();
    RelationFile {
        universe: UniverseSpec::of(u),
        pairs: r
            .pairs()
            .into_iter()
            .map(|(a, b)| (ElementRef::Label(u.label(a)), ElementRef::Label(u.label(b))))
            .collect(),
    }
}

/// Labels of the members of `s`.
pub fn set_labels(u: &Universe, s: &SubsetOfV) -> Vec<String> {
    s.iter().map(|x| u.label(x)).collect()
}
