//! Lower and upper approximation operators.
//!
//! Every pairing is pointwise: `lower(X) = { x | N_l(x) ⊆ X }` and
//! `upper(X) = { x | N_u(x) ∩ X ≠ ∅ }` where `N_l`, `N_u` are successor or
//! predecessor neighbourhoods depending on the pairing. The Pawlak pairing
//! is the granule-based form, defined only for equivalence relations.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::relation::BinaryRelation;
use crate::subset::SubsetOfV;

/// Which (lower, upper) operator pair is in force.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OperatorPairing {
    /// Both operators use successor sets; the standard dual generalisation.
    DualSuccessor,
    /// Lower uses successor sets, upper uses predecessor sets.
    NonDual,
    /// Lower uses predecessor sets, upper uses successor sets.
    MirrorNonDual,
    /// Equivalence classes as granules.
    Pawlak,
}

impl OperatorPairing {
    pub const ALL: [OperatorPairing; 4] = [
        OperatorPairing::DualSuccessor,
        OperatorPairing::NonDual,
        OperatorPairing::MirrorNonDual,
        OperatorPairing::Pawlak,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            OperatorPairing::DualSuccessor => "dual",
            OperatorPairing::NonDual => "nondual",
            OperatorPairing::MirrorNonDual => "mirror",
            OperatorPairing::Pawlak => "pawlak",
        }
    }
}

impl fmt::Display for OperatorPairing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for OperatorPairing {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().replace('_', "-").as_str() {
            "dual" | "dual-succ" | "dual-successor" => Ok(OperatorPairing::DualSuccessor),
            "nondual" | "non-dual" => Ok(OperatorPairing::NonDual),
            "mirror" | "mirror-nondual" | "mirror-non-dual" => Ok(OperatorPairing::MirrorNonDual),
            "pawlak" => Ok(OperatorPairing::Pawlak),
            _ => Err(Error::Input(format!("unknown pairing {s:?}"))),
        }
    }
}

impl Serialize for OperatorPairing {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

/// A lower/upper operator pair over a fixed finite universe.
pub trait Approximation {
    fn size(&self) -> usize;
    fn lower(&self, x: SubsetOfV) -> SubsetOfV;
    fn upper(&self, x: SubsetOfV) -> SubsetOfV;
}

/// Which neighbourhood an operator reads.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Direction {
    Successor,
    Predecessor,
}

/// Operators of one pairing bound to one relation, with neighbourhoods
/// precomputed.
#[derive(Debug, Clone)]
pub struct PairedOperators {
    n: usize,
    kind: Kind,
}

#[derive(Debug, Clone)]
enum Kind {
    Pointwise { lower_nb: Vec<u64>, upper_nb: Vec<u64> },
    Granular { classes: Vec<u64> },
}

fn neighbourhoods(r: &BinaryRelation, dir: Direction) -> Vec<u64> {
    match dir {
        Direction::Successor => r.rows().to_vec(),
        Direction::Predecessor => r.transpose().rows().to_vec(),
    }
}

impl PairedOperators {
    pub fn new(pairing: OperatorPairing, r: &BinaryRelation) -> Result<Self> {
        use Direction::*;
        let n = r.size();
        let (lo, up) = match pairing {
            OperatorPairing::DualSuccessor => (Successor, Successor),
            OperatorPairing::NonDual => (Successor, Predecessor),
            OperatorPairing::MirrorNonDual => (Predecessor, Successor),
            OperatorPairing::Pawlak => {
                let classes = granules(r)?.iter().map(SubsetOfV::bits).collect();
                return Ok(PairedOperators { n, kind: Kind::Granular { classes } });
            }
        };
        let lower_nb = neighbourhoods(r, lo);
        let upper_nb = if lo == up { lower_nb.clone() } else { neighbourhoods(r, up) };
        Ok(PairedOperators { n, kind: Kind::Pointwise { lower_nb, upper_nb } })
    }
}

impl Approximation for PairedOperators {
    #[inline]
    fn size(&self) -> usize {
        self.n
    }

    #[inline]
    fn lower(&self, x: SubsetOfV) -> SubsetOfV {
        let bits = match &self.kind {
            Kind::Pointwise { lower_nb, .. } => {
                lower_nb
                    .iter()
                    .enumerate()
                    .fold(0, |acc, (i, &nb)| if nb & !x.bits() == 0 { acc | 1 << i } else { acc })
            }
            Kind::Granular { classes } => classes.iter().filter(|&&c| c & !x.bits() == 0).fold(0, |acc, &c| acc | c),
        };
        SubsetOfV::from_bits_unchecked(self.n, bits)
    }

    #[inline]
    fn upper(&self, x: SubsetOfV) -> SubsetOfV {
        let bits = match &self.kind {
            Kind::Pointwise { upper_nb, .. } => {
                upper_nb.iter().enumerate().fold(0, |acc, (i, &nb)| if nb & x.bits() != 0 { acc | 1 << i } else { acc })
            }
            Kind::Granular { classes } => classes.iter().filter(|&&c| c & x.bits() != 0).fold(0, |acc, &c| acc | c),
        };
        SubsetOfV::from_bits_unchecked(self.n, bits)
    }
}

/// R_s(x) = { y | xRy }.
pub fn successor_set(r: &BinaryRelation, x: usize) -> Result<SubsetOfV> {
    r.successors(x)
}

/// R_p(x) = { y | yRx }.
pub fn predecessor_set(r: &BinaryRelation, x: usize) -> Result<SubsetOfV> {
    r.predecessors(x)
}

fn check_width(r: &BinaryRelation, x: &SubsetOfV) -> Result<()> {
    if r.size() != x.len() {
        return Err(Error::UniverseMismatch);
    }
    Ok(())
}

pub fn lower(pairing: OperatorPairing, r: &BinaryRelation, x: SubsetOfV) -> Result<SubsetOfV> {
    check_width(r, &x)?;
    Ok(PairedOperators::new(pairing, r)?.lower(x))
}

pub fn upper(pairing: OperatorPairing, r: &BinaryRelation, x: SubsetOfV) -> Result<SubsetOfV> {
    check_width(r, &x)?;
    Ok(PairedOperators::new(pairing, r)?.upper(x))
}

/// The partition V/E, classes ordered by least element.
pub fn granules(r: &BinaryRelation) -> Result<Vec<SubsetOfV>> {
    if !r.classify().equivalence() {
        return Err(Error::Precondition("granules are only defined for equivalence relations".into()));
    }
    let n = r.size();
    let mut seen = 0u64;
    let mut classes = Vec::new();
    for x in 0..n {
        if seen >> x & 1 == 1 {
            continue;
        }
        let class = r.rows()[x];
        seen |= class;
        classes.push(SubsetOfV::from_bits_unchecked(n, class));
    }
    Ok(classes)
}
