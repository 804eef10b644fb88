//! Biconditional characterizations of relation classes by approximation
//! properties, and the witness sets that refute a property when the class
//! predicate fails.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::approx::{OperatorPairing, PairedOperators};
use crate::error::{Error, Result};
use crate::properties::PropertyId;
use crate::relation::{BinaryRelation, RelationClassFlags};
use crate::subset::SubsetOfV;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CharacterizationId {
    /// l(X) ⊆ X for all X iff R is reflexive.
    ReflexiveLower,
    /// X ⊆ u(X) for all X iff R is reflexive.
    ReflexiveUpper,
    /// u(l(X)) ⊆ X for all X iff R is symmetric.
    Symmetric,
    /// u(u(X)) ⊆ u(X) for all X iff R is transitive.
    TransitiveUpper,
    /// l(X) ⊆ X, u(l(X)) ⊆ X and u(u(X)) ⊆ u(X) iff R is an equivalence.
    Equivalence,
    /// As [`Equivalence`](Self::Equivalence) with X ⊆ u(X) in place of l(X) ⊆ X.
    EquivalenceAlt,
    /// u_t(X) ⊆ l(u_t(X)) for all X iff R is transitive.
    TransitiveNonDual,
    /// l(X) ⊆ X and u_t(X) ⊆ l(u_t(X)) iff R is a pre-order.
    Preorder,
}

impl CharacterizationId {
    pub const ALL: [CharacterizationId; 8] = [
        CharacterizationId::ReflexiveLower,
        CharacterizationId::ReflexiveUpper,
        CharacterizationId::Symmetric,
        CharacterizationId::TransitiveUpper,
        CharacterizationId::Equivalence,
        CharacterizationId::EquivalenceAlt,
        CharacterizationId::TransitiveNonDual,
        CharacterizationId::Preorder,
    ];

    pub fn tag(&self) -> &'static str {
        match self {
            CharacterizationId::ReflexiveLower => "REFLEXIVE_LOWER",
            CharacterizationId::ReflexiveUpper => "REFLEXIVE_UPPER",
            CharacterizationId::Symmetric => "SYMMETRIC",
            CharacterizationId::TransitiveUpper => "TRANSITIVE_UPPER",
            CharacterizationId::Equivalence => "EQUIVALENCE",
            CharacterizationId::EquivalenceAlt => "EQUIVALENCE_ALT",
            CharacterizationId::TransitiveNonDual => "TRANSITIVE_NONDUAL",
            CharacterizationId::Preorder => "PREORDER",
        }
    }

    /// Table rows (under a pairing) whose conjunction is the property side.
    pub fn components(&self) -> &'static [(u8, OperatorPairing)] {
        use OperatorPairing::{DualSuccessor as D, NonDual as N};
        match self {
            CharacterizationId::ReflexiveLower => &[(6, D)],
            CharacterizationId::ReflexiveUpper => &[(7, D)],
            CharacterizationId::Symmetric => &[(23, D)],
            CharacterizationId::TransitiveUpper => &[(18, D)],
            CharacterizationId::Equivalence => &[(6, D), (23, D), (18, D)],
            CharacterizationId::EquivalenceAlt => &[(7, D), (23, D), (18, D)],
            CharacterizationId::TransitiveNonDual => &[(21, N)],
            CharacterizationId::Preorder => &[(6, N), (21, N)],
        }
    }

    pub fn class_holds(&self, f: &RelationClassFlags) -> bool {
        match self {
            CharacterizationId::ReflexiveLower | CharacterizationId::ReflexiveUpper => f.reflexive,
            CharacterizationId::Symmetric => f.symmetric,
            CharacterizationId::TransitiveUpper | CharacterizationId::TransitiveNonDual => f.transitive,
            CharacterizationId::Equivalence | CharacterizationId::EquivalenceAlt => f.equivalence(),
            CharacterizationId::Preorder => f.preorder(),
        }
    }
}

impl fmt::Display for CharacterizationId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for CharacterizationId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let norm = s.trim().to_ascii_uppercase().replace('-', "_");
        CharacterizationId::ALL
            .into_iter()
            .find(|c| c.tag() == norm)
            .ok_or_else(|| Error::Input(format!("unknown characterization {s:?}")))
    }
}

/// Both sides of a biconditional evaluated independently.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ConsistencyRecord {
    pub property_holds: bool,
    pub class_holds: bool,
    pub consistent: bool,
}

struct Bound {
    dual: PairedOperators,
    nondual: PairedOperators,
}

impl Bound {
    fn new(r: &BinaryRelation) -> Self {
        Bound {
            dual: PairedOperators::new(OperatorPairing::DualSuccessor, r).expect("relational pairing"),
            nondual: PairedOperators::new(OperatorPairing::NonDual, r).expect("relational pairing"),
        }
    }

    fn ops(&self, pairing: OperatorPairing) -> &PairedOperators {
        match pairing {
            OperatorPairing::NonDual => &self.nondual,
            _ => &self.dual,
        }
    }

    fn holds_at(&self, c: CharacterizationId, x: SubsetOfV) -> bool {
        c.components()
            .iter()
            .all(|&(row, pairing)| PropertyId::new(row).expect("valid row").holds(self.ops(pairing), x, x))
    }
}

/// The property side of `c` at one set.
pub fn property_at(c: CharacterizationId, r: &BinaryRelation, x: SubsetOfV) -> Result<bool> {
    if x.len() != r.size() {
        return Err(Error::UniverseMismatch);
    }
    Ok(Bound::new(r).holds_at(c, x))
}

/// The property side of `c` quantified over every subset.
pub fn property_holds(c: CharacterizationId, r: &BinaryRelation) -> bool {
    let b = Bound::new(r);
    SubsetOfV::all(r.size()).all(|x| b.holds_at(c, x))
}

pub fn check_biconditional(c: CharacterizationId, r: &BinaryRelation) -> ConsistencyRecord {
    let property_holds = property_holds(c, r);
    let class_holds = c.class_holds(&r.classify());
    ConsistencyRecord { property_holds, class_holds, consistent: property_holds == class_holds }
}

fn non_reflexive_point(r: &BinaryRelation) -> Option<usize> {
    (0..r.size()).find(|&x| !r.contains(x, x))
}

fn asymmetric_pair(r: &BinaryRelation) -> Option<(usize, usize)> {
    r.pairs().into_iter().find(|&(x, y)| !r.contains(y, x))
}

/// Lexicographically least `(x, y, z)` with xRy, yRz and not xRz.
fn intransitive_triple(r: &BinaryRelation) -> Option<(usize, usize, usize)> {
    let n = r.size();
    (0..n).find_map(|x| {
        (0..n)
            .filter(|&y| r.contains(x, y))
            .find_map(|y| (0..n).find(|&z| r.contains(y, z) && !r.contains(x, z)).map(|z| (x, y, z)))
    })
}

/// The set constructed by the contrapositive proof of `c`: a set at which
/// the property side is false. Violation tuples are chosen
/// lexicographically least; conjunctive characterizations check
/// reflexivity, then symmetry, then transitivity.
pub fn proof_witness(c: CharacterizationId, r: &BinaryRelation) -> Result<SubsetOfV> {
    use CharacterizationId::*;
    let n = r.size();
    let reflexive_lower = || non_reflexive_point(r).map(|x| r.successors(x).expect("in range"));
    let reflexive_upper = || non_reflexive_point(r).map(|x| SubsetOfV::from_bits_unchecked(n, 1 << x));
    let symmetric = || asymmetric_pair(r).map(|(_, y)| r.successors(y).expect("in range"));
    let trans_upper = || intransitive_triple(r).map(|(_, _, z)| SubsetOfV::from_bits_unchecked(n, 1 << z));
    let trans_nondual = || intransitive_triple(r).map(|(x, _, _)| SubsetOfV::from_bits_unchecked(n, 1 << x));
    let witness = match c {
        ReflexiveLower => reflexive_lower(),
        ReflexiveUpper => reflexive_upper(),
        Symmetric => symmetric(),
        TransitiveUpper => trans_upper(),
        TransitiveNonDual => trans_nondual(),
        Equivalence => reflexive_lower().or_else(symmetric).or_else(trans_upper),
        EquivalenceAlt => reflexive_upper().or_else(symmetric).or_else(trans_upper),
        Preorder => reflexive_lower().or_else(trans_nondual),
    };
    witness.ok_or(Error::NoWitness)
}
