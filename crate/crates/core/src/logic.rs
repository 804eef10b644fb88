//! Implication frames: a pre-order on propositions, with the non-dual upper
//! approximation read as deductive closure and the lower approximation as
//! the largest theory inside a set.

use crate::approx::{Approximation, OperatorPairing, PairedOperators};
use crate::error::{Error, Result};
use crate::relation::{BinaryRelation, Universe};
use crate::subset::SubsetOfV;

/// Propositions with an implication pre-order; `p → q` is the pair `(p, q)`.
#[derive(Debug, Clone)]
pub struct ImplicationFrame {
    implies: BinaryRelation,
    ops: PairedOperators,
}

impl ImplicationFrame {
    /// Closes `implies` reflexively and transitively.
    pub fn new(implies: &BinaryRelation) -> Self {
        let implies = implies.reflexive_transitive_closure();
        let ops = PairedOperators::new(OperatorPairing::NonDual, &implies).expect("relational pairing");
        ImplicationFrame { implies, ops }
    }

    pub fn from_implications(propositions: Universe, implications: &[(usize, usize)]) -> Result<Self> {
        Ok(ImplicationFrame::new(&BinaryRelation::build(propositions, implications)?))
    }

    pub fn propositions(&self) -> &Universe {
        self.implies.universe()
    }

    pub fn implies(&self) -> &BinaryRelation {
        &self.implies
    }

    fn check(&self, p_set: &SubsetOfV) -> Result<()> {
        if p_set.len() != self.implies.size() {
            return Err(Error::UniverseMismatch);
        }
        Ok(())
    }

    /// Smallest theory containing `p_set`.
    pub fn deductive_closure(&self, p_set: SubsetOfV) -> Result<SubsetOfV> {
        self.check(&p_set)?;
        Ok(self.ops.upper(p_set))
    }

    /// Largest theory contained in `p_set`.
    pub fn largest_theory_within(&self, p_set: SubsetOfV) -> Result<SubsetOfV> {
        self.check(&p_set)?;
        Ok(self.ops.lower(p_set))
    }

    /// A theory is closed under implication.
    pub fn is_theory(&self, p_set: SubsetOfV) -> Result<bool> {
        self.check(&p_set)?;
        Ok(p_set.iter().all(|p| self.implies.rows()[p] & !p_set.bits() == 0))
    }
}
