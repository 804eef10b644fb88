//! Coverings, their intersection neighbourhoods N(x), definable sets and
//! the C_t approximation operators.

use std::collections::BTreeSet;

use crate::approx::{self, Approximation, OperatorPairing};
use crate::error::{Error, Result};
use crate::relation::{BinaryRelation, Universe};
use crate::subset::{full_mask, SubsetOfV};

/// Largest universe for which [`verify_reduction`] sweeps all subsets.
pub const SWEEP_MAX_N: usize = 16;

/// Largest universe for which [`enumerate_coverings`] is offered; n = 5
/// would mean 2^31 candidate families.
pub const ENUMERATE_MAX_N: usize = 4;

/// A family of nonempty blocks whose union is V. Duplicate blocks are kept.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Covering {
    universe: Universe,
    blocks: Vec<SubsetOfV>,
    neighbourhoods: Vec<u64>,
}

impl Covering {
    pub fn new(universe: Universe, blocks: Vec<SubsetOfV>) -> Result<Self> {
        let n = universe.size();
        let mut union = 0u64;
        for (i, b) in blocks.iter().enumerate() {
            if b.len() != n {
                return Err(Error::UniverseMismatch);
            }
            if b.is_empty() {
                return Err(Error::Input(format!("covering block {i} is empty")));
            }
            union |= b.bits();
        }
        if union != full_mask(n) {
            let missing = (!union & full_mask(n)).trailing_zeros() as usize;
            return Err(Error::Input(format!("blocks do not cover element {:?}", universe.label(missing))));
        }
        let neighbourhoods = (0..n)
            .map(|x| blocks.iter().filter(|b| b.contains(x)).fold(full_mask(n), |acc, b| acc & b.bits()))
            .collect();
        Ok(Covering { universe, blocks, neighbourhoods })
    }

    /// Unlabelled covering from block index lists.
    pub fn from_blocks(n: usize, blocks: &[&[usize]]) -> Result<Self> {
        let blocks = blocks.iter().map(|b| SubsetOfV::from_indices(n, b.iter().copied())).collect::<Result<_>>()?;
        Covering::new(Universe::new(n)?, blocks)
    }

    /// The partition covering of an equivalence relation.
    pub fn from_partition(r: &BinaryRelation) -> Result<Self> {
        Covering::new(r.universe().clone(), approx::granules(r)?)
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn size(&self) -> usize {
        self.universe.size()
    }

    pub fn blocks(&self) -> &[SubsetOfV] {
        &self.blocks
    }

    /// N(x): the intersection of all blocks containing x.
    pub fn neighborhood(&self, x: usize) -> Result<SubsetOfV> {
        let n = self.size();
        if x >= n {
            return Err(Error::OutOfRange { index: x, size: n });
        }
        Ok(self.nb(x))
    }

    #[inline]
    fn nb(&self, x: usize) -> SubsetOfV {
        SubsetOfV::from_bits_unchecked(self.size(), self.neighbourhoods[x])
    }

    pub fn neighborhoods(&self) -> Vec<SubsetOfV> {
        (0..self.size()).map(|x| self.nb(x)).collect()
    }

    /// ⋃ { N(x) | N(x) ⊆ X }.
    pub fn ct_lower(&self, x_set: SubsetOfV) -> SubsetOfV {
        let bits = self.neighbourhoods.iter().filter(|&&nb| nb & !x_set.bits() == 0).fold(0, |acc, &nb| acc | nb);
        SubsetOfV::from_bits_unchecked(self.size(), bits)
    }

    /// ⋃ { N(x) | x ∈ X }.
    pub fn ct_upper(&self, x_set: SubsetOfV) -> SubsetOfV {
        let bits = x_set.iter().fold(0, |acc, x| acc | self.neighbourhoods[x]);
        SubsetOfV::from_bits_unchecked(self.size(), bits)
    }

    /// xRy iff y ∈ N(x).
    pub fn induced_relation(&self) -> BinaryRelation {
        BinaryRelation::from_rows(self.universe.clone(), self.neighbourhoods.clone())
            .expect("neighbourhoods lie inside the universe")
    }

    pub fn is_definable(&self, d: SubsetOfV) -> bool {
        self.ct_upper(d) == d
    }

    /// All definable sets: {N(x)} closed under union, together with ∅.
    pub fn definable_family(&self) -> DefinableFamily {
        let n = self.size();
        let mut family: BTreeSet<u64> = BTreeSet::new();
        family.insert(0);
        let mut frontier: Vec<u64> = vec![0];
        while let Some(d) = frontier.pop() {
            for &nb in &self.neighbourhoods {
                let joined = d | nb;
                if family.insert(joined) {
                    frontier.push(joined);
                }
            }
        }
        DefinableFamily { sets: family.into_iter().map(|b| SubsetOfV::from_bits_unchecked(n, b)).collect() }
    }
}

/// The definable sets of a covering, ascending by mask.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DefinableFamily {
    pub sets: Vec<SubsetOfV>,
}

impl DefinableFamily {
    pub fn contains(&self, d: &SubsetOfV) -> bool {
        self.sets.binary_search(d).is_ok()
    }

    /// ⋃ { D ∈ 𝔇 | D ⊆ X }.
    pub fn union_within(&self, x_set: SubsetOfV) -> SubsetOfV {
        self.sets.iter().filter(|d| d.is_subset(&x_set)).fold(SubsetOfV::empty(x_set.len()), |acc, d| acc.union(d))
    }

    /// ⋂ { D ∈ 𝔇 | X ⊆ D }. V is always definable so the meet is over a
    /// nonempty family.
    pub fn meet_above(&self, x_set: SubsetOfV) -> SubsetOfV {
        self.sets.iter().filter(|d| x_set.is_subset(d)).fold(SubsetOfV::full(x_set.len()), |acc, d| acc.intersection(d))
    }
}

/// The C_t operators as an [`Approximation`], for property checking.
pub struct CoveringOperators<'a>(pub &'a Covering);

impl Approximation for CoveringOperators<'_> {
    fn size(&self) -> usize {
        self.0.size()
    }

    fn lower(&self, x: SubsetOfV) -> SubsetOfV {
        self.0.ct_lower(x)
    }

    fn upper(&self, x: SubsetOfV) -> SubsetOfV {
        self.0.ct_upper(x)
    }
}

/// True iff the C_t operators agree with the non-dual operators of the
/// induced relation on every subset.
pub fn verify_reduction(c: &Covering) -> Result<bool> {
    let n = c.size();
    if n > SWEEP_MAX_N {
        return Err(Error::Capacity { requested: n, bound: SWEEP_MAX_N });
    }
    let r = c.induced_relation();
    let ops = approx::PairedOperators::new(OperatorPairing::NonDual, &r)?;
    Ok(SubsetOfV::all(n).all(|x| c.ct_lower(x) == ops.lower(x) && c.ct_upper(x) == ops.upper(x)))
}

/// Summary of [`verify_reduction`] plus the facts it rests on.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct ReductionReport {
    pub size: usize,
    pub neighborhoods: Vec<Vec<usize>>,
    pub induced_pairs: Vec<(usize, usize)>,
    pub induced_is_preorder: bool,
    pub upper_forms_agree: bool,
    pub lower_forms_agree: bool,
    pub reduction_holds: bool,
}

impl ReductionReport {
    pub fn ok(&self) -> bool {
        self.induced_is_preorder && self.upper_forms_agree && self.lower_forms_agree && self.reduction_holds
    }
}

pub fn reduction_report(c: &Covering) -> Result<ReductionReport> {
    let reduction_holds = verify_reduction(c)?;
    let family = c.definable_family();
    let n = c.size();
    let upper_forms_agree = SubsetOfV::all(n).all(|x| family.meet_above(x) == c.ct_upper(x));
    let lower_forms_agree = SubsetOfV::all(n).all(|x| family.union_within(x) == c.ct_lower(x));
    let r = c.induced_relation();
    Ok(ReductionReport {
        size: n,
        neighborhoods: c.neighborhoods().iter().map(|s| s.iter().collect()).collect(),
        induced_pairs: r.pairs(),
        induced_is_preorder: r.classify().preorder(),
        upper_forms_agree,
        lower_forms_agree,
        reduction_holds,
    })
}

/// Every covering of `n` elements whose blocks are distinct, each family
/// listed once with blocks ascending by mask. Families are ordered by the
/// bitmask over the `2^n − 1` nonempty candidate blocks.
pub fn enumerate_coverings(n: usize) -> Result<Vec<Covering>> {
    if n > ENUMERATE_MAX_N {
        return Err(Error::Capacity { requested: n, bound: ENUMERATE_MAX_N });
    }
    let universe = Universe::new(n)?;
    let candidates: Vec<u64> = (1..=full_mask(n)).collect();
    let mut out = Vec::new();
    for family in 0u64..(1u64 << candidates.len()) {
        let union = candidates.iter().enumerate().filter(|(i, _)| family >> i & 1 == 1).fold(0, |acc, (_, &b)| acc | b);
        if union != full_mask(n) {
            continue;
        }
        let blocks = candidates
            .iter()
            .enumerate()
            .filter(|(i, _)| family >> i & 1 == 1)
            .map(|(_, &b)| SubsetOfV::from_bits_unchecked(n, b))
            .collect();
        out.push(Covering::new(universe.clone(), blocks)?);
    }
    Ok(out)
}
