//! Finite universes and binary relations stored as bit matrices.
//!
//! Row `x` of a [`BinaryRelation`] is the successor set of `x`: bit `y` is
//! set iff `(x, y) ∈ R`. The canonical encoding of a relation on `n`
//! elements packs the rows into `n²` bits, pair `(x, y)` at bit `x·n + y`,
//! and that number defines the total order used for enumeration and for
//! picking minimal counterexamples.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::config::{Capacity, HARD_MAX_N};
use crate::error::{Error, Result};
use crate::subset::{full_mask, SubsetOfV, MAX_UNIVERSE};

/// The finite set V, canonically indexed `0..size`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Universe {
    size: usize,
    labels: Option<Arc<[String]>>,
}

impl Universe {
    pub fn new(size: usize) -> Result<Self> {
        if size > MAX_UNIVERSE {
            return Err(Error::Capacity { requested: size, bound: MAX_UNIVERSE });
        }
        Ok(Universe { size, labels: None })
    }

    /// A universe whose elements carry display names. Names must be distinct.
    pub fn labelled<S: Into<String>>(labels: impl IntoIterator<Item = S>) -> Result<Self> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.len() > MAX_UNIVERSE {
            return Err(Error::Capacity { requested: labels.len(), bound: MAX_UNIVERSE });
        }
        for (i, a) in labels.iter().enumerate() {
            if labels[..i].contains(a) {
                return Err(Error::Input(format!("duplicate element label {a:?}")));
            }
        }
        Ok(Universe { size: labels.len(), labels: Some(labels.into()) })
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Display name of element `x`; its index when the universe is unlabelled.
    pub fn label(&self, x: usize) -> String {
        match &self.labels {
            Some(l) => l[x].clone(),
            None => x.to_string(),
        }
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        match &self.labels {
            Some(l) => l.iter().position(|s| s == label),
            None => label.parse::<usize>().ok().filter(|&i| i < self.size),
        }
    }
}

/// Reflexive, symmetric, transitive and serial flags of a relation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RelationClassFlags {
    pub reflexive: bool,
    pub symmetric: bool,
    pub transitive: bool,
    pub serial: bool,
}

impl RelationClassFlags {
    pub fn preorder(&self) -> bool {
        self.reflexive && self.transitive
    }

    pub fn equivalence(&self) -> bool {
        self.reflexive && self.symmetric && self.transitive
    }
}

/// The nine relation classes that head the property table columns.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RelationClass {
    Any,
    Reflexive,
    Symmetric,
    Transitive,
    ReflexiveSymmetric,
    Preorder,
    SymmetricTransitive,
    Equivalence,
    Serial,
}

impl RelationClass {
    /// Column order of the property tables.
    pub const ALL: [RelationClass; 9] = [
        RelationClass::Any,
        RelationClass::Reflexive,
        RelationClass::Symmetric,
        RelationClass::Transitive,
        RelationClass::ReflexiveSymmetric,
        RelationClass::Preorder,
        RelationClass::SymmetricTransitive,
        RelationClass::Equivalence,
        RelationClass::Serial,
    ];

    /// Short tag: `R`, `Rr`, `Rs`, `Rt`, `Rrs`, `Rrt`, `Rst`, `Rrst`, `Rser`.
    pub fn tag(&self) -> &'static str {
        match self {
            RelationClass::Any => "R",
            RelationClass::Reflexive => "Rr",
            RelationClass::Symmetric => "Rs",
            RelationClass::Transitive => "Rt",
            RelationClass::ReflexiveSymmetric => "Rrs",
            RelationClass::Preorder => "Rrt",
            RelationClass::SymmetricTransitive => "Rst",
            RelationClass::Equivalence => "Rrst",
            RelationClass::Serial => "Rser",
        }
    }

    pub fn column(&self) -> usize {
        RelationClass::ALL.iter().position(|c| c == self).unwrap()
    }

    pub fn contains_flags(&self, f: &RelationClassFlags) -> bool {
        match self {
            RelationClass::Any => true,
            RelationClass::Reflexive => f.reflexive,
            RelationClass::Symmetric => f.symmetric,
            RelationClass::Transitive => f.transitive,
            RelationClass::ReflexiveSymmetric => f.reflexive && f.symmetric,
            RelationClass::Preorder => f.reflexive && f.transitive,
            RelationClass::SymmetricTransitive => f.symmetric && f.transitive,
            RelationClass::Equivalence => f.equivalence(),
            RelationClass::Serial => f.serial,
        }
    }

    pub fn contains(&self, r: &BinaryRelation) -> bool {
        self.contains_flags(&r.classify())
    }

    /// `(r, s, t, ser)` flags a member must have.
    fn requirements(&self) -> (bool, bool, bool, bool) {
        match self {
            RelationClass::Any => (false, false, false, false),
            RelationClass::Reflexive => (true, false, false, false),
            RelationClass::Symmetric => (false, true, false, false),
            RelationClass::Transitive => (false, false, true, false),
            RelationClass::ReflexiveSymmetric => (true, true, false, false),
            RelationClass::Preorder => (true, false, true, false),
            RelationClass::SymmetricTransitive => (false, true, true, false),
            RelationClass::Equivalence => (true, true, true, false),
            RelationClass::Serial => (false, false, false, true),
        }
    }

    /// True when every member of `self` is a member of `other`.
    ///
    /// Reflexive relations are serial, so e.g. `Rr ⊆ Rser`.
    pub fn is_subclass_of(&self, other: &RelationClass) -> bool {
        let (r, s, t, ser) = self.requirements();
        let (or, os, ot, oser) = other.requirements();
        let ser = ser || r;
        (r || !or) && (s || !os) && (t || !ot) && (ser || !oser)
    }
}

impl fmt::Display for RelationClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for RelationClass {
    type Err = Error;

    /// Accepts either the tag (`Rrt`) or the bare subscript (`rt`, `any`).
    fn from_str(s: &str) -> Result<Self> {
        let key = s.strip_prefix('R').unwrap_or(s);
        Ok(match key {
            "" | "any" => RelationClass::Any,
            "r" => RelationClass::Reflexive,
            "s" => RelationClass::Symmetric,
            "t" => RelationClass::Transitive,
            "rs" => RelationClass::ReflexiveSymmetric,
            "rt" => RelationClass::Preorder,
            "st" => RelationClass::SymmetricTransitive,
            "rst" => RelationClass::Equivalence,
            "ser" => RelationClass::Serial,
            _ => return Err(Error::Input(format!("unknown relation class {s:?}"))),
        })
    }
}

impl Serialize for RelationClass {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.tag())
    }
}

/// A binary relation R ⊆ V × V.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BinaryRelation {
    universe: Universe,
    rows: Vec<u64>,
}

impl BinaryRelation {
    pub fn empty(universe: Universe) -> Self {
        let rows = vec![0; universe.size()];
        BinaryRelation { universe, rows }
    }

    pub fn identity(universe: Universe) -> Self {
        let rows = (0..universe.size()).map(|x| 1u64 << x).collect();
        BinaryRelation { universe, rows }
    }

    pub fn full(universe: Universe) -> Self {
        let rows = vec![full_mask(universe.size()); universe.size()];
        BinaryRelation { universe, rows }
    }

    /// Relation containing exactly `pairs`; duplicates are harmless.
    pub fn build(universe: Universe, pairs: &[(usize, usize)]) -> Result<Self> {
        let n = universe.size();
        let mut r = BinaryRelation::empty(universe);
        for &(x, y) in pairs {
            if x >= n || y >= n {
                return Err(Error::PairOutOfRange(x, y, n));
            }
            r.rows[x] |= 1 << y;
        }
        Ok(r)
    }

    /// Convenience constructor over an unlabelled universe of size `n`.
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        BinaryRelation::build(Universe::new(n)?, pairs)
    }

    /// Relation whose successor sets are the given masks.
    pub fn from_rows(universe: Universe, rows: Vec<u64>) -> Result<Self> {
        let n = universe.size();
        if rows.len() != n {
            return Err(Error::Input(format!("expected {n} rows, got {}", rows.len())));
        }
        for (x, &row) in rows.iter().enumerate() {
            if row & !full_mask(n) != 0 {
                let y = 63 - (row & !full_mask(n)).leading_zeros() as usize;
                return Err(Error::PairOutOfRange(x, y, n));
            }
        }
        Ok(BinaryRelation { universe, rows })
    }

    /// Inverse of [`BinaryRelation::encoding`].
    pub fn from_encoding(n: usize, code: u64) -> Result<Self> {
        if n > HARD_MAX_N {
            return Err(Error::Capacity { requested: n, bound: HARD_MAX_N });
        }
        let bits = n * n;
        if bits < 64 && code >> bits != 0 {
            return Err(Error::Input(format!("encoding {code} exceeds {bits} bits")));
        }
        let mask = full_mask(n);
        let rows = (0..n).map(|x| (code >> (x * n)) & mask).collect();
        Ok(BinaryRelation { universe: Universe::new(n)?, rows })
    }

    /// Row-major `n²`-bit code, pair `(x, y)` at bit `x·n + y`.
    ///
    /// # Panics
    /// If the universe is larger than [`HARD_MAX_N`].
    pub fn encoding(&self) -> u64 {
        let n = self.size();
        assert!(n <= HARD_MAX_N, "relation on {n} elements has no u64 encoding");
        self.rows.iter().enumerate().fold(0, |acc, (x, &row)| acc | row << (x * n))
    }

    #[inline]
    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.universe.size()
    }

    #[inline]
    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    /// `(x, y) ∈ R`. Out-of-range indices are simply not related.
    #[inline]
    pub fn contains(&self, x: usize, y: usize) -> bool {
        x < self.size() && y < self.size() && self.rows[x] >> y & 1 == 1
    }

    /// Pairs in row-major order.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let n = self.size();
        (0..n).flat_map(|x| (0..n).filter(move |&y| self.rows[x] >> y & 1 == 1).map(move |y| (x, y))).collect()
    }

    pub fn pair_count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum()
    }

    /// Successor set R_s(x) = { y | xRy }.
    pub fn successors(&self, x: usize) -> Result<SubsetOfV> {
        let n = self.size();
        if x >= n {
            return Err(Error::OutOfRange { index: x, size: n });
        }
        Ok(SubsetOfV::from_bits_unchecked(n, self.rows[x]))
    }

    /// Predecessor set R_p(x) = { y | yRx }.
    pub fn predecessors(&self, x: usize) -> Result<SubsetOfV> {
        let n = self.size();
        if x >= n {
            return Err(Error::OutOfRange { index: x, size: n });
        }
        Ok(SubsetOfV::from_bits_unchecked(n, self.column(x)))
    }

    #[inline]
    pub(crate) fn column(&self, x: usize) -> u64 {
        self.rows.iter().enumerate().fold(0, |acc, (y, &row)| acc | ((row >> x) & 1) << y)
    }

    pub fn transpose(&self) -> Self {
        let rows = (0..self.size()).map(|x| self.column(x)).collect();
        BinaryRelation { universe: self.universe.clone(), rows }
    }

    pub fn classify(&self) -> RelationClassFlags {
        let n = self.size();
        let reflexive = (0..n).all(|x| self.rows[x] >> x & 1 == 1);
        let symmetric = (0..n).all(|x| self.column(x) == self.rows[x]);
        // R is transitive iff y ∈ R_s(x) implies R_s(y) ⊆ R_s(x).
        let transitive = (0..n)
            .all(|x| SubsetOfV::from_bits_unchecked(n, self.rows[x]).iter().all(|y| self.rows[y] & !self.rows[x] == 0));
        let serial = self.rows.iter().all(|&row| row != 0);
        RelationClassFlags { reflexive, symmetric, transitive, serial }
    }

    /// Pairwise intersection of relations over one universe.
    pub fn intersect(rs: &[BinaryRelation]) -> Result<BinaryRelation> {
        let (first, rest) = rs.split_first().ok_or_else(|| Error::Input("intersection of an empty family".into()))?;
        let mut out = first.clone();
        for r in rest {
            if r.universe != out.universe {
                return Err(Error::UniverseMismatch);
            }
            for (a, b) in out.rows.iter_mut().zip(&r.rows) {
                *a &= b;
            }
        }
        Ok(out)
    }

    /// Smallest transitive relation containing `self` (Warshall).
    pub fn transitive_closure(&self) -> Self {
        let mut rows = self.rows.clone();
        for k in 0..rows.len() {
            let via = rows[k];
            for row in rows.iter_mut() {
                if *row >> k & 1 == 1 {
                    *row |= via;
                }
            }
        }
        BinaryRelation { universe: self.universe.clone(), rows }
    }

    pub fn reflexive_closure(&self) -> Self {
        let rows = self.rows.iter().enumerate().map(|(x, &row)| row | 1 << x).collect();
        BinaryRelation { universe: self.universe.clone(), rows }
    }

    /// Smallest pre-order containing `self`.
    pub fn reflexive_transitive_closure(&self) -> Self {
        self.reflexive_closure().transitive_closure()
    }

    /// Same relation over a relabelled universe of equal size.
    pub fn with_universe(&self, universe: Universe) -> Result<Self> {
        if universe.size() != self.size() {
            return Err(Error::UniverseMismatch);
        }
        Ok(BinaryRelation { universe, rows: self.rows.clone() })
    }
}

impl fmt::Debug for BinaryRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinaryRelation(n={}, {:?})", self.size(), self.pairs())
    }
}

/// Every relation on `n` elements in `class`, ascending by encoding.
pub fn enumerate_relations(n: usize, class: RelationClass, cap: &Capacity) -> Result<RelationStream> {
    cap.check(n)?;
    RelationStream::new(n, class)
}

/// Iterator behind [`enumerate_relations`].
#[derive(Debug, Clone)]
pub struct RelationStream {
    n: usize,
    class: RelationClass,
    next: u64,
    end: u64,
}

impl RelationStream {
    fn new(n: usize, class: RelationClass) -> Result<Self> {
        if n > HARD_MAX_N {
            return Err(Error::Capacity { requested: n, bound: HARD_MAX_N });
        }
        Ok(RelationStream { n, class, next: 0, end: 1u64 << (n * n) })
    }
}

impl Iterator for RelationStream {
    type Item = BinaryRelation;

    fn next(&mut self) -> Option<BinaryRelation> {
        while self.next < self.end {
            let code = self.next;
            self.next += 1;
            let r = BinaryRelation::from_encoding(self.n, code).expect("code within bounds");
            if self.class.contains(&r) {
                return Some(r);
            }
        }
        None
    }
}
