//! The 23-row property catalog, per-relation checking, class-wide
//! counterexample search and table generation.
//!
//! Rows 8 to 13 quantify over ordered pairs `(X, Y)`; every other row over
//! `X` alone. Rows that mention no set at all (2 to 5) are still treated as
//! one-set rows, so their first failing assignment is `X = ∅`.

use std::fmt;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::approx::{Approximation, OperatorPairing, PairedOperators};
use crate::config::Capacity;
use crate::error::{Error, Result};
use crate::relation::{enumerate_relations, BinaryRelation, RelationClass};
use crate::subset::SubsetOfV;

pub const ROW_COUNT: usize = 23;

/// A table row, 1 through 23.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PropertyId(u8);

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Arity {
    OneSet,
    TwoSet,
}

impl Arity {
    pub fn count(&self) -> usize {
        match self {
            Arity::OneSet => 1,
            Arity::TwoSet => 2,
        }
    }
}

impl PropertyId {
    pub fn new(row: u8) -> Result<Self> {
        if (1..=ROW_COUNT as u8).contains(&row) {
            Ok(PropertyId(row))
        } else {
            Err(Error::Input(format!("property row must be in 1..=23, got {row}")))
        }
    }

    pub fn all() -> impl Iterator<Item = PropertyId> + Clone {
        (1..=ROW_COUNT as u8).map(PropertyId)
    }

    #[inline]
    pub fn row(&self) -> u8 {
        self.0
    }

    pub fn arity(&self) -> Arity {
        if (8..=13).contains(&self.0) {
            Arity::TwoSet
        } else {
            Arity::OneSet
        }
    }

    /// Row label; `upper` is the symbol printed for the upper operator.
    pub fn label_with(&self, upper: &str) -> String {
        let u = upper;
        match self.0 {
            1 => format!("Duality of l(X), {u}(X)"),
            2 => "l(∅) = ∅".to_string(),
            3 => format!("∅ = {u}(∅)"),
            4 => "l(V) = V".to_string(),
            5 => format!("{u}(V) = V"),
            6 => "l(X) ⊆ X".to_string(),
            7 => format!("X ⊆ {u}(X)"),
            8 => "X ⊆ Y ⇒ l(X) ⊆ l(Y)".to_string(),
            9 => format!("X ⊆ Y ⇒ {u}(X) ⊆ {u}(Y)"),
            10 => format!("{u}(X ∪ Y) = {u}(X) ∪ {u}(Y)"),
            11 => "l(X ∩ Y) = l(X) ∩ l(Y)".to_string(),
            12 => "l(X ∪ Y) ⊇ l(X) ∪ l(Y)".to_string(),
            13 => format!("{u}(X ∩ Y) ⊆ {u}(X) ∩ {u}(Y)"),
            14 => "l(l(X)) ⊆ l(X)".to_string(),
            15 => "l(l(X)) ⊇ l(X)".to_string(),
            16 => format!("{u}(l(X)) ⊆ l(X)"),
            17 => format!("{u}(l(X)) ⊇ l(X)"),
            18 => format!("{u}({u}(X)) ⊆ {u}(X)"),
            19 => format!("{u}({u}(X)) ⊇ {u}(X)"),
            20 => format!("l({u}(X)) ⊆ {u}(X)"),
            21 => format!("{u}(X) ⊆ l({u}(X))"),
            22 => format!("X ⊆ l({u}(X))"),
            23 => format!("{u}(l(X)) ⊆ X"),
            _ => unreachable!(),
        }
    }

    pub fn label(&self) -> String {
        self.label_with("u")
    }

    /// Truth of this row for one operator pair at `(x, y)`.
    ///
    /// One-set rows ignore `y`. Two-set rows read `y`; callers ensure it is
    /// the same width as `x`.
    pub fn holds<A: Approximation + ?Sized>(&self, ops: &A, x: SubsetOfV, y: SubsetOfV) -> bool {
        let n = ops.size();
        let lo = |s: SubsetOfV| ops.lower(s);
        let up = |s: SubsetOfV| ops.upper(s);
        let empty = SubsetOfV::empty(n);
        let full = SubsetOfV::full(n);
        match self.0 {
            1 => lo(x.complement()) == up(x).complement() && up(x.complement()) == lo(x).complement(),
            2 => lo(empty).is_empty(),
            3 => up(empty).is_empty(),
            4 => lo(full).is_full(),
            5 => up(full).is_full(),
            6 => lo(x).is_subset(&x),
            7 => x.is_subset(&up(x)),
            8 => !x.is_subset(&y) || lo(x).is_subset(&lo(y)),
            9 => !x.is_subset(&y) || up(x).is_subset(&up(y)),
            10 => up(x.union(&y)) == up(x).union(&up(y)),
            11 => lo(x.intersection(&y)) == lo(x).intersection(&lo(y)),
            12 => lo(x).union(&lo(y)).is_subset(&lo(x.union(&y))),
            13 => up(x.intersection(&y)).is_subset(&up(x).intersection(&up(y))),
            14 => lo(lo(x)).is_subset(&lo(x)),
            15 => lo(x).is_subset(&lo(lo(x))),
            16 => up(lo(x)).is_subset(&lo(x)),
            17 => lo(x).is_subset(&up(lo(x))),
            18 => up(up(x)).is_subset(&up(x)),
            19 => up(x).is_subset(&up(up(x))),
            20 => lo(up(x)).is_subset(&up(x)),
            21 => up(x).is_subset(&lo(up(x))),
            22 => x.is_subset(&lo(up(x))),
            23 => up(lo(x)).is_subset(&x),
            _ => unreachable!(),
        }
    }

    /// First `(X, Y)` in canonical order at which the row fails.
    pub fn first_failure<A: Approximation + ?Sized>(&self, ops: &A) -> Option<Assignment> {
        let n = ops.size();
        match self.arity() {
            Arity::OneSet => SubsetOfV::all(n).find(|&x| !self.holds(ops, x, x)).map(|x| Assignment { x, y: None }),
            Arity::TwoSet => SubsetOfV::all(n).find_map(|x| {
                SubsetOfV::all(n).find(|&y| !self.holds(ops, x, y)).map(|y| Assignment { x, y: Some(y) })
            }),
        }
    }
}

impl fmt::Display for PropertyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}. {}", self.0, self.label())
    }
}

/// Subsets bound to a property's quantified variables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Assignment {
    pub x: SubsetOfV,
    pub y: Option<SubsetOfV>,
}

/// Truth of row `p` for `pairing` over `r` at `(x_set, y_set)`.
pub fn eval_property(
    p: PropertyId,
    pairing: OperatorPairing,
    r: &BinaryRelation,
    x_set: SubsetOfV,
    y_set: Option<SubsetOfV>,
) -> Result<bool> {
    let expected = p.arity().count();
    let y = match (p.arity(), y_set) {
        (Arity::OneSet, None) => x_set,
        (Arity::TwoSet, Some(y)) => y,
        _ => return Err(Error::Arity { row: p.row(), expected }),
    };
    if x_set.len() != r.size() || y.len() != r.size() {
        return Err(Error::UniverseMismatch);
    }
    let ops = PairedOperators::new(pairing, r)?;
    Ok(p.holds(&ops, x_set, y))
}

/// Outcome of checking one row against one relation for all subsets.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RelationCheck {
    pub holds: bool,
    pub failing: Option<Assignment>,
}

pub fn check_relation(p: PropertyId, pairing: OperatorPairing, r: &BinaryRelation) -> Result<RelationCheck> {
    let ops = PairedOperators::new(pairing, r)?;
    Ok(check_operators(p, &ops))
}

/// As [`check_relation`] for any operator pair.
pub fn check_operators<A: Approximation + ?Sized>(p: PropertyId, ops: &A) -> RelationCheck {
    let failing = p.first_failure(ops);
    RelationCheck { holds: failing.is_none(), failing }
}

/// A concrete refutation: relation and subsets at which a row is false.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub relation: BinaryRelation,
    pub x: SubsetOfV,
    pub y: Option<SubsetOfV>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VerdictStatus {
    /// No relation of the class on `1..=n` elements refutes the row.
    VerifiedUpTo(usize),
    Refuted(Counterexample),
}

/// Outcome of searching one (row, pairing, class) cell.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyVerdict {
    pub property: PropertyId,
    pub pairing: OperatorPairing,
    pub class: RelationClass,
    pub status: VerdictStatus,
}

impl PropertyVerdict {
    pub fn is_verified(&self) -> bool {
        matches!(self.status, VerdictStatus::VerifiedUpTo(_))
    }

    pub fn counterexample(&self) -> Option<&Counterexample> {
        match &self.status {
            VerdictStatus::Refuted(c) => Some(c),
            VerdictStatus::VerifiedUpTo(_) => None,
        }
    }

    /// Re-evaluates the stored witness. `Ok(true)` means the witness still
    /// refutes the row (or there is no witness to replay).
    pub fn replay(&self) -> Result<bool> {
        match &self.status {
            VerdictStatus::VerifiedUpTo(_) => Ok(true),
            VerdictStatus::Refuted(c) => {
                if !self.class.contains(&c.relation) {
                    return Ok(false);
                }
                Ok(!eval_property(self.property, self.pairing, &c.relation, c.x, c.y)?)
            }
        }
    }
}

/// Searches every relation in `class` on 1 through `max_n` elements, in
/// canonical order, and stops at the first refutation.
///
/// The first failure found in this order is the minimal counterexample:
/// smallest universe, then smallest relation encoding, then smallest X,
/// then smallest Y.
pub fn search_class(
    p: PropertyId,
    pairing: OperatorPairing,
    class: RelationClass,
    max_n: usize,
    cap: &Capacity,
) -> Result<PropertyVerdict> {
    cap.check(max_n)?;
    if pairing == OperatorPairing::Pawlak && class != RelationClass::Equivalence {
        return Err(Error::Precondition("the Pawlak pairing only applies to the equivalence class".into()));
    }
    for n in 1..=max_n {
        for r in enumerate_relations(n, class, cap)? {
            let ops = PairedOperators::new(pairing, &r)?;
            if let Some(a) = p.first_failure(&ops) {
                let status = VerdictStatus::Refuted(Counterexample { relation: r, x: a.x, y: a.y });
                return Ok(PropertyVerdict { property: p, pairing, class, status });
            }
        }
    }
    Ok(PropertyVerdict { property: p, pairing, class, status: VerdictStatus::VerifiedUpTo(max_n) })
}

/// The 23 × 9 grid of verdicts for one pairing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableReport {
    pub pairing: OperatorPairing,
    pub bound: usize,
    /// Row-major: row 1 columns `R..Rser`, then row 2, and so on.
    pub cells: Vec<PropertyVerdict>,
}

pub fn generate_table(pairing: OperatorPairing, max_n: usize, cap: &Capacity) -> Result<TableReport> {
    generate_table_with_workers(pairing, max_n, cap, None)
}

/// [`generate_table`] on a dedicated pool of `workers` threads (the global
/// pool when `None`). The report does not depend on the worker count.
pub fn generate_table_with_workers(
    pairing: OperatorPairing,
    max_n: usize,
    cap: &Capacity,
    workers: Option<usize>,
) -> Result<TableReport> {
    if pairing == OperatorPairing::Pawlak {
        return Err(Error::Precondition("tables are generated for relational pairings only".into()));
    }
    cap.check(max_n)?;
    let coords: Vec<(PropertyId, RelationClass)> =
        PropertyId::all().flat_map(|p| RelationClass::ALL.into_iter().map(move |c| (p, c))).collect();
    let run = || -> Result<Vec<PropertyVerdict>> {
        coords.par_iter().map(|&(p, c)| search_class(p, pairing, c, max_n, cap)).collect()
    };
    let cells = match workers {
        Some(w) => rayon::ThreadPoolBuilder::new()
            .num_threads(w.max(1))
            .build()
            .map_err(|e| Error::Input(format!("cannot start worker pool: {e}")))?
            .install(run)?,
        None => run()?,
    };
    Ok(TableReport { pairing, bound: max_n, cells })
}

impl TableReport {
    pub fn cell(&self, p: PropertyId, class: RelationClass) -> &PropertyVerdict {
        &self.cells[(p.row() as usize - 1) * RelationClass::ALL.len() + class.column()]
    }

    /// `true` for verified cells.
    pub fn ticks(&self) -> [[bool; 9]; ROW_COUNT] {
        let mut grid = [[false; 9]; ROW_COUNT];
        for v in &self.cells {
            grid[v.property.row() as usize - 1][v.class.column()] = v.is_verified();
        }
        grid
    }

    /// Structural checks every correct table satisfies: a refuted cell never
    /// sits in a subclass of a verified cell in the same row, and row 6
    /// verified implies row 14 verified. Returns human-readable violations.
    pub fn invariant_violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        for p in PropertyId::all() {
            for sup in RelationClass::ALL {
                if !self.cell(p, sup).is_verified() {
                    continue;
                }
                for sub in RelationClass::ALL {
                    if sub.is_subclass_of(&sup) && !self.cell(p, sub).is_verified() {
                        out.push(format!("row {}: {sub} refuted but superclass {sup} verified", p.row()));
                    }
                }
            }
        }
        let (six, fourteen) = (PropertyId(6), PropertyId(14));
        for c in RelationClass::ALL {
            if self.cell(six, c).is_verified() && !self.cell(fourteen, c).is_verified() {
                out.push(format!("column {c}: row 6 verified but row 14 refuted"));
            }
        }
        out
    }

    fn upper_symbol(&self) -> &'static str {
        match self.pairing {
            OperatorPairing::NonDual => "u_t",
            _ => "u",
        }
    }

    /// Markdown grid with ✓/✗ cells.
    pub fn to_markdown(&self) -> String {
        let mut s = String::new();
        s.push_str(&format!("Pairing: {} (verified up to n = {})\n\n|   |", self.pairing, self.bound));
        for c in RelationClass::ALL {
            s.push_str(&format!(" {c} |"));
        }
        s.push_str("\n|---|");
        for _ in RelationClass::ALL {
            s.push_str("---|");
        }
        s.push('\n');
        for p in PropertyId::all() {
            s.push_str(&format!("| {}. {} |", p.row(), p.label_with(self.upper_symbol())));
            for c in RelationClass::ALL {
                s.push_str(if self.cell(p, c).is_verified() { " ✓ |" } else { " ✗ |" });
            }
            s.push('\n');
        }
        s
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

#[derive(Serialize)]
struct CounterexampleWire<'a> {
    size: usize,
    pairs: Vec<(usize, usize)>,
    encoding: u64,
    x: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    y: Option<Vec<usize>>,
    #[serde(skip)]
    _p: std::marker::PhantomData<&'a ()>,
}

impl Serialize for Counterexample {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        CounterexampleWire {
            size: self.relation.size(),
            pairs: self.relation.pairs(),
            encoding: self.relation.encoding(),
            x: self.x.iter().collect(),
            y: self.y.map(|y| y.iter().collect()),
            _p: std::marker::PhantomData,
        }
        .serialize(s)
    }
}

#[derive(Serialize)]
struct VerdictWire<'a> {
    row: u8,
    pairing: OperatorPairing,
    class: RelationClass,
    status: &'static str,
    bound: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    counterexample: Option<&'a Counterexample>,
}

impl Serialize for PropertyVerdict {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let (status, bound, counterexample) = match &self.status {
            VerdictStatus::VerifiedUpTo(n) => ("verified", *n, None),
            VerdictStatus::Refuted(c) => ("refuted", c.relation.size(), Some(c)),
        };
        VerdictWire {
            row: self.property.row(),
            pairing: self.pairing,
            class: self.class,
            status,
            bound,
            counterexample,
        }
        .serialize(s)
    }
}

impl Serialize for TableReport {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Wire<'a> {
            pairing: OperatorPairing,
            bound: usize,
            cells: &'a [PropertyVerdict],
        }
        Wire { pairing: self.pairing, bound: self.bound, cells: &self.cells }.serialize(s)
    }
}

/// The twelve classical properties of equivalence-based approximations, as
/// one predicate each, in their traditional order.
pub const CLASSICAL_COUNT: usize = 12;

/// Table rows whose conjunction is each classical property.
pub const CLASSICAL_EMBEDDING: [&[u8]; CLASSICAL_COUNT] =
    [&[6, 7], &[2, 3, 4, 5], &[10], &[11], &[8], &[9], &[12], &[13], &[1], &[1], &[14, 15, 16, 17], &[18, 19, 20, 21]];

/// Classical property `k` (1 through 12) at `(x, y)`, stated directly rather
/// than through the table rows.
pub fn classical_holds<A: Approximation + ?Sized>(k: usize, ops: &A, x: SubsetOfV, y: SubsetOfV) -> bool {
    let n = ops.size();
    let lo = |s: SubsetOfV| ops.lower(s);
    let up = |s: SubsetOfV| ops.upper(s);
    let (empty, full) = (SubsetOfV::empty(n), SubsetOfV::full(n));
    match k {
        1 => lo(x).is_subset(&x) && x.is_subset(&up(x)),
        2 => lo(empty) == empty && up(empty) == empty && lo(full) == full && up(full) == full,
        3 => up(x.union(&y)) == up(x).union(&up(y)),
        4 => lo(x.intersection(&y)) == lo(x).intersection(&lo(y)),
        5 => !x.is_subset(&y) || lo(x).is_subset(&lo(y)),
        6 => !x.is_subset(&y) || up(x).is_subset(&up(y)),
        7 => lo(x).union(&lo(y)).is_subset(&lo(x.union(&y))),
        8 => up(x.intersection(&y)).is_subset(&up(x).intersection(&up(y))),
        9 => lo(x.complement()) == up(x).complement(),
        10 => up(x.complement()) == lo(x).complement(),
        11 => lo(lo(x)) == lo(x) && up(lo(x)) == lo(x),
        12 => up(up(x)) == up(x) && lo(up(x)) == up(x),
        _ => panic!("classical property index {k} outside 1..=12"),
    }
}
