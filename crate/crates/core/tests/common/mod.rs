#![allow(dead_code)]

//! Reference data and naive oracles shared by the integration tests. The
//! oracles work on `BTreeSet<usize>` and `contains` queries only, so they
//! share no code path with the bitmask operators under test.

use std::collections::BTreeSet;

use rsk_core::{BinaryRelation, OperatorPairing, RelationClass, SubsetOfV};

/// Published tick (✓) / cross (✗) grid for the dual successor pairing,
/// columns R, Rr, Rs, Rt, Rrs, Rrt, Rst, Rrst, Rser.
pub const PUBLISHED_DUAL: [&str; 23] = [
    "✓✓✓✓✓✓✓✓✓", // 1
    "✗✓✗✗✓✓✗✓✓", // 2
    "✓✓✓✓✓✓✓✓✓", // 3
    "✓✓✓✓✓✓✓✓✓", // 4
    "✗✓✗✗✓✓✗✓✓", // 5
    "✗✓✗✗✓✓✗✓✗", // 6
    "✗✓✗✗✓✓✗✓✗", // 7
    "✓✓✓✓✓✓✓✓✓", // 8
    "✓✓✓✓✓✓✓✓✓", // 9
    "✓✓✓✓✓✓✓✓✓", // 10
    "✓✓✓✓✓✓✓✓✓", // 11
    "✓✓✓✓✓✓✓✓✓", // 12
    "✓✓✓✓✓✓✓✓✓", // 13
    "✗✓✗✗✓✓✗✓✗", // 14
    "✗✗✗✗✗✓✗✓✗", // 15
    "✗✗✗✗✗✗✗✓✗", // 16
    "✗✓✗✗✓✓✗✓✗", // 17
    "✗✗✗✓✗✓✓✓✗", // 18
    "✗✓✗✗✓✓✗✓✗", // 19
    "✗✓✗✗✓✓✗✓✗", // 20
    "✗✗✗✗✗✗✗✓✗", // 21
    "✗✗✓✗✓✗✓✓✗", // 22
    "✗✗✓✗✓✗✓✓✗", // 23
];

/// Published grid for the non-dual pairing.
pub const PUBLISHED_NONDUAL: [&str; 23] = [
    "✗✗✓✗✓✗✓✓✗", // 1
    "✗✓✗✗✓✓✗✓✓", // 2
    "✓✓✓✓✓✓✓✓✓", // 3
    "✓✓✓✓✓✓✓✓✓", // 4
    "✗✓✗✗✓✓✗✓✗", // 5
    "✗✓✗✗✓✓✗✓✗", // 6
    "✗✓✗✗✓✓✗✓✗", // 7
    "✓✓✓✓✓✓✓✓✓", // 8
    "✓✓✓✓✓✓✓✓✓", // 9
    "✓✓✓✓✓✓✓✓✓", // 10
    "✓✓✓✓✓✓✓✓✓", // 11
    "✓✓✓✓✓✓✓✓✓", // 12
    "✓✓✓✓✓✓✓✓✓", // 13
    "✗✓✗✗✓✓✗✓✗", // 14
    "✗✗✗✗✗✓✗✓✗", // 15
    "✗✗✗✓✗✓✗✓✗", // 16
    "✗✓✗✗✓✓✗✓✗", // 17
    "✗✗✗✓✗✓✓✓✗", // 18
    "✗✓✗✗✓✓✗✓✗", // 19
    "✗✓✗✗✓✓✗✓✗", // 20
    "✗✗✗✓✗✓✓✓✗", // 21
    "✓✓✓✓✓✓✓✓✓", // 22
    "✓✓✓✓✓✓✓✓✓", // 23
];

/// Cells where the published grid shows ✗ but no counterexample exists
/// (row, column tag). Each is a theorem: transitivity gives l ⊆ l∘l
/// (row 15); for symmetric transitive relations every element is either
/// successor-free or sits in a clique, which yields rows 14, 15, 16, 19
/// and 21.
pub const DISPUTED_DUAL: [(u8, &str); 6] =
    [(14, "Rst"), (15, "Rt"), (15, "Rst"), (16, "Rst"), (19, "Rst"), (21, "Rst")];
pub const DISPUTED_NONDUAL: [(u8, &str); 5] = [(14, "Rst"), (15, "Rt"), (15, "Rst"), (16, "Rst"), (19, "Rst")];

pub fn published_grid(rows: &[&str; 23]) -> [[bool; 9]; 23] {
    let mut g = [[false; 9]; 23];
    for (i, row) in rows.iter().enumerate() {
        let cells: Vec<char> = row.chars().collect();
        assert_eq!(cells.len(), 9, "row {} malformed", i + 1);
        for (j, c) in cells.into_iter().enumerate() {
            g[i][j] = match c {
                '✓' => true,
                '✗' => false,
                _ => panic!("bad cell {c:?}"),
            };
        }
    }
    g
}

pub type Set = BTreeSet<usize>;

pub fn to_set(s: &SubsetOfV) -> Set {
    (0..s.len()).filter(|&i| s.contains(i)).collect()
}

pub fn from_set(n: usize, s: &Set) -> SubsetOfV {
    SubsetOfV::from_indices(n, s.iter().copied()).unwrap()
}

pub fn all_sets(n: usize) -> Vec<Set> {
    (0u32..1 << n).map(|m| (0..n).filter(|&i| m >> i & 1 == 1).collect()).collect()
}

/// Triple-loop flags: (reflexive, symmetric, transitive, serial).
pub fn brute_flags(r: &BinaryRelation) -> (bool, bool, bool, bool) {
    let n = r.size();
    let mut refl = true;
    let mut sym = true;
    let mut trans = true;
    let mut serial = true;
    for x in 0..n {
        refl &= r.contains(x, x);
        serial &= (0..n).any(|y| r.contains(x, y));
        for y in 0..n {
            if r.contains(x, y) && !r.contains(y, x) {
                sym = false;
            }
            for z in 0..n {
                if r.contains(x, y) && r.contains(y, z) && !r.contains(x, z) {
                    trans = false;
                }
            }
        }
    }
    (refl, sym, trans, serial)
}

pub fn brute_in_class(c: RelationClass, r: &BinaryRelation) -> bool {
    let (rf, s, t, ser) = brute_flags(r);
    match c {
        RelationClass::Any => true,
        RelationClass::Reflexive => rf,
        RelationClass::Symmetric => s,
        RelationClass::Transitive => t,
        RelationClass::ReflexiveSymmetric => rf && s,
        RelationClass::Preorder => rf && t,
        RelationClass::SymmetricTransitive => s && t,
        RelationClass::Equivalence => rf && s && t,
        RelationClass::Serial => ser,
    }
}

/// Every relation on `n` elements, built pair by pair.
pub fn all_relations(n: usize) -> Vec<BinaryRelation> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|x| (0..n).map(move |y| (x, y))).collect();
    (0u64..1 << pairs.len())
        .map(|m| {
            let chosen: Vec<_> = pairs.iter().enumerate().filter(|(i, _)| m >> i & 1 == 1).map(|(_, &p)| p).collect();
            BinaryRelation::from_pairs(n, &chosen).unwrap()
        })
        .collect()
}

/// Set-based operators read straight off the definitions.
pub struct Naive {
    pub n: usize,
    lower_nb: Vec<Set>,
    upper_nb: Vec<Set>,
}

impl Naive {
    pub fn new(pairing: OperatorPairing, r: &BinaryRelation) -> Self {
        let n = r.size();
        let succ = |x: usize| -> Set { (0..n).filter(|&y| r.contains(x, y)).collect() };
        let pred = |x: usize| -> Set { (0..n).filter(|&y| r.contains(y, x)).collect() };
        let (lo, up): (Vec<Set>, Vec<Set>) = match pairing {
            OperatorPairing::DualSuccessor | OperatorPairing::Pawlak => {
                ((0..n).map(succ).collect(), (0..n).map(succ).collect())
            }
            OperatorPairing::NonDual => ((0..n).map(succ).collect(), (0..n).map(pred).collect()),
            OperatorPairing::MirrorNonDual => ((0..n).map(pred).collect(), (0..n).map(succ).collect()),
        };
        Naive { n, lower_nb: lo, upper_nb: up }
    }

    pub fn lower(&self, x: &Set) -> Set {
        (0..self.n).filter(|&i| self.lower_nb[i].is_subset(x)).collect()
    }

    pub fn upper(&self, x: &Set) -> Set {
        (0..self.n).filter(|&i| !self.upper_nb[i].is_disjoint(x)).collect()
    }

    pub fn full(&self) -> Set {
        (0..self.n).collect()
    }

    pub fn comp(&self, x: &Set) -> Set {
        (0..self.n).filter(|i| !x.contains(i)).collect()
    }

    /// Row formula written out a second time, independently of the library.
    pub fn row(&self, row: u8, x: &Set, y: &Set) -> bool {
        let l = |s: &Set| self.lower(s);
        let u = |s: &Set| self.upper(s);
        let v = self.full();
        let e = Set::new();
        let union = |a: &Set, b: &Set| -> Set { a.union(b).copied().collect() };
        let inter = |a: &Set, b: &Set| -> Set { a.intersection(b).copied().collect() };
        match row {
            1 => l(&self.comp(x)) == self.comp(&u(x)) && u(&self.comp(x)) == self.comp(&l(x)),
            2 => l(&e).is_empty(),
            3 => u(&e).is_empty(),
            4 => l(&v) == v,
            5 => u(&v) == v,
            6 => l(x).is_subset(x),
            7 => x.is_subset(&u(x)),
            8 => !x.is_subset(y) || l(x).is_subset(&l(y)),
            9 => !x.is_subset(y) || u(x).is_subset(&u(y)),
            10 => u(&union(x, y)) == union(&u(x), &u(y)),
            11 => l(&inter(x, y)) == inter(&l(x), &l(y)),
            12 => union(&l(x), &l(y)).is_subset(&l(&union(x, y))),
            13 => u(&inter(x, y)).is_subset(&inter(&u(x), &u(y))),
            14 => l(&l(x)).is_subset(&l(x)),
            15 => l(x).is_subset(&l(&l(x))),
            16 => u(&l(x)).is_subset(&l(x)),
            17 => l(x).is_subset(&u(&l(x))),
            18 => u(&u(x)).is_subset(&u(x)),
            19 => u(x).is_subset(&u(&u(x))),
            20 => l(&u(x)).is_subset(&u(x)),
            21 => u(x).is_subset(&l(&u(x))),
            22 => x.is_subset(&l(&u(x))),
            23 => u(&l(x)).is_subset(x),
            _ => unreachable!(),
        }
    }

    pub fn row_holds_everywhere(&self, row: u8) -> bool {
        let sets = all_sets(self.n);
        let two = (8..=13).contains(&row);
        sets.iter().all(|x| if two { sets.iter().all(|y| self.row(row, x, y)) } else { self.row(row, x, x) })
    }
}

/// Tick grid computed by the naive oracle over all relations on 1..=max_n.
pub fn naive_grid(pairing: OperatorPairing, max_n: usize) -> [[bool; 9]; 23] {
    let mut g = [[true; 9]; 23];
    for n in 1..=max_n {
        for r in all_relations(n) {
            let ops = Naive::new(pairing, &r);
            for row in 1..=23u8 {
                if !ops.row_holds_everywhere(row) {
                    for c in RelationClass::ALL {
                        if brute_in_class(c, &r) {
                            g[row as usize - 1][c.column()] = false;
                        }
                    }
                }
            }
        }
    }
    g
}
