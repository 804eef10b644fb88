mod common;

use rsk_core::{enumerate_relations, Capacity, ImplicationFrame, RelationClass, SubsetOfV};

fn frames() -> Vec<ImplicationFrame> {
    let cap = Capacity::default();
    (0..=3)
        .flat_map(|n| enumerate_relations(n, RelationClass::Preorder, &cap).unwrap())
        .map(|r| ImplicationFrame::new(&r))
        .collect()
}

#[test]
fn frame_construction_closes_input() {
    for r in common::all_relations(3) {
        let f = ImplicationFrame::new(&r);
        assert!(f.implies().classify().preorder());
        assert!(r.pairs().iter().all(|&(x, y)| f.implies().contains(x, y)));
    }
}

#[test]
fn closure_operator_laws() {
    for f in frames() {
        let n = f.propositions().size();
        for x in SubsetOfV::all(n) {
            let cx = f.deductive_closure(x).unwrap();
            assert!(x.is_subset(&cx));
            assert_eq!(f.deductive_closure(cx).unwrap(), cx);
            assert!(f.is_theory(cx).unwrap());
            for y in SubsetOfV::all(n).filter(|y| x.is_subset(y)) {
                assert!(cx.is_subset(&f.deductive_closure(y).unwrap()));
            }
        }
    }
}

#[test]
fn interior_operator_laws() {
    for f in frames() {
        let n = f.propositions().size();
        for x in SubsetOfV::all(n) {
            let ix = f.largest_theory_within(x).unwrap();
            assert!(ix.is_subset(&x));
            assert_eq!(f.largest_theory_within(ix).unwrap(), ix);
            assert!(f.is_theory(ix).unwrap());
            for y in SubsetOfV::all(n).filter(|y| x.is_subset(y)) {
                assert!(ix.is_subset(&f.largest_theory_within(y).unwrap()));
            }
        }
    }
}

#[test]
fn galois_pair() {
    for f in frames() {
        let n = f.propositions().size();
        for x in SubsetOfV::all(n) {
            for y in SubsetOfV::all(n) {
                let left = f.deductive_closure(x).unwrap().is_subset(&y);
                let right = x.is_subset(&f.largest_theory_within(y).unwrap());
                assert_eq!(left, right);
            }
        }
    }
}

#[test]
fn largest_theory_is_union_of_maximal_theories() {
    for f in frames() {
        let n = f.propositions().size();
        let theories: Vec<SubsetOfV> = SubsetOfV::all(n).filter(|&t| f.is_theory(t).unwrap()).collect();
        for x in SubsetOfV::all(n) {
            let inside: Vec<&SubsetOfV> = theories.iter().filter(|t| t.is_subset(&x)).collect();
            let maximal = inside.iter().filter(|t| !inside.iter().any(|u| u != *t && t.is_subset(u)));
            let union = maximal.fold(SubsetOfV::empty(n), |acc, t| acc.union(t));
            assert_eq!(union, f.largest_theory_within(x).unwrap());
            // And it contains every theory inside x.
            assert!(inside.iter().all(|t| t.is_subset(&union)));
        }
    }
}

#[test]
fn deductive_closure_is_least_theory() {
    for f in frames() {
        let n = f.propositions().size();
        let theories: Vec<SubsetOfV> = SubsetOfV::all(n).filter(|&t| f.is_theory(t).unwrap()).collect();
        for x in SubsetOfV::all(n) {
            let meet =
                theories.iter().filter(|t| x.is_subset(t)).fold(SubsetOfV::full(n), |acc, t| acc.intersection(t));
            assert_eq!(meet, f.deductive_closure(x).unwrap());
        }
    }
}
