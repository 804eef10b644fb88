mod common;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rsk_core::{
    covering::{enumerate_coverings, reduction_report, CoveringOperators},
    enumerate_relations, lower,
    properties::check_operators,
    sample::random_covering,
    upper, verify_reduction, Approximation, Capacity, Covering, OperatorPairing, PropertyId, RelationClass, SubsetOfV,
};

fn population() -> Vec<Covering> {
    let mut all: Vec<Covering> = (0..=3).flat_map(|n| enumerate_coverings(n).unwrap()).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(0xc0be);
    all.extend((0..200).map(|_| random_covering(5, &mut rng)));
    all
}

#[test]
fn induced_relation_is_preorder() {
    for c in population() {
        assert!(c.induced_relation().classify().preorder(), "{c:?}");
    }
}

#[test]
fn reduction_holds() {
    for c in population() {
        assert!(verify_reduction(&c).unwrap(), "{c:?}");
        let rep = reduction_report(&c).unwrap();
        assert!(rep.ok(), "{rep:?}");
    }
}

#[test]
fn neighbourhood_contains_point_and_is_block_meet() {
    for c in population() {
        for x in 0..c.size() {
            let nb = c.neighborhood(x).unwrap();
            assert!(nb.contains(x));
            for b in c.blocks().iter().filter(|b| b.contains(x)) {
                assert!(nb.is_subset(b));
            }
        }
    }
}

#[test]
fn ct_operators_have_every_preorder_property_but_duality() {
    let cap = Capacity::default();
    let nondual = rsk_core::generate_table(OperatorPairing::NonDual, 3, &cap).unwrap();
    let ticked: Vec<PropertyId> =
        PropertyId::all().filter(|&p| nondual.cell(p, RelationClass::Preorder).is_verified()).collect();
    assert_eq!(ticked.iter().map(|p| p.row()).collect::<Vec<_>>(), (2..=23).collect::<Vec<_>>());
    for c in (0..=3).flat_map(|n| enumerate_coverings(n).unwrap()) {
        let ops = CoveringOperators(&c);
        for &p in &ticked {
            assert!(check_operators(p, &ops).holds, "row {} on {c:?}", p.row());
        }
    }
}

#[test]
fn duality_failure_fixture() {
    // Canonical first covering whose C_t pair is not dual.
    let found = (0..=3)
        .flat_map(|n| enumerate_coverings(n).unwrap())
        .find_map(|c| {
            let n = c.size();
            SubsetOfV::all(n).find(|&x| c.ct_lower(x.complement()) != c.ct_upper(x).complement()).map(|x| (c, x))
        })
        .expect("some covering breaks duality");
    let fixture = Covering::from_blocks(2, &[&[0], &[0, 1]]).unwrap();
    assert_eq!(found.0, fixture);
    assert_eq!(found.1, SubsetOfV::from_indices(2, [0]).unwrap());
    // ct_lower({1}) = ∅ while −ct_upper({0}) = {1}.
    assert!(fixture.ct_lower(SubsetOfV::from_indices(2, [1]).unwrap()).is_empty());
}

#[test]
fn definable_forms_agree() {
    for c in population() {
        let fam = c.definable_family();
        for x in SubsetOfV::all(c.size()) {
            assert_eq!(fam.meet_above(x), c.ct_upper(x));
            assert_eq!(fam.union_within(x), c.ct_lower(x));
        }
        for d in &fam.sets {
            assert!(c.is_definable(*d));
        }
    }
}

#[test]
fn partition_coverings_reduce_to_pawlak() {
    let cap = Capacity::default();
    for n in 0..=4 {
        for r in enumerate_relations(n, RelationClass::Equivalence, &cap).unwrap() {
            let c = Covering::from_partition(&r).unwrap();
            assert!(verify_reduction(&c).unwrap());
            assert_eq!(c.induced_relation(), r);
            for x in SubsetOfV::all(n) {
                assert_eq!(c.ct_lower(x), lower(OperatorPairing::Pawlak, &r, x).unwrap());
                assert_eq!(c.ct_upper(x), upper(OperatorPairing::Pawlak, &r, x).unwrap());
            }
        }
    }
}

#[test]
fn operators_view_matches_methods() {
    let c = Covering::from_blocks(3, &[&[0, 1], &[1, 2]]).unwrap();
    let ops = CoveringOperators(&c);
    assert_eq!(ops.size(), 3);
    for x in SubsetOfV::all(3) {
        assert_eq!(ops.lower(x), c.ct_lower(x));
        assert_eq!(ops.upper(x), c.ct_upper(x));
    }
}
