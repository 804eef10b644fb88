//! Seeded random relations and coverings for sampled sweeps beyond the
//! exhaustive bound.

use rand::Rng;

use crate::covering::Covering;
use crate::relation::{BinaryRelation, Universe};
use crate::subset::{full_mask, SubsetOfV};

/// Each pair included independently with probability 1/2.
pub fn random_relation<R: Rng + ?Sized>(n: usize, rng: &mut R) -> BinaryRelation {
    let rows = (0..n).map(|_| rng.gen::<u64>() & full_mask(n)).collect();
    BinaryRelation::from_rows(Universe::new(n).expect("sample size within bounds"), rows)
        .expect("rows masked to universe")
}

/// Between one and `n + 1` random nonempty blocks; any element left
/// uncovered is added to a randomly chosen block.
pub fn random_covering<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Covering {
    let universe = Universe::new(n).expect("sample size within bounds");
    if n == 0 {
        return Covering::new(universe, Vec::new()).expect("empty covering of empty universe");
    }
    let mask = full_mask(n);
    let k = rng.gen_range(1..=n + 1);
    let mut blocks: Vec<u64> = (0..k)
        .map(|_| loop {
            let b = rng.gen::<u64>() & mask;
            if b != 0 {
                break b;
            }
        })
        .collect();
    let covered = blocks.iter().fold(0, |acc, b| acc | b);
    for x in 0..n {
        if covered >> x & 1 == 0 {
            let i = rng.gen_range(0..blocks.len());
            blocks[i] |= 1 << x;
        }
    }
    let blocks = blocks.into_iter().map(|b| SubsetOfV::from_bits_unchecked(n, b)).collect();
    Covering::new(universe, blocks).expect("blocks cover the universe")
}
