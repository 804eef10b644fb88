//! Acceptance suite. Runs each criterion, prints one PASS/FAIL line per
//! criterion, and exits non-zero if any criterion fails.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rsk_core::{
    covering::{enumerate_coverings, reduction_report, CoveringOperators},
    enumerate_relations, proof_witness,
    properties::{check_operators, classical_holds, generate_table_with_workers, CLASSICAL_COUNT},
    sample::{random_covering, random_relation},
    upper, Approximation, Capacity, CharacterizationId, Covering, ImplicationFrame, OperatorPairing, PairedOperators,
    PropertyId, RelationClass, SubsetOfV, TableReport,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

const TABLE_BUDGET: Duration = Duration::from_secs(60);
const COVERING_BUDGET: Duration = Duration::from_secs(300);

fn cell_name(row: usize, col: usize) -> String {
    format!("({},{})", row + 1, RelationClass::ALL[col].tag())
}

/// Exact comparison against a published grid plus the replay and bound
/// semantics of each cell.
fn reproduce(
    pairing: OperatorPairing,
    published: &[&str; 23],
    workers: Option<usize>,
) -> (Outcome, Option<TableReport>) {
    let cap = Capacity::default();
    let start = Instant::now();
    let table = match generate_table_with_workers(pairing, 3, &cap, workers) {
        Ok(t) => t,
        Err(e) => return (Err(format!("generation failed: {e}")), None),
    };
    let elapsed = start.elapsed();
    let grid = common::published_grid(published);
    let mut problems = Vec::new();
    let mut mismatched = Vec::new();
    for p in PropertyId::all() {
        let i = p.row() as usize - 1;
        for (j, class) in RelationClass::ALL.into_iter().enumerate() {
            let v = table.cell(p, class);
            if v.is_verified() != grid[i][j] {
                mismatched.push(format!(
                    "{} computed {} published {}",
                    cell_name(i, j),
                    if v.is_verified() { "✓" } else { "✗" },
                    if grid[i][j] { "✓" } else { "✗" }
                ));
            }
            match v.status {
                rsk_core::VerdictStatus::VerifiedUpTo(b) if b != 3 => {
                    problems.push(format!("{} verified only up to {b}", cell_name(i, j)))
                }
                rsk_core::VerdictStatus::Refuted(_) if !matches!(v.replay(), Ok(true)) => {
                    problems.push(format!("{} counterexample does not replay", cell_name(i, j)))
                }
                _ => {}
            }
        }
    }
    problems.extend(table.invariant_violations());
    if elapsed > TABLE_BUDGET {
        problems.push(format!("took {elapsed:.1?}, budget {TABLE_BUDGET:?}"));
    }
    let outcome = if mismatched.is_empty() && problems.is_empty() {
        Ok(format!("23x9 grid matches exactly in {elapsed:.2?}"))
    } else {
        let mut msg = Vec::new();
        if !mismatched.is_empty() {
            msg.push(format!("{} cell(s) differ: {}", mismatched.len(), mismatched.join("; ")));
        }
        msg.extend(problems);
        Err(msg.join(" | "))
    };
    (outcome, Some(table))
}

fn criterion_1() -> Outcome {
    reproduce(OperatorPairing::DualSuccessor, &common::PUBLISHED_DUAL, None).0
}

fn criterion_2() -> Outcome {
    let (outcome, table) = reproduce(OperatorPairing::NonDual, &common::PUBLISHED_NONDUAL, None);
    let table = table.ok_or_else(|| outcome.clone().unwrap_err())?;
    // The explicitly named cells, checked on their own.
    let mut named = Vec::new();
    let row = |r: u8| PropertyId::new(r).unwrap();
    for class in RelationClass::ALL {
        let want = matches!(
            class,
            RelationClass::Symmetric
                | RelationClass::ReflexiveSymmetric
                | RelationClass::SymmetricTransitive
                | RelationClass::Equivalence
        );
        if table.cell(row(1), class).is_verified() != want {
            named.push(format!("row 1 {}", class.tag()));
        }
        for r in [22, 23] {
            if !table.cell(row(r), class).is_verified() {
                named.push(format!("row {r} {}", class.tag()));
            }
        }
    }
    match (outcome, named.is_empty()) {
        (Ok(s), true) => Ok(s),
        (Ok(_), false) => Err(format!("named cells wrong: {}", named.join(", "))),
        (Err(e), true) => Err(format!("{e} | rows 1, 22, 23 as stated")),
        (Err(e), false) => Err(format!("{e} | named cells wrong: {}", named.join(", "))),
    }
}

fn characterization_failures(r: &rsk_core::BinaryRelation, failures: &mut Vec<String>) {
    for c in CharacterizationId::ALL {
        let rec = rsk_core::check_biconditional(c, r);
        if !rec.consistent {
            failures.push(format!("{c} inconsistent on {:?}", r.pairs()));
        }
        if !rec.class_holds {
            match proof_witness(c, r) {
                Ok(w) if rsk_core::characterization::property_at(c, r, w) == Ok(false) => {}
                other => failures.push(format!("{c} witness {other:?} on {:?}", r.pairs())),
            }
        }
    }
}

fn criterion_3() -> Outcome {
    let mut failures = Vec::new();
    let cap = Capacity::default();
    let all = enumerate_relations(3, RelationClass::Any, &cap).map_err(|e| e.to_string())?;
    let mut count = 0;
    for r in all {
        count += 1;
        characterization_failures(&r, &mut failures);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for _ in 0..10_000 {
        characterization_failures(&random_relation(5, &mut rng), &mut failures);
    }
    if count != 512 {
        failures.push(format!("enumerated {count} relations on n=3"));
    }
    summarize(failures, "512 relations on n=3 and 10000 random on n=5, 8 ids each")
}

fn criterion_4() -> Outcome {
    let cap = Capacity::default();
    let eqs: Vec<_> = enumerate_relations(4, RelationClass::Equivalence, &cap).map_err(|e| e.to_string())?.collect();
    let mut failures = Vec::new();
    if eqs.len() != 15 {
        failures.push(format!("{} equivalences on n=4", eqs.len()));
    }
    for r in &eqs {
        let families: Vec<PairedOperators> =
            [OperatorPairing::Pawlak, OperatorPairing::DualSuccessor, OperatorPairing::NonDual]
                .into_iter()
                .map(|p| PairedOperators::new(p, r).unwrap())
                .collect();
        for x in SubsetOfV::all(4) {
            let (l0, u0) = (families[0].lower(x), families[0].upper(x));
            for ops in &families[1..] {
                if ops.lower(x) != l0 || ops.upper(x) != u0 {
                    failures.push(format!("families disagree on {:?} at {x}", r.pairs()));
                }
            }
            for y in SubsetOfV::all(4) {
                for ops in &families {
                    for k in 1..=CLASSICAL_COUNT {
                        if !classical_holds(k, ops, x, y) {
                            failures.push(format!("property {k} fails on {:?} at {x},{y}", r.pairs()));
                        }
                    }
                }
            }
        }
    }
    summarize(failures, "15 equivalences, 256 subset pairs, 12 properties, 3 families")
}

fn criterion_5() -> Outcome {
    let start = Instant::now();
    let cap = Capacity::default();
    let nondual = generate_table_with_workers(OperatorPairing::NonDual, 3, &cap, None).map_err(|e| e.to_string())?;
    let ticked: Vec<PropertyId> =
        PropertyId::all().filter(|&p| nondual.cell(p, RelationClass::Preorder).is_verified()).collect();
    let mut coverings: Vec<Covering> = Vec::new();
    for n in 0..=3 {
        coverings.extend(enumerate_coverings(n).map_err(|e| e.to_string())?);
    }
    let enumerated = coverings.len();
    let mut rng = ChaCha8Rng::seed_from_u64(500);
    coverings.extend((0..500).map(|_| random_covering(5, &mut rng)));
    let mut failures = Vec::new();
    for c in &coverings {
        match reduction_report(c) {
            Ok(rep) if rep.induced_is_preorder && rep.reduction_holds => {}
            other => failures.push(format!("reduction on {:?}: {other:?}", c.blocks())),
        }
        let ops = CoveringOperators(c);
        for &p in &ticked {
            if !check_operators(p, &ops).holds {
                failures.push(format!("row {} fails on {:?}", p.row(), c.blocks()));
            }
        }
    }
    let elapsed = start.elapsed();
    if elapsed > COVERING_BUDGET {
        failures.push(format!("took {elapsed:.1?}, budget {COVERING_BUDGET:?}"));
    }
    summarize(
        failures,
        &format!("{enumerated} enumerated + 500 random coverings, {} rows, {elapsed:.2?}", ticked.len()),
    )
}

fn criterion_6() -> Outcome {
    let mut failures = Vec::new();
    for r in (0..=3).flat_map(common::all_relations) {
        let n = r.size();
        let ops = PairedOperators::new(OperatorPairing::NonDual, &r).unwrap();
        for x in SubsetOfV::all(n) {
            let union = x.iter().fold(SubsetOfV::empty(n), |acc, e| acc.union(&r.successors(e).unwrap()));
            if upper(OperatorPairing::NonDual, &r, x).unwrap() != union {
                failures.push(format!("union form on {:?} at {x}", r.pairs()));
            }
            let ux = ops.upper(x);
            for y in SubsetOfV::all(n) {
                if ux.is_subset(&y) != x.is_subset(&ops.lower(y)) {
                    failures.push(format!("adjunction on {:?} at {x},{y}", r.pairs()));
                }
            }
        }
    }
    summarize(failures, "all relations n<=3, all X and (X,Y)")
}

fn criterion_7() -> Outcome {
    let cap = Capacity::default();
    let mut failures = Vec::new();
    let mut frames = 0;
    for n in 0..=3 {
        for r in enumerate_relations(n, RelationClass::Preorder, &cap).map_err(|e| e.to_string())? {
            frames += 1;
            let f = ImplicationFrame::new(&r);
            let c = |x| f.deductive_closure(x).unwrap();
            let i = |x| f.largest_theory_within(x).unwrap();
            for x in SubsetOfV::all(n) {
                let (cx, ix) = (c(x), i(x));
                let ok = x.is_subset(&cx)
                    && ix.is_subset(&x)
                    && c(cx) == cx
                    && i(ix) == ix
                    && f.is_theory(cx).unwrap()
                    && f.is_theory(ix).unwrap()
                    && SubsetOfV::all(n).filter(|y| x.is_subset(y)).all(|y| cx.is_subset(&c(y)) && ix.is_subset(&i(y)));
                if !ok {
                    failures.push(format!("laws fail on {:?} at {x}", r.pairs()));
                }
            }
        }
    }
    summarize(failures, &format!("{frames} pre-orders on n<=3, all subsets"))
}

fn criterion_8() -> Outcome {
    let cap = Capacity::default();
    let a = generate_table_with_workers(OperatorPairing::DualSuccessor, 3, &cap, Some(1)).map_err(|e| e.to_string())?;
    let b = generate_table_with_workers(OperatorPairing::DualSuccessor, 3, &cap, Some(7)).map_err(|e| e.to_string())?;
    let (ja, jb) = (a.to_json(), b.to_json());
    let (ma, mb) = (a.to_markdown(), b.to_markdown());
    if ja == jb && ma == mb {
        Ok(format!("1 and 7 workers give identical reports ({} bytes json)", ja.len()))
    } else {
        Err("reports differ between worker counts".into())
    }
}

fn summarize(failures: Vec<String>, what: &str) -> Outcome {
    if failures.is_empty() {
        Ok(what.to_string())
    } else {
        let shown: Vec<_> = failures.iter().take(5).cloned().collect();
        Err(format!("{} failure(s): {}", failures.len(), shown.join("; ")))
    }
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("dual successor table reproduction", criterion_1),
        ("non-dual table reproduction", criterion_2),
        ("characterization suite", criterion_3),
        ("Pawlak regression", criterion_4),
        ("covering reduction", criterion_5),
        ("adjunction and union form", criterion_6),
        ("logic demo laws", criterion_7),
        ("determinism across workers", criterion_8),
    ];
    let mut failed = 0;
    for (k, (name, f)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = f();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {}: PASS {name} [{secs:.2}s] {detail}", k + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {}: FAIL {name} [{secs:.2}s] {detail}", k + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 8 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
