//! The `verify` subcommand: runs check suites and prints a summary table.

use std::path::Path;

use positroid_core::pipeline::component_ehrhart;
use positroid_core::oracle::{count_profile, ehrhart_product, hstar_from_counts};
use positroid_core::positroid::{
    all_decorated_permutations, bases_from_necklace, decorated_from_necklace, h_representation,
    necklace_from_decorated,
};
use positroid_core::tree::random_subdivision;
use positroid_core::verify::{
    check_fixtures, check_instance, check_subdivision, paper_examples, CheckOutcome, Fixture, InstanceChecks,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::{max_n, Failure, Format, Output, Scope};

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct Summary<'a> {
    scope: &'a str,
    passed: bool,
    checks: &'a [CheckOutcome],
}

#[derive(Serialize)]
struct FirstFailure<'a> {
    check: &'a str,
    counterexample: &'a str,
}

fn exhaustive(nmax: usize, samples: usize) -> Vec<CheckOutcome> {
    let decorated: Vec<_> = (1..=nmax).flat_map(all_decorated_permutations).collect();
    let mut trips = CheckOutcome::new("round trips (all decorated)");
    for d in &decorated {
        let j = necklace_from_decorated(d);
        trips.record(|| d.to_string(), Ok(&decorated_from_necklace(&j) == d));
    }
    let necklaces: Vec<_> = decorated.iter().map(necklace_from_decorated).collect();
    let connected: Vec<_> = necklaces
        .iter()
        .filter(|j| j.n() >= 2 && bases_from_necklace(j).is_connected())
        .collect();
    let rows: Vec<Vec<CheckOutcome>> = connected
        .par_iter()
        .map(|j| check_instance(j, InstanceChecks::default()))
        .collect();
    let mut totals: Vec<CheckOutcome> = match rows.first() {
        Some(r) => r.iter().map(|c| CheckOutcome::new(c.name.clone())).collect(),
        None => Vec::new(),
    };
    for row in rows {
        for (t, c) in totals.iter_mut().zip(row) {
            t.merge(c);
        }
    }

    let mut product = CheckOutcome::new("disconnected product = direct count");
    let split: Vec<_> = necklaces
        .iter()
        .filter(|j| j.n() <= 5 && !bases_from_necklace(j).is_connected())
        .collect();
    let results: Vec<(String, positroid_core::Result<bool>)> = split
        .par_iter()
        .map(|j| {
            let r = (|| {
                let d = j.n() - bases_from_necklace(j).decompose_direct_sum().len();
                let direct = hstar_from_counts(&count_profile(&h_representation(j), &[], d))?;
                Ok(ehrhart_product(&component_ehrhart(j)?).hstar()? == direct)
            })();
            (j.to_string(), r)
        })
        .collect();
    for (name, r) in results {
        product.record(|| name, r);
    }

    let mut trees = CheckOutcome::new("tree extensions = labels");
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let top = nmax.clamp(3, 7);
    let taus: Vec<_> = (0..samples).map(|s| random_subdivision(3 + s % (top - 2), &mut rng)).collect();
    let results: Vec<_> = taus.par_iter().map(|t| (format!("{t:?}"), check_subdivision(t))).collect();
    for (name, r) in results {
        trees.record(|| name, r);
    }

    let mut out = totals;
    out.extend([trips, product, trees]);
    out
}

pub(crate) fn run(
    scope: Scope,
    nmax: usize,
    samples: usize,
    fixtures: Option<&Path>,
    out: &mut Output,
) -> Result<(), Failure> {
    let cap = max_n()?.min(7);
    if scope == Scope::Exhaustive && nmax > cap {
        return Err(Failure::usage(format!("--max-n {nmax} exceeds the size cap {cap}")));
    }
    let fixture_list = match fixtures {
        Some(p) => {
            let text = std::fs::read_to_string(p).map_err(|e| Failure::usage(format!("{}: {e}", p.display())))?;
            let list: Vec<Fixture> = serde_json::from_str(&text).map_err(|e| {
                Failure::usage(format!("{}: line {}, column {}: {e}", p.display(), e.line(), e.column()))
            })?;
            Some(list)
        }
        None if scope == Scope::Fixtures => return Err(Failure::usage("--scope fixtures needs --fixtures PATH")),
        None => None,
    };
    let mut checks = match scope {
        Scope::PaperExamples => paper_examples(),
        Scope::Exhaustive => exhaustive(nmax, samples),
        Scope::Fixtures => Vec::new(),
    };
    if let Some(list) = &fixture_list {
        checks.push(check_fixtures(list));
    }
    let scope_name = match scope {
        Scope::PaperExamples => "paper-examples",
        Scope::Exhaustive => "exhaustive",
        Scope::Fixtures => "fixtures",
    };
    let passed = checks.iter().all(CheckOutcome::passed);
    match out.format() {
        Format::Json => out.json(&Summary {
            scope: scope_name,
            passed,
            checks: &checks,
        })?,
        _ => {
            out.line(&format!("{:<40} {:>9}  status", "check", "instances"));
            for c in &checks {
                let status = if c.passed() { "PASS".to_string() } else { format!("FAIL ({})", c.failures.len()) };
                out.line(&format!("{:<40} {:>9}  {status}", c.name, c.instances));
            }
        }
    }
    if let Some(c) = checks.iter().find(|c| !c.passed()) {
        let first = FirstFailure {
            check: &c.name,
            counterexample: &c.failures[0],
        };
        return Err(Failure {
            code: 1,
            message: format!(
                "verification failed; first counterexample: {}",
                serde_json::to_string(&first).unwrap_or_default()
            ),
        });
    }
    Ok(())
}
