//! Along any isomorphism of coset semigroups of composite-order groups,
//! corresponding idempotents come from subgroups of equal order and equal
//! exponent. Pairs are drawn from catalog groups whose semigroup
//! fingerprints agree (self-pairs included, so every composite group is
//! exercised at least through its identity isomorphism).

use serde_json::json;

use coset_core::{fingerprint, fingerprint_mismatch, IsoOutcome};

use crate::report::{Entry, Report, SkipTag};
use crate::suites::{is_composite, pair_name, witness_preserves_subgroup_data};
use crate::{Ctx, IsoResult, Prepared};

pub fn run(ctx: &Ctx) -> Report {
    let mut report = Report::new("exp-preserve");
    let qualifying: Vec<_> = ctx
        .ready()
        .into_iter()
        .filter(|p| is_composite(p.order()))
        .collect();
    let prints: Vec<_> = qualifying.iter().map(|p| fingerprint(&p.k1)).collect();
    for i in 0..qualifying.len() {
        for j in i..qualifying.len() {
            if fingerprint_mismatch(&prints[i], &prints[j]).is_none() {
                report.push(check_pair(ctx, &qualifying[i], &qualifying[j]));
            }
        }
    }
    report
}

fn check_pair(ctx: &Ctx, a: &Prepared, b: &Prepared) -> Entry {
    let name = pair_name(a, b);
    match ctx.semigroup_iso(a, b) {
        IsoResult::Capped { actual, limit } => Entry::skipped(
            name,
            SkipTag::Budget,
            format!("semigroup size {actual} exceeds the isomorphism search cap {limit}"),
        ),
        IsoResult::Outcome(IsoOutcome::Timeout) => {
            Entry::inconclusive(name, "semigroup isomorphism search timed out")
        }
        IsoResult::Outcome(IsoOutcome::NotIsomorphic(_)) => Entry::skipped(
            name,
            SkipTag::HypothesisFailed,
            "no semigroup isomorphism despite matching fingerprints",
        ),
        IsoResult::Outcome(IsoOutcome::Isomorphic(witness)) => {
            match witness_preserves_subgroup_data(a, b, &witness) {
                None => Entry::pass(name).ev("idempotents", a.k1.idempotent_ids().len()),
                Some(v) => Entry::fail(name, json!({ "law": "order and exponent preservation", "violation": v })),
            }
        }
    }
}
