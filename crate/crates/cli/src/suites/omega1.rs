//! Groups with a unique minimal subgroup: isomorphic coset semigroups force
//! isomorphic quotients by that subgroup, and — when the orders are
//! composite — isomorphic groups outright. Non-isomorphic semigroups over
//! isomorphic groups would contradict functoriality and also fail here.

use serde_json::json;

use coset_core::{group_isomorphic, IsoOutcome, DEFAULT_ISO_CAP};

use crate::report::{Entry, Report, SkipTag};
use crate::suites::{groups_isomorphic, is_composite, pair_name, unique_minimal};
use crate::{Ctx, IsoResult, Prepared};

pub fn run(ctx: &Ctx) -> Report {
    let mut report = Report::new("omega1");
    let qualifying: Vec<_> = ctx
        .ready()
        .into_iter()
        .filter(|p| unique_minimal(&p.lattice).is_some())
        .collect();
    for i in 0..qualifying.len() {
        for j in i + 1..qualifying.len() {
            report.push(check_pair(ctx, &qualifying[i], &qualifying[j]));
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
        IsoResult::Outcome(IsoOutcome::NotIsomorphic(reason)) => {
            if groups_isomorphic(a, b) {
                Entry::fail(
                    name,
                    json!({
                        "law": "isomorphic groups have isomorphic coset semigroups",
                        "not_isomorphic_because": reason,
                    }),
                )
            } else {
                Entry::pass(name)
                    .ev("k1_isomorphic", false)
                    .ev("groups_isomorphic", false)
            }
        }
        IsoResult::Outcome(IsoOutcome::Isomorphic(_)) => {
            let ka = unique_minimal(&a.lattice).expect("filtered to unique-minimal groups");
            let kb = unique_minimal(&b.lattice).expect("filtered to unique-minimal groups");
            let qa = a
                .lattice
                .quotient_group(ka)
                .expect("the unique minimal subgroup is normal");
            let qb = b
                .lattice
                .quotient_group(kb)
                .expect("the unique minimal subgroup is normal");
            let quotients_match = group_isomorphic(&qa, &qb, DEFAULT_ISO_CAP)
                .expect("catalog orders fit the cap")
                .is_some();
            if !quotients_match {
                return Entry::fail(
                    name,
                    json!({
                        "law": "quotients by the unique minimal subgroups are isomorphic",
                        "quotient_orders": [qa.order(), qb.order()],
                    }),
                );
            }
            let both_composite = is_composite(a.order()) && is_composite(b.order());
            let giso = groups_isomorphic(a, b);
            if both_composite && !giso {
                return Entry::fail(
                    name,
                    json!({
                        "law": "composite groups with isomorphic coset semigroups are isomorphic",
                    }),
                );
            }
            Entry::pass(name)
                .ev("k1_isomorphic", true)
                .ev("groups_isomorphic", giso)
                .ev("both_composite", both_composite)
        }
    }
}
