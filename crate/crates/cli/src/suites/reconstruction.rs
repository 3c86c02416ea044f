//! Reconstruction: within each class of groups the theory covers —
//! connected-graph groups recovered through the unit group, abelian groups
//! of composite order, metacyclic p-groups of composite order, and groups
//! with a unique minimal subgroup and composite order — two groups are
//! isomorphic exactly when their coset semigroups are. Both directions are
//! checked: a semigroup isomorphism must be matched by a group isomorphism,
//! and isomorphic groups must never produce non-isomorphic semigroups.

use serde_json::json;

use coset_core::{minimal_pairs_permute, IsoOutcome};

use crate::report::{Entry, Report, SkipTag};
use crate::suites::{
    groups_isomorphic, is_composite, pair_name, unique_minimal, witness_preserves_subgroup_data,
};
use crate::{Ctx, IsoResult, Prepared};

fn classes(p: &Prepared) -> Vec<&'static str> {
    let g = &*p.group;
    let l = &*p.lattice;
    let composite = is_composite(g.order());
    let mut out = Vec::new();
    let minimals = l.minimal_subgroups();
    let section3 = minimals.len() >= 2
        && minimal_pairs_permute(l)
        && match g.p_group_prime() {
            None => true,
            Some(prime) => {
                let (_, omega) = l.omega();
                l.order_of(omega) > prime * prime
            }
        };
    if section3 {
        out.push("connected-graph");
    }
    if composite && g.is_abelian() {
        out.push("abelian");
    }
    if composite && g.p_group_prime().is_some() && l.is_metacyclic() {
        out.push("metacyclic-p");
    }
    if composite && unique_minimal(l).is_some() {
        out.push("unique-minimal");
    }
    out
}

pub fn run(ctx: &Ctx) -> Report {
    let mut report = Report::new("reconstruction");
    let ready = ctx.ready();
    let tagged: Vec<_> = ready.iter().map(|p| (p, classes(p))).collect();
    for i in 0..tagged.len() {
        for j in i + 1..tagged.len() {
            let (a, ca) = &tagged[i];
            let (b, cb) = &tagged[j];
            let common: Vec<&&str> = ca.iter().filter(|c| cb.contains(c)).collect();
            if common.is_empty() {
                continue;
            }
            let common: Vec<String> = common.into_iter().map(|c| c.to_string()).collect();
            report.push(check_pair(ctx, a, b, common));
        }
    }
    report
}

fn check_pair(ctx: &Ctx, a: &Prepared, b: &Prepared, common: Vec<String>) -> Entry {
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
                        "classes": common,
                    }),
                )
            } else {
                Entry::pass(name)
                    .ev("classes", json!(common))
                    .ev("k1_isomorphic", false)
                    .ev("groups_isomorphic", false)
            }
        }
        IsoResult::Outcome(IsoOutcome::Isomorphic(witness)) => {
            if !groups_isomorphic(a, b) {
                return Entry::fail(
                    name,
                    json!({
                        "law": "groups in a reconstruction class with isomorphic coset semigroups are isomorphic",
                        "classes": common,
                    }),
                );
            }
            if let Some(v) = witness_preserves_subgroup_data(a, b, &witness) {
                return Entry::fail(
                    name,
                    json!({ "law": "order and exponent preservation", "violation": v }),
                );
            }
            Entry::pass(name)
                .ev("classes", json!(common))
                .ev("k1_isomorphic", true)
                .ev("groups_isomorphic", true)
        }
    }
}
