//! The center through the lattice: it equals the intersection of the
//! maximal abelian subgroups for every group, and groups of composite
//! order with isomorphic coset semigroups have isomorphic centers.

use serde_json::json;

use coset_core::{
    fingerprint, fingerprint_mismatch, group_isomorphic, ElemSet, IsoOutcome, DEFAULT_ISO_CAP,
};

use crate::report::{Entry, Report, SkipTag};
use crate::suites::{is_composite, pair_name};
use crate::{Ctx, IsoResult, Prepared};

pub fn run(ctx: &Ctx) -> Report {
    let mut report = Report::new("center");
    for (name, res) in ctx.resolutions() {
        report.push(match res {
            Ok(p) => check_group(&p),
            Err(msg) => Entry::skipped(name, SkipTag::Error, msg),
        });
    }
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

fn check_group(p: &Prepared) -> Entry {
    let l = &*p.lattice;
    let by_commutation: ElemSet = p.group.center_elements().into_iter().collect();
    let by_intersection = l.members(l.maximal_abelian_intersection_id());
    if by_commutation != by_intersection {
        return Entry::fail(
            &p.name,
            json!({
                "law": "center equals the intersection of maximal abelian subgroups",
                "by_commutation": by_commutation.to_string(),
                "by_intersection": by_intersection.to_string(),
            }),
        );
    }
    Entry::pass(&p.name)
        .ev("center_order", by_commutation.len())
        .ev("maximal_abelian_count", l.maximal_abelian_ids().len())
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
        IsoResult::Outcome(IsoOutcome::Isomorphic(_)) => {
            let za = a.lattice.subgroup_group(a.lattice.center_id());
            let zb = b.lattice.subgroup_group(b.lattice.center_id());
            let centers_match = group_isomorphic(&za, &zb, DEFAULT_ISO_CAP)
                .expect("catalog orders fit the cap")
                .is_some();
            if centers_match {
                Entry::pass(name).ev("center_orders", json!([za.order(), zb.order()]))
            } else {
                Entry::fail(
                    name,
                    json!({
                        "law": "isomorphic coset semigroups give isomorphic centers",
                        "center_orders": [za.order(), zb.order()],
                    }),
                )
            }
        }
    }
}
