//! The permutability criterion on pairs of distinct minimal subgroups: the
//! filter R-count equals the join index always; the pair permutes exactly
//! when the count is the other subgroup's order (a prime); so permuting
//! pairs always produce a prime count. The literal converse "prime count
//! implies permuting" is false in general and only recorded as evidence.

use serde_json::json;

use coset_core::minimal_pair_checks;

use crate::report::{Entry, Report, SkipTag};
use crate::{Ctx, Prepared};

pub fn run(ctx: &Ctx) -> Report {
    super::per_group(ctx, "permute-prime", check_group)
}

fn check_group(p: &Prepared) -> Entry {
    let l = &*p.lattice;
    if l.minimal_subgroups().len() < 2 {
        return Entry::skipped(
            &p.name,
            SkipTag::Degenerate,
            "fewer than two minimal subgroups",
        );
    }
    let checks = minimal_pair_checks(&p.k1);
    let mut converse_failures = 0usize;
    let mut permuting = 0usize;
    for c in &checks {
        let join_index = l.order_of(c.join) / l.order_of(c.h);
        let witness = || {
            json!({
                "h": l.members(c.h).to_string(),
                "k": l.members(c.k).to_string(),
                "permute": c.permute,
                "filter_r_count": c.filter_r_count,
                "join_index": join_index,
                "other_order": c.other_order,
            })
        };
        if c.filter_r_count != join_index {
            return Entry::fail(&p.name, witness());
        }
        if !c.criterion_holds() {
            return Entry::fail(&p.name, witness());
        }
        if !c.prime_when_permuting() {
            return Entry::fail(&p.name, witness());
        }
        if c.permute {
            // a permuting pair's set product is the join itself
            if c.product_hk != l.members(c.join) {
                return Entry::fail(&p.name, witness());
            }
            permuting += 1;
        }
        if !c.literal_converse_holds() {
            converse_failures += 1;
        }
    }
    Entry::pass(&p.name)
        .ev("pairs", checks.len())
        .ev("permuting_pairs", permuting)
        .ev("literal_converse_failures", converse_failures)
}
