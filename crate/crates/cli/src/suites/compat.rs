//! Compatibility of cosets: the membership formula agrees with the
//! definitional route (both mixed products idempotent), the relation is
//! reflexive and symmetric, and it meets each of Green's R and L in the
//! diagonal (distinct R- or L-related cosets are never compatible).

use serde_json::json;

use coset_core::ElemId;

use crate::report::{Entry, Report};
use crate::{Ctx, Prepared};

pub fn run(ctx: &Ctx) -> Report {
    super::per_group(ctx, "compat", check_group)
}

fn check_group(p: &Prepared) -> Entry {
    let s = &*p.k1;
    let fail = |law: &str, x: ElemId, y: ElemId| {
        Entry::fail(
            &p.name,
            json!({ "law": law, "elements": [s.display(x), s.display(y)] }),
        )
    };
    for x in s.ids() {
        for y in s.ids() {
            let formula = s.compatible_formula(x, y);
            let definitional = s.compatible_definitional(x, y);
            if formula != definitional {
                return fail("formula route matches definitional route", x, y);
            }
            if formula != s.compatible_formula(y, x) {
                return fail("compatibility is symmetric", x, y);
            }
            if x == y && !formula {
                return fail("compatibility is reflexive", x, y);
            }
            if x != y && formula {
                if s.r_related(x, y) {
                    return fail("compatible distinct cosets are never R-related", x, y);
                }
                if s.l_related(x, y) {
                    return fail("compatible distinct cosets are never L-related", x, y);
                }
            }
        }
    }
    Entry::pass(&p.name).ev("k1_size", s.len())
}
