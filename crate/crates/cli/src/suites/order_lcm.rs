//! The group order read off the coset semigroup: for composite |G|, the lcm
//! of the R-class sizes of the minimal-subgroup idempotents equals |G| for
//! non-p-groups and |G|/p for p-groups.

use serde_json::json;

use crate::report::{Entry, Report, SkipTag};
use crate::{Ctx, Prepared};

pub fn run(ctx: &Ctx) -> Report {
    super::per_group(ctx, "order-lcm", check_group)
}

fn lcm(a: usize, b: usize) -> usize {
    let mut x = a;
    let mut y = b;
    while y != 0 {
        (x, y) = (y, x % y);
    }
    a / x * b
}

fn check_group(p: &Prepared) -> Entry {
    let g = &*p.group;
    if !super::is_composite(g.order()) {
        return Entry::skipped(&p.name, SkipTag::Degenerate, "group order is prime");
    }
    let s = &*p.k1;
    let l = &*p.lattice;
    let r_sizes: Vec<usize> = l
        .minimal_subgroups()
        .iter()
        .map(|&h| s.r_class_of_subgroup(h).len())
        .collect();
    let m = r_sizes.iter().copied().fold(1, lcm);
    let expected = match g.p_group_prime() {
        Some(prime) => prime * m,
        None => m,
    };
    if expected != g.order() {
        return Entry::fail(
            &p.name,
            json!({
                "r_class_sizes": r_sizes,
                "lcm": m,
                "reconstructed_order": expected,
                "order": g.order(),
            }),
        );
    }
    Entry::pass(&p.name)
        .ev("lcm", m)
        .ev("p_group", g.p_group_prime().is_some())
}
