//! The fourteen theorem suites. Each suite checks one cluster of statements
//! about coset semigroups over every catalog group (or group pair) and
//! returns a [`Report`] with one entry per group.

pub mod abelian_char;
pub mod axioms;
pub mod center;
pub mod compat;
pub mod counting;
pub mod cyclic_filter;
pub mod eta;
pub mod exp_preserve;
pub mod green;
pub mod omega1;
pub mod order_lcm;
pub mod permute_prime;
pub mod reconstruction;
pub mod units_dual;

use serde_json::{json, Value};

use coset_core::{group_isomorphic, ElemId, SubgroupLattice, TupleMethod, DEFAULT_ISO_CAP};

use crate::report::{Entry, Report, SkipTag};
use crate::{Ctx, Prepared};

/// Suite names in the order `verify --suite all` runs them.
pub const SUITE_NAMES: &[&str] = &[
    "axioms",
    "green",
    "order-lcm",
    "cyclic-filter",
    "permute-prime",
    "compat",
    "units-dual",
    "counting",
    "eta",
    "abelian-char",
    "omega1",
    "exp-preserve",
    "center",
    "reconstruction",
];

/// Run one suite by name.
pub fn run_suite(name: &str, ctx: &Ctx) -> Option<Report> {
    match name {
        "axioms" => Some(axioms::run(ctx)),
        "green" => Some(green::run(ctx)),
        "order-lcm" => Some(order_lcm::run(ctx)),
        "cyclic-filter" => Some(cyclic_filter::run(ctx)),
        "permute-prime" => Some(permute_prime::run(ctx)),
        "compat" => Some(compat::run(ctx)),
        "units-dual" => Some(units_dual::run(ctx)),
        "counting" => Some(counting::run(ctx)),
        "eta" => Some(eta::run(ctx)),
        "abelian-char" => Some(abelian_char::run(ctx)),
        "omega1" => Some(omega1::run(ctx)),
        "exp-preserve" => Some(exp_preserve::run(ctx)),
        "center" => Some(center::run(ctx)),
        "reconstruction" => Some(reconstruction::run(ctx)),
        _ => None,
    }
}

/// One entry per catalog group; groups that failed to build become
/// error-skip entries so one bad file never aborts a suite.
pub(crate) fn per_group(ctx: &Ctx, suite: &str, f: impl Fn(&Prepared) -> Entry) -> Report {
    let mut report = Report::new(suite);
    for (name, res) in ctx.resolutions() {
        report.push(match res {
            Ok(p) => f(&p),
            Err(msg) => Entry::skipped(name, SkipTag::Error, msg),
        });
    }
    report
}

pub(crate) fn pair_name(a: &Prepared, b: &Prepared) -> String {
    format!("{},{}", a.name, b.name)
}

pub(crate) fn method_str(m: TupleMethod) -> &'static str {
    match m {
        TupleMethod::DirectSearch => "direct-search",
        TupleMethod::Translation => "translation",
    }
}

/// Exponent of one lattice member, via its standalone group.
pub(crate) fn subgroup_exponent(l: &SubgroupLattice, h: coset_core::SubId) -> usize {
    l.subgroup_group(h).exponent()
}

/// Whether the groups (not the semigroups) are isomorphic; orders ≤ the
/// catalog bound always fit the search cap.
pub(crate) fn groups_isomorphic(a: &Prepared, b: &Prepared) -> bool {
    group_isomorphic(&a.group, &b.group, DEFAULT_ISO_CAP)
        .expect("catalog orders fit the group-isomorphism cap")
        .is_some()
}

/// Check that a semigroup isomorphism witness carries every idempotent to
/// an idempotent over a subgroup of the same order and exponent. Returns a
/// failure witness when it does not.
pub(crate) fn witness_preserves_subgroup_data(
    a: &Prepared,
    b: &Prepared,
    witness: &[ElemId],
) -> Option<Value> {
    for x in a.k1.ids() {
        if !a.k1.is_idempotent(x) {
            continue;
        }
        let y = witness[x];
        if !b.k1.is_idempotent(y) {
            return Some(json!({
                "idempotent": a.k1.display(x),
                "image": b.k1.display(y),
                "problem": "image is not idempotent",
            }));
        }
        let h = a.k1.subgroup_of(x);
        let k = b.k1.subgroup_of(y);
        let (ha, kb) = (a.lattice.order_of(h), b.lattice.order_of(k));
        if ha != kb {
            return Some(json!({
                "idempotent": a.k1.display(x),
                "image": b.k1.display(y),
                "problem": format!("subgroup orders differ: {ha} vs {kb}"),
            }));
        }
        let (ea, eb) = (
            subgroup_exponent(&a.lattice, h),
            subgroup_exponent(&b.lattice, k),
        );
        if ea != eb {
            return Some(json!({
                "idempotent": a.k1.display(x),
                "image": b.k1.display(y),
                "problem": format!("subgroup exponents differ: {ea} vs {eb}"),
            }));
        }
    }
    None
}

/// The unique minimal subgroup, when there is exactly one.
pub(crate) fn unique_minimal(l: &SubgroupLattice) -> Option<coset_core::SubId> {
    match l.minimal_subgroups() {
        [h] => Some(*h),
        _ => None,
    }
}

pub(crate) fn is_composite(n: usize) -> bool {
    n > 1 && coset_core::factorize(n) != [(n, 1)]
}
