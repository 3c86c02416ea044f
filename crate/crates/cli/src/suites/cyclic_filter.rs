//! Cyclicity read off the idempotent order: a subgroup H is cyclic exactly
//! when the idempotents in the order filter of its own idempotent, together
//! with the adjoined identity, form a product of chains whose lengths are
//! the prime exponents of |H|.

use serde_json::json;

use coset_core::{chain_product, factorize, poset_isomorphic, ElemId, Poset};

use crate::report::{Entry, Report};
use crate::{Ctx, Prepared};

pub fn run(ctx: &Ctx) -> Report {
    super::per_group(ctx, "cyclic-filter", check_group)
}

fn check_group(p: &Prepared) -> Entry {
    let s = &*p.k1;
    let l = &*p.lattice;
    let mut checked = 0usize;
    for h in l.nontrivial_ids() {
        let e = s.idempotent_id(h);
        // idempotents weakly above e in the natural order, i.e. the
        // subgroups of H, plus one adjoined top for the deleted identity
        let filter: Vec<ElemId> = s
            .order_filter(e)
            .into_iter()
            .filter(|&x| s.is_idempotent(x))
            .collect();
        let n = filter.len() + 1;
        let top = filter.len();
        let poset = Poset::from_relation(n, |a, b| {
            b == top || (a != top && s.natural_leq(filter[a], filter[b]))
        });
        let exponents: Vec<usize> = factorize(l.order_of(h)).into_iter().map(|(_, e)| e).collect();
        let chains = chain_product(&exponents);
        let matches_chains = poset_isomorphic(&poset, &chains, None).is_some();
        if matches_chains != l.is_cyclic_sub(h) {
            return Entry::fail(
                &p.name,
                json!({
                    "subgroup": l.members(h).to_string(),
                    "order": l.order_of(h),
                    "cyclic": l.is_cyclic_sub(h),
                    "filter_is_chain_product": matches_chains,
                    "filter_size": n,
                }),
            );
        }
        checked += 1;
    }
    Entry::pass(&p.name).ev("subgroups_checked", checked)
}
