//! The unit group of the completion, two ways: brute-force enumeration of
//! permissible sets that are units, against the tuple construction over
//! minimal subgroups. The ideal map must be a bijection intertwining the
//! two products, the brute-force units must form a group under the
//! completion product, and the tuple set must be closed under the induced
//! permutation action and under right translation.

use std::collections::{HashMap, HashSet};

use serde_json::json;

use coset_core::completion::{
    down_closure, pointwise_product, tuple_ideal, tuple_permutation, tuple_product,
};
use coset_core::{
    minimal_pairs_permute, unit_tuple_group, units_bruteforce, ElemId, Error, FiniteGroup,
    DEFAULT_BRUTE_BUDGET, DEFAULT_TUPLE_BUDGET,
};

use crate::report::{Entry, Report, SkipTag};
use crate::{Ctx, Prepared};

pub fn run(ctx: &Ctx) -> Report {
    super::per_group(ctx, "units-dual", check_group)
}

fn check_group(p: &Prepared) -> Entry {
    let s = &*p.k1;
    let l = &*p.lattice;
    let g = s.group();
    if l.minimal_subgroups().len() < 2 {
        return Entry::skipped(
            &p.name,
            SkipTag::Degenerate,
            "fewer than two minimal subgroups",
        );
    }
    if !minimal_pairs_permute(l) {
        return Entry::skipped(
            &p.name,
            SkipTag::HypothesisFailed,
            "minimal subgroups do not pairwise permute",
        );
    }
    let brute = match units_bruteforce(s, DEFAULT_BRUTE_BUDGET) {
        Ok(u) => u,
        Err(Error::BudgetExceeded { actual, limit }) => {
            return Entry::skipped(
                &p.name,
                SkipTag::Budget,
                format!("brute-force search space {actual} exceeds budget {limit}"),
            )
        }
        Err(e) => return Entry::skipped(&p.name, SkipTag::Error, e.to_string()),
    };
    let tuples = match unit_tuple_group(s, DEFAULT_TUPLE_BUDGET) {
        Ok(t) => t,
        Err(Error::BudgetExceeded { actual, limit }) => {
            return Entry::skipped(
                &p.name,
                SkipTag::Budget,
                format!("tuple search space {actual} exceeds budget {limit}"),
            )
        }
        Err(e) => {
            // the construction itself failed: that is a refuted claim, not a skip
            return Entry::fail(&p.name, json!({ "law": "tuple construction", "error": e.to_string() }));
        }
    };

    // The two routes must produce the same family of permissible sets.
    let mut tuple_ideals: Vec<Vec<ElemId>> = tuples
        .tuples
        .iter()
        .map(|t| tuple_ideal(s, t))
        .collect();
    tuple_ideals.sort();
    if tuple_ideals != brute {
        return Entry::fail(
            &p.name,
            json!({
                "law": "tuple ideals equal brute-force units",
                "brute_count": brute.len(),
                "tuple_count": tuple_ideals.len(),
            }),
        );
    }

    // The brute-force units must form a group under the completion product
    // (pointwise product, closed downward); building the table validates
    // the group axioms.
    let mut ordered = brute.clone();
    let identity: Vec<ElemId> = s.idempotent_ids();
    let Some(id_pos) = ordered.iter().position(|u| *u == identity) else {
        return Entry::fail(
            &p.name,
            json!({ "law": "the idempotent set is a brute-force unit" }),
        );
    };
    ordered.swap(0, id_pos);
    let index: HashMap<&[ElemId], usize> = ordered
        .iter()
        .enumerate()
        .map(|(i, u)| (u.as_slice(), i))
        .collect();
    let m = ordered.len();
    let mut table = vec![0usize; m * m];
    for (i, a) in ordered.iter().enumerate() {
        for (j, b) in ordered.iter().enumerate() {
            let prod = down_closure(s, &pointwise_product(s, a, b));
            let Some(&k) = index.get(prod.as_slice()) else {
                return Entry::fail(
                    &p.name,
                    json!({ "law": "completion product of units is a unit", "i": i, "j": j }),
                );
            };
            table[i * m + j] = k;
        }
    }
    let brute_group = match FiniteGroup::from_table("brute-units".to_string(), m, table) {
        Ok(bg) => bg,
        Err(e) => {
            return Entry::fail(
                &p.name,
                json!({ "law": "brute-force units form a group", "error": e.to_string() }),
            )
        }
    };

    // The ideal map is an isomorphism from the tuple group onto the
    // brute-force group: bijective (checked above) and multiplicative.
    for (i, a) in tuples.tuples.iter().enumerate() {
        for b in tuples.tuples.iter() {
            let lhs = tuple_ideal(s, &tuple_product(s, a, b));
            let rhs = down_closure(s, &pointwise_product(s, &tuple_ideal(s, a), &tuple_ideal(s, b)));
            if lhs != rhs {
                return Entry::fail(
                    &p.name,
                    json!({ "law": "ideal map intertwines the products", "tuple": i }),
                );
            }
        }
    }
    if brute_group.order_census() != tuples.group.order_census()
        || brute_group.is_abelian() != tuples.group.is_abelian()
    {
        return Entry::fail(
            &p.name,
            json!({ "law": "brute-force and tuple groups share invariants" }),
        );
    }

    // The induced permutations compose left-to-right and respect conjugacy.
    let minimals = l.minimal_subgroups();
    let taus: Vec<Vec<usize>> = match tuples
        .tuples
        .iter()
        .map(|t| tuple_permutation(s, t))
        .collect::<Option<Vec<_>>>()
    {
        Some(v) => v,
        None => {
            return Entry::fail(
                &p.name,
                json!({ "law": "every unit tuple induces a permutation" }),
            )
        }
    };
    let tuple_index: HashMap<&[ElemId], usize> = tuples
        .tuples
        .iter()
        .enumerate()
        .map(|(i, t)| (t.as_slice(), i))
        .collect();
    for (i, a) in tuples.tuples.iter().enumerate() {
        for (pos, &c) in a.iter().enumerate() {
            if l.conj_class_of(minimals[taus[i][pos]]) != l.conj_class_of(minimals[pos]) {
                return Entry::fail(
                    &p.name,
                    json!({ "law": "tuple permutation respects conjugacy", "tuple": i, "coset": s.display(c) }),
                );
            }
        }
        for (j, b) in tuples.tuples.iter().enumerate() {
            let prod = tuple_product(s, a, b);
            let Some(&k) = tuple_index.get(prod.as_slice()) else {
                return Entry::fail(
                    &p.name,
                    json!({ "law": "tuple product stays in the tuple set", "i": i, "j": j }),
                );
            };
            let composed: Vec<usize> = (0..taus[i].len()).map(|x| taus[j][taus[i][x]]).collect();
            if taus[k] != composed {
                return Entry::fail(
                    &p.name,
                    json!({ "law": "tuple permutations compose with the product", "i": i, "j": j }),
                );
            }
        }
    }

    // Right translation by any group element keeps a tuple in the set.
    let tuple_set: HashSet<&[ElemId]> = tuples.tuples.iter().map(|t| t.as_slice()).collect();
    for t in &tuples.tuples {
        for a in g.elements() {
            let translated: Vec<ElemId> = t
                .iter()
                .map(|&c| s.id_of(s.subgroup_of(c), g.mul(s.rep_of(c), a)))
                .collect();
            if !tuple_set.contains(translated.as_slice()) {
                return Entry::fail(
                    &p.name,
                    json!({ "law": "tuple set is closed under right translation", "element": a }),
                );
            }
        }
    }

    Entry::pass(&p.name)
        .ev("sigma", tuples.tuples.len())
        .ev("brute", brute.len())
        .ev("method", super::method_str(tuples.method))
}
