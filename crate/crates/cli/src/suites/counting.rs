//! The unit-count formula |Σ| = |G|·|H_r|^(J−1): the component count J and
//! the resulting order must agree across every anchor choice, match the
//! predicted component count, and decompose as anchored tuples times the
//! anchor index. Non-p-groups additionally satisfy the mixed-order edge
//! rule.

use serde_json::json;

use coset_core::{
    build_minimal_graph, minimal_pairs_permute, predicted_components, sigma_order_formula,
    unit_tuple_group, Error, DEFAULT_TUPLE_BUDGET,
};

use crate::report::{Entry, Report, SkipTag};
use crate::{Ctx, Prepared};

pub fn run(ctx: &Ctx) -> Report {
    super::per_group(ctx, "counting", check_group)
}

fn check_group(p: &Prepared) -> Entry {
    let s = &*p.k1;
    let l = &*p.lattice;
    let minimals = l.minimal_subgroups();
    if minimals.len() < 2 {
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
            return Entry::fail(&p.name, json!({ "law": "tuple construction", "error": e.to_string() }))
        }
    };
    let sigma = tuples.tuples.len() as u128;
    let predicted = predicted_components(l).expect("hypotheses were gated above");
    let non_p = l.group().p_group_prime().is_none();

    let mut common_j: Option<usize> = None;
    for &anchor in minimals {
        let gamma = build_minimal_graph(l, anchor).expect("at least two minimal subgroups");
        let j = gamma.component_count();
        let witness = |law: &str, detail: serde_json::Value| {
            Entry::fail(
                &p.name,
                json!({
                    "law": law,
                    "anchor": l.members(anchor).to_string(),
                    "components": j,
                    "detail": detail,
                }),
            )
        };
        if *common_j.get_or_insert(j) != j {
            return witness("component count is anchor-independent", json!(common_j));
        }
        if j != predicted {
            return witness("component count matches the prediction", json!(predicted));
        }
        let formula = sigma_order_formula(l, &gamma);
        if formula != sigma {
            return witness(
                "unit count matches |G|·|H_r|^(J-1)",
                json!({ "formula": formula.to_string(), "sigma": sigma.to_string() }),
            );
        }

        // anchored tuples: every coset meets the anchor subgroup; their
        // count is |H_r|^J, and translating by a transversal of H_r scales
        // it by the index
        let anchor_members = l.members(anchor);
        let anchored = tuples
            .tuples
            .iter()
            .filter(|t| {
                t.iter()
                    .all(|&c| s.coset_set(c).intersection(&anchor_members).len() > 0)
            })
            .count() as u128;
        let expected_anchored = (l.order_of(anchor) as u128).pow(j as u32);
        if anchored != expected_anchored {
            return witness(
                "anchored tuples number |H_r|^J",
                json!({ "anchored": anchored.to_string(), "expected": expected_anchored.to_string() }),
            );
        }
        if anchored * l.index_in_group(anchor) as u128 != sigma {
            return witness(
                "units decompose as anchored tuples times the anchor index",
                json!({ "anchored": anchored.to_string() }),
            );
        }

        // mixed-order edge rule for non-p-groups: a vertex whose order
        // differs from the anchor's is adjacent to every other vertex
        if non_p {
            for (i, &hi) in gamma.vertices.iter().enumerate() {
                if l.order_of(hi) == l.order_of(anchor) {
                    continue;
                }
                for jdx in 0..gamma.vertices.len() {
                    if jdx != i && !gamma.has_edge(i, jdx) {
                        return witness(
                            "mixed-order vertices are adjacent to all others",
                            json!({
                                "vertex": l.members(hi).to_string(),
                                "other": l.members(gamma.vertices[jdx]).to_string(),
                            }),
                        );
                    }
                }
            }
        }
    }

    Entry::pass(&p.name)
        .ev("sigma", tuples.tuples.len())
        .ev("J", common_j.expect("at least one anchor"))
        .ev("method", super::method_str(tuples.method))
}
