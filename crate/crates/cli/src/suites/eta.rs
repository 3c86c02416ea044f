//! The canonical map a ↦ {Ka : K nontrivial} into the completion: its image
//! consists of units, it is a homomorphism for the completion product, its
//! kernel is the intersection of all nontrivial subgroups (computed two
//! ways), and on groups satisfying the structure hypotheses it is an
//! isomorphism onto the unit group exactly when the graph is connected.

use std::collections::HashSet;

use serde_json::json;

use coset_core::completion::{down_closure, is_unit, pointwise_product};
use coset_core::{
    build_minimal_graph, eta, eta_kernel_by_fibre, eta_kernel_by_intersection,
    minimal_pairs_permute, unit_tuple_group, Error, DEFAULT_TUPLE_BUDGET,
};

use crate::report::{Entry, Report};
use crate::{Ctx, Prepared};

pub fn run(ctx: &Ctx) -> Report {
    super::per_group(ctx, "eta", check_group)
}

fn check_group(p: &Prepared) -> Entry {
    let s = &*p.k1;
    let l = &*p.lattice;
    let g = s.group();

    let ker_intersection = eta_kernel_by_intersection(s);
    let ker_fibre = eta_kernel_by_fibre(s);
    if ker_intersection != ker_fibre {
        return Entry::fail(
            &p.name,
            json!({
                "law": "kernel by intersection equals kernel by fibre",
                "intersection": ker_intersection.to_string(),
                "fibre": ker_fibre.to_string(),
            }),
        );
    }

    let images: Vec<Vec<_>> = g.elements().map(|a| eta(s, a)).collect();
    for (a, image) in images.iter().enumerate() {
        if !is_unit(s, image) {
            return Entry::fail(&p.name, json!({ "law": "every image is a unit", "element": a }));
        }
    }
    for a in g.elements() {
        for b in g.elements() {
            let lhs = &images[g.mul(a, b)];
            let rhs = down_closure(s, &pointwise_product(s, &images[a], &images[b]));
            if *lhs != rhs {
                return Entry::fail(
                    &p.name,
                    json!({ "law": "homomorphism for the completion product", "elements": [a, b] }),
                );
            }
        }
    }

    // fibres all have kernel size, so the image count is the index
    let distinct: HashSet<&[_]> = images.iter().map(|v| v.as_slice()).collect();
    if distinct.len() * ker_intersection.len() != g.order() {
        return Entry::fail(
            &p.name,
            json!({
                "law": "image size is the kernel index",
                "images": distinct.len(),
                "kernel": ker_intersection.len(),
            }),
        );
    }

    let mut entry = Entry::pass(&p.name).ev("kernel", ker_intersection.len());

    // permutable groups with several minimal subgroups: the map is an
    // isomorphism onto the units exactly when the minimal-subgroup graph
    // is connected (both truth values occur in the catalog)
    let minimals = l.minimal_subgroups();
    let hypothesis = minimals.len() >= 2 && minimal_pairs_permute(l);
    if hypothesis {
        match unit_tuple_group(s, DEFAULT_TUPLE_BUDGET) {
            Ok(tuples) => {
                let gamma =
                    build_minimal_graph(l, minimals[0]).expect("two minimal subgroups present");
                let connected = gamma.component_count() == 1;
                let bijective =
                    ker_intersection.len() == 1 && tuples.tuples.len() == g.order();
                if bijective != connected {
                    return Entry::fail(
                        &p.name,
                        json!({
                            "law": "the map is an isomorphism onto the units iff the graph is connected",
                            "components": gamma.component_count(),
                            "kernel": ker_intersection.len(),
                            "sigma": tuples.tuples.len(),
                            "order": g.order(),
                        }),
                    );
                }
                entry = entry
                    .ev("sigma", tuples.tuples.len())
                    .ev("connected", connected);
            }
            Err(Error::BudgetExceeded { .. }) => {
                entry = entry.ev("surjectivity", "not checked (budget)");
            }
            Err(e) => {
                return Entry::fail(
                    &p.name,
                    json!({ "law": "tuple construction", "error": e.to_string() }),
                )
            }
        }
    }
    entry
}
