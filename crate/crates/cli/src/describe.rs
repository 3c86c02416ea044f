//! One-group structural summary for the `describe` subcommand: order data,
//! lattice landmarks (center, Frattini, minimal subgroups), the
//! minimal-subgroup graph, and the unit group of the completed coset
//! semigroup.

use serde_json::{json, Value};

use coset_core::{
    build_minimal_graph, eta_kernel_by_intersection, permutability_three_ways,
    sigma_order_formula, unit_tuple_group, Error, TupleMethod, DEFAULT_TUPLE_BUDGET,
};

use crate::Prepared;

/// Ordered key/value summary; text output keeps insertion order, JSON
/// output sorts keys (both deterministic).
pub struct Description {
    fields: Vec<(String, Value)>,
}

impl Description {
    fn push(&mut self, key: &str, value: impl Into<Value>) {
        self.fields.push((key.to_string(), value.into()));
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (k, v) in &self.fields {
            let rendered = match v {
                Value::String(s) => s.clone(),
                other => other.to_string(),
            };
            out.push_str(&format!("{k}: {rendered}\n"));
        }
        out
    }

    pub fn to_json(&self) -> String {
        let map: serde_json::Map<String, Value> = self.fields.iter().cloned().collect();
        serde_json::to_string_pretty(&Value::Object(map)).expect("description serializes")
    }
}

pub fn describe(p: &Prepared) -> Description {
    let g = &*p.group;
    let l = &*p.lattice;
    let s = &*p.k1;
    let mut d = Description { fields: Vec::new() };

    d.push("group", g.name());
    d.push("order", g.order());
    d.push("exponent", g.exponent());
    d.push("abelian", g.is_abelian());
    d.push("center_order", l.order_of(l.center_id()));
    d.push("frattini_order", l.order_of(l.frattini_id()));
    d.push("subgroup_count", l.count());
    d.push("coset_semigroup_size", s.len());
    d.push("idempotent_count", s.idempotent_ids().len());

    let minimals = l.minimal_subgroups();
    let mut min_orders: Vec<usize> = minimals.iter().map(|&h| l.order_of(h)).collect();
    min_orders.sort_unstable();
    d.push("minimal_subgroup_count", minimals.len());
    d.push("minimal_subgroup_orders", json!(min_orders));
    d.push("maximal_subgroup_count", l.maximal_subgroups().len());

    let (per_prime, omega_all) = l.omega();
    let omega_parts: Vec<Value> = per_prime
        .iter()
        .map(|&(prime, id)| json!({ "p": prime, "order": l.order_of(id) }))
        .collect();
    d.push("omega_subgroups", json!(omega_parts));
    d.push("omega_order", l.order_of(omega_all));

    let tw = permutability_three_ways(l);
    d.push(
        "minimal_pairs_permute",
        json!({
            "pairwise": tw.pairwise,
            "omega_p_elementary": tw.omega_p_elementary,
            "omega_abelian": tw.omega_abelian,
        }),
    );

    if minimals.len() < 2 {
        d.push("graph", "degenerate: fewer than two minimal subgroups");
    } else if !tw.pairwise {
        d.push("graph", "not built: minimal subgroups do not pairwise permute");
    } else {
        let anchors: Vec<Value> = minimals
            .iter()
            .map(|&anchor| {
                let gamma = build_minimal_graph(l, anchor).expect("two minimals present");
                json!({
                    "anchor_order": l.order_of(anchor),
                    "components": gamma.component_count(),
                    "edges": gamma.edge_count(),
                    "unit_group_order_formula": sigma_order_formula(l, &gamma).to_string(),
                })
            })
            .collect();
        d.push("graph_anchors", json!(anchors));
    }

    match unit_tuple_group(s, DEFAULT_TUPLE_BUDGET) {
        Ok(units) => {
            d.push("unit_group_order", units.tuples.len());
            d.push(
                "unit_group_method",
                match units.method {
                    TupleMethod::DirectSearch => "direct-search",
                    TupleMethod::Translation => "translation",
                },
            );
            d.push("unit_group_abelian", units.group.is_abelian());
            d.push("unit_group_exponent", units.group.exponent());
        }
        Err(Error::BudgetExceeded { actual, limit }) => {
            d.push(
                "unit_group",
                format!("not computed: search space {actual} exceeds budget {limit}"),
            );
        }
        Err(e) => {
            d.push("unit_group", format!("not computed: {e}"));
        }
    }

    let ker = eta_kernel_by_intersection(s);
    d.push("embedding_kernel_order", ker.len());
    d.push("embedding_injective", ker.len() == 1);

    d
}
