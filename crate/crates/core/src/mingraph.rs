//! Permutability of minimal subgroups and the minimal-subgroup graph.
//!
//! For a fixed minimal subgroup `H_r` the graph has the other minimal
//! subgroups as vertices and an edge between `H_i` and `H_j` exactly when
//! the literal element-set product `H_i H_j` meets `H_r` trivially. The
//! number of connected components feeds the unit-count formula
//! `|Sigma| = |G| * |H_r|^(J-1)`.

use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::group::{is_prime, FiniteGroup};
use crate::lattice::{SubgroupLattice, SubId};
use crate::semigroup::CosetSemigroup;

/// Literal element-set product {ab : a in A, b in B} — not the join.
pub fn set_product(g: &FiniteGroup, a: &ElemSet, b: &ElemSet) -> ElemSet {
    let mut out = ElemSet::EMPTY;
    for x in a.iter() {
        for y in b.iter() {
            out.insert(g.mul(x, y));
        }
    }
    out
}

/// Whether every pair of distinct minimal subgroups permutes (HK = KH as
/// element sets).
pub fn minimal_pairs_permute(l: &SubgroupLattice) -> bool {
    let g = l.group();
    let minimals = l.minimal_subgroups();
    minimals.iter().enumerate().all(|(i, &h)| {
        minimals[i + 1..].iter().all(|&k| {
            set_product(g, &l.members(h), &l.members(k))
                == set_product(g, &l.members(k), &l.members(h))
        })
    })
}

/// The three equivalent permutability conditions, computed independently.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ThreeWayPermutability {
    /// Every pair of distinct minimal subgroups permutes.
    pub pairwise: bool,
    /// Every Omega_p is trivial or elementary abelian.
    pub omega_p_elementary: bool,
    /// Omega(G) is abelian.
    pub omega_abelian: bool,
}

impl ThreeWayPermutability {
    pub fn agree(&self) -> bool {
        self.pairwise == self.omega_p_elementary && self.pairwise == self.omega_abelian
    }
}

pub fn permutability_three_ways(l: &SubgroupLattice) -> ThreeWayPermutability {
    let g = l.group();
    let (per_prime, omega_all) = l.omega();
    let omega_p_elementary = per_prime.iter().all(|&(p, id)| {
        let members = l.members(id);
        members.len() == 1
            || (l.is_abelian_sub(id)
                && members.iter().all(|x| x == 0 || g.element_order(x) == p))
    });
    ThreeWayPermutability {
        pairwise: minimal_pairs_permute(l),
        omega_p_elementary,
        omega_abelian: l.is_abelian_sub(omega_all),
    }
}

/// Everything the permutability criterion talks about, for one unordered
/// pair of distinct minimal subgroups.
#[derive(Clone, Debug)]
pub struct MinimalPairCheck {
    pub h: SubId,
    pub k: SubId,
    /// The element-set products in both orders.
    pub product_hk: ElemSet,
    pub product_kh: ElemSet,
    /// HK = KH.
    pub permute: bool,
    pub join: SubId,
    /// |R_H| inside the filter of the idempotent H*K, by direct scan.
    pub filter_r_count: usize,
    /// |K| (prime, since K is minimal).
    pub other_order: usize,
}

impl MinimalPairCheck {
    /// The sound reading of the criterion: HK = KH iff the filter R-class
    /// of H has exactly |K| elements.
    pub fn criterion_holds(&self) -> bool {
        self.permute == (self.filter_r_count == self.other_order)
    }

    /// Permuting pairs always produce a prime count.
    pub fn prime_when_permuting(&self) -> bool {
        !self.permute || is_prime(self.filter_r_count)
    }

    /// The literal converse "prime implies permute" — false in general
    /// (e.g. two distinct order-2 subgroups of S3); reported as evidence.
    pub fn literal_converse_holds(&self) -> bool {
        !is_prime(self.filter_r_count) || self.permute
    }
}

/// Per-pair permutability data over all distinct minimal pairs.
pub fn minimal_pair_checks(s: &CosetSemigroup) -> Vec<MinimalPairCheck> {
    let l = s.lattice();
    let g = s.group();
    let minimals = l.minimal_subgroups();
    let mut out = Vec::new();
    for (i, &h) in minimals.iter().enumerate() {
        for &k in &minimals[i + 1..] {
            let join = l.join_id(h, k);
            let e_join = s.product(s.idempotent_id(h), s.idempotent_id(k));
            debug_assert_eq!(s.subgroup_of(e_join), join);
            let filter_r_count = s
                .order_filter(e_join)
                .into_iter()
                .filter(|&y| s.subgroup_of(y) == h)
                .count();
            let product_hk = set_product(g, &l.members(h), &l.members(k));
            let product_kh = set_product(g, &l.members(k), &l.members(h));
            out.push(MinimalPairCheck {
                h,
                k,
                permute: product_hk == product_kh,
                product_hk,
                product_kh,
                join,
                filter_r_count,
                other_order: l.order_of(k),
            });
        }
    }
    out
}

/// The graph on the minimal subgroups other than the anchor.
pub struct MinimalGraph {
    pub anchor: SubId,
    /// Vertices in lattice-id order.
    pub vertices: Vec<SubId>,
    adj: Vec<bool>, // |V| x |V|
    /// Partition of vertex indices; components and their members sorted.
    pub components: Vec<Vec<usize>>,
}

impl MinimalGraph {
    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.adj[i * self.vertices.len() + j]
    }

    pub fn component_count(&self) -> usize {
        self.components.len()
    }

    pub fn edge_count(&self) -> usize {
        let v = self.vertices.len();
        (0..v)
            .map(|i| (i + 1..v).filter(|&j| self.has_edge(i, j)).count())
            .sum()
    }
}

/// Build the minimal-subgroup graph for an anchor. Errors `Degenerate`
/// when the group has fewer than two minimal subgroups.
pub fn build_minimal_graph(l: &SubgroupLattice, anchor: SubId) -> Result<MinimalGraph> {
    let minimals = l.minimal_subgroups();
    if !minimals.contains(&anchor) {
        return Err(Error::Degenerate("graph anchor must be a minimal subgroup"));
    }
    if minimals.len() < 2 {
        return Err(Error::Degenerate(
            "minimal-subgroup graph needs at least two minimal subgroups",
        ));
    }
    let g = l.group();
    let anchor_members = l.members(anchor);
    let vertices: Vec<SubId> = minimals.iter().copied().filter(|&h| h != anchor).collect();
    let v = vertices.len();
    let mut adj = vec![false; v * v];
    for i in 0..v {
        for j in i + 1..v {
            let prod = set_product(g, &l.members(vertices[i]), &l.members(vertices[j]));
            let edge = prod.intersection(&anchor_members).len() == 1;
            adj[i * v + j] = edge;
            adj[j * v + i] = edge;
        }
    }

    // connected components via union-find
    let mut parent: Vec<usize> = (0..v).collect();
    fn find(parent: &mut Vec<usize>, mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for i in 0..v {
        for j in i + 1..v {
            if adj[i * v + j] {
                let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                if ri != rj {
                    parent[ri.max(rj)] = ri.min(rj);
                }
            }
        }
    }
    let mut buckets: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for i in 0..v {
        let r = find(&mut parent, i);
        buckets.entry(r).or_default().push(i);
    }
    let components: Vec<Vec<usize>> = buckets.into_values().collect();

    Ok(MinimalGraph {
        anchor,
        vertices,
        adj,
        components,
    })
}

/// Theorem-predicted component count, when the hypotheses hold
/// (pairwise-permuting minimal subgroups, at least two of them):
/// 1 for non-p-groups; for p-groups, the full vertex count when
/// |Omega(G)| = p^2 (edgeless graph) and 1 when |Omega(G)| > p^2.
pub fn predicted_components(l: &SubgroupLattice) -> Option<usize> {
    let minimals = l.minimal_subgroups();
    if minimals.len() < 2 || !minimal_pairs_permute(l) {
        return None;
    }
    match l.group().p_group_prime() {
        None => Some(1),
        Some(p) => {
            let (_, omega) = l.omega();
            if l.order_of(omega) == p * p {
                Some(minimals.len() - 1)
            } else {
                Some(1)
            }
        }
    }
}

/// |G| * |H_r|^(J-1) — the unit-group order predicted from a graph.
pub fn sigma_order_formula(l: &SubgroupLattice, gamma: &MinimalGraph) -> u128 {
    let j = gamma.component_count() as u32;
    debug_assert!(j >= 1);
    l.group().order() as u128 * (l.order_of(gamma.anchor) as u128).pow(j - 1)
}

/// DOT rendering for debugging; vertex labels are the subgroup member sets.
pub fn to_dot(l: &SubgroupLattice, gamma: &MinimalGraph) -> String {
    use std::fmt::Write as _;
    let mut s = String::from("graph minimal {\n");
    let _ = writeln!(s, "  // anchor: {}", l.members(gamma.anchor));
    for (i, &vtx) in gamma.vertices.iter().enumerate() {
        let _ = writeln!(s, "  v{i} [label=\"{}\"];", l.members(vtx));
    }
    for i in 0..gamma.vertices.len() {
        for j in i + 1..gamma.vertices.len() {
            if gamma.has_edge(i, j) {
                let _ = writeln!(s, "  v{i} -- v{j};");
            }
        }
    }
    s.push_str("}\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dsl::build_group;
    use crate::lattice::DEFAULT_ORDER_CAP;
    use crate::semigroup::Variant;
    use std::sync::Arc;

    fn lattice(expr: &str) -> SubgroupLattice {
        SubgroupLattice::enumerate(Arc::new(build_group(expr).unwrap()), DEFAULT_ORDER_CAP)
            .unwrap()
    }

    fn k1(expr: &str) -> CosetSemigroup {
        let l = Arc::new(lattice(expr));
        CosetSemigroup::new(l, Variant::Nontrivial).unwrap()
    }

    #[test]
    fn permutability_three_ways_examples() {
        for expr in ["C6", "C12", "C2xC2", "C3xC3", "E(2,3)", "Q8", "C4xC4"] {
            let t = permutability_three_ways(&lattice(expr));
            assert!(t.agree(), "{expr}");
            assert!(t.pairwise, "{expr}");
        }
        for expr in ["S3", "S4", "A4", "D8", "D12"] {
            let t = permutability_three_ways(&lattice(expr));
            assert!(t.agree(), "{expr}");
            assert!(!t.pairwise, "{expr}");
        }
    }

    #[test]
    fn s3_pair_is_the_literal_converse_counterexample() {
        let s = k1("S3");
        let checks = minimal_pair_checks(&s);
        // some pair of order-2 subgroups: count 3 (prime) yet not permuting
        let bad = checks
            .iter()
            .find(|c| !c.permute && c.filter_r_count == 3)
            .expect("S3 has non-permuting transposition pairs");
        assert!(bad.criterion_holds());
        assert!(bad.prime_when_permuting());
        assert!(!bad.literal_converse_holds());
        // and the mixed pair (C2, C3) permutes with count |K| prime
        let good = checks.iter().find(|c| c.permute).expect("C2C3 permutes");
        assert_eq!(good.filter_r_count, good.other_order);
    }

    #[test]
    fn pair_checks_hold_on_many_groups() {
        for expr in ["C6", "C12", "C2xC2", "C3xC3", "D8", "A4", "S4", "Q8xC3"] {
            let s = k1(expr);
            for c in minimal_pair_checks(&s) {
                assert!(c.criterion_holds(), "{expr}");
                assert!(c.prime_when_permuting(), "{expr}");
                // the filter count is always the join index
                let l = s.lattice();
                assert_eq!(
                    c.filter_r_count,
                    l.order_of(c.join) / l.order_of(c.h),
                    "{expr}"
                );
            }
        }
    }

    #[test]
    fn klein_graph_is_edgeless_with_two_components() {
        let l = lattice("C2xC2");
        for &anchor in l.minimal_subgroups() {
            let g = build_minimal_graph(&l, anchor).unwrap();
            assert_eq!(g.vertices.len(), 2);
            assert_eq!(g.edge_count(), 0);
            assert_eq!(g.component_count(), 2);
            assert_eq!(predicted_components(&l), Some(2));
            assert_eq!(sigma_order_formula(&l, &g), 8);
        }
    }

    #[test]
    fn c3xc3_graph() {
        let l = lattice("C3xC3");
        let anchor = l.minimal_subgroups()[0];
        let g = build_minimal_graph(&l, anchor).unwrap();
        assert_eq!(g.vertices.len(), 3);
        assert_eq!(g.edge_count(), 0);
        assert_eq!(g.component_count(), 3);
        assert_eq!(predicted_components(&l), Some(3));
        assert_eq!(sigma_order_formula(&l, &g), 81);
    }

    #[test]
    fn rank_three_elementary_abelian_is_connected() {
        let l = lattice("E(2,3)");
        assert_eq!(l.minimal_subgroups().len(), 7);
        for &anchor in l.minimal_subgroups() {
            let g = build_minimal_graph(&l, anchor).unwrap();
            assert_eq!(g.component_count(), 1, "anchor {anchor}");
            assert_eq!(sigma_order_formula(&l, &g), 8);
        }
        assert_eq!(predicted_components(&l), Some(1));
    }

    #[test]
    fn non_p_groups_are_connected() {
        for expr in ["C6", "C12", "C6xC2", "C15", "C2xC3xC4"] {
            let l = lattice(expr);
            for &anchor in l.minimal_subgroups() {
                let g = build_minimal_graph(&l, anchor).unwrap();
                assert_eq!(g.component_count(), 1, "{expr}");
                assert_eq!(
                    sigma_order_formula(&l, &g),
                    l.group().order() as u128,
                    "{expr}"
                );
            }
            assert_eq!(predicted_components(&l), Some(1), "{expr}");
        }
    }

    #[test]
    fn degenerate_and_hypothesis_cases() {
        let q8 = lattice("Q8");
        assert_eq!(q8.minimal_subgroups().len(), 1);
        assert!(matches!(
            build_minimal_graph(&q8, q8.minimal_subgroups()[0]),
            Err(Error::Degenerate(_))
        ));
        assert_eq!(predicted_components(&q8), None);
        // non-permutable: graph is definable, prediction is not
        let s3 = lattice("S3");
        assert!(build_minimal_graph(&s3, s3.minimal_subgroups()[0]).is_ok());
        assert_eq!(predicted_components(&s3), None);
        // non-minimal anchor is refused
        let c6 = lattice("C6");
        assert!(matches!(
            build_minimal_graph(&c6, c6.full_id()),
            Err(Error::Degenerate(_))
        ));
    }

    #[test]
    fn dot_output_mentions_all_vertices() {
        let l = lattice("C2xC2");
        let g = build_minimal_graph(&l, l.minimal_subgroups()[0]).unwrap();
        let dot = to_dot(&l, &g);
        assert!(dot.starts_with("graph minimal {"));
        assert_eq!(dot.matches("label=").count(), 2);
        assert!(!dot.contains("--"), "Klein graph has no edges");
    }

    #[test]
    fn one_dimensional_subspace_counts() {
        // (p^m - 1)/(p - 1) minimal subgroups in elementary abelian groups
        assert_eq!(lattice("E(2,3)").minimal_subgroups().len(), 7);
        assert_eq!(lattice("E(2,4)").minimal_subgroups().len(), 15);
        assert_eq!(lattice("E(3,2)").minimal_subgroups().len(), 4);
        assert_eq!(lattice("C2xC2").minimal_subgroups().len(), 3);
    }
}
