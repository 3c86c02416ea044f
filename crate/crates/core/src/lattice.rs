//! Complete subgroup lattice of a small finite group, with the derived
//! tables everything downstream leans on: joins, meets, conjugation,
//! canonical coset representatives, normality/abelian/cyclic flags,
//! conjugacy classes of subgroups, normalizers.
//!
//! Enumeration seeds with all cyclic subgroups and closes under
//! join-with-a-cyclic until a fixpoint; completeness is cross-checked by an
//! exhaustive oracle in the tests for small orders.

use std::collections::HashMap;
use std::sync::Arc;

use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::group::{is_prime, lcm, Elem, FiniteGroup};

pub type SubId = usize;

/// Default cap on the group order for lattice enumeration.
pub const DEFAULT_ORDER_CAP: usize = 48;

pub struct SubgroupLattice {
    group: Arc<FiniteGroup>,
    subs: Vec<ElemSet>, // sorted by (size, mask)
    index: HashMap<u128, SubId>,
    join: Vec<SubId>,     // n_subs * n_subs
    meet: Vec<SubId>,     // n_subs * n_subs
    conj: Vec<SubId>,     // n_subs * order, H^g
    coset_rep: Vec<Elem>, // n_subs * order, canonical rep of Hg
    normal: Vec<bool>,
    abelian: Vec<bool>,
    cyclic: Vec<bool>,
    normalizer: Vec<ElemSet>,
    conj_class: Vec<usize>,
    n_conj_classes: usize,
    minimal: Vec<SubId>,
    maximal: Vec<SubId>,
    minimal_pos: HashMap<SubId, usize>,
    trivial: SubId,
    full: SubId,
}

/// Closure of a subset into the subgroup it generates.
pub fn generated_subgroup(g: &FiniteGroup, gens: &ElemSet) -> ElemSet {
    let mut set = ElemSet::singleton(g.identity());
    let mut frontier: Vec<Elem> = vec![g.identity()];
    let mut pending: Vec<Elem> = gens.iter().collect();
    while let Some(x) = pending.pop() {
        if set.contains(x) {
            continue;
        }
        set.insert(x);
        frontier.push(x);
        // close under products with what we have so far
        let members: Vec<Elem> = set.iter().collect();
        for &m in &members {
            pending.push(g.mul(m, x));
            pending.push(g.mul(x, m));
        }
    }
    // finite + closed under products => closed under inverses too, but make sure
    let _ = frontier;
    debug_assert!(set.iter().all(|x| set.contains(g.inv(x))));
    set
}

impl SubgroupLattice {
    /// Enumerate all subgroups. Errors with `CapExceeded` when the order is
    /// above `cap` (or above the bitmask ceiling of 128).
    pub fn enumerate(group: Arc<FiniteGroup>, cap: usize) -> Result<Self> {
        let n = group.order();
        let limit = cap.min(ElemSet::MAX_ORDER);
        if n > limit {
            return Err(Error::CapExceeded {
                what: "group order for subgroup enumeration",
                actual: n,
                limit,
            });
        }
        let g = &*group;

        // seed: cyclic subgroups
        let mut masks: Vec<u128> = Vec::new();
        let mut seen: std::collections::HashSet<u128> = std::collections::HashSet::new();
        for x in g.elements() {
            let s = generated_subgroup(g, &ElemSet::singleton(x));
            if seen.insert(s.0) {
                masks.push(s.0);
            }
        }
        // close under join-with-an-element until fixpoint
        let mut i = 0;
        while i < masks.len() {
            let base = ElemSet(masks[i]);
            for x in g.elements() {
                if base.contains(x) {
                    continue;
                }
                let mut gens = base;
                gens.insert(x);
                let s = generated_subgroup(g, &gens);
                if seen.insert(s.0) {
                    masks.push(s.0);
                }
            }
            i += 1;
        }

        let mut subs: Vec<ElemSet> = masks.into_iter().map(ElemSet).collect();
        subs.sort_by_key(|s| (s.len(), s.0));
        let index: HashMap<u128, SubId> = subs.iter().enumerate().map(|(k, s)| (s.0, k)).collect();
        let ns = subs.len();
        let trivial = index[&ElemSet::singleton(0).0];
        let full = index[&ElemSet::full(n).0];

        // conjugation table
        let mut conj = vec![0usize; ns * n];
        for (h, s) in subs.iter().enumerate() {
            for a in g.elements() {
                let image: ElemSet = s.iter().map(|x| g.conj(x, a)).collect();
                conj[h * n + a] = *index
                    .get(&image.0)
                    .expect("conjugate of a subgroup is a subgroup");
            }
        }

        // join and meet tables
        let mut join = vec![0usize; ns * ns];
        let mut meet = vec![0usize; ns * ns];
        for a in 0..ns {
            for b in a..ns {
                let j = if subs[a].is_subset(&subs[b]) {
                    b
                } else if subs[b].is_subset(&subs[a]) {
                    a
                } else {
                    let u = subs[a].union(&subs[b]);
                    *index
                        .get(&generated_subgroup(g, &u).0)
                        .expect("join closure is a subgroup")
                };
                join[a * ns + b] = j;
                join[b * ns + a] = j;
                let m = *index
                    .get(&subs[a].intersection(&subs[b]).0)
                    .expect("intersection of subgroups is a subgroup");
                meet[a * ns + b] = m;
                meet[b * ns + a] = m;
            }
        }

        // canonical coset representatives
        let mut coset_rep = vec![0usize; ns * n];
        for (h, s) in subs.iter().enumerate() {
            for a in g.elements() {
                coset_rep[h * n + a] = s.iter().map(|x| g.mul(x, a)).min().unwrap();
            }
        }

        let normal: Vec<bool> = (0..ns)
            .map(|h| g.elements().all(|a| conj[h * n + a] == h))
            .collect();
        let abelian: Vec<bool> = subs
            .iter()
            .map(|s| {
                let v = s.to_vec();
                v.iter()
                    .all(|&x| v.iter().all(|&y| g.mul(x, y) == g.mul(y, x)))
            })
            .collect();
        let cyclic: Vec<bool> = subs
            .iter()
            .map(|s| s.iter().any(|x| g.element_order(x) == s.len()))
            .collect();
        let normalizer: Vec<ElemSet> = (0..ns)
            .map(|h| g.elements().filter(|&a| conj[h * n + a] == h).collect())
            .collect();

        // conjugacy classes of subgroups
        let mut conj_class = vec![usize::MAX; ns];
        let mut n_conj_classes = 0;
        for h in 0..ns {
            if conj_class[h] != usize::MAX {
                continue;
            }
            for a in g.elements() {
                conj_class[conj[h * n + a]] = n_conj_classes;
            }
            conj_class[h] = n_conj_classes;
            n_conj_classes += 1;
        }

        // minimal nontrivial: no proper nontrivial subgroup below
        let minimal: Vec<SubId> = (0..ns)
            .filter(|&h| {
                h != trivial
                    && (0..ns).all(|k| {
                        k == trivial || k == h || !subs[k].is_subset(&subs[h])
                    })
            })
            .collect();
        for &h in &minimal {
            debug_assert!(is_prime(subs[h].len()), "minimal subgroups have prime order");
        }
        // maximal proper: nothing strictly between them and the whole group
        let maximal: Vec<SubId> = (0..ns)
            .filter(|&h| {
                h != full
                    && (0..ns).all(|k| {
                        k == full || k == h || !subs[h].is_subset(&subs[k])
                    })
            })
            .collect();
        let minimal_pos = minimal.iter().enumerate().map(|(p, &h)| (h, p)).collect();

        Ok(SubgroupLattice {
            group,
            subs,
            index,
            join,
            meet,
            conj,
            coset_rep,
            normal,
            abelian,
            cyclic,
            normalizer,
            conj_class,
            n_conj_classes,
            minimal,
            maximal,
            minimal_pos,
            trivial,
            full,
        })
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn group_arc(&self) -> Arc<FiniteGroup> {
        Arc::clone(&self.group)
    }

    pub fn count(&self) -> usize {
        self.subs.len()
    }

    pub fn members(&self, h: SubId) -> ElemSet {
        self.subs[h]
    }

    pub fn order_of(&self, h: SubId) -> usize {
        self.subs[h].len()
    }

    pub fn index_in_group(&self, h: SubId) -> usize {
        self.group.order() / self.order_of(h)
    }

    pub fn id_of(&self, members: &ElemSet) -> Option<SubId> {
        self.index.get(&members.0).copied()
    }

    pub fn trivial_id(&self) -> SubId {
        self.trivial
    }

    pub fn full_id(&self) -> SubId {
        self.full
    }

    /// Inclusion a <= b.
    pub fn le(&self, a: SubId, b: SubId) -> bool {
        self.subs[a].is_subset(&self.subs[b])
    }

    pub fn join_id(&self, a: SubId, b: SubId) -> SubId {
        self.join[a * self.subs.len() + b]
    }

    pub fn meet_id(&self, a: SubId, b: SubId) -> SubId {
        self.meet[a * self.subs.len() + b]
    }

    /// H^g = g^-1 H g.
    pub fn conj_id(&self, h: SubId, g: Elem) -> SubId {
        self.conj[h * self.group.order() + g]
    }

    /// Smallest element of the right coset Hg.
    pub fn canonical_rep(&self, h: SubId, g: Elem) -> Elem {
        self.coset_rep[h * self.group.order() + g]
    }

    pub fn is_normal(&self, h: SubId) -> bool {
        self.normal[h]
    }

    pub fn is_abelian_sub(&self, h: SubId) -> bool {
        self.abelian[h]
    }

    pub fn is_cyclic_sub(&self, h: SubId) -> bool {
        self.cyclic[h]
    }

    pub fn normalizer_of(&self, h: SubId) -> ElemSet {
        self.normalizer[h]
    }

    pub fn conj_class_of(&self, h: SubId) -> usize {
        self.conj_class[h]
    }

    pub fn n_conj_classes(&self) -> usize {
        self.n_conj_classes
    }

    /// Minimal nontrivial subgroups, in id order.
    pub fn minimal_subgroups(&self) -> &[SubId] {
        &self.minimal
    }

    /// Position of a minimal subgroup in `minimal_subgroups()`.
    pub fn minimal_position(&self, h: SubId) -> Option<usize> {
        self.minimal_pos.get(&h).copied()
    }

    /// Maximal proper subgroups, in id order.
    pub fn maximal_subgroups(&self) -> &[SubId] {
        &self.maximal
    }

    pub fn all_ids(&self) -> impl Iterator<Item = SubId> {
        0..self.subs.len()
    }

    pub fn nontrivial_ids(&self) -> impl Iterator<Item = SubId> + '_ {
        self.all_ids().filter(move |&h| h != self.trivial)
    }

    /// Center as a lattice member, via the commutation scan. Debug builds
    /// cross-check it against the intersection of maximal abelian subgroups.
    pub fn center_id(&self) -> SubId {
        let z: ElemSet = self.group.center_elements().into_iter().collect();
        let id = self.id_of(&z).expect("center is a subgroup");
        debug_assert_eq!(id, self.maximal_abelian_intersection_id());
        id
    }

    /// Intersection of all maximal abelian subgroups (the alternate route to
    /// the center).
    pub fn maximal_abelian_intersection_id(&self) -> SubId {
        let maxab = self.maximal_abelian_ids();
        let mut acc = ElemSet::full(self.group.order());
        for h in maxab {
            acc = acc.intersection(&self.subs[h]);
        }
        self.id_of(&acc)
            .expect("intersection of subgroups is a subgroup")
    }

    /// Abelian subgroups not properly contained in another abelian subgroup.
    pub fn maximal_abelian_ids(&self) -> Vec<SubId> {
        self.all_ids()
            .filter(|&h| {
                self.abelian[h]
                    && self.all_ids().all(|k| {
                        k == h || !self.abelian[k] || !self.subs[h].is_subset(&self.subs[k])
                    })
            })
            .collect()
    }

    /// Frattini subgroup: intersection of all maximal subgroups (the whole
    /// group when there are none).
    pub fn frattini_id(&self) -> SubId {
        if self.maximal.is_empty() {
            return self.full;
        }
        let mut acc = ElemSet::full(self.group.order());
        for &h in &self.maximal {
            acc = acc.intersection(&self.subs[h]);
        }
        self.id_of(&acc)
            .expect("intersection of subgroups is a subgroup")
    }

    /// For each prime p dividing |G|, the subgroup generated by the minimal
    /// subgroups of order p; plus the subgroup generated by all of them.
    pub fn omega(&self) -> (Vec<(usize, SubId)>, SubId) {
        let mut by_prime: std::collections::BTreeMap<usize, ElemSet> =
            std::collections::BTreeMap::new();
        let mut all = ElemSet::singleton(0);
        for &h in &self.minimal {
            let p = self.subs[h].len();
            by_prime
                .entry(p)
                .or_insert_with(|| ElemSet::singleton(0))
                .0 |= self.subs[h].0;
            all.0 |= self.subs[h].0;
        }
        let per_prime: Vec<(usize, SubId)> = by_prime
            .into_iter()
            .map(|(p, gens)| {
                let s = generated_subgroup(&self.group, &gens);
                (p, self.id_of(&s).expect("omega_p is a subgroup"))
            })
            .collect();
        let omega_all = generated_subgroup(&self.group, &all);
        let omega_id = self.id_of(&omega_all).expect("omega is a subgroup");
        (per_prime, omega_id)
    }

    /// Extract a subgroup as a standalone group.
    pub fn subgroup_group(&self, h: SubId) -> FiniteGroup {
        self.group
            .subgroup_group(&self.subs[h], format!("{}|{}", self.group.name(), self.subs[h]))
            .expect("lattice members are closed")
    }

    /// Quotient by a normal subgroup.
    pub fn quotient_group(&self, h: SubId) -> Result<FiniteGroup> {
        self.group.quotient(&self.subs[h])
    }

    /// N(H)/H as an abstract group (H is always normal in its normalizer).
    pub fn normalizer_quotient(&self, h: SubId) -> Result<FiniteGroup> {
        let nz = self.normalizer[h];
        let ng = self
            .group
            .subgroup_group(&nz, format!("N({})", self.subs[h]))?;
        // relabel H's members into the normalizer's numbering
        let sorted: Vec<Elem> = nz.to_vec();
        let h_inside: ElemSet = self.subs[h]
            .iter()
            .map(|x| sorted.iter().position(|&m| m == x).unwrap())
            .collect();
        ng.quotient(&h_inside)
    }

    /// Whether some normal cyclic subgroup has a cyclic quotient.
    pub fn is_metacyclic(&self) -> bool {
        self.all_ids().any(|h| {
            self.normal[h] && self.cyclic[h] && {
                let q = self.quotient_group(h).expect("normal flagged subgroup");
                q.elements().any(|x| q.element_order(x) == q.order())
            }
        })
    }

    /// lcm of the indices of the minimal subgroups.
    pub fn lcm_of_minimal_indices(&self) -> usize {
        self.minimal
            .iter()
            .map(|&h| self.index_in_group(h))
            .fold(1, lcm)
    }
}

impl std::fmt::Debug for SubgroupLattice {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "SubgroupLattice({}, {} subgroups)",
            self.group.name(),
            self.subs.len()
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dsl::build_group;

    fn lattice(expr: &str) -> SubgroupLattice {
        SubgroupLattice::enumerate(Arc::new(build_group(expr).unwrap()), DEFAULT_ORDER_CAP)
            .unwrap()
    }

    #[test]
    fn counts_for_known_groups() {
        assert_eq!(lattice("C6").count(), 4);
        assert_eq!(lattice("S3").count(), 6);
        assert_eq!(lattice("Q8").count(), 6);
        assert_eq!(lattice("D8").count(), 10);
        assert_eq!(lattice("C2xC2").count(), 5);
        assert_eq!(lattice("A4").count(), 10);
        assert_eq!(lattice("C12").count(), 6);
    }

    #[test]
    fn q8_has_unique_minimal_subgroup() {
        let l = lattice("Q8");
        assert_eq!(l.minimal_subgroups().len(), 1);
        let m = l.minimal_subgroups()[0];
        assert_eq!(l.order_of(m), 2);
        assert!(l.is_normal(m));
    }

    #[test]
    fn lagrange_and_flags() {
        for expr in ["C6", "S3", "D8", "Q8", "A4", "C3xC3"] {
            let l = lattice(expr);
            let n = l.group().order();
            for h in l.all_ids() {
                assert_eq!(n % l.order_of(h), 0, "Lagrange in {expr}");
                let members = l.members(h);
                assert!(members.contains(0));
            }
        }
    }

    #[test]
    fn conjugate_of_transposition_subgroup() {
        // <(12)>^(123) = <(23)> in S3 (left-to-right composition)
        let l = lattice("S3");
        let h = l.id_of(&[0usize, 2].into_iter().collect()).unwrap();
        let image = l.conj_id(h, 3);
        assert_eq!(l.members(image).to_vec(), vec![0, 1]);
    }

    #[test]
    fn generated_subgroup_examples() {
        let c6 = build_group("C6").unwrap();
        let s = generated_subgroup(&c6, &ElemSet::singleton(2));
        assert_eq!(s.to_vec(), vec![0, 2, 4]);

        let s3 = build_group("S3").unwrap();
        let gens: ElemSet = [2usize, 5].into_iter().collect(); // (12), (13)
        assert_eq!(generated_subgroup(&s3, &gens).len(), 6);
    }

    #[test]
    fn center_and_frattini() {
        let l = lattice("Q8");
        let z = l.center_id();
        assert_eq!(l.order_of(z), 2);
        assert_eq!(l.maximal_abelian_intersection_id(), z);

        let l = lattice("S3");
        assert_eq!(l.order_of(l.center_id()), 1);

        let c4 = lattice("C4");
        assert_eq!(c4.members(c4.frattini_id()).to_vec(), vec![0, 2]);
        let v = lattice("C2xC2");
        assert_eq!(v.order_of(v.frattini_id()), 1);
    }

    #[test]
    fn omega_examples() {
        let l = lattice("C6");
        let (per_prime, omega) = l.omega();
        assert_eq!(per_prime.len(), 2);
        assert_eq!(l.order_of(per_prime[0].1), 2); // p=2
        assert_eq!(l.order_of(per_prime[1].1), 3); // p=3
        assert_eq!(l.order_of(omega), 6);

        let q8 = lattice("Q8");
        let (_, omega) = q8.omega();
        assert_eq!(q8.order_of(omega), 2);

        let v = lattice("C2xC2");
        let (_, omega) = v.omega();
        assert_eq!(v.order_of(omega), 4);
    }

    #[test]
    fn metacyclic_flags() {
        for expr in ["C16", "C8xC2", "C4xC4", "Q16", "D16", "C6", "S3", "D8", "Q8"] {
            assert!(lattice(expr).is_metacyclic(), "{expr} is metacyclic");
        }
        for expr in ["E(2,3)", "Q8xC2", "A4"] {
            assert!(!lattice(expr).is_metacyclic(), "{expr} is not metacyclic");
        }
    }

    #[test]
    fn cap_is_enforced() {
        let g = Arc::new(build_group("C2").unwrap());
        assert!(matches!(
            SubgroupLattice::enumerate(g, 1),
            Err(Error::CapExceeded { .. })
        ));
    }
}
