//! The coset semigroup of a finite group: elements are right cosets `Ha`
//! (over all subgroups, or over nontrivial subgroups only), multiplied by
//! `Ha * Kb = <H, K^(a^-1)> ab` where `X^g = g^-1 X g`. This is an inverse monoid / inverse semigroup;
//! everything here is computed from the subgroup-lattice tables and
//! cross-checked definitionally in the test suites.

use std::sync::Arc;

use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::group::{Elem, FiniteGroup};
use crate::lattice::{SubgroupLattice, SubId};

pub type ElemId = usize;

/// Which cosets are included.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Variant {
    /// Cosets of every subgroup, including the trivial one (a monoid).
    Full,
    /// Cosets of the nontrivial subgroups only.
    Nontrivial,
}

/// A right coset, canonically represented: `rep` is the smallest element of
/// the coset, so equal cosets have equal `Coset` values.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Coset {
    pub sub: SubId,
    pub rep: Elem,
}

pub struct CosetSemigroup {
    lattice: Arc<SubgroupLattice>,
    variant: Variant,
    elements: Vec<Coset>,
    // (sub, rep) -> ElemId, flat-indexed; usize::MAX = absent
    lookup: Vec<usize>,
}

impl CosetSemigroup {
    pub fn new(lattice: Arc<SubgroupLattice>, variant: Variant) -> Result<Self> {
        let n = lattice.group().order();
        let mut elements: Vec<Coset> = Vec::new();
        for sub in lattice.all_ids() {
            if variant == Variant::Nontrivial && sub == lattice.trivial_id() {
                continue;
            }
            let mut reps: Vec<Elem> = (0..n).map(|a| lattice.canonical_rep(sub, a)).collect();
            reps.sort_unstable();
            reps.dedup();
            debug_assert_eq!(reps.len(), lattice.index_in_group(sub));
            for rep in reps {
                elements.push(Coset { sub, rep });
            }
        }
        if elements.is_empty() {
            return Err(Error::Degenerate("group has no nontrivial subgroups"));
        }
        elements.sort_unstable();
        let mut lookup = vec![usize::MAX; lattice.count() * n];
        for (i, c) in elements.iter().enumerate() {
            lookup[c.sub * n + c.rep] = i;
        }
        Ok(CosetSemigroup {
            lattice,
            variant,
            elements,
            lookup,
        })
    }

    pub fn lattice(&self) -> &SubgroupLattice {
        &self.lattice
    }

    pub fn lattice_arc(&self) -> Arc<SubgroupLattice> {
        Arc::clone(&self.lattice)
    }

    pub fn group(&self) -> &FiniteGroup {
        self.lattice.group()
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// A single-element semigroup carries no structure to test.
    pub fn is_degenerate(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn ids(&self) -> impl Iterator<Item = ElemId> {
        0..self.elements.len()
    }

    pub fn coset(&self, x: ElemId) -> Coset {
        self.elements[x]
    }

    pub fn subgroup_of(&self, x: ElemId) -> SubId {
        self.elements[x].sub
    }

    pub fn rep_of(&self, x: ElemId) -> Elem {
        self.elements[x].rep
    }

    /// Id of the coset `H a` (canonicalizing `a`).
    pub fn id_of(&self, sub: SubId, a: Elem) -> ElemId {
        let rep = self.lattice.canonical_rep(sub, a);
        let id = self.lookup[sub * self.group().order() + rep];
        debug_assert_ne!(id, usize::MAX);
        id
    }

    pub fn try_id_of(&self, sub: SubId, a: Elem) -> Option<ElemId> {
        let rep = self.lattice.canonical_rep(sub, a);
        match self.lookup[sub * self.group().order() + rep] {
            usize::MAX => None,
            id => Some(id),
        }
    }

    /// The underlying element set {ha : h in H}.
    pub fn coset_set(&self, x: ElemId) -> ElemSet {
        let Coset { sub, rep } = self.elements[x];
        let g = self.group();
        self.lattice.members(sub).iter().map(|h| g.mul(h, rep)).collect()
    }

    /// Ha * Kb = <H, K^(a^-1)> ab.
    pub fn product(&self, x: ElemId, y: ElemId) -> ElemId {
        let Coset { sub: h, rep: a } = self.elements[x];
        let Coset { sub: k, rep: b } = self.elements[y];
        let g = self.group();
        let k_conj = self.lattice.conj_id(k, g.inv(a));
        let join = self.lattice.join_id(h, k_conj);
        self.id_of(join, g.mul(a, b))
    }

    /// (Ha)^-1 = a^-1 H = H^a a^-1.
    pub fn inverse(&self, x: ElemId) -> ElemId {
        let Coset { sub: h, rep: a } = self.elements[x];
        let g = self.group();
        let h_conj = self.lattice.conj_id(h, a);
        self.id_of(h_conj, g.inv(a))
    }

    /// Idempotents are exactly the subgroups themselves (canonical rep 1).
    pub fn is_idempotent(&self, x: ElemId) -> bool {
        self.elements[x].rep == 0
    }

    pub fn idempotent_id(&self, sub: SubId) -> ElemId {
        self.id_of(sub, 0)
    }

    pub fn idempotent_ids(&self) -> Vec<ElemId> {
        self.ids().filter(|&x| self.is_idempotent(x)).collect()
    }

    /// The zero of the nontrivial-variant semigroup: the coset G itself.
    pub fn zero_id(&self) -> ElemId {
        self.id_of(self.lattice.full_id(), 0)
    }

    /// Identity of the full-variant monoid: the trivial coset {1}.
    pub fn identity_id(&self) -> Option<ElemId> {
        match self.variant {
            Variant::Full => Some(self.id_of(self.lattice.trivial_id(), 0)),
            Variant::Nontrivial => None,
        }
    }

    // ---- Green's relations -------------------------------------------------

    /// x R y  <=>  x x^-1 = y y^-1  <=>  same subgroup.
    pub fn r_key(&self, x: ElemId) -> SubId {
        self.elements[x].sub
    }

    /// x L y  <=>  x^-1 x = y^-1 y  <=>  H^a = K^b.
    pub fn l_key(&self, x: ElemId) -> SubId {
        let Coset { sub, rep } = self.elements[x];
        self.lattice.conj_id(sub, rep)
    }

    pub fn r_related(&self, x: ElemId, y: ElemId) -> bool {
        self.r_key(x) == self.r_key(y)
    }

    pub fn l_related(&self, x: ElemId, y: ElemId) -> bool {
        self.l_key(x) == self.l_key(y)
    }

    pub fn h_related(&self, x: ElemId, y: ElemId) -> bool {
        self.r_related(x, y) && self.l_related(x, y)
    }

    /// x D y  <=>  subgroups are conjugate.
    pub fn d_related(&self, x: ElemId, y: ElemId) -> bool {
        self.lattice.conj_class_of(self.r_key(x)) == self.lattice.conj_class_of(self.r_key(y))
    }

    /// x <=_J y  <=>  some conjugate of K lies inside H (x = Ha, y = Kb).
    pub fn j_leq(&self, x: ElemId, y: ElemId) -> bool {
        let h = self.r_key(x);
        let k = self.r_key(y);
        self.group()
            .elements()
            .any(|g| self.lattice.le(self.lattice.conj_id(k, g), h))
    }

    /// R-class of the idempotent of `sub`: all cosets of that subgroup.
    pub fn r_class_of_subgroup(&self, sub: SubId) -> Vec<ElemId> {
        self.ids().filter(|&x| self.r_key(x) == sub).collect()
    }

    /// L-class of the idempotent of `sub`.
    pub fn l_class_of_subgroup(&self, sub: SubId) -> Vec<ElemId> {
        self.ids().filter(|&x| self.l_key(x) == sub).collect()
    }

    /// H-class of the idempotent of `sub`: {Ha : a normalizes H}.
    pub fn h_class_of_subgroup(&self, sub: SubId) -> Vec<ElemId> {
        self.ids()
            .filter(|&x| self.r_key(x) == sub && self.l_key(x) == sub)
            .collect()
    }

    /// The H-class of an idempotent as an abstract group (identity first).
    pub fn h_class_group(&self, sub: SubId) -> Result<FiniteGroup> {
        let class = self.h_class_of_subgroup(sub);
        debug_assert_eq!(class[0], self.idempotent_id(sub));
        let pos = |id: ElemId| class.iter().position(|&c| c == id).unwrap();
        let m = class.len();
        let mut table = vec![0usize; m * m];
        for (i, &x) in class.iter().enumerate() {
            for (j, &y) in class.iter().enumerate() {
                table[i * m + j] = pos(self.product(x, y));
            }
        }
        FiniteGroup::from_table(
            format!("Hclass({}in{})", self.lattice.members(sub), self.group().name()),
            m,
            table,
        )
    }

    // ---- natural partial order --------------------------------------------

    /// x <= y in the natural partial order  <=>  x contains y as a set
    /// (for x = Ha, y = Kb: K <= H and b in Ha).
    pub fn natural_leq(&self, x: ElemId, y: ElemId) -> bool {
        let Coset { sub: h, rep: a } = self.elements[x];
        let Coset { sub: k, rep: b } = self.elements[y];
        let g = self.group();
        self.lattice.le(k, h) && self.lattice.members(h).contains(g.mul(b, g.inv(a)))
    }

    /// The order filter x^ = {y : x <= y} — equivalently the cosets that are
    /// subsets of x.
    pub fn order_filter(&self, x: ElemId) -> Vec<ElemId> {
        self.ids().filter(|&y| self.natural_leq(x, y)).collect()
    }

    // ---- compatibility -----------------------------------------------------

    /// Formula route: Ha ~ Kb  <=>  ab^-1 in <H, K^(ba^-1)> and ab^-1 in <H, K>.
    pub fn compatible_formula(&self, x: ElemId, y: ElemId) -> bool {
        let Coset { sub: h, rep: a } = self.elements[x];
        let Coset { sub: k, rep: b } = self.elements[y];
        let g = self.group();
        let t = g.mul(a, g.inv(b));
        let twisted = self.lattice.conj_id(k, g.mul(b, g.inv(a)));
        self.lattice.members(self.lattice.join_id(h, twisted)).contains(t)
            && self.lattice.members(self.lattice.join_id(h, k)).contains(t)
    }

    /// Definitional route: both x y^-1 and x^-1 y are idempotent.
    pub fn compatible_definitional(&self, x: ElemId, y: ElemId) -> bool {
        self.is_idempotent(self.product(x, self.inverse(y)))
            && self.is_idempotent(self.product(self.inverse(x), y))
    }

    /// Both routes, which must agree.
    pub fn compatible(&self, x: ElemId, y: ElemId) -> bool {
        let f = self.compatible_formula(x, y);
        let d = self.compatible_definitional(x, y);
        assert_eq!(
            f, d,
            "compatibility routes disagree on {} vs {}",
            self.display(x),
            self.display(y)
        );
        f
    }

    // ---- misc ----------------------------------------------------------------

    pub fn is_commutative(&self) -> bool {
        self.ids()
            .all(|x| (x..self.len()).all(|y| self.product(x, y) == self.product(y, x)))
    }

    pub fn display(&self, x: ElemId) -> String {
        let Coset { sub, rep } = self.elements[x];
        format!("{}·{}", self.lattice.members(sub), rep)
    }

    pub fn debug_dump(&self) -> String {
        use std::fmt::Write as _;
        let mut s = String::new();
        let _ = writeln!(
            s,
            "CosetSemigroup({}, {:?}, {} elements)",
            self.group().name(),
            self.variant,
            self.len()
        );
        for x in self.ids() {
            let _ = writeln!(s, "  [{x}] {}", self.display(x));
        }
        s
    }
}

impl std::fmt::Debug for CosetSemigroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "CosetSemigroup({}, {:?}, {} elements)",
            self.group().name(),
            self.variant,
            self.len()
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dsl::build_group;
    use crate::lattice::DEFAULT_ORDER_CAP;

    pub(crate) fn k1(expr: &str) -> CosetSemigroup {
        let g = Arc::new(build_group(expr).unwrap());
        let l = Arc::new(SubgroupLattice::enumerate(g, DEFAULT_ORDER_CAP).unwrap());
        CosetSemigroup::new(l, Variant::Nontrivial).unwrap()
    }

    fn full(expr: &str) -> CosetSemigroup {
        let g = Arc::new(build_group(expr).unwrap());
        let l = Arc::new(SubgroupLattice::enumerate(g, DEFAULT_ORDER_CAP).unwrap());
        CosetSemigroup::new(l, Variant::Full).unwrap()
    }

    #[test]
    fn element_counts() {
        assert_eq!(k1("C4").len(), 3); // {0,2}, {1,3}, C4
        assert_eq!(k1("C2xC2").len(), 7); // 3 subgroups x 2 cosets + C2xC2
        assert_eq!(k1("C2").len(), 1); // degenerate: just the zero
        assert!(k1("C5").is_degenerate());
        assert_eq!(full("C4").len(), 7); // + 4 singletons
    }

    #[test]
    fn worked_product_in_s3() {
        // <(12)>(123) * <(13)> = S3
        let s = k1("S3");
        let h = s.lattice().id_of(&[0usize, 2].into_iter().collect()).unwrap();
        let k = s.lattice().id_of(&[0usize, 5].into_iter().collect()).unwrap();
        let x = s.id_of(h, 3);
        let y = s.idempotent_id(k);
        let p = s.product(x, y);
        assert_eq!(s.subgroup_of(p), s.lattice().full_id());
    }

    #[test]
    fn inverse_semigroup_laws() {
        for expr in ["C4", "C6", "S3", "D8", "Q8", "C2xC2"] {
            let s = k1(expr);
            for x in s.ids() {
                let xi = s.inverse(x);
                assert_eq!(s.product(s.product(x, xi), x), x, "x x^-1 x = x in {expr}");
                assert_eq!(s.product(s.product(xi, x), xi), xi, "{expr}");
                // x x^-1 is the idempotent of H; x^-1 x that of H^a
                let c = s.coset(x);
                assert_eq!(s.product(x, xi), s.idempotent_id(c.sub));
                assert_eq!(
                    s.product(xi, x),
                    s.idempotent_id(s.lattice().conj_id(c.sub, c.rep))
                );
                for y in s.ids() {
                    // unique pseudo-inverse: (xy)^-1 = y^-1 x^-1
                    assert_eq!(
                        s.inverse(s.product(x, y)),
                        s.product(s.inverse(y), s.inverse(x)),
                        "{expr}"
                    );
                }
            }
        }
    }

    #[test]
    fn idempotents_commute_and_form_join_semilattice() {
        for expr in ["S3", "D8", "A4"] {
            let s = k1(expr);
            let idems = s.idempotent_ids();
            for &e in &idems {
                assert!(s.is_idempotent(e));
                assert_eq!(s.product(e, e), e);
                for &f in &idems {
                    assert_eq!(s.product(e, f), s.product(f, e), "{expr}");
                    let p = s.product(e, f);
                    assert_eq!(
                        s.subgroup_of(p),
                        s.lattice().join_id(s.subgroup_of(e), s.subgroup_of(f))
                    );
                }
            }
            // idempotent <=> product with itself is itself <=> rep 0
            for x in s.ids() {
                assert_eq!(s.product(x, x) == x, s.rep_of(x) == 0, "{expr}");
            }
        }
    }

    #[test]
    fn zero_absorbs() {
        let s = k1("D8");
        let z = s.zero_id();
        for x in s.ids() {
            assert_eq!(s.product(x, z), z);
            assert_eq!(s.product(z, x), z);
        }
    }

    #[test]
    fn full_variant_has_identity() {
        let s = full("S3");
        let e = s.identity_id().unwrap();
        for x in s.ids() {
            assert_eq!(s.product(e, x), x);
            assert_eq!(s.product(x, e), x);
        }
        assert!(k1("S3").identity_id().is_none());
    }

    #[test]
    fn canonicalization_is_representative_independent() {
        let s = k1("D8");
        let l = s.lattice();
        let g = s.group();
        for sub in l.nontrivial_ids() {
            for a in g.elements() {
                let id = s.id_of(sub, a);
                for m in l.members(sub).iter() {
                    assert_eq!(s.id_of(sub, g.mul(m, a)), id);
                }
                // the coset set matches {ha}
                let set: ElemSet = l.members(sub).iter().map(|h| g.mul(h, a)).collect();
                assert_eq!(s.coset_set(id), set);
            }
        }
    }

    #[test]
    fn natural_order_is_reverse_inclusion() {
        let s = k1("S3");
        for x in s.ids() {
            for y in s.ids() {
                let by_sets = s.coset_set(y).is_subset(&s.coset_set(x));
                assert_eq!(s.natural_leq(x, y), by_sets);
            }
        }
        // G is the minimum
        let z = s.zero_id();
        for y in s.ids() {
            assert!(s.natural_leq(z, y));
        }
    }

    #[test]
    fn compatibility_routes_agree_everywhere() {
        for expr in ["C4", "C6", "S3", "D8", "Q8", "C3xC3"] {
            let s = k1(expr);
            for x in s.ids() {
                for y in s.ids() {
                    let _ = s.compatible(x, y); // asserts internally
                    assert!(s.compatible(x, x));
                }
            }
        }
    }

    #[test]
    fn r_class_sizes_are_indices() {
        let s = k1("D8");
        for sub in s.lattice().nontrivial_ids() {
            assert_eq!(
                s.r_class_of_subgroup(sub).len(),
                s.lattice().index_in_group(sub)
            );
            assert_eq!(
                s.l_class_of_subgroup(sub).len(),
                s.lattice().index_in_group(sub)
            );
        }
    }

    #[test]
    fn commutativity_detection() {
        assert!(k1("C12").is_commutative());
        assert!(k1("Q8").is_commutative()); // the one nonabelian exception
        assert!(!k1("S3").is_commutative());
        assert!(!k1("D8").is_commutative());
    }

    #[test]
    fn filter_of_idempotent_matches_subgroup_cosets() {
        let s = k1("S4");
        let l = s.lattice();
        for sub in l.nontrivial_ids() {
            let filt = s.order_filter(s.idempotent_id(sub));
            // exactly the cosets Kb with 1 < K <= sub and b in sub
            let expected: usize = l
                .nontrivial_ids()
                .filter(|&k| l.le(k, sub))
                .map(|k| l.order_of(sub) / l.order_of(k))
                .sum();
            assert_eq!(filt.len(), expected);
        }
    }
}
