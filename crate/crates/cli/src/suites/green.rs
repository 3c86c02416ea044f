//! Green's relations on the coset semigroup, checked definitionally
//! (principal ideals) against their closed forms, plus the natural partial
//! order in three formulations and its extremal structure (zero, maximal
//! elements, primitive idempotents, Frattini criterion).

use std::collections::{HashMap, HashSet};

use serde_json::json;

use coset_core::{group_isomorphic, ElemId, DEFAULT_ISO_CAP};

use crate::report::{Entry, Report};
use crate::{Ctx, Prepared};

/// Principal two-sided ideals are cubic to enumerate; cap the exhaustive
/// J-relation check to semigroups up to this size.
const J_LIMIT: usize = 80;

pub fn run(ctx: &Ctx) -> Report {
    super::per_group(ctx, "green", check_group)
}

fn check_group(p: &Prepared) -> Entry {
    let s = &*p.k1;
    let l = &*p.lattice;
    let n = s.len();
    let fail = |law: &str, parts: &[ElemId]| {
        let shown: Vec<String> = parts.iter().map(|&x| s.display(x)).collect();
        Entry::fail(&p.name, json!({ "law": law, "elements": shown }))
    };

    // Principal right/left ideals, interned to class ids.
    let mut intern: HashMap<Vec<ElemId>, usize> = HashMap::new();
    let mut class_of = |ideal: Vec<ElemId>| -> usize {
        let next = intern.len();
        *intern.entry(ideal).or_insert(next)
    };
    let mut r_class = Vec::with_capacity(n);
    let mut l_class = Vec::with_capacity(n);
    for x in s.ids() {
        let mut right: Vec<ElemId> = s.ids().map(|t| s.product(x, t)).collect();
        right.push(x);
        right.sort_unstable();
        right.dedup();
        r_class.push(class_of(right));
        let mut left: Vec<ElemId> = s.ids().map(|t| s.product(t, x)).collect();
        left.push(x);
        left.sort_unstable();
        left.dedup();
        l_class.push(class_of(left));
    }

    // D = R∘L definitionally: z with x R z and z L y.
    let rl_pairs: HashSet<(usize, usize)> = s.ids().map(|z| (s.r_key(z), s.l_key(z))).collect();

    for x in s.ids() {
        for y in s.ids() {
            if (r_class[x] == r_class[y]) != s.r_related(x, y) {
                return fail("R by principal right ideals matches R by subgroup", &[x, y]);
            }
            if (l_class[x] == l_class[y]) != s.l_related(x, y) {
                return fail("L by principal left ideals matches L by conjugated subgroup", &[x, y]);
            }
            if (s.r_related(x, y) && s.l_related(x, y)) != s.h_related(x, y) {
                return fail("H = R and L", &[x, y]);
            }
            let d_rl = rl_pairs.contains(&(s.r_key(x), s.l_key(y)));
            let d_lr = rl_pairs.contains(&(s.r_key(y), s.l_key(x)));
            if d_rl != d_lr {
                return fail("R∘L = L∘R", &[x, y]);
            }
            if d_rl != s.d_related(x, y) {
                return fail("D matches subgroup conjugacy", &[x, y]);
            }
        }
    }

    // J via principal two-sided ideals on small semigroups; J = D there.
    let j_mode = if n <= J_LIMIT {
        for y in s.ids() {
            let mut ideal: Vec<bool> = vec![false; n];
            ideal[y] = true;
            for t in s.ids() {
                ideal[s.product(y, t)] = true;
                ideal[s.product(t, y)] = true;
                for u in s.ids() {
                    ideal[s.product(s.product(t, y), u)] = true;
                }
            }
            for x in s.ids() {
                if ideal[x] != s.j_leq(x, y) {
                    return fail("J-order by two-sided ideals matches conjugate containment", &[x, y]);
                }
            }
        }
        for x in s.ids() {
            for y in s.ids() {
                if s.d_related(x, y) != (s.j_leq(x, y) && s.j_leq(y, x)) {
                    return fail("D = J", &[x, y]);
                }
            }
        }
        "exhaustive"
    } else {
        "skipped (size)"
    };

    // Class sizes and the H-class group of each idempotent.
    for h in l.nontrivial_ids() {
        let e = s.idempotent_id(h);
        let index = l.index_in_group(h);
        if s.r_class_of_subgroup(h).len() != index {
            return fail("idempotent R-class size is the subgroup index", &[e]);
        }
        if s.l_class_of_subgroup(h).len() != index {
            return fail("idempotent L-class size is the subgroup index", &[e]);
        }
        let h_class = s.h_class_of_subgroup(h);
        if h_class.len() != l.normalizer_of(h).len() / l.order_of(h) {
            return fail("idempotent H-class size is |N(H)|/|H|", &[e]);
        }
        let hg = match s.h_class_group(h) {
            Ok(g) => g,
            Err(err) => {
                return Entry::fail(
                    &p.name,
                    json!({ "law": "H-class of an idempotent is a group", "elements": [s.display(e)], "error": err.to_string() }),
                )
            }
        };
        let nq = l
            .normalizer_quotient(h)
            .expect("subgroup is normal in its normalizer");
        match group_isomorphic(&hg, &nq, DEFAULT_ISO_CAP) {
            Ok(Some(_)) => {}
            _ => return fail("idempotent H-class group is N(H)/H", &[e]),
        }
    }

    // Natural order: three routes, antisymmetry, and the extremal picture.
    let sets: Vec<_> = s.ids().map(|x| s.coset_set(x)).collect();
    let zero = s.zero_id();
    for x in s.ids() {
        for y in s.ids() {
            let by_formula = s.natural_leq(x, y);
            let by_sets = sets[y].is_subset(&sets[x]);
            let by_idempotent = s.product(s.product(x, s.inverse(x)), y) == x;
            if by_formula != by_sets || by_formula != by_idempotent {
                return fail("natural order: formula = reverse inclusion = idempotent translate", &[x, y]);
            }
            if by_formula && s.natural_leq(y, x) && x != y {
                return fail("natural order antisymmetry", &[x, y]);
            }
        }
        if !s.natural_leq(zero, x) {
            return fail("the zero is the minimum", &[x]);
        }
        let maximal = s.ids().all(|y| y == x || !s.natural_leq(x, y));
        let over_minimal = l.minimal_position(s.r_key(x)).is_some();
        if maximal != over_minimal {
            return fail("maximal elements are the minimal-subgroup cosets", &[x]);
        }
    }

    // Primitive idempotents and the Frattini criterion both speak about the
    // idempotents of maximal subgroups, which live in the semigroup only
    // when the maximal subgroups are nontrivial (i.e. the group order is not
    // prime; otherwise the semigroup is the single zero element and there is
    // nothing to check).
    let maximals_nontrivial = l
        .maximal_subgroups()
        .iter()
        .all(|&m| m != l.trivial_id());
    if maximals_nontrivial {
        // Primitive idempotents are exactly the maximal subgroups.
        let idems = s.idempotent_ids();
        for &e in &idems {
            if e == zero {
                continue;
            }
            let primitive = idems
                .iter()
                .all(|&f| f == e || f == zero || !s.natural_leq(f, e));
            let over_maximal = l.maximal_subgroups().contains(&s.subgroup_of(e));
            if primitive != over_maximal {
                return fail("primitive idempotents are the maximal subgroups", &[e]);
            }
        }

        // Frattini criterion: H lies in Φ(G) iff every primitive idempotent
        // sits below the idempotent of H.
        let frattini = l.frattini_id();
        for h in l.nontrivial_ids() {
            let e = s.idempotent_id(h);
            let below_all = l
                .maximal_subgroups()
                .iter()
                .all(|&m| s.natural_leq(s.idempotent_id(m), e));
            if l.le(h, frattini) != below_all {
                return fail("Frattini membership via primitive idempotents", &[e]);
            }
        }
    }

    Entry::pass(&p.name).ev("j_relation", j_mode).ev("k1_size", n)
}
