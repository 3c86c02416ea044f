//! Semigroup axioms for both coset semigroups of each group: closure with
//! the set-product oracle, associativity, the inverse-semigroup laws,
//! commuting idempotents, the zero, and the full variant's identity.

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};
use serde_json::json;

use coset_core::mingraph::set_product;
use coset_core::{CosetSemigroup, Variant};

use crate::report::{Entry, Report, SkipTag};
use crate::{Ctx, Prepared};

/// Exhaustive checks are used up to this semigroup size; larger semigroups
/// get deterministic sampling for the cubic/minimality scans.
const EXHAUSTIVE_LIMIT: usize = 80;
const SAMPLED_TRIPLES: usize = 100_000;
const SAMPLED_MINIMALITY_PAIRS: usize = 2_000;
const SAMPLE_SEED: u64 = 42;

pub fn run(ctx: &Ctx) -> Report {
    super::per_group(ctx, "axioms", check_group)
}

fn check_group(p: &Prepared) -> Entry {
    let full = match CosetSemigroup::new(p.lattice.clone(), Variant::Full) {
        Ok(s) => s,
        Err(e) => return Entry::skipped(&p.name, SkipTag::Error, e.to_string()),
    };
    let mut modes = Vec::new();
    for (s, kind) in [(&*p.k1, "nontrivial"), (&full, "full")] {
        let (witness, mode) = check_semigroup(s, kind);
        modes.push(format!("{kind}:{mode}"));
        if let Some(w) = witness {
            return Entry::fail(&p.name, w);
        }
    }
    Entry::pass(&p.name)
        .ev("k1_size", p.k1.len())
        .ev("k_size", full.len())
        .ev("associativity", modes.join(","))
}

/// Returns (failure witness, associativity mode).
fn check_semigroup(s: &CosetSemigroup, kind: &str) -> (Option<serde_json::Value>, &'static str) {
    let n = s.len();
    let g = s.group();
    let witness = |law: &str, parts: &[usize]| {
        let shown: Vec<String> = parts.iter().map(|&x| s.display(x)).collect();
        Some(json!({ "variant": kind, "law": law, "elements": shown }))
    };

    // Closure with the set-product oracle: the product coset must contain
    // the element-set product, and (checked exhaustively on small
    // semigroups, on a fixed sample otherwise) be the smallest coset doing
    // so.
    let sets: Vec<_> = s.ids().map(|x| s.coset_set(x)).collect();
    let exhaustive = n <= EXHAUSTIVE_LIMIT;
    let minimality = |x: usize, y: usize| -> bool {
        let prod = set_product(g, &sets[x], &sets[y]);
        let xy = s.product(x, y);
        if !prod.is_subset(&sets[xy]) {
            return false;
        }
        s.ids().all(|z| !prod.is_subset(&sets[z]) || sets[xy].is_subset(&sets[z]))
    };
    if exhaustive {
        for x in s.ids() {
            for y in s.ids() {
                if !minimality(x, y) {
                    return (witness("product is the least coset containing the set product", &[x, y]), "exhaustive");
                }
            }
        }
    } else {
        // containment everywhere, minimality on a deterministic sample
        for x in s.ids() {
            for y in s.ids() {
                let prod = set_product(g, &sets[x], &sets[y]);
                if !prod.is_subset(&sets[s.product(x, y)]) {
                    return (witness("set product is contained in the product coset", &[x, y]), "sampled");
                }
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(SAMPLE_SEED);
        for _ in 0..SAMPLED_MINIMALITY_PAIRS {
            let x = (rng.next_u64() % n as u64) as usize;
            let y = (rng.next_u64() % n as u64) as usize;
            if !minimality(x, y) {
                return (witness("product is the least coset containing the set product", &[x, y]), "sampled");
            }
        }
    }

    // associativity
    let mode = if exhaustive {
        for x in s.ids() {
            for y in s.ids() {
                for z in s.ids() {
                    if s.product(s.product(x, y), z) != s.product(x, s.product(y, z)) {
                        return (witness("associativity", &[x, y, z]), "exhaustive");
                    }
                }
            }
        }
        "exhaustive"
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(SAMPLE_SEED);
        for _ in 0..SAMPLED_TRIPLES {
            let x = (rng.next_u64() % n as u64) as usize;
            let y = (rng.next_u64() % n as u64) as usize;
            let z = (rng.next_u64() % n as u64) as usize;
            if s.product(s.product(x, y), z) != s.product(x, s.product(y, z)) {
                return (witness("associativity", &[x, y, z]), "sampled");
            }
        }
        "sampled"
    };

    // inverse-semigroup laws, uniqueness of the inverse, and the idempotent
    // characterization by canonical representative
    for x in s.ids() {
        let xi = s.inverse(x);
        if s.product(s.product(x, xi), x) != x {
            return (witness("x x^-1 x = x", &[x]), mode);
        }
        if s.inverse(xi) != x {
            return (witness("(x^-1)^-1 = x", &[x]), mode);
        }
        if s.is_idempotent(x) != (s.product(x, x) == x) {
            return (witness("idempotent flag matches x*x = x", &[x]), mode);
        }
        let generalized_inverses = s
            .ids()
            .filter(|&y| s.product(s.product(x, y), x) == x && s.product(s.product(y, x), y) == y)
            .count();
        if generalized_inverses != 1 {
            return (witness("unique generalized inverse", &[x]), mode);
        }
    }
    for x in s.ids() {
        for y in s.ids() {
            if s.inverse(s.product(x, y)) != s.product(s.inverse(y), s.inverse(x)) {
                return (witness("(xy)^-1 = y^-1 x^-1", &[x, y]), mode);
            }
        }
    }

    // idempotents commute
    let idems = s.idempotent_ids();
    for &e in &idems {
        for &f in &idems {
            if s.product(e, f) != s.product(f, e) {
                return (witness("idempotents commute", &[e, f]), mode);
            }
        }
    }

    // the zero absorbs; the full variant's identity is two-sided
    let zero = s.zero_id();
    for x in s.ids() {
        if s.product(zero, x) != zero || s.product(x, zero) != zero {
            return (witness("zero absorbs", &[x]), mode);
        }
    }
    match s.identity_id() {
        Some(e) => {
            for x in s.ids() {
                if s.product(e, x) != x || s.product(x, e) != x {
                    return (witness("identity law", &[x]), mode);
                }
            }
        }
        None => {
            debug_assert!(matches!(s.variant(), Variant::Nontrivial));
        }
    }

    (None, mode)
}
