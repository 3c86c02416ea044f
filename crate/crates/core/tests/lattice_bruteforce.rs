//! Independent oracle for subgroup enumeration: scan every subset of the
//! group (orders up to 12, so at most 4096 masks) and keep the nonempty
//! multiplication-closed ones — in a finite group those are exactly the
//! subgroups. The lattice enumerator must produce the identical family.

use std::sync::Arc;

use coset_core::dsl::build_group;
use coset_core::{FiniteGroup, SubgroupLattice, DEFAULT_ORDER_CAP};

fn closed_subsets_bruteforce(g: &FiniteGroup) -> Vec<u64> {
    let n = g.order();
    assert!(n <= 12, "oracle is exponential in the order");
    let mut out = Vec::new();
    for mask in 1u64..(1 << n) {
        let members: Vec<usize> = (0..n).filter(|&x| mask >> x & 1 == 1).collect();
        let closed = members
            .iter()
            .all(|&x| members.iter().all(|&y| mask >> g.mul(x, y) & 1 == 1));
        if closed {
            // a nonempty finite set closed under the product is a subgroup
            assert!(mask & 1 == 1, "closed subset must contain the identity");
            out.push(mask);
        }
    }
    out.sort_unstable();
    out
}

fn lattice_masks(g: Arc<FiniteGroup>) -> Vec<u64> {
    let l = SubgroupLattice::enumerate(g, DEFAULT_ORDER_CAP).unwrap();
    let mut out: Vec<u64> = l.all_ids().map(|h| l.members(h).0 as u64).collect();
    out.sort_unstable();
    out
}

#[test]
fn enumerator_matches_exhaustive_subset_scan() {
    for (expr, expected_count) in [
        ("C2", 2),
        ("C4", 3),
        ("C6", 4),
        ("C8", 4),
        ("C12", 6),
        ("C2xC2", 5),
        ("C3xC3", 6),
        ("C2xC6", 10),
        ("S3", 6),
        ("D8", 10),
        ("Q8", 6),
        ("D12", 16),
        ("A4", 10),
    ] {
        let g = Arc::new(build_group(expr).unwrap());
        let brute = closed_subsets_bruteforce(&g);
        assert_eq!(brute.len(), expected_count, "{expr}: subgroup count");
        assert_eq!(lattice_masks(g), brute, "{expr}: subgroup family");
    }
}

#[test]
fn enumerator_matches_scan_on_symmetric_and_elementary_groups() {
    for expr in ["S3xC2", "E(2,3)", "C9", "C10", "C3xC4"] {
        let g = Arc::new(build_group(expr).unwrap());
        if g.order() <= 12 {
            assert_eq!(lattice_masks(g.clone()), closed_subsets_bruteforce(&g), "{expr}");
        }
    }
}
