//! Group isomorphism testing by backtracking on a generating sequence.
//!
//! Correctness over speed: a candidate map is grown generator by generator,
//! closed under products incrementally, and a surviving full map is verified
//! multiplicatively over every pair before being returned as a witness.

use crate::error::{Error, Result};
use crate::group::{Elem, FiniteGroup};

/// Default cap on group order for isomorphism search.
pub const DEFAULT_ISO_CAP: usize = 48;

/// Decide `a ~= b`, returning a witness map (indexed by elements of `a`)
/// when they are isomorphic. Orders above `cap` are refused outright, before
/// any invariant comparison.
pub fn group_isomorphic(
    a: &FiniteGroup,
    b: &FiniteGroup,
    cap: usize,
) -> Result<Option<Vec<Elem>>> {
    let n = a.order();
    if n > cap || b.order() > cap {
        return Err(Error::CapExceeded {
            what: "group order for isomorphism search",
            actual: n.max(b.order()),
            limit: cap,
        });
    }
    if b.order() != n {
        return Ok(None);
    }
    if a.order_census() != b.order_census() {
        return Ok(None);
    }
    if a.is_abelian() != b.is_abelian() {
        return Ok(None);
    }

    // Greedy generating sequence for `a`: repeatedly adjoin the element of
    // largest order outside the current closure.
    let mut gens: Vec<Elem> = Vec::new();
    let mut closure = vec![false; n];
    closure[0] = true;
    let mut closed: Vec<Elem> = vec![0];
    while closed.len() < n {
        let next = a
            .elements()
            .filter(|&x| !closure[x])
            .max_by_key(|&x| a.element_order(x))
            .unwrap();
        gens.push(next);
        grow_closure(a, &mut closed, &mut closure, next);
    }

    // candidate images in b, bucketed by element order
    let mut by_order: std::collections::HashMap<usize, Vec<Elem>> = std::collections::HashMap::new();
    for y in b.elements() {
        by_order.entry(b.element_order(y)).or_default().push(y);
    }

    let mut map = vec![usize::MAX; n];
    map[0] = 0;
    let mut mapped: Vec<Elem> = vec![0];
    if backtrack(a, b, &gens, 0, &by_order, &mut map, &mut mapped) {
        // full verification: the witness must be a bijective homomorphism
        debug_assert!(map.iter().all(|&y| y != usize::MAX));
        let mut seen = vec![false; n];
        for &y in &map {
            if seen[y] {
                return Ok(None);
            }
            seen[y] = true;
        }
        for x in a.elements() {
            for y in a.elements() {
                if map[a.mul(x, y)] != b.mul(map[x], map[y]) {
                    return Ok(None);
                }
            }
        }
        Ok(Some(map))
    } else {
        Ok(None)
    }
}

fn grow_closure(g: &FiniteGroup, closed: &mut Vec<Elem>, flag: &mut [bool], x: Elem) {
    let mut queue = vec![x];
    while let Some(z) = queue.pop() {
        if flag[z] {
            continue;
        }
        flag[z] = true;
        closed.push(z);
        let snapshot: Vec<Elem> = closed.clone();
        for &m in &snapshot {
            for prod in [g.mul(m, z), g.mul(z, m)] {
                if !flag[prod] {
                    queue.push(prod);
                }
            }
        }
    }
}

/// Extend the partial map by choosing an image for `gens[k]`, propagating the
/// multiplicative closure, and recursing.
fn backtrack(
    a: &FiniteGroup,
    b: &FiniteGroup,
    gens: &[Elem],
    k: usize,
    by_order: &std::collections::HashMap<usize, Vec<Elem>>,
    map: &mut Vec<Elem>,
    mapped: &mut Vec<Elem>,
) -> bool {
    if k == gens.len() {
        return map.iter().all(|&y| y != usize::MAX);
    }
    let g = gens[k];
    let ord = a.element_order(g);
    let Some(candidates) = by_order.get(&ord) else {
        return false;
    };
    for &img in candidates {
        let save_len = mapped.len();
        if try_assign(a, b, g, img, map, mapped)
            && backtrack(a, b, gens, k + 1, by_order, map, mapped)
        {
            return true;
        }
        // undo
        for &x in &mapped[save_len..] {
            map[x] = usize::MAX;
        }
        mapped.truncate(save_len);
    }
    false
}

/// Assign map[g] = img and close under products with everything already
/// mapped. Returns false on any conflict (leaving cleanup to the caller).
fn try_assign(
    a: &FiniteGroup,
    b: &FiniteGroup,
    g: Elem,
    img: Elem,
    map: &mut Vec<Elem>,
    mapped: &mut Vec<Elem>,
) -> bool {
    let mut queue: Vec<(Elem, Elem)> = vec![(g, img)];
    while let Some((x, y)) = queue.pop() {
        if map[x] != usize::MAX {
            if map[x] != y {
                return false;
            }
            continue;
        }
        // injectivity on the explored region
        if mapped.iter().any(|&m| map[m] == y) {
            return false;
        }
        map[x] = y;
        mapped.push(x);
        let snapshot: Vec<Elem> = mapped.clone();
        for &m in &snapshot {
            queue.push((a.mul(m, x), b.mul(map[m], y)));
            queue.push((a.mul(x, m), b.mul(y, map[m])));
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dsl::build_group;

    fn iso(x: &str, y: &str) -> Option<Vec<Elem>> {
        let a = build_group(x).unwrap();
        let b = build_group(y).unwrap();
        group_isomorphic(&a, &b, DEFAULT_ISO_CAP).unwrap()
    }

    #[test]
    fn positive_pairs() {
        assert!(iso("C6", "C2xC3").is_some());
        assert!(iso("S3", "D6").is_some());
        assert!(iso("C2xC2", "E(2,2)").is_some());
        assert!(iso("C12", "C3xC4").is_some());
        assert!(iso("C24", "C3xC8").is_some());
        assert!(iso("S4", "S4").is_some());
    }

    #[test]
    fn negative_pairs() {
        assert!(iso("C4", "C2xC2").is_none());
        assert!(iso("D8", "Q8").is_none());
        assert!(iso("C8", "D8").is_none());
        assert!(iso("A4", "D12").is_none());
        assert!(iso("A4", "C12").is_none());
        assert!(iso("C4xC4", "C8xC2").is_none());
        assert!(iso("E(2,3)", "D8").is_none());
    }

    #[test]
    fn witness_is_a_homomorphism() {
        let a = build_group("S3").unwrap();
        let b = build_group("D6").unwrap();
        let w = group_isomorphic(&a, &b, DEFAULT_ISO_CAP).unwrap().unwrap();
        for x in a.elements() {
            for y in a.elements() {
                assert_eq!(w[a.mul(x, y)], b.mul(w[x], w[y]));
            }
        }
        assert_eq!(w[0], 0);
    }

    #[test]
    fn cap_refuses_before_comparing() {
        let a = build_group("C2").unwrap();
        let b = build_group("C2").unwrap();
        assert!(matches!(
            group_isomorphic(&a, &b, 1),
            Err(Error::CapExceeded { .. })
        ));
    }
}
