//! Small finite posets: explicit order relation, divisor lattices, chain
//! products, and isomorphism testing (optionally label-preserving).

use crate::group::is_prime;

/// A finite poset on `0..n` with a reflexive-transitive `leq` matrix.
#[derive(Clone)]
pub struct Poset {
    n: usize,
    leq: Vec<bool>, // n * n, leq[a*n+b] <=> a <= b
}

impl Poset {
    /// Build from a relation closure; `rel(a, b)` must already be a partial
    /// order (reflexivity is patched in, transitivity is the caller's duty
    /// for honesty but we close anyway to be safe).
    pub fn from_relation(n: usize, rel: impl Fn(usize, usize) -> bool) -> Poset {
        let mut leq = vec![false; n * n];
        for a in 0..n {
            for b in 0..n {
                leq[a * n + b] = a == b || rel(a, b);
            }
        }
        // transitive closure (Floyd–Warshall style)
        for k in 0..n {
            for a in 0..n {
                if leq[a * n + k] {
                    for b in 0..n {
                        if leq[k * n + b] {
                            leq[a * n + b] = true;
                        }
                    }
                }
            }
        }
        Poset { n, leq }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a * self.n + b]
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq(a, b)
    }

    /// Number of elements below (inclusive) — a cheap invariant.
    fn down_degree(&self, a: usize) -> usize {
        (0..self.n).filter(|&b| self.leq(b, a)).count()
    }

    fn up_degree(&self, a: usize) -> usize {
        (0..self.n).filter(|&b| self.leq(a, b)).count()
    }

    /// Height = longest chain ending at `a` (number of strict steps).
    pub fn height(&self, a: usize) -> usize {
        let mut memo = vec![usize::MAX; self.n];
        self.height_memo(a, &mut memo)
    }

    fn height_memo(&self, a: usize, memo: &mut Vec<usize>) -> usize {
        if memo[a] != usize::MAX {
            return memo[a];
        }
        let h = (0..self.n)
            .filter(|&b| self.lt(b, a))
            .map(|b| self.height_memo(b, memo) + 1)
            .max()
            .unwrap_or(0);
        memo[a] = h;
        h
    }

    /// Greatest lower bound, when it exists.
    pub fn meet(&self, a: usize, b: usize) -> Option<usize> {
        let lowers: Vec<usize> = (0..self.n)
            .filter(|&c| self.leq(c, a) && self.leq(c, b))
            .collect();
        lowers
            .iter()
            .copied()
            .find(|&m| lowers.iter().all(|&c| self.leq(c, m)))
    }

    /// Least upper bound, when it exists.
    pub fn join(&self, a: usize, b: usize) -> Option<usize> {
        let uppers: Vec<usize> = (0..self.n)
            .filter(|&c| self.leq(a, c) && self.leq(b, c))
            .collect();
        uppers
            .iter()
            .copied()
            .find(|&j| uppers.iter().all(|&c| self.leq(j, c)))
    }

    /// Whether the dual of `self` is isomorphic to `self`.
    pub fn is_self_dual(&self) -> bool {
        let dual = Poset {
            n: self.n,
            leq: {
                let mut m = vec![false; self.n * self.n];
                for a in 0..self.n {
                    for b in 0..self.n {
                        m[a * self.n + b] = self.leq(b, a);
                    }
                }
                m
            },
        };
        poset_isomorphic(self, &dual, None).is_some()
    }
}

impl std::fmt::Debug for Poset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "Poset(n={})", self.n)?;
        for a in 0..self.n {
            let ups: Vec<usize> = (0..self.n).filter(|&b| self.lt(a, b)).collect();
            writeln!(f, "  {a} < {ups:?}")?;
        }
        Ok(())
    }
}

/// The divisor lattice of `m`: elements are the divisors of `m` in increasing
/// order, ordered by divisibility. Returns (poset, divisors).
pub fn divisor_lattice(m: usize) -> (Poset, Vec<usize>) {
    assert!(m >= 1);
    let divs: Vec<usize> = (1..=m).filter(|d| m % d == 0).collect();
    let p = Poset::from_relation(divs.len(), |a, b| divs[b] % divs[a] == 0);
    (p, divs)
}

/// Product of chains with `lengths[i]` strict steps each (so a chain of
/// length k has k+1 points). The empty product is a single point.
pub fn chain_product(lengths: &[usize]) -> Poset {
    let sizes: Vec<usize> = lengths.iter().map(|&l| l + 1).collect();
    let total: usize = sizes.iter().product();
    let coords = |mut x: usize| -> Vec<usize> {
        sizes
            .iter()
            .map(|&s| {
                let c = x % s;
                x /= s;
                c
            })
            .collect()
    };
    Poset::from_relation(total.max(1), |a, b| {
        let ca = coords(a);
        let cb = coords(b);
        ca.iter().zip(&cb).all(|(x, y)| x <= y)
    })
}

/// Prime factorization as (prime, exponent) pairs, ascending.
pub fn factorize(mut m: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            let mut e = 0;
            while m % p == 0 {
                m /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if m > 1 {
        out.push((m, 1));
    }
    debug_assert!(out.iter().all(|&(p, _)| is_prime(p)));
    out
}

/// Poset isomorphism by backtracking with degree/height invariants. When
/// `labels` is given as (la, lb), the witness must also map label-to-label.
/// Returns a map indexed by elements of `a`.
pub fn poset_isomorphic(
    a: &Poset,
    b: &Poset,
    labels: Option<(&[usize], &[usize])>,
) -> Option<Vec<usize>> {
    if a.len() != b.len() {
        return None;
    }
    let n = a.len();
    let sig = |p: &Poset, side: usize, x: usize| {
        let lab = match labels {
            Some((la, lb)) => {
                if side == 0 {
                    la[x]
                } else {
                    lb[x]
                }
            }
            None => 0,
        };
        (p.down_degree(x), p.up_degree(x), p.height(x), lab)
    };
    let mut sig_a: Vec<_> = (0..n).map(|x| sig(a, 0, x)).collect();
    let mut sig_b: Vec<_> = (0..n).map(|x| sig(b, 1, x)).collect();
    {
        let mut sa = sig_a.clone();
        let mut sb = sig_b.clone();
        sa.sort_unstable();
        sb.sort_unstable();
        if sa != sb {
            return None;
        }
    }
    // order the search by rarity of signature
    let mut order: Vec<usize> = (0..n).collect();
    let mut freq: std::collections::HashMap<_, usize> = std::collections::HashMap::new();
    for s in &sig_a {
        *freq.entry(*s).or_default() += 1;
    }
    order.sort_by_key(|&x| (freq[&sig_a[x]], x));

    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn rec(
        a: &Poset,
        b: &Poset,
        order: &[usize],
        k: usize,
        sig_a: &mut Vec<(usize, usize, usize, usize)>,
        sig_b: &mut Vec<(usize, usize, usize, usize)>,
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        if k == order.len() {
            return true;
        }
        let x = order[k];
        for y in 0..b.len() {
            if used[y] || sig_a[x] != sig_b[y] {
                continue;
            }
            // consistency with everything placed so far
            let ok = order[..k].iter().all(|&m| {
                a.leq(x, m) == b.leq(y, map[m]) && a.leq(m, x) == b.leq(map[m], y)
            });
            if !ok {
                continue;
            }
            map[x] = y;
            used[y] = true;
            if rec(a, b, order, k + 1, sig_a, sig_b, map, used) {
                return true;
            }
            map[x] = usize::MAX;
            used[y] = false;
        }
        false
    }
    if rec(a, b, &order, 0, &mut sig_a, &mut sig_b, &mut map, &mut used) {
        // verify fully
        for x in 0..n {
            for y in 0..n {
                if a.leq(x, y) != b.leq(map[x], map[y]) {
                    return None;
                }
            }
        }
        Some(map)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divisor_lattice_of_12() {
        let (p, divs) = divisor_lattice(12);
        assert_eq!(divs, vec![1, 2, 3, 4, 6, 12]);
        assert!(p.leq(0, 5)); // 1 | 12
        assert!(p.lt(1, 3)); // 2 | 4
        assert!(!p.leq(2, 3)); // 3 does not divide 4
        assert_eq!(p.meet(3, 4), Some(1)); // gcd(4,6)=2
        assert_eq!(p.join(1, 2), Some(4)); // lcm(2,3)=6
        assert!(p.is_self_dual());
    }

    #[test]
    fn chain_products_match_divisor_lattices() {
        // 12 = 2^2 * 3 -> chains of lengths 2 and 1
        let (d12, _) = divisor_lattice(12);
        let cp = chain_product(&[2, 1]);
        assert!(poset_isomorphic(&d12, &cp, None).is_some());

        let (d8, _) = divisor_lattice(8);
        assert!(poset_isomorphic(&d8, &chain_product(&[3]), None).is_some());
        assert!(poset_isomorphic(&d8, &chain_product(&[1, 1, 1]), None).is_none());

        let (d30, _) = divisor_lattice(30);
        assert!(poset_isomorphic(&d30, &chain_product(&[1, 1, 1]), None).is_some());
    }

    #[test]
    fn factorizations() {
        assert_eq!(factorize(1), vec![]);
        assert_eq!(factorize(12), vec![(2, 2), (3, 1)]);
        assert_eq!(factorize(30), vec![(2, 1), (3, 1), (5, 1)]);
        assert_eq!(factorize(16), vec![(2, 4)]);
        assert_eq!(factorize(97), vec![(97, 1)]);
    }

    #[test]
    fn labels_constrain_isomorphism() {
        // two 2-chains; labels force the only order-reversing map to fail
        let p = Poset::from_relation(2, |a, b| a <= b);
        let la = [7usize, 9];
        let lb_ok = [7usize, 9];
        let lb_bad = [9usize, 7];
        assert!(poset_isomorphic(&p, &p, Some((&la, &lb_ok))).is_some());
        assert!(poset_isomorphic(&p, &p, Some((&la, &lb_bad))).is_none());
    }

    #[test]
    fn non_isomorphic_same_size() {
        // chain of 3 vs antichain+top
        let chain = Poset::from_relation(3, |a, b| a <= b);
        let vee = Poset::from_relation(3, |a, b| a == b || b == 2);
        assert!(poset_isomorphic(&chain, &vee, None).is_none());
    }
}
