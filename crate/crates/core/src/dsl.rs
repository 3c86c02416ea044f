//! Group constructor expressions.
//!
//! Grammar: `expr := atom ("x" atom)*` where an atom is one of
//! `C<n>` (cyclic of order n), `D<n>` (dihedral of order n, n even >= 4),
//! `Q<n>` (generalized quaternion, n in {8,16,32}), `S<n>` / `A<n>`
//! (symmetric / alternating on n letters), `E(p,k)` (elementary abelian of
//! order p^k). `x` builds direct products left to right.

use crate::error::{Error, Result};
use crate::group::{is_prime, FiniteGroup};

/// Cyclic group of order n: i*j = i+j mod n.
pub fn cyclic(n: usize) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(Error::Parse("cyclic group needs order >= 1".into()));
    }
    let mut table = vec![0usize; n * n];
    for i in 0..n {
        for j in 0..n {
            table[i * n + j] = (i + j) % n;
        }
    }
    FiniteGroup::from_table(format!("C{n}"), n, table)
}

/// Dihedral group of order n (n even, >= 4): rotations a^r and reflections
/// a^r b, encoded as r + (n/2)*s.
pub fn dihedral(n: usize) -> Result<FiniteGroup> {
    if n < 4 || n % 2 != 0 {
        return Err(Error::Parse(format!(
            "dihedral order must be even and >= 4, got {n}"
        )));
    }
    let m = n / 2;
    let idx = |r: usize, s: usize| r + m * s;
    let mut table = vec![0usize; n * n];
    for r1 in 0..m {
        for s1 in 0..2 {
            for r2 in 0..m {
                for s2 in 0..2 {
                    // a^r1 b^s1 * a^r2 b^s2 = a^(r1 + (-1)^s1 r2) b^(s1+s2)
                    let r = if s1 == 1 {
                        (r1 + m - r2) % m
                    } else {
                        (r1 + r2) % m
                    };
                    table[idx(r1, s1) * n + idx(r2, s2)] = idx(r, (s1 + s2) % 2);
                }
            }
        }
    }
    FiniteGroup::from_table(format!("D{n}"), n, table)
}

/// Generalized quaternion group of order n in {8,16,32}:
/// <a,b | a^(n/2)=1, b^2=a^(n/4), b a b^-1 = a^-1>, encoded as a^r b^s.
pub fn quaternion(n: usize) -> Result<FiniteGroup> {
    if !matches!(n, 8 | 16 | 32) {
        return Err(Error::Parse(format!(
            "quaternion order must be 8, 16 or 32, got {n}"
        )));
    }
    let m = n / 2;
    let idx = |r: usize, s: usize| r + m * s;
    let mut table = vec![0usize; n * n];
    for r1 in 0..m {
        for s1 in 0..2 {
            for r2 in 0..m {
                for s2 in 0..2 {
                    let mut r = if s1 == 1 {
                        (r1 + m - r2) % m
                    } else {
                        (r1 + r2) % m
                    };
                    let mut s = s1 + s2;
                    if s == 2 {
                        // b^2 = a^(m/2)
                        r = (r + m / 2) % m;
                        s = 0;
                    }
                    table[idx(r1, s1) * n + idx(r2, s2)] = idx(r, s);
                }
            }
        }
    }
    FiniteGroup::from_table(format!("Q{n}"), n, table)
}

fn permutations(deg: usize) -> Vec<Vec<usize>> {
    let mut perms = Vec::new();
    let mut cur: Vec<usize> = (0..deg).collect();
    loop {
        perms.push(cur.clone());
        // next lexicographic permutation
        let Some(i) = (0..deg.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
            break;
        };
        let j = (i + 1..deg).rev().find(|&j| cur[j] > cur[i]).unwrap();
        cur.swap(i, j);
        cur[i + 1..].reverse();
    }
    perms
}

fn parity(p: &[usize]) -> usize {
    let mut seen = vec![false; p.len()];
    let mut odd_transpositions = 0;
    for start in 0..p.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = p[x];
            len += 1;
        }
        odd_transpositions += len - 1;
    }
    odd_transpositions % 2
}

fn permutation_group(name: String, perms: Vec<Vec<usize>>) -> Result<FiniteGroup> {
    let n = perms.len();
    let index: std::collections::HashMap<Vec<usize>, usize> = perms
        .iter()
        .enumerate()
        .map(|(k, p)| (p.clone(), k))
        .collect();
    let mut table = vec![0usize; n * n];
    for (i, p) in perms.iter().enumerate() {
        for (j, q) in perms.iter().enumerate() {
            // left-to-right composition: (p*q)(x) = q(p(x))
            let prod: Vec<usize> = (0..p.len()).map(|x| q[p[x]]).collect();
            table[i * n + j] = index[&prod];
        }
    }
    FiniteGroup::from_table(name, n, table)
}

/// Symmetric group on `deg` letters; permutations listed lexicographically,
/// composed left-to-right ((p*q)(x) = q(p(x))).
pub fn symmetric(deg: usize) -> Result<FiniteGroup> {
    if deg == 0 || deg > 6 {
        return Err(Error::Parse(format!(
            "symmetric degree must be 1..=6, got {deg}"
        )));
    }
    permutation_group(format!("S{deg}"), permutations(deg))
}

/// Alternating group on `deg` letters.
pub fn alternating(deg: usize) -> Result<FiniteGroup> {
    if deg == 0 || deg > 6 {
        return Err(Error::Parse(format!(
            "alternating degree must be 1..=6, got {deg}"
        )));
    }
    let perms: Vec<Vec<usize>> = permutations(deg)
        .into_iter()
        .filter(|p| parity(p) == 0)
        .collect();
    permutation_group(format!("A{deg}"), perms)
}

/// Elementary abelian group of order p^k (p prime), vectors over F_p with
/// little-endian digit encoding.
pub fn elementary_abelian(p: usize, k: usize) -> Result<FiniteGroup> {
    if !is_prime(p) {
        return Err(Error::Parse(format!("E(p,k) needs p prime, got p={p}")));
    }
    if k == 0 {
        return Err(Error::Parse("E(p,k) needs k >= 1".into()));
    }
    let n = p.checked_pow(k as u32).filter(|&n| n <= 1 << 20).ok_or_else(|| {
        Error::Parse(format!("E({p},{k}) is too large"))
    })?;
    let mut table = vec![0usize; n * n];
    for i in 0..n {
        for j in 0..n {
            let mut out = 0;
            let mut base = 1;
            let (mut a, mut b) = (i, j);
            for _ in 0..k {
                out += ((a + b) % p) * base;
                a /= p;
                b /= p;
                base *= p;
            }
            table[i * n + j] = out;
        }
    }
    FiniteGroup::from_table(format!("E({p},{k})"), n, table)
}

fn build_atom(atom: &str) -> Result<FiniteGroup> {
    let atom = atom.trim();
    if atom.is_empty() {
        return Err(Error::Parse("empty atom".into()));
    }
    if !atom.is_ascii() {
        return Err(Error::Parse(format!("bad atom {atom:?}")));
    }
    if let Some(rest) = atom.strip_prefix('E') {
        let inner = rest
            .strip_prefix('(')
            .and_then(|s| s.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("bad elementary abelian atom {atom:?}")))?;
        let parts: Vec<&str> = inner.split(',').map(str::trim).collect();
        if parts.len() != 2 {
            return Err(Error::Parse(format!("bad elementary abelian atom {atom:?}")));
        }
        let p: usize = parts[0]
            .parse()
            .map_err(|_| Error::Parse(format!("bad prime in {atom:?}")))?;
        let k: usize = parts[1]
            .parse()
            .map_err(|_| Error::Parse(format!("bad exponent in {atom:?}")))?;
        return elementary_abelian(p, k);
    }
    let (kind, num) = atom.split_at(1);
    let n: usize = num
        .parse()
        .map_err(|_| Error::Parse(format!("bad atom {atom:?}")))?;
    match kind {
        "C" => cyclic(n),
        "D" => dihedral(n),
        "Q" => quaternion(n),
        "S" => symmetric(n),
        "A" => alternating(n),
        _ => Err(Error::Parse(format!("unknown atom kind {kind:?}"))),
    }
}

/// Build a group from a constructor expression (see module docs).
pub fn build_group(expr: &str) -> Result<FiniteGroup> {
    let expr = expr.trim();
    if expr.is_empty() {
        return Err(Error::Parse("empty group expression".into()));
    }
    // split on 'x' atom separators; 'x' never occurs inside an atom
    let mut group: Option<FiniteGroup> = None;
    for atom in expr.split('x') {
        let g = build_atom(atom)?;
        group = Some(match group {
            None => g,
            Some(acc) => acc.direct_product(&g),
        });
    }
    let mut g = group.unwrap();
    g.set_name(normalize(expr));
    Ok(g)
}

fn normalize(expr: &str) -> String {
    expr.split('x')
        .map(str::trim)
        .collect::<Vec<_>>()
        .join("x")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn atoms_have_right_orders() {
        assert_eq!(build_group("C1").unwrap().order(), 1);
        assert_eq!(build_group("C12").unwrap().order(), 12);
        assert_eq!(build_group("D8").unwrap().order(), 8);
        assert_eq!(build_group("Q8").unwrap().order(), 8);
        assert_eq!(build_group("Q32").unwrap().order(), 32);
        assert_eq!(build_group("S3").unwrap().order(), 6);
        assert_eq!(build_group("S4").unwrap().order(), 24);
        assert_eq!(build_group("A4").unwrap().order(), 12);
        assert_eq!(build_group("E(2,3)").unwrap().order(), 8);
        assert_eq!(build_group("E(3,2)").unwrap().order(), 9);
        assert_eq!(build_group("C2xC3xC4").unwrap().order(), 24);
    }

    #[test]
    fn parse_errors() {
        for bad in ["", "C", "D3", "D2", "Q12", "Q4", "E(4,2)", "E(2,0)", "E(2)", "F7", "CxC", "S0", "S9"] {
            assert!(build_group(bad).is_err(), "{bad:?} should fail to parse");
        }
    }

    #[test]
    fn quaternion_has_unique_involution() {
        let q8 = build_group("Q8").unwrap();
        let involutions: Vec<_> = q8
            .elements()
            .filter(|&x| q8.element_order(x) == 2)
            .collect();
        assert_eq!(involutions, vec![2], "Q8 has exactly one element of order 2");
        assert_eq!(
            q8.order_census(),
            vec![(1, 1), (2, 1), (4, 6)],
            "Q8 order census"
        );
        let q16 = build_group("Q16").unwrap();
        assert_eq!(
            q16.elements().filter(|&x| q16.element_order(x) == 2).count(),
            1,
            "Q16 has exactly one element of order 2"
        );
    }

    #[test]
    fn dihedral_census() {
        let d8 = build_group("D8").unwrap();
        assert_eq!(d8.order_census(), vec![(1, 1), (2, 5), (4, 2)]);
        assert!(!d8.is_abelian());
    }

    #[test]
    fn symmetric_composition_convention() {
        // left-to-right: (12) followed by (123) is (13)
        let s3 = build_group("S3").unwrap();
        // lexicographic listing: 0=[012] 1=[021] 2=[102] 3=[120] 4=[201] 5=[210]
        let swap01 = 2; // "(12)"
        let cycle = 3; // "(123)": 0->1->2->0
        let swap02 = 5; // "(13)"
        assert_eq!(s3.mul(swap01, cycle), swap02);
        assert_eq!(s3.element_order(cycle), 3);
        assert!(!s3.is_abelian());
    }

    #[test]
    fn alternating_is_even_half() {
        let a4 = build_group("A4").unwrap();
        assert_eq!(a4.order(), 12);
        assert_eq!(a4.order_census(), vec![(1, 1), (2, 3), (3, 8)]);
    }

    #[test]
    fn elementary_abelian_exponent() {
        let e = build_group("E(3,2)").unwrap();
        assert!(e.is_abelian());
        assert_eq!(e.exponent(), 3);
    }
}
