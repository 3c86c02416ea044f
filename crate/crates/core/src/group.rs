//! Finite groups as validated multiplication tables.
//!
//! Elements are indices `0..n` and element 0 is always the identity. Every
//! construction path (builders, direct products, quotients, parsed table
//! files) runs the full axiom check, reporting the first failing triple.

use crate::elemset::ElemSet;
use crate::error::{AxiomFailure, Error, Result};

pub type Elem = usize;

#[derive(Clone)]
pub struct FiniteGroup {
    name: String,
    order: usize,
    table: Vec<Elem>, // row-major, order*order
    inverse: Vec<Elem>,
}

impl FiniteGroup {
    /// Validate a multiplication table and wrap it. `table[i*n + j]` is `i*j`.
    pub fn from_table(name: impl Into<String>, order: usize, table: Vec<Elem>) -> Result<Self> {
        if order == 0 || table.len() != order * order {
            return Err(Error::Parse(format!(
                "table size {} does not match order {order}",
                table.len()
            )));
        }
        let at = |i: usize, j: usize| table[i * order + j];
        for i in 0..order {
            for j in 0..order {
                let v = at(i, j);
                if v >= order {
                    return Err(Error::Axiom(AxiomFailure::Closure { i, j, value: v }));
                }
            }
        }
        for i in 0..order {
            if at(0, i) != i || at(i, 0) != i {
                return Err(Error::Axiom(AxiomFailure::Identity { i }));
            }
        }
        let mut inverse = vec![usize::MAX; order];
        for i in 0..order {
            match (0..order).find(|&j| at(i, j) == 0 && at(j, i) == 0) {
                Some(j) => inverse[i] = j,
                None => return Err(Error::Axiom(AxiomFailure::Inverse { i })),
            }
        }
        for i in 0..order {
            for j in 0..order {
                let ij = at(i, j);
                for k in 0..order {
                    if at(ij, k) != at(i, at(j, k)) {
                        return Err(Error::Axiom(AxiomFailure::Associativity { i, j, k }));
                    }
                }
            }
        }
        Ok(FiniteGroup {
            name: name.into(),
            order,
            table,
            inverse,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn set_name(&mut self, name: impl Into<String>) {
        self.name = name.into();
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> Elem {
        0
    }

    #[inline]
    pub fn mul(&self, i: Elem, j: Elem) -> Elem {
        self.table[i * self.order + j]
    }

    #[inline]
    pub fn inv(&self, i: Elem) -> Elem {
        self.inverse[i]
    }

    /// x^g = g^-1 x g
    pub fn conj(&self, x: Elem, g: Elem) -> Elem {
        self.mul(self.mul(self.inv(g), x), g)
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        0..self.order
    }

    /// Multiplicative order of an element.
    pub fn element_order(&self, x: Elem) -> usize {
        let mut p = x;
        let mut k = 1;
        while p != 0 {
            p = self.mul(p, x);
            k += 1;
        }
        k
    }

    /// lcm of all element orders.
    pub fn exponent(&self) -> usize {
        self.elements()
            .map(|x| self.element_order(x))
            .fold(1, lcm)
    }

    /// Multiset of element orders, as (order, count) sorted by order.
    pub fn order_census(&self) -> Vec<(usize, usize)> {
        let mut counts = std::collections::BTreeMap::new();
        for x in self.elements() {
            *counts.entry(self.element_order(x)).or_insert(0usize) += 1;
        }
        counts.into_iter().collect()
    }

    pub fn is_abelian(&self) -> bool {
        for i in 0..self.order {
            for j in (i + 1)..self.order {
                if self.mul(i, j) != self.mul(j, i) {
                    return false;
                }
            }
        }
        true
    }

    /// Elements commuting with everything.
    pub fn center_elements(&self) -> Vec<Elem> {
        self.elements()
            .filter(|&x| self.elements().all(|y| self.mul(x, y) == self.mul(y, x)))
            .collect()
    }

    /// If the order is a prime power p^k with k >= 1, returns p.
    pub fn p_group_prime(&self) -> Option<usize> {
        if self.order == 1 {
            return None;
        }
        let mut n = self.order;
        let mut p = 2;
        while p * p <= n {
            if n % p == 0 {
                while n % p == 0 {
                    n /= p;
                }
                return if n == 1 { Some(p) } else { None };
            }
            p += 1;
        }
        Some(n) // n prime
    }

    pub fn direct_product(&self, other: &FiniteGroup) -> FiniteGroup {
        let n1 = self.order;
        let n2 = other.order;
        let n = n1 * n2;
        let mut table = vec![0usize; n * n];
        for a1 in 0..n1 {
            for a2 in 0..n2 {
                for b1 in 0..n1 {
                    for b2 in 0..n2 {
                        let i = a1 * n2 + a2;
                        let j = b1 * n2 + b2;
                        table[i * n + j] = self.mul(a1, b1) * n2 + other.mul(a2, b2);
                    }
                }
            }
        }
        FiniteGroup::from_table(format!("{}x{}", self.name, other.name), n, table)
            .expect("direct product of valid groups is valid")
    }

    /// The subgroup on `members` as a standalone group. `members` must be
    /// closed under multiplication and contain the identity; elements are
    /// relabelled in increasing order, so the identity stays at 0.
    pub fn subgroup_group(&self, members: &ElemSet, name: impl Into<String>) -> Result<FiniteGroup> {
        let elems = members.to_vec();
        let pos: std::collections::HashMap<Elem, usize> =
            elems.iter().enumerate().map(|(k, &x)| (x, k)).collect();
        let m = elems.len();
        let mut table = vec![0usize; m * m];
        for (i, &x) in elems.iter().enumerate() {
            for (j, &y) in elems.iter().enumerate() {
                let z = self.mul(x, y);
                let k = *pos
                    .get(&z)
                    .ok_or_else(|| Error::Parse(format!("set {members} is not closed")))?;
                table[i * m + j] = k;
            }
        }
        FiniteGroup::from_table(name, m, table)
    }

    /// G/N for a normal subgroup N given by its members. Cosets are labelled
    /// by smallest member, in increasing order, so N itself becomes 0.
    pub fn quotient(&self, normal: &ElemSet) -> Result<FiniteGroup> {
        for g in self.elements() {
            for x in normal.iter() {
                if !normal.contains(self.conj(x, g)) {
                    return Err(Error::NotNormal);
                }
            }
        }
        // canonical (smallest) representative of the coset N*a
        let rep = |a: Elem| -> Elem { normal.iter().map(|x| self.mul(x, a)).min().unwrap() };
        let mut reps: Vec<Elem> = self.elements().map(rep).collect::<Vec<_>>();
        reps.sort_unstable();
        reps.dedup();
        let pos: std::collections::HashMap<Elem, usize> =
            reps.iter().enumerate().map(|(k, &r)| (r, k)).collect();
        let m = reps.len();
        let mut table = vec![0usize; m * m];
        for (i, &a) in reps.iter().enumerate() {
            for (j, &b) in reps.iter().enumerate() {
                table[i * m + j] = pos[&rep(self.mul(a, b))];
            }
        }
        FiniteGroup::from_table(format!("{}/{}", self.name, normal), m, table)
    }

    /// Render in the plain table-file format: first line the order, then one
    /// row of the multiplication table per line.
    pub fn to_table_file(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("{}\n", self.order));
        for i in 0..self.order {
            let row: Vec<String> = (0..self.order)
                .map(|j| self.mul(i, j).to_string())
                .collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }

    /// Parse the table-file format produced by [`to_table_file`]. The
    /// identity must be element 0; the table is fully validated.
    pub fn from_table_file(name: impl Into<String>, text: &str) -> Result<FiniteGroup> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let first = lines
            .next()
            .ok_or_else(|| Error::Parse("empty table file".into()))?;
        let order: usize = first
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad order line {first:?}")))?;
        let mut table = Vec::with_capacity(order * order);
        for _ in 0..order {
            let line = lines
                .next()
                .ok_or_else(|| Error::Parse(format!("expected {order} table rows")))?;
            let row: Vec<usize> = line
                .split_whitespace()
                .map(|tok| {
                    tok.parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad table entry {tok:?}")))
                })
                .collect::<Result<_>>()?;
            if row.len() != order {
                return Err(Error::Parse(format!(
                    "row has {} entries, expected {order}",
                    row.len()
                )));
            }
            table.extend(row);
        }
        if lines.next().is_some() {
            return Err(Error::Parse("trailing content after table rows".into()));
        }
        FiniteGroup::from_table(name, order, table)
    }
}

impl std::fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "FiniteGroup({}, order {})", self.name, self.order)
    }
}

pub(crate) fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

pub(crate) fn is_prime(n: usize) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dsl::build_group;

    #[test]
    fn rejects_broken_associativity_with_first_triple() {
        // C3 table with one corrupted entry
        let mut table = vec![0, 1, 2, 1, 2, 0, 2, 0, 1];
        table[2 * 3 + 2] = 2; // 2*2 = 2 breaks associativity (and inverses stay fine for 0,1)
        match FiniteGroup::from_table("bad", 3, table) {
            Err(Error::Axiom(AxiomFailure::Inverse { .. }))
            | Err(Error::Axiom(AxiomFailure::Associativity { .. })) => {}
            other => panic!("expected axiom failure, got {other:?}"),
        }
    }

    #[test]
    fn rejects_identity_not_zero() {
        // swap roles: element 1 is the identity
        let table = vec![1, 0, 0, 1];
        match FiniteGroup::from_table("bad", 2, table) {
            Err(Error::Axiom(AxiomFailure::Identity { i: 0 })) => {}
            other => panic!("expected identity failure at 0, got {other:?}"),
        }
    }

    #[test]
    fn rejects_out_of_range_entry() {
        let table = vec![0, 1, 1, 5];
        match FiniteGroup::from_table("bad", 2, table) {
            Err(Error::Axiom(AxiomFailure::Closure { i: 1, j: 1, value: 5 })) => {}
            other => panic!("expected closure failure, got {other:?}"),
        }
    }

    #[test]
    fn element_orders_and_exponent() {
        let g = build_group("C6").unwrap();
        assert_eq!(g.element_order(0), 1);
        assert_eq!(g.element_order(1), 6);
        assert_eq!(g.element_order(2), 3);
        assert_eq!(g.element_order(3), 2);
        assert_eq!(g.exponent(), 6);

        let h = build_group("C4xC2").unwrap();
        assert_eq!(h.exponent(), 4);

        let v = build_group("C2xC2").unwrap();
        assert_eq!(v.exponent(), 2);
    }

    #[test]
    fn quotient_and_not_normal() {
        let g = build_group("C4").unwrap();
        let n: ElemSet = [0usize, 2].into_iter().collect();
        let q = g.quotient(&n).unwrap();
        assert_eq!(q.order(), 2);

        // <(12)> in S3 is not normal
        let s3 = build_group("S3").unwrap();
        let t = s3
            .elements()
            .find(|&x| x != 0 && s3.element_order(x) == 2)
            .unwrap();
        let h: ElemSet = [0, t].into_iter().collect();
        assert!(matches!(s3.quotient(&h), Err(Error::NotNormal)));
    }

    #[test]
    fn table_file_roundtrip() {
        let g = build_group("D8").unwrap();
        let text = g.to_table_file();
        let h = FiniteGroup::from_table_file("D8", &text).unwrap();
        assert_eq!(g.order(), h.order());
        for i in g.elements() {
            for j in g.elements() {
                assert_eq!(g.mul(i, j), h.mul(i, j));
            }
        }
    }
}
