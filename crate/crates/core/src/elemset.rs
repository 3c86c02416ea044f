/// Set of group elements as a 128-bit mask. Everything in this crate that
/// manipulates subgroups goes through this type, which caps supported group
/// orders at [`ElemSet::MAX_ORDER`].
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ElemSet(pub u128);

impl ElemSet {
    pub const MAX_ORDER: usize = 128;

    pub const EMPTY: ElemSet = ElemSet(0);

    pub fn singleton(x: usize) -> Self {
        debug_assert!(x < Self::MAX_ORDER);
        ElemSet(1u128 << x)
    }

    pub fn full(n: usize) -> Self {
        debug_assert!(n <= Self::MAX_ORDER);
        if n == Self::MAX_ORDER {
            ElemSet(u128::MAX)
        } else {
            ElemSet((1u128 << n) - 1)
        }
    }

    pub fn contains(&self, x: usize) -> bool {
        (self.0 >> x) & 1 == 1
    }

    pub fn insert(&mut self, x: usize) {
        self.0 |= 1u128 << x;
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn union(&self, other: &Self) -> Self {
        ElemSet(self.0 | other.0)
    }

    pub fn intersection(&self, other: &Self) -> Self {
        ElemSet(self.0 & other.0)
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Smallest member, if any.
    pub fn min_member(&self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let x = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(x)
            }
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for ElemSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        let mut s = ElemSet::EMPTY;
        for x in iter {
            s.insert(x);
        }
        s
    }
}

impl std::fmt::Display for ElemSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{")?;
        for (k, x) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "}}")
    }
}

impl std::fmt::Debug for ElemSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        std::fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_ops() {
        let mut s = ElemSet::EMPTY;
        s.insert(3);
        s.insert(0);
        s.insert(7);
        assert_eq!(s.len(), 3);
        assert!(s.contains(3));
        assert!(!s.contains(1));
        assert_eq!(s.min_member(), Some(0));
        assert_eq!(s.to_vec(), vec![0, 3, 7]);
        assert_eq!(format!("{s}"), "{0,3,7}");
        let t: ElemSet = [3, 5].into_iter().collect();
        assert_eq!(s.union(&t).to_vec(), vec![0, 3, 5, 7]);
        assert_eq!(s.intersection(&t).to_vec(), vec![3]);
        assert!(t.is_subset(&s.union(&t)));
        assert!(!t.is_subset(&s));
    }

    #[test]
    fn full_set() {
        assert_eq!(ElemSet::full(6).len(), 6);
        assert_eq!(ElemSet::full(128).len(), 128);
    }
}
