use std::cmp::Ordering;

/// Bitset over the element indices of an ambient group marking a subgroup
/// (or, transiently, an arbitrary element set).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SubgroupMask {
    words: Vec<u64>,
    len: usize,
    count: usize,
}

impl SubgroupMask {
    pub fn empty(len: usize) -> Self {
        SubgroupMask {
            words: vec![0; len.div_ceil(64)],
            len,
            count: 0,
        }
    }

    /// The trivial subgroup `{identity}`; the identity always has index 0.
    pub fn trivial(len: usize) -> Self {
        let mut m = Self::empty(len);
        m.insert(0);
        m
    }

    pub fn full(len: usize) -> Self {
        let mut m = Self::empty(len);
        for i in 0..len {
            m.insert(i);
        }
        m
    }

    pub fn from_indices(len: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut m = Self::empty(len);
        for i in indices {
            m.insert(i);
        }
        m
    }

    /// Length of the ambient element set.
    pub fn ambient_len(&self) -> usize {
        self.len
    }

    /// Number of members, i.e. the subgroup order.
    pub fn order(&self) -> usize {
        self.count
    }

    pub fn is_full(&self) -> bool {
        self.count == self.len
    }

    pub fn is_proper(&self) -> bool {
        self.count < self.len
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        self.words[i >> 6] >> (i & 63) & 1 == 1
    }

    /// Returns true if `i` was newly inserted.
    #[inline]
    pub fn insert(&mut self, i: usize) -> bool {
        let w = &mut self.words[i >> 6];
        let bit = 1u64 << (i & 63);
        if *w & bit == 0 {
            *w |= bit;
            self.count += 1;
            true
        } else {
            false
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(wi * 64 + b)
                }
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn is_subset(&self, other: &SubgroupMask) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn intersection(&self, other: &SubgroupMask) -> SubgroupMask {
        let words: Vec<u64> = self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect();
        let count = words.iter().map(|w| w.count_ones() as usize).sum();
        SubgroupMask {
            words,
            len: self.len,
            count,
        }
    }

    /// Canonical order: by subgroup order, then lexicographically by sorted
    /// member list (the mask holding the smallest differing index first).
    pub fn canonical_cmp(&self, other: &SubgroupMask) -> Ordering {
        self.count.cmp(&other.count).then_with(|| {
            for (a, b) in self.words.iter().zip(&other.words) {
                if a != b {
                    let low = (a ^ b).trailing_zeros();
                    return if a >> low & 1 == 1 {
                        Ordering::Less
                    } else {
                        Ordering::Greater
                    };
                }
            }
            Ordering::Equal
        })
    }
}

impl std::fmt::Debug for SubgroupMask {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "SubgroupMask(order {}, {:?})", self.count, self.to_vec())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn basics() {
        let mut m = SubgroupMask::trivial(130);
        assert_eq!(m.order(), 1);
        assert!(m.insert(129));
        assert!(!m.insert(129));
        assert_eq!(m.to_vec(), vec![0, 129]);
        assert!(m.is_proper());
        assert!(SubgroupMask::full(130).is_full());
        assert!(m.is_subset(&SubgroupMask::full(130)));
    }

    proptest! {
        #[test]
        fn canonical_cmp_matches_sorted_lists(
            a in prop::collection::btree_set(0usize..200, 0..20),
            b in prop::collection::btree_set(0usize..200, 0..20),
        ) {
            let ma = SubgroupMask::from_indices(200, a.iter().copied());
            let mb = SubgroupMask::from_indices(200, b.iter().copied());
            let va: Vec<usize> = a.into_iter().collect();
            let vb: Vec<usize> = b.into_iter().collect();
            let expected = va.len().cmp(&vb.len()).then_with(|| va.cmp(&vb));
            prop_assert_eq!(ma.canonical_cmp(&mb), expected);
            prop_assert_eq!(ma.intersection(&mb).to_vec(),
                va.iter().copied().filter(|x| vb.contains(x)).collect::<Vec<_>>());
        }
    }
}
