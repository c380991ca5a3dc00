/// Fixed-width bitset over `0..len`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct BitSet {
    words: Vec<u64>,
}

impl BitSet {
    pub fn new(len: usize) -> Self {
        BitSet { words: vec![0; len.div_ceil(64).max(1)] }
    }

    pub fn from_iter(len: usize, items: impl IntoIterator<Item = usize>) -> Self {
        let mut s = Self::new(len);
        for i in items {
            s.insert(i);
        }
        s
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        self.words[i >> 6] |= 1 << (i & 63);
    }

    #[inline]
    pub fn remove(&mut self, i: usize) {
        self.words[i >> 6] &= !(1 << (i & 63));
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        self.words[i >> 6] >> (i & 63) & 1 == 1
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn intersection_count(&self, other: &BitSet) -> usize {
        self.words.iter().zip(&other.words).map(|(a, b)| (a & b).count_ones() as usize).sum()
    }

    pub fn intersects(&self, other: &BitSet) -> bool {
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    pub fn clear(&mut self) {
        self.words.iter_mut().for_each(|w| *w = 0);
    }

    pub fn union_with(&mut self, other: &BitSet) {
        self.words.iter_mut().zip(&other.words).for_each(|(a, b)| *a |= b);
    }

    /// `self = self & other & !minus`, returning whether anything remains.
    pub fn assign_and_not(&mut self, other: &BitSet, minus: &BitSet) -> bool {
        let mut any = 0;
        for ((a, b), c) in self.words.iter_mut().zip(&other.words).zip(&minus.words) {
            *a &= b & !c;
            any |= *a;
        }
        any != 0
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let bit = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * 64 + bit)
            })
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_ops() {
        let mut a = BitSet::from_iter(130, [0, 64, 129]);
        assert_eq!(a.count(), 3);
        assert!(a.contains(64) && !a.contains(63));
        a.remove(64);
        assert_eq!(a.iter().collect::<Vec<_>>(), vec![0, 129]);
        let b = BitSet::from_iter(130, [129, 5]);
        assert_eq!(a.intersection_count(&b), 1);
        let mut c = BitSet::from_iter(130, 0..130);
        assert!(c.assign_and_not(&b, &BitSet::from_iter(130, [5])));
        assert_eq!(c.iter().collect::<Vec<_>>(), vec![129]);
    }
}
