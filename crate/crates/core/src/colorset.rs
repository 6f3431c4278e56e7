use std::fmt;

/// A set of color ids drawn from `0..ColorSet::CAPACITY`, stored as a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ColorSet(u128);

impl ColorSet {
    pub const CAPACITY: usize = 128;

    pub const fn empty() -> Self {
        ColorSet(0)
    }

    pub fn singleton(c: u32) -> Self {
        debug_assert!((c as usize) < Self::CAPACITY);
        ColorSet(1 << c)
    }

    pub fn contains(self, c: u32) -> bool {
        self.0 >> c & 1 == 1
    }

    #[must_use]
    pub fn with(self, c: u32) -> Self {
        self.union(Self::singleton(c))
    }

    #[must_use]
    pub fn union(self, other: Self) -> Self {
        ColorSet(self.0 | other.0)
    }

    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = u32> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let c = bits.trailing_zeros();
            bits &= bits - 1;
            Some(c)
        })
    }
}

impl FromIterator<u32> for ColorSet {
    fn from_iter<I: IntoIterator<Item = u32>>(iter: I) -> Self {
        iter.into_iter().fold(ColorSet::empty(), ColorSet::with)
    }
}

impl fmt::Debug for ColorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
