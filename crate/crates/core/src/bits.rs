//! Fixed-width bit rows packed into `u64` words.

pub(crate) const WORD_BITS: usize = 64;

#[inline]
pub(crate) fn words_for(bits: usize) -> usize {
    bits.div_ceil(WORD_BITS)
}

#[inline]
pub(crate) fn get(row: &[u64], bit: usize) -> bool {
    row[bit / WORD_BITS] >> (bit % WORD_BITS) & 1 == 1
}

#[inline]
pub(crate) fn set(row: &mut [u64], bit: usize) {
    row[bit / WORD_BITS] |= 1 << (bit % WORD_BITS);
}

#[inline]
pub(crate) fn clear(row: &mut [u64], bit: usize) {
    row[bit / WORD_BITS] &= !(1 << (bit % WORD_BITS));
}

pub(crate) fn count(row: &[u64]) -> usize {
    row.iter().map(|w| w.count_ones() as usize).sum()
}

pub(crate) fn any(row: &[u64]) -> bool {
    row.iter().any(|&w| w != 0)
}

/// `true` iff every bit of `a` is also set in `b`.
pub(crate) fn is_subset(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x & !y == 0)
}

pub(crate) fn intersects(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).any(|(x, y)| x & y != 0)
}

/// Ascending indices of the set bits.
pub(crate) fn ones(row: &[u64]) -> impl Iterator<Item = usize> + '_ {
    row.iter().enumerate().flat_map(|(wi, &word)| {
        let mut w = word;
        std::iter::from_fn(move || {
            if w == 0 {
                None
            } else {
                let t = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * WORD_BITS + t)
            }
        })
    })
}
