//! Word-slice helpers shared by adjacency rows and vertex sets.

pub(crate) const WORD: usize = 64;

#[inline]
pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(WORD)
}

#[inline]
pub(crate) fn get(row: &[u64], i: usize) -> bool {
    row[i / WORD] >> (i % WORD) & 1 == 1
}

#[inline]
pub(crate) fn set(row: &mut [u64], i: usize) {
    row[i / WORD] |= 1 << (i % WORD);
}

#[inline]
pub(crate) fn clear(row: &mut [u64], i: usize) {
    row[i / WORD] &= !(1 << (i % WORD));
}

#[inline]
pub(crate) fn count(row: &[u64]) -> usize {
    row.iter().map(|w| w.count_ones() as usize).sum()
}

#[inline]
pub(crate) fn intersects(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).any(|(x, y)| x & y != 0)
}

#[inline]
pub(crate) fn and_count(a: &[u64], b: &[u64]) -> usize {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x & y).count_ones() as usize)
        .sum()
}

/// Ascending indices of the set bits.
pub(crate) fn ones(row: &[u64]) -> impl Iterator<Item = usize> + '_ {
    row.iter().enumerate().flat_map(|(wi, &w)| {
        let mut w = w;
        std::iter::from_fn(move || {
            if w == 0 {
                None
            } else {
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * WORD + b)
            }
        })
    })
}
