//! Packed bit rows with population-count helpers.

/// Row-major 0/1 matrix packed into `u64` words. Bits past `cols` in the
/// last word of each row are always zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    stride: usize,
    words: Vec<u64>,
}

#[inline]
pub fn words_for(bits: usize) -> usize {
    bits.div_ceil(64)
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let stride = words_for(cols);
        BitMatrix {
            rows,
            cols,
            stride,
            words: vec![0; rows * stride],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> bool {
        debug_assert!(r < self.rows && c < self.cols);
        self.words[r * self.stride + c / 64] >> (c % 64) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        debug_assert!(r < self.rows && c < self.cols);
        let w = &mut self.words[r * self.stride + c / 64];
        if value {
            *w |= 1 << (c % 64);
        } else {
            *w &= !(1 << (c % 64));
        }
    }

    #[inline]
    pub fn toggle(&mut self, r: usize, c: usize) {
        self.words[r * self.stride + c / 64] ^= 1 << (c % 64);
    }

    #[inline]
    pub fn row(&self, r: usize) -> &[u64] {
        &self.words[r * self.stride..(r + 1) * self.stride]
    }

    pub fn row_ones(&self, r: usize) -> usize {
        self.row(r).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn transpose(&self) -> BitMatrix {
        let mut t = BitMatrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in iter_ones(self.row(r)) {
                t.set(c, r, true);
            }
        }
        t
    }

    /// Row `r` as the low bits of a single word; requires `cols <= 64`.
    #[inline]
    pub fn row_word(&self, r: usize) -> u64 {
        debug_assert!(self.cols <= 64);
        self.words[r * self.stride]
    }
}

#[inline]
pub fn popcount_and(a: &[u64], b: &[u64]) -> usize {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x & y).count_ones() as usize)
        .sum()
}

/// Packs a set of indices below `len` into words.
pub fn mask_from_indices(len: usize, indices: &[usize]) -> Vec<u64> {
    let mut m = vec![0u64; words_for(len)];
    for &i in indices {
        m[i / 64] |= 1 << (i % 64);
    }
    m
}

/// Indices of the set bits, ascending.
pub fn iter_ones(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(wi, &w)| {
        let mut w = w;
        std::iter::from_fn(move || {
            if w == 0 {
                return None;
            }
            let b = w.trailing_zeros() as usize;
            w &= w - 1;
            Some(wi * 64 + b)
        })
    })
}

/// Indices of the set bits of a single word, ascending.
pub fn mask_indices(mask: u64) -> Vec<usize> {
    iter_ones(std::slice::from_ref(&mask)).collect()
}

/// Lexicographic order of two index sets encoded as masks, comparing their
/// ascending index lists.
pub fn lex_cmp_masks(a: u64, b: u64) -> std::cmp::Ordering {
    use std::cmp::Ordering;
    if a == b {
        return Ordering::Equal;
    }
    let low = (a ^ b).trailing_zeros();
    let above = |m: u64| if low >= 63 { 0 } else { m >> (low + 1) };
    if a >> low & 1 == 1 {
        // a continues with `low`; b continues with something larger, or stops.
        if above(b) != 0 {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    } else if above(a) != 0 {
        Ordering::Greater
    } else {
        Ordering::Less
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_get_transpose() {
        let mut m = BitMatrix::zeros(3, 70);
        m.set(0, 0, true);
        m.set(1, 65, true);
        m.set(2, 69, true);
        m.toggle(2, 69);
        assert!(m.get(0, 0) && m.get(1, 65) && !m.get(2, 69));
        let t = m.transpose();
        assert_eq!((t.rows(), t.cols()), (70, 3));
        assert!(t.get(65, 1));
        assert_eq!(t.transpose(), m);
        assert_eq!(m.count_ones(), 2);
    }

    #[test]
    fn ones_iteration() {
        let m = mask_from_indices(130, &[0, 63, 64, 129]);
        assert_eq!(iter_ones(&m).collect::<Vec<_>>(), vec![0, 63, 64, 129]);
    }

    #[test]
    fn lex_order_matches_vec_order() {
        for a in 0u64..64 {
            for b in 0u64..64 {
                assert_eq!(
                    lex_cmp_masks(a, b),
                    mask_indices(a).cmp(&mask_indices(b)),
                    "{a:b} vs {b:b}"
                );
            }
        }
        assert_eq!(
            lex_cmp_masks(1 << 63, 1),
            mask_indices(1 << 63).cmp(&mask_indices(1))
        );
    }
}
