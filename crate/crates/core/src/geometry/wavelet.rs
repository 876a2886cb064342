//! Wavelet matrix over small unsigned integers.
//!
//! Counts how many values in a position range fall below a threshold in
//! `O(log σ)` rank operations. It backs every static range counter in the
//! crate.

#[derive(Debug, Clone, Default)]
struct RankBits {
    words: Vec<u64>,
    /// `cumulative[w]` = number of ones in `words[..w]`.
    cumulative: Vec<u32>,
}

impl RankBits {
    fn from_bits(bits: impl ExactSizeIterator<Item = bool>) -> Self {
        let len = bits.len();
        let mut words = vec![0u64; len / 64 + 1];
        for (i, b) in bits.enumerate() {
            if b {
                words[i / 64] |= 1 << (i % 64);
            }
        }
        let mut cumulative = Vec::with_capacity(words.len() + 1);
        let mut acc = 0u32;
        for w in &words {
            cumulative.push(acc);
            acc += w.count_ones();
        }
        cumulative.push(acc);
        RankBits { words, cumulative }
    }

    /// Number of ones in `[0, i)`.
    #[inline]
    fn rank1(&self, i: usize) -> usize {
        let w = i / 64;
        let rem = i % 64;
        let base = self.cumulative[w] as usize;
        if rem == 0 {
            base
        } else {
            base + (self.words[w] & ((1u64 << rem) - 1)).count_ones() as usize
        }
    }

    #[inline]
    fn rank0(&self, i: usize) -> usize {
        i - self.rank1(i)
    }

    fn heap_bytes(&self) -> usize {
        self.words.len() * 8 + self.cumulative.len() * 4
    }
}

#[derive(Debug, Clone, Default)]
pub struct WaveletMatrix {
    bits: u32,
    levels: Vec<RankBits>,
    zeros: Vec<usize>,
}

impl WaveletMatrix {
    pub fn new(values: &[u32]) -> Self {
        let max = values.iter().copied().max().unwrap_or(0);
        let bits = 32 - max.leading_zeros();
        let mut cur = values.to_vec();
        let mut levels = Vec::with_capacity(bits as usize);
        let mut zeros = Vec::with_capacity(bits as usize);
        let mut next = Vec::with_capacity(cur.len());
        for level in (0..bits).rev() {
            let rb = RankBits::from_bits(cur.iter().map(|v| (v >> level) & 1 == 1));
            next.clear();
            next.extend(cur.iter().filter(|v| (*v >> level) & 1 == 0));
            zeros.push(next.len());
            next.extend(cur.iter().filter(|v| (*v >> level) & 1 == 1));
            std::mem::swap(&mut cur, &mut next);
            levels.push(rb);
        }
        WaveletMatrix {
            bits,
            levels,
            zeros,
        }
    }

    /// Number of values `< upper` among positions `[l, r)`.
    pub fn count_less(&self, mut l: usize, mut r: usize, upper: u64) -> usize {
        if l >= r {
            return 0;
        }
        if upper >= 1u64 << self.bits {
            return r - l;
        }
        let mut res = 0;
        for (depth, rb) in self.levels.iter().enumerate() {
            let level = self.bits - 1 - depth as u32;
            let l0 = rb.rank0(l);
            let r0 = rb.rank0(r);
            if (upper >> level) & 1 == 1 {
                res += r0 - l0;
                l = self.zeros[depth] + (l - l0);
                r = self.zeros[depth] + (r - r0);
            } else {
                l = l0;
                r = r0;
            }
        }
        res
    }

    /// Number of values in `[lo, hi)` among positions `[l, r)`.
    #[inline]
    pub fn count_between(&self, l: usize, r: usize, lo: u64, hi: u64) -> usize {
        if lo >= hi {
            return 0;
        }
        self.count_less(l, r, hi) - self.count_less(l, r, lo)
    }

    pub fn heap_bytes(&self) -> usize {
        self.levels.iter().map(RankBits::heap_bytes).sum::<usize>() + self.zeros.len() * 8
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_match_scan() {
        let vals: Vec<u32> = (0..300).map(|i| (i * 7919 % 61) as u32).collect();
        let wm = WaveletMatrix::new(&vals);
        for l in (0..300).step_by(17) {
            for r in (l..=300).step_by(13) {
                for (lo, hi) in [(0, 5), (3, 40), (10, 61), (0, 100), (60, 61)] {
                    let expect = vals[l..r]
                        .iter()
                        .filter(|&&v| (lo..hi).contains(&(v as u64)))
                        .count();
                    assert_eq!(wm.count_between(l, r, lo, hi), expect);
                }
            }
        }
    }

    #[test]
    fn all_zero_values() {
        let wm = WaveletMatrix::new(&[0, 0, 0]);
        assert_eq!(wm.count_less(0, 3, 1), 3);
        assert_eq!(wm.count_less(0, 3, 0), 0);
        assert_eq!(WaveletMatrix::new(&[]).count_less(0, 0, 5), 0);
    }
}
