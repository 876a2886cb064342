use crate::geometry::wavelet::WaveletMatrix;

/// Suffix array with inverse, LCP, range-minimum table and a wavelet matrix
/// over suffix starts.
///
/// All positions here are **0-based**. [`crate::TextIndex`] converts to the
/// 1-based convention used by the public query API.
#[derive(Debug, Clone)]
pub struct SuffixIndex {
    n: usize,
    text: Vec<u32>,
    sa: Vec<u32>,
    rank: Vec<u32>,
    /// `lcp[r]` = LCP of suffixes `sa[r - 1]` and `sa[r]`; `lcp[0] = 0`.
    lcp: Vec<u32>,
    /// `mins[l][s]` = min of `lcp[s .. s + 2^l]`.
    mins: Vec<Vec<u32>>,
    starts: WaveletMatrix,
}

/// Identifies a string occurring in the text: the first suffix-array row of
/// its occurrences and its length. Equal keys mean equal strings.
pub type ContentKey = (u32, u32);

impl SuffixIndex {
    /// `text` must be dense ranks; its maximum value bounds the bucket count.
    pub fn new(text: &[u32]) -> Self {
        let n = text.len();
        let sa = suffix_array(text);
        let mut rank = vec![0u32; n];
        for (r, &s) in sa.iter().enumerate() {
            rank[s as usize] = r as u32;
        }
        let lcp = kasai(text, &sa, &rank);
        let mins = sparse_table(&lcp);
        let starts = WaveletMatrix::new(&sa);
        SuffixIndex {
            n,
            text: text.to_vec(),
            sa,
            rank,
            lcp,
            mins,
            starts,
        }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn letters(&self) -> &[u32] {
        &self.text
    }

    pub fn sa(&self) -> &[u32] {
        &self.sa
    }

    pub fn rank(&self) -> &[u32] {
        &self.rank
    }

    pub fn lcp_array(&self) -> &[u32] {
        &self.lcp
    }

    /// Minimum of `lcp[l..=r]`, `l <= r`.
    #[inline]
    fn range_min(&self, l: usize, r: usize) -> u32 {
        let lvl = (usize::BITS - 1 - (r - l + 1).leading_zeros()) as usize;
        let row = &self.mins[lvl];
        row[l].min(row[r + 1 - (1 << lvl)])
    }

    /// Longest common prefix of the suffixes starting at `i` and `j`.
    #[inline]
    pub fn lce(&self, i: usize, j: usize) -> usize {
        if i == j {
            return self.n - i;
        }
        let (a, b) = (self.rank[i] as usize, self.rank[j] as usize);
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        self.range_min(lo + 1, hi) as usize
    }

    /// Suffix-array rows `[lo, hi)` whose suffixes start with `T[pos..pos+len)`.
    pub fn interval(&self, pos: usize, len: usize) -> (usize, usize) {
        debug_assert!(pos + len <= self.n);
        let r = self.rank[pos] as usize;
        if len == 0 {
            return (0, self.n);
        }
        let len = len as u32;
        let mut lo = r;
        for lvl in (0..self.mins.len()).rev() {
            let step = 1 << lvl;
            if lo >= step && self.mins[lvl][lo + 1 - step] >= len {
                lo -= step;
            }
        }
        let mut hi = r;
        for lvl in (0..self.mins.len()).rev() {
            let step = 1 << lvl;
            if hi + step < self.n && self.mins[lvl][hi + 1] >= len {
                hi += step;
            }
        }
        (lo, hi + 1)
    }

    pub fn content_key(&self, pos: usize, len: usize) -> ContentKey {
        (self.interval(pos, len).0 as u32, len as u32)
    }

    /// Number of occurrences of `T[pos..pos+len)` starting in `[from, to]`.
    pub fn count_starts(&self, pos: usize, len: usize, from: usize, to: usize) -> usize {
        if from > to {
            return 0;
        }
        let (lo, hi) = self.interval(pos, len);
        self.starts
            .count_between(lo, hi, from as u64, to as u64 + 1)
    }

    /// Whether `T[pos..pos+len)` occurs inside `T[from..from+window)`.
    pub fn occurs_within(&self, pos: usize, len: usize, from: usize, window: usize) -> bool {
        if len > window {
            return false;
        }
        if len == 0 {
            return true;
        }
        self.count_starts(pos, len, from, from + window - len) > 0
    }

    pub fn heap_bytes(&self) -> usize {
        let n = self.n;
        n * 4 * 4 + self.mins.iter().map(|m| m.len() * 4).sum::<usize>() + self.starts.heap_bytes()
    }
}

fn suffix_array(text: &[u32]) -> Vec<u32> {
    let n = text.len();
    if n == 0 {
        return Vec::new();
    }
    let sigma = *text.iter().max().unwrap() as usize + 1;
    let mut rank: Vec<u32> = text.to_vec();
    let mut sa: Vec<u32> = (0..n as u32).collect();
    counting_sort(&mut sa, &rank, sigma.max(n));
    let mut tmp = vec![0u32; n];
    let mut order = vec![0u32; n];
    let mut k = 1;
    loop {
        // Sort by (rank[i], rank[i + k]) with missing second keys first.
        let mut w = 0;
        for i in (n.saturating_sub(k))..n {
            order[w] = i as u32;
            w += 1;
        }
        for &s in &sa {
            if s as usize >= k {
                order[w] = s - k as u32;
                w += 1;
            }
        }
        std::mem::swap(&mut sa, &mut order);
        counting_sort(&mut sa, &rank, sigma.max(n));
        tmp[sa[0] as usize] = 0;
        for r in 1..n {
            let (a, b) = (sa[r - 1] as usize, sa[r] as usize);
            let second = |x: usize| if x + k < n { rank[x + k] as i64 } else { -1 };
            let same = rank[a] == rank[b] && second(a) == second(b);
            tmp[b] = tmp[a] + u32::from(!same);
        }
        std::mem::swap(&mut rank, &mut tmp);
        if rank[sa[n - 1] as usize] as usize == n - 1 {
            break;
        }
        k *= 2;
    }
    sa
}

/// Stable counting sort of `items` by `key[item]`.
fn counting_sort(items: &mut [u32], key: &[u32], buckets: usize) {
    let mut count = vec![0usize; buckets + 1];
    for &it in items.iter() {
        count[key[it as usize] as usize + 1] += 1;
    }
    for b in 0..buckets {
        count[b + 1] += count[b];
    }
    let mut out = vec![0u32; items.len()];
    for &it in items.iter() {
        let c = &mut count[key[it as usize] as usize];
        out[*c] = it;
        *c += 1;
    }
    items.copy_from_slice(&out);
}

fn kasai(text: &[u32], sa: &[u32], rank: &[u32]) -> Vec<u32> {
    let n = text.len();
    let mut lcp = vec![0u32; n];
    let mut h = 0usize;
    for i in 0..n {
        let r = rank[i] as usize;
        if r == 0 {
            h = 0;
            continue;
        }
        let j = sa[r - 1] as usize;
        while i + h < n && j + h < n && text[i + h] == text[j + h] {
            h += 1;
        }
        lcp[r] = h as u32;
        h = h.saturating_sub(1);
    }
    lcp
}

fn sparse_table(values: &[u32]) -> Vec<Vec<u32>> {
    let n = values.len();
    let mut table = vec![values.to_vec()];
    let mut step = 1;
    while step * 2 <= n {
        let prev = table.last().unwrap();
        let row: Vec<u32> = (0..=n - 2 * step)
            .map(|i| prev[i].min(prev[i + step]))
            .collect();
        table.push(row);
        step *= 2;
    }
    table
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ranks(s: &str) -> Vec<u32> {
        s.bytes().map(|b| (b - b'a') as u32).collect()
    }

    #[test]
    fn suffix_order_is_sorted() {
        for s in ["banana", "aaaaaaa", "abcabcab", "adaaaabaabbaac", "z"] {
            let t = ranks(s);
            let idx = SuffixIndex::new(&t);
            for r in 1..t.len() {
                let a = &t[idx.sa()[r - 1] as usize..];
                let b = &t[idx.sa()[r] as usize..];
                assert!(a < b, "{s}");
            }
        }
    }

    #[test]
    fn lce_and_interval() {
        let t = ranks("abab");
        let idx = SuffixIndex::new(&t);
        assert_eq!(idx.lce(0, 2), 2);
        assert_eq!(idx.lce(1, 3), 1);
        assert_eq!(idx.lce(3, 3), 1);
        let (lo, hi) = idx.interval(0, 2);
        assert_eq!(hi - lo, 2);
        assert_eq!(idx.count_starts(0, 2, 1, 3), 1);
        assert!(idx.occurs_within(1, 2, 0, 3));
        assert!(!idx.occurs_within(1, 2, 2, 2));
    }
}
