//! Bounded LCP, internal pattern existence and predecessor counting.

use crate::text_index::SuffixIndex;
use crate::{Fragment, TextIndex};

/// Longest `k` such that `T[u..u+k)` occurs inside `T[v..v+v_len)`, 0-based.
///
/// Binary search over `k`; each probe is a suffix-array interval plus a range
/// count over suffix starts, `O(log² n)` in total.
pub(crate) fn bounded_lcp_raw(
    idx: &SuffixIndex,
    u: usize,
    u_len: usize,
    v: usize,
    v_len: usize,
) -> usize {
    let top = u_len.min(v_len);
    if top == 0 {
        return 0;
    }
    if idx.occurs_within(u, top, v, v_len) {
        return top;
    }
    // invariant: lo occurs, hi does not
    let (mut lo, mut hi) = (0, top);
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if idx.occurs_within(u, mid, v, v_len) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

/// Length of the longest prefix of `u` that occurs in `v`.
pub fn bounded_lcp(text: &TextIndex, u: Fragment, v: Fragment) -> usize {
    if u.is_empty() || v.is_empty() {
        return 0;
    }
    bounded_lcp_raw(text.forward(), u.start - 1, u.len(), v.start - 1, v.len())
}

/// Whether the string `T[p]` occurs inside `T[i..j]`.
pub fn exists(text: &TextIndex, p: Fragment, i: usize, j: usize) -> bool {
    if p.is_empty() || j < i || p.len() > j + 1 - i {
        return false;
    }
    text.forward()
        .occurs_within(p.start - 1, p.len(), i - 1, j + 1 - i)
}

/// Number of entries of the ascending slice `lengths` that are `<= bound`.
pub fn predecessor_count(lengths: &[usize], bound: usize) -> usize {
    lengths.partition_point(|&l| l <= bound)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(a: usize, b: usize) -> Fragment {
        Fragment::new_unchecked(a, b)
    }

    #[test]
    fn examples() {
        let t = TextIndex::from_bytes("adaaaabaabbaac").unwrap();
        assert_eq!(bounded_lcp(&t, f(5, 12), f(6, 12)), 3);
        assert_eq!(bounded_lcp(&t, f(5, 12), Fragment::empty_at(3)), 0);
        assert_eq!(bounded_lcp(&t, f(3, 4), f(1, 14)), 2);
        assert!(exists(&t, f(3, 4), 5, 12));
        assert!(!exists(&t, f(9, 12), 2, 6));
        assert!(!exists(&t, f(1, 14), 2, 14));
        assert_eq!(predecessor_count(&[2, 4], 3), 1);
        assert_eq!(predecessor_count(&[2, 4], 0), 0);
        assert_eq!(predecessor_count(&[2, 4], 9), 2);
    }
}
