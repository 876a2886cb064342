//! Runs from Lyndon arrays under the two letter orders.

use std::cmp::Ordering;

use super::suffix::SuffixIndex;

/// A run in 0-based half-open form, before root interning.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub(super) struct RawRun {
    pub start: usize,
    pub end: usize,
    pub period: usize,
}

/// Order of suffixes `i` and `j`. A proper prefix is smaller in both orders.
fn compare(fwd: &SuffixIndex, i: usize, j: usize, inverted: bool) -> Ordering {
    let n = fwd.len();
    let l = fwd.lce(i, j);
    if i + l == n || j + l == n {
        return (n - i).cmp(&(n - j));
    }
    let t = fwd.letters();
    let ord = t[i + l].cmp(&t[j + l]);
    if inverted {
        ord.reverse()
    } else {
        ord
    }
}

/// `lyndon_end[i]` = exclusive end of the longest Lyndon word starting at `i`.
fn lyndon_ends(fwd: &SuffixIndex, inverted: bool) -> Vec<usize> {
    let n = fwd.len();
    let mut next_smaller = vec![n; n];
    let mut stack: Vec<usize> = Vec::new();
    for i in (0..n).rev() {
        while let Some(&top) = stack.last() {
            if compare(fwd, top, i, inverted) == Ordering::Greater {
                stack.pop();
            } else {
                break;
            }
        }
        next_smaller[i] = stack.last().copied().unwrap_or(n);
        stack.push(i);
    }
    next_smaller
}

pub(super) fn compute_runs(fwd: &SuffixIndex, rev: &SuffixIndex) -> Vec<RawRun> {
    let n = fwd.len();
    let mut runs = Vec::new();
    for inverted in [false, true] {
        let ends = lyndon_ends(fwd, inverted);
        for (i, &j) in ends.iter().enumerate() {
            let p = j - i;
            let right = if j < n { fwd.lce(i, j) } else { 0 };
            let left = if i > 0 {
                rev.lce(n - i, n - j)
            } else {
                0
            };
            let start = i - left;
            let end = j + right;
            if end - start >= 2 * p {
                runs.push(RawRun {
                    start,
                    end,
                    period: p,
                });
            }
        }
    }
    runs.sort_unstable();
    runs.dedup();
    runs
}

/// Offset of the lexicographically least rotation of `s`, smallest on ties.
pub(crate) fn least_rotation<T: Ord>(s: &[T]) -> usize {
    let n = s.len();
    if n <= 1 {
        return 0;
    }
    let (mut i, mut j, mut k) = (0usize, 1usize, 0usize);
    while i < n && j < n && k < n {
        let a = &s[(i + k) % n];
        let b = &s[(j + k) % n];
        match a.cmp(b) {
            Ordering::Equal => k += 1,
            Ordering::Greater => {
                i += k + 1;
                if i == j {
                    i += 1;
                }
                k = 0;
            }
            Ordering::Less => {
                j += k + 1;
                if i == j {
                    j += 1;
                }
                k = 0;
            }
        }
    }
    i.min(j)
}
