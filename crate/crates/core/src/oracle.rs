//! Brute-force reference implementations.
//!
//! Everything here works on raw bytes by direct comparison and shares no
//! code with the indexes it checks. Inputs longer than [`MAX_N`] are
//! rejected.

use std::collections::{HashMap, HashSet};

use crate::{Error, Fragment, Result};

pub const MAX_N: usize = 2000;

fn guard(n: usize) -> Result<()> {
    if n > MAX_N {
        Err(Error::OracleTooLarge { n, limit: MAX_N })
    } else {
        Ok(())
    }
}

fn letters(text: &[u8], f: Fragment) -> &[u8] {
    if f.end < f.start {
        &[]
    } else {
        &text[f.start - 1..f.end]
    }
}

fn window(text: &[u8], i: usize, j: usize) -> &[u8] {
    if j < i {
        &[]
    } else {
        &text[i - 1..j]
    }
}

fn occurs(hay: &[u8], needle: &[u8]) -> bool {
    needle.is_empty() || (needle.len() <= hay.len() && hay.windows(needle.len()).any(|w| w == needle))
}

fn distinct_patterns<'a>(text: &'a [u8], dict: &[Fragment]) -> Vec<&'a [u8]> {
    let mut seen = HashSet::new();
    dict.iter()
        .map(|&f| letters(text, f))
        .filter(|p| !p.is_empty() && seen.insert(*p))
        .collect()
}

/// Distinct patterns occurring in `T[i..j]`.
pub fn naive_count_distinct(text: &[u8], dict: &[Fragment], i: usize, j: usize) -> Result<usize> {
    guard(text.len())?;
    let w = window(text, i, j);
    Ok(distinct_patterns(text, dict)
        .into_iter()
        .filter(|p| occurs(w, p))
        .count())
}

/// Occurrences of distinct patterns inside `T[i..j]`, with multiplicity.
pub fn naive_count(text: &[u8], dict: &[Fragment], i: usize, j: usize) -> Result<usize> {
    guard(text.len())?;
    let w = window(text, i, j);
    Ok(distinct_patterns(text, dict)
        .into_iter()
        .map(|p| {
            if p.len() > w.len() {
                0
            } else {
                w.windows(p.len()).filter(|x| *x == p).count()
            }
        })
        .sum())
}

/// Distinct square substrings `UU` of `T[i..j]`.
pub fn naive_squares_count(text: &[u8], i: usize, j: usize) -> Result<usize> {
    guard(text.len())?;
    let w = window(text, i, j);
    let mut set: HashSet<&[u8]> = HashSet::new();
    for s in 0..w.len() {
        for half in 1..=(w.len() - s) / 2 {
            if w[s..s + half] == w[s + half..s + 2 * half] {
                set.insert(&w[s..s + 2 * half]);
            }
        }
    }
    Ok(set.len())
}

/// Smallest period of a non-empty string, by trying every shift.
pub fn naive_period(s: &[u8]) -> usize {
    (1..=s.len())
        .find(|&p| (p..s.len()).all(|k| s[k] == s[k - p]))
        .unwrap_or(s.len())
}

/// All runs as `(start, end, period)`, 1-based, sorted.
pub fn naive_runs(text: &[u8]) -> Result<Vec<(usize, usize, usize)>> {
    guard(text.len())?;
    let n = text.len();
    let mut out = Vec::new();
    for p in 1..=n / 2 {
        let mut k = 0;
        while k + p < n {
            if text[k] != text[k + p] {
                k += 1;
                continue;
            }
            let s = k;
            while k + p < n && text[k] == text[k + p] {
                k += 1;
            }
            // text[s..k+p) has period p and is maximal for it
            let e = k + p;
            if e - s >= 2 * p && naive_period(&text[s..e]) == p {
                out.push((s + 1, e, p));
            }
        }
    }
    out.sort_unstable();
    Ok(out)
}

/// Smallest rotation offset giving the least rotation.
pub fn naive_min_rotation(s: &[u8]) -> usize {
    let n = s.len();
    (0..n)
        .min_by_key(|&o| {
            let mut r = s[o..].to_vec();
            r.extend_from_slice(&s[..o]);
            (r, o)
        })
        .unwrap_or(0)
}

/// Largest `k` such that `U[1..k]` occurs in `V`.
pub fn naive_bounded_lcp(text: &[u8], u: Fragment, v: Fragment) -> usize {
    let (u, v) = (letters(text, u), letters(text, v));
    (0..=u.len()).rev().find(|&k| occurs(v, &u[..k])).unwrap_or(0)
}

pub fn naive_exists(text: &[u8], p: Fragment, i: usize, j: usize) -> bool {
    let p = letters(text, p);
    !p.is_empty() && occurs(window(text, i, j), p)
}

/// Distinct patterns with an occurrence starting in `f1` and ending in `f3`
/// that occur in neither `f1 f2` nor `f2 f3`.
pub fn naive_three_fragments(
    text: &[u8],
    dict: &[Fragment],
    f1: Fragment,
    f2: Fragment,
    f3: Fragment,
) -> Result<usize> {
    guard(text.len())?;
    let left = window(text, f1.start, f2.end);
    let right = window(text, f2.start, f3.end);
    let mut count = 0;
    for p in distinct_patterns(text, dict) {
        let essential = (f1.start..=f1.end).any(|a| {
            let b = a + p.len() - 1;
            b >= f3.start && b <= f3.end && &text[a - 1..b] == p
        });
        if essential && !occurs(left, p) && !occurs(right, p) {
            count += 1;
        }
    }
    Ok(count)
}

/// Distinct highly periodic patterns (`4·per(P) <= |P|`) that occur in `u`
/// and share its smallest period.
pub fn naive_periodic_count(text: &[u8], dict: &[Fragment], u: Fragment) -> Result<usize> {
    guard(text.len())?;
    let w = letters(text, u);
    let pu = naive_period(w);
    Ok(distinct_patterns(text, dict)
        .into_iter()
        .filter(|p| {
            let q = naive_period(p);
            4 * q <= p.len() && q == pu && occurs(w, p)
        })
        .count())
}

/// Squares of `f` whose smallest period equals that of `f`.
fn induced_squares(f: &[u8]) -> Vec<(usize, usize)> {
    let p = naive_period(f);
    let mut out = Vec::new();
    for s in 0..f.len() {
        for half in 1..=(f.len() - s) / 2 {
            let sq = &f[s..s + 2 * half];
            if sq[..half] == sq[half..] && naive_period(sq) == p {
                out.push((s, 2 * half));
            }
        }
    }
    out
}

/// Distinct squares induced by `f` read as a standalone run.
pub fn naive_run_squares(f: &[u8]) -> usize {
    let set: HashSet<&[u8]> = induced_squares(f)
        .into_iter()
        .map(|(s, l)| &f[s..s + l])
        .collect();
    set.len()
}

/// Distinct squares induced by `f` starting in its first `f1` positions or
/// ending in its last `f2` positions.
pub fn naive_bsq(f: &[u8], f1: usize, f2: usize) -> usize {
    let n = f.len();
    let set: HashSet<&[u8]> = induced_squares(f)
        .into_iter()
        .filter(|&(s, l)| s < f1 || s + l > n - f2)
        .map(|(s, l)| &f[s..s + l])
        .collect();
    set.len()
}

/// `Σ_{i=1}^{x} ⌊(len - i + 1) / (2p)⌋`.
pub fn naive_bsq_prime(len: usize, p: usize, x: usize) -> usize {
    (1..=x).map(|i| (len + 1 - i) / (2 * p)).sum()
}

/// `table[i][j]` for all `1 <= i <= j <= n`, from per-string earliest ends.
fn window_table(n: usize, occurrences: Vec<Vec<(usize, usize)>>) -> Vec<Vec<u32>> {
    let mut table = vec![vec![0u32; n + 1]; n + 2];
    // min_end[k] = smallest end of an occurrence of string k starting >= i
    let mut min_end = vec![usize::MAX; occurrences.len()];
    let mut by_start: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n + 2];
    for (k, occ) in occurrences.iter().enumerate() {
        for &(a, b) in occ {
            by_start[a].push((k, b));
        }
    }
    for i in (1..=n).rev() {
        for &(k, b) in &by_start[i] {
            min_end[k] = min_end[k].min(b);
        }
        let mut hist = vec![0u32; n + 2];
        for &e in &min_end {
            if e <= n {
                hist[e] += 1;
            }
        }
        let mut acc = 0;
        for j in i..=n {
            acc += hist[j];
            table[i][j] = acc;
        }
    }
    table
}

/// `CountDistinct(i, j)` for every window, as `table[i][j]`.
pub fn naive_window_table(text: &[u8], dict: &[Fragment]) -> Result<Vec<Vec<u32>>> {
    guard(text.len())?;
    let n = text.len();
    let occ = distinct_patterns(text, dict)
        .into_iter()
        .map(|p| {
            (0..=n - p.len())
                .filter(|&a| &text[a..a + p.len()] == p)
                .map(|a| (a + 1, a + p.len()))
                .collect()
        })
        .collect();
    Ok(window_table(n, occ))
}

/// Distinct-square counts for every window, as `table[i][j]`.
pub fn naive_squares_table(text: &[u8]) -> Result<Vec<Vec<u32>>> {
    guard(text.len())?;
    let n = text.len();
    let mut ids: HashMap<&[u8], usize> = HashMap::new();
    let mut occ: Vec<Vec<(usize, usize)>> = Vec::new();
    for s in 0..n {
        for half in 1..=(n - s) / 2 {
            if text[s..s + half] == text[s + half..s + 2 * half] {
                let next = ids.len();
                let k = *ids.entry(&text[s..s + 2 * half]).or_insert(next);
                if k == occ.len() {
                    occ.push(Vec::new());
                }
                occ[k].push((s + 1, s + 2 * half));
            }
        }
    }
    Ok(window_table(n, occ))
}

#[cfg(test)]
mod tests {
    use super::*;

    const T: &[u8] = b"adaaaabaabbaac";

    fn d() -> Vec<Fragment> {
        [(3, 4), (3, 6), (9, 12), (14, 14)]
            .iter()
            .map(|&(a, b)| Fragment::new_unchecked(a, b))
            .collect()
    }

    #[test]
    fn example_values() {
        assert_eq!(naive_count_distinct(T, &d(), 5, 12).unwrap(), 2);
        assert_eq!(naive_count_distinct(T, &d(), 2, 6).unwrap(), 2);
        assert_eq!(naive_count_distinct(T, &d(), 2, 12).unwrap(), 3);
        assert_eq!(naive_squares_count(T, 5, 12).unwrap(), 3);
        assert_eq!(naive_squares_count(T, 2, 6).unwrap(), 2);
        assert_eq!(naive_squares_count(T, 2, 12).unwrap(), 4);
        assert_eq!(naive_count(T, &d(), 5, 12).unwrap(), 3);
        assert_eq!(naive_count_distinct(T, &[], 1, 14).unwrap(), 0);
    }

    #[test]
    fn tables_agree_with_single_queries() {
        let tab = naive_window_table(T, &d()).unwrap();
        let sq = naive_squares_table(T).unwrap();
        for i in 1..=T.len() {
            for j in i..=T.len() {
                assert_eq!(tab[i][j] as usize, naive_count_distinct(T, &d(), i, j).unwrap());
                assert_eq!(sq[i][j] as usize, naive_squares_count(T, i, j).unwrap());
            }
        }
    }

    #[test]
    fn small_definitions() {
        assert_eq!(
            naive_runs(T).unwrap(),
            vec![(3, 6, 1), (5, 10, 3), (8, 9, 1), (10, 11, 1), (12, 13, 1)]
        );
        assert_eq!(naive_min_rotation(b"baa"), 1);
        assert_eq!(naive_bsq_prime(8, 2, 2), 3);
        assert_eq!(naive_bsq_prime(10, 2, 2), 4);
        assert_eq!(naive_run_squares(b"aaaa"), 2);
        assert_eq!(naive_run_squares(b"aabaab"), 1);
        assert!(naive_guard_rejects());
    }

    fn naive_guard_rejects() -> bool {
        let big = vec![b'a'; MAX_N + 1];
        naive_runs(&big).is_err()
    }
}
