//! `CountDistinct` for the dictionary of all squares `UU` of the text.
//!
//! Every square occurrence lies in exactly one run with the same smallest
//! period. A square of run `R` (period `p`) is `(L, k, ρ)`: length `2kp` and
//! start at rotation `ρ` of the Lyndon root `L`. Only the leftmost and
//! rightmost occurrence of each square within each run are stored. For a
//! periodic window the squares of its own run are counted in closed form.

use std::collections::HashMap;
use std::sync::Arc;

use crate::geometry::SpecialOccurrences;
use crate::text_index::RootId;
use crate::{Error, Fragment, Result, TextIndex};

/// A distinct square: root, power `k` (`|U| = k·|L|`) and rotation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SquareId {
    pub root: RootId,
    pub k: usize,
    pub rotation: usize,
}

/// Leftmost and rightmost occurrence of a square within one run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundaryOccurrence {
    pub square: SquareId,
    pub run: usize,
    pub leftmost: Fragment,
    pub rightmost: Fragment,
}

/// `Σ_{i=1}^{x} ⌊(len - i + 1) / (2p)⌋` for `x <= p`: squares of a run of
/// length `len` and period `p` counted by start among its first `x`
/// positions.
pub fn bsq_prime(len: usize, p: usize, x: usize) -> Result<usize> {
    if x > p {
        return Err(Error::Precondition(format!("prefix {x} exceeds the period {p}")));
    }
    Ok(bsq_prime_raw(len, p, x))
}

fn bsq_prime_raw(len: usize, p: usize, x: usize) -> usize {
    let t = len / (2 * p);
    if t == 0 {
        return 0;
    }
    let rem = len % (2 * p);
    x * t - x.saturating_sub(rem + 1)
}

/// Distinct squares induced by a run of length `len` and period `p`.
pub fn run_squares(len: usize, p: usize) -> usize {
    bsq_prime_raw(len, p, p)
}

/// Distinct squares induced by a run of length `len` and period `p` that
/// start in its first `f1` positions or end in its last `f2` positions.
pub fn bsq(len: usize, p: usize, f1: usize, f2: usize) -> Result<usize> {
    if f1 > p || f2 > p {
        return Err(Error::Precondition(format!(
            "prefix {f1} and suffix {f2} must not exceed the period {p}"
        )));
    }
    if len < 2 * p {
        return Err(Error::Precondition(format!(
            "length {len} is not periodic with period {p}"
        )));
    }
    // Squares are counted by start residue in [1, p]. Ending in the last f2
    // positions selects a cyclic interval of residues ending at len mod p + 1.
    let mut spans: Vec<(usize, usize)> = Vec::with_capacity(3);
    if f1 > 0 {
        spans.push((1, f1));
    }
    if f2 > 0 {
        let end = len % p + 1;
        if end >= f2 {
            spans.push((end + 1 - f2, end));
        } else {
            spans.push((1, end));
            spans.push((p + end + 1 - f2, p));
        }
    }
    spans.sort_unstable();
    let mut total = 0;
    let mut covered = 0; // residues 1..=covered already summed
    for (lo, hi) in spans {
        let lo = lo.max(covered + 1);
        if lo > hi {
            continue;
        }
        total += bsq_prime_raw(len, p, hi) - bsq_prime_raw(len, p, lo - 1);
        covered = hi;
    }
    Ok(total)
}

#[derive(Debug, Clone)]
pub struct SquaresIndex {
    text: Arc<TextIndex>,
    squares: Vec<(SquareId, Fragment)>,
    boundary: Vec<BoundaryOccurrence>,
    colored: SpecialOccurrences,
}

impl SquaresIndex {
    pub fn build(text: Arc<TextIndex>) -> Self {
        let mut colors: HashMap<SquareId, u32> = HashMap::new();
        let mut squares = Vec::new();
        let mut boundary = Vec::new();
        for (ri, run) in text.runs().iter().enumerate() {
            let p = run.period;
            let mut k = 1;
            while 2 * k * p <= run.len() {
                let sq = 2 * k * p;
                let last = run.end + 1 - sq;
                for t in 0..p.min(last + 1 - run.start) {
                    let first = run.start + t;
                    let right = last - (last - first) % p;
                    let id = SquareId {
                        root: run.root_id,
                        k,
                        rotation: (t + p - run.root_offset) % p,
                    };
                    let leftmost = Fragment::new_unchecked(first, first + sq - 1);
                    let next = colors.len() as u32;
                    colors.entry(id).or_insert_with(|| {
                        squares.push((id, leftmost));
                        next
                    });
                    boundary.push(BoundaryOccurrence {
                        square: id,
                        run: ri,
                        leftmost,
                        rightmost: Fragment::new_unchecked(right, right + sq - 1),
                    });
                }
                k += 1;
            }
        }
        let points = boundary.iter().flat_map(|b| {
            let c = colors[&b.square];
            [
                (c, b.leftmost.start, b.leftmost.end),
                (c, b.rightmost.start, b.rightmost.end),
            ]
        });
        let colored = SpecialOccurrences::new(points.collect::<Vec<_>>());
        SquaresIndex {
            text,
            squares,
            boundary,
            colored,
        }
    }

    pub fn text(&self) -> &Arc<TextIndex> {
        &self.text
    }

    /// Every distinct square with one occurrence.
    pub fn distinct_squares(&self) -> &[(SquareId, Fragment)] {
        &self.squares
    }

    pub fn boundary_occurrences(&self) -> &[BoundaryOccurrence] {
        &self.boundary
    }

    /// Number of stored boundary points.
    pub fn boundary_size(&self) -> usize {
        self.colored.occurrence_count()
    }

    /// Distinct squares induced by a periodic fragment read as a run.
    pub fn run_squares_of(&self, f: Fragment) -> Result<usize> {
        let run = self.text.run_of(f).ok_or(Error::Aperiodic(f))?;
        Ok(run_squares(f.len(), run.period))
    }

    /// Distinct squares of `T[i..j]`; 0 for an empty window.
    pub fn count_distinct(&self, i: usize, j: usize) -> Result<usize> {
        let w = Fragment::checked(i, j, self.text.len())?;
        if w.is_empty() {
            return Ok(0);
        }
        let from_boundary = self.colored.count_distinct(i, j);
        let Some(run) = self.text.run_of(w) else {
            return Ok(from_boundary);
        };
        let p = run.period;
        let f1 = (run.start + p).saturating_sub(i);
        let f2 = (j + p).saturating_sub(run.end);
        let own = run_squares(w.len(), p);
        let both = bsq(w.len(), p, f1, f2)?;
        Ok(from_boundary + own - both)
    }

    pub fn heap_bytes(&self) -> usize {
        self.colored.heap_bytes()
            + self.squares.len() * std::mem::size_of::<(SquareId, Fragment)>()
            + self.boundary.len() * std::mem::size_of::<BoundaryOccurrence>()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_forms() {
        assert_eq!(bsq_prime(8, 2, 2).unwrap(), 3);
        assert_eq!(bsq_prime(10, 2, 2).unwrap(), 4);
        assert_eq!(bsq_prime(10, 2, 0).unwrap(), 0);
        assert!(bsq_prime(10, 2, 3).is_err());
        assert_eq!(run_squares(4, 1), 2);
        assert_eq!(run_squares(6, 3), 1);
        assert_eq!(run_squares(5, 3), 0);
        assert_eq!(bsq(10, 3, 2, 0).unwrap(), bsq_prime(10, 3, 2).unwrap());
        assert_eq!(bsq(10, 3, 0, 3).unwrap(), run_squares(10, 3));
        // "abcabcabca": squares ending at the last letter start at residue 2 only
        assert_eq!(bsq(10, 3, 0, 1).unwrap(), 1);
    }

    #[test]
    fn example_text() {
        let t = Arc::new(TextIndex::from_bytes("adaaaabaabbaac").unwrap());
        let s = SquaresIndex::build(t);
        assert_eq!(s.distinct_squares().len(), 4);
        assert_eq!(s.count_distinct(5, 12).unwrap(), 3);
        assert_eq!(s.count_distinct(2, 6).unwrap(), 2);
        assert_eq!(s.count_distinct(2, 12).unwrap(), 4);
        let run36: Vec<_> = s.boundary_occurrences().iter().filter(|b| b.run == 0).collect();
        assert_eq!(run36.len(), 2);
        assert_eq!(
            (run36[0].leftmost, run36[0].rightmost),
            (Fragment::new_unchecked(3, 4), Fragment::new_unchecked(5, 6))
        );
        assert_eq!(run36[1].leftmost, Fragment::new_unchecked(3, 6));
        assert_eq!(s.run_squares_of(Fragment::new_unchecked(3, 6)).unwrap(), 2);
        assert_eq!(s.run_squares_of(Fragment::new_unchecked(5, 10)).unwrap(), 1);
    }

    #[test]
    fn square_free_text() {
        let s = SquaresIndex::build(Arc::new(TextIndex::from_bytes("abc").unwrap()));
        assert!(s.distinct_squares().is_empty());
        assert_eq!(s.boundary_size(), 0);
        assert_eq!(s.count_distinct(1, 3).unwrap(), 0);
    }
}
