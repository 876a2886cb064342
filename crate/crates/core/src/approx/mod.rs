//! 2-approximate `CountDistinct` from basic fragments and
//! 3-Fragments-Counting.
//!
//! A window whose length is not basic is covered by two overlapping basic
//! fragments `T[i..i']` and `T[j'..j]`. Patterns occurring in both are
//! counted twice, patterns with an occurrence in neither are found by
//! 3-Fragments-Counting on `T[i..j'-1]`, `T[j'..i']`, `T[i'+1..j]`.

mod basic;
mod periodic;

use std::collections::HashSet;
use std::sync::Arc;

pub use basic::{BasicFragmentTable, BasicLengths};
pub use periodic::{partition_by_periodicity, HpPatternGrids};

use crate::count_occ::{CountIndex, DEFAULT_MAX_OCC};
use crate::delta::ExtensionIndex;
use crate::dmod_tree::{DModTree, Dictionary};
use crate::internal_pm::exists;
use crate::text_index::ContentKey;
use crate::{Error, Fragment, Result, TextIndex};

/// How a query window is answered.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuerySplit {
    /// The window is itself a basic fragment.
    Basic,
    /// Covered by `T[i..i_prime]` and `T[j_prime..j]`.
    Split { i_prime: usize, j_prime: usize },
    /// The middle fragment is too short; the window is scanned directly.
    Fallback,
}

#[derive(Debug, Clone)]
pub struct ApproxIndex {
    text: Arc<TextIndex>,
    dict: Dictionary,
    lengths: BasicLengths,
    table: BasicFragmentTable,
    grids: HpPatternGrids,
    hp_keys: HashSet<ContentKey>,
    nonhp_count: CountIndex,
    max_occ: usize,
}

impl ApproxIndex {
    pub fn build(text: Arc<TextIndex>, dict: &Dictionary) -> Result<Self> {
        Self::with_limit(text, dict, DEFAULT_MAX_OCC)
    }

    /// `max_occ` bounds the occurrences stored for `Count`.
    pub fn with_limit(text: Arc<TextIndex>, dict: &Dictionary, max_occ: usize) -> Result<Self> {
        let ext = ExtensionIndex::new(text.clone(), dict);
        let lengths = BasicLengths::new(text.len());
        let table = BasicFragmentTable::build(&ext, &lengths);
        let (hp, _) = partition_by_periodicity(&text, dict);
        let mut grids = HpPatternGrids::new(text.len());
        let mut hp_keys = HashSet::new();
        for (id, rep) in &hp {
            grids.insert(rep);
            hp_keys.insert(dict.key(*id));
        }
        let nonhp_count = CountIndex::from_tree(
            ext.forward_tree(),
            dict,
            |id| !hp_keys.contains(&dict.key(id)),
            max_occ,
        )?;
        Ok(ApproxIndex {
            text,
            dict: dict.clone(),
            lengths,
            table,
            grids,
            hp_keys,
            nonhp_count,
            max_occ,
        })
    }

    pub fn text(&self) -> &Arc<TextIndex> {
        &self.text
    }

    pub fn dictionary(&self) -> &Dictionary {
        &self.dict
    }

    pub fn basic_lengths(&self) -> &BasicLengths {
        &self.lengths
    }

    pub fn grids(&self) -> &HpPatternGrids {
        &self.grids
    }

    fn check_window(&self, i: usize, j: usize) -> Result<()> {
        if i == 0 || j > self.text.len() || j + 1 < i {
            return Err(Error::InvalidFragment {
                start: i,
                end: j,
                n: self.text.len(),
            });
        }
        Ok(())
    }

    pub fn split(&self, i: usize, j: usize) -> QuerySplit {
        let len = j + 1 - i;
        if self.lengths.index_of(len).is_some() {
            return QuerySplit::Basic;
        }
        let l = self.lengths.largest_below(len).expect("len >= 2");
        let i_prime = i + l - 1;
        let j_prime = j + 1 - l;
        let f1 = j_prime - i;
        let f2 = (i_prime + 1).saturating_sub(j_prime);
        if f2 < 8 * f1 {
            return QuerySplit::Fallback;
        }
        QuerySplit::Split { i_prime, j_prime }
    }

    /// Exact count of a basic window.
    pub fn basic_count(&self, i: usize, j: usize) -> Option<usize> {
        let k = self.lengths.index_of(j + 1 - i)?;
        Some(self.table.get(k, i))
    }

    /// A value between `CountDistinct(i, j)` and twice that.
    pub fn count_distinct(&self, i: usize, j: usize) -> Result<usize> {
        self.check_window(i, j)?;
        if j < i {
            return Ok(0);
        }
        Ok(match self.split(i, j) {
            QuerySplit::Basic => self.basic_count(i, j).unwrap(),
            QuerySplit::Split { i_prime, j_prime } => {
                let f1 = Fragment::new_unchecked(i, j_prime - 1);
                let f2 = Fragment::new_unchecked(j_prime, i_prime);
                let f3 = Fragment::new_unchecked(i_prime + 1, j);
                self.basic_count(i, i_prime).unwrap()
                    + self.basic_count(j_prime, j).unwrap()
                    + self.three_fragments_unchecked(f1, f2, f3)
            }
            QuerySplit::Fallback => self
                .dict
                .patterns()
                .iter()
                .filter(|&&p| exists(&self.text, p, i, j))
                .count(),
        })
    }

    /// `|Periodic(u)|` for a periodic fragment `u`.
    pub fn periodic_count(&self, u: Fragment) -> Result<usize> {
        let rep = self.text.periodic_rep(u)?;
        Ok(self.grids.periodic_count(&rep))
    }

    /// `|Periodic(u1) ∪ Periodic(u2)|` for periodic fragments with one root.
    pub fn periodic_union_count(&self, u1: Fragment, u2: Fragment) -> Result<usize> {
        let (r1, r2) = periodic::same_root_reps(&self.text, u1, u2)?;
        Ok(self.grids.periodic_union_count(&r1, &r2))
    }

    /// Distinct patterns with an occurrence starting in `f1` and ending in
    /// `f3` that occur in neither `f1 f2` nor `f2 f3`.
    pub fn three_fragments_count(&self, f1: Fragment, f2: Fragment, f3: Fragment) -> Result<usize> {
        let n = self.text.len();
        for f in [f1, f2, f3] {
            Fragment::checked(f.start, f.end, n)?;
        }
        if f1.end + 1 != f2.start || f2.end + 1 != f3.start {
            return Err(Error::Precondition("fragments must be consecutive".into()));
        }
        if f1.len() != f3.len() {
            return Err(Error::Precondition("|F1| must equal |F3|".into()));
        }
        if f2.len() < 8 * f1.len() {
            return Err(Error::Precondition("|F2| must be at least 8|F1|".into()));
        }
        Ok(self.three_fragments_unchecked(f1, f2, f3))
    }

    fn three_fragments_unchecked(&self, f1: Fragment, f2: Fragment, f3: Fragment) -> usize {
        let c = &self.nonhp_count;
        let essential = c.count(f1.start, f3.end) + c.count(f2.start, f2.end)
            - c.count(f1.start, f2.end)
            - c.count(f2.start, f3.end);
        let Some(run) = self.text.run_of(f2) else {
            return essential;
        };
        let r = run.fragment();
        let whole = Fragment::new_unchecked(f1.start, f3.end).intersect(&r).unwrap();
        let left = Fragment::new_unchecked(f1.start, f2.end).intersect(&r).unwrap();
        let right = Fragment::new_unchecked(f2.start, f3.end).intersect(&r).unwrap();
        let rep = |f| self.text.periodic_rep(f).expect("contains a periodic F2");
        let all = self.grids.periodic_count(&rep(whole));
        let halves = self.grids.periodic_union_count(&rep(left), &rep(right));
        essential + all - halves
    }

    /// Applies a batch of dictionary changes. `inserted` must be new by
    /// content and `deleted` present.
    pub fn apply_batch(&mut self, inserted: &Dictionary, deleted: &Dictionary) -> Result<()> {
        if inserted.is_empty() && deleted.is_empty() {
            return Ok(());
        }
        let text = self.text.clone();
        let del_keys: HashSet<ContentKey> =
            (0..deleted.len() as u32).map(|id| deleted.key(id)).collect();
        let mut next = self.dict.subset(|id| !del_keys.contains(&self.dict.key(id)));
        for (_, f) in inserted.iter() {
            next.push(&text, f)?;
        }
        for (sign, batch) in [(1i64, inserted), (-1, deleted)] {
            if batch.is_empty() {
                continue;
            }
            let ext = ExtensionIndex::new(text.clone(), batch);
            self.table.adjust(&ext, &self.lengths, sign);
            let (hp, _) = partition_by_periodicity(&text, batch);
            for (id, rep) in hp {
                if sign > 0 {
                    self.grids.insert(&rep);
                    self.hp_keys.insert(batch.key(id));
                } else {
                    self.grids.delete(&rep)?;
                    self.hp_keys.remove(&batch.key(id));
                }
            }
        }
        let tree = DModTree::new(&text, &next);
        self.nonhp_count = CountIndex::from_tree(
            &tree,
            &next,
            |id| !self.hp_keys.contains(&next.key(id)),
            self.max_occ,
        )?;
        self.dict = next;
        Ok(())
    }

    pub fn heap_bytes(&self) -> usize {
        self.table.heap_bytes() + self.grids.heap_bytes() + self.nonhp_count.heap_bytes()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example() -> ApproxIndex {
        let t = Arc::new(TextIndex::from_bytes("adaaaabaabbaac").unwrap());
        let d = Dictionary::from_pairs(&t, [(3, 4), (3, 6), (9, 12), (14, 14)]).unwrap();
        ApproxIndex::build(t, &d).unwrap()
    }

    #[test]
    fn example_queries_within_factor_two() {
        let a = example();
        let v = a.count_distinct(5, 12).unwrap();
        assert!((2..=4).contains(&v));
        assert_eq!(a.count_distinct(14, 14).unwrap(), 1);
        assert_eq!(a.count_distinct(1, 1).unwrap(), 0);
        assert_eq!(a.count_distinct(3, 2).unwrap(), 0);
        assert!(a.count_distinct(4, 2).is_err());
    }

    #[test]
    fn periodic_pieces() {
        let a = example();
        let t = a.text().clone();
        let (hp, rest) = partition_by_periodicity(&t, a.dictionary());
        assert_eq!(hp.iter().map(|h| h.0).collect::<Vec<_>>(), [1]);
        assert_eq!(rest, [0, 2, 3]);
        assert_eq!((hp[0].1.rank, hp[0].1.head, hp[0].1.tail), (4, 0, 0));
        let f = |x, y| Fragment::new_unchecked(x, y);
        assert_eq!(a.periodic_count(f(3, 6)).unwrap(), 1);
        assert_eq!(a.periodic_count(f(3, 5)).unwrap(), 0);
        assert_eq!(a.periodic_union_count(f(3, 6), f(3, 6)).unwrap(), 1);
        assert!(a.periodic_count(f(6, 8)).is_err());
        assert!(matches!(
            a.periodic_union_count(f(3, 6), f(5, 10)),
            Err(Error::RootMismatch(..))
        ));
        assert_eq!(a.three_fragments_count(f(2, 2), f(3, 10), f(11, 11)).unwrap(), 0);
        assert!(a.three_fragments_count(f(2, 3), f(4, 10), f(11, 12)).is_err());
    }
}
