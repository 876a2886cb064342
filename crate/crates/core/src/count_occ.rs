//! `Count(i, j)`: occurrences of dictionary patterns inside a window, with
//! multiplicity.
//!
//! Every occurrence `T[a..b]` is stored as the point `(a, b)`, so space is
//! linear in the number of occurrences. A build-time limit guards against
//! dictionaries whose occurrence count explodes.

use crate::dmod_tree::{DModTree, Dictionary, PatternId};
use crate::geometry::{PointSet2D, Rect};
use crate::{Error, Fragment, Result, TextIndex};

pub const DEFAULT_MAX_OCC: usize = 10_000_000;

#[derive(Debug, Clone)]
pub struct CountIndex {
    points: PointSet2D,
}

impl CountIndex {
    pub fn build(text: &TextIndex, dict: &Dictionary) -> Result<Self> {
        Self::with_limit(text, dict, DEFAULT_MAX_OCC)
    }

    pub fn with_limit(text: &TextIndex, dict: &Dictionary, max_occ: usize) -> Result<Self> {
        Self::from_tree(&DModTree::new(text, dict), dict, |_| true, max_occ)
    }

    /// Index over the patterns of `dict` selected by `keep`.
    pub fn from_tree(
        tree: &DModTree,
        dict: &Dictionary,
        keep: impl Fn(PatternId) -> bool,
        max_occ: usize,
    ) -> Result<Self> {
        let ids: Vec<PatternId> = (0..dict.len() as PatternId).filter(|&id| keep(id)).collect();
        let total: usize = ids.iter().map(|&id| tree.occurrence_count(id)).sum();
        if total > max_occ {
            return Err(Error::TooManyOccurrences {
                count: total,
                limit: max_occ,
            });
        }
        let mut pts = Vec::with_capacity(total);
        for id in ids {
            let len = dict.get(id).len() as i64;
            pts.extend(
                tree.occurrences(id)
                    .into_iter()
                    .map(|a| (a as i64, a as i64 + len - 1)),
            );
        }
        Ok(CountIndex {
            points: PointSet2D::new(pts),
        })
    }

    pub fn total(&self) -> usize {
        self.points.len()
    }

    /// Occurrences lying inside `T[i..j]`; 0 for an empty window.
    pub fn count(&self, i: usize, j: usize) -> usize {
        if j < i {
            return 0;
        }
        self.points
            .range_count(&Rect::below_right(i as i64, j as i64))
    }

    pub fn count_in(&self, f: Fragment) -> usize {
        self.count(f.start, f.end)
    }

    pub fn heap_bytes(&self) -> usize {
        self.points.heap_bytes()
    }
}
