use std::collections::HashMap;

use crate::dmod_tree::{Dictionary, PatternId};
use crate::geometry::{union_count, DynamicPointSet, Rect};
use crate::text_index::RootId;
use crate::{Error, PeriodicRep, Result, TextIndex};

/// Fenwick tree over ranks `1..=cap`.
#[derive(Debug, Clone)]
struct Fenwick {
    tree: Vec<i64>,
}

impl Fenwick {
    fn new(cap: usize) -> Self {
        Fenwick {
            tree: vec![0; cap + 1],
        }
    }

    fn add(&mut self, rank: usize, delta: i64) {
        let mut k = rank;
        while k < self.tree.len() {
            self.tree[k] += delta;
            k += k & k.wrapping_neg();
        }
    }

    /// Sum over ranks `1..=rank`.
    fn prefix(&self, rank: usize) -> i64 {
        let mut k = rank.min(self.tree.len() - 1);
        let mut s = 0;
        while k > 0 {
            s += self.tree[k];
            k -= k & k.wrapping_neg();
        }
        s
    }
}

/// Splits a dictionary into highly periodic patterns (`4·per <= len`), with
/// their periodic representations, and the rest.
pub fn partition_by_periodicity(
    text: &TextIndex,
    dict: &Dictionary,
) -> (Vec<(PatternId, PeriodicRep)>, Vec<PatternId>) {
    let mut hp = Vec::new();
    let mut rest = Vec::new();
    for (id, f) in dict.iter() {
        match highly_periodic_rep(text, f) {
            Some(rep) => hp.push((id, rep)),
            None => rest.push(id),
        }
    }
    (hp, rest)
}

pub(crate) fn highly_periodic_rep(text: &TextIndex, f: crate::Fragment) -> Option<PeriodicRep> {
    let run = text.run_of(f)?;
    if 4 * run.period > f.len() {
        return None;
    }
    text.periodic_rep(f).ok()
}

/// Highly periodic patterns grouped by Lyndon root and rank.
///
/// Pattern `(L, r, a, b)` is the point `(a, b)` of grid `(L, r)`; per root,
/// a Fenwick tree counts patterns by rank.
#[derive(Debug, Clone, Default)]
pub struct HpPatternGrids {
    grids: HashMap<(RootId, usize), DynamicPointSet>,
    by_rank: HashMap<RootId, Fenwick>,
    text_len: usize,
    size: usize,
}

impl HpPatternGrids {
    pub fn new(text_len: usize) -> Self {
        HpPatternGrids {
            text_len,
            ..Default::default()
        }
    }

    pub fn len(&self) -> usize {
        self.size
    }

    pub fn is_empty(&self) -> bool {
        self.size == 0
    }

    pub fn insert(&mut self, rep: &PeriodicRep) {
        self.grids
            .entry((rep.root, rep.rank))
            .or_default()
            .insert(rep.head as i64, rep.tail as i64);
        let cap = self.text_len / rep.root_len + 1;
        self.by_rank
            .entry(rep.root)
            .or_insert_with(|| Fenwick::new(cap))
            .add(rep.rank, 1);
        self.size += 1;
    }

    pub fn delete(&mut self, rep: &PeriodicRep) -> Result<()> {
        let grid = self
            .grids
            .get_mut(&(rep.root, rep.rank))
            .ok_or(Error::AbsentPoint(rep.head as i64, rep.tail as i64))?;
        grid.delete(rep.head as i64, rep.tail as i64)?;
        self.by_rank
            .get_mut(&rep.root)
            .expect("grid exists")
            .add(rep.rank, -1);
        self.size -= 1;
        Ok(())
    }

    /// Patterns with root `root` and rank at most `rank`.
    fn up_to_rank(&self, root: RootId, rank: usize) -> usize {
        self.by_rank
            .get(&root)
            .map_or(0, |f| f.prefix(rank) as usize)
    }

    /// Rectangles of grid rank `g` whose patterns occur in `u`.
    fn rects_for(u: &PeriodicRep, g: usize) -> Vec<Rect> {
        let (a, b, l) = (u.head as i64, u.tail as i64, u.root_len as i64);
        if g == u.rank {
            vec![Rect::new(i64::MIN, a, i64::MIN, b)]
        } else if g + 1 == u.rank {
            vec![
                Rect::new(i64::MIN, a, i64::MIN, l),
                Rect::new(i64::MIN, l, i64::MIN, b),
            ]
        } else if g + 1 < u.rank {
            vec![Rect::PLANE]
        } else {
            Vec::new()
        }
    }

    /// Distinct highly periodic patterns that occur in the periodic string
    /// `u` and share its period.
    pub fn periodic_count(&self, u: &PeriodicRep) -> usize {
        self.union_count(&[*u])
    }

    /// Like [`Self::periodic_count`] for the union over strings that share a
    /// Lyndon root.
    pub fn periodic_union_count(&self, u1: &PeriodicRep, u2: &PeriodicRep) -> usize {
        self.union_count(&[*u1, *u2])
    }

    fn union_count(&self, us: &[PeriodicRep]) -> usize {
        let root = us[0].root;
        debug_assert!(us.iter().all(|u| u.root == root));
        let top = us.iter().map(|u| u.rank).max().unwrap();
        let mut total = if top >= 2 {
            self.up_to_rank(root, top - 2)
        } else {
            0
        };
        for g in top.saturating_sub(1)..=top {
            if g == 0 {
                continue;
            }
            let Some(grid) = self.grids.get(&(root, g)) else {
                continue;
            };
            let rects: Vec<Rect> = us.iter().flat_map(|u| Self::rects_for(u, g)).collect();
            if rects.contains(&Rect::PLANE) {
                total += grid.len();
            } else {
                total += union_count(grid, &rects);
            }
        }
        total
    }

    pub fn heap_bytes(&self) -> usize {
        self.grids.values().map(|g| g.heap_bytes() + 32).sum::<usize>()
            + self.by_rank.values().map(|f| f.tree.len() * 8).sum::<usize>()
    }
}

/// Validates and resolves two periodic fragments that must share a root.
pub(crate) fn same_root_reps(
    text: &TextIndex,
    u1: crate::Fragment,
    u2: crate::Fragment,
) -> Result<(PeriodicRep, PeriodicRep)> {
    let r1 = text.periodic_rep(u1)?;
    let r2 = text.periodic_rep(u2)?;
    if r1.root != r2.root {
        return Err(Error::RootMismatch(u1, u2));
    }
    Ok((r1, r2))
}
