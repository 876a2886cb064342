use std::collections::HashMap;

use super::{PointSet2D, RangeCounter, Rect};
use crate::{Error, Result};

const BUFFER: usize = 32;

/// Logarithmic method over static point sets: level `l` holds either nothing
/// or a frozen set of `BUFFER * 2^l` points.
#[derive(Debug, Clone, Default)]
struct Forest {
    levels: Vec<(Vec<(i64, i64)>, PointSet2D)>,
    buffer: Vec<(i64, i64)>,
    len: usize,
}

impl Forest {
    fn push(&mut self, p: (i64, i64)) {
        self.buffer.push(p);
        self.len += 1;
        if self.buffer.len() >= BUFFER {
            let mut carry = std::mem::take(&mut self.buffer);
            for level in self.levels.iter_mut() {
                if level.0.is_empty() {
                    level.1 = PointSet2D::new(carry.iter().copied());
                    level.0 = carry;
                    return;
                }
                carry.append(&mut level.0);
                level.1 = PointSet2D::default();
            }
            let set = PointSet2D::new(carry.iter().copied());
            self.levels.push((carry, set));
        }
    }

    fn count(&self, rect: &Rect) -> usize {
        let frozen: usize = self
            .levels
            .iter()
            .filter(|l| !l.0.is_empty())
            .map(|l| l.1.range_count(rect))
            .sum();
        frozen
            + self
                .buffer
                .iter()
                .filter(|p| rect.contains(p.0, p.1))
                .count()
    }

    fn heap_bytes(&self) -> usize {
        self.levels
            .iter()
            .map(|l| l.0.len() * 16 + l.1.heap_bytes())
            .sum::<usize>()
            + self.buffer.len() * 16
    }
}

/// Point multiset with insertions, deletions and rectangle counts.
///
/// Deletions are recorded as points of a second forest and subtracted. When
/// deletions outnumber live points everything is rebuilt from the live
/// multiset. Updates cost `O(log² n)` amortized, queries `O(log² n)`.
#[derive(Debug, Clone, Default)]
pub struct DynamicPointSet {
    added: Forest,
    removed: Forest,
    live: HashMap<(i64, i64), usize>,
    len: usize,
}

impl DynamicPointSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_points(points: impl IntoIterator<Item = (i64, i64)>) -> Self {
        let mut s = Self::new();
        for p in points {
            s.insert(p.0, p.1);
        }
        s
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn insert(&mut self, x: i64, y: i64) {
        *self.live.entry((x, y)).or_insert(0) += 1;
        self.len += 1;
        self.added.push((x, y));
    }

    pub fn delete(&mut self, x: i64, y: i64) -> Result<()> {
        match self.live.get_mut(&(x, y)) {
            None => return Err(Error::AbsentPoint(x, y)),
            Some(c) => {
                *c -= 1;
                if *c == 0 {
                    self.live.remove(&(x, y));
                }
            }
        }
        self.len -= 1;
        self.removed.push((x, y));
        if self.removed.len > self.len.max(BUFFER) {
            self.compact();
        }
        Ok(())
    }

    fn compact(&mut self) {
        let mut added = Forest::default();
        for (&p, &c) in &self.live {
            for _ in 0..c {
                added.push(p);
            }
        }
        self.added = added;
        self.removed = Forest::default();
    }

    pub fn count(&self, rect: &Rect) -> usize {
        if rect.is_empty() {
            return 0;
        }
        self.added.count(rect) - self.removed.count(rect)
    }

    pub fn heap_bytes(&self) -> usize {
        self.added.heap_bytes() + self.removed.heap_bytes() + self.live.len() * 24
    }
}

impl RangeCounter for DynamicPointSet {
    fn count(&self, rect: &Rect) -> usize {
        DynamicPointSet::count(self, rect)
    }
}
