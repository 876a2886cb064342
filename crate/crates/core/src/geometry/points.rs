use super::wavelet::WaveletMatrix;
use super::{RangeCounter, Rect};

/// Static multiset of integer points answering rectangle counts in
/// `O(log n)`.
///
/// Points are sorted by `x`; the wavelet matrix stores the rank of each
/// point's `y` among the distinct `y` values.
#[derive(Debug, Clone, Default)]
pub struct PointSet2D {
    xs: Vec<i64>,
    ys: Vec<i64>,
    wm: WaveletMatrix,
}

impl PointSet2D {
    pub fn new(points: impl IntoIterator<Item = (i64, i64)>) -> Self {
        let mut pts: Vec<(i64, i64)> = points.into_iter().collect();
        pts.sort_unstable();
        let mut ys: Vec<i64> = pts.iter().map(|p| p.1).collect();
        ys.sort_unstable();
        ys.dedup();
        let ranks: Vec<u32> = pts
            .iter()
            .map(|p| ys.binary_search(&p.1).unwrap() as u32)
            .collect();
        PointSet2D {
            xs: pts.iter().map(|p| p.0).collect(),
            ys,
            wm: WaveletMatrix::new(&ranks),
        }
    }

    pub fn len(&self) -> usize {
        self.xs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.xs.is_empty()
    }

    /// Points inside the closed rectangle, with multiplicity.
    pub fn range_count(&self, rect: &Rect) -> usize {
        if rect.is_empty() || self.xs.is_empty() {
            return 0;
        }
        let l = self.xs.partition_point(|&x| x < rect.x_lo);
        let r = self.xs.partition_point(|&x| x <= rect.x_hi);
        if l >= r {
            return 0;
        }
        let lo = self.ys.partition_point(|&y| y < rect.y_lo) as u64;
        let hi = self.ys.partition_point(|&y| y <= rect.y_hi) as u64;
        self.wm.count_between(l, r, lo, hi)
    }

    pub fn heap_bytes(&self) -> usize {
        self.xs.len() * 8 + self.ys.len() * 8 + self.wm.heap_bytes()
    }
}

impl RangeCounter for PointSet2D {
    fn count(&self, rect: &Rect) -> usize {
        self.range_count(rect)
    }
}
