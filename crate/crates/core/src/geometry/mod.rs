//! Orthogonal range counting in the plane.
//!
//! Static rectangle counting ([`PointSet2D`]), distinct-color counting in
//! quarterplanes ([`ColoredPointSet`]), a dynamic counter
//! ([`DynamicPointSet`]) and counting over unions of a few rectangles
//! ([`union_count`]).

mod colored;
mod dynamic;
mod points;
pub(crate) mod wavelet;

pub use colored::{ColoredPointSet, Quadrant, SpecialOccurrences};
pub use dynamic::DynamicPointSet;
pub use points::PointSet2D;

/// Closed axis-aligned rectangle. Infinite sides use `i64::MIN` / `i64::MAX`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rect {
    pub x_lo: i64,
    pub x_hi: i64,
    pub y_lo: i64,
    pub y_hi: i64,
}

impl Rect {
    pub const PLANE: Rect = Rect {
        x_lo: i64::MIN,
        x_hi: i64::MAX,
        y_lo: i64::MIN,
        y_hi: i64::MAX,
    };

    pub fn new(x_lo: i64, x_hi: i64, y_lo: i64, y_hi: i64) -> Self {
        Rect {
            x_lo,
            x_hi,
            y_lo,
            y_hi,
        }
    }

    /// `(-∞, x] × (-∞, y]`
    pub fn below_left(x: i64, y: i64) -> Self {
        Rect::new(i64::MIN, x, i64::MIN, y)
    }

    /// `[x, ∞) × (-∞, y]`
    pub fn below_right(x: i64, y: i64) -> Self {
        Rect::new(x, i64::MAX, i64::MIN, y)
    }

    pub fn is_empty(&self) -> bool {
        self.x_lo > self.x_hi || self.y_lo > self.y_hi
    }

    pub fn contains(&self, x: i64, y: i64) -> bool {
        (self.x_lo..=self.x_hi).contains(&x) && (self.y_lo..=self.y_hi).contains(&y)
    }

    pub fn intersect(&self, other: &Rect) -> Rect {
        Rect {
            x_lo: self.x_lo.max(other.x_lo),
            x_hi: self.x_hi.min(other.x_hi),
            y_lo: self.y_lo.max(other.y_lo),
            y_hi: self.y_hi.min(other.y_hi),
        }
    }
}

/// Anything that can count the points of a fixed multiset inside a rectangle.
pub trait RangeCounter {
    fn count(&self, rect: &Rect) -> usize;
}

/// Number of points lying in at least one of `rects`, by inclusion–exclusion.
///
/// Cost is `2^k` range counts for `k` rectangles; callers pass at most three.
pub fn union_count<C: RangeCounter + ?Sized>(counter: &C, rects: &[Rect]) -> usize {
    let rects: Vec<Rect> = rects.iter().copied().filter(|r| !r.is_empty()).collect();
    let k = rects.len();
    debug_assert!(k <= 6, "union_count is exponential in the number of rectangles");
    let mut total: i64 = 0;
    for mask in 1u32..(1 << k) {
        let mut acc = Rect::PLANE;
        for (bit, r) in rects.iter().enumerate() {
            if mask & (1 << bit) != 0 {
                acc = acc.intersect(r);
            }
        }
        if acc.is_empty() {
            continue;
        }
        let c = counter.count(&acc) as i64;
        if mask.count_ones() % 2 == 1 {
            total += c;
        } else {
            total -= c;
        }
    }
    total as usize
}
