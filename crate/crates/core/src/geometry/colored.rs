use std::collections::HashMap;

use super::{PointSet2D, Rect};

/// Shape of a quarterplane query. The bound coordinates come with the query.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Quadrant {
    /// `(-∞, x] × (-∞, y]`
    LowerLeft,
    /// `[x, ∞) × (-∞, y]`
    LowerRight,
    /// `(-∞, x] × [y, ∞)`
    UpperLeft,
    /// `[x, ∞) × [y, ∞)`
    UpperRight,
}

impl Quadrant {
    /// Sign flips that turn this shape into `LowerRight`.
    fn flips(self) -> (i64, i64) {
        match self {
            Quadrant::LowerRight => (1, 1),
            Quadrant::LowerLeft => (-1, 1),
            Quadrant::UpperRight => (1, -1),
            Quadrant::UpperLeft => (-1, -1),
        }
    }
}

/// Colored points answering "how many colors have a point in this
/// quarterplane".
///
/// Queries are reduced to the `[x, ∞) × (-∞, y]` shape. For that shape only
/// the staircase of each color matters (points not dominated by another point
/// of the same color with larger `x` and smaller `y`). Along a staircase both
/// coordinates increase, so the first staircase point right of `x` is the
/// lowest one. A color is counted at that point only, which takes two plain
/// dominance counts: staircase points in the region minus staircase points
/// whose predecessor is also right of `x`.
#[derive(Debug, Clone)]
pub struct ColoredPointSet {
    quadrant: Quadrant,
    stairs: PointSet2D,
    linked: PointSet2D,
    colors: usize,
    points: usize,
}

impl ColoredPointSet {
    pub fn new(quadrant: Quadrant, points: impl IntoIterator<Item = (i64, i64, u32)>) -> Self {
        let (fx, fy) = quadrant.flips();
        let mut by_color: HashMap<u32, Vec<(i64, i64)>> = HashMap::new();
        let mut total = 0;
        for (x, y, c) in points {
            by_color.entry(c).or_default().push((x * fx, y * fy));
            total += 1;
        }
        let mut stairs = Vec::new();
        let mut linked = Vec::new();
        for pts in by_color.values_mut() {
            // x descending, ties by y ascending
            pts.sort_unstable_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
            let mut kept: Vec<(i64, i64)> = Vec::new();
            let mut best = i64::MAX;
            for &(x, y) in pts.iter() {
                if y < best {
                    best = y;
                    kept.push((x, y));
                }
            }
            kept.reverse();
            for (idx, &(x, y)) in kept.iter().enumerate() {
                stairs.push((x, y));
                if idx > 0 {
                    linked.push((kept[idx - 1].0, y));
                }
            }
        }
        ColoredPointSet {
            quadrant,
            stairs: PointSet2D::new(stairs),
            linked: PointSet2D::new(linked),
            colors: by_color.len(),
            points: total,
        }
    }

    pub fn quadrant(&self) -> Quadrant {
        self.quadrant
    }

    pub fn color_count(&self) -> usize {
        self.colors
    }

    pub fn point_count(&self) -> usize {
        self.points
    }

    /// Distinct colors with a point in the quarterplane anchored at `(x, y)`.
    pub fn count_colors(&self, x: i64, y: i64) -> usize {
        let (fx, fy) = self.quadrant.flips();
        let rect = Rect::below_right(x * fx, y * fy);
        self.stairs.range_count(&rect) - self.linked.range_count(&rect)
    }

    pub fn heap_bytes(&self) -> usize {
        self.stairs.heap_bytes() + self.linked.heap_bytes()
    }
}

/// Distinct patterns having a chosen ("special") occurrence inside a window.
///
/// Each special occurrence `T[a..b]` of pattern `k` becomes the point `(a, b)`
/// colored `k`; a window `[i, j]` is the quarterplane `[i, ∞) × (-∞, j]`.
#[derive(Debug, Clone)]
pub struct SpecialOccurrences {
    colored: ColoredPointSet,
}

impl SpecialOccurrences {
    /// `occurrences` yields `(pattern color, start, end)` triples.
    pub fn new(occurrences: impl IntoIterator<Item = (u32, usize, usize)>) -> Self {
        SpecialOccurrences {
            colored: ColoredPointSet::new(
                Quadrant::LowerRight,
                occurrences
                    .into_iter()
                    .map(|(c, a, b)| (a as i64, b as i64, c)),
            ),
        }
    }

    pub fn count_distinct(&self, i: usize, j: usize) -> usize {
        if j < i {
            return 0;
        }
        self.colored.count_colors(i as i64, j as i64)
    }

    pub fn occurrence_count(&self) -> usize {
        self.colored.point_count()
    }

    pub fn heap_bytes(&self) -> usize {
        self.colored.heap_bytes()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn naive(points: &[(i64, i64, u32)], q: Quadrant, x: i64, y: i64) -> usize {
        let mut cs: Vec<u32> = points
            .iter()
            .filter(|p| match q {
                Quadrant::LowerLeft => p.0 <= x && p.1 <= y,
                Quadrant::LowerRight => p.0 >= x && p.1 <= y,
                Quadrant::UpperLeft => p.0 <= x && p.1 >= y,
                Quadrant::UpperRight => p.0 >= x && p.1 >= y,
            })
            .map(|p| p.2)
            .collect();
        cs.sort_unstable();
        cs.dedup();
        cs.len()
    }

    #[test]
    fn two_colors_lower_left() {
        let pts = [(1, 1, 0), (2, 2, 0), (3, 3, 1)];
        let cs = ColoredPointSet::new(Quadrant::LowerLeft, pts);
        assert_eq!(cs.count_colors(2, 2), 1);
        assert_eq!(cs.count_colors(3, 3), 2);
        assert_eq!(cs.count_colors(0, 10), 0);
    }

    #[test]
    fn matches_naive_on_grid() {
        let mut pts = Vec::new();
        let mut s: u64 = 7;
        for _ in 0..200 {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let x = (s >> 33) as i64 % 20;
            let y = (s >> 45) as i64 % 20;
            let c = (s >> 20) as u32 % 9;
            pts.push((x, y, c));
        }
        for q in [
            Quadrant::LowerLeft,
            Quadrant::LowerRight,
            Quadrant::UpperLeft,
            Quadrant::UpperRight,
        ] {
            let cs = ColoredPointSet::new(q, pts.iter().copied());
            for x in -1..21 {
                for y in -1..21 {
                    assert_eq!(cs.count_colors(x, y), naive(&pts, q, x, y), "{q:?} {x} {y}");
                }
            }
        }
    }
}
