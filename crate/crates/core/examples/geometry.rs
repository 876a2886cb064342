//! Colored dominance counting and the insert/delete point set.

use idmatch::geometry::{ColoredPointSet, DynamicPointSet, Quadrant, Rect};

fn main() -> anyhow::Result<()> {
    let points = [(1, 5, 0), (2, 3, 0), (4, 4, 1), (6, 1, 2), (7, 2, 2)];
    let set = ColoredPointSet::new(Quadrant::LowerLeft, points.iter().copied());
    for (x, y) in [(3, 5), (7, 4), (7, 2)] {
        println!("colors in (-inf, {x}] x (-inf, {y}]: {}", set.count_colors(x, y));
    }

    let mut dynamic = DynamicPointSet::new();
    for p in [(1, 1), (2, 5), (3, 3), (5, 2)] {
        dynamic.insert(p.0, p.1);
    }
    dynamic.delete(3, 3)?;
    let rect = Rect::new(1, 4, 1, 5);
    println!("points in {rect:?}: {}", dynamic.count(&rect));
    Ok(())
}
