//! Exact counting with the canonical table and with path-sets for several m.

use std::sync::Arc;
use std::time::Instant;

use idmatch::verify::{random_dictionary, random_text};
use idmatch::{CanonicalIndex, Dictionary, PathSetIndex, TextIndex};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() -> anyhow::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let n = 4_000;
    let text = Arc::new(TextIndex::from_bytes(random_text(&mut rng, n, 3))?);
    let dict = Dictionary::new(&text, random_dictionary(&mut rng, n, 400))?;
    let windows: Vec<(usize, usize)> = (0..500)
        .map(|_| {
            let i = rng.gen_range(1..=n);
            (i, rng.gen_range(i..=n))
        })
        .collect();

    println!("{:>5} {:>14} {:>12} {:>9} {:>11}", "m", "table bytes", "query us", "path-sets", "query us");
    for m in [8, 32, 128, 512] {
        let canonical = CanonicalIndex::build(text.clone(), &dict, m)?;
        let pathset = PathSetIndex::build(text.clone(), &dict, m)?;
        let (mut tc, mut tp) = (0.0, 0.0);
        for &(i, j) in &windows {
            let t = Instant::now();
            let a = canonical.count_distinct(i, j)?;
            tc += t.elapsed().as_secs_f64();
            let t = Instant::now();
            let b = pathset.count_distinct(i, j)?;
            tp += t.elapsed().as_secs_f64();
            assert_eq!(a, b);
        }
        let per = |s: f64| s * 1e6 / windows.len() as f64;
        println!(
            "{m:>5} {:>14} {:>12.2} {:>9} {:>11.2}",
            canonical.table_bytes(),
            per(tc),
            pathset.family().sets.len(),
            per(tp)
        );
    }
    Ok(())
}
