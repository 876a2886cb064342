//! 2-approximate counting on a random text, checked against brute force.

use std::sync::Arc;

use idmatch::oracle::naive_count_distinct;
use idmatch::verify::{random_dictionary, random_text};
use idmatch::{ApproxIndex, Dictionary, TextIndex};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() -> anyhow::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let n = 1_500;
    let raw_text = random_text(&mut rng, n, 2);
    let raw_dict = random_dictionary(&mut rng, n, 200);
    let text = Arc::new(TextIndex::from_bytes(raw_text.clone())?);
    let dict = Dictionary::new(&text, raw_dict.iter().copied())?;
    let index = ApproxIndex::build(text, &dict)?;
    println!("n = {n}, {} distinct patterns, {} basic lengths", dict.len(), index.basic_lengths().lengths().len());

    let mut worst = 1.0f64;
    for _ in 0..20 {
        let i = rng.gen_range(1..=n);
        let j = rng.gen_range(i..=n);
        let exact = naive_count_distinct(&raw_text, &raw_dict, i, j)?;
        let approx = index.count_distinct(i, j)?;
        if exact > 0 {
            worst = worst.max(approx as f64 / exact as f64);
        }
        println!("T[{i}..{j}]: exact {exact}, approx {approx}");
    }
    println!("worst ratio {worst:.3}");
    Ok(())
}
