//! Distinct squares in windows of a Fibonacci word.

use std::sync::Arc;

use idmatch::{SquaresIndex, TextIndex};

fn fibonacci(n: usize) -> Vec<u8> {
    let (mut a, mut b) = (b"a".to_vec(), b"ab".to_vec());
    while b.len() < n {
        let next = [b.as_slice(), a.as_slice()].concat();
        a = std::mem::replace(&mut b, next);
    }
    b.truncate(n);
    b
}

fn main() -> anyhow::Result<()> {
    let n = 89;
    let word = fibonacci(n);
    let text = Arc::new(TextIndex::from_bytes(word.clone())?);
    let squares = SquaresIndex::build(text.clone());
    println!("{}", String::from_utf8_lossy(&word));
    println!(
        "{} runs, {} distinct squares, {} boundary occurrences",
        text.runs().len(),
        squares.distinct_squares().len(),
        squares.boundary_size()
    );
    for len in [8, 13, 21, 34, 55, 89] {
        println!("T[1..{len}] has {} distinct squares", squares.count_distinct(1, len)?);
    }
    Ok(())
}
