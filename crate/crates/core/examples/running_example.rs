//! The running example: T = adaaaabaabbaac with D = {aa, aaaa, abba, c}.
//!
//! Prints every query mode side by side for a few windows.

use std::sync::Arc;

use idmatch::{ApproxIndex, CanonicalIndex, Dictionary, PathSetIndex, SquaresIndex, TextIndex};

fn main() -> anyhow::Result<()> {
    let text = Arc::new(TextIndex::from_bytes("adaaaabaabbaac")?);
    let dict = Dictionary::from_pairs(&text, [(3, 4), (3, 6), (9, 12), (14, 14)])?;

    let approx = ApproxIndex::build(text.clone(), &dict)?;
    let canonical = CanonicalIndex::build(text.clone(), &dict, 2)?;
    let pathset = PathSetIndex::build(text.clone(), &dict, 2)?;
    let squares = SquaresIndex::build(text.clone());

    println!("window     exact  approx  squares");
    for (i, j) in [(5, 12), (2, 6), (2, 12), (1, 14)] {
        let exact = canonical.count_distinct(i, j)?;
        assert_eq!(exact, pathset.count_distinct(i, j)?);
        println!(
            "T[{i}..{j}]{:pad$} {exact:>5}  {:>6}  {:>7}",
            "",
            approx.count_distinct(i, j)?,
            squares.count_distinct(i, j)?,
            pad = 7 - format!("{i}{j}").len()
        );
    }

    println!("\ndistinct squares of the text:");
    for (id, occ) in squares.distinct_squares() {
        println!("  {} (power {}, at {occ})", String::from_utf8_lossy(text.text().slice(*occ)), id.k);
    }
    Ok(())
}
