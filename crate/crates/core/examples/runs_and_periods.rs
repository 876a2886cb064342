//! Runs, periods, Lyndon roots and periodic representations.

use idmatch::{Fragment, TextIndex};

fn main() -> anyhow::Result<()> {
    let word = std::env::args().nth(1).unwrap_or_else(|| "abaababaabaababaababa".into());
    let text = TextIndex::from_bytes(word.as_bytes())?;
    println!("text: {word} (n = {})", text.len());

    println!("\nruns:");
    for run in text.runs() {
        println!(
            "  {} period {} exponent {:.2} root {}",
            run.fragment(),
            run.period,
            run.exponent(),
            String::from_utf8_lossy(text.text().slice(run.root))
        );
    }

    let n = text.len();
    let f = Fragment::new_unchecked(1, n.min(8));
    println!("\nper({f}) = {}", text.period(f));
    match text.periodic_rep(f) {
        Ok(rep) => println!(
            "{f} = head {} + {} x root + tail {} (root length {})",
            rep.head, rep.rank, rep.tail, rep.root_len
        ),
        Err(e) => println!("{e}"),
    }
    println!("lce(1, 4) = {}", text.lce(1, 4.min(n))?);
    Ok(())
}
