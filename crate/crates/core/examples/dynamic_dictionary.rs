//! Inserting and deleting patterns between queries.

use std::sync::Arc;

use idmatch::{Dictionary, DynamicCounter, Fragment, TextIndex};

fn main() -> anyhow::Result<()> {
    let text = Arc::new(TextIndex::from_bytes("adaaaabaabbaac")?);
    let dict = Dictionary::from_pairs(&text, [(3, 4), (9, 12)])?;
    let mut counter = DynamicCounter::new(text, &dict, 2)?;
    let show = |c: &DynamicCounter, what: &str| -> anyhow::Result<()> {
        println!(
            "{what:<22} pending {} rebuilds {} answer(2, 12) = {}",
            c.pending(),
            c.rebuild_count(),
            c.count_distinct(2, 12)?
        );
        Ok(())
    };
    show(&counter, "start")?;
    counter.insert_pattern(Fragment::new_unchecked(14, 14))?;
    show(&counter, "insert c")?;
    counter.insert_pattern(Fragment::new_unchecked(3, 6))?;
    show(&counter, "insert aaaa")?;
    counter.delete_pattern(Fragment::new_unchecked(4, 5))?;
    show(&counter, "delete aa")?;
    if let Err(e) = counter.delete_pattern(Fragment::new_unchecked(1, 2)) {
        println!("delete ad: {e}");
    }
    Ok(())
}
