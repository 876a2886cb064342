use std::sync::Arc;

use rayon::prelude::*;

use crate::delta::ExtensionIndex;
use crate::dmod_tree::Dictionary;
use crate::{Error, Result, TextIndex};

/// Exact `CountDistinct` stored for every canonical fragment
/// `T[c1·m+1 .. c2·m]`, extended letter by letter at query time.
///
/// Space is `O((n/m)²)`, a query costs at most `2(m-1)` single-letter
/// extensions.
#[derive(Debug, Clone)]
pub struct CanonicalIndex {
    ext: ExtensionIndex,
    m: usize,
    blocks: usize,
    /// Row `c1` holds `c2 = c1+1 ..= blocks`.
    table: Vec<u32>,
}

impl CanonicalIndex {
    pub fn build(text: Arc<TextIndex>, dict: &Dictionary, m: usize) -> Result<Self> {
        Self::from_extension(ExtensionIndex::new(text, dict), m)
    }

    pub fn from_extension(ext: ExtensionIndex, m: usize) -> Result<Self> {
        let n = ext.text().len();
        if m == 0 || m > n {
            return Err(Error::Precondition(format!(
                "grid step m = {m} must lie in 1..={n}"
            )));
        }
        let blocks = n / m;
        let rows: Vec<Vec<u32>> = (0..blocks)
            .into_par_iter()
            .map(|c1| {
                let s = c1 * m + 1;
                let mut row = Vec::with_capacity(blocks - c1);
                let mut cur = 0;
                for e in s..=blocks * m {
                    cur += ext.delta_only_at_right(s, e);
                    if e % m == 0 {
                        row.push(cur as u32);
                    }
                }
                row
            })
            .collect();
        let table = rows.concat();
        Ok(CanonicalIndex {
            ext,
            m,
            blocks,
            table,
        })
    }

    pub fn step(&self) -> usize {
        self.m
    }

    fn slot(&self, c1: usize, c2: usize) -> usize {
        c1 * self.blocks - c1 * c1.saturating_sub(1) / 2 + (c2 - c1 - 1)
    }

    /// Stored count for `T[c1·m+1 .. c2·m]`, `c1 < c2 <= n/m`.
    pub fn entry(&self, c1: usize, c2: usize) -> usize {
        self.table[self.slot(c1, c2)] as usize
    }

    /// Exact `CountDistinct(i, j)`; an empty window (`j = i - 1`) gives 0.
    pub fn count_distinct(&self, i: usize, j: usize) -> Result<usize> {
        let n = self.ext.text().len();
        if i == 0 || j > n || j + 1 < i {
            return Err(Error::InvalidFragment { start: i, end: j, n });
        }
        let m = self.m;
        let c1 = (i - 1).div_ceil(m);
        let c2 = j / m;
        if c1 >= c2 {
            return Ok(self.ext.count_by_extension(i, j));
        }
        let mut cur = self.entry(c1, c2);
        let (mut s, mut e) = (c1 * m + 1, c2 * m);
        while s > i {
            s -= 1;
            cur += self.ext.delta_only_at_left(s, e);
        }
        while e < j {
            e += 1;
            cur += self.ext.delta_only_at_right(s, e);
        }
        Ok(cur)
    }

    /// Bytes held by the canonical table.
    pub fn table_bytes(&self) -> usize {
        self.table.len() * 4
    }

    pub fn heap_bytes(&self) -> usize {
        self.table_bytes() + self.ext.heap_bytes()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn example_values() {
        let t = Arc::new(TextIndex::from_bytes("adaaaabaabbaac").unwrap());
        let d = Dictionary::from_pairs(&t, [(3, 4), (3, 6), (9, 12), (14, 14)]).unwrap();
        let c = CanonicalIndex::build(t.clone(), &d, 4).unwrap();
        // T[5..12] is canonical for m = 4
        assert_eq!(c.entry(1, 3), 2);
        assert_eq!(c.count_distinct(5, 12).unwrap(), 2);
        assert_eq!(c.count_distinct(2, 6).unwrap(), 2);
        assert_eq!(c.count_distinct(2, 12).unwrap(), 3);
        assert_eq!(c.count_distinct(3, 2).unwrap(), 0);
        let whole = CanonicalIndex::build(t.clone(), &d, 14).unwrap();
        assert_eq!(whole.table_bytes(), 4);
        assert!(CanonicalIndex::build(t, &d, 0).is_err());
    }
}
