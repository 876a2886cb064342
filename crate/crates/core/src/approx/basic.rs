use num_bigint::BigUint;

use crate::delta::ExtensionIndex;

/// The distinct values `⌊(10/9)^p⌋ <= n`, ascending.
#[derive(Debug, Clone)]
pub struct BasicLengths {
    lengths: Vec<usize>,
    /// `floor_index[len]` = index of the largest basic length `<= len`.
    floor_index: Vec<u32>,
}

impl BasicLengths {
    pub fn new(n: usize) -> Self {
        let mut lengths: Vec<usize> = Vec::new();
        let (mut num, mut den) = (BigUint::from(1u32), BigUint::from(1u32));
        let cap = BigUint::from(n);
        loop {
            let q = &num / &den;
            if q > cap {
                break;
            }
            let v: usize = q.try_into().expect("bounded by n");
            if lengths.last() != Some(&v) {
                lengths.push(v);
            }
            num *= 10u32;
            den *= 9u32;
        }
        let mut floor_index = vec![0u32; n + 1];
        let mut k = 0;
        for (len, slot) in floor_index.iter_mut().enumerate().skip(1) {
            while k + 1 < lengths.len() && lengths[k + 1] <= len {
                k += 1;
            }
            *slot = k as u32;
        }
        BasicLengths {
            lengths,
            floor_index,
        }
    }

    pub fn lengths(&self) -> &[usize] {
        &self.lengths
    }

    pub fn len(&self) -> usize {
        self.lengths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lengths.is_empty()
    }

    /// Index of `len` if it is a basic length.
    pub fn index_of(&self, len: usize) -> Option<usize> {
        let k = *self.floor_index.get(len)? as usize;
        (len >= 1 && self.lengths[k] == len).then_some(k)
    }

    /// Largest basic length strictly below `len`, for `len >= 2`.
    pub fn largest_below(&self, len: usize) -> Option<usize> {
        if len < 2 || len > self.floor_index.len() {
            return None;
        }
        Some(self.lengths[self.floor_index[len - 1] as usize])
    }
}

/// Exact `CountDistinct` of every basic fragment.
#[derive(Debug, Clone)]
pub struct BasicFragmentTable {
    /// `rows[k][s - 1]` for the window of length `lengths[k]` starting at `s`.
    rows: Vec<Vec<u32>>,
}

impl BasicFragmentTable {
    pub fn build(ext: &ExtensionIndex, lengths: &BasicLengths) -> Self {
        let n = ext.text().len();
        let rows = lengths
            .lengths()
            .iter()
            .map(|&len| {
                let mut row = Vec::with_capacity(n + 1 - len);
                slide(ext, len, |c| row.push(c as u32));
                row
            })
            .collect();
        BasicFragmentTable { rows }
    }

    pub fn get(&self, len_index: usize, start: usize) -> usize {
        self.rows[len_index][start - 1] as usize
    }

    /// Adds `sign` times the window counts of another dictionary.
    pub fn adjust(&mut self, ext: &ExtensionIndex, lengths: &BasicLengths, sign: i64) {
        for (row, &len) in self.rows.iter_mut().zip(lengths.lengths()) {
            let mut s = 0;
            slide(ext, len, |c| {
                let v = row[s] as i64 + sign * c as i64;
                debug_assert!(v >= 0);
                row[s] = v as u32;
                s += 1;
            });
        }
    }

    pub fn heap_bytes(&self) -> usize {
        self.rows.iter().map(|r| r.len() * 4).sum()
    }
}

/// Calls `emit` with `CountDistinct(s, s + len - 1)` for `s = 1, 2, ...`.
fn slide(ext: &ExtensionIndex, len: usize, mut emit: impl FnMut(usize)) {
    let n = ext.text().len();
    let mut cur = ext.count_by_extension(1, len);
    emit(cur);
    for s in 1..=n - len {
        cur += ext.delta_only_at_right(s, s + len);
        cur -= ext.delta_only_at_left(s, s + len);
        emit(cur);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lengths_are_deduplicated_floors() {
        let b = BasicLengths::new(30);
        assert_eq!(
            b.lengths(),
            [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 15, 17, 19, 21, 23, 26, 29]
        );
        assert_eq!(b.index_of(15), Some(13));
        assert_eq!(b.index_of(14), None);
        assert_eq!(b.largest_below(14), Some(13));
        assert_eq!(b.largest_below(15), Some(13));
        assert_eq!(b.largest_below(30), Some(29));
        assert_eq!(b.largest_below(1), None);
    }
}
