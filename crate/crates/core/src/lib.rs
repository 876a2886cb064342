//! Counting distinct dictionary patterns inside fragments of a fixed text.
//!
//! A text `T` is preprocessed together with an *internal dictionary*: a set
//! of patterns, each given as a fragment of `T`. The central query is
//! `CountDistinct(i, j)`, the number of distinct patterns occurring in
//! `T[i..j]`. It is answered
//!
//! * 2-approximately in polylogarithmic time ([`ApproxIndex`]),
//! * exactly with a canonical-fragment table ([`CanonicalIndex`]) or a
//!   path-set decomposition ([`PathSetIndex`]), trading space for time,
//! * exactly for the dictionary of all squares ([`SquaresIndex`]),
//! * 2-approximately under pattern insertions and deletions
//!   ([`DynamicCounter`]).
//!
//! Positions are 1-based and inclusive throughout the public API.
//!
//! ```
//! use idmatch::{ApproxIndex, Dictionary, Fragment, TextIndex};
//! use std::sync::Arc;
//!
//! let text = Arc::new(TextIndex::from_bytes("adaaaabaabbaac").unwrap());
//! let dict = Dictionary::from_pairs(&text, [(3, 4), (3, 6), (9, 12), (14, 14)]).unwrap();
//! let approx = ApproxIndex::build(text, &dict).unwrap();
//! let a = approx.count_distinct(5, 12).unwrap();
//! assert!((2..=4).contains(&a));
//! ```

pub mod approx;
pub mod bench;
pub mod count_occ;
pub mod delta;
pub mod dmod_tree;
pub mod dynamic;
mod error;
pub mod exact;
pub mod geometry;
pub mod internal_pm;
pub mod io;
pub mod oracle;
pub mod squares;
pub mod text_index;
pub mod verify;

use std::fmt;

pub use approx::ApproxIndex;
pub use count_occ::CountIndex;
pub use delta::ExtensionIndex;
pub use dmod_tree::{DModTree, Dictionary, PatternId};
pub use dynamic::DynamicCounter;
pub use error::{Error, Result};
pub use exact::{CanonicalIndex, PathSetIndex};
pub use squares::SquaresIndex;
pub use text_index::{PeriodicRep, Run, Text, TextIndex};

/// The fragment `T[start..end]`, 1-based and inclusive.
///
/// A fragment is empty iff `end == start - 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fragment {
    pub start: usize,
    pub end: usize,
}

impl Fragment {
    /// Validates `1 <= start`, `end <= n` and `end + 1 >= start`.
    pub fn checked(start: usize, end: usize, n: usize) -> Result<Self> {
        if start == 0 || end > n || end + 1 < start {
            return Err(Error::InvalidFragment { start, end, n });
        }
        Ok(Fragment { start, end })
    }

    pub fn new_unchecked(start: usize, end: usize) -> Self {
        debug_assert!(start >= 1 && end + 1 >= start);
        Fragment { start, end }
    }

    /// The empty fragment just before `start`.
    pub fn empty_at(start: usize) -> Self {
        Fragment {
            start,
            end: start - 1,
        }
    }

    pub fn len(&self) -> usize {
        self.end + 1 - self.start
    }

    pub fn is_empty(&self) -> bool {
        self.end < self.start
    }

    /// The same letters read in the reversed text of length `n`.
    pub fn mirrored(&self, n: usize) -> Self {
        Fragment {
            start: n + 1 - self.end,
            end: n + 1 - self.start,
        }
    }

    pub fn contains(&self, other: &Fragment) -> bool {
        self.start <= other.start && other.end <= self.end
    }

    /// Intersection, or `None` if it is empty.
    pub fn intersect(&self, other: &Fragment) -> Option<Fragment> {
        let s = self.start.max(other.start);
        let e = self.end.min(other.end);
        (s <= e).then_some(Fragment { start: s, end: e })
    }
}

impl fmt::Display for Fragment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}..{}]", self.start, self.end)
    }
}
