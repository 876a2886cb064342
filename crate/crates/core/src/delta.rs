//! Single-step changes of `CountDistinct` when a window grows by one letter.

use std::sync::Arc;

use crate::dmod_tree::{DModTree, Dictionary};
use crate::internal_pm::bounded_lcp_raw;
use crate::TextIndex;

/// Forward and reversed D-modified trees of one dictionary.
///
/// * `CountDistinct(l, r) = CountDistinct(l + 1, r) + delta_only_at_left(l, r)`
/// * `CountDistinct(l, r) = CountDistinct(l, r - 1) + delta_only_at_right(l, r)`
#[derive(Debug, Clone)]
pub struct ExtensionIndex {
    text: Arc<TextIndex>,
    fwd: DModTree,
    rev: DModTree,
}

impl ExtensionIndex {
    pub fn new(text: Arc<TextIndex>, dict: &Dictionary) -> Self {
        let fwd = DModTree::new(&text, dict);
        let rev = DModTree::reversed(&text, dict);
        ExtensionIndex { text, fwd, rev }
    }

    pub fn text(&self) -> &Arc<TextIndex> {
        &self.text
    }

    pub fn forward_tree(&self) -> &DModTree {
        &self.fwd
    }

    pub fn reversed_tree(&self) -> &DModTree {
        &self.rev
    }

    /// Patterns whose only occurrence in `T[l..r]` starts at `l`.
    #[inline]
    pub fn delta_only_at_left(&self, l: usize, r: usize) -> usize {
        if r < l {
            return 0;
        }
        only_at_start(&self.fwd, self.text.forward(), l - 1, r + 1 - l)
    }

    /// Patterns whose only occurrence in `T[l..r]` ends at `r`.
    #[inline]
    pub fn delta_only_at_right(&self, l: usize, r: usize) -> usize {
        if r < l {
            return 0;
        }
        let n = self.text.len();
        only_at_start(&self.rev, self.text.reversed(), n - r, r + 1 - l)
    }

    /// `CountDistinct(i, j)` grown letter by letter from an empty window.
    pub fn count_by_extension(&self, i: usize, j: usize) -> usize {
        (i..=j).map(|e| self.delta_only_at_right(i, e)).sum()
    }

    pub fn heap_bytes(&self) -> usize {
        self.fwd.heap_bytes() + self.rev.heap_bytes()
    }
}

/// Patterns whose only occurrence in `T[s..s+len)` (0-based) starts at `s`.
#[inline]
fn only_at_start(
    tree: &DModTree,
    idx: &crate::text_index::SuffixIndex,
    s: usize,
    len: usize,
) -> usize {
    let Some((node, longest)) = tree.longest_prefix_raw(s, len) else {
        return 0;
    };
    let total = tree.pattern_ancestors(node);
    let k = bounded_lcp_raw(idx, s, longest, s + 1, len - 1);
    if k >= longest {
        return 0;
    }
    total - tree.prefix_count_raw(s, k)
}
