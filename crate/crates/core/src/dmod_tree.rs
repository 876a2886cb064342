//! Dictionaries and the D-modified suffix tree.
//!
//! The tree is the trie of all patterns and all suffixes, contracted so that
//! every non-root node spells a pattern or a suffix. Node ids follow preorder,
//! so a subtree is a contiguous id range.

use std::collections::HashMap;

use crate::text_index::{ContentKey, SuffixIndex};
use crate::{Error, Fragment, Result, TextIndex};

pub type PatternId = u32;
pub type NodeId = u32;

const NONE: u32 = u32::MAX;

/// A set of patterns given as fragments of the text, deduplicated by content.
#[derive(Debug, Clone, Default)]
pub struct Dictionary {
    patterns: Vec<Fragment>,
    keys: Vec<ContentKey>,
    by_key: HashMap<ContentKey, PatternId>,
}

impl Dictionary {
    pub fn new(text: &TextIndex, fragments: impl IntoIterator<Item = Fragment>) -> Result<Self> {
        let mut dict = Dictionary::default();
        for f in fragments {
            dict.push(text, f)?;
        }
        Ok(dict)
    }

    /// Patterns as `(start, end)` pairs.
    pub fn from_pairs(
        text: &TextIndex,
        pairs: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let mut dict = Dictionary::default();
        for (a, b) in pairs {
            let f = text.fragment(a, b)?;
            dict.push(text, f)?;
        }
        Ok(dict)
    }

    /// Adds a pattern unless an equal string is already present. Returns its id.
    pub fn push(&mut self, text: &TextIndex, f: Fragment) -> Result<PatternId> {
        let f = Fragment::checked(f.start, f.end, text.len())?;
        if f.is_empty() {
            return Err(Error::EmptyPattern);
        }
        let key = text.content_key(f);
        if let Some(&id) = self.by_key.get(&key) {
            return Ok(id);
        }
        let id = self.patterns.len() as PatternId;
        self.patterns.push(f);
        self.keys.push(key);
        self.by_key.insert(key, id);
        Ok(id)
    }

    pub fn len(&self) -> usize {
        self.patterns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.patterns.is_empty()
    }

    pub fn get(&self, id: PatternId) -> Fragment {
        self.patterns[id as usize]
    }

    pub fn patterns(&self) -> &[Fragment] {
        &self.patterns
    }

    pub fn key(&self, id: PatternId) -> ContentKey {
        self.keys[id as usize]
    }

    pub fn id_of(&self, key: ContentKey) -> Option<PatternId> {
        self.by_key.get(&key).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (PatternId, Fragment)> + '_ {
        self.patterns
            .iter()
            .enumerate()
            .map(|(k, &f)| (k as PatternId, f))
    }

    /// A new dictionary holding the selected patterns, renumbered.
    pub fn subset(&self, keep: impl Fn(PatternId) -> bool) -> Dictionary {
        let mut out = Dictionary::default();
        for (id, f) in self.iter() {
            if keep(id) {
                let nid = out.patterns.len() as PatternId;
                out.patterns.push(f);
                out.keys.push(self.keys[id as usize]);
                out.by_key.insert(self.keys[id as usize], nid);
            }
        }
        out
    }
}

/// The D-modified suffix tree over one text direction.
#[derive(Debug, Clone)]
pub struct DModTree {
    n: usize,
    parent: Vec<NodeId>,
    weight: Vec<u32>,
    pattern: Vec<PatternId>,
    suffix: Vec<u32>,
    count: Vec<u32>,
    nearest: Vec<NodeId>,
    subtree_end: Vec<NodeId>,
    /// `up[k][v]` = the `2^k`-th ancestor, saturating at the root.
    up: Vec<Vec<NodeId>>,
    leaf_of: Vec<NodeId>,
    node_of_pattern: Vec<NodeId>,
}

struct Entry {
    key: ContentKey,
    witness: usize,
    pattern: PatternId,
    suffix: u32,
}

impl DModTree {
    /// Tree over the forward text.
    pub fn new(text: &TextIndex, dict: &Dictionary) -> Self {
        let pats = dict.iter().map(|(id, f)| (id, f.start - 1, f.len()));
        Self::build(text.forward(), pats.collect())
    }

    /// Tree over the reversed text, with every pattern reversed.
    pub fn reversed(text: &TextIndex, dict: &Dictionary) -> Self {
        let n = text.len();
        let pats = dict.iter().map(|(id, f)| {
            let m = f.mirrored(n);
            (id, m.start - 1, m.len())
        });
        Self::build(text.reversed(), pats.collect())
    }

    /// `patterns` holds `(id, 0-based start, length)`, distinct by content.
    fn build(idx: &SuffixIndex, patterns: Vec<(PatternId, usize, usize)>) -> Self {
        let n = idx.len();
        let mut entries: Vec<Entry> = Vec::with_capacity(n + patterns.len());
        for pos in 0..n {
            entries.push(Entry {
                key: (idx.rank()[pos], (n - pos) as u32),
                witness: pos,
                pattern: NONE,
                suffix: pos as u32,
            });
        }
        for &(id, pos, len) in &patterns {
            entries.push(Entry {
                key: idx.content_key(pos, len),
                witness: pos,
                pattern: id,
                suffix: NONE,
            });
        }
        entries.sort_unstable_by_key(|e| e.key);

        let cap = entries.len() + 1;
        let mut t = DModTree {
            n,
            parent: Vec::with_capacity(cap),
            weight: Vec::with_capacity(cap),
            pattern: Vec::with_capacity(cap),
            suffix: Vec::with_capacity(cap),
            count: Vec::with_capacity(cap),
            nearest: Vec::with_capacity(cap),
            subtree_end: Vec::new(),
            up: Vec::new(),
            leaf_of: vec![NONE; n],
            node_of_pattern: vec![NONE; patterns.len()],
        };
        let mut witness = Vec::with_capacity(cap);
        t.parent.push(0);
        t.weight.push(0);
        t.pattern.push(NONE);
        t.suffix.push(NONE);
        t.count.push(0);
        t.nearest.push(NONE);
        witness.push(0usize);

        let mut stack: Vec<NodeId> = vec![0];
        let mut end = vec![0 as NodeId; cap];
        let mut k = 0;
        while k < entries.len() {
            let key = entries[k].key;
            let (mut pat, mut suf) = (NONE, NONE);
            let w = entries[k].witness;
            while k < entries.len() && entries[k].key == key {
                if entries[k].pattern != NONE {
                    pat = entries[k].pattern;
                }
                if entries[k].suffix != NONE {
                    suf = entries[k].suffix;
                }
                k += 1;
            }
            let len = key.1;
            loop {
                let top = *stack.last().unwrap();
                if top == 0 || idx.lce(witness[top as usize], w) as u32 >= t.weight[top as usize] {
                    break;
                }
                end[top as usize] = t.parent.len() as NodeId;
                stack.pop();
            }
            let par = *stack.last().unwrap();
            let v = t.parent.len() as NodeId;
            t.parent.push(par);
            t.weight.push(len);
            t.pattern.push(pat);
            t.suffix.push(suf);
            let is_pat = pat != NONE;
            t.count.push(t.count[par as usize] + u32::from(is_pat));
            t.nearest
                .push(if is_pat { v } else { t.nearest[par as usize] });
            witness.push(w);
            if suf != NONE {
                t.leaf_of[suf as usize] = v;
            }
            if is_pat {
                t.node_of_pattern[pat as usize] = v;
            }
            stack.push(v);
        }
        let total = t.parent.len();
        for v in stack {
            end[v as usize] = total as NodeId;
        }
        end.truncate(total);
        t.subtree_end = end;

        let mut up = vec![t.parent.clone()];
        let mut span = 1usize;
        while span < n.max(1) {
            let prev = up.last().unwrap();
            let next: Vec<NodeId> = prev.iter().map(|&a| prev[a as usize]).collect();
            up.push(next);
            span *= 2;
        }
        t.up = up;
        t
    }

    pub fn text_len(&self) -> usize {
        self.n
    }

    pub fn node_count(&self) -> usize {
        self.parent.len()
    }

    pub fn root(&self) -> NodeId {
        0
    }

    pub fn parent(&self, v: NodeId) -> Option<NodeId> {
        (v != 0).then(|| self.parent[v as usize])
    }

    pub fn weight(&self, v: NodeId) -> usize {
        self.weight[v as usize] as usize
    }

    pub fn pattern_at(&self, v: NodeId) -> Option<PatternId> {
        let p = self.pattern[v as usize];
        (p != NONE).then_some(p)
    }

    /// 1-based start of the suffix ending at this node, if any.
    pub fn suffix_at(&self, v: NodeId) -> Option<usize> {
        let s = self.suffix[v as usize];
        (s != NONE).then(|| s as usize + 1)
    }

    /// Pattern nodes on the path from the root to `v`, inclusive.
    pub fn pattern_ancestors(&self, v: NodeId) -> usize {
        self.count[v as usize] as usize
    }

    /// Deepest pattern node on the path from the root to `v`, inclusive.
    pub fn nearest_pattern(&self, v: NodeId) -> Option<NodeId> {
        let p = self.nearest[v as usize];
        (p != NONE).then_some(p)
    }

    pub fn node_of_pattern(&self, id: PatternId) -> NodeId {
        self.node_of_pattern[id as usize]
    }

    /// Preorder id one past the last node of `v`'s subtree.
    pub fn subtree_end(&self, v: NodeId) -> NodeId {
        self.subtree_end[v as usize]
    }

    pub fn children(&self, v: NodeId) -> Vec<NodeId> {
        let mut out = Vec::new();
        let mut c = v + 1;
        while c < self.subtree_end[v as usize] {
            out.push(c);
            c = self.subtree_end[c as usize];
        }
        out
    }

    /// Node of the suffix starting at 1-based `pos`.
    pub fn leaf(&self, pos: usize) -> NodeId {
        self.leaf_of[pos - 1]
    }

    /// Top-most ancestor of `v` (possibly `v`) with weight at least `depth`.
    pub fn weighted_ancestor(&self, v: NodeId, depth: usize) -> Result<NodeId> {
        let w = self.weight(v);
        if depth == 0 || depth > w {
            return Err(Error::DepthTooLarge { depth, weight: w });
        }
        Ok(self.climb(v, depth as u32))
    }

    #[inline]
    fn climb(&self, mut v: NodeId, depth: u32) -> NodeId {
        for level in self.up.iter().rev() {
            let a = level[v as usize];
            if self.weight[a as usize] >= depth {
                v = a;
            }
        }
        v
    }

    /// Deepest node whose string is a prefix of `T[pos..pos+len)` (0-based).
    #[inline]
    fn prefix_locus(&self, pos0: usize, len: usize) -> NodeId {
        let leaf = self.leaf_of[pos0];
        if len == 0 {
            return 0;
        }
        let u = self.climb(leaf, len as u32);
        if self.weight[u as usize] as usize == len {
            u
        } else {
            self.parent[u as usize]
        }
    }

    /// Number of patterns that are prefixes of `T[pos0..pos0+len)`, 0-based.
    #[inline]
    pub(crate) fn prefix_count_raw(&self, pos0: usize, len: usize) -> usize {
        if len == 0 {
            return 0;
        }
        let leaf = self.leaf_of[pos0];
        let c = self.count[leaf as usize];
        if c == 0 {
            return 0;
        }
        let np = self.nearest[leaf as usize];
        if self.weight[np as usize] as usize <= len {
            return c as usize;
        }
        self.count[self.prefix_locus(pos0, len) as usize] as usize
    }

    /// Longest pattern that is a prefix of `T[pos0..pos0+len)`, 0-based.
    #[inline]
    pub(crate) fn longest_prefix_raw(&self, pos0: usize, len: usize) -> Option<(NodeId, usize)> {
        if len == 0 {
            return None;
        }
        let leaf = self.leaf_of[pos0];
        let np = self.nearest[leaf as usize];
        if np == NONE {
            return None;
        }
        let np = if self.weight[np as usize] as usize <= len {
            np
        } else {
            self.nearest[self.prefix_locus(pos0, len) as usize]
        };
        (np != NONE).then(|| (np, self.weight[np as usize] as usize))
    }

    /// Number of distinct patterns that are prefixes of `T[l..l+len-1]`.
    pub fn pattern_prefix_count(&self, l: usize, len: usize) -> usize {
        if len == 0 {
            return 0;
        }
        self.prefix_count_raw(l - 1, len)
    }

    /// Longest pattern that is a prefix of `T[l..r]`, with its length.
    pub fn pref_d(&self, l: usize, r: usize) -> Option<(PatternId, usize)> {
        if r < l {
            return None;
        }
        self.longest_prefix_raw(l - 1, r + 1 - l)
            .map(|(v, len)| (self.pattern[v as usize], len))
    }

    /// Sorted 1-based start positions of every occurrence of a pattern.
    pub fn occurrences(&self, id: PatternId) -> Vec<usize> {
        let v = self.node_of_pattern[id as usize] as usize;
        let mut out: Vec<usize> = (v..self.subtree_end[v] as usize)
            .filter_map(|u| self.suffix_at(u as NodeId))
            .collect();
        out.sort_unstable();
        out
    }

    /// Number of occurrences of a pattern.
    pub fn occurrence_count(&self, id: PatternId) -> usize {
        let v = self.node_of_pattern[id as usize] as usize;
        (v..self.subtree_end[v] as usize)
            .filter(|&u| self.suffix[u] != NONE)
            .count()
    }

    /// Every occurrence of every pattern, grouped by pattern id.
    pub fn enumerate_occurrences(&self) -> Vec<(PatternId, Fragment)> {
        let mut out = Vec::new();
        for id in 0..self.node_of_pattern.len() as PatternId {
            let len = self.weight(self.node_of_pattern(id));
            for s in self.occurrences(id) {
                out.push((id, Fragment::new_unchecked(s, s + len - 1)));
            }
        }
        out
    }

    pub fn heap_bytes(&self) -> usize {
        let v = self.parent.len();
        v * 4 * 8 + self.up.len() * v * 4 + self.n * 4 + self.node_of_pattern.len() * 4
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example() -> (TextIndex, Dictionary) {
        let t = TextIndex::from_bytes("adaaaabaabbaac").unwrap();
        let d = Dictionary::from_pairs(&t, [(3, 4), (3, 6), (9, 12), (14, 14)]).unwrap();
        (t, d)
    }

    fn label(tree: &DModTree, v: NodeId) -> String {
        match tree.pattern_at(v) {
            Some(p) => format!("P{p}"),
            None => format!("{}", tree.suffix_at(v).unwrap()),
        }
    }

    #[test]
    fn matches_example_tree() {
        let (t, d) = example();
        let tree = DModTree::new(&t, &d);
        let root_children: Vec<String> = tree
            .children(0)
            .iter()
            .map(|&v| label(&tree, v))
            .collect();
        // P0 = aa, P2 = abba, P3 = c (also suffix 14)
        assert_eq!(root_children, ["P0", "6", "P2", "13", "1", "7", "11", "10", "P3", "2"]);
        let aa = tree.node_of_pattern(0);
        let under: Vec<String> = tree
            .children(aa)
            .iter()
            .map(|&v| label(&tree, v))
            .collect();
        assert_eq!(under, ["P1", "4", "5", "8", "12"]);
        let aaaa = tree.node_of_pattern(1);
        assert_eq!(tree.children(aaaa).len(), 1);
        assert_eq!(tree.suffix_at(tree.children(aaaa)[0]), Some(3));
        let abba = tree.node_of_pattern(2);
        assert_eq!(tree.suffix_at(tree.children(abba)[0]), Some(9));
        let c = tree.node_of_pattern(3);
        assert_eq!(tree.suffix_at(c), Some(14));
        assert!(tree.children(c).is_empty());
    }

    #[test]
    fn weighted_ancestors_and_prefix_counts() {
        let (t, d) = example();
        let tree = DModTree::new(&t, &d);
        let leaf3 = tree.leaf(3);
        assert_eq!(tree.weight(leaf3), 12);
        assert_eq!(tree.weighted_ancestor(leaf3, 2).unwrap(), tree.node_of_pattern(0));
        assert_eq!(tree.weighted_ancestor(leaf3, 3).unwrap(), tree.node_of_pattern(1));
        assert_eq!(tree.weighted_ancestor(leaf3, 12).unwrap(), leaf3);
        assert!(tree.weighted_ancestor(leaf3, 13).is_err());
        assert_eq!(tree.pattern_prefix_count(3, 12), 2);
        assert_eq!(tree.pattern_prefix_count(3, 3), 1);
        assert_eq!(tree.pattern_prefix_count(3, 0), 0);
        assert_eq!(tree.pref_d(3, 14), Some((1, 4)));
        assert_eq!(tree.pref_d(2, 6), None);
        assert_eq!(tree.pref_d(14, 14), Some((3, 1)));
    }

    #[test]
    fn occurrence_lists() {
        let (t, d) = example();
        let tree = DModTree::new(&t, &d);
        assert_eq!(tree.occurrences(0), [3, 4, 5, 8, 12]);
        assert_eq!(tree.occurrences(2), [9]);
        assert_eq!(tree.enumerate_occurrences().len(), 5 + 1 + 1 + 1);
    }

    #[test]
    fn degenerate_dictionaries() {
        let t = TextIndex::from_bytes("abcab").unwrap();
        let tree = DModTree::new(&t, &Dictionary::default());
        assert_eq!(tree.node_count(), 6);
        assert!((0..6).all(|v| tree.pattern_ancestors(v) == 0));
        let whole = Dictionary::from_pairs(&t, [(1, 5)]).unwrap();
        let tree = DModTree::new(&t, &whole);
        assert_eq!(tree.node_count(), 6);
        assert_eq!(tree.pattern_ancestors(tree.leaf(1)), 1);
        assert!(matches!(
            Dictionary::from_pairs(&t, [(2, 1)]),
            Err(Error::EmptyPattern)
        ));
    }
}
