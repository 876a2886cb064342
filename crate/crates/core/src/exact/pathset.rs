use std::sync::Arc;

use crate::dmod_tree::{DModTree, Dictionary, NodeId, PatternId};
use crate::geometry::SpecialOccurrences;
use crate::internal_pm::{bounded_lcp, predecessor_count};
use crate::{Error, Fragment, Result, TextIndex};

/// Patterns that are all prefixes of the longest one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathSet {
    pub longest: Fragment,
    /// Ascending.
    pub lengths: Vec<usize>,
    /// Same order as `lengths`.
    pub members: Vec<PatternId>,
}

#[derive(Debug, Clone)]
pub struct PathSetFamily {
    pub k: usize,
    pub sets: Vec<PathSet>,
    pub remainder: Vec<PatternId>,
}

/// Greedy family of disjoint path-sets of size at least `k`.
///
/// Pattern nodes without pattern descendants are visited in preorder. Each
/// one extracts the not-yet-taken pattern nodes on its root path when there
/// are at least `k` of them. Taken nodes always form a top segment of any
/// root path, so the walk stops at the first taken node.
pub fn decompose_path_sets(tree: &DModTree, dict: &Dictionary, k: usize) -> PathSetFamily {
    let nodes = tree.node_count();
    let mut below = vec![false; nodes];
    for v in (1..nodes as NodeId).rev() {
        if tree.pattern_at(v).is_some() || below[v as usize] {
            let p = tree.parent(v).unwrap();
            below[p as usize] = true;
        }
    }
    let mut taken = vec![false; nodes];
    let mut sets = Vec::new();
    let k = k.max(1);
    for v in 1..nodes as NodeId {
        if tree.pattern_at(v).is_none() || below[v as usize] {
            continue;
        }
        let mut chain: Vec<NodeId> = Vec::new();
        let mut cur = Some(v);
        while let Some(u) = cur {
            if taken[u as usize] || chain.len() >= k {
                break;
            }
            chain.push(u);
            cur = tree.parent(u).and_then(|p| tree.nearest_pattern(p));
        }
        if chain.len() < k {
            continue;
        }
        while let Some(u) = cur {
            if taken[u as usize] {
                break;
            }
            chain.push(u);
            cur = tree.parent(u).and_then(|p| tree.nearest_pattern(p));
        }
        for &u in &chain {
            taken[u as usize] = true;
        }
        chain.reverse();
        let members: Vec<PatternId> = chain.iter().map(|&u| tree.pattern_at(u).unwrap()).collect();
        sets.push(PathSet {
            longest: dict.get(*members.last().unwrap()),
            lengths: chain.iter().map(|&u| tree.weight(u)).collect(),
            members,
        });
    }
    let remainder = (0..dict.len() as PatternId)
        .filter(|&id| !taken[tree.node_of_pattern(id) as usize])
        .collect();
    PathSetFamily { k, sets, remainder }
}

/// Exact `CountDistinct` from a path-set family plus distinct-color counting
/// over every occurrence of the remaining patterns.
#[derive(Debug, Clone)]
pub struct PathSetIndex {
    text: Arc<TextIndex>,
    family: PathSetFamily,
    special: SpecialOccurrences,
}

impl PathSetIndex {
    /// Uses `k = max(1, ⌈d/m⌉)`, so there are at most `m` path-sets.
    pub fn build(text: Arc<TextIndex>, dict: &Dictionary, m: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::Precondition("m must be positive".into()));
        }
        let k = dict.len().div_ceil(m).max(1);
        Self::with_k(text, dict, k)
    }

    pub fn with_k(text: Arc<TextIndex>, dict: &Dictionary, k: usize) -> Result<Self> {
        let tree = DModTree::new(&text, dict);
        let family = decompose_path_sets(&tree, dict, k);
        let mut occ = Vec::new();
        for &id in &family.remainder {
            let len = dict.get(id).len();
            occ.extend(
                tree.occurrences(id)
                    .into_iter()
                    .map(|a| (id, a, a + len - 1)),
            );
        }
        Ok(PathSetIndex {
            text,
            family,
            special: SpecialOccurrences::new(occ),
        })
    }

    pub fn family(&self) -> &PathSetFamily {
        &self.family
    }

    /// Stored occurrences of the remainder patterns.
    pub fn special_size(&self) -> usize {
        self.special.occurrence_count()
    }

    /// Exact `CountDistinct(i, j)`; an empty window gives 0.
    pub fn count_distinct(&self, i: usize, j: usize) -> Result<usize> {
        let w = Fragment::checked(i, j, self.text.len())?;
        if w.is_empty() {
            return Ok(0);
        }
        let mut total = self.special.count_distinct(i, j);
        for set in &self.family.sets {
            let l = bounded_lcp(&self.text, set.longest, w);
            total += predecessor_count(&set.lengths, l);
        }
        Ok(total)
    }

    pub fn heap_bytes(&self) -> usize {
        self.special.heap_bytes()
            + self
                .family
                .sets
                .iter()
                .map(|s| s.lengths.len() * 12 + 48)
                .sum::<usize>()
    }
}
