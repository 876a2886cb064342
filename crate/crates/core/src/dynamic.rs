//! 2-approximate `CountDistinct` under pattern insertions and deletions.
//!
//! Updates are buffered. Each query corrects the static answer for the
//! buffered patterns one by one, and after `k` pending changes the static
//! structures absorb the whole batch.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::approx::{ApproxIndex, QuerySplit};
use crate::dmod_tree::Dictionary;
use crate::internal_pm::exists;
use crate::text_index::ContentKey;
use crate::{Error, Fragment, Result, TextIndex};

#[derive(Debug, Clone)]
pub struct DynamicCounter {
    base: ApproxIndex,
    inserted: BTreeMap<ContentKey, Fragment>,
    deleted: BTreeMap<ContentKey, Fragment>,
    k: usize,
    rebuilds: usize,
}

impl DynamicCounter {
    /// `k` is the number of pending changes that triggers a rebuild.
    pub fn new(text: Arc<TextIndex>, dict: &Dictionary, k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::Precondition("rebuild threshold k must be positive".into()));
        }
        Ok(DynamicCounter {
            base: ApproxIndex::build(text, dict)?,
            inserted: BTreeMap::new(),
            deleted: BTreeMap::new(),
            k,
            rebuilds: 0,
        })
    }

    pub fn text(&self) -> &Arc<TextIndex> {
        self.base.text()
    }

    pub fn threshold(&self) -> usize {
        self.k
    }

    /// Pending insertions plus pending deletions.
    pub fn pending(&self) -> usize {
        self.inserted.len() + self.deleted.len()
    }

    pub fn rebuild_count(&self) -> usize {
        self.rebuilds
    }

    pub fn base(&self) -> &ApproxIndex {
        &self.base
    }

    fn key_of(&self, f: Fragment) -> Result<ContentKey> {
        let text = self.base.text();
        let f = Fragment::checked(f.start, f.end, text.len())?;
        if f.is_empty() {
            return Err(Error::EmptyPattern);
        }
        Ok(text.content_key(f))
    }

    fn in_base(&self, key: ContentKey) -> bool {
        self.base.dictionary().id_of(key).is_some()
    }

    /// Whether a string is in the current dictionary.
    pub fn contains(&self, f: Fragment) -> Result<bool> {
        let key = self.key_of(f)?;
        Ok(self.inserted.contains_key(&key)
            || (self.in_base(key) && !self.deleted.contains_key(&key)))
    }

    /// The current dictionary, sorted by fragment.
    pub fn current_patterns(&self) -> Vec<Fragment> {
        let mut out: Vec<Fragment> = self
            .base
            .dictionary()
            .iter()
            .filter(|(id, _)| !self.deleted.contains_key(&self.base.dictionary().key(*id)))
            .map(|(_, f)| f)
            .chain(self.inserted.values().copied())
            .collect();
        out.sort_unstable();
        out
    }

    /// Adds a pattern; adding a present string changes nothing.
    pub fn insert_pattern(&mut self, f: Fragment) -> Result<()> {
        let key = self.key_of(f)?;
        if self.deleted.remove(&key).is_none()
            && !self.in_base(key)
            && !self.inserted.contains_key(&key)
        {
            self.inserted.insert(key, f);
        }
        self.maybe_rebuild()
    }

    /// Removes a pattern, which must be in the current dictionary.
    pub fn delete_pattern(&mut self, f: Fragment) -> Result<()> {
        let key = self.key_of(f)?;
        if self.inserted.remove(&key).is_none() {
            if !self.in_base(key) || self.deleted.contains_key(&key) {
                return Err(Error::NotInDictionary(f));
            }
            self.deleted.insert(key, f);
        }
        self.maybe_rebuild()
    }

    fn maybe_rebuild(&mut self) -> Result<()> {
        if self.pending() >= self.k {
            self.rebuild()?;
        }
        Ok(())
    }

    /// Folds pending changes into the static structures.
    pub fn rebuild(&mut self) -> Result<()> {
        if self.pending() == 0 {
            return Ok(());
        }
        let text = self.base.text().clone();
        let ins = Dictionary::new(&text, self.inserted.values().copied())?;
        let del = Dictionary::new(&text, self.deleted.values().copied())?;
        self.base.apply_batch(&ins, &del)?;
        self.inserted.clear();
        self.deleted.clear();
        self.rebuilds += 1;
        Ok(())
    }

    /// A value between `CountDistinct(i, j)` and twice that, for the current
    /// dictionary.
    pub fn count_distinct(&self, i: usize, j: usize) -> Result<usize> {
        let mut ans = self.base.count_distinct(i, j)? as i64;
        if j < i {
            return Ok(0);
        }
        let text = self.base.text();
        for &p in self.inserted.values() {
            ans += i64::from(exists(text, p, i, j));
        }
        if !self.deleted.is_empty() {
            let split = self.base.split(i, j);
            for &p in self.deleted.values() {
                let counted = match split {
                    QuerySplit::Split { i_prime, j_prime } => {
                        let halves = i64::from(exists(text, p, i, i_prime))
                            + i64::from(exists(text, p, j_prime, j));
                        if halves > 0 {
                            halves
                        } else {
                            i64::from(exists(text, p, i, j))
                        }
                    }
                    QuerySplit::Basic | QuerySplit::Fallback => i64::from(exists(text, p, i, j)),
                };
                ans -= counted;
            }
        }
        debug_assert!(ans >= 0);
        Ok(ans as usize)
    }
}
