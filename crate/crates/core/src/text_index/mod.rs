//! Text preprocessing: suffix order, LCE, runs, Lyndon roots and
//! periodicity queries on fragments.

mod runs;
mod suffix;

use std::collections::HashMap;

pub(crate) use runs::least_rotation;
pub use suffix::{ContentKey, SuffixIndex};

use crate::{Error, Fragment, Result};

/// Identifier of a Lyndon root, shared by all runs whose roots are equal.
pub type RootId = u32;

/// The indexed text: raw bytes and their dense ranks.
#[derive(Debug, Clone)]
pub struct Text {
    bytes: Vec<u8>,
    ranks: Vec<u32>,
}

impl Text {
    pub fn new(bytes: impl Into<Vec<u8>>) -> Result<Self> {
        let bytes = bytes.into();
        if bytes.is_empty() {
            return Err(Error::EmptyText);
        }
        let mut present = [false; 256];
        for &b in &bytes {
            present[b as usize] = true;
        }
        let mut map = [0u32; 256];
        let mut next = 0;
        for (b, &p) in present.iter().enumerate() {
            if p {
                map[b] = next;
                next += 1;
            }
        }
        let ranks = bytes.iter().map(|&b| map[b as usize]).collect();
        Ok(Text { bytes, ranks })
    }

    pub fn len(&self) -> usize {
        self.bytes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bytes.is_empty()
    }

    pub fn bytes(&self) -> &[u8] {
        &self.bytes
    }

    pub fn ranks(&self) -> &[u32] {
        &self.ranks
    }

    /// Letters of a fragment.
    pub fn slice(&self, f: Fragment) -> &[u8] {
        if f.is_empty() {
            &[]
        } else {
            &self.bytes[f.start - 1..f.end]
        }
    }
}

/// A maximal repetition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Run {
    pub start: usize,
    pub end: usize,
    pub period: usize,
    /// One occurrence of the Lyndon root inside the run's first period.
    pub root: Fragment,
    /// `root.start - start`, always `< period`.
    pub root_offset: usize,
    pub root_id: RootId,
}

impl Run {
    pub fn fragment(&self) -> Fragment {
        Fragment::new_unchecked(self.start, self.end)
    }

    pub fn len(&self) -> usize {
        self.end + 1 - self.start
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn exponent(&self) -> f64 {
        self.len() as f64 / self.period as f64
    }

    pub fn contains(&self, f: Fragment) -> bool {
        self.start <= f.start && f.end <= self.end
    }
}

/// `L[|L|-head+1..] L^rank L[..tail]` for the Lyndon root `L`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PeriodicRep {
    pub root: RootId,
    pub root_len: usize,
    pub rank: usize,
    pub head: usize,
    pub tail: usize,
}

impl PeriodicRep {
    pub fn len(&self) -> usize {
        self.head + self.rank * self.root_len + self.tail
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Forward and reversed suffix indexes plus the runs of the text.
///
/// Every public method takes and returns 1-based inclusive positions.
#[derive(Debug, Clone)]
pub struct TextIndex {
    text: Text,
    fwd: SuffixIndex,
    rev: SuffixIndex,
    runs: Vec<Run>,
    /// Runs containing each 0-based position, sorted by period.
    stabbing: Vec<Vec<u32>>,
    roots: Vec<Fragment>,
}

impl TextIndex {
    pub fn new(text: Text) -> Self {
        let fwd = SuffixIndex::new(text.ranks());
        let reversed: Vec<u32> = text.ranks().iter().rev().copied().collect();
        let rev = SuffixIndex::new(&reversed);
        let raw = runs::compute_runs(&fwd, &rev);

        let mut roots = Vec::new();
        let mut root_ids: HashMap<ContentKey, RootId> = HashMap::new();
        let mut runs = Vec::with_capacity(raw.len());
        for r in raw {
            let p = r.period;
            let offset = (0..p)
                .min_by(|&a, &b| {
                    let l = fwd.lce(r.start + a, r.start + b);
                    if l >= p {
                        std::cmp::Ordering::Equal
                    } else {
                        fwd.letters()[r.start + a + l].cmp(&fwd.letters()[r.start + b + l])
                    }
                })
                .unwrap();
            let root = Fragment::new_unchecked(r.start + offset + 1, r.start + offset + p);
            let key = fwd.content_key(r.start + offset, p);
            let next = roots.len() as RootId;
            let root_id = *root_ids.entry(key).or_insert_with(|| {
                roots.push(root);
                next
            });
            runs.push(Run {
                start: r.start + 1,
                end: r.end,
                period: p,
                root,
                root_offset: offset,
                root_id,
            });
        }
        runs.sort_by_key(|r| (r.start, r.end, r.period));

        let mut stabbing = vec![Vec::new(); text.len()];
        let mut order: Vec<usize> = (0..runs.len()).collect();
        order.sort_by_key(|&k| runs[k].period);
        for k in order {
            for list in &mut stabbing[runs[k].start - 1..runs[k].end] {
                list.push(k as u32);
            }
        }

        TextIndex {
            text,
            fwd,
            rev,
            runs,
            stabbing,
            roots,
        }
    }

    pub fn from_bytes(bytes: impl Into<Vec<u8>>) -> Result<Self> {
        Ok(Self::new(Text::new(bytes)?))
    }

    pub fn text(&self) -> &Text {
        &self.text
    }

    pub fn len(&self) -> usize {
        self.text.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn forward(&self) -> &SuffixIndex {
        &self.fwd
    }

    pub fn reversed(&self) -> &SuffixIndex {
        &self.rev
    }

    pub fn fragment(&self, start: usize, end: usize) -> Result<Fragment> {
        Fragment::checked(start, end, self.len())
    }

    fn check_pos(&self, pos: usize) -> Result<()> {
        if pos == 0 || pos > self.len() {
            Err(Error::PositionOutOfRange { pos, n: self.len() })
        } else {
            Ok(())
        }
    }

    /// Longest common prefix of `T[i..n]` and `T[j..n]`.
    pub fn lce(&self, i: usize, j: usize) -> Result<usize> {
        self.check_pos(i)?;
        self.check_pos(j)?;
        Ok(self.fwd.lce(i - 1, j - 1))
    }

    /// Longest common suffix of `T[1..i]` and `T[1..j]`.
    pub fn lcs(&self, i: usize, j: usize) -> Result<usize> {
        self.check_pos(i)?;
        self.check_pos(j)?;
        let n = self.len();
        Ok(self.rev.lce(n - i, n - j))
    }

    /// Lexicographic comparison of two fragments.
    pub fn compare(&self, a: Fragment, b: Fragment) -> std::cmp::Ordering {
        let l = if a.is_empty() || b.is_empty() {
            0
        } else {
            self.fwd.lce(a.start - 1, b.start - 1).min(a.len()).min(b.len())
        };
        if l == a.len() || l == b.len() {
            return a.len().cmp(&b.len());
        }
        let t = self.fwd.letters();
        t[a.start - 1 + l].cmp(&t[b.start - 1 + l])
    }

    /// Content identity of a non-empty fragment.
    pub fn content_key(&self, f: Fragment) -> ContentKey {
        self.fwd.content_key(f.start - 1, f.len())
    }

    pub fn runs(&self) -> &[Run] {
        &self.runs
    }

    /// Lyndon root occurrence for an id.
    pub fn root(&self, id: RootId) -> Fragment {
        self.roots[id as usize]
    }

    pub fn root_count(&self) -> usize {
        self.roots.len()
    }

    /// The run with the same smallest period that contains a periodic
    /// fragment, or `None` if the fragment is not periodic.
    pub fn run_of(&self, f: Fragment) -> Option<&Run> {
        if f.is_empty() {
            return None;
        }
        for &k in &self.stabbing[f.start - 1] {
            let run = &self.runs[k as usize];
            if 2 * run.period > f.len() {
                break;
            }
            if run.end >= f.end {
                return Some(run);
            }
        }
        None
    }

    /// Smallest period of a non-empty fragment.
    ///
    /// Constant-time for periodic fragments, linear in `|f|` otherwise.
    pub fn period(&self, f: Fragment) -> usize {
        if let Some(r) = self.run_of(f) {
            return r.period;
        }
        let s = self.text.slice(f);
        // prefix function
        let mut pi = vec![0usize; s.len()];
        for i in 1..s.len() {
            let mut k = pi[i - 1];
            while k > 0 && s[i] != s[k] {
                k = pi[k - 1];
            }
            if s[i] == s[k] {
                k += 1;
            }
            pi[i] = k;
        }
        s.len() - pi.last().copied().unwrap_or(0)
    }

    /// Offset `o` such that rotating `f` left by `o` gives its least rotation.
    pub fn minimal_rotation(&self, f: Fragment) -> Result<usize> {
        if f.is_empty() {
            return Err(Error::EmptyFragment);
        }
        Ok(least_rotation(self.text.slice(f)))
    }

    pub fn periodic_rep(&self, f: Fragment) -> Result<PeriodicRep> {
        let run = self.run_of(f).ok_or(Error::Aperiodic(f))?;
        let p = run.period;
        let root_start = run.root.start;
        let head = (root_start + p - f.start % p) % p;
        let rest = f.len() - head;
        Ok(PeriodicRep {
            root: run.root_id,
            root_len: p,
            rank: rest / p,
            head,
            tail: rest % p,
        })
    }

    /// Letters of the string a [`PeriodicRep`] stands for.
    pub fn expand(&self, rep: &PeriodicRep) -> Vec<u8> {
        let root = self.text.slice(self.root(rep.root)).to_vec();
        let l = rep.root_len;
        let mut out = Vec::with_capacity(rep.len());
        out.extend_from_slice(&root[l - rep.head..]);
        for _ in 0..rep.rank {
            out.extend_from_slice(&root);
        }
        out.extend_from_slice(&root[..rep.tail]);
        out
    }

    pub fn heap_bytes(&self) -> usize {
        self.text.len() * 5
            + self.fwd.heap_bytes()
            + self.rev.heap_bytes()
            + self.runs.len() * std::mem::size_of::<Run>()
            + self.stabbing.iter().map(|s| s.len() * 4 + 24).sum::<usize>()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn idx(s: &str) -> TextIndex {
        TextIndex::from_bytes(s).unwrap()
    }

    fn frag(a: usize, b: usize) -> Fragment {
        Fragment::new_unchecked(a, b)
    }

    #[test]
    fn empty_text_rejected() {
        assert_eq!(TextIndex::from_bytes("").unwrap_err(), Error::EmptyText);
    }

    #[test]
    fn lce_examples() {
        let t = idx("adaaaabaabbaac");
        assert_eq!(t.len(), 14);
        assert_eq!(t.lce(3, 4).unwrap(), 3);
        assert_eq!(t.lce(5, 5).unwrap(), 10);
        assert_eq!(idx("a").lce(1, 1).unwrap(), 1);
        let ab = idx("abab");
        assert_eq!(ab.lce(1, 3).unwrap(), 2);
        assert_eq!(ab.lce(2, 4).unwrap(), 1);
        assert!(ab.lce(0, 1).is_err());
        assert!(ab.lce(1, 5).is_err());
        assert_eq!(ab.lcs(2, 4).unwrap(), 2);
    }

    #[test]
    fn runs_of_example_text() {
        let t = idx("adaaaabaabbaac");
        let got: Vec<(usize, usize, usize)> =
            t.runs().iter().map(|r| (r.start, r.end, r.period)).collect();
        assert_eq!(
            got,
            vec![(3, 6, 1), (5, 10, 3), (8, 9, 1), (10, 11, 1), (12, 13, 1)]
        );
        let aaaa = idx("aaaa");
        assert_eq!(aaaa.runs().len(), 1);
        assert_eq!((aaaa.runs()[0].start, aaaa.runs()[0].end), (1, 4));
        assert!(idx("abc").runs().is_empty());
    }

    #[test]
    fn run_of_examples() {
        let t = idx("adaaaabaabbaac");
        let r = t.run_of(frag(5, 10)).unwrap();
        assert_eq!((r.start, r.end, r.period), (5, 10, 3));
        let r = t.run_of(frag(3, 5)).unwrap();
        assert_eq!((r.start, r.end, r.period), (3, 6, 1));
        assert!(t.run_of(frag(6, 8)).is_none());
        assert_eq!(t.period(frag(6, 8)), 2);
    }

    #[test]
    fn periodic_rep_examples() {
        let t = idx("aaaa");
        let rep = t.periodic_rep(frag(1, 4)).unwrap();
        assert_eq!((rep.rank, rep.head, rep.tail, rep.root_len), (4, 0, 0, 1));
        let rep = t.periodic_rep(frag(1, 2)).unwrap();
        assert_eq!((rep.rank, rep.head, rep.tail), (2, 0, 0));

        let t = idx("abaabaab");
        let rep = t.periodic_rep(frag(1, 8)).unwrap();
        assert_eq!(t.text().slice(t.root(rep.root)), b"aab");
        assert_eq!((rep.rank, rep.head, rep.tail), (2, 2, 0));
        assert_eq!(t.expand(&rep), b"abaabaab");
        assert!(matches!(
            idx("abc").periodic_rep(frag(1, 3)),
            Err(Error::Aperiodic(_))
        ));
    }

    #[test]
    fn minimal_rotation_examples() {
        let t = idx("aabbaa");
        assert_eq!(t.minimal_rotation(frag(1, 3)).unwrap(), 0);
        assert_eq!(t.minimal_rotation(frag(4, 6)).unwrap(), 1);
        assert_eq!(t.minimal_rotation(frag(1, 2)).unwrap(), 0);
        assert_eq!(t.minimal_rotation(frag(2, 1)), Err(Error::EmptyFragment));
    }
}
