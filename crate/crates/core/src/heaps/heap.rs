use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poset::UnitIntervalOrder;
use crate::word::Word;

/// Heaps are limited to this many blocks; relations are stored as `u128` bitsets.
pub const MAX_BLOCKS: usize = 128;

/// The `index`-th block from the bottom of column `column` (both 1-based).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BlockId {
    pub column: usize,
    pub index: usize,
}

impl BlockId {
    pub fn new(column: usize, index: usize) -> Self {
        Self { column, index }
    }
}

impl fmt::Display for BlockId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v({},{})", self.column, self.index)
    }
}

/// Three blocks `(p, q, r)` where `q` covers both `p` and `r`, or is
/// covered by both, and the columns of `p` and `r` are comparable.
/// Listed with the column of `p` below that of `r`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FlippableTriple {
    pub p: BlockId,
    pub q: BlockId,
    pub r: BlockId,
}

/// Shape of a connected component in a heap of rank at most two.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ComponentKind {
    /// A single block.
    S,
    /// As many rank-1 blocks as rank-2 blocks.
    N,
    /// One more rank-1 block than rank-2 blocks, at least two rank-1 blocks.
    M,
    /// One more rank-2 block than rank-1 blocks.
    W,
}

/// A heap of pieces over `P`, stored in the order of its canonical word:
/// block `i` is the `i`-th letter of the unique linear extension with no
/// `P`-descent.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Heap {
    word: Word,
    levels: Vec<usize>,
    lower: Vec<Vec<usize>>,
    upper: Vec<Vec<usize>>,
    /// `below[j]` has bit `i` set when block `i` lies below block `j`.
    below: Vec<u128>,
}

impl Heap {
    /// Drop the letters of `w` left to right.
    pub fn from_word(p: &UnitIntervalOrder, w: &Word) -> Result<Self> {
        w.check(p)?;
        if w.len() > MAX_BLOCKS {
            return Err(Error::TooLarge(format!("heaps are limited to {MAX_BLOCKS} blocks")));
        }
        let cols = w.letters();
        let canonical = linearize(cols, |i, j| i < j && p.overlaps(cols[i] as usize, cols[j] as usize))?;
        Ok(Self::build(p, Word::new(canonical.iter().map(|&i| cols[i]).collect())))
    }

    /// Blocks in `cols`, where overlapping blocks `i`, `j` are ordered
    /// with `i` below `j` exactly when `before(i, j)` holds.
    fn from_orientation(p: &UnitIntervalOrder, cols: &[u8], before: impl Fn(usize, usize) -> bool) -> Result<Self> {
        let order = linearize(cols, |i, j| p.overlaps(cols[i] as usize, cols[j] as usize) && before(i, j))?;
        Ok(Self::build(p, Word::new(order.iter().map(|&i| cols[i]).collect())))
    }

    fn build(p: &UnitIntervalOrder, word: Word) -> Self {
        let cols = word.letters();
        let d = cols.len();
        let mut levels = vec![1usize; d];
        let mut below = vec![0u128; d];
        let mut lower = vec![Vec::new(); d];
        let mut upper = vec![Vec::new(); d];
        for j in 0..d {
            let preds: Vec<usize> = (0..j).filter(|&i| p.overlaps(cols[i] as usize, cols[j] as usize)).collect();
            for &i in &preds {
                levels[j] = levels[j].max(levels[i] + 1);
                below[j] |= below[i] | 1 << i;
            }
            for &i in &preds {
                if !preds.iter().any(|&k| k != i && below[k] >> i & 1 == 1) {
                    lower[j].push(i);
                    upper[i].push(j);
                }
            }
        }
        Self { word, levels, lower, upper, below }
    }

    /// The unique linear extension with no `P`-descent.
    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.levels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.levels.is_empty()
    }

    pub fn column(&self, i: usize) -> usize {
        self.word.letters()[i] as usize
    }

    /// Level of block `i` (1-based); equal to its rank.
    pub fn level(&self, i: usize) -> usize {
        self.levels[i]
    }

    pub fn levels(&self) -> &[usize] {
        &self.levels
    }

    pub fn height(&self) -> usize {
        self.levels.iter().copied().max().unwrap_or(0)
    }

    /// Blocks covered by block `i`.
    pub fn lower_covers(&self, i: usize) -> &[usize] {
        &self.lower[i]
    }

    /// Blocks covering block `i`.
    pub fn upper_covers(&self, i: usize) -> &[usize] {
        &self.upper[i]
    }

    /// Whether block `i` lies strictly below block `j`.
    pub fn is_below(&self, i: usize, j: usize) -> bool {
        self.below[j] >> i & 1 == 1
    }

    pub fn block_id(&self, i: usize) -> BlockId {
        let col = self.word.letters()[i];
        let index = self.word.letters()[..=i].iter().filter(|&&c| c == col).count();
        BlockId::new(col as usize, index)
    }

    pub fn block_index(&self, id: BlockId) -> Option<usize> {
        self.word
            .letters()
            .iter()
            .enumerate()
            .filter(|(_, &c)| c as usize == id.column)
            .nth(id.index.checked_sub(1)?)
            .map(|(i, _)| i)
    }

    /// `(column, level)` for every block, sorted.
    pub fn diagram(&self) -> Vec<(usize, usize)> {
        let mut v: Vec<(usize, usize)> = (0..self.len()).map(|i| (self.column(i), self.levels[i])).collect();
        v.sort_unstable();
        v
    }

    pub fn type_vector(&self, n: usize) -> Vec<usize> {
        self.word.type_vector(n)
    }

    /// Overlapping pairs whose lower block sits in the larger column.
    pub fn asc(&self, p: &UnitIntervalOrder) -> usize {
        self.word.inversions(p)
    }

    /// Number of blocks at each level.
    pub fn rank_profile(&self) -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for &l in &self.levels {
            *m.entry(l).or_insert(0) += 1;
        }
        m
    }

    pub fn sinks(&self) -> usize {
        self.levels.iter().filter(|&&l| l == 1).count()
    }

    /// All linear extensions, i.e. the words that drop to this heap, sorted.
    pub fn words(&self) -> Vec<Word> {
        let d = self.len();
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(d);
        fn rec(h: &Heap, placed: u128, cur: &mut Vec<u8>, out: &mut Vec<Word>) {
            let d = h.len();
            if cur.len() == d {
                out.push(Word::new(cur.clone()));
                return;
            }
            for i in 0..d {
                if placed >> i & 1 == 0 && h.below[i] & !placed == 0 {
                    cur.push(h.word.letters()[i]);
                    rec(h, placed | 1 << i, cur, out);
                    cur.pop();
                }
            }
        }
        rec(self, 0, &mut cur, &mut out);
        out.sort();
        out.dedup();
        out
    }

    pub fn flippable_triples(&self, p: &UnitIntervalOrder) -> Vec<FlippableTriple> {
        let mut out = Vec::new();
        for q in 0..self.len() {
            for nbrs in [&self.lower[q], &self.upper[q]] {
                for (x, &a) in nbrs.iter().enumerate() {
                    for &b in &nbrs[x + 1..] {
                        let (lo, hi) = if self.column(a) < self.column(b) { (a, b) } else { (b, a) };
                        if p.less(self.column(lo), self.column(hi)) {
                            out.push(FlippableTriple {
                                p: self.block_id(lo),
                                q: self.block_id(q),
                                r: self.block_id(hi),
                            });
                        }
                    }
                }
            }
        }
        out.sort();
        out
    }

    /// Reverse the edges `{p, q}` and `{q, r}`.
    pub fn apply_flip(&self, p: &UnitIntervalOrder, t: &FlippableTriple) -> Result<Heap> {
        if !self.flippable_triples(p).contains(t) {
            return Err(Error::NotFlippable);
        }
        let ip = self.block_index(t.p).ok_or(Error::NotFlippable)?;
        let iq = self.block_index(t.q).ok_or(Error::NotFlippable)?;
        let ir = self.block_index(t.r).ok_or(Error::NotFlippable)?;
        let flipped = |i: usize, j: usize| {
            let pair = (i.min(j), i.max(j));
            pair == (ip.min(iq), ip.max(iq)) || pair == (iq.min(ir), iq.max(ir))
        };
        Heap::from_orientation(p, self.word.letters(), |i, j| (i < j) != flipped(i, j))
    }

    /// Connected components of the cover graph, as sorted block indices.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let d = self.len();
        let mut seen = vec![false; d];
        let mut out = Vec::new();
        for s in 0..d {
            if seen[s] {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut k = 0;
            while k < comp.len() {
                let v = comp[k];
                k += 1;
                for &u in self.lower[v].iter().chain(&self.upper[v]) {
                    if !seen[u] {
                        seen[u] = true;
                        comp.push(u);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn classify_component(&self, blocks: &[usize]) -> Result<ComponentKind> {
        if blocks.iter().any(|&b| self.levels[b] > 2) {
            return Err(Error::Precondition("component has a block of rank above 2".into()));
        }
        let n1 = blocks.iter().filter(|&&b| self.levels[b] == 1).count();
        let n2 = blocks.len() - n1;
        match (n1, n2) {
            (1, 0) => Ok(ComponentKind::S),
            _ if n1 == n2 => Ok(ComponentKind::N),
            _ if n1 == n2 + 1 && n1 >= 2 => Ok(ComponentKind::M),
            _ if n1 + 1 == n2 => Ok(ComponentKind::W),
            _ => Err(Error::Precondition(format!("component with {n1} sinks and {n2} rank-2 blocks"))),
        }
    }

    /// Every set of blocks forming a forbidden `P`-path, each listed by
    /// increasing column.
    pub fn forbidden_paths(&self, p: &UnitIntervalOrder) -> Vec<Vec<BlockId>> {
        let max_k = self.height() + 1;
        let mut out = Vec::new();
        for k in 3..=max_k.max(3) {
            for start in (0..self.len()).filter(|&i| self.levels[i] == 1) {
                let mut path = vec![start];
                self.extend_path(p, k, &mut path, &mut out);
            }
        }
        out.sort();
        out
    }

    fn extend_path(&self, p: &UnitIntervalOrder, k: usize, path: &mut Vec<usize>, out: &mut Vec<Vec<BlockId>>) {
        let j = path.len() + 1;
        if j > k {
            let (a, b, c) = (path[0], path[1], path[2]);
            if self.lower[b].contains(&a) && self.lower[b].contains(&c) {
                out.push(path.iter().map(|&i| self.block_id(i)).collect());
            }
            return;
        }
        let last = *path.last().expect("nonempty");
        for next in 0..self.len() {
            let col = self.column(next);
            if col <= self.column(last) || self.levels[next] != k - j + 1 {
                continue;
            }
            if !p.incomparable(self.column(last), col) {
                continue;
            }
            if path[..path.len() - 1].iter().any(|&i| !p.less(self.column(i), col)) {
                continue;
            }
            path.push(next);
            self.extend_path(p, k, path, out);
            path.pop();
        }
    }
}

/// Lexicographically least linear extension (smallest column first) of
/// the relation `before` on blocks with the given columns.
fn linearize(cols: &[u8], before: impl Fn(usize, usize) -> bool) -> Result<Vec<usize>> {
    let d = cols.len();
    let mut preds = vec![0u128; d];
    for (j, pj) in preds.iter_mut().enumerate() {
        for i in (0..d).filter(|&i| i != j && before(i, j)) {
            *pj |= 1 << i;
        }
    }
    let mut placed = 0u128;
    let mut order = Vec::with_capacity(d);
    while order.len() < d {
        let next = (0..d)
            .filter(|&i| placed >> i & 1 == 0 && preds[i] & !placed == 0)
            .min_by_key(|&i| (cols[i], i))
            .ok_or_else(|| Error::Precondition("block orientation has a cycle".into()))?;
        placed |= 1 << next;
        order.push(next);
    }
    Ok(order)
}
