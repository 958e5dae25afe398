//! The word graph whose components are heaps (commuting swaps only) or
//! flip classes (commuting swaps and flip moves).

use std::collections::{BTreeSet, HashMap, VecDeque};

use serde::Serialize;

use super::heap::Heap;
use crate::error::Result;
use crate::poset::UnitIntervalOrder;
use crate::word::{words_of_type, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum EdgeKind {
    /// `ac <-> ca` at positions `i, i+1` with `a <_P c`.
    Commute,
    /// `bac <-> acb` or `bca <-> cab` at positions `i..i+2`.
    Flip,
}

#[derive(Clone, Debug, Serialize)]
pub struct GammaGraph {
    pub words: Vec<Word>,
    /// `(u, v, kind, position)` with `u < v` indexing `words`; position is 1-based.
    pub edges: Vec<(usize, usize, EdgeKind, usize)>,
}

/// Neighbours of `w`, each with the move that reaches it.
pub fn neighbors(p: &UnitIntervalOrder, w: &Word) -> Vec<(Word, EdgeKind, usize)> {
    let x = w.letters();
    let mut out = Vec::new();
    for i in 0..x.len().saturating_sub(1) {
        let (a, c) = (x[i] as usize, x[i + 1] as usize);
        if p.less(a, c) || p.less(c, a) {
            let mut y = x.to_vec();
            y.swap(i, i + 1);
            out.push((Word::new(y), EdgeKind::Commute, i + 1));
        }
    }
    for i in 0..x.len().saturating_sub(2) {
        let t = [x[i] as usize, x[i + 1] as usize, x[i + 2] as usize];
        if let Some(u) = flip_move(p, t) {
            let mut y = x.to_vec();
            for (k, &v) in u.iter().enumerate() {
                y[i + k] = v as u8;
            }
            out.push((Word::new(y), EdgeKind::Flip, i + 1));
        }
    }
    out
}

/// The image of a three-letter factor under the flip move, if it applies.
fn flip_move(p: &UnitIntervalOrder, t: [usize; 3]) -> Option<[usize; 3]> {
    let triple =
        |a: usize, b: usize, c: usize| a < b && b < c && p.incomparable(a, b) && p.incomparable(b, c) && p.less(a, c);
    let [x, y, z] = t;
    // bac <-> acb
    if triple(y, x, z) {
        return Some([y, z, x]);
    }
    if triple(x, z, y) {
        return Some([z, x, y]);
    }
    // bca <-> cab
    if triple(z, x, y) {
        return Some([y, z, x]);
    }
    if triple(y, z, x) {
        return Some([z, x, y]);
    }
    None
}

pub fn gamma_graph(p: &UnitIntervalOrder, mu: &[usize]) -> GammaGraph {
    let words = words_of_type(mu);
    let index: HashMap<&Word, usize> = words.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let mut edges = BTreeSet::new();
    for (u, w) in words.iter().enumerate() {
        for (y, kind, pos) in neighbors(p, w) {
            let v = index[&y];
            if u < v {
                edges.insert((u, v, kind, pos));
            }
        }
    }
    GammaGraph { words, edges: edges.into_iter().collect() }
}

impl GammaGraph {
    /// Components as sorted word lists, ordered by least word. With
    /// `flips = false` only commuting edges are used.
    pub fn components(&self, flips: bool) -> Vec<Vec<Word>> {
        let n = self.words.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for &(u, v, kind, _) in &self.edges {
            if flips || kind == EdgeKind::Commute {
                let (a, b) = (find(&mut parent, u), find(&mut parent, v));
                parent[a.max(b)] = a.min(b);
            }
        }
        let mut groups: HashMap<usize, Vec<Word>> = HashMap::new();
        for i in 0..n {
            let r = find(&mut parent, i);
            groups.entry(r).or_default().push(self.words[i].clone());
        }
        let mut out: Vec<Vec<Word>> = groups.into_values().collect();
        for g in &mut out {
            g.sort();
        }
        out.sort();
        out
    }
}

/// The component of `w`, explored by breadth-first search over moves.
pub fn component_of(p: &UnitIntervalOrder, w: &Word, flips: bool) -> Vec<Word> {
    let mut seen: BTreeSet<Word> = BTreeSet::from([w.clone()]);
    let mut queue = VecDeque::from([w.clone()]);
    while let Some(x) = queue.pop_front() {
        for (y, kind, _) in neighbors(p, &x) {
            if (flips || kind == EdgeKind::Commute) && seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    seen.into_iter().collect()
}

/// A flip-equivalence class of heaps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeapClass {
    /// Members sorted by canonical word; the first is the representative.
    pub members: Vec<Heap>,
    pub asc: usize,
}

impl HeapClass {
    pub fn representative(&self) -> &Word {
        self.members[0].word()
    }
}

/// All heaps of type `mu`, one per word without `P`-descents, sorted.
pub fn enumerate_heaps(p: &UnitIntervalOrder, mu: &[usize]) -> Result<Vec<Heap>> {
    crate::poset::check_type(p, mu)?;
    words_of_type(mu).into_iter().filter(|w| !w.has_descent(p)).map(|w| Heap::from_word(p, &w)).collect()
}

/// Flip classes, by breadth-first search over local flips from each heap.
pub fn enumerate_classes(p: &UnitIntervalOrder, mu: &[usize]) -> Result<Vec<HeapClass>> {
    let heaps = enumerate_heaps(p, mu)?;
    let mut assigned: HashMap<Word, usize> = HashMap::new();
    let mut classes = Vec::new();
    for h in heaps {
        if assigned.contains_key(h.word()) {
            continue;
        }
        let id = classes.len();
        let mut members = vec![h.clone()];
        assigned.insert(h.word().clone(), id);
        let mut k = 0;
        while k < members.len() {
            let cur = members[k].clone();
            k += 1;
            for t in cur.flippable_triples(p) {
                let next = cur.apply_flip(p, &t)?;
                if !assigned.contains_key(next.word()) {
                    assigned.insert(next.word().clone(), id);
                    members.push(next);
                }
            }
        }
        members.sort();
        let asc = members[0].asc(p);
        classes.push(HeapClass { members, asc });
    }
    classes.sort_by(|a, b| a.representative().cmp(b.representative()));
    Ok(classes)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> UnitIntervalOrder {
        s.parse().unwrap()
    }

    #[test]
    fn running_example_counts() {
        let q = p("2,3,3");
        let mu = [1, 1, 2];
        let g = gamma_graph(&q, &mu);
        assert_eq!(g.words.len(), 12);
        assert_eq!(g.components(false).len(), 6);
        assert_eq!(g.components(true).len(), 4);
        assert_eq!(enumerate_heaps(&q, &mu).unwrap().len(), 6);
        assert_eq!(enumerate_classes(&q, &mu).unwrap().len(), 4);
    }

    #[test]
    fn chain_has_one_heap() {
        let c = UnitIntervalOrder::chain(3);
        let g = gamma_graph(&c, &[2, 1, 1]);
        assert_eq!(g.components(false).len(), 1);
        assert!(g.edges.iter().all(|e| e.2 == EdgeKind::Commute));
        assert_eq!(enumerate_classes(&c, &[2, 1, 1]).unwrap().len(), 1);
    }

    #[test]
    fn antichain_has_no_edges() {
        let g = gamma_graph(&p("3,3,3"), &[1, 1, 1]);
        assert_eq!(g.words.len(), 6);
        assert!(g.edges.is_empty());
    }

    /// Word-graph components agree with drop-built heaps and with flip BFS.
    #[test]
    fn two_constructions_agree() {
        for n in 1..=5 {
            for q in UnitIntervalOrder::all(n) {
                let mut types = vec![vec![1; n]];
                if n <= 3 {
                    let mut m = vec![1; n];
                    m[n - 1] = 2;
                    types.push(m);
                }
                for mu in types {
                    let g = gamma_graph(&q, &mu);
                    let heaps = enumerate_heaps(&q, &mu).unwrap();
                    let mut by_words: Vec<Vec<Word>> = heaps.iter().map(|h| h.words()).collect();
                    by_words.sort();
                    assert_eq!(g.components(false), by_words, "{q} {mu:?}");
                    let classes = enumerate_classes(&q, &mu).unwrap();
                    let mut via_flips: Vec<Vec<Word>> = classes
                        .iter()
                        .map(|c| {
                            let mut ws: Vec<Word> = c.members.iter().flat_map(|h| h.words()).collect();
                            ws.sort();
                            ws
                        })
                        .collect();
                    via_flips.sort();
                    assert_eq!(g.components(true), via_flips, "{q} {mu:?}");
                    for c in &classes {
                        assert!(c.members.iter().all(|h| h.asc(&q) == c.asc));
                        let comp = component_of(&q, c.representative(), true);
                        assert_eq!(&comp[0], c.representative());
                    }
                }
            }
        }
    }
}
