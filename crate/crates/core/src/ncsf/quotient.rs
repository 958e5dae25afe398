use std::collections::{BTreeMap, HashMap};
use std::sync::RwLock;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use super::element::NCElement;
use super::tableau::enumerate_p_tableaux;
use crate::error::{Error, Result};
use crate::heaps::{Heap, HeapClass};
use crate::poset::{check_type, UnitIntervalOrder};
use crate::qpoly::QPoly;
use crate::symfunc::{from_monomial, Basis, Partition, SymFunc};
use crate::word::Word;

/// The quotient `U/I_P`, optionally truncated to words whose type is
/// bounded by a fixed vector (a ring quotient, since every relation
/// preserves type).
///
/// Reduction maps a word to the least word of its class. It goes through
/// heaps: the word drops to a heap, the flip class of that heap is
/// explored, and the least canonical heap word is the class minimum.
/// Results are memoised per heap for every member of the class.
pub struct Quotient {
    poset: UnitIntervalOrder,
    bound: Option<Vec<usize>>,
    memo: RwLock<HashMap<Word, Word>>,
    e_cache: RwLock<HashMap<Partition, NCElement>>,
}

impl Quotient {
    pub fn new(poset: UnitIntervalOrder) -> Self {
        Self { poset, bound: None, memo: Default::default(), e_cache: Default::default() }
    }

    /// Discard every word using letter `a` more than `bound[a-1]` times.
    pub fn with_bound(poset: UnitIntervalOrder, bound: &[usize]) -> Result<Self> {
        check_type(&poset, bound)?;
        Ok(Self { bound: Some(bound.to_vec()), ..Self::new(poset) })
    }

    pub fn poset(&self) -> &UnitIntervalOrder {
        &self.poset
    }

    fn within_bound(&self, w: &Word) -> bool {
        match &self.bound {
            None => true,
            Some(b) => w.type_vector(b.len()).iter().zip(b).all(|(x, y)| x <= y),
        }
    }

    /// The least word congruent to `w`.
    pub fn reduce(&self, w: &Word) -> Word {
        if w.len() <= 1 {
            return w.clone();
        }
        let heap = Heap::from_word(&self.poset, w).expect("letters validated by caller");
        if let Some(hit) = self.memo.read().expect("memo lock").get(heap.word()) {
            return hit.clone();
        }
        let class = flip_class(&self.poset, heap);
        let least = class.iter().min().expect("class is nonempty").clone();
        let mut memo = self.memo.write().expect("memo lock");
        for member in class {
            memo.insert(member, least.clone());
        }
        least
    }

    /// `sum c_w u_w`, reduced.
    pub fn element<I>(&self, terms: I) -> NCElement
    where
        I: IntoIterator<Item = (Word, BigInt)>,
    {
        let raw: Vec<(Word, BigInt)> = terms.into_iter().filter(|(w, _)| self.within_bound(w)).collect();
        let reduced: Vec<(Word, BigInt)> = raw.into_par_iter().map(|(w, c)| (self.reduce(&w), c)).collect();
        let mut out = BTreeMap::<Word, BigInt>::new();
        for (w, c) in reduced {
            *out.entry(w).or_default() += c;
        }
        NCElement::from_reduced(out)
    }

    /// Sum of `u_w` over the given words.
    pub fn sum_words<I: IntoIterator<Item = Word>>(&self, words: I) -> NCElement {
        self.element(words.into_iter().map(|w| (w, BigInt::one())))
    }

    pub fn mul(&self, a: &NCElement, b: &NCElement) -> NCElement {
        let mut raw = Vec::with_capacity(a.len() * b.len());
        for (x, cx) in a.terms() {
            for (y, cy) in b.terms() {
                raw.push((x.concat(y), cx * cy));
            }
        }
        self.element(raw)
    }

    pub fn product<'a, I: IntoIterator<Item = &'a NCElement>>(&self, factors: I) -> NCElement {
        factors.into_iter().fold(NCElement::one(), |acc, f| self.mul(&acc, f))
    }

    /// Words of length `k` whose adjacent letters satisfy `adjacent`, within the bound.
    pub fn words_where(&self, k: usize, adjacent: impl Fn(usize, usize) -> bool + Sync) -> Vec<Word> {
        let n = self.poset.n();
        let mut left: Vec<usize> = self.bound.clone().unwrap_or_else(|| vec![usize::MAX; n]);
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(k);
        fn rec(
            n: usize,
            k: usize,
            adjacent: &dyn Fn(usize, usize) -> bool,
            left: &mut [usize],
            cur: &mut Vec<u8>,
            out: &mut Vec<Word>,
        ) {
            if cur.len() == k {
                out.push(Word::new(cur.clone()));
                return;
            }
            for a in 1..=n {
                if left[a - 1] == 0 {
                    continue;
                }
                if let Some(&prev) = cur.last() {
                    if !adjacent(prev as usize, a) {
                        continue;
                    }
                }
                left[a - 1] -= 1;
                cur.push(a as u8);
                rec(n, k, adjacent, left, cur, out);
                cur.pop();
                left[a - 1] += 1;
            }
        }
        rec(n, k, &adjacent, &mut left, &mut cur, &mut out);
        out
    }

    /// Sum over strictly `P`-decreasing words of length `k`.
    pub fn e(&self, k: usize) -> NCElement {
        let p = &self.poset;
        self.sum_words(self.words_where(k, |prev, next| p.less(next, prev)))
    }

    /// Sum over words of length `k` with no `P`-descent.
    pub fn h(&self, k: usize) -> NCElement {
        let p = &self.poset;
        self.sum_words(self.words_where(k, |prev, next| !p.less(next, prev)))
    }

    /// `h_k` from `h_k = sum_{j>=1} (-1)^{j-1} e_j h_{k-j}`.
    pub fn h_by_relation(&self, k: usize) -> NCElement {
        let mut hs = vec![NCElement::one()];
        for m in 1..=k {
            let mut acc = NCElement::zero();
            for j in 1..=m {
                let term = self.mul(&self.e(j), &hs[m - j]);
                acc = if j % 2 == 1 { acc.add(&term) } else { acc.sub(&term) };
            }
            hs.push(acc);
        }
        hs.pop().expect("h_0 is present")
    }

    /// `e_lambda = e_{lambda_1} e_{lambda_2} ...`, cached.
    pub fn e_partition(&self, lambda: &Partition) -> NCElement {
        if let Some(hit) = self.e_cache.read().expect("cache lock").get(lambda) {
            return hit.clone();
        }
        let value = match lambda.parts().split_first() {
            None => NCElement::one(),
            Some((&k, rest)) => {
                let tail = self.e_partition(&Partition::new(rest.to_vec()).expect("suffix of a partition"));
                self.mul(&self.e(k), &tail)
            }
        };
        self.e_cache.write().expect("cache lock").insert(lambda.clone(), value.clone());
        value
    }

    pub fn h_partition(&self, lambda: &Partition) -> NCElement {
        let factors: Vec<NCElement> = lambda.parts().iter().map(|&k| self.h(k)).collect();
        self.product(&factors)
    }

    /// `p_k = sum_j (-1)^{j-1} j e_j h_{k-j}`.
    pub fn p_by_relation(&self, k: usize) -> NCElement {
        let mut acc = NCElement::zero();
        for j in 1..=k {
            let term = self.mul(&self.e(j), &self.h(k - j)).scale(&BigInt::from(j));
            acc = if j % 2 == 1 { acc.add(&term) } else { acc.sub(&term) };
        }
        acc
    }

    /// Sum over words with no `P`-descent and no left-to-right `P`-maximum
    /// after the first letter.
    pub fn p(&self, k: usize) -> NCElement {
        let p = &self.poset;
        let words = self.words_where(k, |prev, next| !p.less(next, prev));
        self.sum_words(words.into_iter().filter(|w| !w.has_nontrivial_ltr_maximum(p)))
    }

    pub fn p_partition(&self, lambda: &Partition) -> NCElement {
        let factors: Vec<NCElement> = lambda.parts().iter().map(|&k| self.p(k)).collect();
        self.product(&factors)
    }

    /// Sum of reading words of semistandard `P`-tableaux of shape `lambda`.
    pub fn s(&self, lambda: &Partition) -> NCElement {
        let tabs = enumerate_p_tableaux(&self.poset, lambda, self.bound.as_deref());
        self.sum_words(tabs.iter().map(|t| t.reading_word()))
    }

    /// The dual Jacobi-Trudi signed sum of products of `e`'s, in column order.
    pub fn s_jacobi_trudi(&self, lambda: &Partition) -> NCElement {
        let conj = lambda.conjugate();
        let m = lambda.part(1);
        let mut acc = NCElement::zero();
        let mut perm = Vec::with_capacity(m);
        self.jt_rec(&conj, m, &mut perm, &mut acc);
        acc
    }

    fn jt_rec(&self, conj: &Partition, m: usize, perm: &mut Vec<usize>, acc: &mut NCElement) {
        let i = perm.len() + 1;
        if i > m {
            let factors: Vec<NCElement> =
                perm.iter().enumerate().map(|(idx, &s)| self.e(conj.part(idx + 1) + s - (idx + 1))).collect();
            let term = self.product(&factors);
            let inversions =
                (0..m).flat_map(|a| (a + 1..m).map(move |b| (a, b))).filter(|&(a, b)| perm[a] > perm[b]).count();
            *acc = if inversions % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
            return;
        }
        for s in 1..=m {
            if perm.contains(&s) || conj.part(i) + s < i {
                continue;
            }
            perm.push(s);
            self.jt_rec(conj, m, perm, acc);
            perm.pop();
        }
    }

    /// `m_lambda = sum_mu N_{lambda,mu} e_mu` with `N` inverting the e-to-m transition.
    pub fn m(&self, lambda: &Partition) -> NCElement {
        let in_e = from_monomial(&SymFunc::monomial(lambda), Basis::E).expect("e spans Sym");
        let mut acc = NCElement::zero();
        for (mu, c) in in_e {
            let c = c.to_integer().expect("integral transition").coeff(0);
            acc = acc.add(&self.e_partition(&mu).scale(&c));
        }
        acc
    }

    /// `<f, gamma_mu>`: the sum over keys of type `mu` of `c q^{inv_P}`.
    pub fn pair_gamma(&self, f: &NCElement, mu: &[usize]) -> QPoly {
        let mut out = QPoly::zero();
        for (w, c) in f.terms() {
            if w.type_vector(mu.len()) == mu {
                out += &QPoly::monomial(c.clone(), w.inversions(&self.poset));
            }
        }
        out
    }

    pub fn pair_class(&self, f: &NCElement, class: &HeapClass) -> BigInt {
        f.coeff(&self.reduce(class.representative()))
    }

    /// With `h` the height of `P`: `m_lambda = 0` if `l(lambda) > h`, and
    /// `m_lambda = e_h m_{lambda^-}` if `l(lambda) = h`.
    pub fn hp_recurrence_check(&self, lambda: &Partition) -> Result<bool> {
        let h = self.poset.height();
        if lambda.len() < h {
            return Err(Error::Precondition(format!("partition {lambda} has fewer than {h} parts")));
        }
        let lhs = self.m(lambda);
        if lambda.len() > h {
            return Ok(lhs.is_zero());
        }
        let rhs = self.mul(&self.e(h), &self.m(&lambda.drop_first_column()));
        Ok(lhs == rhs)
    }

    /// All heap canonical words of `d` blocks (within the bound).
    pub fn heap_words(&self, d: usize) -> Vec<Word> {
        let p = &self.poset;
        self.words_where(d, |prev, next| !p.less(next, prev))
    }

    /// Sum of `u_{w_H}` over heaps with `d` blocks satisfying `keep`.
    pub fn heap_sum(&self, d: usize, keep: impl Fn(&Heap) -> bool + Sync) -> NCElement {
        let p = &self.poset;
        let words: Vec<Word> = self
            .heap_words(d)
            .into_par_iter()
            .filter(|w| keep(&Heap::from_word(p, w).expect("valid letters")))
            .collect();
        self.sum_words(words)
    }
}

/// Canonical words of every heap flip-equivalent to `start`.
fn flip_class(p: &UnitIntervalOrder, start: Heap) -> Vec<Word> {
    let mut seen: HashMap<Word, ()> = HashMap::from([(start.word().clone(), ())]);
    let mut stack = vec![start];
    while let Some(h) = stack.pop() {
        for t in h.flippable_triples(p) {
            let next = h.apply_flip(p, &t).expect("listed triples are flippable");
            if seen.insert(next.word().clone(), ()).is_none() {
                stack.push(next);
            }
        }
    }
    seen.into_keys().collect()
}

impl NCElement {
    /// Whether every coefficient is nonnegative.
    pub fn is_nonnegative(&self) -> bool {
        self.terms().values().all(|c| c >= &BigInt::zero())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::heaps::component_of;
    use crate::word::words_of_type;

    fn p(s: &str) -> UnitIntervalOrder {
        s.parse().unwrap()
    }

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn reduction_examples() {
        let quo = Quotient::new(p("2,3,3"));
        assert_eq!(quo.reduce(&w("311231")), quo.reduce(&w("113213")));
        assert_eq!(quo.reduce(&w("2")), w("2"));
        let keys: std::collections::BTreeSet<Word> = words_of_type(&[1, 1, 2]).iter().map(|x| quo.reduce(x)).collect();
        assert_eq!(keys.len(), 4);
    }

    /// Heap-level reduction agrees with breadth-first search on words.
    #[test]
    fn reduction_matches_word_graph() {
        for q in UnitIntervalOrder::all(4) {
            let quo = Quotient::new(q.clone());
            for mu in [vec![1, 1, 1, 1], vec![2, 1, 0, 1], vec![1, 1, 2, 1]] {
                for x in words_of_type(&mu) {
                    let comp = component_of(&q, &x, true);
                    assert_eq!(quo.reduce(&x), comp[0], "{q} {x}");
                }
            }
        }
    }

    #[test]
    fn elementary_examples() {
        let quo = Quotient::new(p("2,4,5,5,5"));
        let raw: Vec<String> =
            quo.words_where(2, |a, b| quo.poset().less(b, a)).iter().map(|x| x.to_string()).collect();
        assert_eq!(raw, vec!["31", "41", "51", "52"]);
        assert_eq!(quo.e(0), NCElement::one());
        assert!(quo.e(3).is_zero());
        assert_eq!(quo.h(1), quo.e(1));
    }

    #[test]
    fn multiplication_basics() {
        let quo = Quotient::new(p("2,3,3"));
        let a = quo.h(2);
        assert_eq!(quo.mul(&NCElement::one(), &a), a);
        assert_eq!(quo.mul(&quo.e(1), &quo.e(1)), quo.mul(&quo.h(1), &quo.h(1)));
        assert_eq!(quo.mul(&quo.e(2), &quo.e(1)), quo.mul(&quo.e(1), &quo.e(2)));
        let (x, y, z) = (quo.h(2), quo.e(2), quo.p(2));
        assert_eq!(quo.mul(&quo.mul(&x, &y), &z), quo.mul(&x, &quo.mul(&y, &z)));
    }

    #[test]
    fn running_example_pairings() {
        let q = p("2,3,3");
        let quo = Quotient::with_bound(q, &[1, 1, 2]).unwrap();
        let mu = [1, 1, 2];
        let l = part("3,1");
        assert_eq!(quo.pair_gamma(&quo.h_partition(&l), &mu), QPoly::from_i64(&[1, 3, 3, 1]));
        assert_eq!(quo.pair_gamma(&quo.p_partition(&l), &mu), QPoly::from_i64(&[1, 2, 2, 1]));
        assert_eq!(quo.pair_gamma(&quo.s(&l), &mu), QPoly::from_i64(&[0, 1, 1]));
        assert_eq!(enumerate_p_tableaux(quo.poset(), &l, Some(&mu)).len(), 2);
        assert!(quo.pair_gamma(&NCElement::one(), &mu).is_zero());
    }

    #[test]
    fn schur_and_monomial_small_cases() {
        let quo = Quotient::new(p("2,4,4,5,5"));
        assert_eq!(quo.s(&part("1")), quo.e(1));
        assert_eq!(quo.s(&part("1,1,1")), quo.e(3));
        assert_eq!(quo.s_jacobi_trudi(&part("1,1")), quo.e(2));
        assert_eq!(quo.m(&part("1,1")), quo.e(2));
        let m2 = quo.mul(&quo.e(1), &quo.e(1)).sub(&quo.e(2).scale(&BigInt::from(2)));
        assert_eq!(quo.m(&part("2")), m2);
        assert_eq!(quo.m(&part("3")), quo.p(3));
    }

    #[test]
    fn identities_small() {
        for q in UnitIntervalOrder::all(4) {
            let quo = Quotient::new(q.clone());
            for k in 0..=4 {
                assert_eq!(quo.h(k), quo.h_by_relation(k), "{q} h_{k}");
                if k >= 1 {
                    assert_eq!(quo.p(k), quo.p_by_relation(k), "{q} p_{k}");
                }
            }
            for lambda in (1..=4).flat_map(Partition::all) {
                assert_eq!(quo.s(&lambda), quo.s_jacobi_trudi(&lambda), "{q} s_{lambda}");
            }
        }
    }

    #[test]
    fn hp_recurrence_small() {
        let anti = Quotient::new(p("3,3,3"));
        assert!(anti.hp_recurrence_check(&part("2,1")).unwrap());
        assert!(anti.m(&part("1,1")).is_zero());
        let q = Quotient::new(p("2,3,3"));
        assert!(q.hp_recurrence_check(&part("2,2")).unwrap());
        assert!(q.m(&part("1,1,1")).is_zero());
        assert!(matches!(q.hp_recurrence_check(&part("3")), Err(Error::Precondition(_))));
    }

    #[test]
    fn dump_format() {
        let quo = Quotient::new(p("2,3,3"));
        // u_3 u_1 commutes to u_1 u_3, the least word of its class.
        assert_eq!(quo.e(2).dump(), "13: 1\n");
        assert_eq!(NCElement::one().dump(), "(): 1\n");
    }
}
