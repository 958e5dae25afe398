use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::Partition;
use crate::error::{Error, Result};
use crate::qpoly::{QPoly, QRatPoly};

/// Bases of the ring of symmetric functions. `F` is the forgotten basis `omega(m)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    M,
    E,
    H,
    P,
    S,
    F,
}

impl Basis {
    pub const ALL: [Basis; 6] = [Basis::M, Basis::E, Basis::H, Basis::P, Basis::S, Basis::F];

    pub fn letter(self) -> &'static str {
        match self {
            Basis::M => "m",
            Basis::E => "e",
            Basis::H => "h",
            Basis::P => "p",
            Basis::S => "s",
            Basis::F => "f",
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.letter())
    }
}

impl FromStr for Basis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Basis::ALL
            .into_iter()
            .find(|b| b.letter() == s.trim().to_ascii_lowercase())
            .ok_or_else(|| Error::Parse(format!("unknown basis {s:?}; expected one of m, e, h, p, s, f")))
    }
}

/// A homogeneous symmetric function, stored in the monomial basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymFunc {
    degree: usize,
    terms: BTreeMap<Partition, QRatPoly>,
}

impl SymFunc {
    pub fn zero(degree: usize) -> Self {
        Self { degree, terms: BTreeMap::new() }
    }

    /// `m_lambda`.
    pub fn monomial(lambda: &Partition) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(lambda.clone(), QRatPoly::one());
        Self { degree: lambda.size(), terms }
    }

    /// Build from monomial coefficients, dropping zeros.
    pub fn from_terms(degree: usize, terms: impl IntoIterator<Item = (Partition, QRatPoly)>) -> Result<Self> {
        let mut out = Self::zero(degree);
        for (lambda, c) in terms {
            if lambda.size() != degree {
                return Err(Error::DegreeMismatch { expected: degree, found: lambda.size() });
            }
            out.add_term(lambda, &c);
        }
        Ok(out)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Nonzero monomial coefficients, ascending in partition order.
    pub fn terms(&self) -> &BTreeMap<Partition, QRatPoly> {
        &self.terms
    }

    pub fn coeff(&self, lambda: &Partition) -> QRatPoly {
        self.terms.get(lambda).cloned().unwrap_or_else(QRatPoly::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, lambda: Partition, c: &QRatPoly) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(lambda).or_insert_with(QRatPoly::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn scale(&self, c: &QRatPoly) -> Self {
        let mut out = Self::zero(self.degree);
        for (k, v) in &self.terms {
            out.add_term(k.clone(), &(v * c));
        }
        out
    }

    pub fn scale_int(&self, c: i64) -> Self {
        self.scale(&QRatPoly::constant(BigRational::from_integer(c.into())))
    }

    /// All coefficients integral; returns them as integer polynomials.
    pub fn integral_terms(&self) -> Option<BTreeMap<Partition, QPoly>> {
        self.terms.iter().map(|(k, v)| Some((k.clone(), v.to_integer()?))).collect()
    }

    fn check_same_degree(&self, other: &SymFunc) {
        assert_eq!(self.degree, other.degree, "adding symmetric functions of different degree");
    }
}

impl Add<&SymFunc> for &SymFunc {
    type Output = SymFunc;

    fn add(self, rhs: &SymFunc) -> SymFunc {
        self.check_same_degree(rhs);
        let mut out = self.clone();
        for (k, v) in &rhs.terms {
            out.add_term(k.clone(), v);
        }
        out
    }
}

impl Sub<&SymFunc> for &SymFunc {
    type Output = SymFunc;

    fn sub(self, rhs: &SymFunc) -> SymFunc {
        self + &(-rhs)
    }
}

impl Neg for &SymFunc {
    type Output = SymFunc;

    fn neg(self) -> SymFunc {
        SymFunc { degree: self.degree, terms: self.terms.iter().map(|(k, v)| (k.clone(), -v)).collect() }
    }
}

impl Mul<&SymFunc> for &SymFunc {
    type Output = SymFunc;

    /// The coefficient of `x^mu` in `fg` is the sum over splittings
    /// `mu = alpha + beta` of `[x^alpha]f * [x^beta]g`.
    fn mul(self, rhs: &SymFunc) -> SymFunc {
        let d = self.degree + rhs.degree;
        let mut out = SymFunc::zero(d);
        if self.is_zero() || rhs.is_zero() {
            return out;
        }
        for mu in Partition::all(d) {
            let mut acc = QRatPoly::zero();
            let mut alpha = Vec::with_capacity(mu.len());
            split(self, rhs, mu.parts(), &mut alpha, self.degree, &mut acc);
            out.add_term(mu, &acc);
        }
        out
    }
}

fn split(f: &SymFunc, g: &SymFunc, mu: &[usize], alpha: &mut Vec<usize>, rem: usize, acc: &mut QRatPoly) {
    let i = alpha.len();
    if i == mu.len() {
        if rem != 0 {
            return;
        }
        let a = Partition::from_unsorted(alpha.iter().copied());
        let Some(fa) = f.terms.get(&a) else { return };
        let b = Partition::from_unsorted(mu.iter().zip(alpha.iter()).map(|(m, x)| m - x));
        if let Some(gb) = g.terms.get(&b) {
            *acc += &(fa * gb);
        }
        return;
    }
    let tail: usize = mu[i + 1..].iter().sum();
    for x in 0..=mu[i].min(rem) {
        if rem - x > tail {
            continue;
        }
        alpha.push(x);
        split(f, g, mu, alpha, rem - x, acc);
        alpha.pop();
    }
}

fn rat(c: impl Into<BigInt>) -> QRatPoly {
    QRatPoly::constant(BigRational::from_integer(c.into()))
}

type TransitionCache = RwLock<HashMap<(Basis, Partition), SymFunc>>;

fn cache() -> &'static TransitionCache {
    static CACHE: OnceLock<TransitionCache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// The monomial expansion of `b_lambda` for basis `b`.
pub fn to_monomial(basis: Basis, lambda: &Partition) -> SymFunc {
    let key = (basis, lambda.clone());
    if let Some(hit) = cache().read().expect("cache lock").get(&key) {
        return hit.clone();
    }
    let value = compute_monomial(basis, lambda);
    cache().write().expect("cache lock").insert(key, value.clone());
    value
}

fn compute_monomial(basis: Basis, lambda: &Partition) -> SymFunc {
    let n = lambda.size();
    match basis {
        Basis::M => SymFunc::monomial(lambda),
        Basis::E => {
            let terms = Partition::all(n).into_iter().filter_map(|mu| {
                let c = count_01_matrices(lambda.parts(), mu.parts());
                (!c.is_zero()).then(|| (mu, rat(c)))
            });
            SymFunc::from_terms(n, terms).expect("degrees agree")
        }
        Basis::H => lambda.parts().iter().fold(SymFunc::monomial(&Partition::empty()), |acc, &k| {
            let hk = SymFunc::from_terms(k, Partition::all(k).into_iter().map(|mu| (mu, QRatPoly::one())))
                .expect("degrees agree");
            &acc * &hk
        }),
        Basis::P => lambda
            .parts()
            .iter()
            .fold(SymFunc::monomial(&Partition::empty()), |acc, &k| &acc * &SymFunc::monomial(&Partition::row(k))),
        Basis::S => {
            let mut out = SymFunc::zero(n);
            for (nu, c) in jacobi_trudi_dual(lambda) {
                out = &out + &to_monomial(Basis::E, &nu).scale(&rat(c));
            }
            out
        }
        Basis::F => omega(&SymFunc::monomial(lambda)),
    }
}

/// `s_lambda = det(e_{lambda'_i - i + j})`, returned in e-coordinates.
fn jacobi_trudi_dual(lambda: &Partition) -> BTreeMap<Partition, BigInt> {
    let conj = lambda.conjugate();
    let size = conj.len();
    let entry = |i: usize, j: usize| -> Option<usize> {
        let k = conj.part(i + 1) as isize - i as isize + j as isize;
        (k >= 0).then_some(k as usize)
    };
    let mut memo: HashMap<(usize, u64), BTreeMap<Partition, BigInt>> = HashMap::new();
    fn minor(
        row: usize,
        cols: u64,
        size: usize,
        entry: &dyn Fn(usize, usize) -> Option<usize>,
        memo: &mut HashMap<(usize, u64), BTreeMap<Partition, BigInt>>,
    ) -> BTreeMap<Partition, BigInt> {
        if row == size {
            return BTreeMap::from([(Partition::empty(), BigInt::one())]);
        }
        if let Some(hit) = memo.get(&(row, cols)) {
            return hit.clone();
        }
        let mut out: BTreeMap<Partition, BigInt> = BTreeMap::new();
        let mut position = 0;
        for j in 0..size {
            if cols >> j & 1 == 0 {
                continue;
            }
            let sign = if position % 2 == 0 { 1 } else { -1 };
            position += 1;
            let Some(k) = entry(row, j) else { continue };
            for (nu, c) in minor(row + 1, cols & !(1 << j), size, entry, memo) {
                let key = Partition::from_unsorted(nu.parts().iter().copied().chain([k]));
                *out.entry(key).or_default() += c * sign;
            }
        }
        out.retain(|_, c| !c.is_zero());
        memo.insert((row, cols), out.clone());
        out
    }
    minor(0, (1u64 << size) - 1, size, &entry, &mut memo)
}

/// Number of 0-1 matrices with row sums `rows` and column sums `cols`.
fn count_01_matrices(rows: &[usize], cols: &[usize]) -> BigInt {
    fn rec(rows: &[usize], caps: Vec<usize>, memo: &mut HashMap<(usize, Vec<usize>), BigInt>) -> BigInt {
        let Some((&r, rest)) = rows.split_first() else {
            return if caps.iter().all(|&c| c == 0) { BigInt::one() } else { BigInt::zero() };
        };
        let mut key_caps = caps.clone();
        key_caps.sort_unstable();
        let key = (rows.len(), key_caps);
        if let Some(hit) = memo.get(&key) {
            return hit.clone();
        }
        let mut total = BigInt::zero();
        let live: Vec<usize> = (0..caps.len()).filter(|&j| caps[j] > 0).collect();
        choose(&live, r, 0, &mut Vec::new(), &mut |picked| {
            let mut next = caps.clone();
            for &j in picked {
                next[j] -= 1;
            }
            total += rec(rest, next, memo);
        });
        memo.insert(key, total.clone());
        total
    }
    if rows.iter().sum::<usize>() != cols.iter().sum::<usize>() {
        return BigInt::zero();
    }
    rec(rows, cols.to_vec(), &mut HashMap::new())
}

fn choose(items: &[usize], k: usize, start: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
    if cur.len() == k {
        f(cur);
        return;
    }
    for i in start..items.len() {
        if items.len() - i < k - cur.len() {
            break;
        }
        cur.push(items[i]);
        choose(items, k, i + 1, cur, f);
        cur.pop();
    }
}

/// `M_{lambda,mu}`: the coefficient of `m_mu` in `e_lambda`.
pub fn transition_m(lambda: &Partition, mu: &Partition) -> Result<BigInt> {
    if lambda.size() != mu.size() {
        return Err(Error::DegreeMismatch { expected: lambda.size(), found: mu.size() });
    }
    Ok(count_01_matrices(lambda.parts(), mu.parts()))
}

/// `sum_lambda c_lambda b_lambda` in the monomial basis.
pub fn expand(basis: Basis, degree: usize, coeffs: &BTreeMap<Partition, QRatPoly>) -> Result<SymFunc> {
    let mut out = SymFunc::zero(degree);
    for (lambda, c) in coeffs {
        if lambda.size() != degree {
            return Err(Error::DegreeMismatch { expected: degree, found: lambda.size() });
        }
        out = &out + &to_monomial(basis, lambda).scale(c);
    }
    Ok(out)
}

/// Coefficients of `f` in the given basis, by triangular elimination.
pub fn from_monomial(f: &SymFunc, basis: Basis) -> Result<BTreeMap<Partition, QRatPoly>> {
    match basis {
        Basis::M => Ok(f.terms.clone()),
        Basis::H => from_monomial(&omega(f), Basis::E),
        Basis::F => Ok(omega(f).terms),
        Basis::E | Basis::S => {
            let mut rest = f.clone();
            let mut out = BTreeMap::new();
            while let Some((mu, c)) = rest.terms.iter().next_back().map(|(k, v)| (k.clone(), v.clone())) {
                let (key, image) = match basis {
                    Basis::E => {
                        let conj = mu.conjugate();
                        let img = to_monomial(Basis::E, &conj);
                        (conj, img)
                    }
                    _ => (mu.clone(), to_monomial(Basis::S, &mu)),
                };
                if image.coeff(&mu) != QRatPoly::one() {
                    return Err(Error::NotInSpan(format!("no unit pivot at {mu}")));
                }
                rest = &rest - &image.scale(&c);
                out.insert(key, c);
            }
            Ok(out)
        }
        Basis::P => {
            let mut rest = f.clone();
            let mut out = BTreeMap::new();
            while let Some((mu, c)) = rest.terms.iter().next().map(|(k, v)| (k.clone(), v.clone())) {
                let image = to_monomial(Basis::P, &mu);
                let pivot = BigRational::from_integer(mu.multiplicity_factorial());
                if image.coeff(&mu) != QRatPoly::constant(pivot.clone()) {
                    return Err(Error::NotInSpan(format!("unexpected pivot at {mu}")));
                }
                let a = c.div_scalar(&pivot);
                rest = &rest - &image.scale(&a);
                out.insert(mu, a);
            }
            Ok(out)
        }
    }
}

/// The involution with `omega(e_lambda) = h_lambda`.
pub fn omega(f: &SymFunc) -> SymFunc {
    let in_e = from_monomial(f, Basis::E).expect("every symmetric function lies in the span of e");
    expand(Basis::H, f.degree, &in_e).expect("degrees agree")
}

/// A symmetric function viewed in a chosen basis; serialises as
/// `{"degree", "basis", "terms": [{"partition", "poly"}]}` with terms
/// listed from the largest partition down.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expansion {
    pub degree: usize,
    pub basis: Basis,
    pub terms: BTreeMap<Partition, QRatPoly>,
}

impl Expansion {
    pub fn of(f: &SymFunc, basis: Basis) -> Result<Self> {
        Ok(Self { degree: f.degree(), basis, terms: from_monomial(f, basis)? })
    }

    pub fn to_symfunc(&self) -> Result<SymFunc> {
        expand(self.basis, self.degree, &self.terms)
    }

    pub fn coeff(&self, lambda: &Partition) -> QRatPoly {
        self.terms.get(lambda).cloned().unwrap_or_else(QRatPoly::zero)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum JsonPoly {
    Int(QPoly),
    Rat(QRatPoly),
}

#[derive(Serialize, Deserialize)]
struct JsonTerm {
    partition: Partition,
    poly: JsonPoly,
}

#[derive(Serialize, Deserialize)]
struct JsonExpansion {
    degree: usize,
    basis: Basis,
    terms: Vec<JsonTerm>,
}

impl Serialize for Expansion {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        JsonExpansion {
            degree: self.degree,
            basis: self.basis,
            terms: self
                .terms
                .iter()
                .rev()
                .map(|(k, v)| JsonTerm {
                    partition: k.clone(),
                    poly: match v.to_integer() {
                        Some(p) => JsonPoly::Int(p),
                        None => JsonPoly::Rat(v.clone()),
                    },
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Expansion {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = JsonExpansion::deserialize(d)?;
        let terms = raw
            .terms
            .into_iter()
            .map(|t| {
                let v = match t.poly {
                    JsonPoly::Int(p) => p.to_rational(),
                    JsonPoly::Rat(r) => r,
                };
                (t.partition, v)
            })
            .filter(|(_, v)| !v.is_zero())
            .collect();
        Ok(Self { degree: raw.degree, basis: raw.basis, terms })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn int(c: i64) -> QRatPoly {
        rat(c)
    }

    fn m_terms(f: &SymFunc) -> Vec<(String, String)> {
        f.terms().iter().rev().map(|(k, v)| (k.to_string(), v.to_string())).collect()
    }

    #[test]
    fn small_expansions() {
        assert_eq!(to_monomial(Basis::E, &p("2")), SymFunc::monomial(&p("1,1")));
        assert_eq!(to_monomial(Basis::P, &p("2")), SymFunc::monomial(&p("2")));
        let s21 = to_monomial(Basis::S, &p("2,1"));
        assert_eq!(m_terms(&s21), vec![("2,1".into(), "1".into()), ("1,1,1".into(), "2".into())]);
        let h11 = to_monomial(Basis::H, &p("1,1"));
        assert_eq!(m_terms(&h11), vec![("2".into(), "1".into()), ("1,1".into(), "2".into())]);
    }

    #[test]
    fn small_inversions() {
        let e = from_monomial(&SymFunc::monomial(&p("1,1")), Basis::E).unwrap();
        assert_eq!(e, BTreeMap::from([(p("2"), int(1))]));
        let e = from_monomial(&SymFunc::monomial(&p("2")), Basis::E).unwrap();
        assert_eq!(e, BTreeMap::from([(p("1,1"), int(1)), (p("2"), int(-2))]));
        let s = from_monomial(&to_monomial(Basis::S, &p("2,1")), Basis::S).unwrap();
        assert_eq!(s, BTreeMap::from([(p("2,1"), int(1))]));
    }

    #[test]
    fn transition_values() {
        assert_eq!(transition_m(&p("2"), &p("1,1")).unwrap(), BigInt::from(1));
        assert_eq!(transition_m(&p("2"), &p("2")).unwrap(), BigInt::from(0));
        assert_eq!(transition_m(&p("2,1"), &p("1,1,1")).unwrap(), BigInt::from(3));
        assert!(transition_m(&p("2"), &p("1")).is_err());
    }

    /// Independent enumeration of 0-1 matrices cell by cell.
    fn brute_01(rows: &[usize], cols: &[usize]) -> usize {
        let (r, c) = (rows.len(), cols.len());
        (0u32..1 << (r * c))
            .filter(|mask| {
                let cell = |i: usize, j: usize| (mask >> (i * c + j) & 1) as usize;
                (0..r).all(|i| (0..c).map(|j| cell(i, j)).sum::<usize>() == rows[i])
                    && (0..c).all(|j| (0..r).map(|i| cell(i, j)).sum::<usize>() == cols[j])
            })
            .count()
    }

    #[test]
    fn transition_matches_brute_force_and_triangularity() {
        for n in 1..=5 {
            for l in Partition::all(n) {
                for mu in Partition::all(n) {
                    let c = transition_m(&l, &mu).unwrap();
                    if l.len() * mu.len() <= 20 {
                        assert_eq!(c, BigInt::from(brute_01(l.parts(), mu.parts())));
                    }
                    if !l.conjugate().dominates(&mu) {
                        assert!(c.is_zero(), "{l} {mu}");
                    }
                }
                assert_eq!(transition_m(&l, &l.conjugate()).unwrap(), BigInt::one());
            }
        }
    }

    /// Semistandard tableaux of shape `shape` and content `content`,
    /// counted as chains of horizontal strips.
    fn kostka(shape: &Partition, content: &[usize]) -> usize {
        fn rec(cur: Vec<usize>, shape: &[usize], content: &[usize]) -> usize {
            let Some((&k, rest)) = content.split_first() else {
                return usize::from(cur.as_slice() == shape);
            };
            let mut total = 0;
            let rows = shape.len();
            let mut next = cur.clone();
            fn strips(
                i: usize,
                rem: usize,
                cur: &[usize],
                next: &mut Vec<usize>,
                shape: &[usize],
                f: &mut dyn FnMut(&[usize]),
            ) {
                if i == shape.len() {
                    if rem == 0 {
                        f(next);
                    }
                    return;
                }
                let cap = if i == 0 { shape[0] } else { shape[i].min(cur[i - 1]) };
                for add in 0..=rem.min(cap.saturating_sub(cur[i])) {
                    next[i] = cur[i] + add;
                    strips(i + 1, rem - add, cur, next, shape, f);
                }
                next[i] = cur[i];
            }
            let _ = rows;
            strips(0, k, &cur, &mut next, shape, &mut |nx| total += rec(nx.to_vec(), shape, rest));
            total
        }
        rec(vec![0; shape.len()], shape.parts(), content)
    }

    #[test]
    fn schur_matches_kostka_numbers() {
        for n in 1..=7 {
            for l in Partition::all(n) {
                let s = to_monomial(Basis::S, &l);
                for mu in Partition::all(n) {
                    let expect = kostka(&l, mu.parts());
                    assert_eq!(s.coeff(&mu), int(expect as i64), "s_{l} at m_{mu}");
                }
            }
        }
    }

    #[test]
    fn round_trips_all_bases() {
        for n in 0..=8 {
            for basis in Basis::ALL {
                for l in Partition::all(n) {
                    let back = from_monomial(&to_monomial(basis, &l), basis).unwrap();
                    assert_eq!(back, BTreeMap::from([(l.clone(), int(1))]), "{basis} {l}");
                }
            }
        }
    }

    fn e(k: usize) -> SymFunc {
        to_monomial(Basis::E, &Partition::row(k))
    }

    fn h(k: usize) -> SymFunc {
        to_monomial(Basis::H, &Partition::row(k))
    }

    #[test]
    fn e_h_relation() {
        for k in 1..=8 {
            let mut acc = SymFunc::zero(k);
            for j in 0..=k {
                let term = &e(j) * &h(k - j);
                acc = if j % 2 == 0 { &acc + &term } else { &acc - &term };
            }
            assert!(acc.is_zero(), "k = {k}");
        }
    }

    #[test]
    fn p_e_h_relation() {
        for k in 1..=8 {
            let mut acc = SymFunc::zero(k);
            for j in 1..=k {
                let term = (&e(j) * &h(k - j)).scale_int(j as i64);
                acc = if j % 2 == 1 { &acc + &term } else { &acc - &term };
            }
            assert_eq!(acc, to_monomial(Basis::P, &Partition::row(k)), "k = {k}");
        }
    }

    fn binom(n: usize, k: usize) -> i64 {
        (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i + 1) as i64)
    }

    #[test]
    fn length_restricted_monomial_sum() {
        for d in 1..=7 {
            for k in 1..=d {
                let lhs =
                    SymFunc::from_terms(d, Partition::with_length(d, k).into_iter().map(|l| (l, int(1)))).unwrap();
                let mut rhs = SymFunc::zero(d);
                for j in k..=d {
                    let term = (&e(j) * &h(d - j)).scale_int(binom(j, k));
                    rhs = if (j - k) % 2 == 0 { &rhs + &term } else { &rhs - &term };
                }
                assert_eq!(lhs, rhs, "d = {d}, k = {k}");
            }
        }
    }

    #[test]
    fn omega_laws() {
        for n in 1..=7 {
            for l in Partition::all(n) {
                let el = to_monomial(Basis::E, &l);
                assert_eq!(omega(&el), to_monomial(Basis::H, &l));
                let pl = to_monomial(Basis::P, &l);
                let sign = if (n - l.len()) % 2 == 0 { 1 } else { -1 };
                assert_eq!(omega(&pl), pl.scale_int(sign));
                assert_eq!(omega(&to_monomial(Basis::S, &l)), to_monomial(Basis::S, &l.conjugate()));
                let ml = SymFunc::monomial(&l);
                assert_eq!(omega(&omega(&ml)), ml);
            }
        }
        let s21 = to_monomial(Basis::S, &p("2,1"));
        assert_eq!(omega(&s21), s21);
    }

    #[test]
    fn json_shape() {
        let f = &to_monomial(Basis::E, &p("2,1")) + &to_monomial(Basis::E, &p("1,1,1")).scale(&QRatPoly::q_pow(2));
        let x = Expansion::of(&f, Basis::E).unwrap();
        let s = serde_json::to_string(&x).unwrap();
        assert_eq!(
            s,
            r#"{"degree":3,"basis":"e","terms":[{"partition":[2,1],"poly":[1]},{"partition":[1,1,1],"poly":[0,0,1]}]}"#
        );
        let back: Expansion = serde_json::from_str(&s).unwrap();
        assert_eq!(back, x);
        let half = Expansion::of(&to_monomial(Basis::M, &p("2")), Basis::P).unwrap();
        assert_eq!(half.coeff(&p("2")), int(1));
        let x = Expansion::of(&to_monomial(Basis::M, &p("1,1")), Basis::P).unwrap();
        let s = serde_json::to_string(&x).unwrap();
        assert!(s.contains(r#""poly":["1/2"]"#) && s.contains(r#""poly":["-1/2"]"#), "{s}");
    }
}
