use std::collections::BTreeMap;
use std::ops::Add;

use super::{Composition, Partition, SymFunc};
use crate::error::{Error, Result};
use crate::qpoly::QPoly;

/// A homogeneous quasisymmetric function in the monomial basis `M_alpha`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QSymFunc {
    degree: usize,
    terms: BTreeMap<Composition, QPoly>,
}

impl QSymFunc {
    pub fn zero(degree: usize) -> Self {
        Self { degree, terms: BTreeMap::new() }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn terms(&self) -> &BTreeMap<Composition, QPoly> {
        &self.terms
    }

    pub fn coeff(&self, alpha: &Composition) -> QPoly {
        self.terms.get(alpha).cloned().unwrap_or_else(QPoly::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, alpha: Composition, c: &QPoly) -> Result<()> {
        if alpha.size() != self.degree {
            return Err(Error::DegreeMismatch { expected: self.degree, found: alpha.size() });
        }
        if c.is_zero() {
            return Ok(());
        }
        let slot = self.terms.entry(alpha.clone()).or_insert_with(QPoly::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&alpha);
        }
        Ok(())
    }

    /// `F_{n,S} = sum over T containing S of M_{alpha(T)}`.
    pub fn fundamental(n: usize, set: &[usize]) -> Result<Self> {
        Composition::from_set(n, set)?;
        let mut out = Self::zero(n);
        let free: Vec<usize> = (1..n).filter(|i| !set.contains(i)).collect();
        for mask in 0u64..1 << free.len() {
            let mut t: Vec<usize> = set.to_vec();
            t.extend(free.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &i)| i));
            t.sort_unstable();
            out.add_term(Composition::from_set(n, &t)?, &QPoly::one())?;
        }
        Ok(out)
    }

    /// Sum of `c_S F_{n,S}` over descent sets `S`.
    pub fn from_fundamental(n: usize, coeffs: &BTreeMap<Vec<usize>, QPoly>) -> Result<Self> {
        let mut out = Self::zero(n);
        for (set, c) in coeffs {
            for (alpha, one) in Self::fundamental(n, set)?.terms {
                out.add_term(alpha, &(&one * c))?;
            }
        }
        Ok(out)
    }

    /// Coefficients in the fundamental basis, by Mobius inversion over subsets.
    pub fn to_fundamental(&self) -> BTreeMap<Vec<usize>, QPoly> {
        let n = self.degree;
        let mut out: BTreeMap<Vec<usize>, QPoly> = BTreeMap::new();
        for (alpha, c) in &self.terms {
            let s = alpha.to_set();
            let free: Vec<usize> = (1..n).filter(|i| !s.contains(i)).collect();
            for mask in 0u64..1 << free.len() {
                let mut t = s.clone();
                t.extend(free.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &i)| i));
                t.sort_unstable();
                let term = if mask.count_ones() % 2 == 0 { c.clone() } else { -c };
                let slot = out.entry(t).or_insert_with(QPoly::zero);
                *slot += &term;
            }
        }
        out.retain(|_, v| !v.is_zero());
        out
    }

    /// The monomial expansion of a symmetric function, viewed in QSym.
    pub fn from_sym(f: &SymFunc) -> Result<Self> {
        let mut out = Self::zero(f.degree());
        for (lambda, c) in f.terms() {
            let c =
                c.to_integer().ok_or_else(|| Error::InvalidArgument("QSym coefficients must be integral".into()))?;
            for alpha in rearrangements(lambda) {
                out.add_term(alpha, &c)?;
            }
        }
        Ok(out)
    }
}

impl Add<&QSymFunc> for &QSymFunc {
    type Output = QSymFunc;

    fn add(self, rhs: &QSymFunc) -> QSymFunc {
        assert_eq!(self.degree, rhs.degree, "adding quasisymmetric functions of different degree");
        let mut out = self.clone();
        for (k, v) in &rhs.terms {
            out.add_term(k.clone(), v).expect("degrees agree");
        }
        out
    }
}

/// Distinct orderings of the parts of `lambda`.
pub fn rearrangements(lambda: &Partition) -> Vec<Composition> {
    fn rec(counts: &mut BTreeMap<usize, usize>, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if left == 0 {
            out.push(Composition::new(cur.clone()).expect("positive parts"));
            return;
        }
        let keys: Vec<usize> = counts.iter().filter(|(_, &c)| c > 0).map(|(&k, _)| k).collect();
        for k in keys {
            *counts.get_mut(&k).expect("present") -= 1;
            cur.push(k);
            rec(counts, left - 1, cur, out);
            cur.pop();
            *counts.get_mut(&k).expect("present") += 1;
        }
    }
    let mut counts = BTreeMap::new();
    for &p in lambda.parts() {
        *counts.entry(p).or_insert(0) += 1;
    }
    let mut out = Vec::new();
    rec(&mut counts, lambda.len(), &mut Vec::new(), &mut out);
    out
}

/// Complement every descent set in the fundamental expansion.
pub fn omega_qsym(g: &QSymFunc) -> QSymFunc {
    let n = g.degree;
    let flipped: BTreeMap<Vec<usize>, QPoly> =
        g.to_fundamental().into_iter().map(|(s, c)| ((1..n).filter(|i| !s.contains(i)).collect(), c)).collect();
    QSymFunc::from_fundamental(n, &flipped).expect("complements are valid subsets")
}

/// The symmetric function equal to `g`, or a pair of rearranged
/// compositions whose coefficients differ.
pub fn qsym_to_sym(g: &QSymFunc) -> Result<SymFunc> {
    let mut by_shape: BTreeMap<Partition, (Composition, QPoly)> = BTreeMap::new();
    for (alpha, c) in &g.terms {
        by_shape.entry(alpha.sorted()).or_insert_with(|| (alpha.clone(), c.clone()));
    }
    for (lambda, (witness, c)) in &by_shape {
        for alpha in rearrangements(lambda) {
            if &g.coeff(&alpha) != c {
                return Err(Error::NotSymmetric { left: witness.clone(), right: alpha });
            }
        }
    }
    SymFunc::from_terms(g.degree, by_shape.into_iter().map(|(k, (_, c))| (k, c.to_rational())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfunc::{omega, to_monomial, Basis};

    fn comp(v: &[usize]) -> Composition {
        Composition::new(v.to_vec()).unwrap()
    }

    fn keys(g: &QSymFunc) -> Vec<Vec<usize>> {
        g.terms().keys().map(|c| c.parts().to_vec()).collect()
    }

    #[test]
    fn fundamental_examples() {
        assert_eq!(keys(&QSymFunc::fundamental(2, &[]).unwrap()), vec![vec![1, 1], vec![2]]);
        assert_eq!(keys(&QSymFunc::fundamental(2, &[1]).unwrap()), vec![vec![1, 1]]);
        assert_eq!(keys(&QSymFunc::fundamental(3, &[1]).unwrap()), vec![vec![1, 1, 1], vec![1, 2]]);
        assert!(QSymFunc::fundamental(3, &[3]).is_err());
    }

    #[test]
    fn f_m_round_trip() {
        for n in 1..=7 {
            for alpha in Composition::all(n) {
                let set = alpha.to_set();
                let f = QSymFunc::fundamental(n, &set).unwrap();
                let back = f.to_fundamental();
                assert_eq!(back, BTreeMap::from([(set.clone(), QPoly::one())]));
                assert_eq!(QSymFunc::from_fundamental(n, &back).unwrap(), f);
            }
        }
    }

    #[test]
    fn symmetry_detection() {
        let mut g = QSymFunc::zero(3);
        g.add_term(comp(&[1, 2]), &QPoly::one()).unwrap();
        g.add_term(comp(&[2, 1]), &QPoly::one()).unwrap();
        let f = qsym_to_sym(&g).unwrap();
        assert_eq!(f, SymFunc::monomial(&"2,1".parse().unwrap()));
        let mut g = QSymFunc::zero(3);
        g.add_term(comp(&[1, 2]), &QPoly::one()).unwrap();
        match qsym_to_sym(&g) {
            Err(Error::NotSymmetric { left, right }) => {
                assert_eq!((left, right), (comp(&[1, 2]), comp(&[2, 1])));
            }
            other => panic!("expected a witness, got {other:?}"),
        }
    }

    #[test]
    fn omega_agrees_on_symmetric_input() {
        for n in 1..=6 {
            for l in Partition::all(n) {
                for basis in [Basis::S, Basis::E, Basis::M] {
                    let f = to_monomial(basis, &l);
                    let viaq = qsym_to_sym(&omega_qsym(&QSymFunc::from_sym(&f).unwrap())).unwrap();
                    assert_eq!(viaq, omega(&f), "{basis} {l}");
                }
            }
        }
    }
}
