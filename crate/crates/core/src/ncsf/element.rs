use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::word::Word;

/// An element of `U/I_P`: integer coefficients on canonical class words.
///
/// Arithmetic that needs reduction lives on [`super::Quotient`]; the
/// element itself only stores already-reduced keys.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct NCElement {
    terms: BTreeMap<Word, BigInt>,
}

impl NCElement {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The empty word with coefficient 1.
    pub fn one() -> Self {
        Self { terms: BTreeMap::from([(Word::default(), BigInt::from(1))]) }
    }

    pub(crate) fn from_reduced(terms: BTreeMap<Word, BigInt>) -> Self {
        let mut out = Self { terms };
        out.terms.retain(|_, c| !c.is_zero());
        out
    }

    pub fn terms(&self) -> &BTreeMap<Word, BigInt> {
        &self.terms
    }

    pub fn coeff(&self, w: &Word) -> BigInt {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub(crate) fn add_reduced(&mut self, w: Word, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(w.clone()).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn add(&self, other: &NCElement) -> NCElement {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_reduced(w.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &NCElement) -> NCElement {
        self.add(&other.scale(&BigInt::from(-1)))
    }

    pub fn scale(&self, c: &BigInt) -> NCElement {
        if c.is_zero() {
            return NCElement::zero();
        }
        NCElement { terms: self.terms.iter().map(|(w, x)| (w.clone(), x * c)).collect() }
    }

    /// Keep only words whose type vector is `mu`.
    pub fn restrict_to_type(&self, mu: &[usize]) -> NCElement {
        NCElement {
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| w.type_vector(mu.len()) == mu)
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        }
    }

    /// Keep only words of length `d`.
    pub fn homogeneous_part(&self, d: usize) -> NCElement {
        NCElement {
            terms: self.terms.iter().filter(|(w, _)| w.len() == d).map(|(w, c)| (w.clone(), c.clone())).collect(),
        }
    }

    /// Sorted `word: coefficient` lines.
    pub fn dump(&self) -> String {
        let mut s = String::new();
        for (w, c) in &self.terms {
            s.push_str(&format!("{}: {}\n", if w.is_empty() { "()".to_string() } else { w.to_string() }, c));
        }
        s
    }
}

impl fmt::Display for NCElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.dump())
    }
}
