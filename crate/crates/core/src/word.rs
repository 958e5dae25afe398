//! Words over `[n]` and their statistics relative to a poset `P`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poset::UnitIntervalOrder;

/// A word whose letters are vertices of `P` (1-based).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
pub struct Word(Vec<u8>);

impl Word {
    pub fn new(letters: Vec<u8>) -> Self {
        Self(letters)
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// 1-based letter access.
    pub fn at(&self, i: usize) -> usize {
        self.0[i - 1] as usize
    }

    /// Check every letter lies in `[n]`.
    pub fn check(&self, p: &UnitIntervalOrder) -> Result<()> {
        match self.0.iter().find(|&&a| a == 0 || a as usize > p.n()) {
            Some(a) => Err(Error::InvalidArgument(format!("letter {a} is not a vertex of P({p})"))),
            None => Ok(()),
        }
    }

    /// `mu_i` = number of occurrences of `i`.
    pub fn type_vector(&self, n: usize) -> Vec<usize> {
        let mut mu = vec![0; n];
        for &a in &self.0 {
            mu[a as usize - 1] += 1;
        }
        mu
    }

    /// Positions `i` (1-based) with `w_i >_P w_{i+1}`.
    pub fn descents(&self, p: &UnitIntervalOrder) -> Vec<usize> {
        (1..self.len()).filter(|&i| p.less(self.at(i + 1), self.at(i))).collect()
    }

    pub fn has_descent(&self, p: &UnitIntervalOrder) -> bool {
        self.0.windows(2).any(|w| p.less(w[1] as usize, w[0] as usize))
    }

    /// Pairs `i < j` with `w_i > w_j` as integers and incomparable in `P`.
    pub fn inversions(&self, p: &UnitIntervalOrder) -> usize {
        let w = &self.0;
        let mut count = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] && p.incomparable(w[i] as usize, w[j] as usize) {
                    count += 1;
                }
            }
        }
        count
    }

    /// Pairs `i < j` with `w_i < w_j` and incomparable in `P`.
    pub fn ascents_count(&self, p: &UnitIntervalOrder) -> usize {
        let w = &self.0;
        let mut count = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] < w[j] && p.incomparable(w[i] as usize, w[j] as usize) {
                    count += 1;
                }
            }
        }
        count
    }

    /// Positions `i` (1-based) where `w_i >_P w_j` for every `j < i`.
    /// Position 1 always qualifies.
    pub fn ltr_maxima(&self, p: &UnitIntervalOrder) -> Vec<usize> {
        (1..=self.len()).filter(|&i| (1..i).all(|j| p.less(self.at(j), self.at(i)))).collect()
    }

    /// Whether some position `i >= 2` is a left-to-right `P`-maximum.
    pub fn has_nontrivial_ltr_maximum(&self, p: &UnitIntervalOrder) -> bool {
        (2..=self.len()).any(|i| (1..i).all(|j| p.less(self.at(j), self.at(i))))
    }

    /// Strictly decreasing in `P`: `w_1 >_P w_2 >_P ...`.
    pub fn is_p_decreasing(&self, p: &UnitIntervalOrder) -> bool {
        self.0.windows(2).all(|w| p.less(w[1] as usize, w[0] as usize))
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn slice(&self, range: std::ops::Range<usize>) -> Word {
        Word(self.0[range].to_vec())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.iter().all(|&a| a < 10) {
            for a in &self.0 {
                write!(f, "{a}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.0.iter().map(|a| a.to_string()).collect();
            f.write_str(&parts.join(","))
        }
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Digits (`"413231"`) or, for letters above 9, a comma-separated list.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let letters: Vec<u8> = if s.contains(',') {
            s.split(',')
                .map(|t| t.trim().parse::<u8>().map_err(|_| Error::Parse(format!("bad letter {t:?}"))))
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|c| c.to_digit(10).map(|d| d as u8).ok_or_else(|| Error::Parse(format!("bad letter {c:?}"))))
                .collect::<Result<_>>()?
        };
        if letters.contains(&0) {
            return Err(Error::Parse("letters are 1-based".into()));
        }
        Ok(Word(letters))
    }
}

/// All words of type `mu`, in lexicographic order.
pub fn words_of_type(mu: &[usize]) -> Vec<Word> {
    fn rec(counts: &mut [usize], left: usize, cur: &mut Vec<u8>, out: &mut Vec<Word>) {
        if left == 0 {
            out.push(Word(cur.clone()));
            return;
        }
        for a in 0..counts.len() {
            if counts[a] == 0 {
                continue;
            }
            counts[a] -= 1;
            cur.push(a as u8 + 1);
            rec(counts, left - 1, cur, out);
            cur.pop();
            counts[a] += 1;
        }
    }
    let mut counts = mu.to_vec();
    let total = mu.iter().sum();
    let mut out = Vec::new();
    rec(&mut counts, total, &mut Vec::with_capacity(total), &mut out);
    out
}

/// `|W(mu)| = (sum mu)! / prod mu_i!`.
pub fn multinomial(mu: &[usize]) -> BigUint {
    let mut num = BigUint::one();
    let mut k = 0usize;
    for &m in mu {
        for j in 1..=m {
            k += 1;
            num = num * BigUint::from(k) / BigUint::from(j);
        }
    }
    num
}
