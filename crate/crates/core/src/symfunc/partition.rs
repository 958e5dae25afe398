use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An integer partition, parts weakly decreasing and positive.
///
/// The derived `Ord` compares part sequences lexicographically, which is
/// the reverse-lexicographic total order refining dominance.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidArgument(format!("partition {parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidArgument(format!("partition {parts:?} is not weakly decreasing")));
        }
        Ok(Self(parts))
    }

    /// Sort and drop zero parts.
    pub fn from_unsorted(parts: impl IntoIterator<Item = usize>) -> Self {
        let mut v: Vec<usize> = parts.into_iter().filter(|&p| p > 0).collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        Self(v)
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    /// `(k)`, or the empty partition for `k = 0`.
    pub fn row(k: usize) -> Self {
        Self::from_unsorted([k])
    }

    /// `(1^k)`.
    pub fn column(k: usize) -> Self {
        Self(vec![1; k])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `i`-th part, 1-based, zero past the end.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Self {
        let first = self.0.first().copied().unwrap_or(0);
        Self((1..=first).map(|j| self.0.iter().filter(|&&p| p >= j).count()).collect())
    }

    /// `multiplicities()[i]` is the number of parts equal to `i`.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut m = vec![0; self.0.first().copied().unwrap_or(0) + 1];
        for &p in &self.0 {
            m[p] += 1;
        }
        m
    }

    /// `z_lambda = prod_i i^{m_i} m_i!`.
    pub fn z(&self) -> BigInt {
        let mut z = BigInt::one();
        for (i, &mi) in self.multiplicities().iter().enumerate().skip(1) {
            for k in 1..=mi {
                z *= BigInt::from(i) * BigInt::from(k);
            }
        }
        z
    }

    /// `prod_i m_i!`.
    pub fn multiplicity_factorial(&self) -> BigInt {
        let mut f = BigInt::one();
        for &mi in self.multiplicities().iter().skip(1) {
            for k in 1..=mi {
                f *= BigInt::from(k);
            }
        }
        f
    }

    /// Dominance order: `self` dominates `other` (same size assumed).
    pub fn dominates(&self, other: &Partition) -> bool {
        let mut a = 0;
        let mut b = 0;
        for i in 0..self.len().max(other.len()) {
            a += self.0.get(i).copied().unwrap_or(0);
            b += other.0.get(i).copied().unwrap_or(0);
            if a < b {
                return false;
            }
        }
        true
    }

    /// Hook shape `(a+1, 1^l)` as `(l, a)`: leg length and arm length.
    pub fn as_hook(&self) -> Option<(usize, usize)> {
        let first = *self.0.first()?;
        self.0[1..].iter().all(|&p| p == 1).then(|| (self.len() - 1, first - 1))
    }

    /// Shape `(2^l, 1^{k-l})` as `(k, l)`.
    pub fn as_two_column(&self) -> Option<(usize, usize)> {
        if self.0.iter().all(|&p| p <= 2) {
            Some((self.len(), self.0.iter().filter(|&&p| p == 2).count()))
        } else {
            None
        }
    }

    /// Remove the first column: `(lambda_1 - 1, lambda_2 - 1, ...)`.
    pub fn drop_first_column(&self) -> Self {
        Self::from_unsorted(self.0.iter().map(|&p| p - 1))
    }

    /// All partitions of `n`, in decreasing reverse-lexicographic order.
    pub fn all(n: usize) -> Vec<Self> {
        fn rec(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=rem.min(max)).rev() {
                cur.push(p);
                rec(rem - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// Partitions of `n` with exactly `k` parts.
    pub fn with_length(n: usize, k: usize) -> Vec<Self> {
        Self::all(n).into_iter().filter(|p| p.len() == k).collect()
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(v: Vec<usize>) -> Result<Self> {
        Self::new(v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::poset::join(&self.0))
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::new(crate::poset::parse_list(s)?)
    }
}
