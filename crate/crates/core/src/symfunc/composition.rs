use std::fmt;

use serde::{Deserialize, Serialize};

use super::Partition;
use crate::error::{Error, Result};

/// A composition: an ordered sequence of positive integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidArgument(format!("composition {parts:?} has a zero part")));
        }
        Ok(Self(parts))
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

    /// The composition of `n` whose partial sums are the elements of `set`.
    pub fn from_set(n: usize, set: &[usize]) -> Result<Self> {
        let mut parts = Vec::with_capacity(set.len() + 1);
        let mut prev = 0;
        for &s in set {
            if s <= prev || s >= n {
                return Err(Error::InvalidArgument(format!(
                    "{set:?} is not an increasing subset of [1, {}]",
                    n.saturating_sub(1)
                )));
            }
            parts.push(s - prev);
            prev = s;
        }
        if n > 0 {
            parts.push(n - prev);
        }
        Ok(Self(parts))
    }

    /// Partial sums except the last: the inverse of [`Composition::from_set`].
    pub fn to_set(&self) -> Vec<usize> {
        let mut acc = 0;
        let k = self.0.len().saturating_sub(1);
        self.0[..k]
            .iter()
            .map(|&p| {
                acc += p;
                acc
            })
            .collect()
    }

    pub fn sorted(&self) -> Partition {
        Partition::from_unsorted(self.0.iter().copied())
    }

    /// All compositions of `n`, via subsets of `[n-1]`.
    pub fn all(n: usize) -> Vec<Self> {
        if n == 0 {
            return vec![Self(Vec::new())];
        }
        (0u64..1 << (n - 1))
            .map(|mask| {
                let set: Vec<usize> = (1..n).filter(|i| mask >> (i - 1) & 1 == 1).collect();
                Self::from_set(n, &set).expect("subset is in range")
            })
            .collect()
    }
}

impl TryFrom<Vec<usize>> for Composition {
    type Error = Error;

    fn try_from(v: Vec<usize>) -> Result<Self> {
        Self::new(v)
    }
}

impl From<Composition> for Vec<usize> {
    fn from(c: Composition) -> Self {
        c.0
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", crate::poset::join(&self.0))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_bijection() {
        let c = Composition::from_set(5, &[1, 3]).unwrap();
        assert_eq!(c.parts(), &[1, 2, 2]);
        assert_eq!(c.to_set(), vec![1, 3]);
        for n in 1..=8 {
            let all = Composition::all(n);
            assert_eq!(all.len(), 1 << (n - 1));
            for a in all {
                assert_eq!(Composition::from_set(n, &a.to_set()).unwrap(), a);
                assert_eq!(a.size(), n);
            }
        }
    }

    #[test]
    fn bad_sets() {
        assert!(Composition::from_set(3, &[3]).is_err());
        assert!(Composition::from_set(3, &[2, 1]).is_err());
        assert!(Composition::from_set(3, &[0]).is_err());
        assert!(Composition::new(vec![1, 0]).is_err());
    }
}
