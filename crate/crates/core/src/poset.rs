//! Natural unit interval orders and their Dyck-path encoding.
//!
//! A weakly increasing sequence `m = (m_1, ..., m_n)` with `i <= m_i <= n`
//! defines the poset `P(m)` on `[n]` with `i <_P j` iff `m_i < j`. All
//! interfaces speak 1-based vertices.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct UnitIntervalOrder {
    m: Vec<usize>,
}

impl UnitIntervalOrder {
    pub fn new(m: Vec<usize>) -> Result<Self> {
        let n = m.len();
        if n == 0 {
            return Err(Error::InvalidSequence("sequence is empty".into()));
        }
        if n > 64 {
            return Err(Error::InvalidSequence(format!("n = {n} exceeds 64 vertices")));
        }
        for (idx, &mi) in m.iter().enumerate() {
            let i = idx + 1;
            if mi < i || mi > n {
                return Err(Error::InvalidSequence(format!("m_{i} = {mi} is outside [{i}, {n}]")));
            }
            if idx > 0 && m[idx - 1] > mi {
                return Err(Error::InvalidSequence(format!("not weakly increasing at position {i}")));
            }
        }
        Ok(Self { m })
    }

    /// The chain `1 <_P 2 <_P ... <_P n`.
    pub fn chain(n: usize) -> Self {
        Self::new((1..=n).collect()).expect("chain sequence is valid")
    }

    /// The antichain on `[n]`; its incomparability graph is complete.
    pub fn antichain(n: usize) -> Self {
        Self::new(vec![n; n]).expect("antichain sequence is valid")
    }

    /// Every natural unit interval order on `[n]`, in lexicographic order of `m`.
    pub fn all(n: usize) -> Vec<Self> {
        fn rec(n: usize, m: &mut Vec<usize>, out: &mut Vec<UnitIntervalOrder>) {
            let i = m.len() + 1;
            if i > n {
                out.push(UnitIntervalOrder { m: m.clone() });
                return;
            }
            let lo = m.last().copied().unwrap_or(1).max(i);
            for v in lo..=n {
                m.push(v);
                rec(n, m, out);
                m.pop();
            }
        }
        let mut out = Vec::new();
        if n > 0 {
            rec(n, &mut Vec::with_capacity(n), &mut out);
        }
        out
    }

    pub fn n(&self) -> usize {
        self.m.len()
    }

    pub fn m(&self) -> &[usize] {
        &self.m
    }

    /// `a <_P b`.
    #[inline]
    pub fn less(&self, a: usize, b: usize) -> bool {
        a < b && self.m[a - 1] < b
    }

    /// Distinct and incomparable, i.e. adjacent in `inc(P)`.
    #[inline]
    pub fn incomparable(&self, a: usize, b: usize) -> bool {
        if a == b {
            return false;
        }
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        hi <= self.m[lo - 1]
    }

    /// Equal or incomparable: the blocks of columns `a` and `b` overlap.
    #[inline]
    pub fn overlaps(&self, a: usize, b: usize) -> bool {
        a == b || self.incomparable(a, b)
    }

    /// Edges `{i, j}` with `i < j` of the incomparability graph.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 1..=self.n() {
            for j in i + 1..=self.m[i - 1] {
                out.push((i, j));
            }
        }
        out
    }

    /// Height read off the bounce path of the Dyck path.
    pub fn height(&self) -> usize {
        let n = self.n();
        let mut x = 0;
        let mut bounces = 0;
        while x < n {
            x = self.m[x];
            bounces += 1;
        }
        bounces
    }

    /// Longest chain of `P`, by dynamic programming over `<_P`.
    pub fn longest_chain(&self) -> usize {
        let n = self.n();
        let mut best = vec![1usize; n + 1];
        for j in 1..=n {
            for i in 1..j {
                if self.less(i, j) {
                    best[j] = best[j].max(best[i] + 1);
                }
            }
        }
        best[1..].iter().copied().max().unwrap_or(0)
    }

    /// Connected components of `inc(P)`; each is a run of consecutive vertices.
    pub fn components(&self) -> Vec<std::ops::RangeInclusive<usize>> {
        let mut out = Vec::new();
        let mut start = 1;
        let mut reach = 0;
        for i in 1..=self.n() {
            reach = reach.max(self.m[i - 1]);
            if reach == i {
                out.push(start..=i);
                start = i + 1;
            }
        }
        out
    }

    /// True when `inc(P)` has no triangle, equivalently it is a disjoint union of paths.
    pub fn is_triangle_free(&self) -> bool {
        self.m.iter().enumerate().all(|(idx, &mi)| mi <= idx + 2)
    }

    pub fn to_dyck(&self) -> DyckPath {
        let mut steps = Vec::with_capacity(2 * self.n());
        let mut y = 0;
        for &mi in &self.m {
            while y < mi {
                steps.push(Step::North);
                y += 1;
            }
            steps.push(Step::East);
        }
        DyckPath { steps }
    }

    pub fn from_dyck(path: &DyckPath) -> Result<Self> {
        let mut m = Vec::new();
        let mut y = 0;
        for step in &path.steps {
            match step {
                Step::North => y += 1,
                Step::East => m.push(y),
            }
        }
        Self::new(m).map_err(|e| Error::InvalidDyckPath(e.to_string()))
    }

    /// The order whose incomparability graph is `P^mu`: each vertex `a` is
    /// replaced by a clique of size `mu_a` (vertices with `mu_a = 0` vanish).
    pub fn blow_up(&self, mu: &[usize]) -> Result<Self> {
        check_type(self, mu)?;
        let total: usize = mu.iter().sum();
        if total == 0 {
            return Err(Error::InvalidType("blow-up of the all-zero type vector".into()));
        }
        let mut prefix = vec![0usize; self.n() + 1];
        for a in 1..=self.n() {
            prefix[a] = prefix[a - 1] + mu[a - 1];
        }
        let mut m = Vec::with_capacity(total);
        for a in 1..=self.n() {
            if mu[a - 1] == 0 {
                continue;
            }
            let reach = (a..=self.m[a - 1]).rev().find(|&b| mu[b - 1] > 0).expect("a itself has positive multiplicity");
            m.extend(std::iter::repeat_n(prefix[reach], mu[a - 1]));
        }
        Self::new(m)
    }

    /// Left endpoints of a unit interval model: interval `a` is
    /// `[x_a, x_a + 1]` and `a <_P b` iff interval `a` lies strictly left of `b`.
    ///
    /// Solved as a system of difference constraints by Bellman-Ford.
    pub fn interval_model(&self) -> Vec<f64> {
        let n = self.n();
        let eps = 1.0 / (4.0 * n as f64);
        // edge (u, v, w) encodes x_v - x_u <= w
        let mut edges: Vec<(usize, usize, f64)> = Vec::new();
        for i in 0..n {
            if i + 1 < n {
                edges.push((i + 1, i, -eps));
            }
            let mi = self.m[i] - 1;
            if mi > i {
                edges.push((i, mi, 1.0 - eps));
            }
            if mi + 1 < n {
                edges.push((mi + 1, i, -1.0 - eps));
            }
        }
        let mut dist = vec![0.0f64; n];
        for _ in 0..=n {
            let mut changed = false;
            for &(u, v, w) in &edges {
                if dist[u] + w < dist[v] - 1e-12 {
                    dist[v] = dist[u] + w;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        let min = dist.iter().copied().fold(f64::INFINITY, f64::min);
        dist.iter().map(|x| x - min).collect()
    }
}

impl TryFrom<Vec<usize>> for UnitIntervalOrder {
    type Error = Error;

    fn try_from(m: Vec<usize>) -> Result<Self> {
        Self::new(m)
    }
}

impl From<UnitIntervalOrder> for Vec<usize> {
    fn from(p: UnitIntervalOrder) -> Self {
        p.m
    }
}

impl fmt::Display for UnitIntervalOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", join(&self.m))
    }
}

impl FromStr for UnitIntervalOrder {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::new(parse_list(s)?)
    }
}

/// Parse a comma-separated list of nonnegative integers such as `"2,4,5,5,5"`.
pub fn parse_list(s: &str) -> Result<Vec<usize>> {
    let s = s.trim().trim_start_matches('(').trim_end_matches(')');
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| {
            t.trim().parse::<usize>().map_err(|_| Error::Parse(format!("not a nonnegative integer: {:?}", t.trim())))
        })
        .collect()
}

pub(crate) fn join(xs: &[usize]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

/// Validate a type vector `mu` against `P`: one entry per vertex.
pub fn check_type(p: &UnitIntervalOrder, mu: &[usize]) -> Result<()> {
    if mu.len() != p.n() {
        return Err(Error::InvalidType(format!(
            "type vector has {} entries but the poset has {} vertices",
            mu.len(),
            p.n()
        )));
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Step {
    North,
    East,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DyckPath {
    steps: Vec<Step>,
}

impl DyckPath {
    pub fn new(steps: Vec<Step>) -> Result<Self> {
        if !steps.len().is_multiple_of(2) || steps.is_empty() {
            return Err(Error::InvalidDyckPath(format!("odd or empty length {}", steps.len())));
        }
        let mut north = 0usize;
        let mut east = 0usize;
        for (k, s) in steps.iter().enumerate() {
            match s {
                Step::North => north += 1,
                Step::East => east += 1,
            }
            if east > north {
                return Err(Error::InvalidDyckPath(format!("goes below the diagonal after step {}", k + 1)));
            }
        }
        if north != east {
            return Err(Error::InvalidDyckPath("does not end on the diagonal".into()));
        }
        Ok(Self { steps })
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn semilength(&self) -> usize {
        self.steps.len() / 2
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            f.write_str(match s {
                Step::North => "N",
                Step::East => "E",
            })?;
        }
        Ok(())
    }
}

impl FromStr for DyckPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let steps = s
            .trim()
            .chars()
            .map(|c| match c {
                'N' | 'n' => Ok(Step::North),
                'E' | 'e' => Ok(Step::East),
                other => Err(Error::InvalidDyckPath(format!("unknown step {other:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(steps)
    }
}
