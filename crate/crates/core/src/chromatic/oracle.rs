//! Brute-force evaluation of `X_P(x, q; mu)` in finitely many variables.

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::poset::{check_type, UnitIntervalOrder};
use crate::qpoly::QPoly;
use crate::symfunc::{Composition, QSymFunc};

/// Which edge statistic weights a coloring.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Statistic {
    /// Pairs `(i, r), (j, s)` on an edge `i < j` with `r < s`.
    Asc,
    /// Pairs `(i, r), (j, s)` on an edge `i < j` with `r > s`.
    Des,
}

/// Colour classes are bitmasks over `[colors]`, so at most 32 colours.
pub const MAX_COLORS: usize = 32;

type Tally = HashMap<Vec<u8>, Vec<u64>>;

/// Sum of `q^{stat(kappa)} x^kappa` over proper multi-colourings with colours
/// in `[colors]`, returned in the monomial quasisymmetric basis.
///
/// Fails unless `colors >= sum(mu)`, and reports a disagreement if the
/// truncation is not quasisymmetric.
pub fn x_oracle(p: &UnitIntervalOrder, mu: &[usize], colors: usize, stat: Statistic) -> Result<QSymFunc> {
    check_type(p, mu)?;
    let d: usize = mu.iter().sum();
    if colors < d {
        return Err(Error::InvalidArgument(format!("need at least {d} colours, got {colors}")));
    }
    if colors > MAX_COLORS {
        return Err(Error::TooLarge(format!("at most {MAX_COLORS} colours are supported")));
    }
    let tally = colorings(p, mu, colors, stat);
    to_qsym(&tally, d, colors)
}

/// Number of proper multi-colourings with colours in `[colors]`.
pub fn count_colorings(p: &UnitIntervalOrder, mu: &[usize], colors: usize) -> Result<u64> {
    check_type(p, mu)?;
    if colors > MAX_COLORS {
        return Err(Error::TooLarge(format!("at most {MAX_COLORS} colours are supported")));
    }
    let tally = colorings(p, mu, colors, Statistic::Asc);
    Ok(tally.values().flatten().sum())
}

fn colorings(p: &UnitIntervalOrder, mu: &[usize], colors: usize, stat: Statistic) -> Tally {
    let vertices: Vec<usize> = (1..=p.n()).filter(|&a| mu[a - 1] > 0).collect();
    let Some((&first, _)) = vertices.split_first() else {
        return Tally::from([(vec![0; colors], vec![1])]);
    };
    let first_sets = subsets(colors, mu[first - 1], 0);
    first_sets
        .into_par_iter()
        .map(|set| {
            let mut tally = Tally::new();
            let mut masks = vec![0u32; vertices.len()];
            masks[0] = set;
            let mut exps = vec![0u8; colors];
            bump(&mut exps, set, 1);
            extend(p, mu, &vertices, 1, &mut masks, 0, &mut exps, colors, stat, &mut tally);
            tally
        })
        .reduce(Tally::new, |mut a, b| {
            for (k, v) in b {
                merge(a.entry(k).or_default(), &v);
            }
            a
        })
}

#[allow(clippy::too_many_arguments)]
fn extend(
    p: &UnitIntervalOrder,
    mu: &[usize],
    vertices: &[usize],
    k: usize,
    masks: &mut [u32],
    weight: usize,
    exps: &mut [u8],
    colors: usize,
    stat: Statistic,
    tally: &mut Tally,
) {
    if k == vertices.len() {
        let slot = tally.entry(exps.to_vec()).or_default();
        if slot.len() <= weight {
            slot.resize(weight + 1, 0);
        }
        slot[weight] += 1;
        return;
    }
    let j = vertices[k];
    let mut forbidden = 0u32;
    for (idx, &i) in vertices[..k].iter().enumerate() {
        if p.incomparable(i, j) {
            forbidden |= masks[idx];
        }
    }
    for set in subsets(colors, mu[j - 1], forbidden) {
        let mut w = weight;
        for (idx, &i) in vertices[..k].iter().enumerate() {
            if p.incomparable(i, j) {
                w += pairs(masks[idx], set, stat);
            }
        }
        masks[k] = set;
        bump(exps, set, 1);
        extend(p, mu, vertices, k + 1, masks, w, exps, colors, stat, tally);
        bump(exps, set, -1);
    }
}

/// Pairs `r` in `lower`, `s` in `upper` (lower vertex index first) ordered by the statistic.
fn pairs(lower: u32, upper: u32, stat: Statistic) -> usize {
    let mut count = 0;
    for r in 0..32 {
        if lower >> r & 1 == 0 {
            continue;
        }
        let above = if r == 31 { 0 } else { upper >> (r + 1) };
        let below = upper & ((1u32 << r) - 1);
        count += match stat {
            Statistic::Asc => above.count_ones(),
            Statistic::Des => below.count_ones(),
        } as usize;
    }
    count
}

fn bump(exps: &mut [u8], set: u32, delta: i8) {
    for (c, e) in exps.iter_mut().enumerate() {
        if set >> c & 1 == 1 {
            *e = (*e as i8 + delta) as u8;
        }
    }
}

/// `size`-subsets of `[colors]` avoiding `forbidden`, as bitmasks.
fn subsets(colors: usize, size: usize, forbidden: u32) -> Vec<u32> {
    let mut out = Vec::new();
    fn rec(c: usize, colors: usize, left: usize, cur: u32, forbidden: u32, out: &mut Vec<u32>) {
        if left == 0 {
            out.push(cur);
            return;
        }
        if colors - c < left {
            return;
        }
        if forbidden >> c & 1 == 0 {
            rec(c + 1, colors, left - 1, cur | 1 << c, forbidden, out);
        }
        rec(c + 1, colors, left, cur, forbidden, out);
    }
    rec(0, colors, size, 0, forbidden, &mut out);
    out
}

fn merge(into: &mut Vec<u64>, from: &[u64]) {
    if into.len() < from.len() {
        into.resize(from.len(), 0);
    }
    for (a, b) in into.iter_mut().zip(from) {
        *a += b;
    }
}

fn to_poly(counts: &[u64]) -> QPoly {
    QPoly::from_coeffs(counts.iter().map(|&c| c.into()).collect())
}

/// Read off `M_alpha` coefficients, checking that every monomial with the
/// same nonzero exponent sequence carries the same coefficient.
fn to_qsym(tally: &Tally, d: usize, colors: usize) -> Result<QSymFunc> {
    let mut by_comp: BTreeMap<Composition, (QPoly, usize)> = BTreeMap::new();
    let mut packed: HashMap<Composition, QPoly> = HashMap::new();
    for (exps, counts) in tally {
        let parts: Vec<usize> = exps.iter().filter(|&&e| e > 0).map(|&e| e as usize).collect();
        let alpha = Composition::new(parts).expect("nonzero parts");
        let poly = to_poly(counts);
        if exps[..alpha.len()].iter().all(|&e| e > 0) {
            packed.insert(alpha.clone(), poly.clone());
        }
        let entry = by_comp.entry(alpha.clone()).or_insert_with(|| (poly.clone(), 0));
        if entry.0 != poly {
            return Err(Error::Disagreement(format!(
                "colouring sum is not quasisymmetric at {alpha}: {} vs {}",
                entry.0, poly
            )));
        }
        entry.1 += 1;
    }
    let mut out = QSymFunc::zero(d);
    for (alpha, (poly, seen)) in by_comp {
        let expected = binomial(colors, alpha.len());
        if seen as u128 != expected {
            return Err(Error::Disagreement(format!(
                "monomials of shape {alpha} appear {seen} times, expected {expected}"
            )));
        }
        debug_assert_eq!(packed.get(&alpha), Some(&poly));
        out.add_term(alpha, &poly)?;
    }
    Ok(out)
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}
