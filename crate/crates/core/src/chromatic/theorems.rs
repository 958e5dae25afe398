//! Heap-count formulas for `e`-coefficients and the conjecture checkers.

use serde::Serialize;

use super::expansion::{k_class, x_via_words};
use super::oracle::{x_oracle, Statistic};
use crate::error::{Error, Result};
use crate::heaps::{enumerate_classes, enumerate_heaps, ComponentKind, Heap};
use crate::poset::{check_type, UnitIntervalOrder};
use crate::qpoly::{q_factorial, QPoly};
use crate::symfunc::{from_monomial, Basis, Partition};
use crate::word::Word;

/// `k` sinks, `l` blocks of rank 2, nothing higher, and no component
/// with more rank-2 blocks than sinks.
pub fn is_two_column_heap(h: &Heap, k: usize, l: usize) -> bool {
    if h.len() != k + l || h.sinks() != k || h.levels().iter().any(|&r| r > 2) {
        return false;
    }
    h.components().iter().all(|c| !matches!(h.classify_component(c), Ok(ComponentKind::W) | Err(_)))
}

/// Membership in the hook family for `e_{(arm+1, 1^leg)}`: `arm + leg + 1`
/// blocks, `leg + 1` sinks, and either a single rank-2 block or two rank-2
/// blocks sharing one sink, covering nothing else, with no forbidden path.
pub fn is_hook_heap(p: &UnitIntervalOrder, h: &Heap, leg: usize, arm: usize) -> bool {
    if h.len() != arm + leg + 1 || h.sinks() != leg + 1 {
        return false;
    }
    let second: Vec<usize> = (0..h.len()).filter(|&i| h.level(i) == 2).collect();
    match second.as_slice() {
        [_] => true,
        &[x, y] => {
            let shared = h.flippable_triples(p).into_iter().find(|t| {
                let ends = [h.block_index(t.p), h.block_index(t.r)];
                (ends == [Some(x), Some(y)] || ends == [Some(y), Some(x)])
                    && h.block_index(t.q).is_some_and(|q| h.level(q) == 1)
            });
            let Some(t) = shared else { return false };
            let q = h.block_index(t.q).expect("listed block");
            h.lower_covers(x) == [q] && h.lower_covers(y) == [q] && h.forbidden_paths(p).is_empty()
        }
        _ => false,
    }
}

fn heap_sum(p: &UnitIntervalOrder, mu: &[usize], keep: impl Fn(&Heap) -> bool) -> Result<QPoly> {
    let mut out = QPoly::zero();
    for h in enumerate_heaps(p, mu)? {
        if keep(&h) {
            out += &QPoly::q_pow(h.asc(p));
        }
    }
    Ok(out)
}

/// Coefficient of `e_{(2^l, 1^{k-l})}` in `X_P(x, q; mu)` as a heap count.
pub fn coeff_e_two_column(p: &UnitIntervalOrder, mu: &[usize], k: usize, l: usize) -> Result<QPoly> {
    if l > k {
        return Err(Error::Precondition(format!("two-column shape needs k >= l, got k={k}, l={l}")));
    }
    heap_sum(p, mu, |h| is_two_column_heap(h, k, l))
}

/// Coefficient of `e_{(arm+1, 1^leg)}` in `X_P(x, q; mu)` as a heap count.
pub fn coeff_e_hook(p: &UnitIntervalOrder, mu: &[usize], arm: usize, leg: usize) -> Result<QPoly> {
    if arm == 0 || leg == 0 {
        return Err(Error::Precondition("hook needs arm and leg at least 1".into()));
    }
    heap_sum(p, mu, |h| is_hook_heap(p, h, leg, arm))
}

/// `sum q^{asc(H)}` over heaps of type `mu` with exactly `k` sinks; equals
/// the sum of `c_lambda` over `lambda` with `k` parts.
pub fn sink_sum(p: &UnitIntervalOrder, mu: &[usize], k: usize) -> Result<QPoly> {
    if k == 0 {
        return Err(Error::Precondition("sink count must be positive".into()));
    }
    heap_sum(p, mu, |h| h.sinks() == k)
}

/// Closed form for two-column `e`-coefficients of `X_P` (with `mu = 1^n`)
/// when `inc(P)` is a disjoint union of paths; `None` when `lambda` is not
/// two-column. Every two-column coefficient vanishes if `inc(P)` has a triangle.
pub fn two_column_closed_form(p: &UnitIntervalOrder, lambda: &Partition) -> Option<QPoly> {
    lambda.as_two_column()?;
    if !p.is_triangle_free() {
        return Some(QPoly::zero());
    }
    let n = p.n();
    let comps = p.components();
    let n_odd = comps.iter().filter(|c| (c.end() - c.start() + 1) % 2 == 1).count();
    let n_even = comps.len() - n_odd;
    let target = Partition::new(vec![(n + n_odd) / 2, (n - n_odd) / 2].into_iter().filter(|&x| x > 0).collect())
        .expect("decreasing parts")
        .conjugate();
    if *lambda != target {
        return Some(QPoly::zero());
    }
    let base = QPoly::from_i64(&[1, 1]);
    let mut out = QPoly::q_pow((n - 2 * n_even - n_odd) / 2);
    for _ in 0..n_even {
        out = &out * &base;
    }
    Some(out)
}

/// One flip class in a positivity report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassPositivity {
    pub representative: Word,
    pub size: usize,
    pub asc: usize,
    pub h_positive: bool,
}

/// Instances of the positivity conjectures; reported, never asserted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PositivityReport {
    pub poset: UnitIntervalOrder,
    pub mu: Vec<usize>,
    pub classes: Vec<ClassPositivity>,
    pub e_positive: bool,
}

impl PositivityReport {
    pub fn all_positive(&self) -> bool {
        self.e_positive && self.classes.iter().all(|c| c.h_positive)
    }
}

pub fn positivity_report(p: &UnitIntervalOrder, mu: &[usize]) -> Result<PositivityReport> {
    check_type(p, mu)?;
    let mut classes = Vec::new();
    for c in enumerate_classes(p, mu)? {
        let k = k_class(p, &c)?;
        let h_positive = from_monomial(&k, Basis::H)?.values().all(|c| c.is_nonnegative());
        classes.push(ClassPositivity {
            representative: c.representative().clone(),
            size: c.members.len(),
            asc: c.asc,
            h_positive,
        });
    }
    let x = x_via_words(p, mu)?;
    let e_positive = from_monomial(&x, Basis::E)?.values().all(|c| c.is_nonnegative());
    Ok(PositivityReport { poset: p.clone(), mu: mu.to_vec(), classes, e_positive })
}

/// Whether the colouring oracle gives the same result under `asc` and `des`.
pub fn asc_des_symmetry_check(p: &UnitIntervalOrder, mu: &[usize], colors: usize) -> Result<bool> {
    Ok(x_oracle(p, mu, colors, Statistic::Asc)? == x_oracle(p, mu, colors, Statistic::Des)?)
}

/// Whether `X_{P^mu}(x, q) = prod_a [mu_a]_q! X_P(x, q; mu)`.
pub fn blow_up_scaling_check(p: &UnitIntervalOrder, mu: &[usize]) -> Result<bool> {
    check_type(p, mu)?;
    let big = p.blow_up(mu)?;
    let lhs = x_via_words(&big, &vec![1; big.n()])?;
    let factor = mu.iter().fold(QPoly::one(), |acc, &k| &acc * &q_factorial(k));
    Ok(lhs == x_via_words(p, mu)?.scale(&factor.to_rational()))
}
