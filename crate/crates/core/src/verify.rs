//! Identity suites over natural unit interval orders, as run by `chromq verify`.
//!
//! Each suite produces one [`CheckResult`] per instance. Conjecture checks
//! report counterexamples as [`Status::Note`] rather than failing.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::chromatic::{
    asc_des_symmetry_check, blow_up_scaling_check, coeff_in_basis, count_colorings, is_hook_heap, is_two_column_heap,
    positivity_report, sink_sum, two_column_closed_form, x_by_oracle, x_via_words,
};
use crate::error::{Error, Result};
use crate::ncsf::{NCElement, Quotient};
use crate::poset::UnitIntervalOrder;
use crate::qpoly::QPoly;
use crate::symfunc::{Basis, Partition, SymFunc};

/// Words of length `d` over `[n]` allowed per noncommutative check.
pub const WORD_BUDGET: usize = 100_000;

/// Largest degree used by noncommutative checks.
pub const MAX_NC_DEGREE: usize = 7;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Oracle,
    Commutation,
    PEquiv,
    SEquiv,
    Sinks,
    TwoColumn,
    Hook,
    HpRecurrence,
    Positivity,
    All,
}

impl Suite {
    pub const EACH: [Suite; 9] = [
        Suite::Oracle,
        Suite::Commutation,
        Suite::PEquiv,
        Suite::SEquiv,
        Suite::Sinks,
        Suite::TwoColumn,
        Suite::Hook,
        Suite::HpRecurrence,
        Suite::Positivity,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Oracle => "oracle",
            Suite::Commutation => "commutation",
            Suite::PEquiv => "p-equiv",
            Suite::SEquiv => "s-equiv",
            Suite::Sinks => "sinks",
            Suite::TwoColumn => "two-column",
            Suite::Hook => "hook",
            Suite::HpRecurrence => "hp-recurrence",
            Suite::Positivity => "positivity",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::EACH
            .into_iter()
            .chain([Suite::All])
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite '{s}'")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// An instance worth reporting that is not a failure (conjecture checks).
    Note,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub suite: Suite,
    pub instance: String,
    pub status: Status,
    pub detail: String,
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Note => "NOTE",
        };
        write!(f, "{tag} {} {}: {}", self.suite, self.instance, self.detail)
    }
}

/// The instances a suite runs on.
#[derive(Clone, Debug)]
pub struct Scope {
    pub instances: Vec<(UnitIntervalOrder, Vec<usize>)>,
}

impl Scope {
    /// Every order with `1 <= n <= max_n`, each with `mu = 1^n`.
    pub fn sweep(max_n: usize) -> Self {
        let instances = (1..=max_n).flat_map(UnitIntervalOrder::all).map(|p| {
            let n = p.n();
            (p, vec![1; n])
        });
        Self { instances: instances.collect() }
    }

    pub fn single(p: UnitIntervalOrder, mu: Option<Vec<usize>>) -> Self {
        let mu = mu.unwrap_or_else(|| vec![1; p.n()]);
        Self { instances: vec![(p, mu)] }
    }
}

/// Largest degree `d <= MAX_NC_DEGREE` with `n^d` within [`WORD_BUDGET`].
pub fn nc_degree(n: usize) -> usize {
    let mut d = 1;
    while d < MAX_NC_DEGREE && n.pow(d as u32 + 1) <= WORD_BUDGET {
        d += 1;
    }
    d
}

pub fn run(suite: Suite, scope: &Scope) -> Vec<CheckResult> {
    if suite == Suite::All {
        return Suite::EACH.into_iter().flat_map(|s| run(s, scope)).collect();
    }
    scope
        .instances
        .par_iter()
        .map(|(p, mu)| {
            let instance = format!("P({p}) mu={}", crate::poset::join(mu));
            let (status, detail) = match run_one(suite, p, mu) {
                Ok(x) => x,
                Err(e) => (Status::Fail, e.to_string()),
            };
            CheckResult { suite, instance, status, detail }
        })
        .collect()
}

fn verdict(checks: Vec<(String, bool)>) -> (Status, String) {
    let failed: Vec<&str> = checks.iter().filter(|c| !c.1).map(|c| c.0.as_str()).collect();
    if failed.is_empty() {
        (Status::Pass, format!("{} checks", checks.len()))
    } else {
        (Status::Fail, format!("failed: {}", failed.join(", ")))
    }
}

fn run_one(suite: Suite, p: &UnitIntervalOrder, mu: &[usize]) -> Result<(Status, String)> {
    let d: usize = mu.iter().sum();
    let n = p.n();
    let deg = nc_degree(n);
    let qt = Quotient::new(p.clone());
    let mut checks: Vec<(String, bool)> = Vec::new();
    match suite {
        Suite::Oracle => {
            let words = x_via_words(p, mu)?;
            checks.push(("words = oracle".into(), words == x_by_oracle(p, mu)?));
            checks.push(("asc = des".into(), asc_des_symmetry_check(p, mu, d)?));
            checks.push(("blow-up scaling".into(), blow_up_scaling_check(p, mu)?));
            for colors in [d, d + 1] {
                let count = count_colorings(p, mu, colors)?;
                checks
                    .push((format!("colourings with {colors} colours"), eval_at_ones(&words, colors) == count as u128));
            }
        }
        Suite::Commutation => {
            let h = p.height();
            for k in 1..=h {
                for l in k + 1..=h {
                    let (ek, el) = (qt.e(k), qt.e(l));
                    checks.push((format!("e{k} e{l}"), qt.mul(&ek, &el) == qt.mul(&el, &ek)));
                }
            }
            for k in 1..=deg {
                checks.push((format!("h{k} relation"), qt.h_by_relation(k) == qt.h(k)));
            }
        }
        Suite::PEquiv => {
            for k in 1..=deg {
                checks.push((format!("p{k}"), qt.p_by_relation(k) == qt.p(k)));
            }
        }
        Suite::SEquiv => {
            for k in 1..=deg.min(6) {
                for lambda in Partition::all(k) {
                    checks.push((format!("s{lambda}"), qt.s_jacobi_trudi(&lambda) == qt.s(&lambda)));
                }
            }
        }
        Suite::Sinks => {
            for k in 1..=d {
                let from_e = row_sum(p, mu, |lam| lam.len() == k)?;
                checks.push((format!("{k} sinks"), sink_sum(p, mu, k)? == from_e));
            }
            for dd in 1..=deg {
                for k in 1..=dd {
                    let lhs = Partition::with_length(dd, k).iter().fold(NCElement::zero(), |a, l| a.add(&qt.m(l)));
                    let rhs = qt.heap_sum(dd, |h| h.sinks() == k);
                    checks.push((format!("nc degree {dd}, {k} sinks"), lhs == rhs));
                }
            }
        }
        Suite::TwoColumn => {
            // The report recomputes each two-column row from heaps and fails on mismatch.
            let report = coeff_in_basis(p, mu, Basis::E)?;
            checks.push(("heap count = basis change".into(), true));
            for t in report.terms.iter().filter(|t| t.partition.as_two_column().is_some()) {
                let c = t.poly.to_integer().ok_or_else(|| Error::Disagreement("non-integral e-coefficient".into()))?;
                checks.push((format!("c{} unimodal", t.partition), c.is_unimodal()));
                if mu.iter().all(|&x| x == 1) && p.is_triangle_free() {
                    let closed = two_column_closed_form(p, &t.partition).expect("two-column shape");
                    checks.push((format!("c{} closed form", t.partition), closed == c));
                }
            }
            for dd in 1..=deg {
                for lambda in Partition::all(dd) {
                    if let Some((k, l)) = lambda.as_two_column() {
                        let rhs = qt.heap_sum(dd, |h| is_two_column_heap(h, k, l));
                        checks.push((format!("nc m{lambda}"), qt.m(&lambda) == rhs));
                    }
                }
            }
        }
        Suite::Hook => {
            coeff_in_basis(p, mu, Basis::E)?;
            checks.push(("heap count = basis change".into(), true));
            for dd in 3..=deg {
                for lambda in Partition::all(dd) {
                    if let Some((leg, arm)) = lambda.as_hook().filter(|&(l, a)| l >= 1 && a >= 1) {
                        let rhs = qt.heap_sum(dd, |h| is_hook_heap(p, h, leg, arm));
                        checks.push((format!("nc m{lambda}"), qt.m(&lambda) == rhs));
                    }
                }
            }
        }
        Suite::HpRecurrence => {
            let h = p.height();
            for dd in 1..=deg {
                for lambda in Partition::all(dd).into_iter().filter(|l| l.len() >= h) {
                    checks.push((format!("m{lambda}"), qt.hp_recurrence_check(&lambda)?));
                }
            }
        }
        Suite::Positivity => {
            let r = positivity_report(p, mu)?;
            let negative: Vec<String> =
                r.classes.iter().filter(|c| !c.h_positive).map(|c| c.representative.to_string()).collect();
            let classes = r.classes.len();
            return Ok(if r.all_positive() {
                (Status::Pass, format!("{classes} classes h-positive, X e-positive"))
            } else {
                (
                    Status::Note,
                    format!("e-positive={}, classes not h-positive: [{}]", r.e_positive, negative.join(", ")),
                )
            });
        }
        Suite::All => unreachable!("expanded by run"),
    }
    Ok(verdict(checks))
}

/// `sum c_lambda(q)` over `e`-rows selected by `keep`.
fn row_sum(p: &UnitIntervalOrder, mu: &[usize], keep: impl Fn(&Partition) -> bool) -> Result<QPoly> {
    let report = coeff_in_basis(p, mu, Basis::E)?;
    let mut out = QPoly::zero();
    for t in report.terms.iter().filter(|t| keep(&t.partition)) {
        out += &t.poly.to_integer().ok_or_else(|| Error::Disagreement("non-integral e-coefficient".into()))?;
    }
    Ok(out)
}

/// `X(1, ..., 1, 0, ...)` at `q = 1` with `colors` ones.
fn eval_at_ones(f: &SymFunc, colors: usize) -> u128 {
    let mut total: i128 = 0;
    for (lambda, c) in f.terms() {
        if lambda.len() > colors {
            continue;
        }
        let at_one = c.to_integer().expect("integral m-coefficients").at_one();
        let at_one: i128 = at_one.try_into().expect("fits in i128");
        let mut arrangements: i128 = (0..lambda.len()).map(|i| (colors - i) as i128).product();
        let mults: i128 = lambda.multiplicity_factorial().try_into().expect("small");
        arrangements /= mults;
        total += at_one * arrangements;
    }
    total as u128
}
