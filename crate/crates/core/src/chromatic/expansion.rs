use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::oracle::{x_oracle, Statistic};
use super::theorems::{coeff_e_hook, coeff_e_two_column};
use crate::error::{Error, Result};
use crate::heaps::{Heap, HeapClass};
use crate::ncsf::Quotient;
use crate::poset::{check_type, UnitIntervalOrder};
use crate::qpoly::{QPoly, QRatPoly};
use crate::symfunc::{from_monomial, omega, qsym_to_sym, Basis, Expansion, Partition, QSymFunc, SymFunc};
use crate::word::{words_of_type, Word};

/// Largest degree for which reports also run the colouring oracle.
pub const ORACLE_MAX_DEGREE: usize = 7;

/// `sum_w q^{inv_P(w)} F_{d, Des_P(w)}` over words of type `mu`, i.e. `omega X`
/// as a quasisymmetric function.
pub fn omega_x_qsym(p: &UnitIntervalOrder, mu: &[usize]) -> Result<QSymFunc> {
    check_type(p, mu)?;
    let d: usize = mu.iter().sum();
    let acc = words_of_type(mu)
        .into_par_iter()
        .fold(BTreeMap::<Vec<usize>, QPoly>::new, |mut acc, w| {
            let slot = acc.entry(w.descents(p)).or_insert_with(QPoly::zero);
            *slot += &QPoly::q_pow(w.inversions(p));
            acc
        })
        .reduce(BTreeMap::new, |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_insert_with(QPoly::zero) += &v;
            }
            a
        });
    QSymFunc::from_fundamental(d, &acc)
}

/// `X_P(x, q; mu)` from the fundamental expansion of `omega X`.
pub fn x_via_words(p: &UnitIntervalOrder, mu: &[usize]) -> Result<SymFunc> {
    Ok(omega(&qsym_to_sym(&omega_x_qsym(p, mu)?)?))
}

/// `X_P(x, q; mu)` from the colouring oracle in `sum(mu)` variables.
pub fn x_by_oracle(p: &UnitIntervalOrder, mu: &[usize]) -> Result<SymFunc> {
    let d = mu.iter().sum();
    qsym_to_sym(&x_oracle(p, mu, d, Statistic::Asc)?)
}

/// `K_H = sum_{w in W(H)} F_{d, Des_P(w)}`.
pub fn k_heap(p: &UnitIntervalOrder, h: &Heap) -> Result<QSymFunc> {
    let mut acc: BTreeMap<Vec<usize>, QPoly> = BTreeMap::new();
    for w in h.words() {
        *acc.entry(w.descents(p)).or_insert_with(QPoly::zero) += &QPoly::one();
    }
    QSymFunc::from_fundamental(h.len(), &acc)
}

/// `K_[H]`: the sum of `K_H` over a flip class, which must be symmetric.
pub fn k_class(p: &UnitIntervalOrder, class: &HeapClass) -> Result<SymFunc> {
    let d = class.members.first().map_or(0, Heap::len);
    let mut total = QSymFunc::zero(d);
    for h in &class.members {
        total = &total + &k_heap(p, h)?;
    }
    qsym_to_sym(&total)
}

/// Where a number in a report came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Source {
    /// Brute-force colouring enumeration.
    Oracle,
    /// Fundamental expansion over words of type `mu`.
    Words,
    /// Pairing of a noncommutative function with `gamma_mu` (word or tableau count).
    Pairing,
    /// Heap count from the two-column or hook theorems.
    Theorem,
    /// Exact linear algebra from the monomial expansion.
    BasisChange,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReportTerm {
    pub partition: Partition,
    pub poly: QRatPoly,
    pub source: Source,
}

/// Coefficients of `X` (or `omega X`) in one basis, one row per partition
/// of the degree, largest partition first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpansionReport {
    pub poset: UnitIntervalOrder,
    pub mu: Vec<usize>,
    pub basis: Basis,
    pub degree: usize,
    pub normalization: String,
    pub terms: Vec<ReportTerm>,
    pub nonnegative: bool,
    pub integral: bool,
    /// Independent computations every row was compared against.
    pub cross_checks: Vec<Source>,
}

impl ExpansionReport {
    pub fn coeff(&self, lambda: &Partition) -> QRatPoly {
        self.terms.iter().find(|t| &t.partition == lambda).map_or_else(QRatPoly::zero, |t| t.poly.clone())
    }

    /// Integer coefficient, if the row is integral.
    pub fn int_coeff(&self, lambda: &Partition) -> Option<QPoly> {
        self.coeff(lambda).to_integer()
    }

    /// The nonzero rows as an [`Expansion`].
    pub fn to_expansion(&self) -> Expansion {
        Expansion {
            degree: self.degree,
            basis: self.basis,
            terms: self
                .terms
                .iter()
                .filter(|t| !t.poly.is_zero())
                .map(|t| (t.partition.clone(), t.poly.clone()))
                .collect(),
        }
    }

    /// Largest power of `q` appearing in any row.
    pub fn max_q_degree(&self) -> usize {
        self.terms.iter().filter_map(|t| t.poly.degree()).max().unwrap_or(0)
    }
}

/// How each basis's coefficients are normalised.
pub fn normalization(basis: Basis) -> &'static str {
    match basis {
        Basis::M => "X = sum_lambda c_lambda m_lambda",
        Basis::E => "X = sum_lambda c_lambda e_lambda",
        Basis::H => "X = sum_lambda c_lambda h_lambda",
        Basis::F => "X = sum_lambda c_lambda f_lambda",
        Basis::S => "omega X = sum_lambda c_lambda s_lambda",
        Basis::P => "omega X = sum_lambda c_lambda p_lambda / z_lambda",
    }
}

/// Expand `X_P(x, q; mu)` in `basis`, cross-checking every row.
///
/// `f`, `p` and `s` rows come from word and tableau counts; `e`, `h` and
/// `m` rows come from basis change, and `e` rows of hook or two-column
/// shape are additionally recomputed from heap counts. Every row is
/// compared with basis change of the oracle (or of the word expansion
/// above [`ORACLE_MAX_DEGREE`]); any mismatch is [`Error::Disagreement`].
pub fn coeff_in_basis(p: &UnitIntervalOrder, mu: &[usize], basis: Basis) -> Result<ExpansionReport> {
    check_type(p, mu)?;
    let d: usize = mu.iter().sum();
    let x = x_via_words(p, mu)?;
    let mut cross_checks = vec![Source::Words];
    if d <= ORACLE_MAX_DEGREE {
        let by_oracle = x_by_oracle(p, mu)?;
        if by_oracle != x {
            return Err(Error::Disagreement("word expansion and colouring oracle differ".into()));
        }
        cross_checks.push(Source::Oracle);
    }
    let reference: BTreeMap<Partition, QRatPoly> = match basis {
        Basis::S => from_monomial(&omega(&x), Basis::S)?,
        Basis::P => from_monomial(&omega(&x), Basis::P)?
            .into_iter()
            .map(|(lam, c)| {
                let z = QRatPoly::constant(num_rational::BigRational::from_integer(lam.z()));
                (lam, &c * &z)
            })
            .collect(),
        b => from_monomial(&x, b)?,
    };
    let quotient = match basis {
        Basis::F | Basis::P | Basis::S => Some(Quotient::with_bound(p.clone(), mu)?),
        _ => None,
    };
    let mut terms = Vec::new();
    for lambda in Partition::all(d) {
        let expected = reference.get(&lambda).cloned().unwrap_or_else(QRatPoly::zero);
        let (poly, source) = match (basis, &quotient) {
            (Basis::F, Some(qt)) => (qt.pair_gamma(&qt.h_partition(&lambda), mu).to_rational(), Source::Pairing),
            (Basis::P, Some(qt)) => (qt.pair_gamma(&qt.p_partition(&lambda), mu).to_rational(), Source::Pairing),
            (Basis::S, Some(qt)) => (qt.pair_gamma(&qt.s(&lambda), mu).to_rational(), Source::Pairing),
            (Basis::E, _) => match e_by_theorem(p, mu, &lambda)? {
                Some(c) => (c.to_rational(), Source::Theorem),
                None => (expected.clone(), Source::BasisChange),
            },
            _ => (expected.clone(), Source::BasisChange),
        };
        if poly != expected {
            return Err(Error::Disagreement(format!(
                "{} coefficient at {lambda}: {poly} from {source:?}, {expected} by basis change",
                basis.letter()
            )));
        }
        terms.push(ReportTerm { partition: lambda, poly, source });
    }
    if terms.iter().any(|t| t.source != Source::BasisChange) {
        cross_checks.push(Source::BasisChange);
    }
    let nonnegative = terms.iter().all(|t| t.poly.is_nonnegative());
    let integral = terms.iter().all(|t| t.poly.to_integer().is_some());
    Ok(ExpansionReport {
        poset: p.clone(),
        mu: mu.to_vec(),
        basis,
        degree: d,
        normalization: normalization(basis).to_string(),
        terms,
        nonnegative,
        integral,
        cross_checks,
    })
}

/// The heap-count value of an `e` coefficient when `lambda` is a hook or
/// has at most two columns.
fn e_by_theorem(p: &UnitIntervalOrder, mu: &[usize], lambda: &Partition) -> Result<Option<QPoly>> {
    if let Some((k, l)) = lambda.as_two_column() {
        return coeff_e_two_column(p, mu, k, l).map(Some);
    }
    match lambda.as_hook() {
        Some((leg, arm)) if leg >= 1 && arm >= 1 => coeff_e_hook(p, mu, arm, leg).map(Some),
        _ => Ok(None),
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
    source: Source,
}

#[derive(Serialize, Deserialize)]
struct JsonReport {
    poset: UnitIntervalOrder,
    mu: Vec<usize>,
    basis: Basis,
    degree: usize,
    normalization: String,
    terms: Vec<JsonTerm>,
    nonnegative: bool,
    integral: bool,
    cross_checks: Vec<Source>,
}

impl Serialize for ExpansionReport {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        JsonReport {
            poset: self.poset.clone(),
            mu: self.mu.clone(),
            basis: self.basis,
            degree: self.degree,
            normalization: self.normalization.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| JsonTerm {
                    partition: t.partition.clone(),
                    poly: match t.poly.to_integer() {
                        Some(p) => JsonPoly::Int(p),
                        None => JsonPoly::Rat(t.poly.clone()),
                    },
                    source: t.source,
                })
                .collect(),
            nonnegative: self.nonnegative,
            integral: self.integral,
            cross_checks: self.cross_checks.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for ExpansionReport {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = JsonReport::deserialize(d)?;
        Ok(Self {
            poset: raw.poset,
            mu: raw.mu,
            basis: raw.basis,
            degree: raw.degree,
            normalization: raw.normalization,
            terms: raw
                .terms
                .into_iter()
                .map(|t| ReportTerm {
                    partition: t.partition,
                    poly: match t.poly {
                        JsonPoly::Int(p) => p.to_rational(),
                        JsonPoly::Rat(r) => r,
                    },
                    source: t.source,
                })
                .collect(),
            nonnegative: raw.nonnegative,
            integral: raw.integral,
            cross_checks: raw.cross_checks,
        })
    }
}

/// Words of type `mu` grouped by the class of their heap, for inspection.
pub fn words_by_heap(p: &UnitIntervalOrder, mu: &[usize]) -> Result<BTreeMap<Word, Vec<Word>>> {
    check_type(p, mu)?;
    let mut out: BTreeMap<Word, Vec<Word>> = BTreeMap::new();
    for w in words_of_type(mu) {
        let h = Heap::from_word(p, &w)?;
        out.entry(h.word().clone()).or_default().push(w);
    }
    Ok(out)
}
