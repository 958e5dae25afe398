//! Exact univariate polynomials in `q`.
//!
//! Dense coefficient vectors, lowest degree first, with no trailing zeros.
//! [`QPoly`] has big-integer coefficients; [`QRatPoly`] has exact rationals.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::{self, Deserializer};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

pub type QPoly = Poly<BigInt>;
pub type QRatPoly = Poly<BigRational>;

/// Coefficient ring of a [`Poly`].
pub trait Coeff:
    Clone
    + PartialOrd
    + fmt::Debug
    + Zero
    + One
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + Neg<Output = Self>
    + Signed
{
}

impl Coeff for BigInt {}
impl Coeff for BigRational {}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Poly<C> {
    coeffs: Vec<C>,
}

impl<C: Coeff> Poly<C> {
    pub fn from_coeffs(mut coeffs: Vec<C>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c * q^k`.
    pub fn monomial(c: C, k: usize) -> Self {
        let mut v = vec![C::zero(); k + 1];
        v[k] = c;
        Self::from_coeffs(v)
    }

    /// `q^k`.
    pub fn q_pow(k: usize) -> Self {
        Self::monomial(C::one(), k)
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<C> {
        self.coeffs
    }

    /// Coefficient of `q^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> C {
        self.coeffs.get(k).cloned().unwrap_or_else(C::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::from_coeffs(self.coeffs.iter().map(|x| x.clone() * c).collect())
    }

    /// Multiply by `q^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut v = vec![C::zero(); k];
        v.extend(self.coeffs.iter().cloned());
        Self { coeffs: v }
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// Coefficients weakly increase then weakly decrease, with no interior zeros.
    pub fn is_unimodal(&self) -> bool {
        let first = match self.coeffs.iter().position(|c| !c.is_zero()) {
            Some(i) => i,
            None => return true,
        };
        let c = &self.coeffs[first..];
        if c.iter().any(|x| x.is_zero()) {
            return false;
        }
        let mut k = 1;
        while k < c.len() && c[k] >= c[k - 1] {
            k += 1;
        }
        while k < c.len() && c[k] <= c[k - 1] {
            k += 1;
        }
        k == c.len()
    }

    /// Coefficient sequence reads the same from either end of its support.
    pub fn is_palindromic(&self) -> bool {
        let first = match self.coeffs.iter().position(|c| !c.is_zero()) {
            Some(i) => i,
            None => return true,
        };
        let c = &self.coeffs[first..];
        c.iter().eq(c.iter().rev())
    }

    /// Value at `q = 1`.
    pub fn at_one(&self) -> C {
        self.coeffs.iter().fold(C::zero(), |acc, c| acc + c)
    }

    fn fmt_with(&self, f: &mut fmt::Formatter<'_>, show: impl Fn(&C) -> String) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let unit = mag.is_one();
            match k {
                0 => f.write_str(&show(&mag))?,
                _ => {
                    if !unit {
                        f.write_str(&show(&mag))?;
                        f.write_str("*")?;
                    }
                    if k == 1 {
                        f.write_str("q")?;
                    } else {
                        write!(f, "q^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl QPoly {
    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn to_rational(&self) -> QRatPoly {
        Poly::from_coeffs(self.coeffs.iter().map(|c| BigRational::from_integer(c.clone())).collect())
    }

    /// Coefficients as `i64`, if they all fit.
    pub fn to_i64(&self) -> Option<Vec<i64>> {
        self.coeffs.iter().map(|c| c.to_i64()).collect()
    }
}

impl QRatPoly {
    /// The integer polynomial, if every coefficient is integral.
    pub fn to_integer(&self) -> Option<QPoly> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect::<Option<Vec<_>>>()
            .map(Poly::from_coeffs)
    }

    pub fn div_scalar(&self, c: &BigRational) -> Self {
        assert!(!c.is_zero(), "division by zero");
        Self::from_coeffs(self.coeffs.iter().map(|x| x / c).collect())
    }
}

impl From<QPoly> for QRatPoly {
    fn from(p: QPoly) -> Self {
        p.to_rational()
    }
}

/// `[k]_q = 1 + q + ... + q^{k-1}`.
pub fn q_int(k: usize) -> QPoly {
    Poly::from_coeffs(vec![BigInt::one(); k])
}

/// `[k]_q! = [1]_q [2]_q ... [k]_q`.
pub fn q_factorial(k: usize) -> QPoly {
    (1..=k).fold(QPoly::one(), |acc, i| &acc * &q_int(i))
}

impl<C: Coeff> Add<&Poly<C>> for &Poly<C> {
    type Output = Poly<C>;

    fn add(self, rhs: &Poly<C>) -> Poly<C> {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() { (self, rhs) } else { (rhs, self) };
        let mut v = long.coeffs.clone();
        for (a, b) in v.iter_mut().zip(&short.coeffs) {
            *a = a.clone() + b;
        }
        Poly::from_coeffs(v)
    }
}

impl<C: Coeff> Sub<&Poly<C>> for &Poly<C> {
    type Output = Poly<C>;

    fn sub(self, rhs: &Poly<C>) -> Poly<C> {
        self + &(-rhs)
    }
}

impl<C: Coeff> Mul<&Poly<C>> for &Poly<C> {
    type Output = Poly<C>;

    fn mul(self, rhs: &Poly<C>) -> Poly<C> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut v = vec![C::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                v[i + j] = v[i + j].clone() + &(a.clone() * b);
            }
        }
        Poly::from_coeffs(v)
    }
}

impl<C: Coeff> Neg for &Poly<C> {
    type Output = Poly<C>;

    fn neg(self) -> Poly<C> {
        Poly { coeffs: self.coeffs.iter().map(|c| -c.clone()).collect() }
    }
}

impl<C: Coeff> Neg for Poly<C> {
    type Output = Poly<C>;

    fn neg(self) -> Poly<C> {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<C: Coeff> $tr<Poly<C>> for Poly<C> {
            type Output = Poly<C>;
            fn $m(self, rhs: Poly<C>) -> Poly<C> {
                (&self).$m(&rhs)
            }
        }
        impl<C: Coeff> $tr<&Poly<C>> for Poly<C> {
            type Output = Poly<C>;
            fn $m(self, rhs: &Poly<C>) -> Poly<C> {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<C: Coeff> AddAssign<&Poly<C>> for Poly<C> {
    fn add_assign(&mut self, rhs: &Poly<C>) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), C::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a = a.clone() + b;
        }
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }
}

impl<C: Coeff> SubAssign<&Poly<C>> for Poly<C> {
    fn sub_assign(&mut self, rhs: &Poly<C>) {
        *self += &(-rhs);
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_with(f, |c| c.to_string())
    }
}

impl fmt::Display for QRatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_with(f, |c| if c.is_integer() { c.to_integer().to_string() } else { format!("({c})") })
    }
}

// JSON: ascending coefficient arrays. Integers that fit in i64 are numbers,
// larger ones are decimal strings; rationals are always "num/den" strings.

impl Serialize for QPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.coeffs.len()))?;
        for c in &self.coeffs {
            match c.to_i64() {
                Some(v) => seq.serialize_element(&v)?,
                None => seq.serialize_element(&c.to_string())?,
            }
        }
        seq.end()
    }
}

impl Serialize for QRatPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.coeffs.len()))?;
        for c in &self.coeffs {
            seq.serialize_element(&format!("{}/{}", c.numer(), c.denom()))?;
        }
        seq.end()
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum NumOrString {
    Num(i64),
    Str(String),
}

impl<'de> Deserialize<'de> for QPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = Vec::<NumOrString>::deserialize(d)?;
        let coeffs = raw
            .into_iter()
            .map(|x| match x {
                NumOrString::Num(v) => Ok(BigInt::from(v)),
                NumOrString::Str(s) => s.parse::<BigInt>().map_err(de::Error::custom),
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Poly::from_coeffs(coeffs))
    }
}

impl<'de> Deserialize<'de> for QRatPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = Vec::<NumOrString>::deserialize(d)?;
        let coeffs = raw
            .into_iter()
            .map(|x| match x {
                NumOrString::Num(v) => Ok(BigRational::from_integer(v.into())),
                NumOrString::Str(s) => s.parse::<BigRational>().map_err(de::Error::custom),
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Poly::from_coeffs(coeffs))
    }
}
