//! Exact values of the form `sum q_k * sqrt(k)` with rational `q_k` and
//! squarefree `k`.
//!
//! Square roots of distinct squarefree integers are linearly independent
//! over the rationals, so the normalized term map is a unique
//! representation: equality is map equality and a nonzero map is a nonzero
//! real. Ordering decides the sign of the difference, first with a guarded
//! float estimate and otherwise with rational interval bounds on each root
//! at doubling precision.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Small-integer rational constructor.
pub fn rat(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

/// Splits `s = k * t^2` with `k` squarefree. `s` must be positive.
pub fn squarefree_decompose(s: u64) -> (u64, u64) {
    debug_assert!(s > 0);
    let mut k = 1u64;
    let mut t = 1u64;
    let mut rest = s;
    let mut p = 2u64;
    while p * p <= rest {
        let mut e = 0;
        while rest.is_multiple_of(p) {
            rest /= p;
            e += 1;
        }
        for _ in 0..e / 2 {
            t *= p;
        }
        if e % 2 == 1 {
            k *= p;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    (k * rest, t)
}

#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct RadicalSum {
    terms: BTreeMap<u64, BigRational>,
}

impl RadicalSum {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn rational(q: BigRational) -> Self {
        let mut r = Self::zero();
        r.add_term(1, q);
        r
    }

    /// `mult / sqrt(s)`. With `s = k t^2` this is `mult / (t k) * sqrt(k)`.
    pub fn from_inverse_sqrt(s: u64, mult: BigRational) -> Result<Self> {
        if s == 0 {
            return Err(Error::ZeroRadicand);
        }
        let (k, t) = squarefree_decompose(s);
        let mut r = Self::zero();
        r.add_term(k, mult / int((t * k) as i64));
        Ok(r)
    }

    /// `mult * sqrt(s)`.
    pub fn from_sqrt(s: u64, mult: BigRational) -> Self {
        if s == 0 {
            return Self::zero();
        }
        let (k, t) = squarefree_decompose(s);
        let mut r = Self::zero();
        r.add_term(k, mult * int(t as i64));
        r
    }

    /// `num / sqrt(s)` for small integers; `s` must be positive.
    pub fn over_sqrt(num: i64, s: u64) -> Self {
        Self::from_inverse_sqrt(s, int(num)).expect("positive radicand")
    }

    /// Adds `q * sqrt(k)`; `k` must already be squarefree.
    pub(crate) fn add_term(&mut self, k: u64, q: BigRational) {
        if q.is_zero() {
            return;
        }
        match self.terms.get_mut(&k) {
            Some(c) => {
                *c += q;
                if c.is_zero() {
                    self.terms.remove(&k);
                }
            }
            None => {
                self.terms.insert(k, q);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms `(k, q_k)` in ascending `k`.
    pub fn terms(&self) -> impl Iterator<Item = (u64, &BigRational)> {
        self.terms.iter().map(|(&k, q)| (k, q))
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        if q.is_zero() {
            return Self::zero();
        }
        RadicalSum {
            terms: self.terms.iter().map(|(&k, c)| (k, c * q)).collect(),
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.terms
            .iter()
            .map(|(&k, q)| q.to_f64().unwrap_or(f64::NAN) * (k as f64).sqrt())
            .sum()
    }

    /// Sign of the represented real.
    pub fn signum(&self) -> Ordering {
        if self.terms.is_empty() {
            return Ordering::Equal;
        }
        let (approx, magnitude) = self.terms.iter().fold((0.0f64, 0.0f64), |(s, m), (&k, q)| {
            let t = q.to_f64().unwrap_or(f64::NAN) * (k as f64).sqrt();
            (s + t, m + t.abs())
        });
        if approx.is_finite() && approx.abs() > 1e-9 * (1.0 + magnitude) {
            return if approx > 0.0 {
                Ordering::Greater
            } else {
                Ordering::Less
            };
        }
        self.interval_sign()
    }

    /// Bounds every `sqrt(k)` between consecutive multiples of `2^-p`
    /// until the enclosing interval excludes zero. Terminates because a
    /// nonempty normalized term map is never zero.
    fn interval_sign(&self) -> Ordering {
        let mut p = 64usize;
        loop {
            let denom = BigInt::one() << p;
            let mut lo = BigRational::zero();
            let mut hi = BigRational::zero();
            for (&k, q) in &self.terms {
                if k == 1 {
                    lo += q;
                    hi += q;
                    continue;
                }
                let root_floor = (BigInt::from(k) << (2 * p)).sqrt();
                let below = BigRational::new(root_floor.clone(), denom.clone());
                let above = BigRational::new(root_floor + 1u32, denom.clone());
                if q.is_positive() {
                    lo += q * below;
                    hi += q * above;
                } else {
                    lo += q * above;
                    hi += q * below;
                }
            }
            if lo.is_positive() {
                return Ordering::Greater;
            }
            if hi.is_negative() {
                return Ordering::Less;
            }
            p *= 2;
        }
    }
}

impl Ord for RadicalSum {
    fn cmp(&self, other: &Self) -> Ordering {
        if self.terms == other.terms {
            return Ordering::Equal;
        }
        (self - other).signum()
    }
}

impl PartialOrd for RadicalSum {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl AddAssign<&RadicalSum> for RadicalSum {
    fn add_assign(&mut self, rhs: &RadicalSum) {
        for (&k, q) in &rhs.terms {
            self.add_term(k, q.clone());
        }
    }
}

impl AddAssign for RadicalSum {
    fn add_assign(&mut self, rhs: RadicalSum) {
        for (k, q) in rhs.terms {
            self.add_term(k, q);
        }
    }
}

impl SubAssign<&RadicalSum> for RadicalSum {
    fn sub_assign(&mut self, rhs: &RadicalSum) {
        for (&k, q) in &rhs.terms {
            self.add_term(k, -q);
        }
    }
}

impl Add for RadicalSum {
    type Output = RadicalSum;
    fn add(mut self, rhs: RadicalSum) -> RadicalSum {
        self += rhs;
        self
    }
}

impl Add<&RadicalSum> for &RadicalSum {
    type Output = RadicalSum;
    fn add(self, rhs: &RadicalSum) -> RadicalSum {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for RadicalSum {
    type Output = RadicalSum;
    fn sub(mut self, rhs: RadicalSum) -> RadicalSum {
        self -= &rhs;
        self
    }
}

impl Sub<&RadicalSum> for &RadicalSum {
    type Output = RadicalSum;
    fn sub(self, rhs: &RadicalSum) -> RadicalSum {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for RadicalSum {
    type Output = RadicalSum;
    fn neg(self) -> RadicalSum {
        RadicalSum {
            terms: self.terms.into_iter().map(|(k, q)| (k, -q)).collect(),
        }
    }
}

impl Sum for RadicalSum {
    fn sum<I: Iterator<Item = RadicalSum>>(iter: I) -> Self {
        iter.fold(RadicalSum::zero(), |acc, x| acc + x)
    }
}

fn fmt_magnitude(f: &mut fmt::Formatter<'_>, k: u64, q: &BigRational) -> fmt::Result {
    let q = q.abs();
    if k == 1 {
        return write!(f, "{q}");
    }
    if q.is_one() {
        write!(f, "sqrt({k})")
    } else {
        write!(f, "{q}*sqrt({k})")
    }
}

/// Terms in ascending radicand, e.g. `1 + 1/6*sqrt(6) + 4/7*sqrt(7)`.
impl fmt::Display for RadicalSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (&k, q)) in self.terms.iter().enumerate() {
            match (i, q.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            fmt_magnitude(f, k, q)?;
        }
        Ok(())
    }
}

impl fmt::Debug for RadicalSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RadicalSum({self} ~ {})", self.to_f64())
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    squarefree_part: u64,
    numerator: String,
    denominator: String,
}

#[derive(Serialize, Deserialize)]
struct RadicalSumJson {
    terms: Vec<TermJson>,
    float: f64,
    exact: String,
}

impl Serialize for RadicalSum {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        RadicalSumJson {
            terms: self
                .terms
                .iter()
                .map(|(&k, q)| TermJson {
                    squarefree_part: k,
                    numerator: q.numer().to_string(),
                    denominator: q.denom().to_string(),
                })
                .collect(),
            float: self.to_f64(),
            exact: self.to_string(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for RadicalSum {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = RadicalSumJson::deserialize(deserializer)?;
        let mut out = RadicalSum::zero();
        for t in raw.terms {
            if t.squarefree_part == 0 || squarefree_decompose(t.squarefree_part).1 != 1 {
                return Err(D::Error::custom(format!(
                    "{} is not squarefree",
                    t.squarefree_part
                )));
            }
            let num: BigInt = t.numerator.parse().map_err(D::Error::custom)?;
            let den: BigInt = t.denominator.parse().map_err(D::Error::custom)?;
            if den.is_zero() {
                return Err(D::Error::custom("zero denominator"));
            }
            out.add_term(t.squarefree_part, BigRational::new(num, den));
        }
        Ok(out)
    }
}
