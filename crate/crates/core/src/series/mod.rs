//! Truncated formal power series over exact rationals.
//!
//! A [`FormalPowerSeries`] stores coefficients `c_0 .. c_{N-1}` and stands
//! for `c_0 + c_1 t + ... + c_{N-1} t^{N-1} + O(t^N)`. Binary operations
//! produce a result known to the smaller of the two precisions, and asking
//! for a coefficient at or beyond the precision is an error rather than zero.

mod lagrange;
mod power;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{int, is_integer, Rational};

pub use lagrange::{lagrange_coeffs, lagrange_gf, lagrange_solve};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FormalPowerSeries {
    coeffs: Vec<Rational>,
}

impl FormalPowerSeries {
    /// Series with exactly the given coefficients; precision is their count.
    pub fn new(coeffs: Vec<Rational>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::ZeroPrecision);
        }
        Ok(Self { coeffs })
    }

    /// Polynomial `c_0 + c_1 t + ...` zero-padded (or truncated) to `precision`.
    pub fn polynomial(coeffs: &[Rational], precision: usize) -> Result<Self> {
        if precision == 0 {
            return Err(Error::ZeroPrecision);
        }
        let mut v: Vec<Rational> = coeffs.iter().take(precision).cloned().collect();
        v.resize(precision, Rational::zero());
        Ok(Self { coeffs: v })
    }

    pub fn from_ints(coeffs: &[i64]) -> Result<Self> {
        Self::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    /// Integer polynomial padded to `precision`.
    pub fn int_polynomial(coeffs: &[i64], precision: usize) -> Result<Self> {
        let v: Vec<Rational> = coeffs.iter().map(|&c| int(c)).collect();
        Self::polynomial(&v, precision)
    }

    /// Builds a series from a coefficient function `n -> c_n`.
    pub fn from_fn(precision: usize, f: impl FnMut(usize) -> Rational) -> Result<Self> {
        Self::new((0..precision).map(f).collect())
    }

    pub fn try_from_fn(precision: usize, f: impl FnMut(usize) -> Result<Rational>) -> Result<Self> {
        Self::new((0..precision).map(f).collect::<Result<Vec<_>>>()?)
    }

    pub fn zero(precision: usize) -> Result<Self> {
        Self::polynomial(&[], precision)
    }

    pub fn one(precision: usize) -> Result<Self> {
        Self::constant(Rational::one(), precision)
    }

    pub fn constant(c: Rational, precision: usize) -> Result<Self> {
        Self::polynomial(&[c], precision)
    }

    /// The series variable `t`.
    pub fn t(precision: usize) -> Result<Self> {
        Self::polynomial(&[Rational::zero(), Rational::one()], precision)
    }

    /// `1 / (1 - t)`.
    pub fn geometric(precision: usize) -> Result<Self> {
        Self::from_fn(precision, |_| Rational::one())
    }

    pub fn precision(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    /// `[t^n] f`. Fails when `n` is at or beyond the precision.
    pub fn coeff(&self, n: usize) -> Result<&Rational> {
        self.coeffs.get(n).ok_or(Error::PrecisionExceeded {
            index: n,
            precision: self.precision(),
        })
    }

    /// Index of the first nonzero coefficient, or the precision if there is none.
    pub fn order(&self) -> usize {
        self.coeffs
            .iter()
            .position(|c| !c.is_zero())
            .unwrap_or(self.precision())
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(is_integer)
    }

    /// Keeps the first `precision` coefficients. Never increases precision.
    pub fn truncate(&self, precision: usize) -> Result<Self> {
        if precision == 0 {
            return Err(Error::ZeroPrecision);
        }
        Ok(Self {
            coeffs: self.coeffs[..precision.min(self.precision())].to_vec(),
        })
    }

    /// Appends zero coefficients. Only valid when the true series is known
    /// to vanish there, so this stays crate-private.
    pub(crate) fn pad_to(&self, precision: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        if coeffs.len() < precision {
            coeffs.resize(precision, Rational::zero());
        }
        Self { coeffs }
    }

    /// `t^k f`, with precision raised by `k`.
    pub fn shift_up(&self, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    /// `f / t^k`; the first `k` coefficients must vanish and precision drops by `k`.
    pub fn shift_down(&self, k: usize) -> Result<Self> {
        if self.order() < k {
            return Err(Error::InvalidParameter(format!(
                "cannot divide a series of order {} by t^{k}",
                self.order()
            )));
        }
        Self::new(self.coeffs[k..].to_vec())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// `f(c t)`.
    pub fn dilate(&self, c: &Rational) -> Self {
        let mut pow = Rational::one();
        let coeffs = self
            .coeffs
            .iter()
            .map(|x| {
                let y = x * &pow;
                pow *= c;
                y
            })
            .collect();
        Self { coeffs }
    }

    /// Formal derivative; precision drops by one (and stays at least one).
    pub fn derivative(&self) -> Self {
        if self.precision() == 1 {
            return Self {
                coeffs: vec![Rational::zero()],
            };
        }
        Self {
            coeffs: (1..self.precision())
                .map(|n| &self.coeffs[n] * int(n as i64))
                .collect(),
        }
    }

    /// Antiderivative with zero constant term; precision rises by one.
    pub fn integral(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.precision() + 1);
        coeffs.push(Rational::zero());
        for (n, c) in self.coeffs.iter().enumerate() {
            coeffs.push(c / int(n as i64 + 1));
        }
        Self { coeffs }
    }

    /// `f / g` to the shared precision; `g(0)` must be nonzero.
    pub fn div(&self, g: &Self) -> Result<Self> {
        let g0 = &g.coeffs[0];
        if g0.is_zero() {
            return Err(Error::NonInvertible);
        }
        let n = self.precision().min(g.precision());
        let inv0 = g0.recip();
        let mut q: Vec<Rational> = Vec::with_capacity(n);
        for i in 0..n {
            let acc = &self.coeffs[i] - dot((1..=i).map(|j| (&g.coeffs[j], &q[i - j])));
            q.push(acc * &inv0);
        }
        Ok(Self { coeffs: q })
    }

    pub fn recip(&self) -> Result<Self> {
        Self::one(self.precision())?.div(self)
    }

    /// `self(g(t))`, evaluated by truncated Horner. Requires `order(g) >= 1`.
    pub fn compose(&self, g: &Self) -> Result<Self> {
        if g.order() == 0 {
            return Err(Error::CompositionOrder { order: 0 });
        }
        let n = self.precision().min(g.precision());
        let mut acc: Vec<Rational> = vec![self.coeffs[n - 1].clone()];
        for i in (0..n - 1).rev() {
            // acc is multiplied by g^i afterwards, so only n - i terms matter
            let len = n - i;
            let mut next = mul_truncated(&acc, &g.coeffs, len);
            next.resize(len, Rational::zero());
            next[0] += &self.coeffs[i];
            acc = next;
        }
        acc.resize(n, Rational::zero());
        Ok(Self { coeffs: acc })
    }

    /// Serializable record `{"prec": N, "coeffs": [...]}`.
    pub fn to_record(&self) -> SeriesRecord {
        SeriesRecord {
            prec: self.precision(),
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn from_record(rec: SeriesRecord) -> Result<Self> {
        if rec.coeffs.len() != rec.prec {
            return Err(Error::Parse(format!(
                "series record has precision {} but {} coefficients",
                rec.prec,
                rec.coeffs.len()
            )));
        }
        Self::new(rec.coeffs)
    }
}

/// Text form of a series with arbitrary-precision decimal strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesRecord {
    pub prec: usize,
    #[serde(with = "crate::rational::serde_str::vec")]
    pub coeffs: Vec<Rational>,
}

/// Cauchy product of two coefficient slices keeping `len` terms. Each side is
/// scaled to integers by the lcm of its denominators and convolved over
/// `BigInt`, so gcd reduction happens once per output coefficient.
pub(crate) fn mul_truncated(a: &[Rational], b: &[Rational], len: usize) -> Vec<Rational> {
    let len = len.min(a.len() + b.len() - 1);
    let (ai, da) = integer_scaled(&a[..a.len().min(len)]);
    let (bi, db) = integer_scaled(&b[..b.len().min(len)]);
    let mut out = vec![BigInt::zero(); len];
    for (i, x) in ai.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in bi.iter().enumerate().take(len - i) {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    let den = da * db;
    if den.is_one() {
        return out.into_iter().map(Rational::from_integer).collect();
    }
    out.into_iter()
        .map(|c| Rational::new(c, den.clone()))
        .collect()
}

/// `sum a_i b_i` with one gcd reduction at the end instead of one per term.
pub(crate) fn dot<'a>(pairs: impl Iterator<Item = (&'a Rational, &'a Rational)>) -> Rational {
    let mut num = BigInt::zero();
    let mut den = BigInt::one();
    for (a, b) in pairs {
        if a.is_zero() || b.is_zero() {
            continue;
        }
        let n = a.numer() * b.numer();
        let d = a.denom() * b.denom();
        if d == den {
            num += n;
        } else {
            let l = den.lcm(&d);
            num = num * (&l / &den) + n * (&l / &d);
            den = l;
        }
    }
    Rational::new(num, den)
}

fn integer_scaled(xs: &[Rational]) -> (Vec<BigInt>, BigInt) {
    let mut l = BigInt::one();
    for x in xs {
        if !x.denom().is_one() {
            l = l.lcm(x.denom());
        }
    }
    let v = xs
        .iter()
        .map(|x| {
            if x.denom().is_one() {
                x.numer() * &l
            } else {
                x.numer() * (&l / x.denom())
            }
        })
        .collect();
    (v, l)
}

impl fmt::Debug for FormalPowerSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for FormalPowerSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match n {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})t")?,
                _ => write!(f, "({c})t^{n}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(t^{})", self.precision())
    }
}

impl Add for &FormalPowerSeries {
    type Output = FormalPowerSeries;

    fn add(self, rhs: Self) -> FormalPowerSeries {
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        FormalPowerSeries { coeffs }
    }
}

impl Sub for &FormalPowerSeries {
    type Output = FormalPowerSeries;

    fn sub(self, rhs: Self) -> FormalPowerSeries {
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        FormalPowerSeries { coeffs }
    }
}

impl Mul for &FormalPowerSeries {
    type Output = FormalPowerSeries;

    fn mul(self, rhs: Self) -> FormalPowerSeries {
        let n = self.precision().min(rhs.precision());
        let mut coeffs = mul_truncated(&self.coeffs, &rhs.coeffs, n);
        coeffs.resize(n, Rational::zero());
        FormalPowerSeries { coeffs }
    }
}

impl Neg for &FormalPowerSeries {
    type Output = FormalPowerSeries;

    fn neg(self) -> FormalPowerSeries {
        FormalPowerSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for FormalPowerSeries {
            type Output = FormalPowerSeries;
            fn $m(self, rhs: Self) -> FormalPowerSeries {
                (&self).$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
