//! Generalized hypergeometric series as exact coefficient streams, and the
//! generalized binomial series `B_q(t) = sum 1/(qn+1) binom(qn+1, n) t^n`.
//!
//! A `pFq` is kept as its parameter lists plus a rational argument scale
//! `lambda` (the series argument is `lambda t`) and expanded on demand from
//! the term ratio
//!
//! ```text
//! c_{n+1} / c_n = prod(a_i + n) / prod(c_j + n) * lambda / (n + 1).
//! ```

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{binomial_rational, int, is_integer, ratio, to_i64, Rational};
use crate::report::{IdentityReport, Param};
use crate::series::FormalPowerSeries;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HypergeometricSpec {
    upper: Vec<Rational>,
    lower: Vec<Rational>,
    scale: Rational,
}

impl HypergeometricSpec {
    /// Rejects lower parameters that are zero or negative integers.
    pub fn new(upper: Vec<Rational>, lower: Vec<Rational>, scale: Rational) -> Result<Self> {
        if let Some(c) = lower
            .iter()
            .find(|c| is_integer(c) && **c <= Rational::zero())
        {
            return Err(Error::Pole(format!(
                "lower parameter {c} is a non-positive integer"
            )));
        }
        Ok(Self {
            upper,
            lower,
            scale,
        })
    }

    pub fn upper(&self) -> &[Rational] {
        &self.upper
    }

    pub fn lower(&self) -> &[Rational] {
        &self.lower
    }

    pub fn scale(&self) -> &Rational {
        &self.scale
    }

    /// `c_{n+1} / c_n` as a value; undefined (returns `None`) only where a
    /// lower shift vanishes, which construction rules out.
    pub fn term_ratio(&self, n: usize) -> Option<Rational> {
        let n = int(n as i64);
        let mut num = self.scale.clone();
        for a in &self.upper {
            num *= a + &n;
        }
        let mut den = &n + Rational::one();
        for c in &self.lower {
            den *= c + &n;
        }
        if den.is_zero() {
            return None;
        }
        Some(num / den)
    }

    /// First `precision` coefficients; the constant term is 1.
    pub fn expand(&self, precision: usize) -> Result<FormalPowerSeries> {
        let mut coeffs = Vec::with_capacity(precision);
        let mut c = Rational::one();
        for n in 0..precision {
            coeffs.push(c.clone());
            if n + 1 < precision && !c.is_zero() {
                let step = self
                    .term_ratio(n)
                    .ok_or_else(|| Error::Pole(format!("lower shift vanishes at n={n}")))?;
                c *= step;
            }
        }
        FormalPowerSeries::new(coeffs)
    }

    /// `(B_q)^r` as a `qF(q-1)`: upper `(r+i)/q` for `i = 0..q-1`, lower
    /// `(r+i)/(q-1)` for `i = 1..q-1`, argument `q^q t / (q-1)^(q-1)`.
    pub fn binomial_power(q: i64, r: &Rational) -> Result<Self> {
        check_q(q)?;
        let upper = (0..q).map(|i| (r + int(i)) / int(q)).collect();
        let lower = (1..q).map(|i| (r + int(i)) / int(q - 1)).collect();
        Self::new(upper, lower, binomial_scale(q))
    }

    /// The series `h` of a proper array with `A(t) = (1+t)^q`: upper
    /// `(q+i)/q` for `i = 0..q-1`, lower `(q+i)/(q-1)` for `i = 1..q-1`.
    pub fn binomial_a_h(q: i64) -> Result<Self> {
        check_q(q)?;
        let upper = (0..q).map(|i| ratio(q + i, q)).collect();
        let lower = (1..q).map(|i| ratio(q + i, q - 1)).collect();
        Self::new(upper, lower, binomial_scale(q))
    }
}

fn check_q(q: i64) -> Result<()> {
    if q < 2 {
        return Err(Error::InvalidParameter(format!("need q >= 2, got {q}")));
    }
    Ok(())
}

/// `q^q / (q-1)^(q-1)`.
pub fn binomial_scale(q: i64) -> Rational {
    let mut num = Rational::one();
    let mut den = Rational::one();
    for _ in 0..q {
        num *= int(q);
    }
    for _ in 0..q - 1 {
        den *= int(q - 1);
    }
    num / den
}

/// Rising factorial `(a)_n = a (a+1) ... (a+n-1)`, with `(a)_0 = 1`.
pub fn pochhammer(a: &Rational, n: usize) -> Rational {
    (0..n).fold(Rational::one(), |acc, i| acc * (a + int(i as i64)))
}

/// `h` for `A(t) = (1+t)^q`, coefficient `n` being
/// `binom(q(n+1), n+1) / ((q-1)(n+1) + 1)`.
pub fn h_for_binomial_a(q: i64, precision: usize) -> Result<FormalPowerSeries> {
    check_q(q)?;
    FormalPowerSeries::from_fn(precision, |n| {
        let m = n as i64 + 1;
        binomial_rational(&int(q * m), m) / int((q - 1) * m + 1)
    })
}

/// Coefficient `n` of `(B_q)^r`: `r/(qn+r) binom(qn+r, n)`, and 1 at `n = 0`.
pub fn binomial_series_coeff(q: &Rational, r: &Rational, n: usize) -> Result<Rational> {
    if n == 0 {
        return Ok(Rational::one());
    }
    let top = q * int(n as i64) + r;
    if top.is_zero() {
        return Err(Error::Pole(format!(
            "q n + r vanishes at n={n} (q={q}, r={r})"
        )));
    }
    Ok(r / &top * binomial_rational(&top, n as i64))
}

/// `(B_q(t))^r` from its closed-form coefficients.
pub fn binomial_series(q: i64, r: &Rational, precision: usize) -> Result<FormalPowerSeries> {
    let q = int(q);
    FormalPowerSeries::try_from_fn(precision, |n| binomial_series_coeff(&q, r, n))
}

/// Closed forms for powers of `h` when `A(t) = (1+t)^q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinomialPowerClosedForm {
    pub q: i64,
    pub s: Rational,
}

impl BinomialPowerClosedForm {
    pub fn new(q: i64, s: Rational) -> Result<Self> {
        check_q(q)?;
        Ok(Self { q, s })
    }

    /// `[t^n] h^s = qs / ((q-1)n + qs) * binom(q(n+s) - 1, n)`.
    pub fn h_power_coeff(&self, n: usize) -> Result<Rational> {
        let q = int(self.q);
        let qs = &q * &self.s;
        let n_r = int(n as i64);
        let den = int(self.q - 1) * &n_r + &qs;
        if den.is_zero() {
            if n == 0 {
                return Ok(Rational::one());
            }
            return Err(Error::Pole(format!("(q-1)n + qs vanishes at n={n}")));
        }
        let top = &q * (&n_r + &self.s) - Rational::one();
        Ok(&qs / den * binomial_rational(&top, n as i64))
    }

    /// `[t^j] (t h)^s = qs / ((q-1)j + s) * binom(qj - 1, j - s)`, zero for
    /// `j < s`. Needs integral `s >= 1`.
    pub fn th_power_coeff(&self, j: usize) -> Result<Rational> {
        let s = to_i64(&self.s).filter(|&s| s >= 1).ok_or_else(|| {
            Error::InvalidParameter(format!("s must be a positive integer, got {}", self.s))
        })?;
        let j = j as i64;
        if j < s {
            return Ok(Rational::zero());
        }
        let q = self.q;
        Ok(ratio(q * s, (q - 1) * j + s) * binomial_rational(&int(q * j - 1), j - s))
    }
}

/// `[t^j] (t h(t))^s` for `A(t) = (1+t)^q`.
pub fn power_coeff(q: i64, s: i64, j: usize) -> Result<Rational> {
    BinomialPowerClosedForm::new(q, int(s))?.th_power_coeff(j)
}

/// Checks `(qF(q-1) at r = 1)^r = qF(q-1) at r` coefficientwise: the left
/// side through the series `pow_rational`, the right by direct expansion.
pub fn verify_power_identity(q: i64, r: &Rational, precision: usize) -> Result<IdentityReport> {
    let base = HypergeometricSpec::binomial_power(q, &Rational::one())?.expand(precision)?;
    let lhs = base.pow_rational(r)?;
    let rhs = HypergeometricSpec::binomial_power(q, r)?.expand(precision)?;
    Ok(IdentityReport::from_series(
        "binomial-series-power",
        format!("q={q}, r={r}, n<{precision}"),
        &[Param::new("q", int(q)), Param::new("r", r.clone())],
        &lhs,
        &rhs,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::binomial;

    #[test]
    fn catalan_from_2f1() {
        let spec =
            HypergeometricSpec::new(vec![ratio(1, 2), int(1)], vec![int(2)], int(4)).unwrap();
        assert_eq!(
            spec.expand(5).unwrap(),
            FormalPowerSeries::from_ints(&[1, 1, 2, 5, 14]).unwrap()
        );
    }

    #[test]
    fn geometric_from_1f0() {
        let spec = HypergeometricSpec::new(vec![int(1)], vec![], int(1)).unwrap();
        assert_eq!(
            spec.expand(6).unwrap(),
            FormalPowerSeries::geometric(6).unwrap()
        );
        assert_eq!(spec.expand(1).unwrap(), FormalPowerSeries::one(1).unwrap());
    }

    #[test]
    fn poles_rejected_at_construction() {
        for bad in [int(0), int(-3)] {
            assert!(matches!(
                HypergeometricSpec::new(vec![int(1)], vec![bad], int(1)),
                Err(Error::Pole(_))
            ));
        }
        assert!(HypergeometricSpec::new(vec![], vec![ratio(-1, 2), int(3)], int(1)).is_ok());
    }

    #[test]
    fn pochhammer_values() {
        for n in 0..8 {
            let fact: i64 = (1..=n as i64).product();
            assert_eq!(pochhammer(&int(1), n), int(fact));
        }
        assert_eq!(pochhammer(&ratio(1, 2), 3), ratio(15, 8));
        assert_eq!(pochhammer(&int(-2), 4), int(0));
    }

    #[test]
    fn h_closed_form() {
        assert_eq!(
            h_for_binomial_a(2, 6).unwrap(),
            FormalPowerSeries::from_ints(&[1, 2, 5, 14, 42, 132]).unwrap()
        );
        assert_eq!(
            h_for_binomial_a(3, 5).unwrap(),
            FormalPowerSeries::from_ints(&[1, 3, 12, 55, 273]).unwrap()
        );
        for q in 2..7 {
            assert_eq!(
                h_for_binomial_a(q, 1).unwrap(),
                FormalPowerSeries::one(1).unwrap()
            );
            assert_eq!(
                h_for_binomial_a(q, 20).unwrap(),
                HypergeometricSpec::binomial_a_h(q)
                    .unwrap()
                    .expand(20)
                    .unwrap()
            );
            assert_eq!(
                HypergeometricSpec::binomial_a_h(q).unwrap(),
                HypergeometricSpec::binomial_power(q, &int(q)).unwrap()
            );
        }
    }

    #[test]
    fn binomial_series_examples() {
        assert_eq!(
            binomial_series(2, &int(1), 5).unwrap(),
            FormalPowerSeries::from_ints(&[1, 1, 2, 5, 14]).unwrap()
        );
        for q in 1..5 {
            assert_eq!(
                binomial_series(q, &int(0), 6).unwrap(),
                FormalPowerSeries::one(6).unwrap()
            );
        }
        let b = binomial_series(2, &int(1), 8).unwrap();
        assert_eq!(binomial_series(2, &int(2), 8).unwrap(), &b * &b);
        // q n + r = 0 at n = 1
        assert!(matches!(
            binomial_series(2, &int(-2), 4),
            Err(Error::Pole(_))
        ));
    }

    #[test]
    fn b2_cubed() {
        // 3/(2n+3) binom(2n+3, n)
        let want: Vec<i64> = (0..6)
            .map(|n: i64| {
                let b = binomial(2 * n + 3, n);
                i64::try_from(b * 3 / (2 * n + 3)).unwrap()
            })
            .collect();
        assert_eq!(want, vec![1, 3, 9, 28, 90, 297]);
        let b = binomial_series(2, &int(1), 6).unwrap();
        assert_eq!(
            b.pow_rational(&int(3)).unwrap(),
            FormalPowerSeries::from_ints(&want).unwrap()
        );
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(power_coeff(2, 1, 3).unwrap(), int(5));
        assert_eq!(power_coeff(3, 2, 4).unwrap(), int(33));
        for q in 2..6 {
            for s in 1..5 {
                assert_eq!(power_coeff(q, s, s as usize).unwrap(), int(1));
                assert_eq!(power_coeff(q, s, s as usize - 1).unwrap(), int(0));
            }
        }
        assert!(BinomialPowerClosedForm::new(2, ratio(1, 2))
            .unwrap()
            .th_power_coeff(3)
            .is_err());
    }

    #[test]
    fn power_identity_examples() {
        assert!(verify_power_identity(2, &int(3), 30).unwrap().is_holds());
        assert!(verify_power_identity(3, &int(1), 10).unwrap().is_holds());
        assert!(verify_power_identity(4, &ratio(5, 2), 20)
            .unwrap()
            .is_holds());
    }

    #[test]
    fn term_ratio_recurrence_holds_on_expansion() {
        let spec = HypergeometricSpec::binomial_power(4, &ratio(3, 7)).unwrap();
        let f = spec.expand(15).unwrap();
        for n in 0..14 {
            assert_eq!(
                &f.coeffs()[n] * spec.term_ratio(n).unwrap(),
                f.coeffs()[n + 1]
            );
        }
    }
}
