use num_traits::{One, Zero};

use super::{dot, FormalPowerSeries};
use crate::error::{Error, Result};
use crate::rational::{int, Rational};

impl FormalPowerSeries {
    /// `f^k` by square-and-multiply. Negative `k` needs `f(0) != 0`.
    pub fn pow_int(&self, k: i64) -> Result<Self> {
        let base = if k < 0 { self.recip()? } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = Self::one(self.precision())?;
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            e >>= 1;
            if e > 0 {
                sq = &sq * &sq;
            }
        }
        Ok(acc)
    }

    /// `log f` for `f(0) = 1`, as the integral of `f'/f`.
    pub fn log(&self) -> Result<Self> {
        self.require_unit_constant()?;
        if self.precision() == 1 {
            return Self::zero(1);
        }
        let quotient = self.derivative().div(self)?;
        Ok(quotient.integral())
    }

    /// `exp u` for `u(0) = 0`, from `n e_n = sum_k k u_k e_{n-k}`.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::InvalidParameter(
                "exp needs a series with zero constant term".into(),
            ));
        }
        let n = self.precision();
        let ku: Vec<Rational> = (0..n).map(|k| &self.coeffs[k] * int(k as i64)).collect();
        let mut e: Vec<Rational> = Vec::with_capacity(n);
        e.push(Rational::one());
        for m in 1..n {
            let acc = dot((1..=m).map(|k| (&ku[k], &e[m - k])));
            e.push(acc / int(m as i64));
        }
        Self::new(e)
    }

    /// `f^r = exp(r log f)` for rational `r`; `f(0)` must be exactly 1.
    pub fn pow_rational(&self, r: &Rational) -> Result<Self> {
        self.require_unit_constant()?;
        self.log()?.scale(r).exp()
    }

    fn require_unit_constant(&self) -> Result<()> {
        if !self.coeffs[0].is_one() {
            return Err(Error::Normalization {
                found: self.coeffs[0].clone(),
            });
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{binomial, ratio};

    #[test]
    fn integer_powers() {
        let one_t = FormalPowerSeries::int_polynomial(&[1, 1], 6).unwrap();
        assert_eq!(
            one_t.pow_int(3).unwrap(),
            FormalPowerSeries::from_ints(&[1, 3, 3, 1, 0, 0]).unwrap()
        );
        let f = FormalPowerSeries::new(vec![ratio(3, 2), int(7)]).unwrap();
        assert_eq!(f.pow_int(0).unwrap(), FormalPowerSeries::one(2).unwrap());

        let one_minus_t = FormalPowerSeries::int_polynomial(&[1, -1], 6).unwrap();
        assert_eq!(
            one_minus_t.pow_int(-2).unwrap(),
            FormalPowerSeries::from_ints(&[1, 2, 3, 4, 5, 6]).unwrap()
        );
    }

    #[test]
    fn negative_power_of_non_unit_fails() {
        let t = FormalPowerSeries::t(5).unwrap();
        assert_eq!(t.pow_int(-1), Err(Error::NonInvertible));
    }

    #[test]
    fn central_binomials_from_inverse_square_root() {
        let f = FormalPowerSeries::int_polynomial(&[1, -4], 10).unwrap();
        let g = f.pow_rational(&ratio(-1, 2)).unwrap();
        for n in 0..10 {
            assert_eq!(
                g.coeff(n).unwrap(),
                &Rational::from_integer(binomial(2 * n as i64, n as i64))
            );
        }
    }

    #[test]
    fn rational_power_agrees_with_integer_power() {
        let f = FormalPowerSeries::new(vec![int(1), ratio(2, 3), int(-1), ratio(5, 4)]).unwrap();
        assert_eq!(f.pow_rational(&int(1)).unwrap(), f);
        for k in [-3i64, 0, 2, 5] {
            assert_eq!(f.pow_rational(&int(k)).unwrap(), f.pow_int(k).unwrap());
        }
    }

    #[test]
    fn rational_power_needs_unit_constant() {
        let f = FormalPowerSeries::from_ints(&[2, 1]).unwrap();
        assert_eq!(
            f.pow_rational(&ratio(1, 2)),
            Err(Error::Normalization { found: int(2) })
        );
    }

    #[test]
    fn exp_log_inverse() {
        let f = FormalPowerSeries::new(vec![int(1), ratio(-1, 2), int(3), ratio(2, 7), int(0)])
            .unwrap();
        assert_eq!(f.log().unwrap().exp().unwrap(), f);
    }
}
