//! Series reversion and Lagrange inversion.
//!
//! `revert` is the fast path (Newton iteration, doubling precision each
//! step). `lagrange_coeffs` evaluates the coefficient formula
//! `[t^n] w^k = (k/n) [t^(n-k)] phi^n` directly and shares no code with the
//! Newton path, so the two are used to check each other.

use num_traits::Zero;

use super::FormalPowerSeries;
use crate::error::{Error, Result};
use crate::rational::{int, Rational};

impl FormalPowerSeries {
    /// Compositional inverse: the `r` with `self(r(t)) = t`.
    ///
    /// Requires order exactly 1. The result has the precision of `self`.
    pub fn revert(&self) -> Result<Self> {
        let order = self.order();
        if order != 1 {
            return Err(Error::ReversionOrder { order });
        }
        let n = self.precision();
        let lead = self.coeffs[1].recip();
        let mut r = Self::polynomial(&[Rational::zero(), lead], 2)?;
        let mut prec = 2;
        while prec < n {
            prec = (2 * prec).min(n);
            let r_p = r.pad_to(prec);
            let g = self.truncate(prec)?;
            let residual = &g.compose(&r_p)? - &Self::t(prec)?;
            // residual has order >= the previous precision, so a derivative
            // known one term short is still enough for the Newton step
            let dg = self.truncate(prec + 1)?.derivative().pad_to(prec);
            let slope = dg.compose(&r_p)?;
            let step = residual.div(&slope)?;
            r = &r_p - &step;
        }
        Ok(r)
    }
}

/// Solves `w = t * phi(w)` for `w`, to precision `min(precision, phi.precision() + 1)`.
pub fn lagrange_solve(phi: &FormalPowerSeries, precision: usize) -> Result<FormalPowerSeries> {
    if phi.coeffs[0].is_zero() {
        return Err(Error::LagrangePrecondition);
    }
    if precision == 0 {
        return Err(Error::ZeroPrecision);
    }
    let n = precision.min(phi.precision() + 1);
    if n == 1 {
        return FormalPowerSeries::zero(1);
    }
    // w = t phi(w)  <=>  w is the compositional inverse of t / phi(t)
    let g = phi.truncate(n - 1)?.recip()?.shift_up(1);
    g.revert()
}

/// Generating function of `[t^n] F(t) phi(t)^n`, computed as
/// `F(w) / (1 - t phi'(w))` with `w = t phi(w)`.
pub fn lagrange_gf(
    f: &FormalPowerSeries,
    phi: &FormalPowerSeries,
    precision: usize,
) -> Result<FormalPowerSeries> {
    let w = lagrange_solve(phi, precision)?;
    let fw = f.compose(&w)?;
    let slope = phi.derivative().compose(&w)?.shift_up(1);
    let den = &FormalPowerSeries::one(slope.precision())? - &slope;
    if den.coeffs[0].is_zero() {
        return Err(Error::SingularInversion);
    }
    fw.div(&den)
}

/// `w^k` for `w = t phi(w)`, straight from the Lagrange coefficient formula.
///
/// Coefficient `n` needs `phi` up to index `n - k`, so the result has
/// precision `min(precision, phi.precision() + k)`.
pub fn lagrange_coeffs(
    phi: &FormalPowerSeries,
    k: usize,
    precision: usize,
) -> Result<FormalPowerSeries> {
    if phi.coeffs[0].is_zero() {
        return Err(Error::LagrangePrecondition);
    }
    if k == 0 {
        return Err(Error::InvalidParameter(
            "Lagrange coefficient formula needs k >= 1".into(),
        ));
    }
    if precision == 0 {
        return Err(Error::ZeroPrecision);
    }
    let n_out = precision.min(phi.precision() + k);
    let mut out = vec![Rational::zero(); n_out];
    if n_out > k {
        let len = n_out - k;
        let base = phi.truncate(len)?;
        let mut power = FormalPowerSeries::one(len)?;
        for (n, slot) in out.iter_mut().enumerate().skip(1) {
            power = &power * &base;
            if n >= k {
                *slot = power.coeffs[n - k].clone() * int(k as i64) / int(n as i64);
            }
        }
    }
    FormalPowerSeries::new(out)
}
