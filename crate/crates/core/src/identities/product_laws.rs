//! Series families built from `w = t (1+w)^m` and the product laws between
//! them.
//!
//! ```text
//! A(p,y;t) = sum ((p-1)n+y+1)/(pn+y+1) binom((p+1)n+y, n) t^n
//!          = (1-w)(1+w)^(y+1) / (1-pw),              w = t(1+w)^(p+1)
//! C(p,x;t) = sum 2x/((2p-1)n+2x) binom(2pn+2x-1, n) t^n
//!          = (1+w)^(2x),                             w = t(1+w)^(2p)
//! D(p,y;t) = sum ((p-1)n+y+1)/(pn+y+1) binom(2(pn+y+1), n) t^n
//!          = (1-w)(1+w)^(2y+2) / (1+(1-2p)w),        w = t(1+w)^(2p)
//! ```

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::{One, Zero};

use super::merge_reports;
use crate::error::{Error, Result};
use crate::hypergeom::{binomial_scale, HypergeometricSpec};
use crate::rational::{binomial_rational, int, Rational};
use crate::report::{IdentityReport, Param};
use crate::series::{lagrange_solve, FormalPowerSeries};

fn pole(what: &str, n: usize) -> Error {
    Error::Pole(format!("{what}: vanishing denominator at n={n}"))
}

/// `w = t (1+w)^m` and `log(1 + w)`, to `precision` terms. Cached, since
/// every grid point with the same `m` shares them.
fn implicit_root(m: i64, precision: usize) -> Result<Arc<(FormalPowerSeries, FormalPowerSeries)>> {
    type Cache = Mutex<HashMap<(i64, usize), Arc<(FormalPowerSeries, FormalPowerSeries)>>>;
    static CACHE: OnceLock<Cache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(hit) = cache.lock().unwrap().get(&(m, precision)) {
        return Ok(Arc::clone(hit));
    }
    let phi = FormalPowerSeries::int_polynomial(&[1, 1], precision)?.pow_int(m)?;
    let w = lagrange_solve(&phi, precision)?;
    let log = (&FormalPowerSeries::one(precision)? + &w).log()?;
    let entry = Arc::new((w, log));
    cache
        .lock()
        .unwrap()
        .insert((m, precision), Arc::clone(&entry));
    Ok(entry)
}

/// `(1 + w)^e` as `exp(e log(1 + w))`.
fn root_power(
    root: &(FormalPowerSeries, FormalPowerSeries),
    e: &Rational,
) -> Result<FormalPowerSeries> {
    root.1.scale(e).exp()
}

fn ensure_same(what: &str, direct: &FormalPowerSeries, other: &FormalPowerSeries) -> Result<()> {
    if direct != other {
        return Err(Error::TheoremViolation(format!(
            "{what}: direct coefficients {direct} disagree with Lagrange form {other}"
        )));
    }
    Ok(())
}

pub fn series_a_direct(p: i64, y: &Rational, precision: usize) -> Result<FormalPowerSeries> {
    FormalPowerSeries::try_from_fn(precision, |n| {
        let m = n as i64;
        let den = int(p * m) + y + int(1);
        if den.is_zero() {
            return Err(pole("A(p,y;t)", n));
        }
        let num = int((p - 1) * m) + y + int(1);
        Ok(num / den * binomial_rational(&(int((p + 1) * m) + y), m))
    })
}

pub fn series_a_lagrange(p: i64, y: &Rational, precision: usize) -> Result<FormalPowerSeries> {
    let root = implicit_root(p + 1, precision)?;
    let w = &root.0;
    let one = FormalPowerSeries::one(precision)?;
    let num = &(&one - w) * &root_power(&root, &(y + int(1)))?;
    num.div(&(&one - &w.scale(&int(p))))
}

/// `A(p,y;t)`, after asserting that the direct and Lagrange forms agree.
pub fn series_a(p: i64, y: &Rational, precision: usize) -> Result<FormalPowerSeries> {
    let direct = series_a_direct(p, y, precision)?;
    ensure_same("A(p,y;t)", &direct, &series_a_lagrange(p, y, precision)?)?;
    Ok(direct)
}

pub fn series_c_direct(p: i64, x: &Rational, precision: usize) -> Result<FormalPowerSeries> {
    let two_x = int(2) * x;
    FormalPowerSeries::try_from_fn(precision, |n| {
        if n == 0 {
            return Ok(Rational::one());
        }
        let m = n as i64;
        let den = int((2 * p - 1) * m) + &two_x;
        if den.is_zero() {
            return Err(pole("C(p,x;t)", n));
        }
        Ok(&two_x / den * binomial_rational(&(int(2 * p * m) + &two_x - int(1)), m))
    })
}

pub fn series_d_direct(p: i64, y: &Rational, precision: usize) -> Result<FormalPowerSeries> {
    FormalPowerSeries::try_from_fn(precision, |n| {
        let m = n as i64;
        let den = int(p * m) + y + int(1);
        if den.is_zero() {
            return Err(pole("D(p,y;t)", n));
        }
        let num = int((p - 1) * m) + y + int(1);
        let top = int(2) * &den;
        Ok(num / den * binomial_rational(&top, m))
    })
}

/// `C(p,x;t)`, after checking it against `(1+w)^(2x)`.
pub fn series_c(p: i64, x: &Rational, precision: usize) -> Result<FormalPowerSeries> {
    let c = series_c_direct(p, x, precision)?;
    let root = implicit_root(2 * p, precision)?;
    ensure_same("C(p,x;t)", &c, &root_power(&root, &(int(2) * x))?)?;
    Ok(c)
}

/// `D(p,y;t)`, after checking it against its Lagrange form.
pub fn series_d(p: i64, y: &Rational, precision: usize) -> Result<FormalPowerSeries> {
    let d = series_d_direct(p, y, precision)?;
    let root = implicit_root(2 * p, precision)?;
    let w = &root.0;
    let one = FormalPowerSeries::one(precision)?;
    let num = &(&one - w) * &root_power(&root, &(int(2) * y + int(2)))?;
    ensure_same(
        "D(p,y;t)",
        &d,
        &num.div(&(&one + &w.scale(&int(1 - 2 * p))))?,
    )?;
    Ok(d)
}

/// `(C(p,x;t), D(p,y;t))`, each checked against its Lagrange form.
pub fn series_c_d(
    p: i64,
    x: &Rational,
    y: &Rational,
    precision: usize,
) -> Result<(FormalPowerSeries, FormalPowerSeries)> {
    Ok((series_c(p, x, precision)?, series_d(p, y, precision)?))
}

/// `(B_{p+1}^x A(p,y), A(p,x+y))`. The power of `B` is taken as `(1+w)^x`
/// through the implicit root, independent of its closed form.
pub fn product_law_a(
    p: i64,
    x: &Rational,
    y: &Rational,
    precision: usize,
) -> Result<(FormalPowerSeries, FormalPowerSeries)> {
    let bx = root_power(&*implicit_root(p + 1, precision)?, x)?;
    Ok((
        &bx * &series_a(p, y, precision)?,
        series_a(p, &(x + y), precision)?,
    ))
}

/// `(C(p,x) D(p,y), D(p,x+y))`.
pub fn product_law_cd(
    p: i64,
    x: &Rational,
    y: &Rational,
    precision: usize,
) -> Result<(FormalPowerSeries, FormalPowerSeries)> {
    let (c, d) = series_c_d(p, x, y, precision)?;
    Ok((&c * &d, series_d(p, &(x + y), precision)?))
}

fn frac_list(offsets: impl Iterator<Item = i64>, base: &Rational, den: i64) -> Vec<Rational> {
    offsets.map(|i| (base + int(i)) / int(den)).collect()
}

/// `A(p,y;t)` as a `(p+2)F(p+1)` at argument `(p+1)^(p+1) t / p^p`.
pub fn hypergeometric_a(p: i64, y: &Rational) -> Result<HypergeometricSpec> {
    let mut upper = frac_list(1..=p + 1, y, p + 1);
    upper.push((y + int(p)) / int(p - 1));
    let mut lower = frac_list(2..=p + 1, y, p);
    lower.push((y + int(1)) / int(p - 1));
    HypergeometricSpec::new(upper, lower, binomial_scale(p + 1))
}

/// `D(p,y;t)` as a `(2p+2)F(2p+1)` at argument `(2p)^(2p) t / (2p-1)^(2p-1)`.
pub fn hypergeometric_d(p: i64, y: &Rational) -> Result<HypergeometricSpec> {
    let two_y = int(2) * y;
    let mut upper = frac_list(3..=2 * p + 2, &two_y, 2 * p);
    upper.push((y + int(p)) / int(p - 1));
    upper.push((y + int(1)) / int(p));
    let mut lower = frac_list(3..=2 * p + 1, &two_y, 2 * p - 1);
    lower.push((y + int(1)) / int(p - 1));
    lower.push((y + int(p + 1)) / int(p));
    HypergeometricSpec::new(upper, lower, binomial_scale(2 * p))
}

/// `B_{p+1}^x A(p,y) = A(p,x+y)` with every factor expanded from its
/// hypergeometric parameters.
pub fn hypergeometric_product_a(
    p: i64,
    x: &Rational,
    y: &Rational,
    precision: usize,
) -> Result<(FormalPowerSeries, FormalPowerSeries)> {
    let bx = HypergeometricSpec::binomial_power(p + 1, x)?.expand(precision)?;
    let a = hypergeometric_a(p, y)?.expand(precision)?;
    Ok((&bx * &a, hypergeometric_a(p, &(x + y))?.expand(precision)?))
}

/// `C(p,x) D(p,y) = D(p,x+y)` with every factor expanded from its
/// hypergeometric parameters.
pub fn hypergeometric_product_cd(
    p: i64,
    x: &Rational,
    y: &Rational,
    precision: usize,
) -> Result<(FormalPowerSeries, FormalPowerSeries)> {
    let c = HypergeometricSpec::binomial_power(2 * p, &(int(2) * x))?.expand(precision)?;
    let d = hypergeometric_d(p, y)?.expand(precision)?;
    Ok((&c * &d, hypergeometric_d(p, &(x + y))?.expand(precision)?))
}

/// Both product laws and both hypergeometric restatements at one
/// `(p, x, y)`, to `precision` coefficients.
pub fn check_product_laws(
    p: i64,
    x: &Rational,
    y: &Rational,
    precision: usize,
) -> Result<IdentityReport> {
    if p < 2 {
        return Err(Error::InvalidParameter(format!(
            "product laws need p >= 2, got {p}"
        )));
    }
    let grid = format!("p={p}, x={x}, y={y}, n<{precision}");
    let fixed = [
        Param::new("p", int(p)),
        Param::new("x", x.clone()),
        Param::new("y", y.clone()),
    ];
    let cmp = |id: &str, sides: Result<(FormalPowerSeries, FormalPowerSeries)>| {
        let (l, r) = sides?;
        Ok(IdentityReport::from_series(
            id,
            grid.clone(),
            &fixed,
            &l,
            &r,
        ))
    };
    merge_reports(
        "product-laws",
        grid.clone(),
        [
            cmp("product-law-a", product_law_a(p, x, y, precision)),
            cmp("product-law-cd", product_law_cd(p, x, y, precision)),
            cmp(
                "hypergeometric-product-a",
                hypergeometric_product_a(p, x, y, precision),
            ),
            cmp(
                "hypergeometric-product-cd",
                hypergeometric_product_cd(p, x, y, precision),
            ),
        ],
    )
}
