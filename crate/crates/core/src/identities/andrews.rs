//! Fibonacci numbers as alternating sums of binomial coefficients along
//! lines of slope 5 in Pascal's triangle.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::{fibonacci, merge_reports};
use crate::error::{Error, Result};
use crate::hypergeom::h_for_binomial_a;
use crate::rational::{binomial, int, ratio, Rational};
use crate::report::{IdentityReport, Param};
use crate::riordan::BuiltinArray;
use crate::series::FormalPowerSeries;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AndrewsVariant {
    /// `F_n = sum_k (-1)^k binom(n-1, floor((n-1-5k)/2))`
    A1,
    /// `F_n = sum_k (-1)^k binom(n, floor((n-1-5k)/2))`
    A2,
    /// `F_{2n+1} = sum_j [binom(2n+1, n-5j) - binom(2n+1, n-5j-1)]`
    A3,
    /// `F_{2n+2} = sum_j [binom(2n+2, n-5j) - binom(2n+2, n-5j-1)]`
    A121,
    /// `F_{2n+2} = sum_j [binom(2n+1, n-5j) - binom(2n+1, n-5j-2)]`
    A5,
    /// `F_{2n+1} = sum_j [binom(2n, n-5j) - binom(2n, n-5j-2)]`
    A6,
    /// `F_{2n} = sum_j [binom(2n, n-5j-1) - binom(2n, n-5j-2)]`
    A122,
}

impl AndrewsVariant {
    pub const ALL: [AndrewsVariant; 7] = [
        Self::A1,
        Self::A2,
        Self::A3,
        Self::A121,
        Self::A5,
        Self::A6,
        Self::A122,
    ];

    pub const fn id(self) -> &'static str {
        match self {
            Self::A1 => "andrews-a1",
            Self::A2 => "andrews-a2",
            Self::A3 => "andrews-a3",
            Self::A121 => "andrews-a121",
            Self::A5 => "andrews-a5",
            Self::A6 => "andrews-a6",
            Self::A122 => "andrews-a122",
        }
    }

    pub const fn formula(self) -> &'static str {
        match self {
            Self::A1 => "F_n = sum_k (-1)^k binom(n-1, floor((n-1-5k)/2))",
            Self::A2 => "F_n = sum_k (-1)^k binom(n, floor((n-1-5k)/2))",
            Self::A3 => "F_{2n+1} = sum_j [binom(2n+1, n-5j) - binom(2n+1, n-5j-1)]",
            Self::A121 => "F_{2n+2} = sum_j [binom(2n+2, n-5j) - binom(2n+2, n-5j-1)]",
            Self::A5 => "F_{2n+2} = sum_j [binom(2n+1, n-5j) - binom(2n+1, n-5j-2)]",
            Self::A6 => "F_{2n+1} = sum_j [binom(2n, n-5j) - binom(2n, n-5j-2)]",
            Self::A122 => "F_{2n} = sum_j [binom(2n, n-5j-1) - binom(2n, n-5j-2)]",
        }
    }

    /// Smallest `n` at which the identity is stated.
    pub const fn n_min(self) -> i64 {
        match self {
            Self::A1 | Self::A2 => 1,
            _ => 0,
        }
    }

    /// Fibonacci index on the left-hand side.
    pub fn fib_index(self, n: u64) -> u64 {
        match self {
            Self::A1 | Self::A2 => n,
            Self::A3 | Self::A6 => 2 * n + 1,
            Self::A121 | Self::A5 => 2 * n + 2,
            Self::A122 => 2 * n,
        }
    }

    /// The right-hand sum, over the finite window where a binomial can be
    /// nonzero, widened by one on each side.
    pub fn sum(self, n: u64) -> BigInt {
        let n = n as i64;
        match self {
            Self::A1 => floor_sum(n - 1, n),
            Self::A2 => floor_sum(n, n),
            Self::A3 => bracket_sum(n, 2 * n + 1, 0, 1),
            Self::A121 => bracket_sum(n, 2 * n + 2, 0, 1),
            Self::A5 => bracket_sum(n, 2 * n + 1, 0, 2),
            Self::A6 => bracket_sum(n, 2 * n, 0, 2),
            Self::A122 => bracket_sum(n, 2 * n, 1, 2),
        }
    }

    /// `(F_index, sum)` at `n`.
    pub fn sides(self, n: u64) -> (Rational, Rational) {
        (
            Rational::from_integer(fibonacci(self.fib_index(n))),
            Rational::from_integer(self.sum(n)),
        )
    }
}

impl fmt::Display for AndrewsVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for AndrewsVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let short = s.strip_prefix("andrews-").unwrap_or(s);
        Self::ALL
            .into_iter()
            .find(|v| &v.id()["andrews-".len()..] == short)
            .ok_or_else(|| Error::UnknownIdentity(s.to_string()))
    }
}

/// `sum_k (-1)^k binom(top, floor((n-1-5k)/2))`. The lower index lies in
/// `[0, top]` exactly when `n-2-2 top <= 5k <= n-1`.
fn floor_sum(top: i64, n: i64) -> BigInt {
    let lo = Integer::div_ceil(&(n - 2 - 2 * top), &5) - 1;
    let hi = Integer::div_floor(&(n - 1), &5) + 1;
    let mut acc = BigInt::zero();
    for k in lo..=hi {
        let b = binomial(top, Integer::div_floor(&(n - 1 - 5 * k), &2));
        if k.is_odd() {
            acc -= b;
        } else {
            acc += b;
        }
    }
    acc
}

/// `sum_j [binom(top, n-5j-c1) - binom(top, n-5j-c2)]`, with `c1 < c2`.
fn bracket_sum(n: i64, top: i64, c1: i64, c2: i64) -> BigInt {
    let lo = Integer::div_ceil(&(n - c2 - top), &5) - 1;
    let hi = Integer::div_floor(&(n - c1), &5) + 1;
    let mut acc = BigInt::zero();
    for j in lo..=hi {
        acc += binomial(top, n - 5 * j - c1);
        acc -= binomial(top, n - 5 * j - c2);
    }
    acc
}

pub fn check_andrews(variant: AndrewsVariant, n_max: u64) -> IdentityReport {
    let lo = variant.n_min() as u64;
    let points = (lo..=n_max).map(|n| {
        let (lhs, rhs) = variant.sides(n);
        (vec![Param::new("n", int(n as i64))], lhs, rhs)
    });
    IdentityReport::from_points(variant.id(), format!("{lo} <= n <= {n_max}"), points)
}

/// `(t - t^2 - t^3 + t^4) / (1 - t^5)`: weights `+1, -1, -1, +1, 0` repeating.
pub fn even_weights(precision: usize) -> Result<FormalPowerSeries> {
    FormalPowerSeries::int_polynomial(&[0, 1, -1, -1, 1], precision)?.div(
        &FormalPowerSeries::int_polynomial(&[1, 0, 0, 0, 0, -1], precision)?,
    )
}

/// `(1 - t - t^3 + t^4) / (1 - t^5)`, the weights for the odd rows.
pub fn odd_weights(precision: usize) -> Result<FormalPowerSeries> {
    FormalPowerSeries::int_polynomial(&[1, -1, 0, -1, 1], precision)?.div(
        &FormalPowerSeries::int_polynomial(&[1, 0, 0, 0, 0, -1], precision)?,
    )
}

/// Rebuilds the Fibonacci sums from the arrays obtained by keeping every
/// other row of Pascal's triangle.
///
/// For the even rows (`p = 2, r = 0`), checks that `d = (1-4t)^(-1/2)`, that
/// `h` is the shifted Catalan series, and that `d f(t h)` with the even
/// weights equals `t/(1-3t+t^2)` and has coefficients `F_{2n}`. For the odd
/// rows (`r = 1`), checks `d = ((1-4t)^(-1/2) - 1)/(2t)` and that the odd
/// weights give `(1-t)/(1-3t+t^2)`, the series of `F_{2n+1}`.
pub fn check_via_riordan(n_max: usize) -> Result<IdentityReport> {
    let rows = n_max + 1;
    let base = BuiltinArray::Pascal.array(2 * rows + 1)?;
    let even = base.extract_subarray(2, 0)?;
    let odd = base.extract_subarray(2, 1)?;

    let central =
        FormalPowerSeries::int_polynomial(&[1, -4], rows + 1)?.pow_rational(&ratio(-1, 2))?;
    let denom = FormalPowerSeries::int_polynomial(&[1, -3, 1], rows)?;
    let even_gf = FormalPowerSeries::int_polynomial(&[0, 1], rows)?.div(&denom)?;
    let odd_gf = FormalPowerSeries::int_polynomial(&[1, -1], rows)?.div(&denom)?;
    let fib = |shift: u64| {
        FormalPowerSeries::from_fn(rows, |n| {
            Rational::from_integer(fibonacci(2 * n as u64 + shift))
        })
    };

    let even_d = even.d().truncate(rows)?;
    let even_series = &even_d * &even_weights(rows)?.compose(&even.th().truncate(rows)?)?;
    let odd_d = odd.d().truncate(rows)?;
    let odd_series = &odd_d * &odd_weights(rows)?.compose(&odd.th().truncate(rows)?)?;
    let odd_d_closed = (&central - &FormalPowerSeries::one(rows + 1)?)
        .shift_down(1)?
        .scale(&ratio(1, 2));

    let cmp = |id: &str, lhs: &FormalPowerSeries, rhs: &FormalPowerSeries| {
        Ok(IdentityReport::from_series(
            id,
            format!("n <= {n_max}"),
            &[],
            lhs,
            rhs,
        ))
    };
    merge_reports(
        "andrews-riordan",
        format!("n <= {n_max}"),
        [
            cmp("even-d", &even_d, &central.truncate(rows)?),
            cmp(
                "even-h",
                &even.h().truncate(n_max.max(1))?,
                &h_for_binomial_a(2, n_max.max(1))?,
            ),
            cmp("even-gf", &even_series, &even_gf),
            cmp("even-fibonacci", &even_series, &fib(0)?),
            cmp("odd-d", &odd_d, &odd_d_closed),
            cmp("odd-gf", &odd_series, &odd_gf),
            cmp("odd-fibonacci", &odd_series, &fib(1)?),
        ],
    )
}
