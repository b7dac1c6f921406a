//! Exact rationals, integer and generalized binomial coefficients.
//!
//! Binomials follow the convention used by every finite identity in this
//! crate: `binom(n, m) = 0` when `m < 0`, and also when `m > n >= 0`. For a
//! negative or non-integer top index the falling-factorial definition
//! `alpha (alpha - 1) ... (alpha - m + 1) / m!` applies.

use std::cell::RefCell;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type Rational = BigRational;

/// Rows of Pascal's triangle up to this index are memoized per thread.
const CACHED_ROWS: usize = 640;

thread_local! {
    static PASCAL: RefCell<Vec<Vec<BigInt>>> = RefCell::new(vec![vec![BigInt::one()]]);
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `num / den`, reduced. Panics on a zero denominator.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn is_integer(x: &Rational) -> bool {
    x.denom().is_one()
}

/// Parses `"p"` or `"p/q"` with decimal integers of any size.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    s.parse::<Rational>()
        .map_err(|e| Error::Parse(format!("`{s}` is not a rational: {e}")))
}

/// Parses a comma-separated list of rationals. The empty string is the empty list.
pub fn parse_rational_list(s: &str) -> Result<Vec<Rational>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(parse_rational).collect()
}

/// Integer value of `x` as `i64`, if it is an integer in range.
pub fn to_i64(x: &Rational) -> Option<i64> {
    if !is_integer(x) {
        return None;
    }
    i64::try_from(x.numer()).ok()
}

/// Integer binomial coefficient with the zero-outside-support convention.
pub fn binomial(n: i64, m: i64) -> BigInt {
    if m < 0 {
        return BigInt::zero();
    }
    if n >= 0 {
        if m > n {
            return BigInt::zero();
        }
        if (n as usize) < CACHED_ROWS {
            return cached(n as usize, m as usize);
        }
        let m = m.min(n - m);
        let mut acc = BigInt::one();
        for i in 0..m {
            acc *= n - i;
            acc /= i + 1;
        }
        return acc;
    }
    // binom(n, m) = (-1)^m binom(m - n - 1, m) for n < 0
    let b = binomial(m - n - 1, m);
    if m % 2 == 0 {
        b
    } else {
        -b
    }
}

fn cached(n: usize, m: usize) -> BigInt {
    PASCAL.with(|cell| {
        let mut rows = cell.borrow_mut();
        while rows.len() <= n {
            let prev = rows.last().unwrap();
            let mut next = Vec::with_capacity(prev.len() + 1);
            next.push(BigInt::one());
            for w in prev.windows(2) {
                next.push(&w[0] + &w[1]);
            }
            next.push(BigInt::one());
            rows.push(next);
        }
        rows[n][m].clone()
    })
}

/// Generalized binomial `binom(alpha, m)` for rational `alpha`.
pub fn binomial_rational(alpha: &Rational, m: i64) -> Rational {
    if m < 0 {
        return Rational::zero();
    }
    if let Some(n) = to_i64(alpha) {
        return Rational::from_integer(binomial(n, m));
    }
    // alpha = u/v: prod (u - v i) / (v^m m!), reduced once at the end
    let (u, v) = (alpha.numer(), alpha.denom());
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..m {
        num *= u - v * i;
        den *= v * (i + 1);
    }
    Rational::new(num, den)
}

/// Renders a rational in canonical form: `"p"` for integers, `"p/q"` otherwise.
pub fn format_rational(x: &Rational) -> String {
    x.to_string()
}

/// Serde adapters that move rationals across text boundaries as decimal strings.
pub mod serde_str {
    use serde::{de, Deserialize, Deserializer, Serializer};

    use super::{parse_rational, Rational};

    pub fn serialize<S: Serializer>(x: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&x.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        parse_rational(&s).map_err(de::Error::custom)
    }

    pub mod vec {
        use serde::ser::SerializeSeq;
        use serde::{de, Deserialize, Deserializer, Serializer};

        use super::super::{parse_rational, Rational};

        pub fn serialize<S: Serializer>(xs: &[Rational], s: S) -> Result<S::Ok, S::Error> {
            let mut seq = s.serialize_seq(Some(xs.len()))?;
            for x in xs {
                seq.serialize_element(&x.to_string())?;
            }
            seq.end()
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational>, D::Error> {
            let raw = Vec::<String>::deserialize(d)?;
            raw.iter()
                .map(|s| parse_rational(s).map_err(de::Error::custom))
                .collect()
        }
    }
}
