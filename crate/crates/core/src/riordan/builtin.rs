use std::fmt;
use std::str::FromStr;

use super::RiordanArray;
use crate::error::{Error, Result};
use crate::series::{lagrange_solve, FormalPowerSeries};

/// The three reference arrays.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BuiltinArray {
    /// `binom(n, k)`: `d = h = 1/(1-t)`, `A = 1 + t`.
    Pascal,
    /// Shapiro's Catalan triangle `(k+1)/(n+1) binom(2n+2, n-k)`:
    /// `d = h = (1 - 2t - sqrt(1-4t)) / (2t^2)`, `A = (1+t)^2`.
    Catalan,
    /// The ballot variant `(k+1)/(n+1) binom(2n-k, n)`:
    /// `d = h = (1 - sqrt(1-4t)) / (2t)`, `A = 1/(1-t)`.
    Ballot,
}

impl BuiltinArray {
    pub const ALL: [BuiltinArray; 3] = [Self::Pascal, Self::Catalan, Self::Ballot];

    pub fn name(self) -> &'static str {
        match self {
            Self::Pascal => "pascal",
            Self::Catalan => "catalan42",
            Self::Ballot => "ballot43",
        }
    }

    /// Closed-form A-sequence series to `precision` terms.
    pub fn a_series(self, precision: usize) -> Result<FormalPowerSeries> {
        match self {
            Self::Pascal => FormalPowerSeries::int_polynomial(&[1, 1], precision),
            Self::Catalan => FormalPowerSeries::int_polynomial(&[1, 2, 1], precision),
            Self::Ballot => FormalPowerSeries::geometric(precision),
        }
    }

    /// The array with `precision` rows determined.
    pub fn array(self, precision: usize) -> Result<RiordanArray> {
        if precision == 0 {
            return Err(Error::ZeroPrecision);
        }
        match self {
            Self::Pascal => RiordanArray::from_dh(
                FormalPowerSeries::geometric(precision)?,
                FormalPowerSeries::geometric(precision)?,
            ),
            // both remaining arrays have d = h with h = A(t h)
            Self::Catalan | Self::Ballot => {
                let a = self.a_series(precision)?;
                let h = lagrange_solve(&a, precision + 1)?.shift_down(1)?;
                RiordanArray::from_dh(h.clone(), h)
            }
        }
    }
}

impl fmt::Display for BuiltinArray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BuiltinArray {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "pascal" => Ok(Self::Pascal),
            "catalan42" | "catalan" => Ok(Self::Catalan),
            "ballot43" | "ballot" => Ok(Self::Ballot),
            other => Err(Error::InvalidParameter(format!(
                "unknown builtin array `{other}` (expected pascal, catalan42 or ballot43)"
            ))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{binomial, int, ratio, Rational};

    fn catalan_closed(n: i64, k: i64) -> Rational {
        ratio(k + 1, n + 1) * Rational::from_integer(binomial(2 * n + 2, n - k))
    }

    fn ballot_closed(n: i64, k: i64) -> Rational {
        ratio(k + 1, n + 1) * Rational::from_integer(binomial(2 * n - k, n))
    }

    #[test]
    fn closed_forms() {
        let c = BuiltinArray::Catalan
            .array(12)
            .unwrap()
            .materialize(12)
            .unwrap();
        let b = BuiltinArray::Ballot
            .array(12)
            .unwrap()
            .materialize(12)
            .unwrap();
        for n in 0..12i64 {
            for k in 0..=n {
                assert_eq!(
                    c.get(n as usize, k as usize),
                    catalan_closed(n, k),
                    "({n},{k})"
                );
                assert_eq!(
                    b.get(n as usize, k as usize),
                    ballot_closed(n, k),
                    "({n},{k})"
                );
            }
        }
    }

    #[test]
    fn table_spot_values() {
        let c = BuiltinArray::Catalan.array(8).unwrap();
        assert_eq!(c.entry(4, 1).unwrap(), int(48));
        let b = BuiltinArray::Ballot.array(8).unwrap();
        assert_eq!(b.entry(6, 2).unwrap(), int(90));
        assert_eq!(
            b.materialize(5).unwrap().row(4),
            &[int(14), int(14), int(9), int(4), int(1)]
        );
    }

    #[test]
    fn a_series_matches_closed_form() {
        for b in BuiltinArray::ALL {
            let arr = b.array(15).unwrap();
            assert_eq!(
                arr.a_series(14).unwrap().series(),
                &b.a_series(14).unwrap(),
                "{b}"
            );
        }
    }

    #[test]
    fn names_parse() {
        for b in BuiltinArray::ALL {
            assert_eq!(b.name().parse::<BuiltinArray>().unwrap(), b);
        }
        assert!("motzkin".parse::<BuiltinArray>().is_err());
    }
}
