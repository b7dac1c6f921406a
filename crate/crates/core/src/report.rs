use std::fmt;

use serde::{Deserialize, Serialize};

use crate::rational::int;
use crate::{FormalPowerSeries, Rational};

/// One named coordinate of a parameter point.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Param {
    pub name: String,
    #[serde(with = "crate::rational::serde_str")]
    pub value: Rational,
}

impl Param {
    pub fn new(name: impl Into<String>, value: Rational) -> Self {
        Self {
            name: name.into(),
            value,
        }
    }
}

/// A parameter point where the two sides disagree, with both exact values.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub params: Vec<Param>,
    #[serde(with = "crate::rational::serde_str")]
    pub lhs: Rational,
    #[serde(with = "crate::rational::serde_str")]
    pub rhs: Rational,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Holds,
    Counterexample,
}

/// Outcome of checking an identity over a finite parameter grid.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub id: String,
    /// Human-readable description of the grid that was evaluated.
    pub grid: String,
    /// Number of parameter points evaluated.
    pub points: usize,
    pub verdict: Verdict,
    pub counterexample: Option<Counterexample>,
}

impl IdentityReport {
    pub fn holds(id: impl Into<String>, grid: impl Into<String>, points: usize) -> Self {
        Self {
            id: id.into(),
            grid: grid.into(),
            points,
            verdict: Verdict::Holds,
            counterexample: None,
        }
    }

    pub fn failed(
        id: impl Into<String>,
        grid: impl Into<String>,
        points: usize,
        counterexample: Counterexample,
    ) -> Self {
        Self {
            id: id.into(),
            grid: grid.into(),
            points,
            verdict: Verdict::Counterexample,
            counterexample: Some(counterexample),
        }
    }

    /// Builds a report from evaluated points in order, stopping at the first
    /// disagreement.
    pub fn from_points<I>(id: impl Into<String>, grid: impl Into<String>, points: I) -> Self
    where
        I: IntoIterator<Item = (Vec<Param>, Rational, Rational)>,
    {
        let mut count = 0;
        for (params, lhs, rhs) in points {
            count += 1;
            if lhs != rhs {
                return Self::failed(id, grid, count, Counterexample { params, lhs, rhs });
            }
        }
        Self::holds(id, grid, count)
    }

    /// Compares two series coefficientwise up to their shared precision. A
    /// disagreement is reported at its index as parameter `n`, after `fixed`.
    pub fn from_series(
        id: impl Into<String>,
        grid: impl Into<String>,
        fixed: &[Param],
        lhs: &FormalPowerSeries,
        rhs: &FormalPowerSeries,
    ) -> Self {
        let n = lhs.precision().min(rhs.precision());
        let points = (0..n).map(|i| {
            let mut params = fixed.to_vec();
            params.push(Param::new("n", int(i as i64)));
            (params, lhs.coeffs()[i].clone(), rhs.coeffs()[i].clone())
        });
        Self::from_points(id, grid, points)
    }

    pub fn is_holds(&self) -> bool {
        self.verdict == Verdict::Holds
    }
}

impl fmt::Display for IdentityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.counterexample {
            None => write!(
                f,
                "{}: holds ({} points; {})",
                self.id, self.points, self.grid
            ),
            Some(c) => {
                write!(f, "{}: COUNTEREXAMPLE at", self.id)?;
                for p in &c.params {
                    write!(f, " {}={}", p.name, p.value)?;
                }
                write!(f, ": lhs={} rhs={}", c.lhs, c.rhs)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stops_at_first_counterexample() {
        let pts = (0..10).map(|n| {
            let rhs = if n == 4 { int(n + 1) } else { int(n) };
            (vec![Param::new("n", int(n))], int(n), rhs)
        });
        let rep = IdentityReport::from_points("demo", "n<10", pts);
        assert!(!rep.is_holds());
        assert_eq!(rep.points, 5);
        let c = rep.counterexample.unwrap();
        assert_eq!(c.params[0].value, int(4));
        assert_eq!((c.lhs, c.rhs), (int(4), int(5)));
    }

    #[test]
    fn json_shape() {
        let rep = IdentityReport::holds("x", "n<=3", 4);
        let s = serde_json::to_string(&rep).unwrap();
        assert_eq!(
            s,
            r#"{"id":"x","grid":"n<=3","points":4,"verdict":"holds","counterexample":null}"#
        );
        let back: IdentityReport = serde_json::from_str(&s).unwrap();
        assert_eq!(back, rep);
    }
}
