use num_traits::Zero;

use super::Triangle;
use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::series::FormalPowerSeries;

/// Generating function `A(t)` of an A-sequence; `A(0) != 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ASequence(FormalPowerSeries);

impl ASequence {
    pub fn new(series: FormalPowerSeries) -> Result<Self> {
        if series.coeffs()[0].is_zero() {
            return Err(Error::ImproperA);
        }
        Ok(Self(series))
    }

    pub fn series(&self) -> &FormalPowerSeries {
        &self.0
    }

    pub fn into_series(self) -> FormalPowerSeries {
        self.0
    }

    pub fn coeffs(&self) -> &[Rational] {
        self.0.coeffs()
    }

    pub fn len(&self) -> usize {
        self.0.precision()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

/// Recovers the A-sequence of a triangle from its entries alone.
///
/// Coefficient `a_n` comes from the recurrence at position `(n + 1, 1)`:
/// `d[n+1][1] = a_0 d[n][0] + ... + a_n d[n][n]`, a lower-triangular system
/// with the diagonal entries as pivots. A triangle of `m + 1` rows yields
/// `m` terms. The recovered terms are then checked against the recurrence
/// at every available `(n, k)`, not only the positions used to solve.
pub fn a_sequence(t: &Triangle) -> Result<ASequence> {
    let rows = t.nrows();
    if rows < 2 {
        return Err(Error::InsufficientData(format!(
            "need at least 2 rows, triangle has {rows}"
        )));
    }
    if t.get(0, 0).is_zero() {
        return Err(Error::InsufficientData("top-left entry is zero".into()));
    }
    let m = rows - 1;
    let mut a: Vec<Rational> = Vec::with_capacity(m);
    for n in 0..m {
        let pivot = t.get(n, n);
        if pivot.is_zero() {
            return Err(Error::InsufficientData(format!(
                "diagonal entry ({n}, {n}) vanishes"
            )));
        }
        let mut acc = t.get(n + 1, 1);
        for (i, ai) in a.iter().enumerate() {
            acc -= ai * t.get(n, i);
        }
        a.push(acc / pivot);
    }
    for n in 0..m {
        for k in 0..=n {
            let mut rhs = Rational::zero();
            for (i, ai) in a.iter().enumerate().take(n - k + 1) {
                rhs += ai * t.get(n, k + i);
            }
            if rhs != t.get(n + 1, k + 1) {
                return Err(Error::NotRiordan { n: n + 1, k: k + 1 });
            }
        }
    }
    ASequence::new(FormalPowerSeries::new(a)?)
        .map_err(|_| Error::InsufficientData("recovered a_0 is zero".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn tri(rows: &[&[i64]]) -> Triangle {
        Triangle::new(
            rows.iter()
                .map(|r| r.iter().map(|&v| int(v)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn pascal_a_sequence() {
        let t = tri(&[&[1], &[1, 1], &[1, 2, 1], &[1, 3, 3, 1], &[1, 4, 6, 4, 1]]);
        let a = a_sequence(&t).unwrap();
        assert_eq!(
            a.series(),
            &FormalPowerSeries::from_ints(&[1, 1, 0, 0]).unwrap()
        );
    }

    #[test]
    fn non_riordan_is_detected() {
        // column 0 fine, but entry (3, 2) breaks the recurrence
        let t = tri(&[&[1], &[1, 1], &[1, 2, 1], &[1, 3, 4, 1]]);
        assert_eq!(a_sequence(&t), Err(Error::NotRiordan { n: 3, k: 2 }));
    }

    #[test]
    fn singular_and_short_inputs() {
        assert!(matches!(
            a_sequence(&tri(&[&[1]])),
            Err(Error::InsufficientData(_))
        ));
        assert!(matches!(
            a_sequence(&tri(&[&[1], &[1, 0], &[1, 0, 0]])),
            Err(Error::InsufficientData(_))
        ));
        assert!(matches!(
            a_sequence(&tri(&[&[0], &[1, 1]])),
            Err(Error::InsufficientData(_))
        ));
    }
}
