//! Riordan arrays `D = (d(t), h(t))` with `d[n][k] = [t^n] d(t) (t h(t))^k`.

mod aseq;
mod builtin;
mod triangle;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::rational::{int, Rational};
use crate::report::{IdentityReport, Param};
use crate::series::{lagrange_solve, FormalPowerSeries};

pub use aseq::{a_sequence, ASequence};
pub use builtin::BuiltinArray;
pub use triangle::{RowRecord, Triangle};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RiordanArray {
    d: FormalPowerSeries,
    h: FormalPowerSeries,
}

impl RiordanArray {
    /// Array from its pair of series. Rows `0..min(d.prec, h.prec + 1)` are known.
    pub fn from_dh(d: FormalPowerSeries, h: FormalPowerSeries) -> Result<Self> {
        if d.coeffs()[0].is_zero() {
            return Err(Error::InvalidD);
        }
        Ok(Self { d, h })
    }

    /// Proper array with first column `d` and A-sequence `a`. The series `h`
    /// is the unique solution of `h(t) = A(t h(t))`.
    pub fn from_d_a(d: FormalPowerSeries, a: &FormalPowerSeries) -> Result<Self> {
        if d.coeffs()[0].is_zero() {
            return Err(Error::InvalidD);
        }
        if a.coeffs()[0].is_zero() {
            return Err(Error::ImproperA);
        }
        let w = lagrange_solve(a, d.precision())?;
        if w.precision() < 2 {
            return Err(Error::PrecisionShortfall {
                needed: 2,
                available: w.precision(),
            });
        }
        let h = w.shift_down(1)?;
        Ok(Self { d, h })
    }

    pub fn d(&self) -> &FormalPowerSeries {
        &self.d
    }

    pub fn h(&self) -> &FormalPowerSeries {
        &self.h
    }

    /// `t h(t)`.
    pub fn th(&self) -> FormalPowerSeries {
        self.h.shift_up(1)
    }

    /// Number of rows that are exactly determined.
    pub fn precision(&self) -> usize {
        self.d.precision().min(self.h.precision() + 1)
    }

    pub fn is_proper(&self) -> bool {
        !self.h.coeffs()[0].is_zero()
    }

    pub fn entry(&self, n: usize, k: usize) -> Result<Rational> {
        if n >= self.precision() {
            return Err(Error::PrecisionExceeded {
                index: n,
                precision: self.precision(),
            });
        }
        if k > n {
            return Ok(Rational::zero());
        }
        let len = n + 1;
        let col = &self.d.truncate(len)? * &self.th().truncate(len)?.pow_int(k as i64)?;
        Ok(col.coeff(n)?.clone())
    }

    /// Column `k` as a series `d (t h)^k`, to `rows` terms.
    pub fn column(&self, k: usize, rows: usize) -> Result<FormalPowerSeries> {
        self.check_rows(rows)?;
        let th = self.th().truncate(rows)?;
        Ok(&self.d.truncate(rows)? * &th.pow_int(k as i64)?)
    }

    /// The first `nrows` rows as a triangle of exact entries.
    pub fn materialize(&self, nrows: usize) -> Result<Triangle> {
        self.check_rows(nrows)?;
        let mut rows: Vec<Vec<Rational>> = (0..nrows).map(|n| Vec::with_capacity(n + 1)).collect();
        if nrows == 0 {
            return Triangle::new(rows);
        }
        let th = self.th().truncate(nrows)?;
        let mut col = self.d.truncate(nrows)?;
        for k in 0..nrows {
            for (n, row) in rows.iter_mut().enumerate().skip(k) {
                row.push(col.coeffs()[n].clone());
            }
            if k + 1 < nrows {
                col = &col * &th;
            }
        }
        Triangle::new(rows)
    }

    /// First `terms` coefficients of the A-sequence, computed from the
    /// series pair as `A = h o (t h)^(-1)`.
    pub fn a_series(&self, terms: usize) -> Result<ASequence> {
        if !self.is_proper() {
            return Err(Error::ImproperArray);
        }
        let avail = self.h.precision();
        if terms == 0 || terms > avail {
            return Err(Error::PrecisionShortfall {
                needed: terms.max(1),
                available: avail,
            });
        }
        let h = self.h.truncate(terms)?;
        if terms == 1 {
            return ASequence::new(h);
        }
        let inverse = self.th().truncate(terms)?.revert()?;
        ASequence::new(h.compose(&inverse)?)
    }

    /// The array `e[n][k] = d[p n + r][(p - 1) n + r + k]`, keeping one row in
    /// every `p` and dropping the leading entries of the kept rows.
    ///
    /// The new pair is read off constructively: `d~` is the new column 0 and
    /// `t h~ = column 1 / column 0`. The result is then checked to have
    /// A-sequence `A^p`; a mismatch is reported as a theorem violation.
    pub fn extract_subarray(&self, p: usize, r: usize) -> Result<RiordanArray> {
        if p < 2 {
            return Err(Error::InvalidParameter(format!(
                "extraction needs p >= 2, got {p}"
            )));
        }
        if !self.is_proper() {
            return Err(Error::ImproperArray);
        }
        let prec = self.precision();
        let needed = p + r + 1;
        if prec < needed {
            return Err(Error::PrecisionShortfall {
                needed,
                available: prec,
            });
        }
        let rows = (prec - 1 - r) / p + 1;
        let base = self.materialize(p * (rows - 1) + r + 1)?;
        let mut col0 = Vec::with_capacity(rows);
        let mut col1 = Vec::with_capacity(rows);
        for n in 0..rows {
            let row = p * n + r;
            let start = (p - 1) * n + r;
            col0.push(base.get(row, start));
            col1.push(base.get(row, start + 1));
        }
        let d = FormalPowerSeries::new(col0)?;
        let th = FormalPowerSeries::new(col1)?.div(&d)?;
        let h = th.shift_down(1)?;
        let out = RiordanArray::from_dh(d, h)?;

        let terms = rows - 1;
        let got = out.a_series(terms)?;
        let want = self.a_series(terms)?.series().pow_int(p as i64)?;
        if got.series() != &want {
            return Err(Error::TheoremViolation(format!(
                "extracted array (p={p}, r={r}) has A = {}, expected {}",
                got.series(),
                want
            )));
        }
        Ok(out)
    }

    /// `sum_k f_k d[n][k]`, evaluated both as a finite row sum and as
    /// `[t^n] d(t) f(t h(t))`. The two must agree.
    pub fn weighted_row_sum(&self, f: &FormalPowerSeries, n: usize) -> Result<Rational> {
        let rows = n + 1;
        self.check_rows(rows)?;
        if f.precision() < rows {
            return Err(Error::PrecisionExceeded {
                index: n,
                precision: f.precision(),
            });
        }
        let tri = self.materialize(rows)?;
        let direct: Rational = tri
            .row(n)
            .iter()
            .zip(f.coeffs())
            .map(|(d, fk)| d * fk)
            .sum();
        let composed =
            &self.d.truncate(rows)? * &f.truncate(rows)?.compose(&self.th().truncate(rows)?)?;
        let via_series = composed.coeff(n)?.clone();
        if direct != via_series {
            return Err(Error::TheoremViolation(format!(
                "row sum {direct} differs from series coefficient {via_series} at n={n}"
            )));
        }
        Ok(direct)
    }

    /// Checks `d[n][k] = sum_{j=s}^{n} d[n-j][k-s] [t^j] (t h)^s` at one point.
    pub fn convolution_identity(&self, n: usize, k: usize, s: usize) -> Result<IdentityReport> {
        if s < 1 || k < s || n < k {
            return Err(Error::InvalidParameter(format!(
                "column convolution needs n >= k >= s >= 1, got n={n} k={k} s={s}"
            )));
        }
        let rows = n + 1;
        let tri = self.materialize(rows)?;
        let ths = self.th().truncate(rows)?.pow_int(s as i64)?;
        let lhs = tri.get(n, k);
        let mut rhs = Rational::zero();
        for j in s..=n {
            rhs += tri.get(n - j, k - s) * &ths.coeffs()[j];
        }
        let params = vec![
            Param::new("n", int(n as i64)),
            Param::new("k", int(k as i64)),
            Param::new("s", int(s as i64)),
        ];
        Ok(IdentityReport::from_points(
            "column-convolution",
            format!("n={n}, k={k}, s={s}"),
            [(params, lhs, rhs)],
        ))
    }

    /// `d(0) h(0)^n`, the diagonal entry of a lower-triangular array.
    pub fn diagonal_entry(&self, n: usize) -> Rational {
        let h0 = &self.h.coeffs()[0];
        (0..n).fold(self.d.coeffs()[0].clone(), |acc, _| acc * h0)
    }

    fn check_rows(&self, rows: usize) -> Result<()> {
        if rows > self.precision() {
            return Err(Error::PrecisionShortfall {
                needed: rows,
                available: self.precision(),
            });
        }
        Ok(())
    }
}

/// Identity array `(1, 1)`.
pub fn identity_array(precision: usize) -> Result<RiordanArray> {
    RiordanArray::from_dh(
        FormalPowerSeries::one(precision)?,
        FormalPowerSeries::one(precision)?,
    )
}
