//! Finite lower-triangular arrays and their text forms.
//!
//! Text: one row per line, entries separated by single spaces.
//! CSV: the same rows joined by commas (rows are ragged).
//! JSON lines: `{"row": n, "entries": ["...", ...]}` per row.

use std::fmt::Write as _;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{is_integer, parse_rational, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Triangle {
    rows: Vec<Vec<Rational>>,
    integral: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RowRecord {
    pub row: usize,
    #[serde(with = "crate::rational::serde_str::vec")]
    pub entries: Vec<Rational>,
}

impl Triangle {
    /// Row `n` must hold exactly `n + 1` entries.
    pub fn new(rows: Vec<Vec<Rational>>) -> Result<Self> {
        for (n, row) in rows.iter().enumerate() {
            if row.len() != n + 1 {
                return Err(Error::MalformedTriangle(format!(
                    "row {n} has {} entries, expected {}",
                    row.len(),
                    n + 1
                )));
            }
        }
        let integral = rows.iter().flatten().all(is_integer);
        Ok(Self { rows, integral })
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    pub fn row(&self, n: usize) -> &[Rational] {
        &self.rows[n]
    }

    /// Entry `(n, k)`, zero above the diagonal. `n` must be a stored row.
    pub fn get(&self, n: usize, k: usize) -> Rational {
        self.rows[n].get(k).cloned().unwrap_or_else(Rational::zero)
    }

    /// True when every entry has denominator 1.
    pub fn is_integral(&self) -> bool {
        self.integral
    }

    pub fn require_integral(&self) -> Result<()> {
        if self.integral {
            return Ok(());
        }
        for (n, row) in self.rows.iter().enumerate() {
            for (k, v) in row.iter().enumerate() {
                if !is_integer(v) {
                    return Err(Error::NonIntegral {
                        n,
                        k,
                        value: v.clone(),
                    });
                }
            }
        }
        unreachable!("integral flag out of sync with entries")
    }

    pub fn to_text(&self) -> String {
        self.join_rows(" ")
    }

    pub fn to_csv(&self) -> String {
        self.join_rows(",")
    }

    /// Right-aligned columns for terminal output; still whitespace-separated.
    pub fn to_aligned_text(&self) -> String {
        let ncols = self.nrows();
        let mut widths = vec![0usize; ncols];
        let cells: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|v| v.to_string()).collect())
            .collect();
        for row in &cells {
            for (k, c) in row.iter().enumerate() {
                widths[k] = widths[k].max(c.len());
            }
        }
        let mut out = String::new();
        for row in &cells {
            let line: Vec<String> = row
                .iter()
                .enumerate()
                .map(|(k, c)| format!("{c:>w$}", w = widths[k]))
                .collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn to_records(&self) -> Vec<RowRecord> {
        self.rows
            .iter()
            .enumerate()
            .map(|(row, entries)| RowRecord {
                row,
                entries: entries.clone(),
            })
            .collect()
    }

    pub fn from_records(records: Vec<RowRecord>) -> Result<Self> {
        let mut rows = Vec::with_capacity(records.len());
        for (n, rec) in records.into_iter().enumerate() {
            if rec.row != n {
                return Err(Error::MalformedTriangle(format!(
                    "record {n} is labelled row {}",
                    rec.row
                )));
            }
            rows.push(rec.entries);
        }
        Self::new(rows)
    }

    /// Parses the whitespace-separated text form. Blank lines are ignored.
    pub fn from_text(s: &str) -> Result<Self> {
        let rows = s
            .lines()
            .filter(|l| !l.trim().is_empty())
            .map(|l| l.split_whitespace().map(parse_rational).collect())
            .collect::<Result<Vec<_>>>()?;
        Self::new(rows)
    }

    fn join_rows(&self, sep: &str) -> String {
        let mut out = String::new();
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            let _ = writeln!(out, "{}", cells.join(sep));
        }
        out
    }
}
