use std::io::Write;

use anyhow::Result;
use riordan::identities::IdentitySpec;
use riordan::{IdentityReport, Rational, SeriesRecord, Triangle};
use serde::{Deserialize, Serialize};

use crate::Format;

/// Outcome of comparing a recovered A-sequence with the predicted one.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimRecord {
    pub p: usize,
    pub r: usize,
    #[serde(with = "riordan::rational::serde_str::vec")]
    pub a: Vec<Rational>,
    #[serde(with = "riordan::rational::serde_str::vec")]
    pub expected: Vec<Rational>,
    pub holds: bool,
}

/// One registry entry as printed by `check --list`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ListRecord {
    pub id: String,
    pub formula: String,
    pub params: Vec<String>,
    pub constraint: String,
    pub default_grid: String,
}

impl From<&IdentitySpec> for ListRecord {
    fn from(spec: &IdentitySpec) -> Self {
        Self {
            id: spec.id.to_string(),
            formula: spec.formula.to_string(),
            params: spec.param_names().iter().map(|s| s.to_string()).collect(),
            constraint: spec.constraint.to_string(),
            default_grid: spec.default_grid(),
        }
    }
}

fn joined(xs: &[Rational], sep: &str) -> String {
    xs.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(sep)
}

fn jsonl<T: Serialize>(out: &mut impl Write, rec: &T) -> Result<()> {
    serde_json::to_writer(&mut *out, rec)?;
    writeln!(out)?;
    Ok(())
}

pub fn triangle(out: &mut impl Write, fmt: Format, t: &Triangle) -> Result<()> {
    match fmt {
        Format::Text => write!(out, "{}", t.to_aligned_text())?,
        Format::Csv => write!(out, "{}", t.to_csv())?,
        Format::Jsonl => {
            for rec in t.to_records() {
                jsonl(out, &rec)?;
            }
        }
    }
    Ok(())
}

/// Series coefficients; `label` prefixes the text form (`A = 1 2 1`).
pub fn series(
    out: &mut impl Write,
    fmt: Format,
    label: Option<&str>,
    coeffs: &[Rational],
) -> Result<()> {
    match fmt {
        Format::Text => match label {
            Some(l) => writeln!(out, "{l} = {}", joined(coeffs, " "))?,
            None => writeln!(out, "{}", joined(coeffs, " "))?,
        },
        Format::Csv => writeln!(out, "{}", joined(coeffs, ","))?,
        Format::Jsonl => jsonl(
            out,
            &SeriesRecord {
                prec: coeffs.len(),
                coeffs: coeffs.to_vec(),
            },
        )?,
    }
    Ok(())
}

pub fn claim(out: &mut impl Write, fmt: Format, c: &ClaimRecord) -> Result<()> {
    let verdict = if c.holds { "holds" } else { "FAILS" };
    match fmt {
        Format::Text => {
            writeln!(out, "A = {}", joined(&c.a, " "))?;
            writeln!(out, "base A^{} = {}", c.p, joined(&c.expected, " "))?;
            writeln!(out, "A-sequence is base A^{}: {verdict}", c.p)?;
        }
        Format::Csv => {
            writeln!(out, "a,{}", joined(&c.a, ","))?;
            writeln!(out, "expected,{}", joined(&c.expected, ","))?;
            writeln!(out, "holds,{}", c.holds)?;
        }
        Format::Jsonl => jsonl(out, c)?,
    }
    Ok(())
}

pub fn reports(out: &mut impl Write, fmt: Format, reports: &[IdentityReport]) -> Result<()> {
    match fmt {
        Format::Text => {
            for r in reports {
                writeln!(out, "{r}")?;
            }
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(["id", "verdict", "points", "grid", "params", "lhs", "rhs"])?;
            for r in reports {
                let verdict = if r.is_holds() {
                    "holds"
                } else {
                    "counterexample"
                };
                let (params, lhs, rhs) = match &r.counterexample {
                    None => (String::new(), String::new(), String::new()),
                    Some(c) => (
                        c.params
                            .iter()
                            .map(|p| format!("{}={}", p.name, p.value))
                            .collect::<Vec<_>>()
                            .join(" "),
                        c.lhs.to_string(),
                        c.rhs.to_string(),
                    ),
                };
                w.write_record([
                    &r.id,
                    verdict,
                    &r.points.to_string(),
                    &r.grid,
                    &params,
                    &lhs,
                    &rhs,
                ])?;
            }
            w.flush()?;
        }
        Format::Jsonl => {
            for r in reports {
                jsonl(out, r)?;
            }
        }
    }
    Ok(())
}

pub fn listing(out: &mut impl Write, fmt: Format, specs: &[IdentitySpec]) -> Result<()> {
    match fmt {
        Format::Text => {
            let width = specs.iter().map(|s| s.id.len()).max().unwrap_or(0);
            for s in specs {
                writeln!(out, "{:width$}  {}", s.id, s.formula)?;
                writeln!(out, "{:width$}  params: {}", "", s.param_names().join(", "))?;
                writeln!(out, "{:width$}  default grid: {}", "", s.default_grid())?;
            }
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(["id", "formula", "params", "constraint", "default_grid"])?;
            for s in specs {
                let rec = ListRecord::from(s);
                w.write_record([
                    &rec.id,
                    &rec.formula,
                    &rec.params.join(" "),
                    &rec.constraint,
                    &rec.default_grid,
                ])?;
            }
            w.flush()?;
        }
        Format::Jsonl => {
            for s in specs {
                jsonl(out, &ListRecord::from(s))?;
            }
        }
    }
    Ok(())
}
