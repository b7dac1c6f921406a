use std::fs;
use std::io::{self, BufWriter, Read, Write};
use std::path::Path;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use riordan::hypergeom::HypergeometricSpec;
use riordan::identities::{lookup, registry, Grid};
use riordan::rational::{parse_rational, parse_rational_list};
use riordan::{
    a_sequence, BuiltinArray, Error, FormalPowerSeries, IdentityReport, RiordanArray, RowRecord,
    Triangle,
};

use crate::render::{self, ClaimRecord};
use crate::{CheckArgs, Cli, Command, Format, TriangleSpec};

/// 1 for a failed mathematical claim, 2 for everything else.
pub fn exit_status(e: &anyhow::Error) -> u8 {
    match e.downcast_ref::<Error>() {
        Some(Error::TheoremViolation(_)) => 1,
        _ => 2,
    }
}

pub fn run(cli: &Cli) -> Result<ExitCode> {
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let code = match &cli.command {
        Command::Triangle { spec, rows } => {
            if *rows == 0 {
                bail!("--rows must be at least 1");
            }
            let array = build_array(spec, precision(cli, *rows)?)?;
            render::triangle(&mut out, cli.format, &array.materialize(*rows)?)?;
            ExitCode::SUCCESS
        }
        Command::Extract {
            spec,
            p,
            r,
            rows,
            aseq,
            terms,
        } => extract(&mut out, cli, spec, *p, *r, *rows, *aseq, *terms)?,
        Command::Aseq { spec, input, terms } => {
            if *terms == 0 {
                bail!("--terms must be at least 1");
            }
            let tri = match input {
                Some(path) => read_triangle(path)?,
                None => build_array(spec, precision(cli, terms + 1)?)?.materialize(terms + 1)?,
            };
            let a = a_sequence(&tri)?;
            let n = a.len().min(*terms);
            render::series(&mut out, cli.format, Some("A"), &a.coeffs()[..n])?;
            ExitCode::SUCCESS
        }
        Command::Check(args) => check(&mut out, cli.format, args)?,
        Command::Hyper {
            upper,
            lower,
            scale,
            terms,
        } => {
            let spec = HypergeometricSpec::new(
                parse_rational_list(upper)?,
                parse_rational_list(lower)?,
                parse_rational(scale)?,
            )?;
            let n = terms.or(cli.precision).unwrap_or(10);
            if n == 0 {
                bail!("--terms must be at least 1");
            }
            render::series(&mut out, cli.format, None, spec.expand(n)?.coeffs())?;
            ExitCode::SUCCESS
        }
    };
    out.flush()?;
    Ok(code)
}

/// `--precision` if given and sufficient, otherwise `needed`.
fn precision(cli: &Cli, needed: usize) -> Result<usize> {
    match cli.precision {
        None => Ok(needed),
        Some(p) if p >= needed => Ok(p),
        Some(p) => Err(Error::PrecisionShortfall {
            needed,
            available: p,
        }
        .into()),
    }
}

fn build_array(spec: &TriangleSpec, precision: usize) -> Result<RiordanArray> {
    match (&spec.builtin, &spec.d, &spec.a) {
        (Some(name), _, _) => Ok(name.parse::<BuiltinArray>()?.array(precision)?),
        (None, Some(d), Some(a)) => {
            let d = parse_rational_list(d)?;
            let a = parse_rational_list(a)?;
            if d.is_empty() || a.is_empty() {
                bail!("--d and --a need at least one coefficient");
            }
            let d = FormalPowerSeries::polynomial(&d, precision.max(d.len()))?;
            let a = FormalPowerSeries::polynomial(&a, precision.max(a.len()))?;
            Ok(RiordanArray::from_d_a(
                d.truncate(precision)?,
                &a.truncate(precision)?,
            )?)
        }
        _ => bail!("give a builtin array name (pascal, catalan42, ballot43) or both --d and --a"),
    }
}

fn read_triangle(path: &Path) -> Result<Triangle> {
    let mut text = String::new();
    if path.as_os_str() == "-" {
        io::stdin().read_to_string(&mut text)?;
    } else {
        text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    }
    if text.trim_start().starts_with('{') {
        let records = text
            .lines()
            .filter(|l| !l.trim().is_empty())
            .map(serde_json::from_str::<RowRecord>)
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Triangle::from_records(records)?)
    } else {
        Ok(Triangle::from_text(&text)?)
    }
}

#[allow(clippy::too_many_arguments)]
fn extract(
    out: &mut impl Write,
    cli: &Cli,
    spec: &TriangleSpec,
    p: usize,
    r: usize,
    rows: Option<usize>,
    aseq: bool,
    terms: usize,
) -> Result<ExitCode> {
    if p < 2 {
        bail!("--p must be at least 2");
    }
    if rows == Some(0) || (aseq && terms == 0) {
        bail!("--rows and --terms must be at least 1");
    }
    let shown = rows.unwrap_or(if aseq { 0 } else { 6 });
    let needed_rows = shown.max(if aseq { terms + 1 } else { 0 });
    let base = build_array(spec, precision(cli, p * needed_rows + r + 1)?)?;
    let sub = base.extract_subarray(p, r)?;
    if shown > 0 {
        render::triangle(out, cli.format, &sub.materialize(shown)?)?;
    }
    if !aseq {
        return Ok(ExitCode::SUCCESS);
    }
    let a = sub.a_series(terms)?.into_series().into_coeffs();
    let expected = base
        .a_series(terms)?
        .series()
        .pow_int(p as i64)?
        .into_coeffs();
    let holds = a == expected;
    render::claim(
        out,
        cli.format,
        &ClaimRecord {
            p,
            r,
            a,
            expected,
            holds,
        },
    )?;
    Ok(if holds {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn int_list(name: &str, s: &Option<String>) -> Result<Option<Vec<i64>>> {
    let Some(s) = s else { return Ok(None) };
    let vals = s
        .split(',')
        .map(|v| {
            v.trim()
                .parse::<i64>()
                .map_err(|e| anyhow!("--{name}: `{v}`: {e}"))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Some(vals))
}

fn grid(args: &CheckArgs) -> Result<Grid> {
    let mut g = Grid::with_max_n(args.max_n);
    g.p = int_list("p", &args.p)?;
    if let Some(r) = int_list("r", &args.r)? {
        g.r = r;
    }
    g.k = int_list("k", &args.k)?;
    g.s = int_list("s", &args.s)?;
    for (vals, slot) in [
        (&args.x, &mut g.x),
        (&args.y, &mut g.y),
        (&args.z, &mut g.z),
    ] {
        if let Some(v) = vals {
            *slot = parse_rational_list(v)?;
        }
    }
    Ok(g)
}

fn check(out: &mut impl Write, fmt: Format, args: &CheckArgs) -> Result<ExitCode> {
    if args.list {
        render::listing(out, fmt, registry())?;
        return Ok(ExitCode::SUCCESS);
    }
    let grid = grid(args)?;
    let specs = match &args.id {
        Some(id) => vec![lookup(id)?],
        None => registry().iter().collect(),
    };
    let reports = specs
        .iter()
        .map(|s| s.check(&grid))
        .collect::<Result<Vec<IdentityReport>, _>>()?;
    render::reports(out, fmt, &reports)?;
    Ok(if reports.iter().all(IdentityReport::is_holds) {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn failed_claims_exit_1_and_errors_exit_2() {
        assert_eq!(exit_status(&Error::TheoremViolation("x".into()).into()), 1);
        assert_eq!(exit_status(&Error::UnknownIdentity("x".into()).into()), 2);
        assert_eq!(exit_status(&anyhow!("io")), 2);
    }
}
