//! Registry of checkable identities.
//!
//! Every entry evaluates both sides exactly at each point of a finite
//! parameter grid. Points are enumerated in a fixed lexicographic order over
//! the entry's axes and evaluated in parallel; the reported counterexample is
//! always the first failing point in that order.

pub mod andrews;
pub mod convolutions;
pub mod product_laws;

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::rational::{int, ratio, Rational};
use crate::report::{Counterexample, IdentityReport, Param};
use crate::series::FormalPowerSeries;

pub use andrews::{check_andrews, check_via_riordan, AndrewsVariant};
pub use product_laws::{check_product_laws, series_a, series_c, series_c_d, series_d};

/// `F_n` with `F_0 = 0`, `F_1 = 1`.
pub fn fibonacci(n: u64) -> BigInt {
    let (mut a, mut b) = (BigInt::zero(), BigInt::one());
    for _ in 0..n {
        let next = &a + &b;
        a = std::mem::replace(&mut b, next);
    }
    a
}

/// One coordinate of an identity's parameter space.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    P,
    R,
    N,
    K,
    S,
    X,
    Y,
    Z,
}

impl Axis {
    pub fn is_index(self) -> bool {
        matches!(self, Axis::N | Axis::K | Axis::S)
    }

    pub fn name(self) -> &'static str {
        match self {
            Axis::P => "p",
            Axis::R => "r",
            Axis::N => "n",
            Axis::K => "k",
            Axis::S => "s",
            Axis::X => "x",
            Axis::Y => "y",
            Axis::Z => "z",
        }
    }

    pub fn is_rational(self) -> bool {
        matches!(self, Axis::X | Axis::Y | Axis::Z)
    }
}

/// A parameter point. Only the fields named by the identity's axes are
/// meaningful.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Point {
    pub p: i64,
    pub r: i64,
    pub n: i64,
    pub k: i64,
    pub s: i64,
    pub x: Rational,
    pub y: Rational,
    pub z: Rational,
}

impl Default for Point {
    fn default() -> Self {
        Self {
            p: 0,
            r: 0,
            n: 0,
            k: 0,
            s: 0,
            x: Rational::zero(),
            y: Rational::zero(),
            z: Rational::zero(),
        }
    }
}

impl Point {
    fn value(&self, axis: Axis) -> Rational {
        match axis {
            Axis::P => int(self.p),
            Axis::R => int(self.r),
            Axis::N => int(self.n),
            Axis::K => int(self.k),
            Axis::S => int(self.s),
            Axis::X => self.x.clone(),
            Axis::Y => self.y.clone(),
            Axis::Z => self.z.clone(),
        }
    }

    fn set_int(&mut self, axis: Axis, v: i64) {
        match axis {
            Axis::P => self.p = v,
            Axis::R => self.r = v,
            Axis::N => self.n = v,
            Axis::K => self.k = v,
            Axis::S => self.s = v,
            _ => unreachable!("integer axis expected"),
        }
    }

    fn set_rational(&mut self, axis: Axis, v: Rational) {
        match axis {
            Axis::X => self.x = v,
            Axis::Y => self.y = v,
            Axis::Z => self.z = v,
            _ => unreachable!("rational axis expected"),
        }
    }

    pub fn params(&self, axes: &[Axis]) -> Vec<Param> {
        axes.iter()
            .map(|&a| Param::new(a.name(), self.value(a)))
            .collect()
    }
}

/// Evaluates both sides at a point of one block.
pub type Prepared = Box<dyn Fn(&Point) -> Result<(Rational, Rational)> + Send + Sync>;
/// Builds the evaluator for the block of points sharing the outer (non-index)
/// coordinates of the given point, for indices up to `max_n`.
pub type PrepareFn = fn(&Point, usize) -> Result<Prepared>;
pub type SeriesFn = fn(&Point, usize) -> Result<(FormalPowerSeries, FormalPowerSeries)>;

pub enum Evaluator {
    /// Both sides as exact numbers at a point.
    Pointwise(PrepareFn),
    /// Both sides as series in `t`; coefficient `n` plays the role of the
    /// index axis, so `max_n + 1` coefficients are compared per point.
    Series(SeriesFn),
    /// A self-contained check driven by `max_n` alone.
    Whole(fn(usize) -> Result<IdentityReport>),
}

pub struct IdentitySpec {
    pub id: &'static str,
    pub formula: &'static str,
    /// Grid axes in enumeration order (outermost first).
    pub axes: &'static [Axis],
    /// Constraints on the axes beyond their listed values.
    pub constraint: &'static str,
    pub p_min: i64,
    pub n_min: i64,
    pub default_p: &'static [i64],
    valid: fn(&Point) -> bool,
    evaluator: Evaluator,
}

impl fmt::Debug for IdentitySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("IdentitySpec")
            .field("id", &self.id)
            .field("formula", &self.formula)
            .field("axes", &self.axes)
            .finish_non_exhaustive()
    }
}

/// Axis values to sweep. `None` means the entry's own default.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Grid {
    pub max_n: usize,
    pub p: Option<Vec<i64>>,
    pub r: Vec<i64>,
    pub k: Option<Vec<i64>>,
    pub s: Option<Vec<i64>>,
    pub x: Vec<Rational>,
    pub y: Vec<Rational>,
    pub z: Vec<Rational>,
}

/// `{1/2, 1, 3/2, 2, 3/7}`.
pub fn rational_grid() -> Vec<Rational> {
    vec![ratio(1, 2), int(1), ratio(3, 2), int(2), ratio(3, 7)]
}

impl Default for Grid {
    fn default() -> Self {
        Self {
            max_n: 20,
            p: None,
            r: vec![0, 1, 2],
            k: None,
            s: None,
            x: rational_grid(),
            y: rational_grid(),
            z: vec![ratio(1, 2), int(2), int(3), int(4)],
        }
    }
}

impl Grid {
    pub fn with_max_n(max_n: usize) -> Self {
        Self {
            max_n,
            ..Self::default()
        }
    }

    fn ints(&self, spec: &IdentitySpec, axis: Axis) -> Vec<i64> {
        let all = |lo: i64| (lo..=self.max_n as i64).collect::<Vec<_>>();
        match axis {
            Axis::P => self.p.clone().unwrap_or_else(|| spec.default_p.to_vec()),
            Axis::R => self.r.clone(),
            Axis::N => all(spec.n_min),
            Axis::K => self.k.clone().unwrap_or_else(|| all(0)),
            Axis::S => self.s.clone().unwrap_or_else(|| all(0)),
            _ => unreachable!(),
        }
    }

    fn rationals(&self, axis: Axis) -> &[Rational] {
        match axis {
            Axis::X => &self.x,
            Axis::Y => &self.y,
            Axis::Z => &self.z,
            _ => unreachable!(),
        }
    }

    fn describe(&self, spec: &IdentitySpec) -> String {
        let mut parts = Vec::new();
        for &axis in spec.axes {
            let part = match axis {
                Axis::N if matches!(spec.evaluator, Evaluator::Series(_)) => continue,
                Axis::N => format!("{} <= n <= {}", spec.n_min, self.max_n),
                Axis::K if self.k.is_none() => continue,
                Axis::S if self.s.is_none() => continue,
                a if a.is_rational() => format!("{} in {{{}}}", a.name(), join(self.rationals(a))),
                a => format!("{} in {{{}}}", a.name(), join(&self.ints(spec, a))),
            };
            parts.push(part);
        }
        if matches!(spec.evaluator, Evaluator::Series(_)) {
            parts.push(format!("coefficients 0..={}", self.max_n));
        }
        if !spec.constraint.is_empty() {
            parts.push(spec.constraint.to_string());
        }
        parts.join("; ")
    }
}

fn join<T: fmt::Display>(xs: &[T]) -> String {
    xs.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

impl IdentitySpec {
    pub fn param_names(&self) -> Vec<&'static str> {
        self.axes.iter().map(|a| a.name()).collect()
    }

    /// Default grid description, as used by `check` with no overrides.
    pub fn default_grid(&self) -> String {
        match self.evaluator {
            Evaluator::Whole(_) => format!("n <= {}", Grid::default().max_n),
            _ => Grid::default().describe(self),
        }
    }

    /// Grid points in enumeration order, restricted to the validity region.
    pub fn points(&self, grid: &Grid) -> Result<Vec<Point>> {
        if let Some(ps) = &grid.p {
            if self.axes.contains(&Axis::P) {
                if let Some(bad) = ps.iter().find(|&&p| p < self.p_min) {
                    return Err(Error::InvalidParameter(format!(
                        "{} needs p >= {}, got {bad}",
                        self.id, self.p_min
                    )));
                }
            }
        }
        if self.axes.contains(&Axis::R) {
            if let Some(bad) = grid.r.iter().find(|&&r| r < 0) {
                return Err(Error::InvalidParameter(format!(
                    "{} needs r >= 0, got {bad}",
                    self.id
                )));
            }
        }
        let mut out = vec![Point::default()];
        let series = matches!(self.evaluator, Evaluator::Series(_));
        for &axis in self.axes {
            if series && axis == Axis::N {
                continue;
            }
            let mut next = Vec::new();
            for pt in &out {
                if axis.is_rational() {
                    for v in grid.rationals(axis) {
                        let mut q = pt.clone();
                        q.set_rational(axis, v.clone());
                        next.push(q);
                    }
                } else {
                    for v in grid.ints(self, axis) {
                        let mut q = pt.clone();
                        q.set_int(axis, v);
                        next.push(q);
                    }
                }
            }
            out = next;
        }
        out.retain(|pt| (self.valid)(pt));
        if out.is_empty() {
            let why = match self.constraint {
                "" => String::new(),
                c => format!(" ({c})"),
            };
            return Err(Error::InvalidParameter(format!(
                "grid has no valid points for {}{why}",
                self.id
            )));
        }
        Ok(out)
    }

    pub fn check(&self, grid: &Grid) -> Result<IdentityReport> {
        let desc = grid.describe(self);
        match self.evaluator {
            Evaluator::Whole(f) => f(grid.max_n),
            Evaluator::Pointwise(prepare) => {
                let points = self.points(grid)?;
                let outer: Vec<Axis> = self
                    .axes
                    .iter()
                    .copied()
                    .filter(|a| !a.is_index())
                    .collect();
                let mut blocks: Vec<&[Point]> = Vec::new();
                let mut start = 0;
                for i in 1..=points.len() {
                    if i == points.len() || points[i].params(&outer) != points[start].params(&outer)
                    {
                        blocks.push(&points[start..i]);
                        start = i;
                    }
                }
                let values: Vec<Vec<Result<(Rational, Rational)>>> = blocks
                    .par_iter()
                    .map(|block| match prepare(&block[0], grid.max_n) {
                        Ok(eval) => block.iter().map(&eval).collect(),
                        Err(e) => vec![Err(e)],
                    })
                    .collect();
                for (i, (pt, v)) in points.iter().zip(values.into_iter().flatten()).enumerate() {
                    let (lhs, rhs) = v?;
                    if lhs != rhs {
                        let ce = Counterexample {
                            params: pt.params(self.axes),
                            lhs,
                            rhs,
                        };
                        return Ok(IdentityReport::failed(self.id, desc, i + 1, ce));
                    }
                }
                Ok(IdentityReport::holds(self.id, desc, points.len()))
            }
            Evaluator::Series(f) => {
                let points = self.points(grid)?;
                let terms = grid.max_n + 1;
                let axes: Vec<Axis> = self
                    .axes
                    .iter()
                    .copied()
                    .filter(|&a| a != Axis::N)
                    .collect();
                let values: Vec<_> = points.par_iter().map(|pt| f(pt, terms)).collect();
                let mut count = 0;
                for (pt, v) in points.iter().zip(values) {
                    let (lhs, rhs) = v?;
                    let rep =
                        IdentityReport::from_series(self.id, "", &pt.params(&axes), &lhs, &rhs);
                    count += rep.points;
                    if let Some(ce) = rep.counterexample {
                        return Ok(IdentityReport::failed(self.id, desc, count, ce));
                    }
                }
                Ok(IdentityReport::holds(self.id, desc, count))
            }
        }
    }
}

/// Folds several reports into one under `id`. Points add up; the first
/// failing report supplies the counterexample and its grid label.
pub(crate) fn merge_reports(
    id: &str,
    grid: String,
    reports: impl IntoIterator<Item = Result<IdentityReport>>,
) -> Result<IdentityReport> {
    let mut points = 0;
    for rep in reports {
        let rep = rep?;
        points += rep.points;
        if let Some(ce) = rep.counterexample {
            return Ok(IdentityReport::failed(
                id,
                format!("{}: {}", rep.id, rep.grid),
                points,
                ce,
            ));
        }
    }
    Ok(IdentityReport::holds(id, grid, points))
}

fn index_ok(pt: &Point) -> bool {
    1 <= pt.s && pt.s <= pt.k && pt.k <= pt.n
}

fn any(_: &Point) -> bool {
    true
}

macro_rules! andrews_entry {
    ($v:expr) => {
        IdentitySpec {
            id: $v.id(),
            formula: $v.formula(),
            axes: &[Axis::N],
            constraint: "",
            p_min: 0,
            n_min: $v.n_min(),
            default_p: &[],
            valid: any,
            evaluator: Evaluator::Pointwise(|_, _| {
                Ok(Box::new(|pt: &Point| Ok($v.sides(pt.n as u64))))
            }),
        }
    };
}

use convolutions as cv;
use product_laws as pl;

static REGISTRY: &[IdentitySpec] = &[
    andrews_entry!(AndrewsVariant::A1),
    andrews_entry!(AndrewsVariant::A2),
    andrews_entry!(AndrewsVariant::A3),
    andrews_entry!(AndrewsVariant::A121),
    andrews_entry!(AndrewsVariant::A5),
    andrews_entry!(AndrewsVariant::A6),
    andrews_entry!(AndrewsVariant::A122),
    IdentitySpec {
        id: "andrews-riordan",
        formula: "d(t) f(t h(t)) = t/(1-3t+t^2) for the even rows of Pascal's triangle, (1-t)/(1-3t+t^2) for the odd rows",
        axes: &[Axis::N],
        constraint: "",
        p_min: 0,
        n_min: 0,
        default_p: &[],
        valid: any,
        evaluator: Evaluator::Whole(check_via_riordan),
    },
    IdentitySpec {
        id: "column-convolution",
        formula: "sum_{j=s}^{n} binom(n-j, k-s) binom(j-1, s-1) = binom(n, k)",
        axes: &[Axis::N, Axis::K, Axis::S],
        constraint: "1 <= s <= k <= n",
        p_min: 0,
        n_min: 1,
        default_p: &[],
        valid: index_ok,
        evaluator: Evaluator::Pointwise(|_, _| Ok(Box::new(|pt: &Point| Ok(cv::column_convolution(pt.n, pt.k, pt.s))))),
    },
    IdentitySpec {
        id: "pascal-extraction",
        formula: "sum_{j=s}^{n} ps/((p-1)j+s) binom(pj-1, j-s) binom(p(n-j)+r, n-j-k+s) = binom(pn+r, n-k)",
        axes: &[Axis::P, Axis::R, Axis::N, Axis::K, Axis::S],
        constraint: "1 <= s <= k <= n",
        p_min: 2,
        n_min: 1,
        default_p: &[2, 3, 4],
        valid: index_ok,
        evaluator: Evaluator::Pointwise(cv::prepare_pascal_extraction),
    },
    IdentitySpec {
        id: "pascal-extraction-catalan",
        formula: "sum_{j=0}^{n} 1/(pj+1) binom(pj+1, j) binom(p(n-j)+r, n-j-k+1) = binom(pn+r+1, n-k+1)",
        axes: &[Axis::P, Axis::R, Axis::N, Axis::K],
        constraint: "1 <= k <= n",
        p_min: 2,
        n_min: 1,
        default_p: &[2, 3, 4],
        valid: |pt| 1 <= pt.k && pt.k <= pt.n,
        evaluator: Evaluator::Pointwise(cv::prepare_pascal_extraction_catalan),
    },
    IdentitySpec {
        id: "generalized-vandermonde",
        formula: "sum_{i=0}^{n} x/(x+pi) binom(x+pi, i) binom(y+p(n-i), n-i) = binom(x+y+pn, n)",
        axes: &[Axis::P, Axis::X, Axis::Y, Axis::N],
        constraint: "",
        p_min: 1,
        n_min: 0,
        default_p: &[2, 3, 4],
        valid: any,
        evaluator: Evaluator::Pointwise(cv::prepare_generalized_vandermonde),
    },
    IdentitySpec {
        id: "catalan-extraction",
        formula: "sum_{j=s}^{n} 2ps/((2p-1)j+s) binom(2pj-1, j-s) ((p-1)(n-j)+r+k-s+1)/(p(n-j)+r+1) binom(2(p(n-j)+r+1), n-j-k+s) = ((p-1)n+r+k+1)/(pn+r+1) binom(2(pn+r+1), n-k)",
        axes: &[Axis::P, Axis::R, Axis::N, Axis::K, Axis::S],
        constraint: "1 <= s <= k <= n",
        p_min: 1,
        n_min: 1,
        default_p: &[1, 2, 3, 4],
        valid: index_ok,
        evaluator: Evaluator::Pointwise(cv::prepare_catalan_extraction),
    },
    IdentitySpec {
        id: "ballot-extraction",
        formula: "sum_{j=s}^{n-k+s} ps/((p+1)j-s) binom((p+1)j-s, j-s) ((p-1)(n-j)+k-s+r+1)/(p(n-j)+r+1) binom((p+1)(n-j)+r-k+s, p(n-j)+r) = ((p-1)n+k+r+1)/(pn+r+1) binom((p+1)n+r-k, pn+r)",
        axes: &[Axis::P, Axis::R, Axis::N, Axis::K, Axis::S],
        constraint: "1 <= s <= k <= n",
        p_min: 2,
        n_min: 1,
        default_p: &[2, 3, 4],
        valid: index_ok,
        evaluator: Evaluator::Pointwise(cv::prepare_ballot_extraction),
    },
    IdentitySpec {
        id: "ballot-rational",
        formula: "sum_{i=0}^{n} x/((p+1)i+x) binom((p+1)i+x, i) ((p-1)(n-i)+y+1)/(p(n-i)+y+1) binom((p+1)(n-i)+y, n-i) = ((p-1)n+x+y+1)/(pn+x+y+1) binom((p+1)n+x+y, n)",
        axes: &[Axis::P, Axis::X, Axis::Y, Axis::N],
        constraint: "",
        p_min: 1,
        n_min: 0,
        default_p: &[2, 3, 4],
        valid: any,
        evaluator: Evaluator::Pointwise(cv::prepare_ballot_rational),
    },
    IdentitySpec {
        id: "rothe-hagen",
        formula: "sum_{i=0}^{n} x/(zi+x) binom(zi+x, i) y/(z(n-i)+y) binom(z(n-i)+y, n-i) = (x+y)/(zn+x+y) binom(zn+x+y, n)",
        axes: &[Axis::Z, Axis::X, Axis::Y, Axis::N],
        constraint: "",
        p_min: 0,
        n_min: 0,
        default_p: &[],
        valid: any,
        evaluator: Evaluator::Pointwise(cv::prepare_rothe_hagen),
    },
    IdentitySpec {
        id: "catalan-rational",
        formula: "sum_{i=0}^{n} 2x/((2p-1)i+2x) binom(2pi+2x-1, i) ((p-1)(n-i)+y+1)/(p(n-i)+y+1) binom(2(p(n-i)+y+1), n-i) = ((p-1)n+x+y+1)/(pn+x+y+1) binom(2(pn+x+y+1), n)",
        axes: &[Axis::P, Axis::X, Axis::Y, Axis::N],
        constraint: "",
        p_min: 1,
        n_min: 0,
        default_p: &[2, 3, 4],
        valid: any,
        evaluator: Evaluator::Pointwise(cv::prepare_catalan_rational),
    },
    IdentitySpec {
        id: "product-law-a",
        formula: "B_{p+1}(t)^x A(p,y;t) = A(p,x+y;t)",
        axes: &[Axis::P, Axis::X, Axis::Y, Axis::N],
        constraint: "",
        p_min: 2,
        n_min: 0,
        default_p: &[2, 3],
        valid: any,
        evaluator: Evaluator::Series(|pt, n| pl::product_law_a(pt.p, &pt.x, &pt.y, n)),
    },
    IdentitySpec {
        id: "product-law-cd",
        formula: "C(p,x;t) D(p,y;t) = D(p,x+y;t)",
        axes: &[Axis::P, Axis::X, Axis::Y, Axis::N],
        constraint: "",
        p_min: 2,
        n_min: 0,
        default_p: &[2, 3],
        valid: any,
        evaluator: Evaluator::Series(|pt, n| pl::product_law_cd(pt.p, &pt.x, &pt.y, n)),
    },
    IdentitySpec {
        id: "hypergeometric-product-a",
        formula: "(p+1)F(p)[(x+i)/(p+1); (x+i)/p] * (p+2)F(p+1)[..y..] = (p+2)F(p+1)[..x+y..] at (p+1)^(p+1) t/p^p",
        axes: &[Axis::P, Axis::X, Axis::Y, Axis::N],
        constraint: "",
        p_min: 2,
        n_min: 0,
        default_p: &[2, 3],
        valid: any,
        evaluator: Evaluator::Series(|pt, n| pl::hypergeometric_product_a(pt.p, &pt.x, &pt.y, n)),
    },
    IdentitySpec {
        id: "hypergeometric-product-cd",
        formula: "(2p)F(2p-1)[(2x+i)/(2p); (2x+i)/(2p-1)] * (2p+2)F(2p+1)[..y..] = (2p+2)F(2p+1)[..x+y..] at (2p)^(2p) t/(2p-1)^(2p-1)",
        axes: &[Axis::P, Axis::X, Axis::Y, Axis::N],
        constraint: "",
        p_min: 2,
        n_min: 0,
        default_p: &[2, 3],
        valid: any,
        evaluator: Evaluator::Series(|pt, n| pl::hypergeometric_product_cd(pt.p, &pt.x, &pt.y, n)),
    },
];

/// All registered identities, in listing order.
pub fn registry() -> &'static [IdentitySpec] {
    REGISTRY
}

pub fn lookup(id: &str) -> Result<&'static IdentitySpec> {
    REGISTRY
        .iter()
        .find(|s| s.id == id)
        .ok_or_else(|| Error::UnknownIdentity(id.to_string()))
}

pub fn check_registry(id: &str, grid: &Grid) -> Result<IdentityReport> {
    lookup(id)?.check(grid)
}
