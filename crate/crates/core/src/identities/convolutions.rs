//! Pointwise evaluation of the convolution identities. Each function returns
//! `(lhs, rhs)` computed literally from the summation formula; nothing here
//! goes through series arithmetic.
//!
//! The `prepare_*` variants evaluate the same sums for the registry from
//! tables of summand factors built once per block of outer parameters.

use num_bigint::BigInt;
use num_traits::Zero;

use super::{Point, Prepared};
use crate::error::{Error, Result};
use crate::hypergeom::binomial_series_coeff;
use crate::rational::{binomial, binomial_rational, int, ratio, Rational};
use crate::series::dot;

fn b(n: i64, m: i64) -> Rational {
    Rational::from_integer(binomial(n, m))
}

fn frac(num: &Rational, den: &Rational, what: &str) -> Result<Rational> {
    if den.is_zero() {
        return Err(Error::Pole(format!("{what} has a vanishing denominator")));
    }
    Ok(num / den)
}

/// `sum_{j=s}^{n} binom(n-j, k-s) binom(j-1, s-1) = binom(n, k)`.
pub fn column_convolution(n: i64, k: i64, s: i64) -> (Rational, Rational) {
    let lhs = (s..=n).map(|j| b(n - j, k - s) * b(j - 1, s - 1)).sum();
    (lhs, b(n, k))
}

/// Pascal's triangle with `p - 1` rows dropped after each kept row:
/// `sum_{j=s}^{n} ps/((p-1)j+s) binom(pj-1, j-s) binom(p(n-j)+r, n-j-k+s)
///  = binom(pn+r, n-k)`.
pub fn pascal_extraction(p: i64, r: i64, n: i64, k: i64, s: i64) -> (Rational, Rational) {
    let lhs = (s..=n)
        .map(|j| {
            ratio(p * s, (p - 1) * j + s) * b(p * j - 1, j - s) * b(p * (n - j) + r, n - j - k + s)
        })
        .sum();
    (lhs, b(p * n + r, n - k))
}

/// The `s = 1` case shifted by one term:
/// `sum_{j=0}^{n} 1/(pj+1) binom(pj+1, j) binom(p(n-j)+r, n-j-k+1)
///  = binom(pn+r+1, n-k+1)`.
pub fn pascal_extraction_catalan(p: i64, r: i64, n: i64, k: i64) -> (Rational, Rational) {
    let lhs = (0..=n)
        .map(|j| ratio(1, p * j + 1) * b(p * j + 1, j) * b(p * (n - j) + r, n - j - k + 1))
        .sum();
    (lhs, b(p * n + r + 1, n - k + 1))
}

/// `sum_{i=0}^{n} x/(x+pi) binom(x+pi, i) binom(y+p(n-i), n-i)
///  = binom(x+y+pn, n)`. The `i = 0` weight is 1, including at `x = 0`.
pub fn generalized_vandermonde(
    p: i64,
    x: &Rational,
    y: &Rational,
    n: i64,
) -> Result<(Rational, Rational)> {
    let pr = int(p);
    let mut lhs = Rational::zero();
    for i in 0..=n {
        let w = binomial_series_coeff(&pr, x, i as usize)?;
        lhs += w * binomial_rational(&(y + int(p * (n - i))), n - i);
    }
    Ok((lhs, binomial_rational(&(x + y + int(p * n)), n)))
}

/// Entry `(n, k)` of the array cut from Shapiro's Catalan triangle:
/// `((p-1)n+r+k+1)/(pn+r+1) binom(2(pn+r+1), n-k)`.
fn catalan_cut(p: i64, r: i64, n: i64, k: i64) -> Rational {
    ratio((p - 1) * n + r + k + 1, p * n + r + 1) * b(2 * (p * n + r + 1), n - k)
}

/// `sum_{j=s}^{n} 2ps/((2p-1)j+s) binom(2pj-1, j-s) d~(n-j, k-s) = d~(n, k)`
/// where `d~` is [`catalan_cut`].
pub fn catalan_extraction(p: i64, r: i64, n: i64, k: i64, s: i64) -> (Rational, Rational) {
    let lhs = (s..=n)
        .map(|j| {
            ratio(2 * p * s, (2 * p - 1) * j + s)
                * b(2 * p * j - 1, j - s)
                * ratio((p - 1) * (n - j) + r + k - s + 1, p * (n - j) + r + 1)
                * b(2 * (p * (n - j) + r + 1), n - j - k + s)
        })
        .sum();
    (lhs, catalan_cut(p, r, n, k))
}

/// The ballot-variant triangle cut the same way:
/// `sum_{j=s}^{n-k+s} ps/((p+1)j-s) binom((p+1)j-s, j-s)
///    ((p-1)(n-j)+k-s+r+1)/(p(n-j)+r+1) binom((p+1)(n-j)+r-k+s, p(n-j)+r)
///  = ((p-1)n+k+r+1)/(pn+r+1) binom((p+1)n+r-k, pn+r)`.
pub fn ballot_extraction(p: i64, r: i64, n: i64, k: i64, s: i64) -> (Rational, Rational) {
    let lhs = (s..=n - k + s)
        .map(|j| {
            let m = n - j;
            ratio(p * s, (p + 1) * j - s)
                * b((p + 1) * j - s, j - s)
                * ratio((p - 1) * m + k - s + r + 1, p * m + r + 1)
                * b((p + 1) * m + r - k + s, p * m + r)
        })
        .sum();
    let rhs = ratio((p - 1) * n + k + r + 1, p * n + r + 1) * b((p + 1) * n + r - k, p * n + r);
    (lhs, rhs)
}

/// `((p-1)n+y+1)/(pn+y+1) binom((p+1)n+y, n)`.
fn ballot_weight(p: i64, y: &Rational, n: i64) -> Result<Rational> {
    let num = int((p - 1) * n) + y + int(1);
    let den = int(p * n) + y + int(1);
    Ok(frac(&num, &den, "ballot weight")? * binomial_rational(&(int((p + 1) * n) + y), n))
}

/// `sum_{i=0}^{n} x/((p+1)i+x) binom((p+1)i+x, i) w_y(n-i) = w_{x+y}(n)` with
/// `w_y(m) = ((p-1)m+y+1)/(pm+y+1) binom((p+1)m+y, m)`.
pub fn ballot_rational(p: i64, x: &Rational, y: &Rational, n: i64) -> Result<(Rational, Rational)> {
    let q = int(p + 1);
    let mut lhs = Rational::zero();
    for i in 0..=n {
        lhs += binomial_series_coeff(&q, x, i as usize)? * ballot_weight(p, y, n - i)?;
    }
    Ok((lhs, ballot_weight(p, &(x + y), n)?))
}

/// `x/(zi+x) binom(zi+x, i)`, with value 1 at `i = 0`.
fn rothe_weight(z: &Rational, x: &Rational, i: i64) -> Result<Rational> {
    if i == 0 {
        return Ok(int(1));
    }
    let top = z * int(i) + x;
    Ok(frac(x, &top, "Rothe-Hagen weight")? * binomial_rational(&top, i))
}

/// `sum_{i=0}^{n} x/(zi+x) binom(zi+x, i) y/(z(n-i)+y) binom(z(n-i)+y, n-i)
///  = (x+y)/(zn+x+y) binom(zn+x+y, n)`.
pub fn rothe_hagen(
    z: &Rational,
    x: &Rational,
    y: &Rational,
    n: i64,
) -> Result<(Rational, Rational)> {
    let mut lhs = Rational::zero();
    for i in 0..=n {
        lhs += rothe_weight(z, x, i)? * rothe_weight(z, y, n - i)?;
    }
    Ok((lhs, rothe_weight(z, &(x + y), n)?))
}

/// `2x/((2p-1)i+2x) binom(2pi+2x-1, i)`, with value 1 at `i = 0`.
fn catalan_power_weight(p: i64, x: &Rational, i: i64) -> Result<Rational> {
    if i == 0 {
        return Ok(int(1));
    }
    let two_x = int(2) * x;
    let den = int((2 * p - 1) * i) + &two_x;
    Ok(frac(&two_x, &den, "Catalan power weight")?
        * binomial_rational(&(int(2 * p * i) + &two_x - int(1)), i))
}

/// `((p-1)n+y+1)/(pn+y+1) binom(2(pn+y+1), n)`.
fn catalan_weight(p: i64, y: &Rational, n: i64) -> Result<Rational> {
    let num = int((p - 1) * n) + y + int(1);
    let den = int(p * n) + y + int(1);
    Ok(frac(&num, &den, "Catalan weight")? * binomial_rational(&(int(2) * &den), n))
}

/// `sum_{i=0}^{n} 2x/((2p-1)i+2x) binom(2pi+2x-1, i) v_y(n-i) = v_{x+y}(n)`
/// with `v_y(m) = ((p-1)m+y+1)/(pm+y+1) binom(2(pm+y+1), m)`.
pub fn catalan_rational(
    p: i64,
    x: &Rational,
    y: &Rational,
    n: i64,
) -> Result<(Rational, Rational)> {
    let mut lhs = Rational::zero();
    for i in 0..=n {
        lhs += catalan_power_weight(p, x, i)? * catalan_weight(p, y, n - i)?;
    }
    Ok((lhs, catalan_weight(p, &(x + y), n)?))
}

/// Summand factors indexed by two small integers. When every entry is an
/// integer, a `BigInt` copy is kept so sums can skip rational reduction.
struct Table {
    rat: Vec<Vec<Rational>>,
    int: Option<Vec<Vec<BigInt>>>,
}

impl Table {
    fn new(rat: Vec<Vec<Rational>>) -> Self {
        let integral = rat.iter().flatten().all(|v| v.is_integer());
        let int = integral.then(|| {
            rat.iter()
                .map(|row| row.iter().map(|v| v.to_integer()).collect())
                .collect()
        });
        Self { rat, int }
    }

    /// `t[s][j]` for `1 <= s <= j <= max_n`; other slots are zero.
    fn weights(max_n: i64, f: impl Fn(i64, i64) -> Rational) -> Self {
        Self::new(
            (0..=max_n)
                .map(|s| {
                    (0..=max_n)
                        .map(|j| {
                            if s >= 1 && j >= s {
                                f(s, j)
                            } else {
                                Rational::zero()
                            }
                        })
                        .collect()
                })
                .collect(),
        )
    }

    /// `t[m][i]` for `0 <= i <= m <= max_n`.
    fn triangle(max_n: i64, f: impl Fn(i64, i64) -> Rational) -> Self {
        Self::new(
            (0..=max_n)
                .map(|m| (0..=m).map(|i| f(m, i)).collect())
                .collect(),
        )
    }

    /// Entry `(m, i)`, zero outside `0 <= i <= m`.
    fn get(&self, m: i64, i: i64) -> Rational {
        if i < 0 || i > m {
            return Rational::zero();
        }
        self.rat[m as usize][i as usize].clone()
    }
}

/// `sum_{j=s}^{hi} w[s][j] * second[n-j][k-s]`, skipping terms whose second
/// index falls outside its row.
fn convolve(w: &Table, second: &Table, n: i64, k: i64, s: i64, hi: i64) -> Rational {
    let ks = k - s;
    let terms = (s..=hi)
        .filter(|&j| ks >= 0 && ks <= n - j)
        .map(|j| (j as usize, (n - j) as usize));
    if let (Some(wi), Some(si)) = (&w.int, &second.int) {
        let mut acc = BigInt::zero();
        for (j, m) in terms {
            acc += &wi[s as usize][j] * &si[m][ks as usize];
        }
        return Rational::from_integer(acc);
    }
    dot(terms.map(|(j, m)| (&w.rat[s as usize][j], &second.rat[m][ks as usize])))
}

pub(super) fn prepare_pascal_extraction(pt: &Point, max_n: usize) -> Result<Prepared> {
    let (p, r, max_n) = (pt.p, pt.r, max_n as i64);
    let w = Table::weights(max_n, |s, j| {
        ratio(p * s, (p - 1) * j + s) * b(p * j - 1, j - s)
    });
    // column kappa = k - s of row m is binom(pm + r, m - kappa)
    let g = Table::triangle(max_n, |m, kappa| b(p * m + r, m - kappa));
    Ok(Box::new(move |pt: &Point| {
        let (n, k, s) = (pt.n, pt.k, pt.s);
        let lhs = convolve(&w, &g, n, k, s, n);
        Ok((lhs, b(p * n + r, n - k)))
    }))
}

pub(super) fn prepare_pascal_extraction_catalan(pt: &Point, max_n: usize) -> Result<Prepared> {
    let (p, r, max_n) = (pt.p, pt.r, max_n as i64);
    let w: Vec<Rational> = (0..=max_n)
        .map(|j| ratio(1, p * j + 1) * b(p * j + 1, j))
        .collect();
    let g = Table::triangle(max_n, |m, i| b(p * m + r, i));
    Ok(Box::new(move |pt: &Point| {
        let (n, k) = (pt.n, pt.k);
        let lhs = (0..=n)
            .map(|j| &w[j as usize] * g.get(n - j, n - j - k + 1))
            .sum();
        Ok((lhs, b(p * n + r + 1, n - k + 1)))
    }))
}

pub(super) fn prepare_catalan_extraction(pt: &Point, max_n: usize) -> Result<Prepared> {
    let (p, r, max_n) = (pt.p, pt.r, max_n as i64);
    let w = Table::weights(max_n, |s, j| {
        ratio(2 * p * s, (2 * p - 1) * j + s) * b(2 * p * j - 1, j - s)
    });
    let cut = Table::triangle(max_n, |m, k| catalan_cut(p, r, m, k));
    Ok(Box::new(move |pt: &Point| {
        let (n, k, s) = (pt.n, pt.k, pt.s);
        let lhs = convolve(&w, &cut, n, k, s, n);
        Ok((lhs, cut.get(n, k)))
    }))
}

pub(super) fn prepare_ballot_extraction(pt: &Point, max_n: usize) -> Result<Prepared> {
    let (p, r, max_n) = (pt.p, pt.r, max_n as i64);
    let w = Table::weights(max_n, |s, j| {
        ratio(p * s, (p + 1) * j - s) * b((p + 1) * j - s, j - s)
    });
    let e = Table::triangle(max_n, |m, k| {
        ratio((p - 1) * m + k + r + 1, p * m + r + 1) * b((p + 1) * m + r - k, p * m + r)
    });
    Ok(Box::new(move |pt: &Point| {
        let (n, k, s) = (pt.n, pt.k, pt.s);
        let lhs = convolve(&w, &e, n, k, s, n - k + s);
        Ok((lhs, e.get(n, k)))
    }))
}

/// `sum_{i=0}^{n} a[i] b[n-i]` against `c[n]`, all tables indexed by `n`.
fn prepare_rational(a: Vec<Rational>, bt: Vec<Rational>, c: Vec<Rational>) -> Prepared {
    Box::new(move |pt: &Point| {
        let n = pt.n as usize;
        let lhs = (0..=n).map(|i| &a[i] * &bt[n - i]).sum();
        Ok((lhs, c[n].clone()))
    })
}

fn table(max_n: usize, f: impl Fn(i64) -> Result<Rational>) -> Result<Vec<Rational>> {
    (0..=max_n as i64).map(f).collect()
}

pub(super) fn prepare_generalized_vandermonde(pt: &Point, max_n: usize) -> Result<Prepared> {
    let (p, x, y) = (pt.p, &pt.x, &pt.y);
    let pr = int(p);
    Ok(prepare_rational(
        table(max_n, |i| binomial_series_coeff(&pr, x, i as usize))?,
        table(max_n, |m| Ok(binomial_rational(&(y + int(p * m)), m)))?,
        table(max_n, |n| Ok(binomial_rational(&(x + y + int(p * n)), n)))?,
    ))
}

pub(super) fn prepare_ballot_rational(pt: &Point, max_n: usize) -> Result<Prepared> {
    let (p, x, y) = (pt.p, &pt.x, &pt.y);
    let q = int(p + 1);
    Ok(prepare_rational(
        table(max_n, |i| binomial_series_coeff(&q, x, i as usize))?,
        table(max_n, |m| ballot_weight(p, y, m))?,
        table(max_n, |n| ballot_weight(p, &(x + y), n))?,
    ))
}

pub(super) fn prepare_rothe_hagen(pt: &Point, max_n: usize) -> Result<Prepared> {
    let (z, x, y) = (&pt.z, &pt.x, &pt.y);
    Ok(prepare_rational(
        table(max_n, |i| rothe_weight(z, x, i))?,
        table(max_n, |m| rothe_weight(z, y, m))?,
        table(max_n, |n| rothe_weight(z, &(x + y), n))?,
    ))
}

pub(super) fn prepare_catalan_rational(pt: &Point, max_n: usize) -> Result<Prepared> {
    let (p, x, y) = (pt.p, &pt.x, &pt.y);
    Ok(prepare_rational(
        table(max_n, |i| catalan_power_weight(p, x, i))?,
        table(max_n, |m| catalan_weight(p, y, m))?,
        table(max_n, |n| catalan_weight(p, &(x + y), n))?,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::identities::rational_grid;

    fn holds((l, r): (Rational, Rational)) -> bool {
        l == r
    }

    #[test]
    fn column_convolution_example() {
        // 4 + 3 + 2 + 1 + 0
        assert_eq!(column_convolution(5, 2, 1), (int(10), int(10)));
    }

    #[test]
    fn pascal_extraction_catalan_example() {
        // 6 + 2 + 2 = binom(5, 2)
        assert_eq!(pascal_extraction_catalan(2, 0, 2, 1), (int(10), int(10)));
    }

    #[test]
    fn catalan_cut_matches_triangle_closed_form() {
        // d~(n,k) = d(pn+r, (p-1)n+r+k) with d(n,k) = (k+1)/(n+1) binom(2n+2, n-k)
        let d = |n: i64, k: i64| ratio(k + 1, n + 1) * b(2 * n + 2, n - k);
        for p in 1..5 {
            for r in 0..3 {
                for n in 0..8 {
                    for k in 0..=n {
                        assert_eq!(catalan_cut(p, r, n, k), d(p * n + r, (p - 1) * n + r + k));
                    }
                }
            }
        }
    }

    #[test]
    fn reparametrization_matches_vandermonde_form() {
        // j = i + s, x = ps, y = pk - ps + r, n -> n + k
        for p in 2..5 {
            for r in 0..3 {
                for n in 0..8 {
                    for k in 1..5 {
                        for s in 1..=k {
                            let (l1, r1) = pascal_extraction(p, r, n + k, k, s);
                            let (l2, r2) =
                                generalized_vandermonde(p, &int(p * s), &int(p * k - p * s + r), n)
                                    .unwrap();
                            assert_eq!((&l1, &r1), (&l2, &r2), "p={p} r={r} n={n} k={k} s={s}");
                            assert_eq!(l1, r1);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn catalan_extraction_at_p_one() {
        for r in 0..3 {
            for n in 1..10 {
                for k in 1..=n {
                    for s in 1..=k {
                        assert!(
                            holds(catalan_extraction(1, r, n, k, s)),
                            "r={r} n={n} k={k} s={s}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn rational_grids() {
        let g = rational_grid();
        for p in 2..4 {
            for x in &g {
                for y in &g {
                    for n in 0..8 {
                        assert!(holds(ballot_rational(p, x, y, n).unwrap()));
                        assert!(holds(catalan_rational(p, x, y, n).unwrap()));
                        assert!(holds(generalized_vandermonde(p, x, y, n).unwrap()));
                        assert!(holds(rothe_hagen(&int(p), x, y, n).unwrap()));
                    }
                }
            }
        }
    }

    #[test]
    fn rothe_hagen_empty_convolution() {
        assert_eq!(
            rothe_hagen(&int(4), &int(2), &int(3), 0).unwrap(),
            (int(1), int(1))
        );
    }

    #[test]
    fn catalan_rational_with_y_only_in_rhs_fails() {
        // With x dropped from the right-hand binomial the identity breaks
        // already at p = 1, n = 1, x = 1, y = 0.
        let (p, x, y, n) = (1, int(1), int(0), 1);
        let (lhs, _) = catalan_rational(p, &x, &y, n).unwrap();
        let wrong = ratio((p - 1) * n + 2, p * n + 2)
            * binomial_rational(&(int(2) * (int(p * n) + &y + int(1))), n);
        assert_eq!(lhs, int(4));
        assert_eq!(wrong, ratio(8, 3));
    }

    #[test]
    fn tables_agree_with_literal_sums() {
        let max_n = 9;
        for p in 1..5 {
            for r in 0..3 {
                let base = Point {
                    p,
                    r,
                    ..Point::default()
                };
                let pe = prepare_pascal_extraction(&base, max_n).unwrap();
                let pc = prepare_pascal_extraction_catalan(&base, max_n).unwrap();
                let ce = prepare_catalan_extraction(&base, max_n).unwrap();
                let be = prepare_ballot_extraction(&base, max_n).unwrap();
                for n in 1..=max_n as i64 {
                    for k in 1..=n {
                        let pt = Point {
                            n,
                            k,
                            ..base.clone()
                        };
                        if p >= 2 {
                            assert_eq!(pc(&pt).unwrap(), pascal_extraction_catalan(p, r, n, k));
                        }
                        for s in 1..=k {
                            let pt = Point { s, ..pt.clone() };
                            assert_eq!(ce(&pt).unwrap(), catalan_extraction(p, r, n, k, s));
                            if p >= 2 {
                                assert_eq!(pe(&pt).unwrap(), pascal_extraction(p, r, n, k, s));
                                assert_eq!(be(&pt).unwrap(), ballot_extraction(p, r, n, k, s));
                            }
                        }
                    }
                }
            }
        }
        let g = rational_grid();
        for x in &g {
            for y in &g {
                let base = Point {
                    p: 3,
                    x: x.clone(),
                    y: y.clone(),
                    z: ratio(5, 2),
                    ..Point::default()
                };
                let gv = prepare_generalized_vandermonde(&base, max_n).unwrap();
                let br = prepare_ballot_rational(&base, max_n).unwrap();
                let rh = prepare_rothe_hagen(&base, max_n).unwrap();
                let cr = prepare_catalan_rational(&base, max_n).unwrap();
                for n in 0..=max_n as i64 {
                    let pt = Point { n, ..base.clone() };
                    assert_eq!(
                        gv(&pt).unwrap(),
                        generalized_vandermonde(3, x, y, n).unwrap()
                    );
                    assert_eq!(br(&pt).unwrap(), ballot_rational(3, x, y, n).unwrap());
                    assert_eq!(
                        rh(&pt).unwrap(),
                        rothe_hagen(&ratio(5, 2), x, y, n).unwrap()
                    );
                    assert_eq!(cr(&pt).unwrap(), catalan_rational(3, x, y, n).unwrap());
                }
            }
        }
    }

    #[test]
    fn poles_are_errors() {
        // x/(zi+x) with z = 1, x = -1 at i = 1
        assert!(matches!(
            rothe_hagen(&int(1), &int(-1), &int(1), 2),
            Err(Error::Pole(_))
        ));
    }
}
