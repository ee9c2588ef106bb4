//! Critical points of the one-variable real deformation: the only floating-point code in the
//! crate. Roots are isolated with the derivative sequence and refined by bisection.

use serde::Serialize;

use crate::error::{Error, Result};

pub const TOL: f64 = 1e-9;

#[derive(Clone, Debug, Serialize)]
pub struct CriticalDatum {
    pub location: f64,
    pub value: f64,
    /// True when the critical value is zero (a double root of the polynomial).
    pub degenerate_value: bool,
}

/// Coefficients, constant term first.
type Poly = Vec<f64>;

fn mul(p: &[f64], q: &[f64]) -> Poly {
    let mut out = vec![0.0; p.len() + q.len() - 1];
    for (i, a) in p.iter().enumerate() {
        for (j, b) in q.iter().enumerate() {
            out[i + j] += a * b;
        }
    }
    out
}

fn deriv(p: &[f64]) -> Poly {
    p.iter().enumerate().skip(1).map(|(i, a)| i as f64 * a).collect()
}

fn eval(p: &[f64], x: f64) -> f64 {
    p.iter().rev().fold(0.0, |acc, a| acc * x + a)
}

/// `prod_{j=1}^{(n+1)/2} (x+j)^2` when `n+1` is even, otherwise the same product over
/// `j <= n/2` times `(x + (n+2)/2)`.
pub fn morsification_polynomial(n: usize) -> Vec<f64> {
    let mut p = vec![1.0];
    let m = if (n + 1).is_multiple_of(2) { n.div_ceil(2) } else { n / 2 };
    for j in 1..=m {
        p = mul(&p, &[j as f64, 1.0]);
        p = mul(&p, &[j as f64, 1.0]);
    }
    if (n + 1) % 2 == 1 {
        p = mul(&p, &[(n + 2) as f64 / 2.0, 1.0]);
    }
    p
}

fn bisect(p: &[f64], mut lo: f64, mut hi: f64) -> f64 {
    let mut flo = eval(p, lo);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        let fm = eval(p, mid);
        if fm == 0.0 {
            return mid;
        }
        if (fm < 0.0) == (flo < 0.0) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Real roots of a polynomial with simple roots between consecutive roots of its derivative.
fn real_roots(p: &[f64]) -> Vec<f64> {
    let mut p = p.to_vec();
    while p.len() > 1 && *p.last().unwrap() == 0.0 {
        p.pop();
    }
    if p.len() <= 1 {
        return vec![];
    }
    if p.len() == 2 {
        return vec![-p[0] / p[1]];
    }
    let lead = *p.last().unwrap();
    let bound = 1.0 + p.iter().take(p.len() - 1).map(|a| (a / lead).abs()).fold(0.0, f64::max);
    let mut pts = vec![-bound];
    pts.extend(real_roots(&deriv(&p)));
    pts.push(bound);
    let scale = |x: f64| p.iter().enumerate().map(|(i, a)| a.abs() * x.abs().powi(i as i32)).sum::<f64>().max(1.0);
    let mut roots: Vec<f64> = Vec::new();
    for w in pts.windows(2) {
        let (l, r) = (w[0], w[1]);
        let (fl, fr) = (eval(&p, l), eval(&p, r));
        if fl.abs() <= TOL * scale(l) {
            roots.push(l);
        } else if fl * fr < 0.0 {
            roots.push(bisect(&p, l, r));
        }
    }
    let last = *pts.last().unwrap();
    if eval(&p, last).abs() <= TOL * scale(last) {
        roots.push(last);
    }
    roots.sort_by(|a, b| a.partial_cmp(b).unwrap());
    roots.dedup_by(|a, b| (*a - *b).abs() < 1e-7);
    roots
}

pub fn morsification_data(n: usize) -> Result<Vec<CriticalDatum>> {
    if !(1..=12).contains(&n) {
        return Err(Error::BadParameters(format!("n={n} outside 1..=12")));
    }
    let f = morsification_polynomial(n);
    let df = deriv(&f);
    let crit = real_roots(&df);
    if crit.len() != n {
        return Err(Error::RootFindingFailure(format!("found {} critical points, expected {n}", crit.len())));
    }
    let mut out = Vec::new();
    for x in crit {
        let scale: f64 = df.iter().enumerate().map(|(i, a)| a.abs() * x.abs().powi(i as i32)).sum::<f64>().max(1.0);
        if eval(&df, x).abs() > TOL * scale {
            return Err(Error::RootFindingFailure(format!("residual too large at {x}")));
        }
        let v = eval(&f, x);
        if v < -TOL {
            return Err(Error::RootFindingFailure(format!("negative critical value {v} at {x}")));
        }
        let degenerate = v.abs() <= TOL;
        out.push(CriticalDatum { location: x, value: if degenerate { 0.0 } else { v }, degenerate_value: degenerate });
    }
    Ok(out)
}

/// Number of unordered `d`-tuples of pairwise distinct critical points, that is the orbits of
/// off-diagonal critical points of the `d`-fold sum under permutation of the factors.
pub fn off_diagonal_orbits(crit: &[CriticalDatum], d: usize) -> usize {
    let mut xs: Vec<f64> = crit.iter().map(|c| c.location).collect();
    xs.sort_by(|a, b| a.partial_cmp(b).unwrap());
    xs.dedup_by(|a, b| (*a - *b).abs() < 1e-7);
    if d > xs.len() {
        return 0;
    }
    crate::zoo::increasing_tuples(xs.len(), d).len()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn n3_points() {
        let c = morsification_data(3).unwrap();
        let xs: Vec<f64> = c.iter().map(|c| c.location).collect();
        for (x, want) in xs.iter().zip([-2.0, -1.5, -1.0]) {
            assert!((x - want).abs() < 1e-9);
        }
        assert!((c[1].value - 0.0625).abs() < 1e-9);
        assert!(c[0].degenerate_value && c[2].degenerate_value);
    }

    #[test]
    fn n1_and_n4() {
        let c = morsification_data(1).unwrap();
        assert_eq!(c.len(), 1);
        assert!((c[0].location + 1.0).abs() < 1e-9);
        let c = morsification_data(4).unwrap();
        assert_eq!(c.iter().filter(|c| c.degenerate_value).count(), 2);
        assert_eq!(c.iter().filter(|c| c.value > 0.0).count(), 2);
    }
}
