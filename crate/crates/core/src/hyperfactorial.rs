//! The hyperfactorial K(x) = Γ(x)^(x−1) / G(x) and its extrema.
//!
//! d/dx log K(x) = log Γ(x) + x − c with c = ½(1 + log 2π), so the extrema
//! are the roots of that function. On the negative axis the same equation
//! with log |Γ| is solved; its roots cluster on both sides of each −n, where
//! they are compared with −n + W(aₙ(1 + log n)) / (1 + log n),
//! aₙ = e^(−c) cos(πn) / (π nⁿ).

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::constants::LN_2PI;
use crate::error::{Error, Result};
use crate::roots::newton_bisect;
use crate::special::{digamma, lambert_w0, log_abs_gamma, log_barnes_g, log_gamma, POLE_GUARD};

/// c = ½ + ½ log 2π
pub const EXTREMUM_C: f64 = 0.5 * (1.0 + LN_2PI);

const ROOT_TOL: f64 = 1e-12;
/// Number of uniform samples in the window around −n.
pub const SCAN_POINTS: usize = 1000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ExtremumKind {
    Min,
    Max,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ExtremumRecord {
    /// 0 for the two positive extrema, n ≥ 1 near −n.
    pub n: u64,
    pub location: f64,
    pub kind: ExtremumKind,
    /// Lambert-W approximation; set only on the record nearest to it.
    pub approx_location: Option<f64>,
    /// |extremum_equation(location)|
    pub residual: f64,
    /// |location − approx_location|
    pub gap: Option<f64>,
}

/// log K(x), x > 0.
pub fn log_k(x: f64) -> Result<f64> {
    if x.is_nan() || x <= 0.0 {
        return Err(Error::Domain { function: "log_k", x, requirement: "x > 0" });
    }
    Ok((x - 1.0) * log_gamma(x)? - log_barnes_g(x)?)
}

/// log |Γ(x)| + x − c. For x > 0 this is d/dx log K(x).
pub fn extremum_equation(x: f64) -> Result<f64> {
    Ok(log_abs_gamma(x)? + x - EXTREMUM_C)
}

/// ψ(x) + 1, the derivative of [`extremum_equation`].
pub fn extremum_equation_derivative(x: f64) -> Result<f64> {
    Ok(digamma(x)? + 1.0)
}

fn eq_with_derivative(x: f64) -> Result<(f64, f64)> {
    Ok((extremum_equation(x)?, extremum_equation_derivative(x)?))
}

/// Half-width of the sign probe around a root: 1e−6, shrunk near the poles.
pub fn crossing_probe(x: f64) -> f64 {
    if x < 0.5 {
        let d = (x - x.round()).abs();
        1e-6f64.min(0.5 * d)
    } else {
        1e-6
    }
}

/// (log K)′ going + → − is a maximum, − → + a minimum.
fn classify(x: f64) -> Result<ExtremumKind> {
    let h = crossing_probe(x);
    let left = extremum_equation(x - h)?;
    let right = extremum_equation(x + h)?;
    match (left > 0.0, right > 0.0) {
        (true, false) => Ok(ExtremumKind::Max),
        (false, true) => Ok(ExtremumKind::Min),
        _ => Err(Error::Degenerate(format!(
            "extremum equation does not cross zero at {x} (f(x−h) = {left}, f(x+h) = {right})"
        ))),
    }
}

fn refine(n: u64, lo: f64, hi: f64) -> Result<ExtremumRecord> {
    let root = newton_bisect(eq_with_derivative, lo, hi, None, ROOT_TOL)?;
    let (mut location, mut residual) = (root.x, root.fx.abs());
    let x1 = root.x - root.fx / root.dfx;
    if x1 > root.lo && x1 < root.hi {
        let f1 = extremum_equation(x1)?.abs();
        if f1 < residual {
            (location, residual) = (x1, f1);
        }
    }
    Ok(ExtremumRecord { n, location, kind: classify(location)?, approx_location: None, residual, gap: None })
}

/// The local maximum near 0.291 and the local minimum near 1.538.
pub fn find_positive_extrema() -> Result<(ExtremumRecord, ExtremumRecord)> {
    Ok((refine(0, 0.05, 1.0)?, refine(0, 1.0, 3.0)?))
}

/// −n + W₀(aₙ(1 + log n)) / (1 + log n).
pub fn approx_negative_extremum(n: u64) -> Result<f64> {
    if n == 0 {
        return Err(Error::Domain { function: "approx_negative_extremum", x: 0.0, requirement: "n >= 1" });
    }
    let nf = n as f64;
    let log_abs_a = -EXTREMUM_C - PI.ln() - nf * nf.ln();
    let cos_pi_n = if n.is_multiple_of(2) { 1.0 } else { -1.0 };
    let scale = 1.0 + nf.ln();
    let arg = cos_pi_n * log_abs_a.exp() * scale;
    Ok(-nf + lambert_w0(arg)? / scale)
}

/// Sample points in (−n − ½, −n + ½): a uniform grid plus geometric offsets
/// 10^(−s/2) from −n down to the pole guard (or 8 ulp(n)), sorted and split
/// by side of the pole.
fn scan_points(n: u64) -> (Vec<f64>, Vec<f64>) {
    let center = -(n as f64);
    let floor = (8.0 * f64::EPSILON * n as f64).max(2.0 * POLE_GUARD);
    let mut pts: Vec<f64> = (0..SCAN_POINTS)
        .map(|i| center - 0.5 + (i as f64 + 0.5) / SCAN_POINTS as f64)
        .filter(|x| (x - center).abs() > 1e-7)
        .collect();
    pts.push(center - 0.5);
    pts.push(center + 0.5);
    for s in 2.. {
        let off = 10f64.powf(-f64::from(s) / 2.0);
        if off < floor {
            break;
        }
        pts.push(center - off);
        pts.push(center + off);
    }
    pts.sort_by(f64::total_cmp);
    pts.dedup();
    pts.into_iter().filter(|&x| x != center).partition(|&x| x < center)
}

/// All roots of the extremum equation in (−n − ½, −n + ½), ordered by
/// location. The record closest to [`approx_negative_extremum`] carries the
/// approximation and its gap.
pub fn find_negative_extrema(n: u64) -> Result<Vec<ExtremumRecord>> {
    if n == 0 {
        return Err(Error::Domain { function: "find_negative_extrema", x: 0.0, requirement: "n >= 1" });
    }
    let (left, right) = scan_points(n);
    let scanned = left.len() + right.len();
    let mut records = Vec::new();
    for side in [left, right] {
        let vals = side.iter().map(|&x| extremum_equation(x)).collect::<Result<Vec<_>>>()?;
        for i in 1..side.len() {
            if (vals[i - 1] < 0.0) != (vals[i] < 0.0) {
                records.push(refine(n, side[i - 1], side[i])?);
            }
        }
    }
    if records.is_empty() {
        return Err(Error::NoneFound { n, scanned });
    }
    let approx = approx_negative_extremum(n)?;
    let nearest = records
        .iter_mut()
        .min_by(|a, b| (a.location - approx).abs().total_cmp(&(b.location - approx).abs()))
        .expect("records is non-empty");
    nearest.approx_location = Some(approx);
    nearest.gap = Some((nearest.location - approx).abs());
    Ok(records)
}

/// The record paired with the Lambert-W approximation.
pub fn paired(records: &[ExtremumRecord]) -> Option<&ExtremumRecord> {
    records.iter().find(|r| r.gap.is_some())
}

/// |x^x |sin πx| − e^(−c)|, the residual of the simplified extremum equation
/// at x > 0 (x stands for −location of a negative-axis extremum).
pub fn verify_treq2(x: f64) -> Result<f64> {
    if x.is_nan() || x <= 0.0 {
        return Err(Error::Domain { function: "verify_treq2", x, requirement: "x > 0" });
    }
    let r = x - x.round();
    if r == 0.0 {
        return Err(Error::Domain { function: "verify_treq2", x, requirement: "x not an integer" });
    }
    let log_lhs = x * x.ln() + (PI * r).sin().abs().ln();
    Ok((log_lhs.exp() - (-EXTREMUM_C).exp()).abs())
}
