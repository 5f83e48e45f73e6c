//! Zeros α_k of ψ and β_k of ψ_G.
//!
//! Indexing follows the natural order from the right: α₀ ≈ 1.4616 is the only
//! positive zero of ψ and α_k ∈ (−k, −k+1) for k ≥ 1. ψ_G has two positive
//! zeros, β₀ ∈ (2, 3) and β₁ ∈ (1, 2); after that β_k ∈ (−(k−1), −(k−2)), so
//! β₂ ≈ −0.366 and β₁₁ ≈ −9.62 sit in the same unit interval as α₁ and α₁₀.

use std::f64::consts::PI;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::constants::LN_2PI;
use crate::error::{Error, Result};
use crate::roots::newton_bisect;
use crate::special::{digamma, psi_g, psi_g_derivative, trigamma};

/// Residual stopping threshold, relative to max(1, |f′|).
pub const STOP_TOL: f64 = 1e-11;
/// Distance kept between bracket endpoints and the poles.
pub const POLE_OFFSET: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ZeroFamily {
    /// zeros of ψ
    Psi,
    /// zeros of ψ_G
    #[serde(rename = "psig")]
    PsiG,
}

impl ZeroFamily {
    pub fn name(self) -> &'static str {
        match self {
            ZeroFamily::Psi => "psi",
            ZeroFamily::PsiG => "psig",
        }
    }

    /// f(x), the function whose zeros this family collects.
    pub fn eval(self, x: f64) -> Result<f64> {
        match self {
            ZeroFamily::Psi => digamma(x),
            ZeroFamily::PsiG => psi_g(x),
        }
    }

    pub fn derivative(self, x: f64) -> Result<f64> {
        match self {
            ZeroFamily::Psi => trigamma(x),
            ZeroFamily::PsiG => psi_g_derivative(x),
        }
    }

    fn eval_with_derivative(self, x: f64) -> Result<(f64, f64)> {
        Ok((self.eval(x)?, self.derivative(x)?))
    }

    /// The open unit interval that contains zero number `k`.
    pub fn unit_interval(self, k: u64) -> (f64, f64) {
        match (self, k) {
            (ZeroFamily::Psi, 0) => (1.0, 2.0),
            (ZeroFamily::Psi, k) => (-(k as f64), 1.0 - k as f64),
            (ZeroFamily::PsiG, 0) => (2.0, 3.0),
            (ZeroFamily::PsiG, 1) => (1.0, 2.0),
            (ZeroFamily::PsiG, k) => (1.0 - k as f64, 2.0 - k as f64),
        }
    }

    /// Search bracket: the unit interval pulled in from any pole endpoint.
    pub fn bracket(self, k: u64) -> (f64, f64) {
        let (lo, hi) = self.unit_interval(k);
        let off = |p: f64| if p <= 0.0 { POLE_OFFSET.max(8.0 * f64::EPSILON * p.abs()) } else { 0.0 };
        (lo + off(lo), hi - off(hi))
    }
}

impl fmt::Display for ZeroFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for ZeroFamily {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "psi" => Ok(ZeroFamily::Psi),
            "psig" | "psi-g" | "psi_g" => Ok(ZeroFamily::PsiG),
            other => Err(format!("unknown zero family `{other}` (expected psi or psig)")),
        }
    }
}

/// One computed zero.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ZeroRecord {
    pub family: ZeroFamily,
    pub index: u64,
    pub value: f64,
    /// |f(value)|
    pub residual: f64,
    pub bracket_lo: f64,
    pub bracket_hi: f64,
    pub iterations: usize,
}

impl ZeroRecord {
    /// Bitwise equality, used to check cached tables against recomputation.
    pub fn bit_eq(&self, other: &Self) -> bool {
        self.family == other.family
            && self.index == other.index
            && self.value.to_bits() == other.value.to_bits()
            && self.residual.to_bits() == other.residual.to_bits()
            && self.bracket_lo.to_bits() == other.bracket_lo.to_bits()
            && self.bracket_hi.to_bits() == other.bracket_hi.to_bits()
            && self.iterations == other.iterations
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ApproxForm {
    /// −n + (1/π) arctan(π / D(n))
    Arctan,
    /// −n + 1 / D(n)
    Hermite,
}

fn approx_from_denominator(n: f64, denom: f64, form: ApproxForm) -> f64 {
    match form {
        ApproxForm::Arctan => -n + (PI / denom).atan() / PI,
        ApproxForm::Hermite => -n + 1.0 / denom,
    }
}

/// Asymptotic location of α_k, k ≥ 2, with D(k) = log k − 1/(2k).
///
/// The Hermite form keeps only the leading 1/log k.
pub fn approx_psi_zero(k: u64, form: ApproxForm) -> Result<f64> {
    if k < 2 {
        return Err(Error::Domain { function: "approx_psi_zero", x: k as f64, requirement: "k >= 2" });
    }
    let n = k as f64;
    let denom = match form {
        ApproxForm::Arctan => n.ln() - 0.5 / n,
        ApproxForm::Hermite => n.ln(),
    };
    Ok(approx_from_denominator(n, denom, form))
}

/// Asymptotic location of β_k with n = k − 1 and
/// D(n) = log n − 1 − log(2π)/(2n).
pub fn approx_psig_zero(k: u64, form: ApproxForm) -> Result<f64> {
    if k < 4 {
        return Err(Error::Domain { function: "approx_psig_zero", x: k as f64, requirement: "k >= 4" });
    }
    let n = (k - 1) as f64;
    let denom = n.ln() - 1.0 - LN_2PI / (2.0 * n);
    if denom <= 0.0 {
        return Err(Error::Domain {
            function: "approx_psig_zero",
            x: k as f64,
            requirement: "log n - 1 - log(2π)/(2n) > 0",
        });
    }
    Ok(approx_from_denominator(n, denom, form))
}

pub fn approx_zero(family: ZeroFamily, k: u64, form: ApproxForm) -> Result<f64> {
    match family {
        ZeroFamily::Psi => approx_psi_zero(k, form),
        ZeroFamily::PsiG => approx_psig_zero(k, form),
    }
}

fn record(family: ZeroFamily, index: u64, lo: f64, hi: f64, guess: Option<f64>) -> Result<ZeroRecord> {
    let root = newton_bisect(|x| family.eval_with_derivative(x), lo, hi, guess, STOP_TOL)?;
    let (mut value, mut residual) = (root.x, root.fx.abs());
    // one polishing step past the stopping rule
    let x1 = root.x - root.fx / root.dfx;
    if x1 > root.lo && x1 < root.hi {
        let f1 = family.eval(x1)?.abs();
        if f1 < residual {
            (value, residual) = (x1, f1);
        }
    }
    Ok(ZeroRecord { family, index, value, residual, bracket_lo: lo, bracket_hi: hi, iterations: root.iterations })
}

/// α_k. ψ increases strictly between consecutive poles, so each bracket holds
/// exactly one sign change.
pub fn find_psi_zero(k: u64) -> Result<ZeroRecord> {
    let (lo, hi) = ZeroFamily::Psi.bracket(k);
    let guess = (k >= 2).then(|| approx_psi_zero(k, ApproxForm::Hermite).map(|g| g.clamp(lo, hi))).transpose()?;
    record(ZeroFamily::Psi, k, lo, hi, guess)
}

/// Sample points used to look for the sign change of ψ_G: geometric offsets
/// 10⁻¹ … 10⁻⁸ from both ends plus the midpoint, in increasing order.
fn psig_scan_points(lo: f64, hi: f64) -> Vec<f64> {
    let mut pts: Vec<f64> = (1..=8).rev().map(|j| lo + 10f64.powi(-j)).collect();
    pts.push(0.5 * (lo + hi));
    pts.extend((1..=8).map(|j| hi - 10f64.powi(-j)));
    pts
}

/// β_k. ψ_G is not known to be monotone on each interval, so the sign change
/// is located by sampling first; no sign change is reported as an error.
pub fn find_psig_zero(k: u64) -> Result<ZeroRecord> {
    let family = ZeroFamily::PsiG;
    let (lo, hi) = family.unit_interval(k);
    let pts = psig_scan_points(lo, hi);
    let mut samples = Vec::with_capacity(pts.len());
    for &x in &pts {
        samples.push((x, family.eval(x)?));
    }
    let Some(w) = samples.windows(2).find(|w| (w[0].1 < 0.0) != (w[1].1 < 0.0)) else {
        return Err(Error::NoSignChange { lo, hi, samples });
    };
    let (a, b) = (w[0].0, w[1].0);
    let guess = approx_psig_zero(k, ApproxForm::Arctan).ok().filter(|g| *g > a && *g < b);
    let mut rec = record(family, k, a, b, guess)?;
    let (blo, bhi) = family.bracket(k);
    rec.bracket_lo = blo;
    rec.bracket_hi = bhi;
    Ok(rec)
}

pub fn find_zero(family: ZeroFamily, k: u64) -> Result<ZeroRecord> {
    match family {
        ZeroFamily::Psi => find_psi_zero(k),
        ZeroFamily::PsiG => find_psig_zero(k),
    }
}

/// Records for k = 0…k_max, computed in parallel. Each zero is found
/// independently, so the output does not depend on scheduling; on failure the
/// lowest failing index is reported.
pub fn zero_table(family: ZeroFamily, k_max: u64) -> Result<Vec<ZeroRecord>> {
    let results: Vec<Result<ZeroRecord>> = (0..=k_max).into_par_iter().map(|k| find_zero(family, k)).collect();
    results
        .into_iter()
        .enumerate()
        .map(|(k, r)| r.map_err(|e| Error::AtIndex { family: family.name(), index: k as u64, source: Box::new(e) }))
        .collect()
}

/// The first `count` zero values (k = 0…count−1).
pub fn zero_values(family: ZeroFamily, count: usize) -> Result<Vec<f64>> {
    if count == 0 {
        return Ok(Vec::new());
    }
    Ok(zero_table(family, count as u64 - 1)?.into_iter().map(|r| r.value).collect())
}
