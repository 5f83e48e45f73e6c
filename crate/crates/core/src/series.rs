//! Sums over the zeros α_k and β_k and the genus-one products built on them.
//!
//! Every identity sum is split as
//!
//! ```text
//!   Σ_{k<K} term(exact zero)  +  Σ_{K≤k<M} term(arctan surrogate)  +  ∫_{M−½}^∞ envelope
//! ```
//!
//! with M = max(10⁶, 100K). The surrogate zeros come from
//! [`approx_zero`](crate::zeros::approx_zero) in arctan form, so no root
//! finding is needed past K. Each result also carries `tail_bound`, an upper
//! bound on the whole remainder Σ_{k≥K} |term| that uses only
//! |α_k| > k − 1 and |β_k| > k − 2.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::constants::{Constants, EULER_GAMMA, LN_2PI};
use crate::error::{Error, Result};
use crate::special::{digamma, log_gamma, psi_g, trigamma};
use crate::sum::{compensated_sum, par_range_sum, NeumaierSum};
use crate::zeros::{approx_zero, zero_values, ApproxForm, ZeroFamily};

/// Smallest K accepted by the tail machinery.
pub const MIN_TERMS: usize = 50;
const MIN_SURROGATE_END: u64 = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum IdentityId {
    /// Σ 1/(α² − α) = γ + π²/(6γ)
    PsiQuadShift,
    /// Σ 1/α² = γ² + π²/2
    PsiQuad,
    /// Σ 1/(α² − 1) = γ/2 + π²/(12γ) − 1
    PsiQuadMinus1,
    /// Σ 1/α⁴ = γ⁴ + 2γ²π²/3 + π⁴/9 + 4γζ(3)
    PsiQuartic,
    /// Σ 1/β² = 9/4 + π²/2 + γ(1 + γ + L) − L/2 + L²/4
    PsigQuad,
    /// Σ 1/β⁴, quartic in L = log 2π
    PsigQuartic,
}

impl IdentityId {
    pub const ALL: [IdentityId; 6] = [
        IdentityId::PsiQuadShift,
        IdentityId::PsiQuad,
        IdentityId::PsiQuadMinus1,
        IdentityId::PsiQuartic,
        IdentityId::PsigQuad,
        IdentityId::PsigQuartic,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IdentityId::PsiQuadShift => "psi-quad-shift",
            IdentityId::PsiQuad => "psi-quad",
            IdentityId::PsiQuadMinus1 => "psi-quad-minus1",
            IdentityId::PsiQuartic => "psi-quartic",
            IdentityId::PsigQuad => "psig-quad",
            IdentityId::PsigQuartic => "psig-quartic",
        }
    }

    pub fn family(self) -> ZeroFamily {
        match self {
            IdentityId::PsigQuad | IdentityId::PsigQuartic => ZeroFamily::PsiG,
            _ => ZeroFamily::Psi,
        }
    }

    /// Decay exponent p of the terms, |term| ~ |x|^−p.
    pub fn power(self) -> i32 {
        match self {
            IdentityId::PsiQuartic | IdentityId::PsigQuartic => 4,
            _ => 2,
        }
    }

    pub fn term(self, x: f64) -> f64 {
        match self {
            IdentityId::PsiQuadShift => 1.0 / (x * x - x),
            IdentityId::PsiQuad | IdentityId::PsigQuad => 1.0 / (x * x),
            IdentityId::PsiQuadMinus1 => 1.0 / (x * x - 1.0),
            IdentityId::PsiQuartic | IdentityId::PsigQuartic => {
                let x2 = x * x;
                1.0 / (x2 * x2)
            }
        }
    }

    /// Relative tolerance the identity is expected to meet: 1e−5 for the
    /// quadratic sums at K = 10⁵, 1e−8 for the quartic ones at K = 10⁴.
    pub fn tolerance(self) -> f64 {
        match self.power() {
            4 => 1e-8,
            _ => 1e-5,
        }
    }

    /// Lower bound on |zero_k| for k ≥ 1: k − 1 for ψ, k − 2 for ψ_G.
    fn index_shift(self) -> f64 {
        match self.family() {
            ZeroFamily::Psi => 1.0,
            ZeroFamily::PsiG => 2.0,
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for IdentityId {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let norm = s.to_ascii_lowercase().replace('_', "-");
        IdentityId::ALL.into_iter().find(|id| id.name() == norm).ok_or_else(|| format!("unknown identity `{s}`"))
    }
}

/// Numerical check of one identity.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SeriesResult {
    pub id: IdentityId,
    pub terms_used: usize,
    pub partial_sum: f64,
    pub tail_estimate: f64,
    /// Upper bound on Σ_{k≥K} |term|.
    pub tail_bound: f64,
    pub total: f64,
    pub closed_form: f64,
    pub abs_error: f64,
    pub rel_error: f64,
}

impl SeriesResult {
    pub fn within_tolerance(&self) -> bool {
        self.rel_error <= self.id.tolerance()
    }
}

pub fn closed_form(id: IdentityId) -> f64 {
    closed_form_with(id, &Constants::standard())
}

pub fn closed_form_with(id: IdentityId, k: &Constants) -> f64 {
    let (g, pi, z3, l) = (k.gamma, k.pi, k.zeta3, k.l);
    let pi2 = pi * pi;
    match id {
        IdentityId::PsiQuadShift => g + pi2 / (6.0 * g),
        IdentityId::PsiQuad => g * g + pi2 / 2.0,
        IdentityId::PsiQuadMinus1 => g / 2.0 + pi2 / (12.0 * g) - 1.0,
        IdentityId::PsiQuartic => g.powi(4) + 2.0 * g * g * pi2 / 3.0 + pi2 * pi2 / 9.0 + 4.0 * g * z3,
        IdentityId::PsigQuad => 9.0 / 4.0 + pi2 / 2.0 + g * (1.0 + g + l) - l / 2.0 + l * l / 4.0,
        IdentityId::PsigQuartic => {
            2.0 * z3 * (l + 1.0)
                + g.powi(4)
                + pi2 * pi2 / 9.0
                + pi2 * (l * l + 3.0) / 6.0
                + 2.0 * g.powi(3) * (l + 1.0)
                + g * (24.0 * z3 + 3.0 + 4.0 * pi2 * (l + 1.0) + 3.0 * l * (l * l - l + 7.0)) / 6.0
                + g * g * (9.0 * l * l + 6.0 * l + 4.0 * pi2 + 21.0) / 6.0
                + (l.powi(4) - 4.0 * l.powi(3) + 22.0 * l * l - 36.0 * l + 49.0) / 16.0
        }
    }
}

/// Σ term(z) over the given zeros, ascending index, compensated.
pub fn partial_sum_over(id: IdentityId, zeros: &[f64]) -> f64 {
    compensated_sum(zeros.iter().map(|&z| id.term(z)))
}

/// Σ_{k<K} term(ζ_k) with the zeros computed on demand.
pub fn partial_sum(id: IdentityId, terms: usize) -> Result<f64> {
    if terms == 0 {
        return Err(Error::Domain { function: "partial_sum", x: 0.0, requirement: "K >= 1" });
    }
    Ok(partial_sum_over(id, &zero_values(id.family(), terms)?))
}

/// Arctan-form surrogate for zero `k` of `family` (valid for k ≥ 50).
pub fn surrogate_zero(family: ZeroFamily, k: u64) -> f64 {
    approx_zero(family, k, ApproxForm::Arctan).expect("surrogate used only for k >= 50")
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TailEstimate {
    pub value: f64,
    /// Upper bound on Σ_{k≥K} |term|.
    pub bound: f64,
    /// Last surrogate index + 1.
    pub surrogate_end: u64,
}

fn surrogate_end(terms: usize) -> u64 {
    MIN_SURROGATE_END.max(100 * terms as u64)
}

/// Σ_{k≥M} over surrogate zeros ≈ ∫_{M−½}^∞ (x − δ)^−p dx with δ = M − |ζ_M|.
fn envelope_beyond(family: ZeroFamily, end: u64, p: i32) -> f64 {
    let t = surrogate_zero(family, end).abs() - 0.5;
    t.powi(1 - p) / f64::from(p - 1)
}

fn remainder_bound(id: IdentityId, terms: usize) -> f64 {
    // |ζ_k| > j0 for every k ≥ K; 1.01 absorbs the −x and −1 in the
    // quadratic denominators once |x| ≥ 48.
    let j0 = terms as f64 - id.index_shift();
    let p = id.power();
    1.01 * (j0.powi(-p) + j0.powi(1 - p) / f64::from(p - 1))
}

/// Estimate of Σ_{k≥K} term(ζ_k) from surrogate zeros K…M−1 plus the
/// integral envelope past M.
pub fn tail_estimate(id: IdentityId, terms: usize) -> Result<TailEstimate> {
    if terms < MIN_TERMS {
        return Err(Error::Domain { function: "tail_estimate", x: terms as f64, requirement: "K >= 50" });
    }
    let family = id.family();
    let end = surrogate_end(terms);
    let body = par_range_sum(terms as u64, end, |k| id.term(surrogate_zero(family, k)));
    let value = body + envelope_beyond(family, end, id.power());
    Ok(TailEstimate { value, bound: remainder_bound(id, terms), surrogate_end: end })
}

/// Checks `id` using the given exact zeros (K = zeros.len()) and constants.
pub fn verify_identity_with(id: IdentityId, zeros: &[f64], constants: &Constants) -> Result<SeriesResult> {
    let terms = zeros.len();
    let partial = partial_sum_over(id, zeros);
    let tail = tail_estimate(id, terms)?;
    let mut total = NeumaierSum::new();
    total.add(partial);
    total.add(tail.value);
    let total = total.value();
    let cf = closed_form_with(id, constants);
    let abs_error = (total - cf).abs();
    Ok(SeriesResult {
        id,
        terms_used: terms,
        partial_sum: partial,
        tail_estimate: tail.value,
        tail_bound: tail.bound,
        total,
        closed_form: cf,
        abs_error,
        rel_error: abs_error / cf.abs(),
    })
}

pub fn verify_identity(id: IdentityId, terms: usize) -> Result<SeriesResult> {
    if terms < MIN_TERMS {
        return Err(Error::Domain { function: "verify_identity", x: terms as f64, requirement: "K >= 50" });
    }
    let zeros = zero_values(id.family(), terms)?;
    verify_identity_with(id, &zeros, &Constants::standard())
}

/// Exponential prefactor rate and sign of the product for each family:
/// ψ/Γ = −e^{2γz} Π …, ψ_G/Γ = e^{(2γ + L/2 − ½)z} Π ….
fn product_prefactor(family: ZeroFamily) -> (f64, f64) {
    match family {
        ZeroFamily::Psi => (2.0 * EULER_GAMMA, -1.0),
        ZeroFamily::PsiG => (2.0 * EULER_GAMMA + 0.5 * LN_2PI - 0.5, 1.0),
    }
}

/// Truncated genus-one product over `zeros`, accumulated as a log-magnitude
/// with the sign tracked separately.
pub fn weierstrass_product(family: ZeroFamily, z: f64, zeros: &[f64]) -> Result<f64> {
    if z.is_nan() || z.abs() > 50.0 {
        return Err(Error::Domain { function: "weierstrass_product", x: z, requirement: "|z| <= 50" });
    }
    let (rate, mut sign) = product_prefactor(family);
    let mut log_mag = NeumaierSum::new();
    log_mag.add(rate * z);
    for (k, &a) in zeros.iter().enumerate() {
        if (z - a).abs() <= 1e-6 {
            return Err(Error::Degenerate(format!("z = {z} coincides with {family} zero #{k} = {a}")));
        }
        let u = z / a;
        if u > 1.0 {
            sign = -sign;
        }
        log_mag.add(if u.abs() < 0.5 { (-u).ln_1p() } else { (1.0 - u).abs().ln() });
        log_mag.add(u);
    }
    Ok(sign * log_mag.value().exp())
}

fn product_with_terms(family: ZeroFamily, z: f64, terms: usize) -> Result<f64> {
    let zeros = zero_values(family, terms)?;
    weierstrass_product(family, z, &zeros)
}

/// −e^{2γz} Π_{k<K} (1 − z/α_k) e^{z/α_k}, which tends to ψ(z)/Γ(z).
pub fn weierstrass_psi(z: f64, terms: usize) -> Result<f64> {
    product_with_terms(ZeroFamily::Psi, z, terms)
}

/// e^{(2γ + L/2 − ½)z} Π_{k<K} (1 − z/β_k) e^{z/β_k}, which tends to ψ_G(z)/Γ(z).
pub fn weierstrass_psig(z: f64, terms: usize) -> Result<f64> {
    product_with_terms(ZeroFamily::PsiG, z, terms)
}

/// ψ(z)/Γ(z) or ψ_G(z)/Γ(z) from the kernels, z > 0.
pub fn kernel_ratio(family: ZeroFamily, z: f64) -> Result<f64> {
    let num = match family {
        ZeroFamily::Psi => digamma(z)?,
        ZeroFamily::PsiG => psi_g(z)?,
    };
    Ok(num * (-log_gamma(z)?).exp())
}

/// |ψ′(z)/ψ(z) − ψ(z) − (2γ − z S)| with S = Σ_k 1/(α_k² − α_k z); the sum
/// over k ≥ K uses the same surrogate tail as [`tail_estimate`].
pub fn check_logderiv_relation_with(z: f64, zeros: &[f64]) -> Result<f64> {
    let terms = zeros.len();
    if terms < MIN_TERMS {
        return Err(Error::Domain { function: "check_logderiv_relation", x: terms as f64, requirement: "K >= 50" });
    }
    let psi = digamma(z)?;
    if psi.abs() < 1e-8 {
        return Err(Error::Degenerate(format!("ψ({z}) = {psi} is too close to zero")));
    }
    if let Some(a) = zeros.iter().find(|&&a| (a - z).abs() <= 1e-6) {
        return Err(Error::Degenerate(format!("z = {z} coincides with the zero {a}")));
    }
    let lhs = trigamma(z)? / psi - psi;

    let term = |a: f64| 1.0 / (a * a - a * z);
    let mut s = NeumaierSum::new();
    s.extend(zeros.iter().map(|&a| term(a)));
    let end = surrogate_end(terms);
    s.add(par_range_sum(terms as u64, end, |k| term(surrogate_zero(ZeroFamily::Psi, k))));
    s.add(envelope_beyond(ZeroFamily::Psi, end, 2));
    let rhs = 2.0 * EULER_GAMMA - z * s.value();
    Ok((lhs - rhs).abs())
}

pub fn check_logderiv_relation(z: f64, terms: usize) -> Result<f64> {
    let zeros = zero_values(ZeroFamily::Psi, terms)?;
    check_logderiv_relation_with(z, &zeros)
}
