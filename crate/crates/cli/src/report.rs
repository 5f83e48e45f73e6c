//! The aggregate `verify` report.

use digamma_zeros::hyperfactorial::{
    extremum_equation_derivative, find_negative_extrema, find_positive_extrema, paired,
};
use digamma_zeros::series::{kernel_ratio, verify_identity_with, weierstrass_product};
use digamma_zeros::zeros::{find_zero, zero_values};
use digamma_zeros::{Constants, ExtremumKind, ExtremumRecord, IdentityId, SeriesResult, ZeroFamily};
use serde::{Deserialize, Serialize};

/// Published zero values with the tolerance implied by their printed digits.
pub const PUBLISHED_ZEROS: [(ZeroFamily, u64, f64, f64); 10] = [
    (ZeroFamily::Psi, 0, 1.461632, 5e-6),
    (ZeroFamily::Psi, 10, -9.702672541, 5e-9),
    (ZeroFamily::Psi, 100, -99.80953650, 5e-8),
    (ZeroFamily::Psi, 1000, -999.8641415, 5e-7),
    (ZeroFamily::PsiG, 0, 2.55766, 5e-5),
    (ZeroFamily::PsiG, 1, 1.39147, 5e-5),
    (ZeroFamily::PsiG, 2, -0.3662934, 5e-7),
    (ZeroFamily::PsiG, 11, -9.622785495, 5e-9),
    (ZeroFamily::PsiG, 101, -99.77177415, 5e-8),
    (ZeroFamily::PsiG, 1001, -999.8444267, 5e-7),
];

/// Published positive extrema of K: (location, tolerance, kind).
pub const PUBLISHED_EXTREMA: [(f64, f64, ExtremumKind); 2] =
    [(0.290957, 5e-6, ExtremumKind::Max), (1.53769, 5e-5, ExtremumKind::Min)];

pub const PRODUCT_POINTS: [f64; 3] = [0.25, 0.5, 1.5];
pub const PRODUCT_TOLERANCE: f64 = 1e-3;
/// The paired gap at this n must be ≤ GAP_TARGET.
pub const GAP_TARGET_N: u64 = 5;
pub const GAP_TARGET: f64 = 1e-3;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SpotCheck {
    pub family: ZeroFamily,
    pub k: u64,
    pub value: f64,
    pub paper_value: f64,
    pub abs_diff: f64,
    pub tolerance: f64,
    pub pass: bool,
}

/// Truncated product against ψ(z)/Γ(z) or ψ_G(z)/Γ(z) at increasing K.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProductCheck {
    pub family: ZeroFamily,
    pub z: f64,
    pub target: f64,
    pub terms: Vec<usize>,
    pub products: Vec<f64>,
    pub rel_errors: Vec<f64>,
    pub tolerance: f64,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub generated_at: String,
    pub identities: Vec<SeriesResult>,
    pub zeros_spot_checks: Vec<SpotCheck>,
    pub extrema: Vec<ExtremumRecord>,
    pub products: Vec<ProductCheck>,
    /// One line per failed check or computation error.
    pub failures: Vec<String>,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerifyConfig {
    pub constants: Constants,
    /// K for the quadratic identities.
    pub quad_terms: usize,
    /// K for the quartic identities.
    pub quartic_terms: usize,
    /// Truncations for the product checks, increasing.
    pub product_terms: Vec<usize>,
    pub negative_n_max: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            constants: Constants::standard(),
            quad_terms: 100_000,
            quartic_terms: 10_000,
            product_terms: vec![100, 1000, 10_000],
            negative_n_max: 6,
        }
    }
}

fn is_quartic(id: IdentityId) -> bool {
    id.power() == 4
}

fn identities(cfg: &VerifyConfig, failures: &mut Vec<String>) -> Vec<SeriesResult> {
    let need = cfg.quad_terms.max(cfg.quartic_terms);
    let mut out = Vec::new();
    for family in [ZeroFamily::Psi, ZeroFamily::PsiG] {
        let zeros = match zero_values(family, need) {
            Ok(z) => z,
            Err(e) => {
                failures.push(format!("{family} zeros: {e}"));
                continue;
            }
        };
        for id in IdentityId::ALL.into_iter().filter(|id| id.family() == family) {
            let k = if is_quartic(id) { cfg.quartic_terms } else { cfg.quad_terms };
            match verify_identity_with(id, &zeros[..k], &cfg.constants) {
                Ok(r) => {
                    if !r.within_tolerance() {
                        failures.push(format!("identity {id}: rel_error {:e} > {:e}", r.rel_error, id.tolerance()));
                    }
                    out.push(r);
                }
                Err(e) => failures.push(format!("identity {id}: {e}")),
            }
        }
    }
    out.sort_by_key(|r| IdentityId::ALL.iter().position(|&id| id == r.id));
    out
}

fn spot_checks(failures: &mut Vec<String>) -> Vec<SpotCheck> {
    let mut out = Vec::new();
    for (family, k, paper_value, tolerance) in PUBLISHED_ZEROS {
        match find_zero(family, k) {
            Ok(r) => {
                let abs_diff = (r.value - paper_value).abs();
                let pass = abs_diff <= tolerance;
                if !pass {
                    failures.push(format!(
                        "{family} zero {k}: computed {} differs from {paper_value} by {abs_diff:e} > {tolerance:e}",
                        r.value
                    ));
                }
                out.push(SpotCheck { family, k, value: r.value, paper_value, abs_diff, tolerance, pass });
            }
            Err(e) => failures.push(format!("{family} zero {k}: {e}")),
        }
    }
    out
}

fn residual_ok(r: &ExtremumRecord) -> bool {
    let slope = extremum_equation_derivative(r.location).map(f64::abs).unwrap_or(f64::INFINITY);
    r.residual <= 1e-10 * slope.max(1.0)
}

fn extrema(cfg: &VerifyConfig, failures: &mut Vec<String>) -> Vec<ExtremumRecord> {
    let mut out = Vec::new();
    match find_positive_extrema() {
        Ok((a, b)) => {
            for (r, (want, tol, kind)) in [a, b].into_iter().zip(PUBLISHED_EXTREMA) {
                if (r.location - want).abs() > tol || r.kind != kind {
                    failures.push(format!(
                        "positive extremum {:?} at {}: expected {kind:?} at {want} ± {tol:e}",
                        r.kind, r.location
                    ));
                }
                out.push(r);
            }
        }
        Err(e) => failures.push(format!("positive extrema: {e}")),
    }
    let mut gaps = Vec::new();
    for n in 1..=cfg.negative_n_max {
        match find_negative_extrema(n) {
            Ok(recs) => {
                if let Some(g) = paired(&recs).and_then(|p| p.gap) {
                    gaps.push((n, g));
                }
                out.extend(recs);
            }
            Err(e) => failures.push(format!("extrema near -{n}: {e}")),
        }
    }
    for r in &out {
        if !residual_ok(r) {
            failures.push(format!("extremum at {}: residual {:e} too large", r.location, r.residual));
        }
    }
    let from_two: Vec<_> = gaps.iter().filter(|(n, _)| *n >= 2).collect();
    for w in from_two.windows(2) {
        if w[1].1 >= w[0].1 {
            failures.push(format!("gap at n = {} ({:e}) does not improve on n = {}", w[1].0, w[1].1, w[0].0));
        }
    }
    if let Some((_, g)) = gaps.iter().find(|(n, _)| *n == GAP_TARGET_N) {
        if *g > GAP_TARGET {
            failures.push(format!("gap at n = {GAP_TARGET_N} is {g:e} > {GAP_TARGET:e}"));
        }
    }
    out
}

fn products(cfg: &VerifyConfig, failures: &mut Vec<String>) -> Vec<ProductCheck> {
    let mut out = Vec::new();
    let Some(&largest) = cfg.product_terms.iter().max() else {
        return out;
    };
    for family in [ZeroFamily::Psi, ZeroFamily::PsiG] {
        let zeros = match zero_values(family, largest) {
            Ok(z) => z,
            Err(e) => {
                failures.push(format!("{family} product zeros: {e}"));
                continue;
            }
        };
        for z in PRODUCT_POINTS {
            let check = (|| -> digamma_zeros::Result<ProductCheck> {
                let target = kernel_ratio(family, z)?;
                let products = cfg
                    .product_terms
                    .iter()
                    .map(|&k| weierstrass_product(family, z, &zeros[..k]))
                    .collect::<digamma_zeros::Result<Vec<_>>>()?;
                let rel_errors: Vec<f64> = products.iter().map(|p| ((p - target) / target).abs()).collect();
                let decreasing = rel_errors.windows(2).all(|w| w[1] < w[0]);
                let last = *rel_errors.last().expect("at least one truncation");
                Ok(ProductCheck {
                    family,
                    z,
                    target,
                    terms: cfg.product_terms.clone(),
                    products,
                    pass: decreasing && last <= PRODUCT_TOLERANCE,
                    rel_errors,
                    tolerance: PRODUCT_TOLERANCE,
                })
            })();
            match check {
                Ok(c) => {
                    if !c.pass {
                        failures.push(format!("{family} product at z = {z}: rel errors {:?}", c.rel_errors));
                    }
                    out.push(c);
                }
                Err(e) => failures.push(format!("{family} product at z = {z}: {e}")),
            }
        }
    }
    out
}

pub fn run_verify(cfg: &VerifyConfig) -> VerificationReport {
    let mut failures = Vec::new();
    let identities = identities(cfg, &mut failures);
    let zeros_spot_checks = spot_checks(&mut failures);
    let extrema = extrema(cfg, &mut failures);
    let products = products(cfg, &mut failures);
    VerificationReport {
        generated_at: chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Millis, true),
        identities,
        zeros_spot_checks,
        extrema,
        products,
        pass: failures.is_empty(),
        failures,
    }
}
