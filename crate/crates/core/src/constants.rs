//! Mathematical constants shared by every closed form in the crate.

use serde::{Deserialize, Serialize};

/// Euler–Mascheroni constant γ.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;
/// Apéry's constant ζ(3).
pub const ZETA3: f64 = 1.202_056_903_159_594_2;
/// log(2π).
pub const LN_2PI: f64 = 1.837_877_066_409_345_5;
/// ζ'(−1) = 1/12 − log A (A is Glaisher's constant).
pub const ZETA_PRIME_MINUS1: f64 = -0.165_421_143_700_450_93;

/// The constants that enter the closed-form identities and the extremum
/// equation. Passed by value so a caller can evaluate the formulas with a
/// perturbed set (the verification harness does this to exercise its failure
/// path).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Constants {
    pub gamma: f64,
    pub pi: f64,
    pub zeta3: f64,
    /// log 2π
    #[serde(rename = "L")]
    pub l: f64,
    /// ½ + ½ log 2π
    pub c: f64,
}

impl Constants {
    pub fn standard() -> Self {
        Self { gamma: EULER_GAMMA, pi: std::f64::consts::PI, zeta3: ZETA3, l: LN_2PI, c: 0.5 * (1.0 + LN_2PI) }
    }
}

impl Default for Constants {
    fn default() -> Self {
        Self::standard()
    }
}
