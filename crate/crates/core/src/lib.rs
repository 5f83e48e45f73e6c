//! Zeros of the digamma function ψ and of ψ_G = G'/G (the Barnes G
//! log-derivative), closed-form sums over those zeros, the genus-one
//! products they define, and the extrema of the hyperfactorial
//! K(x) = Γ(x)^(x−1) / G(x).
//!
//! Everything runs in `f64` on the real line. The kernels in [`special`] are
//! written against a shift-then-asymptotic scheme; the other modules build on
//! them:
//!
//! * [`zeros`]: bracketed root finding for α_k (zeros of ψ) and β_k (zeros of
//!   ψ_G) plus the arctan/Hermite asymptotic forms.
//! * [`series`]: the six zero-sum identities and the two products.
//! * [`hyperfactorial`]: log K, the extremum equation, and the Lambert-W
//!   approximation for the extrema near the negative integers.

pub mod constants;
pub mod error;
pub mod hyperfactorial;
pub mod roots;
pub mod series;
pub mod special;
pub mod sum;
pub mod zeros;

pub use constants::Constants;
pub use error::{Error, Result};
pub use hyperfactorial::{ExtremumKind, ExtremumRecord};
pub use series::{IdentityId, SeriesResult};
pub use zeros::{ApproxForm, ZeroFamily, ZeroRecord};
