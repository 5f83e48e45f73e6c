//! Safeguarded Newton iteration on a sign-change bracket.

use crate::error::{Error, Result};

pub const MAX_ITERATIONS: usize = 100;

/// Outcome of [`newton_bisect`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Root {
    pub x: f64,
    pub fx: f64,
    pub dfx: f64,
    /// Final bracket, always containing `x`.
    pub lo: f64,
    pub hi: f64,
    pub iterations: usize,
}

fn ulp(x: f64) -> f64 {
    let a = x.abs();
    if a == 0.0 {
        return f64::MIN_POSITIVE;
    }
    f64::from_bits(a.to_bits() + 1) - a
}

/// Finds a root of `f` on `[lo, hi]` where `f(lo)` and `f(hi)` differ in sign.
///
/// `f` returns `(value, derivative)`. Newton steps are taken from `guess`
/// (or the midpoint) and replaced by bisection whenever they leave the current
/// bracket. Iteration stops once `|f(x)| <= rtol * max(1, |f'(x)|)` or the
/// bracket is two ulps wide.
pub fn newton_bisect<F>(mut f: F, lo: f64, hi: f64, guess: Option<f64>, rtol: f64) -> Result<Root>
where
    F: FnMut(f64) -> Result<(f64, f64)>,
{
    let (mut lo, mut hi) = (lo.min(hi), lo.max(hi));
    let (flo, _) = f(lo)?;
    let (fhi, _) = f(hi)?;
    if flo == 0.0 {
        return Ok(Root { x: lo, fx: 0.0, dfx: f(lo)?.1, lo, hi, iterations: 0 });
    }
    if fhi == 0.0 {
        return Ok(Root { x: hi, fx: 0.0, dfx: f(hi)?.1, lo, hi, iterations: 0 });
    }
    if (flo < 0.0) == (fhi < 0.0) {
        return Err(Error::NoSignChange { lo, hi, samples: vec![(lo, flo), (hi, fhi)] });
    }
    let lo_negative = flo < 0.0;

    let mut x = match guess {
        Some(g) if g > lo && g < hi => g,
        _ => 0.5 * (lo + hi),
    };
    let mut best: Option<Root> = None;

    for it in 1..=MAX_ITERATIONS {
        let (fx, dfx) = f(x)?;
        let cand = Root { x, fx, dfx, lo, hi, iterations: it };
        if best.is_none_or(|b| fx.abs() < b.fx.abs()) {
            best = Some(cand);
        }
        if fx.abs() <= rtol * dfx.abs().max(1.0) {
            return Ok(cand);
        }
        if (fx < 0.0) == lo_negative {
            lo = x;
        } else {
            hi = x;
        }
        if hi - lo <= 2.0 * ulp(lo).max(ulp(hi)) {
            let mut b = match best {
                Some(b) if b.x >= lo && b.x <= hi => b,
                _ => {
                    let mid = 0.5 * (lo + hi);
                    let (fm, dm) = f(mid)?;
                    Root { x: mid, fx: fm, dfx: dm, lo, hi, iterations: it }
                }
            };
            b.lo = lo;
            b.hi = hi;
            b.iterations = it;
            return Ok(b);
        }
        let newton = x - fx / dfx;
        x = if newton.is_finite() && newton > lo && newton < hi && newton != x { newton } else { 0.5 * (lo + hi) };
    }
    let b = best.expect("at least one iteration ran");
    Err(Error::IterationLimit { iterations: MAX_ITERATIONS, x: b.x, fx: b.fx })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cubic_root() {
        let r = newton_bisect(|x| Ok((x * x * x - 2.0, 3.0 * x * x)), 0.0, 3.0, None, 1e-14).unwrap();
        assert!((r.x - 2f64.cbrt()).abs() < 1e-14);
        assert!(r.lo <= r.x && r.x <= r.hi);
    }

    #[test]
    fn bad_newton_guess_falls_back_to_bisection() {
        // atan has Newton divergence from |x| > 1.39
        let r = newton_bisect(|x| Ok((x.atan(), 1.0 / (1.0 + x * x))), -20.0, 10.0, Some(9.0), 1e-15).unwrap();
        assert!(r.x.abs() < 1e-14);
    }

    #[test]
    fn no_sign_change() {
        let e = newton_bisect(|x| Ok((x * x + 1.0, 2.0 * x)), -1.0, 1.0, None, 1e-12).unwrap_err();
        assert!(matches!(e, Error::NoSignChange { .. }));
    }

    #[test]
    fn flat_step_function_terminates_on_width() {
        // derivative zero everywhere: Newton is useless, bisection must finish
        let r = newton_bisect(|x| Ok((if x < 0.3 { -1.0 } else { 1.0 }, 0.0)), 0.0, 1.0, None, 1e-12).unwrap();
        assert!((r.hi - r.lo) <= 4.0 * f64::EPSILON);
        assert!((r.x - 0.3).abs() < 1e-15);
    }
}
