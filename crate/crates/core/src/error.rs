use std::fmt;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("pole: {x} is within the guard radius of a non-positive integer")]
    Pole { x: f64 },

    #[error("{function}: argument {x} is outside the domain ({requirement})")]
    Domain { function: &'static str, x: f64, requirement: &'static str },

    #[error("no convergence after {iterations} iterations (x = {x}, f(x) = {fx})")]
    IterationLimit { iterations: usize, x: f64, fx: f64 },

    #[error("no sign change on [{lo}, {hi}]; sampled {}", SampleList(.samples))]
    NoSignChange { lo: f64, hi: f64, samples: Vec<(f64, f64)> },

    #[error("degenerate input: {0}")]
    Degenerate(String),

    #[error("no extremum found near -{n} after scanning {scanned} points")]
    NoneFound { n: u64, scanned: usize },

    #[error("{family} zero #{index}: {source}")]
    AtIndex { family: &'static str, index: u64, source: Box<Error> },
}

struct SampleList<'a>(&'a [(f64, f64)]);

impl fmt::Display for SampleList<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (x, y)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "f({x:e})={y:e}")?;
        }
        Ok(())
    }
}
