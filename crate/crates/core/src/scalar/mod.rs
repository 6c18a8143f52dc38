//! Exact arithmetic in cyclotomic fields.

mod cyclo;
mod interval;
mod parse;

pub use cyclo::{chebyshev, chebyshev_table, cyclo, cyclotomic_polynomial, CycloNumber, Sign};
pub use parse::parse_scalar;

use crate::error::{Error, Result};

/// How scalars are computed and reported.
#[derive(Debug, Clone, PartialEq)]
pub enum ScalarMode {
    ExactRational,
    Cyclotomic(u32),
    /// Exact computation, decimal reporting with the given number of digits.
    Float(usize),
}

/// The loop value δ together with the arithmetic regime.
#[derive(Debug, Clone, PartialEq)]
pub struct ScalarContext {
    pub mode: ScalarMode,
    pub delta: CycloNumber,
}

impl ScalarContext {
    pub fn new(mode: ScalarMode, delta: CycloNumber) -> Result<Self> {
        if !delta.is_real() {
            return Err(Error::NotReal);
        }
        let delta = match mode {
            ScalarMode::ExactRational if !delta.is_rational() => {
                return Err(Error::Invalid("delta is not rational".into()))
            }
            ScalarMode::Cyclotomic(n) if delta.is_rational() => {
                CycloNumber::from_rational(&delta.to_rational().unwrap()).promote(n)
            }
            ScalarMode::Cyclotomic(n) => {
                let c = delta.conductor();
                let l = num_integer::lcm(c, n);
                if l != n {
                    return Err(Error::Invalid(format!(
                        "delta needs conductor {c}, not available in Q(zeta_{n})"
                    )));
                }
                delta.promote(n)
            }
            _ => delta,
        };
        Ok(ScalarContext { mode, delta })
    }

    /// Render a scalar according to the context.
    pub fn render(&self, x: &CycloNumber) -> String {
        match self.mode {
            ScalarMode::Float(digits) => x.approx_string(digits),
            _ => x.to_string(),
        }
    }
}
