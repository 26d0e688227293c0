use super::PadicNum;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug)]
enum State {
    Value(PadicNum),
    /// Partial sum known to vanish modulo p^abs.
    Vanished(i64),
}

/// What [`PadicSum::finish`] does with a total that vanished to precision.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Vanish {
    /// Report [`Error::PrecisionLoss`].
    #[default]
    Error,
    /// Read a total vanishing modulo p^abs with abs ≥ the given exponent as zero.
    ZeroFrom(i64),
}

/// Running sum that tolerates cancellation in partial sums.
///
/// Plain [`PadicNum::add`] refuses a result that vanishes to precision. Long sums
/// can pass through such a state and recover, so the accumulator keeps the
/// absolute precision and only reports the loss if the final value vanished.
#[derive(Clone, Debug)]
pub struct PadicSum {
    p: u64,
    n: u32,
    vanish: Vanish,
    state: State,
}

impl PadicSum {
    pub fn new(p: u64, n: u32) -> Self {
        PadicSum { p, n, vanish: Vanish::Error, state: State::Value(PadicNum::zero(p, n)) }
    }

    pub fn with_policy(p: u64, n: u32, vanish: Vanish) -> Self {
        PadicSum { vanish, ..Self::new(p, n) }
    }

    pub fn push(&mut self, term: &PadicNum) {
        if term.is_zero() {
            return;
        }
        self.state = match self.state {
            State::Value(x) => match x.add(term) {
                Ok(s) => State::Value(s),
                Err(_) => State::Vanished(
                    x.absolute_precision()
                        .unwrap()
                        .min(term.absolute_precision().unwrap()),
                ),
            },
            State::Vanished(abs) => {
                let tabs = term.absolute_precision().unwrap();
                let v = term.valuation().unwrap();
                if v >= abs {
                    State::Vanished(abs.min(tabs))
                } else {
                    State::Value(term.truncate((abs - v) as u32))
                }
            }
        };
    }

    pub fn finish(self) -> Result<PadicNum> {
        match self.state {
            State::Value(x) => Ok(x),
            State::Vanished(abs) if matches!(self.vanish, Vanish::ZeroFrom(f) if abs >= f) => {
                Ok(PadicNum::zero(self.p, self.n))
            }
            State::Vanished(abs) => Err(Error::PrecisionLoss(format!(
                "sum vanishes modulo {}^{} (working precision {})",
                self.p, abs, self.n
            ))),
        }
    }
}

impl Extend<PadicNum> for PadicSum {
    fn extend<T: IntoIterator<Item = PadicNum>>(&mut self, iter: T) {
        for t in iter {
            self.push(&t);
        }
    }
}
