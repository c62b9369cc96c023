//! Monte-Carlo channel simulation.
//!
//! Trial `i` under seed `s` draws from `ChaCha8Rng::seed_from_u64(s)` with
//! its stream set to `i`, so every trial is reproducible on its own and the
//! report does not depend on how trials are scheduled. Within a trial the
//! draws are: the `k` message symbols (uniform), the error support
//! (`t` distinct positions, uniform), then the `t` error values (uniform
//! over the nonzero elements).

use std::time::{Duration, Instant};

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::code::Code;
use crate::decoder::{decode, DecodeError, Status};
use crate::gf::Elem;

/// Name of the generator, printed in report headers.
pub const PRNG_NAME: &str = "ChaCha8 (seed_from_u64(seed), stream = trial index)";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SimError {
    #[error("error weight {t} exceeds the code length {n}")]
    InvalidWeight { t: usize, n: usize },
    #[error("at least one trial is required")]
    NoTrials,
    #[error(transparent)]
    Decode(#[from] DecodeError),
}

/// How to schedule independent trials.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Execution {
    Sequential,
    /// Uses rayon when built with the `parallel` feature; sequential otherwise.
    Parallel,
}

impl Default for Execution {
    fn default() -> Execution {
        if cfg!(feature = "parallel") {
            Execution::Parallel
        } else {
            Execution::Sequential
        }
    }
}

/// Inputs of one trial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrialInput {
    pub message: Vec<Elem>,
    /// Additive error of weight exactly `t`.
    pub error: Vec<Elem>,
}

impl TrialInput {
    /// Draws trial `index` for the given seed.
    pub fn draw(code: &Code, seed: u64, index: u64, t: usize) -> TrialInput {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(index);
        let elems: Vec<Elem> = code.field().elements().collect();
        let message = (0..code.dimension())
            .map(|_| elems[rng.gen_range(0..elems.len())])
            .collect();
        let mut error = vec![Elem::ZERO; code.len()];
        let support = sample(&mut rng, code.len(), t).into_vec();
        for pos in support {
            error[pos] = elems[rng.gen_range(1..elems.len())];
        }
        TrialInput { message, error }
    }

    pub fn received(&self, code: &Code) -> Vec<Elem> {
        let f = code.field();
        code.encode(&self.message)
            .expect("message length")
            .iter()
            .zip(&self.error)
            .map(|(&c, &e)| f.add(c, e))
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrialOutcome {
    pub index: u64,
    pub recovered: bool,
    pub status: Status,
    pub elapsed: Duration,
}

/// Aggregate over all trials, ordered by trial index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimReport {
    pub seed: u64,
    pub weight: usize,
    pub outcomes: Vec<TrialOutcome>,
}

impl SimReport {
    pub fn trials(&self) -> usize {
        self.outcomes.len()
    }

    pub fn successes(&self) -> usize {
        self.outcomes.iter().filter(|o| o.recovered).count()
    }

    pub fn failures(&self) -> usize {
        self.trials() - self.successes()
    }

    pub fn count_status(&self, status: Status) -> usize {
        self.outcomes.iter().filter(|o| o.status == status).count()
    }

    pub fn mean_decode_time(&self) -> Duration {
        let total: Duration = self.outcomes.iter().map(|o| o.elapsed).sum();
        total / self.trials().max(1) as u32
    }

    /// The deterministic part of the report (no timings).
    pub fn summary(&self, code: &Code) -> String {
        format!(
            "# plane-ag simulate\n\
             # prng {PRNG_NAME}\n\
             code n={} k={} u={} d_u={}\n\
             seed={} weight={} trials={}\n\
             successes={} failures={} low-confidence={} failed-verification={}\n",
            code.len(),
            code.dimension(),
            code.u(),
            code.d_u(),
            self.seed,
            self.weight,
            self.trials(),
            self.successes(),
            self.failures(),
            self.count_status(Status::LowConfidence),
            self.count_status(Status::FailedVerification),
        )
    }
}

fn run_trial(code: &Code, seed: u64, index: u64, t: usize) -> Result<TrialOutcome, DecodeError> {
    let input = TrialInput::draw(code, seed, index, t);
    let v = input.received(code);
    let start = Instant::now();
    let result = decode(code, &v)?;
    let elapsed = start.elapsed();
    Ok(TrialOutcome {
        index,
        recovered: result.message == input.message,
        status: result.status,
        elapsed,
    })
}

/// Runs `trials` independent encode-corrupt-decode rounds with errors of weight `t`.
pub fn simulate(
    code: &Code,
    seed: u64,
    trials: usize,
    t: usize,
    exec: Execution,
) -> Result<SimReport, SimError> {
    if trials == 0 {
        return Err(SimError::NoTrials);
    }
    if t > code.len() {
        return Err(SimError::InvalidWeight { t, n: code.len() });
    }
    let outcomes = match exec {
        #[cfg(feature = "parallel")]
        Execution::Parallel => {
            use rayon::prelude::*;
            (0..trials as u64)
                .into_par_iter()
                .map(|i| run_trial(code, seed, i, t))
                .collect::<Result<Vec<_>, _>>()?
        }
        _ => (0..trials as u64)
            .map(|i| run_trial(code, seed, i, t))
            .collect::<Result<Vec<_>, _>>()?,
    };
    Ok(SimReport {
        seed,
        weight: t,
        outcomes,
    })
}
