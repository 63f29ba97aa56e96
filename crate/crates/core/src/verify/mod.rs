//! Seeded randomized checks of the identities the potential function rests
//! on. Each check returns a [`CheckReport`]; an empty failure list means it
//! passed.
//!
//! Trial `i` of a check run with seed `s` draws everything from
//! `ChaCha8Rng::seed_from_u64(s.wrapping_add(i))`, and that per-trial seed
//! is what a [`Failure`] records, so [`replay`] reproduces it alone.

mod algebra;
mod invariants;
mod markov;
pub mod random;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::braid::ColoredBraid;
use crate::potential::{Potential, PotentialError};

pub use algebra::{check_braid_relations, check_lemma_rows};
pub use invariants::{check_jiang, check_routes, check_symmetry, check_torres};
pub use markov::{check_conjugation, check_markov, check_markov_with, check_stabilization};

/// Trial count, size bounds and base seed shared by all checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckConfig {
    pub trials: usize,
    pub max_strands: usize,
    pub max_len: usize,
    pub max_colors: u32,
    pub seed: u64,
}

impl Default for CheckConfig {
    fn default() -> Self {
        CheckConfig {
            trials: 200,
            max_strands: 6,
            max_len: 12,
            max_colors: 4,
            seed: 0,
        }
    }
}

impl CheckConfig {
    pub fn with_trials(self, trials: usize) -> Self {
        CheckConfig { trials, ..self }
    }

    pub fn with_seed(self, seed: u64) -> Self {
        CheckConfig { seed, ..self }
    }

    fn bounds(&self, min_strands: usize, strand_slack: usize) -> random::BraidBounds {
        let max = self
            .max_strands
            .saturating_sub(strand_slack)
            .max(min_strands);
        random::BraidBounds {
            min_strands,
            max_strands: max,
            max_len: self.max_len,
            max_colors: self.max_colors,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub seed: u64,
    pub inputs: Vec<String>,
    pub expected: String,
    pub actual: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub name: String,
    pub trials: usize,
    pub failures: Vec<Failure>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub passed: bool,
    pub config: CheckConfig,
    pub reports: Vec<CheckReport>,
}

/// One failed instance inside a trial, before the seed is attached.
#[derive(Clone, Debug)]
pub(crate) struct Mismatch {
    pub inputs: Vec<String>,
    pub expected: String,
    pub actual: String,
}

impl Mismatch {
    pub(crate) fn new(
        tag: &str,
        braids: &[&ColoredBraid],
        expected: impl ToString,
        actual: impl ToString,
    ) -> Self {
        let mut inputs = vec![tag.to_string()];
        inputs.extend(braids.iter().map(|b| b.to_string()));
        Mismatch {
            inputs,
            expected: expected.to_string(),
            actual: actual.to_string(),
        }
    }
}

pub fn trial_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Runs `trial` for seeds `seed, seed + 1, …` in parallel; each trial
/// covers `per_trial` instances.
pub(crate) fn run_trials<F>(
    name: &str,
    cfg: &CheckConfig,
    per_trial: usize,
    trial: F,
) -> CheckReport
where
    F: Fn(&mut ChaCha8Rng) -> Vec<Mismatch> + Sync,
{
    let failures = (0..cfg.trials as u64)
        .into_par_iter()
        .flat_map_iter(|i| {
            let seed = cfg.seed.wrapping_add(i);
            trial(&mut trial_rng(seed))
                .into_iter()
                .map(move |m| Failure {
                    seed,
                    inputs: m.inputs,
                    expected: m.expected,
                    actual: m.actual,
                })
        })
        .collect();
    CheckReport {
        name: name.to_string(),
        trials: cfg.trials * per_trial,
        failures,
    }
}

/// Re-runs a single trial of a named check at its recorded seed.
pub fn replay(name: &str, cfg: &CheckConfig, seed: u64) -> Option<CheckReport> {
    let one = CheckConfig {
        trials: 1,
        seed,
        ..*cfg
    };
    let report = match name {
        "markov" => check_markov(&one),
        "braid_relations" => check_braid_relations(&one),
        "lemma_rows" => check_lemma_rows(&one),
        "jiang" => check_jiang(&one),
        "routes" => check_routes(&one),
        "torres" => check_torres(&one),
        "symmetry" => check_symmetry(&one),
        _ => return None,
    };
    Some(report)
}

/// Every check with the given configuration.
pub fn run_all(cfg: &CheckConfig) -> SuiteReport {
    let reports = vec![
        check_markov(cfg),
        check_braid_relations(cfg),
        check_lemma_rows(cfg),
        check_jiang(cfg),
        check_routes(cfg),
        check_torres(cfg),
        check_symmetry(cfg),
    ];
    SuiteReport {
        passed: reports.iter().all(CheckReport::passed),
        config: *cfg,
        reports,
    }
}

pub(crate) fn describe(r: &Result<Potential, PotentialError>) -> String {
    match r {
        Ok(p) => format!("{} / ({})", p.value, p.denominator_text()),
        Err(e) => format!("error: {e}"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suite_passes_and_serializes() {
        let cfg = CheckConfig::default().with_trials(10).with_seed(3);
        let suite = run_all(&cfg);
        for r in &suite.reports {
            assert!(r.passed(), "{}: {:?}", r.name, r.failures.first());
        }
        assert!(suite.passed);
        let json = serde_json::to_string(&suite).unwrap();
        let back: SuiteReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, suite);
    }

    #[test]
    fn reports_are_deterministic() {
        let cfg = CheckConfig::default().with_trials(5).with_seed(11);
        assert_eq!(check_routes(&cfg), check_routes(&cfg));
    }

    #[test]
    fn replay_knows_every_check() {
        let cfg = CheckConfig::default();
        for name in [
            "markov",
            "braid_relations",
            "lemma_rows",
            "jiang",
            "routes",
            "torres",
            "symmetry",
        ] {
            let r = replay(name, &cfg, 42).unwrap();
            assert_eq!(r.name, name);
        }
        assert!(replay("nope", &cfg, 0).is_none());
    }
}
