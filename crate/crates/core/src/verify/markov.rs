use rand::Rng;

use super::random::random_closed_braid;
use super::{describe, run_trials, CheckConfig, CheckReport, Mismatch};
use crate::braid::{ColoredBraid, Crossing, Sign};
use crate::potential::{potential_function_with, SignRule};

/// `β = w[..k]·w[k..]` against `w[k..]·w[..k]`, colored from the trace.
fn conjugation_trial(rng: &mut impl Rng, cfg: &CheckConfig, rule: SignRule) -> Option<Mismatch> {
    let b = random_closed_braid(rng, &cfg.bounds(1, 0));
    let k = rng.gen_range(0..=b.word().len());
    let mut word = b.word()[k..].to_vec();
    word.extend_from_slice(&b.word()[..k]);
    let rotated = ColoredBraid::new(word, b.trace()[k].clone()).expect("same strands");
    let before = potential_function_with(&b, rule);
    let after = potential_function_with(&rotated, rule);
    (before.is_err() || before != after).then(|| {
        Mismatch::new(
            "conjugation",
            &[&b, &rotated],
            describe(&before),
            describe(&after),
        )
    })
}

/// `α` against `i_{c_n}(α)·σ_n^{±1}`.
fn stabilization_trial(rng: &mut impl Rng, cfg: &CheckConfig, rule: SignRule) -> Option<Mismatch> {
    let a = random_closed_braid(rng, &cfg.bounds(1, 1));
    let sign = if rng.gen_bool(0.5) {
        Sign::Positive
    } else {
        Sign::Negative
    };
    let stab = stabilize(&a, sign);
    let before = potential_function_with(&a, rule);
    let after = potential_function_with(&stab, rule);
    (before.is_err() || before != after).then(|| {
        Mismatch::new(
            "stabilization",
            &[&a, &stab],
            describe(&before),
            describe(&after),
        )
    })
}

pub(crate) fn stabilize(a: &ColoredBraid, sign: Sign) -> ColoredBraid {
    let n = a.strands();
    let wider = a.include_strand(a.bottom().at(n)).expect("existing color");
    let mut word = wider.word().to_vec();
    word.push(Crossing::new(n, sign));
    ColoredBraid::new(word, wider.bottom().clone()).expect("index n fits n + 1 strands")
}

/// Conjugation instances only.
pub fn check_conjugation(cfg: &CheckConfig, rule: SignRule) -> CheckReport {
    run_trials("conjugation", cfg, 1, |rng| {
        conjugation_trial(rng, cfg, rule).into_iter().collect()
    })
}

/// Stabilization instances only.
pub fn check_stabilization(cfg: &CheckConfig, rule: SignRule) -> CheckReport {
    run_trials("stabilization", cfg, 1, |rng| {
        stabilization_trial(rng, cfg, rule).into_iter().collect()
    })
}

/// One conjugation and one stabilization instance per trial.
pub fn check_markov(cfg: &CheckConfig) -> CheckReport {
    check_markov_with(cfg, SignRule::Standard)
}

pub fn check_markov_with(cfg: &CheckConfig, rule: SignRule) -> CheckReport {
    run_trials("markov", cfg, 2, |rng| {
        let mut out: Vec<Mismatch> = conjugation_trial(rng, cfg, rule).into_iter().collect();
        out.extend(stabilization_trial(rng, cfg, rule));
        out
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::potential::potential_function;

    #[test]
    fn stabilized_hopf() {
        let a = ColoredBraid::from_signed(&[-1, -1], &[1, 2]).unwrap();
        for sign in [Sign::Positive, Sign::Negative] {
            let s = stabilize(&a, sign);
            assert_eq!(s.bottom().as_slice(), &[1, 2, 2]);
            assert_eq!(
                potential_function(&s).unwrap(),
                potential_function(&a).unwrap()
            );
        }
    }

    #[test]
    fn global_negation_is_still_invariant() {
        let cfg = CheckConfig::default().with_trials(30);
        assert!(check_markov_with(&cfg, SignRule::Flipped).passed());
    }

    #[test]
    fn omitted_sign_breaks_stabilization_only() {
        let cfg = CheckConfig::default().with_trials(30);
        assert!(check_conjugation(&cfg, SignRule::Omitted).passed());
        let r = check_stabilization(&cfg, SignRule::Omitted);
        assert!(!r.passed());
        assert!(r.failures.iter().all(|f| f.inputs[0] == "stabilization"));
    }
}
