//! Acceptance gate: one line per criterion, nonzero exit if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use gassner_potential::braid::ColoredBraid;
use gassner_potential::gassner::word_matrix;
use gassner_potential::laurent::{LaurentPoly, PolyMatrix};
use gassner_potential::potential::{
    potential_function, potential_via_axis, PotentialKind, SignRule,
};
use gassner_potential::verify::{
    check_braid_relations, check_conjugation, check_jiang, check_lemma_rows, check_markov_with,
    check_routes, check_stabilization, check_torres, trial_rng, CheckConfig, CheckReport,
};
use rand::Rng;

type Criterion = (&'static str, fn() -> Outcome);

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        ok,
        detail: detail.into(),
    }
}

fn p(s: &str, nvars: usize) -> LaurentPoly {
    LaurentPoly::parse(s, nvars).unwrap()
}

fn b(word: &[i64], c: &[u32]) -> ColoredBraid {
    ColoredBraid::from_signed(word, c).unwrap()
}

fn summary(r: &CheckReport) -> String {
    match r.failures.first() {
        None => format!("{} {} instances", r.name, r.trials),
        Some(f) => format!(
            "{} {}/{} failed, first at seed {}: {:?} expected {} got {}",
            r.name,
            r.failures.len(),
            r.trials,
            f.seed,
            f.inputs,
            f.expected,
            f.actual
        ),
    }
}

fn within(limit: Duration, start: Instant) -> (bool, String) {
    let spent = start.elapsed();
    (spent < limit, format!("{:.2?} (limit {:?})", spent, limit))
}

fn golden_values() -> Outcome {
    let start = Instant::now();
    let hopf = b(&[-1, -1], &[1, 2]);
    let chain = b(&[-1, -1, -2, -2], &[1, 2, 3]);
    let m = word_matrix(&hopf).mat;
    let matrix_ok = m == PolyMatrix::from_rows(vec![vec![p("t1^-1*t2^-1", 2)]], 2);
    let weight_ok = hopf.monomial_weight() == p("t1*t2", 2);
    let f_hopf = potential_function(&hopf).unwrap();
    let f_chain = potential_function(&chain).unwrap();
    let values_ok = f_hopf.kind == PotentialKind::Polynomial
        && f_hopf.value.is_one()
        && f_chain.value == p("t2 - t2^-1", 3);
    let (fast, t) = within(Duration::from_secs(1), start);
    outcome(
        matrix_ok && weight_ok && values_ok && fast,
        format!(
            "B̄ = {}, ⟨⟩ = {}, Hopf ∇ = {}, chain ∇ = {}, {t}",
            m[(0, 0)],
            hopf.monomial_weight(),
            f_hopf.value,
            f_chain.value
        ),
    )
}

fn markov_suite() -> Outcome {
    let start = Instant::now();
    let cfg = CheckConfig::default().with_trials(200).with_seed(2024);
    let conj = check_conjugation(&cfg, SignRule::Standard);
    let stab = check_stabilization(&cfg, SignRule::Standard);
    let (fast, t) = within(Duration::from_secs(60), start);
    let omitted = check_stabilization(&cfg, SignRule::Omitted);
    let omitted_conj = check_conjugation(&cfg, SignRule::Omitted);
    let flipped = check_markov_with(&cfg, SignRule::Flipped);
    let hand = {
        let a = b(&[-1, -1], &[1, 2]);
        let s = b(&[-1, -1, 2], &[1, 2, 2]);
        potential_function(&a).unwrap() == potential_function(&s).unwrap()
    };
    outcome(
        conj.passed()
            && stab.passed()
            && conj.trials == 200
            && stab.trials == 200
            && fast
            && hand
            && !omitted.passed()
            && omitted_conj.passed()
            && flipped.passed(),
        format!(
            "{}; {}; {t}; sign-omitted mutation fails stabilization {}/{} (conjugation {}); \
             (-1)^n mutation is a global negation and stays invariant: {}",
            summary(&conj),
            summary(&stab),
            omitted.failures.len(),
            omitted.trials,
            if omitted_conj.passed() {
                "passes"
            } else {
                "fails"
            },
            flipped.passed()
        ),
    )
}

fn lemma_rows() -> Outcome {
    let start = Instant::now();
    let r = check_lemma_rows(&CheckConfig::default().with_trials(200).with_seed(3));
    let (fast, t) = within(Duration::from_secs(30), start);
    outcome(r.passed() && fast, format!("{}; {t}", summary(&r)))
}

fn braid_relations() -> Outcome {
    let r = check_braid_relations(&CheckConfig::default().with_trials(100).with_seed(4));
    outcome(r.passed(), summary(&r))
}

fn jiang() -> Outcome {
    let r = check_jiang(&CheckConfig::default().with_trials(100).with_seed(5));
    let per_axiom = ["R1", "R2", "R3", "R4"]
        .iter()
        .map(|a| {
            let bad = r.failures.iter().filter(|f| f.inputs[0] == *a).count();
            format!("{a} {}/100", 100 - bad)
        })
        .collect::<Vec<_>>()
        .join(", ");
    outcome(r.passed(), format!("{per_axiom}; {}", summary(&r)))
}

fn routes() -> Outcome {
    let cfg = CheckConfig::default().with_trials(50).with_seed(6);
    let r = check_routes(&cfg);
    let torres = check_torres(&cfg);
    let golden = [b(&[-1, -1], &[1, 2]), b(&[-1, -1, -2, -2], &[1, 2, 3])]
        .iter()
        .all(|br| potential_via_axis(br).unwrap() == potential_function(br).unwrap());
    outcome(
        r.passed() && torres.passed() && golden,
        format!(
            "{}; golden examples agree: {golden}; {}",
            summary(&r),
            summary(&torres)
        ),
    )
}

fn trefoil() -> Outcome {
    let tr = b(&[1, 1, 1], &[1, 1]);
    let f = potential_function(&tr).unwrap();
    let z = p("t1 - t1^-1", 1);
    let conway = &(&z * &z) + &LaurentPoly::one(1);
    let ok = f.kind == PotentialKind::KnotFraction
        && f.value == p("t1^2 - 1 + t1^-2", 1)
        && f.value == conway
        && potential_via_axis(&tr).unwrap() == f;
    outcome(
        ok,
        format!("D = {}, z² + 1 at z = t - t^-1 is {}", f.value, conway),
    )
}

fn random_entry(rng: &mut impl Rng) -> LaurentPoly {
    let terms: Vec<(Vec<i32>, i64)> = (0..rng.gen_range(0..=3))
        .map(|_| {
            let e = (0..3).map(|_| rng.gen_range(-2..=2)).collect();
            (e, rng.gen_range(-3..=3))
        })
        .collect();
    LaurentPoly::from_terms(3, terms)
}

fn determinants() -> Outcome {
    let mut checked = 0;
    let mut bad = Vec::new();
    for i in 0..100u64 {
        let mut rng = trial_rng(8000 + i);
        let n = 1 + (i as usize % 5);
        let rows = (0..n)
            .map(|_| (0..n).map(|_| random_entry(&mut rng)).collect())
            .collect();
        let m = PolyMatrix::from_rows(rows, 3);
        if m.determinant().unwrap() != m.determinant_cofactor().unwrap() {
            bad.push(8000 + i);
        }
        checked += 1;
    }
    outcome(
        bad.is_empty(),
        format!("{checked} matrices 1x1..5x5 over 3 variables, mismatching seeds {bad:?}"),
    )
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("golden values", golden_values),
        ("Markov invariance", markov_suite),
        ("lemma rows and boundary map", lemma_rows),
        ("braid relations and cocycle", braid_relations),
        ("Jiang R1-R4", jiang),
        ("route equivalence and linking formula", routes),
        ("trefoil", trefoil),
        ("Bareiss vs cofactor", determinants),
    ];
    let mut all = true;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let o = run();
        all &= o.ok;
        println!(
            "criterion {} [{}] {}: {}",
            i + 1,
            if o.ok { "PASS" } else { "FAIL" },
            name,
            o.detail
        );
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
