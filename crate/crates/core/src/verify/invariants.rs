use rand::Rng;

use super::markov::stabilize;
use super::random::{random_closed_braid, random_letter};
use super::{describe, run_trials, CheckConfig, CheckReport, Mismatch};
use crate::braid::{ColoredBraid, Crossing, Sign};
use crate::laurent::LaurentPoly;
use crate::potential::{
    axis_potential, knot_denominator, potential_function, potential_via_axis, Potential,
    PotentialKind,
};

/// `a/da + b/db == k · c/dc`, by cross-multiplication.
fn sum_matches(a: &Potential, b: &Potential, k: &LaurentPoly, c: &Potential) -> bool {
    let (da, db, dc) = (a.denominator(), b.denominator(), c.denominator());
    &(&(&a.value * &db) + &(&b.value * &da)) * &dc == &(&(k * &c.value) * &da) * &db
}

fn random_sign(rng: &mut impl Rng) -> Sign {
    if rng.gen_bool(0.5) {
        Sign::Positive
    } else {
        Sign::Negative
    }
}

/// The positive Hopf braid `σ_1^{-2}`, hidden by a few random conjugations
/// and stabilizations, still has potential 1.
fn r1(rng: &mut impl Rng, cfg: &CheckConfig) -> Option<Mismatch> {
    let colors = if rng.gen_bool(0.5) {
        vec![1, 2]
    } else {
        vec![1, 1]
    };
    let mut b = ColoredBraid::from_signed(&[-1, -1], &colors).expect("valid");
    for _ in 0..rng.gen_range(0..=3) {
        let n = b.strands();
        if n < cfg.max_strands.max(3) && rng.gen_bool(0.5) {
            b = stabilize(&b, random_sign(rng));
        } else {
            let g = random_letter(rng, n);
            let start = b.bottom().swapped(g.index);
            let mut word = vec![g];
            word.extend_from_slice(b.word());
            word.push(g.inverse());
            b = ColoredBraid::new(word, start).expect("same strands");
        }
    }
    let f = potential_function(&b);
    let ok = matches!(&f, Ok(p) if p.kind == PotentialKind::Polynomial && p.value.is_one());
    (!ok).then(|| Mismatch::new("R1", &[&b], "1 / (1)", describe(&f)))
}

/// Adding an unlinked trivial strand of any color kills the potential.
fn r2(rng: &mut impl Rng, cfg: &CheckConfig) -> Option<Mismatch> {
    let a = random_closed_braid(rng, &cfg.bounds(1, 1));
    let d = rng.gen_range(1..=a.mu() + 1);
    let b = a.include_strand(d).expect("color at most mu + 1");
    let f = potential_function(&b);
    let ok = matches!(&f, Ok(p) if p.value.is_zero());
    (!ok).then(|| Mismatch::new("R2", &[&a, &b], "0 / (1)", describe(&f)))
}

/// A new strand of any color clasped to the last strand by `σ_n^{-2}`
/// multiplies the potential by `t_{c_n} - t_{c_n}^{-1}`.
fn r3(rng: &mut impl Rng, cfg: &CheckConfig) -> Option<Mismatch> {
    let a = random_closed_braid(rng, &cfg.bounds(1, 1));
    let n = a.strands();
    let d = rng.gen_range(1..=a.mu() + 1);
    let wider = a.include_strand(d).expect("color at most mu + 1");
    let mut word = wider.word().to_vec();
    word.extend([Crossing::neg(n), Crossing::neg(n)]);
    let b = ColoredBraid::new(word, wider.bottom().clone()).expect("index n fits");
    let (fa, fb) = (potential_function(&a), potential_function(&b));
    let ok = match (&fa, &fb) {
        (Ok(pa), Ok(pb)) => {
            let nvars = pb.nvars();
            let pa = pa.extend_vars(nvars);
            let k = knot_denominator(nvars, a.bottom().at(n) as usize);
            &pb.value * &pa.denominator() == &(&k * &pa.value) * &pb.denominator()
        }
        _ => false,
    };
    (!ok).then(|| {
        Mismatch::new(
            "R3",
            &[&a, &b],
            format!("(t{0} - t{0}^-1) * ({1})", a.bottom().at(n), describe(&fa)),
            describe(&fb),
        )
    })
}

/// `f(σ_1^2 α) + f(σ_1^{-2} α) = (t_{c_1}t_{c_2} + t_{c_1}^{-1}t_{c_2}^{-1}) f(α)`.
fn r4(rng: &mut impl Rng, cfg: &CheckConfig) -> Option<Mismatch> {
    let a = random_closed_braid(rng, &cfg.bounds(2, 0));
    let with = |c: Crossing| {
        let mut word = vec![c, c];
        word.extend_from_slice(a.word());
        ColoredBraid::new(word, a.bottom().clone()).expect("pure prefix")
    };
    let (pp, mm) = (with(Crossing::pos(1)), with(Crossing::neg(1)));
    let nvars = a.mu() as usize;
    let m = a.bottom().prefix_product(2, nvars);
    let k = &m + &m.bar_involution();
    let (fa, fp, fm) = (
        potential_function(&a),
        potential_function(&pp),
        potential_function(&mm),
    );
    let ok = match (&fa, &fp, &fm) {
        (Ok(a0), Ok(p), Ok(q)) => sum_matches(p, q, &k, a0),
        _ => false,
    };
    (!ok).then(|| {
        Mismatch::new(
            "R4",
            &[&a, &pp, &mm],
            format!("({k}) * ({})", describe(&fa)),
            format!("{} + {}", describe(&fp), describe(&fm)),
        )
    })
}

/// R1 to R4, one instance of each per trial.
pub fn check_jiang(cfg: &CheckConfig) -> CheckReport {
    run_trials("jiang", cfg, 4, |rng| {
        [r1(rng, cfg), r2(rng, cfg), r3(rng, cfg), r4(rng, cfg)]
            .into_iter()
            .flatten()
            .collect()
    })
}

/// The determinant route against the axis route.
pub fn check_routes(cfg: &CheckConfig) -> CheckReport {
    run_trials("routes", cfg, 1, |rng| {
        let b = random_closed_braid(rng, &cfg.bounds(1, 0));
        let direct = potential_function(&b);
        let axis = potential_via_axis(&b);
        if direct.is_err() || direct != axis {
            vec![Mismatch::new(
                "routes",
                &[&b],
                describe(&direct),
                describe(&axis),
            )]
        } else {
            Vec::new()
        }
    })
}

/// `axis|_{t=1} · (x - x^{-1}) = ∏ (x^{λ} - x^{-λ})` over closure
/// components, `λ` the number of strands of the component.
pub fn torres_identity(b: &ColoredBraid) -> Result<(LaurentPoly, LaurentPoly), String> {
    let axis = axis_potential(b).map_err(|e| e.to_string())?;
    let info = b.closure_info().map_err(|e| e.to_string())?;
    let nvars = axis.nvars();
    let mut at_one = axis;
    for v in 1..nvars {
        at_one = at_one.specialize_one(v).map_err(|e| e.to_string())?;
    }
    let x = |k: i32| LaurentPoly::var_pow(nvars, nvars, k);
    let lhs = &at_one * &(&x(1) - &x(-1));
    let mut rhs = LaurentPoly::one(nvars);
    for l in info.axis_linking() {
        rhs = &rhs * &(&x(l as i32) - &x(-(l as i32)));
    }
    Ok((lhs, rhs))
}

pub fn check_torres(cfg: &CheckConfig) -> CheckReport {
    run_trials("torres", cfg, 1, |rng| {
        let b = random_closed_braid(rng, &cfg.bounds(1, 0));
        match torres_identity(&b) {
            Ok((lhs, rhs)) if lhs == rhs => Vec::new(),
            Ok((lhs, rhs)) => vec![Mismatch::new("torres", &[&b], rhs, lhs)],
            Err(e) => vec![Mismatch::new("torres", &[&b], "axis polynomial", e)],
        }
    })
}

/// `bar(∇) = (-1)^{components} ∇`; for knots `bar(D) = D`.
pub fn check_symmetry(cfg: &CheckConfig) -> CheckReport {
    run_trials("symmetry", cfg, 1, |rng| {
        let b = random_closed_braid(rng, &cfg.bounds(1, 0));
        let f = match potential_function(&b) {
            Ok(f) => f,
            Err(e) => return vec![Mismatch::new("symmetry", &[&b], "potential", e)],
        };
        let expected = match f.kind {
            PotentialKind::KnotFraction => f.value.clone(),
            PotentialKind::Polynomial if f.components % 2 == 0 => f.value.clone(),
            PotentialKind::Polynomial => -&f.value,
        };
        let bar = f.value.bar_involution();
        if bar == expected {
            Vec::new()
        } else {
            vec![Mismatch::new("symmetry", &[&b], expected, bar)]
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(word: &[i64], c: &[u32]) -> ColoredBraid {
        ColoredBraid::from_signed(word, c).unwrap()
    }

    #[test]
    fn torres_on_small_braids() {
        for br in [
            b(&[], &[1, 1]),
            b(&[1, 1, 1], &[1, 1]),
            b(&[-1, -1, -2, -2], &[1, 2, 3]),
        ] {
            let (lhs, rhs) = torres_identity(&br).unwrap();
            assert_eq!(lhs, rhs, "{br}");
        }
    }

    #[test]
    fn r4_coefficient_on_trefoil_family() {
        let a = b(&[1], &[1, 1]);
        let fa = potential_function(&a).unwrap();
        let fp = potential_function(&b(&[1, 1, 1], &[1, 1])).unwrap();
        let fm = potential_function(&b(&[-1, -1, 1], &[1, 1])).unwrap();
        let plus = LaurentPoly::parse("t1^2 + t1^-2", 1).unwrap();
        let minus = LaurentPoly::parse("t1^2 - t1^-2", 1).unwrap();
        assert!(sum_matches(&fp, &fm, &plus, &fa));
        assert!(!sum_matches(&fp, &fm, &minus, &fa));
    }

    #[test]
    fn small_runs_pass() {
        let cfg = CheckConfig::default().with_trials(15).with_seed(9);
        for r in [
            check_jiang(&cfg),
            check_routes(&cfg),
            check_torres(&cfg),
            check_symmetry(&cfg),
        ] {
            assert!(r.passed(), "{}: {:?}", r.name, r.failures);
        }
    }
}
