use rand::Rng;

use super::random::{random_closed_braid, random_coloring, random_letter, random_word};
use super::{run_trials, CheckConfig, CheckReport, Mismatch};
use crate::braid::{ColorSeq, ColoredBraid, Crossing, Sign};
use crate::gassner::{boundary_row, unreduced_extend, unreduced_word_matrix, word_matrix};
use crate::laurent::{LaurentPoly, PolyMatrix};

fn braid(word: Vec<Crossing>, colors: &ColorSeq) -> ColoredBraid {
    ColoredBraid::new(word, colors.clone()).expect("indices chosen in range")
}

fn same_matrix(tag: &str, left: &ColoredBraid, right: &ColoredBraid) -> Option<Mismatch> {
    let (l, r) = (word_matrix(left), word_matrix(right));
    (l != r).then(|| {
        Mismatch::new(
            tag,
            &[left, right],
            format!("{:?}", l.mat.to_rows()),
            format!("{:?}", r.mat.to_rows()),
        )
    })
}

fn random_sign(rng: &mut impl Rng) -> Sign {
    if rng.gen_bool(0.5) {
        Sign::Positive
    } else {
        Sign::Negative
    }
}

/// Braid relations, far commutation, cancelling pairs and the
/// anti-homomorphism property on one random coloring.
fn relations_trial(rng: &mut impl Rng, cfg: &CheckConfig) -> Vec<Mismatch> {
    let n = rng.gen_range(3..=cfg.max_strands.max(3));
    let c = random_coloring(rng, n, cfg.max_colors.max(1));
    let mut out = Vec::new();

    let i = rng.gen_range(1..=n - 2);
    let e = random_sign(rng);
    let (a, b) = (Crossing::new(i, e), Crossing::new(i + 1, e));
    out.extend(same_matrix(
        "braid relation",
        &braid(vec![a, b, a], &c),
        &braid(vec![b, a, b], &c),
    ));

    if n >= 4 {
        let i = rng.gen_range(1..=n - 3);
        let j = rng.gen_range(i + 2..n);
        let a = Crossing::new(i, random_sign(rng));
        let b = Crossing::new(j, random_sign(rng));
        out.extend(same_matrix(
            "far commutation",
            &braid(vec![a, b], &c),
            &braid(vec![b, a], &c),
        ));
    }

    let g = random_letter(rng, n);
    let pair = braid(vec![g, g.inverse()], &c);
    if word_matrix(&pair).mat != PolyMatrix::identity(n - 1, c.mu() as usize) {
        out.push(Mismatch::new(
            "inverse",
            &[&pair],
            "identity",
            format!("{:?}", word_matrix(&pair).mat.to_rows()),
        ));
    }

    let word = random_word(rng, n, cfg.max_len);
    let whole = braid(word.clone(), &c);
    let k = rng.gen_range(0..=word.len());
    let first = braid(word[..k].to_vec(), &c);
    let second = braid(word[k..].to_vec(), &whole.trace()[k]);
    let (m1, m2, m) = (
        word_matrix(&first),
        word_matrix(&second),
        word_matrix(&whole),
    );
    let product = m2.mat.mul(&m1.mat);
    if product != m.mat || m.source != m1.source || m.target != m2.target {
        out.push(Mismatch::new(
            "cocycle",
            &[&first, &second],
            format!("{:?}", m.mat.to_rows()),
            format!("{:?}", product.to_rows()),
        ));
    }
    out
}

/// One random coloring per trial.
pub fn check_braid_relations(cfg: &CheckConfig) -> CheckReport {
    run_trials("braid_relations", cfg, 1, |rng| relations_trial(rng, cfg))
}

/// The row identity defining `v`, agreement of the extension with the
/// product of unreduced generator matrices, and `∂ ∘ B = ∂`.
fn lemma_trial(rng: &mut impl Rng, cfg: &CheckConfig) -> Vec<Mismatch> {
    let b = random_closed_braid(rng, &cfg.bounds(2, 0));
    let n = b.strands();
    let nvars = b.mu() as usize;
    let ext = match unreduced_extend(&b) {
        Ok(m) => m,
        Err(e) => return vec![Mismatch::new("lemma", &[&b], "exact extension", e)],
    };
    let mut out = Vec::new();
    let del = boundary_row(b.bottom(), nvars);

    let diff = word_matrix(&b).mat.minus_identity();
    let mut sums = diff.left_mul_row(&del[..n - 1]);
    for (j, s) in sums.iter_mut().enumerate() {
        *s += &(&del[n - 1] * &ext[(n - 1, j)]);
    }
    if sums.iter().any(|s| !s.is_zero()) {
        out.push(Mismatch::new(
            "lemma identity",
            &[&b],
            "zero row",
            format!("{sums:?}"),
        ));
    }

    let product = unreduced_word_matrix(&b);
    if product != ext {
        out.push(Mismatch::new(
            "unreduced routes",
            &[&b],
            format!("{:?}", product.to_rows()),
            format!("{:?}", ext.to_rows()),
        ));
    }

    for (tag, m) in [
        ("boundary (extension)", &ext),
        ("boundary (product)", &product),
    ] {
        let image: Vec<LaurentPoly> = m.left_mul_row(&del);
        if image != del {
            out.push(Mismatch::new(
                tag,
                &[&b],
                format!("{del:?}"),
                format!("{image:?}"),
            ));
        }
    }
    out
}

pub fn check_lemma_rows(cfg: &CheckConfig) -> CheckReport {
    run_trials("lemma_rows", cfg, 1, |rng| lemma_trial(rng, cfg))
}
