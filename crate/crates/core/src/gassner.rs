//! Reduced colored Gassner matrices.
//!
//! For a `(c, c')`-braid on `n` strands the reduced matrix is `(n-1)×(n-1)`
//! over `Z[t_1^{±1}, …, t_μ^{±1}]`. Matrices compose contravariantly:
//! `B(βγ) = B(γ)·B(β)`.
//!
//! The generator `σ_i` differs from the identity only in column `i`, which
//! holds `t` in row `i-1`, `-t` in row `i` and `1` in row `i+1` (rows outside
//! `1..n-1` are dropped), where `t = t_{c'_{i+1}}` is the color of the strand
//! that passes over. The same column pattern on `n` rows gives the unreduced
//! matrix in the basis `g̃_1, …, g̃_n`; its last row is the vector `v` with
//! `B = [[B̄, 0], [v, 1]]`.

use serde::Serialize;
use thiserror::Error;

use crate::braid::{BraidError, ColorSeq, ColoredBraid, Crossing, Sign};
use crate::laurent::{LaurentError, LaurentPoly, PolyMatrix};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GassnerError {
    #[error("generator index {index} out of range for {strands} strands")]
    IndexOutOfRange { index: usize, strands: usize },
    #[error("colour sequence has {got} entries, expected {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error(transparent)]
    Braid(#[from] BraidError),
    #[error(transparent)]
    Laurent(#[from] LaurentError),
}

/// A reduced colored Gassner matrix with its boundary colorings.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct GassnerMatrix {
    pub source: ColorSeq,
    pub target: ColorSeq,
    #[serde(rename = "rows", serialize_with = "serialize_rows")]
    pub mat: PolyMatrix,
}

fn serialize_rows<S: serde::Serializer>(m: &PolyMatrix, s: S) -> Result<S::Ok, S::Error> {
    m.to_rows().serialize(s)
}

impl GassnerMatrix {
    pub fn identity(colors: &ColorSeq) -> Self {
        GassnerMatrix {
            source: colors.clone(),
            target: colors.clone(),
            mat: PolyMatrix::identity(colors.len() - 1, colors.mu() as usize),
        }
    }

    /// `other ∘ self`: the matrix of `self`'s braid followed by `other`'s.
    pub fn then(&self, other: &GassnerMatrix) -> Result<GassnerMatrix, GassnerError> {
        if self.target != other.source {
            return Err(BraidError::BoundaryMismatch {
                top: self.target.as_slice().to_vec(),
                bottom: other.source.as_slice().to_vec(),
            }
            .into());
        }
        Ok(GassnerMatrix {
            source: self.source.clone(),
            target: other.target.clone(),
            mat: other.mat.mul(&self.mat),
        })
    }
}

/// Nonidentity column of a generator matrix: `(column, [(row, entry)])`,
/// 1-based, on `rows` rows.
fn generator_column(
    rows: usize,
    crossing: Crossing,
    source: &ColorSeq,
    nvars: usize,
) -> Vec<(usize, LaurentPoly)> {
    let i = crossing.index;
    let over = crossing.over_color(source) as usize;
    let (above, diag, below) = match crossing.sign {
        Sign::Positive => {
            let t = LaurentPoly::var(nvars, over);
            (t.clone(), -t, LaurentPoly::one(nvars))
        }
        Sign::Negative => {
            let inv = LaurentPoly::var_pow(nvars, over, -1);
            (LaurentPoly::one(nvars), -inv.clone(), inv)
        }
    };
    let mut col = vec![(i, diag)];
    if i >= 2 {
        col.push((i - 1, above));
    }
    if i < rows {
        col.push((i + 1, below));
    }
    col
}

fn check_generator(n: usize, crossing: Crossing, source: &ColorSeq) -> Result<(), GassnerError> {
    if source.len() != n {
        return Err(GassnerError::LengthMismatch {
            expected: n,
            got: source.len(),
        });
    }
    if n < 2 || crossing.index == 0 || crossing.index >= n {
        return Err(GassnerError::IndexOutOfRange {
            index: crossing.index,
            strands: n,
        });
    }
    Ok(())
}

/// Reduced matrix of the single letter `crossing` acting on boundary
/// coloring `source`, with entries in `nvars` variables (`nvars ≥ μ`).
pub fn generator_matrix_in(
    n: usize,
    crossing: Crossing,
    source: &ColorSeq,
    nvars: usize,
) -> Result<GassnerMatrix, GassnerError> {
    check_generator(n, crossing, source)?;
    let mut mat = PolyMatrix::identity(n - 1, nvars);
    for (row, entry) in generator_column(n - 1, crossing, source, nvars) {
        mat[(row - 1, crossing.index - 1)] = entry;
    }
    Ok(GassnerMatrix {
        source: source.clone(),
        target: source.swapped(crossing.index),
        mat,
    })
}

pub fn generator_matrix(
    n: usize,
    crossing: Crossing,
    source: &ColorSeq,
) -> Result<GassnerMatrix, GassnerError> {
    generator_matrix_in(n, crossing, source, source.mu() as usize)
}

/// Reduced matrix of a whole word.
pub fn word_matrix(b: &ColoredBraid) -> GassnerMatrix {
    let n = b.strands();
    let mu = b.mu() as usize;
    let mut acc = GassnerMatrix::identity(b.bottom());
    for (c, state) in b.word().iter().zip(b.trace()) {
        let g = generator_matrix_in(n, *c, state, mu).expect("braid letters are validated");
        acc = acc.then(&g).expect("trace is consistent");
    }
    acc
}

/// Unreduced `n×n` matrix of a single letter in the basis `g̃_1, …, g̃_n`.
pub fn unreduced_generator_matrix(
    n: usize,
    crossing: Crossing,
    source: &ColorSeq,
) -> Result<PolyMatrix, GassnerError> {
    check_generator(n, crossing, source)?;
    let nvars = source.mu() as usize;
    let mut mat = PolyMatrix::identity(n, nvars);
    for (row, entry) in generator_column(n, crossing, source, nvars) {
        mat[(row - 1, crossing.index - 1)] = entry;
    }
    Ok(mat)
}

/// Unreduced matrix of a word as the product of its letters' unreduced
/// matrices.
pub fn unreduced_word_matrix(b: &ColoredBraid) -> PolyMatrix {
    let n = b.strands();
    let mut acc = PolyMatrix::identity(n, b.mu() as usize);
    for (c, state) in b.word().iter().zip(b.trace()) {
        let g = unreduced_generator_matrix(n, *c, state).expect("braid letters are validated");
        acc = g.mul(&acc);
    }
    acc
}

/// The row `(t_{c_1} - 1, t_{c_1}t_{c_2} - 1, …, t_{c_1}⋯t_{c_n} - 1)`
/// representing the boundary map to `H_0` of the fibre.
pub fn boundary_row(colors: &ColorSeq, nvars: usize) -> Vec<LaurentPoly> {
    let one = LaurentPoly::one(nvars);
    (1..=colors.len())
        .map(|k| &colors.prefix_product(k, nvars) - &one)
        .collect()
}

/// The unreduced matrix `[[B̄, 0], [v, 1]]` of a `(c, c)`-braid, with `v`
/// recovered from the reduced matrix alone:
/// `v = -Σ_i (t_{c_1}⋯t_{c_i} - 1) r_i / (t_{c_1}⋯t_{c_n} - 1)` where `r_i`
/// are the rows of `B̄ - I`.
pub fn unreduced_extend(b: &ColoredBraid) -> Result<PolyMatrix, GassnerError> {
    b.closure_info()?;
    let n = b.strands();
    let nvars = b.mu() as usize;
    let reduced = word_matrix(b).mat;
    let diff = reduced.minus_identity();
    let del = boundary_row(b.bottom(), nvars);
    let weighted = diff.left_mul_row(&del[..n - 1]);
    let total = &del[n - 1];
    let mut out = PolyMatrix::identity(n, nvars);
    for i in 0..n - 1 {
        for j in 0..n - 1 {
            out[(i, j)] = reduced[(i, j)].clone();
        }
    }
    for (j, w) in weighted.iter().enumerate() {
        out[(n - 1, j)] = -w.exact_div(total)?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, nvars: usize) -> LaurentPoly {
        LaurentPoly::parse(s, nvars).unwrap()
    }

    fn colors(c: &[u32]) -> ColorSeq {
        ColorSeq::new(c.to_vec()).unwrap()
    }

    fn b(word: &[i64], c: &[u32]) -> ColoredBraid {
        ColoredBraid::from_signed(word, c).unwrap()
    }

    #[test]
    fn two_strand_generator_is_minus_target_variable() {
        let g = generator_matrix(2, Crossing::pos(1), &colors(&[1, 2])).unwrap();
        assert_eq!(g.target.as_slice(), &[2, 1]);
        // t_{c'_2} with c' = (2, 1)
        assert_eq!(g.mat.to_rows(), vec![vec![p("-t1", 2)]]);
    }

    #[test]
    fn interior_generator_block() {
        let g = generator_matrix(4, Crossing::pos(2), &colors(&[1, 1, 1, 1])).unwrap();
        let expected = PolyMatrix::from_rows(
            vec![
                vec![p("1", 1), p("t1", 1), p("0", 1)],
                vec![p("0", 1), p("-t1", 1), p("0", 1)],
                vec![p("0", 1), p("1", 1), p("1", 1)],
            ],
            1,
        );
        assert_eq!(g.mat, expected);
    }

    #[test]
    fn border_generators() {
        let c = colors(&[1, 2, 3, 1]);
        let first = generator_matrix(4, Crossing::pos(1), &c).unwrap();
        assert_eq!(first.mat.row(0), &[p("-t1", 3), p("0", 3), p("0", 3)]);
        assert_eq!(first.mat.row(1), &[p("1", 3), p("1", 3), p("0", 3)]);
        let last = generator_matrix(4, Crossing::pos(3), &c).unwrap();
        assert_eq!(last.mat.row(1), &[p("0", 3), p("1", 3), p("t3", 3)]);
        assert_eq!(last.mat.row(2), &[p("0", 3), p("0", 3), p("-t3", 3)]);
    }

    #[test]
    fn negative_generator_inverts_positive_one() {
        let c = colors(&[1, 2, 3, 2, 1]);
        for i in 1..5 {
            let fwd = generator_matrix(5, Crossing::pos(i), &c).unwrap();
            let back = generator_matrix(5, Crossing::neg(i), &fwd.target).unwrap();
            assert_eq!(back.target, c);
            let id = PolyMatrix::identity(4, 3);
            assert_eq!(back.mat.mul(&fwd.mat), id);
            assert_eq!(fwd.mat.mul(&back.mat), id);
        }
    }

    #[test]
    fn generator_errors() {
        let c = colors(&[1, 2, 1]);
        assert!(matches!(
            generator_matrix(3, Crossing::pos(3), &c),
            Err(GassnerError::IndexOutOfRange {
                index: 3,
                strands: 3
            })
        ));
        assert!(matches!(
            generator_matrix(4, Crossing::pos(1), &c),
            Err(GassnerError::LengthMismatch { .. })
        ));
        assert!(generator_matrix(1, Crossing::pos(1), &colors(&[1])).is_err());
    }

    #[test]
    fn hopf_word_matrix() {
        let m = word_matrix(&b(&[-1, -1], &[1, 2]));
        assert_eq!(m.mat.to_rows(), vec![vec![p("t1^-1*t2^-1", 2)]]);
        assert_eq!(m.source, m.target);
    }

    #[test]
    fn identity_and_cancelling_pairs() {
        let c = &[1, 2, 1, 3];
        assert_eq!(word_matrix(&b(&[], c)).mat, PolyMatrix::identity(3, 3));
        assert_eq!(word_matrix(&b(&[2, -2], c)).mat, PolyMatrix::identity(3, 3));
        assert_eq!(word_matrix(&b(&[-3, 3], c)).mat, PolyMatrix::identity(3, 3));
        assert_eq!(word_matrix(&b(&[], &[1])).mat.nrows(), 0);
    }

    #[test]
    fn hopf_unreduced_extension() {
        let h = b(&[-1, -1], &[1, 2]);
        let u = unreduced_extend(&h).unwrap();
        assert_eq!(u.row(0), &[p("t1^-1*t2^-1", 2), p("0", 2)]);
        assert_eq!(u.row(1), &[p("t2^-1 - t1^-1*t2^-1", 2), p("1", 2)]);
        assert_eq!(u, unreduced_word_matrix(&h));
    }

    #[test]
    fn identity_unreduced_extension() {
        let u = unreduced_extend(&b(&[], &[1, 2, 1])).unwrap();
        assert_eq!(u, PolyMatrix::identity(3, 2));
    }

    #[test]
    fn unreduced_extension_has_unit_last_column() {
        let u = unreduced_extend(&b(&[1, 1, -2, -2, 3, 3, 1, -2, -2, -1], &[1, 1, 2, 2])).unwrap();
        for i in 0..3 {
            assert!(u[(i, 3)].is_zero());
        }
        assert!(u[(3, 3)].is_one());
    }

    #[test]
    fn unreduced_extension_requires_closed_braid() {
        assert!(matches!(
            unreduced_extend(&b(&[1], &[1, 2])),
            Err(GassnerError::Braid(BraidError::NotClosed { .. }))
        ));
    }

    #[test]
    fn boundary_row_is_preserved() {
        let br = b(&[1, -2, 1, 3, 3, -1, 2], &[1, 2, 2, 1]);
        let target = br.top().clone();
        // not closed; the boundary map still intertwines source and target
        let u = unreduced_word_matrix(&br);
        assert_eq!(
            u.left_mul_row(&boundary_row(&target, 2)),
            boundary_row(br.bottom(), 2)
        );
    }

    #[test]
    fn single_color_is_burau() {
        // reduced Burau of σ_1 on 3 strands in this convention
        let g = generator_matrix(3, Crossing::pos(1), &colors(&[1, 1, 1])).unwrap();
        assert_eq!(g.mat.row(0), &[p("-t1", 1), p("0", 1)]);
        assert_eq!(g.mat.row(1), &[p("1", 1), p("1", 1)]);
    }

    #[test]
    fn matrix_json() {
        let m = word_matrix(&b(&[-1, -1], &[1, 2]));
        let s = serde_json::to_string(&m).unwrap();
        assert_eq!(
            s,
            r#"{"source":[1,2],"target":[1,2],"rows":[[{"nvars":2,"terms":[{"coeff":"1","exp":[-1,-1]}]}]]}"#
        );
    }
}
