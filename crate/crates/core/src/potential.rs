//! The Conway potential function of a braid closure.
//!
//! For a `(c, c)`-braid `β` on `n` strands,
//!
//! ```text
//! ∇ = (-1)^{n+1} ⟨β⟩ g(det(B̄(β) - I)) / (t_{c_1}⋯t_{c_n} - t_{c_1}^{-1}⋯t_{c_n}^{-1})
//! ```
//!
//! where `g` squares every variable. A second route goes through the
//! closure together with the braid axis: its potential carries an extra
//! variable `x`, and setting `x = 1` then dividing by the same denominator
//! must reproduce `∇`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::braid::{BraidError, ColoredBraid};
use crate::gassner::word_matrix;
use crate::laurent::{LaurentError, LaurentPoly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PotentialError {
    #[error(transparent)]
    Braid(#[from] BraidError),
    #[error("internal invariant violated: {0}")]
    Internal(#[from] LaurentError),
}

impl PotentialError {
    /// True for failures that indicate a bug rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(self, PotentialError::Internal(_))
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PotentialKind {
    /// Closure with at least two components; `value` is `∇` itself.
    Polynomial,
    /// Knot; `value` is `D = (t_k - t_k^{-1})·∇` in the knot's color `k`.
    KnotFraction,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Potential {
    pub components: usize,
    pub kind: PotentialKind,
    pub value: LaurentPoly,
    /// Color of the knot for `KnotFraction`.
    pub knot_color: Option<u32>,
}

impl Potential {
    pub fn nvars(&self) -> usize {
        self.value.nvars()
    }

    /// `∇ = numerator / denominator` with denominator `1` or `t_k - t_k^{-1}`.
    pub fn denominator(&self) -> LaurentPoly {
        match self.knot_color {
            Some(k) => knot_denominator(self.nvars(), k as usize),
            None => LaurentPoly::one(self.nvars()),
        }
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.value
    }

    /// Re-expresses the potential over a ring with more variables.
    pub fn extend_vars(&self, nvars: usize) -> Potential {
        Potential {
            value: self.value.extend_vars(nvars),
            ..self.clone()
        }
    }

    /// Equality of the rational functions `numerator/denominator`.
    pub fn same_function(&self, other: &Potential) -> bool {
        self.nvars() == other.nvars()
            && &self.value * &other.denominator() == &other.value * &self.denominator()
    }

    /// Human-readable denominator, `1` or `t_k - t_k^-1`.
    pub fn denominator_text(&self) -> String {
        match self.knot_color {
            Some(k) => format!("t{k} - t{k}^-1"),
            None => "1".to_string(),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct PotentialJson {
    components: usize,
    kind: PotentialKind,
    value: LaurentPoly,
    denominator: String,
}

impl Serialize for Potential {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        PotentialJson {
            components: self.components,
            kind: self.kind,
            value: self.value.clone(),
            denominator: self.denominator_text(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Potential {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let raw = PotentialJson::deserialize(d)?;
        let knot_color = match raw.kind {
            PotentialKind::Polynomial if raw.denominator == "1" => None,
            PotentialKind::KnotFraction => {
                let k = raw
                    .denominator
                    .strip_prefix('t')
                    .and_then(|r| r.split_once(" - t"))
                    .filter(|(a, b)| b.strip_suffix("^-1") == Some(*a))
                    .and_then(|(a, _)| a.parse::<u32>().ok())
                    .filter(|&k| k >= 1 && k as usize <= raw.value.nvars())
                    .ok_or_else(|| {
                        D::Error::custom(format!("bad denominator `{}`", raw.denominator))
                    })?;
                Some(k)
            }
            PotentialKind::Polynomial => {
                return Err(D::Error::custom(
                    "polynomial kind must have denominator `1`",
                ))
            }
        };
        Ok(Potential {
            components: raw.components,
            kind: raw.kind,
            value: raw.value,
            knot_color,
        })
    }
}

/// `t_k - t_k^{-1}`.
pub fn knot_denominator(nvars: usize, k: usize) -> LaurentPoly {
    &LaurentPoly::var(nvars, k) - &LaurentPoly::var_pow(nvars, k, -1)
}

/// `t_{c_1}⋯t_{c_n} - t_{c_1}^{-1}⋯t_{c_n}^{-1}` in `nvars` variables.
pub fn closure_denominator(b: &ColoredBraid, nvars: usize) -> LaurentPoly {
    let m = b.bottom().prefix_product(b.strands(), nvars);
    &m - &m.bar_involution()
}

/// The overall sign in front of the formula.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum SignRule {
    /// `(-1)^{n+1}`.
    #[default]
    Standard,
    /// `(-1)^n`: every value negated. Still a link invariant.
    Flipped,
    /// No sign at all. Not invariant under stabilization; used to check that
    /// the harness notices a wrong sign.
    Omitted,
}

impl SignRule {
    fn sign(self, n: usize) -> i32 {
        let odd = match self {
            SignRule::Standard => (n + 1) % 2 == 1,
            SignRule::Flipped => n % 2 == 1,
            SignRule::Omitted => false,
        };
        if odd {
            -1
        } else {
            1
        }
    }
}

/// `(-1)^{n+1} ⟨β⟩ g(det(B̄ - I))`, before division.
fn numerator(b: &ColoredBraid, rule: SignRule) -> Result<LaurentPoly, PotentialError> {
    let det = word_matrix(b).mat.minus_identity().determinant()?;
    let n = b.strands();
    let nvars = b.mu() as usize;
    Ok(&(&b.monomial_weight() * &det.square_variables())
        * &LaurentPoly::constant(nvars, rule.sign(n)))
}

/// Divides `num` by the closure denominator, first multiplying by
/// `t_k - t_k^{-1}` when the closure is a knot.
fn finish(b: &ColoredBraid, num: LaurentPoly) -> Result<Potential, PotentialError> {
    let info = b.closure_info()?;
    let nvars = num.nvars();
    let den = closure_denominator(b, nvars);
    if info.component_count() == 1 {
        let k = info.components[0].color;
        let value = (&num * &knot_denominator(nvars, k as usize)).exact_div(&den)?;
        Ok(Potential {
            components: 1,
            kind: PotentialKind::KnotFraction,
            value,
            knot_color: Some(k),
        })
    } else {
        Ok(Potential {
            components: info.component_count(),
            kind: PotentialKind::Polynomial,
            value: num.exact_div(&den)?,
            knot_color: None,
        })
    }
}

/// The potential function of the closure of a `(c, c)`-braid.
pub fn potential_function(b: &ColoredBraid) -> Result<Potential, PotentialError> {
    potential_function_with(b, SignRule::Standard)
}

pub fn potential_function_with(
    b: &ColoredBraid,
    rule: SignRule,
) -> Result<Potential, PotentialError> {
    b.closure_info()?;
    let num = numerator(b, rule)?;
    finish(b, num)
}

/// Potential of the closure together with the braid axis, in `μ + 1`
/// variables with the axis variable `x` last:
/// `(-1)^{n-1} x^{n-1} ⟨β⟩ g(det(x^{-1} B̄ - I))`.
pub fn axis_potential(b: &ColoredBraid) -> Result<LaurentPoly, PotentialError> {
    b.closure_info()?;
    let n = b.strands();
    let nvars = b.mu() as usize + 1;
    let x = nvars;
    let scaled = word_matrix(b)
        .mat
        .extend_vars(nvars)
        .scale(&LaurentPoly::var_pow(nvars, x, -1));
    let det = scaled.minus_identity().determinant()?;
    let sign = if n % 2 == 1 { 1 } else { -1 };
    let prefactor =
        &LaurentPoly::var_pow(nvars, x, n as i32 - 1) * &b.monomial_weight().extend_vars(nvars);
    Ok(&(&prefactor * &det.square_variables()) * &LaurentPoly::constant(nvars, sign))
}

/// The potential function recovered from [`axis_potential`] at `x = 1`.
pub fn potential_via_axis(b: &ColoredBraid) -> Result<Potential, PotentialError> {
    let axis = axis_potential(b)?;
    let at_one = axis.specialize_one(axis.nvars())?.drop_last_var()?;
    finish(b, at_one)
}
