//! Sparse multivariable Laurent polynomials over the integers.
//!
//! A [`LaurentPoly`] lives in `Z[t_1^{±1}, …, t_k^{±1}]` for a fixed ambient
//! variable count `k`. Variables are addressed by 1-based index so that
//! variable `j` is the one attached to color `j`. Terms are kept in a
//! `BTreeMap` keyed by exponent vector, which gives the canonical
//! (lexicographic, ascending) term order used by every serializer.

mod format;
mod matrix;

pub use format::{LatexNames, ParseError};
pub use matrix::PolyMatrix;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use smallvec::SmallVec;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LaurentError {
    #[error("variable count mismatch: {left} vs {right}")]
    VarCountMismatch { left: usize, right: usize },
    #[error("division by zero")]
    DivisionByZero,
    #[error("dividend is not divisible by divisor")]
    NotDivisible,
    #[error("variable index {index} out of range 1..={nvars}")]
    VarIndexOutOfRange { index: usize, nvars: usize },
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("variable {index} still occurs and cannot be dropped")]
    VarStillPresent { index: usize },
}

/// Exponents of a monomial, one signed entry per ambient variable.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ExponentVec(SmallVec<[i32; 6]>);

impl ExponentVec {
    pub fn zeros(nvars: usize) -> Self {
        ExponentVec(SmallVec::from_elem(0, nvars))
    }

    pub fn from_slice(exps: &[i32]) -> Self {
        ExponentVec(SmallVec::from_slice(exps))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[i32] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    fn add(&self, other: &ExponentVec) -> ExponentVec {
        ExponentVec(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    fn sub(&self, other: &ExponentVec) -> ExponentVec {
        ExponentVec(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    fn map(&self, f: impl Fn(i32) -> i32) -> ExponentVec {
        ExponentVec(self.0.iter().map(|&e| f(e)).collect())
    }

    /// Componentwise minimum.
    fn meet(&self, other: &ExponentVec) -> ExponentVec {
        ExponentVec(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.min(b))
                .collect(),
        )
    }

    /// Componentwise `self >= other`.
    fn dominates(&self, other: &ExponentVec) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a >= b)
    }
}

impl fmt::Debug for ExponentVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}

impl From<Vec<i32>> for ExponentVec {
    fn from(v: Vec<i32>) -> Self {
        ExponentVec(SmallVec::from_vec(v))
    }
}

/// An element of the Laurent polynomial ring in `nvars` variables.
///
/// No stored coefficient is zero, so structural equality is ring equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    nvars: usize,
    terms: BTreeMap<ExponentVec, BigInt>,
}

impl LaurentPoly {
    pub fn zero(nvars: usize) -> Self {
        LaurentPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, 1)
    }

    pub fn constant(nvars: usize, c: impl Into<BigInt>) -> Self {
        Self::monomial(ExponentVec::zeros(nvars), c)
    }

    pub fn monomial(exps: ExponentVec, coeff: impl Into<BigInt>) -> Self {
        let nvars = exps.len();
        let coeff = coeff.into();
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exps, coeff);
        }
        LaurentPoly { nvars, terms }
    }

    /// `t_index^power`, with `index` counted from 1.
    pub fn var_pow(nvars: usize, index: usize, power: i32) -> Self {
        assert!(
            (1..=nvars).contains(&index),
            "variable index {index} out of range 1..={nvars}"
        );
        let mut e = ExponentVec::zeros(nvars);
        e.0[index - 1] = power;
        Self::monomial(e, 1)
    }

    pub fn var(nvars: usize, index: usize) -> Self {
        Self::var_pow(nvars, index, 1)
    }

    /// Builds a polynomial from arbitrary `(exponents, coefficient)` pairs,
    /// merging duplicates and dropping zeros.
    pub fn from_terms<I, E, C>(nvars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (E, C)>,
        E: Into<ExponentVec>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            let e = e.into();
            assert_eq!(e.len(), nvars, "exponent vector length must equal nvars");
            p.add_term(e, c.into());
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .is_some_and(|(e, c)| e.is_zero() && c.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in canonical (ascending lexicographic) order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&ExponentVec, &BigInt)> + '_ {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &[i32]) -> BigInt {
        self.terms
            .get(&ExponentVec::from_slice(exps))
            .cloned()
            .unwrap_or_default()
    }

    /// Returns the exponent vector when `self` is `±1` times a monomial.
    pub fn as_unit_monomial(&self) -> Option<(&ExponentVec, &BigInt)> {
        match self.terms.iter().next() {
            Some((e, c)) if self.terms.len() == 1 && c.abs().is_one() => Some((e, c)),
            _ => None,
        }
    }

    fn add_term(&mut self, e: ExponentVec, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_nvars(&self, other: &Self) -> Result<(), LaurentError> {
        if self.nvars == other.nvars {
            Ok(())
        } else {
            Err(LaurentError::VarCountMismatch {
                left: self.nvars,
                right: other.nvars,
            })
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, LaurentError> {
        self.check_nvars(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, LaurentError> {
        self.check_nvars(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c);
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, LaurentError> {
        self.check_nvars(other)?;
        let mut out = Self::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                out.add_term(ea.add(eb), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.nvars);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Multiplies every exponent by `factor`; `factor = 2` is the squaring map
    /// `t_i -> t_i^2`.
    fn scale_exponents(&self, factor: i32) -> Self {
        LaurentPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.map(|x| x * factor), c.clone()))
                .collect(),
        }
    }

    /// The ring endomorphism sending every variable to its square.
    pub fn square_variables(&self) -> Self {
        self.scale_exponents(2)
    }

    /// The involution sending every variable to its inverse.
    pub fn bar_involution(&self) -> Self {
        self.scale_exponents(-1)
    }

    /// Sets variable `index` (1-based) to 1. The variable stays in the ambient
    /// ring with exponent zero everywhere.
    pub fn specialize_one(&self, index: usize) -> Result<Self, LaurentError> {
        if !(1..=self.nvars).contains(&index) {
            return Err(LaurentError::VarIndexOutOfRange {
                index,
                nvars: self.nvars,
            });
        }
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            let mut e = e.clone();
            e.0[index - 1] = 0;
            out.add_term(e, c.clone());
        }
        Ok(out)
    }

    /// Embeds into a ring with `nvars` variables, appending new variables at
    /// the end.
    pub fn extend_vars(&self, nvars: usize) -> Self {
        assert!(nvars >= self.nvars, "cannot shrink with extend_vars");
        LaurentPoly {
            nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut e = e.clone();
                    e.0.resize(nvars, 0);
                    (e, c.clone())
                })
                .collect(),
        }
    }

    /// Removes the last variable, which must not occur in any term.
    pub fn drop_last_var(&self) -> Result<Self, LaurentError> {
        if self.nvars == 0 {
            return Err(LaurentError::VarIndexOutOfRange { index: 0, nvars: 0 });
        }
        let last = self.nvars - 1;
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            if e.0[last] != 0 {
                return Err(LaurentError::VarStillPresent { index: self.nvars });
            }
            let mut e = e.clone();
            e.0.truncate(last);
            terms.insert(e, c.clone());
        }
        Ok(LaurentPoly { nvars: last, terms })
    }

    /// Multiplies by the monomial `t^shift` (coefficient 1).
    pub fn shift(&self, shift: &ExponentVec) -> Self {
        assert_eq!(shift.len(), self.nvars);
        LaurentPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.add(shift), c.clone()))
                .collect(),
        }
    }

    /// Per-variable minimum exponent; zeros for the zero polynomial.
    pub fn min_exponents(&self) -> ExponentVec {
        self.fold_exponents(i32::min)
    }

    /// Per-variable maximum exponent; zeros for the zero polynomial.
    pub fn max_exponents(&self) -> ExponentVec {
        self.fold_exponents(i32::max)
    }

    fn fold_exponents(&self, f: impl Fn(i32, i32) -> i32) -> ExponentVec {
        let mut it = self.terms.keys();
        let Some(first) = it.next() else {
            return ExponentVec::zeros(self.nvars);
        };
        let mut acc = first.clone();
        for e in it {
            for (a, b) in acc.0.iter_mut().zip(&e.0) {
                *a = f(*a, *b);
            }
        }
        acc
    }

    /// Exact quotient `self / divisor` in the Laurent ring.
    ///
    /// Both operands are shifted by monomials into the ordinary polynomial
    /// ring, where lexicographic long division either clears the dividend or
    /// hits a leading term the divisor's leading term does not divide.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self, LaurentError> {
        self.check_nvars(divisor)?;
        if divisor.is_zero() {
            return Err(LaurentError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero(self.nvars));
        }
        if let Some((e, c)) = divisor.as_unit_monomial() {
            let q = self.shift(&e.map(|x| -x));
            return Ok(if c.is_negative() { -q } else { q });
        }
        let p_shift = self.min_exponents();
        let d_shift = divisor.min_exponents();
        let mut rem = self.shift(&p_shift.map(|x| -x));
        let d = divisor.shift(&d_shift.map(|x| -x));
        let (d_lead_e, d_lead_c) = d.terms.iter().next_back().expect("nonzero divisor");
        let mut quot = Self::zero(self.nvars);
        while let Some((r_e, r_c)) = rem.leading_term() {
            if !r_e.dominates(d_lead_e) || !(r_c % d_lead_c).is_zero() {
                return Err(LaurentError::NotDivisible);
            }
            let q_e = r_e.sub(d_lead_e);
            let q_c = r_c / d_lead_c;
            for (e, c) in &d.terms {
                rem.add_term(e.add(&q_e), -(c * &q_c));
            }
            quot.add_term(q_e, q_c);
        }
        let quot = quot.shift(&p_shift.sub(&d_shift));
        debug_assert_eq!(&(&quot * divisor), self);
        Ok(quot)
    }

    /// Lexicographically largest term, if any.
    pub fn leading_term(&self) -> Option<(&ExponentVec, &BigInt)> {
        self.terms.iter().next_back()
    }

    /// Total order used where a deterministic tie-break between polynomials is
    /// needed: by term count, then by terms.
    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        self.terms
            .len()
            .cmp(&other.terms.len())
            .then_with(|| self.terms.iter().cmp(other.terms.iter()))
    }
}

impl Default for LaurentPoly {
    fn default() -> Self {
        Self::zero(0)
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                self.$checked(rhs)
                    .expect("operands live in different rings")
            }
        }
        impl $trait<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$method(rhs)
            }
        }
        impl $trait<LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                self.$method(&rhs)
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        assert_eq!(self.nvars, rhs.nvars, "operands live in different rings");
        for (e, c) in &rhs.terms {
            self.add_term(e.clone(), c.clone());
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        assert_eq!(self.nvars, rhs.nvars, "operands live in different rings");
        for (e, c) in &rhs.terms {
            self.add_term(e.clone(), -c);
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(mut self) -> LaurentPoly {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -self.clone()
    }
}
