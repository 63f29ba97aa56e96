//! Colored braid words.
//!
//! A word is read left to right as a group product `σ_{i_1}^{ε_1} σ_{i_2}^{ε_2} …`
//! and the bottom color sequence is the boundary seen by the first letter.
//! Each letter swaps the colors at positions `i, i+1`; the resulting sequence
//! of boundary colorings is the braid's trace.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::laurent::{ExponentVec, LaurentPoly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BraidError {
    #[error("empty color list")]
    EmptyColors,
    #[error("invalid color token `{0}` (colors are positive integers)")]
    BadColor(String),
    #[error("invalid generator token `{0}` (generators are nonzero integers)")]
    BadGenerator(String),
    #[error("generator index {index} needs at least {} strands, braid has {strands}", index + 1)]
    GeneratorOutOfRange { index: usize, strands: usize },
    #[error("coloring is not surjective onto 1..={mu}: color {missing} is unused")]
    NonSurjective { mu: u32, missing: u32 },
    #[error("boundary colors do not match: {top:?} vs {bottom:?}")]
    BoundaryMismatch { top: Vec<u32>, bottom: Vec<u32> },
    #[error("braid is not a (c,c)-braid: bottom {bottom:?}, top {top:?}")]
    NotClosed { bottom: Vec<u32>, top: Vec<u32> },
}

/// Colors of the strand endpoints along one boundary of a braid, using
/// every color in `1..=mu` at least once.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct ColorSeq {
    colors: Vec<u32>,
    #[serde(skip)]
    mu: u32,
}

impl ColorSeq {
    pub fn new(colors: Vec<u32>) -> Result<Self, BraidError> {
        if colors.is_empty() {
            return Err(BraidError::EmptyColors);
        }
        if let Some(&c) = colors.iter().find(|&&c| c == 0) {
            return Err(BraidError::BadColor(c.to_string()));
        }
        let mu = *colors.iter().max().expect("nonempty");
        let mut seen = vec![false; mu as usize];
        for &c in &colors {
            seen[c as usize - 1] = true;
        }
        if let Some(missing) = seen.iter().position(|s| !s) {
            return Err(BraidError::NonSurjective {
                mu,
                missing: missing as u32 + 1,
            });
        }
        Ok(ColorSeq { colors, mu })
    }

    /// Parses a comma-separated list such as `1,2,3`.
    pub fn parse(text: &str) -> Result<Self, BraidError> {
        if text.trim().is_empty() {
            return Err(BraidError::EmptyColors);
        }
        let colors = text
            .split(',')
            .map(|tok| {
                let tok = tok.trim();
                match tok.parse::<u32>() {
                    Ok(c) if c >= 1 => Ok(c),
                    _ => Err(BraidError::BadColor(tok.to_string())),
                }
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(colors)
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn mu(&self) -> u32 {
        self.mu
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.colors
    }

    /// Color at 1-based position `i`.
    pub fn at(&self, i: usize) -> u32 {
        self.colors[i - 1]
    }

    /// The sequence with 1-based positions `i` and `i + 1` exchanged.
    pub fn swapped(&self, i: usize) -> ColorSeq {
        let mut colors = self.colors.clone();
        colors.swap(i - 1, i);
        ColorSeq {
            colors,
            mu: self.mu,
        }
    }

    /// Exponent vector of `t_{c_1} ⋯ t_{c_k}` over `nvars` variables.
    pub fn prefix_exponents(&self, k: usize, nvars: usize) -> ExponentVec {
        let mut e = vec![0i32; nvars];
        for &c in &self.colors[..k] {
            e[c as usize - 1] += 1;
        }
        e.into()
    }

    /// `t_{c_1} ⋯ t_{c_k}` as a polynomial in `nvars` variables.
    pub fn prefix_product(&self, k: usize, nvars: usize) -> LaurentPoly {
        LaurentPoly::monomial(self.prefix_exponents(k, nvars), 1)
    }
}

impl fmt::Debug for ColorSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.colors)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn exponent(self) -> i32 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }
}

/// One letter `σ_index^{±1}`; `index` is 1-based.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Crossing {
    pub index: usize,
    pub sign: Sign,
}

impl Crossing {
    pub fn new(index: usize, sign: Sign) -> Self {
        Crossing { index, sign }
    }

    pub fn pos(index: usize) -> Self {
        Crossing::new(index, Sign::Positive)
    }

    pub fn neg(index: usize) -> Self {
        Crossing::new(index, Sign::Negative)
    }

    /// Signed integer form used in the text format.
    pub fn as_signed(self) -> i64 {
        self.index as i64 * self.sign.exponent() as i64
    }

    pub fn from_signed(g: i64) -> Option<Self> {
        let index = usize::try_from(g.unsigned_abs()).ok()?;
        match g.signum() {
            1 => Some(Crossing::pos(index)),
            -1 => Some(Crossing::neg(index)),
            _ => None,
        }
    }

    pub fn inverse(self) -> Self {
        Crossing::new(self.index, self.sign.flip())
    }

    /// Color of the over-crossing strand when the letter acts on `state`.
    /// For `σ_i` the strand at position `i` passes over; for `σ_i^{-1}` the
    /// one at position `i + 1` does.
    pub fn over_color(self, state: &ColorSeq) -> u32 {
        match self.sign {
            Sign::Positive => state.at(self.index),
            Sign::Negative => state.at(self.index + 1),
        }
    }
}

/// A closure component: the cycle of strand positions it passes through,
/// starting from its smallest position.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Component {
    pub strands: Vec<usize>,
    pub color: u32,
}

impl Component {
    /// Linking number with the braid axis.
    pub fn axis_linking(&self) -> usize {
        self.strands.len()
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct ClosureInfo {
    pub components: Vec<Component>,
}

impl ClosureInfo {
    pub fn component_count(&self) -> usize {
        self.components.len()
    }

    pub fn axis_linking(&self) -> Vec<usize> {
        self.components
            .iter()
            .map(Component::axis_linking)
            .collect()
    }
}

/// A word in the braid generators together with its bottom coloring.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ColoredBraid {
    word: Vec<Crossing>,
    trace: Vec<ColorSeq>,
    perm: Vec<usize>,
}

impl ColoredBraid {
    pub fn new(word: Vec<Crossing>, bottom: ColorSeq) -> Result<Self, BraidError> {
        let n = bottom.len();
        if let Some(c) = word.iter().find(|c| c.index == 0 || c.index >= n) {
            return Err(BraidError::GeneratorOutOfRange {
                index: c.index,
                strands: n,
            });
        }
        let mut trace = Vec::with_capacity(word.len() + 1);
        trace.push(bottom);
        for c in &word {
            let next = trace.last().expect("nonempty").swapped(c.index);
            trace.push(next);
        }
        // at[q] = strand currently at position q
        let mut at: Vec<usize> = (1..=n).collect();
        for c in &word {
            at.swap(c.index - 1, c.index);
        }
        let mut perm = vec![0; n];
        for (q, &s) in at.iter().enumerate() {
            perm[s - 1] = q + 1;
        }
        Ok(ColoredBraid { word, trace, perm })
    }

    /// Builds from signed generator integers and raw colors.
    pub fn from_signed(word: &[i64], colors: &[u32]) -> Result<Self, BraidError> {
        let word = word
            .iter()
            .map(|&g| {
                Crossing::from_signed(g).ok_or_else(|| BraidError::BadGenerator(g.to_string()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(word, ColorSeq::new(colors.to_vec())?)
    }

    pub fn identity(bottom: ColorSeq) -> Self {
        Self::new(Vec::new(), bottom).expect("empty word is always valid")
    }

    pub fn word(&self) -> &[Crossing] {
        &self.word
    }

    pub fn strands(&self) -> usize {
        self.bottom().len()
    }

    pub fn mu(&self) -> u32 {
        self.bottom().mu()
    }

    pub fn bottom(&self) -> &ColorSeq {
        &self.trace[0]
    }

    pub fn top(&self) -> &ColorSeq {
        self.trace.last().expect("trace is never empty")
    }

    /// Boundary colorings before each letter and after the last one.
    pub fn trace(&self) -> &[ColorSeq] {
        &self.trace
    }

    /// `perm()[i - 1]` is the top position reached by the strand entering at
    /// bottom position `i`.
    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn is_closed(&self) -> bool {
        self.top() == self.bottom()
    }

    fn require_closed(&self) -> Result<(), BraidError> {
        if self.is_closed() {
            Ok(())
        } else {
            Err(BraidError::NotClosed {
                bottom: self.bottom().as_slice().to_vec(),
                top: self.top().as_slice().to_vec(),
            })
        }
    }

    /// `self` followed by `other`.
    pub fn compose(&self, other: &ColoredBraid) -> Result<ColoredBraid, BraidError> {
        if self.top() != other.bottom() {
            return Err(BraidError::BoundaryMismatch {
                top: self.top().as_slice().to_vec(),
                bottom: other.bottom().as_slice().to_vec(),
            });
        }
        let mut word = self.word.clone();
        word.extend_from_slice(&other.word);
        ColoredBraid::new(word, self.bottom().clone())
    }

    /// Adds a trivial strand of color `new_color` on the right. The new color
    /// may be at most `mu + 1` so the coloring stays surjective.
    pub fn include_strand(&self, new_color: u32) -> Result<ColoredBraid, BraidError> {
        let mut colors = self.bottom().as_slice().to_vec();
        colors.push(new_color);
        let bottom = match ColorSeq::new(colors) {
            Err(BraidError::BadColor(_)) => {
                return Err(BraidError::BadColor(new_color.to_string()))
            }
            other => other?,
        };
        ColoredBraid::new(self.word.clone(), bottom)
    }

    /// The braid word read backwards with every letter inverted, colored to
    /// start at `self.top()`.
    pub fn inverse(&self) -> ColoredBraid {
        let word = self.word.iter().rev().map(|c| c.inverse()).collect();
        ColoredBraid::new(word, self.top().clone()).expect("same strand count")
    }

    /// `∏ t_{b_j}^{-ε_j}` over all letters, `b_j` the over-crossing color.
    pub fn monomial_weight(&self) -> LaurentPoly {
        let mu = self.mu() as usize;
        let mut e = vec![0i32; mu];
        for (c, state) in self.word.iter().zip(&self.trace) {
            e[c.over_color(state) as usize - 1] -= c.sign.exponent();
        }
        LaurentPoly::monomial(e.into(), 1)
    }

    /// Components of the closure: cycles of the permutation.
    pub fn closure_info(&self) -> Result<ClosureInfo, BraidError> {
        self.require_closed()?;
        let n = self.strands();
        let mut seen = vec![false; n];
        let mut components = Vec::new();
        for start in 1..=n {
            if seen[start - 1] {
                continue;
            }
            let color = self.bottom().at(start);
            let mut strands = Vec::new();
            let mut p = start;
            while !seen[p - 1] {
                seen[p - 1] = true;
                assert_eq!(
                    self.bottom().at(p),
                    color,
                    "mixed colors on a closed component"
                );
                strands.push(p);
                p = self.perm[p - 1];
            }
            components.push(Component { strands, color });
        }
        Ok(ClosureInfo { components })
    }

    pub fn summary(&self) -> BraidSummary {
        BraidSummary {
            word: self.word.iter().map(|c| c.as_signed()).collect(),
            bottom: self.bottom().as_slice().to_vec(),
            top: self.top().as_slice().to_vec(),
            perm: self.perm.clone(),
            components: self.closure_info().ok().map(|c| c.components),
        }
    }
}

impl fmt::Display for ColoredBraid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let word: Vec<String> = self
            .word
            .iter()
            .map(|c| c.as_signed().to_string())
            .collect();
        let colors: Vec<String> = self
            .bottom()
            .as_slice()
            .iter()
            .map(u32::to_string)
            .collect();
        write!(f, "[{}] on ({})", word.join(" "), colors.join(","))
    }
}

/// JSON echo of a parsed braid.
#[derive(Clone, Debug, Serialize)]
pub struct BraidSummary {
    pub word: Vec<i64>,
    pub bottom: Vec<u32>,
    pub top: Vec<u32>,
    pub perm: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub components: Option<Vec<Component>>,
}

/// Parses whitespace-separated signed generators (`-1 -1 -2 -2`) and a
/// comma-separated color list (`1,2,3`).
pub fn parse_braid(text: &str, colors: &str) -> Result<ColoredBraid, BraidError> {
    let bottom = ColorSeq::parse(colors)?;
    let word = text
        .split_whitespace()
        .map(|tok| {
            tok.parse::<i64>()
                .ok()
                .and_then(Crossing::from_signed)
                .ok_or_else(|| BraidError::BadGenerator(tok.to_string()))
        })
        .collect::<Result<Vec<_>, _>>()?;
    ColoredBraid::new(word, bottom)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(word: &[i64], colors: &[u32]) -> ColoredBraid {
        ColoredBraid::from_signed(word, colors).unwrap()
    }

    fn mono(s: &str, nvars: usize) -> LaurentPoly {
        LaurentPoly::parse(s, nvars).unwrap()
    }

    #[test]
    fn parse_hopf() {
        let h = parse_braid("-1 -1", "1,2").unwrap();
        assert_eq!(h.strands(), 2);
        assert_eq!(h.word(), &[Crossing::neg(1), Crossing::neg(1)]);
        assert_eq!(h.bottom().as_slice(), &[1, 2]);
        assert_eq!(h.top().as_slice(), &[1, 2]);
        assert_eq!(h.trace()[1].as_slice(), &[2, 1]);
        assert_eq!(h.perm(), &[1, 2]);
    }

    #[test]
    fn parse_trivial_one_strand() {
        let u = parse_braid("", "1").unwrap();
        assert_eq!(u.strands(), 1);
        assert!(u.word().is_empty());
        assert!(u.is_closed());
    }

    #[test]
    fn parse_errors_name_the_token() {
        assert_eq!(
            parse_braid("3 1", "1,1"),
            Err(BraidError::GeneratorOutOfRange {
                index: 3,
                strands: 2
            })
        );
        assert_eq!(
            parse_braid("1 0", "1,1"),
            Err(BraidError::BadGenerator("0".into()))
        );
        assert_eq!(
            parse_braid("1 a", "1,1"),
            Err(BraidError::BadGenerator("a".into()))
        );
        assert_eq!(parse_braid("1", ""), Err(BraidError::EmptyColors));
        assert_eq!(
            parse_braid("1", "1,x"),
            Err(BraidError::BadColor("x".into()))
        );
        assert_eq!(
            parse_braid("1", "1,0"),
            Err(BraidError::BadColor("0".into()))
        );
        assert_eq!(
            parse_braid("1", "1,3"),
            Err(BraidError::NonSurjective { mu: 3, missing: 2 })
        );
        let msg = parse_braid("3 1", "1,1").unwrap_err().to_string();
        assert!(msg.contains("generator index 3"), "{msg}");
    }

    #[test]
    fn compose_builds_chain_braid() {
        let a = b(&[-1, -1], &[1, 2, 3]);
        let c = b(&[-2, -2], &[1, 2, 3]);
        let chain = a.compose(&c).unwrap();
        assert_eq!(chain, b(&[-1, -1, -2, -2], &[1, 2, 3]));
        let id = ColoredBraid::identity(chain.top().clone());
        assert_eq!(chain.compose(&id).unwrap(), chain);
    }

    #[test]
    fn compose_rejects_mismatched_boundaries() {
        let a = b(&[1], &[1, 2]);
        assert!(matches!(
            a.compose(&a),
            Err(BraidError::BoundaryMismatch { .. })
        ));
    }

    #[test]
    fn include_strand_examples() {
        let h = b(&[-1, -1], &[1, 2]);
        let h3 = h.include_strand(2).unwrap();
        assert_eq!(h3.bottom().as_slice(), &[1, 2, 2]);
        assert_eq!(h3.word(), h.word());
        assert_eq!(h3.perm()[2], 3);
        let id1 = ColoredBraid::identity(ColorSeq::new(vec![1]).unwrap());
        assert_eq!(
            id1.include_strand(1).unwrap(),
            ColoredBraid::identity(ColorSeq::new(vec![1, 1]).unwrap())
        );
        assert_eq!(id1.include_strand(2).unwrap().mu(), 2);
        assert!(id1.include_strand(3).is_err());
        assert!(id1.include_strand(0).is_err());
    }

    #[test]
    fn monomial_weight_examples() {
        assert_eq!(b(&[-1, -1], &[1, 2]).monomial_weight(), mono("t1*t2", 2));
        assert_eq!(
            b(&[-1, -1, -2, -2], &[1, 2, 3]).monomial_weight(),
            mono("t1*t2^2*t3", 3)
        );
        assert!(ColoredBraid::identity(ColorSeq::new(vec![1, 2]).unwrap())
            .monomial_weight()
            .is_one());
    }

    #[test]
    fn weight_of_stabilizing_letter() {
        // <σ_n i(α)> = t_{c_n}^{-1} <α>
        let alpha = b(&[1, -1, 1], &[1, 2]);
        let stab = b(&[2], &[1, 2, 2])
            .compose(&alpha.include_strand(2).unwrap())
            .unwrap();
        assert_eq!(
            stab.monomial_weight(),
            &mono("t2^-1", 2) * &alpha.monomial_weight()
        );
    }

    #[test]
    fn closure_examples() {
        let h = b(&[-1, -1], &[1, 2]).closure_info().unwrap();
        assert_eq!(h.component_count(), 2);
        assert_eq!(h.axis_linking(), vec![1, 1]);

        let t = b(&[1, 1, 1], &[1, 1]).closure_info().unwrap();
        assert_eq!(t.component_count(), 1);
        assert_eq!(t.axis_linking(), vec![2]);

        let id3 = ColoredBraid::identity(ColorSeq::new(vec![1, 2, 3]).unwrap());
        assert_eq!(id3.closure_info().unwrap().component_count(), 3);

        assert!(matches!(
            b(&[1], &[1, 2]).closure_info(),
            Err(BraidError::NotClosed { .. })
        ));
    }

    #[test]
    fn inverse_composes_to_identity_boundary() {
        let a = b(&[1, 2, -1], &[1, 2, 3]);
        let inv = a.inverse();
        let both = a.compose(&inv).unwrap();
        assert!(both.is_closed());
        assert!(both.monomial_weight().is_one());
    }

    #[test]
    fn summary_json() {
        let s = serde_json::to_string(&b(&[-1, -1], &[1, 2]).summary()).unwrap();
        assert_eq!(
            s,
            r#"{"word":[-1,-1],"bottom":[1,2],"top":[1,2],"perm":[1,2],"components":[{"strands":[1],"color":1},{"strands":[2],"color":2}]}"#
        );
    }
}
