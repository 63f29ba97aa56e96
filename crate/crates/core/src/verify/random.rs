//! Seeded random braids.

use rand::Rng;

use crate::braid::{ColorSeq, ColoredBraid, Crossing, Sign};

/// Size bounds for random braids.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BraidBounds {
    pub min_strands: usize,
    pub max_strands: usize,
    pub max_len: usize,
    pub max_colors: u32,
}

/// A word of length `0..=max_len` on `n` strands, uniform index and sign.
pub fn random_word<R: Rng>(rng: &mut R, n: usize, max_len: usize) -> Vec<Crossing> {
    if n < 2 {
        return Vec::new();
    }
    let len = rng.gen_range(0..=max_len);
    (0..len).map(|_| random_letter(rng, n)).collect()
}

pub fn random_letter<R: Rng>(rng: &mut R, n: usize) -> Crossing {
    let sign = if rng.gen_bool(0.5) {
        Sign::Positive
    } else {
        Sign::Negative
    };
    Crossing::new(rng.gen_range(1..n), sign)
}

/// Renames colors to `1..=k` in order of first appearance.
pub fn relabel_surjective(colors: &mut [u32]) {
    let mut map: Vec<(u32, u32)> = Vec::new();
    for c in colors.iter_mut() {
        let next = map.len() as u32 + 1;
        let new = match map.iter().find(|(old, _)| old == c) {
            Some(&(_, new)) => new,
            None => {
                map.push((*c, next));
                next
            }
        };
        *c = new;
    }
}

/// Arbitrary surjective coloring of `n` strands.
pub fn random_coloring<R: Rng>(rng: &mut R, n: usize, max_colors: u32) -> ColorSeq {
    let mut colors: Vec<u32> = (0..n).map(|_| rng.gen_range(1..=max_colors)).collect();
    relabel_surjective(&mut colors);
    ColorSeq::new(colors).expect("relabelled coloring is surjective")
}

/// Random `(c, c)`-braid: a random word, then one color per closure
/// component, relabelled to be surjective.
pub fn random_closed_braid<R: Rng>(rng: &mut R, bounds: &BraidBounds) -> ColoredBraid {
    let n = rng.gen_range(bounds.min_strands.max(1)..=bounds.max_strands.max(1));
    let word = random_word(rng, n, bounds.max_len);
    let uncolored = ColoredBraid::new(word.clone(), ColorSeq::new(vec![1; n]).expect("one color"))
        .expect("indices are in range");
    let perm = uncolored.perm();
    let mut cycle_of = vec![usize::MAX; n];
    let mut cycles = 0;
    for start in 0..n {
        if cycle_of[start] != usize::MAX {
            continue;
        }
        let mut p = start;
        while cycle_of[p] == usize::MAX {
            cycle_of[p] = cycles;
            p = perm[p] - 1;
        }
        cycles += 1;
    }
    let palette = bounds.max_colors.max(1).min(cycles as u32);
    let cycle_colors: Vec<u32> = (0..cycles).map(|_| rng.gen_range(1..=palette)).collect();
    let mut colors: Vec<u32> = cycle_of.iter().map(|&c| cycle_colors[c]).collect();
    relabel_surjective(&mut colors);
    ColoredBraid::new(word, ColorSeq::new(colors).expect("surjective")).expect("valid word")
}
