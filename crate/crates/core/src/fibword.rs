//! The Fibonacci morphism `a ↦ ab, b ↦ a` and the coding of block occurrences by it.

use std::fmt;

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::codec::{encode_padded, DigitBlock};
use crate::error::{Result, ZeckError};
use crate::fib::fib;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FibLetter {
    A,
    B,
}

/// A finite word over `{a, b}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct FibWord {
    letters: Vec<FibLetter>,
}

impl FibWord {
    pub fn letters(&self) -> &[FibLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Image under the morphism.
    pub fn morph(&self) -> FibWord {
        let mut out = Vec::with_capacity(self.letters.len() * 2);
        for &l in &self.letters {
            match l {
                FibLetter::A => out.extend([FibLetter::A, FibLetter::B]),
                FibLetter::B => out.push(FibLetter::A),
            }
        }
        FibWord { letters: out }
    }

    pub fn is_prefix_of(&self, other: &FibWord) -> bool {
        other.letters.starts_with(&self.letters)
    }
}

impl From<&str> for FibWord {
    /// Letters other than `a`/`b` are dropped.
    fn from(s: &str) -> Self {
        let letters = s
            .chars()
            .filter_map(|c| match c {
                'a' => Some(FibLetter::A),
                'b' => Some(FibLetter::B),
                _ => None,
            })
            .collect();
        FibWord { letters }
    }
}

impl fmt::Display for FibWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self.letters.iter().map(|&l| if l == FibLetter::A { 'a' } else { 'b' }).collect();
        f.write_str(&s)
    }
}

/// `f^n(a)`.
pub fn morphism_iterate(n: usize) -> FibWord {
    let mut w = FibWord { letters: vec![FibLetter::A] };
    for _ in 0..n {
        w = w.morph();
    }
    w
}

/// 1-based positions of `letter` in `word`.
pub fn positions_of(letter: FibLetter, word: &FibWord) -> Vec<u64> {
    word.letters
        .iter()
        .enumerate()
        .filter(|(_, &l)| l == letter)
        .map(|(i, _)| i as u64 + 1)
        .collect()
}

/// `A(1), …, A(count)` read off as the positions of `a` in the Fibonacci word.
pub fn lower_wythoff_by_word(count: usize) -> Vec<u64> {
    let mut w = morphism_iterate(0);
    // a-density is 1/φ > 1/2, so twice the count is always enough
    while w.len() < 2 * count + 2 {
        w = w.morph();
    }
    let mut pos = positions_of(FibLetter::A, &w);
    pos.truncate(count);
    pos
}

/// Scans `Ψ_{m+n}` in increasing order and codes each `N` whose `Z*` ends
/// with `0w` by `a` and with `1w` by `b`.
///
/// Requires `|w| ≥ 2`, `w_{m-1} = 0`, `n ≥ 3`.
pub fn occurrence_coding(w: &DigitBlock, n: usize) -> Result<FibWord> {
    let m = w.len();
    if m < 2 || w.leading() != 0 || n < 3 {
        return Err(ZeckError::CodingPrecondition { block: w.to_string(), level: n });
    }
    let range = m + n;
    let top = fib(range).to_u64().expect("coding range beyond u64");
    let mut letters = Vec::new();
    for value in 0..top {
        let z = encode_padded(&BigUint::from(value), range)?;
        if !z.ends_with(w) {
            continue;
        }
        letters.push(if z.digit(m) == 0 { FibLetter::A } else { FibLetter::B });
    }
    Ok(FibWord { letters })
}
