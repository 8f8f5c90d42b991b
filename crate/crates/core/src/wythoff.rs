//! Compound Wythoff sequences: words over `{A, B}` read as compositions,
//! with an additive shift outside the composition.
//!
//! `"AB"` is `n ↦ A(B(n))`; the rightmost letter is applied first.
//! `(U + c)∘V` is `(U∘V) + c`: a shift never moves inside the letters.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, Zero};
use serde::{Serialize, Serializer};

use crate::beatty::{wythoff_a, wythoff_b, Gbs};
use crate::error::{Result, ZeckError};
use crate::fib::{fib, fib_signed};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    A,
    B,
}

impl Letter {
    pub fn apply(self, n: &BigUint) -> BigUint {
        match self {
            Letter::A => wythoff_a(n),
            Letter::B => wythoff_b(n),
        }
    }

    /// Composition on the right with this letter, on closed forms.
    pub fn compose_gbs(self, v: &Gbs) -> Gbs {
        match self {
            Letter::A => v.compose_a(),
            Letter::B => v.compose_b(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct WythoffWord {
    /// Printed order: `letters[0]` is applied last.
    letters: Vec<Letter>,
    shift: BigInt,
}

impl WythoffWord {
    pub fn new(letters: Vec<Letter>, shift: impl Into<BigInt>) -> Self {
        WythoffWord { letters, shift: shift.into() }
    }

    /// The empty composition, `n ↦ n`.
    pub fn identity() -> Self {
        Self::default()
    }

    /// `X^m`.
    pub fn power(letter: Letter, m: usize) -> Self {
        WythoffWord::new(vec![letter; m], 0)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn shift(&self) -> &BigInt {
        &self.shift
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// `(#A, #B)`.
    pub fn counts(&self) -> (usize, usize) {
        let a = self.letters.iter().filter(|&&l| l == Letter::A).count();
        (a, self.letters.len() - a)
    }

    pub fn with_shift(&self, shift: impl Into<BigInt>) -> Self {
        WythoffWord { letters: self.letters.clone(), shift: shift.into() }
    }

    /// `self∘X`: `X` becomes the first letter applied.
    pub fn then_letter(&self, x: Letter) -> Self {
        let mut letters = self.letters.clone();
        letters.push(x);
        WythoffWord { letters, shift: self.shift.clone() }
    }

    /// `self∘inner`. The inner shift would have to move inside the letters,
    /// so only unshifted inner words compose.
    pub fn compose(&self, inner: &WythoffWord) -> Option<Self> {
        if !inner.shift.is_zero() {
            return None;
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&inner.letters);
        Some(WythoffWord { letters, shift: self.shift.clone() })
    }

    /// Letters applied right to left, then the shift.
    pub fn direct_eval(&self, n: &BigUint) -> BigInt {
        let inner = self.letters.iter().rev().fold(n.clone(), |acc, l| l.apply(&acc));
        BigInt::from(inner) + &self.shift
    }

    pub fn direct_eval_u64(&self, n: u64) -> BigInt {
        self.direct_eval(&BigUint::from(n))
    }

    /// `λ_U = F_{i+2j+1} - U(1)` for the unshifted composition `U`.
    pub fn lambda(&self) -> BigInt {
        let (i, j) = self.counts();
        let unshifted = self.direct_eval_u64(1) - &self.shift;
        BigInt::from(fib(i + 2 * j + 1)) - unshifted
    }

    /// `U(n) = F_{i+2j} A(n) + F_{i+2j-1} n - λ_U`, plus the word's shift.
    ///
    /// The empty word gives the identity because `F_{-1} = 1`.
    pub fn csh_reduce(&self) -> Gbs {
        let (i, j) = self.counts();
        let k = (i + 2 * j) as i64;
        Gbs::new(fib_signed(k), fib_signed(k - 1), &self.shift - self.lambda())
    }

    /// Same closed form, built by applying the composition rules letter by letter.
    pub fn fold_gbs(&self) -> Gbs {
        let base = Gbs::identity().shifted(&self.shift);
        self.letters.iter().fold(base, |v, &l| l.compose_gbs(&v))
    }

    /// Every word of exactly `len` letters, `A` before `B` lexicographically.
    pub fn all_of_length(len: usize) -> Vec<WythoffWord> {
        (0..1usize << len)
            .map(|bits| {
                let letters = (0..len)
                    .map(|i| if bits >> (len - 1 - i) & 1 == 0 { Letter::A } else { Letter::B })
                    .collect();
                WythoffWord::new(letters, 0)
            })
            .collect()
    }

    /// Runs written with carets, e.g. `AB^3A-1`.
    pub fn compact(&self) -> String {
        let mut out = String::new();
        let mut i = 0;
        while i < self.letters.len() {
            let l = self.letters[i];
            let run = self.letters[i..].iter().take_while(|&&x| x == l).count();
            out.push(if l == Letter::A { 'A' } else { 'B' });
            if run > 1 {
                out.push_str(&format!("^{run}"));
            }
            i += run;
        }
        if out.is_empty() {
            out.push_str("Id");
        }
        push_shift(&mut out, &self.shift);
        out
    }
}

fn push_shift(out: &mut String, shift: &BigInt) {
    if shift.is_positive() {
        out.push_str(&format!("+{shift}"));
    } else if shift.is_negative() {
        out.push_str(&format!("-{}", -shift));
    }
}

impl fmt::Display for WythoffWord {
    /// Letters in full, e.g. `AAA-1`; the empty composition prints as `Id`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out: String = self.letters.iter().map(|&l| if l == Letter::A { 'A' } else { 'B' }).collect();
        if out.is_empty() {
            out.push_str("Id");
        }
        push_shift(&mut out, &self.shift);
        f.write_str(&out)
    }
}

impl Serialize for WythoffWord {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl FromStr for WythoffWord {
    type Err = ZeckError;

    /// Accepts `BBA`, `A^3-1`, `AB^2A+2`, `Id-1`; `−` is read as `-`.
    fn from_str(input: &str) -> Result<Self> {
        let err = |reason: &str| ZeckError::WordSyntax { input: input.to_string(), reason: reason.to_string() };
        let s: String = input.trim().replace('−', "-");
        let split = s.find(['+', '-']).unwrap_or(s.len());
        let (body, tail) = s.split_at(split);

        let mut letters = Vec::new();
        if body != "Id" {
            let chars: Vec<char> = body.chars().collect();
            let mut i = 0;
            while i < chars.len() {
                let l = match chars[i] {
                    'A' => Letter::A,
                    'B' => Letter::B,
                    c => return Err(err(&format!("unexpected {c:?}"))),
                };
                i += 1;
                let mut reps = 1usize;
                if chars.get(i) == Some(&'^') {
                    i += 1;
                    let start = i;
                    while i < chars.len() && chars[i].is_ascii_digit() {
                        i += 1;
                    }
                    let digits: String = chars[start..i].iter().collect();
                    reps = digits.parse().map_err(|_| err("caret must be followed by a count"))?;
                }
                letters.extend(std::iter::repeat(l).take(reps));
            }
        }
        if letters.is_empty() && body != "Id" {
            return Err(err("empty composition; write Id"));
        }

        let shift = if tail.is_empty() {
            BigInt::zero()
        } else {
            let (sign, digits) = tail.split_at(1);
            if digits.is_empty() || !digits.chars().all(|c| c.is_ascii_digit()) {
                return Err(err("shift must be an integer"));
            }
            let mag: BigInt = digits.parse().map_err(|_| err("shift must be an integer"))?;
            if sign == "-" { -mag } else { mag }
        };
        Ok(WythoffWord { letters, shift })
    }
}

/// `W(n, m) = F_{m+1} A(n) + (n - 1) F_m`.
pub fn wythoff_array(n: &BigUint, m: usize) -> BigUint {
    debug_assert!(!n.is_zero());
    fib(m + 1) * wythoff_a(n) + (n - 1u32) * fib(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(s: &str) -> WythoffWord {
        s.parse().unwrap()
    }

    #[test]
    fn eval_examples() {
        assert_eq!(word("AB").direct_eval_u64(1), BigInt::from(3));
        assert_eq!(word("A").direct_eval_u64(4), BigInt::from(6));
        for n in 1..20 {
            assert_eq!(word("Id-1").direct_eval_u64(n), BigInt::from(n as i64 - 1));
        }
    }

    #[test]
    fn reduce_examples() {
        assert_eq!(word("BA").csh_reduce(), Gbs::new(2, 1, -1));
        assert_eq!(word("AA").csh_reduce(), Gbs::new(1, 1, -1));
        assert_eq!(word("AAB").csh_reduce(), Gbs::new(3, 2, -1));
        assert_eq!(word("A").csh_reduce(), Gbs::lower());
        assert_eq!(word("B").csh_reduce(), Gbs::upper());
        assert_eq!(word("A^3-1").csh_reduce(), Gbs::new(2, 1, -3));
        assert_eq!(WythoffWord::identity().csh_reduce(), Gbs::identity());
    }

    #[test]
    fn reduce_agrees_with_folding() {
        for len in 0..=6 {
            for u in WythoffWord::all_of_length(len) {
                assert_eq!(u.csh_reduce(), u.fold_gbs(), "{u}");
                let shifted = u.with_shift(-3);
                assert_eq!(shifted.csh_reduce(), shifted.fold_gbs(), "{shifted}");
            }
        }
    }

    #[test]
    fn array_examples() {
        let w = |n: u64, m| wythoff_array(&BigUint::from(n), m);
        assert_eq!(w(1, 0), BigUint::from(1u32));
        assert_eq!(w(2, 1), BigUint::from(4u32));
        assert_eq!(w(2, 2), BigUint::from(7u32));
        // first row is the Fibonacci numbers 1, 2, 3, 5, 8, ...
        for m in 0..20 {
            assert_eq!(w(1, m), fib(m + 1));
        }
    }

    #[test]
    fn parse_and_print() {
        assert_eq!(word("A^3-1").to_string(), "AAA-1");
        assert_eq!(word("AAA-1").compact(), "A^3-1");
        assert_eq!(word("AB^2A+2").to_string(), "ABBA+2");
        assert_eq!(word("B−1").to_string(), "B-1");
        assert_eq!(word("Id").to_string(), "Id");
        assert_eq!(word("Id-1").compact(), "Id-1");
        assert!("".parse::<WythoffWord>().is_err());
        assert!("AC".parse::<WythoffWord>().is_err());
        assert!("A^".parse::<WythoffWord>().is_err());
        assert!("A-".parse::<WythoffWord>().is_err());
        assert!("A-1x".parse::<WythoffWord>().is_err());
    }

    #[test]
    fn composition_keeps_outer_shift() {
        let outer = word("A^2-1");
        let composed = outer.compose(&word("B")).unwrap();
        assert_eq!(composed.to_string(), "AAB-1");
        assert!(outer.compose(&word("B-1")).is_none());
        assert_eq!(outer.then_letter(Letter::A).to_string(), "AAA-1");
    }

    #[test]
    fn counts_and_enumeration() {
        assert_eq!(word("ABBA").counts(), (2, 2));
        assert_eq!(WythoffWord::all_of_length(3).len(), 8);
        assert_eq!(WythoffWord::all_of_length(3)[1].to_string(), "AAB");
    }
}
