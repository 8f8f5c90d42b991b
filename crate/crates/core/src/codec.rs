//! Zeckendorf expansions: `N = Σ d_i F_{i+2}` with no two adjacent ones.
//!
//! Digit position `i` always means the subscript of `d_i`, counted from the
//! least significant end. Strings are read and written most significant digit
//! first, the way the expansions are usually printed.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Result, ZeckError};
use crate::fib::{fib, fib_table};

/// A finite 0/1 word without `11`, written `w_{m-1} … w_0`.
///
/// The empty block is allowed and plays the role of the tree root.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct DigitBlock {
    /// `bits[i] = w_i`
    bits: Vec<u8>,
}

impl DigitBlock {
    pub fn empty() -> Self {
        DigitBlock { bits: Vec::new() }
    }

    /// Builds a block from digits given least significant first (`w_0` first).
    pub fn from_lsb_digits(bits: Vec<u8>) -> Result<Self> {
        let block = DigitBlock { bits };
        block.validate()?;
        Ok(block)
    }

    fn validate(&self) -> Result<()> {
        if let Some(&d) = self.bits.iter().find(|&&d| d > 1) {
            return Err(ZeckError::InvalidDigit { input: self.to_string(), found: char::from(b'0' + d) });
        }
        if self.bits.windows(2).any(|p| p == [1, 1]) {
            return Err(ZeckError::AdjacentOnes { input: self.to_string() });
        }
        Ok(())
    }

    /// `0^m`
    pub fn zeros(m: usize) -> Self {
        DigitBlock { bits: vec![0; m] }
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    /// `w_i`, with zeros beyond the top.
    pub fn digit(&self, i: usize) -> u8 {
        self.bits.get(i).copied().unwrap_or(0)
    }

    /// `w_{m-1}`; 0 for the empty block.
    pub fn leading(&self) -> u8 {
        self.bits.last().copied().unwrap_or(0)
    }

    /// `w_0`; 0 for the empty block.
    pub fn last(&self) -> u8 {
        self.digit(0)
    }

    pub fn lsb_digits(&self) -> &[u8] {
        &self.bits
    }

    pub fn is_all_zero(&self) -> bool {
        self.bits.iter().all(|&d| d == 0)
    }

    /// Left extension `d·w`, or `None` when it would create `11`.
    pub fn extend_left(&self, d: u8) -> Option<DigitBlock> {
        if d > 1 || (d == 1 && self.leading() == 1) {
            return None;
        }
        let mut bits = self.bits.clone();
        bits.push(d);
        Some(DigitBlock { bits })
    }

    /// `w·0^k`: the block shifted up by `k` positions.
    pub fn append_zeros(&self, k: usize) -> DigitBlock {
        let mut bits = vec![0; k];
        bits.extend_from_slice(&self.bits);
        DigitBlock { bits }
    }

    /// Block as a bit mask (bit `i` = `w_i`). `None` above 128 digits.
    pub fn mask(&self) -> Option<u128> {
        if self.bits.len() > 128 {
            return None;
        }
        Some(self.bits.iter().enumerate().fold(0u128, |acc, (i, &d)| acc | (u128::from(d) << i)))
    }

    /// Every valid block of length `m`, in increasing numeric order of the digit string.
    pub fn all_of_length(m: usize) -> Vec<DigitBlock> {
        let mut level = vec![DigitBlock::empty()];
        for _ in 0..m {
            level = level
                .iter()
                .flat_map(|w| [w.extend_left(0), w.extend_left(1)])
                .flatten()
                .collect();
        }
        level.sort_by(|x, y| x.to_string().cmp(&y.to_string()));
        level
    }
}

impl FromStr for DigitBlock {
    type Err = ZeckError;

    /// Parses an MSB-first string such as `"100"` (`w_2 w_1 w_0 = 1 0 0`).
    fn from_str(s: &str) -> Result<Self> {
        let mut bits = Vec::with_capacity(s.len());
        for c in s.chars().rev() {
            match c {
                '0' => bits.push(0),
                '1' => bits.push(1),
                other => return Err(ZeckError::InvalidDigit { input: s.to_string(), found: other }),
            }
        }
        let block = DigitBlock { bits };
        if block.bits.windows(2).any(|p| p == [1, 1]) {
            return Err(ZeckError::AdjacentOnes { input: s.to_string() });
        }
        Ok(block)
    }
}

impl fmt::Display for DigitBlock {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &d in self.bits.iter().rev() {
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

impl Serialize for DigitBlock {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// A Zeckendorf digit string together with the number it denotes.
///
/// Unpadded expansions have no leading zeros, except that 0 is `"0"`.
/// Padded expansions (`Z*`) keep whatever length they were padded to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZeckExpansion {
    /// `digits[i] = d_i`
    digits: Vec<u8>,
    value: BigUint,
}

impl ZeckExpansion {
    pub fn value(&self) -> &BigUint {
        &self.value
    }

    /// `d_i`, zero beyond the stored length.
    pub fn digit(&self, i: usize) -> u8 {
        self.digits.get(i).copied().unwrap_or(0)
    }

    /// Number of stored digits, padding included.
    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    pub fn lsb_digits(&self) -> &[u8] {
        &self.digits
    }

    /// Whether the stored digit string ends with `w` (i.e. `d_{m-1} … d_0 = w`).
    pub fn ends_with(&self, w: &DigitBlock) -> bool {
        (0..w.len()).all(|i| self.digit(i) == w.digit(i))
    }
}

impl fmt::Display for ZeckExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &d in self.digits.iter().rev() {
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

/// Greedy digits of `n`, least significant first, without leading zeros.
fn greedy_digits(n: &BigUint) -> Vec<u8> {
    if n.is_zero() {
        return Vec::new();
    }
    if let Some(small) = n.to_u64() {
        let bits = zeck_bits(small);
        let len = 128 - bits.leading_zeros() as usize;
        return (0..len).map(|i| ((bits >> i) & 1) as u8).collect();
    }
    // weights F_{i+2} up to the largest one not exceeding n
    let mut weights = vec![fib(2)];
    loop {
        let next = fib(weights.len() + 2);
        if &next > n {
            break;
        }
        weights.push(next);
    }
    let mut rest = n.clone();
    let mut digits = vec![0u8; weights.len()];
    for i in (0..weights.len()).rev() {
        if weights[i] <= rest {
            rest -= &weights[i];
            digits[i] = 1;
        }
    }
    debug_assert!(rest.is_zero());
    digits
}

/// Zeckendorf digits of a machine-size `n` as a mask, bit `i` = `d_i`.
///
/// Any `u64` needs at most 91 digits, so a `u128` always suffices.
pub fn zeck_bits(mut n: u64) -> u128 {
    let mut bits = 0u128;
    let table = fib_table();
    while n > 0 {
        // largest index with F_idx <= n; its digit position is idx - 2
        let idx = table.partition_point(|&f| f <= n) - 1;
        n -= table[idx];
        bits |= 1u128 << (idx - 2);
    }
    bits
}

/// `Z(N)`.
pub fn encode(n: &BigUint) -> ZeckExpansion {
    let mut digits = greedy_digits(n);
    if digits.is_empty() {
        digits.push(0);
    }
    ZeckExpansion { digits, value: n.clone() }
}

/// Parses an MSB-first digit string and returns the value it denotes.
///
/// Leading zeros are fine; the empty string is 0.
pub fn decode(s: &str) -> Result<BigUint> {
    let block: DigitBlock = s.parse()?;
    Ok(decode_digits(block.lsb_digits()))
}

/// Value of digits given least significant first.
pub fn decode_digits(lsb: &[u8]) -> BigUint {
    lsb.iter()
        .enumerate()
        .filter(|(_, &d)| d == 1)
        .map(|(i, _)| fib(i + 2))
        .sum()
}

/// `Z*(N)` relative to `Ψ_n`: the expansion left-padded with zeros to length `n - 2`.
pub fn encode_padded(value: &BigUint, n: usize) -> Result<ZeckExpansion> {
    if n < 2 {
        return Err(ZeckError::RangeIndex { n });
    }
    if value >= &fib(n) {
        return Err(ZeckError::OutOfRange { value: value.clone(), n });
    }
    let mut digits = greedy_digits(value);
    digits.resize(n - 2, 0);
    Ok(ZeckExpansion { digits, value: value.clone() })
}

/// Whether `d_{k+m-1} … d_k = w` in the zero-extended expansion of `n`.
pub fn block_at(n: &BigUint, w: &DigitBlock, k: usize) -> bool {
    let digits = greedy_digits(n);
    (0..w.len()).all(|i| digits.get(k + i).copied().unwrap_or(0) == w.digit(i))
}

/// Machine-size variant of [`block_at`].
pub fn block_at_u64(n: u64, w: &DigitBlock, k: usize) -> bool {
    block_matcher(w, k).matches(n)
}

/// A precomputed positional block test for machine-size numbers.
#[derive(Clone, Copy, Debug)]
pub struct BlockMatcher {
    mask: u128,
    pattern: u128,
    /// block reaches beyond digit 127 but is all zeros there
    fits: bool,
}

impl BlockMatcher {
    pub fn matches(&self, n: u64) -> bool {
        self.fits && zeck_bits(n) & self.mask == self.pattern
    }
}

pub fn block_matcher(w: &DigitBlock, k: usize) -> BlockMatcher {
    let mut mask = 0u128;
    let mut pattern = 0u128;
    let mut fits = true;
    for i in 0..w.len() {
        let pos = k + i;
        if pos < 128 {
            mask |= 1 << pos;
            pattern |= u128::from(w.digit(i)) << pos;
        } else if w.digit(i) == 1 {
            // u64 values have no digit there
            fits = false;
        }
    }
    BlockMatcher { mask, pattern, fits }
}

/// Range bookkeeping: `Λ_n = {F_n, …, F_{n+1} - 1}` and `Ψ_n = {0, …, F_n - 1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RangeTag {
    Lambda(usize),
    Psi(usize),
}

impl RangeTag {
    /// Half-open bounds `[lo, hi)`.
    pub fn bounds(&self) -> Result<(BigUint, BigUint)> {
        match *self {
            RangeTag::Lambda(n) if n >= 2 => Ok((fib(n), fib(n + 1))),
            RangeTag::Psi(n) if n >= 2 => Ok((BigUint::zero(), fib(n))),
            RangeTag::Lambda(n) | RangeTag::Psi(n) => Err(ZeckError::RangeIndex { n }),
        }
    }

    pub fn contains(&self, value: &BigUint) -> bool {
        self.bounds().map(|(lo, hi)| &lo <= value && value < &hi).unwrap_or(false)
    }

    /// The `n` with `N ∈ Λ_n`, for `N ≥ 1`.
    pub fn lambda_of(value: &BigUint) -> Option<usize> {
        if value.is_zero() {
            return None;
        }
        Some(greedy_digits(value).len() + 1)
    }
}
