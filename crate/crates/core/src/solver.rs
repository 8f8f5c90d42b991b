//! Closed forms for the numbers whose Zeckendorf expansion carries a given
//! digit block, either at the end or at a fixed position.
//!
//! Every block `w` gets two descriptions built along independent routes:
//! a compound Wythoff word grown along the Fibonacci tree, and a generalized
//! Beatty sequence whose coefficients depend only on `|w|` and `w_{m-1}` and
//! whose offset `γ_w` is read off the `00` pairs of `w`.

use std::fmt::Write as _;

use num_bigint::{BigInt, BigUint};
use num_traits::One;
use serde::Serialize;

use crate::beatty::{Gbs, OccurrenceSet};
use crate::codec::DigitBlock;
use crate::error::{Result, ZeckError};
use crate::fib::fib;
use crate::golden::{phi_pow, GoldenNumber};
use crate::wythoff::{Letter, WythoffWord};

/// Default depth limit for [`tree`].
pub const DEFAULT_TREE_LIMIT: usize = 20;

/// `γ_w = -(1 + Σ F_k)` over `0 < k < m` with `w_k w_{k-1} = 00`.
pub fn gamma(w: &DigitBlock) -> BigInt {
    let bits = w.lsb_digits();
    let sum: BigUint = (1..bits.len())
        .filter(|&k| bits[k] == 0 && bits[k - 1] == 0)
        .map(fib)
        .sum();
    -BigInt::from(sum + 1u32)
}

/// The closed form `F_{m+w_{m-1}} A + F_{m-1+w_{m-1}} Id + γ_w`.
pub fn block_gbs(w: &DigitBlock) -> Gbs {
    let top = w.len() + usize::from(w.leading());
    Gbs::new(fib(top), fib(top - 1), gamma(w))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockSolution {
    pub word: DigitBlock,
    /// Compound Wythoff form, shifted by -1 for all-zero blocks.
    pub compound: WythoffWord,
    /// `B-1` for the block `1`, which the tree also writes as `AA`.
    pub alternate: Option<WythoffWord>,
    pub gbs: Gbs,
    pub gamma: BigInt,
    /// `w = 1` or `w = 0^m`: not a plain compound Wythoff sequence.
    pub exceptional: bool,
    /// The empty block (tree root), read as `n ↦ n - 1`.
    pub extension: bool,
}

impl BlockSolution {
    fn root() -> Self {
        BlockSolution {
            word: DigitBlock::empty(),
            compound: WythoffWord::identity().with_shift(-1),
            alternate: None,
            gbs: Gbs::new(0, 1, -1),
            gamma: BigInt::from(-1),
            exceptional: false,
            extension: true,
        }
    }

    /// Solution for `d·w`, or `None` if that block contains `11`.
    pub fn extend(&self, d: u8) -> Option<BlockSolution> {
        let word = self.word.extend_left(d)?;
        let parent = &self.word;
        let compound = if parent.is_empty() {
            if d == 0 {
                WythoffWord::power(Letter::A, 1).with_shift(-1)
            } else {
                WythoffWord::power(Letter::A, 2)
            }
        } else if parent.leading() == 1 {
            // 0·1u: every occurrence of 1u is already preceded by 0
            self.compound.clone()
        } else if d == 0 {
            self.compound.then_letter(Letter::A)
        } else if parent.is_all_zero() {
            // (A^j - 1)B = B^t A for j = 2t - 1, and A B^t A for j = 2t
            let j = parent.len();
            let t = j.div_ceil(2);
            let mut letters = Vec::with_capacity(t + 2);
            if j % 2 == 0 {
                letters.push(Letter::A);
            }
            letters.extend(std::iter::repeat(Letter::B).take(t));
            letters.push(Letter::A);
            WythoffWord::new(letters, 0)
        } else {
            self.compound.then_letter(Letter::B)
        };
        let m = word.len();
        let exceptional = word.is_all_zero() || (m == 1 && word.leading() == 1);
        let alternate = (exceptional && word.leading() == 1).then(|| WythoffWord::power(Letter::B, 1).with_shift(-1));
        Some(BlockSolution {
            gbs: block_gbs(&word),
            gamma: gamma(&word),
            word,
            compound,
            alternate,
            exceptional,
            extension: false,
        })
    }

    /// `R_w(1), …, R_w(count)` from the closed form.
    pub fn terms(&self, count: u64) -> Vec<BigInt> {
        (1..=count).map(|n| self.gbs.eval_u64(n)).collect()
    }

    pub fn record(&self, count: u64) -> SolutionRecord {
        SolutionRecord {
            word: self.word.to_string(),
            compound: self.compound.to_string(),
            alternate: self.alternate.as_ref().map(|w| w.to_string()),
            gbs: self.gbs.to_string(),
            p: self.gbs.p.to_string(),
            q: self.gbs.q.to_string(),
            r: self.gbs.r.to_string(),
            exceptional: self.exceptional,
            extension: self.extension,
            first_terms: self.terms(count).iter().map(|v| v.to_string()).collect(),
        }
    }

    /// The compound column as the tree figure writes it (`B-1=AA` for the block `1`).
    pub fn compound_label(&self) -> String {
        match &self.alternate {
            Some(alt) => format!("{alt}={}", self.compound),
            None => self.compound.to_string(),
        }
    }
}

/// Serialized form of a [`BlockSolution`]. Big integers are carried as decimal strings.
#[derive(Clone, Debug, Serialize)]
pub struct SolutionRecord {
    pub word: String,
    pub compound: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alternate: Option<String>,
    pub gbs: String,
    pub p: String,
    pub q: String,
    pub r: String,
    pub exceptional: bool,
    pub extension: bool,
    pub first_terms: Vec<String>,
}

/// `R_w` as a compound Wythoff sequence and as a generalized Beatty sequence.
pub fn solve_block(w: &DigitBlock) -> Result<BlockSolution> {
    if w.is_empty() {
        return Err(ZeckError::EmptyBlock);
    }
    let mut sol = BlockSolution::root();
    for &d in w.lsb_digits() {
        // w has no 11, so every step exists
        sol = sol.extend(d).expect("valid block");
    }
    Ok(sol)
}

/// Solution for any block, the empty one included.
pub fn solve_any(w: &DigitBlock) -> BlockSolution {
    if w.is_empty() {
        BlockSolution::root()
    } else {
        solve_block(w).expect("non-empty")
    }
}

#[derive(Clone, Debug)]
pub struct TreeNode {
    pub solution: BlockSolution,
    /// `0w` first, then `1w` when allowed.
    pub children: Vec<TreeNode>,
}

impl TreeNode {
    fn grow(solution: BlockSolution, depth: usize) -> TreeNode {
        let children = if depth == 0 {
            Vec::new()
        } else {
            [0u8, 1]
                .iter()
                .filter_map(|&d| solution.extend(d))
                .map(|child| TreeNode::grow(child, depth - 1))
                .collect()
        };
        TreeNode { solution, children }
    }

    /// Nodes in pre-order.
    pub fn walk(&self) -> Vec<&BlockSolution> {
        let mut out = vec![&self.solution];
        for c in &self.children {
            out.extend(c.walk());
        }
        out
    }

    /// Solutions at distance `d` from this node.
    pub fn level(&self, d: usize) -> Vec<&BlockSolution> {
        if d == 0 {
            return vec![&self.solution];
        }
        self.children.iter().flat_map(|c| c.level(d - 1)).collect()
    }

    pub fn depth(&self) -> usize {
        self.children.iter().map(|c| c.depth() + 1).max().unwrap_or(0)
    }
}

/// The Fibonacci tree of blocks up to length `depth`.
pub fn tree(depth: usize) -> Result<TreeNode> {
    tree_with_limit(depth, DEFAULT_TREE_LIMIT)
}

pub fn tree_with_limit(depth: usize, limit: usize) -> Result<TreeNode> {
    if depth > limit {
        return Err(ZeckError::TreeTooDeep { depth, limit });
    }
    Ok(TreeNode::grow(BlockSolution::root(), depth))
}

/// Indented `word → compound → closed form` lines; the root prints as `Λ → ∅ → ∅`.
pub fn render_tree(root: &TreeNode) -> String {
    fn go(node: &TreeNode, indent: usize, out: &mut String) {
        let s = &node.solution;
        let pad = "  ".repeat(indent);
        if s.extension {
            let _ = writeln!(out, "{pad}Λ → ∅ → ∅");
        } else {
            let _ = writeln!(out, "{pad}{} → {} → {}", s.word, s.compound_label(), s.gbs);
        }
        for c in &node.children {
            go(c, indent + 1, out);
        }
    }
    let mut out = String::new();
    go(root, 0, &mut out);
    out
}

/// `R_w^{(k)}`: numbers with `d_{k+m-1} … d_k = w`.
///
/// With `v = w·0^k`, the branches share the coefficients of `R_v` and take
/// the consecutive offsets `γ_v, …, γ_v + F_{k+2-w_0} - 1`.
pub fn solve_positional(w: &DigitBlock, k: usize) -> Result<OccurrenceSet> {
    if w.is_empty() {
        return Err(ZeckError::EmptyBlock);
    }
    let v = w.append_zeros(k);
    let base = block_gbs(&v);
    let count = fib(k + 2 - usize::from(w.last()));
    let mut branches = Vec::new();
    let mut offset = BigInt::from(0);
    let count = BigInt::from(count);
    while offset < count {
        branches.push(base.shifted(&offset));
        offset += 1;
    }
    OccurrenceSet::new(branches)
}

/// Exact density `F_{k+2-w_0} φ^{-k-m-w_{m-1}}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DensityValue {
    pub value: GoldenNumber,
    pub coeff: BigUint,
    pub exponent: i64,
}

impl DensityValue {
    pub fn record(&self) -> DensityRecord {
        DensityRecord {
            coeff: self.coeff.to_string(),
            exponent: self.exponent,
            a: self.value.a.to_string(),
            b: self.value.b.to_string(),
            decimal: self.value.to_f64(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct DensityRecord {
    pub coeff: String,
    pub exponent: i64,
    pub a: String,
    pub b: String,
    /// Display only.
    pub decimal: f64,
}

pub fn density(w: &DigitBlock, k: usize) -> Result<DensityValue> {
    if w.is_empty() {
        return Err(ZeckError::EmptyBlock);
    }
    let coeff = fib(k + 2 - usize::from(w.last()));
    let exponent = -((k + w.len() + usize::from(w.leading())) as i64);
    let value = &GoldenNumber::from_int(BigInt::from(coeff.clone())) * &phi_pow(exponent);
    Ok(DensityValue { value, coeff, exponent })
}

/// Sum of `density(w, k)` over all blocks of length `m`.
pub fn density_total(m: usize, k: usize) -> GoldenNumber {
    if m == 0 {
        // the empty block matches every number
        return GoldenNumber::one();
    }
    DigitBlock::all_of_length(m)
        .iter()
        .filter_map(|w| density(w, k).ok())
        .map(|d| d.value)
        .sum()
}

/// Whether a density is exactly one.
pub fn is_exactly_one(x: &GoldenNumber) -> bool {
    x.a.is_one() && x.b == BigInt::from(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn block(s: &str) -> DigitBlock {
        s.parse().unwrap()
    }

    #[test]
    fn gamma_examples() {
        assert_eq!(gamma(&block("00")), BigInt::from(-2));
        assert_eq!(gamma(&block("101")), BigInt::from(-1));
        assert_eq!(gamma(&block("0000")), BigInt::from(-5));
        assert_eq!(gamma(&block("0")), BigInt::from(-1));
        assert_eq!(gamma(&block("1")), BigInt::from(-1));
    }

    #[test]
    fn solve_examples() {
        let s = solve_block(&block("10")).unwrap();
        assert_eq!(s.compound.to_string(), "BA");
        assert_eq!(s.gbs, Gbs::new(2, 1, -1));
        let s = solve_block(&block("100")).unwrap();
        assert_eq!(s.compound.to_string(), "ABA");
        assert_eq!(s.gbs, Gbs::new(3, 2, -2));
        let s = solve_block(&block("000")).unwrap();
        assert_eq!(s.compound.to_string(), "AAA-1");
        assert_eq!(s.gbs, Gbs::new(2, 1, -3));
        assert!(s.exceptional);
        let s = solve_block(&block("1")).unwrap();
        assert_eq!(s.compound_label(), "B-1=AA");
        assert!(s.exceptional);
        assert!(!solve_block(&block("01")).unwrap().exceptional);
        assert_eq!(solve_block(&DigitBlock::empty()), Err(ZeckError::EmptyBlock));
    }

    #[test]
    fn all_zero_blocks() {
        for m in 1..=12 {
            let s = solve_block(&DigitBlock::zeros(m)).unwrap();
            assert_eq!(s.compound, WythoffWord::power(Letter::A, m).with_shift(-1));
            assert_eq!(s.gbs, Gbs::new(fib(m), fib(m - 1), -BigInt::from(fib(m + 1))));
        }
    }

    #[test]
    fn one_then_zeros() {
        // C(10^{2t-1}) = B^t A, C(10^{2t}) = A B^t A
        assert_eq!(solve_block(&block("10")).unwrap().compound.to_string(), "BA");
        assert_eq!(solve_block(&block("100")).unwrap().compound.to_string(), "ABA");
        assert_eq!(solve_block(&block("1000")).unwrap().compound.to_string(), "BBA");
        assert_eq!(solve_block(&block("10000")).unwrap().compound.to_string(), "ABBA");
    }

    #[test]
    fn tree_shape() {
        let t = tree(1).unwrap();
        let level: Vec<_> = t.level(1).iter().map(|s| (s.word.to_string(), s.gbs.clone())).collect();
        assert_eq!(level, vec![("0".into(), Gbs::new(1, 0, -1)), ("1".into(), Gbs::new(1, 1, -1))]);
        let t = tree(8).unwrap();
        for d in 0..=8 {
            assert_eq!(t.level(d).len(), fib(d + 2).try_into().unwrap_or(0usize));
        }
        assert_eq!(t.depth(), 8);
        assert!(matches!(tree(21), Err(ZeckError::TreeTooDeep { depth: 21, limit: 20 })));
        assert_eq!(tree(0).unwrap().walk().len(), 1);
    }

    #[test]
    fn tree_agrees_with_direct_solve() {
        let t = tree(9).unwrap();
        for s in t.walk().into_iter().skip(1) {
            assert_eq!(&solve_block(&s.word).unwrap(), s);
        }
    }

    #[test]
    fn positional_examples() {
        let set = solve_positional(&block("00"), 2).unwrap();
        let got: Vec<String> = set.branches().iter().map(|b| b.to_string()).collect();
        assert_eq!(got, ["3A+2Id-5", "3A+2Id-4", "3A+2Id-3"]);
        let set = solve_positional(&block("10"), 0).unwrap();
        assert_eq!(set.branches(), [Gbs::new(2, 1, -1)]);
        let set = solve_positional(&block("1"), 1).unwrap();
        assert_eq!(set.branches(), [Gbs::new(2, 1, -1)]);
        assert!(solve_positional(&DigitBlock::empty(), 1).is_err());
    }

    #[test]
    fn density_examples() {
        assert_eq!(density(&block("0"), 0).unwrap().value, phi_pow(-1));
        assert_eq!(density(&block("1"), 0).unwrap().value, phi_pow(-2));
        let d = density(&block("00"), 2).unwrap();
        assert_eq!(d.coeff, BigUint::from(3u32));
        assert_eq!(d.exponent, -4);
        assert_eq!(d.value, &GoldenNumber::from_int(3) * &phi_pow(-4));
    }

    #[test]
    fn totals_are_one() {
        for m in 1..=6 {
            for k in 0..=4 {
                assert!(is_exactly_one(&density_total(m, k)), "m={m} k={k}");
            }
        }
    }

    #[test]
    fn density_matches_branch_slopes() {
        for m in 1..=5 {
            for w in DigitBlock::all_of_length(m) {
                for k in 0..=4 {
                    let set = solve_positional(&w, k).unwrap();
                    assert_eq!(set.unit_density().unwrap(), density(&w, k).unwrap().value, "w={w} k={k}");
                }
            }
        }
    }

    #[test]
    fn render_small_tree() {
        let text = render_tree(&tree(1).unwrap());
        assert_eq!(text, "Λ → ∅ → ∅\n  0 → A-1 → A-1\n  1 → B-1=AA → A+Id-1\n");
    }
}
