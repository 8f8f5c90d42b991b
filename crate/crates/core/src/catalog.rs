//! Named compound-Wythoff identities, materialized per parameter `m` and
//! checked pointwise.

use std::fmt;

use num_bigint::BigInt;
use serde::Serialize;

use crate::beatty::Gbs;
use crate::codec::DigitBlock;
use crate::solver::block_gbs;
use crate::wythoff::{Letter, WythoffWord};

/// One side of an identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Evaluable {
    /// Evaluated by direct composition.
    Word(WythoffWord),
    /// Evaluated from the closed form.
    Closed(Gbs),
    /// `R_w` through its closed form.
    Block(DigitBlock),
}

impl Evaluable {
    pub fn eval(&self, n: u64) -> BigInt {
        match self {
            Evaluable::Word(u) => u.direct_eval_u64(n),
            Evaluable::Closed(g) => g.eval_u64(n),
            Evaluable::Block(w) => block_gbs(w).eval_u64(n),
        }
    }
}

impl fmt::Display for Evaluable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Evaluable::Word(u) => write!(f, "{}", u.compact()),
            Evaluable::Closed(g) => write!(f, "{g}"),
            Evaluable::Block(w) => write!(f, "C({w})"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Identity {
    pub name: &'static str,
    pub m: usize,
    pub left: Evaluable,
    pub right: Evaluable,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub n: u64,
    pub left: String,
    pub right: String,
}

impl Identity {
    /// First `n` in `1..=n_max` where the two sides differ.
    pub fn check(&self, n_max: u64) -> Option<Mismatch> {
        (1..=n_max).find_map(|n| {
            let (l, r) = (self.left.eval(n), self.right.eval(n));
            (l != r).then(|| Mismatch { n, left: l.to_string(), right: r.to_string() })
        })
    }
}

fn letters(spec: &[(Letter, usize)]) -> WythoffWord {
    let v = spec.iter().flat_map(|&(l, k)| std::iter::repeat(l).take(k)).collect();
    WythoffWord::new(v, 0)
}

/// `w_{m-1} … w_0` from an MSB-first prefix followed by `zeros` zeros.
fn block_with_zeros(prefix: &str, zeros: usize) -> DigitBlock {
    let s = format!("{prefix}{}", "0".repeat(zeros));
    s.parse().expect("catalog blocks are valid")
}

/// Every identity for each `m` in `ms`.
///
/// The first three hold for `m ≥ 1`; the block identities for `m ≥ 0`.
/// `C(w)` sides are evaluated through the block closed form, so each block
/// identity ties a compound word to `F`-coefficients and `γ_w`.
pub fn identity_catalog(ms: impl IntoIterator<Item = usize>) -> Vec<Identity> {
    use Letter::{A, B};
    let mut out = Vec::new();
    for m in ms {
        if m >= 1 {
            // (A^m - 1)A, composed on the closed form of A^m - 1
            let am1 = WythoffWord::power(A, m).with_shift(-1);
            out.push(Identity {
                name: "(A^m-1)A = A^{m+1}-1",
                m,
                left: Evaluable::Closed(am1.csh_reduce().compose_a()),
                right: Evaluable::Word(WythoffWord::power(A, m + 1).with_shift(-1)),
            });
            out.push(Identity {
                name: "(A^{2m-1}-1)B = B^mA",
                m,
                left: Evaluable::Word(letters(&[(A, 2 * m - 1), (B, 1)]).with_shift(-1)),
                right: Evaluable::Word(letters(&[(B, m), (A, 1)])),
            });
            out.push(Identity {
                name: "(A^{2m}-1)B = AB^mA",
                m,
                left: Evaluable::Word(letters(&[(A, 2 * m), (B, 1)]).with_shift(-1)),
                right: Evaluable::Word(letters(&[(A, 1), (B, m), (A, 1)])),
            });
        }
        let block_rows: [(&'static str, &str, usize, WythoffWord); 6] = [
            ("C(10^{2m+1}) = B^{m+1}A", "1", 2 * m + 1, letters(&[(B, m + 1), (A, 1)])),
            ("C(10^{2m}) = AB^mA", "1", 2 * m, letters(&[(A, 1), (B, m), (A, 1)])),
            ("C(0010^{2m+1}) = B^{m+1}AA", "001", 2 * m + 1, letters(&[(B, m + 1), (A, 2)])),
            ("C(0010^{2m}) = AB^mAA", "001", 2 * m, letters(&[(A, 1), (B, m), (A, 2)])),
            ("C(1010^{2m+1}) = B^{m+1}AB", "101", 2 * m + 1, letters(&[(B, m + 1), (A, 1), (B, 1)])),
            ("C(1010^{2m}) = AB^mAB", "101", 2 * m, letters(&[(A, 1), (B, m), (A, 1), (B, 1)])),
        ];
        for (name, prefix, zeros, word) in block_rows {
            out.push(Identity {
                name,
                m,
                left: Evaluable::Block(block_with_zeros(prefix, zeros)),
                right: Evaluable::Word(word),
            });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_instances() {
        let cat = identity_catalog([1]);
        let find = |name: &str| cat.iter().find(|i| i.name == name).unwrap();
        let first = find("(A^m-1)A = A^{m+1}-1");
        assert_eq!(first.right.to_string(), "A^2-1");
        assert_eq!(first.check(100), None);
        let second = find("(A^{2m-1}-1)B = B^mA");
        assert_eq!(second.left.to_string(), "AB-1");
        assert_eq!(second.right.to_string(), "BA");
        assert_eq!(second.check(100), None);
    }

    #[test]
    fn block_one_is_aa() {
        let cat = identity_catalog([0]);
        assert_eq!(cat.len(), 6);
        let c1 = cat.iter().find(|i| i.name == "C(10^{2m}) = AB^mA").unwrap();
        assert_eq!(c1.left.to_string(), "C(1)");
        assert_eq!(c1.right.to_string(), "A^2");
        assert_eq!(c1.check(500), None);
    }

    #[test]
    fn whole_catalog_holds() {
        for id in identity_catalog(0..=5) {
            assert_eq!(id.check(1000), None, "{} at m={}", id.name, id.m);
        }
    }

    #[test]
    fn a_wrong_identity_is_caught() {
        let bogus = Identity {
            name: "bogus",
            m: 0,
            left: Evaluable::Word("AB".parse().unwrap()),
            right: Evaluable::Word("BA".parse().unwrap()),
        };
        let miss = bogus.check(10).unwrap();
        assert_eq!(miss.n, 1);
        assert_eq!((miss.left.as_str(), miss.right.as_str()), ("3", "2"));
    }
}
