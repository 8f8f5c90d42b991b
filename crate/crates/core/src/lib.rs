//! Digit blocks of Zeckendorf expansions.
//!
//! For every finite 0/1 block `w` without `11`, the numbers whose Zeckendorf
//! expansion ends with `w` (or carries `w` at a fixed position) form a
//! compound Wythoff sequence or a finite union of generalized Beatty
//! sequences `p⌊nφ⌋ + qn + r`. This crate computes those closed forms,
//! their exact densities in `Z[φ]`, and certifies them against brute-force
//! enumeration of expansions.
//!
//! ```
//! use zeckendorf_core::{encode, solve_block, DigitBlock};
//! use num_bigint::BigUint;
//!
//! assert_eq!(encode(&BigUint::from(11u32)).to_string(), "10100");
//! let w: DigitBlock = "100".parse().unwrap();
//! let sol = solve_block(&w).unwrap();
//! assert_eq!(sol.compound.to_string(), "ABA");
//! assert_eq!(sol.gbs.to_string(), "3A+2Id-2");
//! ```

pub mod beatty;
pub mod catalog;
pub mod codec;
pub mod error;
pub mod fib;
pub mod fibword;
pub mod golden;
pub mod oracle;
pub mod par;
pub mod solver;
pub mod wythoff;

pub use beatty::{wythoff_a, wythoff_b, Gbs, OccurrenceSet};
pub use catalog::{identity_catalog, Evaluable, Identity};
pub use codec::{block_at, decode, encode, encode_padded, DigitBlock, RangeTag, ZeckExpansion};
pub use error::{Result, ZeckError};
pub use fib::fib;
pub use fibword::{morphism_iterate, occurrence_coding, positions_of, FibLetter, FibWord};
pub use golden::{phi_pow, GoldenNumber};
pub use oracle::{brute_occurrences, certify, empirical_density, CertifyConfig, VerificationReport};
pub use par::Execution;
pub use solver::{density, density_total, gamma, render_tree, solve_block, solve_positional, tree, BlockSolution, DensityValue, TreeNode};
pub use wythoff::{wythoff_array, Letter, WythoffWord};
