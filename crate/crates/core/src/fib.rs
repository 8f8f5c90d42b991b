//! Fibonacci numbers, `F_0 = 0, F_1 = F_2 = 1`.
//!
//! Public entry points return [`BigUint`]; the first 94 values are kept in a
//! `u64` table used by the hot paths elsewhere in the crate.

use std::sync::OnceLock;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

/// Largest index whose Fibonacci number fits in a `u64`.
pub const MAX_FIB_U64_INDEX: usize = 93;

pub(crate) fn fib_table() -> &'static [u64; MAX_FIB_U64_INDEX + 1] {
    static TABLE: OnceLock<[u64; MAX_FIB_U64_INDEX + 1]> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut t = [0u64; MAX_FIB_U64_INDEX + 1];
        t[1] = 1;
        for i in 2..=MAX_FIB_U64_INDEX {
            t[i] = t[i - 1] + t[i - 2];
        }
        t
    })
}

/// `F_n` as a `u64`, or `None` past index 93.
pub fn fib_u64(n: usize) -> Option<u64> {
    fib_table().get(n).copied()
}

/// `F_n`, exact.
pub fn fib(n: usize) -> BigUint {
    if let Some(v) = fib_u64(n) {
        return BigUint::from(v);
    }
    // fast doubling from the top of the table
    let (f, _) = fib_pair(n);
    f
}

/// `F_n` for any integer index, using `F_{-n} = (-1)^{n+1} F_n`.
///
/// In particular `F_{-1} = 1`, which makes `φ^0 = F_0 φ + F_{-1}` come out right.
pub fn fib_signed(n: i64) -> BigInt {
    let mag = BigInt::from(fib(n.unsigned_abs() as usize));
    if n < 0 && n % 2 == 0 {
        -mag
    } else {
        mag
    }
}

/// `(F_n, F_{n+1})` by fast doubling.
fn fib_pair(n: usize) -> (BigUint, BigUint) {
    if n == 0 {
        return (BigUint::zero(), BigUint::one());
    }
    let (a, b) = fib_pair(n / 2);
    // F_2k = F_k (2 F_{k+1} - F_k), F_2k+1 = F_k^2 + F_{k+1}^2
    let two_b = &b << 1u32;
    let c = &a * (&two_b - &a);
    let d = &a * &a + &b * &b;
    if n % 2 == 0 {
        (c, d)
    } else {
        let e = &c + &d;
        (d, e)
    }
}

/// Twice-shifted Fibonacci number `F̈_i = F_{i+2}`, the weight of Zeckendorf digit `i`.
pub fn digit_weight(i: usize) -> BigUint {
    fib(i + 2)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn base_values() {
        assert_eq!(fib(0), BigUint::zero());
        assert_eq!(fib(1), BigUint::one());
        assert_eq!(fib(2), BigUint::one());
        assert_eq!(fib(10), BigUint::from(55u32));
        assert_eq!(digit_weight(0), BigUint::from(1u32));
        assert_eq!(digit_weight(1), BigUint::from(2u32));
    }

    #[test]
    fn recurrence_past_u64() {
        let mut a = BigUint::zero();
        let mut b = BigUint::one();
        for n in 0..400 {
            assert_eq!(fib(n), a, "F_{n}");
            let c = &a + &b;
            a = b;
            b = c;
        }
    }

    #[test]
    fn table_edge() {
        assert_eq!(fib_u64(93), Some(12_200_160_415_121_876_738));
        assert_eq!(fib_u64(94), None);
        assert_eq!(fib(94), BigUint::from(12_200_160_415_121_876_738u64) + BigUint::from(7_540_113_804_746_346_429u64));
    }

    #[test]
    fn negative_indices() {
        assert_eq!(fib_signed(-1), BigInt::from(1));
        assert_eq!(fib_signed(-2), BigInt::from(-1));
        assert_eq!(fib_signed(-3), BigInt::from(2));
        assert_eq!(fib_signed(-4), BigInt::from(-3));
        assert_eq!(fib_signed(7), BigInt::from(13));
    }

    #[test]
    fn product_identity() {
        // F_m F_n + F_{m+1} F_{n+1} = F_{m+n+1}
        for m in 1..=60 {
            for n in 1..=60 {
                assert_eq!(fib(m) * fib(n) + fib(m + 1) * fib(n + 1), fib(m + n + 1), "m={m} n={n}");
            }
        }
    }
}
