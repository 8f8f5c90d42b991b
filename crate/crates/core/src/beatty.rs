//! Lower and upper Wythoff sequences and generalized Beatty sequences
//! `V(n) = p·A(n) + q·n + r` for the golden mean.

use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Roots;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Result, ZeckError};
use crate::golden::GoldenNumber;

const SMALL_LIMIT: u64 = 1 << 62;

/// `A(n) = ⌊nφ⌋ = (n + ⌊√(5n²)⌋) / 2` for `n < 2^62`, no floating point.
pub fn wythoff_a_small(n: u64) -> u128 {
    debug_assert!(n < SMALL_LIMIT);
    let n = u128::from(n);
    (n + (5 * n * n).sqrt()) / 2
}

/// Lower Wythoff sequence `A(n) = ⌊nφ⌋`.
///
/// `√5·n` is irrational for `n ≥ 1`, so the integer square root never lands on a tie.
pub fn wythoff_a(n: &BigUint) -> BigUint {
    if let Some(small) = n.to_u64().filter(|&v| v < SMALL_LIMIT) {
        return BigUint::from(wythoff_a_small(small));
    }
    let five_n2: BigUint = n * n * 5u32;
    (n + five_n2.sqrt()) >> 1u32
}

/// Upper Wythoff sequence `B(n) = ⌊nφ²⌋ = A(n) + n`.
pub fn wythoff_b(n: &BigUint) -> BigUint {
    wythoff_a(n) + n
}

/// Generalized Beatty sequence `n ↦ p·A(n) + q·n + r`, `n ≥ 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Gbs {
    pub p: BigInt,
    pub q: BigInt,
    pub r: BigInt,
}

impl Gbs {
    pub fn new(p: impl Into<BigInt>, q: impl Into<BigInt>, r: impl Into<BigInt>) -> Self {
        Gbs { p: p.into(), q: q.into(), r: r.into() }
    }

    /// `n ↦ A(n)`.
    pub fn lower() -> Self {
        Gbs::new(1, 0, 0)
    }

    /// `n ↦ B(n) = A(n) + n`.
    pub fn upper() -> Self {
        Gbs::new(1, 1, 0)
    }

    /// `n ↦ n`.
    pub fn identity() -> Self {
        Gbs::new(0, 1, 0)
    }

    pub fn eval(&self, n: &BigUint) -> BigInt {
        let a = BigInt::from(wythoff_a(n));
        &self.p * a + &self.q * BigInt::from(n.clone()) + &self.r
    }

    pub fn eval_u64(&self, n: u64) -> BigInt {
        self.eval(&BigUint::from(n))
    }

    /// `V∘A`, with parameters `(p + q, p, r - p)`.
    pub fn compose_a(&self) -> Gbs {
        Gbs { p: &self.p + &self.q, q: self.p.clone(), r: &self.r - &self.p }
    }

    /// `V∘B`, with parameters `(2p + q, p + q, r)`.
    pub fn compose_b(&self) -> Gbs {
        Gbs { p: &self.p * 2 + &self.q, q: &self.p + &self.q, r: self.r.clone() }
    }

    pub fn shifted(&self, c: &BigInt) -> Gbs {
        Gbs { p: self.p.clone(), q: self.q.clone(), r: &self.r + c }
    }

    /// Asymptotic slope `pφ + q`.
    pub fn slope(&self) -> GoldenNumber {
        GoldenNumber::new(self.q.clone(), self.p.clone())
    }

    /// Strictly increasing on `n ≥ 1`.
    ///
    /// `V(n+1) - V(n) = p·(A(n+1) - A(n)) + q` with `A(n+1) - A(n) ∈ {1, 2}`,
    /// and both gaps occur, so both `p + q` and `2p + q` must be positive.
    pub fn is_increasing(&self) -> bool {
        let one_gap = &self.p + &self.q;
        let two_gap: BigInt = &self.p * 2 + &self.q;
        one_gap.is_positive() && two_gap.is_positive()
    }
}

fn write_term(f: &mut fmt::Formatter<'_>, coeff: &BigInt, name: &str, first: &mut bool) -> fmt::Result {
    if coeff.is_zero() {
        return Ok(());
    }
    let sign = if coeff.is_negative() { "-" } else if *first { "" } else { "+" };
    let mag = coeff.abs();
    if mag.is_one() && !name.is_empty() {
        write!(f, "{sign}{name}")?;
    } else {
        write!(f, "{sign}{mag}{name}")?;
    }
    *first = false;
    Ok(())
}

impl fmt::Display for Gbs {
    /// `3A+2Id-5` style.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        write_term(f, &self.p, "A", &mut first)?;
        write_term(f, &self.q, "Id", &mut first)?;
        write_term(f, &self.r, "", &mut first)?;
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// A finite union of pairwise disjoint increasing generalized Beatty sequences.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OccurrenceSet {
    branches: Vec<Gbs>,
}

impl OccurrenceSet {
    pub fn new(branches: Vec<Gbs>) -> Result<Self> {
        if branches.is_empty() {
            return Err(ZeckError::EmptyOccurrenceSet);
        }
        if let Some(bad) = branches.iter().find(|b| !b.is_increasing()) {
            return Err(ZeckError::NotIncreasing { branch: bad.to_string() });
        }
        Ok(OccurrenceSet { branches })
    }

    pub fn branches(&self) -> &[Gbs] {
        &self.branches
    }

    /// Asymptotic density of the union, `Σ 1 / (pφ + q)`, when every slope is a unit of `Z[φ]`.
    pub fn unit_density(&self) -> Option<GoldenNumber> {
        self.branches.iter().map(|b| b.slope().unit_inverse()).sum::<Option<GoldenNumber>>()
    }

    /// First `count` terms of the sorted union.
    pub fn enumerate(&self, count: usize) -> Result<Vec<BigInt>> {
        let mut out = Vec::with_capacity(count);
        self.merge(|v| {
            if out.len() == count {
                return false;
            }
            out.push(v.clone());
            true
        })?;
        Ok(out)
    }

    /// All terms of the sorted union below `bound`.
    pub fn enumerate_below(&self, bound: &BigInt) -> Result<Vec<BigInt>> {
        let mut out = Vec::new();
        self.merge(|v| {
            if v >= bound {
                return false;
            }
            out.push(v.clone());
            true
        })?;
        Ok(out)
    }

    /// k-way merge; `sink` returns false to stop. Equal heads are a disjointness violation.
    fn merge(&self, mut sink: impl FnMut(&BigInt) -> bool) -> Result<()> {
        let mut heap = BinaryHeap::with_capacity(self.branches.len());
        for (i, b) in self.branches.iter().enumerate() {
            heap.push(Reverse((b.eval_u64(1), i, 1u64)));
        }
        let mut prev: Option<BigInt> = None;
        while let Some(Reverse((value, branch, n))) = heap.pop() {
            if prev.as_ref() == Some(&value) {
                return Err(ZeckError::OverlappingBranches { value });
            }
            if !sink(&value) {
                // a tie with the stopping value still counts as an overlap
                if heap.peek().is_some_and(|Reverse((v, _, _))| *v == value) {
                    return Err(ZeckError::OverlappingBranches { value });
                }
                return Ok(());
            }
            let next = self.branches[branch].eval_u64(n + 1);
            heap.push(Reverse((next, branch, n + 1)));
            prev = Some(value);
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fib::fib_u64;
    use num_bigint::Sign;

    fn big(n: u64) -> BigUint {
        BigUint::from(n)
    }

    #[test]
    fn lower_and_upper_listings() {
        let a: Vec<u64> = (1..=7).map(|n| wythoff_a(&big(n)).to_u64().unwrap()).collect();
        assert_eq!(a, [1, 3, 4, 6, 8, 9, 11]);
        let b: Vec<u64> = (1..=6).map(|n| wythoff_b(&big(n)).to_u64().unwrap()).collect();
        assert_eq!(b, [2, 5, 7, 10, 13, 15]);
        for n in 1..=10_000u64 {
            assert_eq!(wythoff_b(&big(n)) - wythoff_a(&big(n)), big(n));
        }
    }

    /// Floor of `n·φ` bracketed by consecutive convergents `F_{k+1}/F_k`,
    /// which alternate around φ.
    fn floor_n_phi_by_convergents(n: u64) -> u128 {
        for k in (20..90).step_by(2) {
            let (lo_num, lo_den) = (fib_u64(k + 1).unwrap() as u128, fib_u64(k).unwrap() as u128);
            let (hi_num, hi_den) = (fib_u64(k + 2).unwrap() as u128, fib_u64(k + 1).unwrap() as u128);
            // φ lies strictly between the two ratios, so equal floors pin ⌊nφ⌋
            let n = n as u128;
            let (lo, hi) = (n * hi_num / hi_den, n * lo_num / lo_den);
            if lo == hi {
                return lo;
            }
        }
        panic!("convergents did not separate");
    }

    #[test]
    fn lower_matches_convergent_bracket() {
        for n in (1..2000).chain([1_000_000, 999_999, 123_456_789, 1 << 40]) {
            assert_eq!(wythoff_a_small(n), floor_n_phi_by_convergents(n), "n={n}");
        }
    }

    #[test]
    fn big_path_matches_small_path() {
        for n in [1u64, 2, 3, 1000, 1 << 40, (1 << 62) - 1] {
            let five_n2: BigUint = big(n) * big(n) * 5u32;
            let via_big = (big(n) + five_n2.sqrt()) >> 1u32;
            assert_eq!(wythoff_a(&big(n)), via_big);
        }
        // A(n) for n = 2^80 via bracketing with the B = A + Id complement
        let n = BigUint::one() << 80u32;
        let a = wythoff_a(&n);
        assert!(&a * &a < &n * &n + &a * &n);
    }

    #[test]
    fn beatty_partition() {
        let limit = 10_000u64;
        let a: Vec<u64> = (1..=limit).map(|n| wythoff_a_small(n) as u64).collect();
        let b: Vec<u64> = (1..=limit).map(|n| wythoff_a_small(n) as u64 + n).collect();
        let top = a[a.len() - 1].min(b[b.len() - 1]);
        let mut seen = vec![0u8; (top + 1) as usize];
        for v in a.iter().chain(b.iter()).filter(|&&v| v <= top) {
            seen[*v as usize] += 1;
        }
        assert!(seen[1..].iter().all(|&c| c == 1));
    }

    #[test]
    fn eval_examples() {
        for n in 1..50 {
            assert_eq!(Gbs::lower().eval_u64(n), BigInt::from(wythoff_a(&big(n))));
        }
        assert_eq!(Gbs::new(2, 1, -1).eval_u64(1), BigInt::from(2));
        assert_eq!(Gbs::new(1, 1, -2).eval_u64(3), BigInt::from(5));
    }

    #[test]
    fn compose_examples() {
        assert_eq!(Gbs::lower().compose_a(), Gbs::new(1, 1, -1));
        assert_eq!(Gbs::lower().compose_b(), Gbs::new(2, 1, 0));
        assert_eq!(Gbs::identity().compose_a(), Gbs::lower());
        let ab = Gbs::lower().compose_b();
        for n in 1..=1000u64 {
            assert_eq!(ab.eval_u64(n), BigInt::from(wythoff_a(&wythoff_b(&big(n)))));
        }
    }

    #[test]
    fn display_forms() {
        assert_eq!(Gbs::new(3, 2, -5).to_string(), "3A+2Id-5");
        assert_eq!(Gbs::new(1, 0, -1).to_string(), "A-1");
        assert_eq!(Gbs::new(1, 1, -1).to_string(), "A+Id-1");
        assert_eq!(Gbs::new(0, 1, -1).to_string(), "Id-1");
        assert_eq!(Gbs::new(-1, 0, 3).to_string(), "-A+3");
        assert_eq!(Gbs::new(0, 0, 0).to_string(), "0");
        assert_eq!(Gbs::new(2, -1, 0).to_string(), "2A-Id");
    }

    #[test]
    fn union_examples() {
        let set = OccurrenceSet::new(vec![Gbs::new(3, 2, -5), Gbs::new(3, 2, -4), Gbs::new(3, 2, -3)]).unwrap();
        let got: Vec<i64> = set.enumerate(6).unwrap().iter().map(|v| v.to_i64().unwrap()).collect();
        // A(1) = 1, A(2) = 3: 0,1,2 then 8,9,10
        assert_eq!(got, [0, 1, 2, 8, 9, 10]);

        let ab = OccurrenceSet::new(vec![Gbs::lower(), Gbs::upper()]).unwrap();
        let got: Vec<i64> = ab.enumerate(5).unwrap().iter().map(|v| v.to_i64().unwrap()).collect();
        assert_eq!(got, [1, 2, 3, 4, 5]);

        let single = OccurrenceSet::new(vec![Gbs::new(2, 1, -1)]).unwrap();
        let got = single.enumerate(20).unwrap();
        let direct: Vec<BigInt> = (1..=20).map(|n| Gbs::new(2, 1, -1).eval_u64(n)).collect();
        assert_eq!(got, direct);
    }

    #[test]
    fn union_rejects_overlap() {
        let set = OccurrenceSet::new(vec![Gbs::lower(), Gbs::new(1, 1, -1)]).unwrap();
        // A and AA = A+Id-1 share every AA value
        assert!(matches!(set.enumerate(10), Err(ZeckError::OverlappingBranches { .. })));
        assert!(matches!(OccurrenceSet::new(vec![]), Err(ZeckError::EmptyOccurrenceSet)));
        assert!(matches!(OccurrenceSet::new(vec![Gbs::new(-1, 1, 0)]), Err(ZeckError::NotIncreasing { .. })));
    }

    #[test]
    fn union_below_bound() {
        let set = OccurrenceSet::new(vec![Gbs::new(3, 2, -5), Gbs::new(3, 2, -4), Gbs::new(3, 2, -3)]).unwrap();
        let got: Vec<i64> = set.enumerate_below(&BigInt::from(10)).unwrap().iter().map(|v| v.to_i64().unwrap()).collect();
        assert_eq!(got, [0, 1, 2, 8, 9]);
    }

    #[test]
    fn increasing_matches_slope_for_solver_shapes() {
        assert!(Gbs::new(3, 2, -5).is_increasing());
        assert_eq!(Gbs::new(3, 2, -5).slope().signum(), Sign::Plus);
        // positive slope but a flat step: A(n+1) - A(n) = 2 gives -2 + 2 = 0
        assert!(!Gbs::new(-1, 2, 0).is_increasing());
        assert!(!Gbs::new(0, 0, 1).is_increasing());
    }
}

#[cfg(test)]
mod props {
    use super::*;
    use proptest::prelude::*;

    proptest! {
        #[test]
        fn composition_is_pointwise(p in -10i64..=10, q in -10i64..=10, r in -10i64..=10, n in 1u64..=1000) {
            let v = Gbs::new(p, q, r);
            let n = BigUint::from(n);
            prop_assert_eq!(v.compose_a().eval(&n), v.eval(&wythoff_a(&n)));
            prop_assert_eq!(v.compose_b().eval(&n), v.eval(&wythoff_b(&n)));
        }
    }
}
