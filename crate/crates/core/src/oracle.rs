//! Brute-force ground truth and the certification suite.
//!
//! The enumeration side only calls into the codec (greedy expansion plus a
//! positional digit test). Closed forms are never consulted there, so a
//! passing comparison means two independent computations agree.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::beatty::wythoff_a_small;
use crate::catalog::identity_catalog;
use crate::codec::{block_matcher, DigitBlock};
use crate::fib::fib_u64;
use crate::fibword::{morphism_iterate, occurrence_coding, positions_of, FibLetter};
use crate::par::Execution;
use crate::solver::{density, density_total, is_exactly_one, solve_any, solve_positional, BlockSolution};
use crate::wythoff::WythoffWord;

/// All `N < bound` with `w` at position `k`, ascending.
pub fn brute_occurrences(w: &DigitBlock, k: usize, bound: u64) -> Vec<u64> {
    brute_occurrences_with(Execution::default(), w, k, bound)
}

pub fn brute_occurrences_with(exec: Execution, w: &DigitBlock, k: usize, bound: u64) -> Vec<u64> {
    let matcher = block_matcher(w, k);
    exec.filter_range(0, bound, move |n| matcher.matches(n))
}

/// The first `count` numbers with `w` at position `k`, scanning upward as far as needed.
pub fn brute_first(exec: Execution, w: &DigitBlock, k: usize, count: usize) -> Vec<u64> {
    let matcher = block_matcher(w, k);
    let mut hits = Vec::with_capacity(count);
    let mut lo = 0u64;
    let mut width = 1u64 << 12;
    while hits.len() < count {
        let hi = lo.saturating_add(width);
        hits.extend(exec.filter_range(lo, hi, move |n| matcher.matches(n)));
        if hi == u64::MAX {
            break;
        }
        lo = hi;
        width = width.saturating_mul(2);
    }
    hits.truncate(count);
    hits
}

/// `|{N < bound : w at position k}| / bound`.
pub fn empirical_density(w: &DigitBlock, k: usize, bound: u64) -> BigRational {
    empirical_density_with(Execution::default(), w, k, bound)
}

pub fn empirical_density_with(exec: Execution, w: &DigitBlock, k: usize, bound: u64) -> BigRational {
    let matcher = block_matcher(w, k);
    let hits = exec.count_range(0, bound, move |n| matcher.matches(n));
    BigRational::new(BigInt::from(hits), BigInt::from(bound.max(1)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Status {
    Pass,
    Fail,
}

/// Where a check first went wrong.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub word: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<u64>,
    pub expected: String,
    pub got: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub params: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
}

impl Check {
    fn from_result(name: &'static str, params: String, result: Option<Counterexample>) -> Check {
        let status = if result.is_some() { Status::Fail } else { Status::Pass };
        Check { name, params, status, counterexample: result }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub checks: Vec<Check>,
    pub passed: usize,
    pub failed: usize,
}

impl VerificationReport {
    fn new(mut checks: Vec<Check>) -> Self {
        checks.sort_by_key(|c| c.name);
        let failed = checks.iter().filter(|c| c.status == Status::Fail).count();
        VerificationReport { passed: checks.len() - failed, failed, checks }
    }

    pub fn is_success(&self) -> bool {
        self.failed == 0
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| c.status == Status::Fail)
    }

    /// `(name, passed, failed)` per check family, in report order.
    pub fn summary(&self) -> Vec<(&'static str, usize, usize)> {
        let mut out: Vec<(&'static str, usize, usize)> = Vec::new();
        for c in &self.checks {
            if out.last().map(|e| e.0) != Some(c.name) {
                out.push((c.name, 0, 0));
            }
            let e = out.last_mut().unwrap();
            match c.status {
                Status::Pass => e.1 += 1,
                Status::Fail => e.2 += 1,
            }
        }
        out
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{:<22} {:>7} {:>7}", "check", "pass", "fail")?;
        for (name, pass, fail) in self.summary() {
            writeln!(f, "{name:<22} {pass:>7} {fail:>7}")?;
        }
        for c in self.checks.iter().filter(|c| c.status == Status::Fail) {
            let ce = c.counterexample.as_ref().expect("failures carry a counterexample");
            write!(f, "FAIL {} [{}]", c.name, c.params)?;
            if let Some(w) = &ce.word {
                write!(f, " w={w}")?;
            }
            if let Some(k) = ce.k {
                write!(f, " k={k}")?;
            }
            if let Some(n) = ce.n {
                write!(f, " n={n}")?;
            }
            writeln!(f, " expected {} got {}", ce.expected, ce.got)?;
        }
        write!(f, "{} passed, {} failed", self.passed, self.failed)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CertifyConfig {
    /// Longest digit block enumerated by the block checks; 0 runs only the root check.
    pub depth: usize,
    pub k_max: usize,
    /// Terms compared per block against enumeration.
    pub n_terms: usize,
    /// Enumeration bound for positional and density checks.
    pub bound: u64,
    /// Partition checks cover `0..partition_bound`.
    pub partition_bound: u64,
    /// Longest block for the positional and density checks.
    pub positional_len: usize,
    pub csh_len: usize,
    pub csh_terms: u64,
    pub catalog_m: usize,
    pub catalog_terms: u64,
    pub coding_len: usize,
    pub coding_level: usize,
    /// Density tolerance as `numerator / denominator`.
    pub density_tolerance: (i64, i64),
    pub execution: Execution,
}

impl Default for CertifyConfig {
    fn default() -> Self {
        CertifyConfig {
            depth: 6,
            k_max: 3,
            n_terms: 200,
            bound: 100_000,
            partition_bound: 10_001,
            positional_len: 4,
            csh_len: 8,
            csh_terms: 500,
            catalog_m: 5,
            catalog_terms: 1000,
            coding_len: 5,
            coding_level: 12,
            density_tolerance: (1, 1000),
            execution: Execution::default(),
        }
    }
}

fn blocks_up_to(len: usize) -> Vec<DigitBlock> {
    (1..=len).flat_map(DigitBlock::all_of_length).collect()
}

/// Runs the whole suite with the real solver.
pub fn certify(config: &CertifyConfig) -> VerificationReport {
    certify_with(config, &|w| solve_any(w))
}

/// Runs the suite with `solver` standing in for block solving in the
/// enumeration and dual-representation checks.
pub fn certify_with(config: &CertifyConfig, solver: &(dyn Fn(&DigitBlock) -> BlockSolution + Sync)) -> VerificationReport {
    let mut checks = vec![check_root(config)];
    if config.depth > 0 {
        checks.extend(check_oracle_equivalence(config, solver));
        checks.extend(check_dual_representation(config, solver));
        checks.extend(check_positional(config));
        checks.extend(check_partition(config));
        checks.extend(check_tree_step(config));
        checks.extend(check_catalog(config));
        checks.extend(check_csh(config));
        checks.extend(check_coding(config));
        checks.extend(check_density(config));
    }
    VerificationReport::new(checks)
}

fn check_root(config: &CertifyConfig) -> Check {
    let root = solve_any(&DigitBlock::empty());
    let brute = brute_first(config.execution, &DigitBlock::empty(), 0, config.n_terms.min(50));
    let miss = brute.iter().enumerate().find_map(|(i, &want)| {
        let n = i as u64 + 1;
        let got = root.gbs.eval_u64(n);
        (got != BigInt::from(want)).then(|| Counterexample {
            word: Some(String::new()),
            k: None,
            n: Some(n),
            expected: want.to_string(),
            got: got.to_string(),
        })
    });
    Check::from_result("root", String::new(), miss)
}

fn compare_terms(word: &DigitBlock, k: Option<usize>, want: &[u64], got: impl Fn(u64) -> BigInt) -> Option<Counterexample> {
    want.iter().enumerate().find_map(|(i, &v)| {
        let n = i as u64 + 1;
        let g = got(n);
        (g != BigInt::from(v)).then(|| Counterexample {
            word: Some(word.to_string()),
            k,
            n: Some(n),
            expected: v.to_string(),
            got: g.to_string(),
        })
    })
}

fn check_oracle_equivalence(config: &CertifyConfig, solver: &(dyn Fn(&DigitBlock) -> BlockSolution + Sync)) -> Vec<Check> {
    let words = blocks_up_to(config.depth);
    config.execution.map(&words, |w| {
        let sol = solver(w);
        let want = brute_first(Execution::Sequential, w, 0, config.n_terms);
        let miss = compare_terms(w, Some(0), &want, |n| sol.gbs.eval_u64(n));
        Check::from_result("oracle-equivalence", format!("w={w} terms={}", config.n_terms), miss)
    })
}

fn check_dual_representation(config: &CertifyConfig, solver: &(dyn Fn(&DigitBlock) -> BlockSolution + Sync)) -> Vec<Check> {
    let words = blocks_up_to(config.depth);
    config.execution.map(&words, |w| {
        let sol = solver(w);
        let forms = std::iter::once(&sol.compound).chain(sol.alternate.as_ref());
        let miss = forms.into_iter().find_map(|form| first_word_mismatch(w, form, &sol, config.n_terms as u64));
        Check::from_result("dual-representation", format!("w={w}"), miss)
    })
}

fn first_word_mismatch(w: &DigitBlock, form: &WythoffWord, sol: &BlockSolution, terms: u64) -> Option<Counterexample> {
    (1..=terms).find_map(|n| {
        let (direct, closed) = (form.direct_eval_u64(n), sol.gbs.eval_u64(n));
        (direct != closed).then(|| Counterexample {
            word: Some(w.to_string()),
            k: None,
            n: Some(n),
            expected: format!("{direct} ({form})"),
            got: format!("{closed} ({})", sol.gbs),
        })
    })
}

fn check_positional(config: &CertifyConfig) -> Vec<Check> {
    let jobs: Vec<(DigitBlock, usize)> = blocks_up_to(config.depth.min(config.positional_len))
        .into_iter()
        .flat_map(|w| (1..=config.k_max).map(move |k| (w.clone(), k)))
        .collect();
    config.execution.map(&jobs, |(w, k)| {
        let params = format!("w={w} k={k} bound={}", config.bound);
        let miss = positional_mismatch(w, *k, config.bound);
        Check::from_result("positional", params, miss)
    })
}

/// Disjointness, branch count, and equality with enumeration below `bound`.
pub fn positional_mismatch(w: &DigitBlock, k: usize, bound: u64) -> Option<Counterexample> {
    let ce = |n: Option<u64>, expected: String, got: String| Counterexample {
        word: Some(w.to_string()),
        k: Some(k),
        n,
        expected,
        got,
    };
    let set = match solve_positional(w, k) {
        Ok(s) => s,
        Err(e) => return Some(ce(None, "occurrence set".into(), e.to_string())),
    };
    let want_branches = fib_u64(k + 2 - usize::from(w.last())).unwrap_or(u64::MAX);
    if set.branches().len() as u64 != want_branches {
        return Some(ce(None, format!("{want_branches} branches"), format!("{} branches", set.branches().len())));
    }
    let merged = match set.enumerate_below(&BigInt::from(bound)) {
        Ok(m) => m,
        Err(e) => return Some(ce(None, "disjoint branches".into(), e.to_string())),
    };
    let brute = brute_occurrences_with(Execution::Sequential, w, k, bound);
    let len = merged.len().max(brute.len());
    (0..len).find_map(|i| {
        let want = brute.get(i).map(|v| v.to_string()).unwrap_or_else(|| "end".into());
        let got = merged.get(i).map(|v| v.to_string()).unwrap_or_else(|| "end".into());
        (want != got).then(|| ce(Some(i as u64 + 1), want, got))
    })
}

fn check_partition(config: &CertifyConfig) -> Vec<Check> {
    let levels: Vec<usize> = (1..=config.depth.min(6)).collect();
    config.execution.map(&levels, |&m| {
        let miss = partition_mismatch(m, config.partition_bound);
        Check::from_result("partition", format!("m={m} N<{}", config.partition_bound), miss)
    })
}

/// Every `N < bound` lies in exactly one `R_w` with `|w| = m`.
pub fn partition_mismatch(m: usize, bound: u64) -> Option<Counterexample> {
    let mut hits = vec![0u32; bound as usize];
    let mut owner: Vec<Option<String>> = vec![None; bound as usize];
    for w in DigitBlock::all_of_length(m) {
        let sol = solve_any(&w);
        for n in 1.. {
            let v = sol.gbs.eval_u64(n);
            let Some(v) = v.to_u64().filter(|&v| v < bound) else { break };
            hits[v as usize] += 1;
            owner[v as usize] = Some(w.to_string());
        }
    }
    hits.iter().enumerate().find(|(_, &h)| h != 1).map(|(n, &h)| Counterexample {
        word: owner[n].clone(),
        k: None,
        n: Some(n as u64),
        expected: "exactly one class".into(),
        got: format!("{h} classes"),
    })
}

fn check_tree_step(config: &CertifyConfig) -> Vec<Check> {
    let parents = blocks_up_to(config.depth.saturating_sub(1));
    config.execution.map(&parents, |w| {
        let parent = solve_any(w);
        let miss = [0u8, 1].iter().filter_map(|&d| parent.extend(d)).find_map(|child| {
            let via_word = child.compound.csh_reduce();
            let expected = if w.leading() == 1 {
                parent.gbs.clone()
            } else if child.word.leading() == 0 {
                parent.gbs.compose_a()
            } else {
                parent.gbs.compose_b()
            };
            (via_word != expected || child.gbs != expected).then(|| Counterexample {
                word: Some(child.word.to_string()),
                k: None,
                n: None,
                expected: expected.to_string(),
                got: format!("{} / {}", via_word, child.gbs),
            })
        });
        Check::from_result("tree-step", format!("w={w}"), miss)
    })
}

fn check_catalog(config: &CertifyConfig) -> Vec<Check> {
    let ids = identity_catalog(0..=config.catalog_m);
    config.execution.map(&ids, |id| {
        let miss = id.check(config.catalog_terms).map(|mm| Counterexample {
            word: None,
            k: None,
            n: Some(mm.n),
            expected: format!("{} = {}", id.left, mm.left),
            got: format!("{} = {}", id.right, mm.right),
        });
        Check::from_result("identity-catalog", format!("{} m={}", id.name, id.m), miss)
    })
}

fn check_csh(config: &CertifyConfig) -> Vec<Check> {
    let words: Vec<WythoffWord> = (1..=config.csh_len).flat_map(WythoffWord::all_of_length).collect();
    let results = config.execution.map(&words, |u| csh_mismatch(u, config.csh_terms));
    // one row per word length keeps the report readable
    (1..=config.csh_len)
        .map(|len| {
            let miss = words
                .iter()
                .zip(&results)
                .filter(|(u, _)| u.len() == len)
                .find_map(|(_, r)| r.clone());
            Check::from_result("csh-soundness", format!("len={len} n<={}", config.csh_terms), miss)
        })
        .collect()
}

/// Closed form against direct composition for `n = 1..=terms`.
pub fn csh_mismatch(u: &WythoffWord, terms: u64) -> Option<Counterexample> {
    let closed = u.csh_reduce();
    (1..=terms).find_map(|n| {
        let (direct, via) = (u.direct_eval_u64(n), closed.eval_u64(n));
        (direct != via).then(|| Counterexample {
            word: Some(u.to_string()),
            k: None,
            n: Some(n),
            expected: direct.to_string(),
            got: format!("{via} ({closed})"),
        })
    })
}

fn check_coding(config: &CertifyConfig) -> Vec<Check> {
    let words: Vec<DigitBlock> = (2..=config.coding_len.min(config.depth))
        .flat_map(DigitBlock::all_of_length)
        .filter(|w| w.leading() == 0)
        .collect();
    let mut out = config.execution.map(&words, |w| {
        let miss = (3..=config.coding_level).find_map(|n| {
            let want = morphism_iterate(n - 2);
            let got = occurrence_coding(w, n).map(|c| c.to_string()).unwrap_or_else(|e| e.to_string());
            (got != want.to_string()).then(|| Counterexample {
                word: Some(w.to_string()),
                k: None,
                n: Some(n as u64),
                expected: want.to_string(),
                got,
            })
        });
        Check::from_result("fibword-coding", format!("w={w} n<={}", config.coding_level), miss)
    });
    let word = morphism_iterate(config.coding_level + 8);
    let a_pos = positions_of(FibLetter::A, &word);
    let b_pos = positions_of(FibLetter::B, &word);
    let miss = a_pos
        .iter()
        .enumerate()
        .map(|(i, &p)| (i as u64 + 1, p, wythoff_a_small(i as u64 + 1) as u64))
        .chain(b_pos.iter().enumerate().map(|(i, &p)| {
            let n = i as u64 + 1;
            (n, p, wythoff_a_small(n) as u64 + n)
        }))
        .find(|(_, got, want)| got != want)
        .map(|(n, got, want)| Counterexample { word: None, k: None, n: Some(n), expected: want.to_string(), got: got.to_string() });
    out.push(Check::from_result("fibword-positions", format!("f^{}(a)", config.coding_level + 8), miss));
    out
}

fn check_density(config: &CertifyConfig) -> Vec<Check> {
    let jobs: Vec<(DigitBlock, usize)> = blocks_up_to(config.depth.min(config.positional_len))
        .into_iter()
        .flat_map(|w| (0..=config.k_max).map(move |k| (w.clone(), k)))
        .collect();
    let (tn, td) = config.density_tolerance;
    let tol = BigRational::new(tn.into(), td.into());
    let mut out = config.execution.map(&jobs, |(w, k)| {
        let miss = density_mismatch(Execution::Sequential, w, *k, config.bound, &tol);
        Check::from_result("density", format!("w={w} k={k} bound={}", config.bound), miss)
    });
    for m in 1..=config.depth.min(6) {
        for k in 0..=config.k_max + 1 {
            let total = density_total(m, k);
            let miss = (!is_exactly_one(&total)).then(|| Counterexample {
                word: None,
                k: Some(k),
                n: None,
                expected: "1".into(),
                got: total.to_string(),
            });
            out.push(Check::from_result("density-total", format!("m={m} k={k}"), miss));
        }
    }
    out
}

/// Empirical frequency below `bound` against the exact density, strictly within `tol`.
pub fn density_mismatch(exec: Execution, w: &DigitBlock, k: usize, bound: u64, tol: &BigRational) -> Option<Counterexample> {
    let exact = match density(w, k) {
        Ok(d) => d.value,
        Err(e) => {
            return Some(Counterexample { word: Some(w.to_string()), k: Some(k), n: None, expected: "density".into(), got: e.to_string() })
        }
    };
    let emp = empirical_density_with(exec, w, k, bound);
    let lo = &emp - tol;
    let hi = &emp + tol;
    let inside = exact.cmp_rational(&lo).is_gt() && exact.cmp_rational(&hi).is_lt();
    (!inside).then(|| Counterexample {
        word: Some(w.to_string()),
        k: Some(k),
        n: Some(bound),
        expected: format!("{} ≈ {:.6}", exact, exact.to_f64()),
        got: format!("{} ≈ {:.6}", emp, emp.to_f64().unwrap_or(f64::NAN)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    fn block(s: &str) -> DigitBlock {
        s.parse().unwrap()
    }

    #[test]
    fn brute_examples() {
        assert_eq!(brute_occurrences(&block("0"), 0, 12), [0, 2, 3, 5, 7, 8, 10, 11]);
        assert_eq!(brute_occurrences(&block("1"), 0, 15), [1, 4, 6, 9, 12, 14]);
        // 3..=7 all have d_3 d_2 != 00 (e.g. Z(5) = 1000)
        assert_eq!(brute_occurrences(&block("00"), 2, 11), [0, 1, 2, 8, 9, 10]);
        assert_eq!(brute_first(Execution::Sequential, &block("100"), 0, 5), [3, 11, 16, 24, 32]);
    }

    #[test]
    fn zero_and_one_partition_the_range() {
        let zeros = brute_occurrences(&block("0"), 0, 5000);
        let ones = brute_occurrences(&block("1"), 0, 5000);
        let mut all: Vec<u64> = zeros.iter().chain(&ones).copied().collect();
        all.sort_unstable();
        assert_eq!(all, (0..5000).collect::<Vec<_>>());
    }

    #[test]
    fn empirical_examples() {
        let tol = BigRational::new(1.into(), 1000.into());
        assert!(density_mismatch(Execution::default(), &block("0"), 0, 100_000, &tol).is_none());
        assert!(density_mismatch(Execution::default(), &block("1"), 0, 100_000, &tol).is_none());
        assert_eq!(empirical_density(&block("0"), 0, 1), BigRational::new(1.into(), 1.into()));
        assert!(empirical_density(&block("1"), 0, 1).is_zero());
    }

    #[test]
    fn depth_zero_only_checks_the_root() {
        let report = certify(&CertifyConfig { depth: 0, ..CertifyConfig::default() });
        assert!(report.is_success());
        assert_eq!(report.checks.len(), 1);
        assert_eq!(report.checks[0].name, "root");
    }

    #[test]
    fn corrupted_gamma_is_located() {
        let config = CertifyConfig { depth: 3, ..CertifyConfig::default() };
        let target = block("00");
        let faulty = |w: &DigitBlock| {
            let mut sol = solve_any(w);
            if *w == target {
                sol.gbs.r -= 1;
                sol.gamma -= 1;
            }
            sol
        };
        let report = certify_with(&config, &faulty);
        assert!(!report.is_success());
        let first = report.checks.iter().find(|c| c.name == "oracle-equivalence" && c.status == Status::Fail).unwrap();
        let ce = first.counterexample.as_ref().unwrap();
        assert_eq!(ce.word.as_deref(), Some("00"));
        assert_eq!(ce.n, Some(1));
        assert_eq!((ce.expected.as_str(), ce.got.as_str()), ("0", "-1"));
        // the only failures are the two checks that consumed the faulty solver
        let failing: Vec<_> = report.checks.iter().filter(|c| c.status == Status::Fail).map(|c| c.name).collect();
        assert_eq!(failing, ["dual-representation", "oracle-equivalence"]);
    }
}
