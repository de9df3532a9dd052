//! Triangular numbers, prefix averages and the Diophantine condition
//! `s² + 3s + 2 = 3r² + 3r` under which the average of `T_1..T_s` is `T_r`.
//!
//! The brute-force search here never touches the recurrences; it is the
//! independent oracle the recurrence-based witnesses are checked against.

use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{exact_div, is_perfect_square, BigInt, Rat};
use crate::recurrences::{eval_iterative, SequenceId};

/// Largest prefix length for which witnesses are also checked by literal summation.
pub const LITERAL_SUM_LIMIT: u64 = 100_000;

/// A verified instance: the average of `T_1, ..., T_s` is `T_r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangularWitness {
    pub n: u64,
    /// Count of triangular numbers averaged, `b_n`.
    pub s: BigInt,
    /// `T_1 + ... + T_s`.
    pub sum: BigInt,
    pub avg: BigInt,
    /// Index with `T_r = avg`, `a_n`.
    pub r: BigInt,
}

impl TriangularWitness {
    /// Re-checks all witness invariants from scratch.
    pub fn verify(&self) -> bool {
        let Ok(t_r) = triangular(&self.r) else {
            return false;
        };
        let Ok(closed) = prefix_sum(&self.s) else {
            return false;
        };
        self.avg == t_r && &self.s * &self.avg == closed && self.sum == closed && check_pair(&self.s, &self.r)
    }
}

/// `T_k = k(k+1)/2`.
pub fn triangular(k: &BigInt) -> Result<BigInt> {
    if k.is_negative() {
        return Err(Error::domain(format!("triangular index {k} is negative")));
    }
    Ok((k * (k + 1u32)) >> 1u32)
}

/// The `k` with `T_k = m`, via the perfect-square test on `8m + 1`.
pub fn is_triangular(m: &BigInt) -> Option<BigInt> {
    if m.is_negative() {
        return None;
    }
    let root = is_perfect_square(&((m << 3u32) + 1u32))?;
    Some((root - 1u32) >> 1u32)
}

fn require_positive(what: &str, v: &BigInt) -> Result<()> {
    if v < &BigInt::one() {
        Err(Error::domain(format!("{what} must be at least 1, got {v}")))
    } else {
        Ok(())
    }
}

/// `T_1 + ... + T_s = s(s+1)(s+2)/6`.
pub fn prefix_sum(s: &BigInt) -> Result<BigInt> {
    if s.is_negative() {
        return Err(Error::domain(format!("prefix length {s} is negative")));
    }
    Ok(s * (s + 1u32) * (s + 2u32) / 6u32)
}

/// `T_1 + ... + T_s` by adding the terms one at a time.
pub fn prefix_sum_literal(s: u64) -> BigInt {
    let mut t = BigInt::zero();
    let mut sum = BigInt::zero();
    for k in 1..=s {
        t += k;
        sum += &t;
    }
    sum
}

/// Mean of `T_1, ..., T_s`, which reduces to `(s+1)(s+2)/6`.
pub fn prefix_average(s: &BigInt) -> Result<Rat> {
    require_positive("prefix length", s)?;
    Ok(Rat::new((s + 1u32) * (s + 2u32), BigInt::from(6)))
}

/// Whether `s² + 3s + 2 = 3r² + 3r`.
pub fn check_pair(s: &BigInt, r: &BigInt) -> bool {
    s * s + s * 3 + 2 == r * r * 3 + r * 3
}

/// `s = (√(1 + 12r + 12r²) − 3)/2` when that is a positive integer.
pub fn solve_s_for_r(r: &BigInt) -> Result<Option<BigInt>> {
    require_positive("r", r)?;
    let disc = r * r * 12 + r * 12 + 1;
    let Some(root) = is_perfect_square(&disc) else {
        return Ok(None);
    };
    Ok(exact_div(&(root - 3), &BigInt::from(2)).filter(|s| s >= &BigInt::one()))
}

/// `r = (√(3(11 + 12s + 4s²)) − 3)/6` when that is a positive integer.
pub fn solve_r_for_s(s: &BigInt) -> Result<Option<BigInt>> {
    require_positive("s", s)?;
    let radicand = (s * s * 4 + s * 12 + 11) * 3;
    let Some(root) = is_perfect_square(&radicand) else {
        return Ok(None);
    };
    Ok(exact_div(&(root - 3), &BigInt::from(6)).filter(|r| r >= &BigInt::one()))
}

/// All `(s, r)` with `1 ≤ s ≤ s_max` satisfying the Diophantine condition,
/// by testing every `s` with [`solve_r_for_s`].
pub fn enumerate_solutions(s_max: &BigInt) -> Result<Vec<(BigInt, BigInt)>> {
    require_positive("s_max", s_max)?;
    let mut out = Vec::new();
    let mut s = BigInt::one();
    while &s <= s_max {
        if let Some(r) = solve_r_for_s(&s)? {
            out.push((s.clone(), r));
        }
        s += 1u32;
    }
    Ok(out)
}

/// Values `r ≤ r_max` where `1 + 12r + 12r²` is a square whose root minus 3
/// is odd. Expected to be empty: the discriminant is odd, so is its root.
pub fn parity_guard_counterexamples(r_max: u64) -> Vec<u64> {
    (1..=r_max)
        .filter(|&r| {
            let r = BigInt::from(r);
            is_perfect_square(&(&r * &r * 12 + &r * 12 + 1)).is_some_and(|root| (root - 3u32).is_odd())
        })
        .collect()
}

/// Builds `(b_n, a_n)` from the recurrences and verifies that the average of
/// the first `b_n` triangular numbers is `T_{a_n}`.
pub fn witness(n: u64) -> Result<TriangularWitness> {
    if n == 0 {
        return Err(Error::domain("b_0 = -1 is not a valid prefix length"));
    }
    let s = eval_iterative(&SequenceId::B.spec(), n);
    let r = eval_iterative(&SequenceId::A.spec(), n);
    let sum = prefix_sum(&s)?;
    if let Some(small) = s.to_u64().filter(|&v| v <= LITERAL_SUM_LIMIT) {
        let literal = prefix_sum_literal(small);
        if literal != sum {
            return Err(Error::inconsistent(format!("n={n}: literal sum {literal} != closed sum {sum}")));
        }
    }
    let avg = exact_div(&sum, &s)
        .ok_or_else(|| Error::inconsistent(format!("n={n}: sum {sum} is not divisible by s = {s}")))?;
    let t_r = triangular(&r)?;
    if avg != t_r {
        return Err(Error::inconsistent(format!("n={n}: average {avg} != T_{r} = {t_r}")));
    }
    if !check_pair(&s, &r) {
        return Err(Error::inconsistent(format!("n={n}: ({s}, {r}) fails the Diophantine condition")));
    }
    Ok(TriangularWitness { n, s, sum, avg, r })
}
