//! Continued-fraction convergents of √3 and the odd-index bisection
//! `u_n = z_{2n+1}`.
//!
//! √3 = [1; 1, 2, 1, 2, ...]. The numerator sequence `z` is indexed from
//! the seed 1/0 that precedes the first true convergent 1/1, so it reads
//! 1, 1, 2, 5, 7, 19, 26, 71, ... and `z_{2m} = L_m / 2`.

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactnum::BigInt;
use crate::identities::{require_max_n, IdentityReport};
use crate::recurrences::{sequence_prefix, SequenceId};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Convergent {
    pub p: BigInt,
    pub q: BigInt,
    pub idx: u64,
}

impl Convergent {
    /// `p² − 3q²`.
    pub fn norm(&self) -> BigInt {
        &self.p * &self.p - &self.q * &self.q * 3
    }
}

/// Partial quotient feeding convergent `idx` (`idx ≥ 1`).
fn partial_quotient(idx: u64) -> u32 {
    match idx {
        1 => 1,
        i if i % 2 == 0 => 1,
        _ => 2,
    }
}

/// The first `count` entries, starting from the 1/0 seed.
pub fn cf_sqrt3(count: usize) -> Result<Vec<Convergent>> {
    if count == 0 {
        return Err(Error::domain("count must be at least 1"));
    }
    let mut out = Vec::with_capacity(count);
    let (mut p_prev, mut q_prev) = (BigInt::zero(), BigInt::one());
    let (mut p, mut q) = (BigInt::one(), BigInt::zero());
    out.push(Convergent {
        p: p.clone(),
        q: q.clone(),
        idx: 0,
    });
    for idx in 1..count as u64 {
        let a = partial_quotient(idx);
        let p_next = &p * a + &p_prev;
        let q_next = &q * a + &q_prev;
        p_prev = std::mem::replace(&mut p, p_next);
        q_prev = std::mem::replace(&mut q, q_next);
        out.push(Convergent {
            p: p.clone(),
            q: q.clone(),
            idx,
        });
    }
    Ok(out)
}

/// Numerators `z_0, ..., z_{count-1}`.
pub fn numerators(count: usize) -> Result<Vec<BigInt>> {
    Ok(cf_sqrt3(count)?.into_iter().map(|c| c.p).collect())
}

pub fn z(n: u64) -> BigInt {
    cf_sqrt3(n as usize + 1)
        .expect("count is positive")
        .pop()
        .expect("non-empty")
        .p
}

/// `u_n = z_{2n+1}`, with `u` from its recurrence and `z` from the
/// continued fraction.
pub fn check_bisection(max_n: u64) -> Result<IdentityReport> {
    require_max_n(max_n)?;
    let u = sequence_prefix(&SequenceId::U, max_n as usize + 1)?;
    let z = numerators(2 * max_n as usize + 2)?;
    let mut report = IdentityReport::new("bisection", 0..=max_n);
    for n in 0..=max_n {
        let i = n as usize;
        report.expect_eq(n, "u_n = z_2n+1", &u[i], &z[2 * i + 1]);
    }
    Ok(report)
}

/// `u_n − u_{n−1} = L_n = 2z_{2n} = z_{2n+1} − z_{2n−1}` for `n ≥ 1`.
pub fn check_difference_identities(max_n: u64) -> Result<IdentityReport> {
    require_max_n(max_n)?;
    let u = sequence_prefix(&SequenceId::U, max_n as usize + 1)?;
    let l = sequence_prefix(&SequenceId::L, max_n as usize + 1)?;
    let z = numerators(2 * max_n as usize + 2)?;
    let mut report = IdentityReport::new("differences", 1..=max_n);
    for n in 1..=max_n {
        let i = n as usize;
        let du = &u[i] - &u[i - 1];
        report.expect_eq(n, "u_n - u_n-1 = L_n", &du, &l[i]);
        report.expect_eq(n, "L_n = 2z_2n", &l[i], &(&z[2 * i] * 2));
        report.expect_eq(n, "2z_2n = z_2n+1 - z_2n-1", &(&z[2 * i] * 2), &(&z[2 * i + 1] - &z[2 * i - 1]));
    }
    Ok(report)
}

/// Structural laws of the convergent list for `m ≤ max_n`: `z_{2m} = L_m/2`
/// (with `L_m` even), `z_{2m+1} = 2z_{2m} + z_{2m−1}`, and for every entry
/// `gcd(p, q) = 1`, `p > 0`, `|p² − 3q²| ∈ {1, 2}`.
pub fn check_convergent_laws(max_n: u64) -> Result<IdentityReport> {
    require_max_n(max_n)?;
    let l = sequence_prefix(&SequenceId::L, max_n as usize + 1)?;
    let conv = cf_sqrt3(2 * max_n as usize + 2)?;
    let mut report = IdentityReport::new("convergents", 0..=max_n);
    let (one, two) = (BigInt::one(), BigInt::from(2));
    for m in 0..=max_n {
        let i = m as usize;
        if let Some(half) = report.expect_div(m, "2 | L_m", &l[i], 2) {
            report.expect_eq(m, "z_2m = L_m/2", &conv[2 * i].p, &half);
        }
        if i >= 1 {
            let rhs = &conv[2 * i].p * 2 + &conv[2 * i - 1].p;
            report.expect_eq(m, "z_2m+1 = 2z_2m + z_2m-1", &conv[2 * i + 1].p, &rhs);
        }
        for c in &conv[2 * i..2 * i + 2] {
            report.expect_eq(m, "gcd(p, q) = 1", &c.p.gcd(&c.q), &one);
            if !c.p.is_positive() {
                report.expect_eq(m, "z > 0", &c.p, &one);
            }
            let norm = c.norm().abs();
            if norm != one && norm != two {
                report.expect_eq(m, "|p^2 - 3q^2| in {1, 2}", &norm, &one);
            }
        }
    }
    Ok(report)
}
