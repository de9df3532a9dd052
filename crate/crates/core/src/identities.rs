//! Instance-level verification of the identities and congruences tying the
//! sequence family together.
//!
//! Each checker compares quantities computed along different routes (for
//! example `a_n` from its own recurrence against `(v_n - 3)/6`). A failed
//! divisibility is recorded as a failure, never a panic.

use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use num_integer::Integer;
use num_traits::Zero;

use crate::convergents;
use crate::error::{Error, Result};
use crate::exactnum::{exact_div, BigInt};
use crate::recurrences::{sequence_prefix, SequenceId};

/// A single index at which a relation did not hold.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub n: u64,
    pub relation: &'static str,
    pub lhs: BigInt,
    pub rhs: BigInt,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    pub identity_name: &'static str,
    pub checked_range: RangeInclusive<u64>,
    /// Sorted by `n`.
    pub failures: Vec<Failure>,
}

impl IdentityReport {
    pub(crate) fn new(identity_name: &'static str, checked_range: RangeInclusive<u64>) -> Self {
        IdentityReport {
            identity_name,
            checked_range,
            failures: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub(crate) fn expect_eq(&mut self, n: u64, relation: &'static str, lhs: &BigInt, rhs: &BigInt) {
        if lhs != rhs {
            self.failures.push(Failure {
                n,
                relation,
                lhs: lhs.clone(),
                rhs: rhs.clone(),
            });
        }
    }

    /// `value / d` if exact; otherwise records `value mod d` against 0.
    pub(crate) fn expect_div(&mut self, n: u64, relation: &'static str, value: &BigInt, d: i64) -> Option<BigInt> {
        let d = BigInt::from(d);
        let q = exact_div(value, &d);
        if q.is_none() {
            self.failures.push(Failure {
                n,
                relation,
                lhs: value.mod_floor(&d),
                rhs: BigInt::zero(),
            });
        }
        q
    }

    pub(crate) fn expect_residue(&mut self, n: u64, relation: &'static str, value: &BigInt, modulus: i64, residue: i64) {
        let r = value.mod_floor(&BigInt::from(modulus));
        self.expect_eq(n, relation, &r, &BigInt::from(residue));
    }
}

impl fmt::Display for IdentityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (lo, hi) = (self.checked_range.start(), self.checked_range.end());
        if self.passed() {
            write!(f, "PASS {} n={lo}..={hi}", self.identity_name)
        } else {
            write!(f, "FAIL {} n={lo}..={hi} ({} failures)", self.identity_name, self.failures.len())
        }
    }
}

pub(crate) fn require_max_n(max_n: u64) -> Result<()> {
    if max_n == 0 {
        Err(Error::domain("max_n must be at least 1"))
    } else {
        Ok(())
    }
}

fn prefix(id: SequenceId, count: u64) -> Vec<BigInt> {
    sequence_prefix(&id, count as usize).expect("count is positive")
}

/// `L_n² = L_{2n} + 2` and `L_n·L_{n+1} = L_{2n+1} + 4`.
pub fn check_lucas_identities(max_n: u64) -> Result<IdentityReport> {
    require_max_n(max_n)?;
    let l = prefix(SequenceId::L, 2 * max_n + 2);
    let mut report = IdentityReport::new("lucas", 0..=max_n);
    for n in 0..=max_n {
        let i = n as usize;
        report.expect_eq(n, "L_n^2 = L_2n + 2", &(&l[i] * &l[i]), &(&l[2 * i] + 2));
        report.expect_eq(n, "L_n L_n+1 = L_2n+1 + 4", &(&l[i] * &l[i + 1]), &(&l[2 * i + 1] + 4));
    }
    Ok(report)
}

/// `1 + 12a_n + 12a_n² = L_{2n+1}/2 − 1 = u_n²`.
pub fn check_discriminant(max_n: u64) -> Result<IdentityReport> {
    require_max_n(max_n)?;
    let a = prefix(SequenceId::A, max_n + 1);
    let u = prefix(SequenceId::U, max_n + 1);
    let l = prefix(SequenceId::L, 2 * max_n + 2);
    let mut report = IdentityReport::new("discriminant", 0..=max_n);
    for n in 0..=max_n {
        let i = n as usize;
        let disc = &a[i] * &a[i] * 12 + &a[i] * 12 + 1;
        let Some(half) = report.expect_div(n, "2 | L_2n+1", &l[2 * i + 1], 2) else {
            continue;
        };
        let lucas_side = half - 1;
        report.expect_eq(n, "1 + 12a + 12a^2 = L_2n+1/2 - 1", &disc, &lucas_side);
        report.expect_eq(n, "L_2n+1/2 - 1 = u^2", &lucas_side, &(&u[i] * &u[i]));
    }
    Ok(report)
}

/// `u_n` odd, `L_{2n+1} ≡ 0 (mod 4)`, `v_n ≡ 3 (mod 6)`.
pub fn check_congruences(max_n: u64) -> Result<IdentityReport> {
    require_max_n(max_n)?;
    let u = prefix(SequenceId::U, max_n + 1);
    let v = prefix(SequenceId::V, max_n + 1);
    let l = prefix(SequenceId::L, 2 * max_n + 2);
    let mut report = IdentityReport::new("congruences", 0..=max_n);
    for n in 0..=max_n {
        let i = n as usize;
        report.expect_residue(n, "u_n = 1 mod 2", &u[i], 2, 1);
        report.expect_residue(n, "L_2n+1 = 0 mod 4", &l[2 * i + 1], 4, 0);
        report.expect_residue(n, "v_n = 3 mod 6", &v[i], 6, 3);
    }
    Ok(report)
}

/// `b_n = (u_n − 3)/2`, `a_n = (v_n − 3)/6`, and for `n ≥ 1`
/// `u_n − u_{n−1} = L_n`, `v_n − v_{n−1} = 6F_n`.
pub fn check_linkages(max_n: u64) -> Result<IdentityReport> {
    require_max_n(max_n)?;
    let count = max_n + 1;
    let a = prefix(SequenceId::A, count);
    let b = prefix(SequenceId::B, count);
    let u = prefix(SequenceId::U, count);
    let v = prefix(SequenceId::V, count);
    let l = prefix(SequenceId::L, count);
    let f = prefix(SequenceId::F, count);
    let mut report = IdentityReport::new("linkages", 0..=max_n);
    for n in 0..=max_n {
        let i = n as usize;
        if let Some(q) = report.expect_div(n, "2 | u_n - 3", &(&u[i] - 3), 2) {
            report.expect_eq(n, "b_n = (u_n - 3)/2", &b[i], &q);
        }
        if let Some(q) = report.expect_div(n, "6 | v_n - 3", &(&v[i] - 3), 6) {
            report.expect_eq(n, "a_n = (v_n - 3)/6", &a[i], &q);
        }
        if i >= 1 {
            report.expect_eq(n, "u_n - u_n-1 = L_n", &(&u[i] - &u[i - 1]), &l[i]);
            report.expect_eq(n, "v_n - v_n-1 = 6F_n", &(&v[i] - &v[i - 1]), &(&f[i] * 6));
        }
    }
    Ok(report)
}

/// `v_n² = 3(u_n² + 2) = (3/2)(L_{2n+1} + 2) = 3(11 + 12b_n + 4b_n²)`.
pub fn check_v_square(max_n: u64) -> Result<IdentityReport> {
    require_max_n(max_n)?;
    let b = prefix(SequenceId::B, max_n + 1);
    let u = prefix(SequenceId::U, max_n + 1);
    let v = prefix(SequenceId::V, max_n + 1);
    let l = prefix(SequenceId::L, 2 * max_n + 2);
    let mut report = IdentityReport::new("v-square", 0..=max_n);
    for n in 0..=max_n {
        let i = n as usize;
        let v_sq = &v[i] * &v[i];
        let from_u = (&u[i] * &u[i] + 2) * 3;
        let from_b = (&b[i] * &b[i] * 4 + &b[i] * 12 + 11) * 3;
        report.expect_eq(n, "v^2 = 3(u^2 + 2)", &v_sq, &from_u);
        report.expect_eq(n, "v^2 = 3(11 + 12b + 4b^2)", &v_sq, &from_b);
        if let Some(half) = report.expect_div(n, "2 | L_2n+1 + 2", &(&l[2 * i + 1] + 2), 2) {
            report.expect_eq(n, "v^2 = 3(L_2n+1 + 2)/2", &v_sq, &(half * 3));
        }
    }
    Ok(report)
}

/// Every checker, including the continued-fraction ones, in a fixed order.
pub fn run_all(max_n: u64) -> Result<Vec<IdentityReport>> {
    Suite::ALL_SUITES.iter().map(|s| s.run(max_n)).collect()
}

/// A named group of checks, as selected from the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Lucas,
    Discriminant,
    Congruences,
    Linkages,
    VSquare,
    Bisection,
    Differences,
    Convergents,
}

impl Suite {
    pub const ALL_SUITES: [Suite; 8] = [
        Suite::Lucas,
        Suite::Discriminant,
        Suite::Congruences,
        Suite::Linkages,
        Suite::VSquare,
        Suite::Bisection,
        Suite::Differences,
        Suite::Convergents,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Lucas => "lucas",
            Suite::Discriminant => "discriminant",
            Suite::Congruences => "congruences",
            Suite::Linkages => "linkages",
            Suite::VSquare => "v-square",
            Suite::Bisection => "bisection",
            Suite::Differences => "differences",
            Suite::Convergents => "convergents",
        }
    }

    pub fn run(self, max_n: u64) -> Result<IdentityReport> {
        match self {
            Suite::Lucas => check_lucas_identities(max_n),
            Suite::Discriminant => check_discriminant(max_n),
            Suite::Congruences => check_congruences(max_n),
            Suite::Linkages => check_linkages(max_n),
            Suite::VSquare => check_v_square(max_n),
            Suite::Bisection => convergents::check_bisection(max_n),
            Suite::Differences => convergents::check_difference_identities(max_n),
            Suite::Convergents => convergents::check_convergent_laws(max_n),
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL_SUITES
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::domain(format!("unknown suite `{s}`")))
    }
}
