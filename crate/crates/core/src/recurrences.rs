//! The recurrence family `w_n = 4w_{n-1} - w_{n-2} + k` and its named
//! members.
//!
//! Every term can be computed three unrelated ways: by stepping the
//! recurrence, from the closed form over `Q(√3)`, and by expanding the
//! generating function as a power series. The test suite holds them to
//! exact agreement.

use std::fmt;

use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{exact_div, BigInt, QuadElem, Rat};

/// Parameters `(k, w0, w1)` of `w_n = 4w_{n-1} - w_{n-2} + k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RecurrenceSpec {
    pub k: BigInt,
    pub w0: BigInt,
    pub w1: BigInt,
}

impl RecurrenceSpec {
    pub fn new(k: impl Into<BigInt>, w0: impl Into<BigInt>, w1: impl Into<BigInt>) -> Self {
        RecurrenceSpec {
            k: k.into(),
            w0: w0.into(),
            w1: w1.into(),
        }
    }

    /// Infinite iterator over `w_0, w_1, w_2, ...`.
    pub fn terms(&self) -> Terms<'_> {
        Terms {
            spec: self,
            prev: self.w0.clone(),
            cur: self.w1.clone(),
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        self.k.is_zero()
    }
}

impl fmt::Display for RecurrenceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "w({},{},{})", self.k, self.w0, self.w1)
    }
}

pub struct Terms<'a> {
    spec: &'a RecurrenceSpec,
    prev: BigInt,
    cur: BigInt,
}

impl Iterator for Terms<'_> {
    type Item = BigInt;

    fn next(&mut self) -> Option<BigInt> {
        let next = (&self.cur << 2u32) - &self.prev + &self.spec.k;
        let prev = std::mem::replace(&mut self.cur, next);
        Some(std::mem::replace(&mut self.prev, prev))
    }
}

/// One of the named sequences, or an arbitrary member of the family.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum SequenceId {
    /// Lucas analogue, `w(0,2,4)`.
    L,
    /// Fibonacci analogue, `w(0,0,1)`.
    F,
    /// Triangular index of the average, `w(1,0,1)`.
    A,
    /// Number of triangular numbers averaged, `w(3,-1,1)`.
    B,
    /// `w(0,1,5)`; square root of the discriminant `1 + 12a_n + 12a_n²`.
    U,
    /// `w(0,3,9)`.
    V,
    Custom(RecurrenceSpec),
}

impl SequenceId {
    pub const NAMED: [SequenceId; 6] = [
        SequenceId::L,
        SequenceId::F,
        SequenceId::A,
        SequenceId::B,
        SequenceId::U,
        SequenceId::V,
    ];

    pub fn spec(&self) -> RecurrenceSpec {
        match self {
            SequenceId::L => RecurrenceSpec::new(0, 2, 4),
            SequenceId::F => RecurrenceSpec::new(0, 0, 1),
            SequenceId::A => RecurrenceSpec::new(1, 0, 1),
            SequenceId::B => RecurrenceSpec::new(3, -1, 1),
            SequenceId::U => RecurrenceSpec::new(0, 1, 5),
            SequenceId::V => RecurrenceSpec::new(0, 3, 9),
            SequenceId::Custom(spec) => spec.clone(),
        }
    }

    /// Single-letter name; `None` for custom specs.
    pub fn letter(&self) -> Option<&'static str> {
        Some(match self {
            SequenceId::L => "L",
            SequenceId::F => "F",
            SequenceId::A => "a",
            SequenceId::B => "b",
            SequenceId::U => "u",
            SequenceId::V => "v",
            SequenceId::Custom(_) => return None,
        })
    }

    /// Parses a letter name, ignoring case.
    pub fn from_letter(name: &str) -> Option<SequenceId> {
        Some(match name.to_ascii_lowercase().as_str() {
            "l" => SequenceId::L,
            "f" => SequenceId::F,
            "a" => SequenceId::A,
            "b" => SequenceId::B,
            "u" => SequenceId::U,
            "v" => SequenceId::V,
            _ => return None,
        })
    }
}

impl fmt::Display for SequenceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.letter() {
            Some(l) => write!(f, "{l} = {}", self.spec()),
            None => write!(f, "{}", self.spec()),
        }
    }
}

fn require_count(count: usize) -> Result<()> {
    if count == 0 {
        Err(Error::domain("count must be at least 1"))
    } else {
        Ok(())
    }
}

/// `w_n` by stepping the recurrence.
pub fn eval_iterative(spec: &RecurrenceSpec, n: u64) -> BigInt {
    let mut it = spec.terms();
    for _ in 0..n {
        it.next();
    }
    it.next().expect("terms is infinite")
}

fn rat(v: &BigInt) -> Rat {
    Rat::from_integer(v.clone())
}

fn quad_to_integer(x: &QuadElem, what: &str) -> Result<BigInt> {
    if !x.surd().is_zero() {
        return Err(Error::inconsistent(format!("{what}: nonzero √3 part in {x}")));
    }
    x.to_integer()
        .ok_or_else(|| Error::inconsistent(format!("{what}: non-integral value {x}")))
}

/// `w_n` from the closed form
/// `-k/2 + c₁αⁿ + c₂βⁿ` with
/// `c₁ = (w1·α + (k + 4w0 - w1)·β + k - 2w0) / 12` and `c₂ = conj(c₁)`.
pub fn eval_closed_form(spec: &RecurrenceSpec, n: u64) -> Result<BigInt> {
    let (k, r, s) = (&spec.k, &spec.w0, &spec.w1);
    let (alpha, beta) = (QuadElem::alpha(), QuadElem::beta());
    let twelfth = Rat::new(BigInt::from(1), BigInt::from(12));
    let mid = rat(&(k + (r << 2u32) - s));
    let tail = QuadElem::new(rat(&(k - (r << 1u32))), Rat::zero());

    let c1 = (&(&alpha.scale(&rat(s)) + &beta.scale(&mid)) + &tail).scale(&twelfth);
    let c2 = (&(&beta.scale(&rat(s)) + &alpha.scale(&mid)) + &tail).scale(&twelfth);

    let alpha_n = alpha.pow(n);
    let beta_n = alpha_n.conj();
    let shift = QuadElem::new(Rat::new(-k.clone(), BigInt::from(2)), Rat::zero());
    let w = &(&shift + &(&c1 * &alpha_n)) + &(&c2 * &beta_n);
    quad_to_integer(&w, &format!("closed form of {spec} at n={n}"))
}

/// `w_n = (-6k + (4w1 + k - 2w0)·L_n + (k + 4w0 - 2w1)·L_{n-1}) / 12`, for `n ≥ 1`.
pub fn eval_via_l(spec: &RecurrenceSpec, n: u64) -> Result<BigInt> {
    if n == 0 {
        return Err(Error::domain("the L-form needs L_{n-1}, so n must be at least 1"));
    }
    let (k, r, s) = (&spec.k, &spec.w0, &spec.w1);
    let lucas_spec = SequenceId::L.spec();
    let mut lucas = lucas_spec.terms().skip((n - 1) as usize);
    let l_prev = lucas.next().expect("infinite");
    let l_n = lucas.next().expect("infinite");

    let numer: BigInt = -(k * 6u32) + ((s << 2u32) + k - (r << 1u32)) * l_n + (k + (r << 2u32) - (s << 1u32)) * l_prev;
    exact_div(&numer, &BigInt::from(12)).ok_or_else(|| {
        Error::inconsistent(format!("L-form of {spec} at n={n}: {numer} not divisible by 12"))
    })
}

/// Numerator of the generating function, `w0 + (w1 - 5w0)x + (k + 4w0 - w1)x²`.
pub fn gf_numerator(spec: &RecurrenceSpec) -> [BigInt; 3] {
    let (k, r, s) = (&spec.k, &spec.w0, &spec.w1);
    [r.clone(), s - r * 5, k + (r << 2u32) - s]
}

/// Denominator `(1 - x)(1 - 4x + x²) = 1 - 5x + 5x² - x³`.
pub const GF_DENOMINATOR: [i64; 4] = [1, -5, 5, -1];

/// First `count` Taylor coefficients of the generating function, by power
/// series division of the numerator by [`GF_DENOMINATOR`].
pub fn gf_coefficients(spec: &RecurrenceSpec, count: usize) -> Result<Vec<BigInt>> {
    require_count(count)?;
    let numer = gf_numerator(spec);
    let denom: Vec<BigInt> = GF_DENOMINATOR.iter().map(|&d| BigInt::from(d)).collect();
    let mut out: Vec<BigInt> = Vec::with_capacity(count);
    for n in 0..count {
        // denom[0] = 1, so c_n = p_n - Σ_{j≥1} d_j c_{n-j}
        let mut c = numer.get(n).cloned().unwrap_or_default();
        for (j, d) in denom.iter().enumerate().skip(1) {
            if let Some(prev) = n.checked_sub(j).map(|i| &out[i]) {
                c -= d * prev;
            }
        }
        out.push(c);
    }
    Ok(out)
}

/// `u_n = ((1+√3)αⁿ − (√3−1)βⁿ) / 2`, the half-power form with `√2` cleared.
pub fn eval_u(n: u64) -> Result<BigInt> {
    let alpha_n = QuadElem::alpha().pow(n);
    let beta_n = alpha_n.conj();
    let x = &QuadElem::from_ints(1, 1) * &alpha_n;
    let y = &QuadElem::from_ints(-1, 1) * &beta_n;
    let u = (&x - &y).scale(&Rat::new(BigInt::from(1), BigInt::from(2)));
    let u = quad_to_integer(&u, &format!("u_{n}"))?;
    if !u.is_positive() || u.is_even() {
        return Err(Error::inconsistent(format!("u_{n} = {u} is not a positive odd integer")));
    }
    Ok(u)
}

/// `v_n = √3 · ((1+√3)αⁿ + (√3−1)βⁿ) / 2`.
pub fn eval_v(n: u64) -> Result<BigInt> {
    let alpha_n = QuadElem::alpha().pow(n);
    let beta_n = alpha_n.conj();
    let x = &QuadElem::from_ints(1, 1) * &alpha_n;
    let y = &QuadElem::from_ints(-1, 1) * &beta_n;
    let inner = (&x + &y).scale(&Rat::new(BigInt::from(1), BigInt::from(2)));
    if !inner.rational().is_zero() {
        return Err(Error::inconsistent(format!("v_{n}: inner factor {inner} is not a pure surd")));
    }
    quad_to_integer(&(&inner * &QuadElem::sqrt3()), &format!("v_{n}"))
}

/// `[w_0, ..., w_{count-1}]` by iteration.
pub fn sequence_prefix(id: &SequenceId, count: usize) -> Result<Vec<BigInt>> {
    require_count(count)?;
    Ok(id.spec().terms().take(count).collect())
}
