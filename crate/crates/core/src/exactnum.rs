//! Exact numeric substrate: big integers, reduced rationals, the field
//! `Q(√3)` and integer square roots.
//!
//! Nothing in here rounds. Elements of `Q(√3)` are stored as a pair of
//! rationals `(a, b)` meaning `a + b√3`; since `√3` is irrational that
//! pair is unique, so derived equality is field equality.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub use num_bigint::BigInt;

/// Reduced rational with positive denominator.
pub type Rat = num_rational::BigRational;

/// `a + b√3` with rational `a`, `b`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadElem {
    a: Rat,
    b: Rat,
}

impl QuadElem {
    pub fn new(a: Rat, b: Rat) -> Self {
        QuadElem { a, b }
    }

    pub fn from_ints(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Self {
        QuadElem::new(Rat::from_integer(a.into()), Rat::from_integer(b.into()))
    }

    pub fn zero() -> Self {
        QuadElem::from_ints(0, 0)
    }

    pub fn one() -> Self {
        QuadElem::from_ints(1, 0)
    }

    /// `√3` itself.
    pub fn sqrt3() -> Self {
        QuadElem::from_ints(0, 1)
    }

    /// α = 2 + √3, the larger root of x² − 4x + 1.
    pub fn alpha() -> Self {
        QuadElem::from_ints(2, 1)
    }

    /// β = 2 − √3, the smaller root of x² − 4x + 1.
    pub fn beta() -> Self {
        QuadElem::from_ints(2, -1)
    }

    /// Rational part.
    pub fn rational(&self) -> &Rat {
        &self.a
    }

    /// Coefficient of `√3`.
    pub fn surd(&self) -> &Rat {
        &self.b
    }

    pub fn conj(&self) -> Self {
        QuadElem::new(self.a.clone(), -&self.b)
    }

    /// Multiplies both coordinates by a rational.
    pub fn scale(&self, c: &Rat) -> Self {
        QuadElem::new(&self.a * c, &self.b * c)
    }

    /// Binary exponentiation; `x^0 = 1`.
    pub fn pow(&self, mut n: u64) -> Self {
        let mut acc = QuadElem::one();
        let mut base = self.clone();
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// The integer this element equals, if it lies in `Z`.
    pub fn to_integer(&self) -> Option<BigInt> {
        if self.b.is_zero() && self.a.is_integer() {
            Some(self.a.to_integer())
        } else {
            None
        }
    }
}

impl fmt::Display for QuadElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_negative() {
            write!(f, "{} - {}√3", self.a, -&self.b)
        } else {
            write!(f, "{} + {}√3", self.a, self.b)
        }
    }
}

impl<'a> Add<&'a QuadElem> for &'a QuadElem {
    type Output = QuadElem;
    fn add(self, rhs: &QuadElem) -> QuadElem {
        QuadElem::new(&self.a + &rhs.a, &self.b + &rhs.b)
    }
}

impl<'a> Sub<&'a QuadElem> for &'a QuadElem {
    type Output = QuadElem;
    fn sub(self, rhs: &QuadElem) -> QuadElem {
        QuadElem::new(&self.a - &rhs.a, &self.b - &rhs.b)
    }
}

impl<'a> Mul<&'a QuadElem> for &'a QuadElem {
    type Output = QuadElem;
    // (a + b√3)(c + d√3) = (ac + 3bd) + (ad + bc)√3
    fn mul(self, rhs: &QuadElem) -> QuadElem {
        let three = Rat::from_integer(BigInt::from(3));
        let a = &self.a * &rhs.a + three * (&self.b * &rhs.b);
        let b = &self.a * &rhs.b + &self.b * &rhs.a;
        QuadElem::new(a, b)
    }
}

impl Neg for &QuadElem {
    type Output = QuadElem;
    fn neg(self) -> QuadElem {
        QuadElem::new(-&self.a, -&self.b)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for QuadElem {
            type Output = QuadElem;
            fn $m(self, rhs: QuadElem) -> QuadElem {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for QuadElem {
    type Output = QuadElem;
    fn neg(self) -> QuadElem {
        -&self
    }
}

pub fn quad_add(x: &QuadElem, y: &QuadElem) -> QuadElem {
    x + y
}

pub fn quad_mul(x: &QuadElem, y: &QuadElem) -> QuadElem {
    x * y
}

pub fn quad_conj(x: &QuadElem) -> QuadElem {
    x.conj()
}

pub fn quad_pow(x: &QuadElem, n: u64) -> QuadElem {
    x.pow(n)
}

/// `floor(√m)` by Heron's iteration started above the root.
///
/// Starting from `x₀ ≥ √m` the iterates decrease strictly until the first
/// step that fails to decrease; that iterate is the floor root.
pub fn isqrt(m: &BigInt) -> Result<BigInt> {
    if m.is_negative() {
        return Err(Error::domain(format!("isqrt of negative value {m}")));
    }
    if *m < BigInt::from(2) {
        return Ok(m.clone());
    }
    // 2^ceil(bits/2) > √m
    let mut x = BigInt::one() << m.bits().div_ceil(2);
    loop {
        let y = (&x + m / &x) >> 1;
        if y >= x {
            break;
        }
        x = y;
    }
    while &x * &x > *m {
        x -= 1;
    }
    while (&x + 1u32) * (&x + 1u32) <= *m {
        x += 1;
    }
    Ok(x)
}

/// Exact square root of `m`, if `m` is a perfect square.
pub fn is_perfect_square(m: &BigInt) -> Option<BigInt> {
    if m.is_negative() {
        return None;
    }
    // squares mod 16 are 0, 1, 4, 9
    let low = (m & BigInt::from(15u8)).iter_u32_digits().next().unwrap_or(0);
    if !matches!(low, 0 | 1 | 4 | 9) {
        return None;
    }
    let root = isqrt(m).ok()?;
    (&root * &root == *m).then_some(root)
}

/// `n / d` when `d` divides `n` exactly.
pub(crate) fn exact_div(n: &BigInt, d: &BigInt) -> Option<BigInt> {
    let (q, r) = n.div_rem(d);
    r.is_zero().then_some(q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(a: i64, b: i64) -> QuadElem {
        QuadElem::from_ints(a, b)
    }

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn alpha_beta_relations() {
        let (a, b) = (QuadElem::alpha(), QuadElem::beta());
        assert_eq!(quad_add(&a, &b), q(4, 0));
        assert_eq!(quad_mul(&a, &b), q(1, 0));
        assert_eq!(&a - &b, q(0, 2));
        assert_eq!(quad_conj(&a), q(2, -1));
        assert_eq!(&(&a * &a) + &(&b * &b), q(14, 0));
    }

    #[test]
    fn powers() {
        let a = QuadElem::alpha();
        assert_eq!(quad_pow(&a, 0), QuadElem::one());
        // (2+√3)² = 4 + 4√3 + 3
        assert_eq!(quad_pow(&a, 2), q(7, 4));
        assert_eq!(quad_pow(&a, 2), &a * &a);
        assert_eq!(&quad_pow(&a, 2) + &quad_pow(&QuadElem::beta(), 2), q(14, 0));
        let mut slow = QuadElem::one();
        for n in 0..40u64 {
            assert_eq!(a.pow(n), slow, "n={n}");
            slow = &slow * &a;
        }
    }

    #[test]
    fn rational_coefficients_stay_reduced() {
        let half = QuadElem::new(Rat::new(big(6), big(12)), Rat::new(big(-2), big(-4)));
        assert_eq!(half.rational(), &Rat::new(big(1), big(2)));
        assert_eq!(half.surd().denom(), &big(2));
        assert_eq!(half.to_integer(), None);
        assert_eq!((&half + &half).to_integer(), None);
        assert_eq!((&half + &half.conj()).to_integer(), Some(big(1)));
    }

    #[test]
    fn display() {
        assert_eq!(QuadElem::beta().to_string(), "2 - 1√3");
        assert_eq!(QuadElem::alpha().to_string(), "2 + 1√3");
    }

    #[test]
    fn isqrt_examples() {
        assert_eq!(isqrt(&big(0)).unwrap(), big(0));
        assert_eq!(isqrt(&big(1)).unwrap(), big(1));
        assert_eq!(isqrt(&big(361)).unwrap(), big(19));
        assert_eq!(isqrt(&big(362)).unwrap(), big(19));
        assert_eq!(isqrt(&big(360)).unwrap(), big(18));
        assert!(matches!(isqrt(&big(-1)), Err(Error::Domain(_))));
    }

    #[test]
    fn perfect_squares() {
        assert_eq!(is_perfect_square(&big(361)), Some(big(19)));
        assert_eq!(is_perfect_square(&big(360)), None);
        assert_eq!(is_perfect_square(&big(0)), Some(big(0)));
        assert_eq!(is_perfect_square(&big(-4)), None);
        let huge: BigInt = num_traits::Pow::pow(BigInt::from(10u32), 60u32) + 7;
        assert_eq!(is_perfect_square(&(&huge * &huge)), Some(huge.clone()));
        assert_eq!(is_perfect_square(&(&huge * &huge + 1)), None);
    }

    fn arb_quad() -> impl Strategy<Value = QuadElem> {
        (any::<i32>(), 1..50i32, any::<i32>(), 1..50i32).prop_map(|(an, ad, bn, bd)| {
            QuadElem::new(Rat::new(big(an.into()), big(ad.into())), Rat::new(big(bn.into()), big(bd.into())))
        })
    }

    proptest! {
        #[test]
        fn conj_is_ring_homomorphism(x in arb_quad(), y in arb_quad()) {
            prop_assert_eq!((&x * &y).conj(), &x.conj() * &y.conj());
            prop_assert_eq!((&x + &y).conj(), &x.conj() + &y.conj());
        }

        #[test]
        fn alpha_beta_powers_are_inverse(n in 0u64..200) {
            let p = &QuadElem::alpha().pow(n) * &QuadElem::beta().pow(n);
            prop_assert_eq!(p, QuadElem::one());
        }

        #[test]
        fn isqrt_brackets_root(bytes in proptest::collection::vec(any::<u8>(), 0..40)) {
            let m = BigInt::from(num_bigint::BigUint::from_bytes_le(&bytes));
            let r = isqrt(&m).unwrap();
            prop_assert!(&r * &r <= m);
            prop_assert!((&r + 1) * (&r + 1) > m);
            prop_assert_eq!(r, m.sqrt());
        }

        #[test]
        fn rat_canonical(n in any::<i64>(), d in 1..i64::MAX, c in any::<i64>()) {
            prop_assume!(c != 0);
            let x = Rat::new(big(n), big(d));
            let y = Rat::new(big(n) * big(c), big(d) * big(c));
            prop_assert_eq!(x.numer(), y.numer());
            prop_assert_eq!(x.denom(), y.denom());
            prop_assert!(y.denom().is_positive());
        }
    }
}
