//! Exact scalars and sparse polynomials in the three formal symbols
//! `lambda`, `x` and `y`.
//!
//! Every coefficient in the crate lives in `Q[lambda, x, y]`. Values are kept
//! in canonical form at all times (reduced rationals, no stored zero
//! coefficients), so `==` on [`MultiPoly`] is mathematical equality.

mod poly;
mod render;

pub use num::{BigInt, BigRational as Rational};
pub use poly::{Monomial, MultiPoly, Symbol};
pub use render::ParsePolyError;

use num::{One, Zero};

/// `num / den` as a reduced rational. Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// An integer as a rational.
pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// Binomial coefficient `C(n, k)`; zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> Rational {
    if k > n {
        return Rational::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    Rational::from_integer(acc)
}

/// `base^exp` for a signed exponent. Panics on `0^negative`.
pub fn pow_signed(base: &Rational, exp: i64) -> Rational {
    let magnitude = exp.unsigned_abs();
    let mut acc = Rational::one();
    for _ in 0..magnitude {
        acc *= base;
    }
    if exp < 0 {
        assert!(!acc.is_zero(), "zero raised to a negative power");
        acc.recip()
    } else {
        acc
    }
}
