//! Truncated formal power series in `t` with polynomial coefficients.
//!
//! Coefficients are stored as ordinary coefficients `c_n` of
//! `f(t) = sum c_n t^n`. Generating functions in the exponential convention
//! are read out with [`TruncatedSeries::egf_coeff`], which applies the `n!`.

use num::{BigInt, One};

use crate::arith::{factorial, MultiPoly, Rational, Symbol};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<MultiPoly>,
}

impl TruncatedSeries {
    /// Builds a series from its ordinary coefficients; order is `len - 1`.
    ///
    /// Panics on an empty coefficient vector.
    pub fn from_coeffs(coeffs: Vec<MultiPoly>) -> Self {
        assert!(!coeffs.is_empty(), "a truncated series holds at least t^0");
        TruncatedSeries { coeffs }
    }

    /// Builds a series from exponential-generating-function coefficients
    /// `a_n`, i.e. `f(t) = sum a_n t^n / n!`.
    pub fn from_egf(egf: Vec<MultiPoly>) -> Self {
        let coeffs = egf
            .into_iter()
            .enumerate()
            .map(|(n, a)| a.scale(&Rational::new(BigInt::one(), factorial(n))))
            .collect();
        TruncatedSeries::from_coeffs(coeffs)
    }

    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![MultiPoly::zero(); order + 1],
        }
    }

    pub fn constant(order: usize, value: MultiPoly) -> Self {
        let mut s = TruncatedSeries::zero(order);
        s.coeffs[0] = value;
        s
    }

    pub fn one(order: usize) -> Self {
        TruncatedSeries::constant(order, MultiPoly::one())
    }

    /// The series `t` (which truncates to zero at order 0).
    pub fn t(order: usize) -> Self {
        let mut s = TruncatedSeries::zero(order);
        if order >= 1 {
            s.coeffs[1] = MultiPoly::one();
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[MultiPoly] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<MultiPoly> {
        self.coeffs
    }

    /// Ordinary coefficient of `t^n`. Panics if `n > order`.
    pub fn coeff(&self, n: usize) -> &MultiPoly {
        &self.coeffs[n]
    }

    /// `n!` times the coefficient of `t^n`.
    pub fn egf_coeff(&self, n: usize) -> Result<MultiPoly> {
        let c = self.coeffs.get(n).ok_or(Error::IndexOutOfRange {
            index: n,
            max: self.order(),
        })?;
        Ok(c.scale(&Rational::from_integer(factorial(n))))
    }

    /// All egf coefficients `a_0 ..= a_N`.
    pub fn egf_coeffs(&self) -> Vec<MultiPoly> {
        let mut fact = BigInt::one();
        self.coeffs
            .iter()
            .enumerate()
            .map(|(n, c)| {
                if n > 0 {
                    fact *= BigInt::from(n);
                }
                c.scale(&Rational::from_integer(fact.clone()))
            })
            .collect()
    }

    /// Drops every coefficient above `order`.
    pub fn truncate(&self, order: usize) -> Result<Self> {
        if order > self.order() {
            return Err(Error::IndexOutOfRange {
                index: order,
                max: self.order(),
            });
        }
        Ok(TruncatedSeries {
            coeffs: self.coeffs[..=order].to_vec(),
        })
    }

    fn check_order(&self, other: &TruncatedSeries) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &TruncatedSeries) -> Result<Self> {
        self.check_order(other)?;
        Ok(self.zip_with(other, |a, b| a + b))
    }

    pub fn sub(&self, other: &TruncatedSeries) -> Result<Self> {
        self.check_order(other)?;
        Ok(self.zip_with(other, |a, b| a - b))
    }

    fn zip_with(
        &self,
        other: &TruncatedSeries,
        f: impl Fn(&MultiPoly, &MultiPoly) -> MultiPoly,
    ) -> Self {
        TruncatedSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| f(a, b))
                .collect(),
        }
    }

    /// Cauchy product truncated at the common order.
    pub fn mul(&self, other: &TruncatedSeries) -> Result<Self> {
        self.check_order(other)?;
        Ok(TruncatedSeries {
            coeffs: cauchy(&self.coeffs, &other.coeffs, self.order()),
        })
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        self.map(|c| c.scale(factor))
    }

    pub fn mul_poly(&self, factor: &MultiPoly) -> Self {
        self.map(|c| c * factor)
    }

    pub fn map(&self, f: impl Fn(&MultiPoly) -> MultiPoly) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    pub fn substitute(&self, symbol: Symbol, value: &Rational) -> Self {
        self.map(|c| c.substitute(symbol, value))
    }

    /// Multiplicative inverse. The constant term must be a nonzero rational.
    pub fn invert(&self) -> Result<Self> {
        let c0 = self.coeffs[0]
            .as_constant()
            .filter(|c| !num::Zero::is_zero(c))
            .ok_or_else(|| Error::NotInvertible(self.coeffs[0].to_string()))?;
        let inv0 = c0.recip();
        let neg_inv0 = -inv0.clone();
        let mut out: Vec<MultiPoly> = Vec::with_capacity(self.coeffs.len());
        out.push(MultiPoly::constant(inv0));
        for n in 1..=self.order() {
            let mut acc = MultiPoly::zero();
            for i in 1..=n {
                if self.coeffs[i].is_zero() || out[n - i].is_zero() {
                    continue;
                }
                acc += &(&self.coeffs[i] * &out[n - i]);
            }
            out.push(acc.scale(&neg_inv0));
        }
        Ok(TruncatedSeries { coeffs: out })
    }

    /// `self^exp`, with `self^0 = 1`.
    pub fn pow(&self, exp: u32) -> Self {
        let order = self.order();
        let mut result = TruncatedSeries::one(order);
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result.coeffs = cauchy(&result.coeffs, &base.coeffs, order);
            }
            e >>= 1;
            if e > 0 {
                base.coeffs = cauchy(&base.coeffs, &base.coeffs, order);
            }
        }
        result
    }

    /// `self(inner(t))`. The inner series must have zero constant term.
    ///
    /// Horner evaluation `f_0 + g (f_1 + g (f_2 + ...))`, where the partial
    /// result at depth `i` is only needed up to order `N - i`.
    pub fn compose(&self, inner: &TruncatedSeries) -> Result<Self> {
        self.check_order(inner)?;
        if !inner.coeffs[0].is_zero() {
            return Err(Error::NonzeroConstantTerm(inner.coeffs[0].to_string()));
        }
        let order = self.order();
        let g = &inner.coeffs;
        let mut h: Vec<MultiPoly> = vec![self.coeffs[order].clone()];
        for i in (0..order).rev() {
            let target = order - i;
            let mut next = Vec::with_capacity(target + 1);
            next.push(self.coeffs[i].clone());
            for n in 1..=target {
                let mut acc = MultiPoly::zero();
                for j in 1..=n {
                    if g[j].is_zero() || h[n - j].is_zero() {
                        continue;
                    }
                    acc += &(&g[j] * &h[n - j]);
                }
                next.push(acc);
            }
            h = next;
        }
        Ok(TruncatedSeries { coeffs: h })
    }
}

fn cauchy(a: &[MultiPoly], b: &[MultiPoly], order: usize) -> Vec<MultiPoly> {
    (0..=order)
        .map(|n| {
            let mut acc = MultiPoly::zero();
            for i in 0..=n {
                if a[i].is_zero() || b[n - i].is_zero() {
                    continue;
                }
                acc += &(&a[i] * &b[n - i]);
            }
            acc
        })
        .collect()
}
