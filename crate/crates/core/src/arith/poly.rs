use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num::{One, Zero};

use super::Rational;

/// One of the three formal symbols of the coefficient ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Symbol {
    Lambda,
    X,
    Y,
}

impl Symbol {
    pub fn name(self) -> &'static str {
        match self {
            Symbol::Lambda => "lambda",
            Symbol::X => "x",
            Symbol::Y => "y",
        }
    }
}

/// Exponent triple of `lambda^lambda * x^x * y^y`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    pub lambda: u32,
    pub x: u32,
    pub y: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial {
        lambda: 0,
        x: 0,
        y: 0,
    };

    pub fn new(lambda: u32, x: u32, y: u32) -> Self {
        Monomial { lambda, x, y }
    }

    pub fn of(symbol: Symbol, exp: u32) -> Self {
        let mut m = Monomial::ONE;
        *m.exp_mut(symbol) = exp;
        m
    }

    pub fn exp(&self, symbol: Symbol) -> u32 {
        match symbol {
            Symbol::Lambda => self.lambda,
            Symbol::X => self.x,
            Symbol::Y => self.y,
        }
    }

    fn exp_mut(&mut self, symbol: Symbol) -> &mut u32 {
        match symbol {
            Symbol::Lambda => &mut self.lambda,
            Symbol::X => &mut self.x,
            Symbol::Y => &mut self.y,
        }
    }

    pub fn total_degree(&self) -> u32 {
        self.lambda + self.x + self.y
    }

    pub fn is_one(&self) -> bool {
        *self == Monomial::ONE
    }

    /// Product of two monomials. Exponent overflow is a hard error.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let add = |a: u32, b: u32| a.checked_add(b).expect("monomial exponent overflow");
        Monomial {
            lambda: add(self.lambda, other.lambda),
            x: add(self.x, other.x),
            y: add(self.y, other.y),
        }
    }
}

/// Sparse polynomial in `Q[lambda, x, y]`.
///
/// The term map never stores a zero coefficient, so the zero polynomial is the
/// empty map and derived equality coincides with mathematical equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly::default()
    }

    pub fn one() -> Self {
        MultiPoly::constant(Rational::one())
    }

    pub fn constant(value: Rational) -> Self {
        MultiPoly::term(Monomial::ONE, value)
    }

    pub fn term(monomial: Monomial, coeff: Rational) -> Self {
        let mut p = MultiPoly::zero();
        p.add_term(monomial, coeff);
        p
    }

    pub fn symbol(symbol: Symbol) -> Self {
        MultiPoly::term(Monomial::of(symbol, 1), Rational::one())
    }

    pub fn lambda() -> Self {
        MultiPoly::symbol(Symbol::Lambda)
    }

    pub fn x() -> Self {
        MultiPoly::symbol(Symbol::X)
    }

    pub fn y() -> Self {
        MultiPoly::symbol(Symbol::Y)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&Monomial::ONE).is_some_and(|c| c.is_one())
    }

    /// The value of a constant polynomial (including zero), `None` otherwise.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&Monomial::ONE).cloned(),
            _ => None,
        }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, monomial: &Monomial) -> Rational {
        self.terms
            .get(monomial)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Highest exponent of `symbol`; zero for constants and for zero.
    pub fn degree_in(&self, symbol: Symbol) -> u32 {
        self.terms.keys().map(|m| m.exp(symbol)).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(Monomial::total_degree)
            .max()
            .unwrap_or(0)
    }

    pub fn mentions(&self, symbol: Symbol) -> bool {
        self.terms.keys().any(|m| m.exp(symbol) > 0)
    }

    /// Adds `coeff * monomial` in place, dropping the entry if it cancels.
    pub fn add_term(&mut self, monomial: Monomial, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(monomial) {
            Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += coeff;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn scale(&self, factor: &Rational) -> MultiPoly {
        if factor.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, c * factor)).collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> MultiPoly {
        let mut acc = MultiPoly::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Replaces `symbol` by a rational value.
    pub fn substitute(&self, symbol: Symbol, value: &Rational) -> MultiPoly {
        let mut out = MultiPoly::zero();
        let mut powers: Vec<Rational> = vec![Rational::one()];
        for (m, c) in &self.terms {
            let e = m.exp(symbol) as usize;
            while powers.len() <= e {
                let next = powers.last().unwrap() * value;
                powers.push(next);
            }
            let mut reduced = *m;
            *reduced.exp_mut(symbol) = 0;
            out.add_term(reduced, c * &powers[e]);
        }
        out
    }

    /// Evaluates at a point `(lambda, x, y)`.
    pub fn eval(&self, lambda: &Rational, x: &Rational, y: &Rational) -> Rational {
        let powr = |b: &Rational, e: u32| (0..e).fold(Rational::one(), |acc, _| acc * b);
        self.terms.iter().fold(Rational::zero(), |acc, (m, c)| {
            acc + c * powr(lambda, m.lambda) * powr(x, m.x) * powr(y, m.y)
        })
    }

    /// Coefficient of `symbol^exp`, as a polynomial in the remaining symbols.
    pub fn coeff_of(&self, symbol: Symbol, exp: u32) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            if m.exp(symbol) == exp {
                let mut reduced = *m;
                *reduced.exp_mut(symbol) = 0;
                out.add_term(reduced, c.clone());
            }
        }
        out
    }
}

impl From<Rational> for MultiPoly {
    fn from(value: Rational) -> Self {
        MultiPoly::constant(value)
    }
}

impl From<i64> for MultiPoly {
    fn from(value: i64) -> Self {
        MultiPoly::constant(super::int(value))
    }
}

impl AddAssign<&MultiPoly> for MultiPoly {
    fn add_assign(&mut self, rhs: &MultiPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, c.clone());
        }
    }
}

impl SubAssign<&MultiPoly> for MultiPoly {
    fn sub_assign(&mut self, rhs: &MultiPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, -c.clone());
        }
    }
}

impl MulAssign<&MultiPoly> for MultiPoly {
    fn mul_assign(&mut self, rhs: &MultiPoly) {
        *self = &*self * rhs;
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;

    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let (mut big, small) = if self.len() >= rhs.len() {
            (self.clone(), rhs)
        } else {
            (rhs.clone(), self)
        };
        big += small;
        big
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;

    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;

    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        if self.is_zero() || rhs.is_zero() {
            return out;
        }
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Mul<&Rational> for &MultiPoly {
    type Output = MultiPoly;

    fn mul(self, rhs: &Rational) -> MultiPoly {
        self.scale(rhs)
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;

    fn neg(self) -> MultiPoly {
        MultiPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect(),
        }
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;

    fn neg(mut self) -> MultiPoly {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

macro_rules! forward_owned_binop {
    ($tr:ident, $method:ident) => {
        impl $tr for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: &MultiPoly) -> MultiPoly {
                (&self).$method(rhs)
            }
        }
        impl $tr<MultiPoly> for &MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: MultiPoly) -> MultiPoly {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl std::iter::Sum for MultiPoly {
    fn sum<I: Iterator<Item = MultiPoly>>(iter: I) -> Self {
        iter.fold(MultiPoly::zero(), |mut acc, p| {
            acc += &p;
            acc
        })
    }
}

impl std::iter::Product for MultiPoly {
    fn product<I: Iterator<Item = MultiPoly>>(iter: I) -> Self {
        iter.fold(MultiPoly::one(), |acc, p| &acc * &p)
    }
}
