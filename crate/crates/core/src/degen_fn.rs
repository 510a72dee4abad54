//! Base degenerate functions: falling factorials, `e_lambda^x(t)`,
//! `log_lambda(1 + t)`, degenerate Stirling numbers of the first kind, and the
//! polylogarithm / polyexponential family including the multiple
//! polyexponential over chains `0 < n_1 < ... < n_r`.

use num::{BigInt, One, Zero};

use crate::arith::{factorial, int, pow_signed, MultiPoly, Rational, Symbol};
use crate::error::{Error, Result};
use crate::series::TruncatedSeries;

/// The argument of a polynomial family or the weight of a degenerate
/// exponential.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Argument {
    X,
    Y,
    XPlusY,
    Value(Rational),
}

impl Argument {
    pub fn zero() -> Self {
        Argument::Value(Rational::zero())
    }

    pub fn one() -> Self {
        Argument::Value(Rational::one())
    }

    pub fn poly(&self) -> MultiPoly {
        match self {
            Argument::X => MultiPoly::x(),
            Argument::Y => MultiPoly::y(),
            Argument::XPlusY => MultiPoly::x() + MultiPoly::y(),
            Argument::Value(v) => MultiPoly::constant(v.clone()),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Argument::Value(v) if v.is_zero())
    }
}

impl std::fmt::Display for Argument {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Argument::X => f.write_str("x"),
            Argument::Y => f.write_str("y"),
            Argument::XPlusY => f.write_str("x + y"),
            Argument::Value(v) => write!(f, "{v}"),
        }
    }
}

/// Index list `(k_1, ..., k_r)` with `r >= 1`; entries may be negative.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KIndexList(Vec<i64>);

impl KIndexList {
    pub fn new(ks: Vec<i64>) -> Result<Self> {
        if ks.is_empty() {
            return Err(Error::EmptyIndexList);
        }
        Ok(KIndexList(ks))
    }

    pub fn single(k: i64) -> Self {
        KIndexList(vec![k])
    }

    /// The depth `r`.
    pub fn depth(&self) -> usize {
        self.0.len()
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }
}

impl std::fmt::Display for KIndexList {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.0.iter().map(i64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// `(base)_{n,lambda} = base (base - lambda) ... (base - (n-1) lambda)`.
pub fn deg_falling_factorial(base: &Argument, n: usize) -> MultiPoly {
    let b = base.poly();
    let l = MultiPoly::lambda();
    (0..n).map(|i| &b - &l.scale(&int(i as i64))).product()
}

/// Classical falling factorial `(x)_n = x (x - 1) ... (x - n + 1)`.
pub fn classical_falling_factorial(n: usize) -> MultiPoly {
    (0..n)
        .map(|i| MultiPoly::x() - MultiPoly::from(i as i64))
        .product()
}

/// `(1)_{n,lambda}` for `n = 0 ..= n_max`.
fn unit_falling_factorials(n_max: usize) -> Vec<MultiPoly> {
    let mut out = Vec::with_capacity(n_max + 1);
    let mut acc = MultiPoly::one();
    out.push(acc.clone());
    for j in 0..n_max {
        acc = &acc * &(MultiPoly::one() - MultiPoly::lambda().scale(&int(j as i64)));
        out.push(acc.clone());
    }
    out
}

/// `e_lambda^weight(t) = sum (weight)_{n,lambda} t^n / n!`.
pub fn deg_exp(weight: &Argument, order: usize) -> TruncatedSeries {
    let b = weight.poly();
    let l = MultiPoly::lambda();
    let mut egf = Vec::with_capacity(order + 1);
    let mut acc = MultiPoly::one();
    egf.push(acc.clone());
    for i in 0..order {
        acc = &acc * &(&b - &l.scale(&int(i as i64)));
        egf.push(acc.clone());
    }
    TruncatedSeries::from_egf(egf)
}

/// `log_lambda(1 + t) = ((1 + t)^lambda - 1) / lambda`, with the ordinary
/// coefficient at `t^n` equal to `(lambda - 1) ... (lambda - n + 1) / n!`.
pub fn deg_log(order: usize) -> TruncatedSeries {
    let mut coeffs = vec![MultiPoly::zero()];
    let mut rising = MultiPoly::one();
    for n in 1..=order {
        if n >= 2 {
            rising = &rising * &(MultiPoly::lambda() - MultiPoly::from((n - 1) as i64));
        }
        coeffs.push(rising.scale(&Rational::new(BigInt::one(), factorial(n))));
    }
    TruncatedSeries::from_coeffs(coeffs)
}

/// Triangular table of `S_{1,lambda}(n, k)`, `0 <= k <= n <= n_max`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StirlingTable {
    rows: Vec<Vec<MultiPoly>>,
}

impl StirlingTable {
    pub fn n_max(&self) -> usize {
        self.rows.len() - 1
    }

    /// `S_{1,lambda}(n, k)`, or `None` outside `k <= n <= n_max`.
    pub fn get(&self, n: usize, k: usize) -> Option<&MultiPoly> {
        self.rows.get(n).and_then(|row| row.get(k))
    }

    /// Like [`get`](Self::get) but zero for `k > n`. Panics when `n > n_max`.
    pub fn entry(&self, n: usize, k: usize) -> MultiPoly {
        assert!(
            n <= self.n_max(),
            "row {n} beyond table of size {}",
            self.n_max()
        );
        self.rows[n].get(k).cloned().unwrap_or_default()
    }

    pub fn rows(&self) -> &[Vec<MultiPoly>] {
        &self.rows
    }
}

/// Fills the table with
/// `S(n+1, k) = S(n, k-1) + (k lambda - n) S(n, k)`, `S(0, 0) = 1`.
pub fn stirling1_deg_recurrence(n_max: usize) -> StirlingTable {
    let mut rows: Vec<Vec<MultiPoly>> = vec![vec![MultiPoly::one()]];
    for n in 0..n_max {
        let prev = &rows[n];
        let next: Vec<MultiPoly> = (0..=n + 1)
            .map(|k| {
                let mut v = if k >= 1 {
                    prev[k - 1].clone()
                } else {
                    MultiPoly::zero()
                };
                if k <= n {
                    let factor =
                        MultiPoly::lambda().scale(&int(k as i64)) - MultiPoly::from(n as i64);
                    v += &(&factor * &prev[k]);
                }
                v
            })
            .collect();
        rows.push(next);
    }
    StirlingTable { rows }
}

/// `S_{1,lambda}(n, k)` read off `(1/k!) log_lambda(1 + t)^k` as the egf
/// coefficient at `t^n`.
pub fn stirling1_deg_series(n: usize, k: usize, order: usize) -> Result<MultiPoly> {
    if n > order {
        return Err(Error::IndexOutOfRange {
            index: n,
            max: order,
        });
    }
    if k > n {
        return Err(Error::IndexOutOfRange { index: k, max: n });
    }
    let power = deg_log(order).pow(k as u32);
    let value = power.egf_coeff(n)?;
    Ok(value.scale(&Rational::new(BigInt::one(), factorial(k))))
}

/// The table obtained by expanding each classical `(x)_n` in the degenerate
/// basis `(x)_{k,lambda}`.
pub fn stirling1_deg_change_of_basis(n_max: usize) -> Result<StirlingTable> {
    let rows = (0..=n_max)
        .map(|n| {
            let mut row = falling_basis_coefficients(&classical_falling_factorial(n))?;
            row.resize(n + 1, MultiPoly::zero());
            Ok(row)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(StirlingTable { rows })
}

/// Coefficients `c_m` (polynomials free of `x`) with
/// `p = sum_m c_m (x)_{m,lambda}`, found by eliminating the leading power of
/// `x` against the monic `(x)_{m,lambda}`, highest `m` first.
pub fn falling_basis_coefficients(p: &MultiPoly) -> Result<Vec<MultiPoly>> {
    let top = p.degree_in(Symbol::X) as usize;
    let mut coeffs = vec![MultiPoly::zero(); top + 1];
    let mut rest = p.clone();
    for m in (0..=top).rev() {
        let lead = rest.coeff_of(Symbol::X, m as u32);
        if lead.is_zero() {
            continue;
        }
        rest -= &(&lead * &deg_falling_factorial(&Argument::X, m));
        coeffs[m] = lead;
    }
    if !rest.is_zero() {
        return Err(Error::BasisRemainder(rest.to_string()));
    }
    Ok(coeffs)
}

/// `Li_k(t) = sum_{n >= 1} t^n / n^k`.
pub fn polylog(k: i64, order: usize) -> TruncatedSeries {
    let coeffs = (0..=order)
        .map(|n| match n {
            0 => MultiPoly::zero(),
            _ => MultiPoly::constant(pow_signed(&int(n as i64), -k)),
        })
        .collect();
    TruncatedSeries::from_coeffs(coeffs)
}

/// `1 / ((n-1)! n^k)` for `n >= 1`.
fn polyexp_weight(n: usize, k: i64) -> Rational {
    pow_signed(&int(n as i64), -k) / Rational::from_integer(factorial(n - 1))
}

/// `Ei_k(t) = sum_{n >= 1} t^n / ((n-1)! n^k)`.
pub fn polyexp_modified(k: i64, order: usize) -> TruncatedSeries {
    let coeffs = (0..=order)
        .map(|n| match n {
            0 => MultiPoly::zero(),
            _ => MultiPoly::constant(polyexp_weight(n, k)),
        })
        .collect();
    TruncatedSeries::from_coeffs(coeffs)
}

/// `Ei_{k,lambda}(t) = sum_{n >= 1} (1)_{n,lambda} t^n / ((n-1)! n^k)`.
pub fn deg_polyexp(k: i64, order: usize) -> TruncatedSeries {
    let units = unit_falling_factorials(order);
    let coeffs = (0..=order)
        .map(|n| match n {
            0 => MultiPoly::zero(),
            _ => units[n].scale(&polyexp_weight(n, k)),
        })
        .collect();
    TruncatedSeries::from_coeffs(coeffs)
}

/// Degenerate multiple polyexponential `Ei_{k_1, ..., k_r, lambda}(t)`.
///
/// Forward dynamic programming over chain levels: the level-`i` weight of
/// `n` is `(1)_{n,lambda} / ((n-1)! n^{k_i})` times the sum of all level
/// `i-1` weights below `n`. The coefficient at `t^m` is the level-`r` weight
/// of `m`.
pub fn deg_multi_polyexp(ks: &KIndexList, order: usize) -> TruncatedSeries {
    let units = unit_falling_factorials(order);
    let base = |n: usize, k: i64| units[n].scale(&polyexp_weight(n, k));

    let mut level: Vec<MultiPoly> = (0..=order)
        .map(|n| {
            if n == 0 {
                MultiPoly::zero()
            } else {
                base(n, ks.as_slice()[0])
            }
        })
        .collect();
    for &k in &ks.as_slice()[1..] {
        let mut prefix = MultiPoly::zero();
        let mut next = Vec::with_capacity(order + 1);
        for n in 0..=order {
            // prefix = sum of level[m] for m < n
            if n == 0 || prefix.is_zero() {
                next.push(MultiPoly::zero());
            } else {
                next.push(&base(n, k) * &prefix);
            }
            prefix += &level[n];
        }
        level = next;
    }
    TruncatedSeries::from_coeffs(level)
}
