//! Checkers for the identities satisfied by the degenerate multi-poly-Genocchi
//! polynomials.
//!
//! Each checker builds the generating-function side with
//! [`families::multi_poly_genocchi_deg`] and an explicit side from its own
//! ingredients (Stirling table by recurrence, chain enumeration, Euler or
//! Genocchi families of order `r`), then compares the two exactly, one cell
//! per index `n`.

use num::{One, Zero};

use crate::arith::{binomial, factorial, int, pow_signed, MultiPoly, Rational, Symbol};
use crate::degen_fn::{
    classical_falling_factorial, deg_exp, deg_falling_factorial, deg_log, deg_polyexp,
    polyexp_modified, stirling1_deg_recurrence, Argument, KIndexList, StirlingTable,
};
use crate::exec::Execution;
use crate::families::{
    euler_deg_order, expand_in_deg_falling_basis, genocchi_deg, genocchi_deg_order,
    multi_poly_genocchi_deg, poly_genocchi_deg, PolyFamily,
};
use crate::series::TruncatedSeries;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IdentityId {
    Thm1,
    Cor2,
    Thm3,
    Prop4,
    Eq15,
    Vanishing,
    ReductionR1K1,
    Eq19,
    Eq05,
    InverseLogExp,
    LambdaZeroClassical,
}

impl IdentityId {
    pub fn name(self) -> &'static str {
        match self {
            IdentityId::Thm1 => "Thm1",
            IdentityId::Cor2 => "Cor2",
            IdentityId::Thm3 => "Thm3",
            IdentityId::Prop4 => "Prop4",
            IdentityId::Eq15 => "Eq15",
            IdentityId::Vanishing => "Vanishing",
            IdentityId::ReductionR1K1 => "ReductionR1K1",
            IdentityId::Eq19 => "Eq19",
            IdentityId::Eq05 => "Eq05",
            IdentityId::InverseLogExp => "InverseLogExp",
            IdentityId::LambdaZeroClassical => "LambdaZeroClassical",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellParams {
    pub n: usize,
    pub r: Option<usize>,
    pub ks: Option<KIndexList>,
    /// Which sub-check of a bundled report this cell belongs to.
    pub label: Option<String>,
}

impl CellParams {
    fn for_ks(n: usize, ks: &KIndexList) -> Self {
        CellParams {
            n,
            r: Some(ks.depth()),
            ks: Some(ks.clone()),
            label: None,
        }
    }

    fn labelled(n: usize, label: impl Into<String>) -> Self {
        CellParams {
            n,
            r: None,
            ks: None,
            label: Some(label.into()),
        }
    }

    fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cell {
    pub params: CellParams,
    pub passed: bool,
    /// Both renders are present exactly when the cell failed.
    pub lhs: Option<String>,
    pub rhs: Option<String>,
}

impl Cell {
    fn compare(params: CellParams, lhs: &MultiPoly, rhs: &MultiPoly) -> Cell {
        if lhs == rhs {
            Cell {
                params,
                passed: true,
                lhs: None,
                rhs: None,
            }
        } else {
            Cell {
                params,
                passed: false,
                lhs: Some(lhs.to_string()),
                rhs: Some(rhs.to_string()),
            }
        }
    }

    fn compare_all(params: CellParams, lhs: &[MultiPoly], rhs: &[MultiPoly]) -> Cell {
        if lhs == rhs {
            return Cell {
                params,
                passed: true,
                lhs: None,
                rhs: None,
            };
        }
        let render = |v: &[MultiPoly]| {
            let parts: Vec<String> = v.iter().map(MultiPoly::to_string).collect();
            format!("[{}]", parts.join("; "))
        };
        Cell {
            params,
            passed: false,
            lhs: Some(render(lhs)),
            rhs: Some(render(rhs)),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub identity: IdentityId,
    pub cells: Vec<Cell>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.cells.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Cell> {
        self.cells.iter().filter(|c| !c.passed)
    }
}

/// The default grid of index lists: every list of depth 1 over `-2..=2`,
/// every list of depth 2 over `-1..=2` plus two lists reaching `-2`, and a
/// fixed sample of depth-3 lists.
pub fn default_sweep() -> Vec<KIndexList> {
    let mut out: Vec<Vec<i64>> = (-2..=2).map(|k| vec![k]).collect();
    for a in -1..=2 {
        for b in -1..=2 {
            out.push(vec![a, b]);
        }
    }
    out.extend([vec![-2, 1], vec![2, -2]]);
    out.extend([
        vec![0, 1, 1],
        vec![1, 1, 1],
        vec![1, 2, 0],
        vec![-1, 0, 1],
        vec![2, -1, -2],
        vec![-2, 2, 1],
        vec![0, 0, 0],
        vec![1, -1, 2],
        vec![2, 2, 2],
        vec![-1, -2, 0],
    ]);
    out.into_iter()
        .map(|ks| KIndexList::new(ks).unwrap())
        .collect()
}

/// Strictly increasing chains `0 < n_1 < ... < n_r <= max`.
fn chains(r: usize, max: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if r > max {
        return out;
    }
    let mut chain: Vec<usize> = (1..=r).collect();
    loop {
        out.push(chain.clone());
        // advance the rightmost entry that still has room
        let mut i = r;
        while i > 0 && chain[i - 1] == max - (r - i) {
            i -= 1;
        }
        if i == 0 {
            return out;
        }
        chain[i - 1] += 1;
        for j in i..r {
            chain[j] = chain[j - 1] + 1;
        }
    }
}

/// Weight of one chain in the explicit sums:
/// `prod (1)_{n_i,lambda} / ((n_1-1)! ... (n_{r-1}-1)! n_1^{k_1} ... n_{r-1}^{k_{r-1}} n_r^{k_r - 1})`.
fn chain_weight(ks: &KIndexList, chain: &[usize], units: &[MultiPoly]) -> MultiPoly {
    let r = chain.len();
    let mut scalar = Rational::one();
    let mut poly = MultiPoly::one();
    for (i, (&n, &k)) in chain.iter().zip(ks.as_slice()).enumerate() {
        poly = &poly * &units[n];
        if i + 1 < r {
            scalar /= Rational::from_integer(factorial(n - 1));
            scalar *= pow_signed(&int(n as i64), -k);
        } else {
            scalar *= pow_signed(&int(n as i64), 1 - k);
        }
    }
    poly.scale(&scalar)
}

/// `A(m) = sum over chains with n_r <= m of chain_weight * S_{1,lambda}(m, n_r)`
/// for `m = 0 ..= n_max`.
fn chain_sums(ks: &KIndexList, n_max: usize, stirling: &StirlingTable) -> Vec<MultiPoly> {
    let units: Vec<MultiPoly> = (0..=n_max)
        .map(|n| deg_falling_factorial(&Argument::one(), n))
        .collect();
    let all = chains(ks.depth(), n_max);
    let weights: Vec<(usize, MultiPoly)> = all
        .iter()
        .map(|c| (*c.last().unwrap(), chain_weight(ks, c, &units)))
        .collect();
    (0..=n_max)
        .map(|m| {
            weights
                .iter()
                .filter(|(top, _)| *top <= m)
                .map(|(top, w)| w * &stirling.entry(m, *top))
                .sum()
        })
        .collect()
}

/// Configures how checkers run.
#[derive(Clone, Copy, Debug, Default)]
pub struct Checker {
    pub exec: Execution,
    /// Test hook: perturbs every generating-function family at its last
    /// index so that the checks relying on it must fail.
    pub corrupt_family: bool,
}

impl Checker {
    pub fn new(exec: Execution) -> Self {
        Checker {
            exec,
            corrupt_family: false,
        }
    }

    pub fn corrupted(mut self) -> Self {
        self.corrupt_family = true;
        self
    }

    fn gf_family(&self, ks: &KIndexList, argument: &Argument, n_max: usize) -> PolyFamily {
        let mut fam = multi_poly_genocchi_deg(ks, argument, n_max);
        if self.corrupt_family {
            let last = fam.values.len() - 1;
            fam.values[last] += &MultiPoly::one();
        }
        fam
    }

    fn cells(&self, n_max: usize, f: impl Fn(usize) -> Cell + Sync + Send) -> Vec<Cell> {
        let ns: Vec<usize> = (0..=n_max).collect();
        self.exec.map(&ns, |&n| f(n))
    }

    /// Generating function against the explicit sum over `l` and chains,
    /// with Euler polynomials of order `r`.
    pub fn theorem1(&self, ks: &KIndexList, n_max: usize) -> VerifyReport {
        let r = ks.depth();
        let lhs = self.gf_family(ks, &Argument::X, n_max);
        let euler = euler_deg_order(r, &Argument::X, n_max).expect("r >= 1");
        let sums = chain_sums(ks, n_max, &stirling1_deg_recurrence(n_max));
        let cells = self.cells(n_max, |n| {
            let rhs: MultiPoly = if n < r {
                MultiPoly::zero()
            } else {
                (0..=n - r)
                    .map(|l| (euler.value(l) * &sums[n - l]).scale(&binomial(n, l)))
                    .sum()
            };
            let params = CellParams::for_ks(n, ks);
            let params = if n < r {
                params.with_label("vanishing")
            } else {
                params
            };
            Cell::compare(params, lhs.value(n), &rhs)
        });
        VerifyReport {
            identity: IdentityId::Thm1,
            cells,
        }
    }

    /// As [`theorem1`](Self::theorem1) with `E^{(r)}_l(x)` replaced by
    /// `G^{(r)}_{l+r}(x) / (r! C(l+r, l))`.
    pub fn corollary2(&self, ks: &KIndexList, n_max: usize) -> VerifyReport {
        let r = ks.depth();
        let lhs = self.gf_family(ks, &Argument::X, n_max);
        let genocchi = genocchi_deg_order(r, &Argument::X, n_max).expect("r >= 1");
        let sums = chain_sums(ks, n_max, &stirling1_deg_recurrence(n_max));
        let r_fact = Rational::from_integer(factorial(r));
        let cells = self.cells(n_max, |n| {
            let rhs: MultiPoly = if n < r {
                MultiPoly::zero()
            } else {
                (0..=n - r)
                    .map(|l| {
                        let factor = binomial(n, l) / (&r_fact * binomial(l + r, l));
                        (genocchi.value(l + r) * &sums[n - l]).scale(&factor)
                    })
                    .sum()
            };
            Cell::compare(CellParams::for_ks(n, ks), lhs.value(n), &rhs)
        });
        VerifyReport {
            identity: IdentityId::Cor2,
            cells,
        }
    }

    /// The family at argument `x = r` against the triple sum over `m`, `l`
    /// and chains, with Euler numbers of every order `0 ..= r`.
    pub fn theorem3(&self, ks: &KIndexList, n_max: usize) -> VerifyReport {
        let r = ks.depth();
        let lhs = self.gf_family(ks, &Argument::Value(int(r as i64)), n_max);
        // order 0 is the constant series 1: E^{(0)}_m = delta_{m,0}
        let mut euler_numbers: Vec<Vec<MultiPoly>> = Vec::with_capacity(r + 1);
        euler_numbers.push(TruncatedSeries::one(n_max).egf_coeffs());
        for l in 1..=r {
            euler_numbers.push(
                euler_deg_order(l, &Argument::zero(), n_max)
                    .expect("l >= 1")
                    .values,
            );
        }
        let sums = chain_sums(ks, n_max, &stirling1_deg_recurrence(n_max));
        let cells = self.cells(n_max, |n| {
            let mut rhs = MultiPoly::zero();
            if n >= r {
                for m in 0..=n - r {
                    for (l, euler) in euler_numbers.iter().enumerate() {
                        let sign = if l % 2 == 0 { int(1) } else { int(-1) };
                        let factor = binomial(r, l)
                            * binomial(n, m)
                            * sign
                            * pow_signed(&int(2), (r - l) as i64);
                        rhs += &(&euler[m] * &sums[n - m]).scale(&factor);
                    }
                }
            }
            Cell::compare(CellParams::for_ks(n, ks), lhs.value(n), &rhs)
        });
        VerifyReport {
            identity: IdentityId::Thm3,
            cells,
        }
    }

    /// Addition formula in the argument, symbolic in `lambda`, `x`, `y`.
    pub fn prop4(&self, ks: &KIndexList, n_max: usize) -> VerifyReport {
        let lhs = self.gf_family(ks, &Argument::XPlusY, n_max);
        let at_x = multi_poly_genocchi_deg(ks, &Argument::X, n_max);
        let falling_y = falling_in_y(n_max);
        let cells = self.cells(n_max, |n| {
            let rhs = convolve_with_y(&at_x, &falling_y, n);
            Cell::compare(CellParams::for_ks(n, ks), lhs.value(n), &rhs)
        });
        VerifyReport {
            identity: IdentityId::Prop4,
            cells,
        }
    }

    /// The `y = 0` specialization (reflexive) and the `x = 0` specialization
    /// (the falling-factorial expansion in `y`) of the addition formula.
    pub fn prop4_specializations(&self, ks: &KIndexList, n_max: usize) -> VerifyReport {
        let lhs = self.gf_family(ks, &Argument::XPlusY, n_max);
        let at_x = multi_poly_genocchi_deg(ks, &Argument::X, n_max);
        let numbers = multi_poly_genocchi_deg(ks, &Argument::zero(), n_max);
        let falling_y = falling_in_y(n_max);
        let zero = Rational::zero();
        let per_n = self.exec.map(&(0..=n_max).collect::<Vec<_>>(), |&n| {
            let value = lhs.value(n);
            [
                Cell::compare(
                    CellParams::for_ks(n, ks).with_label("y=0"),
                    &value.substitute(Symbol::Y, &zero),
                    at_x.value(n),
                ),
                Cell::compare(
                    CellParams::for_ks(n, ks).with_label("x=0"),
                    &value.substitute(Symbol::X, &zero),
                    &convolve_with_y(&numbers, &falling_y, n),
                ),
            ]
        });
        VerifyReport {
            identity: IdentityId::Prop4,
            cells: per_n.into_iter().flatten().collect(),
        }
    }

    /// Coefficients of `g_n(x)` in the basis `(x)_{m,lambda}` against
    /// `C(n, n-m) g_{n-m}`.
    pub fn eq15(&self, ks: &KIndexList, n_max: usize) -> VerifyReport {
        let fam = self.gf_family(ks, &Argument::X, n_max);
        let numbers = multi_poly_genocchi_deg(ks, &Argument::zero(), n_max);
        let expansion = expand_in_deg_falling_basis(&fam);
        let cells = self.cells(n_max, |n| {
            let expected: Vec<MultiPoly> = (0..=n)
                .map(|m| numbers.value(n - m).scale(&binomial(n, n - m)))
                .collect();
            let params = CellParams::for_ks(n, ks);
            match &expansion {
                Ok(e) => Cell::compare_all(params, &e[n], &expected),
                Err(err) => Cell {
                    params,
                    passed: false,
                    lhs: Some(err.to_string()),
                    rhs: Some(format!("{expected:?}")),
                },
            }
        });
        VerifyReport {
            identity: IdentityId::Eq15,
            cells,
        }
    }

    /// `g_n(x) = 0` for `n < r`.
    pub fn vanishing(&self, ks: &KIndexList, n_max: usize) -> VerifyReport {
        let r = ks.depth();
        let fam = self.gf_family(ks, &Argument::X, n_max.max(r));
        let cells = (0..r)
            .map(|n| Cell::compare(CellParams::for_ks(n, ks), fam.value(n), &MultiPoly::zero()))
            .collect();
        VerifyReport {
            identity: IdentityId::Vanishing,
            cells,
        }
    }

    /// `E^{(r)}_n(x) r! C(n+r, n) = G^{(r)}_{n+r}(x)` for `r = 1 ..= 3`.
    pub fn eq19(&self, n_max: usize) -> VerifyReport {
        let mut cells = Vec::new();
        for r in 1..=3usize {
            let euler = euler_deg_order(r, &Argument::X, n_max).expect("r >= 1");
            let genocchi = genocchi_deg_order(r, &Argument::X, n_max + r).expect("r >= 1");
            let r_fact = Rational::from_integer(factorial(r));
            cells.extend(self.cells(n_max, |n| {
                let lhs = euler.value(n).scale(&(&r_fact * binomial(n + r, n)));
                let params = CellParams {
                    n,
                    r: Some(r),
                    ks: None,
                    label: None,
                };
                Cell::compare(params, &lhs, genocchi.value(n + r))
            }));
        }
        VerifyReport {
            identity: IdentityId::Eq19,
            cells,
        }
    }

    /// Base-function identities, returned as one report per identity:
    /// polyexponentials at `k = 1`, the inverse pair `e_lambda` /
    /// `log_lambda`, `lambda -> 0` collapses, the depth-one reductions and the
    /// Euler-Genocchi relation.
    pub fn basics(&self, n_max: usize) -> Vec<VerifyReport> {
        vec![
            self.eq05(n_max),
            self.inverse_log_exp(n_max),
            self.lambda_zero_classical(n_max),
            self.reduction_r1(n_max),
            self.eq19(n_max),
        ]
    }

    fn eq05(&self, n_max: usize) -> VerifyReport {
        let zero = Rational::zero();
        let ei1 = polyexp_modified(1, n_max);
        let exp_minus_one = deg_exp(&Argument::one(), n_max)
            .substitute(Symbol::Lambda, &zero)
            .sub(&TruncatedSeries::one(n_max))
            .expect("same order");
        let dei1 = deg_polyexp(1, n_max);
        let deg_exp_minus_one = deg_exp(&Argument::one(), n_max)
            .sub(&TruncatedSeries::one(n_max))
            .expect("same order");
        let mut cells = Vec::new();
        for n in 0..=n_max {
            cells.push(Cell::compare(
                CellParams::labelled(n, "Ei_1 = e^t - 1"),
                ei1.coeff(n),
                exp_minus_one.coeff(n),
            ));
        }
        for n in 0..=n_max {
            cells.push(Cell::compare(
                CellParams::labelled(n, "Ei_1,lambda = e_lambda - 1"),
                dei1.coeff(n),
                deg_exp_minus_one.coeff(n),
            ));
        }
        VerifyReport {
            identity: IdentityId::Eq05,
            cells,
        }
    }

    fn inverse_log_exp(&self, n_max: usize) -> VerifyReport {
        let log = deg_log(n_max);
        let t = TruncatedSeries::t(n_max);
        let one_plus_t = t.add(&TruncatedSeries::one(n_max)).expect("same order");
        let e_of_log = deg_exp(&Argument::one(), n_max)
            .compose(&log)
            .expect("log has zero constant term");
        let ei_of_log = deg_polyexp(1, n_max)
            .compose(&log)
            .expect("log has zero constant term");
        let mut cells = Vec::new();
        for n in 0..=n_max {
            cells.push(Cell::compare(
                CellParams::labelled(n, "e_lambda(log_lambda(1+t)) = 1+t"),
                e_of_log.coeff(n),
                one_plus_t.coeff(n),
            ));
        }
        for n in 0..=n_max {
            cells.push(Cell::compare(
                CellParams::labelled(n, "Ei_1,lambda(log_lambda(1+t)) = t"),
                ei_of_log.coeff(n),
                t.coeff(n),
            ));
        }
        VerifyReport {
            identity: IdentityId::InverseLogExp,
            cells,
        }
    }

    fn lambda_zero_classical(&self, n_max: usize) -> VerifyReport {
        let zero = Rational::zero();
        let mut cells = Vec::new();
        let stirling = stirling1_deg_recurrence(n_max);
        for n in 0..=n_max {
            let classical = classical_falling_factorial(n);
            let lhs: Vec<MultiPoly> = (0..=n)
                .map(|k| stirling.entry(n, k).substitute(Symbol::Lambda, &zero))
                .collect();
            let rhs: Vec<MultiPoly> = (0..=n)
                .map(|k| classical.coeff_of(Symbol::X, k as u32))
                .collect();
            cells.push(Cell::compare_all(
                CellParams::labelled(n, "stirling1"),
                &lhs,
                &rhs,
            ));
        }
        let genocchi = genocchi_deg(&Argument::zero(), n_max);
        let oracle = classical_genocchi_numbers(n_max);
        for n in 0..=n_max {
            cells.push(Cell::compare(
                CellParams::labelled(n, "genocchi numbers"),
                &genocchi.value(n).substitute(Symbol::Lambda, &zero),
                &MultiPoly::constant(oracle[n].clone()),
            ));
        }
        let exp_x = deg_exp(&Argument::X, n_max)
            .substitute(Symbol::Lambda, &zero)
            .egf_coeffs();
        for (n, c) in exp_x.iter().enumerate() {
            cells.push(Cell::compare(
                CellParams::labelled(n, "e_0^x(t) = e^{xt}"),
                c,
                &MultiPoly::x().pow(n as u32),
            ));
        }
        for k in -2..=2 {
            let lhs = deg_polyexp(k, n_max).substitute(Symbol::Lambda, &zero);
            let rhs = polyexp_modified(k, n_max);
            cells.push(Cell::compare_all(
                CellParams::labelled(n_max, format!("Ei_{k},0 = Ei_{k}")),
                lhs.coeffs(),
                rhs.coeffs(),
            ));
        }
        VerifyReport {
            identity: IdentityId::LambdaZeroClassical,
            cells,
        }
    }

    fn reduction_r1(&self, n_max: usize) -> VerifyReport {
        let mut cells = Vec::new();
        let one = KIndexList::single(1);
        let multi = self.gf_family(&one, &Argument::X, n_max);
        let genocchi = genocchi_deg(&Argument::X, n_max);
        for n in 0..=n_max {
            cells.push(Cell::compare(
                CellParams::for_ks(n, &one).with_label("multi = genocchi"),
                multi.value(n),
                genocchi.value(n),
            ));
        }
        for k in -2..=2 {
            let ks = KIndexList::single(k);
            let multi = self.gf_family(&ks, &Argument::X, n_max);
            let poly = poly_genocchi_deg(k, &Argument::X, n_max);
            for n in 0..=n_max {
                cells.push(Cell::compare(
                    CellParams::for_ks(n, &ks).with_label("multi = poly-genocchi"),
                    multi.value(n),
                    poly.value(n),
                ));
            }
        }
        VerifyReport {
            identity: IdentityId::ReductionR1K1,
            cells,
        }
    }

    /// Every index-list identity for one list, in a fixed order.
    pub fn for_index_list(&self, ks: &KIndexList, n_max: usize) -> Vec<VerifyReport> {
        vec![
            self.theorem1(ks, n_max),
            self.vanishing(ks, n_max),
            self.corollary2(ks, n_max),
            self.theorem3(ks, n_max),
            self.prop4(ks, n_max),
            self.prop4_specializations(ks, n_max),
            self.eq15(ks, n_max),
        ]
    }

    /// Basics followed by every index-list identity over `lists`.
    pub fn all(&self, lists: &[KIndexList], n_max: usize) -> Vec<VerifyReport> {
        let mut out = self.basics(n_max);
        let per_list = self.exec.map(lists, |ks| self.for_index_list(ks, n_max));
        out.extend(per_list.into_iter().flatten());
        out
    }
}

fn falling_in_y(n_max: usize) -> Vec<MultiPoly> {
    (0..=n_max)
        .map(|m| deg_falling_factorial(&Argument::Y, m))
        .collect()
}

/// `sum_l C(n, l) fam_l (y)_{n-l,lambda}`.
fn convolve_with_y(fam: &PolyFamily, falling_y: &[MultiPoly], n: usize) -> MultiPoly {
    (0..=n)
        .map(|l| (fam.value(l) * &falling_y[n - l]).scale(&binomial(n, l)))
        .sum()
}

/// Classical Genocchi numbers from `2t / (e^t + 1)` by plain rational series
/// division.
pub fn classical_genocchi_numbers(n_max: usize) -> Vec<Rational> {
    let fact: Vec<Rational> = (0..=n_max + 1)
        .map(|n| Rational::from_integer(factorial(n)))
        .collect();
    // e^t + 1
    let denom: Vec<Rational> = (0..=n_max)
        .map(|n| if n == 0 { int(2) } else { fact[n].recip() })
        .collect();
    // 2t
    let numer: Vec<Rational> = (0..=n_max)
        .map(|n| if n == 1 { int(2) } else { int(0) })
        .collect();
    let mut quotient: Vec<Rational> = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let mut acc = numer[n].clone();
        for i in 1..=n {
            acc -= &denom[i] * &quotient[n - i];
        }
        quotient.push(acc / &denom[0]);
    }
    quotient.iter().zip(&fact).map(|(q, f)| q * f).collect()
}

pub fn check_theorem1(ks: &KIndexList, n_max: usize) -> VerifyReport {
    Checker::default().theorem1(ks, n_max)
}

pub fn check_corollary2(ks: &KIndexList, n_max: usize) -> VerifyReport {
    Checker::default().corollary2(ks, n_max)
}

pub fn check_theorem3(ks: &KIndexList, n_max: usize) -> VerifyReport {
    Checker::default().theorem3(ks, n_max)
}

pub fn check_prop4(ks: &KIndexList, n_max: usize) -> VerifyReport {
    Checker::default().prop4(ks, n_max)
}

pub fn check_eq15(ks: &KIndexList, n_max: usize) -> VerifyReport {
    Checker::default().eq15(ks, n_max)
}

pub fn check_basics(n_max: usize) -> Vec<VerifyReport> {
    Checker::default().basics(n_max)
}
