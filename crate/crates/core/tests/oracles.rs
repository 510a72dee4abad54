//! Independent oracles for the series-based constructions.

use degenpoly::arith::{binomial, factorial, int, pow_signed};
use degenpoly::degen_fn::{
    classical_falling_factorial, deg_exp, deg_falling_factorial, deg_log, deg_multi_polyexp,
    deg_polyexp, stirling1_deg_change_of_basis, stirling1_deg_recurrence, stirling1_deg_series,
};
use degenpoly::families::{
    euler_deg_order, expand_in_deg_falling_basis, genocchi_deg, genocchi_deg_order,
    multi_poly_genocchi_deg, poly_genocchi_deg,
};
use degenpoly::{Argument, KIndexList, MultiPoly, Rational, Symbol, TruncatedSeries};

/// Sum over every chain `0 < n_1 < ... < n_r = m`, enumerated recursively.
fn brute_multi_polyexp_coeff(ks: &[i64], m: usize) -> MultiPoly {
    fn walk(
        ks: &[i64],
        level: usize,
        below: usize,
        m: usize,
        chain: &mut Vec<usize>,
        acc: &mut MultiPoly,
    ) {
        let r = ks.len();
        if level == r {
            if chain.last() == Some(&m) {
                let mut term = MultiPoly::one();
                let mut scalar = Rational::from_integer(1.into());
                for (&n, &k) in chain.iter().zip(ks) {
                    term = &term * &deg_falling_factorial(&Argument::one(), n);
                    scalar /= Rational::from_integer(factorial(n - 1));
                    scalar *= pow_signed(&int(n as i64), -k);
                }
                *acc += &term.scale(&scalar);
            }
            return;
        }
        for n in below + 1..=m {
            chain.push(n);
            walk(ks, level + 1, n, m, chain, acc);
            chain.pop();
        }
    }
    let mut acc = MultiPoly::zero();
    walk(ks, 0, 0, m, &mut Vec::new(), &mut acc);
    acc
}

fn index_lists(max_depth: usize, entries: &[i64]) -> Vec<Vec<i64>> {
    let mut out: Vec<Vec<i64>> = vec![vec![]];
    let mut all = Vec::new();
    for _ in 0..max_depth {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                entries.iter().map(move |&k| {
                    let mut next = prefix.clone();
                    next.push(k);
                    next
                })
            })
            .collect();
        all.extend(out.iter().cloned());
    }
    all
}

#[test]
fn multi_polyexp_dp_matches_chain_enumeration() {
    for ks in index_lists(3, &[-2, 0, 1, 2]) {
        let list = KIndexList::new(ks.clone()).unwrap();
        let dp = deg_multi_polyexp(&list, 10);
        for m in 0..=10 {
            assert_eq!(
                dp.coeff(m),
                &brute_multi_polyexp_coeff(&ks, m),
                "ks={ks:?} m={m}"
            );
        }
    }
}

/// Signed Stirling numbers of the first kind by the integer recurrence
/// `s(n+1, k) = s(n, k-1) - n s(n, k)`.
fn classical_signed_stirling(n_max: usize) -> Vec<Vec<i64>> {
    let mut rows = vec![vec![1i64]];
    for n in 0..n_max {
        let prev = &rows[n];
        let next = (0..=n + 1)
            .map(|k| {
                let a = if k >= 1 { prev[k - 1] } else { 0 };
                let b = prev.get(k).copied().unwrap_or(0);
                a - n as i64 * b
            })
            .collect();
        rows.push(next);
    }
    rows
}

#[test]
fn stirling_three_routes_and_classical_limit() {
    let rec = stirling1_deg_recurrence(12);
    let basis = stirling1_deg_change_of_basis(12).unwrap();
    let classical = classical_signed_stirling(12);
    for n in 0..=12 {
        for k in 0..=n {
            let r = rec.entry(n, k);
            assert_eq!(r, basis.entry(n, k), "basis route ({n},{k})");
            assert_eq!(
                r,
                stirling1_deg_series(n, k, 12).unwrap(),
                "series route ({n},{k})"
            );
            assert_eq!(
                r.substitute(Symbol::Lambda, &int(0)),
                MultiPoly::from(classical[n][k]),
                "lambda=0 ({n},{k})"
            );
        }
    }
    assert_eq!(classical[3], vec![0, 2, -3, 1]);
}

#[test]
fn stirling_change_of_basis_identity() {
    let table = stirling1_deg_recurrence(8);
    for n in 0..=8 {
        let expanded: MultiPoly = (0..=n)
            .map(|k| &table.entry(n, k) * &deg_falling_factorial(&Argument::X, k))
            .sum();
        assert_eq!(expanded, classical_falling_factorial(n));
    }
}

#[test]
fn degenerate_binomial_convolution() {
    let product = deg_exp(&Argument::Y, 6)
        .mul(&deg_exp(&Argument::X, 6))
        .unwrap();
    for n in 0..=6 {
        assert_eq!(
            product.egf_coeff(n).unwrap(),
            deg_falling_factorial(&Argument::XPlusY, n)
        );
    }
}

#[test]
fn inverse_pair_at_orders_8_and_16() {
    for order in [8, 16] {
        let log = deg_log(order);
        let one_plus_t = TruncatedSeries::one(order)
            .add(&TruncatedSeries::t(order))
            .unwrap();
        assert_eq!(
            deg_exp(&Argument::one(), order).compose(&log).unwrap(),
            one_plus_t
        );
        assert_eq!(
            deg_polyexp(1, order).compose(&log).unwrap(),
            TruncatedSeries::t(order)
        );
    }
}

#[test]
fn euler_genocchi_relation_to_n_12() {
    for r in 1..=3usize {
        let euler = euler_deg_order(r, &Argument::X, 12).unwrap();
        let genocchi = genocchi_deg_order(r, &Argument::X, 12 + r).unwrap();
        let r_fact = Rational::from_integer(factorial(r));
        for n in 0..=12 {
            let scaled = euler.value(n).scale(&(&r_fact * binomial(n + r, n)));
            assert_eq!(&scaled, genocchi.value(n + r), "r={r} n={n}");
        }
    }
}

#[test]
fn falling_basis_expansion_reproduces_families() {
    let lists = [
        vec![-2],
        vec![2],
        vec![-1, 1],
        vec![0, 2],
        vec![2, -2, 1],
        vec![1, 0, -1],
    ];
    for ks in lists {
        let list = KIndexList::new(ks.clone()).unwrap();
        let poly = multi_poly_genocchi_deg(&list, &Argument::X, 10);
        let numbers = multi_poly_genocchi_deg(&list, &Argument::zero(), 10);
        let expansion = expand_in_deg_falling_basis(&poly).unwrap();
        for n in 0..=10 {
            let rebuilt: MultiPoly = (0..=n)
                .map(|l| {
                    (numbers.value(l) * &deg_falling_factorial(&Argument::X, n - l))
                        .scale(&binomial(n, l))
                })
                .sum();
            assert_eq!(&rebuilt, poly.value(n), "ks={ks:?} n={n}");
            for (m, c) in expansion[n].iter().enumerate() {
                assert_eq!(c, &numbers.value(n - m).scale(&binomial(n, n - m)));
            }
        }
    }
}

#[test]
fn degree_bounds() {
    let n_max = 10;
    let single = [
        genocchi_deg(&Argument::X, n_max),
        genocchi_deg_order(3, &Argument::X, n_max).unwrap(),
        euler_deg_order(2, &Argument::X, n_max).unwrap(),
        poly_genocchi_deg(-2, &Argument::X, n_max),
        poly_genocchi_deg(2, &Argument::X, n_max),
    ];
    for fam in &single {
        for (n, v) in fam.iter() {
            assert!(v.degree_in(Symbol::X) as usize <= n, "{:?} n={n}", fam.id);
            assert!(
                v.degree_in(Symbol::Lambda) as usize <= n,
                "{:?} n={n}",
                fam.id
            );
        }
    }
    for ks in [vec![0, 1, 1], vec![-2, -2], vec![2, 2, 2], vec![1, -1]] {
        let r = ks.len();
        let fam =
            multi_poly_genocchi_deg(&KIndexList::new(ks.clone()).unwrap(), &Argument::X, n_max);
        for (n, v) in fam.iter() {
            let lambda_bound = n.max((r * n).saturating_sub(r * (r + 1) / 2));
            assert!(v.degree_in(Symbol::X) as usize <= n, "ks={ks:?} n={n}");
            assert!(
                v.degree_in(Symbol::Lambda) as usize <= lambda_bound,
                "ks={ks:?} n={n}"
            );
        }
    }
    // the single-index bound is genuinely exceeded at depth >= 2
    let fam = multi_poly_genocchi_deg(&KIndexList::new(vec![0, 1, 1]).unwrap(), &Argument::X, 4);
    assert_eq!(fam.value(4).degree_in(Symbol::Lambda), 6);
}

#[test]
fn classical_genocchi_numbers_from_degenerate_family() {
    let fam = genocchi_deg(&Argument::zero(), 8);
    let at_zero: Vec<MultiPoly> = fam
        .values
        .iter()
        .map(|v| v.substitute(Symbol::Lambda, &int(0)))
        .collect();
    assert_eq!(at_zero, [0, 1, -1, 0, 1, 0, -3, 0, 17].map(MultiPoly::from));
}
