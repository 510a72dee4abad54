//! Acceptance suite: one line per criterion, then a single assertion.
//!
//! Run with `cargo test -p degenpoly-cli --test acceptance -- --nocapture`.

use std::io::Write;
use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

use degenpoly::arith::{factorial, int, pow_signed};
use degenpoly::degen_fn::{
    deg_exp, deg_falling_factorial, deg_log, deg_multi_polyexp, deg_polyexp,
    stirling1_deg_change_of_basis, stirling1_deg_recurrence, stirling1_deg_series,
};
use degenpoly::families::{genocchi_deg, multi_poly_genocchi_deg, poly_genocchi_deg};
use degenpoly::verify::{default_sweep, Checker};
use degenpoly::{
    Argument, Execution, KIndexList, MultiPoly, Rational, Symbol, TruncatedSeries, VerifyReport,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, &'static str, fn() -> Outcome);

const N_MAX: usize = 10;

fn checker() -> Checker {
    Checker::new(Execution::default())
}

fn sweep() -> Vec<KIndexList> {
    default_sweep()
}

/// Runs `check` over the sweep and summarises cells.
fn sweep_reports(check: impl Fn(&Checker, &KIndexList) -> Vec<VerifyReport>) -> Outcome {
    let c = checker();
    let lists = sweep();
    let mut cells = 0;
    for ks in &lists {
        for rep in check(&c, ks) {
            cells += rep.cells.len();
            if let Some(bad) = rep.failures().next() {
                return Err(format!(
                    "{} ks={ks} n={}: lhs {} rhs {}",
                    rep.identity.name(),
                    bad.params.n,
                    bad.lhs.as_deref().unwrap_or(""),
                    bad.rhs.as_deref().unwrap_or("")
                ));
            }
        }
    }
    let depths: std::collections::BTreeSet<_> = lists.iter().map(KIndexList::depth).collect();
    Ok(format!(
        "{} lists, depths {depths:?}, {cells} cells",
        lists.len()
    ))
}

fn sweep_shape() -> Result<(), String> {
    let lists = sweep();
    let in_range = lists
        .iter()
        .all(|k| k.as_slice().iter().all(|v| (-2..=2).contains(v)));
    let depths_ok = (1..=3).all(|r| lists.iter().filter(|k| k.depth() == r).count() >= 1);
    if lists.len() >= 10 && in_range && depths_ok {
        Ok(())
    } else {
        Err(format!(
            "sweep too small or out of range: {} lists",
            lists.len()
        ))
    }
}

fn ac1_multiplication_formula() -> Outcome {
    sweep_shape()?;
    let start = Instant::now();
    let summary = sweep_reports(|c, ks| vec![c.theorem1(ks, N_MAX)])?;
    let elapsed = start.elapsed();
    if elapsed > Duration::from_secs(60) {
        return Err(format!("took {elapsed:?}"));
    }
    Ok(format!("{summary}, {:.1}s", elapsed.as_secs_f64()))
}

fn ac2_low_order_vanishing() -> Outcome {
    let c = checker();
    let mut cells = 0;
    for ks in sweep() {
        let rep = c.vanishing(&ks, N_MAX);
        if rep.cells.len() != ks.depth() || !rep.passed() {
            return Err(format!("ks={ks}"));
        }
        // the family itself, not only the checker's view of it
        let fam = multi_poly_genocchi_deg(&ks, &Argument::X, N_MAX);
        if (0..ks.depth()).any(|n| !fam.value(n).is_zero()) || fam.value(ks.depth()).is_zero() {
            return Err(format!("ks={ks}: leading index is not r"));
        }
        cells += rep.cells.len();
    }
    Ok(format!("{cells} cells"))
}

fn ac3_shifted_expansion() -> Outcome {
    sweep_reports(|c, ks| vec![c.corollary2(ks, N_MAX)])
}

fn ac4_falling_expansion() -> Outcome {
    sweep_reports(|c, ks| vec![c.theorem3(ks, N_MAX)])
}

fn ac5_addition_formula() -> Outcome {
    let lists: Vec<KIndexList> = sweep().into_iter().filter(|k| k.depth() <= 3).collect();
    let c = checker();
    let mut cells = 0;
    for ks in &lists {
        for rep in [c.prop4(ks, 8), c.prop4_specializations(ks, 8)] {
            if !rep.passed() {
                return Err(format!("{} ks={ks}", rep.identity.name()));
            }
            cells += rep.cells.len();
        }
    }
    Ok(format!(
        "{} lists, n<=8, {cells} cells incl. y=0 and x=0",
        lists.len()
    ))
}

/// Signed Stirling numbers of the first kind from `s(n+1,k) = s(n,k-1) - n s(n,k)`.
fn signed_stirling(n_max: usize) -> Vec<Vec<i64>> {
    let mut rows = vec![vec![1i64]];
    for n in 0..n_max {
        let prev = &rows[n];
        let next = (0..=n + 1)
            .map(|k| {
                let a = if k >= 1 { prev[k - 1] } else { 0 };
                a - n as i64 * prev.get(k).copied().unwrap_or(0)
            })
            .collect();
        rows.push(next);
    }
    rows
}

fn ac6_stirling_routes() -> Outcome {
    let n_max = 12;
    let rec = stirling1_deg_recurrence(n_max);
    let basis = stirling1_deg_change_of_basis(n_max).map_err(|e| e.to_string())?;
    let classical = signed_stirling(n_max);
    for n in 0..=n_max {
        for k in 0..=n {
            let r = rec.entry(n, k);
            let s = stirling1_deg_series(n, k, n_max).map_err(|e| e.to_string())?;
            if r != basis.entry(n, k) || r != s {
                return Err(format!("routes disagree at ({n},{k})"));
            }
            if r.substitute(Symbol::Lambda, &int(0)) != MultiPoly::from(classical[n][k]) {
                return Err(format!("lambda=0 limit wrong at ({n},{k})"));
            }
        }
    }
    if rec.entry(3, 2).to_string() != "3*lambda - 3" {
        return Err(format!("S(3,2) = {}", rec.entry(3, 2)));
    }
    Ok(format!(
        "three routes agree for n<=12, {} entries",
        (n_max + 1) * (n_max + 2) / 2
    ))
}

/// Genocchi numbers from `2t / (e^t + 1)` by long division of exponential series.
fn genocchi_numbers(n_max: usize) -> Vec<Rational> {
    let exp: Vec<Rational> = (0..=n_max)
        .map(|n| Rational::from_integer(factorial(n)).recip())
        .collect();
    let mut denom = exp.clone();
    denom[0] += int(1);
    let mut q: Vec<Rational> = Vec::new();
    for n in 0..=n_max {
        let mut acc = if n == 1 { int(2) } else { int(0) };
        for i in 1..=n {
            acc -= &denom[i] * &q[n - i];
        }
        q.push(acc / &denom[0]);
    }
    q.iter()
        .enumerate()
        .map(|(n, c)| c * Rational::from_integer(factorial(n)))
        .collect()
}

fn ac7_reduction_ladder() -> Outcome {
    let n_max = N_MAX;
    for k in -2..=2 {
        let multi = multi_poly_genocchi_deg(&KIndexList::single(k), &Argument::X, n_max);
        let poly = poly_genocchi_deg(k, &Argument::X, n_max);
        if multi.values != poly.values {
            return Err(format!("depth-one multi differs from poly at k={k}"));
        }
    }
    let poly1 = poly_genocchi_deg(1, &Argument::X, n_max);
    if poly1.values != genocchi_deg(&Argument::X, n_max).values {
        return Err("k=1 differs from the degenerate Genocchi family".into());
    }
    let oracle = genocchi_numbers(n_max);
    let frozen: Vec<Rational> = [0, 1, -1, 0, 1, 0, -3, 0, 17]
        .iter()
        .map(|&v| int(v))
        .collect();
    if oracle[..=8] != frozen[..] {
        return Err(format!("oracle drifted: {oracle:?}"));
    }
    let at_zero = genocchi_deg(&Argument::zero(), n_max);
    for (n, expected) in oracle.iter().enumerate() {
        let got = at_zero.value(n).substitute(Symbol::Lambda, &int(0));
        if got != MultiPoly::constant(expected.clone()) {
            return Err(format!("G_{n} at lambda=0: {got} vs {expected}"));
        }
    }
    Ok(format!("k in -2..=2 and classical numbers to n={n_max}"))
}

fn ac8_inverse_pair() -> Outcome {
    let orders = [8, 16, 32];
    for order in orders {
        let log = deg_log(order);
        let one_plus_t = TruncatedSeries::one(order)
            .add(&TruncatedSeries::t(order))
            .map_err(|e| e.to_string())?;
        let exp_log = deg_exp(&Argument::one(), order)
            .compose(&log)
            .map_err(|e| e.to_string())?;
        if exp_log != one_plus_t {
            return Err(format!("e_lambda(log_lambda(1+t)) != 1+t at order {order}"));
        }
        let ei_log = deg_polyexp(1, order)
            .compose(&log)
            .map_err(|e| e.to_string())?;
        if ei_log != TruncatedSeries::t(order) {
            return Err(format!("Ei_1(log_lambda(1+t)) != t at order {order}"));
        }
    }
    Ok(format!("orders {orders:?}"))
}

fn chain_sum(ks: &[i64], m: usize) -> MultiPoly {
    fn walk(ks: &[i64], below: usize, m: usize, chain: &mut Vec<usize>, acc: &mut MultiPoly) {
        if chain.len() == ks.len() {
            if chain.last() == Some(&m) {
                let mut term = MultiPoly::one();
                let mut scalar = int(1);
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
            walk(ks, n, m, chain, acc);
            chain.pop();
        }
    }
    let mut acc = MultiPoly::zero();
    walk(ks, 0, m, &mut Vec::new(), &mut acc);
    acc
}

fn ac9_polyexp_dp() -> Outcome {
    let entries = [-2, -1, 0, 1, 2];
    let mut lists: Vec<Vec<i64>> = entries.iter().map(|&k| vec![k]).collect();
    for a in entries {
        for b in entries {
            lists.push(vec![a, b]);
        }
    }
    for ks in default_sweep().into_iter().filter(|k| k.depth() == 3) {
        lists.push(ks.as_slice().to_vec());
    }
    let order = 10;
    for ks in &lists {
        let dp = deg_multi_polyexp(&KIndexList::new(ks.clone()).unwrap(), order);
        for m in 0..=order {
            if dp.coeff(m) != &chain_sum(ks, m) {
                return Err(format!("ks={ks:?} m={m}"));
            }
        }
    }
    Ok(format!("{} lists, t^0..t^{order}", lists.len()))
}

fn cli(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_degenpoly"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn ac10_cli_contract() -> Outcome {
    let all = cli(&["verify", "--identity", "all", "--n-max", "10"]);
    if all.status.code() != Some(0) {
        return Err(format!("verify all exited {:?}", all.status.code()));
    }
    let corrupt = cli(&[
        "verify",
        "--identity",
        "thm1",
        "--ks",
        "1,2",
        "--n-max",
        "6",
        "--corrupt-family",
    ]);
    if corrupt.status.code() != Some(1) {
        return Err(format!("corrupted run exited {:?}", corrupt.status.code()));
    }
    for bad in [
        &["verify", "--identity", "thm1", "--ks", "1,,2"][..],
        &["compute", "--family", "genocchi-r", "--n-max", "4"][..],
        &["compute", "--n-max", "4"][..],
    ] {
        if cli(bad).status.code() != Some(2) {
            return Err(format!("{bad:?} did not exit 2"));
        }
    }
    let data = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data");
    let goldens: [(&[&str], &str); 3] = [
        (
            &[
                "compute", "--family", "genocchi", "--n-max", "8", "--lambda", "0", "--arg", "0",
                "--format", "csv",
            ],
            "genocchi_classical.csv",
        ),
        (
            &[
                "compute",
                "--family",
                "stirling1",
                "--n-max",
                "3",
                "--lambda",
                "sym",
            ],
            "stirling1_sym.json",
        ),
        (
            &[
                "compute",
                "--family",
                "multi-poly-genocchi",
                "--ks",
                "1",
                "--n-max",
                "6",
                "--lambda",
                "sym",
                "--arg",
                "sym-x",
                "--format",
                "csv",
            ],
            "genocchi_sym.csv",
        ),
    ];
    for (args, file) in goldens {
        let expected = std::fs::read(data.join(file)).map_err(|e| e.to_string())?;
        if cli(args).stdout != expected {
            return Err(format!("{file} not reproduced"));
        }
    }
    Ok("exit codes 0/1/2 and 3 golden files".into())
}

/// Written to the real stdout so the lines survive the test harness capture.
fn line(text: String) {
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "{text}");
    let _ = out.flush();
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 10] = [
        (
            "AC1",
            "multiplication formula over the sweep, n<=10",
            ac1_multiplication_formula,
        ),
        ("AC2", "low-order vanishing", ac2_low_order_vanishing),
        ("AC3", "shifted-argument expansion", ac3_shifted_expansion),
        (
            "AC4",
            "degenerate falling-factorial expansion",
            ac4_falling_expansion,
        ),
        (
            "AC5",
            "addition formula and specializations",
            ac5_addition_formula,
        ),
        (
            "AC6",
            "degenerate Stirling numbers, three routes",
            ac6_stirling_routes,
        ),
        (
            "AC7",
            "reduction ladder and classical limit",
            ac7_reduction_ladder,
        ),
        (
            "AC8",
            "e_lambda / log_lambda inverse pair",
            ac8_inverse_pair,
        ),
        (
            "AC9",
            "multiple polyexponential DP vs chain sums",
            ac9_polyexp_dp,
        ),
        ("AC10", "CLI exit codes and golden files", ac10_cli_contract),
    ];
    let mut failed = Vec::new();
    for (id, name, run) in criteria {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => line(format!("[PASS] {id} {name}: {detail} ({secs:.1}s)")),
            Err(detail) => {
                line(format!("[FAIL] {id} {name}: {detail} ({secs:.1}s)"));
                failed.push(id);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
