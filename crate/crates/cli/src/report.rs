use std::fmt::Write as _;

use serde::Serialize;

use degenpoly::verify::{default_sweep, Cell, Checker, VerifyReport};
use degenpoly::{Execution, KIndexList};

use crate::args::{Identity, ReportFormat, VerifyArgs};
use crate::{emit, parse_ks, usage, CliError, EXIT_FAILED, EXIT_OK};

#[derive(Debug, Serialize)]
struct ReportFile {
    meta: ReportMeta,
    passed: bool,
    reports: Vec<ReportJson>,
}

#[derive(Debug, Serialize)]
struct ReportMeta {
    command: &'static str,
    identity: &'static str,
    n_max: usize,
    r: Option<String>,
    ks: String,
    version: &'static str,
}

#[derive(Debug, Serialize)]
struct ReportJson {
    identity_id: &'static str,
    passed: bool,
    cells: Vec<CellJson>,
}

#[derive(Debug, Serialize)]
struct CellParamsJson {
    n: usize,
    r: Option<usize>,
    ks: Option<Vec<i64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    label: Option<String>,
}

#[derive(Debug, Serialize)]
struct CellJson {
    params: CellParamsJson,
    passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    lhs_render: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    rhs_render: Option<String>,
}

impl From<&Cell> for CellJson {
    fn from(cell: &Cell) -> Self {
        CellJson {
            params: CellParamsJson {
                n: cell.params.n,
                r: cell.params.r,
                ks: cell.params.ks.as_ref().map(|k| k.as_slice().to_vec()),
                label: cell.params.label.clone(),
            },
            passed: cell.passed,
            lhs_render: cell.lhs.clone(),
            rhs_render: cell.rhs.clone(),
        }
    }
}

/// Inclusive depth range from `r`, `a..b` or `a..=b`.
fn parse_depths(text: &str) -> Result<(usize, usize), CliError> {
    let bad = || {
        usage(format!(
            "--r: expected an integer or a range a..b, got {text:?}"
        ))
    };
    let parse = |s: &str| s.trim().parse::<usize>().ok().filter(|&v| v >= 1);
    let bounds = match text.split_once("..") {
        None => parse(text).map(|v| (v, v)),
        Some((lo, hi)) => {
            let hi = hi.strip_prefix('=').unwrap_or(hi);
            parse(lo).zip(parse(hi))
        }
    };
    match bounds {
        Some((lo, hi)) if lo <= hi => Ok((lo, hi)),
        _ => bad(),
    }
}

fn index_lists(a: &VerifyArgs) -> Result<Vec<KIndexList>, CliError> {
    if a.identity == Identity::Basics {
        if a.r.is_some() || a.ks.is_some() {
            return usage("--identity basics takes neither --r nor --ks");
        }
        return Ok(Vec::new());
    }
    let depths = a.r.as_deref().map(parse_depths).transpose()?;
    match a.ks.as_deref() {
        None | Some("sweep") => {
            let (lo, hi) = depths.unwrap_or((1, 3));
            let lists: Vec<_> = default_sweep()
                .into_iter()
                .filter(|k| (lo..=hi).contains(&k.depth()))
                .collect();
            if lists.is_empty() {
                return usage(format!(
                    "the default sweep has no index lists of depth {lo}..{hi}"
                ));
            }
            Ok(lists)
        }
        Some(text) => {
            let ks = KIndexList::new(parse_ks(text)?).expect("parse_ks rejects empty lists");
            if let Some((lo, hi)) = depths {
                if !(lo..=hi).contains(&ks.depth()) {
                    return usage(format!(
                        "--r {} disagrees with --ks of depth {}",
                        a.r.as_deref().unwrap(),
                        ks.depth()
                    ));
                }
            }
            Ok(vec![ks])
        }
    }
}

fn run_checks(a: &VerifyArgs, lists: &[KIndexList]) -> Vec<VerifyReport> {
    let exec = if a.sequential {
        Execution::Sequential
    } else {
        Execution::Parallel
    };
    let checker = Checker {
        exec,
        corrupt_family: a.corrupt_family,
    };
    let n = a.n_max;
    let per_list = |f: &(dyn Fn(&KIndexList) -> Vec<VerifyReport> + Sync)| -> Vec<VerifyReport> {
        exec.map(lists, |ks| f(ks)).into_iter().flatten().collect()
    };
    match a.identity {
        Identity::Thm1 => per_list(&|ks| vec![checker.theorem1(ks, n)]),
        Identity::Cor2 => per_list(&|ks| vec![checker.corollary2(ks, n)]),
        Identity::Thm3 => per_list(&|ks| vec![checker.theorem3(ks, n)]),
        Identity::Prop4 => {
            per_list(&|ks| vec![checker.prop4(ks, n), checker.prop4_specializations(ks, n)])
        }
        Identity::Eq15 => per_list(&|ks| vec![checker.eq15(ks, n)]),
        Identity::Basics => checker.basics(n),
        Identity::All => checker.all(lists, n),
    }
}

fn render_text(reports: &[VerifyReport]) -> String {
    let mut out = String::new();
    for rep in reports {
        let status = if rep.passed() { "PASS" } else { "FAIL" };
        let scope = rep
            .cells
            .first()
            .and_then(|c| c.params.ks.as_ref())
            .map(|k| format!(" ks={k}"))
            .unwrap_or_default();
        let _ = writeln!(
            out,
            "{status} {}{scope} cells={}",
            rep.identity.name(),
            rep.cells.len()
        );
        for cell in rep.failures() {
            let label = cell
                .params
                .label
                .as_deref()
                .map(|l| format!(" [{l}]"))
                .unwrap_or_default();
            let _ = writeln!(out, "  n={}{label}", cell.params.n);
            let _ = writeln!(out, "    lhs: {}", cell.lhs.as_deref().unwrap_or(""));
            let _ = writeln!(out, "    rhs: {}", cell.rhs.as_deref().unwrap_or(""));
        }
    }
    let failed = reports.iter().filter(|r| !r.passed()).count();
    if failed == 0 {
        let _ = writeln!(out, "all {} reports passed", reports.len());
    } else {
        let _ = writeln!(out, "{failed} of {} reports failed", reports.len());
    }
    out
}

fn render_json(a: &VerifyArgs, reports: &[VerifyReport]) -> String {
    let file = ReportFile {
        meta: ReportMeta {
            command: "verify",
            identity: a.identity.flag(),
            n_max: a.n_max,
            r: a.r.clone(),
            ks: a.ks.clone().unwrap_or_else(|| "sweep".into()),
            version: env!("CARGO_PKG_VERSION"),
        },
        passed: reports.iter().all(VerifyReport::passed),
        reports: reports
            .iter()
            .map(|rep| ReportJson {
                identity_id: rep.identity.name(),
                passed: rep.passed(),
                cells: rep.cells.iter().map(CellJson::from).collect(),
            })
            .collect(),
    };
    let mut text = serde_json::to_string_pretty(&file).expect("report serializes");
    text.push('\n');
    text
}

pub fn run(a: &VerifyArgs) -> Result<i32, CliError> {
    let lists = index_lists(a)?;
    let reports = run_checks(a, &lists);
    let text = match a.format {
        ReportFormat::Json => render_json(a, &reports),
        ReportFormat::Text => render_text(&reports),
    };
    emit(a.out.as_deref(), text.as_bytes())?;
    Ok(if reports.iter().all(VerifyReport::passed) {
        EXIT_OK
    } else {
        EXIT_FAILED
    })
}
