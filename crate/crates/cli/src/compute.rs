use serde::Serialize;

use degenpoly::degen_fn::{deg_multi_polyexp, stirling1_deg_recurrence};
use degenpoly::families::{
    euler_deg_order, genocchi_deg, genocchi_deg_order, multi_poly_genocchi_deg, poly_genocchi_deg,
};
use degenpoly::{Argument, KIndexList, MultiPoly, Rational, Symbol};

use crate::args::{ComputeArgs, Family, TableFormat};
use crate::{emit, parse_ks, parse_rational, usage, CliError};

#[derive(Debug, Serialize)]
pub struct Table {
    pub meta: Meta,
    pub records: Vec<OutputRecord>,
}

#[derive(Debug, Serialize)]
pub struct Meta {
    pub command: &'static str,
    pub family: &'static str,
    pub n_max: usize,
    pub r: Option<usize>,
    pub ks: Option<Vec<i64>>,
    pub lambda: String,
    pub arg: Option<String>,
    /// `egf` for polynomial families, `ordinary` for series coefficients.
    pub coefficients: &'static str,
    pub version: &'static str,
}

#[derive(Debug, Clone, Serialize)]
pub struct RecordParams {
    pub r: Option<usize>,
    pub ks: Option<Vec<i64>>,
    pub argument: Option<String>,
    pub lambda: String,
}

#[derive(Debug, Serialize)]
pub struct OutputRecord {
    pub family_id: &'static str,
    pub params: RecordParams,
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    pub value: String,
    pub value_terms: Vec<Term>,
}

#[derive(Debug, Serialize)]
pub struct Term {
    pub monomial: String,
    pub coeff: String,
}

struct Request {
    r: Option<usize>,
    ks: Option<KIndexList>,
    lambda: Option<Rational>,
    argument: Option<Argument>,
}

fn validate(a: &ComputeArgs) -> Result<Request, CliError> {
    let family = a.family.flag();
    let wants_r = matches!(a.family, Family::GenocchiR | Family::EulerR);
    let wants_ks = matches!(
        a.family,
        Family::PolyGenocchi | Family::MultiPolyGenocchi | Family::MultiPolyexp
    );
    let wants_arg = !matches!(a.family, Family::Stirling1 | Family::MultiPolyexp);

    let r = match (wants_r, a.r) {
        (true, None) => return usage(format!("--family {family} requires --r")),
        (true, Some(0)) => return usage("--r must be at least 1"),
        (false, Some(_)) => return usage(format!("--r does not apply to --family {family}")),
        (_, r) => r,
    };
    let ks = match (wants_ks, a.ks.as_deref()) {
        (true, None) => return usage(format!("--family {family} requires --ks")),
        (false, Some(_)) => return usage(format!("--ks does not apply to --family {family}")),
        (_, None) => None,
        (_, Some(text)) => {
            let ks = parse_ks(text)?;
            if a.family == Family::PolyGenocchi && ks.len() != 1 {
                return usage("--family poly-genocchi takes a single k in --ks");
            }
            Some(KIndexList::new(ks).expect("parse_ks rejects empty lists"))
        }
    };
    let lambda = match a.lambda.as_str() {
        "sym" => None,
        text => Some(parse_rational(text, "--lambda")?),
    };
    let argument = match (wants_arg, a.arg.as_deref()) {
        (false, Some(_)) => return usage(format!("--arg does not apply to --family {family}")),
        (false, None) => None,
        (true, None | Some("sym-x")) => Some(Argument::X),
        (true, Some(text)) => Some(Argument::Value(parse_rational(text, "--arg")?)),
    };
    Ok(Request {
        r,
        ks,
        lambda,
        argument,
    })
}

fn terms(value: &MultiPoly) -> Vec<Term> {
    value
        .sorted_terms()
        .into_iter()
        .map(|(m, c)| Term {
            monomial: m.to_string(),
            coeff: c.to_string(),
        })
        .collect()
}

pub fn build_table(a: &ComputeArgs) -> Result<Table, CliError> {
    let req = validate(a)?;
    let n_max = a.n_max;
    let lambda_text = a.lambda.clone();
    let arg_text = req
        .argument
        .as_ref()
        .map(|_| a.arg.clone().unwrap_or_else(|| "sym-x".into()));
    let params = RecordParams {
        r: req.r.or(req.ks.as_ref().map(KIndexList::depth)),
        ks: req.ks.as_ref().map(|k| k.as_slice().to_vec()),
        argument: arg_text.clone(),
        lambda: lambda_text.clone(),
    };
    let specialize = |p: MultiPoly| match &req.lambda {
        Some(v) => p.substitute(Symbol::Lambda, v),
        None => p,
    };
    let record = |family_id: &'static str, n: usize, k: Option<usize>, value: MultiPoly| {
        let value = specialize(value);
        OutputRecord {
            family_id,
            params: params.clone(),
            n,
            k,
            value: value.to_string(),
            value_terms: terms(&value),
        }
    };

    let arg = req.argument.clone().unwrap_or(Argument::X);
    let family_rows = |fam: degenpoly::PolyFamily| -> Vec<OutputRecord> {
        let id = fam.id.name();
        fam.values
            .into_iter()
            .enumerate()
            .map(|(n, v)| record(id, n, None, v))
            .collect()
    };
    let records = match a.family {
        Family::Genocchi => family_rows(genocchi_deg(&arg, n_max)),
        Family::GenocchiR => {
            family_rows(genocchi_deg_order(req.r.unwrap(), &arg, n_max).expect("r >= 1"))
        }
        Family::EulerR => {
            family_rows(euler_deg_order(req.r.unwrap(), &arg, n_max).expect("r >= 1"))
        }
        Family::PolyGenocchi => {
            let k = req.ks.as_ref().unwrap().as_slice()[0];
            family_rows(poly_genocchi_deg(k, &arg, n_max))
        }
        Family::MultiPolyGenocchi => family_rows(multi_poly_genocchi_deg(
            req.ks.as_ref().unwrap(),
            &arg,
            n_max,
        )),
        Family::Stirling1 => {
            let table = stirling1_deg_recurrence(n_max);
            let mut out = Vec::new();
            for (n, row) in table.rows().iter().enumerate() {
                for (k, v) in row.iter().enumerate() {
                    out.push(record("Stirling1Deg", n, Some(k), v.clone()));
                }
            }
            out
        }
        Family::MultiPolyexp => deg_multi_polyexp(req.ks.as_ref().unwrap(), n_max)
            .into_coeffs()
            .into_iter()
            .enumerate()
            .map(|(n, v)| record("MultiPolyExpDeg", n, None, v))
            .collect(),
    };

    Ok(Table {
        meta: Meta {
            command: "compute",
            family: a.family.flag(),
            n_max,
            r: req.r,
            ks: params.ks.clone(),
            lambda: lambda_text,
            arg: arg_text,
            coefficients: if a.family == Family::MultiPolyexp {
                "ordinary"
            } else {
                "egf"
            },
            version: env!("CARGO_PKG_VERSION"),
        },
        records,
    })
}

pub fn render_json(table: &Table) -> String {
    let mut text = serde_json::to_string_pretty(table).expect("table serializes");
    text.push('\n');
    text
}

/// Flat projection: one row per term, zero values as a single `1,0` row.
pub fn render_csv(table: &Table) -> Result<String, CliError> {
    let with_k = table.records.iter().any(|r| r.k.is_some());
    let mut writer = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    let io = |e: csv::Error| CliError::Io(e.into());
    if with_k {
        writer
            .write_record(["n", "k", "monomial", "coeff"])
            .map_err(io)?;
    } else {
        writer
            .write_record(["n", "monomial", "coeff"])
            .map_err(io)?;
    }
    for rec in &table.records {
        let n = rec.n.to_string();
        let k = rec.k.map(|k| k.to_string()).unwrap_or_default();
        let zero = [Term {
            monomial: "1".into(),
            coeff: "0".into(),
        }];
        let rows = if rec.value_terms.is_empty() {
            &zero[..]
        } else {
            &rec.value_terms[..]
        };
        for term in rows {
            if with_k {
                writer
                    .write_record([&n, &k, &term.monomial, &term.coeff])
                    .map_err(io)?;
            } else {
                writer
                    .write_record([&n, &term.monomial, &term.coeff])
                    .map_err(io)?;
            }
        }
    }
    let bytes = writer
        .into_inner()
        .map_err(|e| CliError::Io(e.into_error()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

pub fn run(a: &ComputeArgs) -> Result<(), CliError> {
    let table = build_table(a)?;
    let text = match a.format {
        TableFormat::Json => render_json(&table),
        TableFormat::Csv => render_csv(&table)?,
    };
    emit(a.out.as_deref(), text.as_bytes())
}
