//! Named polynomial families, each read off a generating function as egf
//! coefficients.

use crate::arith::{int, MultiPoly};
use crate::degen_fn::{
    deg_exp, deg_log, deg_multi_polyexp, deg_polyexp, falling_basis_coefficients, Argument,
    KIndexList,
};
use crate::error::{Error, Result};
use crate::series::TruncatedSeries;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyId {
    /// `G_{n,lambda}(x)`: `2t / (e_lambda(t) + 1) e_lambda^x(t)`.
    GenocchiDeg,
    /// `G^{(r)}_{n,lambda}(x)`: `(2t / (e_lambda(t) + 1))^r e_lambda^x(t)`.
    GenocchiDegOrderR,
    /// Carlitz `E^{(r)}_{n,lambda}(x)`: `(2 / (e_lambda(t) + 1))^r e_lambda^x(t)`.
    EulerDegOrderR,
    /// `g^{(k)}_{n,lambda}(x)`.
    PolyGenocchiDeg,
    /// `g^{(k_1, ..., k_r)}_{n,lambda}(x)`.
    MultiPolyGenocchiDeg,
}

impl FamilyId {
    pub fn name(self) -> &'static str {
        match self {
            FamilyId::GenocchiDeg => "GenocchiDeg",
            FamilyId::GenocchiDegOrderR => "GenocchiDegOrderR",
            FamilyId::EulerDegOrderR => "EulerDegOrderR",
            FamilyId::PolyGenocchiDeg => "PolyGenocchiDeg",
            FamilyId::MultiPolyGenocchiDeg => "MultiPolyGenocchiDeg",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyParams {
    pub r: Option<usize>,
    pub ks: Option<KIndexList>,
    pub argument: Argument,
}

/// Values `values[n]` for `n = 0 ..= n_max` of one family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyFamily {
    pub id: FamilyId,
    pub params: FamilyParams,
    pub values: Vec<MultiPoly>,
}

impl PolyFamily {
    pub fn n_max(&self) -> usize {
        self.values.len() - 1
    }

    pub fn value(&self, n: usize) -> &MultiPoly {
        &self.values[n]
    }

    /// `(n, value)` pairs.
    pub fn iter(&self) -> impl Iterator<Item = (usize, &MultiPoly)> {
        self.values.iter().enumerate()
    }
}

/// `1 / (e_lambda(t) + 1)`.
fn inverse_denominator(order: usize) -> TruncatedSeries {
    deg_exp(&Argument::one(), order)
        .add(&TruncatedSeries::one(order))
        .and_then(|d| d.invert())
        .expect("e_lambda(t) + 1 has constant term 2")
}

/// `2 / (e_lambda(t) + 1)` raised to `r`.
fn euler_kernel(r: usize, order: usize) -> TruncatedSeries {
    inverse_denominator(order).scale(&int(2)).pow(r as u32)
}

fn times(a: &TruncatedSeries, b: &TruncatedSeries) -> TruncatedSeries {
    a.mul(b).expect("operands share one order")
}

fn family(id: FamilyId, params: FamilyParams, gf: &TruncatedSeries) -> PolyFamily {
    PolyFamily {
        id,
        params,
        values: gf.egf_coeffs(),
    }
}

fn check_order(r: usize) -> Result<()> {
    if r == 0 {
        Err(Error::ZeroOrder)
    } else {
        Ok(())
    }
}

pub fn genocchi_deg(argument: &Argument, n_max: usize) -> PolyFamily {
    let two_t = TruncatedSeries::t(n_max).scale(&int(2));
    let gf = times(
        &times(&two_t, &inverse_denominator(n_max)),
        &deg_exp(argument, n_max),
    );
    let params = FamilyParams {
        r: None,
        ks: None,
        argument: argument.clone(),
    };
    family(FamilyId::GenocchiDeg, params, &gf)
}

pub fn genocchi_deg_order(r: usize, argument: &Argument, n_max: usize) -> Result<PolyFamily> {
    check_order(r)?;
    let two_t = TruncatedSeries::t(n_max).scale(&int(2));
    let kernel = times(&two_t, &inverse_denominator(n_max)).pow(r as u32);
    let gf = times(&kernel, &deg_exp(argument, n_max));
    let params = FamilyParams {
        r: Some(r),
        ks: None,
        argument: argument.clone(),
    };
    Ok(family(FamilyId::GenocchiDegOrderR, params, &gf))
}

pub fn euler_deg_order(r: usize, argument: &Argument, n_max: usize) -> Result<PolyFamily> {
    check_order(r)?;
    let gf = times(&euler_kernel(r, n_max), &deg_exp(argument, n_max));
    let params = FamilyParams {
        r: Some(r),
        ks: None,
        argument: argument.clone(),
    };
    Ok(family(FamilyId::EulerDegOrderR, params, &gf))
}

pub fn poly_genocchi_deg(k: i64, argument: &Argument, n_max: usize) -> PolyFamily {
    let inner = deg_polyexp(k, n_max)
        .compose(&deg_log(n_max))
        .expect("log_lambda(1 + t) has zero constant term");
    let gf = times(
        &times(&euler_kernel(1, n_max), &inner),
        &deg_exp(argument, n_max),
    );
    let params = FamilyParams {
        r: Some(1),
        ks: Some(KIndexList::single(k)),
        argument: argument.clone(),
    };
    family(FamilyId::PolyGenocchiDeg, params, &gf)
}

/// `2^r Ei_{k_1..k_r,lambda}(log_lambda(1 + t)) / (e_lambda(t) + 1)^r e_lambda^arg(t)`.
pub fn multi_poly_genocchi_deg(ks: &KIndexList, argument: &Argument, n_max: usize) -> PolyFamily {
    let r = ks.depth();
    let inner = deg_multi_polyexp(ks, n_max)
        .compose(&deg_log(n_max))
        .expect("log_lambda(1 + t) has zero constant term");
    let gf = times(
        &times(&euler_kernel(r, n_max), &inner),
        &deg_exp(argument, n_max),
    );
    let params = FamilyParams {
        r: Some(r),
        ks: Some(ks.clone()),
        argument: argument.clone(),
    };
    family(FamilyId::MultiPolyGenocchiDeg, params, &gf)
}

/// For each `n`, the coefficients of `values[n]` in the basis
/// `(x)_{m,lambda}`, indexed by `m = 0 ..= n`.
pub fn expand_in_deg_falling_basis(fam: &PolyFamily) -> Result<Vec<Vec<MultiPoly>>> {
    fam.values
        .iter()
        .enumerate()
        .map(|(n, v)| {
            let mut coeffs = falling_basis_coefficients(v)?;
            if coeffs.len() > n + 1 {
                return Err(Error::BasisRemainder(v.to_string()));
            }
            coeffs.resize(n + 1, MultiPoly::zero());
            Ok(coeffs)
        })
        .collect()
}
