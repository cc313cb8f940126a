//! Command implementations. Each returns an [`Outcome`]: a JSON value to
//! print and whether every checked identity held.

use clap::ValueEnum;
use novikov_core::algebra::{associated_novikov, check_apn, check_novikov};
use novikov_core::bialgebra::{
    check_apn_bialgebra, check_apn_coalgebra, check_factorizable, check_invariant, check_quasi_triangular,
    coboundary_delta, double_bialgebra, factorizable_to_rb, factorize, rb_to_factorizable, ybe_residual, ApnBialgebra,
};
use novikov_core::forms::{
    apn_from_quasi_frobenius, build_double_construction, check_quadratic_apn, check_quadratic_rb,
    check_quasi_frobenius, check_symmetric_rb_qf,
};
use novikov_core::matched_pair::{build_apn_sum, build_novikov_sum, check_apn_matched_pair, check_novikov_matched_pair};
use novikov_core::operators::{
    check_anti_o_operator, check_o_operator_apn, check_o_operator_novikov, check_relative_rb,
    check_relative_rb_novikov, check_rota_baxter_apn, check_rota_baxter_novikov, check_strong_anti_o_operator,
    compatible_apn_from_invertible_anti_o, AApnAlgebra, ANovikovAlgebra,
};
use novikov_core::representation::{
    check_apn_rep, check_novikov_rep, dual_apn_rep, dual_novikov_rep, semidirect_apn, semidirect_novikov,
};
use novikov_core::search::{enumerate_apn, field_grid, search_o_operators, search_ybe_solutions, SearchConfig};
use novikov_core::tensor::tau2;
use novikov_core::{FieldSpec, IdentityReport, Scalar};
use serde::Serialize;
use serde_json::{json, Value};

use crate::doc::{apn_rep_doc, cobracket_doc, matrix_doc, novikov_rep_doc, tensor_doc, Coef, Document, Reader, TensorDoc};
use crate::error::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum VerifyKind {
    Novikov,
    Apn,
    Rep,
    Coalgebra,
    Bialgebra,
    MatchedPair,
    QuasiFrobenius,
    Quadratic,
    Rb,
    RelativeRb,
    AntiO,
    OOperator,
    QuasiTriangular,
    Factorizable,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum BuildKind {
    Associated,
    Semidirect,
    DualRep,
    MatchedSum,
    Double,
    Coboundary,
    CompatibleApn,
    DoubleBialgebra,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CorrespondKind {
    RbToBialgebra,
    BialgebraToRb,
}

/// What a command prints, and whether it counts as passing.
pub struct Outcome {
    pub value: Value,
    pub passed: bool,
}

impl Outcome {
    fn ok(value: Value) -> Self {
        Outcome { value, passed: true }
    }

    fn document(doc: &Document) -> Self {
        Outcome::ok(serde_json::to_value(doc).expect("documents serialize"))
    }
}

#[derive(Serialize)]
struct WitnessOut {
    id: String,
    indices: Vec<usize>,
    residual: Vec<String>,
}

#[derive(Serialize)]
struct ReportOut<'a> {
    command: &'a str,
    passed: bool,
    failed: Vec<&'a str>,
    witnesses: Vec<WitnessOut>,
}

/// The stable JSON rendering of an identity report.
pub fn report_value(command: &str, r: &IdentityReport) -> Value {
    let out = ReportOut {
        command,
        passed: r.passed,
        failed: r.failed_ids(),
        witnesses: r
            .witnesses
            .iter()
            .map(|w| WitnessOut { id: w.id.clone(), indices: w.indices.clone(), residual: w.residual.iter().map(Scalar::to_string).collect() })
            .collect(),
    };
    serde_json::to_value(out).expect("reports serialize")
}

fn report(command: &str, r: IdentityReport) -> Outcome {
    Outcome { passed: r.passed, value: report_value(command, &r) }
}

pub fn verify(kind: VerifyKind, rd: &Reader, weight: Option<&str>, strong: bool) -> Result<Outcome, CliError> {
    let name = format!("verify {}", kind.to_possible_value().expect("named").get_name());
    let r = match kind {
        VerifyKind::Novikov => check_novikov(&rd.novikov()?),
        VerifyKind::Apn => check_apn(&rd.apn()?),
        VerifyKind::Rep if rd.is_novikov() => {
            let n = rd.novikov()?;
            check_novikov_rep(&n, &rd.novikov_rep(&n)?)?
        }
        VerifyKind::Rep => {
            let b = rd.apn()?;
            check_apn_rep(&b, &rd.apn_rep(&b)?)?
        }
        VerifyKind::Coalgebra => check_apn_coalgebra(&rd.cobracket(rd.dim()?)?)?,
        VerifyKind::Bialgebra => {
            let b = rd.apn()?;
            let d = match rd.doc.delta {
                Some(_) => rd.cobracket(b.dim())?,
                None => {
                    let s = rd.tensor(b.dim())?;
                    let sp = rd.tensor_prec(b.dim())?.unwrap_or_else(|| s.clone());
                    coboundary_delta(&b, &s, &sp)?
                }
            };
            check_apn_bialgebra(&b, &d)?
        }
        VerifyKind::MatchedPair if rd.pair_is_novikov()? => check_novikov_matched_pair(&rd.novikov_pair()?)?,
        VerifyKind::MatchedPair => check_apn_matched_pair(&rd.apn_pair()?)?,
        VerifyKind::QuasiFrobenius => check_quasi_frobenius(&rd.novikov()?, &rd.form()?)?,
        VerifyKind::Quadratic => check_quadratic_apn(&rd.apn()?, &rd.form()?)?,
        VerifyKind::Rb => {
            let p = rd.operator()?;
            let lambda = rd.weight(weight)?;
            match (rd.is_novikov(), rd.doc.form.is_some()) {
                (true, true) => check_symmetric_rb_qf(&rd.novikov()?, &p, &rd.form()?, &lambda)?,
                (true, false) => check_rota_baxter_novikov(&rd.novikov()?, &p, &lambda)?,
                (false, true) => check_quadratic_rb(&rd.apn()?, &p, &rd.form()?, &lambda)?,
                (false, false) => check_rota_baxter_apn(&rd.apn()?, &p, &lambda)?,
            }
        }
        VerifyKind::RelativeRb => {
            let t = rd.operator()?;
            let lambda = rd.weight(weight)?;
            if rd.is_novikov() {
                let n = rd.novikov()?;
                let rho = rd.novikov_rep(&n)?;
                let s = ANovikovAlgebra { v: rd.v_novikov(rho.dim)?, rho };
                check_relative_rb_novikov(&n, &s, &t, &lambda)?
            } else {
                let b = rd.apn()?;
                let rho = rd.apn_rep(&b)?;
                let s = AApnAlgebra { v: rd.v_apn(rho.dim)?, rho };
                check_relative_rb(&b, &s, &t, &lambda)?
            }
        }
        VerifyKind::AntiO => {
            let n = rd.novikov()?;
            let rho = rd.novikov_rep(&n)?;
            let t = rd.operator()?;
            let base = check_anti_o_operator(&n, &rho, &t)?;
            if strong {
                base.merge(check_strong_anti_o_operator(&n, &rho, &t)?)
            } else {
                base
            }
        }
        VerifyKind::OOperator if rd.is_novikov() => {
            let n = rd.novikov()?;
            check_o_operator_novikov(&n, &rd.novikov_rep(&n)?, &rd.operator()?)?
        }
        VerifyKind::OOperator => {
            let b = rd.apn()?;
            check_o_operator_apn(&b, &rd.apn_rep(&b)?, &rd.operator()?)?
        }
        VerifyKind::QuasiTriangular => {
            let b = rd.apn()?;
            check_quasi_triangular(&b, &rd.tensor(b.dim())?)?
        }
        VerifyKind::Factorizable => {
            let b = rd.apn()?;
            check_factorizable(&b, &rd.tensor(b.dim())?)?
        }
    };
    Ok(report(&name, r))
}

pub fn build(kind: BuildKind, rd: &Reader) -> Result<Outcome, CliError> {
    let out = Document::new(rd.field);
    let doc = match kind {
        BuildKind::Associated => out.with_novikov(&associated_novikov(&rd.apn()?)),
        BuildKind::Semidirect if rd.is_novikov() => {
            let n = rd.novikov()?;
            out.with_novikov(&semidirect_novikov(&n, &rd.novikov_rep(&n)?)?)
        }
        BuildKind::Semidirect => {
            let b = rd.apn()?;
            out.with_apn(&semidirect_apn(&b, &rd.apn_rep(&b)?)?)
        }
        BuildKind::DualRep if rd.is_novikov() => {
            let n = rd.novikov()?;
            let mut d = out.with_novikov(&n);
            d.rep = Some(novikov_rep_doc(&dual_novikov_rep(&rd.novikov_rep(&n)?)));
            d
        }
        BuildKind::DualRep => {
            let b = rd.apn()?;
            let mut d = out.with_apn(&b);
            d.rep = Some(apn_rep_doc(&dual_apn_rep(&b, &rd.apn_rep(&b)?)?));
            d
        }
        BuildKind::MatchedSum if rd.pair_is_novikov()? => out.with_novikov(&build_novikov_sum(&rd.novikov_pair()?)?),
        BuildKind::MatchedSum => out.with_apn(&build_apn_sum(&rd.apn_pair()?)?),
        BuildKind::Double => {
            let dc = build_double_construction(&rd.apn()?, &rd.dual_apn()?)?;
            let mut d = out.with_novikov(&dc.algebra);
            d.form = Some(matrix_doc(&dc.omega));
            d
        }
        BuildKind::Coboundary => {
            let b = rd.apn()?;
            let s = rd.tensor(b.dim())?;
            let sp = rd.tensor_prec(b.dim())?;
            let delta = coboundary_delta(&b, &s, sp.as_ref().unwrap_or(&s))?;
            let mut d = out.with_apn(&b);
            d.s = Some(tensor_doc(&s));
            d.s_prec = sp.as_ref().map(tensor_doc);
            d.delta = Some(cobracket_doc(&delta));
            d
        }
        BuildKind::CompatibleApn => {
            let n = rd.novikov()?;
            let b = if rd.doc.operator.is_some() {
                compatible_apn_from_invertible_anti_o(&n, &rd.novikov_rep(&n)?, &rd.operator()?)?
            } else {
                apn_from_quasi_frobenius(&n, &rd.form()?)?
            };
            out.with_apn(&b)
        }
        BuildKind::DoubleBialgebra => {
            let b = rd.apn()?;
            let db = double_bialgebra(&ApnBialgebra { delta: rd.cobracket(b.dim())?, algebra: b })?;
            let mut d = out.with_apn(&db.algebra);
            d.s = Some(TensorDoc::Named("canonical".into()));
            d.delta = Some(cobracket_doc(&db.delta));
            d
        }
    };
    Ok(Outcome::document(&doc))
}

/// YBE residual with advisory properties of s; passes when the residual is zero.
pub fn ybe_check(rd: &Reader, s_flag: Option<&str>) -> Result<Outcome, CliError> {
    let b = rd.apn()?;
    let s = match s_flag {
        Some(name) => rd.tensor_of(b.dim(), &TensorDoc::Named(name.to_string()))?,
        None => rd.tensor(b.dim())?,
    };
    let res = ybe_residual(&b, &s)?;
    let mut r = IdentityReport::pass();
    let n = b.dim();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if !res[(i, j, k)].is_zero() {
                    r.passed = false;
                    r.witnesses.push(novikov_core::Witness { id: "YBE".into(), indices: vec![i, j, k], residual: vec![res[(i, j, k)].clone()] });
                }
            }
        }
    }
    let mut value = report_value("ybe check", &r);
    let sym = &s + &tau2(&s);
    value["properties"] = json!({
        "skew": sym.is_zero(),
        "invariant_symmetric_part": check_invariant(&b, &sym)?.passed,
        "quasi_triangular": check_quasi_triangular(&b, &s)?.passed,
        "factorizable": check_factorizable(&b, &s)?.passed,
    });
    Ok(Outcome { passed: r.passed, value })
}

fn parse_grid(field: FieldSpec, grid: Option<&str>) -> Result<Vec<Scalar>, CliError> {
    let Some(g) = grid else { return Ok(field_grid(field, -2, 2)) };
    let bad = || CliError::Input(format!("grid must look like lo..hi, got {g:?}"));
    let (lo, hi) = g.split_once("..").ok_or_else(bad)?;
    let lo: i64 = lo.trim().parse().map_err(|_| bad())?;
    let hi: i64 = hi.trim().parse().map_err(|_| bad())?;
    if lo > hi {
        return Err(bad());
    }
    let mut vals: Vec<Scalar> = Vec::new();
    for v in lo..=hi {
        let s = field.int(v);
        if !vals.contains(&s) {
            vals.push(s);
        }
    }
    // Zero first, so results are ordered by sparsity pattern.
    if let Some(z) = vals.iter().position(Scalar::is_zero) {
        let zero = vals.remove(z);
        vals.insert(0, zero);
    }
    Ok(vals)
}

fn search_value<T>(found: Vec<Value>, out: &novikov_core::search::SearchOutcome<T>) -> Value {
    json!({ "count": found.len(), "examined": out.examined, "truncated": out.truncated, "found": found })
}

pub fn ybe_search(rd: &Reader, skew_only: bool, grid: Option<&str>, cfg: SearchConfig) -> Result<Outcome, CliError> {
    let b = rd.apn()?;
    let vals = parse_grid(rd.field, grid)?;
    let out = search_ybe_solutions(&b, &vals, skew_only, cfg)?;
    let found = out.found.iter().map(|s| serde_json::to_value(tensor_doc(s)).expect("serializes")).collect();
    Ok(Outcome::ok(search_value(found, &out)))
}

pub fn search_operators(rd: &Reader, grid: Option<&str>, cfg: SearchConfig) -> Result<Outcome, CliError> {
    let b = rd.apn()?;
    let rho = rd.apn_rep(&b)?;
    let vals = parse_grid(rd.field, grid)?;
    let out = search_o_operators(&b, &rho, &vals, cfg)?;
    let found = out.found.iter().map(|t| serde_json::to_value(matrix_doc(t)).expect("serializes")).collect();
    Ok(Outcome::ok(search_value(found, &out)))
}

pub fn search_apn(field: FieldSpec, dim: usize, max_nonzero: Option<usize>, cfg: SearchConfig) -> Result<Outcome, CliError> {
    let out = enumerate_apn(field, dim, max_nonzero, cfg)?;
    let found = out.found.iter().map(|b| serde_json::to_value(Document::new(field).with_apn(b)).expect("serializes")).collect();
    Ok(Outcome::ok(search_value(found, &out)))
}

pub fn correspond(kind: CorrespondKind, rd: &Reader, weight: Option<&str>) -> Result<Outcome, CliError> {
    let b = rd.apn()?;
    let lambda = rd.weight(weight)?;
    let mut d = Document::new(rd.field).with_apn(&b);
    d.weight = Some(Coef::of(&lambda));
    match kind {
        CorrespondKind::RbToBialgebra => {
            let s = rb_to_factorizable(&b, &rd.operator()?, &rd.form()?, &lambda)?;
            d.delta = Some(cobracket_doc(&coboundary_delta(&b, &s, &s)?));
            d.s = Some(tensor_doc(&s));
        }
        CorrespondKind::BialgebraToRb => {
            let (p, w) = factorizable_to_rb(&b, &rd.tensor(b.dim())?, &lambda)?;
            d.operator = Some(matrix_doc(&p));
            d.form = Some(matrix_doc(&w));
        }
    }
    Ok(Outcome::document(&d))
}

pub fn factorize_cmd(rd: &Reader, vector: &str) -> Result<Outcome, CliError> {
    let b = rd.apn()?;
    let s = rd.tensor(b.dim())?;
    let x = rd.vector(vector)?;
    let (x1, x2) = factorize(&b, &s, &x)?;
    let render = |v: &novikov_core::Vector| v.iter().map(Scalar::to_string).collect::<Vec<_>>();
    Ok(Outcome::ok(json!({ "x1": render(&x1), "x2": render(&x2) })))
}
