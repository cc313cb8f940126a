//! JSON documents: fields, algebras, representations, tensors, cobrackets,
//! operators and forms, with loading into core types and saving back.
//!
//! Coefficients are strings `"n"`, `"n/d"` or integers. A coefficient may
//! also name a parameter (`"a"`, `"-a"`, `"2*a"`, `"1/2*a"`) whose value
//! comes from `--param` or the document's `params` table.

use std::collections::BTreeMap;
use std::path::Path;

use novikov_core::algebra::{associated_novikov, ApnAlgebra, BinaryOp, NovikovAlgebra};
use novikov_core::bialgebra::Cobracket;
use novikov_core::bialgebra::coregular_apn_rep;
use novikov_core::matched_pair::{ApnMatchedPair, NovikovMatchedPair};
use novikov_core::representation::{dual_novikov_rep, regular_apn_rep, regular_novikov_rep, ApnRep, NovikovRep};
use novikov_core::tensor::Tensor3;
use novikov_core::{FieldSpec, Matrix, Scalar, Vector};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum FieldDoc {
    Rational,
    Gf { p: u64 },
}

impl FieldDoc {
    pub fn spec(self) -> Result<FieldSpec, CliError> {
        match self {
            FieldDoc::Rational => Ok(FieldSpec::Rational),
            FieldDoc::Gf { p } => FieldSpec::prime(p).map_err(CliError::from),
        }
    }

    pub fn from_spec(f: FieldSpec) -> Self {
        match f {
            FieldSpec::Rational => FieldDoc::Rational,
            FieldSpec::Prime(p) => FieldDoc::Gf { p },
        }
    }
}

/// A coefficient as written in a document.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Coef {
    Int(i64),
    Str(String),
}

impl Coef {
    pub fn of(s: &Scalar) -> Self {
        Coef::Str(s.to_string())
    }
}

pub type Entry2 = (usize, usize, Coef);
pub type Entry3 = (usize, usize, usize, Coef);
pub type MatrixDoc = Vec<Vec<Coef>>;

/// Structure constants `[i, j, k, c]` meaning `eᵢ∗eⱼ` has `c` at `eₖ`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct OpsDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub succ: Option<Vec<Entry3>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub prec: Option<Vec<Entry3>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub circ: Option<Vec<Entry3>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraDoc {
    pub dim: usize,
    #[serde(default)]
    pub ops: OpsDoc,
}

/// An explicit representation, or `"regular"` / `"coregular"`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RepDoc {
    Named(String),
    Apn {
        dim: usize,
        l_succ: Vec<MatrixDoc>,
        r_succ: Vec<MatrixDoc>,
        l_prec: Vec<MatrixDoc>,
        r_prec: Vec<MatrixDoc>,
    },
    Novikov {
        dim: usize,
        l: Vec<MatrixDoc>,
        r: Vec<MatrixDoc>,
    },
}

/// Explicit tensor entries `[i, j, c]` for `c eᵢ⊗eⱼ`, or `"canonical"` for
/// `Σ eᵢ⊗e_{n+i}` on a space of dimension 2n.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum TensorDoc {
    Named(String),
    Entries(Vec<Entry2>),
}

/// `[x, i, j, c]`: Δ(eₓ) has `c` at `eᵢ⊗eⱼ`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CobracketDoc {
    #[serde(default)]
    pub succ: Vec<Entry3>,
    #[serde(default)]
    pub prec: Vec<Entry3>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairDoc {
    pub a: AlgebraDoc,
    pub b: AlgebraDoc,
    pub rho_a: RepDoc,
    pub rho_b: RepDoc,
}

/// Every command reads one document and uses the keys it needs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Document {
    pub field: FieldDoc,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dim: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ops: Option<OpsDoc>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub params: BTreeMap<String, Coef>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rep: Option<RepDoc>,
    /// Operations on the representation space, for A-APN and A-Novikov algebras.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub v_ops: Option<OpsDoc>,
    /// Operations on the dual space, for double constructions.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dual_ops: Option<OpsDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub s: Option<TensorDoc>,
    /// Second tensor for coboundaries with distinct s≻ and s≺.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub s_prec: Option<TensorDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub delta: Option<CobracketDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub operator: Option<MatrixDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub form: Option<MatrixDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weight: Option<Coef>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pair: Option<PairDoc>,
}

impl Document {
    pub fn new(field: FieldSpec) -> Self {
        Document {
            field: FieldDoc::from_spec(field),
            dim: None,
            ops: None,
            params: BTreeMap::new(),
            rep: None,
            v_ops: None,
            dual_ops: None,
            s: None,
            s_prec: None,
            delta: None,
            operator: None,
            form: None,
            weight: None,
            pair: None,
        }
    }

    pub fn from_json(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Parse(format!("line {}, column {}: {e}", e.line(), e.column())))
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
        Self::from_json(&text).map_err(|e| match e {
            CliError::Parse(m) => CliError::Parse(format!("{}: {m}", path.display())),
            other => other,
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents serialize")
    }

    pub fn save(&self, path: &Path) -> Result<(), CliError> {
        std::fs::write(path, self.to_json() + "\n").map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
    }

    pub fn with_apn(mut self, b: &ApnAlgebra) -> Self {
        self.dim = Some(b.dim());
        self.ops = Some(OpsDoc { succ: Some(entries3(&b.succ)), prec: Some(entries3(&b.prec)), circ: None });
        self
    }

    pub fn with_novikov(mut self, n: &NovikovAlgebra) -> Self {
        self.dim = Some(n.dim());
        self.ops = Some(OpsDoc { succ: None, prec: None, circ: Some(entries3(&n.circ)) });
        self
    }
}

fn entries3(op: &BinaryOp) -> Vec<Entry3> {
    op.nonzero_entries().into_iter().map(|(i, j, k, c)| (i, j, k, Coef::of(&c))).collect()
}

pub fn matrix_doc(m: &Matrix) -> MatrixDoc {
    (0..m.rows()).map(|i| (0..m.cols()).map(|j| Coef::of(&m[(i, j)])).collect()).collect()
}

pub fn tensor_doc(s: &Matrix) -> TensorDoc {
    let mut out = Vec::new();
    for i in 0..s.rows() {
        for j in 0..s.cols() {
            if !s[(i, j)].is_zero() {
                out.push((i, j, Coef::of(&s[(i, j)])));
            }
        }
    }
    TensorDoc::Entries(out)
}

pub fn cobracket_doc(d: &Cobracket) -> CobracketDoc {
    let ent = |t: &Tensor3| {
        let n = t.dims()[0];
        let mut out = Vec::new();
        for x in 0..n {
            for i in 0..n {
                for j in 0..n {
                    if !t[(x, i, j)].is_zero() {
                        out.push((x, i, j, Coef::of(&t[(x, i, j)])));
                    }
                }
            }
        }
        out
    };
    CobracketDoc { succ: ent(&d.succ), prec: ent(&d.prec) }
}

fn family_doc(ms: &[Matrix]) -> Vec<MatrixDoc> {
    ms.iter().map(matrix_doc).collect()
}

pub fn apn_rep_doc(r: &ApnRep) -> RepDoc {
    RepDoc::Apn {
        dim: r.dim,
        l_succ: family_doc(&r.l_succ),
        r_succ: family_doc(&r.r_succ),
        l_prec: family_doc(&r.l_prec),
        r_prec: family_doc(&r.r_prec),
    }
}

pub fn novikov_rep_doc(r: &NovikovRep) -> RepDoc {
    RepDoc::Novikov { dim: r.dim, l: family_doc(&r.l), r: family_doc(&r.r) }
}

/// Resolves coefficients of one document against a field and parameters.
pub struct Reader<'a> {
    pub field: FieldSpec,
    pub doc: &'a Document,
    params: BTreeMap<String, Scalar>,
    coerce: bool,
}

fn missing(key: &str) -> CliError {
    CliError::Input(format!("document has no `{key}`"))
}

impl<'a> Reader<'a> {
    /// `overrides` come from the command line and win over document defaults.
    pub fn new(doc: &'a Document, overrides: &[(String, String)], coerce: bool) -> Result<Self, CliError> {
        let field = doc.field.spec()?;
        let mut r = Reader { field, doc, params: BTreeMap::new(), coerce };
        for (k, v) in &doc.params {
            let val = r.plain(v)?;
            r.params.insert(k.clone(), val);
        }
        for (k, v) in overrides {
            let val = r.plain(&Coef::Str(v.clone()))?;
            r.params.insert(k.clone(), val);
        }
        Ok(r)
    }

    fn plain(&self, c: &Coef) -> Result<Scalar, CliError> {
        match c {
            Coef::Int(v) => Ok(self.field.int(*v)),
            Coef::Str(s) => Ok(Scalar::parse(self.field, s, self.coerce)?),
        }
    }

    /// Numbers, or `[-][factor*]name` with a known parameter name.
    pub fn coef(&self, c: &Coef) -> Result<Scalar, CliError> {
        let s = match c {
            Coef::Int(_) => return self.plain(c),
            Coef::Str(s) => s.trim(),
        };
        if !s.chars().any(|ch| ch.is_ascii_alphabetic() || ch == '_') {
            return self.plain(c);
        }
        let (neg, body) = match s.strip_prefix('-') {
            Some(rest) => (true, rest.trim()),
            None => (false, s),
        };
        let (factor, name) = match body.rsplit_once('*') {
            Some((f, n)) => (Scalar::parse(self.field, f, self.coerce)?, n.trim()),
            None => (self.field.one(), body),
        };
        let value = self.params.get(name).ok_or_else(|| CliError::Input(format!("unknown parameter {name:?}; pass --param {name}=<value>")))?;
        let v = &factor * value;
        Ok(if neg { -v } else { v })
    }

    pub fn dim(&self) -> Result<usize, CliError> {
        self.doc.dim.ok_or_else(|| missing("dim"))
    }

    fn op(&self, n: usize, entries: &[Entry3]) -> Result<BinaryOp, CliError> {
        let mut e = Vec::with_capacity(entries.len());
        for (i, j, k, c) in entries {
            e.push((*i, *j, *k, self.coef(c)?));
        }
        Ok(BinaryOp::from_entries(self.field, n, &e)?)
    }

    fn apn_from(&self, n: usize, ops: &OpsDoc) -> Result<ApnAlgebra, CliError> {
        if ops.circ.is_some() {
            return Err(CliError::Input("expected `succ`/`prec` operations, found `circ`".into()));
        }
        let succ = self.op(n, ops.succ.as_deref().unwrap_or(&[]))?;
        let prec = self.op(n, ops.prec.as_deref().unwrap_or(&[]))?;
        Ok(ApnAlgebra::new(succ, prec)?)
    }

    /// `circ` directly, or the associated Novikov algebra of `succ`/`prec`.
    fn novikov_from(&self, n: usize, ops: &OpsDoc) -> Result<NovikovAlgebra, CliError> {
        match &ops.circ {
            Some(c) if ops.succ.is_none() && ops.prec.is_none() => Ok(NovikovAlgebra::new(self.op(n, c)?)),
            Some(_) => Err(CliError::Input("give either `circ` or `succ`/`prec`, not both".into())),
            None => Ok(associated_novikov(&self.apn_from(n, ops)?)),
        }
    }

    pub fn is_novikov(&self) -> bool {
        self.doc.ops.as_ref().is_some_and(|o| o.circ.is_some())
    }

    pub fn apn(&self) -> Result<ApnAlgebra, CliError> {
        let ops = self.doc.ops.as_ref().ok_or_else(|| missing("ops"))?;
        self.apn_from(self.dim()?, ops)
    }

    pub fn novikov(&self) -> Result<NovikovAlgebra, CliError> {
        let ops = self.doc.ops.clone().unwrap_or_default();
        self.novikov_from(self.dim()?, &ops)
    }

    pub fn v_apn(&self, m: usize) -> Result<ApnAlgebra, CliError> {
        self.apn_from(m, self.doc.v_ops.as_ref().ok_or_else(|| missing("v_ops"))?)
    }

    pub fn v_novikov(&self, m: usize) -> Result<NovikovAlgebra, CliError> {
        self.novikov_from(m, self.doc.v_ops.as_ref().ok_or_else(|| missing("v_ops"))?)
    }

    pub fn dual_apn(&self) -> Result<ApnAlgebra, CliError> {
        self.apn_from(self.dim()?, self.doc.dual_ops.as_ref().ok_or_else(|| missing("dual_ops"))?)
    }

    pub fn matrix(&self, m: &MatrixDoc) -> Result<Matrix, CliError> {
        let rows = m.iter().map(|row| row.iter().map(|c| self.coef(c)).collect::<Result<Vec<_>, _>>()).collect::<Result<Vec<_>, _>>()?;
        Ok(Matrix::from_rows(self.field, rows)?)
    }

    fn family(&self, ms: &[MatrixDoc]) -> Result<Vec<Matrix>, CliError> {
        ms.iter().map(|m| self.matrix(m)).collect()
    }

    fn apn_rep_of(&self, b: &ApnAlgebra, doc: &RepDoc) -> Result<ApnRep, CliError> {
        let rho = match doc {
            RepDoc::Named(n) if n == "regular" => regular_apn_rep(b),
            RepDoc::Named(n) if n == "coregular" => coregular_apn_rep(b),
            RepDoc::Named(n) => return Err(CliError::Input(format!("unknown representation {n:?}; use \"regular\" or \"coregular\""))),
            RepDoc::Apn { dim, l_succ, r_succ, l_prec, r_prec } => ApnRep {
                dim: *dim,
                l_succ: self.family(l_succ)?,
                r_succ: self.family(r_succ)?,
                l_prec: self.family(l_prec)?,
                r_prec: self.family(r_prec)?,
            },
            RepDoc::Novikov { .. } => return Err(CliError::Input("expected an APN representation (l_succ, r_succ, l_prec, r_prec)".into())),
        };
        rho.validate(b.dim(), self.field)?;
        Ok(rho)
    }

    fn novikov_rep_of(&self, n: &NovikovAlgebra, doc: &RepDoc) -> Result<NovikovRep, CliError> {
        let rho = match doc {
            RepDoc::Named(s) if s == "regular" => regular_novikov_rep(n),
            RepDoc::Named(s) if s == "coregular" => dual_novikov_rep(&regular_novikov_rep(n)),
            RepDoc::Named(s) => return Err(CliError::Input(format!("unknown representation {s:?}; use \"regular\" or \"coregular\""))),
            RepDoc::Novikov { dim, l, r } => NovikovRep { dim: *dim, l: self.family(l)?, r: self.family(r)? },
            RepDoc::Apn { .. } => return Err(CliError::Input("expected a Novikov representation (l, r)".into())),
        };
        rho.validate(n.dim(), self.field)?;
        Ok(rho)
    }

    pub fn apn_rep(&self, b: &ApnAlgebra) -> Result<ApnRep, CliError> {
        self.apn_rep_of(b, self.doc.rep.as_ref().ok_or_else(|| missing("rep"))?)
    }

    pub fn novikov_rep(&self, n: &NovikovAlgebra) -> Result<NovikovRep, CliError> {
        self.novikov_rep_of(n, self.doc.rep.as_ref().ok_or_else(|| missing("rep"))?)
    }

    pub fn tensor_of(&self, n: usize, doc: &TensorDoc) -> Result<Matrix, CliError> {
        let mut s = Matrix::zeros(self.field, n, n);
        match doc {
            TensorDoc::Named(name) if name == "canonical" => {
                if n % 2 != 0 {
                    return Err(CliError::Input("the canonical tensor needs an even dimension".into()));
                }
                for i in 0..n / 2 {
                    s[(i, n / 2 + i)] = self.field.one();
                }
            }
            TensorDoc::Named(name) => return Err(CliError::Input(format!("unknown tensor {name:?}; use \"canonical\""))),
            TensorDoc::Entries(es) => {
                for (i, j, c) in es {
                    if *i >= n || *j >= n {
                        return Err(CliError::Input(format!("tensor entry ({i}, {j}) out of range for dimension {n}")));
                    }
                    s[(*i, *j)] = &s[(*i, *j)] + &self.coef(c)?;
                }
            }
        }
        Ok(s)
    }

    pub fn tensor(&self, n: usize) -> Result<Matrix, CliError> {
        self.tensor_of(n, self.doc.s.as_ref().ok_or_else(|| missing("s"))?)
    }

    pub fn tensor_prec(&self, n: usize) -> Result<Option<Matrix>, CliError> {
        self.doc.s_prec.as_ref().map(|d| self.tensor_of(n, d)).transpose()
    }

    pub fn cobracket(&self, n: usize) -> Result<Cobracket, CliError> {
        let d = self.doc.delta.as_ref().ok_or_else(|| missing("delta"))?;
        let t = |es: &[Entry3]| -> Result<Tensor3, CliError> {
            let mut t = Tensor3::cube(self.field, n);
            for (x, i, j, c) in es {
                if *x >= n || *i >= n || *j >= n {
                    return Err(CliError::Input(format!("cobracket entry ({x}, {i}, {j}) out of range for dimension {n}")));
                }
                t[(*x, *i, *j)] = &t[(*x, *i, *j)] + &self.coef(c)?;
            }
            Ok(t)
        };
        Ok(Cobracket::new(t(&d.succ)?, t(&d.prec)?)?)
    }

    pub fn operator(&self) -> Result<Matrix, CliError> {
        self.matrix(self.doc.operator.as_ref().ok_or_else(|| missing("operator"))?)
    }

    pub fn form(&self) -> Result<Matrix, CliError> {
        self.matrix(self.doc.form.as_ref().ok_or_else(|| missing("form"))?)
    }

    /// `--weight` wins over the document's `weight`.
    pub fn weight(&self, cli: Option<&str>) -> Result<Scalar, CliError> {
        match cli {
            Some(w) => self.coef(&Coef::Str(w.to_string())),
            None => self.coef(self.doc.weight.as_ref().ok_or_else(|| missing("weight (or pass --weight)"))?),
        }
    }

    pub fn vector(&self, text: &str) -> Result<Vector, CliError> {
        let v = text.split(',').map(|c| self.coef(&Coef::Str(c.trim().to_string()))).collect::<Result<Vec<_>, _>>()?;
        Ok(Vector::from_vec(self.field, v))
    }

    fn pair_doc(&self) -> Result<&PairDoc, CliError> {
        self.doc.pair.as_ref().ok_or_else(|| missing("pair"))
    }

    pub fn pair_is_novikov(&self) -> Result<bool, CliError> {
        let p = self.pair_doc()?;
        Ok(p.a.ops.circ.is_some() || p.b.ops.circ.is_some())
    }

    pub fn apn_pair(&self) -> Result<ApnMatchedPair, CliError> {
        let p = self.pair_doc()?;
        let a1 = self.apn_from(p.a.dim, &p.a.ops)?;
        let a2 = self.apn_from(p.b.dim, &p.b.ops)?;
        let rho1 = self.explicit_apn_rep(&p.rho_a)?;
        let rho2 = self.explicit_apn_rep(&p.rho_b)?;
        let mp = ApnMatchedPair { a1, a2, rho1, rho2 };
        mp.validate()?;
        Ok(mp)
    }

    pub fn novikov_pair(&self) -> Result<NovikovMatchedPair, CliError> {
        let p = self.pair_doc()?;
        let a = self.novikov_from(p.a.dim, &p.a.ops)?;
        let b = self.novikov_from(p.b.dim, &p.b.ops)?;
        let rho_a = self.explicit_novikov_rep(&p.rho_a)?;
        let rho_b = self.explicit_novikov_rep(&p.rho_b)?;
        let mp = NovikovMatchedPair { a, b, rho_a, rho_b };
        mp.validate()?;
        Ok(mp)
    }

    fn explicit_apn_rep(&self, doc: &RepDoc) -> Result<ApnRep, CliError> {
        match doc {
            RepDoc::Apn { dim, l_succ, r_succ, l_prec, r_prec } => Ok(ApnRep {
                dim: *dim,
                l_succ: self.family(l_succ)?,
                r_succ: self.family(r_succ)?,
                l_prec: self.family(l_prec)?,
                r_prec: self.family(r_prec)?,
            }),
            _ => Err(CliError::Input("matched-pair actions must be explicit APN representations".into())),
        }
    }

    fn explicit_novikov_rep(&self, doc: &RepDoc) -> Result<NovikovRep, CliError> {
        match doc {
            RepDoc::Novikov { dim, l, r } => Ok(NovikovRep { dim: *dim, l: self.family(l)?, r: self.family(r)? }),
            _ => Err(CliError::Input("matched-pair actions must be explicit Novikov representations".into())),
        }
    }
}
