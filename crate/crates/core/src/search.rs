//! Exhaustive searches: APN structures, O-operators, anti-O-operators and
//! Yang-Baxter solutions over finite grids. Candidates are generated in
//! lexicographic order and checked in parallel chunks; results keep that
//! order regardless of the worker count.

use crate::algebra::{check_apn_mode, ApnAlgebra, BinaryOp, NovikovAlgebra};
use crate::bialgebra::ybe_residual;
use crate::operators::{check_anti_o_operator, check_o_operator_apn, check_o_operator_apn_mode};
use crate::representation::{ApnRep, NovikovRep};
use crate::tensor::tau2;
use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::linalg::Matrix;
use crate::parallel::{par_map, with_workers};
use crate::report::Mode;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    /// Maximum number of candidates examined.
    pub budget: Option<usize>,
    /// Worker threads; 1 forces the sequential path, 0 uses every core.
    pub workers: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig { budget: None, workers: 0 }
    }
}

impl SearchConfig {
    pub fn sequential() -> Self {
        SearchConfig { budget: None, workers: 1 }
    }

    pub fn with_budget(mut self, budget: usize) -> Self {
        self.budget = Some(budget);
        self
    }

    pub fn with_workers(mut self, workers: usize) -> Self {
        self.workers = workers;
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchOutcome<T> {
    pub found: Vec<T>,
    pub examined: usize,
    /// The budget ran out before the space was exhausted.
    pub truncated: bool,
}

const CHUNK: usize = 2048;

/// Lexicographic odometer over `values^len`, optionally limited to vectors
/// with at most `max_nonzero` entries different from `values[0]`.
#[derive(Clone, Debug)]
pub struct Odometer {
    digits: Vec<usize>,
    base: usize,
    max_nonzero: Option<usize>,
    started: bool,
    done: bool,
}

impl Odometer {
    pub fn new(len: usize, base: usize, max_nonzero: Option<usize>) -> Self {
        Odometer { digits: vec![0; len], base, max_nonzero, started: false, done: base == 0 }
    }
}

impl Iterator for Odometer {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(self.digits.clone());
        }
        // Smallest lexicographic successor: bump the rightmost digit that can
        // grow without exceeding the nonzero budget, zero everything after it.
        let mut prefix_nnz: Vec<usize> = Vec::with_capacity(self.digits.len());
        let mut acc = 0;
        for &d in &self.digits {
            prefix_nnz.push(acc);
            if d != 0 {
                acc += 1;
            }
        }
        for i in (0..self.digits.len()).rev() {
            if self.digits[i] + 1 >= self.base {
                continue;
            }
            let nnz = prefix_nnz[i] + 1;
            if self.max_nonzero.is_some_and(|k| nnz > k) {
                continue;
            }
            self.digits[i] += 1;
            for d in &mut self.digits[i + 1..] {
                *d = 0;
            }
            return Some(self.digits.clone());
        }
        self.done = true;
        None
    }
}

/// Run `accept` over candidates in parallel chunks, honoring the budget.
pub fn run_search<C, I>(candidates: I, cfg: SearchConfig, accept: impl Fn(&C) -> bool + Sync + Send) -> SearchOutcome<C>
where
    C: Send + Sync,
    I: Iterator<Item = C> + Send,
{
    with_workers(cfg.workers, move || run_chunks(candidates, cfg, accept))
}

fn run_chunks<C, I>(candidates: I, cfg: SearchConfig, accept: impl Fn(&C) -> bool + Sync + Send) -> SearchOutcome<C>
where
    C: Send + Sync,
    I: Iterator<Item = C>,
{
    let mut found = Vec::new();
    let mut examined = 0;
    let mut it = candidates.peekable();
    loop {
        let room = cfg.budget.map_or(CHUNK, |b| CHUNK.min(b - examined));
        if room == 0 {
            break;
        }
        let chunk: Vec<C> = it.by_ref().take(room).collect();
        if chunk.is_empty() {
            break;
        }
        examined += chunk.len();
        let keep = par_map(&chunk, cfg.workers, |c| accept(c));
        found.extend(chunk.into_iter().zip(keep).filter_map(|(c, k)| k.then_some(c)));
    }
    let truncated = it.peek().is_some();
    SearchOutcome { found, examined, truncated }
}

/// Integer grid `{lo, ..., hi}` as field elements.
pub fn int_grid(field: FieldSpec, lo: i64, hi: i64) -> Vec<Scalar> {
    (lo..=hi).map(|v| field.int(v)).collect()
}

/// The grid used when a search is over a whole field: every element of
/// GF(p), or the given integer range over Q.
pub fn field_grid(field: FieldSpec, lo: i64, hi: i64) -> Vec<Scalar> {
    field.elements().unwrap_or_else(|| int_grid(field, lo, hi))
}

fn apn_from_digits(field: FieldSpec, n: usize, digits: &[usize], values: &[Scalar]) -> ApnAlgebra {
    let n3 = n * n * n;
    let op = |off: usize| {
        let mut entries = Vec::new();
        for (slot, &d) in digits[off..off + n3].iter().enumerate() {
            if d != 0 {
                entries.push((slot / (n * n), (slot / n) % n, slot % n, values[d].clone()));
            }
        }
        BinaryOp::from_entries(field, n, &entries).expect("in range")
    };
    ApnAlgebra { succ: op(0), prec: op(n3) }
}

/// All APN structures on GF(p)ⁿ with at most `max_nonzero` nonzero structure
/// constants, in lexicographic order of the coefficient vector (≻ constants
/// first, then ≺, each in `c[i][j][k]` order).
pub fn enumerate_apn(field: FieldSpec, dim: usize, max_nonzero: Option<usize>, cfg: SearchConfig) -> Result<SearchOutcome<ApnAlgebra>> {
    let values = field.elements().ok_or_else(|| Error::InvalidInput("APN enumeration needs a prime field".into()))?;
    let len = 2 * dim * dim * dim;
    let cands = Odometer::new(len, values.len(), max_nonzero).map(|d| apn_from_digits(field, dim, &d, &values));
    Ok(run_search(cands, cfg, |b| check_apn_mode(b, Mode::FirstFailure).passed))
}

/// Novikov structures, for anti-O-operator fixtures.
pub fn enumerate_novikov(field: FieldSpec, dim: usize, max_nonzero: Option<usize>, cfg: SearchConfig) -> Result<SearchOutcome<NovikovAlgebra>> {
    let values = field.elements().ok_or_else(|| Error::InvalidInput("Novikov enumeration needs a prime field".into()))?;
    let n3 = dim * dim * dim;
    let cands = Odometer::new(n3, values.len(), max_nonzero).map(|d| {
        let mut e = Vec::new();
        for (slot, &v) in d.iter().enumerate() {
            if v != 0 {
                e.push((slot / (dim * dim), (slot / dim) % dim, slot % dim, values[v].clone()));
            }
        }
        NovikovAlgebra::new(BinaryOp::from_entries(field, dim, &e).expect("in range"))
    });
    Ok(run_search(cands, cfg, |n| crate::algebra::check_novikov_mode(n, Mode::FirstFailure).passed))
}

/// Matrices of shape `rows × cols` with entries from `values`, in
/// lexicographic (row-major) order.
pub fn matrix_grid(field: FieldSpec, rows: usize, cols: usize, values: &[Scalar]) -> impl Iterator<Item = Matrix> + '_ {
    Odometer::new(rows * cols, values.len(), None).map(move |d| {
        let data = (0..rows).map(|i| (0..cols).map(|j| values[d[i * cols + j]].clone()).collect()).collect();
        Matrix::from_rows(field, data).expect("rectangular")
    })
}

fn reverify<C>(mut out: SearchOutcome<C>, check: impl Fn(&C) -> Result<bool>) -> Result<SearchOutcome<C>> {
    for c in &out.found {
        if !check(c)? {
            return Err(Error::Inconsistent("a search result failed its full re-check".into()));
        }
    }
    out.found.shrink_to_fit();
    Ok(out)
}

/// Every `T: V → A` with entries from `values` that is an O-operator of
/// (A, ≻, ≺) for ρ.
pub fn search_o_operators(b: &ApnAlgebra, rho: &ApnRep, values: &[Scalar], cfg: SearchConfig) -> Result<SearchOutcome<Matrix>> {
    rho.validate(b.dim(), b.field())?;
    let cands = matrix_grid(b.field(), b.dim(), rho.dim, values);
    let out = run_search(cands, cfg, |t| check_o_operator_apn_mode(b, rho, t, Mode::FirstFailure).is_ok_and(|r| r.passed));
    reverify(out, |t| Ok(check_o_operator_apn(b, rho, t)?.passed))
}

/// Every `T: V → A` with entries from `values` that is an anti-O-operator of
/// (A, ∘) for ρ.
pub fn search_anti_o_operators(n: &NovikovAlgebra, rho: &NovikovRep, values: &[Scalar], cfg: SearchConfig) -> Result<SearchOutcome<Matrix>> {
    rho.validate(n.dim(), n.field())?;
    let cands = matrix_grid(n.field(), n.dim(), rho.dim, values);
    let out = run_search(cands, cfg, |t| check_anti_o_operator(n, rho, t).is_ok_and(|r| r.passed));
    reverify(out, |t| Ok(check_anti_o_operator(n, rho, t)?.passed))
}

/// Every 2-tensor with entries from `values` solving the APN-YBE in B. With
/// `skew_only` the candidates are the skew tensors built from their strictly
/// upper triangular entries.
pub fn search_ybe_solutions(b: &ApnAlgebra, values: &[Scalar], skew_only: bool, cfg: SearchConfig) -> Result<SearchOutcome<Matrix>> {
    let n = b.dim();
    let f = b.field();
    let slots: Vec<(usize, usize)> = if skew_only {
        (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect()
    } else {
        (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).collect()
    };
    let cands = Odometer::new(slots.len(), values.len(), None).map(move |d| {
        let mut s = Matrix::zeros(f, n, n);
        for (&(i, j), &k) in slots.iter().zip(&d) {
            s[(i, j)] = values[k].clone();
            if skew_only {
                s[(j, i)] = -&values[k];
            }
        }
        s
    });
    let out = run_search(cands, cfg, |s| ybe_residual(b, s).is_ok_and(|r| r.is_zero()));
    reverify(out, |s| Ok(ybe_residual(b, s)?.is_zero() && (!skew_only || tau2(s) == -s.clone())))
}
