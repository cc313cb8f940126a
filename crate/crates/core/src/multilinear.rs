//! A small language for multilinear identities, so that each identity list
//! is written once as data and evaluated on all basis tuples.
//!
//! Syntax (whitespace is ignored):
//!
//! ```text
//! equation := expr '=' expr
//! expr     := ['+'|'-'] term {('+'|'-') term}
//! term     := [INT | '[' name ']'] product
//! product  := factor [BINOP factor]
//! factor   := VAR | ACTION '(' expr ',' expr ')' | MAP '(' expr ')' | '(' expr ')' | '0'
//! ```
//!
//! * `VAR` is a lowercase letter other than `l`, `r`, `o`.
//! * `BINOP` is an operation character followed by the space it lives in:
//!   `>` (≻), `<` (≺), `o` (∘ = ≻+≺), `@` (x⊙y = x≻y + y≺x), `*` (x⋆y = x∘y + y∘x).
//!   On a space carrying a single Novikov product only `o` and `*` apply.
//! * `ACTION` is `l` or `r`, an optional operation character and the acting
//!   space: `l>2(a, x)` is l≻(a)x with `a` in space 2. Composite actions:
//!   `lo = l> + l<`, `ro = r> + r<`, `l* = lo + ro`, `l@ = l> + r<`,
//!   `r@ = r> + l<`. Without an operation character (`l1`, `r2`) the action
//!   is the plain left/right action of a Novikov representation.
//! * `MAP` is an uppercase letter naming a linear map between spaces.
//! * Products do not chain; parenthesize nested products.

use std::collections::BTreeMap;

use crate::algebra::BinaryOp;
use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::linalg::{Matrix, Vector};
use crate::report::Collector;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum OpKind {
    Succ,
    Prec,
    Circ,
    Odot,
    Star,
}

impl OpKind {
    fn from_char(c: char) -> Option<Self> {
        Some(match c {
            '>' => OpKind::Succ,
            '<' => OpKind::Prec,
            'o' => OpKind::Circ,
            '@' => OpKind::Odot,
            '*' => OpKind::Star,
            _ => return None,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Side {
    Left,
    Right,
}

/// Base action families a context may provide.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum ActKind {
    /// Plain Novikov action.
    Plain,
    Succ,
    Prec,
}

#[derive(Clone, Debug)]
enum Coef {
    Int(i64),
    Param(String, i64),
}

#[derive(Clone, Debug)]
enum Node {
    Zero,
    Var(usize),
    Bin { op: OpKind, space: u8, l: Box<Node>, r: Box<Node> },
    Act { side: Side, op: Option<OpKind>, space: u8, elem: Box<Node>, arg: Box<Node> },
    Map { name: char, arg: Box<Node> },
    Sum { terms: Vec<(Coef, Node)>, space: u8 },
}

/// Spaces of the variables and maps an identity list refers to.
#[derive(Clone, Debug, Default)]
pub struct Signature {
    vars: Vec<(char, u8)>,
    maps: BTreeMap<char, (u8, u8)>,
}

impl Signature {
    pub fn new() -> Self {
        Signature::default()
    }

    /// Declare variables (in witness-index order) living in `space`.
    pub fn vars(mut self, names: &str, space: u8) -> Self {
        for c in names.chars() {
            self.vars.push((c, space));
        }
        self
    }

    /// Declare a linear map from space `from` to space `to`.
    pub fn map(mut self, name: char, from: u8, to: u8) -> Self {
        self.maps.insert(name, (from, to));
        self
    }
}

#[derive(Clone, Debug)]
pub struct Equation {
    pub tag: String,
    pub source: String,
    lhs: Node,
    rhs: Node,
    /// Indices into the signature's variable list used by this equation.
    used: Vec<usize>,
    space: u8,
}

/// A compiled identity list.
#[derive(Clone, Debug)]
pub struct Table {
    sig: Signature,
    pub equations: Vec<Equation>,
}

impl Table {
    /// Compile `(tag, "lhs = rhs")` pairs. Errors carry the offending tag.
    pub fn compile(sig: Signature, src: &[(&str, &str)]) -> Result<Table> {
        let mut equations = Vec::new();
        for (tag, text) in src {
            let eq = compile_equation(&sig, tag, text).map_err(|e| Error::Table(format!("{tag}: {e}")))?;
            equations.push(eq);
        }
        Ok(Table { sig, equations })
    }

    pub fn tags(&self) -> Vec<&str> {
        self.equations.iter().map(|e| e.tag.as_str()).collect()
    }

    /// Evaluate every equation on every tuple of basis vectors of the spaces
    /// its variables live in, recording nonzero residuals.
    pub fn check(&self, ctx: &Context<'_>, col: &mut Collector) {
        for eq in &self.equations {
            if col.done() {
                return;
            }
            self.check_equation(eq, ctx, col);
        }
    }

    /// Residual of one equation at explicit variable values (by signature order).
    pub fn residual(&self, tag: &str, ctx: &Context<'_>, values: &[Vector]) -> Option<Vector> {
        let eq = self.equations.iter().find(|e| e.tag == tag)?;
        let vals: Vec<Option<Vector>> = values.iter().cloned().map(Some).collect();
        Some(ctx.eval(&eq.lhs, &vals) - ctx.eval(&eq.rhs, &vals))
    }

    fn check_equation(&self, eq: &Equation, ctx: &Context<'_>, col: &mut Collector) {
        let dims: Vec<usize> = eq.used.iter().map(|&v| ctx.dim(self.sig.vars[v].1)).collect();
        if dims.iter().any(|&d| d == 0) {
            return;
        }
        let basis: Vec<Vec<Vector>> = dims.iter().map(|&d| (0..d).map(|i| Vector::basis(ctx.field, d, i)).collect()).collect();
        let mut idx = vec![0usize; dims.len()];
        let mut vals: Vec<Option<Vector>> = vec![None; self.sig.vars.len()];
        loop {
            for (slot, &v) in eq.used.iter().enumerate() {
                vals[v] = Some(basis[slot][idx[slot]].clone());
            }
            let res = ctx.eval(&eq.lhs, &vals) - ctx.eval(&eq.rhs, &vals);
            col.record(&eq.tag, &idx, res.into_vec());
            if col.done() {
                return;
            }
            // Odometer with the last variable fastest.
            let mut k = dims.len();
            loop {
                if k == 0 {
                    return;
                }
                k -= 1;
                idx[k] += 1;
                if idx[k] < dims[k] {
                    break;
                }
                idx[k] = 0;
            }
        }
    }
}

/// Products, actions, maps and parameters an identity list is evaluated against.
pub struct Context<'a> {
    field: FieldSpec,
    spaces: BTreeMap<u8, SpaceOps<'a>>,
    actions: BTreeMap<(Side, ActKind, u8), &'a [Matrix]>,
    maps: BTreeMap<char, &'a Matrix>,
    params: BTreeMap<String, Scalar>,
}

#[derive(Clone, Copy)]
enum SpaceOps<'a> {
    Plain(usize),
    Novikov(&'a BinaryOp),
    Apn(&'a BinaryOp, &'a BinaryOp),
}

impl<'a> Context<'a> {
    pub fn new(field: FieldSpec) -> Self {
        Context { field, spaces: BTreeMap::new(), actions: BTreeMap::new(), maps: BTreeMap::new(), params: BTreeMap::new() }
    }

    /// A space with no product of its own.
    pub fn plain(mut self, space: u8, dim: usize) -> Self {
        self.spaces.insert(space, SpaceOps::Plain(dim));
        self
    }

    pub fn novikov(mut self, space: u8, circ: &'a BinaryOp) -> Self {
        self.spaces.insert(space, SpaceOps::Novikov(circ));
        self
    }

    pub fn apn(mut self, space: u8, succ: &'a BinaryOp, prec: &'a BinaryOp) -> Self {
        self.spaces.insert(space, SpaceOps::Apn(succ, prec));
        self
    }

    /// Action of space `by` given by one matrix per basis vector of `by`.
    pub fn action(mut self, side: Side, kind: ActKind, by: u8, mats: &'a [Matrix]) -> Self {
        self.actions.insert((side, kind, by), mats);
        self
    }

    pub fn map(mut self, name: char, m: &'a Matrix) -> Self {
        self.maps.insert(name, m);
        self
    }

    pub fn param(mut self, name: &str, value: Scalar) -> Self {
        self.params.insert(name.to_string(), value);
        self
    }

    fn dim(&self, space: u8) -> usize {
        match self.spaces.get(&space) {
            Some(SpaceOps::Plain(d)) => *d,
            Some(SpaceOps::Novikov(c)) => c.dim(),
            Some(SpaceOps::Apn(s, _)) => s.dim(),
            None => panic!("space {space} missing from context"),
        }
    }

    fn product(&self, op: OpKind, space: u8, x: &Vector, y: &Vector) -> Vector {
        let ops = self.spaces.get(&space).unwrap_or_else(|| panic!("space {space} missing from context"));
        match (ops, op) {
            (SpaceOps::Apn(s, _), OpKind::Succ) => s.mul(x, y),
            (SpaceOps::Apn(_, p), OpKind::Prec) => p.mul(x, y),
            (SpaceOps::Apn(s, p), OpKind::Circ) => s.mul(x, y) + p.mul(x, y),
            (SpaceOps::Apn(s, p), OpKind::Odot) => s.mul(x, y) + p.mul(y, x),
            (SpaceOps::Novikov(c), OpKind::Circ) => c.mul(x, y),
            (_, OpKind::Star) => self.product(OpKind::Circ, space, x, y) + self.product(OpKind::Circ, space, y, x),
            _ => panic!("operation {op:?} unavailable on space {space}"),
        }
    }

    fn base_action(&self, side: Side, kind: ActKind, space: u8, elem: &Vector, arg: &Vector) -> Vector {
        let mats = self
            .actions
            .get(&(side, kind, space))
            .unwrap_or_else(|| panic!("action {side:?} {kind:?} of space {space} missing from context"));
        let mut out: Option<Vector> = None;
        for (i, c) in elem.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let v = mats[i].apply(arg);
            let v = if c.is_one() { v } else { v.scale(c) };
            out = Some(match out {
                None => v,
                Some(acc) => acc + v,
            });
        }
        out.unwrap_or_else(|| Vector::zeros(self.field, arg.len()))
    }

    fn action_value(&self, side: Side, op: Option<OpKind>, space: u8, elem: &Vector, arg: &Vector) -> Vector {
        use ActKind::{Plain, Prec, Succ};
        let b = |s: Side, k: ActKind| self.base_action(s, k, space, elem, arg);
        match (side, op) {
            (s, None) => b(s, Plain),
            (s, Some(OpKind::Succ)) => b(s, Succ),
            (s, Some(OpKind::Prec)) => b(s, Prec),
            (s, Some(OpKind::Circ)) => b(s, Succ) + b(s, Prec),
            (Side::Left, Some(OpKind::Star)) => {
                b(Side::Left, Succ) + b(Side::Left, Prec) + b(Side::Right, Succ) + b(Side::Right, Prec)
            }
            (Side::Left, Some(OpKind::Odot)) => b(Side::Left, Succ) + b(Side::Right, Prec),
            (Side::Right, Some(OpKind::Odot)) => b(Side::Right, Succ) + b(Side::Left, Prec),
            (Side::Right, Some(OpKind::Star)) => panic!("right star action is not defined"),
        }
    }

    fn eval(&self, n: &Node, vals: &[Option<Vector>]) -> Vector {
        match n {
            Node::Zero => unreachable!("zero only appears as a sum term"),
            Node::Var(v) => vals[*v].clone().expect("variable bound"),
            Node::Bin { op, space, l, r } => self.product(*op, *space, &self.eval(l, vals), &self.eval(r, vals)),
            Node::Act { side, op, space, elem, arg } => {
                self.action_value(*side, *op, *space, &self.eval(elem, vals), &self.eval(arg, vals))
            }
            Node::Map { name, arg } => {
                let m = self.maps.get(name).unwrap_or_else(|| panic!("map {name} missing from context"));
                m.apply(&self.eval(arg, vals))
            }
            Node::Sum { terms, space } => {
                let mut acc = Vector::zeros(self.field, self.dim(*space));
                for (c, t) in terms {
                    if matches!(t, Node::Zero) {
                        continue;
                    }
                    let v = self.eval(t, vals);
                    match c {
                        Coef::Int(1) => acc = acc + v,
                        Coef::Int(-1) => acc = acc - v,
                        Coef::Int(i) => acc.axpy(&self.field.int(*i), &v),
                        Coef::Param(name, sign) => {
                            let p = self.params.get(name).unwrap_or_else(|| panic!("parameter {name} missing from context"));
                            acc.axpy(&(p * &self.field.int(*sign)), &v);
                        }
                    }
                }
                acc
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Parsing and type checking.

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    LParen,
    RParen,
    Comma,
    Eq,
    Plus,
    Minus,
    Int(i64),
    Param(String),
    Var(char),
    Bin(OpKind, u8),
    Act(Side, Option<OpKind>, u8),
    Map(char),
}

fn tokenize(s: &str) -> std::result::Result<Vec<Tok>, String> {
    let cs: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < cs.len() {
        let c = cs[i];
        let next = cs.get(i + 1).copied();
        match c {
            '(' => out.push(Tok::LParen),
            ')' => out.push(Tok::RParen),
            ',' => out.push(Tok::Comma),
            '=' => out.push(Tok::Eq),
            '+' => out.push(Tok::Plus),
            '-' => out.push(Tok::Minus),
            '[' => {
                let end = cs[i..].iter().position(|&c| c == ']').ok_or("unterminated parameter")? + i;
                out.push(Tok::Param(cs[i + 1..end].iter().collect()));
                i = end;
            }
            '0'..='9' => {
                let mut j = i;
                while j < cs.len() && cs[j].is_ascii_digit() {
                    j += 1;
                }
                let v: String = cs[i..j].iter().collect();
                out.push(Tok::Int(v.parse().map_err(|_| "bad integer")?));
                i = j - 1;
            }
            'l' | 'r' => {
                let side = if c == 'l' { Side::Left } else { Side::Right };
                let (op, j) = match next.and_then(OpKind::from_char) {
                    Some(op) => (Some(op), i + 2),
                    None => (None, i + 1),
                };
                let d = cs.get(j).and_then(|c| c.to_digit(10)).ok_or_else(|| format!("action at {i} lacks a space digit"))?;
                if cs.get(j + 1) != Some(&'(') {
                    return Err(format!("action at {i} must be applied"));
                }
                out.push(Tok::Act(side, op, d as u8));
                i = j;
            }
            c if OpKind::from_char(c).is_some() && next.is_some_and(|n| n.is_ascii_digit()) => {
                out.push(Tok::Bin(OpKind::from_char(c).unwrap(), next.unwrap().to_digit(10).unwrap() as u8));
                i += 1;
            }
            c if c.is_ascii_uppercase() => out.push(Tok::Map(c)),
            c if c.is_ascii_lowercase() => out.push(Tok::Var(c)),
            c => return Err(format!("unexpected character {c:?}")),
        }
        i += 1;
    }
    Ok(out)
}

struct Parser<'s> {
    toks: Vec<Tok>,
    pos: usize,
    sig: &'s Signature,
    used: Vec<usize>,
}

type PResult<T> = std::result::Result<T, String>;

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == Some(t) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, t: Tok) -> PResult<()> {
        if self.eat(&t) {
            Ok(())
        } else {
            Err(format!("expected {t:?}, found {:?}", self.peek()))
        }
    }

    /// Parses an expression and returns it with the space it lives in
    /// (`None` for a bare zero).
    fn expr(&mut self) -> PResult<(Node, Option<u8>)> {
        let mut terms = Vec::new();
        let mut space = None;
        let mut sign = if self.eat(&Tok::Minus) {
            -1
        } else {
            self.eat(&Tok::Plus);
            1
        };
        loop {
            let (coef, node, sp) = self.term(sign)?;
            if let Some(sp) = sp {
                match space {
                    None => space = Some(sp),
                    Some(s) if s != sp => return Err(format!("adding elements of spaces {s} and {sp}")),
                    _ => {}
                }
            }
            terms.push((coef, node));
            if self.eat(&Tok::Plus) {
                sign = 1;
            } else if self.eat(&Tok::Minus) {
                sign = -1;
            } else {
                break;
            }
        }
        Ok((Node::Sum { terms, space: space.unwrap_or(0) }, space))
    }

    fn term(&mut self, sign: i64) -> PResult<(Coef, Node, Option<u8>)> {
        let coef = match self.peek().cloned() {
            Some(Tok::Int(0)) => {
                self.pos += 1;
                return Ok((Coef::Int(0), Node::Zero, None));
            }
            Some(Tok::Int(k)) => {
                self.pos += 1;
                Coef::Int(sign * k)
            }
            Some(Tok::Param(p)) => {
                self.pos += 1;
                Coef::Param(p, sign)
            }
            _ => Coef::Int(sign),
        };
        let (node, sp) = self.product()?;
        Ok((coef, node, Some(sp)))
    }

    fn product(&mut self) -> PResult<(Node, u8)> {
        let (l, ls) = self.factor()?;
        if let Some(Tok::Bin(op, space)) = self.peek().cloned() {
            self.pos += 1;
            let (r, rs) = self.factor()?;
            if ls != space || rs != space {
                return Err(format!("operands of {op:?}{space} live in spaces {ls} and {rs}"));
            }
            if matches!(self.peek(), Some(Tok::Bin(..))) {
                return Err("chained products need parentheses".into());
            }
            return Ok((Node::Bin { op, space, l: Box::new(l), r: Box::new(r) }, space));
        }
        Ok((l, ls))
    }

    fn factor(&mut self) -> PResult<(Node, u8)> {
        match self.peek().cloned() {
            Some(Tok::Var(c)) => {
                self.pos += 1;
                let v = self.sig.vars.iter().position(|(n, _)| *n == c).ok_or_else(|| format!("undeclared variable {c}"))?;
                if !self.used.contains(&v) {
                    self.used.push(v);
                }
                Ok((Node::Var(v), self.sig.vars[v].1))
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let (e, sp) = self.expr()?;
                self.expect(Tok::RParen)?;
                Ok((e, sp.ok_or("parenthesized zero")?))
            }
            Some(Tok::Act(side, op, space)) => {
                self.pos += 1;
                self.expect(Tok::LParen)?;
                let (elem, es) = self.expr()?;
                self.expect(Tok::Comma)?;
                let (arg, as_) = self.expr()?;
                self.expect(Tok::RParen)?;
                if es != Some(space) {
                    return Err(format!("acting element must live in space {space}"));
                }
                let target = as_.ok_or("action on zero")?;
                if target == space {
                    return Err("an action must move between spaces".into());
                }
                Ok((Node::Act { side, op, space, elem: Box::new(elem), arg: Box::new(arg) }, target))
            }
            Some(Tok::Map(name)) => {
                self.pos += 1;
                let (from, to) = *self.sig.maps.get(&name).ok_or_else(|| format!("undeclared map {name}"))?;
                self.expect(Tok::LParen)?;
                let (arg, sp) = self.expr()?;
                self.expect(Tok::RParen)?;
                if sp != Some(from) {
                    return Err(format!("map {name} expects an element of space {from}"));
                }
                Ok((Node::Map { name, arg: Box::new(arg) }, to))
            }
            other => Err(format!("unexpected token {other:?}")),
        }
    }
}

fn compile_equation(sig: &Signature, tag: &str, text: &str) -> PResult<Equation> {
    let toks = tokenize(text)?;
    let mut p = Parser { toks, pos: 0, sig, used: Vec::new() };
    let (mut lhs, ls) = p.expr()?;
    p.expect(Tok::Eq)?;
    let (mut rhs, rs) = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(format!("trailing tokens after position {}", p.pos));
    }
    let space = match (ls, rs) {
        (Some(a), Some(b)) if a != b => return Err(format!("sides live in spaces {a} and {b}")),
        (Some(a), _) | (None, Some(a)) => a,
        (None, None) => return Err("both sides are zero".into()),
    };
    for side in [&mut lhs, &mut rhs] {
        if let Node::Sum { space: sp, .. } = side {
            *sp = space;
        }
    }
    let mut used = p.used;
    used.sort_unstable();
    Ok(Equation { tag: tag.to_string(), source: text.to_string(), lhs, rhs, used, space })
}

impl Equation {
    pub fn space(&self) -> u8 {
        self.space
    }
}
