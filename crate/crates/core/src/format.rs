//! Line-oriented text formats for algebras, operators, modules, cochains
//! and actions.
//!
//! ```text
//! # comment
//! dialgebra alg3
//! dim 2
//! left 1 2 1 1        # e1 ⊣ e2 = 1·e1
//! right 2 2 1 1/2
//! alpha 2 1 1         # α(e2) = 1·e1
//! beta 2 1 1
//! ```
//!
//! Indices are 1-based. Scalars are integers or `p/q` and are read as
//! rationals. A file holds one or more blocks, each opened by a header
//! keyword: `dialgebra`, `lie`, `leibniz`, `operator`, `module`,
//! `cochains`, `action`. Operator entries are `entry i j v`
//! (row `i`, column `j`).

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::action::DialgebraAction;
use crate::bracket::{BracketAlgebra, BracketKind};
use crate::cohomology::{BiHomModule, CochainPair};
use crate::dialgebra::Dialgebra;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Tensor3};
use crate::operators::LinearOperator;
use crate::scalar::{parse_rational, Scalar, Q};

#[derive(Clone, Debug)]
struct Token {
    text: String,
    line: usize,
    column: usize,
}

#[derive(Clone, Debug)]
struct Stmt {
    tokens: Vec<Token>,
}

#[derive(Clone, Debug)]
struct Block {
    header: Token,
    label: Option<String>,
    stmts: Vec<Stmt>,
}

const HEADERS: [&str; 7] = ["dialgebra", "lie", "leibniz", "operator", "module", "cochains", "action"];

fn err(t: &Token, message: impl Into<String>) -> Error {
    Error::Parse {
        line: t.line,
        column: t.column,
        message: message.into(),
    }
}

fn tokenize_line(line: &str, line_no: usize) -> Vec<Token> {
    let body = line.split('#').next().unwrap_or("");
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in body.char_indices().chain(std::iter::once((body.len(), ' '))) {
        if ch.is_whitespace() {
            if let Some(s) = start.take() {
                out.push(Token {
                    text: body[s..i].to_string(),
                    line: line_no,
                    column: body[..s].chars().count() + 1,
                });
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    out
}

fn blocks(text: &str) -> Result<Vec<Block>> {
    let mut out: Vec<Block> = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let tokens = tokenize_line(line, idx + 1);
        let Some(first) = tokens.first() else { continue };
        if HEADERS.contains(&first.text.as_str()) {
            if tokens.len() > 2 {
                return Err(err(&tokens[2], "unexpected token after label"));
            }
            out.push(Block {
                header: first.clone(),
                label: tokens.get(1).map(|t| t.text.clone()),
                stmts: Vec::new(),
            });
        } else {
            match out.last_mut() {
                Some(b) => b.stmts.push(Stmt { tokens }),
                None => return Err(err(first, format!("expected a block header, found `{}`", first.text))),
            }
        }
    }
    Ok(out)
}

fn index(t: &Token, bound: usize) -> Result<usize> {
    let v: usize = t
        .text
        .parse()
        .map_err(|_| err(t, format!("expected an index, found `{}`", t.text)))?;
    if v == 0 || v > bound {
        return Err(err(t, format!("index {v} out of range 1..={bound}")));
    }
    Ok(v - 1)
}

fn count(t: &Token) -> Result<usize> {
    t.text
        .parse()
        .map_err(|_| err(t, format!("expected a dimension, found `{}`", t.text)))
}

fn scalar(t: &Token) -> Result<Q> {
    parse_rational(&t.text).ok_or_else(|| err(t, format!("expected a rational, found `{}`", t.text)))
}

fn arity(s: &Stmt, n: usize) -> Result<()> {
    if s.tokens.len() != n {
        let t = s.tokens.get(n).unwrap_or(&s.tokens[s.tokens.len() - 1]);
        return Err(err(t, format!("`{}` takes {} arguments", s.tokens[0].text, n - 1)));
    }
    Ok(())
}

/// Reads the `dim` statement; it must come first in the block.
fn dims_of(b: &Block, max: usize) -> Result<Vec<usize>> {
    let s = b
        .stmts
        .first()
        .ok_or_else(|| err(&b.header, "block is missing `dim`"))?;
    if s.tokens[0].text != "dim" {
        return Err(err(&s.tokens[0], "first statement must be `dim`"));
    }
    if s.tokens.len() < 2 || s.tokens.len() > max + 1 {
        return Err(err(&s.tokens[0], format!("`dim` takes 1 to {max} arguments")));
    }
    s.tokens[1..].iter().map(count).collect()
}

fn expect_header<'a>(blocks: &'a [Block], kinds: &[&str], what: &str) -> Result<&'a Block> {
    blocks
        .iter()
        .find(|b| kinds.contains(&b.header.text.as_str()))
        .ok_or_else(|| Error::Parse {
            line: 1,
            column: 1,
            message: format!("no {what} block found"),
        })
}

fn dialgebra_from_block(b: &Block) -> Result<Dialgebra<Q>> {
    let n = dims_of(b, 1)?[0];
    let mut left = Tensor3::square(n);
    let mut right = Tensor3::square(n);
    let mut alpha = Matrix::zeros(n, n);
    let mut beta = Matrix::zeros(n, n);
    for s in &b.stmts[1..] {
        let kw = &s.tokens[0];
        match kw.text.as_str() {
            "left" | "right" => {
                arity(s, 5)?;
                let (i, j, k) = (index(&s.tokens[1], n)?, index(&s.tokens[2], n)?, index(&s.tokens[3], n)?);
                let v = scalar(&s.tokens[4])?;
                let t = if kw.text == "left" { &mut left } else { &mut right };
                t.add_to(i, j, k, v);
            }
            "alpha" | "beta" => {
                arity(s, 4)?;
                let (j, k) = (index(&s.tokens[1], n)?, index(&s.tokens[2], n)?);
                let v = scalar(&s.tokens[3])?;
                let m = if kw.text == "alpha" { &mut alpha } else { &mut beta };
                m.add_to(k, j, v);
            }
            other => return Err(err(kw, format!("unknown statement `{other}` in dialgebra block"))),
        }
    }
    let label = b.label.clone().unwrap_or_else(|| "D".to_string());
    Dialgebra::new_unchecked(label, left, right, alpha, beta)
}

/// The first `dialgebra` block. Structure maps are not required to commute;
/// `check` reports that.
pub fn parse_dialgebra(text: &str) -> Result<Dialgebra<Q>> {
    let bs = blocks(text)?;
    dialgebra_from_block(expect_header(&bs, &["dialgebra"], "dialgebra")?)
}

pub fn parse_dialgebras(text: &str) -> Result<Vec<Dialgebra<Q>>> {
    blocks(text)?
        .iter()
        .filter(|b| b.header.text == "dialgebra")
        .map(dialgebra_from_block)
        .collect()
}

fn operator_from_block(b: &Block) -> Result<LinearOperator<Q>> {
    let d = dims_of(b, 2)?;
    let (rows, cols) = (d[0], *d.get(1).unwrap_or(&d[0]));
    let mut m = Matrix::zeros(rows, cols);
    for s in &b.stmts[1..] {
        let kw = &s.tokens[0];
        if kw.text != "entry" {
            return Err(err(kw, format!("unknown statement `{}` in operator block", kw.text)));
        }
        arity(s, 4)?;
        let (i, j) = (index(&s.tokens[1], rows)?, index(&s.tokens[2], cols)?);
        m.add_to(i, j, scalar(&s.tokens[3])?);
    }
    Ok(LinearOperator::new(b.label.clone().unwrap_or_else(|| "T".into()), m))
}

pub fn parse_operator(text: &str) -> Result<LinearOperator<Q>> {
    let bs = blocks(text)?;
    operator_from_block(expect_header(&bs, &["operator"], "operator")?)
}

pub fn parse_operators(text: &str) -> Result<Vec<LinearOperator<Q>>> {
    blocks(text)?
        .iter()
        .filter(|b| b.header.text == "operator")
        .map(operator_from_block)
        .collect()
}

pub fn parse_bracket(text: &str) -> Result<BracketAlgebra<Q>> {
    let bs = blocks(text)?;
    let b = expect_header(&bs, &["lie", "leibniz"], "lie or leibniz")?;
    let kind = if b.header.text == "lie" {
        BracketKind::Lie
    } else {
        BracketKind::Leibniz
    };
    let n = dims_of(b, 1)?[0];
    let mut t = Tensor3::square(n);
    let mut alpha = Matrix::zeros(n, n);
    let mut beta = Matrix::zeros(n, n);
    for s in &b.stmts[1..] {
        let kw = &s.tokens[0];
        match kw.text.as_str() {
            "bracket" => {
                arity(s, 5)?;
                let (i, j, k) = (index(&s.tokens[1], n)?, index(&s.tokens[2], n)?, index(&s.tokens[3], n)?);
                t.add_to(i, j, k, scalar(&s.tokens[4])?);
            }
            "alpha" | "beta" => {
                arity(s, 4)?;
                let (j, k) = (index(&s.tokens[1], n)?, index(&s.tokens[2], n)?);
                let m = if kw.text == "alpha" { &mut alpha } else { &mut beta };
                m.add_to(k, j, scalar(&s.tokens[3])?);
            }
            other => return Err(err(kw, format!("unknown statement `{other}` in bracket block"))),
        }
    }
    BracketAlgebra::new(b.label.clone().unwrap_or_else(|| "L".into()), kind, t, alpha, beta)
}

/// `module` block with `dim m` and `alpha`/`beta` lines; missing maps
/// default to the identity.
pub fn parse_module(text: &str) -> Result<BiHomModule<Q>> {
    let bs = blocks(text)?;
    let b = expect_header(&bs, &["module"], "module")?;
    let m = dims_of(b, 1)?[0];
    let mut maps: BTreeMap<&str, Matrix<Q>> = BTreeMap::new();
    for s in &b.stmts[1..] {
        let kw = &s.tokens[0];
        match kw.text.as_str() {
            "alpha" | "beta" => {
                arity(s, 4)?;
                let (j, k) = (index(&s.tokens[1], m)?, index(&s.tokens[2], m)?);
                let key = if kw.text == "alpha" { "alpha" } else { "beta" };
                maps.entry(key).or_insert_with(|| Matrix::zeros(m, m)).add_to(k, j, scalar(&s.tokens[3])?);
            }
            other => return Err(err(kw, format!("unknown statement `{other}` in module block"))),
        }
    }
    let a = maps.remove("alpha").unwrap_or_else(|| Matrix::identity(m));
    let b2 = maps.remove("beta").unwrap_or_else(|| Matrix::identity(m));
    BiHomModule::new(a, b2)
}

/// `cochains` block: `dim n m`, then `cochain 1|2 i j k v`.
pub fn parse_cochains(text: &str) -> Result<CochainPair<Q>> {
    let bs = blocks(text)?;
    let b = expect_header(&bs, &["cochains"], "cochains")?;
    let d = dims_of(b, 2)?;
    if d.len() != 2 {
        return Err(err(&b.stmts[0].tokens[0], "`dim` needs n and m"));
    }
    let (n, m) = (d[0], d[1]);
    let mut t = CochainPair::zero(n, m);
    for s in &b.stmts[1..] {
        let kw = &s.tokens[0];
        if kw.text != "cochain" {
            return Err(err(kw, format!("unknown statement `{}` in cochains block", kw.text)));
        }
        arity(s, 6)?;
        let which = index(&s.tokens[1], 2)?;
        let (i, j, k) = (index(&s.tokens[2], n)?, index(&s.tokens[3], n)?, index(&s.tokens[4], m)?);
        let v = scalar(&s.tokens[5])?;
        if which == 0 {
            t.theta1.add_to(i, j, k, v);
        } else {
            t.theta2.add_to(i, j, k, v);
        }
    }
    Ok(t)
}

/// Two `dialgebra` blocks (acted-on `L` first, acting `D` second) and an
/// `action` block of `mixact dl_l|ld_l|dl_r|ld_r i j k v` lines, where
/// `dl_*` maps `(x, a)` and `ld_*` maps `(a, x)`, with `x ∈ D`, `a ∈ L`.
pub fn parse_action(text: &str) -> Result<DialgebraAction<Q>> {
    let bs = blocks(text)?;
    let ds: Vec<&Block> = bs.iter().filter(|b| b.header.text == "dialgebra").collect();
    if ds.len() != 2 {
        return Err(Error::Parse {
            line: 1,
            column: 1,
            message: format!("an action file needs two dialgebra blocks, found {}", ds.len()),
        });
    }
    let l = dialgebra_from_block(ds[0])?;
    let d = dialgebra_from_block(ds[1])?;
    let (m, n) = (l.dim(), d.dim());
    let mut dl_l = Tensor3::zeros(n, m, m);
    let mut ld_l = Tensor3::zeros(m, n, m);
    let mut dl_r = Tensor3::zeros(n, m, m);
    let mut ld_r = Tensor3::zeros(m, n, m);
    let act = expect_header(&bs, &["action"], "action")?;
    for s in &act.stmts {
        let kw = &s.tokens[0];
        if kw.text != "mixact" {
            return Err(err(kw, format!("unknown statement `{}` in action block", kw.text)));
        }
        arity(s, 6)?;
        let kind = s.tokens[1].text.as_str();
        let (first, second) = match kind {
            "dl_l" | "dl_r" => (n, m),
            "ld_l" | "ld_r" => (m, n),
            _ => return Err(err(&s.tokens[1], format!("unknown action `{kind}`"))),
        };
        let (i, j, k) = (index(&s.tokens[2], first)?, index(&s.tokens[3], second)?, index(&s.tokens[4], m)?);
        let v = scalar(&s.tokens[5])?;
        let t = match kind {
            "dl_l" => &mut dl_l,
            "ld_l" => &mut ld_l,
            "dl_r" => &mut dl_r,
            _ => &mut ld_r,
        };
        t.add_to(i, j, k, v);
    }
    DialgebraAction::new_unchecked(l, d, dl_l, ld_l, dl_r, ld_r)
}

fn write_tensor<S: Scalar>(out: &mut String, kw: &str, t: &Tensor3<S>) {
    let (d1, d2, d3) = t.dims();
    for i in 0..d1 {
        for j in 0..d2 {
            for k in 0..d3 {
                let v = t.get(i, j, k);
                if !v.is_zero() {
                    let _ = writeln!(out, "{kw} {} {} {} {v}", i + 1, j + 1, k + 1);
                }
            }
        }
    }
}

fn write_map<S: Scalar>(out: &mut String, kw: &str, m: &Matrix<S>) {
    for j in 0..m.cols() {
        for k in 0..m.rows() {
            let v = m.get(k, j);
            if !v.is_zero() {
                let _ = writeln!(out, "{kw} {} {} {v}", j + 1, k + 1);
            }
        }
    }
}

fn safe_label(label: &str) -> String {
    let s: String = label.chars().map(|c| if c.is_whitespace() || c == '#' { '_' } else { c }).collect();
    if s.is_empty() {
        "D".into()
    } else {
        s
    }
}

pub fn write_dialgebra<S: Scalar>(d: &Dialgebra<S>) -> String {
    let mut out = format!("dialgebra {}\ndim {}\n", safe_label(d.label()), d.dim());
    write_tensor(&mut out, "left", d.left());
    write_tensor(&mut out, "right", d.right());
    write_map(&mut out, "alpha", d.alpha());
    write_map(&mut out, "beta", d.beta());
    out
}

pub fn write_operator<S: Scalar>(op: &LinearOperator<S>) -> String {
    let m = &op.matrix;
    let mut out = format!("operator {}\n", safe_label(&op.label));
    if m.is_square() {
        let _ = writeln!(out, "dim {}", m.rows());
    } else {
        let _ = writeln!(out, "dim {} {}", m.rows(), m.cols());
    }
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            let v = m.get(i, j);
            if !v.is_zero() {
                let _ = writeln!(out, "entry {} {} {v}", i + 1, j + 1);
            }
        }
    }
    out
}

pub fn write_bracket<S: Scalar>(l: &BracketAlgebra<S>) -> String {
    let mut out = format!("{} {}\ndim {}\n", l.kind().name(), safe_label(l.label()), l.dim());
    write_tensor(&mut out, "bracket", l.tensor());
    write_map(&mut out, "alpha", l.alpha());
    write_map(&mut out, "beta", l.beta());
    out
}

pub fn write_module<S: Scalar>(m: &BiHomModule<S>) -> String {
    let mut out = format!("module\ndim {}\n", m.dim());
    write_map(&mut out, "alpha", m.alpha_m());
    write_map(&mut out, "beta", m.beta_m());
    out
}

pub fn write_cochains<S: Scalar>(t: &CochainPair<S>) -> String {
    let (n, m) = t.shape();
    let mut out = format!("cochains\ndim {n} {m}\n");
    for (w, th) in [(1, &t.theta1), (2, &t.theta2)] {
        write_tensor(&mut out, &format!("cochain {w}"), th);
    }
    out
}

pub fn write_action<S: Scalar>(a: &DialgebraAction<S>) -> String {
    let mut out = write_dialgebra(a.acted_on());
    out.push('\n');
    out.push_str(&write_dialgebra(a.acting()));
    out.push_str("\naction\n");
    for (kw, t) in [
        ("mixact dl_l", a.dl_left()),
        ("mixact ld_l", a.ld_left()),
        ("mixact dl_r", a.dl_right()),
        ("mixact ld_r", a.ld_right()),
    ] {
        write_tensor(&mut out, kw, t);
    }
    out
}

/// Reduces a rational structure into the target field, failing on
/// denominators divisible by the characteristic.
pub fn to_field<S: Scalar>(d: &Dialgebra<Q>) -> Result<Dialgebra<S>> {
    d.convert(S::from_rational)
        .ok_or_else(|| Error::InvalidArgument("a coefficient has no image in the chosen field".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{q, qi};

    const ALG3: &str = "# sample\ndialgebra alg3\ndim 2\nleft 1 2 1 1\nright 1 2 1 1\nright 2 1 1 1\nright 2 2 1 1\nalpha 2 1 1\nbeta 2 1 1\n";

    #[test]
    fn dialgebra_round_trip() {
        let d = parse_dialgebra(ALG3).unwrap();
        assert_eq!(d.left().get(0, 1, 0), &qi(1));
        assert_eq!(d.alpha().get(0, 1), &qi(1));
        assert_eq!(parse_dialgebra(&write_dialgebra(&d)).unwrap(), d);
    }

    #[test]
    fn errors_carry_positions() {
        let bad = "dialgebra x\ndim 2\nleft 1 3 1 1\n";
        assert_eq!(
            parse_dialgebra(bad),
            Err(Error::Parse {
                line: 3,
                column: 8,
                message: "index 3 out of range 1..=2".into()
            })
        );
        let bad = "dialgebra x\ndim 2\nleft 1 2 1 1/0\n";
        assert!(matches!(parse_dialgebra(bad), Err(Error::Parse { line: 3, column: 12, .. })));
        assert!(matches!(parse_dialgebra("left 1 1 1 1\n"), Err(Error::Parse { line: 1, column: 1, .. })));
    }

    #[test]
    fn other_formats_round_trip() {
        let op = LinearOperator::new("R", Matrix::from_rows(vec![vec![q(1, 2), qi(0)], vec![qi(3), qi(-1)]]));
        assert_eq!(parse_operator(&write_operator(&op)).unwrap(), op);
        let nu = LinearOperator::new("nu", Matrix::from_rows(vec![vec![qi(1), qi(2)]]));
        assert_eq!(parse_operator(&write_operator(&nu)).unwrap(), nu);
        let mut t = CochainPair::zero(2, 1);
        t.theta2.set(1, 0, 0, q(-2, 3));
        assert_eq!(parse_cochains(&write_cochains(&t)).unwrap(), t);
        let m = BiHomModule::new(Matrix::diagonal(&[qi(2)]), Matrix::identity(1)).unwrap();
        assert_eq!(parse_module(&write_module(&m)).unwrap(), m);
        let d = parse_dialgebra(ALG3).unwrap();
        let act = DialgebraAction::regular(d).unwrap();
        assert_eq!(parse_action(&write_action(&act)).unwrap(), act);
    }

    #[test]
    fn bracket_round_trip() {
        let mut t = Tensor3::square(2);
        t.set(0, 1, 1, qi(1));
        t.set(1, 0, 1, qi(-1));
        let l = BracketAlgebra::new("aff", BracketKind::Lie, t, Matrix::identity(2), Matrix::identity(2)).unwrap();
        assert_eq!(parse_bracket(&write_bracket(&l)).unwrap(), l);
    }
}
