//! Text format for Lie algebras.
//!
//! ```text
//! dim 3
//! basis e1 e2 e3        # optional, defaults to X1..Xn
//! brackets              # optional section marker
//! [e1, e2] = e3
//! ```
//!
//! or, dually, a Maurer-Cartan block:
//!
//! ```text
//! dim 5
//! mc
//! d w1 = w2^w3 + w1^w4
//! dw4 = dw5 = 0
//! ```
//!
//! Statements are separated by newlines or `;`, and `#` starts a comment.
//! Coefficients are integers or fractions `p/q`. The 1-form dual to a basis
//! label `X<s>` is `w<s>` (or `ω<s>`), dual to `Z<s>` is `eta<s>` (or
//! `η<s>`), and dual to any other label `L` is `w(L)`. A bare `w<k>` with no
//! matching label refers to the k-th basis element.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::algebra::{AlgebraError, LieAlgebra};
use crate::exterior::{dual_name, format_mc_system, maurer_cartan, Form, FormStyle};
use crate::linalg::{is_zero_vec, zero_vec, QMatrix, Rational};
use crate::poly::{fmt_rational, Polynomial};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}, column {column}: {message}")]
pub struct SyntaxError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IoError {
    #[error(transparent)]
    Syntax(#[from] SyntaxError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("differential of {0} has non-constant coefficients")]
    NonConstant(usize),
    #[error("expected {expected} forms, got {got}")]
    FormCount { expected: usize, got: usize },
    #[error("expected 2-forms")]
    NotTwoForms,
}

/// Renders `sum c_i L_i` as `L1 + 2*L3 - 1/2*L4`, or `0`.
pub fn format_combination<'a>(terms: impl IntoIterator<Item = (&'a Rational, &'a str)>) -> String {
    let mut out = String::new();
    for (c, name) in terms {
        if c.is_zero() {
            continue;
        }
        let neg = c < &Rational::zero();
        let abs = if neg { -c.clone() } else { c.clone() };
        out.push_str(match (out.is_empty(), neg) {
            (true, true) => "-",
            (true, false) => "",
            (false, true) => " - ",
            (false, false) => " + ",
        });
        if !abs.is_one() {
            out.push_str(&fmt_rational(&abs));
            out.push('*');
        }
        out.push_str(name);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn default_labels(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("X{i}")).collect()
}

/// Bracket-form text that [`parse_algebra`] reads back to the same value.
pub fn emit_algebra(g: &LieAlgebra) -> String {
    let mut out = format!("dim {}\n", g.dim());
    if g.labels() != default_labels(g.dim()).as_slice() {
        out.push_str(&format!("basis {}\n", g.labels().join(" ")));
    }
    out.push_str("brackets\n");
    for (&(i, j), v) in g.constants() {
        out.push_str(&format!("[{}, {}] = {}\n", g.label(i), g.label(j), g.format_vector(v)));
    }
    out
}

/// Maurer-Cartan text that [`parse_algebra`] reads back to the same value.
pub fn emit_mc(g: &LieAlgebra) -> String {
    let mut out = format!("dim {}\n", g.dim());
    if g.labels() != default_labels(g.dim()).as_slice() {
        out.push_str(&format!("basis {}\n", g.labels().join(" ")));
    }
    out.push_str("mc\n");
    for line in format_mc_system(g, FormStyle::Ascii) {
        out.push_str(&line);
        out.push('\n');
    }
    out
}

/// Structure constants from differentials via `dw(X, Y) = -w([X, Y])`.
pub fn mc_to_brackets(forms: &[Form], labels: Option<Vec<String>>) -> Result<LieAlgebra, IoError> {
    let n = forms.len();
    let labels = labels.unwrap_or_else(|| default_labels(n));
    let mut g = LieAlgebra::from_labels(&labels)?;
    if labels.len() != n {
        return Err(IoError::FormCount {
            expected: labels.len(),
            got: n,
        });
    }
    let mut table: BTreeMap<(usize, usize), Vec<Rational>> = BTreeMap::new();
    for (k, f) in forms.iter().enumerate() {
        if f.is_zero() {
            continue;
        }
        if f.degree() != 2 || f.ambient() != n {
            return Err(IoError::NotTwoForms);
        }
        for (idx, p) in f.terms() {
            let c = p.as_constant().ok_or(IoError::NonConstant(k))?;
            table.entry((idx[0], idx[1])).or_insert_with(|| zero_vec(n))[k] = -c;
        }
    }
    for ((i, j), v) in table {
        g.set_bracket(i, j, v)?;
    }
    Ok(g)
}

pub fn brackets_to_mc(g: &LieAlgebra) -> Vec<Form> {
    maurer_cartan(g)
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Ident(String),
    Num(Rational),
    Sym(char),
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    column: usize,
}

struct Stmt {
    line: usize,
    column: usize,
    tokens: Vec<Token>,
}

fn is_ident_start(c: char) -> bool {
    c.is_alphabetic() || c == '_'
}

fn is_ident_char(c: char) -> bool {
    c.is_alphanumeric() || c == '_' || c == '\''
}

fn lex(line: usize, start_col: usize, text: &str) -> Result<Vec<Token>, SyntaxError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    let err = |col: usize, message: String| SyntaxError { line, column: col, message };
    while i < chars.len() {
        let c = chars[i];
        let column = start_col + i;
        if c.is_whitespace() {
            i += 1;
        } else if is_ident_start(c) {
            let s = i;
            while i < chars.len() && is_ident_char(chars[i]) {
                i += 1;
            }
            out.push(Token {
                tok: Tok::Ident(chars[s..i].iter().collect()),
                column,
            });
        } else if c.is_ascii_digit() {
            let s = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let num: BigInt = chars[s..i].iter().collect::<String>().parse().expect("digits");
            let mut value = Rational::from_integer(num);
            if i + 1 < chars.len() && chars[i] == '/' && chars[i + 1].is_ascii_digit() {
                i += 1;
                let s = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let den: BigInt = chars[s..i].iter().collect::<String>().parse().expect("digits");
                if den.is_zero() {
                    return Err(err(column, "zero denominator".into()));
                }
                value /= Rational::from_integer(den);
            }
            out.push(Token { tok: Tok::Num(value), column });
        } else if "[],=+-*^∧()".contains(c) {
            out.push(Token { tok: Tok::Sym(c), column });
            i += 1;
        } else {
            return Err(err(column, format!("unexpected character `{c}`")));
        }
    }
    Ok(out)
}

fn split_statements(text: &str) -> Result<Vec<Stmt>, SyntaxError> {
    let mut stmts = Vec::new();
    for (ln, raw) in text.lines().enumerate() {
        let line = ln + 1;
        let content = raw.split('#').next().unwrap_or("");
        let mut col = 1;
        for piece in content.split(';') {
            let tokens = lex(line, col, piece)?;
            if let Some(first) = tokens.first() {
                stmts.push(Stmt {
                    line,
                    column: first.column,
                    tokens,
                });
            }
            col += piece.chars().count() + 1;
        }
    }
    Ok(stmts)
}

struct Cursor<'a> {
    stmt: &'a Stmt,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(stmt: &'a Stmt) -> Self {
        Cursor { stmt, pos: 0 }
    }

    fn peek(&self) -> Option<&'a Tok> {
        self.stmt.tokens.get(self.pos).map(|t| &t.tok)
    }

    fn column(&self) -> usize {
        self.stmt
            .tokens
            .get(self.pos)
            .map_or_else(|| self.stmt.tokens.last().map_or(self.stmt.column, |t| t.column + 1), |t| t.column)
    }

    fn error(&self, message: impl Into<String>) -> SyntaxError {
        SyntaxError {
            line: self.stmt.line,
            column: self.column(),
            message: message.into(),
        }
    }

    fn next(&mut self) -> Option<&'a Tok> {
        let t = self.peek();
        self.pos += 1;
        t
    }

    fn at_end(&self) -> bool {
        self.pos >= self.stmt.tokens.len()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), SyntaxError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(format!("expected `{c}`")))
        }
    }

    fn ident(&mut self, what: &str) -> Result<&'a str, SyntaxError> {
        match self.peek() {
            Some(Tok::Ident(s)) => {
                self.pos += 1;
                Ok(s)
            }
            _ => Err(self.error(format!("expected {what}"))),
        }
    }

    fn finish(&self) -> Result<(), SyntaxError> {
        if self.at_end() {
            Ok(())
        } else {
            Err(self.error("unexpected trailing input"))
        }
    }

    /// `[+|-] [c [*]] item { (+|-) [c [*]] item }`, or a lone `0`.
    fn linear<T>(&mut self, mut item: impl FnMut(&mut Self) -> Result<T, SyntaxError>) -> Result<Vec<(Rational, T)>, SyntaxError> {
        let mut terms = Vec::new();
        if matches!(self.peek(), Some(Tok::Num(c)) if c.is_zero()) && self.stmt.tokens.len() == self.pos + 1 {
            self.pos += 1;
            return Ok(terms);
        }
        let mut first = true;
        loop {
            let mut sign = Rational::one();
            if self.eat('-') {
                sign = -sign;
            } else if !self.eat('+') && !first {
                return Err(self.error("expected `+` or `-`"));
            }
            first = false;
            if let Some(Tok::Num(c)) = self.peek() {
                self.pos += 1;
                sign *= c.clone();
                self.eat('*');
            }
            terms.push((sign, item(self)?));
            if self.at_end() {
                return Ok(terms);
            }
        }
    }
}

#[derive(PartialEq, Eq, Clone, Copy)]
enum Mode {
    Unset,
    Brackets,
    Mc,
}

struct Builder {
    labels: Option<Vec<String>>,
    labels_explicit: bool,
    mode: Mode,
    // value, line, and whether it was written with the smaller index first
    brackets: BTreeMap<(usize, usize), (Vec<Rational>, usize, bool)>,
    differentials: BTreeMap<usize, (Form, usize)>,
}

impl Builder {
    fn dim(&self) -> usize {
        self.labels.as_ref().map_or(0, Vec::len)
    }

    fn require_dim(&self, cur: &Cursor) -> Result<usize, SyntaxError> {
        self.labels.as_ref().map(Vec::len).ok_or_else(|| cur.error("`dim` must come first"))
    }

    fn set_mode(&mut self, mode: Mode, cur: &Cursor) -> Result<(), SyntaxError> {
        if self.mode != Mode::Unset && self.mode != mode {
            return Err(cur.error("bracket and Maurer-Cartan statements cannot be mixed"));
        }
        self.mode = mode;
        Ok(())
    }

    fn basis_index(&self, cur: &Cursor, name: &str) -> Result<usize, SyntaxError> {
        self.labels
            .as_ref()
            .and_then(|ls| ls.iter().position(|l| l == name))
            .ok_or_else(|| cur.error(format!("unknown basis element `{name}`")))
    }

    /// Resolves a 1-form name to a basis index.
    fn form_index(&self, cur: &mut Cursor, name: &str) -> Result<usize, SyntaxError> {
        let labels = self.labels.as_ref().expect("dim checked");
        let (kind, rest) = if let Some(r) = name.strip_prefix("eta").or_else(|| name.strip_prefix('η')) {
            ('Z', r)
        } else if let Some(r) = name.strip_prefix('w').or_else(|| name.strip_prefix('ω')) {
            ('X', r)
        } else {
            return Err(cur.error(format!("`{name}` is not a 1-form name")));
        };
        if rest.is_empty() && kind == 'X' && cur.eat('(') {
            let label = cur.ident("basis label")?;
            cur.expect(')')?;
            return self.basis_index(cur, label);
        }
        let label = format!("{kind}{rest}");
        if let Some(i) = labels.iter().position(|l| *l == label) {
            return Ok(i);
        }
        if kind == 'X' {
            if let Ok(k) = rest.parse::<usize>() {
                if (1..=labels.len()).contains(&k) {
                    return Ok(k - 1);
                }
            }
        }
        Err(cur.error(format!("no basis element dual to `{name}`")))
    }

    fn statement(&mut self, stmt: &Stmt) -> Result<(), SyntaxError> {
        let mut cur = Cursor::new(stmt);
        match cur.peek() {
            Some(Tok::Ident(kw)) if kw == "dim" => {
                cur.next();
                if self.labels.is_some() {
                    return Err(cur.error("dimension declared twice"));
                }
                let n = match cur.next() {
                    Some(Tok::Num(n)) if n.is_integer() && *n > Rational::zero() && *n <= Rational::from_integer(64.into()) => {
                        n.to_integer().to_string().parse::<usize>().expect("small")
                    }
                    _ => {
                        cur.pos -= 1;
                        return Err(cur.error("expected a dimension between 1 and 64"));
                    }
                };
                cur.finish()?;
                self.labels = Some(default_labels(n));
            }
            Some(Tok::Ident(kw)) if kw == "basis" => {
                cur.next();
                if self.labels_explicit {
                    return Err(cur.error("basis declared twice"));
                }
                if !self.brackets.is_empty() || !self.differentials.is_empty() {
                    return Err(cur.error("basis must precede brackets"));
                }
                let mut labels = Vec::new();
                while !cur.at_end() {
                    labels.push(cur.ident("basis label")?.to_string());
                    cur.eat(',');
                }
                if let Some(n) = self.labels.as_ref().map(Vec::len) {
                    if n != labels.len() {
                        return Err(cur.error(format!("{} labels for dimension {n}", labels.len())));
                    }
                }
                if let Err(e) = LieAlgebra::from_labels(&labels) {
                    return Err(SyntaxError {
                        line: stmt.line,
                        column: stmt.column,
                        message: e.to_string(),
                    });
                }
                self.labels = Some(labels);
                self.labels_explicit = true;
            }
            Some(Tok::Ident(kw)) if kw == "brackets" && stmt.tokens.len() == 1 => {
                self.set_mode(Mode::Brackets, &cur)?;
            }
            Some(Tok::Ident(kw)) if kw == "mc" && stmt.tokens.len() == 1 => {
                self.set_mode(Mode::Mc, &cur)?;
            }
            Some(Tok::Sym('[')) => self.bracket_statement(&mut cur)?,
            Some(Tok::Ident(kw)) if kw.starts_with('d') => self.mc_statement(&mut cur)?,
            _ => return Err(cur.error("expected `dim`, `basis`, a bracket or a differential")),
        }
        Ok(())
    }

    fn bracket_statement(&mut self, cur: &mut Cursor) -> Result<(), SyntaxError> {
        let n = self.require_dim(cur)?;
        self.set_mode(Mode::Brackets, cur)?;
        let line = cur.stmt.line;
        cur.expect('[')?;
        let a_name = cur.ident("basis label")?;
        let a = self.basis_index(cur, a_name)?;
        cur.expect(',')?;
        let b_name = cur.ident("basis label")?;
        let b = self.basis_index(cur, b_name)?;
        cur.expect(']')?;
        cur.expect('=')?;
        let terms = cur.linear(|c| {
            let name = c.ident("basis label")?;
            self.basis_index(c, name)
        })?;
        let mut value = zero_vec(n);
        for (c, k) in terms {
            value[k] += c;
        }
        if a == b {
            if !is_zero_vec(&value) {
                return Err(cur.error(format!("[{a_name}, {a_name}] must vanish")));
            }
            return Ok(());
        }
        let (key, stored) = if a < b {
            ((a, b), value)
        } else {
            ((b, a), value.into_iter().map(|c| -c).collect())
        };
        match self.brackets.get(&key) {
            None => {
                self.brackets.insert(key, (stored, line, a < b));
            }
            Some((prev, prev_line, forward)) => {
                let reversed = *forward != (a < b);
                let msg = if prev == &stored && reversed {
                    return Ok(());
                } else if reversed {
                    format!("inconsistent antisymmetry: [{b_name}, {a_name}] declared on line {prev_line} disagrees")
                } else {
                    format!("bracket [{a_name}, {b_name}] already declared on line {prev_line}")
                };
                return Err(SyntaxError {
                    line,
                    column: cur.stmt.column,
                    message: msg,
                });
            }
        }
        Ok(())
    }

    fn mc_statement(&mut self, cur: &mut Cursor) -> Result<(), SyntaxError> {
        let n = self.require_dim(cur)?;
        self.set_mode(Mode::Mc, cur)?;
        let line = cur.stmt.line;
        let mut targets = Vec::new();
        // one or more `d<form> =` prefixes
        loop {
            let start = cur.pos;
            let Some(Tok::Ident(word)) = cur.peek() else { break };
            let Some(rest) = word.strip_prefix('d') else { break };
            cur.next();
            let name = if rest.is_empty() { cur.ident("1-form name")?.to_string() } else { rest.to_string() };
            let idx = self.form_index(cur, &name)?;
            if !cur.eat('=') {
                cur.pos = start;
                if targets.is_empty() {
                    return Err(cur.error("expected `d<form> = ...`"));
                }
                break;
            }
            targets.push(idx);
        }
        if targets.is_empty() {
            return Err(cur.error("expected a differential"));
        }
        if cur.at_end() {
            return Err(cur.error("missing right-hand side"));
        }
        let terms = {
            cur.linear(|c| {
                let first = c.ident("1-form name")?;
                let i = self.form_index(c, first)?;
                if !(c.eat('^') || c.eat('∧')) {
                    return Err(c.error("expected `^`"));
                }
                let second = c.ident("1-form name")?;
                let j = self.form_index(c, second)?;
                Ok((i, j))
            })?
        };
        let mut form = Form::zero(2, n, &crate::poly::Vars::constants());
        for (c, (i, j)) in terms {
            let term = Form::monomial(n, &[i, j], Polynomial::from_rational(c)).map_err(|e| cur.error(e.to_string()))?;
            form = form.add(&term).expect("same space");
        }
        for k in targets {
            if let Some((_, prev)) = self.differentials.get(&k) {
                return Err(SyntaxError {
                    line,
                    column: cur.stmt.column,
                    message: format!("differential of {} already given on line {prev}", dual_name(&self.labels.as_ref().unwrap()[k], FormStyle::Ascii)),
                });
            }
            self.differentials.insert(k, (form.clone(), line));
        }
        Ok(())
    }
}

/// Parses the text format and checks the Jacobi identity.
pub fn parse_algebra(text: &str) -> Result<LieAlgebra, IoError> {
    let stmts = split_statements(text)?;
    let mut b = Builder {
        labels: None,
        labels_explicit: false,
        mode: Mode::Unset,
        brackets: BTreeMap::new(),
        differentials: BTreeMap::new(),
    };
    for s in &stmts {
        b.statement(s)?;
    }
    let Some(labels) = b.labels.clone() else {
        return Err(SyntaxError {
            line: 1,
            column: 1,
            message: "missing `dim` declaration".into(),
        }
        .into());
    };
    let n = b.dim();
    let g = if b.mode == Mode::Mc {
        let consts = crate::poly::Vars::constants();
        let forms: Vec<Form> = (0..n)
            .map(|k| b.differentials.get(&k).map_or_else(|| Form::zero(2, n, &consts), |(f, _)| f.clone()))
            .collect();
        mc_to_brackets(&forms, Some(labels))?
    } else {
        let mut g = LieAlgebra::from_labels(&labels)?;
        for (&(i, j), (v, _, _)) in &b.brackets {
            g.set_bracket(i, j, v.clone())?;
        }
        g
    };
    Ok(g.validated()?)
}

/// A square matrix, either `diag:1,1,-1` or rows separated by newlines or
/// `;` with entries separated by spaces or commas.
pub fn parse_matrix(text: &str) -> Result<QMatrix, SyntaxError> {
    let text = text.trim();
    let entry = |s: &str, line: usize| -> Result<Rational, SyntaxError> {
        let s = s.trim();
        let (neg, body) = match s.strip_prefix('-') {
            Some(b) => (true, b),
            None => (false, s.strip_prefix('+').unwrap_or(s)),
        };
        let toks = lex(line, 1, body)?;
        let v = match toks.as_slice() {
            [Token { tok: Tok::Num(v), .. }] => v.clone(),
            _ => {
                return Err(SyntaxError {
                    line,
                    column: 1,
                    message: format!("`{s}` is not a rational number"),
                })
            }
        };
        Ok(if neg { -v } else { v })
    };
    if let Some(body) = text.strip_prefix("diag:") {
        let entries = body.split(',').map(|s| entry(s, 1)).collect::<Result<Vec<_>, _>>()?;
        return Ok(QMatrix::diagonal(&entries));
    }
    let mut rows = Vec::new();
    for (ln, raw) in text.split(['\n', ';']).enumerate() {
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let row = content
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|s| !s.is_empty())
            .map(|s| entry(s, ln + 1))
            .collect::<Result<Vec<_>, _>>()?;
        rows.push(row);
    }
    let n = rows.len();
    if n == 0 || rows.iter().any(|r| r.len() != n) {
        return Err(SyntaxError {
            line: 1,
            column: 1,
            message: "matrix must be square and non-empty".into(),
        });
    }
    Ok(QMatrix::from_rows(rows).expect("rectangular"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::linalg::{frac, q};
    use crate::random::random_solvable;

    #[test]
    fn parses_inline_heisenberg() {
        let g = parse_algebra("dim 3; [X1,X2]=X3").unwrap();
        let mut h = catalog::heisenberg_h1();
        h.set_labels(vec!["X1".into(), "X2".into(), "X3".into()]).unwrap();
        assert_eq!(g, h);
    }

    #[test]
    fn rejects_inconsistent_antisymmetry() {
        let e = parse_algebra("dim 2; [X1,X2]=X2; [X2,X1]=X2").unwrap_err();
        assert!(e.to_string().contains("inconsistent antisymmetry"), "{e}");
        // a consistent restatement is fine
        assert!(parse_algebra("dim 2; [X1,X2]=X2; [X2,X1]=-X2").is_ok());
        let e = parse_algebra("dim 2\n[X1,X2]=X2\n[X1,X2]=X2").unwrap_err();
        assert!(e.to_string().contains("already declared on line 2"), "{e}");
    }

    #[test]
    fn syntax_errors_carry_position() {
        let e = parse_algebra("dim 3\n[X1, X2] = X4").unwrap_err();
        assert_eq!(
            e,
            IoError::Syntax(SyntaxError {
                line: 2,
                column: 13,
                message: "unknown basis element `X4`".into()
            })
        );
        assert!(matches!(parse_algebra("[X1,X2]=X3"), Err(IoError::Syntax(_))));
        assert!(matches!(parse_algebra("dim 3; [X1,X2]=X3 $"), Err(IoError::Syntax(SyntaxError { column: 19, .. }))));
    }

    #[test]
    fn jacobi_failures_surface() {
        let e = parse_algebra("dim 3; [X1,X2]=X1; [X1,X3]=X2").unwrap_err();
        assert!(matches!(e, IoError::Algebra(AlgebraError::Jacobi(_))));
    }

    #[test]
    fn fractions_and_coefficients() {
        let g = parse_algebra("dim 2; [X1,X2] = 1/2*X2").unwrap();
        assert_eq!(g.structure_constant(0, 1, 1), frac(1, 2));
        let g = parse_algebra("dim 3; [X1,X2] = -2 X3; [X1, X3] = 0").unwrap();
        assert_eq!(g.structure_constant(0, 1, 2), q(-2));
    }

    #[test]
    fn mc_block_reproduces_remark_algebra() {
        let text = "dim 5\nmc\nd w1 = w2^w3 + w1^w4\nd w2 = w2^w4 - w2^w5\nd w3 = w3^w5\nd w4 = d w5 = 0\n";
        assert_eq!(parse_algebra(text).unwrap(), catalog::remark_5d());
    }

    #[test]
    fn mc_and_brackets_are_inverse() {
        let mc = parse_algebra("dim 3; mc; dw3 = -w1^w2").unwrap();
        let br = parse_algebra("dim 3; [X1,X2] = X3").unwrap();
        assert_eq!(mc, br);
        let zero: Vec<Form> = brackets_to_mc(&catalog::abelian(3));
        assert!(mc_to_brackets(&zero, None).unwrap().is_abelian());
        for e in catalog::listed() {
            let g = e.algebra;
            let back = mc_to_brackets(&brackets_to_mc(&g), Some(g.labels().to_vec())).unwrap();
            assert_eq!(back, g, "{}", e.name);
        }
    }

    #[test]
    fn round_trips_catalog_and_random() {
        for e in catalog::listed() {
            assert_eq!(parse_algebra(&emit_algebra(&e.algebra)).unwrap(), e.algebra, "{}", e.name);
            assert_eq!(parse_algebra(&emit_mc(&e.algebra)).unwrap(), e.algebra, "{}", e.name);
        }
        for seed in 0..100 {
            let g = random_solvable(seed, 2 + (seed as usize % 6));
            assert_eq!(parse_algebra(&emit_algebra(&g)).unwrap(), g);
            assert_eq!(parse_algebra(&emit_mc(&g)).unwrap(), g);
        }
    }

    #[test]
    fn remark_emits_expected_text() {
        let text = emit_mc(&catalog::remark_5d());
        assert_eq!(text, "dim 5\nmc\ndw1 = w2^w3 + w1^w4\ndw2 = w2^w4 - w2^w5\ndw3 = w3^w5\ndw4 = dw5 = 0\n");
    }

    #[test]
    fn matrices() {
        let d = parse_matrix("diag:1,1,-1,-1").unwrap();
        assert_eq!(d, QMatrix::diagonal(&[q(1), q(1), q(-1), q(-1)]));
        let m = parse_matrix("0 1\n1 0").unwrap();
        assert_eq!(m.get(0, 1), &q(1));
        let m = parse_matrix("1/2, -1; 0, 1").unwrap();
        assert_eq!(m.get(0, 0), &frac(1, 2));
        assert!(parse_matrix("1 2 3").is_err());
    }

    #[test]
    fn combination_format() {
        let v = [q(1), q(0), q(2), frac(-1, 2)];
        let names = ["A", "B", "C", "D"];
        assert_eq!(format_combination(v.iter().zip(names)), "A + 2*C - 1/2*D");
        assert_eq!(format_combination([(&q(-1), "A")]), "-A");
        assert_eq!(format_combination(std::iter::empty()), "0");
    }
}
