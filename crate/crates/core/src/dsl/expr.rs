//! Recursive-descent parser for polynomial expressions.
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor (('*'|'/') factor)*       // '/' only by a nonzero constant
//! factor := atom ('^' INT)?
//! atom   := INT | IDENT | '(' expr ')' | '-' factor
//! ```

use std::sync::Arc;

use num_bigint::BigInt;

use super::lexer::{tokenize, Tok, Token};
use crate::error::DslError;
use crate::poly::{Poly, Rat, VarTable};

pub(crate) struct Cursor<'a> {
    pub toks: &'a [Token],
    pub pos: usize,
}

impl<'a> Cursor<'a> {
    pub fn new(toks: &'a [Token]) -> Self {
        Cursor { toks, pos: 0 }
    }

    pub fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    pub fn here(&self) -> &Token {
        &self.toks[self.pos]
    }

    pub fn bump(&mut self) -> &Token {
        let t = &self.toks[self.pos];
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    pub fn error(&self, msg: impl Into<String>) -> DslError {
        let t = self.here();
        DslError::at(t.line, t.col, msg)
    }

    pub fn is_sym(&self, s: &str) -> bool {
        matches!(self.peek(), Tok::Sym(x) if *x == s)
    }

    pub fn eat_sym(&mut self, s: &str) -> bool {
        if self.is_sym(s) {
            self.bump();
            true
        } else {
            false
        }
    }

    pub fn expect_sym(&mut self, s: &str) -> Result<(), DslError> {
        if self.eat_sym(s) {
            Ok(())
        } else {
            Err(self.error(format!("expected `{s}`, found {}", describe(self.peek()))))
        }
    }

    pub fn expect_ident(&mut self) -> Result<String, DslError> {
        match self.peek().clone() {
            Tok::Ident(s) => {
                self.bump();
                Ok(s)
            }
            t => Err(self.error(format!("expected identifier, found {}", describe(&t)))),
        }
    }

    pub fn expect_keyword(&mut self, kw: &str) -> Result<(), DslError> {
        match self.peek() {
            Tok::Ident(s) if s == kw => {
                self.bump();
                Ok(())
            }
            t => Err(self.error(format!("expected `{kw}`, found {}", describe(t)))),
        }
    }

    pub fn expect_int(&mut self) -> Result<i64, DslError> {
        let neg = self.eat_sym("-");
        match self.peek().clone() {
            Tok::Int(s) => {
                let v: i64 = s.parse().map_err(|_| self.error("integer out of range"))?;
                self.bump();
                Ok(if neg { -v } else { v })
            }
            t => Err(self.error(format!("expected integer, found {}", describe(&t)))),
        }
    }
}

pub(crate) fn describe(t: &Tok) -> String {
    match t {
        Tok::Ident(s) => format!("`{s}`"),
        Tok::Int(s) => format!("`{s}`"),
        Tok::Sym(s) => format!("`{s}`"),
        Tok::Eof => "end of input".to_string(),
    }
}

/// Parses a polynomial in canonical or free-form text over `vars`.
pub fn parse_poly(vars: &Arc<VarTable>, src: &str) -> Result<Poly, DslError> {
    let toks = tokenize(src)?;
    let mut cur = Cursor::new(&toks);
    let p = parse_expr(&mut cur, vars)?;
    if *cur.peek() != Tok::Eof {
        return Err(cur.error(format!("unexpected {}", describe(cur.peek()))));
    }
    Ok(p)
}

/// Parses a rational constant such as `-3/4`.
pub fn parse_rat(src: &str) -> Result<Rat, DslError> {
    let empty = VarTable::main_only::<&str>(&[]).expect("empty table");
    let p = parse_poly(&empty, src)?;
    Ok(p.constant_term())
}

pub(crate) fn parse_expr(cur: &mut Cursor<'_>, vars: &Arc<VarTable>) -> Result<Poly, DslError> {
    let mut acc = if cur.eat_sym("-") {
        -parse_term(cur, vars)?
    } else {
        cur.eat_sym("+");
        parse_term(cur, vars)?
    };
    loop {
        if cur.eat_sym("+") {
            acc = &acc + &parse_term(cur, vars)?;
        } else if cur.eat_sym("-") {
            acc = &acc - &parse_term(cur, vars)?;
        } else {
            return Ok(acc);
        }
    }
}

fn parse_term(cur: &mut Cursor<'_>, vars: &Arc<VarTable>) -> Result<Poly, DslError> {
    let mut acc = parse_factor(cur, vars)?;
    loop {
        if cur.eat_sym("*") {
            acc = &acc * &parse_factor(cur, vars)?;
        } else if cur.is_sym("/") {
            let (line, col) = (cur.here().line, cur.here().col);
            cur.bump();
            let d = parse_factor(cur, vars)?;
            if !d.is_constant() || d.is_zero() {
                return Err(DslError::at(line, col, "division only by a nonzero constant"));
            }
            acc = acc.scale(&(Rat::from_integer(1.into()) / d.constant_term()));
        } else {
            return Ok(acc);
        }
    }
}

fn parse_factor(cur: &mut Cursor<'_>, vars: &Arc<VarTable>) -> Result<Poly, DslError> {
    let base = parse_atom(cur, vars)?;
    if cur.eat_sym("^") {
        match cur.peek().clone() {
            Tok::Int(s) => {
                let e: u32 = s.parse().map_err(|_| cur.error("exponent out of range"))?;
                cur.bump();
                return Ok(base.pow(e));
            }
            t => return Err(cur.error(format!("expected exponent, found {}", describe(&t)))),
        }
    }
    Ok(base)
}

fn parse_atom(cur: &mut Cursor<'_>, vars: &Arc<VarTable>) -> Result<Poly, DslError> {
    match cur.peek().clone() {
        Tok::Int(s) => {
            cur.bump();
            let n: BigInt = s.parse().expect("digits");
            Ok(Poly::constant(vars, Rat::from_integer(n)))
        }
        Tok::Ident(name) => match vars.index_of(&name) {
            Some(i) => {
                cur.bump();
                Ok(Poly::var(vars, i))
            }
            None => Err(cur.error(format!("unknown variable `{name}`"))),
        },
        Tok::Sym("(") => {
            cur.bump();
            let p = parse_expr(cur, vars)?;
            cur.expect_sym(")")?;
            Ok(p)
        }
        Tok::Sym("-") => {
            cur.bump();
            Ok(-parse_factor(cur, vars)?)
        }
        t => Err(cur.error(format!("expected a polynomial, found {}", describe(&t)))),
    }
}
