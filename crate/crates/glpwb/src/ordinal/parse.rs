//! Text syntax for ordinal terms.
//!
//! Grammar (whitespace insignificant):
//!
//! ```text
//! ord   ::= prod ('+' prod)*
//! prod  ::= atom ('*' nat)*
//! atom  ::= '0' | nat | 'w' ('^' atom)? | 'e' '[' ord ']' '(' ord ')'
//!         | 'l' '[' ord ']' '(' ord ')' | '(' ord ')'
//! ```
//!
//! Everything is evaluated while parsing, so non-canonical spellings like
//! `1+w` normalize instead of being rejected. `l[...]` applies the
//! hyperlogarithm on parse.

use super::{add, hyper_exp, hyper_log, mul, Ordinal};
use crate::{max_depth, Error};

pub fn parse_ordinal(text: &str) -> Result<Ordinal, Error> {
    let mut p = Parser::new(text);
    let ord = p.ordinal(0)?;
    p.skip_ws();
    if p.pos < p.chars.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(ord)
}

pub(crate) struct Parser {
    pub chars: Vec<char>,
    pub pos: usize,
    limit: usize,
}

impl Parser {
    pub fn new(text: &str) -> Self {
        Parser {
            chars: text.chars().collect(),
            pos: 0,
            limit: max_depth(),
        }
    }

    pub fn err(&self, msg: &str) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    pub fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    pub fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    pub fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    pub fn expect(&mut self, c: char) -> Result<(), Error> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.err(&format!("expected '{c}'")))
        }
    }

    /// Consumes a keyword if it is next (not followed by an identifier
    /// character).
    pub fn eat_word(&mut self, word: &str) -> bool {
        self.skip_ws();
        let end = self.pos + word.chars().count();
        if end > self.chars.len() {
            return false;
        }
        let next: String = self.chars[self.pos..end].iter().collect();
        if next != word {
            return false;
        }
        if let Some(c) = self.chars.get(end) {
            if c.is_alphanumeric() || *c == '_' {
                return false;
            }
        }
        self.pos = end;
        true
    }

    /// Parses a single atom-level ordinal (no top-level `+` or `*`).
    pub fn atom_ordinal(&mut self) -> Result<Ordinal, Error> {
        self.atom(0)
    }

    /// Consumes an alphanumeric identifier.
    pub fn identifier(&mut self) -> String {
        self.skip_ws();
        let start = self.pos;
        while self
            .chars
            .get(self.pos)
            .map(|c| c.is_alphanumeric() || *c == '_')
            .unwrap_or(false)
        {
            self.pos += 1;
        }
        self.chars[start..self.pos].iter().collect()
    }

    fn check_depth(&self, depth: usize) -> Result<(), Error> {
        if depth > self.limit {
            Err(self.err("recursion depth exceeded (see GLPWB_MAX_DEPTH)"))
        } else {
            Ok(())
        }
    }

    pub fn nat(&mut self) -> Result<u64, Error> {
        self.skip_ws();
        let start = self.pos;
        while self
            .chars
            .get(self.pos)
            .map(|c| c.is_ascii_digit())
            .unwrap_or(false)
        {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a number"));
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        s.parse()
            .map_err(|_| self.err("number does not fit in 64 bits"))
    }

    pub fn ordinal(&mut self, depth: usize) -> Result<Ordinal, Error> {
        self.check_depth(depth)?;
        let mut acc = self.product(depth)?;
        while self.eat('+') {
            let rhs = self.product(depth)?;
            acc = add(&acc, &rhs);
        }
        Ok(acc)
    }

    fn product(&mut self, depth: usize) -> Result<Ordinal, Error> {
        let mut acc = self.atom(depth)?;
        while self.eat('*') {
            let n = self.nat()?;
            acc = mul(&acc, &Ordinal::nat(n));
        }
        Ok(acc)
    }

    fn atom(&mut self, depth: usize) -> Result<Ordinal, Error> {
        self.check_depth(depth)?;
        match self.peek() {
            Some('w') => {
                self.pos += 1;
                if self.eat('^') {
                    let exp = self.atom(depth + 1)?;
                    Ok(exp.omega_pow())
                } else {
                    Ok(Ordinal::omega())
                }
            }
            Some('e') => {
                self.pos += 1;
                let (sup, arg) = self.bracket_pair(depth)?;
                Ok(hyper_exp(&sup, &arg))
            }
            Some('l') => {
                self.pos += 1;
                let (sup, arg) = self.bracket_pair(depth)?;
                Ok(hyper_log(&sup, &arg))
            }
            Some('(') => {
                self.pos += 1;
                let inner = self.ordinal(depth + 1)?;
                self.expect(')')?;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => Ok(Ordinal::nat(self.nat()?)),
            _ => Err(self.err("expected an ordinal term")),
        }
    }

    fn bracket_pair(&mut self, depth: usize) -> Result<(Ordinal, Ordinal), Error> {
        self.expect('[')?;
        let sup = self.ordinal(depth + 1)?;
        self.expect(']')?;
        self.expect('(')?;
        let arg = self.ordinal(depth + 1)?;
        self.expect(')')?;
        Ok((sup, arg))
    }
}

/// Canonical text for a term; `parse_ordinal(render(x)) == x`.
pub fn render(x: &Ordinal) -> String {
    match x {
        Ordinal::Zero => "0".to_string(),
        Ordinal::HypE(lam, arg) => format!("e[{}]({})", render(lam), render(arg)),
        Ordinal::Cnf(ts) => {
            let mut parts = Vec::with_capacity(ts.len());
            for (e, c) in ts {
                parts.push(render_term(e, *c));
            }
            parts.join("+")
        }
    }
}

fn render_term(exp: &Ordinal, coeff: u64) -> String {
    let base = if exp.is_zero() {
        return coeff.to_string();
    } else if exp.is_eps_like() {
        render(exp)
    } else if exp.as_nat() == Some(1) {
        "w".to_string()
    } else {
        let inner = render(exp);
        if needs_parens(exp) {
            format!("w^({inner})")
        } else {
            format!("w^{inner}")
        }
    };
    if coeff == 1 {
        base
    } else {
        format!("{base}*{coeff}")
    }
}

fn needs_parens(exp: &Ordinal) -> bool {
    if exp.as_nat().is_some() {
        return false;
    }
    match exp {
        Ordinal::Cnf(ts) => ts.len() > 1 || ts[0].1 > 1,
        _ => false,
    }
}
