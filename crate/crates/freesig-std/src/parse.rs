//! Polynomial expressions: `*`, `+`, `-`, `^`, parentheses, integer and rational
//! coefficients. Products keep their order.

use freesig_core::{Coefficient, Polynomial, Word};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{line}:{col}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseErrorKind {
    #[error("empty expression")]
    Empty,
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("malformed number `{0}`")]
    BadNumber(String),
    #[error("unexpected `{0}`")]
    Unexpected(String),
    #[error("unexpected end of input")]
    UnexpectedEnd,
    #[error("exponent must be a nonnegative integer")]
    BadExponent,
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(String),
    Ident(String),
    Op(char),
}

struct Lexer {
    toks: Vec<(Tok, usize)>,
}

fn lex(src: &str, line: usize, col0: usize) -> Result<Lexer, ParseError> {
    let err = |col: usize, kind| ParseError { line, col: col + col0, kind };
    let chars: Vec<char> = src.chars().collect();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let s = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            if i < chars.len() && (chars[i].is_alphabetic() || chars[i] == '.') {
                let e =
                    (i..chars.len()).find(|&j| !chars[j].is_alphanumeric() && chars[j] != '.').unwrap_or(chars.len());
                return Err(err(s, ParseErrorKind::BadNumber(chars[s..e].iter().collect())));
            }
            toks.push((Tok::Num(chars[s..i].iter().collect()), s));
        } else if c.is_alphabetic() || c == '_' {
            let s = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            toks.push((Tok::Ident(chars[s..i].iter().collect()), s));
        } else if "+-*^()/".contains(c) {
            toks.push((Tok::Op(c), i));
            i += 1;
        } else {
            return Err(err(i, ParseErrorKind::Unexpected(c.to_string())));
        }
    }
    Ok(Lexer { toks })
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    vars: &'a [String],
    line: usize,
    col0: usize,
    end: usize,
}

impl Parser<'_> {
    fn err(&self, col: usize, kind: ParseErrorKind) -> ParseError {
        ParseError { line: self.line, col: col + self.col0, kind }
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.0)
    }

    fn next(&mut self) -> Result<(Tok, usize), ParseError> {
        let t = self.toks.get(self.pos).cloned().ok_or_else(|| self.err(self.end, ParseErrorKind::UnexpectedEnd))?;
        self.pos += 1;
        Ok(t)
    }

    fn expr(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.term()?;
        while let Some(Tok::Op(c @ ('+' | '-'))) = self.peek() {
            let c = *c;
            self.pos += 1;
            let t = self.term()?;
            acc = if c == '+' { acc.add(&t) } else { acc.sub(&t) };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.factor()?;
        while let Some(Tok::Op('*')) = self.peek() {
            self.pos += 1;
            acc = acc.mul(&self.factor()?);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial, ParseError> {
        match self.peek() {
            Some(Tok::Op('-')) => {
                self.pos += 1;
                return Ok(self.factor()?.neg());
            }
            Some(Tok::Op('+')) => {
                self.pos += 1;
                return self.factor();
            }
            _ => {}
        }
        let base = self.atom()?;
        if let Some(Tok::Op('^')) = self.peek() {
            self.pos += 1;
            let (t, col) = self.next()?;
            let n: u32 = match t {
                Tok::Num(s) => s.parse().map_err(|_| self.err(col, ParseErrorKind::BadExponent))?,
                _ => return Err(self.err(col, ParseErrorKind::BadExponent)),
            };
            return Ok(base.pow(n));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Polynomial, ParseError> {
        let (t, col) = self.next()?;
        match t {
            Tok::Num(n) => {
                let mut text = n;
                if let Some(Tok::Op('/')) = self.peek() {
                    self.pos += 1;
                    let (d, dcol) = self.next()?;
                    match d {
                        Tok::Num(d) => text = format!("{text}/{d}"),
                        other => return Err(self.err(dcol, ParseErrorKind::Unexpected(show(&other)))),
                    }
                }
                let c =
                    Coefficient::parse(&text).ok_or_else(|| self.err(col, ParseErrorKind::BadNumber(text.clone())))?;
                Ok(Polynomial::constant(c))
            }
            Tok::Ident(name) => match self.vars.iter().position(|v| *v == name) {
                Some(i) => Ok(Polynomial::from_word(Word::from_letters(vec![i as u16]))),
                None => Err(self.err(col, ParseErrorKind::UnknownVariable(name))),
            },
            Tok::Op('(') => {
                let e = self.expr()?;
                match self.next()? {
                    (Tok::Op(')'), _) => Ok(e),
                    (other, c) => Err(self.err(c, ParseErrorKind::Unexpected(show(&other)))),
                }
            }
            other => Err(self.err(col, ParseErrorKind::Unexpected(show(&other)))),
        }
    }
}

fn show(t: &Tok) -> String {
    match t {
        Tok::Num(s) | Tok::Ident(s) => s.clone(),
        Tok::Op(c) => c.to_string(),
    }
}

/// Parses `text` over the variables `vars` (index order is precedence order).
pub fn parse_polynomial(text: &str, vars: &[String]) -> Result<Polynomial, ParseError> {
    parse_at(text, vars, 1, 1)
}

/// As [`parse_polynomial`], reporting positions relative to `line` and column `col0`.
pub fn parse_at(text: &str, vars: &[String], line: usize, col0: usize) -> Result<Polynomial, ParseError> {
    let lexer = lex(text, line, col0)?;
    if lexer.toks.is_empty() {
        return Err(ParseError { line, col: col0, kind: ParseErrorKind::Empty });
    }
    let mut p = Parser { toks: lexer.toks, pos: 0, vars, line, col0, end: text.chars().count() };
    let e = p.expr()?;
    if p.pos < p.toks.len() {
        let (t, c) = p.toks[p.pos].clone();
        return Err(p.err(c, ParseErrorKind::Unexpected(show(&t))));
    }
    Ok(e)
}
