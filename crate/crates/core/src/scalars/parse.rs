//! Parser for scalar expressions in the diagram JSON and on the CLI:
//! rational functions in `mu` and `L` with `+ - * / ^ ( )`, integer literals,
//! `zeta`, and (numeric backend only) decimals and the imaginary unit `i`.

use super::{Field, ScalarError};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(String),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn lex(s: &str) -> Result<Vec<Tok>, ScalarError> {
    let mut out = vec![];
    let chars: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' | '\n' => i += 1,
            '+' => {
                out.push(Tok::Plus);
                i += 1;
            }
            '-' => {
                out.push(Tok::Minus);
                i += 1;
            }
            '*' => {
                out.push(Tok::Star);
                i += 1;
            }
            '/' => {
                out.push(Tok::Slash);
                i += 1;
            }
            '^' => {
                out.push(Tok::Caret);
                i += 1;
            }
            '(' => {
                out.push(Tok::LParen);
                i += 1;
            }
            ')' => {
                out.push(Tok::RParen);
                i += 1;
            }
            '0'..='9' | '.' => {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_digit() || chars[i] == '.') {
                    i += 1;
                }
                out.push(Tok::Num(chars[start..i].iter().collect()));
            }
            c if c.is_alphabetic() || c == '_' => {
                let start = i;
                while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                out.push(Tok::Ident(chars[start..i].iter().collect()));
            }
            other => return Err(ScalarError::Parse(format!("unexpected character {other:?}"))),
        }
    }
    Ok(out)
}

struct Parser<'a, F: Field> {
    f: &'a F,
    toks: Vec<Tok>,
    pos: usize,
}

impl<'a, F: Field> Parser<'a, F> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }
    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<F::El, ScalarError> {
        let mut acc = self.term()?;
        while let Some(t) = self.peek() {
            match t {
                Tok::Plus => {
                    self.pos += 1;
                    let rhs = self.term()?;
                    acc = self.f.add(&acc, &rhs);
                }
                Tok::Minus => {
                    self.pos += 1;
                    let rhs = self.term()?;
                    acc = self.f.sub(&acc, &rhs);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<F::El, ScalarError> {
        let mut acc = self.factor()?;
        while let Some(t) = self.peek() {
            match t {
                Tok::Star => {
                    self.pos += 1;
                    let rhs = self.factor()?;
                    acc = self.f.mul(&acc, &rhs);
                }
                Tok::Slash => {
                    self.pos += 1;
                    let rhs = self.factor()?;
                    acc = self.f.div(&acc, &rhs)?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<F::El, ScalarError> {
        let mut sign = 1i64;
        while let Some(t) = self.peek() {
            match t {
                Tok::Minus => {
                    sign = -sign;
                    self.pos += 1;
                }
                Tok::Plus => {
                    self.pos += 1;
                }
                _ => break,
            }
        }
        let mut v = self.atom()?;
        if let Some(Tok::Caret) = self.peek() {
            self.pos += 1;
            let mut esign = 1i64;
            if let Some(Tok::Minus) = self.peek() {
                esign = -1;
                self.pos += 1;
            }
            match self.next() {
                Some(Tok::Num(n)) if !n.contains('.') => {
                    let e: i64 = n
                        .parse()
                        .map_err(|_| ScalarError::Parse(format!("bad exponent {n}")))?;
                    v = self.f.pow(&v, esign * e)?;
                }
                other => {
                    return Err(ScalarError::Parse(format!(
                        "expected integer exponent, got {other:?}"
                    )))
                }
            }
        }
        if sign < 0 {
            v = self.f.neg(&v);
        }
        Ok(v)
    }

    fn atom(&mut self) -> Result<F::El, ScalarError> {
        match self.next() {
            Some(Tok::Num(n)) => {
                if n.contains('.') {
                    self.f
                        .from_f64(n.parse().map_err(|_| {
                            ScalarError::Parse(format!("bad number {n}"))
                        })?)
                        .ok_or(ScalarError::BackendMismatch(
                            "decimal literals need the numeric backend; use p/q".into(),
                        ))
                } else {
                    let v: i64 = n
                        .parse()
                        .map_err(|_| ScalarError::Parse(format!("number too large: {n}")))?;
                    Ok(self.f.from_i64(v))
                }
            }
            Some(Tok::Ident(name)) => match name.as_str() {
                "mu" => self.f.mu().ok_or(ScalarError::BackendMismatch(
                    "mu is not available in this backend".into(),
                )),
                "L" => self.f.ext_gen().ok_or(ScalarError::BackendMismatch(
                    "L needs the quadratic-extension backend".into(),
                )),
                "zeta" => Ok(self.f.zeta()),
                "i" => self.f.imaginary_unit().ok_or(ScalarError::BackendMismatch(
                    "the imaginary unit needs the numeric backend".into(),
                )),
                other => Err(ScalarError::Parse(format!("unknown symbol {other}"))),
            },
            Some(Tok::LParen) => {
                let v = self.expr()?;
                match self.next() {
                    Some(Tok::RParen) => Ok(v),
                    _ => Err(ScalarError::Parse("missing closing parenthesis".into())),
                }
            }
            other => Err(ScalarError::Parse(format!("unexpected token {other:?}"))),
        }
    }
}

pub fn parse_scalar<F: Field>(f: &F, s: &str) -> Result<F::El, ScalarError> {
    let toks = lex(s)?;
    let mut p = Parser { f, toks, pos: 0 };
    let v = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(ScalarError::Parse(format!("trailing input in {s:?}")));
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::FunField;

    #[test]
    fn parses_rational_functions() {
        let f = FunField::new(3);
        let x = parse_scalar(&f, "(mu^2 - 1)/(mu - 1)").unwrap();
        let expect = f.add(&f.mu().unwrap(), &f.one());
        assert!(f.eq_el(&x, &expect));
    }

    #[test]
    fn parses_negative_powers_and_zeta() {
        let f = FunField::new(3);
        let x = parse_scalar(&f, "zeta * mu^-3 + 1/2").unwrap();
        let half = f.div(&f.one(), &f.from_i64(2)).unwrap();
        let expect = f.add(&f.mul(&f.zeta(), &f.mu_pow(-3)), &half);
        assert!(f.eq_el(&x, &expect));
    }

    #[test]
    fn rejects_l_outside_quadratic_backend() {
        let f = FunField::new(3);
        assert!(matches!(
            parse_scalar(&f, "L + 1"),
            Err(ScalarError::BackendMismatch(_))
        ));
    }
}
