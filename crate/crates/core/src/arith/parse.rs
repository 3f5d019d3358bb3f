//! Polynomial literals: `3/2*X0^2*T - U`, `X*(X-1)/2`, `2X + 4`.
//!
//! Grammar (implicit multiplication allowed between adjacent factors):
//!   expr   := ['+'|'-'] term (('+'|'-') term)*
//!   term   := factor (['*'|'/'] factor)*
//!   factor := atom ['^' integer]
//!   atom   := integer | identifier | '(' expr ')'
//! Division is only by nonzero constants.

use super::{Alphabet, MultiPoly, Rational};
use crate::error::{Error, Result};
use num_bigint::BigInt;


#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Op(char),
}

fn lex(s: &str) -> Result<Vec<Tok>> {
    let cs: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < cs.len() {
        let c = cs[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let st = i;
            while i < cs.len() && cs[i].is_ascii_digit() {
                i += 1;
            }
            let txt: String = cs[st..i].iter().collect();
            out.push(Tok::Num(txt.parse().map_err(|_| Error::Parse(txt.clone()))?));
        } else if c.is_ascii_alphabetic() {
            let st = i;
            while i < cs.len() && (cs[i].is_ascii_alphanumeric() || cs[i] == '_') {
                i += 1;
            }
            let txt: String = cs[st..i].iter().filter(|&&c| c != '_').collect();
            out.push(Tok::Ident(txt));
        } else if "+-*/^()".contains(c) || c == '−' {
            out.push(Tok::Op(if c == '−' { '-' } else { c }));
            i += 1;
        } else {
            return Err(Error::Parse(format!("unexpected character {c:?} in {s:?}")));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Tok>,
    pos: usize,
    alphabet: &'a Alphabet,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Tok::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<MultiPoly> {
        let mut acc = MultiPoly::zero(self.alphabet);
        let mut negate = if self.eat('-') {
            true
        } else {
            self.eat('+');
            false
        };
        loop {
            let t = self.term()?;
            acc = if negate { acc.sub(&t)? } else { acc.add(&t)? };
            if self.eat('+') {
                negate = false;
            } else if self.eat('-') {
                negate = true;
            } else {
                return Ok(acc);
            }
            // A sign may follow the binary operator: `a + -b`.
            while self.eat('-') {
                negate = !negate;
            }
        }
    }

    fn starts_atom(&self) -> bool {
        matches!(self.peek(), Some(Tok::Num(_)) | Some(Tok::Ident(_)) | Some(Tok::Op('(')))
    }

    fn term(&mut self) -> Result<MultiPoly> {
        let mut acc = self.factor()?;
        loop {
            if self.eat('*') {
                acc = acc.mul(&self.factor()?)?;
            } else if self.eat('/') {
                let d = self.factor()?;
                if !d.is_constant() || d.is_zero() {
                    return Err(Error::Parse("division only by nonzero constants".into()));
                }
                acc = acc.scale(&(Rational::from_integer(1.into()) / d.constant_term()));
            } else if self.starts_atom() {
                acc = acc.mul(&self.factor()?)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<MultiPoly> {
        let base = self.atom()?;
        if self.eat('^') {
            match self.peek().cloned() {
                Some(Tok::Num(n)) => {
                    self.pos += 1;
                    let k: u32 = n.try_into().map_err(|_| Error::Parse("exponent too large".into()))?;
                    Ok(base.pow(k))
                }
                _ => Err(Error::Parse("expected integer exponent".into())),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<MultiPoly> {
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(MultiPoly::constant(self.alphabet, Rational::from_integer(n)))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                MultiPoly::var(self.alphabet, &name).ok_or_else(|| {
                    Error::Parse(format!(
                        "unknown variable {name}; expected one of {:?}",
                        self.alphabet.names()
                    ))
                })
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return Err(Error::Parse("missing ')'".into()));
                }
                Ok(e)
            }
            other => Err(Error::Parse(format!("unexpected token {other:?}"))),
        }
    }
}

/// Parses a polynomial literal over a fixed alphabet.
pub fn parse_poly(s: &str, alphabet: &Alphabet) -> Result<MultiPoly> {
    let toks = lex(s)?;
    if toks.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let mut p = Parser { toks, pos: 0, alphabet };
    let out = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(Error::Parse(format!("trailing input in {s:?}")));
    }
    Ok(out)
}

/// Parses a literal whose alphabet is inferred: `X` alone gives the univariate
/// alphabet; otherwise `X0..X{n-1}, T, U` with `n` one past the largest index.
pub fn parse_poly_infer(s: &str) -> Result<MultiPoly> {
    let idents: Vec<String> = lex(s)?
        .into_iter()
        .filter_map(|t| if let Tok::Ident(n) = t { Some(n) } else { None })
        .collect();
    let alphabet = if idents.iter().all(|n| n == "X") {
        Alphabet::univariate()
    } else {
        let mut n = 0;
        for id in &idents {
            if let Some(rest) = id.strip_prefix('X') {
                let k: usize = rest
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad variable {id}")))?;
                n = n.max(k + 1);
            }
        }
        Alphabet::heinzer_ohm(n.max(1))
    };
    parse_poly(s, &alphabet)
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    #[test]
    fn rational_coefficients() {
        let a = Alphabet::heinzer_ohm(1);
        let f = parse_poly("3/2*X0^2*T - U", &a).unwrap();
        assert_eq!(f.num_terms(), 2);
        assert_eq!(f.to_string(), "3/2*X0^2*T - U");
    }

    #[test]
    fn implicit_multiplication_and_parens() {
        let a = Alphabet::univariate();
        let f = parse_poly("X(X-1)/2", &a).unwrap();
        let g = parse_poly("1/2X^2 - 1/2 X", &a).unwrap();
        assert_eq!(f, g);
        assert_eq!(parse_poly("2X+4", &a).unwrap().constant_term(), rat(4, 1));
    }

    #[test]
    fn errors() {
        let a = Alphabet::univariate();
        assert!(parse_poly("X/X", &a).is_err());
        assert!(parse_poly("Y", &a).is_err());
        assert!(parse_poly("(X", &a).is_err());
        assert!(parse_poly("", &a).is_err());
    }

    #[test]
    fn inferred_alphabets() {
        assert_eq!(parse_poly_infer("X^2-1").unwrap().alphabet().len(), 1);
        assert_eq!(parse_poly_infer("T + X_3*U").unwrap().alphabet().len(), 6);
    }
}
