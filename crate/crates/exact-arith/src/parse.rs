use crate::error::ArithError;
use crate::poly::{MultiPoly, Vars};
use crate::ring::Ring;

/// Parse a polynomial written with `+ - * ^`, parentheses, integer literals and
/// the ring's variable names. Extra named constants may be supplied (e.g. `i`).
pub fn parse_poly<R: Ring>(vars: &Vars, src: &str, consts: &[(&str, R)]) -> Result<MultiPoly<R>, ArithError> {
    let toks = tokenize(src)?;
    let mut p = Parser { toks, pos: 0, vars, consts };
    let out = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(ArithError::Parse(format!("trailing input at token {}", p.pos)));
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(i64),
    Ident(String),
    Op(char),
}

fn tokenize(s: &str) -> Result<Vec<Tok>, ArithError> {
    let mut out = Vec::new();
    let cs: Vec<char> = s.chars().collect();
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
            let t: String = cs[st..i].iter().collect();
            out.push(Tok::Num(t.parse().map_err(|_| ArithError::Parse(t.clone()))?));
        } else if c.is_alphabetic() || c == '_' {
            let st = i;
            while i < cs.len() && (cs[i].is_alphanumeric() || cs[i] == '_') {
                i += 1;
            }
            out.push(Tok::Ident(cs[st..i].iter().collect()));
        } else if "+-*^()".contains(c) {
            out.push(Tok::Op(c));
            i += 1;
        } else {
            return Err(ArithError::Parse(format!("unexpected character {c:?}")));
        }
    }
    Ok(out)
}

struct Parser<'a, R: Ring> {
    toks: Vec<Tok>,
    pos: usize,
    vars: &'a Vars,
    consts: &'a [(&'a str, R)],
}

impl<R: Ring> Parser<'_, R> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn expr(&mut self) -> Result<MultiPoly<R>, ArithError> {
        let mut acc = match self.peek() {
            Some(Tok::Op('-')) => {
                self.pos += 1;
                -self.term()?
            }
            Some(Tok::Op('+')) => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        while let Some(Tok::Op(c)) = self.peek() {
            let c = *c;
            if c != '+' && c != '-' {
                break;
            }
            self.pos += 1;
            let t = self.term()?;
            acc = if c == '+' { acc + t } else { acc - t };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<MultiPoly<R>, ArithError> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(Tok::Op('*')) => {
                    self.pos += 1;
                    acc = acc * self.power()?;
                }
                // juxtaposition such as 2x or (x+y)(x-y)
                Some(Tok::Op('(')) | Some(Tok::Ident(_)) | Some(Tok::Num(_)) => {
                    acc = acc * self.power()?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<MultiPoly<R>, ArithError> {
        let base = self.atom()?;
        if let Some(Tok::Op('^')) = self.peek() {
            self.pos += 1;
            match self.toks.get(self.pos) {
                Some(Tok::Num(n)) => {
                    let n = *n as u32;
                    self.pos += 1;
                    return Ok(base.pow_poly(n));
                }
                _ => return Err(ArithError::Parse("exponent must be a literal".into())),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<MultiPoly<R>, ArithError> {
        match self.toks.get(self.pos).cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(MultiPoly::constant_in(self.vars, R::from_i64(n)))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                if let Some((_, c)) = self.consts.iter().find(|(n, _)| *n == name) {
                    return Ok(MultiPoly::constant_in(self.vars, c.clone()));
                }
                MultiPoly::var(self.vars, &name)
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                if self.toks.get(self.pos) != Some(&Tok::Op(')')) {
                    return Err(ArithError::Parse("missing )".into()));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(Tok::Op('-')) => {
                self.pos += 1;
                Ok(-self.power()?)
            }
            t => Err(ArithError::Parse(format!("unexpected token {t:?}"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::vars;
    use crate::rational::{q, Q};

    #[test]
    fn parses_products_and_powers() {
        let r = vars(&["x", "y"]);
        let f: MultiPoly<Q> = parse_poly(&r, "(x+y)(x-y) - 2*x^2 + y^2", &[]).unwrap();
        assert_eq!(f, parse_poly(&r, "-x^2", &[]).unwrap());
        let g: MultiPoly<Q> = parse_poly(&r, "3x y + k", &[("k", q(5))]).unwrap();
        assert_eq!(g.coeff(&[1, 1]), q(3));
        assert_eq!(g.coeff(&[0, 0]), q(5));
        assert!(parse_poly::<Q>(&r, "x + z", &[]).is_err());
    }
}
