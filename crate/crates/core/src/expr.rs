//! A small grammar for cyclotomic constants.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := '-' unary | power
//! power  := atom ('^' '-'? INT)?
//! atom   := INT | 'z(' INT ')' | 'cos(' angle ')' | 'sqrt(2)' | 'sqrt(5)' | '(' expr ')'
//! angle  := '-'? factor (('*' | '/') factor)*     with exactly one factor 'pi'
//! ```
//!
//! `z(N)` is `exp(2πi/N)`, `cos(rπ)` is `(z(2m)^k + z(2m)^-k)/2` for
//! `r = k/m`, `sqrt(2) = z(8) + z(8)^-1` and `sqrt(5) = 2(z(10) + z(10)^-1) - 1`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::cyclo::{CycElem, CycloError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at position {pos}: {msg}")]
pub struct ParseError {
    pub pos: usize,
    pub msg: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExprError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Eval(#[from] CycloError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CycExpr {
    Int(BigInt),
    Zeta(u64),
    /// `cos(rπ)` for rational `r`.
    Cos(BigRational),
    Sqrt(u64),
    Neg(Box<CycExpr>),
    Add(Box<CycExpr>, Box<CycExpr>),
    Sub(Box<CycExpr>, Box<CycExpr>),
    Mul(Box<CycExpr>, Box<CycExpr>),
    Div(Box<CycExpr>, Box<CycExpr>),
    Pow(Box<CycExpr>, i64),
}

impl CycExpr {
    pub fn eval(&self) -> Result<CycElem, CycloError> {
        use CycExpr::*;
        Ok(match self {
            Int(v) => CycElem::from_bigint(v.clone()),
            Zeta(n) => CycElem::zeta(*n),
            Cos(r) => {
                let m = r.denom().to_u64().expect("angle denominator fits u64");
                let k = (r.numer() % BigInt::from(2 * m))
                    .to_i64()
                    .expect("reduced numerator fits i64");
                let two_cos = CycElem::zeta_pow(2 * m, k) + CycElem::zeta_pow(2 * m, -k);
                two_cos.scale(&BigRational::new(1.into(), 2.into()))
            }
            Sqrt(2) => CycElem::zeta_plus(8),
            Sqrt(5) => CycElem::zeta_plus(10).mul_int(2) - CycElem::one(),
            Sqrt(n) => unreachable!("sqrt({n}) is rejected by the parser"),
            Neg(a) => -a.eval()?,
            Add(a, b) => a.eval()? + b.eval()?,
            Sub(a, b) => a.eval()? - b.eval()?,
            Mul(a, b) => a.eval()? * b.eval()?,
            Div(a, b) => a.eval()?.checked_div(&b.eval()?)?,
            Pow(a, e) => a.eval()?.pow(*e)?,
        })
    }

    fn is_atomic(&self) -> bool {
        match self {
            // "-1^2" would read back as -(1^2)
            CycExpr::Int(v) => !v.is_negative(),
            CycExpr::Zeta(_) | CycExpr::Cos(_) | CycExpr::Sqrt(_) => true,
            _ => false,
        }
    }
}

impl fmt::Display for CycExpr {
    /// Compound subexpressions are parenthesized, so the output parses back
    /// to the same tree.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use CycExpr::*;
        let wrap = |e: &CycExpr, f: &mut fmt::Formatter<'_>| -> fmt::Result {
            if e.is_atomic() {
                write!(f, "{e}")
            } else {
                write!(f, "({e})")
            }
        };
        match self {
            Int(v) => write!(f, "{v}"),
            Zeta(n) => write!(f, "z({n})"),
            Cos(r) => {
                let sign = if r.is_negative() { "-" } else { "" };
                let (k, m) = (r.numer().abs(), r.denom());
                if m.is_one() {
                    write!(f, "cos({sign}pi*{k})")
                } else {
                    write!(f, "cos({sign}pi*{k}/{m})")
                }
            }
            Sqrt(n) => write!(f, "sqrt({n})"),
            Neg(a) => {
                f.write_str("-")?;
                wrap(a, f)
            }
            Add(a, b) | Sub(a, b) | Mul(a, b) | Div(a, b) => {
                let op = match self {
                    Add(..) => " + ",
                    Sub(..) => " - ",
                    Mul(..) => "*",
                    _ => "/",
                };
                wrap(a, f)?;
                f.write_str(op)?;
                wrap(b, f)
            }
            Pow(a, e) => {
                wrap(a, f)?;
                write!(f, "^{e}")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Sym(char),
}

fn tokenize(s: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let mut out = Vec::new();
    let chars: Vec<(usize, char)> = s.char_indices().collect();
    let mut i = 0;
    while i < chars.len() {
        let (pos, c) = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].1.is_ascii_digit() {
                i += 1;
            }
            let text: String = chars[start..i].iter().map(|x| x.1).collect();
            out.push((pos, Tok::Int(text.parse().expect("digits"))));
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && chars[i].1.is_ascii_alphanumeric() {
                i += 1;
            }
            let text: String = chars[start..i].iter().map(|x| x.1).collect();
            out.push((pos, Tok::Ident(text)));
        } else if "+-*/^()".contains(c) {
            out.push((pos, Tok::Sym(c)));
            i += 1;
        } else {
            return Err(ParseError {
                pos,
                msg: format!("unexpected character '{c}'"),
            });
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    i: usize,
    end: usize,
}

impl Parser {
    fn pos(&self) -> usize {
        self.toks.get(self.i).map_or(self.end, |t| t.0)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            pos: self.pos(),
            msg: msg.into(),
        })
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.i).map(|t| &t.1)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.i += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(format!("expected '{c}'"))
        }
    }

    fn int(&mut self) -> Result<BigInt, ParseError> {
        match self.peek() {
            Some(Tok::Int(v)) => {
                let v = v.clone();
                self.i += 1;
                Ok(v)
            }
            _ => self.err("expected an integer"),
        }
    }

    fn expr(&mut self) -> Result<CycExpr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            if self.eat('+') {
                lhs = CycExpr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat('-') {
                lhs = CycExpr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<CycExpr, ParseError> {
        let mut lhs = self.unary()?;
        loop {
            if self.eat('*') {
                lhs = CycExpr::Mul(Box::new(lhs), Box::new(self.unary()?));
            } else if self.eat('/') {
                lhs = CycExpr::Div(Box::new(lhs), Box::new(self.unary()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn unary(&mut self) -> Result<CycExpr, ParseError> {
        if self.eat('-') {
            return Ok(CycExpr::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<CycExpr, ParseError> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let neg = self.eat('-');
        let pos = self.pos();
        let e = self.int()?;
        let e = e.to_i64().ok_or(ParseError {
            pos,
            msg: "exponent too large".into(),
        })?;
        Ok(CycExpr::Pow(Box::new(base), if neg { -e } else { e }))
    }

    fn positive_u64(&mut self, what: &str) -> Result<u64, ParseError> {
        let pos = self.pos();
        let v = self.int()?;
        match v.to_u64() {
            Some(n) if n >= 1 => Ok(n),
            _ => Err(ParseError {
                pos,
                msg: format!("{what} must be a positive integer"),
            }),
        }
    }

    fn atom(&mut self) -> Result<CycExpr, ParseError> {
        let start = self.pos();
        match self.peek().cloned() {
            Some(Tok::Int(v)) => {
                self.i += 1;
                Ok(CycExpr::Int(v))
            }
            Some(Tok::Sym('(')) => {
                self.i += 1;
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Some(Tok::Ident(name)) => {
                self.i += 1;
                self.expect('(')?;
                let e = match name.as_str() {
                    "z" => CycExpr::Zeta(self.positive_u64("root of unity order")?),
                    "cos" => CycExpr::Cos(self.angle()?),
                    "sqrt" => {
                        let pos = self.pos();
                        match self.int()?.to_u64() {
                            Some(n @ (2 | 5)) => CycExpr::Sqrt(n),
                            _ => {
                                return Err(ParseError {
                                    pos,
                                    msg: "only sqrt(2) and sqrt(5) are supported".into(),
                                })
                            }
                        }
                    }
                    other => {
                        return Err(ParseError {
                            pos: start,
                            msg: format!("unknown function '{other}'"),
                        })
                    }
                };
                self.expect(')')?;
                Ok(e)
            }
            Some(Tok::Sym(c)) => self.err(format!("unexpected '{c}'")),
            None => self.err("unexpected end of input"),
        }
    }

    /// A rational multiple of π, returned as the multiplier.
    fn angle(&mut self) -> Result<BigRational, ParseError> {
        let neg = self.eat('-');
        let mut value = BigRational::one();
        let mut seen_pi = false;
        let mut divide = false;
        loop {
            let pos = self.pos();
            match self.peek().cloned() {
                Some(Tok::Ident(ref s)) if s == "pi" => {
                    if seen_pi || divide {
                        return Err(ParseError {
                            pos,
                            msg: "angle must be a rational multiple of pi".into(),
                        });
                    }
                    seen_pi = true;
                    self.i += 1;
                }
                Some(Tok::Int(v)) => {
                    self.i += 1;
                    if divide {
                        if v.is_zero() {
                            return Err(ParseError {
                                pos,
                                msg: "division by zero in angle".into(),
                            });
                        }
                        value /= BigRational::from_integer(v);
                    } else {
                        value *= BigRational::from_integer(v);
                    }
                }
                _ => return self.err("expected an integer or 'pi' in angle"),
            }
            if self.eat('*') {
                divide = false;
            } else if self.eat('/') {
                divide = true;
            } else {
                break;
            }
        }
        if !seen_pi {
            return self.err("angle must contain pi");
        }
        Ok(if neg { -value } else { value })
    }
}

/// Parses an expression.
pub fn parse_cyc_expr(text: &str) -> Result<CycExpr, ParseError> {
    let toks = tokenize(text)?;
    let mut p = Parser {
        toks,
        i: 0,
        end: text.len(),
    };
    let e = p.expr()?;
    if p.i != p.toks.len() {
        return p.err("trailing input");
    }
    Ok(e)
}

/// Parses and evaluates.
pub fn eval_str(text: &str) -> Result<CycElem, ExprError> {
    Ok(parse_cyc_expr(text)?.eval()?)
}
