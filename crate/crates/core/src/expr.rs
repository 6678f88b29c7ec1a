//! Surface syntax for algebra elements.
//!
//! ```text
//! expr   := term (("+" | "-") term)*
//! term   := unary (("*" | "/") unary | unary)*      juxtaposition multiplies
//! unary  := "-" unary | power
//! power  := atom ("^" exponent)?
//! exponent := ["-"] int | "(" ["-"] int ["/" int] ")"
//! atom   := "z1" | "z2" | "z3" | "I1" | "I2" | "I3" | "C" | "q" | "s" | int
//!         | "(" expr ")" | "[" expr "," expr "]" | "phi" "(" expr ")" | "pi" "(" expr ")"
//! ```
//!
//! `q^(k/2)` is read as `s^k`. Whitespace is insignificant except that it
//! separates juxtaposed factors, as in `z3^-1 z1`.

use num_bigint::BigInt;

use crate::coeff::ScalarRat;
use crate::error::{Error, ParseError, Result};
use crate::fo::{self, FoElem};
use crate::liecert::{Axis, LieExpr};
use crate::torus::{Monomial, TorusElem};

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ExprAst {
    Scalar(ScalarRat),
    /// `z_axis^exp`
    Gen { axis: u8, exp: i64 },
    /// `I_k`
    FoGen(u8),
    Casimir,
    Add(Box<ExprAst>, Box<ExprAst>),
    Sub(Box<ExprAst>, Box<ExprAst>),
    Mul(Box<ExprAst>, Box<ExprAst>),
    Div(Box<ExprAst>, Box<ExprAst>),
    Neg(Box<ExprAst>),
    Pow(Box<ExprAst>, i64),
    LieBr(Box<ExprAst>, Box<ExprAst>),
    Phi(Box<ExprAst>),
    Pi(Box<ExprAst>),
}

#[derive(Clone, PartialEq, Eq, Debug)]
enum Tok {
    Ident(String),
    Int(BigInt),
    Sym(char),
    End,
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    pos: usize,
}

fn lex(input: &str) -> Result<Vec<Token>, ParseError> {
    let chars: Vec<char> = input.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let pos = i + 1;
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            let value = digits.parse::<BigInt>().expect("ascii digits");
            out.push(Token {
                tok: Tok::Int(value),
                pos,
            });
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Token {
                tok: Tok::Ident(chars[start..i].iter().collect()),
                pos,
            });
        } else if "+-*/^()[],".contains(c) {
            out.push(Token {
                tok: Tok::Sym(c),
                pos,
            });
            i += 1;
        } else {
            return Err(ParseError::new(pos, &["expression"]));
        }
    }
    out.push(Token {
        tok: Tok::End,
        pos: chars.len() + 1,
    });
    Ok(out)
}

struct Parser {
    tokens: Vec<Token>,
    at: usize,
}

const ATOM_START: &[&str] = &["generator", "number", "(", "["];

impl Parser {
    fn peek(&self) -> &Token {
        &self.tokens[self.at]
    }

    fn bump(&mut self) -> Token {
        let t = self.tokens[self.at].clone();
        if self.at + 1 < self.tokens.len() {
            self.at += 1;
        }
        t
    }

    fn is_sym(&self, c: char) -> bool {
        self.peek().tok == Tok::Sym(c)
    }

    fn expect_sym(&mut self, c: char) -> Result<(), ParseError> {
        if self.is_sym(c) {
            self.bump();
            Ok(())
        } else {
            Err(ParseError::new(self.peek().pos, &[&c.to_string()]))
        }
    }

    fn expr(&mut self) -> Result<ExprAst, ParseError> {
        let mut lhs = self.term()?;
        loop {
            if self.is_sym('+') {
                self.bump();
                lhs = ExprAst::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.is_sym('-') {
                self.bump();
                lhs = ExprAst::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<ExprAst, ParseError> {
        let mut lhs = self.unary()?;
        loop {
            if self.is_sym('*') {
                self.bump();
                lhs = ExprAst::Mul(Box::new(lhs), Box::new(self.unary()?));
            } else if self.is_sym('/') {
                self.bump();
                lhs = ExprAst::Div(Box::new(lhs), Box::new(self.unary()?));
            } else if matches!(self.peek().tok, Tok::Ident(_)) || self.is_sym('(') || self.is_sym('[') {
                lhs = ExprAst::Mul(Box::new(lhs), Box::new(self.unary()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn unary(&mut self) -> Result<ExprAst, ParseError> {
        if self.is_sym('-') {
            self.bump();
            return Ok(ExprAst::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<ExprAst, ParseError> {
        let is_q = matches!(&self.peek().tok, Tok::Ident(name) if name == "q");
        let base = self.atom()?;
        if !self.is_sym('^') {
            return Ok(base);
        }
        self.bump();
        let exp_pos = self.peek().pos;
        let (num, den) = self.exponent()?;
        let exp = match (den, is_q) {
            (1, _) => num,
            (2, true) => {
                // q^(k/2) = s^k
                return Ok(ExprAst::Pow(Box::new(ExprAst::Scalar(ScalarRat::s())), num));
            }
            _ => return Err(ParseError::new(exp_pos, &["integer exponent"])),
        };
        Ok(match base {
            ExprAst::Gen { axis, exp: 1 } => ExprAst::Gen { axis, exp },
            other => ExprAst::Pow(Box::new(other), exp),
        })
    }

    fn signed_int(&mut self) -> Result<i64, ParseError> {
        let negative = if self.is_sym('-') {
            self.bump();
            true
        } else {
            false
        };
        let t = self.bump();
        match t.tok {
            Tok::Int(v) => {
                let v = i64::try_from(v).map_err(|_| ParseError::new(t.pos, &["small integer"]))?;
                Ok(if negative { -v } else { v })
            }
            _ if negative => Err(ParseError::new(t.pos, &["integer"])),
            _ => Err(ParseError::new(t.pos, &["integer", "-", "("])),
        }
    }

    fn exponent(&mut self) -> Result<(i64, i64), ParseError> {
        if !self.is_sym('(') {
            return Ok((self.signed_int()?, 1));
        }
        self.bump();
        let num = self.signed_int()?;
        let den = if self.is_sym('/') {
            self.bump();
            let pos = self.peek().pos;
            let d = self.signed_int()?;
            if d <= 0 {
                return Err(ParseError::new(pos, &["positive integer"]));
            }
            d
        } else {
            1
        };
        self.expect_sym(')')?;
        if den != 1 && num % den == 0 {
            return Ok((num / den, 1));
        }
        Ok((num, den))
    }

    fn atom(&mut self) -> Result<ExprAst, ParseError> {
        let t = self.bump();
        match t.tok {
            Tok::Int(v) => Ok(ExprAst::Scalar(ScalarRat::from_bigint(v))),
            Tok::Sym('(') => {
                let e = self.expr()?;
                self.expect_sym(')')?;
                Ok(e)
            }
            Tok::Sym('[') => {
                let a = self.expr()?;
                self.expect_sym(',')?;
                let b = self.expr()?;
                self.expect_sym(']')?;
                Ok(ExprAst::LieBr(Box::new(a), Box::new(b)))
            }
            Tok::Ident(name) => match name.as_str() {
                "z1" | "z2" | "z3" => Ok(ExprAst::Gen {
                    axis: name.as_bytes()[1] - b'0',
                    exp: 1,
                }),
                "I1" | "I2" | "I3" => Ok(ExprAst::FoGen(name.as_bytes()[1] - b'0')),
                "C" => Ok(ExprAst::Casimir),
                "q" => Ok(ExprAst::Scalar(ScalarRat::q())),
                "s" => Ok(ExprAst::Scalar(ScalarRat::s())),
                "phi" | "pi" => {
                    self.expect_sym('(')?;
                    let e = self.expr()?;
                    self.expect_sym(')')?;
                    Ok(if name == "phi" {
                        ExprAst::Phi(Box::new(e))
                    } else {
                        ExprAst::Pi(Box::new(e))
                    })
                }
                _ => Err(ParseError::new(t.pos, ATOM_START)),
            },
            _ => Err(ParseError::new(t.pos, ATOM_START)),
        }
    }
}

pub fn parse_expr(input: &str) -> Result<ExprAst, ParseError> {
    let tokens = lex(input)?;
    let mut p = Parser { tokens, at: 0 };
    let e = p.expr()?;
    if p.peek().tok != Tok::End {
        return Err(ParseError::new(p.peek().pos, &["operator", "end of input"]));
    }
    Ok(e)
}

fn invert_term(x: &TorusElem, what: &str) -> Result<TorusElem> {
    if x.is_zero() {
        return Err(Error::ZeroInversion);
    }
    x.inverse_of_term()
        .ok_or_else(|| Error::Domain(format!("{what} is not invertible (not a single term)")))
}

/// Evaluates into `A_q`; `I_k` and `C` expand through the embedding.
pub fn eval_expr(ast: &ExprAst) -> Result<TorusElem> {
    use ExprAst::*;
    Ok(match ast {
        Scalar(c) => TorusElem::scalar(c.clone()),
        Gen { axis, exp } => TorusElem::monomial(Monomial::axis_power(*axis, *exp)),
        FoGen(k) => fo::gen_i(*k as usize)?,
        Casimir => fo::casimir(),
        Add(a, b) => &eval_expr(a)? + &eval_expr(b)?,
        Sub(a, b) => &eval_expr(a)? - &eval_expr(b)?,
        Mul(a, b) => eval_expr(a)?.mul(&eval_expr(b)?),
        Div(a, b) => {
            let d = eval_expr(b)?;
            eval_expr(a)?.mul(&invert_term(&d, "divisor")?)
        }
        Neg(a) => -&eval_expr(a)?,
        Pow(base, e) => {
            let b = eval_expr(base)?;
            let e32 = u32::try_from(e.unsigned_abs())
                .map_err(|_| Error::Domain(format!("exponent {e} too large")))?;
            if *e >= 0 {
                b.pow(e32)
            } else {
                invert_term(&b, "base of a negative power")?.pow(e32)
            }
        }
        LieBr(a, b) => eval_expr(a)?.bracket(&eval_expr(b)?),
        Phi(a) => eval_expr(a)?.phi(),
        Pi(a) => eval_expr(a)?.pi_project(),
    })
}

/// Evaluates an expression built only from numbers, `q` and `s`.
pub fn eval_scalar(ast: &ExprAst) -> Result<ScalarRat> {
    use ExprAst::*;
    Ok(match ast {
        Scalar(c) => c.clone(),
        Add(a, b) => &eval_scalar(a)? + &eval_scalar(b)?,
        Sub(a, b) => &eval_scalar(a)? - &eval_scalar(b)?,
        Mul(a, b) => &eval_scalar(a)? * &eval_scalar(b)?,
        Div(a, b) => eval_scalar(a)?.div(&eval_scalar(b)?)?,
        Neg(a) => -eval_scalar(a)?,
        Pow(a, e) => eval_scalar(a)?.pow(*e)?,
        _ => return Err(Error::Domain("expected a scalar expression".to_string())),
    })
}

fn is_scalar_expr(ast: &ExprAst) -> bool {
    use ExprAst::*;
    match ast {
        Scalar(_) => true,
        Add(a, b) | Sub(a, b) | Mul(a, b) | Div(a, b) => is_scalar_expr(a) && is_scalar_expr(b),
        Neg(a) | Pow(a, _) => is_scalar_expr(a),
        _ => false,
    }
}

/// Evaluates inside the abstract algebra `U_q'(so_3)`, without embedding.
pub fn eval_fo(ast: &ExprAst) -> Result<FoElem> {
    use ExprAst::*;
    if is_scalar_expr(ast) {
        return Ok(FoElem::term(eval_scalar(ast)?, fo::FoMonomial::UNIT));
    }
    let minus_one = crate::coeff::ScalarRat::from_int(-1);
    Ok(match ast {
        FoGen(k) => FoElem::generator(*k as usize)?,
        Casimir => fo::casimir_fo(),
        Add(a, b) => FoElem::add_scale(&ScalarRat::one(), &eval_fo(b)?, &eval_fo(a)?),
        Sub(a, b) => FoElem::add_scale(&minus_one, &eval_fo(b)?, &eval_fo(a)?),
        Mul(a, b) => eval_fo(a)?.mul(&eval_fo(b)?),
        Div(a, b) if is_scalar_expr(b) => eval_fo(a)?.scale(&eval_scalar(b)?.inv()?),
        Neg(a) => eval_fo(a)?.scale(&minus_one),
        Pow(a, e) if *e >= 0 => eval_fo(a)?.pow(*e as u32),
        LieBr(a, b) => eval_fo(a)?.bracket(&eval_fo(b)?),
        Gen { .. } | Phi(_) | Pi(_) => {
            return Err(Error::Domain(
                "torus generators, phi and pi are not available in U_q'(so_3)".to_string(),
            ))
        }
        Div(..) => return Err(Error::Domain("can only divide by a scalar in U_q'(so_3)".to_string())),
        Pow(..) => return Err(Error::Domain("negative power in U_q'(so_3)".to_string())),
        Scalar(_) => unreachable!("handled as a scalar expression"),
    })
}

/// Reads an expression back as a Lie polynomial in the torus generators.
/// Fails if it uses anything other than `z_k^(+-1)`, brackets, sums,
/// differences and scalar multiples.
pub fn to_lie_expr(ast: &ExprAst) -> Result<LieExpr> {
    use ExprAst::*;
    let not_lie = || Error::Domain("expression is not a Lie polynomial in z1, z2, z3".to_string());
    let scaled = |c: ScalarRat, body: LieExpr| -> LieExpr {
        if c.is_zero() {
            LieExpr::Sum(Vec::new())
        } else {
            LieExpr::scale(c, body)
        }
    };
    Ok(match ast {
        Gen { axis, exp: 1 } => LieExpr::leaf(Axis::from_index(*axis)?, false),
        Gen { axis, exp: -1 } => LieExpr::leaf(Axis::from_index(*axis)?, true),
        LieBr(a, b) => LieExpr::bracket(to_lie_expr(a)?, to_lie_expr(b)?),
        Add(a, b) => {
            let mut parts = match to_lie_expr(a)? {
                LieExpr::Sum(p) if matches!(**a, Add(..) | Sub(..)) => p,
                other => vec![other],
            };
            parts.push(to_lie_expr(b)?);
            LieExpr::Sum(parts)
        }
        Sub(a, b) => {
            let mut parts = match to_lie_expr(a)? {
                LieExpr::Sum(p) if matches!(**a, Add(..) | Sub(..)) => p,
                other => vec![other],
            };
            parts.push(scaled(ScalarRat::from_int(-1), to_lie_expr(b)?));
            LieExpr::Sum(parts)
        }
        Neg(a) => scaled(ScalarRat::from_int(-1), to_lie_expr(a)?),
        Mul(a, b) if is_scalar_expr(a) => scaled(eval_scalar(a)?, to_lie_expr(b)?),
        Mul(a, b) if is_scalar_expr(b) => scaled(eval_scalar(b)?, to_lie_expr(a)?),
        Div(a, b) if is_scalar_expr(b) => scaled(eval_scalar(b)?.inv()?, to_lie_expr(a)?),
        _ => return Err(not_lie()),
    })
}
