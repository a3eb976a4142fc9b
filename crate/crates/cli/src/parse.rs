//! The element expression language.
//!
//! Grammar (whitespace between tokens is ignored):
//!
//! ```text
//!   expr   := ['-'] term (('+' | '-') term)*
//!   term   := factor ('*' factor)*
//!   factor := atom ['^' ['-'] digits]
//!   atom   := 'T' digits | 'c' digits | 'q' | 'v' | digits | '(' expr ')'
//! ```
//!
//! `T3` is the third braid-type generator, `c2` the second odd generator,
//! `q` and `v` the coefficient variables (with q = v^2 over the Laurent
//! ring; `v` is rejected over Z[q]). Negative exponents are only meaningful
//! on `v`. Example: `T1*T2*c1 + (q-1)*c2`.

use qschur::coeff::{LaurentV, PolyQ, Ring};
use qschur::hecke_clifford::HCElement;

/// A parse or evaluation failure, with the byte offset for parse errors.
#[derive(Debug)]
pub struct ElementError {
    pub message: String,
    pub position: Option<usize>,
}

impl ElementError {
    fn at(position: usize, message: impl Into<String>) -> Self {
        ElementError { message: message.into(), position: Some(position) }
    }

    fn eval(message: impl Into<String>) -> Self {
        ElementError { message: message.into(), position: None }
    }

    /// Render the error with a caret marking the offending byte.
    pub fn render(&self, input: &str) -> String {
        match self.position {
            Some(pos) => format!("{}\n  {input}\n  {}^", self.message, " ".repeat(pos)),
            None => self.message.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Expr {
    Num(i64),
    Q,
    V,
    GenT(usize),
    GenC(usize),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i64),
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    GenT(usize),
    GenC(usize),
    Q,
    V,
    Num(i64),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

fn tokenize(input: &str) -> Result<Vec<(usize, Token)>, ElementError> {
    let bytes = input.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        let start = i;
        match b {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
            }
            b'+' => {
                out.push((start, Token::Plus));
                i += 1;
            }
            b'-' => {
                out.push((start, Token::Minus));
                i += 1;
            }
            b'*' => {
                out.push((start, Token::Star));
                i += 1;
            }
            b'^' => {
                out.push((start, Token::Caret));
                i += 1;
            }
            b'(' => {
                out.push((start, Token::LParen));
                i += 1;
            }
            b')' => {
                out.push((start, Token::RParen));
                i += 1;
            }
            b'q' => {
                out.push((start, Token::Q));
                i += 1;
            }
            b'v' => {
                out.push((start, Token::V));
                i += 1;
            }
            b'T' | b'c' => {
                i += 1;
                let digits_start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                if digits_start == i {
                    return Err(ElementError::at(
                        start,
                        format!("generator '{}' needs an index, like {}1", b as char, b as char),
                    ));
                }
                let idx: usize = input[digits_start..i]
                    .parse()
                    .map_err(|_| ElementError::at(digits_start, "index out of range"))?;
                out.push((
                    start,
                    if b == b'T' { Token::GenT(idx) } else { Token::GenC(idx) },
                ));
            }
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let value: i64 = input[start..i]
                    .parse()
                    .map_err(|_| ElementError::at(start, "integer literal out of range"))?;
                out.push((start, Token::Num(value)));
            }
            _ => {
                return Err(ElementError::at(
                    start,
                    format!("unexpected character '{}'", &input[start..].chars().next().unwrap()),
                ));
            }
        }
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: &'a [(usize, Token)],
    pos: usize,
    input_len: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.tokens
            .get(self.pos)
            .map(|(p, _)| *p)
            .unwrap_or(self.input_len)
    }

    fn advance(&mut self) -> Option<&Token> {
        let t = self.tokens.get(self.pos).map(|(_, t)| t);
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<Expr, ElementError> {
        let negated = if self.peek() == Some(&Token::Minus) {
            self.advance();
            true
        } else {
            false
        };
        let mut acc = self.term()?;
        if negated {
            acc = Expr::Neg(Box::new(acc));
        }
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.advance();
                    let rhs = self.term()?;
                    acc = Expr::Add(Box::new(acc), Box::new(rhs));
                }
                Some(Token::Minus) => {
                    self.advance();
                    let rhs = self.term()?;
                    acc = Expr::Add(Box::new(acc), Box::new(Expr::Neg(Box::new(rhs))));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ElementError> {
        let mut acc = self.factor()?;
        while self.peek() == Some(&Token::Star) {
            self.advance();
            let rhs = self.factor()?;
            acc = Expr::Mul(Box::new(acc), Box::new(rhs));
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Expr, ElementError> {
        let base = self.atom()?;
        if self.peek() != Some(&Token::Caret) {
            return Ok(base);
        }
        self.advance();
        let negative = if self.peek() == Some(&Token::Minus) {
            self.advance();
            true
        } else {
            false
        };
        let here = self.here();
        match self.advance() {
            Some(Token::Num(e)) => {
                let exponent = if negative { -e } else { *e };
                Ok(Expr::Pow(Box::new(base), exponent))
            }
            _ => Err(ElementError::at(here, "expected an integer exponent after '^'")),
        }
    }

    fn atom(&mut self) -> Result<Expr, ElementError> {
        let here = self.here();
        match self.advance() {
            Some(Token::GenT(i)) => Ok(Expr::GenT(*i)),
            Some(Token::GenC(j)) => Ok(Expr::GenC(*j)),
            Some(Token::Q) => Ok(Expr::Q),
            Some(Token::V) => Ok(Expr::V),
            Some(Token::Num(k)) => Ok(Expr::Num(*k)),
            Some(Token::LParen) => {
                let inner = self.expr()?;
                let close = self.here();
                match self.advance() {
                    Some(Token::RParen) => Ok(inner),
                    _ => Err(ElementError::at(close, "expected ')'")),
                }
            }
            _ => Err(ElementError::at(
                here,
                "expected a generator, a coefficient, a number, or '('",
            )),
        }
    }
}

fn parse(input: &str) -> Result<Expr, ElementError> {
    let tokens = tokenize(input)?;
    if tokens.is_empty() {
        return Err(ElementError::at(0, "empty element expression"));
    }
    let mut parser = Parser { tokens: &tokens, pos: 0, input_len: input.len() };
    let expr = parser.expr()?;
    if parser.pos != tokens.len() {
        return Err(ElementError::at(parser.here(), "unexpected trailing input"));
    }
    Ok(expr)
}

/// The hooks an expression needs from its coefficient ring: integers, q,
/// and (over the Laurent ring only) powers of v.
pub trait CoeffAtoms: Ring {
    fn integer(value: i64) -> Self;
    fn v_power(exp: i64) -> Option<Self>;
}

impl CoeffAtoms for PolyQ {
    fn integer(value: i64) -> Self {
        PolyQ::monomial(0, value.into())
    }

    fn v_power(_exp: i64) -> Option<Self> {
        None
    }
}

impl CoeffAtoms for LaurentV {
    fn integer(value: i64) -> Self {
        LaurentV::monomial(0, value.into())
    }

    fn v_power(exp: i64) -> Option<Self> {
        Some(LaurentV::v_pow(exp))
    }
}

fn eval<R: CoeffAtoms>(expr: &Expr, r: usize) -> Result<HCElement<R>, ElementError> {
    match expr {
        Expr::Num(k) => Ok(HCElement::unit(r).scale(&R::integer(*k))),
        Expr::Q => Ok(HCElement::unit(r).scale(&R::q())),
        Expr::V => match R::v_power(1) {
            Some(v) => Ok(HCElement::unit(r).scale(&v)),
            None => Err(ElementError::eval(
                "'v' is only available over the Laurent ring (--ring v)",
            )),
        },
        Expr::GenT(i) => {
            if *i >= 1 && *i < r {
                Ok(HCElement::gen_t(r, *i))
            } else {
                Err(ElementError::eval(format!(
                    "T{i} is out of range: rank {r} has T1..T{}",
                    r.saturating_sub(1)
                )))
            }
        }
        Expr::GenC(j) => {
            if *j >= 1 && *j <= r {
                Ok(HCElement::gen_c(r, *j))
            } else {
                Err(ElementError::eval(format!("c{j} is out of range: rank {r} has c1..c{r}")))
            }
        }
        Expr::Neg(inner) => Ok(eval::<R>(inner, r)?.neg()),
        Expr::Add(a, b) => Ok(eval::<R>(a, r)?.add(&eval::<R>(b, r)?)),
        Expr::Mul(a, b) => Ok(eval::<R>(a, r)?.mul(&eval::<R>(b, r)?)),
        Expr::Pow(base, e) => {
            if *e < 0 {
                if **base == Expr::V {
                    match R::v_power(*e) {
                        Some(v) => return Ok(HCElement::unit(r).scale(&v)),
                        None => {
                            return Err(ElementError::eval(
                                "'v' is only available over the Laurent ring (--ring v)",
                            ))
                        }
                    }
                }
                return Err(ElementError::eval(
                    "negative exponents are only supported on 'v'",
                ));
            }
            let b = eval::<R>(base, r)?;
            let mut acc = HCElement::unit(r);
            for _ in 0..*e {
                acc = acc.mul(&b);
            }
            Ok(acc)
        }
    }
}

/// Parse an element expression into the rank-r algebra over the given ring.
pub fn parse_element<R: CoeffAtoms>(input: &str, r: usize) -> Result<HCElement<R>, ElementError> {
    eval(&parse(input)?, r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_the_reference_example() {
        let e: HCElement<PolyQ> = parse_element("T1*T2*c1 + (q-1)*c2", 3).unwrap();
        let t1 = HCElement::<PolyQ>::gen_t(3, 1);
        let t2 = HCElement::<PolyQ>::gen_t(3, 2);
        let c1 = HCElement::<PolyQ>::gen_c(3, 1);
        let c2 = HCElement::<PolyQ>::gen_c(3, 2);
        let qm1 = PolyQ::from_terms([(1, 1), (0, -1)]);
        let expected = t1.mul(&t2).mul(&c1).add(&c2.scale(&qm1));
        assert_eq!(e, expected);
    }

    #[test]
    fn precedence_and_unary_minus() {
        let a: HCElement<PolyQ> = parse_element("-T1 + 2*T1", 2).unwrap();
        let b: HCElement<PolyQ> = parse_element("T1", 2).unwrap();
        assert_eq!(a, b);
        let a: HCElement<PolyQ> = parse_element("q^2 - 1", 2).unwrap();
        let b: HCElement<PolyQ> = parse_element("(q-1)*(q+1)", 2).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn laurent_ring_atoms() {
        let a: HCElement<LaurentV> = parse_element("v^-1 * v * q", 2).unwrap();
        let b: HCElement<LaurentV> = parse_element("v^2", 2).unwrap();
        assert_eq!(a, b);
        assert!(parse_element::<PolyQ>("v*T1", 2).is_err());
    }

    #[test]
    fn error_positions() {
        let err = parse_element::<PolyQ>("T1 ++ c1", 2).unwrap_err();
        assert_eq!(err.position, Some(4));
        let err = parse_element::<PolyQ>("T1 * 😀", 2).unwrap_err();
        assert_eq!(err.position, Some(5));
        let err = parse_element::<PolyQ>("(T1", 2).unwrap_err();
        assert_eq!(err.position, Some(3));
        let err = parse_element::<PolyQ>("T9", 2).unwrap_err();
        assert!(err.position.is_none());
        assert!(err.message.contains("out of range"));
    }
}
