use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::poly::{PolyRing, Polynomial};

/// Grammar:
///
/// ```text
/// expr   := term (('+' | '-') term)*
/// term   := factor ('*' factor)*
/// factor := '-' factor | power
/// power  := atom ('^' integer)?
/// atom   := '(' expr ')' | identifier | literal
/// literal := integer ('/' integer)?
/// ```
///
/// No implicit multiplication; `^` binds tighter than `*` binds tighter
/// than `+`/`-`; `/` may only appear inside a rational literal.
pub fn parse_polynomial(text: &str, ring: &PolyRing) -> Result<Polynomial> {
    let tokens = lex(text)?;
    let mut parser = Parser { ring, tokens, pos: 0 };
    let poly = parser.expr()?;
    match parser.peek() {
        Some(tok) => Err(parser.error_at(tok.line, tok.col, format!("unexpected `{}`", tok.kind))),
        None => Ok(poly),
    }
}

#[derive(Debug, Clone, PartialEq)]
enum TokenKind {
    Ident(String),
    Number(BigRational),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

impl std::fmt::Display for TokenKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            TokenKind::Ident(s) => write!(f, "{s}"),
            TokenKind::Number(q) => write!(f, "{q}"),
            TokenKind::Plus => write!(f, "+"),
            TokenKind::Minus => write!(f, "-"),
            TokenKind::Star => write!(f, "*"),
            TokenKind::Caret => write!(f, "^"),
            TokenKind::LParen => write!(f, "("),
            TokenKind::RParen => write!(f, ")"),
        }
    }
}

#[derive(Debug, Clone)]
struct Token {
    kind: TokenKind,
    line: usize,
    col: usize,
}

fn lex(text: &str) -> Result<Vec<Token>> {
    let mut tokens = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0;
    let mut line = 1;
    let mut col = 1;
    if chars.is_empty() {
        return Err(Error::Parse { line: 1, col: 1, msg: "empty input".into() });
    }
    while i < chars.len() {
        let c = chars[i];
        let (tline, tcol) = (line, col);
        let advance = |i: &mut usize, line: &mut usize, col: &mut usize| {
            if chars[*i] == '\n' {
                *line += 1;
                *col = 1;
            } else {
                *col += 1;
            }
            *i += 1;
        };
        match c {
            ' ' | '\t' | '\r' | '\n' => {
                advance(&mut i, &mut line, &mut col);
            }
            '+' | '-' | '*' | '^' | '(' | ')' => {
                let kind = match c {
                    '+' => TokenKind::Plus,
                    '-' => TokenKind::Minus,
                    '*' => TokenKind::Star,
                    '^' => TokenKind::Caret,
                    '(' => TokenKind::LParen,
                    _ => TokenKind::RParen,
                };
                tokens.push(Token { kind, line: tline, col: tcol });
                advance(&mut i, &mut line, &mut col);
            }
            '0'..='9' => {
                let mut digits = String::new();
                while i < chars.len() && chars[i].is_ascii_digit() {
                    digits.push(chars[i]);
                    advance(&mut i, &mut line, &mut col);
                }
                let numer: BigInt = digits.parse().expect("digit string");
                // Optional `/denominator` completing a rational literal.
                if i < chars.len() && chars[i] == '/' {
                    advance(&mut i, &mut line, &mut col);
                    let (dline, dcol) = (line, col);
                    let mut den = String::new();
                    while i < chars.len() && chars[i].is_ascii_digit() {
                        den.push(chars[i]);
                        advance(&mut i, &mut line, &mut col);
                    }
                    if den.is_empty() {
                        return Err(Error::Parse {
                            line: dline,
                            col: dcol,
                            msg: "expected denominator after `/`".into(),
                        });
                    }
                    let denom: BigInt = den.parse().expect("digit string");
                    if denom.is_zero() {
                        return Err(Error::Parse {
                            line: dline,
                            col: dcol,
                            msg: "zero denominator".into(),
                        });
                    }
                    tokens.push(Token {
                        kind: TokenKind::Number(BigRational::new(numer, denom)),
                        line: tline,
                        col: tcol,
                    });
                } else {
                    tokens.push(Token {
                        kind: TokenKind::Number(BigRational::from_integer(numer)),
                        line: tline,
                        col: tcol,
                    });
                }
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let mut ident = String::new();
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    ident.push(chars[i]);
                    advance(&mut i, &mut line, &mut col);
                }
                tokens.push(Token { kind: TokenKind::Ident(ident), line: tline, col: tcol });
            }
            '/' => {
                return Err(Error::Parse {
                    line: tline,
                    col: tcol,
                    msg: "`/` is only allowed inside a rational literal".into(),
                });
            }
            other => {
                return Err(Error::Parse {
                    line: tline,
                    col: tcol,
                    msg: format!("unexpected character `{other}`"),
                });
            }
        }
    }
    if tokens.is_empty() {
        return Err(Error::Parse { line: 1, col: 1, msg: "empty input".into() });
    }
    Ok(tokens)
}

struct Parser<'a> {
    ring: &'a PolyRing,
    tokens: Vec<Token>,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Token> {
        let tok = self.tokens.get(self.pos).cloned();
        if tok.is_some() {
            self.pos += 1;
        }
        tok
    }

    fn error_at(&self, line: usize, col: usize, msg: String) -> Error {
        Error::Parse { line, col, msg }
    }

    fn error_eof(&self, expected: &str) -> Error {
        let (line, col) = self
            .tokens
            .last()
            .map(|t| (t.line, t.col + 1))
            .unwrap_or((1, 1));
        Error::Parse { line, col, msg: format!("unexpected end of input, expected {expected}") }
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = self.term()?;
        while let Some(tok) = self.peek() {
            match tok.kind {
                TokenKind::Plus => {
                    self.next();
                    acc = acc.checked_add(&self.term()?)?;
                }
                TokenKind::Minus => {
                    self.next();
                    acc = acc.checked_sub(&self.term()?)?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        while let Some(tok) = self.peek() {
            match tok.kind {
                TokenKind::Star => {
                    self.next();
                    acc = acc.checked_mul(&self.factor()?)?;
                }
                // Adjacent atoms mean implicit multiplication, which the
                // grammar forbids; report it specifically.
                TokenKind::Ident(_) | TokenKind::Number(_) | TokenKind::LParen => {
                    return Err(self.error_at(
                        tok.line,
                        tok.col,
                        "implicit multiplication is not allowed; use `*`".into(),
                    ));
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial> {
        match self.peek() {
            Some(tok) if tok.kind == TokenKind::Minus => {
                self.next();
                let inner = self.factor()?;
                Ok(inner.scale(&-BigRational::from_integer(BigInt::from(1))))
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if let Some(tok) = self.peek() {
            if tok.kind == TokenKind::Caret {
                self.next();
                let exp_tok = self.next().ok_or_else(|| self.error_eof("an exponent"))?;
                match exp_tok.kind {
                    TokenKind::Number(ref q) if q.is_integer() && !num_traits::Signed::is_negative(q) => {
                        let exp: u32 = q.to_integer().try_into().map_err(|_| {
                            self.error_at(exp_tok.line, exp_tok.col, "exponent too large".into())
                        })?;
                        return Ok(base.pow(exp));
                    }
                    _ => {
                        return Err(self.error_at(
                            exp_tok.line,
                            exp_tok.col,
                            "exponent must be a non-negative integer".into(),
                        ));
                    }
                }
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Polynomial> {
        let tok = self.next().ok_or_else(|| self.error_eof("an operand"))?;
        match tok.kind {
            TokenKind::LParen => {
                let inner = self.expr()?;
                match self.next() {
                    Some(t) if t.kind == TokenKind::RParen => Ok(inner),
                    Some(t) => Err(self.error_at(t.line, t.col, format!("expected `)`, found `{}`", t.kind))),
                    None => Err(self.error_eof("`)`")),
                }
            }
            TokenKind::Ident(name) => match self.ring.var_index(&name) {
                Some(i) => Ok(self.ring.var(i)),
                None => Err(Error::UnknownVariable { name, line: tok.line, col: tok.col }),
            },
            TokenKind::Number(q) => Ok(self.ring.constant(q)),
            other => Err(self.error_at(tok.line, tok.col, format!("unexpected `{other}`"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(vars: &[&str]) -> PolyRing {
        PolyRing::new(vars.to_vec()).unwrap()
    }

    #[test]
    fn parses_cusp() {
        let r = ring(&["x", "y"]);
        let f = parse_polynomial("y^2 - x^3", &r).unwrap();
        let g = r.var(1).pow(2).checked_sub(&r.var(0).pow(3)).unwrap();
        assert_eq!(f, g);
    }

    #[test]
    fn parses_family_member() {
        let r = ring(&["t", "x", "y"]);
        let f = parse_polynomial("y^2 - x^5 - t*x^3", &r).unwrap();
        let g = r
            .var(2)
            .pow(2)
            .checked_sub(&r.var(1).pow(5))
            .unwrap()
            .checked_sub(&r.var(0).checked_mul(&r.var(1).pow(3)).unwrap())
            .unwrap();
        assert_eq!(f, g);
    }

    #[test]
    fn rejects_implicit_multiplication() {
        let r = ring(&["x", "y"]);
        match parse_polynomial("x y", &r) {
            Err(Error::Parse { col, .. }) => assert_eq!(col, 3),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn rejects_unknown_variable() {
        let r = ring(&["x", "y"]);
        match parse_polynomial("x + w", &r) {
            Err(Error::UnknownVariable { name, col, .. }) => {
                assert_eq!(name, "w");
                assert_eq!(col, 5);
            }
            other => panic!("expected unknown-variable error, got {other:?}"),
        }
    }

    #[test]
    fn rejects_floats_and_bare_slash() {
        let r = ring(&["x"]);
        assert!(parse_polynomial("1.5*x", &r).is_err());
        assert!(parse_polynomial("x/2", &r).is_err());
    }

    #[test]
    fn rational_literals_and_precedence() {
        let r = ring(&["x", "y"]);
        // ^ over *, * over +, unary minus.
        let f = parse_polynomial("-x^2*y + 1/2", &r).unwrap();
        let expected = r
            .constant(BigRational::new(BigInt::from(1), BigInt::from(2)))
            .checked_sub(&r.var(0).pow(2).checked_mul(&r.var(1)).unwrap())
            .unwrap();
        assert_eq!(f, expected);
        // -x^2 is -(x^2), not (-x)^2.
        let g = parse_polynomial("-x^2", &r).unwrap();
        assert_eq!(g, r.var(0).pow(2).scale(&-BigRational::from_integer(BigInt::from(1))));
    }

    #[test]
    fn parenthesized_expressions() {
        let r = ring(&["u", "v", "w", "x", "y"]);
        let f = parse_polynomial("y^2 - x^3 - (u^2 + v^2 + w^2)*x^2", &r).unwrap();
        assert_eq!(f.num_terms(), 5);
        assert_eq!(f.total_degree(), 4);
    }

    #[test]
    fn empty_input_is_a_parse_error() {
        let r = ring(&["x"]);
        assert!(matches!(parse_polynomial("", &r), Err(Error::Parse { .. })));
        assert!(matches!(parse_polynomial("   ", &r), Err(Error::Parse { .. })));
    }
}
