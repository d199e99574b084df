//! The ring-expression language.
//!
//! ```text
//! ring := term { "x" term }
//! term := atom [ "/<" nat { "," nat } ">" ]
//! atom := "Z" nat
//!       | "Z" nat "[x]^" nat
//!       | "Z" nat "(+)" "Z" nat
//!       | "(" ring ")"
//! ```
//!
//! Whitespace between tokens is ignored. A chain `A x B x C` is one
//! three-factor product; its element encoding coincides with the
//! left-nested `(A x B) x C`. Quotient generators are element indices in the
//! encoding of the ring they quotient.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, ParseError, Result};
use crate::ring::RingDescriptor;

const MAX_DEPTH: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Tok {
    Z,
    Nat(u64),
    Times,
    Poly,
    Oplus,
    LParen,
    RParen,
    Quot,
    Comma,
    RAngle,
    End,
}

impl Tok {
    fn describe(self) -> String {
        match self {
            Tok::Z => "\"Z\"".into(),
            Tok::Nat(n) => format!("number {n}"),
            Tok::Times => "\"x\"".into(),
            Tok::Poly => "\"[x]^\"".into(),
            Tok::Oplus => "\"(+)\"".into(),
            Tok::LParen => "\"(\"".into(),
            Tok::RParen => "\")\"".into(),
            Tok::Quot => "\"/<\"".into(),
            Tok::Comma => "\",\"".into(),
            Tok::RAngle => "\">\"".into(),
            Tok::End => "end of input".into(),
        }
    }
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn eat_literal(&mut self, lit: &[u8]) -> bool {
        if self.src[self.pos..].starts_with(lit) {
            self.pos += lit.len();
            true
        } else {
            false
        }
    }

    /// Next token and its byte offset.
    fn next(&mut self) -> std::result::Result<(Tok, usize), ParseError> {
        self.skip_ws();
        let start = self.pos;
        let Some(&c) = self.src.get(self.pos) else {
            return Ok((Tok::End, start));
        };
        let tok = match c {
            b'Z' => {
                self.pos += 1;
                Tok::Z
            }
            b'x' => {
                self.pos += 1;
                Tok::Times
            }
            b'0'..=b'9' => {
                let mut value: u64 = 0;
                while let Some(&d) = self.src.get(self.pos).filter(|d| d.is_ascii_digit()) {
                    value = value
                        .checked_mul(10)
                        .and_then(|v| v.checked_add((d - b'0') as u64))
                        .ok_or_else(|| ParseError {
                            offset: start,
                            expected: "a number that fits in 64 bits".into(),
                            found: "an overlong number".into(),
                        })?;
                    self.pos += 1;
                }
                Tok::Nat(value)
            }
            _ if self.eat_literal(b"[x]^") => Tok::Poly,
            _ if self.eat_literal(b"(+)") => Tok::Oplus,
            _ if self.eat_literal(b"/<") => Tok::Quot,
            b'(' => {
                self.pos += 1;
                Tok::LParen
            }
            b')' => {
                self.pos += 1;
                Tok::RParen
            }
            b',' => {
                self.pos += 1;
                Tok::Comma
            }
            b'>' => {
                self.pos += 1;
                Tok::RAngle
            }
            _ => {
                return Err(ParseError {
                    offset: start,
                    expected: "a ring expression token".into(),
                    found: describe_byte(self.src, start),
                })
            }
        };
        Ok((tok, start))
    }
}

fn describe_byte(src: &[u8], at: usize) -> String {
    let tail = &src[at..];
    let len = match tail[0] {
        b if b < 0x80 => 1,
        b if b >= 0xF0 => 4,
        b if b >= 0xE0 => 3,
        _ => 2,
    };
    match std::str::from_utf8(&tail[..len.min(tail.len())]) {
        Ok(s) => format!("{s:?}"),
        Err(_) => format!("byte 0x{:02x}", tail[0]),
    }
}

struct Parser<'a> {
    lexer: Lexer<'a>,
    tok: Tok,
    at: usize,
    depth: usize,
}

type PResult<T> = std::result::Result<T, ParseError>;

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> PResult<Self> {
        let mut lexer = Lexer {
            src: text.as_bytes(),
            pos: 0,
        };
        let (tok, at) = lexer.next()?;
        Ok(Parser {
            lexer,
            tok,
            at,
            depth: 0,
        })
    }

    fn bump(&mut self) -> PResult<()> {
        let (tok, at) = self.lexer.next()?;
        self.tok = tok;
        self.at = at;
        Ok(())
    }

    fn unexpected<T>(&self, expected: &str) -> PResult<T> {
        Err(ParseError {
            offset: self.at,
            expected: expected.into(),
            found: self.tok.describe(),
        })
    }

    fn expect(&mut self, tok: Tok) -> PResult<()> {
        if self.tok == tok {
            self.bump()
        } else {
            self.unexpected(&tok.describe())
        }
    }

    fn nat(&mut self) -> PResult<(u64, usize)> {
        match self.tok {
            Tok::Nat(n) => {
                let at = self.at;
                self.bump()?;
                Ok((n, at))
            }
            _ => self.unexpected("a number"),
        }
    }

    fn ring(&mut self) -> PResult<RingDescriptor> {
        let start = self.at;
        let first = self.term()?;
        if self.tok != Tok::Times {
            return Ok(first);
        }
        let mut factors = vec![first];
        while self.tok == Tok::Times {
            self.bump()?;
            factors.push(self.term()?);
        }
        let d = RingDescriptor::Product(factors);
        check(&d, start)?;
        Ok(d)
    }

    fn term(&mut self) -> PResult<RingDescriptor> {
        let start = self.at;
        let base = self.atom()?;
        if self.tok != Tok::Quot {
            return Ok(base);
        }
        self.bump()?;
        let mut generators = Vec::new();
        loop {
            let (g, at) = self.nat()?;
            let bound = base.size_bound();
            if bound.is_some_and(|b| g as u128 >= b) {
                return Err(ParseError {
                    offset: at,
                    expected: format!("an element index below {}", bound.unwrap_or_default()),
                    found: format!("number {g}"),
                });
            }
            generators.push(g as usize);
            if self.tok != Tok::Comma {
                break;
            }
            self.bump()?;
        }
        self.expect(Tok::RAngle)?;
        let d = RingDescriptor::quotient(base, generators);
        check(&d, start)?;
        Ok(d)
    }

    fn atom(&mut self) -> PResult<RingDescriptor> {
        match self.tok {
            Tok::LParen => {
                if self.depth >= MAX_DEPTH {
                    return self.unexpected("at most 64 levels of parentheses");
                }
                self.depth += 1;
                self.bump()?;
                let inner = self.ring()?;
                self.expect(Tok::RParen)?;
                self.depth -= 1;
                Ok(inner)
            }
            Tok::Z => {
                self.bump()?;
                let (n, n_at) = self.nat()?;
                let d = match self.tok {
                    Tok::Poly => {
                        self.bump()?;
                        let (k, k_at) = self.nat()?;
                        let k = u32::try_from(k).map_err(|_| ParseError {
                            offset: k_at,
                            expected: "a truncation degree below 2^32".into(),
                            found: format!("number {k}"),
                        })?;
                        if k == 0 {
                            return Err(ParseError {
                                offset: k_at,
                                expected: "a truncation degree of at least 1".into(),
                                found: "number 0".into(),
                            });
                        }
                        RingDescriptor::TruncPoly { n, k }
                    }
                    Tok::Oplus => {
                        self.bump()?;
                        self.expect(Tok::Z)?;
                        let (m, m_at) = self.nat()?;
                        if m == 0 || n % m != 0 {
                            return Err(ParseError {
                                offset: m_at,
                                expected: format!("a module order dividing {n}"),
                                found: format!("number {m}"),
                            });
                        }
                        RingDescriptor::Idealize { n, m }
                    }
                    _ => RingDescriptor::Zn(n),
                };
                if n < 2 {
                    return Err(ParseError {
                        offset: n_at,
                        expected: "a modulus of at least 2".into(),
                        found: format!("number {n}"),
                    });
                }
                Ok(d)
            }
            _ => self.unexpected("\"Z\" or \"(\""),
        }
    }
}

fn check(d: &RingDescriptor, offset: usize) -> PResult<()> {
    d.validate_node().map_err(|e| ParseError {
        offset,
        expected: "a valid ring".into(),
        found: match e {
            Error::InvalidDescriptor(msg) => msg,
            other => other.to_string(),
        },
    })
}

/// Parses a ring expression.
pub fn parse(text: &str) -> std::result::Result<RingDescriptor, ParseError> {
    let mut p = Parser::new(text)?;
    let d = p.ring()?;
    if p.tok != Tok::End {
        return p.unexpected("\"x\", \"/<\" or end of input");
    }
    Ok(d)
}

/// Renders a descriptor so that `parse(render(d)) == d`.
pub fn render(d: &RingDescriptor) -> String {
    d.to_string()
}

impl fmt::Display for RingDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingDescriptor::Zn(n) => write!(f, "Z{n}"),
            RingDescriptor::TruncPoly { n, k } => write!(f, "Z{n}[x]^{k}"),
            RingDescriptor::Idealize { n, m } => write!(f, "Z{n}(+)Z{m}"),
            RingDescriptor::Product(factors) => {
                for (i, factor) in factors.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" x ")?;
                    }
                    if matches!(factor, RingDescriptor::Product(_)) {
                        write!(f, "({factor})")?;
                    } else {
                        write!(f, "{factor}")?;
                    }
                }
                Ok(())
            }
            RingDescriptor::Quotient { base, generators } => {
                if matches!(
                    **base,
                    RingDescriptor::Product(_) | RingDescriptor::Quotient { .. }
                ) {
                    write!(f, "({base})")?;
                } else {
                    write!(f, "{base}")?;
                }
                f.write_str("/<")?;
                for (i, g) in generators.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{g}")?;
                }
                f.write_str(">")
            }
        }
    }
}

impl FromStr for RingDescriptor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(parse(s)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use RingDescriptor::*;

    #[test]
    fn parses_each_construction() {
        assert_eq!(parse("Z8").unwrap(), Zn(8));
        assert_eq!(
            parse("Z32/<16>").unwrap(),
            RingDescriptor::quotient(Zn(32), vec![16])
        );
        assert_eq!(parse("Z8 x Z3").unwrap(), Product(vec![Zn(8), Zn(3)]));
        assert_eq!(parse("Z4[x]^2").unwrap(), TruncPoly { n: 4, k: 2 });
        assert_eq!(parse("Z4(+)Z2").unwrap(), Idealize { n: 4, m: 2 });
    }

    #[test]
    fn precedence_and_grouping() {
        assert_eq!(
            parse("Z2 x Z3/<1> x Z4").unwrap(),
            Product(vec![Zn(2), RingDescriptor::quotient(Zn(3), vec![1]), Zn(4)])
        );
        assert_eq!(
            parse("(Z2 x Z3) x Z4").unwrap(),
            Product(vec![Product(vec![Zn(2), Zn(3)]), Zn(4)])
        );
        assert_eq!(
            parse(" ( Z2 x Z2 ) /< 1 , 2 > ").unwrap(),
            RingDescriptor::quotient(Product(vec![Zn(2), Zn(2)]), vec![1, 2])
        );
        assert_eq!(parse("((Z5))").unwrap(), Zn(5));
    }

    #[test]
    fn renders() {
        assert_eq!(render(&Zn(8)), "Z8");
        assert_eq!(render(&Product(vec![Zn(2), Zn(3)])), "Z2 x Z3");
        assert_eq!(
            render(&RingDescriptor::quotient(TruncPoly { n: 4, k: 2 }, vec![4])),
            "Z4[x]^2/<4>"
        );
        let nested = RingDescriptor::quotient(RingDescriptor::quotient(Zn(32), vec![16]), vec![2]);
        assert_eq!(render(&nested), "(Z32/<16>)/<2>");
        assert_eq!(parse(&render(&nested)).unwrap(), nested);
    }

    fn err_at(text: &str) -> usize {
        parse(text).unwrap_err().offset
    }

    #[test]
    fn positioned_errors() {
        assert_eq!(err_at("Z"), 1);
        assert_eq!(err_at("Z0"), 1);
        assert_eq!(err_at("Z1"), 1);
        assert_eq!(err_at("Z4(+)Z3"), 6);
        assert_eq!(err_at("Z8/<4"), 5);
        assert_eq!(err_at("Z8/<"), 4);
        assert_eq!(err_at("(Z8"), 3);
        assert_eq!(err_at("Z8 x"), 4);
        assert_eq!(err_at("Z8 Z3"), 3);
        assert_eq!(err_at("Z8/<8>"), 4);
        assert_eq!(err_at("Z4[x]^0"), 6);
        assert_eq!(err_at("Z99999999999999999999"), 1);
        assert_eq!(err_at(""), 0);
        assert_eq!(err_at("é"), 0);
    }

    #[test]
    fn error_descriptions() {
        let e = parse("Z4(+)Z3").unwrap_err();
        assert!(e.expected.contains("dividing 4"), "{e}");
        assert_eq!(e.found, "number 3");
        let e = parse("Z8/<4").unwrap_err();
        assert_eq!(e.found, "end of input");
    }

    #[test]
    fn deep_nesting_is_rejected_not_overflowed() {
        let text = "(".repeat(10_000) + "Z2" + &")".repeat(10_000);
        assert!(parse(&text).is_err());
    }

    #[test]
    fn from_str_wraps_parse_errors() {
        assert!(matches!("Z0".parse::<RingDescriptor>(), Err(Error::Parse(_))));
        assert_eq!("Z9".parse::<RingDescriptor>().unwrap(), Zn(9));
    }
}
