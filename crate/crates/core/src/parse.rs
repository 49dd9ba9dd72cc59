//! Text syntax for groups, group elements, semigroup elements and words.
//!
//! ```text
//! group  := "Z" | "Q" | "lex(" group "," group ")"
//! elem   := int                      in Z
//!         | int [ "/" int ]          in Q
//!         | "(" elem "," elem ")"    in lex(A,H)
//! cone   := ("a" | "o") "[" elem ";" elem "]"
//! word   := "1" | ( ("p" | "q") [ "^" digits ] )*
//! ```
//!
//! Whitespace is allowed between tokens. Every `Display` output of the
//! corresponding types parses back to an equal value.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::bicyclic::{BicyclicWord, Letter};
use crate::extended::ConeTag;
use crate::group::{GroupElement, OrderedGroup};

/// Nesting bound for `lex(...)` and pair literals.
pub const MAX_DEPTH: usize = 64;
/// Bound on a single `^n` exponent in a word.
pub const MAX_EXPONENT: u64 = 1 << 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    /// Byte offset into the input.
    pub pos: usize,
    pub msg: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at column {}: {}", self.pos + 1, self.msg)
    }
}

impl std::error::Error for ParseError {}

type PResult<T> = std::result::Result<T, ParseError>;

/// A parsed `a[g;h]` or `o[g;h]`, not yet checked against any carrier.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeLiteral {
    pub g: GroupElement,
    pub h: GroupElement,
    pub tag: ConeTag,
}

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(s: &'a str) -> Self {
        Cursor { src: s.as_bytes(), pos: 0 }
    }

    fn err<T>(&self, msg: impl Into<String>) -> PResult<T> {
        Err(ParseError { pos: self.pos, msg: msg.into() })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> PResult<()> {
        if self.eat(c) {
            Ok(())
        } else {
            match self.peek() {
                Some(got) => self.err(format!("expected `{}`, found `{}`", c as char, got as char)),
                None => self.err(format!("expected `{}`, found end of input", c as char)),
            }
        }
    }

    fn expect_keyword(&mut self, kw: &str) -> PResult<()> {
        self.skip_ws();
        if self.src[self.pos..].starts_with(kw.as_bytes()) {
            self.pos += kw.len();
            Ok(())
        } else {
            self.err(format!("expected `{kw}`"))
        }
    }

    fn finish(&mut self) -> PResult<()> {
        match self.peek() {
            None => Ok(()),
            Some(c) => self.err(format!("unexpected trailing `{}`", c as char)),
        }
    }

    fn digits(&mut self) -> PResult<&'a str> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected digits");
        }
        Ok(std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits"))
    }

    fn integer(&mut self) -> PResult<BigInt> {
        let negative = self.eat(b'-');
        let start = self.pos;
        let digits = self.digits().map_err(|e| ParseError { pos: start.max(e.pos), ..e })?;
        let v: BigInt = digits.parse().expect("digit string parses");
        Ok(if negative { -v } else { v })
    }

    fn group(&mut self, depth: usize) -> PResult<OrderedGroup> {
        if depth > MAX_DEPTH {
            return self.err("group nested too deeply");
        }
        match self.peek() {
            Some(b'Z') => {
                self.pos += 1;
                Ok(OrderedGroup::Integers)
            }
            Some(b'Q') => {
                self.pos += 1;
                Ok(OrderedGroup::Rationals)
            }
            Some(b'l') => {
                self.expect_keyword("lex")?;
                self.expect(b'(')?;
                let left = self.group(depth + 1)?;
                self.expect(b',')?;
                let right = self.group(depth + 1)?;
                self.expect(b')')?;
                Ok(OrderedGroup::lex(left, right))
            }
            Some(c) => self.err(format!("expected a group (Z, Q or lex), found `{}`", c as char)),
            None => self.err("expected a group, found end of input"),
        }
    }

    fn element(&mut self, group: &OrderedGroup, depth: usize) -> PResult<GroupElement> {
        if depth > MAX_DEPTH {
            return self.err("element nested too deeply");
        }
        match group {
            OrderedGroup::Integers => Ok(GroupElement::Int(self.integer()?)),
            OrderedGroup::Rationals => {
                let num = self.integer()?;
                if !self.eat(b'/') {
                    return Ok(GroupElement::Rat(BigRational::from_integer(num)));
                }
                let at = self.pos;
                let den = self.integer()?;
                if den.is_zero() {
                    return Err(ParseError { pos: at, msg: "zero denominator".into() });
                }
                Ok(GroupElement::Rat(BigRational::new(num, den)))
            }
            OrderedGroup::Lex(l, r) => {
                self.expect(b'(')?;
                let a = self.element(l, depth + 1)?;
                self.expect(b',')?;
                let b = self.element(r, depth + 1)?;
                self.expect(b')')?;
                Ok(GroupElement::pair(a, b))
            }
        }
    }

    fn cone(&mut self, group: &OrderedGroup) -> PResult<ConeLiteral> {
        let tag = match self.peek() {
            Some(b'a') => ConeTag::Closed,
            Some(b'o') => ConeTag::Open,
            Some(c) => return self.err(format!("expected `a[` or `o[`, found `{}`", c as char)),
            None => return self.err("expected `a[` or `o[`, found end of input"),
        };
        self.pos += 1;
        self.expect(b'[')?;
        let g = self.element(group, 0)?;
        self.expect(b';')?;
        let h = self.element(group, 0)?;
        self.expect(b']')?;
        Ok(ConeLiteral { g, h, tag })
    }

    fn word(&mut self) -> PResult<BicyclicWord> {
        if self.eat(b'1') {
            return Ok(BicyclicWord::new(Vec::new()));
        }
        let mut letters = Vec::new();
        while let Some(c) = self.peek() {
            let letter = match c {
                b'p' => Letter::P,
                b'q' => Letter::Q,
                _ => return self.err(format!("expected `p` or `q`, found `{}`", c as char)),
            };
            self.pos += 1;
            let mut times = 1u64;
            if self.eat(b'^') {
                let at = self.pos;
                let digits = self.digits()?;
                times = match digits.parse::<u64>() {
                    Ok(n) if n <= MAX_EXPONENT => n,
                    _ => {
                        return Err(ParseError {
                            pos: at,
                            msg: format!("exponent exceeds {MAX_EXPONENT}"),
                        })
                    }
                };
            }
            if letters.len() as u64 + times > MAX_EXPONENT {
                return self.err("word too long");
            }
            letters.extend(std::iter::repeat(letter).take(times as usize));
        }
        Ok(BicyclicWord::new(letters))
    }
}

fn reject_non_ascii(s: &str) -> PResult<()> {
    match s.bytes().position(|b| !b.is_ascii()) {
        Some(pos) => Err(ParseError { pos, msg: "non-ASCII input".into() }),
        None => Ok(()),
    }
}

pub fn parse_group(s: &str) -> PResult<OrderedGroup> {
    reject_non_ascii(s)?;
    let mut c = Cursor::new(s);
    let g = c.group(0)?;
    c.finish()?;
    Ok(g)
}

pub fn parse_element(group: &OrderedGroup, s: &str) -> PResult<GroupElement> {
    reject_non_ascii(s)?;
    let mut c = Cursor::new(s);
    let x = c.element(group, 0)?;
    c.finish()?;
    Ok(x)
}

pub fn parse_cone_literal(group: &OrderedGroup, s: &str) -> PResult<ConeLiteral> {
    reject_non_ascii(s)?;
    let mut c = Cursor::new(s);
    let lit = c.cone(group)?;
    c.finish()?;
    Ok(lit)
}

pub fn parse_word(s: &str) -> PResult<BicyclicWord> {
    reject_non_ascii(s)?;
    let mut c = Cursor::new(s);
    let w = c.word()?;
    c.finish()?;
    Ok(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bicyclic::{normalize, BicyclicNormal};
    use crate::cone::ConeElement;
    use crate::extended::ExtElement;

    fn zz() -> OrderedGroup {
        OrderedGroup::lex(OrderedGroup::Integers, OrderedGroup::Integers)
    }

    #[test]
    fn groups() {
        assert_eq!(parse_group("Z").unwrap(), OrderedGroup::Integers);
        assert_eq!(parse_group(" lex( Z , Q ) ").unwrap().to_string(), "lex(Z,Q)");
        assert_eq!(
            parse_group("lex(lex(Z,Z),Q)").unwrap(),
            OrderedGroup::lex(zz(), OrderedGroup::Rationals)
        );
        for bad in ["", "R", "lex(Z)", "lex(Z,Q", "lex(Z,Q))", "Zz", "lex Z,Q"] {
            assert!(parse_group(bad).is_err(), "{bad:?}");
        }
        let deep = "lex(".repeat(200) + "Z";
        assert!(parse_group(&deep).is_err());
    }

    #[test]
    fn errors_carry_positions() {
        let e = parse_group("lex(Z;Q)").unwrap_err();
        assert_eq!(e.pos, 5);
        assert!(e.to_string().contains("column 6"));
        let e = parse_element(&OrderedGroup::Rationals, "3/0").unwrap_err();
        assert_eq!(e.msg, "zero denominator");
        assert_eq!(e.pos, 2);
        let e = parse_cone_literal(&OrderedGroup::Integers, "a[1;x]").unwrap_err();
        assert_eq!(e.pos, 4);
    }

    #[test]
    fn elements() {
        let q = OrderedGroup::Rationals;
        assert_eq!(parse_element(&q, "-6/4").unwrap(), GroupElement::rat(-3, 2));
        assert_eq!(parse_element(&q, "5/-7").unwrap(), GroupElement::rat(-5, 7));
        assert_eq!(parse_element(&q, "2").unwrap(), GroupElement::rat(2, 1));
        assert_eq!(
            parse_element(&zz(), "(1, -2)").unwrap(),
            GroupElement::pair(GroupElement::int(1), GroupElement::int(-2))
        );
        assert!(parse_element(&OrderedGroup::Integers, "1/2").is_err());
        assert!(parse_element(&zz(), "3").is_err());
        assert!(parse_element(&OrderedGroup::Integers, "- 3").is_ok());
        assert!(parse_element(&OrderedGroup::Integers, "--3").is_err());
    }

    #[test]
    fn cone_literals() {
        let lit = parse_cone_literal(&zz(), "a[(1,2);(3,4)]").unwrap();
        assert_eq!(lit.tag, ConeTag::Closed);
        assert_eq!(lit.h.to_string(), "(3,4)");
        let lit = parse_cone_literal(&OrderedGroup::Rationals, "o[1/2;3]").unwrap();
        assert_eq!(lit.tag, ConeTag::Open);
        assert!(parse_cone_literal(&OrderedGroup::Integers, "b[1;2]").is_err());
        assert!(parse_cone_literal(&OrderedGroup::Integers, "a[1;2").is_err());
    }

    #[test]
    fn words() {
        assert!(parse_word("1").unwrap().is_empty());
        assert_eq!(parse_word("pqq p").unwrap().to_string(), "pqqp");
        assert_eq!(parse_word("q^2 p^3").unwrap().to_string(), "qqppp");
        assert_eq!(parse_word("").unwrap().len(), 0);
        assert!(parse_word("pxq").is_err());
        assert!(parse_word("p^99999999999").is_err());
        let n = BicyclicNormal::new(4, 0);
        assert_eq!(normalize(&parse_word(&n.to_string()).unwrap()), n);
    }

    #[test]
    fn printed_literals_reparse() {
        let g = OrderedGroup::lex(OrderedGroup::Integers, OrderedGroup::Rationals);
        let a = GroupElement::pair(GroupElement::int(-3), GroupElement::rat(7, -4));
        let b = GroupElement::pair(GroupElement::int(0), GroupElement::rat(2, 1));
        assert_eq!(parse_element(&g, &a.to_string()).unwrap(), a);
        let x = ConeElement::new(a.clone(), b.clone()).unwrap();
        let lit = parse_cone_literal(&g, &x.to_string()).unwrap();
        assert_eq!((lit.g, lit.h, lit.tag), (a.clone(), b.clone(), ConeTag::Closed));
        let y = ExtElement::open(a.clone(), b.clone()).unwrap();
        let lit = parse_cone_literal(&g, &y.to_string()).unwrap();
        assert_eq!((lit.g, lit.h, lit.tag), (a, b, ConeTag::Open));
    }
}
