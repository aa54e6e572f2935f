//! Text form of group expressions.
//!
//! ```text
//! EXPR := TERM ("x" TERM)*
//! TERM := TYPE | TYPE "^" INT | "Aff" INT
//! TYPE := LETTER INT          LETTER in {A, B, C, D, E, F, G}
//! ```
//!
//! Whitespace is ignored everywhere, so `A2xAff1` and `A2 x Aff 1` both
//! parse. `Aff` is a keyword, which keeps affine space apart from type-A
//! factors with one byte of lookahead.

use crate::bounds::GroupExpr;
use crate::error::{Error, Result};
use crate::lie_core::{Family, SimpleType};

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, lit: &str) -> bool {
        self.skip_ws();
        if self.src[self.pos..].starts_with(lit.as_bytes()) {
            self.pos += lit.len();
            true
        } else {
            false
        }
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Syntax {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    /// Digits may be separated by whitespace only before the first one.
    fn int(&mut self, what: &str) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err(format!("expected {what}")));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| Error::Syntax {
                pos: start,
                msg: format!("{what} too large"),
            })
    }
}

/// Parses and normalises a group expression.
pub fn parse_expr(text: &str) -> Result<GroupExpr> {
    let mut cur = Cursor {
        src: text.as_bytes(),
        pos: 0,
    };
    let mut factors = Vec::new();
    let mut affine: Option<u64> = None;
    loop {
        if cur.eat("Aff") {
            let k = cur.int("affine dimension")?;
            if affine.replace(k).is_some() {
                return Err(Error::MultipleAffine);
            }
        } else {
            let at = {
                cur.skip_ws();
                cur.pos
            };
            let letter = cur.peek().ok_or_else(|| cur.err("expected a term"))?;
            let family = Family::from_letter(letter as char)
                .ok_or_else(|| cur.err(format!("unexpected `{}`", letter as char)))?;
            cur.pos += 1;
            let rank = cur.int("rank")?;
            let rank = usize::try_from(rank).map_err(|_| Error::Syntax {
                pos: at,
                msg: "rank too large".into(),
            })?;
            let ty = SimpleType::new(family, rank)?;
            let mult = if cur.eat("^") {
                let m = cur.int("multiplicity")?;
                match u32::try_from(m) {
                    Ok(0) => return Err(cur.err("multiplicity must be at least 1")),
                    Ok(m) => m,
                    Err(_) => return Err(cur.err("multiplicity too large")),
                }
            } else {
                1
            };
            factors.push((ty, mult));
        }
        match cur.peek() {
            None => break,
            Some(b'x') => cur.pos += 1,
            Some(c) => return Err(cur.err(format!("expected `x` or end of input, found `{}`", c as char))),
        }
    }
    GroupExpr::new(factors, affine.unwrap_or(0))
}

/// Canonical text form; `parse_expr(&format_expr(e)) == e`.
pub fn format_expr(expr: &GroupExpr) -> String {
    expr.to_string()
}

impl std::str::FromStr for GroupExpr {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_expr(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> SimpleType {
        s.parse().unwrap()
    }

    #[test]
    fn examples() {
        let e = parse_expr("A1^3").unwrap();
        assert_eq!((e.factors(), e.affine_dim()), (&[(t("A1"), 3)][..], 0));
        let e = parse_expr("A2 x Aff1").unwrap();
        assert_eq!((e.factors(), e.affine_dim()), (&[(t("A2"), 1)][..], 1));
        let e = parse_expr("B4 x C3").unwrap();
        assert_eq!((e.simple_count(), e.affine_dim()), (2, 0));
    }

    #[test]
    fn normalisation() {
        let e = parse_expr("  C3 xA1x B4 x A1 ^ 2 x Aff 5").unwrap();
        assert_eq!(format_expr(&e), "A1^3 x B4 x C3 x Aff5");
        assert_eq!(parse_expr("A2xAff1").unwrap(), parse_expr("A2 x Aff1").unwrap());
        assert_eq!(format_expr(&parse_expr("Aff0 x G2").unwrap()), "G2");
        assert_eq!(format_expr(&parse_expr("Aff3").unwrap()), "Aff3");
    }

    #[test]
    fn errors() {
        assert_eq!(parse_expr("Aff1 x A1 x Aff2"), Err(Error::MultipleAffine));
        assert!(matches!(parse_expr("C2"), Err(Error::InvalidRank { .. })));
        assert!(matches!(parse_expr("A1 x"), Err(Error::Syntax { pos: 4, .. })));
        assert!(matches!(parse_expr("A1 * A2"), Err(Error::Syntax { pos: 3, .. })));
        assert!(matches!(parse_expr("A"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_expr("A1^0"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_expr("H4"), Err(Error::Syntax { pos: 0, .. })));
        assert!(matches!(parse_expr(""), Err(Error::Syntax { .. })));
        assert_eq!(parse_expr("Aff0"), Err(Error::EmptyExpression));
        assert!(matches!(parse_expr("A99999999999999999999999"), Err(Error::Syntax { .. })));
    }
}
