//! Parser for the ASCII polynomial syntax.
//!
//! ```text
//! expr  := sign? term (('+' | '-') term)*
//! term  := coeff? ('*'? var ('^' nat)?)*
//! coeff := int | int '/' posint
//! ```
//!
//! Whitespace is insignificant. Positions in errors are byte offsets.

use num_bigint::BigInt;

use crate::coeff::Coefficient;
use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::ring::Ring;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
}

fn err<T>(position: usize, message: impl Into<String>) -> Result<T> {
    Err(Error::Parse {
        position,
        message: message.into(),
    })
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\r' | b'\n' => {
                i += 1;
                continue;
            }
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'^' => Tok::Caret,
            b'/' => Tok::Slash,
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((start, Tok::Int(text[start..i].parse().expect("digits"))));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((start, Tok::Ident(text[start..i].to_string())));
                continue;
            }
            _ => {
                let ch = text[start..].chars().next().unwrap();
                return err(start, format!("unexpected character `{ch}`"));
            }
        };
        out.push((start, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    ring: &'a Ring,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(p, _)| *p)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<Vec<(Coefficient, Monomial)>> {
        let mut terms = Vec::new();
        let mut negate = match self.peek() {
            Some(Tok::Minus) => {
                self.bump();
                true
            }
            Some(Tok::Plus) => {
                self.bump();
                false
            }
            _ => false,
        };
        loop {
            let (c, m) = self.term()?;
            terms.push((if negate { -c } else { c }, m));
            match self.peek() {
                None => return Ok(terms),
                Some(Tok::Plus) => negate = false,
                Some(Tok::Minus) => negate = true,
                Some(_) => return err(self.here(), "expected `+` or `-`"),
            }
            self.bump();
        }
    }

    fn term(&mut self) -> Result<(Coefficient, Monomial)> {
        let field = self.ring.field();
        let start = self.here();
        let (coeff, have_coeff) = if let Some(Tok::Int(n)) = self.peek().cloned() {
            self.bump();
            let c = 
            if self.peek() == Some(&Tok::Slash) {
                self.bump();
                let at = self.here();
                let Some(Tok::Int(d)) = self.bump() else {
                    return err(at, "expected denominator");
                };
                if d == BigInt::from(0) {
                    return err(at, "division by zero");
                }
                field.from_ratio(&n, &d).map_err(|e| match e {
                    Error::Parse { message, .. } => Error::Parse { position: at, message },
                    other => other,
                })?
            } else {
                field.from_bigint(&n)
            };
            (c, true)
        } else {
            if self.peek() == Some(&Tok::Star) {
                return err(start, "term cannot start with `*`");
            }
            (field.one(), false)
        };
        let mut exps = vec![0u32; self.ring.nvars()];
        let mut factors = 0;
        loop {
            let star_at = self.here();
            let starred = self.peek() == Some(&Tok::Star);
            if starred {
                self.bump();
            }
            match self.peek().cloned() {
                Some(Tok::Ident(name)) => {
                    let at = self.here();
                    self.bump();
                    let Some(idx) = self.ring.index_of(&name) else {
                        return err(at, format!("unknown variable `{name}`"));
                    };
                    let mut power = 1u32;
                    if self.peek() == Some(&Tok::Caret) {
                        self.bump();
                        let at = self.here();
                        let Some(Tok::Int(e)) = self.bump() else {
                            return err(at, "expected exponent");
                        };
                        power = u32::try_from(&e).or_else(|_| err(at, "exponent too large"))?;
                    }
                    exps[idx] = exps[idx]
                        .checked_add(power)
                        .ok_or(Error::Parse {
                            position: at,
                            message: "exponent too large".into(),
                        })?;
                    factors += 1;
                }
                _ if starred => return err(star_at + 1, "expected variable after `*`"),
                _ => break,
            }
        }
        if factors == 0 && !have_coeff {
            return err(start, "expected a term");
        }
        Ok((coeff, Monomial::new(exps)))
    }
}

/// Parses `text` into a canonical polynomial of `ring`.
pub fn parse_polynomial(text: &str, ring: &Ring) -> Result<Polynomial> {
    let toks = tokenize(text)?;
    let mut parser = Parser {
        toks,
        pos: 0,
        end: text.len(),
        ring,
    };
    let terms = parser.expr()?;
    Polynomial::from_terms(ring, terms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::FieldSpec;
    use crate::monomial::MonomialOrdering;
    use crate::ring::RingContext;
    use proptest::prelude::*;

    fn r3() -> Ring {
        RingContext::local(&["x", "y", "z"]).unwrap()
    }

    fn position(e: Error) -> usize {
        match e {
            Error::Parse { position, .. } => position,
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn accepts_the_grammar() {
        let r = r3();
        let f = parse_polynomial("x^3 + y^4", &r).unwrap();
        assert_eq!(f.len(), 2);
        let g = parse_polynomial("-2/3*x*y^2", &r).unwrap();
        assert_eq!(g.leading_coefficient().unwrap().to_string(), "-2/3");
        assert_eq!(parse_polynomial("x^3 - z^2", &r).unwrap().to_string(), "-z^2 + x^3");
        assert_eq!(parse_polynomial("2 x y", &r).unwrap().to_string(), "2*x*y");
        assert_eq!(parse_polynomial("x*x*y^0", &r).unwrap().to_string(), "x^2");
        assert!(parse_polynomial("0", &r).unwrap().is_zero());
        assert!(parse_polynomial("x - x", &r).unwrap().is_zero());
        assert_eq!(parse_polynomial(" 4/6 ", &r).unwrap().to_string(), "2/3");
    }

    #[test]
    fn reports_positions() {
        let r = r3();
        assert_eq!(position(parse_polynomial("x + w", &r).unwrap_err()), 4);
        assert_eq!(position(parse_polynomial("x + 1/0", &r).unwrap_err()), 6);
        assert_eq!(position(parse_polynomial("x +", &r).unwrap_err()), 3);
        assert_eq!(position(parse_polynomial("x ^ y", &r).unwrap_err()), 4);
        assert_eq!(position(parse_polynomial("*x", &r).unwrap_err()), 0);
        assert_eq!(position(parse_polynomial("x $ y", &r).unwrap_err()), 2);
        assert_eq!(position(parse_polynomial("2 3", &r).unwrap_err()), 2);
        assert!(parse_polynomial("", &r).is_err());
        assert!(parse_polynomial("x*", &r).is_err());
    }

    #[test]
    fn prime_field_rejects_vanishing_denominator() {
        let r = RingContext::new(&["x"], MonomialOrdering::LocalDegRevLex, FieldSpec::prime(5).unwrap())
            .unwrap();
        assert_eq!(position(parse_polynomial("x + 1/10", &r).unwrap_err()), 6);
        assert_eq!(parse_polynomial("x - 1", &r).unwrap().to_string(), "4 + x");
    }

    fn poly_text() -> impl Strategy<Value = String> {
        let term = (any::<bool>(), 0i64..=5, 1i64..=4, 0u32..4, 0u32..4, 0u32..3).prop_map(
            |(neg, n, d, a, b, c)| {
                let sign = if neg { "-" } else { "+" };
                format!("{sign} {n}/{d}*x^{a}*y^{b}*z^{c}")
            },
        );
        proptest::collection::vec(term, 0..6).prop_map(|ts| {
            if ts.is_empty() {
                "0".to_string()
            } else {
                ts.join(" ")
            }
        })
    }

    proptest! {
        #[test]
        fn print_parse_round_trip(text in poly_text()) {
            let r = r3();
            let f = parse_polynomial(&text, &r).unwrap();
            let printed = f.to_string();
            let g = parse_polynomial(&printed, &r).unwrap();
            prop_assert_eq!(&g, &f);
            prop_assert_eq!(g.to_string(), printed);
        }

        #[test]
        fn print_parse_round_trip_mod_p(text in poly_text()) {
            let r = RingContext::new(&["x", "y", "z"], MonomialOrdering::LocalDegRevLex, FieldSpec::prime(101).unwrap()).unwrap();
            let f = parse_polynomial(&text, &r).unwrap();
            let g = parse_polynomial(&f.to_string(), &r).unwrap();
            prop_assert_eq!(g, f);
        }
    }
}
