//! Text grammar for polynomials over `F_q` and canonical formatting.
//!
//! # Accepted syntax
//!
//! ```text
//! input   := [ '+' | '-' ] product ( ( '+' | '-' ) product )*
//! product := atom ( [ '*' ] atom )*          (juxtaposition allowed: "2T")
//! atom    := INT
//!          | 'T' [ '^' INT ]
//!          | '(' input ')'
//! ```
//!
//! Whitespace may appear between any two tokens. Coefficients are decimal
//! integers naming canonical element codes; in strict mode (the default) a
//! coefficient must lie in `[0, q)`, while [`ParseOptions::reduce`] folds it
//! mod `q` instead (for prime fields this is ordinary reduction mod `p`).
//! A leading or connecting `-` negates the following product in the field.
//! Parenthesized products such as `(T^2+1)*(T^3+2T+1)` are expanded.
//!
//! # Canonical form
//!
//! [`format_poly`] (also `Display for Poly`) writes descending powers joined
//! by `+`, with coefficient codes in `[0, q)`, eliding unit coefficients and
//! using `^` only for exponents ≥ 2: the polynomial `T³ - T + 1` over `F_3`
//! prints as `"T^3+2T+1"`. Formatting then re-parsing is the identity, and
//! canonical strings are byte-stable across runs (they serve as cache keys).

use std::fmt;

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::poly::Poly;
use crate::tolerances::MAX_PARSE_EXPONENT;

/// Options controlling polynomial parsing.
#[derive(Copy, Clone, Debug, Default)]
pub struct ParseOptions {
    /// Fold out-of-range coefficients mod `q` instead of rejecting them.
    pub reduce: bool,
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    /// Integer literal: value folded mod q, whether the literal was < q as
    /// written, and the raw text (for error messages / exponent parsing).
    Int {
        mod_q: u32,
        in_range: bool,
        raw: String,
    },
    Var,
    Caret,
    Star,
    Plus,
    Minus,
    LParen,
    RParen,
}

fn lex(spec: &FieldSpec, input: &str) -> Result<Vec<(Tok, usize)>> {
    let q = spec.q() as u64;
    let bytes = input.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        let tok = match b {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'0'..=b'9' => {
                let start = i;
                let mut value = 0u64;
                let mut in_range = true;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    let d = (bytes[i] - b'0') as u64;
                    let next = value * 10 + d;
                    if next >= q {
                        in_range = false;
                    }
                    value = next % q;
                    i += 1;
                }
                toks.push((
                    Tok::Int {
                        mod_q: value as u32,
                        in_range,
                        raw: input[start..i].to_string(),
                    },
                    start,
                ));
                continue;
            }
            b'T' => Tok::Var,
            b'^' => Tok::Caret,
            b'*' => Tok::Star,
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            _ => {
                return Err(Error::parse_at(
                    format!("unexpected character {:?} (the variable is written 'T')", b as char),
                    i,
                ))
            }
        };
        toks.push((tok, i));
        i += 1;
    }
    Ok(toks)
}

struct Parser<'a> {
    spec: &'a FieldSpec,
    opts: ParseOptions,
    toks: Vec<(Tok, usize)>,
    pos: usize,
    input_len: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn here(&self) -> usize {
        self.toks
            .get(self.pos)
            .map(|&(_, p)| p)
            .unwrap_or(self.input_len)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(t, _)| t.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn coefficient(&self, mod_q: u32, in_range: bool, raw: &str, at: usize) -> Result<u32> {
        if in_range || self.opts.reduce {
            Ok(mod_q)
        } else {
            Err(Error::parse_at(
                format!(
                    "coefficient {raw} is out of range for q = {} (use the reduce option to fold mod q)",
                    self.spec.q()
                ),
                at,
            ))
        }
    }

    fn expr(&mut self) -> Result<Poly> {
        let mut negate = false;
        match self.peek() {
            Some(Tok::Plus) => {
                self.bump();
            }
            Some(Tok::Minus) => {
                negate = true;
                self.bump();
            }
            _ => {}
        }
        let mut acc = self.product()?;
        if negate {
            acc = self.spec.poly_neg(&acc);
        }
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    let t = self.product()?;
                    acc = self.spec.poly_add(&acc, &t);
                }
                Some(Tok::Minus) => {
                    self.bump();
                    let t = self.product()?;
                    acc = self.spec.poly_sub(&acc, &t);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn product(&mut self) -> Result<Poly> {
        let mut acc = self.atom()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.bump();
                    let f = self.atom()?;
                    acc = self.spec.poly_mul(&acc, &f);
                }
                // juxtaposition: another atom follows directly
                Some(Tok::Int { .. }) | Some(Tok::Var) | Some(Tok::LParen) => {
                    let f = self.atom()?;
                    acc = self.spec.poly_mul(&acc, &f);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn atom(&mut self) -> Result<Poly> {
        let at = self.here();
        match self.bump() {
            Some(Tok::Int {
                mod_q,
                in_range,
                raw,
            }) => {
                if matches!(self.peek(), Some(Tok::Caret)) {
                    return Err(Error::parse_at(
                        "'^' may only follow 'T'".to_string(),
                        self.here(),
                    ));
                }
                let c = self.coefficient(mod_q, in_range, &raw, at)?;
                Ok(Poly::from_coeffs(vec![self
                    .spec
                    .element_from_code(c)
                    .expect("folded mod q")]))
            }
            Some(Tok::Var) => {
                if matches!(self.peek(), Some(Tok::Caret)) {
                    self.bump();
                    let at_exp = self.here();
                    match self.bump() {
                        Some(Tok::Int { raw, .. }) => {
                            let e: usize = raw.parse().map_err(|_| {
                                Error::parse_at(format!("exponent {raw} is out of range"), at_exp)
                            })?;
                            if e > MAX_PARSE_EXPONENT {
                                return Err(Error::parse_at(
                                    format!(
                                        "exponent {e} exceeds the limit {MAX_PARSE_EXPONENT}"
                                    ),
                                    at_exp,
                                ));
                            }
                            Ok(Poly::monomial(e))
                        }
                        _ => Err(Error::parse_at("expected an exponent after '^'", at_exp)),
                    }
                } else {
                    Ok(Poly::monomial(1))
                }
            }
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                match self.bump() {
                    Some(Tok::RParen) => Ok(inner),
                    _ => Err(Error::parse_at("expected ')'", at)),
                }
            }
            Some(other) => Err(Error::parse_at(
                format!("unexpected token {other:?}; expected a coefficient, 'T', or '('"),
                at,
            )),
            None => Err(Error::parse_at(
                "unexpected end of input; expected a coefficient, 'T', or '('",
                at,
            )),
        }
    }
}

/// Parse a polynomial in strict mode (coefficients must lie in `[0, q)`).
pub fn parse_poly(spec: &FieldSpec, input: &str) -> Result<Poly> {
    parse_poly_with(spec, input, ParseOptions::default())
}

/// Parse a polynomial with explicit [`ParseOptions`].
pub fn parse_poly_with(spec: &FieldSpec, input: &str, opts: ParseOptions) -> Result<Poly> {
    let toks = lex(spec, input)?;
    if toks.is_empty() {
        return Err(Error::parse("empty polynomial"));
    }
    let mut parser = Parser {
        spec,
        opts,
        toks,
        pos: 0,
        input_len: input.len(),
    };
    let poly = parser.expr()?;
    if parser.pos != parser.toks.len() {
        return Err(Error::parse_at(
            "trailing input after polynomial",
            parser.here(),
        ));
    }
    Ok(poly)
}

/// Canonical text form: descending powers joined by `+`, coefficient codes
/// in `[0, q)`, unit coefficients elided, `^` only for exponents ≥ 2.
pub fn format_poly(f: &Poly) -> String {
    let Some(deg) = f.degree() else {
        return "0".to_string();
    };
    let mut out = String::new();
    for e in (0..=deg).rev() {
        let c = f.coeff(e);
        if c.is_zero() {
            continue;
        }
        if !out.is_empty() {
            out.push('+');
        }
        match e {
            0 => out.push_str(&c.code().to_string()),
            _ => {
                if c.code() != 1 {
                    out.push_str(&c.code().to_string());
                }
                out.push('T');
                if e >= 2 {
                    out.push_str(&format!("^{e}"));
                }
            }
        }
    }
    out
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_poly(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::enumerate_monic;
    use proptest::prelude::*;

    fn f3() -> FieldSpec {
        FieldSpec::prime(3).unwrap()
    }
    fn f5() -> FieldSpec {
        FieldSpec::prime(5).unwrap()
    }

    #[test]
    fn parses_reference_moduli() {
        let s = f5();
        assert_eq!(
            parse_poly(&s, "T^3+T+4").unwrap(),
            s.poly_from_codes(&[4, 1, 0, 1])
        );
        let s = f3();
        assert_eq!(
            parse_poly(&s, "T^3 - T + 1").unwrap(),
            s.poly_from_codes(&[1, 2, 0, 1])
        );
        assert_eq!(
            parse_poly(&s, "T^3+2T+1").unwrap(),
            s.poly_from_codes(&[1, 2, 0, 1])
        );
    }

    #[test]
    fn parenthesized_products_expand() {
        let s = f3();
        let prod = parse_poly(&s, "(T^2+1)*(T^3+2*T+1)").unwrap();
        let a = parse_poly(&s, "T^2+1").unwrap();
        let b = parse_poly(&s, "T^3+2T+1").unwrap();
        assert_eq!(prod, s.poly_mul(&a, &b));
        // canonical form of the product (deg-5 reference modulus)
        assert_eq!(format_poly(&prod), "T^5+T^2+2T+1");
        // juxtaposed parens multiply too
        assert_eq!(parse_poly(&s, "(T+1)(T+2)").unwrap(), parse_poly(&s, "T^2+2").unwrap());
    }

    #[test]
    fn coefficient_variants() {
        let s = f5();
        assert_eq!(parse_poly(&s, "2T").unwrap(), s.poly_from_codes(&[0, 2]));
        assert_eq!(parse_poly(&s, "2*T").unwrap(), s.poly_from_codes(&[0, 2]));
        assert_eq!(parse_poly(&s, "2 T").unwrap(), s.poly_from_codes(&[0, 2]));
        assert_eq!(parse_poly(&s, "0").unwrap(), Poly::zero());
        assert_eq!(parse_poly(&s, "-T").unwrap(), s.poly_from_codes(&[0, 4]));
        assert_eq!(
            parse_poly(&s, "- T^2 + 3").unwrap(),
            s.poly_from_codes(&[3, 0, 4])
        );
    }

    #[test]
    fn strict_mode_rejects_reduce_accepts() {
        let s = f5();
        let err = parse_poly(&s, "7T+1").unwrap_err();
        assert!(err.to_string().contains("out of range"), "{err}");
        let ok = parse_poly_with(&s, "7T+1", ParseOptions { reduce: true }).unwrap();
        assert_eq!(ok, s.poly_from_codes(&[1, 2]));
        // a huge literal still folds correctly under reduce
        let big = parse_poly_with(
            &s,
            "123456789012345678901234567890",
            ParseOptions { reduce: true },
        )
        .unwrap();
        // digit-fold mod 5 of …890 ⇒ last digit 0 ⇒ ≡ 0 (mod 5)
        assert_eq!(big, Poly::zero());
    }

    #[test]
    fn error_positions() {
        let s = f3();
        match parse_poly(&s, "T^3 + x") {
            Err(Error::Parse { position, .. }) => assert_eq!(position, Some(6)),
            other => panic!("expected parse error, got {other:?}"),
        }
        match parse_poly(&s, "T^") {
            Err(Error::Parse { position, .. }) => assert_eq!(position, Some(2)),
            other => panic!("expected parse error, got {other:?}"),
        }
        assert!(parse_poly(&s, "").is_err());
        assert!(parse_poly(&s, "(T+1").is_err());
        assert!(parse_poly(&s, "T+1)").is_err());
        assert!(parse_poly(&s, "2^3").is_err());
        assert!(parse_poly(&s, "T^99999").is_err());
        assert!(parse_poly(&s, "T^x").is_err());
    }

    #[test]
    fn canonical_formatting_goldens() {
        let s = f3();
        assert_eq!(format_poly(&Poly::zero()), "0");
        assert_eq!(format_poly(&Poly::one()), "1");
        assert_eq!(format_poly(&Poly::monomial(1)), "T");
        assert_eq!(format_poly(&s.poly_from_codes(&[1, 2, 0, 1])), "T^3+2T+1");
        assert_eq!(format_poly(&s.poly_from_codes(&[0, 0, 2])), "2T^2");
        assert_eq!(format_poly(&s.poly_from_codes(&[2, 1])), "T+2");
        let s5 = f5();
        assert_eq!(format_poly(&s5.poly_from_codes(&[4, 1, 0, 1])), "T^3+T+4");
    }

    #[test]
    fn roundtrip_all_monic_degree_3_f3() {
        let s = f3();
        for f in enumerate_monic(&s, 3).unwrap() {
            let text = format_poly(&f);
            assert_eq!(parse_poly(&s, &text).unwrap(), f, "text {text}");
        }
    }

    proptest! {
        /// format → strict parse is the identity on arbitrary polynomials.
        #[test]
        fn prop_format_parse_roundtrip(codes in proptest::collection::vec(0i64..5, 0..9)) {
            let s = f5();
            let f = s.poly_from_codes(&codes);
            let text = format_poly(&f);
            prop_assert_eq!(parse_poly(&s, &text).unwrap(), f);
        }
    }
}
