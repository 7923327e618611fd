//! Polynomial expression parser (precedence climbing).
//!
//! Grammar:
//!
//! ```text
//! sum     := product (('+' | '-') product)*
//! product := unary (('*' | '/') unary | power)*      -- juxtaposition multiplies
//! unary   := ('-' | '+') unary | power
//! power   := atom ('^' INTEGER)?
//! atom    := INTEGER | IDENT | '(' sum ')'
//! ```
//!
//! Division is only allowed by nonzero constants, so `3/2*x` is the rational
//! literal `3/2` times `x`. An identifier that is not a variable but splits in
//! exactly one way into variable names (`xz` in `QQ[x,y,z,w]`) is read as the
//! product of those variables.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{AlgebraError, Result};
use crate::polyarith::field::Field;
use crate::polyarith::monomial::Monomial;
use crate::polyarith::polynomial::Polynomial;
use crate::polyarith::ring::Ring;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Decimal,
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

fn tokenize(text: &str) -> Result<Vec<(Tok, usize)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        if c.is_ascii_digit() {
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            if i + 1 < bytes.len() && bytes[i] == b'.' && bytes[i + 1].is_ascii_digit() {
                i += 1;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((Tok::Decimal, start));
            } else {
                let n: BigInt = text[start..i].parse().expect("digits");
                out.push((Tok::Int(n), start));
            }
            continue;
        }
        if c.is_ascii_alphabetic() || c == b'_' {
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            out.push((Tok::Ident(text[start..i].to_string()), start));
            continue;
        }
        let tok = match c {
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'/' => Tok::Slash,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            _ => {
                let ch = text[i..].chars().next().unwrap();
                return Err(AlgebraError::Syntax { offset: i, message: format!("unexpected character `{ch}`") });
            }
        };
        out.push((tok, start));
        i += 1;
    }
    out.push((Tok::End, text.len()));
    Ok(out)
}

struct Parser<'a, F: Field> {
    ring: &'a Arc<Ring>,
    toks: Vec<(Tok, usize)>,
    pos: usize,
    _field: std::marker::PhantomData<F>,
}

impl<'a, F: Field> Parser<'a, F> {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> (Tok, usize) {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn syntax<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(AlgebraError::Syntax { offset: self.offset(), message: message.into() })
    }

    fn sum(&mut self) -> Result<Polynomial<F>> {
        let mut acc = self.product()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc = &acc + &self.product()?;
                }
                Tok::Minus => {
                    self.bump();
                    acc = &acc - &self.product()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn product(&mut self) -> Result<Polynomial<F>> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Tok::Star => {
                    self.bump();
                    acc = &acc * &self.unary()?;
                }
                Tok::Slash => {
                    self.bump();
                    let at = self.offset();
                    let d = self.unary()?;
                    if !d.is_constant() {
                        return Err(AlgebraError::Syntax { offset: at, message: "division by a non-constant".into() });
                    }
                    let inv = d.constant_coeff().inverse()?;
                    acc = acc.scale(&inv);
                }
                Tok::Ident(_) | Tok::LParen => {
                    acc = &acc * &self.power()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<Polynomial<F>> {
        match self.peek() {
            Tok::Minus => {
                self.bump();
                Ok(self.unary()?.neg())
            }
            Tok::Plus => {
                self.bump();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Polynomial<F>> {
        let base = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let offset = self.offset();
        let bad = |message: &str| Err(AlgebraError::BadExponent { offset, message: message.to_string() });
        match self.bump().0 {
            Tok::Int(n) => match n.to_u32() {
                Some(e) => Ok(base.pow(e)),
                None => bad("exponent too large"),
            },
            Tok::Minus => bad("negative exponent"),
            Tok::Decimal => bad("non-integer exponent"),
            _ => bad("expected a non-negative integer exponent"),
        }
    }

    fn atom(&mut self) -> Result<Polynomial<F>> {
        let offset = self.offset();
        match self.peek().clone() {
            Tok::Int(n) => {
                self.bump();
                Ok(Polynomial::constant(self.ring, F::from_bigint(&n)))
            }
            Tok::Decimal => self.syntax("decimal literals are not supported; use a/b"),
            Tok::Ident(name) => {
                self.bump();
                let m = resolve_identifier(self.ring, &name)
                    .ok_or(AlgebraError::UnknownVariable { name: name.clone(), offset })?;
                Ok(Polynomial::monomial(self.ring, m, F::one()))
            }
            Tok::LParen => {
                self.bump();
                let inner = self.sum()?;
                if *self.peek() != Tok::RParen {
                    return self.syntax("expected `)`");
                }
                self.bump();
                Ok(inner)
            }
            Tok::End => self.syntax("unexpected end of input"),
            t => self.syntax(format!("unexpected {}", describe(&t))),
        }
    }
}

fn describe(t: &Tok) -> &'static str {
    match t {
        Tok::Plus => "`+`",
        Tok::Minus => "`-`",
        Tok::Star => "`*`",
        Tok::Slash => "`/`",
        Tok::Caret => "`^`",
        Tok::LParen => "`(`",
        Tok::RParen => "`)`",
        Tok::End => "end of input",
        Tok::Int(_) => "number",
        Tok::Decimal => "decimal",
        Tok::Ident(_) => "identifier",
    }
}

/// Exact variable name, or the unique split of `name` into variable names.
fn resolve_identifier(ring: &Ring, name: &str) -> Option<Monomial> {
    let n = ring.nvars();
    if let Some(i) = ring.var_index(name) {
        return Some(Monomial::variable(n, i));
    }
    // ways[k] = number of splittings of name[k..] (capped at 2), next[k] = first variable
    let len = name.len();
    let mut ways = vec![0u8; len + 1];
    let mut next = vec![usize::MAX; len + 1];
    ways[len] = 1;
    for k in (0..len).rev() {
        for (vi, v) in ring.vars().iter().enumerate() {
            if name[k..].starts_with(v.as_str()) && ways[k + v.len()] > 0 {
                ways[k] = (ways[k] + ways[k + v.len()]).min(2);
                next[k] = vi;
            }
        }
    }
    if ways[0] != 1 {
        return None;
    }
    let mut exps = vec![0u32; n];
    let mut k = 0;
    while k < len {
        let vi = next[k];
        exps[vi] += 1;
        k += ring.vars()[vi].len();
    }
    Some(Monomial::new(exps))
}

/// Parses `text` as a polynomial in `ring`.
pub fn parse_polynomial<F: Field>(text: &str, ring: &Arc<Ring>) -> Result<Polynomial<F>> {
    let toks = tokenize(text)?;
    let mut p = Parser { ring, toks, pos: 0, _field: std::marker::PhantomData };
    let f = p.sum()?;
    if *p.peek() != Tok::End {
        let t = p.peek().clone();
        return p.syntax(format!("unexpected {}", describe(&t)));
    }
    Ok(f)
}

/// Parses an integer or `a/b` literal into the field.
pub fn parse_coefficient<F: Field>(text: &str) -> Result<F> {
    let (num, den) = match text.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (text.trim(), "1"),
    };
    let bad = || AlgebraError::Syntax { offset: 0, message: format!("invalid coefficient `{text}`") };
    let n: BigInt = num.parse().map_err(|_| bad())?;
    let d: BigInt = den.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(AlgebraError::DivisionByZero);
    }
    if d.is_one() {
        return Ok(F::from_bigint(&n));
    }
    F::from_fraction(&n, &d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyarith::field::{Fp, Rational};
    use proptest::prelude::*;

    fn ring4() -> Arc<Ring> {
        Ring::grevlex(&["x", "y", "z", "w"]).unwrap()
    }

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn two_term() {
        let f: Polynomial<Rational> = parse_polynomial("x*z + y*w", &ring4()).unwrap();
        assert_eq!(f.len(), 2);
        assert_eq!(f.to_string(), "x*z + y*w");
    }

    #[test]
    fn rational_coefficient() {
        let f: Polynomial<Rational> = parse_polynomial("-3/2*x^2", &ring4()).unwrap();
        assert_eq!(f.len(), 1);
        assert_eq!(f.lead_coeff().unwrap(), &q(-3, 2));
        assert_eq!(f.lead_monomial().unwrap().exponents(), &[2, 0, 0, 0]);
    }

    #[test]
    fn unknown_variable_offset() {
        let r = Ring::grevlex(&["x", "y"]).unwrap();
        let e = parse_polynomial::<Rational>("x*q", &r).unwrap_err();
        assert_eq!(e, AlgebraError::UnknownVariable { name: "q".into(), offset: 2 });
    }

    #[test]
    fn exponent_errors() {
        let r = ring4();
        assert!(matches!(parse_polynomial::<Rational>("x^-1", &r), Err(AlgebraError::BadExponent { offset: 2, .. })));
        assert!(matches!(parse_polynomial::<Rational>("x^1.5", &r), Err(AlgebraError::BadExponent { .. })));
        assert!(matches!(parse_polynomial::<Rational>("x^y", &r), Err(AlgebraError::BadExponent { .. })));
    }

    #[test]
    fn syntax_errors_carry_positions() {
        let r = ring4();
        assert!(matches!(parse_polynomial::<Rational>("x +", &r), Err(AlgebraError::Syntax { offset: 3, .. })));
        assert!(matches!(parse_polynomial::<Rational>("(x + y", &r), Err(AlgebraError::Syntax { offset: 6, .. })));
        assert!(matches!(parse_polynomial::<Rational>("x $ y", &r), Err(AlgebraError::Syntax { offset: 2, .. })));
        assert!(matches!(parse_polynomial::<Rational>("x / y", &r), Err(AlgebraError::Syntax { offset: 4, .. })));
        assert_eq!(parse_polynomial::<Rational>("x / 0", &r), Err(AlgebraError::DivisionByZero));
    }

    #[test]
    fn juxtaposition_and_precedence() {
        let r = ring4();
        let a: Polynomial<Rational> = parse_polynomial("xz - 2(x + y)w", &r).unwrap();
        let b: Polynomial<Rational> = parse_polynomial("x*z - 2*x*w - 2*y*w", &r).unwrap();
        assert_eq!(a, b);
        let c: Polynomial<Rational> = parse_polynomial("-x^2", &r).unwrap();
        assert_eq!(c.to_string(), "-x^2");
        let d: Polynomial<Rational> = parse_polynomial("(x+y)^2", &r).unwrap();
        assert_eq!(d.to_string(), "x^2 + 2*x*y + y^2");
    }

    #[test]
    fn ambiguous_split_is_unknown() {
        let r = Ring::grevlex(&["a", "ab", "b"]).unwrap();
        assert!(parse_polynomial::<Rational>("ab", &r).is_ok());
        assert!(matches!(parse_polynomial::<Rational>("aab", &r), Err(AlgebraError::UnknownVariable { .. })));
    }

    #[test]
    fn prime_field_literals() {
        let r = Ring::grevlex(&["x"]).unwrap();
        let f: Polynomial<Fp<7>> = parse_polynomial("1/2*x - 1", &r).unwrap();
        assert_eq!(f.to_string(), "4*x + 6");
    }

    fn arb_poly() -> impl Strategy<Value = Polynomial<Rational>> {
        let term = (prop::collection::vec(0u32..4, 4), -20i64..20, 1i64..6);
        prop::collection::vec(term, 0..6).prop_map(|ts| {
            let r = ring4();
            let terms = ts.into_iter().map(|(e, n, d)| (Monomial::new(e), q(n, d))).collect();
            Polynomial::from_terms(&r, terms).unwrap()
        })
    }

    proptest! {
        #[test]
        fn print_parse_round_trip(f in arb_poly()) {
            let back: Polynomial<Rational> = parse_polynomial(&f.to_string(), &ring4()).unwrap();
            prop_assert_eq!(back, f);
        }

        #[test]
        fn ring_laws(f in arb_poly(), g in arb_poly(), h in arb_poly()) {
            prop_assert_eq!(&(&f + &g) + &h, &f + &(&g + &h));
            prop_assert_eq!(&f + &g, &g + &f);
            prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
            prop_assert_eq!(&f * &g, &g * &f);
            prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
            prop_assert!((&f + &f.neg()).is_zero());
            prop_assert!((&f - &f).is_zero());
        }
    }
}
