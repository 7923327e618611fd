//! Sparse multivariate polynomials.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::error::{AlgebraError, Result};
use crate::polyarith::field::Field;
use crate::polyarith::monomial::Monomial;
use crate::polyarith::ring::{check_same, Ring};

/// A polynomial as a list of terms sorted strictly descending in the ring's
/// monomial order, with no zero coefficients. The zero polynomial has no terms.
#[derive(Clone, Debug)]
pub struct Polynomial<F: Field> {
    ring: Arc<Ring>,
    terms: Vec<(Monomial, F)>,
}

impl<F: Field> PartialEq for Polynomial<F> {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms && *self.ring == *other.ring
    }
}

impl<F: Field> Eq for Polynomial<F> {}

impl<F: Field> Polynomial<F> {
    pub fn zero(ring: &Arc<Ring>) -> Self {
        Polynomial { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn constant(ring: &Arc<Ring>, c: F) -> Self {
        Self::monomial(ring, Monomial::one(ring.nvars()), c)
    }

    pub fn one(ring: &Arc<Ring>) -> Self {
        Self::constant(ring, F::one())
    }

    pub fn variable(ring: &Arc<Ring>, index: usize) -> Self {
        Self::monomial(ring, Monomial::variable(ring.nvars(), index), F::one())
    }

    pub fn monomial(ring: &Arc<Ring>, m: Monomial, c: F) -> Self {
        debug_assert_eq!(m.nvars(), ring.nvars());
        let terms = if c.is_zero() { Vec::new() } else { vec![(m, c)] };
        Polynomial { ring: ring.clone(), terms }
    }

    /// Builds a polynomial from arbitrary terms: sorts, merges equal monomials
    /// and drops zero coefficients.
    pub fn from_terms(ring: &Arc<Ring>, mut terms: Vec<(Monomial, F)>) -> Result<Self> {
        let n = ring.nvars();
        if let Some((m, _)) = terms.iter().find(|(m, _)| m.nvars() != n) {
            return Err(AlgebraError::LengthMismatch { expected: n, found: m.nvars() });
        }
        let order = ring.order();
        terms.sort_by(|a, b| order.compare(&b.0, &a.0));
        let mut out: Vec<(Monomial, F)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            if let Some((lm, lc)) = out.last_mut() {
                if *lm == m {
                    *lc = lc.clone() + c;
                    continue;
                }
            }
            out.push((m, c));
        }
        out.retain(|(_, c)| !c.is_zero());
        Ok(Polynomial { ring: ring.clone(), terms: out })
    }

    pub(crate) fn from_sorted(ring: &Arc<Ring>, terms: Vec<(Monomial, F)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| ring.order().compare(&w[0].0, &w[1].0) == Ordering::Greater));
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        Polynomial { ring: ring.clone(), terms }
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, F)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, F)> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Total degree; `-1` for the zero polynomial.
    pub fn degree(&self) -> i64 {
        self.terms.iter().map(|(m, _)| m.degree() as i64).max().unwrap_or(-1)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.terms.windows(2).all(|w| w[0].0.degree() == w[1].0.degree())
    }

    pub fn leading_term(&self) -> Option<&(Monomial, F)> {
        self.terms.first()
    }

    pub fn lead_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    pub fn lead_coeff(&self) -> Option<&F> {
        self.terms.first().map(|(_, c)| c)
    }

    /// Constant term (coefficient of `1`).
    pub fn constant_coeff(&self) -> F {
        self.terms.iter().find(|(m, _)| m.is_one()).map(|(_, c)| c.clone()).unwrap_or_else(F::zero)
    }

    pub fn neg(&self) -> Self {
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        let terms = self.terms.iter().map(|(m, a)| (m.clone(), a.clone() * c)).collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    /// `c * m * self`.
    pub fn mul_term(&self, m: &Monomial, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        let terms = self.terms.iter().map(|(t, a)| (t.mul(m), a.clone() * c)).collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    /// Divides by the leading coefficient. Zero stays zero.
    pub fn monic(&self) -> Self {
        match self.lead_coeff() {
            Some(lc) if !lc.is_one() => {
                let inv = lc.inverse().expect("leading coefficient is nonzero");
                self.scale(&inv)
            }
            _ => self.clone(),
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        check_same(&self.ring, &other.ring)?;
        Ok(self.merge(other, None))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        check_same(&self.ring, &other.ring)?;
        Ok(self.merge(other, Some((&Monomial::one(self.ring.nvars()), &-F::one()))))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        check_same(&self.ring, &other.ring)?;
        Ok(self.mul_unchecked(other))
    }

    /// `self - c * m * other`, the basic reduction step.
    pub fn sub_mul_term(&self, c: &F, m: &Monomial, other: &Self) -> Self {
        self.merge(other, Some((m, &-c.clone())))
    }

    /// Merges `self + c * m * other` (or `self + other` when `scaled` is `None`).
    fn merge(&self, other: &Self, scaled: Option<(&Monomial, &F)>) -> Self {
        let order = self.ring.order();
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = other
            .terms
            .iter()
            .map(|(m, c)| match scaled {
                Some((sm, sc)) => (m.mul(sm), c.clone() * sc),
                None => (m.clone(), c.clone()),
            })
            .peekable();
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => out.push(a.next().unwrap().clone()),
                (None, Some(_)) => out.push(b.next().unwrap()),
                (Some((ma, _)), Some((mb, _))) => match order.compare(ma, mb) {
                    Ordering::Greater => out.push(a.next().unwrap().clone()),
                    Ordering::Less => out.push(b.next().unwrap()),
                    Ordering::Equal => {
                        let (m, ca) = a.next().unwrap();
                        let (_, cb) = b.next().unwrap();
                        let c = ca.clone() + cb;
                        if !c.is_zero() {
                            out.push((m.clone(), c));
                        }
                    }
                },
            }
        }
        Polynomial { ring: self.ring.clone(), terms: out }
    }

    pub(crate) fn mul_unchecked(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(&self.ring);
        }
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                terms.push((ma.mul(mb), ca.clone() * cb));
            }
        }
        Self::from_terms(&self.ring, terms).expect("monomial lengths agree")
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(&self.ring);
        for _ in 0..e {
            acc = acc.mul_unchecked(self);
        }
        acc
    }

    /// Exact quotient `self / divisor`; fails unless `divisor` divides `self`.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self> {
        check_same(&self.ring, &divisor.ring)?;
        let (lm, lc) = divisor.leading_term().ok_or(AlgebraError::DivisionByZero)?;
        let lc_inv = lc.inverse()?;
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some((m, c)) = rem.leading_term() {
            let q = m.checked_div(lm).ok_or_else(|| AlgebraError::Inconsistent("inexact polynomial division".into()))?;
            let qc = c.clone() * &lc_inv;
            rem = rem.sub_mul_term(&qc, &q, divisor);
            quot.push((q, qc));
        }
        Ok(Self::from_sorted(&self.ring, quot))
    }

    /// Re-embeds the polynomial in `target`, sending variable `i` to
    /// `positions[i]`; all other target variables get exponent zero.
    pub fn map_to(&self, target: &Arc<Ring>, positions: &[usize]) -> Self {
        let n = target.nvars();
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut exps = vec![0u32; n];
                for (i, e) in m.exponents().iter().enumerate() {
                    exps[positions[i]] = *e;
                }
                (Monomial::new(exps), c.clone())
            })
            .collect();
        Self::from_terms(target, terms).expect("lengths match target ring")
    }

    /// Moves the polynomial into a ring with the same variables but another
    /// order (or another step limit).
    pub fn reorder(&self, target: &Arc<Ring>) -> Self {
        debug_assert_eq!(self.ring.vars(), target.vars());
        Self::from_terms(target, self.terms.clone()).expect("same variables")
    }

    /// Variables occurring in the polynomial, as a bitmask.
    pub fn support_mask(&self) -> u64 {
        self.terms.iter().fold(0, |acc, (m, _)| acc | m.support_mask())
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, ring: &Ring, m: &Monomial) -> fmt::Result {
    let mut first = true;
    for (i, e) in m.exponents().iter().enumerate() {
        if *e == 0 {
            continue;
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        f.write_str(&ring.vars()[i])?;
        if *e > 1 {
            write!(f, "^{e}")?;
        }
    }
    Ok(())
}

/// Canonical form: terms in descending order, explicit `*` and `^`,
/// coefficients `1`/`-1` omitted in front of non-constant monomials.
impl<F: Field> fmt::Display for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { -c.clone() } else { c.clone() };
            match (k == 0, neg) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs}*")?;
                }
                write_monomial(f, &self.ring, m)?;
            }
        }
        Ok(())
    }
}

impl<F: Field> Add for &Polynomial<F> {
    type Output = Polynomial<F>;
    /// Panics on ring mismatch; use [`Polynomial::try_add`] to get an error.
    fn add(self, rhs: Self) -> Polynomial<F> {
        self.try_add(rhs).expect("ring mismatch in polynomial addition")
    }
}

impl<F: Field> Sub for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn sub(self, rhs: Self) -> Polynomial<F> {
        self.try_sub(rhs).expect("ring mismatch in polynomial subtraction")
    }
}

impl<F: Field> Mul for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn mul(self, rhs: Self) -> Polynomial<F> {
        self.try_mul(rhs).expect("ring mismatch in polynomial multiplication")
    }
}

impl<F: Field> Neg for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn neg(self) -> Polynomial<F> {
        Polynomial::neg(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyarith::field::Rational;
    use crate::polyarith::parse::parse_polynomial;

    fn ring() -> Arc<Ring> {
        Ring::grevlex(&["x", "y"]).unwrap()
    }

    fn p(s: &str) -> Polynomial<Rational> {
        parse_polynomial(s, &ring()).unwrap()
    }

    #[test]
    fn cancellation_drops_terms() {
        assert_eq!(&p("x + y") + &p("-x"), p("y"));
        assert_eq!((&p("x + y") + &p("-x")).len(), 1);
    }

    #[test]
    fn difference_of_squares() {
        assert_eq!(&p("x + y") * &p("x - y"), p("x^2 - y^2"));
    }

    #[test]
    fn zero_times_anything() {
        let z = Polynomial::<Rational>::zero(&ring());
        assert!((&z * &p("x^3 + 7")).is_zero());
        assert_eq!(z.degree(), -1);
    }

    #[test]
    fn ring_mismatch_is_an_error() {
        let other = Ring::grevlex(&["a", "b"]).unwrap();
        let q = Polynomial::<Rational>::variable(&other, 0);
        assert_eq!(p("x").try_add(&q), Err(AlgebraError::RingMismatch));
        assert_eq!(p("x").try_mul(&q), Err(AlgebraError::RingMismatch));
    }

    #[test]
    fn exact_division() {
        let f = p("x^3 - x*y^2");
        assert_eq!(f.exact_div(&p("x + y")).unwrap(), p("x^2 - x*y"));
        assert!(p("x + 1").exact_div(&p("y")).is_err());
    }

    #[test]
    fn canonical_printing() {
        assert_eq!(p("y*x + 2 - 3/2*x^2").to_string(), "-3/2*x^2 + x*y + 2");
        assert_eq!(p("0").to_string(), "0");
        assert_eq!(p("-x").to_string(), "-x");
    }
}
