//! Elements of free modules `R^rank` under a position-over-term order.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use crate::error::{AlgebraError, Result};
use crate::polyarith::{Field, Monomial, Polynomial, Ring};

/// A vector in `R^rank`, stored as terms `(component, monomial, coefficient)`
/// sorted descending: lower component index first, then the ring order.
#[derive(Clone, Debug)]
pub struct FreeElement<F: Field> {
    ring: Arc<Ring>,
    rank: usize,
    terms: Vec<(usize, Monomial, F)>,
}

impl<F: Field> PartialEq for FreeElement<F> {
    fn eq(&self, other: &Self) -> bool {
        self.rank == other.rank && self.terms == other.terms
    }
}

impl<F: Field> Eq for FreeElement<F> {}

/// Position-over-term comparison.
pub(crate) fn pot_compare(ring: &Ring, a: (usize, &Monomial), b: (usize, &Monomial)) -> Ordering {
    b.0.cmp(&a.0).then_with(|| ring.order().compare(a.1, b.1))
}

impl<F: Field> FreeElement<F> {
    pub fn zero(ring: &Arc<Ring>, rank: usize) -> Self {
        FreeElement { ring: ring.clone(), rank, terms: Vec::new() }
    }

    /// Unit vector `e_index`.
    pub fn unit(ring: &Arc<Ring>, rank: usize, index: usize) -> Self {
        assert!(index < rank);
        FreeElement { ring: ring.clone(), rank, terms: vec![(index, Monomial::one(ring.nvars()), F::one())] }
    }

    /// Column vector with the given entries.
    pub fn from_polys(ring: &Arc<Ring>, entries: &[Polynomial<F>]) -> Self {
        let mut terms = Vec::new();
        for (i, p) in entries.iter().enumerate() {
            for (m, c) in p.terms() {
                terms.push((i, m.clone(), c.clone()));
            }
        }
        // each component is already sorted, components are in increasing index order
        FreeElement { ring: ring.clone(), rank: entries.len(), terms }
    }

    pub fn from_terms(ring: &Arc<Ring>, rank: usize, mut terms: Vec<(usize, Monomial, F)>) -> Result<Self> {
        if let Some((i, _, _)) = terms.iter().find(|(i, _, _)| *i >= rank) {
            return Err(AlgebraError::RankMismatch { expected: rank, found: i + 1 });
        }
        terms.sort_by(|a, b| pot_compare(ring, (b.0, &b.1), (a.0, &a.1)));
        let mut out: Vec<(usize, Monomial, F)> = Vec::with_capacity(terms.len());
        for (i, m, c) in terms {
            if let Some((li, lm, lc)) = out.last_mut() {
                if *li == i && *lm == m {
                    *lc = lc.clone() + c;
                    continue;
                }
            }
            out.push((i, m, c));
        }
        out.retain(|t| !t.2.is_zero());
        Ok(FreeElement { ring: ring.clone(), rank, terms: out })
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn terms(&self) -> &[(usize, Monomial, F)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> Option<(usize, &Monomial, &F)> {
        self.terms.first().map(|(i, m, c)| (*i, m, c))
    }

    pub fn lead_component(&self) -> Option<usize> {
        self.terms.first().map(|t| t.0)
    }

    /// Entry `i` as a polynomial.
    pub fn component(&self, i: usize) -> Polynomial<F> {
        let terms = self.terms.iter().filter(|t| t.0 == i).map(|(_, m, c)| (m.clone(), c.clone())).collect();
        Polynomial::from_sorted(&self.ring, terms)
    }

    pub fn to_polys(&self) -> Vec<Polynomial<F>> {
        (0..self.rank).map(|i| self.component(i)).collect()
    }

    pub fn monic(&self) -> Self {
        match self.lead() {
            Some((_, _, c)) if !c.is_one() => self.scale(&c.inverse().expect("nonzero lead")),
            _ => self.clone(),
        }
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ring, self.rank);
        }
        let terms = self.terms.iter().map(|(i, m, a)| (*i, m.clone(), a.clone() * c)).collect();
        FreeElement { ring: self.ring.clone(), rank: self.rank, terms }
    }

    pub fn mul_term(&self, m: &Monomial, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ring, self.rank);
        }
        let terms = self.terms.iter().map(|(i, t, a)| (*i, t.mul(m), a.clone() * c)).collect();
        FreeElement { ring: self.ring.clone(), rank: self.rank, terms }
    }

    pub fn mul_poly(&self, p: &Polynomial<F>) -> Self {
        let mut acc = Self::zero(&self.ring, self.rank);
        for (m, c) in p.terms() {
            acc = acc.add_mul_term(c, m, self);
        }
        acc
    }

    pub fn add(&self, other: &Self) -> Self {
        self.merge(other, None)
    }

    /// `self + c * m * other`.
    pub fn add_mul_term(&self, c: &F, m: &Monomial, other: &Self) -> Self {
        self.merge(other, Some((m, c)))
    }

    /// `self - c * m * other`.
    pub fn sub_mul_term(&self, c: &F, m: &Monomial, other: &Self) -> Self {
        self.merge(other, Some((m, &-c.clone())))
    }

    fn merge(&self, other: &Self, scaled: Option<(&Monomial, &F)>) -> Self {
        debug_assert_eq!(self.rank, other.rank);
        let ring = &self.ring;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = other
            .terms
            .iter()
            .map(|(i, m, c)| match scaled {
                Some((sm, sc)) => (*i, m.mul(sm), c.clone() * sc),
                None => (*i, m.clone(), c.clone()),
            })
            .peekable();
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => out.push(a.next().unwrap().clone()),
                (None, Some(_)) => out.push(b.next().unwrap()),
                (Some((ia, ma, _)), Some((ib, mb, _))) => match pot_compare(ring, (*ia, ma), (*ib, mb)) {
                    Ordering::Greater => out.push(a.next().unwrap().clone()),
                    Ordering::Less => out.push(b.next().unwrap()),
                    Ordering::Equal => {
                        let (i, m, ca) = a.next().unwrap();
                        let (_, _, cb) = b.next().unwrap();
                        let c = ca.clone() + cb;
                        if !c.is_zero() {
                            out.push((*i, m.clone(), c));
                        }
                    }
                },
            }
        }
        FreeElement { ring: self.ring.clone(), rank: self.rank, terms: out }
    }

    /// Drops the leading term.
    pub(crate) fn tail(mut self) -> (Option<(usize, Monomial, F)>, Self) {
        if self.terms.is_empty() {
            return (None, self);
        }
        let head = self.terms.remove(0);
        (Some(head), self)
    }

    pub(crate) fn push_sorted(&mut self, t: (usize, Monomial, F)) {
        self.terms.push(t);
    }

    /// Restriction to components `from..from + rank`, renumbered from zero.
    pub fn project(&self, from: usize, rank: usize) -> Self {
        let terms = self
            .terms
            .iter()
            .filter(|t| t.0 >= from && t.0 < from + rank)
            .map(|(i, m, c)| (i - from, m.clone(), c.clone()))
            .collect();
        FreeElement { ring: self.ring.clone(), rank, terms }
    }

    /// Embeds into `R^rank` with component `i` sent to `i + offset`.
    pub fn embed(&self, rank: usize, offset: usize) -> Self {
        debug_assert!(self.rank + offset <= rank);
        let terms = self.terms.iter().map(|(i, m, c)| (i + offset, m.clone(), c.clone())).collect();
        FreeElement { ring: self.ring.clone(), rank, terms }
    }

    /// Degree with respect to shifted basis degrees: `max deg(m) + shifts[i]`.
    pub fn shifted_degree(&self, shifts: &[i64]) -> i64 {
        self.terms.iter().map(|(i, m, _)| m.degree() as i64 + shifts[*i]).max().unwrap_or(i64::MIN)
    }
}

impl<F: Field> fmt::Display for FreeElement<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.to_polys().iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyarith::{parse_polynomial, Rational};
    use num_traits::One;

    fn v(ring: &Arc<Ring>, entries: &[&str]) -> FreeElement<Rational> {
        let ps: Vec<_> = entries.iter().map(|s| parse_polynomial(s, ring).unwrap()).collect();
        FreeElement::from_polys(ring, &ps)
    }

    #[test]
    fn position_dominates() {
        let r = Ring::grevlex(&["x", "y"]).unwrap();
        let a = v(&r, &["y", "x^5"]);
        assert_eq!(a.lead_component(), Some(0));
        let b = v(&r, &["0", "x^5 + y"]);
        assert_eq!(b.lead_component(), Some(1));
    }

    #[test]
    fn arithmetic() {
        let r = Ring::grevlex(&["x", "y"]).unwrap();
        let a = v(&r, &["x", "y"]);
        let b = v(&r, &["y", "-x"]);
        let y = parse_polynomial("y", &r).unwrap();
        let combo = a.mul_poly(&y).sub_mul_term(&Rational::one(), &Monomial::variable(2, 0), &b);
        assert!(combo.component(0).is_zero());
        assert_eq!(combo.component(1).to_string(), "x^2 + y^2");
        assert_eq!(a.project(1, 1), v(&r, &["y"]));
        assert_eq!(b.embed(3, 1), v(&r, &["0", "y", "-x"]));
        assert_eq!(a.to_string(), "(x, y)");
    }
}
