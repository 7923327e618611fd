//! Monomials and monomial orders.

use std::cmp::Ordering;

/// Exponent vector `x_1^{e_1} ... x_n^{e_n}` with cached total degree.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    exps: Box<[u32]>,
    degree: u32,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        let degree = exps.iter().sum();
        Monomial { exps: exps.into_boxed_slice(), degree }
    }

    pub fn one(nvars: usize) -> Self {
        Monomial { exps: vec![0; nvars].into_boxed_slice(), degree: 0 }
    }

    pub fn variable(nvars: usize, index: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[index] = 1;
        Monomial::new(exps)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let exps: Vec<u32> = self.exps.iter().zip(other.exps.iter()).map(|(a, b)| a + b).collect();
        Monomial { exps: exps.into_boxed_slice(), degree: self.degree + other.degree }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        debug_assert!(self.divides(other));
        let exps: Vec<u32> = other.exps.iter().zip(self.exps.iter()).map(|(a, b)| a - b).collect();
        Monomial { exps: exps.into_boxed_slice(), degree: other.degree - self.degree }
    }

    /// `self / other` when `other` divides `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        other.divides(self).then(|| other.quotient_of(self))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial::new(self.exps.iter().zip(other.exps.iter()).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial::new(self.exps.iter().zip(other.exps.iter()).map(|(a, b)| *a.min(b)).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Indices of the variables occurring in the monomial.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps.iter().enumerate().filter(|(_, e)| **e > 0).map(|(i, _)| i)
    }

    /// Bitmask of the support; requires at most 64 variables.
    pub fn support_mask(&self) -> u64 {
        self.support().fold(0u64, |m, i| m | (1 << i))
    }
}

/// Monomial order tag carried by a ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum MonomialOrder {
    Lex,
    #[default]
    Grevlex,
    /// Block order: the first `block` variables are compared by grevlex and
    /// dominate; ties are broken by grevlex on the remaining variables.
    Elimination { block: usize },
}

fn grevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    da.cmp(&db).then_with(|| {
        for (x, y) in a.iter().zip(b.iter()).rev() {
            if x != y {
                // the larger monomial has the smaller last differing exponent
                return y.cmp(x);
            }
        }
        Ordering::Equal
    })
}

impl MonomialOrder {
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Lex => a.exps.cmp(&b.exps),
            MonomialOrder::Grevlex => a.degree.cmp(&b.degree).then_with(|| {
                for (x, y) in a.exps.iter().zip(b.exps.iter()).rev() {
                    if x != y {
                        return y.cmp(x);
                    }
                }
                Ordering::Equal
            }),
            MonomialOrder::Elimination { block } => {
                let k = (*block).min(a.exps.len());
                grevlex(&a.exps[..k], &b.exps[..k]).then_with(|| grevlex(&a.exps[k..], &b.exps[k..]))
            }
        }
    }

    pub fn name(&self) -> String {
        match self {
            MonomialOrder::Lex => "lex".to_string(),
            MonomialOrder::Grevlex => "grevlex".to_string(),
            MonomialOrder::Elimination { block } => format!("elim{block}"),
        }
    }
}
