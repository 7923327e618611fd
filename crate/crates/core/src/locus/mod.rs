//! Pseudo supports, localized depth and dimension, and the non-Cohen-Macaulay
//! locus, all read off the annihilators `a_i` of the deficiency modules.
//!
//! Loci are returned as ideals and compared up to radical. Primes are taken
//! inside `m = (x_1, ..., x_n)`.

pub mod monomial;
mod report;

use std::sync::Arc;

use crate::duality::DeficiencyData;
use crate::error::{AlgebraError, Result};
use crate::groebner::Ideal;
use crate::modres::PresentedModule;
use crate::polyarith::{Field, Ring};

pub use monomial::{monomial_primes_oracle, MonomialPrimes};
pub use report::{locus_report, LocusReport, PrimeReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    /// Generated by variables, hence prime.
    MonomialVerified,
    /// Primality taken on trust.
    UserAsserted,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeIdeal<F: Field> {
    ideal: Ideal<F>,
    provenance: Provenance,
}

impl<F: Field> PrimeIdeal<F> {
    /// The prime generated by the given variables.
    pub fn variables(ring: &Arc<Ring>, indices: &[usize]) -> Self {
        PrimeIdeal { ideal: Ideal::variables(ring, indices), provenance: Provenance::MonomialVerified }
    }

    /// Accepts `ideal` if its reduced basis consists of variables.
    pub fn verified(ideal: Ideal<F>) -> Result<Self> {
        match variable_support(&ideal) {
            Some(_) => Ok(PrimeIdeal { ideal, provenance: Provenance::MonomialVerified }),
            None => Err(AlgebraError::NotPrime(format!("{ideal} is not generated by variables"))),
        }
    }

    /// Accepts any proper ideal inside `m` without checking primality.
    pub fn asserted(ideal: Ideal<F>) -> Result<Self> {
        if variable_support(&ideal).is_some() {
            return Self::verified(ideal);
        }
        if !ideal.is_proper() || !ideal.is_in_origin_maximal() {
            return Err(AlgebraError::NotPrime(format!("{ideal} is not a proper ideal inside the maximal ideal")));
        }
        Ok(PrimeIdeal { ideal, provenance: Provenance::UserAsserted })
    }

    pub fn ideal(&self) -> &Ideal<F> {
        &self.ideal
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    /// `dim R/p`.
    pub fn coheight(&self) -> i64 {
        self.ideal.krull_dim()
    }
}

/// Variable indices when the reduced basis is a set of variables.
pub fn variable_support<F: Field>(ideal: &Ideal<F>) -> Option<Vec<usize>> {
    let mut out = Vec::new();
    for g in ideal.basis() {
        let m = g.lead_monomial()?;
        if !g.is_monomial() || m.degree() != 1 {
            return None;
        }
        out.push(m.support().next()?);
    }
    out.sort_unstable();
    Some(out)
}

fn check_index<F: Field>(d: &DeficiencyData<F>, i: usize) -> Result<()> {
    if i > d.top() {
        return Err(AlgebraError::IndexOutOfRange { index: i as i64, max: d.top() as i64 });
    }
    Ok(())
}

/// `a_i`; its variety is the `i`-th pseudo support.
pub fn psupp_ideal<F: Field>(d: &DeficiencyData<F>, i: usize) -> Result<Ideal<F>> {
    check_index(d, i)?;
    Ok(d.a(i).unwrap().clone())
}

/// `psd^i = dim R/a_i`, with `-1` for an empty pseudo support.
pub fn psd<F: Field>(d: &DeficiencyData<F>, i: usize) -> Result<i64> {
    check_index(d, i)?;
    Ok(d.a(i).unwrap().krull_dim())
}

/// The smallest and largest `i` with `a_i ⊆ p`.
fn levels_at<F: Field>(d: &DeficiencyData<F>, p: &PrimeIdeal<F>) -> Result<(usize, usize)> {
    let mut hits = Vec::new();
    for (i, a) in d.a_all().iter().enumerate() {
        if a.is_proper() && p.ideal().contains_ideal(a)? {
            hits.push(i);
        }
    }
    match (hits.first(), hits.last()) {
        (Some(&k), Some(&t)) => Ok((k, t)),
        _ => Err(AlgebraError::NotInSupport),
    }
}

/// `(depth M_p, dim M_p)`.
pub fn depth_dim_at_prime<F: Field>(d: &DeficiencyData<F>, p: &PrimeIdeal<F>) -> Result<(i64, i64)> {
    let (k, t) = levels_at(d, p)?;
    let c = p.coheight();
    Ok((k as i64 - c, t as i64 - c))
}

pub fn is_cm_at_prime<F: Field>(d: &DeficiencyData<F>, p: &PrimeIdeal<F>) -> Result<bool> {
    let (k, t) = levels_at(d, p)?;
    Ok(k == t)
}

/// `T(M) = ∩_{i<j<=d} (a_i + a_j)`, whose variety is the non-CM locus.
pub fn ncm_t_ideal<F: Field>(d: &DeficiencyData<F>) -> Result<Ideal<F>> {
    let a = &d.a_all()[..=d.dim()];
    let mut acc = Ideal::unit(d.ring());
    for i in 0..a.len() {
        if a[i].is_unit() {
            continue;
        }
        for j in i + 1..a.len() {
            if a[j].is_unit() {
                continue;
            }
            let s = a[i].sum(&a[j])?;
            if s.is_unit() {
                continue;
            }
            acc = if acc.is_unit() { s } else { acc.intersection(&s)? };
        }
    }
    Ok(acc)
}

fn product_of<F: Field>(ring: &Arc<Ring>, ideals: &[Ideal<F>]) -> Result<Ideal<F>> {
    let mut acc = Ideal::unit(ring);
    for a in ideals.iter().filter(|a| a.is_proper()) {
        acc = if acc.is_unit() { a.clone() } else { acc.product(a)? };
    }
    Ok(acc)
}

/// `a(M) = a_0 ··· a_{d-1}`.
pub fn ncm_a_ideal<F: Field>(d: &DeficiencyData<F>) -> Result<Ideal<F>> {
    product_of(d.ring(), &d.a_all()[..d.dim()])
}

/// `∏_{i<=s} a_i`, whose variety is `{p : depth M_p + dim R/p <= s}`.
pub fn shallow_locus_ideal<F: Field>(d: &DeficiencyData<F>, s: usize) -> Result<Ideal<F>> {
    if s > d.dim() {
        return Err(AlgebraError::IndexOutOfRange { index: s as i64, max: d.dim() as i64 });
    }
    product_of(d.ring(), &d.a_all()[..=s])
}

/// Serre's condition `S_r`: `psd^i <= i - r` for all `i < d`. An empty pseudo
/// support imposes nothing.
pub fn serre_condition<F: Field>(d: &DeficiencyData<F>, r: usize) -> Result<bool> {
    for i in 0..d.dim() {
        let p = psd(d, i)?;
        if p >= 0 && p > i as i64 - r as i64 {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Equidimensionality {
    True,
    False,
    /// Annihilator not monomial; nothing was decided.
    Unknown,
}

/// Decides equidimensionality of `M` from the minimal primes of a monomial
/// annihilator.
pub fn is_equidimensional<F: Field>(module: &PresentedModule<F>) -> Result<Equidimensionality> {
    let ann = module.annihilator()?;
    equidimensional_from_annihilator(&ann)
}

pub fn equidimensional_from_annihilator<F: Field>(ann: &Ideal<F>) -> Result<Equidimensionality> {
    if !ann.is_monomial() {
        return Ok(Equidimensionality::Unknown);
    }
    let primes = monomial_primes_oracle(ann)?;
    let mut sizes = primes.minimal.iter().map(|p| p.len());
    let first = sizes.next();
    Ok(if sizes.all(|s| Some(s) == first) { Equidimensionality::True } else { Equidimensionality::False })
}
