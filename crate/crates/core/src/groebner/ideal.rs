//! Ideals with an eagerly computed reduced Gröbner basis.

use std::fmt;
use std::sync::Arc;

use crate::error::{AlgebraError, Result};
use crate::groebner::buchberger::{normal_form, reduced_basis};
use crate::groebner::dimension::dimension_from_leads;
use crate::polyarith::ring::check_same;
use crate::polyarith::{Field, Monomial, MonomialOrder, Polynomial, Ring};

/// An ideal of the ring together with its reduced Gröbner basis.
///
/// The basis is computed when the ideal is built and never changes, so an
/// `Ideal` can be shared freely between threads.
#[derive(Clone, Debug)]
pub struct Ideal<F: Field> {
    ring: Arc<Ring>,
    generators: Vec<Polynomial<F>>,
    basis: Vec<Polynomial<F>>,
}

impl<F: Field> PartialEq for Ideal<F> {
    fn eq(&self, other: &Self) -> bool {
        *self.ring == *other.ring && self.basis == other.basis
    }
}

impl<F: Field> Eq for Ideal<F> {}

impl<F: Field> Ideal<F> {
    /// Ideal generated by `gens`. Zero generators are dropped.
    pub fn new(ring: &Arc<Ring>, gens: Vec<Polynomial<F>>) -> Result<Self> {
        let basis = reduced_basis(ring, &gens)?;
        let generators = gens.into_iter().filter(|g| !g.is_zero()).collect();
        Ok(Ideal { ring: ring.clone(), generators, basis })
    }

    pub fn zero(ring: &Arc<Ring>) -> Self {
        Ideal { ring: ring.clone(), generators: Vec::new(), basis: Vec::new() }
    }

    pub fn unit(ring: &Arc<Ring>) -> Self {
        let one = Polynomial::one(ring);
        Ideal { ring: ring.clone(), generators: vec![one.clone()], basis: vec![one] }
    }

    /// Ideal generated by the given variables.
    pub fn variables(ring: &Arc<Ring>, indices: &[usize]) -> Self {
        let mut idx = indices.to_vec();
        idx.sort_unstable();
        idx.dedup();
        let gens: Vec<_> = idx.iter().map(|&i| Polynomial::variable(ring, i)).collect();
        let mut basis = gens.clone();
        basis.sort_by(|a, b| ring.order().compare(b.lead_monomial().unwrap(), a.lead_monomial().unwrap()));
        Ideal { ring: ring.clone(), generators: gens, basis }
    }

    /// The maximal ideal generated by all variables.
    pub fn maximal(ring: &Arc<Ring>) -> Self {
        Self::variables(ring, &(0..ring.nvars()).collect::<Vec<_>>())
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial<F>] {
        &self.generators
    }

    /// Reduced Gröbner basis, sorted by descending leading monomial.
    pub fn basis(&self) -> &[Polynomial<F>] {
        &self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.basis.len() == 1 && self.basis[0].is_constant()
    }

    pub fn is_proper(&self) -> bool {
        !self.is_unit()
    }

    /// Whether the ideal is generated by monomials (checked on the reduced basis).
    pub fn is_monomial(&self) -> bool {
        self.basis.iter().all(|g| g.is_monomial())
    }

    /// Whether every generator vanishes at the origin, i.e. the ideal lies in
    /// the maximal ideal of all variables.
    pub fn is_in_origin_maximal(&self) -> bool {
        self.generators.iter().all(|g| g.constant_coeff().is_zero())
    }

    pub fn lead_monomials(&self) -> Vec<Monomial> {
        self.basis.iter().map(|g| g.lead_monomial().unwrap().clone()).collect()
    }

    /// Ideal membership: the normal form modulo the reduced basis vanishes.
    pub fn contains(&self, f: &Polynomial<F>) -> Result<bool> {
        check_same(&self.ring, f.ring())?;
        Ok(normal_form(f, &self.basis)?.is_zero())
    }

    pub fn reduce(&self, f: &Polynomial<F>) -> Result<Polynomial<F>> {
        normal_form(f, &self.basis)
    }

    /// `other ⊆ self`.
    pub fn contains_ideal(&self, other: &Ideal<F>) -> Result<bool> {
        check_same(&self.ring, &other.ring)?;
        for g in &other.basis {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn sum(&self, other: &Ideal<F>) -> Result<Ideal<F>> {
        check_same(&self.ring, &other.ring)?;
        let gens = self.generators.iter().chain(other.generators.iter()).cloned().collect();
        Ideal::new(&self.ring, gens)
    }

    pub fn product(&self, other: &Ideal<F>) -> Result<Ideal<F>> {
        check_same(&self.ring, &other.ring)?;
        if self.is_unit() {
            return Ok(other.clone());
        }
        if other.is_unit() {
            return Ok(self.clone());
        }
        let mut gens = Vec::with_capacity(self.basis.len() * other.basis.len());
        for f in &self.basis {
            for g in &other.basis {
                gens.push(f.mul_unchecked(g));
            }
        }
        Ideal::new(&self.ring, gens)
    }

    /// `self ∩ other`, by eliminating `t` from `t·I + (1 - t)·J`.
    pub fn intersection(&self, other: &Ideal<F>) -> Result<Ideal<F>> {
        check_same(&self.ring, &other.ring)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Ideal::zero(&self.ring));
        }
        if self.is_unit() {
            return Ok(other.clone());
        }
        if other.is_unit() {
            return Ok(self.clone());
        }
        let n = self.ring.nvars();
        let mut vars = vec![self.ring.fresh_name("t")];
        vars.extend(self.ring.vars().iter().cloned());
        let ext = self.ring.derived(vars, MonomialOrder::Elimination { block: 1 });
        let shift: Vec<usize> = (1..=n).collect();
        let t = Polynomial::<F>::variable(&ext, 0);
        let one_minus_t = &Polynomial::one(&ext) - &t;
        let mut gens = Vec::new();
        for f in &self.basis {
            gens.push(f.map_to(&ext, &shift).mul_unchecked(&t));
        }
        for g in &other.basis {
            gens.push(g.map_to(&ext, &shift).mul_unchecked(&one_minus_t));
        }
        let basis = reduced_basis(&ext, &gens)?;
        let back: Vec<usize> = (0..=n).map(|i| i.saturating_sub(1)).collect();
        let kept = basis
            .into_iter()
            .filter(|g| g.support_mask() & 1 == 0)
            .map(|g| g.map_to(&self.ring, &back))
            .collect();
        Ideal::new(&self.ring, kept)
    }

    /// `(self : f) = (1/f)·(self ∩ (f))`; `(I : 0)` is the unit ideal.
    pub fn quotient_by(&self, f: &Polynomial<F>) -> Result<Ideal<F>> {
        check_same(&self.ring, f.ring())?;
        if f.is_zero() {
            return Ok(Ideal::unit(&self.ring));
        }
        let principal = Ideal::new(&self.ring, vec![f.clone()])?;
        let inter = self.intersection(&principal)?;
        let gens = inter.basis.iter().map(|g| g.exact_div(f)).collect::<Result<Vec<_>>>()?;
        Ideal::new(&self.ring, gens)
    }

    /// `(self : other) = ∩_g (self : g)` over the generators of `other`.
    pub fn quotient(&self, other: &Ideal<F>) -> Result<Ideal<F>> {
        check_same(&self.ring, &other.ring)?;
        let mut acc = Ideal::unit(&self.ring);
        for g in &other.basis {
            acc = acc.intersection(&self.quotient_by(g)?)?;
        }
        Ok(acc)
    }

    /// `self ∩ k[keep]`, computed with a block order that puts the eliminated
    /// variables first. The result lives in the original ring.
    pub fn eliminate<S: AsRef<str>>(&self, keep: &[S]) -> Result<Ideal<F>> {
        let n = self.ring.nvars();
        let mut keep_mask = 0u64;
        for name in keep {
            let i = self
                .ring
                .var_index(name.as_ref())
                .ok_or_else(|| AlgebraError::UnknownVariable { name: name.as_ref().to_string(), offset: 0 })?;
            keep_mask |= 1 << i;
        }
        let elim: Vec<usize> = (0..n).filter(|i| keep_mask & (1 << i) == 0).collect();
        if elim.is_empty() {
            return Ok(self.clone());
        }
        let kept: Vec<usize> = (0..n).filter(|i| keep_mask & (1 << i) != 0).collect();
        let order_perm: Vec<usize> = elim.iter().chain(kept.iter()).copied().collect();
        // positions[i] = new index of variable i
        let mut positions = vec![0; n];
        for (new, &old) in order_perm.iter().enumerate() {
            positions[old] = new;
        }
        let vars = order_perm.iter().map(|&i| self.ring.vars()[i].clone()).collect();
        let ext = self.ring.derived(vars, MonomialOrder::Elimination { block: elim.len() });
        let gens: Vec<_> = self.basis.iter().map(|g| g.map_to(&ext, &positions)).collect();
        let basis = reduced_basis(&ext, &gens)?;
        let elim_mask: u64 = (0..elim.len()).fold(0, |m, i| m | (1 << i));
        let result = basis
            .into_iter()
            .filter(|g| g.support_mask() & elim_mask == 0)
            .map(|g| g.map_to(&self.ring, &order_perm))
            .collect();
        Ideal::new(&self.ring, result)
    }

    /// `f ∈ rad(self)` iff `1 ∈ self + (1 - t·f)` in `R[t]`.
    pub fn radical_contains(&self, f: &Polynomial<F>) -> Result<bool> {
        check_same(&self.ring, f.ring())?;
        if self.is_unit() || f.is_zero() {
            return Ok(true);
        }
        let n = self.ring.nvars();
        let mut vars = self.ring.vars().to_vec();
        vars.push(self.ring.fresh_name("t"));
        let ext = self.ring.derived(vars, MonomialOrder::Grevlex);
        let id: Vec<usize> = (0..n).collect();
        let mut gens: Vec<_> = self.basis.iter().map(|g| g.map_to(&ext, &id)).collect();
        let tf = Polynomial::<F>::variable(&ext, n).mul_unchecked(&f.map_to(&ext, &id));
        gens.push(&Polynomial::one(&ext) - &tf);
        let basis = reduced_basis(&ext, &gens)?;
        Ok(basis.len() == 1 && basis[0].is_constant())
    }

    /// `rad(other) ⊆ rad(self)`.
    pub fn radical_contains_ideal(&self, other: &Ideal<F>) -> Result<bool> {
        for g in &other.basis {
            if !self.radical_contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Equality of radicals, i.e. of the varieties.
    pub fn same_radical(&self, other: &Ideal<F>) -> Result<bool> {
        Ok(self.radical_contains_ideal(other)? && other.radical_contains_ideal(self)?)
    }

    /// Krull dimension of `R / self`; `-1` for the unit ideal.
    pub fn krull_dim(&self) -> i64 {
        dimension_from_leads(self.ring.nvars(), &self.lead_monomials())
    }

    /// Moves the ideal to another ring with the same variables.
    pub fn reorder(&self, target: &Arc<Ring>) -> Result<Ideal<F>> {
        let gens = self.generators.iter().map(|g| g.reorder(target)).collect();
        Ideal::new(target, gens)
    }
}

impl<F: Field> fmt::Display for Ideal<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.basis.is_empty() {
            return f.write_str("(0)");
        }
        f.write_str("(")?;
        for (i, g) in self.basis.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(")")
    }
}

/// Reduced Gröbner basis as an [`Ideal`].
pub fn buchberger<F: Field>(ring: &Arc<Ring>, gens: &[Polynomial<F>]) -> Result<Ideal<F>> {
    Ideal::new(ring, gens.to_vec())
}

pub fn ideal_membership<F: Field>(f: &Polynomial<F>, ideal: &Ideal<F>) -> Result<bool> {
    ideal.contains(f)
}

/// `j ⊆ i`.
pub fn ideal_contains<F: Field>(i: &Ideal<F>, j: &Ideal<F>) -> Result<bool> {
    i.contains_ideal(j)
}

pub fn krull_dim<F: Field>(ideal: &Ideal<F>) -> i64 {
    ideal.krull_dim()
}
