use crate::duality::DeficiencyData;
use crate::error::{AlgebraError, Result};
use crate::groebner::Ideal;
use crate::locus::{
    depth_dim_at_prime, equidimensional_from_annihilator, is_cm_at_prime, ncm_a_ideal, ncm_t_ideal, psd,
    serre_condition, Equidimensionality, PrimeIdeal,
};
use crate::polyarith::Field;

/// Localized invariants at a named prime; `None` outside the support.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeReport {
    pub name: String,
    pub local: Option<(i64, i64, bool)>,
}

#[derive(Clone, Debug)]
pub struct LocusReport<F: Field> {
    pub depth: usize,
    pub dim: usize,
    pub a: Vec<Ideal<F>>,
    pub psd: Vec<i64>,
    pub ncm_t: Ideal<F>,
    pub ncm_a: Ideal<F>,
    /// `S_r` for `r = 1..=dim`.
    pub serre: Vec<(usize, bool)>,
    pub primes: Vec<PrimeReport>,
    pub equidimensional: Equidimensionality,
}

/// Everything the locus functions compute, in one pass.
pub fn locus_report<F: Field>(d: &DeficiencyData<F>, primes: &[(String, PrimeIdeal<F>)]) -> Result<LocusReport<F>> {
    let psd_table = (0..=d.top()).map(|i| psd(d, i)).collect::<Result<Vec<_>>>()?;
    let serre = (1..=d.dim()).map(|r| Ok((r, serre_condition(d, r)?))).collect::<Result<Vec<_>>>()?;
    let mut prime_reports = Vec::with_capacity(primes.len());
    for (name, p) in primes {
        let local = match depth_dim_at_prime(d, p) {
            Ok((depth, dim)) => Some((depth, dim, is_cm_at_prime(d, p)?)),
            Err(AlgebraError::NotInSupport) => None,
            Err(e) => return Err(e),
        };
        prime_reports.push(PrimeReport { name: name.clone(), local });
    }
    Ok(LocusReport {
        depth: d.depth(),
        dim: d.dim(),
        a: d.a_all().to_vec(),
        psd: psd_table,
        ncm_t: ncm_t_ideal(d)?,
        ncm_a: ncm_a_ideal(d)?,
        serre,
        primes: prime_reports,
        equidimensional: equidimensional_from_annihilator(d.annihilator())?,
    })
}
