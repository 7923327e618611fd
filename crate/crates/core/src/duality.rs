//! Ext into the polynomial ring and the deficiency modules `K^i = Ext^{n-i}(M, R)`.
//!
//! Ext is computed globally over `R = k[x_1, ..., x_n]`. Since Ext and
//! annihilators commute with localization, the ideals `a_i = Ann K^i` agree
//! with their local counterparts at every prime inside `(x_1, ..., x_n)`.

use std::sync::Arc;

use rayon::prelude::*;

use crate::error::{AlgebraError, Result};
use crate::groebner::Ideal;
use crate::modres::{free_resolution, kernel, subquotient_presentation, PolyMatrix, PresentedModule, Resolution};
use crate::polyarith::{Field, Ring};

/// `Ext^j(M, R)`, pruned.
pub fn ext_module<F: Field>(module: &PresentedModule<F>, j: usize) -> Result<PresentedModule<F>> {
    let n = module.ring().nvars();
    if j > n {
        return Err(AlgebraError::IndexOutOfRange { index: j as i64, max: n as i64 });
    }
    let res = free_resolution(module, j + 1)?;
    ext_from_resolution(&res, j)
}

/// Homology at position `j` of the dual complex `Hom(F_•, R)`:
/// `ker A_{j+1}^T / im A_j^T`.
pub fn ext_from_resolution<F: Field>(res: &Resolution<F>, j: usize) -> Result<PresentedModule<F>> {
    let ring = res.ring();
    if j > res.len() {
        if res.is_complete() {
            return Ok(PresentedModule::zero(ring));
        }
        return Err(AlgebraError::Inconsistent(format!("resolution too short for Ext^{j}")));
    }
    let rank = res.rank(j);
    let ker = match res.map(j + 1) {
        Some(a) => kernel(&a.transpose())?,
        None if res.is_complete() => PolyMatrix::identity(ring, rank),
        None => return Err(AlgebraError::Inconsistent(format!("resolution too short for Ext^{j}"))),
    };
    let im = match res.map(j) {
        Some(a) => a.transpose(),
        None => PolyMatrix::zero(ring, rank, 0),
    };
    if ker.cols() == 0 {
        return Ok(PresentedModule::zero(ring));
    }
    Ok(subquotient_presentation(&ker, &im)?.pruned())
}

/// Deficiency modules of a nonzero module together with their annihilators.
#[derive(Clone, Debug)]
pub struct DeficiencyData<F: Field> {
    ring: Arc<Ring>,
    annihilator: Ideal<F>,
    k: Vec<PresentedModule<F>>,
    a: Vec<Ideal<F>>,
    depth: usize,
    dim: usize,
    verified: bool,
}

impl<F: Field> DeficiencyData<F> {
    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    /// Number of variables `n`; indices run over `0..=n`.
    pub fn top(&self) -> usize {
        self.k.len() - 1
    }

    pub fn annihilator(&self) -> &Ideal<F> {
        &self.annihilator
    }

    pub fn deficiency_module(&self, i: usize) -> Option<&PresentedModule<F>> {
        self.k.get(i)
    }

    /// `a_i = Ann K^i`; the unit ideal when `K^i = 0`.
    pub fn a(&self, i: usize) -> Option<&Ideal<F>> {
        self.a.get(i)
    }

    pub fn a_all(&self) -> &[Ideal<F>] {
        &self.a
    }

    pub fn is_nonzero(&self, i: usize) -> bool {
        self.a.get(i).is_some_and(|a| !a.is_unit())
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Whether `K^i` was computed for every `i`, including those above `dim`.
    pub fn verified(&self) -> bool {
        self.verified
    }
}

/// Computes `K^i` and `a_i` for `0 <= i <= n`.
///
/// With `verify` unset, `K^i` for `i > dim M` is taken to be zero; otherwise
/// it is computed and checked to vanish.
pub fn deficiency_modules<F: Field>(module: &PresentedModule<F>, verify: bool) -> Result<DeficiencyData<F>> {
    let ring = module.ring().clone();
    let n = ring.nvars();
    let annihilator = module.annihilator()?;
    if annihilator.is_unit() {
        return Err(AlgebraError::ZeroModule);
    }
    let dim = annihilator.krull_dim() as usize;
    let res = free_resolution(module, n + 1)?;
    let computed: Vec<Result<(PresentedModule<F>, Ideal<F>)>> = (0..=n)
        .into_par_iter()
        .map(|i| {
            if i > dim && !verify {
                return Ok((PresentedModule::zero(&ring), Ideal::unit(&ring)));
            }
            let k = ext_from_resolution(&res, n - i)?;
            let a = k.annihilator()?;
            Ok((k, a))
        })
        .collect();
    let (k, a): (Vec<_>, Vec<_>) = computed.into_iter().collect::<Result<Vec<_>>>()?.into_iter().unzip();
    let nonzero: Vec<usize> = (0..=n).filter(|&i| !a[i].is_unit()).collect();
    let (Some(&depth), Some(&top)) = (nonzero.first(), nonzero.last()) else {
        return Err(AlgebraError::Inconsistent("all deficiency modules vanish".into()));
    };
    if top != dim {
        return Err(AlgebraError::Inconsistent(format!(
            "top nonvanishing deficiency module is K^{top} but dim Ann M = {dim}"
        )));
    }
    Ok(DeficiencyData { ring, annihilator, k, a, depth, dim, verified: verify })
}
