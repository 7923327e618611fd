//! Syzygies and free resolutions.

use std::sync::Arc;

use crate::error::{AlgebraError, Result};
use crate::modres::free::FreeElement;
use crate::modres::matrix::PolyMatrix;
use crate::modres::module_gb::{module_buchberger, module_contains};
use crate::modres::presented::PresentedModule;
use crate::polyarith::{Field, Ring};

/// Gröbner basis of the syzygy module of the columns of `a`.
///
/// Each column `a_j` is extended to `(a_j, e_j)` in `R^{rows + cols}`. With
/// the target components placed first in the position-over-term order, the
/// basis elements whose leading term falls in the tracking block are exactly
/// a Gröbner basis of the syzygies.
pub fn syzygy_basis<F: Field>(a: &PolyMatrix<F>) -> Result<Vec<FreeElement<F>>> {
    let ring = a.ring();
    let (r, c) = (a.rows(), a.cols());
    let ext = r + c;
    let gens: Vec<FreeElement<F>> = a
        .columns()
        .into_iter()
        .enumerate()
        .map(|(j, col)| col.embed(ext, 0).add(&FreeElement::unit(ring, ext, r + j)))
        .collect();
    let basis = module_buchberger(ring, ext, &gens)?;
    Ok(basis
        .into_iter()
        .filter(|g| g.lead_component().is_some_and(|i| i >= r))
        .map(|g| g.project(r, c))
        .collect())
}

/// Drops generators that lie in the span of earlier ones, processing them in
/// order of increasing shifted degree. For homogeneous input this yields a
/// minimal generating set. Returns the kept generators and their degrees.
pub fn minimize_generators<F: Field>(
    ring: &Arc<Ring>,
    rank: usize,
    gens: Vec<FreeElement<F>>,
    shifts: &[i64],
) -> Result<(Vec<FreeElement<F>>, Vec<i64>)> {
    let mut tagged: Vec<(i64, FreeElement<F>)> =
        gens.into_iter().filter(|g| !g.is_zero()).map(|g| (g.shifted_degree(shifts), g)).collect();
    tagged.sort_by_key(|t| t.0);
    let mut kept: Vec<FreeElement<F>> = Vec::new();
    let mut degrees = Vec::new();
    let mut basis: Vec<FreeElement<F>> = Vec::new();
    for (d, g) in tagged {
        if !kept.is_empty() && module_contains(&basis, &g)? {
            continue;
        }
        kept.push(g);
        degrees.push(d);
        basis = module_buchberger(ring, rank, &kept)?;
    }
    Ok((kept, degrees))
}

/// Generators of the kernel of `a` (as the columns of a `cols × s` matrix),
/// minimized with respect to the degree shifts `source_shifts` of `a`'s columns.
pub fn kernel_with_shifts<F: Field>(a: &PolyMatrix<F>, source_shifts: &[i64]) -> Result<(PolyMatrix<F>, Vec<i64>)> {
    let syz = syzygy_basis(a)?;
    let (gens, degs) = minimize_generators(a.ring(), a.cols(), syz, source_shifts)?;
    Ok((PolyMatrix::from_columns(a.ring(), a.cols(), &gens)?, degs))
}

/// Generators of `ker a`; empty matrix when `a` is injective.
pub fn kernel<F: Field>(a: &PolyMatrix<F>) -> Result<PolyMatrix<F>> {
    let shifts = column_degrees(a, &vec![0; a.rows()]);
    Ok(kernel_with_shifts(a, &shifts)?.0)
}

fn column_degrees<F: Field>(a: &PolyMatrix<F>, target_shifts: &[i64]) -> Vec<i64> {
    a.columns().iter().map(|c| if c.is_zero() { 0 } else { c.shifted_degree(target_shifts) }).collect()
}

/// A free resolution `F_0 <- F_1 <- ... <- F_L` given by its maps.
#[derive(Clone, Debug)]
pub struct Resolution<F: Field> {
    ring: Arc<Ring>,
    cover_rank: usize,
    maps: Vec<PolyMatrix<F>>,
    complete: bool,
}

impl<F: Field> Resolution<F> {
    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    /// Number of maps `L`.
    pub fn len(&self) -> usize {
        self.maps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.maps.is_empty()
    }

    /// `A_i : F_i -> F_{i-1}` for `1 <= i <= len`.
    pub fn map(&self, i: usize) -> Option<&PolyMatrix<F>> {
        if i == 0 {
            None
        } else {
            self.maps.get(i - 1)
        }
    }

    pub fn maps(&self) -> &[PolyMatrix<F>] {
        &self.maps
    }

    /// Rank of `F_i` (zero beyond the length).
    pub fn rank(&self, i: usize) -> usize {
        if i == 0 {
            self.cover_rank
        } else {
            self.maps.get(i - 1).map_or(0, |a| a.cols())
        }
    }

    /// True when the last map is injective, i.e. the resolution did not stop
    /// at the length cap.
    pub fn is_complete(&self) -> bool {
        self.complete
    }

    /// Checks `A_i · A_{i+1} = 0` for every consecutive pair.
    pub fn is_complex(&self) -> Result<bool> {
        for w in self.maps.windows(2) {
            if !w[0].mul(&w[1])?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Resolves `module` by iterated kernels, at most `max_len` maps long.
///
/// The presentation is first trimmed of redundant columns; each kernel is
/// minimized as in [`minimize_generators`]. Homogeneous input therefore gets
/// its minimal resolution, whose length is bounded by the number of variables.
pub fn free_resolution<F: Field>(module: &PresentedModule<F>, max_len: usize) -> Result<Resolution<F>> {
    if max_len == 0 {
        return Err(AlgebraError::IndexOutOfRange { index: 0, max: i64::MAX });
    }
    let ring = module.ring().clone();
    let pres = module.presentation();
    let cover_rank = pres.rows();
    let target_shifts = vec![0i64; cover_rank];
    let (gens, mut shifts) = minimize_generators(&ring, cover_rank, pres.columns(), &target_shifts)?;
    let mut maps = Vec::new();
    if gens.is_empty() {
        return Ok(Resolution { ring, cover_rank, maps, complete: true });
    }
    maps.push(PolyMatrix::from_columns(&ring, cover_rank, &gens)?);
    let mut complete = false;
    while maps.len() < max_len {
        let (k, degs) = kernel_with_shifts(maps.last().unwrap(), &shifts)?;
        if k.cols() == 0 {
            complete = true;
            break;
        }
        shifts = degs;
        maps.push(k);
    }
    if !complete {
        complete = syzygy_basis(maps.last().unwrap())?.is_empty();
    }
    Ok(Resolution { ring, cover_rank, maps, complete })
}
