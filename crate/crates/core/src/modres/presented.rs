//! Finitely presented modules `coker A`.

use std::fmt;
use std::sync::Arc;

use crate::error::{AlgebraError, Result};
use crate::groebner::Ideal;
use crate::modres::free::FreeElement;
use crate::modres::matrix::PolyMatrix;
use crate::modres::module_gb::{module_buchberger, module_contains, module_normal_form};
use crate::modres::resolution::syzygy_basis;
use crate::polyarith::ring::check_same;
use crate::polyarith::{Field, Polynomial, Ring};

/// The cokernel of a presentation matrix. Columns are relations among the
/// generators `e_1, ..., e_rows` of the free cover.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PresentedModule<F: Field> {
    presentation: PolyMatrix<F>,
}

impl<F: Field> PresentedModule<F> {
    pub fn coker(presentation: PolyMatrix<F>) -> Self {
        PresentedModule { presentation }
    }

    /// `R / I`, presented by the row of generators of `I`.
    pub fn quotient(ideal: &Ideal<F>) -> Self {
        let gens: Vec<Polynomial<F>> = ideal.generators().iter().filter(|g| !g.is_zero()).cloned().collect();
        Self::coker(PolyMatrix::row(ideal.ring(), gens))
    }

    /// The free module `R^rank`.
    pub fn free(ring: &Arc<Ring>, rank: usize) -> Self {
        Self::coker(PolyMatrix::zero(ring, rank, 0))
    }

    /// The zero module, presented with no generators.
    pub fn zero(ring: &Arc<Ring>) -> Self {
        Self::coker(PolyMatrix::zero(ring, 0, 0))
    }

    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        Ok(Self::coker(self.presentation.direct_sum(&other.presentation)?))
    }

    pub fn ring(&self) -> &Arc<Ring> {
        self.presentation.ring()
    }

    pub fn presentation(&self) -> &PolyMatrix<F> {
        &self.presentation
    }

    /// Number of generators.
    pub fn rank(&self) -> usize {
        self.presentation.rows()
    }

    fn relation_basis(&self) -> Result<Vec<FreeElement<F>>> {
        module_buchberger(self.ring(), self.rank(), &self.presentation.columns())
    }

    /// True iff every generator lies in the span of the relations.
    pub fn is_zero_module(&self) -> Result<bool> {
        let basis = self.relation_basis()?;
        for i in 0..self.rank() {
            if !module_contains(&basis, &FreeElement::unit(self.ring(), self.rank(), i))? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `(im A : e_i)`: the polynomials `f` with `f e_i` in the relation span.
    pub fn generator_annihilator(&self, i: usize) -> Result<Ideal<F>> {
        let (ring, r) = (self.ring(), self.rank());
        if i >= r {
            return Err(AlgebraError::IndexOutOfRange { index: i as i64, max: r as i64 - 1 });
        }
        let unit = PolyMatrix::from_columns(ring, r, &[FreeElement::unit(ring, r, i)])?;
        let ext = self.presentation.hconcat(&unit)?;
        let last = self.presentation.cols();
        let gens = syzygy_basis(&ext)?.into_iter().map(|s| s.component(last)).collect();
        Ideal::new(ring, gens)
    }

    /// `Ann M`, the intersection of the generator annihilators. The zero
    /// module has the unit ideal.
    pub fn annihilator(&self) -> Result<Ideal<F>> {
        let mut acc = Ideal::unit(self.ring());
        for i in 0..self.rank() {
            let q = self.generator_annihilator(i)?;
            acc = if acc.is_unit() { q } else { acc.intersection(&q)? };
        }
        Ok(acc)
    }

    /// Removes generator/relation pairs joined by a unit entry and drops zero
    /// relations. The result is isomorphic to `self`.
    pub fn pruned(&self) -> Self {
        let ring = self.ring().clone();
        let mut rows: Vec<Vec<Polynomial<F>>> = (0..self.rank()).map(|i| self.presentation.row_vec(i)).collect();
        let mut ncols = self.presentation.cols();
        loop {
            let pivot = (0..ncols).find_map(|j| {
                (0..rows.len()).find(|&i| rows[i][j].is_constant() && !rows[i][j].is_zero()).map(|i| (i, j))
            });
            let Some((pi, pj)) = pivot else { break };
            let inv = rows[pi][pj].constant_coeff().inverse().expect("nonzero constant");
            let prow: Vec<Polynomial<F>> = rows[pi].iter().map(|p| p.scale(&inv)).collect();
            for (i, row) in rows.iter_mut().enumerate() {
                if i == pi || row[pj].is_zero() {
                    continue;
                }
                let f = row[pj].clone();
                for (e, pe) in row.iter_mut().zip(&prow) {
                    if !pe.is_zero() {
                        *e = &*e - &f.mul_unchecked(pe);
                    }
                }
            }
            rows.remove(pi);
            for row in rows.iter_mut() {
                row.remove(pj);
            }
            ncols -= 1;
        }
        let keep: Vec<usize> = (0..ncols).filter(|&j| rows.iter().any(|r| !r[j].is_zero())).collect();
        let nrows = rows.len();
        let rows: Vec<Vec<Polynomial<F>>> =
            rows.into_iter().map(|r| keep.iter().map(|&j| r[j].clone()).collect()).collect();
        let pres = if nrows == 0 {
            PolyMatrix::zero(&ring, 0, 0)
        } else if keep.is_empty() {
            PolyMatrix::zero(&ring, nrows, 0)
        } else {
            PolyMatrix::from_rows(&ring, rows).expect("rectangular")
        };
        Self::coker(pres)
    }
}

impl<F: Field> fmt::Display for PresentedModule<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "coker {}", self.presentation)
    }
}

/// Presents `span(kernel) / span(image)`, where both are given as matrices
/// whose columns lie in the same free module.
///
/// The generators are the columns of `kernel`; the relations are the
/// coefficient vectors `c` with `kernel · c` in the span of `image`.
pub fn subquotient_presentation<F: Field>(kernel: &PolyMatrix<F>, image: &PolyMatrix<F>) -> Result<PresentedModule<F>> {
    check_same(kernel.ring(), image.ring())?;
    let ring = kernel.ring();
    if kernel.rows() != image.rows() {
        return Err(AlgebraError::RankMismatch { expected: kernel.rows(), found: image.rows() });
    }
    let kcols = kernel.columns();
    let basis = module_buchberger(ring, kernel.rows(), &kcols)?;
    for (j, b) in image.columns().iter().enumerate() {
        if !module_normal_form(b, &basis)?.is_zero() {
            return Err(AlgebraError::ImageNotContained(j));
        }
    }
    let k = kernel.cols();
    let rels: Vec<FreeElement<F>> = syzygy_basis(&kernel.hconcat(image)?)?
        .into_iter()
        .map(|s| s.project(0, k))
        .filter(|s| !s.is_zero())
        .collect();
    Ok(PresentedModule::coker(PolyMatrix::from_columns(ring, k, &rels)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyarith::{parse_polynomial, Rational};

    type Q = Rational;

    fn mat(ring: &Arc<Ring>, rows: &[&[&str]]) -> PolyMatrix<Q> {
        let rows = rows.iter().map(|r| r.iter().map(|s| parse_polynomial(s, ring).unwrap()).collect()).collect();
        PolyMatrix::from_rows(ring, rows).unwrap()
    }

    fn ideal(ring: &Arc<Ring>, gens: &[&str]) -> Ideal<Q> {
        Ideal::new(ring, gens.iter().map(|s| parse_polynomial(s, ring).unwrap()).collect()).unwrap()
    }

    fn xy() -> Arc<Ring> {
        Ring::grevlex(&["x", "y"]).unwrap()
    }

    #[test]
    fn zero_tests() {
        let r = xy();
        assert!(PresentedModule::coker(PolyMatrix::<Q>::identity(&r, 2)).is_zero_module().unwrap());
        assert!(!PresentedModule::quotient(&ideal(&r, &["x"])).is_zero_module().unwrap());
        assert!(PresentedModule::coker(mat(&r, &[&["1", "x"], &["0", "1"]])).is_zero_module().unwrap());
        assert!(PresentedModule::<Q>::zero(&r).is_zero_module().unwrap());
    }

    #[test]
    fn annihilators() {
        let r = xy();
        assert_eq!(PresentedModule::quotient(&ideal(&r, &["x"])).annihilator().unwrap(), ideal(&r, &["x"]));
        assert!(PresentedModule::<Q>::zero(&r).annihilator().unwrap().is_unit());
        let diag = PresentedModule::coker(mat(&r, &[&["x", "0"], &["0", "y"]]));
        assert_eq!(diag.annihilator().unwrap(), ideal(&r, &["x*y"]));
        assert!(PresentedModule::<Q>::free(&r, 2).annihilator().unwrap().is_zero());
    }

    #[test]
    fn subquotients() {
        let r = xy();
        let m = subquotient_presentation(&mat(&r, &[&["1"]]), &mat(&r, &[&["x"]])).unwrap();
        assert_eq!(m.annihilator().unwrap(), ideal(&r, &["x"]));
        let k = mat(&r, &[&["y"], &["-x"]]);
        assert!(subquotient_presentation(&k, &k).unwrap().is_zero_module().unwrap());
        let m = subquotient_presentation(&k, &mat(&r, &[&["y^2"], &["-x*y"]])).unwrap();
        assert_eq!(m.rank(), 1);
        assert_eq!(m.annihilator().unwrap(), ideal(&r, &["y"]));
    }

    #[test]
    fn image_outside_kernel_is_rejected() {
        let r = xy();
        let err = subquotient_presentation(&mat(&r, &[&["x"]]), &mat(&r, &[&["y"]])).unwrap_err();
        assert_eq!(err, AlgebraError::ImageNotContained(0));
    }

    #[test]
    fn pruning_keeps_the_module() {
        let r = xy();
        let m = PresentedModule::coker(mat(&r, &[&["1", "x"], &["y", "0"]]));
        let p = m.pruned();
        assert_eq!(p.rank(), 1);
        assert_eq!(p.annihilator().unwrap(), m.annihilator().unwrap());
        assert_eq!(p.annihilator().unwrap(), ideal(&r, &["x*y"]));
        let z = PresentedModule::coker(PolyMatrix::<Q>::identity(&r, 2)).pruned();
        assert_eq!(z.rank(), 0);
    }
}
