//! Polynomial matrices. Columns are the images of the source basis, so a
//! `rows × cols` matrix is a map `R^cols → R^rows`.

use std::fmt;
use std::sync::Arc;

use crate::error::{AlgebraError, Result};
use crate::modres::free::FreeElement;
use crate::polyarith::ring::check_same;
use crate::polyarith::{Field, Polynomial, Ring};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix<F: Field> {
    ring: Arc<Ring>,
    rows: usize,
    cols: usize,
    entries: Vec<Polynomial<F>>,
}

impl<F: Field> PolyMatrix<F> {
    pub fn zero(ring: &Arc<Ring>, rows: usize, cols: usize) -> Self {
        PolyMatrix { ring: ring.clone(), rows, cols, entries: vec![Polynomial::zero(ring); rows * cols] }
    }

    pub fn identity(ring: &Arc<Ring>, n: usize) -> Self {
        let mut m = Self::zero(ring, n, n);
        for i in 0..n {
            m.entries[i * n + i] = Polynomial::one(ring);
        }
        m
    }

    /// Builds a matrix from its rows.
    pub fn from_rows(ring: &Arc<Ring>, rows: Vec<Vec<Polynomial<F>>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        let mut entries = Vec::with_capacity(nrows * ncols);
        for row in rows {
            if row.len() != ncols {
                return Err(AlgebraError::RankMismatch { expected: ncols, found: row.len() });
            }
            for p in row {
                check_same(ring, p.ring())?;
                entries.push(p);
            }
        }
        Ok(PolyMatrix { ring: ring.clone(), rows: nrows, cols: ncols, entries })
    }

    /// Matrix whose columns are the given vectors of `R^rows`.
    pub fn from_columns(ring: &Arc<Ring>, rows: usize, columns: &[FreeElement<F>]) -> Result<Self> {
        let cols = columns.len();
        let mut m = Self::zero(ring, rows, cols);
        for (j, c) in columns.iter().enumerate() {
            if c.rank() != rows {
                return Err(AlgebraError::RankMismatch { expected: rows, found: c.rank() });
            }
            for (i, p) in c.to_polys().into_iter().enumerate() {
                m.entries[i * cols + j] = p;
            }
        }
        Ok(m)
    }

    /// Single-row matrix `[f_1 ... f_k]`.
    pub fn row(ring: &Arc<Ring>, entries: Vec<Polynomial<F>>) -> Self {
        let cols = entries.len();
        PolyMatrix { ring: ring.clone(), rows: 1, cols, entries }
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Polynomial<F> {
        &self.entries[i * self.cols + j]
    }

    pub fn column(&self, j: usize) -> FreeElement<F> {
        let entries: Vec<_> = (0..self.rows).map(|i| self.get(i, j).clone()).collect();
        FreeElement::from_polys(&self.ring, &entries)
    }

    pub fn columns(&self) -> Vec<FreeElement<F>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn row_vec(&self, i: usize) -> Vec<Polynomial<F>> {
        (0..self.cols).map(|j| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut entries = Vec::with_capacity(self.entries.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                entries.push(self.get(i, j).clone());
            }
        }
        PolyMatrix { ring: self.ring.clone(), rows: self.cols, cols: self.rows, entries }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        check_same(&self.ring, &other.ring)?;
        if self.cols != other.rows {
            return Err(AlgebraError::RankMismatch { expected: self.cols, found: other.rows });
        }
        let mut out = Self::zero(&self.ring, self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = Polynomial::zero(&self.ring);
                for k in 0..self.cols {
                    let (a, b) = (self.get(i, k), other.get(k, j));
                    if !a.is_zero() && !b.is_zero() {
                        acc = &acc + &a.mul_unchecked(b);
                    }
                }
                out.entries[i * other.cols + j] = acc;
            }
        }
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|p| p.is_zero())
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hconcat(&self, other: &Self) -> Result<Self> {
        if self.rows != other.rows {
            return Err(AlgebraError::RankMismatch { expected: self.rows, found: other.rows });
        }
        let mut cols = self.columns();
        cols.extend(other.columns());
        Self::from_columns(&self.ring, self.rows, &cols)
    }

    /// Block diagonal sum.
    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        check_same(&self.ring, &other.ring)?;
        let rows = self.rows + other.rows;
        let mut cols: Vec<FreeElement<F>> = self.columns().iter().map(|c| c.embed(rows, 0)).collect();
        cols.extend(other.columns().iter().map(|c| c.embed(rows, self.rows)));
        Self::from_columns(&self.ring, rows, &cols)
    }
}

impl<F: Field> fmt::Display for PolyMatrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for i in 0..self.rows {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str("[")?;
            for j in 0..self.cols {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyarith::{parse_polynomial, Rational};

    fn mat(ring: &Arc<Ring>, rows: &[&[&str]]) -> PolyMatrix<Rational> {
        let rows = rows.iter().map(|r| r.iter().map(|s| parse_polynomial(s, ring).unwrap()).collect()).collect();
        PolyMatrix::from_rows(ring, rows).unwrap()
    }

    #[test]
    fn koszul_composition_vanishes() {
        let r = Ring::grevlex(&["x", "y"]).unwrap();
        let a = mat(&r, &[&["x", "y"]]);
        let b = mat(&r, &[&["y"], &["-x"]]);
        assert!(a.mul(&b).unwrap().is_zero());
        assert_eq!(a.transpose(), mat(&r, &[&["x"], &["y"]]));
        assert_eq!(a.to_string(), "[[x, y]]");
    }

    #[test]
    fn columns_round_trip() {
        let r = Ring::grevlex(&["x", "y"]).unwrap();
        let a = mat(&r, &[&["x", "1"], &["0", "y^2"]]);
        assert_eq!(PolyMatrix::from_columns(&r, 2, &a.columns()).unwrap(), a);
        let s = a.direct_sum(&mat(&r, &[&["y"]])).unwrap();
        assert_eq!((s.rows(), s.cols()), (3, 3));
        assert_eq!(s.get(2, 2).to_string(), "y");
    }

    #[test]
    fn ragged_rows_rejected() {
        let r = Ring::grevlex(&["x"]).unwrap();
        let rows = vec![vec![Polynomial::<Rational>::one(&r)], vec![]];
        assert!(PolyMatrix::from_rows(&r, rows).is_err());
    }
}
