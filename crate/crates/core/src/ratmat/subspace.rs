use num_traits::Zero;

use super::mat::row_reduce;
use super::{Mat, Rat};
use crate::error::{LabError, Result};

/// A subspace of `Q^n` stored as the nonzero rows of its reduced row echelon
/// basis. The representation is canonical, so `==` is subspace equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vec<Rat>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Self {
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Self::span(ambient, Mat::identity(ambient).to_rows())
    }

    /// Span of arbitrary (possibly dependent) vectors of length `ambient`.
    pub fn span(ambient: usize, mut vectors: Vec<Vec<Rat>>) -> Self {
        assert!(
            vectors.iter().all(|v| v.len() == ambient),
            "vector length does not match ambient dimension {ambient}"
        );
        let pivots = row_reduce(&mut vectors, ambient);
        vectors.truncate(pivots.len());
        Self {
            ambient,
            basis: vectors,
            pivots,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn codim(&self) -> usize {
        self.ambient - self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Rat>] {
        &self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.basis.len() == self.ambient
    }

    fn same_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient == other.ambient {
            Ok(())
        } else {
            Err(LabError::DimensionMismatch(format!(
                "subspaces of Q^{} and Q^{}",
                self.ambient, other.ambient
            )))
        }
    }

    /// Coordinates of `v` in the echelon basis, or `None` if `v` is outside.
    /// With an RREF basis the coordinate on row `i` is just `v[pivot_i]`.
    pub fn coordinates(&self, v: &[Rat]) -> Option<Vec<Rat>> {
        assert_eq!(v.len(), self.ambient, "vector length mismatch");
        let coords: Vec<Rat> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut residual = v.to_vec();
        for (c, b) in coords.iter().zip(&self.basis) {
            if c.is_zero() {
                continue;
            }
            for (r, x) in residual.iter_mut().zip(b) {
                if !x.is_zero() {
                    *r -= c * x;
                }
            }
        }
        residual.iter().all(Zero::is_zero).then_some(coords)
    }

    pub fn contains_vector(&self, v: &[Rat]) -> bool {
        self.coordinates(v).is_some()
    }

    /// `W ⊆ self`.
    pub fn contains(&self, w: &Subspace) -> Result<bool> {
        self.same_ambient(w)?;
        Ok(w.basis.iter().all(|b| self.contains_vector(b)))
    }

    pub fn sum(&self, w: &Subspace) -> Result<Subspace> {
        self.same_ambient(w)?;
        let vectors = self.basis.iter().chain(&w.basis).cloned().collect();
        Ok(Subspace::span(self.ambient, vectors))
    }

    /// Intersection through the coefficient system `sum a_i u_i - sum b_j w_j = 0`.
    pub fn intersect(&self, w: &Subspace) -> Result<Subspace> {
        self.same_ambient(w)?;
        if self.is_zero() || w.is_zero() {
            return Ok(Subspace::zero(self.ambient));
        }
        let columns: Vec<Vec<Rat>> = self
            .basis
            .iter()
            .cloned()
            .chain(w.basis.iter().map(|b| b.iter().map(|x| -x).collect()))
            .collect();
        let system = Mat::from_columns(self.ambient, &columns);
        let k = self.dim();
        let vectors = system
            .kernel()
            .basis()
            .iter()
            .map(|coef| {
                let mut v = vec![Rat::zero(); self.ambient];
                for (a, u) in coef[..k].iter().zip(&self.basis) {
                    if a.is_zero() {
                        continue;
                    }
                    for (x, y) in v.iter_mut().zip(u) {
                        *x += a * y;
                    }
                }
                v
            })
            .collect();
        Ok(Subspace::span(self.ambient, vectors))
    }

    /// `dim(self / w)`; `w` must be contained in `self`.
    pub fn quotient_dim(&self, w: &Subspace) -> Result<usize> {
        if !self.contains(w)? {
            return Err(LabError::NotNested);
        }
        Ok(self.dim() - w.dim())
    }

    /// Annihilator `{y : <y, u> = 0 for all u in self}`.
    pub fn annihilator(&self) -> Subspace {
        if self.is_zero() {
            return Subspace::full(self.ambient);
        }
        let rows = Mat::from_rows(self.basis.clone()).expect("echelon rows are rectangular");
        rows.kernel()
    }

    /// `M(self)`, the image of this subspace under `M`.
    pub fn map(&self, m: &Mat) -> Result<Subspace> {
        if m.cols() != self.ambient {
            return Err(LabError::DimensionMismatch(format!(
                "cannot map a subspace of Q^{} through a {}x{} matrix",
                self.ambient,
                m.rows(),
                m.cols()
            )));
        }
        Ok(Subspace::span(
            m.rows(),
            self.basis.iter().map(|b| m.apply(b)).collect(),
        ))
    }

    /// `{x : Mx ∈ w}`, computed as the kernel of `Y M` where the rows of `Y`
    /// span the annihilator of `w`.
    pub fn preimage(m: &Mat, w: &Subspace) -> Result<Subspace> {
        if w.ambient != m.rows() {
            return Err(LabError::DimensionMismatch(format!(
                "preimage of a subspace of Q^{} under a {}x{} matrix",
                w.ambient,
                m.rows(),
                m.cols()
            )));
        }
        let ann = w.annihilator();
        if ann.is_zero() {
            return Ok(Subspace::full(m.cols()));
        }
        let test = &Mat::from_rows(ann.basis.clone()).expect("rectangular") * m;
        Ok(test.kernel())
    }

    /// Extends the basis of `small` (⊆ self) by vectors of `self`'s basis to a
    /// basis of `self`; returns only the added complement vectors.
    pub fn complement_in(&self, small: &Subspace) -> Result<Vec<Vec<Rat>>> {
        if !self.contains(small)? {
            return Err(LabError::NotNested);
        }
        let mut current = small.clone();
        let mut added = Vec::new();
        for b in &self.basis {
            if current.dim() == self.dim() {
                break;
            }
            if !current.contains_vector(b) {
                added.push(b.clone());
                let mut vs = current.basis.clone();
                vs.push(b.clone());
                current = Subspace::span(self.ambient, vs);
            }
        }
        Ok(added)
    }
}
