//! Canonical subspaces, kernels, solving, and subquotients.
//!
//! A subspace is stored as the reduced row echelon basis of its span, so two
//! equal subspaces always hold identical data and inclusion tests reduce to
//! membership of basis vectors.

use super::scalar::GaussianRational;
use super::sparse::{row_reduce, SparseMatrix, SparseVector};
use super::ExactError;

/// A linear subspace of ℚ(i)^ambient with a canonical echelon basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<SparseVector>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: vec![],
            pivots: vec![],
        }
    }

    /// The whole space.
    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: (0..ambient).map(SparseVector::unit).collect(),
            pivots: (0..ambient).collect(),
        }
    }

    /// The span of arbitrary vectors, reduced to canonical form.
    pub fn from_spanning(ambient: usize, vectors: Vec<SparseVector>) -> Self {
        for v in &vectors {
            if let Some((last, _)) = v.iter().last() {
                assert!(*last < ambient, "spanning vector exceeds ambient dimension");
            }
        }
        let (basis, pivots) = row_reduce(vectors);
        Subspace {
            ambient,
            basis,
            pivots,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[SparseVector] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Residue of `v` after eliminating all pivot coordinates of the
    /// subspace. The residue is zero exactly when `v` lies in the subspace,
    /// and `v - reduce(v)` always lies in it.
    pub fn reduce(&self, v: &SparseVector) -> SparseVector {
        let mut out = v.clone();
        for (row, pivot) in self.basis.iter().zip(&self.pivots) {
            let c = out.get(*pivot);
            if !c.is_zero() {
                out = out.add_scaled(row, &(-c));
            }
        }
        out
    }

    pub fn contains(&self, v: &SparseVector) -> bool {
        self.reduce(v).is_zero()
    }

    pub fn is_contained_in(&self, other: &Subspace) -> bool {
        self.ambient == other.ambient && self.basis.iter().all(|v| other.contains(v))
    }

    /// Sum of two subspaces of the same ambient space.
    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        let mut vectors = self.basis.clone();
        vectors.extend(other.basis.iter().cloned());
        Subspace::from_spanning(self.ambient, vectors)
    }

    /// Embeds into a larger ambient space, shifting coordinates by `offset`.
    pub fn shifted(&self, offset: usize, new_ambient: usize) -> Subspace {
        assert!(self.ambient + offset <= new_ambient);
        Subspace {
            ambient: new_ambient,
            basis: self.basis.iter().map(|v| v.shifted(offset)).collect(),
            pivots: self.pivots.iter().map(|p| p + offset).collect(),
        }
    }

    /// Image of the subspace under a linear map.
    pub fn mapped_by(&self, matrix: &SparseMatrix) -> Subspace {
        assert_eq!(matrix.cols(), self.ambient);
        Subspace::from_spanning(
            matrix.rows(),
            self.basis.iter().map(|v| matrix.apply(v)).collect(),
        )
    }
}

impl SparseMatrix {
    /// Exact rank over ℚ(i).
    pub fn rank(&self) -> usize {
        let (rows, _) = row_reduce((0..self.rows()).map(|r| self.row(r).clone()).collect());
        rows.len()
    }

    /// Canonical echelon basis of the kernel `{x : Mx = 0}`.
    pub fn kernel_basis(&self) -> Subspace {
        let (rref, pivots) = row_reduce((0..self.rows()).map(|r| self.row(r).clone()).collect());
        let mut vectors = vec![];
        for free_col in 0..self.cols() {
            if pivots.binary_search(&free_col).is_ok() {
                continue;
            }
            let mut pairs = vec![(free_col, GaussianRational::one())];
            for (row, pivot) in rref.iter().zip(&pivots) {
                let c = row.get(free_col);
                if !c.is_zero() {
                    pairs.push((*pivot, -c));
                }
            }
            vectors.push(SparseVector::from_pairs(pairs));
        }
        Subspace::from_spanning(self.cols(), vectors)
    }

    /// Column space as a subspace of the target.
    pub fn column_space(&self) -> Subspace {
        let t = self.transpose();
        Subspace::from_spanning(
            self.rows(),
            (0..t.rows()).map(|r| t.row(r).clone()).collect(),
        )
    }

    /// A particular solution of `Mx = b`, or `None` when the system is
    /// inconsistent. The returned solution is verified by substitution.
    pub fn solve(&self, b: &SparseVector) -> Option<SparseVector> {
        // Row-reduce the augmented system [Mᵗ-rows | b] carried as columns:
        // work on rows of [M | b] directly.
        let aug_col = self.cols();
        let rows: Vec<SparseVector> = (0..self.rows())
            .map(|r| {
                let mut row = self.row(r).clone();
                let extra = b.get(r);
                if !extra.is_zero() {
                    row = row.add_scaled(&SparseVector::unit(aug_col), &extra);
                }
                row
            })
            .collect();
        let (rref, pivots) = row_reduce(rows);
        if pivots.contains(&aug_col) {
            return None;
        }
        // Free variables zero: x[pivot] = augmented entry of that row.
        let pairs: Vec<(usize, GaussianRational)> = rref
            .iter()
            .zip(&pivots)
            .filter_map(|(row, pivot)| {
                let c = row.get(aug_col);
                if c.is_zero() {
                    None
                } else {
                    Some((*pivot, c))
                }
            })
            .collect();
        let x = SparseVector::from_pairs(pairs);
        debug_assert_eq!(self.apply(&x), *b, "solver must verify by substitution");
        Some(x)
    }
}

/// `dim Z − dim B`, checking `B ⊆ Z` exactly first.
///
/// On violation the error carries a basis vector of `B` outside `Z`.
pub fn subquotient_dim(z: &Subspace, b: &Subspace) -> Result<usize, ExactError> {
    for v in b.basis() {
        if !z.contains(v) {
            return Err(ExactError::NotASubspace {
                witness: v.to_string(),
            });
        }
    }
    Ok(z.dim() - b.dim())
}

/// A subquotient `Z / B` with a canonical basis of representatives.
///
/// Representatives are the unique coset members whose coordinates vanish on
/// every pivot column of `B`, stored again in echelon form, so the induced
/// bases (and any matrices expressed in them) are reproducible byte for byte.
#[derive(Clone, Debug)]
pub struct Subquotient {
    cycles: Subspace,
    boundaries: Subspace,
    reps: Subspace,
}

impl Subquotient {
    pub fn new(cycles: Subspace, boundaries: Subspace) -> Result<Self, ExactError> {
        subquotient_dim(&cycles, &boundaries)?;
        let reduced: Vec<SparseVector> = cycles
            .basis()
            .iter()
            .map(|v| boundaries.reduce(v))
            .collect();
        let reps = Subspace::from_spanning(cycles.ambient_dim(), reduced);
        Ok(Subquotient {
            cycles,
            boundaries,
            reps,
        })
    }

    pub fn dim(&self) -> usize {
        self.reps.dim()
    }

    pub fn cycles(&self) -> &Subspace {
        &self.cycles
    }

    pub fn boundaries(&self) -> &Subspace {
        &self.boundaries
    }

    /// Canonical representatives; one basis vector per quotient dimension.
    pub fn reps(&self) -> &Subspace {
        &self.reps
    }

    /// Coordinates of the class `[v]` in the representative basis.
    ///
    /// Fails when `v` lies outside `Z` (up to boundaries).
    pub fn class_coords(&self, v: &SparseVector) -> Result<Vec<GaussianRational>, ExactError> {
        let reduced = self.boundaries.reduce(v);
        let mut coords = Vec::with_capacity(self.reps.dim());
        let mut residue = reduced;
        for (rep, pivot) in self.reps.basis().iter().zip(self.reps.pivots()) {
            let c = residue.get(*pivot);
            if !c.is_zero() {
                residue = residue.add_scaled(rep, &(-c.clone()));
            }
            coords.push(c);
        }
        if !residue.is_zero() {
            return Err(ExactError::OutsideSubquotient);
        }
        Ok(coords)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gr(p: i64, q: i64) -> GaussianRational {
        GaussianRational::from_ratio(p, q)
    }

    #[test]
    fn rank_trivial_cases() {
        // Zero 3×3 matrix has rank 0.
        assert_eq!(SparseMatrix::zero(3, 3).rank(), 0);
        // [[1, i], [i, −1]]: second row is i times the first.
        let m = SparseMatrix::from_entries(
            2,
            2,
            [
                (0, 0, GaussianRational::one()),
                (0, 1, GaussianRational::i()),
                (1, 0, GaussianRational::i()),
                (1, 1, gr(-1, 1)),
            ],
        );
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn kernel_trivial_cases() {
        // Identity has zero kernel.
        assert_eq!(SparseMatrix::identity(2).kernel_basis().dim(), 0);
        // Row matrix [1, i] has kernel spanned by (−i, 1).
        let m = SparseMatrix::from_entries(
            1,
            2,
            [(0, 0, GaussianRational::one()), (0, 1, GaussianRational::i())],
        );
        let k = m.kernel_basis();
        assert_eq!(k.dim(), 1);
        // Canonical form has leading coefficient one.
        assert_eq!(k.basis()[0].get(0), GaussianRational::one());
        assert_eq!(k.basis()[0].get(1), GaussianRational::i());
        // (1, i) spans the same line as (−i, 1): 1·1 + i·i = 0.
        assert!(m.apply(&k.basis()[0]).is_zero());
    }

    #[test]
    fn solve_trivial_cases() {
        let id = SparseMatrix::identity(3);
        let b = SparseVector::from_pairs([(0, gr(2, 1)), (2, gr(-1, 3))]);
        assert_eq!(id.solve(&b).unwrap(), b);

        // [1, i]·x = 2 has solutions; any returned one substitutes exactly.
        let m = SparseMatrix::from_entries(
            1,
            2,
            [(0, 0, GaussianRational::one()), (0, 1, GaussianRational::i())],
        );
        let b = SparseVector::from_pairs([(0, gr(2, 1))]);
        let x = m.solve(&b).unwrap();
        assert_eq!(m.apply(&x), b);

        // Zero 1×1 with b = 1 is inconsistent.
        let z = SparseMatrix::zero(1, 1);
        let b = SparseVector::unit(0);
        assert!(z.solve(&b).is_none());
    }

    #[test]
    fn rank_nullity_small() {
        let m = SparseMatrix::from_entries(
            3,
            4,
            [
                (0, 0, gr(1, 2)),
                (0, 3, gr(2, 1)),
                (1, 0, gr(1, 1)),
                (1, 3, gr(4, 1)),
                (2, 1, GaussianRational::i()),
            ],
        );
        assert_eq!(m.rank() + m.kernel_basis().dim(), m.cols());
    }

    #[test]
    fn subquotient_dims_and_witness() {
        let full = Subspace::full(2);
        assert_eq!(subquotient_dim(&full, &Subspace::zero(2)).unwrap(), 2);
        assert_eq!(subquotient_dim(&full, &full).unwrap(), 0);

        let line = Subspace::from_spanning(2, vec![SparseVector::unit(0)]);
        let other = Subspace::from_spanning(2, vec![SparseVector::unit(1)]);
        let err = subquotient_dim(&line, &other).unwrap_err();
        assert!(matches!(err, ExactError::NotASubspace { .. }));
    }

    #[test]
    fn subquotient_reps_are_canonical() {
        // Z = span{e0, e1, e2}, B = span{e0 + e1}.
        let z = Subspace::full(3);
        let b = Subspace::from_spanning(
            3,
            vec![SparseVector::from_pairs([(0, gr(1, 1)), (1, gr(1, 1))])],
        );
        let q = Subquotient::new(z, b).unwrap();
        assert_eq!(q.dim(), 2);
        // Coordinates of a class recombine with reps to the reduced vector.
        let v = SparseVector::from_pairs([(0, gr(3, 1)), (2, gr(1, 1))]);
        let coords = q.class_coords(&v).unwrap();
        assert_eq!(coords.len(), 2);
        // [e0] = -[e1] mod B, so reducing e0 + e1 gives zero class.
        let w = SparseVector::from_pairs([(0, gr(1, 1)), (1, gr(1, 1))]);
        assert!(q.class_coords(&w).unwrap().iter().all(|c| c.is_zero()));
    }

    #[test]
    fn kernel_basis_is_pure_function() {
        let build = || {
            SparseMatrix::from_entries(
                2,
                3,
                [
                    (0, 0, gr(2, 3)),
                    (0, 2, gr(1, 1)),
                    (1, 1, gr(-1, 2)),
                    (1, 2, GaussianRational::i()),
                ],
            )
        };
        assert_eq!(build().kernel_basis(), build().kernel_basis());
    }
}
