//! Subspaces in reduced row-echelon canonical form, quotient spaces with
//! lifted representative bases, and exhaustive subspace enumeration over
//! finite fields.
//!
//! The RREF basis is the unique canonical representative of a subspace, so
//! subspace equality is plain matrix equality and every higher-level module
//! compares subspaces that way.

use crate::error::LinalgError;
use crate::field::{FieldSpec, Scalar};
use crate::matrix::Matrix;

/// Default ceiling for `p^(n^2)` in exhaustive enumerations; permits
/// ambient dimension 4 over GF(2) and 3 over GF(3).
pub const DEFAULT_ENUM_BUDGET: u128 = 65_536;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    field: FieldSpec,
    basis: Matrix, // RREF, zero rows removed
}

impl Subspace {
    pub fn zero(field: FieldSpec, ambient: usize) -> Subspace {
        Subspace { ambient, field, basis: Matrix::zero(field, 0, ambient) }
    }

    pub fn full(field: FieldSpec, ambient: usize) -> Subspace {
        Subspace { ambient, field, basis: Matrix::identity(field, ambient) }
    }

    /// Span of the given row vectors.
    pub fn from_rows(field: FieldSpec, ambient: usize, rows: &[Vec<Scalar>]) -> Subspace {
        for r in rows {
            assert_eq!(r.len(), ambient, "spanning vector has wrong length");
        }
        if rows.is_empty() {
            return Subspace::zero(field, ambient);
        }
        let m = Matrix::from_rows(field, rows.to_vec());
        let (r, _) = m.rref();
        Subspace { ambient, field, basis: r.without_zero_rows() }
    }

    pub fn from_matrix_rows(m: &Matrix) -> Subspace {
        Subspace::from_rows(m.field(), m.cols(), &m.row_vecs())
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_rows(&self) -> Vec<Vec<Scalar>> {
        self.basis.row_vecs()
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        assert_eq!(v.len(), self.ambient);
        if v.iter().all(Scalar::is_zero) {
            return true;
        }
        let stacked = self.basis.vstack(&Matrix::from_rows(self.field, vec![v.to_vec()]));
        stacked.rank() == self.dim()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis_rows().iter().all(|r| self.contains(r))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check_ambient(other)?;
        let mut rows = self.basis_rows();
        rows.extend(other.basis_rows());
        Ok(Subspace::from_rows(self.field, self.ambient, &rows))
    }

    /// Intersection via the kernel of the stacked basis: a combination of
    /// `self` rows equals a combination of `other` rows exactly when the
    /// concatenated coefficient vector kills `[self; -other]`.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check_ambient(other)?;
        if self.dim() == 0 || other.dim() == 0 {
            return Ok(Subspace::zero(self.field, self.ambient));
        }
        let stacked = self.basis.vstack(&other.basis.scale(&self.field.one().neg()));
        let combos = stacked.left_kernel();
        let rows: Vec<Vec<Scalar>> = (0..combos.rows())
            .map(|r| {
                let coeffs = &combos.row(r)[..self.dim()];
                let mut v = vec![self.field.zero(); self.ambient];
                for (i, c) in coeffs.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    for j in 0..self.ambient {
                        v[j] = v[j].add(&c.mul(self.basis.at(i, j)));
                    }
                }
                v
            })
            .collect();
        Ok(Subspace::from_rows(self.field, self.ambient, &rows))
    }

    /// Lifted representatives of a basis of `self / (self ∩ other)`:
    /// rows of `self` that extend a basis of the intersection.
    pub fn quotient_reps(&self, other: &Subspace) -> Result<Vec<Vec<Scalar>>, LinalgError> {
        self.check_ambient(other)?;
        let meet = self.intersect(other)?;
        let mut reps = Vec::new();
        let mut acc = meet.basis_rows();
        let mut rank = meet.dim();
        for row in self.basis_rows() {
            acc.push(row.clone());
            let new_rank = Matrix::from_rows(self.field, acc.clone()).rank();
            if new_rank > rank {
                rank = new_rank;
                reps.push(row);
            } else {
                acc.pop();
            }
        }
        Ok(reps)
    }

    /// Tensor product of subspaces inside the lexicographically ordered
    /// tensor square of the ambient spaces.
    pub fn tensor(&self, other: &Subspace) -> Subspace {
        if self.dim() == 0 || other.dim() == 0 {
            return Subspace::zero(self.field, self.ambient * other.ambient);
        }
        Subspace::from_matrix_rows(&self.basis.kronecker(other.basis()))
    }

    /// Image of this subspace under a row-convention linear map.
    pub fn map_through(&self, m: &Matrix) -> Subspace {
        let rows: Vec<Vec<Scalar>> = self.basis_rows().iter().map(|r| m.apply(r)).collect();
        Subspace::from_rows(self.field, m.cols(), &rows)
    }

    fn check_ambient(&self, other: &Subspace) -> Result<(), LinalgError> {
        if self.ambient != other.ambient || self.field != other.field {
            Err(LinalgError::AmbientMismatch(self.ambient, other.ambient))
        } else {
            Ok(())
        }
    }
}

/// Solves `A x = b` (column convention) returning one particular solution
/// when consistent together with the full null space as a canonical subspace.
pub fn solve_linear(
    a: &Matrix,
    b: &[Scalar],
) -> Result<(Option<Vec<Scalar>>, Subspace), LinalgError> {
    let particular = a.solve(b)?;
    let kernel = Subspace::from_matrix_rows(&a.kernel());
    Ok((particular, kernel))
}

/// A quotient `space / modulus` carried by an explicit lifted basis of coset
/// representatives; coset arithmetic is never abstract.
#[derive(Clone, Debug)]
pub struct QuotientSpace {
    space: Subspace,
    modulus: Subspace,
    reps: Vec<Vec<Scalar>>,
}

impl QuotientSpace {
    pub fn new(space: Subspace, modulus: Subspace) -> Result<QuotientSpace, LinalgError> {
        if !space.contains_subspace(&modulus) {
            return Err(LinalgError::NotContained {
                have: format!("subspace of dimension {}", modulus.dim()),
                need: format!("space of dimension {}", space.dim()),
            });
        }
        let reps = space.quotient_reps(&modulus)?;
        Ok(QuotientSpace { space, modulus, reps })
    }

    pub fn dim(&self) -> usize {
        self.reps.len()
    }

    pub fn space(&self) -> &Subspace {
        &self.space
    }

    pub fn modulus(&self) -> &Subspace {
        &self.modulus
    }

    pub fn reps(&self) -> &[Vec<Scalar>] {
        &self.reps
    }

    /// Coordinates of `v + modulus` in the representative basis;
    /// `None` when `v` is not in the underlying space.
    pub fn coords(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        let field = self.space.field();
        if !self.space.contains(v) {
            return None;
        }
        if self.dim() == 0 {
            return Some(Vec::new());
        }
        let mut rows = self.reps.clone();
        rows.extend(self.modulus.basis_rows());
        let system = Matrix::from_rows(field, rows).transpose();
        let sol = system.solve(v).ok()??;
        Some(sol[..self.dim()].to_vec())
    }

    /// The representative of the coset with the given coordinates.
    pub fn lift(&self, coords: &[Scalar]) -> Vec<Scalar> {
        let field = self.space.field();
        let mut v = vec![field.zero(); self.space.ambient()];
        for (c, rep) in coords.iter().zip(&self.reps) {
            if c.is_zero() {
                continue;
            }
            for (j, r) in rep.iter().enumerate() {
                v[j] = v[j].add(&c.mul(r));
            }
        }
        v
    }

    /// Whether two vectors of the space represent the same coset.
    pub fn same_coset(&self, u: &[Scalar], v: &[Scalar]) -> bool {
        let diff: Vec<Scalar> = u.iter().zip(v).map(|(a, b)| a.sub(b)).collect();
        self.modulus.contains(&diff)
    }
}

/// Gaussian binomial coefficient `(n choose k)_p`.
pub fn gaussian_binomial(n: usize, k: usize, p: u64) -> u128 {
    if k > n {
        return 0;
    }
    let mut num = 1u128;
    let mut den = 1u128;
    let pp = p as u128;
    for i in 0..k {
        num *= pp.pow((n - i) as u32) - 1;
        den *= pp.pow((i + 1) as u32) - 1;
    }
    num / den
}

/// Total number of subspaces of an `n`-dimensional space over GF(p).
pub fn total_subspace_count(n: usize, p: u64) -> u128 {
    (0..=n).map(|k| gaussian_binomial(n, k, p)).sum()
}

/// Enumerates every subspace of GF(p)^n exactly once, by canonical RREF:
/// for each pivot-column set, all fillings of the free positions. Order is
/// by dimension, then pivot pattern, then free entries — fully deterministic.
///
/// The guard refuses when `p^(n^2)` exceeds the budget; the error carries
/// the exact subspace count so callers can report it.
pub fn enumerate_subspaces(
    ambient: usize,
    field: FieldSpec,
    budget: Option<u128>,
) -> Result<Vec<Subspace>, LinalgError> {
    let FieldSpec::PrimeField(p) = field else {
        return Err(LinalgError::DimensionMismatch(
            "subspace enumeration requires a finite field".to_string(),
        ));
    };
    let budget = budget.unwrap_or(DEFAULT_ENUM_BUDGET);
    let metric = (p as u128).checked_pow((ambient * ambient) as u32);
    match metric {
        Some(m) if m <= budget => {}
        _ => {
            return Err(LinalgError::BudgetExceeded {
                metric: metric.unwrap_or(u128::MAX),
                budget,
                count: total_subspace_count(ambient, p),
            })
        }
    }

    let elements = field.elements().expect("finite field");
    let mut out = vec![Subspace::zero(field, ambient)];
    for k in 1..=ambient {
        for pivots in combinations(ambient, k) {
            // free positions: row i, column j with j > pivots[i] and j not a pivot
            let mut free = Vec::new();
            for (i, &pc) in pivots.iter().enumerate() {
                for j in pc + 1..ambient {
                    if !pivots.contains(&j) {
                        free.push((i, j));
                    }
                }
            }
            let mut counters = vec![0usize; free.len()];
            loop {
                let mut m = Matrix::zero(field, k, ambient);
                for (i, &pc) in pivots.iter().enumerate() {
                    m.set(i, pc, field.one());
                }
                for (slot, &(i, j)) in free.iter().enumerate() {
                    m.set(i, j, elements[counters[slot]].clone());
                }
                out.push(Subspace { ambient, field, basis: m });
                // odometer over GF(p)^free
                let mut idx = 0;
                loop {
                    if idx == counters.len() {
                        break;
                    }
                    counters[idx] += 1;
                    if counters[idx] < elements.len() {
                        break;
                    }
                    counters[idx] = 0;
                    idx += 1;
                }
                if counters.iter().all(|&c| c == 0) {
                    break;
                }
            }
        }
    }
    Ok(out)
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    fn vq(v: Vec<i64>) -> Vec<Scalar> {
        v.into_iter().map(|x| q().from_i64(x)).collect()
    }

    #[test]
    fn sum_intersection_trivial_cases() {
        let e1 = Subspace::from_rows(q(), 2, &[vq(vec![1, 0])]);
        let e2 = Subspace::from_rows(q(), 2, &[vq(vec![0, 1])]);
        assert_eq!(e1.sum(&e1).unwrap(), e1);
        assert_eq!(e1.intersect(&e1).unwrap(), e1);
        assert!(e1.quotient_reps(&e1).unwrap().is_empty());
        assert_eq!(e1.sum(&e2).unwrap(), Subspace::full(q(), 2));
        assert_eq!(e1.intersect(&e2).unwrap().dim(), 0);
    }

    #[test]
    fn dimension_formula_three_dim() {
        // U = span{e1+e2, e3}, V = span{e2, e3}: U ∩ V = span{e3}, 2+2 = 3+1.
        let u = Subspace::from_rows(q(), 3, &[vq(vec![1, 1, 0]), vq(vec![0, 0, 1])]);
        let v = Subspace::from_rows(q(), 3, &[vq(vec![0, 1, 0]), vq(vec![0, 0, 1])]);
        let meet = u.intersect(&v).unwrap();
        let join = u.sum(&v).unwrap();
        assert_eq!(meet, Subspace::from_rows(q(), 3, &[vq(vec![0, 0, 1])]));
        assert_eq!(u.dim() + v.dim(), join.dim() + meet.dim());
    }

    #[test]
    fn quotient_space_coords_round_trip() {
        let b = Subspace::full(q(), 3);
        let z = Subspace::from_rows(q(), 3, &[vq(vec![0, 0, 1])]);
        let quo = QuotientSpace::new(b, z).unwrap();
        assert_eq!(quo.dim(), 2);
        let v = vq(vec![2, 3, 5]);
        let coords = quo.coords(&v).unwrap();
        let lifted = quo.lift(&coords);
        assert!(quo.same_coset(&v, &lifted));
    }

    #[test]
    fn enumeration_counts_match_gaussian_binomials() {
        let g2 = FieldSpec::prime_field(2).unwrap();
        assert_eq!(enumerate_subspaces(1, g2, None).unwrap().len(), 2);
        assert_eq!(enumerate_subspaces(2, g2, None).unwrap().len(), 5);
        assert_eq!(enumerate_subspaces(3, g2, None).unwrap().len(), 16);
        assert_eq!(gaussian_binomial(2, 1, 2), 3);
        for n in 0..=4 {
            let subs = enumerate_subspaces(n, g2, None).unwrap();
            assert_eq!(subs.len() as u128, total_subspace_count(n, 2));
            // uniqueness of the canonical representatives
            for i in 0..subs.len() {
                for j in i + 1..subs.len() {
                    assert_ne!(subs[i], subs[j]);
                }
            }
        }
    }

    #[test]
    fn enumeration_budget_guard() {
        let g3 = FieldSpec::prime_field(3).unwrap();
        assert!(enumerate_subspaces(3, g3, None).is_ok());
        let err = enumerate_subspaces(4, g3, None).unwrap_err();
        match err {
            LinalgError::BudgetExceeded { count, .. } => {
                assert_eq!(count, total_subspace_count(4, 3))
            }
            other => panic!("unexpected error {other:?}"),
        }
        // explicit override admits the run
        assert_eq!(
            enumerate_subspaces(4, g3, Some(1 << 60)).unwrap().len() as u128,
            total_subspace_count(4, 3)
        );
    }
}
