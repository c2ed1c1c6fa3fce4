//! Algebras presented by structure constants. Algebras are not assumed to
//! be unital; the unit is optional data and validated when present.

use crate::error::StructureError;
use crate::field::{render_combination, FieldSpec, Scalar};
use crate::matrix::Tensor3;
use crate::report::{AnalysisReport, Condition};
use crate::subspace::Subspace;

/// A finite-dimensional algebra with multiplication tensor `m[i][j][k]`,
/// meaning `e_i · e_j = Σ_k m[i][j][k] e_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra {
    pub field: FieldSpec,
    pub dim: usize,
    pub basis_names: Vec<String>,
    pub mult: Tensor3,
    pub unit: Option<Vec<Scalar>>,
}

impl Algebra {
    pub fn new(
        field: FieldSpec,
        basis_names: Vec<String>,
        mult: Tensor3,
        unit: Option<Vec<Scalar>>,
    ) -> Result<Algebra, StructureError> {
        let dim = basis_names.len();
        if mult.dims() != (dim, dim, dim) {
            return Err(StructureError::ShapeMismatch(format!(
                "multiplication tensor has dims {:?}, expected ({dim},{dim},{dim})",
                mult.dims()
            )));
        }
        if mult.field() != field {
            return Err(StructureError::FieldMismatch(
                "multiplication tensor field differs from the declared field".into(),
            ));
        }
        if let Some(u) = &unit {
            if u.len() != dim {
                return Err(StructureError::ShapeMismatch(format!(
                    "unit vector has length {}, expected {dim}",
                    u.len()
                )));
            }
        }
        Ok(Algebra { field, dim, basis_names, mult, unit })
    }

    /// The algebra with all products zero.
    pub fn zero_mult(field: FieldSpec, basis_names: Vec<String>) -> Algebra {
        let dim = basis_names.len();
        Algebra { field, dim, basis_names, mult: Tensor3::zero(field, dim, dim, dim), unit: None }
    }

    /// The ground field as a one-dimensional unital algebra.
    pub fn ground_field(field: FieldSpec, name: &str) -> Algebra {
        let mut mult = Tensor3::zero(field, 1, 1, 1);
        mult.set(0, 0, 0, field.one());
        Algebra {
            field,
            dim: 1,
            basis_names: vec![name.to_string()],
            mult,
            unit: Some(vec![field.one()]),
        }
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        let mut v = vec![self.field.zero(); self.dim];
        v[i] = self.field.one();
        v
    }

    pub fn is_unital(&self) -> bool {
        self.unit.is_some()
    }

    /// Product of two coordinate vectors.
    pub fn mul_vec(&self, u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(u.len(), self.dim);
        assert_eq!(v.len(), self.dim);
        let mut out = vec![self.field.zero(); self.dim];
        for (i, a) in u.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in v.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a.mul(b);
                for k in 0..self.dim {
                    let c = self.mult.at(i, j, k);
                    if !c.is_zero() {
                        out[k] = out[k].add(&ab.mul(c));
                    }
                }
            }
        }
        out
    }

    pub fn render(&self, v: &[Scalar]) -> String {
        render_combination(v, &self.basis_names)
    }

    /// Checks associativity on all basis triples plus the unit axioms when a
    /// unit is declared. Condition ids are suffixed with the given tag.
    pub fn validate(&self, tag: &str) -> AnalysisReport {
        let mut report = AnalysisReport::new();
        let mut assoc = Vec::new();
        for i in 0..self.dim {
            for j in 0..self.dim {
                let ij = self.mul_vec(&self.basis_vector(i), &self.basis_vector(j));
                for l in 0..self.dim {
                    let jl = self.mul_vec(&self.basis_vector(j), &self.basis_vector(l));
                    let lhs = self.mul_vec(&ij, &self.basis_vector(l));
                    let rhs = self.mul_vec(&self.basis_vector(i), &jl);
                    if lhs != rhs {
                        assoc.push(format!(
                            "({}·{})·{} = {} but {}·({}·{}) = {}",
                            self.basis_names[i],
                            self.basis_names[j],
                            self.basis_names[l],
                            self.render(&lhs),
                            self.basis_names[i],
                            self.basis_names[j],
                            self.basis_names[l],
                            self.render(&rhs),
                        ));
                    }
                }
            }
        }
        report.push(Condition::from_witnesses(&format!("A.assoc({tag})"), assoc));
        if let Some(unit) = &self.unit {
            let mut unit_fail = Vec::new();
            for i in 0..self.dim {
                let e = self.basis_vector(i);
                let left = self.mul_vec(unit, &e);
                let right = self.mul_vec(&e, unit);
                if left != e {
                    unit_fail.push(format!(
                        "1·{} = {}",
                        self.basis_names[i],
                        self.render(&left)
                    ));
                }
                if right != e {
                    unit_fail.push(format!(
                        "{}·1 = {}",
                        self.basis_names[i],
                        self.render(&right)
                    ));
                }
            }
            report.push(Condition::from_witnesses(&format!("A.unit({tag})"), unit_fail));
        }
        report
    }
}

/// Span of all products `u · v` with `u` in `a`, `v` in `b`.
pub fn subspace_product(alg: &Algebra, a: &Subspace, b: &Subspace) -> Subspace {
    let rows: Vec<Vec<Scalar>> = a
        .basis_rows()
        .iter()
        .flat_map(|u| b.basis_rows().into_iter().map(|v| alg.mul_vec(u, &v)))
        .collect();
    Subspace::from_rows(alg.field, alg.dim, &rows)
}

/// Whether the row-convention matrix is a multiplication-preserving linear
/// map between the two algebras (checked on basis pairs; unit preservation
/// is checked when both algebras are unital).
pub fn algebra_hom_witnesses(
    map: &crate::matrix::Matrix,
    domain: &Algebra,
    codomain: &Algebra,
) -> Vec<String> {
    let mut witnesses = Vec::new();
    for i in 0..domain.dim {
        for j in 0..domain.dim {
            let prod = domain.mul_vec(&domain.basis_vector(i), &domain.basis_vector(j));
            let lhs = map.apply(&prod);
            let rhs = codomain.mul_vec(
                &map.apply(&domain.basis_vector(i)),
                &map.apply(&domain.basis_vector(j)),
            );
            if lhs != rhs {
                witnesses.push(format!(
                    "f({}·{}) = {} but f({})·f({}) = {}",
                    domain.basis_names[i],
                    domain.basis_names[j],
                    codomain.render(&lhs),
                    domain.basis_names[i],
                    domain.basis_names[j],
                    codomain.render(&rhs),
                ));
            }
        }
    }
    if let (Some(u), Some(v)) = (&domain.unit, &codomain.unit) {
        if &map.apply(u) != v {
            witnesses.push(format!(
                "f(1) = {} differs from the codomain unit",
                codomain.render(&map.apply(u))
            ));
        }
    }
    witnesses
}

#[cfg(test)]
mod tests {
    use super::*;

    use crate::testutil::kc2_group_algebra;

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    #[test]
    fn one_dim_idempotent_validates() {
        let mut mult = Tensor3::zero(q(), 1, 1, 1);
        mult.set(0, 0, 0, q().one());
        let a = Algebra::new(q(), vec!["e".into()], mult, None).unwrap();
        assert!(a.validate("I").all_passed());
    }

    #[test]
    fn wrong_unit_is_reported() {
        let mut mult = Tensor3::zero(q(), 1, 1, 1);
        mult.set(0, 0, 0, q().one());
        // declared unit 2e fails: (2e)·e = 2e ≠ e
        let a = Algebra::new(q(), vec!["e".into()], mult, Some(vec![q().from_i64(2)])).unwrap();
        let report = a.validate("I");
        assert!(!report.all_passed());
        assert!(!report.passed("A.unit(I)"));
        assert!(report.passed("A.assoc(I)"));
    }

    #[test]
    fn group_algebra_validates_on_all_triples() {
        let a = kc2_group_algebra(q());
        assert!(a.validate("A").all_passed());
        let g = a.basis_vector(1);
        assert_eq!(a.mul_vec(&g, &g), a.basis_vector(0));
    }

    #[test]
    fn nonassociative_mult_fails() {
        // e·e = f, e·f = e, everything else zero: (ee)f = ef = e, e(ef) = ee = f.
        let mut mult = Tensor3::zero(q(), 2, 2, 2);
        mult.set(0, 0, 1, q().one());
        mult.set(0, 1, 0, q().one());
        let a = Algebra::new(q(), vec!["e".into(), "f".into()], mult, None).unwrap();
        let report = a.validate("I");
        assert!(!report.passed("A.assoc(I)"));
    }
}
