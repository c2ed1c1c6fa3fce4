//! Coalgebras presented by structure constants. Coalgebras are not assumed
//! to be counital; the counit is optional data and validated when present.

use crate::error::StructureError;
use crate::field::{render_combination, tensor_names, FieldSpec, Scalar};
use crate::matrix::{add_tensor_product, Tensor3};
use crate::report::{AnalysisReport, Condition};

/// A finite-dimensional coalgebra with comultiplication tensor `d[k][i][j]`,
/// meaning `Δ(e_k) = Σ d[k][i][j] e_i ⊗ e_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coalgebra {
    pub field: FieldSpec,
    pub dim: usize,
    pub basis_names: Vec<String>,
    pub comult: Tensor3,
    pub counit: Option<Vec<Scalar>>,
}

impl Coalgebra {
    pub fn new(
        field: FieldSpec,
        basis_names: Vec<String>,
        comult: Tensor3,
        counit: Option<Vec<Scalar>>,
    ) -> Result<Coalgebra, StructureError> {
        let dim = basis_names.len();
        if comult.dims() != (dim, dim, dim) {
            return Err(StructureError::ShapeMismatch(format!(
                "comultiplication tensor has dims {:?}, expected ({dim},{dim},{dim})",
                comult.dims()
            )));
        }
        if comult.field() != field {
            return Err(StructureError::FieldMismatch(
                "comultiplication tensor field differs from the declared field".into(),
            ));
        }
        if let Some(c) = &counit {
            if c.len() != dim {
                return Err(StructureError::ShapeMismatch(format!(
                    "counit covector has length {}, expected {dim}",
                    c.len()
                )));
            }
        }
        Ok(Coalgebra { field, dim, basis_names, comult, counit })
    }

    /// The coalgebra with zero comultiplication.
    pub fn zero_comult(field: FieldSpec, basis_names: Vec<String>) -> Coalgebra {
        let dim = basis_names.len();
        Coalgebra {
            field,
            dim,
            basis_names,
            comult: Tensor3::zero(field, dim, dim, dim),
            counit: None,
        }
    }

    /// The ground field as a one-dimensional counital coalgebra
    /// (its basis element is group-like).
    pub fn ground_field(field: FieldSpec, name: &str) -> Coalgebra {
        let mut comult = Tensor3::zero(field, 1, 1, 1);
        comult.set(0, 0, 0, field.one());
        Coalgebra {
            field,
            dim: 1,
            basis_names: vec![name.to_string()],
            comult,
            counit: Some(vec![field.one()]),
        }
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        let mut v = vec![self.field.zero(); self.dim];
        v[i] = self.field.one();
        v
    }

    pub fn is_counital(&self) -> bool {
        self.counit.is_some()
    }

    /// `Δ(v)` as a vector in the tensor square (lexicographic basis).
    pub fn comult_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.dim);
        let mut out = vec![self.field.zero(); self.dim * self.dim];
        for (k, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (i, j, _, s) in self.comult.slice_entries(k) {
                out[i * self.dim + j] = out[i * self.dim + j].add(&c.mul(s));
            }
        }
        out
    }

    /// Counit applied to a vector.
    pub fn counit_vec(&self, v: &[Scalar]) -> Option<Scalar> {
        self.counit.as_ref().map(|eps| {
            let mut acc = self.field.zero();
            for (c, e) in v.iter().zip(eps) {
                acc = acc.add(&c.mul(e));
            }
            acc
        })
    }

    pub fn render(&self, v: &[Scalar]) -> String {
        render_combination(v, &self.basis_names)
    }

    pub fn render_square(&self, v: &[Scalar]) -> String {
        render_combination(v, &tensor_names(&self.basis_names, &self.basis_names))
    }

    /// Checks coassociativity on every basis element plus the counit axioms
    /// when a counit is declared.
    pub fn validate(&self, tag: &str) -> AnalysisReport {
        let d = self.dim;
        let mut report = AnalysisReport::new();
        let mut coassoc = Vec::new();
        let triple_names = tensor_names(
            &tensor_names(&self.basis_names, &self.basis_names),
            &self.basis_names,
        );
        for k in 0..d {
            // (Δ⊗1)Δ(e_k) and (1⊗Δ)Δ(e_k) in the lexicographic triple basis
            let mut lhs = vec![self.field.zero(); d * d * d];
            let mut rhs = vec![self.field.zero(); d * d * d];
            for (i, j, _, s) in self.comult.slice_entries(k) {
                let di = self.comult_vec(&self.basis_vector(i));
                add_tensor_product(&mut lhs, &di, &self.basis_vector(j), s);
                let dj = self.comult_vec(&self.basis_vector(j));
                add_tensor_product(&mut rhs, &self.basis_vector(i), &dj, s);
            }
            if lhs != rhs {
                coassoc.push(format!(
                    "element {}: (Δ⊗1)Δ = {} but (1⊗Δ)Δ = {}",
                    self.basis_names[k],
                    render_combination(&lhs, &triple_names),
                    render_combination(&rhs, &triple_names),
                ));
            }
        }
        report.push(Condition::from_witnesses(&format!("C.coassoc({tag})"), coassoc));
        if let Some(eps) = &self.counit {
            let mut counit_fail = Vec::new();
            for k in 0..d {
                let mut left = vec![self.field.zero(); d];
                let mut right = vec![self.field.zero(); d];
                // (ε⊗1)Δ and (1⊗ε)Δ
                for (i, j, _, s) in self.comult.slice_entries(k) {
                    left[j] = left[j].add(&s.mul(&eps[i]));
                    right[i] = right[i].add(&s.mul(&eps[j]));
                }
                let e = self.basis_vector(k);
                if left != e {
                    counit_fail.push(format!(
                        "(ε⊗1)Δ({}) = {}",
                        self.basis_names[k],
                        self.render(&left)
                    ));
                }
                if right != e {
                    counit_fail.push(format!(
                        "(1⊗ε)Δ({}) = {}",
                        self.basis_names[k],
                        self.render(&right)
                    ));
                }
            }
            report.push(Condition::from_witnesses(&format!("C.counit({tag})"), counit_fail));
        }
        report
    }
}

/// Whether the row-convention matrix is a comultiplication-preserving map:
/// `Δ_codomain(f(c)) = (f ⊗ f) Δ_domain(c)` on every basis element
/// (counit preservation checked when both sides are counital).
pub fn coalgebra_hom_witnesses(
    map: &crate::matrix::Matrix,
    domain: &Coalgebra,
    codomain: &Coalgebra,
) -> Vec<String> {
    let mut witnesses = Vec::new();
    let ff = map.kronecker(map);
    for k in 0..domain.dim {
        let lhs = codomain.comult_vec(&map.apply(&domain.basis_vector(k)));
        let rhs = ff.apply(&domain.comult_vec(&domain.basis_vector(k)));
        if lhs != rhs {
            witnesses.push(format!(
                "Δ(f({})) = {} but (f⊗f)Δ({}) = {}",
                domain.basis_names[k],
                codomain.render_square(&lhs),
                domain.basis_names[k],
                codomain.render_square(&rhs),
            ));
        }
    }
    if let (Some(eps_d), Some(_)) = (&domain.counit, &codomain.counit) {
        for k in 0..domain.dim {
            let through = codomain.counit_vec(&map.apply(&domain.basis_vector(k))).unwrap();
            if through != eps_d[k] {
                witnesses.push(format!(
                    "ε(f({})) = {} but ε({}) = {}",
                    domain.basis_names[k], through, domain.basis_names[k], eps_d[k]
                ));
            }
        }
    }
    witnesses
}

impl Tensor3 {
    /// Nonzero entries of slice `t[k][.][.]` as `(i, j, k, scalar)`.
    pub(crate) fn slice_entries(&self, k: usize) -> Vec<(usize, usize, usize, &Scalar)> {
        self.iter_nonzero().filter(|&(i, _, _, _)| i == k).map(|(_, i, j, s)| (i, j, k, s)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    use crate::testutil::grouplike_coalgebra;

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    #[test]
    fn grouplike_coalgebra_validates() {
        let c = grouplike_coalgebra(q(), vec!["one".into(), "g".into()]);
        assert!(c.validate("C").all_passed());
    }

    #[test]
    fn primitive_element_coalgebra_validates() {
        // Δ(1) = 1⊗1, Δ(t) = t⊗1 + 1⊗t, ε = (1, 0).
        let mut comult = Tensor3::zero(q(), 2, 2, 2);
        comult.set(0, 0, 0, q().one());
        comult.set(1, 1, 0, q().one());
        comult.set(1, 0, 1, q().one());
        let c = Coalgebra::new(
            q(),
            vec!["one".into(), "t".into()],
            comult,
            Some(vec![q().one(), q().zero()]),
        )
        .unwrap();
        assert!(c.validate("C").all_passed());
        assert_eq!(
            c.render_square(&c.comult_vec(&c.basis_vector(1))),
            "one⊗t + t⊗one"
        );
    }

    #[test]
    fn broken_counit_is_reported() {
        let mut c = grouplike_coalgebra(q(), vec!["x".into()]);
        c.counit = Some(vec![q().from_i64(2)]);
        let report = c.validate("C");
        assert!(report.passed("C.coassoc(C)"));
        assert!(!report.passed("C.counit(C)"));
    }

    #[test]
    fn non_coassociative_is_reported() {
        // Δ(x) = x⊗y, Δ(y) = 0 is not coassociative: (Δ⊗1)Δ(x) = x⊗y⊗y vs 0.
        let mut comult = Tensor3::zero(q(), 2, 2, 2);
        comult.set(0, 0, 1, q().one());
        let c = Coalgebra::new(q(), vec!["x".into(), "y".into()], comult, None).unwrap();
        assert!(!c.validate("C").passed("C.coassoc(C)"));
    }
}
