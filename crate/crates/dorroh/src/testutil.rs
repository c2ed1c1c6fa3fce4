//! Shared fixture builders for unit tests.

use crate::algebra::Algebra;
use crate::coalgebra::Coalgebra;
use crate::field::FieldSpec;
use crate::matrix::{Matrix, Tensor3};
use crate::pair::{BicomoduleCoaction, BimoduleAction, Bistructure, DorrohPairBialgebras};

/// Group algebra of the order-2 group: basis {1, g} with g² = 1.
pub fn kc2_group_algebra(field: FieldSpec) -> Algebra {
    let mut mult = Tensor3::zero(field, 2, 2, 2);
    mult.set(0, 0, 0, field.one());
    mult.set(0, 1, 1, field.one());
    mult.set(1, 0, 1, field.one());
    mult.set(1, 1, 0, field.one());
    Algebra::new(
        field,
        vec!["one".into(), "g".into()],
        mult,
        Some(vec![field.one(), field.zero()]),
    )
    .unwrap()
}

/// Group-like coalgebra on n basis elements: Δ(e_i) = e_i ⊗ e_i, ε = 1.
pub fn grouplike_coalgebra(field: FieldSpec, names: Vec<String>) -> Coalgebra {
    let n = names.len();
    let mut comult = Tensor3::zero(field, n, n, n);
    for i in 0..n {
        comult.set(i, i, i, field.one());
    }
    Coalgebra::new(field, names, comult, Some(vec![field.one(); n])).unwrap()
}

/// The pair (k, kx) with x² = -2x, Δ_I(x) = x⊗x and trivial (co)actions;
/// its extension is the group algebra of the order-2 group. Requires
/// characteristic ≠ 2.
pub fn kc2_pair(field: FieldSpec) -> DorrohPairBialgebras {
    assert_ne!(field.characteristic(), 2, "this fixture degenerates in characteristic 2");
    let mut mult = Tensor3::zero(field, 1, 1, 1);
    mult.set(0, 0, 0, field.from_i64(-2));
    let i_alg = Algebra::new(field, vec!["x".into()], mult, None).unwrap();
    let mut comult = Tensor3::zero(field, 1, 1, 1);
    comult.set(0, 0, 0, field.one());
    let i_coalg = Coalgebra::new(field, vec!["x".into()], comult, None).unwrap();
    DorrohPairBialgebras::validated(
        Bistructure::ground_field(field, "e"),
        Bistructure::new(i_alg, i_coalg).unwrap(),
        BimoduleAction::trivial_scalar(field, 1),
        BicomoduleCoaction::trivial_scalar(field, 1),
    )
    .unwrap()
}

/// The 4-dimensional Hopf structure on basis {1, g, x, gx} with g² = 1,
/// x² = 0, xg = -gx, Δ(g) = g⊗g, Δ(x) = x⊗1 + g⊗x, together with its
/// antipode S(g) = g, S(x) = -gx, S(gx) = x. Requires characteristic ≠ 2.
pub fn sweedler_bistructure(field: FieldSpec) -> (Bistructure, Matrix) {
    assert_ne!(field.characteristic(), 2, "this fixture degenerates in characteristic 2");
    let names: Vec<String> = ["one", "g", "x", "gx"].iter().map(|s| s.to_string()).collect();
    let one = field.one();
    let neg = field.from_i64(-1);
    let mut mult = Tensor3::zero(field, 4, 4, 4);
    for j in 0..4 {
        mult.set(0, j, j, one.clone());
        if j != 0 {
            mult.set(j, 0, j, one.clone());
        }
    }
    mult.set(1, 1, 0, one.clone());
    mult.set(1, 2, 3, one.clone());
    mult.set(1, 3, 2, one.clone());
    mult.set(2, 1, 3, neg.clone());
    mult.set(3, 1, 2, neg.clone());
    let algebra = Algebra::new(
        field,
        names.clone(),
        mult,
        Some(vec![one.clone(), field.zero(), field.zero(), field.zero()]),
    )
    .unwrap();
    let mut comult = Tensor3::zero(field, 4, 4, 4);
    comult.set(0, 0, 0, one.clone());
    comult.set(1, 1, 1, one.clone());
    comult.set(2, 2, 0, one.clone());
    comult.set(2, 1, 2, one.clone());
    comult.set(3, 3, 1, one.clone());
    comult.set(3, 0, 3, one.clone());
    let coalgebra = Coalgebra::new(
        field,
        names,
        comult,
        Some(vec![one.clone(), one.clone(), field.zero(), field.zero()]),
    )
    .unwrap();
    let mut antipode = Matrix::zero(field, 4, 4);
    antipode.set(0, 0, one.clone());
    antipode.set(1, 1, one.clone());
    antipode.set(2, 3, neg);
    antipode.set(3, 2, one);
    (Bistructure::new(algebra, coalgebra).unwrap(), antipode)
}

/// Degree assignment (0, 0, 1, 1) for the 4-dimensional Hopf fixture.
pub fn sweedler_degrees() -> Vec<usize> {
    vec![0, 0, 1, 1]
}
