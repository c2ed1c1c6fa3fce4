//! Dorroh pairs: an algebra (or coalgebra) `H` together with a possibly
//! non-unital algebra (non-counital coalgebra) `I` carrying an `H`-bimodule
//! action (`H`-bicomodule coaction) compatible with the structure of `I`.
//!
//! Validators check every axiom on every basis tuple and report all failures
//! with exact witnesses; a pair is marked `validated` only when its full
//! report is clean.

use crate::algebra::Algebra;
use crate::coalgebra::Coalgebra;
use crate::error::StructureError;
use crate::field::{render_combination, tensor_names, FieldSpec, Scalar};
use crate::matrix::{add_tensor_product, Tensor3};
use crate::report::{AnalysisReport, Condition};

/// An `H`-bimodule structure on a space of dimension `carried_dim`:
/// `left[a][x][y]` gives `e_a · e_x = Σ_y left[a][x][y] e_y` and
/// `right[x][a][y]` gives `e_x · e_a = Σ_y right[x][a][y] e_y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BimoduleAction {
    pub field: FieldSpec,
    pub acting_dim: usize,
    pub carried_dim: usize,
    pub left: Tensor3,
    pub right: Tensor3,
}

impl BimoduleAction {
    pub fn new(
        field: FieldSpec,
        acting_dim: usize,
        carried_dim: usize,
        left: Tensor3,
        right: Tensor3,
    ) -> Result<BimoduleAction, StructureError> {
        if left.dims() != (acting_dim, carried_dim, carried_dim) {
            return Err(StructureError::ShapeMismatch(format!(
                "left action tensor has dims {:?}",
                left.dims()
            )));
        }
        if right.dims() != (carried_dim, acting_dim, carried_dim) {
            return Err(StructureError::ShapeMismatch(format!(
                "right action tensor has dims {:?}",
                right.dims()
            )));
        }
        Ok(BimoduleAction { field, acting_dim, carried_dim, left, right })
    }

    pub fn zero(field: FieldSpec, acting_dim: usize, carried_dim: usize) -> BimoduleAction {
        BimoduleAction {
            field,
            acting_dim,
            carried_dim,
            left: Tensor3::zero(field, acting_dim, carried_dim, carried_dim),
            right: Tensor3::zero(field, carried_dim, acting_dim, carried_dim),
        }
    }

    /// The action of the ground field by scalar multiplication, for `H = k`.
    pub fn trivial_scalar(field: FieldSpec, carried_dim: usize) -> BimoduleAction {
        let mut left = Tensor3::zero(field, 1, carried_dim, carried_dim);
        let mut right = Tensor3::zero(field, carried_dim, 1, carried_dim);
        for x in 0..carried_dim {
            left.set(0, x, x, field.one());
            right.set(x, 0, x, field.one());
        }
        BimoduleAction { field, acting_dim: 1, carried_dim, left, right }
    }

    pub fn act_left(&self, h: &[Scalar], x: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(h.len(), self.acting_dim);
        assert_eq!(x.len(), self.carried_dim);
        let mut out = vec![self.field.zero(); self.carried_dim];
        for (a, ha) in h.iter().enumerate() {
            if ha.is_zero() {
                continue;
            }
            for (xi, xv) in x.iter().enumerate() {
                if xv.is_zero() {
                    continue;
                }
                let c = ha.mul(xv);
                for y in 0..self.carried_dim {
                    let t = self.left.at(a, xi, y);
                    if !t.is_zero() {
                        out[y] = out[y].add(&c.mul(t));
                    }
                }
            }
        }
        out
    }

    pub fn act_right(&self, x: &[Scalar], h: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(h.len(), self.acting_dim);
        assert_eq!(x.len(), self.carried_dim);
        let mut out = vec![self.field.zero(); self.carried_dim];
        for (xi, xv) in x.iter().enumerate() {
            if xv.is_zero() {
                continue;
            }
            for (a, ha) in h.iter().enumerate() {
                if ha.is_zero() {
                    continue;
                }
                let c = xv.mul(ha);
                for y in 0..self.carried_dim {
                    let t = self.right.at(xi, a, y);
                    if !t.is_zero() {
                        out[y] = out[y].add(&c.mul(t));
                    }
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.left.is_zero() && self.right.is_zero()
    }
}

/// An `H`-bicomodule structure: `rho_l[x][a][y]` gives
/// `ρ_l(e_x) = Σ rho_l[x][a][y] e_a ⊗ e_y ∈ H ⊗ I`, and `rho_r[x][y][a]`
/// gives `ρ_r(e_x) = Σ rho_r[x][y][a] e_y ⊗ e_a ∈ I ⊗ H`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BicomoduleCoaction {
    pub field: FieldSpec,
    pub coacting_dim: usize,
    pub carried_dim: usize,
    pub rho_l: Tensor3,
    pub rho_r: Tensor3,
}

impl BicomoduleCoaction {
    pub fn new(
        field: FieldSpec,
        coacting_dim: usize,
        carried_dim: usize,
        rho_l: Tensor3,
        rho_r: Tensor3,
    ) -> Result<BicomoduleCoaction, StructureError> {
        if rho_l.dims() != (carried_dim, coacting_dim, carried_dim) {
            return Err(StructureError::ShapeMismatch(format!(
                "left coaction tensor has dims {:?}",
                rho_l.dims()
            )));
        }
        if rho_r.dims() != (carried_dim, carried_dim, coacting_dim) {
            return Err(StructureError::ShapeMismatch(format!(
                "right coaction tensor has dims {:?}",
                rho_r.dims()
            )));
        }
        Ok(BicomoduleCoaction { field, coacting_dim, carried_dim, rho_l, rho_r })
    }

    pub fn zero(field: FieldSpec, coacting_dim: usize, carried_dim: usize) -> BicomoduleCoaction {
        BicomoduleCoaction {
            field,
            coacting_dim,
            carried_dim,
            rho_l: Tensor3::zero(field, carried_dim, coacting_dim, carried_dim),
            rho_r: Tensor3::zero(field, carried_dim, carried_dim, coacting_dim),
        }
    }

    /// The trivial coaction `x ↦ 1 ⊗ x`, `x ↦ x ⊗ 1`, for `H = k`.
    pub fn trivial_scalar(field: FieldSpec, carried_dim: usize) -> BicomoduleCoaction {
        let mut rho_l = Tensor3::zero(field, carried_dim, 1, carried_dim);
        let mut rho_r = Tensor3::zero(field, carried_dim, carried_dim, 1);
        for x in 0..carried_dim {
            rho_l.set(x, 0, x, field.one());
            rho_r.set(x, x, 0, field.one());
        }
        BicomoduleCoaction { field, coacting_dim: 1, carried_dim, rho_l, rho_r }
    }

    /// `ρ_l(v)` as a vector in `H ⊗ I` (lexicographic, `H` major).
    pub fn coact_left(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.carried_dim);
        let mut out = vec![self.field.zero(); self.coacting_dim * self.carried_dim];
        for (x, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (xx, a, y, s) in self.rho_l.iter_nonzero() {
                if xx == x {
                    let idx = a * self.carried_dim + y;
                    out[idx] = out[idx].add(&c.mul(s));
                }
            }
        }
        out
    }

    /// `ρ_r(v)` as a vector in `I ⊗ H` (lexicographic, `I` major).
    pub fn coact_right(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.carried_dim);
        let mut out = vec![self.field.zero(); self.carried_dim * self.coacting_dim];
        for (x, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (xx, y, a, s) in self.rho_r.iter_nonzero() {
                if xx == x {
                    let idx = y * self.coacting_dim + a;
                    out[idx] = out[idx].add(&c.mul(s));
                }
            }
        }
        out
    }

    pub fn is_trivial_scalar(&self) -> bool {
        self.coacting_dim == 1
            && *self == BicomoduleCoaction::trivial_scalar(self.field, self.carried_dim)
    }
}

/// Checks the `H`-bimodule axioms of the action on every basis tuple:
/// `(ab)x = a(bx)`, `x(ab) = (xa)b`, `(ax)b = a(xb)`, plus unitality when
/// `H` is unital.
pub fn bimodule_witnesses(h: &Algebra, act: &BimoduleAction, names_i: &[String]) -> AnalysisReport {
    let mut report = AnalysisReport::new();
    let di = act.carried_dim;
    let basis_i = |x: usize| {
        let mut v = vec![act.field.zero(); di];
        v[x] = act.field.one();
        v
    };
    let mut left = Vec::new();
    let mut right = Vec::new();
    let mut middle = Vec::new();
    for a in 0..h.dim {
        let ea = h.basis_vector(a);
        for b in 0..h.dim {
            let eb = h.basis_vector(b);
            let ab = h.mul_vec(&ea, &eb);
            for x in 0..di {
                let ex = basis_i(x);
                let lhs = act.act_left(&ab, &ex);
                let rhs = act.act_left(&ea, &act.act_left(&eb, &ex));
                if lhs != rhs {
                    left.push(format!(
                        "({}·{})·{}: {} vs {}",
                        h.basis_names[a],
                        h.basis_names[b],
                        names_i[x],
                        render_combination(&lhs, names_i),
                        render_combination(&rhs, names_i)
                    ));
                }
                let lhs = act.act_right(&ex, &ab);
                let rhs = act.act_right(&act.act_right(&ex, &ea), &eb);
                if lhs != rhs {
                    right.push(format!(
                        "{}·({}·{}): {} vs {}",
                        names_i[x],
                        h.basis_names[a],
                        h.basis_names[b],
                        render_combination(&lhs, names_i),
                        render_combination(&rhs, names_i)
                    ));
                }
            }
        }
        for x in 0..di {
            let ex = basis_i(x);
            for b in 0..h.dim {
                let eb = h.basis_vector(b);
                let lhs = act.act_right(&act.act_left(&ea, &ex), &eb);
                let rhs = act.act_left(&ea, &act.act_right(&ex, &eb));
                if lhs != rhs {
                    middle.push(format!(
                        "({}·{})·{} vs {}·({}·{}): {} vs {}",
                        h.basis_names[a],
                        names_i[x],
                        h.basis_names[b],
                        h.basis_names[a],
                        names_i[x],
                        h.basis_names[b],
                        render_combination(&lhs, names_i),
                        render_combination(&rhs, names_i)
                    ));
                }
            }
        }
    }
    report.push(Condition::from_witnesses("M.left", left));
    report.push(Condition::from_witnesses("M.right", right));
    report.push(Condition::from_witnesses("M.middle", middle));
    if let Some(unit) = &h.unit {
        let mut unital = Vec::new();
        for x in 0..di {
            let ex = basis_i(x);
            let l = act.act_left(unit, &ex);
            let r = act.act_right(&ex, unit);
            if l != ex {
                unital.push(format!("1·{} = {}", names_i[x], render_combination(&l, names_i)));
            }
            if r != ex {
                unital.push(format!("{}·1 = {}", names_i[x], render_combination(&r, names_i)));
            }
        }
        report.push(Condition::from_witnesses("M.unital", unital));
    }
    report
}

/// Checks the `H`-bicomodule axioms of the coaction on every basis element,
/// plus counitality when `H` is counital.
pub fn bicomodule_witnesses(
    h: &Coalgebra,
    coact: &BicomoduleCoaction,
    names_i: &[String],
) -> AnalysisReport {
    let mut report = AnalysisReport::new();
    let f = coact.field;
    let di = coact.carried_dim;
    let dh = h.dim;
    let basis_i = |x: usize| {
        let mut v = vec![f.zero(); di];
        v[x] = f.one();
        v
    };
    let hhi = tensor_names(&tensor_names(&h.basis_names, &h.basis_names), names_i);
    let ihh = tensor_names(&tensor_names(names_i, &h.basis_names), &h.basis_names);
    let hih = tensor_names(&tensor_names(&h.basis_names, names_i), &h.basis_names);
    let mut left_coassoc = Vec::new();
    let mut right_coassoc = Vec::new();
    let mut compat = Vec::new();
    for x in 0..di {
        // (Δ_H ⊗ 1)ρ_l = (1 ⊗ ρ_l)ρ_l in H⊗H⊗I
        let mut lhs = vec![f.zero(); dh * dh * di];
        let mut rhs = vec![f.zero(); dh * dh * di];
        for (xx, a, u, s) in coact.rho_l.iter_nonzero() {
            if xx != x {
                continue;
            }
            add_tensor_product(&mut lhs, &h.comult_vec(&h.basis_vector(a)), &basis_i(u), s);
            add_tensor_product(&mut rhs, &h.basis_vector(a), &coact.coact_left(&basis_i(u)), s);
        }
        if lhs != rhs {
            left_coassoc.push(format!(
                "{}: {} vs {}",
                names_i[x],
                render_combination(&lhs, &hhi),
                render_combination(&rhs, &hhi)
            ));
        }
        // (ρ_r ⊗ 1)ρ_r = (1 ⊗ Δ_H)ρ_r in I⊗H⊗H
        let mut lhs = vec![f.zero(); di * dh * dh];
        let mut rhs = vec![f.zero(); di * dh * dh];
        for (xx, u, a, s) in coact.rho_r.iter_nonzero() {
            if xx != x {
                continue;
            }
            add_tensor_product(&mut lhs, &coact.coact_right(&basis_i(u)), &h.basis_vector(a), s);
            add_tensor_product(&mut rhs, &basis_i(u), &h.comult_vec(&h.basis_vector(a)), s);
        }
        if lhs != rhs {
            right_coassoc.push(format!(
                "{}: {} vs {}",
                names_i[x],
                render_combination(&lhs, &ihh),
                render_combination(&rhs, &ihh)
            ));
        }
        // (1 ⊗ ρ_r)ρ_l = (ρ_l ⊗ 1)ρ_r in H⊗I⊗H
        let mut lhs = vec![f.zero(); dh * di * dh];
        let mut rhs = vec![f.zero(); dh * di * dh];
        for (xx, a, u, s) in coact.rho_l.iter_nonzero() {
            if xx != x {
                continue;
            }
            add_tensor_product(&mut lhs, &h.basis_vector(a), &coact.coact_right(&basis_i(u)), s);
        }
        for (xx, u, a, s) in coact.rho_r.iter_nonzero() {
            if xx != x {
                continue;
            }
            add_tensor_product(&mut rhs, &coact.coact_left(&basis_i(u)), &h.basis_vector(a), s);
        }
        if lhs != rhs {
            compat.push(format!(
                "{}: {} vs {}",
                names_i[x],
                render_combination(&lhs, &hih),
                render_combination(&rhs, &hih)
            ));
        }
    }
    report.push(Condition::from_witnesses("CM.left", left_coassoc));
    report.push(Condition::from_witnesses("CM.right", right_coassoc));
    report.push(Condition::from_witnesses("CM.compat", compat));
    if let Some(eps) = &h.counit {
        let mut counital = Vec::new();
        for x in 0..di {
            let ex = basis_i(x);
            // (ε ⊗ 1)ρ_l and (1 ⊗ ε)ρ_r
            let mut l = vec![f.zero(); di];
            let mut r = vec![f.zero(); di];
            for (xx, a, u, s) in coact.rho_l.iter_nonzero() {
                if xx == x {
                    l[u] = l[u].add(&s.mul(&eps[a]));
                }
            }
            for (xx, u, a, s) in coact.rho_r.iter_nonzero() {
                if xx == x {
                    r[u] = r[u].add(&s.mul(&eps[a]));
                }
            }
            if l != ex {
                counital.push(format!(
                    "(ε⊗1)ρ_l({}) = {}",
                    names_i[x],
                    render_combination(&l, names_i)
                ));
            }
            if r != ex {
                counital.push(format!(
                    "(1⊗ε)ρ_r({}) = {}",
                    names_i[x],
                    render_combination(&r, names_i)
                ));
            }
        }
        report.push(Condition::from_witnesses("CM.counital", counital));
    }
    report
}

/// A Dorroh pair of algebras: `H`, `I`, and a bimodule action whose products
/// are compatible with the multiplication of `I`.
#[derive(Clone, Debug)]
pub struct DorrohPairAlgebras {
    pub h: Algebra,
    pub i: Algebra,
    pub action: BimoduleAction,
    validated: bool,
}

impl DorrohPairAlgebras {
    pub fn new(
        h: Algebra,
        i: Algebra,
        action: BimoduleAction,
    ) -> Result<DorrohPairAlgebras, StructureError> {
        if action.acting_dim != h.dim || action.carried_dim != i.dim {
            return Err(StructureError::ShapeMismatch(format!(
                "action is ({}, {}) but the pair is ({}, {})",
                action.acting_dim, action.carried_dim, h.dim, i.dim
            )));
        }
        if h.field != i.field || action.field != h.field {
            return Err(StructureError::FieldMismatch(
                "pair members live over different fields".into(),
            ));
        }
        Ok(DorrohPairAlgebras { h, i, action, validated: false })
    }

    /// Builds and fully validates, rejecting with the failed report.
    pub fn validated(
        h: Algebra,
        i: Algebra,
        action: BimoduleAction,
    ) -> Result<DorrohPairAlgebras, StructureError> {
        let mut pair = DorrohPairAlgebras::new(h, i, action)?;
        let report = pair.validate();
        if pair.validated {
            Ok(pair)
        } else {
            Err(StructureError::Invalid(report.sorted().to_string()))
        }
    }

    pub fn is_validated(&self) -> bool {
        self.validated
    }

    /// Checks `H` and `I` individually, the bimodule axioms, and the three
    /// compatibility identities `a(xy) = (ax)y`, `(xa)y = x(ay)`,
    /// `(xy)a = x(ya)` on every basis triple.
    pub fn validate(&mut self) -> AnalysisReport {
        let mut report = AnalysisReport::new();
        report.merge(self.h.validate("H"));
        report.merge(self.i.validate("I"));
        report.merge(bimodule_witnesses(&self.h, &self.action, &self.i.basis_names));
        report.merge(self.compat_report());
        self.validated = report.all_passed();
        report
    }

    fn compat_report(&self) -> AnalysisReport {
        let mut report = AnalysisReport::new();
        let i = &self.i;
        let act = &self.action;
        let mut c1 = Vec::new();
        let mut c2 = Vec::new();
        let mut c3 = Vec::new();
        for a in 0..self.h.dim {
            let ea = self.h.basis_vector(a);
            for x in 0..i.dim {
                let ex = i.basis_vector(x);
                for y in 0..i.dim {
                    let ey = i.basis_vector(y);
                    let lhs = act.act_left(&ea, &i.mul_vec(&ex, &ey));
                    let rhs = i.mul_vec(&act.act_left(&ea, &ex), &ey);
                    if lhs != rhs {
                        c1.push(format!(
                            "a={}, x={}, y={}: a(xy) = {} but (ax)y = {}",
                            self.h.basis_names[a],
                            i.basis_names[x],
                            i.basis_names[y],
                            i.render(&lhs),
                            i.render(&rhs)
                        ));
                    }
                    let lhs = i.mul_vec(&act.act_right(&ex, &ea), &ey);
                    let rhs = i.mul_vec(&ex, &act.act_left(&ea, &ey));
                    if lhs != rhs {
                        c2.push(format!(
                            "x={}, a={}, y={}: (xa)y = {} but x(ay) = {}",
                            i.basis_names[x],
                            self.h.basis_names[a],
                            i.basis_names[y],
                            i.render(&lhs),
                            i.render(&rhs)
                        ));
                    }
                    let lhs = act.act_right(&i.mul_vec(&ex, &ey), &ea);
                    let rhs = i.mul_vec(&ex, &act.act_right(&ey, &ea));
                    if lhs != rhs {
                        c3.push(format!(
                            "x={}, y={}, a={}: (xy)a = {} but x(ya) = {}",
                            i.basis_names[x],
                            i.basis_names[y],
                            self.h.basis_names[a],
                            i.render(&lhs),
                            i.render(&rhs)
                        ));
                    }
                }
            }
        }
        report.push(Condition::from_witnesses("DP.alg.1", c1));
        report.push(Condition::from_witnesses("DP.alg.2", c2));
        report.push(Condition::from_witnesses("DP.alg.3", c3));
        report
    }
}

/// A Dorroh pair of coalgebras: `H`, `P`, and a bicomodule coaction whose
/// coactions are compatible with the comultiplication of `P`.
#[derive(Clone, Debug)]
pub struct DorrohPairCoalgebras {
    pub h: Coalgebra,
    pub p: Coalgebra,
    pub coaction: BicomoduleCoaction,
    validated: bool,
}

impl DorrohPairCoalgebras {
    pub fn new(
        h: Coalgebra,
        p: Coalgebra,
        coaction: BicomoduleCoaction,
    ) -> Result<DorrohPairCoalgebras, StructureError> {
        if coaction.coacting_dim != h.dim || coaction.carried_dim != p.dim {
            return Err(StructureError::ShapeMismatch(format!(
                "coaction is ({}, {}) but the pair is ({}, {})",
                coaction.coacting_dim, coaction.carried_dim, h.dim, p.dim
            )));
        }
        if h.field != p.field || coaction.field != h.field {
            return Err(StructureError::FieldMismatch(
                "pair members live over different fields".into(),
            ));
        }
        Ok(DorrohPairCoalgebras { h, p, coaction, validated: false })
    }

    pub fn validated(
        h: Coalgebra,
        p: Coalgebra,
        coaction: BicomoduleCoaction,
    ) -> Result<DorrohPairCoalgebras, StructureError> {
        let mut pair = DorrohPairCoalgebras::new(h, p, coaction)?;
        let report = pair.validate();
        if pair.validated {
            Ok(pair)
        } else {
            Err(StructureError::Invalid(report.sorted().to_string()))
        }
    }

    pub fn is_validated(&self) -> bool {
        self.validated
    }

    pub fn validate(&mut self) -> AnalysisReport {
        let mut report = AnalysisReport::new();
        report.merge(self.h.validate("H"));
        report.merge(self.p.validate("P"));
        report.merge(bicomodule_witnesses(&self.h, &self.coaction, &self.p.basis_names));
        report.merge(self.compat_report());
        self.validated = report.all_passed();
        report
    }

    /// The three compatibility identities between `Δ_P` and the coactions,
    /// checked per basis element of `P` as tensors in `I⊗I⊗H`, `H⊗I⊗I`
    /// and `I⊗H⊗I`.
    fn compat_report(&self) -> AnalysisReport {
        let mut report = AnalysisReport::new();
        let f = self.h.field;
        let (dh, di) = (self.h.dim, self.p.dim);
        let names_iih =
            tensor_names(&tensor_names(&self.p.basis_names, &self.p.basis_names), &self.h.basis_names);
        let names_hii =
            tensor_names(&tensor_names(&self.h.basis_names, &self.p.basis_names), &self.p.basis_names);
        let names_ihi =
            tensor_names(&tensor_names(&self.p.basis_names, &self.h.basis_names), &self.p.basis_names);
        let mut c1 = Vec::new();
        let mut c2 = Vec::new();
        let mut c3 = Vec::new();
        for x in 0..di {
            // Σ x_1 ⊗ x_2(0) ⊗ x_2(1) = Σ x(0)_1 ⊗ x(0)_2 ⊗ x(1)   (I⊗I⊗H)
            let mut lhs = vec![f.zero(); di * di * dh];
            let mut rhs = vec![f.zero(); di * di * dh];
            for (xx, u, v, s) in self.p.comult.iter_nonzero() {
                if xx == x {
                    add_tensor_product(
                        &mut lhs,
                        &self.p.basis_vector(u),
                        &self.coaction.coact_right(&self.p.basis_vector(v)),
                        s,
                    );
                }
            }
            for (xx, y, a, s) in self.coaction.rho_r.iter_nonzero() {
                if xx == x {
                    add_tensor_product(
                        &mut rhs,
                        &self.p.comult_vec(&self.p.basis_vector(y)),
                        &self.h.basis_vector(a),
                        s,
                    );
                }
            }
            if lhs != rhs {
                c1.push(format!(
                    "{}: {} vs {}",
                    self.p.basis_names[x],
                    render_combination(&lhs, &names_iih),
                    render_combination(&rhs, &names_iih)
                ));
            }
            // Σ x_1(-1) ⊗ x_1(0) ⊗ x_2 = Σ x(-1) ⊗ x(0)_1 ⊗ x(0)_2   (H⊗I⊗I)
            let mut lhs = vec![f.zero(); dh * di * di];
            let mut rhs = vec![f.zero(); dh * di * di];
            for (xx, u, v, s) in self.p.comult.iter_nonzero() {
                if xx == x {
                    add_tensor_product(
                        &mut lhs,
                        &self.coaction.coact_left(&self.p.basis_vector(u)),
                        &self.p.basis_vector(v),
                        s,
                    );
                }
            }
            for (xx, a, y, s) in self.coaction.rho_l.iter_nonzero() {
                if xx == x {
                    add_tensor_product(
                        &mut rhs,
                        &self.h.basis_vector(a),
                        &self.p.comult_vec(&self.p.basis_vector(y)),
                        s,
                    );
                }
            }
            if lhs != rhs {
                c2.push(format!(
                    "{}: {} vs {}",
                    self.p.basis_names[x],
                    render_combination(&lhs, &names_hii),
                    render_combination(&rhs, &names_hii)
                ));
            }
            // Σ x_1(0) ⊗ x_1(1) ⊗ x_2 = Σ x_1 ⊗ x_2(-1) ⊗ x_2(0)   (I⊗H⊗I)
            let mut lhs = vec![f.zero(); di * dh * di];
            let mut rhs = vec![f.zero(); di * dh * di];
            for (xx, u, v, s) in self.p.comult.iter_nonzero() {
                if xx == x {
                    add_tensor_product(
                        &mut lhs,
                        &self.coaction.coact_right(&self.p.basis_vector(u)),
                        &self.p.basis_vector(v),
                        s,
                    );
                    add_tensor_product(
                        &mut rhs,
                        &self.p.basis_vector(u),
                        &self.coaction.coact_left(&self.p.basis_vector(v)),
                        s,
                    );
                }
            }
            if lhs != rhs {
                c3.push(format!(
                    "{}: {} vs {}",
                    self.p.basis_names[x],
                    render_combination(&lhs, &names_ihi),
                    render_combination(&rhs, &names_ihi)
                ));
            }
        }
        report.push(Condition::from_witnesses("DP.coalg.1", c1));
        report.push(Condition::from_witnesses("DP.coalg.2", c2));
        report.push(Condition::from_witnesses("DP.coalg.3", c3));
        report
    }
}

/// A space carrying both an algebra and a coalgebra structure on the same
/// basis. No compatibility between the two is implied; deciding when the
/// combination is a bialgebra is the point of the Dorroh-pair machinery.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bistructure {
    pub algebra: Algebra,
    pub coalgebra: Coalgebra,
}

impl Bistructure {
    pub fn new(algebra: Algebra, coalgebra: Coalgebra) -> Result<Bistructure, StructureError> {
        if algebra.dim != coalgebra.dim
            || algebra.field != coalgebra.field
            || algebra.basis_names != coalgebra.basis_names
        {
            return Err(StructureError::ShapeMismatch(
                "algebra and coalgebra halves disagree on basis or field".into(),
            ));
        }
        Ok(Bistructure { algebra, coalgebra })
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim
    }

    pub fn field(&self) -> FieldSpec {
        self.algebra.field
    }

    pub fn basis_names(&self) -> &[String] {
        &self.algebra.basis_names
    }

    /// The ground field as a one-dimensional Hopf structure.
    pub fn ground_field(field: FieldSpec, name: &str) -> Bistructure {
        Bistructure {
            algebra: Algebra::ground_field(field, name),
            coalgebra: Coalgebra::ground_field(field, name),
        }
    }

    /// Whether this is exactly the one-dimensional ground-field structure.
    pub fn is_scalar(&self) -> bool {
        self.dim() == 1
            && self.algebra.mult.at(0, 0, 0).is_one()
            && self.algebra.unit.as_ref().is_some_and(|u| u[0].is_one())
            && self.coalgebra.comult.at(0, 0, 0).is_one()
            && self.coalgebra.counit.as_ref().is_some_and(|e| e[0].is_one())
    }
}

/// A pair that is simultaneously a Dorroh pair of algebras and of coalgebras.
/// Whether the resulting extension is a bialgebra is decided separately by
/// the ten-condition checker.
#[derive(Clone, Debug)]
pub struct DorrohPairBialgebras {
    pub h: Bistructure,
    pub i: Bistructure,
    pub action: BimoduleAction,
    pub coaction: BicomoduleCoaction,
    validated: bool,
}

impl DorrohPairBialgebras {
    pub fn new(
        h: Bistructure,
        i: Bistructure,
        action: BimoduleAction,
        coaction: BicomoduleCoaction,
    ) -> Result<DorrohPairBialgebras, StructureError> {
        if action.acting_dim != h.dim()
            || action.carried_dim != i.dim()
            || coaction.coacting_dim != h.dim()
            || coaction.carried_dim != i.dim()
        {
            return Err(StructureError::ShapeMismatch(
                "action/coaction dimensions do not match the pair".into(),
            ));
        }
        Ok(DorrohPairBialgebras { h, i, action, coaction, validated: false })
    }

    pub fn validated(
        h: Bistructure,
        i: Bistructure,
        action: BimoduleAction,
        coaction: BicomoduleCoaction,
    ) -> Result<DorrohPairBialgebras, StructureError> {
        let mut pair = DorrohPairBialgebras::new(h, i, action, coaction)?;
        let report = pair.validate();
        if pair.validated {
            Ok(pair)
        } else {
            Err(StructureError::Invalid(report.sorted().to_string()))
        }
    }

    pub fn is_validated(&self) -> bool {
        self.validated
    }

    pub fn validate(&mut self) -> AnalysisReport {
        let mut report = AnalysisReport::new();
        let mut alg = self.algebra_pair_unchecked();
        report.merge(alg.validate());
        let mut coalg = self.coalgebra_pair_unchecked();
        // H and P were already validated through the algebra-pair side's
        // structures; the coalgebra halves still need their own axioms.
        report.merge(coalg.validate());
        self.validated = report.all_passed();
        report
    }

    fn algebra_pair_unchecked(&self) -> DorrohPairAlgebras {
        DorrohPairAlgebras {
            h: self.h.algebra.clone(),
            i: self.i.algebra.clone(),
            action: self.action.clone(),
            validated: false,
        }
    }

    fn coalgebra_pair_unchecked(&self) -> DorrohPairCoalgebras {
        DorrohPairCoalgebras {
            h: self.h.coalgebra.clone(),
            p: self.i.coalgebra.clone(),
            coaction: self.coaction.clone(),
            validated: false,
        }
    }

    /// The algebra-level view, inheriting this pair's validation status.
    pub fn algebra_pair(&self) -> DorrohPairAlgebras {
        let mut p = self.algebra_pair_unchecked();
        p.validated = self.validated;
        p
    }

    /// The coalgebra-level view, inheriting this pair's validation status.
    pub fn coalgebra_pair(&self) -> DorrohPairCoalgebras {
        let mut p = self.coalgebra_pair_unchecked();
        p.validated = self.validated;
        p
    }
}

/// The unitization pair `(k, I)` with the scalar action.
pub fn unitization(i: Algebra) -> Result<DorrohPairAlgebras, StructureError> {
    let field = i.field;
    let dim = i.dim;
    DorrohPairAlgebras::validated(
        Algebra::ground_field(field, "k"),
        i,
        BimoduleAction::trivial_scalar(field, dim),
    )
}

/// The counitization pair `(k, P)` with the trivial coaction.
pub fn counitization(p: Coalgebra) -> Result<DorrohPairCoalgebras, StructureError> {
    let field = p.field;
    let dim = p.dim;
    DorrohPairCoalgebras::validated(
        Coalgebra::ground_field(field, "k"),
        p,
        BicomoduleCoaction::trivial_scalar(field, dim),
    )
}

/// The trivial-extension pair: a unital algebra acting on a bimodule `M`
/// regarded as an algebra with zero multiplication.
pub fn trivial_extension_pair(
    a: Algebra,
    m_names: Vec<String>,
    action: BimoduleAction,
) -> Result<DorrohPairAlgebras, StructureError> {
    if a.unit.is_none() {
        return Err(StructureError::MissingUnit("the base of a trivial extension".into()));
    }
    let m = Algebra::zero_mult(a.field, m_names);
    DorrohPairAlgebras::validated(a, m, action)
}

/// The trivial-coextension pair: a counital coalgebra coacting on a
/// bicomodule `M` regarded as a coalgebra with zero comultiplication.
pub fn trivial_coextension_pair(
    c: Coalgebra,
    m_names: Vec<String>,
    coaction: BicomoduleCoaction,
) -> Result<DorrohPairCoalgebras, StructureError> {
    if c.counit.is_none() {
        return Err(StructureError::MissingCounit("the base of a trivial coextension".into()));
    }
    let m = Coalgebra::zero_comult(c.field, m_names);
    DorrohPairCoalgebras::validated(c, m, coaction)
}

/// The linear-dual pair of a Dorroh pair of coalgebras: comultiplications
/// become multiplications, counits become units, and the coactions become
/// the dual actions. Used as the bridge for annihilator arguments.
pub fn dual_pair(pair: &DorrohPairCoalgebras) -> Result<DorrohPairAlgebras, StructureError> {
    let field = pair.h.field;
    let dual_alg = |c: &Coalgebra| -> Result<Algebra, StructureError> {
        let d = c.dim;
        let mut mult = Tensor3::zero(field, d, d, d);
        for (k, i, j, s) in c.comult.iter_nonzero() {
            mult.set(i, j, k, s.clone());
        }
        Algebra::new(
            field,
            c.basis_names.iter().map(|n| format!("{n}*")).collect(),
            mult,
            c.counit.clone(),
        )
    };
    let h = dual_alg(&pair.h)?;
    let i = dual_alg(&pair.p)?;
    let (dh, di) = (h.dim, i.dim);
    let mut left = Tensor3::zero(field, dh, di, di);
    for (p, a, x, s) in pair.coaction.rho_l.iter_nonzero() {
        left.set(a, x, p, s.clone());
    }
    let mut right = Tensor3::zero(field, di, dh, di);
    for (p, x, a, s) in pair.coaction.rho_r.iter_nonzero() {
        right.set(x, a, p, s.clone());
    }
    let action = BimoduleAction::new(field, dh, di, left, right)?;
    DorrohPairAlgebras::validated(h, i, action)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    /// The pair (k, kx) with x² = -2x, Δ_I(x) = x⊗x and trivial (co)actions.
    pub fn kc2_pair(field: FieldSpec) -> DorrohPairBialgebras {
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

    #[test]
    fn scalar_pair_with_any_algebra_validates() {
        let mut mult = Tensor3::zero(q(), 2, 2, 2);
        mult.set(0, 0, 0, q().one()); // f² = f, everything else zero
        let i = Algebra::new(q(), vec!["f".into(), "u".into()], mult, None).unwrap();
        let pair = unitization(i).unwrap();
        assert!(pair.is_validated());
    }

    #[test]
    fn dual_numbers_pair_validates() {
        let i = Algebra::zero_mult(q(), vec!["m".into()]);
        assert!(unitization(i).is_ok());
    }

    #[test]
    fn scaled_left_action_breaks_compatibility() {
        // a·x = 2ax against x·a = ax: (x·1)·y = x·y but x·(1·y) = 2(x·y),
        // so DP.alg.2 must fail when x·y ≠ 0.
        let mut mult = Tensor3::zero(q(), 1, 1, 1);
        mult.set(0, 0, 0, q().one()); // x² = x
        let i = Algebra::new(q(), vec!["x".into()], mult, None).unwrap();
        let mut left = Tensor3::zero(q(), 1, 1, 1);
        left.set(0, 0, 0, q().from_i64(2));
        let mut right = Tensor3::zero(q(), 1, 1, 1);
        right.set(0, 0, 0, q().one());
        let action = BimoduleAction::new(q(), 1, 1, left, right).unwrap();
        let mut pair =
            DorrohPairAlgebras::new(Algebra::ground_field(q(), "e"), i, action).unwrap();
        let report = pair.validate();
        assert!(!pair.is_validated());
        assert!(!report.passed("M.unital"));
        assert!(!report.passed("DP.alg.2"));
    }

    #[test]
    fn zero_dimensional_carried_space_is_fine() {
        let p = Coalgebra::zero_comult(q(), vec![]);
        let pair = counitization(p).unwrap();
        assert!(pair.is_validated());
    }

    #[test]
    fn grouplike_counitization_validates() {
        let mut comult = Tensor3::zero(q(), 1, 1, 1);
        comult.set(0, 0, 0, q().one());
        let p = Coalgebra::new(q(), vec!["x".into()], comult, None).unwrap();
        assert!(counitization(p).is_ok());
    }

    #[test]
    fn scaled_right_coaction_breaks_compatibility() {
        // ρ_r(x) = 2·x⊗1 with Δ_P(x) = x⊗x: the first compatibility identity
        // compares 2·x⊗x⊗1 against 4·x⊗x⊗1 and counitality fails too.
        let mut comult = Tensor3::zero(q(), 1, 1, 1);
        comult.set(0, 0, 0, q().one());
        let p = Coalgebra::new(q(), vec!["x".into()], comult, None).unwrap();
        let mut coaction = BicomoduleCoaction::trivial_scalar(q(), 1);
        coaction.rho_r.set(0, 0, 0, q().from_i64(2));
        let mut pair =
            DorrohPairCoalgebras::new(Coalgebra::ground_field(q(), "e"), p, coaction).unwrap();
        let report = pair.validate();
        assert!(!pair.is_validated());
        assert!(!report.passed("CM.counital"));
        assert!(!report.passed("DP.coalg.1"));
    }

    #[test]
    fn kc2_pair_validates_at_both_levels() {
        let pair = kc2_pair(q());
        assert!(pair.is_validated());
    }

    #[test]
    fn dual_of_counitization_is_unitization_shaped() {
        let mut comult = Tensor3::zero(q(), 1, 1, 1);
        comult.set(0, 0, 0, q().one());
        let p = Coalgebra::new(q(), vec!["x".into()], comult, None).unwrap();
        let cp = counitization(p).unwrap();
        let ap = dual_pair(&cp).unwrap();
        assert!(ap.is_validated());
        // dual of the group-like comultiplication is the idempotent product
        let x = ap.i.basis_vector(0);
        assert_eq!(ap.i.mul_vec(&x, &x), x);
        assert_eq!(ap.h.unit, Some(vec![q().one()]));
    }
}
