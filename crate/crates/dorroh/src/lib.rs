//! Exact-arithmetic toolkit for Dorroh extensions of algebras and coalgebras.
//!
//! Finite-dimensional algebras, coalgebras, (bi)module actions and
//! (bi)comodule coactions are represented by structure constants over an
//! exact field (the rationals or GF(p)). On top of that substrate the crate
//! builds the Dorroh extension `H ⋉ I` with product
//! `(a,x)(b,y) = (ab, ay + xb + xy)` and its coalgebra counterpart, decides
//! when the extension is a bialgebra or a Hopf algebra, solves for the
//! antipode component on `I`, and classifies the ideals and subcoalgebras of
//! such extensions — each classification backed by an independent brute-force
//! oracle over small finite fields.
//!
//! All arithmetic is exact, every structure is immutable after construction,
//! and every checker is a pure function, so identity checking is a decision
//! rather than an approximation.

pub mod algebra;
pub mod cli;
pub mod coalgebra;
pub mod doc;
pub mod error;
pub mod extension;
pub mod field;
pub mod gallery;
pub mod hopf;
pub mod ideals;
pub mod matrix;
pub mod pair;
pub mod report;
pub mod subcoalgebras;
pub mod subspace;
#[cfg(test)]
pub(crate) mod testutil;

pub use field::{FieldSpec, Scalar};
pub use matrix::{Matrix, Tensor3};
pub use report::{AnalysisReport, Condition};
pub use subspace::{QuotientSpace, Subspace};
