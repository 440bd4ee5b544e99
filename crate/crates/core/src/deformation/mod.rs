//! Formal deformations: Maurer–Cartan solutions over a super coordinate ring,
//! their Kuranishi obstruction maps and the induced Frobenius products.

pub mod coords;
pub mod field;
pub mod frobenius;
pub mod kuranishi;
pub mod ring;
pub mod symbolic;

pub use coords::{Coordinate, CoordinateSystem};
pub use field::SuperField;
pub use frobenius::{dbar_gamma, frobenius_products, FrobeniusTable};
pub use kuranishi::{
    closed_form_kodaira, generalized_closed_form, kuranishi_solve, mc_residual, ChenField, KuranishiSolution,
};
pub use ring::{CoeffMonomial, SuperScalar};
pub use symbolic::{Component, SymExpr, SymbolicSurface};
