//! Finite groups, finite-dimensional algebras and identity checks on them.

mod algebra;
mod checks;
mod group;

pub use algebra::{AlgElem, FinAlgebra};
pub use checks::{
    all_elements, bac_check, falsify_lpi, finitecondi_witness, p1_check, sample_unit,
    square_zero_elements, standard_poly, standard_poly_check, structural_predicates, BacOutcome,
    CheckMode, FalsifyOutcome, FiniteWitness, P1Outcome, StandardOutcome, StructuralReport,
    EXHAUSTIVE_LIMIT, TUPLE_LIMIT,
};
pub use group::FiniteGroup;

use std::sync::Arc;

use thiserror::Error;

use crate::exactalg::{Field, Ring};
use crate::laurent::LaurentError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GrpError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),
    #[error("order {order} is not invertible in characteristic {characteristic}")]
    NonInvertibleOrder { order: usize, characteristic: u64 },
    #[error("element is not a unit")]
    NotAUnit,
    #[error("standard polynomial of degree {expected} needs {expected} arguments, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("algebra has {size} elements; exhaustive mode is limited to {limit}")]
    TooLargeForExhaustive { size: String, limit: u64 },
    #[error("operation needs a nonzero polynomial")]
    ZeroPolynomial,
    #[error("no witness found; this contradicts the degree bound")]
    NoWitness,
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("line {line}: {message}")]
    Import { line: usize, message: String },
    #[error(transparent)]
    Laurent(#[from] LaurentError),
}

fn group_of(alg: &Arc<FinAlgebra>) -> Result<&FiniteGroup, GrpError> {
    alg.group()
        .ok_or_else(|| GrpError::InvalidParameter("not a group algebra".into()))
}

/// `ĝ = Σ_{x ∈ ⟨g⟩} x`.
pub fn hat(alg: &Arc<FinAlgebra>, g: usize) -> Result<AlgElem, GrpError> {
    let group = group_of(alg)?;
    if g >= group.order() {
        return Err(GrpError::InvalidParameter(format!("no group element {g}")));
    }
    Ok(group
        .cyclic_subgroup(g)
        .into_iter()
        .fold(AlgElem::zero(alg), |acc, x| {
            acc.plus(&AlgElem::basis(alg, x))
        }))
}

/// `(1/m)·ĝ` with `m` the order of `g`, an idempotent.
pub fn hat_normalized(alg: &Arc<FinAlgebra>, g: usize) -> Result<AlgElem, GrpError> {
    let h = hat(alg, g)?;
    let m = group_of(alg)?.element_order(g);
    let field: Field = alg.field();
    let inv = field
        .from_i64(m as i64)
        .inv()
        .ok_or(GrpError::NonInvertibleOrder {
            order: m,
            characteristic: field.characteristic(),
        })?;
    Ok(h.scaled(&inv))
}

/// `(1 − g)·h·ĝ`, which squares to zero.
pub fn cyclic_nilpotent(alg: &Arc<FinAlgebra>, g: usize, h: usize) -> Result<AlgElem, GrpError> {
    let one = AlgElem::one(alg);
    let gh = hat(alg, g)?;
    Ok(one
        .minus(&AlgElem::basis(alg, g))
        .times(&AlgElem::basis(alg, h))
        .times(&gh))
}
