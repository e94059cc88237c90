//! Exact tools for testing Laurent polynomial identities on unit groups.
//!
//! The central object is the square-zero algebra `F_C = K[α, β : α² = β² = 0]`
//! represented in `M₂(K[T])`. Words in a free group are classified by their
//! cumulus, Laurent polynomials get an obstruction matrix read off their
//! maximal-cumulus support, and finite algebras give a second testing ground.

pub mod exactalg;
pub mod expand;
pub mod fcrep;
pub mod grpalg;
pub mod laurent;
pub mod par;
pub mod search;
pub mod words;
