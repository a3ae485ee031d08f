//! Exact arithmetic for monomial valuations on polynomial rings.
//!
//! Everything here is computed over the rationals with no floating point:
//! monomial ideals and their order functions, Newton polyhedra with their
//! facet valuations, monomial valuations with their value ideals and
//! comparison constants, growth functions of the associated graded algebra,
//! and symbolic powers of squarefree ideals.
//!
//! All values are immutable after construction and every operation is a
//! pure function, so results are deterministic and safe to share across
//! threads.

pub mod error;
pub mod graded;
pub mod ideal;
pub mod monomial;
pub mod newton;
pub mod polynomial;
pub mod symbolic;
pub mod valuation;
pub mod value;

pub use error::Error;
pub use ideal::{adic_order, m_adic_order, MonomialIdeal};
pub use monomial::ExponentVector;
pub use newton::{
    is_m_primary, newton_polyhedron, reduced_order, reduced_order_limit_sequence,
    rees_constant_estimate, rees_valuations, Facet, NewtonPolyhedron, ReesConstantEstimate,
};
pub use polynomial::Polynomial;
pub use valuation::{
    abhyankar_invariants, archimedean_multiplier, izumi_constant, is_nu_ideal,
    lin_equiv_constant, mon_of, nu_value, q_ideal, AbhyankarInvariants, LinEquivConstant,
    LinEquivRefutation, MonomialValuation, NuIdeal, NuIdealCheck,
};
pub use value::{OrderValue, RationalValue, Value};

/// Convenience result alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
