//! Exact standard bases for the local degree ordering `ds`, tangent cones,
//! Hilbert–Samuel multiplicities, and the stabilization threshold for cyclic
//! covers `I + <g - y^n>` of a singularity.

pub mod coeff;
pub mod cover;
pub mod error;
pub mod hilbert;
pub mod monomial;
pub mod parse;
pub mod poly;
pub mod ring;
pub mod stdbasis;

pub use coeff::{Coefficient, FieldSpec};
pub use error::{Error, Result};
pub use hilbert::{dim_and_mult, hilbert_numerator, multiplicity_of_local_ring, MonomialIdeal};
pub use monomial::{Monomial, MonomialOrdering};
pub use parse::parse_polynomial;
pub use poly::{Polynomial, Term};
pub use ring::{Ring, RingContext};
pub use stdbasis::{standard_basis, IdealBasis, StandardBasis};
