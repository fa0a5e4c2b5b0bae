//! Symbolic computation of Lê numbers, polar numbers, Milnor numbers, and
//! derived Milnor-fiber topology for polynomial hypersurface singularities
//! at the origin, over exact rational arithmetic.

pub mod error;
pub mod monomial;
pub mod poly;
pub mod parse;
mod basis;
pub mod cli;
pub mod cycles;
pub mod homology;
pub mod ideal;
pub mod oracle;
pub mod topology;

pub use error::{Error, Result};
pub use ideal::{Ideal, Limits, LocalMultiplicity};
pub use monomial::{Monomial, MonomialOrder, OrderKind};
pub use parse::parse_polynomial;
pub use poly::{PolyRing, Polynomial, ShearMatrix};
