//! Exact toric-ideal machinery for the numerical semigroups
//! `S(e,m,n) = <{e, ..., 2e-1} \ {e+m, e+n}>`.
//!
//! The crate is organised bottom-up:
//!
//! * [`semigroup`]: numerical semigroup arithmetic and the Sally-type family.
//! * [`algebra`]: monomials, pure-difference binomials and monomial orders.
//! * [`groebner`]: Buchberger's algorithm specialised to binomials.
//! * [`toric_oracle`]: defining ideals computed by elimination, independent of
//!   the explicit families.
//! * [`families`]: the explicit generating sets and Groebner completions.
//! * [`analysis`]: Cohen-Macaulay / Gorenstein classification, CM type and
//!   Castelnuovo-Mumford regularity.

pub mod algebra;
pub mod analysis;
pub mod error;
pub mod families;
pub mod groebner;
pub mod limits;
pub mod semigroup;
pub mod toric_oracle;

pub use algebra::{Binomial, Monomial, MonomialOrder, VariableSet};
pub use analysis::{classify, ClassificationReport, Engine};
pub use error::{Error, Result};
pub use families::FamilyGenerators;
pub use groebner::GroebnerBasis;
pub use limits::Limits;
pub use semigroup::{NumericalSemigroup, SallyParams};
