//! Computing with finite Γ-semigroups.
//!
//! * [`algebra`]: operation tables, associativity, homomorphisms, α-regularity.
//! * [`words`]: free Γ-products of a family of tables.
//! * [`congruence`]: congruence generation, quotients, kernels.
//! * [`amalgam`]: amalgams, their free product, bounded word search and
//!   embedding checks.
//! * [`textio`]: the line-based workspace file format.

pub mod algebra;
pub mod amalgam;
pub mod congruence;
pub mod textio;
mod union_find;
pub mod words;

pub use algebra::{AlgebraError, Elem, Gam, GammaHomomorphism, GammaSemigroup, RegularityReport};
pub use amalgam::{GammaAmalgam, Part};
pub use congruence::Congruence;
pub use textio::Workspace;
pub use words::{FreeProduct, Mode, Word};
