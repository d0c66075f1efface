//! Locally Cohen-Macaulay curves in the double plane `2H ⊂ P³`.
//!
//! A curve `C` with `C ⊂ 2H` is described numerically by a triple `(z, y, p)`:
//! the length of the embedded-point scheme `Z ⊂ H`, the degree of the residual
//! curve `Y = Res_H(C)` and the degree of the largest plane curve `P ⊂ C`.
//! Together with the postulation character of `Z` this determines the whole
//! cohomology of the ideal sheaf of `C`.
//!
//! The crate is split in two layers:
//!
//! * a formula layer ([`triples`], [`scheme`], [`profiles`], [`cohomology`],
//!   [`bounds`], [`liaison`]) working on integers only;
//! * an exact graded-ideal engine ([`polyoracle`]) together with the explicit
//!   ideals of [`catalog`], used to check the formula layer independently.
//!
//! [`selftest`] bundles the acceptance checks that tie the two together.

pub mod bounds;
pub mod catalog;
pub mod cohomology;
mod error;
pub mod foundations;
pub mod liaison;
pub mod polyoracle;
pub mod profiles;
pub mod scheme;
pub mod selftest;
pub mod triples;

pub use bounds::{classify, classify_quadric_divisor, genus_ceilings, rho_e, rho_s, CurveKind};
pub use error::{Error, Result};
pub use foundations::IntFn;
pub use profiles::{CurveModel, ZProfile};
pub use scheme::ComponentGraph;
pub use triples::{CurveClass, Triple};
