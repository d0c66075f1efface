//! Exact graded-ideal oracle in `k[x, y, z, w]`: graded pieces, Hilbert
//! functions, colon ideals and saturation, degree by degree.

mod engine;
mod ideal;
mod linalg;
mod monomial;
mod poly;

pub use engine::{
    colon_piece, default_guard, graded_piece_dim, hf_quotient, hp_fit, linear_tail, member,
    saturation_piece_dim, Arithmetic, HilbertData, PrimeField, Quotient, Rational, Saturation,
    PRIME,
};
pub use ideal::GradedIdeal;
pub use linalg::{kernel, Echelon, Field, Fp, Row};
pub use monomial::{Monomial, MonomialBasis, VARS};
pub use poly::Poly;
