use thiserror::Error;

use crate::triples::Triple;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid triple (z={z}, y={y}, p={p}): {reason}")]
    InvalidTriple {
        z: i64,
        y: i64,
        p: i64,
        reason: &'static str,
    },
    #[error("invalid Z-profile: {0}")]
    InvalidProfile(String),
    #[error("profile does not fit triple {triple}: {reason}")]
    ProfileMismatch { triple: Triple, reason: String },
    #[error("the Hilbert scheme H_{{{d},{g}}}(2H) is empty")]
    EmptyScheme { d: i64, g: i64 },
    #[error("parameters out of range: {0}")]
    OutOfRange(String),
    #[error("liaison not admissible: {0}")]
    NotAdmissible(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("Rao function window exceeded safety width {0}")]
    WindowExceeded(i64),
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("Hilbert function tail is not linear on degrees {lo}..={hi}: {values:?}")]
    NotLinear { lo: i64, hi: i64, values: Vec<i64> },
    #[error("saturation did not stabilize within guard {guard} (window top degree {top})")]
    NotStabilized { guard: usize, top: usize },
    #[error("not a curve in 2H: {0}")]
    NotInDoublePlane(String),
    #[error("inconsistent extraction: {0}")]
    Inconsistent(String),
    #[error("check failed: {0}")]
    CheckFailed(String),
}
