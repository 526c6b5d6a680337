use num_complex::Complex64;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("pole at z = {0}")]
    Pole(Complex64),

    #[error("no sign change on [{lo}, {hi}]: f(lo) = {f_lo}, f(hi) = {f_hi}")]
    Bracket {
        lo: f64,
        hi: f64,
        f_lo: f64,
        f_hi: f64,
    },

    #[error("non-finite value in {context}")]
    NonFinite { context: String },

    #[error("degenerate geometry: {0}")]
    Degenerate(String),

    #[error("branch point at z = {0}")]
    BranchPoint(Complex64),

    #[error("argument outside domain: {0}")]
    Domain(String),

    #[error("not representable: {0}")]
    Representation(String),

    #[error("invalid Weierstrass data: {0}")]
    InvalidData(String),

    #[error("no regular samples among {total}")]
    InsufficientData { total: usize },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn non_finite(context: impl Into<String>) -> Error {
    Error::NonFinite {
        context: context.into(),
    }
}
