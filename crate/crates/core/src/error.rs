use thiserror::Error;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, Copy, PartialEq, Error)]
pub enum Error {
    #[error("root of unity parameters out of range: need 1 <= j <= M-1, got j = {j}, M = {m}")]
    RootOfUnityDomain { j: i64, m: i64 },

    #[error("j = {j} and M = {m} are not co-prime")]
    NotCoprime { j: i64, m: i64 },

    #[error("real deformation parameter must satisfy 0 < q < 1, got {q}")]
    RealQDomain { q: f64 },

    #[error("q must be nonzero")]
    ZeroQ,

    #[error("invalid argument: {0}")]
    InvalidArgument(&'static str),

    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("empty input")]
    Empty,

    #[error("non-finite value produced in {0}")]
    NonFinite(&'static str),

    #[error("integrand envelope {envelope:e} at half-width {half_width} exceeds 1e-16")]
    Envelope { half_width: f64, envelope: f64 },

    #[error("truncation bound {bound:e} did not reach tolerance {tolerance:e} within k_max = {k_max}")]
    Truncation { k_max: usize, bound: f64, tolerance: f64 },

    #[error("growth certificate violated at t = {t}: |f(t)| = {value:e} > bound {bound:e}")]
    CertificateViolation { t: f64, value: f64, bound: f64 },

    #[error("linear system is ill-conditioned (condition estimate {condition:e})")]
    IllConditioned { condition: f64 },

    #[error("least-squares fit is inconsistent (residual {residual:e}, condition {condition:e})")]
    Inconsistent { residual: f64, condition: f64 },

    #[error("eigen-residual {residual:e} exceeds threshold {threshold:e}")]
    ResidualTooLarge { residual: f64, threshold: f64 },
}
