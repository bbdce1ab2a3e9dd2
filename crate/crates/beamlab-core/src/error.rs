//! Error types shared by the whole crate.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, Error)]
pub enum Error {
    /// A state-spec string failed to parse; `pos` is the byte offset of
    /// the offending character.
    #[error("malformed state spec at byte {pos}: {msg}")]
    SpecParse { pos: usize, msg: String },

    /// A truncation-accuracy guard fired in strict mode.
    #[error("truncation guard: {0}")]
    Truncation(String),

    /// A parameter fell outside its mathematical domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// QPD evaluation was requested beyond the supported ordering range.
    #[error("unsupported ordering s = {s}: QPD evaluation requires s <= {s_max}")]
    UnsupportedOrdering { s: f64, s_max: f64 },

    /// The quadrature integrand had not decayed at the grid boundary.
    #[error("grid too small: integrand magnitude {boundary_max:.3e} at the boundary (limit {limit:.1e})")]
    GridTooSmall { boundary_max: f64, limit: f64 },

    /// An operator basis was numerically singular.
    #[error("degenerate basis: Gram condition number {cond:.3e} exceeds {limit:.1e}")]
    DegenerateBasis { cond: f64, limit: f64 },

    /// A witness subset was not closed under index conjugation (i,j)->(j,i).
    #[error("invalid subset: not closed under conjugation, offending pair ({i},{j})")]
    InvalidSubset { i: usize, j: usize },

    /// Attenuation-dilation maps are positive only for kappa >= 1.
    #[error("nonpositive map: attenuation dilation requires kappa >= 1, got {kappa}")]
    NonPositiveMap { kappa: f64 },

    /// Both arms of an interferometer were completely lossy.
    #[error("degenerate loss: eta1 and eta2 cannot both be zero")]
    DegenerateLoss,

    #[error("invalid mode index {0}: expected 1 or 2")]
    InvalidMode(usize),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    /// Matrix data violated a state invariant at construction.
    #[error("invalid state: {0}")]
    InvalidState(String),

    /// Internal numerical failure (eigensolver breakdown and the like).
    #[error("numerical failure: {0}")]
    Numerical(String),
}

impl Error {
    /// Rough classification used by the CLI for its exit-code contract:
    /// parse problems, numeric guards, and everything else.
    pub fn is_parse(&self) -> bool {
        matches!(self, Error::SpecParse { .. })
    }

    pub fn is_numeric_guard(&self) -> bool {
        matches!(
            self,
            Error::Truncation(_)
                | Error::Domain(_)
                | Error::UnsupportedOrdering { .. }
                | Error::GridTooSmall { .. }
                | Error::DegenerateBasis { .. }
                | Error::InvalidSubset { .. }
                | Error::NonPositiveMap { .. }
                | Error::DegenerateLoss
                | Error::InvalidState(_)
        )
    }
}
