use alloc::string::String;

/// Errors raised by kernel operations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// A Y-letter of index 0 reached an operation that only accepts `Y = {y_k}_{k≥1}`.
    #[error("y0 is not allowed in {0}")]
    ZeroIndex(&'static str),
    /// A composition part violates its polarity.
    #[error("invalid composition: {0}")]
    InvalidComposition(String),
    /// A word would exceed the packed representation.
    #[error("word length {0} exceeds the maximum of {max}", max = crate::words::MAX_WORD_LEN)]
    WordTooLong(usize),
    /// Kleene star of a series with a nonzero constant term.
    #[error("star undefined: constant term is nonzero")]
    StarUndefined,
    /// Kleene star of something other than a plane element `a0 x0 + a1 x1`.
    #[error("star not representable in this algebra")]
    StarNotRepresentable,
    /// Concatenation involving star terms.
    #[error("concatenation is only defined on polynomials")]
    ConcOfStars,
    /// A star exponent pair outside `ℤ × ℕ`.
    #[error("not in the Laurent subalgebra: star parameters ({0}, {1})")]
    NotLaurent(String, String),
    /// `index_of` on a monomial whose word still ends with `x0`.
    #[error("word {0} is not reduced (ends with x0)")]
    UnreducedWord(String),
    /// The basepoint limit of a primitive diverges.
    #[error("divergent basepoint limit at z = {0}")]
    DivergentBasepoint(u8),
    /// The basepoint constant is finite but not known as an exact rational.
    #[error("non-elementary basepoint constant at z = {0}")]
    NonElementaryBasepoint(u8),
    /// The requested function lies outside the target ring.
    #[error("not representable: {0}")]
    NotRepresentable(&'static str),
    /// Evaluation point outside `|z| < 1`, on the cut, or a log/negative power at 0.
    #[error("unsupported evaluation point: {0}")]
    Domain(&'static str),
    /// Series truncation hit `max_terms` before reaching the tolerance.
    #[error("no convergence at tolerance after {0} terms")]
    NoConvergence(usize),
    /// A route that does not produce a series was asked for one.
    #[error("route {0} has no series form")]
    NoSeriesForm(&'static str),
}

/// Crate-wide result alias.
pub type Result<T> = core::result::Result<T, Error>;
