//! Exact shuffle algebra of noncommutative rational series over `X = {x0, x1}`,
//! extended by Kleene stars of the plane, together with the rewriting system
//! for the kernel of the polylogarithm morphism and the symbolic/numeric
//! polylogarithm machinery built on top of it.
//!
//! Everything in this crate is `no_std` (with `alloc`): scalars are exact
//! rationals, words are packed bit strings, and numeric evaluation goes
//! through `libm`-backed complex arithmetic.
//!
//! Module map:
//! - [`words`]: letters, words, Y-words, compositions, Lyndon words and the
//!   projectors between the X and Y encodings.
//! - [`shuffle`]: concatenation, shuffle, stuffle, the unshuffle coproduct,
//!   residuals and the exchangeability test.
//! - [`star`]: the algebra spanned by `w ⧢ (a0 x0)* ⧢ (a1 x1)*`.
//! - [`rewrite`]: normal forms modulo `x0*⧢x1* − x1* + 1` on the Laurent
//!   subalgebra.
//! - [`polylog`]: the function side (symbolic functions, θ/ι operators,
//!   harmonic sums, numeric evaluation, negative-index closed forms).

#![cfg_attr(not(test), no_std)]
#![warn(missing_docs)]

extern crate alloc;

mod error;
mod lincomb;
pub mod polylog;
pub mod rewrite;
pub mod scalar;
pub mod shuffle;
pub mod star;
pub mod words;

pub use error::{Error, Result};
pub use lincomb::LinComb;
pub use scalar::Rational;
pub use shuffle::{NCPoly, YPoly};
pub use star::{StarSeries, StarTerm};
pub use words::{Composition, Letter, Polarity, Word, YWord};
