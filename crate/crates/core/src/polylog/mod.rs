//! Polylogarithms: symbolic functions on `z^k (1−z)^{−l} Li_w`, the operators
//! `θ0, θ1, ι0, ι1`, harmonic sums, numeric evaluation and the closed forms
//! at nonnegative indices.

mod discontinuity;
mod harmonic;
mod integrate;
mod negative;
mod numeric;
mod symfun;

pub use discontinuity::{discontinuity_demo, f_seq, g_seq, DiscontinuityReport, DiscontinuityRow};
pub use harmonic::{harmonic_sum, li_taylor, neg_taylor_coeff, stirling2};
pub use integrate::{
    antiderivative, apply_ops, apply_word_op, index_of, iota, iota_with, limit_at_one, limit_at_zero,
    reduce_trailing_x0, theta_leibniz, Constants, Op, OpKind,
};
pub use negative::{
    build_neg_series, li_neg_closed_form, li_neg_operators, li_neg_recursion, li_neg_unnormalized, li_of_laurent,
    DenPoly, Route,
};
pub use numeric::{eval_li2, eval_li_word, eval_symfun, polyzeta_numeric, EvalParams};
pub use symfun::{partial_fractions, theta, SymFun, SymMonomial};
