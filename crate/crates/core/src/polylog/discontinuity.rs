//! The sequences `f_n = Σ_{m≤n} log^m(z)/m!` and
//! `g_n = Σ_{1≤m≤n} (−1)^{m+1} log^m(1/(1−z))/m!`, which both tend to `z`,
//! while `ι0(f_n) → z − 1` and `ι0(g_n) → z`.

use alloc::vec::Vec;

use super::integrate::iota;
use super::numeric::{eval_symfun, EvalParams};
use super::symfun::SymFun;
use crate::error::Result;
use crate::scalar::int;
use crate::words::{Letter, Word};

/// One row of the demonstration.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DiscontinuityRow {
    /// `n`.
    pub n: usize,
    /// `f_n(z)`.
    pub f: f64,
    /// `ι0(f_n)(z)`.
    pub iota_f: f64,
    /// `g_n(z)`.
    pub g: f64,
    /// `ι0(g_n)(z)`.
    pub iota_g: f64,
}

/// Rows for `n = 1..=n_max` and the two expected limits `(z − 1, z)`.
#[derive(Clone, Debug, PartialEq)]
pub struct DiscontinuityReport {
    /// The evaluation point.
    pub z: f64,
    /// Values per `n`.
    pub rows: Vec<DiscontinuityRow>,
    /// Limit of `ι0(f_n)`, i.e. `z − 1`.
    pub limit_iota_f: f64,
    /// Limit of `ι0(g_n)`, i.e. `z`.
    pub limit_iota_g: f64,
}

/// `f_n = Σ_{m=0}^n Li_{x0^m}`.
pub fn f_seq(n: usize) -> SymFun {
    let mut f = SymFun::zero();
    for m in 0..=n {
        f += &SymFun::li(Word::power(Letter::X0, m));
    }
    f
}

/// `g_n = Σ_{m=1}^n (−1)^{m+1} Li_{x1^m}`.
pub fn g_seq(n: usize) -> SymFun {
    let mut g = SymFun::zero();
    for m in 1..=n {
        let s = if m % 2 == 1 { int(1) } else { int(-1) };
        g += &SymFun::li(Word::power(Letter::X1, m)).scale(&s);
    }
    g
}

/// Computes `ι0(f_n)`, `ι0(g_n)` symbolically and evaluates them at real `z ∈ (0, 1)`.
pub fn discontinuity_demo(n_max: usize, z: f64) -> Result<DiscontinuityReport> {
    let p = EvalParams::real(z);
    p.validate()?;
    let mut rows = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        let f = f_seq(n);
        let g = g_seq(n);
        let iota_f = iota(Letter::X0, &f)?;
        let iota_g = iota(Letter::X0, &g)?;
        rows.push(DiscontinuityRow {
            n,
            f: eval_symfun(&f, &p)?.re,
            iota_f: eval_symfun(&iota_f, &p)?.re,
            g: eval_symfun(&g, &p)?.re,
            iota_g: eval_symfun(&iota_g, &p)?.re,
        });
    }
    Ok(DiscontinuityReport { z, rows, limit_iota_f: z - 1.0, limit_iota_g: z })
}
