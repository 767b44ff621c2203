//! Floating-point evaluation inside the unit disc, off the negative real axis.

use alloc::collections::BTreeMap;
use alloc::vec;

use num_complex::Complex64;
// Float supplies powi/ln on f64 without std
#[allow(unused_imports)]
use num_traits::Float;
use num_traits::Zero;

use super::integrate::reduce_trailing_x0;
use super::symfun::SymFun;
use crate::error::{Error, Result};
use crate::scalar::{to_f64, to_i64};
use crate::star::StarSeries;
use crate::words::{Composition, Word};

/// Evaluation point and truncation control.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EvalParams {
    /// The point.
    pub z: Complex64,
    /// Stop once a term falls below `eps · (1 − |z|)`.
    pub eps: f64,
    /// Hard cap on the number of series terms.
    pub max_terms: usize,
}

impl EvalParams {
    /// Real point with default tolerance `1e-15` and `10^6` terms.
    pub fn real(x: f64) -> EvalParams {
        EvalParams::new(Complex64::new(x, 0.0))
    }

    /// Default tolerance at a complex point.
    pub fn new(z: Complex64) -> EvalParams {
        EvalParams { z, eps: 1e-15, max_terms: 1_000_000 }
    }

    /// Checks `|z| < 1`, `z ∉ (−∞, 0)`, and the tolerance.
    pub fn validate(&self) -> Result<()> {
        if !(self.eps > 0.0) {
            return Err(Error::Domain("eps must be positive"));
        }
        if !(self.z.norm() < 1.0) {
            return Err(Error::Domain("|z| must be < 1"));
        }
        if self.z.im == 0.0 && self.z.re < 0.0 {
            return Err(Error::Domain("z lies on the cut (-inf, 0]"));
        }
        Ok(())
    }

    fn at_zero(&self) -> bool {
        self.z.is_zero()
    }
}

/// `Li_s(z)` for a convergent word `u ∈ X*x1` by the nested series.
fn li_series(u: &Word, p: &EvalParams) -> Result<Complex64> {
    let s = Composition::from_word(u).expect("word ends in x1");
    let parts = s.parts();
    let r = parts.len();
    if p.at_zero() {
        return Ok(Complex64::zero());
    }
    // acc[j] = Σ_{N ≥ n_j > … > n_r > 0} Π n_i^{-s_i}, advanced one N at a time
    let mut acc = vec![0.0f64; r + 1];
    acc[r] = 1.0;
    let mut zn = Complex64::new(1.0, 0.0);
    let mut sum = Complex64::zero();
    let tol = p.eps * (1.0 - p.z.norm());
    for n in 1..=p.max_terms {
        zn *= p.z;
        let nf = n as f64;
        let coeff = acc[1] / nf.powi(parts[0] as i32);
        for j in 0..r {
            acc[j] += acc[j + 1] / nf.powi(parts[j] as i32);
        }
        let term = zn * coeff;
        sum += term;
        if n >= r && term.norm() < tol {
            return Ok(sum);
        }
    }
    Err(Error::NoConvergence(p.max_terms))
}

fn factorial_f64(n: u32) -> f64 {
    (1..=n).fold(1.0, |a, i| a * i as f64)
}

/// Numeric `Li_w(z)`, principal branch of `log`.
pub fn eval_li_word(w: &Word, p: &EvalParams) -> Result<Complex64> {
    p.validate()?;
    let mut cache = BTreeMap::new();
    eval_word_cached(w, p, &mut cache)
}

fn eval_word_cached(w: &Word, p: &EvalParams, cache: &mut BTreeMap<Word, Complex64>) -> Result<Complex64> {
    if let Some(v) = cache.get(w) {
        return Ok(*v);
    }
    let mut total = Complex64::zero();
    let log = if p.at_zero() { Complex64::zero() } else { p.z.ln() };
    for ((u, n), c) in reduce_trailing_x0(w).iter() {
        if *n > 0 && p.at_zero() {
            if u.is_empty() {
                return Err(Error::Domain("log(z) at z = 0"));
            }
            // Li_u(z) log^n z → 0 at 0 for u ∈ X*x1
            continue;
        }
        let base = if u.is_empty() { Complex64::new(1.0, 0.0) } else { li_series(u, p)? };
        let lg = log.powi(*n as i32) / factorial_f64(*n);
        total += base * lg * to_f64(c);
    }
    cache.insert(*w, total);
    Ok(total)
}

/// Numeric value of a symbolic function.
pub fn eval_symfun(f: &SymFun, p: &EvalParams) -> Result<Complex64> {
    p.validate()?;
    let one = Complex64::new(1.0, 0.0);
    let mut cache = BTreeMap::new();
    let mut total = Complex64::zero();
    for (m, c) in f.terms() {
        if m.k < 0 && p.at_zero() {
            return Err(Error::Domain("negative power of z at z = 0"));
        }
        let v = eval_word_cached(&m.word, p, &mut cache)?;
        let zk = if m.k == 0 { one } else { p.z.powi(m.k as i32) };
        let den = (one - p.z).powi(-(m.l as i32));
        total += v * zk * den * to_f64(c);
    }
    Ok(total)
}

/// `Li^(2)`: the term `(w, α0, α1)` goes to `Li_w(z) z^{α0} (1−z)^{−α1}`, principal branches.
pub fn eval_li2(s: &StarSeries, p: &EvalParams) -> Result<Complex64> {
    p.validate()?;
    let one = Complex64::new(1.0, 0.0);
    let mut cache = BTreeMap::new();
    let mut total = Complex64::zero();
    for (t, c) in s.iter() {
        let zpart = match to_i64(&t.a0) {
            Some(0) => one,
            Some(k) if p.at_zero() && k < 0 => return Err(Error::Domain("negative power of z at z = 0")),
            Some(k) => p.z.powi(k as i32),
            None if p.at_zero() => {
                if to_f64(&t.a0) > 0.0 {
                    Complex64::zero()
                } else {
                    return Err(Error::Domain("non-positive power of z at z = 0"));
                }
            }
            None => (p.z.ln() * to_f64(&t.a0)).exp(),
        };
        let dpart = match to_i64(&t.a1) {
            Some(l) => (one - p.z).powi(-l as i32),
            None => ((one - p.z).ln() * -to_f64(&t.a1)).exp(),
        };
        let v = eval_word_cached(&t.word, p, &mut cache)?;
        total += v * zpart * dpart * to_f64(c);
    }
    Ok(total)
}

/// `Li_w(1)` for a word not starting with `x1`, summed numerically by splitting
/// the path at `1/2`: `Li_w(1) = Σ_{w=uv} Li_{ũ}(1/2) Li_v(1/2)` where `ũ` is `u`
/// reversed with `x0 ↔ x1` exchanged.
pub fn polyzeta_numeric(w: &Word) -> Result<f64> {
    if w.first() == Some(crate::words::Letter::X1) {
        return Err(Error::DivergentBasepoint(1));
    }
    let p = EvalParams { z: Complex64::new(0.5, 0.0), eps: 1e-17, max_terms: 100_000 };
    let mut total = 0.0;
    // words ending in x0: at z = 1 only the log-free part survives
    for ((u, n), c) in reduce_trailing_x0(w).iter() {
        if *n != 0 {
            continue;
        }
        let mut acc = Complex64::zero();
        for i in 0..=u.len() {
            let left = u.prefix(i);
            let right = u.suffix(i);
            let dual = Word::from_letters(left.letters().rev().map(|x| match x {
                crate::words::Letter::X0 => crate::words::Letter::X1,
                crate::words::Letter::X1 => crate::words::Letter::X0,
            }))?;
            acc += eval_li_word(&dual, &p)? * eval_li_word(&right, &p)?;
        }
        total += acc.re * to_f64(c);
    }
    Ok(total)
}
