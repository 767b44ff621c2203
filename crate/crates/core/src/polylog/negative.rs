//! Closed forms of `Li^-_s(z) = Σ_{n1>…>nr>0} n1^{s1} … nr^{sr} z^{n1}` as
//! polynomials in `u = (1−z)^{−1}`.
//!
//! Four routes are offered. The recursion applies
//! `Li^-_{y_s v} = θ0^s(λ · Li^-_v)` starting from `Li^-_ε = 1`. The routes
//! `T`, `R` and `F` assemble a star series whose image under `Li^(2)` is
//! `Li^-_s`: with `K = s1 + … + sr` they sum, over `k1, …, k_{r−1}`,
//!
//! ```text
//! C(s1, k1) C(s1+s2−k1, k2) … C(s1+…+s_{r−1}−k1−…−k_{r−2}, k_{r−1})
//!     · G_{k1} ⧢ … ⧢ G_{k_{r−1}} ⧢ G_{K − k1 − … − k_{r−1}}
//! ```
//!
//! where `G_0` is the series of `λ` and `G_k` the series of `θ0^k λ`,
//! `(1−z)^{−1} Σ_j S2(k, j) j! λ^j`. The last index is pinned because
//! `θ0^m(1) = 0` for `m > 0`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Zero};

use super::harmonic::stirling2;
use super::symfun::{theta, SymFun};
use crate::error::{Error, Result};
use crate::rewrite::to_laurent;
use crate::scalar::{binomial_q, factorial, int, Rational};
use crate::star::{constant, plane_star, shuffle_star, StarSeries};
use crate::words::{Composition, Letter};

/// Construction route for `Li^-`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Route {
    /// Exchangeable series built from `(x0+x1)*`.
    T,
    /// Exchangeable series built from `x0* ⧢ x1*`.
    R,
    /// Series on `x1` built from `x1* − 1`.
    F,
    /// `θ0`-recursion on symbolic functions.
    Recursion,
}

impl Route {
    /// All routes.
    pub const ALL: [Route; 4] = [Route::T, Route::R, Route::F, Route::Recursion];

    /// Short name (`T`, `R`, `F`, `rec`).
    pub fn name(self) -> &'static str {
        match self {
            Route::T => "T",
            Route::R => "R",
            Route::F => "F",
            Route::Recursion => "rec",
        }
    }
}

impl core::str::FromStr for Route {
    type Err = Error;
    fn from_str(s: &str) -> Result<Route> {
        match s {
            "T" | "t" => Ok(Route::T),
            "R" | "r" => Ok(Route::R),
            "F" | "f" => Ok(Route::F),
            "rec" | "recursion" => Ok(Route::Recursion),
            _ => Err(Error::InvalidComposition(alloc::format!("unknown route {s}"))),
        }
    }
}

/// `Σ_j c_j u^j` with `u = (1−z)^{−1}`; no trailing zero coefficients.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct DenPoly {
    coeffs: Vec<Rational>,
}

impl DenPoly {
    /// From coefficients of `u^0, u^1, …`.
    pub fn new(mut coeffs: Vec<Rational>) -> DenPoly {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        DenPoly { coeffs }
    }

    /// Coefficients of `u^0..=u^deg`.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Degree in `u`, `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Value at `z = 0`, where `u = 1`.
    pub fn value_at_zero(&self) -> Rational {
        self.coeffs.iter().fold(Rational::zero(), |a, c| a + c)
    }

    /// Coefficient of `z^n` in the Taylor expansion, using
    /// `u^j = Σ_n C(n+j−1, j−1) z^n` for `j ≥ 1`.
    pub fn taylor_coeff(&self, n: u64) -> Rational {
        let mut acc = Rational::zero();
        for (j, c) in self.coeffs.iter().enumerate() {
            if j == 0 {
                if n == 0 {
                    acc += c;
                }
            } else {
                acc += c * binomial_q(n + j as u64 - 1, j as u64 - 1);
            }
        }
        acc
    }

    /// Numeric value.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        let u = Complex64::new(1.0, 0.0) / (Complex64::new(1.0, 0.0) - z);
        let mut acc = Complex64::new(0.0, 0.0);
        for c in self.coeffs.iter().rev() {
            acc = acc * u + crate::scalar::to_f64(c);
        }
        acc
    }

    /// As a symbolic function.
    pub fn to_symfun(&self) -> SymFun {
        let mut f = SymFun::zero();
        for (j, c) in self.coeffs.iter().enumerate() {
            f += &SymFun::den_pow(j as u32).scale(c);
        }
        f
    }

    /// Reads a symbolic function lying in `ℚ[(1−z)^{−1}]`.
    pub fn from_symfun(f: &SymFun) -> Result<DenPoly> {
        let mut coeffs = Vec::new();
        for (m, c) in f.terms() {
            if m.k != 0 || !m.word.is_empty() {
                return Err(Error::NotRepresentable("not a polynomial in 1/(1-z)"));
            }
            let j = m.l as usize;
            if coeffs.len() <= j {
                coeffs.resize(j + 1, Rational::zero());
            }
            coeffs[j] += c;
        }
        Ok(DenPoly::new(coeffs))
    }
}

impl fmt::Debug for DenPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// `c0 + c1*u + c2*u^2 …` with `u = 1/(1-z)`, zero terms omitted.
impl fmt::Display for DenPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = *c < Rational::zero();
            let mag = if neg { -c } else { c.clone() };
            match (first, neg) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            match j {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if j == 1 {
                        f.write_str("(1-z)^-1")?;
                    } else {
                        write!(f, "(1-z)^-{j}")?;
                    }
                }
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// The series `G_k` of a route (`θ0^k λ`), `k ≥ 0`.
fn route_block(route: Route, k: u32) -> Result<StarSeries> {
    let base = match route {
        Route::T => plane_star(int(1), int(1)),
        Route::R => shuffle_star(&plane_star(int(1), int(0)), &plane_star(int(0), int(1))),
        Route::F => &plane_star(int(0), int(1)) - &constant(int(1)),
        Route::Recursion => return Err(Error::NoSeriesForm("rec")),
    };
    if k == 0 {
        return Ok(base);
    }
    let mut sum = StarSeries::zero();
    let mut power = constant(int(1));
    for j in 1..=k {
        power = shuffle_star(&power, &base);
        let c = Rational::from_integer(BigInt::from(stirling2(k, j) * factorial(j as u64)));
        sum.add_scaled(&power, &c);
    }
    Ok(shuffle_star(&plane_star(int(0), int(1)), &sum))
}

/// Star series of `Li^-_s` for the routes `T`, `R`, `F`.
pub fn build_neg_series(s: &Composition, route: Route) -> Result<StarSeries> {
    let parts = s.parts();
    if parts.is_empty() {
        return Ok(constant(int(1)));
    }
    let total: u32 = parts.iter().sum();
    let mut blocks: Vec<StarSeries> = Vec::with_capacity(total as usize + 1);
    for k in 0..=total {
        blocks.push(route_block(route, k)?);
    }
    let mut out = StarSeries::zero();
    // state: (budget carried into the next index, coefficient, product so far)
    let mut frontier = vec![(0u32, Rational::one(), constant(int(1)))];
    for (i, &si) in parts.iter().enumerate() {
        let last = i + 1 == parts.len();
        let mut next = Vec::new();
        for (carry, c, acc) in frontier {
            let avail = carry + si;
            if last {
                out.add_scaled(&shuffle_star(&acc, &blocks[avail as usize]), &c);
                continue;
            }
            for k in 0..=avail {
                let c2 = &c * binomial_q(avail as u64, k as u64);
                next.push((avail - k, c2, shuffle_star(&acc, &blocks[k as usize])));
            }
        }
        frontier = next;
    }
    Ok(out)
}

/// `Li^(2)` image of a Laurent star series as a symbolic function.
pub fn li_of_laurent(s: &StarSeries) -> Result<SymFun> {
    let lin = to_laurent(s)?;
    let mut f = SymFun::zero();
    for (m, c) in lin.iter() {
        let g = SymFun::monomial(m.k, m.l as u32, m.word);
        f += &g.scale(c);
    }
    Ok(f)
}

/// `Li^-_s` by the recursion `Li^-_{y_s v} = θ0^s(λ · Li^-_v)`.
pub fn li_neg_recursion(s: &Composition) -> SymFun {
    let lambda = SymFun::lambda();
    let mut f = SymFun::one();
    for &si in s.parts().iter().rev() {
        f = lambda.mul(&f);
        for _ in 0..si {
            f = theta(Letter::X0, &f);
        }
    }
    f
}

/// Closed form before the constant normalization.
pub fn li_neg_unnormalized(s: &Composition, route: Route) -> Result<DenPoly> {
    let f = match route {
        Route::Recursion => li_neg_recursion(s),
        _ => li_of_laurent(&build_neg_series(s, route)?)?,
    };
    DenPoly::from_symfun(&f)
}

/// `Li^-_s` as a polynomial in `(1−z)^{−1}`, normalized to vanish at `z = 0`
/// (for nonempty `s`).
pub fn li_neg_closed_form(s: &Composition, route: Route) -> Result<DenPoly> {
    let p = li_neg_unnormalized(s, route)?;
    if s.depth() == 0 {
        return Ok(p);
    }
    let c0 = p.value_at_zero();
    let mut coeffs = p.coeffs().to_vec();
    if coeffs.is_empty() {
        coeffs.push(Rational::zero());
    }
    coeffs[0] -= c0;
    Ok(DenPoly::new(coeffs))
}

/// `Li^-_u` through `Θ`-style operators: `(θ0^{t1+1} ι1 … θ0^{tr+1} ι1) 1_Ω`.
pub fn li_neg_operators(s: &Composition) -> Result<SymFun> {
    use super::integrate::{apply_ops, Op};
    let mut ops = Vec::new();
    for &t in s.parts() {
        for _ in 0..=t {
            ops.push(Op::Theta(Letter::X0));
        }
        ops.push(Op::Iota(Letter::X1));
    }
    apply_ops(&ops, &SymFun::one())
}

#[cfg(test)]
mod tests {
    use super::*;
    use super::super::harmonic::neg_taylor_coeff;

    fn dp(c: &[i64]) -> DenPoly {
        DenPoly::new(c.iter().map(|&x| int(x)).collect())
    }

    #[test]
    fn pinned_closed_forms() {
        let nn = Composition::nonneg;
        for route in Route::ALL {
            assert_eq!(li_neg_closed_form(&nn(&[0]), route).unwrap(), dp(&[-1, 1]), "{route:?}");
            assert_eq!(li_neg_closed_form(&nn(&[0, 0]), route).unwrap(), dp(&[1, -2, 1]));
            assert_eq!(li_neg_closed_form(&nn(&[1]), route).unwrap(), dp(&[0, -1, 1]));
            assert_eq!(li_neg_closed_form(&nn(&[2]), route).unwrap(), dp(&[0, 1, -3, 2]));
        }
    }

    #[test]
    fn series_examples() {
        let nn = Composition::nonneg;
        let x1s = plane_star(int(0), int(1));
        assert_eq!(build_neg_series(&nn(&[0]), Route::F).unwrap(), &x1s - &constant(int(1)));
        assert_eq!(build_neg_series(&nn(&[0]), Route::T).unwrap(), plane_star(int(1), int(1)));
        let f1 = shuffle_star(&x1s, &(&x1s - &constant(int(1))));
        assert_eq!(build_neg_series(&nn(&[1]), Route::F).unwrap(), f1);
        assert!(build_neg_series(&nn(&[1]), Route::Recursion).is_err());
    }

    #[test]
    fn normalization_is_a_no_op() {
        for s in Composition::enumerate(crate::words::Polarity::NonNegative, 4, 3) {
            for route in Route::ALL {
                let p = li_neg_unnormalized(&s, route).unwrap();
                assert!(p.value_at_zero().is_zero(), "{s} {route:?}");
            }
        }
    }

    #[test]
    fn taylor_matches_oracle() {
        for s in Composition::enumerate(crate::words::Polarity::NonNegative, 4, 3) {
            let p = li_neg_closed_form(&s, Route::Recursion).unwrap();
            for n in 0..=15 {
                assert_eq!(p.taylor_coeff(n), neg_taylor_coeff(&s, n), "{s} N={n}");
            }
        }
    }

    #[test]
    fn operator_route_agrees() {
        for s in Composition::enumerate(crate::words::Polarity::NonNegative, 3, 2) {
            let f = li_neg_operators(&s).unwrap();
            assert_eq!(f, li_neg_recursion(&s), "{s}");
        }
    }

    #[test]
    fn display() {
        assert_eq!(dp(&[0, 1, -3, 2]).to_string(), "(1-z)^-1 - 3*(1-z)^-2 + 2*(1-z)^-3");
        assert_eq!(dp(&[-1, 1]).to_string(), "-1 + (1-z)^-1");
        assert_eq!(DenPoly::default().to_string(), "0");
    }
}
