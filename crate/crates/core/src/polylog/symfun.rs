//! Symbolic functions `Σ c · z^k (1−z)^{−l} Li_w(z)`.
//!
//! Storage is canonical: every monomial has `k = 0` or `l = 0`. Mixed powers
//! `z^k (1−z)^{−l}` are split by partial fractions on construction, so two
//! [`SymFun`]s are equal as functions exactly when they are equal as values
//! (the `Li_w` are linearly independent over `ℚ[z, z^{-1}, (1−z)^{-1}]`).
//! Products of polylogarithms are stored through `Li_u Li_v = Li_{u⧢v}`.

use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::lincomb::LinComb;
use crate::scalar::{binomial, int, Rational};
use crate::shuffle::shuffle_words;
use crate::words::{Letter, Word};

/// `z^k (1−z)^{−l} Li_w`. Field order gives the canonical term order
/// (word first, then exponents).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SymMonomial {
    /// Polylogarithm index.
    pub word: Word,
    /// Power of `z`.
    pub k: i64,
    /// Power of `(1−z)^{−1}`.
    pub l: u32,
}

impl SymMonomial {
    /// `z^k (1−z)^{−l} Li_w`.
    pub fn new(k: i64, l: u32, word: Word) -> SymMonomial {
        SymMonomial { word, k, l }
    }

    /// Whether `k = 0` or `l = 0`.
    pub fn is_pure(&self) -> bool {
        self.k == 0 || self.l == 0
    }
}

/// A canonical symbolic function.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct SymFun(LinComb<SymMonomial>);

fn bin(n: u64, k: u64) -> Rational {
    Rational::from_integer(BigInt::from(binomial(n, k)))
}

fn sign(i: u64) -> Rational {
    if i % 2 == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// Partial fractions of `z^k (1−z)^e` into pure `z^i` and `(1−z)^{−j}` (`j ≥ 1`) terms.
pub fn partial_fractions(k: i64, e: i64) -> Vec<((i64, u32), Rational)> {
    let mut out = LinComb::<(i64, u32)>::zero();
    if e >= 0 {
        let e = e as u64;
        for i in 0..=e {
            out.add_term((k + i as i64, 0), bin(e, i) * sign(i));
        }
    } else if k == 0 {
        out.add_term((0, (-e) as u32), Rational::one());
    } else if k > 0 {
        // z^k = (1 − (1−z))^k
        let k = k as u64;
        for i in 0..=k {
            let c = bin(k, i) * sign(i);
            for (key, d) in partial_fractions(0, e + i as i64) {
                out.add_term(key, &c * d);
            }
        }
    } else {
        let a = (-k) as u64;
        let l = (-e) as u64;
        for i in 1..=a {
            out.add_term((-(i as i64), 0), bin(a + l - 1 - i, l - 1));
        }
        for j in 1..=l {
            out.add_term((0, j as u32), bin(a + l - 1 - j, a - 1));
        }
    }
    out.iter().map(|(k, c)| (*k, c.clone())).collect()
}

/// Builder for combinations of `z^k (1−z)^e Li_w` with arbitrary integer `e`.
#[derive(Default)]
pub(crate) struct Raw(pub(crate) LinComb<(i64, i64, Word)>);

impl Raw {
    pub(crate) fn add(&mut self, k: i64, e: i64, w: Word, c: Rational) {
        self.0.add_term((k, e, w), c);
    }

    pub(crate) fn finish(self) -> SymFun {
        let mut out = LinComb::zero();
        for ((k, e, w), c) in self.0.iter() {
            for ((k2, l2), d) in partial_fractions(*k, *e) {
                out.add_term(SymMonomial::new(k2, l2, *w), c * d);
            }
        }
        SymFun(out)
    }
}

impl SymFun {
    /// The zero function.
    pub fn zero() -> SymFun {
        SymFun(LinComb::zero())
    }

    /// `1_Ω`.
    pub fn one() -> SymFun {
        SymFun::li(Word::EMPTY)
    }

    /// `c · 1_Ω`.
    pub fn constant(c: Rational) -> SymFun {
        SymFun(LinComb::term(SymMonomial::new(0, 0, Word::EMPTY), c))
    }

    /// `Li_w`.
    pub fn li(w: Word) -> SymFun {
        SymFun::monomial(0, 0, w)
    }

    /// `z^k (1−z)^{−l} Li_w`, split into canonical terms.
    pub fn monomial(k: i64, l: u32, w: Word) -> SymFun {
        SymFun::mixed(k, -(l as i64), w)
    }

    /// `z^k (1−z)^e Li_w` for any integers `k`, `e`.
    pub fn mixed(k: i64, e: i64, w: Word) -> SymFun {
        let mut r = Raw::default();
        r.add(k, e, w, Rational::one());
        r.finish()
    }

    /// `λ = z/(1−z)`.
    pub fn lambda() -> SymFun {
        SymFun::monomial(1, 1, Word::EMPTY)
    }

    /// `1/λ = (1−z)/z`.
    pub fn lambda_inv() -> SymFun {
        SymFun::mixed(-1, 1, Word::EMPTY)
    }

    /// `z^k`.
    pub fn z_pow(k: i64) -> SymFun {
        SymFun::monomial(k, 0, Word::EMPTY)
    }

    /// `(1−z)^{−l}`.
    pub fn den_pow(l: u32) -> SymFun {
        SymFun::monomial(0, l, Word::EMPTY)
    }

    /// Builds from arbitrary (possibly mixed) monomials.
    pub fn from_terms<I: IntoIterator<Item = (SymMonomial, Rational)>>(terms: I) -> SymFun {
        let mut r = Raw::default();
        for (m, c) in terms {
            r.add(m.k, -(m.l as i64), m.word, c);
        }
        r.finish()
    }

    /// Canonical monomials with their coefficients.
    pub fn terms(&self) -> impl Iterator<Item = (&SymMonomial, &Rational)> {
        self.0.iter()
    }

    /// Coefficient of a canonical monomial.
    pub fn coeff(&self, m: &SymMonomial) -> Rational {
        self.0.coeff(m)
    }

    /// Number of stored monomials.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Whether this is the zero function.
    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// `c · f`.
    pub fn scale(&self, c: &Rational) -> SymFun {
        SymFun(self.0.scale(c))
    }

    /// Adds `c · z^k (1−z)^{−l} Li_w`.
    pub fn add_monomial(&mut self, m: SymMonomial, c: Rational) {
        *self += &SymFun::from_terms([(m, c)]);
    }

    /// Pointwise product.
    pub fn mul(&self, other: &SymFun) -> SymFun {
        let mut r = Raw::default();
        for (a, c) in self.terms() {
            for (b, d) in other.terms() {
                let cd = c * d;
                let e = -((a.l + b.l) as i64);
                for (w, n) in shuffle_words(&a.word, &b.word) {
                    r.add(a.k + b.k, e, w, &cd * Rational::from_integer(n.into()));
                }
            }
        }
        r.finish()
    }

    /// `f^n`.
    pub fn pow(&self, n: u32) -> SymFun {
        let mut acc = SymFun::one();
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// `d/dz`.
    pub fn d_dz(&self) -> SymFun {
        self.derivative_times(0, 0)
    }

    /// `z^a (1−z)^b · d/dz`.
    pub(crate) fn derivative_times(&self, a: i64, b: i64) -> SymFun {
        let mut r = Raw::default();
        for (m, c) in self.terms() {
            let (k, e) = (m.k + a, -(m.l as i64) + b);
            if m.k != 0 {
                r.add(k - 1, e, m.word, c * int(m.k));
            }
            if m.l != 0 {
                r.add(k, e - 1, m.word, c * int(m.l as i64));
            }
            if let Some(rest) = m.word.strip_first(Letter::X0) {
                r.add(k - 1, e, rest, c.clone());
            } else if let Some(rest) = m.word.strip_first(Letter::X1) {
                r.add(k, e - 1, rest, c.clone());
            }
        }
        r.finish()
    }

    /// Monomials whose word is not the empty word.
    pub fn has_polylogs(&self) -> bool {
        self.terms().any(|(m, _)| !m.word.is_empty())
    }
}

impl AddAssign<&SymFun> for SymFun {
    fn add_assign(&mut self, rhs: &SymFun) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&SymFun> for SymFun {
    fn sub_assign(&mut self, rhs: &SymFun) {
        self.0 -= &rhs.0;
    }
}

impl Add for &SymFun {
    type Output = SymFun;
    fn add(self, rhs: &SymFun) -> SymFun {
        SymFun(&self.0 + &rhs.0)
    }
}

impl Sub for &SymFun {
    type Output = SymFun;
    fn sub(self, rhs: &SymFun) -> SymFun {
        SymFun(&self.0 - &rhs.0)
    }
}

impl Add for SymFun {
    type Output = SymFun;
    fn add(self, rhs: SymFun) -> SymFun {
        &self + &rhs
    }
}

impl Sub for SymFun {
    type Output = SymFun;
    fn sub(self, rhs: SymFun) -> SymFun {
        &self - &rhs
    }
}

impl Neg for &SymFun {
    type Output = SymFun;
    fn neg(self) -> SymFun {
        SymFun(-&self.0)
    }
}

impl Mul for &SymFun {
    type Output = SymFun;
    fn mul(self, rhs: &SymFun) -> SymFun {
        SymFun::mul(self, rhs)
    }
}

impl fmt::Debug for SymFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Terms as `c*z^k*(1-z)^-l*Li[w]`, omitting trivial factors.
impl fmt::Display for SymFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms().enumerate() {
            let neg = c < &Rational::zero();
            let mag = if neg { -c } else { c.clone() };
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mut factors: Vec<alloc::string::String> = Vec::new();
            if m.k != 0 {
                factors.push(alloc::format!("z^{}", m.k));
            }
            if m.l != 0 {
                factors.push(alloc::format!("(1-z)^-{}", m.l));
            }
            if !m.word.is_empty() {
                factors.push(alloc::format!("Li[{}]", m.word));
            }
            if factors.is_empty() {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                write!(f, "{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

/// `θ0 = z d/dz` (`i = X0`) or `θ1 = (1−z) d/dz` (`i = X1`).
pub fn theta(i: Letter, f: &SymFun) -> SymFun {
    match i {
        Letter::X0 => f.derivative_times(1, 0),
        Letter::X1 => f.derivative_times(0, 1),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::frac;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn partial_fraction_identity_recursion() {
        // z^{-a}(1-z)^{-l} = z^{-a}(1-z)^{-(l-1)} + z^{-a+1}(1-z)^{-l}
        for a in 1..5i64 {
            for l in 1..5i64 {
                let lhs = SymFun::mixed(-a, -l, Word::EMPTY);
                let rhs = &SymFun::mixed(-a, -(l - 1), Word::EMPTY) + &SymFun::mixed(-a + 1, -l, Word::EMPTY);
                assert_eq!(lhs, rhs, "a={a} l={l}");
            }
        }
    }

    #[test]
    fn partial_fractions_positive_k() {
        // z/(1-z) = (1-z)^{-1} - 1
        let lam = SymFun::lambda();
        let expect = &SymFun::den_pow(1) - &SymFun::one();
        assert_eq!(lam, expect);
        // z^3/(1-z) = (1-z)^{-1} - 1 - z - z^2
        let f = SymFun::monomial(3, 1, Word::EMPTY);
        let g = &(&(&SymFun::den_pow(1) - &SymFun::one()) - &SymFun::z_pow(1)) - &SymFun::z_pow(2);
        assert_eq!(f, g);
    }

    #[test]
    fn pure_after_construction() {
        for k in -3..=3 {
            for e in -3..=3 {
                let f = SymFun::mixed(k, e, w("01"));
                assert!(f.terms().all(|(m, _)| m.is_pure()));
            }
        }
    }

    #[test]
    fn word_actions() {
        assert_eq!(theta(Letter::X0, &SymFun::li(w("01"))), SymFun::li(w("1")));
        assert_eq!(theta(Letter::X1, &SymFun::li(w("1"))), SymFun::one());
        let sum = &theta(Letter::X0, &SymFun::lambda()) + &theta(Letter::X1, &SymFun::lambda());
        assert_eq!(sum, SymFun::den_pow(2));
    }

    #[test]
    fn lambda_times_inverse() {
        assert_eq!(SymFun::lambda().mul(&SymFun::lambda_inv()), SymFun::one());
    }

    #[test]
    fn product_uses_shuffle() {
        // Li_x0 * Li_x1 = Li_{x0x1} + Li_{x1x0}
        let p = SymFun::li(w("0")).mul(&SymFun::li(w("1")));
        assert_eq!(p, &SymFun::li(w("01")) + &SymFun::li(w("10")));
    }

    #[test]
    fn display() {
        let f = &SymFun::lambda().scale(&frac(3, 2)) - &SymFun::monomial(-1, 0, w("1"));
        assert_eq!(f.to_string(), "-3/2 + 3/2*(1-z)^-1 - z^-1*Li[1]");
    }
}
