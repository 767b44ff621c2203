//! The algebra `ℚ⟨X⟩ ⧢ ℚ^rat⟨⟨x0⟩⟩ ⧢ ℚ^rat⟨⟨x1⟩⟩` on its basis
//! `w ⧢ (a0 x0)* ⧢ (a1 x1)*`.
//!
//! A basis element is a [`StarTerm`] `(w, a0, a1)`. The plane star
//! `(a0 x0 + a1 x1)*` is the term `(ε, a0, a1)`: the identity
//! `(a0 x0 + a1 x1)* = (a0 x0)* ⧢ (a1 x1)*` and the monoid law
//! `(a0 x0 + a1 x1)* ⧢ (b0 x0 + b1 x1)* = ((a0+b0) x0 + (a1+b1) x1)*` are
//! built into the representation, and `(x0*)^{⧢k}` is stored as `(k x0)*`.

use core::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::lincomb::LinComb;
use crate::scalar::{is_integer, pow, Rational};
use crate::shuffle::{shuffle_words, NCPoly};
use crate::words::{Letter, Word};

/// Basis element `w ⧢ (a0 x0)* ⧢ (a1 x1)*`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StarTerm {
    /// Polynomial factor.
    pub word: Word,
    /// Parameter of the `x0` star.
    pub a0: Rational,
    /// Parameter of the `x1` star.
    pub a1: Rational,
}

impl StarTerm {
    /// `(w, a0, a1)`.
    pub fn new(word: Word, a0: Rational, a1: Rational) -> StarTerm {
        StarTerm { word, a0, a1 }
    }

    /// `(w, 0, 0)`, a plain word.
    pub fn word(word: Word) -> StarTerm {
        StarTerm { word, a0: Rational::zero(), a1: Rational::zero() }
    }

    /// Whether both star parameters vanish.
    pub fn is_polynomial(&self) -> bool {
        self.a0.is_zero() && self.a1.is_zero()
    }

    /// Whether `a0 ∈ ℤ` and `a1 ∈ ℕ`.
    pub fn is_laurent(&self) -> bool {
        is_integer(&self.a0) && is_integer(&self.a1) && self.a1 >= Rational::zero()
    }

    /// Parameter attached to letter `x`.
    pub fn param(&self, x: Letter) -> &Rational {
        match x {
            Letter::X0 => &self.a0,
            Letter::X1 => &self.a1,
        }
    }
}

impl fmt::Debug for StarTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}, {}, {})", self.word, self.a0, self.a1)
    }
}

/// Finite combination of [`StarTerm`]s.
pub type StarSeries = LinComb<StarTerm>;

/// Inclusion `ℚ⟨X⟩ → StarSeries`.
pub fn embed(p: &NCPoly) -> StarSeries {
    p.map_keys(|w| StarTerm::word(*w))
}

/// `(a0 x0 + a1 x1)*`.
pub fn plane_star(a0: Rational, a1: Rational) -> StarSeries {
    StarSeries::basis(StarTerm::new(Word::EMPTY, a0, a1))
}

/// The constant series `c · 1_{X*}`.
pub fn constant(c: Rational) -> StarSeries {
    StarSeries::term(StarTerm::word(Word::EMPTY), c)
}

/// Kleene star of a plane element `a0 x0 + a1 x1`.
pub fn star(s: &StarSeries) -> Result<StarSeries> {
    let mut a0 = Rational::zero();
    let mut a1 = Rational::zero();
    let mut constant = false;
    let mut other = false;
    for (t, c) in s.iter() {
        if !t.is_polynomial() {
            other = true;
        } else if t.word.is_empty() {
            constant = true;
        } else if t.word.len() == 1 {
            match t.word.at(0) {
                Letter::X0 => a0 = c.clone(),
                Letter::X1 => a1 = c.clone(),
            }
        } else {
            other = true;
        }
    }
    if constant {
        return Err(Error::StarUndefined);
    }
    if other {
        return Err(Error::StarNotRepresentable);
    }
    Ok(plane_star(a0, a1))
}

/// Shuffle product on the star basis:
/// `(u, α) ⧢ (v, β) = Σ_{w ∈ u⧢v} (w, α + β)`.
pub fn shuffle_star(s: &StarSeries, t: &StarSeries) -> StarSeries {
    let mut out = StarSeries::zero();
    for (x, a) in s.iter() {
        for (y, b) in t.iter() {
            let a0 = &x.a0 + &y.a0;
            let a1 = &x.a1 + &y.a1;
            let c = a * b;
            for (w, n) in shuffle_words(&x.word, &y.word) {
                let k = Rational::from_integer(n.into());
                out.add_term(StarTerm::new(w, a0.clone(), a1.clone()), &c * k);
            }
        }
    }
    out
}

/// `s^{⧢n}`.
pub fn shuffle_star_pow(s: &StarSeries, n: usize) -> StarSeries {
    let mut acc = constant(Rational::one());
    for _ in 0..n {
        acc = shuffle_star(&acc, s);
    }
    acc
}

/// The left shift derivation `δ^l_x`, `⟨δ^l_x(S) | w⟩ = ⟨S | xw⟩`.
///
/// Leibniz across the three factors of a basis term: the word factor loses a
/// leading `x` (or vanishes) and the `x`-star factor is an eigenvector with
/// eigenvalue equal to its parameter.
pub fn delta_left(x: Letter, s: &StarSeries) -> StarSeries {
    let mut out = StarSeries::zero();
    for (t, c) in s.iter() {
        if let Some(rest) = t.word.strip_first(x) {
            out.add_term(StarTerm::new(rest, t.a0.clone(), t.a1.clone()), c.clone());
        }
        let eig = t.param(x);
        if !eig.is_zero() {
            out.add_term(t.clone(), c * eig);
        }
    }
    out
}

/// Coefficients of `s` on all words of length `≤ n`.
///
/// Uses `⟨(a0 x0)* ⧢ (a1 x1)* | v⟩ = a0^{|v|_{x0}} a1^{|v|_{x1}}` for the
/// star factor, shuffled with the word factor.
pub fn expand(s: &StarSeries, n: usize) -> NCPoly {
    let mut out = NCPoly::zero();
    for (t, c) in s.iter() {
        if t.word.len() > n {
            continue;
        }
        for v in Word::all_up_to(n - t.word.len()) {
            let (d0, d1) = v.bidegree();
            let coeff = pow(&t.a0, d0 as i64) * pow(&t.a1, d1 as i64);
            if coeff.is_zero() {
                continue;
            }
            let c = c * coeff;
            for (w, k) in shuffle_words(&t.word, &v) {
                out.add_term(w, &c * Rational::from_integer(k.into()));
            }
        }
    }
    out
}

/// Whether every term lies in the Laurent subalgebra (`a0 ∈ ℤ`, `a1 ∈ ℕ`).
pub fn is_laurent(s: &StarSeries) -> bool {
    s.keys().all(StarTerm::is_laurent)
}

/// Canonical text form: `coeff*body` terms joined by ` + ` / ` - `, where a
/// body is `w"…"`, `star(a0,a1)` or `w"…" # star(a0,a1)`.
pub struct Pretty<'a>(pub &'a StarSeries);

impl fmt::Display for Pretty<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_zero() {
            return f.write_str("0");
        }
        for (i, (t, c)) in self.0.iter().enumerate() {
            let negative = *c < Rational::zero();
            let mag = if negative { -c } else { c.clone() };
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let body = match (t.word.is_empty(), t.is_polynomial()) {
                (true, true) => None,
                (false, true) => Some(alloc::format!("w\"{}\"", t.word)),
                (true, false) => Some(alloc::format!("star({},{})", t.a0, t.a1)),
                (false, false) => Some(alloc::format!("w\"{}\" # star({},{})", t.word, t.a0, t.a1)),
            };
            match body {
                None => write!(f, "{mag}")?,
                Some(b) if mag.is_one() => f.write_str(&b)?,
                Some(b) => write!(f, "{mag}*{b}")?,
            }
        }
        Ok(())
    }
}
