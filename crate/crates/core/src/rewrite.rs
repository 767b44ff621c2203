//! Rewriting modulo `𝒥 = (x0*⧢x1* − x1* + 1)` on the Laurent subalgebra
//! `ℚ⟨X⟩[x0*, (−x0)*, x1*]`.
//!
//! A monomial `w ⧢ (x0*)^{⧢k} ⧢ (x1*)^{⧢l}` with `k·l ≠ 0` is rewritten by
//! peeling one star factor:
//!
//! ```text
//! (w, k, l) → (w, k-1, l) − (w, k-1, l-1)     k ≥ 1, l ≥ 1
//! (w, k, l) → (w, k, l-1) + (w, k+1, l)       k ≤ -1, l ≥ 1
//! ```
//!
//! Both right-hand sides have measure `|k| + l` one less than the left, so
//! rewriting terminates; normal forms satisfy `k·l = 0` termwise.

use alloc::collections::BTreeMap;
use alloc::string::ToString;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::lincomb::LinComb;
use crate::scalar::{to_i64, Rational};
use crate::star::{StarSeries, StarTerm};
use crate::words::Word;

/// `w ⧢ (x0*)^{⧢k} ⧢ (x1*)^{⧢l}` with `k ∈ ℤ`, `l ∈ ℕ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LaurentMonomial {
    /// Polynomial factor.
    pub word: Word,
    /// Exponent of `x0*` (negative powers are powers of `(−x0)*`).
    pub k: i64,
    /// Exponent of `x1*`.
    pub l: u64,
}

impl LaurentMonomial {
    /// Whether the monomial is already normal (`k·l = 0`).
    pub fn is_normal(&self) -> bool {
        self.k == 0 || self.l == 0
    }

    /// `|k| + l`.
    pub fn measure(&self) -> u64 {
        self.k.unsigned_abs() + self.l
    }

    /// One rewriting step; `None` when already normal.
    pub fn rewrite(&self) -> Option<[(LaurentMonomial, i64); 2]> {
        if self.is_normal() {
            return None;
        }
        let w = self.word;
        let (k, l) = (self.k, self.l);
        Some(if k > 0 {
            [
                (LaurentMonomial { word: w, k: k - 1, l }, 1),
                (LaurentMonomial { word: w, k: k - 1, l: l - 1 }, -1),
            ]
        } else {
            [
                (LaurentMonomial { word: w, k, l: l - 1 }, 1),
                (LaurentMonomial { word: w, k: k + 1, l }, 1),
            ]
        })
    }

    /// The corresponding star-basis term `(w, k, l)`.
    pub fn to_star_term(&self) -> StarTerm {
        StarTerm::new(
            self.word,
            Rational::from_integer(BigInt::from(self.k)),
            Rational::from_integer(BigInt::from(self.l)),
        )
    }

    /// Reads a star-basis term, failing outside `ℤ × ℕ`.
    pub fn from_star_term(t: &StarTerm) -> Result<LaurentMonomial> {
        let bad = || Error::NotLaurent(t.a0.to_string(), t.a1.to_string());
        let k = to_i64(&t.a0).ok_or_else(bad)?;
        let l = to_i64(&t.a1).filter(|&l| l >= 0).ok_or_else(bad)?;
        Ok(LaurentMonomial { word: t.word, k, l: l as u64 })
    }
}

/// A Laurent element as a combination of [`LaurentMonomial`]s.
pub type LaurentSeries = LinComb<LaurentMonomial>;

/// Converts a star series, checking Laurent membership.
pub fn to_laurent(s: &StarSeries) -> Result<LaurentSeries> {
    let mut out = LaurentSeries::zero();
    for (t, c) in s.iter() {
        out.add_term(LaurentMonomial::from_star_term(t)?, c.clone());
    }
    Ok(out)
}

/// Back to the star basis.
pub fn from_laurent(s: &LaurentSeries) -> StarSeries {
    s.map_keys(LaurentMonomial::to_star_term)
}

/// Counters collected while rewriting.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct RewriteStats {
    /// Rewriting steps performed.
    pub steps: u64,
    /// Upper bound on steps from the decreasing measure: a monomial of
    /// measure `m` spawns a binary tree of depth at most `m`.
    pub bound: u64,
}

/// Rewrites to normal form, letting `choose` pick which non-normal monomial
/// to rewrite next (it receives them in canonical order and returns an index).
pub fn normal_form_with(
    s: &StarSeries,
    mut choose: impl FnMut(&[LaurentMonomial]) -> usize,
) -> Result<(StarSeries, RewriteStats)> {
    let mut cur = to_laurent(s)?;
    let mut stats = RewriteStats::default();
    stats.bound = cur
        .keys()
        .filter(|m| !m.is_normal())
        .map(|m| (1u64 << m.measure().min(62)) - 1)
        .fold(0u64, u64::saturating_add);
    loop {
        let pending: Vec<LaurentMonomial> = cur.keys().filter(|m| !m.is_normal()).copied().collect();
        if pending.is_empty() {
            break;
        }
        let pick = pending[choose(&pending).min(pending.len() - 1)];
        let c = cur.coeff(&pick);
        cur.add_term(pick, -c.clone());
        for (m, sign) in pick.rewrite().expect("picked a non-normal monomial") {
            cur.add_term(m, &c * Rational::from_integer(sign.into()));
        }
        stats.steps += 1;
    }
    Ok((from_laurent(&cur), stats))
}

/// Normal form modulo `𝒥`, rewriting the monomial of largest `|k| + l` first
/// (ties broken by canonical order).
///
/// All monomials of the result satisfy `k·l = 0`. Since their images under
/// the polylogarithm morphism are linearly independent, the result does not
/// depend on the rewriting order.
pub fn normal_form(s: &StarSeries) -> Result<StarSeries> {
    Ok(normal_form_with(s, largest_measure_first)?.0)
}

/// Default strategy for [`normal_form_with`].
pub fn largest_measure_first(pending: &[LaurentMonomial]) -> usize {
    let mut best = 0;
    for (i, m) in pending.iter().enumerate() {
        if m.measure() > pending[best].measure() {
            best = i;
        }
    }
    best
}

/// Normal form through a memoized recursion on the exponent pair `(k, l)`,
/// shared by all monomials regardless of their word factor. Same rules as
/// [`normal_form`], no worklist.
pub fn normal_form_memo(s: &StarSeries) -> Result<StarSeries> {
    let lin = to_laurent(s)?;
    let mut memo: BTreeMap<(i64, u64), Vec<((i64, u64), Rational)>> = BTreeMap::new();
    let mut out = LaurentSeries::zero();
    for (m, c) in lin.iter() {
        for ((k, l), d) in reduce_exponents(m.k, m.l, &mut memo) {
            out.add_term(LaurentMonomial { word: m.word, k, l }, c * d);
        }
    }
    Ok(from_laurent(&out))
}

fn reduce_exponents(
    k: i64,
    l: u64,
    memo: &mut BTreeMap<(i64, u64), Vec<((i64, u64), Rational)>>,
) -> Vec<((i64, u64), Rational)> {
    if k == 0 || l == 0 {
        return alloc::vec![((k, l), Rational::one())];
    }
    if let Some(v) = memo.get(&(k, l)) {
        return v.clone();
    }
    let probe = LaurentMonomial { word: Word::EMPTY, k, l };
    let mut acc: BTreeMap<(i64, u64), Rational> = BTreeMap::new();
    for (m, sign) in probe.rewrite().expect("non-normal") {
        for (key, d) in reduce_exponents(m.k, m.l, memo) {
            *acc.entry(key).or_insert_with(Rational::zero) += d * Rational::from_integer(sign.into());
        }
    }
    let v: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
    memo.insert((k, l), v.clone());
    v
}

/// Whether `s` lies in `ker(Li^(1))`, i.e. its normal form vanishes.
pub fn kernel_member(s: &StarSeries) -> Result<bool> {
    Ok(normal_form(s)?.is_zero())
}

/// The generator `x0*⧢x1* − x1* + 1` of `𝒥`.
pub fn kernel_generator() -> StarSeries {
    let mut g = StarSeries::zero();
    g.add_term(LaurentMonomial { word: Word::EMPTY, k: 1, l: 1 }.to_star_term(), Rational::one());
    g.add_term(LaurentMonomial { word: Word::EMPTY, k: 0, l: 1 }.to_star_term(), -Rational::one());
    g.add_term(LaurentMonomial { word: Word::EMPTY, k: 0, l: 0 }.to_star_term(), Rational::one());
    g
}
