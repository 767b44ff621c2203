//! Random instance generators shared by the integration tests.

#![allow(dead_code)]

use polystar::polylog::{SymFun, SymMonomial};
use polystar::rewrite::{from_laurent, LaurentMonomial, LaurentSeries};
use polystar::scalar::frac;
use polystar::{Letter, NCPoly, Rational, StarSeries, Word, YPoly, YWord};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn word(s: &str) -> Word {
    s.parse().unwrap()
}

pub fn random_word(rng: &mut impl Rng, max_len: usize) -> Word {
    let n = rng.gen_range(0..=max_len);
    Word::from_letters((0..n).map(|_| if rng.gen() { Letter::X1 } else { Letter::X0 })).unwrap()
}

pub fn random_rational(rng: &mut impl Rng) -> Rational {
    let p = rng.gen_range(-9..=9);
    let q = rng.gen_range(1..=5);
    frac(if p == 0 { 1 } else { p }, q)
}

pub fn random_poly(rng: &mut impl Rng, terms: usize, max_len: usize) -> NCPoly {
    let mut p = NCPoly::zero();
    for _ in 0..terms {
        p.add_term(random_word(rng, max_len), random_rational(rng));
    }
    p
}

pub fn random_ypoly(rng: &mut impl Rng, terms: usize, max_len: usize, max_index: u32) -> YPoly {
    let mut p = YPoly::zero();
    for _ in 0..terms {
        let n = rng.gen_range(0..=max_len);
        let w = YWord((0..n).map(|_| rng.gen_range(1..=max_index)).collect());
        p.add_term(w, random_rational(rng));
    }
    p
}

/// Laurent element with `|k| ≤ 3`, `l ≤ 3`, `|w| ≤ 3`.
pub fn random_laurent(rng: &mut impl Rng) -> StarSeries {
    let mut s = LaurentSeries::zero();
    for _ in 0..rng.gen_range(1..=4) {
        let m = LaurentMonomial { word: random_word(rng, 3), k: rng.gen_range(-3..=3), l: rng.gen_range(0..=3) };
        s.add_term(m, random_rational(rng));
    }
    from_laurent(&s)
}

pub fn random_monomial(rng: &mut impl Rng, max_len: usize) -> SymMonomial {
    let word = random_word(rng, max_len);
    if rng.gen() {
        SymMonomial::new(rng.gen_range(-2..=2), 0, word)
    } else {
        SymMonomial::new(0, rng.gen_range(0..=2), word)
    }
}

/// Sum of up to four monomials, mixed powers allowed before canonicalization.
pub fn random_symfun(rng: &mut impl Rng) -> SymFun {
    let terms: Vec<_> = (0..rng.gen_range(1..=4))
        .map(|_| {
            let m = SymMonomial::new(rng.gen_range(-2..=2), rng.gen_range(0..=2), random_word(rng, 3));
            (m, random_rational(rng))
        })
        .collect();
    SymFun::from_terms(terms)
}

pub mod strategies {
    use super::*;
    use proptest::prelude::*;

    pub fn word(max_len: usize) -> impl Strategy<Value = Word> {
        proptest::collection::vec(any::<bool>(), 0..=max_len).prop_map(|bits| {
            Word::from_letters(bits.into_iter().map(|b| if b { Letter::X1 } else { Letter::X0 })).unwrap()
        })
    }

    pub fn rational() -> impl Strategy<Value = Rational> {
        (-9i64..=9, 1i64..=5).prop_map(|(p, q)| frac(p, q))
    }

    pub fn poly(terms: usize, max_len: usize) -> impl Strategy<Value = NCPoly> {
        proptest::collection::vec((word(max_len), rational()), 0..=terms).prop_map(|ts| ts.into_iter().collect())
    }

    pub fn yword(max_len: usize, max_index: u32) -> impl Strategy<Value = YWord> {
        proptest::collection::vec(1..=max_index, 0..=max_len).prop_map(YWord)
    }
}
