//! Noncommutative polynomials over `X` and `Y` with their products.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::lincomb::LinComb;
use crate::scalar::{binomial, Rational};
use crate::words::{Letter, Word, YWord};

/// `ℚ⟨X⟩`: finite map from words to rationals.
pub type NCPoly = LinComb<Word>;

/// `ℚ⟨Y⟩`: finite map from Y-words to rationals.
pub type YPoly = LinComb<YWord>;

/// Integer multiplicities of words, used inside the product kernels.
type Counts<K> = BTreeMap<K, u128>;

fn from_counts<K: Ord + Clone>(counts: &Counts<K>, c: &Rational, out: &mut LinComb<K>) {
    for (k, &n) in counts {
        out.add_term(k.clone(), c * Rational::from_integer(BigInt::from(n)));
    }
}

/// `⟨p | q⟩ = Σ_w ⟨p|w⟩⟨q|w⟩`.
pub fn pairing<K: Ord + Clone>(p: &LinComb<K>, q: &LinComb<K>) -> Rational {
    let (small, big) = if p.len() <= q.len() { (p, q) } else { (q, p) };
    small.iter().fold(Rational::zero(), |acc, (k, c)| acc + c * big.coeff(k))
}

/// Concatenation product, the bilinear extension of `(u, v) ↦ uv`.
pub fn conc(p: &NCPoly, q: &NCPoly) -> NCPoly {
    let mut out = NCPoly::zero();
    for (u, a) in p.iter() {
        for (v, b) in q.iter() {
            out.add_term(u.conc(v), a * b);
        }
    }
    out
}

/// Concatenation of Y-polynomials.
pub fn conc_y(p: &YPoly, q: &YPoly) -> YPoly {
    let mut out = YPoly::zero();
    for (u, a) in p.iter() {
        for (v, b) in q.iter() {
            let mut w = u.0.clone();
            w.extend_from_slice(&v.0);
            out.add_term(YWord(w), a * b);
        }
    }
    out
}

/// Shuffle of two words, as multiplicities.
///
/// Table over prefix pairs: `S(i, j) = S(i-1, j)·u_i + S(i, j-1)·v_j`,
/// which is the recursion `ua ⧢ vb = (u ⧢ vb)a + (ua ⧢ v)b` with every
/// subproblem computed once. Multiplicities are bounded by `C(|u|+|v|, |u|)`,
/// which fits a `u128` for any pair of words whose shuffle fits a [`Word`].
pub fn shuffle_words(u: &Word, v: &Word) -> Counts<Word> {
    let (n, m) = (u.len(), v.len());
    let mut prev: Vec<Counts<Word>> = Vec::with_capacity(m + 1);
    // row i = 0: only prefixes of v
    for j in 0..=m {
        let mut c = Counts::new();
        c.insert(v.prefix(j), 1);
        prev.push(c);
    }
    for i in 1..=n {
        let a = u.at(i - 1);
        let mut row: Vec<Counts<Word>> = Vec::with_capacity(m + 1);
        let mut c0 = Counts::new();
        c0.insert(u.prefix(i), 1);
        row.push(c0);
        for j in 1..=m {
            let b = v.at(j - 1);
            let mut cell = Counts::new();
            for (w, &k) in &prev[j] {
                *cell.entry(w.push(a)).or_insert(0) += k;
            }
            for (w, &k) in &row[j - 1] {
                *cell.entry(w.push(b)).or_insert(0) += k;
            }
            row.push(cell);
        }
        prev = row;
    }
    prev.pop().expect("row has m + 1 cells")
}

/// Shuffle product `p ⧢ q`.
pub fn shuffle(p: &NCPoly, q: &NCPoly) -> NCPoly {
    let mut cache: BTreeMap<(Word, Word), Counts<Word>> = BTreeMap::new();
    let mut out = NCPoly::zero();
    for (u, a) in p.iter() {
        for (v, b) in q.iter() {
            let key = if u <= v { (*u, *v) } else { (*v, *u) };
            let counts = cache.entry(key).or_insert_with(|| shuffle_words(&key.0, &key.1));
            from_counts(counts, &(a * b), &mut out);
        }
    }
    out
}

/// `p^{⧢n}`.
pub fn shuffle_pow(p: &NCPoly, n: usize) -> NCPoly {
    let mut acc = NCPoly::basis(Word::EMPTY);
    for _ in 0..n {
        acc = shuffle(&acc, p);
    }
    acc
}

fn stuffle_words(u: &[u32], v: &[u32], memo: &mut BTreeMap<(usize, usize), Counts<YWord>>) -> Counts<YWord> {
    // suffix recursion: y_s u' ⊔⊔ y_t v' = y_s(u' ⊔⊔ y_t v') + y_t(y_s u' ⊔⊔ v') + y_{s+t}(u' ⊔⊔ v')
    let key = (u.len(), v.len());
    if let Some(c) = memo.get(&key) {
        return c.clone();
    }
    let mut out = Counts::new();
    if u.is_empty() || v.is_empty() {
        let rest = if u.is_empty() { v } else { u };
        out.insert(YWord(rest.to_vec()), 1);
    } else {
        let branches: [(u32, usize, usize); 3] =
            [(u[0], 1, 0), (v[0], 0, 1), (u[0] + v[0], 1, 1)];
        for (head, du, dv) in branches {
            let sub = stuffle_words(&u[du..], &v[dv..], memo);
            for (w, k) in sub {
                let mut word = Vec::with_capacity(w.len() + 1);
                word.push(head);
                word.extend_from_slice(&w.0);
                *out.entry(YWord(word)).or_insert(0) += k;
            }
        }
    }
    memo.insert(key, out.clone());
    out
}

/// Stuffle (quasi-shuffle) product on `ℚ⟨Y⟩`; `y_0` is rejected.
pub fn stuffle(p: &YPoly, q: &YPoly) -> Result<YPoly> {
    if p.keys().chain(q.keys()).any(YWord::has_zero) {
        return Err(Error::ZeroIndex("stuffle"));
    }
    let mut out = YPoly::zero();
    for (u, a) in p.iter() {
        for (v, b) in q.iter() {
            let mut memo = BTreeMap::new();
            let counts = stuffle_words(&u.0, &v.0, &mut memo);
            from_counts(&counts, &(a * b), &mut out);
        }
    }
    Ok(out)
}

/// Unshuffle coproduct `Δ_⧢(w)`: every splitting of `w` into a subword and
/// its complementary subword, with multiplicity.
pub fn unshuffle(w: &Word) -> LinComb<(Word, Word)> {
    let n = w.len();
    assert!(n < 64, "unshuffle enumerates 2^|w| splittings");
    let mut counts: Counts<(Word, Word)> = Counts::new();
    for mask in 0u64..(1u64 << n) {
        let mut left = Word::EMPTY;
        let mut right = Word::EMPTY;
        for i in 0..n {
            if mask >> i & 1 == 1 {
                left = left.push(w.at(i));
            } else {
                right = right.push(w.at(i));
            }
        }
        *counts.entry((left, right)).or_insert(0) += 1;
    }
    let mut out = LinComb::zero();
    from_counts(&counts, &Rational::from_integer(1.into()), &mut out);
    out
}

/// Left residual `p ◁ s`, defined by `⟨p ◁ s | w⟩ = ⟨s | wp⟩`.
pub fn left_residual(p: &NCPoly, s: &NCPoly) -> NCPoly {
    let mut out = NCPoly::zero();
    for (v, a) in p.iter() {
        for (t, b) in s.iter() {
            if t.ends_with(v) {
                out.add_term(t.prefix(t.len() - v.len()), a * b);
            }
        }
    }
    out
}

/// Right residual `s ▷ p`, defined by `⟨s ▷ p | w⟩ = ⟨s | pw⟩`.
pub fn right_residual(s: &NCPoly, p: &NCPoly) -> NCPoly {
    let mut out = NCPoly::zero();
    for (v, a) in p.iter() {
        for (t, b) in s.iter() {
            if t.starts_with(v) {
                out.add_term(t.suffix(v.len()), a * b);
            }
        }
    }
    out
}

/// Whether words of equal bidegree carry equal coefficients.
///
/// Words absent from `p` count as coefficient zero, so every bidegree class
/// present must be complete (`C(a+b, a)` words) and constant.
pub fn is_exchangeable(p: &NCPoly) -> bool {
    let mut classes: BTreeMap<(usize, usize), (Rational, usize)> = BTreeMap::new();
    for (w, c) in p.iter() {
        let entry = classes.entry(w.bidegree()).or_insert_with(|| (c.clone(), 0));
        if entry.0 != *c {
            return false;
        }
        entry.1 += 1;
    }
    classes.iter().all(|(&(a, b), (_, n))| binomial((a + b) as u64, a as u64) == (*n as u64).into())
}

/// A letter as a polynomial.
pub fn letter_poly(x: Letter) -> NCPoly {
    NCPoly::basis(Word::letter(x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;
    use alloc::vec;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn p(terms: &[(&str, i64)]) -> NCPoly {
        terms.iter().map(|(s, c)| (w(s), int(*c))).collect()
    }

    fn y(parts: &[u32]) -> YPoly {
        YPoly::basis(YWord(parts.to_vec()))
    }

    #[test]
    fn conc_examples() {
        let one = p(&[("", 1)]);
        let q = p(&[("01", 2), ("1", -1)]);
        assert_eq!(conc(&one, &q), q);
        assert_eq!(conc(&p(&[("0", 1)]), &p(&[("1", 1)])), p(&[("01", 1)]));
        assert_eq!(conc(&p(&[("0", 1), ("1", 1)]), &p(&[("1", 1)])), p(&[("01", 1), ("11", 1)]));
    }

    #[test]
    fn shuffle_examples() {
        let x0 = p(&[("0", 1)]);
        let x1 = p(&[("1", 1)]);
        let one = p(&[("", 1)]);
        assert_eq!(shuffle(&one, &x1), x1);
        assert_eq!(shuffle(&x0, &x1), p(&[("01", 1), ("10", 1)]));
        assert_eq!(shuffle(&p(&[("01", 1)]), &x0), p(&[("001", 2), ("010", 1)]));
        assert!(shuffle(&NCPoly::zero(), &x0).is_zero());
    }

    #[test]
    fn stuffle_examples() {
        let one = y(&[]);
        assert_eq!(stuffle(&one, &y(&[2, 1])).unwrap(), y(&[2, 1]));
        let mut expect = YPoly::zero();
        expect.add_term(YWord(vec![1, 1]), int(2));
        expect.add_term(YWord(vec![2]), int(1));
        assert_eq!(stuffle(&y(&[1]), &y(&[1])).unwrap(), expect);
        let expect: YPoly =
            [(YWord(vec![2, 1]), int(1)), (YWord(vec![1, 2]), int(1)), (YWord(vec![3]), int(1))]
                .into_iter()
                .collect();
        assert_eq!(stuffle(&y(&[2]), &y(&[1])).unwrap(), expect);
        assert_eq!(stuffle(&y(&[0]), &y(&[1])), Err(Error::ZeroIndex("stuffle")));
    }

    #[test]
    fn unshuffle_examples() {
        let d = unshuffle(&Word::EMPTY);
        assert_eq!(d, LinComb::basis((Word::EMPTY, Word::EMPTY)));
        let d = unshuffle(&w("0"));
        assert_eq!(d.len(), 2);
        assert_eq!(d.coeff(&(w("0"), Word::EMPTY)), int(1));
        assert_eq!(d.coeff(&(Word::EMPTY, w("0"))), int(1));
        let d = unshuffle(&w("01"));
        assert_eq!(d.len(), 4);
        for pair in [(w("01"), w("")), (w(""), w("01")), (w("0"), w("1")), (w("1"), w("0"))] {
            assert_eq!(d.coeff(&pair), int(1));
        }
        // repeated letters merge splittings
        assert_eq!(unshuffle(&w("00")).coeff(&(w("0"), w("0"))), int(2));
    }

    #[test]
    fn residual_examples() {
        let x0 = p(&[("0", 1)]);
        let x1 = p(&[("1", 1)]);
        let one = p(&[("", 1)]);
        let s = p(&[("01", 1)]);
        assert_eq!(left_residual(&x1, &s), x0);
        assert!(left_residual(&x0, &s).is_zero());
        assert_eq!(left_residual(&one, &s), s);
        assert_eq!(right_residual(&s, &x0), x1);
        assert!(right_residual(&s, &x1).is_zero());
        assert_eq!(right_residual(&s, &one), s);
    }

    #[test]
    fn exchangeability() {
        assert!(is_exchangeable(&p(&[("01", 1), ("10", 1)])));
        assert!(!is_exchangeable(&p(&[("01", 1)])));
        assert!(is_exchangeable(&p(&[("000", 3), ("0", -1), ("", 5)])));
        assert!(!is_exchangeable(&p(&[("01", 1), ("10", 2)])));
        assert!(is_exchangeable(&NCPoly::zero()));
    }

    #[test]
    fn pairing_is_symmetric_dot() {
        let a = p(&[("01", 2), ("1", 3)]);
        let b = p(&[("01", 5), ("0", 7)]);
        assert_eq!(pairing(&a, &b), int(10));
        assert_eq!(pairing(&b, &a), int(10));
    }
}
