//! The sections `ι0`, `ι1`, the index map, trailing-`x0` reduction and the
//! word-indexed operator compositions.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::harmonic::li_taylor;
use super::numeric::polyzeta_numeric;
use super::symfun::{partial_fractions, theta, Raw, SymFun, SymMonomial};
use crate::error::{Error, Result};
use crate::lincomb::LinComb;
use crate::scalar::{factorial, Rational};
use crate::shuffle::{shuffle, shuffle_words, unshuffle, NCPoly};
use crate::words::{Letter, Word};

/// `Li_w = Σ c · Li_u · log^n(z)/n!` with `u ∈ X*x1 ∪ {ε}`, keyed by `(u, n)`.
pub fn reduce_trailing_x0(w: &Word) -> LinComb<(Word, u32)> {
    let mut out = LinComb::zero();
    reduce_into(w, &Rational::one(), &mut out);
    out
}

fn reduce_into(w: &Word, c: &Rational, out: &mut LinComb<(Word, u32)>) {
    let n = w.trailing_x0();
    if n == 0 {
        out.add_term((*w, 0), c.clone());
        return;
    }
    if n == w.len() {
        out.add_term((Word::EMPTY, n as u32), c.clone());
        return;
    }
    // w = u x1 x0^n = u x1 ⧢ x0^n − Σ_{k=1}^n (u ⧢ x0^k) x1 x0^{n−k}
    let ux1 = w.prefix(w.len() - n);
    let u = ux1.prefix(ux1.len() - 1);
    out.add_term((ux1, n as u32), c.clone());
    for k in 1..=n {
        let tail = Word::letter(Letter::X1).conc(&Word::power(Letter::X0, n - k));
        for (v, m) in shuffle_words(&u, &Word::power(Letter::X0, k)) {
            let d = -c * Rational::from_integer(m.into());
            reduce_into(&v.conc(&tail), &d, out);
        }
    }
}

/// Index of `z^k (1−z)^{−l} Li_w`: `k` when `w = x0^n`, `k + |w|` when `w` ends in `x1`.
pub fn index_of(m: &SymMonomial) -> Result<i64> {
    if m.word.is_x0_power() {
        Ok(m.k)
    } else if m.word.last() == Some(Letter::X1) {
        Ok(m.k + m.word.len() as i64)
    } else {
        Err(Error::UnreducedWord(format!("{}", m.word)))
    }
}

/// How basepoint constants that are not exact rationals are handled.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Constants {
    /// Fail with [`Error::NonElementaryBasepoint`].
    #[default]
    Exact,
    /// Evaluate the polyzeta constant numerically and store the nearest
    /// binary fraction (the result is then only approximately a section).
    Numeric,
}

/// Memoized primitives `P(j, w) = ∫ z^j Li_w` and `Q(j, w) = ∫ (1−z)^{−j} Li_w`.
#[derive(Default)]
struct Primitives {
    p: BTreeMap<(i64, Word), SymFun>,
    q: BTreeMap<(u32, Word), SymFun>,
}

impl Primitives {
    fn of(&mut self, f: &SymFun) -> SymFun {
        let mut out = SymFun::zero();
        for (m, c) in f.terms() {
            let g = if m.l == 0 { self.p(m.k, m.word) } else { self.q(m.l, m.word) };
            out += &g.scale(c);
        }
        out
    }

    /// `∫ z^a (1−z)^e Li_w` through partial fractions.
    fn mixed(&mut self, a: i64, e: i64, w: Word) -> SymFun {
        let mut out = SymFun::zero();
        for ((k, l), c) in partial_fractions(a, e) {
            let g = if l == 0 { self.p(k, w) } else { self.q(l, w) };
            out += &g.scale(&c);
        }
        out
    }

    fn p(&mut self, j: i64, w: Word) -> SymFun {
        if let Some(v) = self.p.get(&(j, w)) {
            return v.clone();
        }
        let v = if j == -1 {
            SymFun::li(w.prepend(Letter::X0))
        } else {
            // ∫ z^j Li_w = z^{j+1}/(j+1) Li_w − 1/(j+1) ∫ z^{j+1} Li_w'
            let inv = Rational::new(BigInt::one(), BigInt::from(j + 1));
            let mut v = SymFun::monomial(j + 1, 0, w).scale(&inv);
            let rest = match w.first() {
                None => SymFun::zero(),
                Some(Letter::X0) => self.p(j, w.suffix(1)),
                Some(Letter::X1) => self.mixed(j + 1, -1, w.suffix(1)),
            };
            v -= &rest.scale(&inv);
            v
        };
        self.p.insert((j, w), v.clone());
        v
    }

    fn q(&mut self, j: u32, w: Word) -> SymFun {
        if let Some(v) = self.q.get(&(j, w)) {
            return v.clone();
        }
        let v = if j == 1 {
            SymFun::li(w.prepend(Letter::X1))
        } else {
            // ∫ (1−z)^{−j} Li_w = (1−z)^{1−j}/(j−1) Li_w − 1/(j−1) ∫ (1−z)^{1−j} Li_w'
            let inv = Rational::new(BigInt::one(), BigInt::from(j as i64 - 1));
            let mut v = SymFun::mixed(0, 1 - j as i64, w).scale(&inv);
            let rest = match w.first() {
                None => SymFun::zero(),
                Some(Letter::X0) => self.mixed(-1, 1 - j as i64, w.suffix(1)),
                Some(Letter::X1) => self.q(j, w.suffix(1)),
            };
            v -= &rest.scale(&inv);
            v
        };
        self.q.insert((j, w), v.clone());
        v
    }
}

/// An antiderivative of `f` (no normalization of the constant).
pub fn antiderivative(f: &SymFun) -> SymFun {
    Primitives::default().of(f)
}

/// Exact limit of `f` as `z → 0` along `Ω`.
pub fn limit_at_zero(f: &SymFun) -> Result<Rational> {
    // g[n][e]: coefficient of z^e log^n(z)/n! for e ≤ 0, keyed by (n, e)
    let mut g: BTreeMap<(u32, i64), Rational> = BTreeMap::new();
    for (m, c) in f.terms() {
        if m.k > 0 {
            continue;
        }
        let deg = (-m.k) as usize;
        for ((u, n), d) in reduce_trailing_x0(&m.word).iter() {
            let mut series = li_taylor(u, deg)?;
            // times (1−z)^{−l}: l prefix-sum passes
            for _ in 0..m.l {
                for i in 1..=deg {
                    let prev = series[i - 1].clone();
                    series[i] += prev;
                }
            }
            let cd = c * d;
            for (i, s) in series.iter().enumerate() {
                if !s.is_zero() {
                    *g.entry((*n, m.k + i as i64)).or_insert_with(Rational::zero) += &cd * s;
                }
            }
        }
    }
    let mut value = Rational::zero();
    for ((n, e), c) in g {
        if c.is_zero() {
            continue;
        }
        if n == 0 && e == 0 {
            value = c;
        } else {
            return Err(Error::DivergentBasepoint(0));
        }
    }
    Ok(value)
}

/// `D = Σ_m D_m ⧢ x1^m` with no word of `D_m` starting with `x1`.
fn split_leading_x1(d: &NCPoly) -> BTreeMap<usize, NCPoly> {
    let mut out: BTreeMap<usize, NCPoly> = BTreeMap::new();
    let mut rest = d.clone();
    let run = |w: &Word| w.letters().take_while(|&x| x == Letter::X1).count();
    while let Some((w, c)) = rest.iter().max_by_key(|(w, _)| (run(w), **w)).map(|(w, c)| (*w, c.clone())) {
        let m = run(&w);
        let v = w.suffix(m);
        out.entry(m).or_default().add_term(v, c.clone());
        if m == 0 {
            rest.add_term(w, -c);
            continue;
        }
        // x1^m v = x1^m ⧢ v − (other words of x1^m ⧢ v, each with a shorter leading x1 run)
        let sh = shuffle(&NCPoly::basis(Word::power(Letter::X1, m)), &NCPoly::basis(v));
        rest.add_scaled(&sh, &-c);
    }
    out
}

/// Exact limit of `f` as `z → 1` along `Ω`.
pub fn limit_at_one(f: &SymFun, constants: Constants) -> Result<Rational> {
    let mut value = Rational::zero();
    // (1−z)^{−l} log^n(z)/n! with t = 1−z: a Laurent series in t
    let mut laurent: BTreeMap<i64, Rational> = BTreeMap::new();
    let mut d = NCPoly::zero();
    for (m, c) in f.terms() {
        if m.l == 0 {
            // z^k → 1 and z^k − 1 = O(1−z) kills every log-power divergence
            d.add_term(m.word, c.clone());
            continue;
        }
        if !m.word.is_x0_power() {
            return Err(Error::NonElementaryBasepoint(1));
        }
        let n = m.word.len();
        let series = log_one_minus_t_pow(n, m.l as usize);
        for (i, s) in series.iter().enumerate() {
            if !s.is_zero() {
                *laurent.entry(i as i64 - m.l as i64).or_insert_with(Rational::zero) += c * s;
            }
        }
    }
    for (e, c) in laurent {
        if c.is_zero() {
            continue;
        }
        if e < 0 {
            return Err(Error::DivergentBasepoint(1));
        }
        if e == 0 {
            value += c;
        }
    }
    for (m, dm) in split_leading_x1(&d) {
        for (w, c) in dm.iter() {
            if w.is_empty() {
                if m == 0 {
                    value += c;
                } else {
                    return Err(Error::DivergentBasepoint(1));
                }
            } else if w.is_x0_power() {
                // log^n(z) → 0 faster than any power of log(1−z) grows
                continue;
            } else if m > 0 {
                return Err(Error::NonElementaryBasepoint(1));
            } else {
                match constants {
                    Constants::Exact => return Err(Error::NonElementaryBasepoint(1)),
                    Constants::Numeric => {
                        let z = polyzeta_numeric(w)?;
                        let q = Rational::from_float(z).ok_or(Error::NonElementaryBasepoint(1))?;
                        value += c * q;
                    }
                }
            }
        }
    }
    Ok(value)
}

/// Coefficients `0..=deg` of `log^n(1−t)/n!`.
fn log_one_minus_t_pow(n: usize, deg: usize) -> Vec<Rational> {
    let mut log = vec![Rational::zero(); deg + 1];
    for (i, c) in log.iter_mut().enumerate().skip(1) {
        *c = -Rational::new(BigInt::one(), BigInt::from(i));
    }
    let mut acc = vec![Rational::zero(); deg + 1];
    acc[0] = Rational::one();
    for _ in 0..n {
        let mut next = vec![Rational::zero(); deg + 1];
        for (i, a) in acc.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for j in 1..=deg - i {
                next[i + j] += a * &log[j];
            }
        }
        acc = next;
    }
    let nf = Rational::from_integer(BigInt::from(factorial(n as u64)));
    acc.into_iter().map(|c| c / &nf).collect()
}

/// `ι0` (`i = X0`, `∫ · dz/z`) or `ι1` (`i = X1`, `∫_0 · dz/(1−z)`), exact constants only.
pub fn iota(i: Letter, f: &SymFun) -> Result<SymFun> {
    iota_with(i, f, Constants::Exact)
}

/// [`iota`] with a choice of constant handling.
///
/// Each monomial is split over the basis `z^k (1−z)^{−l} Li_u log^n(z)/n!`
/// with `u ∈ X*x1 ∪ {ε}`. For `ι0` the basepoint of each piece is 0 when its
/// index is `≥ 1` and 1 otherwise; `ι1` always starts at 0.
pub fn iota_with(i: Letter, f: &SymFun, constants: Constants) -> Result<SymFun> {
    let mut prim = Primitives::default();
    let mut out = SymFun::zero();
    for (m, c) in f.terms() {
        for ((u, n), d) in reduce_trailing_x0(&m.word).iter() {
            let ind = if u.is_empty() { m.k } else { m.k + u.len() as i64 };
            // Li_u log^n/n! = Li_{u ⧢ x0^n}
            let mut raw = Raw::default();
            let (da, de) = match i {
                Letter::X0 => (-1, 0),
                Letter::X1 => (0, -1),
            };
            for (v, k) in shuffle_words(u, &Word::power(Letter::X0, *n as usize)) {
                raw.add(m.k + da, -(m.l as i64) + de, v, Rational::from_integer(k.into()));
            }
            let piece = prim.of(&raw.finish());
            let at_one = i == Letter::X0 && ind <= 0;
            let limit = if at_one { limit_at_one(&piece, constants)? } else { limit_at_zero(&piece)? };
            let piece = &piece - &SymFun::constant(limit);
            out += &piece.scale(&(c * d));
        }
    }
    Ok(out)
}

/// Kind of word-indexed operator composition.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OpKind {
    /// `Θ(vx_i) = Θ(v) θ_i`.
    Theta,
    /// `ℑ(vx_i) = ℑ(v) ι_i`.
    Iota,
}

/// A single operator letter for mixed compositions such as `θ0 ι1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Op {
    /// `θ_i`.
    Theta(Letter),
    /// `ι_i`.
    Iota(Letter),
}

/// `Θ(w) f` or `ℑ(w) f`; the last letter of `w` acts first.
pub fn apply_word_op(kind: OpKind, w: &Word, f: &SymFun) -> Result<SymFun> {
    let ops: Vec<Op> = w
        .letters()
        .map(|x| match kind {
            OpKind::Theta => Op::Theta(x),
            OpKind::Iota => Op::Iota(x),
        })
        .collect();
    apply_ops(&ops, f)
}

/// Applies a composition of operators, rightmost first.
pub fn apply_ops(ops: &[Op], f: &SymFun) -> Result<SymFun> {
    let mut cur = f.clone();
    for op in ops.iter().rev() {
        cur = match op {
            Op::Theta(x) => theta(*x, &cur),
            Op::Iota(x) => iota(*x, &cur)?,
        };
    }
    Ok(cur)
}

/// `Σ_{(u1,u2) ∈ Δ⧢(u)} Θ(u1)(f) · Θ(u2)(g)`.
pub fn theta_leibniz(u: &Word, f: &SymFun, g: &SymFun) -> SymFun {
    let mut out = SymFun::zero();
    for ((a, b), c) in unshuffle(u).iter() {
        let fa = apply_word_op(OpKind::Theta, a, f).expect("θ never fails");
        let gb = apply_word_op(OpKind::Theta, b, g).expect("θ never fails");
        out += &fa.mul(&gb).scale(c);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn reduction_examples() {
        let r = reduce_trailing_x0(&w("000"));
        assert_eq!(r, LinComb::basis((Word::EMPTY, 3)));
        assert_eq!(reduce_trailing_x0(&w("0101")), LinComb::basis((w("0101"), 0)));
        let r = reduce_trailing_x0(&w("10"));
        let mut expect = LinComb::zero();
        expect.add_term((w("1"), 1), int(1));
        expect.add_term((w("01"), 0), int(-1));
        assert_eq!(r, expect);
    }

    #[test]
    fn reduction_is_shuffle_identity() {
        // Σ c · (u ⧢ x0^n) must give back w
        for len in 0..=6 {
            for word in Word::all_of_length(len) {
                let mut back = NCPoly::zero();
                for ((u, n), c) in reduce_trailing_x0(&word).iter() {
                    let sh = shuffle(&NCPoly::basis(*u), &NCPoly::basis(Word::power(Letter::X0, *n as usize)));
                    back.add_scaled(&sh, c);
                }
                assert_eq!(back, NCPoly::basis(word), "{word}");
            }
        }
    }

    #[test]
    fn index_examples() {
        assert_eq!(index_of(&SymMonomial::new(2, 0, w("000"))).unwrap(), 2);
        assert_eq!(index_of(&SymMonomial::new(0, 0, w("1"))).unwrap(), 1);
        assert_eq!(index_of(&SymMonomial::new(-1, 0, w("0"))).unwrap(), -1);
        assert!(matches!(index_of(&SymMonomial::new(0, 0, w("10"))), Err(Error::UnreducedWord(_))));
    }

    #[test]
    fn iota_examples() {
        assert_eq!(iota(Letter::X1, &SymFun::one()).unwrap(), SymFun::li(w("1")));
        for m in 0..5 {
            let f = SymFun::li(Word::power(Letter::X0, m));
            assert_eq!(iota(Letter::X0, &f).unwrap(), SymFun::li(Word::power(Letter::X0, m + 1)));
            let g = SymFun::li(Word::power(Letter::X1, m + 1));
            assert_eq!(iota(Letter::X0, &g).unwrap(), SymFun::li(w("0").conc(&Word::power(Letter::X1, m + 1))));
        }
        // ι0(z^{-1}) = ∫_1^z s^{-2} ds = 1 − 1/z
        let f = SymFun::z_pow(-1);
        assert_eq!(iota(Letter::X0, &f).unwrap(), &SymFun::one() - &SymFun::z_pow(-1));
    }

    #[test]
    fn divergent_basepoints() {
        // ι0((1−z)^{-1}) would need log(1−z) at 1
        assert!(matches!(iota(Letter::X0, &SymFun::den_pow(1)), Err(Error::DivergentBasepoint(1))));
        assert!(matches!(iota(Letter::X1, &SymFun::z_pow(-1)), Err(Error::DivergentBasepoint(0))));
    }

    #[test]
    fn polyzeta_constant() {
        // ι0(z^{-1} Li_{x1}) has index 0 and an exact constant
        let f = SymFun::monomial(-1, 0, w("1"));
        let g = iota(Letter::X0, &f).unwrap();
        assert_eq!(theta(Letter::X0, &g), f);
        // ι0(z^{-2} Li_{x0x1}) has index 0 and needs Li_{x0x1}(1) = ζ(2)
        let f = SymFun::monomial(-2, 0, w("01"));
        assert!(matches!(iota(Letter::X0, &f), Err(Error::NonElementaryBasepoint(1))));
        let g = iota_with(Letter::X0, &f, Constants::Numeric).unwrap();
        assert_eq!(theta(Letter::X0, &g), f);
    }

    #[test]
    fn limits() {
        assert_eq!(limit_at_zero(&SymFun::lambda()).unwrap(), int(0));
        assert_eq!(limit_at_one(&SymFun::lambda_inv(), Constants::Exact).unwrap(), int(0));
        // (1−z)^{-1} log z → −1 at z = 1
        let f = SymFun::monomial(0, 1, w("0"));
        assert_eq!(limit_at_one(&f, Constants::Exact).unwrap(), int(-1));
        // Li_{x1} − Li_{x1} z^2 → 0 at 1 since (1 − z²) log(1 − z) → 0
        let g = &SymFun::li(w("1")) - &SymFun::monomial(2, 0, w("1"));
        assert_eq!(limit_at_one(&g, Constants::Exact).unwrap(), int(0));
        assert!(limit_at_one(&SymFun::li(w("1")), Constants::Exact).is_err());
    }

    #[test]
    fn word_ops() {
        let one = SymFun::one();
        assert_eq!(apply_word_op(OpKind::Iota, &w("01"), &one).unwrap(), SymFun::li(w("01")));
        let lam = apply_ops(&[Op::Theta(Letter::X0), Op::Iota(Letter::X1)], &one).unwrap();
        assert_eq!(lam, SymFun::lambda());
        assert_eq!(apply_word_op(OpKind::Theta, &w("10"), &SymFun::li(w("011"))).unwrap(), SymFun::li(w("1")));
    }
}
