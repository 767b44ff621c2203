//! Alphabets, words and compositions.
//!
//! Words over `X = {x0, x1}` are packed into a `u128`, most significant bit
//! first, with an explicit length. The derived order on `(bits, len)` is the
//! lexicographic order with `x0 < x1` and proper prefixes first.
//!
//! Y-words `y_{s1}…y_{sr}` are plain index vectors and are in bijection with
//! compositions `(s1, …, sr)`; the projector [`pi_x`] sends `y_s` to
//! `x0^{s-1} x1` and [`pi_y`] is its adjoint, vanishing on `ℚ⟨X⟩x0`.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};
use crate::lincomb::LinComb;
use crate::shuffle::{NCPoly, YPoly};

/// Maximum number of letters in a [`Word`].
pub const MAX_WORD_LEN: usize = 128;

/// A letter of `X = {x0, x1}`, ordered `x0 < x1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    /// `x0`, attached to the form `dz/z`.
    X0 = 0,
    /// `x1`, attached to the form `dz/(1-z)`.
    X1 = 1,
}

impl Letter {
    /// Both letters in order.
    pub const ALL: [Letter; 2] = [Letter::X0, Letter::X1];

    fn from_bit(b: u128) -> Letter {
        if b & 1 == 1 {
            Letter::X1
        } else {
            Letter::X0
        }
    }

    /// Index 0 or 1.
    pub fn index(self) -> usize {
        self as usize
    }
}

/// A word over `{x0, x1}`, at most [`MAX_WORD_LEN`] letters long.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word {
    // letter i lives at bit 127 - i; bits past `len` are zero
    bits: u128,
    len: u32,
}

impl Word {
    /// The empty word `1_{X*}`.
    pub const EMPTY: Word = Word { bits: 0, len: 0 };

    /// The empty word.
    pub fn empty() -> Word {
        Word::EMPTY
    }

    /// A one-letter word.
    pub fn letter(x: Letter) -> Word {
        Word { bits: (x as u128) << 127, len: 1 }
    }

    /// Word from a letter sequence.
    pub fn from_letters<I: IntoIterator<Item = Letter>>(letters: I) -> Result<Word> {
        let mut w = Word::EMPTY;
        for x in letters {
            w = w.try_push(x)?;
        }
        Ok(w)
    }

    /// `x^n`.
    pub fn power(x: Letter, n: usize) -> Word {
        assert!(n <= MAX_WORD_LEN, "word length {n} exceeds {MAX_WORD_LEN}");
        let mut w = Word::EMPTY;
        for _ in 0..n {
            w = w.push(x);
        }
        w
    }

    /// Number of letters.
    pub fn len(&self) -> usize {
        self.len as usize
    }

    /// Whether this is the empty word.
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Letter at position `i`. Panics when out of range.
    pub fn at(&self, i: usize) -> Letter {
        assert!(i < self.len(), "letter index {i} out of range for length {}", self.len);
        Letter::from_bit(self.bits >> (127 - i))
    }

    /// First letter, if any.
    pub fn first(&self) -> Option<Letter> {
        (!self.is_empty()).then(|| self.at(0))
    }

    /// Last letter, if any.
    pub fn last(&self) -> Option<Letter> {
        (!self.is_empty()).then(|| self.at(self.len() - 1))
    }

    /// Letters in order.
    pub fn letters(&self) -> impl DoubleEndedIterator<Item = Letter> + ExactSizeIterator + '_ {
        (0..self.len()).map(move |i| self.at(i))
    }

    /// `self · x`, or an error when the word is full.
    pub fn try_push(self, x: Letter) -> Result<Word> {
        if self.len() >= MAX_WORD_LEN {
            return Err(Error::WordTooLong(self.len() + 1));
        }
        Ok(Word { bits: self.bits | ((x as u128) << (127 - self.len)), len: self.len + 1 })
    }

    /// `self · x`. Panics past [`MAX_WORD_LEN`].
    pub fn push(self, x: Letter) -> Word {
        self.try_push(x).expect("word too long")
    }

    /// `x · self`. Panics past [`MAX_WORD_LEN`].
    pub fn prepend(self, x: Letter) -> Word {
        Word::letter(x).conc(&self)
    }

    /// Concatenation, or an error when the result does not fit.
    pub fn try_conc(&self, other: &Word) -> Result<Word> {
        let n = self.len() + other.len();
        if n > MAX_WORD_LEN {
            return Err(Error::WordTooLong(n));
        }
        let shifted = if self.len() == MAX_WORD_LEN { 0 } else { other.bits >> self.len };
        Ok(Word { bits: self.bits | shifted, len: n as u32 })
    }

    /// Concatenation. Panics past [`MAX_WORD_LEN`].
    pub fn conc(&self, other: &Word) -> Word {
        self.try_conc(other).expect("word too long")
    }

    /// The first `n` letters.
    pub fn prefix(&self, n: usize) -> Word {
        assert!(n <= self.len());
        if n == 0 {
            return Word::EMPTY;
        }
        let mask = !0u128 << (128 - n);
        Word { bits: self.bits & mask, len: n as u32 }
    }

    /// Letters from position `from` on.
    pub fn suffix(&self, from: usize) -> Word {
        assert!(from <= self.len());
        if from == self.len() {
            return Word::EMPTY;
        }
        Word { bits: self.bits << from, len: (self.len() - from) as u32 }
    }

    /// `w` with the first letter removed when it equals `x`.
    pub fn strip_first(&self, x: Letter) -> Option<Word> {
        (self.first() == Some(x)).then(|| self.suffix(1))
    }

    /// `w` with the last letter removed when it equals `x`.
    pub fn strip_last(&self, x: Letter) -> Option<Word> {
        (self.last() == Some(x)).then(|| self.prefix(self.len() - 1))
    }

    /// `|w|_x`.
    pub fn count(&self, x: Letter) -> usize {
        let ones = self.bits.count_ones() as usize;
        match x {
            Letter::X1 => ones,
            Letter::X0 => self.len() - ones,
        }
    }

    /// Bidegree `(|w|_{x0}, |w|_{x1})`.
    pub fn bidegree(&self) -> (usize, usize) {
        (self.count(Letter::X0), self.count(Letter::X1))
    }

    /// Whether `self` starts with `p`.
    pub fn starts_with(&self, p: &Word) -> bool {
        p.len() <= self.len() && self.prefix(p.len()) == *p
    }

    /// Whether `self` ends with `s`.
    pub fn ends_with(&self, s: &Word) -> bool {
        s.len() <= self.len() && self.suffix(self.len() - s.len()) == *s
    }

    /// Cyclic rotation moving the first `k` letters to the end.
    pub fn rotate(&self, k: usize) -> Word {
        let k = k % self.len().max(1);
        self.suffix(k).conc(&self.prefix(k))
    }

    /// Whether the word is Lyndon: nonempty and strictly smaller than all its proper rotations.
    pub fn is_lyndon(&self) -> bool {
        !self.is_empty() && (1..self.len()).all(|k| *self < self.rotate(k))
    }

    /// Length of the trailing block of `x0` letters.
    pub fn trailing_x0(&self) -> usize {
        self.letters().rev().take_while(|&x| x == Letter::X0).count()
    }

    /// Whether the word is `x0^n` for some `n ≥ 0`.
    pub fn is_x0_power(&self) -> bool {
        self.count(Letter::X1) == 0
    }

    /// Iterator over all `2^n` words of length `n`, in lexicographic order.
    pub fn all_of_length(n: usize) -> impl Iterator<Item = Word> {
        assert!(n < 64, "enumeration limited to short words");
        (0u64..(1u64 << n)).map(move |code| {
            let bits = if n == 0 { 0 } else { (code as u128) << (128 - n) };
            Word { bits, len: n as u32 }
        })
    }

    /// All words of length at most `n`, grouped by length.
    pub fn all_up_to(n: usize) -> impl Iterator<Item = Word> {
        (0..=n).flat_map(Word::all_of_length)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for x in self.letters() {
            f.write_str(if x == Letter::X0 { "0" } else { "1" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "w\"{self}\"")
    }
}

/// Parses a string over `{0, 1}`; the empty string is the empty word.
impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Word> {
        let mut w = Word::EMPTY;
        for c in s.chars() {
            let x = match c {
                '0' => Letter::X0,
                '1' => Letter::X1,
                _ => return Err(Error::InvalidComposition(alloc::format!("bad letter {c:?}"))),
            };
            w = w.try_push(x)?;
        }
        Ok(w)
    }
}

/// A word `y_{s1}…y_{sr}` over `Y_0 = {y_0, y_1, …}`.
///
/// `Y_0` is ordered `y_0 > y_1 > …`; nothing here depends on that order, the
/// derived `Ord` (index vectors compared lexicographically) is only used as a
/// canonical term order.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct YWord(pub Vec<u32>);

impl YWord {
    /// The empty Y-word.
    pub fn empty() -> YWord {
        YWord(Vec::new())
    }

    /// Letter indices.
    pub fn indices(&self) -> &[u32] {
        &self.0
    }

    /// Number of letters.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Whether this is the empty word.
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Sum of indices.
    pub fn weight(&self) -> u64 {
        self.0.iter().map(|&s| s as u64).sum()
    }

    /// Whether some letter is `y_0`.
    pub fn has_zero(&self) -> bool {
        self.0.contains(&0)
    }
}

impl fmt::Display for YWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("y[")?;
        for (i, s) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{s}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for YWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses comma-separated indices, e.g. `"2,1"`; the empty string is the empty word.
impl FromStr for YWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<YWord> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(YWord::empty());
        }
        s.split(',')
            .map(|p| {
                p.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::InvalidComposition(alloc::format!("bad index {p:?}")))
            })
            .collect::<Result<Vec<_>>>()
            .map(YWord)
    }
}

/// Which index range a [`Composition`] lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Polarity {
    /// All parts `≥ 1` (`Li`, `H` indices).
    Positive,
    /// All parts `≥ 0` (`Li^-` indices).
    NonNegative,
}

/// A multi-index `(s1, …, sr)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Composition {
    parts: Vec<u32>,
    polarity: Polarity,
}

impl Composition {
    /// Checks the parts against the polarity.
    pub fn new(parts: Vec<u32>, polarity: Polarity) -> Result<Composition> {
        if polarity == Polarity::Positive && parts.contains(&0) {
            return Err(Error::InvalidComposition(alloc::format!(
                "{parts:?}: positive-index composition with a zero part"
            )));
        }
        Ok(Composition { parts, polarity })
    }

    /// Positive-index composition.
    pub fn positive(parts: &[u32]) -> Result<Composition> {
        Composition::new(parts.to_vec(), Polarity::Positive)
    }

    /// Nonnegative-index composition.
    pub fn nonneg(parts: &[u32]) -> Composition {
        Composition { parts: parts.to_vec(), polarity: Polarity::NonNegative }
    }

    /// The parts.
    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// The polarity flag.
    pub fn polarity(&self) -> Polarity {
        self.polarity
    }

    /// `s1 + … + sr`.
    pub fn weight(&self) -> u64 {
        self.parts.iter().map(|&s| s as u64).sum()
    }

    /// `r`.
    pub fn depth(&self) -> usize {
        self.parts.len()
    }

    /// `y_{s1}…y_{sr}`.
    pub fn to_yword(&self) -> YWord {
        YWord(self.parts.clone())
    }

    /// `x0^{s1-1}x1…x0^{sr-1}x1`; only for positive compositions.
    pub fn to_word(&self) -> Result<Word> {
        if self.parts.contains(&0) {
            return Err(Error::ZeroIndex("pi_X"));
        }
        let mut w = Word::EMPTY;
        for &s in &self.parts {
            for _ in 1..s {
                w = w.try_push(Letter::X0)?;
            }
            w = w.try_push(Letter::X1)?;
        }
        Ok(w)
    }

    /// Inverse of [`Composition::to_word`] on `X*x1 ∪ {ε}`.
    pub fn from_word(w: &Word) -> Option<Composition> {
        if !w.is_empty() && w.last() != Some(Letter::X1) {
            return None;
        }
        let mut parts = Vec::new();
        let mut run = 1u32;
        for x in w.letters() {
            match x {
                Letter::X0 => run += 1,
                Letter::X1 => {
                    parts.push(run);
                    run = 1;
                }
            }
        }
        Some(Composition { parts, polarity: Polarity::Positive })
    }

    /// All compositions with parts in the polarity range, `1 ≤ depth ≤ max_depth`
    /// and weight `≤ max_weight`, in (depth, parts) order.
    pub fn enumerate(polarity: Polarity, max_weight: u64, max_depth: usize) -> Vec<Composition> {
        let lo = match polarity {
            Polarity::Positive => 1,
            Polarity::NonNegative => 0,
        };
        let mut out = Vec::new();
        for depth in 1..=max_depth {
            let mut cur = Vec::with_capacity(depth);
            fill(&mut cur, depth, max_weight, lo, &mut |parts| {
                out.push(Composition { parts: parts.to_vec(), polarity })
            });
        }
        return out;

        fn fill(cur: &mut Vec<u32>, depth: usize, budget: u64, lo: u32, emit: &mut dyn FnMut(&[u32])) {
            if cur.len() == depth {
                emit(cur);
                return;
            }
            let remaining = (depth - cur.len() - 1) as u64 * lo as u64;
            if budget < lo as u64 + remaining {
                return;
            }
            for s in lo..=(budget - remaining) as u32 {
                cur.push(s);
                fill(cur, depth, budget - s as u64, lo, emit);
                cur.pop();
            }
        }
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, s) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{s}")?;
        }
        f.write_str(")")
    }
}

/// All Lyndon words of length `≤ max_len`, in lexicographic order.
///
/// Duval's generation algorithm: repeat the current word up to `max_len`,
/// drop trailing maximal letters, then increment the last one.
pub fn lyndon_up_to(max_len: usize) -> Vec<Word> {
    let mut out = Vec::new();
    if max_len == 0 {
        return out;
    }
    assert!(max_len <= MAX_WORD_LEN);
    let mut w: Vec<u8> = alloc::vec![0];
    loop {
        out.push(to_word(&w));
        let m = w.len();
        while w.len() < max_len {
            w.push(w[w.len() - m]);
        }
        while w.last() == Some(&1) {
            w.pop();
        }
        match w.last_mut() {
            None => break,
            Some(last) => *last += 1,
        }
    }
    return out;

    fn to_word(w: &[u8]) -> Word {
        Word::from_letters(w.iter().map(|&b| if b == 0 { Letter::X0 } else { Letter::X1 }))
            .expect("bounded by max_len")
    }
}

/// Chen–Fox–Lyndon factorization: the unique nonincreasing sequence of
/// Lyndon words whose concatenation is `w` (Duval's linear-time algorithm).
pub fn clf_factorize(w: &Word) -> Vec<Word> {
    let n = w.len();
    let mut out = Vec::new();
    let mut i = 0;
    while i < n {
        let mut j = i + 1;
        let mut k = i;
        while j < n && w.at(k) <= w.at(j) {
            if w.at(k) < w.at(j) {
                k = i;
            } else {
                k += 1;
            }
            j += 1;
        }
        while i <= k {
            let len = j - k;
            out.push(w.suffix(i).prefix(len));
            i += len;
        }
    }
    out
}

/// `π_Y`: `x0^{s1-1}x1…x0^{sr-1}x1 ↦ y_{s1}…y_{sr}`, zero on `ℚ⟨X⟩x0`.
pub fn pi_y(p: &NCPoly) -> YPoly {
    let mut out = YPoly::zero();
    for (w, c) in p.iter() {
        if let Some(comp) = Composition::from_word(w) {
            out.add_term(comp.to_yword(), c.clone());
        }
    }
    out
}

/// `π_X`: `y_{s1}…y_{sr} ↦ x0^{s1-1}x1…x0^{sr-1}x1`; `y_0` has no preimage.
pub fn pi_x(q: &YPoly) -> Result<NCPoly> {
    q.try_flat_map(|yw| {
        let comp = Composition::new(yw.0.clone(), Polarity::NonNegative)?;
        Ok(LinComb::basis(comp.to_word()?))
    })
}

/// Parses a composition like `"2,1"` with the given polarity.
pub fn parse_composition(s: &str, polarity: Polarity) -> Result<Composition> {
    let yw: YWord = s.parse()?;
    Composition::new(yw.0, polarity)
}

/// Renders a word as `x0x1…` for diagnostics.
pub fn word_to_x_notation(w: &Word) -> String {
    let mut s = String::new();
    for x in w.letters() {
        s.push_str(if x == Letter::X0 { "x0" } else { "x1" });
    }
    if s.is_empty() {
        s.push('1');
    }
    s
}
