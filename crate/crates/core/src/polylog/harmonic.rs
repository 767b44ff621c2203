//! Harmonic sums, Stirling numbers and exact Taylor coefficients.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::Rational;
use crate::words::{Composition, Letter, Polarity, Word};

/// Stirling number of the second kind `S2(n, j)`.
pub fn stirling2(n: u32, j: u32) -> BigUint {
    if j > n {
        return BigUint::zero();
    }
    // row[j] holds S2(m, j) for the current m
    let mut row = vec![BigUint::zero(); j as usize + 1];
    row[0] = BigUint::one();
    for _ in 0..n {
        for i in (1..=j as usize).rev() {
            row[i] = &row[i] * BigUint::from(i) + &row[i - 1];
        }
        row[0] = BigUint::zero();
    }
    row[j as usize].clone()
}

/// `H_s(N) = Σ_{N ≥ n1 > … > nr > 0} 1/(n1^{s1} … nr^{sr})`, exactly.
///
/// The empty composition gives 1. Depth one goes through a common
/// denominator `lcm(1..N)^s`, which keeps the arithmetic linear in the
/// size of the result.
pub fn harmonic_sum(s: &Composition, n: u64) -> Result<Rational> {
    if s.polarity() != Polarity::Positive {
        return Err(Error::InvalidComposition(alloc::format!("{s} must have positive parts")));
    }
    let parts = s.parts();
    match parts.len() {
        0 => Ok(Rational::one()),
        1 => Ok(depth_one(parts[0], n)),
        _ => Ok(nested(parts, n)),
    }
}

fn lcm_upto(n: u64) -> BigUint {
    let mut sieve = vec![true; n as usize + 1];
    let mut acc = BigUint::one();
    for p in 2..=n as usize {
        if !sieve[p] {
            continue;
        }
        for m in (p * p..=n as usize).step_by(p) {
            sieve[m] = false;
        }
        let mut q = p as u64;
        while q * (p as u64) <= n {
            q *= p as u64;
        }
        acc *= BigUint::from(q);
    }
    acc
}

fn depth_one(s: u32, n: u64) -> Rational {
    if n == 0 {
        return Rational::zero();
    }
    let denom = lcm_upto(n).pow(s);
    let mut num = BigUint::zero();
    for m in 1..=n {
        let mut q = denom.clone();
        for _ in 0..s {
            q /= m;
        }
        num += q;
    }
    let g = num.gcd(&denom);
    Rational::new_raw(BigInt::from(num / &g), BigInt::from(denom / g))
}

fn nested(parts: &[u32], n: u64) -> Rational {
    // acc[j] = Σ over chains for the suffix parts[j..] with all indices ≤ current m
    let r = parts.len();
    let mut acc = vec![Rational::zero(); r + 1];
    acc[r] = Rational::one();
    for m in 1..=n {
        for j in 0..r {
            let term = &acc[j + 1] / Rational::from_integer(BigInt::from(m).pow(parts[j]));
            acc[j] += term;
        }
    }
    acc[0].clone()
}

/// Coefficient of `z^N` in `Σ_{n1>…>nr>0} n1^{s1} … nr^{sr} z^{n1}`.
pub fn neg_taylor_coeff(s: &Composition, n: u64) -> Rational {
    let parts = s.parts();
    let r = parts.len();
    if r == 0 {
        return if n == 0 { Rational::one() } else { Rational::zero() };
    }
    if n == 0 {
        return Rational::zero();
    }
    // acc[j] = Σ_{m ≥ n_j > … > n_r > 0} Π n_i^{s_i} for the current m
    let mut acc = vec![BigInt::zero(); r + 1];
    acc[r] = BigInt::one();
    for m in 1..n {
        for j in 1..r {
            let term = &acc[j + 1] * BigInt::from(m).pow(parts[j]);
            acc[j] += term;
        }
    }
    Rational::from_integer(BigInt::from(n).pow(parts[0]) * &acc[1])
}

/// Taylor coefficients `0..=m` of `Li_w` for a word not ending in `x0`.
pub fn li_taylor(w: &Word, m: usize) -> Result<Vec<Rational>> {
    if w.last() == Some(Letter::X0) {
        return Err(Error::UnreducedWord(alloc::format!("{w}")));
    }
    let mut c = vec![Rational::zero(); m + 1];
    c[0] = Rational::one();
    for x in w.letters().rev() {
        match x {
            // Li_{x0 v} = ∫ Li_v dz/z
            Letter::X0 => {
                c[0] = Rational::zero();
                for (i, ci) in c.iter_mut().enumerate().skip(1) {
                    *ci /= Rational::from_integer(BigInt::from(i));
                }
            }
            // Li_{x1 v} = ∫ Li_v dz/(1−z)
            Letter::X1 => {
                let mut next = vec![Rational::zero(); m + 1];
                let mut run = Rational::zero();
                for i in 1..=m {
                    run += &c[i - 1];
                    next[i] = &run / Rational::from_integer(BigInt::from(i));
                }
                c = next;
            }
        }
    }
    Ok(c)
}
