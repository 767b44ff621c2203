//! Acceptance suite: one line per criterion, nonzero exit on any failure.
//!
//! Run with `cargo test -p polystar --test acceptance`.

mod common;

use std::time::{Duration, Instant};

use common::*;
use num_traits::Zero;
use polystar::polylog::{
    discontinuity_demo, eval_li2, eval_li_word, harmonic_sum, iota, li_neg_closed_form, neg_taylor_coeff, theta,
    DenPoly, EvalParams, Route, SymFun,
};
use polystar::rewrite::{kernel_generator, kernel_member, normal_form, normal_form_with, to_laurent};
use polystar::scalar::{int, to_f64};
use polystar::shuffle::{left_residual, pairing, right_residual, shuffle, stuffle};
use polystar::star::{delta_left, expand, plane_star, shuffle_star};
use polystar::words::{clf_factorize, lyndon_up_to};
use polystar::{Composition, Letter, NCPoly, Polarity, Rational, Word, YPoly, YWord};
use rand::Rng;

// Tolerances and sizes.
const REWRITE_TOL: f64 = 1e-10;
const REWRITE_SAMPLES: usize = 200;
const SAMPLE_POINTS: [f64; 3] = [0.25, 0.5, 0.75];
const NEG_MAX_WEIGHT: u64 = 6;
const NEG_MAX_DEPTH: usize = 3;
const NEG_TAYLOR_N: u64 = 30;
const ABEL_N: u64 = 10_000;
const ABEL_TOL: f64 = 2e-4;
const ABEL_BUDGET: Duration = Duration::from_secs(5);
const DISC_N: usize = 40;
const DISC_TOL: f64 = 1e-6;
const MORPHISM_TOL: f64 = 1e-9;

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn c1_kernel_generator() -> Check {
    let g = kernel_generator();
    let nf = normal_form(&g).map_err(|e| e.to_string())?;
    ensure(nf.is_zero(), || format!("normal form is {nf:?}"))?;
    ensure(kernel_member(&g).map_err(|e| e.to_string())?, || "kernel_member returned false".into())?;
    Ok("normal_form(x0*⧢x1* − x1* + 1) = 0".into())
}

fn c2_rewriting_soundness() -> Check {
    let mut rng = rng(2);
    let mut worst = 0.0f64;
    for i in 0..REWRITE_SAMPLES {
        let s = random_laurent(&mut rng);
        let nf = normal_form(&s).map_err(|e| e.to_string())?;
        let lin = to_laurent(&nf).map_err(|e| e.to_string())?;
        ensure(lin.keys().all(|m| m.k == 0 || m.l == 0), || format!("sample {i}: k·l ≠ 0 in {nf:?}"))?;
        let mut r1 = common::rng(i as u64 + 1000);
        let mut r2 = common::rng(i as u64 + 2000);
        let a = normal_form_with(&s, |p| r1.gen_range(0..p.len())).map_err(|e| e.to_string())?.0;
        let b = normal_form_with(&s, |p| r2.gen_range(0..p.len())).map_err(|e| e.to_string())?.0;
        ensure(a == nf && b == nf, || format!("sample {i}: strategies disagree"))?;
        for z in SAMPLE_POINTS {
            let p = EvalParams::real(z);
            let x = eval_li2(&s, &p).map_err(|e| e.to_string())?;
            let y = eval_li2(&nf, &p).map_err(|e| e.to_string())?;
            let d = (x - y).norm();
            worst = worst.max(d);
            ensure(d < REWRITE_TOL, || format!("sample {i} at z={z}: |Δ| = {d:e}"))?;
        }
    }
    Ok(format!("{REWRITE_SAMPLES} samples, max |Δ| = {worst:.1e}"))
}

fn c3_negative_closed_forms() -> Check {
    let comps = Composition::enumerate(Polarity::NonNegative, NEG_MAX_WEIGHT, NEG_MAX_DEPTH);
    for s in &comps {
        let base = li_neg_closed_form(s, Route::Recursion).map_err(|e| e.to_string())?;
        for route in [Route::T, Route::R, Route::F] {
            let p = li_neg_closed_form(s, route).map_err(|e| e.to_string())?;
            ensure(p == base, || format!("{s}: route {route:?} gives {p}, recursion gives {base}"))?;
        }
        for n in 0..=NEG_TAYLOR_N {
            let (a, b) = (base.taylor_coeff(n), neg_taylor_coeff(s, n));
            ensure(a == b, || format!("{s}: z^{n} coefficient {a} vs oracle {b}"))?;
        }
    }
    let lam = DenPoly::new(vec![int(-1), int(1)]);
    let lam2 = DenPoly::new(vec![int(1), int(-2), int(1)]);
    for route in Route::ALL {
        ensure(li_neg_closed_form(&Composition::nonneg(&[0]), route).unwrap() == lam, || "Li^-_0 ≠ λ".into())?;
        ensure(li_neg_closed_form(&Composition::nonneg(&[0, 0]), route).unwrap() == lam2, || "Li^-_{0,0} ≠ λ²".into())?;
    }
    Ok(format!("{} compositions × 4 routes, Taylor N ≤ {NEG_TAYLOR_N}", comps.len()))
}

fn c4_abel() -> Check {
    let start = Instant::now();
    let h = harmonic_sum(&Composition::positive(&[2]).unwrap(), ABEL_N).map_err(|e| e.to_string())?;
    let v = to_f64(&h);
    let elapsed = start.elapsed();
    let d = (v - std::f64::consts::PI.powi(2) / 6.0).abs();
    ensure(d < ABEL_TOL, || format!("|H_2({ABEL_N}) − ζ(2)| = {d:e}"))?;
    ensure(elapsed < ABEL_BUDGET, || format!("took {elapsed:?}"))?;
    Ok(format!("|H_2({ABEL_N}) − π²/6| = {d:.3e} in {:.2}s", elapsed.as_secs_f64()))
}

fn c5_discontinuity() -> Check {
    let r = discontinuity_demo(DISC_N, 0.5).map_err(|e| e.to_string())?;
    let last = r.rows.last().ok_or("no rows")?;
    let df = (last.iota_f - r.limit_iota_f).abs();
    let dg = (last.iota_g - r.limit_iota_g).abs();
    ensure(df < DISC_TOL && dg < DISC_TOL, || format!("ι0(f_n) off by {df:e}, ι0(g_n) off by {dg:e}"))?;
    ensure((r.limit_iota_f + 0.5).abs() < 1e-15 && (r.limit_iota_g - 0.5).abs() < 1e-15, || "limits".into())?;
    Ok(format!("ι0(f_{DISC_N})(1/2) = {:.9}, ι0(g_{DISC_N})(1/2) = {:.9}", last.iota_f, last.iota_g))
}

fn c6_operators() -> Check {
    let mut rng = rng(6);
    let mut ok = 0;
    let mut attempts = 0;
    while ok < 100 {
        attempts += 1;
        ensure(attempts < 10_000, || "too few supported monomials".into())?;
        let m = random_monomial(&mut rng, 3);
        let f = SymFun::from_terms([(m, random_rational(&mut rng))]);
        let i = if rng.gen() { Letter::X0 } else { Letter::X1 };
        let Ok(g) = iota(i, &f) else { continue };
        ensure(theta(i, &g) == f, || format!("θι ≠ Id on {f}"))?;
        ok += 1;
    }
    for _ in 0..50 {
        let f = SymFun::li(random_word(&mut rng, 4)).scale(&random_rational(&mut rng));
        let a = theta(Letter::X0, &iota(Letter::X1, &f).map_err(|e| e.to_string())?);
        ensure(a == SymFun::lambda().mul(&f), || format!("θ0ι1 ≠ λ· on {f}"))?;
        let b = theta(Letter::X1, &iota(Letter::X0, &f).map_err(|e| e.to_string())?);
        ensure(b == SymFun::lambda_inv().mul(&f), || format!("θ1ι0 ≠ λ^-1· on {f}"))?;
    }
    for _ in 0..50 {
        let f = random_symfun(&mut rng);
        let t0 = theta(Letter::X0, &f);
        let t1 = theta(Letter::X1, &f);
        let comm = &theta(Letter::X1, &t0) - &theta(Letter::X0, &t1);
        let sum = &t0 + &t1;
        ensure(comm == sum && sum == f.d_dz(), || format!("commutator fails on {f}"))?;
    }
    Ok(format!("100 sections ({attempts} draws), 50 eigen pairs, 50 commutators"))
}

fn eval_poly(p: &NCPoly, params: &EvalParams) -> Result<num_complex::Complex64, String> {
    let mut acc = num_complex::Complex64::zero();
    for (w, c) in p.iter() {
        acc += eval_li_word(w, params).map_err(|e| e.to_string())? * to_f64(c);
    }
    Ok(acc)
}

fn h_of(p: &YPoly, n: u64) -> Rational {
    let mut acc = Rational::zero();
    for (w, c) in p.iter() {
        let s = Composition::positive(w.indices()).unwrap();
        acc += c * harmonic_sum(&s, n).unwrap();
    }
    acc
}

fn ywords_up_to_weight(max: u64) -> Vec<YWord> {
    let mut out = vec![YWord::empty()];
    for c in Composition::enumerate(Polarity::Positive, max, max as usize) {
        out.push(c.to_yword());
    }
    out
}

fn c7_morphisms() -> Check {
    let mut rng = rng(7);
    let mut worst = 0.0f64;
    for _ in 0..50 {
        let u = random_word(&mut rng, 3);
        let v = random_word(&mut rng, 6 - u.len());
        let sh = shuffle(&NCPoly::basis(u), &NCPoly::basis(v));
        for z in SAMPLE_POINTS {
            let p = EvalParams::real(z);
            let lhs = eval_poly(&sh, &p)?;
            let rhs = eval_li_word(&u, &p).unwrap() * eval_li_word(&v, &p).unwrap();
            let d = (lhs - rhs).norm();
            worst = worst.max(d);
            ensure(d < MORPHISM_TOL, || format!("Li_{{{u}⧢{v}}}({z}) off by {d:e}"))?;
        }
    }
    let words = ywords_up_to_weight(5);
    let mut pairs = 0;
    for a in &words {
        for b in &words {
            if a.weight() + b.weight() > 5 {
                continue;
            }
            pairs += 1;
            let st = stuffle(&YPoly::basis(a.clone()), &YPoly::basis(b.clone())).map_err(|e| e.to_string())?;
            for n in 0..=20 {
                let lhs = h_of(&st, n);
                let rhs = h_of(&YPoly::basis(a.clone()), n) * h_of(&YPoly::basis(b.clone()), n);
                ensure(lhs == rhs, || format!("H_{{{a}⊔⊔{b}}}({n}) ≠ product"))?;
            }
        }
    }
    Ok(format!("shuffle max |Δ| = {worst:.1e}; stuffle exact on {pairs} pairs, N ≤ 20"))
}

fn truncate(p: &NCPoly, n: usize) -> NCPoly {
    p.iter().filter(|(w, _)| w.len() <= n).map(|(w, c)| (*w, c.clone())).collect()
}

fn c8_algebra_laws() -> Check {
    let mut rng = rng(8);
    let one = NCPoly::basis(Word::EMPTY);
    for _ in 0..40 {
        let p = random_poly(&mut rng, 3, 3);
        let q = random_poly(&mut rng, 3, 3);
        let r = random_poly(&mut rng, 2, 2);
        ensure(shuffle(&p, &q) == shuffle(&q, &p), || "shuffle commutativity".into())?;
        ensure(shuffle(&shuffle(&p, &q), &r) == shuffle(&p, &shuffle(&q, &r)), || "shuffle associativity".into())?;
        ensure(shuffle(&p, &one) == p, || "shuffle unit".into())?;
        let a = random_ypoly(&mut rng, 3, 3, 3);
        let b = random_ypoly(&mut rng, 3, 2, 3);
        let c = random_ypoly(&mut rng, 2, 2, 2);
        let st = |x: &YPoly, y: &YPoly| stuffle(x, y).unwrap();
        ensure(st(&a, &b) == st(&b, &a), || "stuffle commutativity".into())?;
        ensure(st(&st(&a, &b), &c) == st(&a, &st(&b, &c)), || "stuffle associativity".into())?;
        ensure(st(&a, &YPoly::basis(YWord::empty())) == a, || "stuffle unit".into())?;
    }
    for _ in 0..100 {
        let (a0, a1, b0, b1) =
            (random_rational(&mut rng), random_rational(&mut rng), random_rational(&mut rng), random_rational(&mut rng));
        let s = plane_star(a0.clone(), a1.clone());
        let t = plane_star(b0.clone(), b1.clone());
        let prod = shuffle_star(&s, &t);
        ensure(prod == plane_star(&a0 + &b0, &a1 + &b1), || "plane-star monoid law".into())?;
        // independent check on truncated coefficients
        let lhs = expand(&prod, 4);
        let rhs = truncate(&shuffle(&expand(&s, 4), &expand(&t, 4)), 4);
        ensure(lhs == rhs, || "plane-star law on coefficients".into())?;
        // eigen-equation δ^l_x S = a_x S on the star
        ensure(delta_left(Letter::X0, &s) == s.scale(&a0), || "δ^l eigen x0".into())?;
        ensure(delta_left(Letter::X1, &s) == s.scale(&a1), || "δ^l eigen x1".into())?;
    }
    for _ in 0..40 {
        let s = random_poly(&mut rng, 4, 4);
        let t = random_poly(&mut rng, 3, 3);
        let p = random_poly(&mut rng, 2, 2);
        let q = random_poly(&mut rng, 2, 2);
        let w = random_poly(&mut rng, 3, 3);
        let x = NCPoly::basis(Word::letter(if rng.gen() { Letter::X0 } else { Letter::X1 }));
        let conc = polystar::shuffle::conc;
        // duality ⟨p◁s | w⟩ = ⟨s | wp⟩ and ⟨s▷p | w⟩ = ⟨s | pw⟩
        ensure(pairing(&left_residual(&p, &s), &w) == pairing(&s, &conc(&w, &p)), || "◁ duality".into())?;
        ensure(pairing(&right_residual(&s, &p), &w) == pairing(&s, &conc(&p, &w)), || "▷ duality".into())?;
        // p◁(q◁s) = (pq)◁s and (s▷p)▷q = s▷(pq)
        ensure(left_residual(&p, &left_residual(&q, &s)) == left_residual(&conc(&p, &q), &s), || "◁ action".into())?;
        ensure(right_residual(&right_residual(&s, &p), &q) == right_residual(&s, &conc(&p, &q)), || "▷ action".into())?;
        // letters act as shuffle derivations on both sides
        let st = shuffle(&s, &t);
        let lhs = right_residual(&st, &x);
        let rhs = &shuffle(&right_residual(&s, &x), &t) + &shuffle(&s, &right_residual(&t, &x));
        ensure(lhs == rhs, || "▷x derivation".into())?;
        let lhs = left_residual(&x, &st);
        let rhs = &shuffle(&left_residual(&x, &s), &t) + &shuffle(&s, &left_residual(&x, &t));
        ensure(lhs == rhs, || "x◁ derivation".into())?;
    }
    for _ in 0..40 {
        let s = random_laurent(&mut rng);
        let t = random_laurent(&mut rng);
        for x in Letter::ALL {
            let lhs = delta_left(x, &shuffle_star(&s, &t));
            let rhs = &shuffle_star(&delta_left(x, &s), &t) + &shuffle_star(&s, &delta_left(x, &t));
            ensure(lhs == rhs, || "δ^l derivation".into())?;
            // δ^l_x agrees with the coefficient shift ⟨S | x w⟩
            let shifted = right_residual(&expand(&s, 4), &NCPoly::basis(Word::letter(x)));
            ensure(expand(&delta_left(x, &s), 3) == truncate(&shifted, 3), || "δ^l vs coefficients".into())?;
        }
    }
    Ok("shuffle/stuffle laws, 100 plane-star pairs, residual and δ^l identities".into())
}

fn c9_combinatorics() -> Check {
    let expected = [2usize, 1, 2, 3, 6, 9, 18, 30];
    let fast = lyndon_up_to(8);
    for (i, &count) in expected.iter().enumerate() {
        let n = i + 1;
        let brute = Word::all_of_length(n).filter(|w| (1..n).all(|k| *w < w.rotate(k))).count();
        let got = fast.iter().filter(|w| w.len() == n).count();
        ensure(brute == count && got == count, || format!("length {n}: brute {brute}, generated {got}"))?;
    }
    let mut checked = 0;
    for w in Word::all_up_to(8) {
        let f = clf_factorize(&w);
        let back = f.iter().fold(Word::EMPTY, |acc, x| acc.conc(x));
        ensure(back == w, || format!("{w} does not re-concatenate"))?;
        ensure(f.iter().all(Word::is_lyndon), || format!("{w}: non-Lyndon factor"))?;
        ensure(f.windows(2).all(|p| p[0] >= p[1]), || format!("{w}: factors not nonincreasing"))?;
        checked += 1;
    }
    Ok(format!("Lyndon counts 2,1,2,3,6,9,18,30; CLF on {checked} words"))
}

fn rank(mut rows: Vec<Vec<Rational>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, p);
        let pivot = rows[r][c].clone();
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = &rows[i][c] / &pivot;
                for j in c..cols {
                    let d = &f * &rows[r][j];
                    rows[i][j] -= d;
                }
            }
        }
        r += 1;
    }
    r
}

fn c10_independence() -> Check {
    let mut rng = rng(10);
    let mut params: Vec<(Rational, Rational)> = Vec::new();
    while params.len() < 5 {
        let p = (random_rational(&mut rng), random_rational(&mut rng));
        if !params.contains(&p) {
            params.push(p);
        }
    }
    let words: Vec<Word> = Word::all_up_to(4).collect();
    let rows: Vec<Vec<Rational>> = params
        .iter()
        .map(|(a, b)| {
            let e = expand(&plane_star(a.clone(), b.clone()), 4);
            words.iter().map(|w| e.coeff(w)).collect()
        })
        .collect();
    let r = rank(rows);
    ensure(r == 5, || format!("rank {r}"))?;
    Ok(format!("5 plane stars × {} words: rank 5", words.len()))
}

fn main() {
    let criteria: [(&str, fn() -> Check); 10] = [
        ("kernel generator", c1_kernel_generator),
        ("rewriting soundness", c2_rewriting_soundness),
        ("negative-index closed forms", c3_negative_closed_forms),
        ("Abel-limit desk check", c4_abel),
        ("discontinuity of ι0", c5_discontinuity),
        ("operator suite", c6_operators),
        ("morphism suite", c7_morphisms),
        ("algebra laws", c8_algebra_laws),
        ("combinatorics pins", c9_combinatorics),
        ("basis/independence proxy", c10_independence),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail} [{secs:.2}s]", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why} [{secs:.2}s]", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
