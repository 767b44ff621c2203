//! Command-line verbs.

use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use polystar::polylog::{
    discontinuity_demo, eval_li2, harmonic_sum, li_neg_closed_form, neg_taylor_coeff, EvalParams, Route,
};
use polystar::rewrite::{kernel_member, normal_form, normal_form_with};
use polystar::scalar::to_f64;
use polystar::words::{clf_factorize, lyndon_up_to, parse_composition};
use polystar::{Composition, Polarity, StarSeries, Word};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::elab::{elaborate, Value};
use crate::expr::{BinOp, Expr};
use crate::error::CliError;
use crate::parse::parse_expr;
use crate::report::{rational_json, Format, Report};

/// Exact shuffle-algebra and polylogarithm calculator.
#[derive(Parser, Debug)]
#[command(name = "polystar", version)]
pub struct Cli {
    /// Emit JSON.
    #[arg(long, global = true, conflicts_with = "csv")]
    pub json: bool,
    /// Emit CSV.
    #[arg(long, global = true)]
    pub csv: bool,
    /// Rewrite in a seeded random order instead of largest-measure-first.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    #[command(subcommand)]
    pub verb: Verb,
}

#[derive(Subcommand, Debug)]
pub enum Verb {
    /// Lyndon factorization of a word over {0,1}.
    Lyndon { word: String },
    /// Shuffle product of two X-expressions.
    Shuffle {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Stuffle product of two Y-expressions.
    Stuffle {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Normal form modulo the kernel generator.
    Nf {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Whether an expression reduces to zero.
    Kernel {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Numeric value of the polylogarithm image at a point.
    Eval {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        /// Point as `re` or `re,im`.
        #[arg(long, allow_hyphen_values = true)]
        z: String,
        #[arg(long, default_value_t = 1e-15)]
        eps: f64,
    },
    /// Closed form of Li^- as a polynomial in (1-z)^-1.
    Lineg {
        /// Composition such as `1,0`.
        s: String,
        #[arg(long, default_value = "rec")]
        route: String,
    },
    /// Exact harmonic sum H_s(N).
    Hsum { s: String, n: u64 },
    /// Taylor coefficients of Li^-_s up to z^N.
    TaylorNeg { s: String, n: u64 },
    /// Enumerate a family up to a bound.
    Table {
        kind: TableKind,
        bound: u64,
        /// Upper summation limit for `hsum` rows.
        #[arg(long, default_value_t = 10)]
        n: u64,
    },
    /// Images of the two sequences under iota_0, evaluated at z.
    DemoDiscontinuity {
        #[arg(long, default_value_t = 0.5)]
        z: f64,
        #[arg(long, default_value_t = 40)]
        n: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TableKind {
    Lyndon,
    Hsum,
    Lineg,
}

const TAYLOR_CHECK: u64 = 20;

fn parse_word(s: &str) -> Result<Word, CliError> {
    let body = s.strip_prefix("w\"").and_then(|r| r.strip_suffix('"')).unwrap_or(s);
    Word::from_str(body).map_err(|e| CliError::parse(1, 1, e.to_string()))
}

fn parse_comp(s: &str, polarity: Polarity) -> Result<Composition, CliError> {
    let body = s.trim();
    let body = body.strip_prefix('(').and_then(|r| r.strip_suffix(')')).unwrap_or(body);
    parse_composition(body, polarity).map_err(|e| CliError::parse(1, 1, e.to_string()))
}

fn parse_point(s: &str) -> Result<Complex64, CliError> {
    let bad = || CliError::parse(1, 1, format!("bad point {s:?}, expected re or re,im"));
    let mut it = s.split(',').map(|p| p.trim().parse::<f64>().map_err(|_| bad()));
    let re = it.next().ok_or_else(bad)??;
    let im = it.next().transpose()?.unwrap_or(0.0);
    if it.next().is_some() {
        return Err(bad());
    }
    Ok(Complex64::new(re, im))
}

fn x_value(src: &str) -> Result<StarSeries, CliError> {
    let e = parse_expr(src)?;
    elaborate(&e)?.into_x(&e)
}

fn series_report(v: &Value) -> Report {
    let text = v.to_string();
    match v {
        Value::Y(p) => {
            let terms: Vec<_> = p
                .iter()
                .map(|(y, c)| json!({"yword": y.indices(), "coeff": rational_json(c)}))
                .collect();
            let rows = p.iter().map(|(y, c)| vec![y.to_string(), c.to_string()]);
            Report::new(text).field("terms", json!(terms)).table(&["yword", "coeff"], rows)
        }
        Value::X(_) | Value::Scalar(_) => {
            let s = match v {
                Value::Scalar(q) => polystar::star::constant(q.clone()),
                Value::X(s) => s.clone(),
                Value::Y(_) => unreachable!(),
            };
            let terms: Vec<_> = s
                .iter()
                .map(|(t, c)| {
                    json!({"word": t.word.to_string(), "a0": rational_json(&t.a0), "a1": rational_json(&t.a1), "coeff": rational_json(c)})
                })
                .collect();
            let rows =
                s.iter().map(|(t, c)| vec![t.word.to_string(), t.a0.to_string(), t.a1.to_string(), c.to_string()]);
            Report::new(text).field("terms", json!(terms)).table(&["word", "a0", "a1", "coeff"], rows)
        }
    }
}

fn normalize(s: &StarSeries, seed: Option<u64>) -> Result<StarSeries, CliError> {
    Ok(match seed {
        None => normal_form(s)?,
        Some(seed) => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            normal_form_with(s, |pending| rng.gen_range(0..pending.len()))?.0
        }
    })
}

fn taylor_verified(s: &Composition, p: &polystar::polylog::DenPoly) -> bool {
    (0..=TAYLOR_CHECK).all(|n| p.taylor_coeff(n) == neg_taylor_coeff(s, n))
}

fn table(kind: TableKind, bound: u64, n: u64) -> Result<Report, CliError> {
    let mut rows: Vec<Vec<String>> = Vec::new();
    let mut json_rows = Vec::new();
    let header: &[&str] = match kind {
        TableKind::Lyndon => {
            for w in lyndon_up_to(bound as usize) {
                rows.push(vec![w.len().to_string(), w.to_string()]);
                json_rows.push(json!({"length": w.len(), "word": w.to_string()}));
            }
            &["length", "word"]
        }
        TableKind::Hsum => {
            let mut comps = vec![Composition::positive(&[])?];
            comps.extend(Composition::enumerate(Polarity::Positive, bound, bound as usize));
            for c in comps {
                let h = harmonic_sum(&c, n)?;
                rows.push(vec![c.to_string(), n.to_string(), h.to_string()]);
                json_rows.push(json!({"s": c.parts(), "n": n, "value": rational_json(&h)}));
            }
            &["s", "n", "value"]
        }
        TableKind::Lineg => {
            // depth ≥ 1, depth ≤ bound, weight + depth ≤ bound + 1
            let comps = Composition::enumerate(Polarity::NonNegative, bound, bound as usize)
                .into_iter()
                .filter(|c| c.depth() >= 1 && c.weight() + c.depth() as u64 <= bound + 1);
            for c in comps {
                let p = li_neg_closed_form(&c, Route::Recursion)?;
                let ok = taylor_verified(&c, &p);
                rows.push(vec![c.to_string(), p.to_string(), if ok { "verified" } else { "MISMATCH" }.into()]);
                let coeffs: Vec<_> = p.coeffs().iter().map(rational_json).collect();
                json_rows.push(json!({"s": c.parts(), "den_powers": coeffs, "verified": ok}));
            }
            &["s", "closed_form", "flag"]
        }
    };
    let text = rows.iter().map(|r| r.join("  ")).collect::<Vec<_>>().join("\n");
    let kind_name = format!("{kind:?}").to_lowercase();
    Ok(Report::new(text).field("kind", json!(kind_name)).field("rows", json!(json_rows)).table(header, rows))
}

/// Runs one verb.
pub fn execute(verb: &Verb, seed: Option<u64>) -> Result<Report, CliError> {
    match verb {
        Verb::Lyndon { word } => {
            let w = parse_word(word)?;
            let factors: Vec<String> = clf_factorize(&w).iter().map(|f| f.to_string()).collect();
            let text = factors.iter().map(|f| format!("({f})")).collect::<String>();
            let rows: Vec<_> = factors.iter().enumerate().map(|(i, f)| vec![i.to_string(), f.clone()]).collect();
            Ok(Report::new(text)
                .field("word", json!(w.to_string()))
                .field("factors", json!(factors))
                .field("lyndon", json!(w.is_lyndon()))
                .table(&["index", "factor"], rows))
        }
        Verb::Shuffle { a, b } | Verb::Stuffle { a, b } => {
            let op = if matches!(verb, Verb::Shuffle { .. }) { BinOp::Shuffle } else { BinOp::Stuffle };
            let e = Expr::bin(op, parse_expr(a)?, parse_expr(b)?);
            let v = match (op, elaborate(&e)?) {
                (BinOp::Shuffle, Value::Scalar(q)) => Value::X(polystar::star::constant(q)),
                (_, v) => v,
            };
            Ok(series_report(&v))
        }
        Verb::Nf { expr } => {
            let nf = normalize(&x_value(expr)?, seed)?;
            Ok(series_report(&Value::X(nf)))
        }
        Verb::Kernel { expr } => {
            let s = x_value(expr)?;
            let member = match seed {
                None => kernel_member(&s)?,
                Some(_) => normalize(&s, seed)?.is_zero(),
            };
            Ok(Report::new(member.to_string())
                .field("kernel", json!(member))
                .table(&["kernel"], [vec![member.to_string()]]))
        }
        Verb::Eval { expr, z, eps } => {
            let s = x_value(expr)?;
            let p = EvalParams { eps: *eps, ..EvalParams::new(parse_point(z)?) };
            let v = eval_li2(&s, &p)?;
            Ok(Report::new(format!("{} {}", v.re, v.im))
                .field("re", json!(v.re))
                .field("im", json!(v.im))
                .table(&["re", "im"], [vec![v.re.to_string(), v.im.to_string()]]))
        }
        Verb::Lineg { s, route } => {
            let c = parse_comp(s, Polarity::NonNegative)?;
            let r = Route::from_str(route).map_err(|e| CliError::parse(1, 1, e.to_string()))?;
            let p = li_neg_closed_form(&c, r)?;
            let coeffs: Vec<_> = p.coeffs().iter().map(rational_json).collect();
            let rows = p.coeffs().iter().enumerate().map(|(j, q)| vec![j.to_string(), q.to_string()]);
            Ok(Report::new(p.to_string()).field("den_powers", json!(coeffs)).table(&["j", "coeff"], rows))
        }
        Verb::Hsum { s, n } => {
            let c = parse_comp(s, Polarity::Positive)?;
            let h = harmonic_sum(&c, *n)?;
            let approx = to_f64(&h);
            Ok(Report::new(h.to_string())
                .field("value", json!(h.to_string()))
                .field("approx", json!(approx))
                .table(&["value", "approx"], [vec![h.to_string(), approx.to_string()]]))
        }
        Verb::TaylorNeg { s, n } => {
            let c = parse_comp(s, Polarity::NonNegative)?;
            let coeffs: Vec<_> = (0..=*n).map(|k| neg_taylor_coeff(&c, k)).collect();
            let text = coeffs.iter().enumerate().map(|(k, q)| format!("{k} {q}")).collect::<Vec<_>>().join("\n");
            let rows = coeffs.iter().enumerate().map(|(k, q)| vec![k.to_string(), q.to_string()]);
            let js: Vec<_> = coeffs.iter().map(rational_json).collect();
            Ok(Report::new(text).field("coeffs", json!(js)).table(&["n", "coeff"], rows))
        }
        Verb::Table { kind, bound, n } => table(*kind, *bound, *n),
        Verb::DemoDiscontinuity { z, n } => {
            let r = discontinuity_demo(*n, *z)?;
            let rows: Vec<Vec<String>> = r
                .rows
                .iter()
                .map(|x| vec![x.n.to_string(), x.f.to_string(), x.iota_f.to_string(), x.g.to_string(), x.iota_g.to_string()])
                .collect();
            let mut text = rows.iter().map(|r| r.join("  ")).collect::<Vec<_>>().join("\n");
            text.push_str(&format!("\nlimits  {}  {}", r.limit_iota_f, r.limit_iota_g));
            let js: Vec<_> = r
                .rows
                .iter()
                .map(|x| json!({"n": x.n, "f": x.f, "iota_f": x.iota_f, "g": x.g, "iota_g": x.iota_g}))
                .collect();
            Ok(Report::new(text)
                .field("z", json!(r.z))
                .field("rows", json!(js))
                .field("limit_iota_f", json!(r.limit_iota_f))
                .field("limit_iota_g", json!(r.limit_iota_g))
                .table(&["n", "f", "iota_f", "g", "iota_g"], rows))
        }
    }
}

/// Parses `args` (including the program name) and runs them: `(exit code, stdout, stderr)`.
pub fn run<I, T>(args: I) -> (i32, String, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let out = e.render().to_string();
            return if code == 0 { (0, out, String::new()) } else { (code, String::new(), out) };
        }
    };
    let fmt = match (cli.json, cli.csv) {
        (true, _) => Format::Json,
        (_, true) => Format::Csv,
        _ => Format::Text,
    };
    match execute(&cli.verb, cli.seed) {
        Ok(r) => (0, r.render(fmt), String::new()),
        Err(e) => (e.exit_code(), String::new(), format!("{e}\n")),
    }
}
