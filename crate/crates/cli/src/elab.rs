//! Type checking and evaluation of expressions into kernel values.

use std::fmt;

use num_traits::{One, Zero};
use polystar::shuffle::{conc, conc_y, stuffle};
use polystar::star::{embed, plane_star, shuffle_star, star, Pretty};
use polystar::{NCPoly, Rational, StarSeries, StarTerm, YPoly, YWord};

use crate::error::CliError;
use crate::expr::{BinOp, Expr};

/// Result of elaborating an expression. Scalars live in both algebras.
#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    Scalar(Rational),
    X(StarSeries),
    Y(YPoly),
}

impl Value {
    /// The X-side series, coercing scalars.
    pub fn into_x(self, at: &Expr) -> Result<StarSeries, CliError> {
        match self {
            Value::Scalar(q) => Ok(polystar::star::constant(q)),
            Value::X(s) => Ok(s),
            Value::Y(_) => Err(CliError::ty("expected an X-expression, found a Y-expression", at)),
        }
    }

    /// The Y-side polynomial, coercing scalars.
    pub fn into_y(self, at: &Expr) -> Result<YPoly, CliError> {
        match self {
            Value::Scalar(q) => Ok(YPoly::term(YWord::empty(), q)),
            Value::Y(p) => Ok(p),
            Value::X(_) => Err(CliError::ty("expected a Y-expression, found an X-expression", at)),
        }
    }

    fn scale(self, c: &Rational) -> Value {
        match self {
            Value::Scalar(q) => Value::Scalar(q * c),
            Value::X(s) => Value::X(s.scale(c)),
            Value::Y(p) => Value::Y(p.scale(c)),
        }
    }
}

fn as_poly(s: &StarSeries) -> Option<NCPoly> {
    s.iter().map(|(t, c)| t.is_polynomial().then(|| (t.word, c.clone()))).collect()
}

fn additive(op: BinOp, a: Value, b: Value, at: &Expr) -> Result<Value, CliError> {
    let b = if op == BinOp::Sub { b.scale(&-Rational::one()) } else { b };
    Ok(match (a, b) {
        (Value::Scalar(p), Value::Scalar(q)) => Value::Scalar(p + q),
        (a @ Value::Y(_), b) | (b, a @ Value::Y(_)) => Value::Y(&a.into_y(at)? + &b.into_y(at)?),
        (a, b) => Value::X(&a.into_x(at)? + &b.into_x(at)?),
    })
}

/// Elaborates `e`, checking operand kinds and star preconditions.
pub fn elaborate(e: &Expr) -> Result<Value, CliError> {
    // long sums are left-deep; walk their spine without recursing
    let mut spine = Vec::new();
    let mut cur = e;
    while let Expr::Bin(op @ (BinOp::Add | BinOp::Sub), l, r) = cur {
        spine.push((*op, r, cur));
        cur = l;
    }
    let mut acc = elaborate_node(cur)?;
    for (op, r, whole) in spine.into_iter().rev() {
        acc = additive(op, acc, elaborate(r)?, whole)?;
    }
    Ok(acc)
}

fn elaborate_node(e: &Expr) -> Result<Value, CliError> {
    match e {
        Expr::Num(q) => Ok(Value::Scalar(q.clone())),
        Expr::Word(w) => Ok(Value::X(StarSeries::basis(StarTerm::word(*w)))),
        Expr::YWord(y) => Ok(Value::Y(YPoly::basis(y.clone()))),
        Expr::Neg(a) => Ok(elaborate(a)?.scale(&-Rational::one())),
        Expr::Bin(op, a, b) => {
            let (va, vb) = (elaborate(a)?, elaborate(b)?);
            match op {
                BinOp::Add | BinOp::Sub => additive(*op, va, vb, e),
                BinOp::Mul => match (va, vb) {
                    (Value::Scalar(q), v) | (v, Value::Scalar(q)) => Ok(v.scale(&q)),
                    _ => Err(CliError::ty("'*' needs a scalar operand", e)),
                },
                BinOp::Conc => match (va, vb) {
                    (Value::Scalar(q), v) | (v, Value::Scalar(q)) => Ok(v.scale(&q)),
                    (Value::Y(p), Value::Y(q)) => Ok(Value::Y(conc_y(&p, &q))),
                    (Value::X(s), Value::X(t)) => match (as_poly(&s), as_poly(&t)) {
                        (Some(p), Some(q)) => Ok(Value::X(embed(&conc(&p, &q)))),
                        _ => Err(CliError::ty("concatenation is only defined on polynomials", e)),
                    },
                    _ => Err(CliError::ty("cannot concatenate X- and Y-expressions", e)),
                },
                BinOp::Shuffle => match (va, vb) {
                    (Value::Scalar(p), Value::Scalar(q)) => Ok(Value::Scalar(p * q)),
                    (va, vb) => Ok(Value::X(shuffle_star(&va.into_x(a)?, &vb.into_x(b)?))),
                },
                BinOp::Stuffle => match (va, vb) {
                    (Value::Scalar(p), Value::Scalar(q)) => Ok(Value::Scalar(p * q)),
                    (va, vb) => Ok(Value::Y(stuffle(&va.into_y(a)?, &vb.into_y(b)?)?)),
                },
            }
        }
        Expr::Star(a) => {
            let s = elaborate(a)?.into_x(a)?;
            star(&s).map(Value::X).map_err(|err| match err {
                polystar::Error::StarUndefined => CliError::ty("star of an element with nonzero constant term", a),
                _ => CliError::ty("star is only defined on plane elements a0*w\"0\" + a1*w\"1\"", a),
            })
        }
        Expr::PlaneStar(a0, a1) => {
            let scalar = |x: &Expr| match elaborate(x)? {
                Value::Scalar(q) => Ok(q),
                _ => Err(CliError::ty("star parameters must be scalars", x)),
            };
            Ok(Value::X(plane_star(scalar(a0)?, scalar(a1)?)))
        }
    }
}

/// Canonical text form of a Y-polynomial, e.g. `2*y[2,1] - 1`.
pub struct PrettyY<'a>(pub &'a YPoly);

impl fmt::Display for PrettyY<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_zero() {
            return f.write_str("0");
        }
        for (i, (y, c)) in self.0.iter().enumerate() {
            let neg = *c < Rational::zero();
            let mag = if neg { -c } else { c.clone() };
            f.write_str(match (i, neg) {
                (0, true) => "-",
                (0, false) => "",
                (_, true) => " - ",
                (_, false) => " + ",
            })?;
            match (y.is_empty(), mag.is_one()) {
                (true, _) => write!(f, "{mag}")?,
                (false, true) => write!(f, "{y}")?,
                (false, false) => write!(f, "{mag}*{y}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Scalar(q) => write!(f, "{q}"),
            Value::X(s) => write!(f, "{}", Pretty(s)),
            Value::Y(p) => write!(f, "{}", PrettyY(p)),
        }
    }
}
