//! Expression trees and their canonical text form.

use std::fmt;

use polystar::{Rational, Word, YWord};

/// Binary operators, loosest first.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BinOp {
    Add,
    Sub,
    Shuffle,
    Stuffle,
    Conc,
    Mul,
}

impl BinOp {
    fn prec(self) -> u8 {
        match self {
            BinOp::Add | BinOp::Sub => 1,
            BinOp::Shuffle | BinOp::Stuffle => 2,
            BinOp::Conc => 3,
            BinOp::Mul => 4,
        }
    }

    fn symbol(self) -> &'static str {
        match self {
            BinOp::Add => " + ",
            BinOp::Sub => " - ",
            BinOp::Shuffle => " # ",
            BinOp::Stuffle => " ## ",
            BinOp::Conc => ".",
            BinOp::Mul => "*",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    /// Non-negative rational literal.
    Num(Rational),
    Word(Word),
    YWord(YWord),
    Neg(Box<Expr>),
    Bin(BinOp, Box<Expr>, Box<Expr>),
    /// Kleene star, written `e*` or `star(e)`.
    Star(Box<Expr>),
    /// `star(a0,a1)`.
    PlaneStar(Box<Expr>, Box<Expr>),
}

const NEG_PREC: u8 = 5;
const ATOM_PREC: u8 = 7;

impl Expr {
    pub fn bin(op: BinOp, a: Expr, b: Expr) -> Expr {
        Expr::Bin(op, Box::new(a), Box::new(b))
    }

    fn prec(&self) -> u8 {
        match self {
            Expr::Bin(op, ..) => op.prec(),
            Expr::Neg(_) => NEG_PREC,
            _ => ATOM_PREC,
        }
    }

    fn fmt_at(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        if self.prec() < min {
            f.write_str("(")?;
            self.fmt_at(f, 0)?;
            return f.write_str(")");
        }
        match self {
            Expr::Num(q) => write!(f, "{q}"),
            Expr::Word(w) => write!(f, "w\"{w}\""),
            Expr::YWord(y) => write!(f, "{y}"),
            Expr::Neg(e) => {
                f.write_str("-")?;
                e.fmt_at(f, NEG_PREC)
            }
            Expr::Bin(op, a, b) => {
                a.fmt_at(f, op.prec())?;
                f.write_str(op.symbol())?;
                // `x*-y` would read as `x*` minus `y`
                let right = if *op == BinOp::Mul { ATOM_PREC } else { op.prec() + 1 };
                b.fmt_at(f, right)
            }
            Expr::Star(e) => {
                f.write_str("star(")?;
                e.fmt_at(f, 0)?;
                f.write_str(")")
            }
            Expr::PlaneStar(a, b) => {
                f.write_str("star(")?;
                a.fmt_at(f, 0)?;
                f.write_str(",")?;
                b.fmt_at(f, 0)?;
                f.write_str(")")
            }
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_at(f, 0)
    }
}
