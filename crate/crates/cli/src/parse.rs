//! Tokenizer and precedence-climbing parser.
//!
//! ```text
//! sum     := shuf (('+' | '-') shuf)*
//! shuf    := conc (('#' | '##') conc)*
//! conc    := mul ('.' mul)*
//! mul     := unary ('*' postfix)*
//! unary   := '-' unary | postfix
//! postfix := primary '*'*          -- '*' is binary when an operand follows
//! primary := num ('/' num)? | w"…" | y[…] | star(e) | star(e, e) | (e)
//! ```

use std::str::FromStr;

use polystar::{Rational, Word, YWord};

use crate::error::CliError;
use crate::expr::{BinOp, Expr};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(String),
    WordLit(String),
    Ident(String),
    Slash,
    Plus,
    Minus,
    Star,
    Dot,
    Hash,
    HashHash,
    LParen,
    RParen,
    LBrack,
    RBrack,
    Comma,
    Eof,
}

#[derive(Clone, Debug)]
struct Spanned {
    tok: Tok,
    line: usize,
    col: usize,
}

fn lex(src: &str) -> Result<Vec<Spanned>, CliError> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let (mut line, mut col) = (1, 1);
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let (l0, c0) = (line, col);
        let mut advance = |n: usize, i: &mut usize| {
            for _ in 0..n {
                if chars[*i] == '\n' {
                    line += 1;
                    col = 1;
                } else {
                    col += 1;
                }
                *i += 1;
            }
        };
        if c.is_whitespace() {
            advance(1, &mut i);
            continue;
        }
        let tok = match c {
            '0'..='9' => {
                let n = chars[i..].iter().take_while(|c| c.is_ascii_digit()).count();
                let s: String = chars[i..i + n].iter().collect();
                advance(n, &mut i);
                Tok::Num(s)
            }
            'w' if chars.get(i + 1) == Some(&'"') => {
                let body: String = chars[i + 2..].iter().take_while(|&&c| c != '"').collect();
                if i + 2 + body.chars().count() >= chars.len() {
                    return Err(CliError::parse(l0, c0, "unterminated word literal"));
                }
                if let Some(p) = body.chars().position(|c| c != '0' && c != '1') {
                    return Err(CliError::parse(l0, c0 + 2 + p, "word letters must be 0 or 1"));
                }
                let n = body.chars().count() + 3;
                advance(n, &mut i);
                Tok::WordLit(body)
            }
            c if c.is_ascii_alphabetic() => {
                let n = chars[i..].iter().take_while(|c| c.is_ascii_alphanumeric() || **c == '_').count();
                let s: String = chars[i..i + n].iter().collect();
                advance(n, &mut i);
                Tok::Ident(s)
            }
            '#' if chars.get(i + 1) == Some(&'#') => {
                advance(2, &mut i);
                Tok::HashHash
            }
            _ => {
                let t = match c {
                    '/' => Tok::Slash,
                    '+' => Tok::Plus,
                    '-' => Tok::Minus,
                    '*' => Tok::Star,
                    '.' => Tok::Dot,
                    '#' => Tok::Hash,
                    '(' => Tok::LParen,
                    ')' => Tok::RParen,
                    '[' => Tok::LBrack,
                    ']' => Tok::RBrack,
                    ',' => Tok::Comma,
                    _ => return Err(CliError::parse(l0, c0, format!("unexpected character {c:?}"))),
                };
                advance(1, &mut i);
                t
            }
        };
        out.push(Spanned { tok, line: l0, col: c0 });
    }
    out.push(Spanned { tok: Tok::Eof, line, col });
    Ok(out)
}

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn peek2(&self) -> &Tok {
        &self.toks[(self.pos + 1).min(self.toks.len() - 1)].tok
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].tok.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, msg: impl Into<String>) -> CliError {
        let s = &self.toks[self.pos];
        CliError::parse(s.line, s.col, msg)
    }

    fn expect(&mut self, t: Tok, what: &str) -> Result<(), CliError> {
        if *self.peek() == t {
            self.bump();
            Ok(())
        } else {
            Err(self.error(format!("expected {what}")))
        }
    }

    fn sum(&mut self) -> Result<Expr, CliError> {
        let mut e = self.shuf()?;
        loop {
            let op = match self.peek() {
                Tok::Plus => BinOp::Add,
                Tok::Minus => BinOp::Sub,
                _ => return Ok(e),
            };
            self.bump();
            e = Expr::bin(op, e, self.shuf()?);
        }
    }

    fn shuf(&mut self) -> Result<Expr, CliError> {
        let mut e = self.conc()?;
        loop {
            let op = match self.peek() {
                Tok::Hash => BinOp::Shuffle,
                Tok::HashHash => BinOp::Stuffle,
                _ => return Ok(e),
            };
            self.bump();
            e = Expr::bin(op, e, self.conc()?);
        }
    }

    fn conc(&mut self) -> Result<Expr, CliError> {
        let mut e = self.mul()?;
        while *self.peek() == Tok::Dot {
            self.bump();
            e = Expr::bin(BinOp::Conc, e, self.mul()?);
        }
        Ok(e)
    }

    fn mul(&mut self) -> Result<Expr, CliError> {
        let mut e = self.unary()?;
        while *self.peek() == Tok::Star {
            self.bump();
            e = Expr::bin(BinOp::Mul, e, self.postfix()?);
        }
        Ok(e)
    }

    fn unary(&mut self) -> Result<Expr, CliError> {
        if *self.peek() == Tok::Minus {
            self.bump();
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.postfix()
    }

    fn postfix(&mut self) -> Result<Expr, CliError> {
        let mut e = self.primary()?;
        while *self.peek() == Tok::Star && !starts_operand(self.peek2()) {
            self.bump();
            e = Expr::Star(Box::new(e));
        }
        Ok(e)
    }

    fn primary(&mut self) -> Result<Expr, CliError> {
        match self.peek().clone() {
            Tok::Num(p) => {
                self.bump();
                let mut q = Rational::from_str(&p).map_err(|_| self.error("bad number"))?;
                if *self.peek() == Tok::Slash {
                    self.bump();
                    let Tok::Num(d) = self.peek().clone() else {
                        return Err(self.error("expected denominator"));
                    };
                    if d.bytes().all(|b| b == b'0') {
                        return Err(self.error("zero denominator"));
                    }
                    self.bump();
                    q /= Rational::from_str(&d).map_err(|_| self.error("bad number"))?;
                }
                Ok(Expr::Num(q))
            }
            Tok::WordLit(s) => {
                let w = Word::from_str(&s).map_err(|e| self.error(e.to_string()))?;
                self.bump();
                Ok(Expr::Word(w))
            }
            Tok::Ident(id) if id == "y" => {
                self.bump();
                self.expect(Tok::LBrack, "'[' after y")?;
                let mut idx = Vec::new();
                if *self.peek() != Tok::RBrack {
                    loop {
                        let Tok::Num(n) = self.peek().clone() else {
                            return Err(self.error("expected a letter index"));
                        };
                        idx.push(n.parse::<u32>().map_err(|_| self.error("index too large"))?);
                        self.bump();
                        if *self.peek() != Tok::Comma {
                            break;
                        }
                        self.bump();
                    }
                }
                self.expect(Tok::RBrack, "']'")?;
                Ok(Expr::YWord(YWord(idx)))
            }
            Tok::Ident(id) if id == "star" => {
                self.bump();
                self.expect(Tok::LParen, "'(' after star")?;
                let a = self.sum()?;
                let e = if *self.peek() == Tok::Comma {
                    self.bump();
                    Expr::PlaneStar(Box::new(a), Box::new(self.sum()?))
                } else {
                    Expr::Star(Box::new(a))
                };
                self.expect(Tok::RParen, "')'")?;
                Ok(e)
            }
            Tok::Ident(id) => Err(self.error(format!("unknown identifier {id:?}"))),
            Tok::LParen => {
                self.bump();
                let e = self.sum()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(e)
            }
            Tok::Eof => Err(self.error("unexpected end of input")),
            t => Err(self.error(format!("unexpected {}", describe(&t)))),
        }
    }
}

fn starts_operand(t: &Tok) -> bool {
    matches!(t, Tok::Num(_) | Tok::WordLit(_) | Tok::Ident(_) | Tok::LParen)
}

fn describe(t: &Tok) -> &'static str {
    match t {
        Tok::Slash => "'/'",
        Tok::Plus => "'+'",
        Tok::Minus => "'-'",
        Tok::Star => "'*'",
        Tok::Dot => "'.'",
        Tok::Hash => "'#'",
        Tok::HashHash => "'##'",
        Tok::RParen => "')'",
        Tok::LParen => "'('",
        Tok::LBrack => "'['",
        Tok::RBrack => "']'",
        Tok::Comma => "','",
        _ => "token",
    }
}

/// Parses a full expression.
pub fn parse_expr(src: &str) -> Result<Expr, CliError> {
    let mut p = Parser { toks: lex(src)?, pos: 0 };
    let e = p.sum()?;
    if *p.peek() != Tok::Eof {
        return Err(p.error(format!("unexpected {} after expression", describe(p.peek()))));
    }
    Ok(e)
}
