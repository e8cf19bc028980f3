//! Expression syntax: tokens, AST, parser and canonical printer.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::combinat::Permutation;
use crate::lincomb::Coeff;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Atom {
    H(Vec<usize>),
    P(Vec<usize>),
    X(Vec<usize>),
    M(Vec<usize>),
    Perm(Vec<usize>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BinOp {
    Add,
    Sub,
    /// `#`
    Heisenberg,
    /// `*`
    External,
    /// `.`
    Internal,
}

impl BinOp {
    pub fn symbol(self) -> &'static str {
        match self {
            BinOp::Add => "+",
            BinOp::Sub => "-",
            BinOp::Heisenberg => "#",
            BinOp::External => "*",
            BinOp::Internal => ".",
        }
    }

    fn is_additive(self) -> bool {
        matches!(self, BinOp::Add | BinOp::Sub)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Func {
    Delta,
    DeltaHeis,
    DeltaInt,
    Antipode,
    Pi,
    Psi,
    PsiInv,
    Phi,
    ToP,
    ToH,
    Embed,
}

impl Func {
    pub const ALL: [Func; 11] = [
        Func::Delta,
        Func::DeltaHeis,
        Func::DeltaInt,
        Func::Antipode,
        Func::Pi,
        Func::Psi,
        Func::PsiInv,
        Func::Phi,
        Func::ToP,
        Func::ToH,
        Func::Embed,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Func::Delta => "delta",
            Func::DeltaHeis => "delta_heis",
            Func::DeltaInt => "delta_int",
            Func::Antipode => "antipode",
            Func::Pi => "pi",
            Func::Psi => "psi",
            Func::PsiInv => "psi_inv",
            Func::Phi => "phi",
            Func::ToP => "to_p",
            Func::ToH => "to_h",
            Func::Embed => "embed",
        }
    }

    fn from_name(s: &str) -> Option<Func> {
        Func::ALL.into_iter().find(|f| f.name() == s)
    }

    /// Whether the function takes an optional truncation argument.
    fn takes_truncation(self) -> bool {
        matches!(self, Func::Antipode | Func::Phi | Func::Psi)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    /// A non-negative rational literal; signs are carried by [`Expr::Neg`].
    Num(Coeff),
    Atom(Atom),
    Neg(Box<Expr>),
    Bin(BinOp, Box<Expr>, Box<Expr>),
    Call(Func, Box<Expr>, Option<usize>),
}

/// A syntax error with its 1-based position and the tokens that would
/// have been accepted there.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub expected: Vec<String>,
    pub found: String,
    pub message: Option<String>,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at line {}, column {}: ", self.line, self.column)?;
        if let Some(m) = &self.message {
            write!(f, "{m}")?;
            if self.expected.is_empty() {
                return Ok(());
            }
            write!(f, "; ")?;
        }
        write!(f, "expected ")?;
        match self.expected.as_slice() {
            [one] => write!(f, "{one}")?,
            many => write!(f, "one of {}", many.join(", "))?,
        }
        write!(f, ", found {}", self.found)
    }
}

impl std::error::Error for ParseError {}

// ---------------------------------------------------------------------------
// Lexer

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(String),
    LBracket,
    RBracket,
    LParen,
    RParen,
    Comma,
    Plus,
    Minus,
    Hash,
    Star,
    Dot,
    Slash,
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("`{s}`"),
            Tok::Int(s) => format!("integer `{s}`"),
            Tok::Eof => "end of input".to_string(),
            t => format!("`{}`", t.text()),
        }
    }

    fn text(&self) -> &str {
        match self {
            Tok::LBracket => "[",
            Tok::RBracket => "]",
            Tok::LParen => "(",
            Tok::RParen => ")",
            Tok::Comma => ",",
            Tok::Plus => "+",
            Tok::Minus => "-",
            Tok::Hash => "#",
            Tok::Star => "*",
            Tok::Dot => ".",
            Tok::Slash => "/",
            Tok::Ident(s) | Tok::Int(s) => s,
            Tok::Eof => "",
        }
    }
}

#[derive(Clone, Debug)]
struct Spanned {
    tok: Tok,
    line: usize,
    column: usize,
}

fn lex(input: &str) -> Result<Vec<Spanned>, ParseError> {
    let mut out = Vec::new();
    let chars: Vec<char> = input.chars().collect();
    let (mut i, mut line, mut column) = (0, 1, 1);
    while i < chars.len() {
        let c = chars[i];
        let (l0, c0) = (line, column);
        if c == '\n' {
            i += 1;
            line += 1;
            column = 1;
            continue;
        }
        if c.is_whitespace() {
            i += 1;
            column += 1;
            continue;
        }
        let tok = if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            column += i - start;
            Tok::Int(chars[start..i].iter().collect())
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            column += i - start;
            Tok::Ident(chars[start..i].iter().collect())
        } else {
            let t = match c {
                '[' => Tok::LBracket,
                ']' => Tok::RBracket,
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                ',' => Tok::Comma,
                '+' => Tok::Plus,
                '-' => Tok::Minus,
                '#' => Tok::Hash,
                '*' => Tok::Star,
                '.' => Tok::Dot,
                '/' => Tok::Slash,
                other => {
                    return Err(ParseError {
                        line,
                        column,
                        expected: vec![],
                        found: format!("`{other}`"),
                        message: Some(format!("unexpected character `{other}`")),
                    })
                }
            };
            i += 1;
            column += 1;
            t
        };
        out.push(Spanned {
            tok,
            line: l0,
            column: c0,
        });
    }
    out.push(Spanned {
        tok: Tok::Eof,
        line,
        column,
    });
    Ok(out)
}

// ---------------------------------------------------------------------------
// Parser

const PRIMARY_START: &[&str] = &["`h[`", "`p[`", "`X[`", "`M[`", "`perm`", "a number", "`(`", "`-`", "a function name"];

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn bump(&mut self) -> Spanned {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error_here(&self, expected: &[&str], message: Option<String>) -> ParseError {
        let t = &self.toks[self.pos];
        ParseError {
            line: t.line,
            column: t.column,
            expected: expected.iter().map(|s| s.to_string()).collect(),
            found: t.tok.describe(),
            message,
        }
    }

    fn expect(&mut self, tok: Tok) -> Result<(), ParseError> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            let want = format!("`{}`", tok.text());
            Err(self.error_here(&[want.as_str()], None))
        }
    }

    fn sum(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.product()?;
        loop {
            let op = match self.peek() {
                Tok::Plus => BinOp::Add,
                Tok::Minus => BinOp::Sub,
                _ => return Ok(lhs),
            };
            self.bump();
            let rhs = self.product()?;
            lhs = Expr::Bin(op, Box::new(lhs), Box::new(rhs));
        }
    }

    fn product(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.unary()?;
        loop {
            let op = match self.peek() {
                Tok::Hash => BinOp::Heisenberg,
                Tok::Star => BinOp::External,
                Tok::Dot => BinOp::Internal,
                _ => return Ok(lhs),
            };
            self.bump();
            let rhs = self.unary()?;
            lhs = Expr::Bin(op, Box::new(lhs), Box::new(rhs));
        }
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        if *self.peek() == Tok::Minus {
            self.bump();
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.primary()
    }

    fn int_value(&mut self) -> Result<BigInt, ParseError> {
        match self.peek().clone() {
            Tok::Int(s) => {
                self.bump();
                Ok(s.parse().expect("digits"))
            }
            _ => Err(self.error_here(&["an integer"], None)),
        }
    }

    fn small_int(&mut self, what: &str) -> Result<usize, ParseError> {
        let start = self.pos;
        let v = self.int_value()?;
        usize::try_from(v).map_err(|_| {
            self.pos = start;
            self.error_here(&[], Some(format!("{what} is too large")))
        })
    }

    fn part_list(&mut self, positive: bool) -> Result<Vec<usize>, ParseError> {
        self.expect(Tok::LBracket)?;
        let mut parts = Vec::new();
        if *self.peek() == Tok::RBracket {
            self.bump();
            return Ok(parts);
        }
        loop {
            let at = self.pos;
            let v = self.small_int("part")?;
            if positive && v == 0 {
                self.pos = at;
                return Err(self.error_here(&["a positive integer"], Some("parts must be positive".into())));
            }
            parts.push(v);
            match self.peek() {
                Tok::Comma => {
                    self.bump();
                }
                Tok::RBracket => {
                    self.bump();
                    return Ok(parts);
                }
                _ => return Err(self.error_here(&["`,`", "`]`"], None)),
            }
        }
    }

    fn permutation(&mut self) -> Result<Vec<usize>, ParseError> {
        let at = self.pos;
        let image = match self.peek().clone() {
            Tok::Int(s) => {
                self.bump();
                s.chars().map(|c| c.to_digit(10).expect("digit") as usize).collect()
            }
            Tok::LBracket => self.part_list(false)?,
            _ => return Err(self.error_here(&["one-line digits", "`[`"], None)),
        };
        if Permutation::new(image.clone()).is_err() {
            self.pos = at;
            return Err(self.error_here(&[], Some("not a permutation in one-line form".into())));
        }
        Ok(image)
    }

    fn primary(&mut self) -> Result<Expr, ParseError> {
        match self.peek().clone() {
            Tok::Int(_) => {
                let num = self.int_value()?;
                let mut value = Coeff::from_integer(num);
                if *self.peek() == Tok::Slash {
                    self.bump();
                    let at = self.pos;
                    let den = self.int_value()?;
                    if den.is_zero() {
                        self.pos = at;
                        return Err(self.error_here(&["a non-zero denominator"], None));
                    }
                    value /= Coeff::from_integer(den);
                }
                Ok(Expr::Num(value))
            }
            Tok::LParen => {
                self.bump();
                let e = self.sum()?;
                self.expect(Tok::RParen)?;
                Ok(e)
            }
            Tok::Ident(name) => {
                self.bump();
                match name.as_str() {
                    "h" => Ok(Expr::Atom(Atom::H(self.part_list(true)?))),
                    "p" => Ok(Expr::Atom(Atom::P(self.part_list(true)?))),
                    "X" => Ok(Expr::Atom(Atom::X(self.part_list(true)?))),
                    "M" => Ok(Expr::Atom(Atom::M(self.part_list(true)?))),
                    "perm" => Ok(Expr::Atom(Atom::Perm(self.permutation()?))),
                    other => match Func::from_name(other) {
                        Some(f) => self.call(f),
                        None => {
                            self.pos -= 1;
                            Err(self.error_here(PRIMARY_START, Some(format!("unknown name `{other}`"))))
                        }
                    },
                }
            }
            _ => Err(self.error_here(PRIMARY_START, None)),
        }
    }

    fn call(&mut self, f: Func) -> Result<Expr, ParseError> {
        self.expect(Tok::LParen)?;
        let arg = self.sum()?;
        let mut n = None;
        if f.takes_truncation() && *self.peek() == Tok::Comma {
            self.bump();
            n = Some(self.small_int("truncation")?);
        }
        if *self.peek() != Tok::RParen {
            let want: &[&str] = if f.takes_truncation() && n.is_none() {
                &["`,`", "`)`"]
            } else {
                &["`)`"]
            };
            return Err(self.error_here(want, None));
        }
        self.bump();
        Ok(Expr::Call(f, Box::new(arg), n))
    }
}

/// Parses a whole expression; trailing input is an error.
pub fn parse(input: &str) -> Result<Expr, ParseError> {
    let toks = lex(input)?;
    let mut p = Parser { toks, pos: 0 };
    let e = p.sum()?;
    if *p.peek() != Tok::Eof {
        return Err(p.error_here(&["an operator", "end of input"], None));
    }
    Ok(e)
}

// ---------------------------------------------------------------------------
// Printer

fn write_list(f: &mut fmt::Formatter<'_>, parts: &[usize]) -> fmt::Result {
    write!(f, "[")?;
    for (i, p) in parts.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{p}")?;
    }
    write!(f, "]")
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (name, parts) = match self {
            Atom::H(v) => ("h", v),
            Atom::P(v) => ("p", v),
            Atom::X(v) => ("X", v),
            Atom::M(v) => ("M", v),
            Atom::Perm(v) => {
                if !v.is_empty() && v.len() <= 9 {
                    write!(f, "perm ")?;
                    return v.iter().try_for_each(|d| write!(f, "{d}"));
                }
                ("perm", v)
            }
        };
        write!(f, "{name}")?;
        write_list(f, parts)
    }
}

/// Binding strength: sums 0, products 1, negation 2, atoms 3.
fn level(e: &Expr) -> u8 {
    match e {
        Expr::Bin(op, ..) if op.is_additive() => 0,
        Expr::Bin(..) => 1,
        Expr::Neg(_) => 2,
        _ => 3,
    }
}

fn write_at(f: &mut fmt::Formatter<'_>, e: &Expr, min: u8) -> fmt::Result {
    if level(e) < min {
        write!(f, "({e})")
    } else {
        write!(f, "{e}")
    }
}

pub fn format_coeff(c: &Coeff) -> String {
    if c.denom().is_one() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Num(c) => write!(f, "{}", format_coeff(c)),
            Expr::Atom(a) => write!(f, "{a}"),
            Expr::Neg(e) => {
                write!(f, "-")?;
                write_at(f, e, 2)
            }
            Expr::Bin(op, l, r) => {
                let here = level(self);
                write_at(f, l, here)?;
                write!(f, " {} ", op.symbol())?;
                // left associative: an equal-level right operand needs parentheses
                write_at(f, r, here + 1)
            }
            Expr::Call(func, arg, n) => {
                write!(f, "{}({arg}", func.name())?;
                if let Some(n) = n {
                    write!(f, ", {n}")?;
                }
                write!(f, ")")
            }
        }
    }
}
