//! Surface syntax for mixed-domain terms.
//!
//! ```text
//! expr    := unary (BINOP unary)*            left associative, one tier
//! BINOP   := "(+)" | "(.)" | "(o)" | "~>" | "->>"
//! unary   := "L" unary | "D" unary | "~" unary | "neg" unary | primary
//! primary := SETLIT | "[" SETLIT "]" | "(" expr ")"
//! SETLIT  := atom+ | "0" | "S"
//! ```
//!
//! A bare `0` is the algebra's least class `[0]` and a bare `1` its greatest
//! class `[S]`; the empty subset itself is written `⊥`.

use std::fmt;

use serde::Serialize;

use crate::approx::Universe;
use crate::cera::{CeraModel, MixedElement};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum UnOp {
    /// `𝔏`
    L,
    /// `♦`
    D,
    /// `∼`
    Sim,
    /// `¬`, classes only.
    Neg,
}

impl UnOp {
    pub fn token(self) -> &'static str {
        match self {
            UnOp::L => "L",
            UnOp::D => "D",
            UnOp::Sim => "~",
            UnOp::Neg => "neg",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum BinOp {
    Oplus,
    Odot,
    Circ,
    Rightsquig,
    TwoHead,
}

impl BinOp {
    pub fn token(self) -> &'static str {
        match self {
            BinOp::Oplus => "(+)",
            BinOp::Odot => "(.)",
            BinOp::Circ => "(o)",
            BinOp::Rightsquig => "~>",
            BinOp::TwoHead => "->>",
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub enum ExprKind {
    Set(String),
    Class(String),
    Unary(UnOp, Box<Expr>),
    Binary(BinOp, Box<Expr>, Box<Expr>),
}

/// A term with the byte range it came from. Spans do not take part in equality.
#[derive(Debug, Clone, Serialize)]
pub struct Expr {
    pub kind: ExprKind,
    pub span: (usize, usize),
}

impl PartialEq for Expr {
    fn eq(&self, other: &Self) -> bool {
        use ExprKind::*;
        match (&self.kind, &other.kind) {
            (Set(a), Set(b)) | (Class(a), Class(b)) => a == b,
            (Unary(o, a), Unary(p, b)) => o == p && a == b,
            (Binary(o, a, c), Binary(p, b, d)) => o == p && a == b && c == d,
            _ => false,
        }
    }
}

impl Eq for Expr {}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ExprType {
    /// A subset.
    Type1,
    /// A rough class.
    Type2,
}

impl Expr {
    fn new(kind: ExprKind, span: (usize, usize)) -> Self {
        Self { kind, span }
    }

    pub fn set(s: &str) -> Self {
        Self::new(ExprKind::Set(s.into()), (0, 0))
    }

    pub fn class(s: &str) -> Self {
        Self::new(ExprKind::Class(s.into()), (0, 0))
    }

    pub fn unary(op: UnOp, e: Expr) -> Self {
        Self::new(ExprKind::Unary(op, Box::new(e)), (0, 0))
    }

    pub fn binary(op: BinOp, a: Expr, b: Expr) -> Self {
        Self::new(ExprKind::Binary(op, Box::new(a), Box::new(b)), (0, 0))
    }

    /// Static type, or the first `neg` applied to a subset.
    pub fn infer(&self) -> Result<ExprType> {
        use ExprType::*;
        Ok(match &self.kind {
            ExprKind::Set(_) => Type1,
            ExprKind::Class(_) => Type2,
            ExprKind::Unary(UnOp::Neg, e) => match e.infer()? {
                Type1 => return Err(neg_error(e)),
                Type2 => Type2,
            },
            ExprKind::Unary(_, e) => e.infer()?,
            ExprKind::Binary(op, a, b) => match (a.infer()?, b.infer()?) {
                (Type1, Type1) if *op == BinOp::TwoHead => Type2,
                (Type1, Type1) => Type1,
                _ => Type2,
            },
        })
    }
}

fn neg_error(operand: &Expr) -> Error {
    Error::UndefinedOnType1 {
        op: "neg",
        span: format!("{}..{} `{}`", operand.span.0, operand.span.1, operand),
    }
}

fn is_binary(e: &Expr) -> bool {
    matches!(e.kind, ExprKind::Binary(..))
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ExprKind::Set(s) if s == "0" => f.write_str("⊥"),
            ExprKind::Set(s) => f.write_str(s),
            ExprKind::Class(s) => write!(f, "[{s}]"),
            ExprKind::Unary(op, e) if is_binary(e) => write!(f, "{} ({e})", op.token()),
            ExprKind::Unary(op, e) => write!(f, "{} {e}", op.token()),
            ExprKind::Binary(op, a, b) if is_binary(b) => write!(f, "{a} {} ({b})", op.token()),
            ExprKind::Binary(op, a, b) => write!(f, "{a} {} {b}", op.token()),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Word(String),
    Un(UnOp),
    Bin(BinOp),
    LParen,
    RParen,
    LBrack,
    RBrack,
}

fn lex(text: &str) -> Result<Vec<(Tok, usize, usize)>> {
    let mut out = Vec::new();
    let mut i = 0;
    while i < text.len() {
        let rest = &text[i..];
        let c = rest.chars().next().unwrap();
        if c.is_whitespace() {
            i += c.len_utf8();
            continue;
        }
        let fixed: &[(&str, Tok)] = &[
            ("(+)", Tok::Bin(BinOp::Oplus)),
            ("(.)", Tok::Bin(BinOp::Odot)),
            ("(o)", Tok::Bin(BinOp::Circ)),
            ("~>", Tok::Bin(BinOp::Rightsquig)),
            ("->>", Tok::Bin(BinOp::TwoHead)),
            ("⊕", Tok::Bin(BinOp::Oplus)),
            ("⊙", Tok::Bin(BinOp::Odot)),
            ("∘", Tok::Bin(BinOp::Circ)),
            ("⇝", Tok::Bin(BinOp::Rightsquig)),
            ("↠", Tok::Bin(BinOp::TwoHead)),
            ("~", Tok::Un(UnOp::Sim)),
            ("∼", Tok::Un(UnOp::Sim)),
            ("¬", Tok::Un(UnOp::Neg)),
            ("⊥", Tok::Word("⊥".into())),
            ("(", Tok::LParen),
            (")", Tok::RParen),
            ("[", Tok::LBrack),
            ("]", Tok::RBrack),
        ];
        if let Some((s, t)) = fixed.iter().find(|(s, _)| rest.starts_with(s)) {
            out.push((t.clone(), i, i + s.len()));
            i += s.len();
            continue;
        }
        let len: usize = rest
            .chars()
            .take_while(|ch| ch.is_alphanumeric() || *ch == '_')
            .map(char::len_utf8)
            .sum();
        if len == 0 {
            return Err(Error::Parse {
                pos: i,
                msg: format!("unexpected character `{c}`"),
            });
        }
        let w = &rest[..len];
        let tok = match w {
            "L" => Tok::Un(UnOp::L),
            "D" => Tok::Un(UnOp::D),
            "neg" => Tok::Un(UnOp::Neg),
            _ => Tok::Word(w.to_string()),
        };
        out.push((tok, i, i + len));
        i += len;
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize, usize)>,
    at: usize,
    end: usize,
}

impl Parser {
    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |t| t.1)
    }

    fn err(&self, msg: &str) -> Error {
        let found = if self.at < self.toks.len() { "" } else { " (end of input)" };
        Error::Parse {
            pos: self.pos(),
            msg: format!("{msg}{found}"),
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        while let Some((Tok::Bin(op), _, _)) = self.toks.get(self.at).cloned() {
            self.at += 1;
            let rhs = self.unary()?;
            let span = (lhs.span.0, rhs.span.1);
            lhs = Expr::new(ExprKind::Binary(op, Box::new(lhs), Box::new(rhs)), span);
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr> {
        if let Some((Tok::Un(op), start, _)) = self.toks.get(self.at).cloned() {
            self.at += 1;
            let e = self.unary()?;
            let end = e.span.1;
            return Ok(Expr::new(ExprKind::Unary(op, Box::new(e)), (start, end)));
        }
        self.primary()
    }

    fn primary(&mut self) -> Result<Expr> {
        match self.toks.get(self.at).cloned() {
            Some((Tok::Word(w), s, e)) => {
                self.at += 1;
                let kind = match w.as_str() {
                    "0" => ExprKind::Class("0".into()),
                    "1" => ExprKind::Class("S".into()),
                    "⊥" => ExprKind::Set("0".into()),
                    _ => ExprKind::Set(w),
                };
                Ok(Expr::new(kind, (s, e)))
            }
            Some((Tok::LBrack, s, _)) => {
                self.at += 1;
                let Some((Tok::Word(w), _, _)) = self.toks.get(self.at).cloned() else {
                    return Err(self.err("expected a set literal inside `[ ]`"));
                };
                self.at += 1;
                let Some((Tok::RBrack, _, e)) = self.toks.get(self.at).cloned() else {
                    return Err(self.err("expected `]`"));
                };
                self.at += 1;
                Ok(Expr::new(ExprKind::Class(w), (s, e)))
            }
            Some((Tok::LParen, s, _)) => {
                self.at += 1;
                let inner = self.expr()?;
                let Some((Tok::RParen, _, e)) = self.toks.get(self.at).cloned() else {
                    return Err(self.err("expected `)`"));
                };
                self.at += 1;
                Ok(Expr { span: (s, e), ..inner })
            }
            _ => Err(self.err("expected a term")),
        }
    }
}

pub fn parse(text: &str) -> Result<Expr> {
    let mut p = Parser {
        toks: lex(text)?,
        at: 0,
        end: text.len(),
    };
    let e = p.expr()?;
    if p.at < p.toks.len() {
        return Err(p.err("unexpected token after term"));
    }
    Ok(e)
}

/// Checks every set literal against the universe.
pub fn check_atoms(e: &Expr, u: &Universe) -> Result<()> {
    match &e.kind {
        ExprKind::Set(s) | ExprKind::Class(s) => u.parse(s).map(|_| ()),
        ExprKind::Unary(_, a) => check_atoms(a, u),
        ExprKind::Binary(_, a, b) => check_atoms(a, u).and_then(|_| check_atoms(b, u)),
    }
}

pub fn eval(model: &CeraModel, e: &Expr) -> Result<MixedElement> {
    let sp = model.space();
    Ok(match &e.kind {
        ExprKind::Set(s) => MixedElement::Set(sp.parse(s)?),
        ExprKind::Class(s) => model.class_of(sp.parse(s)?),
        ExprKind::Unary(op, a) => {
            let v = eval(model, a)?;
            match op {
                UnOp::L => model.frak_l(&v),
                UnOp::D => model.blacklozenge(&v),
                UnOp::Sim => model.sim_neg(&v),
                UnOp::Neg if v.is_set() => return Err(neg_error(a)),
                UnOp::Neg => model.partial_neg(&v)?,
            }
        }
        ExprKind::Binary(op, a, b) => {
            let (x, y) = (eval(model, a)?, eval(model, b)?);
            match op {
                BinOp::Oplus => model.oplus(&x, &y),
                BinOp::Odot => model.odot(&x, &y),
                BinOp::Circ => model.circ(&x, &y),
                BinOp::Rightsquig => model.rightsquig(&x, &y),
                BinOp::TwoHead => model.two_head(&x, &y),
            }
        }
    })
}

/// Parses and evaluates in one go.
pub fn eval_str(model: &CeraModel, text: &str) -> Result<MixedElement> {
    let e = parse(text)?;
    check_atoms(&e, model.space().universe())?;
    eval(model, &e)
}
