//! Syntax tree of the declaration language, and its canonical printer.
//!
//! Printing then reparsing yields an identical tree; source positions do not
//! take part in equality.

use std::fmt;

use theta_core::Exponent;

/// A 1-based source position.
#[derive(Clone, Copy, Debug, Default)]
pub struct Pos {
    pub line: usize,
    pub column: usize,
}

impl PartialEq for Pos {
    fn eq(&self, _: &Pos) -> bool {
        true
    }
}

impl Eq for Pos {}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.column)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    /// `1`
    One,
    Name(String, Pos),
    Pow(Box<Expr>, Exponent),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    /// `f(a, b)` or `f(a, b; c)`; `split` is the number of arguments before `;`.
    Call {
        name: String,
        args: Vec<Expr>,
        split: Option<usize>,
        pos: Pos,
    },
    /// `a ⊠ b`
    Boxtimes(Box<Expr>, Box<Expr>),
}

impl Expr {
    pub fn name(s: &str) -> Expr {
        Expr::Name(s.to_string(), Pos::default())
    }

    pub fn call(name: &str, args: Vec<Expr>) -> Expr {
        Expr::Call { name: name.to_string(), args, split: None, pos: Pos::default() }
    }

    pub fn pos(&self) -> Option<Pos> {
        match self {
            Expr::Name(_, p) | Expr::Call { pos: p, .. } => Some(*p),
            Expr::Pow(x, _) | Expr::Mul(x, _) | Expr::Div(x, _) | Expr::Boxtimes(x, _) => x.pos(),
            Expr::One => None,
        }
    }

    fn is_atom(&self) -> bool {
        matches!(self, Expr::One | Expr::Name(..) | Expr::Call { .. })
    }
}

/// Which GSO group a lift or preimage refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Group {
    Gso22,
    Gso40,
    Gsp4,
}

impl Group {
    pub fn keyword(self) -> &'static str {
        match self {
            Group::Gso22 => "gso22",
            Group::Gso40 => "gso40",
            Group::Gsp4 => "gsp4",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum JacquetIndex {
    /// Orthogonal side, along `P(X_t)`.
    T(u32),
    /// Symplectic side, along `Q(Y_k)`.
    K(u32),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Command {
    Lift(Group, Expr),
    Preimage(Group, Expr),
    Dichotomy(Expr),
    Lparam(Expr),
    Adjoint(Expr),
    GenericCheck(Expr),
    Classify(Expr),
    Compat(Expr),
    Satake(Expr, Expr, Expr),
    Jacquet { m: u32, n: u32, index: JacquetIndex, r: Option<u32>, isometry: bool },
}

impl Command {
    pub fn operation(&self) -> &'static str {
        match self {
            Command::Lift(..) => "lift",
            Command::Preimage(..) => "preimage",
            Command::Dichotomy(_) => "dichotomy",
            Command::Lparam(_) => "lparam",
            Command::Adjoint(_) => "adjoint",
            Command::GenericCheck(_) => "generic-check",
            Command::Classify(_) => "classify",
            Command::Compat(_) => "compat",
            Command::Satake(..) => "satake",
            Command::Jacquet { .. } => "jacquet",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Stmt {
    Char { name: String, order: Option<u32>, unramified: bool, pos: Pos },
    Sc { name: String, omega: Expr, selftwists: Vec<Expr>, pos: Pos },
    Rep { name: String, value: Expr, pos: Pos },
    Command(Command, Pos),
    Eval(Expr, Pos),
}

impl Stmt {
    pub fn pos(&self) -> Pos {
        match self {
            Stmt::Char { pos, .. } | Stmt::Sc { pos, .. } | Stmt::Rep { pos, .. } => *pos,
            Stmt::Command(_, p) | Stmt::Eval(_, p) => *p,
        }
    }
}

pub(crate) fn fmt_exponent(f: &mut fmt::Formatter<'_>, e: Exponent) -> fmt::Result {
    if e.is_integer() {
        write!(f, "^{}", e.numer())
    } else {
        write!(f, "^({}/{})", e.numer(), e.denom())
    }
}

fn fmt_operand(f: &mut fmt::Formatter<'_>, x: &Expr, parens: bool) -> fmt::Result {
    if parens {
        write!(f, "({x})")
    } else {
        write!(f, "{x}")
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let loose = |x: &Expr| matches!(x, Expr::Boxtimes(..));
        let product_rhs = |x: &Expr| matches!(x, Expr::Mul(..) | Expr::Div(..) | Expr::Boxtimes(..));
        match self {
            Expr::One => f.write_str("1"),
            Expr::Name(n, _) => f.write_str(n),
            Expr::Pow(x, e) => {
                fmt_operand(f, x, !x.is_atom())?;
                fmt_exponent(f, *e)
            }
            Expr::Mul(a, b) | Expr::Div(a, b) => {
                fmt_operand(f, a, loose(a))?;
                f.write_str(if matches!(self, Expr::Mul(..)) { "*" } else { "/" })?;
                fmt_operand(f, b, product_rhs(b))
            }
            Expr::Call { name, args, split, .. } => {
                write!(f, "{name}(")?;
                for (i, a) in args.iter().enumerate() {
                    if i > 0 {
                        f.write_str(if Some(i) == *split { "; " } else { ", " })?;
                    }
                    write!(f, "{a}")?;
                }
                f.write_str(")")
            }
            Expr::Boxtimes(a, b) => {
                write!(f, "{a} ⊠ ")?;
                fmt_operand(f, b, loose(b))
            }
        }
    }
}

impl fmt::Display for Command {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Command::Lift(g, x) => write!(f, "lift {} {x}", g.keyword()),
            Command::Preimage(g, x) => write!(f, "preimage {} {x}", g.keyword()),
            Command::Satake(a, b, c) => write!(f, "satake {a}, {b}, {c}"),
            Command::Jacquet { m, n, index, r, isometry } => {
                write!(f, "jacquet m={m} n={n}")?;
                match index {
                    JacquetIndex::T(t) => write!(f, " t={t}")?,
                    JacquetIndex::K(k) => write!(f, " k={k}")?,
                }
                if let Some(r) = r {
                    write!(f, " r={r}")?;
                }
                if *isometry {
                    f.write_str(" isometry")?;
                }
                Ok(())
            }
            Command::Dichotomy(x)
            | Command::Lparam(x)
            | Command::Adjoint(x)
            | Command::GenericCheck(x)
            | Command::Classify(x)
            | Command::Compat(x) => write!(f, "{} {x}", self.operation()),
        }
    }
}

impl fmt::Display for Stmt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Stmt::Char { name, order, unramified, .. } => {
                write!(f, "char {name}")?;
                if let Some(o) = order {
                    write!(f, " order {o}")?;
                }
                if *unramified {
                    f.write_str(" unramified")?;
                }
                Ok(())
            }
            Stmt::Sc { name, omega, selftwists, .. } => {
                write!(f, "sc {name} {{ omega = {omega}")?;
                if !selftwists.is_empty() {
                    f.write_str(", selftwists = {")?;
                    for (i, x) in selftwists.iter().enumerate() {
                        if i > 0 {
                            f.write_str(", ")?;
                        }
                        write!(f, "{x}")?;
                    }
                    f.write_str("}")?;
                }
                f.write_str(" }")
            }
            Stmt::Rep { name, value, .. } => write!(f, "rep {name} = {value}"),
            Stmt::Command(c, _) => write!(f, "{c}"),
            Stmt::Eval(x, _) => write!(f, "{x}"),
        }
    }
}
