//! Lexer and recursive-descent parser for the declaration language.
//!
//! One statement per line; newlines inside brackets are ignored and `#`
//! starts a comment. `**` is accepted for `⊠`, `−` for `-`.

use std::fmt;

use theta_core::Exponent;

use crate::ast::{Command, Expr, Group, JacquetIndex, Pos, Stmt};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub pos: Pos,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.pos.line, self.pos.column, self.message)
    }
}

impl std::error::Error for ParseError {}

type PResult<T> = Result<T, ParseError>;

const STATEMENT_KEYWORDS: &[&str] = &[
    "char",
    "sc",
    "rep",
    "lift",
    "preimage",
    "dichotomy",
    "lparam",
    "adjoint",
    "generic",
    "classify",
    "compat",
    "satake",
    "jacquet",
];

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(i64),
    LParen,
    RParen,
    LBrace,
    RBrace,
    Comma,
    Semi,
    Eq,
    Star,
    Slash,
    Caret,
    Minus,
    Boxtimes,
    Newline,
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Int(n) => write!(f, "`{n}`"),
            Tok::Newline => f.write_str("end of line"),
            Tok::Eof => f.write_str("end of input"),
            other => {
                let s = match other {
                    Tok::LParen => "(",
                    Tok::RParen => ")",
                    Tok::LBrace => "{",
                    Tok::RBrace => "}",
                    Tok::Comma => ",",
                    Tok::Semi => ";",
                    Tok::Eq => "=",
                    Tok::Star => "*",
                    Tok::Slash => "/",
                    Tok::Caret => "^",
                    Tok::Minus => "-",
                    _ => "⊠",
                };
                write!(f, "`{s}`")
            }
        }
    }
}

fn lex(src: &str) -> PResult<Vec<(Tok, Pos)>> {
    let mut out = Vec::new();
    let mut depth = 0usize;
    let (mut line, mut column) = (1, 1);
    let mut chars = src.chars().peekable();
    while let Some(&c) = chars.peek() {
        let pos = Pos { line, column };
        let mut bump = |chars: &mut std::iter::Peekable<std::str::Chars<'_>>| {
            let c = chars.next();
            if c == Some('\n') {
                line += 1;
                column = 1;
            } else {
                column += 1;
            }
            c
        };
        let tok = match c {
            '\n' => {
                bump(&mut chars);
                if depth > 0 {
                    continue;
                }
                Tok::Newline
            }
            c if c.is_whitespace() => {
                bump(&mut chars);
                continue;
            }
            '#' => {
                while chars.peek().is_some_and(|&c| c != '\n') {
                    bump(&mut chars);
                }
                continue;
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let mut s = String::new();
                while let Some(&c) = chars.peek().filter(|c| c.is_ascii_alphanumeric() || **c == '_') {
                    s.push(c);
                    bump(&mut chars);
                }
                Tok::Ident(s)
            }
            c if c.is_ascii_digit() => {
                let mut s = String::new();
                while let Some(&c) = chars.peek().filter(|c| c.is_ascii_digit()) {
                    s.push(c);
                    bump(&mut chars);
                }
                let n = s.parse().map_err(|_| ParseError { pos, message: format!("integer `{s}` is too large") })?;
                Tok::Int(n)
            }
            '*' => {
                bump(&mut chars);
                if chars.peek() == Some(&'*') {
                    bump(&mut chars);
                    Tok::Boxtimes
                } else {
                    Tok::Star
                }
            }
            _ => {
                bump(&mut chars);
                match c {
                    '(' => {
                        depth += 1;
                        Tok::LParen
                    }
                    '{' => {
                        depth += 1;
                        Tok::LBrace
                    }
                    ')' | '}' => {
                        depth = depth.saturating_sub(1);
                        if c == ')' {
                            Tok::RParen
                        } else {
                            Tok::RBrace
                        }
                    }
                    ',' => Tok::Comma,
                    ';' => Tok::Semi,
                    '=' => Tok::Eq,
                    '/' => Tok::Slash,
                    '^' => Tok::Caret,
                    '-' | '−' => Tok::Minus,
                    '⊠' => Tok::Boxtimes,
                    other => return Err(ParseError { pos, message: format!("unexpected character `{other}`") }),
                }
            }
        };
        out.push((tok, pos));
    }
    out.push((Tok::Eof, Pos { line, column }));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, Pos)>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> Pos {
        self.toks[self.at].1
    }

    fn next(&mut self) -> (Tok, Pos) {
        let t = self.toks[self.at].clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn error<T>(&self, message: impl Into<String>) -> PResult<T> {
        Err(ParseError { pos: self.pos(), message: message.into() })
    }

    fn unexpected<T>(&self, wanted: &str) -> PResult<T> {
        self.error(format!("expected {wanted}, found {}", self.peek()))
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == t {
            self.next();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, t: &Tok) -> PResult<()> {
        if self.eat(t) {
            Ok(())
        } else {
            self.unexpected(&t.to_string())
        }
    }

    fn peek_keyword(&self, kw: &str) -> bool {
        matches!(self.peek(), Tok::Ident(s) if s == kw)
    }

    fn eat_keyword(&mut self, kw: &str) -> bool {
        if self.peek_keyword(kw) {
            self.next();
            true
        } else {
            false
        }
    }

    fn expect_keyword(&mut self, kw: &str) -> PResult<()> {
        if self.eat_keyword(kw) {
            Ok(())
        } else {
            self.unexpected(&format!("`{kw}`"))
        }
    }

    fn ident(&mut self) -> PResult<(String, Pos)> {
        match self.peek().clone() {
            Tok::Ident(s) => Ok((s, self.next().1)),
            _ => self.unexpected("a name"),
        }
    }

    fn int(&mut self) -> PResult<i64> {
        match self.peek().clone() {
            Tok::Int(n) => {
                self.next();
                Ok(n)
            }
            _ => self.unexpected("an integer"),
        }
    }

    fn small(&mut self) -> PResult<u32> {
        let pos = self.pos();
        let n = self.int()?;
        u32::try_from(n).map_err(|_| ParseError { pos, message: format!("{n} is out of range") })
    }

    fn end_of_statement(&mut self) -> PResult<()> {
        match self.peek() {
            Tok::Newline | Tok::Eof => {
                self.next();
                Ok(())
            }
            _ => self.unexpected("end of line"),
        }
    }

    fn statement(&mut self) -> PResult<Stmt> {
        let pos = self.pos();
        let Tok::Ident(head) = self.peek().clone() else {
            let e = self.expr()?;
            return Ok(Stmt::Eval(e, pos));
        };
        // an identifier followed by an operator is an expression; `(` only
        // makes a call when the head is not a statement keyword
        let followed_by_expr = match self.toks.get(self.at + 1).map(|t| &t.0) {
            Some(Tok::LParen) => !STATEMENT_KEYWORDS.contains(&head.as_str()),
            next => matches!(next, Some(Tok::Star | Tok::Slash | Tok::Caret | Tok::Boxtimes | Tok::Newline | Tok::Eof)),
        };
        if followed_by_expr {
            let e = self.expr()?;
            return Ok(Stmt::Eval(e, pos));
        }
        let stmt = match head.as_str() {
            "char" => {
                self.next();
                let (name, _) = self.ident()?;
                let order = if self.eat_keyword("order") { Some(self.small()?) } else { None };
                let unramified = self.eat_keyword("unramified");
                Stmt::Char { name, order, unramified, pos }
            }
            "sc" => {
                self.next();
                let (name, _) = self.ident()?;
                self.expect(&Tok::LBrace)?;
                self.expect_keyword("omega")?;
                self.expect(&Tok::Eq)?;
                let omega = self.expr()?;
                let mut selftwists = Vec::new();
                if self.eat(&Tok::Comma) {
                    self.expect_keyword("selftwists")?;
                    self.expect(&Tok::Eq)?;
                    self.expect(&Tok::LBrace)?;
                    if !self.eat(&Tok::RBrace) {
                        loop {
                            selftwists.push(self.expr()?);
                            if self.eat(&Tok::RBrace) {
                                break;
                            }
                            self.expect(&Tok::Comma)?;
                        }
                    }
                }
                self.expect(&Tok::RBrace)?;
                Stmt::Sc { name, omega, selftwists, pos }
            }
            "rep" => {
                self.next();
                let (name, _) = self.ident()?;
                self.expect(&Tok::Eq)?;
                Stmt::Rep { name, value: self.expr()?, pos }
            }
            _ => match self.command()? {
                Some(c) => Stmt::Command(c, pos),
                None => Stmt::Eval(self.expr()?, pos),
            },
        };
        Ok(stmt)
    }

    fn group(&mut self, allowed: &[Group]) -> PResult<Group> {
        for g in allowed {
            if self.eat_keyword(g.keyword()) {
                return Ok(*g);
            }
        }
        let names: Vec<_> = allowed.iter().map(|g| format!("`{}`", g.keyword())).collect();
        self.unexpected(&names.join(" or "))
    }

    fn command(&mut self) -> PResult<Option<Command>> {
        let Tok::Ident(head) = self.peek().clone() else { return Ok(None) };
        let unary: Option<fn(Expr) -> Command> = match head.as_str() {
            "dichotomy" => Some(Command::Dichotomy),
            "lparam" => Some(Command::Lparam),
            "adjoint" => Some(Command::Adjoint),
            "classify" => Some(Command::Classify),
            "compat" => Some(Command::Compat),
            _ => None,
        };
        if let Some(make) = unary {
            self.next();
            return Ok(Some(make(self.expr()?)));
        }
        let cmd = match head.as_str() {
            "lift" => {
                self.next();
                let g = self.group(&[Group::Gso22, Group::Gso40, Group::Gsp4])?;
                Command::Lift(g, self.expr()?)
            }
            "preimage" => {
                self.next();
                let g = self.group(&[Group::Gso22, Group::Gso40])?;
                Command::Preimage(g, self.expr()?)
            }
            "generic" => {
                self.next();
                self.expect(&Tok::Minus)?;
                self.expect_keyword("check")?;
                Command::GenericCheck(self.expr()?)
            }
            "satake" => {
                self.next();
                let a = self.expr()?;
                self.expect(&Tok::Comma)?;
                let b = self.expr()?;
                self.expect(&Tok::Comma)?;
                Command::Satake(a, b, self.expr()?)
            }
            "jacquet" => {
                self.next();
                self.jacquet()?
            }
            _ => return Ok(None),
        };
        Ok(Some(cmd))
    }

    fn jacquet(&mut self) -> PResult<Command> {
        let start = self.pos();
        let (mut m, mut n, mut index, mut r, mut isometry) = (None, None, None, None, false);
        while let Tok::Ident(key) = self.peek().clone() {
            let pos = self.pos();
            self.next();
            if key == "isometry" {
                isometry = true;
                continue;
            }
            self.expect(&Tok::Eq)?;
            let v = self.small()?;
            let slot = match key.as_str() {
                "m" => &mut m,
                "n" => &mut n,
                "r" => &mut r,
                "t" | "k" => {
                    if index.is_some() {
                        return Err(ParseError { pos, message: "give exactly one of `t=` and `k=`".into() });
                    }
                    index = Some(if key == "t" { JacquetIndex::T(v) } else { JacquetIndex::K(v) });
                    continue;
                }
                other => return Err(ParseError { pos, message: format!("unknown jacquet parameter `{other}`") }),
            };
            if slot.replace(v).is_some() {
                return Err(ParseError { pos, message: format!("`{key}` given twice") });
            }
        }
        let missing = |what: &str| ParseError { pos: start, message: format!("jacquet needs `{what}`") };
        Ok(Command::Jacquet {
            m: m.ok_or_else(|| missing("m="))?,
            n: n.ok_or_else(|| missing("n="))?,
            index: index.ok_or_else(|| missing("t= or k="))?,
            r,
            isometry,
        })
    }

    fn expr(&mut self) -> PResult<Expr> {
        let mut lhs = self.product()?;
        while self.eat(&Tok::Boxtimes) {
            lhs = Expr::Boxtimes(Box::new(lhs), Box::new(self.product()?));
        }
        Ok(lhs)
    }

    fn product(&mut self) -> PResult<Expr> {
        let mut lhs = self.power()?;
        loop {
            if self.eat(&Tok::Star) {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.power()?));
            } else if self.eat(&Tok::Slash) {
                lhs = Expr::Div(Box::new(lhs), Box::new(self.power()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn power(&mut self) -> PResult<Expr> {
        let base = self.atom()?;
        if !self.eat(&Tok::Caret) {
            return Ok(base);
        }
        let e = if self.eat(&Tok::LParen) {
            let neg = self.eat(&Tok::Minus);
            let num = self.int()?;
            let den = if self.eat(&Tok::Slash) { self.int()? } else { 1 };
            if den == 0 {
                return self.error("zero denominator");
            }
            self.expect(&Tok::RParen)?;
            Exponent::new(if neg { -num } else { num }, den)
        } else {
            let neg = self.eat(&Tok::Minus);
            let n = self.int()?;
            Exponent::from_integer(if neg { -n } else { n })
        };
        Ok(Expr::Pow(Box::new(base), e))
    }

    fn atom(&mut self) -> PResult<Expr> {
        match self.peek().clone() {
            Tok::Int(1) => {
                self.next();
                Ok(Expr::One)
            }
            Tok::Int(n) => self.error(format!("`{n}` is not a character; only `1` is")),
            Tok::LParen => {
                self.next();
                let e = self.expr()?;
                self.expect(&Tok::RParen)?;
                Ok(e)
            }
            Tok::Ident(_) => {
                let (name, pos) = self.ident()?;
                if !self.eat(&Tok::LParen) {
                    return Ok(Expr::Name(name, pos));
                }
                let mut args = Vec::new();
                let mut split = None;
                if !self.eat(&Tok::RParen) {
                    loop {
                        args.push(self.expr()?);
                        if self.eat(&Tok::RParen) {
                            break;
                        }
                        if split.is_none() && self.eat(&Tok::Semi) {
                            split = Some(args.len());
                            continue;
                        }
                        self.expect(&Tok::Comma)?;
                    }
                }
                Ok(Expr::Call { name, args, split, pos })
            }
            _ => self.unexpected("an expression"),
        }
    }
}

/// Parses a whole program.
pub fn parse_program(src: &str) -> PResult<Vec<Stmt>> {
    let mut p = Parser { toks: lex(src)?, at: 0 };
    let mut out = Vec::new();
    loop {
        while p.eat(&Tok::Newline) {}
        if *p.peek() == Tok::Eof {
            return Ok(out);
        }
        out.push(p.statement()?);
        p.end_of_statement()?;
    }
}

/// Parses exactly one statement.
pub fn parse_statement(src: &str) -> PResult<Stmt> {
    let mut stmts = parse_program(src)?;
    match stmts.len() {
        1 => Ok(stmts.remove(0)),
        n => Err(ParseError { pos: Pos { line: 1, column: 1 }, message: format!("expected one statement, found {n}") }),
    }
}

/// Parses a single expression.
pub fn parse_expr(src: &str) -> PResult<Expr> {
    let mut p = Parser { toks: lex(src)?, at: 0 };
    let e = p.expr()?;
    while p.eat(&Tok::Newline) {}
    if *p.peek() != Tok::Eof {
        return p.unexpected("end of input");
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn declarations() {
        let prog =
            parse_program("char chi0 order 2\nsc tau { omega = 1,\n  selftwists = {chi0} }\nrep pi = St(chi0, tau)\n")
                .unwrap();
        assert_eq!(prog.len(), 3);
        assert_eq!(prog[0], Stmt::Char { name: "chi0".into(), order: Some(2), unramified: false, pos: Pos::default() });
        assert_eq!(prog[1].to_string(), "sc tau { omega = 1, selftwists = {chi0} }");
        assert_eq!(prog[2].to_string(), "rep pi = St(chi0, tau)");
    }

    #[test]
    fn exponents_and_products() {
        let e = parse_expr("chi*eta^2*nu^(-1/2)").unwrap();
        assert_eq!(e.to_string(), "chi*eta^2*nu^(-1/2)");
        let e = parse_expr("a*(b/c)^-1").unwrap();
        assert_eq!(e.to_string(), "a*(b/c)^-1");
        assert_eq!(parse_expr("nu^(−1/2)").unwrap().to_string(), "nu^(-1/2)");
    }

    #[test]
    fn commands() {
        for src in [
            "lift gsp4 St_PGSp4(chi)",
            "preimage gso40 pi",
            "generic-check J_B(a, b; c)",
            "satake a, b, nu^2",
            "jacquet m=6 n=2 k=1 r=3 isometry",
            "lift gso22 tau ⊠ st(chi)",
        ] {
            assert_eq!(parse_statement(src).unwrap().to_string(), src);
        }
        assert_eq!(parse_statement("lift gso22 a ** b").unwrap().to_string(), "lift gso22 a ⊠ b");
        assert_eq!(parse_statement("lparam (a ⊠ b)/c").unwrap().to_string(), "lparam (a ⊠ b)/c");
        assert!(matches!(parse_statement("satake (a), b, c").unwrap(), Stmt::Command(..)));
    }

    #[test]
    fn errors_carry_positions() {
        let e = parse_program("char a\nrep x = St(a,, a)").unwrap_err();
        assert_eq!((e.pos.line, e.pos.column), (2, 14));
        let e = parse_program("x $ y").unwrap_err();
        assert_eq!((e.pos.line, e.pos.column), (1, 3));
        assert!(parse_statement("jacquet m=6 n=2").is_err());
        assert!(parse_statement("jacquet m=6 n=2 t=1 k=1").is_err());
    }
}
