//! Evaluation of parsed statements against a session of declarations.

use std::collections::BTreeMap;
use std::fmt;

use serde_json::{json, Value as Json};
use theta_core::jacquet::{filtration, FiltrationSpec, Side};
use theta_core::langlands::{
    adjoint, check_parameter_compat, check_unramified_transfer, generic_iff_holomorphic, has_pole_at_one, iota,
    lparam_gl2, lparam_gso33, lparam_gsp4, LParameter, SatakeClass,
};
use theta_core::repdata::{
    canonicalize_gsp4, classify_standard_module, gsp4_is_generic, gsp4_is_tempered_ng, jl, jl_inverse, Classified,
    DRep, GSp4Rep, Gl2Rep, Gso22Rep, Gso33Rep, Gso40Rep, ScOrigin, ScToken, StandardModule,
};
use theta_core::theta::{
    central_character_law, dichotomy, theta_22_preimage, theta_22_to_gsp4, theta_40_preimage, theta_40_to_gsp4,
    theta_gsp4_to_33,
};
use theta_core::{Character, Error as CoreError, Exponent, Symbol};

use crate::ast::{Command, Expr, Group, JacquetIndex, Pos, Stmt};
use crate::parse::ParseError;

/// Names with a fixed meaning; they cannot be declared.
pub const RESERVED: &[&str] = &[
    "char",
    "sc",
    "rep",
    "order",
    "unramified",
    "omega",
    "selftwists",
    "lift",
    "preimage",
    "dichotomy",
    "lparam",
    "adjoint",
    "generic",
    "check",
    "classify",
    "compat",
    "satake",
    "jacquet",
    "isometry",
    "gso22",
    "gso40",
    "gsp4",
    "nu",
    "st",
    "PS",
    "J",
    "one",
    "twist",
    "D",
    "JL",
    "SC",
    "St",
    "Sp",
    "St_PGSp4",
    "pi_gen",
    "pi_ng",
    "J_QZ",
    "J_PY",
    "J_B",
    "I_QZ",
    "I_PY",
    "I_B",
    "theta",
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvalError {
    pub pos: Pos,
    pub code: &'static str,
    pub message: String,
}

impl EvalError {
    fn new(pos: Pos, code: &'static str, message: impl Into<String>) -> Self {
        EvalError { pos, code, message: message.into() }
    }

    fn core(pos: Pos, e: CoreError) -> Self {
        EvalError::new(pos, e.code(), e.to_string())
    }
}

impl From<ParseError> for EvalError {
    fn from(e: ParseError) -> Self {
        EvalError { pos: e.pos, code: "syntax_error", message: e.message }
    }
}

impl fmt::Display for EvalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {} ({})", self.pos.line, self.pos.column, self.message, self.code)
    }
}

impl std::error::Error for EvalError {}

type EResult<T> = Result<T, EvalError>;

/// A value of the language.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Char(Character),
    Gl2(Gl2Rep),
    D(DRep),
    Gsp4(GSp4Rep),
    Gso22(Gso22Rep),
    Gso40(Gso40Rep),
    Gso33(Gso33Rep),
    Standard(StandardModule),
    /// The zero representation, the image of a vanishing lift.
    Zero,
}

impl Value {
    pub fn kind(&self) -> &'static str {
        match self {
            Value::Char(_) => "character",
            Value::Gl2(_) => "GL2",
            Value::D(_) => "D",
            Value::Gsp4(_) => "GSp4",
            Value::Gso22(_) => "GSO(2,2)",
            Value::Gso40(_) => "GSO(4,0)",
            Value::Gso33(_) => "GSO(3,3)",
            Value::Standard(_) => "standard module",
            Value::Zero => "zero",
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Char(x) => write!(f, "{x}"),
            Value::Gl2(x) => write!(f, "{x}"),
            Value::D(x) => write!(f, "{x}"),
            Value::Gsp4(x) => write!(f, "{x}"),
            Value::Gso22(x) => write!(f, "{x}"),
            Value::Gso40(x) => write!(f, "{x}"),
            Value::Gso33(x) => write!(f, "{x}"),
            Value::Standard(x) => write!(f, "{x}"),
            Value::Zero => f.write_str("0"),
        }
    }
}

#[derive(Clone, Debug)]
enum Binding {
    Symbol(Symbol),
    Token(ScToken),
    Value(Box<Value>),
}

/// The result of one command or expression statement.
#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub input: String,
    pub operation: &'static str,
    pub output: Json,
    pub provenance: Option<String>,
    pub checks: Vec<(String, bool)>,
    /// One-line human rendering.
    pub summary: String,
}

impl Outcome {
    pub fn all_checks_pass(&self) -> bool {
        self.checks.iter().all(|(_, ok)| *ok)
    }
}

/// Declared symbols, supercuspidal tokens and named representations.
#[derive(Clone, Debug, Default)]
pub struct Session {
    names: BTreeMap<String, Binding>,
    history: Vec<Stmt>,
}

fn char_json(c: &Character) -> Json {
    Json::String(c.to_string())
}

fn exponent_json(e: Option<Exponent>) -> Json {
    match e {
        Some(e) if e.is_integer() => Json::String(e.numer().to_string()),
        Some(e) => Json::String(format!("{}/{}", e.numer(), e.denom())),
        None => Json::Null,
    }
}

fn opt_json<T: fmt::Display>(x: Option<&T>) -> Json {
    x.map_or(Json::Null, |v| Json::String(v.to_string()))
}

pub fn lparam_json(phi: &LParameter) -> Json {
    let pieces: Vec<Json> = phi
        .pieces()
        .iter()
        .map(|p| json!({"core": p.core().to_string(), "twist": p.twist().to_string(), "r": p.r()}))
        .collect();
    json!({
        "pieces": pieces,
        "sim": opt_json(phi.sim()),
        "det": phi.det().to_string(),
        "dim": phi.dim(),
    })
}

impl Session {
    pub fn new() -> Self {
        Session::default()
    }

    /// Statements accepted so far.
    pub fn history(&self) -> &[Stmt] {
        &self.history
    }

    fn declare(&mut self, name: &str, pos: Pos, b: Binding) -> EResult<()> {
        if RESERVED.contains(&name) {
            return Err(EvalError::new(pos, "reserved_name", format!("`{name}` is reserved")));
        }
        if self.names.contains_key(name) {
            return Err(EvalError::new(pos, "shadowing", format!("`{name}` is already declared")));
        }
        self.names.insert(name.to_string(), b);
        Ok(())
    }

    /// Runs one statement: declarations return `None`.
    pub fn execute(&mut self, stmt: &Stmt) -> EResult<Option<Outcome>> {
        let pos = stmt.pos();
        let out = match stmt {
            Stmt::Char { name, order, unramified, .. } => {
                let sym = Symbol::new(name, *order, *unramified).map_err(|e| EvalError::core(pos, e))?;
                self.declare(name, pos, Binding::Symbol(sym))?;
                None
            }
            Stmt::Sc { name, omega, selftwists, .. } => {
                let omega = self.character(omega)?;
                let gens = selftwists.iter().map(|x| self.character(x)).collect::<EResult<Vec<_>>>()?;
                let token = ScToken::generated(name, omega, &gens).map_err(|e| EvalError::core(pos, e))?;
                self.declare(name, pos, Binding::Token(token))?;
                None
            }
            Stmt::Rep { name, value, .. } => {
                let v = self.eval(value)?;
                self.declare(name, pos, Binding::Value(Box::new(v)))?;
                None
            }
            Stmt::Command(c, _) => Some(self.command(c, pos)?),
            Stmt::Eval(e, _) => {
                let v = self.eval(e)?;
                Some(Outcome {
                    input: stmt.to_string(),
                    operation: "eval",
                    output: json!({"kind": v.kind(), "value": v.to_string()}),
                    provenance: None,
                    checks: Vec::new(),
                    summary: v.to_string(),
                })
            }
        };
        self.history.push(stmt.clone());
        Ok(out.map(|mut o| {
            o.input = stmt.to_string();
            o
        }))
    }

    /// Parses and runs a whole program, stopping at the first error.
    pub fn run(&mut self, src: &str) -> EResult<Vec<Outcome>> {
        let prog = crate::parse::parse_program(src)?;
        let mut out = Vec::new();
        for s in &prog {
            out.extend(self.execute(s)?);
        }
        Ok(out)
    }

    fn character(&self, e: &Expr) -> EResult<Character> {
        match self.eval(e)? {
            Value::Char(c) => Ok(c),
            other => Err(type_error(e, "a character", &other)),
        }
    }

    fn gl2(&self, e: &Expr) -> EResult<Gl2Rep> {
        match self.eval(e)? {
            Value::Gl2(r) => Ok(r),
            other => Err(type_error(e, "a GL2 representation", &other)),
        }
    }

    fn gsp4(&self, e: &Expr) -> EResult<GSp4Rep> {
        match self.eval(e)? {
            Value::Gsp4(r) => Ok(r),
            other => Err(type_error(e, "a GSp4 representation", &other)),
        }
    }

    pub fn eval(&self, e: &Expr) -> EResult<Value> {
        let pos = e.pos().unwrap_or_default();
        let core = |r: theta_core::Error| EvalError::core(pos, r);
        match e {
            Expr::One => Ok(Value::Char(Character::trivial())),
            Expr::Name(n, p) => self.lookup(n, *p),
            Expr::Pow(x, k) => {
                let c = self.character(x)?;
                if k.is_integer() {
                    Ok(Value::Char(c.pow(*k.numer())))
                } else if c.is_unitary() && !c.is_trivial() {
                    Err(EvalError::new(pos, "type_error", format!("fractional power of the unitary character {c}")))
                } else {
                    let s = c.abs_exponent() * *k;
                    if c.unitary_part().is_trivial() {
                        Ok(Value::Char(Character::abs_pow(s)))
                    } else {
                        Err(EvalError::new(pos, "type_error", format!("fractional power of {c}")))
                    }
                }
            }
            Expr::Mul(a, b) | Expr::Div(a, b) => {
                let (x, y) = (self.character(a)?, self.character(b)?);
                let y = if matches!(e, Expr::Div(..)) { y.inv() } else { y };
                x.try_mul(&y).map(Value::Char).map_err(core)
            }
            Expr::Boxtimes(a, b) => match (self.eval(a)?, self.eval(b)?) {
                (Value::Gl2(x), Value::Gl2(y)) => Gso22Rep::new(x, y).map(Value::Gso22).map_err(core),
                (Value::D(x), Value::D(y)) => Gso40Rep::new(x, y).map(Value::Gso40).map_err(core),
                (x, y) => Err(EvalError::new(
                    pos,
                    "type_error",
                    format!("⊠ needs two GL2 or two D representations, got {} and {}", x.kind(), y.kind()),
                )),
            },
            Expr::Call { name, args, split, pos } => self.call(name, args, *split, *pos),
        }
    }

    fn lookup(&self, n: &str, pos: Pos) -> EResult<Value> {
        match n {
            "nu" => return Ok(Value::Char(Character::abs_pow(Exponent::from_integer(1)))),
            "st" => return Ok(Value::Gl2(Gl2Rep::steinberg(&Character::trivial()))),
            "St_PGSp4" => return Ok(Value::Gsp4(GSp4Rep::TwistedSteinberg { chi: Character::trivial() })),
            _ => {}
        }
        match self.names.get(n) {
            Some(Binding::Symbol(s)) => Ok(Value::Char(Character::symbol(s))),
            Some(Binding::Token(t)) => Ok(Value::Gl2(Gl2Rep::supercuspidal(t, &Character::trivial()))),
            Some(Binding::Value(v)) => Ok(v.as_ref().clone()),
            None => Err(EvalError::new(pos, "unknown_symbol", format!("`{n}` is not declared"))),
        }
    }

    fn call(&self, name: &str, args: &[Expr], split: Option<usize>, pos: Pos) -> EResult<Value> {
        let core = |r: theta_core::Error| EvalError::core(pos, r);
        let arity = |n: usize| -> EResult<()> {
            let semicolon_ok = split.is_none() || (name.ends_with("_B") && split == Some(2));
            if args.len() != n || !semicolon_ok {
                return Err(EvalError::new(pos, "arity", format!("`{name}` takes {n} argument(s)")));
            }
            Ok(())
        };
        let gsp4 = |pi: GSp4Rep| canonicalize_gsp4(&pi).map(Value::Gsp4).map_err(core);
        match name {
            "st" => {
                arity(1)?;
                Ok(Value::Gl2(Gl2Rep::steinberg(&self.character(&args[0])?)))
            }
            "PS" => {
                arity(2)?;
                let (a, b) = (self.character(&args[0])?, self.character(&args[1])?);
                Gl2Rep::principal_series(&a, &b).map(Value::Gl2).map_err(core)
            }
            "J" => {
                arity(2)?;
                let (a, b) = (self.character(&args[0])?, self.character(&args[1])?);
                Ok(Value::Gl2(Gl2Rep::langlands_quotient(&a, &b)))
            }
            "one" => {
                arity(1)?;
                Ok(Value::Gl2(Gl2Rep::one_dim(&self.character(&args[0])?)))
            }
            "twist" => {
                arity(2)?;
                let chi = self.character(&args[1])?;
                match self.eval(&args[0])? {
                    Value::Gl2(r) => Ok(Value::Gl2(r.twist(&chi))),
                    Value::D(DRep::JlOfSupercuspidal { token, twist }) => {
                        Ok(Value::D(DRep::of_supercuspidal(&token, &(twist * chi))))
                    }
                    Value::D(DRep::OneDim { chi: c }) => Ok(Value::D(DRep::one_dim(&(c * chi)))),
                    other => Err(type_error(&args[0], "a GL2 or D representation", &other)),
                }
            }
            "D" => {
                arity(1)?;
                match self.eval(&args[0])? {
                    Value::Char(c) => Ok(Value::D(DRep::one_dim(&c))),
                    Value::Gl2(r) => jl_inverse(&r).map(Value::D).map_err(core),
                    other => Err(type_error(&args[0], "a character or a discrete series of GL2", &other)),
                }
            }
            "JL" => {
                arity(1)?;
                match self.eval(&args[0])? {
                    Value::D(d) => Ok(Value::Gl2(jl(&d))),
                    other => Err(type_error(&args[0], "a D representation", &other)),
                }
            }
            "SC" => {
                arity(2)?;
                let Expr::Name(label, _) = &args[0] else {
                    return Err(EvalError::new(pos, "type_error", "SC(name, central) needs a bare name"));
                };
                let central = self.character(&args[1])?;
                Ok(Value::Gsp4(GSp4Rep::Supercuspidal { name: label.clone(), central, origin: ScOrigin::NonLift }))
            }
            "St" | "Sp" => {
                arity(2)?;
                let steinberg = name == "St";
                match (self.eval(&args[0])?, self.eval(&args[1])?) {
                    (Value::Char(chi), Value::Gl2(tau)) => {
                        gsp4(if steinberg { GSp4Rep::StKlingen { chi, tau } } else { GSp4Rep::SpKlingen { chi, tau } })
                    }
                    (Value::Gl2(tau), Value::Char(mu)) => {
                        gsp4(if steinberg { GSp4Rep::StSiegel { tau, mu } } else { GSp4Rep::SpSiegel { tau, mu } })
                    }
                    (a, b) => Err(EvalError::new(
                        pos,
                        "type_error",
                        format!(
                            "`{name}` takes (character, GL2) or (GL2, character), got {} and {}",
                            a.kind(),
                            b.kind()
                        ),
                    )),
                }
            }
            "St_PGSp4" => {
                arity(1)?;
                gsp4(GSp4Rep::TwistedSteinberg { chi: self.character(&args[0])? })
            }
            "pi_gen" | "pi_ng" => {
                arity(1)?;
                let tau = self.gl2(&args[0])?;
                if !tau.is_discrete_series() {
                    return Err(EvalError::new(pos, "invariant_violation", format!("{tau} is not a discrete series")));
                }
                gsp4(if name == "pi_gen" { GSp4Rep::PiGen { tau } } else { GSp4Rep::PiNg { tau } })
            }
            "J_QZ" | "I_QZ" => {
                arity(2)?;
                let (chi, tau) = (self.character(&args[0])?, self.gl2(&args[1])?);
                if name == "I_QZ" {
                    return Ok(Value::Standard(StandardModule::Klingen { chi, tau }));
                }
                gsp4(GSp4Rep::Jqz { chi, tau })
            }
            "J_PY" | "I_PY" => {
                arity(2)?;
                let (tau, chi) = (self.gl2(&args[0])?, self.character(&args[1])?);
                if name == "I_PY" {
                    return Ok(Value::Standard(StandardModule::Siegel { tau, chi }));
                }
                gsp4(GSp4Rep::Jpy { tau, chi })
            }
            "J_B" | "I_B" => {
                arity(3)?;
                let (chi1, chi2, chi) =
                    (self.character(&args[0])?, self.character(&args[1])?, self.character(&args[2])?);
                if name == "I_B" {
                    return Ok(Value::Standard(StandardModule::Borel { chi1, chi2, chi }));
                }
                gsp4(GSp4Rep::Jb { chi1, chi2, chi })
            }
            "theta" => {
                arity(1)?;
                let value = match self.eval(&args[0])? {
                    Value::Gso22(s) => theta_22_to_gsp4(&s).map_err(core)?.value.map(Value::Gsp4),
                    Value::Gso40(s) => theta_40_to_gsp4(&s).map_err(core)?.value.map(Value::Gsp4),
                    Value::Gsp4(pi) => theta_gsp4_to_33(&pi).map_err(core)?.value.map(Value::Gso33),
                    other => return Err(type_error(&args[0], "a GSO(2,2), GSO(4,0) or GSp4 representation", &other)),
                };
                Ok(value.unwrap_or(Value::Zero))
            }
            other => Err(EvalError::new(pos, "unknown_symbol", format!("unknown constructor `{other}`"))),
        }
    }

    fn command(&self, c: &Command, pos: Pos) -> EResult<Outcome> {
        let core = |r: theta_core::Error| EvalError::core(pos, r);
        let mut checks: Vec<(String, bool)> = Vec::new();
        let mut check = |name: &str, ok: bool| checks.push((name.to_string(), ok));
        let (output, provenance, summary) = match c {
            Command::Lift(Group::Gsp4, x) => {
                let pi = canonicalize_gsp4(&self.gsp4(x)?).map_err(core)?;
                let r = theta_gsp4_to_33(&pi).map_err(core)?;
                if let Some(lift) = &r.value {
                    check("central_character_law", central_character_law(&pi, lift));
                    check("genericity_transfer", !lift.gl4.is_generic() || gsp4_is_generic(&pi));
                }
                check("zero_locus_is_tempered_nongeneric", r.value.is_none() == gsp4_is_tempered_ng(&pi));
                let output = json!({
                    "gso33": opt_json(r.value.as_ref()),
                    "gl4": opt_json(r.value.as_ref().map(|s| &s.gl4)),
                    "mu": opt_json(r.value.as_ref().map(|s| &s.mu)),
                });
                let text = r.value.as_ref().map_or("0".to_string(), ToString::to_string);
                (output, Some(r.provenance.to_string()), format!("θ({pi}) = {text}"))
            }
            Command::Lift(Group::Gso22, x) => {
                let sigma = match self.eval(x)? {
                    Value::Gso22(s) => s,
                    other => return Err(type_error(x, "a GSO(2,2) representation", &other)),
                };
                let r = theta_22_to_gsp4(&sigma).map_err(core)?;
                let swapped = theta_22_to_gsp4(&sigma.swapped()).map_err(core)?;
                check("swap_invariance", swapped.value == r.value);
                if let Some(pi) = &r.value {
                    let back = theta_22_preimage(pi).map_err(core)?;
                    check("preimage_round_trip", back.is_some_and(|b| b.same_orbit(&sigma)));
                    check("central_character_law", pi.central_character() == sigma.central_character());
                }
                check("parameter_compatibility", check_parameter_compat(&sigma).map_err(core)?);
                let text = opt_json(r.value.as_ref());
                let summary = format!("θ({sigma}) = {}", r.value.as_ref().map_or("0".into(), ToString::to_string));
                (json!({ "gsp4": text }), Some(r.provenance.to_string()), summary)
            }
            Command::Lift(Group::Gso40, x) => {
                let sigma = match self.eval(x)? {
                    Value::Gso40(s) => s,
                    other => return Err(type_error(x, "a GSO(4,0) representation", &other)),
                };
                let r = theta_40_to_gsp4(&sigma).map_err(core)?;
                let swapped = theta_40_to_gsp4(&sigma.swapped()).map_err(core)?;
                check("swap_invariance", swapped.value == r.value);
                if let Some(pi) = &r.value {
                    let back = theta_40_preimage(pi).map_err(core)?;
                    check("preimage_round_trip", back.is_some_and(|b| b.same_orbit(&sigma)));
                    check("central_character_law", pi.central_character() == sigma.central_character());
                }
                let summary = format!("θ({sigma}) = {}", r.value.as_ref().map_or("0".into(), ToString::to_string));
                (json!({ "gsp4": opt_json(r.value.as_ref()) }), Some(r.provenance.to_string()), summary)
            }
            Command::Preimage(g, x) => {
                let pi = canonicalize_gsp4(&self.gsp4(x)?).map_err(core)?;
                let (key, found) = if *g == Group::Gso22 {
                    let s = theta_22_preimage(&pi).map_err(core)?;
                    if let Some(s) = &s {
                        let back = theta_22_to_gsp4(s).map_err(core)?.value;
                        check("lifts_back", back.as_ref() == Some(&pi));
                    }
                    ("gso22", s.map(|s| s.to_string()))
                } else {
                    let s = theta_40_preimage(&pi).map_err(core)?;
                    if let Some(s) = &s {
                        let back = theta_40_to_gsp4(s).map_err(core)?.value;
                        check("lifts_back", back.as_ref() == Some(&pi));
                    }
                    ("gso40", s.map(|s| s.to_string()))
                };
                let summary = format!("preimage of {pi} on {}: {}", g.keyword(), found.as_deref().unwrap_or("none"));
                (json!({ key: found }), None, summary)
            }
            Command::Dichotomy(x) => {
                let pi = canonicalize_gsp4(&self.gsp4(x)?).map_err(core)?;
                let tower = dichotomy(&pi).map_err(core)?;
                let anisotropic = theta_40_preimage(&pi).map_err(core)?.is_some();
                let split = theta_gsp4_to_33(&pi).map_err(core)?.value.is_some();
                check("exactly_one_tower", anisotropic != split);
                (json!({"tower": tower.to_string()}), None, format!("{tower}"))
            }
            Command::Lparam(x) => {
                let (phi, pi) = match self.eval(x)? {
                    Value::Gsp4(pi) => (lparam_gsp4(&pi).map_err(core)?, Some(pi)),
                    Value::Gl2(r) => (lparam_gl2(&r), None),
                    Value::Gso33(s) => (lparam_gso33(&s).map_err(core)?, None),
                    other => return Err(type_error(x, "a GSp4, GL2 or GSO(3,3) representation", &other)),
                };
                if let Some(pi) = pi {
                    check("symplectic_closure", phi.is_symplectic_closed());
                    if !pi.is_supercuspidal() {
                        let pi = canonicalize_gsp4(&pi).map_err(core)?;
                        check("discrete_classifier", phi.is_discrete() == pi.is_discrete_series());
                    }
                }
                let mut out = lparam_json(&phi);
                out["discrete"] = json!(phi.is_discrete());
                (out, None, phi.to_string())
            }
            Command::Adjoint(x) => {
                let pi = self.gsp4(x)?;
                let ad = adjoint(&lparam_gsp4(&pi).map_err(core)?).map_err(core)?;
                check("dimension_10", ad.dim() == 10);
                check("self_dual", ad.is_self_dual());
                let mut out = lparam_json(&ad);
                out["pole_at_one"] = json!(has_pole_at_one(&ad));
                (out, None, ad.to_string())
            }
            Command::GenericCheck(x) => {
                let pi = self.gsp4(x)?;
                let (generic, holomorphic) = generic_iff_holomorphic(&pi).map_err(core)?;
                check("generic_iff_holomorphic", generic == holomorphic);
                (
                    json!({"packet_has_generic": generic, "holomorphic_at_one": holomorphic}),
                    None,
                    format!("generic member: {generic}, L(s, Ad) holomorphic at 1: {holomorphic}"),
                )
            }
            Command::Classify(x) => {
                let data = match self.eval(x)? {
                    Value::Standard(s) => s,
                    other => return Err(type_error(x, "a standard module I_QZ, I_PY or I_B", &other)),
                };
                let found = classify_standard_module(&data).map_err(core)?;
                let reps: Vec<String> = match &found {
                    Classified::Unique(p) => vec![p.to_string()],
                    Classified::Pair(a, b) => vec![a.to_string(), b.to_string()],
                };
                let summary = format!("{data} ⊇ {}", reps.join(" ⊕ "));
                (json!({"submodule": reps}), None, summary)
            }
            Command::Compat(x) => {
                let sigma = match self.eval(x)? {
                    Value::Gso22(s) => s,
                    other => return Err(type_error(x, "a GSO(2,2) representation", &other)),
                };
                let holds = check_parameter_compat(&sigma).map_err(core)?;
                check("parameter_compatibility", holds);
                (json!({"holds": holds}), None, format!("parameter compatibility: {holds}"))
            }
            Command::Satake(a, b, c) => {
                let (t1, t2, nu) = (self.character(a)?, self.character(b)?, self.character(c)?);
                let (eigen, sim) =
                    iota(&SatakeClass { t1: t1.clone(), t2: t2.clone(), nu: nu.clone() }).map_err(core)?;
                let holds = check_unramified_transfer(&t1, &t2, &nu).map_err(core)?;
                check("unramified_transfer", holds);
                let eigen: Vec<Json> = eigen.iter().map(char_json).collect();
                let summary = format!(
                    "ι = diag({}) × {sim}",
                    eigen.iter().map(|e| e.as_str().unwrap_or_default()).collect::<Vec<_>>().join(", ")
                );
                (json!({"eigenvalues": eigen, "sim": sim.to_string(), "transfer_holds": holds}), None, summary)
            }
            Command::Jacquet { m, n, index, r, isometry } => {
                let side = match index {
                    JacquetIndex::T(t) => Side::Orthogonal { t: *t },
                    JacquetIndex::K(k) => Side::Symplectic { k: *k },
                };
                let spec = FiltrationSpec::new(*m, *n, r.unwrap_or(m / 2), side, *isometry).map_err(core)?;
                let (out, summary) = jacquet_output(&spec);
                for q in filtration(&spec) {
                    check(&format!("absorption[{}]", q.index), q.absorbed());
                }
                (out, None, summary)
            }
        };
        Ok(Outcome { input: c.to_string(), operation: c.operation(), output, provenance, checks, summary })
    }
}

/// Quotient descriptors as JSON, with a text table.
pub fn jacquet_output(spec: &FiltrationSpec) -> (Json, String) {
    let qs = filtration(spec);
    let mut text = String::from("index  inducing                    inner      e0     e1     f0     e2     f1");
    let show = |e: Option<Exponent>| exponent_json(e).as_str().unwrap_or("-").to_string();
    let rows: Vec<Json> = qs
        .iter()
        .map(|q| {
            text.push_str(&format!(
                "\n{:<6} {:<27} {:<10} {:<6} {:<6} {:<6} {:<6} {}",
                q.index,
                q.inducing.to_string(),
                format!("Ω({}, {})", q.inner_weil.0, q.inner_weil.1),
                show(q.e0),
                show(q.e1),
                show(q.f0),
                show(Some(q.e2)),
                show(Some(q.f1)),
            ));
            json!({
                "index": q.index,
                "inducing": q.inducing.to_string(),
                "schwartz_factor": q.schwartz_factor,
                "inner_weil": [q.inner_weil.0, q.inner_weil.1],
                "e0": exponent_json(q.e0),
                "e1": exponent_json(q.e1),
                "f0": exponent_json(q.f0),
                "e2": exponent_json(Some(q.e2)),
                "f1": exponent_json(Some(q.f1)),
                "f0_raw": exponent_json(q.f0_raw),
                "character_factor": q.character_factor,
            })
        })
        .collect();
    let side = match spec.side() {
        Side::Orthogonal { t } => json!({"orthogonal": {"t": t}}),
        Side::Symplectic { k } => json!({"symplectic": {"k": k}}),
    };
    let out = json!({
        "m": spec.m(), "n": spec.n(), "witt_index": spec.r(), "side": side, "isometry": spec.isometry(),
        "quotients": rows,
    });
    (out, text)
}

fn type_error(e: &Expr, wanted: &str, got: &Value) -> EvalError {
    EvalError::new(
        e.pos().unwrap_or_default(),
        "type_error",
        format!("`{e}` is a {} value, expected {wanted}", got.kind()),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(src: &str) -> Vec<Outcome> {
        Session::new().run(src).unwrap()
    }

    #[test]
    fn quadratic_symbol_squares_to_one() {
        let out = run("char chi0 order 2\nchi0*chi0");
        assert_eq!(out[0].summary, "1");
    }

    #[test]
    fn selftwist_closure() {
        let mut s = Session::new();
        s.run("char chi0 order 2\nsc tau { omega = 1, selftwists = {chi0} }").unwrap();
        let Some(Binding::Token(t)) = s.names.get("tau") else { panic!() };
        assert_eq!(t.self_twists().len(), 2);
    }

    #[test]
    fn twisted_steinberg_lift() {
        let out = run("char chi\nlift gsp4 St_PGSp4(chi)");
        assert_eq!(out[0].provenance.as_deref(), Some("Table1.DS(c)"));
        assert_eq!(out[0].output["gso33"], "St_PGL4(chi) ⊠ chi^2");
        assert!(out[0].all_checks_pass());
    }

    #[test]
    fn lparam_of_twisted_steinberg() {
        let out = run("char chi\nlparam St_PGSp4(chi)");
        assert_eq!(out[0].output["pieces"], json!([{"core": "1", "twist": "chi", "r": 4}]));
        assert_eq!(out[0].output["sim"], "chi^2");
    }

    #[test]
    fn dichotomy_tower() {
        let out = run("char chi\nrep pi = St_PGSp4(chi)\ndichotomy pi");
        assert_eq!(out[0].output, json!({"tower": "GSO(3,3)"}));
    }

    #[test]
    fn shadowing_and_unknown_names() {
        let e = Session::new().run("char a\nchar a").unwrap_err();
        assert_eq!((e.code, e.pos.line), ("shadowing", 2));
        let e = Session::new().run("char st").unwrap_err();
        assert_eq!(e.code, "reserved_name");
        let e = Session::new().run("char a\nst(b)").unwrap_err();
        assert_eq!((e.code, e.pos.line, e.pos.column), ("unknown_symbol", 2, 4));
    }

    #[test]
    fn central_character_mismatch_is_named() {
        let e = Session::new().run("char a\nchar b\nst(a) ⊠ st(b)").unwrap_err();
        assert_eq!(e.code, "invariant_violation");
    }

    #[test]
    fn jacquet_two_quotients() {
        let out = run("jacquet m=6 n=2 k=1");
        assert_eq!(out[0].output["quotients"].as_array().unwrap().len(), 2);
        assert!(out[0].all_checks_pass());
    }
}
