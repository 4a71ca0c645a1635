//! The three tables of explicit lifts, recomputed from generic data.
//!
//! Each row declares fresh symbols satisfying exactly the row's hypotheses,
//! builds its input in the declaration language and runs the engine on it.

use std::fmt;

use serde_json::{json, Value as Json};
use theta_core::repdata::GSp4Rep;
use theta_core::theta::{theta_22_preimage, theta_22_to_gsp4, theta_40_preimage, theta_40_to_gsp4, theta_gsp4_to_33};

use crate::session::{Session, Value};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableRow {
    pub table: u8,
    pub tag: &'static str,
    /// Declarations instantiating the row.
    pub declarations: &'static str,
    pub input: String,
    /// `(column header, rendered value)`, `0` for a vanishing lift.
    pub columns: Vec<(&'static str, String)>,
    /// Row tag reported by the engine.
    pub provenance: String,
}

impl TableRow {
    pub fn to_json(&self) -> Json {
        let cols: Vec<Json> = self.columns.iter().map(|(h, v)| json!({"column": h, "value": v})).collect();
        json!({
            "table": self.table,
            "row": self.tag,
            "declarations": self.declarations,
            "input": self.input,
            "columns": cols,
            "provenance": self.provenance,
        })
    }
}

impl fmt::Display for TableRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Table {} {:<7} {}", self.table, self.tag, self.input)?;
        for (h, v) in &self.columns {
            write!(f, " | {h}: {v}")?;
        }
        Ok(())
    }
}

const TABLE1: &[(&str, &str)] = &[
    ("SC(a)", "char w\nrep pi = SC(pi0, w)"),
    ("SC(b)", "char w\nsc tau1 { omega = w }\nsc tau2 { omega = w }\nrep pi = theta(tau1 ⊠ tau2)"),
    ("SC(c)", "char w\nsc tau1 { omega = w }\nsc tau2 { omega = w }\nrep pi = theta(D(tau1) ⊠ D(tau2))"),
    ("DS(a)", "char chi order 2\nchar w\nsc tau { omega = w, selftwists = {chi} }\nrep pi = St(chi, tau)"),
    ("DS(b)", "char mu\nsc tau { omega = 1 }\nrep pi = St(tau, mu)"),
    ("DS(c)", "char chi\nrep pi = St_PGSp4(chi)"),
    ("NDS(a)", "char chi\nchar w\nsc tau { omega = w }\nrep pi = J_QZ(chi*nu^(1/2), tau)"),
    ("NDS(b)", "char w\nsc tau { omega = w }\nrep pi = pi_gen(tau)"),
    ("NDS(c)", "char w\nsc tau { omega = w }\nrep pi = pi_ng(tau)"),
    ("NDS(d)", "char chi\nchar w\nsc tau { omega = w }\nrep pi = J_PY(twist(tau, nu^(1/4)), chi)"),
    ("NDS(e)", "char chi1\nchar chi2\nchar chi\nrep pi = J_B(chi1*nu^(2/3), chi2*nu^(1/3); chi)"),
];

const TABLE2: &[(&str, &str)] = &[
    ("a", "char w\nsc tau { omega = w }\nrep sigma = tau ⊠ tau"),
    ("b", "char w\nsc tau1 { omega = w }\nsc tau2 { omega = w }\nrep sigma = tau1 ⊠ tau2"),
    ("c", "char chi\nsc tau1 { omega = chi^2 }\nrep sigma = tau1 ⊠ st(chi)"),
    ("d", "char chi1\nchar q order 2\nrep sigma = st(chi1) ⊠ st(chi1*q)"),
    ("e", "char x\nchar y\nsc tau1 { omega = x*y }\nrep sigma = tau1 ⊠ PS(x*nu^(1/3), y*nu^(-1/3))"),
    ("f", "char a\nchar b\nchar c\nrep sigma = PS(a*nu^(1/2), b*nu^(-1/2)) ⊠ PS(c*nu^(1/4), a*b*c^-1*nu^(-1/4))"),
];

const TABLE3: &[(&str, &str)] = &[
    ("a", "char w\nsc tau { omega = w }\nrep sigma = D(tau) ⊠ D(tau)"),
    ("b", "char w\nsc tau1 { omega = w }\nsc tau2 { omega = w }\nrep sigma = D(tau1) ⊠ D(tau2)"),
];

fn bound(decls: &str, name: &str) -> Value {
    let mut s = Session::new();
    s.run(decls).unwrap_or_else(|e| panic!("table declarations `{decls}`: {e}"));
    let expr = crate::parse::parse_expr(name).expect("name");
    s.eval(&expr).expect("bound name")
}

fn render<T: fmt::Display>(x: Option<T>) -> String {
    x.map_or_else(|| "0".to_string(), |v| v.to_string())
}

fn row1(tag: &'static str, declarations: &'static str) -> TableRow {
    let Value::Gsp4(pi) = bound(declarations, "pi") else { panic!("row {tag} input is not a GSp4 representation") };
    let lift = theta_gsp4_to_33(&pi).expect("lift to GSO(3,3)");
    let to22 = theta_22_preimage(&pi).expect("GSO(2,2) preimage");
    let to40 = theta_40_preimage(&pi).expect("GSO(4,0) preimage");
    TableRow {
        table: 1,
        tag,
        declarations,
        input: pi.to_string(),
        columns: vec![("θ(3,3)", render(lift.value)), ("θ(2,2)", render(to22)), ("θ(4,0)", render(to40))],
        provenance: lift.provenance.to_string(),
    }
}

fn row23(table: u8, tag: &'static str, declarations: &'static str) -> TableRow {
    let (input, lift) = match bound(declarations, "sigma") {
        Value::Gso22(s) => (s.to_string(), theta_22_to_gsp4(&s).expect("lift from GSO(2,2)")),
        Value::Gso40(s) => (s.to_string(), theta_40_to_gsp4(&s).expect("lift from GSO(4,0)")),
        other => panic!("row {tag} input is a {} value", other.kind()),
    };
    TableRow {
        table,
        tag,
        declarations,
        input,
        columns: vec![("θ(σ)", render::<GSp4Rep>(lift.value))],
        provenance: lift.provenance.to_string(),
    }
}

/// All 19 rows, in table order.
pub fn emit_tables() -> Vec<TableRow> {
    let mut rows: Vec<TableRow> = TABLE1.iter().map(|(t, d)| row1(t, d)).collect();
    rows.extend(TABLE2.iter().map(|(t, d)| row23(2, t, d)));
    rows.extend(TABLE3.iter().map(|(t, d)| row23(3, t, d)));
    rows
}
