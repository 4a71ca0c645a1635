//! Named consistency checks over seeded corpora, run by `theta --check`.

use std::fmt;
use std::str::FromStr;

use theta_core::jacquet::{absorption_identity, filtration, specialize_check, FiltrationSpec, Side, Specialization};
use theta_core::langlands::{
    adjoint, check_parameter_compat, check_unramified_transfer, generic_iff_holomorphic, lparam_gsp4, Core,
};
use theta_core::repdata::{gsp4_is_generic, gsp4_is_tempered_ng, GSp4Rep};
use theta_core::theta::{
    central_character_law, dichotomy, theta_22_preimage, theta_22_to_gsp4, theta_40_preimage, theta_40_to_gsp4,
    theta_gsp4_to_33,
};

use crate::corpus::Generator;
use crate::tables::emit_tables;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Oracle {
    Tables,
    Compat,
    Unramified,
    Generic,
    Dichotomy,
    Symplectic,
    ThetaLaws,
    Jacquet,
    DsClassifier,
}

impl Oracle {
    pub const ALL: [Oracle; 9] = [
        Oracle::Tables,
        Oracle::Compat,
        Oracle::Unramified,
        Oracle::Generic,
        Oracle::Dichotomy,
        Oracle::Symplectic,
        Oracle::ThetaLaws,
        Oracle::Jacquet,
        Oracle::DsClassifier,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Oracle::Tables => "tables",
            Oracle::Compat => "compat",
            Oracle::Unramified => "unramified",
            Oracle::Generic => "generic",
            Oracle::Dichotomy => "dichotomy",
            Oracle::Symplectic => "symplectic",
            Oracle::ThetaLaws => "theta-laws",
            Oracle::Jacquet => "jacquet",
            Oracle::DsClassifier => "ds-classifier",
        }
    }
}

impl FromStr for Oracle {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Oracle::ALL.into_iter().find(|o| o.name() == s).ok_or_else(|| {
            let names: Vec<_> = Oracle::ALL.iter().map(|o| o.name()).collect();
            format!("unknown oracle `{s}`; expected one of: all, {}", names.join(", "))
        })
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub cases: usize,
    pub failures: Vec<String>,
}

impl Report {
    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} cases, {} failures", self.cases, self.failures.len())
    }
}

fn corpus(seed: u64) -> Vec<GSp4Rep> {
    Generator::new(seed).gsp4_corpus(560)
}

pub fn run(oracle: Oracle, seed: u64) -> Report {
    let mut r = Report::default();
    match oracle {
        Oracle::Tables => {
            let rows = emit_tables();
            r.record(rows.len() == 19, || format!("{} rows", rows.len()));
            for row in &rows {
                r.record(row.provenance == format!("Table{}.{}", row.table, row.tag), || row.to_string());
            }
        }
        Oracle::Compat => {
            for (case, s) in Generator::new(seed).gso22_corpus(40) {
                r.record(check_parameter_compat(&s) == Ok(true), || format!("{case:?}: {s}"));
            }
        }
        Oracle::Unramified => {
            let mut g = Generator::new(seed);
            for i in 0..250 {
                let (a, b, c) = g.unramified_triple(i);
                r.record(check_unramified_transfer(&a, &b, &c) == Ok(true), || format!("I_B({a}, {b}; {c})"));
            }
        }
        Oracle::Generic => {
            for pi in Generator::new(seed).gsp4_non_supercuspidal(550) {
                let ok = matches!(generic_iff_holomorphic(&pi), Ok((g, h)) if g == h);
                r.record(ok, || pi.to_string());
            }
        }
        Oracle::Dichotomy => {
            for pi in corpus(seed) {
                let to40 = theta_40_preimage(&pi).is_ok_and(|x| x.is_some());
                let to33 = theta_gsp4_to_33(&pi).is_ok_and(|x| x.value.is_some());
                r.record(to40 != to33 && dichotomy(&pi).is_ok(), || pi.to_string());
            }
        }
        Oracle::Symplectic => {
            for pi in corpus(seed) {
                let Ok(phi) = lparam_gsp4(&pi) else {
                    r.record(false, || pi.to_string());
                    continue;
                };
                r.record(phi.is_symplectic_closed() && phi.dim() == 4, || format!("{pi}: {phi}"));
                if !matches!(phi.pieces()[0].core(), Core::Irr4 { .. }) {
                    let ok = adjoint(&phi).is_ok_and(|ad| ad.dim() == 10 && ad.is_self_dual());
                    r.record(ok, || format!("adjoint of {pi}"));
                }
            }
        }
        Oracle::ThetaLaws => theta_laws(seed, &mut r),
        Oracle::Jacquet => {
            for m in (2..=12).step_by(2) {
                for n in 1..=6 {
                    for t in 0..=m / 2 {
                        for k in 0..=n {
                            if let Ok(ok) = absorption_identity(m, n, t, k) {
                                r.record(ok, || format!("absorption m={m} n={n} t={t} k={k}"));
                            }
                        }
                    }
                    let sides =
                        (0..=m / 2).map(|t| Side::Orthogonal { t }).chain((0..=n).map(|k| Side::Symplectic { k }));
                    for side in sides {
                        let spec = FiltrationSpec::split(m, n, side).expect("admissible");
                        let level = match side {
                            Side::Orthogonal { t } => t,
                            Side::Symplectic { k } => k,
                        };
                        for q in filtration(&spec).iter().filter(|q| q.index == level) {
                            r.record(q.e0 == q.f0, || format!("e0 = f0 at m={m} n={n} {side:?}"));
                        }
                    }
                }
            }
            for s in Specialization::ALL {
                r.record(specialize_check(s), || s.name().to_string());
            }
        }
        Oracle::DsClassifier => {
            for pi in Generator::new(seed).gsp4_non_supercuspidal(550) {
                let ok = lparam_gsp4(&pi).is_ok_and(|phi| phi.is_discrete() == pi.is_discrete_series());
                r.record(ok, || pi.to_string());
            }
        }
    }
    r
}

fn theta_laws(seed: u64, r: &mut Report) {
    let mut g = Generator::new(seed);
    for (case, s) in g.gso22_corpus(40) {
        let a = theta_22_to_gsp4(&s).map(|x| x.value);
        let b = theta_22_to_gsp4(&s.swapped()).map(|x| x.value);
        r.record(a.is_ok() && a == b, || format!("swap {case:?}: {s}"));
        if let Ok(Some(pi)) = a {
            let back = theta_22_preimage(&pi).ok().flatten();
            r.record(back.is_some_and(|x| x.same_orbit(&s)), || format!("preimage {case:?}: {s}"));
            r.record(pi.central_character() == s.central_character(), || format!("central {s}"));
        }
    }
    for _ in 0..120 {
        let s = g.gso40();
        let a = theta_40_to_gsp4(&s).map(|x| x.value);
        let b = theta_40_to_gsp4(&s.swapped()).map(|x| x.value);
        r.record(a.is_ok() && a == b, || format!("swap {s}"));
        if let Ok(Some(pi)) = a {
            let back = theta_40_preimage(&pi).ok().flatten();
            r.record(back.is_some_and(|x| x.same_orbit(&s)), || format!("preimage {s}"));
            r.record(pi.central_character() == s.central_character(), || format!("central {s}"));
        }
    }
    for pi in corpus(seed) {
        let Ok(lift) = theta_gsp4_to_33(&pi) else {
            r.record(false, || pi.to_string());
            continue;
        };
        r.record(lift.value.is_none() == gsp4_is_tempered_ng(&pi), || format!("zero locus {pi}"));
        if let Some(l) = &lift.value {
            r.record(central_character_law(&pi, l), || format!("central {pi}"));
            r.record(!l.gl4.is_generic() || gsp4_is_generic(&pi), || format!("genericity {pi}"));
        }
    }
}
