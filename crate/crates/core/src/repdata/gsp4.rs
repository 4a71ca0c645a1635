//! Irreducible representations of GSp4(F) in classification form.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::charlattice::{min_of, sign, Character, Exponent};
use crate::error::{Error, Result};
use crate::repdata::gl2::Gl2Rep;
use crate::repdata::gso::{Gso22Rep, Gso40Rep};
use crate::repdata::reducibility::{borel_reducible, klingen_reducible, siegel_reducible};

/// How a supercuspidal of GSp4 arises.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ScOrigin {
    Lift22(Gso22Rep),
    Lift40(Gso40Rep),
    /// Generic, not a lift from GSO(2,2) or GSO(4,0).
    NonLift,
}

/// An irreducible representation of GSp4(F).
///
/// Langlands quotients are stored in the quotient arrangement; see [`canonicalize_gsp4`].
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GSp4Rep {
    Supercuspidal {
        name: String,
        central: Character,
        origin: ScOrigin,
    },
    /// `St(chi, tau)`: chi non-trivial quadratic, tau supercuspidal with `tau ⊗ chi = tau`.
    StKlingen {
        chi: Character,
        tau: Gl2Rep,
    },
    /// `Sp(chi, tau)`; canonicalizes to a `Jqz`.
    SpKlingen {
        chi: Character,
        tau: Gl2Rep,
    },
    /// `St(tau, mu)`: tau a discrete series of PGL2 other than `st`.
    StSiegel {
        tau: Gl2Rep,
        mu: Character,
    },
    /// `Sp(tau, mu)`; canonicalizes to a `Jpy`.
    SpSiegel {
        tau: Gl2Rep,
        mu: Character,
    },
    /// `St_PGSp4 ⊗ chi`.
    TwistedSteinberg {
        chi: Character,
    },
    /// Generic summand of `I_QZ(1, tau)`.
    PiGen {
        tau: Gl2Rep,
    },
    /// Non-generic summand of `I_QZ(1, tau)`.
    PiNg {
        tau: Gl2Rep,
    },
    /// `J_QZ(chi, tau)`, `|chi| >= 1`.
    Jqz {
        chi: Character,
        tau: Gl2Rep,
    },
    /// `J_PY(tau, chi)`, `|omega_tau| >= 1`.
    Jpy {
        tau: Gl2Rep,
        chi: Character,
    },
    /// `J_B(chi1, chi2; chi)`, exponents `s1 >= s2 >= 0`.
    Jb {
        chi1: Character,
        chi2: Character,
        chi: Character,
    },
}

fn half() -> Exponent {
    Exponent::new(1, 2)
}

fn require(cond: bool, rule: &'static str, detail: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::validation(rule, detail()))
    }
}

fn check_klingen_steinberg(chi: &Character, tau: &Gl2Rep) -> Result<()> {
    let Gl2Rep::Supercuspidal { token, .. } = tau else {
        return Err(Error::validation("St(chi, tau)", alloc::format!("{tau} is not supercuspidal")));
    };
    require(chi.is_nontrivial_quadratic(), "St(chi, tau)", || {
        alloc::format!("{chi} is not a non-trivial quadratic character")
    })?;
    require(token.fixes(chi), "St(chi, tau)", || alloc::format!("{tau} ⊗ {chi} != {tau}"))
}

fn check_siegel_steinberg(tau: &Gl2Rep) -> Result<()> {
    require(tau.is_discrete_series(), "St(tau, mu)", || alloc::format!("{tau} is not a discrete series"))?;
    require(tau.central_character().is_trivial(), "St(tau, mu)", || {
        alloc::format!("{tau} has non-trivial central character")
    })?;
    require(*tau != Gl2Rep::steinberg(&Character::trivial()), "St(tau, mu)", || "tau = st is excluded".into())
}

fn check_discrete(rule: &'static str, tau: &Gl2Rep) -> Result<()> {
    require(tau.is_discrete_series(), rule, || alloc::format!("{tau} is not a discrete series up to twist"))
}

/// The Weyl group orbit of Borel data, generated by the swap and the sign change.
pub fn borel_weyl_orbit(chi1: &Character, chi2: &Character, chi: &Character) -> Vec<(Character, Character, Character)> {
    let mut seen = BTreeSet::new();
    let mut stack = alloc::vec![(chi1.clone(), chi2.clone(), chi.clone())];
    while let Some(x) = stack.pop() {
        if seen.insert(x.clone()) {
            let (a, b, c) = x;
            stack.push((b.clone(), a.clone(), c.clone()));
            stack.push((a, b.inv(), c * &b));
        }
    }
    seen.into_iter().collect()
}

/// Quotient-form Borel data: `s1 >= s2 >= 0`, ties broken by the fixed order.
pub fn dominant_borel(chi1: &Character, chi2: &Character, chi: &Character) -> (Character, Character, Character) {
    min_of(borel_weyl_orbit(chi1, chi2, chi).into_iter().filter(|(a, b, _)| {
        let (s1, s2) = (a.abs_exponent(), b.abs_exponent());
        s1 >= s2 && s2 >= Exponent::from_integer(0)
    }))
}

fn canonical_jqz(chi: Character, tau: Gl2Rep) -> GSp4Rep {
    let alt = (chi.inv(), tau.twist(&chi));
    let (chi, tau) = match sign(chi.abs_exponent()) {
        1 => (chi, tau),
        -1 => alt,
        _ => core::cmp::min((chi, tau), alt),
    };
    GSp4Rep::Jqz { chi, tau }
}

fn canonical_jpy(tau: Gl2Rep, chi: Character) -> GSp4Rep {
    let omega = tau.central_character();
    let alt = (tau.dual(), &omega * &chi);
    let (tau, chi) = match sign(omega.abs_exponent()) {
        1 => (tau, chi),
        -1 => alt,
        _ => core::cmp::min((tau, chi), alt),
    };
    GSp4Rep::Jpy { tau, chi }
}

/// Validates `pi` against its variant's invariants and returns the canonical form.
///
/// Rules: Langlands data in quotient arrangement (exponent-zero ties by the
/// fixed order); `St(st_chi, mu)` uses the smaller of `mu` and `chi mu`;
/// `Sp(..)` variants become the Langlands quotients they are; lift origins
/// use the swap-orbit representative.
pub fn canonicalize_gsp4(pi: &GSp4Rep) -> Result<GSp4Rep> {
    Ok(match pi.clone() {
        GSp4Rep::Supercuspidal { name, central, origin } => {
            let origin = match origin {
                ScOrigin::Lift22(s) => {
                    require(s.tau1.is_supercuspidal() && s.tau2.is_supercuspidal(), "supercuspidal lift", || {
                        alloc::format!("{s} is not a pair of supercuspidals")
                    })?;
                    require(s.tau1 != s.tau2, "supercuspidal lift", || alloc::format!("{s} has equal components"))?;
                    require(s.central_character() == central, "central character", || alloc::format!("{s}"))?;
                    ScOrigin::Lift22(s.canonical())
                }
                ScOrigin::Lift40(s) => {
                    require(s.tau1 != s.tau2, "supercuspidal lift", || alloc::format!("{s} has equal components"))?;
                    require(s.central_character() == central, "central character", || alloc::format!("{s}"))?;
                    ScOrigin::Lift40(s.canonical())
                }
                ScOrigin::NonLift => ScOrigin::NonLift,
            };
            GSp4Rep::Supercuspidal { name, central, origin }
        }
        GSp4Rep::StKlingen { chi, tau } => {
            check_klingen_steinberg(&chi, &tau)?;
            GSp4Rep::StKlingen { chi, tau }
        }
        GSp4Rep::SpKlingen { chi, tau } => {
            check_klingen_steinberg(&chi, &tau)?;
            canonical_jqz(chi.shift(Exponent::from_integer(1)), tau.twist(&Character::abs_pow(-half())))
        }
        GSp4Rep::StSiegel { tau, mu } => {
            check_siegel_steinberg(&tau)?;
            let mu = match &tau {
                Gl2Rep::Steinberg { chi } => core::cmp::min(mu.clone(), chi * &mu),
                _ => mu,
            };
            GSp4Rep::StSiegel { tau, mu }
        }
        GSp4Rep::SpSiegel { tau, mu } => {
            check_siegel_steinberg(&tau)?;
            canonical_jpy(tau.twist(&Character::abs_pow(half())), mu.shift(-half()))
        }
        GSp4Rep::TwistedSteinberg { chi } => GSp4Rep::TwistedSteinberg { chi },
        GSp4Rep::PiGen { tau } => {
            check_discrete("pi_gen(tau)", &tau)?;
            GSp4Rep::PiGen { tau }
        }
        GSp4Rep::PiNg { tau } => {
            check_discrete("pi_ng(tau)", &tau)?;
            GSp4Rep::PiNg { tau }
        }
        GSp4Rep::Jqz { chi, tau } => {
            check_discrete("J_QZ(chi, tau)", &tau)?;
            require(!chi.is_trivial(), "J_QZ(chi, tau)", || "chi = 1 gives the tempered pair pi_gen/pi_ng".into())?;
            canonical_jqz(chi, tau)
        }
        GSp4Rep::Jpy { tau, chi } => {
            check_discrete("J_PY(tau, chi)", &tau)?;
            canonical_jpy(tau, chi)
        }
        GSp4Rep::Jb { chi1, chi2, chi } => {
            let (chi1, chi2, chi) = dominant_borel(&chi1, &chi2, &chi);
            GSp4Rep::Jb { chi1, chi2, chi }
        }
    })
}

/// Equality of canonical forms; invalid data is never equal to anything.
pub fn gsp4_equal(a: &GSp4Rep, b: &GSp4Rep) -> bool {
    match (canonicalize_gsp4(a), canonicalize_gsp4(b)) {
        (Ok(x), Ok(y)) => x == y,
        _ => false,
    }
}

impl GSp4Rep {
    pub fn central_character(&self) -> Character {
        match self {
            GSp4Rep::Supercuspidal { central, .. } => central.clone(),
            GSp4Rep::StKlingen { chi, tau } | GSp4Rep::SpKlingen { chi, tau } | GSp4Rep::Jqz { chi, tau } => {
                chi * &tau.central_character()
            }
            GSp4Rep::StSiegel { tau, mu } | GSp4Rep::SpSiegel { tau, mu } => tau.central_character() * mu.pow(2),
            GSp4Rep::TwistedSteinberg { chi } => chi.pow(2),
            GSp4Rep::PiGen { tau } | GSp4Rep::PiNg { tau } => tau.central_character(),
            GSp4Rep::Jpy { tau, chi } => tau.central_character() * chi.pow(2),
            GSp4Rep::Jb { chi1, chi2, chi } => chi.pow(2) * chi1 * chi2,
        }
    }

    pub fn is_supercuspidal(&self) -> bool {
        matches!(self, GSp4Rep::Supercuspidal { .. })
    }

    /// Essentially discrete series (supercuspidals included).
    pub fn is_discrete_series(&self) -> bool {
        matches!(
            self,
            GSp4Rep::Supercuspidal { .. }
                | GSp4Rep::StKlingen { .. }
                | GSp4Rep::StSiegel { .. }
                | GSp4Rep::TwistedSteinberg { .. }
        )
    }

    /// Short variant tag.
    pub fn variant(&self) -> &'static str {
        match self {
            GSp4Rep::Supercuspidal { origin: ScOrigin::Lift22(_), .. } => "SC.Lift22",
            GSp4Rep::Supercuspidal { origin: ScOrigin::Lift40(_), .. } => "SC.Lift40",
            GSp4Rep::Supercuspidal { .. } => "SC.NonLift",
            GSp4Rep::StKlingen { .. } => "StKlingen",
            GSp4Rep::SpKlingen { .. } => "SpKlingen",
            GSp4Rep::StSiegel { .. } => "StSiegel",
            GSp4Rep::SpSiegel { .. } => "SpSiegel",
            GSp4Rep::TwistedSteinberg { .. } => "TwistedSteinberg",
            GSp4Rep::PiGen { .. } => "PiGen",
            GSp4Rep::PiNg { .. } => "PiNg",
            GSp4Rep::Jqz { .. } => "Jqz",
            GSp4Rep::Jpy { .. } => "Jpy",
            GSp4Rep::Jb { .. } => "Jb",
        }
    }
}

/// A Langlands quotient is generic iff its standard module is irreducible.
pub fn gsp4_is_generic(pi: &GSp4Rep) -> bool {
    match pi {
        GSp4Rep::Supercuspidal { origin, .. } => !matches!(origin, ScOrigin::Lift40(_)),
        GSp4Rep::StKlingen { .. } | GSp4Rep::StSiegel { .. } | GSp4Rep::TwistedSteinberg { .. } => true,
        GSp4Rep::SpKlingen { .. } | GSp4Rep::SpSiegel { .. } => false,
        GSp4Rep::PiGen { .. } => true,
        GSp4Rep::PiNg { .. } => false,
        GSp4Rep::Jqz { chi, tau } => !klingen_reducible(chi, tau).is_reducible(),
        GSp4Rep::Jpy { tau, chi } => !siegel_reducible(tau, chi).is_reducible(),
        GSp4Rep::Jb { chi1, chi2, .. } => !borel_reducible(chi1, chi2),
    }
}

/// Non-generic tempered: the zero locus of the lift to GSO(3,3).
pub fn gsp4_is_tempered_ng(pi: &GSp4Rep) -> bool {
    matches!(pi, GSp4Rep::PiNg { .. } | GSp4Rep::Supercuspidal { origin: ScOrigin::Lift40(_), .. })
}

/// Identifier of an L-packet.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PacketId {
    /// `{pi_gen(tau), pi_ng(tau)}`.
    Tempered(Gl2Rep),
    Single(GSp4Rep),
}

/// `pi` is expected in canonical form.
pub fn packet_of(pi: &GSp4Rep) -> PacketId {
    match pi {
        GSp4Rep::PiGen { tau } | GSp4Rep::PiNg { tau } => PacketId::Tempered(tau.clone()),
        other => PacketId::Single(other.clone()),
    }
}

pub fn packet_has_generic(p: &PacketId) -> bool {
    match p {
        PacketId::Tempered(_) => true,
        PacketId::Single(pi) => gsp4_is_generic(pi),
    }
}

impl fmt::Display for ScOrigin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScOrigin::Lift22(s) => write!(f, "lift22({}, {})", s.tau1, s.tau2),
            ScOrigin::Lift40(s) => write!(f, "lift40({}, {})", s.tau1, s.tau2),
            ScOrigin::NonLift => f.write_str("generic"),
        }
    }
}

impl fmt::Display for GSp4Rep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GSp4Rep::Supercuspidal { name, .. } => write!(f, "SC({name})"),
            GSp4Rep::StKlingen { chi, tau } => write!(f, "St({chi}, {tau})"),
            GSp4Rep::SpKlingen { chi, tau } => write!(f, "Sp({chi}, {tau})"),
            GSp4Rep::StSiegel { tau, mu } => write!(f, "St({tau}, {mu})"),
            GSp4Rep::SpSiegel { tau, mu } => write!(f, "Sp({tau}, {mu})"),
            GSp4Rep::TwistedSteinberg { chi } => write!(f, "St_PGSp4({chi})"),
            GSp4Rep::PiGen { tau } => write!(f, "pi_gen({tau})"),
            GSp4Rep::PiNg { tau } => write!(f, "pi_ng({tau})"),
            GSp4Rep::Jqz { chi, tau } => write!(f, "J_QZ({chi}, {tau})"),
            GSp4Rep::Jpy { tau, chi } => write!(f, "J_PY({tau}, {chi})"),
            GSp4Rep::Jb { chi1, chi2, chi } => write!(f, "J_B({chi1}, {chi2}; {chi})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charlattice::Symbol;
    use crate::repdata::gl2::ScToken;

    fn ch(name: &str, order: Option<u32>) -> Character {
        Character::symbol(&Symbol::new(name, order, false).unwrap())
    }

    #[test]
    fn siegel_steinberg_identification() {
        let c2 = ch("c2", None);
        // trivial central character of st_{c1/c2} forces c1 = c2 * q with q quadratic
        let q = ch("q", Some(2));
        let c1 = &c2 * &q;
        let a = GSp4Rep::StSiegel { tau: Gl2Rep::steinberg(&(&c1 / &c2)), mu: c2.clone() };
        let b = GSp4Rep::StSiegel { tau: Gl2Rep::steinberg(&(&c2 / &c1)), mu: c1.clone() };
        assert!(gsp4_equal(&a, &b));
    }

    #[test]
    fn pi_gen_and_pi_ng_differ_but_share_packet() {
        let t = ScToken::new("tau", Character::trivial(), &[]).unwrap();
        let tau = Gl2Rep::supercuspidal(&t, &Character::trivial());
        let g = GSp4Rep::PiGen { tau: tau.clone() };
        let n = GSp4Rep::PiNg { tau };
        assert!(!gsp4_equal(&g, &n));
        assert_eq!(packet_of(&g), packet_of(&n));
        assert!(packet_has_generic(&packet_of(&n)));
        assert!(!gsp4_is_generic(&n) && gsp4_is_tempered_ng(&n));
    }

    #[test]
    fn borel_swap_at_equal_exponents() {
        let a = ch("a", None).shift(Exponent::new(1, 2));
        let b = ch("b", Some(3)).shift(Exponent::new(1, 2));
        let c = ch("c", None);
        let x = GSp4Rep::Jb { chi1: a.clone(), chi2: b.clone(), chi: c.clone() };
        let y = GSp4Rep::Jb { chi1: b, chi2: a, chi: c };
        assert!(gsp4_equal(&x, &y));
    }

    #[test]
    fn weyl_orbit_has_eight_elements_generically() {
        let a = ch("a", None).shift(Exponent::new(3, 4));
        let b = ch("b", None).shift(Exponent::new(1, 4));
        assert_eq!(borel_weyl_orbit(&a, &b, &ch("c", None)).len(), 8);
    }

    #[test]
    fn jqz_submodule_form_dualized() {
        let chi = ch("x", None).shift(Exponent::new(-3, 2));
        let t = ScToken::new("tau", Character::trivial(), &[]).unwrap();
        let tau = Gl2Rep::supercuspidal(&t, &Character::trivial());
        let sub = canonicalize_gsp4(&GSp4Rep::Jqz { chi: chi.clone(), tau: tau.clone() }).unwrap();
        assert_eq!(sub, GSp4Rep::Jqz { chi: chi.inv(), tau: tau.twist(&chi) });
        assert_eq!(sub.central_character(), chi * tau.central_character());
    }

    #[test]
    fn st_klingen_validation() {
        let chi0 = ch("chi0", Some(2));
        let t = ScToken::generated("tau", Character::trivial(), std::slice::from_ref(&chi0)).unwrap();
        let tau = Gl2Rep::supercuspidal(&t, &Character::trivial());
        assert!(canonicalize_gsp4(&GSp4Rep::StKlingen { chi: chi0.clone(), tau: tau.clone() }).is_ok());
        let bare = ScToken::new("sigma", Character::trivial(), &[]).unwrap();
        let sigma = Gl2Rep::supercuspidal(&bare, &Character::trivial());
        assert!(canonicalize_gsp4(&GSp4Rep::StKlingen { chi: chi0.clone(), tau: sigma }).is_err());
        assert!(canonicalize_gsp4(&GSp4Rep::StKlingen { chi: Character::trivial(), tau }).is_err());
    }

    #[test]
    fn generic_unitary_borel() {
        let x = GSp4Rep::Jb { chi1: ch("a", None), chi2: ch("b", None), chi: ch("c", None) };
        assert!(gsp4_is_generic(&canonicalize_gsp4(&x).unwrap()));
    }
}
