//! The explicit theta lifts GSO(4,0) → GSp4, GSO(2,2) → GSp4 and GSp4 → GSO(3,3).

use core::fmt;

use crate::charlattice::Character;
use crate::error::{Error, Result};
use crate::repdata::{
    canonicalize_gsp4, gsp4_is_tempered_ng, jl, jl_inverse, GSp4Rep, Gl2Rep, Gl4Rep, Gso22Rep, Gso33Rep, Gso40Rep,
    ScOrigin,
};

/// A lift together with the table row that produced it. `None` is the zero lift.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaResult<T> {
    pub value: Option<T>,
    pub provenance: &'static str,
}

/// Which Witt tower a representation of GSp4 lifts to first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TowerTag {
    Tower40,
    Tower33,
}

impl fmt::Display for TowerTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TowerTag::Tower40 => "GSO(4,0)",
            TowerTag::Tower33 => "GSO(3,3)",
        })
    }
}

fn recheck_22(sigma: &Gso22Rep) -> Result<Gso22Rep> {
    Gso22Rep::new(sigma.tau1.clone(), sigma.tau2.clone())
}

/// `Θ(τ1^D ⊠ τ2^D)`.
pub fn theta_40_to_gsp4(sigma: &Gso40Rep) -> Result<ThetaResult<GSp4Rep>> {
    let sigma = Gso40Rep::new(sigma.tau1.clone(), sigma.tau2.clone())?.canonical();
    if sigma.tau1 == sigma.tau2 {
        return Ok(ThetaResult { value: Some(GSp4Rep::PiNg { tau: jl(&sigma.tau1) }), provenance: "Table3.a" });
    }
    let pi = GSp4Rep::Supercuspidal {
        name: alloc::format!("theta40[{sigma}]"),
        central: sigma.central_character(),
        origin: ScOrigin::Lift40(sigma),
    };
    Ok(ThetaResult { value: Some(pi), provenance: "Table3.b" })
}

/// `θ(τ1 ⊠ τ2)`.
pub fn theta_22_to_gsp4(sigma: &Gso22Rep) -> Result<ThetaResult<GSp4Rep>> {
    let sigma = recheck_22(sigma)?.canonical();
    let (a, b) = (&sigma.tau1, &sigma.tau2);
    let (pi, row) = match (a.is_discrete_series(), b.is_discrete_series()) {
        (true, true) if a == b => (GSp4Rep::PiGen { tau: a.clone() }, "Table2.a"),
        (true, true) => match (a, b) {
            (Gl2Rep::Steinberg { chi: c1 }, Gl2Rep::Steinberg { chi: c2 }) => {
                (GSp4Rep::StSiegel { tau: Gl2Rep::steinberg(&(c1 / c2)), mu: c2.clone() }, "Table2.d")
            }
            (Gl2Rep::Supercuspidal { .. }, Gl2Rep::Steinberg { chi })
            | (Gl2Rep::Steinberg { chi }, Gl2Rep::Supercuspidal { .. }) => {
                let sc = if a.is_supercuspidal() { a } else { b };
                (GSp4Rep::StSiegel { tau: sc.twist(&chi.inv()), mu: chi.clone() }, "Table2.c")
            }
            _ => {
                let pi = GSp4Rep::Supercuspidal {
                    name: alloc::format!("theta22[{sigma}]"),
                    central: sigma.central_character(),
                    origin: ScOrigin::Lift22(sigma.clone()),
                };
                (pi, "Table2.b")
            }
        },
        (true, false) | (false, true) => {
            let (ds, other) = if a.is_discrete_series() { (a, b) } else { (b, a) };
            let (_, lower) = other.principal_series_data().expect("non-discrete GL2 data");
            (GSp4Rep::Jpy { tau: ds.twist(&lower.inv()), chi: lower }, "Table2.e")
        }
        (false, false) => {
            let (u1, l1) = a.principal_series_data().expect("non-discrete GL2 data");
            let (u2, l2) = b.principal_series_data().expect("non-discrete GL2 data");
            let s = |u: &Character, l: &Character| (u / l).abs_exponent();
            let ((_, l1), (u2, l2)) =
                if s(&u1, &l1) >= s(&u2, &l2) { ((u1, l1), (u2, l2)) } else { ((u2, l2), (u1, l1)) };
            (GSp4Rep::Jb { chi1: &u2 / &l1, chi2: &l2 / &l1, chi: l1 }, "Table2.f")
        }
    };
    Ok(ThetaResult { value: Some(canonicalize_gsp4(&pi)?), provenance: row })
}

/// `θ(π)` on GSO(3,3), zero exactly on the non-generic tempered representations.
pub fn theta_gsp4_to_33(pi: &GSp4Rep) -> Result<ThetaResult<Gso33Rep>> {
    let pi = canonicalize_gsp4(pi)?;
    let omega = pi.central_character();
    let (value, row) = match &pi {
        GSp4Rep::Supercuspidal { name, origin, .. } => match origin {
            ScOrigin::NonLift => (
                Some((
                    Gl4Rep::Supercuspidal { name: alloc::format!("theta33[{name}]"), central: omega.pow(2) },
                    omega.clone(),
                )),
                "Table1.SC(a)",
            ),
            ScOrigin::Lift22(s) => {
                (Some((Gl4Rep::induced_p(s.tau1.clone(), s.tau2.clone()), s.tau1.central_character())), "Table1.SC(b)")
            }
            ScOrigin::Lift40(_) => (None, "Table1.SC(c)"),
        },
        GSp4Rep::StKlingen { chi, tau } => {
            (Some((Gl4Rep::SteinbergOfTau { tau: tau.clone() }, tau.central_character() * chi)), "Table1.DS(a)")
        }
        GSp4Rep::StSiegel { tau, mu } => {
            (Some((Gl4Rep::induced_p(tau.twist(mu), Gl2Rep::steinberg(mu)), mu.pow(2))), "Table1.DS(b)")
        }
        GSp4Rep::TwistedSteinberg { chi } => {
            (Some((Gl4Rep::TwistedSteinberg { chi: chi.clone() }, chi.pow(2))), "Table1.DS(c)")
        }
        GSp4Rep::Jqz { chi, tau } => {
            (Some((Gl4Rep::jp(tau.twist(chi), tau.clone()), tau.central_character() * chi)), "Table1.NDS(a)")
        }
        GSp4Rep::PiGen { tau } => {
            (Some((Gl4Rep::jp(tau.clone(), tau.clone()), tau.central_character())), "Table1.NDS(b)")
        }
        GSp4Rep::PiNg { .. } => (None, "Table1.NDS(c)"),
        GSp4Rep::Jpy { tau, chi } => {
            let w = tau.central_character();
            let gl4 = Gl4Rep::Jq { chi1: &w * chi, tau: tau.twist(chi), chi2: chi.clone() };
            (Some((gl4, chi.pow(2) * w)), "Table1.NDS(d)")
        }
        GSp4Rep::Jb { chi1, chi2, chi } => {
            let gl4 = Gl4Rep::jb0([chi * chi1 * chi2, chi * chi1, chi * chi2, chi.clone()]);
            (Some((gl4, chi.pow(2) * chi1 * chi2)), "Table1.NDS(e)")
        }
        GSp4Rep::SpKlingen { .. } | GSp4Rep::SpSiegel { .. } => unreachable!("canonical form has no Sp variants"),
    };
    let value = value.map(|(gl4, mu)| Gso33Rep::new(gl4, mu)).transpose()?;
    Ok(ThetaResult { value, provenance: row })
}

/// The swap-orbit representative lifting to `pi` from GSO(2,2), if any.
pub fn theta_22_preimage(pi: &GSp4Rep) -> Result<Option<Gso22Rep>> {
    let pi = canonicalize_gsp4(pi)?;
    let pair = match &pi {
        GSp4Rep::Supercuspidal { origin: ScOrigin::Lift22(s), .. } => Some(s.clone()),
        GSp4Rep::PiGen { tau } => Some(Gso22Rep::new(tau.clone(), tau.clone())?),
        GSp4Rep::StSiegel { tau, mu } => Some(Gso22Rep::new(tau.twist(mu), Gl2Rep::steinberg(mu))?),
        GSp4Rep::Jpy { tau, chi } => {
            let w = tau.central_character();
            Some(Gso22Rep::new(tau.twist(chi), Gl2Rep::langlands_quotient(&(w * chi), chi))?)
        }
        GSp4Rep::Jb { chi1, chi2, chi } => {
            let first = Gl2Rep::langlands_quotient(&(chi * chi1), &(chi * chi2));
            let second = Gl2Rep::langlands_quotient(&(chi * chi1 * chi2), chi);
            Some(Gso22Rep::new(first, second)?)
        }
        _ => None,
    };
    Ok(pair.map(|s| s.canonical()))
}

/// The swap-orbit representative lifting to `pi` from GSO(4,0), if any.
pub fn theta_40_preimage(pi: &GSp4Rep) -> Result<Option<Gso40Rep>> {
    let pi = canonicalize_gsp4(pi)?;
    Ok(match &pi {
        GSp4Rep::Supercuspidal { origin: ScOrigin::Lift40(s), .. } => Some(s.canonical()),
        GSp4Rep::PiNg { tau } => {
            let d = jl_inverse(tau)?;
            Some(Gso40Rep::new(d.clone(), d)?)
        }
        _ => None,
    })
}

pub fn dichotomy(pi: &GSp4Rep) -> Result<TowerTag> {
    let pi = canonicalize_gsp4(pi)?;
    let to40 = theta_40_preimage(&pi)?.is_some();
    let to33 = theta_gsp4_to_33(&pi)?.value.is_some();
    if to40 == to33 {
        return Err(Error::validation("dichotomy", alloc::format!("{pi}: GSO(4,0) {to40}, GSO(3,3) {to33}")));
    }
    Ok(if gsp4_is_tempered_ng(&pi) { TowerTag::Tower40 } else { TowerTag::Tower33 })
}

/// `omega_{θ(π)} = ω_π` on the similitude factor.
pub fn central_character_law(pi: &GSp4Rep, lift: &Gso33Rep) -> bool {
    lift.mu == pi.central_character() && lift.gl4.central_character() == lift.mu.pow(2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charlattice::{Exponent, Symbol};
    use crate::repdata::{gsp4_is_generic, DRep, ScToken};

    fn ch(name: &str, order: Option<u32>) -> Character {
        Character::symbol(&Symbol::new(name, order, false).unwrap())
    }

    fn sc(name: &str, omega: &Character) -> Gl2Rep {
        Gl2Rep::supercuspidal(&ScToken::new(name, omega.clone(), &[]).unwrap(), &Character::trivial())
    }

    #[test]
    fn steinberg_pair_lifts_to_siegel_steinberg() {
        let c2 = ch("c2", None);
        let c1 = &c2 * &ch("q", Some(2));
        let sigma = Gso22Rep::new(Gl2Rep::steinberg(&c1), Gl2Rep::steinberg(&c2)).unwrap();
        let r = theta_22_to_gsp4(&sigma).unwrap();
        assert_eq!(r.provenance, "Table2.d");
        let expected = canonicalize_gsp4(&GSp4Rep::StSiegel { tau: Gl2Rep::steinberg(&(&c1 / &c2)), mu: c2 }).unwrap();
        assert_eq!(r.value.unwrap(), expected);
        assert_eq!(theta_22_to_gsp4(&sigma.swapped()).unwrap().value, Some(expected));
    }

    #[test]
    fn equal_discrete_series_lifts_to_pi_gen() {
        let tau = sc("tau", &ch("w", None));
        let r = theta_22_to_gsp4(&Gso22Rep::new(tau.clone(), tau.clone()).unwrap()).unwrap();
        assert_eq!(r.value, Some(GSp4Rep::PiGen { tau }));
    }

    #[test]
    fn quaternionic_lifts() {
        let chi = ch("chi", None);
        let d = DRep::one_dim(&chi);
        let r = theta_40_to_gsp4(&Gso40Rep::new(d.clone(), d).unwrap()).unwrap();
        assert_eq!(r.value, Some(GSp4Rep::PiNg { tau: Gl2Rep::steinberg(&chi) }));
        let w = ch("w", None);
        let t1 = ScToken::new("t1", w.clone(), &[]).unwrap();
        let t2 = ScToken::new("t2", w.clone(), &[]).unwrap();
        let s = Gso40Rep::new(
            DRep::of_supercuspidal(&t1, &Character::trivial()),
            DRep::of_supercuspidal(&t2, &Character::trivial()),
        )
        .unwrap();
        let pi = theta_40_to_gsp4(&s).unwrap().value.unwrap();
        assert!(!gsp4_is_generic(&pi) && pi.is_supercuspidal());
        assert_eq!(Some(pi.clone()), theta_40_to_gsp4(&s.swapped()).unwrap().value);
        assert_eq!(theta_gsp4_to_33(&pi).unwrap().value, None);
        assert_eq!(dichotomy(&pi).unwrap(), TowerTag::Tower40);
        assert_eq!(theta_40_preimage(&pi).unwrap(), Some(s.canonical()));
    }

    #[test]
    fn twisted_steinberg_lift() {
        let chi = ch("chi", None);
        let pi = GSp4Rep::TwistedSteinberg { chi: chi.clone() };
        let r = theta_gsp4_to_33(&pi).unwrap();
        let v = r.value.unwrap();
        assert_eq!(v, Gso33Rep { gl4: Gl4Rep::TwistedSteinberg { chi: chi.clone() }, mu: chi.pow(2) });
        assert!(central_character_law(&pi, &v));
        assert_eq!(dichotomy(&pi).unwrap(), TowerTag::Tower33);
    }

    #[test]
    fn siegel_steinberg_lift() {
        let tau = sc("tau", &Character::trivial());
        let mu = ch("mu", None);
        let pi = GSp4Rep::StSiegel { tau: tau.clone(), mu: mu.clone() };
        let v = theta_gsp4_to_33(&pi).unwrap().value.unwrap();
        assert_eq!(v.gl4, Gl4Rep::induced_p(tau.twist(&mu), Gl2Rep::steinberg(&mu)));
        assert_eq!(v.mu, mu.pow(2));
        assert_eq!(
            theta_22_preimage(&pi).unwrap(),
            Some(Gso22Rep::new(tau.twist(&mu), Gl2Rep::steinberg(&mu)).unwrap().canonical())
        );
    }

    #[test]
    fn klingen_steinberg_has_no_22_preimage() {
        let chi0 = ch("chi0", Some(2));
        let t = ScToken::generated("tau", Character::trivial(), std::slice::from_ref(&chi0)).unwrap();
        let pi = GSp4Rep::StKlingen { chi: chi0, tau: Gl2Rep::supercuspidal(&t, &Character::trivial()) };
        assert_eq!(theta_22_preimage(&pi).unwrap(), None);
    }

    #[test]
    fn row_e_preimage() {
        let tau1 = sc("tau", &ch("w", None));
        let chi = ch("x", None).shift(Exponent::new(-1, 4));
        let chi_p = &tau1.central_character() / &chi;
        let tau2 = Gl2Rep::langlands_quotient(&chi_p, &chi);
        let sigma = Gso22Rep::new(tau1.clone(), tau2).unwrap();
        let pi = theta_22_to_gsp4(&sigma).unwrap().value.unwrap();
        assert_eq!(pi, canonicalize_gsp4(&GSp4Rep::Jpy { tau: tau1.twist(&chi.inv()), chi }).unwrap());
        assert_eq!(theta_22_preimage(&pi).unwrap(), Some(sigma.canonical()));
    }
}
