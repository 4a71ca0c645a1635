//! Irreducible submodules of standard modules of GSp4.

use core::fmt;

use crate::charlattice::{sign, Character, Exponent};
use crate::error::{Error, Result};
use crate::repdata::gl2::Gl2Rep;
use crate::repdata::gsp4::{canonicalize_gsp4, dominant_borel, GSp4Rep};
use crate::repdata::reducibility::{klingen_reducible, siegel_reducible, KlingenReducibility, SiegelReducibility};

/// An induced representation of GSp4 from one of its three proper parabolics.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum StandardModule {
    /// `I_QZ(chi, tau)`.
    Klingen { chi: Character, tau: Gl2Rep },
    /// `I_PY(tau, chi)`.
    Siegel { tau: Gl2Rep, chi: Character },
    /// `I_B(chi1, chi2; chi)`.
    Borel { chi1: Character, chi2: Character, chi: Character },
}

impl fmt::Display for StandardModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StandardModule::Klingen { chi, tau } => write!(f, "I_QZ({chi}, {tau})"),
            StandardModule::Siegel { tau, chi } => write!(f, "I_PY({tau}, {chi})"),
            StandardModule::Borel { chi1, chi2, chi } => write!(f, "I_B({chi1}, {chi2}; {chi})"),
        }
    }
}

/// The submodule: unique, or the two tempered summands of `I_QZ(1, tau)`.
#[derive(Clone, Debug, PartialEq, Eq)]
#[allow(clippy::large_enum_variant)]
pub enum Classified {
    Unique(GSp4Rep),
    Pair(GSp4Rep, GSp4Rep),
}

impl Classified {
    pub fn contains(&self, pi: &GSp4Rep) -> bool {
        match self {
            Classified::Unique(x) => x == pi,
            Classified::Pair(a, b) => a == pi || b == pi,
        }
    }

    pub fn unique(self) -> Option<GSp4Rep> {
        match self {
            Classified::Unique(x) => Some(x),
            Classified::Pair(..) => None,
        }
    }
}

fn abs(n: i64, d: i64) -> Character {
    Character::abs_frac(n, d)
}

fn canon(pi: GSp4Rep) -> Result<Classified> {
    canonicalize_gsp4(&pi).map(Classified::Unique)
}

/// Classifies the irreducible submodule.
///
/// Klingen and Siegel data whose exponent is negative are read as the
/// submodule form of a standard module. Positive exponents are read
/// literally, so the reducibility points yield their discrete series or
/// tempered submodules. Borel data, and Klingen data with non-discrete `tau`,
/// are first moved into the dominant Weyl chamber.
pub fn classify_standard_module(data: &StandardModule) -> Result<Classified> {
    match data {
        StandardModule::Borel { chi1, chi2, chi } => {
            let (chi1, chi2, chi) = dominant_borel(chi1, chi2, chi);
            Ok(Classified::Unique(GSp4Rep::Jb { chi1, chi2, chi }))
        }
        StandardModule::Klingen { chi, tau } if !tau.is_discrete_series() => {
            let (upper, lower) = tau.principal_series_data().expect("non-discrete GL2 data");
            let borel = if matches!(tau, Gl2Rep::LanglandsQuotient { .. }) {
                // chi ∘ det sits inside pi(lower, upper) = pi(upper |-|^{-1}, upper)
                StandardModule::Borel { chi1: chi.clone(), chi2: &lower / &upper, chi: upper }
            } else {
                StandardModule::Borel { chi1: chi.clone(), chi2: &upper / &lower, chi: lower }
            };
            classify_standard_module(&borel)
        }
        StandardModule::Klingen { chi, tau } => match sign(chi.abs_exponent()) {
            -1 => canon(GSp4Rep::Jqz { chi: chi.clone(), tau: tau.clone() }),
            0 if chi.is_trivial() => {
                Ok(Classified::Pair(GSp4Rep::PiGen { tau: tau.clone() }, GSp4Rep::PiNg { tau: tau.clone() }))
            }
            0 => canon(GSp4Rep::Jqz { chi: chi.clone(), tau: tau.clone() }),
            _ => match klingen_reducible(chi, tau) {
                KlingenReducibility::GenSteinbergPoint => {
                    canon(GSp4Rep::StKlingen { chi: chi.unitary_part(), tau: tau.twist(&abs(1, 2)) })
                }
                KlingenReducibility::TwistedSteinbergPoint => {
                    let Gl2Rep::Steinberg { chi: mu } = tau else { unreachable!("Steinberg point") };
                    canon(GSp4Rep::TwistedSteinberg { chi: mu.shift(Exponent::from_integer(1)) })
                }
                _ => canon(GSp4Rep::Jqz { chi: chi.clone(), tau: tau.clone() }),
            },
        },
        StandardModule::Siegel { tau, chi } => {
            if !tau.is_discrete_series() {
                return Err(Error::domain(
                    "classify_standard_module",
                    alloc::format!("Siegel data needs a discrete series, got {tau}; use Borel data"),
                ));
            }
            match sign(tau.central_character().abs_exponent()) {
                1 => match siegel_reducible(tau, chi) {
                    SiegelReducibility::SupercuspidalPoint => {
                        canon(GSp4Rep::StSiegel { tau: tau.twist(&abs(-1, 2)), mu: chi.shift(Exponent::new(1, 2)) })
                    }
                    SiegelReducibility::SteinbergPoint => {
                        canon(GSp4Rep::PiGen { tau: Gl2Rep::steinberg(&chi.shift(Exponent::new(1, 2))) })
                    }
                    SiegelReducibility::QuadraticSteinbergPoint => {
                        canon(GSp4Rep::StSiegel { tau: tau.twist(&abs(-1, 2)), mu: chi.shift(Exponent::new(1, 2)) })
                    }
                    SiegelReducibility::TwistedSteinbergPoint => {
                        canon(GSp4Rep::TwistedSteinberg { chi: chi.shift(Exponent::new(3, 2)) })
                    }
                    _ => canon(GSp4Rep::Jpy { tau: tau.clone(), chi: chi.clone() }),
                },
                _ => canon(GSp4Rep::Jpy { tau: tau.clone(), chi: chi.clone() }),
            }
        }
    }
}

/// A standard module whose classification contains `pi`; `None` for supercuspidals.
pub fn standard_module(pi: &GSp4Rep) -> Result<Option<StandardModule>> {
    let pi = canonicalize_gsp4(pi)?;
    Ok(match pi {
        GSp4Rep::Supercuspidal { .. } => None,
        GSp4Rep::StKlingen { chi, tau } => {
            Some(StandardModule::Klingen { chi: chi.shift(Exponent::from_integer(1)), tau: tau.twist(&abs(-1, 2)) })
        }
        GSp4Rep::StSiegel { tau, mu } => {
            Some(StandardModule::Siegel { tau: tau.twist(&abs(1, 2)), chi: mu.shift(Exponent::new(-1, 2)) })
        }
        GSp4Rep::TwistedSteinberg { chi } => Some(StandardModule::Klingen {
            chi: abs(2, 1),
            tau: Gl2Rep::steinberg(&chi.shift(Exponent::from_integer(-1))),
        }),
        GSp4Rep::PiGen { tau } | GSp4Rep::PiNg { tau } => {
            Some(StandardModule::Klingen { chi: Character::trivial(), tau })
        }
        GSp4Rep::Jqz { chi, tau } => {
            if sign(chi.abs_exponent()) > 0 {
                Some(StandardModule::Klingen { chi: chi.inv(), tau: tau.twist(&chi) })
            } else {
                Some(StandardModule::Klingen { chi, tau })
            }
        }
        GSp4Rep::Jpy { tau, chi } => {
            let omega = tau.central_character();
            if sign(omega.abs_exponent()) > 0 {
                Some(StandardModule::Siegel { tau: tau.dual(), chi: omega * chi })
            } else {
                Some(StandardModule::Siegel { tau, chi })
            }
        }
        GSp4Rep::Jb { chi1, chi2, chi } => {
            let c = &chi * &chi1 * &chi2;
            Some(StandardModule::Borel { chi1: chi1.inv(), chi2: chi2.inv(), chi: c })
        }
        GSp4Rep::SpKlingen { .. } | GSp4Rep::SpSiegel { .. } => unreachable!("canonical form has no Sp variants"),
    })
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
    fn tempered_pair() {
        let t = ScToken::new("tau", ch("w", None), &[]).unwrap();
        let tau = Gl2Rep::supercuspidal(&t, &Character::trivial());
        let c =
            classify_standard_module(&StandardModule::Klingen { chi: Character::trivial(), tau: tau.clone() }).unwrap();
        assert_eq!(c, Classified::Pair(GSp4Rep::PiGen { tau: tau.clone() }, GSp4Rep::PiNg { tau }));
    }

    #[test]
    fn generalized_steinberg_klingen() {
        let chi0 = ch("chi0", Some(2));
        let t = ScToken::generated("tau", Character::trivial(), std::slice::from_ref(&chi0)).unwrap();
        let tau0 = Gl2Rep::supercuspidal(&t, &Character::trivial());
        let data = StandardModule::Klingen { chi: chi0.shift(1.into()), tau: tau0.twist(&abs(-1, 2)) };
        let c = classify_standard_module(&data).unwrap();
        assert_eq!(c, Classified::Unique(GSp4Rep::StKlingen { chi: chi0, tau: tau0 }));
    }

    #[test]
    fn borel_boundary_case() {
        // I_B(chi1 |-|^{-s1}, |-|^{-1}; chi): the submodule is the dominant Langlands quotient
        let chi1 = ch("u", None).shift(Exponent::new(-3, 2));
        let chi = ch("c", None);
        let c =
            classify_standard_module(&StandardModule::Borel { chi1: chi1.clone(), chi2: abs(-1, 1), chi: chi.clone() })
                .unwrap()
                .unique()
                .unwrap();
        let expected = GSp4Rep::Jb { chi1: chi1.inv(), chi2: abs(1, 1), chi: &chi * &chi1 * abs(-1, 1) };
        assert_eq!(c, canonicalize_gsp4(&expected).unwrap());
    }

    #[test]
    fn one_dimensional_klingen_goes_through_borel() {
        let chi1 = ch("u", None).shift(Exponent::from_integer(-2));
        let psi = ch("p", None);
        let viaone =
            classify_standard_module(&StandardModule::Klingen { chi: chi1.clone(), tau: Gl2Rep::one_dim(&psi) })
                .unwrap();
        let borel = classify_standard_module(&StandardModule::Borel {
            chi1,
            chi2: abs(-1, 1),
            chi: psi.shift(Exponent::new(1, 2)),
        })
        .unwrap();
        assert_eq!(viaone, borel);
    }

    #[test]
    fn siegel_non_discrete_is_domain_error() {
        let a = ch("a", None);
        let ps = Gl2Rep::principal_series(&a, &ch("b", None)).unwrap();
        let e = classify_standard_module(&StandardModule::Siegel { tau: ps, chi: a }).unwrap_err();
        assert_eq!(e.code(), "domain_error");
    }

    #[test]
    fn siegel_points() {
        let mu = ch("mu", None);
        let st = classify_standard_module(&StandardModule::Siegel {
            tau: Gl2Rep::steinberg(&abs(3, 2)),
            chi: mu.shift(Exponent::new(-3, 2)),
        })
        .unwrap();
        assert_eq!(st, Classified::Unique(GSp4Rep::TwistedSteinberg { chi: mu.clone() }));
        let g =
            classify_standard_module(&StandardModule::Siegel { tau: Gl2Rep::steinberg(&abs(1, 2)), chi: mu.clone() })
                .unwrap();
        assert_eq!(g, Classified::Unique(GSp4Rep::PiGen { tau: Gl2Rep::steinberg(&mu.shift(Exponent::new(1, 2))) }));
    }
}
