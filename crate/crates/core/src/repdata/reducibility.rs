//! Reducibility of the Klingen, Siegel and Borel induced representations of
//! GSp4, and of the (2,2) induction of GL4.

use crate::charlattice::{Character, Exponent};
use crate::repdata::gl2::Gl2Rep;

fn is_abs_pm(chi: &Character, s: Exponent) -> bool {
    chi.is_abs_pow(s) || chi.is_abs_pow(-s)
}

fn int(n: i64) -> Exponent {
    Exponent::from_integer(n)
}

/// Reducibility of the Klingen induction `I_QZ(chi, tau)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KlingenReducibility {
    Irreducible,
    /// `chi = 1`, tau discrete series: two tempered summands.
    TemperedSplit,
    /// `chi = chi0 |-|^{±1}`, chi0 a non-trivial self-twist of the supercuspidal tau.
    GenSteinbergPoint,
    /// `tau = st_mu`, `chi = |-|^{±2}`.
    TwistedSteinbergPoint,
    /// tau not a discrete series; the flag is the reducibility of the ambient Borel induction.
    NonDiscrete {
        borel_reducible: bool,
    },
}

impl KlingenReducibility {
    pub fn is_reducible(self) -> bool {
        match self {
            KlingenReducibility::Irreducible => false,
            KlingenReducibility::NonDiscrete { borel_reducible } => borel_reducible,
            _ => true,
        }
    }
}

pub fn klingen_reducible(chi: &Character, tau: &Gl2Rep) -> KlingenReducibility {
    match tau {
        _ if tau.is_discrete_series() && chi.is_trivial() => KlingenReducibility::TemperedSplit,
        Gl2Rep::Supercuspidal { token, .. } => {
            let chi0 = chi.unitary_part();
            if is_abs_pm(&(chi / &chi0), int(1)) && chi0.is_nontrivial_quadratic() && token.fixes(&chi0) {
                KlingenReducibility::GenSteinbergPoint
            } else {
                KlingenReducibility::Irreducible
            }
        }
        Gl2Rep::Steinberg { .. } => {
            if is_abs_pm(chi, int(2)) {
                KlingenReducibility::TwistedSteinbergPoint
            } else {
                KlingenReducibility::Irreducible
            }
        }
        _ => {
            let (a, b) = tau.principal_series_data().expect("non-discrete GL2 data");
            KlingenReducibility::NonDiscrete { borel_reducible: borel_reducible(chi, &(a / b)) }
        }
    }
}

/// Reducibility of the Siegel induction `I_PY(tau, mu)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SiegelReducibility {
    Irreducible,
    /// tau supercuspidal with `omega_tau = |-|^{±1}`.
    SupercuspidalPoint,
    /// `tau = st |-|^{±1/2}`.
    SteinbergPoint,
    /// `tau = st_chi |-|^{±1/2}`, chi non-trivial quadratic.
    QuadraticSteinbergPoint,
    /// `tau = st |-|^{±3/2}`.
    TwistedSteinbergPoint,
    NonDiscrete {
        borel_reducible: bool,
    },
}

impl SiegelReducibility {
    pub fn is_reducible(self) -> bool {
        match self {
            SiegelReducibility::Irreducible => false,
            SiegelReducibility::NonDiscrete { borel_reducible } => borel_reducible,
            _ => true,
        }
    }
}

/// The similitude character never affects reducibility; it is taken for symmetry with the other predicates.
pub fn siegel_reducible(tau: &Gl2Rep, _mu: &Character) -> SiegelReducibility {
    match tau {
        Gl2Rep::Supercuspidal { .. } => {
            if is_abs_pm(&tau.central_character(), int(1)) {
                SiegelReducibility::SupercuspidalPoint
            } else {
                SiegelReducibility::Irreducible
            }
        }
        Gl2Rep::Steinberg { chi } => {
            let half = Exponent::new(1, 2);
            if is_abs_pm(chi, half) {
                SiegelReducibility::SteinbergPoint
            } else if is_abs_pm(chi, Exponent::new(3, 2)) {
                SiegelReducibility::TwistedSteinbergPoint
            } else if (chi.abs_exponent() == half || chi.abs_exponent() == -half)
                && chi.unitary_part().is_nontrivial_quadratic()
            {
                SiegelReducibility::QuadraticSteinbergPoint
            } else {
                SiegelReducibility::Irreducible
            }
        }
        _ => {
            let (a, b) = tau.principal_series_data().expect("non-discrete GL2 data");
            SiegelReducibility::NonDiscrete { borel_reducible: borel_reducible(&a, &b) }
        }
    }
}

/// `I_B(chi1, chi2; chi)` is reducible iff one of `chi1, chi2, chi1 chi2, chi1/chi2`
/// (or an inverse) equals `|-|^{-1}`.
pub fn borel_reducible(chi1: &Character, chi2: &Character) -> bool {
    [chi1.clone(), chi2.clone(), chi1 * chi2, chi1 / chi2].iter().any(|c| is_abs_pm(c, int(1)))
}

/// Reducibility of `I_P(tau1, tau2)` on GL4 for discrete series data.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Gl4InducedReducibility {
    Irreducible,
    /// Supercuspidal segment `tau|-|^{1/2}, tau|-|^{-1/2}`: `St(tau)` below, `Sp(tau)` above.
    SteinbergSpeh,
    /// `st_chi|-|, st_chi|-|^{-1}` up to order: `St_chi` is the unique submodule.
    TwistedSteinbergChain,
    /// `st_chi|-|^{1/2}, st_chi|-|^{-1/2}`: reducible, no discrete series constituent.
    LinkedSteinberg,
    /// Some input is not a discrete series.
    NonDiscrete,
}

impl Gl4InducedReducibility {
    pub fn is_reducible(self) -> bool {
        !matches!(self, Gl4InducedReducibility::Irreducible | Gl4InducedReducibility::NonDiscrete)
    }
}

pub fn gl4_ip_reducible(tau1: &Gl2Rep, tau2: &Gl2Rep) -> Gl4InducedReducibility {
    match (tau1, tau2) {
        (Gl2Rep::Supercuspidal { token: t1, .. }, Gl2Rep::Supercuspidal { token: t2, .. }) if t1 == t2 => {
            let up = Character::abs_pow(int(1));
            if *tau1 == tau2.twist(&up) || *tau2 == tau1.twist(&up) {
                Gl4InducedReducibility::SteinbergSpeh
            } else {
                Gl4InducedReducibility::Irreducible
            }
        }
        (Gl2Rep::Steinberg { chi: a }, Gl2Rep::Steinberg { chi: b }) => {
            let r = a / b;
            if is_abs_pm(&r, int(2)) {
                Gl4InducedReducibility::TwistedSteinbergChain
            } else if is_abs_pm(&r, int(1)) {
                Gl4InducedReducibility::LinkedSteinberg
            } else {
                Gl4InducedReducibility::Irreducible
            }
        }
        _ if tau1.is_discrete_series() && tau2.is_discrete_series() => Gl4InducedReducibility::Irreducible,
        _ => Gl4InducedReducibility::NonDiscrete,
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

    fn abs(n: i64, d: i64) -> Character {
        Character::abs_frac(n, d)
    }

    #[test]
    fn klingen_supercuspidal_cases() {
        let chi0 = ch("chi0", Some(2));
        let t = ScToken::generated("tau", Character::trivial(), std::slice::from_ref(&chi0)).unwrap();
        let tau = Gl2Rep::supercuspidal(&t, &Character::trivial());
        assert_eq!(klingen_reducible(&Character::trivial(), &tau), KlingenReducibility::TemperedSplit);
        assert_eq!(klingen_reducible(&(&chi0 * &abs(1, 1)), &tau), KlingenReducibility::GenSteinbergPoint);
        assert_eq!(klingen_reducible(&(&chi0 * &abs(-1, 1)), &tau), KlingenReducibility::GenSteinbergPoint);
        assert_eq!(klingen_reducible(&abs(1, 3), &tau), KlingenReducibility::Irreducible);
        // |-| alone: chi0 trivial, so not a reducibility point
        assert_eq!(klingen_reducible(&abs(1, 1), &tau), KlingenReducibility::Irreducible);
        let other = ScToken::new("sigma", Character::trivial(), &[]).unwrap();
        let sigma = Gl2Rep::supercuspidal(&other, &Character::trivial());
        assert_eq!(klingen_reducible(&(&chi0 * &abs(1, 1)), &sigma), KlingenReducibility::Irreducible);
    }

    #[test]
    fn klingen_steinberg_cases() {
        let st = Gl2Rep::steinberg(&ch("mu", None));
        assert_eq!(klingen_reducible(&abs(2, 1), &st), KlingenReducibility::TwistedSteinbergPoint);
        assert_eq!(klingen_reducible(&abs(-2, 1), &st), KlingenReducibility::TwistedSteinbergPoint);
        assert_eq!(klingen_reducible(&abs(1, 1), &st), KlingenReducibility::Irreducible);
        assert!(klingen_reducible(&Character::trivial(), &st).is_reducible());
    }

    #[test]
    fn siegel_cases() {
        let mu = ch("mu", None);
        let t = ScToken::new("tau0", Character::trivial(), &[]).unwrap();
        let tau0 = Gl2Rep::supercuspidal(&t, &Character::trivial());
        assert_eq!(siegel_reducible(&tau0.twist(&abs(1, 2)), &mu), SiegelReducibility::SupercuspidalPoint);
        let q = ch("q", Some(2));
        let st_q = Gl2Rep::steinberg(&(&q * &abs(1, 2)));
        assert_eq!(siegel_reducible(&st_q, &mu), SiegelReducibility::QuadraticSteinbergPoint);
        let tq = ScToken::new("tq", q.clone(), &[]).unwrap();
        let tau_q = Gl2Rep::supercuspidal(&tq, &Character::trivial());
        assert_eq!(siegel_reducible(&tau_q, &mu), SiegelReducibility::Irreducible);
        assert_eq!(siegel_reducible(&Gl2Rep::steinberg(&abs(-1, 2)), &mu), SiegelReducibility::SteinbergPoint);
        assert_eq!(siegel_reducible(&Gl2Rep::steinberg(&abs(3, 2)), &mu), SiegelReducibility::TwistedSteinbergPoint);
    }

    #[test]
    fn borel_cases() {
        let u1 = ch("u1", None);
        let u2 = ch("u2", Some(3));
        assert!(!borel_reducible(&u1, &u2));
        assert!(borel_reducible(&u1, &abs(-1, 1)));
        let chi0 = ch("chi0", Some(2));
        assert!(!borel_reducible(&(&chi0 * &abs(-1, 1)), &u1));
        // chi1/chi2 = |-|
        assert!(borel_reducible(&u1.shift(Exponent::new(3, 2)), &u1.shift(Exponent::new(1, 2))));
    }

    #[test]
    fn gl4_cases() {
        let t = ScToken::new("tau", Character::trivial(), &[]).unwrap();
        let tau = Gl2Rep::supercuspidal(&t, &Character::trivial());
        assert_eq!(
            gl4_ip_reducible(&tau.twist(&abs(1, 2)), &tau.twist(&abs(-1, 2))),
            Gl4InducedReducibility::SteinbergSpeh
        );
        let chi = ch("chi", None);
        assert_eq!(
            gl4_ip_reducible(&Gl2Rep::steinberg(&(&chi * &abs(1, 1))), &Gl2Rep::steinberg(&(&chi * &abs(-1, 1)))),
            Gl4InducedReducibility::TwistedSteinbergChain
        );
        let s = ScToken::new("sigma", Character::trivial(), &[]).unwrap();
        let sigma = Gl2Rep::supercuspidal(&s, &Character::trivial());
        assert_eq!(gl4_ip_reducible(&tau, &sigma), Gl4InducedReducibility::Irreducible);
    }
}
