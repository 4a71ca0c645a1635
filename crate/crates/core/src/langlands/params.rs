use alloc::vec::Vec;

use super::{Core, LParameter, LPiece};
use crate::charlattice::{Character, Exponent};
use crate::error::{Error, Result};
use crate::repdata::{canonicalize_gsp4, jl, GSp4Rep, Gl2Rep, Gl4Rep, Gso33Rep, ScOrigin};

fn gl2_pieces(rho: &Gl2Rep) -> Vec<LPiece> {
    match rho {
        Gl2Rep::Supercuspidal { token, twist } => alloc::vec![LPiece::new(Core::Irr2(token.clone()), twist.clone(), 1)],
        Gl2Rep::Steinberg { chi } => alloc::vec![LPiece::character(chi, 2)],
        Gl2Rep::PrincipalSeries { chi1, chi2 } => alloc::vec![LPiece::character(chi1, 1), LPiece::character(chi2, 1)],
        Gl2Rep::LanglandsQuotient { upper, lower } => {
            alloc::vec![LPiece::character(upper, 1), LPiece::character(lower, 1)]
        }
    }
}

fn twisted(pieces: Vec<LPiece>, chi: &Character) -> Vec<LPiece> {
    pieces.iter().map(|p| p.twisted(chi)).collect()
}

/// Two-dimensional, without similitude; `det` is the central character.
pub fn lparam_gl2(rho: &Gl2Rep) -> LParameter {
    LParameter::new(gl2_pieces(rho), None)
}

/// The parameter of `pi` as a four-dimensional symplectic-similitude representation.
pub fn lparam_gsp4(pi: &GSp4Rep) -> Result<LParameter> {
    let pi = canonicalize_gsp4(pi)?;
    let sim = pi.central_character();
    let pieces = match &pi {
        GSp4Rep::Supercuspidal { name, origin, .. } => match origin {
            ScOrigin::Lift22(s) => [gl2_pieces(&s.tau1), gl2_pieces(&s.tau2)].concat(),
            ScOrigin::Lift40(s) => [gl2_pieces(&jl(&s.tau1)), gl2_pieces(&jl(&s.tau2))].concat(),
            ScOrigin::NonLift => {
                alloc::vec![LPiece::new(Core::Irr4 { name: name.clone(), sim: sim.clone() }, Character::trivial(), 1)]
            }
        },
        GSp4Rep::StKlingen { tau, .. } => gl2_pieces(tau).iter().map(|p| p.with_r(2)).collect(),
        GSp4Rep::StSiegel { tau, mu } => {
            let mut v = twisted(gl2_pieces(tau), mu);
            v.push(LPiece::character(mu, 2));
            v
        }
        GSp4Rep::TwistedSteinberg { chi } => alloc::vec![LPiece::character(chi, 4)],
        GSp4Rep::PiGen { tau } | GSp4Rep::PiNg { tau } => [gl2_pieces(tau), gl2_pieces(tau)].concat(),
        GSp4Rep::Jqz { chi, tau } => [gl2_pieces(tau), twisted(gl2_pieces(tau), chi)].concat(),
        GSp4Rep::Jpy { tau, chi } => {
            let mut v = twisted(gl2_pieces(tau), chi);
            v.push(LPiece::character(chi, 1));
            v.push(LPiece::character(&(chi * &tau.central_character()), 1));
            v
        }
        GSp4Rep::Jb { chi1, chi2, chi } => {
            [chi * chi1 * chi2, chi.clone(), chi * chi1, chi * chi2].iter().map(|c| LPiece::character(c, 1)).collect()
        }
        GSp4Rep::SpKlingen { .. } | GSp4Rep::SpSiegel { .. } => unreachable!("canonical form has no Sp variants"),
    };
    Ok(LParameter::new(pieces, Some(sim)))
}

/// Parameter of a GL4 representation; supercuspidals need the similitude, see [`lparam_gso33`].
pub fn lparam_gl4(big_pi: &Gl4Rep) -> Result<LParameter> {
    let half = Exponent::new(1, 2);
    let pieces = match big_pi {
        Gl4Rep::Supercuspidal { .. } => {
            return Err(Error::unsupported("lparam_gl4", alloc::format!("{big_pi}: opaque core needs a similitude")))
        }
        Gl4Rep::InducedP { tau1, tau2 } | Gl4Rep::Jp { tau1, tau2 } => [gl2_pieces(tau1), gl2_pieces(tau2)].concat(),
        Gl4Rep::SteinbergOfTau { tau } => gl2_pieces(tau).iter().map(|p| p.with_r(2)).collect(),
        Gl4Rep::SpehOfTau { tau } => {
            [twisted(gl2_pieces(tau), &Character::abs_pow(half)), twisted(gl2_pieces(tau), &Character::abs_pow(-half))]
                .concat()
        }
        Gl4Rep::TwistedSteinberg { chi } => alloc::vec![LPiece::character(chi, 4)],
        Gl4Rep::Jq { chi1, tau, chi2 } => {
            let mut v = gl2_pieces(tau);
            v.push(LPiece::character(chi1, 1));
            v.push(LPiece::character(chi2, 1));
            v
        }
        Gl4Rep::Jb0 { chars } => chars.iter().map(|c| LPiece::character(c, 1)).collect(),
    };
    Ok(LParameter::new(pieces, None))
}

/// `phi_Pi` with similitude `mu`.
pub fn lparam_gso33(sigma: &Gso33Rep) -> Result<LParameter> {
    match &sigma.gl4 {
        Gl4Rep::Supercuspidal { name, .. } => Ok(LParameter::new(
            alloc::vec![LPiece::new(Core::Irr4 { name: name.clone(), sim: sigma.mu.clone() }, Character::trivial(), 1)],
            Some(sigma.mu.clone()),
        )),
        gl4 => Ok(LParameter::new(lparam_gl4(gl4)?.pieces, Some(sigma.mu.clone()))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charlattice::Symbol;
    use crate::repdata::ScToken;

    fn ch(name: &str, order: Option<u32>) -> Character {
        Character::symbol(&Symbol::new(name, order, false).unwrap())
    }

    #[test]
    fn twisted_steinberg() {
        let chi = ch("chi", None);
        let p = lparam_gsp4(&GSp4Rep::TwistedSteinberg { chi: chi.clone() }).unwrap();
        assert_eq!(p.pieces(), [LPiece::character(&chi, 4)]);
        assert_eq!(p.sim(), Some(&chi.pow(2)));
        assert!(p.is_symplectic_closed() && p.is_discrete());
    }

    #[test]
    fn borel_parameter() {
        let (a, b, c) = (ch("a", None), ch("b", None), ch("c", None));
        let p = lparam_gsp4(&GSp4Rep::Jb { chi1: a.clone(), chi2: b.clone(), chi: c.clone() }).unwrap();
        let mut expected: Vec<_> =
            [&c * &a * &b, c.clone(), &c * &a, &c * &b].iter().map(|x| LPiece::character(x, 1)).collect();
        expected.sort();
        assert_eq!(p.pieces(), expected.as_slice());
        assert!(p.is_symplectic_closed() && !p.is_discrete());
    }

    #[test]
    fn gl2_one_dimensional() {
        let chi = ch("chi", None);
        let p = lparam_gl2(&Gl2Rep::one_dim(&chi));
        assert_eq!(p.det(), chi.pow(2));
        assert_eq!(p.dim(), 2);
    }

    #[test]
    fn klingen_steinberg_is_discrete() {
        let q = ch("q", Some(2));
        let t = ScToken::generated("t", ch("w", None), std::slice::from_ref(&q)).unwrap();
        let tau = Gl2Rep::supercuspidal(&t, &Character::trivial());
        let p = lparam_gsp4(&GSp4Rep::StKlingen { chi: q, tau }).unwrap();
        assert!(p.is_symplectic_closed());
        assert!(p.is_discrete());
        assert_eq!(p.dim(), 4);
    }
}
