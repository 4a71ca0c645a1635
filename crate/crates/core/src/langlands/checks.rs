use alloc::vec::Vec;

use super::params::{lparam_gl2, lparam_gso33};
use super::Core;
use crate::charlattice::Character;
use crate::error::{Error, Result};
use crate::repdata::{classify_standard_module, Gso22Rep, StandardModule};
use crate::theta::{theta_22_to_gsp4, theta_gsp4_to_33};

/// The diagonal class `diag(nu t1 t2, nu t1, nu t2, nu)` of GSp4(C).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SatakeClass {
    pub t1: Character,
    pub t2: Character,
    pub nu: Character,
}

fn require_unramified(op: &'static str, chars: &[&Character]) -> Result<()> {
    match chars.iter().find(|c| !c.is_unramified()) {
        Some(c) => Err(Error::domain(op, alloc::format!("{c} is ramified"))),
        None => Ok(()),
    }
}

/// The image in GL4(C) × GL1(C): sorted eigenvalues and similitude.
pub fn iota(s: &SatakeClass) -> Result<(Vec<Character>, Character)> {
    require_unramified("iota", &[&s.t1, &s.t2, &s.nu])?;
    let SatakeClass { t1, t2, nu } = s;
    let mut eigen = alloc::vec![nu * t1 * t2, nu * t1, nu * t2, nu.clone()];
    eigen.sort();
    Ok((eigen, nu.pow(2) * t1 * t2))
}

/// The spherical constituent of `I_B(chi1, chi2; chi)` lifts to GSO(3,3)
/// with the parameter predicted by its Satake class.
pub fn check_unramified_transfer(chi1: &Character, chi2: &Character, chi: &Character) -> Result<bool> {
    require_unramified("check_unramified_transfer", &[chi1, chi2, chi])?;
    let data = StandardModule::Borel { chi1: chi1.clone(), chi2: chi2.clone(), chi: chi.clone() };
    let Some(pi) = classify_standard_module(&data)?.unique() else {
        return Ok(false);
    };
    let Some(lift) = theta_gsp4_to_33(&pi)?.value else {
        return Ok(false);
    };
    let phi = lparam_gso33(&lift)?.semisimplified();
    let mut eigen = Vec::new();
    for p in phi.pieces() {
        if *p.core() != Core::One {
            return Ok(false);
        }
        eigen.push(p.twist().clone());
    }
    eigen.sort();
    let (expected, sim) = iota(&SatakeClass { t1: chi1.clone(), t2: chi2.clone(), nu: chi.clone() })?;
    Ok(eigen == expected && lift.mu == sim)
}

/// `phi_Pi = phi_tau1 ⊕ phi_tau2` and `mu = omega_pi` along `sigma → pi → Pi ⊠ mu`.
pub fn check_parameter_compat(sigma: &Gso22Rep) -> Result<bool> {
    let Some(pi) = theta_22_to_gsp4(sigma)?.value else {
        return Ok(false);
    };
    let Some(lift) = theta_gsp4_to_33(&pi)?.value else {
        return Ok(false);
    };
    let phi = lparam_gso33(&lift)?;
    let expected = lparam_gl2(&sigma.tau1).sum(&lparam_gl2(&sigma.tau2));
    Ok(phi.pieces() == expected.pieces() && lift.mu == pi.central_character())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charlattice::{Exponent, Symbol};
    use crate::repdata::{Gl2Rep, ScToken};

    fn unr(name: &str) -> Character {
        Character::symbol(&Symbol::new(name, None, true).unwrap())
    }

    #[test]
    fn iota_exponents() {
        let s =
            SatakeClass { t1: Character::abs_frac(1, 2), t2: Character::abs_frac(1, 3), nu: Character::abs_frac(1, 4) };
        let (eigen, sim) = iota(&s).unwrap();
        let mut exps: Vec<Exponent> = eigen.iter().map(Character::abs_exponent).collect();
        exps.sort();
        let e = |n, d| Exponent::new(n, d);
        assert_eq!(exps, [e(1, 4), e(7, 12), e(3, 4), e(13, 12)]);
        assert_eq!(sim.abs_exponent(), e(4, 3));
    }

    #[test]
    fn iota_identity_and_ramified() {
        let one = Character::trivial();
        let (eigen, sim) = iota(&SatakeClass { t1: one.clone(), t2: one.clone(), nu: one.clone() }).unwrap();
        assert_eq!(eigen, alloc::vec![one.clone(); 4]);
        assert!(sim.is_trivial());
        let ram = Character::symbol(&Symbol::new("r", Some(2), false).unwrap());
        assert_eq!(iota(&SatakeClass { t1: ram, t2: one.clone(), nu: one }).unwrap_err().code(), "domain_error");
    }

    #[test]
    fn unramified_transfer_cases() {
        let (a, b, c) = (unr("a"), unr("b"), unr("c"));
        assert!(check_unramified_transfer(&a, &b, &c).unwrap());
        assert!(check_unramified_transfer(&a, &Character::abs_frac(-1, 1), &c).unwrap());
        let one = Character::trivial();
        assert!(check_unramified_transfer(&one, &one, &one).unwrap());
        assert!(check_unramified_transfer(&Character::abs_frac(2, 1), &Character::abs_frac(1, 1), &c).unwrap());
    }

    #[test]
    fn parameter_compat_cases() {
        let w = Character::symbol(&Symbol::new("w", None, false).unwrap());
        let tau = Gl2Rep::supercuspidal(&ScToken::new("tau", w.clone(), &[]).unwrap(), &Character::trivial());
        assert!(check_parameter_compat(&Gso22Rep::new(tau.clone(), tau.clone()).unwrap()).unwrap());
        let x = unr("x");
        let q = Character::symbol(&Symbol::new("q", Some(2), false).unwrap());
        let s = Gso22Rep::new(Gl2Rep::steinberg(&x), Gl2Rep::steinberg(&(&x * &q))).unwrap();
        assert!(check_parameter_compat(&s).unwrap());
    }
}
