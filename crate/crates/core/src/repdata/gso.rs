//! Orthogonal similitude groups: GSO(2,2), GSO(4,0) and GSO(3,3) = (GL4 × GL1)/GL1.

use alloc::string::String;
use core::fmt;

use crate::charlattice::{Character, Exponent};
use crate::error::{Error, Result};
use crate::repdata::gl2::{DRep, Gl2Rep};
use crate::repdata::reducibility::gl4_ip_reducible;

fn check_equal_central(a: Character, b: Character) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::validation("equal central characters", alloc::format!("{a} != {b}")))
    }
}

/// `tau1 ⊠ tau2` on GSO(2,2).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Gso22Rep {
    pub tau1: Gl2Rep,
    pub tau2: Gl2Rep,
}

impl Gso22Rep {
    pub fn new(tau1: Gl2Rep, tau2: Gl2Rep) -> Result<Self> {
        check_equal_central(tau1.central_character(), tau2.central_character())?;
        Ok(Gso22Rep { tau1, tau2 })
    }

    pub fn swapped(&self) -> Self {
        Gso22Rep { tau1: self.tau2.clone(), tau2: self.tau1.clone() }
    }

    /// Representative of the orbit under the outer swap.
    pub fn canonical(&self) -> Self {
        if self.tau1 <= self.tau2 {
            self.clone()
        } else {
            self.swapped()
        }
    }

    pub fn same_orbit(&self, other: &Self) -> bool {
        self.canonical() == other.canonical()
    }

    pub fn central_character(&self) -> Character {
        self.tau1.central_character()
    }
}

impl fmt::Display for Gso22Rep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ⊠ {}", self.tau1, self.tau2)
    }
}

/// `tau1 ⊠ tau2` on GSO(4,0).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Gso40Rep {
    pub tau1: DRep,
    pub tau2: DRep,
}

impl Gso40Rep {
    pub fn new(tau1: DRep, tau2: DRep) -> Result<Self> {
        check_equal_central(tau1.central_character(), tau2.central_character())?;
        Ok(Gso40Rep { tau1, tau2 })
    }

    pub fn swapped(&self) -> Self {
        Gso40Rep { tau1: self.tau2.clone(), tau2: self.tau1.clone() }
    }

    pub fn canonical(&self) -> Self {
        if self.tau1 <= self.tau2 {
            self.clone()
        } else {
            self.swapped()
        }
    }

    pub fn same_orbit(&self, other: &Self) -> bool {
        self.canonical() == other.canonical()
    }

    pub fn central_character(&self) -> Character {
        self.tau1.central_character()
    }
}

impl fmt::Display for Gso40Rep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ⊠ {}", self.tau1, self.tau2)
    }
}

/// An irreducible representation of GL4(F).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Gl4Rep {
    Supercuspidal {
        name: String,
        central: Character,
    },
    /// Irreducible `I_P(tau1, tau2)` for the (2,2) parabolic; unordered.
    InducedP {
        tau1: Gl2Rep,
        tau2: Gl2Rep,
    },
    /// Generalized Steinberg `St(tau)`, tau supercuspidal.
    SteinbergOfTau {
        tau: Gl2Rep,
    },
    /// Generalized Speh `Sp(tau)`.
    SpehOfTau {
        tau: Gl2Rep,
    },
    /// `St_PGL4 ⊗ chi`.
    TwistedSteinberg {
        chi: Character,
    },
    /// `J_Q(chi1, tau, chi2)` for the (1,2,1) parabolic.
    Jq {
        chi1: Character,
        tau: Gl2Rep,
        chi2: Character,
    },
    /// `J_P(tau1, tau2)` for the (2,2) parabolic.
    Jp {
        tau1: Gl2Rep,
        tau2: Gl2Rep,
    },
    /// `J_B0(chi1, .., chi4)`.
    Jb0 {
        chars: [Character; 4],
    },
}

impl Gl4Rep {
    pub fn induced_p(a: Gl2Rep, b: Gl2Rep) -> Self {
        let (tau1, tau2) = if a <= b { (a, b) } else { (b, a) };
        Gl4Rep::InducedP { tau1, tau2 }
    }

    /// Quotient arrangement: larger central exponent first, ties by the fixed order.
    pub fn jp(a: Gl2Rep, b: Gl2Rep) -> Self {
        let ka = (core::cmp::Reverse(a.central_character().abs_exponent()), a.clone());
        let kb = (core::cmp::Reverse(b.central_character().abs_exponent()), b.clone());
        let (tau1, tau2) = if ka <= kb { (a, b) } else { (b, a) };
        Gl4Rep::Jp { tau1, tau2 }
    }

    pub fn jb0(mut chars: [Character; 4]) -> Self {
        chars.sort_by(|x, y| y.abs_exponent().cmp(&x.abs_exponent()).then_with(|| x.cmp(y)));
        Gl4Rep::Jb0 { chars }
    }

    pub fn central_character(&self) -> Character {
        match self {
            Gl4Rep::Supercuspidal { central, .. } => central.clone(),
            Gl4Rep::InducedP { tau1, tau2 } | Gl4Rep::Jp { tau1, tau2 } => {
                tau1.central_character() * tau2.central_character()
            }
            Gl4Rep::SteinbergOfTau { tau } | Gl4Rep::SpehOfTau { tau } => tau.central_character().pow(2),
            Gl4Rep::TwistedSteinberg { chi } => chi.pow(4),
            Gl4Rep::Jq { chi1, tau, chi2 } => chi1 * &tau.central_character() * chi2,
            Gl4Rep::Jb0 { chars } => chars.iter().product(),
        }
    }

    /// Generic iff the standard module behind the Langlands data is irreducible.
    pub fn is_generic(&self) -> bool {
        let linked = |x: &Character, y: &Character| {
            let r = x / y;
            r.is_abs_pow(1.into()) || r.is_abs_pow((-1).into())
        };
        match self {
            Gl4Rep::Supercuspidal { .. }
            | Gl4Rep::InducedP { .. }
            | Gl4Rep::SteinbergOfTau { .. }
            | Gl4Rep::TwistedSteinberg { .. } => true,
            Gl4Rep::SpehOfTau { .. } => false,
            Gl4Rep::Jp { tau1, tau2 } => {
                tau1.is_discrete_series() && tau2.is_discrete_series() && !gl4_ip_reducible(tau1, tau2).is_reducible()
            }
            Gl4Rep::Jq { chi1, tau, chi2 } => {
                let segment_linked = |x: &Character| match tau {
                    // [x] is linked to [a|-|^{-1/2}, a|-|^{1/2}] iff x = a|-|^{±3/2}
                    Gl2Rep::Steinberg { chi: a } => {
                        let r = x / a;
                        r.is_abs_pow(Exponent::new(3, 2)) || r.is_abs_pow(Exponent::new(-3, 2))
                    }
                    Gl2Rep::Supercuspidal { .. } => false,
                    _ => true,
                };
                tau.is_discrete_series() && !linked(chi1, chi2) && !segment_linked(chi1) && !segment_linked(chi2)
            }
            Gl4Rep::Jb0 { chars } => (0..4).all(|i| (i + 1..4).all(|j| !linked(&chars[i], &chars[j]))),
        }
    }
}

impl fmt::Display for Gl4Rep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gl4Rep::Supercuspidal { name, .. } => write!(f, "SC4({name})"),
            Gl4Rep::InducedP { tau1, tau2 } => write!(f, "I_P({tau1}, {tau2})"),
            Gl4Rep::SteinbergOfTau { tau } => write!(f, "St({tau})"),
            Gl4Rep::SpehOfTau { tau } => write!(f, "Sp({tau})"),
            Gl4Rep::TwistedSteinberg { chi } if chi.is_trivial() => f.write_str("St_PGL4"),
            Gl4Rep::TwistedSteinberg { chi } => write!(f, "St_PGL4({chi})"),
            Gl4Rep::Jq { chi1, tau, chi2 } => write!(f, "J_Q({chi1}, {tau}, {chi2})"),
            Gl4Rep::Jp { tau1, tau2 } => write!(f, "J_P({tau1}, {tau2})"),
            Gl4Rep::Jb0 { chars: [a, b, c, d] } => write!(f, "J_B0({a}, {b}, {c}, {d})"),
        }
    }
}

/// `Pi ⊠ mu` on GSO(3,3), with `omega_Pi = mu^2`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Gso33Rep {
    pub gl4: Gl4Rep,
    pub mu: Character,
}

impl Gso33Rep {
    pub fn new(gl4: Gl4Rep, mu: Character) -> Result<Self> {
        let omega = gl4.central_character();
        if omega != mu.pow(2) {
            return Err(Error::validation("omega_Pi = mu^2", alloc::format!("{omega} != ({mu})^2")));
        }
        Ok(Gso33Rep { gl4, mu })
    }
}

impl fmt::Display for Gso33Rep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ⊠ {}", self.gl4, self.mu)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charlattice::Symbol;

    fn ch(name: &str, order: Option<u32>) -> Character {
        Character::symbol(&Symbol::new(name, order, false).unwrap())
    }

    #[test]
    fn gso22_central_mismatch() {
        let a = ch("a", None);
        let b = ch("b", None);
        assert!(Gso22Rep::new(Gl2Rep::steinberg(&a), Gl2Rep::steinberg(&b)).is_err());
        let s = Gso22Rep::new(Gl2Rep::steinberg(&a), Gl2Rep::steinberg(&a.inv())).unwrap_err();
        assert_eq!(s.code(), "invariant_violation");
    }

    #[test]
    fn swap_orbit() {
        let q = ch("q", Some(2));
        let x = Gso22Rep::new(Gl2Rep::steinberg(&q), Gl2Rep::steinberg(&Character::trivial())).unwrap();
        assert!(x.same_orbit(&x.swapped()));
        assert_eq!(x.canonical(), x.swapped().canonical());
    }

    #[test]
    fn gso33_requires_square_central() {
        let chi = ch("chi", None);
        assert!(Gso33Rep::new(Gl4Rep::TwistedSteinberg { chi: chi.clone() }, chi.pow(2)).is_ok());
        assert!(Gso33Rep::new(Gl4Rep::TwistedSteinberg { chi: chi.clone() }, chi.clone()).is_err());
    }

    #[test]
    fn jb0_sorted_by_exponent() {
        let c = ch("c", None);
        let j = Gl4Rep::jb0([c.clone(), c.shift(2.into()), c.shift((-1).into()), c.shift(1.into())]);
        let Gl4Rep::Jb0 { chars } = j else { unreachable!() };
        let exps: alloc::vec::Vec<_> = chars.iter().map(|x| *x.abs_exponent().numer()).collect();
        assert_eq!(exps, [2, 1, 0, -1]);
    }
}
