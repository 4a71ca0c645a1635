//! Representations of GL2(F) and of the units of the quaternion division algebra.

use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use crate::charlattice::{min_of, subgroup_closure, Character, Exponent};
use crate::error::{Error, Result};

#[derive(Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
struct TokenData {
    name: String,
    central: Character,
    self_twists: Vec<Character>,
}

/// Opaque supercuspidal of GL2 with its central character and the group of
/// quadratic characters fixing it under twisting.
///
/// Distinct tokens are inequivalent by declaration.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ScToken(Arc<TokenData>);

impl ScToken {
    /// `self_twists` must already be a subgroup of quadratic characters.
    pub fn new(name: &str, central: Character, self_twists: &[Character]) -> Result<Self> {
        let mut group: Vec<Character> = self_twists.to_vec();
        if !group.iter().any(Character::is_trivial) {
            group.push(Character::trivial());
        }
        group.sort();
        group.dedup();
        // a two-dimensional irreducible parameter has at most four self-twists
        if group.len() > 4 {
            return Err(Error::validation(
                "self-twist group",
                alloc::format!("{} elements, at most 4 allowed", group.len()),
            ));
        }
        for x in &group {
            if !x.is_quadratic() {
                return Err(Error::validation("self-twist group", alloc::format!("{x} is not quadratic")));
            }
            for y in &group {
                let xy = x.try_mul(y)?;
                if !group.contains(&xy) {
                    return Err(Error::validation("self-twist group", alloc::format!("not closed: {x}*{y}")));
                }
            }
        }
        Ok(ScToken(Arc::new(TokenData { name: name.to_string(), central, self_twists: group })))
    }

    /// Builds the token from generators of the self-twist group.
    pub fn generated(name: &str, central: Character, generators: &[Character]) -> Result<Self> {
        if let Some(x) = generators.iter().find(|x| !x.is_quadratic()) {
            return Err(Error::validation("self-twist group", alloc::format!("{x} is not quadratic")));
        }
        let group = subgroup_closure(generators)?;
        Self::new(name, central, &group)
    }

    pub fn name(&self) -> &str {
        &self.0.name
    }

    pub fn central_character(&self) -> &Character {
        &self.0.central
    }

    /// Sorted, contains the trivial character.
    pub fn self_twists(&self) -> &[Character] {
        &self.0.self_twists
    }

    pub fn nontrivial_self_twists(&self) -> impl Iterator<Item = &Character> + '_ {
        self.0.self_twists.iter().filter(|c| !c.is_trivial())
    }

    pub fn fixes(&self, chi: &Character) -> bool {
        self.0.self_twists.contains(chi)
    }

    /// Canonical coset representative of `twist` modulo the self-twists.
    pub fn reduce_twist(&self, twist: &Character) -> Character {
        min_of(self.0.self_twists.iter().map(|x| twist * x))
    }
}

impl fmt::Display for ScToken {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.name)
    }
}

/// An irreducible representation of GL2(F).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Gl2Rep {
    /// `token ⊗ twist`, twist reduced modulo the self-twists.
    Supercuspidal { token: ScToken, twist: Character },
    /// `st_chi`.
    Steinberg { chi: Character },
    /// Irreducible `pi(chi1, chi2)`, stored with `chi1 <= chi2`.
    PrincipalSeries { chi1: Character, chi2: Character },
    /// `J(pi(upper, lower))` at `upper/lower = |-|`: the character `(upper*lower)^(1/2) ∘ det`.
    LanglandsQuotient { upper: Character, lower: Character },
}

impl Gl2Rep {
    pub fn supercuspidal(token: &ScToken, twist: &Character) -> Self {
        Gl2Rep::Supercuspidal { token: token.clone(), twist: token.reduce_twist(twist) }
    }

    pub fn steinberg(chi: &Character) -> Self {
        Gl2Rep::Steinberg { chi: chi.clone() }
    }

    /// `chi ∘ det`.
    pub fn one_dim(chi: &Character) -> Self {
        Gl2Rep::LanglandsQuotient { upper: chi.shift(Exponent::new(1, 2)), lower: chi.shift(Exponent::new(-1, 2)) }
    }

    /// Irreducible principal series; rejects the reducibility points.
    pub fn principal_series(a: &Character, b: &Character) -> Result<Self> {
        let r = a / b;
        if r.is_abs_pow(Exponent::from_integer(1)) || r.is_abs_pow(Exponent::from_integer(-1)) {
            return Err(Error::validation("irreducible principal series", alloc::format!("pi({a}, {b}) is reducible")));
        }
        let (chi1, chi2) = if a <= b { (a.clone(), b.clone()) } else { (b.clone(), a.clone()) };
        Ok(Gl2Rep::PrincipalSeries { chi1, chi2 })
    }

    /// `J(pi(a, b))`: the one-dimensional constituent at the reducibility
    /// points, the full principal series elsewhere.
    pub fn langlands_quotient(a: &Character, b: &Character) -> Self {
        let r = a / b;
        if r.is_abs_pow(Exponent::from_integer(1)) {
            Gl2Rep::LanglandsQuotient { upper: a.clone(), lower: b.clone() }
        } else if r.is_abs_pow(Exponent::from_integer(-1)) {
            Gl2Rep::LanglandsQuotient { upper: b.clone(), lower: a.clone() }
        } else {
            Self::principal_series(a, b).expect("reducibility points handled above")
        }
    }

    pub fn twist(&self, mu: &Character) -> Self {
        match self {
            Gl2Rep::Supercuspidal { token, twist } => Self::supercuspidal(token, &(twist * mu)),
            Gl2Rep::Steinberg { chi } => Gl2Rep::Steinberg { chi: chi * mu },
            Gl2Rep::PrincipalSeries { chi1, chi2 } => {
                Self::principal_series(&(chi1 * mu), &(chi2 * mu)).expect("twisting preserves irreducibility")
            }
            Gl2Rep::LanglandsQuotient { upper, lower } => {
                Gl2Rep::LanglandsQuotient { upper: upper * mu, lower: lower * mu }
            }
        }
    }

    pub fn central_character(&self) -> Character {
        match self {
            Gl2Rep::Supercuspidal { token, twist } => token.central_character() * &twist.pow(2),
            Gl2Rep::Steinberg { chi } => chi.pow(2),
            Gl2Rep::PrincipalSeries { chi1, chi2 } => chi1 * chi2,
            Gl2Rep::LanglandsQuotient { upper, lower } => upper * lower,
        }
    }

    /// `rho^∨ = rho ⊗ omega_rho^{-1}`.
    pub fn dual(&self) -> Self {
        self.twist(&self.central_character().inv())
    }

    /// Discrete series up to twist.
    pub fn is_discrete_series(&self) -> bool {
        matches!(self, Gl2Rep::Supercuspidal { .. } | Gl2Rep::Steinberg { .. })
    }

    pub fn is_supercuspidal(&self) -> bool {
        matches!(self, Gl2Rep::Supercuspidal { .. })
    }

    /// The character `chi` when this is `chi ∘ det`.
    pub fn one_dim_character(&self) -> Option<Character> {
        match self {
            Gl2Rep::LanglandsQuotient { lower, .. } => Some(lower.shift(Exponent::new(1, 2))),
            _ => None,
        }
    }

    /// The two characters of a non-discrete-series representation, in the
    /// quotient arrangement (larger exponent first, ties by the fixed order).
    pub fn principal_series_data(&self) -> Option<(Character, Character)> {
        match self {
            Gl2Rep::PrincipalSeries { chi1, chi2 } => {
                if chi1.abs_exponent() > chi2.abs_exponent() {
                    Some((chi1.clone(), chi2.clone()))
                } else if chi1.abs_exponent() < chi2.abs_exponent() {
                    Some((chi2.clone(), chi1.clone()))
                } else {
                    Some((chi1.clone(), chi2.clone()))
                }
            }
            Gl2Rep::LanglandsQuotient { upper, lower } => Some((upper.clone(), lower.clone())),
            _ => None,
        }
    }
}

impl fmt::Display for Gl2Rep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gl2Rep::Supercuspidal { token, twist } if twist.is_trivial() => write!(f, "{token}"),
            Gl2Rep::Supercuspidal { token, twist } => write!(f, "twist({token}, {twist})"),
            Gl2Rep::Steinberg { chi } if chi.is_trivial() => f.write_str("st"),
            Gl2Rep::Steinberg { chi } => write!(f, "st({chi})"),
            Gl2Rep::PrincipalSeries { chi1, chi2 } => write!(f, "PS({chi1}, {chi2})"),
            Gl2Rep::LanglandsQuotient { upper, lower } => write!(f, "J({upper}, {lower})"),
        }
    }
}

/// An irreducible representation of D^×.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DRep {
    /// Corresponds to `Supercuspidal { token, twist }`.
    JlOfSupercuspidal { token: ScToken, twist: Character },
    /// `chi ∘ N`.
    OneDim { chi: Character },
}

impl DRep {
    pub fn of_supercuspidal(token: &ScToken, twist: &Character) -> Self {
        DRep::JlOfSupercuspidal { token: token.clone(), twist: token.reduce_twist(twist) }
    }

    pub fn one_dim(chi: &Character) -> Self {
        DRep::OneDim { chi: chi.clone() }
    }

    pub fn central_character(&self) -> Character {
        jl(self).central_character()
    }
}

impl fmt::Display for DRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DRep::JlOfSupercuspidal { token, twist } if twist.is_trivial() => write!(f, "D({token})"),
            DRep::JlOfSupercuspidal { token, twist } => write!(f, "D(twist({token}, {twist}))"),
            DRep::OneDim { chi } => write!(f, "D({chi})"),
        }
    }
}

/// Jacquet–Langlands transfer to the discrete series of GL2.
pub fn jl(d: &DRep) -> Gl2Rep {
    match d {
        DRep::JlOfSupercuspidal { token, twist } => Gl2Rep::supercuspidal(token, twist),
        DRep::OneDim { chi } => Gl2Rep::steinberg(chi),
    }
}

pub fn jl_inverse(rho: &Gl2Rep) -> Result<DRep> {
    match rho {
        Gl2Rep::Supercuspidal { token, twist } => Ok(DRep::of_supercuspidal(token, twist)),
        Gl2Rep::Steinberg { chi } => Ok(DRep::one_dim(chi)),
        other => Err(Error::domain("jl_inverse", alloc::format!("{other} is not a discrete series"))),
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
    fn steinberg_twist() {
        let chi = ch("chi", None);
        let mu = ch("mu", None);
        assert_eq!(Gl2Rep::steinberg(&chi).twist(&mu), Gl2Rep::steinberg(&(&chi * &mu)));
    }

    #[test]
    fn self_twist_absorbed() {
        let k = ch("chiK", Some(2));
        let t = ScToken::generated("tau", Character::trivial(), std::slice::from_ref(&k)).unwrap();
        let sc = Gl2Rep::supercuspidal(&t, &Character::trivial());
        assert_eq!(sc.twist(&k), sc);
    }

    #[test]
    fn principal_series_dual() {
        let a = ch("a", None);
        let b = ch("b", Some(3));
        let ps = Gl2Rep::principal_series(&a, &b).unwrap();
        assert_eq!(ps.dual(), Gl2Rep::principal_series(&a.inv(), &b.inv()).unwrap());
    }

    #[test]
    fn dual_of_supercuspidal() {
        let w = ch("w", None);
        let om = ch("om", Some(3));
        let t = ScToken::new("t", om.clone(), &[]).unwrap();
        let sc = Gl2Rep::supercuspidal(&t, &w);
        // t ⊗ w ⊗ (om w^2)^{-1} = t ⊗ om^{-1} w^{-1}
        assert_eq!(sc.dual(), Gl2Rep::supercuspidal(&t, &(om.inv() * w.inv())));
        assert_eq!(sc.dual().dual(), sc);
    }

    #[test]
    fn reducible_principal_series_rejected() {
        let a = ch("a", None);
        assert!(Gl2Rep::principal_series(&a.shift(Exponent::from_integer(1)), &a).is_err());
        let j = Gl2Rep::langlands_quotient(&a.shift(Exponent::from_integer(-1)), &a);
        assert_eq!(j.one_dim_character(), Some(a.shift(Exponent::new(-1, 2))));
        assert_eq!(j, Gl2Rep::one_dim(&a.shift(Exponent::new(-1, 2))));
    }

    #[test]
    fn jl_round_trip() {
        let chi = ch("chi", None);
        assert_eq!(jl(&DRep::one_dim(&chi)), Gl2Rep::steinberg(&chi));
        assert_eq!(jl_inverse(&Gl2Rep::steinberg(&chi)).unwrap(), DRep::one_dim(&chi));
        let t = ScToken::new("t", Character::trivial(), &[]).unwrap();
        let d = DRep::of_supercuspidal(&t, &chi);
        assert_eq!(jl(&d), Gl2Rep::supercuspidal(&t, &chi));
        assert_eq!(jl_inverse(&jl(&d)).unwrap(), d);
        assert!(jl_inverse(&Gl2Rep::one_dim(&chi)).is_err());
    }

    #[test]
    fn token_rejects_non_group() {
        let a = ch("a", Some(2));
        let b = ch("b", Some(2));
        assert!(ScToken::new("t", Character::trivial(), &[a.clone(), b.clone()]).is_err());
        assert!(ScToken::new("t", Character::trivial(), &[ch("c", Some(3))]).is_err());
        assert_eq!(ScToken::generated("t", Character::trivial(), &[a, b]).unwrap().self_twists().len(), 4);
    }
}
