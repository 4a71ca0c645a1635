//! L-parameters as multisets of `(core ⊗ character) ⊠ S_r`, with a similitude character.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::charlattice::{min_of, Character, Exponent};
use crate::repdata::ScToken;

mod adjoint;
mod checks;
mod params;

pub use adjoint::{adjoint, generic_iff_holomorphic, has_pole_at_one};
pub use checks::{check_parameter_compat, check_unramified_transfer, iota, SatakeClass};
pub use params::{lparam_gl2, lparam_gl4, lparam_gso33, lparam_gsp4};

/// The Weil-group part of a piece.
///
/// `AdResidual(t)` is what is left of `Ad(phi_t)` after removing its
/// characters, which are the non-trivial self-twists of `t`; it has
/// dimension `4 - |self-twists|` and is invariant under twisting by them.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Core {
    One,
    Irr2(ScToken),
    AdResidual(ScToken),
    /// `phi_t1 ⊗ phi_t2` for distinct tokens, stored sorted.
    Tensor(ScToken, ScToken),
    /// Opaque irreducible, symplectic with similitude `sim`.
    Irr4 {
        name: String,
        sim: Character,
    },
}

impl Core {
    pub fn dim(&self) -> u32 {
        match self {
            Core::One => 1,
            Core::Irr2(_) => 2,
            Core::AdResidual(t) => 4 - t.self_twists().len() as u32,
            Core::Tensor(..) | Core::Irr4 { .. } => 4,
        }
    }

    /// Determinant of the untwisted core.
    fn det(&self) -> Character {
        match self {
            Core::One => Character::trivial(),
            Core::Irr2(t) => t.central_character().clone(),
            Core::AdResidual(t) => t.self_twists().iter().product(),
            Core::Tensor(a, b) => (a.central_character() * b.central_character()).pow(2),
            Core::Irr4 { sim, .. } => sim.pow(2),
        }
    }

    /// `c` with `c^∨ = c ⊗ dual_shift`.
    fn dual_shift(&self) -> Character {
        match self {
            Core::One | Core::AdResidual(_) => Character::trivial(),
            Core::Irr2(t) => t.central_character().inv(),
            Core::Tensor(a, b) => (a.central_character() * b.central_character()).inv(),
            Core::Irr4 { sim, .. } => sim.inv(),
        }
    }

    /// Characters `g` with `c ⊗ g = c`.
    fn stabilizer(&self) -> Vec<Character> {
        match self {
            Core::Irr2(t) | Core::AdResidual(t) => t.self_twists().to_vec(),
            Core::Tensor(a, b) => {
                let mut out: Vec<Character> =
                    a.self_twists().iter().flat_map(|x| b.self_twists().iter().map(move |y| x * y)).collect();
                out.sort();
                out.dedup();
                out
            }
            Core::One | Core::Irr4 { .. } => alloc::vec![Character::trivial()],
        }
    }
}

impl fmt::Display for Core {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Core::One => f.write_str("1"),
            Core::Irr2(t) => write!(f, "phi[{t}]"),
            Core::AdResidual(t) => write!(f, "ad0[{t}]"),
            Core::Tensor(a, b) => write!(f, "phi[{a}]⊗phi[{b}]"),
            Core::Irr4 { name, .. } => write!(f, "Phi[{name}]"),
        }
    }
}

/// `(core ⊗ twist) ⊠ S_r`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LPiece {
    core: Core,
    twist: Character,
    r: u32,
}

impl LPiece {
    /// Twists are reduced modulo the characters fixing the core. `r` must be positive.
    pub fn new(core: Core, twist: Character, r: u32) -> Self {
        assert!(r >= 1, "S_r needs r >= 1");
        let core = match core {
            Core::Tensor(a, b) if b < a => Core::Tensor(b, a),
            c => c,
        };
        let twist = min_of(core.stabilizer().iter().map(|g| &twist * g));
        LPiece { core, twist, r }
    }

    pub fn character(chi: &Character, r: u32) -> Self {
        LPiece::new(Core::One, chi.clone(), r)
    }

    pub fn core(&self) -> &Core {
        &self.core
    }

    pub fn twist(&self) -> &Character {
        &self.twist
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn dim(&self) -> u32 {
        self.core.dim() * self.r
    }

    pub fn det(&self) -> Character {
        (self.core.det() * self.twist.pow(self.core.dim() as i64)).pow(self.r as i64)
    }

    pub fn twisted(&self, chi: &Character) -> Self {
        LPiece::new(self.core.clone(), &self.twist * chi, self.r)
    }

    pub fn with_r(&self, r: u32) -> Self {
        LPiece::new(self.core.clone(), self.twist.clone(), r)
    }

    pub fn dual(&self) -> Self {
        LPiece::new(self.core.clone(), self.twist.inv() * self.core.dual_shift(), self.r)
    }

    /// The restriction to the Weil group: `S_r` becomes `r` shifted copies.
    pub fn semisimplified(&self) -> Vec<LPiece> {
        (0..self.r)
            .map(|i| {
                let s = Exponent::new(self.r as i64 - 1 - 2 * i as i64, 2);
                LPiece::new(self.core.clone(), self.twist.shift(s), 1)
            })
            .collect()
    }
}

impl fmt::Display for LPiece {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (&self.core, self.twist.is_trivial()) {
            (Core::One, _) => write!(f, "{}", self.twist)?,
            (core, true) => write!(f, "{core}")?,
            (core, false) => write!(f, "{core}⊗{}", self.twist)?,
        }
        if self.r > 1 {
            write!(f, " ⊠ S{}", self.r)?;
        }
        Ok(())
    }
}

/// A multiset of pieces, kept sorted, with an optional similitude character.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LParameter {
    pieces: Vec<LPiece>,
    sim: Option<Character>,
}

impl LParameter {
    pub fn new(mut pieces: Vec<LPiece>, sim: Option<Character>) -> Self {
        pieces.sort();
        LParameter { pieces, sim }
    }

    pub fn pieces(&self) -> &[LPiece] {
        &self.pieces
    }

    pub fn sim(&self) -> Option<&Character> {
        self.sim.as_ref()
    }

    pub fn dim(&self) -> u32 {
        self.pieces.iter().map(LPiece::dim).sum()
    }

    pub fn det(&self) -> Character {
        self.pieces.iter().map(LPiece::det).product()
    }

    /// The direct sum; the similitude is dropped unless both agree.
    pub fn sum(&self, other: &LParameter) -> LParameter {
        let sim = if self.sim == other.sim { self.sim.clone() } else { None };
        LParameter::new(self.pieces.iter().chain(&other.pieces).cloned().collect(), sim)
    }

    pub fn dual(&self) -> LParameter {
        LParameter::new(self.pieces.iter().map(LPiece::dual).collect(), self.sim.as_ref().map(Character::inv))
    }

    pub fn semisimplified(&self) -> LParameter {
        LParameter::new(self.pieces.iter().flat_map(LPiece::semisimplified).collect(), self.sim.clone())
    }

    /// `piece ↦ piece^∨ ⊗ sim` preserves the multiset and `det = sim^2`.
    pub fn is_symplectic_closed(&self) -> bool {
        let Some(sim) = &self.sim else { return false };
        let mut image: Vec<LPiece> = self.pieces.iter().map(|p| p.dual().twisted(sim)).collect();
        image.sort();
        image == self.pieces && self.det() == sim.pow(2)
    }

    pub fn is_self_dual(&self) -> bool {
        self.dual().pieces == self.pieces
    }

    /// Discrete series parameter: every piece is itself symplectic for `sim`
    /// and no piece repeats.
    pub fn is_discrete(&self) -> bool {
        let Some(sim) = &self.sim else { return false };
        self.pieces.iter().all(|p| p.dual().twisted(sim) == *p) && self.pieces.windows(2).all(|w| w[0] != w[1])
    }
}

impl fmt::Display for LParameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.pieces.iter().enumerate() {
            if i > 0 {
                f.write_str(" ⊕ ")?;
            }
            write!(f, "{p}")?;
        }
        if let Some(sim) = &self.sim {
            write!(f, "; sim = {sim}")?;
        }
        Ok(())
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
    fn piece_twist_reduced_by_self_twists() {
        let q = ch("q", Some(2));
        let t = ScToken::generated("t", Character::trivial(), std::slice::from_ref(&q)).unwrap();
        let a = LPiece::new(Core::Irr2(t.clone()), q.clone(), 1);
        assert_eq!(a, LPiece::new(Core::Irr2(t.clone()), Character::trivial(), 1));
        assert_eq!(Core::AdResidual(t).dim(), 2);
    }

    #[test]
    fn semisimplification_shifts() {
        let chi = ch("chi", None);
        let p = LPiece::character(&chi, 3);
        let ss: Vec<_> = p.semisimplified().iter().map(|x| x.twist().abs_exponent()).collect();
        assert_eq!(ss, [Exponent::from_integer(1), Exponent::from_integer(0), Exponent::from_integer(-1)]);
    }

    #[test]
    fn irr2_dual() {
        let w = ch("w", None);
        let t = ScToken::new("t", w.clone(), &[]).unwrap();
        let x = ch("x", None);
        let p = LPiece::new(Core::Irr2(t.clone()), x.clone(), 1);
        assert_eq!(p.dual(), LPiece::new(Core::Irr2(t), (&x * &w).inv(), 1));
        assert_eq!(p.det(), &w * &x.pow(2));
    }
}
