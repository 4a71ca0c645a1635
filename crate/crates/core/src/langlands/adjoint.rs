use alloc::vec::Vec;

use super::params::lparam_gsp4;
use super::{Core, LParameter, LPiece};
use crate::charlattice::{Character, Exponent};
use crate::error::{Error, Result};
use crate::repdata::{canonicalize_gsp4, packet_has_generic, packet_of, GSp4Rep, ScToken};

/// Untwisted cores with character multipliers.
type Decomposition = Vec<(Core, Character)>;

/// `S_a ⊗ S_b`.
fn clebsch_gordan(a: u32, b: u32) -> impl Iterator<Item = u32> {
    let lo = a.abs_diff(b) + 1;
    (lo..a + b).step_by(2)
}

/// `Sym^2 S_r` and `Λ^2 S_r`.
fn sym2_sl2(r: u32) -> impl Iterator<Item = u32> {
    (1..=2 * r - 1).rev().step_by(4)
}

fn alt2_sl2(r: u32) -> impl Iterator<Item = u32> {
    (1..=2 * r - 1).rev().skip(2).step_by(4)
}

/// `phi_t ⊗ phi_t = (⊕ self-twists ⊕ residual) ⊗ omega_t`, untwisted.
fn square_of_irr2(t: &ScToken) -> Vec<(Core, Character)> {
    let w = t.central_character();
    let mut out: Vec<(Core, Character)> = t.self_twists().iter().map(|g| (Core::One, g * w)).collect();
    if Core::AdResidual(t.clone()).dim() > 0 {
        out.push((Core::AdResidual(t.clone()), w.clone()));
    }
    out
}

fn unsupported(core: &Core) -> Error {
    Error::unsupported("adjoint", alloc::format!("no tensor rules for the core {core}"))
}

fn core_tensor(a: &Core, b: &Core) -> Result<Vec<(Core, Character)>> {
    match (a, b) {
        (Core::One, c) | (c, Core::One) => Ok(alloc::vec![(c.clone(), Character::trivial())]),
        (Core::Irr2(s), Core::Irr2(t)) if s == t => Ok(square_of_irr2(s)),
        (Core::Irr2(s), Core::Irr2(t)) => Ok(alloc::vec![(Core::Tensor(s.clone(), t.clone()), Character::trivial())]),
        (Core::Irr2(_), other) | (other, _) => Err(unsupported(other)),
    }
}

/// `(Sym^2 c, Λ^2 c)` for the untwisted core.
fn core_sym2(c: &Core) -> Result<(Decomposition, Decomposition)> {
    match c {
        Core::One => Ok((alloc::vec![(Core::One, Character::trivial())], Vec::new())),
        Core::Irr2(t) => {
            let w = t.central_character();
            // Sym^2 = Ad ⊗ omega, and Ad drops the trivial self-twist
            let sym = square_of_irr2(t).into_iter().filter(|(c, x)| !(*c == Core::One && x == w)).collect();
            Ok((sym, alloc::vec![(Core::One, w.clone())]))
        }
        other => Err(unsupported(other)),
    }
}

fn tensor(p: &LPiece, q: &LPiece) -> Result<Vec<LPiece>> {
    let twist = p.twist() * q.twist();
    let mut out = Vec::new();
    for (core, x) in core_tensor(p.core(), q.core())? {
        for r in clebsch_gordan(p.r(), q.r()) {
            out.push(LPiece::new(core.clone(), &x * &twist, r));
        }
    }
    Ok(out)
}

fn sym2(p: &LPiece) -> Result<Vec<LPiece>> {
    let twist = p.twist().pow(2);
    let (sym, alt) = core_sym2(p.core())?;
    let mut out = Vec::new();
    for (core, x) in sym {
        out.extend(sym2_sl2(p.r()).map(|r| LPiece::new(core.clone(), &x * &twist, r)));
    }
    for (core, x) in alt {
        out.extend(alt2_sl2(p.r()).map(|r| LPiece::new(core.clone(), &x * &twist, r)));
    }
    Ok(out)
}

/// `Ad ∘ phi = Sym^2 phi ⊗ sim^{-1}`, ten-dimensional, without similitude.
pub fn adjoint(phi: &LParameter) -> Result<LParameter> {
    let sim = phi.sim().ok_or_else(|| Error::domain("adjoint", alloc::format!("{phi} has no similitude character")))?;
    let pieces = phi.pieces();
    let mut out = Vec::new();
    for (i, p) in pieces.iter().enumerate() {
        out.extend(sym2(p)?);
        for q in &pieces[i + 1..] {
            out.extend(tensor(p, q)?);
        }
    }
    let inv = sim.inv();
    Ok(LParameter::new(out.iter().map(|p| p.twisted(&inv)).collect(), None))
}

/// `L(s, ad)` has a pole at `s = 1` iff some `chi ⊠ S_r` has `chi = |-|^{-(r+1)/2}`.
///
/// Characters inside adjoint cores are already split off as `One` pieces, and
/// the remaining cores contain no characters.
pub fn has_pole_at_one(ad: &LParameter) -> bool {
    ad.pieces().iter().any(|p| *p.core() == Core::One && p.twist().is_abs_pow(-Exponent::new(p.r() as i64 + 1, 2)))
}

/// `(packet has a generic member, L(s, Ad) holomorphic at 1)`.
pub fn generic_iff_holomorphic(pi: &GSp4Rep) -> Result<(bool, bool)> {
    let pi = canonicalize_gsp4(pi)?;
    if pi.is_supercuspidal() {
        return Err(Error::unsupported("generic_iff_holomorphic", alloc::format!("{pi} is supercuspidal")));
    }
    let generic = packet_has_generic(&packet_of(&pi));
    let holomorphic = !has_pole_at_one(&adjoint(&lparam_gsp4(&pi)?)?);
    Ok((generic, holomorphic))
}
