//! Filtrations of Jacquet modules of the induced Weil representation
//! `Omega_{m,n}` of `GO(V_m) × GSp(W_n)`, along `P(X_t)` or `Q(Y_k)`.
//!
//! Exponents: `e0`, `f0` are the similitude exponents (`|lambda_V|`, `|lambda_W|`
//! on the two sides), `e1` the exponent of `|det|` on the first GL block.
//! The raw exponents `e2`, `f1`, `f0'` are those before the `|det|` twist on
//! the Schwartz space is absorbed; `f0 = f0' - index * e2`.

use alloc::vec::Vec;
use core::fmt;

use crate::charlattice::Exponent;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    /// Along `P(X_t)` in the orthogonal group.
    Orthogonal { t: u32 },
    /// Along `Q(Y_k)` in the symplectic group.
    Symplectic { k: u32 },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FiltrationSpec {
    m: u32,
    n: u32,
    r: u32,
    side: Side,
    isometry: bool,
}

impl FiltrationSpec {
    /// `r` is the Witt index of `V_m`.
    pub fn new(m: u32, n: u32, r: u32, side: Side, isometry: bool) -> Result<Self> {
        let bad = |detail: alloc::string::String| Err(Error::domain("filtration", detail));
        if m == 0 || !m.is_multiple_of(2) {
            return bad(alloc::format!("m = {m} must be even and positive"));
        }
        if n == 0 {
            return bad("n must be positive".into());
        }
        if r > m / 2 {
            return bad(alloc::format!("Witt index {r} exceeds m/2 = {}", m / 2));
        }
        match side {
            Side::Orthogonal { t } if t > r => return bad(alloc::format!("t = {t} exceeds the Witt index {r}")),
            Side::Symplectic { k } if k > n => return bad(alloc::format!("k = {k} exceeds n = {n}")),
            _ => {}
        }
        Ok(FiltrationSpec { m, n, r, side, isometry })
    }

    /// Split `V_m`: Witt index `m/2`.
    pub fn split(m: u32, n: u32, side: Side) -> Result<Self> {
        Self::new(m, n, m / 2, side, false)
    }

    pub fn with_isometry(self, isometry: bool) -> Self {
        FiltrationSpec { isometry, ..self }
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn isometry(&self) -> bool {
        self.isometry
    }
}

/// A parabolic preserving `0 ⊆ L_inner ⊆ L_outer` (or just `L_outer`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Flag {
    pub inner: Option<u32>,
    pub outer: u32,
}

impl Flag {
    fn single(outer: u32) -> Self {
        Flag { inner: None, outer }
    }

    fn pair(inner: u32, outer: u32) -> Self {
        Flag { inner: Some(inner), outer }
    }

    fn render(&self, f: &mut fmt::Formatter<'_>, group: char, space: char) -> fmt::Result {
        match self.inner {
            Some(i) => write!(f, "{group}({space}_{i}, {space}_{})", self.outer),
            None => write!(f, "{group}({space}_{})", self.outer),
        }
    }
}

/// The parabolic of `GO(V) × GSp(W)` the quotient is induced from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct InducingParabolic {
    pub orthogonal: Flag,
    pub symplectic: Flag,
}

impl fmt::Display for InducingParabolic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.orthogonal.render(f, 'P', 'X')?;
        f.write_str(" × ")?;
        self.symplectic.render(f, 'Q', 'Y')
    }
}

/// One successive quotient `J^index`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiltrationQuotient {
    pub index: u32,
    pub inducing: InducingParabolic,
    /// `S(Isom(X'_k, Y_k))` or `S(Isom(Y'_t, X_t))`.
    pub schwartz_factor: alloc::string::String,
    /// `(m', n')` of the inner `Omega_{m', n'}`.
    pub inner_weil: (u32, u32),
    /// `None` in the isometry case.
    pub e0: Option<Exponent>,
    /// Only while the first GL block is non-empty.
    pub e1: Option<Exponent>,
    pub f0: Option<Exponent>,
    pub e2: Exponent,
    pub f1: Exponent,
    pub f0_raw: Option<Exponent>,
    /// `chi_V` twists on the GL blocks.
    pub character_factor: &'static str,
}

impl FiltrationQuotient {
    /// `f0 = f0' - index * e2`; vacuous in the isometry case.
    pub fn absorbed(&self) -> bool {
        match (self.f0, self.f0_raw) {
            (Some(f0), Some(raw)) => f0 == raw - Exponent::from_integer(self.index as i64) * self.e2,
            _ => true,
        }
    }
}

fn q(n: i64, d: i64) -> Exponent {
    Exponent::new(n, d)
}

fn z(n: u32) -> Exponent {
    Exponent::from_integer(n as i64)
}

/// `index * e2` subtracted from the raw exponent gives the absorbed one.
fn orthogonal_quotient(m: u32, n: u32, t: u32, k: u32, isometry: bool) -> FiltrationQuotient {
    let (m_, n_, t_, k_) = (z(m), z(n), z(t), z(k));
    let one = z(1);
    let e0 = -q(1, 4) * (m_ - z(2) * t_) * k_ - q(1, 2) * t_ * n_ + q(1, 4) * m_ * t_ - q(1, 4) * t_ * (t_ + one);
    let e1 = (k < t).then(|| n_ - q(1, 2) * m_ + q(1, 2) * t_ - q(1, 2) * (k_ - one));
    let f0 = -q(1, 2) * k_ * n_ + q(1, 4) * k_ * (k_ - one);
    let e2 = n_ - q(1, 2) * (k_ - one);
    let f0_raw = q(1, 2) * k_ * n_ - q(1, 4) * k_ * (k_ - one);
    let sim = |x: Exponent| (!isometry).then_some(x);
    FiltrationQuotient {
        index: k,
        inducing: InducingParabolic { orthogonal: Flag::pair(t - k, t), symplectic: Flag::single(k) },
        schwartz_factor: alloc::format!("S(Isom(X'_{k}, Y_{k}))"),
        inner_weil: (m - 2 * t, n - k),
        e0: sim(e0),
        e1,
        f0: sim(f0),
        e2,
        f1: -e2,
        f0_raw: sim(f0_raw),
        character_factor: "chi_V(det a2)",
    }
}

fn symplectic_quotient(m: u32, n: u32, k: u32, t: u32, isometry: bool) -> FiltrationQuotient {
    let (m_, n_, t_, k_) = (z(m), z(n), z(t), z(k));
    let one = z(1);
    let e0 = -q(1, 2) * t_ * (n_ - k_) - q(1, 4) * m_ * k_ + q(1, 2) * k_ * n_ - q(1, 4) * k_ * (k_ - one);
    let e1 = (t < k).then(|| q(1, 2) * m_ - n_ + q(1, 2) * k_ - q(1, 2) * (t_ + one));
    let f0 = -q(1, 4) * m_ * t_ + q(1, 4) * t_ * (t_ + one);
    let e2 = q(1, 2) * m_ - q(1, 2) * (t_ + one);
    let sim = |x: Exponent| (!isometry).then_some(x);
    FiltrationQuotient {
        index: t,
        inducing: InducingParabolic { orthogonal: Flag::single(t), symplectic: Flag::pair(k - t, k) },
        schwartz_factor: alloc::format!("S(Isom(Y'_{t}, X_{t}))"),
        inner_weil: (m - 2 * t, n - k),
        e0: sim(e0),
        e1,
        f0: sim(f0),
        e2,
        f1: -e2,
        f0_raw: sim(-f0),
        character_factor: "chi_V(det b1) chi_V(det b2)",
    }
}

/// One quotient per index, top (`index = 0`) first.
pub fn filtration(spec: &FiltrationSpec) -> Vec<FiltrationQuotient> {
    let FiltrationSpec { m, n, r, side, isometry } = *spec;
    match side {
        Side::Orthogonal { t } => (0..=t.min(n)).map(|k| orthogonal_quotient(m, n, t, k, isometry)).collect(),
        Side::Symplectic { k } => (0..=k.min(r)).map(|t| symplectic_quotient(m, n, k, t, isometry)).collect(),
    }
}

/// `f0' - k e2 = f0` on the orthogonal side and `f0' - t e2 = f0` on the
/// symplectic side, wherever `(t, k)` indexes a quotient.
pub fn absorption_identity(m: u32, n: u32, t: u32, k: u32) -> Result<bool> {
    let mut checked = false;
    let mut holds = true;
    if k <= t.min(n) && t <= m / 2 {
        checked = true;
        holds &= orthogonal_quotient(m, n, t, k, false).absorbed();
    }
    if t <= k.min(m / 2) && k <= n {
        checked = true;
        holds &= symplectic_quotient(m, n, k, t, false).absorbed();
    }
    if !checked {
        return Err(Error::domain("absorption_identity", alloc::format!("(t, k) = ({t}, {k}) indexes no quotient")));
    }
    Ok(holds)
}

/// The four worked specializations used as oracles.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Specialization {
    /// `R_{P(X)}(Omega)` for `GSO(2,2) × GSp4`.
    Gso22OrthT2,
    /// Along `P(J)`, `m = 6`.
    Gso33OrthT1,
    /// Along `Q(Z)`, `m = 6`.
    Gso33SymplK1,
    /// Along `Q(E)`, `E` two-dimensional isotropic, `m = 6`.
    Gso33SymplK2,
}

impl Specialization {
    pub const ALL: [Specialization; 4] = [
        Specialization::Gso22OrthT2,
        Specialization::Gso33OrthT1,
        Specialization::Gso33SymplK1,
        Specialization::Gso33SymplK2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Specialization::Gso22OrthT2 => "gso22-orth-t2",
            Specialization::Gso33OrthT1 => "gso33-orth-t1",
            Specialization::Gso33SymplK1 => "gso33-sympl-k1",
            Specialization::Gso33SymplK2 => "gso33-sympl-k2",
        }
    }

    pub fn spec(self) -> FiltrationSpec {
        let side = match self {
            Specialization::Gso22OrthT2 => return FiltrationSpec::split(4, 2, Side::Orthogonal { t: 2 }).unwrap(),
            Specialization::Gso33OrthT1 => Side::Orthogonal { t: 1 },
            Specialization::Gso33SymplK1 => Side::Symplectic { k: 1 },
            Specialization::Gso33SymplK2 => Side::Symplectic { k: 2 },
        };
        FiltrationSpec::split(6, 2, side).unwrap()
    }
}

impl core::str::FromStr for Specialization {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Specialization::ALL
            .into_iter()
            .find(|x| x.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::domain("specialize_check", alloc::format!("unknown specialization {s}")))
    }
}

struct Expected {
    index: u32,
    e0: Exponent,
    e1: Option<Exponent>,
    f0: Exponent,
    inner: (u32, u32),
    inducing: InducingParabolic,
}

fn expected(which: Specialization) -> Vec<Expected> {
    let x = |inner, outer| Flag { inner, outer };
    let par = |o: Flag, s: Flag| InducingParabolic { orthogonal: o, symplectic: s };
    let row = |index, e0, e1, f0, inner, inducing| Expected { index, e0, e1, f0, inner, inducing };
    match which {
        // C, B, A: |det_X|^{3/2}|lambda|^{-3/2}; |a||lambda|^{-3/2}; bottom with e0 = f0
        Specialization::Gso22OrthT2 => alloc::vec![
            row(0, q(-3, 2), Some(q(3, 2)), q(0, 1), (0, 2), par(x(Some(2), 2), x(None, 0))),
            row(1, q(-3, 2), Some(q(1, 1)), q(-1, 1), (0, 1), par(x(Some(1), 2), x(None, 1))),
            row(2, q(-3, 2), None, q(-3, 2), (0, 0), par(x(Some(0), 2), x(None, 2))),
        ],
        // B = Omega_{W,V_2}; A induced from Q(Z)
        Specialization::Gso33OrthT1 => alloc::vec![
            row(0, q(0, 1), Some(q(0, 1)), q(0, 1), (4, 2), par(x(Some(1), 1), x(None, 0))),
            row(1, q(-1, 1), None, q(-1, 1), (4, 1), par(x(Some(0), 1), x(None, 1))),
        ],
        // B' = |det_Z| |lambda_W|^{-1/2}; A' induced from P(J)
        Specialization::Gso33SymplK1 => alloc::vec![
            row(0, q(-1, 2), Some(q(1, 1)), q(0, 1), (6, 1), par(x(None, 0), x(Some(1), 1))),
            row(1, q(-1, 1), None, q(-1, 1), (4, 1), par(x(None, 1), x(Some(0), 1))),
        ],
        // A'', B'', and C'' induced from Q(E), E a 2-dim isotropic subspace of V
        Specialization::Gso33SymplK2 => alloc::vec![
            row(0, q(-3, 2), Some(q(3, 2)), q(0, 1), (6, 0), par(x(None, 0), x(Some(2), 2))),
            row(1, q(-3, 2), Some(q(1, 1)), q(-1, 1), (4, 0), par(x(None, 1), x(Some(1), 2))),
            row(2, q(-3, 2), None, q(-3, 2), (2, 0), par(x(None, 2), x(Some(0), 2))),
        ],
    }
}

/// Compares the general filtration with the descriptors of a worked case.
pub fn specialize_check(which: Specialization) -> bool {
    let got = filtration(&which.spec());
    let want = expected(which);
    got.len() == want.len()
        && got.iter().zip(&want).all(|(g, w)| {
            g.index == w.index
                && g.e0 == Some(w.e0)
                && g.e1 == w.e1
                && g.f0 == Some(w.f0)
                && g.inner_weil == w.inner
                && g.inducing == w.inducing
                && g.absorbed()
        })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_specializations_pass() {
        for s in Specialization::ALL {
            assert!(specialize_check(s), "{}", s.name());
        }
    }

    #[test]
    fn symplectic_top_quotient() {
        let f = filtration(&FiltrationSpec::split(6, 2, Side::Symplectic { k: 1 }).unwrap());
        assert_eq!(f[0].e0, Some(q(-1, 2)));
        assert_eq!(f[0].e1, Some(q(1, 1)));
    }

    #[test]
    fn equal_index_coincidence() {
        for m in (2..=12).step_by(2) {
            for n in 1..=6 {
                for t in 0..=m / 2 {
                    for q in filtration(&FiltrationSpec::split(m, n, Side::Orthogonal { t }).unwrap()) {
                        if q.index == t {
                            assert_eq!(q.e0, q.f0);
                        }
                    }
                }
                for k in 0..=n {
                    for q in filtration(&FiltrationSpec::split(m, n, Side::Symplectic { k }).unwrap()) {
                        if q.index == k {
                            assert_eq!(q.e0, q.f0);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn absorption_examples() {
        assert!(absorption_identity(6, 2, 1, 1).unwrap());
        assert!(absorption_identity(4, 3, 2, 0).unwrap());
        assert!(absorption_identity(2, 1, 5, 7).is_err());
    }

    #[test]
    fn isometry_drops_similitude_exponents() {
        let spec = FiltrationSpec::split(6, 2, Side::Orthogonal { t: 1 }).unwrap().with_isometry(true);
        let f = filtration(&spec);
        assert!(f.iter().all(|q| q.e0.is_none() && q.f0.is_none() && q.absorbed()));
        assert_eq!(f[0].e1, Some(q(0, 1)));
    }

    #[test]
    fn invalid_specs() {
        assert!(FiltrationSpec::split(5, 2, Side::Orthogonal { t: 1 }).is_err());
        assert!(FiltrationSpec::split(6, 2, Side::Orthogonal { t: 4 }).is_err());
        assert!(FiltrationSpec::split(6, 2, Side::Symplectic { k: 3 }).is_err());
        assert!(FiltrationSpec::new(6, 2, 1, Side::Orthogonal { t: 2 }, false).is_err());
    }
}
