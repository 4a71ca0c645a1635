//! Seeded random corpora of representations.
//!
//! Characters are products of a small pool of declared symbols (orders 2, 3
//! and infinite) with a rational power of `|-|` of denominator at most 4.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use theta_core::repdata::{canonicalize_gsp4, DRep, GSp4Rep, Gl2Rep, Gso22Rep, Gso40Rep, ScOrigin, ScToken};
use theta_core::theta::{theta_22_to_gsp4, theta_40_to_gsp4};
use theta_core::{Character, Exponent, Symbol};

/// Which case of the GSO(2,2) lift a pair exercises.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Gso22Case {
    /// `tau ⊠ tau`, discrete series.
    Equal,
    /// Two distinct supercuspidals.
    TwoSupercuspidal,
    /// Supercuspidal and Steinberg.
    SupercuspidalSteinberg,
    /// Two distinct Steinbergs.
    TwoSteinberg,
    /// One discrete series, one not.
    OneDiscrete,
    /// Neither discrete.
    NoneDiscrete,
}

impl Gso22Case {
    pub const ALL: [Gso22Case; 6] = [
        Gso22Case::Equal,
        Gso22Case::TwoSupercuspidal,
        Gso22Case::SupercuspidalSteinberg,
        Gso22Case::TwoSteinberg,
        Gso22Case::OneDiscrete,
        Gso22Case::NoneDiscrete,
    ];
}

pub struct Generator {
    rng: ChaCha8Rng,
    free: Vec<Symbol>,
    quadratic: Vec<Symbol>,
    cubic: Symbol,
    unramified: Vec<Symbol>,
    tokens: u32,
}

fn sym(name: &str, order: Option<u32>, unramified: bool) -> Symbol {
    Symbol::new(name, order, unramified).expect("pool symbol")
}

fn nu(num: i64, den: i64) -> Character {
    Character::abs_frac(num, den)
}

impl Generator {
    pub fn new(seed: u64) -> Self {
        Generator {
            rng: ChaCha8Rng::seed_from_u64(seed),
            free: vec![sym("a", None, false), sym("b", None, false), sym("c", None, false)],
            quadratic: vec![sym("q1", Some(2), false), sym("q2", Some(2), false)],
            cubic: sym("e3", Some(3), false),
            unramified: vec![sym("x", None, true), sym("y", None, true), sym("z", None, true), sym("s", Some(2), true)],
            tokens: 0,
        }
    }

    /// A rational exponent with denominator at most 4 in `[-2, 2]`.
    pub fn exponent(&mut self) -> Exponent {
        let den = self.rng.gen_range(1..=4);
        Exponent::new(self.rng.gen_range(-2 * den..=2 * den), den)
    }

    /// A unitary character built from the pool.
    pub fn unitary(&mut self) -> Character {
        let mut c = Character::trivial();
        for _ in 0..self.rng.gen_range(0..=2) {
            let s = match self.rng.gen_range(0..3) {
                0 => self.free.choose(&mut self.rng).expect("pool").clone(),
                1 => self.quadratic.choose(&mut self.rng).expect("pool").clone(),
                _ => self.cubic.clone(),
            };
            c = c * Character::symbol_pow(&s, self.rng.gen_range(-2..=2));
        }
        c
    }

    pub fn character(&mut self) -> Character {
        let e = self.exponent();
        self.unitary().shift(e)
    }

    pub fn nontrivial_character(&mut self) -> Character {
        loop {
            let c = self.character();
            if !c.is_trivial() {
                return c;
            }
        }
    }

    /// `q1`, `q2` or `q1 q2`.
    pub fn quadratic(&mut self) -> Character {
        let [q1, q2] = [&self.quadratic[0], &self.quadratic[1]].map(Character::symbol);
        match self.rng.gen_range(0..3) {
            0 => q1,
            1 => q2,
            _ => q1 * q2,
        }
    }

    pub fn unramified_character(&mut self) -> Character {
        let mut c = Character::trivial();
        for _ in 0..self.rng.gen_range(0..=2) {
            let s = self.unramified.choose(&mut self.rng).expect("pool").clone();
            c = c * Character::symbol_pow(&s, self.rng.gen_range(-1..=1));
        }
        let e = self.exponent();
        c.shift(e)
    }

    /// A fresh token; its self-twists are drawn from subgroups of `<q1, q2>`.
    pub fn token(&mut self, central: Character) -> ScToken {
        self.tokens += 1;
        let name = format!("t{}", self.tokens);
        let gens: Vec<Character> = match self.rng.gen_range(0..5) {
            0 | 1 => Vec::new(),
            2 | 3 => vec![self.quadratic()],
            _ => self.quadratic.iter().map(Character::symbol).collect(),
        };
        ScToken::generated(&name, central, &gens).expect("self-twist subgroup")
    }

    fn token_fixing(&mut self, q: &Character, central: Character) -> ScToken {
        self.tokens += 1;
        ScToken::generated(&format!("t{}", self.tokens), central, std::slice::from_ref(q)).expect("self-twist subgroup")
    }

    pub fn supercuspidal(&mut self) -> Gl2Rep {
        let w = self.character();
        let t = self.token(w);
        Gl2Rep::supercuspidal(&t, &self.character())
    }

    /// A supercuspidal with central character `omega`.
    pub fn supercuspidal_with_central(&mut self, omega: &Character) -> Gl2Rep {
        let twist = self.character();
        let t = self.token(omega / &twist.pow(2));
        Gl2Rep::supercuspidal(&t, &twist)
    }

    pub fn discrete(&mut self) -> Gl2Rep {
        if self.rng.gen_bool(0.5) {
            self.supercuspidal()
        } else {
            Gl2Rep::steinberg(&self.character())
        }
    }

    /// A non-discrete irreducible with central character `omega`; one-dimensional sometimes.
    fn non_discrete_with_central(&mut self, omega: &Character, half: Option<&Character>) -> Gl2Rep {
        match half {
            Some(h) if self.rng.gen_bool(0.3) => Gl2Rep::one_dim(&(h * &self.quadratic_or_one())),
            _ => {
                let a = self.character();
                Gl2Rep::langlands_quotient(&a, &(omega / &a))
            }
        }
    }

    fn quadratic_or_one(&mut self) -> Character {
        if self.rng.gen_bool(0.5) {
            Character::trivial()
        } else {
            self.quadratic()
        }
    }

    fn ordered(&mut self, a: Gl2Rep, b: Gl2Rep) -> Gso22Rep {
        let (a, b) = if self.rng.gen_bool(0.5) { (a, b) } else { (b, a) };
        Gso22Rep::new(a, b).expect("equal central characters")
    }

    pub fn gso22(&mut self, case: Gso22Case) -> Gso22Rep {
        match case {
            Gso22Case::Equal => {
                let t = self.discrete();
                Gso22Rep::new(t.clone(), t).expect("equal pair")
            }
            Gso22Case::TwoSupercuspidal => {
                let t1 = self.supercuspidal();
                let t2 = match (&t1, self.rng.gen_bool(0.3)) {
                    // same token, twisted by a quadratic character outside its self-twists
                    (Gl2Rep::Supercuspidal { token, .. }, true) if token.self_twists().len() < 4 => {
                        let q = self.quadratic.iter().map(Character::symbol).find(|q| !token.fixes(q));
                        match q {
                            Some(q) => t1.twist(&q),
                            None => self.supercuspidal_with_central(&t1.central_character()),
                        }
                    }
                    _ => self.supercuspidal_with_central(&t1.central_character()),
                };
                self.ordered(t1, t2)
            }
            Gso22Case::SupercuspidalSteinberg => {
                let chi = self.character();
                let t1 = self.supercuspidal_with_central(&chi.pow(2));
                self.ordered(t1, Gl2Rep::steinberg(&chi))
            }
            Gso22Case::TwoSteinberg => {
                let chi = self.character();
                let q = self.quadratic();
                self.ordered(Gl2Rep::steinberg(&chi), Gl2Rep::steinberg(&(&chi * &q)))
            }
            Gso22Case::OneDiscrete => {
                if self.rng.gen_bool(0.5) {
                    let chi = self.character();
                    let other = self.non_discrete_with_central(&chi.pow(2), Some(&chi));
                    self.ordered(Gl2Rep::steinberg(&chi), other)
                } else {
                    let omega = self.character().pow(2);
                    let other = self.non_discrete_with_central(&omega, None);
                    let sc = self.supercuspidal_with_central(&other.central_character());
                    self.ordered(sc, other)
                }
            }
            Gso22Case::NoneDiscrete => {
                let h = self.character();
                let first = if self.rng.gen_bool(0.3) {
                    Gl2Rep::one_dim(&h)
                } else {
                    let b = self.character();
                    Gl2Rep::langlands_quotient(&(h.pow(2) / &b), &b)
                };
                let second = self.non_discrete_with_central(&h.pow(2), Some(&h));
                self.ordered(first, second)
            }
        }
    }

    /// `per_case` pairs of each of the six cases.
    pub fn gso22_corpus(&mut self, per_case: usize) -> Vec<(Gso22Case, Gso22Rep)> {
        Gso22Case::ALL.iter().flat_map(|&c| (0..per_case).map(move |_| c)).map(|c| (c, self.gso22(c))).collect()
    }

    pub fn gso40(&mut self) -> Gso40Rep {
        let d = |rho: &Gl2Rep| match rho {
            Gl2Rep::Supercuspidal { token, twist } => DRep::of_supercuspidal(token, twist),
            Gl2Rep::Steinberg { chi } => DRep::one_dim(chi),
            _ => unreachable!("discrete series"),
        };
        let t1 = self.discrete();
        let t2 = match self.rng.gen_range(0..3) {
            0 => t1.clone(),
            1 => match &t1 {
                Gl2Rep::Steinberg { chi } => Gl2Rep::steinberg(&(chi * &self.quadratic())),
                _ => self.supercuspidal_with_central(&t1.central_character()),
            },
            _ => self.supercuspidal_with_central(&t1.central_character()),
        };
        Gso40Rep::new(d(&t1), d(&t2)).expect("equal central characters")
    }

    /// A discrete series of PGL2 other than `st`.
    fn siegel_tau(&mut self) -> Gl2Rep {
        if self.rng.gen_bool(0.5) {
            Gl2Rep::steinberg(&self.quadratic())
        } else {
            self.supercuspidal_with_central(&Character::trivial())
        }
    }

    fn klingen_pair(&mut self) -> (Character, Gl2Rep) {
        let q = self.quadratic();
        let w = self.character();
        let t = self.token_fixing(&q, w);
        (q, Gl2Rep::supercuspidal(&t, &self.character()))
    }

    /// Supercuspidals of all three origins.
    pub fn gsp4_supercuspidal(&mut self) -> GSp4Rep {
        match self.rng.gen_range(0..3) {
            0 => {
                self.tokens += 1;
                let central = self.character();
                GSp4Rep::Supercuspidal { name: format!("pi{}", self.tokens), central, origin: ScOrigin::NonLift }
            }
            1 => {
                let s = self.gso22(Gso22Case::TwoSupercuspidal);
                theta_22_to_gsp4(&s).expect("lift").value.expect("nonzero")
            }
            _ => loop {
                let s = self.gso40();
                if s.tau1 != s.tau2 {
                    break theta_40_to_gsp4(&s).expect("lift").value.expect("nonzero");
                }
            },
        }
    }

    /// Data at which the standard module reduces, so the adjoint L-function has a pole.
    fn pole_forcing(&mut self, variant: usize) -> GSp4Rep {
        let sign = if self.rng.gen_bool(0.5) { 1 } else { -1 };
        match variant {
            0 => GSp4Rep::Jqz { chi: nu(2 * sign, 1), tau: Gl2Rep::steinberg(&self.character()) },
            1 => {
                let (q, tau) = self.klingen_pair();
                GSp4Rep::Jqz { chi: q.shift(Exponent::from_integer(sign)), tau }
            }
            2 => GSp4Rep::Jpy { tau: self.supercuspidal_with_central(&nu(sign, 1)), chi: self.character() },
            3 => {
                let s = *[Exponent::new(1, 2), Exponent::new(3, 2)].choose(&mut self.rng).expect("nonempty");
                GSp4Rep::Jpy { tau: Gl2Rep::steinberg(&self.quadratic_or_one().shift(s * sign)), chi: self.character() }
            }
            _ => {
                // one of the eight Borel characters equals |-|^{-1}
                let x = self.character();
                let (chi1, chi2) = match self.rng.gen_range(0..8) {
                    0 => (nu(-1, 1), x),
                    1 => (nu(1, 1), x),
                    2 => (x, nu(-1, 1)),
                    3 => (x, nu(1, 1)),
                    4 => (x.clone(), x.inv() * nu(-1, 1)),
                    5 => (x.clone(), x.inv() * nu(1, 1)),
                    6 => (x.clone(), x * nu(1, 1)),
                    _ => (x.clone(), x * nu(-1, 1)),
                };
                GSp4Rep::Jb { chi1, chi2, chi: self.character() }
            }
        }
    }

    /// One representation of the given non-supercuspidal variant (index into 12 kinds).
    fn non_supercuspidal(&mut self, kind: usize) -> GSp4Rep {
        match kind {
            0 => {
                let (chi, tau) = self.klingen_pair();
                GSp4Rep::StKlingen { chi, tau }
            }
            1 => {
                let (chi, tau) = self.klingen_pair();
                GSp4Rep::SpKlingen { chi, tau }
            }
            2 => GSp4Rep::StSiegel { tau: self.siegel_tau(), mu: self.character() },
            3 => GSp4Rep::SpSiegel { tau: self.siegel_tau(), mu: self.character() },
            4 => GSp4Rep::TwistedSteinberg { chi: self.character() },
            5 => GSp4Rep::PiGen { tau: self.discrete() },
            6 => GSp4Rep::PiNg { tau: self.discrete() },
            7 => GSp4Rep::Jqz { chi: self.nontrivial_character(), tau: self.discrete() },
            8 => GSp4Rep::Jpy { tau: self.discrete(), chi: self.character() },
            9 => GSp4Rep::Jb { chi1: self.character(), chi2: self.character(), chi: self.character() },
            _ => {
                let v = self.rng.gen_range(0..5);
                self.pole_forcing(v)
            }
        }
    }

    /// `n` canonical non-supercuspidal representations cycling through every variant.
    pub fn gsp4_non_supercuspidal(&mut self, n: usize) -> Vec<GSp4Rep> {
        (0..n)
            .map(|i| {
                let raw = if i % 11 == 10 { self.pole_forcing((i / 11) % 5) } else { self.non_supercuspidal(i % 11) };
                canonicalize_gsp4(&raw).unwrap_or_else(|e| panic!("generated {raw}: {e}"))
            })
            .collect()
    }

    /// Non-supercuspidals plus roughly one supercuspidal in eight.
    pub fn gsp4_corpus(&mut self, n: usize) -> Vec<GSp4Rep> {
        let mut out = self.gsp4_non_supercuspidal(n - n / 8);
        out.extend((0..n / 8).map(|_| self.gsp4_supercuspidal()));
        out
    }

    /// Unramified Borel data, with boundary cases: `chi2 = |-|^{-1}` and other reducible points.
    pub fn unramified_triple(&mut self, i: usize) -> (Character, Character, Character) {
        let a = self.unramified_character();
        let b = self.unramified_character();
        let c = self.unramified_character();
        match i % 5 {
            0 => (a, nu(-1, 1), c),
            1 => (a.clone(), a * nu(1, 1), c),
            2 => (a.clone(), a.inv() * nu(-1, 1), c),
            _ => (a, b, c),
        }
    }
}
