//! Formal characters of F^×: a unitary part in a finitely presented abelian
//! group times an exact rational power of the normalized absolute value.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Div, Mul};

use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact exponent of the absolute value `|-|`.
pub type Exponent = Ratio<i64>;

/// Name reserved for the absolute value in the text syntax.
pub const ABS_NAME: &str = "nu";

#[derive(Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
struct SymbolDecl {
    name: String,
    order: Option<u32>,
    unramified: bool,
}

/// A declared generator of the unitary character group.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Symbol(Arc<SymbolDecl>);

impl Symbol {
    /// `order = None` means infinite order.
    pub fn new(name: &str, order: Option<u32>, unramified: bool) -> Result<Self> {
        let bad = |detail: &str| Error::InvalidSymbol { name: name.to_string(), detail: detail.to_string() };
        let mut chars = name.chars();
        match chars.next() {
            Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
            _ => return Err(bad("must start with a letter or underscore")),
        }
        if !chars.all(|c| c.is_ascii_alphanumeric() || c == '_') {
            return Err(bad("only ASCII letters, digits and underscores are allowed"));
        }
        if name == ABS_NAME {
            return Err(bad("`nu` denotes the absolute value"));
        }
        if order == Some(0) {
            return Err(bad("order must be at least 1"));
        }
        Ok(Symbol(Arc::new(SymbolDecl { name: name.to_string(), order, unramified })))
    }

    pub fn name(&self) -> &str {
        &self.0.name
    }

    pub fn order(&self) -> Option<u32> {
        self.0.order
    }

    pub fn is_unramified(&self) -> bool {
        self.0.unramified
    }

    fn reduce(&self, e: i64) -> i64 {
        match self.0.order {
            Some(n) => e.rem_euclid(i64::from(n)),
            None => e,
        }
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.name)
    }
}

/// A character `u * |-|^s`, stored in canonical form.
///
/// The derived ordering is the fixed total order used for every tie-break.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Character {
    unitary: BTreeMap<Symbol, i64>,
    norm: Exponent,
}

impl Default for Character {
    fn default() -> Self {
        Self::trivial()
    }
}

impl Character {
    pub fn trivial() -> Self {
        Character { unitary: BTreeMap::new(), norm: Exponent::zero() }
    }

    /// `|-|^s`.
    pub fn abs_pow(s: Exponent) -> Self {
        Character { unitary: BTreeMap::new(), norm: s }
    }

    /// `|-|^(num/den)`.
    pub fn abs_frac(num: i64, den: i64) -> Self {
        Self::abs_pow(Exponent::new(num, den))
    }

    pub fn symbol(sym: &Symbol) -> Self {
        Self::symbol_pow(sym, 1)
    }

    pub fn symbol_pow(sym: &Symbol, e: i64) -> Self {
        let mut unitary = BTreeMap::new();
        let e = sym.reduce(e);
        if e != 0 {
            unitary.insert(sym.clone(), e);
        }
        Character { unitary, norm: Exponent::zero() }
    }

    /// Product, failing if a symbol name is bound to two different declarations.
    pub fn try_mul(&self, other: &Character) -> Result<Character> {
        let mut unitary = self.unitary.clone();
        for (sym, &e) in &other.unitary {
            if let Some(clash) = self.unitary.keys().find(|k| k.name() == sym.name() && *k != sym) {
                return Err(Error::ContextMismatch { symbol: clash.name().to_string() });
            }
            let slot = unitary.entry(sym.clone()).or_insert(0);
            *slot = sym.reduce(*slot + e);
            if *slot == 0 {
                unitary.remove(sym);
            }
        }
        Ok(Character { unitary, norm: self.norm + other.norm })
    }

    pub fn inv(&self) -> Character {
        self.pow(-1)
    }

    pub fn pow(&self, n: i64) -> Character {
        let unitary =
            self.unitary.iter().map(|(s, &e)| (s.clone(), s.reduce(e * n))).filter(|&(_, e)| e != 0).collect();
        Character { unitary, norm: self.norm * n }
    }

    /// `self * |-|^s`.
    pub fn shift(&self, s: Exponent) -> Character {
        Character { unitary: self.unitary.clone(), norm: self.norm + s }
    }

    pub fn is_trivial(&self) -> bool {
        self.unitary.is_empty() && self.norm.is_zero()
    }

    /// True iff the square is trivial (the trivial character included).
    pub fn is_quadratic(&self) -> bool {
        self.pow(2).is_trivial()
    }

    pub fn is_nontrivial_quadratic(&self) -> bool {
        self.is_quadratic() && !self.is_trivial()
    }

    /// The exponent `s` with `|chi| = |-|^s`.
    pub fn abs_exponent(&self) -> Exponent {
        self.norm
    }

    pub fn unitary_part(&self) -> Character {
        Character { unitary: self.unitary.clone(), norm: Exponent::zero() }
    }

    pub fn is_unitary(&self) -> bool {
        self.norm.is_zero()
    }

    /// Whether `self = |-|^s`.
    pub fn is_abs_pow(&self, s: Exponent) -> bool {
        self.unitary.is_empty() && self.norm == s
    }

    /// Every symbol occurring is declared unramified.
    pub fn is_unramified(&self) -> bool {
        self.unitary.keys().all(Symbol::is_unramified)
    }

    pub fn symbols(&self) -> impl Iterator<Item = (&Symbol, i64)> + '_ {
        self.unitary.iter().map(|(s, &e)| (s, e))
    }
}

impl Mul for &Character {
    type Output = Character;

    /// Panics on a symbol-declaration clash; use [`Character::try_mul`] to recover.
    fn mul(self, rhs: &Character) -> Character {
        match self.try_mul(rhs) {
            Ok(c) => c,
            Err(e) => panic!("{e}"),
        }
    }
}

impl Mul for Character {
    type Output = Character;
    fn mul(self, rhs: Character) -> Character {
        &self * &rhs
    }
}

impl Mul<&Character> for Character {
    type Output = Character;
    fn mul(self, rhs: &Character) -> Character {
        &self * rhs
    }
}

impl Div for &Character {
    type Output = Character;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &Character) -> Character {
        self * &rhs.inv()
    }
}

impl Div for Character {
    type Output = Character;
    fn div(self, rhs: Character) -> Character {
        &self / &rhs
    }
}

impl Div<&Character> for Character {
    type Output = Character;
    fn div(self, rhs: &Character) -> Character {
        &self / rhs
    }
}

impl<'a> core::iter::Product<&'a Character> for Character {
    fn product<I: Iterator<Item = &'a Character>>(iter: I) -> Character {
        iter.fold(Character::trivial(), |acc, c| acc * c)
    }
}

impl core::iter::Product for Character {
    fn product<I: Iterator<Item = Character>>(iter: I) -> Character {
        iter.fold(Character::trivial(), |acc, c| acc * c)
    }
}

/// Writes an exponent after `^`: `2`, `-1`, `(1/2)`, `(-3/4)`.
pub fn fmt_power(f: &mut fmt::Formatter<'_>, e: Exponent) -> fmt::Result {
    if e.is_integer() {
        write!(f, "{}", e.numer())
    } else {
        write!(f, "({}/{})", e.numer(), e.denom())
    }
}

impl fmt::Display for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return f.write_str("1");
        }
        let mut first = true;
        for (sym, &e) in &self.unitary {
            if !first {
                f.write_str("*")?;
            }
            first = false;
            f.write_str(sym.name())?;
            if e != 1 {
                f.write_str("^")?;
                fmt_power(f, Exponent::from_integer(e))?;
            }
        }
        if !self.norm.is_zero() {
            if !first {
                f.write_str("*")?;
            }
            f.write_str(ABS_NAME)?;
            if !self.norm.is_one() {
                f.write_str("^")?;
                fmt_power(f, self.norm)?;
            }
        }
        Ok(())
    }
}

/// Smallest element of a non-empty iterator under the fixed order.
pub(crate) fn min_of<T: Ord, I: IntoIterator<Item = T>>(items: I) -> T {
    items.into_iter().min().expect("non-empty candidate set")
}

/// Closure of a set of characters under multiplication (finite-order generators only).
pub fn subgroup_closure(gens: &[Character]) -> Result<Vec<Character>> {
    let mut group = alloc::vec![Character::trivial()];
    let mut frontier = group.clone();
    while let Some(x) = frontier.pop() {
        for g in gens {
            let y = x.try_mul(g)?;
            if !group.contains(&y) {
                if group.len() > 64 {
                    return Err(Error::validation("self-twist group", "generators do not span a finite group"));
                }
                group.push(y.clone());
                frontier.push(y);
            }
        }
    }
    group.sort();
    Ok(group)
}

/// Sign of an exponent as -1, 0, 1.
pub(crate) fn sign(e: Exponent) -> i8 {
    if e.is_positive() {
        1
    } else if e.is_negative() {
        -1
    } else {
        0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::format;
    use proptest::prelude::*;

    fn sym(name: &str, order: Option<u32>) -> Symbol {
        Symbol::new(name, order, false).unwrap()
    }

    #[test]
    fn declared_order_kills_square() {
        let chi0 = Character::symbol(&sym("chi0", Some(2)));
        assert!((&chi0 * &chi0).is_trivial());
        assert!(chi0.is_quadratic());
        assert!(chi0.is_nontrivial_quadratic());
    }

    #[test]
    fn abs_inverse_pair_is_trivial() {
        let a = Character::abs_frac(1, 2);
        let b = Character::abs_frac(-1, 2);
        assert!((a * b).is_trivial());
    }

    #[test]
    fn abs_exponent_of_shifted_symbol() {
        let chi = Character::symbol(&sym("chi", None));
        assert_eq!((chi * Character::abs_frac(-2, 1)).abs_exponent(), Exponent::from_integer(-2));
    }

    #[test]
    fn quotient_of_twisted_characters() {
        // chi_i = u |-|^(-s_i): |chi1/chi2| = |-|^(s2 - s1)
        let u = Character::symbol(&sym("u", Some(3)));
        let (s1, s2) = (Exponent::new(3, 4), Exponent::new(-1, 2));
        let c1 = u.shift(-s1);
        let c2 = u.shift(-s2);
        assert_eq!((c1 / c2).abs_exponent(), s2 - s1);
    }

    #[test]
    fn non_integral_abs_power_is_not_quadratic() {
        assert!(!Character::abs_frac(1, 3).is_quadratic());
    }

    #[test]
    fn unitary_part_drops_norm() {
        let chi = Character::symbol(&sym("chi", None)).shift(Exponent::new(5, 2));
        assert!(chi.unitary_part().is_unitary());
        assert_eq!(chi.unitary_part(), Character::symbol(&sym("chi", None)));
    }

    #[test]
    fn context_mismatch_detected() {
        let a = Character::symbol(&sym("chi", Some(2)));
        let b = Character::symbol(&sym("chi", Some(3)));
        assert!(matches!(a.try_mul(&b), Err(Error::ContextMismatch { .. })));
    }

    #[test]
    fn reserved_and_malformed_names() {
        assert!(Symbol::new("nu", None, false).is_err());
        assert!(Symbol::new("2x", None, false).is_err());
        assert!(Symbol::new("x", Some(0), false).is_err());
        assert!(Symbol::new("one", Some(1), false).is_ok());
    }

    #[test]
    fn display_forms() {
        let chi = Character::symbol(&sym("chi", None));
        let eta = Character::symbol(&sym("eta", Some(3)));
        assert_eq!(format!("{}", Character::trivial()), "1");
        assert_eq!(format!("{}", Character::abs_frac(-1, 2)), "nu^(-1/2)");
        assert_eq!(format!("{}", Character::abs_frac(1, 1)), "nu");
        assert_eq!(format!("{}", chi.inv()), "chi^-1");
        assert_eq!(format!("{}", eta.inv() * chi.shift(Exponent::from_integer(-2))), "chi*eta^2*nu^-2");
    }

    #[test]
    fn closure_of_two_quadratics() {
        let a = Character::symbol(&sym("a", Some(2)));
        let b = Character::symbol(&sym("b", Some(2)));
        let g = subgroup_closure(&[a.clone(), b.clone()]).unwrap();
        assert_eq!(g.len(), 4);
        assert!(g.contains(&(a * b)));
    }

    fn arb_char() -> impl Strategy<Value = Character> {
        let syms = [sym("p", Some(2)), sym("q", Some(3)), sym("r", None)];
        (prop::collection::vec(-5i64..6, 3), -8i64..9, 1i64..5).prop_map(move |(es, n, d)| {
            let mut c = Character::abs_frac(n, d);
            for (s, e) in syms.iter().zip(es) {
                c = c * Character::symbol_pow(s, e);
            }
            c
        })
    }

    proptest! {
        #[test]
        fn mul_is_associative(a in arb_char(), b in arb_char(), c in arb_char()) {
            prop_assert_eq!((&a * &b) * &c, &a * &(&b * &c));
        }

        #[test]
        fn mul_is_commutative(a in arb_char(), b in arb_char()) {
            prop_assert_eq!(&a * &b, &b * &a);
        }

        #[test]
        fn inverse_cancels(a in arb_char()) {
            prop_assert!((a.inv() * &a).is_trivial());
            prop_assert!(a.pow(0).is_trivial());
        }

        #[test]
        fn pow_is_repeated_mul(a in arb_char(), n in 0i64..6) {
            let direct = (0..n).fold(Character::trivial(), |acc, _| acc * &a);
            prop_assert_eq!(a.pow(n), direct);
        }

        #[test]
        fn abs_exponent_is_additive(a in arb_char(), b in arb_char()) {
            prop_assert_eq!((&a * &b).abs_exponent(), a.abs_exponent() + b.abs_exponent());
        }

        #[test]
        fn quadratic_iff_square_trivial(a in arb_char()) {
            prop_assert_eq!(a.is_quadratic(), (&a * &a).is_trivial());
        }
    }
}
