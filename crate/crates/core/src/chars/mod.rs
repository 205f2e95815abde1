//! Formal characters of `F^×`.
//!
//! A [`Character`] is an element of the abelian group generated by the
//! normalized absolute value `ν` (with rational exponents) and a set of named
//! symbols, some of which carry a finite order. Symbols live in a
//! [`Registry`]; characters from different registries never mix.
//!
//! Symbols are in general position: a character with a nontrivial finite part
//! is never equal to a power of `ν` unless a [`Substitution`] makes it so.

mod condition;
mod expr;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, RwLock};

use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::qlinalg::{rat, Rational};

pub use condition::{Condition, ConditionSet};
pub use expr::{
    is_valid_symbol_name, parse_character, parse_latex_character, symbol_latex, CharExpr,
    ExprError,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CharError {
    #[error("characters belong to different symbol registries")]
    RegistryMismatch,
    #[error("invalid symbol name `{0}`")]
    InvalidName(String),
    #[error("torsion order must be at least 2 (got {0})")]
    InvalidOrder(u32),
    #[error("symbol `{name}` already declared with order {existing:?}, cannot redeclare with order {requested:?}")]
    OrderConflict {
        name: String,
        existing: Option<u32>,
        requested: Option<u32>,
    },
    #[error("substitution for `{0}` refers to a substituted symbol")]
    CyclicAssignment(String),
    #[error("cannot map `{name}` (order {order}) to a character whose {order}th power is nontrivial")]
    IncompatibleOrder { name: String, order: u32 },
    #[error("self-twist `{0}` must be a symbol of order 2")]
    NotQuadratic(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RegistryId(u64);

/// A named generator of the character group. Symbols with `order = Some(n)`
/// satisfy `s^n = 1`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Symbol {
    name: Arc<str>,
    order: Option<u32>,
}

impl Symbol {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> Option<u32> {
        self.order
    }

    pub fn is_torsion(&self) -> bool {
        self.order.is_some()
    }

    fn reduce(&self, e: i64) -> i64 {
        match self.order {
            Some(n) => e.rem_euclid(i64::from(n)),
            None => e,
        }
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

static NEXT_REGISTRY: AtomicU64 = AtomicU64::new(1);

/// Append-only table of symbol declarations. Cloning shares the table.
#[derive(Clone)]
pub struct Registry {
    id: RegistryId,
    symbols: Arc<RwLock<BTreeMap<String, Option<u32>>>>,
}

impl Default for Registry {
    fn default() -> Self {
        Self::new()
    }
}

impl fmt::Debug for Registry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Registry")
            .field("id", &self.id.0)
            .field("symbols", &*self.symbols.read().expect("registry lock"))
            .finish()
    }
}

impl Registry {
    pub fn new() -> Self {
        Registry {
            id: RegistryId(NEXT_REGISTRY.fetch_add(1, Ordering::Relaxed)),
            symbols: Arc::default(),
        }
    }

    pub fn id(&self) -> RegistryId {
        self.id
    }

    /// Declares `name` with the given order, or returns the existing symbol.
    ///
    /// `order = None` on an already declared torsion symbol refers to that
    /// symbol; a bare mention never conflicts. Declaring a free symbol as
    /// torsion afterwards (or changing the order) is an error.
    pub fn declare(&self, name: &str, order: Option<u32>) -> Result<Symbol, CharError> {
        if !is_valid_symbol_name(name) {
            return Err(CharError::InvalidName(name.to_string()));
        }
        if let Some(n) = order {
            if n < 2 {
                return Err(CharError::InvalidOrder(n));
            }
        }
        let mut table = self.symbols.write().expect("registry lock");
        let stored = match table.get(name) {
            Some(&existing) => match (existing, order) {
                (e, None) => e,
                (e, Some(r)) if e == Some(r) => e,
                (e, r) => {
                    return Err(CharError::OrderConflict {
                        name: name.to_string(),
                        existing: e,
                        requested: r,
                    })
                }
            },
            None => {
                table.insert(name.to_string(), order);
                order
            }
        };
        Ok(Symbol {
            name: Arc::from(name),
            order: stored,
        })
    }

    pub fn lookup(&self, name: &str) -> Option<Symbol> {
        let table = self.symbols.read().expect("registry lock");
        table.get(name).map(|&order| Symbol {
            name: Arc::from(name),
            order,
        })
    }

    pub fn symbols(&self) -> Vec<Symbol> {
        let table = self.symbols.read().expect("registry lock");
        table
            .iter()
            .map(|(name, &order)| Symbol {
                name: Arc::from(name.as_str()),
                order,
            })
            .collect()
    }

    pub fn trivial(&self) -> Character {
        Character {
            registry: self.id,
            nu: Rational::zero(),
            finite: BTreeMap::new(),
        }
    }

    /// `ν^r`.
    pub fn nu(&self, r: Rational) -> Character {
        Character {
            nu: r,
            ..self.trivial()
        }
    }

    pub fn nu_int(&self, r: i64) -> Character {
        self.nu(rat(r))
    }

    /// The character given by a single symbol.
    pub fn generator(&self, symbol: &Symbol) -> Character {
        let mut c = self.trivial();
        c.finite.insert(symbol.clone(), 1);
        c
    }

    /// A free (infinite order) symbol, declared if necessary.
    pub fn generic(&self, name: &str) -> Result<Character, CharError> {
        Ok(self.generator(&self.declare(name, None)?))
    }

    /// A symbol of finite order `n`, declared if necessary.
    pub fn torsion(&self, name: &str, n: u32) -> Result<Character, CharError> {
        Ok(self.generator(&self.declare(name, Some(n))?))
    }
}

/// An element of the formal character group.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Character {
    registry: RegistryId,
    nu: Rational,
    finite: BTreeMap<Symbol, i64>,
}

/// The operation argument of [`group_op`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GroupOp {
    Multiply,
    Invert,
    Power(i64),
}

/// Multiply, invert or raise to a power. `Invert` and `Power` ignore `b`.
pub fn group_op(a: &Character, b: &Character, op: GroupOp) -> Result<Character, CharError> {
    match op {
        GroupOp::Multiply => a.try_mul(b),
        GroupOp::Invert => Ok(a.inv()),
        GroupOp::Power(k) => Ok(a.pow(k)),
    }
}

/// Symbol count, signed symbol exponents, signed `ν`-exponent.
type SortKey<'a> = (usize, Vec<(&'a str, u64, bool)>, (Rational, bool));

impl Character {
    pub fn registry_id(&self) -> RegistryId {
        self.registry
    }

    pub fn nu_exponent(&self) -> &Rational {
        &self.nu
    }

    /// Nonzero exponents of the named symbols, torsion exponents reduced.
    pub fn finite_part(&self) -> &BTreeMap<Symbol, i64> {
        &self.finite
    }

    pub fn exponent_of(&self, symbol: &Symbol) -> i64 {
        self.finite.get(symbol).copied().unwrap_or(0)
    }

    pub fn is_trivial(&self) -> bool {
        self.nu.is_zero() && self.finite.is_empty()
    }

    /// `Some(r)` iff this is exactly `ν^r`.
    pub fn is_nu_power(&self) -> Option<Rational> {
        self.finite.is_empty().then(|| self.nu.clone())
    }

    pub fn same_registry(&self, other: &Character) -> bool {
        self.registry == other.registry
    }

    pub fn try_mul(&self, other: &Character) -> Result<Character, CharError> {
        if !self.same_registry(other) {
            return Err(CharError::RegistryMismatch);
        }
        let mut finite = self.finite.clone();
        for (s, &e) in &other.finite {
            let slot = finite.entry(s.clone()).or_insert(0);
            *slot = s.reduce(*slot + e);
            if *slot == 0 {
                finite.remove(s);
            }
        }
        Ok(Character {
            registry: self.registry,
            nu: &self.nu + &other.nu,
            finite,
        })
    }

    pub fn try_div(&self, other: &Character) -> Result<Character, CharError> {
        self.try_mul(&other.inv())
    }

    pub fn inv(&self) -> Character {
        self.pow(-1)
    }

    pub fn pow(&self, k: i64) -> Character {
        let finite = self
            .finite
            .iter()
            .map(|(s, &e)| (s.clone(), s.reduce(e * k)))
            .filter(|&(_, e)| e != 0)
            .collect();
        Character {
            registry: self.registry,
            nu: &self.nu * rat(k),
            finite,
        }
    }

    /// Symbols with nonzero exponent.
    pub fn symbols(&self) -> impl Iterator<Item = &Symbol> {
        self.finite.keys()
    }

    /// Infinite-order symbols with nonzero exponent.
    pub fn free_symbols(&self) -> impl Iterator<Item = &Symbol> {
        self.finite.keys().filter(|s| !s.is_torsion())
    }

    /// The trivial character of the same registry.
    pub fn trivial_like(&self) -> Character {
        Character {
            registry: self.registry,
            nu: Rational::zero(),
            finite: BTreeMap::new(),
        }
    }

    /// `self · ν^r`.
    pub fn times_nu(&self, r: &Rational) -> Character {
        Character {
            nu: &self.nu + r,
            ..self.clone()
        }
    }

    /// `self · s^e`.
    pub fn times_symbol(&self, s: &Symbol, e: i64) -> Character {
        let mut c = self.clone();
        let slot = c.finite.entry(s.clone()).or_insert(0);
        *slot = s.reduce(*slot + e);
        if *slot == 0 {
            c.finite.remove(s);
        }
        c
    }

    /// This character with the symbol removed from its finite part.
    pub fn without(&self, symbol: &Symbol) -> Character {
        let mut c = self.clone();
        c.finite.remove(symbol);
        c
    }

    /// Applies the group homomorphism extending `substitution`. Symbols
    /// without an assignment are left unchanged.
    pub fn substitute(&self, substitution: &Substitution) -> Result<Character, CharError> {
        substitution.check()?;
        let mut out = Character {
            registry: self.registry,
            nu: self.nu.clone(),
            finite: BTreeMap::new(),
        };
        for (s, &e) in &self.finite {
            out = match substitution.get(s) {
                Some(target) => out.try_mul(&target.pow(e))?,
                None => out.times_symbol(s, e),
            };
        }
        Ok(out)
    }

    /// Ordering used for canonical printing: fewer symbols first, then the
    /// symbols by name with positive exponents before negative ones, then
    /// `ν`-exponents by absolute value with positive before negative.
    fn sort_key(&self) -> SortKey<'_> {
        (
            self.finite.len(),
            self.finite
                .iter()
                .map(|(s, &e)| (s.name(), e.unsigned_abs(), e < 0))
                .collect(),
            (self.nu.abs(), self.nu.is_negative()),
        )
    }
}

impl PartialOrd for Character {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Character {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.sort_key()
            .cmp(&other.sort_key())
            .then_with(|| self.finite.cmp(&other.finite))
            .then_with(|| self.registry.cmp(&other.registry))
    }
}

impl std::ops::Mul for &Character {
    type Output = Character;
    /// Panics when the operands come from different registries; use
    /// [`Character::try_mul`] for a fallible version.
    fn mul(self, rhs: &Character) -> Character {
        self.try_mul(rhs).expect("characters from the same registry")
    }
}

impl std::ops::Div for &Character {
    type Output = Character;
    fn div(self, rhs: &Character) -> Character {
        self.try_div(rhs).expect("characters from the same registry")
    }
}

impl fmt::Debug for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Character({self})")
    }
}

/// An assignment of characters to symbols.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord)]
pub struct Substitution {
    map: BTreeMap<Symbol, Character>,
}

impl Substitution {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn single(symbol: Symbol, target: Character) -> Self {
        let mut s = Self::new();
        s.insert(symbol, target);
        s
    }

    pub fn insert(&mut self, symbol: Symbol, target: Character) {
        self.map.insert(symbol, target);
    }

    pub fn get(&self, symbol: &Symbol) -> Option<&Character> {
        self.map.get(symbol)
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Symbol, &Character)> {
        self.map.iter()
    }

    fn check(&self) -> Result<(), CharError> {
        for (s, target) in &self.map {
            if let Some(bad) = target.symbols().find(|t| self.map.contains_key(*t)) {
                return Err(CharError::CyclicAssignment(bad.name().to_string()));
            }
            if let Some(n) = s.order() {
                if !target.pow(i64::from(n)).is_trivial() {
                    return Err(CharError::IncompatibleOrder {
                        name: s.name().to_string(),
                        order: n,
                    });
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for Substitution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .map
            .iter()
            .map(|(s, c)| format!("{s}={c}"))
            .collect();
        f.write_str(&parts.join(", "))
    }
}

/// Opaque stand-in for a supercuspidal representation `π` of GL(2,F): its
/// name, central character `ω_π`, and the quadratic symbols `ξ` with
/// `ξπ ≅ π`.
///
/// Twisting by `τ` keeps the name (the adjoint of `τπ` is that of `π`) and
/// multiplies the central character by `τ²`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SupercuspidalGL2 {
    name: String,
    central_character: Character,
    self_twists: BTreeSet<Symbol>,
}

impl SupercuspidalGL2 {
    pub fn new(
        name: &str,
        central_character: Character,
        self_twists: impl IntoIterator<Item = Symbol>,
    ) -> Result<Self, CharError> {
        if !is_valid_symbol_name(name) {
            return Err(CharError::InvalidName(name.to_string()));
        }
        let self_twists: BTreeSet<Symbol> = self_twists.into_iter().collect();
        if let Some(bad) = self_twists.iter().find(|s| s.order() != Some(2)) {
            return Err(CharError::NotQuadratic(bad.name().to_string()));
        }
        Ok(SupercuspidalGL2 {
            name: name.to_string(),
            central_character,
            self_twists,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn central_character(&self) -> &Character {
        &self.central_character
    }

    pub fn self_twists(&self) -> &BTreeSet<Symbol> {
        &self.self_twists
    }

    /// Whether `c` is one of the self-twist characters.
    pub fn is_self_twist(&self, c: &Character) -> bool {
        c.nu_exponent().is_zero()
            && c.finite_part().len() == 1
            && c
                .finite_part()
                .iter()
                .all(|(s, &e)| e == 1 && self.self_twists.contains(s))
    }

    /// `τπ`.
    pub fn twisted(&self, tau: &Character) -> Result<Self, CharError> {
        Ok(SupercuspidalGL2 {
            central_character: self.central_character.try_mul(&tau.pow(2))?,
            ..self.clone()
        })
    }

    pub fn substitute(&self, s: &Substitution) -> Result<Self, CharError> {
        Ok(SupercuspidalGL2 {
            central_character: self.central_character.substitute(s)?,
            ..self.clone()
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qlinalg::ratio;

    #[test]
    fn quadratic_symbol_squares_to_one() {
        let reg = Registry::new();
        let xi = reg.torsion("xi", 2).unwrap();
        assert!((&xi * &xi).is_trivial());
        assert_eq!(xi.inv(), xi);
    }

    #[test]
    fn nu_exponent_arithmetic() {
        let reg = Registry::new();
        let chi = reg.generic("chi").unwrap();
        let sigma = reg.generic("sigma").unwrap();
        let a = &(&reg.nu(ratio(1, 2)) * &chi) * &sigma;
        let b = &(&reg.nu(ratio(-1, 2)) * &chi) * &sigma;
        assert_eq!(&a / &b, reg.nu_int(1));
    }

    #[test]
    fn case_one_similitude_square() {
        let reg = Registry::new();
        let c1 = reg.generic("chi1").unwrap();
        let c2 = reg.generic("chi2").unwrap();
        let s = reg.generic("sigma").unwrap();
        let diag = [&(&c1 * &c2) * &s, &c1 * &s, &c2 * &s, s.clone()];
        let prod = diag.iter().fold(reg.trivial(), |acc, c| &acc * c);
        let sim = &(&c1 * &c2) * &s.pow(2);
        assert_eq!(prod, sim.pow(2));
    }

    #[test]
    fn nu_power_detection() {
        let reg = Registry::new();
        assert_eq!(reg.nu_int(-1).is_nu_power(), Some(rat(-1)));
        let xi = reg.torsion("xi", 2).unwrap();
        assert_eq!((&xi * &reg.nu_int(-1)).is_nu_power(), None);
        assert_eq!(reg.generic("chi").unwrap().is_nu_power(), None);
    }

    #[test]
    fn substitution_examples() {
        let reg = Registry::new();
        let chi = reg.generic("chi").unwrap();
        let sym = reg.lookup("chi").unwrap();
        let s = Substitution::single(sym, reg.nu_int(1));
        let a = &chi * &reg.nu_int(-1);
        assert!(a.substitute(&s).unwrap().is_trivial());
        let b = &chi.inv() * &reg.nu_int(-1);
        assert_eq!(b.substitute(&s).unwrap(), reg.nu_int(-2));
        assert_eq!(b.substitute(&Substitution::new()).unwrap(), b);
    }

    #[test]
    fn substitution_errors() {
        let reg = Registry::new();
        let chi = reg.generic("chi").unwrap();
        let psi = reg.generic("psi").unwrap();
        let xi = reg.torsion("xi", 2).unwrap();
        let mut cyc = Substitution::new();
        cyc.insert(reg.lookup("chi").unwrap(), psi.clone());
        cyc.insert(reg.lookup("psi").unwrap(), chi.clone());
        assert!(matches!(
            chi.substitute(&cyc),
            Err(CharError::CyclicAssignment(_))
        ));
        let bad = Substitution::single(reg.lookup("xi").unwrap(), reg.nu_int(1));
        assert!(matches!(
            xi.substitute(&bad),
            Err(CharError::IncompatibleOrder { .. })
        ));
    }

    #[test]
    fn registries_do_not_mix() {
        let a = Registry::new();
        let b = Registry::new();
        let chi = a.generic("chi").unwrap();
        let chi_b = b.generic("chi").unwrap();
        assert_eq!(chi.try_mul(&chi_b), Err(CharError::RegistryMismatch));
        assert_ne!(chi, chi_b);
        assert_eq!(
            group_op(&chi, &chi_b, GroupOp::Multiply),
            Err(CharError::RegistryMismatch)
        );
    }

    #[test]
    fn redeclaration_rules() {
        let reg = Registry::new();
        reg.declare("xi", Some(2)).unwrap();
        assert_eq!(reg.declare("xi", None).unwrap().order(), Some(2));
        assert!(reg.declare("xi", Some(3)).is_err());
        reg.declare("chi", None).unwrap();
        assert!(reg.declare("chi", Some(2)).is_err());
        assert!(reg.declare("nu", None).is_err());
        assert!(reg.declare("1x", None).is_err());
        assert!(reg.declare("z", Some(1)).is_err());
    }

    #[test]
    fn supercuspidal_twist() {
        let reg = Registry::new();
        let omega = reg.generic("omega_pi").unwrap();
        let xi = reg.declare("xi", Some(2)).unwrap();
        let pi = SupercuspidalGL2::new("pi", omega.clone(), [xi.clone()]).unwrap();
        let tau = reg.generic("tau").unwrap();
        let tp = pi.twisted(&tau).unwrap();
        assert_eq!(tp.central_character(), &(&omega * &tau.pow(2)));
        assert_eq!(tp.name(), "pi");
        assert!(tp.is_self_twist(&reg.generator(&xi)));
        let chi = reg.declare("chi", None).unwrap();
        assert!(SupercuspidalGL2::new("pi", omega, [chi]).is_err());
    }
}
