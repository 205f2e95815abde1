//! Formal L-functions: finite products of Euler atoms `L(s,χ)` and
//! `L(s,π,Ad⊗χ)`, and their pole orders at `s = 1`.

mod text;

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::Signed;

use crate::chars::{CharError, Character, ConditionSet, Substitution, SupercuspidalGL2, Symbol};
use crate::qlinalg::{rat, Rational};

pub use text::{parse_latex, parse_plain, render, render_json, Format, LfunParseError};

#[derive(Debug, Clone)]
pub enum Atom {
    /// `L(s,χ)`.
    Char(Character),
    /// `L(s,π,Ad_{GL(2)}⊗twist)`.
    AdGl2 {
        pi: SupercuspidalGL2,
        twist: Character,
    },
}

type AtomKey<'a> = (usize, Vec<(&'a str, u64, bool)>, u8, (Rational, bool), &'a str);

impl Atom {
    pub fn char(c: Character) -> Self {
        Atom::Char(c)
    }

    pub fn ad(pi: &SupercuspidalGL2, twist: Character) -> Self {
        Atom::AdGl2 {
            pi: pi.clone(),
            twist,
        }
    }

    /// Degree of the Euler factor: 1 for characters, 3 for the adjoint.
    pub fn degree(&self) -> usize {
        match self {
            Atom::Char(_) => 1,
            Atom::AdGl2 { .. } => 3,
        }
    }

    /// The character carried by the atom (the twist for adjoint atoms).
    pub fn character(&self) -> &Character {
        match self {
            Atom::Char(c) => c,
            Atom::AdGl2 { twist, .. } => twist,
        }
    }

    pub fn pole_order(&self) -> u32 {
        match self {
            Atom::Char(c) => char_atom_pole(c),
            Atom::AdGl2 { pi, twist } => ad_atom_pole(pi, twist),
        }
    }

    pub fn substitute(&self, s: &Substitution) -> Result<Atom, CharError> {
        Ok(match self {
            Atom::Char(c) => Atom::Char(c.substitute(s)?),
            Atom::AdGl2 { pi, twist } => Atom::AdGl2 {
                pi: pi.substitute(s)?,
                twist: twist.substitute(s)?,
            },
        })
    }

    fn key(&self) -> AtomKey<'_> {
        let c = self.character();
        let finite = c
            .finite_part()
            .iter()
            .map(|(s, &e)| (s.name(), e.unsigned_abs(), e < 0))
            .collect();
        let nu = c.nu_exponent();
        let (kind, name) = match self {
            Atom::Char(_) => (0, ""),
            Atom::AdGl2 { pi, .. } => (1, pi.name()),
        };
        (
            c.finite_part().len(),
            finite,
            kind,
            (nu.abs(), nu.is_negative()),
            name,
        )
    }
}

// Adjoint atoms compare the representation by name: `Ad(τπ) = Ad(π)`.
impl PartialEq for Atom {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Atom {}

impl PartialOrd for Atom {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Atom {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key()
            .cmp(&other.key())
            .then_with(|| self.character().cmp(other.character()))
    }
}

/// 1 iff `χ = ν⁻¹`.
pub fn char_atom_pole(chi: &Character) -> u32 {
    u32::from(chi.is_nu_power() == Some(rat(-1)))
}

/// 1 iff `twist = ν⁻¹ξ` for a self-twist `ξ` of `π`.
pub fn ad_atom_pole(pi: &SupercuspidalGL2, twist: &Character) -> u32 {
    u32::from(pi.is_self_twist(&twist.times_nu(&rat(1))))
}

/// A multiset of atoms; the empty multiset is the constant function 1.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LFunction {
    atoms: BTreeMap<Atom, usize>,
}

impl LFunction {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn from_atoms(atoms: impl IntoIterator<Item = Atom>) -> Self {
        let mut l = Self::one();
        for a in atoms {
            l.push(a, 1);
        }
        l
    }

    pub fn push(&mut self, atom: Atom, multiplicity: usize) {
        if multiplicity > 0 {
            *self.atoms.entry(atom).or_insert(0) += multiplicity;
        }
    }

    /// Atoms in canonical order with their multiplicities.
    pub fn iter(&self) -> impl Iterator<Item = (&Atom, usize)> {
        self.atoms.iter().map(|(a, &m)| (a, m))
    }

    /// Atoms in canonical order, repeated by multiplicity.
    pub fn expanded(&self) -> Vec<&Atom> {
        self.iter()
            .flat_map(|(a, m)| std::iter::repeat_n(a, m))
            .collect()
    }

    pub fn is_one(&self) -> bool {
        self.atoms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.atoms.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    pub fn multiplicity(&self, atom: &Atom) -> usize {
        self.atoms.get(atom).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> usize {
        self.iter().map(|(a, m)| a.degree() * m).sum()
    }

    /// Multiset union.
    pub fn product(&self, other: &LFunction) -> LFunction {
        let mut out = self.clone();
        for (a, m) in other.iter() {
            out.push(a.clone(), m);
        }
        out
    }

    pub fn substitute(&self, s: &Substitution) -> Result<LFunction, CharError> {
        let mut out = LFunction::one();
        for (a, m) in self.iter() {
            out.push(a.substitute(s)?, m);
        }
        Ok(out)
    }

    pub fn pole_order_at_one(&self) -> u32 {
        self.iter()
            .map(|(a, m)| a.pole_order() * m as u32)
            .sum()
    }
}

impl fmt::Display for LFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render(self, Format::Plain))
    }
}

pub fn pole_order_at_one(l: &LFunction) -> u32 {
    l.pole_order_at_one()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Branch {
    pub substitution: Substitution,
    pub order: u32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PoleReport {
    pub generic_order: u32,
    pub conditional_branches: Vec<Branch>,
}

impl PoleReport {
    /// All attainable orders, generic first.
    pub fn orders(&self) -> Vec<u32> {
        let mut out = vec![self.generic_order];
        for b in &self.conditional_branches {
            if !out.contains(&b.order) {
                out.push(b.order);
            }
        }
        out
    }

    /// `"0"`, or `"1 or 2"` when a branch changes the order.
    pub fn order_label(&self) -> String {
        let mut orders = self.orders();
        orders.sort_unstable();
        let parts: Vec<String> = orders.iter().map(u32::to_string).collect();
        parts.join(" or ")
    }
}

/// Solves `x^k · rest = target` for a constant `x` (no free symbols left).
fn solve_for(k: i64, rest: &Character, target: &Character) -> Option<Character> {
    let rhs = target.try_div(rest).ok()?;
    if rhs.free_symbols().next().is_some() {
        return None;
    }
    match k {
        1 => Some(rhs),
        -1 => Some(rhs.inv()),
        _ => {
            // Root of a torsion part is only taken when the exponents divide.
            let mut root = rhs.trivial_like().times_nu(&(rhs.nu_exponent() / rat(k)));
            for (s, &e) in rhs.finite_part() {
                let n = i64::from(s.order()?);
                let e = (0..n).map(|j| e + j * n).find(|v| v % k == 0)?;
                root = root.times_symbol(s, e / k);
            }
            Some(root)
        }
    }
}

/// Generic pole order and the single-symbol degenerations that change it.
///
/// For every atom and every listed free symbol `X` occurring in it, the
/// values of `X` turning the atom into a pole (`ν⁻¹`, or `ν⁻¹ξ` for an
/// adjoint atom) are collected. Each candidate is kept only if the
/// constraints still hold after substitution and the order differs from the
/// generic one.
pub fn pole_report(l: &LFunction, free_symbols: &[Symbol], constraints: &ConditionSet) -> PoleReport {
    let generic_order = l.pole_order_at_one();
    let mut candidates: BTreeSet<Substitution> = BTreeSet::new();
    for (atom, _) in l.iter() {
        let c = atom.character();
        let targets: Vec<Character> = match atom {
            Atom::Char(_) => vec![c.trivial_like().times_nu(&rat(-1))],
            Atom::AdGl2 { pi, .. } => pi
                .self_twists()
                .iter()
                .map(|s| c.trivial_like().times_nu(&rat(-1)).times_symbol(s, 1))
                .collect(),
        };
        for x in free_symbols {
            let k = c.exponent_of(x);
            if k == 0 {
                continue;
            }
            let rest = c.without(x);
            for t in &targets {
                if let Some(v) = solve_for(k, &rest, t) {
                    candidates.insert(Substitution::single(x.clone(), v));
                }
            }
        }
    }
    let mut conditional_branches = Vec::new();
    for s in candidates {
        let admissible = constraints
            .substitute(&s)
            .is_ok_and(|cs| cs.all_hold());
        if !admissible {
            continue;
        }
        let Ok(ls) = l.substitute(&s) else { continue };
        let order = ls.pole_order_at_one();
        if order != generic_order {
            conditional_branches.push(Branch {
                substitution: s,
                order,
            });
        }
    }
    PoleReport {
        generic_order,
        conditional_branches,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chars::{parse_character, Condition, Registry};

    fn c(reg: &Registry, s: &str) -> Character {
        parse_character(s, reg).unwrap()
    }

    #[test]
    fn character_pole_rule() {
        let reg = Registry::new();
        assert_eq!(char_atom_pole(&reg.nu_int(-1)), 1);
        assert_eq!(char_atom_pole(&reg.trivial()), 0);
        assert_eq!(char_atom_pole(&c(&reg, "xi[2]*nu^-1")), 0);
    }

    #[test]
    fn adjoint_pole_rule() {
        let reg = Registry::new();
        let xi = reg.declare("xi", Some(2)).unwrap();
        let omega = reg.generic("omega_pi").unwrap();
        let pi = SupercuspidalGL2::new("pi", omega.clone(), [xi]).unwrap();
        let plain = SupercuspidalGL2::new("pi0", omega, []).unwrap();
        let t = c(&reg, "xi*nu^-1");
        assert_eq!(ad_atom_pole(&pi, &t), 1);
        assert_eq!(ad_atom_pole(&pi, &reg.trivial()), 0);
        assert_eq!(ad_atom_pole(&plain, &t), 0);
        assert_eq!(ad_atom_pole(&pi, &c(&reg, "xi*nu")), 0);
    }

    #[test]
    fn pole_orders() {
        let reg = Registry::new();
        let iva = LFunction::from_atoms([Atom::char(reg.nu_int(1)), Atom::char(reg.nu_int(3))]);
        assert_eq!(pole_order_at_one(&iva), 0);
        let mut vid = LFunction::one();
        vid.push(Atom::char(reg.trivial()), 4);
        vid.push(Atom::char(reg.nu_int(1)), 3);
        vid.push(Atom::char(reg.nu_int(-1)), 3);
        assert_eq!(pole_order_at_one(&vid), 3);
        assert_eq!(pole_order_at_one(&LFunction::one()), 0);
        assert_eq!(vid.product(&iva).pole_order_at_one(), 3);
    }

    fn iiib(reg: &Registry) -> (LFunction, Symbol, ConditionSet) {
        let chi = reg.generic("chi").unwrap();
        let sym = reg.lookup("chi").unwrap();
        let mut l = LFunction::one();
        l.push(Atom::char(reg.trivial()), 2);
        for s in ["chi", "chi^-1", "nu", "nu^-1", "chi*nu", "chi*nu^-1", "chi^-1*nu", "chi^-1*nu^-1"] {
            l.push(Atom::char(c(reg, s)), 1);
        }
        let cs = ConditionSet::new(vec![Condition::avoids(
            "χ∉{1,ν^{±2}}",
            chi,
            vec![reg.trivial(), reg.nu_int(2), reg.nu_int(-2)],
        )]);
        (l, sym, cs)
    }

    #[test]
    fn substituting_chi_by_nu_doubles_the_pole() {
        let reg = Registry::new();
        let (l, sym, _) = iiib(&reg);
        let s = Substitution::single(sym, reg.nu_int(1));
        let ls = l.substitute(&s).unwrap();
        assert_eq!(ls.multiplicity(&Atom::char(reg.nu_int(-1))), 2);
    }

    #[test]
    fn iiib_report() {
        let reg = Registry::new();
        let (l, sym, cs) = iiib(&reg);
        let r = pole_report(&l, std::slice::from_ref(&sym), &cs);
        assert_eq!(r.generic_order, 1);
        let got: Vec<(String, u32)> = r
            .conditional_branches
            .iter()
            .map(|b| (b.substitution.to_string(), b.order))
            .collect();
        assert_eq!(
            got,
            vec![("chi=nu".to_string(), 2), ("chi=nu^-1".to_string(), 2)]
        );
        assert_eq!(r.order_label(), "1 or 2");
        // Without constraints chi = 1 and chi = nu^{±2} are also degenerate.
        let r = pole_report(&l, &[sym], &ConditionSet::default());
        assert_eq!(r.conditional_branches.len(), 5);
    }

    #[test]
    fn square_roots_in_report() {
        let reg = Registry::new();
        let l = LFunction::from_atoms([Atom::char(c(&reg, "chi^2"))]);
        let sym = reg.lookup("chi").unwrap();
        let r = pole_report(&l, &[sym], &ConditionSet::default());
        assert_eq!(r.conditional_branches.len(), 1);
        assert_eq!(r.conditional_branches[0].substitution.to_string(), "chi=nu^(-1/2)");
    }
}
