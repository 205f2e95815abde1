use std::fmt;

use super::{CharError, Character, Substitution};

/// A single formal constraint on characters, labelled the way it is printed
/// in the catalogue (e.g. `χ²≠ν^{±1}`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Condition {
    Equals {
        label: String,
        value: Character,
        expected: Character,
    },
    Avoids {
        label: String,
        value: Character,
        excluded: Vec<Character>,
    },
    OneOf {
        label: String,
        value: Character,
        allowed: Vec<Character>,
    },
}

impl Condition {
    pub fn equals(label: &str, value: Character, expected: Character) -> Self {
        Condition::Equals {
            label: label.to_string(),
            value,
            expected,
        }
    }

    pub fn avoids(label: &str, value: Character, excluded: Vec<Character>) -> Self {
        Condition::Avoids {
            label: label.to_string(),
            value,
            excluded,
        }
    }

    pub fn one_of(label: &str, value: Character, allowed: Vec<Character>) -> Self {
        Condition::OneOf {
            label: label.to_string(),
            value,
            allowed,
        }
    }

    pub fn label(&self) -> &str {
        match self {
            Condition::Equals { label, .. }
            | Condition::Avoids { label, .. }
            | Condition::OneOf { label, .. } => label,
        }
    }

    pub fn holds(&self) -> bool {
        match self {
            Condition::Equals {
                value, expected, ..
            } => value == expected,
            Condition::Avoids {
                value, excluded, ..
            } => !excluded.contains(value),
            Condition::OneOf { value, allowed, .. } => allowed.contains(value),
        }
    }

    pub fn substitute(&self, s: &Substitution) -> Result<Condition, CharError> {
        let all = |v: &[Character]| -> Result<Vec<Character>, CharError> {
            v.iter().map(|c| c.substitute(s)).collect()
        };
        Ok(match self {
            Condition::Equals {
                label,
                value,
                expected,
            } => Condition::Equals {
                label: label.clone(),
                value: value.substitute(s)?,
                expected: expected.substitute(s)?,
            },
            Condition::Avoids {
                label,
                value,
                excluded,
            } => Condition::Avoids {
                label: label.clone(),
                value: value.substitute(s)?,
                excluded: all(excluded)?,
            },
            Condition::OneOf {
                label,
                value,
                allowed,
            } => Condition::OneOf {
                label: label.clone(),
                value: value.substitute(s)?,
                allowed: all(allowed)?,
            },
        })
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ConditionSet(Vec<Condition>);

impl ConditionSet {
    pub fn new(conditions: Vec<Condition>) -> Self {
        ConditionSet(conditions)
    }

    pub fn conditions(&self) -> &[Condition] {
        &self.0
    }

    pub fn push(&mut self, c: Condition) {
        self.0.push(c);
    }

    pub fn violations(&self) -> Vec<&Condition> {
        self.0.iter().filter(|c| !c.holds()).collect()
    }

    /// Labels of the violated conditions, each listed once.
    pub fn violated_labels(&self) -> Vec<String> {
        let mut out: Vec<String> = Vec::new();
        for c in self.violations() {
            if !out.iter().any(|l| l == c.label()) {
                out.push(c.label().to_string());
            }
        }
        out
    }

    pub fn all_hold(&self) -> bool {
        self.0.iter().all(Condition::holds)
    }

    pub fn substitute(&self, s: &Substitution) -> Result<ConditionSet, CharError> {
        self.0
            .iter()
            .map(|c| c.substitute(s))
            .collect::<Result<_, _>>()
            .map(ConditionSet)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chars::Registry;
    use crate::qlinalg::ratio;

    #[test]
    fn avoid_condition_detects_degeneracy() {
        let reg = Registry::new();
        let chi = reg.generic("chi").unwrap();
        let label = "χ²≠ν^{±1}";
        let cond = |c: &Character| {
            Condition::avoids(label, c.pow(2), vec![reg.nu_int(1), reg.nu_int(-1)])
        };
        assert!(cond(&chi).holds());
        assert!(!cond(&reg.nu(ratio(1, 2))).holds());
        let set = ConditionSet::new(vec![cond(&reg.nu(ratio(1, 2)))]);
        assert_eq!(set.violated_labels(), vec![label.to_string()]);
    }

    #[test]
    fn substitution_can_break_a_condition() {
        let reg = Registry::new();
        let chi = reg.generic("chi").unwrap();
        let set = ConditionSet::new(vec![Condition::avoids(
            "χ∉{1,ν^{±2}}",
            chi,
            vec![reg.trivial(), reg.nu_int(2), reg.nu_int(-2)],
        )]);
        assert!(set.all_hold());
        let s = Substitution::single(reg.lookup("chi").unwrap(), reg.nu_int(2));
        assert!(!set.substitute(&s).unwrap().all_hold());
        let s = Substitution::single(reg.lookup("chi").unwrap(), reg.nu_int(1));
        assert!(set.substitute(&s).unwrap().all_hold());
    }
}
