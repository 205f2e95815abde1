//! The textual representation spec read by the CLI.
//!
//! ```text
//! spec     := token (WS token)*
//! token    := key "=" value
//! key      := case | chi | chi1 | chi2 | sigma | xi | pi | omega | selftwists | S
//! case     := I | IIa | IIb | ... | XIb
//! chi..xi  := character expression (see `chars`)
//! pi       := identifier naming the supercuspidal
//! omega    := character expression, central character of pi (default omega_<pi>)
//! selftwists := identifier ("," identifier)*   quadratic symbols with ξπ = π
//! S        := rational "," rational "," rational   the form [[a,b],[b,d]] (IXa only)
//! ```
//!
//! Torsion declarations such as `xi[2]` apply to the whole spec, so
//! `omega=xi xi=xi[2]` is accepted.

use std::fmt;

use crate::chars::{is_valid_symbol_name, CharExpr, Character, ExprError, Registry, SupercuspidalGL2};
use crate::qlinalg::Rational;
use crate::reps::{CaseTag, Inputs, RepSpec, RepsError};
use crate::sp4::SymmetricForm;

const KEYS: &[&str] = &[
    "case",
    "chi",
    "chi1",
    "chi2",
    "sigma",
    "xi",
    "pi",
    "omega",
    "selftwists",
    "S",
];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SyntaxError {
    pub position: usize,
    pub message: String,
    pub expected: Vec<String>,
}

impl SyntaxError {
    fn new(position: usize, message: impl Into<String>, expected: &[&str]) -> Self {
        SyntaxError {
            position,
            message: message.into(),
            expected: expected.iter().map(|s| s.to_string()).collect(),
        }
    }
}

impl From<ExprError> for SyntaxError {
    fn from(e: ExprError) -> Self {
        SyntaxError {
            position: e.position,
            message: e.message,
            expected: e.expected,
        }
    }
}

impl fmt::Display for SyntaxError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at byte {}: {}", self.position, self.message)?;
        if !self.expected.is_empty() {
            write!(f, " (expected {})", self.expected.join(", "))?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SpecError {
    #[error("syntax error {0}")]
    Syntax(SyntaxError),
    #[error(transparent)]
    Reps(#[from] RepsError),
}

impl From<SyntaxError> for SpecError {
    fn from(e: SyntaxError) -> Self {
        SpecError::Syntax(e)
    }
}

struct Token<'a> {
    key: &'a str,
    value: &'a str,
    key_pos: usize,
    value_pos: usize,
}

fn tokenize(text: &str) -> Result<Vec<Token<'_>>, SyntaxError> {
    let mut out: Vec<Token<'_>> = Vec::new();
    let mut pos = 0;
    for word in text.split_whitespace() {
        let start = pos + text[pos..].find(word).expect("word comes from text");
        pos = start + word.len();
        let Some(eq) = word.find('=') else {
            return Err(SyntaxError::new(start + word.len(), "missing `=`", &["`=`"]));
        };
        let key = &word[..eq];
        if !KEYS.contains(&key) {
            let expected: Vec<String> = KEYS.iter().map(|k| format!("`{k}`")).collect();
            let refs: Vec<&str> = expected.iter().map(String::as_str).collect();
            return Err(SyntaxError::new(start, format!("unknown key `{key}`"), &refs));
        }
        if out.iter().any(|t| t.key == key) {
            return Err(SyntaxError::new(start, format!("duplicate key `{key}`"), &[]));
        }
        let value = &word[eq + 1..];
        if value.is_empty() {
            return Err(SyntaxError::new(start + eq + 1, "empty value", &["value"]));
        }
        out.push(Token {
            key,
            value,
            key_pos: start,
            value_pos: start + eq + 1,
        });
    }
    Ok(out)
}

fn parse_rational(text: &str, position: usize) -> Result<Rational, SyntaxError> {
    text.parse::<Rational>()
        .map_err(|_| SyntaxError::new(position, format!("bad rational `{text}`"), &["rational such as `-3/2`"]))
}

fn parse_form(text: &str, position: usize) -> Result<SymmetricForm, SyntaxError> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != 3 {
        return Err(SyntaxError::new(position, "S takes three entries", &["`a,b,d`"]));
    }
    let mut entries = Vec::new();
    let mut offset = position;
    for p in parts {
        entries.push(parse_rational(p, offset)?);
        offset += p.len() + 1;
    }
    let d = entries.pop().expect("three entries");
    let b = entries.pop().expect("three entries");
    let a = entries.pop().expect("three entries");
    SymmetricForm::from_entries(a, b, d).map_err(|e| SyntaxError::new(position, e.to_string(), &[]))
}

/// Parses `text` with symbols declared in `reg` and checks the row
/// conditions.
pub fn parse_spec(text: &str, reg: &Registry) -> Result<RepSpec, SpecError> {
    let spec = parse_spec_unchecked(text, reg)?;
    let violations = spec.validate();
    if !violations.is_empty() {
        return Err(RepsError::Invalid {
            case: spec.case(),
            violations,
        }
        .into());
    }
    Ok(spec)
}

/// Like [`parse_spec`] but without checking the row conditions.
pub fn parse_spec_unchecked(text: &str, reg: &Registry) -> Result<RepSpec, SpecError> {
    let tokens = tokenize(text)?;
    let find = |k: &str| tokens.iter().find(|t| t.key == k);

    let Some(case_tok) = find("case") else {
        return Err(SyntaxError::new(0, "missing case", &["`case=<tag>`"]).into());
    };
    let case: CaseTag = case_tok.value.parse().map_err(|_| {
        SyntaxError::new(case_tok.value_pos, format!("unknown case `{}`", case_tok.value), &["case tag such as `IIa`"])
    })?;

    let char_keys = ["chi", "chi1", "chi2", "sigma", "xi", "omega"];
    let mut exprs = Vec::new();
    for t in tokens.iter().filter(|t| char_keys.contains(&t.key)) {
        let e = CharExpr::parse(t.value).map_err(|e| SyntaxError::from(e.shifted(t.value_pos)))?;
        exprs.push((t, e));
    }
    for (t, e) in &exprs {
        e.declare_symbols(reg)
            .map_err(|e| SyntaxError::from(e.shifted(t.value_pos)))?;
    }
    let mut self_twists = Vec::new();
    if let Some(t) = find("selftwists") {
        let mut offset = t.value_pos;
        for name in t.value.split(',') {
            if !is_valid_symbol_name(name) {
                return Err(SyntaxError::new(offset, format!("bad symbol `{name}`"), &["identifier"]).into());
            }
            let s = reg
                .declare(name, Some(2))
                .map_err(|e| SyntaxError::new(offset, e.to_string(), &[]))?;
            self_twists.push(s);
            offset += name.len() + 1;
        }
    }
    let value = |key: &str| -> Result<Option<Character>, SyntaxError> {
        match exprs.iter().find(|(t, _)| t.key == key) {
            Some((t, e)) => e
                .evaluate(reg)
                .map(Some)
                .map_err(|e| SyntaxError::from(e.shifted(t.value_pos))),
            None => Ok(None),
        }
    };

    let mut inputs = Inputs {
        chi1: value("chi1")?,
        chi2: value("chi2")?,
        chi: value("chi")?,
        sigma: value("sigma")?,
        xi: value("xi")?,
        pi: None,
    };
    let omega = value("omega")?;
    match find("pi") {
        Some(t) => {
            if !is_valid_symbol_name(t.value) {
                return Err(SyntaxError::new(t.value_pos, format!("bad name `{}`", t.value), &["identifier"]).into());
            }
            let omega = match omega {
                Some(o) => o,
                None => reg
                    .generic(&format!("omega_{}", t.value))
                    .map_err(|e| SyntaxError::new(t.value_pos, e.to_string(), &[]))?,
            };
            inputs.pi = Some(
                SupercuspidalGL2::new(t.value, omega, self_twists)
                    .map_err(|e| SyntaxError::new(t.value_pos, e.to_string(), &[]))?,
            );
        }
        None => {
            for k in ["omega", "selftwists"] {
                if let Some(t) = find(k) {
                    return Err(SyntaxError::new(t.key_pos, format!("`{k}` needs `pi`"), &["`pi=<name>`"]).into());
                }
            }
        }
    }

    let spec = RepSpec::new(case, inputs)?;
    match find("S") {
        Some(t) => Ok(spec.with_siegel_form(parse_form(t.value, t.value_pos)?)?),
        None => Ok(spec),
    }
}

/// The canonical text of a spec; [`parse_spec`] reads it back unchanged.
pub fn print_spec(spec: &RepSpec) -> String {
    let mut parts = vec![format!("case={}", spec.case())];
    let i = spec.inputs();
    for (key, c) in [
        ("chi1", &i.chi1),
        ("chi2", &i.chi2),
        ("chi", &i.chi),
        ("sigma", &i.sigma),
        ("xi", &i.xi),
    ] {
        if let Some(c) = c {
            parts.push(format!("{key}={}", c.to_declared_string()));
        }
    }
    if let Some(pi) = &i.pi {
        parts.push(format!("pi={}", pi.name()));
        parts.push(format!("omega={}", pi.central_character().to_declared_string()));
        if !pi.self_twists().is_empty() {
            let names: Vec<&str> = pi.self_twists().iter().map(|s| s.name()).collect();
            parts.push(format!("selftwists={}", names.join(",")));
        }
    }
    if let Some(s) = spec.siegel_form() {
        let m = s.matrix();
        parts.push(format!("S={},{},{}", m[(0, 0)], m[(0, 1)], m[(1, 1)]));
    }
    parts.join(" ")
}
