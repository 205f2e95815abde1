//! Text forms of characters.
//!
//! Plain grammar (whitespace is ignored):
//!
//! ```text
//! expr    := factor ('*' factor)*
//! factor  := primary power*
//! primary := '1' | 'nu' | ident ('[' order ']')? | '(' expr ')'
//! power   := '^' '-'? int | '^' '(' '-'? int ('/' int)? ')'
//! ```
//!
//! `ident[n]` declares a symbol of order `n`; any other identifier not yet in
//! the registry is declared as a free symbol. Non-integer powers are only
//! allowed on pure powers of `nu`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{CharError, Character, Registry};
use crate::qlinalg::Rational;

const GREEK: [&str; 23] = [
    "alpha", "beta", "gamma", "delta", "epsilon", "varepsilon", "zeta", "eta", "theta", "iota",
    "kappa", "lambda", "mu", "xi", "pi", "rho", "sigma", "tau", "upsilon", "phi", "varphi",
    "chi", "psi",
];

fn is_greek(s: &str) -> bool {
    GREEK.contains(&s) || s == "omega"
}

pub fn is_valid_symbol_name(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
        && name != "nu"
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExprError {
    /// Byte offset into the parsed text.
    pub position: usize,
    pub message: String,
    pub expected: Vec<String>,
}

impl ExprError {
    fn new(position: usize, message: impl Into<String>, expected: &[&str]) -> Self {
        ExprError {
            position,
            message: message.into(),
            expected: expected.iter().map(|s| s.to_string()).collect(),
        }
    }

    /// The same error with its position moved by `offset` bytes.
    pub fn shifted(mut self, offset: usize) -> Self {
        self.position += offset;
        self
    }
}

impl fmt::Display for ExprError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at byte {}: {}", self.position, self.message)?;
        if !self.expected.is_empty() {
            write!(f, " (expected {})", self.expected.join(", "))?;
        }
        Ok(())
    }
}

impl std::error::Error for ExprError {}

/// Syntax tree of a plain character expression.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CharExpr {
    One,
    Nu,
    Symbol {
        name: String,
        order: Option<u32>,
        position: usize,
    },
    Product(Vec<CharExpr>),
    Power {
        base: Box<CharExpr>,
        exponent: Rational,
        position: usize,
    },
}

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        Cursor { text, pos: 0 }
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.text[self.pos..].chars().next() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.text[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn eat_str(&mut self, s: &str) -> bool {
        self.skip_ws();
        if self.text[self.pos..].starts_with(s) {
            self.pos += s.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char, expected: &[&str]) -> Result<(), ExprError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.unexpected(expected))
        }
    }

    fn unexpected(&mut self, expected: &[&str]) -> ExprError {
        let found = match self.peek() {
            Some(c) => format!("unexpected `{c}`"),
            None => "unexpected end of input".to_string(),
        };
        ExprError::new(self.pos, found, expected)
    }

    fn int(&mut self) -> Option<(BigInt, usize)> {
        self.skip_ws();
        let start = self.pos;
        let len = self.text[start..]
            .bytes()
            .take_while(u8::is_ascii_digit)
            .count();
        if len == 0 {
            return None;
        }
        self.pos += len;
        Some((self.text[start..start + len].parse().expect("digits"), start))
    }

    fn ident(&mut self) -> Option<(&'a str, usize)> {
        self.skip_ws();
        let start = self.pos;
        let rest = &self.text[start..];
        if !rest.starts_with(|c: char| c.is_ascii_alphabetic()) {
            return None;
        }
        let len = rest
            .bytes()
            .take_while(|b| b.is_ascii_alphanumeric() || *b == b'_')
            .count();
        self.pos += len;
        Some((&rest[..len], start))
    }

    /// A LaTeX command name: ASCII letters only.
    fn command(&mut self) -> Option<&'a str> {
        let start = self.pos;
        let len = self.text[start..]
            .bytes()
            .take_while(u8::is_ascii_alphabetic)
            .count();
        self.pos += len;
        (len > 0).then(|| &self.text[start..start + len])
    }

    fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }
}

const PRIMARY: &[&str] = &["`1`", "`nu`", "identifier", "`(`"];

impl CharExpr {
    pub fn parse(text: &str) -> Result<CharExpr, ExprError> {
        let mut cur = Cursor::new(text);
        let e = Self::expr(&mut cur)?;
        if !cur.at_end() {
            return Err(cur.unexpected(&["`*`", "`^`", "end of expression"]));
        }
        Ok(e)
    }

    fn expr(cur: &mut Cursor<'_>) -> Result<CharExpr, ExprError> {
        let mut factors = vec![Self::factor(cur)?];
        while cur.eat('*') {
            factors.push(Self::factor(cur)?);
        }
        Ok(if factors.len() == 1 {
            factors.pop().expect("one factor")
        } else {
            CharExpr::Product(factors)
        })
    }

    fn factor(cur: &mut Cursor<'_>) -> Result<CharExpr, ExprError> {
        let mut base = Self::primary(cur)?;
        loop {
            cur.skip_ws();
            let position = cur.pos;
            if !cur.eat('^') {
                return Ok(base);
            }
            let exponent = Self::exponent(cur)?;
            base = CharExpr::Power {
                base: Box::new(base),
                exponent,
                position,
            };
        }
    }

    fn exponent(cur: &mut Cursor<'_>) -> Result<Rational, ExprError> {
        let paren = cur.eat('(');
        let neg = cur.eat('-');
        let Some((n, _)) = cur.int() else {
            let exp: &[&str] = if paren || neg {
                &["integer"]
            } else {
                &["integer", "`-`", "`(`"]
            };
            return Err(cur.unexpected(exp));
        };
        let mut value = Rational::from_integer(if neg { -n } else { n });
        if paren {
            if cur.eat('/') {
                let Some((d, dpos)) = cur.int() else {
                    return Err(cur.unexpected(&["integer"]));
                };
                if d.is_zero() {
                    return Err(ExprError::new(dpos, "zero denominator", &[]));
                }
                value /= Rational::from_integer(d);
            }
            cur.expect(')', &["`/`", "`)`"])?;
        }
        Ok(value)
    }

    fn primary(cur: &mut Cursor<'_>) -> Result<CharExpr, ExprError> {
        cur.skip_ws();
        let start = cur.pos;
        if cur.eat('(') {
            let e = Self::expr(cur)?;
            cur.expect(')', &["`*`", "`^`", "`)`"])?;
            return Ok(e);
        }
        if let Some((n, _)) = cur.int() {
            if n.is_one() {
                return Ok(CharExpr::One);
            }
            return Err(ExprError::new(start, "only the literal `1` is a character", PRIMARY));
        }
        let Some((name, position)) = cur.ident() else {
            return Err(cur.unexpected(PRIMARY));
        };
        if name == "nu" {
            return Ok(CharExpr::Nu);
        }
        let mut order = None;
        if cur.eat('[') {
            let Some((n, npos)) = cur.int() else {
                return Err(cur.unexpected(&["order"]));
            };
            match n.to_u32() {
                Some(n) if n >= 2 => order = Some(n),
                _ => return Err(ExprError::new(npos, "order must be an integer >= 2", &[])),
            }
            cur.expect(']', &["`]`"])?;
        }
        Ok(CharExpr::Symbol {
            name: name.to_string(),
            order,
            position,
        })
    }

    fn declarations<'a>(&'a self, out: &mut Vec<(&'a str, u32, usize)>) {
        match self {
            CharExpr::Symbol {
                name,
                order: Some(n),
                position,
            } => out.push((name, *n, *position)),
            CharExpr::Product(fs) => fs.iter().for_each(|f| f.declarations(out)),
            CharExpr::Power { base, .. } => base.declarations(out),
            _ => {}
        }
    }

    /// Declares every `ident[n]` occurring in the expression.
    pub fn declare_symbols(&self, reg: &Registry) -> Result<(), ExprError> {
        let mut decls = Vec::new();
        self.declarations(&mut decls);
        for (name, n, pos) in decls {
            reg.declare(name, Some(n)).map_err(|e| char_error(e, pos))?;
        }
        Ok(())
    }

    /// Declares every `ident[n]` first, then evaluates.
    pub fn evaluate(&self, reg: &Registry) -> Result<Character, ExprError> {
        self.declare_symbols(reg)?;
        self.eval(reg)
    }

    fn eval(&self, reg: &Registry) -> Result<Character, ExprError> {
        match self {
            CharExpr::One => Ok(reg.trivial()),
            CharExpr::Nu => Ok(reg.nu_int(1)),
            CharExpr::Symbol { name, position, .. } => reg
                .generic(name)
                .map_err(|e| char_error(e, *position)),
            CharExpr::Product(fs) => fs.iter().try_fold(reg.trivial(), |acc, f| {
                Ok(&acc * &f.eval(reg)?)
            }),
            CharExpr::Power {
                base,
                exponent,
                position,
            } => {
                let b = base.eval(reg)?;
                if exponent.is_integer() {
                    let k = exponent.to_integer().to_i64().ok_or_else(|| {
                        ExprError::new(*position, "exponent out of range", &[])
                    })?;
                    Ok(b.pow(k))
                } else if let Some(r) = b.is_nu_power() {
                    Ok(reg.nu(r * exponent))
                } else {
                    Err(ExprError::new(
                        *position,
                        "non-integer power of a character that is not a power of nu",
                        &["integer exponent"],
                    ))
                }
            }
        }
    }
}

fn char_error(e: CharError, position: usize) -> ExprError {
    ExprError::new(position, e.to_string(), &[])
}

/// Parses a plain character expression, declaring symbols in `reg`.
pub fn parse_character(text: &str, reg: &Registry) -> Result<Character, ExprError> {
    CharExpr::parse(text)?.evaluate(reg)
}

fn plain_nu(r: &Rational) -> String {
    if r.is_one() {
        "nu".to_string()
    } else if r.is_integer() {
        format!("nu^{r}")
    } else {
        format!("nu^({r})")
    }
}

fn plain_factors(c: &Character, declared: bool) -> Vec<String> {
    let mut parts: Vec<String> = c
        .finite_part()
        .iter()
        .map(|(s, &e)| {
            let name = match (declared, s.order()) {
                (true, Some(n)) => format!("{}[{n}]", s.name()),
                _ => s.name().to_string(),
            };
            if e == 1 {
                name
            } else {
                format!("{name}^{e}")
            }
        })
        .collect();
    if !c.nu_exponent().is_zero() {
        parts.push(plain_nu(c.nu_exponent()));
    }
    parts
}

impl fmt::Display for Character {
    /// Canonical plain form: symbols by name, then `nu`, joined with `*`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts = plain_factors(self, false);
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join("*"))
        }
    }
}

/// LaTeX form of a symbol name: Greek names get a backslash, a trailing
/// number or `_suffix` becomes a subscript, anything else goes in `\mathrm`.
pub fn symbol_latex(name: &str) -> String {
    if is_greek(name) {
        return format!("\\{name}");
    }
    let stem = name.trim_end_matches(|c: char| c.is_ascii_digit());
    if stem.len() < name.len() && is_greek(stem) {
        let digits = &name[stem.len()..];
        return if digits.len() == 1 {
            format!("\\{stem}_{digits}")
        } else {
            format!("\\{stem}_{{{digits}}}")
        };
    }
    if let Some((a, b)) = name.split_once('_') {
        if is_greek(a) && !b.is_empty() {
            if is_greek(b) {
                return format!("\\{a}_\\{b}");
            }
            if b.bytes().all(|c| c.is_ascii_alphanumeric())
                && !b.bytes().all(|c| c.is_ascii_digit())
            {
                return format!("\\{a}_{{{b}}}");
            }
        }
    }
    format!("\\mathrm{{{}}}", name.replace('_', "\\_"))
}

fn latex_exponent(e: &Rational) -> String {
    if e.is_one() {
        String::new()
    } else if e.is_integer() && e.is_positive() && *e < Rational::from_integer(10.into()) {
        format!("^{e}")
    } else {
        format!("^{{{e}}}")
    }
}

impl Character {
    /// Plain form with torsion symbols written as declarations (`xi[2]`), so
    /// that it parses to the same character in a fresh registry.
    pub fn to_declared_string(&self) -> String {
        let parts = plain_factors(self, true);
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }

    /// LaTeX form, e.g. `\chi_1^{-1}\nu^{1/2}`; the trivial character is `1`.
    pub fn to_latex(&self) -> String {
        let mut out = String::new();
        for (s, &e) in self.finite_part() {
            out.push_str(&symbol_latex(s.name()));
            out.push_str(&latex_exponent(&Rational::from_integer(e.into())));
        }
        if !self.nu_exponent().is_zero() {
            out.push_str("\\nu");
            out.push_str(&latex_exponent(self.nu_exponent()));
        }
        if out.is_empty() {
            out.push('1');
        }
        out
    }
}

struct LatexParser<'a, 'r> {
    cur: Cursor<'a>,
    reg: &'r Registry,
}

const LATEX_PRIMARY: &[&str] = &["`1`", "`\\nu`", "Greek letter", "`\\mathrm{`", "`{`"];

impl LatexParser<'_, '_> {
    fn skip_noise(&mut self) {
        loop {
            if !(self.cur.eat_str("\\cdot") || self.cur.eat_str("\\,")) {
                break;
            }
        }
    }

    fn sequence(&mut self, closing: Option<char>) -> Result<Character, ExprError> {
        let mut acc = self.reg.trivial();
        let mut seen = false;
        loop {
            self.skip_noise();
            match self.cur.peek() {
                None => break,
                Some(c) if Some(c) == closing => break,
                _ => {}
            }
            acc = &acc * &self.factor()?;
            seen = true;
        }
        if !seen {
            return Err(self.cur.unexpected(LATEX_PRIMARY));
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Character, ExprError> {
        let base = self.primary()?;
        self.cur.skip_ws();
        let position = self.cur.pos;
        if !self.cur.eat('^') {
            return Ok(base);
        }
        let e = self.exponent()?;
        if e.is_integer() {
            let k = e
                .to_integer()
                .to_i64()
                .ok_or_else(|| ExprError::new(position, "exponent out of range", &[]))?;
            Ok(base.pow(k))
        } else if let Some(r) = base.is_nu_power() {
            Ok(self.reg.nu(r * e))
        } else {
            Err(ExprError::new(
                position,
                "non-integer power of a character that is not a power of nu",
                &[],
            ))
        }
    }

    fn exponent(&mut self) -> Result<Rational, ExprError> {
        self.cur.skip_ws();
        if self.cur.eat('{') {
            let neg = self.cur.eat('-');
            let Some((n, _)) = self.cur.int() else {
                return Err(self.cur.unexpected(&["integer"]));
            };
            let mut value = Rational::from_integer(if neg { -n } else { n });
            if self.cur.eat('/') {
                let Some((d, dpos)) = self.cur.int() else {
                    return Err(self.cur.unexpected(&["integer"]));
                };
                if d.is_zero() {
                    return Err(ExprError::new(dpos, "zero denominator", &[]));
                }
                value /= Rational::from_integer(d);
            }
            self.cur.expect('}', &["`/`", "`}`"])?;
            return Ok(value);
        }
        let neg = self.cur.eat('-');
        // A bare exponent is a single digit, as in `\nu^3`.
        let pos = self.cur.pos;
        match self.cur.text[pos..].chars().next() {
            Some(c) if c.is_ascii_digit() => {
                self.cur.pos += 1;
                let d = Rational::from_integer(BigInt::from(c.to_digit(10).expect("digit")));
                Ok(if neg { -d } else { d })
            }
            _ => Err(self.cur.unexpected(&["digit", "`{`"])),
        }
    }

    fn primary(&mut self) -> Result<Character, ExprError> {
        self.cur.skip_ws();
        let start = self.cur.pos;
        if self.cur.eat('{') {
            let c = self.sequence(Some('}'))?;
            self.cur.expect('}', &["`}`"])?;
            return Ok(c);
        }
        if self.cur.eat('(') {
            let c = self.sequence(Some(')'))?;
            self.cur.expect(')', &["`)`"])?;
            return Ok(c);
        }
        if self.cur.eat_str("1_{F^\\times}") || self.cur.eat('1') {
            return Ok(self.reg.trivial());
        }
        if !self.cur.eat('\\') {
            return Err(self.cur.unexpected(LATEX_PRIMARY));
        }
        let Some(cmd) = self.cur.command() else {
            return Err(self.cur.unexpected(&["command name"]));
        };
        let name = match cmd {
            "nu" => return Ok(self.reg.nu_int(1)),
            "mathrm" | "rm" => {
                self.cur.expect('{', &["`{`"])?;
                let body_start = self.cur.pos;
                let Some(end) = self.cur.text[body_start..].find('}') else {
                    return Err(ExprError::new(body_start, "unterminated `\\mathrm{`", &["`}`"]));
                };
                self.cur.pos = body_start + end + 1;
                self.cur.text[body_start..body_start + end]
                    .trim()
                    .replace("\\_", "_")
            }
            g if is_greek(g) => {
                let mut name = g.to_string();
                if self.cur.eat('_') {
                    name.push_str(&self.subscript()?);
                }
                name
            }
            other => {
                return Err(ExprError::new(
                    start,
                    format!("unknown command `\\{other}`"),
                    LATEX_PRIMARY,
                ))
            }
        };
        self.reg
            .generic(&name)
            .map_err(|e| char_error(e, start))
    }

    /// Subscript text appended to a Greek stem: digits are glued on
    /// (`\chi_1` is `chi1`), anything else joins with `_`.
    fn subscript(&mut self) -> Result<String, ExprError> {
        self.cur.skip_ws();
        let pos = self.cur.pos;
        let raw = if self.cur.eat('{') {
            let body_start = self.cur.pos;
            let Some(end) = self.cur.text[body_start..].find('}') else {
                return Err(ExprError::new(body_start, "unterminated subscript", &["`}`"]));
            };
            self.cur.pos = body_start + end + 1;
            self.cur.text[body_start..body_start + end].trim().to_string()
        } else if self.cur.eat('\\') {
            match self.cur.command() {
                Some(g) if is_greek(g) => format!("\\{g}"),
                _ => return Err(self.cur.unexpected(&["Greek letter"])),
            }
        } else {
            match self.cur.text[pos..].chars().next() {
                Some(c) if c.is_ascii_alphanumeric() => {
                    self.cur.pos += 1;
                    c.to_string()
                }
                _ => return Err(self.cur.unexpected(&["subscript"])),
            }
        };
        let raw = raw.trim_start_matches('\\').to_string();
        if raw.is_empty() || !raw.bytes().all(|b| b.is_ascii_alphanumeric()) {
            return Err(ExprError::new(pos, "unsupported subscript", &[]));
        }
        Ok(if raw.bytes().all(|b| b.is_ascii_digit()) {
            raw
        } else {
            format!("_{raw}")
        })
    }
}

/// Parses the LaTeX form of a character, as printed by
/// [`Character::to_latex`] and in typeset tables (`\chi_1\chi_2^{-1}`,
/// `\nu^{-1/2}`, `1_{F^\times}`, `\omega_\pi`).
pub fn parse_latex_character(text: &str, reg: &Registry) -> Result<Character, ExprError> {
    let mut p = LatexParser {
        cur: Cursor::new(text),
        reg,
    };
    p.sequence(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qlinalg::{rat, ratio};

    fn parse(reg: &Registry, s: &str) -> Character {
        parse_character(s, reg).unwrap()
    }

    #[test]
    fn plain_canonical_forms() {
        let reg = Registry::new();
        for s in [
            "1",
            "nu",
            "nu^3",
            "nu^-1",
            "nu^(1/2)",
            "nu^(-1/2)",
            "chi",
            "chi^-1",
            "chi^2",
            "chi1*chi2^-1",
            "chi*nu^(-1/2)",
            "omega_pi^-1",
        ] {
            assert_eq!(parse(&reg, s).to_string(), s);
        }
    }

    #[test]
    fn plain_parsing_normalizes() {
        let reg = Registry::new();
        assert_eq!(parse(&reg, "nu*chi").to_string(), "chi*nu");
        assert_eq!(parse(&reg, "(chi*nu)^-1").to_string(), "chi^-1*nu^-1");
        assert_eq!(parse(&reg, "nu^(1/2)^2"), reg.nu_int(1));
        assert_eq!(parse(&reg, "xi[2]*xi"), reg.trivial());
        assert_eq!(parse(&reg, "xi^3").to_string(), "xi");
        assert_eq!(parse(&reg, "chi * chi^-1"), reg.trivial());
        assert_eq!(parse(&reg, "nu^(4/2)").is_nu_power(), Some(rat(2)));
    }

    #[test]
    fn declaration_order_does_not_matter() {
        let reg = Registry::new();
        let c = parse(&reg, "eps*eps[2]");
        assert!(c.is_trivial());
        assert_eq!(reg.lookup("eps").unwrap().order(), Some(2));
    }

    #[test]
    fn plain_errors_carry_positions() {
        let reg = Registry::new();
        let e = parse_character("chi*", &reg).unwrap_err();
        assert_eq!(e.position, 4);
        let e = parse_character("chi^(1/2)", &reg).unwrap_err();
        assert_eq!(e.position, 3);
        let e = parse_character("chi^x", &reg).unwrap_err();
        assert_eq!(e.position, 4);
        assert!(e.expected.contains(&"integer".to_string()));
        let e = parse_character("2", &reg).unwrap_err();
        assert_eq!(e.position, 0);
        let e = parse_character("xi[1]", &reg).unwrap_err();
        assert_eq!(e.position, 3);
        let e = parse_character("chi)", &reg).unwrap_err();
        assert_eq!(e.position, 3);
        reg.declare("zeta", Some(2)).unwrap();
        let e = parse_character("zeta[3]", &reg).unwrap_err();
        assert_eq!(e.position, 0);
        assert_eq!(e.clone().shifted(5).position, 5);
    }

    #[test]
    fn declared_string_round_trips_in_fresh_registry() {
        let reg = Registry::new();
        let c = parse(&reg, "xi[2]*chi^-2*nu^(3/2)");
        let s = c.to_declared_string();
        assert_eq!(s, "chi^-2*xi[2]*nu^(3/2)");
        let fresh = Registry::new();
        let d = parse(&fresh, &s);
        assert_eq!(d.to_declared_string(), s);
        assert!(d.pow(2).to_string().starts_with("chi^-4"));
    }

    #[test]
    fn latex_forms() {
        let reg = Registry::new();
        assert_eq!(parse(&reg, "chi1*chi2^-1").to_latex(), "\\chi_1\\chi_2^{-1}");
        assert_eq!(parse(&reg, "nu^(1/2)").to_latex(), "\\nu^{1/2}");
        assert_eq!(parse(&reg, "nu^3").to_latex(), "\\nu^3");
        assert_eq!(parse(&reg, "omega_pi^-1").to_latex(), "\\omega_\\pi^{-1}");
        assert_eq!(parse(&reg, "my_char").to_latex(), "\\mathrm{my\\_char}");
        assert_eq!(parse(&reg, "chi12").to_latex(), "\\chi_{12}");
        assert_eq!(parse(&reg, "1").to_latex(), "1");
    }

    #[test]
    fn latex_parsing() {
        let reg = Registry::new();
        let cases = [
            ("\\chi_1^{-1}\\chi_2", "chi1^-1*chi2"),
            ("\\nu\\chi^{-1}", "chi^-1*nu"),
            ("\\chi^{-1}\\nu^{-1/2}", "chi^-1*nu^(-1/2)"),
            ("\\omega_\\pi^{-1}", "omega_pi^-1"),
            ("\\omega_{\\pi}", "omega_pi"),
            ("1_{F^\\times}", "1"),
            ("\\nu^3", "nu^3"),
            ("\\chi^2", "chi^2"),
            ("\\chi \\cdot \\nu", "chi*nu"),
            ("\\mathrm{my\\_char}", "my_char"),
            ("\\chi_{12}", "chi12"),
        ];
        for (latex, plain) in cases {
            assert_eq!(
                parse_latex_character(latex, &reg).unwrap().to_string(),
                plain,
                "{latex}"
            );
        }
        let xi = reg.torsion("xi", 2).unwrap();
        assert_eq!(
            parse_latex_character("\\nu^{-1}\\xi", &reg).unwrap(),
            &xi * &reg.nu(ratio(-1, 1))
        );
        assert!(parse_latex_character("\\foo", &reg).is_err());
        assert!(parse_latex_character("", &reg).is_err());
    }
}
