//! Plain, LaTeX and JSON forms of L-functions.
//!
//! Plain: `L(s,1)^2 L(s,nu) L(s,Ad(pi)) L(s,Ad(pi)*xi*nu)`, empty product `1`.
//! LaTeX: `L(s,1_{F^\times})^2L(s,\nu)L(s,\pi,{\rm Ad}_{\mathrm{GL}(2)}\otimes\xi\nu)`.

use std::fmt;

use serde::Serialize;

use super::{Atom, LFunction, PoleReport};
use crate::chars::{
    parse_character, parse_latex_character, symbol_latex, ExprError, Registry, SupercuspidalGL2,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Format {
    Plain,
    Latex,
    Json,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LfunParseError {
    pub position: usize,
    pub message: String,
}

impl fmt::Display for LfunParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at byte {}: {}", self.position, self.message)
    }
}

impl std::error::Error for LfunParseError {}

impl LfunParseError {
    fn new(position: usize, message: impl Into<String>) -> Self {
        LfunParseError {
            position,
            message: message.into(),
        }
    }

    fn from_expr(e: ExprError, offset: usize) -> Self {
        let e = e.shifted(offset);
        LfunParseError {
            position: e.position,
            message: e.to_string(),
        }
    }
}

const AD_LATEX: &str = "{\\rm Ad}_{\\mathrm{GL}(2)}";

fn plain_atom(a: &Atom) -> String {
    match a {
        Atom::Char(c) => format!("L(s,{c})"),
        Atom::AdGl2 { pi, twist } if twist.is_trivial() => format!("L(s,Ad({}))", pi.name()),
        Atom::AdGl2 { pi, twist } => format!("L(s,Ad({})*{twist})", pi.name()),
    }
}

fn latex_atom(a: &Atom) -> String {
    match a {
        Atom::Char(c) if c.is_trivial() => "L(s,1_{F^\\times})".to_string(),
        Atom::Char(c) => format!("L(s,{})", c.to_latex()),
        Atom::AdGl2 { pi, twist } => {
            let name = symbol_latex(pi.name());
            if twist.is_trivial() {
                format!("L(s,{name},{AD_LATEX})")
            } else {
                format!("L(s,{name},{AD_LATEX}\\otimes {})", twist.to_latex())
            }
        }
    }
}

fn with_multiplicity(atom: String, m: usize) -> String {
    if m == 1 {
        atom
    } else {
        format!("{atom}^{m}")
    }
}

/// Deterministic text form; atoms appear in canonical order.
pub fn render(l: &LFunction, format: Format) -> String {
    match format {
        Format::Plain => {
            if l.is_one() {
                return "1".to_string();
            }
            let parts: Vec<String> = l
                .iter()
                .map(|(a, m)| with_multiplicity(plain_atom(a), m))
                .collect();
            parts.join(" ")
        }
        Format::Latex => {
            if l.is_one() {
                return "1".to_string();
            }
            l.iter()
                .map(|(a, m)| {
                    if m == 1 {
                        latex_atom(a)
                    } else {
                        format!("{}^{{{m}}}", latex_atom(a))
                    }
                })
                .collect()
        }
        Format::Json => render_json(l, None),
    }
}

#[derive(Serialize)]
#[serde(tag = "kind")]
enum JsonAtom {
    #[serde(rename = "char")]
    Char { expr: String },
    #[serde(rename = "ad_gl2")]
    AdGl2 { pi: String, twist: String },
}

#[derive(Serialize)]
struct JsonBranch {
    substitution: String,
    ord_s1: u32,
}

#[derive(Serialize)]
struct JsonLFunction {
    atoms: Vec<JsonAtom>,
    ord_s1: u32,
    branches: Vec<JsonBranch>,
}

/// JSON form. Multiplicity is expressed by repeating atoms. Without a report
/// the generic pole order is used and no branches are listed.
pub fn render_json(l: &LFunction, report: Option<&PoleReport>) -> String {
    let atoms = l
        .expanded()
        .into_iter()
        .map(|a| match a {
            Atom::Char(c) => JsonAtom::Char {
                expr: c.to_string(),
            },
            Atom::AdGl2 { pi, twist } => JsonAtom::AdGl2 {
                pi: pi.name().to_string(),
                twist: twist.to_string(),
            },
        })
        .collect();
    let (ord_s1, branches) = match report {
        Some(r) => (
            r.generic_order,
            r.conditional_branches
                .iter()
                .map(|b| JsonBranch {
                    substitution: b.substitution.to_string(),
                    ord_s1: b.order,
                })
                .collect(),
        ),
        None => (l.pole_order_at_one(), Vec::new()),
    };
    serde_json::to_string(&JsonLFunction {
        atoms,
        ord_s1,
        branches,
    })
    .expect("serializable")
}

fn find_pi<'p>(
    pis: &'p [SupercuspidalGL2],
    name: &str,
    position: usize,
) -> Result<&'p SupercuspidalGL2, LfunParseError> {
    pis.iter()
        .find(|p| p.name() == name)
        .ok_or_else(|| LfunParseError::new(position, format!("unknown representation `{name}`")))
}

/// Index of the `)` closing the `(` just before `start`.
fn matching_paren(text: &str, start: usize) -> Option<usize> {
    let mut depth = 1usize;
    for (i, c) in text[start..].char_indices() {
        match c {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth == 0 {
                    return Some(start + i);
                }
            }
            _ => {}
        }
    }
    None
}

fn skip_ws(text: &str, mut i: usize) -> usize {
    while let Some(c) = text[i..].chars().next() {
        if c.is_whitespace() {
            i += c.len_utf8();
        } else {
            break;
        }
    }
    i
}

/// Reads an optional `^k` / `^{k}` multiplicity starting at `i`.
fn multiplicity(text: &str, i: usize, latex: bool) -> Result<(usize, usize), LfunParseError> {
    let j = skip_ws(text, i);
    if !text[j..].starts_with('^') {
        return Ok((1, i));
    }
    let k = skip_ws(text, j + 1);
    let braced = text[k..].starts_with('{');
    let ds = if braced { k + 1 } else { k };
    let len = text[ds..].bytes().take_while(u8::is_ascii_digit).count();
    // An unbraced exponent is one digit, as LaTeX reads it.
    let len = if braced || !latex { len } else { len.min(1) };
    if len == 0 {
        return Err(LfunParseError::new(ds, "expected a multiplicity"));
    }
    let m: usize = text[ds..ds + len]
        .parse()
        .map_err(|_| LfunParseError::new(ds, "multiplicity out of range"))?;
    if m == 0 {
        return Err(LfunParseError::new(ds, "multiplicity must be positive"));
    }
    let mut end = ds + len;
    if braced {
        if !text[end..].starts_with('}') {
            return Err(LfunParseError::new(end, "expected `}`"));
        }
        end += 1;
    }
    Ok((m, end))
}

/// Parses the output of [`render`] with [`Format::Plain`]. Adjoint atoms must
/// name one of `pis`.
pub fn parse_plain(
    text: &str,
    reg: &Registry,
    pis: &[SupercuspidalGL2],
) -> Result<LFunction, LfunParseError> {
    let mut l = LFunction::one();
    let mut i = skip_ws(text, 0);
    if text[i..].trim() == "1" {
        return Ok(l);
    }
    while i < text.len() {
        if !text[i..].starts_with("L(s,") {
            return Err(LfunParseError::new(i, "expected `L(s,`"));
        }
        let body = i + 4;
        let close = matching_paren(text, body)
            .ok_or_else(|| LfunParseError::new(text.len(), "unclosed `L(`"))?;
        let inner = &text[body..close];
        let atom = if let Some(rest) = inner.strip_prefix("Ad(") {
            let name_end = rest
                .find(')')
                .ok_or_else(|| LfunParseError::new(body + 3, "expected `)`"))?;
            let pi = find_pi(pis, &rest[..name_end], body + 3)?;
            let tail = &rest[name_end + 1..];
            let twist_off = body + 3 + name_end + 1;
            let twist = if tail.trim().is_empty() {
                reg.trivial()
            } else if let Some(t) = tail.strip_prefix('*') {
                parse_character(t, reg).map_err(|e| LfunParseError::from_expr(e, twist_off + 1))?
            } else {
                return Err(LfunParseError::new(twist_off, "expected `*` or `)`"));
            };
            Atom::ad(pi, twist)
        } else {
            Atom::Char(parse_character(inner, reg).map_err(|e| LfunParseError::from_expr(e, body))?)
        };
        let (m, end) = multiplicity(text, close + 1, false)?;
        l.push(atom, m);
        i = skip_ws(text, end);
    }
    Ok(l)
}

fn skip_latex_noise(text: &str, mut i: usize) -> usize {
    loop {
        let j = skip_ws(text, i);
        let rest = &text[j..];
        if let Some(n) = ["\\cdot", "\\,", "\\;", "\\!"]
            .iter()
            .find(|p| rest.starts_with(**p))
        {
            i = j + n.len();
        } else {
            return j;
        }
    }
}

/// Whitespace-insensitive prefix match; returns the byte length consumed.
fn strip_ws_prefix(text: &str, prefix: &str) -> Option<usize> {
    let mut ti = text.char_indices().peekable();
    for pc in prefix.chars().filter(|c| !c.is_whitespace()) {
        loop {
            match ti.peek() {
                Some((_, c)) if c.is_whitespace() => {
                    ti.next();
                }
                _ => break,
            }
        }
        match ti.next() {
            Some((_, c)) if c == pc => {}
            _ => return None,
        }
    }
    Some(ti.peek().map_or(text.len(), |(i, _)| *i))
}

/// Parses LaTeX products as printed by [`render`] with [`Format::Latex`] or
/// in typeset tables; whitespace, line breaks and `\cdot` are ignored.
pub fn parse_latex(
    text: &str,
    reg: &Registry,
    pis: &[SupercuspidalGL2],
) -> Result<LFunction, LfunParseError> {
    let mut l = LFunction::one();
    let mut i = skip_latex_noise(text, 0);
    if text[i..].trim() == "1" {
        return Ok(l);
    }
    while i < text.len() {
        let Some(open) = strip_ws_prefix(&text[i..], "L(s,") else {
            return Err(LfunParseError::new(i, "expected `L(s,`"));
        };
        let body = i + open;
        let close = matching_paren(text, body)
            .ok_or_else(|| LfunParseError::new(text.len(), "unclosed `L(`"))?;
        let inner = &text[body..close];
        let atom = match inner.find(',') {
            Some(comma) => {
                let pi_latex = inner[..comma].trim();
                let pi = pis
                    .iter()
                    .find(|p| symbol_latex(p.name()) == pi_latex)
                    .ok_or_else(|| {
                        LfunParseError::new(body, format!("unknown representation `{pi_latex}`"))
                    })?;
                let rest = &inner[comma + 1..];
                let ad_len = strip_ws_prefix(rest, AD_LATEX)
                    .or_else(|| strip_ws_prefix(rest, "\\mathrm{Ad}_{\\mathrm{GL}(2)}"))
                    .ok_or_else(|| LfunParseError::new(body + comma + 1, "expected the adjoint"))?;
                let tail = &rest[ad_len..];
                let tail_off = body + comma + 1 + ad_len;
                let twist = if tail.trim().is_empty() {
                    reg.trivial()
                } else if let Some(n) = strip_ws_prefix(tail, "\\otimes") {
                    parse_latex_character(&tail[n..], reg)
                        .map_err(|e| LfunParseError::from_expr(e, tail_off + n))?
                } else {
                    return Err(LfunParseError::new(tail_off, "expected `\\otimes`"));
                };
                Atom::ad(pi, twist)
            }
            None => Atom::Char(
                parse_latex_character(inner, reg)
                    .map_err(|e| LfunParseError::from_expr(e, body))?,
            ),
        };
        let (m, end) = multiplicity(text, close + 1, true)?;
        l.push(atom, m);
        i = skip_latex_noise(text, end);
    }
    Ok(l)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chars::{parse_character, Character};

    fn setup() -> (Registry, Vec<SupercuspidalGL2>) {
        let reg = Registry::new();
        let xi = reg.declare("xi", Some(2)).unwrap();
        let omega = reg.generic("omega_pi").unwrap();
        let pi = SupercuspidalGL2::new("pi", omega, [xi]).unwrap();
        (reg, vec![pi])
    }

    fn c(reg: &Registry, s: &str) -> Character {
        parse_character(s, reg).unwrap()
    }

    #[test]
    fn plain_examples() {
        let (reg, pis) = setup();
        let iva = LFunction::from_atoms([Atom::char(c(&reg, "nu^3")), Atom::char(c(&reg, "nu"))]);
        assert_eq!(render(&iva, Format::Plain), "L(s,nu) L(s,nu^3)");
        assert_eq!(render(&LFunction::one(), Format::Plain), "1");
        let x = LFunction::from_atoms([
            Atom::char(c(&reg, "omega_pi^-1")),
            Atom::ad(&pis[0], reg.trivial()),
            Atom::char(c(&reg, "omega_pi")),
            Atom::char(reg.trivial()),
        ]);
        assert_eq!(
            render(&x, Format::Plain),
            "L(s,1) L(s,Ad(pi)) L(s,omega_pi) L(s,omega_pi^-1)"
        );
        assert_eq!(parse_plain(&render(&x, Format::Plain), &reg, &pis).unwrap(), x);
    }

    #[test]
    fn plain_round_trip_with_multiplicity_and_twist() {
        let (reg, pis) = setup();
        let text = "L(s,1)^4 L(s,nu)^3 L(s,Ad(pi)*xi*nu) L(s,nu^-1)^3";
        let l = parse_plain(text, &reg, &pis).unwrap();
        assert_eq!(l.len(), 11);
        assert_eq!(l.degree(), 13);
        let canon = render(&l, Format::Plain);
        assert_eq!(canon, "L(s,1)^4 L(s,nu)^3 L(s,nu^-1)^3 L(s,Ad(pi)*xi*nu)");
        assert_eq!(parse_plain(&canon, &reg, &pis).unwrap(), l);
        assert_eq!(parse_plain("1", &reg, &pis).unwrap(), LFunction::one());
    }

    #[test]
    fn latex_round_trip() {
        let (reg, pis) = setup();
        let l = parse_plain(
            "L(s,1)^2 L(s,chi1*chi2^-1) L(s,Ad(pi)*xi*nu^-1) L(s,nu^(1/2))",
            &reg,
            &pis,
        )
        .unwrap();
        let tex = render(&l, Format::Latex);
        assert!(tex.starts_with("L(s,1_{F^\\times})^{2}"));
        assert_eq!(parse_latex(&tex, &reg, &pis).unwrap(), l);
    }

    #[test]
    fn typeset_table_cells_parse() {
        let (reg, pis) = setup();
        let cell = "L(s,1_{F^\\times})L(s,\\pi,{\\rm Ad}_{\\mathrm{GL}(2)})\n  L(s,\\pi,{\\rm Ad}_{\\mathrm{GL}(2)}\\otimes\\xi\\nu)L(s,\\pi,{\\rm Ad}_{\\mathrm{GL}(2)}\\otimes\\xi\\nu^{-1})  ";
        let l = parse_latex(cell, &reg, &pis).unwrap();
        assert_eq!(
            render(&l, Format::Plain),
            "L(s,1) L(s,Ad(pi)) L(s,Ad(pi)*xi*nu) L(s,Ad(pi)*xi*nu^-1)"
        );
        assert_eq!(l.pole_order_at_one(), 1);
        let vd = "L(s,1_{F^\\times})^2L(s,\\nu)^2L(s,\\nu^{-1})^2\n   L(s,\\xi)^2L(s,\\nu\\xi)L(s,\\nu^{-1}\\xi)";
        let l = parse_latex(vd, &reg, &pis).unwrap();
        assert_eq!(l.len(), 10);
        assert_eq!(l.pole_order_at_one(), 2);
    }

    #[test]
    fn parse_errors() {
        let (reg, pis) = setup();
        assert_eq!(parse_plain("L(s,nu) X", &reg, &pis).unwrap_err().position, 8);
        assert!(parse_plain("L(s,Ad(rho))", &reg, &pis).is_err());
        assert!(parse_plain("L(s,nu", &reg, &pis).is_err());
        assert_eq!(parse_plain("L(s,nu^)", &reg, &pis).unwrap_err().position, 7);
        assert!(parse_latex("L(s,\\nu)^{0}", &reg, &pis).is_err());
    }

    #[test]
    fn json_shape() {
        let (reg, pis) = setup();
        let l = parse_plain("L(s,xi) L(s,Ad(pi)*xi*nu)", &reg, &pis).unwrap();
        assert_eq!(
            render(&l, Format::Json),
            r#"{"atoms":[{"kind":"char","expr":"xi"},{"kind":"ad_gl2","pi":"pi","twist":"xi*nu"}],"ord_s1":0,"branches":[]}"#
        );
    }
}
