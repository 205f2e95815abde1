//! Command-line front end.
//!
//! Exit status: 0 success, 1 a spec violates its row conditions, 2 usage or
//! parse error, 3 a verification check failed.

pub mod spec_parse;

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::chars::{parse_character, Registry, Substitution};
use crate::engine::{self, GprVerdict};
use crate::lfun::{render, render_json, Format, LFunction, PoleReport};
use crate::reps::{CaseTag, RepSpec, RepsError};
use crate::verify::{self, Scope, DEFAULT_SEED};

pub use spec_parse::{parse_spec, parse_spec_unchecked, print_spec, SpecError, SyntaxError};

pub const EXIT_INVALID: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_VERIFY: i32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Plain,
    Latex,
    Md,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "gsp4-adjoint", version, about = "Adjoint L-functions of GSp(4) L-parameters")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Derive the adjoint L-function of one representation.
    Compute {
        /// `case=<tag> key=<expr> ...`
        #[arg(required = true, num_args = 1..)]
        spec: Vec<String>,
        #[arg(long, value_enum, default_value = "plain")]
        format: OutputFormat,
        /// Specialise a symbol before computing, e.g. `chi=nu`. Repeatable.
        #[arg(long, value_name = "SYMBOL=EXPR")]
        branch: Vec<String>,
        /// Include the factor ζ(s) from the centre of gsp(4).
        #[arg(long)]
        gsp: bool,
    },
    /// Print the adjoint L-function and pole order of every row.
    Table {
        #[arg(long, value_enum, default_value = "plain")]
        format: OutputFormat,
    },
    /// Print the L-packet of a representation.
    Packet {
        #[arg(required = true, num_args = 1..)]
        spec: Vec<String>,
    },
    /// Run the built-in checks.
    Verify {
        #[arg(value_enum, default_value = "all")]
        scope: Scope,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
}

/// Parses `args` (including the program name) and runs the command.
pub fn main_with_args<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(cli.command, out, err),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = if e.use_stderr() {
                write!(err, "{e}")
            } else {
                write!(out, "{e}")
            };
            code
        }
    }
}

/// A failed command: exit status and message.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.message)
    }
}

impl std::error::Error for CliError {}

impl From<SpecError> for CliError {
    fn from(e: SpecError) -> Self {
        let code = match &e {
            SpecError::Reps(RepsError::Invalid { .. }) => EXIT_INVALID,
            _ => EXIT_USAGE,
        };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}

impl From<engine::EngineError> for CliError {
    fn from(e: engine::EngineError) -> Self {
        CliError {
            code: EXIT_INVALID,
            message: e.to_string(),
        }
    }
}

pub fn run(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let result = match command {
        Command::Compute {
            spec,
            format,
            branch,
            gsp,
        } => compute(&spec.join(" "), format, &branch, gsp),
        Command::Table { format } => table(format),
        Command::Packet { spec } => packet(&spec.join(" ")),
        Command::Verify { scope, seed } => {
            let report = verify::run(scope, seed);
            let code = if report.all_passed() { 0 } else { EXIT_VERIFY };
            Ok((report.to_string(), code))
        }
    };
    match result {
        Ok((text, code)) => {
            let _ = write!(out, "{text}");
            code
        }
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn parse_branches(items: &[String], reg: &Registry) -> Result<Substitution, CliError> {
    let usage = |message: String| CliError {
        code: EXIT_USAGE,
        message,
    };
    let mut sub = Substitution::new();
    for item in items {
        let (name, expr) = item
            .split_once('=')
            .ok_or_else(|| usage(format!("--branch `{item}`: expected SYMBOL=EXPR")))?;
        let symbol = reg
            .lookup(name)
            .ok_or_else(|| usage(format!("--branch `{item}`: `{name}` does not occur in the spec")))?;
        let target = parse_character(expr, reg)
            .map_err(|e| usage(format!("--branch `{item}`: {}", e.shifted(name.len() + 1))))?;
        sub.insert(symbol, target);
    }
    Ok(sub)
}

struct Computed {
    spec: RepSpec,
    lfunction: LFunction,
    verdict: GprVerdict,
}

fn computed(spec: RepSpec, gsp: bool) -> Result<Computed, CliError> {
    let lfunction = if gsp {
        engine::derive_gsp(&spec)?
    } else {
        engine::derive(&spec)?
    };
    let verdict = engine::gpr_verdict(&spec)?;
    Ok(Computed {
        spec,
        lfunction,
        verdict,
    })
}

fn branches_text(r: &PoleReport) -> String {
    if r.conditional_branches.is_empty() {
        return "none".to_string();
    }
    r.conditional_branches
        .iter()
        .map(|b| format!("{}: {}", b.substitution, b.order))
        .collect::<Vec<_>>()
        .join("; ")
}

fn packet_text(spec: &RepSpec) -> String {
    let p = spec.l_packet();
    let names: Vec<&str> = p.members.iter().map(|c| c.as_str()).collect();
    let mut s = format!("{{{}}}", names.join(", "));
    if p.possible_supercuspidal_member {
        s.push_str(" (may also contain a supercuspidal)");
    }
    s
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// Parses a spec and applies `--branch` assignments, checking the row
/// conditions afterwards.
pub fn load_spec(text: &str, branch: &[String], reg: &Registry) -> Result<(RepSpec, Substitution), CliError> {
    let mut spec = parse_spec(text, reg)?;
    let sub = parse_branches(branch, reg)?;
    if !sub.is_empty() {
        spec = spec
            .substitute(&sub)
            .map_err(|e| SpecError::Reps(e.clone()))?;
        let violations = spec.validate();
        if !violations.is_empty() {
            return Err(SpecError::Reps(RepsError::Invalid {
                case: spec.case(),
                violations,
            })
            .into());
        }
    }
    Ok((spec, sub))
}

fn compute(text: &str, format: OutputFormat, branch: &[String], gsp: bool) -> Result<(String, i32), CliError> {
    let reg = Registry::new();
    let (spec, sub) = load_spec(text, branch, &reg)?;
    let c = computed(spec, gsp)?;
    let v = &c.verdict;
    let order = if gsp {
        c.lfunction.pole_order_at_one().to_string()
    } else {
        v.report.order_label()
    };
    let gpr = if v.theorem_holds { "holds" } else { "FAILS" };
    let text = match format {
        OutputFormat::Json => {
            let mut value: Value =
                serde_json::from_str(&render_json(&c.lfunction, Some(&v.report))).expect("valid JSON");
            let obj = value.as_object_mut().expect("object");
            obj.insert("spec".into(), json!(print_spec(&c.spec)));
            obj.insert("case".into(), json!(c.spec.case().as_str()));
            if !sub.is_empty() {
                obj.insert("branch".into(), json!(sub.to_string()));
            }
            obj.insert("generic".into(), json!(c.spec.is_generic()));
            let p = c.spec.l_packet();
            obj.insert(
                "packet".into(),
                json!({
                    "members": p.members.iter().map(|m| m.as_str()).collect::<Vec<_>>(),
                    "contains_generic": p.contains_generic,
                    "possible_supercuspidal_member": p.possible_supercuspidal_member,
                }),
            );
            obj.insert("gpr_holds".into(), json!(v.theorem_holds));
            format!("{}\n", serde_json::to_string_pretty(&value).expect("serializable"))
        }
        OutputFormat::Md => format!(
            "- spec: `{}`\n- L(s,Π,Ad): ${}$\n- ord at s=1: {order}\n- branches: {}\n- generic: {}\n- packet: {}\n- GP-R: {gpr}\n",
            print_spec(&c.spec),
            render(&c.lfunction, Format::Latex),
            branches_text(&v.report),
            yes_no(c.spec.is_generic()),
            packet_text(&c.spec),
        ),
        OutputFormat::Plain | OutputFormat::Latex => {
            let f = if format == OutputFormat::Latex {
                Format::Latex
            } else {
                Format::Plain
            };
            let mut s = format!("spec: {}\n", print_spec(&c.spec));
            if !sub.is_empty() {
                s.push_str(&format!("branch: {sub}\n"));
            }
            s.push_str(&format!(
                "L(s,Ad) = {}\nord_s=1: {order}\nbranches: {}\ngeneric: {}\npacket: {}\nGP-R: {gpr}\n",
                render(&c.lfunction, f),
                branches_text(&v.report),
                yes_no(c.spec.is_generic()),
                packet_text(&c.spec),
            ));
            s
        }
    };
    Ok((text, 0))
}

/// One row per case with generic inputs: tag, L-function, order label.
pub fn table_rows() -> Result<Vec<(CaseTag, LFunction, String)>, engine::EngineError> {
    CaseTag::ALL
        .iter()
        .map(|&case| {
            let reg = Registry::new();
            let spec = RepSpec::generic(case, &reg)?;
            let l = engine::derive(&spec)?;
            let r = engine::pole_report_for(&spec)?;
            Ok((case, l, r.order_label()))
        })
        .collect()
}

/// The `table` command output.
pub fn table(format: OutputFormat) -> Result<(String, i32), CliError> {
    let rows = table_rows()?;
    let mut s = String::new();
    match format {
        OutputFormat::Md => {
            s.push_str("| case | L(s,Π,Ad) | ord at s=1 |\n|---|---|---|\n");
            for (case, l, ord) in &rows {
                s.push_str(&format!("| {case} | ${}$ | {ord} |\n", render(l, Format::Latex)));
            }
        }
        OutputFormat::Latex => {
            s.push_str("\\begin{tabular}{lll}\n\\hline\n$\\Pi$ & $L(s,\\Pi,{\\rm Ad})$ & ${\\rm ord}_{s=1}$\\\\\n\\hline\n");
            for (case, l, ord) in &rows {
                s.push_str(&format!("{case} & ${}$ & {ord}\\\\\n", render(l, Format::Latex)));
            }
            s.push_str("\\hline\n\\end{tabular}\n");
        }
        OutputFormat::Plain => {
            for (case, l, ord) in &rows {
                s.push_str(&format!("{:<6} {:<8} {}\n", case.as_str(), ord, render(l, Format::Plain)));
            }
        }
        OutputFormat::Json => {
            let items: Vec<Value> = rows
                .iter()
                .map(|(case, l, ord)| {
                    let mut v: Value = serde_json::from_str(&render_json(l, None)).expect("valid JSON");
                    v["case"] = json!(case.as_str());
                    v["ord_label"] = json!(ord);
                    v
                })
                .collect();
            s = format!("{}\n", serde_json::to_string_pretty(&items).expect("serializable"));
        }
    }
    Ok((s, 0))
}

fn packet(text: &str) -> Result<(String, i32), CliError> {
    let reg = Registry::new();
    let spec = parse_spec(text, &reg)?;
    let p = spec.l_packet();
    let mut s = format!("packet: {}\n", packet_text(&spec));
    s.push_str(&format!("contains generic: {}\n", yes_no(p.contains_generic)));
    for m in &p.members {
        s.push_str(&format!("  {m}: generic {}\n", yes_no(m.is_generic())));
    }
    Ok((s, 0))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("gsp4-adjoint").chain(args.iter().copied());
        let code = main_with_args(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn compute_vid() {
        let (code, out, _) = call(&["compute", "case=VId", "sigma=s"]);
        assert_eq!(code, 0);
        assert!(out.contains("ord_s=1: 3"), "{out}");
    }

    #[test]
    fn compute_iiib_branch() {
        let (code, out, _) = call(&["compute", "case=IIIb chi=chi sigma=s", "--branch", "chi=nu"]);
        assert_eq!(code, 0);
        assert!(out.contains("ord_s=1: 2"), "{out}");
        let (_, out, _) = call(&["compute", "case=IIIb chi=chi sigma=s"]);
        assert!(out.contains("ord_s=1: 1 or 2"), "{out}");
    }

    #[test]
    fn exit_codes() {
        assert_eq!(call(&["compute", "case=IIa chi=nu^(1/2) sigma=s"]).0, EXIT_INVALID);
        assert_eq!(call(&["compute", "case=IIa chi=*"]).0, EXIT_USAGE);
        assert_eq!(call(&["frobnicate"]).0, EXIT_USAGE);
        assert_eq!(call(&["compute", "case=I chi1=a chi2=b sigma=s", "--branch", "zz=nu"]).0, EXIT_USAGE);
    }

    #[test]
    fn table_md_has_every_row() {
        let (code, out, _) = call(&["table", "--format", "md"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().count(), 2 + CaseTag::ALL.len());
        assert!(out.contains("| IIIb |") && out.contains("| 1 or 2 |"));
    }

    #[test]
    fn json_output_parses() {
        let (_, out, _) = call(&["compute", "case=XIa", "pi=p", "omega=1", "sigma=s", "--format=json"]);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["ord_s1"], 0);
        assert_eq!(v["gpr_holds"], true);
    }

    #[test]
    fn packet_lists_members() {
        let (code, out, _) = call(&["packet", "case=VIa", "sigma=s"]);
        assert_eq!(code, 0);
        assert!(out.contains("VIa, VIb"), "{out}");
    }

    #[test]
    fn verify_twist_scope() {
        let (code, out, _) = call(&["verify", "twist", "--seed", "7"]);
        assert_eq!(code, 0, "{out}");
        assert!(out.starts_with("# seed = 7"));
    }
}
