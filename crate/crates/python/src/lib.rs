use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use gsp4_adjoint::chars::Registry;
use gsp4_adjoint::cli::{self, CliError, OutputFormat};
use gsp4_adjoint::engine;
use gsp4_adjoint::lfun::{render, Format};
use gsp4_adjoint::reps::{CaseTag, RepSpec};
use gsp4_adjoint::verify::{self, Scope, DEFAULT_SEED};

fn value_error(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn load(spec: &str, branches: Option<Vec<String>>, reg: &Registry) -> PyResult<RepSpec> {
    cli::load_spec(spec, &branches.unwrap_or_default(), reg)
        .map(|(s, _)| s)
        .map_err(|e: CliError| value_error(e))
}

fn lfun_format(name: &str) -> PyResult<Format> {
    match name {
        "plain" => Ok(Format::Plain),
        "latex" => Ok(Format::Latex),
        "json" => Ok(Format::Json),
        _ => Err(value_error(format!("unknown format `{name}`"))),
    }
}

/// The adjoint L-function of a spec such as `"case=IIa chi=chi sigma=s"`.
#[pyfunction]
#[pyo3(signature = (spec, format = "plain", branches = None, gsp = false))]
fn compute(spec: &str, format: &str, branches: Option<Vec<String>>, gsp: bool) -> PyResult<String> {
    let reg = Registry::new();
    let spec = load(spec, branches, &reg)?;
    let l = if gsp {
        engine::derive_gsp(&spec)
    } else {
        engine::derive(&spec)
    }
    .map_err(value_error)?;
    Ok(render(&l, lfun_format(format)?))
}

/// Order of the pole at s=1.
#[pyfunction]
#[pyo3(signature = (spec, branches = None))]
fn pole_order(spec: &str, branches: Option<Vec<String>>) -> PyResult<u32> {
    let reg = Registry::new();
    let spec = load(spec, branches, &reg)?;
    Ok(engine::derive(&spec).map_err(value_error)?.pole_order_at_one())
}

/// Specialisations that change the pole order, as `(substitution, order)`.
#[pyfunction]
fn pole_branches(spec: &str) -> PyResult<Vec<(String, u32)>> {
    let reg = Registry::new();
    let spec = load(spec, None, &reg)?;
    let r = engine::pole_report_for(&spec).map_err(value_error)?;
    Ok(r.conditional_branches
        .iter()
        .map(|b| (b.substitution.to_string(), b.order))
        .collect())
}

/// Whether holomorphy at s=1 matches genericity of the L-packet.
#[pyfunction]
fn gpr_holds(spec: &str) -> PyResult<bool> {
    let reg = Registry::new();
    let spec = load(spec, None, &reg)?;
    Ok(engine::gpr_verdict(&spec).map_err(value_error)?.theorem_holds)
}

#[pyfunction]
#[pyo3(signature = (format = "md"))]
fn table(format: &str) -> PyResult<String> {
    let f = match format {
        "plain" => OutputFormat::Plain,
        "latex" => OutputFormat::Latex,
        "md" => OutputFormat::Md,
        "json" => OutputFormat::Json,
        _ => return Err(value_error(format!("unknown format `{format}`"))),
    };
    cli::table(f).map(|(s, _)| s).map_err(value_error)
}

/// Runs the built-in checks; returns `(all_passed, report)`.
#[pyfunction]
#[pyo3(signature = (scope = "all", seed = None))]
fn run_verify(scope: &str, seed: Option<u64>) -> PyResult<(bool, String)> {
    let scope = match scope {
        "all" => Scope::All,
        "linalg" => Scope::Linalg,
        "tables" => Scope::Tables,
        "gpr" => Scope::Gpr,
        "twist" => Scope::Twist,
        _ => return Err(value_error(format!("unknown scope `{scope}`"))),
    };
    let report = verify::run(scope, seed.unwrap_or(DEFAULT_SEED));
    Ok((report.all_passed(), report.to_string()))
}

#[pymodule]
fn gsp4ad(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(compute, m)?)?;
    m.add_function(wrap_pyfunction!(pole_order, m)?)?;
    m.add_function(wrap_pyfunction!(pole_branches, m)?)?;
    m.add_function(wrap_pyfunction!(gpr_holds, m)?)?;
    m.add_function(wrap_pyfunction!(table, m)?)?;
    m.add_function(wrap_pyfunction!(run_verify, m)?)?;
    let cases: Vec<&str> = CaseTag::ALL.iter().map(|c| c.as_str()).collect();
    m.add("CASES", cases)?;
    Ok(())
}
