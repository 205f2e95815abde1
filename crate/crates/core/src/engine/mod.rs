//! Adjoint L-functions from L-parameters.
//!
//! The centralizer `ker(ad N)` is computed exactly. For a diagonal semisimple
//! part every kernel vector is a weight vector and contributes one character.
//! For block parameters the kernel is cut into Levi-stable blocks, each of
//! which contributes one factor (or is suppressed when its L-factor is 1).

pub mod levi;
pub mod table2;

use thiserror::Error;

use crate::chars::{CharError, Character};
use crate::lfun::{pole_report, Atom, LFunction, PoleReport};
use crate::qlinalg::{self, rat, Rational};
use crate::reps::{RepSpec, RepsError, Semisimple, WDParameter};
use crate::sp4::{self, a0_line_element, BasisVector, Root, Sp4Element, Sp4Error, StandardNilpotent};

pub use levi::{klingen_table, siegel_table, BlockKind, Levi, LeviBlock, LeviBlockTable};
pub use table2::{listed_order, table2_closed_form};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EngineError {
    #[error(transparent)]
    Reps(#[from] RepsError),
    #[error(transparent)]
    Sp4(#[from] Sp4Error),
    #[error(transparent)]
    Char(#[from] CharError),
    #[error("kernel vector {0} mixes weights")]
    NotHomogeneous(String),
    #[error("kernel of ad N is not a sum of Levi blocks: {0}")]
    NotBlockStable(String),
}

/// A kernel vector together with the character by which the torus acts on it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightLine {
    pub vector: Sp4Element,
    pub character: Character,
}

/// A Levi block inside the kernel whose L-factor is identically 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Suppressed {
    pub label: &'static str,
    pub degree: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Derivation {
    pub lfunction: LFunction,
    pub suppressed: Vec<Suppressed>,
    pub kernel_dim: usize,
}

impl Derivation {
    /// Degree of the L-function plus the degrees of the suppressed blocks.
    pub fn accounted_dim(&self) -> usize {
        self.lfunction.degree() + self.suppressed.iter().map(|s| s.degree).sum::<usize>()
    }
}

/// `c1^{n1}·c2^{n2}·λ^{-(n1+n2)/2}` with `λ = c1·c4`.
pub fn root_weight(root: Root, c: &[Character; 4]) -> Character {
    let (n1, n2) = root.coefficients();
    let lambda = &c[0] * &c[3];
    let half = (n1 + n2) / 2;
    &(&c[0].pow(n1) * &c[1].pow(n2)) * &lambda.pow(-half)
}

fn describe(v: &Sp4Element) -> String {
    v.support()
        .iter()
        .map(|b| b.name())
        .collect::<Vec<_>>()
        .join("+")
}

/// Attaches a torus weight to each kernel vector.
pub fn weight_lines(kernel: &[Sp4Element], c: &[Character; 4]) -> Result<Vec<WeightLine>, EngineError> {
    let trivial = c[0].trivial_like();
    kernel
        .iter()
        .map(|v| {
            let mut weight: Option<Character> = None;
            for b in v.support() {
                let w = match b {
                    BasisVector::Root(r) => root_weight(r, c),
                    BasisVector::H1 | BasisVector::H2 => trivial.clone(),
                };
                match &weight {
                    Some(prev) if *prev != w => return Err(EngineError::NotHomogeneous(describe(v))),
                    Some(_) => {}
                    None => weight = Some(w),
                }
            }
            Ok(WeightLine {
                vector: v.clone(),
                character: weight.unwrap_or(trivial.clone()),
            })
        })
        .collect()
}

pub fn adjoint_diagonal(c: &[Character; 4], n: &StandardNilpotent) -> Result<Derivation, EngineError> {
    let kernel = sp4::kernel_of_ad(n)?;
    let lines = weight_lines(&kernel, c)?;
    let lfunction = LFunction::from_atoms(lines.into_iter().map(|l| Atom::char(l.character)));
    Ok(Derivation {
        lfunction,
        suppressed: Vec::new(),
        kernel_dim: kernel.len(),
    })
}

fn coords(v: &[Sp4Element]) -> Vec<Vec<Rational>> {
    v.iter().map(Sp4Element::coordinates).collect()
}

/// Decomposes `ker(ad N)` for a parameter supported on a maximal Levi.
pub fn adjoint_block(p: &WDParameter) -> Result<Derivation, EngineError> {
    let kernel = coords(&sp4::kernel_of_ad(&p.nilpotent)?);
    let (table, mu) = match &p.semisimple {
        Semisimple::SiegelBlock { mu, .. } => (siegel_table(), mu),
        Semisimple::KlingenBlock { mu, .. } => (klingen_table(), mu),
        Semisimple::Diagonal(_) => unreachable!("diagonal parameters go through weights"),
    };
    let one = mu.central_character().trivial_like();

    let mut lfunction = LFunction::one();
    let mut suppressed = Vec::new();
    let mut covered: Vec<Vec<Rational>> = Vec::new();
    for block in &table.blocks {
        let b = coords(&block.basis);
        if !qlinalg::is_subspace(&b, &kernel).expect("coordinate length 10") {
            continue;
        }
        covered.extend(b);
        let atom = match (&p.semisimple, block.kind) {
            (_, BlockKind::Trivial) => Some(Atom::char(one.clone())),
            (_, BlockKind::Adjoint) => Some(Atom::ad(mu, one.clone())),
            (
                Semisimple::SiegelBlock {
                    top_twist,
                    bottom_twist,
                    ..
                },
                BlockKind::UpperAdjoint,
            ) => Some(Atom::ad(mu, top_twist / bottom_twist)),
            (
                Semisimple::SiegelBlock {
                    top_twist,
                    bottom_twist,
                    ..
                },
                BlockKind::LowerAdjoint,
            ) => Some(Atom::ad(mu, bottom_twist / top_twist)),
            (Semisimple::KlingenBlock { nu_shift, .. }, BlockKind::Det) => Some(Atom::char(
                mu.central_character().times_nu(&(nu_shift * rat(2))),
            )),
            (Semisimple::KlingenBlock { nu_shift, .. }, BlockKind::DetInv) => Some(Atom::char(
                mu.central_character().inv().times_nu(&(nu_shift * rat(-2))),
            )),
            (_, BlockKind::Std | BlockKind::StdDual) => {
                suppressed.push(Suppressed {
                    label: block.label,
                    degree: block.dim(),
                });
                None
            }
            (_, kind) => unreachable!("{kind:?} does not occur for {:?}", table.levi),
        };
        if let Some(a) = atom {
            lfunction.push(a, 1);
        }
    }

    let covered_dim = qlinalg::span_dimension(&covered).expect("coordinate length 10");
    if covered_dim < kernel.len() {
        // Only the Siegel nilpotent leaves a line outside the blocks: the A₀
        // line in the Levi, on which the Levi acts by a character.
        let (
            StandardNilpotent::SiegelSym(s),
            Semisimple::SiegelBlock {
                top_twist,
                bottom_twist,
                ..
            },
        ) = (&p.nilpotent, &p.semisimple)
        else {
            return Err(EngineError::NotBlockStable(format!(
                "{} of {} dimensions covered",
                covered_dim,
                kernel.len()
            )));
        };
        covered.push(a0_line_element(s).coordinates());
        if covered_dim + 1 != kernel.len()
            || !qlinalg::same_row_space(&covered, &kernel).expect("coordinate length 10")
        {
            return Err(EngineError::NotBlockStable("A₀ line does not complete the kernel".into()));
        }
        let eta = (top_twist / bottom_twist).times_nu(&rat(-1));
        lfunction.push(Atom::char(eta), 1);
    }

    Ok(Derivation {
        lfunction,
        suppressed,
        kernel_dim: kernel.len(),
    })
}

pub fn derive_parameter(p: &WDParameter) -> Result<Derivation, EngineError> {
    match &p.semisimple {
        Semisimple::Diagonal(c) => adjoint_diagonal(c, &p.nilpotent),
        _ => adjoint_block(p),
    }
}

/// Full derivation for a catalogue row, including suppressed blocks.
pub fn derive_detailed(spec: &RepSpec) -> Result<Derivation, EngineError> {
    derive_parameter(&spec.build_parameter()?)
}

/// The adjoint L-function `L(s, π, Ad)` of a catalogue row.
pub fn derive(spec: &RepSpec) -> Result<LFunction, EngineError> {
    Ok(derive_detailed(spec)?.lfunction)
}

/// `L(s, π, Ad)` for GSp(4): the sp(4) answer times `ζ(s)` for the centre.
pub fn derive_gsp(spec: &RepSpec) -> Result<LFunction, EngineError> {
    let mut l = derive(spec)?;
    l.push(Atom::char(spec.central_character().trivial_like()), 1);
    Ok(l)
}

/// Pole order at `s = 1` for the given inputs, and the orders reached when a
/// free symbol is specialised within the row conditions.
pub fn pole_report_for(spec: &RepSpec) -> Result<PoleReport, EngineError> {
    let l = derive(spec)?;
    Ok(pole_report(&l, &spec.free_symbols(), &spec.conditions()))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GprVerdict {
    pub report: PoleReport,
    pub holomorphic_at_1: bool,
    pub packet_has_generic: bool,
    /// Holomorphy at 1 agrees with genericity of the packet, in the generic
    /// case and on every conditional branch.
    pub theorem_holds: bool,
}

pub fn gpr_verdict(spec: &RepSpec) -> Result<GprVerdict, EngineError> {
    let report = pole_report_for(spec)?;
    let packet_has_generic = spec.l_packet().contains_generic;
    let holomorphic_at_1 = report.generic_order == 0;
    let theorem_holds = holomorphic_at_1 == packet_has_generic
        && report
            .conditional_branches
            .iter()
            .all(|b| (b.order == 0) == packet_has_generic);
    Ok(GprVerdict {
        report,
        holomorphic_at_1,
        packet_has_generic,
        theorem_holds,
    })
}
