//! The catalogue of non-supercuspidal representations of GSp(4,F): case
//! tags, the inputs each row needs, the row conditions, and the L-parameter
//! `(ρ, N)` attached to each row.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::chars::{
    CharError, Character, Condition, ConditionSet, Registry, Substitution, SupercuspidalGL2,
    Symbol,
};
use crate::qlinalg::{rat, ratio, Rational};
use crate::sp4::{StandardNilpotent, SymmetricForm};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CaseTag {
    I,
    IIa,
    IIb,
    IIIa,
    IIIb,
    IVa,
    IVb,
    IVc,
    IVd,
    Va,
    Vb,
    Vc,
    Vd,
    VIa,
    VIb,
    VIc,
    VId,
    VII,
    VIIIa,
    VIIIb,
    IXa,
    IXb,
    X,
    XIa,
    XIb,
}

/// Which parabolic the representation is induced from, as seen on the dual
/// side: a torus (diagonal `ρ`), or one of the two maximal Levis.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Support {
    Borel,
    Siegel,
    Klingen,
}

impl CaseTag {
    pub const ALL: [CaseTag; 25] = [
        CaseTag::I,
        CaseTag::IIa,
        CaseTag::IIb,
        CaseTag::IIIa,
        CaseTag::IIIb,
        CaseTag::IVa,
        CaseTag::IVb,
        CaseTag::IVc,
        CaseTag::IVd,
        CaseTag::Va,
        CaseTag::Vb,
        CaseTag::Vc,
        CaseTag::Vd,
        CaseTag::VIa,
        CaseTag::VIb,
        CaseTag::VIc,
        CaseTag::VId,
        CaseTag::VII,
        CaseTag::VIIIa,
        CaseTag::VIIIb,
        CaseTag::IXa,
        CaseTag::IXb,
        CaseTag::X,
        CaseTag::XIa,
        CaseTag::XIb,
    ];

    pub fn as_str(self) -> &'static str {
        use CaseTag::*;
        match self {
            I => "I",
            IIa => "IIa",
            IIb => "IIb",
            IIIa => "IIIa",
            IIIb => "IIIb",
            IVa => "IVa",
            IVb => "IVb",
            IVc => "IVc",
            IVd => "IVd",
            Va => "Va",
            Vb => "Vb",
            Vc => "Vc",
            Vd => "Vd",
            VIa => "VIa",
            VIb => "VIb",
            VIc => "VIc",
            VId => "VId",
            VII => "VII",
            VIIIa => "VIIIa",
            VIIIb => "VIIIb",
            IXa => "IXa",
            IXb => "IXb",
            X => "X",
            XIa => "XIa",
            XIb => "XIb",
        }
    }

    /// The Roman numeral of the case.
    pub fn family(self) -> &'static str {
        self.as_str().trim_end_matches(['a', 'b', 'c', 'd'])
    }

    /// The subtype letter, if any.
    pub fn subtype(self) -> Option<char> {
        self.as_str().chars().last().filter(char::is_ascii_lowercase)
    }

    pub fn support(self) -> Support {
        match self.family() {
            "VII" | "VIII" | "IX" => Support::Siegel,
            "X" | "XI" => Support::Klingen,
            _ => Support::Borel,
        }
    }

    pub fn is_generic(self) -> bool {
        use CaseTag::*;
        matches!(self, I | IIa | IIIa | IVa | Va | VIa | VII | VIIIa | IXa | X | XIa)
    }

    /// The inputs the row takes, in display order.
    pub fn required_inputs(self) -> &'static [InputKind] {
        use InputKind::*;
        match self.family() {
            "I" => &[Chi1, Chi2, Sigma],
            "II" | "III" => &[Chi, Sigma],
            "IV" | "VI" => &[Sigma],
            "V" => &[Xi, Sigma],
            "VII" => &[Chi, Pi],
            "VIII" => &[Pi],
            "IX" => &[Xi, Pi],
            _ => &[Pi, Sigma],
        }
    }
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown case tag `{0}`")]
pub struct UnknownCase(pub String);

impl FromStr for CaseTag {
    type Err = UnknownCase;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        CaseTag::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| UnknownCase(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InputKind {
    Chi1,
    Chi2,
    Chi,
    Sigma,
    Xi,
    Pi,
}

impl InputKind {
    pub fn key(self) -> &'static str {
        match self {
            InputKind::Chi1 => "chi1",
            InputKind::Chi2 => "chi2",
            InputKind::Chi => "chi",
            InputKind::Sigma => "sigma",
            InputKind::Xi => "xi",
            InputKind::Pi => "pi",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RepsError {
    #[error("case {case} requires input `{input}`")]
    MissingInput { case: CaseTag, input: &'static str },
    #[error("case {case} does not take input `{input}`")]
    UnexpectedInput { case: CaseTag, input: &'static str },
    #[error("case {case}: violated condition(s) {}", violations.join(", "))]
    Invalid {
        case: CaseTag,
        violations: Vec<String>,
    },
    #[error("a Siegel form only applies to case IXa")]
    UnexpectedForm,
    #[error(transparent)]
    Char(#[from] CharError),
}

/// The characters and representation a catalogue row is built from.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Inputs {
    pub chi1: Option<Character>,
    pub chi2: Option<Character>,
    pub chi: Option<Character>,
    pub sigma: Option<Character>,
    pub xi: Option<Character>,
    pub pi: Option<SupercuspidalGL2>,
}

impl Inputs {
    fn has(&self, k: InputKind) -> bool {
        match k {
            InputKind::Chi1 => self.chi1.is_some(),
            InputKind::Chi2 => self.chi2.is_some(),
            InputKind::Chi => self.chi.is_some(),
            InputKind::Sigma => self.sigma.is_some(),
            InputKind::Xi => self.xi.is_some(),
            InputKind::Pi => self.pi.is_some(),
        }
    }

    fn characters(&self) -> impl Iterator<Item = &Character> {
        [&self.chi1, &self.chi2, &self.chi, &self.sigma, &self.xi]
            .into_iter()
            .flatten()
            .chain(self.pi.as_ref().map(SupercuspidalGL2::central_character))
    }
}

/// A catalogue row together with its inputs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepSpec {
    case: CaseTag,
    inputs: Inputs,
    siegel_form: Option<SymmetricForm>,
}

/// Semisimple part of an L-parameter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Semisimple {
    /// `diag(c1, c2, c3, c4)`.
    Diagonal([Character; 4]),
    /// `diag(top·det(μ)·μ', bottom·μ)` in the Siegel Levi, `μ' = K ᵗμ⁻¹ K`.
    SiegelBlock {
        mu: SupercuspidalGL2,
        top_twist: Character,
        bottom_twist: Character,
    },
    /// `diag(σ·det(μ)·ν^s, σμ, σν^{-s})` in the Klingen Levi.
    KlingenBlock {
        mu: SupercuspidalGL2,
        sigma: Character,
        nu_shift: Rational,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WDParameter {
    pub semisimple: Semisimple,
    pub nilpotent: StandardNilpotent,
}

impl WDParameter {
    /// The similitude character `λ∘ρ`.
    pub fn similitude(&self) -> Character {
        match &self.semisimple {
            Semisimple::Diagonal(c) => &c[0] * &c[3],
            Semisimple::SiegelBlock {
                mu,
                top_twist,
                bottom_twist,
            } => &(top_twist * mu.central_character()) * bottom_twist,
            Semisimple::KlingenBlock { mu, sigma, .. } => &sigma.pow(2) * mu.central_character(),
        }
    }

    /// Failures of `ρ(w)Nρ(w)⁻¹ = ν(w)N` and of the similitude condition,
    /// checked entry by entry on the formal characters.
    pub fn admissibility_violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        let n = self.nilpotent.matrix();
        let entries: Vec<(usize, usize)> = (0..4)
            .flat_map(|i| (0..4).map(move |j| (i, j)))
            .filter(|&(i, j)| !num_traits::Zero::is_zero(&n[(i, j)]))
            .collect();
        match &self.semisimple {
            Semisimple::Diagonal(c) => {
                if &c[0] * &c[3] != &c[1] * &c[2] {
                    out.push("c1·c4 = c2·c3".to_string());
                }
                for (i, j) in entries {
                    let nu = c[i].trivial_like().times_nu(&rat(1));
                    if &c[i] / &c[j] != nu {
                        out.push(format!("c{}/c{} = ν", i + 1, j + 1));
                    }
                }
            }
            Semisimple::SiegelBlock {
                mu,
                top_twist,
                bottom_twist,
            } => match &self.nilpotent {
                StandardNilpotent::Zero => {}
                StandardNilpotent::SiegelSym(_) => {
                    let eta = (top_twist / bottom_twist).times_nu(&rat(-1));
                    if !mu.is_self_twist(&eta) {
                        out.push("top/bottom = ν·ξ with ξ a self-twist of μ".to_string());
                    }
                }
                other => out.push(format!("{} is not compatible with a Siegel block", other.tag())),
            },
            Semisimple::KlingenBlock {
                mu,
                nu_shift,
                ..
            } => {
                let corner = |i: usize| i == 0 || i == 3;
                for (i, j) in entries {
                    if !(corner(i) && corner(j)) {
                        out.push(format!("entry ({}, {}) of N meets the GL(2) block", i + 1, j + 1));
                        continue;
                    }
                    // c1/c4 = ω_μ ν^{2s}
                    let ratio = mu.central_character().times_nu(&(nu_shift * rat(2)));
                    let ratio = if i == 0 { ratio } else { ratio.inv() };
                    if ratio.is_nu_power() != Some(rat(1)) {
                        out.push(format!("c{}/c{} = ν", i + 1, j + 1));
                    }
                }
            }
        }
        out
    }

    pub fn is_admissible(&self) -> bool {
        self.admissibility_violations().is_empty()
    }
}

/// The representations sharing an L-parameter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LPacket {
    pub members: Vec<CaseTag>,
    pub contains_generic: bool,
    pub possible_supercuspidal_member: bool,
}

impl RepSpec {
    /// Checks that exactly the inputs of the row are present and come from one
    /// registry. Row conditions are checked by [`RepSpec::validate`].
    pub fn new(case: CaseTag, inputs: Inputs) -> Result<Self, RepsError> {
        let required = case.required_inputs();
        for &k in required {
            if !inputs.has(k) {
                return Err(RepsError::MissingInput { case, input: k.key() });
            }
        }
        for k in [
            InputKind::Chi1,
            InputKind::Chi2,
            InputKind::Chi,
            InputKind::Sigma,
            InputKind::Xi,
            InputKind::Pi,
        ] {
            if inputs.has(k) && !required.contains(&k) {
                return Err(RepsError::UnexpectedInput { case, input: k.key() });
            }
        }
        let mixed = {
            let mut chars = inputs.characters();
            let first = chars.next().expect("every row has an input").registry_id();
            chars.any(|c| c.registry_id() != first)
        };
        if mixed {
            return Err(CharError::RegistryMismatch.into());
        }
        Ok(RepSpec {
            case,
            inputs,
            siegel_form: None,
        })
    }

    pub fn case_i(chi1: Character, chi2: Character, sigma: Character) -> Result<Self, RepsError> {
        Self::new(
            CaseTag::I,
            Inputs {
                chi1: Some(chi1),
                chi2: Some(chi2),
                sigma: Some(sigma),
                ..Inputs::default()
            },
        )
    }

    /// Cases II and III.
    pub fn with_chi_sigma(case: CaseTag, chi: Character, sigma: Character) -> Result<Self, RepsError> {
        Self::new(
            case,
            Inputs {
                chi: Some(chi),
                sigma: Some(sigma),
                ..Inputs::default()
            },
        )
    }

    /// Cases IV and VI.
    pub fn with_sigma(case: CaseTag, sigma: Character) -> Result<Self, RepsError> {
        Self::new(
            case,
            Inputs {
                sigma: Some(sigma),
                ..Inputs::default()
            },
        )
    }

    /// Case V.
    pub fn with_xi_sigma(case: CaseTag, xi: Character, sigma: Character) -> Result<Self, RepsError> {
        Self::new(
            case,
            Inputs {
                xi: Some(xi),
                sigma: Some(sigma),
                ..Inputs::default()
            },
        )
    }

    pub fn case_vii(chi: Character, pi: SupercuspidalGL2) -> Result<Self, RepsError> {
        Self::new(
            CaseTag::VII,
            Inputs {
                chi: Some(chi),
                pi: Some(pi),
                ..Inputs::default()
            },
        )
    }

    /// Case VIII.
    pub fn with_pi(case: CaseTag, pi: SupercuspidalGL2) -> Result<Self, RepsError> {
        Self::new(
            case,
            Inputs {
                pi: Some(pi),
                ..Inputs::default()
            },
        )
    }

    /// Case IX.
    pub fn with_xi_pi(case: CaseTag, xi: Character, pi: SupercuspidalGL2) -> Result<Self, RepsError> {
        Self::new(
            case,
            Inputs {
                xi: Some(xi),
                pi: Some(pi),
                ..Inputs::default()
            },
        )
    }

    /// Cases X and XI.
    pub fn with_pi_sigma(case: CaseTag, pi: SupercuspidalGL2, sigma: Character) -> Result<Self, RepsError> {
        Self::new(
            case,
            Inputs {
                pi: Some(pi),
                sigma: Some(sigma),
                ..Inputs::default()
            },
        )
    }

    /// Sets the symmetric form `S` of the IXa nilpotent (default: identity).
    pub fn with_siegel_form(mut self, s: SymmetricForm) -> Result<Self, RepsError> {
        if self.case != CaseTag::IXa {
            return Err(RepsError::UnexpectedForm);
        }
        self.siegel_form = Some(s);
        Ok(self)
    }

    /// The row with generic inputs in `reg`: free `chi1`, `chi2`, `chi`,
    /// `sigma`, a quadratic `xi`, and `pi` with central character `omega_pi`
    /// (trivial in case XI) and self-twist `xi` in case IX.
    pub fn generic(case: CaseTag, reg: &Registry) -> Result<Self, RepsError> {
        let g = |name: &str| reg.generic(name);
        let mut inputs = Inputs::default();
        for &k in case.required_inputs() {
            match k {
                InputKind::Chi1 => inputs.chi1 = Some(g("chi1")?),
                InputKind::Chi2 => inputs.chi2 = Some(g("chi2")?),
                InputKind::Chi => inputs.chi = Some(g("chi")?),
                InputKind::Sigma => inputs.sigma = Some(g("sigma")?),
                InputKind::Xi => inputs.xi = Some(reg.torsion("xi", 2)?),
                InputKind::Pi => {
                    let omega = if case.family() == "XI" {
                        reg.trivial()
                    } else {
                        g("omega_pi")?
                    };
                    let twists = if case.family() == "IX" {
                        vec![reg.declare("xi", Some(2))?]
                    } else {
                        Vec::new()
                    };
                    inputs.pi = Some(SupercuspidalGL2::new("pi", omega, twists)?);
                }
            }
        }
        Self::new(case, inputs)
    }

    pub fn case(&self) -> CaseTag {
        self.case
    }

    pub fn inputs(&self) -> &Inputs {
        &self.inputs
    }

    pub fn siegel_form(&self) -> Option<&SymmetricForm> {
        self.siegel_form.as_ref()
    }

    /// Any input character, used to reach the registry.
    fn anchor(&self) -> &Character {
        self.inputs.characters().next().expect("every row has an input")
    }

    fn one(&self) -> Character {
        self.anchor().trivial_like()
    }

    fn nu(&self, r: Rational) -> Character {
        self.one().times_nu(&r)
    }

    fn chi1(&self) -> &Character {
        self.inputs.chi1.as_ref().expect("validated inputs")
    }
    fn chi2(&self) -> &Character {
        self.inputs.chi2.as_ref().expect("validated inputs")
    }
    fn chi(&self) -> &Character {
        self.inputs.chi.as_ref().expect("validated inputs")
    }
    fn sigma(&self) -> &Character {
        self.inputs.sigma.as_ref().expect("validated inputs")
    }
    fn xi(&self) -> &Character {
        self.inputs.xi.as_ref().expect("validated inputs")
    }
    fn pi(&self) -> &SupercuspidalGL2 {
        self.inputs.pi.as_ref().expect("validated inputs")
    }

    /// The row conditions, labelled as printed in the catalogue.
    pub fn conditions(&self) -> ConditionSet {
        let one = self.one();
        let nu = |r: i64| self.nu(rat(r));
        let pm = |r: Rational| vec![self.nu(r.clone()), self.nu(-r)];
        let mut cs = ConditionSet::default();
        match self.case.family() {
            "I" => {
                let (c1, c2) = (self.chi1(), self.chi2());
                cs.push(Condition::avoids("χ₁∉{ν^{±1}}", c1.clone(), pm(rat(1))));
                cs.push(Condition::avoids("χ₂∉{ν^{±1}}", c2.clone(), pm(rat(1))));
                let mut excluded = Vec::new();
                for a in [1, -1] {
                    for b in [1, -1] {
                        excluded.push(&nu(a) * &c2.pow(b));
                    }
                }
                cs.push(Condition::avoids("χ₁≠ν^{±1}χ₂^{±1}", c1.clone(), excluded));
            }
            "II" => {
                let chi = self.chi();
                cs.push(Condition::avoids("χ²≠ν^{±1}", chi.pow(2), pm(rat(1))));
                cs.push(Condition::avoids("χ≠ν^{±3/2}", chi.clone(), pm(ratio(3, 2))));
            }
            "III" => {
                let mut excluded = vec![one.clone()];
                excluded.extend(pm(rat(2)));
                cs.push(Condition::avoids("χ∉{1,ν^{±2}}", self.chi().clone(), excluded));
            }
            "V" => {
                cs.push(Condition::equals("ξ²=1", self.xi().pow(2), one.clone()));
                cs.push(Condition::avoids("ξ≠1", self.xi().clone(), vec![one]));
            }
            "VII" => {
                let chi = self.chi();
                cs.push(Condition::avoids("χ≠1", chi.clone(), vec![one.clone()]));
                let excluded = self
                    .pi()
                    .self_twists()
                    .iter()
                    .flat_map(|s| [one.times_symbol(s, 1).times_nu(&rat(1)), one.times_symbol(s, 1).times_nu(&rat(-1))])
                    .collect();
                cs.push(Condition::avoids("χ≠ν^{±1}ξ (ξπ=π)", chi.clone(), excluded));
            }
            "IX" => {
                cs.push(Condition::avoids("ξ≠1", self.xi().clone(), vec![one.clone()]));
                let allowed = self
                    .pi()
                    .self_twists()
                    .iter()
                    .map(|s| one.times_symbol(s, 1))
                    .collect();
                cs.push(Condition::one_of("ξπ=π", self.xi().clone(), allowed));
            }
            "X" => {
                cs.push(Condition::avoids(
                    "ω_π≠ν^{±1}",
                    self.pi().central_character().clone(),
                    pm(rat(1)),
                ));
            }
            "XI" => {
                cs.push(Condition::equals(
                    "ω_π=1",
                    self.pi().central_character().clone(),
                    one,
                ));
            }
            _ => {}
        }
        cs
    }

    /// Labels of the violated row conditions; empty when valid.
    pub fn validate(&self) -> Vec<String> {
        self.conditions().violated_labels()
    }

    pub fn is_valid(&self) -> bool {
        self.conditions().all_hold()
    }

    fn ensure_valid(&self) -> Result<(), RepsError> {
        let violations = self.validate();
        if violations.is_empty() {
            Ok(())
        } else {
            Err(RepsError::Invalid {
                case: self.case,
                violations,
            })
        }
    }

    /// The L-parameter `(ρ, N)` of the row.
    pub fn build_parameter(&self) -> Result<WDParameter, RepsError> {
        use CaseTag::*;
        use StandardNilpotent as N;
        self.ensure_valid()?;
        let h = |k: i64| self.nu(ratio(k, 2));
        let diag = |c: [Character; 4], n: StandardNilpotent| WDParameter {
            semisimple: Semisimple::Diagonal(c),
            nilpotent: n,
        };
        let case = self.case;
        Ok(match case.family() {
            "I" => {
                let (c1, c2, s) = (self.chi1(), self.chi2(), self.sigma());
                diag([&(c1 * c2) * s, c1 * s, c2 * s, s.clone()], N::Zero)
            }
            "II" => {
                let (chi, s) = (self.chi(), self.sigma());
                let cs = chi * s;
                let c = [&chi.pow(2) * s, &h(1) * &cs, &h(-1) * &cs, s.clone()];
                diag(c, if case == IIa { N::N1 } else { N::Zero })
            }
            "III" => {
                let (chi, s) = (self.chi(), self.sigma());
                let cs = chi * s;
                let c = [&h(1) * &cs, &h(-1) * &cs, &h(1) * s, &h(-1) * s];
                diag(c, if case == IIIa { N::N4 } else { N::Zero })
            }
            "IV" => {
                let s = self.sigma();
                let c = [&h(3) * s, &h(1) * s, &h(-1) * s, &h(-3) * s];
                let n = match case {
                    IVa => N::N5,
                    IVb => N::N4,
                    IVc => N::N1,
                    _ => N::Zero,
                };
                diag(c, n)
            }
            "V" => {
                let (xi, s) = (self.xi(), self.sigma());
                // Vb is the ξ-twist of Vc: its parameter is that of Vc(ξσ).
                let s = if case == Vb { xi * s } else { s.clone() };
                let xs = xi * &s;
                let c = [&h(1) * &s, &h(1) * &xs, &h(-1) * &xs, &h(-1) * &s];
                let n = match case {
                    Va => N::N3,
                    Vb | Vc => N::N2,
                    _ => N::Zero,
                };
                diag(c, n)
            }
            "VI" => {
                let s = self.sigma();
                let c = [&h(1) * s, &h(1) * s, &h(-1) * s, &h(-1) * s];
                let n = match case {
                    VIa | VIb => N::N3,
                    VIc => N::N1,
                    _ => N::Zero,
                };
                diag(c, n)
            }
            "VII" | "VIII" | "IX" => {
                let (top_twist, bottom_twist) = match case.family() {
                    "VII" => (self.chi().clone(), self.one()),
                    "VIII" => (self.one(), self.one()),
                    _ => (self.xi().times_nu(&ratio(1, 2)), h(-1)),
                };
                let nilpotent = if case == IXa {
                    N::SiegelSym(self.siegel_form.clone().unwrap_or_else(SymmetricForm::identity))
                } else {
                    N::Zero
                };
                WDParameter {
                    semisimple: Semisimple::SiegelBlock {
                        mu: self.pi().clone(),
                        top_twist,
                        bottom_twist,
                    },
                    nilpotent,
                }
            }
            _ => WDParameter {
                semisimple: Semisimple::KlingenBlock {
                    mu: self.pi().clone(),
                    sigma: self.sigma().clone(),
                    nu_shift: if case == X { rat(0) } else { ratio(1, 2) },
                },
                nilpotent: if case == XIa { N::N2 } else { N::Zero },
            },
        })
    }

    /// The central character as listed in the catalogue.
    pub fn central_character(&self) -> Character {
        match self.case.family() {
            "I" => &(self.chi1() * self.chi2()) * &self.sigma().pow(2),
            "II" => &self.chi().pow(2) * &self.sigma().pow(2),
            "III" => self.chi() * &self.sigma().pow(2),
            "IV" | "V" | "VI" | "XI" => self.sigma().pow(2),
            "VII" => self.chi() * self.pi().central_character(),
            "VIII" => self.pi().central_character().clone(),
            "IX" => self.pi().central_character() * self.xi(),
            _ => self.pi().central_character() * &self.sigma().pow(2),
        }
    }

    pub fn is_generic(&self) -> bool {
        self.case.is_generic()
    }

    pub fn l_packet(&self) -> LPacket {
        use CaseTag::*;
        let members = match self.case {
            VIa | VIb => vec![VIa, VIb],
            VIIIa | VIIIb => vec![VIIIa, VIIIb],
            c => vec![c],
        };
        LPacket {
            contains_generic: members.iter().any(|c| c.is_generic()),
            possible_supercuspidal_member: matches!(self.case, Va | XIa),
            members,
        }
    }

    /// `τ ⊗ Π`: multiplies `σ` by `τ` for Borel and Klingen rows, replaces `π`
    /// by `τπ` for Siegel rows.
    pub fn twist(&self, tau: &Character) -> Result<Self, RepsError> {
        let mut out = self.clone();
        match self.case.support() {
            Support::Siegel => out.inputs.pi = Some(self.pi().twisted(tau)?),
            _ => out.inputs.sigma = Some(self.sigma().try_mul(tau)?),
        }
        Ok(out)
    }

    /// Free symbols occurring in the inputs; these are the symbols a
    /// degeneration may specialize.
    pub fn free_symbols(&self) -> Vec<Symbol> {
        let mut out: Vec<Symbol> = Vec::new();
        for c in self.inputs.characters() {
            for s in c.free_symbols() {
                if !out.contains(s) {
                    out.push(s.clone());
                }
            }
        }
        out.sort();
        out
    }

    /// The same row with `s` applied to every input.
    pub fn substitute(&self, s: &Substitution) -> Result<Self, RepsError> {
        let sub = |c: &Option<Character>| c.as_ref().map(|c| c.substitute(s)).transpose();
        Ok(RepSpec {
            case: self.case,
            inputs: Inputs {
                chi1: sub(&self.inputs.chi1)?,
                chi2: sub(&self.inputs.chi2)?,
                chi: sub(&self.inputs.chi)?,
                sigma: sub(&self.inputs.sigma)?,
                xi: sub(&self.inputs.xi)?,
                pi: self.inputs.pi.as_ref().map(|p| p.substitute(s)).transpose()?,
            },
            siegel_form: self.siegel_form.clone(),
        })
    }
}

pub fn validate(spec: &RepSpec) -> Vec<String> {
    spec.validate()
}

pub fn build_parameter(spec: &RepSpec) -> Result<WDParameter, RepsError> {
    spec.build_parameter()
}

pub fn central_character(spec: &RepSpec) -> Character {
    spec.central_character()
}

pub fn twist(spec: &RepSpec, tau: &Character) -> Result<RepSpec, RepsError> {
    spec.twist(tau)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chars::parse_character;

    fn c(reg: &Registry, s: &str) -> Character {
        parse_character(s, reg).unwrap()
    }

    #[test]
    fn tags_round_trip() {
        for t in CaseTag::ALL {
            assert_eq!(t.as_str().parse::<CaseTag>().unwrap(), t);
        }
        assert!("IIc".parse::<CaseTag>().is_err());
        assert_eq!(CaseTag::VIIIb.family(), "VIII");
        assert_eq!(CaseTag::VIIIb.subtype(), Some('b'));
        assert_eq!(CaseTag::X.subtype(), None);
    }

    #[test]
    fn generic_rows_valid_and_admissible() {
        for t in CaseTag::ALL {
            let reg = Registry::new();
            let spec = RepSpec::generic(t, &reg).unwrap();
            assert!(spec.validate().is_empty(), "{t}: {:?}", spec.validate());
            let p = spec.build_parameter().unwrap();
            assert!(p.is_admissible(), "{t}: {:?}", p.admissibility_violations());
            assert_eq!(p.similitude(), spec.central_character(), "{t}");
        }
    }

    #[test]
    fn row_ii_condition() {
        let reg = Registry::new();
        let spec =
            RepSpec::with_chi_sigma(CaseTag::IIa, c(&reg, "nu^(1/2)"), c(&reg, "sigma")).unwrap();
        assert_eq!(spec.validate(), vec!["χ²≠ν^{±1}".to_string()]);
        assert!(matches!(
            spec.build_parameter(),
            Err(RepsError::Invalid { .. })
        ));
    }

    #[test]
    fn row_ix_needs_self_twist() {
        let reg = Registry::new();
        let xi = reg.torsion("xi", 2).unwrap();
        let pi = SupercuspidalGL2::new("pi", c(&reg, "omega_pi"), []).unwrap();
        let spec = RepSpec::with_xi_pi(CaseTag::IXa, xi, pi).unwrap();
        assert_eq!(spec.validate(), vec!["ξπ=π".to_string()]);
    }

    #[test]
    fn generic_case_i_is_valid_and_degenerate_one_is_not() {
        let reg = Registry::new();
        let ok = RepSpec::case_i(c(&reg, "chi1"), c(&reg, "chi2"), c(&reg, "sigma")).unwrap();
        assert!(ok.is_valid());
        let bad =
            RepSpec::case_i(c(&reg, "chi2*nu"), c(&reg, "chi2"), c(&reg, "sigma")).unwrap();
        assert_eq!(bad.validate(), vec!["χ₁≠ν^{±1}χ₂^{±1}".to_string()]);
    }

    #[test]
    fn parameters_match_catalogue() {
        let reg = Registry::new();
        let iv = RepSpec::generic(CaseTag::IVd, &reg).unwrap().build_parameter().unwrap();
        let expect = ["sigma*nu^(3/2)", "sigma*nu^(1/2)", "sigma*nu^(-1/2)", "sigma*nu^(-3/2)"];
        match &iv.semisimple {
            Semisimple::Diagonal(d) => {
                for (x, e) in d.iter().zip(expect) {
                    assert_eq!(x.to_string(), e);
                }
            }
            _ => panic!("diagonal expected"),
        }
        assert_eq!(iv.nilpotent, StandardNilpotent::Zero);
        let a = RepSpec::generic(CaseTag::VIa, &reg).unwrap().build_parameter().unwrap();
        let b = RepSpec::generic(CaseTag::VIb, &reg).unwrap().build_parameter().unwrap();
        assert_eq!(a, b);
        assert_eq!(a.nilpotent, StandardNilpotent::N3);
        let xia = RepSpec::generic(CaseTag::XIa, &reg).unwrap().build_parameter().unwrap();
        assert_eq!(xia.nilpotent, StandardNilpotent::N2);
        assert!(matches!(
            xia.semisimple,
            Semisimple::KlingenBlock { ref nu_shift, .. } if *nu_shift == ratio(1, 2)
        ));
    }

    #[test]
    fn central_characters() {
        let reg = Registry::new();
        let cc = |t| RepSpec::generic(t, &reg).unwrap().central_character().to_string();
        assert_eq!(cc(CaseTag::I), "chi1*chi2*sigma^2");
        assert_eq!(cc(CaseTag::X), "omega_pi*sigma^2");
        assert_eq!(cc(CaseTag::IVb), "sigma^2");
        assert_eq!(cc(CaseTag::IXb), "omega_pi*xi");
    }

    #[test]
    fn packets() {
        let reg = Registry::new();
        let p = RepSpec::generic(CaseTag::VIb, &reg).unwrap().l_packet();
        assert_eq!(p.members, vec![CaseTag::VIa, CaseTag::VIb]);
        assert!(p.contains_generic);
        let p = RepSpec::generic(CaseTag::Va, &reg).unwrap().l_packet();
        assert!(p.possible_supercuspidal_member);
        let p = RepSpec::generic(CaseTag::I, &reg).unwrap().l_packet();
        assert_eq!(p.members, vec![CaseTag::I]);
        assert!(!p.possible_supercuspidal_member);
    }

    #[test]
    fn twisting() {
        let reg = Registry::new();
        let tau = c(&reg, "tau");
        let iva = RepSpec::generic(CaseTag::IVa, &reg).unwrap();
        let t = iva.twist(&tau).unwrap();
        assert_eq!(t.inputs().sigma.as_ref().unwrap().to_string(), "sigma*tau");
        let vii = RepSpec::generic(CaseTag::VII, &reg).unwrap();
        let t = vii.twist(&tau).unwrap();
        assert_eq!(
            t.inputs().pi.as_ref().unwrap().central_character().to_string(),
            "omega_pi*tau^2"
        );
        assert_eq!(iva.twist(&reg.trivial()).unwrap(), iva);
    }

    #[test]
    fn missing_and_unexpected_inputs() {
        let reg = Registry::new();
        assert!(matches!(
            RepSpec::with_sigma(CaseTag::I, c(&reg, "sigma")),
            Err(RepsError::MissingInput { input: "chi1", .. })
        ));
        assert!(matches!(
            RepSpec::with_chi_sigma(CaseTag::IVa, c(&reg, "chi"), c(&reg, "sigma")),
            Err(RepsError::UnexpectedInput { input: "chi", .. })
        ));
    }
}
