//! Self-contained checks run by `gsp4-adjoint verify`.
//!
//! Every randomized draw comes from a `ChaCha8Rng` seeded with the seed
//! printed in the report header, so a run is reproducible from its output.

use std::fmt;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::chars::{parse_character, parse_latex_character, Character, Registry, Substitution, Symbol};
use crate::engine::{self, klingen_table, siegel_table, LeviBlockTable};
use crate::lfun::{self, pole_order_at_one, render, Format};
use crate::qlinalg::{self, ratio, RatMatrix, Rational};
use crate::reps::{CaseTag, RepSpec, Semisimple};
use crate::sp4::{self, Root, Sp4Element, StandardNilpotent, SymmetricForm};

pub const DEFAULT_SEED: u64 = 0x5eed_6509;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Scope {
    All,
    Linalg,
    Tables,
    Gpr,
    Twist,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl CheckResult {
    fn from_failures(id: u8, name: &'static str, total: usize, failures: Vec<String>) -> Self {
        let passed = failures.is_empty();
        let detail = if passed {
            format!("{total} checked")
        } else {
            let shown: Vec<&str> = failures.iter().take(5).map(String::as_str).collect();
            format!("{} of {total} failed: {}", failures.len(), shown.join("; "))
        };
        CheckResult {
            id,
            name,
            passed,
            detail,
        }
    }
}

#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub seed: u64,
    pub checks: Vec<CheckResult>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "# seed = {}", self.seed)?;
        for c in &self.checks {
            let tag = if c.passed { "PASS" } else { "FAIL" };
            writeln!(f, "{tag} [{:>2}] {}: {}", c.id, c.name, c.detail)?;
        }
        Ok(())
    }
}

pub fn run(scope: Scope, seed: u64) -> VerifyReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut checks = Vec::new();
    let want = |s: Scope| scope == Scope::All || scope == s;
    if want(Scope::Tables) {
        checks.push(table2_reproduction());
        checks.push(pole_column());
    }
    if want(Scope::Gpr) {
        checks.push(gpr());
    }
    if want(Scope::Linalg) {
        checks.push(kernels());
        checks.push(ixa_linear_algebra(&mut rng, 100));
    }
    if want(Scope::Gpr) {
        checks.push(admissibility());
    }
    if want(Scope::Twist) {
        checks.push(twist_invariance(&mut rng, 20));
    }
    if want(Scope::Linalg) {
        checks.push(levi_decomposition(&mut rng, 50));
    }
    if want(Scope::Tables) {
        checks.push(degree_bookkeeping());
    }
    if scope == Scope::All {
        checks.push(properties(&mut rng, 200));
    }
    checks.sort_by_key(|c| c.id);
    VerifyReport { seed, checks }
}

fn generic_rows() -> Vec<(CaseTag, Registry, RepSpec)> {
    CaseTag::ALL
        .iter()
        .map(|&case| {
            let reg = Registry::new();
            let spec = RepSpec::generic(case, &reg).expect("generic rows are well formed");
            (case, reg, spec)
        })
        .collect()
}

pub fn table2_reproduction() -> CheckResult {
    let mut failures = Vec::new();
    let rows = generic_rows();
    for (case, reg, spec) in &rows {
        let derived = match engine::derive(spec) {
            Ok(l) => l,
            Err(e) => {
                failures.push(format!("{case}: {e}"));
                continue;
            }
        };
        if derived != engine::table2_closed_form(spec) {
            failures.push(format!("{case}: derived {derived}"));
        }
        let pis: Vec<_> = spec.inputs().pi.iter().cloned().collect();
        let latex = render(&derived, Format::Latex);
        match lfun::parse_latex(&latex, reg, &pis) {
            Ok(back) if back == derived => {}
            _ => failures.push(format!("{case}: LaTeX form does not read back")),
        }
    }
    CheckResult::from_failures(1, "Table 2 reproduction", rows.len(), failures)
}

pub fn pole_column() -> CheckResult {
    let mut failures = Vec::new();
    let rows = generic_rows();
    for (case, reg, spec) in &rows {
        match engine::pole_report_for(spec) {
            Ok(r) if r.order_label() == engine::listed_order(*case) => {}
            Ok(r) => failures.push(format!("{case}: got {}", r.order_label())),
            Err(e) => failures.push(format!("{case}: {e}")),
        }
        if *case == CaseTag::IIIb {
            let r = engine::pole_report_for(spec).expect("IIIb derives");
            let chi = reg.lookup("chi").expect("chi declared");
            let mut got: Vec<String> = r
                .conditional_branches
                .iter()
                .map(|b| format!("{}:{}", b.substitution, b.order))
                .collect();
            got.sort();
            let want = vec![format!("{}=nu:2", chi.name()), format!("{}=nu^-1:2", chi.name())];
            if r.generic_order != 1 || got != want {
                failures.push(format!("IIIb branches {got:?}"));
            }
        }
    }
    CheckResult::from_failures(2, "pole order at s=1", rows.len(), failures)
}

pub fn gpr() -> CheckResult {
    let mut failures = Vec::new();
    let rows = generic_rows();
    let mut total = 0;
    for (case, _, spec) in &rows {
        total += 1;
        match engine::gpr_verdict(spec) {
            Ok(v) if v.theorem_holds => {}
            Ok(v) => failures.push(format!("{case}: {:?}", v.report)),
            Err(e) => failures.push(format!("{case}: {e}")),
        }
        // Each conditional branch, re-derived from the specialised inputs.
        if let Ok(r) = engine::pole_report_for(spec) {
            for b in &r.conditional_branches {
                total += 1;
                let Ok(special) = spec.substitute(&b.substitution) else {
                    failures.push(format!("{case} {}: substitution failed", b.substitution));
                    continue;
                };
                match engine::derive(&special) {
                    Ok(l) => {
                        let order = pole_order_at_one(&l);
                        if order != b.order || (order == 0) != special.l_packet().contains_generic {
                            failures.push(format!("{case} {}: order {order}", b.substitution));
                        }
                    }
                    Err(e) => failures.push(format!("{case} {}: {e}", b.substitution)),
                }
            }
        }
    }
    CheckResult::from_failures(3, "GP-R criterion", total, failures)
}

pub fn kernels() -> CheckResult {
    use StandardNilpotent::*;
    let mut failures = Vec::new();
    let cases = [(Zero, 10), (N1, 6), (N2, 6), (N3, 4), (N4, 4), (N5, 2)];
    for (n, dim) in &cases {
        let Ok(ad) = sp4::ad_in_basis(n) else {
            failures.push(format!("{}: not in sp(4)", n.tag()));
            continue;
        };
        let kernel = qlinalg::kernel_basis(&ad);
        if kernel.len() != *dim {
            failures.push(format!("{}: dim {}", n.tag(), kernel.len()));
        }
        if let Some(shown) = n.exhibited_kernel() {
            let shown: Vec<_> = shown.iter().map(Sp4Element::coordinates).collect();
            if !qlinalg::same_row_space(&kernel, &shown).unwrap_or(false) {
                failures.push(format!("{}: span differs from the exhibited generators", n.tag()));
            }
        } else if *dim != 10 {
            failures.push(format!("{}: no exhibited generators", n.tag()));
        }
    }
    CheckResult::from_failures(4, "kernels of ad N", cases.len(), failures)
}

fn random_rational(rng: &mut ChaCha8Rng, bound: i64) -> Rational {
    ratio(rng.gen_range(-bound..=bound), rng.gen_range(1..=bound))
}

pub fn random_symmetric_form(rng: &mut ChaCha8Rng) -> SymmetricForm {
    loop {
        let (a, b, d) = (random_rational(rng, 6), random_rational(rng, 6), random_rational(rng, 6));
        if let Ok(s) = SymmetricForm::from_entries(a, b, d) {
            return s;
        }
    }
}

pub fn ixa_linear_algebra(rng: &mut ChaCha8Rng, draws: usize) -> CheckResult {
    let mut failures = Vec::new();
    let must_contain: Vec<Vec<Rational>> = [Root::TwoE1, Root::E1PlusE2, Root::TwoE2]
        .iter()
        .map(|r| r.vector().coordinates())
        .collect();
    for _ in 0..draws {
        let s = random_symmetric_form(rng);
        let label = format!("S={:?}", s.matrix().row_vectors());
        let a0 = sp4::a0_matrix(s.matrix()).expect("valid form");
        if !sp4::a0_relation_holds(&a0, &s.b_block()) {
            failures.push(format!("{label}: A₀ relation"));
        }
        let n = StandardNilpotent::SiegelSym(s.clone());
        let ad = sp4::ad_in_basis(&n).expect("Siegel nilpotent lies in sp(4)");
        let kernel = qlinalg::kernel_basis(&ad);
        if kernel.len() != 4 || ad.rank() != 6 {
            failures.push(format!("{label}: kernel {} image {}", kernel.len(), ad.rank()));
            continue;
        }
        let mut wanted = must_contain.clone();
        wanted.push(sp4::a0_line_element(&s).coordinates());
        if !qlinalg::is_subspace(&wanted, &kernel).unwrap_or(false) {
            failures.push(format!("{label}: kernel misses a generator"));
        }
    }
    CheckResult::from_failures(5, "case IXa linear algebra", draws, failures)
}

pub fn admissibility() -> CheckResult {
    let mut failures = Vec::new();
    let rows = generic_rows();
    for (case, _, spec) in &rows {
        let p = match spec.build_parameter() {
            Ok(p) => p,
            Err(e) => {
                failures.push(format!("{case}: {e}"));
                continue;
            }
        };
        for v in p.admissibility_violations() {
            failures.push(format!("{case}: {v}"));
        }
        if let Semisimple::Diagonal(c) = &p.semisimple {
            if &c[0] * &c[3] != &c[1] * &c[2] {
                failures.push(format!("{case}: c1c4 ≠ c2c3"));
            }
        }
    }
    CheckResult::from_failures(6, "parameter admissibility", rows.len(), failures)
}

/// A character in `reg` built from the symbols `tau` (free), `eps` (order 2)
/// and a rational power of ν.
pub fn random_twist(rng: &mut ChaCha8Rng, reg: &Registry) -> Character {
    let tau = reg.generic("tau").expect("fresh symbol");
    let eps = reg.torsion("eps", 2).expect("fresh symbol");
    let c = &tau.pow(rng.gen_range(-3..=3)) * &eps.pow(rng.gen_range(0..=1));
    c.times_nu(&random_rational(rng, 4))
}

pub fn twist_invariance(rng: &mut ChaCha8Rng, draws: usize) -> CheckResult {
    let mut failures = Vec::new();
    let rows = generic_rows();
    for (case, reg, spec) in &rows {
        let base = engine::derive(spec).expect("generic rows derive");
        let omega = spec.central_character();
        for _ in 0..draws {
            let tau = random_twist(rng, reg);
            let twisted = match spec.twist(&tau) {
                Ok(t) => t,
                Err(e) => {
                    failures.push(format!("{case} by {tau}: {e}"));
                    continue;
                }
            };
            if engine::derive(&twisted).ok().as_ref() != Some(&base) {
                failures.push(format!("{case} by {tau}: L-function changed"));
            }
            if twisted.central_character() != &tau.pow(2) * &omega {
                failures.push(format!("{case} by {tau}: central character"));
            }
        }
    }
    CheckResult::from_failures(7, "twist invariance", rows.len() * draws, failures)
}

fn random_gl2(rng: &mut ChaCha8Rng) -> RatMatrix {
    loop {
        let rows = (0..2)
            .map(|_| (0..2).map(|_| random_rational(rng, 5)).collect())
            .collect();
        let m = RatMatrix::from_rows(rows).expect("2x2");
        if m.determinant().is_some_and(|d| !d.is_zero()) {
            return m;
        }
    }
}

fn random_nonzero(rng: &mut ChaCha8Rng) -> Rational {
    loop {
        let x = random_rational(rng, 5);
        if !x.is_zero() {
            return x;
        }
    }
}

/// `diag(A, x·K·ᵗA⁻¹·K)` with `K = [[0,1],[1,0]]`.
pub fn random_siegel_levi(rng: &mut ChaCha8Rng) -> RatMatrix {
    let a = random_gl2(rng);
    let x = random_nonzero(rng);
    let k = sp4::swap2();
    let d = (&(&k * &a.transpose().inverse().expect("invertible")) * &k).scale(&x);
    let mut g = RatMatrix::zeros(4, 4);
    for i in 0..2 {
        for j in 0..2 {
            g[(i, j)] = a[(i, j)].clone();
            g[(i + 2, j + 2)] = d[(i, j)].clone();
        }
    }
    g
}

/// `diag(x, A, det(A)/x)`.
pub fn random_klingen_levi(rng: &mut ChaCha8Rng) -> RatMatrix {
    let a = random_gl2(rng);
    let x = random_nonzero(rng);
    let mut g = RatMatrix::zeros(4, 4);
    g[(0, 0)] = x.clone();
    for i in 0..2 {
        for j in 0..2 {
            g[(i + 1, j + 1)] = a[(i, j)].clone();
        }
    }
    g[(3, 3)] = a.determinant().expect("square") / x;
    g
}

/// Whether `ᵗg·J·g` is a scalar multiple of `J`.
pub fn is_similitude(g: &RatMatrix) -> bool {
    let j = sp4::symplectic_form();
    let m = &(&g.transpose() * &j) * g;
    let lambda = &m[(0, 3)] / &j[(0, 3)];
    m == j.scale(&lambda)
}

fn table_is_stable(table: &LeviBlockTable, g: &RatMatrix) -> Result<(), String> {
    let g_inv = g.inverse().ok_or("singular Levi element")?;
    for block in &table.blocks {
        let span: Vec<_> = block.basis.iter().map(Sp4Element::coordinates).collect();
        for x in &block.basis {
            let y = Sp4Element::new(x.conjugate_by(g, &g_inv)).map_err(|e| e.to_string())?;
            if !qlinalg::is_subspace(&[y.coordinates()], &span).unwrap_or(false) {
                return Err(format!("{:?} block {} not stable", table.levi, block.label));
            }
        }
    }
    Ok(())
}

pub fn levi_decomposition(rng: &mut ChaCha8Rng, draws: usize) -> CheckResult {
    let mut failures = Vec::new();
    let tables = [
        (siegel_table(), random_siegel_levi as fn(&mut ChaCha8Rng) -> RatMatrix),
        (klingen_table(), random_klingen_levi),
    ];
    for (table, draw) in &tables {
        let all: Vec<_> = table
            .blocks
            .iter()
            .flat_map(|b| b.basis.iter().map(Sp4Element::coordinates))
            .collect();
        if table.dimension() != 10 || qlinalg::span_dimension(&all).ok() != Some(10) {
            failures.push(format!("{:?}: blocks do not span sp(4)", table.levi));
        }
        for _ in 0..draws {
            let g = draw(rng);
            if !is_similitude(&g) {
                failures.push(format!("{:?}: drawn element is not a similitude", table.levi));
            } else if let Err(e) = table_is_stable(table, &g) {
                failures.push(e);
            }
        }
    }
    CheckResult::from_failures(8, "Levi decomposition", 2 * draws, failures)
}

pub fn degree_bookkeeping() -> CheckResult {
    let mut failures = Vec::new();
    let rows = generic_rows();
    for (case, _, spec) in &rows {
        match engine::derive_detailed(spec) {
            Ok(d) if d.accounted_dim() == d.kernel_dim => {}
            Ok(d) => failures.push(format!("{case}: {} vs {}", d.accounted_dim(), d.kernel_dim)),
            Err(e) => failures.push(format!("{case}: {e}")),
        }
    }
    CheckResult::from_failures(9, "degree bookkeeping", rows.len(), failures)
}

struct Pool {
    reg: Registry,
    a: Character,
    b: Character,
    t: Character,
}

impl Pool {
    fn new() -> Self {
        let reg = Registry::new();
        let a = reg.generic("a").expect("fresh");
        let b = reg.generic("b").expect("fresh");
        let t = reg.torsion("t", 3).expect("fresh");
        Pool { reg, a, b, t }
    }

    fn draw(&self, rng: &mut ChaCha8Rng) -> Character {
        let c = &(&self.a.pow(rng.gen_range(-3..=3)) * &self.b.pow(rng.gen_range(-3..=3)))
            * &self.t.pow(rng.gen_range(0..=2));
        c.times_nu(&random_rational(rng, 6))
    }

    fn symbol(&self, c: &Character) -> Symbol {
        c.free_symbols().next().expect("generator").clone()
    }
}

fn random_matrix(rng: &mut ChaCha8Rng) -> RatMatrix {
    let (r, c) = (rng.gen_range(1..=6), rng.gen_range(1..=6));
    let rows = (0..r)
        .map(|_| {
            (0..c)
                .map(|_| {
                    // Sparse entries so that rank deficiency is common.
                    if rng.gen_bool(0.4) {
                        Rational::zero()
                    } else {
                        random_rational(rng, 3)
                    }
                })
                .collect()
        })
        .collect();
    RatMatrix::from_rows(rows).expect("rectangular")
}

pub fn properties(rng: &mut ChaCha8Rng, draws: usize) -> CheckResult {
    let mut failures = Vec::new();
    let pool = Pool::new();
    let one = pool.reg.trivial();
    for i in 0..draws {
        let (x, y, z) = (pool.draw(rng), pool.draw(rng), pool.draw(rng));
        if &(&x * &y) * &z != &x * &(&y * &z) || &x * &y != &y * &x {
            failures.push(format!("#{i}: associativity/commutativity"));
        }
        if &x * &one != x || !(&x * &x.inv()).is_trivial() {
            failures.push(format!("#{i}: identity/inverse"));
        }

        let target = pool.draw(rng).without(&pool.symbol(&pool.a));
        let sub = Substitution::single(pool.symbol(&pool.a), target);
        match (x.substitute(&sub), y.substitute(&sub), (&x * &y).substitute(&sub)) {
            (Ok(sx), Ok(sy), Ok(sxy)) if sxy == &sx * &sy => {}
            _ => failures.push(format!("#{i}: substitution is not a homomorphism")),
        }

        if parse_character(&x.to_string(), &pool.reg).ok().as_ref() != Some(&x)
            || parse_latex_character(&x.to_latex(), &pool.reg).ok().as_ref() != Some(&x)
        {
            failures.push(format!("#{i}: {x} does not round-trip"));
        }
        let l = lfun::LFunction::from_atoms([x.clone(), y.clone(), x.clone()].map(lfun::Atom::char));
        if lfun::parse_plain(&render(&l, Format::Plain), &pool.reg, &[]).ok().as_ref() != Some(&l) {
            failures.push(format!("#{i}: {l} does not round-trip"));
        }

        let m = random_matrix(rng);
        let kernel = qlinalg::kernel_basis(&m);
        let annihilated = kernel
            .iter()
            .all(|v| m.apply(v).is_ok_and(|w| w.iter().all(Zero::is_zero)));
        if m.rank() + kernel.len() != m.cols() || !annihilated {
            failures.push(format!("#{i}: rank-nullity on {}x{}", m.rows(), m.cols()));
        }
    }
    CheckResult::from_failures(10, "property suites", draws, failures)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_run_passes_and_reports_seed() {
        let report = run(Scope::All, DEFAULT_SEED);
        assert!(report.all_passed(), "{report}");
        assert_eq!(report.checks.len(), 10);
        assert!(report.to_string().starts_with(&format!("# seed = {DEFAULT_SEED}")));
    }

    #[test]
    fn scopes_select_subsets() {
        let ids = |s| run(s, 1).checks.iter().map(|c| c.id).collect::<Vec<_>>();
        assert_eq!(ids(Scope::Linalg), vec![4, 5, 8]);
        assert_eq!(ids(Scope::Tables), vec![1, 2, 9]);
        assert_eq!(ids(Scope::Gpr), vec![3, 6]);
        assert_eq!(ids(Scope::Twist), vec![7]);
    }

    #[test]
    fn random_levi_elements_are_similitudes() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..10 {
            assert!(is_similitude(&random_siegel_levi(&mut rng)));
            assert!(is_similitude(&random_klingen_levi(&mut rng)));
        }
    }
}
