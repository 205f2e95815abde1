use gsp4_adjoint::chars::{parse_character, parse_latex_character, Character, Registry, Substitution};
use gsp4_adjoint::cli::{parse_spec_unchecked, print_spec};
use gsp4_adjoint::engine;
use gsp4_adjoint::lfun::{parse_latex, parse_plain, render, Atom, Format, LFunction};
use gsp4_adjoint::qlinalg::{kernel_basis, ratio, RatMatrix};
use gsp4_adjoint::reps::{CaseTag, Inputs, RepSpec};
use num_traits::Zero;
use proptest::prelude::*;

/// Exponents of `a`, `b`, `z` (order 4) and the ν exponent `p/q`.
#[derive(Debug, Clone)]
struct Raw {
    a: i64,
    b: i64,
    z: i64,
    p: i64,
    q: i64,
}

fn raw() -> impl Strategy<Value = Raw> {
    (-4i64..=4, -4i64..=4, 0i64..4, -9i64..=9, 1i64..=4).prop_map(|(a, b, z, p, q)| Raw { a, b, z, p, q })
}

struct Pool {
    reg: Registry,
    a: Character,
    b: Character,
    z: Character,
}

impl Pool {
    fn new() -> Self {
        let reg = Registry::new();
        let a = reg.generic("a").unwrap();
        let b = reg.generic("b").unwrap();
        let z = reg.torsion("z", 4).unwrap();
        Pool { reg, a, b, z }
    }

    fn make(&self, r: &Raw) -> Character {
        (&(&self.a.pow(r.a) * &self.b.pow(r.b)) * &self.z.pow(r.z)).times_nu(&ratio(r.p, r.q))
    }
}

fn case() -> impl Strategy<Value = CaseTag> {
    prop::sample::select(CaseTag::ALL.to_vec())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn character_group_axioms(x in raw(), y in raw(), w in raw()) {
        let p = Pool::new();
        let (x, y, w) = (p.make(&x), p.make(&y), p.make(&w));
        prop_assert_eq!(&(&x * &y) * &w, &x * &(&y * &w));
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&x * &p.reg.trivial(), x.clone());
        prop_assert!((&x * &x.inv()).is_trivial());
        prop_assert_eq!(&x / &y, &x * &y.inv());
        prop_assert_eq!(x.pow(3), &(&x * &x) * &x);
    }

    #[test]
    fn substitution_is_a_homomorphism(x in raw(), y in raw(), t in raw()) {
        let p = Pool::new();
        let a = p.a.free_symbols().next().unwrap().clone();
        let s = Substitution::single(a.clone(), p.make(&t).without(&a));
        let (x, y) = (p.make(&x), p.make(&y));
        prop_assert_eq!(
            (&x * &y).substitute(&s).unwrap(),
            &x.substitute(&s).unwrap() * &y.substitute(&s).unwrap()
        );
        prop_assert_eq!(x.inv().substitute(&s).unwrap(), x.substitute(&s).unwrap().inv());
    }

    #[test]
    fn characters_round_trip(x in raw()) {
        let p = Pool::new();
        let x = p.make(&x);
        prop_assert_eq!(parse_character(&x.to_string(), &p.reg).unwrap(), x.clone());
        prop_assert_eq!(parse_latex_character(&x.to_latex(), &p.reg).unwrap(), x.clone());
        let fresh = Registry::new();
        let y = parse_character(&x.to_declared_string(), &fresh).unwrap();
        prop_assert_eq!(y.to_string(), x.to_string());
    }

    #[test]
    fn lfunctions_round_trip(xs in prop::collection::vec((raw(), 1usize..4), 0..6)) {
        let p = Pool::new();
        let mut l = LFunction::one();
        for (r, m) in &xs {
            l.push(Atom::char(p.make(r)), *m);
        }
        prop_assert_eq!(parse_plain(&render(&l, Format::Plain), &p.reg, &[]).unwrap(), l.clone());
        prop_assert_eq!(parse_latex(&render(&l, Format::Latex), &p.reg, &[]).unwrap(), l.clone());
    }

    #[test]
    fn pole_order_is_additive(xs in prop::collection::vec(raw(), 0..5), ys in prop::collection::vec(raw(), 0..5)) {
        let p = Pool::new();
        let l1 = LFunction::from_atoms(xs.iter().map(|r| Atom::char(p.make(r))));
        let l2 = LFunction::from_atoms(ys.iter().map(|r| Atom::char(p.make(r))));
        prop_assert_eq!(
            l1.product(&l2).pole_order_at_one(),
            l1.pole_order_at_one() + l2.pole_order_at_one()
        );
        prop_assert_eq!(l1.product(&l2).degree(), l1.degree() + l2.degree());
    }

    #[test]
    fn rank_nullity(rows in 1usize..6, cols in 1usize..7, entries in prop::collection::vec(-3i64..=3, 42)) {
        let m = RatMatrix::from_rows(
            (0..rows).map(|r| (0..cols).map(|c| ratio(entries[r * 7 + c], 1)).collect()).collect(),
        ).unwrap();
        let k = kernel_basis(&m);
        prop_assert_eq!(m.rank() + k.len(), cols);
        for v in &k {
            prop_assert!(m.apply(v).unwrap().iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn twisting_keeps_the_adjoint(case in case(), t in raw()) {
        let reg = Registry::new();
        let spec = RepSpec::generic(case, &reg).unwrap();
        let tau = reg.generic("tau").unwrap().pow(t.a).times_nu(&ratio(t.p, t.q));
        let tw = spec.twist(&tau).unwrap();
        prop_assert_eq!(engine::derive(&tw).unwrap(), engine::derive(&spec).unwrap());
        prop_assert_eq!(tw.central_character(), &tau.pow(2) * &spec.central_character());
    }

    /// Specialised inputs: the derivation still agrees with the hand-written
    /// products whenever the row conditions hold.
    #[test]
    fn specialised_inputs_match_closed_form(case in case(), c1 in raw(), c2 in raw(), s in raw()) {
        let p = Pool::new();
        let generic = RepSpec::generic(case, &p.reg).unwrap();
        let g = generic.inputs();
        let pick = |present: &Option<Character>, r: &Raw| present.as_ref().map(|_| p.make(r));
        let inputs = Inputs {
            chi1: pick(&g.chi1, &c1),
            chi2: pick(&g.chi2, &c2),
            chi: pick(&g.chi, &c1),
            sigma: pick(&g.sigma, &s),
            xi: g.xi.clone(),
            pi: g.pi.clone(),
        };
        let spec = RepSpec::new(case, inputs).unwrap();
        prop_assume!(spec.is_valid());
        prop_assert_eq!(engine::derive(&spec).unwrap(), engine::table2_closed_form(&spec));
        let d = engine::derive_detailed(&spec).unwrap();
        prop_assert_eq!(d.accounted_dim(), d.kernel_dim);
    }

    #[test]
    fn spec_text_round_trips(case in case(), c1 in raw(), s in raw()) {
        let p = Pool::new();
        let generic = RepSpec::generic(case, &p.reg).unwrap();
        let g = generic.inputs();
        let inputs = Inputs {
            chi1: g.chi1.as_ref().map(|_| p.make(&c1)),
            chi: g.chi.as_ref().map(|_| p.make(&c1)),
            sigma: g.sigma.as_ref().map(|_| p.make(&s)),
            ..g.clone()
        };
        let spec = RepSpec::new(case, inputs).unwrap();
        prop_assert_eq!(parse_spec_unchecked(&print_spec(&spec), &p.reg).unwrap(), spec);
    }
}
