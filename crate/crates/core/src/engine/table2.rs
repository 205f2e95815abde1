//! The adjoint L-functions of all catalogue rows written out by hand, one
//! product per row. Nothing here goes through the kernel computation.

use crate::chars::Character;
use crate::lfun::{Atom, LFunction};
use crate::qlinalg::{rat, ratio};
use crate::reps::{CaseTag, RepSpec};

/// The pole order at `s = 1` listed for each row; `"1 or 2"` for IIIb.
pub fn listed_order(case: CaseTag) -> &'static str {
    use CaseTag::*;
    match case {
        IIb | IVb | IVc | Vb | Vc | VIc | IXb | XIb => "1",
        IIIb => "1 or 2",
        IVd | Vd => "2",
        VId => "3",
        _ => "0",
    }
}

pub fn table2_closed_form(spec: &RepSpec) -> LFunction {
    use CaseTag::*;
    let inputs = spec.inputs();
    let anchor = [&inputs.chi1, &inputs.chi, &inputs.sigma, &inputs.xi]
        .into_iter()
        .flatten()
        .next()
        .cloned()
        .or_else(|| inputs.pi.as_ref().map(|p| p.central_character().clone()))
        .expect("every row has an input");
    let one = anchor.trivial_like();
    let nu = |num: i64, den: i64| one.times_nu(&ratio(num, den));
    let mut l = LFunction::one();
    let mut ch = |c: Character, m: usize| l.push(Atom::char(c), m);
    let get = |c: &Option<Character>| c.clone().expect("row input");

    match spec.case() {
        I => {
            let (c1, c2) = (get(&inputs.chi1), get(&inputs.chi2));
            ch(one.clone(), 2);
            for c in [
                c1.clone(),
                c1.inv(),
                c2.clone(),
                c2.inv(),
                &c1 * &c2,
                (&c1 * &c2).inv(),
                &c1 / &c2,
                &c2 / &c1,
            ] {
                ch(c, 1);
            }
        }
        IIa => {
            let chi = get(&inputs.chi);
            ch(one.clone(), 1);
            ch(chi.pow(2), 1);
            ch(chi.pow(-2), 1);
            ch(nu(1, 1), 1);
            ch(chi.inv().times_nu(&ratio(1, 2)), 1);
            ch(chi.times_nu(&ratio(1, 2)), 1);
        }
        IIb => {
            let chi = get(&inputs.chi);
            ch(one.clone(), 2);
            ch(chi.pow(2), 1);
            ch(chi.pow(-2), 1);
            ch(nu(1, 1), 1);
            ch(nu(-1, 1), 1);
            ch(chi.times_nu(&ratio(-1, 2)), 1);
            ch(chi.inv().times_nu(&ratio(1, 2)), 1);
            ch(chi.times_nu(&ratio(1, 2)), 1);
            ch(chi.inv().times_nu(&ratio(-1, 2)), 1);
        }
        IIIa => {
            let chi = get(&inputs.chi);
            ch(one.clone(), 1);
            ch(nu(1, 1), 1);
            ch(chi.times_nu(&rat(1)), 1);
            ch(chi.inv().times_nu(&rat(1)), 1);
        }
        IIIb => {
            let chi = get(&inputs.chi);
            ch(one.clone(), 2);
            ch(chi.clone(), 1);
            ch(chi.inv(), 1);
            ch(nu(1, 1), 1);
            ch(nu(-1, 1), 1);
            ch(chi.times_nu(&rat(1)), 1);
            ch(chi.times_nu(&rat(-1)), 1);
            ch(chi.inv().times_nu(&rat(1)), 1);
            ch(chi.inv().times_nu(&rat(-1)), 1);
        }
        IVa => {
            ch(nu(1, 1), 1);
            ch(nu(3, 1), 1);
        }
        IVb => {
            ch(one.clone(), 1);
            ch(nu(1, 1), 1);
            ch(nu(-1, 1), 1);
            ch(nu(3, 1), 1);
        }
        IVc => {
            ch(one.clone(), 1);
            ch(nu(1, 1), 1);
            ch(nu(-1, 1), 1);
            ch(nu(2, 1), 1);
            ch(nu(3, 1), 1);
            ch(nu(-3, 1), 1);
        }
        IVd => {
            ch(one.clone(), 2);
            ch(nu(1, 1), 2);
            ch(nu(-1, 1), 2);
            ch(nu(2, 1), 1);
            ch(nu(-2, 1), 1);
            ch(nu(3, 1), 1);
            ch(nu(-3, 1), 1);
        }
        Va => {
            let xi = get(&inputs.xi);
            ch(nu(1, 1), 2);
            ch(xi.clone(), 1);
            ch(xi.times_nu(&rat(1)), 1);
        }
        Vb | Vc => {
            let xi = get(&inputs.xi);
            ch(one.clone(), 1);
            ch(nu(1, 1), 2);
            ch(nu(-1, 1), 1);
            ch(xi.clone(), 1);
            ch(xi.times_nu(&rat(1)), 1);
        }
        Vd => {
            let xi = get(&inputs.xi);
            ch(one.clone(), 2);
            ch(nu(1, 1), 2);
            ch(nu(-1, 1), 2);
            ch(xi.clone(), 2);
            ch(xi.times_nu(&rat(1)), 1);
            ch(xi.times_nu(&rat(-1)), 1);
        }
        VIa | VIb => {
            ch(one.clone(), 1);
            ch(nu(1, 1), 3);
        }
        VIc => {
            ch(one.clone(), 2);
            ch(nu(1, 1), 3);
            ch(nu(-1, 1), 1);
        }
        VId => {
            ch(one.clone(), 4);
            ch(nu(1, 1), 3);
            ch(nu(-1, 1), 3);
        }
        VII | VIIIa | VIIIb | IXa | IXb | X | XIa | XIb => {
            let pi = inputs.pi.clone().expect("row input");
            let ad = |t: Character| Atom::ad(&pi, t);
            match spec.case() {
                VII => {
                    let chi = get(&inputs.chi);
                    l.push(Atom::char(one.clone()), 1);
                    l.push(ad(one.clone()), 1);
                    l.push(ad(chi.clone()), 1);
                    l.push(ad(chi.inv()), 1);
                }
                VIIIa | VIIIb => {
                    l.push(Atom::char(one.clone()), 1);
                    l.push(ad(one.clone()), 3);
                }
                IXa => {
                    let xi = get(&inputs.xi);
                    l.push(Atom::char(xi.clone()), 1);
                    l.push(ad(xi.times_nu(&rat(1))), 1);
                }
                IXb => {
                    let xi = get(&inputs.xi);
                    l.push(Atom::char(one.clone()), 1);
                    l.push(ad(one.clone()), 1);
                    l.push(ad(xi.times_nu(&rat(1))), 1);
                    l.push(ad(xi.times_nu(&rat(-1))), 1);
                }
                X => {
                    let omega = pi.central_character().clone();
                    l.push(Atom::char(one.clone()), 1);
                    l.push(ad(one.clone()), 1);
                    l.push(Atom::char(omega.clone()), 1);
                    l.push(Atom::char(omega.inv()), 1);
                }
                XIa => {
                    l.push(ad(one.clone()), 1);
                    l.push(Atom::char(nu(1, 1)), 1);
                }
                _ => {
                    l.push(Atom::char(one.clone()), 1);
                    l.push(ad(one.clone()), 1);
                    l.push(Atom::char(nu(1, 1)), 1);
                    l.push(Atom::char(nu(-1, 1)), 1);
                }
            }
        }
    }
    l
}
