//! Products over `T_(A,0)^(e1,e2) = {a != 0 : (A - a|q) = e1, (a|q) = e2}`.

use super::{half, odd_only, sorted, Field};
use crate::ffield::{Arith, Fe, FieldCtx};
use crate::subsets::{set_product, Sign, SubsetId};
use crate::verdict::{Checker, Verdict};

const SIGNS: [Sign; 2] = [Sign::Plus, Sign::Minus];

fn t_set(fl: &Field, a: Fe, e1: Sign, e2: Sign) -> Vec<Fe> {
    fl.set(SubsetId::Tjl { j: a, l: Fe::ZERO, e1, e2 })
}

fn sign(v: i64) -> Sign {
    Sign::from_value(v).expect("±1")
}

fn chi(f: &FieldCtx, a: Fe) -> i64 {
    f.legendre(a).expect("odd q") as i64
}

/// Products over the `T_(A,0)` sets: the base values at `A = 4`, the
/// scaling law in `A = 4 lambda`, the diagonal closed forms, and the
/// involution `b -> A^2/b` with its set size.
pub fn tset_products(fl: &Field) -> Verdict {
    const NAME: &str = "tset_products";
    let f = &fl.f;
    if let Some(v) = odd_only(NAME, f) {
        return v;
    }
    let q = f.q();
    let mut c = Checker::new(NAME, q);
    let eps = f.epsilon().expect("odd q");
    let m = f.m().expect("odd q");
    let four = f.from_int(4);
    let two = f.from_int(2);
    let hf = half(f);
    let nu2 = chi(f, two);
    let fr = |num: i64, den: i64| f.div(f.from_int(num), f.from_int(den)).expect("odd denominator");
    let base = |e1: Sign, e2: Sign| set_product(f, &t_set(fl, four, e1, e2));

    // products over residues (Q) and nonresidues (N) with 4 - b of the same kind
    let big_q = base(Sign::Plus, Sign::Plus);
    let big_n = base(Sign::Minus, Sign::Minus);
    c.expect_eq("N = 2", &[], two, big_n);
    c.expect_eq("Q = (1/2) Q N", &[], big_q, f.mul(hf, f.mul(big_q, big_n)));
    c.expect_eq("Q = -eps/4", &[], fr(-eps, 4), big_q);
    c.expect_eq("prod T_(4,0)^(+-) = eps/2", &[], fr(eps, 2), base(Sign::Plus, Sign::Minus));
    c.expect_eq("prod T_(4,0)^(-+) = 1", &[], Fe::ONE, base(Sign::Minus, Sign::Plus));

    let two_pow = |e: i64| if e >= 0 { f.pow(two, e as u64) } else { f.pow(hf, (-e) as u64) };
    for lambda in fl.lambdas(3) {
        let nu = chi(f, lambda);
        let a = f.mul(four, lambda);
        let inputs: &[(&str, &dyn std::fmt::Display)] = &[("lambda", &lambda)];
        for e1 in SIGNS {
            for e2 in SIGNS {
                let (v1, v2) = (e1.value() as i64, e2.value() as i64);
                let gamma = if (nu == eps * v1 && eps * v1 == v2) || (-eps == 1 && nu * v1 == 1) { 1 } else { 0 };
                let prod = set_product(f, &t_set(fl, a, e1, e2));
                let want = f.mul(f.pow(lambda, m - gamma), base(sign(nu * v1), sign(nu * v2)));
                let tag = format!("{v1},{v2}");
                if !c.expect_eq("prod T_(4 lambda,0)^(e1,e2) = lambda^(m-gamma) prod T_(4,0)^(nu e1,nu e2)", &[("lambda", &lambda), ("signs", &tag)], want, prod) {
                    break;
                }
            }
        }
        for mu in [1i64, -1] {
            let prod = set_product(f, &t_set(fl, a, sign(mu), sign(mu)));
            let want = if mu == nu {
                f.mul(f.from_int(-eps * nu2), f.mul(f.pow(a, m - 1), two_pow((eps - 1) / 2)))
            } else {
                f.mul(f.from_int(nu2), f.mul(f.pow(a, m), two_pow((eps + 1) / 2)))
            };
            c.expect_eq("diagonal closed form for prod T_(A,0)^(mu,mu)", &[("lambda", &lambda), ("mu", &mu)], want, prod);
        }

        let diag = sign(eps * nu);
        let set = t_set(fl, a, diag, diag);
        let a2 = f.square(a);
        let swapped = sorted(set.iter().map(|&b| f.div(a2, b).expect("b != 0")).collect());
        super::same_set(&mut c, "b -> A^2/b preserves T_(A,0)^(eps nu,eps nu)", inputs, &set, &swapped);
        let t = m as i64 - (eps + 1) / 2;
        c.expect_eq("|T_(A,0)^(eps nu,eps nu)| = m - (eps+1)/2", inputs, t, set.len() as i64);
        let want_t = if eps == 1 { (q as i64 - 5) / 4 } else { (q as i64 + 1) / 4 };
        c.expect_eq("t = (q-5)/4 or (q+1)/4 by eps", inputs, want_t, set.len() as i64);
        let chi_m2 = chi(f, f.neg(two));
        let want = f.neg(f.mul(f.from_int(chi_m2), f.pow(a, set.len() as u64)));
        c.expect_eq("prod T_(A,0)^(eps nu,eps nu) = -(-2|q) A^t", inputs, want, set_product(f, &set));
    }
    c.finish()
}
