//! Odd characteristic: `S`, `N`, `Z` and the refinement into `A_2` sets.

use super::{maps_into, odd_only, perm_iff, same_set, sorted, union, Field, Interner};
use crate::arith::gcd;
use crate::ffield::{Arith, Fe, FieldCtx};
use crate::poly::FqPoly;
use crate::polyfam::{sequence_fq, Family};
use crate::subsets::{
    elem_sym, image_and_cycles_with, materialize_mu, vanishing_poly, z_set, Sign, SubsetId,
};
use crate::verdict::{Checker, Verdict};

const SIGNS: [Sign; 2] = [Sign::Plus, Sign::Minus];

/// k values for the divisibility-conditioned clauses: the configured range
/// plus the first few multiples of `(q-1)/2` and `(q+1)/2`.
fn ks_with_multiples(fl: &Field) -> Vec<u64> {
    let q = fl.q();
    let mut ks = fl.ks.clone();
    for j in 1..=6 {
        ks.push(j * (q - 1) / 2);
        ks.push(j * (q + 1) / 2);
    }
    ks.retain(|&k| k >= 1 && k <= fl.kr.bound.max(1));
    ks.sort_unstable();
    ks.dedup();
    ks
}

/// `D_k` on `S`, `N`, `Z`: invariance, permutation criteria, the images
/// when `(q ∓ 1)/2 | k`, which k agree on `S` or `N`, and `D_(q^e ± 1)`.
pub fn odd_snz_suite(fl: &Field) -> Verdict {
    const NAME: &str = "odd_snz_suite";
    let f = &fl.f;
    if let Some(v) = odd_only(NAME, f) {
        return v;
    }
    let q = f.q();
    let mut c = Checker::new(NAME, q);
    let s = fl.set(SubsetId::S);
    let n = fl.set(SubsetId::N);
    let z = z_set(f);
    let sz = union(&[&s, &z]);
    let nz = union(&[&n, &z]);
    let all: Vec<Fe> = f.elements().collect();
    same_set(&mut c, "S = delta*_(q-1)", &[], &fl.set(SubsetId::DeltaStar(q - 1)), &s);
    same_set(&mut c, "N = delta*_(q+1)", &[], &fl.set(SubsetId::DeltaStar(q + 1)), &n);
    for k in ks_with_multiples(fl) {
        let map = fl.table.map(k);
        maps_into(&mut c, "D_k(Z) ⊂ Z", k, &map, &z, &z);
        maps_into(&mut c, "D_k(S) ⊂ S ⊔ Z", k, &map, &s, &sz);
        maps_into(&mut c, "D_k(N) ⊂ N ⊔ Z", k, &map, &n, &nz);
        perm_iff(&mut c, "D_k permutes Z iff k is odd", k, &map, &z, k % 2 == 1);
        perm_iff(&mut c, "D_k permutes N iff gcd(k, q+1) = 1", k, &map, &n, gcd(k, q + 1) == 1);
        perm_iff(&mut c, "D_k permutes S iff gcd(k, q-1) = 1", k, &map, &s, gcd(k, q - 1) == 1);
        if k % ((q - 1) / 2) == 0 {
            maps_into(&mut c, "(q-1)/2 | k implies D_k(GF(q)) ⊂ N ⊔ Z", k, &map, &all, &nz);
        }
        if k % q.div_ceil(2) == 0 {
            maps_into(&mut c, "(q+1)/2 | k implies D_k(GF(q)) ⊂ S ⊔ Z", k, &map, &all, &sz);
        }
    }

    // which D_k agree on S and on N
    let top = (2 * (q + 1)).min(fl.kr.bound.max(1));
    let mut on_s = Interner::new();
    let mut on_n = Interner::new();
    let ids: Vec<(usize, usize)> = (0..=top)
        .map(|k| {
            let vs: Vec<Fe> = s.iter().map(|&a| fl.table.d(k, a)).collect();
            let vn: Vec<Fe> = n.iter().map(|&a| fl.table.d(k, a)).collect();
            (on_s.id(vs), on_n.id(vn))
        })
        .collect();
    let pm = |k: u64, l: u64, m: u64| (k + l).is_multiple_of(m) || k.abs_diff(l).is_multiple_of(m);
    if s.is_empty() {
        c.vacuous("D_k = D_l on S iff k ≡ ±l mod q-1");
    }
    for k in 0..=top {
        for l in 0..=k {
            let (sk, nk) = ids[k as usize];
            let (sl, nl) = ids[l as usize];
            let inputs: &[(&str, &dyn std::fmt::Display)] = &[("k", &k), ("l", &l)];
            if !s.is_empty() {
                let crit = pm(k, l, q - 1);
                let act = sk == sl;
                if !c.expect("D_k = D_l on S iff k ≡ ±l mod q-1", act == crit, inputs, &crit, &act) {
                    break;
                }
            }
            let crit = pm(k, l, q + 1);
            let act = nk == nl;
            if !c.expect("D_k = D_l on N iff k ≡ ±l mod q+1", act == crit, inputs, &crit, &act) {
                break;
            }
        }
    }

    let two = f.from_int(2);
    let mut qe: u64 = 1;
    for e in 0..=4u64 {
        for a in f.elements() {
            let sq2 = f.sub(f.square(a), two);
            let on_n = n.binary_search(&a).is_ok();
            let (want_minus, want_plus) = if e % 2 == 0 {
                (two, sq2)
            } else if on_n {
                (sq2, two)
            } else {
                (two, sq2)
            };
            let inputs: &[(&str, &dyn std::fmt::Display)] = &[("e", &e), ("a", &a)];
            c.expect_eq("D_(q^e-1)(a)", inputs, want_minus, fl.table.d(qe - 1, a));
            c.expect_eq("D_(q^e+1)(a)", inputs, want_plus, fl.table.d(qe + 1, a));
        }
        qe *= q;
    }
    c.finish()
}

fn a_set(fl: &Field, lambda: Fe, e1: Sign, e2: Sign) -> Vec<Fe> {
    fl.set(SubsetId::A { lambda, e1, e2 })
}

/// `{v^2 + v^-2 : v^(q - e1 e2) = e2, v^4 != 1}`.
fn a2_by_roots(f: &FieldCtx, e1: Sign, e2: Sign) -> Vec<Fe> {
    let ext = f.ext();
    let q = f.q();
    let n = if e1.times(e2) == Sign::Plus { q - 1 } else { q + 1 };
    let target = if e2 == Sign::Plus { ext.one() } else { ext.neg(ext.one()) };
    sorted(
        materialize_mu(f, 2 * n)
            .expect("2(q ± 1) | q^2 - 1")
            .into_iter()
            .filter(|&v| ext.pow(v, n) == target && ext.pow(v, 4) != ext.one())
            .map(|v| {
                let v2 = ext.square(v);
                ext.ang(v2).expect("unit").to_base().expect("base value")
            })
            .collect(),
    )
}

/// `d^(e1,e2)` from the permutation clause.
fn d_index(q: u64, e1: Sign, e2: Sign) -> u64 {
    match (e1, e2) {
        (Sign::Plus, Sign::Plus) => (q - 1) / 2,
        (Sign::Plus, Sign::Minus) => q + 1,
        (Sign::Minus, Sign::Plus) => q.div_ceil(2),
        (Sign::Minus, Sign::Minus) => q - 1,
    }
}

/// The `A_2` refinement: descriptions through roots of unity, `Z`
/// intersections, and all six clauses of the refinement theorem.
pub fn aij_suite(fl: &Field) -> Verdict {
    const NAME: &str = "aij_suite";
    let f = &fl.f;
    if let Some(v) = odd_only(NAME, f) {
        return v;
    }
    let q = f.q();
    let mut c = Checker::new(NAME, q);
    let eps = f.epsilon().expect("odd q");
    let two = f.from_int(2);
    let m2 = f.from_int(-2);
    let a = |e1, e2| a_set(fl, two, e1, e2);
    let (pp, pm, mp, mm) = (
        a(Sign::Plus, Sign::Plus),
        a(Sign::Plus, Sign::Minus),
        a(Sign::Minus, Sign::Plus),
        a(Sign::Minus, Sign::Minus),
    );
    let star = |d: u64| fl.set(SubsetId::DeltaStar(d));
    same_set(&mut c, "A++ = delta*_((q-1)/2)", &[], &star((q - 1) / 2), &pp);
    same_set(&mut c, "A-- = delta*_(q-1) minus delta*_((q-1)/2)", &[], &super::minus(&star(q - 1), &star((q - 1) / 2)), &mm);
    same_set(&mut c, "A-+ = delta*_((q+1)/2)", &[], &star(q.div_ceil(2)), &mp);
    same_set(&mut c, "A+- = delta*_(q+1) minus delta*_((q+1)/2)", &[], &super::minus(&star(q + 1), &star(q.div_ceil(2))), &pm);
    for e1 in SIGNS {
        for e2 in SIGNS {
            let tag = format!("{}{}", e1.value(), e2.value());
            same_set(
                &mut c,
                "A^(e1,e2) = {v^2 + v^-2 : v^(q - e1 e2) = e2, v^4 != 1}",
                &[("signs", &tag)],
                &a(e1, e2),
                &a2_by_roots(f, e1, e2),
            );
        }
    }
    let z = z_set(f);
    let e2x = |s: i64| f.from_int(2 * s);
    let dz = |d: u64| super::intersect(&z, &fl.set(SubsetId::Delta(d)));
    same_set(&mut c, "Z ∩ delta_((q-1)/2) = {2, -2 eps}", &[], &sorted(vec![two, e2x(-eps)]), &dz((q - 1) / 2));
    same_set(&mut c, "Z ∩ delta_((q+1)/2) = {2, 2 eps}", &[], &sorted(vec![two, e2x(eps)]), &dz(q.div_ceil(2)));

    let eps_sign = Sign::from_value(eps).expect("±1");
    let a_eps_minus = a(eps_sign, Sign::Minus);
    let a_meps_minus = a(eps_sign.flip(), Sign::Minus);
    let pm2 = sorted(vec![two, m2]);
    let all: Vec<Fe> = f.elements().collect();
    let pp_ext = union(&[&pp, &[two, e2x(-eps)]]);
    let mp_ext = union(&[&mp, &[two, e2x(eps)]]);
    let iv = union(&[&pm, &mp, &pm2]);
    let iv_even = union(&[&mp, &pm2]);
    let v = union(&[&pp, &mm, &pm2]);
    let v_even = union(&[&pp, &pm2]);
    let a_eps_minus_ext = union(&[&a_eps_minus, &[m2]]);
    for k in ks_with_multiples(fl) {
        let map = fl.table.map(k);
        let at = |x: Fe| map[x.enc() as usize];
        let sign2 = if k % 2 == 0 { two } else { m2 };
        c.expect_eq("D_k(2) = 2", &[("k", &k)], two, at(two));
        c.expect_eq("D_k(-2) = (-1)^k 2", &[("k", &k)], sign2, at(m2));
        maps_into(&mut c, "(i) D_k(A++) ⊂ A++ ⊔ {2, -2 eps}", k, &map, &pp, &pp_ext);
        maps_into(&mut c, "(i) D_k(A-+) ⊂ A-+ ⊔ {2, 2 eps}", k, &map, &mp, &mp_ext);
        if k % 2 == 1 {
            maps_into(&mut c, "(ii) D_k(A^(eps,-)) ⊂ A^(eps,-) ⊔ {-2}", k, &map, &a_eps_minus, &a_eps_minus_ext);
            maps_into(&mut c, "(ii) D_k(A^(-eps,-)) ⊂ A^(-eps,-)", k, &map, &a_meps_minus, &a_meps_minus);
        } else {
            maps_into(&mut c, "(iii) D_k(A--) ⊂ A++ ⊔ {2, -2 eps}", k, &map, &mm, &pp_ext);
            maps_into(&mut c, "(iii) D_k(A+-) ⊂ A-+ ⊔ {2, 2 eps}", k, &map, &pm, &mp_ext);
        }
        if k % ((q - 1) / 2) == 0 {
            maps_into(&mut c, "(iv) D_k(GF(q)) ⊂ A+- ⊔ A-+ ⊔ {±2}", k, &map, &all, &iv);
            if k % 2 == 0 {
                maps_into(&mut c, "(iv) k even: D_k(GF(q)) ⊂ A-+ ⊔ {±2}", k, &map, &all, &iv_even);
            }
        }
        if k % q.div_ceil(2) == 0 {
            maps_into(&mut c, "(v) D_k(GF(q)) ⊂ A++ ⊔ A-- ⊔ {±2}", k, &map, &all, &v);
            if k % 2 == 0 {
                maps_into(&mut c, "(v) k even: D_k(GF(q)) ⊂ A++ ⊔ {±2}", k, &map, &all, &v_even);
            }
        }
        for (e1, e2, set) in [
            (Sign::Plus, Sign::Plus, &pp),
            (Sign::Plus, Sign::Minus, &pm),
            (Sign::Minus, Sign::Plus, &mp),
            (Sign::Minus, Sign::Minus, &mm),
        ] {
            let d = d_index(q, e1, e2);
            perm_iff(&mut c, "(vi) D_k permutes A^(e1,e2) iff gcd(k, d^(e1,e2)) = 1", k, &map, set, gcd(k, d) == 1);
        }
    }
    c.finish()
}

/// The worked example over GF(29).
pub fn golden_f29(fl: &Field) -> Verdict {
    const NAME: &str = "golden_f29";
    let f = &fl.f;
    let q = f.q();
    if q != 29 {
        return Verdict::skipped(NAME, q, "fixture defined for q = 29");
    }
    let mut c = Checker::new(NAME, q);
    let el = |v: &[i64]| -> Vec<Fe> { sorted(v.iter().map(|&x| f.from_int(x)).collect()) };
    let squares: Vec<Fe> = sorted(f.nonzero_elements().filter(|&a| f.sqrt(a).is_some()).collect());
    same_set(&mut c, "nonzero squares", &[], &el(&[1, 4, 5, 6, 7, 9, 13, 16, 20, 22, 23, 24, 25, 28]), &squares);
    let two = f.from_int(2);
    let fixtures: [(Sign, Sign, &[i64]); 4] = [
        (Sign::Plus, Sign::Plus, &[3, 7, 11, 18, 22, 26]),
        (Sign::Plus, Sign::Minus, &[1, 6, 8, 9, 15, 24, 25]),
        (Sign::Minus, Sign::Plus, &[4, 5, 14, 20, 21, 23, 28]),
        (Sign::Minus, Sign::Minus, &[0, 10, 12, 13, 16, 17, 19]),
    ];
    for (e1, e2, want) in fixtures {
        let tag = SubsetId::A { lambda: two, e1, e2 };
        same_set(&mut c, "A_2 set", &[("set", &tag)], &el(want), &a_set(fl, two, e1, e2));
    }
    let mm = a_set(fl, two, Sign::Minus, Sign::Minus);
    let d5 = image_and_cycles_with(&mm, |a| fl.table.d(5, a));
    c.expect_eq("D_5 on A--", &[], "(0)(10 17 13 19 12 16)".to_string(), d5.to_string());
    let d7 = image_and_cycles_with(&mm, |a| fl.table.d(7, a));
    c.expect_eq("D_7 on A--", &[], "not a permutation; image={0}".to_string(), d7.to_string());
    let d7_poly = sequence_fq(f, Family::D, 7).pop().expect("k = 7");
    c.expect_eq("D_7(x) = prod over A-- (x - a)", &[], vanishing_poly(f, &mm), d7_poly);
    let d5_poly = FqPoly::new([0, 5, 0, -5, 0, 1].iter().map(|&x| f.from_int(x)).collect());
    c.expect_eq("D_5(x) = x^5 - 5x^3 + 5x", &[], d5_poly, sequence_fq(f, Family::D, 5).pop().expect("k = 5"));
    let bpp = fl.set(SubsetId::b2(f, Sign::Plus, Sign::Plus));
    let bmm = fl.set(SubsetId::b2(f, Sign::Minus, Sign::Minus));
    for (label, set, j, want) in [
        ("sigma_2^+", &bpp, 2, 24),
        ("sigma_4^+", &bpp, 4, 6),
        ("sigma_2^-", &bmm, 2, 22),
        ("sigma_4^-", &bmm, 4, 14),
    ] {
        let got = elem_sym(f, set, j).expect("j <= size");
        c.expect_eq(label, &[], f.from_int(want), got);
    }
    c.finish()
}
