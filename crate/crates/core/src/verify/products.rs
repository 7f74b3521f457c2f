//! Factorizations into vanishing polynomials and the products they imply.

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::ToPrimitive;

use super::{half, minus, odd_only, same_set, sorted, Field};
use crate::ffield::{Arith, Fe, FieldCtx};
use crate::poly::FqPoly;
use crate::polyfam::{sequence_fq, Family};
use crate::subsets::{elem_sym_all, set_product, vanishing_poly, z_set, Sign, SubsetId};
use crate::verdict::{Checker, Verdict};

const SIGNS: [Sign; 2] = [Sign::Plus, Sign::Minus];

fn chi(f: &FieldCtx, a: Fe) -> i64 {
    f.legendre(a).expect("odd q") as i64
}

fn b_set(fl: &Field, lambda: Fe, e1: Sign, e2: Sign) -> Vec<Fe> {
    fl.set(SubsetId::B { lambda, e1, e2 })
}

fn shifted_product(f: &FieldCtx, c: Fe, set: &[Fe]) -> Fe {
    set.iter().fold(Fe::ONE, |acc, &a| f.mul(acc, f.sub(c, a)))
}

/// Both square roots of `a` satisfying `keep`; `None` if `a` is a nonsquare.
fn roots_where(f: &FieldCtx, a: Fe, keep: impl Fn(Fe) -> bool) -> Option<Vec<Fe>> {
    let r = f.sqrt(a)?;
    Some(sorted(vec![r, f.neg(r)]).into_iter().filter(|&x| keep(x)).collect())
}

/// Vanishing polynomials of the canonical sets against `D_k`, `E_k`.
pub fn factorization_suite(fl: &Field) -> Verdict {
    let f = &fl.f;
    let q = f.q();
    let mut c = Checker::new("factorization_suite", q);
    let top = (q + 1) as usize;
    let d = sequence_fq(f, Family::D, top);
    let star = |n: u64| fl.set(SubsetId::DeltaStar(n));
    if !f.is_odd() {
        let x = FqPoly::monomial(1);
        for k in (1..=q + 1).step_by(2) {
            if !(q - 1).is_multiple_of(k) && !(q + 1).is_multiple_of(k) {
                continue;
            }
            let g = vanishing_poly(f, &star(k));
            c.expect_eq("k odd: D_k = x f^2 over delta*_k", &[("k", &k)], x.mul(f, &g.mul(f, &g)), d[k as usize].clone());
        }
        for (j, k) in [(0u8, q - 1), (1u8, q + 1)] {
            let g = vanishing_poly(f, &fl.set(SubsetId::Trace(j)));
            c.expect_eq("D_(q∓1) = x f_j^2 over T_j", &[("j", &j)], x.mul(f, &g.mul(f, &g)), d[k as usize].clone());
        }
        return c.finish();
    }
    let e = sequence_fq(f, Family::E, top);
    let eps = f.epsilon().expect("odd q");
    let m = f.m().expect("odd q");
    let two = f.from_int(2);

    // B-set relations used below
    for e1 in SIGNS {
        for e2 in SIGNS {
            let tag = SubsetId::b2(f, e1, e2);
            let b = b_set(fl, two, e1, e2);
            let a = fl.set(SubsetId::A { lambda: two, e1: if eps == 1 { e1 } else { e1.flip() }, e2 });
            same_set(&mut c, "B^(e1,e2) = A^(eps e1,e2)", &[("set", &tag)], &a, &b);
            let neg = sorted(b.iter().map(|&x| f.neg(x)).collect());
            same_set(&mut c, "-B^(e1,e2) = B^(e2,e1)", &[("set", &tag)], &b_set(fl, two, e2, e1), &neg);
        }
    }
    let bpp = b_set(fl, two, Sign::Plus, Sign::Plus);
    let bmm = b_set(fl, two, Sign::Minus, Sign::Minus);
    let bmp = b_set(fl, two, Sign::Minus, Sign::Plus);
    let bpm = b_set(fl, two, Sign::Plus, Sign::Minus);
    let h = |n: i64| n as u64;
    let twom = 2 * m;
    let rp = h((q as i64 + eps) / 2);
    same_set(&mut c, "B++ = delta*_(2m)", &[], &star(twom), &bpp);
    same_set(&mut c, "B-- = delta*_(4m) minus delta*_(2m)", &[], &minus(&star(2 * twom), &star(twom)), &bmm);
    same_set(&mut c, "B-+ = delta*_(2m+eps)", &[], &star(rp), &bmp);
    same_set(&mut c, "B+- = delta*_(4m+2eps) minus delta*_(2m+eps)", &[], &minus(&star(2 * rp), &star(rp)), &bpm);

    let mut hit_i = false;
    let mut hit_ii = false;
    for k in 1..=top as u64 {
        let n = 2 * k;
        if k > 1 && ((q - 1).is_multiple_of(n) || (q + 1).is_multiple_of(n)) {
            hit_i = true;
            c.expect_eq("E_(k-1) = prod over delta*_(2k)", &[("k", &k)], vanishing_poly(f, &star(n)), e[(k - 1) as usize].clone());
        }
        let n4 = 4 * k;
        if (q - 1).is_multiple_of(n4) || (q + 1).is_multiple_of(n4) {
            hit_ii = true;
            let set = minus(&star(n4), &star(n));
            c.expect_eq("D_k = prod over delta*_(4k) minus delta*_(2k)", &[("k", &k)], vanishing_poly(f, &set), d[k as usize].clone());
        }
    }
    if !hit_i {
        c.vacuous("E_(k-1) = prod over delta*_(2k)");
    }
    if !hit_ii {
        c.vacuous("D_k = prod over delta*_(4k) minus delta*_(2k)");
    }
    let s = fl.set(SubsetId::S);
    let nn = fl.set(SubsetId::N);
    let fs = vanishing_poly(f, &s);
    let fnn = vanishing_poly(f, &nn);
    let fz = vanishing_poly(f, &z_set(f));
    c.expect_eq("f_S = E_((q-3)/2)", &[], e[((q - 3) / 2) as usize].clone(), fs.clone());
    c.expect_eq("f_N = E_((q-1)/2)", &[], e[((q - 1) / 2) as usize].clone(), fnn.clone());
    let x2m4 = FqPoly::new(vec![f.from_int(-4), Fe::ZERO, Fe::ONE]);
    c.expect_eq("f_Z = x^2 - 4", &[], x2m4, fz.clone());
    let xq_x = FqPoly::monomial(q as usize).sub(f, &FqPoly::monomial(1));
    c.expect_eq("f_S f_N f_Z = x^q - x", &[], xq_x, fs.mul(f, &fnn).mul(f, &fz));
    c.expect_eq("D_m = g^(--)", &[("m", &m)], vanishing_poly(f, &bmm), d[m as usize].clone());
    c.expect_eq("E_(m-1) = g^(++)", &[("m", &m)], vanishing_poly(f, &bpp), e[(m - 1) as usize].clone());
    c.finish()
}

/// The two products over `T_(4,0)^(--)` and `T_(0,4)^(--)`.
pub fn wilson_like(fl: &Field) -> Verdict {
    const NAME: &str = "wilson_like";
    let f = &fl.f;
    if let Some(v) = odd_only(NAME, f) {
        return v;
    }
    let q = f.q();
    let mut c = Checker::new(NAME, q);
    let m = f.m().expect("odd q");
    let two = f.from_int(2);
    let nu = chi(f, two);
    let parity = if m.is_multiple_of(2) { 1 } else { -1 };
    c.expect_eq("(2|q) = (-1)^m", &[("m", &m)], parity, nu);
    c.expect_eq("(2|q) = 1 iff q ≡ ±1 mod 8", &[], q % 8 == 1 || q % 8 == 7, nu == 1);
    let t = |j: i64, l: i64| {
        fl.set(SubsetId::Tjl { j: f.from_int(j), l: f.from_int(l), e1: Sign::Minus, e2: Sign::Minus })
    };
    let t40 = t(4, 0);
    let t04 = t(0, 4);
    c.expect_eq("prod{a : a, 4-a nonsquares} = 2", &[], two, set_product(f, &t40));
    let want = if q % 8 == 1 || q % 8 == 7 { two } else { f.neg(two) };
    c.expect_eq("prod{a : -a, 4+a nonsquares} = ±2 by q mod 8", &[], want, set_product(f, &t04));
    c.expect_eq("prod{a : -a, 4+a nonsquares} = (2|q) 2", &[], f.mul(f.from_int(nu), two), set_product(f, &t04));
    c.finish()
}

/// The permutations `b -> ±(b^2 - 2)` and their scaled forms, inverted by
/// products over `B^(--)`, with the square-root descriptions; and the
/// two-to-one squaring map onto `B^(++)`.
pub fn d2_inverse_suite(fl: &Field) -> Verdict {
    const NAME: &str = "d2_inverse_suite";
    let f = &fl.f;
    if let Some(v) = odd_only(NAME, f) {
        return v;
    }
    let q = f.q();
    let mut c = Checker::new(NAME, q);
    let m = f.m().expect("odd q");
    let two = f.from_int(2);
    let nu2 = f.from_int(chi(f, two));
    let bmm = b_set(fl, two, Sign::Minus, Sign::Minus);
    let bpp = b_set(fl, two, Sign::Plus, Sign::Plus);

    for (plus, clause) in [(true, "(i) b -> b^2 - 2 on B-+"), (false, "(ii) b -> 2 - b^2 on B+-")] {
        let set = if plus {
            b_set(fl, two, Sign::Minus, Sign::Plus)
        } else {
            b_set(fl, two, Sign::Plus, Sign::Minus)
        };
        let map = |b: Fe| {
            let v = f.sub(f.square(b), two);
            if plus { v } else { f.neg(v) }
        };
        let img = sorted(set.iter().map(|&b| map(b)).collect());
        same_set(&mut c, &format!("{clause} is a permutation"), &[], &set, &img);
        for &b in &set {
            let prod = shifted_product(f, b, &bmm);
            let inv = if plus { prod } else { f.neg(f.mul(nu2, prod)) };
            c.expect_eq(&format!("{clause}: product formula inverts"), &[("b", &b)], b, map(inv));
            let radicand = if plus { f.add(two, b) } else { f.sub(two, b) };
            let want_chi = if plus { 1 } else { -1 };
            let roots = roots_where(f, radicand, |r| chi(f, f.add(r, two)) == want_chi);
            let ok = roots.as_deref() == Some(&[inv][..]);
            c.expect(
                &format!("{clause}: inverse is the distinguished square root"),
                ok,
                &[("b", &b)],
                &inv,
                &format_args!("{roots:?}"),
            );
        }
    }

    for lambda in fl.lambdas(2) {
        let nu = chi(f, f.mul(two, lambda));
        let nu_e = f.from_int(nu);
        let kappa = f.div(f.mul(two, nu_e), lambda).expect("lambda != 0");
        let kpow = f.pow(kappa, m - 1);
        let nus = Sign::from_value(-nu).expect("±1");
        let cset = b_set(fl, lambda, nus, nus);
        let nl = f.mul(nu_e, lambda);
        let l2 = f.square(lambda);
        let hf = half(f);
        for plus in [true, false] {
            let (set, label) = if plus {
                (b_set(fl, lambda, Sign::Minus, Sign::Plus), "(iii) pi_lambda")
            } else {
                (b_set(fl, lambda, Sign::Plus, Sign::Minus), "(iii) sigma_lambda")
            };
            let map = |b: Fe| {
                let v = f.sub(f.mul(kappa, f.square(b)), nl);
                if plus { v } else { f.neg(v) }
            };
            let img = sorted(set.iter().map(|&b| map(b)).collect());
            same_set(&mut c, &format!("{label} is a permutation"), &[("lambda", &lambda)], &set, &img);
            for &b in &set {
                let inputs: &[(&str, &dyn std::fmt::Display)] = &[("lambda", &lambda), ("b", &b)];
                let prod = f.mul(kpow, shifted_product(f, b, &cset));
                let inv = if plus { prod } else { f.neg(f.mul(nu2, prod)) };
                if !c.expect_eq(&format!("{label}: product formula inverts"), inputs, b, map(inv)) {
                    break;
                }
                let lnb = f.mul(nl, b);
                let radicand = f.mul(if plus { f.add(lnb, l2) } else { f.sub(l2, lnb) }, hf);
                let want_chi = if plus { 1 } else { -1 };
                let roots = roots_where(f, radicand, |r| chi(f, f.add(r, lambda)) == want_chi);
                let ok = roots.as_deref() == Some(&[inv][..]);
                c.expect(
                    &format!("{label}: inverse is the distinguished square root"),
                    ok,
                    inputs,
                    &inv,
                    &format_args!("{roots:?}"),
                );
            }
        }
    }

    // b -> b^2 - 2 from (B++ ⊔ B--) minus {0} onto B++, two-to-one
    let dom: Vec<Fe> = sorted([bpp.as_slice(), bmm.as_slice()].concat())
        .into_iter()
        .filter(|a| !a.is_zero())
        .collect();
    let mut imgs: Vec<Fe> = dom.iter().map(|&b| f.sub(f.square(b), two)).collect();
    imgs.sort_unstable();
    let distinct = sorted(imgs.clone());
    same_set(&mut c, "b^2 - 2 maps (B++ ⊔ B--) minus {0} onto B++", &[], &bpp, &distinct);
    for run in imgs.chunk_by(|a, b| a == b) {
        c.expect_eq("each image has two preimages", &[("y", &run[0])], 2, run.len());
    }
    c.finish()
}

/// `prod_(a in B^(--)) (c - a)` in each of the seven cases.
pub fn dm_product_cases(fl: &Field) -> Verdict {
    const NAME: &str = "dm_product_cases";
    let f = &fl.f;
    if let Some(v) = odd_only(NAME, f) {
        return v;
    }
    let q = f.q();
    let mut c = Checker::new(NAME, q);
    let two = f.from_int(2);
    let m2 = f.neg(two);
    let nu2 = f.from_int(chi(f, two));
    let bmm = b_set(fl, two, Sign::Minus, Sign::Minus);
    let bpp = b_set(fl, two, Sign::Plus, Sign::Plus);
    let bmp = b_set(fl, two, Sign::Minus, Sign::Plus);
    let bpm = b_set(fl, two, Sign::Plus, Sign::Minus);
    let has = |s: &[Fe], x: Fe| s.binary_search(&x).is_ok();
    for x in f.elements() {
        let lhs = shifted_product(f, x, &bmm);
        let inputs: &[(&str, &dyn std::fmt::Display)] = &[("c", &x)];
        if x == two {
            c.expect_eq("c = 2", inputs, two, lhs);
        } else if x == m2 {
            c.expect_eq("c = -2", inputs, f.mul(nu2, two), lhs);
        } else if has(&bmp, x) {
            let r = roots_where(f, f.add(x, two), |r| chi(f, f.add(r, two)) == 1);
            c.expect("c in B-+", r.as_deref() == Some(&[lhs][..]), inputs, &format_args!("{r:?}"), &lhs);
        } else if has(&bpm, x) {
            let r = roots_where(f, f.sub(two, x), |r| chi(f, f.add(r, two)) == -1);
            let want = r.as_ref().and_then(|v| (v.len() == 1).then(|| f.neg(f.mul(nu2, v[0]))));
            c.expect("c in B+-", want == Some(lhs), inputs, &format_args!("{want:?}"), &lhs);
        } else if has(&bpp, x) {
            let r = f.sqrt(f.add(x, two));
            let Some(r) = r else {
                c.expect_true("c in B++: c + 2 is a square", false, inputs);
                continue;
            };
            let want = if has(&bpp, r) { two } else { m2 };
            c.expect_eq("c in B++", inputs, want, lhs);
            let nr = f.neg(r);
            let both = (has(&bpp, r) && has(&bpp, nr)) || (has(&bmm, r) && has(&bmm, nr));
            c.expect_true("±sqrt(c+2) both in B++ or both in B--", both, inputs);
        } else {
            c.expect_true("c lies in Z or one B set", has(&bmm, x), inputs);
            c.expect_eq("c in B--", inputs, Fe::ZERO, lhs);
        }
    }
    c.finish()
}

/// Values of `f_S(c)`, `f_N(c)`, their shifted sum, and the congruence
/// `E_((q-3)/2) + E_((q-1)/2) = (x-2)^((q-1)/2)`.
pub fn fsfn_values(fl: &Field) -> Verdict {
    const NAME: &str = "fsfn_values";
    let f = &fl.f;
    if let Some(v) = odd_only(NAME, f) {
        return v;
    }
    let q = f.q();
    let mut c = Checker::new(NAME, q);
    let eps = f.epsilon().expect("odd q");
    let two = f.from_int(2);
    let m2 = f.neg(two);
    let four = f.from_int(4);
    let hf = half(f);
    let s = fl.set(SubsetId::S);
    let n = fl.set(SubsetId::N);
    let pick = |want: i64| -> Vec<Fe> {
        f.elements().filter(|&a| chi(f, f.mul(a, f.add(a, four))) == want).collect()
    };
    let jp = pick(1);
    let jm = pick(-1);
    for x in f.elements() {
        let inputs: &[(&str, &dyn std::fmt::Display)] = &[("c", &x)];
        let disc = chi(f, f.sub(f.square(x), four));
        let cm2 = f.from_int(chi(f, f.sub(x, two)));
        let (want_s, want_n) = if x == two {
            (f.neg(hf), hf)
        } else if x == m2 {
            let v = f.mul(f.from_int(eps), hf);
            (v, v)
        } else if disc == 1 {
            (Fe::ZERO, cm2)
        } else {
            (cm2, Fe::ZERO)
        };
        c.expect_eq("prod over S of (c - a)", inputs, want_s, shifted_product(f, x, &s));
        c.expect_eq("prod over N of (c - b)", inputs, want_n, shifted_product(f, x, &n));
        let sum = f.add(shifted_product(f, x, &jp), shifted_product(f, x, &jm));
        c.expect_eq("shifted sum equals (c|q)", inputs, f.from_int(chi(f, x)), sum);
    }
    let top = ((q - 1) / 2) as usize;
    let e = sequence_fq(f, Family::E, top);
    let rhs = FqPoly::linear(f, two).pow(f, (q - 1) / 2);
    c.expect_eq("E_((q-3)/2) + E_((q-1)/2) = (x-2)^((q-1)/2)", &[], rhs, e[top - 1].add(f, &e[top]));
    c.finish()
}

fn int_to_fe(f: &FieldCtx, v: &BigInt) -> Fe {
    let p = BigInt::from(f.p());
    let r = ((v % &p) + &p) % &p;
    f.from_int(r.to_i64().expect("reduced mod p"))
}

fn signed_binomial(n: u64, i: u64) -> BigInt {
    let b = binomial(BigInt::from(n), BigInt::from(i));
    if i.is_multiple_of(2) { b } else { -b }
}

/// Elementary symmetric functions of `B^(++)`, `B^(--)`, `S`, `N` against
/// the binomial closed forms.
pub fn sigma_closed_forms(fl: &Field) -> Verdict {
    const NAME: &str = "sigma_closed_forms";
    let f = &fl.f;
    if let Some(v) = odd_only(NAME, f) {
        return v;
    }
    let q = f.q();
    let mut c = Checker::new(NAME, q);
    let eps = f.epsilon().expect("odd q");
    let m = f.m().expect("odd q");
    let two = f.from_int(2);
    let bpp = b_set(fl, two, Sign::Plus, Sign::Plus);
    let bmm = b_set(fl, two, Sign::Minus, Sign::Minus);
    let sp = elem_sym_all(f, &bpp);
    let sm = elem_sym_all(f, &bmm);
    let ss = elem_sym_all(f, &fl.set(SubsetId::S));
    let sn = elem_sym_all(f, &fl.set(SubsetId::N));
    for (label, sig) in [("sigma^+", &sp), ("sigma^-", &sm)] {
        for j in (1..sig.len()).step_by(2) {
            c.expect_eq(&format!("odd {label} vanish"), &[("j", &j)], Fe::ZERO, sig[j]);
        }
    }
    let mut i = 0u64;
    while 8 * i <= q + 1 {
        let closed = BigInt::from(m) * signed_binomial(m - i, i) / BigInt::from(m - i);
        c.expect_eq("sigma_2i^- = m/(m-i) C(m-i, i) (-1)^i", &[("i", &i)], int_to_fe(f, &closed), sm[2 * i as usize]);
        i += 1;
    }
    let mut i = 0u64;
    while 8 * i + 3 <= q {
        let closed = signed_binomial(m - 1 - i, i);
        c.expect_eq("sigma_2i^+ = C(m-1-i, i) (-1)^i", &[("i", &i)], int_to_fe(f, &closed), sp[2 * i as usize]);
        i += 1;
    }
    let mut i = 0u64;
    while 4 * i + 3 <= q {
        let closed = signed_binomial((q - 3) / 2 - i, i);
        c.expect_eq("sigma_2i(S) = C((q-3)/2 - i, i) (-1)^i", &[("i", &i)], int_to_fe(f, &closed), ss[2 * i as usize]);
        i += 1;
    }
    let mut i = 0u64;
    while 4 * i < q {
        let closed = signed_binomial((q - 1) / 2 - i, i);
        c.expect_eq("sigma_2i(N) = C((q-1)/2 - i, i) (-1)^i", &[("i", &i)], int_to_fe(f, &closed), sn[2 * i as usize]);
        i += 1;
    }
    let fr = |num: i64, den: i64| f.div(f.from_int(num), f.from_int(den)).expect("odd denominator");
    if q >= 7 {
        c.expect_eq("sigma_2^- = eps/4", &[], fr(eps, 4), sm[2]);
    }
    if q >= 17 {
        c.expect_eq("sigma_4^- = eps(eps+12)/32", &[], fr(eps * (eps + 12), 32), sm[4]);
    }
    if q >= 11 {
        c.expect_eq("sigma_2^+ = eps/4 + 2", &[], f.add(fr(eps, 4), two), sp[2]);
    }
    if q >= 19 {
        c.expect_eq("sigma_4^+ = (eps+12)(eps+16)/32", &[], fr((eps + 12) * (eps + 16), 32), sp[4]);
        let mm = BigInt::from(m);
        let via_m = (&mm - 3) * (&mm - 4) / 2;
        c.expect_eq("sigma_4^+ = (m-3)(m-4)/2", &[], int_to_fe(f, &via_m), sp[4]);
    }
    c.finish()
}
