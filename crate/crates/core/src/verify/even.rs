//! Characteristic 2: the trace sets `T_0`, `T_1`.

use super::{even_only, image, maps_into, perm_iff, same_set, union, Field};
use crate::arith::gcd;
use crate::ffield::{Arith, Fe};
use crate::poly::FqPoly;
use crate::subsets::{vanishing_poly, SubsetId};
use crate::verdict::{Checker, Verdict};

/// Trace-set decomposition, invariance and permutation criteria, the
/// collapse and squaring criteria, `D_(q^e ± 1)`, and the image theorem
/// for `k = 2^e ± 1`.
pub fn even_char_suite(fl: &Field) -> Verdict {
    const NAME: &str = "even_char_suite";
    let f = &fl.f;
    if let Some(v) = even_only(NAME, f) {
        return v;
    }
    let q = f.q();
    let mut c = Checker::new(NAME, q);
    let zero = [Fe::ZERO];
    let t0 = fl.set(SubsetId::Trace(0));
    let t1 = fl.set(SubsetId::Trace(1));
    same_set(&mut c, "delta_(q-1) = T_0 ⊔ {0}", &[], &fl.set(SubsetId::Delta(q - 1)), &union(&[&t0, &zero]));
    same_set(&mut c, "delta_(q+1) = T_1 ⊔ {0}", &[], &fl.set(SubsetId::Delta(q + 1)), &union(&[&t1, &zero]));
    let t0z = union(&[&t0, &zero]);
    let t1z = union(&[&t1, &zero]);
    if q == 2 {
        c.note("clauses on T_0 guarded by q > 2 skipped");
    }
    for &k in &fl.ks {
        let map = fl.table.map(k);
        maps_into(&mut c, "D_k(T_0) ⊂ T_0 ∪ {0}", k, &map, &t0, &t0z);
        maps_into(&mut c, "D_k(T_1) ⊂ T_1 ∪ {0}", k, &map, &t1, &t1z);
        perm_iff(&mut c, "D_k permutes T_0 iff gcd(k, q-1) = 1", k, &map, &t0, gcd(k, q - 1) == 1);
        perm_iff(&mut c, "D_k permutes T_1 iff gcd(k, q+1) = 1", k, &map, &t1, gcd(k, q + 1) == 1);

        let collapses = |set: &[Fe]| image(&map, set) == zero;
        let squares = |set: &[Fe]| set.iter().all(|&b| map[b.enc() as usize] == f.square(b));
        let ks: &[(&str, &dyn std::fmt::Display)] = &[("k", &k)];
        let crit = k % (q + 1) == 0;
        let act = collapses(&t1);
        c.expect("D_k(T_1) = {0} iff q+1 | k", act == crit, ks, &crit, &act);
        let r = k % (q + 1);
        let crit = r == 2 || r == q - 1;
        let act = squares(&t1);
        c.expect("D_k(b) = b^2 on T_1 iff k ≡ ±2 mod q+1", act == crit, ks, &crit, &act);
        if q > 2 {
            let crit = k % (q - 1) == 0;
            let act = collapses(&t0);
            c.expect("D_k(T_0) = {0} iff q-1 | k", act == crit, ks, &crit, &act);
            let r = k % (q - 1);
            let crit = r == 2 % (q - 1) || r == (q - 3) % (q - 1);
            let act = squares(&t0);
            c.expect("D_k(b) = b^2 on T_0 iff k ≡ ±2 mod q-1", act == crit, ks, &crit, &act);
        }
    }

    let mut qe: u64 = 1;
    for e in 0..=4u64 {
        let minus_k = qe - 1;
        let plus_k = qe + 1;
        for a in f.elements() {
            let on_t1 = t1.binary_search(&a).is_ok();
            let sq = f.square(a);
            let (want_minus, want_plus) = if e % 2 == 0 {
                (Fe::ZERO, sq)
            } else if on_t1 {
                (sq, Fe::ZERO)
            } else {
                (Fe::ZERO, sq)
            };
            let inputs: &[(&str, &dyn std::fmt::Display)] = &[("e", &e), ("a", &a)];
            c.expect_eq("D_(q^e-1)(a)", inputs, want_minus, fl.table.d(minus_k, a));
            c.expect_eq("D_(q^e+1)(a)", inputs, want_plus, fl.table.d(plus_k, a));
        }
        qe = qe.saturating_mul(q);
    }

    let all: Vec<Fe> = f.elements().collect();
    let d3 = image(&fl.table.map(3), &all);
    let n = f.n() as u64;
    let mut e = 0u32;
    while e < 64 && (1u64 << e) - 1 <= q * q {
        for k in [(1u64 << e) - 1, (1u64 << e) + 1] {
            if k == 0 || k > q * q || gcd(e as u64, n) != 1 {
                continue;
            }
            let img = image(&fl.table.map(k), &all);
            let expected = if gcd(k, q * q - 1) == 1 { all.clone() } else { d3.clone() };
            same_set(&mut c, "image of D_(2^e ± 1) is GF(q) or D_3(GF(q))", &[("e", &e), ("k", &k)], &expected, &img);
        }
        e += 1;
    }
    c.finish()
}

/// `prod_(T_0)(c + a) + prod_(T_1)(c + b) = c^(1/2)` pointwise and as the
/// polynomial identity `T_0(x) + T_1(x) = x^(q/2)`, with `T_0`, `T_1` the
/// reverses of the trace polynomials.
pub fn sqrtc(fl: &Field) -> Verdict {
    const NAME: &str = "sqrtc";
    let f = &fl.f;
    if let Some(v) = even_only(NAME, f) {
        return v;
    }
    let q = f.q();
    let mut c = Checker::new(NAME, q);
    let t0 = fl.set(SubsetId::Trace(0));
    let t1 = fl.set(SubsetId::Trace(1));
    for x in f.elements() {
        let p0 = t0.iter().fold(Fe::ONE, |acc, &a| f.mul(acc, f.add(x, a)));
        let p1 = t1.iter().fold(Fe::ONE, |acc, &b| f.mul(acc, f.add(x, b)));
        let root = f.sqrt(x).expect("every element is a square in characteristic 2");
        c.expect_eq("T_0(c) + T_1(c) = c^(1/2)", &[("c", &x)], root, f.add(p0, p1));
    }
    let v0 = vanishing_poly(f, &t0);
    let v1 = vanishing_poly(f, &t1);
    c.expect_eq("T_0(x) + T_1(x) = x^(q/2)", &[], FqPoly::monomial(q as usize / 2), v0.add(f, &v1));

    // S_0 = x + x^2 + ... + x^(q/2), S_1 = S_0 + 1
    let mut s0 = FqPoly::zero();
    let mut pow2 = 1usize;
    while pow2 <= q as usize / 2 {
        s0 = s0.add(f, &FqPoly::monomial(pow2));
        pow2 *= 2;
    }
    let s1 = s0.add(f, &FqPoly::one());
    let s0_star = s0.div_x();
    c.expect_eq("T_0 = reverse(S_0 / x)", &[], s0_star.reverse().expect("nonzero"), v0);
    c.expect_eq("T_1 = reverse(S_1)", &[], s1.reverse().expect("nonzero"), v1);
    c.finish()
}
