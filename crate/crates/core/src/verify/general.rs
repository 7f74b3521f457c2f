//! Checks valid in every characteristic.

use std::collections::HashMap;

use rand::Rng;

use super::{image, intersect, same_set, sorted, union, Field, Interner};
use crate::arith::{divisors, gcd};
use crate::ffield::{Arith, Fe, Fe2};
use crate::polyfam::{eval_family, eval_via_functional, sequence, Family};
use crate::subsets::{materialize_mu, z_set, SubsetId};
use crate::verdict::{Checker, Verdict};

/// GF(q) is the union of `delta_{q-1}` and `delta_{q+1}`, meeting in `Z`.
pub fn fq_decomposition(fl: &Field) -> Verdict {
    let f = &fl.f;
    let q = f.q();
    let mut c = Checker::new("fq_decomposition", q);
    let dm = fl.set(SubsetId::Delta(q - 1));
    let dp = fl.set(SubsetId::Delta(q + 1));
    let all: Vec<Fe> = f.elements().collect();
    same_set(&mut c, "delta_(q-1) ∪ delta_(q+1) = GF(q)", &[], &all, &union(&[&dm, &dp]));
    same_set(&mut c, "delta_(q-1) ∩ delta_(q+1) = Z", &[], &z_set(f), &intersect(&dm, &dp));
    c.finish()
}

struct DeltaData {
    mu: Vec<Fe2>,
    delta: Vec<Fe>,
    star: Vec<Fe>,
}

/// Power maps on `mu_d`, Dickson maps on `delta_d`, preimage counts and the
/// permutation criterion on `delta*_d`, for every `d | q - 1` and `d | q + 1`.
pub fn power_and_delta_maps(fl: &Field) -> Verdict {
    let f = &fl.f;
    let ext = f.ext();
    let q = f.q();
    let mut c = Checker::new("power_and_delta_maps", q);
    let z = z_set(f);
    let mut ds = divisors(q - 1);
    ds.extend(divisors(q + 1));
    ds.sort_unstable();
    ds.dedup();
    let data: HashMap<u64, DeltaData> = ds
        .iter()
        .map(|&d| {
            let delta = fl.set(SubsetId::Delta(d));
            let star = fl.set(SubsetId::DeltaStar(d));
            let mu = materialize_mu(f, d).expect("d | q^2 - 1");
            (d, DeltaData { mu, delta, star })
        })
        .collect();
    for &d in &ds {
        let dd = &data[&d];
        let r = f.mu_root(d).expect("d | q^2 - 1");
        if d <= 2 {
            c.vacuous("delta*_d is empty for d <= 2");
        }
        for &k in &fl.ks {
            let g = gcd(d, k);
            let tgt = &data[&(d / g)];
            let inputs: [(&str, &dyn std::fmt::Display); 2] = [("d", &d), ("k", &k)];

            // a -> a^k on mu_d, walking powers of r^k
            let rk = ext.pow(r, k);
            let mut imgs = Vec::with_capacity(d as usize);
            let mut cur = ext.one();
            for _ in 0..d {
                imgs.push(cur);
                cur = ext.mul(cur, rk);
            }
            imgs.sort_unstable();
            let mut runs_ok = true;
            let mut distinct = Vec::new();
            for run in imgs.chunk_by(|a, b| a == b) {
                runs_ok &= run.len() as u64 == g;
                distinct.push(run[0]);
            }
            c.expect_true("a -> a^k maps mu_d onto mu_(d/g)", distinct == tgt.mu, &inputs);
            c.expect_true("a -> a^k is g-to-1 on mu_d", runs_ok, &inputs);

            // D_k on delta_d
            let mut vals: Vec<Fe> = dd.delta.iter().map(|&a| fl.table.d(k, a)).collect();
            let img = sorted(vals.clone());
            same_set(&mut c, "D_k(delta_d) = delta_(d/g)", &inputs, &tgt.delta, &img);

            vals.sort_unstable();
            let mut counts: HashMap<Fe, u64> = HashMap::new();
            for v in vals {
                *counts.entry(v).or_default() += 1;
            }
            for &y in &tgt.star {
                let n = counts.get(&y).copied().unwrap_or(0);
                c.expect(
                    "each y in delta*_(d/g) has g preimages in delta_d",
                    n == g,
                    &[("d", &d), ("k", &k), ("y", &y)],
                    &g,
                    &n,
                );
            }
            for &a in &dd.delta {
                if z.contains(&a) {
                    let v = fl.table.d(k, a);
                    c.expect_true(
                        "preimages of delta*_(d/g) avoid Z",
                        tgt.star.binary_search(&v).is_err(),
                        &[("d", &d), ("k", &k), ("a", &a)],
                    );
                }
            }
            if d > 2 {
                let map = |a: Fe| fl.table.d(k, a);
                let actual = sorted(dd.star.iter().map(|&a| map(a)).collect()) == dd.star;
                let crit = g == 1;
                c.expect(
                    "D_k permutes delta*_d iff gcd(d, k) = 1",
                    actual == crit,
                    &inputs,
                    &format_args!("permutes={crit}"),
                    &format_args!("permutes={actual}"),
                );
            }
        }
    }
    c.finish()
}

/// Image formula for `D_k(GF(q))`, the permutation criterion
/// `gcd(k, q^2 - 1) = 1`, and that images agree iff both gcds agree.
pub fn dickson_image_and_permutation(fl: &Field) -> Verdict {
    let f = &fl.f;
    let q = f.q();
    let mut c = Checker::new("dickson_image_and_permutation", q);
    let all: Vec<Fe> = f.elements().collect();
    let mut deltas: HashMap<u64, Vec<Fe>> = HashMap::new();
    let mut delta = |d: u64| deltas.entry(d).or_insert_with(|| fl.set(SubsetId::Delta(d))).clone();
    let mut images = Interner::new();
    let mut by_gcds: HashMap<(u64, u64), (usize, u64)> = HashMap::new();
    let mut by_image: HashMap<usize, ((u64, u64), u64)> = HashMap::new();
    for &k in &fl.ks {
        let map = fl.table.map(k);
        let img = image(&map, &all);
        let (r, s) = (gcd(k, q - 1), gcd(k, q + 1));
        let expected = union(&[&delta((q - 1) / r), &delta((q + 1) / s)]);
        same_set(&mut c, "D_k(GF(q)) = delta_((q-1)/r) ∪ delta_((q+1)/s)", &[("k", &k)], &expected, &img);

        let perm = img.len() as u64 == q;
        let crit = gcd(k, q * q - 1) == 1;
        c.expect(
            "D_k permutes GF(q) iff gcd(k, q^2-1) = 1",
            perm == crit,
            &[("k", &k)],
            &format_args!("permutes={crit}"),
            &format_args!("permutes={perm}"),
        );

        let id = images.id(img);
        let &mut (seen_id, seen_k) = by_gcds.entry((r, s)).or_insert((id, k));
        c.expect(
            "equal gcds give equal images",
            seen_id == id,
            &[("k", &k), ("l", &seen_k)],
            &"same image",
            &"different images",
        );
        let &mut (seen_gcds, seen_k) = by_image.entry(id).or_insert(((r, s), k));
        c.expect(
            "equal images give equal gcds",
            seen_gcds == (r, s),
            &[("k", &k), ("l", &seen_k)],
            &format_args!("gcds {:?}", seen_gcds),
            &format_args!("gcds {:?}", (r, s)),
        );
    }
    c.finish()
}

/// Agreement of four evaluators of `D_k(a)`: the angle table, the quadratic
/// lift `D_k(<u>) = <u^k>`, the recurrence matrix and Horner on the
/// integer polynomial.
pub fn functional_equation(fl: &Field) -> Verdict {
    let f = &fl.f;
    let ext = f.ext();
    let q = f.q();
    let mut c = Checker::new("functional_equation", q);
    let step = (fl.ks.len() / 16).max(1);
    let spot: Vec<u64> = fl.ks.iter().copied().step_by(step).chain(fl.ks.last().copied()).collect();
    for &k in &spot {
        for a in f.elements() {
            let t = fl.table.d(k, a);
            let lift = eval_via_functional(f, k, a);
            let mat = eval_family(f, Family::D, k, a);
            c.expect_eq("table = quadratic lift", &[("k", &k), ("a", &a)], lift, t);
            c.expect_eq("table = recurrence matrix", &[("k", &k), ("a", &a)], mat, t);
        }
    }
    let small = sequence(Family::D, 40);
    for (k, poly) in small.iter().enumerate() {
        let reduced = poly.reduce(f);
        for a in f.elements() {
            c.expect_eq(
                "table = Horner on D_k",
                &[("k", &k), ("a", &a)],
                reduced.eval(f, a),
                fl.table.d(k as u64, a),
            );
        }
    }
    let mut rng = fl.rng(1);
    for _ in 0..64 {
        let n = if rng.random_bool(0.5) { q - 1 } else { q + 1 };
        let u = ext.pow(f.mu_root(n).expect("n | q^2-1"), rng.random_range(0..n));
        let k = fl.ks[rng.random_range(0..fl.ks.len())];
        let a = ext.ang(u).expect("unit").to_base().expect("u^(q±1) = 1");
        let want = ext.ang(ext.pow(u, k)).expect("unit").to_base().expect("base");
        c.expect_eq("D_k(<u>) = <u^k>", &[("u", &u), ("k", &k)], want, fl.table.d(k, a));
    }
    c.finish()
}
