//! Dickson, Chebyshev and Schur polynomial families.
//!
//! Every family satisfies `F_{k+2} = c*x*F_{k+1} - F_k` with `c = 2` for the
//! Chebyshev families and `c = 1` otherwise; only the initial terms differ.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::ffield::{Arith, Fe, FieldCtx};
use crate::poly::{FqPoly, ZPoly};
use crate::verdict::{Checker, Verdict};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// Dickson, first kind.
    D,
    /// Dickson, second kind.
    E,
    /// Chebyshev, first kind.
    T,
    /// Chebyshev, second kind.
    U,
    /// Schur sequence with `A_1 = x + 1`.
    A,
    /// Schur sequence with `B_1 = x - 1`.
    B,
    /// Schur sequence with `J_0 = 0, J_1 = 1`.
    J,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::D,
        Family::E,
        Family::T,
        Family::U,
        Family::A,
        Family::B,
        Family::J,
    ];

    fn x_factor(self) -> i64 {
        match self {
            Family::T | Family::U => 2,
            _ => 1,
        }
    }

    /// `(F_0, F_1)` as coefficient lists.
    fn initial(self) -> ([i64; 1], [i64; 2]) {
        match self {
            Family::D => ([2], [0, 1]),
            Family::E | Family::T => ([1], [0, 1]),
            Family::U => ([1], [0, 2]),
            Family::A => ([1], [1, 1]),
            Family::B => ([1], [-1, 1]),
            Family::J => ([0], [1, 0]),
        }
    }

    fn name(self) -> &'static str {
        match self {
            Family::D => "D",
            Family::E => "E",
            Family::T => "T",
            Family::U => "U",
            Family::A => "A",
            Family::B => "B",
            Family::J => "J",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|fam| fam.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidArgument(format!("unknown polynomial family {s:?}")))
    }
}

/// `F_0, ..., F_{k_max}` over the integers.
pub fn sequence(fam: Family, k_max: usize) -> Vec<ZPoly> {
    let (f0, f1) = fam.initial();
    let mut out = vec![ZPoly::from_i64s(&f0)];
    if k_max >= 1 {
        out.push(ZPoly::from_i64s(&f1));
    }
    let c = BigInt::from(fam.x_factor());
    for k in 2..=k_max {
        let next = out[k - 1].shift().scale(&c).sub(&out[k - 2]);
        out.push(next);
    }
    out
}

pub fn family(fam: Family, k: usize) -> ZPoly {
    sequence(fam, k).pop().expect("k_max + 1 terms")
}

pub fn dickson_d(k: usize) -> ZPoly {
    family(Family::D, k)
}

pub fn dickson_e(k: usize) -> ZPoly {
    family(Family::E, k)
}

pub fn cheb_t(k: usize) -> ZPoly {
    family(Family::T, k)
}

pub fn cheb_u(k: usize) -> ZPoly {
    family(Family::U, k)
}

/// Schur sequences `A`, `B`, `J`.
pub fn schur_seq(which: Family, k: usize) -> Result<ZPoly> {
    match which {
        Family::A | Family::B | Family::J => Ok(family(which, k)),
        other => Err(Error::InvalidArgument(format!("{other} is not a Schur sequence"))),
    }
}

fn binomial(n: u64, r: u64) -> BigInt {
    if r > n {
        return BigInt::zero();
    }
    let r = r.min(n - r);
    let mut acc = BigInt::one();
    for i in 0..r {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// `sum_i k/(k-i) * C(k-i, i) * (-1)^i x^(k-2i)` for `k >= 1`.
pub fn closed_form_d(k: usize) -> Result<ZPoly> {
    if k == 0 {
        return Err(Error::InvalidArgument("closed form requires k >= 1".into()));
    }
    let mut cs = vec![BigInt::zero(); k + 1];
    for i in 0..=k / 2 {
        let (ku, iu) = (k as u64, i as u64);
        let mag = BigInt::from(ku) * binomial(ku - iu, iu) / BigInt::from(ku - iu);
        cs[k - 2 * i] = if i % 2 == 0 { mag } else { -mag };
    }
    Ok(ZPoly::new(cs))
}

/// `sum_i C(k-i, i) * (-1)^i x^(k-2i)` for `k >= 1`.
pub fn closed_form_e(k: usize) -> Result<ZPoly> {
    if k == 0 {
        return Err(Error::InvalidArgument("closed form requires k >= 1".into()));
    }
    let mut cs = vec![BigInt::zero(); k + 1];
    for i in 0..=k / 2 {
        let mag = binomial((k - i) as u64, i as u64);
        cs[k - 2 * i] = if i % 2 == 0 { mag } else { -mag };
    }
    Ok(ZPoly::new(cs))
}

/// `F_0, ..., F_{k_max}` with coefficients in GF(q), built by running the
/// recursion in `GF(q)[x]`.
pub fn sequence_fq(f: &FieldCtx, fam: Family, k_max: usize) -> Vec<FqPoly> {
    let (f0, f1) = fam.initial();
    let lift = |cs: &[i64]| FqPoly::new(cs.iter().map(|&c| f.from_int(c)).collect());
    let mut out = vec![lift(&f0)];
    if k_max >= 1 {
        out.push(lift(&f1));
    }
    let c = f.from_int(fam.x_factor());
    for k in 2..=k_max {
        let next = out[k - 1].shift().scale(f, c).sub(f, &out[k - 2]);
        out.push(next);
    }
    out
}

/// Value of `F_k(a)` via the 2x2 recurrence matrix, in `O(log k)`.
pub fn eval_family(f: &FieldCtx, fam: Family, k: u64, a: Fe) -> Fe {
    let (f0, f1) = fam.initial();
    let v0 = f.from_int(f0[0]);
    let v1 = f.add(f.from_int(f1[0]), f.mul(f.from_int(f1[1]), a));
    if k == 0 {
        return v0;
    }
    // [[c*a, -1], [1, 0]]^(k-1) applied to (F_1, F_0) gives (F_k, F_{k-1})
    let ca = f.mul(f.from_int(fam.x_factor()), a);
    let mat_mul = |m: [Fe; 4], n: [Fe; 4]| {
        [
            f.add(f.mul(m[0], n[0]), f.mul(m[1], n[2])),
            f.add(f.mul(m[0], n[1]), f.mul(m[1], n[3])),
            f.add(f.mul(m[2], n[0]), f.mul(m[3], n[2])),
            f.add(f.mul(m[2], n[1]), f.mul(m[3], n[3])),
        ]
    };
    let mut acc = [Fe::ONE, Fe::ZERO, Fe::ZERO, Fe::ONE];
    let mut base = [ca, f.neg(Fe::ONE), Fe::ONE, Fe::ZERO];
    let mut e = k - 1;
    while e > 0 {
        if e & 1 == 1 {
            acc = mat_mul(acc, base);
        }
        base = mat_mul(base, base);
        e >>= 1;
    }
    f.add(f.mul(acc[0], v1), f.mul(acc[1], v0))
}

/// `D_k(a)` through `D_k(<u>) = <u^k>`, with `u` a root of `u^2 - a*u + 1`
/// in GF(q^2) and `k` reduced modulo the order of `u`.
pub fn eval_via_functional(f: &FieldCtx, k: u64, a: Fe) -> Fe {
    let ext = f.ext();
    let (u, _) = f.ang_preimages(a);
    let ord = ext.order(u).expect("u is a unit");
    let w = ext.pow(u, k % ord);
    ext.ang(w)
        .expect("w is a unit")
        .to_base()
        .expect("<u^k> lies in the base field")
}

/// Where `a = <u>` sits: `u = g_-^idx` in the cyclic group of order `q - 1`,
/// or `u = g_+^idx` in the group of order `q + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AngleClass {
    Minus(u32),
    Plus(u32),
}

/// Precomputed `<g^i>` tables giving `D_k(a)` in constant time.
#[derive(Clone, Debug)]
pub struct DicksonTable {
    q: u64,
    class: Vec<AngleClass>,
    minus: Vec<Fe>,
    plus: Vec<Fe>,
}

impl DicksonTable {
    pub fn new(f: &FieldCtx) -> Self {
        let q = f.q();
        let ext = f.ext();
        let g = f.generator2();
        let gm = ext.pow(g, q + 1);
        let gp = ext.pow(g, q - 1);
        let walk = |gen, len: u64| {
            let mut out = Vec::with_capacity(len as usize);
            let mut u = ext.one();
            for _ in 0..len {
                out.push(ext.ang(u).expect("unit").to_base().expect("base value"));
                u = ext.mul(u, gen);
            }
            out
        };
        let minus = walk(gm, q - 1);
        let plus = walk(gp, q + 1);
        let mut class = vec![None; q as usize];
        for (i, a) in minus.iter().enumerate() {
            class[a.raw()].get_or_insert(AngleClass::Minus(i as u32));
        }
        for (j, a) in plus.iter().enumerate() {
            class[a.raw()].get_or_insert(AngleClass::Plus(j as u32));
        }
        let class = class
            .into_iter()
            .map(|c| c.expect("every element is <u> for some u of order dividing q-1 or q+1"))
            .collect();
        DicksonTable { q, class, minus, plus }
    }

    pub fn class(&self, a: Fe) -> AngleClass {
        self.class[a.raw()]
    }

    /// `<g_-^i>`, i.e. the elements of delta_{q-1} in exponent order.
    pub fn minus_values(&self) -> &[Fe] {
        &self.minus
    }

    /// `<g_+^j>`, i.e. the elements of delta_{q+1} in exponent order.
    pub fn plus_values(&self) -> &[Fe] {
        &self.plus
    }

    pub fn d(&self, k: u64, a: Fe) -> Fe {
        match self.class[a.raw()] {
            AngleClass::Minus(i) => {
                let n = self.q - 1;
                self.minus[((i as u64) * (k % n) % n) as usize]
            }
            AngleClass::Plus(j) => {
                let n = self.q + 1;
                self.plus[((j as u64) * (k % n) % n) as usize]
            }
        }
    }

    /// `D_k` on all of GF(q), indexed by encoding.
    pub fn map(&self, k: u64) -> Vec<Fe> {
        (0..self.q)
            .map(|e| self.d(k, Fe::from_raw(e as u32)))
            .collect()
    }
}

// ---------------------------------------------------------------------------
// Identity battery over Z[x]

fn poly_display(p: &ZPoly) -> String {
    p.to_string()
}

/// Schur's perfect-square identities for `0 <= k <= k_max`.
pub fn check_schur_identities(k_max: usize) -> Verdict {
    let mut c = Checker::new("schur_identities", 0);
    let d = sequence(Family::D, 2 * k_max + 1);
    let a = sequence(Family::A, k_max);
    let b = sequence(Family::B, k_max);
    let j = sequence(Family::J, k_max);
    let two = ZPoly::constant(2);
    let four = ZPoly::constant(4);
    let x_minus_2 = ZPoly::from_i64s(&[-2, 1]);
    let x_plus_2 = ZPoly::from_i64s(&[2, 1]);
    let x2_minus_4 = ZPoly::from_i64s(&[-4, 0, 1]);
    let exact = |num: &ZPoly, den: &ZPoly| -> std::result::Result<ZPoly, String> {
        match num.div_rem(den) {
            Some((q, r)) if r.is_zero() => Ok(q),
            Some((_, r)) => Err(format!("remainder {}", poly_display(&r))),
            None => Err("inexact leading division".to_string()),
        }
    };
    for k in 0..=k_max {
        let kk: &dyn fmt::Display = &k;
        c.expect_eq("D_2k + 2 = D_k^2", &[("k", kk)], d[k].mul(&d[k]), d[2 * k].add(&two));

        let jk2 = j[k].mul(&j[k]);
        let lhs1 = exact(&d[k].mul(&d[k]).sub(&four), &x2_minus_4);
        let lhs2 = exact(&d[2 * k].sub(&two), &x2_minus_4);
        for (clause, lhs) in [
            ("(D_k^2 - 4)/(x^2 - 4) = J_k^2", lhs1),
            ("(D_2k - 2)/(x^2 - 4) = J_k^2", lhs2),
        ] {
            match lhs {
                Ok(q) => c.expect_eq(clause, &[("k", kk)], jk2.clone(), q),
                Err(e) => c.expect(clause, false, &[("k", kk)], &"exact division", &e),
            };
        }
        match exact(&d[2 * k + 1].sub(&two), &x_minus_2) {
            Ok(q) => c.expect_eq("(D_2k+1 - 2)/(x - 2) = A_k^2", &[("k", kk)], a[k].mul(&a[k]), q),
            Err(e) => c.expect("(D_2k+1 - 2)/(x - 2) = A_k^2", false, &[("k", kk)], &"exact division", &e),
        };
        match exact(&d[2 * k + 1].add(&two), &x_plus_2) {
            Ok(q) => c.expect_eq("(D_2k+1 + 2)/(x + 2) = B_k^2", &[("k", kk)], b[k].mul(&b[k]), q),
            Err(e) => c.expect("(D_2k+1 + 2)/(x + 2) = B_k^2", false, &[("k", kk)], &"exact division", &e),
        };
    }
    c.finish()
}

/// The four square-identity sequences satisfy
/// `T_{k+3} = (x^2-1) T_{k+2} - (x^2-1) T_{k+1} + T_k` for `0 <= k <= k_max`.
pub fn check_t_recursion(k_max: usize) -> Verdict {
    let mut c = Checker::new("t_recursion", 0);
    let top = k_max + 3;
    let d = sequence(Family::D, 2 * top + 1);
    let two = ZPoly::constant(2);
    let four = ZPoly::constant(4);
    let x2_minus_1 = ZPoly::from_i64s(&[-1, 0, 1]);
    let quotient = |num: ZPoly, den: &ZPoly| num.div_rem(den).map(|(q, _)| q).unwrap_or_default();
    let seqs: [(&str, Vec<ZPoly>); 4] = [
        ("D_2k + 2", (0..=top).map(|k| d[2 * k].add(&two)).collect()),
        (
            "(D_k^2 - 4)/(x^2 - 4)",
            (0..=top)
                .map(|k| quotient(d[k].mul(&d[k]).sub(&four), &ZPoly::from_i64s(&[-4, 0, 1])))
                .collect(),
        ),
        (
            "(D_2k+1 - 2)/(x - 2)",
            (0..=top)
                .map(|k| quotient(d[2 * k + 1].sub(&two), &ZPoly::from_i64s(&[-2, 1])))
                .collect(),
        ),
        (
            "(D_2k+1 + 2)/(x + 2)",
            (0..=top)
                .map(|k| quotient(d[2 * k + 1].add(&two), &ZPoly::from_i64s(&[2, 1])))
                .collect(),
        ),
    ];
    for (name, s) in &seqs {
        for k in 0..=k_max {
            let rhs = x2_minus_1
                .mul(&s[k + 2])
                .sub(&x2_minus_1.mul(&s[k + 1]))
                .add(&s[k]);
            c.expect_eq(name, &[("k", &k)], s[k + 3].clone(), rhs);
        }
    }
    c.finish()
}

/// `D_k D_l = D_{k+l} + D_{k-l}` for `0 <= l <= k <= k_max`.
pub fn check_dkdl(k_max: usize) -> Verdict {
    let mut c = Checker::new("dk_dl_product", 0);
    let d = sequence(Family::D, 2 * k_max);
    for k in 0..=k_max {
        for l in 0..=k {
            c.expect_eq(
                "D_k D_l = D_(k+l) + D_(k-l)",
                &[("k", &k), ("l", &l)],
                d[k + l].add(&d[k - l]),
                d[k].mul(&d[l]),
            );
        }
    }
    c.finish()
}

/// Binomial coefficient forms of `D_k` and `E_k` against the recursion.
pub fn check_closed_forms(k_max: usize) -> Verdict {
    let mut c = Checker::new("closed_forms", 0);
    let d = sequence(Family::D, k_max);
    let e = sequence(Family::E, k_max);
    for k in 1..=k_max {
        c.expect_eq("closed form of D_k", &[("k", &k)], d[k].clone(), closed_form_d(k).expect("k >= 1"));
        c.expect_eq("closed form of E_k", &[("k", &k)], e[k].clone(), closed_form_e(k).expect("k >= 1"));
    }
    c.finish()
}

/// `D_k(2x) = 2 T_k(x)`, `E_k(2x) = U_k(x)` and `J_k = E_{k-1}`.
pub fn check_chebyshev_translation(k_max: usize) -> Verdict {
    let mut c = Checker::new("chebyshev_translation", 0);
    let d = sequence(Family::D, k_max);
    let e = sequence(Family::E, k_max);
    let t = sequence(Family::T, k_max);
    let u = sequence(Family::U, k_max);
    let j = sequence(Family::J, k_max);
    let two = BigInt::from(2);
    for k in 0..=k_max {
        c.expect_eq("D_k(2x) = 2 T_k(x)", &[("k", &k)], t[k].scale(&two), d[k].scale_arg(2));
        c.expect_eq("E_k(2x) = U_k(x)", &[("k", &k)], u[k].clone(), e[k].scale_arg(2));
        if k >= 1 {
            c.expect_eq("J_k = E_(k-1)", &[("k", &k)], e[k - 1].clone(), j[k].clone());
        }
    }
    c.finish()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(cs: &[i64]) -> ZPoly {
        ZPoly::from_i64s(cs)
    }

    #[test]
    fn dickson_values() {
        assert_eq!(dickson_d(0), z(&[2]));
        assert_eq!(dickson_d(5), z(&[0, 5, 0, -5, 0, 1]));
        assert_eq!(dickson_d(7), z(&[0, -7, 0, 14, 0, -7, 0, 1]));
        assert_eq!(dickson_d(7).to_string(), "1 0 -7 0 14 0 -7 0");
        assert_eq!(dickson_e(0), z(&[1]));
        assert_eq!(dickson_e(1), z(&[0, 1]));
        assert_eq!(dickson_e(2), z(&[-1, 0, 1]));
    }

    #[test]
    fn chebyshev_values() {
        assert_eq!(cheb_t(1), z(&[0, 1]));
        assert_eq!(cheb_u(1), z(&[0, 2]));
        assert_eq!(cheb_u(2), z(&[-1, 0, 4]));
        assert_eq!(cheb_t(3).scale(&BigInt::from(2)), dickson_d(3).scale_arg(2));
        for k in 1..20 {
            assert_eq!(cheb_t(k).leading(), Some(&(BigInt::one() << (k - 1))));
            assert_eq!(cheb_u(k).leading(), Some(&(BigInt::one() << k)));
        }
    }

    #[test]
    fn schur_values() {
        assert_eq!(schur_seq(Family::A, 1).unwrap(), z(&[1, 1]));
        assert_eq!(schur_seq(Family::J, 3).unwrap(), z(&[-1, 0, 1]));
        assert_eq!(schur_seq(Family::B, 0).unwrap(), z(&[1]));
        assert!(schur_seq(Family::D, 2).is_err());
    }

    #[test]
    fn closed_forms_small() {
        assert_eq!(closed_form_d(5).unwrap(), dickson_d(5));
        assert_eq!(closed_form_d(1).unwrap(), z(&[0, 1]));
        assert!(closed_form_d(0).is_err());
        assert_eq!(check_closed_forms(60).status, crate::verdict::Status::Pass);
    }

    #[test]
    fn parity_and_monic() {
        for k in 1..40 {
            let d = dickson_d(k);
            assert_eq!(d.leading(), Some(&BigInt::one()));
            for (i, c) in d.coeffs().iter().enumerate() {
                if (k - i) % 2 == 1 {
                    assert!(c.is_zero());
                }
            }
            // D_k(-x) = (-1)^k D_k(x)
            let flipped = d.scale_arg(-1);
            let expect = if k % 2 == 0 { d.clone() } else { d.neg() };
            assert_eq!(flipped, expect);
        }
    }

    #[test]
    fn second_kind_at_two() {
        for k in 1..30i64 {
            let e = dickson_e((k - 1) as usize);
            assert_eq!(e.eval_int(&BigInt::from(2)), BigInt::from(k));
            let sign = if (k - 1) % 2 == 0 { 1 } else { -1 };
            assert_eq!(e.eval_int(&BigInt::from(-2)), BigInt::from(sign * k));
        }
    }

    #[test]
    fn identity_battery_small() {
        use crate::verdict::Status;
        assert_eq!(check_schur_identities(0).status, Status::Pass);
        assert_eq!(check_schur_identities(12).status, Status::Pass);
        for k in [2, 8] {
            assert_eq!(check_t_recursion(k).status, Status::Pass);
        }
        assert_eq!(check_dkdl(10).status, Status::Pass);
        assert_eq!(check_chebyshev_translation(20).status, Status::Pass);
    }

    #[test]
    fn eval_in_gf29() {
        let f = FieldCtx::new(29, 1).unwrap();
        let a = f.from_int(10);
        assert_eq!(dickson_d(5).eval(&f, a), f.from_int(17));
        assert_eq!(eval_via_functional(&f, 5, a), f.from_int(17));
        assert_eq!(eval_via_functional(&f, 7, a), Fe::ZERO);
        assert_eq!(eval_family(&f, Family::D, 5, a), f.from_int(17));
    }

    #[test]
    fn evaluators_agree() {
        for q in [2u64, 3, 4, 5, 8, 9, 25, 27, 32] {
            let f = FieldCtx::from_q(q).unwrap();
            let table = DicksonTable::new(&f);
            for fam in Family::ALL {
                let seq = sequence(fam, 24);
                let seq_fq = sequence_fq(&f, fam, 24);
                for (k, p) in seq.iter().enumerate() {
                    assert_eq!(p.reduce(&f), seq_fq[k], "fam={fam} k={k} q={q}");
                    for a in f.elements() {
                        let h = p.eval(&f, a);
                        assert_eq!(eval_family(&f, fam, k as u64, a), h);
                        if fam == Family::D {
                            assert_eq!(eval_via_functional(&f, k as u64, a), h);
                            assert_eq!(table.d(k as u64, a), h);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn functional_values_at_two() {
        let f = FieldCtx::from_q(49).unwrap();
        let two = f.from_int(2);
        let m2 = f.from_int(-2);
        for k in [0u64, 1, 2, 3, 1_000_000_007] {
            assert_eq!(eval_via_functional(&f, k, two), two);
            let expect = if k % 2 == 0 { two } else { m2 };
            assert_eq!(eval_via_functional(&f, k, m2), expect);
        }
    }

    #[test]
    fn large_k_reduces_mod_group_order() {
        let f = FieldCtx::from_q(49).unwrap();
        let k = 1_000_000_007u64;
        let r = (k % 2400) as usize;
        let d = dickson_d(r);
        for a in f.elements() {
            assert_eq!(eval_via_functional(&f, k, a), d.eval(&f, a));
        }
    }
}
