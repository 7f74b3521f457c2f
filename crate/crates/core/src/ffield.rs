//! Exact arithmetic in GF(p^n) and its quadratic extension GF(q^2).
//!
//! Base-field elements are stored by their canonical integer encoding
//! `enc(a) = sum a_i p^i`, where `a = sum a_i x^i` modulo the field's modulus.
//! The extension is the tower `GF(q)[y] / (y^2 - r1*y - r0)` and its elements
//! encode as `enc(c0) + q * enc(c1)` for `c0 + c1*y`.
//!
//! Construction is deterministic: the modulus is the lexicographically least
//! monic irreducible (compared low-degree-first), the extension uses the
//! enc-least suitable constant, and the extension generator is the enc-least
//! element of order `q^2 - 1`.

use std::cmp::Ordering;
use std::fmt;
use std::hash::Hash;

use serde::{Deserialize, Serialize};

use crate::arith;
use crate::error::{Error, Result};

/// Default cap on `q^2`, large enough for full sweeps at desk scale.
pub const DEFAULT_SIZE_BOUND: u64 = 1 << 26;

/// An element of GF(q), stored by canonical encoding.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Fe(u32);

impl Fe {
    pub const ZERO: Fe = Fe(0);
    pub const ONE: Fe = Fe(1);

    pub fn enc(self) -> u64 {
        self.0 as u64
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    pub(crate) fn raw(self) -> usize {
        self.0 as usize
    }

    pub(crate) fn from_raw(v: u32) -> Fe {
        Fe(v)
    }
}

impl fmt::Display for Fe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// An element `c0 + c1*y` of GF(q^2).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Fe2 {
    pub c0: Fe,
    pub c1: Fe,
}

impl Fe2 {
    pub fn from_base(a: Fe) -> Self {
        Fe2 { c0: a, c1: Fe::ZERO }
    }

    /// `Some(a)` when the element lies in the base field.
    pub fn to_base(self) -> Option<Fe> {
        self.c1.is_zero().then_some(self.c0)
    }

    pub fn enc(self, q: u64) -> u64 {
        self.c0.enc() + q * self.c1.enc()
    }
}

// Ordering by (c1, c0) coincides with ordering by the tower encoding.
impl Ord for Fe2 {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.c1, self.c0).cmp(&(other.c1, other.c0))
    }
}

impl PartialOrd for Fe2 {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Fe2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.c1.is_zero() {
            write!(f, "{}", self.c0)
        } else {
            write!(f, "{}+{}y", self.c0, self.c1)
        }
    }
}

/// Field operations shared by GF(q) and GF(q^2).
pub trait Arith {
    type Elem: Copy + Eq + Ord + Hash + fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: Self::Elem, b: Self::Elem) -> Self::Elem;
    fn neg(&self, a: Self::Elem) -> Self::Elem;
    fn mul(&self, a: Self::Elem, b: Self::Elem) -> Self::Elem;
    fn inv(&self, a: Self::Elem) -> Result<Self::Elem>;
    /// Order of the multiplicative group.
    fn group_order(&self) -> u64;
    fn group_order_factors(&self) -> &[(u64, u32)];

    fn sub(&self, a: Self::Elem, b: Self::Elem) -> Self::Elem {
        self.add(a, self.neg(b))
    }

    fn div(&self, a: Self::Elem, b: Self::Elem) -> Result<Self::Elem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    fn square(&self, a: Self::Elem) -> Self::Elem {
        self.mul(a, a)
    }

    /// Square-and-multiply.
    fn pow(&self, a: Self::Elem, mut k: u64) -> Self::Elem {
        let mut acc = self.one();
        let mut base = a;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    /// Least `d >= 1` with `a^d = 1`, found by stripping prime factors off
    /// the group order.
    fn order(&self, a: Self::Elem) -> Result<u64> {
        if a == self.zero() {
            return Err(Error::ZeroOrder);
        }
        let mut ord = self.group_order();
        for &(r, e) in self.group_order_factors() {
            for _ in 0..e {
                if self.pow(a, ord / r) == self.one() {
                    ord /= r;
                } else {
                    break;
                }
            }
        }
        Ok(ord)
    }

    /// `<u> = u + 1/u`.
    fn ang(&self, u: Self::Elem) -> Result<Self::Elem> {
        Ok(self.add(u, self.inv(u)?))
    }
}

#[derive(Clone, Debug)]
struct ExtRelation {
    // y^2 = r1*y + r0
    r1: Fe,
    r0: Fe,
}

/// A constructed field GF(p^n) together with its quadratic extension.
///
/// Immutable after construction.
#[derive(Clone)]
pub struct FieldCtx {
    p: u32,
    n: u32,
    q: u32,
    modulus: Vec<u32>,
    ext: ExtRelation,
    exp: Vec<u32>,
    log: Vec<u32>,
    negs: Vec<u32>,
    chi: Vec<i8>,
    base_factors: Vec<(u64, u32)>,
    ext_factors: Vec<(u64, u32)>,
    generator2: Fe2,
    // z with z^2 + z = c, indexed by c (characteristic 2 only); u32::MAX if none
    artin_schreier: Vec<u32>,
}

impl fmt::Debug for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldCtx")
            .field("p", &self.p)
            .field("n", &self.n)
            .field("modulus", &self.modulus)
            .field("ext_modulus", &self.ext_modulus())
            .field("generator2", &self.generator2)
            .finish()
    }
}

// --- polynomial helpers over GF(p), low degree first -------------------------

fn trim(v: &mut Vec<u32>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn poly_mulmod(a: &[u32], b: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let p64 = p as u64;
    let mut prod = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p64;
        }
    }
    let mut r: Vec<u32> = prod.into_iter().map(|c| c as u32).collect();
    poly_rem_in_place(&mut r, m, p);
    r
}

// m is monic
fn poly_rem_in_place(r: &mut Vec<u32>, m: &[u32], p: u32) {
    let dm = m.len() - 1;
    trim(r);
    while r.len() > dm {
        let lead = *r.last().unwrap() as u64;
        let shift = r.len() - 1 - dm;
        for (i, &c) in m.iter().enumerate() {
            let idx = shift + i;
            let sub = lead * c as u64 % p as u64;
            r[idx] = ((r[idx] as u64 + p as u64 - sub) % p as u64) as u32;
        }
        trim(r);
    }
}

fn poly_rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    // general (non-monic) remainder
    let mut r = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    let inv_lead = mod_inv(*b.last().unwrap() as u64, p as u64);
    while r.len() > db {
        let coef = *r.last().unwrap() as u64 * inv_lead % p as u64;
        let shift = r.len() - 1 - db;
        for (i, &c) in b.iter().enumerate() {
            let idx = shift + i;
            let sub = coef * c as u64 % p as u64;
            r[idx] = ((r[idx] as u64 + p as u64 - sub) % p as u64) as u32;
        }
        trim(&mut r);
    }
    r
}

fn poly_gcd(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let r = poly_rem(&a, &b, p);
        a = b;
        b = r;
    }
    a
}

fn mod_inv(a: u64, p: u64) -> u64 {
    // p prime
    let mut acc = 1u64;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    acc
}

fn poly_powmod(base: &[u32], mut e: u64, m: &[u32], p: u32) -> Vec<u32> {
    let mut acc = vec![1u32];
    let mut b = base.to_vec();
    poly_rem_in_place(&mut b, m, p);
    while e > 0 {
        if e & 1 == 1 {
            acc = poly_mulmod(&acc, &b, m, p);
        }
        b = poly_mulmod(&b, &b, m, p);
        e >>= 1;
    }
    acc
}

/// Rabin's irreducibility test for a monic `f` of degree `n >= 1`.
fn is_irreducible(f: &[u32], p: u32) -> bool {
    let n = f.len() as u32 - 1;
    if n == 1 {
        return true;
    }
    if f[0] == 0 {
        return false;
    }
    let x = vec![0u32, 1];
    // x^(p^i) mod f for i = 0..=n
    let mut frob = vec![x.clone()];
    for i in 1..=n as usize {
        let next = poly_powmod(&frob[i - 1], p as u64, f, p);
        frob.push(next);
    }
    let sub_x = |g: &[u32]| {
        let mut h = g.to_vec();
        if h.len() < 2 {
            h.resize(2, 0);
        }
        h[1] = (h[1] + p - 1) % p;
        trim(&mut h);
        h
    };
    if !sub_x(&frob[n as usize]).is_empty() {
        return false;
    }
    for (r, _) in arith::factorize(n as u64) {
        let h = sub_x(&frob[(n as u64 / r) as usize]);
        let g = poly_gcd(f, &h, p);
        if g.len() != 1 {
            return false;
        }
    }
    true
}

fn least_irreducible(p: u32, n: u32) -> Vec<u32> {
    if n == 1 {
        return vec![0, 1];
    }
    let total = (p as u64).pow(n);
    for idx in 0..total {
        // c_0 is the most significant digit of idx
        let mut coeffs = vec![0u32; n as usize + 1];
        let mut rest = idx;
        for i in (0..n as usize).rev() {
            coeffs[i] = (rest % p as u64) as u32;
            rest /= p as u64;
        }
        coeffs[n as usize] = 1;
        if is_irreducible(&coeffs, p) {
            return coeffs;
        }
    }
    unreachable!("an irreducible of every degree exists")
}

fn digits(mut enc: u64, p: u32, n: u32) -> Vec<u32> {
    let mut v = Vec::with_capacity(n as usize);
    for _ in 0..n {
        v.push((enc % p as u64) as u32);
        enc /= p as u64;
    }
    trim(&mut v);
    v
}

fn undigits(v: &[u32], p: u32) -> u32 {
    v.iter().rev().fold(0u32, |acc, &d| acc * p + d)
}

impl FieldCtx {
    /// Builds GF(p^n) with the default size bound.
    pub fn new(p: u64, n: u32) -> Result<Self> {
        Self::with_bound(p, n, DEFAULT_SIZE_BOUND)
    }

    /// Builds GF(q) from a prime power `q`.
    pub fn from_q(q: u64) -> Result<Self> {
        let (p, n) = arith::prime_power(q).ok_or(Error::NotPrimePower(q))?;
        Self::new(p, n)
    }

    pub fn with_bound(p: u64, n: u32, bound: u64) -> Result<Self> {
        if !arith::is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if n == 0 {
            return Err(Error::ZeroDegree);
        }
        let q128 = (p as u128).checked_pow(n).unwrap_or(u128::MAX);
        let q_squared = q128.saturating_mul(q128);
        if q_squared > bound as u128 || q128 > u32::MAX as u128 / 2 {
            return Err(Error::TooLarge { q_squared, bound });
        }
        let p32 = p as u32;
        let q = q128 as u32;
        let modulus = least_irreducible(p32, n);

        // enc-least primitive element of GF(q)
        let mut exp = vec![0u32; (q - 1) as usize];
        let mut found = false;
        for cand in 1..q {
            let g = digits(cand as u64, p32, n);
            let mut cur = vec![1u32];
            let mut period = 0u32;
            loop {
                exp[period as usize] = undigits(&cur, p32);
                cur = poly_mulmod(&cur, &g, &modulus, p32);
                period += 1;
                if cur == [1] || period == q - 1 {
                    break;
                }
            }
            if period == q - 1 && cur == [1] {
                found = true;
                break;
            }
        }
        debug_assert!(found);
        let mut log = vec![u32::MAX; q as usize];
        for (i, &e) in exp.iter().enumerate() {
            log[e as usize] = i as u32;
        }

        let mut ctx = FieldCtx {
            p: p32,
            n,
            q,
            modulus,
            ext: ExtRelation { r1: Fe::ZERO, r0: Fe::ZERO },
            exp,
            log,
            negs: Vec::new(),
            chi: Vec::new(),
            base_factors: arith::factorize(q as u64 - 1),
            ext_factors: arith::factorize(q as u64 * q as u64 - 1),
            generator2: Fe2::default(),
            artin_schreier: Vec::new(),
        };
        ctx.negs = (0..q).map(|a| ctx.neg_slow(a)).collect();

        if p32 == 2 {
            let mut table = vec![u32::MAX; q as usize];
            for z in 0..q {
                let z = Fe(z);
                let c = ctx.add(ctx.mul(z, z), z);
                if table[c.raw()] == u32::MAX {
                    table[c.raw()] = z.0;
                }
            }
            ctx.artin_schreier = table;
            let t = ctx
                .elements()
                .find(|&a| ctx.abs_trace(a).ok() == Some(1))
                .expect("trace is surjective");
            ctx.ext = ExtRelation { r1: Fe::ONE, r0: t };
        } else {
            let half = (q as u64 - 1) / 2;
            ctx.chi = (0..q)
                .map(|a| {
                    let v = ctx.pow(Fe(a), half);
                    if a == 0 {
                        0
                    } else if v == Fe::ONE {
                        1
                    } else {
                        -1
                    }
                })
                .collect();
            let t = ctx
                .elements()
                .find(|&a| ctx.chi[a.raw()] == -1)
                .expect("odd fields have nonsquares");
            ctx.ext = ExtRelation { r1: Fe::ZERO, r0: t };
        }

        let q2 = q as u64 * q as u64;
        let ext = ctx.ext();
        let mut gen2 = None;
        for enc in 1..q2 {
            let cand = ctx.ext_from_enc_unchecked(enc);
            if ext.order(cand).expect("nonzero") == q2 - 1 {
                gen2 = Some(cand);
                break;
            }
        }
        ctx.generator2 = gen2.expect("GF(q^2)^x is cyclic");
        Ok(ctx)
    }

    pub fn p(&self) -> u64 {
        self.p as u64
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn q(&self) -> u64 {
        self.q as u64
    }

    pub fn is_odd(&self) -> bool {
        self.p != 2
    }

    /// Monic modulus over GF(p), low degree first.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// The extension modulus `y^2 + b*y + c` as `[c, b, 1]` over GF(q).
    pub fn ext_modulus(&self) -> [Fe; 3] {
        [self.neg(self.ext.r0), self.neg(self.ext.r1), Fe::ONE]
    }

    /// `(-1)^((q-1)/2)`, odd q only.
    pub fn epsilon(&self) -> Option<i64> {
        self.is_odd()
            .then(|| if ((self.q as u64 - 1) / 2).is_multiple_of(2) { 1 } else { -1 })
    }

    /// `(q - epsilon) / 4`, odd q only.
    pub fn m(&self) -> Option<u64> {
        self.epsilon()
            .map(|e| ((self.q as i64 - e) / 4) as u64)
    }

    pub fn generator2(&self) -> Fe2 {
        self.generator2
    }

    /// Generator of GF(q)^x used for the internal log tables.
    pub fn primitive(&self) -> Fe {
        Fe(self.exp[if self.q > 2 { 1 } else { 0 }])
    }

    pub fn ext(&self) -> Ext<'_> {
        Ext(self)
    }

    /// Checked conversion from an encoding.
    pub fn elem(&self, enc: u64) -> Result<Fe> {
        if enc >= self.q as u64 {
            return Err(Error::OutOfRange { enc, size: self.q as u64 });
        }
        Ok(Fe(enc as u32))
    }

    pub fn ext_elem(&self, enc: u64) -> Result<Fe2> {
        let q = self.q as u64;
        if enc >= q * q {
            return Err(Error::OutOfRange { enc, size: q * q });
        }
        Ok(self.ext_from_enc_unchecked(enc))
    }

    fn ext_from_enc_unchecked(&self, enc: u64) -> Fe2 {
        let q = self.q as u64;
        Fe2 { c0: Fe((enc % q) as u32), c1: Fe((enc / q) as u32) }
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, v: i64) -> Fe {
        Fe(v.rem_euclid(self.p as i64) as u32)
    }

    /// All elements in encoding order.
    pub fn elements(&self) -> impl Iterator<Item = Fe> + '_ {
        (0..self.q).map(Fe)
    }

    pub fn nonzero_elements(&self) -> impl Iterator<Item = Fe> + '_ {
        (1..self.q).map(Fe)
    }

    /// GF(p) coefficient vector of a base element (length n).
    pub fn coeffs(&self, a: Fe) -> Vec<u32> {
        let mut v = digits(a.enc(), self.p, self.n);
        v.resize(self.n as usize, 0);
        v
    }

    fn neg_slow(&self, a: u32) -> u32 {
        if self.p == 2 {
            return a;
        }
        let mut out = 0u32;
        let mut place = 1u32;
        let mut rest = a;
        for _ in 0..self.n {
            let d = rest % self.p;
            out += ((self.p - d) % self.p) * place;
            rest /= self.p;
            place = place.wrapping_mul(self.p);
        }
        out
    }

    /// Legendre symbol `(a|q)` as `a^((q-1)/2)` mapped to {1, -1, 0}.
    pub fn legendre(&self, a: Fe) -> Result<i8> {
        if !self.is_odd() {
            return Err(Error::RequiresOddQ);
        }
        Ok(self.chi[a.raw()])
    }

    /// Table lookup for hot loops; callers guarantee odd q.
    #[inline]
    pub(crate) fn chi(&self, a: Fe) -> i8 {
        self.chi[a.raw()]
    }

    /// Canonical square root (`enc(r) < enc(-r)`), or `None` for nonsquares.
    ///
    /// Odd q uses Tonelli-Shanks; in characteristic 2 the root is `a^(q/2)`.
    pub fn sqrt(&self, a: Fe) -> Option<Fe> {
        if a.is_zero() {
            return Some(Fe::ZERO);
        }
        if !self.is_odd() {
            return Some(self.pow(a, self.q as u64 / 2));
        }
        if self.chi[a.raw()] != 1 {
            return None;
        }
        let q1 = self.q as u64 - 1;
        let s = q1.trailing_zeros();
        let odd = q1 >> s;
        let z = self.ext.r0; // least nonsquare
        let mut m = s;
        let mut c = self.pow(z, odd);
        let mut t = self.pow(a, odd);
        let mut r = self.pow(a, odd.div_ceil(2));
        while t != Fe::ONE {
            let mut i = 0;
            let mut t2 = t;
            while t2 != Fe::ONE {
                t2 = self.mul(t2, t2);
                i += 1;
            }
            let b = self.pow(c, 1u64 << (m - i - 1));
            m = i;
            c = self.mul(b, b);
            t = self.mul(t, c);
            r = self.mul(r, b);
        }
        let neg = self.neg(r);
        Some(r.min(neg))
    }

    /// Absolute trace `sum_{i<n} a^(2^i)` read as 0 or 1.
    pub fn abs_trace(&self, a: Fe) -> Result<u8> {
        if self.is_odd() {
            return Err(Error::RequiresEvenQ);
        }
        let mut acc = Fe::ZERO;
        let mut cur = a;
        for _ in 0..self.n {
            acc = self.add(acc, cur);
            cur = self.mul(cur, cur);
        }
        debug_assert!(acc.enc() <= 1);
        Ok(acc.0 as u8)
    }

    /// Element of order exactly `d` in GF(q^2)^x: `generator2^((q^2-1)/d)`.
    pub fn mu_root(&self, d: u64) -> Result<Fe2> {
        let group_order = self.q as u64 * self.q as u64 - 1;
        if d == 0 || !group_order.is_multiple_of(d) || d.is_multiple_of(self.p as u64) {
            return Err(Error::NotDivisor { d, group_order });
        }
        Ok(self.ext().pow(self.generator2, group_order / d))
    }

    /// The two roots of `u^2 - a*u + 1` in GF(q^2), smaller encoding first.
    pub fn ang_preimages(&self, a: Fe) -> (Fe2, Fe2) {
        let ext = self.ext();
        let u = if self.is_odd() {
            // u = (a + sqrt(a^2 - 4)) / 2
            let disc = self.sub(self.mul(a, a), self.from_int(4));
            let root = match self.sqrt(disc) {
                Some(r) => Fe2::from_base(r),
                None => {
                    // disc / t is a square and y^2 = t
                    let w = self
                        .sqrt(self.div(disc, self.ext.r0).expect("t != 0"))
                        .expect("disc/t is a square");
                    Fe2 { c0: Fe::ZERO, c1: w }
                }
            };
            let half = self.inv(self.from_int(2)).expect("odd");
            ext.mul(ext.add(Fe2::from_base(a), root), Fe2::from_base(half))
        } else if a.is_zero() {
            Fe2::from_base(Fe::ONE)
        } else {
            // u = a*z with z^2 + z = 1/a^2
            let c = self.inv(self.mul(a, a)).expect("a != 0");
            let z = match self.artin_schreier[c.raw()] {
                u32::MAX => {
                    // c - t has trace 0; z = z0 + y since y^2 + y = t
                    let z0 = self.artin_schreier[self.sub(c, self.ext.r0).raw()];
                    debug_assert_ne!(z0, u32::MAX);
                    Fe2 { c0: Fe(z0), c1: Fe::ONE }
                }
                z => Fe2::from_base(Fe(z)),
            };
            ext.mul(Fe2::from_base(a), z)
        };
        let v = ext.inv(u).expect("u != 0");
        if u <= v {
            (u, v)
        } else {
            (v, u)
        }
    }
}

impl Arith for FieldCtx {
    type Elem = Fe;

    fn zero(&self) -> Fe {
        Fe::ZERO
    }

    fn one(&self) -> Fe {
        Fe::ONE
    }

    #[inline]
    fn add(&self, a: Fe, b: Fe) -> Fe {
        if self.p == 2 {
            return Fe(a.0 ^ b.0);
        }
        if self.n == 1 {
            let s = a.0 + b.0;
            return Fe(if s >= self.p { s - self.p } else { s });
        }
        let (mut x, mut y) = (a.0, b.0);
        let mut out = 0u32;
        let mut place = 1u32;
        while x > 0 || y > 0 {
            let s = x % self.p + y % self.p;
            out += if s >= self.p { s - self.p } else { s } * place;
            x /= self.p;
            y /= self.p;
            place = place.wrapping_mul(self.p);
        }
        Fe(out)
    }

    #[inline]
    fn neg(&self, a: Fe) -> Fe {
        Fe(self.negs[a.raw()])
    }

    #[inline]
    fn mul(&self, a: Fe, b: Fe) -> Fe {
        if a.0 == 0 || b.0 == 0 {
            return Fe::ZERO;
        }
        let ord = self.q - 1;
        let s = self.log[a.raw()] + self.log[b.raw()];
        Fe(self.exp[(if s >= ord { s - ord } else { s }) as usize])
    }

    fn inv(&self, a: Fe) -> Result<Fe> {
        if a.0 == 0 {
            return Err(Error::ZeroInverse);
        }
        let ord = self.q - 1;
        let l = self.log[a.raw()];
        Ok(Fe(self.exp[((ord - l) % ord) as usize]))
    }

    fn pow(&self, a: Fe, k: u64) -> Fe {
        if k == 0 {
            return Fe::ONE;
        }
        if a.0 == 0 {
            return Fe::ZERO;
        }
        let ord = (self.q - 1) as u64;
        let l = self.log[a.raw()] as u64;
        Fe(self.exp[(l * (k % ord) % ord) as usize])
    }

    fn group_order(&self) -> u64 {
        self.q as u64 - 1
    }

    fn group_order_factors(&self) -> &[(u64, u32)] {
        &self.base_factors
    }
}

/// View of a [`FieldCtx`] as GF(q^2).
#[derive(Clone, Copy)]
pub struct Ext<'a>(&'a FieldCtx);

impl<'a> Ext<'a> {
    pub fn base(&self) -> &'a FieldCtx {
        self.0
    }

    /// `a^q`; fixes exactly the base field.
    pub fn frobenius(&self, a: Fe2) -> Fe2 {
        self.pow(a, self.0.q as u64)
    }
}

impl Arith for Ext<'_> {
    type Elem = Fe2;

    fn zero(&self) -> Fe2 {
        Fe2::default()
    }

    fn one(&self) -> Fe2 {
        Fe2::from_base(Fe::ONE)
    }

    #[inline]
    fn add(&self, a: Fe2, b: Fe2) -> Fe2 {
        let f = self.0;
        Fe2 { c0: f.add(a.c0, b.c0), c1: f.add(a.c1, b.c1) }
    }

    #[inline]
    fn neg(&self, a: Fe2) -> Fe2 {
        let f = self.0;
        Fe2 { c0: f.neg(a.c0), c1: f.neg(a.c1) }
    }

    #[inline]
    fn mul(&self, a: Fe2, b: Fe2) -> Fe2 {
        let f = self.0;
        let hi = f.mul(a.c1, b.c1);
        let c0 = f.add(f.mul(a.c0, b.c0), f.mul(f.ext.r0, hi));
        let cross = f.add(f.mul(a.c0, b.c1), f.mul(a.c1, b.c0));
        let c1 = if f.ext.r1.is_zero() { cross } else { f.add(cross, hi) };
        Fe2 { c0, c1 }
    }

    fn inv(&self, a: Fe2) -> Result<Fe2> {
        let f = self.0;
        if a == Fe2::default() {
            return Err(Error::ZeroInverse);
        }
        // conjugate of y is r1 - y, and y * conj(y) = -r0
        let conj = Fe2 { c0: f.add(a.c0, f.mul(a.c1, f.ext.r1)), c1: f.neg(a.c1) };
        let norm = self.mul(a, conj);
        debug_assert!(norm.c1.is_zero());
        let ninv = f.inv(norm.c0)?;
        Ok(Fe2 { c0: f.mul(conj.c0, ninv), c1: f.mul(conj.c1, ninv) })
    }

    fn group_order(&self) -> u64 {
        let q = self.0.q as u64;
        q * q - 1
    }

    fn group_order_factors(&self) -> &[(u64, u32)] {
        &self.0.ext_factors
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_constants() {
        let f = FieldCtx::new(7, 1).unwrap();
        assert_eq!(f.modulus(), &[0, 1]);
        assert_eq!(f.epsilon(), Some(-1));
        assert_eq!(f.m(), Some(2));
        let f9 = FieldCtx::new(3, 2).unwrap();
        assert_eq!(f9.q(), 9);
        assert_eq!(f9.epsilon(), Some(1));
        assert_eq!(f9.m(), Some(2));
        let f16 = FieldCtx::new(2, 4).unwrap();
        assert_eq!(f16.q(), 16);
        assert_eq!(f16.epsilon(), None);
        assert_eq!(f16.m(), None);
    }

    #[test]
    fn construction_errors() {
        assert_eq!(FieldCtx::new(6, 1).unwrap_err(), Error::NotPrime(6));
        assert_eq!(FieldCtx::new(5, 0).unwrap_err(), Error::ZeroDegree);
        assert!(matches!(FieldCtx::new(2, 14), Err(Error::TooLarge { .. })));
        assert!(FieldCtx::new(2, 13).is_ok());
    }

    #[test]
    fn least_irreducibles() {
        // x^2 + 1 is reducible over GF(2); x^2 + x + 1 is the least irreducible
        assert_eq!(least_irreducible(2, 2), vec![1, 1, 1]);
        // over GF(3): c0 = 1 gives x^2+1 (irreducible, -1 nonsquare mod 3)
        assert_eq!(least_irreducible(3, 2), vec![1, 0, 1]);
        // x^3 + x^2 + 1 precedes x^3 + x + 1 when c1 is compared before c2
        assert_eq!(least_irreducible(2, 3), vec![1, 0, 1, 1]);
        assert_eq!(least_irreducible(2, 4), vec![1, 0, 0, 1, 1]);
    }

    #[test]
    fn inverse_in_gf7() {
        let f = FieldCtx::new(7, 1).unwrap();
        assert_eq!(f.inv(Fe(3)).unwrap(), Fe(5));
        assert_eq!(f.inv(Fe::ZERO), Err(Error::ZeroInverse));
    }

    #[test]
    fn field_axioms_small_fields() {
        for (p, n) in [(2, 1), (2, 3), (3, 2), (5, 1), (5, 2), (7, 1), (2, 4)] {
            let f = FieldCtx::new(p, n).unwrap();
            for a in f.elements() {
                assert_eq!(f.add(a, f.neg(a)), Fe::ZERO);
                if !a.is_zero() {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), Fe::ONE);
                }
                for b in f.elements() {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for c in f.elements().step_by(3) {
                        assert_eq!(
                            f.mul(a, f.add(b, c)),
                            f.add(f.mul(a, b), f.mul(a, c))
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn mul_agrees_with_polynomial_reduction() {
        let f = FieldCtx::new(3, 3).unwrap();
        for a in f.elements() {
            for b in f.elements() {
                let direct = poly_mulmod(&f.coeffs(a), &f.coeffs(b), f.modulus(), 3);
                assert_eq!(undigits(&direct, 3), f.mul(a, b).0);
            }
        }
    }

    #[test]
    fn generator2_has_full_order() {
        for q in [2u64, 3, 4, 5, 7, 8, 9, 16, 25, 29] {
            let f = FieldCtx::from_q(q).unwrap();
            let ext = f.ext();
            let g = f.generator2();
            assert_eq!(ext.pow(g, q * q - 1), ext.one());
            assert_eq!(ext.order(g).unwrap(), q * q - 1);
            // enc-least: no smaller encoding generates
            let genc = g.enc(q);
            for enc in 1..genc {
                let c = f.ext_elem(enc).unwrap();
                assert!(ext.order(c).unwrap() < q * q - 1);
            }
        }
    }

    #[test]
    fn ext_inverse_and_frobenius() {
        for q in [4u64, 9, 11] {
            let f = FieldCtx::from_q(q).unwrap();
            let ext = f.ext();
            let mut fixed = 0;
            for enc in 0..q * q {
                let a = f.ext_elem(enc).unwrap();
                if enc > 0 {
                    assert_eq!(ext.mul(a, ext.inv(a).unwrap()), ext.one());
                }
                if ext.frobenius(a) == a {
                    fixed += 1;
                    assert!(a.to_base().is_some());
                }
            }
            assert_eq!(fixed, q);
        }
    }

    #[test]
    fn legendre_in_gf29() {
        let f = FieldCtx::new(29, 1).unwrap();
        let squares: Vec<u64> = f
            .nonzero_elements()
            .filter(|&a| f.legendre(a).unwrap() == 1)
            .map(Fe::enc)
            .collect();
        assert_eq!(squares, vec![1, 4, 5, 6, 7, 9, 13, 16, 20, 22, 23, 24, 25, 28]);
        assert_eq!(f.legendre(Fe(4)).unwrap(), 1);
        assert_eq!(f.legendre(Fe(3)).unwrap(), -1);
        assert_eq!(f.legendre(Fe(0)).unwrap(), 0);
        let f16 = FieldCtx::new(2, 4).unwrap();
        assert_eq!(f16.legendre(Fe(3)), Err(Error::RequiresOddQ));
    }

    #[test]
    fn legendre_multiplicative() {
        let f = FieldCtx::new(5, 2).unwrap();
        for a in f.nonzero_elements() {
            for b in f.nonzero_elements() {
                let lhs = f.legendre(f.mul(a, b)).unwrap();
                assert_eq!(lhs, f.legendre(a).unwrap() * f.legendre(b).unwrap());
            }
        }
    }

    #[test]
    fn sqrt_in_gf7() {
        // oracle: exhaustive squaring
        let f = FieldCtx::new(7, 1).unwrap();
        let mut roots: Vec<Vec<u64>> = vec![Vec::new(); 7];
        for r in 0..7u64 {
            roots[(r * r % 7) as usize].push(r);
        }
        assert_eq!(roots[2], vec![3, 4]);
        assert!(roots[3].is_empty());
        assert_eq!(f.sqrt(Fe(2)), Some(Fe(3)));
        assert_eq!(f.sqrt(Fe(3)), None);
        assert_eq!(f.sqrt(Fe(0)), Some(Fe(0)));
    }

    #[test]
    fn sqrt_matches_squaring_table() {
        for q in [3u64, 9, 13, 17, 25, 27, 41, 49, 81, 97, 121, 125, 257] {
            let f = FieldCtx::from_q(q).unwrap();
            let mut table: Vec<Option<Fe>> = vec![None; q as usize];
            for r in f.elements() {
                let s = f.mul(r, r);
                let slot = &mut table[s.raw()];
                *slot = Some(slot.map_or(r, |old: Fe| old.min(r)));
            }
            for a in f.elements() {
                assert_eq!(f.sqrt(a), table[a.raw()], "q={q} a={a}");
                assert_eq!(f.sqrt(a).is_some(), a.is_zero() || f.legendre(a).unwrap() == 1);
            }
        }
        let f = FieldCtx::from_q(32).unwrap();
        for a in f.elements() {
            let r = f.sqrt(a).unwrap();
            assert_eq!(f.mul(r, r), a);
        }
    }

    #[test]
    fn trace_values_and_kernel() {
        let f4 = FieldCtx::from_q(4).unwrap();
        assert_eq!(f4.abs_trace(Fe::ONE).unwrap(), 0);
        let f8 = FieldCtx::from_q(8).unwrap();
        assert_eq!(f8.abs_trace(Fe::ONE).unwrap(), 1);
        for n in 1..=8 {
            let f = FieldCtx::new(2, n).unwrap();
            let kernel = f.elements().filter(|&a| f.abs_trace(a).unwrap() == 0).count();
            assert_eq!(kernel as u64, f.q() / 2);
        }
        assert_eq!(FieldCtx::from_q(9).unwrap().abs_trace(Fe::ONE), Err(Error::RequiresEvenQ));
    }

    #[test]
    fn element_orders() {
        let f = FieldCtx::from_q(13).unwrap();
        assert_eq!(f.order(Fe::ONE).unwrap(), 1);
        assert_eq!(f.order(f.neg(Fe::ONE)).unwrap(), 2);
        assert_eq!(f.order(Fe::ZERO), Err(Error::ZeroOrder));
        assert_eq!(f.ext().order(f.generator2()).unwrap(), 168);
    }

    #[test]
    fn mu_roots() {
        let f = FieldCtx::from_q(11).unwrap();
        let ext = f.ext();
        assert_eq!(f.mu_root(1).unwrap(), ext.one());
        assert_eq!(f.mu_root(2).unwrap(), ext.neg(ext.one()));
        for d in arith::divisors(120) {
            let r = f.mu_root(d).unwrap();
            assert_eq!(ext.order(r).unwrap(), d);
            for k in 1..30u64 {
                let g = arith::gcd(d, k);
                assert_eq!(ext.order(ext.pow(r, k)).unwrap(), d / g);
            }
        }
        assert!(matches!(f.mu_root(7), Err(Error::NotDivisor { .. })));
        assert!(matches!(f.mu_root(0), Err(Error::NotDivisor { .. })));
    }

    #[test]
    fn ang_values() {
        let f = FieldCtx::from_q(13).unwrap();
        assert_eq!(f.ang(Fe::ONE).unwrap(), f.from_int(2));
        assert_eq!(f.ang(f.neg(Fe::ONE)).unwrap(), f.from_int(-2));
        let ext = f.ext();
        let i = f.mu_root(4).unwrap();
        assert_eq!(ext.ang(i).unwrap(), ext.zero());
        assert_eq!(f.ang(Fe::ZERO), Err(Error::ZeroInverse));
    }

    #[test]
    fn ang_preimages_solve_quadratic() {
        for q in [2u64, 3, 4, 7, 8, 9, 16, 25, 27, 32] {
            let f = FieldCtx::from_q(q).unwrap();
            let ext = f.ext();
            for a in f.elements() {
                let (u, v) = f.ang_preimages(a);
                assert_eq!(ext.mul(u, v), ext.one());
                assert_eq!(ext.add(u, v), Fe2::from_base(a), "q={q} a={a}");
            }
        }
    }

    #[test]
    fn ang_equality_iff_inverse() {
        let f = FieldCtx::from_q(7).unwrap();
        let ext = f.ext();
        let all: Vec<Fe2> = (1..49).map(|e| f.ext_elem(e).unwrap()).collect();
        for &u in &all {
            for &v in &all {
                let same = ext.ang(u).unwrap() == ext.ang(v).unwrap();
                assert_eq!(same, v == u || v == ext.inv(u).unwrap());
            }
        }
    }

    #[test]
    fn construction_is_deterministic() {
        let a = FieldCtx::from_q(81).unwrap();
        let b = FieldCtx::from_q(81).unwrap();
        assert_eq!(a.modulus(), b.modulus());
        assert_eq!(a.generator2(), b.generator2());
        assert_eq!(a.exp, b.exp);
        assert_eq!(a.ext_modulus(), b.ext_modulus());
    }
}
