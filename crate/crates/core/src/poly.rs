//! Dense polynomials over the integers and over GF(q), low degree first.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::ffield::{Arith, Fe, FieldCtx};

/// Polynomial with arbitrary-precision integer coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ZPoly {
    coeffs: Vec<BigInt>,
}

impl ZPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        ZPoly { coeffs }
    }

    pub fn from_i64s(cs: &[i64]) -> Self {
        Self::new(cs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        ZPoly::default()
    }

    pub fn constant(c: i64) -> Self {
        Self::from_i64s(&[c])
    }

    pub fn x() -> Self {
        Self::from_i64s(&[0, 1])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn add(&self, other: &ZPoly) -> ZPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &ZPoly) -> ZPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn neg(&self) -> ZPoly {
        Self::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn scale(&self, c: &BigInt) -> ZPoly {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn mul(&self, other: &ZPoly) -> ZPoly {
        if self.is_zero() || other.is_zero() {
            return ZPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    /// `x * self`
    pub fn shift(&self) -> ZPoly {
        if self.is_zero() {
            return ZPoly::zero();
        }
        let mut cs = Vec::with_capacity(self.coeffs.len() + 1);
        cs.push(BigInt::zero());
        cs.extend(self.coeffs.iter().cloned());
        ZPoly { coeffs: cs }
    }

    /// `self(c*x)`.
    pub fn scale_arg(&self, c: i64) -> ZPoly {
        let c = BigInt::from(c);
        let mut pw = BigInt::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            out.push(a * &pw);
            pw *= &c;
        }
        Self::new(out)
    }

    /// Division with remainder; every quotient step must divide exactly.
    ///
    /// Returns `None` when the divisor is zero or a leading-coefficient
    /// division is inexact, so the result would leave `Z[x]`.
    pub fn div_rem(&self, divisor: &ZPoly) -> Option<(ZPoly, ZPoly)> {
        let dl = divisor.leading()?;
        let dd = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Some((ZPoly::zero(), self.clone()));
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let top = &rem[i + dd];
            if top.is_zero() {
                continue;
            }
            let (qc, r) = top.div_rem(dl);
            if !r.is_zero() {
                return None;
            }
            for (j, c) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= &qc * c;
            }
            quot[i] = qc;
        }
        Some((ZPoly::new(quot), ZPoly::new(rem)))
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// Coefficients reduced into the prime subfield of `f`.
    pub fn reduce(&self, f: &FieldCtx) -> FqPoly {
        let p = BigInt::from(f.p());
        FqPoly::new(
            self.coeffs
                .iter()
                .map(|c| f.from_int(c.mod_floor(&p).to_i64().expect("reduced below p")))
                .collect(),
        )
    }

    /// Horner evaluation with coefficients reduced mod p.
    pub fn eval(&self, f: &FieldCtx, a: Fe) -> Fe {
        let p = BigInt::from(f.p());
        self.coeffs.iter().rev().fold(Fe::ZERO, |acc, c| {
            let c = f.from_int(c.mod_floor(&p).to_i64().expect("reduced below p"));
            f.add(f.mul(acc, a), c)
        })
    }

    /// Coefficients highest degree first, zeros included.
    pub fn descending(&self) -> Vec<BigInt> {
        self.coeffs.iter().rev().cloned().collect()
    }

    pub fn max_abs_coeff(&self) -> BigInt {
        self.coeffs.iter().map(|c| c.abs()).max().unwrap_or_default()
    }
}

impl fmt::Display for ZPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.descending().iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Polynomial with coefficients in one GF(q).
///
/// Operations take the owning field explicitly; the caller keeps polynomials
/// from different fields apart.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct FqPoly {
    coeffs: Vec<Fe>,
}

impl FqPoly {
    pub fn new(mut coeffs: Vec<Fe>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        FqPoly { coeffs }
    }

    pub fn zero() -> Self {
        FqPoly::default()
    }

    pub fn one() -> Self {
        FqPoly { coeffs: vec![Fe::ONE] }
    }

    pub fn constant(c: Fe) -> Self {
        Self::new(vec![c])
    }

    /// `x^k`
    pub fn monomial(k: usize) -> Self {
        let mut cs = vec![Fe::ZERO; k + 1];
        cs[k] = Fe::ONE;
        FqPoly { coeffs: cs }
    }

    /// `x - a`
    pub fn linear(f: &FieldCtx, a: Fe) -> Self {
        Self::new(vec![f.neg(a), Fe::ONE])
    }

    /// `prod (x - a)` over `roots`.
    pub fn from_roots(f: &FieldCtx, roots: &[Fe]) -> Self {
        // incremental expansion; coefficient vector stays monic
        let mut cs = vec![Fe::ONE];
        for &a in roots {
            let na = f.neg(a);
            cs.push(Fe::ZERO);
            for i in (0..cs.len()).rev() {
                let lower = if i > 0 { cs[i - 1] } else { Fe::ZERO };
                cs[i] = f.add(lower, f.mul(na, cs[i]));
            }
        }
        Self::new(cs)
    }

    pub fn coeffs(&self) -> &[Fe] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Fe {
        self.coeffs.get(i).copied().unwrap_or(Fe::ZERO)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn add(&self, f: &FieldCtx, other: &FqPoly) -> FqPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|i| f.add(self.coeff(i), other.coeff(i))).collect())
    }

    pub fn sub(&self, f: &FieldCtx, other: &FqPoly) -> FqPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|i| f.sub(self.coeff(i), other.coeff(i))).collect())
    }

    pub fn scale(&self, f: &FieldCtx, c: Fe) -> FqPoly {
        Self::new(self.coeffs.iter().map(|&a| f.mul(a, c)).collect())
    }

    pub fn mul(&self, f: &FieldCtx, other: &FqPoly) -> FqPoly {
        if self.is_zero() || other.is_zero() {
            return FqPoly::zero();
        }
        let mut out = vec![Fe::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        Self::new(out)
    }

    pub fn pow(&self, f: &FieldCtx, mut k: u64) -> FqPoly {
        let mut acc = FqPoly::one();
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(f, &base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(f, &base);
            }
        }
        acc
    }

    /// `x * self`
    pub fn shift(&self) -> FqPoly {
        if self.is_zero() {
            return FqPoly::zero();
        }
        let mut cs = Vec::with_capacity(self.coeffs.len() + 1);
        cs.push(Fe::ZERO);
        cs.extend_from_slice(&self.coeffs);
        FqPoly { coeffs: cs }
    }

    /// `self(c*x)`.
    pub fn scale_arg(&self, f: &FieldCtx, c: Fe) -> FqPoly {
        let mut pw = Fe::ONE;
        let mut out = Vec::with_capacity(self.coeffs.len());
        for &a in &self.coeffs {
            out.push(f.mul(a, pw));
            pw = f.mul(pw, c);
        }
        Self::new(out)
    }

    pub fn eval(&self, f: &FieldCtx, a: Fe) -> Fe {
        self.coeffs
            .iter()
            .rev()
            .fold(Fe::ZERO, |acc, &c| f.add(f.mul(acc, a), c))
    }

    /// `x^deg(f) * f(1/x)`, canonicalized.
    pub fn reverse(&self) -> Result<FqPoly> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        Ok(Self::new(self.coeffs.iter().rev().copied().collect()))
    }

    /// Exact division by `x`, dropping the constant term.
    pub fn div_x(&self) -> FqPoly {
        Self::new(self.coeffs.iter().skip(1).copied().collect())
    }
}

impl fmt::Display for FqPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.coeffs.iter().rev().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(cs: &[i64]) -> ZPoly {
        ZPoly::from_i64s(cs)
    }

    #[test]
    fn canonical_form() {
        assert_eq!(z(&[1, 2, 0, 0]).coeffs().len(), 2);
        assert!(z(&[0, 0]).is_zero());
        assert_eq!(z(&[]).degree(), None);
    }

    #[test]
    fn zpoly_ring_ops() {
        let a = z(&[1, 1]);
        let b = z(&[-1, 1]);
        assert_eq!(a.mul(&b), z(&[-1, 0, 1]));
        assert_eq!(a.add(&b), z(&[0, 2]));
        assert_eq!(a.sub(&a), ZPoly::zero());
        assert_eq!(z(&[0, 1, 3]).scale_arg(2), z(&[0, 2, 12]));
    }

    #[test]
    fn zpoly_division() {
        // (x^2 - 4) / (x - 2) = x + 2
        let (q, r) = z(&[-4, 0, 1]).div_rem(&z(&[-2, 1])).unwrap();
        assert_eq!(q, z(&[2, 1]));
        assert!(r.is_zero());
        let (q, r) = z(&[1, 0, 1]).div_rem(&z(&[-2, 1])).unwrap();
        assert_eq!(q, z(&[2, 1]));
        assert_eq!(r, z(&[5]));
        // 2x divided by 3x leaves Z[x]
        assert!(z(&[0, 2]).div_rem(&z(&[0, 3])).is_none());
        assert!(z(&[1]).div_rem(&ZPoly::zero()).is_none());
    }

    #[test]
    fn zpoly_eval_and_reduce() {
        let f = FieldCtx::new(7, 1).unwrap();
        let p = z(&[-2, 0, 1]);
        assert_eq!(p.eval_int(&BigInt::from(3)), BigInt::from(7));
        assert_eq!(p.eval(&f, f.from_int(3)), Fe::ZERO);
        assert_eq!(p.reduce(&f).coeffs(), &[f.from_int(5), Fe::ZERO, Fe::ONE]);
        assert_eq!(p.to_string(), "1 0 -2");
    }

    #[test]
    fn fqpoly_from_roots() {
        // (x-3)(x-4) = x^2 - 7x + 12 = x^2 + 5 over GF(7)
        let f = FieldCtx::new(7, 1).unwrap();
        let v = FqPoly::from_roots(&f, &[f.from_int(3), f.from_int(4)]);
        assert_eq!(v.coeffs(), &[f.from_int(5), Fe::ZERO, Fe::ONE]);
        assert_eq!(FqPoly::from_roots(&f, &[]), FqPoly::one());
        for a in f.elements() {
            let expect = f.mul(f.sub(a, f.from_int(3)), f.sub(a, f.from_int(4)));
            assert_eq!(v.eval(&f, a), expect);
        }
    }

    #[test]
    fn fqpoly_reverse() {
        let f = FieldCtx::new(7, 1).unwrap();
        let g = FqPoly::new(vec![Fe::ZERO, f.from_int(3), Fe::ONE]);
        assert_eq!(g.reverse().unwrap(), FqPoly::new(vec![Fe::ONE, f.from_int(3)]));
        let h = FqPoly::new(vec![f.from_int(2), f.from_int(3), Fe::ONE]);
        assert_eq!(h.reverse().unwrap().reverse().unwrap(), h);
        assert_eq!(FqPoly::constant(f.from_int(4)).reverse().unwrap(), FqPoly::constant(f.from_int(4)));
        assert_eq!(FqPoly::zero().reverse(), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn fqpoly_pow_matches_repeated_mul() {
        let f = FieldCtx::from_q(9).unwrap();
        let g = FqPoly::new(vec![f.elem(5).unwrap(), Fe::ONE]);
        let mut acc = FqPoly::one();
        for k in 0..7 {
            assert_eq!(g.pow(&f, k), acc);
            acc = acc.mul(&f, &g);
        }
    }
}
