//! Canonical subsets of GF(q), their sizes, products and cycle structure.

use std::fmt;

use crate::error::{Error, Result};
use crate::ffield::{Arith, Fe, Fe2, FieldCtx};
use crate::poly::FqPoly;
use crate::polyfam::eval_via_functional;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn from_value(v: i64) -> Result<Sign> {
        match v {
            1 => Ok(Sign::Plus),
            -1 => Ok(Sign::Minus),
            _ => Err(Error::InvalidArgument(format!("sign must be 1 or -1, got {v}"))),
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn times(self, other: Sign) -> Sign {
        if self == other {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    fn parse(c: char) -> Option<Sign> {
        match c {
            '+' => Some(Sign::Plus),
            '-' => Some(Sign::Minus),
            _ => None,
        }
    }

    fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

/// Identifies one of the canonical subsets. Field elements are stored as
/// elements of the field the id is used with.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SubsetId {
    /// d-th roots of unity, materialized when they lie in GF(q).
    Mu(u64),
    /// `{<a> : a in mu_d}`.
    Delta(u64),
    /// `Delta(d)` without `Z`.
    DeltaStar(u64),
    /// `{u : (u - l | q) = e1, (u + l | q) = e2}`.
    A { lambda: Fe, e1: Sign, e2: Sign },
    /// `{b : (l - b | q) = e1, (l + b | q) = e2}`.
    B { lambda: Fe, e1: Sign, e2: Sign },
    /// `a^2 - 4` a nonzero square.
    S,
    /// `a^2 - 4` a nonsquare.
    N,
    /// `{2, -2}`, or `{0}` in characteristic 2.
    Z,
    /// Nonzero `a` with absolute trace of `1/a` equal to `j`.
    Trace(u8),
    /// `{a != 0 : (j - a | q) = e1, (l + a | q) = e2}`.
    Tjl { j: Fe, l: Fe, e1: Sign, e2: Sign },
}

impl SubsetId {
    pub fn a2(f: &FieldCtx, e1: Sign, e2: Sign) -> SubsetId {
        SubsetId::A { lambda: f.from_int(2), e1, e2 }
    }

    pub fn b2(f: &FieldCtx, e1: Sign, e2: Sign) -> SubsetId {
        SubsetId::B { lambda: f.from_int(2), e1, e2 }
    }

    /// Parses `A2++`, `B2--`, `A5+-`, `S`, `N`, `Z`, `T0`, `T1`, `T40--`,
    /// `T4,0--`, `MU8`, `DELTA8`, `DELTA*8`. Integers map into the prime field.
    pub fn parse(f: &FieldCtx, spec: &str) -> Result<SubsetId> {
        let bad = || Error::InvalidSubset(spec.to_string());
        let s = spec.trim();
        let upper = s.to_ascii_uppercase();
        let int = |t: &str| t.parse::<i64>().map_err(|_| bad());
        let posint = |t: &str| t.parse::<u64>().map_err(|_| bad());
        let signs = |t: &str| -> Result<(Sign, Sign)> {
            let mut it = t.chars();
            match (it.next().and_then(Sign::parse), it.next().and_then(Sign::parse), it.next()) {
                (Some(a), Some(b), None) => Ok((a, b)),
                _ => Err(bad()),
            }
        };
        let split_signs = |t: &str| -> Result<(String, Sign, Sign)> {
            if t.len() < 2 {
                return Err(bad());
            }
            let (head, tail) = t.split_at(t.len() - 2);
            let (e1, e2) = signs(tail)?;
            Ok((head.to_string(), e1, e2))
        };
        if let Some(rest) = upper.strip_prefix("DELTA*") {
            return Ok(SubsetId::DeltaStar(posint(rest)?));
        }
        if let Some(rest) = upper.strip_prefix("DELTA") {
            return Ok(SubsetId::Delta(posint(rest)?));
        }
        if let Some(rest) = upper.strip_prefix("MU") {
            return Ok(SubsetId::Mu(posint(rest)?));
        }
        match upper.as_str() {
            "S" => return Ok(SubsetId::S),
            "N" => return Ok(SubsetId::N),
            "Z" => return Ok(SubsetId::Z),
            "T0" => return Ok(SubsetId::Trace(0)),
            "T1" => return Ok(SubsetId::Trace(1)),
            _ => {}
        }
        let (kind, rest) = upper.split_at(1.min(upper.len()));
        match kind {
            "A" | "B" => {
                let (head, e1, e2) = split_signs(rest)?;
                let lambda = f.from_int(int(&head)?);
                Ok(if kind == "A" {
                    SubsetId::A { lambda, e1, e2 }
                } else {
                    SubsetId::B { lambda, e1, e2 }
                })
            }
            "T" => {
                let (head, e1, e2) = split_signs(rest)?;
                let (j, l) = match head.split_once(',') {
                    Some((j, l)) => (int(j)?, int(l)?),
                    None if head.len() == 2 => (int(&head[..1])?, int(&head[1..])?),
                    None => return Err(bad()),
                };
                Ok(SubsetId::Tjl { j: f.from_int(j), l: f.from_int(l), e1, e2 })
            }
            _ => Err(bad()),
        }
    }
}

impl fmt::Display for SubsetId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SubsetId::Mu(d) => write!(f, "MU{d}"),
            SubsetId::Delta(d) => write!(f, "DELTA{d}"),
            SubsetId::DeltaStar(d) => write!(f, "DELTA*{d}"),
            SubsetId::A { lambda, e1, e2 } => write!(f, "A{lambda}{}{}", e1.symbol(), e2.symbol()),
            SubsetId::B { lambda, e1, e2 } => write!(f, "B{lambda}{}{}", e1.symbol(), e2.symbol()),
            SubsetId::S => write!(f, "S"),
            SubsetId::N => write!(f, "N"),
            SubsetId::Z => write!(f, "Z"),
            SubsetId::Trace(j) => write!(f, "T{j}"),
            SubsetId::Tjl { j, l, e1, e2 } => write!(f, "T{j},{l}{}{}", e1.symbol(), e2.symbol()),
        }
    }
}

/// A materialized subset, sorted by encoding and duplicate-free.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subset {
    pub id: SubsetId,
    pub elems: Vec<Fe>,
}

impl Subset {
    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn contains(&self, a: Fe) -> bool {
        self.elems.binary_search(&a).is_ok()
    }
}

fn sorted(mut v: Vec<Fe>) -> Vec<Fe> {
    v.sort_unstable();
    v.dedup();
    v
}

fn sign_of(f: &FieldCtx, a: Fe) -> Option<Sign> {
    match f.chi(a) {
        1 => Some(Sign::Plus),
        -1 => Some(Sign::Minus),
        _ => None,
    }
}

fn require_odd(f: &FieldCtx, what: &str) -> Result<()> {
    if f.is_odd() {
        Ok(())
    } else {
        Err(Error::InvalidSubset(format!("{what} requires odd q")))
    }
}

/// `{2, -2}` for odd q, `{0}` for even q.
pub fn z_set(f: &FieldCtx) -> Vec<Fe> {
    sorted(vec![f.from_int(2), f.from_int(-2)])
}

/// All d-th roots of unity in GF(q^2), sorted.
pub fn materialize_mu(f: &FieldCtx, d: u64) -> Result<Vec<Fe2>> {
    let ext = f.ext();
    let r = f.mu_root(d)?;
    let mut out = Vec::with_capacity(d as usize);
    let mut cur = ext.one();
    for _ in 0..d {
        out.push(cur);
        cur = ext.mul(cur, r);
    }
    out.sort_unstable();
    Ok(out)
}

fn delta(f: &FieldCtx, d: u64) -> Result<Vec<Fe>> {
    let q = f.q();
    if d == 0 || (!(q - 1).is_multiple_of(d) && !(q + 1).is_multiple_of(d)) {
        return Err(Error::InvalidSubset(format!(
            "delta_{d} is a subset of GF({q}) only when d divides q-1 or q+1"
        )));
    }
    let ext = f.ext();
    let roots = materialize_mu(f, d)?;
    Ok(sorted(
        roots
            .into_iter()
            .map(|u| ext.ang(u).expect("unit").to_base().expect("d | q+-1"))
            .collect(),
    ))
}

/// Enumerates the subset named by `id`.
pub fn materialize(f: &FieldCtx, id: SubsetId) -> Result<Subset> {
    let elems = match id {
        SubsetId::Mu(d) => {
            if d == 0 || !(f.q() - 1).is_multiple_of(d) {
                return Err(Error::InvalidSubset(format!(
                    "mu_{d} is a subset of GF({}) only when d divides q-1",
                    f.q()
                )));
            }
            sorted(
                materialize_mu(f, d)?
                    .into_iter()
                    .map(|u| u.to_base().expect("d | q-1"))
                    .collect(),
            )
        }
        SubsetId::Delta(d) => delta(f, d)?,
        SubsetId::DeltaStar(d) => {
            let z = z_set(f);
            delta(f, d)?.into_iter().filter(|a| !z.contains(a)).collect()
        }
        SubsetId::A { lambda, e1, e2 } | SubsetId::B { lambda, e1, e2 } => {
            require_odd(f, "A/B sets")?;
            if lambda.is_zero() {
                return Err(Error::MustBeNonzero { what: "lambda" });
            }
            let is_b = matches!(id, SubsetId::B { .. });
            f.elements()
                .filter(|&u| {
                    let first = if is_b { f.sub(lambda, u) } else { f.sub(u, lambda) };
                    sign_of(f, first) == Some(e1) && sign_of(f, f.add(u, lambda)) == Some(e2)
                })
                .collect()
        }
        SubsetId::S | SubsetId::N => {
            require_odd(f, "S and N")?;
            let want = if id == SubsetId::S { 1 } else { -1 };
            let four = f.from_int(4);
            f.elements()
                .filter(|&a| f.chi(f.sub(f.mul(a, a), four)) == want)
                .collect()
        }
        SubsetId::Z => z_set(f),
        SubsetId::Trace(j) => {
            if f.is_odd() {
                return Err(Error::InvalidSubset("trace sets require even q".into()));
            }
            if j > 1 {
                return Err(Error::InvalidSubset(format!("trace value must be 0 or 1, got {j}")));
            }
            f.nonzero_elements()
                .filter(|&a| f.abs_trace(f.inv(a).expect("nonzero")).expect("even q") == j)
                .collect()
        }
        SubsetId::Tjl { j, l, e1, e2 } => {
            require_odd(f, "T_{j,l} sets")?;
            f.nonzero_elements()
                .filter(|&a| {
                    sign_of(f, f.sub(j, a)) == Some(e1) && sign_of(f, f.add(l, a)) == Some(e2)
                })
                .collect()
        }
    };
    Ok(Subset { id, elems })
}

/// Closed-form size, where one exists.
pub fn card_formula(f: &FieldCtx, id: SubsetId) -> Result<u64> {
    let q = f.q();
    let two = f.from_int(2);
    let no_formula = || Error::NoFormula(id.to_string());
    match id {
        SubsetId::Mu(d) => Ok(d),
        SubsetId::DeltaStar(d) => Ok((d.max(1) - 1) / 2),
        SubsetId::A { lambda, e1, e2 } | SubsetId::B { lambda, e1, e2 } => {
            require_odd(f, "A/B sets")?;
            if lambda != two {
                return Err(no_formula());
            }
            // B_2^{e1,e2} = A_2^{eps*e1,e2}
            let e1 = if matches!(id, SubsetId::B { .. }) && f.epsilon() == Some(-1) {
                e1.flip()
            } else {
                e1
            };
            Ok(match (e1, e2) {
                (Sign::Plus, Sign::Plus) => (q - 3) / 4,
                (Sign::Plus, Sign::Minus) => (q + 1) / 4,
                (Sign::Minus, Sign::Plus) | (Sign::Minus, Sign::Minus) => (q - 1) / 4,
            })
        }
        SubsetId::S => {
            require_odd(f, "S and N")?;
            Ok((q - 3) / 2)
        }
        SubsetId::N => {
            require_odd(f, "S and N")?;
            Ok((q - 1) / 2)
        }
        SubsetId::Z => Ok(if f.is_odd() { 2 } else { 1 }),
        SubsetId::Trace(j) => {
            if f.is_odd() {
                return Err(Error::InvalidSubset("trace sets require even q".into()));
            }
            Ok(if j == 0 { q / 2 - 1 } else { q / 2 })
        }
        SubsetId::Delta(_) | SubsetId::Tjl { .. } => Err(no_formula()),
    }
}

/// Product of the elements; 1 for the empty set.
pub fn set_product(f: &FieldCtx, elems: &[Fe]) -> Fe {
    elems.iter().fold(Fe::ONE, |acc, &a| f.mul(acc, a))
}

/// `sigma_0, ..., sigma_n` of the elements.
pub fn elem_sym_all(f: &FieldCtx, elems: &[Fe]) -> Vec<Fe> {
    let mut e = vec![Fe::ONE];
    for &a in elems {
        e.push(Fe::ZERO);
        for j in (1..e.len()).rev() {
            e[j] = f.add(e[j], f.mul(a, e[j - 1]));
        }
    }
    e
}

/// `sigma_j`, the sum of products over unordered j-tuples.
pub fn elem_sym(f: &FieldCtx, elems: &[Fe], j: usize) -> Result<Fe> {
    if j > elems.len() {
        return Err(Error::IndexOutOfRange { index: j, max: elems.len() });
    }
    Ok(elem_sym_all(f, elems)[j])
}

/// `prod (x - a)` over the set.
pub fn vanishing_poly(f: &FieldCtx, elems: &[Fe]) -> FqPoly {
    FqPoly::from_roots(f, elems)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ImageReport {
    pub image: Vec<Fe>,
    pub is_permutation: bool,
    /// Present only for permutations; each cycle starts at its least element.
    pub cycles: Vec<Vec<Fe>>,
}

impl ImageReport {
    pub fn cycle_lengths(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.cycles.iter().map(Vec::len).collect();
        v.sort_unstable();
        v
    }
}

impl fmt::Display for ImageReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.is_permutation {
            let items: Vec<String> = self.image.iter().map(|a| a.to_string()).collect();
            return write!(f, "not a permutation; image={{{}}}", items.join(","));
        }
        for c in &self.cycles {
            let items: Vec<String> = c.iter().map(|a| a.to_string()).collect();
            write!(f, "({})", items.join(" "))?;
        }
        Ok(())
    }
}

/// Image of `elems` under `map`, with canonical cycles when it permutes them.
pub fn image_and_cycles_with(elems: &[Fe], map: impl Fn(Fe) -> Fe) -> ImageReport {
    let images: Vec<Fe> = elems.iter().map(|&a| map(a)).collect();
    let image = sorted(images.clone());
    let is_permutation = image == elems;
    let mut cycles = Vec::new();
    if is_permutation {
        let pos = |a: Fe| elems.binary_search(&a).expect("image equals domain");
        let mut seen = vec![false; elems.len()];
        // elems are sorted, so each cycle is discovered from its least element
        for start in 0..elems.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(elems[i]);
                i = pos(images[i]);
            }
            cycles.push(cycle);
        }
    }
    ImageReport { image, is_permutation, cycles }
}

/// `a -> D_k(a)` on the subset.
pub fn image_and_cycles(f: &FieldCtx, k: u64, set: &Subset) -> ImageReport {
    image_and_cycles_with(&set.elems, |a| eval_via_functional(f, k, a))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn encs(v: &[Fe]) -> Vec<u64> {
        v.iter().map(|a| a.enc()).collect()
    }

    fn set(f: &FieldCtx, spec: &str) -> Subset {
        materialize(f, SubsetId::parse(f, spec).unwrap()).unwrap()
    }

    #[test]
    fn f29_a_sets() {
        let f = FieldCtx::from_q(29).unwrap();
        assert_eq!(encs(&set(&f, "A2++").elems), vec![3, 7, 11, 18, 22, 26]);
        assert_eq!(encs(&set(&f, "A2+-").elems), vec![1, 6, 8, 9, 15, 24, 25]);
        assert_eq!(encs(&set(&f, "A2-+").elems), vec![4, 5, 14, 20, 21, 23, 28]);
        assert_eq!(encs(&set(&f, "A2--").elems), vec![0, 10, 12, 13, 16, 17, 19]);
    }

    #[test]
    fn b_set_in_gf7() {
        // squares mod 7: {1, 2, 4}; 2-b and 2+b both nonsquares
        let f = FieldCtx::from_q(7).unwrap();
        let oracle: Vec<u64> = (0..7u64)
            .filter(|&b| {
                let sq = |v: u64| [1u64, 2, 4].contains(&(v % 7));
                let l = (2 + 7 - b) % 7;
                let r = (2 + b) % 7;
                l != 0 && r != 0 && !sq(l) && !sq(r)
            })
            .collect();
        assert_eq!(oracle, vec![3, 4]);
        assert_eq!(encs(&set(&f, "B2--").elems), oracle);
    }

    #[test]
    fn z_sets() {
        assert_eq!(encs(&set(&FieldCtx::from_q(7).unwrap(), "Z").elems), vec![2, 5]);
        assert_eq!(encs(&set(&FieldCtx::from_q(16).unwrap(), "Z").elems), vec![0]);
    }

    #[test]
    fn formulas() {
        let f = FieldCtx::from_q(29).unwrap();
        let id = SubsetId::parse(&f, "A2+-").unwrap();
        assert_eq!(card_formula(&f, id).unwrap(), 7);
        let f16 = FieldCtx::from_q(16).unwrap();
        assert_eq!(card_formula(&f16, SubsetId::Trace(1)).unwrap(), 8);
        assert_eq!(set(&f16, "T1").len(), 8);
        let f3 = FieldCtx::from_q(3).unwrap();
        assert_eq!(card_formula(&f3, SubsetId::a2(&f3, Sign::Plus, Sign::Plus)).unwrap(), 0);
        assert!(set(&f3, "A2++").is_empty());
        let tjl = SubsetId::parse(&f, "T3,1+-").unwrap();
        assert!(matches!(card_formula(&f, tjl), Err(Error::NoFormula(_))));
    }

    #[test]
    fn formulas_match_enumeration() {
        for q in [3u64, 5, 7, 9, 11, 13, 25, 27, 29, 31, 49, 81, 125] {
            let f = FieldCtx::from_q(q).unwrap();
            let mut ids = vec![SubsetId::S, SubsetId::N, SubsetId::Z];
            for e1 in [Sign::Plus, Sign::Minus] {
                for e2 in [Sign::Plus, Sign::Minus] {
                    ids.push(SubsetId::a2(&f, e1, e2));
                    ids.push(SubsetId::b2(&f, e1, e2));
                }
            }
            for d in crate::arith::divisors(q - 1).into_iter().chain(crate::arith::divisors(q + 1)) {
                ids.push(SubsetId::DeltaStar(d));
            }
            for id in ids {
                let s = materialize(&f, id).unwrap();
                assert_eq!(s.len() as u64, card_formula(&f, id).unwrap(), "q={q} id={id}");
            }
        }
        for n in 1..=8 {
            let f = FieldCtx::new(2, n).unwrap();
            for j in 0..2 {
                let s = materialize(&f, SubsetId::Trace(j)).unwrap();
                assert_eq!(s.len() as u64, card_formula(&f, SubsetId::Trace(j)).unwrap());
            }
        }
    }

    #[test]
    fn parameter_validation() {
        let f7 = FieldCtx::from_q(7).unwrap();
        let f8 = FieldCtx::from_q(8).unwrap();
        assert!(materialize(&f8, SubsetId::a2(&f8, Sign::Plus, Sign::Plus)).is_err());
        assert!(materialize(&f7, SubsetId::Trace(0)).is_err());
        let zero_lambda = SubsetId::A { lambda: Fe::ZERO, e1: Sign::Plus, e2: Sign::Plus };
        assert_eq!(materialize(&f7, zero_lambda), Err(Error::MustBeNonzero { what: "lambda" }));
        assert!(materialize(&f7, SubsetId::Delta(5)).is_err());
        assert!(materialize(&f7, SubsetId::Mu(8)).is_err());
        assert!(SubsetId::parse(&f7, "Q").is_err());
        assert!(SubsetId::parse(&f7, "A2+").is_err());
    }

    #[test]
    fn mu_and_delta() {
        let f = FieldCtx::from_q(13).unwrap();
        assert_eq!(set(&f, "MU4").len(), 4);
        assert_eq!(materialize_mu(&f, 7).unwrap().len(), 7);
        assert_eq!(encs(&set(&f, "DELTA1").elems), vec![2]);
        assert_eq!(encs(&set(&f, "DELTA2").elems), vec![2, 11]);
        assert_eq!(set(&f, "DELTA*14").len(), 6);
    }

    #[test]
    fn products_and_symmetric_functions() {
        let f7 = FieldCtx::from_q(7).unwrap();
        assert_eq!(set_product(&f7, &[f7.from_int(5), f7.from_int(6)]), f7.from_int(2));
        assert_eq!(set_product(&f7, &[]), Fe::ONE);
        let all: Vec<Fe> = f7.nonzero_elements().collect();
        assert_eq!(set_product(&f7, &all), f7.from_int(-1));

        let f = FieldCtx::from_q(29).unwrap();
        let bpp = set(&f, "B2++");
        let bmm = set(&f, "B2--");
        assert_eq!(elem_sym(&f, &bpp.elems, 2).unwrap(), f.from_int(24));
        assert_eq!(elem_sym(&f, &bmm.elems, 4).unwrap(), f.from_int(14));
        assert_eq!(elem_sym(&f, &bmm.elems, 0).unwrap(), Fe::ONE);
        assert!(elem_sym(&f, &bpp.elems, 7).is_err());
    }

    #[test]
    fn elem_sym_matches_brute_force() {
        let f = FieldCtx::from_q(11).unwrap();
        let s: Vec<Fe> = [1u64, 3, 4, 7, 9].iter().map(|&e| f.elem(e).unwrap()).collect();
        let sig = elem_sym_all(&f, &s);
        for j in 0..=s.len() {
            let mut acc = Fe::ZERO;
            for mask in 0u32..(1 << s.len()) {
                if mask.count_ones() as usize == j {
                    let prod = (0..s.len())
                        .filter(|i| mask >> i & 1 == 1)
                        .fold(Fe::ONE, |p, i| f.mul(p, s[i]));
                    acc = f.add(acc, prod);
                }
            }
            assert_eq!(sig[j], acc);
        }
    }

    #[test]
    fn vanishing_polys() {
        let f7 = FieldCtx::from_q(7).unwrap();
        let v = vanishing_poly(&f7, &set(&f7, "B2--").elems);
        assert_eq!(v.coeffs(), &[f7.from_int(5), Fe::ZERO, Fe::ONE]);
        let z = vanishing_poly(&f7, &set(&f7, "Z").elems);
        assert_eq!(z.coeffs(), &[f7.from_int(-4), Fe::ZERO, Fe::ONE]);
        assert_eq!(vanishing_poly(&f7, &[]), FqPoly::one());
    }

    #[test]
    fn f29_cycles() {
        let f = FieldCtx::from_q(29).unwrap();
        let amm = set(&f, "A2--");
        let r5 = image_and_cycles(&f, 5, &amm);
        assert!(r5.is_permutation);
        assert_eq!(r5.to_string(), "(0)(10 17 13 19 12 16)");
        let r7 = image_and_cycles(&f, 7, &amm);
        assert!(!r7.is_permutation);
        assert_eq!(r7.to_string(), "not a permutation; image={0}");
        let r1 = image_and_cycles(&f, 1, &amm);
        assert!(r1.cycles.iter().all(|c| c.len() == 1));
    }

    #[test]
    fn spec_round_trip() {
        let f = FieldCtx::from_q(29).unwrap();
        for s in ["A2++", "B2--", "S", "N", "Z", "T4,0--", "MU7", "DELTA15", "DELTA*30"] {
            let id = SubsetId::parse(&f, s).unwrap();
            assert_eq!(SubsetId::parse(&f, &id.to_string()).unwrap(), id);
        }
        assert_eq!(
            SubsetId::parse(&f, "T40--").unwrap(),
            SubsetId::parse(&f, "T4,0--").unwrap()
        );
    }
}
