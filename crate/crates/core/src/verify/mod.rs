//! Exhaustive per-field checks of the Dickson polynomial results.
//!
//! Each check takes a [`Field`] bundle (the field, a precomputed
//! [`DicksonTable`] and the k values to quantify over) and returns one
//! [`Verdict`].

use std::collections::{BTreeSet, HashMap};
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::{divisors, prime_power};
use crate::error::{Error, Result};
use crate::ffield::{Arith, Fe, FieldCtx};
use crate::polyfam::DicksonTable;
use crate::subsets::{materialize, SubsetId};
use crate::verdict::{Checker, ListFmt, Verdict};

mod chebyshev;
mod even;
mod general;
mod odd;
mod products;
mod tsets;

pub use chebyshev::chebyshev_suite;
pub use even::{even_char_suite, sqrtc};
pub use general::{
    dickson_image_and_permutation, fq_decomposition, functional_equation, power_and_delta_maps,
};
pub use odd::{aij_suite, golden_f29, odd_snz_suite};
pub use products::{
    d2_inverse_suite, dm_product_cases, factorization_suite, fsfn_values, sigma_closed_forms,
    wilson_like,
};
pub use tsets::tset_products;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum KMode {
    /// One full period `1..=q^2-1` at every q.
    Exhaustive,
    /// Full period up to `exhaustive_q_max`, boundary values plus random k above.
    Sampled,
}

impl FromStr for KMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "exhaustive" => Ok(KMode::Exhaustive),
            "sampled" => Ok(KMode::Sampled),
            _ => Err(Error::InvalidArgument(format!("unknown k mode {s:?}"))),
        }
    }
}

/// Which exponents k each check quantifies over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KRange {
    pub mode: KMode,
    /// Largest k considered.
    pub bound: u64,
    /// Random k per field in sampled mode.
    pub sample_count: usize,
    pub seed: u64,
    /// Sampled mode still runs the full period for q up to this value.
    pub exhaustive_q_max: u64,
}

impl Default for KRange {
    fn default() -> Self {
        KRange {
            mode: KMode::Sampled,
            bound: 1 << 40,
            sample_count: 32,
            seed: 0,
            exhaustive_q_max: 64,
        }
    }
}

impl KRange {
    pub fn is_full_period(&self, q: u64) -> bool {
        self.mode == KMode::Exhaustive || q <= self.exhaustive_q_max
    }

    /// Sorted, duplicate-free k values for GF(q).
    pub fn ks(&self, q: u64) -> Vec<u64> {
        let bound = self.bound.max(1);
        if self.is_full_period(q) {
            return (1..=(q * q - 1).min(bound)).collect();
        }
        let mut set = BTreeSet::new();
        let mut add = |k: i128| {
            if k >= 1 && k <= bound as i128 {
                set.insert(k as u64);
            }
        };
        let qi = q as i128;
        let mut anchors: Vec<i128> = Vec::new();
        for n in [q - 1, q + 1] {
            anchors.extend(divisors(n).into_iter().map(|d| d as i128));
            let n = n as i128;
            anchors.extend([2 * n, 3 * n, n * n]);
        }
        anchors.push((qi - 1) * (qi + 1));
        anchors.push((qi - 1) * (qi + 1) / 2);
        let mut qe: i128 = 1;
        for _ in 0..=4 {
            anchors.push(qe);
            qe *= qi;
        }
        for a in anchors {
            for off in -2..=2 {
                add(a + off);
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed ^ q.wrapping_mul(0x9E37_79B9_7F4A_7C15));
        for _ in 0..self.sample_count {
            add(rng.random_range(1..=bound) as i128);
        }
        set.into_iter().collect()
    }
}

/// Everything a check needs about one field.
pub struct Field {
    pub f: FieldCtx,
    pub table: DicksonTable,
    pub ks: Vec<u64>,
    pub kr: KRange,
}

impl Field {
    pub fn new(q: u64, kr: KRange) -> Result<Self> {
        let f = FieldCtx::from_q(q)?;
        let table = DicksonTable::new(&f);
        Ok(Field { ks: kr.ks(q), f, table, kr })
    }

    pub fn q(&self) -> u64 {
        self.f.q()
    }

    pub(crate) fn set(&self, id: SubsetId) -> Vec<Fe> {
        materialize(&self.f, id).expect("subset is defined at this field").elems
    }

    /// Seeded generator private to one check at this field.
    pub(crate) fn rng(&self, salt: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(
            self.kr.seed ^ self.q().wrapping_mul(0x9E37_79B9_7F4A_7C15) ^ salt.rotate_left(32),
        )
    }

    /// All nonzero `lambda` for `q <= 256`, otherwise 32 seeded picks.
    pub(crate) fn lambdas(&self, salt: u64) -> Vec<Fe> {
        let q = self.q();
        if q <= 256 {
            return self.f.nonzero_elements().collect();
        }
        let mut rng = self.rng(salt);
        let mut picks = BTreeSet::new();
        picks.insert(Fe::ONE);
        picks.insert(self.f.from_int(2));
        while picks.len() < 32 {
            picks.insert(self.f.elem(rng.random_range(1..q)).expect("in range"));
        }
        picks.into_iter().collect()
    }
}

type CheckFn = fn(&Field) -> Verdict;

/// Registered checks, in report order within a field.
pub const CHECKS: &[(&str, CheckFn)] = &[
    ("aij_suite", aij_suite),
    ("chebyshev_suite", chebyshev_suite),
    ("d2_inverse_suite", d2_inverse_suite),
    ("dickson_image_and_permutation", dickson_image_and_permutation),
    ("dm_product_cases", dm_product_cases),
    ("even_char_suite", even_char_suite),
    ("factorization_suite", factorization_suite),
    ("fq_decomposition", fq_decomposition),
    ("fsfn_values", fsfn_values),
    ("functional_equation", functional_equation),
    ("golden_f29", golden_f29),
    ("odd_snz_suite", odd_snz_suite),
    ("power_and_delta_maps", power_and_delta_maps),
    ("sigma_closed_forms", sigma_closed_forms),
    ("sqrtc", sqrtc),
    ("tset_products", tset_products),
    ("wilson_like", wilson_like),
];

pub fn check_names() -> Vec<&'static str> {
    CHECKS.iter().map(|(n, _)| *n).collect()
}

/// Runs the selected checks at every q, fanning out over fields with rayon.
///
/// The result is ordered by `(q, check name)` whatever the schedule.
/// `golden_f29` only reports at q = 29.
pub fn verify_all(q_list: &[u64], kr: KRange, filter: Option<&[String]>) -> Result<Vec<Verdict>> {
    let selected: Vec<(&str, CheckFn)> = match filter {
        None => CHECKS.to_vec(),
        Some(names) => {
            let mut out = Vec::new();
            for name in names {
                let hit = CHECKS
                    .iter()
                    .find(|(n, _)| *n == name.as_str())
                    .ok_or_else(|| Error::InvalidArgument(format!("unknown check {name:?}")))?;
                if !out.iter().any(|(n, _)| n == &hit.0) {
                    out.push(*hit);
                }
            }
            out
        }
    };
    for &q in q_list {
        if prime_power(q).is_none() {
            return Err(Error::NotPrimePower(q));
        }
    }
    let mut qs: Vec<u64> = q_list.to_vec();
    qs.sort_unstable();
    qs.dedup();
    let per_q: Vec<Result<Vec<Verdict>>> = qs
        .par_iter()
        .map(|&q| {
            let field = Field::new(q, kr)?;
            Ok(selected
                .par_iter()
                .filter(|(name, _)| *name != "golden_f29" || q == 29)
                .map(|(_, check)| {
                    let start = std::time::Instant::now();
                    let mut v = check(&field);
                    v.millis = Some(start.elapsed().as_millis() as u64);
                    v
                })
                .collect())
        })
        .collect();
    let mut out = Vec::new();
    for r in per_q {
        out.extend(r?);
    }
    out.sort_by(|a, b| (a.q, &a.check_name).cmp(&(b.q, &b.check_name)));
    Ok(out)
}

// ---------------------------------------------------------------------------
// Shared helpers

pub(crate) fn odd_only(name: &str, f: &FieldCtx) -> Option<Verdict> {
    (!f.is_odd()).then(|| Verdict::skipped(name, f.q(), "requires odd q"))
}

pub(crate) fn even_only(name: &str, f: &FieldCtx) -> Option<Verdict> {
    f.is_odd()
        .then(|| Verdict::skipped(name, f.q(), "requires even q"))
}

/// Sorted, duplicate-free image of `dom` under a table indexed by encoding.
pub(crate) fn image(map: &[Fe], dom: &[Fe]) -> Vec<Fe> {
    let mut v: Vec<Fe> = dom.iter().map(|a| map[a.enc() as usize]).collect();
    v.sort_unstable();
    v.dedup();
    v
}

/// `map` restricted to the sorted set `dom` is a bijection onto `dom`.
pub(crate) fn permutes(map: &[Fe], dom: &[Fe]) -> bool {
    image(map, dom) == dom
}

pub(crate) fn union(parts: &[&[Fe]]) -> Vec<Fe> {
    let mut v: Vec<Fe> = parts.iter().flat_map(|p| p.iter().copied()).collect();
    v.sort_unstable();
    v.dedup();
    v
}

pub(crate) fn minus(a: &[Fe], b: &[Fe]) -> Vec<Fe> {
    a.iter().copied().filter(|x| b.binary_search(x).is_err()).collect()
}

pub(crate) fn intersect(a: &[Fe], b: &[Fe]) -> Vec<Fe> {
    a.iter().copied().filter(|x| b.binary_search(x).is_ok()).collect()
}

pub(crate) fn sorted(mut v: Vec<Fe>) -> Vec<Fe> {
    v.sort_unstable();
    v.dedup();
    v
}

/// Records `map(dom) ⊂ target`, one instance per element of `dom`.
pub(crate) fn maps_into(
    c: &mut Checker,
    clause: &str,
    k: u64,
    map: &[Fe],
    dom: &[Fe],
    target: &[Fe],
) {
    for &a in dom {
        let v = map[a.enc() as usize];
        if !c.expect(
            clause,
            target.binary_search(&v).is_ok(),
            &[("k", &k), ("a", &a)],
            &format_args!("an element of {}", ListFmt(target)),
            &v,
        ) {
            return;
        }
    }
}

/// Records `permutes(map, dom) == criterion`; empty domains are flagged vacuous.
pub(crate) fn perm_iff(
    c: &mut Checker,
    clause: &str,
    k: u64,
    map: &[Fe],
    dom: &[Fe],
    criterion: bool,
) {
    if dom.is_empty() {
        c.vacuous(clause);
        return;
    }
    let actual = permutes(map, dom);
    c.expect(
        clause,
        actual == criterion,
        &[("k", &k)],
        &format_args!("permutes={criterion}"),
        &format_args!("permutes={actual}"),
    );
}

/// Records set equality.
pub(crate) fn same_set(c: &mut Checker, clause: &str, inputs: &[(&str, &dyn std::fmt::Display)], expected: &[Fe], actual: &[Fe]) -> bool {
    c.expect(clause, expected == actual, inputs, &ListFmt(expected), &ListFmt(actual))
}

/// Interns equal values to small integers.
pub(crate) struct Interner<T> {
    ids: HashMap<T, usize>,
}

impl<T: std::hash::Hash + Eq> Interner<T> {
    pub(crate) fn new() -> Self {
        Interner { ids: HashMap::new() }
    }

    pub(crate) fn id(&mut self, v: T) -> usize {
        let n = self.ids.len();
        *self.ids.entry(v).or_insert(n)
    }
}

pub(crate) fn half(f: &FieldCtx) -> Fe {
    f.inv(f.from_int(2)).expect("odd q")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_period_below_threshold() {
        let kr = KRange::default();
        let ks = kr.ks(7);
        assert_eq!(ks, (1..=48).collect::<Vec<_>>());
    }

    #[test]
    fn sampled_contains_boundaries() {
        let kr = KRange::default();
        let q = 101;
        let ks = kr.ks(q);
        for k in [1, 2, 3, 49, 50, 51, 98, 99, 100, 101, 102, 103, 104, 10200, q * q - 1] {
            assert!(ks.contains(&k), "missing {k}");
        }
        assert!(ks.windows(2).all(|w| w[0] < w[1]));
        assert!(ks.iter().any(|&k| k > q * q), "random draws reach large k");
        assert_eq!(ks, kr.ks(q), "deterministic");
        let other = KRange { seed: 1, ..kr };
        assert_ne!(ks, other.ks(q));
    }

    #[test]
    fn bound_caps_range() {
        let kr = KRange { mode: KMode::Exhaustive, bound: 10, ..KRange::default() };
        assert_eq!(kr.ks(101), (1..=10).collect::<Vec<_>>());
    }

    #[test]
    fn empty_list_and_bad_q() {
        assert!(verify_all(&[], KRange::default(), None).unwrap().is_empty());
        assert!(verify_all(&[12], KRange::default(), None).is_err());
        let bad = vec!["nope".to_string()];
        assert!(verify_all(&[7], KRange::default(), Some(&bad)).is_err());
    }

    #[test]
    fn small_fields_pass() {
        let qs = crate::arith::prime_powers_in(2, 32);
        let verdicts = verify_all(&qs, KRange::default(), None).unwrap();
        let bad: Vec<&Verdict> = verdicts.iter().filter(|v| v.is_fail()).collect();
        assert!(bad.is_empty(), "{bad:#?}");
    }

    #[test]
    fn golden_only_at_29() {
        let names = vec!["golden_f29".to_string()];
        assert!(verify_all(&[7], KRange::default(), Some(&names)).unwrap().is_empty());
        let v = verify_all(&[29], KRange::default(), Some(&names)).unwrap();
        assert_eq!(v.len(), 1);
    }
}
