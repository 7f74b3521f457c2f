//! Randomized agreement between independent evaluation routes.

use dickson_core::arith::prime_powers_in;
use dickson_core::polyfam::{eval_family, eval_via_functional, DicksonTable, Family};
use dickson_core::subsets::{materialize, SubsetId};
use dickson_core::{Arith, FieldCtx};
use proptest::prelude::*;

fn field_strategy() -> impl Strategy<Value = u64> {
    let qs = prime_powers_in(2, 512);
    (0..qs.len()).prop_map(move |i| qs[i])
}

proptest! {
    #[test]
    fn table_matches_functional(q in field_strategy(), k in 0u64..1_000_000, x in any::<u64>()) {
        let f = FieldCtx::from_q(q).unwrap();
        let a = f.elem(x % q).unwrap();
        let table = DicksonTable::new(&f);
        prop_assert_eq!(table.d(k, a), eval_via_functional(&f, k, a));
    }

    #[test]
    fn period_divides_q_squared_minus_one(q in field_strategy(), k in 0u64..10_000, x in any::<u64>()) {
        let f = FieldCtx::from_q(q).unwrap();
        let a = f.elem(x % q).unwrap();
        let n = q * q - 1;
        prop_assert_eq!(eval_family(&f, Family::D, k, a), eval_family(&f, Family::D, k + n, a));
    }

    #[test]
    fn composition(q in field_strategy(), k in 0u64..500, l in 0u64..500, x in any::<u64>()) {
        let f = FieldCtx::from_q(q).unwrap();
        let a = f.elem(x % q).unwrap();
        let inner = eval_via_functional(&f, l, a);
        prop_assert_eq!(eval_via_functional(&f, k, inner), eval_via_functional(&f, k * l, a));
    }

    #[test]
    fn delta_star_size(q in field_strategy(), pick in any::<u64>()) {
        let f = FieldCtx::from_q(q).unwrap();
        let ds: Vec<u64> = dickson_core::arith::divisors(q - 1)
            .into_iter()
            .chain(dickson_core::arith::divisors(q + 1))
            .filter(|d| f.is_odd() || d % 2 == 1)
            .collect();
        let d = ds[(pick % ds.len() as u64) as usize];
        let set = materialize(&f, SubsetId::DeltaStar(d)).unwrap();
        prop_assert_eq!(set.len() as u64, (d - 1) / 2);
        let two = f.from_int(2);
        prop_assert!(!set.contains(two) && !set.contains(f.neg(two)));
    }
}
