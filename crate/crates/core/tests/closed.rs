mod common;

use pfaff_core::closed::*;
use pfaff_core::random::{random_points, rng_for};
use pfaff_core::{pf_matchings, Letter, Ring, Scalar, Word};
use proptest::prelude::*;

fn points(seed: u64, n: usize) -> Vec<Scalar> {
    random_points(&mut rng_for(seed, 0), n)
}

fn quadruples(n: u32) -> Vec<[Letter; 4]> {
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    out.push([a, b, c, d].map(Letter));
                }
            }
        }
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn criterion_implies_product(seed in any::<u64>(), half in 1usize..=4, which in 0usize..3) {
        let n = 2 * half;
        let pts = points(seed, n);
        let form = match which {
            0 => blaschke_form(&pts),
            1 => family_form(&pts, Scalar::zero(), Scalar::one(), Scalar::from_int(2)),
            _ => family_form(&pts, Scalar::one(), Scalar::zero(), Scalar::one()),
        };
        let Ok(f) = form else { return Ok(()) };
        for [w, x, y, z] in quadruples(n as u32) {
            prop_assert!(n4_criterion_residual(&f, w, x, y, z).unwrap().is_zero());
        }
        let alpha = Word::from_ids(0..n as u32);
        prop_assert_eq!(pf_matchings(&f, &alpha).unwrap(), product_pf(&f, &alpha).unwrap());
    }

    #[test]
    fn both_sides_flip_together(seed in any::<u64>(), i in 0usize..6, j in 0usize..6) {
        prop_assume!(i != j);
        let Ok(f) = blaschke_form(&points(seed, 6)) else { return Ok(()) };
        let alpha = Word::from_ids(0..6);
        let mut t = alpha.letters().to_vec();
        t.swap(i, j);
        let swapped = Word::new(t);
        prop_assert_eq!(product_pf(&f, &swapped).unwrap(), product_pf(&f, &alpha).unwrap().neg());
        prop_assert_eq!(pf_matchings(&f, &swapped).unwrap(), pf_matchings(&f, &alpha).unwrap().neg());
    }

    #[test]
    fn torelli_closed_form(seed in any::<u64>(), half in 1usize..=3) {
        let n = 2 * half;
        let pts = points(seed, n);
        let alpha = Word::from_ids(0..n as u32);
        let k = n as u32 - 1;
        let power = PowerForm::new(&pts, k).unwrap();
        prop_assert_eq!(torelli_pf(&pts, k, &alpha).unwrap(), pf_matchings(&power, &alpha).unwrap());
        for m in 1..half as u32 {
            let low = PowerForm::new(&pts, 2 * m - 1).unwrap();
            prop_assert!(pf_matchings(&low, &alpha).unwrap().is_zero());
        }
    }
}
