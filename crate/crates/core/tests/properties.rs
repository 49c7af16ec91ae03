use num_traits::{One, Zero};
use proptest::prelude::*;
use sdcheck_core::design::{extend_lambda, lambda_base, CodeFamily, Family};
use sdcheck_core::exact::{
    binom, binom_u, elem_sym, factorial, falling, falling_int, int, stirling2, stirling2_explicit,
    ExactInt, ExactRat,
};
use sdcheck_core::gate::{lemma2_eval, MomentVector, OffsetSet};

/// Direct `sum_i prod_j (i - x_j) n_i`.
fn brute_force(levels: &[(i64, i64)], offsets: &[i64]) -> ExactInt {
    levels
        .iter()
        .map(|&(i, n)| {
            offsets
                .iter()
                .fold(ExactInt::from(n), |acc, &x| acc * ExactInt::from(i - x))
        })
        .sum()
}

fn moments_of(levels: &[(i64, i64)], count: usize) -> MomentVector {
    let entries = (0..count)
        .map(|s| {
            levels
                .iter()
                .map(|&(i, n)| falling_int(&ExactInt::from(i), s as u64) * ExactInt::from(n))
                .sum()
        })
        .collect();
    MomentVector { u: 0, entries }
}

fn intersection_vector() -> impl Strategy<Value = Vec<(i64, i64)>> {
    (1i64..=20).prop_flat_map(|half_k| {
        prop::collection::vec(0i64..=60, (half_k + 1) as usize).prop_map(|counts| {
            counts
                .into_iter()
                .enumerate()
                .map(|(j, n)| (2 * j as i64, n))
                .collect()
        })
    })
}

fn even_offsets() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::btree_set(0i64..=30, 1..=9)
        .prop_map(|s| s.into_iter().map(|x| 2 * x).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn moment_expansion_matches_brute_force(
        levels in intersection_vector(),
        offsets in even_offsets(),
    ) {
        let moments = moments_of(&levels, offsets.len() + 1);
        let set = OffsetSet::new(offsets.clone()).unwrap();
        prop_assert_eq!(lemma2_eval(&set, &moments).unwrap(), brute_force(&levels, &offsets));
    }

    #[test]
    fn elementary_symmetric_matches_product(xs in prop::collection::vec(-50i64..=50, 0..10)) {
        // coefficients of prod (z + x_i), expanded naively
        let mut poly = vec![ExactInt::one()];
        for &x in &xs {
            let mut next = vec![ExactInt::zero(); poly.len() + 1];
            for (d, c) in poly.iter().enumerate() {
                next[d + 1] += c;
                next[d] += c * ExactInt::from(x);
            }
            poly = next;
        }
        let ints: Vec<ExactInt> = xs.iter().map(|&x| ExactInt::from(x)).collect();
        let sigma = elem_sym(&ints);
        let n = xs.len();
        for (theta, s) in sigma.iter().enumerate() {
            prop_assert_eq!(s, &poly[n - theta]);
        }
    }

    #[test]
    fn binomial_times_factorial_is_falling(n in -30i64..=30, k in 0u64..=30) {
        let lhs = binom(&int(n), &ExactInt::from(k)) * factorial(k);
        let rhs = falling(&ExactRat::from_integer(int(n)), k);
        prop_assert_eq!(ExactRat::from_integer(lhs), rhs);
    }

    #[test]
    fn lambda_identities(r in 0u32..3, m in 1u32..=153, t_extra in 0u32..4) {
        let family = Family::from_index(r).unwrap();
        prop_assume!(m <= family.m_max());
        let f = CodeFamily::new(family, m).unwrap();
        let s = f.am_strength();
        let t = s + t_extra;
        let lambda_t = extend_lambda(&f, t).unwrap();
        // lambda_t C(n, t) = b C(k, t), with b = lambda_0
        let b = lambda_base(&f).unwrap()
            * ExactRat::new(binom_u(f.n(), u64::from(s)), binom_u(f.k(), u64::from(s)));
        prop_assert_eq!(
            &lambda_t * ExactRat::from_integer(binom_u(f.n(), u64::from(t))),
            &b * ExactRat::from_integer(binom_u(f.k(), u64::from(t)))
        );
        if t > s {
            prop_assert!(lambda_t < extend_lambda(&f, t - 1).unwrap());
        }
    }
}

#[test]
fn stirling_recurrence_matches_alternating_sum() {
    for n in 0..=20 {
        for k in 0..=20 {
            assert_eq!(stirling2(n, k), stirling2_explicit(n, k), "S({n},{k})");
        }
    }
}

#[test]
fn extend_lambda_matches_closed_form() {
    // lambda_t = C(5m-2, m-1) C(4m-1, t-5) / C(24m-5, t-5)
    for m in 1..=153u64 {
        let f = CodeFamily::new(Family::Len24m, m as u32).unwrap();
        for t in 5..=8u64 {
            let want = ExactRat::new(
                binom_u(5 * m - 2, m - 1) * binom_u(4 * m - 1, t - 5),
                binom_u(24 * m - 5, t - 5),
            );
            assert_eq!(extend_lambda(&f, t as u32).unwrap(), want, "m={m} t={t}");
        }
    }
}
