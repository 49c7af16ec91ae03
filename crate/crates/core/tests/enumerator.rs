use num_traits::{One, Zero};
use sdcheck_core::design::{lambda_base, CodeFamily, Family};
use sdcheck_core::enumerator::{extremal_weight_enumerator, min_weight_count, next_weight_count};
use sdcheck_core::exact::{binom_u, factorial, ExactInt, ExactRat};

#[test]
fn enumerator_invariants() {
    for n in (8..=48).step_by(8) {
        let we = extremal_weight_enumerator(n).unwrap();
        assert_eq!(we.counts.len() as u64, n + 1);
        assert!(we.count(0).is_one(), "A_0, n={n}");
        assert!(we.count(n).is_one(), "A_n, n={n}");
        for j in 0..=n {
            if j % 4 != 0 {
                assert!(we.count(j).is_zero(), "A_{j}, n={n}");
            }
            assert_eq!(we.count(j), we.count(n - j), "symmetry at {j}, n={n}");
        }
        assert_eq!(we.total(), ExactInt::one() << (n / 2) as usize);
        assert_eq!(we.min_weight(), Some(4 * (n / 24) + 4));
    }
}

#[test]
fn small_lengths() {
    assert_eq!(min_weight_count(8).unwrap(), ExactInt::from(14));
    assert_eq!(min_weight_count(24).unwrap(), ExactInt::from(759));
    assert_eq!(next_weight_count(24).unwrap(), ExactInt::from(2576));
    assert!(next_weight_count(48).unwrap() > ExactInt::zero());
}

#[test]
fn lambda_5_closed_form_for_all_m() {
    for m in 1..=153u64 {
        let n = 24 * m;
        let lhs = ExactRat::new(
            min_weight_count(n).unwrap() * binom_u(4 * m + 4, 5),
            binom_u(n, 5),
        );
        assert_eq!(
            lhs,
            ExactRat::from_integer(binom_u(5 * m - 2, m - 1)),
            "m={m}"
        );
    }
}

/// Closed forms for the number of minimum-weight words of an extremal code
/// of length `24m + 8` and `24m + 16`.
fn block_count_oracle(r: u64, m: u64) -> ExactInt {
    let n = 24 * m + 8 * r;
    let n_big = ExactInt::from(n);
    let denom_tail = factorial(m) * factorial(4 * m + 4);
    match r {
        1 => {
            let num =
                &n_big * (&n_big - 1u32) * (&n_big - 2u32) * (&n_big - 4u32) * factorial(5 * m);
            num / (denom_tail * 4u32)
        }
        2 => {
            let num = &n_big * (&n_big - 2u32) * factorial(5 * m + 2) * 3u32;
            num / (denom_tail * 2u32)
        }
        _ => unreachable!(),
    }
}

#[test]
fn block_counts_match_closed_forms() {
    for (r, family) in [(1, Family::Len24mPlus8), (2, Family::Len24mPlus16)] {
        for m in 0..=u64::from(family.m_max()) {
            let n = 24 * m + 8 * r;
            assert_eq!(
                min_weight_count(n).unwrap(),
                block_count_oracle(r, m),
                "r={r} m={m}"
            );
        }
    }
}

#[test]
fn lambda_base_examples() {
    let f = CodeFamily::new(Family::Len24mPlus8, 0).unwrap();
    // the extended Hamming code supports a 3-(8, 4, 1) design
    assert_eq!(lambda_base(&f).unwrap(), ExactRat::one());
    let f = CodeFamily::new(Family::Len24mPlus16, 0).unwrap();
    // 28 blocks of size 4 on 16 points: lambda_1 = 28 * 4 / 16 = 7
    assert_eq!(
        lambda_base(&f).unwrap(),
        ExactRat::from_integer(ExactInt::from(7))
    );
}
