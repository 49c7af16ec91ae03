use sdcheck_core::design::{hypothesized_design, lambda_vector, CodeFamily, Family};
use sdcheck_core::exact::{fmt_ratio, is_integral, ExactInt, ExactRat};
use sdcheck_core::gate::{
    annihilator_divisor, integrality_gate, lemma2_coefficients, moment_vector, OffsetSet,
};
use sdcheck_core::golden::THM4_M63_QUOTIENT;

fn m63() -> CodeFamily {
    CodeFamily::new(Family::Len24m, 63).unwrap()
}

#[test]
fn m63_block_gate_is_integral() {
    let r = integrality_gate(&m63(), 8, 256).unwrap();
    assert!(r.integral);
    assert_eq!(
        fmt_ratio(&r.quotient),
        "9480134409737760044984262893736872009296822259182647650422691749161990523488/1"
    );
}

#[test]
fn m63_next_weight_gate_fails() {
    let r = integrality_gate(&m63(), 8, 260).unwrap();
    assert!(r.failed());
}

/// The published m = 63 value comes out when the top moment is taken as the
/// bare `lambda_8` instead of `(4m + 4)_8 lambda_8`.
#[test]
fn published_m63_value_drops_the_top_falling_factorial() {
    let f = m63();
    let lambdas = lambda_vector(&hypothesized_design(&f, 8).unwrap());
    let mut moments = moment_vector(f.k(), &lambdas).unwrap();
    moments.entries[8] = lambdas[8].numer().clone();
    let coeffs = lemma2_coefficients(&OffsetSet::standard(8));
    let value: ExactInt = coeffs
        .iter()
        .zip(&moments.entries)
        .map(|(c, a)| c * a)
        .sum();
    let q = ExactRat::new(value, annihilator_divisor(8));
    assert!(!is_integral(&q));
    assert_eq!(fmt_ratio(&q), THM4_M63_QUOTIENT);
}
