//! Exact integer and rational arithmetic plus the combinatorial primitives
//! used by the design and gate layers.
//!
//! Everything here is a pure function over arbitrary-precision values. There
//! is no floating point anywhere in the crate; integrality verdicts are read
//! straight off reduced denominators.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Arbitrary-precision signed integer.
pub type ExactInt = BigInt;

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
pub type ExactRat = BigRational;

pub fn int(v: i64) -> ExactInt {
    ExactInt::from(v)
}

pub fn rat(v: i64) -> ExactRat {
    ExactRat::from_integer(int(v))
}

pub fn ratio(numer: ExactInt, denom: ExactInt) -> ExactRat {
    ExactRat::new(numer, denom)
}

pub fn is_integral(r: &ExactRat) -> bool {
    r.denom().is_one()
}

/// Returns the integer value of `r` when its denominator is 1.
pub fn to_integer(r: &ExactRat) -> Option<ExactInt> {
    is_integral(r).then(|| r.numer().clone())
}

pub fn is_nonneg_integer(r: &ExactRat) -> bool {
    is_integral(r) && !r.is_negative()
}

/// Canonical "p/q" rendering. Integers keep their "/1".
pub fn fmt_ratio(r: &ExactRat) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Human rendering: "p" for integers, "p/q" otherwise.
pub fn fmt_exact(r: &ExactRat) -> String {
    if is_integral(r) {
        r.numer().to_string()
    } else {
        fmt_ratio(r)
    }
}

/// Parses "p", "p/q" or "-p/q" into a reduced rational.
pub fn parse_ratio(s: &str) -> Option<ExactRat> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: ExactInt = p.trim().parse().ok()?;
            let q: ExactInt = q.trim().parse().ok()?;
            (!q.is_zero()).then(|| ExactRat::new(p, q))
        }
        None => s.parse::<ExactInt>().ok().map(ExactRat::from_integer),
    }
}

pub fn factorial(n: u64) -> ExactInt {
    (2..=n).fold(ExactInt::one(), |acc, i| acc * i)
}

/// Binomial coefficient C(n, k).
///
/// Zero when `k < 0` or `0 <= n < k`. Negative `n` uses the polynomial
/// extension n(n-1)...(n-k+1)/k!.
pub fn binom(n: &ExactInt, k: &ExactInt) -> ExactInt {
    if k.is_negative() {
        return ExactInt::zero();
    }
    if n.is_negative() {
        // C(n, k) = (-1)^k C(k - n - 1, k)
        let flipped = binom(&(k - n - 1u32), k);
        return if k.is_odd() { -flipped } else { flipped };
    }
    if k > n {
        return ExactInt::zero();
    }
    let k = std::cmp::min(k.clone(), n - k);
    let k = k.to_u64().expect("binomial lower index fits in u64");
    let mut acc = ExactInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// `binom` on machine integers.
pub fn binom_u(n: u64, k: u64) -> ExactInt {
    binom(&ExactInt::from(n), &ExactInt::from(k))
}

/// Falling factorial x(x-1)...(x-m+1); `falling(x, 0) = 1`.
pub fn falling(x: &ExactRat, m: u64) -> ExactRat {
    let mut acc = ExactRat::one();
    let mut term = x.clone();
    for _ in 0..m {
        acc *= &term;
        term -= ExactInt::one();
    }
    acc
}

pub fn falling_int(x: &ExactInt, m: u64) -> ExactInt {
    (0..m).fold(ExactInt::one(), |acc, i| acc * (x - i))
}

/// Stirling number of the second kind S(n, k) by the recurrence
/// S(n, k) = k S(n-1, k) + S(n-1, k-1) with S(0, 0) = 1.
pub fn stirling2(n: usize, k: usize) -> ExactInt {
    if k > n {
        return ExactInt::zero();
    }
    stirling2_row(n).swap_remove(k)
}

/// Row `[S(n, 0), ..., S(n, n)]` of the recurrence table.
pub fn stirling2_row(n: usize) -> Vec<ExactInt> {
    let mut row = vec![ExactInt::one()];
    for i in 1..=n {
        let mut next = vec![ExactInt::zero(); i + 1];
        for (k, slot) in next.iter_mut().enumerate().skip(1) {
            let carry = if k < row.len() {
                &row[k] * k
            } else {
                ExactInt::zero()
            };
            *slot = carry + &row[k - 1];
        }
        row = next;
    }
    row
}

/// S(n, k) from the alternating sum (1/k!) sum_i (-1)^i C(k, i) (k-i)^n.
///
/// Kept as an independent path to cross-check the recurrence.
pub fn stirling2_explicit(n: usize, k: usize) -> ExactInt {
    let mut sum = ExactInt::zero();
    for i in 0..=k {
        let term = binom_u(k as u64, i as u64) * num_traits::pow(ExactInt::from(k - i), n);
        if i % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    let (q, r) = sum.div_rem(&factorial(k as u64));
    debug_assert!(r.is_zero());
    q
}

/// Elementary symmetric polynomials `[sigma_0, sigma_1, ..., sigma_l]` of `xs`,
/// read off the coefficients of prod (z + x_i).
pub fn elem_sym(xs: &[ExactInt]) -> Vec<ExactInt> {
    let mut sigma = vec![ExactInt::one()];
    for x in xs {
        sigma.push(ExactInt::zero());
        for k in (1..sigma.len()).rev() {
            let add = &sigma[k - 1] * x;
            sigma[k] += add;
        }
    }
    sigma
}

/// Exact quotient `numer / denom`, or `None` when the division leaves a
/// remainder.
pub fn exact_div(numer: &ExactInt, denom: &ExactInt) -> Option<ExactInt> {
    let (q, r) = numer.div_rem(denom);
    r.is_zero().then_some(q)
}
