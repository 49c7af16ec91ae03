//! Extremal weight enumerators of binary doubly even self-dual codes.
//!
//! Every such enumerator lies in the ring generated by
//! `g1 = x^8 + 14 x^4 y^4 + y^8` and `g2 = x^4 y^4 (x^4 - y^4)^4`. The
//! extremal one is the unique combination of `g1^(n/8 - 3j) g2^j` whose
//! coefficients at weights `4, 8, ..., 4 floor(n/24)` vanish.
//!
//! All polynomials here only carry y-exponents divisible by 4, so they are
//! stored by `y_exp / 4`.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{ratio, to_integer, ExactInt};

/// Largest supported code length, 24 * 163 + 16.
pub const MAX_LENGTH: u64 = 24 * 163 + 16;

/// Homogeneous polynomial in x, y of fixed degree whose y-exponents are all
/// multiples of 4. `coeffs[i]` is the coefficient of `x^(n - 4i) y^(4i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomogeneousPoly {
    degree: u64,
    coeffs: Vec<ExactInt>,
}

impl HomogeneousPoly {
    pub fn new(degree: u64, coeffs: Vec<ExactInt>) -> Self {
        assert!(degree.is_multiple_of(4), "degree must be a multiple of 4");
        assert!(
            coeffs.len() as u64 <= degree / 4 + 1,
            "coefficient overflow"
        );
        let mut p = Self { degree, coeffs };
        p.coeffs.resize((degree / 4 + 1) as usize, ExactInt::zero());
        p
    }

    pub fn one() -> Self {
        Self::new(0, vec![ExactInt::one()])
    }

    pub fn g1() -> Self {
        Self::new(8, small(&[1, 14, 1]))
    }

    pub fn g2() -> Self {
        Self::new(24, small(&[0, 1, -4, 6, -4, 1]))
    }

    pub fn degree(&self) -> u64 {
        self.degree
    }

    /// Coefficient of `x^(n - y_exp) y^y_exp`.
    pub fn coeff(&self, y_exp: u64) -> ExactInt {
        if !y_exp.is_multiple_of(4) || y_exp > self.degree {
            return ExactInt::zero();
        }
        self.coeffs[(y_exp / 4) as usize].clone()
    }

    /// Nonzero terms as `(y_exp, coefficient)`, ascending.
    pub fn terms(&self) -> impl Iterator<Item = (u64, &ExactInt)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (4 * i as u64, c))
    }

    /// Lowest y-exponent carrying a nonzero coefficient.
    pub fn lowest_y_exp(&self) -> Option<u64> {
        self.terms().next().map(|(e, _)| e)
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self {
            degree: self.degree + other.degree,
            coeffs: poly_mul(&self.coeffs, &other.coeffs, usize::MAX),
        }
    }

    pub fn pow(&self, e: u64) -> Self {
        (0..e).fold(Self::one(), |acc, _| acc.mul(self))
    }
}

fn small(vals: &[i64]) -> Vec<ExactInt> {
    vals.iter().map(|&v| ExactInt::from(v)).collect()
}

/// Product of two coefficient lists, truncated to `limit` terms.
fn poly_mul(a: &[ExactInt], b: &[ExactInt], limit: usize) -> Vec<ExactInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let len = (a.len() + b.len() - 1).min(limit);
    let mut out = vec![ExactInt::zero(); len];
    for (i, x) in a.iter().enumerate() {
        if i >= len {
            break;
        }
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(len - i) {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    out
}

/// Power-series quotient `p / d` modulo `z^len`; `d[0]` must be 1.
fn series_div(p: &[ExactInt], d: &[ExactInt], len: usize) -> Vec<ExactInt> {
    debug_assert!(d[0].is_one());
    let mut q: Vec<ExactInt> = Vec::with_capacity(len);
    for k in 0..len {
        let mut v = p.get(k).cloned().unwrap_or_default();
        for (i, di) in d.iter().enumerate().skip(1).take(k) {
            if !di.is_zero() {
                v -= di * &q[k - i];
            }
        }
        q.push(v);
    }
    q
}

fn check_length(n: u64) -> Result<()> {
    if n == 0 || !n.is_multiple_of(8) || n > MAX_LENGTH {
        return Err(Error::InvalidLength(n));
    }
    Ok(())
}

/// The products `g1^((n - 24j)/8) g2^j` for `0 <= j <= floor(n/24)`.
pub fn gleason_basis(n: u64) -> Result<Vec<HomogeneousPoly>> {
    check_length(n)?;
    let (g1, g2) = (HomogeneousPoly::g1(), HomogeneousPoly::g2());
    Ok((0..=n / 24)
        .map(|j| g1.pow((n - 24 * j) / 8).mul(&g2.pow(j)))
        .collect())
}

/// Coefficients `c_j` of the extremal combination, in basis order.
///
/// Basis element `j` has lowest y-exponent `4j` with coefficient 1, so the
/// system is unit triangular. Each basis element is produced from the
/// previous one by the series step `* g2 / g1^3`, truncated to the `len`
/// low-order terms the solve and the caller need.
fn solve_extremal(n: u64, len: usize) -> Result<(Vec<ExactInt>, Vec<ExactInt>)> {
    let jmax = (n / 24) as usize;
    let g1 = HomogeneousPoly::g1().coeffs;
    let g2 = HomogeneousPoly::g2().coeffs;
    let g1_cubed = poly_mul(&poly_mul(&g1, &g1, usize::MAX), &g1, usize::MAX);

    let mut basis = (0..n / 8).fold(vec![ExactInt::one()], |acc, _| poly_mul(&acc, &g1, len));
    basis.resize(len, ExactInt::zero());

    let mut coeffs = Vec::with_capacity(jmax + 1);
    let mut total = vec![ExactInt::zero(); len];
    for j in 0..=jmax {
        let lead = &basis[j];
        let target = if j == 0 {
            ExactInt::one()
        } else {
            ExactInt::zero()
        };
        let c = to_integer(&ratio(target - &total[j], lead.clone())).ok_or(
            Error::NonIntegralEnumerator {
                n,
                weight: 4 * j as u64,
            },
        )?;
        for (t, b) in total.iter_mut().zip(&basis) {
            if !b.is_zero() {
                *t += &c * b;
            }
        }
        coeffs.push(c);
        if j < jmax {
            basis = series_div(&poly_mul(&basis, &g2, len), &g1_cubed, len);
        }
    }
    Ok((coeffs, total))
}

/// Weight enumerator as a dense list `A_0..A_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightEnumerator {
    pub n: u64,
    pub counts: Vec<ExactInt>,
}

impl WeightEnumerator {
    pub fn count(&self, weight: u64) -> ExactInt {
        self.counts
            .get(weight as usize)
            .cloned()
            .unwrap_or_default()
    }

    /// Smallest positive weight with a nonzero count.
    pub fn min_weight(&self) -> Option<u64> {
        self.nonzero().map(|(w, _)| w).find(|&w| w > 0)
    }

    pub fn nonzero(&self) -> impl Iterator<Item = (u64, &ExactInt)> {
        self.counts
            .iter()
            .enumerate()
            .filter(|(_, a)| !a.is_zero())
            .map(|(w, a)| (w as u64, a))
    }

    pub fn total(&self) -> ExactInt {
        self.counts.iter().sum()
    }
}

/// Full extremal weight enumerator of length `n`.
pub fn extremal_weight_enumerator(n: u64) -> Result<WeightEnumerator> {
    check_length(n)?;
    let jmax = n / 24;
    let (c, _) = solve_extremal(n, jmax as usize + 1)?;

    // Horner in (g1^3, g2): sum_j c_j (g1^3)^(J-j) g2^j, then the leftover
    // g1 power.
    let g1 = HomogeneousPoly::g1();
    let g1_cubed = g1.pow(3);
    let g2 = HomogeneousPoly::g2();
    let mut acc = HomogeneousPoly::new(0, vec![c[0].clone()]);
    let mut g2_pow = HomogeneousPoly::one();
    for cj in c.iter().skip(1) {
        g2_pow = g2_pow.mul(&g2);
        acc = acc.mul(&g1_cubed);
        for (a, b) in acc.coeffs.iter_mut().zip(&g2_pow.coeffs) {
            if !b.is_zero() {
                *a += cj * b;
            }
        }
    }
    let poly = acc.mul(&g1.pow((n - 24 * jmax) / 8));
    debug_assert_eq!(poly.degree, n);

    let mut counts = vec![ExactInt::zero(); n as usize + 1];
    for (i, a) in poly.coeffs.into_iter().enumerate() {
        counts[4 * i] = a;
    }
    Ok(WeightEnumerator { n, counts })
}

type LowMemo = Mutex<HashMap<u64, Arc<Vec<ExactInt>>>>;

fn low_memo() -> &'static LowMemo {
    static MEMO: OnceLock<LowMemo> = OnceLock::new();
    MEMO.get_or_init(Default::default)
}

/// `[A_0, A_4, ..., A_{4(J+2)}]` of the extremal enumerator with
/// `J = floor(n/24)`: the forced zeros, the minimum-weight count, and the
/// count at the next weight. Memoized per length.
pub fn extremal_low_counts(n: u64) -> Result<Arc<Vec<ExactInt>>> {
    check_length(n)?;
    if let Some(hit) = low_memo().lock().expect("memo poisoned").get(&n) {
        return Ok(Arc::clone(hit));
    }
    let len = ((n / 24 + 3) as usize).min((n / 4 + 1) as usize);
    let (_, low) = solve_extremal(n, len)?;
    let low = Arc::new(low);
    low_memo()
        .lock()
        .expect("memo poisoned")
        .entry(n)
        .or_insert_with(|| Arc::clone(&low));
    Ok(low)
}

/// Minimum weight `4 floor(n/24) + 4` of an extremal code of length `n`.
pub fn extremal_min_weight(n: u64) -> u64 {
    4 * (n / 24) + 4
}

/// Number of minimum-weight codewords, i.e. the block count of the
/// minimum-weight support design. Nonpositive counts are reported as errors.
pub fn min_weight_count(n: u64) -> Result<ExactInt> {
    let low = extremal_low_counts(n)?;
    let count = low[(n / 24 + 1) as usize].clone();
    if !count.is_positive() {
        return Err(Error::NonPositiveBlockCount {
            n,
            count: count.to_string(),
        });
    }
    Ok(count)
}

/// Number of codewords of weight `4 floor(n/24) + 8`.
pub fn next_weight_count(n: u64) -> Result<ExactInt> {
    let low = extremal_low_counts(n)?;
    Ok(low.get((n / 24 + 2) as usize).cloned().unwrap_or_default())
}
