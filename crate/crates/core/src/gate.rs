//! Block-intersection moments and the integrality gates built on them.
//!
//! Fix a reference codeword of weight `u` and let `n_j` count the
//! minimum-weight codewords meeting it in `j` coordinates. If the supports
//! form a t-design, the falling-factorial moments `A_s = sum_j (j)_s n_j`
//! equal `(u)_s lambda_s` for `s <= t`. Expanding `sum_j prod_i (j - x_i) n_j`
//! through Stirling numbers and elementary symmetric polynomials writes it as
//! an integer combination `F` of the `A_s`. With offsets `0, 2, ..., 2(l-1)`
//! every even level below `2l` is annihilated and each remaining level `j`
//! carries `2^l l! C(j/2, l)`, so `F / (2^l l!)` must be an integer. A
//! non-integral quotient rules the design out.

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::design::{hypothesized_design, lambda_vector, CodeFamily, DesignParams, Family};
use crate::error::{Error, Result};
use crate::exact::{
    binom_u, elem_sym, exact_div, factorial, falling, falling_int, is_integral, is_nonneg_integer,
    stirling2_row, ExactInt, ExactRat,
};
use crate::linsolve::solve_square;

/// Falling-factorial moments `A_0..A_l` relative to a weight-`u` reference.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MomentVector {
    pub u: u64,
    pub entries: Vec<ExactInt>,
}

impl MomentVector {
    /// Block count `A_0`.
    pub fn block_count(&self) -> &ExactInt {
        &self.entries[0]
    }
}

/// `A_s = (u)_s lambda_s` for each supplied `lambda_s`.
pub fn moment_vector(u: u64, lambdas: &[ExactRat]) -> Result<MomentVector> {
    let u_rat = ExactRat::from_integer(ExactInt::from(u));
    let entries = lambdas
        .iter()
        .enumerate()
        .map(|(s, lambda)| {
            let a = falling(&u_rat, s as u64) * lambda;
            if is_nonneg_integer(&a) {
                Ok(a.numer().clone())
            } else {
                Err(Error::MomentNotIntegral {
                    s,
                    value: crate::exact::fmt_ratio(&a),
                })
            }
        })
        .collect::<Result<_>>()?;
    Ok(MomentVector { u, entries })
}

/// Strictly increasing nonnegative even offsets `x_1 < ... < x_l`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OffsetSet {
    xs: Vec<i64>,
}

impl OffsetSet {
    pub fn new(xs: Vec<i64>) -> Result<Self> {
        let even = xs.iter().all(|&x| x >= 0 && x % 2 == 0);
        let increasing = xs.windows(2).all(|w| w[0] < w[1]);
        if !even || !increasing {
            return Err(Error::InvalidOffsets(xs));
        }
        Ok(Self { xs })
    }

    /// `[0, 2, ..., 2(l-1)]`.
    pub fn standard(l: usize) -> Self {
        Self {
            xs: (0..l as i64).map(|j| 2 * j).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.xs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.xs.is_empty()
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.xs
    }

    /// `prod_j (level - x_j)`.
    pub fn product_at(&self, level: i64) -> ExactInt {
        self.xs
            .iter()
            .fold(ExactInt::one(), |acc, &x| acc * (level - x))
    }
}

/// Coefficients `c_h` with `F = sum_h c_h A_h`, where
/// `c_h = sum_theta (-1)^theta sigma_theta S(l - theta, h)`.
pub fn lemma2_coefficients(offsets: &OffsetSet) -> Vec<ExactInt> {
    let l = offsets.len();
    let xs: Vec<ExactInt> = offsets
        .as_slice()
        .iter()
        .map(|&x| ExactInt::from(x))
        .collect();
    let sigma = elem_sym(&xs);
    let mut coeffs = vec![ExactInt::zero(); l + 1];
    for (theta, sig) in sigma.iter().enumerate() {
        if sig.is_zero() {
            continue;
        }
        let signed = if theta % 2 == 0 { sig.clone() } else { -sig };
        for (h, s) in stirling2_row(l - theta).iter().enumerate() {
            coeffs[h] += &signed * s;
        }
    }
    coeffs
}

/// `F = sum_j prod_i (j - x_i) n_j`, evaluated from the moments alone.
pub fn lemma2_eval(offsets: &OffsetSet, moments: &MomentVector) -> Result<ExactInt> {
    let need = offsets.len() + 1;
    if moments.entries.len() < need {
        return Err(Error::ShortMomentVector {
            have: moments.entries.len(),
            need,
        });
    }
    Ok(lemma2_coefficients(offsets)
        .iter()
        .zip(&moments.entries)
        .map(|(c, a)| c * a)
        .sum())
}

/// `prod_j (2l - x_j)` for the standard offsets, which is `2^l l!`.
pub fn annihilator_divisor(l: usize) -> ExactInt {
    OffsetSet::standard(l).product_at(2 * l as i64)
}

/// Weight of level `i` in `F / annihilator_divisor(l)`, i.e. `C(i/2, l)`.
pub fn residual_coefficient(i: u64, l: usize) -> Result<ExactInt> {
    assert!(
        i.is_multiple_of(2) && i >= 2 * l as u64,
        "need an even level i >= 2l"
    );
    let numer = OffsetSet::standard(l).product_at(i as i64);
    let denom = annihilator_divisor(l);
    exact_div(&numer, &denom).ok_or_else(|| Error::InexactDivision {
        numer: numer.to_string(),
        denom: denom.to_string(),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Pass,
    FailNoninteger,
}

impl Verdict {
    pub fn label(self) -> &'static str {
        match self {
            Verdict::Pass => "PASS",
            Verdict::FailNoninteger => "FAIL_NONINTEGER",
        }
    }
}

/// Outcome of one integrality test.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GateResult {
    pub family: Family,
    pub m: u32,
    pub t: u32,
    pub u: u64,
    #[serde(rename = "F", with = "decimal")]
    pub f: ExactInt,
    #[serde(with = "ratio_str")]
    pub quotient: ExactRat,
    pub integral: bool,
    pub verdict: Verdict,
}

impl GateResult {
    pub fn failed(&self) -> bool {
        self.verdict == Verdict::FailNoninteger
    }
}

mod decimal {
    use serde::{Deserialize, Deserializer, Serializer};

    use crate::exact::ExactInt;

    pub fn serialize<S: Serializer>(v: &ExactInt, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<ExactInt, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

mod ratio_str {
    use serde::{Deserialize, Deserializer, Serializer};

    use crate::exact::{fmt_ratio, parse_ratio, ExactRat};

    pub fn serialize<S: Serializer>(v: &ExactRat, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&fmt_ratio(v))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<ExactRat, D::Error> {
        let s = String::deserialize(d)?;
        parse_ratio(&s).ok_or_else(|| serde::de::Error::custom(format!("bad ratio '{s}'")))
    }
}

fn check_weight(f: &CodeFamily, u: u64) -> Result<()> {
    let (n, k) = (f.n(), f.k());
    let reason = if !u.is_multiple_of(4) {
        Some("not a multiple of 4".to_string())
    } else if u < k {
        Some(format!("below the minimum weight {k}"))
    } else if u > k && u > n - k {
        Some(format!("above n - k = {}", n - k))
    } else {
        None
    };
    match reason {
        Some(reason) => Err(Error::InvalidWeight { u, reason }),
        None => Ok(()),
    }
}

/// Runs the strength-`t` gate for family member `f` against a weight-`u`
/// reference (`u = k` is the block-against-block case).
///
/// A non-integral `lambda_s`, `s <= t`, is reported as
/// [`Error::LambdaNotIntegral`]: the hypothesis fails before any gate runs.
pub fn integrality_gate(f: &CodeFamily, t: u32, u: u64) -> Result<GateResult> {
    if t == 0 {
        return Err(Error::InvalidStrength {
            t,
            reason: "gates need at least one offset".into(),
        });
    }
    check_weight(f, u)?;
    let design = hypothesized_design(f, t)?;
    let lambdas = lambda_vector(&design);
    if let Some((s, bad)) = lambdas
        .iter()
        .enumerate()
        .find(|(_, l)| !is_nonneg_integer(l))
    {
        return Err(Error::LambdaNotIntegral {
            s,
            value: crate::exact::fmt_ratio(bad),
        });
    }
    let moments = moment_vector(u, &lambdas)?;
    let l = t as usize;
    let value = lemma2_eval(&OffsetSet::standard(l), &moments)?;
    let quotient = ExactRat::new(value.clone(), annihilator_divisor(l));
    let integral = is_integral(&quotient);
    Ok(GateResult {
        family: f.family(),
        m: f.m(),
        t,
        u,
        f: value,
        quotient,
        integral,
        verdict: if integral {
            Verdict::Pass
        } else {
            Verdict::FailNoninteger
        },
    })
}

/// Exact solution of the moment equations over a set of intersection
/// levels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntersectionSolution {
    /// `(level, n_level)`, free levels in the order supplied.
    pub values: Vec<(u64, ExactRat)>,
    pub non_integral: Vec<u64>,
    pub negative: Vec<u64>,
}

impl IntersectionSolution {
    pub fn is_feasible(&self) -> bool {
        self.non_integral.is_empty() && self.negative.is_empty()
    }
}

/// Solves `sum_i (i)_s n_i = (u)_s lambda_s` for the `n_i` at `free_levels`,
/// with the levels in `fixed` pinned to known counts and every other level
/// zero.
///
/// The first `free_levels.len()` equations determine the solution; the
/// remaining ones (up to `s = t`) must then hold exactly.
pub fn solve_intersection_numbers(
    d: &DesignParams,
    u: u64,
    free_levels: &[u64],
    fixed: &[(u64, ExactInt)],
) -> Result<IntersectionSolution> {
    let equations = d.t as usize + 1;
    let unknowns = free_levels.len();
    if unknowns > equations {
        return Err(Error::Underdetermined {
            unknowns,
            equations,
        });
    }
    let u_rat = ExactRat::from_integer(ExactInt::from(u));
    let rhs: Vec<ExactRat> = lambda_vector(d)
        .iter()
        .enumerate()
        .map(|(s, lambda)| {
            let fixed_part: ExactInt = fixed
                .iter()
                .map(|(level, count)| falling_int(&ExactInt::from(*level), s as u64) * count)
                .sum();
            falling(&u_rat, s as u64) * lambda - ExactRat::from_integer(fixed_part)
        })
        .collect();
    let coeff = |s: usize, level: u64| {
        ExactRat::from_integer(falling_int(&ExactInt::from(level), s as u64))
    };

    let a = (0..unknowns)
        .map(|s| free_levels.iter().map(|&lv| coeff(s, lv)).collect())
        .collect();
    let x = solve_square(a, rhs[..unknowns].to_vec())?;

    for (s, target) in rhs.iter().enumerate().skip(unknowns) {
        let lhs: ExactRat = free_levels
            .iter()
            .zip(&x)
            .map(|(&lv, v)| coeff(s, lv) * v)
            .sum();
        if &lhs != target {
            return Err(Error::Inconsistent { s });
        }
    }

    let values: Vec<(u64, ExactRat)> = free_levels.iter().copied().zip(x).collect();
    let non_integral = values
        .iter()
        .filter(|(_, v)| !is_integral(v))
        .map(|(lv, _)| *lv)
        .collect();
    let negative = values
        .iter()
        .filter(|(_, v)| v.is_negative())
        .map(|(lv, _)| *lv)
        .collect();
    Ok(IntersectionSolution {
        values,
        non_integral,
        negative,
    })
}

/// `2^l l!`, the closed form of [`annihilator_divisor`].
pub fn divisor_closed_form(l: usize) -> ExactInt {
    (ExactInt::one() << l) * factorial(l as u64)
}

/// `C(i/2, l)` for even `i`.
pub fn residual_closed_form(i: u64, l: usize) -> ExactInt {
    binom_u(i / 2, l as u64)
}

/// Whether `i` is a level that can carry blocks against a weight-`u`
/// reference: even, and at most `u/2` unless it is the reference block itself.
pub fn is_structural_level(i: u64, u: u64, k: u64) -> bool {
    i.is_multiple_of(2) && (i <= u / 2 || (u == k && i == k))
}
