//! Extremal code families and the parameters of the t-designs their
//! minimum-weight supports would have to form.

use std::fmt;
use std::str::FromStr;

use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::enumerator::min_weight_count;
use crate::error::{Error, Result};
use crate::exact::{binom_u, is_nonneg_integer, ExactRat};

/// Largest strength the gate machinery accepts.
pub const MAX_STRENGTH: u32 = 12;

/// Length class of an extremal doubly even self-dual code: `24m + 8r`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// `[24m, 12m, 4m+4]`
    Len24m,
    /// `[24m+8, 12m+4, 4m+4]`
    Len24mPlus8,
    /// `[24m+16, 12m+8, 4m+4]`
    Len24mPlus16,
}

impl Family {
    pub const ALL: [Family; 3] = [Family::Len24m, Family::Len24mPlus8, Family::Len24mPlus16];

    pub fn index(self) -> u32 {
        match self {
            Family::Len24m => 0,
            Family::Len24mPlus8 => 1,
            Family::Len24mPlus16 => 2,
        }
    }

    pub fn from_index(r: u32) -> Option<Self> {
        Self::ALL.get(r as usize).copied()
    }

    /// Strength guaranteed by the Assmus-Mattson theorem: 5, 3, 1.
    pub fn am_strength(self) -> u32 {
        5 - 2 * self.index()
    }

    /// Largest m for which an extremal code is not already ruled out.
    pub fn m_max(self) -> u32 {
        match self {
            Family::Len24m => 153,
            Family::Len24mPlus8 => 158,
            Family::Len24mPlus16 => 163,
        }
    }

    pub fn m_min(self) -> u32 {
        match self {
            Family::Len24m => 1,
            _ => 0,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Family::Len24m => "24m",
            Family::Len24mPlus8 => "24m+8",
            Family::Len24mPlus16 => "24m+16",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.trim() {
            "24m" | "0" => Ok(Family::Len24m),
            "24m+8" | "1" => Ok(Family::Len24mPlus8),
            "24m+16" | "2" => Ok(Family::Len24mPlus16),
            other => Err(format!(
                "unknown family '{other}' (expected 24m, 24m+8 or 24m+16)"
            )),
        }
    }
}

impl Serialize for Family {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.label())
    }
}

impl<'de> Deserialize<'de> for Family {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// One member of a family: the extremal `[24m + 8r, 12m + 4r, 4m + 4]` code.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CodeFamily {
    family: Family,
    m: u32,
}

impl CodeFamily {
    pub fn new(family: Family, m: u32) -> Result<Self> {
        if m < family.m_min() || m > family.m_max() {
            return Err(Error::MOutOfRange {
                family,
                m,
                min: family.m_min(),
                max: family.m_max(),
            });
        }
        Ok(Self { family, m })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    /// Code length, which is also the number of design points.
    pub fn n(&self) -> u64 {
        24 * u64::from(self.m) + 8 * u64::from(self.family.index())
    }

    /// Minimum weight, which is also the block size.
    pub fn k(&self) -> u64 {
        4 * u64::from(self.m) + 4
    }

    pub fn am_strength(&self) -> u32 {
        self.family.am_strength()
    }
}

/// Parameters `t-(v, k, lambda_t)` of a hypothesized design.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DesignParams {
    pub v: u64,
    pub k: u64,
    pub t: u32,
    pub lambda_t: ExactRat,
    pub self_orthogonal: bool,
}

impl DesignParams {
    pub fn new(v: u64, k: u64, t: u32, lambda_t: ExactRat, self_orthogonal: bool) -> Self {
        assert!(u64::from(t) <= k && k <= v, "need 0 <= t <= k <= v");
        assert!(
            !self_orthogonal || k.is_multiple_of(2),
            "self-orthogonal needs even k"
        );
        Self {
            v,
            k,
            t,
            lambda_t,
            self_orthogonal,
        }
    }

    /// Whether `lambda_t` is a nonnegative integer.
    pub fn is_realizable(&self) -> bool {
        is_nonneg_integer(&self.lambda_t)
    }
}

/// `lambda_s` at the Assmus-Mattson strength `s` of the minimum-weight
/// support design.
///
/// For `24m` this is the closed form `C(5m-2, m-1)`. The other families use
/// `b C(k, s) / C(n, s)` with `b` the minimum-weight count of the extremal
/// enumerator.
pub fn lambda_base(f: &CodeFamily) -> Result<ExactRat> {
    let m = u64::from(f.m());
    if f.family() == Family::Len24m {
        return Ok(ExactRat::from_integer(binom_u(5 * m - 2, m - 1)));
    }
    let s = u64::from(f.am_strength());
    let b = min_weight_count(f.n())?;
    Ok(ExactRat::new(b * binom_u(f.k(), s), binom_u(f.n(), s)))
}

/// `lambda_t` of the design obtained by assuming strength `t`:
/// `lambda_s C(k - s, t - s) / C(v - s, t - s)`.
pub fn extend_lambda(f: &CodeFamily, t: u32) -> Result<ExactRat> {
    let s = f.am_strength();
    check_strength(f, t)?;
    let base = lambda_base(f)?;
    let (s, t) = (u64::from(s), u64::from(t));
    Ok(base * ExactRat::new(binom_u(f.k() - s, t - s), binom_u(f.n() - s, t - s)))
}

fn check_strength(f: &CodeFamily, t: u32) -> Result<()> {
    let s = f.am_strength();
    if t < s {
        return Err(Error::InvalidStrength {
            t,
            reason: format!("below the Assmus-Mattson strength {s}"),
        });
    }
    if u64::from(t) > f.k() || t > MAX_STRENGTH {
        return Err(Error::InvalidStrength {
            t,
            reason: format!("above min(k = {}, cap = {MAX_STRENGTH})", f.k()),
        });
    }
    Ok(())
}

/// The self-orthogonal `t-(n, k, lambda_t)` design that the minimum-weight
/// supports would form.
pub fn hypothesized_design(f: &CodeFamily, t: u32) -> Result<DesignParams> {
    Ok(DesignParams::new(
        f.n(),
        f.k(),
        t,
        extend_lambda(f, t)?,
        true,
    ))
}

/// `[lambda_0, ..., lambda_t]` with
/// `lambda_i = lambda_t C(v - i, t - i) / C(k - i, t - i)`.
pub fn lambda_vector(d: &DesignParams) -> Vec<ExactRat> {
    let t = u64::from(d.t);
    (0..=t)
        .map(|i| &d.lambda_t * ExactRat::new(binom_u(d.v - i, t - i), binom_u(d.k - i, t - i)))
        .collect()
}

/// Strength implied by assuming strength `t`: a design of strength one above
/// the Assmus-Mattson strength is automatically one stronger still.
pub fn apply_strengthening(f: Family, t: u32) -> u32 {
    if t == f.am_strength() + 1 {
        t + 1
    } else {
        t
    }
}

/// Whether every `lambda_i`, `s < i <= apply_strengthening(t)`, is a
/// positive integer.
pub fn is_admissible(f: &CodeFamily, t: u32) -> Result<bool> {
    let top = apply_strengthening(f.family(), t);
    if u64::from(top) > f.k() {
        return Ok(false);
    }
    let lambdas = lambda_vector(&hypothesized_design(f, top)?);
    let s = f.am_strength() as usize;
    Ok(lambdas[s + 1..]
        .iter()
        .all(|l| is_nonneg_integer(l) && !l.is_zero() && !l.is_negative()))
}

/// Every `m` in `[m_lo, m_hi]` whose hypothesized design passes
/// [`is_admissible`], ascending.
pub fn admissible_scan(family: Family, t: u32, m_lo: u32, m_hi: u32) -> Result<Vec<u32>> {
    if m_lo > m_hi {
        return Ok(Vec::new());
    }
    CodeFamily::new(family, m_lo)?;
    CodeFamily::new(family, m_hi)?;
    let verdicts: Vec<Result<Option<u32>>> = (m_lo..=m_hi)
        .into_par_iter()
        .map(|m| {
            let f = CodeFamily::new(family, m)?;
            Ok(is_admissible(&f, t)?.then_some(m))
        })
        .collect();
    verdicts.into_iter().filter_map(|v| v.transpose()).collect()
}
