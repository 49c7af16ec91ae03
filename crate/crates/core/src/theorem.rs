//! Scan and theorem-reproduction drivers.
//!
//! A strength-`t` hypothesis is tested in stages: the `lambda` filter up to
//! `apply_strengthening(t)`, then integrality gates at every level above the
//! Assmus-Mattson strength, first against a minimum-weight block (`u = k`)
//! and then against a codeword of the next weight (`u = k + 4`). The first
//! failing gate eliminates `m`.

use std::fmt;
use std::str::FromStr;

use num_traits::Signed;
use rayon::prelude::*;

use crate::design::{admissible_scan, apply_strengthening, is_admissible, CodeFamily, Family};
use crate::enumerator::next_weight_count;
use crate::error::Result;
use crate::exact::fmt_ratio;
use crate::gate::GateResult;
use crate::golden::{self, StageColumn, StageSet};
use crate::report::{GoldenCheck, Report, SetListing};
use crate::store::GateStore;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TheoremId {
    Lemma1,
    Thm1,
    Thm2,
    Thm3,
    Thm4,
    Thm5_1,
    Thm5_2,
}

impl TheoremId {
    pub const ALL: [TheoremId; 7] = [
        TheoremId::Lemma1,
        TheoremId::Thm1,
        TheoremId::Thm2,
        TheoremId::Thm3,
        TheoremId::Thm4,
        TheoremId::Thm5_1,
        TheoremId::Thm5_2,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::Lemma1 => "lemma1",
            TheoremId::Thm1 => "thm1",
            TheoremId::Thm2 => "thm2",
            TheoremId::Thm3 => "thm3",
            TheoremId::Thm4 => "thm4",
            TheoremId::Thm5_1 => "thm5.1",
            TheoremId::Thm5_2 => "thm5.2",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, thiserror::Error)]
#[error(
    "unknown theorem id '{0}' (expected one of lemma1, thm1, thm2, thm3, thm4, thm5.1, thm5.2)"
)]
pub struct UnknownTheorem(pub String);

impl FromStr for TheoremId {
    type Err = UnknownTheorem;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        TheoremId::ALL
            .into_iter()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| UnknownTheorem(s.to_string()))
    }
}

/// Outcome of one strength hypothesis over a pool of `m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Stage {
    pub t: u32,
    /// Strength actually assumed after strengthening.
    pub top: u32,
    pub candidates: Vec<u32>,
    pub survivors: Vec<u32>,
    pub rows: Vec<GateResult>,
}

/// Gates for one `m`, in order, stopping at the first failure. Returns the
/// gates run and whether one failed.
///
/// `offsets` are added to `k` to pick reference weights. A `k + 4`
/// reference is skipped when it is outside `[k, n - k]` or when the
/// extremal enumerator has no codewords of that weight.
pub fn gate_sequence(
    store: &GateStore,
    f: &CodeFamily,
    levels: &[u32],
    offsets: &[u64],
) -> Result<(Vec<GateResult>, bool)> {
    let (n, k) = (f.n(), f.k());
    let mut weights = Vec::with_capacity(offsets.len());
    for &d in offsets {
        let u = k + d;
        if d > 0 && (u > n - k || !next_weight_count(n)?.is_positive()) {
            continue;
        }
        weights.push(u);
    }
    let mut rows = Vec::new();
    for &l in levels {
        for &u in &weights {
            let r = store.gate(f, l, u)?;
            let failed = r.failed();
            rows.push(r);
            if failed {
                return Ok((rows, true));
            }
        }
    }
    Ok((rows, false))
}

/// Runs [`gate_sequence`] for every `m` in parallel, preserving order.
fn gate_all(
    store: &GateStore,
    family: Family,
    ms: &[u32],
    levels: &[u32],
    offsets: &[u64],
) -> Result<Vec<(u32, Vec<GateResult>, bool)>> {
    ms.par_iter()
        .map(|&m| {
            let f = CodeFamily::new(family, m)?;
            let (rows, failed) = gate_sequence(store, &f, levels, offsets)?;
            Ok((m, rows, failed))
        })
        .collect()
}

fn admissible_among(family: Family, t: u32, pool: &[u32]) -> Result<Vec<u32>> {
    let keep: Vec<Result<Option<u32>>> = pool
        .par_iter()
        .map(|&m| Ok(is_admissible(&CodeFamily::new(family, m)?, t)?.then_some(m)))
        .collect();
    keep.into_iter().filter_map(|r| r.transpose()).collect()
}

/// One stage of the pipeline: `lambda` filter on `pool`, then gates at
/// every level in `(s, top]` against `u = k` and `u = k + 4`.
pub fn run_stage(store: &GateStore, family: Family, t: u32, pool: &[u32]) -> Result<Stage> {
    let top = apply_strengthening(family, t);
    let candidates = admissible_among(family, t, pool)?;
    let levels: Vec<u32> = (family.am_strength() + 1..=top).collect();
    let gated = gate_all(store, family, &candidates, &levels, &[0, 4])?;
    let mut rows = Vec::new();
    let mut survivors = Vec::new();
    for (m, r, failed) in gated {
        rows.extend(r);
        if !failed {
            survivors.push(m);
        }
    }
    Ok(Stage {
        t,
        top,
        candidates,
        survivors,
        rows,
    })
}

/// Unchained scan over `[m_lo, m_hi]`: the admissible set plus the gates of
/// [`run_stage`].
pub fn scan(store: &GateStore, family: Family, t: u32, m_lo: u32, m_hi: u32) -> Result<Report> {
    let pool = admissible_scan(family, t, m_lo, m_hi)?;
    let stage = run_stage(store, family, t, &pool)?;
    let mut report = Report::new("scan");
    report.input("family", family);
    report.input("t", t);
    report.input("strength_assumed", stage.top);
    report.input("m_min", m_lo);
    report.input("m_max", m_hi);
    report
        .sets
        .push(SetListing::new("admissible", stage.candidates));
    report
        .sets
        .push(SetListing::new("survivors", stage.survivors.clone()));
    report.surviving_set = stage.survivors;
    report.rows = stage.rows;
    report.normalize();
    Ok(report)
}

pub fn run_theorem(id: TheoremId, store: &GateStore) -> Result<Report> {
    let mut report = match id {
        TheoremId::Lemma1 => lemma1()?,
        TheoremId::Thm1 => thm1(store)?,
        TheoremId::Thm2 => thm2(store)?,
        TheoremId::Thm3 => thm3(store)?,
        TheoremId::Thm4 => thm4(store)?,
        TheoremId::Thm5_1 => thm5(store, id, Family::Len24mPlus8, golden::THM5_1_STAGES)?,
        TheoremId::Thm5_2 => thm5(store, id, Family::Len24mPlus16, golden::THM5_2_STAGES)?,
    };
    report.normalize();
    Ok(report)
}

fn base_report(id: TheoremId, family: Family) -> Report {
    let mut r = Report::new(id.as_str());
    r.input("family", family);
    r.input("m_min", family.m_min().max(1));
    r.input("m_max", family.m_max());
    r
}

fn lemma1_set() -> Result<Vec<u32>> {
    admissible_scan(Family::Len24m, 6, 1, Family::Len24m.m_max())
}

fn quotient_checks(
    report: &mut Report,
    prefix: &str,
    rows: &[GateResult],
    published: &[(u32, &str)],
    t: u32,
    u_of: impl Fn(u32) -> u64,
) {
    for &(m, value) in published {
        let actual = rows
            .iter()
            .find(|r| r.m == m && r.t == t && r.u == u_of(m))
            .map(|r| fmt_ratio(&r.quotient))
            .unwrap_or_else(|| "not computed".into());
        report.checks.push(GoldenCheck::value(
            format!("{prefix} quotient m={m}"),
            value,
            actual,
        ));
    }
}

fn lemma1() -> Result<Report> {
    let mut r = base_report(TheoremId::Lemma1, Family::Len24m);
    r.input("t", 6);
    let m_set = lemma1_set()?;
    r.checks
        .push(GoldenCheck::set("M", golden::LEMMA1_M, &m_set));
    r.sets.push(SetListing::new("M", m_set.clone()));
    r.surviving_set = m_set;
    Ok(r)
}

struct Strength7 {
    m_set: Vec<u32>,
    thm2_rows: Vec<GateResult>,
    thm2_eliminated: Vec<u32>,
    remainder: Vec<u32>,
    thm3_rows: Vec<GateResult>,
    thm3_eliminated: Vec<u32>,
    survivors: Vec<u32>,
}

/// Strength-7 gates on `M`: block against block first, then the remainder
/// against a next-weight codeword.
fn strength7(store: &GateStore) -> Result<Strength7> {
    let family = Family::Len24m;
    let m_set = lemma1_set()?;
    let mut thm2_rows = Vec::new();
    let mut thm2_eliminated = Vec::new();
    let mut remainder = Vec::new();
    for (m, rows, failed) in gate_all(store, family, &m_set, &[7], &[0])? {
        thm2_rows.extend(rows);
        if failed {
            thm2_eliminated.push(m);
        } else {
            remainder.push(m);
        }
    }
    let mut thm3_rows = Vec::new();
    let mut thm3_eliminated = Vec::new();
    let mut survivors = Vec::new();
    for (m, rows, failed) in gate_all(store, family, &remainder, &[7], &[4])? {
        thm3_rows.extend(rows);
        if failed {
            thm3_eliminated.push(m);
        } else {
            survivors.push(m);
        }
    }
    Ok(Strength7 {
        m_set,
        thm2_rows,
        thm2_eliminated,
        remainder,
        thm3_rows,
        thm3_eliminated,
        survivors,
    })
}

fn thm2(store: &GateStore) -> Result<Report> {
    let s = strength7(store)?;
    let mut r = base_report(TheoremId::Thm2, Family::Len24m);
    r.input("t", 7);
    r.input("u", "4m+4");
    r.checks.push(GoldenCheck::set(
        "eliminated",
        golden::THM2_ELIMINATED,
        &s.thm2_eliminated,
    ));
    quotient_checks(
        &mut r,
        "thm2",
        &s.thm2_rows,
        golden::THM2_QUOTIENTS,
        7,
        |m| 4 * u64::from(m) + 4,
    );
    r.sets.push(SetListing::new("M", s.m_set));
    r.sets
        .push(SetListing::new("eliminated", s.thm2_eliminated));
    r.sets
        .push(SetListing::new("remainder", s.remainder.clone()));
    r.surviving_set = s.remainder;
    r.rows = s.thm2_rows;
    Ok(r)
}

fn thm3(store: &GateStore) -> Result<Report> {
    let s = strength7(store)?;
    let mut r = base_report(TheoremId::Thm3, Family::Len24m);
    r.input("t", 7);
    r.input("u", "4m+8");
    r.checks.push(GoldenCheck::set(
        "eliminated",
        golden::THM3_ELIMINATED,
        &s.thm3_eliminated,
    ));
    quotient_checks(
        &mut r,
        "thm3",
        &s.thm3_rows,
        golden::THM3_QUOTIENTS,
        7,
        |m| 4 * u64::from(m) + 8,
    );
    let mut with_codewords = Vec::new();
    for &m in &s.thm3_eliminated {
        if next_weight_count(24 * u64::from(m))?.is_positive() {
            with_codewords.push(m);
        }
    }
    r.checks.push(GoldenCheck::set(
        "eliminated with weight 4m+8 codewords",
        &s.thm3_eliminated,
        &with_codewords,
    ));
    r.sets.push(SetListing::new("remainder", s.remainder));
    r.sets
        .push(SetListing::new("eliminated", s.thm3_eliminated));
    r.sets
        .push(SetListing::new("survivors", s.survivors.clone()));
    r.surviving_set = s.survivors;
    r.rows = s.thm3_rows;
    Ok(r)
}

fn thm1(store: &GateStore) -> Result<Report> {
    let s = strength7(store)?;
    let mut r = base_report(TheoremId::Thm1, Family::Len24m);
    r.input("t", 7);
    r.checks.push(GoldenCheck::set(
        "survivors",
        golden::THM1_SURVIVORS,
        &s.survivors,
    ));

    // |M| - |E2| - |E3| = |S| as an identity of sets: E2, E3 disjoint inside
    // M and S exactly what is left.
    let disjoint = s
        .thm2_eliminated
        .iter()
        .all(|m| !s.thm3_eliminated.contains(m));
    let inside = s
        .thm2_eliminated
        .iter()
        .chain(&s.thm3_eliminated)
        .all(|m| s.m_set.contains(m));
    let left: Vec<u32> = s
        .m_set
        .iter()
        .filter(|m| !s.thm2_eliminated.contains(m) && !s.thm3_eliminated.contains(m))
        .copied()
        .collect();
    let identity = |a: usize, b: usize, c: usize, d: usize| format!("{a} - {b} - {c} = {d}");
    let expected = identity(
        golden::LEMMA1_M.len(),
        golden::THM2_ELIMINATED.len(),
        golden::THM3_ELIMINATED.len(),
        golden::THM1_SURVIVORS.len(),
    );
    let actual = if disjoint && inside && left == s.survivors {
        identity(
            s.m_set.len(),
            s.thm2_eliminated.len(),
            s.thm3_eliminated.len(),
            s.survivors.len(),
        )
    } else {
        "eliminated sets overlap or leave M".to_string()
    };
    r.checks
        .push(GoldenCheck::value("set difference", expected, actual));

    r.sets.push(SetListing::new("M", s.m_set));
    r.sets
        .push(SetListing::new("eliminated u=4m+4", s.thm2_eliminated));
    r.sets
        .push(SetListing::new("eliminated u=4m+8", s.thm3_eliminated));
    r.sets
        .push(SetListing::new("survivors", s.survivors.clone()));
    r.surviving_set = s.survivors;
    r.rows = s.thm2_rows;
    r.rows.extend(s.thm3_rows);
    Ok(r)
}

fn thm4(store: &GateStore) -> Result<Report> {
    let family = Family::Len24m;
    let s = strength7(store)?;
    let mut r = base_report(TheoremId::Thm4, family);
    r.input("t", 8);
    let candidates = admissible_scan(family, 8, 1, family.m_max())?;
    r.checks.push(GoldenCheck::set(
        "lambda_8 candidates",
        golden::LAMBDA8_CANDIDATES,
        &candidates,
    ));

    let earlier: Vec<u32> = candidates
        .iter()
        .filter(|m| !s.survivors.contains(m))
        .copied()
        .collect();
    let remaining: Vec<u32> = candidates
        .iter()
        .filter(|m| s.survivors.contains(m))
        .copied()
        .collect();
    r.rows.extend(
        s.thm2_rows
            .iter()
            .chain(&s.thm3_rows)
            .filter(|row| candidates.contains(&row.m))
            .cloned(),
    );

    let mut survivors = Vec::new();
    for (m, rows, failed) in gate_all(store, family, &remaining, &[8], &[0, 4])? {
        r.rows.extend(rows);
        if !failed {
            survivors.push(m);
        }
    }
    let m63 = CodeFamily::new(family, 63)?;
    let q63 = store.gate(&m63, 8, m63.k())?;
    r.checks.push(GoldenCheck::value(
        "m=63 t=8 u=4m+4 quotient",
        golden::THM4_M63_QUOTIENT,
        fmt_ratio(&q63.quotient),
    ));
    r.rows.push(q63);
    r.checks.push(GoldenCheck::set(
        "survivors",
        golden::THM4_SURVIVORS,
        &survivors,
    ));

    r.sets
        .push(SetListing::new("lambda_8 candidates", candidates));
    r.sets.push(SetListing::new("eliminated at t=7", earlier));
    r.sets.push(SetListing::new("gated at t=8", remaining));
    r.sets.push(SetListing::new("survivors", survivors.clone()));
    r.surviving_set = survivors;
    Ok(r)
}

/// Chained stages over the published strengths: each stage starts from the
/// previous stage's survivors.
pub fn run_stages(store: &GateStore, family: Family, ts: &[u32]) -> Result<Vec<Stage>> {
    let mut pool: Vec<u32> = (family.m_min().max(1)..=family.m_max()).collect();
    let mut stages = Vec::with_capacity(ts.len());
    for &t in ts {
        let stage = run_stage(store, family, t, &pool)?;
        pool = stage.survivors.clone();
        stages.push(stage);
    }
    Ok(stages)
}

fn thm5(
    store: &GateStore,
    id: TheoremId,
    family: Family,
    published: &[StageSet],
) -> Result<Report> {
    let ts: Vec<u32> = published.iter().map(|(t, _, _)| *t).collect();
    let stages = run_stages(store, family, &ts)?;
    let mut r = base_report(id, family);
    r.input(
        "strengths",
        ts.iter().map(u32::to_string).collect::<Vec<_>>().join(","),
    );
    for (stage, &(t, column, expected)) in stages.iter().zip(published) {
        let (label, actual) = match column {
            StageColumn::Candidates => ("candidates", &stage.candidates),
            StageColumn::Survivors => ("survivors", &stage.survivors),
        };
        r.checks
            .push(GoldenCheck::set(format!("t={t} {label}"), expected, actual));
    }
    for stage in &stages {
        r.sets.push(SetListing::new(
            format!("t={} candidates", stage.t),
            stage.candidates.clone(),
        ));
        r.sets.push(SetListing::new(
            format!("t={} survivors", stage.t),
            stage.survivors.clone(),
        ));
        r.rows.extend(stage.rows.iter().cloned());
    }
    r.surviving_set = stages
        .last()
        .map(|s| s.survivors.clone())
        .unwrap_or_default();
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn theorem_ids_round_trip() {
        for id in TheoremId::ALL {
            assert_eq!(id.as_str().parse::<TheoremId>().unwrap(), id);
        }
        assert!("thm6".parse::<TheoremId>().is_err());
    }

    #[test]
    fn gate_sequence_stops_at_first_failure() {
        let store = GateStore::in_memory();
        // m = 8 fails block against block at t = 7, so k + 4 is never tried.
        let f = CodeFamily::new(Family::Len24m, 8).unwrap();
        let (rows, failed) = gate_sequence(&store, &f, &[7], &[0, 4]).unwrap();
        assert!(failed);
        assert_eq!(rows.len(), 1);
        assert_eq!(rows[0].u, 36);
        // m = 5 passes at u = k and fails at u = k + 4.
        let f = CodeFamily::new(Family::Len24m, 5).unwrap();
        let (rows, failed) = gate_sequence(&store, &f, &[7], &[0, 4]).unwrap();
        assert!(failed);
        assert_eq!(rows.iter().map(|r| r.u).collect::<Vec<_>>(), vec![24, 28]);
    }

    #[test]
    fn next_weight_reference_skipped_when_out_of_range() {
        let store = GateStore::in_memory();
        // length 8: n - k = 4, so u = k + 4 is out of range
        let f = CodeFamily::new(Family::Len24mPlus8, 0).unwrap();
        let (rows, _) = gate_sequence(&store, &f, &[3], &[0, 4]).unwrap();
        assert_eq!(rows.len(), 1);
        assert!(rows.iter().all(|r| r.u == 4));
    }
}
