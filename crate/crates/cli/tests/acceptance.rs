//! Acceptance criteria, one PASS/FAIL line each.
//!
//! Two criteria are known to disagree with published values (see README).
//! The run fails if any other criterion fails, or if a known
//! disagreement quietly starts passing.

use std::process::{Command, ExitCode};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sdcheck_core::design::{extend_lambda, CodeFamily, DesignParams, Family};
use sdcheck_core::enumerator::{extremal_weight_enumerator, min_weight_count};
use sdcheck_core::exact::{
    binom_u, falling_int, fmt_ratio, int, is_nonneg_integer, rat, stirling2, stirling2_explicit,
    ExactInt, ExactRat,
};
use sdcheck_core::gate::{
    integrality_gate, lemma2_coefficients, lemma2_eval, residual_coefficient,
    solve_intersection_numbers, MomentVector, OffsetSet,
};
use sdcheck_core::golden;
use sdcheck_core::store::GateStore;
use sdcheck_core::theorem::{run_theorem, TheoremId};

const KNOWN_RED: &[u32] = &[5, 7];

type Criterion = (u32, &'static str, fn() -> Outcome);

struct Outcome {
    pass: bool,
    detail: String,
}

fn ok(detail: impl Into<String>) -> Outcome {
    Outcome {
        pass: true,
        detail: detail.into(),
    }
}

fn fail(detail: impl Into<String>) -> Outcome {
    Outcome {
        pass: false,
        detail: detail.into(),
    }
}

fn check(pass: bool, good: impl Into<String>, bad: impl Into<String>) -> Outcome {
    if pass {
        ok(good)
    } else {
        fail(bad)
    }
}

fn family_gate(m: u32, t: u32, du: u64) -> String {
    let f = CodeFamily::new(Family::Len24m, m).unwrap();
    let r = integrality_gate(&f, t, f.k() + du).unwrap();
    fmt_ratio(&r.quotient)
}

fn scan_lemma1() -> Outcome {
    let store = tempfile::tempdir().unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_sdcheck"))
        .env("SDCHECK_STORE_DIR", store.path())
        .args([
            "scan",
            "--family",
            "24m",
            "--t",
            "6",
            "--format",
            "json",
            "--no-timestamp",
        ])
        .output()
        .unwrap();
    if !out.status.success() {
        return fail(format!("scan exited with {:?}", out.status.code()));
    }
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let admissible: Vec<u32> = v["sets"]
        .as_array()
        .unwrap()
        .iter()
        .find(|s| s["name"] == "admissible")
        .unwrap()["members"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_u64().unwrap() as u32)
        .collect();
    check(
        admissible == golden::LEMMA1_M,
        "39-element set",
        format!("got {admissible:?}"),
    )
}

fn lambda8_filter() -> Outcome {
    let got: Vec<u32> = golden::LEMMA1_M
        .iter()
        .copied()
        .filter(|&m| {
            let f = CodeFamily::new(Family::Len24m, m).unwrap();
            is_nonneg_integer(&extend_lambda(&f, 8).unwrap())
        })
        .collect();
    check(
        got == golden::LAMBDA8_CANDIDATES,
        format!("{got:?}"),
        format!("got {got:?}"),
    )
}

fn quotient_table(published: &[(u32, &str)], du: u64) -> Outcome {
    let bad: Vec<u32> = published
        .iter()
        .filter(|(m, want)| family_gate(*m, 7, du) != *want)
        .map(|(m, _)| *m)
        .collect();
    check(
        bad.is_empty(),
        format!("{} quotients exact", published.len()),
        format!("mismatch at m = {bad:?}"),
    )
}

fn m63_value() -> Outcome {
    let got = family_gate(63, 8, 0);
    check(
        got == golden::THM4_M63_QUOTIENT,
        "published value",
        format!("computed {got}, published {}", golden::THM4_M63_QUOTIENT),
    )
}

fn thm1_set() -> Outcome {
    let report = run_theorem(TheoremId::Thm1, &GateStore::in_memory()).unwrap();
    let identity = report
        .check("set difference")
        .map(|c| c.pass)
        .unwrap_or(false);
    check(
        report.surviving_set == golden::THM1_SURVIVORS && identity,
        "18-element set, 39 - 12 - 9 = 18",
        format!("surviving {:?}, identity {identity}", report.surviving_set),
    )
}

fn thm5_sets() -> Outcome {
    let store = GateStore::in_memory();
    let mut failures = Vec::new();
    let mut total = 0;
    for id in [TheoremId::Thm5_1, TheoremId::Thm5_2] {
        let report = run_theorem(id, &store).unwrap();
        total += report.checks.len();
        failures.extend(report.failed_checks().map(|c| format!("{id} {}", c.diff())));
    }
    check(
        failures.is_empty(),
        format!("{total} stage sets"),
        format!(
            "{} of {total} differ: {}",
            failures.len(),
            failures.join("; ")
        ),
    )
}

fn eq4_coefficients() -> Outcome {
    let got = lemma2_coefficients(&OffsetSet::standard(7));
    let want: Vec<ExactInt> = [0, 10395, -10395, 4725, -1260, 210, -21, 1]
        .iter()
        .map(|&c| int(c))
        .collect();
    check(
        got == want,
        "(0, 10395, -10395, 4725, -1260, 210, -21, 1)",
        format!("{got:?}"),
    )
}

fn residuals() -> Outcome {
    let mut pass = residual_coefficient(16, 7).unwrap() == int(8)
        && residual_coefficient(18, 7).unwrap() == int(36);
    for m in [8u64, 63] {
        pass &= residual_coefficient(4 * m + 4, 7).unwrap() == binom_u(2 * m + 2, 7);
    }
    check(pass, "8, 36, C(2m+2, 7)", "residual mismatch")
}

fn lemma2_oracle(rng: &mut ChaCha8Rng) -> bool {
    (0..200).all(|_| {
        let half_k = rng.gen_range(1..=20i64);
        let levels: Vec<(i64, i64)> = (0..=half_k)
            .map(|j| (2 * j, rng.gen_range(0..=60)))
            .collect();
        let l = rng.gen_range(1..=9usize);
        let mut offsets: Vec<i64> = Vec::new();
        while offsets.len() < l {
            let x = 2 * rng.gen_range(0..=30i64);
            if !offsets.contains(&x) {
                offsets.push(x);
            }
        }
        offsets.sort_unstable();
        let entries = (0..=l as u64)
            .map(|s| {
                levels
                    .iter()
                    .map(|&(i, n)| falling_int(&ExactInt::from(i), s) * ExactInt::from(n))
                    .sum()
            })
            .collect();
        let brute: ExactInt = levels
            .iter()
            .map(|&(i, n)| {
                offsets
                    .iter()
                    .fold(ExactInt::from(n), |acc, &x| acc * ExactInt::from(i - x))
            })
            .sum();
        let set = OffsetSet::new(offsets).unwrap();
        lemma2_eval(&set, &MomentVector { u: 0, entries }).unwrap() == brute
    })
}

fn property_suite() -> Outcome {
    let mut failed = Vec::new();
    if !lemma2_oracle(&mut ChaCha8Rng::seed_from_u64(20240601)) {
        failed.push("moment expansion oracle");
    }
    if !(0..=20).all(|n| (0..=20).all(|k| stirling2(n, k) == stirling2_explicit(n, k))) {
        failed.push("stirling");
    }
    let lambda5 = (1..=153u64).all(|m| {
        ExactRat::new(
            min_weight_count(24 * m).unwrap() * binom_u(4 * m + 4, 5),
            binom_u(24 * m, 5),
        ) == ExactRat::from_integer(binom_u(5 * m - 2, m - 1))
    });
    if !lambda5 {
        failed.push("gleason lambda_5");
    }
    let golay = DesignParams::new(24, 8, 5, rat(1), true);
    let sol = solve_intersection_numbers(&golay, 8, &[0, 2, 4, 6], &[(8, int(1))]).unwrap();
    let want = [(0, 30), (2, 448), (4, 280), (6, 0)];
    let golay_ok = sol.is_feasible()
        && sol.values.len() == want.len()
        && sol
            .values
            .iter()
            .zip(want)
            .all(|((i, v), (j, w))| *i == j && *v == rat(w));
    if !golay_ok {
        failed.push("golay intersection numbers");
    }
    let invariants = (8..=48u64).step_by(8).all(|n| {
        let we = extremal_weight_enumerator(n).unwrap();
        we.count(0) == int(1)
            && we.count(n) == int(1)
            && (0..=n)
                .all(|j| (j % 4 == 0 || we.count(j) == int(0)) && we.count(j) == we.count(n - j))
            && we.total() == ExactInt::from(1u8) << (n / 2) as usize
    });
    if !invariants {
        failed.push("enumerator invariants");
    }
    check(
        failed.is_empty(),
        "all properties hold",
        format!("failed: {failed:?}"),
    )
}

fn main() -> ExitCode {
    let criteria: Vec<Criterion> = vec![
        (1, "scan 24m t=6 gives M", scan_lemma1),
        (2, "lambda_8 filter within M", lambda8_filter),
        (3, "u=k t=7 quotients", || {
            quotient_table(golden::THM2_QUOTIENTS, 0)
        }),
        (4, "u=k+4 t=7 quotients", || {
            quotient_table(golden::THM3_QUOTIENTS, 4)
        }),
        (5, "m=63 t=8 u=k quotient", m63_value),
        (6, "24m survivors and set identity", thm1_set),
        (7, "24m+8 and 24m+16 stage sets", thm5_sets),
        (8, "offset [0..12] moment coefficients", eq4_coefficients),
        (9, "residual coefficients", residuals),
        (10, "property suite", property_suite),
    ];
    let mut unexpected = Vec::new();
    for (id, name, run) in criteria {
        let outcome = run();
        let verdict = if outcome.pass { "PASS" } else { "FAIL" };
        let known = KNOWN_RED.contains(&id);
        let note = if known && !outcome.pass {
            " (known disagreement)"
        } else {
            ""
        };
        println!(
            "criterion {id:>2} {verdict}: {name}: {}{note}",
            outcome.detail
        );
        if outcome.pass == known {
            unexpected.push(id);
        }
    }
    if unexpected.is_empty() {
        ExitCode::SUCCESS
    } else {
        println!("unexpected outcome for criteria {unexpected:?}");
        ExitCode::FAILURE
    }
}
