//! The acceptance checks, runnable from tests and from `verify-all`.
//!
//! Every check compares two independently computed routes with exact
//! integer equality. `max_m` caps the upper end of each degree range so a
//! quick run can skip the expensive parameters.

use std::time::{Duration, Instant};

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::classnum::{class_number_row, kronecker_class_number};
use crate::curves::{bch_census_prediction, bch_family_census, melas_census_prediction, melas_family_census};
use crate::cyclic::{
    build_named_code, delsarte_check, dual_trace_distribution, enumerate_weight_distribution,
    nullspace, row_reduce, span_weight_distribution, Codeword, Family,
};
use crate::distributions::{
    bch_dual_distribution, hamming_distribution, melas_distribution, melas_dual_distribution,
};
use crate::enumerator::macwilliams_transform;
use crate::error::Result;
use crate::exec::Execution;
use crate::gf2m::make_field;
use crate::hecke::hecke_trace_table;

/// Printed `(−d, H(d))` pairs for `3 <= −d <= 100`.
pub const CLASS_NUMBER_TABLE: [(i64, u64); 50] = [
    (3, 1), (4, 1), (7, 1), (8, 1), (11, 1), (12, 2), (15, 2), (16, 2), (19, 1), (20, 2),
    (23, 3), (24, 2), (27, 2), (28, 2), (31, 3), (32, 3), (35, 2), (36, 3), (39, 4), (40, 2),
    (43, 1), (44, 4), (47, 5), (48, 4), (51, 2), (52, 2), (55, 4), (56, 4), (59, 3), (60, 4),
    (63, 5), (64, 4), (67, 1), (68, 4), (71, 7), (72, 3), (75, 3), (76, 4), (79, 5), (80, 6),
    (83, 3), (84, 4), (87, 6), (88, 2), (91, 2), (92, 6), (95, 8), (96, 6), (99, 3), (100, 3),
];

/// Work limit for the largest exhaustive enumeration (the `m = 5` Hamming code).
pub const RAISED_WORK_LIMIT: u64 = 1 << 26;

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub id: u32,
    pub name: &'static str,
    pub parameters: String,
    pub expected_source: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed_ms: u128,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub checks: Vec<Check>,
    pub overall: bool,
}

impl Check {
    pub fn line(&self) -> String {
        format!(
            "[{}] {:>2} {:<26} {} ({} ms){}",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.parameters,
            self.elapsed_ms,
            if self.detail.is_empty() { String::new() } else { format!(": {}", self.detail) }
        )
    }
}

/// Accumulates mismatches for one check.
struct Tally {
    failures: Vec<String>,
}

impl Tally {
    fn new() -> Self {
        Self { failures: Vec::new() }
    }

    fn expect(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.failures.push(what());
        }
    }

    fn expect_ok<T>(&mut self, r: Result<T>, what: &str) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.failures.push(format!("{what}: {e}"));
                None
            }
        }
    }
}

fn range(lo: u32, hi: u32, max_m: Option<u32>) -> std::ops::RangeInclusive<u32> {
    lo..=max_m.map_or(hi, |c| hi.min(c))
}

fn describe(r: &std::ops::RangeInclusive<u32>) -> String {
    if r.is_empty() {
        "m: none in range".into()
    } else {
        format!("m={}..={}", r.start(), r.end())
    }
}

fn finish(
    id: u32,
    name: &'static str,
    parameters: String,
    expected_source: &'static str,
    start: Instant,
    budget: Option<Duration>,
    mut tally: Tally,
) -> Check {
    let elapsed = start.elapsed();
    if let Some(b) = budget {
        tally.expect(elapsed <= b, || format!("runtime {elapsed:?} over budget {b:?}"));
    }
    Check {
        id,
        name,
        parameters,
        expected_source,
        passed: tally.failures.is_empty(),
        detail: tally.failures.join("; "),
        elapsed_ms: elapsed.as_millis(),
    }
}

fn pow2(e: u64) -> BigUint {
    BigUint::from(1u32) << e
}

/// 1: all printed class numbers reproduce, within one second.
pub fn check_class_number_table() -> Check {
    let start = Instant::now();
    let mut t = Tally::new();
    for (neg_d, h) in CLASS_NUMBER_TABLE {
        let got = kronecker_class_number(-neg_d);
        t.expect(got == Ok(h), || format!("H(-{neg_d}) = {got:?}, expected {h}"));
    }
    finish(1, "class-number-table", "50 discriminants".into(), "printed class-number table", start, Some(Duration::from_secs(1)), t)
}

/// 2: Hamming closed form equals exhaustive enumeration; `A_3 = (q−1)(q−2)/6`.
pub fn check_hamming(max_m: Option<u32>) -> Check {
    let start = Instant::now();
    let mut t = Tally::new();
    let brute = range(3, 5, max_m);
    for m in brute.clone() {
        let code = build_named_code(Family::Hamming, m).expect("valid degree");
        let closed = t.expect_ok(hamming_distribution(m), "closed form");
        let enumerated = t.expect_ok(enumerate_weight_distribution(&code, RAISED_WORK_LIMIT), "enumeration");
        if let (Some(a), Some(b)) = (closed, enumerated) {
            t.expect(a == b, || format!("m={m}: closed form differs from enumeration"));
        }
    }
    let a3 = range(3, 10, max_m);
    for m in a3.clone() {
        let q = 1u64 << m;
        if let Some(h) = t.expect_ok(hamming_distribution(m), "closed form") {
            t.expect(h.count(3) == BigUint::from((q - 1) * (q - 2) / 6), || format!("m={m}: A_3 = {}", h.count(3)));
        }
    }
    let params = format!("enumeration {}; A_3 {}", describe(&brute), describe(&a3));
    finish(2, "hamming-closed-form", params, "closed form vs exhaustive enumeration", start, Some(Duration::from_secs(120)), t)
}

/// 3: BCH dual table equals trace-word enumeration, with total `q²`.
pub fn check_bch_dual(max_m: Option<u32>) -> Check {
    let start = Instant::now();
    let mut t = Tally::new();
    let r = range(3, 8, max_m);
    for m in r.clone() {
        let q = 1u64 << m;
        let table = t.expect_ok(bch_dual_distribution(m), "table");
        let traced = t.expect_ok(dual_trace_distribution(Family::Bch2, m), "trace enumeration");
        if let (Some(a), Some(b)) = (table, traced) {
            t.expect(a.total() == BigUint::from(q * q), || format!("m={m}: total {}", a.total()));
            t.expect(a == b, || format!("m={m}: table differs from trace enumeration"));
        }
    }
    finish(3, "bch-dual-table", describe(&r), "supersingular census table vs trace enumeration", start, None, t)
}

/// 4: BCH primal by transform equals exhaustive enumeration; minimum distance 5.
pub fn check_bch_primal(max_m: Option<u32>) -> Check {
    let start = Instant::now();
    let mut t = Tally::new();
    let r = range(4, 5, max_m);
    for m in r.clone() {
        let q = 1u64 << m;
        let code = build_named_code(Family::Bch2, m).expect("valid degree");
        let transformed = bch_dual_distribution(m).and_then(|d| macwilliams_transform(&d, &BigUint::from(q * q)));
        let transformed = t.expect_ok(transformed, "transform");
        let enumerated = t.expect_ok(enumerate_weight_distribution(&code, RAISED_WORK_LIMIT), "enumeration");
        if let (Some(a), Some(b)) = (transformed, enumerated) {
            t.expect(a == b, || format!("m={m}: transform differs from enumeration"));
            t.expect(b.min_distance() == Some(5), || format!("m={m}: minimum distance {:?}", b.min_distance()));
        }
    }
    finish(4, "bch-primal-transform", describe(&r), "MacWilliams transform vs exhaustive enumeration", start, None, t)
}

/// 5: Melas dual from class numbers equals trace-word enumeration.
pub fn check_melas_dual(max_m: Option<u32>) -> Check {
    let start = Instant::now();
    let mut t = Tally::new();
    let r = range(4, 8, max_m);
    for m in r.clone() {
        let a = t.expect_ok(melas_dual_distribution(m), "class-number formula");
        let b = t.expect_ok(dual_trace_distribution(Family::Melas, m), "trace enumeration");
        if let (Some(a), Some(b)) = (a, b) {
            t.expect(a == b, || format!("m={m}: class-number formula differs from trace enumeration"));
        }
    }
    finish(5, "melas-dual-class-numbers", describe(&r), "class-number formula vs trace enumeration", start, None, t)
}

/// 6: Melas distribution from Hecke traces equals enumeration and the transform route.
pub fn check_melas_hecke(max_m: Option<u32>) -> Check {
    let start = Instant::now();
    let mut t = Tally::new();
    let brute = range(4, 5, max_m);
    let transform = range(4, 10, max_m);
    for m in transform.clone() {
        let q = 1u64 << m;
        let Some(formula) = t.expect_ok(melas_distribution(m), &format!("m={m} Hecke formula")) else {
            continue;
        };
        t.expect(formula.total() == pow2(q - 1 - 2 * m as u64), || format!("m={m}: total {}", formula.total()));
        let via_dual = melas_dual_distribution(m).and_then(|d| macwilliams_transform(&d, &BigUint::from(q * q)));
        if let Some(d) = t.expect_ok(via_dual, "transform") {
            t.expect(d == formula, || format!("m={m}: Hecke formula differs from transform"));
        }
        if brute.contains(&m) {
            let code = build_named_code(Family::Melas, m).expect("valid degree");
            if let Some(e) = t.expect_ok(enumerate_weight_distribution(&code, RAISED_WORK_LIMIT), "enumeration") {
                t.expect(e == formula, || format!("m={m}: Hecke formula differs from enumeration"));
            }
        }
    }
    let params = format!("enumeration {}; transform {}", describe(&brute), describe(&transform));
    finish(6, "melas-hecke-formula", params, "Hecke-trace formula vs enumeration and transform", start, None, t)
}

/// 7: `Σ H = q − 1`, `Σ tH = −1`, `τ_3 = τ_4 = 0`, all within five seconds.
pub fn check_class_number_identities(max_m: Option<u32>) -> Check {
    let start = Instant::now();
    let mut t = Tally::new();
    let r = range(2, 16, max_m);
    for m in r.clone() {
        let q = 1u64 << m;
        if let Some(row) = t.expect_ok(class_number_row(q), "row") {
            t.expect(row.sum_h() == q as i64 - 1, || format!("m={m}: ΣH = {}", row.sum_h()));
            t.expect(row.sum_t_h() == -1, || format!("m={m}: ΣtH = {}", row.sum_t_h()));
        }
        if let Some(tab) = t.expect_ok(hecke_trace_table(m, 4), "traces") {
            let zero = num_bigint::BigInt::from(0);
            t.expect(tab.get(3) == Some(&zero) && tab.get(4) == Some(&zero), || {
                format!("m={m}: tau_3 = {:?}, tau_4 = {:?}", tab.get(3), tab.get(4))
            });
        }
    }
    finish(7, "class-number-identities", describe(&r), "trace formula at weights 2, 3, 4", start, Some(Duration::from_secs(5)), t)
}

/// 8: curve censuses match the supersingular-class and class-number predictions.
pub fn check_censuses(max_m: Option<u32>) -> Check {
    let start = Instant::now();
    let mut t = Tally::new();
    let bch = range(3, 6, max_m);
    for m in bch.clone() {
        let q = 1u64 << m;
        let ctx = make_field(m).expect("valid degree");
        let census = bch_family_census(&ctx);
        let total: u64 = census.values().sum();
        t.expect(total == q * (q - 1), || format!("bch m={m}: total {total}"));
        if let Some(pred) = t.expect_ok(bch_census_prediction(m), "prediction") {
            t.expect(pred == census, || format!("bch m={m}: census {census:?} != {pred:?}"));
        }
    }
    let melas = range(4, 10, max_m);
    for m in melas.clone() {
        let ctx = make_field(m).expect("valid degree");
        let census = melas_family_census(&ctx);
        if let Some(pred) = t.expect_ok(melas_census_prediction(m), "prediction") {
            t.expect(pred == census, || format!("melas m={m}: census {census:?} != {pred:?}"));
        }
    }
    let params = format!("bch2 {}; melas {}", describe(&bch), describe(&melas));
    finish(8, "curve-censuses", params, "point-count census vs class predictions", start, None, t)
}

/// 9: nullspace duals equal trace-representation codes as sets.
pub fn check_delsarte(max_m: Option<u32>) -> Check {
    let start = Instant::now();
    let mut t = Tally::new();
    let r = range(3, 4, max_m);
    for m in r.clone() {
        for family in [Family::Hamming, Family::Bch2, Family::Melas] {
            if let Some(rep) = t.expect_ok(delsarte_check(family, m), "delsarte") {
                t.expect(rep.equal, || format!("{family} m={m}: {rep:?}"));
            }
        }
    }
    finish(9, "delsarte-duality", describe(&r), "trace code vs nullspace dual", start, None, t)
}

/// 10: MacWilliams is an involution on random linear codes with `n <= 20`,
/// and its image equals the enumerated nullspace dual.
pub fn check_macwilliams_involution(samples: usize, seed: u64) -> Check {
    let start = Instant::now();
    let mut t = Tally::new();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for s in 0..samples {
        let n = rng.gen_range(1..=20usize);
        let rows: Vec<Codeword> = (0..rng.gen_range(1..=n))
            .map(|_| Codeword::from_bits(n, (0..n).map(|_| rng.gen_bool(0.5))))
            .collect();
        let (basis, _) = row_reduce(&rows);
        let k = basis.len();
        let limit = 1 << 20;
        let w = span_weight_distribution(&basis, n, limit, Execution::default()).expect("n <= 20");
        let dual = nullspace(&basis, n);
        let wd = span_weight_distribution(&dual, n, limit, Execution::default()).expect("n <= 20");
        let Some(once) = t.expect_ok(macwilliams_transform(&w, &pow2(k as u64)), "transform") else {
            continue;
        };
        t.expect(once == wd, || format!("sample {s}: transform differs from enumerated dual"));
        if let Some(twice) = t.expect_ok(macwilliams_transform(&once, &pow2((n - k) as u64)), "transform") {
            t.expect(twice == w, || format!("sample {s} (n={n}, k={k}): not an involution"));
        }
    }
    finish(
        10,
        "macwilliams-involution",
        format!("{samples} random codes, n <= 20, seed {seed}"),
        "double transform vs original",
        start,
        None,
        t,
    )
}

pub const INVOLUTION_SAMPLES: usize = 100;
pub const INVOLUTION_SEED: u64 = 0x5eed;

/// Runs one criterion by number (1..=10).
pub fn run_check(id: u32, max_m: Option<u32>) -> Option<Check> {
    Some(match id {
        1 => check_class_number_table(),
        2 => check_hamming(max_m),
        3 => check_bch_dual(max_m),
        4 => check_bch_primal(max_m),
        5 => check_melas_dual(max_m),
        6 => check_melas_hecke(max_m),
        7 => check_class_number_identities(max_m),
        8 => check_censuses(max_m),
        9 => check_delsarte(max_m),
        10 => check_macwilliams_involution(INVOLUTION_SAMPLES, INVOLUTION_SEED),
        _ => return None,
    })
}

pub fn verify_all(max_m: Option<u32>) -> VerificationReport {
    let checks: Vec<Check> = (1..=10).filter_map(|id| run_check(id, max_m)).collect();
    let overall = checks.iter().all(|c| c.passed);
    VerificationReport { checks, overall }
}
