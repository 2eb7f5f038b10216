//! Acceptance criteria 1 to 10. Each test prints one `PASS`/`FAIL` line with
//! the bounds it swept, then asserts.
//!
//! Run with `cargo test -p ribbon-core --test acceptance -- --nocapture`.

use std::time::Instant;

use ribbon_core::domino::cancellation_sums;
use ribbon_core::functions::{ribbon_function, strip_series};
use ribbon_core::polynomials::{alternant, schur_expand, LaurentQ, SchurExpansion, SymPoly};
use ribbon_core::tableaux::spin_inversion_constant;
use ribbon_core::verify::{
    bad_guy_suite, bender_knuth_suite, cancellation_suite, column_pair_suite, nested_strips_suite,
    path_reversal_suite, qlr_suite, quotient_product_suite, reverse_complement_suite, spin_inversion_suite,
    symmetry_suite, word_identity_suite, RunReport,
};
use ribbon_core::{part, LatticePath, SkewShape};

// Sweep bounds. Skew sizes alone do not bound the shape family, so every
// sweep also caps the outer partition.
const C1_NS: [usize; 2] = [2, 3];
const C1_MAX_OUTER: usize = 12;
const C1_MAX_RIBBONS: usize = 4;
const C2_NS: [usize; 3] = [2, 3, 4];
const C2_MAX_OUTER: usize = 12;
const C2_MAX_SKEW: usize = 10;
const C2_VARS: usize = 3;
const C5_NS: [usize; 2] = [2, 3];
const C5_MAX_LEN: usize = 10;
const C6_NS: [usize; 2] = [2, 3];
const C6_MAX_OUTER: usize = 12;
const C7_NS: [usize; 2] = [2, 3];
const C7_MAX_OUTER: usize = 10;
const C7_MAX_LABEL: usize = 3;
const C8_MAX_M: usize = 9;
const C8_MAX_M_REVERSAL: usize = 12;
const C9_MAX_OUTER_EMPTY_NU: usize = 10;
const C9_MAX_OUTER: usize = 8;
const C9_MAX_NU: usize = 3;
const C10_MAX_OUTER: usize = 8;
const C10_MAX_NU: usize = 2;
const C10_EXTRA_LABELS: usize = 2;
const TIME_BUDGET_SECS: u64 = 120;

fn report(id: u32, name: &str, ok: bool, detail: &str) {
    println!("criterion {id:>2} {name}: {} ({detail})", if ok { "PASS" } else { "FAIL" });
}

fn sweep(runs: Vec<RunReport>) -> (bool, usize, Vec<serde_json::Value>) {
    let cases = runs.iter().map(|r| r.cases_run).sum();
    let failures: Vec<_> = runs.iter().flat_map(|r| r.failures.iter().take(3).cloned()).collect();
    (runs.iter().all(RunReport::passed), cases, failures)
}

fn q(c: i64, d: i64) -> LaurentQ {
    LaurentQ::monomial(c, d)
}

#[test]
fn criterion_01_spin_inversion() {
    let start = Instant::now();
    let (swept, cases, failures) =
        sweep(C1_NS.iter().map(|&n| spin_inversion_suite(C1_MAX_OUTER, C1_MAX_RIBBONS, n)).collect());
    let pinned = spin_inversion_constant(&SkewShape::straight(part![2, 2]), 2).ok();
    let secs = start.elapsed().as_secs();
    let ok = swept && pinned == Some((2, 2)) && secs <= TIME_BUDGET_SECS;
    report(
        1,
        "spin-inversion",
        ok,
        &format!(
            "n in {C1_NS:?}, |outer| <= {C1_MAX_OUTER}, <= {C1_MAX_RIBBONS} ribbons, c = 2, {cases} shapes, \
             (e, c) for 2,2 at n=2 = {pinned:?}, {secs}s"
        ),
    );
    assert!(ok, "failures: {failures:?}");
}

#[test]
fn criterion_02_symmetry() {
    let start = Instant::now();
    let (swept, cases, failures) =
        sweep(C2_NS.iter().map(|&n| symmetry_suite(C2_MAX_OUTER, C2_MAX_SKEW, n, C2_VARS)).collect());
    let secs = start.elapsed().as_secs();
    let ok = swept && secs <= TIME_BUDGET_SECS;
    report(
        2,
        "symmetry",
        ok,
        &format!(
            "n in {C2_NS:?}, straight |outer| <= {C2_MAX_OUTER}, skew size <= {C2_MAX_SKEW}, m = {C2_VARS}, \
             {cases} shapes, exact, {secs}s"
        ),
    );
    assert!(ok, "failures: {failures:?}");
}

#[test]
fn criterion_03_quotient_product() {
    let start = Instant::now();
    let (swept, cases, failures) =
        sweep(C2_NS.iter().map(|&n| quotient_product_suite(C2_MAX_OUTER, C2_MAX_SKEW, n, C2_VARS)).collect());
    let secs = start.elapsed().as_secs();
    let ok = swept && secs <= TIME_BUDGET_SECS;
    report(3, "q=1 product", ok, &format!("same shapes as criterion 2, {cases} shapes, exact, {secs}s"));
    assert!(ok, "failures: {failures:?}");
}

#[test]
fn criterion_04_pinned_polynomial() {
    let g = ribbon_function(&SkewShape::straight(part![2, 2]), 2, 2);
    let expected = SymPoly::from_terms(
        2,
        [(vec![2, 0], q(1, 0)), (vec![0, 2], q(1, 0)), (vec![1, 1], LaurentQ::from_ints(0, &[1, 0, 1]))],
    );
    let expansion = schur_expand(&g);
    let expected_schur: SchurExpansion = [(part![2], q(1, 0)), (part![1, 1], q(1, 2))].into_iter().collect();
    let poly_ok = g == expected;
    let schur_ok = expansion.as_ref().is_ok_and(|e| *e == expected_schur);
    let ok = poly_ok && schur_ok;
    let shown = match &expansion {
        Ok(e) => e.iter().map(|(l, c)| format!("({l}): {c}")).collect::<Vec<_>>().join(", "),
        Err(e) => e.to_string(),
    };
    report(
        4,
        "pinned G_(2,2), n=2",
        ok,
        &format!(
            "expected x1^2 + x2^2 + (1 + q^2) x1 x2 = s_2 + q^2 s_11, computed schur {{{shown}}}, \
             polynomial {}, expansion {}",
            if poly_ok { "matches" } else { "differs" },
            if schur_ok { "matches" } else { "differs" },
        ),
    );
    assert!(ok, "computed {g:?}");
}

#[test]
fn criterion_05_path_reversal() {
    let start = Instant::now();
    let (swept, cases, failures) = sweep(C5_NS.iter().map(|&n| path_reversal_suite(C5_MAX_LEN, n)).collect());
    let secs = start.elapsed().as_secs();
    let series = strip_series(&"00".parse::<LatticePath>().unwrap(), 2);
    // 1 + (1 + q) X + X^2 as (ribbons, spin) -> count.
    let expected = [((0, 0), 1), ((1, 0), 1), ((1, 1), 1), ((2, 0), 1)];
    let pinned_ok = series.total() == 4 && expected.iter().all(|&((k, s), c)| series.get(k, s) == c);
    let ok = swept && pinned_ok && secs <= TIME_BUDGET_SECS;
    let shown: Vec<String> = series.terms.iter().map(|((k, s), c)| format!("{c} q^{s} X^{k}")).collect();
    report(
        5,
        "path reversal",
        ok,
        &format!(
            "n in {C5_NS:?}, length <= {C5_MAX_LEN}, {cases} words, sweep {}, \
             pinned R(00, 2) expected 1 + (1+q)X + X^2, computed {}, {secs}s",
            if swept { "clean" } else { "has failures" },
            shown.join(" + "),
        ),
    );
    assert!(ok, "failures: {failures:?}");
}

#[test]
fn criterion_06_nested_strips() {
    let start = Instant::now();
    let (swept, cases, failures) = sweep(C6_NS.iter().map(|&n| nested_strips_suite(C6_MAX_OUTER, n)).collect());
    let secs = start.elapsed().as_secs();
    let ok = swept && cases > 0 && secs <= TIME_BUDGET_SECS;
    report(6, "nested strips", ok, &format!("n in {C6_NS:?}, |outer| <= {C6_MAX_OUTER}, {cases} triples, {secs}s"));
    assert!(ok, "failures: {failures:?}");
}

#[test]
fn criterion_07_column_pair() {
    let start = Instant::now();
    let (swept, cases, failures) =
        sweep(C7_NS.iter().map(|&n| column_pair_suite(C7_MAX_OUTER, n, C7_MAX_LABEL)).collect());
    let secs = start.elapsed().as_secs();
    let ok = swept && secs <= TIME_BUDGET_SECS;
    report(
        7,
        "column pair",
        ok,
        &format!("n in {C7_NS:?}, |outer| <= {C7_MAX_OUTER}, labels <= {C7_MAX_LABEL}, {cases} shapes, {secs}s"),
    );
    assert!(ok, "failures: {failures:?}");
}

#[test]
fn criterion_08_word_identity() {
    let start = Instant::now();
    let mut runs: Vec<RunReport> = (1..=C8_MAX_M).map(|n| word_identity_suite(C8_MAX_M, n)).collect();
    runs.extend((1..=C8_MAX_M_REVERSAL).map(|n| reverse_complement_suite(C8_MAX_M_REVERSAL, n)));
    let (swept, cases, failures) = sweep(runs);
    let secs = start.elapsed().as_secs();
    let ok = swept && secs <= TIME_BUDGET_SECS;
    report(
        8,
        "word identity",
        ok,
        &format!(
            "identity for n <= m <= {C8_MAX_M} and every form, reverse-complement for m <= {C8_MAX_M_REVERSAL}, \
             {cases} cases, {secs}s"
        ),
    );
    assert!(ok, "failures: {failures:?}");
}

#[test]
fn criterion_09_qlr() {
    let start = Instant::now();
    let (swept, cases, failures) = sweep(vec![qlr_suite(C9_MAX_OUTER_EMPTY_NU, C9_MAX_OUTER, C9_MAX_NU)]);
    let secs = start.elapsed().as_secs();
    let ok = swept && secs <= TIME_BUDGET_SECS;
    report(
        9,
        "q-LR",
        ok,
        &format!(
            "empty nu with |mu| <= {C9_MAX_OUTER_EMPTY_NU}, |nu| <= {C9_MAX_NU} with |mu| <= {C9_MAX_OUTER}, \
             nonnegative, classical at q=1, {cases} cases, {secs}s"
        ),
    );
    assert!(ok, "failures: {failures:?}");
}

#[test]
fn criterion_10_involutions() {
    let start = Instant::now();
    let (swept, cases, failures) = sweep(vec![
        bender_knuth_suite(C10_MAX_OUTER, 2, C10_EXTRA_LABELS),
        bad_guy_suite(C10_MAX_OUTER, C10_MAX_NU),
        cancellation_suite(C10_MAX_OUTER, C10_MAX_NU),
    ]);
    let secs = start.elapsed().as_secs();
    let (all, yam) = cancellation_sums(&SkewShape::straight(part![2, 2]), &part![], 2);
    let mut expected = alternant(&[3, 0]);
    expected += &alternant(&[2, 1]).scale(&q(1, 2));
    let pinned_ok = all == expected && yam == expected;
    let ok = swept && pinned_ok && secs <= TIME_BUDGET_SECS;
    report(
        10,
        "involutions",
        ok,
        &format!(
            "|mu| <= {C10_MAX_OUTER}, |nu| <= {C10_MAX_NU}, {cases} cases, sweep {}, \
             pinned a_(3,0) + q^2 a_(2,1) {}, {secs}s",
            if swept { "clean" } else { "has failures" },
            if pinned_ok { "matches" } else { "differs" },
        ),
    );
    assert!(ok, "failures: {failures:?}; computed sum {all:?}");
}
