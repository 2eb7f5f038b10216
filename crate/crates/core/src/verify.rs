//! Exhaustive verification suites. Each suite sweeps a finite family of
//! inputs, checks one identity per case in parallel, and reports the cases
//! that fail sorted canonically, so reports do not depend on scheduling.

use std::collections::BTreeSet;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::domino::{
    bad_involution_with, bender_knuth_with, find_bad_pair, is_lambda_yamanouchi, qlr_bruteforce, qlr_num_vars,
    qlr_yamanouchi, verify_cancellation, BenderKnuthCache,
};
use crate::functions::{quotient_product_check, verify_nested_strip_lemma, verify_path_reversal, verify_symmetry};
use crate::polynomials::{schur_expand, schur_polynomial, skew_schur, LaurentQ};
use crate::shapes::{core_quotient, is_horizontal_strip, is_tileable, LatticePath, Partition, SkewShape};
use crate::tableaux::{enumerate_tableaux, reading_word, spin_inversion_constant, verify_column_pair_lemma};
use crate::words::{local_inversions, reverse_complement, verify_word_symmetry, Letter, Word123};

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct RunReport {
    pub suite: String,
    pub cases_run: usize,
    pub failures: Vec<Value>,
    pub elapsed_ms: u64,
}

impl RunReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Combines reports of the same suite run over several parameter sets.
    pub fn merge(suite: &str, reports: Vec<RunReport>) -> RunReport {
        let mut failures: Vec<Value> = reports.iter().flat_map(|r| r.failures.iter().cloned()).collect();
        sort_failures(&mut failures);
        RunReport {
            suite: suite.to_string(),
            cases_run: reports.iter().map(|r| r.cases_run).sum(),
            failures,
            elapsed_ms: reports.iter().map(|r| r.elapsed_ms).sum(),
        }
    }
}

fn sort_failures(failures: &mut [Value]) {
    failures.sort_by_cached_key(|v| v.to_string());
}

/// Runs `check` on every case in parallel; `check` returns `Some(record)`
/// for a failing case.
fn run_cases<T: Sync>(suite: &str, cases: Vec<T>, check: impl Fn(&T) -> Option<Value> + Sync + Send) -> RunReport {
    let start = Instant::now();
    let mut failures: Vec<Value> = cases.par_iter().filter_map(check).collect();
    sort_failures(&mut failures);
    RunReport {
        suite: suite.to_string(),
        cases_run: cases.len(),
        failures,
        elapsed_ms: start.elapsed().as_millis() as u64,
    }
}

/// Skew shapes `λ/μ` with `|λ| ≤ max_outer`, tileable by `n`-ribbons, that
/// are either straight or have at most `max_skew` cells.
pub fn tileable_shapes(max_outer: usize, max_skew: usize, n: usize) -> Vec<SkewShape> {
    let mut out = Vec::new();
    for outer in Partition::all_up_to(max_outer) {
        for inner in outer.subpartitions() {
            if !inner.is_empty() && outer.size() - inner.size() > max_skew {
                continue;
            }
            let s = SkewShape::new(outer.clone(), inner).expect("subpartition");
            if is_tileable(&s, n) {
                out.push(s);
            }
        }
    }
    out
}

fn shape_record(s: &SkewShape, n: usize) -> Value {
    json!({ "shape": s.to_string(), "n": n })
}

/// `spin + c·inv` is constant on the standard tableaux of every tileable
/// shape with at most `max_ribbons` ribbons, with `c = 2` throughout.
pub fn spin_inversion_suite(max_outer: usize, max_ribbons: usize, n: usize) -> RunReport {
    let cases: Vec<SkewShape> = tileable_shapes(max_outer, max_outer, n)
        .into_iter()
        .filter(|s| s.size() > 0 && s.size() / n <= max_ribbons)
        .collect();
    run_cases("spin-inversion", cases, |s| match spin_inversion_constant(s, n) {
        Ok((_, 2)) => None,
        Ok((e, c)) => Some(json!({ "shape": s.to_string(), "n": n, "e": e, "c": c })),
        Err(err) => Some(json!({ "shape": s.to_string(), "n": n, "error": err.to_string() })),
    })
}

pub fn symmetry_suite(max_outer: usize, max_skew: usize, n: usize, m: usize) -> RunReport {
    run_cases("symmetry", tileable_shapes(max_outer, max_skew, n), |s| {
        (!verify_symmetry(s, n, m)).then(|| shape_record(s, n))
    })
}

pub fn quotient_product_suite(max_outer: usize, max_skew: usize, n: usize, m: usize) -> RunReport {
    run_cases("quotient-product", tileable_shapes(max_outer, max_skew, n), |s| {
        (!quotient_product_check(s, n, m)).then(|| shape_record(s, n))
    })
}

pub fn path_reversal_suite(max_len: usize, n: usize) -> RunReport {
    let cases: Vec<LatticePath> = (0..=max_len).flat_map(LatticePath::all_of_length).collect();
    run_cases("path-reversal", cases, |p| {
        (!verify_path_reversal(p, n)).then(|| json!({ "path": p.to_string(), "n": n }))
    })
}

/// All `λ ⊇ μ ⊇ ν` with `|λ| ≤ max_outer` and the three skew shapes
/// horizontal `n`-ribbon strips.
pub fn nested_triples(max_outer: usize, n: usize) -> Vec<(Partition, Partition, Partition)> {
    let strip = |outer: &Partition, inner: &Partition| {
        is_horizontal_strip(&SkewShape::new(outer.clone(), inner.clone()).expect("subpartition"), n)
    };
    Partition::all_up_to(max_outer)
        .into_par_iter()
        .flat_map_iter(|lam| {
            let mut out = Vec::new();
            let below: Vec<Partition> = lam.subpartitions().into_iter().filter(|p| strip(&lam, p)).collect();
            for mu in &below {
                for nu in &below {
                    if mu.contains(nu) && strip(mu, nu) {
                        out.push((lam.clone(), mu.clone(), nu.clone()));
                    }
                }
            }
            out
        })
        .collect()
}

pub fn nested_strips_suite(max_outer: usize, n: usize) -> RunReport {
    run_cases("nested-strips", nested_triples(max_outer, n), |(lam, mu, nu)| {
        let record = || json!({ "lambda": lam.to_string(), "mu": mu.to_string(), "nu": nu.to_string(), "n": n });
        match verify_nested_strip_lemma(lam, mu, nu, n) {
            Ok(true) => None,
            Ok(false) => Some(record()),
            Err(err) => Some(json!({ "case": record(), "error": err.to_string() })),
        }
    })
}

pub fn column_pair_suite(max_outer: usize, n: usize, max_label: usize) -> RunReport {
    run_cases("column-pair", tileable_shapes(max_outer, max_outer, n), |s| {
        (!verify_column_pair_lemma(s, n, max_label)).then(|| shape_record(s, n))
    })
}

fn all_forms(m: usize) -> impl Iterator<Item = BTreeSet<usize>> {
    (0..1u64 << m).map(move |mask| (1..=m).filter(|&i| mask >> (i - 1) & 1 == 1).collect())
}

/// The word identity and its two-variable refinement for every length
/// `n ≤ m ≤ max_m` and every form.
pub fn word_identity_suite(max_m: usize, n: usize) -> RunReport {
    let cases: Vec<(usize, BTreeSet<usize>)> =
        (n.max(1)..=max_m).flat_map(|m| all_forms(m).map(move |f| (m, f))).collect();
    run_cases("word-identity", cases, |(m, form)| {
        (!verify_word_symmetry(*m, form, n)).then(|| json!({ "m": m, "form": form, "n": n }))
    })
}

/// Reverse-complement on every valid blank-free word of length at most
/// `max_m`: valid image, swapped weight, equal local inversions, involutive.
pub fn reverse_complement_suite(max_m: usize, n: usize) -> RunReport {
    let cases: Vec<Word123> = (0..=max_m)
        .flat_map(|m| {
            (0..1u64 << m).map(move |mask| {
                Word123::new((0..m).map(|i| if mask >> i & 1 == 1 { Letter::Two } else { Letter::One }).collect(), n)
            })
        })
        .filter(Word123::is_valid)
        .collect();
    run_cases("reverse-complement", cases, |w| {
        let ok = reverse_complement(w).is_ok_and(|img| {
            img.is_valid()
                && img.weight() == (w.weight().1, w.weight().0)
                && local_inversions(&img) == local_inversions(w)
                && reverse_complement(&img).as_ref() == Ok(w)
        });
        (!ok).then(|| json!({ "word": w.to_string(), "n": n }))
    })
}

/// Skew shapes of even size tileable by dominoes with `|μ| ≤ max_outer`.
pub fn domino_shapes(max_outer: usize) -> Vec<SkewShape> {
    tileable_shapes(max_outer, max_outer, 2)
}

/// Bender-Knuth contract on every tableau of every tileable shape with
/// `|λ| ≤ max_outer`, labels up to `ribbons + extra_labels`, and every `k`.
pub fn bender_knuth_suite(max_outer: usize, n: usize, extra_labels: usize) -> RunReport {
    run_cases("bender-knuth", tileable_shapes(max_outer, max_outer, n), |s| {
        let m = s.size() / n + extra_labels;
        let mut cache = BenderKnuthCache::default();
        let mut bad = Vec::new();
        for t in enumerate_tableaux(s, n, m) {
            for k in 1..m {
                let ok = bender_knuth_with(&t, k, &mut cache).is_ok_and(|u| {
                    let mut w = t.weight.clone();
                    w.swap(k - 1, k);
                    let others = |x: &crate::tableaux::RibbonTableau| {
                        x.ribbons.iter().filter(|r| r.label != k && r.label != k + 1).copied().collect::<Vec<_>>()
                    };
                    u.shape == t.shape
                        && u.spin() == t.spin()
                        && u.weight == w
                        && others(&u) == others(&t)
                        && bender_knuth_with(&u, k, &mut cache).as_ref() == Ok(&t)
                });
                if !ok {
                    bad.push(json!({ "chain": t.chain.iter().map(Partition::to_string).collect::<Vec<_>>(), "k": k }));
                }
            }
        }
        (!bad.is_empty()).then(|| json!({ "shape": s.to_string(), "n": n, "tableaux": bad }))
    })
}

fn partitions_up_to(max: usize) -> Vec<Partition> {
    Partition::all_up_to(max)
}

/// Bad Guy involution contract for every domino tableau of every shape with
/// `|μ| ≤ max_outer` and every `|ν| ≤ max_nu`, in `|μ/ρ|/2 + |ν|` labels.
pub fn bad_guy_suite(max_outer: usize, max_nu: usize) -> RunReport {
    let cases: Vec<(SkewShape, Partition)> = domino_shapes(max_outer)
        .into_iter()
        .flat_map(|s| partitions_up_to(max_nu).into_iter().map(move |nu| (s.clone(), nu)))
        .collect();
    run_cases("bad-guy", cases, |(s, nu)| {
        let m = qlr_num_vars(s, nu);
        let shifted = |x: &crate::tableaux::RibbonTableau| -> Vec<usize> {
            (0..m).map(|i| x.weight.get(i).copied().unwrap_or(0) + nu.get(i) + m - 1 - i).collect()
        };
        let mut cache = BenderKnuthCache::default();
        let mut bad = Vec::new();
        for d in enumerate_tableaux(s, 2, m) {
            let yam = is_lambda_yamanouchi(&reading_word(&d).letters, nu);
            let pair = find_bad_pair(&d, nu);
            let ok = match pair {
                None => yam,
                Some(pair) => {
                    !yam && bad_involution_with(&d, nu, &mut cache).is_ok_and(|star| {
                        let mut expected = shifted(&d);
                        expected.swap(pair.row_index - 1, pair.row_index);
                        star.shape == d.shape
                            && star.spin() == d.spin()
                            && shifted(&star) == expected
                            && find_bad_pair(&star, nu).is_some()
                            && bad_involution_with(&star, nu, &mut cache).as_ref() == Ok(&d)
                    })
                }
            };
            if !ok {
                bad.push(json!(d.chain.iter().map(Partition::to_string).collect::<Vec<_>>()));
            }
        }
        (!bad.is_empty()).then(|| json!({ "mu_rho": s.to_string(), "nu": nu.to_string(), "tableaux": bad }))
    })
}

pub fn cancellation_suite(max_outer: usize, max_nu: usize) -> RunReport {
    let cases: Vec<(SkewShape, Partition)> = domino_shapes(max_outer)
        .into_iter()
        .flat_map(|s| partitions_up_to(max_nu).into_iter().map(move |nu| (s.clone(), nu)))
        .collect();
    run_cases("cancellation", cases, |(s, nu)| {
        (!verify_cancellation(s, nu, qlr_num_vars(s, nu))).then(|| json!({ "mu_rho": s.to_string(), "nu": nu.to_string() }))
    })
}

/// `c^λ(1)` from the product of `s_ν` with the quotient skew Schur
/// polynomials, the classical Littlewood-Richardson side.
fn classical_lr(s: &SkewShape, nu: &Partition, m: usize) -> crate::Result<crate::polynomials::SchurExpansion> {
    let a = core_quotient(s.outer(), 2)?;
    let b = core_quotient(s.inner(), 2)?;
    let mut f = schur_polynomial(nu, m);
    for (o, i) in a.quotient.iter().zip(&b.quotient) {
        f = &f * &skew_schur(o, i, m);
    }
    schur_expand(&f)
}

/// Yamanouchi tableaux against brute-force Schur expansion, nonnegativity,
/// and the `q = 1` specialization against classical coefficients. Shapes
/// with `ν = ∅` go up to `max_outer_empty`, the others up to `max_outer`.
pub fn qlr_suite(max_outer_empty: usize, max_outer: usize, max_nu: usize) -> RunReport {
    let mut cases: Vec<(SkewShape, Partition)> =
        domino_shapes(max_outer_empty).into_iter().map(|s| (s, Partition::empty())).collect();
    for s in domino_shapes(max_outer) {
        for nu in partitions_up_to(max_nu).into_iter().filter(|nu| !nu.is_empty()) {
            cases.push((s.clone(), nu));
        }
    }
    run_cases("qlr", cases, |(s, nu)| {
        let record = |why: &str| Some(json!({ "mu_rho": s.to_string(), "nu": nu.to_string(), "reason": why }));
        let yam = qlr_yamanouchi(s, nu);
        let Ok(brute) = qlr_bruteforce(s, nu) else {
            return record("not symmetric");
        };
        if yam != brute {
            return record("yamanouchi differs from expansion");
        }
        if !yam.has_nonnegative_coeffs() {
            return record("negative coefficient");
        }
        let Ok(classical) = classical_lr(s, nu, qlr_num_vars(s, nu)) else {
            return record("classical product not symmetric");
        };
        let at_one: crate::polynomials::SchurExpansion = yam
            .coeffs
            .iter()
            .map(|(lam, c)| (lam.clone(), LaurentQ::monomial(c.at_one(), 0)))
            .collect();
        if at_one != classical {
            return record("q = 1 differs from classical coefficients");
        }
        None
    })
}

/// Names accepted by [`run_suite`].
pub const SUITES: &[&str] = &[
    "symmetry",
    "quotient-product",
    "spin-inversion",
    "column-pair",
    "path-reversal",
    "nested-strips",
    "word-identity",
    "reverse-complement",
    "bender-knuth",
    "bad-guy",
    "cancellation",
    "qlr",
];

/// Runs a suite with a single size bound `max_cells` and ribbon length `n`.
/// Domino suites require `n = 2`. Returns `None` for an unknown suite or an
/// unsupported `n`.
pub fn run_suite(name: &str, max_cells: usize, n: usize) -> Option<RunReport> {
    let domino = matches!(name, "bad-guy" | "cancellation" | "qlr");
    if n == 0 || (domino && n != 2) {
        return None;
    }
    Some(match name {
        "symmetry" => symmetry_suite(max_cells, max_cells, n, 3),
        "quotient-product" => quotient_product_suite(max_cells, max_cells, n, 3),
        "spin-inversion" => spin_inversion_suite(max_cells, 4, n),
        "column-pair" => column_pair_suite(max_cells, n, 3),
        "path-reversal" => path_reversal_suite(max_cells, n),
        "nested-strips" => nested_strips_suite(max_cells, n),
        "word-identity" => word_identity_suite(max_cells, n),
        "reverse-complement" => reverse_complement_suite(max_cells, n),
        "bender-knuth" => bender_knuth_suite(max_cells, n, 2),
        "bad-guy" => bad_guy_suite(max_cells, 2),
        "cancellation" => cancellation_suite(max_cells, 2),
        "qlr" => qlr_suite(max_cells, max_cells, 3),
        _ => return None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suites_pass() {
        for name in SUITES {
            let report = run_suite(name, 4, 2).unwrap();
            assert!(report.passed(), "{report:?}");
            assert!(report.cases_run > 0, "{name}");
        }
        assert!(run_suite("qlr", 4, 3).is_none());
        assert!(run_suite("nope", 4, 2).is_none());
    }

    #[test]
    fn reports_are_deterministic() {
        let a = run_suite("symmetry", 6, 2).unwrap();
        let b = rayon::ThreadPoolBuilder::new()
            .num_threads(1)
            .build()
            .unwrap()
            .install(|| run_suite("symmetry", 6, 2).unwrap());
        assert_eq!((a.cases_run, a.failures), (b.cases_run, b.failures));
    }

    #[test]
    fn merge_sorts_failures() {
        let r = |f: Vec<Value>| RunReport { suite: "x".into(), cases_run: 1, failures: f, elapsed_ms: 1 };
        let merged = RunReport::merge("x", vec![r(vec![json!("b")]), r(vec![json!("a")])]);
        assert_eq!(merged.failures, vec![json!("a"), json!("b")]);
        assert_eq!(merged.cases_run, 2);
    }
}
