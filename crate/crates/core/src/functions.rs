//! Ribbon functions, strip series of lattice paths, and the checks tying
//! spins of nested strips together.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::polynomials::{is_symmetric, skew_schur, SymPoly};
use crate::shapes::{core_quotient, is_horizontal_strip, is_tileable, strips_between, LatticePath, Partition, SkewShape};
use crate::tableaux::{execute_bead_moves, strip_ribbons, strip_spin, RibbonEntry};

/// `G^{(n)}_{shape}(x_1..x_m; q)`: the sum of `q^spin x^weight` over
/// semistandard ribbon tableaux with labels at most `m`.
pub fn ribbon_function(shape: &SkewShape, n: usize, m: usize) -> SymPoly {
    if !is_tileable(shape, n) {
        return SymPoly::zero(m);
    }
    let outer = shape.outer();
    let mut spins: HashMap<(Partition, Partition), u32> = HashMap::new();
    let mut states: BTreeMap<Partition, SymPoly> = BTreeMap::new();
    states.insert(shape.inner().clone(), SymPoly::one(m));
    for var in 0..m {
        let mut next: BTreeMap<Partition, SymPoly> = BTreeMap::new();
        for (nu, poly) in &states {
            for step in strips_between(nu, outer, n) {
                let spin = *spins
                    .entry((nu.clone(), step.clone()))
                    .or_insert_with(|| strip_spin(nu, &step, n).expect("strips_between yields strips"));
                let mut exps = vec![0; m];
                exps[var] = ((step.size() - nu.size()) / n) as u32;
                *next.entry(step).or_insert_with(|| SymPoly::zero(m)) += &poly.mul_monomial(&exps, spin as i64);
            }
        }
        states = next;
    }
    states.remove(outer).unwrap_or_else(|| SymPoly::zero(m))
}

/// At `q = 1` the ribbon function factors as the product of the skew Schur
/// polynomials of the quotient.
pub fn quotient_product_check(shape: &SkewShape, n: usize, m: usize) -> bool {
    if !is_tileable(shape, n) {
        return false;
    }
    let (Ok(a), Ok(b)) = (core_quotient(shape.outer(), n), core_quotient(shape.inner(), n)) else {
        return false;
    };
    let mut product = SymPoly::one(m);
    for (o, i) in a.quotient.iter().zip(&b.quotient) {
        product = &product * &skew_schur(o, i, m);
    }
    ribbon_function(shape, n, m).at_q_one() == product
}

pub fn verify_symmetry(shape: &SkewShape, n: usize, m: usize) -> bool {
    is_symmetric(&ribbon_function(shape, n, m))
}

/// `R_p(X, q) = Σ_S q^spin(S) X^|S|` over horizontal strips `S` attached
/// below a lattice path, keyed by `(ribbons, spin)`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct StripSeries {
    pub terms: BTreeMap<(usize, u32), u64>,
}

impl StripSeries {
    pub fn get(&self, ribbons: usize, spin: u32) -> u64 {
        self.terms.get(&(ribbons, spin)).copied().unwrap_or(0)
    }

    /// Number of strips counted.
    pub fn total(&self) -> u64 {
        self.terms.values().sum()
    }
}

impl Serialize for StripSeries {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term {
            ribbons: usize,
            spin: u32,
            count: u64,
        }
        serializer.collect_seq(
            self.terms
                .iter()
                .map(|(&(ribbons, spin), &count)| Term { ribbons, spin, count }),
        )
    }
}

/// Enumerates every horizontal `n`-ribbon strip that can be attached below
/// the path `p`.
///
/// The path is read as a bead configuration: position `k` of the window
/// carries a bead iff the `k`-th step is vertical, and every position
/// outside the window carries a bead. A strip moves each bead up its runner
/// without passing the next bead of that runner.
pub fn strip_series(p: &LatticePath, n: usize) -> StripSeries {
    assert!(n > 0, "ribbon length must be positive");
    let w = p.len() as i64;
    let n_i = n as i64;
    let lo = -n_i;
    let hi = w + n_i;
    let initial: Vec<bool> = (lo..hi).map(|k| !(0..w).contains(&k) || p.word()[k as usize]).collect();
    let at = |k: i64| (k - lo) as usize;

    // For each bead that can move, the list of reachable target sequences.
    let mut choices: Vec<Vec<Vec<i64>>> = Vec::new();
    for x in lo..w {
        if !initial[at(x)] || initial[at(x + n_i)] {
            continue;
        }
        let mut next = x + n_i;
        while !initial[at(next)] {
            next += n_i;
        }
        let mut opts = vec![Vec::new()];
        let mut y = x + n_i;
        while y < next {
            let mut targets = opts.last().unwrap().clone();
            targets.push(y);
            opts.push(targets);
            y += n_i;
        }
        choices.push(opts);
    }

    let mut series = StripSeries::default();
    let mut pick = vec![0usize; choices.len()];
    loop {
        let mut targets: Vec<i64> = pick
            .iter()
            .zip(&choices)
            .flat_map(|(&k, opts)| opts[k].iter().copied())
            .collect();
        targets.sort_unstable();
        let mut beads = initial.clone();
        let moves = execute_bead_moves(&mut beads, lo, &targets, n).expect("strip moves are executable");
        let spin = moves.iter().map(|m| m.1).sum();
        *series.terms.entry((targets.len(), spin)).or_default() += 1;

        let mut k = 0;
        while k < pick.len() {
            pick[k] += 1;
            if pick[k] < choices[k].len() {
                break;
            }
            pick[k] = 0;
            k += 1;
        }
        if k == pick.len() {
            break;
        }
    }
    series
}

pub fn verify_path_reversal(p: &LatticePath, n: usize) -> bool {
    strip_series(p, n) == strip_series(&p.reversed(), n)
}

/// A set of head diagonals.
#[derive(Clone, PartialEq, Eq, Debug, Default, Serialize)]
pub struct DiagonalSet {
    pub diags: BTreeSet<i64>,
}

impl DiagonalSet {
    /// Head diagonals of the horizontal strip `outer/inner`.
    pub fn of_strip(inner: &Partition, outer: &Partition, n: usize) -> Result<Self> {
        Ok(DiagonalSet { diags: strip_ribbons(inner, outer, n)?.iter().map(|r| r.head_diag).collect() })
    }

    pub fn contains(&self, d: i64) -> bool {
        self.diags.contains(&d)
    }
}

/// Spin carried by the ribbons whose heads lie on the given diagonals.
pub fn restricted_spin(ribbons: &[RibbonEntry], set: &DiagonalSet) -> u32 {
    ribbons.iter().filter(|r| set.contains(r.head_diag)).map(|r| r.spin).sum()
}

/// For horizontal strips `λ/μ`, `μ/ν` and `λ/ν` with head diagonal sets
/// `I = I(λ/μ)`, `J = I(μ/ν)`, checks
/// `spin_I(λ/ν) − spin(λ/μ) = spin_J(λ/ν) − spin(μ/ν)`.
pub fn verify_nested_strip_lemma(lam: &Partition, mu: &Partition, nu: &Partition, n: usize) -> Result<bool> {
    let strip = |outer: &Partition, inner: &Partition| {
        outer.contains(inner) && is_horizontal_strip(&SkewShape::new(outer.clone(), inner.clone()).unwrap(), n)
    };
    if !(strip(lam, mu) && strip(mu, nu) && strip(lam, nu)) {
        return Err(Error::NotNestedStripTriple);
    }
    let big = strip_ribbons(nu, lam, n)?;
    let i_set = DiagonalSet::of_strip(mu, lam, n)?;
    let j_set = DiagonalSet::of_strip(nu, mu, n)?;
    let lhs = restricted_spin(&big, &i_set) as i64 - strip_spin(mu, lam, n)? as i64;
    let rhs = restricted_spin(&big, &j_set) as i64 - strip_spin(nu, mu, n)? as i64;
    Ok(lhs == rhs)
}
