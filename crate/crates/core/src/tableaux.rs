//! Semistandard ribbon tableaux as chains of horizontal ribbon strips.
//!
//! A strip is tiled canonically by executing its bead moves in increasing
//! order of target position, always picking the smallest target that is
//! currently legal. This produces the tiling in which the head of every
//! ribbon touches the northern border of the strip, and the spin of a ribbon
//! is its height minus one.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::shapes::{core_quotient, edge_sequence, is_horizontal_strip, strips_between, Partition, SkewShape};

/// One ribbon of a tableau, identified with a cell of the quotient.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Serialize)]
pub struct RibbonEntry {
    pub label: usize,
    pub head_diag: i64,
    pub spin: u32,
    pub runner: usize,
    /// Cell `(row, col)` of the quotient slot `runner`.
    #[serde(skip)]
    pub row: usize,
    #[serde(skip)]
    pub col: usize,
}

impl RibbonEntry {
    fn quotient_cell(&self) -> (usize, usize, usize) {
        (self.runner, self.row, self.col)
    }
}

/// Canonical tiling of the horizontal strip `outer/inner`, sorted by head
/// diagonal. Labels are left at `0`.
pub fn strip_ribbons(inner: &Partition, outer: &Partition, n: usize) -> Result<Vec<RibbonEntry>> {
    let shape = SkewShape::new(outer.clone(), inner.clone())?;
    if !is_horizontal_strip(&shape, n) {
        return Err(Error::NotAStrip(shape.to_string(), n));
    }
    let a = core_quotient(outer, n)?;
    let b = core_quotient(inner, n)?;
    let mut pending: Vec<(i64, usize, usize, usize)> = Vec::new();
    for i in 0..n {
        for (r, c) in SkewShape::new(a.quotient[i].clone(), b.quotient[i].clone())?.cells() {
            pending.push((a.diagonal(i, r, c), i, r, c));
        }
    }
    pending.sort_unstable();

    let n_i = n as i64;
    let e = edge_sequence(inner);
    let (mut lo, mut hi) = e.window();
    if let (Some(first), Some(last)) = (pending.first(), pending.last()) {
        lo = lo.min(first.0 - n_i);
        hi = hi.max(last.0 + 1);
    }
    let mut beads: Vec<bool> = (lo..hi).map(|k| e.bit(k)).collect();
    let at = |k: i64| (k - lo) as usize;
    let targets: Vec<i64> = pending.iter().map(|p| p.0).collect();
    let moves = execute_bead_moves(&mut beads, lo, &targets, n)
        .ok_or_else(|| Error::Invariant(format!("strip {shape} has no legal bead move left")))?;
    let mut out: Vec<RibbonEntry> = moves
        .into_iter()
        .map(|(k, spin)| {
            let (t, runner, row, col) = pending[k];
            RibbonEntry { label: 0, head_diag: t, spin, runner, row, col }
        })
        .collect();
    debug_assert!({
        let f = edge_sequence(outer);
        (lo..hi).all(|k| f.bit(k) == beads[at(k)])
    });
    out.sort_by_key(|r| r.head_diag);
    Ok(out)
}

/// Executes the bead moves `t - n -> t` for the sorted `targets` on the bead
/// vector `beads` (indexed from position `lo`), always taking the smallest
/// legal target next. Returns `(index into targets, spin)` in execution
/// order, or `None` if the moves get stuck.
pub(crate) fn execute_bead_moves(beads: &mut [bool], lo: i64, targets: &[i64], n: usize) -> Option<Vec<(usize, u32)>> {
    let n_i = n as i64;
    let at = |k: i64| (k - lo) as usize;
    let mut done = vec![false; targets.len()];
    let mut out = Vec::with_capacity(targets.len());
    while out.len() < targets.len() {
        let k = (0..targets.len()).find(|&k| !done[k] && beads[at(targets[k] - n_i)] && !beads[at(targets[k])])?;
        let t = targets[k];
        let spin = (t - n_i + 1..t).filter(|&p| beads[at(p)]).count() as u32;
        beads[at(t - n_i)] = false;
        beads[at(t)] = true;
        done[k] = true;
        out.push((k, spin));
    }
    Some(out)
}

/// Spin of the canonical tiling of the horizontal strip `outer/inner`.
pub fn strip_spin(inner: &Partition, outer: &Partition, n: usize) -> Result<u32> {
    Ok(strip_ribbons(inner, outer, n)?.iter().map(|r| r.spin).sum())
}

#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct RibbonTableau {
    pub n: usize,
    pub shape: SkewShape,
    #[serde(skip)]
    pub chain: Vec<Partition>,
    /// Sorted by label, then head diagonal.
    pub ribbons: Vec<RibbonEntry>,
    pub weight: Vec<usize>,
}

impl RibbonTableau {
    /// Tableau whose ribbons labelled `i` fill `chain[i] / chain[i-1]`.
    pub fn from_chain(chain: Vec<Partition>, n: usize) -> Result<Self> {
        let first = chain.first().cloned().unwrap_or_default();
        let last = chain.last().cloned().unwrap_or_default();
        let shape = SkewShape::new(last, first)?;
        let mut ribbons = Vec::new();
        let mut weight = Vec::with_capacity(chain.len().saturating_sub(1));
        for (i, step) in chain.windows(2).enumerate() {
            let strip = strip_ribbons(&step[0], &step[1], n)?;
            weight.push(strip.len());
            ribbons.extend(strip.into_iter().map(|r| RibbonEntry { label: i + 1, ..r }));
        }
        Ok(RibbonTableau { n, shape, chain, ribbons, weight })
    }

    /// Tableau of the given shape whose quotient cell `(runner, row, col)`
    /// carries `labels[cell]`; every quotient cell of the shape must be
    /// labelled with a value in `1..=max_label`.
    pub fn from_quotient_labels(
        shape: &SkewShape,
        n: usize,
        labels: &HashMap<(usize, usize, usize), usize>,
        max_label: usize,
    ) -> Result<Self> {
        let inner = core_quotient(shape.inner(), n)?;
        let outer = core_quotient(shape.outer(), n)?;
        let mut chain = Vec::with_capacity(max_label + 1);
        for k in 0..=max_label {
            let mut cq = inner.clone();
            for i in 0..n {
                let rows = outer.quotient[i].len();
                let mut lengths = Vec::with_capacity(rows);
                for r in 0..rows {
                    let start = inner.quotient[i].get(r);
                    let extra = (start..outer.quotient[i].get(r))
                        .filter(|&c| labels.get(&(i, r, c)).is_some_and(|&l| l <= k))
                        .count();
                    lengths.push(start + extra);
                }
                cq.quotient[i] = Partition::new(lengths)
                    .map_err(|_| Error::Invariant(format!("labels on {shape} are not semistandard")))?;
            }
            chain.push(crate::shapes::combine_core_quotient(&cq)?);
        }
        if chain.last() != Some(shape.outer()) {
            return Err(Error::Invariant(format!("labels do not cover {shape}")));
        }
        let t = RibbonTableau::from_chain(chain, n)?;
        if t.ribbons.iter().any(|r| labels.get(&r.quotient_cell()) != Some(&r.label)) {
            return Err(Error::Invariant(format!("labels on {shape} are not semistandard")));
        }
        Ok(t)
    }

    pub fn spin(&self) -> u32 {
        self.ribbons.iter().map(|r| r.spin).sum()
    }

    pub fn inversions(&self) -> usize {
        let mut count = 0;
        for (k, a) in self.ribbons.iter().enumerate() {
            for b in &self.ribbons[k + 1..] {
                if is_inversion(a, b, self.n) || is_inversion(b, a, self.n) {
                    count += 1;
                }
            }
        }
        count
    }

    pub fn is_standard(&self) -> bool {
        self.weight.iter().all(|&w| w == 1)
    }

    pub fn max_label(&self) -> usize {
        self.weight.len()
    }

    /// Quotient cell to label map.
    pub fn quotient_labels(&self) -> HashMap<(usize, usize, usize), usize> {
        self.ribbons.iter().map(|r| (r.quotient_cell(), r.label)).collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("tableau serializes")
    }
}

/// `x` labelled `a` and `y` labelled `b` form an inversion: `a < b` and
/// `0 < diag(x) - diag(y) < n`.
pub fn is_inversion(x: &RibbonEntry, y: &RibbonEntry, n: usize) -> bool {
    let d = x.head_diag - y.head_diag;
    x.label < y.label && d > 0 && d < n as i64
}

pub fn spin(t: &RibbonTableau) -> u32 {
    t.spin()
}

pub fn inversions(t: &RibbonTableau) -> usize {
    t.inversions()
}

/// All semistandard `n`-ribbon tableaux of the shape with labels in
/// `1..=max_label`, one per chain of horizontal strips.
pub fn enumerate_tableaux(shape: &SkewShape, n: usize, max_label: usize) -> Vec<RibbonTableau> {
    enumerate_chains(shape, n, max_label, None)
        .into_iter()
        .map(|c| RibbonTableau::from_chain(c, n).expect("chains are built from strips"))
        .collect()
}

/// Standard tableaux: one ribbon per label.
pub fn standard_tableaux(shape: &SkewShape, n: usize) -> Vec<RibbonTableau> {
    if n == 0 || !shape.size().is_multiple_of(n) {
        return Vec::new();
    }
    enumerate_chains(shape, n, shape.size() / n, Some(n))
        .into_iter()
        .map(|c| RibbonTableau::from_chain(c, n).expect("chains are built from strips"))
        .collect()
}

fn enumerate_chains(shape: &SkewShape, n: usize, steps: usize, step_cells: Option<usize>) -> Vec<Vec<Partition>> {
    fn rec(
        outer: &Partition,
        n: usize,
        left: usize,
        step_cells: Option<usize>,
        chain: &mut Vec<Partition>,
        out: &mut Vec<Vec<Partition>>,
    ) {
        let cur = chain.last().unwrap().clone();
        if left == 0 {
            if &cur == outer {
                out.push(chain.clone());
            }
            return;
        }
        for next in strips_between(&cur, outer, n) {
            if step_cells.is_some_and(|s| next.size() != cur.size() + s) {
                continue;
            }
            chain.push(next);
            rec(outer, n, left - 1, step_cells, chain, out);
            chain.pop();
        }
    }
    if n == 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    rec(shape.outer(), n, steps, step_cells, &mut vec![shape.inner().clone()], &mut out);
    out
}

/// Finds `(e, c)` with `spin(T) = e - c·inv(T)` for every standard tableau
/// of the shape, trying `c = 2` before `c = 1`.
pub fn spin_inversion_constant(shape: &SkewShape, n: usize) -> Result<(i64, i64)> {
    let stats: Vec<(i64, i64)> = standard_tableaux(shape, n)
        .iter()
        .map(|t| (t.spin() as i64, t.inversions() as i64))
        .collect();
    let Some(&(s0, i0)) = stats.first() else {
        return Err(Error::NoStandardTableau(shape.to_string()));
    };
    for c in [2, 1] {
        let e = s0 + c * i0;
        if stats.iter().all(|&(s, i)| s + c * i == e) {
            return Ok((e, c));
        }
    }
    Err(Error::RelationViolated(format!("spin + c·inv is not constant on {shape} for n = {n}")))
}

/// Direction in which head diagonals are traversed by the reading word.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum ReadingOrientation {
    Descending,
    Ascending,
}

/// The orientation under which Yamanouchi tableaux reproduce the Schur
/// expansion of `s_ν · G` (checked in the domino tests).
pub const READING_ORIENTATION: ReadingOrientation = ReadingOrientation::Descending;

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct ReadingWord {
    pub letters: Vec<usize>,
    pub diagonals: Vec<i64>,
}

pub fn reading_word(t: &RibbonTableau) -> ReadingWord {
    reading_word_with(t, READING_ORIENTATION)
}

pub fn reading_word_with(t: &RibbonTableau, orientation: ReadingOrientation) -> ReadingWord {
    let order = reading_order(&t.ribbons, orientation);
    ReadingWord {
        letters: order.iter().map(|r| r.label).collect(),
        diagonals: order.iter().map(|r| r.head_diag).collect(),
    }
}

/// Ribbons in reading order: by diagonal in the given orientation, larger
/// labels first within a diagonal, then runner ascending.
pub fn reading_order(ribbons: &[RibbonEntry], orientation: ReadingOrientation) -> Vec<RibbonEntry> {
    let mut v = ribbons.to_vec();
    v.sort_by(|a, b| {
        let diag = match orientation {
            ReadingOrientation::Descending => b.head_diag.cmp(&a.head_diag),
            ReadingOrientation::Ascending => a.head_diag.cmp(&b.head_diag),
        };
        diag.then(b.label.cmp(&a.label)).then(a.runner.cmp(&b.runner))
    });
    v
}

/// Whether diagonal `d` is read strictly before diagonal `j`.
pub fn read_before(d: i64, j: i64) -> bool {
    match READING_ORIENTATION {
        ReadingOrientation::Descending => d > j,
        ReadingOrientation::Ascending => d < j,
    }
}

/// Label counts of the ribbons read strictly before diagonal `j`, and of
/// those read up to and including diagonal `j`.
pub fn prefix_weights(t: &RibbonTableau, j: i64) -> (Vec<usize>, Vec<usize>) {
    let mut before = vec![0; t.max_label()];
    let mut through = vec![0; t.max_label()];
    for r in &t.ribbons {
        if read_before(r.head_diag, j) {
            before[r.label - 1] += 1;
        }
        if read_before(r.head_diag, j) || r.head_diag == j {
            through[r.label - 1] += 1;
        }
    }
    (before, through)
}

/// Every quotient slot is an ordinary semistandard filling.
pub fn quotient_is_semistandard(labels: &HashMap<(usize, usize, usize), usize>) -> bool {
    labels.iter().all(|(&(i, r, c), &l)| {
        labels.get(&(i, r, c + 1)).is_none_or(|&right| right >= l)
            && labels.get(&(i, r + 1, c)).is_none_or(|&below| below > l)
    })
}

fn inversions_involving(ribbons: &[RibbonEntry], k: usize, n: usize) -> usize {
    let x = &ribbons[k];
    ribbons
        .iter()
        .enumerate()
        .filter(|&(j, y)| j != k && (is_inversion(x, y, n) || is_inversion(y, x, n)))
        .count()
}

/// For every tableau with a quotient column `x` over `y` labelled `i`, `i+1`
/// and every semistandard way of turning some other `i` into `i+1`, checks
/// `inv_x + inv_y` is unchanged.
pub fn verify_column_pair_lemma(shape: &SkewShape, n: usize, max_label: usize) -> bool {
    for t in enumerate_tableaux(shape, n, max_label) {
        let cells: HashMap<(usize, usize, usize), usize> =
            t.ribbons.iter().enumerate().map(|(k, r)| (r.quotient_cell(), k)).collect();
        let labels = t.quotient_labels();
        for (kx, x) in t.ribbons.iter().enumerate() {
            let Some(&ky) = cells.get(&(x.runner, x.row + 1, x.col)) else {
                continue;
            };
            if t.ribbons[ky].label != x.label + 1 {
                continue;
            }
            let before = inversions_involving(&t.ribbons, kx, n) + inversions_involving(&t.ribbons, ky, n);
            for (kz, z) in t.ribbons.iter().enumerate() {
                if kz == kx || z.label != x.label {
                    continue;
                }
                let mut changed = labels.clone();
                changed.insert(z.quotient_cell(), x.label + 1);
                if !quotient_is_semistandard(&changed) {
                    continue;
                }
                let mut ribbons = t.ribbons.clone();
                ribbons[kz].label += 1;
                let after = inversions_involving(&ribbons, kx, n) + inversions_involving(&ribbons, ky, n);
                if before != after {
                    return false;
                }
            }
        }
    }
    true
}
