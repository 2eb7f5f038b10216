//! Partitions, skew shapes and the abacus.
//!
//! A partition is encoded by its edge sequence: position `i` carries a bead
//! (bit 1) exactly when `i = λ_j - j` for some row `j ≥ 1`. The empty
//! partition has beads on every negative position, so every sequence built
//! from a partition has charge zero. Adding an `n`-ribbon is the bead move
//! `v -> v + n`; the ribbon then occupies the contents `v + 1 ..= v + n`.
//!
//! Splitting the positions by residue mod `n` gives `n` runners. Each runner
//! is itself an edge sequence (of some charge) and reads off one slot of the
//! `n`-quotient. Emptying every runner while keeping its charge gives the core.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Trailing zeros are dropped; anything else must be weakly decreasing.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::InvalidPartition(join(&parts)));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub(crate) fn from_sorted(mut parts: Vec<usize>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        Partition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of cells.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of nonzero rows.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Row length, zero past the last row (0-indexed).
    pub fn get(&self, row: usize) -> usize {
        self.parts.get(row).copied().unwrap_or(0)
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    /// Cells as 0-indexed `(row, col)` pairs, row by row.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
    }

    pub fn has_cell(&self, row: usize, col: usize) -> bool {
        col < self.get(row)
    }

    /// Rebuilds a partition from row lengths that may not be sorted; `None`
    /// if the lengths are not weakly decreasing.
    pub fn from_row_lengths(rows: Vec<usize>) -> Option<Self> {
        Partition::new(rows).ok()
    }

    /// All partitions of `size`, in reverse lexicographic order.
    pub fn all_of_size(size: usize) -> Vec<Partition> {
        fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            for k in (1..=rest.min(max)).rev() {
                cur.push(k);
                rec(rest - k, k, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(size, size, &mut Vec::new(), &mut out);
        out
    }

    /// All partitions of size at most `max_size`, smallest sizes first.
    pub fn all_up_to(max_size: usize) -> Vec<Partition> {
        (0..=max_size).flat_map(Partition::all_of_size).collect()
    }

    /// Every partition contained in `self` (including `∅` and `self`).
    pub fn subpartitions(&self) -> Vec<Partition> {
        fn rec(outer: &[usize], row: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if row == outer.len() {
                out.push(Partition::from_sorted(cur.clone()));
                return;
            }
            let hi = outer[row].min(max);
            for k in (0..=hi).rev() {
                cur.push(k);
                if k == 0 {
                    out.push(Partition::from_sorted(cur.clone()));
                } else {
                    rec(outer, row + 1, k, cur, out);
                }
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(&self.parts, 0, usize::MAX, &mut Vec::new(), &mut out);
        out
    }

    /// Staircase `(m-1, …, 1, 0)` as a plain vector.
    pub fn staircase(m: usize) -> Vec<usize> {
        (0..m).rev().collect()
    }
}

fn join(parts: &[usize]) -> String {
    parts.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",")
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join(&self.parts))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", join(&self.parts))
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| t.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::InvalidPartition(s.to_string()))?;
        Partition::new(parts).map_err(|_| Error::InvalidPartition(s.to_string()))
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

/// Shorthand for literal partitions in tests and examples. Panics on bad input.
#[macro_export]
macro_rules! part {
    () => { $crate::shapes::Partition::empty() };
    ($($x:expr),+ $(,)?) => {
        $crate::shapes::Partition::new(vec![$($x),+]).expect("valid partition literal")
    };
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::InvalidSkewShape(format!("{outer}/{inner}")));
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn straight(outer: Partition) -> Self {
        SkewShape { outer, inner: Partition::empty() }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    /// Number of cells.
    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.outer.cells().filter(|&(r, c)| !self.inner.has_cell(r, c))
    }

    /// Every skew shape with `|outer| ≤ max_outer` and at most `max_cells`
    /// cells (including the empty ones `λ/λ`).
    pub fn all_up_to(max_outer: usize, max_cells: usize) -> Vec<SkewShape> {
        let mut out = Vec::new();
        for outer in Partition::all_up_to(max_outer) {
            for inner in outer.subpartitions() {
                if outer.size() - inner.size() <= max_cells {
                    out.push(SkewShape { outer: outer.clone(), inner });
                }
            }
        }
        out
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.outer, self.inner)
    }
}

impl FromStr for SkewShape {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidSkewShape(s.to_string());
        let (outer, inner) = match s.split_once('/') {
            Some((o, i)) => (o, i),
            None => (s, ""),
        };
        let outer: Partition = outer.parse().map_err(|_| bad())?;
        let inner: Partition = inner.parse().map_err(|_| bad())?;
        SkewShape::new(outer, inner).map_err(|_| bad())
    }
}

impl Serialize for SkewShape {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl From<Partition> for SkewShape {
    fn from(outer: Partition) -> Self {
        SkewShape::straight(outer)
    }
}

/// Doubly infinite 0/1 sequence, stored as a finite window: every position
/// below the window is 1, every position above it is 0. The window starts
/// with a 0 and ends with a 1 (or is empty).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct EdgeSequence {
    offset: i64,
    bits: Vec<bool>,
}

impl EdgeSequence {
    fn normalized(mut offset: i64, mut bits: Vec<bool>) -> Self {
        let lead = bits.iter().take_while(|&&b| b).count();
        bits.drain(..lead);
        offset += lead as i64;
        while bits.last() == Some(&false) {
            bits.pop();
        }
        if bits.is_empty() {
            offset = 0;
        }
        EdgeSequence { offset, bits }
    }

    /// Builds the sequence from its values on `[lo, hi)`; the caller promises
    /// that everything below `lo` is 1 and everything from `hi` up is 0.
    fn from_fn(lo: i64, hi: i64, f: impl Fn(i64) -> bool) -> Self {
        let bits = (lo..hi.max(lo)).map(f).collect();
        EdgeSequence::normalized(lo, bits)
    }

    pub fn from_partition(p: &Partition) -> Self {
        let lo = -(p.len() as i64);
        let hi = p.get(0) as i64;
        let mut bits = vec![false; (hi - lo) as usize];
        for (j, &part) in p.parts().iter().enumerate() {
            bits[(part as i64 - (j as i64 + 1) - lo) as usize] = true;
        }
        EdgeSequence::normalized(lo, bits)
    }

    pub fn bit(&self, i: i64) -> bool {
        if i < self.offset {
            true
        } else {
            self.bits.get((i - self.offset) as usize).copied().unwrap_or(false)
        }
    }

    /// The stored window `[start, end)`.
    pub fn window(&self) -> (i64, i64) {
        (self.offset, self.offset + self.bits.len() as i64)
    }

    /// Beads at nonnegative positions minus gaps at negative ones.
    pub fn charge(&self) -> i64 {
        let (lo, hi) = self.window();
        let beads = (0.max(lo)..hi).filter(|&i| self.bit(i)).count() as i64;
        let gaps = (lo..0.min(hi).max(lo)).filter(|&i| !self.bit(i)).count() as i64;
        beads - gaps
    }

    pub fn to_partition(&self) -> Partition {
        let (lo, hi) = self.window();
        let (charge, p) = read_abacus(|k| self.bit(k), lo, hi);
        debug_assert_eq!(charge, 0, "edge sequences built from partitions have charge zero");
        p
    }

    /// Charge and partition read off runner `i` (positions `≡ i mod n`).
    fn runner(&self, n: usize, i: usize) -> (i64, Partition) {
        let n_i = n as i64;
        let i = i as i64;
        let (lo, hi) = self.window();
        let k_lo = (lo - i).div_euclid(n_i);
        let k_hi = (hi - i + n_i - 1).div_euclid(n_i);
        read_abacus(|k| self.bit(i + n_i * k), k_lo, k_hi)
    }

    /// Bits over the window, as a string of `0`/`1` with the window start.
    pub fn window_string(&self) -> String {
        self.bits.iter().map(|&b| if b { '1' } else { '0' }).collect()
    }
}

/// Reads a partition off a bead configuration given on `[lo, hi)`, with beads
/// everywhere below and none above. Returns `(charge, partition)`.
fn read_abacus(bit: impl Fn(i64) -> bool, lo: i64, hi: i64) -> (i64, Partition) {
    let lo = lo.min(0);
    let hi = hi.max(0);
    let beads: Vec<i64> = (lo..hi).rev().filter(|&k| bit(k)).collect();
    let charge = beads.iter().filter(|&&k| k >= 0).count() as i64 - (lo..0).filter(|&k| !bit(k)).count() as i64;
    let parts = beads
        .iter()
        .enumerate()
        .map(|(j, &b)| (b + j as i64 + 1 - charge).max(0) as usize)
        .collect();
    (charge, Partition::from_sorted(parts))
}

/// Bead positions `{μ_j - j + charge}` of a partition on a runner of the given charge.
fn beads_on_runner(mu: &Partition, charge: i64) -> Vec<i64> {
    mu.parts()
        .iter()
        .enumerate()
        .map(|(j, &p)| p as i64 - (j as i64 + 1) + charge)
        .collect()
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct CoreQuotient {
    pub n: usize,
    pub core: Partition,
    pub quotient: Vec<Partition>,
    /// `offsets[i]` is the head diagonal of the ribbon that creates the cell of
    /// content `0` in slot `i`; a cell `s` of slot `i` has head diagonal
    /// `n·c(s) + offsets[i]`.
    pub offsets: Vec<i64>,
}

impl CoreQuotient {
    /// Charge carried by runner `i`.
    pub fn charge(&self, i: usize) -> i64 {
        (self.offsets[i] - i as i64).div_euclid(self.n as i64)
    }

    /// Head diagonal of the quotient cell `(row, col)` of slot `i`.
    pub fn diagonal(&self, i: usize, row: usize, col: usize) -> i64 {
        self.n as i64 * (col as i64 - row as i64) + self.offsets[i]
    }
}

pub fn edge_sequence(p: &Partition) -> EdgeSequence {
    EdgeSequence::from_partition(p)
}

pub fn core_quotient(p: &Partition, n: usize) -> Result<CoreQuotient> {
    if n == 0 {
        return Err(Error::ZeroRibbonLength);
    }
    let e = EdgeSequence::from_partition(p);
    let (charges, quotient): (Vec<i64>, Vec<Partition>) = (0..n).map(|i| e.runner(n, i)).unzip();
    let core = core_from_charges(&charges);
    let offsets = charges
        .iter()
        .enumerate()
        .map(|(i, &c)| i as i64 + n as i64 * c)
        .collect();
    Ok(CoreQuotient { n, core, quotient, offsets })
}

fn core_from_charges(charges: &[i64]) -> Partition {
    let n = charges.len() as i64;
    let lo = charges.iter().map(|&c| c.min(0)).min().unwrap_or(0) * n - n;
    let hi = charges.iter().map(|&c| c.max(0)).max().unwrap_or(0) * n + n;
    EdgeSequence::from_fn(lo, hi, |pos| {
        let r = pos.rem_euclid(n);
        (pos - r) / n < charges[r as usize]
    })
    .to_partition()
}

/// Inverse of [`core_quotient`]; the `offsets` field is ignored and
/// recomputed from the core.
pub fn combine_core_quotient(cq: &CoreQuotient) -> Result<Partition> {
    let n = cq.n;
    if n == 0 {
        return Err(Error::ZeroRibbonLength);
    }
    if cq.quotient.len() != n {
        return Err(Error::QuotientLength { got: cq.quotient.len(), n });
    }
    let core_cq = core_quotient(&cq.core, n)?;
    if core_cq.quotient.iter().any(|q| !q.is_empty()) {
        return Err(Error::NotACore { core: cq.core.to_string(), n });
    }
    let charges: Vec<i64> = (0..n).map(|i| core_cq.charge(i)).collect();
    Ok(assemble(n, &charges, &cq.quotient))
}

/// Partition whose runner `i` has the given charge and quotient slot.
fn assemble(n: usize, charges: &[i64], quotient: &[Partition]) -> Partition {
    let n_i = n as i64;
    let runners: Vec<(i64, Vec<i64>)> = charges
        .iter()
        .zip(quotient)
        .map(|(&c, q)| (c - q.len() as i64, beads_on_runner(q, c)))
        .collect();
    let lo = runners
        .iter()
        .enumerate()
        .map(|(i, (floor, _))| i as i64 + n_i * ((*floor).min(0) - 1))
        .min()
        .unwrap_or(0);
    let hi = runners
        .iter()
        .enumerate()
        .map(|(i, (floor, beads))| i as i64 + n_i * (beads.first().copied().unwrap_or(*floor).max(0) + 1))
        .max()
        .unwrap_or(0);
    EdgeSequence::from_fn(lo, hi, |pos| {
        let r = pos.rem_euclid(n_i);
        let k = (pos - r) / n_i;
        let (floor, beads) = &runners[r as usize];
        k < *floor || beads.contains(&k)
    })
    .to_partition()
}

/// Result of one bead move `v -> v + n`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RibbonMove {
    pub edge: EdgeSequence,
    /// Height of the ribbon minus one.
    pub spin: u32,
    /// Content of the ribbon's maximal-content cell, i.e. `v + n`.
    pub head_diag: i64,
}

fn swap_bits(e: &EdgeSequence, a: i64, b: i64) -> EdgeSequence {
    let (lo, hi) = e.window();
    let lo = lo.min(a).min(b);
    let hi = hi.max(a + 1).max(b + 1);
    EdgeSequence::from_fn(lo, hi, |i| {
        if i == a {
            e.bit(b)
        } else if i == b {
            e.bit(a)
        } else {
            e.bit(i)
        }
    })
}

pub fn add_ribbon(e: &EdgeSequence, v: i64, n: usize) -> Result<RibbonMove> {
    if n == 0 {
        return Err(Error::ZeroRibbonLength);
    }
    let t = v + n as i64;
    if !e.bit(v) || e.bit(t) {
        return Err(Error::NoRibbonAddable(v));
    }
    let spin = (v + 1..t).filter(|&i| e.bit(i)).count() as u32;
    Ok(RibbonMove { edge: swap_bits(e, v, t), spin, head_diag: t })
}

/// Inverse bead move `head - n <- head`.
pub fn remove_ribbon(e: &EdgeSequence, head: i64, n: usize) -> Result<RibbonMove> {
    if n == 0 {
        return Err(Error::ZeroRibbonLength);
    }
    let v = head - n as i64;
    if e.bit(v) || !e.bit(head) {
        return Err(Error::NoRibbonRemovable(head));
    }
    let spin = (v + 1..head).filter(|&i| e.bit(i)).count() as u32;
    Ok(RibbonMove { edge: swap_bits(e, v, head), spin, head_diag: head })
}

/// Ordinary horizontal strip test `outer/inner` (no two cells in a column).
pub fn is_ordinary_horizontal_strip(outer: &Partition, inner: &Partition) -> bool {
    outer.contains(inner) && (1..outer.len()).all(|j| outer.get(j) <= inner.get(j - 1))
}

pub fn is_horizontal_strip(s: &SkewShape, n: usize) -> bool {
    if n == 0 {
        return false;
    }
    let (Ok(a), Ok(b)) = (core_quotient(s.outer(), n), core_quotient(s.inner(), n)) else {
        return false;
    };
    a.offsets == b.offsets
        && a.quotient
            .iter()
            .zip(&b.quotient)
            .all(|(o, i)| is_ordinary_horizontal_strip(o, i))
}

/// `λ/μ` can be tiled by `n`-ribbons: equal cores and slotwise containment.
pub fn is_tileable(s: &SkewShape, n: usize) -> bool {
    if n == 0 {
        return false;
    }
    let (Ok(a), Ok(b)) = (core_quotient(s.outer(), n), core_quotient(s.inner(), n)) else {
        return false;
    };
    a.offsets == b.offsets && a.quotient.iter().zip(&b.quotient).all(|(o, i)| o.contains(i))
}

/// All `α ⊇ β` with `α/β` an ordinary horizontal strip and `α ⊆ bound`.
fn ordinary_strips_within(beta: &Partition, bound: &Partition) -> Vec<Partition> {
    fn rec(beta: &Partition, bound: &Partition, row: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if row >= bound.len() {
            out.push(Partition::from_sorted(cur.clone()));
            return;
        }
        let lo = beta.get(row);
        let hi = if row == 0 { bound.get(0) } else { bound.get(row).min(beta.get(row - 1)) };
        for k in lo..=hi {
            cur.push(k);
            rec(beta, bound, row + 1, cur, out);
            cur.pop();
        }
    }
    if !bound.contains(beta) {
        return Vec::new();
    }
    let mut out = Vec::new();
    rec(beta, bound, 0, &mut Vec::new(), &mut out);
    out
}

/// Every `ν` with `ν/inner` a horizontal `n`-ribbon strip and `outer/ν`
/// still tileable. Empty when `outer/inner` is not tileable.
pub fn strips_between(inner: &Partition, outer: &Partition, n: usize) -> Vec<Partition> {
    let (Ok(a), Ok(b)) = (core_quotient(outer, n), core_quotient(inner, n)) else {
        return Vec::new();
    };
    if a.offsets != b.offsets || !a.quotient.iter().zip(&b.quotient).all(|(o, i)| o.contains(i)) {
        return Vec::new();
    }
    let per_runner: Vec<Vec<Partition>> = b
        .quotient
        .iter()
        .zip(&a.quotient)
        .map(|(beta, bound)| ordinary_strips_within(beta, bound))
        .collect();
    let charges: Vec<i64> = (0..n).map(|i| a.charge(i)).collect();
    let mut out = Vec::new();
    let mut pick = Vec::with_capacity(n);
    fn product(
        per_runner: &[Vec<Partition>],
        pick: &mut Vec<Partition>,
        n: usize,
        charges: &[i64],
        out: &mut Vec<Partition>,
    ) {
        if pick.len() == per_runner.len() {
            out.push(assemble(n, charges, pick));
            return;
        }
        for q in &per_runner[pick.len()] {
            pick.push(q.clone());
            product(per_runner, pick, n, charges, out);
            pick.pop();
        }
    }
    product(&per_runner, &mut pick, n, &charges, &mut out);
    out
}

/// Lattice path given by a finite window; every step outside the window is
/// vertical (bit 1).
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct LatticePath {
    word: Vec<bool>,
}

impl LatticePath {
    pub fn new(word: Vec<bool>) -> Self {
        LatticePath { word }
    }

    pub fn word(&self) -> &[bool] {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn reversed(&self) -> Self {
        LatticePath { word: self.word.iter().rev().copied().collect() }
    }

    /// Every window of exactly `len` steps.
    pub fn all_of_length(len: usize) -> Vec<LatticePath> {
        (0..1u64 << len)
            .map(|mask| LatticePath { word: (0..len).map(|i| mask >> (len - 1 - i) & 1 == 1).collect() })
            .collect()
    }
}

impl fmt::Display for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.word {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl FromStr for LatticePath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.trim()
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(Error::InvalidPath(s.to_string())),
            })
            .collect::<Result<Vec<_>>>()
            .map(LatticePath::new)
    }
}

impl Serialize for LatticePath {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}
