//! `(1,2,∅)`-words: sequences over `{1, 2, blank}` in which no `2` sits
//! exactly `n` places before a `1`, with their `n`-local inversions.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::polynomials::{is_symmetric, LaurentQ, SymPoly};
use crate::tableaux::RibbonTableau;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Letter {
    One,
    Two,
    Blank,
}

#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Word123 {
    pub letters: Vec<Letter>,
    pub n: usize,
}

impl Word123 {
    pub fn new(letters: Vec<Letter>, n: usize) -> Self {
        Word123 { letters, n }
    }

    /// Parses a string over `{1, 2, .}`.
    pub fn parse(s: &str, n: usize) -> Result<Self> {
        let letters = s
            .chars()
            .map(|c| match c {
                '1' => Ok(Letter::One),
                '2' => Ok(Letter::Two),
                '.' => Ok(Letter::Blank),
                _ => Err(Error::InvalidWord(s.to_string())),
            })
            .collect::<Result<_>>()?;
        Ok(Word123 { letters, n })
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// No `2` at a position `i` with a `1` at `i + n`.
    pub fn is_valid(&self) -> bool {
        self.letters
            .iter()
            .zip(self.letters.iter().skip(self.n))
            .all(|pair| pair != (&Letter::Two, &Letter::One))
    }

    /// 1-indexed blank positions.
    pub fn form(&self) -> BTreeSet<usize> {
        (1..=self.len()).filter(|&i| self.letters[i - 1] == Letter::Blank).collect()
    }

    pub fn weight(&self) -> (usize, usize) {
        let ones = self.letters.iter().filter(|&&l| l == Letter::One).count();
        let twos = self.letters.iter().filter(|&&l| l == Letter::Two).count();
        (ones, twos)
    }
}

impl fmt::Display for Word123 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.letters {
            f.write_str(match l {
                Letter::One => "1",
                Letter::Two => "2",
                Letter::Blank => ".",
            })?;
        }
        Ok(())
    }
}

impl Serialize for Word123 {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// All valid words of length `m` with blanks exactly at `form` (1-indexed)
/// and the given weight, in lexicographic order.
pub fn enumerate_words(m: usize, form: &BTreeSet<usize>, weight: (usize, usize), n: usize) -> Vec<Word123> {
    if form.len() + weight.0 + weight.1 != m || form.iter().any(|&i| i == 0 || i > m) {
        return Vec::new();
    }
    fn rec(pos: usize, ones: usize, twos: usize, form: &BTreeSet<usize>, cur: &mut Word123, out: &mut Vec<Word123>) {
        if pos == cur.letters.len() {
            out.push(cur.clone());
            return;
        }
        let options: &[Letter] = if form.contains(&(pos + 1)) { &[Letter::Blank] } else { &[Letter::One, Letter::Two] };
        for &l in options {
            let (o, t) = match l {
                Letter::One if ones > 0 => (ones - 1, twos),
                Letter::Two if twos > 0 => (ones, twos - 1),
                Letter::Blank => (ones, twos),
                _ => continue,
            };
            if l == Letter::One && pos >= cur.n && cur.letters[pos - cur.n] == Letter::Two {
                continue;
            }
            cur.letters[pos] = l;
            rec(pos + 1, o, t, form, cur, out);
        }
    }
    let mut out = Vec::new();
    let mut cur = Word123 { letters: vec![Letter::Blank; m], n };
    rec(0, weight.0, weight.1, form, &mut cur, &mut out);
    out
}

/// Pairs `i < j` with `j - i < n`, a `2` at `i` and a `1` at `j`.
pub fn local_inversions(w: &Word123) -> usize {
    let mut count = 0;
    for (i, &a) in w.letters.iter().enumerate() {
        if a != Letter::Two {
            continue;
        }
        count += w.letters[i + 1..]
            .iter()
            .take(w.n.saturating_sub(1))
            .filter(|&&b| b == Letter::One)
            .count();
    }
    count
}

/// `Σ q^linv` over valid words of the given length, form and weight.
pub fn linv_generating_function(m: usize, form: &BTreeSet<usize>, weight: (usize, usize), n: usize) -> LaurentQ {
    let mut out = LaurentQ::zero();
    for w in enumerate_words(m, form, weight, n) {
        out += LaurentQ::q_pow(local_inversions(&w) as i64);
    }
    out
}

/// `Σ q^linv x1^μ1 x2^μ2` over all valid words of the given length and form.
pub fn word_polynomial(m: usize, form: &BTreeSet<usize>, n: usize) -> SymPoly {
    let letters = m.saturating_sub(form.len());
    let mut out = SymPoly::zero(2);
    for ones in 0..=letters {
        let weight = (ones, letters - ones);
        let c = linv_generating_function(m, form, weight, n);
        out.add_term(vec![weight.0 as u32, weight.1 as u32], &c);
    }
    out
}

/// The generating functions for weights `(μ1, μ2)` and `(μ2, μ1)` agree for
/// every weight compatible with `(m, form)`.
pub fn verify_word_identity(m: usize, form: &BTreeSet<usize>, n: usize) -> bool {
    let letters = m.saturating_sub(form.len());
    (0..=letters).all(|ones| {
        let twos = letters - ones;
        linv_generating_function(m, form, (ones, twos), n) == linv_generating_function(m, form, (twos, ones), n)
    })
}

/// Both the identity and symmetry of the two-variable refinement.
pub fn verify_word_symmetry(m: usize, form: &BTreeSet<usize>, n: usize) -> bool {
    verify_word_identity(m, form, n) && is_symmetric(&word_polynomial(m, form, n))
}

/// Reverses a blank-free word and exchanges `1` and `2`.
pub fn reverse_complement(w: &Word123) -> Result<Word123> {
    if w.letters.contains(&Letter::Blank) {
        return Err(Error::NonEmptyForm);
    }
    let letters = w
        .letters
        .iter()
        .rev()
        .map(|l| match l {
            Letter::One => Letter::Two,
            Letter::Two => Letter::One,
            Letter::Blank => Letter::Blank,
        })
        .collect();
    Ok(Word123 { letters, n: w.n })
}

/// The word of a tableau with labels in `{1, 2}` on a horizontal strip:
/// head diagonals from lowest to highest, with a blank on every diagonal of
/// that range carrying no head.
pub fn strip_word(t: &RibbonTableau) -> Result<Word123> {
    let by_diag: BTreeMap<i64, usize> = t.ribbons.iter().map(|r| (r.head_diag, r.label)).collect();
    if by_diag.len() != t.ribbons.len() || t.ribbons.iter().any(|r| r.label > 2) {
        return Err(Error::NotAStrip(t.shape.to_string(), t.n));
    }
    let (Some(&lo), Some(&hi)) = (by_diag.keys().next(), by_diag.keys().next_back()) else {
        return Ok(Word123 { letters: Vec::new(), n: t.n });
    };
    let letters = (lo..=hi)
        .map(|d| match by_diag.get(&d) {
            Some(1) => Letter::One,
            Some(_) => Letter::Two,
            None => Letter::Blank,
        })
        .collect();
    Ok(Word123 { letters, n: t.n })
}
