//! Exact Laurent polynomials in `q` and sparse polynomials in `x_1..x_m`
//! over them, with the Schur-function machinery needed to expand ribbon
//! functions.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::shapes::{strips_between, Partition};

/// `Σ coeffs[k] q^(min_deg + k)` with integer coefficients. Canonical form
/// has nonzero first and last coefficients; zero is the empty vector.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentQ {
    min_deg: i64,
    coeffs: Vec<BigInt>,
}

impl LaurentQ {
    pub fn new(min_deg: i64, coeffs: Vec<BigInt>) -> Self {
        let mut p = LaurentQ { min_deg, coeffs };
        p.normalize();
        p
    }

    /// Convenience constructor from machine integers.
    pub fn from_ints(min_deg: i64, coeffs: &[i64]) -> Self {
        LaurentQ::new(min_deg, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    fn normalize(&mut self) {
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        self.coeffs.drain(..lead);
        self.min_deg += lead as i64;
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
        if self.coeffs.is_empty() {
            self.min_deg = 0;
        }
    }

    pub fn zero() -> Self {
        LaurentQ::default()
    }

    pub fn one() -> Self {
        LaurentQ::q_pow(0)
    }

    pub fn q_pow(d: i64) -> Self {
        LaurentQ { min_deg: d, coeffs: vec![BigInt::one()] }
    }

    pub fn monomial(c: impl Into<BigInt>, d: i64) -> Self {
        LaurentQ::new(d, vec![c.into()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn min_deg(&self) -> i64 {
        self.min_deg
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn max_deg(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.min_deg + self.coeffs.len() as i64 - 1)
    }

    pub fn coeff(&self, d: i64) -> BigInt {
        let k = d - self.min_deg;
        if k < 0 {
            return BigInt::zero();
        }
        self.coeffs.get(k as usize).cloned().unwrap_or_default()
    }

    /// Nonzero terms as `(degree, coefficient)`.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(k, c)| (self.min_deg + k as i64, c))
    }

    /// Value at `q = 1`.
    pub fn at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// Multiplies by `q^d`.
    pub fn shifted(&self, d: i64) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        LaurentQ { min_deg: self.min_deg + d, coeffs: self.coeffs.clone() }
    }

    /// Substitutes `q -> q^k` for `k ≥ 1`.
    pub fn substitute_power(&self, k: i64) -> Self {
        assert!(k >= 1);
        let mut out = LaurentQ::zero();
        for (d, c) in self.terms() {
            out += LaurentQ::monomial(c.clone(), d * k);
        }
        out
    }

    fn add_scaled(&mut self, other: &LaurentQ, sign: i8) {
        if other.is_zero() {
            return;
        }
        if self.is_zero() {
            *self = if sign < 0 { -other.clone() } else { other.clone() };
            return;
        }
        let lo = self.min_deg.min(other.min_deg);
        let hi = self.max_deg().unwrap().max(other.max_deg().unwrap());
        let mut coeffs = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (k, c) in self.coeffs.drain(..).enumerate() {
            coeffs[(self.min_deg - lo) as usize + k] = c;
        }
        for (k, c) in other.coeffs.iter().enumerate() {
            let slot = &mut coeffs[(other.min_deg - lo) as usize + k];
            if sign < 0 {
                *slot -= c;
            } else {
                *slot += c;
            }
        }
        self.min_deg = lo;
        self.coeffs = coeffs;
        self.normalize();
    }
}

impl AddAssign<&LaurentQ> for LaurentQ {
    fn add_assign(&mut self, rhs: &LaurentQ) {
        self.add_scaled(rhs, 1);
    }
}

impl AddAssign for LaurentQ {
    fn add_assign(&mut self, rhs: LaurentQ) {
        self.add_scaled(&rhs, 1);
    }
}

impl SubAssign<&LaurentQ> for LaurentQ {
    fn sub_assign(&mut self, rhs: &LaurentQ) {
        self.add_scaled(rhs, -1);
    }
}

impl Add for &LaurentQ {
    type Output = LaurentQ;
    fn add(self, rhs: &LaurentQ) -> LaurentQ {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentQ {
    type Output = LaurentQ;
    fn add(mut self, rhs: LaurentQ) -> LaurentQ {
        self += &rhs;
        self
    }
}

impl Sub for &LaurentQ {
    type Output = LaurentQ;
    fn sub(self, rhs: &LaurentQ) -> LaurentQ {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for LaurentQ {
    type Output = LaurentQ;
    fn sub(mut self, rhs: LaurentQ) -> LaurentQ {
        self -= &rhs;
        self
    }
}

impl Neg for LaurentQ {
    type Output = LaurentQ;
    fn neg(mut self) -> LaurentQ {
        for c in &mut self.coeffs {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Mul for &LaurentQ {
    type Output = LaurentQ;
    fn mul(self, rhs: &LaurentQ) -> LaurentQ {
        if self.is_zero() || rhs.is_zero() {
            return LaurentQ::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        LaurentQ::new(self.min_deg + rhs.min_deg, coeffs)
    }
}

impl Mul for LaurentQ {
    type Output = LaurentQ;
    fn mul(self, rhs: LaurentQ) -> LaurentQ {
        &self * &rhs
    }
}

impl fmt::Display for LaurentQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (d, c) in self.terms() {
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            match (d, abs.is_one()) {
                (0, _) => write!(f, "{abs}")?,
                (_, true) => {}
                (_, false) => write!(f, "{abs}*")?,
            }
            match d {
                0 => {}
                1 => f.write_str("q")?,
                _ => write!(f, "q^{d}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentQ({self})")
    }
}

pub(crate) fn bigint_json(c: &BigInt) -> serde_json::Value {
    match c.to_i64() {
        Some(v) => serde_json::Value::from(v),
        None => serde_json::Value::String(c.to_string()),
    }
}

impl Serialize for LaurentQ {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let coeffs: Vec<serde_json::Value> = self.coeffs.iter().map(bigint_json).collect();
        let mut st = serializer.serialize_struct("LaurentQ", 2)?;
        st.serialize_field("min_deg", &self.min_deg)?;
        st.serialize_field("coeffs", &coeffs)?;
        st.end()
    }
}

/// Exponent vector of a monomial in `x_1..x_m`.
pub type Exponents = Vec<u32>;

/// Sparse polynomial in `x_1..x_m` with [`LaurentQ`] coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct SymPoly {
    num_vars: usize,
    terms: BTreeMap<Exponents, LaurentQ>,
}

impl SymPoly {
    pub fn zero(num_vars: usize) -> Self {
        SymPoly { num_vars, terms: BTreeMap::new() }
    }

    pub fn one(num_vars: usize) -> Self {
        SymPoly::term(vec![0; num_vars], LaurentQ::one())
    }

    /// The variable `x_{i+1}` (0-indexed).
    pub fn var(num_vars: usize, i: usize) -> Self {
        let mut e = vec![0; num_vars];
        e[i] = 1;
        SymPoly::term(e, LaurentQ::one())
    }

    pub fn term(exps: Exponents, coeff: LaurentQ) -> Self {
        let mut p = SymPoly::zero(exps.len());
        p.add_term(exps, &coeff);
        p
    }

    pub fn from_terms(num_vars: usize, terms: impl IntoIterator<Item = (Exponents, LaurentQ)>) -> Self {
        let mut p = SymPoly::zero(num_vars);
        for (e, c) in terms {
            p.add_term(e, &c);
        }
        p
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &LaurentQ)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &[u32]) -> LaurentQ {
        self.terms.get(exps).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, exps: Exponents, coeff: &LaurentQ) {
        assert_eq!(exps.len(), self.num_vars, "exponent vector length");
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// `self * q^qdeg * x^exps`.
    pub fn mul_monomial(&self, exps: &[u32], qdeg: i64) -> SymPoly {
        SymPoly {
            num_vars: self.num_vars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().zip(exps).map(|(a, b)| a + b).collect(), c.shifted(qdeg)))
                .collect(),
        }
    }

    pub fn scale(&self, c: &LaurentQ) -> SymPoly {
        let mut out = SymPoly::zero(self.num_vars);
        for (e, d) in &self.terms {
            out.add_term(e.clone(), &(d * c));
        }
        out
    }

    /// Exchanges `x_{i+1}` and `x_{j+1}`.
    pub fn swap_vars(&self, i: usize, j: usize) -> SymPoly {
        SymPoly {
            num_vars: self.num_vars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut e = e.clone();
                    e.swap(i, j);
                    (e, c.clone())
                })
                .collect(),
        }
    }

    /// Every coefficient evaluated at `q = 1`.
    pub fn at_q_one(&self) -> SymPoly {
        SymPoly::from_terms(
            self.num_vars,
            self.terms.iter().map(|(e, c)| (e.clone(), LaurentQ::monomial(c.at_one(), 0))),
        )
    }

    /// Sets the last variable to zero, dropping it.
    pub fn drop_last_var(&self) -> SymPoly {
        assert!(self.num_vars > 0);
        SymPoly {
            num_vars: self.num_vars - 1,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e[self.num_vars - 1] == 0)
                .map(|(e, c)| (e[..self.num_vars - 1].to_vec(), c.clone()))
                .collect(),
        }
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.terms.values().all(LaurentQ::has_nonnegative_coeffs)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("polynomial serializes")
    }
}

impl Serialize for SymPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term<'a> {
            exps: &'a [u32],
            coeff: &'a LaurentQ,
        }
        serializer.collect_seq(self.terms.iter().map(|(e, c)| Term { exps: e, coeff: c }))
    }
}

impl AddAssign<&SymPoly> for SymPoly {
    fn add_assign(&mut self, rhs: &SymPoly) {
        assert_eq!(self.num_vars, rhs.num_vars);
        for (e, c) in &rhs.terms {
            self.add_term(e.clone(), c);
        }
    }
}

impl SubAssign<&SymPoly> for SymPoly {
    fn sub_assign(&mut self, rhs: &SymPoly) {
        assert_eq!(self.num_vars, rhs.num_vars);
        for (e, c) in &rhs.terms {
            self.add_term(e.clone(), &-c.clone());
        }
    }
}

impl Add for &SymPoly {
    type Output = SymPoly;
    fn add(self, rhs: &SymPoly) -> SymPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &SymPoly {
    type Output = SymPoly;
    fn sub(self, rhs: &SymPoly) -> SymPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for SymPoly {
    type Output = SymPoly;
    fn neg(mut self) -> SymPoly {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Mul for &SymPoly {
    type Output = SymPoly;
    fn mul(self, rhs: &SymPoly) -> SymPoly {
        assert_eq!(self.num_vars, rhs.num_vars);
        let mut out = SymPoly::zero(self.num_vars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, &(ca * cb));
            }
        }
        out
    }
}

impl fmt::Display for SymPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &a)| a > 0)
                .map(|(i, &a)| if a == 1 { format!("x{}", i + 1) } else { format!("x{}^{a}", i + 1) })
                .collect();
            let unit = c == &LaurentQ::one();
            match (mono.is_empty(), unit) {
                (true, _) => write!(f, "({c})")?,
                (false, true) => f.write_str(&mono.join("*"))?,
                (false, false) => write!(f, "({c})*{}", mono.join("*"))?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SymPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SymPoly[{}]({self})", self.num_vars)
    }
}

/// Skew Schur polynomial `s_{outer/inner}(x_1..x_m)`, summed over
/// semistandard fillings built one horizontal strip per variable.
pub fn skew_schur(outer: &Partition, inner: &Partition, m: usize) -> SymPoly {
    if !outer.contains(inner) {
        return SymPoly::zero(m);
    }
    let mut states: BTreeMap<Partition, SymPoly> = BTreeMap::new();
    states.insert(inner.clone(), SymPoly::one(m));
    for var in 0..m {
        let mut next: BTreeMap<Partition, SymPoly> = BTreeMap::new();
        for (nu, poly) in &states {
            for step in strips_between(nu, outer, 1) {
                let mut exps = vec![0; m];
                exps[var] = (step.size() - nu.size()) as u32;
                *next.entry(step).or_insert_with(|| SymPoly::zero(m)) += &poly.mul_monomial(&exps, 0);
            }
        }
        states = next;
    }
    states.remove(outer).unwrap_or_else(|| SymPoly::zero(m))
}

pub fn schur_polynomial(lam: &Partition, m: usize) -> SymPoly {
    skew_schur(lam, &Partition::empty(), m)
}

/// All permutations of `0..m` with their signs (Heap's algorithm).
pub fn signed_permutations(m: usize) -> Vec<(Vec<usize>, i8)> {
    let mut perm: Vec<usize> = (0..m).collect();
    let mut out = vec![(perm.clone(), 1)];
    let mut c = vec![0; m];
    let mut sign = 1i8;
    let mut i = 1;
    while i < m {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            sign = -sign;
            out.push((perm.clone(), sign));
            c[i] += 1;
            i = 1;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out
}

/// `a_α = Σ_w sign(w) x^{w(α)}` over all permutations of the variables.
pub fn alternant(alpha: &[u32]) -> SymPoly {
    let m = alpha.len();
    let mut out = SymPoly::zero(m);
    for (w, sign) in signed_permutations(m) {
        let exps: Exponents = (0..m).map(|i| alpha[w[i]]).collect();
        out.add_term(exps, &LaurentQ::monomial(sign, 0));
    }
    out
}

pub fn is_symmetric(f: &SymPoly) -> bool {
    (0..f.num_vars().saturating_sub(1)).all(|i| &f.swap_vars(i, i + 1) == f)
}

/// Coefficients of a symmetric polynomial in the Schur basis.
pub type SchurExpansion = BTreeMap<Partition, LaurentQ>;

/// Expands a symmetric polynomial over Schur polynomials in the same number
/// of variables by repeatedly stripping the lex-greatest monomial.
pub fn schur_expand(f: &SymPoly) -> Result<SchurExpansion> {
    if !is_symmetric(f) {
        return Err(Error::NotSymmetric);
    }
    let m = f.num_vars();
    let mut rest = f.clone();
    let mut cache: HashMap<Partition, SymPoly> = HashMap::new();
    let mut out = SchurExpansion::new();
    while let Some((lead, c)) = rest.terms.iter().next_back().map(|(e, c)| (e.clone(), c.clone())) {
        if lead.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Invariant(format!("leading exponent {lead:?} is not a partition")));
        }
        let lam = Partition::from_sorted(lead.iter().map(|&a| a as usize).collect());
        let s = cache.entry(lam.clone()).or_insert_with(|| schur_polynomial(&lam, m));
        rest -= &s.scale(&c);
        out.insert(lam, c);
    }
    Ok(out)
}

/// `Σ c_λ s_λ(x_1..x_m)`.
pub fn schur_combination(expansion: &SchurExpansion, m: usize) -> SymPoly {
    let mut out = SymPoly::zero(m);
    for (lam, c) in expansion {
        out += &schur_polynomial(lam, m).scale(c);
    }
    out
}

pub fn expansion_json(expansion: &SchurExpansion) -> serde_json::Value {
    serde_json::Value::Array(
        expansion
            .iter()
            .map(|(lam, c)| serde_json::json!({ "partition": lam.to_string(), "coeff": c }))
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;
    use proptest::prelude::*;

    fn x(m: usize, i: usize) -> SymPoly {
        SymPoly::var(m, i)
    }

    fn mono(exps: &[u32], c: LaurentQ) -> SymPoly {
        SymPoly::term(exps.to_vec(), c)
    }

    #[test]
    fn laurent_basics() {
        let a = LaurentQ::from_ints(-1, &[1, 0, 2]);
        let b = LaurentQ::from_ints(0, &[3, -1]);
        assert_eq!((&a + &b).to_string(), "q^-1 + 3 + q");
        assert_eq!(&a - &a, LaurentQ::zero());
        assert_eq!(&a * &b, LaurentQ::from_ints(-1, &[3, -1, 6, -2]));
        assert_eq!(LaurentQ::from_ints(2, &[0, 0]), LaurentQ::zero());
        assert_eq!(LaurentQ::from_ints(0, &[0, 1]).min_deg(), 1);
        assert_eq!(a.at_one(), BigInt::from(3));
        assert_eq!(LaurentQ::from_ints(1, &[1, 1]).substitute_power(2), LaurentQ::from_ints(2, &[1, 0, 1]));
        let json = serde_json::to_value(LaurentQ::q_pow(2)).unwrap();
        assert_eq!(json, serde_json::json!({"min_deg": 2, "coeffs": [1]}));
    }

    #[test]
    fn big_coefficients_stay_exact() {
        let big = LaurentQ::monomial(BigInt::from(i64::MAX), 0);
        let sq = &big * &big;
        assert_eq!(sq.coeff(0), BigInt::from(i64::MAX) * BigInt::from(i64::MAX));
        let json = serde_json::to_value(&sq).unwrap();
        assert!(json["coeffs"][0].is_string());
    }

    #[test]
    fn schur_examples() {
        assert_eq!(schur_polynomial(&part![1], 2), &x(2, 0) + &x(2, 1));
        assert!(schur_polynomial(&part![1, 1, 1], 2).is_zero());
        assert_eq!(schur_polynomial(&part![2, 2], 2), mono(&[2, 2], LaurentQ::one()));
        assert_eq!(schur_polynomial(&part![], 3), SymPoly::one(3));
        // number of SSYT of shape (2,1) with entries ≤ 3 is 8
        let s21 = schur_polynomial(&part![2, 1], 3);
        let total: BigInt = s21.terms().map(|(_, c)| c.at_one()).sum();
        assert_eq!(total, BigInt::from(8));
    }

    #[test]
    fn alternant_examples() {
        let one = LaurentQ::one();
        assert_eq!(alternant(&[1, 0]), &mono(&[1, 0], one.clone()) - &mono(&[0, 1], one.clone()));
        assert!(alternant(&[1, 1]).is_zero());
        assert_eq!(alternant(&[2, 1]), &mono(&[2, 1], one.clone()) - &mono(&[1, 2], one));
        assert_eq!(signed_permutations(4).len(), 24);
        assert_eq!(signed_permutations(0).len(), 1);
    }

    #[test]
    fn symmetry_examples() {
        assert!(is_symmetric(&(&x(2, 0) + &x(2, 1))));
        assert!(!is_symmetric(&x(2, 0)));
        assert!(is_symmetric(&mono(&[2, 2], LaurentQ::one())));
    }

    #[test]
    fn expand_examples() {
        let s1 = &x(2, 0) + &x(2, 1);
        let e = schur_expand(&(&s1 * &s1)).unwrap();
        assert_eq!(e, [(part![2], LaurentQ::one()), (part![1, 1], LaurentQ::one())].into_iter().collect());

        let h2 = &(&mono(&[2, 0], LaurentQ::one()) + &mono(&[1, 1], LaurentQ::one())) + &mono(&[0, 2], LaurentQ::one());
        let e = schur_expand(&h2).unwrap();
        assert_eq!(e, [(part![2], LaurentQ::one())].into_iter().collect());

        let f = &(&mono(&[2, 0], LaurentQ::one()) + &mono(&[0, 2], LaurentQ::one()))
            + &mono(&[1, 1], LaurentQ::from_ints(0, &[1, 0, 1]));
        let e = schur_expand(&f).unwrap();
        assert_eq!(e, [(part![2], LaurentQ::one()), (part![1, 1], LaurentQ::q_pow(2))].into_iter().collect());

        assert_eq!(schur_expand(&x(2, 0)), Err(Error::NotSymmetric));
    }

    #[test]
    fn bialternant_identity() {
        for m in 1..=3 {
            let delta: Vec<u32> = Partition::staircase(m).iter().map(|&d| d as u32).collect();
            let a_delta = alternant(&delta);
            for lam in Partition::all_up_to(6) {
                if lam.len() > m {
                    continue;
                }
                let shifted: Vec<u32> = (0..m).map(|i| lam.get(i) as u32 + delta[i]).collect();
                assert_eq!(alternant(&shifted), &schur_polynomial(&lam, m) * &a_delta, "{lam:?} m={m}");
            }
        }
    }

    fn small_laurent() -> impl Strategy<Value = LaurentQ> {
        (-3i64..3, proptest::collection::vec(-4i64..5, 0..4)).prop_map(|(d, c)| LaurentQ::from_ints(d, &c))
    }

    fn small_poly(m: usize) -> impl Strategy<Value = SymPoly> {
        proptest::collection::vec((proptest::collection::vec(0u32..3, m), small_laurent()), 0..4)
            .prop_map(move |ts| SymPoly::from_terms(m, ts))
    }

    proptest! {
        #[test]
        fn laurent_ring_laws(a in small_laurent(), b in small_laurent(), c in small_laurent()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!((&a * &b).at_one(), a.at_one() * b.at_one());
            prop_assert_eq!((&a + &b).at_one(), a.at_one() + b.at_one());
        }

        #[test]
        fn sympoly_ring_laws(a in small_poly(2), b in small_poly(2), c in small_poly(2)) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!((&a * &b).at_q_one(), &a.at_q_one() * &b.at_q_one());
        }

        #[test]
        fn expansion_round_trip(coeffs in proptest::collection::vec((0usize..7, small_laurent()), 0..4)) {
            let m = 3;
            let pool: Vec<Partition> = Partition::all_up_to(4).into_iter().filter(|p| p.len() <= m).collect();
            let mut map = SchurExpansion::new();
            for (k, c) in coeffs {
                if !c.is_zero() {
                    map.insert(pool[k % pool.len()].clone(), c);
                }
            }
            let f = schur_combination(&map, m);
            prop_assert_eq!(schur_expand(&f).unwrap(), map);
        }

        #[test]
        fn alternant_antisymmetry(alpha in proptest::collection::vec(0u32..5, 3), i in 0usize..2) {
            let mut swapped = alpha.clone();
            swapped.swap(i, i + 1);
            prop_assert_eq!(alternant(&swapped), -alternant(&alpha));
        }
    }
}
