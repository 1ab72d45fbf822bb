//! Exact arithmetic in a quantum torus.
//!
//! Coefficients live in `Z[s, s^-1]` where `s = q^{1/2}`, so every half-integer
//! power of `q` is an integer power of `s`. A [`QuantumLaurent`] is a finite
//! combination of the normalized basis monomials `X^a`, multiplied through
//! `X^a X^b = q^{Λ(a,b)/2} X^{a+b}`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Index, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix is not skew-symmetric at ({row}, {col})")]
    NotSkewSymmetric { row: usize, col: usize },
    #[error("matrix rows have inconsistent lengths")]
    Ragged,
    #[error("division by zero")]
    DivisionByZero,
    #[error("not divisible")]
    NotDivisible,
}

/// Integer exponent vector, ordered lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExponentVector(Vec<i64>);

impl ExponentVector {
    pub fn new(coords: Vec<i64>) -> Self {
        ExponentVector(coords)
    }

    pub fn zero(dim: usize) -> Self {
        ExponentVector(vec![0; dim])
    }

    pub fn unit(dim: usize, i: usize) -> Self {
        let mut v = vec![0; dim];
        v[i] = 1;
        ExponentVector(v)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<i64> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    fn check_dim(&self, other: &Self) {
        assert_eq!(self.dim(), other.dim(), "exponent vectors of different length");
    }
}

impl Index<usize> for ExponentVector {
    type Output = i64;
    fn index(&self, i: usize) -> &i64 {
        &self.0[i]
    }
}

impl Add for &ExponentVector {
    type Output = ExponentVector;
    fn add(self, rhs: &ExponentVector) -> ExponentVector {
        self.check_dim(rhs);
        ExponentVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &ExponentVector {
    type Output = ExponentVector;
    fn sub(self, rhs: &ExponentVector) -> ExponentVector {
        self.check_dim(rhs);
        ExponentVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &ExponentVector {
    type Output = ExponentVector;
    fn neg(self) -> ExponentVector {
        ExponentVector(self.0.iter().map(|a| -a).collect())
    }
}

impl From<Vec<i64>> for ExponentVector {
    fn from(v: Vec<i64>) -> Self {
        ExponentVector(v)
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Laurent polynomial in `s = q^{1/2}` with integer coefficients.
///
/// Keys are powers of `s`; zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct QCoeff(BTreeMap<i64, BigInt>);

impl QCoeff {
    pub fn zero() -> Self {
        QCoeff(BTreeMap::new())
    }

    pub fn one() -> Self {
        QCoeff::monomial(0, BigInt::one())
    }

    /// `c * s^power`.
    pub fn monomial(power: i64, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        let mut map = BTreeMap::new();
        if !c.is_zero() {
            map.insert(power, c);
        }
        QCoeff(map)
    }

    /// Builds from `(power of s, coefficient)` pairs; repeated powers add up.
    pub fn from_pairs<I, C>(pairs: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut out = QCoeff::zero();
        for (p, c) in pairs {
            out.add_term(p, c.into());
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.0.iter().map(|(p, c)| (*p, c))
    }

    pub fn min_power(&self) -> Option<i64> {
        self.0.keys().next().copied()
    }

    pub fn max_power(&self) -> Option<i64> {
        self.0.keys().next_back().copied()
    }

    pub fn coefficient(&self, power: i64) -> BigInt {
        self.0.get(&power).cloned().unwrap_or_default()
    }

    fn add_term(&mut self, power: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.0.entry(power).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.0.remove(&power);
        }
    }

    /// Multiplies by `s^k`.
    pub fn shift(&self, k: i64) -> Self {
        QCoeff(self.0.iter().map(|(p, c)| (p + k, c.clone())).collect())
    }

    pub fn mul(&self, other: &QCoeff) -> QCoeff {
        let mut out = QCoeff::zero();
        for (p, a) in &self.0 {
            for (r, b) in &other.0 {
                out.add_term(p + r, a * b);
            }
        }
        out
    }

    /// Value at `q = 1`.
    pub fn eval_at_one(&self) -> BigInt {
        self.0.values().sum()
    }

    /// True when every coefficient is positive (the zero polynomial counts).
    pub fn is_nonnegative(&self) -> bool {
        self.0.values().all(|c| c.is_positive())
    }

    /// Bar involution `s -> s^-1`.
    pub fn bar(&self) -> QCoeff {
        QCoeff(self.0.iter().map(|(p, c)| (-p, c.clone())).collect())
    }

    /// Exact quotient in `Z[s, s^-1]`, or `None` when `other` does not divide `self`.
    pub fn exact_div(&self, other: &QCoeff) -> Option<QCoeff> {
        let (d_lo, d_hi) = (other.min_power()?, other.max_power()?);
        if self.is_zero() {
            return Some(QCoeff::zero());
        }
        let lowest = self.min_power()? - d_lo;
        let lead = &other.0[&d_hi];
        let mut rem = self.clone();
        let mut quot = QCoeff::zero();
        while let Some(top) = rem.max_power() {
            let power = top - d_hi;
            if power < lowest {
                return None;
            }
            let c = &rem.0[&top];
            if !(c % lead).is_zero() {
                return None;
            }
            let factor = c / lead;
            for (p, b) in &other.0 {
                rem.add_term(p + power, -(&factor * b));
            }
            quot.add_term(power, factor);
        }
        Some(quot)
    }
}

impl Add for &QCoeff {
    type Output = QCoeff;
    fn add(self, rhs: &QCoeff) -> QCoeff {
        let mut out = self.clone();
        for (p, c) in &rhs.0 {
            out.add_term(*p, c.clone());
        }
        out
    }
}

impl Neg for &QCoeff {
    type Output = QCoeff;
    fn neg(self) -> QCoeff {
        QCoeff(self.0.iter().map(|(p, c)| (*p, -c)).collect())
    }
}

fn write_q_power(f: &mut fmt::Formatter<'_>, s_power: i64) -> fmt::Result {
    if s_power % 2 == 0 {
        match s_power / 2 {
            1 => write!(f, "q"),
            k => write!(f, "q^{k}"),
        }
    } else {
        write!(f, "q^{s_power}/2")
    }
}

impl fmt::Display for QCoeff {
    /// Ascending powers, e.g. `q^-1 + 1 + q` or `q^-1/2 + q^1/2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        for (i, (p, c)) in self.0.iter().enumerate() {
            let magnitude = c.abs();
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if *p == 0 {
                write!(f, "{magnitude}")?;
            } else {
                if !magnitude.is_one() {
                    write!(f, "{magnitude}")?;
                }
                write_q_power(f, *p)?;
            }
        }
        Ok(())
    }
}

/// Skew-symmetric integer form `Λ(a, b) = aᵀ Λ b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LambdaForm {
    dim: usize,
    entries: Vec<i64>,
}

impl LambdaForm {
    pub fn new(rows: Vec<Vec<i64>>) -> Result<Self, AlgebraError> {
        let dim = rows.len();
        if rows.iter().any(|r| r.len() != dim) {
            return Err(AlgebraError::Ragged);
        }
        let entries: Vec<i64> = rows.into_iter().flatten().collect();
        for i in 0..dim {
            for j in 0..dim {
                if entries[i * dim + j] != -entries[j * dim + i] {
                    return Err(AlgebraError::NotSkewSymmetric { row: i, col: j });
                }
            }
        }
        Ok(LambdaForm { dim, entries })
    }

    pub fn zero(dim: usize) -> Self {
        LambdaForm { dim, entries: vec![0; dim * dim] }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.dim + j]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.entries.chunks(self.dim).map(|r| r.to_vec()).collect()
    }

    pub fn scaled(&self, factor: i64) -> Self {
        LambdaForm { dim: self.dim, entries: self.entries.iter().map(|e| e * factor).collect() }
    }

    pub fn eval(&self, a: &[i64], b: &[i64]) -> i64 {
        let mut total = 0;
        for (i, &ai) in a.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            let row = &self.entries[i * self.dim..(i + 1) * self.dim];
            total += ai * row.iter().zip(b).map(|(l, bj)| l * bj).sum::<i64>();
        }
        total
    }

    /// Power of `s` in `X_1^{a_1} ⋯ X_m^{a_m} = s^k X^a`, namely `Σ_{i<j} a_i a_j Λ_ij`.
    pub fn ordered_product_shift(&self, a: &[i64]) -> i64 {
        let mut total = 0;
        for i in 0..a.len() {
            for j in i + 1..a.len() {
                total += a[i] * a[j] * self.get(i, j);
            }
        }
        total
    }
}

/// Finite `Z[s^±1]`-combination of normalized monomials `X^a`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuantumLaurent {
    dim: usize,
    terms: BTreeMap<ExponentVector, QCoeff>,
}

impl QuantumLaurent {
    pub fn zero(dim: usize) -> Self {
        QuantumLaurent { dim, terms: BTreeMap::new() }
    }

    pub fn one(dim: usize) -> Self {
        Self::monomial(ExponentVector::zero(dim), QCoeff::one())
    }

    pub fn monomial(exponent: ExponentVector, coeff: QCoeff) -> Self {
        let mut out = QuantumLaurent::zero(exponent.dim());
        out.add_term(exponent, coeff);
        out
    }

    /// `X^{e_i}`.
    pub fn generator(dim: usize, i: usize) -> Self {
        Self::monomial(ExponentVector::unit(dim, i), QCoeff::one())
    }

    pub fn dim(&self) -> usize {
        self.dim
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

    /// Terms in ascending lexicographic order of exponents.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&ExponentVector, &QCoeff)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, exponent: &ExponentVector) -> QCoeff {
        self.terms.get(exponent).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, exponent: ExponentVector, coeff: QCoeff) {
        assert_eq!(exponent.dim(), self.dim, "exponent length does not match torus rank");
        if coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(&exponent) {
            Some(existing) => {
                let sum = &*existing + &coeff;
                if sum.is_zero() {
                    self.terms.remove(&exponent);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(exponent, coeff);
            }
        }
    }

    fn leading(&self) -> Option<(&ExponentVector, &QCoeff)> {
        self.terms.iter().next_back()
    }

    fn check_dim(&self, other: &QuantumLaurent) -> Result<(), AlgebraError> {
        if self.dim != other.dim {
            return Err(AlgebraError::DimensionMismatch { expected: self.dim, found: other.dim });
        }
        Ok(())
    }

    pub fn add(&self, other: &QuantumLaurent) -> Result<QuantumLaurent, AlgebraError> {
        self.check_dim(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &QuantumLaurent) -> Result<QuantumLaurent, AlgebraError> {
        self.check_dim(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c);
        }
        Ok(out)
    }

    /// Multiplies every coefficient by `s^k`.
    pub fn shift(&self, k: i64) -> QuantumLaurent {
        QuantumLaurent { dim: self.dim, terms: self.terms.iter().map(|(e, c)| (e.clone(), c.shift(k))).collect() }
    }

    /// Product in the quantum torus defined by `lambda`.
    pub fn qmul(&self, other: &QuantumLaurent, lambda: &LambdaForm) -> Result<QuantumLaurent, AlgebraError> {
        self.check_dim(other)?;
        if lambda.dim() != self.dim {
            return Err(AlgebraError::DimensionMismatch { expected: self.dim, found: lambda.dim() });
        }
        let mut out = QuantumLaurent::zero(self.dim);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let twist = lambda.eval(a.coords(), b.coords());
                out.add_term(a + b, ca.mul(cb).shift(twist));
            }
        }
        Ok(out)
    }

    /// Evaluates every coefficient at `q = 1`.
    pub fn specialize_q1(&self) -> Laurent {
        let mut out = Laurent::zero(self.dim);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), c.eval_at_one());
        }
        out
    }

    /// Every coefficient lies in `N[q^±1/2]`.
    pub fn is_positive(&self) -> bool {
        self.terms.values().all(QCoeff::is_nonnegative)
    }

    /// Coefficient-wise bar involution `q^{1/2} -> q^{-1/2}`.
    pub fn bar_coefficients(&self) -> QuantumLaurent {
        QuantumLaurent { dim: self.dim, terms: self.terms.iter().map(|(e, c)| (e.clone(), c.bar())).collect() }
    }

    fn coordinate_bounds(&self) -> Option<(Vec<i64>, Vec<i64>)> {
        let mut iter = self.terms.keys();
        let first = iter.next()?;
        let mut lo = first.coords().to_vec();
        let mut hi = lo.clone();
        for e in iter {
            for (i, &c) in e.coords().iter().enumerate() {
                lo[i] = lo[i].min(c);
                hi[i] = hi[i].max(c);
            }
        }
        Some((lo, hi))
    }

    /// Returns `Q` with `Q · divisor = self`.
    ///
    /// Leading terms (lex order) are eliminated one at a time. Any quotient
    /// term must sit inside the coordinate box `[min(N) - min(D), max(N) - max(D)]`,
    /// which bounds the loop when no quotient exists.
    pub fn exact_right_divide(
        &self,
        divisor: &QuantumLaurent,
        lambda: &LambdaForm,
    ) -> Result<QuantumLaurent, AlgebraError> {
        self.check_dim(divisor)?;
        let (d_exp, d_coeff) = divisor.leading().ok_or(AlgebraError::DivisionByZero)?;
        let (d_exp, d_coeff) = (d_exp.clone(), d_coeff.clone());
        let mut quotient = QuantumLaurent::zero(self.dim);
        let Some((n_lo, n_hi)) = self.coordinate_bounds() else {
            return Ok(quotient);
        };
        let (d_lo, d_hi) = divisor.coordinate_bounds().expect("nonzero divisor");
        let lo: Vec<i64> = n_lo.iter().zip(&d_lo).map(|(a, b)| a - b).collect();
        let hi: Vec<i64> = n_hi.iter().zip(&d_hi).map(|(a, b)| a - b).collect();

        let mut rem = self.clone();
        while let Some((r_exp, r_coeff)) = rem.leading() {
            let exp = r_exp - &d_exp;
            let inside = exp.coords().iter().enumerate().all(|(i, &c)| lo[i] <= c && c <= hi[i]);
            if !inside {
                return Err(AlgebraError::NotDivisible);
            }
            let twist = lambda.eval(exp.coords(), d_exp.coords());
            let coeff = r_coeff.exact_div(&d_coeff.shift(twist)).ok_or(AlgebraError::NotDivisible)?;
            let term = QuantumLaurent::monomial(exp.clone(), coeff.clone());
            rem = rem.sub(&term.qmul(divisor, lambda)?)?;
            quotient.add_term(exp, coeff);
        }
        Ok(quotient)
    }
}

impl fmt::Display for QuantumLaurent {
    /// Terms sorted lex-descending, e.g. `(q^-1 + 1 + q)·X^(-3,0,1,2) + X^(1,-2,0,0)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if *c == QCoeff::one() {
                write!(f, "X^{e}")?;
            } else if c.0.len() == 1 && c.0.values().all(|v| v.is_positive()) {
                write!(f, "{c}·X^{e}")?;
            } else {
                write!(f, "({c})·X^{e}")?;
            }
        }
        Ok(())
    }
}

/// Commutative Laurent polynomial with integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Laurent {
    dim: usize,
    terms: BTreeMap<ExponentVector, BigInt>,
}

impl Laurent {
    pub fn zero(dim: usize) -> Self {
        Laurent { dim, terms: BTreeMap::new() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&ExponentVector, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, e: &ExponentVector) -> BigInt {
        self.terms.get(e).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, exponent: ExponentVector, c: BigInt) {
        assert_eq!(exponent.dim(), self.dim);
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exponent.clone()).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&exponent);
        }
    }

    pub fn mul(&self, other: &Laurent) -> Laurent {
        assert_eq!(self.dim, other.dim);
        let mut out = Laurent::zero(self.dim);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.add_term(a + b, ca * cb);
            }
        }
        out
    }
}

impl fmt::Display for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if c.is_one() {
                write!(f, "x^{e}")?;
            } else {
                write!(f, "{c}·x^{e}")?;
            }
        }
        Ok(())
    }
}
