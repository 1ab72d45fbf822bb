//! Geometric-type seeds and quantum seeds.
//!
//! An [`ExtendedB`] is the `m × n` matrix `B̃` whose top `n × n` block is the
//! exchange matrix and whose remaining rows record frozen exponents. A
//! [`QuantumSeed`] pairs it with a skew form `Λ` such that `B̃ᵀΛ = (d·I | 0)`.

use std::fmt;

use thiserror::Error;

use crate::qalgebra::{AlgebraError, LambdaForm};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeedError {
    #[error("matrix rows have inconsistent lengths")]
    Ragged,
    #[error("extended exchange matrix must have at least as many rows as columns ({rows} < {cols})")]
    TooFewRows { rows: usize, cols: usize },
    #[error("exchange matrix is not skew-symmetric at ({row}, {col})")]
    NotSkewSymmetric { row: usize, col: usize },
    #[error("mutation direction {k} out of range 0..{n}")]
    DirectionOutOfRange { k: usize, n: usize },
    #[error("Lambda has size {found}, expected {expected} (number of rows of Btilde)")]
    LambdaSize { expected: usize, found: usize },
    #[error(
        "(Btilde, Lambda) not compatible: (Btildeᵀ·Lambda)[{row}][{col}] = {found}, expected {expected}; \
         a compatible Lambda exists only for full-rank Btilde"
    )]
    NotCompatible { row: usize, col: usize, found: i64, expected: i64 },
    #[error("compatibility scalar must be positive, found {0}")]
    NonPositiveScalar(i64),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Dense `m × n` integer matrix with `B̃` conventions.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExtendedB {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl ExtendedB {
    pub fn new(rows: Vec<Vec<i64>>) -> Result<Self, SeedError> {
        let m = rows.len();
        let n = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != n) {
            return Err(SeedError::Ragged);
        }
        if m < n {
            return Err(SeedError::TooFewRows { rows: m, cols: n });
        }
        let b = ExtendedB { rows: m, cols: n, data: rows.into_iter().flatten().collect() };
        for i in 0..n {
            for j in 0..n {
                if b.get(i, j) != -b.get(j, i) {
                    return Err(SeedError::NotSkewSymmetric { row: i, col: j });
                }
            }
        }
        Ok(b)
    }

    /// `[B; I]`: principal coefficients on top of a square exchange matrix.
    pub fn principal(exchange: &[Vec<i64>]) -> Result<Self, SeedError> {
        let n = exchange.len();
        let mut rows: Vec<Vec<i64>> = exchange.to_vec();
        for i in 0..n {
            let mut r = vec![0; n];
            r[i] = 1;
            rows.push(r);
        }
        Self::new(rows)
    }

    /// Number of rows `m` (mutable plus frozen).
    pub fn rows(&self) -> usize {
        self.rows
    }

    /// Number of mutable directions `n`.
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.cols + j]
    }

    fn set(&mut self, i: usize, j: usize, v: i64) {
        self.data[i * self.cols + j] = v;
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        self.data.chunks(self.cols.max(1)).take(self.rows).map(|r| r.to_vec()).collect()
    }

    /// The square exchange block.
    pub fn exchange(&self) -> Vec<Vec<i64>> {
        self.to_rows().into_iter().take(self.cols).collect()
    }

    pub fn column(&self, k: usize) -> Vec<i64> {
        (0..self.rows).map(|i| self.get(i, k)).collect()
    }

    /// Matrix mutation in direction `k`, applied to every row.
    pub fn mutate(&self, k: usize) -> Result<ExtendedB, SeedError> {
        if k >= self.cols {
            return Err(SeedError::DirectionOutOfRange { k, n: self.cols });
        }
        let mut out = self.clone();
        for i in 0..self.rows {
            for j in 0..self.cols {
                let b = self.get(i, j);
                let v = if i == k || j == k {
                    -b
                } else {
                    let (bik, bkj) = (self.get(i, k), self.get(k, j));
                    b + bik.max(0) * bkj.max(0) - (-bik).max(0) * (-bkj).max(0)
                };
                out.set(i, j, v);
            }
        }
        Ok(out)
    }

    /// Frozen exponent vectors `y_j` read off the bottom block, one per column.
    pub fn tropical_y(&self) -> Vec<TropicalY> {
        (0..self.cols).map(|j| TropicalY((self.cols..self.rows).map(|i| self.get(i, j)).collect())).collect()
    }
}

impl fmt::Display for ExtendedB {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.to_rows().iter().enumerate() {
            if i == self.cols && self.rows > self.cols {
                writeln!(f, "--")?;
            }
            let cells: Vec<String> = row.iter().map(|v| format!("{v:>3}")).collect();
            writeln!(f, "[{}]", cells.join(" "))?;
        }
        Ok(())
    }
}

/// Returns `d` when `B̃ᵀΛ = (d·I | 0)`.
pub fn check_compatible(btilde: &ExtendedB, lambda: &LambdaForm) -> Result<i64, SeedError> {
    let (m, n) = (btilde.rows(), btilde.cols());
    if lambda.dim() != m {
        return Err(SeedError::LambdaSize { expected: m, found: lambda.dim() });
    }
    let entry = |i: usize, j: usize| (0..m).map(|l| btilde.get(l, i) * lambda.get(l, j)).sum::<i64>();
    if n == 0 {
        return Ok(1);
    }
    let d = entry(0, 0);
    if d <= 0 {
        // report as a mismatch against the smallest admissible scalar
        if d == 0 {
            return Err(SeedError::NotCompatible { row: 0, col: 0, found: 0, expected: 1 });
        }
        return Err(SeedError::NonPositiveScalar(d));
    }
    for i in 0..n {
        for j in 0..m {
            let expected = if i == j { d } else { 0 };
            let found = entry(i, j);
            if found != expected {
                return Err(SeedError::NotCompatible { row: i, col: j, found, expected });
            }
        }
    }
    Ok(d)
}

/// `Λ'` for a mutation at `k`: rows and columns other than `k` are kept, and
/// `Λ'_{ik} = Λ(e_i, −e_k + Σ_l [b_lk]_+ e_l)`.
pub fn mutate_lambda(lambda: &LambdaForm, btilde: &ExtendedB, k: usize) -> Result<LambdaForm, SeedError> {
    check_compatible(btilde, lambda)?;
    let m = lambda.dim();
    if k >= btilde.cols() {
        return Err(SeedError::DirectionOutOfRange { k, n: btilde.cols() });
    }
    let mut direction = vec![0i64; m];
    for (l, slot) in direction.iter_mut().enumerate() {
        *slot = btilde.get(l, k).max(0);
    }
    direction[k] -= 1;
    let mut rows = lambda.rows();
    for i in 0..m {
        if i == k {
            continue;
        }
        let mut unit = vec![0i64; m];
        unit[i] = 1;
        let v = lambda.eval(&unit, &direction);
        rows[i][k] = v;
        rows[k][i] = -v;
    }
    rows[k][k] = 0;
    Ok(LambdaForm::new(rows)?)
}

/// A compatible pair `(B̃, Λ)` with its scalar `d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuantumSeed {
    btilde: ExtendedB,
    lambda: LambdaForm,
    d: i64,
}

impl QuantumSeed {
    pub fn new(btilde: ExtendedB, lambda: LambdaForm) -> Result<Self, SeedError> {
        let d = check_compatible(&btilde, &lambda)?;
        Ok(QuantumSeed { btilde, lambda, d })
    }

    /// Principal coefficients `[B; I]` with the quantization
    /// `Λ = [[Λ₁₁, −(I + Λ₁₁B)], [I + BΛ₁₁, −B − BΛ₁₁B]]`.
    ///
    /// Every skew `Λ₁₁` yields `d = 1`; `Λ₁₁ = 0` is the standard principal
    /// quantization `[[0, −I], [I, −B]]`.
    pub fn principal(exchange: &[Vec<i64>], top_left: Option<&[Vec<i64>]>) -> Result<Self, SeedError> {
        let n = exchange.len();
        let btilde = ExtendedB::principal(exchange)?;
        let zero = vec![vec![0; n]; n];
        let l11 = top_left.unwrap_or(&zero);
        let mul = |a: &[Vec<i64>], b: &[Vec<i64>]| -> Vec<Vec<i64>> {
            (0..n).map(|i| (0..n).map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum()).collect()).collect()
        };
        let bl = mul(exchange, l11);
        let lb = mul(l11, exchange);
        let blb = mul(&bl, exchange);
        let mut rows = vec![vec![0i64; 2 * n]; 2 * n];
        for i in 0..n {
            for j in 0..n {
                let id = i64::from(i == j);
                rows[i][j] = l11[i][j];
                rows[i][n + j] = -(id + lb[i][j]);
                rows[n + i][j] = id + bl[i][j];
                rows[n + i][n + j] = -exchange[i][j] - blb[i][j];
            }
        }
        Self::new(btilde, LambdaForm::new(rows)?)
    }

    pub fn btilde(&self) -> &ExtendedB {
        &self.btilde
    }

    pub fn lambda(&self) -> &LambdaForm {
        &self.lambda
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn rank(&self) -> usize {
        self.btilde.cols()
    }

    pub fn dim(&self) -> usize {
        self.btilde.rows()
    }

    pub fn mutate(&self, k: usize) -> Result<QuantumSeed, SeedError> {
        let lambda = mutate_lambda(&self.lambda, &self.btilde, k)?;
        let btilde = self.btilde.mutate(k)?;
        QuantumSeed::new(btilde, lambda)
    }

    /// Same seed with `Λ` multiplied by `factor` (so `d` scales too).
    pub fn scaled(&self, factor: i64) -> Result<QuantumSeed, SeedError> {
        QuantumSeed::new(self.btilde.clone(), self.lambda.scaled(factor))
    }
}

/// Element of `Trop(u_1, …, u_l)` stored as its exponent vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TropicalY(pub Vec<i64>);

impl TropicalY {
    /// Tropical sum: componentwise minimum.
    pub fn oplus(&self, other: &TropicalY) -> TropicalY {
        TropicalY(self.0.iter().zip(&other.0).map(|(a, b)| *a.min(b)).collect())
    }

    pub fn one(len: usize) -> TropicalY {
        TropicalY(vec![0; len])
    }

    pub fn inverse(&self) -> TropicalY {
        TropicalY(self.0.iter().map(|a| -a).collect())
    }

    fn times_power(&self, other: &TropicalY, power: i64) -> TropicalY {
        TropicalY(self.0.iter().zip(&other.0).map(|(a, b)| a + power * b).collect())
    }
}

/// `y_k ↦ y_k^{-1}`, `y_j ↦ y_j y_k^{[b_kj]_+} (1 ⊕ y_k)^{-b_kj}`.
pub fn mutate_tropical_y(ys: &[TropicalY], exchange: &[Vec<i64>], k: usize) -> Result<Vec<TropicalY>, SeedError> {
    let n = ys.len();
    if k >= n {
        return Err(SeedError::DirectionOutOfRange { k, n });
    }
    let yk = &ys[k];
    let one_plus = TropicalY::one(yk.0.len()).oplus(yk);
    Ok(ys
        .iter()
        .enumerate()
        .map(|(j, yj)| {
            if j == k {
                yk.inverse()
            } else {
                let bkj = exchange[k][j];
                yj.times_power(yk, bkj.max(0)).times_power(&one_plus, -bkj)
            }
        })
        .collect())
}
