//! Dense linear-algebra helpers shared by the selection and recovery code.

use nalgebra::{DMatrix, DVector};

/// Smallest pivot accepted by the incremental Cholesky border update; below
/// this the factor is rebuilt from scratch with diagonal jitter.
pub const PIVOT_FLOOR: f64 = 1e-12;

/// First jitter magnitude tried when a covariance submatrix fails to factor.
pub const BASE_JITTER: f64 = 1e-10;

/// Cholesky of `m + jitter*I`, escalating `jitter` until the factorization
/// succeeds. Returns the lower factor and the jitter that was used. Panics
/// only if `m` contains non-finite entries.
pub fn cholesky_with_jitter(m: &DMatrix<f64>) -> (DMatrix<f64>, f64) {
    let n = m.nrows();
    if let Some(chol) = m.clone().cholesky() {
        return (chol.unpack(), 0.0);
    }
    let scale = m.diagonal().amax().max(1.0);
    let mut jitter = BASE_JITTER;
    loop {
        let mut jittered = m.clone();
        for i in 0..n {
            jittered[(i, i)] += jitter;
        }
        if let Some(chol) = jittered.cholesky() {
            return (chol.unpack(), jitter);
        }
        jitter *= 100.0;
        assert!(
            jitter <= 4.0 * scale * n as f64,
            "covariance matrix cannot be stabilized; non-finite entries?"
        );
    }
}

/// Incrementally grown Cholesky factor of the covariance submatrix indexed by
/// a collected-index list. Each `push` borders the factor in O(t^2); if the
/// new diagonal pivot falls below [`PIVOT_FLOOR`] the factor is rebuilt with
/// the jitter ladder.
#[derive(Debug, Clone)]
pub struct GrowingCholesky {
    indices: Vec<usize>,
    lower: DMatrix<f64>,
    jitter: f64,
}

impl GrowingCholesky {
    pub fn new() -> Self {
        GrowingCholesky {
            indices: Vec::new(),
            lower: DMatrix::zeros(0, 0),
            jitter: 0.0,
        }
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    /// Appends index `idx`, bordering the factor of `cov[indices, indices]`.
    pub fn push(&mut self, cov: &DMatrix<f64>, idx: usize) {
        let t = self.len();
        let diag = cov[(idx, idx)] + self.jitter;
        if t == 0 {
            if diag >= PIVOT_FLOOR {
                self.indices.push(idx);
                self.lower = DMatrix::from_element(1, 1, diag.sqrt());
                return;
            }
            self.indices.push(idx);
            self.refactor(cov);
            return;
        }
        let cross = DVector::from_fn(t, |i, _| cov[(self.indices[i], idx)]);
        let w = self.forward_solve(&cross);
        let pivot = diag - w.norm_squared();
        self.indices.push(idx);
        if pivot < PIVOT_FLOOR {
            self.refactor(cov);
            return;
        }
        let mut grown = DMatrix::zeros(t + 1, t + 1);
        grown.view_mut((0, 0), (t, t)).copy_from(&self.lower);
        for i in 0..t {
            grown[(t, i)] = w[i];
        }
        grown[(t, t)] = pivot.sqrt();
        self.lower = grown;
    }

    fn refactor(&mut self, cov: &DMatrix<f64>) {
        let t = self.len();
        let sub = DMatrix::from_fn(t, t, |i, j| cov[(self.indices[i], self.indices[j])]);
        let (lower, jitter) = cholesky_with_jitter(&sub);
        self.lower = lower;
        self.jitter = self.jitter.max(jitter).max(BASE_JITTER);
    }

    /// Solves `L y = rhs`.
    pub fn forward_solve(&self, rhs: &DVector<f64>) -> DVector<f64> {
        let t = self.len();
        debug_assert_eq!(rhs.len(), t);
        let mut y = DVector::zeros(t);
        for i in 0..t {
            let mut acc = rhs[i];
            for j in 0..i {
                acc -= self.lower[(i, j)] * y[j];
            }
            y[i] = acc / self.lower[(i, i)];
        }
        y
    }

    /// Solves `L L^T x = rhs`.
    pub fn solve(&self, rhs: &DVector<f64>) -> DVector<f64> {
        let t = self.len();
        let y = self.forward_solve(rhs);
        let mut x = DVector::zeros(t);
        for i in (0..t).rev() {
            let mut acc = y[i];
            for j in i + 1..t {
                acc -= self.lower[(j, i)] * x[j];
            }
            x[i] = acc / self.lower[(i, i)];
        }
        x
    }
}

/// Minimum-norm least-squares solution of `a z = b` via SVD, zeroing singular
/// values below `rel_cutoff * sigma_max`.
pub fn svd_least_squares(a: &DMatrix<f64>, b: &DVector<f64>, rel_cutoff: f64) -> DVector<f64> {
    if a.ncols() == 0 {
        return DVector::zeros(0);
    }
    let svd = a.clone().svd(true, true);
    let sigma_max = svd.singular_values.iter().cloned().fold(0.0_f64, f64::max);
    if sigma_max <= 0.0 {
        return DVector::zeros(a.ncols());
    }
    let eps = rel_cutoff * sigma_max;
    svd.solve(b, eps)
        .map(|m| DVector::from_column_slice(m.as_slice()))
        .unwrap_or_else(|_| DVector::zeros(a.ncols()))
}
