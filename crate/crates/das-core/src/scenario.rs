//! Reproducible problem instances for the three collection regimes, plus the
//! shared collection-state bookkeeping.
//!
//! All generators are pure functions of their arguments and a seed; equal
//! arguments produce bit-identical instances. Instances serialize to JSON with
//! matrices stored as row-major arrays so runs can be replayed elsewhere.

use nalgebra::{DMatrix, DVector};
use rand::Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use crate::error::{DasError, Result};
use crate::linalg;
use crate::rng::{sub_rng, STREAM_INSTANCE};

/// Row-major matrix payload used in the JSON form of every scene type.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MatrixRepr {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<f64>,
}

impl MatrixRepr {
    fn from_matrix(m: &DMatrix<f64>) -> Self {
        let mut data = Vec::with_capacity(m.nrows() * m.ncols());
        for i in 0..m.nrows() {
            for j in 0..m.ncols() {
                data.push(m[(i, j)]);
            }
        }
        MatrixRepr {
            rows: m.nrows(),
            cols: m.ncols(),
            data,
        }
    }

    fn into_matrix(self) -> std::result::Result<DMatrix<f64>, String> {
        if self.data.len() != self.rows * self.cols {
            return Err(format!(
                "matrix payload holds {} values, expected {}x{}",
                self.data.len(),
                self.rows,
                self.cols
            ));
        }
        Ok(DMatrix::from_row_iterator(
            self.rows,
            self.cols,
            self.data.into_iter(),
        ))
    }
}

// ---------------------------------------------------------------------------
// Gaussian field
// ---------------------------------------------------------------------------

/// Nodes in the unit square with an exp-distance correlation structure and one
/// sampled measurement vector.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "GaussianFieldRepr", into = "GaussianFieldRepr")]
pub struct GaussianField {
    pub num_nodes: usize,
    /// Node coordinates `u_k` in `[0,1]^2`.
    pub positions: Vec<[f64; 2]>,
    /// `cov[i][k] = exp(-||u_i - u_k||)`; unit diagonal. Stored unjittered.
    pub cov: DMatrix<f64>,
    /// One draw from `N(0, cov)`.
    pub x: DVector<f64>,
    pub seed: u64,
}

#[derive(Serialize, Deserialize)]
struct GaussianFieldRepr {
    num_nodes: usize,
    seed: u64,
    positions: Vec<[f64; 2]>,
    cov: MatrixRepr,
    x: Vec<f64>,
}

impl From<GaussianField> for GaussianFieldRepr {
    fn from(f: GaussianField) -> Self {
        GaussianFieldRepr {
            num_nodes: f.num_nodes,
            seed: f.seed,
            positions: f.positions,
            cov: MatrixRepr::from_matrix(&f.cov),
            x: f.x.iter().cloned().collect(),
        }
    }
}

impl TryFrom<GaussianFieldRepr> for GaussianField {
    type Error = String;

    fn try_from(r: GaussianFieldRepr) -> std::result::Result<Self, String> {
        let cov = r.cov.into_matrix()?;
        if r.positions.len() != r.num_nodes || cov.nrows() != r.num_nodes || r.x.len() != r.num_nodes
        {
            return Err("gaussian field payload dimensions disagree".into());
        }
        Ok(GaussianField {
            num_nodes: r.num_nodes,
            positions: r.positions,
            cov,
            x: DVector::from_vec(r.x),
            seed: r.seed,
        })
    }
}

impl GaussianField {
    /// Builds the kernel covariance from explicit positions and samples one
    /// measurement vector. Useful for hand-placed fixtures; `gen_gaussian_field`
    /// draws the positions too.
    pub fn from_positions(positions: Vec<[f64; 2]>, seed: u64) -> Result<Self> {
        if positions.is_empty() {
            return Err(DasError::invalid("node count must be at least 1"));
        }
        let k = positions.len();
        let cov = DMatrix::from_fn(k, k, |i, j| {
            let dx = positions[i][0] - positions[j][0];
            let dy = positions[i][1] - positions[j][1];
            (-(dx * dx + dy * dy).sqrt()).exp()
        });
        // Sample x ~ N(0, cov) through a jittered Cholesky factor; the stored
        // covariance stays unjittered.
        let mut jittered = cov.clone();
        for i in 0..k {
            jittered[(i, i)] += linalg::BASE_JITTER;
        }
        let (lower, _) = linalg::cholesky_with_jitter(&jittered);
        let mut rng = sub_rng(seed, &[STREAM_INSTANCE, 2]);
        let z = DVector::from_fn(k, |_, _| rng.sample::<f64, _>(StandardNormal));
        let x = lower * z;
        Ok(GaussianField {
            num_nodes: k,
            positions,
            cov,
            x,
            seed,
        })
    }

    pub fn distance(&self, i: usize, j: usize) -> f64 {
        let dx = self.positions[i][0] - self.positions[j][0];
        let dy = self.positions[i][1] - self.positions[j][1];
        (dx * dx + dy * dy).sqrt()
    }
}

/// Uniform node placement in the unit square with the exp-distance kernel.
pub fn gen_gaussian_field(num_nodes: usize, seed: u64) -> Result<GaussianField> {
    if num_nodes == 0 {
        return Err(DasError::invalid("node count must be at least 1"));
    }
    let mut rng = sub_rng(seed, &[STREAM_INSTANCE, 1]);
    let positions: Vec<[f64; 2]> = (0..num_nodes)
        .map(|_| [rng.gen::<f64>(), rng.gen::<f64>()])
        .collect();
    GaussianField::from_positions(positions, seed)
}

// ---------------------------------------------------------------------------
// Sparse scene
// ---------------------------------------------------------------------------

/// A dictionary `B` (one row per node), an exactly `S`-sparse coefficient
/// vector `s`, and the induced measurements `x = B s`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "SparseSceneRepr", into = "SparseSceneRepr")]
pub struct SparseScene {
    pub num_nodes: usize,
    pub dict_size: usize,
    pub sparsity: usize,
    /// `num_nodes x dict_size`; row `k` is the measurement vector of node `k`,
    /// scaled to unit norm.
    pub dictionary: DMatrix<f64>,
    /// Sparse coefficients with exactly `sparsity` nonzero entries.
    pub coeffs: DVector<f64>,
    pub x: DVector<f64>,
    pub seed: u64,
}

#[derive(Serialize, Deserialize)]
struct SparseSceneRepr {
    num_nodes: usize,
    dict_size: usize,
    sparsity: usize,
    seed: u64,
    dictionary: MatrixRepr,
    coeffs: Vec<f64>,
    x: Vec<f64>,
}

impl From<SparseScene> for SparseSceneRepr {
    fn from(s: SparseScene) -> Self {
        SparseSceneRepr {
            num_nodes: s.num_nodes,
            dict_size: s.dict_size,
            sparsity: s.sparsity,
            seed: s.seed,
            dictionary: MatrixRepr::from_matrix(&s.dictionary),
            coeffs: s.coeffs.iter().cloned().collect(),
            x: s.x.iter().cloned().collect(),
        }
    }
}

impl TryFrom<SparseSceneRepr> for SparseScene {
    type Error = String;

    fn try_from(r: SparseSceneRepr) -> std::result::Result<Self, String> {
        let dictionary = r.dictionary.into_matrix()?;
        if dictionary.nrows() != r.num_nodes
            || dictionary.ncols() != r.dict_size
            || r.coeffs.len() != r.dict_size
            || r.x.len() != r.num_nodes
        {
            return Err("sparse scene payload dimensions disagree".into());
        }
        Ok(SparseScene {
            num_nodes: r.num_nodes,
            dict_size: r.dict_size,
            sparsity: r.sparsity,
            dictionary,
            coeffs: DVector::from_vec(r.coeffs),
            x: DVector::from_vec(r.x),
            seed: r.seed,
        })
    }
}

impl SparseScene {
    /// Indices of the nonzero coefficients, ascending.
    pub fn support(&self) -> Vec<usize> {
        (0..self.dict_size).filter(|&m| self.coeffs[m] != 0.0).collect()
    }
}

/// Correlated-row dictionary: `B[k][m] = exp(-|k/K - c_m| / l)` with centers
/// `c_m = (m + 1/2)/M` and length-scale `l = 2/M`, rows scaled to unit norm.
/// Support drawn uniformly over size-`sparsity` subsets, nonzeros standard
/// normal.
pub fn gen_sparse_scene(
    num_nodes: usize,
    dict_size: usize,
    sparsity: usize,
    seed: u64,
) -> Result<SparseScene> {
    if sparsity == 0 {
        return Err(DasError::invalid("sparsity must be at least 1"));
    }
    if sparsity > dict_size {
        return Err(DasError::invalid(format!(
            "sparsity {} exceeds dictionary size {}",
            sparsity, dict_size
        )));
    }
    if dict_size > num_nodes {
        return Err(DasError::invalid(format!(
            "dictionary size {} exceeds node count {}",
            dict_size, num_nodes
        )));
    }
    let mut rng = sub_rng(seed, &[STREAM_INSTANCE, 1]);
    let length_scale = 2.0 / dict_size as f64;
    let mut dictionary = DMatrix::from_fn(num_nodes, dict_size, |k, m| {
        let t = k as f64 / num_nodes as f64;
        let center = (m as f64 + 0.5) / dict_size as f64;
        (-(t - center).abs() / length_scale).exp()
    });
    for k in 0..num_nodes {
        let norm = dictionary.row(k).norm();
        if norm > 0.0 {
            for m in 0..dict_size {
                dictionary[(k, m)] /= norm;
            }
        }
    }
    // support: partial Fisher-Yates over 0..M, first `sparsity` entries
    let mut pool: Vec<usize> = (0..dict_size).collect();
    for i in 0..sparsity {
        let j = rng.gen_range(i..pool.len());
        pool.swap(i, j);
    }
    let mut support: Vec<usize> = pool[..sparsity].to_vec();
    support.sort_unstable();
    let mut coeffs = DVector::zeros(dict_size);
    for &m in &support {
        coeffs[m] = rng.sample::<f64, _>(StandardNormal);
    }
    let x = &dictionary * &coeffs;
    Ok(SparseScene {
        num_nodes,
        dict_size,
        sparsity,
        dictionary,
        coeffs,
        x,
        seed,
    })
}

// ---------------------------------------------------------------------------
// Query scene
// ---------------------------------------------------------------------------

/// A linear query `y = G x` over Bernoulli-Gaussian measurements.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "QuerySceneRepr", into = "QuerySceneRepr")]
pub struct QueryScene {
    pub num_nodes: usize,
    pub out_dim: usize,
    /// `out_dim x num_nodes` combining matrix with i.i.d. standard-normal
    /// entries; column `k` is `g_k`.
    pub combine: DMatrix<f64>,
    /// Probability that a node holds a significant (nonzero) measurement.
    pub significance_prob: f64,
    /// Bernoulli-Gaussian measurements: 0 w.p. `1 - p_s`, else `N(0,1)`.
    pub x: DVector<f64>,
    /// The query target `y = G x`.
    pub target: DVector<f64>,
    /// Measurements with `|x_k| <= threshold` count as negligible.
    pub significance_threshold: f64,
    pub seed: u64,
}

#[derive(Serialize, Deserialize)]
struct QuerySceneRepr {
    num_nodes: usize,
    out_dim: usize,
    significance_prob: f64,
    significance_threshold: f64,
    seed: u64,
    combine: MatrixRepr,
    x: Vec<f64>,
    target: Vec<f64>,
}

impl From<QueryScene> for QuerySceneRepr {
    fn from(q: QueryScene) -> Self {
        QuerySceneRepr {
            num_nodes: q.num_nodes,
            out_dim: q.out_dim,
            significance_prob: q.significance_prob,
            significance_threshold: q.significance_threshold,
            seed: q.seed,
            combine: MatrixRepr::from_matrix(&q.combine),
            x: q.x.iter().cloned().collect(),
            target: q.target.iter().cloned().collect(),
        }
    }
}

impl TryFrom<QuerySceneRepr> for QueryScene {
    type Error = String;

    fn try_from(r: QuerySceneRepr) -> std::result::Result<Self, String> {
        let combine = r.combine.into_matrix()?;
        if combine.nrows() != r.out_dim
            || combine.ncols() != r.num_nodes
            || r.x.len() != r.num_nodes
            || r.target.len() != r.out_dim
        {
            return Err("query scene payload dimensions disagree".into());
        }
        Ok(QueryScene {
            num_nodes: r.num_nodes,
            out_dim: r.out_dim,
            combine,
            significance_prob: r.significance_prob,
            x: DVector::from_vec(r.x),
            target: DVector::from_vec(r.target),
            significance_threshold: r.significance_threshold,
            seed: r.seed,
        })
    }
}

impl QueryScene {
    /// `||g_k x_k||` for every node: what node `k` would contribute to `y`.
    pub fn contribution_norms(&self) -> Vec<f64> {
        (0..self.num_nodes)
            .map(|k| self.combine.column(k).norm() * self.x[k].abs())
            .collect()
    }

    /// Nodes whose measurement magnitude exceeds the significance threshold.
    pub fn significant_nodes(&self) -> Vec<usize> {
        (0..self.num_nodes)
            .filter(|&k| self.x[k].abs() > self.significance_threshold)
            .collect()
    }
}

/// Standard-normal combining matrix and Bernoulli-Gaussian measurements.
pub fn gen_query_scene(
    num_nodes: usize,
    out_dim: usize,
    significance_prob: f64,
    seed: u64,
) -> Result<QueryScene> {
    if num_nodes == 0 {
        return Err(DasError::invalid("node count must be at least 1"));
    }
    if out_dim == 0 {
        return Err(DasError::invalid("output dimension must be at least 1"));
    }
    if !(0.0..=1.0).contains(&significance_prob) {
        return Err(DasError::invalid(format!(
            "significance probability {} outside [0, 1]",
            significance_prob
        )));
    }
    let mut rng = sub_rng(seed, &[STREAM_INSTANCE, 1]);
    let mut combine = DMatrix::zeros(out_dim, num_nodes);
    for i in 0..out_dim {
        for j in 0..num_nodes {
            combine[(i, j)] = rng.sample::<f64, _>(StandardNormal);
        }
    }
    let mut x = DVector::zeros(num_nodes);
    for k in 0..num_nodes {
        let significant = rng.gen::<f64>() < significance_prob;
        let value: f64 = rng.sample(StandardNormal);
        if significant {
            x[k] = value;
        }
    }
    let target = &combine * &x;
    Ok(QueryScene {
        num_nodes,
        out_dim,
        combine,
        significance_prob,
        x,
        target,
        significance_threshold: 0.0,
        seed,
    })
}

// ---------------------------------------------------------------------------
// Collection state
// ---------------------------------------------------------------------------

/// Who was asked, who transmitted, and whose measurement arrived in one round.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RoundRecord {
    pub round: usize,
    pub selected: Vec<usize>,
    pub transmitted: Vec<usize>,
    pub delivered: Vec<usize>,
}

/// The set `K(t)` of delivered node indices with their values `X(t)` and the
/// per-round history. Append-only: a later round's collected list always has
/// the earlier round's list as a prefix.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CollectionState {
    num_nodes: usize,
    collected: Vec<usize>,
    values: Vec<f64>,
    round: usize,
    history: Vec<RoundRecord>,
}

impl CollectionState {
    pub fn new(num_nodes: usize) -> Self {
        CollectionState {
            num_nodes,
            collected: Vec::new(),
            values: Vec::new(),
            round: 0,
            history: Vec::new(),
        }
    }

    pub fn num_nodes(&self) -> usize {
        self.num_nodes
    }

    pub fn collected(&self) -> &[usize] {
        &self.collected
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn round(&self) -> usize {
        self.round
    }

    pub fn history(&self) -> &[RoundRecord] {
        &self.history
    }

    pub fn is_collected(&self, node: usize) -> bool {
        self.collected.contains(&node)
    }

    /// The complement set `K^c(t)`, ascending.
    pub fn uncollected(&self) -> Vec<usize> {
        (0..self.num_nodes).filter(|k| !self.is_collected(*k)).collect()
    }

    pub fn is_complete(&self) -> bool {
        self.collected.len() == self.num_nodes
    }

    /// Appends one round of deliveries. Duplicate or out-of-range indices are
    /// rejected and leave the state untouched.
    pub fn record_round(
        &mut self,
        selected: Vec<usize>,
        transmitted: Vec<usize>,
        deliveries: &[(usize, f64)],
    ) -> Result<()> {
        for &(node, _) in deliveries {
            if node >= self.num_nodes {
                return Err(DasError::invalid(format!(
                    "delivered node {} out of range (K = {})",
                    node, self.num_nodes
                )));
            }
            if self.is_collected(node) {
                return Err(DasError::invalid(format!(
                    "node {} already collected",
                    node
                )));
            }
        }
        let mut seen: Vec<usize> = Vec::with_capacity(deliveries.len());
        for &(node, _) in deliveries {
            if seen.contains(&node) {
                return Err(DasError::invalid(format!(
                    "node {} delivered twice in one round",
                    node
                )));
            }
            seen.push(node);
        }
        for &(node, value) in deliveries {
            self.collected.push(node);
            self.values.push(value);
        }
        self.round += 1;
        self.history.push(RoundRecord {
            round: self.round,
            selected,
            transmitted,
            delivered: deliveries.iter().map(|&(n, _)| n).collect(),
        });
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_rejects_zero_nodes() {
        assert!(matches!(
            gen_gaussian_field(0, 1),
            Err(DasError::InvalidArgument(_))
        ));
    }

    #[test]
    fn field_matches_kernel_exactly() {
        // recompute the kernel from the emitted positions
        let field = gen_gaussian_field(20, 1).unwrap();
        assert_eq!(field.num_nodes, 20);
        let mut max_dev: f64 = 0.0;
        for i in 0..20 {
            assert!((0.0..=1.0).contains(&field.positions[i][0]));
            assert!((0.0..=1.0).contains(&field.positions[i][1]));
            for j in 0..20 {
                let expected = (-field.distance(i, j)).exp();
                max_dev = max_dev.max((field.cov[(i, j)] - expected).abs());
            }
            assert_eq!(field.cov[(i, i)], 1.0);
        }
        assert!(max_dev <= 1e-12);
    }

    #[test]
    fn single_node_field() {
        let field = gen_gaussian_field(1, 99).unwrap();
        assert_eq!(field.cov, DMatrix::from_element(1, 1, 1.0));
        assert_eq!(field.x.len(), 1);
    }

    #[test]
    fn three_node_kernel_entry_recomputed() {
        let field = gen_gaussian_field(3, 7).unwrap();
        let expected = (-field.distance(0, 1)).exp();
        assert!((field.cov[(0, 1)] - expected).abs() <= 1e-12);
        assert_eq!(field.cov[(0, 1)], field.cov[(1, 0)]);
    }

    #[test]
    fn generators_are_deterministic() {
        assert_eq!(gen_gaussian_field(13, 5).unwrap(), gen_gaussian_field(13, 5).unwrap());
        assert_eq!(
            gen_sparse_scene(40, 12, 4, 5).unwrap(),
            gen_sparse_scene(40, 12, 4, 5).unwrap()
        );
        assert_eq!(
            gen_query_scene(30, 4, 0.3, 5).unwrap(),
            gen_query_scene(30, 4, 0.3, 5).unwrap()
        );
    }

    #[test]
    fn sparse_scene_consistency() {
        let scene = gen_sparse_scene(64, 25, 3, 1).unwrap();
        assert_eq!(scene.support().len(), 3);
        let residual = &scene.dictionary * &scene.coeffs - &scene.x;
        assert!(residual.amax() <= 1e-12);
        for k in 0..scene.num_nodes {
            assert!((scene.dictionary.row(k).norm() - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn sparse_scene_fig4_scale() {
        let scene = gen_sparse_scene(300, 100, 10, 3).unwrap();
        assert_eq!(scene.support().len(), 10);
        let residual = &scene.dictionary * &scene.coeffs - &scene.x;
        assert!(residual.amax() <= 1e-12);
    }

    #[test]
    fn degenerate_sparse_scene() {
        let scene = gen_sparse_scene(1, 1, 1, 4).unwrap();
        assert!((scene.dictionary[(0, 0)] - 1.0).abs() <= 1e-15);
        assert!((scene.x[0] - scene.coeffs[0]).abs() <= 1e-15);
    }

    #[test]
    fn sparse_scene_rejects_bad_shapes() {
        assert!(gen_sparse_scene(10, 12, 3, 1).is_err()); // M > K
        assert!(gen_sparse_scene(10, 8, 9, 1).is_err()); // S > M
        assert!(gen_sparse_scene(10, 8, 0, 1).is_err());
    }

    #[test]
    fn query_scene_extremes() {
        let silent = gen_query_scene(15, 3, 0.0, 2).unwrap();
        assert!(silent.x.amax() == 0.0);
        assert!(silent.target.amax() == 0.0);
        for seed in 0..50 {
            let loud = gen_query_scene(10, 3, 1.0, seed).unwrap();
            assert_eq!(loud.significant_nodes().len(), 10);
        }
    }

    #[test]
    fn query_scene_rejects_bad_probability() {
        assert!(gen_query_scene(10, 2, -0.1, 1).is_err());
        assert!(gen_query_scene(10, 2, 1.5, 1).is_err());
        assert!(gen_query_scene(0, 2, 0.5, 1).is_err());
    }

    #[test]
    fn query_scene_nonzero_fraction_converges() {
        let mut total = 0usize;
        let trials = 200;
        for seed in 0..trials {
            total += gen_query_scene(400, 2, 0.25, seed).unwrap().significant_nodes().len();
        }
        let mean = total as f64 / trials as f64;
        // 3 standard errors of a Binomial(400, 0.25) mean over 200 draws
        let se = (400.0 * 0.25 * 0.75 / trials as f64).sqrt();
        assert!((mean - 100.0).abs() <= 3.0 * se, "mean {} vs 100 +- {}", mean, 3.0 * se);
    }

    #[test]
    fn query_consistency() {
        let scene = gen_query_scene(50, 6, 0.4, 11).unwrap();
        let residual = &scene.combine * &scene.x - &scene.target;
        assert!(residual.amax() <= 1e-12);
    }

    #[test]
    fn collection_state_rejects_duplicates() {
        let mut state = CollectionState::new(5);
        state
            .record_round(vec![1, 2], vec![1, 2], &[(1, 0.5), (2, -0.25)])
            .unwrap();
        assert!(state.record_round(vec![1], vec![1], &[(1, 0.1)]).is_err());
        assert!(state
            .record_round(vec![3, 3], vec![3, 3], &[(3, 0.1), (3, 0.2)])
            .is_err());
        assert!(state.record_round(vec![9], vec![9], &[(9, 0.0)]).is_err());
        // failed rounds leave the state untouched
        assert_eq!(state.collected(), &[1, 2]);
        assert_eq!(state.round(), 1);
    }

    #[test]
    fn collection_state_appends_as_prefix() {
        let mut state = CollectionState::new(6);
        state.record_round(vec![4], vec![4], &[(4, 1.0)]).unwrap();
        let after_one = state.collected().to_vec();
        state
            .record_round(vec![0, 2], vec![0, 2], &[(0, -1.0), (2, 0.5)])
            .unwrap();
        assert_eq!(&state.collected()[..after_one.len()], &after_one[..]);
        assert_eq!(state.uncollected(), vec![1, 3, 5]);
        assert_eq!(state.values().len(), state.collected().len());
        assert_eq!(state.round(), 2);
    }

    #[test]
    fn scenes_round_trip_through_json() {
        let field = gen_gaussian_field(6, 3).unwrap();
        let json = serde_json::to_string(&field).unwrap();
        let back: GaussianField = serde_json::from_str(&json).unwrap();
        assert_eq!(field, back);

        let scene = gen_sparse_scene(12, 6, 2, 3).unwrap();
        let json = serde_json::to_string(&scene).unwrap();
        let back: SparseScene = serde_json::from_str(&json).unwrap();
        assert_eq!(scene, back);

        let query = gen_query_scene(8, 3, 0.5, 3).unwrap();
        let json = serde_json::to_string(&query).unwrap();
        let back: QueryScene = serde_json::from_str(&json).unwrap();
        assert_eq!(query, back);
    }

    #[test]
    fn corrupt_json_is_rejected() {
        let field = gen_gaussian_field(4, 3).unwrap();
        let mut value = serde_json::to_value(&field).unwrap();
        value["cov"]["rows"] = serde_json::json!(3);
        assert!(serde_json::from_value::<GaussianField>(value).is_err());
    }
}
