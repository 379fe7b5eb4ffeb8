//! Gradient-boosted regression trees: the step-1 reference model.
//!
//! Trees use exact CART least-squares splitting: candidate thresholds are the
//! midpoints of consecutive distinct sorted values, ties break on (lower
//! feature, lower threshold), so fitting is fully deterministic. The boosted
//! ensemble supports squared loss and logistic loss on the raw-score scale.

use crate::data::{Dataset, FeatureMeta, Task};
use crate::error::{CalmError, Result};
use crate::exec::{map_indexed, Parallelism};
use serde::{Deserialize, Serialize};

/// Batch predictor on the raw (margin) scale. Any accurate model can stand in
/// for the boosted ensemble; the effects engine only needs this interface.
pub trait Predictor: Sync {
    fn predict_row(&self, row: &[f64]) -> f64;

    /// Predict a row-major batch; output order follows input order.
    fn predict_raw(&self, x: &[f64], n_features: usize) -> Vec<f64> {
        x.chunks_exact(n_features)
            .map(|row| self.predict_row(row))
            .collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub enum SplitValue {
    /// Numerical split: left iff `x < threshold`.
    Threshold(f64),
    /// Categorical split: left iff `x == category`; unseen categories go right.
    Category(usize),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub enum TreeNode {
    Internal {
        feature: usize,
        split: SplitValue,
        left: usize,
        right: usize,
    },
    Leaf {
        value: f64,
    },
}

/// A single regression tree; node 0 is the root.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RegressionTree {
    pub nodes: Vec<TreeNode>,
}

impl RegressionTree {
    pub fn leaf(value: f64) -> RegressionTree {
        RegressionTree {
            nodes: vec![TreeNode::Leaf { value }],
        }
    }

    pub fn predict_row(&self, row: &[f64]) -> f64 {
        let mut idx = 0;
        loop {
            match &self.nodes[idx] {
                TreeNode::Leaf { value } => return *value,
                TreeNode::Internal {
                    feature,
                    split,
                    left,
                    right,
                } => {
                    let v = row[*feature];
                    let go_left = match split {
                        SplitValue::Threshold(t) => v < *t,
                        SplitValue::Category(c) => v == *c as f64,
                    };
                    idx = if go_left { *left } else { *right };
                }
            }
        }
    }

    pub fn depth(&self) -> usize {
        fn walk(nodes: &[TreeNode], idx: usize) -> usize {
            match &nodes[idx] {
                TreeNode::Leaf { .. } => 0,
                TreeNode::Internal { left, right, .. } => {
                    1 + walk(nodes, *left).max(walk(nodes, *right))
                }
            }
        }
        walk(&self.nodes, 0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Objective {
    Squared,
    Logistic,
}

impl Objective {
    pub fn for_task(task: Task) -> Objective {
        match task {
            Task::Regression => Objective::Squared,
            Task::Binary => Objective::Logistic,
        }
    }
}

#[derive(Clone, Debug)]
pub struct GbdtConfig {
    pub rounds: usize,
    pub learning_rate: f64,
    pub max_depth: usize,
    pub min_leaf: usize,
    pub objective: Objective,
    pub parallel: Parallelism,
}

impl Default for GbdtConfig {
    fn default() -> Self {
        GbdtConfig {
            rounds: 300,
            learning_rate: 0.1,
            max_depth: 6,
            min_leaf: 5,
            objective: Objective::Squared,
            parallel: Parallelism::Sequential,
        }
    }
}

/// Boosted ensemble; raw prediction is `base_score + lr * sum(tree outputs)`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GbdtModel {
    pub base_score: f64,
    pub learning_rate: f64,
    pub objective: Objective,
    pub trees: Vec<RegressionTree>,
}

impl Predictor for GbdtModel {
    fn predict_row(&self, row: &[f64]) -> f64 {
        let mut acc = self.base_score;
        for tree in &self.trees {
            acc += self.learning_rate * tree.predict_row(row);
        }
        acc
    }
}

pub fn sigmoid(z: f64) -> f64 {
    1.0 / (1.0 + (-z).exp())
}

fn logit_clamped(p: f64) -> f64 {
    let p = p.clamp(1e-9, 1.0 - 1e-9);
    (p / (1.0 - p)).ln().clamp(-10.0, 10.0)
}

// ---------------------------------------------------------------------------
// CART fitting
// ---------------------------------------------------------------------------

struct SplitCandidate {
    feature: usize,
    split: SplitValue,
    gain: f64,
    // rows are partitioned by the predicate at apply time
}

/// Per-node state: one sorted index list per feature (numerical features are
/// sorted by value; categorical lists keep dataset order).
struct NodeRows {
    per_feature: Vec<Vec<usize>>,
}

fn argsort_columns(x: &[f64], schema: &[FeatureMeta], n: usize) -> Vec<Vec<usize>> {
    let d = schema.len();
    (0..d)
        .map(|j| {
            let mut idx: Vec<usize> = (0..n).collect();
            if schema[j].is_numerical() {
                idx.sort_by(|&a, &b| {
                    x[a * d + j]
                        .partial_cmp(&x[b * d + j])
                        .unwrap()
                        .then(a.cmp(&b))
                });
            }
            idx
        })
        .collect()
}

fn best_numeric_split(
    x: &[f64],
    d: usize,
    feature: usize,
    targets: &[f64],
    sorted_rows: &[usize],
    min_leaf: usize,
) -> Option<(f64, f64)> {
    let n = sorted_rows.len();
    if n < 2 * min_leaf {
        return None;
    }
    let total_sum: f64 = sorted_rows.iter().map(|&r| targets[r]).sum();
    let mut best: Option<(f64, f64)> = None; // (gain, threshold)
    let mut left_sum = 0.0;
    for (i, &r) in sorted_rows.iter().enumerate().take(n - 1) {
        left_sum += targets[r];
        let n_left = i + 1;
        if n_left < min_leaf || n - n_left < min_leaf {
            continue;
        }
        let v = x[r * d + feature];
        let v_next = x[sorted_rows[i + 1] * d + feature];
        if v == v_next {
            continue; // threshold must separate distinct values
        }
        let threshold = 0.5 * (v + v_next);
        let right_sum = total_sum - left_sum;
        let gain = left_sum * left_sum / n_left as f64
            + right_sum * right_sum / (n - n_left) as f64
            - total_sum * total_sum / n as f64;
        match best {
            Some((g, _)) if gain <= g => {}
            _ => best = Some((gain, threshold)),
        }
    }
    best
}

fn best_categorical_split(
    x: &[f64],
    d: usize,
    feature: usize,
    n_categories: usize,
    targets: &[f64],
    rows: &[usize],
    min_leaf: usize,
) -> Option<(f64, usize)> {
    let n = rows.len();
    if n < 2 * min_leaf || n_categories < 2 {
        return None;
    }
    let mut count = vec![0usize; n_categories];
    let mut sum = vec![0.0f64; n_categories];
    for &r in rows {
        let c = x[r * d + feature] as usize;
        if c < n_categories {
            count[c] += 1;
            sum[c] += targets[r];
        }
    }
    let total_sum: f64 = rows.iter().map(|&r| targets[r]).sum();
    let mut best: Option<(f64, usize)> = None;
    for c in 0..n_categories {
        let n_left = count[c];
        if n_left < min_leaf || n - n_left < min_leaf {
            continue;
        }
        let right_sum = total_sum - sum[c];
        let gain = sum[c] * sum[c] / n_left as f64
            + right_sum * right_sum / (n - n_left) as f64
            - total_sum * total_sum / n as f64;
        match best {
            Some((g, _)) if gain <= g => {}
            _ => best = Some((gain, c)),
        }
    }
    best
}

fn build_node(
    x: &[f64],
    schema: &[FeatureMeta],
    targets: &[f64],
    rows: NodeRows,
    depth: usize,
    max_depth: usize,
    min_leaf: usize,
    parallel: Parallelism,
    nodes: &mut Vec<TreeNode>,
) -> usize {
    let d = schema.len();
    let node_rows = &rows.per_feature[0];
    let n = node_rows.len();
    let sum: f64 = node_rows.iter().map(|&r| targets[r]).sum();
    let mean = sum / n as f64;
    let sse: f64 = node_rows
        .iter()
        .map(|&r| (targets[r] - mean) * (targets[r] - mean))
        .sum();

    let make_leaf = |nodes: &mut Vec<TreeNode>| {
        nodes.push(TreeNode::Leaf { value: mean });
        nodes.len() - 1
    };

    if depth >= max_depth || n < 2 * min_leaf || sse <= 1e-12 {
        return make_leaf(nodes);
    }

    // Best split per feature, then a deterministic reduce: strictly larger
    // gain wins, so the lowest feature index (and lowest threshold, from the
    // ascending scan) takes ties.
    let per_feature: Vec<Option<SplitCandidate>> = map_indexed(parallel, d, |j| {
        if schema[j].is_numerical() {
            best_numeric_split(x, d, j, targets, &rows.per_feature[j], min_leaf).map(
                |(gain, threshold)| SplitCandidate {
                    feature: j,
                    split: SplitValue::Threshold(threshold),
                    gain,
                },
            )
        } else {
            best_categorical_split(
                x,
                d,
                j,
                schema[j].categories.len(),
                targets,
                &rows.per_feature[j],
                min_leaf,
            )
            .map(|(gain, category)| SplitCandidate {
                feature: j,
                split: SplitValue::Category(category),
                gain,
            })
        }
    });
    let mut best: Option<SplitCandidate> = None;
    for cand in per_feature.into_iter().flatten() {
        match &best {
            Some(b) if cand.gain <= b.gain => {}
            _ => best = Some(cand),
        }
    }
    let Some(best) = best else {
        return make_leaf(nodes);
    };
    if best.gain <= 0.0 {
        return make_leaf(nodes);
    }

    let goes_left = |r: usize| -> bool {
        let v = x[r * d + best.feature];
        match best.split {
            SplitValue::Threshold(t) => v < t,
            SplitValue::Category(c) => v == c as f64,
        }
    };
    let mut left = NodeRows {
        per_feature: Vec::with_capacity(d),
    };
    let mut right = NodeRows {
        per_feature: Vec::with_capacity(d),
    };
    for j in 0..d {
        let (l, r): (Vec<usize>, Vec<usize>) =
            rows.per_feature[j].iter().partition(|&&r| goes_left(r));
        left.per_feature.push(l);
        right.per_feature.push(r);
    }

    let idx = nodes.len();
    nodes.push(TreeNode::Internal {
        feature: best.feature,
        split: best.split,
        left: 0,
        right: 0,
    });
    let left_idx = build_node(
        x, schema, targets, left, depth + 1, max_depth, min_leaf, parallel, nodes,
    );
    let right_idx = build_node(
        x, schema, targets, right, depth + 1, max_depth, min_leaf, parallel, nodes,
    );
    if let TreeNode::Internal { left, right, .. } = &mut nodes[idx] {
        *left = left_idx;
        *right = right_idx;
    }
    idx
}

/// Fit one least-squares regression tree on row-major `x` with the given
/// targets. `max_depth = 0` yields a single leaf holding the target mean.
pub fn fit_cart(
    x: &[f64],
    schema: &[FeatureMeta],
    targets: &[f64],
    max_depth: usize,
    min_leaf: usize,
) -> RegressionTree {
    let n = targets.len();
    assert!(n >= 1, "cart needs at least one sample");
    let sorted = argsort_columns(x, schema, n);
    fit_cart_presorted(x, schema, targets, &sorted, max_depth, min_leaf, Parallelism::Sequential)
}

fn fit_cart_presorted(
    x: &[f64],
    schema: &[FeatureMeta],
    targets: &[f64],
    sorted: &[Vec<usize>],
    max_depth: usize,
    min_leaf: usize,
    parallel: Parallelism,
) -> RegressionTree {
    let rows = NodeRows {
        per_feature: sorted.to_vec(),
    };
    let mut nodes = Vec::new();
    build_node(
        x, schema, targets, rows, 0, max_depth, min_leaf, parallel, &mut nodes,
    );
    RegressionTree { nodes }
}

// ---------------------------------------------------------------------------
// Boosting
// ---------------------------------------------------------------------------

/// Fit a boosted ensemble and return the per-round training loss (MSE for
/// squared loss, mean log-loss for logistic).
pub fn gbdt_fit_traced(ds: &Dataset, config: &GbdtConfig) -> Result<(GbdtModel, Vec<f64>)> {
    if ds.n_rows() == 0 {
        return Err(CalmError::EmptyData);
    }
    if config.objective != Objective::for_task(ds.task) {
        return Err(CalmError::BadConfig(format!(
            "objective {:?} does not match task {:?}",
            config.objective, ds.task
        )));
    }
    let n = ds.n_rows();
    let mean_y = ds.y.iter().sum::<f64>() / n as f64;
    let base_score = match config.objective {
        Objective::Squared => mean_y,
        Objective::Logistic => logit_clamped(mean_y),
    };
    let mut scores = vec![base_score; n];
    let mut trees = Vec::with_capacity(config.rounds);
    let mut losses = Vec::with_capacity(config.rounds);
    let sorted = argsort_columns(&ds.x, &ds.schema, n);

    let mut residuals = vec![0.0f64; n];
    for _ in 0..config.rounds {
        for i in 0..n {
            residuals[i] = match config.objective {
                Objective::Squared => ds.y[i] - scores[i],
                Objective::Logistic => ds.y[i] - sigmoid(scores[i]),
            };
        }
        let tree = fit_cart_presorted(
            &ds.x,
            &ds.schema,
            &residuals,
            &sorted,
            config.max_depth,
            config.min_leaf,
            config.parallel,
        );
        for i in 0..n {
            scores[i] += config.learning_rate * tree.predict_row(ds.row(i));
        }
        trees.push(tree);
        losses.push(training_loss(&ds.y, &scores, config.objective));
    }

    Ok((
        GbdtModel {
            base_score,
            learning_rate: config.learning_rate,
            objective: config.objective,
            trees,
        },
        losses,
    ))
}

pub fn gbdt_fit(ds: &Dataset, config: &GbdtConfig) -> Result<GbdtModel> {
    gbdt_fit_traced(ds, config).map(|(m, _)| m)
}

pub fn training_loss(y: &[f64], scores: &[f64], objective: Objective) -> f64 {
    let n = y.len() as f64;
    match objective {
        Objective::Squared => y
            .iter()
            .zip(scores)
            .map(|(&t, &s)| (t - s) * (t - s))
            .sum::<f64>()
            / n,
        Objective::Logistic => y
            .iter()
            .zip(scores)
            .map(|(&t, &s)| {
                let p = sigmoid(s).clamp(1e-12, 1.0 - 1e-12);
                -(t * p.ln() + (1.0 - t) * (1.0 - p).ln())
            })
            .sum::<f64>()
            / n,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::data::FeatureMeta;
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;

    fn numeric_schema(d: usize) -> Vec<FeatureMeta> {
        (0..d).map(|j| FeatureMeta::numerical(format!("x{}", j + 1))).collect()
    }

    /// Brute-force best split: every midpoint of consecutive distinct values.
    fn exhaustive_best_split(xs: &[f64], ts: &[f64]) -> (f64, f64) {
        let mut pairs: Vec<(f64, f64)> = xs.iter().copied().zip(ts.iter().copied()).collect();
        pairs.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
        let mut best = (f64::NEG_INFINITY, f64::NAN);
        for i in 0..pairs.len() - 1 {
            if pairs[i].0 == pairs[i + 1].0 {
                continue;
            }
            let tau = 0.5 * (pairs[i].0 + pairs[i + 1].0);
            let (l, r): (Vec<_>, Vec<_>) = pairs.iter().partition(|p| p.0 < tau);
            let sse = |g: &[&(f64, f64)]| {
                let m = g.iter().map(|p| p.1).sum::<f64>() / g.len() as f64;
                g.iter().map(|p| (p.1 - m) * (p.1 - m)).sum::<f64>()
            };
            let l: Vec<&(f64, f64)> = l.into_iter().collect();
            let r: Vec<&(f64, f64)> = r.into_iter().collect();
            let total: Vec<&(f64, f64)> = pairs.iter().collect();
            let gain = sse(&total) - sse(&l) - sse(&r);
            if gain > best.0 {
                best = (gain, tau);
            }
        }
        best
    }

    #[test]
    fn cart_splits_step_function() {
        let x = vec![0.0, 1.0, 2.0, 3.0];
        let t = vec![0.0, 0.0, 1.0, 1.0];
        let tree = fit_cart(&x, &numeric_schema(1), &t, 1, 1);
        let (_, tau) = exhaustive_best_split(&x, &t);
        assert!(tau > 1.0 && tau < 2.0);
        match &tree.nodes[0] {
            TreeNode::Internal { feature, split, .. } => {
                assert_eq!(*feature, 0);
                match split {
                    SplitValue::Threshold(found) => assert_abs_diff_eq!(*found, tau),
                    other => panic!("expected threshold, got {other:?}"),
                }
            }
            other => panic!("expected internal root, got {other:?}"),
        }
        assert_eq!(tree.predict_row(&[0.5]), 0.0);
        assert_eq!(tree.predict_row(&[2.5]), 1.0);
    }

    #[test]
    fn cart_constant_targets_gives_single_leaf() {
        let tree = fit_cart(&[0.0, 1.0, 2.0], &numeric_schema(1), &[5.0, 5.0, 5.0], 4, 1);
        assert_eq!(tree.nodes, vec![TreeNode::Leaf { value: 5.0 }]);
    }

    #[test]
    fn cart_depth_zero_is_mean_leaf() {
        let tree = fit_cart(&[0.0, 1.0], &numeric_schema(1), &[1.0, 3.0], 0, 1);
        assert_eq!(tree.nodes, vec![TreeNode::Leaf { value: 2.0 }]);
    }

    #[test]
    fn cart_categorical_split() {
        let schema = vec![FeatureMeta::categorical("c", vec!["a".into(), "b".into(), "z".into()])];
        // category b has clearly different targets
        let x = vec![0.0, 1.0, 2.0, 1.0, 0.0, 2.0];
        let t = vec![0.0, 10.0, 0.0, 10.0, 0.0, 0.0];
        let tree = fit_cart(&x, &schema, &t, 1, 1);
        match &tree.nodes[0] {
            TreeNode::Internal { split, .. } => assert_eq!(*split, SplitValue::Category(1)),
            other => panic!("expected internal root, got {other:?}"),
        }
        assert_eq!(tree.predict_row(&[1.0]), 10.0);
        assert_eq!(tree.predict_row(&[2.0]), 0.0);
        // unseen category index routes to the != branch
        assert_eq!(tree.predict_row(&[9.0]), 0.0);
    }

    fn linear_dataset(n: usize) -> Dataset {
        let xs: Vec<f64> = (0..n).map(|i| i as f64 / n as f64 * 4.0 - 2.0).collect();
        let y: Vec<f64> = xs.iter().map(|&v| v).collect();
        Dataset::new(numeric_schema(1), xs, y, Task::Regression)
    }

    #[test]
    fn gbdt_fits_linear_function() {
        let ds = linear_dataset(100);
        let config = GbdtConfig {
            rounds: 100,
            max_depth: 2,
            min_leaf: 1,
            ..GbdtConfig::default()
        };
        let model = gbdt_fit(&ds, &config).unwrap();
        let preds = model.predict_raw(&ds.x, 1);
        let mean = ds.y.iter().sum::<f64>() / ds.y.len() as f64;
        let sse: f64 = preds.iter().zip(&ds.y).map(|(p, t)| (p - t) * (p - t)).sum();
        let sst: f64 = ds.y.iter().map(|t| (t - mean) * (t - mean)).sum();
        assert!(1.0 - sse / sst > 0.99, "train R2 = {}", 1.0 - sse / sst);
    }

    #[test]
    fn gbdt_zero_rounds_predicts_target_mean() {
        let ds = linear_dataset(10);
        let config = GbdtConfig {
            rounds: 0,
            ..GbdtConfig::default()
        };
        let model = gbdt_fit(&ds, &config).unwrap();
        let mean = ds.y.iter().sum::<f64>() / ds.y.len() as f64;
        for row in ds.x.chunks_exact(1) {
            assert_eq!(model.predict_row(row), mean);
        }
    }

    #[test]
    fn gbdt_one_full_round_reproduces_group_means() {
        // lr = 1, unbounded depth, 1 round: predictions are per-leaf means,
        // i.e. exact group means of duplicated feature values.
        let x = vec![0.0, 0.0, 1.0, 1.0, 2.0, 2.0];
        let y = vec![1.0, 3.0, 5.0, 7.0, -1.0, 1.0];
        let ds = Dataset::new(numeric_schema(1), x, y, Task::Regression);
        let config = GbdtConfig {
            rounds: 1,
            learning_rate: 1.0,
            max_depth: usize::MAX,
            min_leaf: 1,
            ..GbdtConfig::default()
        };
        let model = gbdt_fit(&ds, &config).unwrap();
        assert_eq!(model.predict_row(&[0.0]), 2.0);
        assert_eq!(model.predict_row(&[1.0]), 6.0);
        assert_eq!(model.predict_row(&[2.0]), 0.0);
    }

    #[test]
    fn training_loss_non_increasing_squared() {
        let ds = crate::synth::gen_case(crate::synth::SyntheticCase::One, 200, 1);
        let config = GbdtConfig {
            rounds: 60,
            ..GbdtConfig::default()
        };
        let (_, losses) = gbdt_fit_traced(&ds, &config).unwrap();
        for w in losses.windows(2) {
            assert!(w[1] <= w[0] + 1e-12, "loss increased: {} -> {}", w[0], w[1]);
        }
    }

    #[test]
    fn training_loss_non_increasing_logistic() {
        let base = crate::synth::gen_case(crate::synth::SyntheticCase::One, 200, 2);
        let median = {
            let mut s = base.y.clone();
            s.sort_by(|a, b| a.partial_cmp(b).unwrap());
            s[s.len() / 2]
        };
        let y: Vec<f64> = base.y.iter().map(|&v| f64::from(v > median)).collect();
        let ds = Dataset::new(base.schema.clone(), base.x.clone(), y, Task::Binary);
        let config = GbdtConfig {
            rounds: 60,
            objective: Objective::Logistic,
            ..GbdtConfig::default()
        };
        let (model, losses) = gbdt_fit_traced(&ds, &config).unwrap();
        for w in losses.windows(2) {
            assert!(w[1] <= w[0] + 1e-12, "loss increased: {} -> {}", w[0], w[1]);
        }
        for row in ds.x.chunks_exact(3) {
            let p = sigmoid(model.predict_row(row));
            assert!(p > 0.0 && p < 1.0);
        }
    }

    #[test]
    fn single_leaf_model_is_constant() {
        let model = GbdtModel {
            base_score: 0.0,
            learning_rate: 1.0,
            objective: Objective::Squared,
            trees: vec![RegressionTree::leaf(3.0)],
        };
        assert_eq!(model.predict_row(&[1.0, 2.0]), 3.0);
        assert_eq!(model.predict_row(&[-4.0, 0.0]), 3.0);
    }

    #[test]
    fn model_json_round_trip() {
        let ds = linear_dataset(50);
        let model = gbdt_fit(
            &ds,
            &GbdtConfig {
                rounds: 5,
                min_leaf: 2,
                ..GbdtConfig::default()
            },
        )
        .unwrap();
        let json = serde_json::to_string(&model).unwrap();
        let back: GbdtModel = serde_json::from_str(&json).unwrap();
        for row in ds.x.chunks_exact(1) {
            assert_eq!(model.predict_row(row), back.predict_row(row));
        }
    }

    proptest! {
        #[test]
        fn batch_prediction_commutes_with_permutation(
            perm_seed in 0u64..1000,
        ) {
            use rand::seq::SliceRandom;
            use rand::SeedableRng;
            let ds = linear_dataset(40);
            let model = gbdt_fit(&ds, &GbdtConfig { rounds: 10, min_leaf: 2, ..GbdtConfig::default() }).unwrap();
            let mut order: Vec<usize> = (0..ds.n_rows()).collect();
            order.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(perm_seed));
            let base = model.predict_raw(&ds.x, 1);
            let shuffled: Vec<f64> = order.iter().flat_map(|&i| ds.row(i).to_vec()).collect();
            let preds = model.predict_raw(&shuffled, 1);
            for (k, &i) in order.iter().enumerate() {
                prop_assert_eq!(preds[k], base[i]);
            }
        }
    }
}
