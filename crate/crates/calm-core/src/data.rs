//! Tabular dataset handling: schema, CSV I/O, z-score scaling and CV folds.
//!
//! Cells are stored as `f64`; categorical cells hold the category index
//! (first-appearance order unless an explicit schema is given). Rows with
//! missing cells are rejected at load time.

use crate::error::{CalmError, Result};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::path::Path;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum FeatureKind {
    Numerical,
    Categorical,
}

/// Name and type of one input column.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FeatureMeta {
    pub name: String,
    pub kind: FeatureKind,
    /// Category labels in index order; empty for numerical features.
    #[serde(default)]
    pub categories: Vec<String>,
}

impl FeatureMeta {
    pub fn numerical(name: impl Into<String>) -> Self {
        FeatureMeta {
            name: name.into(),
            kind: FeatureKind::Numerical,
            categories: Vec::new(),
        }
    }

    pub fn categorical(name: impl Into<String>, categories: Vec<String>) -> Self {
        FeatureMeta {
            name: name.into(),
            kind: FeatureKind::Categorical,
            categories,
        }
    }

    pub fn is_numerical(&self) -> bool {
        self.kind == FeatureKind::Numerical
    }

    /// Index of a category label, if seen during schema construction.
    pub fn category_index(&self, label: &str) -> Option<usize> {
        self.categories.iter().position(|c| c == label)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Task {
    Regression,
    Binary,
}

/// Per-column standardization state. Constant columns are flagged and passed
/// through with std hard-set to 1 so that scaling never divides by zero.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScalerState {
    /// One entry per feature; `None` for categorical columns.
    pub columns: Vec<Option<ColumnScale>>,
    /// Target mean/std for regression tasks.
    pub target: Option<ColumnScale>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ColumnScale {
    pub mean: f64,
    pub std: f64,
    pub constant: bool,
}

impl ColumnScale {
    fn fit(values: impl Iterator<Item = f64> + Clone) -> ColumnScale {
        let n = values.clone().count() as f64;
        let mean = values.clone().sum::<f64>() / n;
        // population (1/N) standard deviation
        let var = values.map(|v| (v - mean) * (v - mean)).sum::<f64>() / n;
        let std = var.sqrt();
        if std > 0.0 {
            ColumnScale {
                mean,
                std,
                constant: false,
            }
        } else {
            ColumnScale {
                mean: 0.0,
                std: 1.0,
                constant: true,
            }
        }
    }

    pub fn apply(&self, v: f64) -> f64 {
        (v - self.mean) / self.std
    }

    pub fn invert(&self, v: f64) -> f64 {
        v * self.std + self.mean
    }
}

impl ScalerState {
    /// Identity scaler: leaves every column untouched.
    pub fn identity(d: usize) -> ScalerState {
        ScalerState {
            columns: vec![None; d],
            target: None,
        }
    }

    pub fn scale_feature(&self, feature: usize, v: f64) -> f64 {
        match &self.columns[feature] {
            Some(s) => s.apply(v),
            None => v,
        }
    }

    pub fn unscale_feature(&self, feature: usize, v: f64) -> f64 {
        match &self.columns[feature] {
            Some(s) => s.invert(v),
            None => v,
        }
    }

    pub fn invert_target(&self, v: f64) -> f64 {
        match &self.target {
            Some(s) => s.invert(v),
            None => v,
        }
    }

    pub fn scale_target(&self, v: f64) -> f64 {
        match &self.target {
            Some(s) => s.apply(v),
            None => v,
        }
    }
}

/// In-memory column-typed dataset. `x` is row-major `n x d`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Dataset {
    pub schema: Vec<FeatureMeta>,
    pub target_name: String,
    pub x: Vec<f64>,
    pub y: Vec<f64>,
    pub task: Task,
    /// Set once `apply_scaler` has run; carries the fitted transform.
    pub scaler: Option<ScalerState>,
}

impl Dataset {
    pub fn new(schema: Vec<FeatureMeta>, x: Vec<f64>, y: Vec<f64>, task: Task) -> Dataset {
        let d = schema.len();
        assert!(d > 0, "schema must have at least one feature");
        assert_eq!(x.len(), y.len() * d, "x must be n*d cells");
        Dataset {
            schema,
            target_name: "y".to_string(),
            x,
            y,
            task,
        scaler: None,
        }
    }

    pub fn n_rows(&self) -> usize {
        self.y.len()
    }

    pub fn n_features(&self) -> usize {
        self.schema.len()
    }

    pub fn row(&self, i: usize) -> &[f64] {
        let d = self.n_features();
        &self.x[i * d..(i + 1) * d]
    }

    pub fn value(&self, row: usize, feature: usize) -> f64 {
        self.x[row * self.n_features() + feature]
    }

    /// Iterator over one column's values.
    pub fn column(&self, feature: usize) -> impl Iterator<Item = f64> + Clone + '_ {
        let d = self.n_features();
        self.x[feature..].iter().step_by(d).copied()
    }

    /// Subset of rows, in the given order.
    pub fn subset(&self, rows: &[usize]) -> Dataset {
        let d = self.n_features();
        let mut x = Vec::with_capacity(rows.len() * d);
        let mut y = Vec::with_capacity(rows.len());
        for &r in rows {
            x.extend_from_slice(self.row(r));
            y.push(self.y[r]);
        }
        Dataset {
            schema: self.schema.clone(),
            target_name: self.target_name.clone(),
            x,
            y,
            task: self.task,
            scaler: self.scaler.clone(),
        }
    }
}

/// Fit a z-score scaler over the numerical columns (and the target, for
/// regression). Uses the population standard deviation.
pub fn fit_scaler(ds: &Dataset) -> ScalerState {
    let columns = ds
        .schema
        .iter()
        .enumerate()
        .map(|(j, meta)| meta.is_numerical().then(|| ColumnScale::fit(ds.column(j))))
        .collect();
    let target = match ds.task {
        Task::Regression => Some(ColumnScale::fit(ds.y.iter().copied())),
        Task::Binary => None,
    };
    ScalerState { columns, target }
}

/// Standardize a dataset in place of a copy; the returned dataset records the
/// scaler that produced it.
pub fn apply_scaler(ds: &Dataset, scaler: &ScalerState) -> Dataset {
    let d = ds.n_features();
    let mut x = ds.x.clone();
    for (j, col) in scaler.columns.iter().enumerate() {
        if let Some(s) = col {
            for r in 0..ds.n_rows() {
                x[r * d + j] = s.apply(x[r * d + j]);
            }
        }
    }
    let y = match &scaler.target {
        Some(s) => ds.y.iter().map(|&v| s.apply(v)).collect(),
        None => ds.y.clone(),
    };
    Dataset {
        schema: ds.schema.clone(),
        target_name: ds.target_name.clone(),
        x,
        y,
        task: ds.task,
        scaler: Some(scaler.clone()),
    }
}

/// Deterministic k-fold split of `0..n`. Test sets are disjoint, cover all
/// indices and differ in size by at most one.
pub fn kfold(n: usize, k: usize, seed: u64) -> Result<Vec<(Vec<usize>, Vec<usize>)>> {
    if k < 2 || k > n {
        return Err(CalmError::BadFoldCount { k, n });
    }
    let mut order: Vec<usize> = (0..n).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    order.shuffle(&mut rng);

    let base = n / k;
    let extra = n % k;
    let mut folds = Vec::with_capacity(k);
    let mut start = 0;
    for f in 0..k {
        let size = base + usize::from(f < extra);
        let mut test: Vec<usize> = order[start..start + size].to_vec();
        test.sort_unstable();
        let mut train: Vec<usize> = order[..start]
            .iter()
            .chain(order[start + size..].iter())
            .copied()
            .collect();
        train.sort_unstable();
        folds.push((train, test));
        start += size;
    }
    Ok(folds)
}

// ---------------------------------------------------------------------------
// CSV I/O
// ---------------------------------------------------------------------------

fn parse_number(s: &str) -> Option<f64> {
    s.trim().parse::<f64>().ok().filter(|v| v.is_finite())
}

/// Load a dataset from an RFC-4180 CSV file with a mandatory header row.
///
/// The target is the column named `target` or, when `None`, the last column.
/// Column kinds are inferred unless `schema` is given: a column where every
/// cell parses as a finite number is numerical, anything else categorical.
pub fn load_csv(
    path: impl AsRef<Path>,
    schema: Option<Vec<FeatureMeta>>,
    target: Option<&str>,
    task: Option<Task>,
) -> Result<Dataset> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .from_path(path.as_ref())?;
    let headers: Vec<String> = reader.headers()?.iter().map(str::to_string).collect();
    if headers.is_empty() {
        return Err(CalmError::EmptyData);
    }
    let records: Vec<csv::StringRecord> = reader.records().collect::<std::result::Result<_, _>>()?;
    if records.is_empty() {
        return Err(CalmError::EmptyData);
    }

    let target_col = match target {
        Some(name) => headers
            .iter()
            .position(|h| h == name)
            .ok_or_else(|| CalmError::TargetNotFound(name.to_string()))?,
        None => headers.len() - 1,
    };
    let feature_cols: Vec<usize> = (0..headers.len()).filter(|&c| c != target_col).collect();
    if feature_cols.is_empty() {
        return Err(CalmError::SchemaMismatch("no feature columns".into()));
    }

    // Reject missing cells up front, with a precise location.
    for (r, rec) in records.iter().enumerate() {
        if rec.len() != headers.len() {
            return Err(CalmError::MissingCell {
                row: r + 1,
                column: headers.get(rec.len()).cloned().unwrap_or_default(),
            });
        }
        for (c, cell) in rec.iter().enumerate() {
            if cell.trim().is_empty() {
                return Err(CalmError::MissingCell {
                    row: r + 1,
                    column: headers[c].clone(),
                });
            }
        }
    }

    let schema = match schema {
        Some(s) => {
            if s.len() != feature_cols.len() {
                return Err(CalmError::SchemaMismatch(format!(
                    "schema has {} features, file has {}",
                    s.len(),
                    feature_cols.len()
                )));
            }
            s
        }
        None => infer_schema(&headers, &records, &feature_cols),
    };

    let d = schema.len();
    let mut x = Vec::with_capacity(records.len() * d);
    for (r, rec) in records.iter().enumerate() {
        for (j, &c) in feature_cols.iter().enumerate() {
            let cell = rec.get(c).unwrap();
            let meta = &schema[j];
            let v = if meta.is_numerical() {
                parse_number(cell).ok_or_else(|| CalmError::BadNumber {
                    row: r + 1,
                    column: meta.name.clone(),
                    value: cell.to_string(),
                })?
            } else {
                match meta.category_index(cell.trim()) {
                    Some(idx) => idx as f64,
                    None => {
                        return Err(CalmError::SchemaMismatch(format!(
                            "unknown category {:?} for feature {} at row {}",
                            cell,
                            meta.name,
                            r + 1
                        )))
                    }
                }
            };
            x.push(v);
        }
    }

    let mut y = Vec::with_capacity(records.len());
    for (r, rec) in records.iter().enumerate() {
        let cell = rec.get(target_col).unwrap();
        let v = parse_number(cell).ok_or_else(|| CalmError::BadNumber {
            row: r + 1,
            column: headers[target_col].clone(),
            value: cell.to_string(),
        })?;
        y.push(v);
    }

    let task = match task {
        Some(t) => t,
        None => {
            if y.iter().all(|&v| v == 0.0 || v == 1.0) {
                Task::Binary
            } else {
                Task::Regression
            }
        }
    };
    if task == Task::Binary {
        for (r, &v) in y.iter().enumerate() {
            if v != 0.0 && v != 1.0 {
                return Err(CalmError::NonBinaryTarget { row: r + 1, value: v });
            }
        }
    }

    Ok(Dataset {
        schema,
        target_name: headers[target_col].clone(),
        x,
        y,
        task,
        scaler: None,
    })
}

fn infer_schema(
    headers: &[String],
    records: &[csv::StringRecord],
    feature_cols: &[usize],
) -> Vec<FeatureMeta> {
    feature_cols
        .iter()
        .map(|&c| {
            let numeric = records
                .iter()
                .all(|rec| parse_number(rec.get(c).unwrap()).is_some());
            if numeric {
                FeatureMeta::numerical(headers[c].clone())
            } else {
                // category index = first-appearance order
                let mut categories: Vec<String> = Vec::new();
                for rec in records {
                    let cell = rec.get(c).unwrap().trim().to_string();
                    if !categories.contains(&cell) {
                        categories.push(cell);
                    }
                }
                FeatureMeta::categorical(headers[c].clone(), categories)
            }
        })
        .collect()
}

/// Write a dataset back to CSV. Numbers use the shortest representation that
/// round-trips, so `load_csv(save_csv(ds))` reproduces identical values.
pub fn save_csv(ds: &Dataset, path: impl AsRef<Path>) -> Result<()> {
    let mut writer = csv::Writer::from_path(path.as_ref())?;
    let mut header: Vec<&str> = ds.schema.iter().map(|m| m.name.as_str()).collect();
    header.push(&ds.target_name);
    writer.write_record(&header)?;
    for r in 0..ds.n_rows() {
        let mut rec: Vec<String> = Vec::with_capacity(ds.n_features() + 1);
        for (j, meta) in ds.schema.iter().enumerate() {
            let v = ds.value(r, j);
            if meta.is_numerical() {
                rec.push(format!("{v}"));
            } else {
                rec.push(meta.categories[v as usize].clone());
            }
        }
        rec.push(format!("{}", ds.y[r]));
        writer.write_record(&rec)?;
    }
    writer.flush()?;
    Ok(())
}
