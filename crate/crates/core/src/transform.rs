//! Assembly of the full transform `⟨f|λ t y⟩` and its action on states.

use std::fmt::Write as _;

use num_complex::Complex64;
use serde_json::{json, Value};

use crate::crystal::column_amplitudes;
use crate::error::{Result, SwtError};
use crate::par::{try_map_range, Execution};
use crate::radical::RadicalSum;
use crate::tableaux::{
    enumerate_partitions, enumerate_sswt, enumerate_syt, Configuration, Partition, StandardTableau,
    SystemShape, WeylTableau,
};
use crate::text;

/// Largest `n^N` assembled unless overridden.
pub const DEFAULT_SIZE_CAP: usize = 4096;

/// Column label `(λ, t, y)` of the irreducible basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ColumnKey {
    pub lambda: Partition,
    pub t: WeylTableau,
    pub y: StandardTableau,
}

impl ColumnKey {
    pub fn new(lambda: Partition, t: WeylTableau, y: StandardTableau) -> Result<Self> {
        if t.shape() != lambda || y.shape() != lambda {
            return Err(SwtError::ShapeMismatch(format!(
                "column ({lambda}, {t}, {y}) has inconsistent shapes"
            )));
        }
        Ok(Self { lambda, t, y })
    }

    pub fn to_json(&self) -> Value {
        json!({
            "lambda": self.lambda.to_string(),
            "t": self.t.to_string(),
            "y": self.y.to_string(),
        })
    }
}

/// All column keys in canonical order: `λ` descending lexicographic, then
/// `t` in Gelfand-Tsetlin order, then `y` in row-sequence order.
pub fn column_keys(shape: SystemShape) -> Vec<ColumnKey> {
    let mut keys = Vec::new();
    for lambda in enumerate_partitions(shape.nodes(), shape.n()) {
        let ys = enumerate_syt(&lambda);
        for t in enumerate_sswt(&lambda, shape.n()).expect("partition fits n rows") {
            for y in &ys {
                keys.push(ColumnKey {
                    lambda: lambda.clone(),
                    t: t.clone(),
                    y: y.clone(),
                });
            }
        }
    }
    keys
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AssembleOptions {
    pub size_cap: usize,
    pub execution: Execution,
}

impl Default for AssembleOptions {
    fn default() -> Self {
        Self {
            size_cap: DEFAULT_SIZE_CAP,
            execution: Execution::default(),
        }
    }
}

/// The square matrix of coefficients `⟨f|λ t y⟩`, stored sparsely by column.
#[derive(Clone, Debug, PartialEq)]
pub struct SwMatrix {
    shape: SystemShape,
    rows: Vec<Configuration>,
    columns: Vec<ColumnKey>,
    // per column: (row index, nonzero value), ascending row index
    entries: Vec<Vec<(usize, RadicalSum)>>,
}

pub fn assemble(shape: SystemShape) -> Result<SwMatrix> {
    assemble_with(shape, &AssembleOptions::default())
}

pub fn assemble_with(shape: SystemShape, opts: &AssembleOptions) -> Result<SwMatrix> {
    let rows_needed = shape.dimension().unwrap_or(u128::MAX);
    if rows_needed > opts.size_cap as u128 {
        return Err(SwtError::SizeCap {
            rows: rows_needed,
            cap: opts.size_cap,
        });
    }
    let rows = Configuration::all(shape);
    let columns = column_keys(shape);
    debug_assert_eq!(rows.len(), columns.len());
    let entries = try_map_range(columns.len(), opts.execution, |c| {
        column_amplitudes(shape.n(), &columns[c].t, &columns[c].y)
    })?;
    Ok(SwMatrix {
        shape,
        rows,
        columns,
        entries,
    })
}

impl SwMatrix {
    pub fn shape(&self) -> SystemShape {
        self.shape
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Configuration] {
        &self.rows
    }

    pub fn columns(&self) -> &[ColumnKey] {
        &self.columns
    }

    /// Nonzero entries of column `c` as `(row, value)`.
    pub fn column(&self, c: usize) -> &[(usize, RadicalSum)] {
        &self.entries[c]
    }

    pub fn entry(&self, row: usize, col: usize) -> RadicalSum {
        let column = &self.entries[col];
        column
            .binary_search_by_key(&row, |(r, _)| *r)
            .map(|i| column[i].1.clone())
            .unwrap_or_default()
    }

    pub fn row_index(&self, f: &Configuration) -> Option<usize> {
        self.rows.binary_search(f).ok()
    }

    pub fn column_index(&self, key: &ColumnKey) -> Option<usize> {
        self.columns.iter().position(|k| k == key)
    }

    pub fn nonzero_count(&self) -> usize {
        self.entries.iter().map(Vec::len).sum()
    }

    /// Nonzero entries as `(row, col, value)` ordered by row, then column.
    pub fn triplets(&self) -> Vec<(usize, usize, &RadicalSum)> {
        let mut out: Vec<_> = self
            .entries
            .iter()
            .enumerate()
            .flat_map(|(c, col)| col.iter().map(move |(r, v)| (*r, c, v)))
            .collect();
        out.sort_by_key(|&(r, c, _)| (r, c));
        out
    }

    /// Floating-point copy, row-major `dim × dim`.
    pub fn to_dense_f64(&self) -> nalgebra::DMatrix<f64> {
        let d = self.dim();
        let mut m = nalgebra::DMatrix::zeros(d, d);
        for (c, col) in self.entries.iter().enumerate() {
            for (r, v) in col {
                m[(*r, c)] = v.to_f64();
            }
        }
        m
    }

    /// Serialized form with exact radical-sum entries.
    pub fn to_json(&self) -> Value {
        self.document(|v| v.to_json())
    }

    /// Same layout with entries rounded to `f64`.
    pub fn to_json_float(&self) -> Value {
        self.document(|v| json!(v.to_f64()))
    }

    fn document(&self, value: impl Fn(&RadicalSum) -> Value) -> Value {
        let entries: Vec<Value> = self
            .triplets()
            .into_iter()
            .map(|(r, c, v)| json!([r, c, value(v)]))
            .collect();
        json!({
            "shape": { "n": self.shape.n(), "N": self.shape.nodes() },
            "rows": self.rows.iter().map(|f| f.to_string()).collect::<Vec<_>>(),
            "columns": self.columns.iter().map(ColumnKey::to_json).collect::<Vec<_>>(),
            "entries": entries,
        })
    }

    /// Parses the exact JSON document produced by [`to_json`](Self::to_json).
    pub fn from_json(doc: &Value) -> Result<Self> {
        let bad = |m: &str| SwtError::Domain(format!("matrix JSON: {m}"));
        let n = doc["shape"]["n"]
            .as_u64()
            .ok_or_else(|| bad("missing shape.n"))? as usize;
        let nodes = doc["shape"]["N"]
            .as_u64()
            .ok_or_else(|| bad("missing shape.N"))? as usize;
        let shape = SystemShape::new(n, nodes)?;
        let rows = doc["rows"]
            .as_array()
            .ok_or_else(|| bad("missing rows"))?
            .iter()
            .map(|r| text::parse_configuration(r.as_str().unwrap_or_default(), n))
            .collect::<Result<Vec<_>>>()?;
        let columns = doc["columns"]
            .as_array()
            .ok_or_else(|| bad("missing columns"))?
            .iter()
            .map(|c| {
                let field = |k: &str| c[k].as_str().ok_or_else(|| bad("column field"));
                ColumnKey::new(
                    text::parse_partition(field("lambda")?)?,
                    text::parse_weyl_tableau(field("t")?)?,
                    text::parse_standard_tableau(field("y")?)?,
                )
            })
            .collect::<Result<Vec<_>>>()?;
        if rows.len() != columns.len() {
            return Err(bad("matrix is not square"));
        }
        let mut entries = vec![Vec::new(); columns.len()];
        for e in doc["entries"]
            .as_array()
            .ok_or_else(|| bad("missing entries"))?
        {
            let r = e[0].as_u64().ok_or_else(|| bad("entry row"))? as usize;
            let c = e[1].as_u64().ok_or_else(|| bad("entry column"))? as usize;
            if r >= rows.len() || c >= columns.len() {
                return Err(bad("entry index out of range"));
            }
            entries[c].push((r, RadicalSum::from_json(&e[2])?));
        }
        for col in &mut entries {
            col.sort_by_key(|(r, _)| *r);
        }
        Ok(Self {
            shape,
            rows,
            columns,
            entries,
        })
    }

    /// Sparse CSV of floating values: `row,col,f,lambda,t,y,value`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("row,col,f,lambda,t,y,value\n");
        for (r, c, v) in self.triplets() {
            let key = &self.columns[c];
            let _ = writeln!(
                out,
                "{r},{c},\"{}\",\"{}\",\"{}\",\"{}\",{}",
                self.rows[r],
                key.lambda,
                key.t,
                key.y,
                v.to_f64()
            );
        }
        out
    }
}

/// A state with exact real and imaginary parts.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ExactComplex {
    pub re: RadicalSum,
    pub im: RadicalSum,
}

impl ExactComplex {
    pub fn real(re: RadicalSum) -> Self {
        Self {
            re,
            im: RadicalSum::zero(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    fn scaled(&self, by: &RadicalSum) -> Self {
        Self {
            re: &self.re * by,
            im: &self.im * by,
        }
    }

    fn add_assign(&mut self, other: &Self) {
        self.re += &other.re;
        self.im += &other.im;
    }

    pub fn norm_sqr(&self) -> RadicalSum {
        &(&self.re * &self.re) + &(&self.im * &self.im)
    }
}

fn check_len(m: &SwMatrix, len: usize) -> Result<()> {
    if len != m.dim() {
        return Err(SwtError::DimensionMismatch {
            expected: m.dim(),
            actual: len,
        });
    }
    Ok(())
}

/// Coefficients of `v` in the irreducible basis, `M† v`.
pub fn apply_forward(m: &SwMatrix, v: &[Complex64]) -> Result<Vec<Complex64>> {
    check_len(m, v.len())?;
    Ok(m.entries
        .iter()
        .map(|col| col.iter().map(|(r, a)| v[*r] * a.to_f64()).sum())
        .collect())
}

/// Product-basis coefficients of irreducible-basis vector `w`, `M w`.
pub fn apply_inverse(m: &SwMatrix, w: &[Complex64]) -> Result<Vec<Complex64>> {
    check_len(m, w.len())?;
    let mut out = vec![Complex64::new(0.0, 0.0); m.dim()];
    for (c, col) in m.entries.iter().enumerate() {
        for (r, a) in col {
            out[*r] += w[c] * a.to_f64();
        }
    }
    Ok(out)
}

pub fn apply_forward_exact(m: &SwMatrix, v: &[ExactComplex]) -> Result<Vec<ExactComplex>> {
    check_len(m, v.len())?;
    Ok(m.entries
        .iter()
        .map(|col| {
            let mut acc = ExactComplex::default();
            for (r, a) in col {
                acc.add_assign(&v[*r].scaled(a));
            }
            acc
        })
        .collect())
}

pub fn apply_inverse_exact(m: &SwMatrix, w: &[ExactComplex]) -> Result<Vec<ExactComplex>> {
    check_len(m, w.len())?;
    let mut out = vec![ExactComplex::default(); m.dim()];
    for (c, col) in m.entries.iter().enumerate() {
        for (r, a) in col {
            out[*r].add_assign(&w[c].scaled(a));
        }
    }
    Ok(out)
}

/// Exact `Σ |v_i|²`.
pub fn norm_sqr_exact(v: &[ExactComplex]) -> RadicalSum {
    v.iter()
        .fold(RadicalSum::zero(), |acc, x| &acc + &x.norm_sqr())
}
