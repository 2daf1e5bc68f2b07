//! Structural checks on an assembled transform.
//!
//! Unitarity and the selection rule are checked exactly. The dual-action
//! checks conjugate permutation and diagonal unitary operators by the matrix
//! and run in floating point, since complex phases have no exact radical form.

use nalgebra::DMatrix;
use num_bigint::BigUint;
use num_complex::Complex64;
use num_traits::Zero;
use serde_json::{json, Value};

use crate::error::{Result, SwtError};
use crate::par::{map_range, Execution};
use crate::radical::RadicalSum;
use crate::tableaux::{
    content, dim_symmetric, dim_unitary, enumerate_partitions, enumerate_sswt, enumerate_syt,
    weight, Partition, SystemShape,
};
use crate::transform::SwMatrix;

pub const BLOCK_TOLERANCE: f64 = 1e-10;
pub const COXETER_TOLERANCE: f64 = 1e-9;
pub const TORUS_TOLERANCE: f64 = 1e-10;
pub const FLOAT_UNITARITY_TOLERANCE: f64 = 1e-12;

/// Result of computing `M†M` exactly.
#[derive(Clone, Debug, PartialEq)]
pub struct UnitarityReport {
    pub dimension: usize,
    /// Off-diagonal entries of `M†M` that are not exactly zero.
    pub off_diagonal_nonzero: usize,
    pub max_off_diagonal: f64,
    /// Diagonal entries of `M†M` that are not exactly one.
    pub diagonal_mismatches: usize,
    pub max_diagonal_deviation: f64,
}

impl UnitarityReport {
    pub fn is_identity(&self) -> bool {
        self.off_diagonal_nonzero == 0 && self.diagonal_mismatches == 0
    }

    pub fn to_json(&self) -> Value {
        json!({
            "name": "unitarity",
            "exact": true,
            "pass": self.is_identity(),
            "dimension": self.dimension,
            "off_diagonal_nonzero": self.off_diagonal_nonzero,
            "max_off_diagonal": self.max_off_diagonal,
            "diagonal_mismatches": self.diagonal_mismatches,
            "max_diagonal_deviation": self.max_diagonal_deviation,
        })
    }
}

fn sparse_dot(a: &[(usize, RadicalSum)], b: &[(usize, RadicalSum)]) -> RadicalSum {
    let mut acc = RadicalSum::zero();
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                acc += &(&a[i].1 * &b[j].1);
                i += 1;
                j += 1;
            }
        }
    }
    acc
}

pub fn check_unitarity(m: &SwMatrix) -> UnitarityReport {
    check_unitarity_with(m, Execution::default())
}

/// Exact `M†M` against the identity.
pub fn check_unitarity_with(m: &SwMatrix, exec: Execution) -> UnitarityReport {
    let dim = m.dim();
    let one = RadicalSum::one();
    let per_column = map_range(dim, exec, |a| {
        let mut stats = (0usize, 0.0f64, 0usize, 0.0f64);
        for b in a..dim {
            let g = sparse_dot(m.column(a), m.column(b));
            if a == b {
                if g != one {
                    stats.2 += 1;
                    stats.3 = stats.3.max((g.to_f64() - 1.0).abs());
                }
            } else if !g.is_zero() {
                stats.0 += 2;
                stats.1 = stats.1.max(g.to_f64().abs());
            }
        }
        stats
    });
    per_column.into_iter().fold(
        UnitarityReport {
            dimension: dim,
            off_diagonal_nonzero: 0,
            max_off_diagonal: 0.0,
            diagonal_mismatches: 0,
            max_diagonal_deviation: 0.0,
        },
        |mut r, (off, max_off, diag, max_diag)| {
            r.off_diagonal_nonzero += off;
            r.max_off_diagonal = r.max_off_diagonal.max(max_off);
            r.diagonal_mismatches += diag;
            r.max_diagonal_deviation = r.max_diagonal_deviation.max(max_diag);
            r
        },
    )
}

fn max_abs(m: &DMatrix<f64>) -> f64 {
    m.iter().fold(0.0f64, |acc, x| acc.max(x.abs()))
}

/// `max |(M†M − I)_ij|` in floating point.
pub fn float_unitarity_residual(m: &SwMatrix) -> f64 {
    let dense = m.to_dense_f64();
    let gram = dense.transpose() * &dense;
    max_abs(&(gram - DMatrix::identity(m.dim(), m.dim())))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SelectionReport {
    pub entries_checked: usize,
    /// `(row, col)` of nonzero entries whose row content differs from the column weight.
    pub violations: Vec<(usize, usize)>,
}

impl SelectionReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "name": "selection_rule",
            "pass": self.passed(),
            "entries_checked": self.entries_checked,
            "violations": self.violations.len(),
        })
    }
}

/// Every entry with `content(f) ≠ weight(t)` must be exactly zero.
pub fn check_selection_rule(m: &SwMatrix) -> SelectionReport {
    let n = m.shape().n();
    let contents: Vec<_> = m.rows().iter().map(|f| content(f, n)).collect();
    let mut violations = Vec::new();
    for (c, key) in m.columns().iter().enumerate() {
        let w = weight(&key.t, n);
        for (r, v) in m.column(c) {
            if contents[*r] != w && !v.is_zero() {
                violations.push((*r, c));
            }
        }
    }
    SelectionReport {
        entries_checked: m.dim() * m.dim(),
        violations,
    }
}

/// `M† P_k M`, where `P_k` swaps node slots `k` and `k+1` (1-based).
pub fn conjugated_transposition(m: &SwMatrix, k: usize) -> Result<DMatrix<f64>> {
    let nodes = m.shape().nodes();
    if k == 0 || k >= nodes {
        return Err(SwtError::OutOfRange(format!(
            "transposition index {k} outside 1..={}",
            nodes.saturating_sub(1)
        )));
    }
    let n = m.shape().n();
    let dense = m.to_dense_f64();
    let mut permuted = DMatrix::zeros(m.dim(), m.dim());
    for (r, f) in m.rows().iter().enumerate() {
        let mut letters = f.letters().to_vec();
        letters.swap(k - 1, k);
        let target = letters.iter().fold(0, |acc, &l| acc * n + (l - 1));
        permuted.set_row(target, &dense.row(r));
    }
    Ok(dense.transpose() * permuted)
}

// Column c -> (λ group, t index within λ, y index within λ).
fn column_blocks(m: &SwMatrix) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::with_capacity(m.dim());
    let mut group = 0;
    let mut t_idx = 0;
    let mut y_idx = 0;
    for (c, key) in m.columns().iter().enumerate() {
        if c > 0 {
            let prev = &m.columns()[c - 1];
            if prev.lambda != key.lambda {
                group += 1;
                t_idx = 0;
                y_idx = 0;
            } else if prev.t != key.t {
                t_idx += 1;
                y_idx = 0;
            } else {
                y_idx += 1;
            }
        }
        out.push((group, t_idx, y_idx));
    }
    out
}

#[derive(Clone, Debug)]
pub struct PermutationReport {
    pub k: usize,
    /// Largest entry outside the `(λ, t)` diagonal blocks.
    pub off_block_residual: f64,
    /// Largest difference between a `(λ, t)` block and the first block of its `λ`.
    pub t_dependence_residual: f64,
    pub orthogonality_residual: f64,
    pub involution_residual: f64,
    /// The `y × y` matrix for each `λ`.
    pub blocks: Vec<(Partition, DMatrix<f64>)>,
}

impl PermutationReport {
    pub fn max_residual(&self) -> f64 {
        self.off_block_residual
            .max(self.t_dependence_residual)
            .max(self.orthogonality_residual)
            .max(self.involution_residual)
    }

    pub fn passed(&self) -> bool {
        self.max_residual() < BLOCK_TOLERANCE
    }

    pub fn to_json(&self) -> Value {
        json!({
            "name": "permutation_blocks",
            "k": self.k,
            "pass": self.passed(),
            "off_block_residual": self.off_block_residual,
            "t_dependence_residual": self.t_dependence_residual,
            "orthogonality_residual": self.orthogonality_residual,
            "involution_residual": self.involution_residual,
        })
    }
}

/// Block structure of the conjugated adjacent transposition `(k, k+1)`:
/// `λ`-block diagonal, identity on `t` tensored with one orthogonal
/// involution `B^λ_k` on `y`.
pub fn check_permutation_blocks(m: &SwMatrix, k: usize) -> Result<PermutationReport> {
    let conj = conjugated_transposition(m, k)?;
    let labels = column_blocks(m);
    let mut off_block = 0.0f64;
    let mut t_dep = 0.0f64;
    let mut blocks: Vec<(Partition, DMatrix<f64>)> = Vec::new();
    let group_sizes: Vec<usize> = {
        let mut sizes = Vec::new();
        for (c, key) in m.columns().iter().enumerate() {
            if labels[c].0 == sizes.len() {
                sizes.push(enumerate_syt(&key.lambda).len());
                blocks.push((
                    key.lambda.clone(),
                    DMatrix::zeros(sizes[labels[c].0], sizes[labels[c].0]),
                ));
            }
        }
        sizes
    };
    for a in 0..m.dim() {
        for b in 0..m.dim() {
            let (ga, ta, ya) = labels[a];
            let (gb, tb, yb) = labels[b];
            let v = conj[(a, b)];
            if ga != gb || ta != tb {
                off_block = off_block.max(v.abs());
            } else if ta == 0 {
                blocks[ga].1[(ya, yb)] = v;
            }
        }
    }
    for a in 0..m.dim() {
        for b in 0..m.dim() {
            let (ga, ta, ya) = labels[a];
            let (gb, tb, yb) = labels[b];
            if ga == gb && ta == tb && ta > 0 {
                t_dep = t_dep.max((conj[(a, b)] - blocks[ga].1[(ya, yb)]).abs());
            }
        }
    }
    let mut ortho = 0.0f64;
    let mut invol = 0.0f64;
    for (g, (_, block)) in blocks.iter().enumerate() {
        let id = DMatrix::identity(group_sizes[g], group_sizes[g]);
        ortho = ortho.max(max_abs(&(block.transpose() * block - &id)));
        invol = invol.max(max_abs(&(block * block - &id)));
    }
    Ok(PermutationReport {
        k,
        off_block_residual: off_block,
        t_dependence_residual: t_dep,
        orthogonality_residual: ortho,
        involution_residual: invol,
        blocks,
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct CoxeterReport {
    /// `max ‖C_k C_{k+1} C_k − C_{k+1} C_k C_{k+1}‖`.
    pub braid_residual: f64,
    /// `max ‖C_k² − I‖`.
    pub square_residual: f64,
    /// `max ‖C_j C_k − C_k C_j‖` for `|j − k| ≥ 2`.
    pub commutation_residual: f64,
}

impl CoxeterReport {
    pub fn passed(&self) -> bool {
        self.braid_residual < COXETER_TOLERANCE
            && self.square_residual < COXETER_TOLERANCE
            && self.commutation_residual < COXETER_TOLERANCE
    }

    pub fn to_json(&self) -> Value {
        json!({
            "name": "coxeter_relations",
            "pass": self.passed(),
            "braid_residual": self.braid_residual,
            "square_residual": self.square_residual,
            "commutation_residual": self.commutation_residual,
        })
    }
}

/// Coxeter relations of the conjugated adjacent transpositions.
pub fn check_coxeter(m: &SwMatrix) -> CoxeterReport {
    let nodes = m.shape().nodes();
    let gens: Vec<DMatrix<f64>> = (1..nodes)
        .map(|k| conjugated_transposition(m, k).expect("k in range"))
        .collect();
    let id = DMatrix::identity(m.dim(), m.dim());
    let mut report = CoxeterReport {
        braid_residual: 0.0,
        square_residual: 0.0,
        commutation_residual: 0.0,
    };
    for (i, c) in gens.iter().enumerate() {
        report.square_residual = report.square_residual.max(max_abs(&(c * c - &id)));
        if let Some(d) = gens.get(i + 1) {
            let lhs = c * d * c;
            let rhs = d * c * d;
            report.braid_residual = report.braid_residual.max(max_abs(&(lhs - rhs)));
        }
        for d in gens.iter().skip(i + 2) {
            report.commutation_residual =
                report.commutation_residual.max(max_abs(&(c * d - d * c)));
        }
    }
    report
}

#[derive(Clone, Debug, PartialEq)]
pub struct TorusReport {
    pub angles: Vec<f64>,
    /// Largest off-diagonal entry of `M† D(θ) M`.
    pub off_diagonal_residual: f64,
    /// Largest deviation of a diagonal entry from `e^{i Σ_k w_k θ_k}`.
    pub phase_residual: f64,
}

impl TorusReport {
    pub fn passed(&self) -> bool {
        self.off_diagonal_residual < TORUS_TOLERANCE && self.phase_residual < TORUS_TOLERANCE
    }

    pub fn to_json(&self) -> Value {
        json!({
            "name": "torus_action",
            "pass": self.passed(),
            "angles": self.angles,
            "off_diagonal_residual": self.off_diagonal_residual,
            "phase_residual": self.phase_residual,
        })
    }
}

/// Conjugates `⊗_j diag(e^{iθ_1}, …, e^{iθ_n})` by the transform and compares
/// against the weight phases of each column.
pub fn check_torus_action(m: &SwMatrix, angles: &[f64]) -> Result<TorusReport> {
    let n = m.shape().n();
    if angles.len() != n {
        return Err(SwtError::DimensionMismatch {
            expected: n,
            actual: angles.len(),
        });
    }
    let dense = m.to_dense_f64().map(|x| Complex64::new(x, 0.0));
    let mut rotated = dense.clone();
    for (r, f) in m.rows().iter().enumerate() {
        let phase: f64 = f.letters().iter().map(|&l| angles[l - 1]).sum();
        let z = Complex64::from_polar(1.0, phase);
        for c in 0..m.dim() {
            rotated[(r, c)] *= z;
        }
    }
    let conj = dense.transpose() * rotated;
    let mut off = 0.0f64;
    let mut phase_res = 0.0f64;
    for (c, key) in m.columns().iter().enumerate() {
        let w = weight(&key.t, n);
        let expect = Complex64::from_polar(
            1.0,
            w.0.iter().zip(angles).map(|(&k, &a)| k as f64 * a).sum(),
        );
        for r in 0..m.dim() {
            let v = conj[(r, c)];
            if r == c {
                phase_res = phase_res.max((v - expect).norm());
            } else {
                off = off.max(v.norm());
            }
        }
    }
    Ok(TorusReport {
        angles: angles.to_vec(),
        off_diagonal_residual: off,
        phase_residual: phase_res,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusRow {
    pub lambda: Partition,
    pub dim_symmetric: BigUint,
    pub dim_unitary: BigUint,
    pub product: BigUint,
    /// `(|SYT(λ)|, |SSWT(λ, n)|)` by explicit enumeration, when requested.
    pub enumerated: Option<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusReport {
    pub shape: SystemShape,
    pub rows: Vec<CensusRow>,
    pub total: BigUint,
    pub expected: BigUint,
}

impl CensusReport {
    /// Total equals `n^N` and every enumerated count matches its formula.
    pub fn passed(&self) -> bool {
        self.total == self.expected
            && self.rows.iter().all(|r| match r.enumerated {
                Some((s, u)) => {
                    r.dim_symmetric == BigUint::from(s) && r.dim_unitary == BigUint::from(u)
                }
                None => true,
            })
    }

    pub fn to_json(&self) -> Value {
        json!({
            "name": "census",
            "pass": self.passed(),
            "total": self.total.to_string(),
            "expected": self.expected.to_string(),
            "rows": self.rows.iter().map(|r| json!({
                "lambda": r.lambda.to_string(),
                "dim_symmetric": r.dim_symmetric.to_string(),
                "dim_unitary": r.dim_unitary.to_string(),
                "product": r.product.to_string(),
                "enumerated": r.enumerated.map(|(s, u)| json!([s, u])),
            })).collect::<Vec<_>>(),
        })
    }
}

/// `Σ_λ dim Δ^λ · dim D^λ` against `n^N`, optionally cross-checked by enumeration.
pub fn census(shape: SystemShape, cross_check: bool) -> CensusReport {
    let n = shape.n();
    let rows: Vec<CensusRow> = enumerate_partitions(shape.nodes(), n)
        .into_iter()
        .map(|lambda| {
            let ds = dim_symmetric(&lambda);
            let du = dim_unitary(&lambda, n).expect("partition fits n rows");
            let enumerated = cross_check.then(|| {
                (
                    enumerate_syt(&lambda).len(),
                    enumerate_sswt(&lambda, n)
                        .expect("partition fits n rows")
                        .len(),
                )
            });
            CensusRow {
                product: &ds * &du,
                lambda,
                dim_symmetric: ds,
                dim_unitary: du,
                enumerated,
            }
        })
        .collect();
    let total = rows.iter().fold(BigUint::zero(), |acc, r| acc + &r.product);
    CensusReport {
        shape,
        rows,
        total,
        expected: BigUint::from(n).pow(shape.nodes() as u32),
    }
}
