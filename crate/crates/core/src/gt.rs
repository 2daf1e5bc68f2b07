//! Gelfand-Tsetlin patterns.
//!
//! Rows are indexed bottom-up: row `j` has `j` entries `m[j][1..=j]` and row
//! `n` is the partition labelling the irrep. Consecutive rows interlace,
//! `m[j][i] ≥ m[j-1][i] ≥ m[j][i+1]`.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Result, SwtError};
use crate::tableaux::{write_joined, Partition, WeightVector, WeylTableau};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GtPattern {
    // rows[j - 1] is row j
    rows: Vec<Vec<usize>>,
}

/// Positions `τ_k, …, τ_n` incremented when letter `k` is inserted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ShiftVector {
    letter: usize,
    taus: Vec<usize>,
}

impl ShiftVector {
    /// `taus[0]` is `τ_k`, the last entry is `τ_n`.
    pub fn new(letter: usize, taus: Vec<usize>) -> Result<Self> {
        if letter == 0 {
            return Err(SwtError::OutOfRange("letter must be at least 1".into()));
        }
        for (offset, &tau) in taus.iter().enumerate() {
            let row = letter + offset;
            if tau == 0 || tau > row {
                return Err(SwtError::OutOfRange(format!(
                    "tau_{row} = {tau} outside 1..={row}"
                )));
            }
        }
        Ok(Self { letter, taus })
    }

    pub fn letter(&self) -> usize {
        self.letter
    }

    pub fn taus(&self) -> &[usize] {
        &self.taus
    }

    /// Highest row touched, i.e. `n` for a well-formed shift.
    pub fn top_row(&self) -> usize {
        self.letter + self.taus.len() - 1
    }

    /// `τ_j` for `k ≤ j ≤ n`.
    pub fn tau(&self, row: usize) -> usize {
        self.taus[row - self.letter]
    }
}

impl GtPattern {
    /// Builds a pattern from rows listed bottom-up (row 1 first).
    pub fn from_rows(rows: Vec<Vec<usize>>) -> Result<Self> {
        if rows.is_empty() {
            return Err(SwtError::InvalidPattern("pattern has no rows".into()));
        }
        if let Some(j) = rows.iter().enumerate().position(|(j, r)| r.len() != j + 1) {
            return Err(SwtError::InvalidPattern(format!(
                "row {} has {} entries, expected {}",
                j + 1,
                rows[j].len(),
                j + 1
            )));
        }
        let p = Self { rows };
        p.check_betweenness()?;
        Ok(p)
    }

    /// Builds a pattern from rows listed top-down (row n first), the text order.
    pub fn from_top_down(mut rows: Vec<Vec<usize>>) -> Result<Self> {
        rows.reverse();
        Self::from_rows(rows)
    }

    pub fn zero(n: usize) -> Self {
        Self {
            rows: (1..=n).map(|j| vec![0; j]).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    /// Row `j` (1-based).
    pub fn row(&self, j: usize) -> &[usize] {
        &self.rows[j - 1]
    }

    /// `m[j][i]`.
    pub fn entry(&self, i: usize, j: usize) -> usize {
        self.rows[j - 1][i - 1]
    }

    pub fn top(&self) -> Partition {
        Partition::new(self.rows[self.n() - 1].clone()).expect("top row of a valid pattern")
    }

    pub fn check_betweenness(&self) -> Result<()> {
        for j in 2..=self.n() {
            if !self.rows_interlace(j) {
                return Err(SwtError::InvalidPattern(format!(
                    "rows {j} and {} violate betweenness in {self}",
                    j - 1
                )));
            }
        }
        Ok(())
    }

    pub fn is_valid(&self) -> bool {
        self.check_betweenness().is_ok()
    }

    /// Betweenness between row `j` and row `j-1`; trivially true for `j < 2`.
    fn rows_interlace(&self, j: usize) -> bool {
        if j < 2 {
            return true;
        }
        let upper = &self.rows[j - 1];
        let lower = &self.rows[j - 2];
        (0..j - 1).all(|i| upper[i] >= lower[i] && lower[i] >= upper[i + 1])
    }

    /// `p_{i,j} = m[j][i] + j − i`.
    pub fn partial_hook(&self, i: usize, j: usize) -> Result<i64> {
        if i == 0 || i > j || j > self.n() {
            return Err(SwtError::OutOfRange(format!(
                "partial hook ({i},{j}) outside the triangle of a {}-row pattern",
                self.n()
            )));
        }
        Ok(self.hook(i, j))
    }

    #[inline]
    pub(crate) fn hook(&self, i: usize, j: usize) -> i64 {
        self.rows[j - 1][i - 1] as i64 + j as i64 - i as i64
    }

    /// Row-sum differences `w_j = Σ row j − Σ row j−1`.
    pub fn weight(&self) -> WeightVector {
        let mut prev = 0;
        WeightVector(
            self.rows
                .iter()
                .map(|r| {
                    let s: usize = r.iter().sum();
                    let w = s - prev;
                    prev = s;
                    w
                })
                .collect(),
        )
    }

    /// Entrywise `self ≤ other`; necessary for `other` to be reachable by insertions.
    pub fn dominated_by(&self, other: &GtPattern) -> bool {
        self.rows
            .iter()
            .zip(&other.rows)
            .all(|(a, b)| a.iter().zip(b).all(|(x, y)| x <= y))
    }

    /// Row `j` is the shape of the part of `t` with entries `≤ j`.
    pub fn from_weyl(t: &WeylTableau, n: usize) -> Result<Self> {
        t.check_alphabet(n)?;
        let rows = (1..=n)
            .map(|j| {
                (0..j)
                    .map(|r| {
                        t.rows()
                            .get(r)
                            .map_or(0, |row| row.iter().filter(|&&v| v <= j).count())
                    })
                    .collect()
            })
            .collect();
        Self::from_rows(rows)
    }

    pub fn to_weyl(&self) -> WeylTableau {
        let n = self.n();
        let mut rows = Vec::new();
        for r in 1..=n {
            let mut row = Vec::new();
            for j in r..=n {
                let below = if r < j { self.entry(r, j - 1) } else { 0 };
                row.extend(std::iter::repeat_n(j, self.entry(r, j) - below));
            }
            if row.is_empty() {
                break;
            }
            rows.push(row);
        }
        WeylTableau::new(rows).expect("a valid pattern maps to a semistandard tableau")
    }

    /// Adds one at position `τ_j` of row `j` for every row the shift touches.
    pub fn shifted(&self, shift: &ShiftVector) -> GtPattern {
        let mut out = self.clone();
        for (offset, &tau) in shift.taus.iter().enumerate() {
            out.rows[shift.letter + offset - 1][tau - 1] += 1;
        }
        out
    }

    /// All patterns reachable by inserting letter `k`: one box added to each
    /// row `k..=n`, with the top row becoming `target_top` and betweenness
    /// preserved. Sorted lexicographically by shift vector.
    pub fn insert_letter(
        &self,
        k: usize,
        target_top: &Partition,
    ) -> Result<Vec<(GtPattern, ShiftVector)>> {
        let n = self.n();
        if k == 0 || k > n {
            return Err(SwtError::OutOfRange(format!("letter {k} outside 1..={n}")));
        }
        let target = target_top.padded(n)?;
        let tau_n = target.added_row(&self.top()).ok_or_else(|| {
            SwtError::ShapeMismatch(format!(
                "target {target} does not add one box to {}",
                self.top()
            ))
        })?;
        let mut work = self.clone();
        work.rows[n - 1][tau_n - 1] += 1;
        let mut taus = vec![0; n - k + 1];
        taus[n - k] = tau_n;
        let mut out = Vec::new();
        descend(&mut work, k, n - 1, &mut taus, &mut out);
        out.sort_by(|a, b| a.1.cmp(&b.1));
        Ok(out)
    }

    /// All patterns with the given top row, ascending lexicographic read top row first.
    pub fn enumerate(top: &Partition) -> Vec<GtPattern> {
        let n = top.parts().len();
        let mut out = Vec::new();
        if n == 0 {
            return out;
        }
        let mut top_down = vec![top.parts().to_vec()];
        fill_below(&mut top_down, n, &mut out);
        out
    }
}

// Rows `j+1..=n` of `work` are final and row `j+1` interlaces with row `j+2`.
fn descend(
    work: &mut GtPattern,
    k: usize,
    j: usize,
    taus: &mut [usize],
    out: &mut Vec<(GtPattern, ShiftVector)>,
) {
    if j < k {
        if work.rows_interlace(k) {
            out.push((
                work.clone(),
                ShiftVector {
                    letter: k,
                    taus: taus.to_vec(),
                },
            ));
        }
        return;
    }
    for tau in 1..=j {
        work.rows[j - 1][tau - 1] += 1;
        if work.rows_interlace(j + 1) {
            taus[j - k] = tau;
            descend(work, k, j - 1, taus, out);
        }
        work.rows[j - 1][tau - 1] -= 1;
    }
}

fn fill_below(top_down: &mut Vec<Vec<usize>>, n: usize, out: &mut Vec<GtPattern>) {
    let above = top_down.last().expect("non-empty").clone();
    if above.len() == 1 {
        let mut rows = top_down.clone();
        rows.reverse();
        debug_assert_eq!(rows.len(), n);
        out.push(GtPattern { rows });
        return;
    }
    let len = above.len() - 1;
    let mut row: Vec<usize> = (0..len).map(|i| above[i + 1]).collect();
    loop {
        top_down.push(row.clone());
        fill_below(top_down, n, out);
        top_down.pop();
        // next row in lexicographic order, first entry slowest
        let mut i = len;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if row[i] < above[i] {
                row[i] += 1;
                for (r, slot) in row.iter_mut().enumerate().skip(i + 1) {
                    *slot = above[r + 1];
                }
                break;
            }
        }
    }
}

impl Ord for GtPattern {
    fn cmp(&self, other: &Self) -> Ordering {
        self.rows.iter().rev().cmp(other.rows.iter().rev())
    }
}

impl PartialOrd for GtPattern {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for GtPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (idx, row) in self.rows.iter().rev().enumerate() {
            if idx > 0 {
                write!(f, "/")?;
            }
            write_joined(f, row, ",")?;
        }
        Ok(())
    }
}

impl fmt::Display for ShiftVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_joined(f, &self.taus, ",")
    }
}

pub fn from_weyl(t: &WeylTableau, n: usize) -> Result<GtPattern> {
    GtPattern::from_weyl(t, n)
}

pub fn to_weyl(p: &GtPattern) -> WeylTableau {
    p.to_weyl()
}

pub fn partial_hook(p: &GtPattern, i: usize, j: usize) -> Result<i64> {
    p.partial_hook(i, j)
}

pub fn pattern_weight(p: &GtPattern) -> WeightVector {
    p.weight()
}

pub fn insert_letter(
    p: &GtPattern,
    k: usize,
    target_top: &Partition,
) -> Result<Vec<(GtPattern, ShiftVector)>> {
    p.insert_letter(k, target_top)
}
