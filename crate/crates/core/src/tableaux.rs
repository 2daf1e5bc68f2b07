//! Partitions, Young and Weyl tableaux, and the combinatorics around them.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Result, SwtError};
use crate::gt::GtPattern;

/// Single-node dimension `n = 2s+1` and node count `N`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SystemShape {
    n: usize,
    nodes: usize,
}

impl SystemShape {
    pub fn new(n: usize, nodes: usize) -> Result<Self> {
        if n == 0 || nodes == 0 {
            return Err(SwtError::InvalidShape(format!(
                "n and N must be positive (got n={n}, N={nodes})"
            )));
        }
        Ok(Self { n, nodes })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn nodes(&self) -> usize {
        self.nodes
    }

    /// `n^N`, or `None` on overflow.
    pub fn dimension(&self) -> Option<u128> {
        (self.n as u128).checked_pow(u32::try_from(self.nodes).ok()?)
    }
}

/// A product state `|f(1) … f(N)⟩`, letters in `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Configuration(Vec<usize>);

impl Configuration {
    pub fn new(letters: Vec<usize>, n: usize) -> Result<Self> {
        if letters.is_empty() {
            return Err(SwtError::InvalidConfiguration("empty configuration".into()));
        }
        if let Some((pos, &bad)) = letters.iter().enumerate().find(|(_, &l)| l == 0 || l > n) {
            return Err(SwtError::InvalidConfiguration(format!(
                "letter {bad} at position {} outside 1..={n}",
                pos + 1
            )));
        }
        Ok(Self(letters))
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// All `n^N` configurations in ascending lexicographic order.
    pub fn all(shape: SystemShape) -> Vec<Configuration> {
        let n = shape.n();
        let total = shape.dimension().expect("dimension overflow") as usize;
        let mut out = Vec::with_capacity(total);
        let mut cur = vec![1usize; shape.nodes()];
        loop {
            out.push(Configuration(cur.clone()));
            let mut pos = cur.len();
            loop {
                if pos == 0 {
                    return out;
                }
                pos -= 1;
                if cur[pos] < n {
                    cur[pos] += 1;
                    cur[pos + 1..].fill(1);
                    break;
                }
            }
        }
    }

    /// Position in the ascending lexicographic order of `n^N` configurations.
    pub fn index(&self, n: usize) -> usize {
        self.0.iter().fold(0, |acc, &l| acc * n + (l - 1))
    }
}

impl fmt::Display for Configuration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_joined(f, &self.0, ",")
    }
}

/// Letter multiplicities: `counts[k-1]` is the number of occurrences of `k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightVector(pub Vec<usize>);

impl WeightVector {
    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }
}

/// A partition, stored zero-padded. Equality, hashing and ordering ignore
/// trailing zeros, so `(3,1)` and `(3,1,0)` are the same shape.
#[derive(Clone, Debug)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if let Some(w) = parts.windows(2).position(|w| w[0] < w[1]) {
            return Err(SwtError::InvalidPartition(format!(
                "parts must weakly decrease, but part {} < part {}",
                w + 1,
                w + 2
            )));
        }
        Ok(Self { parts })
    }

    pub fn empty() -> Self {
        Self { parts: Vec::new() }
    }

    /// Zero-padded to `len` entries. Fails if there are more than `len` nonzero parts.
    pub fn padded(&self, len: usize) -> Result<Self> {
        let nz = self.nonzero_len();
        if nz > len {
            return Err(SwtError::InvalidPartition(format!(
                "{self} has {nz} nonzero parts, more than {len}"
            )));
        }
        let mut parts = self.parts[..nz].to_vec();
        parts.resize(len, 0);
        Ok(Self { parts })
    }

    /// Stored parts, including padding.
    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn nonzero(&self) -> &[usize] {
        &self.parts[..self.nonzero_len()]
    }

    pub fn nonzero_len(&self) -> usize {
        self.parts.iter().take_while(|&&p| p > 0).count()
    }

    /// `λ_i` (1-based); zero beyond the stored length.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// The 1-based row where `self` differs from `smaller` by a single box.
    pub fn added_row(&self, smaller: &Partition) -> Option<usize> {
        let len = self.nonzero_len().max(smaller.nonzero_len());
        let mut row = None;
        for i in 1..=len {
            match self.part(i) as isize - smaller.part(i) as isize {
                0 => {}
                1 if row.is_none() => row = Some(i),
                _ => return None,
            }
        }
        row
    }

    /// Hook lengths of every box, row-major.
    fn hooks(&self) -> Vec<usize> {
        let rows = self.nonzero();
        let mut out = Vec::with_capacity(self.size());
        for (r, &len) in rows.iter().enumerate() {
            for c in 0..len {
                let arm = len - c - 1;
                let leg = rows[r + 1..].iter().filter(|&&l| l > c).count();
                out.push(arm + leg + 1);
            }
        }
        out
    }
}

impl PartialEq for Partition {
    fn eq(&self, other: &Self) -> bool {
        self.nonzero() == other.nonzero()
    }
}

impl Eq for Partition {}

impl Hash for Partition {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.nonzero().hash(state);
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.nonzero().cmp(other.nonzero())
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let nz = self.nonzero();
        if nz.is_empty() {
            write!(f, "0")
        } else {
            write_joined(f, nz, ",")
        }
    }
}

/// Shared row storage and validation for both tableau kinds.
fn check_rows(rows: &[Vec<usize>]) -> Result<()> {
    if let Some(r) = rows.iter().position(|row| row.is_empty()) {
        return Err(SwtError::InvalidTableau(format!("row {} is empty", r + 1)));
    }
    if let Some(r) = rows.windows(2).position(|w| w[0].len() < w[1].len()) {
        return Err(SwtError::InvalidTableau(format!(
            "row {} is longer than row {}",
            r + 2,
            r + 1
        )));
    }
    Ok(())
}

fn check_order(rows: &[Vec<usize>], strict_rows: bool) -> Result<()> {
    for (r, row) in rows.iter().enumerate() {
        for c in 1..row.len() {
            let ok = if strict_rows {
                row[c] > row[c - 1]
            } else {
                row[c] >= row[c - 1]
            };
            if !ok {
                return Err(SwtError::InvalidTableau(format!(
                    "row {} decreases at column {}",
                    r + 1,
                    c + 1
                )));
            }
        }
        if r > 0 {
            for (c, &v) in row.iter().enumerate() {
                if v <= rows[r - 1][c] {
                    return Err(SwtError::InvalidTableau(format!(
                        "column {} does not strictly increase at row {}",
                        c + 1,
                        r + 1
                    )));
                }
            }
        }
    }
    Ok(())
}

fn shape_of(rows: &[Vec<usize>]) -> Partition {
    Partition {
        parts: rows.iter().map(Vec::len).collect(),
    }
}

fn fmt_rows(f: &mut fmt::Formatter<'_>, rows: &[Vec<usize>]) -> fmt::Result {
    for (i, row) in rows.iter().enumerate() {
        if i > 0 {
            write!(f, "/")?;
        }
        write_joined(f, row, ",")?;
    }
    Ok(())
}

pub(crate) fn write_joined(f: &mut fmt::Formatter<'_>, items: &[usize], sep: &str) -> fmt::Result {
    for (i, v) in items.iter().enumerate() {
        if i > 0 {
            write!(f, "{sep}")?;
        }
        write!(f, "{v}")?;
    }
    Ok(())
}

/// Filling of a Young diagram with `1..=N`, each exactly once, rows and
/// columns strictly increasing.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StandardTableau {
    rows: Vec<Vec<usize>>,
}

impl StandardTableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        check_rows(&rows)?;
        let total: usize = rows.iter().map(Vec::len).sum();
        let mut seen = vec![false; total + 1];
        for &v in rows.iter().flatten() {
            if v == 0 || v > total || seen[v] {
                return Err(SwtError::InvalidTableau(format!(
                    "entries must be 1..={total} each exactly once (offending entry {v})"
                )));
            }
            seen[v] = true;
        }
        check_order(&rows, true)?;
        Ok(Self { rows })
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        shape_of(&self.rows)
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    /// `seq[j-1]` is the 0-based row holding letter `j`.
    pub fn row_sequence(&self) -> Vec<usize> {
        let mut seq = vec![0; self.size()];
        for (r, row) in self.rows.iter().enumerate() {
            for &v in row {
                seq[v - 1] = r;
            }
        }
        seq
    }

    /// Inverse of [`row_sequence`](Self::row_sequence). The sequence must be a lattice word.
    pub fn from_row_sequence(seq: &[usize]) -> Result<Self> {
        let mut rows: Vec<Vec<usize>> = Vec::new();
        for (j, &r) in seq.iter().enumerate() {
            if r > rows.len() {
                return Err(SwtError::InvalidTableau(format!(
                    "letter {} placed in row {} before row {} exists",
                    j + 1,
                    r + 1,
                    r
                )));
            }
            if r == rows.len() {
                rows.push(Vec::new());
            }
            rows[r].push(j + 1);
        }
        Self::new(rows)
    }
}

impl fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_rows(f, &self.rows)
    }
}

/// Semistandard filling: rows weakly increase, columns strictly increase.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylTableau {
    rows: Vec<Vec<usize>>,
}

impl WeylTableau {
    /// Validates semistandardness. An empty row list is the empty tableau.
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        check_rows(&rows)?;
        if rows.iter().flatten().any(|&v| v == 0) {
            return Err(SwtError::InvalidTableau("entries must be positive".into()));
        }
        check_order(&rows, false)?;
        Ok(Self { rows })
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        shape_of(&self.rows)
    }

    pub fn max_entry(&self) -> usize {
        self.rows.iter().flatten().copied().max().unwrap_or(0)
    }

    /// Fails if some entry exceeds `n`.
    pub fn check_alphabet(&self, n: usize) -> Result<()> {
        let m = self.max_entry();
        if m > n {
            return Err(SwtError::InvalidTableau(format!(
                "entry {m} outside alphabet 1..={n}"
            )));
        }
        Ok(())
    }
}

impl fmt::Display for WeylTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_rows(f, &self.rows)
    }
}

/// Growth sequence `λ_1, λ_12, …, λ_1..N`, each step adding one box.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PartitionChain(Vec<Partition>);

impl PartitionChain {
    pub fn new(chain: Vec<Partition>) -> Result<Self> {
        let mut prev = Partition::empty();
        for (j, p) in chain.iter().enumerate() {
            if p.added_row(&prev).is_none() {
                return Err(SwtError::InvalidPartition(format!(
                    "chain step {} ({p}) does not add exactly one box to {prev}",
                    j + 1
                )));
            }
            prev = p.clone();
        }
        Ok(Self(chain))
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Partitions of `total` with at most `max_parts` parts, descending
/// lexicographic, zero-padded to `max_parts`.
pub fn enumerate_partitions(total: usize, max_parts: usize) -> Vec<Partition> {
    fn rec(
        rest: usize,
        max_part: usize,
        slots: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        if slots == 0 {
            return;
        }
        for p in (1..=rest.min(max_part)).rev() {
            cur.push(p);
            rec(rest - p, p, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut raw = Vec::new();
    rec(total, total, max_parts, &mut Vec::new(), &mut raw);
    raw.into_iter()
        .map(|mut parts| {
            parts.resize(max_parts, 0);
            Partition { parts }
        })
        .collect()
}

/// All standard tableaux of shape `lambda`, ordered lexicographically by
/// the row index of letter 1, then letter 2, and so on.
pub fn enumerate_syt(lambda: &Partition) -> Vec<StandardTableau> {
    let target = lambda.nonzero().to_vec();
    let total = lambda.size();
    let mut out = Vec::new();
    let mut filled = vec![0usize; target.len()];
    let mut seq = Vec::with_capacity(total);
    fn rec(
        target: &[usize],
        total: usize,
        filled: &mut [usize],
        seq: &mut Vec<usize>,
        out: &mut Vec<StandardTableau>,
    ) {
        if seq.len() == total {
            out.push(StandardTableau::from_row_sequence(seq).expect("lattice word"));
            return;
        }
        for r in 0..target.len() {
            if filled[r] < target[r] && (r == 0 || filled[r - 1] > filled[r]) {
                filled[r] += 1;
                seq.push(r);
                rec(target, total, filled, seq, out);
                seq.pop();
                filled[r] -= 1;
            }
        }
    }
    rec(&target, total, &mut filled, &mut seq, &mut out);
    out
}

/// All semistandard tableaux of shape `lambda` over `1..=n`, ordered by
/// their Gelfand-Tsetlin patterns read top row first.
pub fn enumerate_sswt(lambda: &Partition, n: usize) -> Result<Vec<WeylTableau>> {
    let top = lambda.padded(n)?;
    Ok(GtPattern::enumerate(&top)
        .iter()
        .map(GtPattern::to_weyl)
        .collect())
}

/// Number of standard tableaux of shape `lambda` (hook-length formula).
pub fn dim_symmetric(lambda: &Partition) -> BigUint {
    let mut num = BigUint::one();
    for k in 2..=lambda.size() {
        num *= k;
    }
    let den = lambda
        .hooks()
        .into_iter()
        .fold(BigUint::one(), |acc, h| acc * h);
    num / den
}

/// Dimension of the `U(n)` irrep `lambda` (Weyl dimension formula).
pub fn dim_unitary(lambda: &Partition, n: usize) -> Result<BigUint> {
    let top = lambda.padded(n)?;
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 1..=n {
        for j in i + 1..=n {
            num *= top.part(i) - top.part(j) + j - i;
            den *= j - i;
        }
    }
    Ok(num / den)
}

/// The shapes of the sub-tableaux of `y` holding letters `1..=j`, for each `j`.
pub fn chain_from_syt(y: &StandardTableau) -> PartitionChain {
    let height = y.rows().len();
    let mut parts = vec![0usize; height];
    let chain = y
        .row_sequence()
        .into_iter()
        .map(|r| {
            parts[r] += 1;
            Partition {
                parts: parts.clone(),
            }
        })
        .collect();
    PartitionChain(chain)
}

/// Row-insertion RSK: returns the insertion tableau `P` and recording tableau `Q`.
pub fn rsk(word: &Configuration) -> (WeylTableau, StandardTableau) {
    let mut p: Vec<Vec<usize>> = Vec::new();
    let mut q: Vec<Vec<usize>> = Vec::new();
    for (step, &letter) in word.letters().iter().enumerate() {
        let mut x = letter;
        let mut r = 0;
        loop {
            if r == p.len() {
                p.push(vec![x]);
                q.push(vec![step + 1]);
                break;
            }
            match p[r].iter().position(|&v| v > x) {
                Some(c) => {
                    std::mem::swap(&mut p[r][c], &mut x);
                    r += 1;
                }
                None => {
                    p[r].push(x);
                    q[r].push(step + 1);
                    break;
                }
            }
        }
    }
    (
        WeylTableau::new(p).expect("RSK produces a semistandard tableau"),
        StandardTableau::new(q).expect("RSK produces a standard tableau"),
    )
}

/// Letter multiplicities of a configuration over `1..=n`.
pub fn content(f: &Configuration, n: usize) -> WeightVector {
    let mut counts = vec![0; n];
    for &l in f.letters() {
        counts[l - 1] += 1;
    }
    WeightVector(counts)
}

/// Letter multiplicities of a Weyl tableau over `1..=n`.
pub fn weight(t: &WeylTableau, n: usize) -> WeightVector {
    let mut counts = vec![0; n.max(t.max_entry())];
    for &l in t.rows().iter().flatten() {
        counts[l - 1] += 1;
    }
    WeightVector(counts)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(p: &[usize]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    fn syt(rows: &[&[usize]]) -> StandardTableau {
        StandardTableau::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn sswt(rows: &[&[usize]]) -> WeylTableau {
        WeylTableau::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    // Oracle: every n-tuple over 0..=N that sums to N and weakly decreases.
    fn partitions_brute(total: usize, n: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut cur = vec![0usize; n];
        loop {
            if cur.iter().sum::<usize>() == total && cur.windows(2).all(|w| w[0] >= w[1]) {
                out.push(cur.clone());
            }
            let mut i = 0;
            loop {
                if i == n {
                    out.sort_by(|a, b| b.cmp(a));
                    return out;
                }
                if cur[i] < total {
                    cur[i] += 1;
                    break;
                }
                cur[i] = 0;
                i += 1;
            }
        }
    }

    // Oracle: all fillings of the diagram with values in 1..=max, filtered.
    fn fillings(lambda: &[usize], max: usize) -> Vec<Vec<Vec<usize>>> {
        let cells: usize = lambda.iter().sum();
        let mut out = Vec::new();
        let mut vals = vec![1usize; cells];
        loop {
            let mut rows = Vec::new();
            let mut k = 0;
            for &len in lambda {
                rows.push(vals[k..k + len].to_vec());
                k += len;
            }
            out.push(rows);
            let mut i = 0;
            loop {
                if i == cells {
                    return out;
                }
                if vals[i] < max {
                    vals[i] += 1;
                    break;
                }
                vals[i] = 1;
                i += 1;
            }
        }
    }

    #[test]
    fn partitions_match_exhaustive_enumeration() {
        let got: Vec<Vec<usize>> = enumerate_partitions(4, 3)
            .iter()
            .map(|p| p.parts().to_vec())
            .collect();
        assert_eq!(got, partitions_brute(4, 3));
        assert_eq!(
            got,
            vec![vec![4, 0, 0], vec![3, 1, 0], vec![2, 2, 0], vec![2, 1, 1]]
        );
        for n in 1..=4 {
            for total in 1..=6 {
                let got: Vec<Vec<usize>> = enumerate_partitions(total, n)
                    .iter()
                    .map(|p| p.parts().to_vec())
                    .collect();
                assert_eq!(got, partitions_brute(total, n), "N={total} n={n}");
            }
        }
    }

    #[test]
    fn partitions_trivial_cases() {
        assert_eq!(enumerate_partitions(1, 5), vec![part(&[1])]);
        assert_eq!(enumerate_partitions(3, 1), vec![part(&[3])]);
    }

    #[test]
    fn syt_examples() {
        assert_eq!(
            enumerate_syt(&part(&[2, 1])),
            vec![syt(&[&[1, 2], &[3]]), syt(&[&[1, 3], &[2]])]
        );
        assert_eq!(enumerate_syt(&part(&[5])).len(), 1);
        assert_eq!(enumerate_syt(&part(&[3, 1])).len(), 3);
    }

    #[test]
    fn syt_matches_fill_and_filter() {
        for lambda in [
            vec![2, 1],
            vec![3, 1],
            vec![2, 2],
            vec![3, 2],
            vec![2, 1, 1],
            vec![3, 2, 1],
        ] {
            let total: usize = lambda.iter().sum();
            let mut brute: Vec<StandardTableau> = fillings(&lambda, total)
                .into_iter()
                .filter_map(|rows| StandardTableau::new(rows).ok())
                .collect();
            brute.sort_by_key(StandardTableau::row_sequence);
            let got = enumerate_syt(&part(&lambda));
            assert_eq!(got, brute, "{lambda:?}");
        }
    }

    #[test]
    fn sswt_examples() {
        assert_eq!(
            enumerate_sswt(&part(&[1, 1]), 2).unwrap(),
            vec![sswt(&[&[1], &[2]])]
        );
        let two = enumerate_sswt(&part(&[2]), 2).unwrap();
        let mut as_set = two.clone();
        as_set.sort();
        assert_eq!(
            as_set,
            vec![sswt(&[&[1, 1]]), sswt(&[&[1, 2]]), sswt(&[&[2, 2]])]
        );
        // ascending GT order: (2,0/0), (2,0/1), (2,0/2)
        assert_eq!(
            two,
            vec![sswt(&[&[2, 2]]), sswt(&[&[1, 2]]), sswt(&[&[1, 1]])]
        );
        assert_eq!(enumerate_sswt(&part(&[3, 1]), 3).unwrap().len(), 15);
        assert!(enumerate_sswt(&part(&[1, 1, 1]), 2).is_err());
    }

    #[test]
    fn sswt_matches_fill_and_filter() {
        for (lambda, n) in [
            (vec![2, 1], 3),
            (vec![3, 1], 3),
            (vec![2, 2], 3),
            (vec![2, 1, 1], 4),
            (vec![3], 2),
        ] {
            let mut brute: Vec<WeylTableau> = fillings(&lambda, n)
                .into_iter()
                .filter_map(|rows| WeylTableau::new(rows).ok())
                .collect();
            brute.sort();
            let mut got = enumerate_sswt(&part(&lambda), n).unwrap();
            got.sort();
            assert_eq!(got, brute, "{lambda:?} n={n}");
        }
    }

    #[test]
    fn dimension_examples() {
        assert_eq!(dim_symmetric(&part(&[3, 1])), BigUint::from(3u32));
        assert_eq!(dim_symmetric(&part(&[6])), BigUint::from(1u32));
        assert_eq!(dim_symmetric(&part(&[2, 1])), BigUint::from(2u32));
        assert_eq!(
            dim_unitary(&part(&[3, 1]), 3).unwrap(),
            BigUint::from(15u32)
        );
        assert_eq!(dim_unitary(&part(&[1]), 7).unwrap(), BigUint::from(7u32));
        assert_eq!(dim_unitary(&part(&[1, 1]), 2).unwrap(), BigUint::from(1u32));
        assert!(dim_unitary(&part(&[1, 1, 1]), 2).is_err());
    }

    #[test]
    fn formulas_match_enumeration() {
        for n in 1..=4 {
            for total in 1..=6 {
                for lambda in enumerate_partitions(total, n) {
                    assert_eq!(
                        dim_symmetric(&lambda),
                        BigUint::from(enumerate_syt(&lambda).len())
                    );
                    assert_eq!(
                        dim_unitary(&lambda, n).unwrap(),
                        BigUint::from(enumerate_sswt(&lambda, n).unwrap().len())
                    );
                }
            }
        }
    }

    #[test]
    fn chain_examples() {
        let chain = chain_from_syt(&syt(&[&[1, 2, 4], &[3]]));
        let expected = vec![part(&[1]), part(&[2]), part(&[2, 1]), part(&[3, 1])];
        assert_eq!(chain.partitions(), expected.as_slice());
        assert_eq!(
            chain_from_syt(&syt(&[&[1], &[2]])).partitions(),
            &[part(&[1]), part(&[1, 1])]
        );
        assert_eq!(
            chain_from_syt(&syt(&[&[1, 2, 3]])).partitions(),
            &[part(&[1]), part(&[2]), part(&[3])]
        );
    }

    #[test]
    fn chain_is_injective() {
        for lambda in enumerate_partitions(6, 6) {
            let tabs = enumerate_syt(&lambda);
            let mut chains: Vec<_> = tabs.iter().map(|y| chain_from_syt(y).0).collect();
            chains.sort();
            chains.dedup();
            assert_eq!(chains.len(), tabs.len());
            for y in &tabs {
                assert!(PartitionChain::new(chain_from_syt(y).0).is_ok());
            }
        }
    }

    #[test]
    fn rsk_examples() {
        let c = |v: &[usize]| Configuration::new(v.to_vec(), 3).unwrap();
        assert_eq!(
            rsk(&c(&[1, 3, 2, 1])),
            (sswt(&[&[1, 1], &[2], &[3]]), syt(&[&[1, 2], &[3], &[4]]))
        );
        assert_eq!(
            rsk(&c(&[1, 1, 1])),
            (sswt(&[&[1, 1, 1]]), syt(&[&[1, 2, 3]]))
        );
        assert_eq!(rsk(&c(&[2, 1])), (sswt(&[&[1], &[2]]), syt(&[&[1], &[2]])));
    }

    #[test]
    fn rsk_shapes_and_weights() {
        for shape in [(2, 5), (3, 4)] {
            let shape = SystemShape::new(shape.0, shape.1).unwrap();
            for f in Configuration::all(shape) {
                let (p, q) = rsk(&f);
                assert_eq!(p.shape(), q.shape());
                assert_eq!(weight(&p, shape.n()), content(&f, shape.n()));
            }
        }
    }

    #[test]
    fn weights() {
        let f = Configuration::new(vec![1, 3, 2, 1], 3).unwrap();
        assert_eq!(content(&f, 3), WeightVector(vec![2, 1, 1]));
        assert_eq!(
            weight(&sswt(&[&[1, 1, 3], &[2]]), 3),
            WeightVector(vec![2, 1, 1])
        );
        assert_eq!(weight(&sswt(&[&[1], &[2]]), 2), WeightVector(vec![1, 1]));
    }

    #[test]
    fn census_identity() {
        for n in 1..=4usize {
            for total in 1..=6usize {
                let sum: BigUint = enumerate_partitions(total, n)
                    .iter()
                    .map(|l| dim_symmetric(l) * dim_unitary(l, n).unwrap())
                    .sum();
                assert_eq!(sum, BigUint::from(n).pow(total as u32));
            }
        }
    }

    #[test]
    fn validation_errors() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(StandardTableau::new(vec![vec![1, 1]]).is_err());
        assert!(StandardTableau::new(vec![vec![2, 1]]).is_err());
        assert!(StandardTableau::new(vec![vec![1, 3], vec![2, 4], vec![5]]).is_ok());
        assert!(StandardTableau::new(vec![vec![1], vec![2, 3]]).is_err());
        assert!(WeylTableau::new(vec![vec![1, 1], vec![1]]).is_err());
        assert!(WeylTableau::new(vec![vec![1, 1], vec![2]]).is_ok());
        assert!(Configuration::new(vec![1, 4], 3).is_err());
        assert!(SystemShape::new(0, 2).is_err());
        assert!(PartitionChain::new(vec![part(&[1]), part(&[3])]).is_err());
    }

    #[test]
    fn configuration_order_and_index() {
        let shape = SystemShape::new(3, 3).unwrap();
        let all = Configuration::all(shape);
        assert_eq!(all.len(), 27);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        for (i, f) in all.iter().enumerate() {
            assert_eq!(f.index(3), i);
        }
    }
}
