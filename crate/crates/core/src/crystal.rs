//! Crystallisation graphs and the sum-over-paths amplitude `⟨f|λ t y⟩`.
//!
//! Letters of `f` are inserted one at a time into Gelfand-Tsetlin patterns,
//! starting from the zero pattern. The top row after `j` insertions is forced
//! to be the `j`-th partition of the chain read off `y`; every legal insertion
//! becomes an edge weighted by the fundamental operator element. The
//! amplitude is the sum over all zero-to-`GT(t)` paths of the product of edge
//! weights.
//!
//! Vertices are deduplicated per level, so the sum is accumulated level by
//! level; a literal path enumerator is kept as an independent cross-check.

use std::collections::HashMap;
use std::rc::Rc;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::calculus::fundamental_element;
use crate::error::{Result, SwtError};
use crate::gt::{GtPattern, ShiftVector};
use crate::radical::{mul_radical, RadicalSum, SignedRadical};
use crate::tableaux::{
    chain_from_syt, content, Configuration, Partition, StandardTableau, WeylTableau,
};

/// Order in which successor patterns are explored. The amplitude does not
/// depend on it; it exists so that independence can be tested.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum BranchOrder {
    #[default]
    Forward,
    Reversed,
}

/// How the path sum is evaluated.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Method {
    /// Per-vertex accumulation over the levelled DAG.
    #[default]
    Accumulate,
    /// Explicit enumeration of every path.
    Paths,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    /// Index into the previous level.
    pub from: usize,
    /// Index into the next level.
    pub to: usize,
    pub shift: ShiftVector,
    pub value: SignedRadical,
}

impl Edge {
    pub fn letter(&self) -> usize {
        self.shift.letter()
    }
}

/// Levelled DAG restricted to vertices lying on a zero-to-target path.
#[derive(Clone, Debug)]
pub struct CrystalGraph {
    target: GtPattern,
    levels: Vec<Vec<GtPattern>>,
    // edges[j] connects levels[j] to levels[j + 1]
    edges: Vec<Vec<Edge>>,
}

/// A validated matrix-element request `⟨f|λ t y⟩` over alphabet `1..=n`.
#[derive(Clone, Debug)]
pub struct ElementQuery {
    n: usize,
    f: Configuration,
    t: WeylTableau,
    y: StandardTableau,
    chain: Vec<Partition>,
    target: GtPattern,
}

impl ElementQuery {
    pub fn new(
        n: usize,
        f: &Configuration,
        lambda: &Partition,
        t: &WeylTableau,
        y: &StandardTableau,
    ) -> Result<Self> {
        if lambda.nonzero_len() > n {
            return Err(SwtError::ShapeMismatch(format!(
                "lambda {lambda} has more than {n} parts"
            )));
        }
        if t.shape() != *lambda {
            return Err(SwtError::ShapeMismatch(format!(
                "t has shape {}, lambda is {lambda}",
                t.shape()
            )));
        }
        if y.shape() != *lambda {
            return Err(SwtError::ShapeMismatch(format!(
                "y has shape {}, lambda is {lambda}",
                y.shape()
            )));
        }
        if f.len() != lambda.size() {
            return Err(SwtError::ShapeMismatch(format!(
                "f has {} letters, lambda has {} boxes",
                f.len(),
                lambda.size()
            )));
        }
        let f = Configuration::new(f.letters().to_vec(), n)?;
        let target = GtPattern::from_weyl(t, n)?;
        let chain = chain_from_syt(y)
            .partitions()
            .iter()
            .map(|p| p.padded(n))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            n,
            f,
            t: t.clone(),
            y: y.clone(),
            chain,
            target,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn target(&self) -> &GtPattern {
        &self.target
    }

    pub fn chain(&self) -> &[Partition] {
        &self.chain
    }

    pub fn configuration(&self) -> &Configuration {
        &self.f
    }

    pub fn weyl(&self) -> &WeylTableau {
        &self.t
    }

    pub fn standard(&self) -> &StandardTableau {
        &self.y
    }

    /// Whether the content of `f` equals the weight of `t`.
    pub fn weights_match(&self) -> bool {
        content(&self.f, self.n) == self.target.weight()
    }

    pub fn graph(&self) -> Result<CrystalGraph> {
        self.graph_with(BranchOrder::Forward)
    }

    pub fn graph_with(&self, order: BranchOrder) -> Result<CrystalGraph> {
        CrystalGraph::build(self, order)
    }

    pub fn amplitude(&self) -> Result<RadicalSum> {
        Ok(self.graph()?.amplitude())
    }

    pub fn amplitude_with(&self, method: Method, order: BranchOrder) -> Result<RadicalSum> {
        let g = self.graph_with(order)?;
        Ok(match method {
            Method::Accumulate => g.amplitude(),
            Method::Paths => g.path_sum(),
        })
    }

    pub fn path_count(&self) -> Result<BigUint> {
        Ok(self.graph()?.path_count())
    }
}

impl CrystalGraph {
    fn build(query: &ElementQuery, order: BranchOrder) -> Result<Self> {
        let n = query.n;
        let target = query.target.clone();
        let mut levels = vec![vec![GtPattern::zero(n)]];
        let mut edges: Vec<Vec<Edge>> = Vec::with_capacity(query.f.len());

        for (step, &letter) in query.f.letters().iter().enumerate() {
            let top = &query.chain[step];
            let prev = &levels[step];
            let mut index: HashMap<GtPattern, usize> = HashMap::new();
            let mut next: Vec<GtPattern> = Vec::new();
            let mut level_edges = Vec::new();
            let sources: Vec<usize> = match order {
                BranchOrder::Forward => (0..prev.len()).collect(),
                BranchOrder::Reversed => (0..prev.len()).rev().collect(),
            };
            for from in sources {
                let vertex = &prev[from];
                let mut successors = vertex.insert_letter(letter, top)?;
                if order == BranchOrder::Reversed {
                    successors.reverse();
                }
                for (succ, shift) in successors {
                    if !succ.dominated_by(&target) {
                        continue;
                    }
                    let value = fundamental_element(vertex, &shift)?;
                    if value.is_zero() {
                        continue;
                    }
                    let to = *index.entry(succ.clone()).or_insert_with(|| {
                        next.push(succ);
                        next.len() - 1
                    });
                    level_edges.push(Edge {
                        from,
                        to,
                        shift,
                        value,
                    });
                }
            }
            levels.push(next);
            edges.push(level_edges);
        }

        let mut graph = Self {
            target,
            levels,
            edges,
        };
        graph.prune();
        Ok(graph)
    }

    // Keep only vertices from which the target is reachable.
    fn prune(&mut self) {
        let depth = self.levels.len() - 1;
        let mut keep: Vec<Vec<bool>> = self.levels.iter().map(|l| vec![false; l.len()]).collect();
        for (i, v) in self.levels[depth].iter().enumerate() {
            keep[depth][i] = *v == self.target;
        }
        for j in (0..depth).rev() {
            for e in &self.edges[j] {
                if keep[j + 1][e.to] {
                    keep[j][e.from] = true;
                }
            }
        }
        let mut remap: Vec<Vec<Option<usize>>> = Vec::with_capacity(depth + 1);
        for (level, flags) in self.levels.iter_mut().zip(&keep) {
            let mut map = vec![None; level.len()];
            let mut kept = Vec::new();
            for (i, v) in level.drain(..).enumerate() {
                if flags[i] {
                    map[i] = Some(kept.len());
                    kept.push(v);
                }
            }
            *level = kept;
            remap.push(map);
        }
        for (j, level_edges) in self.edges.iter_mut().enumerate() {
            level_edges.retain_mut(|e| match (remap[j][e.from], remap[j + 1][e.to]) {
                (Some(a), Some(b)) => {
                    e.from = a;
                    e.to = b;
                    true
                }
                _ => false,
            });
        }
        if self.levels[0].is_empty() {
            self.levels[0].push(GtPattern::zero(self.target.n()));
        }
    }

    pub fn target(&self) -> &GtPattern {
        &self.target
    }

    pub fn levels(&self) -> &[Vec<GtPattern>] {
        &self.levels
    }

    /// `edges()[j]` joins level `j` to level `j + 1`.
    pub fn edges(&self) -> &[Vec<Edge>] {
        &self.edges
    }

    pub fn vertex_count(&self) -> usize {
        self.levels.iter().map(Vec::len).sum()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.iter().map(Vec::len).sum()
    }

    /// True when some path reaches the target.
    pub fn reaches_target(&self) -> bool {
        self.levels.last().is_some_and(|l| l.contains(&self.target))
    }

    /// Sum over paths, accumulated per vertex.
    pub fn amplitude(&self) -> RadicalSum {
        if !self.reaches_target() {
            return RadicalSum::zero();
        }
        let mut acc = vec![RadicalSum::one()];
        for (j, level_edges) in self.edges.iter().enumerate() {
            let mut next = vec![RadicalSum::zero(); self.levels[j + 1].len()];
            for e in level_edges {
                let contrib = acc[e.from].mul_radical(&e.value);
                next[e.to] += &contrib;
            }
            acc = next;
        }
        acc.into_iter().next().unwrap_or_default()
    }

    /// Number of distinct zero-to-target paths.
    pub fn path_count(&self) -> BigUint {
        if !self.reaches_target() {
            return BigUint::zero();
        }
        let mut acc = vec![BigUint::one()];
        for (j, level_edges) in self.edges.iter().enumerate() {
            let mut next = vec![BigUint::zero(); self.levels[j + 1].len()];
            for e in level_edges {
                next[e.to] += &acc[e.from];
            }
            acc = next;
        }
        acc.into_iter().next().unwrap_or_default()
    }

    /// Calls `visit` with the edge sequence of every zero-to-target path.
    pub fn for_each_path<F: FnMut(&[&Edge])>(&self, mut visit: F) {
        if !self.reaches_target() {
            return;
        }
        let depth = self.edges.len();
        let outgoing: Vec<Vec<Vec<&Edge>>> = (0..depth)
            .map(|j| {
                let mut out = vec![Vec::new(); self.levels[j].len()];
                for e in &self.edges[j] {
                    out[e.from].push(e);
                }
                out
            })
            .collect();
        let mut stack: Vec<&Edge> = Vec::with_capacity(depth);
        fn walk<'a, F: FnMut(&[&Edge])>(
            outgoing: &[Vec<Vec<&'a Edge>>],
            level: usize,
            vertex: usize,
            stack: &mut Vec<&'a Edge>,
            visit: &mut F,
        ) {
            if level == outgoing.len() {
                visit(stack);
                return;
            }
            for &e in &outgoing[level][vertex] {
                stack.push(e);
                walk(outgoing, level + 1, e.to, stack, visit);
                stack.pop();
            }
        }
        walk(&outgoing, 0, 0, &mut stack, &mut visit);
    }

    /// Sum over explicitly enumerated paths, each a single signed radical.
    pub fn path_sum(&self) -> RadicalSum {
        let mut total = RadicalSum::zero();
        self.for_each_path(|path| {
            let product = path
                .iter()
                .fold(SignedRadical::one(), |acc, e| mul_radical(&acc, &e.value));
            total += &product.canonicalize();
        });
        total
    }

    /// Levels as pattern strings and every edge with its operator value.
    pub fn trace_json(&self) -> Value {
        let levels: Vec<Value> = self
            .levels
            .iter()
            .map(|l| Value::Array(l.iter().map(|p| Value::String(p.to_string())).collect()))
            .collect();
        let mut edges = Vec::new();
        for (j, level_edges) in self.edges.iter().enumerate() {
            for e in level_edges {
                edges.push(json!({
                    "level": j + 1,
                    "from": self.levels[j][e.from].to_string(),
                    "to": self.levels[j + 1][e.to].to_string(),
                    "letter": e.letter(),
                    "taus": e.shift.taus(),
                    "value": e.value.canonicalize().to_json(),
                }));
            }
        }
        json!({ "levels": levels, "edges": edges })
    }
}

/// Builds the crystallisation graph for `⟨f|shape(y), t, y⟩`.
pub fn build_graph(
    n: usize,
    f: &Configuration,
    y: &StandardTableau,
    t: &WeylTableau,
) -> Result<CrystalGraph> {
    ElementQuery::new(n, f, &y.shape(), t, y)?.graph()
}

/// `⟨f|λ t y⟩` in canonical radical form.
pub fn amplitude(
    n: usize,
    f: &Configuration,
    lambda: &Partition,
    t: &WeylTableau,
    y: &StandardTableau,
) -> Result<RadicalSum> {
    ElementQuery::new(n, f, lambda, t, y)?.amplitude()
}

pub fn path_count(
    n: usize,
    f: &Configuration,
    lambda: &Partition,
    t: &WeylTableau,
    y: &StandardTableau,
) -> Result<BigUint> {
    ElementQuery::new(n, f, lambda, t, y)?.path_count()
}

/// Every nonzero amplitude `⟨f|λ t y⟩` of one column, as
/// `(row index, value)` in ascending configuration order.
///
/// Configurations sharing a prefix share the accumulated vertex values of
/// that prefix, so the whole column costs one depth-first sweep.
pub fn column_amplitudes(
    n: usize,
    t: &WeylTableau,
    y: &StandardTableau,
) -> Result<Vec<(usize, RadicalSum)>> {
    let target = GtPattern::from_weyl(t, n)?;
    if t.shape() != y.shape() {
        return Err(SwtError::ShapeMismatch(format!(
            "t has shape {}, y has shape {}",
            t.shape(),
            y.shape()
        )));
    }
    let chain = chain_from_syt(y)
        .partitions()
        .iter()
        .map(|p| p.padded(n))
        .collect::<Result<Vec<_>>>()?;
    let mut out = Vec::new();
    let start = vec![(GtPattern::zero(n), RadicalSum::one())];
    let mut cache = vec![HashMap::new(); chain.len() * n];
    sweep(n, &chain, &target, 0, 0, start, &mut cache, &mut out)?;
    Ok(out)
}

// Successors of a vertex at one step for one letter, with nonzero operator values
// in canonical form.
// Indexed by `step * n + letter - 1`.
type StepCache = Vec<HashMap<GtPattern, Rc<Vec<(GtPattern, RadicalSum)>>>>;

fn successors(
    cache: &mut StepCache,
    chain: &[Partition],
    target: &GtPattern,
    step: usize,
    vertex: &GtPattern,
    letter: usize,
) -> Result<Rc<Vec<(GtPattern, RadicalSum)>>> {
    let slot = step * target.n() + letter - 1;
    if let Some(hit) = cache[slot].get(vertex) {
        return Ok(Rc::clone(hit));
    }
    let mut out = Vec::new();
    let goal = target.weight();
    for (succ, shift) in vertex.insert_letter(letter, &chain[step])? {
        let w = succ.weight();
        if !succ.dominated_by(target) || w.0.iter().zip(&goal.0).any(|(a, b)| a > b) {
            continue;
        }
        let value = fundamental_element(vertex, &shift)?;
        if !value.is_zero() {
            out.push((succ, value.canonicalize()));
        }
    }
    let out = Rc::new(out);
    cache[slot].insert(vertex.clone(), Rc::clone(&out));
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn sweep(
    n: usize,
    chain: &[Partition],
    target: &GtPattern,
    step: usize,
    prefix: usize,
    state: Vec<(GtPattern, RadicalSum)>,
    cache: &mut StepCache,
    out: &mut Vec<(usize, RadicalSum)>,
) -> Result<()> {
    if step == chain.len() {
        if let Some((_, v)) = state.into_iter().find(|(p, _)| p == target) {
            out.push((prefix, v));
        }
        return Ok(());
    }
    for letter in 1..=n {
        let mut index: HashMap<GtPattern, usize> = HashMap::new();
        let mut next: Vec<(GtPattern, RadicalSum)> = Vec::new();
        for (vertex, acc) in &state {
            for (succ, value) in successors(cache, chain, target, step, vertex, letter)?.iter() {
                let contrib = acc * value;
                match index.get(succ) {
                    Some(&i) => next[i].1 += &contrib,
                    None => {
                        index.insert(succ.clone(), next.len());
                        next.push((succ.clone(), contrib));
                    }
                }
            }
        }
        next.retain(|(_, v)| !v.is_zero());
        if !next.is_empty() {
            sweep(
                n,
                chain,
                target,
                step + 1,
                prefix * n + (letter - 1),
                next,
                cache,
                out,
            )?;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::radical::rational;

    fn part(p: &[usize]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    fn syt(rows: &[&[usize]]) -> StandardTableau {
        StandardTableau::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn sswt(rows: &[&[usize]]) -> WeylTableau {
        WeylTableau::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn cfg(v: &[usize], n: usize) -> Configuration {
        Configuration::new(v.to_vec(), n).unwrap()
    }

    fn pat(top_down: &[&[usize]]) -> GtPattern {
        GtPattern::from_top_down(top_down.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn worked() -> ElementQuery {
        ElementQuery::new(
            3,
            &cfg(&[1, 3, 2, 1], 3),
            &part(&[3, 1]),
            &sswt(&[&[1, 1, 3], &[2]]),
            &syt(&[&[1, 2, 4], &[3]]),
        )
        .unwrap()
    }

    #[test]
    fn worked_example_graph() {
        let g = worked().graph().unwrap();
        assert_eq!(g.vertex_count(), 6);
        assert_eq!(g.path_count(), BigUint::from(2u32));
        assert_eq!(g.levels()[4], vec![pat(&[&[3, 1, 0], &[2, 1], &[2]])]);
        assert_eq!(g.levels()[3].len(), 2);
        assert_eq!(g.amplitude(), RadicalSum::rational(rational(5, 12)));
        assert_eq!(g.path_sum(), RadicalSum::rational(rational(5, 12)));
    }

    #[test]
    fn level_invariants() {
        let q = worked();
        let g = q.graph().unwrap();
        let letters = q.configuration().letters();
        for (j, level) in g.levels().iter().enumerate().skip(1) {
            let prefix = cfg(&letters[..j], 3);
            let mut w = content(&prefix, 3);
            w.0.resize(3, 0);
            for v in level {
                assert_eq!(v.top(), q.chain()[j - 1]);
                assert_eq!(v.weight(), w);
            }
        }
    }

    #[test]
    fn trivial_single_edge() {
        let g = build_graph(1, &cfg(&[1], 1), &syt(&[&[1]]), &sswt(&[&[1]])).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert_eq!(g.edges()[0][0].value, SignedRadical::one());
        assert_eq!(g.path_count(), BigUint::one());
    }

    #[test]
    fn weight_mismatch_gives_zero() {
        let g = build_graph(
            2,
            &cfg(&[1, 1], 2),
            &syt(&[&[1], &[2]]),
            &sswt(&[&[1], &[2]]),
        )
        .unwrap();
        assert!(!g.reaches_target());
        assert!(g.amplitude().is_zero());
        assert_eq!(g.path_count(), BigUint::zero());
        let q = ElementQuery::new(
            2,
            &cfg(&[1, 1], 2),
            &part(&[1, 1]),
            &sswt(&[&[1], &[2]]),
            &syt(&[&[1], &[2]]),
        )
        .unwrap();
        assert!(!q.weights_match());
        assert!(q.amplitude().unwrap().is_zero());
    }

    #[test]
    fn singlet_amplitude() {
        let a = amplitude(
            2,
            &cfg(&[2, 1], 2),
            &part(&[1, 1]),
            &sswt(&[&[1], &[2]]),
            &syt(&[&[1], &[2]]),
        )
        .unwrap();
        assert_eq!(a, RadicalSum::term(BigUint::from(2u32), rational(-1, 2)));
        let b = amplitude(
            2,
            &cfg(&[1, 2], 2),
            &part(&[1, 1]),
            &sswt(&[&[1], &[2]]),
            &syt(&[&[1], &[2]]),
        )
        .unwrap();
        assert_eq!(b, RadicalSum::term(BigUint::from(2u32), rational(1, 2)));
    }

    #[test]
    fn mismatched_shapes_rejected() {
        let f = cfg(&[1, 2, 1], 2);
        assert!(amplitude(
            2,
            &f,
            &part(&[2, 1]),
            &sswt(&[&[1, 1, 2]]),
            &syt(&[&[1, 2], &[3]])
        )
        .is_err());
        assert!(amplitude(
            2,
            &f,
            &part(&[3]),
            &sswt(&[&[1, 1], &[2]]),
            &syt(&[&[1, 2], &[3]])
        )
        .is_err());
        assert!(amplitude(
            2,
            &cfg(&[1, 2], 2),
            &part(&[2, 1]),
            &sswt(&[&[1, 1], &[2]]),
            &syt(&[&[1, 2], &[3]])
        )
        .is_err());
        assert!(amplitude(
            2,
            &cfg(&[1, 2, 3], 3),
            &part(&[1, 1, 1]),
            &sswt(&[&[1], &[2], &[3]]),
            &syt(&[&[1], &[2], &[3]])
        )
        .is_err());
    }

    #[test]
    fn order_independence() {
        let q = worked();
        let fwd = q
            .amplitude_with(Method::Accumulate, BranchOrder::Forward)
            .unwrap();
        let rev = q
            .amplitude_with(Method::Accumulate, BranchOrder::Reversed)
            .unwrap();
        let paths = q
            .amplitude_with(Method::Paths, BranchOrder::Reversed)
            .unwrap();
        assert_eq!(fwd, rev);
        assert_eq!(fwd, paths);
    }

    #[test]
    fn every_path_is_a_single_radical() {
        let g = worked().graph().unwrap();
        let mut seen = 0;
        g.for_each_path(|path| {
            assert_eq!(path.len(), 4);
            let p = path
                .iter()
                .fold(SignedRadical::one(), |a, e| mul_radical(&a, &e.value));
            assert!(p.canonicalize().len() <= 1);
            seen += 1;
        });
        assert_eq!(seen, 2);
    }

    #[test]
    fn trace_document() {
        let doc = worked().graph().unwrap().trace_json();
        assert_eq!(doc["levels"].as_array().unwrap().len(), 5);
        assert_eq!(doc["levels"][4][0], "3,1,0/2,1/2");
        let edges = doc["edges"].as_array().unwrap();
        assert_eq!(edges.len(), 6);
        assert_eq!(edges[0]["value"].to_string(), "[[1,1,1]]");
    }

    #[test]
    fn column_sweep_matches_per_entry() {
        let n = 3;
        let lambda = part(&[3, 1]);
        let t = sswt(&[&[1, 1, 3], &[2]]);
        let y = syt(&[&[1, 2, 4], &[3]]);
        let col = column_amplitudes(n, &t, &y).unwrap();
        let shape = crate::tableaux::SystemShape::new(n, 4).unwrap();
        let mut expected = Vec::new();
        for (i, f) in Configuration::all(shape).iter().enumerate() {
            let a = amplitude(n, f, &lambda, &t, &y).unwrap();
            if !a.is_zero() {
                expected.push((i, a));
            }
        }
        assert_eq!(col, expected);
        let golden = cfg(&[1, 3, 2, 1], 3).index(3);
        let hit = col.iter().find(|(i, _)| *i == golden).unwrap();
        assert_eq!(hit.1, RadicalSum::rational(rational(5, 12)));
    }
}
