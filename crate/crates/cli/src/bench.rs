//! Per-amplitude timing over seeded random instances.

use std::fmt::Write as _;
use std::io::Write;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use swt_core::crystal::{BranchOrder, Method};
use swt_core::tableaux::rsk;
use swt_core::transform::assemble_with;
use swt_core::{
    AssembleOptions, Configuration, ElementQuery, Execution, Partition, StandardTableau,
    SystemShape, WeylTableau,
};

use crate::{emit, BenchArgs, CmdResult, Failure, Format, EXIT_INPUT, EXIT_OK, EXIT_VERIFY};

/// A matrix element `⟨f|λ t y⟩` with `weight(t) = content(f)`.
#[derive(Clone, Debug)]
pub struct Instance {
    pub n: usize,
    pub f: Configuration,
    pub lambda: Partition,
    pub t: WeylTableau,
    pub y: StandardTableau,
}

impl Instance {
    pub fn query(&self) -> ElementQuery {
        ElementQuery::new(self.n, &self.f, &self.lambda, &self.t, &self.y)
            .expect("instance is consistent by construction")
    }
}

/// Uniform `f`; `t` is the insertion tableau of a shuffle of `f`, so its
/// weight matches; `y` is an independent standard tableau of the same shape,
/// built by peeling random corners.
pub fn random_instance<R: Rng>(n: usize, nodes: usize, rng: &mut R) -> Instance {
    let letters: Vec<usize> = (0..nodes).map(|_| rng.random_range(1..=n)).collect();
    let f = Configuration::new(letters.clone(), n).expect("letters in range");
    let mut shuffled = letters;
    shuffled.shuffle(rng);
    let (t, _) = rsk(&Configuration::new(shuffled, n).expect("letters in range"));
    let lambda = t.shape();
    let y = random_syt(&lambda, rng);
    Instance { n, f, lambda, t, y }
}

fn random_syt<R: Rng>(lambda: &Partition, rng: &mut R) -> StandardTableau {
    let mut remaining: Vec<usize> = lambda.nonzero().to_vec();
    let mut rows: Vec<Vec<usize>> = remaining.iter().map(|&len| vec![0; len]).collect();
    for label in (1..=lambda.size()).rev() {
        let corners: Vec<usize> = (0..remaining.len())
            .filter(|&r| {
                remaining[r] > 0
                    && remaining
                        .get(r + 1)
                        .is_none_or(|&below| below < remaining[r])
            })
            .collect();
        let r = corners[rng.random_range(0..corners.len())];
        remaining[r] -= 1;
        rows[r][remaining[r]] = label;
    }
    StandardTableau::new(rows).expect("corner peeling yields a standard tableau")
}

#[derive(Clone, Debug, PartialEq)]
pub struct BenchRow {
    pub nodes: usize,
    pub mean_ns_dp: f64,
    pub max_ns_dp: f64,
    /// `None` when every instance exceeded the path cap.
    pub mean_ns_paths: Option<f64>,
    /// Largest path count over the sampled instances.
    pub path_count: BigUint,
}

fn ns(d: Duration) -> f64 {
    d.as_secs_f64() * 1e9
}

/// Times DP and literal path enumeration on the same instances; fails if
/// the two disagree anywhere.
pub fn table(
    n: usize,
    nodes: std::ops::RangeInclusive<usize>,
    samples: usize,
    seed: u64,
    path_cap: u64,
) -> Result<Vec<BenchRow>, Failure> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let cap = BigUint::from(path_cap);
    let mut rows = Vec::new();
    for big_n in nodes {
        let mut dp = Vec::with_capacity(samples);
        let mut paths = Vec::new();
        let mut max_paths = BigUint::from(0u32);
        for _ in 0..samples {
            let inst = random_instance(n, big_n, &mut rng);
            let start = Instant::now();
            let value = inst.query().amplitude()?;
            dp.push(ns(start.elapsed()));

            let count = inst.query().path_count()?;
            if count <= cap {
                let start = Instant::now();
                let literal = inst
                    .query()
                    .amplitude_with(Method::Paths, BranchOrder::Forward)?;
                paths.push(ns(start.elapsed()));
                if literal != value {
                    return Err(Failure::new(
                        EXIT_VERIFY,
                        "oracle_mismatch",
                        format!(
                            "DP {value} != paths {literal} at f={} lambda={} t={} y={}",
                            inst.f, inst.lambda, inst.t, inst.y
                        ),
                    ));
                }
            }
            max_paths = max_paths.max(count);
        }
        let mean = |v: &[f64]| v.iter().sum::<f64>() / v.len() as f64;
        rows.push(BenchRow {
            nodes: big_n,
            mean_ns_dp: mean(&dp),
            max_ns_dp: dp.iter().cloned().fold(0.0, f64::max),
            mean_ns_paths: (!paths.is_empty()).then(|| mean(&paths)),
            path_count: max_paths,
        });
    }
    Ok(rows)
}

fn assembly_table(n: usize) -> Result<Vec<(usize, usize, f64, f64)>, Failure> {
    let shapes: Vec<(usize, usize)> = match n {
        1 => (1..=6).map(|b| (1, b)).collect(),
        2 => (2..=7).map(|b| (2, b)).collect(),
        _ => (2..=4).map(|b| (3, b)).collect(),
    };
    let mut out = Vec::new();
    for (n, big_n) in shapes {
        let shape = SystemShape::new(n, big_n)?;
        let time = |execution| -> Result<f64, Failure> {
            let opts = AssembleOptions {
                execution,
                ..AssembleOptions::default()
            };
            let start = Instant::now();
            assemble_with(shape, &opts)?;
            Ok(ns(start.elapsed()))
        };
        let par = time(Execution::Parallel)?;
        let seq = time(Execution::Sequential)?;
        out.push((n, big_n, par, seq));
    }
    Ok(out)
}

pub fn run(a: &BenchArgs, out: &mut dyn Write) -> CmdResult {
    if a.n == 0 || a.min_nodes == 0 || a.min_nodes > a.max_nodes || a.samples == 0 {
        return Err(Failure::new(
            EXIT_INPUT,
            "invalid_input",
            "bench needs n >= 1, 1 <= min-nodes <= max-nodes and samples >= 1",
        ));
    }
    let rows = table(
        a.n,
        a.min_nodes..=a.max_nodes,
        a.samples,
        a.seed,
        a.path_cap,
    )?;
    let assembly = if a.assembly {
        assembly_table(a.n)?
    } else {
        Vec::new()
    };
    let fmt_opt = |v: Option<f64>| v.map(|x| format!("{x:.0}")).unwrap_or_default();
    let doc = match a.format {
        Format::Csv | Format::Text => {
            let mut s = String::from("N,mean_ns_dp,mean_ns_paths,path_count\n");
            for r in &rows {
                let _ = writeln!(
                    s,
                    "{},{:.0},{},{}",
                    r.nodes,
                    r.mean_ns_dp,
                    fmt_opt(r.mean_ns_paths),
                    r.path_count
                );
            }
            if !assembly.is_empty() {
                s.push_str("\nn,N,ns_parallel,ns_sequential\n");
                for (n, big_n, par, seq) in &assembly {
                    let _ = writeln!(s, "{n},{big_n},{par:.0},{seq:.0}");
                }
            }
            s
        }
        Format::Json => {
            let doc = json!({
                "n": a.n,
                "seed": a.seed,
                "samples": a.samples,
                "rows": rows.iter().map(|r| json!({
                    "N": r.nodes,
                    "mean_ns_dp": r.mean_ns_dp,
                    "max_ns_dp": r.max_ns_dp,
                    "mean_ns_paths": r.mean_ns_paths,
                    "path_count": r.path_count.to_string(),
                })).collect::<Vec<Value>>(),
                "assembly": assembly.iter().map(|(n, big_n, par, seq)| json!({
                    "n": n, "N": big_n, "ns_parallel": par, "ns_sequential": seq,
                })).collect::<Vec<Value>>(),
            });
            format!("{doc}\n")
        }
    };
    emit(out, &doc)?;
    Ok(EXIT_OK)
}
