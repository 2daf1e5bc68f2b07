//! Acceptance criteria for the transform and the `swt` command line.
//!
//! Each criterion returns an [`Outcome`]; the `acceptance` test target runs
//! them all and prints one PASS/FAIL line per criterion.

use std::time::{Duration, Instant};

use num_bigint::BigUint;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use swt_cli::{bench_table, random_instance, torus_angles};
use swt_core::crystal::{BranchOrder, Method};
use swt_core::text::{
    parse_configuration, parse_partition, parse_pattern, parse_standard_tableau, parse_weyl_tableau,
};
use swt_core::verify::{
    census, check_coxeter, check_permutation_blocks, check_selection_rule, check_torus_action,
    check_unitarity, float_unitarity_residual,
};
use swt_core::{assemble, ElementQuery, SwMatrix, SystemShape};

pub type Criterion = (&'static str, fn() -> Outcome);

pub struct Outcome {
    pub pass: bool,
    pub detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn matrix(n: usize, nodes: usize) -> SwMatrix {
    assemble(SystemShape::new(n, nodes).unwrap()).unwrap()
}

fn worked_query() -> ElementQuery {
    ElementQuery::new(
        3,
        &parse_configuration("1,3,2,1", 3).unwrap(),
        &parse_partition("3,1").unwrap(),
        &parse_weyl_tableau("1,1,3/2").unwrap(),
        &parse_standard_tableau("1,2,4/3").unwrap(),
    )
    .unwrap()
}

fn golden_element() -> Outcome {
    let mut best = Duration::MAX;
    let mut value = None;
    for _ in 0..5 {
        let start = Instant::now();
        let v = worked_query().amplitude().unwrap();
        best = best.min(start.elapsed());
        value = Some(v);
    }
    let value = value.unwrap();
    let exact = value.to_string() == "5/12";
    outcome(
        exact && best < Duration::from_millis(10),
        format!("value {value}, best of 5 runs {best:?} (< 10ms)"),
    )
}

fn golden_factors() -> Outcome {
    let graph = worked_query().graph().unwrap();
    let expected = [
        ("1,0,0/1,0/1", vec![1], "sqrt(2)/2"),
        ("2,0,0/1,0/1", vec![1, 2], "-sqrt(6)/6"),
        ("2,1,0/2,0/1", vec![1, 2, 1], "-sqrt(3)/12"),
        ("2,0,0/1,0/1", vec![2, 2], "sqrt(2)/2"),
        ("2,1,0/1,1/1", vec![1, 1, 1], "3/4"),
    ];
    let mut failures = Vec::new();
    for (from, taus, want) in &expected {
        let from = parse_pattern(from).unwrap();
        let found = graph.edges().iter().enumerate().find_map(|(j, level)| {
            level
                .iter()
                .find(|e| graph.levels()[j][e.from] == from && e.shift.taus() == taus.as_slice())
        });
        match found {
            Some(e) if e.value.canonicalize().to_string() == *want => {}
            Some(e) => failures.push(format!("{from} {taus:?}: got {}", e.value.canonicalize())),
            None => failures.push(format!("{from} {taus:?}: edge missing")),
        }
    }
    let vertices = graph.vertex_count();
    let paths = graph.path_count();
    outcome(
        failures.is_empty() && vertices == 6 && paths == BigUint::from(2u32),
        format!(
            "5 factors {}, {vertices} vertices, {paths} paths {failures:?}",
            if failures.is_empty() {
                "exact"
            } else {
                "wrong"
            }
        ),
    )
}

fn unitarity() -> Outcome {
    let start = Instant::now();
    let mut notes = Vec::new();
    let mut pass = true;
    for (n, nodes) in [(2, 2), (2, 3), (2, 4), (2, 5), (3, 2), (3, 3)] {
        let r = check_unitarity(&matrix(n, nodes));
        pass &= r.is_identity();
        notes.push(format!(
            "({n},{nodes}) exact {}",
            if r.is_identity() { "I" } else { "not I" }
        ));
    }
    for (n, nodes) in [(2, 6), (3, 4)] {
        let residual = float_unitarity_residual(&matrix(n, nodes));
        pass &= residual < 1e-12;
        notes.push(format!("({n},{nodes}) float {residual:.1e}"));
    }
    let elapsed = start.elapsed();
    pass &= elapsed < Duration::from_secs(300);
    outcome(pass, format!("{}; total {elapsed:?}", notes.join(", ")))
}

fn census_identity() -> Outcome {
    let mut bad = Vec::new();
    for n in 1..=4 {
        for nodes in 1..=6 {
            if !census(SystemShape::new(n, nodes).unwrap(), true).passed() {
                bad.push((n, nodes));
            }
        }
    }
    outcome(
        bad.is_empty(),
        format!("24 shapes n<=4, N<=6 with enumeration; failures {bad:?}"),
    )
}

fn selection_rule() -> Outcome {
    let mut checked = 0;
    let mut violations = 0;
    for (n, nodes) in [
        (2, 1),
        (2, 2),
        (2, 3),
        (2, 4),
        (2, 5),
        (3, 1),
        (3, 2),
        (3, 3),
    ] {
        let r = check_selection_rule(&matrix(n, nodes));
        checked += r.entries_checked;
        violations += r.violations.len();
    }
    outcome(
        violations == 0,
        format!("{checked} entries, {violations} violations"),
    )
}

fn dual_action() -> Outcome {
    let mut worst_block = 0.0f64;
    let mut worst_coxeter = 0.0f64;
    let mut worst_torus = 0.0f64;
    let mut pass = true;
    for (seed, (n, nodes)) in [(2, 1), (2, 2), (2, 3), (2, 4), (3, 3)]
        .into_iter()
        .enumerate()
    {
        let m = matrix(n, nodes);
        for k in 1..nodes {
            let r = check_permutation_blocks(&m, k).unwrap();
            pass &= r.max_residual() < 1e-9;
            worst_block = worst_block.max(r.max_residual());
        }
        let c = check_coxeter(&m);
        pass &= c.passed();
        worst_coxeter = worst_coxeter
            .max(c.braid_residual)
            .max(c.square_residual)
            .max(c.commutation_residual);
        let t = check_torus_action(&m, &torus_angles(n, seed as u64)).unwrap();
        pass &= t.passed();
        worst_torus = worst_torus
            .max(t.off_diagonal_residual)
            .max(t.phase_residual);
    }
    outcome(
        pass,
        format!("blocks {worst_block:.1e}, coxeter {worst_coxeter:.1e} (< 1e-9), torus {worst_torus:.1e} (< 1e-10)"),
    )
}

fn oracle_equivalence() -> Outcome {
    let mut elements = 0usize;
    let mut mismatches = 0usize;
    for (n, nodes) in [(2, 1), (2, 2), (2, 3), (2, 4), (3, 1), (3, 2), (3, 3)] {
        let m = matrix(n, nodes);
        for f in m.rows() {
            for key in m.columns() {
                let q = ElementQuery::new(n, f, &key.lambda, &key.t, &key.y).unwrap();
                let dp = q
                    .amplitude_with(Method::Accumulate, BranchOrder::Forward)
                    .unwrap();
                let paths = q
                    .amplitude_with(Method::Paths, BranchOrder::Forward)
                    .unwrap();
                elements += 1;
                mismatches += usize::from(dp != paths);
            }
        }
    }
    outcome(
        mismatches == 0,
        format!("{elements} elements, {mismatches} mismatches"),
    )
}

fn dp_time_bound() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(16);
    let mut worst = Duration::ZERO;
    for _ in 0..20 {
        let inst = random_instance(2, 16, &mut rng);
        let start = Instant::now();
        inst.query().amplitude().unwrap();
        worst = worst.max(start.elapsed());
    }
    outcome(
        worst < Duration::from_secs(1),
        format!("n=2, N=16, worst of 20 seeded instances {worst:?} (< 1s)"),
    )
}

fn bench_table_emitted() -> Outcome {
    let args = [
        "swt",
        "bench",
        "--n",
        "2",
        "--min-nodes",
        "4",
        "--max-nodes",
        "16",
        "--samples",
        "20",
        "--seed",
        "7",
    ];
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = swt_cli::run(args, &mut out, &mut err);
    let text = String::from_utf8_lossy(&out);
    let mut lines = text.lines();
    let header_ok = lines.next() == Some("N,mean_ns_dp,mean_ns_paths,path_count");
    let rows: Vec<Vec<&str>> = lines
        .take_while(|l| !l.is_empty())
        .map(|l| l.split(',').collect())
        .collect();
    let ns: Vec<usize> = rows.iter().filter_map(|r| r[0].parse().ok()).collect();
    let complete = rows
        .iter()
        .all(|r| r.len() == 4 && r[1].parse::<f64>().is_ok());
    outcome(
        code == 0 && header_ok && complete && ns == (4..=16).collect::<Vec<_>>(),
        format!(
            "exit {code}, {} rows for N=4..16, 20 samples each",
            rows.len()
        ),
    )
}

/// The path count is expected to grow exponentially in N; this requires
/// the largest sampled count to grow by at least 2^(ΔN/4) across the table.
fn path_count_growth() -> Outcome {
    let rows = bench_table(2, 4..=16, 20, 7, 1 << 16).unwrap();
    let first = rows.first().unwrap().path_count.clone();
    let last = rows.last().unwrap().path_count.clone();
    let needed = &first * BigUint::from(2u32).pow(3);
    let counts: Vec<String> = rows.iter().map(|r| r.path_count.to_string()).collect();
    let dp_ns: Vec<String> = rows
        .iter()
        .map(|r| format!("{:.0}", r.mean_ns_dp / 1e3))
        .collect();
    outcome(
        last >= needed,
        format!(
            "n=2 max path_count N=4..16: [{}], need >= {needed} at N=16; mean DP us: [{}]",
            counts.join(" "),
            dp_ns.join(" ")
        ),
    )
}

pub fn criteria() -> [Criterion; 10] {
    [
        ("1  golden element 5/12 in < 10 ms", golden_element),
        (
            "2  golden operator factors, 6 vertices, 2 paths",
            golden_factors,
        ),
        ("3  unitarity exact and floating", unitarity),
        ("4  census equals n^N with enumeration", census_identity),
        ("5  selection rule", selection_rule),
        ("6  dual-action block structure", dual_action),
        ("7  DP equals path enumeration", oracle_equivalence),
        ("8a single amplitude n=2 N=16 in < 1 s", dp_time_bound),
        ("8b bench table N=4..16", bench_table_emitted),
        ("8c path_count grows exponentially", path_count_growth),
    ]
}
