use std::f64::consts::PI;
use std::fmt::Write as _;
use std::io::Write;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use swt_core::text::{
    parse_configuration, parse_partition, parse_standard_tableau, parse_weyl_tableau,
};
use swt_core::transform::assemble_with;
use swt_core::verify::{
    census, check_coxeter, check_permutation_blocks, check_selection_rule, check_torus_action,
    check_unitarity, float_unitarity_residual, FLOAT_UNITARITY_TOLERANCE,
};
use swt_core::{AssembleOptions, ElementQuery, Execution, SwMatrix, SystemShape};

use crate::{
    emit, CmdResult, DimsArgs, ElementArgs, Failure, Format, MatrixArgs, Mode, ShapeArgs,
    VerifyArgs, EXIT_OK, EXIT_VERIFY,
};

fn shape(a: &ShapeArgs) -> Result<SystemShape, Failure> {
    Ok(SystemShape::new(a.n, a.nodes)?)
}

fn csv_field(s: &str) -> String {
    if s.contains(',') {
        format!("\"{s}\"")
    } else {
        s.to_string()
    }
}

pub fn element(a: &ElementArgs, out: &mut dyn Write) -> CmdResult {
    let shape = shape(&a.shape)?;
    let f = parse_configuration(&a.f, shape.n())?;
    let lambda = parse_partition(&a.lambda)?;
    let t = parse_weyl_tableau(&a.t)?;
    let y = parse_standard_tableau(&a.y)?;
    if f.len() != shape.nodes() {
        return Err(Failure::new(
            crate::EXIT_INPUT,
            "invalid_input",
            format!("f has {} letters, N is {}", f.len(), shape.nodes()),
        ));
    }
    let query = ElementQuery::new(shape.n(), &f, &lambda, &t, &y)?;
    let graph = query.graph()?;
    let value = graph.amplitude();
    let float = value.to_f64();

    let doc = match a.format {
        Format::Text => {
            let mut s = match a.mode {
                Mode::Exact => format!("{value} ({float:.6})\n"),
                Mode::Float => format!("{float}\n"),
            };
            if a.trace {
                let _ = writeln!(s, "{}", graph.trace_json());
            }
            s
        }
        Format::Csv => {
            let mut s = String::from("f,lambda,t,y,value\n");
            let v = match a.mode {
                Mode::Exact => value.to_string(),
                Mode::Float => float.to_string(),
            };
            let _ = writeln!(
                s,
                "{},{},{},{},{}",
                csv_field(&f.to_string()),
                csv_field(&lambda.to_string()),
                csv_field(&t.to_string()),
                csv_field(&y.to_string()),
                csv_field(&v)
            );
            s
        }
        Format::Json => {
            let mut doc = json!({
                "shape": { "n": shape.n(), "N": shape.nodes() },
                "f": f.to_string(),
                "lambda": lambda.to_string(),
                "t": t.to_string(),
                "y": y.to_string(),
                "float": float,
                "path_count": graph.path_count().to_string(),
            });
            if a.mode == Mode::Exact {
                doc["amplitude"] = value.to_json();
                doc["display"] = Value::String(value.to_string());
            }
            if a.trace {
                doc["trace"] = graph.trace_json();
            }
            format!("{doc}\n")
        }
    };
    emit(out, &doc)?;
    Ok(EXIT_OK)
}

fn assembled(shape: SystemShape, size_cap: usize, sequential: bool) -> Result<SwMatrix, Failure> {
    let opts = AssembleOptions {
        size_cap,
        execution: if sequential {
            Execution::Sequential
        } else {
            Execution::Parallel
        },
    };
    Ok(assemble_with(shape, &opts)?)
}

pub fn matrix(a: &MatrixArgs, out: &mut dyn Write) -> CmdResult {
    let shape = shape(&a.shape)?;
    let m = assembled(shape, a.cap.size_cap, a.sequential)?;
    let doc = match a.format {
        Format::Json => match a.mode {
            Mode::Exact => format!("{}\n", m.to_json()),
            Mode::Float => format!("{}\n", m.to_json_float()),
        },
        Format::Csv => m.to_csv(),
        Format::Text => {
            let mut s = format!(
                "n={} N={} dimension={} nonzero={}\n",
                shape.n(),
                shape.nodes(),
                m.dim(),
                m.nonzero_count()
            );
            for (r, c, v) in m.triplets() {
                let key = &m.columns()[c];
                let value = match a.mode {
                    Mode::Exact => v.to_string(),
                    Mode::Float => v.to_f64().to_string(),
                };
                let _ = writeln!(
                    s,
                    "{r} {c} f={} lambda={} t={} y={} : {value}",
                    m.rows()[r],
                    key.lambda,
                    key.t,
                    key.y
                );
            }
            s
        }
    };
    emit(out, &doc)?;
    Ok(EXIT_OK)
}

/// Angles in `[-π, π)` drawn from a seeded stream.
pub fn torus_angles(n: usize, seed: u64) -> Vec<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n).map(|_| rng.random_range(-PI..PI)).collect()
}

pub fn verify(a: &VerifyArgs, out: &mut dyn Write) -> CmdResult {
    let shape = shape(&a.shape)?;
    let m = assembled(shape, a.cap.size_cap, false)?;
    let mut checks: Vec<(bool, Value)> = Vec::new();

    match a.mode {
        Mode::Exact => {
            let r = check_unitarity(&m);
            checks.push((r.is_identity(), r.to_json()));
        }
        Mode::Float => {
            let residual = float_unitarity_residual(&m);
            let pass = residual < FLOAT_UNITARITY_TOLERANCE;
            checks.push((
                pass,
                json!({ "name": "unitarity", "exact": false, "pass": pass, "residual": residual }),
            ));
        }
    }
    let r = check_selection_rule(&m);
    checks.push((r.passed(), r.to_json()));
    let r = census(shape, true);
    checks.push((r.passed(), r.to_json()));
    for k in 1..shape.nodes() {
        let r = check_permutation_blocks(&m, k)?;
        checks.push((r.passed(), r.to_json()));
    }
    let r = check_coxeter(&m);
    checks.push((r.passed(), r.to_json()));
    let r = check_torus_action(&m, &torus_angles(shape.n(), a.seed))?;
    checks.push((r.passed(), r.to_json()));

    let pass = checks.iter().all(|(p, _)| *p);
    let doc = match a.format {
        Format::Json => {
            let doc = json!({
                "shape": { "n": shape.n(), "N": shape.nodes() },
                "seed": a.seed,
                "pass": pass,
                "checks": checks.iter().map(|(_, v)| v.clone()).collect::<Vec<_>>(),
            });
            format!("{doc}\n")
        }
        Format::Csv => {
            let mut s = String::from("check,k,pass\n");
            for (p, v) in &checks {
                let k = v.get("k").map(|k| k.to_string()).unwrap_or_default();
                let _ = writeln!(s, "{},{k},{p}", v["name"].as_str().unwrap_or(""));
            }
            s
        }
        Format::Text => {
            let mut s = String::new();
            for (p, v) in &checks {
                let name = match v.get("k") {
                    Some(k) => format!("{} k={k}", v["name"].as_str().unwrap_or("")),
                    None => v["name"].as_str().unwrap_or("").to_string(),
                };
                let _ = writeln!(s, "{} {name}", if *p { "pass" } else { "FAIL" });
            }
            let _ = writeln!(
                s,
                "{}",
                if pass {
                    "all checks passed"
                } else {
                    "some checks failed"
                }
            );
            s
        }
    };
    emit(out, &doc)?;
    Ok(if pass { EXIT_OK } else { EXIT_VERIFY })
}

pub fn dims(a: &DimsArgs, out: &mut dyn Write) -> CmdResult {
    let shape = shape(&a.shape)?;
    let report = census(shape, a.enumerate);
    let doc = match a.format {
        Format::Json => format!("{}\n", report.to_json()),
        Format::Csv => {
            let mut s = String::from("lambda,dim_symmetric,dim_unitary,product\n");
            for r in &report.rows {
                let _ = writeln!(
                    s,
                    "{},{},{},{}",
                    csv_field(&r.lambda.to_string()),
                    r.dim_symmetric,
                    r.dim_unitary,
                    r.product
                );
            }
            s
        }
        Format::Text => {
            let mut s = format!(
                "{:<16} {:>12} {:>12} {:>16}\n",
                "lambda", "dim_sym", "dim_unit", "product"
            );
            for r in &report.rows {
                let _ = writeln!(
                    s,
                    "{:<16} {:>12} {:>12} {:>16}",
                    r.lambda.to_string(),
                    r.dim_symmetric.to_string(),
                    r.dim_unitary.to_string(),
                    r.product.to_string()
                );
            }
            let _ = writeln!(
                s,
                "total {} = {}^{} ({})",
                report.total,
                shape.n(),
                shape.nodes(),
                if report.total == report.expected {
                    "ok"
                } else {
                    "MISMATCH"
                }
            );
            s
        }
    };
    emit(out, &doc)?;
    Ok(if report.passed() {
        EXIT_OK
    } else {
        EXIT_VERIFY
    })
}
