//! The command implementations. Each returns the text for stdout and
//! whether the command succeeded; errors are left to the caller.

use std::path::Path;
use std::time::Instant;

use coact_core::congruence::{congruence_closure, symmetric_closure};
use coact_core::green::green;
use coact_core::{FiniteMonoid, FiniteRightAct, Pair, Partition};
use coact_harness::ops::fuzz;
use coact_harness::params::Params;
use coact_harness::registry::run_check;
use coact_harness::HarnessError;
use serde_json::{json, Value};

use crate::cayley::emit_table;
use crate::error::{CliError, Result};
use crate::recipe::{validate_computable, Built, Loader};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub success: bool,
}

impl Outcome {
    fn json(v: &Value, success: bool) -> Self {
        let mut stdout = serde_json::to_string_pretty(v).expect("json values serialize");
        stdout.push('\n');
        Outcome { stdout, success }
    }
}

fn labels(m: &FiniteMonoid, xs: &[usize]) -> Vec<String> {
    xs.iter().map(|&x| m.label(x).to_string()).collect()
}

fn classes(m: &FiniteMonoid, p: &Partition) -> Vec<Vec<String>> {
    p.classes().iter().map(|c| labels(m, c)).collect()
}

/// Finite monoids are printed as a Cayley table; computable ones as a JSON
/// summary.
pub fn build(loader: &Loader, spec: &str, validate_only: bool) -> Result<Outcome> {
    match loader.load_arg(spec)? {
        Built::Finite(m) if validate_only => Ok(Outcome::json(
            &json!({"valid": true, "kind": "finite", "size": m.size()}),
            true,
        )),
        Built::Finite(m) => Ok(Outcome {
            stdout: emit_table(&m),
            success: true,
        }),
        Built::Computable(m) => {
            if let Some(t) = validate_computable(m.as_ref(), 2, 40) {
                return Err(CliError::Invalid(format!(
                    "not associative at ({}, {}, {})",
                    t[0], t[1], t[2]
                )));
            }
            let mut v = json!({
                "valid": true,
                "kind": "computable",
                "description": m.describe(),
                "associativity_checked_on": "ball(2), first 40 elements",
            });
            if !validate_only {
                v["identity"] = json!(m.render(&m.identity()));
                v["zero"] = json!(m.zero().map(|z| m.render(&z)));
                v["generators"] = json!(m
                    .generators()
                    .iter()
                    .map(|g| m.render(g))
                    .collect::<Vec<_>>());
                v["ball_sizes"] = json!((0..=3).map(|r| m.ball(r).len()).collect::<Vec<_>>());
            }
            Ok(Outcome::json(&v, true))
        }
    }
}

pub fn green_report(loader: &Loader, spec: &str) -> Result<Outcome> {
    let m = loader.load_arg(spec)?.finite("green")?;
    let g = green(&m);
    let v = json!({
        "size": m.size(),
        "identity": m.label(m.identity()),
        "zero": m.zero().map(|z| m.label(z)),
        "idempotents": labels(&m, &m.idempotents()),
        "regular": m.is_regular(),
        "inverse": m.is_inverse(),
        "R": classes(&m, &g.r),
        "L": classes(&m, &g.l),
        "H": classes(&m, &g.h),
        "D": classes(&m, &g.d),
        "J": classes(&m, &g.j),
    });
    Ok(Outcome::json(&v, true))
}

/// Pairs as a JSON list of two-label lists, from a file or inline.
pub fn read_pairs(m: &FiniteMonoid, arg: &str) -> Result<Vec<Pair>> {
    let path = Path::new(arg);
    let text = if path.is_file() {
        std::fs::read_to_string(path).map_err(|e| CliError::io(arg, e))?
    } else {
        arg.to_string()
    };
    let v: Value = serde_json::from_str(&text)
        .map_err(|e| CliError::parse(e.line(), e.column(), e.to_string()))?;
    let shape = || {
        CliError::Usage(format!(
            "pairs must be a JSON list like [[\"a\",\"b\"]], got {v}"
        ))
    };
    v.as_array()
        .ok_or_else(shape)?
        .iter()
        .map(|p| match p.as_array().map(Vec::as_slice) {
            Some([Value::String(a), Value::String(b)]) => Ok((m.element(a)?, m.element(b)?)),
            _ => Err(shape()),
        })
        .collect()
}

pub fn cong(
    loader: &Loader,
    spec: &str,
    pairs: &str,
    witness: Option<(&str, &str)>,
) -> Result<Outcome> {
    let m = loader.load_arg(spec)?.finite("cong")?;
    let h = read_pairs(&m, pairs)?;
    let act = FiniteRightAct::regular(&m);
    let rho = congruence_closure(&act, &h)?;
    let mut v = json!({
        "generators": h.iter().map(|&(a, b)| [m.label(a), m.label(b)]).collect::<Vec<_>>(),
        "num_classes": rho.num_classes(),
        "classes": classes(&m, rho.partition()),
        "representatives": labels(&m, &rho.representatives()),
    });
    if let Some((a, b)) = witness {
        let (a, b) = (m.element(a)?, m.element(b)?);
        let bar = symmetric_closure(&h);
        v["witness"] = match rho.witness(a, b) {
            Some(w) => {
                let chain = w.chain(&act, &h, a).expect("closure witnesses replay");
                json!({
                    "from": m.label(a),
                    "to": m.label(b),
                    "related": true,
                    "steps": w.steps.iter().map(|s| {
                        let (c, d) = bar[s.pair];
                        json!({"pair": [m.label(c), m.label(d)], "multiplier": m.label(s.multiplier)})
                    }).collect::<Vec<_>>(),
                    "chain": labels(&m, &chain),
                })
            }
            None => json!({"from": m.label(a), "to": m.label(b), "related": false}),
        };
    }
    Ok(Outcome::json(&v, true))
}

/// Runs a harness check. The report goes to `json_out` when given, and to
/// stdout otherwise; `timing` adds the wall time in milliseconds.
pub fn check(
    loader: &Loader,
    name: &str,
    params: &[String],
    json_out: Option<&Path>,
    timing: bool,
) -> Result<Outcome> {
    let params = Params::parse(params)?;
    let resolve = |spec: &str| -> coact_harness::Result<FiniteMonoid> {
        loader
            .load_arg(spec)
            .and_then(|b| b.finite("this check"))
            .map_err(|e| match e {
                CliError::Harness(h) => h,
                CliError::Core(c) => HarnessError::Core(c),
                other => HarnessError::param("monoid", other.to_string()),
            })
    };
    let start = Instant::now();
    let report = run_check(name, &params, &resolve)?;
    let elapsed = start.elapsed();
    let mut v = serde_json::to_value(&report).expect("reports serialize");
    if timing {
        v["wall_time_ms"] = json!(elapsed.as_secs_f64() * 1000.0);
    }
    let out = Outcome::json(&v, report.verified);
    match json_out {
        Some(path) => {
            std::fs::write(path, &out.stdout)
                .map_err(|e| CliError::io(&path.display().to_string(), e))?;
            let line = format!(
                "{}: {} ({} failures), report written to {}\n",
                report.check,
                if report.verified {
                    "verified"
                } else {
                    "NOT verified"
                },
                report.failures.len(),
                path.display()
            );
            Ok(Outcome {
                stdout: line,
                success: report.verified,
            })
        }
        None => Ok(out),
    }
}

#[derive(Debug, Clone, Copy)]
pub struct FuzzArgs {
    pub seed: u64,
    pub count: usize,
    pub max_size: usize,
    pub max_act: usize,
    pub max_pairs: usize,
    pub inject_fault: bool,
}

/// Both randomized suites, summarised.
pub fn fuzz_summary(a: FuzzArgs) -> Outcome {
    let suites = [
        fuzz::fuzz_implications(a.seed, a.count, a.max_size, a.inject_fault),
        fuzz::oracle_equivalence(a.seed, a.count, a.max_size, a.max_act, a.max_pairs),
    ];
    let verified = suites.iter().all(|r| r.verified);
    let v = json!({
        "seed": a.seed,
        "count": a.count,
        "max_size": a.max_size,
        "inject_fault": a.inject_fault,
        "verified": verified,
        "failures": suites.iter().map(|r| r.failures.len()).sum::<usize>(),
        "suites": suites,
    });
    Outcome::json(&v, verified)
}
