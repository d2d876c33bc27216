//! The five subcommands. Each returns an [`Outcome`] whose payload is
//! already rendered in the requested format.

use affine_jacobi::{affine_jacobi, weyl_kac_character, AffineJacobiElement, AffineSeries};
use elliptic_kz::{all_checks, eta, g, phi, phi0, sigma, theta1, wp, CheckReport, EllipticContext};
use exact_algebra::IdentityReport;
use jacobi_classical::{jacobi_poly, macdonald_to_jack_limit, JacobiElement, KParam};
use macdonald_core::verify::{
    verify_commutativity, verify_norm, verify_orthogonality, verify_special_value, verify_symmetry,
};
use macdonald_core::{macdonald_poly, MacdonaldBasisElement, Partition};
use num_complex::Complex64;
use rayon::prelude::*;
use root_data::{RootData, Weight};
use serde_json::{json, Value};

use crate::cache::Cache;
use crate::config::{Convention, Function, JackMethod, RunConfig, Task, VerifyTask};
use crate::error::CliError;
use crate::render::{render, Table};

/// A rendered payload and whether every check in it held.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub payload: String,
    pub pass: bool,
}

/// Dispatch on the task, running independent inputs on `cfg.jobs` threads.
pub fn execute(cfg: &RunConfig, cache: &Cache) -> Result<Outcome, CliError> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.jobs)
        .build()
        .map_err(|e| CliError::Internal(format!("thread pool: {e}")))?;
    pool.install(|| match &cfg.task {
        Task::Macdonald { .. } => cmd_macdonald(cfg, cache),
        Task::Jack { .. } => cmd_jack(cfg, cache),
        Task::Affine { .. } => cmd_affine(cfg, cache),
        Task::Verify(_) => cmd_verify(cfg, cache),
        Task::Elliptic { .. } => cmd_elliptic(cfg, cache),
    })
}

fn par_map<T, U, F>(items: &[T], f: F) -> Result<Vec<U>, CliError>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> Result<U, CliError> + Sync + Send,
{
    items.par_iter().map(f).collect()
}

fn to_value<T: serde::Serialize>(x: &T) -> Result<Value, CliError> {
    serde_json::to_value(x).map_err(|e| CliError::Internal(e.to_string()))
}

fn ok(payload: String) -> Outcome {
    Outcome {
        payload,
        pass: true,
    }
}

/// `Σ c m_μ` with unit coefficients left implicit.
fn monomial_sum<'a>(terms: impl Iterator<Item = (String, &'a exact_algebra::RatFunc)>) -> String {
    let parts: Vec<String> = terms
        .map(|(mu, c)| {
            if c.is_one() {
                format!("m{mu}")
            } else {
                format!("{c}*m{mu}")
            }
        })
        .collect();
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

pub fn cmd_macdonald(cfg: &RunConfig, cache: &Cache) -> Result<Outcome, CliError> {
    let Task::Macdonald {
        n,
        lambdas,
        mode,
        convention,
    } = &cfg.task
    else {
        return Err(CliError::Internal(
            "cmd_macdonald called on another task".into(),
        ));
    };
    let rd = RootData::build_a_type(*n)?;
    let elements: Vec<MacdonaldBasisElement> = par_map(lambdas, |lam| {
        let inputs = json!({"n": n, "lambda": lam, "mode": mode});
        cache.get_or_compute("macdonald", &inputs, || {
            Ok((*macdonald_poly(&rd, lam, *mode)?).clone())
        })
    })?;
    let mut table = Table::new(&["lambda", "mu", "num", "den"]);
    for p in &elements {
        let shown = match convention {
            Convention::Native => p.clone(),
            Convention::Macdonald => MacdonaldBasisElement {
                coeffs: p.to_macdonald_convention()?,
                ..p.clone()
            },
        };
        let mut js = to_value(&shown)?;
        if *convention == Convention::Macdonald {
            js["convention"] = json!("macdonald");
        }
        table.json.push(js);
        for (mu, c) in shown.coeffs.iter().rev() {
            table.row([shown.lambda.to_string(), mu.to_string()], c);
        }
        let sum = monomial_sum(shown.coeffs.iter().rev().map(|(mu, c)| (mu.to_string(), c)));
        table.pretty.push(format!("P{} = {sum}", shown.lambda));
    }
    Ok(ok(render(table, cfg.format)?))
}

pub fn cmd_jack(cfg: &RunConfig, cache: &Cache) -> Result<Outcome, CliError> {
    let Task::Jack {
        n,
        lambdas,
        k,
        method,
    } = &cfg.task
    else {
        return Err(CliError::Internal("cmd_jack called on another task".into()));
    };
    let rd = RootData::build_a_type(*n)?;
    let elements: Vec<JacobiElement> = par_map(lambdas, |lam| {
        let method_name = match method {
            JackMethod::Direct => "direct",
            JackMethod::Limit => "limit",
        };
        let inputs = json!({"n": n, "lambda": lam, "k": k, "method": method_name});
        cache.get_or_compute("jack", &inputs, || match (method, k) {
            (JackMethod::Direct, _) => Ok(jacobi_poly(&rd, &lam.weight(), *k)?),
            (JackMethod::Limit, KParam::Value(r)) if r.is_integer() => {
                Ok(macdonald_to_jack_limit(&rd, lam, *r.numer())?)
            }
            (JackMethod::Limit, _) => Err(CliError::Invalid(
                "the q -> 1 limit needs an integer k".into(),
            )),
        })
    })?;
    let mut table = Table::new(&["lambda", "mu", "num", "den"]);
    for j in &elements {
        table.json.push(to_value(j)?);
        for (mu, c) in j.coeffs.iter().rev() {
            table.row([j.lambda.to_string(), mu.to_string()], c);
        }
        let sum = monomial_sum(j.coeffs.iter().rev().map(|(mu, c)| (mu.to_string(), c)));
        table.pretty.push(format!("J{} = {sum}", j.lambda));
    }
    Ok(ok(render(table, cfg.format)?))
}

fn affine_inputs(n: usize, level: i64, lam: &Weight, k: &KParam, order: i64) -> Value {
    json!({"n": n, "K": level, "lambda": lam, "k": k, "N": order})
}

fn cached_affine(
    cache: &Cache,
    rd: &RootData,
    level: i64,
    lam: &Weight,
    k: KParam,
    order: i64,
) -> Result<AffineJacobiElement, CliError> {
    let inputs = affine_inputs(rd.n(), level, lam, &k, order);
    cache.get_or_compute("affine", &inputs, || {
        Ok(affine_jacobi(rd, lam, level, k, order)?)
    })
}

fn cached_weyl_kac(
    cache: &Cache,
    rd: &RootData,
    level: i64,
    lam: &Weight,
    order: i64,
) -> Result<AffineSeries, CliError> {
    let inputs = json!({"n": rd.n(), "K": level, "lambda": lam, "N": order});
    cache.get_or_compute("weyl-kac", &inputs, || {
        Ok(weyl_kac_character(rd, lam, level, order)?)
    })
}

/// Layer-by-layer equality of `Ĵ_λ̂` and the Weyl–Kac character.
fn weyl_kac_report(
    cache: &Cache,
    rd: &RootData,
    level: i64,
    lam: &Weight,
    k: KParam,
    order: i64,
) -> Result<(Value, bool), CliError> {
    let j = cached_affine(cache, rd, level, lam, k, order)?;
    let ch = cached_weyl_kac(cache, rd, level, lam, order)?;
    let layers: Vec<Value> = (0..=order)
        .map(|d| json!({"p": d, "equal": j.series.layer(d) == ch.layer(d)}))
        .collect();
    let equal = j.series == ch;
    let report = json!({
        "identity": "weyl_kac",
        "inputs": affine_inputs(rd.n(), level, lam, &k, order),
        "equal": equal,
        "layers": layers,
    });
    Ok((report, equal))
}

pub fn cmd_affine(cfg: &RunConfig, cache: &Cache) -> Result<Outcome, CliError> {
    let Task::Affine {
        n,
        level,
        lambdas,
        k,
        order,
        compare,
    } = &cfg.task
    else {
        return Err(CliError::Internal(
            "cmd_affine called on another task".into(),
        ));
    };
    let rd = RootData::build_a_type(*n)?;
    if *compare {
        if *k != KParam::integer(1) {
            cache.log(
                json!({"log": "the Weyl-Kac comparison is expected to hold only at k = 1", "k": k}),
            );
        }
        let reports = par_map(lambdas, |lam| {
            weyl_kac_report(cache, &rd, *level, lam, *k, *order)
        })?;
        let mut table = Table::new(&["lambda", "p", "equal"]);
        let pass = reports.iter().all(|(_, e)| *e);
        for ((js, equal), lam) in reports.into_iter().zip(lambdas) {
            for layer in js["layers"].as_array().into_iter().flatten() {
                table.rows.push(vec![
                    lam.to_string(),
                    layer["p"].to_string(),
                    layer["equal"].to_string(),
                ]);
            }
            let verdict = if equal { "equal" } else { "DIFFERENT" };
            table
                .pretty
                .push(format!("J{lam} vs Weyl-Kac through p^{order}: {verdict}"));
            table.json.push(js);
        }
        return Ok(Outcome {
            payload: render(table, cfg.format)?,
            pass,
        });
    }
    let elements = par_map(lambdas, |lam| {
        cached_affine(cache, &rd, *level, lam, *k, *order)
    })?;
    let mut table = Table::new(&["lambda", "p", "mu", "num", "den"]);
    for j in &elements {
        table.json.push(to_value(j)?);
        table.pretty.push(format!(
            "J{} at level {level}, k = {k}, through p^{order}:",
            j.lambda
        ));
        for (d, layer) in j.series.layers() {
            let terms: Vec<String> = layer
                .terms()
                .map(|(mu, c)| {
                    if c.is_one() {
                        format!("e^{mu}")
                    } else {
                        format!("{c}*e^{mu}")
                    }
                })
                .collect();
            table.pretty.push(format!("  p^{d}: {}", terms.join(" + ")));
            for (mu, c) in layer.terms() {
                table.row([j.lambda.to_string(), d.to_string(), mu.to_string()], c);
            }
        }
    }
    Ok(ok(render(table, cfg.format)?))
}

fn identity(report: IdentityReport) -> Result<(Value, bool), CliError> {
    let pass = report.equal || report.inconclusive;
    Ok((to_value(&report)?, pass))
}

/// Cache a [`IdentityReport`] keyed by the suite and its inputs.
fn cached_identity<F>(
    cache: &Cache,
    suite: &str,
    inputs: Value,
    f: F,
) -> Result<(Value, bool), CliError>
where
    F: FnOnce() -> Result<IdentityReport, CliError>,
{
    let report: IdentityReport = cache.get_or_compute(&format!("verify-{suite}"), &inputs, f)?;
    identity(report)
}

fn verify_items(
    cfg: &RunConfig,
    cache: &Cache,
    task: &VerifyTask,
) -> Result<(&'static str, Vec<(Value, bool)>), CliError> {
    let rd = |n: usize| RootData::build_a_type(n);
    Ok(match task {
        VerifyTask::Norm { n, lambdas, k } => {
            let rd = rd(*n)?;
            let items = par_map(lambdas, |lam| {
                cached_identity(
                    cache,
                    "norm",
                    json!({"n": n, "lambda": lam, "k": k}),
                    || Ok(verify_norm(&rd, lam, *k)?),
                )
            })?;
            ("norm", items)
        }
        VerifyTask::SpecialValue { n, lambdas, k } => {
            let rd = rd(*n)?;
            let items = par_map(lambdas, |lam| {
                cached_identity(
                    cache,
                    "special-value",
                    json!({"n": n, "lambda": lam, "k": k}),
                    || Ok(verify_special_value(&rd, lam, *k)?),
                )
            })?;
            ("special-value", items)
        }
        VerifyTask::Symmetry { n, pairs, k } => {
            let rd = rd(*n)?;
            let items = par_map(pairs, |(lam, mu)| {
                cached_identity(
                    cache,
                    "symmetry",
                    json!({"n": n, "lambda": lam, "mu": mu, "k": k}),
                    || Ok(verify_symmetry(&rd, lam, mu, *k)?),
                )
            })?;
            ("symmetry", items)
        }
        VerifyTask::Orthogonality { n, pairs, k } => {
            let rd = rd(*n)?;
            let items = par_map(pairs, |(lam, mu)| {
                cached_identity(
                    cache,
                    "orthogonality",
                    json!({"n": n, "lambda": lam, "mu": mu, "k": k}),
                    || Ok(verify_orthogonality(&rd, lam, mu, *k)?),
                )
            })?;
            ("orthogonality", items)
        }
        VerifyTask::Commutativity { n, mus, mode } => {
            let rd = rd(*n)?;
            let mut work: Vec<(Partition, usize, usize)> = Vec::new();
            for mu in mus {
                for r in 1..=*n {
                    for s in r + 1..=*n {
                        work.push((mu.clone(), r, s));
                    }
                }
            }
            let items = par_map(&work, |(mu, r, s)| {
                let inputs = json!({"n": n, "mu": mu, "r": r, "s": s, "mode": mode});
                cached_identity(cache, "commutativity", inputs, || {
                    Ok(verify_commutativity(&rd, *r, *s, mu, *mode)?)
                })
            })?;
            ("commutativity", items)
        }
        VerifyTask::AffineK1 {
            n,
            level,
            lambdas,
            order,
        } => {
            let rd = rd(*n)?;
            let items = par_map(lambdas, |lam| {
                weyl_kac_report(cache, &rd, *level, lam, KParam::integer(1), *order)
            })?;
            ("affine-k1", items)
        }
        VerifyTask::EllipticAll => {
            let inputs = json!({"tolerances": cfg.tolerances});
            let reports: Vec<CheckReport> =
                cache.get_or_compute("verify-elliptic-all", &inputs, || {
                    Ok(all_checks(&cfg.tolerances)?)
                })?;
            let items = reports
                .iter()
                .map(|r| Ok((to_value(r)?, r.pass)))
                .collect::<Result<Vec<_>, CliError>>()?;
            ("elliptic-all", items)
        }
    })
}

pub fn cmd_verify(cfg: &RunConfig, cache: &Cache) -> Result<Outcome, CliError> {
    let Task::Verify(task) = &cfg.task else {
        return Err(CliError::Internal(
            "cmd_verify called on another task".into(),
        ));
    };
    let (suite, items) = verify_items(cfg, cache, task)?;
    let pass = items.iter().all(|(_, p)| *p);
    let mut table = Table::new(&["suite", "check", "inputs", "pass"]);
    for (js, p) in &items {
        let label = js
            .get("identity")
            .or_else(|| js.get("check"))
            .and_then(Value::as_str)
            .unwrap_or(suite)
            .to_string();
        let inputs = js
            .get("inputs")
            .or_else(|| js.get("parameters"))
            .cloned()
            .unwrap_or(Value::Null);
        let inconclusive = js
            .get("inconclusive")
            .and_then(Value::as_bool)
            .unwrap_or(false);
        let verdict = match (p, inconclusive) {
            (_, true) => "SKIP",
            (true, false) => "PASS",
            (false, false) => "FAIL",
        };
        table.pretty.push(format!("{verdict} {label} {inputs}"));
        table.rows.push(vec![
            suite.to_string(),
            label,
            inputs.to_string(),
            p.to_string(),
        ]);
    }
    let failed = items.iter().filter(|(_, p)| !*p).count();
    table
        .pretty
        .push(format!("{suite}: {} checks, {failed} failed", items.len()));
    let js = json!({
        "suite": suite,
        "pass": pass,
        "reports": items.into_iter().map(|(v, _)| v).collect::<Vec<_>>(),
    });
    table.json.push(js);
    Ok(Outcome {
        payload: render(table, cfg.format)?,
        pass,
    })
}

fn pair(z: Complex64) -> [f64; 2] {
    [z.re, z.im]
}

pub fn cmd_elliptic(cfg: &RunConfig, cache: &Cache) -> Result<Outcome, CliError> {
    let Task::Elliptic {
        function,
        tau,
        x,
        zeta,
    } = &cfg.task
    else {
        return Err(CliError::Internal(
            "cmd_elliptic called on another task".into(),
        ));
    };
    let inputs = json!({
        "function": function.name(),
        "tau": pair(*tau),
        "x": x.map(pair),
        "zeta": zeta.map(pair),
    });
    let value: [f64; 2] = cache.get_or_compute("elliptic", &inputs, || {
        let ctx = EllipticContext::new(*tau)?;
        let need =
            |v: &Option<Complex64>| v.ok_or_else(|| CliError::Internal("missing argument".into()));
        let v = match function {
            Function::Theta1 => theta1(need(x)?, &ctx)?,
            Function::Eta => eta(&ctx)?,
            Function::Sigma => sigma(need(x)?, &ctx)?,
            Function::Wp => wp(need(x)?, &ctx)?,
            Function::G => g(need(x)?, need(zeta)?, &ctx)?,
            Function::Phi => phi(need(x)?, need(zeta)?, &ctx)?,
            Function::Phi0 => phi0(need(zeta)?, &ctx)?,
        };
        Ok(pair(v))
    })?;
    let mut table = Table::new(&[
        "function", "tau_re", "tau_im", "x_re", "x_im", "zeta_re", "zeta_im", "re", "im",
    ]);
    let cells = |z: &Option<Complex64>| match z {
        Some(z) => [z.re.to_string(), z.im.to_string()],
        None => [String::new(), String::new()],
    };
    let mut row = vec![
        function.name().to_string(),
        tau.re.to_string(),
        tau.im.to_string(),
    ];
    row.extend(cells(x));
    row.extend(cells(zeta));
    row.extend([value[0].to_string(), value[1].to_string()]);
    table.rows.push(row);
    let args: Vec<String> = [
        x.map(|z| format!("x = {z}")),
        zeta.map(|z| format!("ζ = {z}")),
    ]
    .into_iter()
    .flatten()
    .chain([format!("τ = {tau}")])
    .collect();
    table.pretty.push(format!(
        "{}({}) = {}",
        function.name(),
        args.join(", "),
        Complex64::new(value[0], value[1])
    ));
    let mut js = inputs;
    js["value"] = json!(value);
    table.json.push(js);
    Ok(ok(render(table, cfg.format)?))
}
