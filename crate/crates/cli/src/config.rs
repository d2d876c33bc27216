//! Command-line grammar and its validation into a [`RunConfig`].

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use elliptic_kz::Tolerances;
use jacobi_classical::KParam;
use macdonald_core::{Mode, Partition};
use num_complex::Complex64;
use root_data::{RootData, Weight};

use crate::error::CliError;

#[derive(Parser, Debug)]
#[command(
    name = "macpoly",
    version,
    about = "Exact Macdonald, Jacobi and affine Jacobi polynomials with identity checks"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub global: GlobalArgs,
}

#[derive(Args, Debug, Clone)]
pub struct GlobalArgs {
    /// Output format of the payload on stdout.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Cache directory; falls back to $MACPOLY_CACHE, else no caching.
    #[arg(long = "cache-dir", global = true, value_name = "DIR")]
    pub cache_dir: Option<PathBuf>,
    /// Ignore any cache directory.
    #[arg(long = "no-cache", global = true)]
    pub no_cache: bool,
    /// Worker threads for independent inputs.
    #[arg(long, global = true, default_value_t = 1)]
    pub jobs: usize,
    /// Override a numeric tolerance, e.g. `--tol flatness=1e-6`.
    #[arg(long, global = true, value_name = "NAME=VALUE")]
    pub tol: Vec<String>,
    /// Print cache counters to stderr.
    #[arg(long, global = true)]
    pub stats: bool,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Macdonald polynomials `P_λ` in the monomial basis.
    Macdonald(MacdonaldArgs),
    /// Jacobi (Jack) polynomials `J_λ(k)` in the monomial basis.
    Jack(JackArgs),
    /// Affine Jacobi polynomials as truncated series.
    Affine(AffineArgs),
    /// Run a named identity suite; exit 0 iff every identity holds.
    Verify(VerifyArgs),
    /// Evaluate a theta or elliptic function.
    Elliptic(EllipticArgs),
}

#[derive(Args, Debug)]
pub struct MacdonaldArgs {
    #[arg(long)]
    pub n: usize,
    /// Partition such as `2,1,0`; repeat for several.
    #[arg(long, required = true)]
    pub lambda: Vec<String>,
    /// Integer `k` for the specialization `t = q^k`.
    #[arg(long, allow_hyphen_values = true)]
    pub k: Option<String>,
    /// `generic` or `tqk`; defaults to `tqk` when `--k` is given.
    #[arg(long)]
    pub mode: Option<String>,
    /// Coefficient convention of the output.
    #[arg(long, value_enum, default_value_t = Convention::Native)]
    pub convention: Convention,
}

#[derive(Args, Debug)]
pub struct JackArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, required = true)]
    pub lambda: Vec<String>,
    /// A rational `k` or `formal`.
    #[arg(long, default_value = "formal", allow_hyphen_values = true)]
    pub k: String,
    /// `direct` (eigenvector of `M_k`) or `limit` (`q → 1` of `P_λ(q, q^k)`).
    #[arg(long)]
    pub mode: Option<String>,
}

#[derive(Args, Debug)]
pub struct AffineArgs {
    #[arg(long)]
    pub n: usize,
    /// Level `K`.
    #[arg(long = "K")]
    pub level: i64,
    /// Finite part of `λ̂` as a partition; repeat for several, omit for all of `P⁺_K`.
    #[arg(long)]
    pub lambda: Vec<String>,
    /// A rational `k` or `formal`.
    #[arg(long, allow_hyphen_values = true)]
    pub k: String,
    /// Truncation order `N` in `p = e^{−δ}`.
    #[arg(long = "N")]
    pub order: Option<i64>,
    /// Report equality with the Weyl–Kac character instead of the series.
    #[arg(long = "compare-weyl-kac")]
    pub compare_weyl_kac: bool,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub suite: Suite,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub lambda: Vec<String>,
    #[arg(long)]
    pub mu: Vec<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub k: Option<String>,
    #[arg(long = "K")]
    pub level: Option<i64>,
    #[arg(long = "N")]
    pub order: Option<i64>,
    #[arg(long)]
    pub mode: Option<String>,
}

#[derive(Args, Debug)]
pub struct EllipticArgs {
    /// The function to evaluate.
    #[arg(long, value_enum)]
    pub mode: Function,
    /// Modular parameter as `re,im` with `im > 0`.
    #[arg(long)]
    pub tau: String,
    /// First argument as `re` or `re,im`.
    #[arg(long)]
    pub x: Option<String>,
    /// Second argument as `re` or `re,im`.
    #[arg(long)]
    pub zeta: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Pretty,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Convention {
    /// `P_λ(q, t)` with `t = q^k`, as computed.
    Native,
    /// Macdonald's book: `q² ↦ q`, `t² ↦ t`.
    Macdonald,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Norm,
    Symmetry,
    SpecialValue,
    Orthogonality,
    Commutativity,
    AffineK1,
    EllipticAll,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Function {
    Theta1,
    Eta,
    Sigma,
    Wp,
    G,
    Phi,
    Phi0,
}

impl Function {
    pub fn name(&self) -> &'static str {
        match self {
            Function::Theta1 => "theta1",
            Function::Eta => "eta",
            Function::Sigma => "sigma",
            Function::Wp => "wp",
            Function::G => "g",
            Function::Phi => "phi",
            Function::Phi0 => "phi0",
        }
    }

    fn needs_x(&self) -> bool {
        matches!(
            self,
            Function::Theta1 | Function::Sigma | Function::Wp | Function::G | Function::Phi
        )
    }

    fn needs_zeta(&self) -> bool {
        matches!(self, Function::G | Function::Phi | Function::Phi0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum JackMethod {
    Direct,
    Limit,
}

/// A validated request.
#[derive(Clone, Debug)]
pub enum Task {
    Macdonald {
        n: usize,
        lambdas: Vec<Partition>,
        mode: Mode,
        convention: Convention,
    },
    Jack {
        n: usize,
        lambdas: Vec<Partition>,
        k: KParam,
        method: JackMethod,
    },
    Affine {
        n: usize,
        level: i64,
        lambdas: Vec<Weight>,
        k: KParam,
        order: i64,
        compare: bool,
    },
    Verify(VerifyTask),
    Elliptic {
        function: Function,
        tau: Complex64,
        x: Option<Complex64>,
        zeta: Option<Complex64>,
    },
}

#[derive(Clone, Debug)]
pub enum VerifyTask {
    Norm {
        n: usize,
        lambdas: Vec<Partition>,
        k: i64,
    },
    SpecialValue {
        n: usize,
        lambdas: Vec<Partition>,
        k: i64,
    },
    Symmetry {
        n: usize,
        pairs: Vec<(Partition, Partition)>,
        k: i64,
    },
    Orthogonality {
        n: usize,
        pairs: Vec<(Partition, Partition)>,
        k: i64,
    },
    Commutativity {
        n: usize,
        mus: Vec<Partition>,
        mode: Mode,
    },
    AffineK1 {
        n: usize,
        level: i64,
        lambdas: Vec<Weight>,
        order: i64,
    },
    EllipticAll,
}

/// Everything a run needs, validated before dispatch.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub task: Task,
    pub format: Format,
    pub cache_dir: Option<PathBuf>,
    pub jobs: usize,
    pub tolerances: Tolerances,
    pub stats: bool,
}

impl RunConfig {
    /// Validate parsed arguments. `env_cache` is the value of
    /// `$MACPOLY_CACHE`, used when `--cache-dir` is absent.
    pub fn from_cli(cli: Cli, env_cache: Option<String>) -> Result<Self, CliError> {
        let g = cli.global;
        if g.jobs == 0 {
            return Err(CliError::Invalid("--jobs must be at least 1".into()));
        }
        let mut tolerances = Tolerances::default();
        for item in &g.tol {
            let (name, value) = item.split_once('=').ok_or_else(|| {
                CliError::Invalid(format!("--tol expects NAME=VALUE, got {item:?}"))
            })?;
            let value: f64 = value.trim().parse().map_err(|_| {
                CliError::Invalid(format!("--tol {name}: {value:?} is not a number"))
            })?;
            tolerances.set(name.trim(), value)?;
        }
        let cache_dir = if g.no_cache {
            None
        } else {
            g.cache_dir
                .or_else(|| env_cache.filter(|s| !s.is_empty()).map(PathBuf::from))
        };
        let task = match cli.command {
            Command::Macdonald(a) => macdonald_task(a)?,
            Command::Jack(a) => jack_task(a)?,
            Command::Affine(a) => affine_task(a)?,
            Command::Verify(a) => Task::Verify(verify_task(a)?),
            Command::Elliptic(a) => elliptic_task(a)?,
        };
        Ok(RunConfig {
            task,
            format: g.format,
            cache_dir,
            jobs: g.jobs,
            tolerances,
            stats: g.stats,
        })
    }
}

fn rank(n: usize) -> Result<RootData, CliError> {
    Ok(RootData::build_a_type(n)?)
}

/// `"2,1,0"` as integers; whitespace is ignored and an empty string is `[]`.
pub fn parse_parts(s: &str) -> Result<Vec<i64>, CliError> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|p| {
            p.trim()
                .parse::<i64>()
                .map_err(|_| CliError::Invalid(format!("{p:?} in {s:?} is not an integer")))
        })
        .collect()
}

/// A partition with at most `n` parts, padded with zeros.
pub fn parse_partition(s: &str, n: usize) -> Result<Partition, CliError> {
    Ok(Partition::new(&parse_parts(s)?, n)?)
}

fn parse_partitions(items: &[String], n: usize) -> Result<Vec<Partition>, CliError> {
    items.iter().map(|s| parse_partition(s, n)).collect()
}

fn parse_k(s: &str) -> Result<KParam, CliError> {
    s.parse::<KParam>()
        .map_err(|e| CliError::Invalid(format!("--k {s:?}: {e}")))
}

fn parse_integer_k(s: &str) -> Result<i64, CliError> {
    s.trim()
        .parse::<i64>()
        .map_err(|_| CliError::Invalid(format!("--k {s:?} must be an integer here")))
}

fn positive_k(k: Option<&String>) -> Result<i64, CliError> {
    let s = k.ok_or_else(|| CliError::Invalid("--k is required".into()))?;
    let k = parse_integer_k(s)?;
    if k < 1 {
        return Err(CliError::Invalid(format!(
            "--k must be a positive integer, got {k}"
        )));
    }
    Ok(k)
}

/// `--mode generic|tqk` with `tqk` needing an integer `k ≥ 0`.
fn parse_mode(mode: Option<&str>, k: Option<&String>) -> Result<Mode, CliError> {
    match (mode, k) {
        (Some("generic"), None) | (None, None) => Ok(Mode::Generic),
        (Some("generic"), Some(_)) => Err(CliError::Invalid("--mode generic takes no --k".into())),
        (Some("tqk") | None, Some(k)) => {
            let k = parse_integer_k(k)?;
            if k < 0 {
                return Err(CliError::Invalid(format!("t = q^k needs k >= 0, got {k}")));
            }
            Ok(Mode::TEqQk(k))
        }
        (Some("tqk"), None) => Err(CliError::Invalid("--mode tqk needs --k".into())),
        (Some(m), _) => Err(CliError::Invalid(format!(
            "unknown mode {m:?}; expected generic or tqk"
        ))),
    }
}

fn macdonald_task(a: MacdonaldArgs) -> Result<Task, CliError> {
    rank(a.n)?;
    Ok(Task::Macdonald {
        n: a.n,
        lambdas: parse_partitions(&a.lambda, a.n)?,
        mode: parse_mode(a.mode.as_deref(), a.k.as_ref())?,
        convention: a.convention,
    })
}

fn jack_task(a: JackArgs) -> Result<Task, CliError> {
    rank(a.n)?;
    let k = parse_k(&a.k)?;
    let method = match a.mode.as_deref() {
        None | Some("direct") => JackMethod::Direct,
        Some("limit") => JackMethod::Limit,
        Some(m) => {
            return Err(CliError::Invalid(format!(
                "unknown mode {m:?}; expected direct or limit"
            )))
        }
    };
    if method == JackMethod::Limit {
        match k {
            KParam::Value(r) if r.is_integer() && *r.numer() >= 1 => {}
            _ => {
                return Err(CliError::Invalid(
                    "the q -> 1 limit needs a positive integer k".into(),
                ))
            }
        }
    }
    Ok(Task::Jack {
        n: a.n,
        lambdas: parse_partitions(&a.lambda, a.n)?,
        k,
        method,
    })
}

fn affine_lambdas(rd: &RootData, items: &[String], level: i64) -> Result<Vec<Weight>, CliError> {
    if items.is_empty() {
        return Ok(rd.dominant_of_level(level));
    }
    Ok(parse_partitions(items, rd.n())?
        .iter()
        .map(Partition::weight)
        .collect())
}

fn order_or_default(order: Option<i64>) -> Result<i64, CliError> {
    let order = order.unwrap_or(affine_jacobi::DEFAULT_ORDER);
    if order < 0 {
        return Err(CliError::Invalid(format!(
            "--N must be nonnegative, got {order}"
        )));
    }
    Ok(order)
}

fn affine_task(a: AffineArgs) -> Result<Task, CliError> {
    let rd = rank(a.n)?;
    if a.level < 0 {
        return Err(CliError::Invalid(format!(
            "--K must be nonnegative, got {}",
            a.level
        )));
    }
    Ok(Task::Affine {
        n: a.n,
        level: a.level,
        lambdas: affine_lambdas(&rd, &a.lambda, a.level)?,
        k: parse_k(&a.k)?,
        order: order_or_default(a.order)?,
        compare: a.compare_weyl_kac,
    })
}

fn pairs(lambdas: &[Partition], mus: &[Partition], distinct: bool) -> Vec<(Partition, Partition)> {
    let mut out = Vec::new();
    for l in lambdas {
        for m in mus {
            if !(distinct && l == m) {
                out.push((l.clone(), m.clone()));
            }
        }
    }
    out
}

fn verify_task(a: VerifyArgs) -> Result<VerifyTask, CliError> {
    if a.suite == Suite::EllipticAll {
        return Ok(VerifyTask::EllipticAll);
    }
    let n =
        a.n.ok_or_else(|| CliError::Invalid("--n is required".into()))?;
    let rd = rank(n)?;
    let need_lambdas = |items: &[String], flag: &str| {
        if items.is_empty() {
            return Err(CliError::Invalid(format!("--{flag} is required")));
        }
        parse_partitions(items, n)
    };
    Ok(match a.suite {
        Suite::Norm => VerifyTask::Norm {
            n,
            lambdas: need_lambdas(&a.lambda, "lambda")?,
            k: positive_k(a.k.as_ref())?,
        },
        Suite::SpecialValue => VerifyTask::SpecialValue {
            n,
            lambdas: need_lambdas(&a.lambda, "lambda")?,
            k: positive_k(a.k.as_ref())?,
        },
        Suite::Symmetry => VerifyTask::Symmetry {
            n,
            pairs: pairs(
                &need_lambdas(&a.lambda, "lambda")?,
                &need_lambdas(&a.mu, "mu")?,
                false,
            ),
            k: positive_k(a.k.as_ref())?,
        },
        Suite::Orthogonality => {
            let pairs = pairs(
                &need_lambdas(&a.lambda, "lambda")?,
                &need_lambdas(&a.mu, "mu")?,
                true,
            );
            if pairs.is_empty() {
                return Err(CliError::Invalid(
                    "orthogonality needs some lambda different from mu".into(),
                ));
            }
            VerifyTask::Orthogonality {
                n,
                pairs,
                k: positive_k(a.k.as_ref())?,
            }
        }
        Suite::Commutativity => {
            let mut items = a.mu.clone();
            items.extend(a.lambda.iter().cloned());
            VerifyTask::Commutativity {
                n,
                mus: need_lambdas(&items, "mu")?,
                mode: parse_mode(a.mode.as_deref(), a.k.as_ref())?,
            }
        }
        Suite::AffineK1 => {
            let level = a
                .level
                .ok_or_else(|| CliError::Invalid("--K is required".into()))?;
            if level < 0 {
                return Err(CliError::Invalid(format!(
                    "--K must be nonnegative, got {level}"
                )));
            }
            VerifyTask::AffineK1 {
                n,
                level,
                lambdas: affine_lambdas(&rd, &a.lambda, level)?,
                order: order_or_default(a.order)?,
            }
        }
        Suite::EllipticAll => unreachable!("handled above"),
    })
}

/// `"re"` or `"re,im"` as a complex number.
pub fn parse_complex(s: &str) -> Result<Complex64, CliError> {
    let bad = || CliError::Invalid(format!("{s:?} is not a number or a pair re,im"));
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let num = |t: &str| {
        t.parse::<f64>()
            .ok()
            .filter(|v| v.is_finite())
            .ok_or_else(bad)
    };
    match parts.as_slice() {
        [re] => Ok(Complex64::new(num(re)?, 0.0)),
        [re, im] => Ok(Complex64::new(num(re)?, num(im)?)),
        _ => Err(bad()),
    }
}

fn elliptic_task(a: EllipticArgs) -> Result<Task, CliError> {
    let tau = parse_complex(&a.tau)?;
    if tau.im <= 0.0 {
        return Err(CliError::Invalid(format!(
            "--tau must have positive imaginary part, got {tau}"
        )));
    }
    let arg =
        |needed: bool, value: Option<&String>, flag: &str| -> Result<Option<Complex64>, CliError> {
            match (needed, value) {
                (true, Some(s)) => Ok(Some(parse_complex(s)?)),
                (true, None) => Err(CliError::Invalid(format!(
                    "{} needs --{flag}",
                    a.mode.name()
                ))),
                (false, Some(_)) => Err(CliError::Invalid(format!(
                    "{} takes no --{flag}",
                    a.mode.name()
                ))),
                (false, None) => Ok(None),
            }
        };
    Ok(Task::Elliptic {
        function: a.mode,
        tau,
        x: arg(a.mode.needs_x(), a.x.as_ref(), "x")?,
        zeta: arg(a.mode.needs_zeta(), a.zeta.as_ref(), "zeta")?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(args: &[&str]) -> Result<RunConfig, CliError> {
        let cli =
            Cli::try_parse_from(std::iter::once("macpoly").chain(args.iter().copied())).unwrap();
        RunConfig::from_cli(cli, None)
    }

    #[test]
    fn partitions_are_padded() {
        assert_eq!(parse_partition("2", 3).unwrap().parts(), &[2, 0, 0]);
        assert_eq!(parse_partition("", 2).unwrap().parts(), &[0, 0]);
        assert!(parse_partition("1,2", 2).is_err());
        assert!(parse_partition("1,0,0", 2).is_err());
        assert!(parse_partition("a", 2).is_err());
    }

    #[test]
    fn complex_arguments() {
        assert_eq!(parse_complex("0.5").unwrap(), Complex64::new(0.5, 0.0));
        assert_eq!(parse_complex("0.1, 1.2").unwrap(), Complex64::new(0.1, 1.2));
        assert!(parse_complex("1,2,3").is_err());
        assert!(parse_complex("inf").is_err());
    }

    #[test]
    fn macdonald_mode_follows_k() {
        let c = cfg(&["macdonald", "--n", "2", "--lambda", "1,0", "--k", "0"]).unwrap();
        assert!(matches!(
            c.task,
            Task::Macdonald {
                mode: Mode::TEqQk(0),
                ..
            }
        ));
        let c = cfg(&["macdonald", "--n", "2", "--lambda", "1,0"]).unwrap();
        assert!(matches!(
            c.task,
            Task::Macdonald {
                mode: Mode::Generic,
                ..
            }
        ));
        assert!(cfg(&[
            "macdonald",
            "--n",
            "2",
            "--lambda",
            "1,0",
            "--mode",
            "generic",
            "--k",
            "1"
        ])
        .is_err());
        assert!(cfg(&["macdonald", "--n", "1", "--lambda", "1"]).is_err());
    }

    #[test]
    fn cache_directory_precedence() {
        let cli =
            Cli::try_parse_from(["macpoly", "elliptic", "--mode", "eta", "--tau", "0,1"]).unwrap();
        let c = RunConfig::from_cli(cli, Some("/tmp/env".into())).unwrap();
        assert_eq!(c.cache_dir, Some(PathBuf::from("/tmp/env")));
        let cli = Cli::try_parse_from([
            "macpoly",
            "elliptic",
            "--mode",
            "eta",
            "--tau",
            "0,1",
            "--cache-dir",
            "/tmp/flag",
        ])
        .unwrap();
        let c = RunConfig::from_cli(cli, Some("/tmp/env".into())).unwrap();
        assert_eq!(c.cache_dir, Some(PathBuf::from("/tmp/flag")));
        let cli = Cli::try_parse_from([
            "macpoly",
            "elliptic",
            "--mode",
            "eta",
            "--tau",
            "0,1",
            "--no-cache",
        ])
        .unwrap();
        assert_eq!(
            RunConfig::from_cli(cli, Some("/tmp/env".into()))
                .unwrap()
                .cache_dir,
            None
        );
    }

    #[test]
    fn tolerance_overrides() {
        let c = cfg(&[
            "verify",
            "elliptic-all",
            "--tol",
            "flatness=1e-6",
            "--tol",
            "fd_step=2e-4",
        ])
        .unwrap();
        assert_eq!(c.tolerances.flatness, 1e-6);
        assert_eq!(c.tolerances.fd_step, 2e-4);
        assert!(cfg(&["verify", "elliptic-all", "--tol", "flatness"]).is_err());
        assert!(cfg(&["verify", "elliptic-all", "--tol", "bogus=1"]).is_err());
    }

    #[test]
    fn verify_requirements() {
        assert!(cfg(&["verify", "norm", "--n", "2", "--lambda", "2,0"]).is_err());
        assert!(cfg(&["verify", "norm", "--n", "2", "--lambda", "2,0", "--k", "0"]).is_err());
        assert!(cfg(&[
            "verify",
            "orthogonality",
            "--n",
            "2",
            "--lambda",
            "1,1",
            "--mu",
            "1,1",
            "--k",
            "1"
        ])
        .is_err());
        let c = cfg(&["verify", "affine-k1", "--n", "2", "--K", "2"]).unwrap();
        match c.task {
            Task::Verify(VerifyTask::AffineK1 { lambdas, order, .. }) => {
                assert_eq!(lambdas.len(), 3);
                assert_eq!(order, affine_jacobi::DEFAULT_ORDER);
            }
            other => panic!("unexpected task {other:?}"),
        }
    }

    #[test]
    fn elliptic_arguments_match_function() {
        assert!(cfg(&["elliptic", "--mode", "g", "--tau", "0,1", "--x", "0.2"]).is_err());
        assert!(cfg(&["elliptic", "--mode", "eta", "--tau", "0,1", "--x", "0.2"]).is_err());
        assert!(cfg(&["elliptic", "--mode", "eta", "--tau", "0,-1"]).is_err());
        assert!(cfg(&[
            "elliptic", "--mode", "g", "--tau", "0,1", "--x", "0.2", "--zeta", "0.1,0.05"
        ])
        .is_ok());
    }
}
