//! `macpoly`: the command-line front end.
//!
//! - [`config`]: argument grammar and validation into a [`RunConfig`].
//! - [`cache`]: the content-addressed JSON result cache.
//! - [`commands`]: `macdonald`, `jack`, `affine`, `verify` and `elliptic`.
//! - [`render`]: JSON, CSV and plain-text output.
//!
//! The payload goes to stdout; errors go to stderr as one JSON object. Exit
//! codes are 0 on success, 1 when a verification fails, 2 on invalid input
//! and 3 on internal or exactness errors.

pub mod cache;
pub mod commands;
pub mod config;
pub mod error;
pub mod render;

use std::ffi::OsString;
use std::io::Write;
use std::panic::{catch_unwind, AssertUnwindSafe};

use clap::error::ErrorKind;
use clap::Parser;
use serde_json::json;

pub use cache::{Cache, CacheStats, CACHE_ENV};
pub use commands::{execute, Outcome};
pub use config::{Cli, RunConfig};
pub use error::{CliError, EXIT_INTERNAL, EXIT_INVALID_INPUT, EXIT_OK, EXIT_VERIFICATION_FAILED};

fn report_error(err: &mut dyn Write, e: &CliError) -> i32 {
    let _ = writeln!(err, "{}", e.to_json());
    e.exit_code()
}

fn panic_message(payload: Box<dyn std::any::Any + Send>) -> String {
    payload
        .downcast_ref::<&str>()
        .map(|s| s.to_string())
        .or_else(|| payload.downcast_ref::<String>().cloned())
        .unwrap_or_else(|| "panic".into())
}

/// Run one invocation and return its exit code. `args` includes the
/// program name; `env_cache` is the value of `$MACPOLY_CACHE`.
pub fn run<I, T>(
    args: I,
    env_cache: Option<String>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            let _ = write!(out, "{e}");
            return EXIT_OK;
        }
        Err(e) => {
            let message = e.render().to_string();
            let message = message.trim_start_matches("error: ").trim_end();
            return report_error(err, &CliError::Invalid(message.to_string()));
        }
    };
    let cfg = match RunConfig::from_cli(cli, env_cache) {
        Ok(cfg) => cfg,
        Err(e) => return report_error(err, &e),
    };
    let cache = match &cfg.cache_dir {
        Some(dir) => match Cache::at(dir) {
            Ok(c) => c,
            Err(e) => return report_error(err, &e),
        },
        None => Cache::disabled(),
    };
    let result = catch_unwind(AssertUnwindSafe(|| execute(&cfg, &cache)))
        .unwrap_or_else(|p| Err(CliError::Internal(panic_message(p))));
    for line in cache.take_log() {
        let _ = writeln!(err, "{line}");
    }
    if cfg.stats {
        let _ = writeln!(err, "{}", json!({"stats": cache.stats()}));
    }
    match result {
        Ok(outcome) => {
            if writeln!(out, "{}", outcome.payload).is_err() {
                return report_error(err, &CliError::Internal("cannot write to stdout".into()));
            }
            if outcome.pass {
                EXIT_OK
            } else {
                EXIT_VERIFICATION_FAILED
            }
        }
        Err(e) => report_error(err, &e),
    }
}
