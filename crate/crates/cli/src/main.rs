use std::io::Write;

fn main() {
    // Panics are reported as JSON by `run`; keep stderr machine-readable.
    std::panic::set_hook(Box::new(|_| {}));
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    let code = macpoly::run(
        std::env::args_os(),
        std::env::var(macpoly::CACHE_ENV).ok(),
        &mut stdout.lock(),
        &mut stderr.lock(),
    );
    let _ = std::io::stdout().flush();
    std::process::exit(code);
}
