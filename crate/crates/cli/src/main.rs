use std::io::Write;

fn main() {
    let env = std::env::var(trimlat_cli::MAX_N_ENV).ok();
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let code = trimlat_cli::run(std::env::args_os(), env.as_deref(), &mut out, &mut std::io::stderr());
    let _ = out.flush();
    std::process::exit(code);
}
