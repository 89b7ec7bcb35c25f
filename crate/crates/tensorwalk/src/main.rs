use std::io;
use std::process::ExitCode;

use tensorwalk::{guards_from_env, run, EXIT_USAGE, MAX_N_VAR};

fn main() -> ExitCode {
    let guards = match guards_from_env(std::env::var(MAX_N_VAR).ok().as_deref()) {
        Ok(g) => g,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_USAGE);
        }
    };
    let code = run(std::env::args_os(), &guards, &mut io::stdin().lock(), &mut io::stdout().lock(), &mut io::stderr());
    ExitCode::from(code)
}
