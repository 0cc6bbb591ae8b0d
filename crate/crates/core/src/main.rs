use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let outcome = toric_robust::cli::execute(std::env::args_os());
    print!("{}", outcome.stdout);
    eprint!("{}", outcome.stderr);
    let _ = std::io::stdout().flush();
    ExitCode::from(u8::try_from(outcome.exit_code).unwrap_or(1))
}
