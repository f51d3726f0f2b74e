use std::io::Write;
use std::process::ExitCode;

use pogamma::cli::{run_command, EXIT_INPUT};

fn main() -> ExitCode {
    let outcome = run_command(std::env::args_os());
    let written = if outcome.code == EXIT_INPUT {
        std::io::stderr().write_all(outcome.text.as_bytes())
    } else {
        std::io::stdout().write_all(outcome.text.as_bytes())
    };
    if written.is_err() {
        return ExitCode::from(EXIT_INPUT as u8);
    }
    ExitCode::from(outcome.code as u8)
}
