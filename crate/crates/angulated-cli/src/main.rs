use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(angulated_cli::run(std::env::args()) as u8)
}
