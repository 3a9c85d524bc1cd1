use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(chebcube::cli::cli_main(std::env::args()) as u8)
}
