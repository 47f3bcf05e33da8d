use std::process::ExitCode;

fn main() -> ExitCode {
    grasscal_cli::run()
}
