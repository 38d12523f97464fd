use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use liecoh::cli::{run, Cli};

fn main() -> ExitCode {
    let (out, code) = run(Cli::parse());
    let mut stdout = std::io::stdout().lock();
    if code != 0 && out.starts_with("error:") {
        let _ = std::io::stderr().write_all(out.as_bytes());
    } else {
        let _ = stdout.write_all(out.as_bytes());
    }
    ExitCode::from(code as u8)
}
