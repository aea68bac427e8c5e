use std::io::Write;
use std::process::ExitCode;

use gsg_cli::Registry;

fn main() -> ExitCode {
    let verdict = Registry::builtin().run(std::env::args());
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(verdict.stdout().as_bytes());
    if let Some(e) = &verdict.error {
        let _ = std::io::stderr().write_all(e.as_bytes());
    }
    ExitCode::from(verdict.exit.code() as u8)
}
