use std::io::Write;
use std::process::ExitCode;

use superbialg::cli::{run, WINDOW_ENV};

fn main() -> ExitCode {
    let window = std::env::var(WINDOW_ENV).ok();
    let out = run(std::env::args_os(), window.as_deref());
    // a closed pipe is not worth a panic
    let _ = std::io::stdout().write_all(out.stdout.as_bytes());
    let _ = std::io::stderr().write_all(out.stderr.as_bytes());
    ExitCode::from(out.code as u8)
}
