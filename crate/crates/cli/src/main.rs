use std::io::Write;
use std::process::ExitCode;

use qfib_cli::{execute, parse_args, EXIT_FAILS, EXIT_OK};

fn main() -> ExitCode {
    let (out, code) = match parse_args(std::env::args_os().skip(1)) {
        Ok(c) => execute(&c),
        Err(e) => (e.message, e.exit_code),
    };
    if code == EXIT_OK || code == EXIT_FAILS {
        let _ = std::io::stdout().write_all(out.as_bytes());
    } else {
        let _ = std::io::stderr().write_all(out.as_bytes());
    }
    ExitCode::from(code as u8)
}
