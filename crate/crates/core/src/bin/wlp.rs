use std::io;
use std::process::ExitCode;

fn main() -> ExitCode {
    let outcome = wlp::cli::run(std::env::args_os());
    let code = wlp::cli::emit(&outcome, &mut io::stdout().lock(), &mut io::stderr().lock());
    ExitCode::from(code as u8)
}
