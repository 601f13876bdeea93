use std::io;
use std::process::ExitCode;

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().collect();
    let code = hyperverify::verifier::run_cli(&args, io::stdin().lock(), io::stdout().lock(), io::stderr());
    ExitCode::from(code as u8)
}
