use std::process::ExitCode;

fn main() -> ExitCode {
    let code = hypercalc::cli_dispatch(
        std::env::args(),
        &mut std::io::stdout().lock(),
        &mut std::io::stderr().lock(),
    );
    ExitCode::from(code as u8)
}
