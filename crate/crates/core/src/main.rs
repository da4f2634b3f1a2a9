use std::process::ExitCode;

fn main() -> ExitCode {
    let (out, code) = coherency::cli::run(std::env::args_os());
    if code == 2 {
        eprint!("{out}");
    } else {
        print!("{out}");
    }
    ExitCode::from(code)
}
