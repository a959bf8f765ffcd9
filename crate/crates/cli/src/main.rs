use std::io::Write;

fn main() {
    let outcome = glaisher_cli::run(std::env::args_os());
    // a closed pipe is not worth a panic; the exit code still reports the result
    let _ = std::io::stdout().write_all(outcome.stdout.as_bytes());
    let _ = std::io::stderr().write_all(outcome.stderr.as_bytes());
    std::process::exit(outcome.code);
}
