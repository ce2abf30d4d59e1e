use std::io::{self, Write};

fn main() {
    let stdin = io::stdin();
    let mut input = stdin.lock();
    let mut stdout = io::stdout().lock();
    let mut stderr = io::stderr().lock();
    let code = wiener_extremal::cli::run(std::env::args_os(), &mut input, &mut stdout, &mut stderr);
    let _ = stdout.flush();
    std::process::exit(code);
}
