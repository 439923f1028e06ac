use std::io;

fn main() {
    let code = entwined_cli::app::run_from(std::env::args_os(), &mut io::stdout(), &mut io::stderr());
    std::process::exit(code);
}
