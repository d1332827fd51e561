use std::io;

fn main() {
    let seed = std::env::var("FACTOR_SEED").ok();
    let code = globfactor_cli::run(std::env::args_os(), seed.as_deref(), &mut io::stdout(), &mut io::stderr());
    std::process::exit(code);
}
