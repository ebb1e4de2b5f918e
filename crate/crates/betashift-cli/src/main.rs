use clap::Parser;

fn main() {
    let cli = betashift_cli::cli::Cli::parse();
    let stdout = std::io::stdout();
    let mut lock = stdout.lock();
    if let Err(e) = betashift_cli::run(&cli, &mut lock) {
        eprintln!("error: {e}");
        std::process::exit(e.exit_code());
    }
}
