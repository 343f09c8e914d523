use clap::Parser;
use sphrange_cli::{run, Cli, EXIT_ERROR};

fn main() {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(outcome) => {
            print!("{}", outcome.summary);
            if !outcome.summary.ends_with('\n') {
                println!();
            }
            std::process::exit(outcome.exit_code());
        }
        Err(e) => {
            eprintln!("sphrange: {e}");
            std::process::exit(EXIT_ERROR);
        }
    }
}
