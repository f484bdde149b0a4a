use clap::Parser;
use qhahn_cli::{execute, Cli};
use std::io::Write;

fn main() {
    let cli = Cli::parse();
    match execute(&cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout();
            let _ = stdout.write_all(out.text.as_bytes());
            if !out.text.ends_with('\n') {
                let _ = stdout.write_all(b"\n");
            }
            std::process::exit(out.code);
        }
        Err(e) => {
            eprintln!("{e}");
            std::process::exit(e.exit_code());
        }
    }
}
