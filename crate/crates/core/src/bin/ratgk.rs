use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use ratgk::cli::{run_command, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = run_command(&cli);
    eprint!("{}", out.stderr);
    match &cli.out {
        Some(path) if out.code != 2 => {
            if let Err(e) = std::fs::write(path, &out.stdout) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        _ => {
            let _ = std::io::stdout().write_all(out.stdout.as_bytes());
        }
    }
    ExitCode::from(out.code as u8)
}
