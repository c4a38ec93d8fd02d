use std::io::Write;
use std::process::ExitCode;

use invmoment::cli::{render, run};

fn main() -> ExitCode {
    let (code, report, cli) = run(std::env::args_os());
    let Some(cli) = cli else {
        // clap help, version and usage errors
        let msg = report
            .rows
            .first()
            .and_then(|r| r.field("message"))
            .and_then(|m| m.as_str())
            .unwrap_or("");
        if code == 0 {
            print!("{msg}");
        } else {
            eprint!("{msg}");
        }
        return ExitCode::from(code as u8);
    };
    let text = render(&report, cli.json);
    match &cli.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &text) {
                eprintln!("cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => {
            let _ = std::io::stdout().write_all(text.as_bytes());
        }
    }
    ExitCode::from(code as u8)
}
