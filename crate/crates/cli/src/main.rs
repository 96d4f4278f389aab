mod args;
mod commands;
mod output;

use args::{Cli, Command};
use clap::Parser;
use std::process::ExitCode;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let result = match &cli.command {
        Command::Count(a) => commands::count(a),
        Command::Kernel(a) => commands::kernel(a),
        Command::Verify(a) => commands::verify(a),
        Command::Multistep(a) => commands::multistep(a),
        Command::Classify(a) => commands::classify(a),
        Command::Report(a) => commands::report(a),
    };
    let rendered = match result {
        Ok(r) => r,
        Err(commands::UsageError(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    let body = match rendered.render(cli.format) {
        Ok(b) => b,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let written = match &cli.out {
        Some(path) => std::fs::write(path, &body),
        None => {
            use std::io::Write;
            std::io::stdout().write_all(body.as_bytes())
        }
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    if rendered.pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
