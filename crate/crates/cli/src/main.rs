use std::process::ExitCode;

use clap::Parser;
use hsbound_cli::{run, Cli, Exit, ReportDocument};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (doc, exit) = match run(&cli) {
        Ok(outcome) => (outcome.doc, outcome.exit),
        Err(err) => {
            eprintln!("hsbound: {err}");
            let name = cli.command.name();
            let doc =
                ReportDocument::error(name, cli.command.inputs(cli.divisor), &err.to_string());
            (doc, Exit::InputError)
        }
    };
    if exit == Exit::Violation {
        eprintln!("hsbound: bound check FAILED");
    }
    let text = if cli.json {
        doc.to_json()
    } else {
        doc.to_human()
    };
    print!("{text}");
    ExitCode::from(exit as u8)
}
