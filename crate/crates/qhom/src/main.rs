use std::process::ExitCode;

use clap::Parser as _;
use qhom::cli::{Cli, Exit, Format};
use qhom::commands::{execute, Outcome};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(Exit::Operational as u8) } else { ExitCode::SUCCESS };
        }
    };
    match execute(&cli) {
        Ok(Outcome::Text(t)) => {
            print!("{t}");
            ExitCode::SUCCESS
        }
        Ok(Outcome::Report(report)) => {
            match cli.common.format {
                Format::Json => print!("{}", report.to_json_lines()),
                Format::Table => print!("{}", report.to_table()),
            }
            if report.failed() == 0 {
                ExitCode::from(Exit::Pass as u8)
            } else {
                ExitCode::from(Exit::Failure as u8)
            }
        }
        Err(e) => {
            eprintln!("qhom: {}", e.message);
            ExitCode::from(e.exit as u8)
        }
    }
}
