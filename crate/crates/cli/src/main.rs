use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use quantum_bouncer_cli::{run, Cli, Format, Report};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let report = match run(&cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("bouncer: {e}");
            return ExitCode::from(e.exit_code());
        }
    };
    // CSV has no room for derived results, so they go to stderr
    if let Report::Record(record, Format::Csv) = &report {
        for (k, v) in &record.summary {
            eprintln!("{k}={v}");
        }
    }
    let mut out = std::io::stdout().lock();
    if let Err(e) = out
        .write_all(report.render().as_bytes())
        .and_then(|_| out.flush())
    {
        eprintln!("bouncer: writing output: {e}");
        return ExitCode::from(3);
    }
    ExitCode::from(report.exit_code())
}
