mod args;
mod commands;
mod report;

use std::io::{self, Write};
use std::process::ExitCode;

use clap::Parser;

use args::Cli;

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.workers {
        if n >= 1 {
            rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build_global()
                .expect("global pool is configured once");
        }
    }
    let result = commands::run(&cli).and_then(|report| {
        let stdout = io::stdout();
        let mut out = stdout.lock();
        report.write(cli.format, &mut out)?;
        out.flush()?;
        Ok(())
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("zetalab: {}", format!("{e:#}").replace('\n', " "));
            ExitCode::FAILURE
        }
    }
}
