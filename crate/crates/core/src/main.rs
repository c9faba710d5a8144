use std::process::ExitCode;

use clap::Parser;

use actinfo::cli::{run, Cli};

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match run(cli, std::io::stdout().lock()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("actinfo: {err}");
            ExitCode::from(err.exit_code() as u8)
        }
    }
}
