//! The ten acceptance criteria; one line per criterion in the output.

use std::process::ExitCode;

use dplane_core::selftest::{run_all, Config};

fn main() -> ExitCode {
    let outcomes = run_all(Config::default());
    for o in &outcomes {
        println!("{o}");
    }
    let failed: Vec<_> = outcomes.iter().filter(|o| !o.passed()).map(|o| o.id).collect();
    if outcomes.len() != 10 || !failed.is_empty() {
        println!("acceptance: {} criteria run, failing {failed:?}", outcomes.len());
        return ExitCode::FAILURE;
    }
    println!("acceptance: all {} criteria pass", outcomes.len());
    ExitCode::SUCCESS
}
