mod commands;

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use dplane_core::profiles::ProfileKind;

#[derive(Parser)]
#[command(name = "dplane", version, about = "Curves in the double plane 2H of P^3")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, Default, ValueEnum)]
enum Profile {
    #[default]
    Collinear,
    Generic,
}

impl From<Profile> for ProfileKind {
    fn from(p: Profile) -> Self {
        match p {
            Profile::Collinear => ProfileKind::Collinear,
            Profile::Generic => ProfileKind::Generic,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, ValueEnum)]
enum ArithmeticArg {
    #[default]
    Exact,
    Prime,
}

#[derive(Subcommand)]
enum Command {
    /// Irreducible components of H_{d,g}; with --min-genus and no G, every nonempty genus down to the bound.
    #[command(allow_negative_numbers = true)]
    Components {
        d: i64,
        #[arg(required_unless_present = "min_genus", conflicts_with = "min_genus")]
        g: Option<i64>,
        #[arg(long)]
        min_genus: Option<i64>,
        #[arg(long)]
        json: bool,
    },
    /// Specialization graph on the components and its connectedness.
    #[command(allow_negative_numbers = true)]
    Connect {
        d: i64,
        g: i64,
        #[arg(long, conflicts_with = "json")]
        dot: bool,
        #[arg(long)]
        json: bool,
    },
    /// Cohomology table, Rao function and Rao bounds of a model.
    #[command(allow_negative_numbers = true)]
    Rao {
        z: i64,
        y: i64,
        p: i64,
        #[arg(long, value_enum, default_value_t)]
        profile: Profile,
        #[arg(long)]
        json: bool,
    },
    /// Postulation character, structural and direct, with recovery of z.
    #[command(allow_negative_numbers = true)]
    Character {
        z: i64,
        y: i64,
        p: i64,
        #[arg(long, value_enum, default_value_t)]
        profile: Profile,
        #[arg(long)]
        json: bool,
    },
    /// Link by 2H ∩ S where S ∩ H has degree Q.
    #[command(allow_negative_numbers = true)]
    Liaison {
        z: i64,
        y: i64,
        p: i64,
        q: i64,
        #[arg(long, value_enum, default_value_t)]
        profile: Profile,
        #[arg(long)]
        json: bool,
    },
    /// Elementary biliaison to residual degree Y_NEW.
    #[command(allow_negative_numbers = true)]
    Bilink {
        z: i64,
        y: i64,
        p: i64,
        y_new: i64,
        #[arg(long, value_enum, default_value_t)]
        profile: Profile,
        #[arg(long)]
        json: bool,
    },
    /// Lists catalog names, or prints the ideal of NAME.
    #[command(allow_negative_numbers = true)]
    Catalog {
        name: Option<String>,
        /// Override for the form s (extremal-like only).
        #[arg(long = "form-s", value_name = "POLY")]
        form_s: Option<String>,
        /// Override for the form g (extremal-like only).
        #[arg(long = "form-g", value_name = "POLY")]
        form_g: Option<String>,
        /// Override for the form f (extremal-like only).
        #[arg(long = "form-f", value_name = "POLY")]
        form_f: Option<String>,
    },
    /// Extracts the triple of an ideal and compares the oracle with the formulas.
    #[command(allow_negative_numbers = true)]
    Verify {
        /// catalog:NAME or file:PATH.
        #[arg(value_parser = source_arg)]
        source: String,
        #[arg(long)]
        max_degree: Option<u32>,
        #[arg(long, value_enum, default_value_t)]
        profile: Profile,
        #[arg(long, value_enum, default_value_t)]
        arithmetic: ArithmeticArg,
        #[arg(long)]
        json: bool,
    },
    /// Runs the acceptance criteria.
    #[command(allow_negative_numbers = true)]
    Selftest {
        #[arg(long)]
        deep: bool,
        #[arg(long)]
        json: bool,
    },
}

fn source_arg(s: &str) -> Result<String, String> {
    commands::parse_source(s).map(|_| s.to_string())
}

fn run(cmd: Command) -> commands::Outcome {
    use commands::*;
    match cmd {
        Command::Components { d, g, min_genus, json } => components(d, g, min_genus, json),
        Command::Connect { d, g, dot, json } => connect(d, g, dot, json),
        Command::Rao { z, y, p, profile, json } => rao(z, y, p, profile.into(), json),
        Command::Character { z, y, p, profile, json } => character(z, y, p, profile.into(), json),
        Command::Liaison { z, y, p, q, profile, json } => liaison(z, y, p, q, profile.into(), json),
        Command::Bilink {
            z,
            y,
            p,
            y_new,
            profile,
            json,
        } => bilink(z, y, p, y_new, profile.into(), json),
        Command::Catalog {
            name,
            form_s,
            form_g,
            form_f,
        } => catalog(name.as_deref(), [form_s, form_g, form_f]),
        Command::Verify {
            source,
            max_degree,
            profile,
            arithmetic,
            json,
        } => verify(&source, max_degree, profile.into(), matches!(arithmetic, ArithmeticArg::Prime), json),
        Command::Selftest { deep, json } => selftest(deep, json),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let mut stdout = std::io::stdout().lock();
    match run(cli.command) {
        Ok(text) => {
            let _ = stdout.write_all(text.as_bytes());
            ExitCode::SUCCESS
        }
        Err(failure) => {
            let _ = stdout.write_all(failure.output.as_bytes());
            let _ = stdout.flush();
            eprintln!("error: {}", failure.message);
            ExitCode::from(1)
        }
    }
}
