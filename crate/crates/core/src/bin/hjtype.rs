use std::process::ExitCode;

use clap::Parser;
use hjtype::cli::{load_exponents_arg, run, Emit, Format, JobSpec, EXIT_INVALID};
use hjtype::group::DEFAULT_CHARACTER_BOUND;

/// Hirzebruch-Jung type of the normalization of a quasi-ordinary
/// hypersurface singularity, from its characteristic exponents.
#[derive(Parser, Debug)]
#[command(name = "hjtype", version)]
struct Args {
    /// Ambient dimension d; inferred from the exponents when omitted.
    #[arg(long)]
    dim: Option<usize>,

    /// Exponent vectors like "1/4 1/6 1/6 ; 3/8 5/12 7/12", or @file.
    #[arg(long, default_value = "")]
    exponents: String,

    /// Outputs to produce (comma separated or repeated).
    #[arg(long, value_enum, value_delimiter = ',', default_values_t = [Emit::Type])]
    emit: Vec<Emit>,

    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Reject exponents that do not enlarge the lattice (N_k = 1).
    #[arg(long)]
    strict: bool,

    /// Largest group order enumerated for --emit characters.
    #[arg(long, default_value_t = DEFAULT_CHARACTER_BOUND)]
    max_enumeration: u64,
}

fn main() -> ExitCode {
    let args = Args::parse();
    let exponents = match load_exponents_arg(&args.exponents) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_INVALID as u8);
        }
    };
    let job = JobSpec {
        dim: args.dim,
        exponents,
        emit: args.emit,
        format: args.format,
        strict: args.strict,
        max_enumeration: args.max_enumeration,
    };
    let outcome = run(&job);
    print!("{}", outcome.stdout);
    eprint!("{}", outcome.stderr);
    ExitCode::from(outcome.exit_code as u8)
}
