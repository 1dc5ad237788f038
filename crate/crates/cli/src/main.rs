mod args;
mod commands;
mod error;
mod output;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use cliffgate::exec::Exec;

use args::{Cli, Command};
use commands::Ctx;
use error::{CliError, CliResult};
use output::Out;

fn exec_for(threads: Option<usize>) -> CliResult<Exec> {
    match threads {
        None => Ok(Exec::Parallel),
        Some(0) => Err(CliError::Usage("--threads must be at least 1".into())),
        Some(1) => Ok(Exec::Sequential),
        #[cfg(feature = "parallel")]
        Some(t) => {
            // Fails only if a pool already exists, which cannot happen here.
            let _ = rayon::ThreadPoolBuilder::new().num_threads(t).build_global();
            Ok(Exec::Parallel)
        }
        #[cfg(not(feature = "parallel"))]
        Some(_) => Ok(Exec::Sequential),
    }
}

fn run(cli: &Cli, out: &mut Out) -> CliResult<()> {
    let ctx = Ctx {
        exec: exec_for(cli.global.threads)?,
        max_ambient: cli.global.max_ambient,
        max_qubits: cli.global.max_qubits,
    };
    match &cli.command {
        Command::Closure {
            input,
            labels,
            no_labels,
        } => commands::closure(&ctx, out, input, *labels, *no_labels),
        Command::Certify {
            input,
            target,
            tolerance,
        } => commands::certify(&ctx, out, input, target, *tolerance),
        Command::VerifyRep {
            qubits,
            tolerance,
            samples,
            seed,
        } => commands::verify_rep(&ctx, out, *qubits, *tolerance, *samples, *seed),
        Command::Gateset { qubits } => commands::gateset(&ctx, out, *qubits),
        Command::Synth {
            input,
            steps,
            qubits,
            output,
            metric,
            tolerance,
        } => commands::synth(
            &ctx,
            out,
            commands::SynthArgs {
                input,
                steps: *steps,
                qubits: *qubits,
                output: output.as_deref(),
                metric: *metric,
                tolerance: *tolerance,
            },
        ),
        Command::Power { angle, tolerance, cap } => commands::power(out, angle, *tolerance, *cap),
        Command::RandomH {
            qubits,
            seed,
            normalize,
            output,
        } => commands::random_h(&ctx, out, *qubits, *seed, *normalize, output.as_deref()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = Out::new(cli.global.format);
    let result = run(&cli, &mut out);
    // Whatever was produced before a failure is still useful.
    let _ = std::io::stdout().write_all(out.finish().as_bytes());
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("cliffgate: {e}");
            e.exit_code()
        }
    }
}
