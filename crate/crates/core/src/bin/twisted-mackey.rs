use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use twisted_mackey::group::DEFAULT_SUBGROUP_BOUND;
use twisted_mackey::job::{parse_job, run, ExitStatus, RunConfig};

/// Runs one JSON job and prints aligned tables; exit 0 when every check
/// passes, 1 on a failed check, 2 on invalid input, 3 on unsupported instances.
#[derive(Parser)]
#[command(version)]
struct Cli {
    /// Job description (JSON).
    job: PathBuf,
    /// Write the JSON report here.
    #[arg(long)]
    json_out: Option<PathBuf>,
    /// Largest group order accepted.
    #[arg(long, default_value_t = DEFAULT_SUBGROUP_BOUND)]
    max_group_order: usize,
    /// Enable instances built from formulas outside the verified pipeline.
    #[arg(long)]
    allow_external_data: bool,
    /// Record wall-clock timings in the report.
    #[arg(long)]
    timings: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let fail = |status: ExitStatus, message: String| {
        eprintln!("error: {message}");
        ExitCode::from(status.code() as u8)
    };
    let source = match std::fs::read_to_string(&cli.job) {
        Ok(s) => s,
        Err(e) => return fail(ExitStatus::Invalid, format!("{}: {e}", cli.job.display())),
    };
    let spec = match parse_job(&source) {
        Ok(s) => s,
        Err(e) => return fail(e.status, format!("{}: {e}", cli.job.display())),
    };
    let config = RunConfig {
        max_group_order: cli.max_group_order,
        allow_external_data: cli.allow_external_data,
        timings: cli.timings,
    };
    let outcome = match run(&spec, &config) {
        Ok(o) => o,
        Err(e) => return fail(e.status, e.to_string()),
    };
    print!("{}", outcome.text);
    if let Some(path) = cli.json_out.or(spec.options.output) {
        if let Err(e) = std::fs::write(&path, outcome.report.to_json()) {
            return fail(ExitStatus::Invalid, format!("{}: {e}", path.display()));
        }
    }
    ExitCode::from(outcome.status.code() as u8)
}
