use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use subgroup_el::perm_group::DEFAULT_MAX_ORDER;
use subgroup_el::subgroup_lattice::DEFAULT_MAX_SUBGROUPS;
use subgroup_el_cli::bundle::batch_json;
use subgroup_el_cli::{
    analyze, to_dot, verdict_exit_code, verify_batch, CliError, GroupSpec, Options,
    DEFAULT_CATALOG, EXIT_PARSE,
};

/// EL-labelings of subgroup lattices of finite solvable groups.
#[derive(Parser)]
#[command(name = "subgroup-el", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Worker threads for the checkers (default: available parallelism).
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[arg(long, global = true, default_value_t = DEFAULT_MAX_ORDER)]
    max_order: usize,

    #[arg(long, global = true, default_value_t = DEFAULT_MAX_SUBGROUPS)]
    max_subgroups: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Label and verify one group; writes a JSON bundle or DOT graph.
    Analyze(AnalyzeArgs),
    /// Write the labelled Hasse diagram as a DOT digraph.
    ExportDot(AnalyzeArgs),
    /// Check every group listed in a file (default: built-in catalog).
    VerifyBatch {
        /// One group per line; `#` starts a comment.
        file: Option<PathBuf>,
        /// Also write all bundles as a JSON array.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Dot,
}

#[derive(Args)]
struct AnalyzeArgs {
    /// Catalog name (C6, D4, S4, A4, Q8, E8, SL23, ...) or
    /// "degree=<n>; gens=<perm>,<perm>".
    #[arg(long, conflicts_with_all = ["gens", "degree"])]
    group: Option<String>,
    /// Generators in cycle notation, comma separated.
    #[arg(long, requires = "degree")]
    gens: Option<String>,
    #[arg(long, requires = "gens")]
    degree: Option<usize>,
    /// Chief series as bracketed generator lists, bottom first,
    /// e.g. "[], [(1 2)(3 4),(1 3)(2 4)], [(1 2 3),(1 2)(3 4)]".
    #[arg(long)]
    series: Option<String>,
    /// Also compute the labeling of the dual lattice.
    #[arg(long)]
    dual: bool,
    #[arg(long)]
    no_verify: bool,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum)]
    format: Option<Format>,
}

impl AnalyzeArgs {
    fn spec(&self) -> Result<GroupSpec, CliError> {
        match (&self.group, &self.gens, self.degree) {
            (Some(text), _, _) => GroupSpec::parse(text),
            (None, Some(gens), Some(degree)) => Ok(GroupSpec::Raw {
                degree,
                gens: gens.clone(),
            }),
            _ => Err(CliError::Parse(
                "give --group or --gens with --degree".into(),
            )),
        }
    }
}

fn write_output(path: Option<&PathBuf>, text: &str) -> Result<(), CliError> {
    match path {
        Some(p) => fs::write(p, text).map_err(|source| CliError::Io {
            path: p.display().to_string(),
            source,
        }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run_analyze(
    args: &AnalyzeArgs,
    base: &Options,
    default_format: Format,
) -> Result<i32, CliError> {
    let options = Options {
        series: args.series.clone(),
        dual: args.dual,
        verify: !args.no_verify,
        ..base.clone()
    };
    let bundle = analyze(&args.spec()?, &options)?;
    let text = match args.format.unwrap_or(default_format) {
        Format::Json => bundle.to_json(),
        Format::Dot => to_dot(&bundle),
    };
    write_output(args.out.as_ref(), &text)?;
    if let Some(checks) = &bundle.checks {
        for c in checks.iter().filter(|c| !c.pass) {
            eprintln!("check {} failed on {} of {}", c.name, c.failures, c.checked);
        }
    }
    Ok(verdict_exit_code(&bundle))
}

fn run(cli: &Cli) -> Result<i32, CliError> {
    let base = Options {
        max_order: cli.max_order,
        max_subgroups: cli.max_subgroups,
        ..Options::default()
    };
    match &cli.command {
        Command::Analyze(args) => run_analyze(args, &base, Format::Json),
        Command::ExportDot(args) => run_analyze(args, &base, Format::Dot),
        Command::VerifyBatch { file, out } => {
            let list = match file {
                Some(p) => fs::read_to_string(p).map_err(|source| CliError::Io {
                    path: p.display().to_string(),
                    source,
                })?,
                None => DEFAULT_CATALOG.to_string(),
            };
            let outcome = verify_batch(&list, &base);
            print!("{}", outcome.table());
            if let Some(p) = out {
                write_output(Some(p), &batch_json(&outcome.bundles()))?;
            }
            Ok(outcome.exit_code())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(n) = cli.threads {
        pool = pool.num_threads(n);
    }
    let pool = match pool.build() {
        Ok(pool) => pool,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_PARSE as u8);
        }
    };
    let code = pool.install(|| run(&cli)).unwrap_or_else(|e| {
        eprintln!("error: {e}");
        e.exit_code()
    });
    ExitCode::from(code as u8)
}
