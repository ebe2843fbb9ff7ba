use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use lnd_core::catalog::{build_counterexample, build_xytxty, default_catalog, CatalogEntry};
use lnd_core::dsl::parse_model;
use lnd_core::run::{run, run_catalog, CheckStatus, Command, Report, RunOptions};

#[derive(Parser)]
#[command(name = "lndcert", version, about = "Certificates for locally nilpotent derivations on polynomial subalgebras")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Stability and local nilpotency of derivations on algebras.
    CheckLnd(ModelArgs),
    /// Degree-bounded kernel bases.
    KernelBasis(ModelArgs),
    /// Word-length windows of kernel intersections.
    MlCertificate(ModelArgs),
    /// Plinth windows and tightness.
    Plinth(ModelArgs),
    /// Rank witnesses det(D_i(b_j)).
    Lndrank {
        #[command(flatten)]
        model: ModelArgs,
        /// Search for witnesses instead of checking `--elements`.
        #[arg(long)]
        find: bool,
        /// Comma-separated elements b_1, ..., b_n.
        #[arg(long)]
        elements: Option<String>,
    },
    /// Chains of kernel intersections.
    Chain(ModelArgs),
    /// Valuation non-membership certificates.
    Valuation {
        #[command(flatten)]
        model: ModelArgs,
        #[arg(long)]
        element: Option<String>,
        /// Base valuation, e.g. `order_at_infinity(t)`.
        #[arg(long)]
        valuation: Option<String>,
    },
    /// Every check in the model.
    Run(ModelArgs),
    /// Built-in example algebras.
    Catalog {
        /// `counterexample` or `xytxty`; all entries when omitted.
        #[arg(long)]
        entry: Option<String>,
        /// Parameter count for `counterexample`.
        #[arg(long, default_value_t = 1)]
        m: i64,
        /// Print the entries as model text instead of running them.
        #[arg(long)]
        print: bool,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Args)]
struct ModelArgs {
    /// Model file, or `-` for standard input.
    model: PathBuf,
    #[arg(long)]
    algebra: Option<String>,
    /// Comma-separated derivation names.
    #[arg(long, value_delimiter = ',')]
    derivations: Option<Vec<String>>,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct Common {
    /// Ambient degree bound for kernel, plinth and slice windows.
    #[arg(long)]
    degree: Option<u32>,
    /// Word-length bound for subalgebra windows.
    #[arg(long = "word-length", visible_alias = "L")]
    word_length: Option<u32>,
    #[arg(long = "iter-bound")]
    iter_bound: Option<u32>,
    /// Degree cap for rank-witness searches.
    #[arg(long)]
    cap: Option<u32>,
    /// Write the report here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Record per-check wall-clock time in the report.
    #[arg(long)]
    timing: bool,
    #[arg(long)]
    threads: Option<usize>,
}

impl Common {
    fn options(&self) -> RunOptions {
        RunOptions {
            degree: self.degree,
            word_length: self.word_length,
            iter_bound: self.iter_bound,
            cap: self.cap,
            timing: self.timing,
            threads: self.threads,
            ..Default::default()
        }
    }
}

enum Failure {
    Input(String),
}

fn read_model(path: &PathBuf) -> Result<String, Failure> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(|e| Failure::Input(format!("stdin: {e}")))?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
    }
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<(), Failure> {
    match out {
        Some(p) => fs::write(p, text).map_err(|e| Failure::Input(format!("{}: {e}", p.display()))),
        None => {
            let _ = io::stdout().write_all(text.as_bytes());
            Ok(())
        }
    }
}

fn summarize(prefix: &str, report: &Report) {
    for c in &report.checks {
        let tag = match c.status {
            CheckStatus::Pass => "PASS",
            CheckStatus::Fail => "FAIL",
            CheckStatus::Error => "ERROR",
        };
        match &c.error {
            Some(e) => eprintln!("{tag} {prefix}{} ({}): {e}", c.name, c.kind),
            None => eprintln!("{tag} {prefix}{} ({})", c.name, c.kind),
        }
    }
}

fn model_command(command: Command, args: ModelArgs, tweak: impl FnOnce(&mut RunOptions)) -> Result<i32, Failure> {
    let text = read_model(&args.model)?;
    let model = parse_model(&text).map_err(|e| Failure::Input(format!("{}:{e}", args.model.display())))?;
    let mut opts = args.common.options();
    opts.algebra = args.algebra;
    opts.derivations = args.derivations;
    tweak(&mut opts);
    let report = run(&model, command, &opts).map_err(|e| Failure::Input(e.to_string()))?;
    summarize("", &report);
    emit(&args.common.out, &report.to_json())?;
    Ok(report.exit_code())
}

fn catalog(entry: Option<String>, m: i64, print: bool, common: Common) -> Result<i32, Failure> {
    let entries: Vec<CatalogEntry> = match entry.as_deref() {
        None => default_catalog(),
        Some("counterexample") => vec![build_counterexample(m).map_err(|e| Failure::Input(e.to_string()))?],
        Some("xytxty") => vec![build_xytxty()],
        Some(other) => return Err(Failure::Input(format!("unknown catalog entry `{other}`"))),
    };
    if print {
        let text: Vec<String> = entries.iter().map(CatalogEntry::to_dsl).collect();
        emit(&common.out, &text.join("\n"))?;
        return Ok(0);
    }
    let report = run_catalog(&entries, &common.options()).map_err(|e| Failure::Input(e.to_string()))?;
    for e in &report.entries {
        summarize(&format!("{}/", e.id), &e.report);
    }
    emit(&common.out, &report.to_json())?;
    Ok(report.exit_code())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Cmd::CheckLnd(a) => model_command(Command::CheckLnd, a, |_| {}),
        Cmd::KernelBasis(a) => model_command(Command::KernelBasis, a, |_| {}),
        Cmd::MlCertificate(a) => model_command(Command::MlCertificate, a, |_| {}),
        Cmd::Plinth(a) => model_command(Command::Plinth, a, |_| {}),
        Cmd::Lndrank { model, find, elements } => model_command(Command::Lndrank, model, |o| {
            o.find = find;
            o.elements = elements;
        }),
        Cmd::Chain(a) => model_command(Command::Chain, a, |_| {}),
        Cmd::Valuation { model, element, valuation } => model_command(Command::Valuation, model, |o| {
            o.element = element;
            o.valuation = valuation;
        }),
        Cmd::Run(a) => model_command(Command::Run, a, |_| {}),
        Cmd::Catalog { entry, m, print, common } => catalog(entry, m, print, common),
    };
    match result {
        Ok(code) => ExitCode::from(code as u8),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
