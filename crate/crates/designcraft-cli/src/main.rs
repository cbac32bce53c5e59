//! Command-line surface: code construction, weight distributions, design
//! extraction/verification, and the end-to-end `paper verify` pipeline.
//!
//! Exit codes: 0 success; 1 a verification regression (a MISMATCH other than
//! the known formula discrepancy); 2 invalid flags or preconditions; 3
//! construction failure; 4 enumeration/verification budget exceeded; 5 a
//! failed design property.

use std::path::PathBuf;
use std::time::{SystemTime, UNIX_EPOCH};

use clap::{Args, Parser, Subcommand, ValueEnum};

use designcraft::{
    bch_generator, build_c_m, cyclic_code, dual_closed_form, double_dual_closed_form,
    extended_dual_closed_form, five_weight_distribution, macwilliams, verify_family,
    verify_t_design, weight_distribution_with_budget, BchSpec, BinaryField, CmVariant, Design,
    Error, Level, LinearCode, VerifyOptions, DEFAULT_ENUM_BUDGET_LOG2,
};

#[derive(Parser)]
#[command(name = "designcraft", version, about = "Exact workbench for five-weight codes and their designs")]
struct Cli {
    /// Cap the worker thread count (default: available parallelism)
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Construct codes and write them in the code file format
    Code {
        #[command(subcommand)]
        action: CodeAction,
    },
    /// Weight distributions by enumeration, MacWilliams transform, or closed
    /// form, as CSV on stdout
    Wdist(WdistArgs),
    /// Extract fixed-weight supports as block designs and verify them
    Designs {
        #[command(subcommand)]
        action: DesignsAction,
    },
    /// Re-derive the published results at a given degree and report every
    /// check
    Paper {
        #[command(subcommand)]
        action: PaperAction,
    },
}

#[derive(Subcommand)]
enum CodeAction {
    /// Build a named construction (--variant) or a generic BCH code
    /// (--delta/--offset)
    Build(BuildArgs),
}

#[derive(Args)]
struct BuildArgs {
    /// Extension degree m
    #[arg(long)]
    m: u32,
    #[arg(long, value_enum)]
    variant: Option<Variant>,
    /// Designed distance for a generic BCH construction
    #[arg(long)]
    delta: Option<u64>,
    /// Starting exponent of the defining window (generic construction)
    #[arg(long)]
    offset: Option<u64>,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Copy, Clone, ValueEnum)]
enum Variant {
    Bch0,
    DualNarrow7,
}

#[derive(Args)]
struct WdistArgs {
    /// Code file to enumerate or transform
    #[arg(long)]
    code: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "enum")]
    method: Method,
    /// Degree for closed-form families
    #[arg(long)]
    m: Option<u32>,
    #[arg(long, value_enum)]
    family: Option<Family>,
    /// Dimension kappa used by the MacWilliams transform denominator
    #[arg(long)]
    dim_dual: Option<u32>,
}

#[derive(Copy, Clone, ValueEnum)]
enum Method {
    Enum,
    Macwilliams,
    ClosedForm,
}

#[derive(Copy, Clone, ValueEnum)]
enum Family {
    Table1,
    Dual,
    ExtendedDual,
    DoubleDual,
}

#[derive(Subcommand)]
enum DesignsAction {
    /// Write the supports of all weight-w codewords as a blocks file
    Extract {
        #[arg(long)]
        code: PathBuf,
        #[arg(long)]
        weight: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Exhaustively check the t-design property of a blocks file
    Verify {
        #[arg(long)]
        blocks: PathBuf,
        #[arg(long)]
        t: usize,
    },
}

#[derive(Subcommand)]
enum PaperAction {
    /// Run every check at the given degree
    Verify {
        #[arg(long)]
        m: u32,
        #[arg(long, value_enum, default_value = "full")]
        level: CliLevel,
        /// Also write the report as JSON to this path
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

#[derive(Copy, Clone, ValueEnum)]
enum CliLevel {
    Formulas,
    Full,
}

fn exit_code_for(err: &Error) -> i32 {
    match err {
        Error::EnumerationTooLarge { .. } | Error::VerificationTooLarge { .. } => 4,
        Error::NotIrreducible(_)
        | Error::NotPrimitive { .. }
        | Error::DimensionCheckFailed { .. }
        | Error::DependentRows { .. }
        | Error::RankDefect
        | Error::ZeroDual(_)
        | Error::BadCodeShape { .. } => 3,
        _ => 2,
    }
}

fn fail(err: Error) -> i32 {
    eprintln!("error: {err}");
    exit_code_for(&err)
}

fn enum_budget_log2() -> Result<u32, String> {
    match std::env::var("DESIGNCRAFT_BUDGET") {
        Ok(raw) => raw
            .parse::<u32>()
            .map_err(|_| format!("DESIGNCRAFT_BUDGET must be a decimal exponent, got `{raw}`")),
        Err(_) => Ok(DEFAULT_ENUM_BUDGET_LOG2),
    }
}

fn work_budget() -> Result<u64, String> {
    match std::env::var("DESIGNCRAFT_WORK_BUDGET") {
        Ok(raw) => {
            let exp: u32 = raw.parse().map_err(|_| {
                format!("DESIGNCRAFT_WORK_BUDGET must be a decimal exponent, got `{raw}`")
            })?;
            if exp >= 64 {
                return Err("DESIGNCRAFT_WORK_BUDGET exponent must be below 64".into());
            }
            Ok(1u64 << exp)
        }
        Err(_) => Ok(VerifyOptions::default().design_work_budget),
    }
}

fn cmd_code_build(args: BuildArgs) -> i32 {
    let code = match (args.variant, args.delta) {
        (Some(_), Some(_)) => {
            eprintln!("error: --variant and --delta are mutually exclusive");
            return 2;
        }
        (Some(variant), None) => {
            let variant = match variant {
                Variant::Bch0 => CmVariant::Bch0,
                Variant::DualNarrow7 => CmVariant::DualNarrow7,
            };
            BinaryField::new(args.m).and_then(|f| build_c_m(args.m, variant, &f))
        }
        (None, Some(delta)) => {
            let spec = BchSpec { m: args.m, delta, offset: args.offset.unwrap_or(0) };
            BinaryField::new(args.m).and_then(|f| {
                let g = bch_generator(&spec, &f)?;
                cyclic_code(spec.n() as usize, &g)
            })
        }
        (None, None) => {
            eprintln!("error: provide --variant or --delta");
            return 2;
        }
    };
    match code {
        Ok(code) => {
            if let Err(e) = code.write_to(&args.out) {
                return fail(e);
            }
            println!("[{},{}]", code.n(), code.k());
            0
        }
        Err(e) => fail(e),
    }
}

fn cmd_wdist(args: WdistArgs) -> i32 {
    let budget = match enum_budget_log2() {
        Ok(b) => b,
        Err(msg) => {
            eprintln!("error: {msg}");
            return 2;
        }
    };
    let result = match args.method {
        Method::Enum => {
            let Some(path) = args.code else {
                eprintln!("error: --method enum requires --code");
                return 2;
            };
            LinearCode::read_from(&path).and_then(|c| weight_distribution_with_budget(&c, budget))
        }
        Method::Macwilliams => {
            let Some(path) = args.code else {
                eprintln!("error: --method macwilliams requires --code");
                return 2;
            };
            let Some(kappa) = args.dim_dual else {
                eprintln!("error: the transform needs kappa: provide --dim-dual");
                return 2;
            };
            LinearCode::read_from(&path)
                .and_then(|c| weight_distribution_with_budget(&c, budget))
                .and_then(|wd| macwilliams(&wd, kappa, 2))
        }
        Method::ClosedForm => {
            let (Some(m), Some(family)) = (args.m, args.family) else {
                eprintln!("error: --method closed-form requires --family and --m");
                return 2;
            };
            match family {
                Family::Table1 => five_weight_distribution(m),
                Family::Dual => dual_closed_form(m),
                Family::ExtendedDual => extended_dual_closed_form(m),
                Family::DoubleDual => double_dual_closed_form(m),
            }
        }
    };
    match result {
        Ok(wd) => {
            print!("{}", wd.render_csv());
            0
        }
        Err(e) => fail(e),
    }
}

fn cmd_designs(action: DesignsAction) -> i32 {
    match action {
        DesignsAction::Extract { code, weight, out } => {
            let budget = match enum_budget_log2() {
                Ok(b) => b,
                Err(msg) => {
                    eprintln!("error: {msg}");
                    return 2;
                }
            };
            let design = LinearCode::read_from(&code).and_then(|c| {
                designcraft::supports_to_design_with_budget(&c, weight, budget)
            });
            match design {
                Ok(design) => {
                    if let Err(e) = design.write_to(&out) {
                        return fail(e);
                    }
                    println!("v={} k={} blocks={}", design.v(), design.block_size(), design.block_count());
                    0
                }
                Err(e) => fail(e),
            }
        }
        DesignsAction::Verify { blocks, t } => {
            if t == 0 {
                eprintln!("error: t must be positive");
                return 2;
            }
            match Design::read_from(&blocks).and_then(|d| verify_t_design(&d, t)) {
                Ok(outcome) => match outcome.lambda {
                    Some(lambda) => {
                        println!("lambda={lambda}");
                        0
                    }
                    None => {
                        println!("NOT A {t}-DESIGN (min={}, max={})", outcome.min, outcome.max);
                        5
                    }
                },
                Err(e) => fail(e),
            }
        }
    }
}

fn cmd_paper_verify(m: u32, level: CliLevel, json: Option<PathBuf>) -> i32 {
    let (enum_budget, work) = match (enum_budget_log2(), work_budget()) {
        (Ok(b), Ok(w)) => (b, w),
        (Err(msg), _) | (_, Err(msg)) => {
            eprintln!("error: {msg}");
            return 2;
        }
    };
    let level = match level {
        CliLevel::Formulas => Level::Formulas,
        CliLevel::Full => Level::Full,
    };
    let opts = VerifyOptions { enum_budget_log2: enum_budget, design_work_budget: work };
    match verify_family(m, level, &opts) {
        Ok(report) => {
            let stamp = SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_secs()).unwrap_or(0);
            println!("generated-at: {stamp}");
            print!("{}", report.render_text());
            if let Some(path) = json {
                if let Err(e) = std::fs::write(&path, report.to_json_string()) {
                    return fail(e.into());
                }
            }
            if report.has_regressions() {
                1
            } else {
                0
            }
        }
        Err(e) => fail(e),
    }
}

fn main() {
    let cli = Cli::parse();
    if let Some(threads) = cli.threads {
        if let Err(e) =
            rayon::ThreadPoolBuilder::new().num_threads(threads).build_global()
        {
            eprintln!("error: could not configure thread pool: {e}");
            std::process::exit(2);
        }
    }
    let code = match cli.command {
        Command::Code { action: CodeAction::Build(args) } => cmd_code_build(args),
        Command::Wdist(args) => cmd_wdist(args),
        Command::Designs { action } => cmd_designs(action),
        Command::Paper { action: PaperAction::Verify { m, level, json } } => {
            cmd_paper_verify(m, level, json)
        }
    };
    std::process::exit(code);
}
