//! `hyperlab` command-line front end.
//!
//! Exit codes: 0 when the verdict holds or every check passes, 1 when a
//! counterexample is found, 2 on bad input.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use hyperlab::classifiers::{
    is_alpha_beta_with, is_in_invq_closed, is_ordinary, is_threshold, is_upper_half, level_criterion, level_thresholds,
    LevelRange,
};
use hyperlab::hyperstructure::{
    enumerate_hyperideals, is_hyperideal, ElementSet, IdealViolation, KrasnerHyperring, StructureFile,
    ValidationOptions, DEFAULT_SUBSET_CAP,
};
use hyperlab::implication::{is_fuzzifying, is_t_implication_based};
use hyperlab::oracle::catalog::{by_name, catalog, Entry};
use hyperlab::oracle::corpus::{gen_fuzzy, Corpus, DEFAULT_Q};
use hyperlab::oracle::theorems::{parse_selection, run_theorem, TheoremResult};
use hyperlab::{
    AlphaBeta, ClassReport, Error, ImplicationOperator, IntervalValue, IVFuzzySet, PointRelation, QuasiConvention,
    Semantics, ThresholdDomain, ThresholdPair, Variant,
};

#[derive(Parser)]
#[command(name = "hyperlab", version, about = "Exact checks for interval-valued fuzzy hyperideals of finite Krasner (m,n)-hyperrings")]
struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the Krasner (m,n)-hyperring axioms.
    Validate {
        /// Structure file, or a catalog name such as paper_24 or zmod(4,2,4).
        structure: String,
        /// Skip the commutativity check on f.
        #[arg(long)]
        allow_noncommutative: bool,
    },
    /// List every hyperideal.
    Ideals {
        structure: String,
        /// Largest carrier for exhaustive subset search.
        #[arg(long, default_value_t = DEFAULT_SUBSET_CAP)]
        cap: usize,
        /// Fall back to closure generation above the cap.
        #[arg(long)]
        closure: bool,
    },
    /// Decide whether a fuzzy set is a fuzzy hyperideal of some kind.
    Classify(ClassifyArgs),
    /// Tabulate level sets and check which are hyperideals.
    Levels {
        structure: String,
        fuzzy: PathBuf,
        #[arg(long, value_enum, default_value_t = RangeArg::Full)]
        range: RangeArg,
        /// Lower threshold for a custom range, as p/q,r/s.
        #[arg(long, requires = "s2")]
        s1: Option<IntervalValue>,
        /// Upper threshold for a custom range, as p/q,r/s.
        #[arg(long, requires = "s1")]
        s2: Option<IntervalValue>,
    },
    /// Replay the theorem suite over the catalog and a random corpus.
    Verify {
        /// Comma-separated theorem ids (T1..T9, CF, QE) or "all".
        #[arg(long, default_value = "all")]
        theorems: String,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 500)]
        count: usize,
        /// Grid denominator of corpus values.
        #[arg(long, default_value_t = DEFAULT_Q)]
        q: i64,
        #[arg(long)]
        chain_only: bool,
        #[arg(long, default_value = "corrected")]
        variant: Variant,
        /// Comma-separated catalog names; defaults to the whole catalog.
        #[arg(long)]
        structures: Option<String>,
    },
    /// Generate random fuzzy sets for a structure.
    Gen {
        structure: String,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 10)]
        count: usize,
        #[arg(long, default_value_t = DEFAULT_Q)]
        q: i64,
        #[arg(long)]
        chain_only: bool,
        /// Write one file per set here instead of printing them.
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
}

#[derive(Args)]
struct ClassifyArgs {
    structure: String,
    fuzzy: PathBuf,
    #[arg(long, value_enum)]
    kind: Kind,
    /// Hypothesis relation for --kind alphabeta.
    #[arg(long, default_value = "in")]
    alpha: PointRelation,
    /// Conclusion relation for --kind alphabeta.
    #[arg(long, default_value = "invq")]
    beta: PointRelation,
    /// Lower threshold for --kind threshold.
    #[arg(long)]
    s1: Option<IntervalValue>,
    /// Upper threshold for --kind threshold.
    #[arg(long)]
    s2: Option<IntervalValue>,
    /// Operator for --kind implication: Im, Ia, Ig, Icg, Igr, Ib or Igg.
    #[arg(long)]
    op: Option<ImplicationOperator>,
    /// Truth threshold for --kind implication.
    #[arg(long, default_value = "1/2,1/2")]
    t: IntervalValue,
    #[arg(long, default_value = "corrected")]
    variant: Variant,
    #[arg(long, value_enum, default_value_t = DomainArg::HalfComparable)]
    domain: DomainArg,
    #[arg(long, value_enum, default_value_t = ConventionArg::Paper)]
    convention: ConventionArg,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Ordinary,
    Alphabeta,
    Invq,
    Threshold,
    Upper,
    Implication,
    Fuzzifying,
}

#[derive(Clone, Copy, ValueEnum)]
enum DomainArg {
    HalfComparable,
    Interval,
}

#[derive(Clone, Copy, ValueEnum)]
enum ConventionArg {
    Paper,
    BothStrict,
}

#[derive(Clone, Copy, ValueEnum)]
enum RangeArg {
    Lower,
    Upper,
    Full,
}

/// An input problem; reported on stderr with exit code 2.
struct InputError(String);

impl From<Error> for InputError {
    fn from(e: Error) -> Self {
        InputError(e.to_string())
    }
}

impl From<std::io::Error> for InputError {
    fn from(e: std::io::Error) -> Self {
        InputError(e.to_string())
    }
}

type CliResult = Result<ExitCode, InputError>;

fn verdict(ok: bool) -> ExitCode {
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn print_json<T: Serialize>(value: &T) {
    println!("{}", serde_json::to_string_pretty(value).expect("reports serialize"));
}

/// A file path, or a catalog name when no such file exists.
fn load_unvalidated(spec: &str) -> Result<KrasnerHyperring, InputError> {
    let path = Path::new(spec);
    if path.exists() {
        return Ok(StructureFile::load(path)?.build()?);
    }
    by_name(spec).map_err(|_| InputError(format!("{spec}: no such file or catalog structure")))
}

fn load_validated(spec: &str) -> Result<KrasnerHyperring, InputError> {
    let r = load_unvalidated(spec)?;
    if r.is_validated() {
        return Ok(r);
    }
    let report = r.validate()?;
    if !report.all_hold() {
        return Err(InputError(format!("{spec} is not a Krasner hyperring: {}", report.summary())));
    }
    Ok(r.validated()?)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(InputError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> CliResult {
    match &cli.command {
        Command::Validate { structure, allow_noncommutative } => validate(cli.json, structure, *allow_noncommutative),
        Command::Ideals { structure, cap, closure } => ideals(cli.json, structure, *cap, *closure),
        Command::Classify(args) => classify(cli.json, args),
        Command::Levels { structure, fuzzy, range, s1, s2 } => {
            let range = match (s1, s2) {
                (Some(s1), Some(s2)) => LevelRange::Custom(ThresholdPair::new(*s1, *s2)?),
                _ => match range {
                    RangeArg::Lower => LevelRange::Lower,
                    RangeArg::Upper => LevelRange::Upper,
                    RangeArg::Full => LevelRange::Full,
                },
            };
            levels(cli.json, structure, fuzzy, range)
        }
        Command::Verify { theorems, seed, count, q, chain_only, variant, structures } => {
            let corpus = Corpus::new(*seed, *q, *count, *chain_only)?;
            verify(cli.json, theorems, &corpus, *variant, structures.as_deref())
        }
        Command::Gen { structure, seed, count, q, chain_only, out_dir } => {
            let corpus = Corpus::new(*seed, *q, *count, *chain_only)?;
            gen(cli.json, structure, &corpus, out_dir.as_deref())
        }
    }
}

fn validate(json: bool, spec: &str, allow_noncommutative: bool) -> CliResult {
    let r = load_unvalidated(spec)?;
    let opts = ValidationOptions { require_commutative: !allow_noncommutative, ..ValidationOptions::default() };
    let report = r.validate_with(&opts)?;
    if json {
        print_json(&report);
    } else {
        for (name, check) in report.checks() {
            if check.holds {
                println!("ok    {name}");
            } else {
                let tuple = check.counterexample.as_ref().map(|t| format!(" at {t:?}")).unwrap_or_default();
                println!("FAIL  {name}{tuple}: {}", check.detail.as_deref().unwrap_or(""));
            }
        }
        println!("{}", report.summary());
    }
    Ok(verdict(report.all_hold()))
}

fn ideals(json: bool, spec: &str, cap: usize, closure: bool) -> CliResult {
    let r = load_validated(spec)?;
    let found = enumerate_hyperideals(&r, cap, closure)?;
    if json {
        print_json(&found);
    } else {
        for s in &found.ideals {
            println!("{s}");
        }
        let how = if found.exhaustive { "exhaustive search" } else { "closure generation" };
        println!("{} hyperideals ({how})", found.ideals.len());
    }
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct ClassifyOutput {
    kind: String,
    #[serde(flatten)]
    report: ClassReport,
}

fn classify(json: bool, args: &ClassifyArgs) -> CliResult {
    let r = load_validated(&args.structure)?;
    let a = IVFuzzySet::load(&args.fuzzy)?;
    a.require_size(r.size())?;
    let (kind, report) = match args.kind {
        Kind::Ordinary => ("ordinary".to_string(), is_ordinary(&r, &a)?),
        Kind::Alphabeta => {
            let ab = AlphaBeta::new(args.alpha, args.beta)?;
            let sem = Semantics {
                domain: match args.domain {
                    DomainArg::HalfComparable => ThresholdDomain::HalfComparable,
                    DomainArg::Interval => ThresholdDomain::Interval,
                },
                convention: match args.convention {
                    ConventionArg::Paper => QuasiConvention::Paper,
                    ConventionArg::BothStrict => QuasiConvention::BothStrict,
                },
            };
            (format!("{ab}"), is_alpha_beta_with(&r, &a, ab, &sem)?)
        }
        Kind::Invq => (format!("(∈,∈∨q) closed form, {}", args.variant), is_in_invq_closed(&r, &a, args.variant)?),
        Kind::Threshold => {
            let (s1, s2) = match (args.s1, args.s2) {
                (Some(s1), Some(s2)) => (s1, s2),
                _ => return Err(InputError("--kind threshold needs --s1 and --s2".into())),
            };
            let th = ThresholdPair::new(s1, s2)?;
            (format!("thresholds ({s1}, {s2}), {}", args.variant), is_threshold(&r, &a, &th, args.variant)?)
        }
        Kind::Upper => ("upper-half rmax conditions".to_string(), is_upper_half(&r, &a)?),
        Kind::Implication => {
            let op = args.op.ok_or_else(|| InputError("--kind implication needs --op".into()))?;
            (format!("{}-implication-based, {op}", args.t), is_t_implication_based(&r, &a, op, &args.t)?)
        }
        Kind::Fuzzifying => ("fuzzifying".to_string(), is_fuzzifying(&r, &a)?),
    };
    if json {
        print_json(&ClassifyOutput { kind, report: report.clone() });
    } else {
        println!("{kind}: {report}");
    }
    Ok(verdict(report.verdict))
}

#[derive(Serialize)]
struct LevelRow {
    threshold: IntervalValue,
    set: ElementSet,
    hyperideal: bool,
    violation: Option<IdealViolation>,
}

#[derive(Serialize)]
struct LevelsOutput {
    range: LevelRange,
    levels: Vec<LevelRow>,
    #[serde(flatten)]
    report: ClassReport,
}

fn levels(json: bool, spec: &str, fuzzy: &Path, range: LevelRange) -> CliResult {
    let r = load_validated(spec)?;
    let a = IVFuzzySet::load(fuzzy)?;
    a.require_size(r.size())?;
    let mut rows: Vec<LevelRow> = Vec::new();
    for s in level_thresholds(&a, &range) {
        let set = a.level_set(&s);
        if set.is_empty() || rows.iter().any(|row| row.set == set) {
            continue;
        }
        let violation = is_hyperideal(&r, set)?;
        rows.push(LevelRow { threshold: s, set, hyperideal: violation.is_none(), violation });
    }
    let report = level_criterion(&r, &a, &range)?;
    if json {
        print_json(&LevelsOutput { range, levels: rows, report: report.clone() });
    } else {
        for row in &rows {
            let status = match &row.violation {
                None => "hyperideal".to_string(),
                Some(v) => format!("not a hyperideal: {v}"),
            };
            println!("{:<14} first at {:<16} {status}", row.set.to_string(), row.threshold.to_string());
        }
        println!("level criterion: {report}");
    }
    Ok(verdict(report.verdict))
}

fn select_entries(names: Option<&str>) -> Result<Vec<Entry>, InputError> {
    match names {
        None => Ok(catalog()?),
        Some(list) => list
            .split(';')
            .flat_map(|chunk| split_names(chunk))
            .map(|name| Ok(Entry { structure: by_name(&name)?, name }))
            .collect(),
    }
}

/// Splits on commas outside parentheses, so `paper_24,zmod(4,2,4)` works.
fn split_names(list: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut depth = 0;
    let mut cur = String::new();
    for c in list.chars() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push(std::mem::take(&mut cur));
                continue;
            }
            _ => {}
        }
        cur.push(c);
    }
    out.push(cur);
    out.into_iter().map(|s| s.trim().to_string()).filter(|s| !s.is_empty()).collect()
}

fn verify(json: bool, theorems: &str, corpus: &Corpus, variant: Variant, structures: Option<&str>) -> CliResult {
    let ids = parse_selection(theorems)?;
    let entries = select_entries(structures)?;
    let mut all_pass = true;
    for id in &ids {
        let res: TheoremResult = run_theorem(id, &entries, corpus, variant)?;
        all_pass &= res.passed();
        if json {
            println!("{}", serde_json::to_string(&res).expect("reports serialize"));
        } else {
            println!("{res}");
        }
    }
    Ok(verdict(all_pass))
}

fn gen(json: bool, spec: &str, corpus: &Corpus, out_dir: Option<&Path>) -> CliResult {
    let r = load_validated(spec)?;
    let sets = gen_fuzzy(&r, corpus)?;
    match out_dir {
        None => {
            let files: Vec<_> = sets.iter().map(|a| a.to_file()).collect();
            if json {
                print_json(&files);
            } else {
                for (i, a) in sets.iter().enumerate() {
                    println!("{i:>4}  {a}");
                }
            }
        }
        Some(dir) => {
            std::fs::create_dir_all(dir)?;
            let width = sets.len().saturating_sub(1).to_string().len().max(3);
            for (i, a) in sets.iter().enumerate() {
                let path = dir.join(format!("fuzzy_{i:0width$}.json"));
                std::fs::write(&path, a.to_json())?;
                if !json {
                    println!("{}", path.display());
                }
            }
            if json {
                let paths: Vec<String> =
                    (0..sets.len()).map(|i| dir.join(format!("fuzzy_{i:0width$}.json")).display().to_string()).collect();
                print_json(&paths);
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}
