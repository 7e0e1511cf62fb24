//! `ctk`: Zagreb connection indices of graphs and chemical trees.
//!
//! Exit status: 0 on success, 1 when `verify` finds a counterexample, 2 on
//! usage, parse or scale-guard errors.

mod edgelist;

use std::fs::{self, File};
use std::io::{self, BufWriter, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use ctk::extremal::MaxClass;
use ctk::verify::{CheckFamily, MIN_SUITE_ORDER};
use ctk::{
    brute_force_extremal, canonical_tree_code, classify_max_family, closed_form, construct_family,
    enumerate_trees, index_report, run_suite, ClosedForm, Direction, EnumSpec, FamilyKind, Graph,
    Objective, ScaleGuard, SuiteConfig, TreeCode,
};

const SCALE_GUARD_VAR: &str = "CTK_SCALE_GUARD";

#[derive(Parser)]
#[command(
    name = "ctk",
    version,
    about = "Zagreb connection indices of graphs and chemical trees"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print one JSON record of indices per input graph.
    Compute {
        #[arg(long, value_enum, default_value_t = Format::Edgelist)]
        format: Format,
        /// Input file; standard input when omitted.
        file: Option<PathBuf>,
    },
    /// List every tree of order N, one canonical level sequence per line.
    Enumerate {
        #[arg(long)]
        n: usize,
        /// Maximum degree, or "none" for no bound.
        #[arg(long, default_value = "4", value_parser = parse_max_degree)]
        max_degree: MaxDegree,
        /// Ignore the scale guard.
        #[arg(long)]
        force: bool,
        /// Write the sequences here and print the count on stdout.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Optimum of an index over trees of order N, with all witnesses.
    Extremal {
        #[arg(long)]
        n: usize,
        /// Maximum degree, or "none" for no bound.
        #[arg(long, default_value = "4", value_parser = parse_max_degree)]
        max_degree: MaxDegree,
        #[arg(long, value_enum)]
        objective: ObjectiveArg,
        #[arg(long, value_enum)]
        direction: DirectionArg,
        /// Ignore the scale guard.
        #[arg(long)]
        force: bool,
    },
    /// Run the verification suite and print a JSON Lines report.
    Verify {
        #[arg(long)]
        n_max: usize,
        /// Comma-separated check families; all when omitted.
        #[arg(long, value_delimiter = ',', value_parser = parse_check)]
        checks: Vec<CheckFamily>,
        /// Add seeded random connected graphs.
        #[arg(long)]
        random: bool,
        #[arg(long, requires = "random", default_value_t = 0)]
        seed: u64,
    },
    /// Print a representative of a graph family.
    Construct {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Edgelist)]
        format: Format,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Edgelist,
    Levelseq,
}

#[derive(Clone, Copy)]
struct MaxDegree(Option<usize>);

fn parse_max_degree(s: &str) -> Result<MaxDegree, String> {
    if s == "none" {
        return Ok(MaxDegree(None));
    }
    match s.parse::<usize>() {
        Ok(d) if d >= 1 => Ok(MaxDegree(Some(d))),
        _ => Err(format!(
            "expected a positive integer or \"none\", got {s:?}"
        )),
    }
}

fn parse_check(s: &str) -> Result<CheckFamily, String> {
    s.parse().map_err(|_| {
        let names: Vec<&str> = CheckFamily::ALL.iter().map(|c| c.name()).collect();
        format!("unknown check {s:?}; expected one of {}", names.join(", "))
    })
}

#[derive(Clone, Copy, ValueEnum)]
enum ObjectiveArg {
    Zc1star,
    M1,
    M2,
    Zc1,
    Zc2,
}

impl From<ObjectiveArg> for Objective {
    fn from(o: ObjectiveArg) -> Self {
        match o {
            ObjectiveArg::Zc1star => Objective::Zc1Star,
            ObjectiveArg::M1 => Objective::M1,
            ObjectiveArg::M2 => Objective::M2,
            ObjectiveArg::Zc1 => Objective::Zc1,
            ObjectiveArg::Zc2 => Objective::Zc2,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum DirectionArg {
    Min,
    Max,
}

impl From<DirectionArg> for Direction {
    fn from(d: DirectionArg) -> Self {
        match d {
            DirectionArg::Min => Direction::Min,
            DirectionArg::Max => Direction::Max,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Path,
    Star,
    Complete,
    Ct0,
    Ct1,
    Ct2,
}

impl From<FamilyArg> for FamilyKind {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::Path => FamilyKind::Path,
            FamilyArg::Star => FamilyKind::Star,
            FamilyArg::Complete => FamilyKind::Complete,
            FamilyArg::Ct0 => FamilyKind::Ct0,
            FamilyArg::Ct1 => FamilyKind::Ct1,
            FamilyArg::Ct2 => FamilyKind::Ct2,
        }
    }
}

fn scale_guard(force: bool) -> Result<ScaleGuard> {
    if force {
        return Ok(ScaleGuard::disabled());
    }
    match std::env::var(SCALE_GUARD_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map(ScaleGuard::new)
            .map_err(|_| anyhow!("{SCALE_GUARD_VAR} must be a non-negative integer, got {v:?}")),
        Err(std::env::VarError::NotPresent) => Ok(ScaleGuard::default()),
        Err(e) => Err(anyhow!("{SCALE_GUARD_VAR}: {e}")),
    }
}

#[derive(Serialize)]
struct IndexRecord {
    n: usize,
    m: usize,
    code: Option<String>,
    degrees: Vec<usize>,
    connection_numbers: Vec<usize>,
    m1: u64,
    m2: u64,
    zc1star: u64,
    zc1: u64,
    zc2: u64,
    degree_counts: Vec<[usize; 2]>,
    degree_edge_counts: Vec<[usize; 3]>,
    connection_edge_counts: Vec<[usize; 3]>,
    triangle_quadrangle_free: bool,
}

impl IndexRecord {
    fn new(g: &Graph) -> Self {
        let r = index_report(g);
        let code = g.is_tree().then(|| canonical_tree_code(g).ok()).flatten();
        let pairs = |m: &std::collections::BTreeMap<(usize, usize), usize>| {
            m.iter().map(|(&(a, b), &c)| [a, b, c]).collect()
        };
        IndexRecord {
            n: r.n,
            m: r.m,
            code: code.map(|c| c.to_string()),
            degree_counts: r
                .partitions
                .degree_counts
                .iter()
                .map(|(&d, &c)| [d, c])
                .collect(),
            degree_edge_counts: pairs(&r.partitions.degree_edge_counts),
            connection_edge_counts: pairs(&r.partitions.connection_edge_counts),
            degrees: r.degrees,
            connection_numbers: r.connection_numbers,
            m1: r.m1,
            m2: r.m2,
            zc1star: r.zc1_star,
            zc1: r.zc1,
            zc2: r.zc2,
            triangle_quadrangle_free: r.triangle_quadrangle_free,
        }
    }
}

fn read_input(file: Option<&Path>) -> Result<String> {
    match file {
        Some(p) => fs::read_to_string(p).with_context(|| format!("reading {}", p.display())),
        None => {
            let mut text = String::new();
            io::stdin()
                .read_to_string(&mut text)
                .context("reading stdin")?;
            Ok(text)
        }
    }
}

fn parse_level_sequences(text: &str) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let body = line.trim();
        if body.is_empty() || body.starts_with('#') {
            continue;
        }
        let code: TreeCode = body.parse().map_err(|e| anyhow!("line {}: {e}", i + 1))?;
        out.push(code.decode());
    }
    Ok(out)
}

fn compute(format: Format, file: Option<&Path>) -> Result<ExitCode> {
    let text = read_input(file)?;
    // Everything is parsed before anything is printed.
    let graphs = match format {
        Format::Edgelist => edgelist::parse(&text)?.into_iter().collect(),
        Format::Levelseq => parse_level_sequences(&text)?,
    };
    let mut out = BufWriter::new(io::stdout().lock());
    for g in &graphs {
        serde_json::to_writer(&mut out, &IndexRecord::new(g))?;
        writeln!(out)?;
    }
    out.flush()?;
    Ok(ExitCode::SUCCESS)
}

fn enumerate(
    n: usize,
    max_degree: MaxDegree,
    force: bool,
    output: Option<&Path>,
) -> Result<ExitCode> {
    if n == 0 {
        bail!("--n must be at least 1");
    }
    scale_guard(force)?.check(n)?;
    let write_all = |w: &mut dyn Write| -> Result<usize> {
        let mut count = 0;
        for code in enumerate_trees(EnumSpec::new(n, max_degree.0)) {
            writeln!(w, "{code}")?;
            count += 1;
        }
        w.flush()?;
        Ok(count)
    };
    match output {
        Some(path) => {
            let file =
                File::create(path).with_context(|| format!("creating {}", path.display()))?;
            let count = write_all(&mut BufWriter::new(file))?;
            println!("{count}");
        }
        None => {
            let count = write_all(&mut BufWriter::new(io::stdout().lock()))?;
            eprintln!("{count}");
        }
    }
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct ExtremalRecord {
    n: usize,
    max_degree: Option<usize>,
    objective: &'static str,
    direction: &'static str,
    value: u64,
    witnesses: Vec<String>,
    closed_form: Option<u64>,
    agreement: Option<bool>,
}

/// Closed-form optimum of ZC1*, where one is known.
fn known_optimum(
    n: usize,
    max_degree: Option<usize>,
    objective: Objective,
    direction: Direction,
) -> Option<u64> {
    if objective != Objective::Zc1Star {
        return None;
    }
    match direction {
        Direction::Min if max_degree.is_none_or(|d| d >= 2) => {
            closed_form(n, ClosedForm::MinTree).ok()
        }
        Direction::Max if max_degree == Some(4) => closed_form(n, ClosedForm::MaxChemical).ok(),
        _ => None,
    }
}

fn extremal_cmd(
    n: usize,
    max_degree: MaxDegree,
    objective: Objective,
    direction: Direction,
    force: bool,
) -> Result<ExitCode> {
    let result = brute_force_extremal(n, max_degree.0, objective, direction, scale_guard(force)?)?;
    let closed = known_optimum(n, max_degree.0, objective, direction);
    let record = ExtremalRecord {
        n,
        max_degree: max_degree.0,
        objective: objective.name(),
        direction: direction.name(),
        value: result.value,
        witnesses: result.witnesses.iter().map(ToString::to_string).collect(),
        closed_form: closed,
        agreement: closed.map(|c| c == result.value),
    };
    println!("{}", serde_json::to_string(&record)?);
    Ok(ExitCode::SUCCESS)
}

fn verify(n_max: usize, checks: Vec<CheckFamily>, random: bool, seed: u64) -> Result<ExitCode> {
    if n_max < MIN_SUITE_ORDER {
        bail!("--n-max must be at least {MIN_SUITE_ORDER}, got {n_max}");
    }
    let mut config = SuiteConfig::new(n_max);
    if !checks.is_empty() {
        config = config.with_checks(checks);
    }
    if random {
        config = config.with_random(seed);
    }
    config.guard = scale_guard(false)?;
    let report = run_suite(&config)?;

    let mut out = BufWriter::new(io::stdout().lock());
    for record in &report.records {
        serde_json::to_writer(&mut out, record)?;
        writeln!(out)?;
    }
    #[derive(Serialize)]
    struct Summary {
        summary: ctk::verify::Totals,
        passed: bool,
    }
    let summary = Summary {
        summary: report.totals(),
        passed: report.passed(),
    };
    serde_json::to_writer(&mut out, &summary)?;
    writeln!(out)?;
    out.flush()?;
    Ok(if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn construct(kind: FamilyKind, n: usize, format: Format) -> Result<ExitCode> {
    let g = construct_family(kind, n)?;
    let expected = match kind {
        FamilyKind::Ct0 => Some(MaxClass::Ct0),
        FamilyKind::Ct1 => Some(MaxClass::Ct1),
        FamilyKind::Ct2 => Some(MaxClass::Ct2),
        _ => None,
    };
    if expected.is_some() {
        let found = classify_max_family(&g)?;
        if found != expected {
            bail!("{kind} representative on {n} vertices classified as {found:?}");
        }
    }
    let text = match format {
        Format::Edgelist => edgelist::serialize(&g),
        Format::Levelseq => {
            if !g.is_tree() {
                bail!("{kind} on {n} vertices is not a tree; no level sequence");
            }
            format!("{}\n", canonical_tree_code(&g)?)
        }
    };
    io::stdout().write_all(text.as_bytes())?;
    Ok(ExitCode::SUCCESS)
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Compute { format, file } => compute(format, file.as_deref()),
        Command::Enumerate {
            n,
            max_degree,
            force,
            output,
        } => enumerate(n, max_degree, force, output.as_deref()),
        Command::Extremal {
            n,
            max_degree,
            objective,
            direction,
            force,
        } => extremal_cmd(n, max_degree, objective.into(), direction.into(), force),
        Command::Verify {
            n_max,
            checks,
            random,
            seed,
        } => verify(n_max, checks, random, seed),
        Command::Construct { family, n, format } => construct(family.into(), n, format),
    }
}

fn main() -> ExitCode {
    // clap exits with status 2 on usage errors.
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
