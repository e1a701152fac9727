use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use c4_blowup::count::{self, with_workers, CountResult, DEFAULT_SUBSET_CAP};
use c4_blowup::formulas::{Family, FormulaVariant};
use c4_blowup::graph::{nested_blowup, BaseGraph, BlowupSpec, Graph, DEFAULT_VERTEX_CAP};
use c4_blowup::tables::{self, Table};
use c4_blowup::verify::{
    run_verify, FamilyChoice, MethodChoice, OutputFormat, RunConfig, DEFAULT_DIAGONAL_CAP,
};
use c4_blowup::{read_edge_list, write_edge_list, CountError};
use clap::{Args, Parser, Subcommand, ValueEnum};

/// Nested blow-up graphs of C4 and Θ(2,2,2): construction, induced 4-cycle
/// counting and exact formula verification.
#[derive(Parser)]
#[command(name = "c4-blowup", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write the level-N nested blow-up as an edge list.
    Generate {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Count induced 4-cycles in a generated or loaded graph.
    Count {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value_t = MethodArg::Both)]
        method: MethodArg,
        #[arg(long, default_value_t = DEFAULT_SUBSET_CAP)]
        subset_cap: u128,
        #[arg(long, default_value_t = 0)]
        workers: usize,
        #[arg(long, value_enum, default_value_t = FormatArg::Text)]
        format: FormatArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Tabulate non-edges, recurrence, partial sums and closed forms.
    Formula {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long, default_value_t = 0)]
        min_level: u32,
        #[arg(long, default_value_t = 3)]
        max_level: u32,
        #[arg(long, value_enum, default_value_t = VariantArg::Both)]
        variant: VariantArg,
        #[arg(long, value_enum, default_value_t = FormatArg::Text)]
        format: FormatArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Cross-check graphs, counters and formulas level by level.
    Verify {
        #[arg(long, value_enum)]
        family: FamilyArg,
        /// Base graph edge list (custom family).
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long, default_value_t = 2)]
        max_level: u32,
        #[arg(long, value_enum, default_value_t = MethodArg::Both)]
        method: MethodArg,
        #[arg(long, default_value_t = DEFAULT_VERTEX_CAP)]
        vertex_cap: usize,
        #[arg(long, default_value_t = DEFAULT_SUBSET_CAP)]
        subset_cap: u128,
        /// Largest graph the diagonal counter is run on.
        #[arg(long, default_value_t = DEFAULT_DIAGONAL_CAP)]
        diagonal_cap: usize,
        #[arg(long, default_value_t = 0)]
        workers: usize,
        /// Where to write the JSON report.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = FormatArg::Text)]
        format: FormatArg,
    },
    /// Formula-derived (N, n_N, |E|, m^c_N, T_N) sequence.
    Sequence {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long, default_value_t = 5)]
        max_level: u32,
        #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
        format: FormatArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Which graph to operate on.
#[derive(Args)]
struct Source {
    #[arg(long, value_enum)]
    family: FamilyArg,
    /// Edge list of the base graph (custom family).
    #[arg(long)]
    input: Option<PathBuf>,
    #[arg(long, default_value_t = 0)]
    level: u32,
    #[arg(long, default_value_t = DEFAULT_VERTEX_CAP)]
    vertex_cap: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    C4,
    Theta222,
    Custom,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Enum,
    Diagonal,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    Stated,
    Derived,
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Text,
    Json,
    Csv,
}

impl FamilyArg {
    fn choice(self) -> FamilyChoice {
        match self {
            FamilyArg::C4 => FamilyChoice::C4,
            FamilyArg::Theta222 => FamilyChoice::Theta222,
            FamilyArg::Custom => FamilyChoice::Custom,
        }
    }

    fn formula_family(self) -> Result<Family> {
        match self {
            FamilyArg::C4 => Ok(Family::C4),
            FamilyArg::Theta222 => Ok(Family::Theta222),
            FamilyArg::Custom => bail!("closed formulas exist only for the c4 and theta222 families"),
        }
    }
}

impl MethodArg {
    fn choice(self) -> MethodChoice {
        match self {
            MethodArg::Enum => MethodChoice::Enum,
            MethodArg::Diagonal => MethodChoice::Diagonal,
            MethodArg::Both => MethodChoice::Both,
        }
    }
}

impl FormatArg {
    fn output(self) -> OutputFormat {
        match self {
            FormatArg::Text => OutputFormat::Text,
            FormatArg::Json => OutputFormat::Json,
            FormatArg::Csv => OutputFormat::Csv,
        }
    }
}

fn load_base(family: FamilyArg, input: Option<&Path>) -> Result<BaseGraph> {
    match (family, input) {
        (FamilyArg::Custom, Some(path)) => {
            let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            let g = read_edge_list(&text).with_context(|| format!("parsing {}", path.display()))?;
            Ok(BaseGraph::Custom(g))
        }
        (FamilyArg::Custom, None) => bail!("--family custom needs --input <edge list>"),
        (_, Some(_)) => bail!("--input is only used with --family custom"),
        (FamilyArg::C4, None) => Ok(BaseGraph::C4),
        (FamilyArg::Theta222, None) => Ok(BaseGraph::Theta222),
    }
}

fn build(source: &Source) -> Result<(BaseGraph, Graph)> {
    let base = load_base(source.family, source.input.as_deref())?;
    let spec = BlowupSpec::new(base.clone(), source.level)?;
    let g = nested_blowup(&spec, source.vertex_cap)?;
    Ok((base, g))
}

/// Writes to `out` when given, stdout otherwise.
fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn render(table: &Table, format: FormatArg) -> String {
    match format {
        FormatArg::Text => table.to_text(),
        FormatArg::Csv => table.to_csv(),
        FormatArg::Json => table.to_json() + "\n",
    }
}

fn cmd_generate(source: Source, out: Option<PathBuf>) -> Result<ExitCode> {
    let (base, g) = build(&source)?;
    let summary = format!(
        "{} level {}: {} vertices, {} edges, {} non-edges",
        base.name(),
        source.level,
        g.order(),
        g.edge_count(),
        g.non_edge_count()
    );
    emit(out.as_deref(), &write_edge_list(&g))?;
    if out.is_some() {
        println!("{summary}");
    } else {
        eprintln!("{summary}");
    }
    Ok(ExitCode::SUCCESS)
}

fn count_json(r: &CountResult) -> serde_json::Value {
    serde_json::json!({
        "value": r.value.to_string(),
        "seconds": r.elapsed.as_secs_f64(),
    })
}

fn cmd_count(
    source: Source,
    method: MethodArg,
    subset_cap: u128,
    workers: usize,
    format: FormatArg,
    out: Option<PathBuf>,
) -> Result<ExitCode> {
    let (base, g) = build(&source)?;
    let method = method.choice();
    let (enumeration, diagonal) = with_workers(workers, || -> Result<_> {
        let e = method
            .wants_enum()
            .then(|| count::count_induced_c4_enum(&g, subset_cap))
            .transpose()?;
        let d = method.wants_diagonal().then(|| count::count_induced_c4_diagonal(&g));
        Ok((e, d))
    })?;
    if let (Some(e), Some(d)) = (&enumeration, &diagonal) {
        if e.value != d.value {
            return Err(CountError::Disagreement {
                enumeration: e.value,
                diagonal: d.value,
            }
            .into());
        }
    }
    let value = enumeration.or(diagonal).map(|r| r.value).expect("at least one method");

    let text = match format {
        FormatArg::Json => {
            let mut record = serde_json::json!({
                "family": base.name(),
                "level": source.level,
                "vertices": g.order(),
                "edges": g.edge_count(),
                "induced_c4": value.to_string(),
            });
            if let Some(e) = &enumeration {
                record["enumeration"] = count_json(e);
            }
            if let Some(d) = &diagonal {
                record["diagonal"] = count_json(d);
            }
            if enumeration.is_some() && diagonal.is_some() {
                record["methods_agree"] = true.into();
            }
            serde_json::to_string_pretty(&record)? + "\n"
        }
        _ => {
            let mut s = format!("induced C4: {value}\n");
            for r in enumeration.iter().chain(diagonal.iter()) {
                s.push_str(&format!("  {:?}: {} ({:.3?})\n", r.method, r.value, r.elapsed));
            }
            if enumeration.is_some() && diagonal.is_some() {
                s.push_str("  methods agree\n");
            }
            s
        }
    };
    emit(out.as_deref(), &text)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_formula(
    family: FamilyArg,
    min_level: u32,
    max_level: u32,
    variant: VariantArg,
    format: FormatArg,
    out: Option<PathBuf>,
) -> Result<ExitCode> {
    if min_level > max_level {
        bail!("--min-level {min_level} is above --max-level {max_level}");
    }
    let variants: &[FormulaVariant] = match variant {
        VariantArg::Stated => &[FormulaVariant::StatedTheorem],
        VariantArg::Derived => &[FormulaVariant::DerivedProof],
        VariantArg::Both => &FormulaVariant::ALL,
    };
    let table = tables::formula_table(family.formula_family()?, min_level..=max_level, variants)?;
    emit(out.as_deref(), &render(&table, format))?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_sequence(family: FamilyArg, max_level: u32, format: FormatArg, out: Option<PathBuf>) -> Result<ExitCode> {
    let table = tables::sequence_table(family.formula_family()?, max_level)?;
    emit(out.as_deref(), &render(&table, format))?;
    Ok(ExitCode::SUCCESS)
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Generate { source, out } => cmd_generate(source, out),
        Command::Count {
            source,
            method,
            subset_cap,
            workers,
            format,
            out,
        } => cmd_count(source, method, subset_cap, workers, format, out),
        Command::Formula {
            family,
            min_level,
            max_level,
            variant,
            format,
            out,
        } => cmd_formula(family, min_level, max_level, variant, format, out),
        Command::Sequence {
            family,
            max_level,
            format,
            out,
        } => cmd_sequence(family, max_level, format, out),
        Command::Verify {
            family,
            input,
            max_level,
            method,
            vertex_cap,
            subset_cap,
            diagonal_cap,
            workers,
            out,
            format,
        } => {
            let base = load_base(family, input.as_deref())?;
            let config = RunConfig {
                family: family.choice(),
                input,
                max_level,
                methods: method.choice(),
                vertex_cap,
                subset_cap,
                diagonal_cap,
                workers,
                out: out.clone(),
                format: format.output(),
            };
            let report = run_verify(&base, &config)?;
            if let Some(path) = &out {
                fs::write(path, report.to_json() + "\n")
                    .with_context(|| format!("writing {}", path.display()))?;
            }
            match format {
                FormatArg::Json => println!("{}", report.to_json()),
                _ => print!("{}", report.summary_table()),
            }
            Ok(ExitCode::from(report.exit_code() as u8))
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
