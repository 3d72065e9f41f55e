mod presets;

use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use euler_clusters::clusters::{
    cluster_polynomial, generalized_cluster_polynomial, GenClusterKind,
};
use euler_clusters::combi::{ColumnRelation, DiagramShape, Pattern, PatternSet};
use euler_clusters::egf::{gf_closed, BlockSource, EgfSeries};
use euler_clusters::families::{self, FamilyId, PolyKind};
use euler_clusters::oracle::distribution_polynomial;
use euler_clusters::poset::{le_chain_formula, le_end_formula};

/// Consecutive block patterns in column-increasing fillings: enumeration,
/// cluster polynomials, and exact generating series.
#[derive(Parser)]
#[command(name = "euler-clusters", version)]
struct Cli {
    /// Most cells direct enumeration will fill
    #[arg(long, global = true, env = "EULER_CLUSTERS_CAP_CELLS", default_value_t = 16)]
    cap_cells: usize,

    /// Most cells a linear-extension poset may have
    #[arg(long, global = true, env = "EULER_CLUSTERS_CAP_POSET", default_value_t = 24)]
    cap_poset: usize,

    /// Worker threads (0 = one per core)
    #[arg(long, global = true, env = "EULER_CLUSTERS_JOBS", default_value_t = 0)]
    jobs: usize,

    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Distribution of pattern matches over the restricted fillings of one shape
    Dist(DistArgs),
    /// Cluster and generalized cluster polynomials
    Cluster(ClusterArgs),
    /// Closed-form polynomials of the built-in pattern families
    Family(FamilyArgs),
    /// Generating-series coefficients from the quotient formulas
    Series(SeriesArgs),
    /// Linear-extension counts of block-chain posets
    Le(LeArgs),
    /// Built-in tables, checkable against committed reference output
    Table(TableArgs),
    /// Validate and print a pattern, or list the built-in shorthands
    Patterns(PatternsArgs),
}

#[derive(Args)]
struct DistArgs {
    /// Shape `i,j,k`: prefix height, suffix height, body column height
    #[arg(long)]
    shape: String,
    /// Number of body columns
    #[arg(long)]
    n: usize,
    /// euler | universal | rows | bottom
    #[arg(long, default_value = "euler")]
    relation: String,
    /// Pattern file, shorthand, digit word, or word:height; repeat for joint variables
    #[arg(long = "pattern", required = true)]
    patterns: Vec<String>,
    /// Enumerate the restricted fillings directly
    #[arg(long)]
    oracle: bool,
    /// Evaluate the quotient formula (the default)
    #[arg(long, conflicts_with = "oracle")]
    theorem: bool,
}

#[derive(Args)]
struct ClusterArgs {
    /// c | gc | gsc | gec | gsec
    #[arg(long, default_value = "c")]
    kind: String,
    /// Body column height
    #[arg(long)]
    k: usize,
    /// Number of body columns
    #[arg(long)]
    n: usize,
    /// euler | universal | rows | bottom (generalized kinds only)
    #[arg(long, default_value = "euler")]
    relation: String,
    /// Pattern file, shorthand, digit word, or word:height; repeat for joint variables
    #[arg(long = "pattern", required = true)]
    patterns: Vec<String>,
    /// Prefix anchor height (gsc, gsec)
    #[arg(long, default_value_t = 1)]
    prefix: usize,
    /// Suffix anchor height (gec, gsec)
    #[arg(long, default_value_t = 1)]
    suffix: usize,
}

#[derive(Args)]
struct FamilyArgs {
    /// a_k3:K | du162534 | gt124356 | pkm:K,M | joint-ud
    #[arg(long)]
    id: String,
    /// c | gc | gsc | gec | gsec
    #[arg(long, default_value = "c")]
    kind: String,
    /// Number of body columns
    #[arg(long)]
    n: usize,
}

#[derive(Args)]
struct SeriesArgs {
    /// Shape `i,j,k`; repeat to sum the series of several shapes
    #[arg(long = "shape", required = true)]
    shapes: Vec<String>,
    /// Highest power of t computed
    #[arg(long, env = "EULER_CLUSTERS_ORDER", default_value_t = 12)]
    order: usize,
    /// engine | family
    #[arg(long, default_value = "engine")]
    source: String,
    /// Patterns for --source engine
    #[arg(long = "pattern")]
    patterns: Vec<String>,
    /// euler | universal | rows | bottom (--source engine)
    #[arg(long, default_value = "euler")]
    relation: String,
    /// Family id for --source family
    #[arg(long)]
    family: Option<String>,
}

#[derive(Args)]
struct LeArgs {
    /// Comma-separated block sizes, leftmost block first
    #[arg(long)]
    blocks: String,
    /// Chain the final block in as well
    #[arg(long)]
    end: bool,
}

#[derive(Args)]
struct TableArgs {
    /// Preset name; `patterns` lists shorthands, errors list preset names
    #[arg(long)]
    preset: String,
    /// Compare against the committed reference output
    #[arg(long)]
    check: bool,
    /// human | csv
    #[arg(long, default_value = "human", value_parser = ["human", "csv"])]
    format: String,
}

#[derive(Args)]
struct PatternsArgs {
    /// Pattern file, shorthand, digit word, or word:height; omit to list built-ins
    pattern: Option<String>,
}

fn main() {
    let cli = Cli::parse();
    if cli.jobs > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(cli.jobs)
            .build_global()
            .ok();
    }
    if let Err(e) = run(&cli) {
        eprintln!("error: {e:#}");
        std::process::exit(1);
    }
}

fn run(cli: &Cli) -> Result<()> {
    match &cli.cmd {
        Cmd::Dist(a) => dist(cli, a),
        Cmd::Cluster(a) => cluster(cli, a),
        Cmd::Family(a) => family(a),
        Cmd::Series(a) => series(cli, a),
        Cmd::Le(a) => le(a),
        Cmd::Table(a) => table(cli, a),
        Cmd::Patterns(a) => patterns(a),
    }
}

fn dist(cli: &Cli, a: &DistArgs) -> Result<()> {
    let (i, j, k) = parse_shape(&a.shape)?;
    let rel = ColumnRelation::parse(&a.relation)?;
    let gs = pattern_sets(&a.patterns)?;
    let poly = if a.oracle {
        let shape = DiagramShape::new(i, k, a.n, j)?;
        distribution_polynomial(shape, rel, &gs, cli.cap_cells)?
    } else {
        let m = i + k * a.n + j;
        let src = BlockSource::Engine { k, gs: &gs, rel };
        gf_closed(i, j, m, &src, cli.cap_poset)?.coefficient_at(m).clone()
    };
    println!("{poly}");
    Ok(())
}

fn cluster(cli: &Cli, a: &ClusterArgs) -> Result<()> {
    let gs = pattern_sets(&a.patterns)?;
    let rel = ColumnRelation::parse(&a.relation)?;
    let kind = PolyKind::parse(&a.kind)?;
    let poly = match kind {
        PolyKind::Cluster => cluster_polynomial(a.k, a.n, &gs, cli.cap_poset)?,
        _ => {
            let (gk, p, s) = match kind {
                PolyKind::Free => (GenClusterKind::Free, 0, 0),
                PolyKind::PrefixAnchored => (GenClusterKind::PrefixAnchored, a.prefix, 0),
                PolyKind::SuffixAnchored => (GenClusterKind::SuffixAnchored, 0, a.suffix),
                PolyKind::BothAnchored => (GenClusterKind::BothAnchored, a.prefix, a.suffix),
                PolyKind::Cluster => unreachable!(),
            };
            generalized_cluster_polynomial(gk, p, s, a.k, a.n, &gs, rel, cli.cap_poset)?
        }
    };
    println!("{poly}");
    Ok(())
}

fn family(a: &FamilyArgs) -> Result<()> {
    let id = FamilyId::parse(&a.id)?;
    let kind = PolyKind::parse(&a.kind)?;
    println!("{}", families::family_poly(id, kind, a.n)?);
    Ok(())
}

fn series(cli: &Cli, a: &SeriesArgs) -> Result<()> {
    let shapes: Vec<(usize, usize, usize)> =
        a.shapes.iter().map(|s| parse_shape(s)).collect::<Result<_>>()?;
    let k = shapes[0].2;
    if shapes.iter().any(|&(_, _, k2)| k2 != k) {
        bail!("all shapes must share one body height");
    }
    let total = match a.source.as_str() {
        "engine" => {
            if a.patterns.is_empty() {
                bail!("--source engine needs at least one --pattern");
            }
            let gs = pattern_sets(&a.patterns)?;
            let rel = ColumnRelation::parse(&a.relation)?;
            let src = BlockSource::Engine { k, gs: &gs, rel };
            sum_series(&shapes, a.order, &src, cli.cap_poset)?
        }
        "family" => {
            let id = a.family.as_deref().context("--source family needs --family")?;
            let id = FamilyId::parse(id)?;
            if id.body_height() != k {
                bail!("family body height {} but shapes have height {k}", id.body_height());
            }
            sum_series(&shapes, a.order, &BlockSource::Family(id), cli.cap_poset)?
        }
        other => bail!("unknown source `{other}` (engine or family)"),
    };
    for m in 0..=a.order {
        println!("{m}: {}", total.coefficient_at(m));
    }
    Ok(())
}

fn sum_series(
    shapes: &[(usize, usize, usize)],
    order: usize,
    src: &BlockSource,
    cap: usize,
) -> Result<EgfSeries> {
    let mut acc: Option<EgfSeries> = None;
    for &(i, j, _) in shapes {
        let s = gf_closed(i, j, order, src, cap)?;
        acc = Some(match acc {
            Some(a) => a.add(&s),
            None => s,
        });
    }
    Ok(acc.expect("at least one shape"))
}

fn le(a: &LeArgs) -> Result<()> {
    let blocks: Vec<usize> = a
        .blocks
        .split(',')
        .map(|t| t.trim().parse().context("block sizes must be positive integers"))
        .collect::<Result<_>>()?;
    let count = if a.end { le_end_formula(&blocks)? } else { le_chain_formula(&blocks)? };
    println!("{count}");
    Ok(())
}

fn table(cli: &Cli, a: &TableArgs) -> Result<()> {
    let rows = presets::compute(&a.preset, cli.cap_poset)?;
    for (label, poly) in &rows {
        match a.format.as_str() {
            "csv" => println!("{label},{poly}"),
            _ => println!("{poly}"),
        }
    }
    if a.check {
        let golden = presets::golden(&a.preset)
            .with_context(|| format!("preset `{}` has no reference output", a.preset))?;
        let text: String = rows.iter().map(|(_, p)| format!("{p}\n")).collect();
        if text != golden {
            bail!("preset `{}` diverges from its reference output", a.preset);
        }
    }
    Ok(())
}

fn patterns(a: &PatternsArgs) -> Result<()> {
    match &a.pattern {
        Some(s) => {
            let p = resolve_pattern(s)?;
            println!("height {}", p.k());
            println!("width {}", p.width());
            println!("word {}", word_of(&p));
            if p.width() == 2 {
                let unique = families::unique_cluster_check(&p)?;
                println!("overlaps-uniquely {}", if unique { "yes" } else { "no" });
            }
            println!("{p}");
        }
        None => {
            for (name, p) in builtins() {
                println!("{name}\theight {}\twidth {}\tword {}", p.k(), p.width(), word_of(&p));
            }
        }
    }
    Ok(())
}

fn word_of(p: &Pattern) -> String {
    let entries: Vec<String> =
        p.columns().iter().flatten().map(|v| v.to_string()).collect();
    entries.join(" ")
}

fn parse_shape(s: &str) -> Result<(usize, usize, usize)> {
    let parts: Vec<usize> = s
        .split(',')
        .map(|t| t.trim().parse().context("shape components must be integers"))
        .collect::<Result<_>>()?;
    let [i, j, k] = parts[..] else {
        bail!("shape must be `i,j,k` (prefix, suffix, body height)");
    };
    Ok((i, j, k))
}

fn pattern_sets(args: &[String]) -> Result<Vec<PatternSet>> {
    args
        .iter()
        .map(|s| Ok(PatternSet::new(vec![resolve_pattern(s)?])?))
        .collect()
}

fn builtins() -> Vec<(&'static str, Pattern)> {
    vec![
        ("a23", families::a_k3_pattern(2)),
        ("a33", families::a_k3_pattern(3)),
        ("a43", families::a_k3_pattern(4)),
        ("gt", families::gt124356_pattern()),
        ("p22", families::pkm_pattern(2, 2)),
        ("p23", families::pkm_pattern(2, 3)),
        ("ud-p", families::family_patterns(FamilyId::JointUpDown).swap_remove(0)),
        ("ud-q", families::du162534_pattern()),
    ]
}

fn resolve_pattern(s: &str) -> Result<Pattern> {
    if Path::new(s).is_file() {
        let text = fs::read_to_string(s).with_context(|| format!("reading {s}"))?;
        return Ok(Pattern::parse_text(&text)?);
    }
    if let Some((_, p)) = builtins().into_iter().find(|(name, _)| *name == s) {
        return Ok(p);
    }
    let (word, k) = match s.split_once(':') {
        Some((w, k)) => (w, k.parse::<usize>().context("bad pattern height")?),
        None => (s, 1),
    };
    if word.is_empty() || !word.bytes().all(|b| b.is_ascii_digit()) {
        bail!("`{s}` is neither a pattern file, a shorthand, nor a digit word");
    }
    let entries: Vec<u32> = word.bytes().map(|b| u32::from(b - b'0')).collect();
    Ok(Pattern::from_word(k, &entries)?)
}
