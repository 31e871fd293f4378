//! Command-line surface for the Berge hypergraph toolkit.
//!
//! Verbs: `gen`, `detect`, `certify`, `shadow`, `lift`, `ramsey`, `turan`.
//! All results go to stdout in the documented text formats, diagnostics to
//! stderr. Exit codes: 0 for a positive result (arrows, copy found,
//! certificate valid), 10 for a definite negative (counterexample, no copy,
//! invalid certificate, lemma precondition not met), 2 for usage or parse
//! errors, 3 when an instance exceeds the dense kernel's scale. No
//! sub-command uses randomness, so runs are reproducible byte for byte
//! (multi-worker `ramsey` may return a different counterexample, never a
//! different verdict).

pub mod parallel;

use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use berge_core::berge::{CertKind, CertificateDocument};
use berge_core::search::{ArrowingProblem, SearchError, Strategy, TuranResult, Verdict};
use berge_core::shadow::shadow_with_threshold;
use berge_core::{
    check_certificate, find_member, lift_shadow_clique, lift_shadow_cycle, lower_bound_ccc,
    lower_bound_ck_general, lower_bound_ck_small, turan_partite, ColoredHypergraph,
    ConstructionLayout, FamilySpec, Hypergraph, SearchStats, VertexSet,
};

pub const EXIT_POSITIVE: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 10;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_SCALE: i32 = 3;

#[derive(Parser)]
#[command(name = "berge", version, about = "Berge hypergraph Ramsey/Turan toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate hypergraphs and lower-bound colorings
    Gen {
        #[command(subcommand)]
        what: GenCommand,
    },
    /// Search a host (or one color class) for a Berge family member
    Detect(DetectArgs),
    /// Re-verify a certificate against its host
    Certify(CertifyArgs),
    /// Print the thresholded shadow of a colored hypergraph
    Shadow(ShadowArgs),
    /// Lift a shadow cycle/clique to a monochromatic Berge certificate
    Lift(LiftArgs),
    /// Decide an arrowing instance exactly
    Ramsey(RamseyArgs),
    /// Maximize edges of a family-free subhypergraph
    Turan(TuranArgs),
}

#[derive(Subcommand)]
enum GenCommand {
    /// Complete r-uniform hypergraph (writes PATH.hg)
    Complete {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        r: usize,
        #[arg(short = 'o', long = "output")]
        output: String,
    },
    /// Complete 3-partite-style Turan hypergraph (writes PATH.hg)
    Turan {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        parts: usize,
        #[arg(short = 'o', long = "output")]
        output: String,
    },
    /// Lower-bound coloring (writes PATH.hg and PATH.col)
    LowerBound {
        #[arg(long, value_enum)]
        kind: LowerBoundKind,
        /// Cycle length (ccc, ck-general)
        #[arg(long)]
        n: Option<usize>,
        /// Clique order (ck-small, ck-general)
        #[arg(long)]
        m: Option<usize>,
        #[arg(short = 'o', long = "output")]
        output: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum LowerBoundKind {
    Ccc,
    CkSmall,
    CkGeneral,
}

#[derive(Args)]
struct DetectArgs {
    /// Family to look for: BC:<n> or BK:<m>
    #[arg(long)]
    family: String,
    #[arg(long)]
    input: PathBuf,
    #[arg(long, requires = "color")]
    coloring: Option<PathBuf>,
    /// Restrict the search to this color class
    #[arg(long, requires = "coloring")]
    color: Option<usize>,
}

#[derive(Args)]
struct CertifyArgs {
    #[arg(long)]
    cert: PathBuf,
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    coloring: Option<PathBuf>,
}

#[derive(Args)]
struct ShadowArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    coloring: PathBuf,
    #[arg(long)]
    threshold: usize,
}

#[derive(Args)]
struct LiftArgs {
    #[arg(long, value_enum)]
    kind: LiftKind,
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    coloring: PathBuf,
    #[arg(long)]
    color: usize,
    /// Core vertices, comma separated: "v1,v2,..."
    #[arg(long)]
    core: String,
}

#[derive(Clone, Copy, ValueEnum)]
enum LiftKind {
    Cycle,
    Clique,
}

#[derive(Args)]
struct RamseyArgs {
    /// Comma-separated family list, one per color: "BC:4,BC:4,BC:3"
    #[arg(long)]
    families: String,
    #[arg(long)]
    vertices: usize,
    #[arg(long, value_enum, default_value_t = StrategyArg::Dfs)]
    strategy: StrategyArg,
    #[arg(long, value_enum, default_value_t = SymmetryArg::On)]
    symmetry: SymmetryArg,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum StrategyArg {
    Dfs,
    TuranFirst,
}

#[derive(Clone, Copy, ValueEnum)]
enum SymmetryArg {
    On,
    Off,
}

#[derive(Args)]
struct TuranArgs {
    /// Family to avoid: BC:<n> or BK:<m>
    #[arg(long)]
    family: String,
    #[arg(long)]
    vertices: usize,
}

enum Failure {
    Usage(String),
    Scale(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Usage(_) => EXIT_USAGE,
            Failure::Scale(_) => EXIT_SCALE,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Scale(m) => m,
        }
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

type CliResult = Result<i32, Failure>;

/// Runs one sub-command against explicit streams and returns the exit code.
/// `args` must include the program name in position 0.
pub fn run<S: AsRef<str>>(args: &[S], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let argv: Vec<&str> = args.iter().map(|s| s.as_ref()).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            return if e.use_stderr() {
                let _ = write!(err, "{e}");
                EXIT_USAGE
            } else {
                // --help / --version render on stdout and succeed
                let _ = write!(out, "{e}");
                EXIT_POSITIVE
            };
        }
    };
    let result = match cli.command {
        Command::Gen { what } => cmd_gen(what),
        Command::Detect(a) => cmd_detect(a, out),
        Command::Certify(a) => cmd_certify(a, out),
        Command::Shadow(a) => cmd_shadow(a, out),
        Command::Lift(a) => cmd_lift(a, out, err),
        Command::Ramsey(a) => cmd_ramsey(a, out),
        Command::Turan(a) => cmd_turan(a, out, err),
    };
    match result {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message());
            f.code()
        }
    }
}

/// Parses the family grammar `BC:<n>` | `BK:<m>`.
pub fn parse_family(text: &str) -> Result<FamilySpec, String> {
    let spec = match text.split_once(':') {
        Some(("BC", n)) => n.parse().map(FamilySpec::Cycle),
        Some(("BK", m)) => m.parse().map(FamilySpec::Clique),
        _ => return Err(format!("family `{text}` does not match BC:<n> or BK:<m>")),
    }
    .map_err(|_| format!("family `{text}` has a malformed number"))?;
    spec.validate().map_err(|e| e.to_string())?;
    Ok(spec)
}

fn read_file(path: &PathBuf) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| usage(format!("cannot read {}: {e}", path.display())))
}

fn write_file(path: &str, contents: &str) -> Result<(), Failure> {
    fs::write(path, contents).map_err(|e| usage(format!("cannot write {path}: {e}")))
}

fn load_hypergraph(path: &PathBuf) -> Result<Hypergraph, Failure> {
    let text = read_file(path)?;
    Hypergraph::parse(&text).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn load_coloring(path: &PathBuf, base: Hypergraph) -> Result<ColoredHypergraph, Failure> {
    let text = read_file(path)?;
    ColoredHypergraph::parse(&text, base).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn layout_comments(layout: &ConstructionLayout) -> String {
    let fmt_set = |s: VertexSet| {
        let mut buf = String::new();
        for v in s.iter() {
            let _ = write!(buf, " {v}");
        }
        buf
    };
    format!(
        "# A ={}\n# B ={}\n",
        fmt_set(layout.a_vertices()),
        fmt_set(layout.b_vertices())
    )
}

fn cmd_gen(what: GenCommand) -> CliResult {
    match what {
        GenCommand::Complete { n, r, output } => {
            let h = Hypergraph::complete(n, r).map_err(|e| usage(e.to_string()))?;
            write_file(&format!("{output}.hg"), &h.serialize())?;
            Ok(EXIT_POSITIVE)
        }
        GenCommand::Turan { n, parts, output } => {
            let h = turan_partite(n, parts).map_err(|e| usage(e.to_string()))?;
            write_file(&format!("{output}.hg"), &h.serialize())?;
            Ok(EXIT_POSITIVE)
        }
        GenCommand::LowerBound { kind, n, m, output } => {
            let layout = match kind {
                LowerBoundKind::Ccc => {
                    let n = n.ok_or_else(|| usage("--kind ccc requires --n"))?;
                    if m.is_some() {
                        return Err(usage("--kind ccc takes no --m"));
                    }
                    lower_bound_ccc(n)
                }
                LowerBoundKind::CkSmall => {
                    let m = m.ok_or_else(|| usage("--kind ck-small requires --m"))?;
                    if n.is_some() {
                        return Err(usage("--kind ck-small takes no --n"));
                    }
                    lower_bound_ck_small(m)
                }
                LowerBoundKind::CkGeneral => {
                    let m = m.ok_or_else(|| usage("--kind ck-general requires --m"))?;
                    let n = n.ok_or_else(|| usage("--kind ck-general requires --n"))?;
                    lower_bound_ck_general(m, n)
                }
            }
            .map_err(|e| usage(e.to_string()))?;
            layout.validate().map_err(|e| usage(format!("generated layout failed validation: {e}")))?;
            let hg = format!("{}{}", layout_comments(&layout), layout.colored().base().serialize());
            write_file(&format!("{output}.hg"), &hg)?;
            write_file(&format!("{output}.col"), &layout.colored().serialize())?;
            Ok(EXIT_POSITIVE)
        }
    }
}

fn cert_kind_of(spec: &FamilySpec) -> (CertKind, usize) {
    match spec {
        FamilySpec::Cycle(n) => (CertKind::Cycle, *n),
        FamilySpec::Clique(m) => (CertKind::Clique, *m),
        FamilySpec::Pattern(g) => (CertKind::Graph, g.vertex_count()),
    }
}

fn cmd_detect(args: DetectArgs, out: &mut dyn Write) -> CliResult {
    let spec = parse_family(&args.family).map_err(usage)?;
    let h = load_hypergraph(&args.input)?;
    let (host, global, color) = match (&args.coloring, args.color) {
        (Some(path), Some(color)) => {
            let ch = load_coloring(path, h.clone())?;
            let (class, global) = ch
                .color_class_with_indices(color)
                .map_err(|e| usage(e.to_string()))?;
            (class, Some(global), Some(color))
        }
        _ => (h, None, None),
    };
    let found = find_member(&host, &spec).map_err(|e| usage(e.to_string()))?;
    match found {
        Some(mut cert) => {
            if let Some(global) = &global {
                cert.assignment = cert.assignment.iter().map(|&i| global[i]).collect();
            }
            let (kind, size) = cert_kind_of(&spec);
            let doc = CertificateDocument { kind, size, color, certificate: cert };
            let _ = write!(out, "{}", doc.serialize());
            Ok(EXIT_POSITIVE)
        }
        None => {
            let _ = writeln!(out, "none");
            Ok(EXIT_NEGATIVE)
        }
    }
}

fn cmd_certify(args: CertifyArgs, out: &mut dyn Write) -> CliResult {
    let text = read_file(&args.cert)?;
    let doc = CertificateDocument::parse(&text).map_err(|e| usage(format!("{}: {e}", args.cert.display())))?;
    let spec = doc
        .family_spec()
        .ok_or_else(|| usage("graph-kind certificates need their pattern; only cycle/clique are checkable here"))?;
    let h = load_hypergraph(&args.input)?;
    let coloring = match (doc.color, &args.coloring) {
        (Some(_), None) => {
            return Err(usage("certificate names a color; pass the coloring with --coloring"))
        }
        (Some(_), Some(path)) => Some(load_coloring(path, h.clone())?),
        (None, _) => None,
    };
    let filter = match (&coloring, doc.color) {
        (Some(ch), Some(c)) => Some((ch, c)),
        _ => None,
    };
    match check_certificate(&h, &doc.certificate, &spec, filter) {
        Ok(()) => {
            let _ = writeln!(out, "valid");
            Ok(EXIT_POSITIVE)
        }
        Err(violation) => {
            let _ = writeln!(out, "invalid: {violation}");
            Ok(EXIT_NEGATIVE)
        }
    }
}

fn cmd_shadow(args: ShadowArgs, out: &mut dyn Write) -> CliResult {
    let h = load_hypergraph(&args.input)?;
    let ch = load_coloring(&args.coloring, h)?;
    let s = shadow_with_threshold(&ch, args.threshold).map_err(|e| usage(e.to_string()))?;
    for (u, v) in s.pairs() {
        let list = s.list(u, v);
        if list.is_empty() {
            let _ = writeln!(out, "p {u} {v} : -");
        } else {
            let items: Vec<String> = list.iter().map(|c| c.to_string()).collect();
            let _ = writeln!(out, "p {u} {v} : {}", items.join(" "));
        }
    }
    Ok(EXIT_POSITIVE)
}

fn parse_core_list(text: &str) -> Result<Vec<usize>, Failure> {
    text.split(',')
        .map(|t| t.trim().parse().map_err(|_| usage(format!("bad core vertex `{t}`"))))
        .collect()
}

fn cmd_lift(args: LiftArgs, out: &mut dyn Write, err: &mut dyn Write) -> CliResult {
    let h = load_hypergraph(&args.input)?;
    let ch = load_coloring(&args.coloring, h)?;
    let core = parse_core_list(&args.core)?;
    let lifted = match args.kind {
        LiftKind::Cycle => lift_shadow_cycle(&ch, &core, args.color),
        LiftKind::Clique => {
            let set: VertexSet = core.iter().copied().collect();
            if set.len() != core.len() {
                return Err(usage("clique core has repeated vertices"));
            }
            lift_shadow_clique(&ch, set, args.color)
        }
    };
    match lifted {
        Ok(cert) => {
            let kind = match args.kind {
                LiftKind::Cycle => CertKind::Cycle,
                LiftKind::Clique => CertKind::Clique,
            };
            let doc = CertificateDocument {
                kind,
                size: core.len(),
                color: Some(args.color),
                certificate: cert,
            };
            let _ = write!(out, "{}", doc.serialize());
            Ok(EXIT_POSITIVE)
        }
        Err(e @ berge_core::berge::LiftError::PreconditionViolated { .. }) => {
            let _ = writeln!(err, "precondition violated: {e}");
            Ok(EXIT_NEGATIVE)
        }
        Err(e) => Err(usage(e.to_string())),
    }
}

fn stats_line(stats: &SearchStats) -> String {
    format!(
        "nodes={} prunes_mono={} prunes_sym={} ms={}",
        stats.nodes, stats.prunes_mono, stats.prunes_sym, stats.elapsed_ms
    )
}

fn map_search_error(e: SearchError) -> Failure {
    match e {
        SearchError::ScaleExceeded { .. } => Failure::Scale(e.to_string()),
        other => usage(other.to_string()),
    }
}

fn cmd_ramsey(args: RamseyArgs, out: &mut dyn Write) -> CliResult {
    let specs: Vec<FamilySpec> = args
        .families
        .split(',')
        .map(|t| parse_family(t.trim()))
        .collect::<Result<_, _>>()
        .map_err(usage)?;
    let problem = ArrowingProblem::new(args.vertices, specs)
        .with_strategy(match args.strategy {
            StrategyArg::Dfs => Strategy::Dfs,
            StrategyArg::TuranFirst => Strategy::TuranFirst,
        })
        .with_symmetry(matches!(args.symmetry, SymmetryArg::On))
        .with_workers(args.jobs.max(1));
    let outcome = parallel::decide(&problem).map_err(map_search_error)?;
    match outcome.verdict {
        Verdict::Arrows => {
            let _ = writeln!(out, "ARROWS");
            let _ = writeln!(out, "{}", stats_line(&outcome.stats));
            Ok(EXIT_POSITIVE)
        }
        Verdict::Counterexample(cex) => {
            let _ = writeln!(out, "COUNTEREXAMPLE");
            let _ = writeln!(out, "{}", stats_line(&outcome.stats));
            let _ = write!(out, "{}", cex.serialize());
            Ok(EXIT_NEGATIVE)
        }
    }
}

fn cmd_turan(args: TuranArgs, out: &mut dyn Write, err: &mut dyn Write) -> CliResult {
    let spec = parse_family(&args.family).map_err(usage)?;
    let TuranResult { max_edges, witness, stats } =
        berge_core::turan_max(args.vertices, &spec).map_err(map_search_error)?;
    let _ = writeln!(out, "max={max_edges}");
    let _ = write!(out, "{}", witness.serialize());
    let _ = writeln!(err, "{}", stats_line(&stats));
    Ok(EXIT_POSITIVE)
}
