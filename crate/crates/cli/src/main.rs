//! `vdsplit`: Betti tables, certificates and property suites from the command line.
//!
//! Exit codes: 0 success, 1 property violation, 2 usage, parse or size error.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

use vdsplit_core::corpus::{self, SplittableParams};
use vdsplit_core::graph::{self, is_scm_bipartite, ScmCertificate};
use vdsplit_core::oracle::{betti_oracle, has_linear_resolution, is_cohen_macaulay};
use vdsplit_core::split::{betti_from_sets, betti_recursive, quotient_order_from_split, vertex_split};
use vdsplit_core::suites::{self, SuiteConfig};
use vdsplit_core::text::{self, default_names, format_monomial, Kind, NamedComplex, NamedIdeal};
use vdsplit_core::{BettiTable, Field, Graph, MonomialIdeal, SimplicialComplex};

#[derive(Debug, Error)]
enum CliError {
    #[error(transparent)]
    Core(#[from] vdsplit_core::Error),
    #[error("cannot read {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{0}")]
    Usage(String),
    /// A property check failed; the report has already been printed.
    #[error("{0}")]
    Violation(String),
}

type CliResult<T> = std::result::Result<T, CliError>;

#[derive(Parser, Debug)]
#[command(name = "vdsplit", version, about = "Vertex splittable ideals and vertex decomposable complexes")]
struct Cli {
    /// Coefficient field: `q` or `p=PRIME`.
    #[arg(long, global = true, env = "VDSPLIT_FIELD", default_value = "q")]
    field: Field,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Graded Betti numbers of an ideal, or of an ideal derived from a complex or graph.
    Betti(BettiArgs),
    /// Report predicates and certificates for one input.
    Classify(ClassifyArgs),
    /// Run a property suite (or `all`).
    Verify(VerifyArgs),
    /// Generate a random complex, graph or vertex splittable ideal.
    Gen(GenArgs),
}

#[derive(Args, Debug, Clone)]
struct Caps {
    /// Refuse ideals with more minimal generators than this.
    #[arg(long, default_value_t = 32)]
    max_gens: usize,
    /// Refuse inputs with more variables or vertices than this.
    #[arg(long, default_value_t = 12)]
    max_n: usize,
}

#[derive(Args, Debug)]
struct BettiArgs {
    /// Input file; without a `kind:` header it is read as an ideal.
    input: Option<PathBuf>,
    /// Ideal file; for a complex or graph input, which ideal to take:
    /// `edge` or `cover` for graphs, `sr` or `dual` for complexes.
    #[arg(long)]
    ideal: Option<String>,
    #[arg(long, conflicts_with = "graph")]
    complex: Option<PathBuf>,
    #[arg(long)]
    graph: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Mode::Oracle)]
    mode: Mode,
    /// Run every applicable mode and fail unless all agree.
    #[arg(long)]
    check: bool,
    #[arg(long, value_enum, default_value_t = Format::Grid)]
    format: Format,
    #[command(flatten)]
    caps: Caps,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Mode {
    /// Hochster or Koszul homology.
    Oracle,
    /// Recursion over a vertex splitting.
    Recursive,
    /// Linear-quotient set sizes.
    Sets,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Grid,
    Flat,
}

#[derive(Args, Debug)]
struct ClassifyArgs {
    input: PathBuf,
    #[command(flatten)]
    caps: Caps,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Suite name, or `all`.
    suite: String,
    #[arg(long, default_value_t = 5)]
    max_n: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Draws per sampled size and size of the random ideal corpus.
    #[arg(long, default_value_t = 200)]
    samples: usize,
    /// Variables in random splittable ideals.
    #[arg(long, default_value_t = 7)]
    max_vars: usize,
    #[arg(long, default_value_t = 12)]
    max_gens: usize,
}

#[derive(Args, Debug)]
struct GenArgs {
    #[arg(value_enum)]
    kind: GenKind,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Vertices of a complex or graph.
    #[arg(long, default_value_t = 5)]
    n: usize,
    /// Facets drawn for a complex.
    #[arg(long, default_value_t = 4)]
    facets: usize,
    /// Edge probability for a graph.
    #[arg(long, default_value_t = 0.5)]
    p: f64,
    /// Variables of a splittable ideal.
    #[arg(long, default_value_t = 6)]
    vars: usize,
    /// Largest split-tree depth.
    #[arg(long, default_value_t = 4)]
    depth: usize,
    #[arg(long, default_value_t = 2)]
    max_exponent: u32,
    #[arg(long, default_value_t = 1)]
    min_gens: usize,
    #[arg(long, default_value_t = 12)]
    max_gens: usize,
    /// Write here instead of standard output.
    #[arg(short, long)]
    out: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum GenKind {
    Complex,
    Graph,
    SplittableIdeal,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(CliError::Violation(out)) => {
            print!("{out}");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> CliResult<String> {
    match cli.command {
        Command::Betti(args) => betti(args, cli.field),
        Command::Classify(args) => classify(args, cli.field),
        Command::Verify(args) => verify(args, cli.field),
        Command::Gen(args) => gen(args),
    }
}

fn read(path: &Path) -> CliResult<String> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

fn check_ideal_caps(ideal: &MonomialIdeal, caps: &Caps) -> CliResult<()> {
    if ideal.len() > caps.max_gens {
        return Err(vdsplit_core::Error::TooLarge { what: "minimal generators", count: ideal.len(), cap: caps.max_gens }.into());
    }
    if ideal.num_vars() > caps.max_n {
        return Err(vdsplit_core::Error::TooLarge { what: "variables", count: ideal.num_vars(), cap: caps.max_n }.into());
    }
    Ok(())
}

fn check_vertex_cap(n: usize, caps: &Caps) -> CliResult<()> {
    if n > caps.max_n {
        return Err(vdsplit_core::Error::TooLarge { what: "vertices", count: n, cap: caps.max_n }.into());
    }
    Ok(())
}

/// Resolves the `betti` input flags to a named ideal.
fn betti_input(args: &BettiArgs) -> CliResult<NamedIdeal> {
    if let Some(path) = &args.graph {
        let g = text::parse_graph(&read(path)?)?;
        check_vertex_cap(g.num_vertices(), &args.caps)?;
        return graph_ideal(&g, args.ideal.as_deref().unwrap_or("edge"));
    }
    if let Some(path) = &args.complex {
        let NamedComplex { complex, names } = text::parse_complex(&read(path)?)?;
        check_vertex_cap(complex.num_vars(), &args.caps)?;
        return complex_ideal(&complex, names, args.ideal.as_deref().unwrap_or("sr"));
    }
    let (path, selector) = match (&args.input, &args.ideal) {
        (Some(p), selector) => (p.clone(), selector.as_deref()),
        (None, Some(p)) => (PathBuf::from(p), None),
        (None, None) => return Err(CliError::Usage("no input; pass a file, --ideal, --complex or --graph".into())),
    };
    let content = read(&path)?;
    match text::detect_kind(&content)?.unwrap_or(Kind::Ideal) {
        Kind::Ideal if selector.is_some() => {
            Err(CliError::Usage("--ideal selects a derived ideal only for complexes and graphs".into()))
        }
        Kind::Ideal => Ok(text::parse_ideal(&content)?),
        Kind::Complex => {
            let NamedComplex { complex, names } = text::parse_complex(&content)?;
            check_vertex_cap(complex.num_vars(), &args.caps)?;
            complex_ideal(&complex, names, selector.unwrap_or("sr"))
        }
        Kind::Graph => {
            let g = text::parse_graph(&content)?;
            check_vertex_cap(g.num_vertices(), &args.caps)?;
            graph_ideal(&g, selector.unwrap_or("edge"))
        }
    }
}

fn graph_ideal(g: &Graph, which: &str) -> CliResult<NamedIdeal> {
    let ideal = match which {
        "edge" => g.edge_ideal(),
        "cover" => g.cover_ideal(),
        other => return Err(CliError::Usage(format!("graphs give `edge` or `cover` ideals, not '{other}'"))),
    };
    Ok(NamedIdeal { ideal, names: default_names(g.num_vertices()) })
}

fn complex_ideal(complex: &SimplicialComplex, names: Vec<String>, which: &str) -> CliResult<NamedIdeal> {
    let ideal = match which {
        "sr" => complex.stanley_reisner_ideal(),
        "dual" => complex.dual_facet_ideal(),
        other => return Err(CliError::Usage(format!("complexes give `sr` or `dual` ideals, not '{other}'"))),
    };
    Ok(NamedIdeal { ideal, names })
}

fn render_table(table: &BettiTable, format: Format) -> String {
    match format {
        Format::Grid => table.to_grid(),
        Format::Flat => table.to_flat(),
    }
}

fn betti(args: BettiArgs, field: Field) -> CliResult<String> {
    let NamedIdeal { ideal, .. } = betti_input(&args)?;
    check_ideal_caps(&ideal, &args.caps)?;
    let tree = if args.mode != Mode::Oracle || args.check { vertex_split(&ideal) } else { None };
    let compute = |mode: Mode| -> CliResult<Option<BettiTable>> {
        Ok(match mode {
            Mode::Oracle => Some(betti_oracle(&ideal, field)?),
            Mode::Recursive => tree.as_ref().map(betti_recursive),
            Mode::Sets => match &tree {
                Some(t) => Some(betti_from_sets(&quotient_order_from_split(t, ideal.num_vars())?)),
                None => None,
            },
        })
    };
    let Some(table) = compute(args.mode)? else {
        return Err(CliError::Usage(format!(
            "mode {:?} needs a vertex splittable ideal; this ideal is not vertex splittable (use --mode oracle)",
            args.mode
        )
        .to_lowercase()));
    };
    let mut out = render_table(&table, args.format);
    if !args.check {
        return Ok(out);
    }
    let mut agree = true;
    for mode in [Mode::Oracle, Mode::Recursive, Mode::Sets] {
        let name = format!("{mode:?}").to_lowercase();
        match compute(mode)? {
            Some(other) => {
                let same = other == table;
                agree &= same;
                writeln!(out, "check {name}: {}", if same { "agrees" } else { "DIFFERS" }).unwrap();
                if !same {
                    out.push_str(&other.to_flat());
                }
            }
            None => writeln!(out, "check {name}: not applicable (not vertex splittable)").unwrap(),
        }
    }
    if agree {
        Ok(out)
    } else {
        Err(CliError::Violation(out))
    }
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn classify(args: ClassifyArgs, field: Field) -> CliResult<String> {
    let content = read(&args.input)?;
    match text::detect_kind(&content)?.unwrap_or(Kind::Ideal) {
        Kind::Ideal => {
            let named = text::parse_ideal(&content)?;
            check_ideal_caps(&named.ideal, &args.caps)?;
            classify_ideal(&named, field)
        }
        Kind::Complex => {
            let named = text::parse_complex(&content)?;
            check_vertex_cap(named.complex.num_vars(), &args.caps)?;
            classify_complex(&named, field)
        }
        Kind::Graph => {
            let g = text::parse_graph(&content)?;
            check_vertex_cap(g.num_vertices(), &args.caps)?;
            classify_graph(&g, field)
        }
    }
}

fn classify_ideal(named: &NamedIdeal, field: Field) -> CliResult<String> {
    let NamedIdeal { ideal, names } = named;
    let mut out = String::new();
    writeln!(out, "kind: ideal").unwrap();
    writeln!(out, "variables: {}", ideal.num_vars()).unwrap();
    writeln!(out, "minimal generators: {}", ideal.len()).unwrap();
    writeln!(out, "square-free: {}", yes(ideal.is_squarefree())).unwrap();
    match vertex_split(ideal) {
        Some(tree) => {
            writeln!(out, "vertex splittable: yes").unwrap();
            writeln!(out, "split certificate: {}", tree.to_text(names)).unwrap();
            let order = quotient_order_from_split(&tree, ideal.num_vars())?;
            let steps: Vec<String> = order
                .steps()
                .iter()
                .map(|s| {
                    let set: Vec<&str> = s.set.iter().map(|&v| names[v].as_str()).collect();
                    format!("{} {{{}}}", format_monomial(&s.generator, names), set.join(","))
                })
                .collect();
            writeln!(out, "linear quotients: {}", steps.join(", ")).unwrap();
        }
        None => writeln!(out, "vertex splittable: no").unwrap(),
    }
    if !ideal.is_zero() {
        writeln!(out, "linear resolution: {}", yes(has_linear_resolution(ideal, field)?)).unwrap();
    }
    Ok(out)
}

fn classify_complex(named: &NamedComplex, field: Field) -> CliResult<String> {
    let NamedComplex { complex, names } = named;
    let mut out = String::new();
    writeln!(out, "kind: complex").unwrap();
    writeln!(out, "vertices: {}", complex.vertices().len()).unwrap();
    writeln!(out, "facets: {}", complex.facets().len()).unwrap();
    writeln!(out, "dimension: {}", complex.dim()).unwrap();
    writeln!(out, "pure: {}", yes(complex.is_pure())).unwrap();
    let tree = vdsplit_core::decompose::vertex_decomposable(complex);
    writeln!(out, "vertex decomposable: {}", yes(tree.is_some())).unwrap();
    if let Some(t) = &tree {
        writeln!(out, "decomposition certificate: {}", t.to_text(names)).unwrap();
        let (pd, reg) = t.pd_reg();
        writeln!(out, "pd(R/I): {pd}").unwrap();
        writeln!(out, "reg(R/I): {reg}").unwrap();
    }
    writeln!(out, "bight(I): {}", complex.bight()).unwrap();
    let dual = complex.dual_facet_ideal();
    match vertex_split(&dual) {
        Some(t) => writeln!(out, "dual facet ideal vertex splittable: yes, certificate {}", t.to_text(names)).unwrap(),
        None => writeln!(out, "dual facet ideal vertex splittable: no").unwrap(),
    }
    writeln!(out, "Cohen-Macaulay: {}", yes(is_cohen_macaulay(complex, field)?)).unwrap();
    Ok(out)
}

fn scm_text(cert: &ScmCertificate) -> String {
    match cert {
        ScmCertificate::Edgeless => "edgeless".to_string(),
        ScmCertificate::Step { x, y, without_x, without_y } => {
            format!("({x},{y}: {} | {})", scm_text(without_x), scm_text(without_y))
        }
    }
}

fn vertex_list(vs: impl IntoIterator<Item = usize>) -> String {
    let parts: Vec<String> = vs.into_iter().map(|v| v.to_string()).collect();
    if parts.is_empty() {
        "none".to_string()
    } else {
        parts.join(" ")
    }
}

fn classify_graph(g: &Graph, field: Field) -> CliResult<String> {
    let mut out = String::new();
    writeln!(out, "kind: graph").unwrap();
    writeln!(out, "vertices: {}", g.num_vertices()).unwrap();
    writeln!(out, "edges: {}", g.num_edges()).unwrap();
    match g.perfect_elimination_order() {
        Some(order) => writeln!(out, "chordal: yes, elimination order {}", vertex_list(order)).unwrap(),
        None => writeln!(out, "chordal: no").unwrap(),
    }
    match g.complement().perfect_elimination_order() {
        Some(order) => writeln!(out, "complement chordal: yes, elimination order {}", vertex_list(order)).unwrap(),
        None => writeln!(out, "complement chordal: no").unwrap(),
    }
    match g.simplicial_vertex() {
        Some(v) => writeln!(out, "simplicial vertex: {v}").unwrap(),
        None => writeln!(out, "simplicial vertex: none").unwrap(),
    }
    writeln!(out, "domination shedding vertices: {}", vertex_list(g.domination_shedding())).unwrap();
    writeln!(out, "bipartite: {}", yes(g.is_bipartite())).unwrap();
    if g.is_bipartite() {
        match is_scm_bipartite(g)? {
            Some(c) => writeln!(out, "sequentially Cohen-Macaulay: yes, certificate {}", scm_text(&c)).unwrap(),
            None => writeln!(out, "sequentially Cohen-Macaulay: no").unwrap(),
        }
    }
    let names = default_names(g.num_vertices());
    match vertex_split(&g.cover_ideal()) {
        Some(t) => writeln!(out, "cover ideal vertex splittable: yes, certificate {}", t.to_text(&names)).unwrap(),
        None => writeln!(out, "cover ideal vertex splittable: no").unwrap(),
    }
    if g.num_edges() == 0 {
        return Ok(out);
    }
    let fr = graph::froberg_equivalence(g, field)?;
    writeln!(out, "edge ideal linear resolution: {}", yes(fr.edge_ideal_linear_resolution)).unwrap();
    writeln!(out, "edge ideal vertex splittable: {}", yes(fr.edge_ideal_vertex_splittable)).unwrap();
    let cc = graph::corchor1_equivalence(g, field)?;
    writeln!(out, "dual of independence complex vertex decomposable: {}", yes(cc.dual_vertex_decomposable)).unwrap();
    writeln!(out, "dual of independence complex Cohen-Macaulay: {}", yes(cc.dual_cohen_macaulay)).unwrap();
    if fr.complement_chordal {
        let tree = graph::chordal_split(&g.complement())?;
        writeln!(out, "split certificate from chordal complement: {}", tree.to_text(&names)).unwrap();
    }
    let agree = fr.all_agree() && cc.all_agree();
    writeln!(out, "equivalences agree: {}", yes(agree)).unwrap();
    if agree {
        Ok(out)
    } else {
        Err(CliError::Violation(out))
    }
}

fn verify(args: VerifyArgs, field: Field) -> CliResult<String> {
    let config = SuiteConfig {
        max_n: args.max_n,
        seed: args.seed,
        samples: args.samples,
        field,
        max_vars: args.max_vars,
        max_gens: args.max_gens,
    };
    let reports = suites::run(&args.suite, &config)?;
    let out = suites::render_all(&reports);
    if reports.iter().all(|r| r.passed()) {
        Ok(out)
    } else {
        Err(CliError::Violation(out))
    }
}

fn gen(args: GenArgs) -> CliResult<String> {
    let mut rng = corpus::rng(args.seed);
    let out = match args.kind {
        GenKind::Complex => {
            if args.n == 0 || args.n > 64 {
                return Err(vdsplit_core::Error::InvalidParameter(format!("n must be in 1..=64, got {}", args.n)).into());
            }
            let c = corpus::random_complex(&mut rng, args.n, args.facets)?;
            text::format_complex(&c, &default_names(args.n))
        }
        GenKind::Graph => {
            if args.n > 64 {
                return Err(vdsplit_core::Error::InvalidParameter(format!("n must be at most 64, got {}", args.n)).into());
            }
            text::format_graph(&corpus::random_graph(&mut rng, args.n, args.p)?)
        }
        GenKind::SplittableIdeal => {
            let params = SplittableParams {
                num_vars: args.vars,
                depth: args.depth,
                max_exponent: args.max_exponent,
                min_gens: args.min_gens,
                max_gens: args.max_gens,
            };
            let sample = corpus::random_splittable(&mut rng, params)?;
            let names = default_names(args.vars);
            let mut s = text::format_ideal(&sample.ideal, &names);
            writeln!(s, "# split tree: {}", sample.tree.to_text(&names)).unwrap();
            s
        }
    };
    match args.out {
        Some(path) => {
            std::fs::write(&path, &out).map_err(|source| CliError::Io { path: path.clone(), source })?;
            Ok(String::new())
        }
        None => Ok(out),
    }
}
