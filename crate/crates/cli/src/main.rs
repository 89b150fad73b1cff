//! Command-line front end: graph ingestion, word queries, splitting
//! construction, tree-ball export, and the action checker.
//!
//! Exit codes: 0 all requested certifications pass, 1 a certification
//! check failed, 2 input error, 3 budget or bound exhaustion.

use clap::{Parser, Subcommand, ValueEnum};
use raag::{
    abelian_splitting_report, build_ball, harness::LemmaConfig, theorem, tree, verify_theorem,
    Action, AmalgamSplitting, CheckerError, Config, Graph, GraphError, HomSpec, IntegerVector,
    LineAction, RaagHom, SplitError, SplittingDescriptor, TreeError, VertexSet, Word, WordError,
};
use serde_json::json;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

const EXIT_CHECK_FAILED: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_BUDGET: u8 = 3;

#[derive(Parser)]
#[command(name = "raag", version, about = "Splittings of right-angled Artin groups, executable")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Inspect a graph: components, separators, cut structure.
    Graph {
        #[command(subcommand)]
        cmd: GraphCmd,
    },
    /// Word-problem queries over a graph's group.
    Word {
        #[command(subcommand)]
        cmd: WordCmd,
    },
    /// Build a splitting from a separating set; classify elements.
    Split {
        #[command(subcommand)]
        cmd: SplitCmd,
    },
    /// Exact finite windows onto the tree of a splitting.
    Tree {
        #[command(subcommand)]
        cmd: TreeCmd,
    },
    /// Run the checkers: action reports, lemma harness, abelian criterion.
    Check {
        #[command(subcommand)]
        cmd: CheckCmd,
    },
}

#[derive(Subcommand)]
enum GraphCmd {
    /// Summary: vertices, edges, connectivity, completeness, components.
    Info { file: PathBuf },
    /// All inclusion-minimal separating vertex sets.
    Separators {
        file: PathBuf,
        /// Vertex-count bound for the exhaustive subset scan.
        #[arg(long, default_value_t = raag::graph::DEFAULT_ENUMERATION_BOUND)]
        bound: usize,
    },
    /// Vertices whose removal disconnects the graph.
    CutVertices { file: PathBuf },
    /// Separating sets inducing complete subgraphs, smallest first.
    CutCliques { file: PathBuf },
}

#[derive(Subcommand)]
enum WordCmd {
    /// Canonical normal form of a word.
    Nf { graph: PathBuf, word: String },
    /// Do two words spell the same element?
    Equal { graph: PathBuf, first: String, second: String },
    /// Vertices appearing in the canonical form.
    Support { graph: PathBuf, word: String },
    /// Membership in the subgroup generated by a vertex set.
    Member {
        graph: PathBuf,
        word: String,
        #[arg(long, value_delimiter = ',', required = true)]
        lambda: Vec<String>,
    },
}

#[derive(Subcommand)]
enum SplitCmd {
    /// Build the amalgam splitting along a separating set.
    Make {
        graph: PathBuf,
        #[arg(long, value_delimiter = ',')]
        lambda: Vec<String>,
        /// Vertex whose component becomes side 1 (default: first vertex
        /// outside lambda).
        #[arg(long)]
        pick: Option<String>,
    },
    /// Elliptic/hyperbolic classification with translation length.
    Classify {
        graph: PathBuf,
        word: String,
        #[arg(long, value_delimiter = ',')]
        lambda: Vec<String>,
        #[arg(long)]
        pick: Option<String>,
    },
}

#[derive(Subcommand)]
enum TreeCmd {
    /// Export the ball of edge cosets with short representatives.
    Ball {
        graph: PathBuf,
        #[arg(long, value_delimiter = ',')]
        lambda: Vec<String>,
        #[arg(long)]
        pick: Option<String>,
        #[arg(long = "L", default_value_t = 2)]
        radius: usize,
        #[arg(long)]
        budget: Option<usize>,
    },
    /// Ball vertices fixed by a word.
    Fix {
        graph: PathBuf,
        word: String,
        #[arg(long, value_delimiter = ',')]
        lambda: Vec<String>,
        #[arg(long)]
        pick: Option<String>,
        #[arg(long = "L", default_value_t = 3)]
        radius: usize,
        #[arg(long)]
        budget: Option<usize>,
    },
    /// Ball vertices on the axis of a hyperbolic word.
    Axis {
        graph: PathBuf,
        word: String,
        #[arg(long, value_delimiter = ',')]
        lambda: Vec<String>,
        #[arg(long)]
        pick: Option<String>,
        #[arg(long = "L", default_value_t = 4)]
        radius: usize,
        #[arg(long)]
        budget: Option<usize>,
    },
}

#[derive(Subcommand)]
enum CheckCmd {
    /// Run the action checker and certify the resulting report.
    Theorem {
        /// Source graph; required unless `--hom` provides one.
        graph: Option<PathBuf>,
        /// Direct splitting: the separating set.
        #[arg(long, value_delimiter = ',', conflicts_with_all = ["hom", "phi"])]
        lambda: Option<Vec<String>>,
        #[arg(long)]
        pick: Option<String>,
        /// Induced action: JSON homomorphism file (source, target, images).
        #[arg(long, requires = "base")]
        hom: Option<PathBuf>,
        /// Induced action: JSON splitting descriptor over the hom target.
        #[arg(long)]
        base: Option<PathBuf>,
        /// Line action: comma-separated exponents in vertex order.
        #[arg(long, value_delimiter = ',', conflicts_with = "hom")]
        phi: Option<Vec<i64>>,
        /// Run every minimal separator of the graph as a direct splitting.
        #[arg(long, conflicts_with_all = ["lambda", "hom", "phi"])]
        all_separators: bool,
        #[arg(long = "L")]
        radius: Option<usize>,
        #[arg(long = "N")]
        axis_bound: Option<usize>,
        #[arg(long)]
        budget: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Commuting-pair lemma harness on a splitting.
    Lemmas {
        graph: PathBuf,
        #[arg(long, value_delimiter = ',')]
        lambda: Vec<String>,
        #[arg(long)]
        pick: Option<String>,
        #[arg(long = "L", default_value_t = 5)]
        radius: usize,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        budget: Option<usize>,
    },
    /// Cut-clique criterion for splittings over abelian subgroups.
    Abelian { graph: PathBuf },
}

#[derive(Debug)]
enum CliError {
    Input(String),
    Budget(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Input(_) => EXIT_INPUT,
            CliError::Budget(_) => EXIT_BUDGET,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Input(m) | CliError::Budget(m) => m,
        }
    }
}

impl From<GraphError> for CliError {
    fn from(e: GraphError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<WordError> for CliError {
    fn from(e: WordError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<SplitError> for CliError {
    fn from(e: SplitError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<TreeError> for CliError {
    fn from(e: TreeError) -> Self {
        match e {
            TreeError::Budget { .. } | TreeError::EnumerationBudget { .. } => {
                CliError::Budget(e.to_string())
            }
            other => CliError::Input(other.to_string()),
        }
    }
}

impl From<CheckerError> for CliError {
    fn from(e: CheckerError) -> Self {
        match e {
            CheckerError::Tree(t) => t.into(),
            CheckerError::Indeterminate { .. } => CliError::Budget(format!("indeterminate: {e}")),
            other => CliError::Input(other.to_string()),
        }
    }
}

impl From<raag::harness::HarnessError> for CliError {
    fn from(e: raag::harness::HarnessError) -> Self {
        match e {
            raag::harness::HarnessError::Tree(t) => t.into(),
            other => CliError::Input(other.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.code())
        }
    }
}

fn read_file(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<Graph, CliError> {
    Graph::parse(&read_file(path)?).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn budget_or_env(flag: Option<usize>) -> Result<usize, CliError> {
    if let Some(b) = flag {
        return Ok(b);
    }
    match std::env::var("RAAG_BUDGET") {
        Ok(text) => text
            .parse()
            .map_err(|_| CliError::Input(format!("RAAG_BUDGET is not a number: `{text}`"))),
        Err(_) => Ok(Config::default().vertex_budget),
    }
}

fn make_splitting(g: &Graph, lambda: &[String], pick: Option<&str>) -> Result<AmalgamSplitting, CliError> {
    // An empty token means the empty separating set (free-product case).
    let lam = VertexSet::from_labels(lambda.iter().filter(|l| !l.is_empty()).cloned());
    let pick = match pick {
        Some(p) => p.to_string(),
        None => g
            .labels()
            .find(|l| !lam.contains(l))
            .ok_or_else(|| CliError::Input("every vertex lies in lambda".to_string()))?
            .to_string(),
    };
    Ok(AmalgamSplitting::from_separator(g, &lam, &pick)?)
}

fn emit(format: Format, json: &serde_json::Value, text: &str) {
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(json).expect("serializable")),
        Format::Text => println!("{text}"),
    }
}

fn sets_json(sets: &[VertexSet]) -> serde_json::Value {
    json!(sets.iter().map(VertexSet::to_vec).collect::<Vec<_>>())
}

fn sets_text(sets: &[VertexSet]) -> String {
    if sets.is_empty() {
        "(none)".to_string()
    } else {
        sets.iter().map(VertexSet::to_string).collect::<Vec<_>>().join("\n")
    }
}

fn run(cli: &Cli) -> Result<u8, CliError> {
    match &cli.command {
        Command::Graph { cmd } => run_graph(cli.format, cmd),
        Command::Word { cmd } => run_word(cli.format, cmd),
        Command::Split { cmd } => run_split(cli.format, cmd),
        Command::Tree { cmd } => run_tree(cli.format, cmd),
        Command::Check { cmd } => run_check(cli.format, cmd),
    }
}

fn run_graph(format: Format, cmd: &GraphCmd) -> Result<u8, CliError> {
    match cmd {
        GraphCmd::Info { file } => {
            let g = load_graph(file)?;
            let components = g.components();
            let info = json!({
                "vertices": g.labels().collect::<Vec<_>>(),
                "edges": g.edge_labels(),
                "vertex_count": g.vertex_count(),
                "edge_count": g.edge_count(),
                "connected": g.is_connected(),
                "complete": g.is_complete(),
                "components": components.iter().map(VertexSet::to_vec).collect::<Vec<_>>(),
            });
            let text = format!(
                "vertices ({}): {}\nedges ({}): {}\nconnected: {}\ncomplete: {}\ncomponents: {}",
                g.vertex_count(),
                g.labels().collect::<Vec<_>>().join(" "),
                g.edge_count(),
                g.edge_labels().iter().map(|(u, v)| format!("{u}-{v}")).collect::<Vec<_>>().join(" "),
                g.is_connected(),
                g.is_complete(),
                components.iter().map(VertexSet::to_string).collect::<Vec<_>>().join(" "),
            );
            emit(format, &info, &text);
            Ok(0)
        }
        GraphCmd::Separators { file, bound } => {
            let g = load_graph(file)?;
            let seps = g.minimal_separators_bounded(*bound)?;
            emit(format, &json!({ "minimal_separators": sets_json(&seps) }), &sets_text(&seps));
            Ok(0)
        }
        GraphCmd::CutVertices { file } => {
            let g = load_graph(file)?;
            let cut = g.cut_vertices();
            emit(format, &json!({ "cut_vertices": cut.to_vec() }), &cut.to_string());
            Ok(0)
        }
        GraphCmd::CutCliques { file } => {
            let g = load_graph(file)?;
            let cliques = g.cut_cliques();
            emit(format, &json!({ "cut_cliques": sets_json(&cliques) }), &sets_text(&cliques));
            Ok(0)
        }
    }
}

fn run_word(format: Format, cmd: &WordCmd) -> Result<u8, CliError> {
    match cmd {
        WordCmd::Nf { graph, word } => {
            let g = load_graph(graph)?;
            let w = Word::parse(&g, word)?;
            let nf = raag::normal_form(&g, &w)?;
            emit(
                format,
                &json!({ "input": word, "normal_form": nf.display(&g), "length": nf.len() }),
                &nf.display(&g),
            );
            Ok(0)
        }
        WordCmd::Equal { graph, first, second } => {
            let g = load_graph(graph)?;
            let eq = raag::equal(&g, &Word::parse(&g, first)?, &Word::parse(&g, second)?)?;
            emit(format, &json!({ "equal": eq }), &eq.to_string());
            Ok(0)
        }
        WordCmd::Support { graph, word } => {
            let g = load_graph(graph)?;
            let supp = raag::support(&g, &Word::parse(&g, word)?)?;
            emit(format, &json!({ "support": supp.to_vec() }), &supp.to_string());
            Ok(0)
        }
        WordCmd::Member { graph, word, lambda } => {
            let g = load_graph(graph)?;
            let lam = VertexSet::from_labels(lambda.iter().cloned());
            let w = Word::parse(&g, word)?;
            let member = raag::in_special_subgroup(&g, &lam, &w)?;
            let supp = raag::support(&g, &w)?;
            emit(
                format,
                &json!({ "member": member, "lambda": lam.to_vec(), "support": supp.to_vec() }),
                &member.to_string(),
            );
            Ok(0)
        }
    }
}

fn run_split(format: Format, cmd: &SplitCmd) -> Result<u8, CliError> {
    match cmd {
        SplitCmd::Make { graph, lambda, pick } => {
            let g = load_graph(graph)?;
            let s = make_splitting(&g, lambda, pick.as_deref())?;
            let d = s.to_descriptor();
            let text = format!(
                "lambda: {}\nside1: {}\nside2: {}",
                s.lam(),
                s.side(raag::Side::One),
                s.side(raag::Side::Two)
            );
            emit(format, &serde_json::to_value(&d).expect("descriptor"), &text);
            Ok(0)
        }
        SplitCmd::Classify { graph, word, lambda, pick } => {
            let g = load_graph(graph)?;
            let s = make_splitting(&g, lambda, pick.as_deref())?;
            let w = Word::parse(&g, word)?;
            let c = s.classify(&w)?;
            let info = json!({
                "kind": c.kind_str(),
                "translation_length": c.translation_length(),
                "conjugator": c.conjugator().display(&g),
                "core": c.core().display(&g),
            });
            emit(format, &info, &c.describe(&g));
            Ok(0)
        }
    }
}

fn run_tree(format: Format, cmd: &TreeCmd) -> Result<u8, CliError> {
    match cmd {
        TreeCmd::Ball { graph, lambda, pick, radius, budget } => {
            let g = load_graph(graph)?;
            let s = make_splitting(&g, lambda, pick.as_deref())?;
            let ball = build_ball(&s, *radius, budget_or_env(*budget)?)?;
            let export = ball.export();
            let text = format!(
                "radius {}: {} vertices, {} edges (connected tree)",
                export.radius, export.vertex_count, export.edge_count
            );
            emit(format, &serde_json::to_value(&export).expect("export"), &text);
            Ok(0)
        }
        TreeCmd::Fix { graph, word, lambda, pick, radius, budget } => {
            let g = load_graph(graph)?;
            let s = make_splitting(&g, lambda, pick.as_deref())?;
            let ball = build_ball(&s, *radius, budget_or_env(*budget)?)?;
            let w = Word::parse(&g, word)?;
            let fixed = tree::fixed_vertices(&s, &w, &ball)?;
            let items: Vec<serde_json::Value> = fixed
                .iter()
                .map(|&id| {
                    let v = ball.vertex(id);
                    json!({ "side": v.side().number(), "rep": v.rep_word().display(&g) })
                })
                .collect();
            let text = if fixed.is_empty() {
                "no fixed vertices in the ball".to_string()
            } else {
                fixed.iter().map(|&id| ball.vertex(id).display(&g)).collect::<Vec<_>>().join("\n")
            };
            emit(format, &json!({ "count": fixed.len(), "fixed_vertices": items }), &text);
            Ok(0)
        }
        TreeCmd::Axis { graph, word, lambda, pick, radius, budget } => {
            let g = load_graph(graph)?;
            let s = make_splitting(&g, lambda, pick.as_deref())?;
            let ball = build_ball(&s, *radius, budget_or_env(*budget)?)?;
            let w = Word::parse(&g, word)?;
            let axis = tree::axis_vertices(&s, &w, &ball)?;
            let c = s.classify(&w)?;
            let items: Vec<serde_json::Value> = axis
                .iter()
                .map(|&id| {
                    let v = ball.vertex(id);
                    json!({ "side": v.side().number(), "rep": v.rep_word().display(&g) })
                })
                .collect();
            let text = format!(
                "translation length {}; {} axis vertices visible",
                c.translation_length(),
                axis.len()
            );
            emit(
                format,
                &json!({
                    "translation_length": c.translation_length(),
                    "count": axis.len(),
                    "axis_vertices": items,
                }),
                &text,
            );
            Ok(0)
        }
    }
}

fn theorem_text(report: &theorem::TheoremReport) -> String {
    let mut out = Vec::new();
    out.push(format!("case: {:?}", report.case));
    out.push(format!("lambda: {}", report.lambda));
    if let Some(e) = &report.witness_edge {
        out.push(format!("witness edge: {e}*A(lambda)"));
    }
    if let Some([u, v]) = &report.separated {
        out.push(format!("separated: {u} | {v}"));
    }
    for c in &report.checks {
        let bound = c.bound.map_or(String::new(), |b| format!(" (bound {b})"));
        out.push(format!("  [{}] {}{bound}", if c.pass { "pass" } else { "FAIL" }, c.name));
    }
    for n in &report.notes {
        out.push(format!("  note: {n}"));
    }
    out.join("\n")
}

fn run_check(format: Format, cmd: &CheckCmd) -> Result<u8, CliError> {
    match cmd {
        CheckCmd::Theorem {
            graph,
            lambda,
            pick,
            hom,
            base,
            phi,
            all_separators,
            radius,
            axis_bound,
            budget,
            seed,
        } => {
            let defaults = Config::default();
            let cfg = Config {
                ball_radius: radius.unwrap_or(defaults.ball_radius),
                axis_bound: axis_bound.unwrap_or(defaults.axis_bound),
                vertex_budget: budget_or_env(*budget)?,
                seed: *seed,
            };

            if *all_separators {
                let path = graph.as_ref().ok_or_else(|| CliError::Input("a graph file is required".into()))?;
                let g = load_graph(path)?;
                return run_all_separators(format, &g, &cfg);
            }

            let action = build_action(graph.as_deref(), lambda.as_deref(), pick.as_deref(), hom.as_deref(), base.as_deref(), phi.as_deref())?;
            let report = verify_theorem(&action, &cfg)?;
            emit(format, &serde_json::to_value(&report).expect("report"), &theorem_text(&report));
            Ok(if report.all_checks_pass() { 0 } else { EXIT_CHECK_FAILED })
        }
        CheckCmd::Lemmas { graph, lambda, pick, radius, samples, seed, budget } => {
            let g = load_graph(graph)?;
            let s = make_splitting(&g, lambda, pick.as_deref())?;
            let cfg = LemmaConfig {
                seed: *seed,
                random_pairs: *samples,
                radius: *radius,
                vertex_budget: budget_or_env(*budget)?,
            };
            let report = raag::harness::run_lemma_harness(&s, &cfg)?;
            let text = report
                .checks
                .iter()
                .map(|c| format!("{}: {}/{}", c.name, c.passed, c.tested))
                .collect::<Vec<_>>()
                .join("\n");
            let ok = report.all_passed();
            emit(format, &serde_json::to_value(&report).expect("report"), &text);
            Ok(if ok { 0 } else { EXIT_CHECK_FAILED })
        }
        CheckCmd::Abelian { graph } => {
            let g = load_graph(graph)?;
            let report = abelian_splitting_report(&g);
            let verdict = match report.splits_over_abelian {
                None => "excluded: complete graph".to_string(),
                Some(true) => format!("yes, e.g. over {}", report.cut_cliques[0]),
                Some(false) => "no cut-clique, no abelian splitting".to_string(),
            };
            emit(format, &serde_json::to_value(&report).expect("report"), &verdict);
            Ok(0)
        }
    }
}

fn build_action(
    graph: Option<&Path>,
    lambda: Option<&[String]>,
    pick: Option<&str>,
    hom: Option<&Path>,
    base: Option<&Path>,
    phi: Option<&[i64]>,
) -> Result<Action, CliError> {
    if let Some(hom_path) = hom {
        let base_path = base.ok_or_else(|| CliError::Input("--hom requires --base".into()))?;
        let spec: HomSpec = serde_json::from_str(&read_file(hom_path)?)
            .map_err(|e| CliError::Input(format!("{}: {e}", hom_path.display())))?;
        let hom = RaagHom::from_spec(&spec)?;
        let desc: SplittingDescriptor = serde_json::from_str(&read_file(base_path)?)
            .map_err(|e| CliError::Input(format!("{}: {e}", base_path.display())))?;
        let base = AmalgamSplitting::from_descriptor(hom.target(), &desc)?;
        return Ok(Action::Induced(raag::InducedAction::new(hom, base)?));
    }
    let path = graph.ok_or_else(|| CliError::Input("a graph file is required".into()))?;
    let g = load_graph(path)?;
    if let Some(values) = phi {
        let phi = IntegerVector::from_values(&g, values.to_vec())?;
        return Ok(Action::Line(LineAction::new(&g, phi)?));
    }
    let lambda = lambda.ok_or_else(|| {
        CliError::Input("one of --lambda, --hom, --phi, or --all-separators is required".into())
    })?;
    Ok(Action::Direct(make_splitting(&g, lambda, pick)?))
}

fn run_all_separators(format: Format, g: &Graph, cfg: &Config) -> Result<u8, CliError> {
    let separators = g.minimal_separators()?;
    if separators.is_empty() {
        emit(
            format,
            &json!({ "runs": [], "all_pass": true, "note": "no minimal separators" }),
            "no minimal separators: no direct splitting to check",
        );
        return Ok(0);
    }
    let mut runs = Vec::new();
    let mut lines = Vec::new();
    let mut all_pass = true;
    for lam in &separators {
        let pick = g
            .labels()
            .find(|l| !lam.contains(l))
            .ok_or_else(|| CliError::Input("separator covers every vertex".into()))?;
        let s = AmalgamSplitting::from_separator(g, lam, pick)?;
        let report = verify_theorem(&Action::Direct(s), cfg)?;
        let pass = report.all_checks_pass()
            && report.is_splitting_case()
            && lam.is_subset(&report.lambda);
        all_pass &= pass;
        lines.push(format!(
            "{} -> {:?}, lambda {}, {}",
            lam,
            report.case,
            report.lambda,
            if pass { "pass" } else { "FAIL" }
        ));
        runs.push(json!({
            "separator": lam.to_vec(),
            "case": format!("{:?}", report.case),
            "lambda": report.lambda.to_vec(),
            "pass": pass,
        }));
    }
    emit(format, &json!({ "runs": runs, "all_pass": all_pass }), &lines.join("\n"));
    Ok(if all_pass { 0 } else { EXIT_CHECK_FAILED })
}
