// SPDX-License-Identifier: Apache-2.0

//! The `geodkit` command line. [`run`] does all the work and returns the
//! exit code and both output streams, so it can be driven from tests.
//!
//! Exit codes: 0 when the requested property holds (or the command
//! succeeded), 1 when it fails, 2 for usage or input errors.

use std::io::Read;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use crate::construct::{
    assign_weights, build_diameter2_with_budget, build_diameter4_with_budget, build_levi_with_budget,
    embed_weighted_geodetic, extend_to_antipodal, levi_graph, projective_plane, subdivide, Construction,
    DEFAULT_BUDGET,
};
use crate::error::{Error, Result};
use crate::graph::{parse_graph, serialize_graph, Graph};
use crate::paths::{diameter, oracle_is_antipodal, oracle_is_geodetic};
use crate::random::DEFAULT_SEED;
use crate::recognition::{
    build_bearing_tree, check_weighted, classify_non_tree_edges, extract_stems, recognize,
};
use crate::selftest::run_selftest;
use crate::structure::{
    block_decomposition, claw_free_geodetic_characterization, has_induced_c4_or_k4e, in_floor_geodetic,
    is_locally_connected, labeled_blocks, search_forbidden_even_structure, tree_antipodal_criterion,
    verify_transversal_blocks, ClassCertificate, SearchLimits, TransversalShape,
};
use crate::verdict::{Verdict, Witness};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommandResult {
    pub exit_code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl CommandResult {
    fn ok(stdout: String) -> Self {
        Self::with_code(0, stdout)
    }

    fn with_code(exit_code: i32, stdout: String) -> Self {
        CommandResult {
            exit_code,
            stdout,
            stderr: String::new(),
        }
    }

    fn error(message: impl std::fmt::Display) -> Self {
        CommandResult {
            exit_code: 2,
            stdout: String::new(),
            stderr: format!("geodkit: {message}\n"),
        }
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "geodkit",
    version,
    about = "Recognise, analyse and construct geodetic and antipodal graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide whether a graph is geodetic and antipodal.
    Check(CheckArgs),
    /// Same report as `check`, computed by brute-force path counting.
    Oracle(CheckArgs),
    /// Blocks, class memberships and bearing-tree structure of a graph.
    Analyze(AnalyzeArgs),
    /// Generate graphs.
    Gen {
        #[command(subcommand)]
        what: GenCommand,
    },
    /// Edge-weight operations.
    Weights {
        #[command(subcommand)]
        what: WeightsCommand,
    },
    /// Embed a weighted graph into a weighted geodetic graph.
    Embed {
        /// Edge-list file, or `-` for stdin.
        file: String,
    },
    /// Exhaustive and seeded-random equivalence sweeps.
    Selftest {
        #[arg(long, default_value_t = 5)]
        max_n: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Requirement {
    Geodetic,
    Antipodal,
    Both,
}

#[derive(Args, Debug)]
struct CheckArgs {
    /// Edge-list file, or `-` for stdin.
    file: String,
    /// Use the weighted recogniser even when every weight is one.
    #[arg(long)]
    weighted: bool,
    /// Print a JSON report
    #[arg(long)]
    json: bool,
    /// Use the brute-force oracles instead of the bearing-tree sweep.
    #[arg(long)]
    oracle: bool,
    /// Which property decides the exit code.
    #[arg(long, value_enum, default_value_t = Requirement::Geodetic)]
    require: Requirement,
}

#[derive(Args, Debug)]
struct AnalyzeArgs {
    file: String,
    /// Root of the bearing tree and the transversality report.
    #[arg(long, default_value_t = 0)]
    root: usize,
    /// Print a JSON report
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct FamilyArgs {
    /// Order of the projective plane: 2, 3, 4, 5, 7, 8 or 9.
    #[arg(long)]
    q: usize,
    /// Also print the Hamiltonian cycle as a `# cycle:` comment line.
    #[arg(long)]
    cycle: bool,
    /// Node-expansion limit for the Hamiltonian cycle search.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
}

#[derive(Subcommand, Debug)]
enum GenCommand {
    /// Point/line incidence graph of PG(2, q).
    Levi(FamilyArgs),
    /// Hamiltonian geodetic graph of diameter 4 on (q+1)^3+1 vertices.
    Diam4(FamilyArgs),
    /// Hamiltonian geodetic graph of diameter 2 on 2q^2+2q+1 vertices.
    Diam2(FamilyArgs),
    /// Put k new vertices on every edge.
    Subdivide {
        #[arg(long)]
        k: usize,
        file: String,
    },
    /// Attach a path that makes the graph antipodal.
    ExtendAntipodal { file: String },
}

#[derive(Subcommand, Debug)]
enum WeightsCommand {
    /// Weights under which the graph is both geodetic and antipodal.
    Assign { file: String },
}

/// Runs one command line (`argv[0]` is the program name). `stdin` is read
/// only when a file argument is `-`.
pub fn run<S: AsRef<str>>(argv: &[S], stdin: &mut dyn Read) -> CommandResult {
    let cli = match Cli::try_parse_from(argv.iter().map(|s| s.as_ref())) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                CommandResult {
                    exit_code: 2,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                CommandResult::ok(text)
            };
        }
    };
    let mut input = Input { stdin, used: false };
    match dispatch(cli.command, &mut input) {
        Ok(result) => result,
        Err(e) => CommandResult::error(e),
    }
}

struct Input<'a> {
    stdin: &'a mut dyn Read,
    used: bool,
}

impl Input<'_> {
    fn graph(&mut self, path: &str) -> Result<Graph> {
        let text = if path == "-" {
            if std::mem::replace(&mut self.used, true) {
                return Err(Error::InvalidArgument("stdin can only be read once".into()));
            }
            let mut s = String::new();
            self.stdin
                .read_to_string(&mut s)
                .map_err(|e| Error::InvalidArgument(format!("cannot read stdin: {e}")))?;
            s
        } else {
            std::fs::read_to_string(path)
                .map_err(|e| Error::InvalidArgument(format!("cannot read {path}: {e}")))?
        };
        parse_graph(&text)
    }
}

fn dispatch(command: Command, input: &mut Input) -> Result<CommandResult> {
    match command {
        Command::Check(args) => {
            let oracle = args.oracle;
            check(args, oracle, input)
        }
        Command::Oracle(args) => check(args, true, input),
        Command::Analyze(args) => analyze(args, input),
        Command::Gen { what } => generate(what, input),
        Command::Weights {
            what: WeightsCommand::Assign { file },
        } => Ok(CommandResult::ok(graph_text(&assign_weights(
            &input.graph(&file)?,
        )?))),
        Command::Embed { file } => Ok(CommandResult::ok(graph_text(&embed_weighted_geodetic(
            &input.graph(&file)?,
        )?))),
        Command::Selftest { max_n, seed } => {
            let reports = run_selftest(max_n, seed)?;
            let mut out = String::new();
            for r in &reports {
                out.push_str(&r.line());
                out.push('\n');
            }
            let code = if reports.iter().all(|r| r.passed()) { 0 } else { 1 };
            Ok(CommandResult::with_code(code, out))
        }
    }
}

fn graph_text(g: &Graph) -> String {
    let mut s = serialize_graph(g);
    s.push('\n');
    s
}

struct CheckReport {
    n: usize,
    m: usize,
    diameter: BigUint,
    geodetic: Verdict,
    antipodal: Verdict,
}

fn check(args: CheckArgs, oracle: bool, input: &mut Input) -> Result<CommandResult> {
    let g = input.graph(&args.file)?;
    let report = if oracle {
        CheckReport {
            n: g.vertex_count(),
            m: g.edge_count(),
            geodetic: oracle_is_geodetic(&g)?,
            antipodal: oracle_is_antipodal(&g)?,
            diameter: diameter(&g)?,
        }
    } else if args.weighted || g.is_weighted() {
        let r = check_weighted(&g)?;
        CheckReport {
            n: g.vertex_count(),
            m: g.edge_count(),
            geodetic: r.geodetic,
            antipodal: r.antipodal,
            diameter: r.diameter,
        }
    } else {
        let r = recognize(&g, false)?;
        CheckReport {
            n: g.vertex_count(),
            m: g.edge_count(),
            geodetic: r.geodetic,
            antipodal: r.antipodal,
            diameter: BigUint::from(r.diameter),
        }
    };
    let holds = match args.require {
        Requirement::Geodetic => report.geodetic.holds,
        Requirement::Antipodal => report.antipodal.holds,
        Requirement::Both => report.geodetic.holds && report.antipodal.holds,
    };
    let out = if args.json {
        let mut doc = json!({
            "n": report.n,
            "m": report.m,
            "diameter": number_or_string(&report.diameter),
            "geodetic": report.geodetic.holds,
            "antipodal": report.antipodal.holds,
        });
        if let Some(w) = &report.geodetic.witness {
            doc["witness_geodetic"] = to_value(w);
        }
        if let Some(w) = &report.antipodal.witness {
            doc["witness_antipodal"] = to_value(w);
        }
        pretty(&doc)
    } else {
        let mut out = format!(
            "n          {}\nm          {}\ndiameter   {}\n",
            report.n, report.m, report.diameter
        );
        for (name, v) in [("geodetic", &report.geodetic), ("antipodal", &report.antipodal)] {
            out.push_str(&format!("{name:<10} {}", yes_no(v.holds)));
            if let Some(w) = &v.witness {
                out.push_str(&format!("  ({})", describe(w)));
            }
            out.push('\n');
        }
        out
    };
    Ok(CommandResult::with_code(if holds { 0 } else { 1 }, out))
}

fn number_or_string(x: &BigUint) -> Value {
    match x.to_u64() {
        Some(v) => json!(v),
        None => json!(x.to_string()),
    }
}

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("report types serialise")
}

fn pretty(doc: &Value) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("json values serialise");
    s.push('\n');
    s
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn list(xs: &[usize]) -> String {
    or_none(xs.iter().map(usize::to_string).collect())
}

fn or_none(items: Vec<String>) -> String {
    if items.is_empty() {
        "none".to_string()
    } else {
        items.join(" ")
    }
}

fn describe(w: &Witness) -> String {
    match w {
        Witness::GeodesicPair {
            source,
            target,
            count,
        } => {
            format!("{count} geodesics between {source} and {target}")
        }
        Witness::TwoPredecessors {
            root,
            vertex,
            predecessors: [a, b],
        } => format!("from {root}, vertex {vertex} has shortest-path predecessors {a} and {b}"),
        Witness::Antipodes { vertex, antipodes } => {
            format!("vertex {vertex} has antipodes {}", list(antipodes))
        }
        Witness::InducedSubgraph { vertices } => format!("induced subgraph on {}", list(vertices)),
        Witness::LongestPaths { length, endpoints } => {
            let ends: Vec<String> = endpoints.iter().map(|(a, b)| format!("{a}-{b}")).collect();
            format!("longest paths of length {length}: {}", ends.join(" "))
        }
    }
}

fn analyze(args: AnalyzeArgs, input: &mut Input) -> Result<CommandResult> {
    let g = input.graph(&args.file)?;
    g.require_unweighted("analyze")?;
    if args.root >= g.vertex_count() {
        return Err(Error::VertexOutOfRange {
            vertex: args.root,
            n: g.vertex_count(),
        });
    }
    let decomposition = block_decomposition(&g);
    let blocks = labeled_blocks(&g);
    let claw_free = claw_free_geodetic_characterization(&g)?;
    let floor = in_floor_geodetic(&g)?;
    let forbidden = match search_forbidden_even_structure_within_limits(&g) {
        Some(found) => to_value(&found),
        None => Value::Null,
    };
    let c4_or_diamond = has_induced_c4_or_k4e(&g);
    let locally_connected = is_locally_connected(&g);
    let tree = if g.is_tree() {
        Some(tree_antipodal_criterion(&g)?)
    } else {
        None
    };
    let bearing = build_bearing_tree(&g, args.root)?;
    let (balks, violations) = classify_non_tree_edges(&g, &bearing);
    let stems = extract_stems(&bearing);
    let transversality = verify_transversal_blocks(&g, args.root)?;

    if args.json {
        let doc = json!({
            "n": g.vertex_count(),
            "m": g.edge_count(),
            "cut_vertices": decomposition.cut_vertices,
            "blocks": to_value(&blocks),
            "classes": {
                "claw_free_geodetic": to_value(&claw_free),
                "floor_geodetic": to_value(&floor),
                "forbidden_even_structure": forbidden,
                "induced_c4_or_k4e": c4_or_diamond,
                "locally_connected": locally_connected,
                "tree_antipodal": tree.as_ref().map(to_value),
            },
            "bearing_tree": {
                "root": args.root,
                "tier": bearing.tier,
                "parent": bearing.parent,
                "balks": to_value(&balks),
                "violations": violations,
                "stems": stems.iter().map(|s| s.vertices.clone()).collect::<Vec<_>>(),
            },
            "transversality": to_value(&transversality),
        });
        return Ok(CommandResult::ok(pretty(&doc)));
    }

    let mut out = String::new();
    let mut line = |s: String| {
        out.push_str(&s);
        out.push('\n');
    };
    line(format!("vertices             {}", g.vertex_count()));
    line(format!("edges                {}", g.edge_count()));
    line(format!(
        "cut vertices         {}",
        list(&decomposition.cut_vertices)
    ));
    line(format!("blocks               {}", blocks.len()));
    for b in &blocks {
        let shape = serde_json::to_value(b.shape).unwrap();
        line(format!("  {:<18} {}", shape.as_str().unwrap(), list(&b.vertices)));
    }
    let class_line = |v: &crate::structure::ClassVerdict| match &v.certificate {
        ClassCertificate::ForbiddenSubgraph { vertices } => {
            format!("{}  (induced claw {})", yes_no(v.member), list(vertices))
        }
        ClassCertificate::Blocks { .. } => yes_no(v.member).to_string(),
    };
    line(format!("claw-free geodetic   {}", class_line(&claw_free)));
    line(format!("floor geodetic       {}", class_line(&floor)));
    line(format!(
        "even structure       {}",
        match &forbidden {
            Value::Null => "none found".to_string(),
            v => v.to_string(),
        }
    ));
    line(format!(
        "induced C4 / K4-e    {}",
        c4_or_diamond.map_or("none".to_string(), |q| list(&q))
    ));
    line(format!("locally connected    {}", yes_no(locally_connected)));
    if let Some(t) = &tree {
        line(format!("antipodal tree       {}", yes_no(t.holds)));
    }
    line(format!("bearing tree root    {}", args.root));
    line(format!("  tiers              {}", list(&bearing.tier)));
    let balk_text: Vec<String> = balks
        .iter()
        .map(|b| format!("{}-{}@{}", b.u, b.v, b.tier))
        .collect();
    line(format!("  balks              {}", or_none(balk_text)));
    let cross: Vec<String> = violations.iter().map(|(u, v)| format!("{u}-{v}")).collect();
    line(format!("  cross-tier edges   {}", or_none(cross)));
    line(format!("  stems              {}", stems.len()));
    line(format!(
        "transversality       {}",
        if transversality.applicable {
            "applicable"
        } else {
            "not applicable (stems branch below the root)"
        }
    ));
    for b in &transversality.blocks {
        let shape = match &b.shape {
            TransversalShape::StemSegment { stem } => format!("stem segment of stem {stem}"),
            TransversalShape::Transversal { n, k, l, stems } => {
                format!("transversal n={n} k={k} l={l} stems {}", list(stems))
            }
            TransversalShape::NotTransversal { reason } => format!("not transversal: {reason}"),
        };
        line(format!("  {:<18} {}", list(&b.vertices), shape));
    }
    Ok(CommandResult::ok(out))
}

fn search_forbidden_even_structure_within_limits(g: &Graph) -> Option<crate::structure::EvenStructure> {
    if g.vertex_count() > SearchLimits::default().max_n {
        return None;
    }
    search_forbidden_even_structure(g).ok().flatten()
}

fn construction_text(c: &Construction, with_cycle: bool) -> String {
    let mut s = graph_text(&c.graph);
    if let (true, Some(cycle)) = (with_cycle, &c.hamiltonian_cycle) {
        s.push_str(&format!("# cycle: {}\n", list(cycle)));
    }
    s
}

fn generate(what: GenCommand, input: &mut Input) -> Result<CommandResult> {
    let text = match what {
        GenCommand::Levi(a) if !a.cycle => graph_text(&levi_graph(&projective_plane(a.q)?)),
        GenCommand::Levi(a) => construction_text(&build_levi_with_budget(a.q, a.budget)?, true),
        GenCommand::Diam4(a) => construction_text(&build_diameter4_with_budget(a.q, a.budget)?, a.cycle),
        GenCommand::Diam2(a) => construction_text(&build_diameter2_with_budget(a.q, a.budget)?, a.cycle),
        GenCommand::Subdivide { k, file } => graph_text(&subdivide(&input.graph(&file)?, k)?),
        GenCommand::ExtendAntipodal { file } => graph_text(&extend_to_antipodal(&input.graph(&file)?)?),
    };
    Ok(CommandResult::ok(text))
}
