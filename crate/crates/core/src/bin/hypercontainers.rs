//! Command-line front-end: instance generation, container construction,
//! verification, counting and the Monte Carlo experiment.
//!
//! Exit codes: 0 when every check passes, 1 when a verified guarantee
//! fails, 2 for bad input or a violated precondition.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use sha2::{Digest, Sha256};

use hypercontainers::containers::{
    build_container_family, container_count_bound, parse_family, source_sets, verify_containers,
    BuildOptions, ContainerMap, Source, VerifyOptions,
};
use hypercontainers::exact::{format_rational, parse_rational};
use hypercontainers::instances::{
    ap_hypergraph, blowup_copies_hypergraph, copies_hypergraph, homothetic_hypergraph,
    minimal_degree_constant, poly_ap_hypergraph, two_density, SmallGraph,
};
use hypercontainers::oracle::{self, DEFAULT_EXHAUSTIVE_LIMIT};
use hypercontainers::{Error, Rational, Result, UniformHypergraph};

#[derive(Parser, Debug)]
#[command(name = "hypercontainers", version, about = "Hypergraph containers with brute-force certification")]
struct Cli {
    /// Write the primary output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Emit machine-readable JSON (with the run manifest).
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads for container construction and verification.
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Largest vertex count accepted by exhaustive enumeration.
    #[arg(long, global = true, default_value_t = DEFAULT_EXHAUSTIVE_LIMIT)]
    limit: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generate an instance hypergraph in the text format.
    #[command(subcommand)]
    Gen(GenCommand),
    /// Build containers for the independent sets of a hypergraph.
    Containers(ContainersArgs),
    /// Check a container map against its hypergraph.
    Verify(VerifyArgs),
    /// Count independent sets exactly, or bound the count from a container map.
    #[command(subcommand)]
    Count(CountCommand),
    /// Smallest induced-edge fraction over vertex sets of size at least s.
    Density(DensityArgs),
    /// Monte Carlo estimate of the Szemerédi property of a random subset of [n].
    Mc(McArgs),
    /// Maximum 2-density of a graph, as num/den.
    M2(M2Args),
}

#[derive(Subcommand, Debug)]
enum GenCommand {
    /// k-term arithmetic progressions in [n].
    Ap {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
    },
    /// Progressions {a, a + d^r, …, a + k d^r} in [n].
    Poly {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        r: u32,
    },
    /// Homothetic copies of a configuration in [n]^dim.
    Homothetic {
        /// Points separated by ';', coordinates by ',' (e.g. "0,0;1,0;0,1").
        #[arg(long)]
        config: String,
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        n: u32,
    },
    /// Copies of a graph in the complete t-graph on [n].
    Copies {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        n: u32,
    },
    /// Canonical copies of a graph in its n-fold blow-up.
    Blowup {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        n: u32,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum SourceKind {
    All,
    MaximalClosure,
}

impl SourceKind {
    fn source(self, limit: usize) -> Source {
        match self {
            SourceKind::All => Source::All { limit },
            SourceKind::MaximalClosure => Source::MaximalClosure { limit },
        }
    }

    fn name(self) -> &'static str {
        match self {
            SourceKind::All => "all",
            SourceKind::MaximalClosure => "maximal-closure",
        }
    }
}

#[derive(Args, Debug)]
struct ContainersArgs {
    #[arg(long)]
    input: PathBuf,
    /// Rational in (0, 1), written num/den.
    #[arg(long)]
    p: String,
    /// Degree constant; defaults to the smallest admissible value.
    #[arg(long)]
    c: Option<String>,
    /// Density constant; defaults to the exact value for min-size families.
    #[arg(long)]
    eps: Option<String>,
    /// `min-size:<s>` or `none`.
    #[arg(long)]
    family: String,
    #[arg(long, value_enum, default_value = "all")]
    source: SourceKind,
    /// Return the trivial container for an edgeless hypergraph.
    #[arg(long)]
    allow_edgeless: bool,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    containers: PathBuf,
    /// Independent sets to check; should match the source the map was built from.
    #[arg(long, value_enum, default_value = "all")]
    witnesses: SourceKind,
    /// Seed for sampled consistency pairs.
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Subcommand, Debug)]
enum CountCommand {
    /// Exhaustive count of independent sets by size.
    Brute {
        #[arg(long)]
        input: PathBuf,
        /// Print only the count of this size.
        #[arg(long)]
        m: Option<usize>,
        /// CSV output with columns m,count.
        #[arg(long)]
        csv: bool,
    },
    /// Upper bound Σ_S C(|f(S)|, m - |S|) from a container map.
    Bound {
        #[arg(long)]
        containers: PathBuf,
        #[arg(long)]
        m: Option<usize>,
    },
}

#[derive(Args, Debug)]
struct DensityArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    s: usize,
}

#[derive(Args, Debug)]
struct McArgs {
    #[arg(long)]
    n: u64,
    #[arg(long)]
    p: String,
    #[arg(long)]
    delta: String,
    #[arg(long, default_value_t = 3)]
    k: usize,
    #[arg(long, default_value_t = 100)]
    trials: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args, Debug)]
struct M2Args {
    #[arg(long)]
    graph: PathBuf,
}

/// Everything that determines an output: reruns with equal manifests give
/// byte-identical output.
#[derive(Serialize, Debug, Default)]
struct Manifest {
    command: String,
    params: BTreeMap<String, String>,
    inputs: BTreeMap<String, String>,
    seed: Option<u64>,
    tool_version: String,
}

impl Manifest {
    fn new(command: &str) -> Self {
        Manifest {
            command: command.into(),
            tool_version: format!("hypercontainers {}", env!("CARGO_PKG_VERSION")),
            ..Default::default()
        }
    }

    fn param(mut self, key: &str, value: impl ToString) -> Self {
        self.params.insert(key.into(), value.to_string());
        self
    }

    fn input(mut self, role: &str, bytes: &[u8]) -> Self {
        self.inputs.insert(role.into(), hex::encode(Sha256::digest(bytes)));
        self
    }

    fn comment_lines(&self) -> String {
        let mut out = format!("# command: {}\n", self.command);
        for (k, v) in &self.params {
            out.push_str(&format!("# param {k} = {v}\n"));
        }
        for (k, v) in &self.inputs {
            out.push_str(&format!("# input {k} sha256 {v}\n"));
        }
        if let Some(s) = self.seed {
            out.push_str(&format!("# seed {s}\n"));
        }
        out.push_str(&format!("# tool {}\n", self.tool_version));
        out
    }
}

struct Ctx {
    out: Option<PathBuf>,
    json: bool,
    limit: usize,
}

impl Ctx {
    fn emit(&self, text: &str) -> Result<()> {
        match &self.out {
            Some(path) => write_file(path, text),
            None => {
                print!("{text}");
                Ok(())
            }
        }
    }

    fn emit_json<T: Serialize>(&self, manifest: &Manifest, body: &T) -> Result<()> {
        let value = serde_json::json!({ "manifest": manifest, "result": body });
        let mut text = serde_json::to_string_pretty(&value).expect("serializable");
        text.push('\n');
        self.emit(&text)
    }
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|e| Error::input(format!("cannot write {}: {e}", path.display())))
}

fn read_file(path: &Path) -> Result<Vec<u8>> {
    fs::read(path).map_err(|e| Error::input(format!("cannot read {}: {e}", path.display())))
}

fn read_hypergraph(path: &Path) -> Result<(UniformHypergraph, Vec<u8>)> {
    let bytes = read_file(path)?;
    let text = String::from_utf8(bytes.clone()).map_err(|_| Error::input("input is not UTF-8"))?;
    Ok((UniformHypergraph::parse_text(&text)?, bytes))
}

fn read_graph(path: &Path) -> Result<(SmallGraph, Vec<u8>)> {
    let bytes = read_file(path)?;
    let text = String::from_utf8(bytes.clone()).map_err(|_| Error::input("graph is not UTF-8"))?;
    Ok((SmallGraph::parse_text(&text)?, bytes))
}

fn parse_config(text: &str) -> Result<Vec<Vec<i64>>> {
    text.split(';')
        .map(|point| {
            point
                .split(',')
                .map(|x| {
                    x.trim()
                        .parse::<i64>()
                        .map_err(|_| Error::input(format!("bad coordinate {x:?} in configuration")))
                })
                .collect()
        })
        .collect()
}

fn gen(ctx: &Ctx, cmd: GenCommand) -> Result<i32> {
    let (h, manifest) = match cmd {
        GenCommand::Ap { n, k } => (
            ap_hypergraph(n, k)?,
            Manifest::new("gen ap").param("n", n).param("k", k),
        ),
        GenCommand::Poly { n, k, r } => (
            poly_ap_hypergraph(n, k, r)?,
            Manifest::new("gen poly").param("n", n).param("k", k).param("r", r),
        ),
        GenCommand::Homothetic { config, dim, n } => (
            homothetic_hypergraph(&parse_config(&config)?, dim, n)?,
            Manifest::new("gen homothetic")
                .param("config", &config)
                .param("dim", dim)
                .param("n", n),
        ),
        GenCommand::Copies { graph, n } => {
            let (g, bytes) = read_graph(&graph)?;
            (
                copies_hypergraph(&g, n)?,
                Manifest::new("gen copies").param("n", n).input("graph", &bytes),
            )
        }
        GenCommand::Blowup { graph, n } => {
            let (g, bytes) = read_graph(&graph)?;
            (
                blowup_copies_hypergraph(&g, n)?,
                Manifest::new("gen blowup").param("n", n).input("graph", &bytes),
            )
        }
    };
    ctx.emit(&format!("{}{}", manifest.comment_lines(), h.to_text()))?;
    Ok(0)
}

fn rational_arg(name: &str, text: &str) -> Result<Rational> {
    parse_rational(text).map_err(|e| Error::input(format!("--{name}: {e}")))
}

fn family_size(spec: &str) -> Option<usize> {
    spec.trim().strip_prefix("min-size:")?.trim().parse().ok()
}

fn containers(ctx: &Ctx, args: ContainersArgs) -> Result<i32> {
    let started = Instant::now();
    let (h, bytes) = read_hypergraph(&args.input)?;
    let p = rational_arg("p", &args.p)?;
    let c = match &args.c {
        Some(c) => rational_arg("c", c)?,
        None => minimal_degree_constant(&h, &p)?,
    };
    let eps = match (&args.eps, family_size(&args.family)) {
        (Some(e), _) => rational_arg("eps", e)?,
        (None, Some(s)) => {
            let eps = oracle::density_epsilon(&h, s, ctx.limit)?;
            if eps == Rational::from_integer(0.into()) {
                return Err(Error::precondition(format!(
                    "ε = 0 at this size: some {s}-set induces no edge; choose s above the independence number"
                )));
            }
            eps
        }
        (None, None) => Rational::from_integer(1.into()),
    };
    let family = parse_family(&args.family, h.vertex_count(), eps.clone())?;
    let opts = BuildOptions {
        verify_density: true,
        allow_edgeless: args.allow_edgeless,
    };
    let map = build_container_family(&h, &family, &c, &p, &args.source.source(ctx.limit), opts, None)?;
    let manifest = Manifest::new("containers")
        .param("p", format_rational(&p))
        .param("c", format_rational(&c))
        .param("eps", format_rational(&eps))
        .param("family", family.describe())
        .param("source", args.source.name())
        .param("limit", ctx.limit)
        .input("hypergraph", &bytes);
    ctx.emit(&map.to_json())?;
    if let Some(out) = &ctx.out {
        let mut side = out.clone().into_os_string();
        side.push(".manifest.json");
        let mut text = serde_json::to_string_pretty(&manifest).expect("serializable");
        text.push('\n');
        write_file(Path::new(&side), &text)?;
    }
    eprintln!(
        "{} records built in {} ms",
        map.records.len(),
        started.elapsed().as_millis()
    );
    Ok(0)
}

fn load_map(path: &Path) -> Result<(ContainerMap, Vec<u8>)> {
    let bytes = read_file(path)?;
    let text = String::from_utf8(bytes.clone()).map_err(|_| Error::input("container map is not UTF-8"))?;
    Ok((ContainerMap::from_json(&text)?, bytes))
}

fn verify(ctx: &Ctx, args: VerifyArgs) -> Result<i32> {
    let (h, hbytes) = read_hypergraph(&args.input)?;
    let (map, mbytes) = load_map(&args.containers)?;
    let family = map.family(h.vertex_count())?;
    let sets = source_sets(
        &h,
        &family,
        &map.params.c,
        &map.params.p,
        &args.witnesses.source(ctx.limit),
        BuildOptions::default(),
    )?;
    let opts = VerifyOptions {
        seed: args.seed,
        ..VerifyOptions::default()
    };
    let report = verify_containers(&h, &map, &sets, opts)?;
    let manifest = Manifest::new("verify")
        .param("witnesses", args.witnesses.name())
        .param("limit", ctx.limit)
        .input("hypergraph", &hbytes)
        .input("containers", &mbytes);
    let manifest = Manifest {
        seed: Some(args.seed),
        ..manifest
    };
    if ctx.json {
        ctx.emit_json(&manifest, &report)?;
    } else {
        ctx.emit(&report.summary())?;
    }
    Ok(if report.passed() { 0 } else { 1 })
}

fn count(ctx: &Ctx, cmd: CountCommand) -> Result<i32> {
    match cmd {
        CountCommand::Brute { input, m, csv } => {
            let (h, bytes) = read_hypergraph(&input)?;
            let report = oracle::count_independent_sets(&h, ctx.limit)?;
            eprintln!("enumerated in {} ms", report.wall_time_ms);
            let manifest = Manifest::new("count brute")
                .param("limit", ctx.limit)
                .input("hypergraph", &bytes);
            match m {
                Some(m) => {
                    let manifest = manifest.param("m", m);
                    if ctx.json {
                        ctx.emit_json(&manifest, &serde_json::json!({ "m": m, "count": report.count(m).to_string() }))?;
                    } else {
                        ctx.emit(&format!("{}\n", report.count(m)))?;
                    }
                }
                None if csv => ctx.emit(&report.to_csv()?)?,
                None if ctx.json => ctx.emit_json(&manifest, &report)?,
                None => {
                    let mut text = String::new();
                    for (m, c) in report.counts.iter().enumerate() {
                        text.push_str(&format!("{m} {c}\n"));
                    }
                    ctx.emit(&text)?;
                }
            }
            Ok(0)
        }
        CountCommand::Bound { containers, m } => {
            let (map, bytes) = load_map(&containers)?;
            let manifest = Manifest::new("count bound").input("containers", &bytes);
            let top = map
                .records
                .iter()
                .map(|r| r.fingerprint.len() + r.container.len())
                .max()
                .unwrap_or(0);
            let sizes: Vec<usize> = match m {
                Some(m) => vec![m],
                None => (0..=top).collect(),
            };
            let bounds: Vec<(usize, String)> = sizes
                .iter()
                .map(|&m| (m, container_count_bound(&map, m).to_string()))
                .collect();
            if ctx.json {
                let body: Vec<_> = bounds
                    .iter()
                    .map(|(m, b)| serde_json::json!({ "m": m, "bound": b }))
                    .collect();
                ctx.emit_json(&manifest, &body)?;
            } else if m.is_some() {
                ctx.emit(&format!("{}\n", bounds[0].1))?;
            } else {
                let text: String = bounds.iter().map(|(m, b)| format!("{m} {b}\n")).collect();
                ctx.emit(&text)?;
            }
            Ok(0)
        }
    }
}

fn density(ctx: &Ctx, args: DensityArgs) -> Result<i32> {
    let (h, bytes) = read_hypergraph(&args.input)?;
    let eps = oracle::density_epsilon(&h, args.s, ctx.limit)?;
    let manifest = Manifest::new("density")
        .param("s", args.s)
        .input("hypergraph", &bytes);
    let text = format_rational(&eps);
    if ctx.json {
        let zero = eps == Rational::from_integer(0.into());
        ctx.emit_json(&manifest, &serde_json::json!({ "s": args.s, "epsilon": text, "zero_at_this_size": zero }))?;
    } else {
        ctx.emit(&format!("{text}\n"))?;
    }
    Ok(0)
}

fn mc(ctx: &Ctx, args: McArgs) -> Result<i32> {
    let p = rational_arg("p", &args.p)?;
    let delta = rational_arg("delta", &args.delta)?;
    let est = oracle::mc_szemeredi(args.n, &p, &delta, args.k, args.trials, args.seed)?;
    let manifest = Manifest {
        seed: Some(args.seed),
        ..Manifest::new("mc")
            .param("n", args.n)
            .param("p", format_rational(&p))
            .param("delta", format_rational(&delta))
            .param("k", args.k)
            .param("trials", args.trials)
    };
    if ctx.json {
        ctx.emit_json(&manifest, &est)?;
    } else {
        ctx.emit(&format!("{} ({} of {} trials)\n", est.estimate, est.successes, est.trials))?;
    }
    Ok(0)
}

fn m2(ctx: &Ctx, args: M2Args) -> Result<i32> {
    let (g, bytes) = read_graph(&args.graph)?;
    let d = two_density(&g)?;
    let manifest = Manifest::new("m2").input("graph", &bytes);
    if ctx.json {
        ctx.emit_json(&manifest, &serde_json::json!({ "m2": format_rational(&d) }))?;
    } else {
        ctx.emit(&format!("{}\n", format_rational(&d)))?;
    }
    Ok(0)
}

fn run(cli: Cli) -> Result<i32> {
    if let Some(n) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| Error::input(format!("--threads: {e}")))?;
    }
    let ctx = Ctx {
        out: cli.out,
        json: cli.json,
        limit: cli.limit,
    };
    match cli.command {
        Command::Gen(cmd) => gen(&ctx, cmd),
        Command::Containers(args) => containers(&ctx, args),
        Command::Verify(args) => verify(&ctx, args),
        Command::Count(cmd) => count(&ctx, cmd),
        Command::Density(args) => density(&ctx, args),
        Command::Mc(args) => mc(&ctx, args),
        Command::M2(args) => m2(&ctx, args),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

