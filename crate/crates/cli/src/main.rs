mod report;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use geodesic_hull::transforms::random;
use geodesic_hull::*;

use report::Report;

#[derive(Parser)]
#[command(name = "ghull", version, about = "Geodesic convexity in oriented graphs")]
struct Cli {
    /// Seed for every random choice.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Extreme vertices, class flags and a distance summary.
    Analyze {
        path: PathBuf,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Minimum or constructed hull and geodetic sets.
    Solve(SolveArgs),
    /// Write a named or random instance.
    Generate(GenerateArgs),
    /// Apply a graph transformation.
    Transform(TransformArgs),
    /// Build set-cover gadgets and check the cover/geodetic equivalence.
    Reduce(ReduceArgs),
    /// Check a vertex set or labeling against a graph.
    Verify(VerifyArgs),
}

#[derive(Args)]
#[group(id = "objective", required = true, multiple = false)]
struct ObjectiveFlags {
    #[arg(long)]
    hull: bool,
    #[arg(long)]
    geodetic: bool,
}

#[derive(Args)]
#[group(id = "strategy", required = true, multiple = false)]
struct StrategyFlags {
    #[arg(long)]
    exact: bool,
    #[arg(long)]
    greedy: bool,
    #[arg(long)]
    cactus: bool,
    #[arg(long)]
    tournament: bool,
    /// Partition file with lines `stable: ...` and `clique: ...`.
    #[arg(long, value_name = "PARTITION")]
    split: Option<PathBuf>,
}

#[derive(Args)]
struct SolveArgs {
    path: PathBuf,
    #[command(flatten)]
    objective: ObjectiveFlags,
    #[command(flatten)]
    strategy: StrategyFlags,
    /// Exhaustive search limit on non-extreme vertices.
    #[arg(long, default_value_t = SolverConfig::default().max_free)]
    max_free: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    TransitiveTournament,
    DirectedCycle,
    TightExample,
    RandomOrientation,
    RandomTournament,
    RandomCactus,
    RandomBipartite,
    RandomSplit,
    RandomTree,
}

#[derive(Args)]
struct GenerateArgs {
    kind: Kind,
    #[arg(long)]
    k: Option<usize>,
    /// Vertex count; the first side for bipartite graphs, the stable side for split graphs.
    #[arg(long)]
    n: Option<usize>,
    /// Second side for bipartite graphs, clique size for split graphs.
    #[arg(long)]
    n2: Option<usize>,
    #[arg(long)]
    p: Option<f64>,
    #[arg(long)]
    out: PathBuf,
    #[arg(long)]
    dot: Option<PathBuf>,
}

#[derive(Args)]
#[group(id = "transform", required = true, multiple = false)]
struct TransformFlags {
    #[arg(long)]
    c4: bool,
    #[arg(long, value_name = "GRAPH")]
    lexprod: Option<PathBuf>,
    #[arg(long, value_name = "LABELS")]
    double: Option<PathBuf>,
}

#[derive(Args)]
struct TransformArgs {
    path: PathBuf,
    #[command(flatten)]
    how: TransformFlags,
    #[arg(long)]
    out: PathBuf,
    #[arg(long)]
    dot: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Target {
    Bipartite,
    Split,
    Cobipartite,
}

#[derive(Args)]
struct ReduceArgs {
    path: PathBuf,
    #[arg(long, requires = "out", required_unless_present = "verify")]
    target: Option<Target>,
    /// Compare the cover optimum with the geodetic number of every gadget.
    #[arg(long)]
    verify: bool,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, requires = "target")]
    dot: Option<PathBuf>,
}

#[derive(Args)]
#[command(group(ArgGroup::new("check").required(true)))]
struct VerifyArgs {
    path: PathBuf,
    #[arg(long, value_name = "S", group = "check")]
    hullset: Option<String>,
    #[arg(long, value_name = "S", group = "check")]
    geodeticset: Option<String>,
    #[arg(long, value_name = "S", group = "check")]
    coconvex: Option<String>,
    #[arg(long, value_name = "LABELS", group = "check")]
    labeling: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((report, ok)) => {
            print!("{}", report.render());
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}

fn run(cli: &Cli) -> Result<(Report, bool)> {
    match &cli.command {
        Command::Analyze { path, dot } => analyze(cli.seed, path, dot.as_deref()),
        Command::Solve(a) => solve_cmd(cli.seed, a),
        Command::Generate(a) => generate(cli.seed, a),
        Command::Transform(a) => transform(cli.seed, a),
        Command::Reduce(a) => reduce(cli.seed, a),
        Command::Verify(a) => verify(cli.seed, a),
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn write(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).with_context(|| format!("cannot write {}", path.display()))
}

fn sidecar(path: &Path, ext: &str) -> PathBuf {
    let mut s = path.as_os_str().to_owned();
    s.push(ext);
    PathBuf::from(s)
}

fn load_oriented(path: &Path) -> Result<OrientedGraph> {
    OrientedGraph::parse(&read(path)?).with_context(|| format!("in {}", path.display()))
}

fn load_undirected(path: &Path) -> Result<UndirectedGraph> {
    UndirectedGraph::parse(&read(path)?).with_context(|| format!("in {}", path.display()))
}

/// Comma-separated 0-based indices; the empty string is the empty set.
fn parse_set(text: &str, n: usize) -> Result<VertexSet> {
    let mut s = VertexSet::empty(n);
    for token in text.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let v: usize = token.parse().map_err(|_| anyhow!("invalid vertex {token:?}"))?;
        if v >= n {
            bail!(Error::VertexOutOfRange { vertex: v, n });
        }
        if !s.insert(v) {
            bail!("vertex {v} listed twice");
        }
    }
    Ok(s)
}

fn parse_partition(text: &str, n: usize) -> Result<(VertexSet, VertexSet)> {
    let (mut stable, mut clique) = (None, None);
    for (i, line) in text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty()) {
        let (key, value) = line
            .split_once(':')
            .ok_or_else(|| Error::Parse { line: i + 1, message: "expected \"key: vertices\"".into() })?;
        let slot = match key.trim() {
            "stable" => &mut stable,
            "clique" => &mut clique,
            other => bail!(Error::Parse { line: i + 1, message: format!("unknown key {other:?}") }),
        };
        if slot.is_some() {
            bail!(Error::Parse { line: i + 1, message: format!("{} given twice", key.trim()) });
        }
        *slot = Some(parse_set(value, n).with_context(|| format!("line {}", i + 1))?);
    }
    match (stable, clique) {
        (Some(s), Some(c)) => Ok((s, c)),
        _ => bail!("partition file needs both a stable and a clique line"),
    }
}

fn partition_text(a: &VertexSet, b: &VertexSet, names: [&str; 2]) -> String {
    let join = |s: &VertexSet| s.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",");
    format!("{}: {}\n{}: {}\n", names[0], join(a), names[1], join(b))
}

fn graph_stats(r: &mut Report, d: &OrientedGraph) {
    r.instance(&d.to_text());
    r.put("n", d.n());
    r.put("m", d.arc_count());
}

fn analyze(seed: u64, path: &Path, dot: Option<&Path>) -> Result<(Report, bool)> {
    let d = load_oriented(path)?;
    let mut r = Report::new("analyze", seed);
    graph_stats(&mut r, &d);
    let f = structural_flags(&d);
    r.put("tournament", f.is_tournament);
    r.put("dag", f.is_dag);
    r.put("bipartite", f.is_bipartite_underlying);
    r.put("cactus", f.is_cactus);
    r.put("connected", f.is_connected);
    let kinds = extreme_vertices(&d);
    r.put("ext", extreme_set(&d));
    r.list(
        "ext_kinds",
        kinds
            .iter()
            .enumerate()
            .filter(|(_, k)| k.is_extreme())
            .map(|(v, k)| format!("{v}:{}", k.as_str())),
    );
    let dist = all_pairs_distances(&d);
    r.put("max_distance", dist.max_finite());
    r.put("unreachable_pairs", dist.unreachable_pairs());
    if let Some(p) = dot {
        write(p, &d.to_dot())?;
    }
    Ok((r, true))
}

fn objective(flags: &ObjectiveFlags) -> Objective {
    if flags.hull {
        Objective::Hull
    } else {
        Objective::Geodetic
    }
}

fn put_bound(r: &mut Report, cert: &BoundCertificate) {
    r.put("size", cert.hull_set.len());
    r.put("set", &cert.hull_set);
    r.put("ext_count", cert.ext_count);
    r.put("bound", cert.bound_value);
    r.put("steps", cert.trace.len());
    for (i, s) in cert.trace.iter().enumerate() {
        let mut added = s.added.clone();
        added.sort_unstable();
        r.put(
            &format!("step.{i}"),
            format!(
                "target={} added={:?} closure={}->{} set_size={}",
                s.target, added, s.closure_before, s.closure_after, s.set_size
            )
            .replace(", ", ","),
        );
    }
}

fn solve_cmd(seed: u64, a: &SolveArgs) -> Result<(Report, bool)> {
    let d = load_oriented(&a.path)?;
    let obj = objective(&a.objective);
    let st = &a.strategy;
    let strategy = if st.exact {
        "exact"
    } else if st.greedy {
        "greedy"
    } else if st.cactus {
        "cactus"
    } else if st.tournament {
        "tournament"
    } else {
        "split"
    };
    let mut r = Report::new("solve", seed);
    graph_stats(&mut r, &d);
    r.put("objective", obj.as_str());
    r.put("strategy", strategy);
    let constructive = |name: &str| -> Result<()> {
        if obj == Objective::Geodetic {
            bail!("the {name} strategy only constructs hull sets");
        }
        Ok(())
    };
    let set = match strategy {
        "exact" => {
            let res = solve(&d, obj, &SolverConfig { max_free: a.max_free })?;
            r.put("size", res.optimum);
            r.put("set", &res.witness);
            r.put("nodes_explored", res.nodes_explored);
            res.witness
        }
        "greedy" => {
            constructive("greedy")?;
            let cert = greedy_hull_set(&d);
            put_bound(&mut r, &cert);
            cert.hull_set
        }
        "tournament" => {
            constructive("tournament")?;
            let cert = tournament_hull_set(&d)?;
            put_bound(&mut r, &cert);
            cert.hull_set
        }
        "split" => {
            constructive("split")?;
            let part_path = st.split.as_ref().expect("split strategy has a partition");
            let (stable, clique) = parse_partition(&read(part_path)?, d.n())
                .with_context(|| format!("in {}", part_path.display()))?;
            let cert = split_hull_set(&d, &stable, &clique)?;
            put_bound(&mut r, &cert);
            cert.hull_set
        }
        _ => {
            let g = d.underlying();
            let sol = if g.is_connected() && g.edge_count() + 1 == d.n() {
                tree_solution(&d)?
            } else if obj == Objective::Hull {
                min_hull_set_cactus(&d)?
            } else {
                min_geodetic_set_cactus(&d)?
            };
            r.put("size", sol.set.len());
            r.put("set", &sol.set);
            r.put("ext_count", sol.ext_count);
            r.put("lower_bound", sol.lower_bound());
            r.put("degenerate", sol.degenerate);
            r.put("certificates_verified", verify_certificates(&d, &sol));
            r.list("cycles", sol.cycles.iter().map(|c| c.class.as_str()));
            for (i, c) in sol.certificates.iter().enumerate() {
                let kind = match c.kind {
                    CertificateKind::CoConvex => "coconvex",
                    CertificateKind::Uncovered => "uncovered",
                };
                let chosen = sol.chosen[i];
                r.put(
                    &format!("certificate.{i}"),
                    format!("{kind} cycles={:?} set={} region={} chosen={chosen}", c.cycles, c.set, c.region)
                        .replace(", ", ","),
                );
            }
            sol.set
        }
    };
    let ok = match obj {
        Objective::Hull => is_hull_set(&d, &set),
        Objective::Geodetic => is_geodetic_set(&d, &set),
    };
    r.put("verified", ok);
    Ok((r, ok))
}

fn need<T: Copy>(value: Option<T>, name: &str) -> Result<T> {
    value.ok_or_else(|| anyhow!(Error::BadParameter(format!("--{name} is required for this kind"))))
}

fn generate(seed: u64, a: &GenerateArgs) -> Result<(Report, bool)> {
    let mut partition = None;
    let d = match a.kind {
        Kind::TransitiveTournament => transitive_tournament(need(a.k, "k")?)?,
        Kind::DirectedCycle => directed_cycle(need(a.k, "k")?)?,
        Kind::TightExample => tight_example(need(a.k, "k")?)?,
        Kind::RandomOrientation => random::random_oriented_graph(need(a.n, "n")?, need(a.p, "p")?, seed)?,
        Kind::RandomTournament => random::random_tournament(need(a.n, "n")?, seed),
        Kind::RandomCactus => random::random_cactus(need(a.n, "n")?, seed)?,
        Kind::RandomBipartite => {
            random::random_bipartite(need(a.n, "n")?, need(a.n2, "n2")?, need(a.p, "p")?, seed)?
        }
        Kind::RandomSplit => {
            let (d, stable, clique) =
                random::random_split(need(a.n, "n")?, need(a.n2, "n2")?, need(a.p, "p")?, seed)?;
            partition = Some(partition_text(&stable, &clique, ["stable", "clique"]));
            d
        }
        Kind::RandomTree => random::random_oriented_tree(need(a.n, "n")?, seed)?,
    };
    let mut r = Report::new("generate", seed);
    graph_stats(&mut r, &d);
    r.put("kind", a.kind.to_possible_value().expect("named kind").get_name());
    write(&a.out, &d.to_text())?;
    r.put("out", a.out.display());
    if let Some(text) = partition {
        let p = sidecar(&a.out, ".part");
        write(&p, &text)?;
        r.put("partition", p.display());
    }
    if let Some(p) = &a.dot {
        write(p, &d.to_dot())?;
    }
    Ok((r, true))
}

fn c4_map_text(map: &C4Mapping) -> String {
    (0..map.total_count())
        .map(|x| match map.role(x) {
            C4Role::Base(v) => format!("{x} base:{v}\n"),
            C4Role::Subdivision(i, j) => format!("{x} subdivision:{i},{j}\n"),
        })
        .collect()
}

fn transform(seed: u64, a: &TransformArgs) -> Result<(Report, bool)> {
    let mut r = Report::new("transform", seed);
    let (d, map, extra) = if a.how.c4 {
        let g = load_undirected(&a.path)?;
        r.instance(&g.to_text());
        r.put("transform", "c4");
        let (d, map) = orient_c4(&g);
        (d, c4_map_text(&map), None)
    } else if let Some(other) = &a.how.lexprod {
        let d1 = load_oriented(&a.path)?;
        let d2 = load_oriented(other)?;
        r.instance(&format!("{}{}", d1.to_text(), d2.to_text()));
        r.put("transform", "lexprod");
        let n2 = d2.n();
        let map = (0..d1.n() * n2).map(|x| format!("{x} pair:{},{}\n", x / n2, x % n2)).collect();
        (lex_product(&d1, &d2), map, None)
    } else {
        let labels_path = a.how.double.as_ref().expect("one transform is selected");
        let g = load_undirected(&a.path)?;
        let l = HypercubeLabeling::parse(&read(labels_path)?)
            .with_context(|| format!("in {}", labels_path.display()))?;
        r.instance(&format!("{}{}", g.to_text(), l.to_text()));
        r.put("transform", "double");
        let (d, map, doubled) = doubling_labels(&g, &l)?;
        r.put("dimension", doubled.dim());
        (d, c4_map_text(&map), Some(doubled.to_text()))
    };
    r.put("n", d.n());
    r.put("m", d.arc_count());
    write(&a.out, &d.to_text())?;
    r.put("out", a.out.display());
    let map_path = sidecar(&a.out, ".map");
    write(&map_path, &map)?;
    r.put("mapping", map_path.display());
    if let Some(text) = extra {
        let p = sidecar(&a.out, ".labels");
        write(&p, &text)?;
        r.put("labels", p.display());
    }
    if let Some(p) = &a.dot {
        write(p, &d.to_dot())?;
    }
    Ok((r, true))
}

fn reduce(seed: u64, a: &ReduceArgs) -> Result<(Report, bool)> {
    let inst = SetCoverInstance::parse(&read(&a.path)?).with_context(|| format!("in {}", a.path.display()))?;
    let mut r = Report::new("reduce", seed);
    r.instance(&inst.to_text());
    r.put("universe", inst.universe_size());
    r.put("sets", inst.family().len());
    r.put("k", inst.budget());
    if let Some(target) = a.target {
        let kind = match target {
            Target::Bipartite => GadgetKind::BipartiteDag,
            Target::Split => GadgetKind::Split,
            Target::Cobipartite => GadgetKind::Cobipartite,
        };
        let g = build_gadget(&inst, kind);
        let out = a.out.as_ref().expect("clap requires --out with --target");
        r.put("target", kind.as_str());
        r.put("n", g.graph.n());
        r.put("m", g.graph.arc_count());
        r.put("threshold", g.threshold);
        write(out, &g.graph.to_text())?;
        r.put("out", out.display());
        let map_path = sidecar(out, ".map");
        write(&map_path, &g.mapping.to_text())?;
        r.put("mapping", map_path.display());
        if let Some((x, y)) = &g.partition {
            let names = if kind == GadgetKind::Split { ["stable", "clique"] } else { ["first", "second"] };
            let p = sidecar(out, ".part");
            write(&p, &partition_text(x, y, names))?;
            r.put("partition", p.display());
        }
        if let Some(p) = &a.dot {
            write(p, &g.graph.to_dot())?;
        }
    }
    let mut ok = true;
    if a.verify {
        let rep = verify_equivalence(&inst)?;
        r.put("optcover", rep.optcover);
        r.put("ogn", format!("{}/{}/{}", rep.ogn_bipartite, rep.ogn_split, rep.ogn_cobipartite));
        r.put("equivalence", rep.holds());
        ok = rep.holds();
    }
    Ok((r, ok))
}

fn verify(seed: u64, a: &VerifyArgs) -> Result<(Report, bool)> {
    let mut r = Report::new("verify", seed);
    if let Some(lp) = &a.labeling {
        let g = load_undirected(&a.path)?;
        let l = HypercubeLabeling::parse(&read(lp)?).with_context(|| format!("in {}", lp.display()))?;
        r.instance(&format!("{}{}", g.to_text(), l.to_text()));
        r.put("check", "labeling");
        let ok = l.len() == g.n() && verify_isometric_labeling(&g, &l);
        r.put("result", if ok { "pass" } else { "fail" });
        if !ok {
            let reason = if l.len() != g.n() {
                format!("{} labels for {} vertices", l.len(), g.n())
            } else {
                "hamming distances differ from graph distances".into()
            };
            r.put("reason", reason);
        }
        return Ok((r, ok));
    }
    let d = load_oriented(&a.path)?;
    graph_stats(&mut r, &d);
    let (check, text) = match (&a.hullset, &a.geodeticset, &a.coconvex) {
        (Some(s), _, _) => ("hullset", s),
        (_, Some(s), _) => ("geodeticset", s),
        (_, _, Some(s)) => ("coconvex", s),
        _ => unreachable!("clap requires one check"),
    };
    let s = parse_set(text, d.n())?;
    r.put("check", check);
    r.put("set", &s);
    let (ok, reason) = match check {
        "hullset" => {
            let h = hull(&d, &s);
            (h.is_full(), format!("hull misses {}", h.complement()))
        }
        "geodeticset" => {
            let i = interval(&d, &s);
            (i.is_full(), format!("interval misses {}", i.complement()))
        }
        _ => {
            let leak = interval(&d, &s.complement()).intersection(&s);
            (is_coconvex(&d, &s), format!("geodesics of the complement pass through {leak}"))
        }
    };
    r.put("result", if ok { "pass" } else { "fail" });
    if !ok {
        r.put("reason", reason);
    }
    Ok((r, ok))
}
