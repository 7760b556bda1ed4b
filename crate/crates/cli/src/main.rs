use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use log::info;
use nugraph::aut::{automorphism_group_with, OrderedPartition};
use nugraph::clique::{census, maximal_cliques_capped};
use nugraph::graph::{build_gamma, build_nu, TangentGraph};
use nugraph::oracle::selftest;
use nugraph::srg::{measure_srg, verify_srg_identity, NotSrg};
use nugraph::verify::{tangent_action, theorem1};
use nugraph::{
    expected_complement_params, expected_params, spectrum_from_params, to_dimacs, to_graph6, Error, Permutation,
    SrgParams,
};
use serde::Serialize;
use serde_json::Value;

const SCHEMA_VERSION: u32 = 1;

#[derive(Parser)]
#[command(name = "nugraph", version, about = "Hermitian tangent graphs NU(n+1, q^2) and their automorphism groups")]
struct Cli {
    /// Worker threads (default: all cores). Output does not depend on it.
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Largest vertex count accepted by automorphism and clique searches.
    #[arg(long, global = true, default_value_t = nugraph::aut::DEFAULT_VERTEX_CAP)]
    max_vertices: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Graph6,
    Dimacs,
}

#[derive(Subcommand)]
enum Command {
    /// Build a graph and write it to a file.
    Build {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        q: u64,
        /// Use every point of PG(n, q²), not only the non-isotropic ones.
        #[arg(long)]
        gamma: bool,
        #[arg(long)]
        complement: bool,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, value_enum)]
        format: Format,
    },
    /// Expected and measured strongly regular parameters, and the spectrum.
    Params {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        q: u64,
    },
    /// Maximal clique census of NU(3, q²).
    Cliques {
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long)]
        q: u64,
    },
    /// Automorphism group order, generators and vertex orbits.
    Aut {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        q: u64,
        #[arg(long)]
        gamma: bool,
    },
    /// Compare Aut(NU(3, q²)) with PΓU(3, q), or with S₃≀S₄ at q = 2.
    Theorem1 {
        #[arg(long)]
        q: u64,
    },
    /// Run the brute-force oracle suites.
    Selftest {
        #[arg(long, default_value_t = 20240601)]
        seed: u64,
    },
}

enum Failure {
    Verification,
    Usage(String),
    Cap(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        if e.is_resource_cap() {
            Failure::Cap(e.to_string())
        } else {
            Failure::Usage(e.to_string())
        }
    }
}

macro_rules! from_error {
    ($($t:ty),*) => {$(
        impl From<$t> for Failure {
            fn from(e: $t) -> Failure {
                Error::from(e).into()
            }
        }
    )*};
}
from_error!(nugraph::AutError, nugraph::clique::CliqueError, nugraph::PermError);

#[derive(Serialize)]
struct Params {
    v: u64,
    k: u64,
    lambda: u64,
    mu: u64,
}

impl From<SrgParams> for Params {
    fn from(p: SrgParams) -> Params {
        Params {
            v: p.v,
            k: p.k,
            lambda: p.lambda,
            mu: p.mu,
        }
    }
}

#[derive(Serialize)]
struct Comparison {
    expected: Params,
    measured: Option<Params>,
    measure_error: Option<String>,
    identity_holds: bool,
    #[serde(rename = "match")]
    matches: bool,
}

fn compare(g: &nugraph::Graph, expected: SrgParams) -> Result<Comparison, Failure> {
    let measured = measure_srg(g);
    let identity_holds = verify_srg_identity(g, &expected).map_err(Error::from)?;
    let matches = measured.as_ref().ok() == Some(&expected) && identity_holds;
    Ok(Comparison {
        expected: expected.into(),
        measured: measured.as_ref().ok().map(|&p| p.into()),
        measure_error: measured.as_ref().err().map(NotSrg::to_string),
        identity_holds,
        matches,
    })
}

fn perm_json(p: &Permutation) -> Value {
    serde_json::json!({ "images": p.images(), "cycles": p.cycle_string() })
}

fn vertex_labels(tg: &TangentGraph) -> Vec<Vec<u32>> {
    tg.graph
        .labels()
        .map(|ls| ls.iter().map(|p| p.coords.iter().map(|c| c.0).collect()).collect())
        .unwrap_or_default()
}

fn tangent_graph(n: usize, q: u64, gamma: bool) -> Result<TangentGraph, Failure> {
    info!("building {} for n = {n}, q = {q}", if gamma { "Gamma" } else { "NU" });
    Ok(if gamma { build_gamma(n, q)? } else { build_nu(n, q)? })
}

fn emit<T: Serialize>(report: &T) {
    let text = serde_json::to_string_pretty(report).expect("reports serialize");
    // A closed pipe (e.g. `| head`) is not an error worth a panic.
    let _ = writeln!(std::io::stdout().lock(), "{text}");
}

fn run(cli: Cli) -> Result<(), Failure> {
    let cap = cli.max_vertices;
    match cli.command {
        Command::Build {
            n,
            q,
            gamma,
            complement,
            out,
            format,
        } => {
            let tg = tangent_graph(n, q, gamma)?;
            let g = if complement { tg.graph.complement() } else { tg.graph.clone() };
            let text = match format {
                Format::Graph6 => to_graph6(&g) + "\n",
                Format::Dimacs => to_dimacs(&g),
            };
            fs::write(&out, text).map_err(|e| Failure::Usage(format!("{}: {e}", out.display())))?;
            emit(&serde_json::json!({
                "schema_version": SCHEMA_VERSION,
                "n": n,
                "q": q,
                "field_modulus": tg.geometry.field().modulus_string(),
                "gamma": gamma,
                "complement": complement,
                "v": g.order(),
                "edges": g.edge_count(),
                "out": out.display().to_string(),
            }));
            Ok(())
        }
        Command::Params { n, q } => {
            let tg = tangent_graph(n, q, false)?;
            let expected = expected_params(n as u32, q);
            let graph = compare(&tg.graph, expected)?;
            let complement = compare(&tg.graph.complement(), expected_complement_params(n as u32, q))?;
            let spectrum = spectrum_from_params(&expected).ok();
            let ok = graph.matches && complement.matches && spectrum.is_some();
            emit(&serde_json::json!({
                "schema_version": SCHEMA_VERSION,
                "n": n,
                "q": q,
                "field_modulus": tg.geometry.field().modulus_string(),
                "v": expected.v,
                "k": expected.k,
                "lambda": expected.lambda,
                "mu": expected.mu,
                "expected": graph.expected,
                "measured": graph.measured,
                "measure_error": graph.measure_error,
                "identity_holds": graph.identity_holds,
                "match": graph.matches,
                "complement_params": complement,
                "spectrum": spectrum.map(|s| serde_json::json!({
                    "k": s.k, "theta1": s.theta1, "m1": s.m1, "theta2": s.theta2, "m2": s.m2,
                })),
                "vertex_labels": vertex_labels(&tg),
            }));
            if ok {
                Ok(())
            } else {
                Err(Failure::Verification)
            }
        }
        Command::Cliques { n, q } => {
            if n != 2 {
                return Err(Failure::Usage("clique census is defined for n = 2 only".into()));
            }
            let tg = tangent_graph(n, q, false)?;
            let cliques = maximal_cliques_capped(&tg.graph, cap)?;
            let c = census(&tg, &cliques)?;
            let tangent_size = (q * q) as usize;
            let other_size = (q + 2) as usize;
            let sizes_ok = c.by_size.keys().all(|&s| s == tangent_size || s == other_size);
            let census_holds = sizes_ok
                && c.tangent_type as u64 == q.pow(3) + 1
                && c.by_size.get(&tangent_size).copied().unwrap_or(0) as u64 > q.pow(3);
            let by_size: BTreeMap<String, usize> = c.by_size.iter().map(|(k, v)| (k.to_string(), *v)).collect();
            emit(&serde_json::json!({
                "schema_version": SCHEMA_VERSION,
                "n": n,
                "q": q,
                "field_modulus": tg.geometry.field().modulus_string(),
                "v": tg.graph.order(),
                "maximal_cliques": c.total(),
                "by_size": by_size,
                "tangent_type": c.tangent_type,
                "two_line_type": c.two_line_type,
                "census_holds": census_holds,
            }));
            if census_holds {
                Ok(())
            } else {
                Err(Failure::Verification)
            }
        }
        Command::Aut { n, q, gamma } => {
            let tg = tangent_graph(n, q, gamma)?;
            let g = &tg.graph;
            info!("searching automorphisms of a graph on {} vertices", g.order());
            let r = automorphism_group_with(g, &OrderedPartition::unit(g.order()), cap)?;
            let canonical = g.relabel(&r.canonical_labeling);
            emit(&serde_json::json!({
                "schema_version": SCHEMA_VERSION,
                "n": n,
                "q": q,
                "gamma": gamma,
                "field_modulus": tg.geometry.field().modulus_string(),
                "v": g.order(),
                "order": r.order().to_string(),
                "generators": r.generators.iter().map(perm_json).collect::<Vec<_>>(),
                "orbits": r.orbit_partition,
                "canonical_graph6": to_graph6(&canonical),
                "search": { "nodes": r.stats.nodes, "leaves": r.stats.leaves },
            }));
            Ok(())
        }
        Command::Theorem1 { q } => {
            info!("running the NU(3, q^2) pipeline for q = {q}");
            let r = theorem1(q, cap)?;
            let tg = build_nu(2, q)?;
            let action = if r.wreath.is_none() {
                let a = tangent_action(&tg, &r.aut)?;
                Some(serde_json::json!({
                    "tangent_cliques": a.cliques,
                    "induced_order": a.group.order().to_string(),
                    "two_transitive": a.two_transitive,
                    "three_transitive": a.three_transitive,
                    "concurrent_triples": a.concurrent_triples,
                    "triangle_triples": a.triangle_triples,
                    "triple_types_invariant": a.types_invariant,
                }))
            } else {
                None
            };
            emit(&serde_json::json!({
                "schema_version": SCHEMA_VERSION,
                "q": q,
                "field_modulus": tg.geometry.field().modulus_string(),
                "v": r.vertices,
                "aut_order": r.aut.order().to_string(),
                "aut_generators": r.aut.generators.iter().map(perm_json).collect::<Vec<_>>(),
                "pgu_order": r.pgu_order.to_string(),
                "pgammau_order": r.pgammau_order.to_string(),
                "pgammau_expected": r.pgammau_expected.to_string(),
                "unitary_generators_are_automorphisms": r.unitary_generators_are_automorphisms,
                "contained_in_aut": r.contained_in_aut,
                "orders_equal": r.orders_equal,
                "wreath": r.wreath.as_ref().map(|w| serde_json::json!({
                    "complement_component_sizes": w.component_sizes,
                    "components_complete": w.components_complete,
                    "wreath_order": w.wreath_order.to_string(),
                    "wreath_in_aut": w.wreath_in_aut,
                })),
                "tangent_action": action,
                "confirmed": r.confirmed,
            }));
            if r.confirmed {
                Ok(())
            } else {
                Err(Failure::Verification)
            }
        }
        Command::Selftest { seed } => {
            let checks = selftest(seed);
            let passed = checks.iter().all(|c| c.passed);
            emit(&serde_json::json!({
                "schema_version": SCHEMA_VERSION,
                "seed": seed,
                "checks": checks.iter().map(|c| serde_json::json!({
                    "name": c.name, "passed": c.passed, "detail": c.detail,
                })).collect::<Vec<_>>(),
                "passed": passed,
            }));
            if passed {
                Ok(())
            } else {
                Err(Failure::Verification)
            }
        }
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn"))
        .target(env_logger::Target::Stderr)
        .init();
    let cli = Cli::parse();
    if let Some(k) = cli.threads {
        if k == 0 {
            eprintln!("error: --threads must be at least 1");
            return ExitCode::from(2);
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(k)
            .build_global()
            .expect("thread pool is configured once");
    }
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => {
            eprintln!("verification failed");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Cap(msg)) => {
            eprintln!("resource cap: {msg}");
            ExitCode::from(3)
        }
    }
}
