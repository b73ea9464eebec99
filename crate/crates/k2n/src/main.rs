use std::io::{Read, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use k2n::dto::{DiagramJson, ExtractionJson, TreeStructureJson, WitnessJson};
use k2n::format::{parse_graph, to_dot, to_edge_list, to_json};
use k2n::gen::{generate, FAMILIES};
use k2n::verify::{lookup, Config, Scale, SUITES};
use k2n_core::budget::Budget;
use k2n_core::fanstrip::{extract_augmentation, strip_on, ExtractOptions, Fan};
use k2n_core::graph::is_internally_3connected;
use k2n_core::minor::{has_k2n_minor, max_k2};
use k2n_core::sum::{decompose, in_class_c, CClass};
use k2n_core::typeone::recognize_type_one;
use k2n_core::{Error, Graph};
use serde_json::{json, Value};

/// Tools for K_{2,n}-minor-free graphs.
#[derive(Parser)]
#[command(name = "k2n", version)]
struct Cli {
    /// Pretty-print JSON and use plain-text summaries where they exist.
    #[arg(long, global = true)]
    human: bool,
    /// Worker threads for parallel suites (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Edges,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum Class {
    Type1,
    Internally3c,
    #[value(name = "classC")]
    ClassC,
    Fan,
    Strip,
}

#[derive(Subcommand)]
enum Cmd {
    /// Generate a graph from a named family.
    Gen {
        family: Option<String>,
        params: Vec<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// List the families and exit.
        #[arg(long)]
        list: bool,
    },
    /// Look for a K_{2,n} minor; prints the witness or "none".
    Minor {
        input: String,
        #[arg(long)]
        n: usize,
    },
    /// Largest n with a K_{2,n} minor.
    Maxk2 { input: String },
    /// Test membership in a class.
    Check {
        input: String,
        #[arg(long, value_enum)]
        class: Class,
    },
    /// Decompose a 2-connected graph into a tree structure of pieces in C.
    Decompose {
        input: String,
        /// Comma-separated label vertices.
        #[arg(long, value_delimiter = ',')]
        labels: Vec<usize>,
    },
    /// Peel strips and fans off an internally 3-connected K_{2,n}-free graph.
    Extract {
        input: String,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 8)]
        strip_threshold: usize,
        /// Skip the exact K_{2,n}-freeness check.
        #[arg(long)]
        no_minor_check: bool,
    },
    /// Run a property suite by name or id, or `all`.
    Verify {
        suite: Option<String>,
        #[arg(long, default_value = "desk")]
        scale: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// List the suites and exit.
        #[arg(long)]
        list: bool,
    },
    /// Convert a graph between formats.
    Convert {
        input: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
}

enum Failure {
    Usage(String),
    WorkLimit,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::WorkLimit => Failure::WorkLimit,
            e => Failure::Usage(e.to_string()),
        }
    }
}

impl From<k2n::format::FormatError> for Failure {
    fn from(e: k2n::format::FormatError) -> Self {
        match e {
            k2n::format::FormatError::Graph(g) => g.into(),
            e => Failure::Usage(e.to_string()),
        }
    }
}

fn read_input(path: &str) -> Result<String, Failure> {
    let mut s = String::new();
    if path == "-" {
        std::io::stdin().read_to_string(&mut s).map_err(|e| Failure::Usage(format!("stdin: {e}")))?;
    } else {
        s = std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{path}: {e}")))?;
    }
    Ok(s)
}

fn read_graph(path: &str) -> Result<Graph, Failure> {
    Ok(parse_graph(&read_input(path)?)?)
}

fn work_budget() -> Result<Budget, Failure> {
    match std::env::var("K2N_WORK_LIMIT") {
        Ok(v) => v
            .trim()
            .parse::<u64>()
            .map(Budget::new)
            .map_err(|_| Failure::Usage(format!("K2N_WORK_LIMIT must be a non-negative integer, got {v:?}"))),
        Err(_) => Ok(Budget::unlimited()),
    }
}

fn work_limit() -> Result<Option<u64>, Failure> {
    Ok(work_budget()?.limit())
}

struct Out {
    human: bool,
    text: String,
}

impl Out {
    fn json(&mut self, v: &Value) {
        self.text = if self.human { serde_json::to_string_pretty(v) } else { serde_json::to_string(v) }.unwrap();
        self.text.push('\n');
    }
}

fn graph_out(g: &Graph, f: Format) -> String {
    match f {
        Format::Json => to_json(g) + "\n",
        Format::Edges => to_edge_list(g),
        Format::Dot => to_dot(g),
    }
}

/// Whether `g` is exactly a fan around some center.
fn as_fan(g: &Graph) -> Option<Fan> {
    for c in 0..g.n() {
        let rest: Vec<usize> = (0..g.n()).filter(|&v| v != c).collect();
        let (h, ids) = g.induced(&rest);
        if h.m() + 1 != h.n() || h.max_degree() > 2 || !h.is_connected() {
            continue;
        }
        let Some(start) = (0..h.n()).find(|&v| h.degree(v) <= 1) else { continue };
        let mut rim = vec![start];
        while let Some(&w) = h.neighbors(*rim.last().unwrap()).iter().find(|w| !rim.contains(w)) {
            rim.push(w);
        }
        let rim: Vec<usize> = rim.into_iter().map(|v| ids[v]).collect();
        if let Ok(f) = Fan::from_host(g, c, rim) {
            if f.graph.m() == g.m() {
                return Some(f);
            }
        }
    }
    None
}

fn check(g: &Graph, class: Class) -> Result<(bool, Value), Failure> {
    Ok(match class {
        Class::Type1 => match recognize_type_one(g)? {
            Some(d) => (true, json!({ "diagram": DiagramJson::from(&d) })),
            None => (false, Value::Null),
        },
        Class::Internally3c => (is_internally_3connected(g), Value::Null),
        Class::ClassC => {
            let c = in_class_c(g);
            (c != CClass::None, json!({ "tag": format!("{c:?}") }))
        }
        Class::Fan => match as_fan(g) {
            Some(f) => (true, json!({ "center": f.center, "rim": f.rim, "length": f.length() })),
            None => (false, Value::Null),
        },
        Class::Strip => {
            let n = g.n();
            let mut budget = work_budget()?;
            for a in 0..n {
                for b in a + 1..n {
                    for c in b + 1..n {
                        for d in c + 1..n {
                            let interior: Vec<usize> = (0..n).filter(|v| ![a, b, c, d].contains(v)).collect();
                            if let Some(s) = strip_on(g, &interior, [a, b, c, d], &mut budget)? {
                                if s.graph.m() == g.m() {
                                    return Ok((true, json!({ "p1": s.p1, "p2": s.p2, "length": s.length() })));
                                }
                            }
                        }
                    }
                }
            }
            (false, Value::Null)
        }
    })
}

fn execute(cli: &Cli, out: &mut Out) -> Result<bool, Failure> {
    match &cli.cmd {
        Cmd::Gen { family, params, seed, format, list } => {
            if *list {
                for (f, p) in FAMILIES {
                    out.text.push_str(&format!("{f} {p}\n"));
                }
                return Ok(true);
            }
            let family = family.as_deref().ok_or_else(|| Failure::Usage("missing family (try --list)".into()))?;
            out.text = graph_out(&generate(family, params, *seed)?, *format);
            Ok(true)
        }
        Cmd::Convert { input, format } => {
            out.text = graph_out(&read_graph(input)?, *format);
            Ok(true)
        }
        Cmd::Minor { input, n } => {
            let g = read_graph(input)?;
            match has_k2n_minor(&g, *n, &mut work_budget()?)? {
                Some(w) => {
                    out.json(&serde_json::to_value(WitnessJson::from(&w)).unwrap());
                    Ok(true)
                }
                None => {
                    out.text = "none\n".into();
                    Ok(false)
                }
            }
        }
        Cmd::Maxk2 { input } => {
            let g = read_graph(input)?;
            let (p, w) = max_k2(&g, &mut work_budget()?)?;
            if out.human {
                out.text = format!("{p}\n");
            } else {
                out.json(&json!({ "max_k2": p, "witness": w.as_ref().map(WitnessJson::from) }));
            }
            Ok(true)
        }
        Cmd::Check { input, class } => {
            let g = read_graph(input)?;
            let (holds, detail) = check(&g, *class)?;
            out.json(&json!({ "holds": holds, "detail": detail }));
            Ok(holds)
        }
        Cmd::Decompose { input, labels } => {
            let g = read_graph(input)?;
            let d = decompose(&g, labels)?;
            out.json(&serde_json::to_value(TreeStructureJson::from(&d.theta)).unwrap());
            Ok(true)
        }
        Cmd::Extract { input, n, strip_threshold, no_minor_check } => {
            let g = read_graph(input)?;
            let opts = ExtractOptions { strip_threshold: *strip_threshold, check_minor_free: !no_minor_check };
            let e = extract_augmentation(&g, *n, opts, &mut work_budget()?)?;
            out.json(&serde_json::to_value(ExtractionJson::from(&e)).unwrap());
            Ok(true)
        }
        Cmd::Verify { suite, scale, seed, list } => {
            if *list {
                for s in SUITES {
                    let alias = s.alias.map(|a| format!(" ({a})")).unwrap_or_default();
                    out.text.push_str(&format!("{}{alias}: {}\n", s.name, s.about));
                }
                return Ok(true);
            }
            let id = suite.as_deref().ok_or_else(|| Failure::Usage("missing suite (try --list)".into()))?;
            let suites = lookup(id).ok_or_else(|| Failure::Usage(format!("unknown suite {id:?} (try --list)")))?;
            let scale: Scale = scale.parse().map_err(Failure::Usage)?;
            let cfg = Config { scale, seed: *seed, work_limit: work_limit()? };
            let reports: Vec<_> = suites.iter().map(|s| (s.run)(&cfg)).collect();
            if out.human {
                for r in &reports {
                    let verdict = if r.passed() { "pass" } else { "FAIL" };
                    out.text.push_str(&format!("{verdict} {} ({} cases, {} failures)\n", r.suite, r.cases, r.failures));
                    for m in r.examples.iter().chain(&r.notes) {
                        out.text.push_str(&format!("    {m}\n"));
                    }
                }
            } else {
                out.json(&serde_json::to_value(&reports).unwrap());
            }
            if reports.iter().any(|r| r.work_limit_hit) {
                return Err(Failure::WorkLimit);
            }
            Ok(reports.iter().all(|r| r.passed()))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(j) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(j.max(1)).build_global() {
            eprintln!("k2n: {e}");
            return ExitCode::from(2);
        }
    }
    let mut out = Out { human: cli.human, text: String::new() };
    let code = match execute(&cli, &mut out) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(Failure::Usage(m)) => {
            eprintln!("k2n: {m}");
            2
        }
        Err(Failure::WorkLimit) => {
            eprintln!("k2n: work limit exceeded");
            3
        }
    };
    if std::io::stdout().write_all(out.text.as_bytes()).is_err() {
        return ExitCode::from(2);
    }
    ExitCode::from(code)
}
