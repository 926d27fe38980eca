//! Command-line front end for the edgering toolkit.

use std::collections::HashMap;
use std::fs;
use std::process::ExitCode;

use edgering::{
    betti_table, buchberger, depth_quotient, extended_family_graph, family_graph,
    family_shelling_order, find_shelling, is_shellable_with_order, krull_dim_quotient,
    reduced_homology_dims, repro, toric_kernel_oracle, walk_binomials, FieldTag, Graph,
    MonomialIdeal, MonomialOrder, ShellingSearch, SimplicialComplex,
};
use serde_json::{json, Value};

const USAGE: &str = "usage: edgering <command> [options]

commands:
  gen-graph   --family gk5:K|ext:F,D --out FILE [--json]
  toric-gb    --graph FILE|gk5:K|ext:F,D --order lex|degrevlex [--oracle-bound B] [--json]
  ideal-op    --op intersect|sum|product|colon|decompose --in FILE [--in2 FILE] [--nvars N] [--json]
  homology    --complex FILE [--char P] [--json]
  shellable   --complex FILE [--order FILE|--search|--family-order K] [--json]
  depth       --ideal FILE [--char P] [--nvars N] [--json]
  betti       --ideal FILE [--char P] [--nvars N] [--json]
  cm-check    --ideal FILE [--char P] [--nvars N] [--json]
  normality   --graph FILE|gk5:K|ext:F,D [--json]
  repro       [--k K] [--char P] [--json]

The shelling search budget honors EDGERING_SHELLING_BUDGET (default 1000000).
Exit codes: 0 success, 1 failed repro checks, 2 usage or input error.";

/// Anything that should terminate with exit code 2.
struct CliError(String);

impl<E: std::fmt::Display> From<E> for CliError {
    fn from(e: E) -> Self {
        CliError(e.to_string())
    }
}

type CliResult<T> = Result<T, CliError>;

struct Args {
    flags: HashMap<String, String>,
    json: bool,
}

impl Args {
    fn parse(argv: &[String]) -> CliResult<Args> {
        let mut flags = HashMap::new();
        let mut json = false;
        let mut it = argv.iter();
        while let Some(arg) = it.next() {
            let Some(name) = arg.strip_prefix("--") else {
                return Err(CliError(format!("unexpected argument: {arg}")));
            };
            if name == "json" {
                json = true;
            } else if name == "search" {
                flags.insert(name.to_string(), String::new());
            } else {
                let value = it
                    .next()
                    .ok_or_else(|| CliError(format!("--{name} needs a value")))?;
                flags.insert(name.to_string(), value.clone());
            }
        }
        Ok(Args { flags, json })
    }

    fn get(&self, name: &str) -> Option<&str> {
        self.flags.get(name).map(String::as_str)
    }

    fn require(&self, name: &str) -> CliResult<&str> {
        self.get(name)
            .ok_or_else(|| CliError(format!("missing required option --{name}")))
    }

    fn field(&self) -> CliResult<FieldTag> {
        match self.get("char") {
            None => Ok(FieldTag::RATIONALS),
            Some(s) => {
                let p: u64 = s.parse().map_err(|_| CliError(format!("bad --char {s}")))?;
                Ok(FieldTag::from_characteristic(p)?)
            }
        }
    }

    fn nvars(&self) -> CliResult<Option<usize>> {
        match self.get("nvars") {
            None => Ok(None),
            Some(s) => {
                let n = s
                    .parse()
                    .map_err(|_| CliError(format!("bad --nvars {s}")))?;
                Ok(Some(n))
            }
        }
    }
}

/// Graphs are specified as a file path or as a family tag `gk5:K` / `ext:F,D`.
fn load_graph(spec: &str) -> CliResult<Graph> {
    if let Some(k) = spec.strip_prefix("gk5:") {
        let k: usize = k
            .parse()
            .map_err(|_| CliError(format!("bad family tag {spec}")))?;
        return Ok(family_graph(k)?);
    }
    if let Some(fd) = spec.strip_prefix("ext:") {
        let (f, d) = fd
            .split_once(',')
            .ok_or_else(|| CliError(format!("bad family tag {spec} (want ext:F,D)")))?;
        let f: usize = f
            .parse()
            .map_err(|_| CliError(format!("bad family tag {spec}")))?;
        let d: usize = d
            .parse()
            .map_err(|_| CliError(format!("bad family tag {spec}")))?;
        return Ok(extended_family_graph(f, d)?);
    }
    Ok(Graph::parse(&fs::read_to_string(spec)?)?)
}

fn load_ideal(args: &Args) -> CliResult<MonomialIdeal> {
    let path = args.require("ideal")?;
    Ok(MonomialIdeal::parse(
        &fs::read_to_string(path)?,
        args.nvars()?,
    )?)
}

fn load_complex(path: &str) -> CliResult<SimplicialComplex> {
    Ok(SimplicialComplex::parse(&fs::read_to_string(path)?, None)?)
}

fn shelling_budget() -> u64 {
    std::env::var("EDGERING_SHELLING_BUDGET")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(1_000_000)
}

fn print_json(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("serializable"));
}

fn cmd_gen_graph(args: &Args) -> CliResult<u8> {
    let family = args.require("family")?;
    if !family.starts_with("gk5:") && !family.starts_with("ext:") {
        return Err(CliError(format!("unknown family {family}")));
    }
    let g = load_graph(family)?;
    let out = args.require("out")?;
    fs::write(out, g.to_text())?;
    if args.json {
        print_json(&json!({
            "file": out,
            "vertices": g.vertex_count(),
            "edges": g.edge_count(),
        }));
    } else {
        println!(
            "wrote {out} ({} vertices, {} edges)",
            g.vertex_count(),
            g.edge_count()
        );
    }
    Ok(0)
}

/// Toric generators for a graph: the walk binomials when the graph is a
/// member of the supported family (possibly extended by pendant edges at
/// vertex 1), otherwise a degree-bounded kernel enumeration.
fn toric_generators(g: &Graph) -> CliResult<edgering::BinomialIdeal> {
    for k in 1..=g.vertex_count() {
        let Ok(base) = family_graph(k) else { break };
        if base.vertex_count() > g.vertex_count() || base.edge_count() > g.edge_count() {
            break;
        }
        if g.edges()[..base.edge_count()] == *base.edges() {
            let rest = &g.edges()[base.edge_count()..];
            let pendant = rest
                .iter()
                .enumerate()
                .all(|(i, &(u, v))| u == 1 && v == base.vertex_count() + i + 1);
            if pendant && g.vertex_count() == base.vertex_count() + rest.len() {
                return Ok(walk_binomials(k)?.extend(g.edge_count()));
            }
        }
    }
    // Not a family member: fall back to brute-force kernel elements. Only
    // sound as a generating set at desk scale; documented in the README.
    Ok(toric_kernel_oracle(g, 6)?)
}

fn cmd_toric_gb(args: &Args) -> CliResult<u8> {
    let g = load_graph(args.require("graph")?)?;
    let order = MonomialOrder::parse(args.require("order")?)?;
    let gens = toric_generators(&g)?;
    let gb = buchberger(&order, &gens);
    let initial = gb.initial_ideal();
    let oracle = match args.get("oracle-bound") {
        None => None,
        Some(b) => {
            let bound: u32 = b.parse().map_err(|_| CliError(format!("bad bound {b}")))?;
            let oracle = toric_kernel_oracle(&g, bound)?;
            let members = oracle.gens().iter().filter(|f| gb.contains(f)).count();
            Some((bound, oracle.gens().len(), members))
        }
    };
    if args.json {
        let mut v = json!({
            "order": order.name(),
            "basis": gb.elements().iter().map(|b| b.to_string()).collect::<Vec<_>>(),
            "initial_ideal": initial.gens().iter().map(|m| m.to_string()).collect::<Vec<_>>(),
        });
        if let Some((bound, total, members)) = oracle {
            v["oracle"] = json!({ "bound": bound, "binomials": total, "members": members });
        }
        print_json(&v);
    } else {
        println!("order: {}", order.name());
        println!("reduced basis ({} elements):", gb.elements().len());
        for b in gb.elements() {
            println!("  {b}");
        }
        println!("initial ideal ({} generators):", initial.gens().len());
        for m in initial.gens() {
            println!("  {m}");
        }
        if let Some((bound, total, members)) = oracle {
            println!("oracle bound {bound}: {members}/{total} binomials reduce to zero");
        }
    }
    Ok(0)
}

fn cmd_ideal_op(args: &Args) -> CliResult<u8> {
    let op = args.require("op")?;
    let nvars = args.nvars()?;
    let a = MonomialIdeal::parse(&fs::read_to_string(args.require("in")?)?, nvars)?;
    let b = match args.get("in2") {
        Some(path) => Some(MonomialIdeal::parse(
            &fs::read_to_string(path)?,
            Some(a.nvars()),
        )?),
        None => None,
    };
    let need_b = || {
        b.clone()
            .ok_or_else(|| CliError(format!("--op {op} needs --in2")))
    };
    if op == "decompose" {
        let primes = a.primary_decomposition_squarefree()?;
        if args.json {
            print_json(&json!({ "op": op, "primes": primes }));
        } else {
            for p in primes {
                let toks: Vec<String> = p.iter().map(|v| format!("x{v}")).collect();
                println!("{}", toks.join(", "));
            }
        }
        return Ok(0);
    }
    let result = match op {
        "intersect" => a.intersect(&need_b()?)?,
        "sum" => a.sum(&need_b()?)?,
        "product" => a.product(&need_b()?)?,
        "colon" => a.colon(&need_b()?)?,
        other => return Err(CliError(format!("unknown op {other}"))),
    };
    if args.json {
        print_json(&json!({
            "op": op,
            "gens": result.gens().iter().map(|m| m.to_string()).collect::<Vec<_>>(),
        }));
    } else {
        print!("{}", result.to_text());
    }
    Ok(0)
}

fn cmd_homology(args: &Args) -> CliResult<u8> {
    let cx = load_complex(args.require("complex")?)?;
    let field = args.field()?;
    let h = reduced_homology_dims(&cx, field);
    if args.json {
        let dims: Vec<Value> = h
            .nonzero()
            .iter()
            .map(|&(deg, dim)| json!({ "degree": deg, "dim": dim }))
            .collect();
        print_json(&json!({
            "characteristic": field.characteristic(),
            "euler": cx.reduced_euler_characteristic(),
            "nonzero": dims,
        }));
    } else {
        println!("characteristic: {}", field.characteristic());
        if h.nonzero().is_empty() {
            println!("all reduced homology vanishes");
        } else {
            for (deg, dim) in h.nonzero() {
                println!("H~_{deg} has dimension {dim}");
            }
        }
    }
    Ok(0)
}

fn order_from_file(text: &str, vertex_count: usize) -> CliResult<Vec<u64>> {
    let mut order = Vec::new();
    for line in text.lines() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if line == "empty" {
            order.push(0);
            continue;
        }
        let verts: Vec<usize> = line
            .split_whitespace()
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| CliError(format!("bad vertex {t}")))
            })
            .collect::<CliResult<_>>()?;
        for &v in &verts {
            if v < 1 || v > vertex_count {
                return Err(CliError(format!("vertex {v} out of range")));
            }
        }
        order.push(edgering::complex::mask_from_vertices(&verts));
    }
    Ok(order)
}

fn cmd_shellable(args: &Args) -> CliResult<u8> {
    let cx = load_complex(args.require("complex")?)?;
    let (verdict, order): (&str, Option<Vec<u64>>) = if let Some(path) = args.get("order") {
        let order = order_from_file(&fs::read_to_string(path)?, cx.vertex_count())?;
        if is_shellable_with_order(&cx, &order)? {
            ("shellable", Some(order))
        } else {
            ("not a shelling", None)
        }
    } else if let Some(k) = args.get("family-order") {
        let k: usize = k.parse().map_err(|_| CliError(format!("bad k {k}")))?;
        let order = family_shelling_order(k)?;
        if is_shellable_with_order(&cx, &order)? {
            ("shellable", Some(order))
        } else {
            ("not a shelling", None)
        }
    } else {
        match find_shelling(&cx, shelling_budget())? {
            ShellingSearch::Found(order) => ("shellable", Some(order)),
            ShellingSearch::NotShellable => ("not shellable", None),
            ShellingSearch::BudgetExhausted => ("unknown (budget exhausted)", None),
        }
    };
    if args.json {
        let order_sets: Option<Vec<Vec<usize>>> = order.as_ref().map(|o| {
            o.iter()
                .map(|&f| edgering::complex::vertices_from_mask(f))
                .collect()
        });
        print_json(&json!({ "verdict": verdict, "order": order_sets }));
    } else {
        println!("{verdict}");
        if let Some(order) = order {
            for f in order {
                let toks: Vec<String> = edgering::complex::vertices_from_mask(f)
                    .iter()
                    .map(usize::to_string)
                    .collect();
                println!("  {}", toks.join(" "));
            }
        }
    }
    Ok(0)
}

/// Shared JSON payload for the invariant subcommands: `pd`, `depth`, `dim`,
/// `cm`, and the Betti entries as `{i, multidegree, value}` records.
fn invariants_json(j: &MonomialIdeal, field: FieldTag) -> CliResult<Value> {
    let table = betti_table(j, field)?;
    let pd = table.projective_dimension();
    let depth = j.nvars() - pd;
    let dim = krull_dim_quotient(j)?;
    let betti: Vec<Value> = table
        .entries()
        .iter()
        .map(|((i, a), v)| json!({ "i": i, "multidegree": a.exps(), "value": v }))
        .collect();
    Ok(json!({
        "characteristic": field.characteristic(),
        "nvars": j.nvars(),
        "pd": pd,
        "depth": depth,
        "dim": dim,
        "cm": depth == dim,
        "betti": betti,
    }))
}

fn cmd_depth(args: &Args) -> CliResult<u8> {
    let j = load_ideal(args)?;
    let field = args.field()?;
    let v = invariants_json(&j, field)?;
    if args.json {
        print_json(&v);
    } else {
        println!(
            "pd = {}, depth = {}, dim = {}, cohen-macaulay = {}",
            v["pd"], v["depth"], v["dim"], v["cm"]
        );
    }
    Ok(0)
}

fn cmd_betti(args: &Args) -> CliResult<u8> {
    let j = load_ideal(args)?;
    let field = args.field()?;
    if args.json {
        print_json(&invariants_json(&j, field)?);
    } else {
        let table = betti_table(&j, field)?;
        for ((i, a), v) in table.entries() {
            println!("beta_{i} at {a} = {v}");
        }
        println!("pd = {}", table.projective_dimension());
    }
    Ok(0)
}

fn cmd_cm_check(args: &Args) -> CliResult<u8> {
    let j = load_ideal(args)?;
    let field = args.field()?;
    let depth = depth_quotient(&j, field)?;
    let dim = krull_dim_quotient(&j)?;
    if args.json {
        print_json(&invariants_json(&j, field)?);
    } else if depth == dim {
        println!("Cohen-Macaulay (depth = dim = {depth})");
    } else {
        println!("not Cohen-Macaulay (depth {depth} < dim {dim})");
    }
    Ok(0)
}

fn cmd_normality(args: &Args) -> CliResult<u8> {
    let g = load_graph(args.require("graph")?)?;
    let normal = g.is_normal_edge_ring()?;
    if args.json {
        print_json(&json!({
            "normal": normal,
            "connected": g.is_connected(),
            "bipartite": g.is_bipartite(),
        }));
    } else {
        println!("{}", if normal { "normal" } else { "non-normal" });
    }
    Ok(0)
}

fn cmd_repro(args: &Args) -> CliResult<u8> {
    let k: usize = match args.get("k") {
        None => 2,
        Some(s) => s.parse().map_err(|_| CliError(format!("bad --k {s}")))?,
    };
    let field = args.field()?;
    let report = repro(k, field)?;
    if args.json {
        println!(
            "{}",
            serde_json::to_string_pretty(&report).expect("serializable report")
        );
    } else {
        print!("{}", edgering::repro::render_text(&report));
    }
    Ok(u8::from(!report.passed))
}

fn dispatch(cmd: &str, args: &Args) -> CliResult<u8> {
    match cmd {
        "gen-graph" => cmd_gen_graph(args),
        "toric-gb" => cmd_toric_gb(args),
        "ideal-op" => cmd_ideal_op(args),
        "homology" => cmd_homology(args),
        "shellable" => cmd_shellable(args),
        "depth" => cmd_depth(args),
        "betti" => cmd_betti(args),
        "cm-check" => cmd_cm_check(args),
        "normality" => cmd_normality(args),
        "repro" => cmd_repro(args),
        other => Err(CliError(format!("unknown command: {other}"))),
    }
}

fn main() -> ExitCode {
    // Die quietly when a pipe closes early (e.g. piping into `head`).
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let argv: Vec<String> = std::env::args().skip(1).collect();
    let Some(cmd) = argv.first() else {
        eprintln!("{USAGE}");
        return ExitCode::from(2);
    };
    if cmd == "--help" || cmd == "help" {
        println!("{USAGE}");
        return ExitCode::SUCCESS;
    }
    const COMMANDS: [&str; 10] = [
        "gen-graph",
        "toric-gb",
        "ideal-op",
        "homology",
        "shellable",
        "depth",
        "betti",
        "cm-check",
        "normality",
        "repro",
    ];
    if !COMMANDS.contains(&cmd.as_str()) {
        eprintln!("error: unknown command: {cmd}\n\n{USAGE}");
        return ExitCode::from(2);
    }
    let args = match Args::parse(&argv[1..]) {
        Ok(args) => args,
        Err(CliError(msg)) => {
            eprintln!("error: {msg}\n\n{USAGE}");
            return ExitCode::from(2);
        }
    };
    match dispatch(cmd, &args) {
        Ok(code) => ExitCode::from(code),
        Err(CliError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
