//! Command-line front end: exact representation-type classification and
//! the combinatorial engines behind it, with machine-readable output.
//!
//! Every subcommand accepts `--json`. Exit codes: 0 on success, 1 on a
//! domain error (invalid mathematical input), 2 on a parse error (flags,
//! files, or literals).

use clap::{ArgAction, Parser, Subcommand};
use hecke_core::classify::{
    phi_multiplicity, poincare, rep_type_general, rep_type_two_param, rule_citations, QRelation,
    TwoParamSpec, WeylSpec,
};
use hecke_core::crystal::{self, CrystalConfig};
use hecke_core::fixtures;
use hecke_core::fock::{self, decomposition_matrix};
use hecke_core::partitions::Bipartition;
use hecke_core::pathalg::{
    is_special_biserial, is_string_algebra, quotient_basis, AlgebraPresentation, BiserialViolation,
};
use hecke_core::quiver::{
    classify_underlying, find_wild_pattern, path_algebra_rep_type, radical_square_zero_rep_type,
    Quiver, WildWitness,
};
use hecke_core::strings::{complexity_estimate, StringAlgebra, StringWord};
use serde_json::{json, Value};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "hecke", disable_version_flag = true)]
struct Cli {
    /// Print version and the fixture-corpus digest.
    #[arg(long, short = 'V', action = ArgAction::SetTrue, global = true)]
    version: bool,
    /// Reserved: library operations are pure values, so threading never
    /// changes output; currently single-threaded.
    #[arg(long, global = true, value_name = "N")]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Subcommand)]
enum Command {
    /// Representation type of a Hecke algebra from its Weyl group or its
    /// two type-B parameters.
    Classify {
        /// Product of irreducible factors, e.g. `B4xA3xD5`.
        #[arg(long, conflicts_with_all = ["two_param", "n", "separated", "f"])]
        r#type: Option<String>,
        /// Quantum characteristic: the multiplicative order of q.
        #[arg(long)]
        e: u32,
        /// Two-parameter mode (rank from --n, relation from --separated or --f).
        #[arg(long)]
        two_param: bool,
        #[arg(long)]
        n: Option<u64>,
        /// The second parameter avoids the q-power line.
        #[arg(long, conflicts_with = "f")]
        separated: bool,
        /// Exponent in `-q^f` for the second parameter.
        #[arg(long)]
        f: Option<u32>,
        #[arg(long)]
        json: bool,
    },
    /// Decomposition matrix at a given size.
    Decomp {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        e: u32,
        #[arg(long)]
        f: u32,
        /// Restrict to the block with these residue contents, e.g. `0,1,1`.
        #[arg(long)]
        block: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Crystal graph layers up to a size, or the DOT graph.
    Crystal {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        e: u32,
        #[arg(long)]
        f: u32,
        #[arg(long)]
        dot: bool,
        #[arg(long)]
        json: bool,
    },
    /// Canonical basis element of a Kleshchev bipartition.
    Canonical {
        /// Bipartition literal, e.g. `[1|3,3]`.
        #[arg(long)]
        mu: String,
        #[arg(long)]
        e: u32,
        #[arg(long)]
        f: u32,
        #[arg(long)]
        json: bool,
    },
    /// Translate orbit of a string module over a string algebra.
    #[command(name = "ar-orbit")]
    ArOrbit {
        /// Presentation file: arrow lines and `rel:` lines.
        algfile: String,
        /// String literal, e.g. `<nu >beta <mu`, or `@2` for a simple.
        string: String,
        #[arg(long)]
        steps: usize,
        /// Nilpotency bound for the presentation.
        #[arg(long, default_value = "12")]
        bound: usize,
        #[arg(long)]
        json: bool,
    },
    /// Graph classification and wild-pattern detection for a quiver file.
    #[command(name = "quiver-check")]
    QuiverCheck {
        file: String,
        /// Assert the Ext-symmetry hypothesis for the cycle detector.
        #[arg(long)]
        ext_symmetric: bool,
        #[arg(long)]
        json: bool,
    },
    /// Dimension of a path algebra modulo its relations.
    #[command(name = "algebra-dim")]
    AlgebraDim {
        file: String,
        #[arg(long, default_value = "12")]
        bound: usize,
        #[arg(long)]
        json: bool,
    },
    /// Special-biserial and string-algebra checks for a presentation.
    #[command(name = "algebra-class")]
    AlgebraClass {
        file: String,
        #[arg(long, default_value = "12")]
        bound: usize,
        #[arg(long)]
        json: bool,
    },
}

/// Domain errors exit 1; parse errors (flags, files, literals) exit 2.
enum Failure {
    Domain(String),
    Parse(String),
}

impl Failure {
    fn code(&self) -> ExitCode {
        match self {
            Failure::Domain(_) => ExitCode::from(1),
            Failure::Parse(_) => ExitCode::from(2),
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Domain(m) | Failure::Parse(m) => m,
        }
    }
}

fn domain<E: std::fmt::Display>(e: E) -> Failure {
    Failure::Domain(e.to_string())
}

fn parse_err<E: std::fmt::Display>(e: E) -> Failure {
    Failure::Parse(e.to_string())
}

fn read_file(path: &str) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Parse(format!("{path}: {e}")))
}

/// Writes a line to stdout, exiting quietly when the reader hangs up
/// (e.g. piping into `head`).
fn print_out(line: &str) {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    if writeln!(out, "{line}").is_err() {
        std::process::exit(0);
    }
}

fn emit(json_mode: bool, value: Value, text: String) {
    if json_mode {
        print_out(&value.to_string());
    } else {
        print_out(&text);
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_classify(
    ty: Option<String>,
    e: u32,
    two_param: bool,
    n: Option<u64>,
    separated: bool,
    f: Option<u32>,
    json_mode: bool,
) -> Result<(), Failure> {
    if two_param {
        let n = n.ok_or_else(|| Failure::Parse("--two-param needs --n".into()))?;
        let relation = if separated {
            QRelation::Separated
        } else {
            let f =
                f.ok_or_else(|| Failure::Parse("--two-param needs --separated or --f".into()))?;
            QRelation::Related(f)
        };
        let spec = TwoParamSpec::new(n, e, relation).map_err(domain)?;
        let verdict = rep_type_two_param(&spec);
        let citations = rule_citations(Some(&spec));
        emit(
            json_mode,
            json!({
                "verdict": verdict.to_string(),
                "phi_multiplicity": Value::Null,
                "citations": citations,
            }),
            format!("verdict: {verdict}\nrules: {}", citations.join(", ")),
        );
        return Ok(());
    }
    let ty = ty.ok_or_else(|| Failure::Parse("classify needs --type or --two-param".into()))?;
    let w = WeylSpec::parse(&ty).map_err(parse_err)?;
    let verdict = rep_type_general(&w, e).map_err(domain)?;
    let mult = phi_multiplicity(&w, e);
    let p = poincare(&w);
    let citations = rule_citations(None);
    emit(
        json_mode,
        json!({
            "verdict": verdict.to_string(),
            "phi_multiplicity": mult,
            "poincare": p.to_string(),
            "citations": citations,
        }),
        format!(
            "verdict: {verdict}\nphi multiplicity at e = {e}: {mult}\npoincare: {p}\nrules: {}",
            citations.join(", ")
        ),
    );
    Ok(())
}

fn parse_block_contents(text: &str, e: u32) -> Result<Vec<u64>, Failure> {
    let mut counts = vec![0u64; e as usize];
    for tok in text.split(',') {
        let r: u32 = tok
            .trim()
            .parse()
            .map_err(|_| Failure::Parse(format!("bad residue `{tok}` in --block")))?;
        if r >= e {
            return Err(Failure::Parse(format!(
                "residue {r} out of range for e = {e}"
            )));
        }
        counts[r as usize] += 1;
    }
    Ok(counts)
}

fn cmd_decomp(
    n: u64,
    e: u32,
    f: u32,
    block: Option<String>,
    json_mode: bool,
) -> Result<(), Failure> {
    let cfg = CrystalConfig::new(e, f).map_err(domain)?;
    let mut m = decomposition_matrix(n, &cfg).map_err(domain)?;
    if let Some(contents) = block {
        let want = parse_block_contents(&contents, e)?;
        if want.iter().sum::<u64>() != n {
            return Err(Failure::Domain(format!(
                "--block lists {} residues but n = {n}",
                want.iter().sum::<u64>()
            )));
        }
        let keep_rows: Vec<usize> = (0..m.rows.len())
            .filter(|&i| m.rows[i].content_multiset(e, f) == want)
            .collect();
        let keep_cols: Vec<usize> = (0..m.cols.len())
            .filter(|&j| m.cols[j].content_multiset(e, f) == want)
            .collect();
        m = fock::DecompositionMatrix {
            rows: keep_rows.iter().map(|&i| m.rows[i].clone()).collect(),
            cols: keep_cols.iter().map(|&j| m.cols[j].clone()).collect(),
            entries: keep_rows
                .iter()
                .map(|&i| keep_cols.iter().map(|&j| m.entries[i][j].clone()).collect())
                .collect(),
            polys: keep_rows
                .iter()
                .map(|&i| keep_cols.iter().map(|&j| m.polys[i][j].clone()).collect())
                .collect(),
        };
    }
    let rows: Vec<String> = m.rows.iter().map(|r| r.to_string()).collect();
    let cols: Vec<String> = m.cols.iter().map(|c| c.to_string()).collect();
    let entry_nums: Vec<Vec<String>> = m
        .entries
        .iter()
        .map(|row| row.iter().map(|x| x.to_string()).collect())
        .collect();
    let polys: Vec<Vec<String>> = m
        .polys
        .iter()
        .map(|row| row.iter().map(|p| p.to_string()).collect())
        .collect();
    let mut text = format!("columns: {}\n", cols.join(" "));
    for (i, r) in rows.iter().enumerate() {
        text.push_str(&format!("{r}: {}\n", entry_nums[i].join(" ")));
    }
    text.pop();
    let entries_json: Vec<Vec<Value>> = m
        .entries
        .iter()
        .map(|row| {
            row.iter()
                .map(|x| {
                    i64::try_from(x)
                        .map(Value::from)
                        .unwrap_or_else(|_| Value::from(x.to_string()))
                })
                .collect()
        })
        .collect();
    emit(
        json_mode,
        json!({
            "rows": rows,
            "cols": cols,
            "entries": entries_json,
            "polys": polys,
        }),
        text,
    );
    Ok(())
}

fn cmd_crystal(n: u64, e: u32, f: u32, dot: bool, json_mode: bool) -> Result<(), Failure> {
    let cfg = CrystalConfig::new(e, f).map_err(domain)?;
    if dot {
        print_out(crystal::crystal_dot(n, &cfg).trim_end());
        return Ok(());
    }
    let layers: Vec<Vec<String>> = (0..=n)
        .map(|k| {
            let mut v: Vec<Bipartition> = crystal::crystal_layer(k, &cfg).into_iter().collect();
            hecke_core::partitions::sort_by_dominance(&mut v);
            v.iter().map(|b| b.to_string()).collect()
        })
        .collect();
    let edges: Vec<(String, u32, String)> = crystal::crystal_edges(n, &cfg)
        .into_iter()
        .map(|(a, i, b)| (a.to_string(), i, b.to_string()))
        .collect();
    let mut text = String::new();
    for (k, layer) in layers.iter().enumerate() {
        text.push_str(&format!("layer {k}: {}\n", layer.join(" ")));
    }
    text.pop();
    emit(json_mode, json!({ "layers": layers, "edges": edges }), text);
    Ok(())
}

fn cmd_canonical(mu: &str, e: u32, f: u32, json_mode: bool) -> Result<(), Failure> {
    let cfg = CrystalConfig::new(e, f).map_err(domain)?;
    let mu: Bipartition = mu.parse().map_err(parse_err)?;
    let g = fock::canonical_basis(&mu, &cfg).map_err(domain)?;
    let approx = fock::first_approximation(&mu, &cfg).map_err(domain)?;
    let pure_monomial = approx == g.expansion;
    let terms: Vec<(String, String)> = g
        .expansion
        .support()
        .map(|(b, c)| (b.to_string(), c.to_string()))
        .collect();
    let mut text = format!("G({mu}) =\n");
    for (b, c) in &terms {
        text.push_str(&format!("  ({c}) {b}\n"));
    }
    text.push_str(&format!(
        "pure monomial (characteristic-free column): {pure_monomial}"
    ));
    emit(
        json_mode,
        json!({
            "mu": mu.to_string(),
            "terms": terms
                .iter()
                .map(|(b, c)| json!({"bipartition": b, "coefficient": c}))
                .collect::<Vec<_>>(),
            "pure_monomial": pure_monomial,
        }),
        text,
    );
    Ok(())
}

fn cmd_ar_orbit(
    algfile: &str,
    string: &str,
    steps: usize,
    bound: usize,
    json_mode: bool,
) -> Result<(), Failure> {
    let text = read_file(algfile)?;
    let presentation = AlgebraPresentation::parse(&text, bound).map_err(parse_err)?;
    let alg = StringAlgebra::new(presentation).map_err(domain)?;
    let word = StringWord::parse(string, alg.quiver()).map_err(parse_err)?;
    alg.validate(&word).map_err(domain)?;
    let mut words = vec![word.clone()];
    let mut cur = word;
    for _ in 0..steps {
        cur = alg.ar_translate(&cur).map_err(domain)?;
        words.push(cur.clone());
    }
    let dims: Vec<u64> = words.iter().map(|w| w.dim()).collect();
    let rendered: Vec<String> = words.iter().map(|w| w.render(alg.quiver())).collect();
    let complexity = complexity_estimate(&dims).ok();
    let mut out = format!("dims: {dims:?}\n");
    for (k, w) in rendered.iter().enumerate() {
        out.push_str(&format!("tau^{k}: {w}\n"));
    }
    match &complexity {
        Some((c, note)) => out.push_str(&format!("complexity estimate: {c} ({note})")),
        None => out.push_str("complexity estimate: needs at least 6 samples"),
    }
    emit(
        json_mode,
        json!({
            "dims": dims,
            "strings": rendered,
            "complexity": complexity.map(|(c, note)| json!({"estimate": c, "note": note})),
        }),
        out,
    );
    Ok(())
}

fn witness_json(q: &Quiver, w: &WildWitness) -> Value {
    let label = |i: usize| q.node_label(i).to_string();
    match w {
        WildWitness::TwoSourceStar {
            a,
            b,
            u,
            l,
            c,
            reversed,
        } => json!({
            "pattern": w.pattern_id(),
            "nodes": {
                "a": label(*a), "b": label(*b), "u": label(*u),
                "l": label(*l), "c": label(*c),
            },
            "reversed": reversed,
        }),
        WildWitness::DoubleLoopPlusArrow {
            looped,
            other,
            outgoing,
        } => json!({
            "pattern": w.pattern_id(),
            "nodes": {"looped": label(*looped), "other": label(*other)},
            "outgoing": outgoing,
        }),
        WildWitness::CycleWithEdge { cycle, edge } => json!({
            "pattern": w.pattern_id(),
            "cycle": cycle.iter().map(|&i| label(i)).collect::<Vec<_>>(),
            "edge": [label(edge.0), label(edge.1)],
        }),
    }
}

fn cmd_quiver_check(file: &str, ext_symmetric: bool, json_mode: bool) -> Result<(), Failure> {
    let text = read_file(file)?;
    let q = Quiver::parse(&text).map_err(parse_err)?;
    let class = classify_underlying(&q).map(|c| c.to_string()).ok();
    let path_type = path_algebra_rep_type(&q).map(|t| t.to_string()).ok();
    let rad2 = radical_square_zero_rep_type(&q).to_string();
    let witness = find_wild_pattern(&q, ext_symmetric);
    let mut out = format!(
        "graph class: {}\npath algebra: {}\nradical-square-zero: {rad2}\n",
        class.clone().unwrap_or_else(|| "n/a (disconnected)".into()),
        path_type
            .clone()
            .unwrap_or_else(|| "n/a (directed cycles)".into()),
    );
    match &witness {
        Some(w) => out.push_str(&format!("wild pattern: {}", w.pattern_id())),
        None => out.push_str("wild pattern: none"),
    }
    emit(
        json_mode,
        json!({
            "graph_class": class,
            "path_algebra_type": path_type,
            "radical_square_zero_type": rad2,
            "wild_witness": witness.as_ref().map(|w| witness_json(&q, w)),
        }),
        out,
    );
    Ok(())
}

fn load_presentation(file: &str, bound: usize) -> Result<AlgebraPresentation, Failure> {
    let text = read_file(file)?;
    AlgebraPresentation::parse(&text, bound).map_err(parse_err)
}

fn cmd_algebra_dim(file: &str, bound: usize, json_mode: bool) -> Result<(), Failure> {
    let p = load_presentation(file, bound)?;
    let basis = quotient_basis(&p).map_err(domain)?;
    let by_class: Vec<Value> = basis
        .paths_by_class(&p.quiver)
        .into_iter()
        .map(|((s, t, len), paths)| {
            json!({
                "source": p.quiver.node_label(s),
                "target": p.quiver.node_label(t),
                "length": len,
                "paths": paths.iter().map(|pa| pa.render(&p.quiver)).collect::<Vec<_>>(),
            })
        })
        .collect();
    let dim = basis.dimension();
    emit(
        json_mode,
        json!({ "dimension": dim, "classes": by_class }),
        format!("dimension: {dim}"),
    );
    Ok(())
}

fn violation_json(v: &BiserialViolation) -> Value {
    match v {
        BiserialViolation::OutDegree { node } => json!({"kind": "out-degree", "node": node}),
        BiserialViolation::InDegree { node } => json!({"kind": "in-degree", "node": node}),
        BiserialViolation::ForwardBranch {
            arrow,
            continuations,
        } => {
            json!({"kind": "forward-branch", "arrow": arrow, "continuations": continuations})
        }
        BiserialViolation::BackwardBranch {
            arrow,
            continuations,
        } => {
            json!({"kind": "backward-branch", "arrow": arrow, "continuations": continuations})
        }
    }
}

fn cmd_algebra_class(file: &str, bound: usize, json_mode: bool) -> Result<(), Failure> {
    let p = load_presentation(file, bound)?;
    let (special, violations) = is_special_biserial(&p).map_err(domain)?;
    let string = is_string_algebra(&p).map_err(domain)?;
    let out = format!(
        "special biserial: {special}\nstring algebra: {string}\nviolations: {}",
        if violations.is_empty() {
            "none".to_string()
        } else {
            violations.len().to_string()
        }
    );
    emit(
        json_mode,
        json!({
            "special_biserial": special,
            "string_algebra": string,
            "violations": violations.iter().map(violation_json).collect::<Vec<_>>(),
        }),
        out,
    );
    Ok(())
}

fn run(cli: Cli) -> Result<(), Failure> {
    if cli.version {
        print_out(&format!(
            "hecke {} (corpus {})",
            env!("CARGO_PKG_VERSION"),
            fixtures::corpus_digest()
        ));
        return Ok(());
    }
    let Some(command) = cli.command else {
        return Err(Failure::Parse("no subcommand given; see --help".into()));
    };
    match command {
        Command::Classify {
            r#type,
            e,
            two_param,
            n,
            separated,
            f,
            json,
        } => cmd_classify(r#type, e, two_param, n, separated, f, json),
        Command::Decomp {
            n,
            e,
            f,
            block,
            json,
        } => cmd_decomp(n, e, f, block, json),
        Command::Crystal { n, e, f, dot, json } => cmd_crystal(n, e, f, dot, json),
        Command::Canonical { mu, e, f, json } => cmd_canonical(&mu, e, f, json),
        Command::ArOrbit {
            algfile,
            string,
            steps,
            bound,
            json,
        } => cmd_ar_orbit(&algfile, &string, steps, bound, json),
        Command::QuiverCheck {
            file,
            ext_symmetric,
            json,
        } => cmd_quiver_check(&file, ext_symmetric, json),
        Command::AlgebraDim { file, bound, json } => cmd_algebra_dim(&file, bound, json),
        Command::AlgebraClass { file, bound, json } => cmd_algebra_class(&file, bound, json),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let _ = cli.threads;
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("error: {}", failure.message());
            failure.code()
        }
    }
}
