use std::fs;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use psb_core::analysis::{
    clique_construction, diameter_with, four_hop_path, max_clique_within, DEFAULT_CLIQUE_CAP,
};
use psb_core::encoding::EncodingJson;
use psb_core::skeleton::{build_skeleton_with, SkeletonGraph, SkeletonOptions, DEFAULT_SLOW_CAP};
use psb_core::solver::{solve, DistanceMatrix, SolveMethod};
use psb_core::verify::{equivalence, invariants};
use psb_core::{
    adjacent, count_encodings, enumerate_encodings, nonadj_exhaustive, pair_oracle,
    random_encoding, Exec, Method, PairOracle, PsbEncoding,
};

const ORACLE_CAP_VAR: &str = "PSB_MAX_ORACLE_N";

#[derive(Parser, Debug)]
#[command(
    name = "psb",
    version,
    about = "Pyramidal tours with step-backs and their polytope's 1-skeleton"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Seed for commands that sample.
    #[arg(long, global = true)]
    seed: Option<u64>,

    /// Run every sweep on a single thread.
    #[arg(long, global = true)]
    sequential: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Export {
    Edgelist,
    Dot,
    Json,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Fast,
    Exhaustive,
    Oracle,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Fast => Method::Fast,
            MethodArg::Exhaustive => Method::Exhaustive,
            MethodArg::Oracle => Method::Oracle,
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum SolveArg {
    Dp,
    Enum,
    AtspBrute,
}

impl From<SolveArg> for SolveMethod {
    fn from(m: SolveArg) -> Self {
        match m {
            SolveArg::Dp => SolveMethod::Dp,
            SolveArg::Enum => SolveMethod::Enum,
            SolveArg::AtspBrute => SolveMethod::AtspBrute,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Number of PSB tours on n cities.
    Count {
        #[arg(long)]
        n: usize,
    },
    /// Stream every encoding in canonical order, one per line.
    Enumerate {
        #[arg(long)]
        n: usize,
    },
    /// Decide whether two tours are adjacent on the polytope.
    Adjacency {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
        #[arg(long, value_enum, default_value_t = MethodArg::Fast)]
        method: MethodArg,
        /// Also report a non-adjacency certificate.
        #[arg(long)]
        witness: bool,
    },
    /// Build the 1-skeleton and export it.
    Skeleton {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = MethodArg::Fast)]
        method: MethodArg,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Export::Edgelist)]
        export: Export,
    },
    /// Exact diameter of the skeleton, for n or for every size in n..=to.
    Diameter {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        to: Option<usize>,
        #[arg(long, value_enum, default_value_t = MethodArg::Fast)]
        method: MethodArg,
    },
    /// Constructed clique family and/or exact clique number.
    Clique {
        #[arg(long)]
        n: usize,
        #[arg(long, conflicts_with = "exact")]
        construct: bool,
        #[arg(long)]
        exact: bool,
        /// Stop the exact search after this many seconds and report the best clique found.
        #[arg(long)]
        budget: Option<f64>,
    },
    /// Short skeleton path between two tours.
    Path {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
    },
    /// Minimum-cost tour for a distance matrix (CSV or JSON file).
    Solve {
        #[arg(long)]
        matrix: PathBuf,
        #[arg(long, value_enum, default_value_t = SolveArg::Dp)]
        method: SolveArg,
    },
    /// Three-way adjacency equivalence and invariant suites for n = 3..=max-n.
    Selftest {
        #[arg(long, default_value_t = 7)]
        max_n: usize,
        /// Random pairs per size checked for symmetry beyond max-n.
        #[arg(long, default_value_t = 200)]
        random_pairs: usize,
    },
}

struct Ctx {
    format: Format,
    seed: u64,
    exec: Exec,
    oracle_cap: usize,
}

impl Ctx {
    fn skeleton_options(&self) -> SkeletonOptions {
        SkeletonOptions {
            slow_cap: self.oracle_cap,
            exec: self.exec,
        }
    }
}

fn oracle_cap() -> Result<usize> {
    match std::env::var(ORACLE_CAP_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .with_context(|| format!("{ORACLE_CAP_VAR}={v:?} is not a non-negative integer")),
        Err(_) => Ok(DEFAULT_SLOW_CAP),
    }
}

fn parse_enc(n: usize, literal: &str) -> Result<PsbEncoding> {
    PsbEncoding::parse_with_n(n, literal)
        .with_context(|| format!("encoding {literal:?} for n = {n}"))
}

fn check_slow(ctx: &Ctx, n: usize, method: Method) -> Result<()> {
    if method != Method::Fast && n > ctx.oracle_cap {
        bail!(
            "n = {n} exceeds the {method} cap of {} (set {ORACLE_CAP_VAR} to raise it)",
            ctx.oracle_cap
        );
    }
    Ok(())
}

fn emit_json<T: Serialize>(out: &mut impl Write, value: &T) -> Result<()> {
    serde_json::to_writer(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = oracle_cap().and_then(|oracle_cap| {
        let ctx = Ctx {
            format: cli.format,
            seed: cli.seed.unwrap_or(0),
            exec: if cli.sequential {
                Exec::Sequential
            } else {
                Exec::default()
            },
            oracle_cap,
        };
        run(&ctx, cli.command, &mut out)
    });
    let flushed = out.flush();
    match result.and_then(|ok| flushed.map(|_| ok).map_err(Into::into)) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

/// Ok(false) reports a completed run whose checks failed.
fn run(ctx: &Ctx, command: Command, out: &mut impl Write) -> Result<bool> {
    match command {
        Command::Count { n } => count(ctx, n, out)?,
        Command::Enumerate { n } => enumerate(ctx, n, out)?,
        Command::Adjacency {
            n,
            x,
            y,
            method,
            witness,
        } => adjacency(ctx, n, &x, &y, method.into(), witness, out)?,
        Command::Skeleton {
            n,
            method,
            out: file,
            export,
        } => skeleton(ctx, n, method.into(), file, export, out)?,
        Command::Diameter { n, to, method } => {
            diameters(ctx, n, to.unwrap_or(n), method.into(), out)?
        }
        Command::Clique {
            n,
            construct,
            exact,
            budget,
        } => clique(ctx, n, construct, exact, budget, out)?,
        Command::Path { n, x, y } => path(ctx, n, &x, &y, out)?,
        Command::Solve { matrix, method } => solve_cmd(ctx, &matrix, method.into(), out)?,
        Command::Selftest {
            max_n,
            random_pairs,
        } => return selftest(ctx, max_n, random_pairs, out),
    }
    Ok(true)
}

fn count(ctx: &Ctx, n: usize, out: &mut impl Write) -> Result<()> {
    let c = count_encodings(n)?;
    match ctx.format {
        Format::Text => writeln!(out, "{c}")?,
        Format::Json => {
            let c = u64::try_from(c).map_or_else(|_| json!(c.to_string()), |c| json!(c));
            emit_json(out, &json!({ "n": n, "count": c }))?
        }
        Format::Csv => writeln!(out, "n,count\n{n},{c}")?,
    }
    Ok(())
}

fn enumerate(ctx: &Ctx, n: usize, out: &mut impl Write) -> Result<()> {
    let encodings = enumerate_encodings(n)?;
    if ctx.format == Format::Csv {
        writeln!(out, "index,literal")?;
    }
    for (i, e) in encodings.enumerate() {
        match ctx.format {
            Format::Text => writeln!(out, "{e}")?,
            Format::Json => emit_json(out, &EncodingJson::from(e))?,
            Format::Csv => writeln!(out, "{i},{e}")?,
        }
    }
    Ok(())
}

fn adjacency(
    ctx: &Ctx,
    n: usize,
    x: &str,
    y: &str,
    method: Method,
    want_witness: bool,
    out: &mut impl Write,
) -> Result<()> {
    check_slow(ctx, n, method)?;
    let (x, y) = (parse_enc(n, x)?, parse_enc(n, y)?);
    let (adj, witness) = match method {
        Method::Fast => {
            let adj = adjacent(&x, &y)?;
            let w = if want_witness && !adj {
                nonadj_exhaustive(&x, &y)?.map(|w| serde_json::to_value(w.to_json()))
            } else {
                None
            };
            (adj, w.transpose()?)
        }
        Method::Exhaustive => {
            let w = nonadj_exhaustive(&x, &y)?;
            (
                w.is_none(),
                w.map(|w| serde_json::to_value(w.to_json())).transpose()?,
            )
        }
        Method::Oracle => {
            let oracle = PairOracle::for_size(n)?;
            let w = pair_oracle(&x, &y, &oracle)?;
            let v = w.map(|w| json!({ "z": w.z.literal(), "t": w.t.literal() }));
            (v.is_none(), v)
        }
    };
    let verdict = if adj { "adjacent" } else { "non-adjacent" };
    let witness = witness.filter(|_| want_witness);
    match ctx.format {
        Format::Text => {
            writeln!(out, "{verdict}")?;
            if let Some(w) = &witness {
                match method {
                    Method::Oracle => writeln!(out, "witness: z={} t={}", w["z"], w["t"])?,
                    _ => writeln!(
                        out,
                        "witness: case {} i={} j={} i_a={} j_b={}",
                        w["case"], w["i"], w["j"], w["i_a"], w["j_b"]
                    )?,
                }
            }
        }
        Format::Json => emit_json(
            out,
            &json!({
                "n": n,
                "x": x.literal(),
                "y": y.literal(),
                "method": method.name(),
                "adjacent": adj,
                "witness": witness,
            }),
        )?,
        Format::Csv => writeln!(
            out,
            "n,x,y,method,adjacent\n{n},{x},{y},{},{adj}",
            method.name()
        )?,
    }
    Ok(())
}

fn build(ctx: &Ctx, n: usize, method: Method) -> Result<SkeletonGraph> {
    check_slow(ctx, n, method)?;
    Ok(build_skeleton_with(n, method, ctx.skeleton_options())?)
}

fn skeleton(
    ctx: &Ctx,
    n: usize,
    method: Method,
    file: Option<PathBuf>,
    export: Export,
    out: &mut impl Write,
) -> Result<()> {
    let s = build(ctx, n, method)?;
    let body = match export {
        Export::Edgelist => s.to_edge_list(),
        Export::Dot => s.to_dot(),
        Export::Json => s.to_json() + "\n",
    };
    match file {
        Some(path) => {
            fs::write(&path, body).with_context(|| format!("writing {}", path.display()))?;
            let (v, e) = (s.vertex_count(), s.graph().edge_count());
            match ctx.format {
                Format::Text => writeln!(
                    out,
                    "n={n} vertices={v} edges={e} written to {}",
                    path.display()
                )?,
                Format::Json => emit_json(
                    out,
                    &json!({ "n": n, "vertices": v, "edges": e, "method": method.name() }),
                )?,
                Format::Csv => writeln!(
                    out,
                    "n,vertices,edges,method\n{n},{v},{e},{}",
                    method.name()
                )?,
            }
        }
        None => out.write_all(body.as_bytes())?,
    }
    Ok(())
}

fn diameters(
    ctx: &Ctx,
    from: usize,
    to: usize,
    method: Method,
    out: &mut impl Write,
) -> Result<()> {
    if to < from {
        bail!("--to {to} is below --n {from}");
    }
    if ctx.format == Format::Csv {
        writeln!(out, "n,vertices,edges,diameter")?;
    }
    for n in from..=to {
        let s = build(ctx, n, method)?;
        let d = diameter_with(s.graph(), ctx.exec)?;
        let (v, e) = (s.vertex_count(), s.graph().edge_count());
        match ctx.format {
            Format::Text => writeln!(out, "n={n} vertices={v} edges={e} diameter={d}")?,
            Format::Json => emit_json(
                out,
                &json!({ "n": n, "vertices": v, "edges": e, "diameter": d }),
            )?,
            Format::Csv => writeln!(out, "{n},{v},{e},{d}")?,
        }
    }
    Ok(())
}

fn clique(
    ctx: &Ctx,
    n: usize,
    construct: bool,
    exact: bool,
    budget: Option<f64>,
    out: &mut impl Write,
) -> Result<()> {
    let both = !construct && !exact;
    let family = if construct || both {
        Some(clique_construction(n)?)
    } else {
        None
    };
    let best = if exact || both {
        let s = build(ctx, n, Method::Fast)?;
        let budget = budget
            .map(Duration::try_from_secs_f64)
            .transpose()
            .context("--budget must be a non-negative number of seconds")?;
        let found = max_clique_within(s.graph(), DEFAULT_CLIQUE_CAP, budget)?;
        Some((
            found.size,
            found
                .members
                .iter()
                .map(|&i| s.vertices()[i].literal())
                .collect::<Vec<_>>(),
            found.proven,
        ))
    } else {
        None
    };
    match ctx.format {
        Format::Text => {
            if let Some(f) = &family {
                writeln!(out, "constructed clique: n={n} size={}", f.len())?;
                if construct {
                    for m in &f.members {
                        writeln!(out, "k={} s={} {}", m.k, m.s, m.encoding)?;
                    }
                }
            }
            if let Some((size, members, proven)) = &best {
                if *proven {
                    writeln!(out, "exact clique: n={n} size={size}")?;
                } else {
                    writeln!(
                        out,
                        "best clique within budget: n={n} size={size} (not proven maximum)"
                    )?;
                }
                if exact {
                    for m in members {
                        writeln!(out, "{m}")?;
                    }
                }
            }
        }
        Format::Json => {
            let constructed = family.as_ref().map(|f| {
                json!({
                    "size": f.len(),
                    "members": f.members.iter().map(|m| json!({ "k": m.k, "s": m.s, "encoding": m.encoding.literal() })).collect::<Vec<_>>(),
                })
            });
            let exact = best
                .as_ref()
                .map(|(size, members, proven)| json!({ "size": size, "proven": proven, "members": members }));
            emit_json(
                out,
                &json!({ "n": n, "constructed": constructed, "exact": exact }),
            )?;
        }
        Format::Csv => {
            writeln!(out, "n,constructed,exact,proven")?;
            let c = family
                .as_ref()
                .map(|f| f.len().to_string())
                .unwrap_or_default();
            let (e, p) = best
                .as_ref()
                .map(|(s, _, p)| (s.to_string(), p.to_string()))
                .unwrap_or_default();
            writeln!(out, "{n},{c},{e},{p}")?;
        }
    }
    Ok(())
}

fn path(ctx: &Ctx, n: usize, x: &str, y: &str, out: &mut impl Write) -> Result<()> {
    let (x, y) = (parse_enc(n, x)?, parse_enc(n, y)?);
    let p = four_hop_path(&x, &y)?;
    match ctx.format {
        Format::Text => {
            for h in p.literals() {
                writeln!(out, "{h}")?;
            }
        }
        Format::Json => emit_json(
            out,
            &json!({ "n": n, "edges": p.edge_count(), "path": p.literals() }),
        )?,
        Format::Csv => {
            writeln!(out, "step,literal")?;
            for (i, h) in p.literals().iter().enumerate() {
                writeln!(out, "{i},{h}")?;
            }
        }
    }
    Ok(())
}

fn solve_cmd(ctx: &Ctx, file: &PathBuf, method: SolveMethod, out: &mut impl Write) -> Result<()> {
    let text = fs::read_to_string(file).with_context(|| format!("reading {}", file.display()))?;
    let m = if text.trim_start().starts_with('{') {
        DistanceMatrix::from_json(&text)?
    } else {
        DistanceMatrix::from_csv(&text)?
    };
    let s = solve(&m, method)?;
    let j = s.to_json();
    match ctx.format {
        Format::Text => {
            let tour: Vec<String> = j.tour.iter().map(ToString::to_string).collect();
            writeln!(out, "method: {}", j.method)?;
            writeln!(out, "cost: {}", j.cost)?;
            writeln!(out, "tour: {}", tour.join(" "))?;
            writeln!(out, "encoding: {}", j.encoding.as_deref().unwrap_or("-"))?;
        }
        Format::Json => emit_json(out, &j)?,
        Format::Csv => {
            let tour: Vec<String> = j.tour.iter().map(ToString::to_string).collect();
            writeln!(out, "method,cost,tour,encoding")?;
            writeln!(
                out,
                "{},{},{},{}",
                j.method,
                j.cost,
                tour.join(" "),
                j.encoding.as_deref().unwrap_or("")
            )?;
        }
    }
    Ok(())
}

fn selftest(ctx: &Ctx, max_n: usize, random_pairs: usize, out: &mut impl Write) -> Result<bool> {
    if max_n < 3 {
        bail!("--max-n must be at least 3");
    }
    check_slow(ctx, max_n, Method::Oracle)?;
    let mut ok = true;
    let mut line =
        |out: &mut dyn Write, name: String, passed: bool, detail: String| -> Result<()> {
            ok &= passed;
            let verdict = if passed { "PASS" } else { "FAIL" };
            match ctx.format {
                Format::Text => writeln!(out, "{verdict} {name}: {detail}")?,
                Format::Json => {
                    serde_json::to_writer(
                        &mut *out,
                        &json!({ "check": name, "passed": passed, "detail": detail }),
                    )?;
                    writeln!(out)?;
                }
                Format::Csv => writeln!(out, "{name},{passed},{detail}")?,
            }
            Ok(())
        };
    if ctx.format == Format::Csv {
        writeln!(out, "check,passed,detail")?;
    }
    for n in 3..=max_n {
        let r = equivalence(n, ctx.exec)?;
        let detail = format!(
            "pairs={} non_adjacent={} fast!=exhaustive={} fast!=oracle={} exhaustive!=oracle={}",
            r.pairs, r.non_adjacent, r.fast_vs_exhaustive, r.fast_vs_oracle, r.exhaustive_vs_oracle
        );
        line(out, format!("equivalence n={n}"), r.passed(), detail)?;
        for c in invariants(n, ctx.exec)? {
            let detail = format!("cases={} failures={}", c.cases, c.failures);
            line(out, format!("{} n={n}", c.name), c.passed(), detail)?;
        }
    }
    for n in [max_n + 2, 2 * max_n, 4 * max_n] {
        let mut failures = 0;
        for k in 0..random_pairs as u64 {
            let x = random_encoding(n, ctx.seed.wrapping_add(2 * k))?;
            let y = random_encoding(n, ctx.seed.wrapping_add(2 * k + 1))?;
            if x != y && adjacent(&x, &y)? != adjacent(&y, &x)? {
                failures += 1;
            }
        }
        line(
            out,
            format!("random symmetry n={n}"),
            failures == 0,
            format!("cases={random_pairs} failures={failures}"),
        )?;
    }
    Ok(ok)
}
