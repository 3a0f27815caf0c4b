use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::process::ExitCode;
use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use qcap::bailey::{generate_hierarchy_lhs, twisted_chain};
use qcap::identities::{case_ids, find_case, hierarchy_lhs, registry, run, Family, GridConfig, IdentityCase, Params};
use qcap::partitions::{counts_csv, weighted_csv, WeightedTheorem};

#[derive(Parser)]
#[command(name = "qcap", version, about = "Exact q-series identity checker")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run identity cases over a parameter grid.
    Verify(VerifyArgs),
    /// Print one side of an identity, e.g. `rhs:new_fin_cap_1 --L 2`.
    Series(SeriesArgs),
    /// Partition count tables.
    #[command(subcommand)]
    Partitions(PartitionsCmd),
    /// Generate a hierarchy member through the Bailey lemma.
    Hierarchy(HierarchyArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Args)]
struct VerifyArgs {
    /// Case id; repeatable.
    #[arg(long = "case")]
    cases: Vec<String>,
    /// Run every registered case.
    #[arg(long)]
    all: bool,
    #[arg(long = "L-max", default_value_t = 8)]
    l_max: i64,
    #[arg(long = "M-max", default_value_t = 8)]
    m_max: i64,
    #[arg(long = "f-max", default_value_t = 3)]
    f_max: i64,
    /// Fix the twist; all `0 <= s <= f` when absent.
    #[arg(long)]
    s: Option<i64>,
    #[arg(long = "nu-max", default_value_t = 2)]
    nu_max: i64,
    #[arg(long = "k-max", default_value_t = 4)]
    k_max: i64,
    #[arg(long, default_value_t = 30)]
    trunc: i64,
    #[arg(long, env = "QCAP_JOBS")]
    jobs: Option<usize>,
    /// Write reports here instead of stdout.
    #[arg(long)]
    out: Option<String>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Omit the per-report `millis` field.
    #[arg(long)]
    no_timing: bool,
}

#[derive(Args)]
struct SeriesArgs {
    /// `lhs:<id>`, `rhs:<id>`, `sum:<id>` or `product:<id>`.
    expr: String,
    /// Parameters as `--name value`; `--trunc` sets `N`.
    #[arg(trailing_var_arg = true, allow_hyphen_values = true)]
    params: Vec<String>,
}

#[derive(Subcommand)]
enum PartitionsCmd {
    /// `n, C_m, D_m` rows.
    Counts {
        #[arg(long)]
        m: Option<u32>,
        #[arg(long = "n-max", default_value_t = 40)]
        n_max: u32,
    },
    /// Signed totals of both sides of a weighted theorem.
    Weighted {
        #[arg(long)]
        theorem: String,
        #[arg(long = "n-max", default_value_t = 25)]
        n_max: u32,
    },
}

#[derive(Args)]
struct HierarchyArgs {
    #[arg(long, default_value = "cap1")]
    family: String,
    #[arg(long, default_value_t = 1)]
    f: i64,
    /// Twist of the first hierarchy; prints the chain checkpoints.
    #[arg(long)]
    s: Option<i64>,
    #[arg(long = "L", default_value_t = 3)]
    l: i64,
}

fn config_error(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn verdict(ok: bool) -> ExitCode {
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn select(args: &VerifyArgs) -> Result<Vec<&'static IdentityCase>, String> {
    if args.all {
        return Ok(registry().iter().collect());
    }
    if args.cases.is_empty() {
        return Err("pass --case <id> or --all".into());
    }
    args.cases
        .iter()
        .map(|id| {
            find_case(id).map_err(|_| format!("unknown case id `{id}`; valid ids:\n  {}", case_ids().join("\n  ")))
        })
        .collect()
}

fn cmd_verify(args: VerifyArgs) -> ExitCode {
    let cases = match select(&args) {
        Ok(c) => c,
        Err(e) => return config_error(e),
    };
    if [args.l_max, args.m_max, args.f_max, args.nu_max, args.k_max, args.trunc].iter().any(|&v| v < 0) {
        return config_error("ranges and --trunc must be non-negative");
    }
    let cfg = GridConfig {
        l_max: args.l_max,
        m_max: args.m_max,
        f_max: args.f_max,
        s: args.s,
        nu_max: args.nu_max,
        k_max: args.k_max,
        trunc: args.trunc,
    };
    let jobs_n = args.jobs.unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
    let jobs: Vec<_> = cases.iter().flat_map(|&c| c.grid(&cfg).into_iter().map(move |p| (c, p))).collect();
    let s = args.s.map_or("all".to_string(), |s| s.to_string());
    eprintln!(
        "qcap verify: {} cases, {} jobs; L-max={} M-max={} f-max={} s={s} nu-max={} k-max={} trunc={} threads={jobs_n}",
        cases.len(),
        jobs.len(),
        cfg.l_max,
        cfg.m_max,
        cfg.f_max,
        cfg.nu_max,
        cfg.k_max,
        cfg.trunc
    );

    let mut out: Box<dyn Write> = match &args.out {
        Some(path) => match File::create(path) {
            Ok(f) => Box::new(BufWriter::new(f)),
            Err(e) => return config_error(format!("cannot open {path}: {e}")),
        },
        None => Box::new(BufWriter::new(io::stdout().lock())),
    };

    let cancel = Arc::new(AtomicBool::new(false));
    let flag = cancel.clone();
    let _ = ctrlc::set_handler(move || flag.store(true, Ordering::SeqCst));

    let (reports, summary) = run(&jobs, jobs_n, &cancel, !args.no_timing);
    let written = (|| -> io::Result<()> {
        for r in &reports {
            match args.format {
                Format::Json => writeln!(out, "{}", r.to_json_line())?,
                Format::Text => {
                    let label = format!("{:?}", r.verdict).to_uppercase();
                    write!(out, "{label:5} {} [{}] {}", r.id, r.params, r.mode)?;
                    if let Some(m) = &r.first_mismatch {
                        write!(out, " first mismatch at q^{}: {} vs {}", m.exponent, m.lhs, m.rhs)?;
                    }
                    if let Some(e) = &r.error {
                        write!(out, " error: {e}")?;
                    }
                    writeln!(out)?;
                }
            }
        }
        match args.format {
            Format::Json => writeln!(out, "{}", serde_json::json!({ "summary": summary }))?,
            Format::Text => writeln!(
                out,
                "total {} passed {} failed {} errors {}{}",
                summary.total,
                summary.passed,
                summary.failed,
                summary.errors,
                if summary.cancelled { " (cancelled)" } else { "" }
            )?,
        }
        out.flush()
    })();
    if let Err(e) = written {
        eprintln!("error: writing report: {e}");
        return ExitCode::from(1);
    }
    verdict(summary.all_passed())
}

/// Resolve `id`, accepting `<id>_<d>` for cases whose first parameter
/// selects a variant, e.g. `cap_analytic_1`.
fn resolve_expr_case(id: &str, params: &mut Params) -> Option<&'static IdentityCase> {
    if let Ok(c) = find_case(id) {
        return Some(c);
    }
    let (base, d) = id.rsplit_once('_')?;
    let d: i64 = d.parse().ok()?;
    let c = find_case(base).ok()?;
    let first = c.params.first()?.name;
    if !params.contains(first) {
        params.set(first, d);
    }
    Some(c)
}

fn parse_series_params(raw: &[String]) -> Result<(Params, Option<i64>), String> {
    let mut p = Params::new();
    let mut trunc = None;
    let mut it = raw.iter();
    while let Some(flag) = it.next() {
        let name = flag.strip_prefix("--").ok_or_else(|| format!("expected --name, got `{flag}`"))?;
        let value = it.next().ok_or_else(|| format!("missing value for {flag}"))?;
        let v: i64 = value.parse().map_err(|_| format!("{flag}: `{value}` is not an integer"))?;
        if name == "trunc" {
            trunc = Some(v);
        } else {
            p.set(&name.replace('-', "_"), v);
        }
    }
    Ok((p, trunc))
}

fn cmd_series(args: SeriesArgs) -> ExitCode {
    let Some((side, id)) = args.expr.split_once(':') else {
        return config_error("expected <side>:<id> with side lhs, rhs, sum or product");
    };
    let lhs = match side {
        "lhs" | "sum" => true,
        "rhs" | "product" => false,
        _ => return config_error(format!("unknown side `{side}`")),
    };
    let (mut params, trunc) = match parse_series_params(&args.params) {
        Ok(x) => x,
        Err(e) => return config_error(e),
    };
    let Some(case) = resolve_expr_case(id, &mut params) else {
        return config_error(format!("unknown case id `{id}`; valid ids:\n  {}", case_ids().join("\n  ")));
    };
    let takes_n = case.params.iter().any(|s| s.name == "N");
    if let (Some(n), true) = (trunc, takes_n) {
        params.set("N", n);
    }
    let resolved = match case.resolve(&params) {
        Ok(p) => p,
        Err(e) => return config_error(e),
    };
    let value = if lhs { (case.lhs)(&resolved) } else { (case.rhs)(&resolved) };
    match value {
        Ok(s) => {
            let s = match (trunc, takes_n) {
                (Some(n), false) => s.truncate(n),
                _ => s,
            };
            println!("{s}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn cmd_partitions(cmd: PartitionsCmd) -> ExitCode {
    let (csv, ok) = match cmd {
        PartitionsCmd::Counts { m, n_max } => {
            if m.is_some_and(|m| m != 1 && m != 2) {
                return config_error("m must be 1 or 2");
            }
            match counts_csv(m, n_max) {
                Ok(x) => x,
                Err(e) => return config_error(e),
            }
        }
        PartitionsCmd::Weighted { theorem, n_max } => match theorem.parse::<WeightedTheorem>() {
            Ok(th) => weighted_csv(th, n_max),
            Err(e) => return config_error(e),
        },
    };
    print!("{csv}");
    verdict(ok)
}

fn cmd_hierarchy(args: HierarchyArgs) -> ExitCode {
    let fam: Family = match args.family.parse() {
        Ok(f) => f,
        Err(e) => return config_error(format!("{e}; families: {}", Family::ALL.map(|f| f.name()).join(", "))),
    };
    if args.l < 0 || args.f < 0 {
        return config_error("f and L must be non-negative");
    }
    let result = (|| -> qcap::Result<bool> {
        match args.s {
            Some(s) => {
                if fam != Family::Cap1 {
                    return Err(qcap::QError::ParamOutOfRange("--s applies to the cap1 family only".into()));
                }
                let cps = twisted_chain(args.f, s, args.l)?;
                for cp in &cps {
                    println!("{}: beta_{} = {}", cp.name, args.l, cp.chain.betas[args.l as usize]);
                }
                let printed = hierarchy_lhs(fam, args.f, s, args.l)?;
                println!("printed: {printed}");
                Ok(cps.last().is_some_and(|cp| cp.chain.betas[args.l as usize] == printed))
            }
            None => {
                let generated = generate_hierarchy_lhs(fam, args.f, args.l)?;
                let printed = hierarchy_lhs(fam, args.f, 0, args.l)?;
                println!("generated: {generated}");
                println!("printed: {printed}");
                Ok(generated == printed)
            }
        }
    })();
    match result {
        Ok(ok) => {
            println!("match: {ok}");
            verdict(ok)
        }
        Err(e) => config_error(e),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.cmd {
        Cmd::Verify(a) => cmd_verify(a),
        Cmd::Series(a) => cmd_series(a),
        Cmd::Partitions(c) => cmd_partitions(c),
        Cmd::Hierarchy(a) => cmd_hierarchy(a),
    }
}
