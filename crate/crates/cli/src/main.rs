//! `sallytype`: classification, verification and sweeps for the
//! semigroups `S(e,m,n)`.

mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use sallytype_core::analysis::{self, Engine};
use sallytype_core::families::{full_family, Tagged};
use sallytype_core::{classify, toric_oracle, ClassificationReport, Error, Limits, SallyParams};

#[derive(Parser)]
#[command(name = "sallytype", version, about = "Toric ideals of numerical semigroups of Sally type")]
struct Cli {
    /// JSON file overriding the resource limits
    #[arg(long, global = true)]
    limits: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct Params {
    #[arg(long)]
    e: u32,
    #[arg(long)]
    m: u32,
    #[arg(long)]
    n: u32,
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum EngineArg {
    Family,
    Oracle,
    Both,
}

impl From<EngineArg> for Engine {
    fn from(e: EngineArg) -> Engine {
        match e {
            EngineArg::Family => Engine::Family,
            EngineArg::Oracle => Engine::Oracle,
            EngineArg::Both => Engine::Both,
        }
    }
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum What {
    Gens,
    Gb,
    Extras,
    Ideal,
}

#[derive(Subcommand)]
enum Command {
    /// Classify one semigroup and its projective closure
    Classify {
        #[command(flatten)]
        params: Params,
        #[arg(long, value_enum, default_value = "both")]
        engine: EngineArg,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Check the explicit families against the elimination oracle
    Verify {
        #[command(flatten)]
        params: Params,
    },
    /// Classify every (m,n) for a range of e
    Sweep {
        #[arg(long)]
        e_min: u32,
        #[arg(long)]
        e_max: u32,
        #[arg(long, value_enum, default_value = "oracle")]
        engine: EngineArg,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        /// Worker threads (default: available parallelism)
        #[arg(long)]
        jobs: Option<usize>,
        /// Keep only Cohen-Macaulay cases
        #[arg(long)]
        only_cm: bool,
        /// Keep only m = 1
        #[arg(long)]
        only_m1: bool,
    },
    /// Print generators, bases or completion elements
    Dump {
        #[command(flatten)]
        params: Params,
        #[arg(long, value_enum)]
        what: What,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long, value_enum, default_value = "oracle")]
        engine: EngineArg,
    },
}

/// A failure with its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::InvalidParams { .. } | Error::InvalidArgument(_) | Error::Parse(_) => 2,
            Error::ResourceLimit(_) | Error::NotArtinian(_) | Error::Overflow => 3,
            _ => 1,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: message.into(),
    }
}

fn load_limits(path: &Option<PathBuf>) -> Result<Limits, Failure> {
    match path {
        None => Ok(Limits::default()),
        Some(p) => {
            let text = std::fs::read_to_string(p).map_err(|e| usage(format!("{}: {e}", p.display())))?;
            serde_json::from_str(&text).map_err(|e| usage(format!("{}: {e}", p.display())))
        }
    }
}

fn params(p: Params) -> Result<SallyParams, Failure> {
    Ok(SallyParams::new(p.e, p.m, p.n)?)
}

fn render_report(r: &ClassificationReport, format: Format) -> String {
    match format {
        Format::Text => r.to_text(),
        Format::Json => serde_json::to_string_pretty(r).expect("serializable") + "\n",
        Format::Csv => format!("{}\n{}\n", ClassificationReport::CSV_HEADER, r.to_csv_row()),
    }
}

fn cmd_classify(p: Params, engine: EngineArg, format: Format, limits: Limits) -> Result<(), Failure> {
    let r = classify(params(p)?, engine.into(), limits)?;
    print!("{}", render_report(&r, format));
    Ok(())
}

fn cmd_verify(p: Params, limits: Limits) -> Result<(), Failure> {
    let q = params(p)?;
    if q.e < 10 {
        return Err(usage("theorem hypotheses require e >= 10"));
    }
    let claims = verify::run(q, limits)?;
    let mut failed = 0;
    for c in &claims {
        let (tag, detail) = match &c.verdict {
            verify::Verdict::Pass(d) => ("PASS", d),
            verify::Verdict::Skip(d) => ("SKIP", d),
            verify::Verdict::Fail(d) => {
                failed += 1;
                ("FAIL", d)
            }
        };
        println!("{tag} {:<20} {detail}", c.name);
    }
    if failed > 0 {
        return Err(Failure {
            code: 1,
            message: format!("{q}: {failed} claim(s) failed"),
        });
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn cmd_sweep(
    e_min: u32,
    e_max: u32,
    engine: EngineArg,
    format: Format,
    jobs: Option<usize>,
    only_cm: bool,
    only_m1: bool,
    limits: Limits,
) -> Result<(), Failure> {
    let ceiling = if engine == EngineArg::Family { 14 } else { 12 };
    if e_min < 4 || e_min > e_max {
        return Err(usage("need 4 <= e-min <= e-max"));
    }
    if e_max > ceiling {
        return Err(usage(format!("e-max is limited to {ceiling} for this engine")));
    }
    let cases: Vec<SallyParams> = (e_min..=e_max)
        .flat_map(SallyParams::all_for)
        .filter(|p| !only_m1 || p.m == 1)
        .collect();
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(j) = jobs {
        pool = pool.num_threads(j.max(1));
    }
    let pool = pool.build().map_err(|e| usage(e.to_string()))?;
    let results: Vec<(SallyParams, Result<ClassificationReport, Error>)> =
        pool.install(|| cases.par_iter().map(|&p| (p, classify(p, engine.into(), limits))).collect());

    let mut errors = 0;
    let mut rows = Vec::new();
    for (p, r) in &results {
        match r {
            Ok(r) if only_cm && !r.projectively_cm => {}
            Ok(r) => rows.push(Ok(r)),
            Err(e) => {
                errors += 1;
                rows.push(Err((p, e)));
            }
        }
    }
    match format {
        Format::Csv => {
            println!("{}", ClassificationReport::CSV_HEADER);
            for row in &rows {
                match row {
                    Ok(r) => println!("{}", r.to_csv_row()),
                    Err((p, e)) => println!("{},{},{},error: {}", p.e, p.m, p.n, e.to_string().replace(',', ";")),
                }
            }
        }
        Format::Json => {
            let values: Vec<serde_json::Value> = rows
                .iter()
                .map(|row| match row {
                    Ok(r) => serde_json::to_value(r).expect("serializable"),
                    Err((p, e)) => serde_json::json!({"e": p.e, "m": p.m, "n": p.n, "error": e.to_string()}),
                })
                .collect();
            println!("{}", serde_json::to_string_pretty(&values).expect("serializable"));
        }
        Format::Text => {
            println!("{:<12} {:>4} {:>5} {:>5} {:>4} {:>4}", "params", "mu", "cm", "gor", "type", "reg");
            for row in &rows {
                match row {
                    Ok(r) => println!(
                        "{:<12} {:>4} {:>5} {:>5} {:>4} {:>4}",
                        format!("({},{},{})", r.e, r.m, r.n),
                        r.mu,
                        r.projectively_cm,
                        r.projective_gorenstein,
                        r.cm_type.map(|t| t.to_string()).unwrap_or_else(|| "-".into()),
                        r.regularity
                    ),
                    Err((p, e)) => println!("{p:<12} error: {e}"),
                }
            }
        }
    }
    if errors > 0 {
        return Err(Failure {
            code: 1,
            message: format!("{errors} case(s) failed"),
        });
    }
    Ok(())
}

fn print_tagged(items: &[Tagged], p: SallyParams, format: Format, warning: &Option<String>) {
    let vs = sallytype_core::VariableSet::sally(p);
    match format {
        Format::Json => {
            let v: Vec<serde_json::Value> = items
                .iter()
                .map(|t| serde_json::json!({"binomial": t.binomial.render(&vs), "provenance": t.provenance}))
                .collect();
            println!("{}", serde_json::to_string_pretty(&v).expect("serializable"));
        }
        _ => {
            for t in items {
                println!("{}\t# {}", t.binomial.render(&vs), t.provenance);
            }
        }
    }
    if let Some(w) = warning {
        eprintln!("warning: {w}");
    }
}

fn cmd_dump(p: Params, what: What, format: Format, engine: EngineArg, limits: Limits) -> Result<(), Failure> {
    let q = params(p)?;
    match what {
        What::Gens | What::Extras => {
            let fam = full_family(q)?;
            let items = if what == What::Gens { &fam.base } else { &fam.extras };
            print_tagged(items, q, format, &fam.warning);
        }
        What::Gb | What::Ideal => {
            let (gb, _) = analysis::affine_basis(q, engine.into(), limits)?;
            let list = if what == What::Gb {
                gb.elements().to_vec()
            } else {
                toric_oracle::minimal_generators(&gb, limits)?
            };
            match format {
                Format::Json => {
                    let v: Vec<String> = list.iter().map(|b| b.render(gb.variables())).collect();
                    println!("{}", serde_json::to_string_pretty(&v).expect("serializable"));
                }
                _ => {
                    for b in &list {
                        println!("{}", b.render(gb.variables()));
                    }
                }
            }
        }
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), Failure> {
    let limits = load_limits(&cli.limits)?;
    match cli.command {
        Command::Classify { params, engine, format } => cmd_classify(params, engine, format, limits),
        Command::Verify { params } => cmd_verify(params, limits),
        Command::Sweep {
            e_min,
            e_max,
            engine,
            format,
            jobs,
            only_cm,
            only_m1,
        } => cmd_sweep(e_min, e_max, engine, format, jobs, only_cm, only_m1, limits),
        Command::Dump {
            params,
            what,
            format,
            engine,
        } => cmd_dump(params, what, format, engine, limits),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
