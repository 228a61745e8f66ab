//! `dualsl2`: run checks on G2^F = SL2(F_q[e]/(e^2)) and print reports.
//!
//! Exit status is 0 when every check passes, 1 when some check fails and 2
//! on a configuration error (bad `q`, exceeded budget, bad flags).

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use dualsl2::chartab::CharacterTable;
use dualsl2::group::g2f_order;
use dualsl2::lab::{dim_table, dim_table_report, run_check, Budget, Lab, CHECKS};
use dualsl2::report::CheckReport;
use dualsl2::Error;

const GROUP_BUDGET_VAR: &str = "DUALSL2_GROUP_BUDGET";
const DIXON_BUDGET_VAR: &str = "DUALSL2_DIXON_BUDGET";

#[derive(Parser)]
#[command(
    name = "dualsl2",
    version,
    about = "Character theory of SL2 over the dual numbers of F_q"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    LittleGroup,
    Dixon,
    Both,
}

#[derive(Args)]
struct Common {
    /// Odd prime power.
    #[arg(long, default_value_t = 3)]
    q: u64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Worker threads (output does not depend on this).
    #[arg(long)]
    threads: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// |G2^F| against q^4 (q^2 - 1).
    Order(Common),
    /// Conjugacy classes of G2^F.
    Classes(Common),
    /// The character table.
    Chartab {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = MethodArg::LittleGroup)]
        method: MethodArg,
    },
    /// The corrected dimension/count table (no group is built).
    DimTable(Common),
    /// Orbits of G^F on the characters of N.
    Orbits(Common),
    /// The variety Xbar: actions, orbits, permutation character.
    Variety(Common),
    /// Decomposition of the isotypic part of the permutation character.
    Theorem(Common),
    /// Nilpotent irreducibles realized on G2^F/(S,S)^F.
    Realize(Common),
    /// Run checks in dependency order.
    Verify {
        #[command(flatten)]
        common: Common,
        /// Run every check (the default when no --check is given).
        #[arg(long)]
        all: bool,
        /// Run only the named checks.
        #[arg(long = "check", value_parser = clap::builder::PossibleValuesParser::new(CHECKS))]
        checks: Vec<String>,
    },
}

/// A failure that stops the run.
enum Failure {
    Config(String),
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::EvenCharacteristic(_)
            | Error::NotPrime(_)
            | Error::NotPrimePower(_)
            | Error::ZeroDegree
            | Error::Budget { .. } => Failure::Config(e.to_string()),
            other => Failure::Check(other.to_string()),
        }
    }
}

struct Output {
    text: String,
    ok: bool,
}

fn env_budget(var: &str, default: u64) -> Result<u64, Failure> {
    match std::env::var(var) {
        Ok(s) => s.trim().parse().map_err(|_| {
            Failure::Config(format!("{var} must be a non-negative integer, got `{s}`"))
        }),
        Err(_) => Ok(default),
    }
}

fn budget() -> Result<Budget, Failure> {
    let d = Budget::default();
    Ok(Budget {
        group: env_budget(GROUP_BUDGET_VAR, d.group)?,
        dixon: env_budget(DIXON_BUDGET_VAR, d.dixon)?,
    })
}

fn lab(q: u64) -> Result<Lab, Failure> {
    Ok(Lab::new(q, budget()?)?)
}

fn pretty(v: &impl serde::Serialize) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn text_value(out: &mut String, indent: usize, key: &str, v: &Value) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(m) => {
            let _ = writeln!(out, "{pad}{key}:");
            for (k, x) in m {
                text_value(out, indent + 1, k, x);
            }
        }
        Value::Array(a) if a.iter().any(|x| x.is_object() || x.is_array()) => {
            let _ = writeln!(out, "{pad}{key}:");
            for (i, x) in a.iter().enumerate() {
                text_value(out, indent + 1, &format!("[{i}]"), x);
            }
        }
        other => {
            let _ = writeln!(out, "{pad}{key}: {other}");
        }
    }
}

fn render_reports(reports: &[CheckReport], format: Format) -> String {
    let mut out = String::new();
    match format {
        Format::Json if reports.len() == 1 => out = pretty(&reports[0]),
        Format::Json => {
            let all = reports.iter().all(CheckReport::passed);
            out = pretty(&json!({
                "status": if all { "PASS" } else { "FAIL" },
                "reports": reports,
            }));
        }
        Format::Csv => {
            out.push_str("check,q,status\n");
            for r in reports {
                let _ = writeln!(out, "{},{},{}", r.check, r.q, r.status.as_str());
            }
        }
        Format::Text => {
            for r in reports {
                let _ = writeln!(out, "{} {} (q = {})", r.status.as_str(), r.check, r.q);
                if let Value::Object(m) = &r.details {
                    for (k, v) in m {
                        text_value(&mut out, 1, k, v);
                    }
                }
            }
            if reports.len() > 1 {
                let passed = reports.iter().filter(|r| r.passed()).count();
                let _ = writeln!(out, "{passed}/{} checks passed", reports.len());
            }
        }
    }
    out
}

fn single(report: CheckReport, format: Format) -> Output {
    let ok = report.passed();
    Output {
        text: render_reports(&[report], format),
        ok,
    }
}

fn order(c: &Common) -> Result<Output, Failure> {
    let lab = lab(c.q)?;
    let order = lab.group().order() as u64;
    let formula = g2f_order(c.q);
    let report = CheckReport::new(
        "order",
        lab.q(),
        order == formula,
        json!({ "order": order, "formula": formula }),
    );
    Ok(single(report, c.format))
}

fn classes(c: &Common) -> Result<Output, Failure> {
    let lab = lab(c.q)?;
    let g = lab.group();
    let summaries = g.class_summaries();
    let text = match c.format {
        Format::Json => pretty(&json!({
            "q": lab.q(),
            "group_order": g.order(),
            "classes": summaries,
        })),
        Format::Csv => {
            let mut s = String::from("id,size,element_order\n");
            for cl in &summaries {
                let _ = writeln!(s, "{},{},{}", cl.id, cl.size, cl.element_order);
            }
            s
        }
        Format::Text => {
            let mut s = format!(
                "{} classes in a group of order {}\n",
                summaries.len(),
                g.order()
            );
            s.push_str("id  size  order  representative (a0 b0 c0 d0 a1 b1 c1 d1)\n");
            for (cl, full) in summaries.iter().zip(g.classes()) {
                let _ = writeln!(
                    s,
                    "{:<3} {:<5} {:<6} {}",
                    cl.id,
                    cl.size,
                    cl.element_order,
                    g.element(full.rep)
                        .coords()
                        .iter()
                        .map(|x| x.to_string())
                        .collect::<Vec<_>>()
                        .join(" ")
                );
            }
            s
        }
    };
    Ok(Output { text, ok: true })
}

fn table_text(out: &mut String, lab: &Lab, t: &CharacterTable) -> Result<(), Failure> {
    let degs = t.degrees(lab.group())?;
    let _ = writeln!(
        out,
        "character table of G2^F, q = {}, method {}, {} irreducibles",
        lab.q(),
        t.method().as_str(),
        t.len()
    );
    for (i, (row, d)) in t.irreducibles().iter().zip(&degs).enumerate() {
        let kind = t
            .kind(i)
            .map(|k| {
                format!(
                    " [{}]",
                    serde_json::to_value(k)
                        .expect("kind")
                        .as_str()
                        .unwrap_or("")
                )
            })
            .unwrap_or_default();
        let vals: Vec<String> = row.values().iter().map(|v| v.to_string()).collect();
        let _ = writeln!(
            out,
            "{} (degree {d}){kind}: {}",
            row.label(),
            vals.join(", ")
        );
    }
    Ok(())
}

fn chartab(c: &Common, method: MethodArg) -> Result<Output, Failure> {
    let lab = lab(c.q)?;
    let mut tables = Vec::new();
    if method != MethodArg::Dixon {
        tables.push(lab.table()?.clone());
    }
    if method != MethodArg::LittleGroup {
        tables.push(lab.dixon()?);
    }
    let agree = (tables.len() == 2).then(|| tables[0].same_rows(&tables[1]));
    let g = lab.group();
    let text = match c.format {
        Format::Json => {
            let js = tables
                .iter()
                .map(|t| t.to_json(g))
                .collect::<Result<Vec<_>, _>>()?;
            match agree {
                Some(a) => pretty(&json!({ "tables": js, "tables_agree": a })),
                None => pretty(&js[0]),
            }
        }
        Format::Csv => {
            let mut s = String::from("method,label,degree\n");
            for t in &tables {
                for (row, d) in t.irreducibles().iter().zip(t.degrees(g)?) {
                    let _ = writeln!(s, "{},{},{d}", t.method().as_str(), row.label());
                }
            }
            s
        }
        Format::Text => {
            let mut s = String::new();
            for t in &tables {
                table_text(&mut s, &lab, t)?;
            }
            s
        }
    };
    let mut text = text;
    if let (Some(a), Format::Text) = (agree, c.format) {
        let _ = writeln!(text, "tables agree up to row permutation: {a}");
    }
    Ok(Output {
        text,
        ok: agree.unwrap_or(true),
    })
}

fn dim_table_cmd(c: &Common) -> Result<Output, Failure> {
    let report = dim_table_report(c.q)?;
    if c.format != Format::Csv {
        return Ok(single(report, c.format));
    }
    let rows = dim_table(c.q)?;
    let mut s = String::from("dim,count\n");
    let (mut count, mut sq) = (0i64, 0i64);
    for r in &rows {
        let _ = writeln!(s, "{},{}", r.dim, r.count);
        count += r.count;
        sq += r.count * r.dim * r.dim;
    }
    let _ = writeln!(s, "sum,{count}");
    let _ = writeln!(s, "sum_dim_sq,{sq}");
    Ok(Output {
        text: s,
        ok: report.passed(),
    })
}

fn check_cmd(c: &Common, name: &str) -> Result<Output, Failure> {
    let lab = lab(c.q)?;
    Ok(single(run_check(&lab, name), c.format))
}

fn verify(c: &Common, checks: &[String]) -> Result<Output, Failure> {
    let lab = lab(c.q)?;
    let reports: Vec<CheckReport> = CHECKS
        .iter()
        .filter(|n| checks.is_empty() || checks.iter().any(|c| c == *n))
        .map(|n| run_check(&lab, n))
        .collect();
    let ok = reports.iter().all(CheckReport::passed);
    Ok(Output {
        text: render_reports(&reports, c.format),
        ok,
    })
}

fn run(cli: &Cli) -> Result<(Output, &Common), Failure> {
    let common = match &cli.command {
        Command::Order(c)
        | Command::Classes(c)
        | Command::DimTable(c)
        | Command::Orbits(c)
        | Command::Variety(c)
        | Command::Theorem(c)
        | Command::Realize(c) => c,
        Command::Chartab { common, .. } | Command::Verify { common, .. } => common,
    };
    if let Some(n) = common.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| Failure::Config(e.to_string()))?;
    }
    let out = match &cli.command {
        Command::Order(c) => order(c)?,
        Command::Classes(c) => classes(c)?,
        Command::Chartab { common, method } => chartab(common, *method)?,
        Command::DimTable(c) => dim_table_cmd(c)?,
        Command::Orbits(c) => check_cmd(c, "orbits")?,
        Command::Variety(c) => check_cmd(c, "variety")?,
        Command::Theorem(c) => check_cmd(c, "theorem")?,
        Command::Realize(c) => check_cmd(c, "realize")?,
        Command::Verify {
            common,
            all,
            checks,
        } => verify(common, if *all { &[] } else { checks })?,
    };
    Ok((out, common))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((out, common)) => {
            let written = match &common.out {
                Some(path) => std::fs::write(path, &out.text),
                None => std::io::stdout().write_all(out.text.as_bytes()),
            };
            if let Err(e) = written {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
            ExitCode::from(if out.ok { 0 } else { 1 })
        }
        Err(Failure::Config(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Check(msg)) => {
            eprintln!("FAIL: {msg}");
            ExitCode::from(1)
        }
    }
}
