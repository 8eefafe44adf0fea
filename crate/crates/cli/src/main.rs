mod report;

use std::fmt::Write as _;
use std::io::Write as _;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use preper_core::curves::{elliptic_points_bounded, rational_points_bounded, CurveId, ModelKind};
use preper_core::descent::c1_32_g;
use preper_core::dynamics::{graph_shape, preper_points, scan_with_jobs, OrbitClass, PreperGraph, QuadMap, ScanResult};
use preper_core::exactmath::{parse_rational, Rational};
use preper_core::families::{check_forbidden_cycles, family_point, validate_family, FamilyId};
use preper_core::ffjac::{jacobian_order, point_counts};
use preper_core::report::Check;
use preper_core::suite::{run_suite, Suite, SuiteOptions};
use serde_json::{json, Value};

use report::Report;

#[derive(Parser)]
#[command(name = "preper", version, about = "Rational preperiodic points of z^2 + c and the curves that classify them")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Json,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum ScanFormat {
    Json,
    Table,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    All,
    Theorems,
    Curves,
    Descent,
    Jacobian,
    Padic,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Suite {
        match s {
            SuiteArg::All => Suite::All,
            SuiteArg::Theorems => Suite::Theorems,
            SuiteArg::Curves => Suite::Curves,
            SuiteArg::Descent => Suite::Descent,
            SuiteArg::Jacobian => Suite::Jacobian,
            SuiteArg::Padic => Suite::Padic,
        }
    }
}

fn rational_arg(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

#[derive(Subcommand)]
enum Command {
    /// Rational preperiodic points of z^2 + c
    Graph {
        #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
        c: Rational,
        #[arg(long, value_enum, default_value = "json")]
        format: GraphFormat,
    },
    /// Census of graph shapes over all c = u/v^2 of bounded height
    Scan {
        #[arg(long)]
        height: u64,
        #[arg(long, env = "PREPER_JOBS", default_value_t = 1)]
        jobs: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: ScanFormat,
    },
    /// A member of a parametrized family, validated
    Family {
        family: FamilyId,
        #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
        param: Option<Rational>,
    },
    /// Rational points of bounded height on a registered curve
    CurvePoints {
        #[arg(long)]
        curve: CurveId,
        #[arg(long, default_value_t = 1000)]
        height: u64,
    },
    /// #J(F_p) for the Jacobian of y^2 = x^6 - 2x^4 + 2x^3 + 5x^2 + 2x + 1
    Jacobian {
        #[arg(long)]
        p: u64,
    },
    /// Run a verification suite
    Verify {
        #[arg(value_enum, default_value = "all")]
        suite: SuiteArg,
        #[arg(long, default_value_t = SuiteOptions::default().scan_height)]
        scan_height: u64,
        #[arg(long, default_value_t = SuiteOptions::default().search_height)]
        search_height: u64,
    },
}

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().collect();
    let cli = Cli::parse();
    let started = Instant::now();
    let command = argv.into_iter().skip(1).collect();
    match run(cli.command, command, started) {
        Ok(Output::Text(s)) => {
            emit(&s);
            ExitCode::SUCCESS
        }
        Ok(Output::Report(r)) => {
            emit(&format!("{}\n", r.to_json()));
            if r.failed() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

/// Writes to stdout, ignoring a closed pipe.
fn emit(s: &str) {
    let _ = std::io::stdout().lock().write_all(s.as_bytes());
}

enum Output {
    Text(String),
    Report(Report),
}

fn run(cmd: Command, argv: Vec<String>, started: Instant) -> preper_core::Result<Output> {
    let report = |checks: Vec<Check>, data: Option<Value>| Output::Report(Report::new(argv.clone(), checks, data, started));
    Ok(match cmd {
        Command::Graph { c, format } => {
            let g = preper_points(&QuadMap::new(c));
            match format {
                GraphFormat::Json => Output::Text(format!("{}\n", serde_json::to_string_pretty(&graph_json(&g)).expect("json"))),
                GraphFormat::Dot => Output::Text(graph_dot(&g)),
            }
        }
        Command::Scan { height, jobs, format } => {
            let census = scan_with_jobs(height, jobs)?;
            match format {
                ScanFormat::Table => Output::Text(census_table(&census)),
                ScanFormat::Json => report(scan_checks(&census), Some(census_json(&census))),
            }
        }
        Command::Family { family, param } => {
            let fp = family_point(family, param.as_ref())?;
            let mut checks = validate_family(&fp);
            checks.push(check_forbidden_cycles(&fp));
            let data = json!({
                "family": fp.family.name(),
                "parameter": fp.parameter.as_ref().map(|t| t.to_string()),
                "c": fp.c.to_string(),
                "aux": fp.aux.iter().map(|(n, v)| json!({"name": n, "value": v.to_string()})).collect::<Vec<_>>(),
                "points": fp.promised.iter().map(|(x, k)| json!({"x": x.to_string(), "orbit": k.label()})).collect::<Vec<_>>(),
            });
            report(checks, Some(data))
        }
        Command::CurvePoints { curve, height } => {
            let model = curve.model();
            let points: Vec<String> = match &model.kind {
                ModelKind::Hyperelliptic(g) => rational_points_bounded(g, height)?.iter().map(|p| p.to_string()).collect(),
                ModelKind::Weierstrass(e) => elliptic_points_bounded(e, height)?.iter().map(|p| p.to_string()).collect(),
                ModelKind::Line => {
                    return Err(preper_core::Error::InvalidInput(format!("{curve} has infinitely many rational points")))
                }
            };
            let data = json!({
                "curve": curve.name(),
                "equation": model.equation(),
                "height": height,
                "count": points.len(),
                "points": points,
            });
            report(Vec::new(), Some(data))
        }
        Command::Jacobian { p } => {
            let g = c1_32_g();
            let order = jacobian_order(&g, p)?;
            let (n1, n2) = point_counts(&g, p)?;
            report(Vec::new(), Some(json!({"p": p, "n1": n1, "n2": n2, "order": order})))
        }
        Command::Verify { suite, scan_height, search_height } => {
            let checks = run_suite(suite.into(), SuiteOptions { scan_height, search_height })?;
            report(checks, None)
        }
    })
}

fn graph_json(g: &PreperGraph) -> Value {
    json!({
        "c": g.c.to_string(),
        "vertices": g.vertices.iter().zip(&g.classes).map(|(v, k)| json!({"x": v.to_string(), "orbit": k.label()})).collect::<Vec<_>>(),
        "edges": g.edges().map(|(a, b)| json!({"from": a.to_string(), "to": b.to_string()})).collect::<Vec<_>>(),
        "includes_infinity": g.includes_infinity,
        "count_with_infinity": g.count_with_infinity(),
        "shape": graph_shape(g),
    })
}

fn graph_dot(g: &PreperGraph) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "digraph preper {{");
    let _ = writeln!(s, "  label=\"c = {}\";", g.c);
    for (v, k) in g.vertices.iter().zip(&g.classes) {
        let border = if matches!(k, OrbitClass::Periodic { .. }) { ", peripheries=2" } else { "" };
        let _ = writeln!(s, "  \"{v}\" [label=\"{v}\"{border}];");
    }
    for (a, b) in g.edges() {
        let _ = writeln!(s, "  \"{a}\" -> \"{b}\";");
    }
    s.push_str("}\n");
    s
}

fn scan_checks(r: &ScanResult) -> Vec<Check> {
    let list = |xs: &[Rational]| xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ");
    vec![
        Check::from_bool("scan.catalog", "every observed shape is in the derived catalog", r.out_of_catalog.is_empty())
            .with_value(r.out_of_catalog.iter().map(|(c, s)| format!("{c}: {s}")).collect::<Vec<_>>().join("; ")),
        Check::from_bool("scan.nine", "no graph has more than 9 points counting infinity", r.over_nine.is_empty())
            .with_value(list(&r.over_nine)),
        Check::from_bool("scan.m1", "type m_1 counts match the m-periodic counts", r.m1_violations.is_empty())
            .with_value(list(&r.m1_violations)),
    ]
}

fn census_json(r: &ScanResult) -> Value {
    json!({
        "height": r.height,
        "total": r.total,
        "rows": r.rows.iter().map(|row| json!({
            "shape": row.shape,
            "catalog_key": row.catalog_key,
            "count": row.count,
            "max_points": row.max_points,
            "samples": row.samples.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        })).collect::<Vec<_>>(),
        "out_of_catalog": r.out_of_catalog.iter().map(|(c, s)| json!({"c": c.to_string(), "shape": s})).collect::<Vec<_>>(),
        "over_nine": r.over_nine.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        "m1_violations": r.m1_violations.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
    })
}

fn census_table(r: &ScanResult) -> String {
    let mut s = format!("height {}: {} parameters\n", r.height, r.total);
    let _ = writeln!(s, "{:>8}  {:>6}  {:<28}  {:<24}  samples", "count", "points", "catalog", "shape");
    for row in &r.rows {
        let samples: Vec<String> = row.samples.iter().map(|c| c.to_string()).collect();
        let _ = writeln!(
            s,
            "{:>8}  {:>6}  {:<28}  {:<24}  {}",
            row.count,
            row.max_points,
            row.catalog_key.unwrap_or("OUT OF CATALOG"),
            row.shape,
            samples.join(" ")
        );
    }
    let _ = writeln!(s, "out of catalog: {}", r.out_of_catalog.len());
    let _ = writeln!(s, "over nine points: {}", r.over_nine.len());
    let _ = writeln!(s, "m_1 rule violations: {}", r.m1_violations.len());
    s
}
