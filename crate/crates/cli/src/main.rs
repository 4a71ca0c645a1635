use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Parser, ValueEnum};
use theta_cli::ast::{Command, JacquetIndex};
use theta_cli::oracles::{self, Oracle};
use theta_cli::session::{jacquet_output, Session};
use theta_cli::tables::emit_tables;
use theta_cli::{document, error_document, SCHEMA_VERSION};
use theta_core::jacquet::{filtration, FiltrationSpec, Side};

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SideArg {
    #[value(alias = "orthogonal")]
    Orth,
    #[value(alias = "symplectic")]
    Sympl,
}

/// Explicit theta lifts for GSp(4), L-parameters and Jacquet filtrations.
///
/// Without a mode flag, reads a program in the declaration language from
/// `--input` (or standard input) and runs it.
#[derive(Parser, Debug)]
#[command(name = "theta", version)]
#[command(group(ArgGroup::new("index").args(["k", "t"])))]
struct Args {
    /// Program file; `-` for standard input.
    #[arg(long, value_name = "FILE")]
    input: Option<PathBuf>,
    /// Emit JSON documents, one per line.
    #[arg(long)]
    json: bool,
    /// Print the 19 rows of the three lift tables.
    #[arg(long, conflicts_with_all = ["jacquet", "check", "input"])]
    emit_tables: bool,
    /// Print the Jacquet-module filtration described by --m, --n, --side and --k or --t.
    #[arg(long, requires_all = ["m", "n", "side"], conflicts_with_all = ["check", "input"])]
    jacquet: bool,
    #[arg(long)]
    m: Option<u32>,
    #[arg(long)]
    n: Option<u32>,
    #[arg(long, value_enum)]
    side: Option<SideArg>,
    /// Index on the symplectic side.
    #[arg(long)]
    k: Option<u32>,
    /// Index on the orthogonal side.
    #[arg(long)]
    t: Option<u32>,
    /// Witt index of the quadratic space; defaults to m/2.
    #[arg(long)]
    r: Option<u32>,
    #[arg(long)]
    isometry: bool,
    /// Run a named consistency oracle (or `all`) over a seeded corpus.
    #[arg(long, value_name = "ORACLE", conflicts_with = "input")]
    check: Option<String>,
    /// Corpus seed for --check.
    #[arg(long, default_value_t = 1)]
    seed: u64,
}

const EXIT_USAGE: u8 = 1;
const EXIT_INVARIANT: u8 = 2;

fn usage(msg: &str) -> ExitCode {
    eprintln!("theta: {msg}");
    ExitCode::from(EXIT_USAGE)
}

fn main() -> ExitCode {
    let args = Args::parse();
    if args.emit_tables {
        return tables(args.json);
    }
    if args.jacquet {
        return jacquet(&args);
    }
    if let Some(name) = &args.check {
        return check(name, args.seed, args.json);
    }
    program(&args)
}

fn tables(json: bool) -> ExitCode {
    for row in emit_tables() {
        if json {
            println!("{}", row.to_json());
        } else {
            println!("{row}");
        }
    }
    ExitCode::SUCCESS
}

fn jacquet(args: &Args) -> ExitCode {
    let side = match (args.side, args.k, args.t) {
        (Some(SideArg::Sympl), Some(k), None) => Side::Symplectic { k },
        (Some(SideArg::Orth), None, Some(t)) => Side::Orthogonal { t },
        (Some(SideArg::Sympl), ..) => return usage("--side sympl needs --k"),
        _ => return usage("--side orth needs --t"),
    };
    let (m, n) = (args.m.unwrap_or_default(), args.n.unwrap_or_default());
    let spec = match FiltrationSpec::new(m, n, args.r.unwrap_or(m / 2), side, args.isometry) {
        Ok(s) => s,
        Err(e) => return usage(&e.to_string()),
    };
    let index = match side {
        Side::Symplectic { k } => JacquetIndex::K(k),
        Side::Orthogonal { t } => JacquetIndex::T(t),
    };
    let statement = Command::Jacquet { m, n, index, r: args.r, isometry: args.isometry };
    let (out, text) = jacquet_output(&spec);
    let checks: Vec<(String, bool)> =
        filtration(&spec).iter().map(|q| (format!("absorption[{}]", q.index), q.absorbed())).collect();
    let ok = checks.iter().all(|(_, b)| *b);
    if args.json {
        let checks: Vec<_> = checks.iter().map(|(n, p)| serde_json::json!({"name": n, "passed": p})).collect();
        let doc = serde_json::json!({
            "schema_version": SCHEMA_VERSION,
            "input": statement.to_string(),
            "operation": "jacquet",
            "output": out,
            "provenance": null,
            "invariant_checks": checks,
        });
        println!("{doc}");
    } else {
        println!("{text}");
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_INVARIANT)
    }
}

fn check(name: &str, seed: u64, json: bool) -> ExitCode {
    let which: Vec<Oracle> = if name == "all" {
        Oracle::ALL.to_vec()
    } else {
        match name.parse() {
            Ok(o) => vec![o],
            Err(e) => return usage(&e),
        }
    };
    let mut ok = true;
    for o in which {
        let report = oracles::run(o, seed);
        ok &= report.passed();
        if json {
            let doc = serde_json::json!({
                "schema_version": SCHEMA_VERSION,
                "oracle": o.name(),
                "seed": seed,
                "cases": report.cases,
                "passed": report.passed(),
                "failures": report.failures,
            });
            println!("{doc}");
        } else {
            println!("{} {}: {report}", if report.passed() { "PASS" } else { "FAIL" }, o.name());
            for f in report.failures.iter().take(5) {
                println!("    {f}");
            }
        }
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_INVARIANT)
    }
}

fn program(args: &Args) -> ExitCode {
    let mut src = String::new();
    let read = match &args.input {
        Some(p) if p.as_os_str() != "-" => std::fs::read_to_string(p).map(|s| src = s),
        _ => std::io::stdin().read_to_string(&mut src).map(drop),
    };
    if let Err(e) = read {
        return usage(&format!("cannot read input: {e}"));
    }
    let stmts = match theta_cli::parse::parse_program(&src) {
        Ok(s) => s,
        Err(e) => {
            if args.json {
                let line = src.lines().nth(e.pos.line.saturating_sub(1)).unwrap_or_default();
                println!("{}", error_document(line, &e.clone().into()));
            }
            return usage(&e.to_string());
        }
    };
    let mut session = Session::new();
    let mut invariants_ok = true;
    for stmt in &stmts {
        match session.execute(stmt) {
            Ok(Some(o)) => {
                invariants_ok &= o.all_checks_pass();
                if args.json {
                    println!("{}", document(&o));
                } else {
                    let tag = o.provenance.as_deref().map(|p| format!("  [{p}]")).unwrap_or_default();
                    println!("{}{tag}", o.summary);
                    for (name, _) in o.checks.iter().filter(|(_, ok)| !ok) {
                        println!("  invariant failed: {name}");
                    }
                }
            }
            Ok(None) => {}
            Err(e) => {
                if args.json {
                    println!("{}", error_document(&stmt.to_string(), &e));
                }
                return usage(&e.to_string());
            }
        }
    }
    if invariants_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_INVARIANT)
    }
}
