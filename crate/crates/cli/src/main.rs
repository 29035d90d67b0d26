use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use nakrf::classifier::rf_table;
use nakrf::cluster::{all_dct, is_drf_bruteforce};
use nakrf::constructions::{
    fraccy_report, preproj_nakayama, trivext_report, tubular_report, wild_report,
    ConstructionReport, TubularType,
};
use nakrf::io::{AlgebraSpec, ExtRoute, ModuleSpec};
use nakrf::polygon::{enumerate_angulations, invariant_angulation_exists, PolygonCtx};
use nakrf::verify::{self, Limits, Suite, VerifyReport};
use nakrf::{is_drf_formula, Angulation, ClassRecord, Error};

mod table;

use table::Table;

#[derive(Parser)]
#[command(
    name = "nakrf",
    version,
    about = "d-representation-finiteness of self-injective Nakayama algebras"
)]
struct Cli {
    /// Emit JSON instead of plain text.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads for the parallel grids (default: all cores).
    #[arg(long, global = true, value_name = "N")]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate the divisibility criterion for Λ(n, ℓ) and d.
    Classify(Params),
    /// The criterion on a full grid of parameters.
    ClassifyTable {
        #[arg(long)]
        n_max: usize,
        #[arg(long)]
        loewy_max: usize,
        #[arg(long)]
        d_max: usize,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Search mod Λ(n, ℓ) for d-cluster-tilting modules.
    BruteNakayama {
        #[command(flatten)]
        params: Params,
        /// List every basic d-cluster-tilting module.
        #[arg(long)]
        list_ct: bool,
    },
    /// (d+1)-angulations of the ((d-1)ℓ+2)-gon.
    Angulations {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        pieces: usize,
        #[arg(long, conflicts_with_all = ["list", "invariant"])]
        count: bool,
        #[arg(long, conflicts_with = "invariant")]
        list: bool,
        /// Look for an angulation fixed by ρ^M.
        #[arg(long, value_name = "M")]
        invariant: Option<usize>,
    },
    /// Parameters of the construction corollaries.
    #[command(subcommand)]
    Construct(Construct),
    /// dim Ext^i(X, Y) over an algebra given as JSON.
    Ext {
        /// Algebra JSON, or @FILE.
        #[arg(long)]
        algebra: String,
        /// Module JSON: {"top":a,"len":t}, {"simple":v}, {"projective":v} or a representation.
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
        #[arg(long)]
        i: usize,
        #[arg(long, value_enum, default_value_t = Route::Auto)]
        route: Route,
    },
    /// Cross-validate the three routes and the engine.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct Params {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    loewy: usize,
    #[arg(long)]
    d: usize,
}

#[derive(Subcommand)]
enum Construct {
    Fraccy {
        #[arg(long)]
        a: usize,
        #[arg(long)]
        b: usize,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        ell: usize,
        /// Number of indecomposable projectives of Λ.
        #[arg(long)]
        p: Option<usize>,
    },
    Trivext {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        ell: usize,
    },
    Preproj {
        #[arg(long)]
        n: usize,
    },
    Tubular {
        /// One of 2,2,2,2 3,3,3 2,4,4 2,3,6.
        #[arg(long = "type", value_parser = parse_tubular)]
        ty: TubularType,
        #[arg(long)]
        d: usize,
    },
    Wild {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        ell: usize,
    },
}

#[derive(Args)]
struct VerifyArgs {
    /// Suites to run (repeatable; default all).
    #[arg(long = "suite", value_parser = parse_suite)]
    suites: Vec<Suite>,
    /// Largest polygon (number of corners) for the polygon suites.
    #[arg(long)]
    nmax: Option<usize>,
    /// Largest n for the brute-force grid.
    #[arg(long)]
    n_max: Option<usize>,
    #[arg(long)]
    loewy_max: Option<usize>,
    #[arg(long)]
    d_max: Option<usize>,
    /// Check a classification table (CSV or JSON) instead of running suites.
    #[arg(long, value_name = "FILE")]
    against_table: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Plain,
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Route {
    Auto,
    Resolution,
}

fn parse_tubular(s: &str) -> Result<TubularType, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// A failed command and the exit code it maps to.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Input(_) => 2,
            Error::Domain(_) => 1,
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

type CmdResult = Result<u8, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            eprintln!("error: --jobs must be positive");
            return ExitCode::from(2);
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .expect("thread pool is configured once");
    }
    let mut out = io::stdout().lock();
    match run(&cli, &mut out) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            let _ = out.flush();
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: &Cli, out: &mut impl Write) -> CmdResult {
    let json = cli.json;
    match &cli.command {
        Command::Classify(p) => {
            let r = is_drf_formula(p.n, p.loewy, p.d)?;
            if json {
                emit_json(out, &r)?;
            } else {
                emit(out, &records_table(&[r]).render())?;
            }
        }
        Command::ClassifyTable {
            n_max,
            loewy_max,
            d_max,
            format,
        } => {
            let rows = rf_table(*n_max, *loewy_max, *d_max)?;
            let format = if json { Format::Json } else { *format };
            match format {
                Format::Plain => emit(out, &records_table(&rows).render())?,
                Format::Json => emit_json(out, &rows)?,
                Format::Csv => write_csv(out, &rows)?,
            }
        }
        Command::BruteNakayama { params, list_ct } => {
            let r = is_drf_bruteforce(params.n, params.loewy, params.d)?;
            let sets = if *list_ct {
                Some(all_dct(params.n, params.loewy, params.d)?)
            } else {
                None
            };
            if json {
                let mut v = serde_json::to_value(&r).expect("serializable");
                if let Some(sets) = &sets {
                    v["sets"] = json!(sets);
                }
                emit_json(out, &v)?;
            } else {
                let mut text = format!("drf: {}\ncount: {}\n", r.drf, r.count);
                if let Some(w) = &r.witness {
                    text += &format!("witness: {}\n", modules_line(w));
                }
                for s in sets.iter().flatten() {
                    text += &format!("ct: {}\n", modules_line(s));
                }
                emit(out, &text)?;
            }
        }
        Command::Angulations {
            d,
            pieces,
            list,
            invariant,
            ..
        } => angulations(out, json, *d, *pieces, *list, *invariant)?,
        Command::Construct(c) => {
            let report = match c {
                Construct::Fraccy { a, b, d, ell, p } => fraccy_report(*a, *b, *d, *ell, *p)?,
                Construct::Trivext { p, m, d, ell } => trivext_report(*p, *m, *d, *ell)?,
                Construct::Preproj { n } => preproj_nakayama(*n)?,
                Construct::Tubular { ty, d } => tubular_report(*ty, *d)?,
                Construct::Wild { m, d, ell } => wild_report(*m, *d, *ell)?,
            };
            if json {
                emit_json(out, &report)?;
            } else {
                emit(out, &report_text(&report))?;
            }
        }
        Command::Ext {
            algebra,
            x,
            y,
            i,
            route,
        } => {
            let spec = AlgebraSpec::parse(&read_arg(algebra)?)?;
            let alg = spec.load()?;
            let (mx, my) = (
                ModuleSpec::parse(&read_arg(x)?)?,
                ModuleSpec::parse(&read_arg(y)?)?,
            );
            let route = match route {
                Route::Auto => ExtRoute::Auto,
                Route::Resolution => ExtRoute::Resolution,
            };
            let dim = alg.ext_dim(&mx, &my, *i, route)?;
            if json {
                emit_json(out, &json!({ "i": i, "dim": dim }))?;
            } else {
                emit(out, &format!("{dim}\n"))?;
            }
        }
        Command::Verify(args) => return verify_cmd(out, json, args),
    }
    Ok(0)
}

fn angulations(
    out: &mut impl Write,
    json: bool,
    d: usize,
    pieces: usize,
    list: bool,
    invariant: Option<usize>,
) -> Result<(), Failure> {
    let ctx = PolygonCtx::new(d, pieces)?;
    let corners = ctx.corners();
    if let Some(m) = invariant {
        let (exists, witness) = invariant_angulation_exists(&ctx, m);
        if json {
            emit_json(
                out,
                &json!({"d": d, "pieces": pieces, "N": corners, "m": m, "exists": exists, "witness": witness}),
            )
        } else {
            let mut text = format!("exists: {exists}\n");
            if let Some(w) = witness {
                text += &format!("witness: {}\n", angulation_line(&w));
            }
            emit(out, &text)
        }
    } else {
        let all = enumerate_angulations(&ctx);
        match (list, json) {
            (true, true) => emit_json(out, &all),
            (true, false) => {
                let text: String = all.iter().map(|a| angulation_line(a) + "\n").collect();
                emit(out, &text)
            }
            (false, true) => emit_json(
                out,
                &json!({"d": d, "pieces": pieces, "N": corners, "count": all.len()}),
            ),
            (false, false) => emit(out, &format!("{}\n", all.len())),
        }
    }
}

fn verify_cmd(out: &mut impl Write, json: bool, args: &VerifyArgs) -> CmdResult {
    let mut limits = Limits::default();
    if let Some(n) = args.nmax {
        limits.corners_max = n;
        limits.small_corners_max = limits.small_corners_max.min(n);
    }
    if let Some(n) = args.n_max {
        limits.brute_n_max = n;
    }
    if let Some(l) = args.loewy_max {
        limits.brute_loewy_max = l;
    }
    if let Some(d) = args.d_max {
        limits.brute_d_max = d;
    }
    let report = match &args.against_table {
        Some(path) => {
            let records = read_table(path)?;
            VerifyReport::from_suites(vec![verify::check_table(&records, &limits)?])
        }
        None => {
            let suites = if args.suites.is_empty() {
                Suite::ALL.to_vec()
            } else {
                args.suites.clone()
            };
            verify::run(&suites, &limits)?
        }
    };
    if json {
        emit_json(out, &report)?;
    } else {
        let mut t = Table::new(&["suite", "result", "checks", "seconds"]);
        for s in &report.suites {
            t.row(vec![
                s.suite.clone(),
                if s.passed { "PASS" } else { "FAIL" }.to_string(),
                s.checks.to_string(),
                format!("{:.2}", s.seconds),
            ]);
        }
        let mut text = t.render();
        for s in report.suites.iter().filter(|s| !s.passed) {
            if let Some(c) = &s.counterexample {
                text += &format!("counterexample ({}): {c}\n", s.suite);
            }
        }
        text += &format!("overall: {}\n", if report.passed { "PASS" } else { "FAIL" });
        emit(out, &text)?;
    }
    Ok(if report.passed { 0 } else { 1 })
}

fn read_table(path: &Path) -> Result<Vec<ClassRecord>, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
    if text.trim_start().starts_with('[') {
        return serde_json::from_str(&text)
            .map_err(|e| usage(format!("bad table JSON in {}: {e}", path.display())));
    }
    csv::Reader::from_reader(text.as_bytes())
        .deserialize()
        .collect::<Result<Vec<ClassRecord>, _>>()
        .map_err(|e| usage(format!("bad table CSV in {}: {e}", path.display())))
}

fn read_arg(arg: &str) -> Result<String, Failure> {
    match arg.strip_prefix('@') {
        Some(path) => {
            fs::read_to_string(path).map_err(|e| usage(format!("cannot read {path}: {e}")))
        }
        None => Ok(arg.to_string()),
    }
}

const RECORD_HEADER: [&str; 7] = ["n", "loewy", "d", "N", "t", "drf", "via"];

fn record_cells(r: &ClassRecord) -> Vec<String> {
    vec![
        r.n.to_string(),
        r.loewy.to_string(),
        r.d.to_string(),
        r.corners.to_string(),
        r.t.to_string(),
        r.drf.to_string(),
        r.via.to_string(),
    ]
}

fn records_table(rows: &[ClassRecord]) -> Table {
    let mut t = Table::new(&RECORD_HEADER);
    for r in rows {
        t.row(record_cells(r));
    }
    t
}

fn write_csv(out: &mut impl Write, rows: &[ClassRecord]) -> Result<(), Failure> {
    let mut w = csv::Writer::from_writer(out);
    let io_err = |e: csv::Error| usage(format!("write failed: {e}"));
    w.write_record(RECORD_HEADER).map_err(io_err)?;
    for r in rows {
        w.write_record(record_cells(r)).map_err(io_err)?;
    }
    w.flush().map_err(|e| usage(format!("write failed: {e}")))
}

fn modules_line(ms: &[nakrf::NakModule]) -> String {
    ms.iter()
        .map(|m| m.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn angulation_line(a: &Angulation) -> String {
    a.diagonals()
        .iter()
        .map(|d| format!("[{},{}]", d.x, d.y))
        .collect::<Vec<_>>()
        .join(" ")
}

fn report_text(r: &ConstructionReport) -> String {
    let mut s = format!("kind: {}\n", r.kind);
    for (k, v) in &r.params {
        let v = v.as_str().map_or_else(|| v.to_string(), str::to_string);
        s += &format!("{k}: {v}\n");
    }
    if let Some(c) = r.summands {
        s += &format!("summands: {c}\n");
    }
    if let Some(a) = r.nakayama {
        s += &format!("nakayama: n={} loewy={}\n", a.n, a.loewy);
    }
    if let Some(v) = r.verdict {
        s += &format!("drf (d={}): {} via {}\n", v.d, v.drf, v.via);
    }
    s
}

fn emit(out: &mut impl Write, text: &str) -> Result<(), Failure> {
    out.write_all(text.as_bytes())
        .map_err(|e| usage(format!("write failed: {e}")))
}

fn emit_json<T: serde::Serialize>(out: &mut impl Write, value: &T) -> Result<(), Failure> {
    let s = serde_json::to_string_pretty(value).expect("serializable");
    emit(out, &(s + "\n"))
}
