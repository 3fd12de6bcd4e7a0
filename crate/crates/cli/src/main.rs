//! `stabsys`: command-line front end.
//!
//! Every command prints one JSON report on standard output. Exit status is
//! 0 on success, 1 when the computation rejects its input and 2 on usage
//! errors.

mod plot;
mod report;

use std::ffi::OsString;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use stabsys::bounds::{
    admissible_semistable, clifford_index, clifford_upper, extremal_classify, h0_upper, system_clifford_bound,
    system_section_bound, H0Hypothesis, SheafClass,
};
use stabsys::charges::{phase_display, slope, ChargeFamily};
use stabsys::formal::{
    destabilizer_constraints_minimal, hn_filtration, scan_minimal, torsion_pair_split, FormalCategory, MinimalTarget,
};
use stabsys::quadratic::support_certificate;
use stabsys::regions::{bg_solve, orbit_compare, region_check, t_window, ParamTriple};
use stabsys::walls::{chamber_scan, slope_diff_fn, ChamberScan, ScanMode, ScanOptions};
use stabsys::{ClassVector, Genus, Rational};

use report::Report;

const BG_NOTES: [&str; 2] = [
    "p is solved as (alpha + 1 - u) / alpha^2; the form (alpha - u + 1) / alpha does not satisfy the \
     coefficient system",
    "the dagger charge uses d-coefficient t(A + p beta) and k-coefficient (p alpha - 1) beta; the \
     opposite signs do not reproduce Delta",
];

#[derive(Parser, Debug)]
#[command(name = "stabsys", version, about = "Exact stability-condition computations for coherent systems")]
struct Cli {
    /// Output format; csv is available for `walls scan` only.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate a central charge and its slope on a class.
    Eval(EvalArgs),
    /// Parameter-region membership.
    Region {
        #[command(subcommand)]
        cmd: RegionCmd,
    },
    /// Bogomolov-Gieseker coefficient solver.
    Bg {
        #[command(subcommand)]
        cmd: BgCmd,
    },
    /// Support-property certificates.
    Support {
        #[command(subcommand)]
        cmd: SupportCmd,
    },
    /// Section-count and Clifford bounds.
    Bounds {
        #[command(subcommand)]
        cmd: BoundsCmd,
    },
    /// Fixture-based HN filtrations and minimal-object scans.
    Formal {
        #[command(subcommand)]
        cmd: FormalCmd,
    },
    /// Walls and chambers in gamma.
    Walls {
        #[command(subcommand)]
        cmd: WallsCmd,
    },
    /// Compare two charges up to the GL+(2,R) action.
    Orbit(OrbitArgs),
    /// Render a `walls scan` report as SVG.
    Plot(PlotArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ChargeKind {
    Standard,
    StandardBeta,
    Tilted,
    Dagger,
}

#[derive(Args, Debug)]
struct EvalArgs {
    #[arg(long, value_enum)]
    charge: ChargeKind,
    #[arg(long, allow_hyphen_values = true)]
    class: ClassVector,
    #[arg(long, allow_hyphen_values = true)]
    alpha: Rational,
    #[arg(long, allow_hyphen_values = true)]
    beta: Option<Rational>,
    #[arg(long, allow_hyphen_values = true)]
    gamma: Option<Rational>,
    /// BG scale for the dagger charge; defaults to the midpoint of the t window.
    #[arg(long, allow_hyphen_values = true)]
    t: Option<Rational>,
}

#[derive(Args, Debug)]
struct TripleArgs {
    #[arg(long, allow_hyphen_values = true)]
    alpha: Rational,
    #[arg(long, allow_hyphen_values = true)]
    beta: Rational,
    #[arg(long, allow_hyphen_values = true)]
    gamma: Rational,
}

#[derive(Subcommand, Debug)]
enum RegionCmd {
    Check(TripleArgs),
}

#[derive(Subcommand, Debug)]
enum BgCmd {
    Solve {
        #[command(flatten)]
        p: TripleArgs,
        #[arg(long, allow_hyphen_values = true)]
        t: Option<Rational>,
    },
}

#[derive(Subcommand, Debug)]
enum SupportCmd {
    Certify {
        #[arg(long, allow_hyphen_values = true)]
        alpha: Rational,
        #[arg(long, allow_hyphen_values = true, default_value = "0")]
        beta: Rational,
        #[arg(long, default_value_t = 30)]
        bound: i64,
    },
}

#[derive(Subcommand, Debug)]
enum BoundsCmd {
    Check {
        #[arg(long, allow_hyphen_values = true)]
        class: ClassVector,
        #[arg(long, allow_hyphen_values = true, default_value = "1")]
        alpha: Rational,
        #[arg(long)]
        genus: Option<u32>,
        /// h^0 of the underlying sheaf, when known.
        #[arg(long)]
        h0: Option<i64>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum TargetArg {
    Op,
    V1,
}

#[derive(Subcommand, Debug)]
enum FormalCmd {
    Hn {
        #[arg(long)]
        fixture: PathBuf,
        #[arg(long)]
        object: String,
        #[arg(long, allow_hyphen_values = true)]
        alpha: Rational,
        /// Also split the filtration at this beta.
        #[arg(long, allow_hyphen_values = true)]
        beta: Option<Rational>,
    },
    ScanMinimal {
        #[command(flatten)]
        p: TripleArgs,
        #[arg(long, default_value_t = 40)]
        bound: i64,
        /// Restrict to one minimal object; both by default.
        #[arg(long, value_enum)]
        target: Option<TargetArg>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Minimal,
    Shifted,
}

#[derive(Args, Debug)]
struct WallsScanArgs {
    #[arg(long, allow_hyphen_values = true)]
    class: ClassVector,
    #[arg(long, allow_hyphen_values = true)]
    alpha: Rational,
    #[arg(long, allow_hyphen_values = true)]
    beta: Rational,
    #[arg(long, allow_hyphen_values = true)]
    gamma_min: Rational,
    #[arg(long, allow_hyphen_values = true)]
    gamma_max: Rational,
    #[arg(long)]
    bound: i64,
    #[arg(long)]
    fixture: Option<PathBuf>,
    /// Defaults to `minimal` for torsion classes and `shifted` for negative ones.
    #[arg(long, value_enum)]
    mode: Option<ModeArg>,
    /// Keep extremal classes whose image has no sections.
    #[arg(long)]
    no_geometric_exclusion: bool,
    /// The shifted system is complete.
    #[arg(long)]
    complete: bool,
    /// Also write the chamber plot here.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum WallsCmd {
    Scan(WallsScanArgs),
}

#[derive(Args, Debug)]
struct OrbitArgs {
    /// standard:a | standard:a,b | tilted:a,b,g | dagger:a,b,g,t
    #[arg(long = "from", allow_hyphen_values = true)]
    source: String,
    #[arg(long = "to", allow_hyphen_values = true)]
    target: String,
}

#[derive(Args, Debug)]
struct PlotArgs {
    /// JSON report written by `walls scan`.
    #[arg(long)]
    report: PathBuf,
    #[arg(long)]
    out: PathBuf,
}

/// Failures after argument parsing.
enum Failure {
    Usage(String),
    Domain(String),
}

impl From<stabsys::Error> for Failure {
    fn from(e: stabsys::Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

type Outcome = Result<Output, Failure>;

enum Output {
    Json(Report),
    Text(String),
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("results serialize")
}

/// `Ok` values pass through; rejected hypotheses become a note.
fn verdict<T: Serialize>(r: stabsys::Result<T>) -> Value {
    match r {
        Ok(v) => json!({ "value": v }),
        Err(e) => json!({ "not_applicable": e.to_string() }),
    }
}

fn parse_list(s: &str, want: usize) -> Result<Vec<Rational>, Failure> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != want {
        return Err(Failure::Usage(format!("expected {want} parameters in '{s}'")));
    }
    parts
        .iter()
        .map(|p| p.parse::<Rational>().map_err(|e| Failure::Usage(e.to_string())))
        .collect()
}

fn default_t(alpha: &Rational, beta: &Rational, gamma: &Rational) -> Result<Rational, Failure> {
    match t_window(alpha, beta, gamma)? {
        Some(w) => Ok(w.midpoint()),
        None => Err(Failure::Domain(format!(
            "no admissible t at ({alpha}, {beta}, {gamma}); the point is outside S (pass --t to force one)"
        ))),
    }
}

fn parse_family(s: &str) -> Result<ChargeFamily, Failure> {
    let (kind, rest) = s
        .split_once(':')
        .ok_or_else(|| Failure::Usage(format!("family '{s}' needs the form kind:params")))?;
    let count = rest.split(',').count();
    let fam = match (kind, count) {
        ("standard", 1) => ChargeFamily::StandardAlpha {
            alpha: parse_list(rest, 1)?.remove(0),
        },
        ("standard", 2) => {
            let v = parse_list(rest, 2)?;
            ChargeFamily::StandardAlphaBeta {
                alpha: v[0].clone(),
                beta: v[1].clone(),
            }
        }
        ("tilted", _) => {
            let v = parse_list(rest, 3)?;
            ChargeFamily::Tilted {
                alpha: v[0].clone(),
                beta: v[1].clone(),
                gamma: v[2].clone(),
            }
        }
        ("dagger", _) => {
            let v = parse_list(rest, 4)?;
            bg_solve(&v[0], &v[1], &v[2], &v[3])?.dagger_family()
        }
        _ => return Err(Failure::Usage(format!("unknown charge family '{s}'"))),
    };
    fam.validate()?;
    Ok(fam)
}

fn need(v: &Option<Rational>, name: &str, kind: &str) -> Result<Rational, Failure> {
    v.clone()
        .ok_or_else(|| Failure::Usage(format!("--{name} is required for the {kind} charge")))
}

fn cmd_eval(a: &EvalArgs) -> Outcome {
    let mut warnings = Vec::new();
    let fam = match a.charge {
        ChargeKind::Standard => ChargeFamily::StandardAlpha { alpha: a.alpha.clone() },
        ChargeKind::StandardBeta => ChargeFamily::StandardAlphaBeta {
            alpha: a.alpha.clone(),
            beta: need(&a.beta, "beta", "standard-beta")?,
        },
        ChargeKind::Tilted => ChargeFamily::Tilted {
            alpha: a.alpha.clone(),
            beta: need(&a.beta, "beta", "tilted")?,
            gamma: need(&a.gamma, "gamma", "tilted")?,
        },
        ChargeKind::Dagger => {
            let beta = need(&a.beta, "beta", "dagger")?;
            let gamma = need(&a.gamma, "gamma", "dagger")?;
            let t = match &a.t {
                Some(t) => t.clone(),
                None => default_t(&a.alpha, &beta, &gamma)?,
            };
            warnings.extend(BG_NOTES.iter().map(|s| s.to_string()));
            bg_solve(&a.alpha, &beta, &gamma, &t)?.dagger_family()
        }
    };
    fam.validate()?;
    let z = fam.eval(&a.class)?;
    let phase = match phase_display(&z) {
        Ok(p) => json!(p),
        Err(e) => {
            warnings.push(e.to_string());
            Value::Null
        }
    };
    let results = json!({
        "family": fam,
        "class": a.class,
        "charge": z,
        "slope": slope(&z),
        "phase_display_only": phase,
    });
    let params = params!("charge" => format!("{:?}", a.charge).to_lowercase(), "class" => a.class,
        "alpha" => a.alpha, "beta" => a.beta, "gamma" => a.gamma, "t" => a.t);
    Ok(Output::Json(Report::new("eval", params, results).warn(warnings)))
}

fn triple_params(p: &TripleArgs) -> serde_json::Map<String, Value> {
    params!("alpha" => p.alpha, "beta" => p.beta, "gamma" => p.gamma)
}

fn cmd_region(p: &TripleArgs) -> Outcome {
    let triple = ParamTriple::new(p.alpha.clone(), p.beta.clone(), p.gamma.clone());
    let rep = region_check(&triple)?;
    let results = json!({
        "ps": rep.ps,
        "s": rep.s,
        "s_boundary": rep.s_boundary,
        "t_window": rep.t_window.as_ref().map(|w| [w.lo.clone(), w.hi.clone()]),
        "t_window_closed": rep.t_window.as_ref().map(|w| [w.lo_closed, w.hi_closed]),
        "notes": rep.notes,
    });
    Ok(Output::Json(Report::new("region check", triple_params(p), results)))
}

fn cmd_bg(p: &TripleArgs, t: &Option<Rational>) -> Outcome {
    let t = match t {
        Some(t) => t.clone(),
        None => default_t(&p.alpha, &p.beta, &p.gamma)?,
    };
    let bg = bg_solve(&p.alpha, &p.beta, &p.gamma, &t)?;
    let mut warnings: Vec<String> = BG_NOTES.iter().map(|s| s.to_string()).collect();
    if !bg.validity.all() {
        warnings.push("some validity conditions fail at this t; see validity".into());
    }
    if p.beta < 1 {
        warnings.push("for beta < 1 the condition u >= 1 fails at every t > 0".into());
    }
    let mut results = to_value(&bg);
    results["reconstructs"] = json!(bg.reconstructs());
    results["dagger_re_row"] = to_value(&bg.dagger_re_row());
    let mut params = triple_params(p);
    params.insert("t".into(), to_value(&t));
    Ok(Output::Json(Report::new("bg solve", params, results).warn(warnings)))
}

fn cmd_support(alpha: &Rational, beta: &Rational, bound: i64) -> Outcome {
    let cert = support_certificate(alpha, beta, bound)?;
    let params = params!("alpha" => alpha, "beta" => beta, "bound" => bound);
    Ok(Output::Json(Report::new("support certify", params, to_value(&cert))))
}

fn cmd_bounds(c: &ClassVector, alpha: &Rational, genus: Option<u32>, h0: Option<i64>) -> Outcome {
    let mut results = serde_json::Map::new();
    results.insert("admissible_semistable".into(), verdict(admissible_semistable(c, alpha)));
    results.insert("system_section_bound".into(), verdict(system_section_bound(c)));
    if let Some(g) = genus.map(Genus) {
        results.insert("system_clifford_bound".into(), verdict(system_clifford_bound(c, g)));
        results.insert("extremal".into(), verdict(extremal_classify(c, g)));
        let sheaf = SheafClass::new(c.n, c.d, h0, g);
        results.insert("h0_upper_semistable".into(), verdict(h0_upper(&sheaf, H0Hypothesis::Semistable)));
        results.insert("clifford_upper".into(), verdict(clifford_upper(&sheaf)));
        if let Some(h) = h0 {
            results.insert("clifford_index".into(), verdict(clifford_index(c.n, c.d, h, Some(g))));
        }
    } else if let Some(h) = h0 {
        results.insert("clifford_index".into(), verdict(clifford_index(c.n, c.d, h, None)));
    }
    let params = params!("class" => c, "alpha" => alpha, "genus" => genus, "h0" => h0);
    Ok(Output::Json(Report::new("bounds check", params, Value::Object(results))))
}

fn cmd_formal(cmd: &FormalCmd) -> Outcome {
    match cmd {
        FormalCmd::Hn {
            fixture,
            object,
            alpha,
            beta,
        } => {
            let cat = FormalCategory::load(fixture)?;
            let hn = hn_filtration(&cat, object, alpha)?;
            let mut results = to_value(&hn);
            if let Some(b) = beta {
                results["split"] = to_value(&torsion_pair_split(&cat, object, alpha, b)?);
            }
            let params = params!("fixture" => fixture.display().to_string(), "object" => object,
                "alpha" => alpha, "beta" => beta);
            Ok(Output::Json(
                Report::new("formal hn", params, results).warn(cat.warnings().iter().cloned()),
            ))
        }
        FormalCmd::ScanMinimal { p, bound, target } => {
            let kinds: Vec<MinimalTarget> = match target {
                Some(TargetArg::Op) => vec![MinimalTarget::Op],
                Some(TargetArg::V1) => vec![MinimalTarget::V1],
                None => vec![MinimalTarget::Op, MinimalTarget::V1],
            };
            let mut results = serde_json::Map::new();
            for kind in kinds {
                let cons: Vec<String> = destabilizer_constraints_minimal(kind, &p.alpha, &p.beta, &p.gamma)
                    .iter()
                    .map(|c| c.to_string())
                    .collect();
                let hits = scan_minimal(kind, &p.alpha, &p.beta, &p.gamma, *bound);
                let name = match kind {
                    MinimalTarget::Op => "op",
                    MinimalTarget::V1 => "v1",
                };
                results.insert(
                    name.into(),
                    json!({ "target": kind.class(), "constraints": cons, "solutions": hits }),
                );
            }
            let mut params = triple_params(p);
            params.insert("bound".into(), json!(bound));
            Ok(Output::Json(Report::new("formal scan-minimal", params, Value::Object(results))))
        }
    }
}

fn write_file(path: &Path, text: &str) -> Result<(), Failure> {
    std::fs::write(path, text).map_err(|e| Failure::Domain(format!("cannot write {}: {e}", path.display())))
}

fn walls_csv(scan: &ChamberScan) -> Result<String, Failure> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| Failure::Domain(e.to_string());
    w.write_record(["gamma0", "n'", "d'", "k'", "monotonicity", "kind"]).map_err(io)?;
    for wall in &scan.walls {
        let g0 = wall.gamma0.as_ref().map(|g| g.to_string()).unwrap_or_default();
        let kind = to_value(&wall.kind).as_str().unwrap_or_default().to_string();
        for c in &wall.classes {
            let (_, mono) = slope_diff_fn(c, &scan.target, &scan.alpha, &scan.beta)?;
            let mono = to_value(&mono).as_str().unwrap_or_default().to_string();
            w.write_record([g0.clone(), c.n.to_string(), c.d.to_string(), c.k.to_string(), mono, kind.clone()])
                .map_err(io)?;
        }
    }
    let bytes = w.into_inner().map_err(|e| Failure::Domain(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv is utf-8"))
}

fn cmd_walls(a: &WallsScanArgs, format: Format) -> Outcome {
    let mode = match a.mode {
        Some(ModeArg::Minimal) => ScanMode::MinimalObject,
        Some(ModeArg::Shifted) => ScanMode::ShiftedStable,
        None if a.class.n == 0 => ScanMode::MinimalObject,
        None if a.class.n < 0 => ScanMode::ShiftedStable,
        None => {
            return Err(Failure::Domain(format!(
                "{} is neither torsion nor a shifted class; pass a class with n <= 0",
                a.class
            )))
        }
    };
    let opts = ScanOptions {
        geometric_exclusion: !a.no_geometric_exclusion,
        injective: None,
        complete: a.complete,
    };
    let cat = a.fixture.as_deref().map(FormalCategory::load).transpose()?;
    let scan = chamber_scan(
        &a.class,
        &a.alpha,
        &a.beta,
        &a.gamma_min,
        &a.gamma_max,
        a.bound,
        mode,
        &opts,
        cat.as_ref(),
    )?;
    let mut warnings = scan.notes.clone();
    if !scan.monotone {
        warnings.push(format!("destabilizer sets not downward closed for {:?}", scan.monotonicity_violations));
    }
    if let Some(out) = &a.out {
        let (svg, notes) = plot::plot_chambers(&scan);
        write_file(out, &svg)?;
        warnings.extend(notes);
    }
    if format == Format::Csv {
        return Ok(Output::Text(walls_csv(&scan)?));
    }
    let params = params!("class" => a.class, "alpha" => a.alpha, "beta" => a.beta,
        "gamma_min" => a.gamma_min, "gamma_max" => a.gamma_max, "bound" => a.bound,
        "fixture" => a.fixture.as_ref().map(|p| p.display().to_string()),
        "mode" => mode, "geometric_exclusion" => opts.geometric_exclusion, "complete" => a.complete,
        "out" => a.out.as_ref().map(|p| p.display().to_string()));
    Ok(Output::Json(Report::new("walls scan", params, to_value(&scan)).warn(warnings)))
}

fn cmd_orbit(a: &OrbitArgs) -> Outcome {
    let src = parse_family(&a.source)?;
    let tgt = parse_family(&a.target)?;
    let v = orbit_compare(&src, &tgt)?;
    let mut warnings = Vec::new();
    if a.source.starts_with("dagger") || a.target.starts_with("dagger") {
        warnings.extend(BG_NOTES.iter().map(|s| s.to_string()));
    }
    let params = params!("from" => a.source, "to" => a.target);
    Ok(Output::Json(Report::new("orbit", params, to_value(&v)).warn(warnings)))
}

fn cmd_plot(a: &PlotArgs) -> Outcome {
    let text = std::fs::read_to_string(&a.report)
        .map_err(|e| Failure::Domain(format!("cannot read {}: {e}", a.report.display())))?;
    let rep: Report =
        serde_json::from_str(&text).map_err(|e| Failure::Domain(format!("{}: {e}", a.report.display())))?;
    if rep.command != "walls scan" {
        return Err(Failure::Domain(format!("{} is a '{}' report, not a walls scan", a.report.display(), rep.command)));
    }
    let scan: ChamberScan = serde_json::from_value(rep.results)
        .map_err(|e| Failure::Domain(format!("{}: {e}", a.report.display())))?;
    let (svg, notes) = plot::plot_chambers(&scan);
    write_file(&a.out, &svg)?;
    let ticks = scan.walls.len() - notes.len();
    let params = params!("report" => a.report.display().to_string(), "out" => a.out.display().to_string());
    let results = json!({ "out": a.out.display().to_string(), "ticks": ticks, "notes": notes });
    Ok(Output::Json(Report::new("plot", params, results)))
}

fn dispatch(cli: &Cli) -> Outcome {
    if cli.format == Format::Csv && !matches!(cli.command, Command::Walls { .. }) {
        return Err(Failure::Usage("--format csv is only available for `walls scan`".into()));
    }
    match &cli.command {
        Command::Eval(a) => cmd_eval(a),
        Command::Region { cmd: RegionCmd::Check(p) } => cmd_region(p),
        Command::Bg { cmd: BgCmd::Solve { p, t } } => cmd_bg(p, t),
        Command::Support {
            cmd: SupportCmd::Certify { alpha, beta, bound },
        } => cmd_support(alpha, beta, *bound),
        Command::Bounds {
            cmd: BoundsCmd::Check { class, alpha, genus, h0 },
        } => cmd_bounds(class, alpha, *genus, *h0),
        Command::Formal { cmd } => cmd_formal(cmd),
        Command::Walls { cmd: WallsCmd::Scan(a) } => cmd_walls(a, cli.format),
        Command::Orbit(a) => cmd_orbit(a),
        Command::Plot(a) => cmd_plot(a),
    }
}

fn configure_threads() {
    if let Some(n) = std::env::var("STABSYS_THREADS").ok().and_then(|s| s.parse::<usize>().ok()) {
        // A second initialization attempt only fails if a pool already exists.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
    }
}

/// Parses `argv`, runs the command and returns the exit status.
fn run<I, T>(argv: I) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return e.exit_code() as u8;
        }
    };
    configure_threads();
    match dispatch(&cli) {
        Ok(Output::Json(rep)) => {
            print!("{}", rep.to_json());
            0
        }
        Ok(Output::Text(s)) => {
            print!("{s}");
            0
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}\n\nFor more information, try '--help'.");
            2
        }
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            1
        }
    }
}

fn main() -> ExitCode {
    ExitCode::from(run(std::env::args_os()))
}
