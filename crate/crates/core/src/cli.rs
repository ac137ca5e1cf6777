//! The `hyperelliptic` command line: gen, info, bend, reduce, decompose, render.
//!
//! Exit codes: 0 success (including "already maximal"), 2 usage, 3 unreadable
//! or malformed input, 4 mathematical precondition failed, 5 reduction failed,
//! 6 internal inconsistency.

use std::f64::consts::PI;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde_json::{json, Value};

use crate::bending::{apply_bending, bend_to_target, BendingMove, Which};
use crate::config::Tolerances;
use crate::disc::{CycleOrientation, ProjPoint};
use crate::error::{Error, Result};
use crate::format::{write_atomic, CertificateFile, DecompositionFile, RepresentationFile};
use crate::reduction::{decompose, reduce_once};
use crate::render::{render_svg, RenderOptions};
use crate::representation::Representation;
use crate::teichmuller::{from_boundary, regular_polygon, BoundaryCoordinates};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INPUT: i32 = 3;
pub const EXIT_MATH: i32 = 4;
pub const EXIT_REDUCTION: i32 = 5;
pub const EXIT_INTERNAL: i32 = 6;

#[derive(Debug, Parser)]
#[command(
    name = "hyperelliptic",
    version,
    about = "Reflection relations in the Poincaré disc"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a maximal representation and write it to a file.
    Gen(GenArgs),
    /// Area, maximality, discreteness and i-cycle verdict of a representation.
    Info(InfoArgs),
    /// Apply one bending.
    Bend(BendArgs),
    /// One reduction step, written as a replayable certificate.
    Reduce(ReduceArgs),
    /// Full decomposition into cancellations and a maximal core.
    Decompose(DecomposeArgs),
    /// Draw the representation as SVG.
    Render(RenderArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GenKind {
    /// Right-angled regular polygon.
    Regular,
    /// From 2n-6 boundary angles in degrees.
    Boundary,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[arg(value_enum)]
    pub kind: GenKind,
    #[arg(long)]
    pub n: usize,
    /// Comma-separated angles in degrees, strictly between 0 and 180, increasing.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub angles: Vec<f64>,
    #[arg(long, short)]
    pub out: PathBuf,
    #[arg(long, value_enum, default_value = "text")]
    pub format: OutputFormat,
}

#[derive(Debug, Args)]
pub struct InfoArgs {
    pub file: PathBuf,
    /// Base index of the reported i-cycle.
    #[arg(long, default_value_t = 0)]
    pub icycle: usize,
    #[arg(long, value_enum, default_value = "text")]
    pub format: OutputFormat,
}

#[derive(Debug, Args)]
pub struct BendArgs {
    pub file: PathBuf,
    /// Pair (q_index, q_index+1), indices from 0 and mod n.
    #[arg(long)]
    pub index: usize,
    /// Signed translation length along the pair geodesic.
    #[arg(long, allow_hyphen_values = true, conflicts_with = "target")]
    pub s: Option<f64>,
    /// Chart point `re,im` of the pair geodesic to move a center onto.
    #[arg(long, allow_hyphen_values = true, requires = "which")]
    pub target: Option<String>,
    #[arg(long, value_enum)]
    pub which: Option<WhichArg>,
    #[arg(long, short)]
    pub out: PathBuf,
    #[arg(long, value_enum, default_value = "text")]
    pub format: OutputFormat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum WhichArg {
    Lower,
    Upper,
}

#[derive(Debug, Args)]
pub struct ReduceArgs {
    pub file: PathBuf,
    /// Where to write the certificate.
    #[arg(long, short, required_unless_present = "verify")]
    pub out: Option<PathBuf>,
    /// Replay an existing certificate against FILE instead of reducing.
    #[arg(long, conflicts_with = "out")]
    pub verify: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "text")]
    pub format: OutputFormat,
}

#[derive(Debug, Args)]
pub struct DecomposeArgs {
    pub file: PathBuf,
    #[arg(long, short, required_unless_present = "verify")]
    pub out: Option<PathBuf>,
    /// Also write the maximal core as a representation file.
    #[arg(long)]
    pub core_out: Option<PathBuf>,
    /// Replay an existing decomposition file instead of computing one.
    #[arg(long, conflicts_with = "out")]
    pub verify: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "text")]
    pub format: OutputFormat,
}

#[derive(Debug, Args)]
pub struct RenderArgs {
    pub file: PathBuf,
    #[arg(long)]
    pub svg: PathBuf,
    /// Mark the i-cycle with this base index.
    #[arg(long)]
    pub show_icycle: Option<usize>,
    /// Draw the cycle of the chart point `re,im`.
    #[arg(long, allow_hyphen_values = true)]
    pub show_cycle: Option<String>,
    #[arg(long, default_value_t = 600.0)]
    pub size: f64,
}

/// Exit code for an error.
pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Io(_) | Error::Json(_) | Error::Format(_) | Error::NonFinite => EXIT_INPUT,
        Error::ReductionFailed(_) => EXIT_REDUCTION,
        Error::Inconsistent(_) | Error::ClosingCenterOffAxis => EXIT_INTERNAL,
        _ => EXIT_MATH,
    }
}

/// Parses arguments, installs tolerances from the environment, runs, and
/// returns the process exit code.
pub fn main_with<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(stderr, "{e}");
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let installed = Tolerances::from_env().and_then(|t| {
        if t == Tolerances::default() {
            Ok(())
        } else {
            t.install()
        }
    });
    if let Err(e) = installed {
        let _ = writeln!(stderr, "error: {e}");
        return exit_code(&e);
    }
    match run(&cli.command, stdout) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            if let Error::ReductionFailed(f) = &e {
                let state = json!({
                    "reason": f.reason,
                    "epsilon": f.epsilon,
                    "centers": f.centers.iter().map(|z| [z.re, z.im]).collect::<Vec<_>>(),
                    "moves": f.moves,
                });
                let _ = writeln!(
                    stderr,
                    "{}",
                    serde_json::to_string_pretty(&state).unwrap_or_default()
                );
            }
            exit_code(&e)
        }
    }
}

pub fn run(command: &Command, out: &mut dyn Write) -> Result<()> {
    match command {
        Command::Gen(a) => cmd_gen(a, out),
        Command::Info(a) => cmd_info(a, out),
        Command::Bend(a) => cmd_bend(a, out),
        Command::Reduce(a) => cmd_reduce(a, out),
        Command::Decompose(a) => cmd_decompose(a, out),
        Command::Render(a) => cmd_render(a, out),
    }
}

fn emit(out: &mut dyn Write, format: OutputFormat, report: &Value) -> Result<()> {
    match format {
        OutputFormat::Json => writeln!(out, "{}", serde_json::to_string_pretty(report)?)?,
        OutputFormat::Text => {
            if let Value::Object(map) = report {
                for (k, v) in map {
                    match v {
                        Value::String(s) => writeln!(out, "{k}: {s}")?,
                        other => writeln!(out, "{k}: {other}")?,
                    }
                }
            }
        }
    }
    Ok(())
}

fn load(path: &Path) -> Result<Representation> {
    RepresentationFile::read(path)?.to_representation()
}

fn save(rho: &Representation, path: &Path, provenance: Option<String>) -> Result<()> {
    let file = RepresentationFile::from_representation(rho, provenance);
    // re-validate exactly what is written
    RepresentationFile::from_json(&file.to_json()?)?.to_representation()?;
    file.write(path)
}

fn parse_point(text: &str) -> Result<Complex64> {
    let (re, im) = text
        .split_once(',')
        .ok_or_else(|| Error::Format(format!("expected `re,im`, got `{text}`")))?;
    let parse = |s: &str| {
        s.trim()
            .parse::<f64>()
            .map_err(|_| Error::Format(format!("`{s}` is not a number")))
    };
    Ok(Complex64::new(parse(re)?, parse(im)?))
}

fn orientation_name(o: CycleOrientation) -> &'static str {
    match o {
        CycleOrientation::Positive => "positive",
        CycleOrientation::Negative => "negative",
        CycleOrientation::Neither => "neither",
    }
}

pub fn cmd_gen(args: &GenArgs, out: &mut dyn Write) -> Result<()> {
    let (rho, provenance) = match args.kind {
        GenKind::Regular => (
            regular_polygon(args.n)?,
            format!("regular right-angled {}-gon", args.n),
        ),
        GenKind::Boundary => {
            let coords = BoundaryCoordinates::from_degrees(args.n, &args.angles)?;
            let joined: Vec<String> = args.angles.iter().map(|a| a.to_string()).collect();
            (
                from_boundary(&coords)?,
                format!("boundary n={} angles={}", args.n, joined.join(",")),
            )
        }
    };
    save(&rho, &args.out, Some(provenance))?;
    let area = rho.area();
    emit(
        out,
        args.format,
        &json!({
            "n": rho.len(),
            "epsilon": rho.epsilon().as_i8(),
            "area": area,
            "area_over_pi": area / PI,
            "maximal": rho.is_maximal(),
            "written": args.out.display().to_string(),
        }),
    )
}

/// The `info` report; field names are part of the stable interface.
pub fn info_report(rho: &Representation, icycle_index: usize) -> Result<Value> {
    let area = rho.area();
    let mut report = json!({
        "n": rho.len(),
        "epsilon": rho.epsilon().as_i8(),
        "residual": rho.residual(),
        "area": area,
        "area_over_pi": area / PI,
        "maximal": Value::Null,
        "discrete_faithful": Value::Null,
        "basic": Value::Null,
        "icycle_index": Value::Null,
        "icycle": Value::Null,
    });
    if rho.len() >= 5 {
        let df = rho.is_discrete_faithful()?;
        report["maximal"] = json!(df.maximal);
        report["discrete_faithful"] = json!(df.discrete_faithful);
        report["basic"] = json!(rho.is_basic()?.is_basic());
        report["icycle_index"] = json!(icycle_index);
        report["icycle"] = match rho.i_cycle(icycle_index) {
            Ok(c) => json!(orientation_name(c.orientation())),
            Err(Error::ConsecutiveCoincidence(_)) => Value::Null,
            Err(e) => return Err(e),
        };
    }
    Ok(report)
}

pub fn cmd_info(args: &InfoArgs, out: &mut dyn Write) -> Result<()> {
    let rho = load(&args.file)?;
    emit(out, args.format, &info_report(&rho, args.icycle)?)
}

pub fn cmd_bend(args: &BendArgs, out: &mut dyn Write) -> Result<()> {
    let rho = load(&args.file)?;
    let (bent, mv) = match (&args.target, args.s) {
        (Some(t), _) => {
            let target = ProjPoint::try_from_chart(parse_point(t)?)?;
            let which = match args.which {
                Some(WhichArg::Upper) => Which::Upper,
                _ => Which::Lower,
            };
            bend_to_target(&rho, args.index, &target, which)?
        }
        (None, Some(s)) => {
            let mv = BendingMove::new(args.index, s);
            (apply_bending(&rho, mv)?, mv)
        }
        (None, None) => return Err(Error::Format("give either --s or --target".into())),
    };
    let before = rho.area();
    let after = bent.area();
    if (after - before).abs() > crate::config::tolerances().area {
        return Err(Error::Inconsistent(format!(
            "bending changed the area from {before} to {after}"
        )));
    }
    save(
        &bent,
        &args.out,
        Some(format!("bend index={} s={}", mv.index, mv.s)),
    )?;
    emit(
        out,
        args.format,
        &json!({
            "index": mv.index,
            "s": mv.s,
            "area_before": before,
            "area_after": after,
            "area_delta": after - before,
            "residual": bent.residual(),
            "written": args.out.display().to_string(),
        }),
    )
}

pub fn cmd_reduce(args: &ReduceArgs, out: &mut dyn Write) -> Result<()> {
    let rho = load(&args.file)?;
    if let Some(path) = &args.verify {
        let (input, cert) = CertificateFile::read(path)?.to_certificate()?;
        if input.chart_centers() != rho.chart_centers() || input.epsilon() != rho.epsilon() {
            return Err(Error::Inconsistent(
                "certificate was issued for a different input".into(),
            ));
        }
        cert.verify(&rho)?;
        return emit(
            out,
            args.format,
            &json!({"verified": true, "moves": cert.moves.len()}),
        );
    }
    let cert = match reduce_once(&rho) {
        Ok(c) => c,
        Err(Error::AlreadyMaximal) => {
            return emit(
                out,
                args.format,
                &json!({"status": "already maximal (basic); nothing to reduce", "n": rho.len()}),
            );
        }
        Err(e) => return Err(e),
    };
    cert.verify(&rho)?;
    let path = args
        .out
        .as_ref()
        .expect("clap requires --out without --verify");
    CertificateFile::new(&rho, &cert).write(path)?;
    emit(
        out,
        args.format,
        &json!({
            "status": "reduced",
            "detector": cert.detector,
            "moves": cert.moves.len(),
            "cancel_index": cert.cancel_index,
            "reduced_length": cert.reduced.len(),
            "reduced_epsilon": cert.reduced.epsilon().as_i8(),
            "area_before": rho.area(),
            "area_after": cert.reduced.area(),
            "written": path.display().to_string(),
        }),
    )
}

pub fn cmd_decompose(args: &DecomposeArgs, out: &mut dyn Write) -> Result<()> {
    let rho = load(&args.file)?;
    if let Some(path) = &args.verify {
        let file = DecompositionFile::read(path)?;
        if file.input.to_relation()?.chart_centers() != rho.chart_centers() {
            return Err(Error::Inconsistent(
                "decomposition was issued for a different input".into(),
            ));
        }
        file.verify()?;
        return emit(
            out,
            args.format,
            &json!({"verified": true, "steps": file.steps.len()}),
        );
    }
    let d = decompose(&rho)?;
    let file = DecompositionFile::new(&rho, &d);
    file.verify()?;
    let path = args
        .out
        .as_ref()
        .expect("clap requires --out without --verify");
    file.write(path)?;
    if let (Some(core_path), Some(core)) = (&args.core_out, &d.core) {
        save(
            core,
            core_path,
            Some("maximal core of a decomposition".into()),
        )?;
    }
    let (n, m) = (rho.len(), d.core_len());
    emit(
        out,
        args.format,
        &json!({
            "n": n,
            "cancellations": d.cancellations.len(),
            "core_length": if d.core.is_some() { json!(m) } else { Value::Null },
            "parity_ok": (n - m) % 2 == 0,
            "area": rho.area(),
            "core_area": d.core.as_ref().map(Representation::area),
            "moves": d.moves_log().count(),
            "written": path.display().to_string(),
        }),
    )
}

pub fn cmd_render(args: &RenderArgs, out: &mut dyn Write) -> Result<()> {
    let rho = load(&args.file)?;
    let opts = RenderOptions {
        size: args.size,
        icycle: args.show_icycle,
        cycle_from: args.show_cycle.as_deref().map(parse_point).transpose()?,
    };
    let svg = render_svg(&rho, &opts)?;
    write_atomic(&args.svg, svg.trim_end())?;
    writeln!(out, "written: {}", args.svg.display())?;
    Ok(())
}
