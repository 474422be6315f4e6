//! The `torus-gluing` command line.
//!
//! Every command prints one JSON document. Exit codes: `0` for success or a
//! certified bound, `2` when a fixed slope was found, `1` for invalid input.

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::anosov::{power_bound, trace_sequence, PowerBoundReport};
use crate::certify::{c_distance, collection_distance, default_search_bound, CollectionReport, CollectionSpec, DistanceCertificate, MapDistanceResult};
use crate::class_maps::{build_from_single_slope, build_from_two_surfaces, ClassMap};
use crate::error::{Error, Result};
use crate::farey::{distance, geodesic};
use crate::json::RationalText;
use crate::normal_torus::{self, from_slope, intersection_points, normal_sign_intersections, NormalCoordinates};
use crate::slope_algebra::{rational_eigenslopes, Eigenslopes, PrimitiveClass, Slope, UnimodularQ, UnimodularZ};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Ok,
    Certified,
    DistanceZero,
    InvalidInput,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok | Status::Certified => 0,
            Status::DistanceZero => 2,
            Status::InvalidInput => 1,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CommandResult {
    pub status: Status,
    pub payload: Value,
    pub compact: bool,
    /// Plain text that replaces the JSON rendering (help and version output).
    pub text: Option<String>,
}

impl CommandResult {
    fn json(status: Status, payload: Value, compact: bool) -> Self {
        CommandResult { status, payload, compact, text: None }
    }

    fn error(e: &Error, compact: bool) -> Self {
        let payload = json!({"error": e.kind(), "message": e.to_string()});
        Self::json(Status::InvalidInput, payload, compact)
    }

    pub fn render(&self) -> String {
        if let Some(t) = &self.text {
            return t.trim_end().to_string();
        }
        let rendered = if self.compact {
            serde_json::to_string(&self.payload)
        } else {
            serde_json::to_string_pretty(&self.payload)
        };
        rendered.expect("JSON values always serialize")
    }

    pub fn exit_code(&self) -> i32 {
        self.status.exit_code()
    }
}

/// SHA-256 of the normal-curve convention table, in hex.
pub fn conventions_hash() -> String {
    Sha256::digest(normal_torus::CONVENTIONS.as_bytes())
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

fn version_string() -> String {
    format!("{} (conventions sha256:{})", env!("CARGO_PKG_VERSION"), conventions_hash())
}

#[derive(Parser, Debug)]
#[command(name = "torus-gluing", version = version_string(), about = "Exact computations for torus gluing maps")]
struct Cli {
    /// Single-line JSON output.
    #[arg(long, global = true)]
    compact: bool,

    /// Recompute and check a certificate or report file.
    #[arg(long, value_name = "FILE")]
    verify: Option<PathBuf>,

    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Farey graph distances and geodesics.
    #[command(subcommand)]
    Farey(FareyCmd),
    /// Action of a matrix on slopes.
    #[command(subcommand)]
    Slope(SlopeCmd),
    /// Matrix invariants.
    #[command(subcommand)]
    Matrix(MatrixCmd),
    /// Normal curves on the one-vertex torus.
    #[command(subcommand)]
    Normal(NormalCmd),
    /// Compatibility class maps.
    #[command(subcommand)]
    Classmap(ClassmapCmd),
    /// Distance certificates.
    #[command(subcommand)]
    Certify(CertifyCmd),
    /// Powers of hyperbolic gluings.
    #[command(subcommand)]
    Anosov(AnosovCmd),
}

#[derive(Subcommand, Debug)]
enum FareyCmd {
    Dist {
        #[arg(allow_hyphen_values = true)]
        s: Slope,
        #[arg(allow_hyphen_values = true)]
        t: Slope,
    },
    Path {
        #[arg(allow_hyphen_values = true)]
        s: Slope,
        #[arg(allow_hyphen_values = true)]
        t: Slope,
    },
}

#[derive(Subcommand, Debug)]
enum SlopeCmd {
    /// Image of a slope under `[[a,b],[c,d]]`.
    Map {
        matrix: UnimodularQ,
        #[arg(allow_hyphen_values = true)]
        slope: Slope,
    },
}

#[derive(Subcommand, Debug)]
enum MatrixCmd {
    Eigenslopes { matrix: UnimodularQ },
}

#[derive(Subcommand, Debug)]
enum NormalCmd {
    /// Decompose `x1,x2,x3` and report its slope.
    Slope { coords: NormalCoordinates },
    /// Minimal coordinates of a slope.
    Coords {
        #[arg(allow_hyphen_values = true)]
        slope: Slope,
        #[arg(long, default_value_t = 1)]
        mult: u64,
        #[arg(long, default_value_t = 0)]
        trivial: u64,
    },
    /// Normal signs of the intersections of two curves.
    Intersect {
        x: NormalCoordinates,
        y: NormalCoordinates,
        /// List every intersection point.
        #[arg(long)]
        points: bool,
    },
}

#[derive(Args, Debug)]
struct ClassMeta {
    /// Curve types on T1 and T2, as `t1,t2`.
    #[arg(long, value_parser = parse_type_pair)]
    types: Option<(u8, u8)>,
    #[arg(long, default_value_t = 0)]
    complexity: u64,
}

#[derive(Subcommand, Debug)]
enum ClassmapCmd {
    FromSurfaces {
        #[arg(long, allow_hyphen_values = true)]
        r1: PrimitiveClass,
        #[arg(long, allow_hyphen_values = true)]
        s1: PrimitiveClass,
        #[arg(long, allow_hyphen_values = true)]
        r2: PrimitiveClass,
        #[arg(long, allow_hyphen_values = true)]
        s2: PrimitiveClass,
        #[command(flatten)]
        meta: ClassMeta,
    },
    FromSlopes {
        #[arg(allow_hyphen_values = true)]
        tau1: Slope,
        #[arg(allow_hyphen_values = true)]
        tau2: Slope,
        #[command(flatten)]
        meta: ClassMeta,
    },
}

#[derive(Subcommand, Debug)]
enum CertifyCmd {
    Gluing {
        #[arg(long)]
        phi: UnimodularZ,
        /// JSON list of class map records.
        #[arg(long)]
        classes: PathBuf,
        #[arg(long)]
        bound: Option<u64>,
    },
    Collection {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long)]
        bound: Option<u64>,
    },
}

#[derive(Subcommand, Debug)]
enum AnosovCmd {
    Power {
        #[arg(long)]
        sigma: UnimodularZ,
        #[arg(long)]
        psi: UnimodularZ,
        #[arg(long)]
        classes: PathBuf,
    },
    Trace {
        #[arg(long)]
        sigma: UnimodularZ,
        #[arg(long)]
        k: UnimodularQ,
        #[arg(long)]
        n: u64,
    },
}

fn parse_type_pair(s: &str) -> std::result::Result<(u8, u8), String> {
    let (a, b) = s.split_once(',').ok_or("expected \"t1,t2\"")?;
    let parse = |v: &str| v.trim().parse::<u8>().map_err(|_| format!("bad curve type {v:?}"));
    Ok((parse(a)?, parse(b)?))
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("output types serialize")
}

fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

fn bound_or_default(bound: Option<u64>) -> Result<u64> {
    match bound {
        Some(0) => Err(Error::InvalidInput("--bound must be positive".into())),
        Some(b) => Ok(b),
        None => default_search_bound(),
    }
}

fn with_meta(cm: ClassMap, meta: &ClassMeta) -> Result<ClassMap> {
    let cm = cm.with_complexity(meta.complexity);
    match meta.types {
        Some((t1, t2)) => cm.with_type_pair(t1, t2),
        None => Ok(cm),
    }
}

fn execute(command: Command) -> Result<(Status, Value)> {
    let ok = |v: Value| Ok((Status::Ok, v));
    match command {
        Command::Farey(FareyCmd::Dist { s, t }) => ok(json!({"distance": distance(&s, &t)})),
        Command::Farey(FareyCmd::Path { s, t }) => {
            let path = geodesic(&s, &t);
            ok(json!({"distance": path.len(), "path": to_value(&path)}))
        }
        Command::Slope(SlopeCmd::Map { matrix, slope }) => ok(json!({"image": matrix.lft_apply(&slope)})),
        Command::Matrix(MatrixCmd::Eigenslopes { matrix }) => {
            let e = match rational_eigenslopes(&matrix) {
                Eigenslopes::All => json!("all"),
                Eigenslopes::Finite(v) => to_value(&v),
            };
            ok(json!({"eigenslopes": e}))
        }
        Command::Normal(NormalCmd::Slope { coords }) => {
            let d = coords.decompose();
            let slope = d.essential_slope.clone().ok_or(Error::NoEssentialComponent)?;
            ok(json!({
                "slope": slope,
                "essential_multiplicity": d.essential_multiplicity,
                "trivial_count": d.trivial_count,
                "types": coords.curve_types(),
            }))
        }
        Command::Normal(NormalCmd::Coords { slope, mult, trivial }) => {
            ok(json!({"coordinates": from_slope(&slope, mult, trivial)?}))
        }
        Command::Normal(NormalCmd::Intersect { x, y, points }) => {
            let s = normal_sign_intersections(&x, &y)?;
            let mut out = json!({
                "positives": s.positives,
                "negatives": s.negatives,
                "algebraic": s.algebraic(),
            });
            if points {
                out["points"] = to_value(&intersection_points(&x, &y)?);
            }
            ok(out)
        }
        Command::Classmap(ClassmapCmd::FromSurfaces { r1, s1, r2, s2, meta }) => {
            ok(to_value(&with_meta(build_from_two_surfaces(&r1, &s1, &r2, &s2)?, &meta)?))
        }
        Command::Classmap(ClassmapCmd::FromSlopes { tau1, tau2, meta }) => {
            ok(to_value(&with_meta(build_from_single_slope(&tau1, &tau2), &meta)?))
        }
        Command::Certify(CertifyCmd::Gluing { phi, classes, bound }) => {
            let classes: Vec<ClassMap> = read_json(&classes)?;
            let cert = c_distance(&phi, &classes, bound_or_default(bound)?)?;
            let status = if cert.is_certified() { Status::Certified } else { Status::DistanceZero };
            Ok((status, to_value(&cert)))
        }
        Command::Certify(CertifyCmd::Collection { spec, bound }) => {
            let spec: CollectionSpec = read_json(&spec)?;
            let bound = match bound {
                Some(b) => bound_or_default(Some(b))?,
                None => match spec.search_bound {
                    Some(b) => bound_or_default(Some(b))?,
                    None => default_search_bound()?,
                },
            };
            ok(to_value(&collection_distance(&spec.orderings, bound)?))
        }
        Command::Anosov(AnosovCmd::Power { sigma, psi, classes }) => {
            let classes: Vec<ClassMap> = read_json(&classes)?;
            ok(to_value(&power_bound(&sigma, &psi, &classes)?))
        }
        Command::Anosov(AnosovCmd::Trace { sigma, k, n }) => {
            let traces: Vec<RationalText> = trace_sequence(&sigma, &k, n).into_iter().map(RationalText).collect();
            ok(json!({"traces": traces}))
        }
    }
}

/// Checks a file written by `certify` or `anosov power`. The kind is
/// recognised from its top-level fields.
pub fn verify_file(path: &Path) -> Result<Value> {
    let value: Value = read_json(path)?;
    let has = |k: &str| value.get(k).is_some();
    let parse_err = |e: serde_json::Error| Error::Parse(format!("{}: {e}", path.display()));
    let kind = if has("c_distance_lower_bound") {
        serde_json::from_value::<DistanceCertificate>(value).map_err(parse_err)?.verify()?;
        "distance-certificate"
    } else if has("distance_two") {
        serde_json::from_value::<CollectionReport>(value).map_err(parse_err)?.verify()?;
        "collection-report"
    } else if has("overall_n") {
        serde_json::from_value::<PowerBoundReport>(value).map_err(parse_err)?.verify()?;
        "power-bound-report"
    } else if has("empirical_min_displacement") {
        serde_json::from_value::<MapDistanceResult>(value).map_err(parse_err)?.verify()?;
        "map-distance-result"
    } else {
        return Err(Error::InvalidInput(format!("{} is not a recognised certificate", path.display())));
    };
    Ok(json!({"verified": true, "kind": kind}))
}

/// Parses `args` (without the program name) and runs the command.
pub fn run<I, T>(args: I) -> CommandResult
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let argv = std::iter::once(OsString::from("torus-gluing")).chain(args.into_iter().map(Into::into));
    let argv: Vec<OsString> = argv.collect();
    let compact = argv.iter().any(|a| a == "--compact");
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    CommandResult { status: Status::Ok, payload: Value::Null, compact, text: Some(e.to_string()) }
                }
                _ => CommandResult::error(&Error::InvalidInput(e.to_string().trim_end().to_string()), compact),
            };
        }
    };
    let compact = cli.compact;
    let outcome = match (cli.verify, cli.command) {
        (Some(path), None) => verify_file(&path).map(|v| (Status::Ok, v)),
        (None, Some(command)) => execute(command),
        (Some(_), Some(_)) => Err(Error::InvalidInput("--verify takes no subcommand".into())),
        (None, None) => Err(Error::InvalidInput("no command given; try --help".into())),
    };
    match outcome {
        Ok((status, payload)) => CommandResult::json(status, payload, compact),
        Err(e) => CommandResult::error(&e, compact),
    }
}
