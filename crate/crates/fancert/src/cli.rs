//! Command-line front end.
//!
//! Every subcommand reads JSON (a path, or `-` for stdin) and writes JSON,
//! DOT or text to stdout. Exit codes: 0 success, 1 an `--expect` assertion
//! failed, 2 invalid input or usage.

use std::fs;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use fancert_core::additive::{
    additive_act, additive_act_x, build_family_fan, ga_orbit_report, orbit_dimension, orbit_dimension_at, FamilyFan,
};
use fancert_core::cox::{orbit_label, quasitorus, quotient_map};
use fancert_core::fan::{dual_fan_of_polytope, fan_isomorphic, primitive_collections, star_fan, verify_isomorphism};
use fancert_core::lp::{feasible, verify_farkas, Feasibility};
use fancert_core::projectivity::{build_support_system, is_projective, ProjectivityVerdict};
use fancert_core::{ConeRef, Fan, FanError, Rat};
use serde_json::{json, Map, Value};
use thiserror::Error;

use crate::dot::orbit_poset_dot;
use crate::formats::{self, FormatError, Point};

#[derive(Debug, Parser)]
#[command(
    name = "fancert",
    version,
    about = "Exact checks and certificates for simplicial toric fans"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build the fan Σₙ (rays b0..bn, a1..an)
    #[command(alias = "paperfan")]
    Family {
        n: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check the fan axioms, including that cones meet in common faces
    Validate {
        #[arg(default_value = "-")]
        fan: String,
        #[arg(long, value_delimiter = ',')]
        expect: Vec<String>,
    },
    /// Smoothness, completeness and projectivity with evidence
    Props {
        #[arg(default_value = "-")]
        fan: String,
        #[arg(long, value_delimiter = ',', default_value = "smooth,complete,projective")]
        check: Vec<Property>,
        /// Write the re-verified projectivity verdict here
        #[arg(long)]
        certificate: Option<PathBuf>,
        #[arg(long, value_delimiter = ',')]
        expect: Vec<String>,
    },
    /// Primitive collections
    Primcoll {
        #[arg(default_value = "-")]
        fan: String,
    },
    /// Star fan of a ray
    Star {
        #[arg(default_value = "-")]
        fan: String,
        #[arg(long)]
        ray: usize,
    },
    /// Quasitorus of the Cox construction
    Cox {
        #[arg(default_value = "-")]
        fan: String,
    },
    /// Normal fan of a full-dimensional lattice polytope
    Dualfan {
        #[arg(default_value = "-")]
        polytope: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Apply the additive action of Σₙ to a point
    Act {
        #[arg(default_value = "-")]
        fan: String,
        #[arg(long)]
        point: String,
        /// Comma-separated rationals c1,...,cn
        #[arg(long, allow_hyphen_values = true)]
        params: String,
    },
    /// Dimension of the additive orbit through a point of Σₙ's variety
    Orbitdim {
        #[arg(default_value = "-")]
        fan: String,
        #[arg(long)]
        point: String,
    },
    /// Orbit structure of the additive action for n = 3
    Report3 {
        #[arg(long)]
        text: bool,
    },
    /// Search for a unimodular map taking one fan onto another
    Isom {
        first: String,
        second: String,
        #[arg(long, value_delimiter = ',')]
        expect: Vec<String>,
    },
    /// Orbit poset as Graphviz DOT
    ExportDot {
        #[arg(default_value = "-")]
        fan: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Exact feasibility of a linear system, with witness or Farkas certificate
    Feasible {
        #[arg(default_value = "-")]
        system: String,
        #[arg(long, value_delimiter = ',')]
        expect: Vec<String>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Property {
    Smooth,
    Complete,
    Projective,
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error(transparent)]
    Fan(#[from] FanError),
    #[error(transparent)]
    Family(#[from] fancert_core::FamilyError),
    #[error(transparent)]
    Cox(#[from] fancert_core::CoxError),
    #[error(transparent)]
    Lp(#[from] fancert_core::LpError),
    #[error(transparent)]
    Projectivity(#[from] fancert_core::ProjectivityError),
}

/// What a subcommand produced: text for stdout and whether its `--expect`
/// assertions held.
struct Output {
    text: String,
    expectations_met: bool,
}

impl Output {
    fn json(v: &Value) -> Self {
        Output {
            text: formats::render(v),
            expectations_met: true,
        }
    }
}

struct Io<'a> {
    stdin: &'a mut dyn Read,
    stdin_used: bool,
}

impl Io<'_> {
    fn read(&mut self, path: &str) -> Result<String, CliError> {
        if path == "-" {
            if self.stdin_used {
                return Err(CliError::Usage("stdin can only be read once".into()));
            }
            self.stdin_used = true;
            let mut s = String::new();
            self.stdin.read_to_string(&mut s).map_err(|source| CliError::Io {
                path: "<stdin>".into(),
                source,
            })?;
            Ok(s)
        } else {
            fs::read_to_string(path).map_err(|source| CliError::Io {
                path: path.into(),
                source,
            })
        }
    }

    fn json(&mut self, path: &str) -> Result<Value, CliError> {
        Ok(formats::parse(&self.read(path)?)?)
    }

    fn fan(&mut self, path: &str) -> Result<Fan, CliError> {
        Ok(formats::fan_from_json(&self.json(path)?)?)
    }
}

fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

/// The family fan `Σₙ` when `f` is exactly the output of `family n`.
fn as_family(f: &Fan) -> Option<FamilyFan> {
    build_family_fan(f.rank()).ok().filter(|s| s.fan == *f)
}

fn require_family(f: &Fan) -> Result<FamilyFan, CliError> {
    as_family(f).ok_or_else(|| {
        CliError::Usage("the additive action is only defined on the family fan (see `fancert family`)".into())
    })
}

/// `key`, `!key`, `key=true` or `key=false`, each naming a boolean field of
/// the output object.
fn check_expectations(out: &Value, expect: &[String]) -> Result<bool, CliError> {
    let mut all = true;
    for e in expect {
        let (key, want) = match e.split_once('=') {
            Some((k, "true")) => (k, true),
            Some((k, "false")) => (k, false),
            Some(_) => return Err(CliError::Usage(format!("--expect {e:?}: value must be true or false"))),
            None => match e.strip_prefix('!') {
                Some(k) => (k, false),
                None => (e.as_str(), true),
            },
        };
        let got = out
            .get(key)
            .and_then(Value::as_bool)
            .ok_or_else(|| CliError::Usage(format!("--expect {key:?}: no such boolean in the output")))?;
        all &= got == want;
    }
    Ok(all)
}

fn with_expectations(v: Value, expect: &[String]) -> Result<Output, CliError> {
    let met = check_expectations(&v, expect)?;
    Ok(Output {
        expectations_met: met,
        ..Output::json(&v)
    })
}

fn validate(f: &Fan) -> Value {
    match f.validate() {
        Ok(()) => json!({"valid": true}),
        Err(e) => {
            let mut m = Map::new();
            m.insert("valid".into(), false.into());
            m.insert("error".into(), e.to_string().into());
            if let FanError::Overlap { first, second, witness } = &e {
                m.insert("overlap".into(), json!([first, second]));
                m.insert(
                    "witness".into(),
                    witness.as_deref().map_or(Value::Null, formats::rat_vec_to_json),
                );
            }
            Value::Object(m)
        }
    }
}

fn props(f: &Fan, check: &[Property], certificate: Option<&Path>) -> Result<Value, CliError> {
    let mut m = Map::new();
    if check.contains(&Property::Smooth) {
        m.insert("smooth".into(), f.is_smooth().into());
    }
    let complete = f.is_complete();
    if check.contains(&Property::Complete) {
        m.insert("complete".into(), complete.into());
    }
    if !check.contains(&Property::Projective) {
        if certificate.is_some() {
            return Err(CliError::Usage("--certificate needs --check projective".into()));
        }
        return Ok(Value::Object(m));
    }
    if !complete {
        if certificate.is_some() {
            return Err(CliError::Usage(
                "no certificate: projectivity is only decided for complete fans".into(),
            ));
        }
        m.insert("projective".into(), Value::Null);
        m.insert("reason".into(), "fan is not complete".into());
        return Ok(Value::Object(m));
    }
    let verdict = is_projective(f)?;
    // is_projective re-verifies internally; check once more on exactly
    // what gets written out
    let verified = match &verdict {
        ProjectivityVerdict::Projective(s) => s.is_strictly_convex_on(f),
        ProjectivityVerdict::NonProjective { system, certificate } => verify_farkas(system, certificate)?,
    };
    if !verified {
        return Err(CliError::Usage(
            "internal error: verdict evidence failed re-verification".into(),
        ));
    }
    let system = build_support_system(f)?;
    let v = formats::verdict_to_json(&verdict, &system);
    if let Some(path) = certificate {
        write_file(path, &formats::render(&v))?;
    }
    if let Value::Object(vm) = v {
        m.extend(vm);
    }
    Ok(Value::Object(m))
}

fn labels(f: &Fan) -> impl Fn(usize) -> String {
    let fam = as_family(f);
    move |r| match &fam {
        Some(s) => s.label(r),
        None => r.to_string(),
    }
}

fn parse_params(s: &str) -> Result<Vec<Rat>, CliError> {
    s.split(',')
        .map(|p| formats::rat_from_json(&Value::String(p.trim().to_string())).map_err(CliError::from))
        .collect()
}

fn dispatch(cmd: Command, io: &mut Io<'_>, stderr: &mut dyn Write) -> Result<Output, CliError> {
    match cmd {
        Command::Family { n, output } => {
            let s = build_family_fan(n)?;
            if let Err(e) = s.fan.validate() {
                let _ = writeln!(stderr, "note: these cones do not form a fan ({e})");
            }
            emit_to(output.as_deref(), formats::render(&formats::fan_to_json(&s.fan)))
        }
        Command::Validate { fan, expect } => with_expectations(validate(&io.fan(&fan)?), &expect),
        Command::Props {
            fan,
            check,
            certificate,
            expect,
        } => {
            let f = io.fan(&fan)?;
            with_expectations(props(&f, &check, certificate.as_deref())?, &expect)
        }
        Command::Primcoll { fan } => {
            let f = io.fan(&fan)?;
            let pcs = primitive_collections(&f);
            let mut m = Map::new();
            m.insert("collections".into(), pcs.iter().map(formats::cone_to_json).collect());
            if let Some(s) = as_family(&f) {
                let named: Vec<Value> = pcs
                    .iter()
                    .map(|c| c.indices().iter().map(|&r| Value::from(s.label(r))).collect())
                    .collect();
                m.insert("labels".into(), named.into());
            }
            Ok(Output::json(&Value::Object(m)))
        }
        Command::Star { fan, ray } => {
            let f = io.fan(&fan)?;
            if ray >= f.num_rays() {
                return Err(CliError::Usage(format!(
                    "ray {ray} out of range ({} rays)",
                    f.num_rays()
                )));
            }
            let star = star_fan(&f, &ConeRef::new([ray]))?;
            let mut v = formats::fan_to_json(&star.fan);
            v["projection"] = formats::matrix_to_json(&star.projection);
            v["ray_origin"] = json!(star.ray_origin);
            Ok(Output::json(&v))
        }
        Command::Cox { fan } => Ok(Output::json(&formats::quasitorus_to_json(&quasitorus(&io.fan(&fan)?)?))),
        Command::Dualfan { polytope, output } => {
            let p = formats::polytope_from_json(&io.json(&polytope)?)?;
            let f = dual_fan_of_polytope(&p)?;
            emit_to(output.as_deref(), formats::render(&formats::fan_to_json(&f)))
        }
        Command::Act { fan, point, params } => {
            let s = require_family(&io.fan(&fan)?)?;
            let c = parse_params(&params)?;
            let moved = match formats::point_from_json(&io.json(&point)?)? {
                Point::Y(y) => Point::Y(additive_act(&s, &c, &y)?),
                Point::Chart(x) => Point::Chart(additive_act_x(&s, &c, &x)?),
            };
            Ok(Output::json(&formats::point_to_json(&moved)))
        }
        Command::Orbitdim { fan, point } => {
            let s = require_family(&io.fan(&fan)?)?;
            let (dim, x) = match formats::point_from_json(&io.json(&point)?)? {
                Point::Y(y) => (orbit_dimension_at(&s, &y)?, quotient_map(&s.fan, &y)?),
                Point::Chart(x) => (orbit_dimension(&s, &x)?, x),
            };
            let orbit = orbit_label(&s.fan, &x)?;
            Ok(Output::json(
                &json!({"orbit_dim": dim, "torus_orbit": formats::cone_to_json(&orbit)}),
            ))
        }
        Command::Report3 { text } => {
            let s = build_family_fan(3)?;
            let r = ga_orbit_report(&s)?;
            if text {
                Ok(Output {
                    text: r.to_string(),
                    expectations_met: true,
                })
            } else {
                Ok(Output::json(&formats::orbit_report_to_json(&r)))
            }
        }
        Command::Isom { first, second, expect } => {
            let a = io.fan(&first)?;
            let b = io.fan(&second)?;
            let v = match fan_isomorphic(&a, &b)? {
                Some(m) if verify_isomorphism(&m, &a, &b) => {
                    json!({"isomorphic": true, "map": formats::matrix_to_json(&m)})
                }
                Some(_) => {
                    return Err(CliError::Usage(
                        "internal error: isomorphism failed re-verification".into(),
                    ))
                }
                None => json!({"isomorphic": false, "map": null}),
            };
            with_expectations(v, &expect)
        }
        Command::ExportDot { fan, output } => {
            let f = io.fan(&fan)?;
            emit_to(output.as_deref(), orbit_poset_dot(&f, labels(&f)))
        }
        Command::Feasible { system, expect } => {
            let sys = formats::system_from_json(&io.json(&system)?)?;
            let v = match feasible(&sys)? {
                Feasibility::Feasible(x) if sys.is_satisfied_by(&x) => {
                    json!({"feasible": true, "witness": formats::rat_vec_to_json(&x), "certificate": null})
                }
                Feasibility::Infeasible(c) if verify_farkas(&sys, &c)? => {
                    json!({"feasible": false, "witness": null, "certificate": formats::certificate_to_json(&c)})
                }
                _ => {
                    return Err(CliError::Usage(
                        "internal error: solver evidence failed re-verification".into(),
                    ))
                }
            };
            with_expectations(v, &expect)
        }
    }
}

fn emit_to(path: Option<&Path>, text: String) -> Result<Output, CliError> {
    match path {
        Some(p) => {
            write_file(p, &text)?;
            Ok(Output {
                text: String::new(),
                expectations_met: true,
            })
        }
        None => Ok(Output {
            text,
            expectations_met: true,
        }),
    }
}

/// Runs one invocation and returns the process exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if code == 0 {
                stdout.write_all(rendered.as_bytes())
            } else {
                stderr.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    let mut io = Io {
        stdin,
        stdin_used: false,
    };
    match dispatch(cli.command, &mut io, stderr) {
        Ok(out) => {
            if stdout.write_all(out.text.as_bytes()).is_err() {
                return 2;
            }
            if out.expectations_met {
                0
            } else {
                let _ = writeln!(stderr, "expectation failed");
                1
            }
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            2
        }
    }
}
