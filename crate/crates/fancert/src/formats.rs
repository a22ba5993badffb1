//! JSON encodings of the core types.
//!
//! Rationals are written as JSON integers when they are integral and fit in
//! an `i64`, and as `"p/q"` strings otherwise; both forms are accepted on
//! input, as are decimal strings for big integers. Object keys come out
//! sorted, so output is byte-for-byte deterministic.

use fancert_core::additive::{Meeting, OrbitReport};
use fancert_core::cox::{ChartPoint, QuasitorusData};
use fancert_core::projectivity::{ProjectivityVerdict, SupportFunction};
use fancert_core::{ConeRef, Fan, FarkasCertificate, Int, IntMat, IntVec, LinearSystem, Polytope, Rat, RatVec};
use num_traits::{One, ToPrimitive};
use serde_json::{json, Map, Value};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Shape(String),
    #[error(transparent)]
    Fan(#[from] fancert_core::FanError),
}

fn shape(msg: impl Into<String>) -> FormatError {
    FormatError::Shape(msg.into())
}

pub fn parse(text: &str) -> Result<Value, FormatError> {
    Ok(serde_json::from_str(text)?)
}

/// Indented JSON with a trailing newline. Arrays of scalars stay on one
/// line, so vectors and matrix rows read naturally.
pub fn render(v: &Value) -> String {
    let mut s = String::new();
    render_into(v, 0, &mut s);
    s.push('\n');
    s
}

fn render_into(v: &Value, depth: usize, out: &mut String) {
    let pad = |d: usize| "  ".repeat(d);
    match v {
        Value::Array(xs) if xs.iter().all(|x| !x.is_array() && !x.is_object()) => {
            let items: Vec<String> = xs.iter().map(Value::to_string).collect();
            out.push('[');
            out.push_str(&items.join(", "));
            out.push(']');
        }
        Value::Array(xs) => {
            out.push_str("[\n");
            for (i, x) in xs.iter().enumerate() {
                out.push_str(&pad(depth + 1));
                render_into(x, depth + 1, out);
                out.push_str(if i + 1 < xs.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(depth));
            out.push(']');
        }
        Value::Object(m) if m.is_empty() => out.push_str("{}"),
        Value::Object(m) => {
            out.push_str("{\n");
            for (i, (k, x)) in m.iter().enumerate() {
                out.push_str(&pad(depth + 1));
                out.push_str(&Value::from(k.as_str()).to_string());
                out.push_str(": ");
                render_into(x, depth + 1, out);
                out.push_str(if i + 1 < m.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(depth));
            out.push('}');
        }
        scalar => out.push_str(&scalar.to_string()),
    }
}

pub fn int_to_json(x: &Int) -> Value {
    match x.to_i64() {
        Some(v) => Value::from(v),
        None => Value::from(x.to_string()),
    }
}

pub fn rat_to_json(x: &Rat) -> Value {
    if x.denom().is_one() {
        int_to_json(x.numer())
    } else {
        Value::from(format!("{}/{}", x.numer(), x.denom()))
    }
}

pub fn int_from_json(v: &Value) -> Result<Int, FormatError> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(Int::from)
            .ok_or_else(|| shape(format!("expected an integer, found {n}"))),
        Value::String(s) => s
            .trim()
            .parse()
            .map_err(|_| shape(format!("expected an integer, found {s:?}"))),
        other => Err(shape(format!("expected an integer, found {other}"))),
    }
}

pub fn rat_from_json(v: &Value) -> Result<Rat, FormatError> {
    let Value::String(s) = v else {
        return int_from_json(v).map(Rat::from_integer);
    };
    let bad = || shape(format!("expected a rational \"p/q\", found {s:?}"));
    match s.split_once('/') {
        None => s.trim().parse::<Int>().map(Rat::from_integer).map_err(|_| bad()),
        Some((p, q)) => {
            let p: Int = p.trim().parse().map_err(|_| bad())?;
            let q: Int = q.trim().parse().map_err(|_| bad())?;
            if q == Int::from(0) {
                return Err(shape(format!("zero denominator in {s:?}")));
            }
            Ok(Rat::new(p, q))
        }
    }
}

fn array<'a>(v: &'a Value, what: &str) -> Result<&'a Vec<Value>, FormatError> {
    v.as_array().ok_or_else(|| shape(format!("{what}: expected an array")))
}

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value, FormatError> {
    v.get(key).ok_or_else(|| shape(format!("missing field {key:?}")))
}

fn usize_from_json(v: &Value, what: &str) -> Result<usize, FormatError> {
    v.as_u64()
        .and_then(|x| usize::try_from(x).ok())
        .ok_or_else(|| shape(format!("{what}: expected a nonnegative integer, found {v}")))
}

pub fn int_vec_to_json(v: &[Int]) -> Value {
    Value::Array(v.iter().map(int_to_json).collect())
}

pub fn rat_vec_to_json(v: &[Rat]) -> Value {
    Value::Array(v.iter().map(rat_to_json).collect())
}

pub fn int_vec_from_json(v: &Value, what: &str) -> Result<IntVec, FormatError> {
    array(v, what)?.iter().map(int_from_json).collect()
}

pub fn rat_vec_from_json(v: &Value, what: &str) -> Result<RatVec, FormatError> {
    array(v, what)?.iter().map(rat_from_json).collect()
}

pub fn matrix_to_json(m: &IntMat) -> Value {
    Value::Array(m.row_vecs().iter().map(|r| int_vec_to_json(r)).collect())
}

pub fn cone_to_json(c: &ConeRef) -> Value {
    Value::Array(c.indices().iter().map(|&i| Value::from(i)).collect())
}

pub fn cone_from_json(v: &Value) -> Result<ConeRef, FormatError> {
    let idx: Vec<usize> = array(v, "cone")?
        .iter()
        .map(|x| usize_from_json(x, "cone index"))
        .collect::<Result<_, _>>()?;
    Ok(ConeRef::new(idx))
}

/// `{"rank": n, "rays": [[..]..], "max_cones": [[..]..]}`. Runs the
/// structural checks of [`Fan::new`] but not [`Fan::validate`]; other keys
/// are ignored.
pub fn fan_from_json(v: &Value) -> Result<Fan, FormatError> {
    let rank = usize_from_json(field(v, "rank")?, "rank")?;
    let rays = array(field(v, "rays")?, "rays")?
        .iter()
        .map(|r| int_vec_from_json(r, "ray"))
        .collect::<Result<Vec<_>, _>>()?;
    let cones = array(field(v, "max_cones")?, "max_cones")?
        .iter()
        .map(|c| {
            array(c, "cone")?
                .iter()
                .map(|x| usize_from_json(x, "cone index"))
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Fan::new(rank, rays, cones)?)
}

pub fn fan_to_json(f: &Fan) -> Value {
    json!({
        "rank": f.rank(),
        "rays": f.rays().iter().map(|r| int_vec_to_json(r)).collect::<Vec<_>>(),
        "max_cones": f.max_cones().iter().map(cone_to_json).collect::<Vec<_>>(),
    })
}

pub fn polytope_from_json(v: &Value) -> Result<Polytope, FormatError> {
    let rank = usize_from_json(field(v, "rank")?, "rank")?;
    let vertices = array(field(v, "vertices")?, "vertices")?
        .iter()
        .map(|r| int_vec_from_json(r, "vertex"))
        .collect::<Result<Vec<_>, _>>()?;
    if let Some(bad) = vertices.iter().position(|p| p.len() != rank) {
        return Err(shape(format!("vertex {bad} has the wrong length for rank {rank}")));
    }
    Ok(Polytope::new(rank, vertices))
}

/// `{"vars": n, "eq": [[a.., rhs]..], "ge": [[a.., rhs]..]}`
pub fn system_from_json(v: &Value) -> Result<LinearSystem, FormatError> {
    let vars = usize_from_json(field(v, "vars")?, "vars")?;
    let mut sys = LinearSystem::new(vars);
    for (key, is_eq) in [("eq", true), ("ge", false)] {
        let Some(rows) = v.get(key) else { continue };
        for row in array(rows, key)? {
            let mut coeffs = rat_vec_from_json(row, key)?;
            if coeffs.len() != vars + 1 {
                return Err(shape(format!(
                    "{key} row has {} entries, expected {}",
                    coeffs.len(),
                    vars + 1
                )));
            }
            let rhs = coeffs.pop().expect("nonempty");
            if is_eq {
                sys.add_eq(coeffs, rhs);
            } else {
                sys.add_ge(coeffs, rhs);
            }
        }
    }
    Ok(sys)
}

pub fn system_to_json(sys: &LinearSystem) -> Value {
    let rows = |cs: &[fancert_core::lp::Constraint]| -> Vec<Value> {
        cs.iter()
            .map(|c| {
                let mut row: Vec<Value> = c.coeffs.iter().map(rat_to_json).collect();
                row.push(rat_to_json(&c.rhs));
                Value::Array(row)
            })
            .collect()
    };
    json!({"vars": sys.num_vars, "eq": rows(&sys.equalities), "ge": rows(&sys.inequalities)})
}

pub fn certificate_to_json(c: &FarkasCertificate) -> Value {
    json!({"eq": rat_vec_to_json(&c.eq_multipliers), "ge": rat_vec_to_json(&c.ineq_multipliers)})
}

pub fn certificate_from_json(v: &Value) -> Result<FarkasCertificate, FormatError> {
    Ok(FarkasCertificate {
        eq_multipliers: rat_vec_from_json(field(v, "eq")?, "eq")?,
        ineq_multipliers: rat_vec_from_json(field(v, "ge")?, "ge")?,
    })
}

pub fn support_function_to_json(s: &SupportFunction) -> Value {
    Value::Array(s.functionals.iter().map(|u| rat_vec_to_json(u)).collect())
}

/// `{"projective", "witness", "certificate", "system"}`; the unused
/// evidence slot is `null`.
pub fn verdict_to_json(v: &ProjectivityVerdict, system: &LinearSystem) -> Value {
    match v {
        ProjectivityVerdict::Projective(s) => json!({
            "projective": true,
            "witness": support_function_to_json(s),
            "certificate": Value::Null,
            "system": system_to_json(system),
        }),
        ProjectivityVerdict::NonProjective { system, certificate } => json!({
            "projective": false,
            "witness": Value::Null,
            "certificate": certificate_to_json(certificate),
            "system": system_to_json(system),
        }),
    }
}

/// A point is either `{"coords": [..]}` upstairs or `{"cone": [..],
/// "coords": [..]}` in a chart of `X`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Point {
    Y(RatVec),
    Chart(ChartPoint),
}

pub fn point_from_json(v: &Value) -> Result<Point, FormatError> {
    let coords = rat_vec_from_json(field(v, "coords")?, "coords")?;
    match v.get("cone") {
        None | Some(Value::Null) => Ok(Point::Y(coords)),
        Some(c) => Ok(Point::Chart(ChartPoint {
            cone: cone_from_json(c)?,
            coords,
        })),
    }
}

pub fn point_y_to_json(y: &[Rat]) -> Value {
    json!({"coords": rat_vec_to_json(y)})
}

pub fn chart_point_to_json(x: &ChartPoint) -> Value {
    json!({"cone": cone_to_json(&x.cone), "coords": rat_vec_to_json(&x.coords)})
}

pub fn point_to_json(p: &Point) -> Value {
    match p {
        Point::Y(y) => point_y_to_json(y),
        Point::Chart(x) => chart_point_to_json(x),
    }
}

pub fn quasitorus_to_json(q: &QuasitorusData) -> Value {
    json!({
        "relations": matrix_to_json(&q.relations),
        "kernel_basis": matrix_to_json(&q.kernel_basis),
        "invariant_factors": int_vec_to_json(&q.invariant_factors),
        "dim": q.dim(),
    })
}

fn meeting_to_json(m: &Meeting) -> Value {
    json!({
        "what": m.what,
        "cones": m.cones.iter().map(cone_to_json).collect::<Vec<_>>(),
        "points": m.points,
    })
}

pub fn orbit_report_to_json(r: &OrbitReport) -> Value {
    let mut out = Map::new();
    out.insert(
        "components".into(),
        r.components
            .iter()
            .map(|(i, s)| json!({"ray": i, "surface": s.name()}))
            .collect(),
    );
    out.insert("base_orbit_dim".into(), r.base_orbit_dim.into());
    out.insert("x0_fixed_samples".into(), r.x0_fixed_samples.into());
    out.insert(
        "generic_orbit_dims".into(),
        r.generic_orbit_dims
            .iter()
            .map(|(j, d)| json!({"component": j, "dim": d}))
            .collect(),
    );
    out.insert(
        "curves".into(),
        r.curves
            .iter()
            .map(|c| json!({"j": c.j, "k": c.k, "cone": cone_to_json(&c.cone), "fixed_samples": c.fixed_samples}))
            .collect(),
    );
    out.insert(
        "curve_meetings".into(),
        r.curve_meetings.iter().map(meeting_to_json).collect(),
    );
    out.insert(
        "representatives".into(),
        r.representatives
            .iter()
            .map(|p| json!({"what": p.what, "y": point_y_to_json(&p.y), "point": chart_point_to_json(&p.point)}))
            .collect(),
    );
    out.insert(
        "component_meetings".into(),
        r.component_meetings.iter().map(meeting_to_json).collect(),
    );
    out.insert(
        "triple_points".into(),
        r.triple_points.iter().map(chart_point_to_json).collect(),
    );
    Value::Object(out)
}
