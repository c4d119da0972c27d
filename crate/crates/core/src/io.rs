//! Text formats for lattices, shifts and systems, plus the short forms used
//! on the command line.
//!
//! ```text
//! lattice: {"type":"points","points":[[0,0],[1,0]]}
//!          {"type":"generator","name":"omega_q","params":{"q":2,"n":2}}
//!          rect:3,2   omega_q:2,2   lshape:2   stick:3,0,1,8
//! shift:   {"N":2,"name":"golden-mean-h","forbidden":[[[0,0,1],[1,0,1]]]}
//!          golden-mean-h   hard-squares   full:3
//! system:  {"system":"omega_q","q":2}   squares   rect:n^2,n   stick:0,1
//! ```

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::lattice::{FiniteLattice, Point};
use crate::sft::{builtin, ForbiddenPattern, SftSpec};
use crate::systems::{
    lshape, omega_q, omega_q_plus, staircase, stick_augmented, ExpandingSystem, SizeExpr, SystemKind,
};

#[derive(Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
enum LatticeFile {
    Points {
        points: Vec<[i64; 2]>,
    },
    Generator {
        name: String,
        #[serde(default)]
        params: BTreeMap<String, Value>,
    },
}

fn param_u64(params: &BTreeMap<String, Value>, key: &str) -> Result<u64> {
    params
        .get(key)
        .and_then(Value::as_u64)
        .ok_or_else(|| Error::Parse(format!("generator needs a nonnegative integer {key:?}")))
}

fn param_point(params: &BTreeMap<String, Value>, key: &str, default: Point) -> Result<Point> {
    match params.get(key) {
        None => Ok(default),
        Some(v) => {
            let [x, y]: [i64; 2] = serde_json::from_value(v.clone())?;
            Ok(Point::new(x, y))
        }
    }
}

/// Builds a named lattice; the names match the command-line short forms.
pub fn generate_lattice(name: &str, params: &BTreeMap<String, Value>) -> Result<FiniteLattice> {
    let p = |k| param_u64(params, k);
    match name {
        "rect" | "rectangle" => Ok(FiniteLattice::rectangle(
            param_point(params, "origin", Point::ORIGIN)?,
            p("m")?,
            p("n")?,
        )),
        "square" => Ok(FiniteLattice::rectangle(Point::ORIGIN, p("n")?, p("n")?)),
        "omega_q" => omega_q(p("q")?, p("n")?),
        "omega_q_plus" => omega_q_plus(p("q")?, p("n")?),
        "lshape" => Ok(lshape(p("n")?)),
        "staircase" => Ok(staircase(p("n")?)),
        "stick" => stick_augmented(p("n")?, param_point(params, "v", Point::new(0, 1))?, p("b")?),
        _ => Err(Error::Parse(format!("unknown lattice generator {name:?}"))),
    }
}

pub fn lattice_from_json(text: &str) -> Result<FiniteLattice> {
    match serde_json::from_str::<LatticeFile>(text)? {
        LatticeFile::Points { points } => Ok(points.into_iter().map(|[x, y]| Point::new(x, y)).collect()),
        LatticeFile::Generator { name, params } => generate_lattice(&name, &params),
    }
}

pub fn lattice_to_json(lattice: &FiniteLattice) -> String {
    let file = LatticeFile::Points {
        points: lattice.points().map(|p| [p.x, p.y]).collect(),
    };
    serde_json::to_string(&file).expect("plain data")
}

fn split_short(text: &str) -> (&str, Vec<&str>) {
    let (name, args) = text.split_once(':').unwrap_or((text, ""));
    let args: Vec<&str> = if args.is_empty() {
        Vec::new()
    } else {
        args.split(',').map(str::trim).collect()
    };
    (name, args)
}

fn short_params(keys: &[&str], args: &[&str]) -> Result<BTreeMap<String, Value>> {
    if keys.len() != args.len() {
        return Err(Error::Parse(format!(
            "expected {} arguments ({})",
            keys.len(),
            keys.join(",")
        )));
    }
    keys.iter()
        .zip(args)
        .map(|(k, a)| {
            let v: i64 = a.parse().map_err(|_| Error::Parse(format!("bad integer {a:?}")))?;
            Ok((k.to_string(), Value::from(v)))
        })
        .collect()
}

/// Reads a lattice from a short form, inline JSON, or a JSON file.
pub fn parse_lattice_arg(arg: &str) -> Result<FiniteLattice> {
    let arg = arg.trim();
    if arg.starts_with('{') {
        return lattice_from_json(arg);
    }
    if Path::new(arg).is_file() {
        return lattice_from_json(&read(arg)?);
    }
    let (name, args) = split_short(arg);
    let params = match name {
        "rect" | "rectangle" => short_params(&["m", "n"], &args)?,
        "square" | "lshape" | "staircase" => short_params(&["n"], &args)?,
        "omega_q" | "omega_q_plus" => short_params(&["q", "n"], &args)?,
        "stick" => {
            let mut p = short_params(&["n", "vx", "vy", "b"], &args)?;
            let v = Value::from(vec![p.remove("vx").unwrap(), p.remove("vy").unwrap()]);
            p.insert("v".into(), v);
            p
        }
        _ => return Err(Error::Parse(format!("unrecognised lattice {arg:?}"))),
    };
    generate_lattice(name, &params)
}

#[derive(Serialize, Deserialize)]
struct SpecFile {
    #[serde(rename = "N")]
    alphabet: u32,
    #[serde(default)]
    name: Option<String>,
    forbidden: Vec<Vec<(i64, i64, u32)>>,
}

pub fn spec_from_json(text: &str) -> Result<SftSpec> {
    let file: SpecFile = serde_json::from_str(text)?;
    let forbidden = file
        .forbidden
        .into_iter()
        .map(|cells| ForbiddenPattern::new(cells.into_iter().map(|(x, y, s)| (Point::new(x, y), s))))
        .collect::<Result<Vec<_>>>()?;
    SftSpec::new(file.name.unwrap_or_else(|| "custom".into()), file.alphabet, forbidden)
}

pub fn spec_to_json(spec: &SftSpec) -> String {
    let file = SpecFile {
        alphabet: spec.alphabet(),
        name: Some(spec.name().to_owned()),
        forbidden: spec
            .forbidden()
            .iter()
            .map(|f| f.cells().iter().map(|&(p, s)| (p.x, p.y, s)).collect())
            .collect(),
    };
    serde_json::to_string(&file).expect("plain data")
}

/// Reads a shift from a builtin name, inline JSON, or a JSON file.
pub fn parse_spec_arg(arg: &str) -> Result<SftSpec> {
    let arg = arg.trim();
    if arg.starts_with('{') {
        return spec_from_json(arg);
    }
    if Path::new(arg).is_file() {
        return spec_from_json(&read(arg)?);
    }
    builtin(arg)
}

/// Reads a system from a short form, inline JSON, or a JSON file.
pub fn parse_system_arg(arg: &str) -> Result<ExpandingSystem> {
    let arg = arg.trim();
    if arg.starts_with('{') {
        return ExpandingSystem::from_json(arg);
    }
    if Path::new(arg).is_file() {
        return ExpandingSystem::from_json(&read(arg)?);
    }
    let (name, args) = split_short(arg);
    let int = |s: &str| -> Result<i64> { s.parse().map_err(|_| Error::Parse(format!("bad integer {s:?}"))) };
    let kind = match (name, args.as_slice()) {
        ("squares", []) => SystemKind::Squares,
        ("lshape", []) => SystemKind::Lshape,
        ("staircase", []) => SystemKind::Staircase,
        ("omega_q", [q]) => SystemKind::OmegaQ { q: int(q)? as u64 },
        ("rect", [w, h]) => SystemKind::Rect {
            w: w.parse::<SizeExpr>()?,
            h: h.parse::<SizeExpr>()?,
        },
        ("stick", [vx, vy]) => SystemKind::Stick {
            v: [int(vx)?, int(vy)?],
            a_target: 0.5,
        },
        ("stick", [vx, vy, a]) => SystemKind::Stick {
            v: [int(vx)?, int(vy)?],
            a_target: a.parse().map_err(|_| Error::Parse(format!("bad fraction {a:?}")))?,
        },
        _ => return Err(Error::Parse(format!("unrecognised system {arg:?}"))),
    };
    ExpandingSystem::new(kind)
}

fn read(path: &str) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{path}: {e}")))
}

/// Rounds to 12 significant digits, the precision of every printed real.
pub fn round12(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{x:.11e}").parse().expect("formatted float")
}

/// `x` with 12 significant digits, in plain notation where that is short.
pub fn fmt12(x: f64) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    let r = round12(x);
    let magnitude = if r == 0.0 { 0 } else { r.abs().log10().floor() as i32 };
    if (-5..15).contains(&magnitude) {
        let decimals = (11 - magnitude).max(0) as usize;
        let s = format!("{r:.decimals$}");
        if s.contains('.') {
            s.trim_end_matches('0').trim_end_matches('.').to_string()
        } else {
            s
        }
    } else {
        format!("{r:.11e}")
    }
}
