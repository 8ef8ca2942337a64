//! JSON artifacts: space files, function files, separators, exhaustion
//! directories and separation traces. Rationals are `[num, den]` pairs in
//! lowest terms; sets list point names in point order.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::{Map, Number, Value};

use tps_core::stream::{Exhaustion, SeparationTrace};
use tps_core::{FiniteTopology, MonotoneFn, PointSet, Preorder, PreorderedSpace, Rational, SeparatorPair};

use crate::{max_points, CliError, CliResult};

/// On-disk form of a preordered space. Exactly one of `opens` (the full
/// open family) and `basis` (generating sets) is given; `order` lists
/// generator edges `[x, y]` meaning `x ≤ y`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpaceFile {
    pub points: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub opens: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<Vec<String>>>,
    #[serde(default)]
    pub order: Vec<[String; 2]>,
}

fn index_of(points: &[String], name: &str) -> CliResult<usize> {
    points.iter().position(|p| p == name).ok_or_else(|| CliError::invalid(format!("unknown point {name:?}")))
}

pub fn names_to_set(points: &[String], names: &[String]) -> CliResult<PointSet> {
    names.iter().map(|n| index_of(points, n)).collect()
}

pub fn set_to_names(ps: &PreorderedSpace, s: PointSet) -> Vec<String> {
    s.iter().map(|x| ps.topology().point(x).to_string()).collect()
}

impl SpaceFile {
    pub fn to_space(&self) -> CliResult<PreorderedSpace> {
        let limit = max_points()?;
        if self.points.len() > limit {
            return Err(CliError::invalid(format!("{} points exceed the limit of {limit}", self.points.len())));
        }
        let topology = match (&self.opens, &self.basis) {
            (Some(opens), None) => {
                let sets = opens.iter().map(|o| names_to_set(&self.points, o)).collect::<CliResult<_>>()?;
                FiniteTopology::from_opens(self.points.clone(), sets)?
            }
            (None, Some(basis)) => {
                let sets: Vec<PointSet> =
                    basis.iter().map(|b| names_to_set(&self.points, b)).collect::<CliResult<_>>()?;
                FiniteTopology::generate(self.points.clone(), &sets)?
            }
            _ => return Err(CliError::invalid("a space file needs exactly one of \"opens\" and \"basis\"")),
        };
        let edges = self
            .order
            .iter()
            .map(|[x, y]| Ok((index_of(&self.points, x)?, index_of(&self.points, y)?)))
            .collect::<CliResult<Vec<_>>>()?;
        let order = Preorder::from_edges(self.points.len(), &edges)?;
        Ok(PreorderedSpace::new(topology, order)?)
    }

    /// Full open family and every nontrivial pair of the order.
    pub fn from_space(ps: &PreorderedSpace) -> Self {
        let t = ps.topology();
        SpaceFile {
            points: t.points().to_vec(),
            opens: Some(t.opens().iter().map(|&o| set_to_names(ps, o)).collect()),
            basis: None,
            order: ps
                .order()
                .nontrivial_pairs()
                .into_iter()
                .map(|(x, y)| [t.point(x).to_string(), t.point(y).to_string()])
                .collect(),
        }
    }
}

pub fn read_text(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| CliError::parse(format!("{}: {e}", path.display())))
}

pub fn write_text(path: &Path, text: &str) -> CliResult<()> {
    fs::write(path, text).map_err(|e| CliError::invalid(format!("{}: {e}", path.display())))
}

fn parse_json<T: serde::de::DeserializeOwned>(text: &str, what: &str) -> CliResult<T> {
    serde_json::from_str(text).map_err(|e| CliError::parse(format!("{what}: {e}")))
}

pub fn parse_space(text: &str) -> CliResult<PreorderedSpace> {
    parse_json::<SpaceFile>(text, "space file")?.to_space()
}

pub fn read_space(path: &Path) -> CliResult<PreorderedSpace> {
    parse_json::<SpaceFile>(&read_text(path)?, &path.display().to_string())?.to_space()
}

/// Indented JSON with arrays of scalars kept on one line, so rationals
/// and point lists stay readable.
pub fn to_pretty(value: &impl Serialize) -> String {
    let value = serde_json::to_value(value).expect("artifacts serialize");
    let mut out = String::new();
    write_value(&mut out, &value, 0);
    out.push('\n');
    out
}

fn write_value(out: &mut String, v: &Value, indent: usize) {
    let pad = |n: usize| "  ".repeat(n);
    match v {
        Value::Array(items) if items.iter().all(|x| !x.is_array() && !x.is_object()) => {
            let inner: Vec<String> = items.iter().map(Value::to_string).collect();
            out.push_str(&format!("[{}]", inner.join(", ")));
        }
        Value::Array(items) => {
            out.push_str("[\n");
            for (i, x) in items.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                write_value(out, x, indent + 1);
                out.push_str(if i + 1 < items.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(indent));
            out.push(']');
        }
        Value::Object(map) if map.is_empty() => out.push_str("{}"),
        Value::Object(map) => {
            out.push_str("{\n");
            for (i, (k, x)) in map.iter().enumerate() {
                out.push_str(&format!("{}{}: ", pad(indent + 1), Value::from(k.as_str())));
                write_value(out, x, indent + 1);
                out.push_str(if i + 1 < map.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(indent));
            out.push('}');
        }
        scalar => out.push_str(&scalar.to_string()),
    }
}

pub fn rational_to_json(r: &Rational) -> Value {
    let num: Number = r.numer().to_string().parse().expect("integer literal");
    let den: Number = r.denom().to_string().parse().expect("integer literal");
    Value::Array(vec![Value::Number(num), Value::Number(den)])
}

pub fn rational_from_json(v: &Value) -> CliResult<Rational> {
    let bad = || CliError::parse(format!("expected [num, den], found {v}"));
    let pair = v.as_array().filter(|a| a.len() == 2).ok_or_else(bad)?;
    let int = |x: &Value| -> CliResult<BigInt> {
        let n = x.as_number().ok_or_else(bad)?;
        n.to_string().parse::<BigInt>().map_err(|_| bad())
    };
    let (num, den) = (int(&pair[0])?, int(&pair[1])?);
    if den == BigInt::from(0) {
        return Err(CliError::invalid(format!("zero denominator in {v}")));
    }
    Ok(Rational::new(num, den))
}

/// `{point: [num, den]}` for the points of `domain` (`f` in subspace
/// indexing).
pub fn function_to_json(ps: &PreorderedSpace, domain: PointSet, f: &MonotoneFn) -> Value {
    let map: Map<String, Value> =
        domain.iter().zip(f.values()).map(|(x, v)| (ps.topology().point(x).to_string(), rational_to_json(v))).collect();
    Value::Object(map)
}

/// Reads a function file against `ps`: the domain is the set of keys and
/// the function is returned in subspace indexing.
pub fn function_from_json(ps: &PreorderedSpace, v: &Value) -> CliResult<(PointSet, MonotoneFn)> {
    let obj = v.as_object().ok_or_else(|| CliError::parse("function file must be a JSON object"))?;
    let points = ps.topology().points();
    let mut by_index: BTreeMap<usize, Rational> = BTreeMap::new();
    for (name, val) in obj {
        by_index.insert(index_of(points, name)?, rational_from_json(val)?);
    }
    let domain: PointSet = by_index.keys().copied().collect();
    let f = MonotoneFn::new(by_index.into_values().collect())?;
    Ok((domain, f))
}

pub fn read_function(ps: &PreorderedSpace, path: &Path) -> CliResult<(PointSet, MonotoneFn)> {
    let v: Value = parse_json(&read_text(path)?, &path.display().to_string())?;
    function_from_json(ps, &v)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeparatorFile {
    #[serde(rename = "U")]
    pub u: Vec<String>,
    #[serde(rename = "V")]
    pub v: Vec<String>,
}

impl SeparatorFile {
    pub fn new(ps: &PreorderedSpace, pair: &SeparatorPair) -> Self {
        SeparatorFile { u: set_to_names(ps, pair.u), v: set_to_names(ps, pair.v) }
    }
}

/// Comma-separated point names; the empty string is the empty set.
pub fn parse_set_arg(ps: &PreorderedSpace, arg: &str) -> CliResult<PointSet> {
    let names: Vec<String> = arg.split(',').map(str::trim).filter(|s| !s.is_empty()).map(String::from).collect();
    names_to_set(ps.topology().points(), &names)
}

/// Pieces `piece_001.json`, `piece_002.json`, … of a directory, with an
/// optional `inclusions.json`: one object per consecutive pair mapping
/// point names of piece `j` to names in piece `j+1`. Without it, points
/// are matched by name.
pub fn read_exhaustion(dir: &Path) -> CliResult<Exhaustion> {
    let entries = fs::read_dir(dir).map_err(|e| CliError::parse(format!("{}: {e}", dir.display())))?;
    let mut files: Vec<String> = entries
        .filter_map(|e| e.ok())
        .map(|e| e.file_name().to_string_lossy().into_owned())
        .filter(|name| {
            name.strip_prefix("piece_")
                .and_then(|r| r.strip_suffix(".json"))
                .is_some_and(|d| !d.is_empty() && d.bytes().all(|b| b.is_ascii_digit()))
        })
        .collect();
    files.sort_by_key(|name| name[6..name.len() - 5].parse::<u64>().unwrap_or(u64::MAX));
    if files.is_empty() {
        return Err(CliError::invalid(format!("{}: no piece_NNN.json files", dir.display())));
    }
    let pieces = files.iter().map(|f| read_space(&dir.join(f))).collect::<CliResult<Vec<_>>>()?;

    let manifest = dir.join("inclusions.json");
    let maps: Vec<BTreeMap<String, String>> = if manifest.exists() {
        parse_json(&read_text(&manifest)?, "inclusions.json")?
    } else {
        pieces.windows(2).map(|w| w[0].topology().points().iter().map(|p| (p.clone(), p.clone())).collect()).collect()
    };
    if maps.len() + 1 != pieces.len() {
        return Err(CliError::invalid(format!("inclusions.json has {} maps for {} pieces", maps.len(), pieces.len())));
    }
    let mut inclusions = Vec::with_capacity(maps.len());
    for (j, map) in maps.iter().enumerate() {
        let (from, to) = (&pieces[j], &pieces[j + 1]);
        let inc = from
            .topology()
            .points()
            .iter()
            .map(|p| {
                let target =
                    map.get(p).ok_or_else(|| CliError::invalid(format!("step {}: point {p:?} has no image", j + 1)))?;
                to.topology().index_of(target).ok_or_else(|| {
                    CliError::invalid(format!("step {}: image {target:?} is not a point of the next piece", j + 1))
                })
            })
            .collect::<CliResult<Vec<_>>>()?;
        inclusions.push(inc);
    }
    Ok(Exhaustion::new(pieces, inclusions))
}

/// Writes `exh` in the format [`read_exhaustion`] reads.
pub fn write_exhaustion(dir: &Path, exh: &Exhaustion) -> CliResult<()> {
    fs::create_dir_all(dir).map_err(|e| CliError::invalid(format!("{}: {e}", dir.display())))?;
    for (j, piece) in exh.pieces.iter().enumerate() {
        write_text(&dir.join(format!("piece_{:03}.json", j + 1)), &to_pretty(&SpaceFile::from_space(piece)))?;
    }
    let maps: Vec<BTreeMap<String, String>> = exh
        .inclusions
        .iter()
        .enumerate()
        .map(|(j, inc)| {
            let (from, to) = (exh.pieces[j].topology(), exh.pieces[j + 1].topology());
            inc.iter().enumerate().map(|(x, &y)| (from.point(x).to_string(), to.point(y).to_string())).collect()
        })
        .collect();
    write_text(&dir.join("inclusions.json"), &to_pretty(&maps))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceRecord {
    pub step: usize,
    #[serde(rename = "A_tilde")]
    pub a_tilde: Vec<String>,
    #[serde(rename = "B_tilde")]
    pub b_tilde: Vec<String>,
    #[serde(rename = "U")]
    pub u: Vec<String>,
    #[serde(rename = "V")]
    pub v: Vec<String>,
}

/// One record per step, `step` counted from 1.
pub fn trace_records(exh: &Exhaustion, trace: &SeparationTrace) -> Vec<TraceRecord> {
    trace
        .steps
        .iter()
        .zip(&exh.pieces)
        .enumerate()
        .map(|(j, (s, k))| TraceRecord {
            step: j + 1,
            a_tilde: set_to_names(k, s.tilde_a),
            b_tilde: set_to_names(k, s.tilde_b),
            u: set_to_names(k, s.u),
            v: set_to_names(k, s.v),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use tps_core::function::rational;

    fn chain() -> PreorderedSpace {
        parse_space(r#"{"points":["a","b"],"basis":[["a"],["b"]],"order":[["a","b"]]}"#).unwrap()
    }

    #[test]
    fn space_round_trip() {
        let ps = chain();
        let file = SpaceFile::from_space(&ps);
        assert_eq!(file.opens.as_ref().unwrap().len(), 4);
        let back = file.to_space().unwrap();
        assert_eq!(back, ps);
        assert_eq!(SpaceFile::from_space(&back), file);
    }

    #[test]
    fn opens_and_basis_are_exclusive() {
        let both = r#"{"points":["a"],"opens":[[],["a"]],"basis":[["a"]]}"#;
        assert_eq!(parse_space(both).unwrap_err().code, crate::exit::INVALID);
        let neither = r#"{"points":["a"]}"#;
        assert_eq!(parse_space(neither).unwrap_err().code, crate::exit::INVALID);
    }

    #[test]
    fn malformed_and_invalid_are_distinguished() {
        assert_eq!(parse_space("{\"points\": [").unwrap_err().code, crate::exit::PARSE);
        let not_topology = r#"{"points":["a","b"],"opens":[[],["a"],["b"]]}"#;
        assert_eq!(parse_space(not_topology).unwrap_err().code, crate::exit::INVALID);
        let unknown = r#"{"points":["a"],"basis":[],"order":[["a","z"]]}"#;
        assert_eq!(parse_space(unknown).unwrap_err().code, crate::exit::INVALID);
    }

    #[test]
    fn rationals_are_pairs_in_lowest_terms() {
        let v = rational_to_json(&rational(2, 4));
        assert_eq!(v.to_string(), "[1,2]");
        assert_eq!(rational_from_json(&v).unwrap(), rational(1, 2));
        let big: Value = serde_json::from_str("[1, 340282366920938463463374607431768211456]").unwrap();
        let r = rational_from_json(&big).unwrap();
        assert_eq!(rational_to_json(&r), big);
        assert!(rational_from_json(&serde_json::json!([1, 0])).is_err());
        assert!(rational_from_json(&serde_json::json!("1/2")).is_err());
    }

    #[test]
    fn function_files_use_subspace_indexing() {
        let ps = chain();
        let v = serde_json::json!({"b": [1, 1]});
        let (dom, f) = function_from_json(&ps, &v).unwrap();
        assert_eq!(dom, PointSet::singleton(1));
        assert_eq!(f.values(), &[rational(1, 1)]);
        assert_eq!(function_to_json(&ps, dom, &f), v);
        assert!(function_from_json(&ps, &serde_json::json!({"b": [3, 2]})).is_err());
    }

    #[test]
    fn pretty_output_parses_back() {
        let ps = chain();
        let text = to_pretty(&SpaceFile::from_space(&ps));
        assert!(text.starts_with("{\n  \"points\": [\"a\", \"b\"],"), "{text}");
        assert_eq!(parse_space(&text).unwrap(), ps);
        let f = serde_json::json!({"b": [1, 2], "a": [0, 1]});
        assert_eq!(to_pretty(&f), "{\n  \"b\": [1, 2],\n  \"a\": [0, 1]\n}\n");
    }

    #[test]
    fn set_arguments() {
        let ps = chain();
        assert_eq!(parse_set_arg(&ps, "").unwrap(), PointSet::EMPTY);
        assert_eq!(parse_set_arg(&ps, "b, a").unwrap(), ps.full());
        assert!(parse_set_arg(&ps, "c").is_err());
    }

    #[test]
    fn exhaustion_directory_round_trip() {
        let big = parse_space(r#"{"points":["a","b","c"],"basis":[["a"],["b"],["c"]],"order":[["a","b"],["b","c"]]}"#)
            .unwrap();
        let sets = [PointSet::singleton(0), big.full()];
        let exh = Exhaustion::from_nested_subsets(&big, &sets).unwrap();
        let dir = tempfile::tempdir().unwrap();
        write_exhaustion(dir.path(), &exh).unwrap();
        assert_eq!(read_exhaustion(dir.path()).unwrap(), exh);
        fs::remove_file(dir.path().join("inclusions.json")).unwrap();
        assert_eq!(read_exhaustion(dir.path()).unwrap(), exh);
    }
}
