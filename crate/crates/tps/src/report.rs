//! Human and JSON renderings of classifications and their witnesses.

use serde_json::{json, Map, Value};

use tps_core::classify::{Diagnosis, Flag, Witness};
use tps_core::{Classification, Direction, PointSet, PreorderedSpace};

fn name(ps: &PreorderedSpace, x: usize) -> &str {
    ps.topology().point(x)
}

pub fn set_text(ps: &PreorderedSpace, s: PointSet) -> String {
    let names: Vec<&str> = s.iter().map(|x| name(ps, x)).collect();
    format!("{{{}}}", names.join(","))
}

fn set_json(ps: &PreorderedSpace, s: PointSet) -> Value {
    Value::from(s.iter().map(|x| name(ps, x)).collect::<Vec<_>>())
}

fn dir_word(dir: Direction) -> &'static str {
    match dir {
        Direction::Increasing => "increasing",
        Direction::Decreasing => "decreasing",
    }
}

pub fn witness_text(ps: &PreorderedSpace, w: &Witness) -> String {
    match *w {
        Witness::HullNotClosed { point, dir } => {
            let (hull, set) = match dir {
                Direction::Increasing => ("i", ps.order().up_of(point)),
                Direction::Decreasing => ("d", ps.order().down_of(point)),
            };
            format!("x={}: {hull}({}) = {} is not closed", name(ps, point), name(ps, point), set_text(ps, set))
        }
        Witness::GraphNotClosed { x, y } => {
            format!("{} ≰ {} but every pair of neighborhoods meets the graph of ≤", name(ps, x), name(ps, y))
        }
        Witness::NotConvexAt { point, open } => format!(
            "no U ∩ V (U open decreasing, V open increasing) with {} ∈ U ∩ V ⊆ {}",
            name(ps, point),
            set_text(ps, open)
        ),
        Witness::PointNotSeparated { point, set, set_dir } => format!(
            "{} cannot be separated from the closed {} set {}",
            name(ps, point),
            dir_word(set_dir),
            set_text(ps, set)
        ),
        Witness::PairNotSeparated { a, b } => {
            format!("no open monotone separator for A = {}, B = {}", set_text(ps, a), set_text(ps, b))
        }
        Witness::PairNotPerfect { a, b } => {
            format!("no continuous isotone f with f⁻¹(0) = {}, f⁻¹(1) = {}", set_text(ps, a), set_text(ps, b))
        }
    }
}

pub fn witness_json(ps: &PreorderedSpace, w: &Witness) -> Value {
    match *w {
        Witness::HullNotClosed { point, dir } => {
            let (hull, set) = match dir {
                Direction::Increasing => ("i", ps.order().up_of(point)),
                Direction::Decreasing => ("d", ps.order().down_of(point)),
            };
            json!({"kind": "hull_not_closed", "x": name(ps, point), "hull": hull, "set": set_json(ps, set)})
        }
        Witness::GraphNotClosed { x, y } => json!({"kind": "graph_not_closed", "x": name(ps, x), "y": name(ps, y)}),
        Witness::NotConvexAt { point, open } => {
            json!({"kind": "not_convex_at", "x": name(ps, point), "open": set_json(ps, open)})
        }
        Witness::PointNotSeparated { point, set, set_dir } => json!({
            "kind": "point_not_separated",
            "x": name(ps, point),
            "set": set_json(ps, set),
            "direction": dir_word(set_dir),
        }),
        Witness::PairNotSeparated { a, b } => {
            json!({"kind": "pair_not_separated", "A": set_json(ps, a), "B": set_json(ps, b)})
        }
        Witness::PairNotPerfect { a, b } => {
            json!({"kind": "pair_not_perfect", "A": set_json(ps, a), "B": set_json(ps, b)})
        }
    }
}

/// One line per flag: name, value, and the witness when false.
pub fn diagnosis_text(ps: &PreorderedSpace, d: &Diagnosis) -> String {
    let mut out = String::new();
    for flag in Flag::ALL {
        let value = d.witness(flag).is_none();
        out.push_str(&format!("{:<17} {}", flag.name(), value));
        if let Some(w) = d.witness(flag) {
            out.push_str("  ");
            out.push_str(&witness_text(ps, &w));
        }
        out.push('\n');
    }
    out
}

pub fn diagnosis_json(ps: &PreorderedSpace, d: &Diagnosis) -> Value {
    let mut witnesses = Map::new();
    for flag in Flag::ALL {
        if let Some(w) = d.witness(flag) {
            witnesses.insert(flag.name().to_string(), witness_json(ps, &w));
        }
    }
    json!({
        "points": ps.len(),
        "flags": flags_json(&d.classification()),
        "witnesses": witnesses,
    })
}

pub fn flags_json(c: &Classification) -> Value {
    Value::Object(Flag::ALL.iter().map(|&f| (f.name().to_string(), Value::Bool(c.get(f)))).collect())
}

/// `semiclosed=true closed=false …` on one line.
pub fn flags_line(c: &Classification) -> String {
    Flag::ALL.iter().map(|&f| format!("{}={}", f.name(), c.get(f))).collect::<Vec<_>>().join(" ")
}
