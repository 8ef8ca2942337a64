//! Graphviz output: Hasse-reduced order edges solid, minimal-neighborhood
//! containments dashed (`y -> x` when `x ∈ U_y`, also reduced).

use std::fmt::Write;

use tps_core::PreorderedSpace;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub from: usize,
    pub to: usize,
    /// The two endpoints are related both ways.
    pub both: bool,
}

/// Reduction of a preorder given as `rel(x, y)`: each class of mutually
/// related points becomes a chain of `both` edges, and classes are joined
/// through their first members by covering edges only.
pub fn reduced_edges(n: usize, rel: impl Fn(usize, usize) -> bool) -> Vec<Edge> {
    let rep: Vec<usize> = (0..n).map(|x| (0..n).find(|&y| rel(x, y) && rel(y, x)).unwrap_or(x)).collect();
    let mut edges = Vec::new();
    for x in 0..n {
        if let Some(prev) = (0..x).rev().find(|&y| rep[y] == rep[x]) {
            edges.push(Edge { from: prev, to: x, both: true });
        }
    }
    let reps: Vec<usize> = (0..n).filter(|&x| rep[x] == x).collect();
    let strict = |x: usize, y: usize| rel(x, y) && !rel(y, x);
    for &x in &reps {
        for &y in &reps {
            if strict(x, y) && !reps.iter().any(|&z| strict(x, z) && strict(z, y)) {
                edges.push(Edge { from: x, to: y, both: false });
            }
        }
    }
    edges
}

pub fn order_edges(ps: &PreorderedSpace) -> Vec<Edge> {
    reduced_edges(ps.len(), |x, y| ps.order().le(x, y))
}

pub fn neighborhood_edges(ps: &PreorderedSpace) -> Vec<Edge> {
    let t = ps.topology();
    reduced_edges(ps.len(), |x, y| t.minimal_neighborhood(x).contains(y))
}

fn quoted(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

pub fn to_dot(ps: &PreorderedSpace) -> String {
    let t = ps.topology();
    let mut out = String::from("digraph space {\n");
    for p in t.points() {
        writeln!(out, "  {};", quoted(p)).unwrap();
    }
    let mut emit = |e: &Edge, dashed: bool| {
        let mut attrs = Vec::new();
        if dashed {
            attrs.push("style=dashed");
        }
        if e.both {
            attrs.push("dir=both");
        }
        let attrs = if attrs.is_empty() { String::new() } else { format!(" [{}]", attrs.join(", ")) };
        writeln!(out, "  {} -> {}{attrs};", quoted(t.point(e.from)), quoted(t.point(e.to))).unwrap();
    };
    for e in order_edges(ps) {
        emit(&e, false);
    }
    for e in neighborhood_edges(ps) {
        emit(&e, true);
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count(dot: &str) -> (usize, usize) {
        let edges: Vec<&str> = dot.lines().filter(|l| l.contains("->")).collect();
        let dashed = edges.iter().filter(|l| l.contains("dashed")).count();
        (edges.len() - dashed, dashed)
    }

    #[test]
    fn chain_has_one_solid_edge() {
        let ps = PreorderedSpace::from_names(&["a", "b"], &[&["a"], &["b"]], &[("a", "b")]).unwrap();
        assert_eq!(count(&to_dot(&ps)), (1, 0));
    }

    #[test]
    fn sierpinski_has_one_dashed_edge() {
        let ps = PreorderedSpace::from_names(&["a", "b"], &[&["a"]], &[]).unwrap();
        let dot = to_dot(&ps);
        assert_eq!(count(&dot), (0, 1));
        assert!(dot.contains("\"b\" -> \"a\" [style=dashed]"));
    }

    #[test]
    fn one_point_has_no_edges() {
        let ps = PreorderedSpace::from_names(&["a"], &[], &[]).unwrap();
        assert_eq!(to_dot(&ps), "digraph space {\n  \"a\";\n}\n");
    }

    #[test]
    fn reduction_drops_transitive_edges() {
        let ps = PreorderedSpace::from_names(&["a", "b", "c"], &[&["a"], &["b"], &["c"]], &[("a", "b"), ("b", "c")])
            .unwrap();
        let e = order_edges(&ps);
        assert_eq!(e.len(), 2);
        assert!(!e.iter().any(|e| e.from == 0 && e.to == 2));
    }

    #[test]
    fn indifference_classes_become_chains() {
        let ps = PreorderedSpace::from_names(
            &["a", "b", "c", "d"],
            &[&["a"], &["b"], &["c"], &["d"]],
            &[("a", "b"), ("b", "c"), ("c", "a"), ("c", "d")],
        )
        .unwrap();
        let e = order_edges(&ps);
        assert_eq!(e.iter().filter(|e| e.both).count(), 2);
        assert_eq!(e.iter().filter(|e| !e.both).count(), 1);
    }

    #[test]
    fn names_are_escaped() {
        assert_eq!(quoted("a\"b"), "\"a\\\"b\"");
    }
}
