//! Irreducible components of `H_{d,g}(2H)` and the specialization graph
//! witnessing its connectedness.

use std::collections::{BTreeSet, VecDeque};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::foundations::half_product;
use crate::triples::{component_dim, curve_class, triple_from_class, CurveClass, Triple};
use crate::{Error, Result};

pub fn nonempty(d: i64, g: i64) -> bool {
    d >= 1 && (g == half_product(d - 1, d - 2) || (d >= 2 && g <= half_product(d - 2, d - 3)))
}

/// Component triples of `H_{d,g}(2H)`: the non-planar ones by increasing `y`,
/// then the planar triple `(0,0,d)` if present.
pub fn components(d: i64, g: i64) -> Vec<Triple> {
    if d < 1 {
        return Vec::new();
    }
    let mut out = Vec::new();
    if d >= 2 && g <= half_product(d - 2, d - 3) {
        out.extend((1..=d / 2).filter_map(|y| triple_from_class(d, g, y)));
    }
    if g == half_product(d - 1, d - 2) {
        out.extend(triple_from_class(d, g, 0));
    }
    out
}

/// Number of components, counted through the largest admissible `y`
/// rather than by listing them.
pub fn count_components(d: i64, g: i64) -> usize {
    if !nonempty(d, g) {
        return 0;
    }
    if (d, g) == (2, 0) {
        return 2;
    }
    if g == half_product(d - 1, d - 2) {
        return 1;
    }
    let room = half_product(d - 2, d - 3) - g;
    (1..=d / 2).filter(|&n| (n - 1) * (d - n - 2) <= room).max().unwrap_or(0) as usize
}

/// `(z, y, p) ↦ (z + p − y, y − 1, p + 1)`.
pub fn specialization_target(t: &Triple) -> Result<Triple> {
    if t.y() < 2 {
        return Err(Error::OutOfRange(format!(
            "specialization needs y >= 2, got triple {t}"
        )));
    }
    Triple::new(t.z() + t.p() - t.y(), t.y() - 1, t.p() + 1)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphNode {
    pub z: i64,
    pub y: i64,
    pub p: i64,
    pub dim: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphEdge {
    pub source: GraphNode,
    pub target: GraphNode,
}

/// Export shape of a [`ComponentGraph`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub d: i64,
    pub g: i64,
    pub nodes: Vec<GraphNode>,
    pub edges: Vec<GraphEdge>,
    pub connected: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentGraph {
    class: CurveClass,
    nodes: Vec<Triple>,
    edges: BTreeSet<(Triple, Triple)>,
}

impl ComponentGraph {
    pub fn nodes(&self) -> &[Triple] {
        &self.nodes
    }

    pub fn edges(&self) -> impl Iterator<Item = &(Triple, Triple)> {
        self.edges.iter()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn class(&self) -> CurveClass {
        self.class
    }

    /// Undirected connectivity, by breadth-first search.
    pub fn is_connected(&self) -> bool {
        let Some(&start) = self.nodes.first() else {
            return false;
        };
        let mut seen = BTreeSet::from([start]);
        let mut queue = VecDeque::from([start]);
        while let Some(cur) = queue.pop_front() {
            for &(a, b) in &self.edges {
                let next = if a == cur {
                    b
                } else if b == cur {
                    a
                } else {
                    continue;
                };
                if seen.insert(next) {
                    queue.push_back(next);
                }
            }
        }
        seen.len() == self.nodes.len()
    }

    fn node(t: &Triple) -> GraphNode {
        GraphNode {
            z: t.z(),
            y: t.y(),
            p: t.p(),
            dim: component_dim(t),
        }
    }

    pub fn to_json(&self) -> GraphJson {
        GraphJson {
            d: self.class.d,
            g: self.class.g,
            nodes: self.nodes.iter().map(Self::node).collect(),
            edges: self
                .edges
                .iter()
                .map(|(a, b)| GraphEdge {
                    source: Self::node(a),
                    target: Self::node(b),
                })
                .collect(),
            connected: self.is_connected(),
        }
    }

    pub fn to_dot(&self) -> String {
        let label = |t: &Triple| format!("{},{},{}/dim={}", t.z(), t.y(), t.p(), component_dim(t));
        let mut out = String::new();
        let _ = writeln!(out, "digraph H_{}_{} {{", self.class.d, self.class.g);
        for t in &self.nodes {
            let _ = writeln!(out, "  \"{0}\" [label=\"{0}\"];", label(t));
        }
        for (a, b) in &self.edges {
            let _ = writeln!(out, "  \"{}\" -> \"{}\";", label(a), label(b));
        }
        out.push_str("}\n");
        out
    }
}

/// Nodes are the components; edges come from the `y → y−1` specialization
/// rule, plus the conic family `(0,1,1) → (0,0,2)` for `(d,g) = (2,0)`.
pub fn component_graph(d: i64, g: i64) -> ComponentGraph {
    let nodes = components(d, g);
    let mut edges = BTreeSet::new();
    for t in &nodes {
        if let Ok(target) = specialization_target(t) {
            if nodes.contains(&target) {
                debug_assert_eq!(curve_class(t), curve_class(&target));
                edges.insert((*t, target));
            }
        }
    }
    if (d, g) == (2, 0) {
        let line = Triple::new(0, 1, 1).expect("valid");
        let conic = Triple::new(0, 0, 2).expect("valid");
        edges.insert((line, conic));
    }
    ComponentGraph {
        class: CurveClass { d, g },
        nodes,
        edges,
    }
}

pub fn is_connected(d: i64, g: i64) -> Result<bool> {
    if !nonempty(d, g) {
        return Err(Error::EmptyScheme { d, g });
    }
    Ok(component_graph(d, g).is_connected())
}
