//! Graphs attached to a leaf `(i, j)` and the combinatorial leaf conditions.
//!
//! The truncation `Γ[i, j]` is read as a graph whose vertices are the
//! `i`-elements and whose edges are the `j`-elements, which is meaningful
//! when every `j`-element has exactly two `i`-elements and no two share them
//! (condition B1). For an element `x` of another type, `Γ_x[i, j]` is the
//! graph of the `i`- and `j`-elements incident with `x`.

use super::graph::{parity_classes, Graph, ParityClasses};
use crate::error::{Error, Result};
use crate::incidence::{ElementId, IncidenceGeometry};

/// A graph read off a geometry: local vertex `v` is element `vertices[v]`
/// and local edge `e` (in [`Graph::edges`] order) is element `edge_elements[e]`.
#[derive(Clone, Debug)]
pub struct LeafGraph {
    /// The `i`-elements, ascending.
    pub vertices: Vec<ElementId>,
    /// The graph on local vertex ids.
    pub graph: Graph,
    /// The `j`-element behind each local edge `(a, b)`, keyed by the pair.
    pub edge_elements: Vec<((u32, u32), ElementId)>,
}

impl LeafGraph {
    /// Local id of a vertex element.
    pub fn local(&self, x: ElementId) -> Option<u32> {
        self.vertices.binary_search(&x).ok().map(|v| v as u32)
    }

    /// Parity classes of the graph.
    pub fn parity(&self) -> ParityClasses {
        parity_classes(&self.graph)
    }
}

fn check_pair(g: &IncidenceGeometry, (i, j): (usize, usize)) -> Result<()> {
    if i >= g.rank() || j >= g.rank() || i == j {
        return Err(Error::NotALeaf(i, j));
    }
    Ok(())
}

fn build(
    g: &IncidenceGeometry,
    vertices: Vec<ElementId>,
    edges: impl IntoIterator<Item = ElementId>,
    i: usize,
) -> Result<LeafGraph> {
    let local = |x: ElementId| vertices.binary_search(&x).ok().map(|v| v as u32);
    let mut pairs = Vec::new();
    let mut edge_elements = Vec::new();
    for e in edges {
        let ends = g.shadow(e, i);
        if ends.len() != 2 {
            return Err(Error::PreconditionFailed(format!(
                "element {e} has {} elements of type {i}, not 2",
                ends.len()
            )));
        }
        let (Some(a), Some(b)) = (local(ends[0]), local(ends[1])) else {
            return Err(Error::PreconditionFailed(format!("element {e} has an end outside the graph")));
        };
        pairs.push((a.min(b), a.max(b)));
        edge_elements.push(((a.min(b), a.max(b)), e));
    }
    let graph = Graph::new(vertices.len(), &pairs)
        .map_err(|_| Error::PreconditionFailed("two edges share the same pair of ends".into()))?;
    edge_elements.sort_unstable();
    Ok(LeafGraph { vertices, graph, edge_elements })
}

/// The graph `Γ[i, j]` of the whole geometry.
pub fn truncation_graph(g: &IncidenceGeometry, (i, j): (usize, usize)) -> Result<LeafGraph> {
    check_pair(g, (i, j))?;
    build(g, g.elements_of_type(i), g.elements_of_type(j), i)
}

/// The graph `Γ_x[i, j]` of the `i`- and `j`-elements incident with `x`.
pub fn residue_graph(g: &IncidenceGeometry, x: ElementId, (i, j): (usize, usize)) -> Result<LeafGraph> {
    check_pair(g, (i, j))?;
    build(g, g.shadow(x, i), g.shadow(x, j), i)
}

/// Whether the graph on the `i`-elements whose edges are the two-element
/// `i`-shadows of the `j`-elements is bipartite. Unlike
/// [`truncation_graph`] this tolerates repeated edges, so it also applies
/// when B1 fails.
pub fn truncation_is_bipartite(g: &IncidenceGeometry, (i, j): (usize, usize)) -> Result<bool> {
    check_pair(g, (i, j))?;
    let mut adj: Vec<Vec<ElementId>> = vec![Vec::new(); g.len()];
    for e in g.elements_of_type(j) {
        if let [a, b] = g.shadow(e, i)[..] {
            adj[a as usize].push(b);
            adj[b as usize].push(a);
        }
    }
    let mut side = vec![u8::MAX; g.len()];
    for s in g.elements_of_type(i) {
        if side[s as usize] != u8::MAX {
            continue;
        }
        side[s as usize] = 0;
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for &v in &adj[u as usize] {
                if side[v as usize] == u8::MAX {
                    side[v as usize] = 1 - side[u as usize];
                    stack.push(v);
                } else if side[v as usize] == side[u as usize] {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Condition B1 at `(i, j)`: every `j`-element has exactly two
/// `i`-elements and distinct `j`-elements have distinct `i`-shadows.
pub fn check_b1(g: &IncidenceGeometry, (i, j): (usize, usize)) -> Result<bool> {
    check_pair(g, (i, j))?;
    let mut shadows = Vec::new();
    for e in g.elements_of_type(j) {
        let s = g.shadow(e, i);
        if s.len() != 2 {
            return Ok(false);
        }
        shadows.push((s[0], s[1]));
    }
    let n = shadows.len();
    shadows.sort_unstable();
    shadows.dedup();
    Ok(shadows.len() == n)
}

/// Condition B2 at `(i, j)`: for every `j`-element `e` and every element
/// `x` of a type other than `i` and `j`, `e` and `x` are incident iff the
/// `i`-shadow of `e` is contained in that of `x`.
pub fn check_b2(g: &IncidenceGeometry, (i, j): (usize, usize)) -> Result<bool> {
    check_pair(g, (i, j))?;
    let other = |y: &ElementId| g.type_of(*y) != i && g.type_of(*y) != j;
    for e in g.elements_of_type(j) {
        let ends = g.shadow(e, i);
        // Elements whose i-shadow contains that of e.
        let containing: Vec<ElementId> = match ends.split_first() {
            None => (0..g.len() as u32).filter(other).collect(),
            Some((&first, rest)) => g
                .neighbors(first)
                .iter()
                .copied()
                .filter(|y| other(y) && rest.iter().all(|&z| g.incident(*y, z)))
                .collect(),
        };
        let incident: Vec<ElementId> = g.neighbors(e).iter().copied().filter(other).collect();
        if containing != incident {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether the leaf conditions propagate from the applied leaf `(i, j)` to
/// the next leaf `(k, l)`: for every incident `k`-element `x` and
/// `l`-element `y`, `Γ_x[i, j]` is bipartite, or neither `Γ_x[i, j]` nor
/// `Γ_y[i, j]` is.
pub fn b1b2_propagation(g: &IncidenceGeometry, applied: (usize, usize), next: (usize, usize)) -> Result<bool> {
    check_pair(g, applied)?;
    check_pair(g, next)?;
    let (k, l) = next;
    if [k, l].iter().any(|t| *t == applied.0 || *t == applied.1) {
        return Err(Error::PreconditionFailed("the next leaf must avoid the applied leaf".into()));
    }
    let mut bip = vec![None; g.len()];
    let mut is_bip = |x: ElementId| -> Result<bool> {
        if let Some(b) = bip[x as usize] {
            return Ok(b);
        }
        let b = residue_graph(g, x, applied)?.parity().is_bipartite();
        bip[x as usize] = Some(b);
        Ok(b)
    };
    for x in g.elements_of_type(k) {
        let bx = is_bip(x)?;
        if bx {
            continue;
        }
        for y in g.shadow(x, l) {
            if is_bip(y)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
