//! Simple graphs, their parity classes and partitioned neighbourhood
//! geometries.

use crate::error::{Error, Result};
use crate::incidence::IncidenceGeometry;

/// A simple undirected graph on `0..n` with sorted adjacency lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<u32>>,
}

impl Graph {
    /// Builds a graph from an edge list; loops and repeated edges are rejected.
    pub fn new(n: usize, edges: &[(u32, u32)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in edges {
            if a == b || a as usize >= n || b as usize >= n {
                return Err(Error::InvalidGeometry(format!("bad graph edge ({a},{b})")));
            }
            adj[a as usize].push(b);
            adj[b as usize].push(a);
        }
        for l in adj.iter_mut() {
            l.sort_unstable();
            let len = l.len();
            l.dedup();
            if l.len() != len {
                return Err(Error::InvalidGeometry("repeated graph edge".into()));
            }
        }
        Ok(Graph { adj })
    }

    /// Number of vertices.
    pub fn len(&self) -> usize {
        self.adj.len()
    }

    /// True when there are no vertices.
    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    /// Sorted neighbours of `v`.
    pub fn neighbors(&self, v: u32) -> &[u32] {
        &self.adj[v as usize]
    }

    /// Whether `a` and `b` are adjacent.
    pub fn adjacent(&self, a: u32, b: u32) -> bool {
        self.adj[a as usize].binary_search(&b).is_ok()
    }

    /// Edges `(a, b)` with `a < b`, in lexicographic order.
    pub fn edges(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::new();
        for (a, l) in self.adj.iter().enumerate() {
            for &b in l {
                if b > a as u32 {
                    out.push((a as u32, b));
                }
            }
        }
        out
    }

    /// Whether the graph is connected (the empty graph is not).
    pub fn is_connected(&self) -> bool {
        !self.is_empty() && component_labels(self).iter().all(|&c| c == 0)
    }

    /// Length of a shortest cycle, `None` for a forest.
    pub fn girth(&self) -> Option<u32> {
        let n = self.len();
        let mut best: Option<u32> = None;
        let mut dist = vec![u32::MAX; n];
        let mut parent = vec![u32::MAX; n];
        for r in 0..n {
            dist.iter_mut().for_each(|d| *d = u32::MAX);
            dist[r] = 0;
            let mut queue = vec![r as u32];
            let mut head = 0;
            while head < queue.len() {
                let u = queue[head];
                head += 1;
                for &v in self.neighbors(u) {
                    if dist[v as usize] == u32::MAX {
                        dist[v as usize] = dist[u as usize] + 1;
                        parent[v as usize] = u;
                        queue.push(v);
                    } else if parent[u as usize] != v {
                        let len = dist[u as usize] + dist[v as usize] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }
}

fn component_labels(g: &Graph) -> Vec<u32> {
    let mut label = vec![u32::MAX; g.len()];
    let mut next = 0;
    for s in 0..g.len() {
        if label[s] != u32::MAX {
            continue;
        }
        label[s] = next;
        let mut stack = vec![s as u32];
        while let Some(u) = stack.pop() {
            for &v in g.neighbors(u) {
                if label[v as usize] == u32::MAX {
                    label[v as usize] = next;
                    stack.push(v);
                }
            }
        }
        next += 1;
    }
    label
}

/// The parity classes of a graph: two vertices are equivalent when an
/// even-length walk joins them. A connected bipartite graph has two classes
/// (its sides), any other connected graph a single one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParityClasses {
    /// Class of every vertex; classes are numbered in order of their
    /// smallest vertex.
    pub class_of: Vec<u32>,
    /// `partner[c]` is the class of the neighbours of class `c` (the other
    /// side for a bipartite component, `c` itself otherwise; an isolated
    /// vertex is its own partner).
    pub partner: Vec<u32>,
    /// Whether the graph is bipartite.
    pub bipartite: bool,
}

impl ParityClasses {
    /// Number of classes.
    pub fn len(&self) -> usize {
        self.partner.len()
    }

    /// True when the graph had no vertices.
    pub fn is_empty(&self) -> bool {
        self.partner.is_empty()
    }

    /// Vertices of class `c`, ascending.
    pub fn members(&self, c: u32) -> Vec<u32> {
        (0..self.class_of.len() as u32).filter(|&v| self.class_of[v as usize] == c).collect()
    }

    /// Whether the graph is bipartite.
    pub fn is_bipartite(&self) -> bool {
        self.bipartite
    }
}

/// Computes the parity classes of `g`.
pub fn parity_classes(g: &Graph) -> ParityClasses {
    let n = g.len();
    // Two-colour every component from its smallest vertex, noting conflicts.
    let mut side = vec![u8::MAX; n];
    let mut comp = vec![u32::MAX; n];
    let mut odd = Vec::new();
    let mut lonely = Vec::new();
    for s in 0..n {
        if side[s] != u8::MAX {
            continue;
        }
        let c = odd.len() as u32;
        let mut bad = false;
        side[s] = 0;
        comp[s] = c;
        let mut stack = vec![s as u32];
        while let Some(u) = stack.pop() {
            for &v in g.neighbors(u) {
                if side[v as usize] == u8::MAX {
                    side[v as usize] = 1 - side[u as usize];
                    comp[v as usize] = c;
                    stack.push(v);
                } else if side[v as usize] == side[u as usize] {
                    bad = true;
                }
            }
        }
        odd.push(bad);
        lonely.push(g.neighbors(s as u32).is_empty());
    }
    // Class key: (component, side) for bipartite components, component otherwise.
    let key = |v: usize| -> (u32, u8) {
        if odd[comp[v] as usize] || lonely[comp[v] as usize] {
            (comp[v], 0)
        } else {
            (comp[v], side[v])
        }
    };
    let mut ids: std::collections::HashMap<(u32, u8), u32> = std::collections::HashMap::new();
    let mut class_of = vec![0u32; n];
    for v in 0..n {
        let next = ids.len() as u32;
        class_of[v] = *ids.entry(key(v)).or_insert(next);
    }
    let mut partner = vec![0u32; ids.len()];
    for (&(c, s), &id) in &ids {
        partner[id as usize] = if odd[c as usize] || lonely[c as usize] { id } else { ids[&(c, 1 - s)] };
    }
    ParityClasses { class_of, partner, bipartite: !odd.contains(&true) }
}

/// The partitioned neighbourhood geometry of a graph with respect to a
/// vertex set `p`: points are the members of `p`, lines are the members of
/// its neighbourhood `p̄`, and a point is incident with a line when the two
/// vertices are adjacent. Points come first (ascending), then lines.
pub fn partitioned_neighborhood_geometry(g: &Graph, p: &[u32]) -> Result<IncidenceGeometry> {
    let mut points = p.to_vec();
    points.sort_unstable();
    points.dedup();
    if points.iter().any(|&v| v as usize >= g.len()) {
        return Err(Error::InvalidGeometry("vertex set names an unknown vertex".into()));
    }
    let mut lines: Vec<u32> = points.iter().flat_map(|&v| g.neighbors(v).iter().copied()).collect();
    lines.sort_unstable();
    lines.dedup();
    let np = points.len() as u32;
    let mut pairs = Vec::new();
    for (a, &u) in points.iter().enumerate() {
        for (b, &w) in lines.iter().enumerate() {
            if g.adjacent(u, w) {
                pairs.push((a as u32, np + b as u32));
            }
        }
    }
    let types = (0..points.len() + lines.len()).map(|x| (x >= points.len()) as usize).collect();
    IncidenceGeometry::from_parts(2, types, &pairs)
}

/// Gonality of a partitioned neighbourhood geometry of a connected graph
/// predicted from the graph: `girth` is the length of a shortest cycle and
/// `short_even` the length of a shortest even cycle strictly between the
/// girth and twice the girth, if any. `None` means infinite.
pub fn partitioned_neighborhood_gonality(girth: Option<u32>, short_even: Option<u32>) -> Option<u32> {
    let g = girth?;
    if g % 2 == 0 {
        return Some(g / 2);
    }
    match short_even {
        Some(k) if k > g && k < 2 * g => Some(k / 2),
        _ => Some(g),
    }
}
