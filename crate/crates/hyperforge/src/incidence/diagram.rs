//! Buekenhout diagrams: the label `(g, d_P, d_L)` of every rank-two residue.

use std::collections::BTreeMap;
use std::fmt;

use super::{ElementId, IncidenceGeometry};
use crate::error::Result;

/// Label of a rank-two geometry: gonality and the two diameters. `None`
/// stands for infinity (no cycle, or a disconnected residue).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RankTwoLabel {
    /// Half the length of a shortest cycle of the incidence graph.
    pub gonality: Option<u32>,
    /// Largest distance from a point (lower type) to any element.
    pub point_diameter: Option<u32>,
    /// Largest distance from a line (higher type) to any element.
    pub line_diameter: Option<u32>,
}

impl RankTwoLabel {
    /// The label of a generalised `g`-gon.
    pub fn polygon(g: u32) -> Self {
        RankTwoLabel { gonality: Some(g), point_diameter: Some(g), line_diameter: Some(g) }
    }

    /// Whether this is the label `(2,2,2)` of a generalised digon.
    pub fn is_digon(&self) -> bool {
        *self == Self::polygon(2)
    }

    /// `Some(g)` when the label is `(g,g,g)`.
    pub fn polygon_order(&self) -> Option<u32> {
        match (self.gonality, self.point_diameter, self.line_diameter) {
            (Some(g), Some(p), Some(l)) if g == p && p == l => Some(g),
            _ => None,
        }
    }

    /// Computes the label of a rank-two geometry given as the element set
    /// `set` of `g`, whose points are the elements of type `point_type`.
    pub fn of_residue(g: &IncidenceGeometry, set: &[ElementId], point_type: usize) -> Self {
        let m = set.len();
        let local = |y: ElementId| set.binary_search(&y).ok();
        let adj: Vec<Vec<usize>> =
            set.iter().map(|&x| g.neighbors(x).iter().filter_map(|&y| local(y)).collect()).collect();
        let mut girth: Option<u32> = None;
        let mut dp: Option<u32> = Some(0);
        let mut dl: Option<u32> = Some(0);
        let mut dist = vec![u32::MAX; m];
        let mut parent = vec![usize::MAX; m];
        let mut queue = Vec::with_capacity(m);
        for r in 0..m {
            dist.iter_mut().for_each(|d| *d = u32::MAX);
            queue.clear();
            dist[r] = 0;
            parent[r] = usize::MAX;
            queue.push(r);
            let mut head = 0;
            while head < queue.len() {
                let u = queue[head];
                head += 1;
                for &v in &adj[u] {
                    if dist[v] == u32::MAX {
                        dist[v] = dist[u] + 1;
                        parent[v] = u;
                        queue.push(v);
                    } else if parent[u] != v {
                        let len = dist[u] + dist[v] + 1;
                        girth = Some(girth.map_or(len, |gl| gl.min(len)));
                    }
                }
            }
            let ecc = if queue.len() == m { dist.iter().copied().max() } else { None };
            let slot = if g.type_of(set[r]) == point_type { &mut dp } else { &mut dl };
            *slot = match (*slot, ecc) {
                (Some(a), Some(b)) => Some(a.max(b)),
                _ => None,
            };
        }
        RankTwoLabel { gonality: girth.map(|l| l / 2), point_diameter: dp, line_diameter: dl }
    }
}

impl fmt::Display for RankTwoLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = |v: Option<u32>| v.map_or_else(|| "inf".to_string(), |x| x.to_string());
        write!(f, "({},{},{})", s(self.gonality), s(self.point_diameter), s(self.line_diameter))
    }
}

/// What the diagram records for one pair of types.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DiagramEntry {
    /// All residues of this cotype share one label.
    Uniform(RankTwoLabel),
    /// Residues disagree; the multiset of labels with multiplicities.
    NonUniform(Vec<(RankTwoLabel, usize)>),
    /// No flag of the complementary type exists.
    Absent,
}

impl DiagramEntry {
    /// The uniform label, if any.
    pub fn label(&self) -> Option<RankTwoLabel> {
        match self {
            DiagramEntry::Uniform(l) => Some(*l),
            _ => None,
        }
    }
}

/// Labels of all rank-two residues, keyed by the pair of residue types.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BuekenhoutDiagram {
    /// Rank of the geometry.
    pub rank: usize,
    /// One entry per pair `(i, j)` with `i < j`.
    pub entries: BTreeMap<(usize, usize), DiagramEntry>,
}

impl BuekenhoutDiagram {
    /// The entry for the pair `{i, j}`.
    pub fn entry(&self, i: usize, j: usize) -> &DiagramEntry {
        &self.entries[&(i.min(j), i.max(j))]
    }

    /// Pairs whose residues are not all digons, with their entries.
    pub fn edges(&self) -> Vec<((usize, usize), DiagramEntry)> {
        self.entries
            .iter()
            .filter(|(_, e)| !matches!(e, DiagramEntry::Uniform(l) if l.is_digon()))
            .map(|(k, e)| (*k, e.clone()))
            .collect()
    }

    /// The diagram as a Coxeter-style matrix when every entry is the label
    /// of a generalised polygon: `m[i][j] = g`, `m[i][i] = 1`.
    pub fn polygon_matrix(&self) -> Option<Vec<Vec<u32>>> {
        let mut m = vec![vec![1u32; self.rank]; self.rank];
        for (&(i, j), e) in &self.entries {
            let g = e.label()?.polygon_order()?;
            m[i][j] = g;
            m[j][i] = g;
        }
        Some(m)
    }
}

impl IncidenceGeometry {
    /// The Buekenhout diagram, computed from every rank-two residue.
    /// Fails if more than `max_flags` flags of some cotype would be visited.
    pub fn buekenhout_diagram(&self, max_flags: usize) -> Result<BuekenhoutDiagram> {
        let mut entries = BTreeMap::new();
        for i in 0..self.rank() {
            for j in i + 1..self.rank() {
                entries.insert((i, j), self.diagram_entry(i, j, max_flags)?);
            }
        }
        Ok(BuekenhoutDiagram { rank: self.rank(), entries })
    }

    /// The diagram entry for the pair of types `{i, j}`: the labels of all
    /// residues of flags whose type is the complement of `{i, j}`.
    pub fn diagram_entry(&self, i: usize, j: usize, max_flags: usize) -> Result<DiagramEntry> {
        let (i, j) = (i.min(j), i.max(j));
        let others: Vec<usize> = (0..self.rank()).filter(|&t| t != i && t != j).collect();
        let mut labels: BTreeMap<RankTwoLabel, usize> = BTreeMap::new();
        let mut visit = |flag: Vec<ElementId>| {
            let res = self.residue_elements_unchecked(&flag);
            *labels.entry(RankTwoLabel::of_residue(self, &res, i)).or_default() += 1;
        };
        if others.is_empty() {
            visit(Vec::new());
        } else {
            let trunc = self.truncation(&others)?;
            let flags = trunc.geometry.chambers(max_flags)?;
            for c in flags.iter() {
                visit(c.iter().map(|&x| trunc.elements[x as usize]).collect());
            }
        }
        Ok(summarize(labels))
    }

    /// The diagram read off the residues of the subflags of one chamber.
    /// Equals [`Self::buekenhout_diagram`] when chambers form a single orbit
    /// under automorphisms.
    pub fn buekenhout_diagram_at_chamber(&self, chamber: &[ElementId]) -> BuekenhoutDiagram {
        let mut entries = BTreeMap::new();
        for i in 0..self.rank() {
            for j in i + 1..self.rank() {
                let flag: Vec<ElementId> = (0..self.rank()).filter(|&t| t != i && t != j).map(|t| chamber[t]).collect();
                let res = self.residue_elements_unchecked(&flag);
                entries.insert((i, j), DiagramEntry::Uniform(RankTwoLabel::of_residue(self, &res, i)));
            }
        }
        BuekenhoutDiagram { rank: self.rank(), entries }
    }
}

fn summarize(labels: BTreeMap<RankTwoLabel, usize>) -> DiagramEntry {
    match labels.len() {
        0 => DiagramEntry::Absent,
        1 => DiagramEntry::Uniform(*labels.keys().next().unwrap()),
        _ => DiagramEntry::NonUniform(labels.into_iter().collect()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn polygon(n: u32) -> IncidenceGeometry {
        let mut pairs = Vec::new();
        for i in 0..n {
            pairs.push((i, n + i));
            pairs.push(((i + 1) % n, n + i));
        }
        let types = (0..2 * n).map(|x| (x >= n) as usize).collect();
        IncidenceGeometry::from_parts(2, types, &pairs).unwrap()
    }

    #[test]
    fn polygon_labels() {
        for n in 2..9 {
            let d = polygon(n).buekenhout_diagram(100).unwrap();
            assert_eq!(d.entry(0, 1), &DiagramEntry::Uniform(RankTwoLabel::polygon(n)));
        }
    }

    #[test]
    fn tree_has_infinite_gonality() {
        let g = IncidenceGeometry::from_parts(2, vec![0, 0, 1], &[(0, 2), (1, 2)]).unwrap();
        let l = RankTwoLabel::of_residue(&g, &[0, 1, 2], 0);
        assert_eq!(l.gonality, None);
        assert_eq!(l.point_diameter, Some(2));
        assert_eq!(l.line_diameter, Some(1));
        assert_eq!(l.to_string(), "(inf,2,1)");
    }

    #[test]
    fn disconnected_residue_has_infinite_diameter() {
        let g = IncidenceGeometry::from_parts(2, vec![0, 0, 1, 1], &[(0, 2), (1, 3)]).unwrap();
        let l = RankTwoLabel::of_residue(&g, &[0, 1, 2, 3], 0);
        assert_eq!(l.point_diameter, None);
    }
}
