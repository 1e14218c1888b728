//! Incidence geometries: typed elements with a symmetric, irreflexive
//! incidence relation, plus the structural operations on them.
//!
//! Elements are dense ids `0..len()`; every element carries a type in
//! `0..rank()`. Incidence is stored as sorted adjacency lists in compressed
//! form, so `neighbors(x)` is a sorted slice and `incident(x, y)` is a binary
//! search.

mod chambers;
mod diagram;
mod iso;
mod json;
mod ops;
mod props;
mod transitive;

pub use chambers::Chambers;
pub use diagram::{BuekenhoutDiagram, DiagramEntry, RankTwoLabel};
pub use iso::{automorphism_group, find_isomorphism, isomorphic};
pub use json::{GeometryDoc, ProvenanceDoc};
pub use ops::SubGeometry;
pub use props::FlagReport;

use crate::error::{Error, Result};

/// Element identifier inside one geometry.
pub type ElementId = u32;

/// Records how a constructed geometry relates to the geometry it was built
/// from: for every element, the id of the source element it came from and a
/// small tag (fibre index or parity-class index).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Provenance {
    /// Name of the construction (`"P"`, `"BP"`, ...).
    pub construction: String,
    /// The leaf `(i, j)` the construction was applied at.
    pub leaf: (usize, usize),
    /// `base[x]` is the source element behind element `x`.
    pub base: Vec<ElementId>,
    /// `tag[x]` is the fibre or class index attached to element `x`.
    pub tag: Vec<u32>,
}

/// A finite incidence geometry (more precisely an incidence system; use
/// [`IncidenceGeometry::is_geometry`] to test the flag condition).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IncidenceGeometry {
    rank: usize,
    types: Vec<u32>,
    offsets: Vec<usize>,
    nbrs: Vec<ElementId>,
    provenance: Option<Provenance>,
}

impl IncidenceGeometry {
    /// Builds a geometry from a type map and a list of incident pairs.
    ///
    /// Duplicate pairs (in either orientation) are merged. Pairs naming an
    /// unknown element, an element with itself, or two distinct elements of
    /// the same type are rejected, and so is a type without elements.
    pub fn from_parts(rank: usize, types: Vec<usize>, pairs: &[(ElementId, ElementId)]) -> Result<Self> {
        let n = types.len();
        if n > u32::MAX as usize {
            return Err(Error::InvalidGeometry("too many elements".into()));
        }
        if let Some((x, t)) = types.iter().enumerate().find(|&(_, &t)| t >= rank) {
            return Err(Error::InvalidGeometry(format!("element {x} has type {t} but rank is {rank}")));
        }
        let mut seen = vec![false; rank];
        types.iter().for_each(|&t| seen[t] = true);
        if let Some(t) = seen.iter().position(|&s| !s) {
            return Err(Error::InvalidGeometry(format!("type {t} has no elements")));
        }
        let mut degree = vec![0usize; n];
        for &(a, b) in pairs {
            let (ua, ub) = (a as usize, b as usize);
            if ua >= n || ub >= n {
                return Err(Error::InvalidGeometry(format!("incidence ({a},{b}) names an unknown element")));
            }
            if a == b {
                return Err(Error::InvalidGeometry(format!("element {a} is listed as incident with itself")));
            }
            if types[ua] == types[ub] {
                return Err(Error::InvalidGeometry(format!(
                    "distinct elements {a} and {b} of the same type {} are incident",
                    types[ua]
                )));
            }
            degree[ua] += 1;
            degree[ub] += 1;
        }
        let mut offsets = Vec::with_capacity(n + 1);
        offsets.push(0);
        for d in &degree {
            offsets.push(offsets.last().unwrap() + d);
        }
        let mut fill = offsets[..n].to_vec();
        let mut nbrs = vec![0u32; offsets[n]];
        for &(a, b) in pairs {
            nbrs[fill[a as usize]] = b;
            fill[a as usize] += 1;
            nbrs[fill[b as usize]] = a;
            fill[b as usize] += 1;
        }
        // Sort and deduplicate each list, then recompact.
        let mut new_offsets = Vec::with_capacity(n + 1);
        new_offsets.push(0);
        let mut write = 0usize;
        for x in 0..n {
            let (lo, hi) = (offsets[x], offsets[x + 1]);
            nbrs[lo..hi].sort_unstable();
            let mut last = None;
            for r in lo..hi {
                let v = nbrs[r];
                if last != Some(v) {
                    nbrs[write] = v;
                    write += 1;
                    last = Some(v);
                }
            }
            new_offsets.push(write);
        }
        nbrs.truncate(write);
        Ok(IncidenceGeometry {
            rank,
            types: types.into_iter().map(|t| t as u32).collect(),
            offsets: new_offsets,
            nbrs,
            provenance: None,
        })
    }

    /// Attaches construction provenance (one entry per element).
    pub fn with_provenance(mut self, provenance: Provenance) -> Result<Self> {
        if provenance.base.len() != self.len() || provenance.tag.len() != self.len() {
            return Err(Error::InvalidGeometry("provenance length does not match element count".into()));
        }
        self.provenance = Some(provenance);
        Ok(self)
    }

    /// Drops provenance information.
    pub fn without_provenance(mut self) -> Self {
        self.provenance = None;
        self
    }

    /// Construction provenance, if this geometry was produced by a construction.
    pub fn provenance(&self) -> Option<&Provenance> {
        self.provenance.as_ref()
    }

    /// Number of types.
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Number of elements.
    pub fn len(&self) -> usize {
        self.types.len()
    }

    /// True when the geometry has no elements.
    pub fn is_empty(&self) -> bool {
        self.types.is_empty()
    }

    /// Type of element `x`.
    pub fn type_of(&self, x: ElementId) -> usize {
        self.types[x as usize] as usize
    }

    /// The full type map.
    pub fn types(&self) -> impl Iterator<Item = usize> + '_ {
        self.types.iter().map(|&t| t as usize)
    }

    /// Sorted list of elements incident with `x`.
    pub fn neighbors(&self, x: ElementId) -> &[ElementId] {
        &self.nbrs[self.offsets[x as usize]..self.offsets[x as usize + 1]]
    }

    /// Number of elements incident with `x`.
    pub fn degree(&self, x: ElementId) -> usize {
        self.offsets[x as usize + 1] - self.offsets[x as usize]
    }

    /// Whether `x` and `y` are incident. Every element is incident with itself.
    pub fn incident(&self, x: ElementId, y: ElementId) -> bool {
        x == y || self.neighbors(x).binary_search(&y).is_ok()
    }

    /// All elements of type `t`, in increasing id order.
    pub fn elements_of_type(&self, t: usize) -> Vec<ElementId> {
        (0..self.len() as u32).filter(|&x| self.type_of(x) == t).collect()
    }

    /// Number of elements of each type.
    pub fn type_counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.rank];
        for t in self.types() {
            counts[t] += 1;
        }
        counts
    }

    /// Number of incident pairs `{x, y}` with `x != y`.
    pub fn num_incidences(&self) -> usize {
        self.nbrs.len() / 2
    }

    /// Incident pairs `(x, y)` with `x < y`, in lexicographic order.
    pub fn incidences(&self) -> impl Iterator<Item = (ElementId, ElementId)> + '_ {
        (0..self.len() as u32)
            .flat_map(move |x| self.neighbors(x).iter().filter(move |&&y| y > x).map(move |&y| (x, y)))
    }

    /// Whether `set` is a flag: pairwise incident elements of distinct types.
    pub fn is_flag(&self, set: &[ElementId]) -> bool {
        for (a, &x) in set.iter().enumerate() {
            if x as usize >= self.len() {
                return false;
            }
            for &y in &set[a + 1..] {
                if x == y || !self.incident(x, y) {
                    return false;
                }
            }
        }
        true
    }

    /// The geometry with types renamed by `perm` (old type `t` becomes
    /// `perm[t]`). Provenance is dropped.
    pub fn permute_types(&self, perm: &[usize]) -> Result<Self> {
        let mut seen = vec![false; self.rank];
        if perm.len() != self.rank {
            return Err(Error::InvalidGeometry("type permutation has the wrong length".into()));
        }
        for &p in perm {
            if p >= self.rank || seen[p] {
                return Err(Error::InvalidGeometry("type map is not a permutation".into()));
            }
            seen[p] = true;
        }
        let mut out = self.clone();
        for t in out.types.iter_mut() {
            *t = perm[*t as usize] as u32;
        }
        out.provenance = None;
        Ok(out)
    }
}
