//! Chamber enumeration by backtracking over types.

use super::{ElementId, IncidenceGeometry};
use crate::error::{Error, Result};

/// Neighbour lists split by type: `of(x, t)` is the sorted list of type-`t`
/// elements incident with `x`.
pub(crate) struct TypedAdjacency {
    rank: usize,
    offsets: Vec<usize>,
    data: Vec<ElementId>,
}

impl TypedAdjacency {
    pub(crate) fn new(g: &IncidenceGeometry) -> Self {
        let rank = g.rank();
        let mut offsets = Vec::with_capacity(g.len() * rank + 1);
        let mut data = Vec::with_capacity(2 * g.num_incidences());
        offsets.push(0);
        let mut buckets: Vec<Vec<ElementId>> = vec![Vec::new(); rank];
        for x in 0..g.len() as u32 {
            for &y in g.neighbors(x) {
                buckets[g.type_of(y)].push(y);
            }
            for b in buckets.iter_mut() {
                data.extend_from_slice(b);
                offsets.push(data.len());
                b.clear();
            }
        }
        TypedAdjacency { rank, offsets, data }
    }

    pub(crate) fn of(&self, x: ElementId, t: usize) -> &[ElementId] {
        let k = x as usize * self.rank + t;
        &self.data[self.offsets[k]..self.offsets[k + 1]]
    }
}

/// All chambers of a geometry, stored flat; chamber `c` lists its elements
/// by type.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chambers {
    rank: usize,
    data: Vec<ElementId>,
}

impl Chambers {
    /// Number of chambers.
    pub fn len(&self) -> usize {
        if self.rank == 0 {
            0
        } else {
            self.data.len() / self.rank
        }
    }

    /// True when there are no chambers.
    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Chamber `c`, indexed by type.
    pub fn get(&self, c: usize) -> &[ElementId] {
        &self.data[c * self.rank..(c + 1) * self.rank]
    }

    /// Iterates over all chambers in lexicographic order.
    pub fn iter(&self) -> impl Iterator<Item = &[ElementId]> {
        self.data.chunks(self.rank.max(1))
    }

    /// Index of a chamber (given by type) in the lexicographic order.
    pub fn position(&self, chamber: &[ElementId]) -> Option<usize> {
        let (mut lo, mut hi) = (0, self.len());
        while lo < hi {
            let mid = (lo + hi) / 2;
            match self.get(mid).cmp(chamber) {
                std::cmp::Ordering::Less => lo = mid + 1,
                std::cmp::Ordering::Greater => hi = mid,
                std::cmp::Ordering::Equal => return Some(mid),
            }
        }
        None
    }
}

impl IncidenceGeometry {
    /// Enumerates all chambers (flags containing one element of every type),
    /// failing once more than `limit` have been found.
    pub fn chambers(&self, limit: usize) -> Result<Chambers> {
        let rank = self.rank();
        let mut data = Vec::new();
        if rank == 0 {
            return Ok(Chambers { rank, data });
        }
        let adj = TypedAdjacency::new(self);
        let firsts = self.elements_of_type(0);
        let mut cur = vec![0u32; rank];
        let mut count = 0usize;
        for x in firsts {
            cur[0] = x;
            extend(self, &adj, &mut cur, 1, &mut |c| {
                count += 1;
                if count > limit {
                    return false;
                }
                data.extend_from_slice(c);
                true
            });
            if count > limit {
                return Err(Error::SizeLimitExceeded { what: "chambers", limit });
            }
        }
        Ok(Chambers { rank, data })
    }

    /// Chambers containing the flag `flag`, listed by type.
    pub fn chambers_through(&self, flag: &[ElementId]) -> Vec<Vec<ElementId>> {
        let rank = self.rank();
        let mut fixed: Vec<Option<ElementId>> = vec![None; rank];
        for &x in flag {
            fixed[self.type_of(x)] = Some(x);
        }
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(rank);
        fn rec(
            g: &IncidenceGeometry,
            fixed: &[Option<ElementId>],
            cur: &mut Vec<ElementId>,
            out: &mut Vec<Vec<ElementId>>,
            flag: &[ElementId],
        ) {
            let t = cur.len();
            if t == g.rank() {
                out.push(cur.clone());
                return;
            }
            let cands: Vec<ElementId> = match fixed[t] {
                Some(x) => vec![x],
                None => match flag.first().or(cur.first()) {
                    Some(&a) => g.shadow(a, t),
                    None => g.elements_of_type(t),
                },
            };
            for y in cands {
                if cur.iter().chain(flag.iter()).all(|&z| g.incident(y, z)) {
                    cur.push(y);
                    rec(g, fixed, cur, out, flag);
                    cur.pop();
                }
            }
        }
        rec(self, &fixed, &mut cur, &mut out, flag);
        out
    }
}

/// Extends a partial chamber `cur[..t]` (one element of each type below `t`)
/// in every possible way; `sink` returns false to abort.
fn extend(
    g: &IncidenceGeometry,
    adj: &TypedAdjacency,
    cur: &mut [ElementId],
    t: usize,
    sink: &mut dyn FnMut(&[ElementId]) -> bool,
) -> bool {
    if t == g.rank() {
        return sink(cur);
    }
    let prev = cur[t - 1];
    for i in 0..adj.of(prev, t).len() {
        let y = adj.of(prev, t)[i];
        if cur[..t - 1].iter().all(|&z| g.incident(y, z)) {
            cur[t] = y;
            if !extend(g, adj, cur, t + 1, sink) {
                return false;
            }
        }
    }
    true
}
