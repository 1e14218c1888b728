//! Type-preserving isomorphism and automorphism search.
//!
//! Both searches work on the disjoint union of two incidence graphs. Colours
//! start as element types and are refined by the sorted multiset of
//! neighbour colours until stable; new colour ids are assigned by sorting
//! signatures, so the two halves receive comparable colours. When the
//! partition is not discrete the smallest-id element of the first
//! non-singleton cell of the left half is individualised against every
//! candidate of the right half.

use super::{ElementId, IncidenceGeometry};
use crate::error::{Error, Result};
use crate::group::PermGroup;

/// Largest combined element count the searches accept.
const MAX_SEARCH_ELEMENTS: usize = 8_000_000;

struct Union {
    n1: usize,
    offsets: Vec<usize>,
    nbrs: Vec<u32>,
}

impl Union {
    fn new(g1: &IncidenceGeometry, g2: &IncidenceGeometry) -> Result<Self> {
        let n = g1.len() + g2.len();
        if n > MAX_SEARCH_ELEMENTS {
            return Err(Error::SizeLimitExceeded {
                what: "elements in isomorphism search",
                limit: MAX_SEARCH_ELEMENTS,
            });
        }
        let n1 = g1.len();
        let mut offsets = Vec::with_capacity(n + 1);
        let mut nbrs = Vec::with_capacity(2 * (g1.num_incidences() + g2.num_incidences()));
        offsets.push(0);
        for x in 0..g1.len() as u32 {
            nbrs.extend_from_slice(g1.neighbors(x));
            offsets.push(nbrs.len());
        }
        for x in 0..g2.len() as u32 {
            nbrs.extend(g2.neighbors(x).iter().map(|&y| y + n1 as u32));
            offsets.push(nbrs.len());
        }
        Ok(Union { n1, offsets, nbrs })
    }

    fn len(&self) -> usize {
        self.offsets.len() - 1
    }

    fn adj(&self, v: usize) -> &[u32] {
        &self.nbrs[self.offsets[v]..self.offsets[v + 1]]
    }

    /// Refines `colors` to the coarsest stable partition below it and returns
    /// the number of colours.
    fn refine(&self, colors: &mut [u32]) -> u32 {
        let n = self.len();
        let mut buf = vec![0u32; self.nbrs.len()];
        let mut order: Vec<u32> = (0..n as u32).collect();
        let mut count = count_colors(colors);
        loop {
            for v in 0..n {
                let (lo, hi) = (self.offsets[v], self.offsets[v + 1]);
                for (slot, &y) in buf[lo..hi].iter_mut().zip(&self.nbrs[lo..hi]) {
                    *slot = colors[y as usize];
                }
                buf[lo..hi].sort_unstable();
            }
            let key = |v: u32| (colors[v as usize], &buf[self.offsets[v as usize]..self.offsets[v as usize + 1]]);
            order.sort_unstable_by(|&a, &b| key(a).cmp(&key(b)));
            let mut next = vec![0u32; n];
            let mut c = 0u32;
            for i in 0..n {
                if i > 0 && key(order[i]) != key(order[i - 1]) {
                    c += 1;
                }
                next[order[i] as usize] = c;
            }
            let new_count = if n == 0 { 0 } else { c + 1 };
            colors.copy_from_slice(&next);
            if new_count == count {
                return new_count;
            }
            count = new_count;
        }
    }

    /// Whether every colour occurs equally often in both halves.
    fn balanced(&self, colors: &[u32], ncolors: u32) -> bool {
        let mut diff = vec![0i64; ncolors as usize];
        for (v, &c) in colors.iter().enumerate() {
            diff[c as usize] += if v < self.n1 { 1 } else { -1 };
        }
        diff.iter().all(|&d| d == 0)
    }

    /// Depth-first individualisation search for a colour-respecting bijection
    /// from the left half onto the right half.
    fn search(&self, mut colors: Vec<u32>) -> Option<Vec<ElementId>> {
        let ncolors = self.refine(&mut colors);
        if !self.balanced(&colors, ncolors) {
            return None;
        }
        let mut size = vec![0usize; ncolors as usize];
        for &c in &colors[..self.n1] {
            size[c as usize] += 1;
        }
        let target = (0..ncolors).find(|&c| size[c as usize] > 1);
        let Some(target) = target else {
            let mut right = vec![u32::MAX; ncolors as usize];
            for v in self.n1..self.len() {
                right[colors[v] as usize] = (v - self.n1) as u32;
            }
            let map: Vec<ElementId> = colors[..self.n1].iter().map(|&c| right[c as usize]).collect();
            return self.verify(&map).then_some(map);
        };
        let u = (0..self.n1).find(|&v| colors[v] == target).unwrap();
        for w in self.n1..self.len() {
            if colors[w] != target {
                continue;
            }
            let mut next = colors.clone();
            next[u] = ncolors;
            next[w] = ncolors;
            if let Some(map) = self.search(next) {
                return Some(map);
            }
        }
        None
    }

    fn verify(&self, map: &[ElementId]) -> bool {
        (0..self.n1).all(|v| {
            let image = self.adj(map[v] as usize + self.n1);
            image.len() == self.adj(v).len()
                && self.adj(v).iter().all(|&y| image.binary_search(&(map[y as usize] + self.n1 as u32)).is_ok())
        })
    }
}

fn count_colors(colors: &[u32]) -> u32 {
    let mut seen: Vec<u32> = colors.to_vec();
    seen.sort_unstable();
    seen.dedup();
    seen.len() as u32
}

fn initial_colors(g1: &IncidenceGeometry, g2: &IncidenceGeometry) -> Vec<u32> {
    g1.types().chain(g2.types()).map(|t| t as u32).collect()
}

fn cheap_invariants_match(g1: &IncidenceGeometry, g2: &IncidenceGeometry) -> bool {
    if g1.rank() != g2.rank() || g1.len() != g2.len() || g1.num_incidences() != g2.num_incidences() {
        return false;
    }
    let profile = |g: &IncidenceGeometry| {
        let mut p: Vec<(usize, usize)> = (0..g.len() as u32).map(|x| (g.type_of(x), g.degree(x))).collect();
        p.sort_unstable();
        p
    };
    profile(g1) == profile(g2)
}

/// A type-preserving isomorphism from `g1` onto `g2`, as the image of every
/// element of `g1`, if one exists.
pub fn find_isomorphism(g1: &IncidenceGeometry, g2: &IncidenceGeometry) -> Result<Option<Vec<ElementId>>> {
    if !cheap_invariants_match(g1, g2) {
        return Ok(None);
    }
    let u = Union::new(g1, g2)?;
    Ok(u.search(initial_colors(g1, g2)))
}

/// Whether a type-preserving isomorphism between the two geometries exists.
pub fn isomorphic(g1: &IncidenceGeometry, g2: &IncidenceGeometry) -> Result<bool> {
    Ok(find_isomorphism(g1, g2)?.is_some())
}

/// The group of type-preserving automorphisms, as a permutation group on
/// element ids with a generating set and its exact order.
///
/// The order is obtained from a stabiliser chain along the first search
/// path: at each level the orbit of the individualised element under the
/// automorphisms found so far is completed by trying every remaining
/// candidate of its cell.
pub fn automorphism_group(g: &IncidenceGeometry) -> Result<PermGroup> {
    let u = Union::new(g, g)?;
    let n = g.len();
    // First path: refined colourings and individualised elements per level.
    let mut levels: Vec<(Vec<u32>, u32, usize)> = Vec::new();
    let mut colors = initial_colors(g, g);
    loop {
        let ncolors = u.refine(&mut colors);
        let mut size = vec![0usize; ncolors as usize];
        for &c in &colors[..n] {
            size[c as usize] += 1;
        }
        let Some(target) = (0..ncolors).find(|&c| size[c as usize] > 1) else {
            break;
        };
        let b = (0..n).find(|&v| colors[v] == target).unwrap();
        levels.push((colors.clone(), ncolors, b));
        colors[b] = ncolors;
        colors[b + n] = ncolors;
    }
    let mut gens: Vec<Vec<u32>> = Vec::new();
    let mut order: u128 = 1;
    for (cols, ncolors, b) in levels.iter().rev() {
        let target = cols[*b];
        let mut orbit = orbit_of(*b as u32, &gens, n);
        for w in 0..n {
            if cols[w + n] != target || orbit[w] {
                continue;
            }
            let mut next = cols.clone();
            next[*b] = *ncolors;
            next[w + n] = *ncolors;
            if let Some(map) = u.search(next) {
                gens.push(map);
                orbit = orbit_of(*b as u32, &gens, n);
            }
        }
        order *= orbit.iter().filter(|&&x| x).count() as u128;
    }
    PermGroup::with_order(n, gens, order)
}

fn orbit_of(start: u32, gens: &[Vec<u32>], n: usize) -> Vec<bool> {
    let mut seen = vec![false; n];
    seen[start as usize] = true;
    let mut stack = vec![start];
    while let Some(x) = stack.pop() {
        for p in gens {
            let y = p[x as usize];
            if !seen[y as usize] {
                seen[y as usize] = true;
                stack.push(y);
            }
        }
    }
    seen
}
