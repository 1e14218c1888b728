//! The partitioned geometry `P(Γ)`, the bipartite construction `BP(Γ)` and
//! the halving geometry `H(Γ)` at a leaf `(i, j)`, together with the duality
//! correlation of `P(Γ)` and the action induced on the new elements by
//! automorphisms of `Γ`.
//!
//! Element numbering is deterministic: new elements are sorted by
//! `(type, base, tag)`, where `base` is the source element and `tag` is the
//! fibre index (`0` for type `i`, `1` for type `j`) or the parity class id.

use std::collections::HashMap;

use super::leaf::{check_b1, check_b2, residue_graph, truncation_graph};
use crate::error::{Error, Result};
use crate::group::Perm;
use crate::incidence::{ElementId, IncidenceGeometry, Provenance};
use crate::Limits;

/// Name recorded in the provenance of [`p_construction`] outputs.
pub const P_CONSTRUCTION: &str = "P";
/// Name recorded in the provenance of [`bp_construction`] outputs.
pub const BP_CONSTRUCTION: &str = "BP";

/// Verifies the hypotheses shared by both constructions: B1, B2 and
/// residual connectedness, plus the bipartiteness of the `{i, j}` truncation
/// when `bipartite` is given.
fn check_preconditions(g: &IncidenceGeometry, leaf: (usize, usize), bipartite: Option<bool>) -> Result<()> {
    let (i, j) = leaf;
    if g.rank() < 2 || i >= g.rank() || j >= g.rank() || i == j {
        return Err(Error::NotALeaf(i, j));
    }
    if !check_b1(g, leaf)? {
        return Err(Error::PreconditionFailed(format!("B1 fails at ({i},{j})")));
    }
    if !check_b2(g, leaf)? {
        return Err(Error::PreconditionFailed(format!("B2 fails at ({i},{j})")));
    }
    if !g.is_residually_connected(Limits::default().max_flags)? {
        return Err(Error::PreconditionFailed("the geometry is not residually connected".into()));
    }
    if let Some(want) = bipartite {
        let is = truncation_graph(g, leaf)?.parity().is_bipartite();
        if is != want {
            let what = if is { "bipartite" } else { "not bipartite" };
            return Err(Error::PreconditionFailed(format!("the ({i},{j}) truncation is {what}")));
        }
    }
    Ok(())
}

/// Assembles a geometry from `(type, base, tag)` keys and incidences given
/// between keys.
struct Builder {
    keys: Vec<(usize, ElementId, u32)>,
}

impl Builder {
    fn new(mut keys: Vec<(usize, ElementId, u32)>) -> Self {
        keys.sort_unstable();
        Builder { keys }
    }

    fn id(&self, key: (usize, ElementId, u32)) -> ElementId {
        self.keys.binary_search(&key).expect("key of a constructed element") as ElementId
    }

    fn finish(
        self,
        rank: usize,
        pairs: &[(ElementId, ElementId)],
        construction: &str,
        leaf: (usize, usize),
    ) -> Result<IncidenceGeometry> {
        let types = self.keys.iter().map(|k| k.0).collect();
        let provenance = Provenance {
            construction: construction.to_string(),
            leaf,
            base: self.keys.iter().map(|k| k.1).collect(),
            tag: self.keys.iter().map(|k| k.2).collect(),
        };
        IncidenceGeometry::from_parts(rank, types, pairs)?.with_provenance(provenance)
    }
}

/// The partitioned geometry `P(Γ)(i, j)`.
///
/// The `i`-elements are the `i`-elements `p` of `Γ` tagged `0`, the
/// `j`-elements are the same `p` tagged `1`, and every other element `x` is
/// split into one element per parity class `P` of `Γ_x[i, j]`. Incidences:
/// `(p,0) ~ (q,1)` when `p, q` are adjacent in `Γ[i, j]`; `(p,0) ~ (y,P)`
/// when `p ∈ P`; `(q,1) ~ (y,P)` when `q ∈ P̄`; `(x,P) ~ (y,Q)` when
/// `x * y` and `P ∩ Q ≠ ∅`.
///
/// Preconditions (B1, B2, residual connectedness, non-bipartite truncation)
/// are verified unless `force` is set.
pub fn p_construction(g: &IncidenceGeometry, leaf: (usize, usize), force: bool) -> Result<IncidenceGeometry> {
    if !force {
        check_preconditions(g, leaf, Some(false))?;
    }
    let (i, j) = leaf;
    let tg = truncation_graph(g, leaf)?;
    let n = g.len();
    // memb[x]: (vertex element, class id) pairs of Γ_x[i, j], sorted by vertex.
    let mut memb: Vec<Vec<(ElementId, u32)>> = vec![Vec::new(); n];
    let mut partner: Vec<Vec<u32>> = vec![Vec::new(); n];
    let mut keys = Vec::new();
    for &p in &tg.vertices {
        keys.push((i, p, 0));
        keys.push((j, p, 1));
    }
    for x in 0..n as ElementId {
        let t = g.type_of(x);
        if t == i || t == j {
            continue;
        }
        let rg = residue_graph(g, x, leaf)?;
        let pc = rg.parity();
        for c in 0..pc.len() as u32 {
            keys.push((t, x, c));
        }
        memb[x as usize] = rg.vertices.iter().zip(&pc.class_of).map(|(&v, &c)| (v, c)).collect();
        partner[x as usize] = pc.partner;
    }
    let b = Builder::new(keys);
    let mut pairs = Vec::new();
    for (a, c) in tg.graph.edges() {
        let (p, q) = (tg.vertices[a as usize], tg.vertices[c as usize]);
        pairs.push((b.id((i, p, 0)), b.id((j, q, 1))));
        pairs.push((b.id((i, q, 0)), b.id((j, p, 1))));
    }
    for y in 0..n as ElementId {
        let ty = g.type_of(y);
        if ty == i || ty == j {
            continue;
        }
        for &(v, c) in &memb[y as usize] {
            pairs.push((b.id((i, v, 0)), b.id((ty, y, c))));
            pairs.push((b.id((j, v, 1)), b.id((ty, y, partner[y as usize][c as usize]))));
        }
        for &x in g.neighbors(y) {
            let tx = g.type_of(x);
            if x > y || tx == i || tx == j {
                continue;
            }
            let my = &memb[y as usize];
            for &(v, c) in &memb[x as usize] {
                if let Ok(k) = my.binary_search_by_key(&v, |e| e.0) {
                    pairs.push((b.id((tx, x, c)), b.id((ty, y, my[k].1))));
                }
            }
        }
    }
    b.finish(g.rank(), &pairs, P_CONSTRUCTION, leaf)
}

/// The bipartite construction `BP(Γ)(i, j)`.
///
/// The two sides of the bipartite graph `Γ[i, j]` become the `i`- and
/// `j`-elements (the side containing the smallest `i`-element of each
/// component becomes type `i`); adjacency in the graph becomes their
/// incidence, and all other elements and incidences are kept.
///
/// Preconditions (B1, B2, residual connectedness, bipartite truncation)
/// are verified unless `force` is set; the truncation must be bipartite in
/// any case.
pub fn bp_construction(g: &IncidenceGeometry, leaf: (usize, usize), force: bool) -> Result<IncidenceGeometry> {
    if !force {
        check_preconditions(g, leaf, Some(true))?;
    }
    let (i, j) = leaf;
    let tg = truncation_graph(g, leaf)?;
    let pc = tg.parity();
    if !pc.is_bipartite() {
        return Err(Error::NotBipartite);
    }
    // Side 0: the class with the smaller id in its pair (it holds the
    // component's smallest vertex).
    let side = |v: usize| -> u32 {
        let c = pc.class_of[v];
        (c > pc.partner[c as usize]) as u32
    };
    let mut keys = Vec::new();
    let mut vkey = Vec::with_capacity(tg.vertices.len());
    for (v, &p) in tg.vertices.iter().enumerate() {
        let s = side(v);
        let key = (if s == 0 { i } else { j }, p, s);
        keys.push(key);
        vkey.push(key);
    }
    for x in 0..g.len() as ElementId {
        let t = g.type_of(x);
        if t != i && t != j {
            keys.push((t, x, 0));
        }
    }
    let b = Builder::new(keys);
    let mut pairs = Vec::new();
    for (a, c) in tg.graph.edges() {
        pairs.push((b.id(vkey[a as usize]), b.id(vkey[c as usize])));
    }
    for (x, y) in g.incidences() {
        let (tx, ty) = (g.type_of(x), g.type_of(y));
        if tx == j || ty == j || (tx == i && ty == i) {
            continue;
        }
        let key_of = |e: ElementId, t: usize| {
            if t == i {
                vkey[tg.local(e).expect("vertex of the truncation") as usize]
            } else {
                (t, e, 0)
            }
        };
        pairs.push((b.id(key_of(x, tx)), b.id(key_of(y, ty))));
    }
    b.finish(g.rank(), &pairs, BP_CONSTRUCTION, leaf)
}

/// The halving geometry `H(Γ)(i, j)`: `BP(Γ)` when `Γ[i, j]` is bipartite,
/// `P(Γ)` otherwise. With `force`, the leaf conditions are not verified.
pub fn halving_geometry(g: &IncidenceGeometry, leaf: (usize, usize), force: bool) -> Result<IncidenceGeometry> {
    if !force {
        check_preconditions(g, leaf, None)?;
    }
    if truncation_graph(g, leaf)?.parity().is_bipartite() {
        bp_construction(g, leaf, true)
    } else {
        p_construction(g, leaf, true)
    }
}

/// Lookup from `(type, base, tag)` to element id, read from provenance.
fn key_index(h: &IncidenceGeometry) -> Result<(&Provenance, HashMap<(usize, ElementId, u32), ElementId>)> {
    let prov = h
        .provenance()
        .ok_or_else(|| Error::PreconditionFailed("the geometry carries no construction provenance".into()))?;
    let map =
        (0..h.len() as ElementId).map(|x| ((h.type_of(x), prov.base[x as usize], prov.tag[x as usize]), x)).collect();
    Ok((prov, map))
}

/// The duality `α` of a partitioned geometry: `(p,0) ↔ (p,1)` and
/// `(x,P) ↦ (x,P̄)`. It swaps the two leaf types and fixes the others.
pub fn duality_correlation(h: &IncidenceGeometry) -> Result<Perm> {
    let (prov, map) = key_index(h)?;
    if prov.construction != P_CONSTRUCTION {
        return Err(Error::PreconditionFailed("the duality is defined on partitioned geometries only".into()));
    }
    let (i, j) = prov.leaf;
    let mut alpha = vec![0u32; h.len()];
    for x in 0..h.len() as ElementId {
        let t = h.type_of(x);
        let base = prov.base[x as usize];
        alpha[x as usize] = if t == i {
            map[&(j, base, 1)]
        } else if t == j {
            map[&(i, base, 0)]
        } else {
            // P̄ is the class of the fibre-1 neighbours' bases: the element
            // over the same base that is incident with (q, 0) for a q with
            // (q, 1) incident to x.
            let q = h
                .neighbors(x)
                .iter()
                .find(|&&y| h.type_of(y) == j)
                .map(|&y| prov.base[y as usize])
                .ok_or_else(|| Error::PreconditionFailed(format!("element {x} has no leaf neighbour")))?;
            let q0 = map[&(i, q, 0)];
            *h.neighbors(q0)
                .iter()
                .find(|&&y| h.type_of(y) == t && prov.base[y as usize] == base)
                .expect("partner class exists")
        };
    }
    Ok(alpha)
}

/// Whether `map` is a correlation of `g`: a bijection on elements that
/// maps incident pairs to incident pairs and induces a permutation of types.
pub fn is_correlation(g: &IncidenceGeometry, map: &[ElementId]) -> bool {
    if map.len() != g.len() {
        return false;
    }
    let mut seen = vec![false; g.len()];
    let mut type_map = vec![usize::MAX; g.rank()];
    for x in 0..g.len() {
        let y = map[x] as usize;
        if y >= g.len() || seen[y] {
            return false;
        }
        seen[y] = true;
        let (t, u) = (g.type_of(x as ElementId), g.type_of(y as ElementId));
        if type_map[t] == usize::MAX {
            type_map[t] = u;
        } else if type_map[t] != u {
            return false;
        }
    }
    g.num_incidences() == g.incidences().filter(|&(a, b)| g.incident(map[a as usize], map[b as usize])).count()
}

/// The permutation of the elements of a constructed geometry `h` induced by
/// a type-preserving automorphism `perm` of its source geometry.
pub fn induced_action(h: &IncidenceGeometry, perm: &[ElementId]) -> Result<Perm> {
    let (prov, map) = key_index(h)?;
    let (i, j) = prov.leaf;
    let lookup = |key: (usize, ElementId, u32)| {
        map.get(&key)
            .copied()
            .ok_or_else(|| Error::PreconditionFailed("the action does not preserve the construction's elements".into()))
    };
    let image = |b: ElementId| -> Result<ElementId> {
        perm.get(b as usize).copied().ok_or_else(|| Error::PreconditionFailed("action has the wrong degree".into()))
    };
    let mut out = vec![0u32; h.len()];
    for x in 0..h.len() as ElementId {
        let t = h.type_of(x);
        let (base, tag) = (prov.base[x as usize], prov.tag[x as usize]);
        out[x as usize] = if t == i || t == j {
            lookup((t, image(base)?, tag))?
        } else {
            let target = image(base)?;
            if tag == 0 && !map.contains_key(&(t, target, 1)) {
                lookup((t, target, 0))?
            } else {
                // Follow an incident i-element: its image pins down the class.
                let p = h
                    .neighbors(x)
                    .iter()
                    .find(|&&y| h.type_of(y) == i)
                    .ok_or_else(|| Error::PreconditionFailed(format!("element {x} has no leaf neighbour")))?;
                let pt = lookup((i, image(prov.base[*p as usize])?, prov.tag[*p as usize]))?;
                *h.neighbors(pt)
                    .iter()
                    .find(|&&y| h.type_of(y) == t && prov.base[y as usize] == target)
                    .ok_or_else(|| Error::PreconditionFailed("the action does not preserve incidence".into()))?
            }
        };
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn polygon(n: u32) -> IncidenceGeometry {
        let mut pairs = Vec::new();
        for k in 0..n {
            pairs.push((k, n + k));
            pairs.push(((k + 1) % n, n + k));
        }
        let types = (0..2 * n).map(|x| (x >= n) as usize).collect();
        IncidenceGeometry::from_parts(2, types, &pairs).unwrap()
    }

    #[test]
    fn bp_of_a_square_is_a_digon() {
        let h = bp_construction(&polygon(4), (0, 1), false).unwrap();
        assert_eq!(h.type_counts(), vec![2, 2]);
        assert_eq!(h.num_incidences(), 4);
        assert_eq!(h.provenance().unwrap().construction, "BP");
    }

    #[test]
    fn p_of_a_triangle_is_a_hexagon() {
        let h = p_construction(&polygon(3), (0, 1), false).unwrap();
        assert_eq!(h.type_counts(), vec![3, 3]);
        assert!(h.is_connected());
        let d = h.buekenhout_diagram(100).unwrap();
        assert_eq!(d.entry(0, 1).label().unwrap().gonality, Some(6 / 2));
        let alpha = duality_correlation(&h).unwrap();
        assert!(is_correlation(&h, &alpha));
        assert!((0..h.len()).all(|x| alpha[alpha[x] as usize] as usize == x));
    }

    #[test]
    fn wrong_branch_is_rejected() {
        assert!(matches!(p_construction(&polygon(4), (0, 1), false), Err(Error::PreconditionFailed(_))));
        assert!(matches!(bp_construction(&polygon(5), (0, 1), false), Err(Error::PreconditionFailed(_))));
        assert!(matches!(bp_construction(&polygon(5), (0, 1), true), Err(Error::NotBipartite)));
    }

    #[test]
    fn induced_rotation_of_a_triangle() {
        let g = polygon(3);
        let h = p_construction(&g, (0, 1), false).unwrap();
        let rot: Perm = vec![1, 2, 0, 4, 5, 3];
        let act = induced_action(&h, &rot).unwrap();
        assert!(is_correlation(&h, &act));
        assert!((0..h.len() as u32).all(|x| h.type_of(x) == h.type_of(act[x as usize])));
    }
}
