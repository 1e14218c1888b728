//! Independent oracles: geometries written down directly from their
//! combinatorial description, never through the group machinery.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use hyperforge::group::{regular_group, PermGroup};
use hyperforge::{IncidenceGeometry, Limits, Presentation};

/// A geometry whose elements are vertex sets: element `x` of type `t` is
/// incident with element `y` of another type when one vertex set contains
/// the other. Elements with equal type and vertex set are merged.
pub fn containment_geometry(rank: usize, elements: Vec<(usize, BTreeSet<usize>)>) -> IncidenceGeometry {
    let mut uniq: BTreeMap<(usize, BTreeSet<usize>), ()> = BTreeMap::new();
    for e in elements {
        uniq.insert(e, ());
    }
    let els: Vec<(usize, BTreeSet<usize>)> = uniq.into_keys().collect();
    let types: Vec<usize> = els.iter().map(|e| e.0).collect();
    let mut pairs = Vec::new();
    for (a, (ta, sa)) in els.iter().enumerate() {
        for (b, (tb, sb)) in els.iter().enumerate().skip(a + 1) {
            if ta != tb && (sa.is_subset(sb) || sb.is_subset(sa)) {
                pairs.push((a as u32, b as u32));
            }
        }
    }
    IncidenceGeometry::from_parts(rank, types, &pairs).expect("containment geometries are valid")
}

/// Faces of the `n`-cube `{0,1}^n` of dimensions `0..n` (the cube itself
/// excluded), vertices encoded as bit masks.
pub fn cube_faces(n: usize) -> Vec<(usize, BTreeSet<usize>)> {
    let mut out = Vec::new();
    for dirs in 0usize..(1 << n) {
        let d = dirs.count_ones() as usize;
        if d == n {
            continue;
        }
        for base in 0usize..(1 << n) {
            if base & dirs != 0 {
                continue;
            }
            let set: BTreeSet<usize> = (0usize..(1 << n)).filter(|s| s & !dirs == 0).map(|s| base | s).collect();
            out.push((d, set));
        }
    }
    out
}

/// The 3-cube: 8 vertices, 12 edges, 6 faces.
pub fn cube() -> IncidenceGeometry {
    containment_geometry(3, cube_faces(3))
}

/// The tetrahedron: vertices, edges (pairs) and faces (triples) of a
/// 4-set.
pub fn tetrahedron() -> IncidenceGeometry {
    let mut els = Vec::new();
    for mask in 1usize..16 {
        let set: BTreeSet<usize> = (0..4).filter(|b| mask >> b & 1 == 1).collect();
        if set.len() < 4 {
            els.push((set.len() - 1, set));
        }
    }
    containment_geometry(3, els)
}

/// The hemicube: the cube modulo the central symmetry (4 vertices, 6
/// edges, 3 faces). An element is a pair of antipodal cube faces; two
/// elements are incident when some representatives are.
pub fn hemicube() -> IncidenceGeometry {
    let faces = cube_faces(3);
    let antipode = |set: &BTreeSet<usize>| -> BTreeSet<usize> { set.iter().map(|v| 7 - v).collect() };
    let mut classes: Vec<(usize, BTreeSet<usize>)> =
        faces.iter().map(|(t, set)| (*t, set.clone().min(antipode(set)))).collect();
    classes.sort();
    classes.dedup();
    let id = |t: usize, set: &BTreeSet<usize>| -> u32 {
        let key = (t, set.clone().min(antipode(set)));
        classes.binary_search(&key).unwrap() as u32
    };
    let mut pairs = Vec::new();
    for (ta, sa) in &faces {
        for (tb, sb) in &faces {
            if ta < tb && sa.is_subset(sb) {
                pairs.push((id(*ta, sa), id(*tb, sb)));
            }
        }
    }
    IncidenceGeometry::from_parts(3, classes.iter().map(|c| c.0).collect(), &pairs).unwrap()
}

/// The square pyramid as a rank-3 incidence system: apex 4, base 0..4;
/// eight edges; four triangles and the square.
pub fn square_pyramid() -> IncidenceGeometry {
    let mut els: Vec<(usize, BTreeSet<usize>)> = (0..5).map(|v| (0, BTreeSet::from([v]))).collect();
    for i in 0..4 {
        els.push((1, BTreeSet::from([i, (i + 1) % 4])));
        els.push((1, BTreeSet::from([i, 4])));
        els.push((2, BTreeSet::from([i, (i + 1) % 4, 4])));
    }
    els.push((2, BTreeSet::from([0, 1, 2, 3])));
    containment_geometry(3, els)
}

/// A `p`-gon as a rank-2 geometry: points `0..p`, lines `p..2p`.
pub fn polygon(p: usize) -> IncidenceGeometry {
    let pairs: Vec<(u32, u32)> =
        (0..p).flat_map(|i| [(i as u32, (p + i) as u32), (((i + 1) % p) as u32, (p + i) as u32)]).collect();
    IncidenceGeometry::from_parts(2, (0..2 * p).map(|x| x / p).collect(), &pairs).unwrap()
}

/// Canonical representative of a point of `Z^n` modulo the lattice
/// generated by all signed permutations of `(s^k, 0^{n-k})`.
pub fn reduce(v: &[i64], k: usize, s: i64) -> Vec<i64> {
    let n = v.len();
    if k == 1 {
        return v.iter().map(|x| x.rem_euclid(s)).collect();
    }
    // Modulo 2s the lattice contributes s·y for the vectors y in {0,1}^n
    // with an even number of ones (k = 2) or y ∈ {0, 1^n} (k = n).
    let base: Vec<i64> = v.iter().map(|x| x.rem_euclid(2 * s)).collect();
    let shifts: Vec<u32> = (0u32..(1 << n))
        .filter(|y| if k == 2 { y.count_ones() % 2 == 0 } else { *y == 0 || *y == (1 << n) - 1 })
        .collect();
    shifts
        .into_iter()
        .map(|y| (0..n).map(|i| (base[i] + if y >> i & 1 == 1 { s } else { 0 }).rem_euclid(2 * s)).collect())
        .min()
        .unwrap()
}

/// The cubic toroid `{4,3^{n-2},4}_(s^k,0^{n-k})` written down as a quotient
/// of the cubical tessellation: faces of every dimension are vertex sets of
/// translated unit cubes, modulo the lattice. Faces are determined by their
/// vertex sets only when no lattice vector has length 2, so `(k, s) = (1, 2)`
/// is out of range.
pub fn torus(n: usize, k: usize, s: usize) -> IncidenceGeometry {
    assert!(!(k == 1 && s == 2), "faces are not determined by their vertices");
    let s = s as i64;
    let side = if k == 1 { s } else { 2 * s };
    let mut points: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut idx = vec![0i64; n];
    loop {
        points.insert(reduce(&idx, k, s));
        let mut d = 0;
        while d < n {
            idx[d] += 1;
            if idx[d] < side {
                break;
            }
            idx[d] = 0;
            d += 1;
        }
        if d == n {
            break;
        }
    }
    let id: BTreeMap<Vec<i64>, usize> = points.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let mut els = Vec::new();
    for p in &points {
        for dirs in 0usize..(1 << n) {
            let set: BTreeSet<usize> = (0usize..(1 << n))
                .filter(|m| m & !dirs == 0)
                .map(|m| {
                    let q: Vec<i64> = (0..n).map(|i| p[i] + (m >> i & 1) as i64).collect();
                    id[&reduce(&q, k, s)]
                })
                .collect();
            els.push((dirs.count_ones() as usize, set));
        }
    }
    containment_geometry(n + 1, els)
}

/// The regular representation of a presented group.
pub fn group(p: &Presentation) -> PermGroup {
    regular_group(p, &Limits::default()).expect("group enumerates")
}

/// The Coxeter matrix of a string diagram with the given labels.
pub fn string_matrix(labels: &[u32]) -> Vec<Vec<u32>> {
    let n = labels.len() + 1;
    let mut m = vec![vec![2; n]; n];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 1;
    }
    for (i, &l) in labels.iter().enumerate() {
        m[i][i + 1] = l;
        m[i + 1][i] = l;
    }
    m
}

/// The hemicube group `[4,3]` with `(g0 g1 g2)^3`.
pub fn hemicube_presentation() -> Presentation {
    Presentation::coxeter(&string_matrix(&[4, 3])).unwrap().with_relator([0, 1, 2].repeat(3)).unwrap()
}

/// Lengths of a shortest cycle and of a shortest even cycle strictly
/// between the girth and twice the girth, found by enumerating simple
/// cycles of a small graph given as adjacency lists.
pub fn cycle_lengths(adj: &[Vec<u32>]) -> (Option<u32>, Option<u32>) {
    fn walk(adj: &[Vec<u32>], start: u32, v: u32, len: u32, on: &mut Vec<bool>, out: &mut BTreeSet<u32>) {
        for &w in &adj[v as usize] {
            if w == start && len >= 3 {
                out.insert(len);
            } else if w > start && !on[w as usize] {
                on[w as usize] = true;
                walk(adj, start, w, len + 1, on, out);
                on[w as usize] = false;
            }
        }
    }
    let mut lengths = BTreeSet::new();
    for s in 0..adj.len() as u32 {
        let mut on = vec![false; adj.len()];
        on[s as usize] = true;
        walk(adj, s, s, 1, &mut on, &mut lengths);
    }
    let girth = lengths.iter().next().copied();
    let even = girth.and_then(|g| lengths.iter().copied().find(|&l| l % 2 == 0 && l > g && l < 2 * g));
    (girth, even)
}

/// Girth of the incidence graph of a geometry by breadth-first search from
/// every element; half of it is the gonality of a rank-2 geometry.
pub fn incidence_girth(g: &IncidenceGeometry) -> Option<u32> {
    let n = g.len();
    let mut best: Option<u32> = None;
    for root in 0..n as u32 {
        let mut dist = vec![u32::MAX; n];
        let mut parent = vec![u32::MAX; n];
        dist[root as usize] = 0;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                if dist[w as usize] == u32::MAX {
                    dist[w as usize] = dist[u as usize] + 1;
                    parent[w as usize] = u;
                    queue.push_back(w);
                } else if parent[u as usize] != w {
                    let c = dist[u as usize] + dist[w as usize] + 1;
                    best = Some(best.map_or(c, |b| b.min(c)));
                }
            }
        }
    }
    best
}

/// The type-`t` neighbours of element `x`, mapped to their source elements
/// through the provenance of a constructed geometry.
pub fn source_neighbours(h: &IncidenceGeometry, x: u32, t: usize) -> BTreeSet<u32> {
    let base = &h.provenance().expect("constructed geometry").base;
    h.neighbors(x).iter().filter(|&&y| h.type_of(y) == t).map(|&y| base[y as usize]).collect()
}

/// Which residue law of the partitioned geometry a flag exercised.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ResidueLaw {
    /// The flag holds an element of a leaf type.
    LeafType,
    /// The flag has cotype exactly the leaf.
    Neighbourhood,
    /// The flag has no leaf-type element and misses another type as well.
    Halving,
    /// The empty flag.
    Whole,
}

/// Checks the residue of `flag` in `h = P(Γ)(0, 1)` against an independent
/// construction from `Γ`, returning the law used and whether the two
/// geometries are isomorphic.
///
/// * With `(p, 0)` or `(q, 1)` in the flag, the residue is the residue of
///   `Γ` at the source elements, where `(q, 1)` alone stands for `q` and
///   both together stand for `p` and the edge joining `p` and `q`.
/// * With cotype `{0, 1}`, it is the partitioned neighbourhood geometry of
///   the `{0, 1}` residue graph at the common vertex class of the flag.
/// * Otherwise it is the halving geometry of the residue of `Γ` at the
///   source elements.
pub fn p_residue_law(gamma: &IncidenceGeometry, h: &IncidenceGeometry, flag: &[u32]) -> (ResidueLaw, bool) {
    use hyperforge::constructions::{halving_geometry, partitioned_neighborhood_geometry, Graph};
    use hyperforge::incidence::isomorphic;
    let base = &h.provenance().expect("constructed geometry").base;
    let residue = h.residue(flag).unwrap().geometry;
    let point = flag.iter().find(|&&x| h.type_of(x) == 0).map(|&x| base[x as usize]);
    let line = flag.iter().find(|&&x| h.type_of(x) == 1).map(|&x| base[x as usize]);
    let others: Vec<u32> = flag.iter().filter(|&&x| h.type_of(x) > 1).copied().collect();
    let mut f: Vec<u32> = others.iter().map(|&x| base[x as usize]).collect();
    match (point, line) {
        (None, None) if others.is_empty() => return (ResidueLaw::Whole, isomorphic(&residue, h).unwrap()),
        (None, None) => {}
        (Some(p), Some(q)) => {
            let edges: Vec<u32> = gamma.shadow(p, 1).into_iter().filter(|e| gamma.incident(*e, q)).collect();
            assert_eq!(edges.len(), 1, "adjacent vertices share one edge");
            f.extend([p, edges[0]]);
        }
        (Some(p), None) => f.push(p),
        (None, Some(q)) => f.push(q),
    }
    if point.is_some() || line.is_some() {
        let expected = gamma.residue(&f).unwrap().geometry;
        return (ResidueLaw::LeafType, isomorphic(&residue, &expected).unwrap());
    }
    let sub = gamma.residue(&f).unwrap();
    if sub.types == [0, 1] {
        // Vertices of the residue graph lying in every class of the flag.
        let mut common: Option<BTreeSet<u32>> = None;
        for &x in &others {
            let px = source_neighbours(h, x, 0);
            common = Some(match common {
                None => px,
                Some(c) => c.intersection(&px).copied().collect(),
            });
        }
        let common = common.unwrap();
        let r = &sub.geometry;
        let verts = r.elements_of_type(0);
        let local = |x: u32| verts.binary_search(&x).unwrap() as u32;
        let edges: Vec<(u32, u32)> = r
            .elements_of_type(1)
            .into_iter()
            .map(|e| {
                let ends = r.shadow(e, 0);
                (local(ends[0]), local(ends[1]))
            })
            .collect();
        let graph = Graph::new(verts.len(), &edges).unwrap();
        let pset: Vec<u32> =
            verts.iter().filter(|&&v| common.contains(&sub.elements[v as usize])).map(|&v| local(v)).collect();
        let expected = partitioned_neighborhood_geometry(&graph, &pset).unwrap();
        return (ResidueLaw::Neighbourhood, isomorphic(&residue, &expected).unwrap());
    }
    let expected = halving_geometry(&sub.geometry, (0, 1), true).unwrap();
    (ResidueLaw::Halving, isomorphic(&residue, &expected).unwrap())
}
