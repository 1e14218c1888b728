//! Computations inside a group given by its right-regular representation:
//! parabolic subgroups, the intersection property, coset geometries, the
//! halving subgroup and the algebraic leaf conditions.
//!
//! Points of a regular group are its elements, point 0 is the identity and
//! generator `g` sends point `x` to `x·g`. A subgroup is stored as the set of
//! points it contains (the orbit of 0 under its generators), a left coset
//! `wH` is the orbit of `w` under the generators of `H`, and a right coset
//! `Hw` is the image of `H` under the left multiplication by `w`.

use super::perm::{compose, orbit, perm_order, Perm, PermGroup};
use super::presentation::Presentation;
use crate::error::{Error, Result};
use crate::incidence::{ElementId, IncidenceGeometry};

/// A compact set of points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct PointSet {
    bits: Vec<u64>,
}

impl PointSet {
    fn new(n: usize) -> Self {
        PointSet { bits: vec![0; n.div_ceil(64)] }
    }

    fn insert(&mut self, x: u32) -> bool {
        let (w, b) = (x as usize / 64, x % 64);
        let fresh = self.bits[w] >> b & 1 == 0;
        self.bits[w] |= 1 << b;
        fresh
    }

    fn contains(&self, x: u32) -> bool {
        self.bits[x as usize / 64] >> (x % 64) & 1 == 1
    }

    fn len(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn intersection_len(&self, other: &PointSet) -> usize {
        self.bits.iter().zip(&other.bits).map(|(a, b)| (a & b).count_ones() as usize).sum()
    }

    fn is_subset(&self, other: &PointSet) -> bool {
        self.bits.iter().zip(&other.bits).all(|(a, b)| a & !b == 0)
    }

    fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        self.bits
            .iter()
            .enumerate()
            .flat_map(|(w, &word)| (0..64u32).filter(move |b| word >> b & 1 == 1).map(move |b| w as u32 * 64 + b))
    }
}

/// Largest order for which a non-regular group is converted to its regular
/// representation on demand.
const MAX_REGULAR_ORDER: usize = 4_000_000;

fn regular(pg: &PermGroup) -> Result<std::borrow::Cow<'_, PermGroup>> {
    if pg.is_regular() {
        Ok(std::borrow::Cow::Borrowed(pg))
    } else {
        Ok(std::borrow::Cow::Owned(pg.to_regular(MAX_REGULAR_ORDER)?))
    }
}

/// Closure of `seeds` under the right action of `gens`: `seeds · ⟨gens⟩`.
fn closure(degree: usize, gens: &[&Perm], seeds: impl IntoIterator<Item = u32>) -> PointSet {
    let mut set = PointSet::new(degree);
    let mut stack: Vec<u32> = Vec::new();
    for s in seeds {
        if set.insert(s) {
            stack.push(s);
        }
    }
    while let Some(x) = stack.pop() {
        for g in gens {
            let y = g[x as usize];
            if set.insert(y) {
                stack.push(y);
            }
        }
    }
    set
}

fn gens_except<'a>(pg: &'a PermGroup, skip: &[usize]) -> Vec<&'a Perm> {
    pg.gens().iter().enumerate().filter(|(k, _)| !skip.contains(k)).map(|(_, g)| g).collect()
}

/// Points of the parabolic subgroup generated by all generators except
/// those in `skip`.
fn parabolic(pg: &PermGroup, skip: &[usize]) -> PointSet {
    closure(pg.degree(), &gens_except(pg, skip), [0])
}

/// Left multiplication by each generator, as permutations of the points.
pub(crate) fn left_multiplications(pg: &PermGroup) -> Vec<Perm> {
    let n = pg.degree();
    let mut parent = vec![(u32::MAX, 0usize); n];
    let mut order = vec![0u32];
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut head = 0;
    while head < order.len() {
        let x = order[head];
        head += 1;
        for (k, g) in pg.gens().iter().enumerate() {
            let y = g[x as usize];
            if !seen[y as usize] {
                seen[y as usize] = true;
                parent[y as usize] = (x, k);
                order.push(y);
            }
        }
    }
    pg.gens()
        .iter()
        .map(|s| {
            let mut l = vec![0u32; n];
            l[0] = s[0];
            for &q in &order[1..] {
                let (p, k) = parent[q as usize];
                l[q as usize] = pg.gens()[k][l[p as usize] as usize];
            }
            l
        })
        .collect()
}

/// Order of the group.
pub fn group_order(pg: &PermGroup) -> u128 {
    pg.order()
}

/// Order of the subgroup generated by the listed generators.
pub fn subgroup_order(pg: &PermGroup, subset: &[usize]) -> Result<u128> {
    pg.subgroup_order(subset)
}

/// The Coxeter matrix: entry `(i, j)` is the order of `g_i g_j`.
pub fn coxeter_matrix(pg: &PermGroup) -> Vec<Vec<u32>> {
    let r = pg.ngens();
    let mut m = vec![vec![1u32; r]; r];
    for i in 0..r {
        for j in i + 1..r {
            let o = perm_order(&compose(&pg.gens()[i], &pg.gens()[j])) as u32;
            m[i][j] = o;
            m[j][i] = o;
        }
    }
    m
}

/// Whether `(i, j)` is a leaf of the Coxeter diagram of `m`: `i` is joined
/// to `j` and to nothing else.
pub fn is_leaf(m: &[Vec<u32>], (i, j): (usize, usize)) -> bool {
    let r = m.len();
    i < r && j < r && i != j && m[i][j] != 2 && (0..r).all(|k| k == i || k == j || m[i][k] == 2)
}

/// Whether `⟨I⟩ ∩ ⟨J⟩ = ⟨I ∩ J⟩` for all sets `I`, `J` of generators, tested
/// by intersecting the element sets of the parabolic subgroups.
pub fn intersection_property(pg: &PermGroup) -> Result<bool> {
    let pg = regular(pg)?;
    let r = pg.ngens();
    if r > 16 {
        return Err(Error::SizeLimitExceeded { what: "rank for intersection property", limit: 16 });
    }
    let sets: Vec<PointSet> = (0u32..1 << r)
        .map(|mask| {
            let gens: Vec<&Perm> = (0..r).filter(|k| mask >> k & 1 == 1).map(|k| &pg.gens()[k]).collect();
            closure(pg.degree(), &gens, [0])
        })
        .collect();
    for a in 0u32..1 << r {
        for b in a + 1..1 << r {
            if a & b == a || a & b == b {
                continue;
            }
            if sets[a as usize].intersection_len(&sets[b as usize]) != sets[(a & b) as usize].len() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Every relator uses generator `i` an even number of times, so that
/// `g_i ↦ 1`, other generators `↦ 0` defines a map onto `Z/2`.
pub fn relator_parity_bipartite(pres: &Presentation, i: usize) -> bool {
    pres.relators.iter().all(|r| r.iter().filter(|&&x| x == i).count() % 2 == 0)
}

/// The coset geometry of a group with respect to its maximal parabolic
/// subgroups `G_t = ⟨g_k : k ≠ t⟩`, together with the action of the group.
#[derive(Clone, Debug)]
pub struct CosetGeometry {
    /// Elements of type `t` are the cosets of `G_t`; two are incident when
    /// they intersect.
    pub geometry: IncidenceGeometry,
    /// `element_of[t][x]` is the type-`t` element containing group element `x`.
    pub element_of: Vec<Vec<ElementId>>,
    /// Permutation of the elements induced by each generator.
    pub action: Vec<Perm>,
}

impl CosetGeometry {
    /// The chamber made of the parabolic subgroups themselves.
    pub fn base_chamber(&self) -> Vec<ElementId> {
        self.element_of.iter().map(|e| e[0]).collect()
    }
}

/// Builds the coset geometry of `pg` (see [`CosetGeometry`]).
pub fn coset_geometry(pg: &PermGroup) -> Result<CosetGeometry> {
    let pg = regular(pg)?;
    let r = pg.ngens();
    let n = pg.degree();
    let mut element_of = vec![vec![u32::MAX; n]; r];
    let mut types = Vec::new();
    for (t, labels) in element_of.iter_mut().enumerate() {
        let gens = gens_except(&pg, &[t]);
        let mut stack = Vec::new();
        for p in 0..n as u32 {
            if labels[p as usize] != u32::MAX {
                continue;
            }
            let id = types.len() as u32;
            types.push(t);
            labels[p as usize] = id;
            stack.push(p);
            while let Some(x) = stack.pop() {
                for g in &gens {
                    let y = g[x as usize];
                    if labels[y as usize] == u32::MAX {
                        labels[y as usize] = id;
                        stack.push(y);
                    }
                }
            }
        }
    }
    let mut pairs: Vec<u64> = Vec::with_capacity(n * r * r.saturating_sub(1) / 2);
    for p in 0..n {
        for t in 0..r {
            for u in t + 1..r {
                pairs.push((element_of[t][p] as u64) << 32 | element_of[u][p] as u64);
            }
        }
    }
    pairs.sort_unstable();
    pairs.dedup();
    let pairs: Vec<(u32, u32)> = pairs.iter().map(|&v| ((v >> 32) as u32, v as u32)).collect();
    let geometry = IncidenceGeometry::from_parts(r, types, &pairs)?;
    let lefts = left_multiplications(&pg);
    let action = lefts
        .iter()
        .map(|l| {
            let mut act = vec![0u32; geometry.len()];
            for labels in &element_of {
                for p in 0..n {
                    act[labels[p] as usize] = labels[l[p] as usize];
                }
            }
            act
        })
        .collect();
    Ok(CosetGeometry { geometry, element_of, action })
}

/// The generators of the halving subgroup at the leaf `(i, j)`:
/// `g_i` is replaced by `g_i g_j g_i`, the others are kept.
pub fn halving_generators(gens: &[Perm], (i, j): (usize, usize)) -> Vec<Perm> {
    let mut out = gens.to_vec();
    out[i] = compose(&compose(&gens[i], &gens[j]), &gens[i]);
    out
}

/// The halving subgroup `H(G)` at the leaf `(i, j)`, in its own regular
/// representation (the orbit of the identity under the new generators).
pub fn halving_group(pg: &PermGroup, (i, j): (usize, usize)) -> Result<PermGroup> {
    let pg = regular(pg)?;
    if !is_leaf(&coxeter_matrix(&pg), (i, j)) {
        return Err(Error::NotALeaf(i, j));
    }
    let gens = halving_generators(pg.gens(), (i, j));
    Ok(restrict_to_orbit_of_identity(pg.degree(), gens))
}

/// Restricts a free action to the orbit of point 0, renumbering its points
/// in increasing order.
pub(crate) fn restrict_to_orbit_of_identity(degree: usize, gens: Vec<Perm>) -> PermGroup {
    let mut pts = orbit(degree, &gens, 0);
    if pts.len() == degree {
        return PermGroup::regular_unchecked(degree, gens);
    }
    pts.sort_unstable();
    let mut local = vec![u32::MAX; degree];
    for (k, &p) in pts.iter().enumerate() {
        local[p as usize] = k as u32;
    }
    let gens = gens.iter().map(|g| pts.iter().map(|&p| local[g[p as usize] as usize]).collect()).collect();
    PermGroup::regular_unchecked(pts.len(), gens)
}

/// Algebraic form of the first leaf condition at `(i, j)`:
/// `G_i ∩ g_i G_i g_i = G_{i,j}`.
pub fn check_b1_algebraic(pg: &PermGroup, (i, j): (usize, usize)) -> Result<bool> {
    let pg = regular(pg)?;
    check_leaf_indices(&pg, (i, j))?;
    let gi = parabolic(&pg, &[i]);
    let gij = parabolic(&pg, &[i, j]);
    let conj: Vec<Perm> = (0..pg.ngens())
        .filter(|&k| k != i)
        .map(|k| compose(&compose(&pg.gens()[i], &pg.gens()[k]), &pg.gens()[i]))
        .collect();
    let conj_refs: Vec<&Perm> = conj.iter().collect();
    let c = closure(pg.degree(), &conj_refs, [0]);
    let inter = gi.intersection_len(&c);
    Ok(gij.is_subset(&gi) && gij.is_subset(&c) && inter == gij.len())
}

/// Algebraic sufficient condition for the second leaf condition at `(i, j)`.
///
/// For the base element `p = G_i`, the base element `x = G_k` of any type
/// `k ∉ {i, j}` and `w ∈ G_k`, the point `wG_i` of `x` is adjacent to `p` in
/// the `{i, j}`-truncation iff `w ∈ G_i g_i G_i`, and adjacent through a
/// `j`-element incident with `x` iff `w ∈ G_{i,k} g_i G_i`. The check
/// requires the first condition to hold these to coincide on `G_k`, and every
/// `j`-element through the base edge to have both of its points in the
/// `k`-elements it meets. The group is assumed to act flag-transitively on
/// its coset geometry with the intersection property; `false` means the
/// check is inconclusive.
pub fn check_b2_algebraic_sufficient(pg: &PermGroup, (i, j): (usize, usize)) -> Result<bool> {
    let pg = regular(pg)?;
    check_leaf_indices(&pg, (i, j))?;
    if !check_b1_algebraic(&pg, (i, j))? {
        return Ok(false);
    }
    let n = pg.degree();
    let gi_gens = gens_except(&pg, &[i]);
    let gi = parabolic(&pg, &[i]);
    let gj = parabolic(&pg, &[j]);
    let rho = &pg.gens()[i];
    let left_rho = &left_multiplications(&pg)[i];
    let double = closure(n, &gi_gens, gi.iter().map(|x| rho[x as usize]));
    for k in (0..pg.ngens()).filter(|&k| k != i && k != j) {
        let gk_gens = gens_except(&pg, &[k]);
        // Both points of the base j-element lie in every k-element it meets.
        let gi_gk = closure(n, &gk_gens, gi.iter());
        let rho_gi_gk = closure(n, &gk_gens, gi.iter().map(|x| left_rho[x as usize]));
        if !gj.is_subset(&gi_gk) || !gj.is_subset(&rho_gi_gk) {
            return Ok(false);
        }
        let gk = parabolic(&pg, &[k]);
        let gik = parabolic(&pg, &[i, k]);
        let inside = closure(n, &gi_gens, gik.iter().map(|x| rho[x as usize]));
        if gk.iter().any(|w| double.contains(w) && !inside.contains(w)) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether `g_i ↦ h_i` extends to an isomorphism between the two groups,
/// checked by walking both Cayley graphs in step.
pub fn generators_correspond(a: &PermGroup, b: &PermGroup) -> Result<bool> {
    let (a, b) = (regular(a)?, regular(b)?);
    if a.ngens() != b.ngens() || a.degree() != b.degree() {
        return Ok(false);
    }
    let n = a.degree();
    let mut map = vec![u32::MAX; n];
    let mut used = vec![false; n];
    map[0] = 0;
    used[0] = true;
    let mut stack = vec![0u32];
    while let Some(x) = stack.pop() {
        let y = map[x as usize];
        for (ga, gb) in a.gens().iter().zip(b.gens()) {
            let (xa, yb) = (ga[x as usize], gb[y as usize]);
            if map[xa as usize] == u32::MAX {
                if used[yb as usize] {
                    return Ok(false);
                }
                map[xa as usize] = yb;
                used[yb as usize] = true;
                stack.push(xa);
            } else if map[xa as usize] != yb {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn check_leaf_indices(pg: &PermGroup, (i, j): (usize, usize)) -> Result<()> {
    if i >= pg.ngens() || j >= pg.ngens() || i == j {
        return Err(Error::NotALeaf(i, j));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{todd_coxeter, Presentation};

    fn coxeter_group(m: &[Vec<u32>], extra: &[Vec<usize>]) -> PermGroup {
        let mut p = Presentation::coxeter(m).unwrap();
        for r in extra {
            p = p.with_relator(r.clone()).unwrap();
        }
        PermGroup::from_coset_table(&todd_coxeter(&p, &[], 1_000_000).unwrap()).unwrap()
    }

    fn cube() -> PermGroup {
        coxeter_group(&[vec![1, 4, 2], vec![4, 1, 3], vec![2, 3, 1]], &[])
    }

    #[test]
    fn cube_group_basics() {
        let g = cube();
        assert_eq!(g.order(), 48);
        assert_eq!(coxeter_matrix(&g), vec![vec![1, 4, 2], vec![4, 1, 3], vec![2, 3, 1]]);
        assert!(intersection_property(&g).unwrap());
        assert_eq!(subgroup_order(&g, &[1, 2]).unwrap(), 6);
    }

    #[test]
    fn cube_coset_geometry_counts() {
        let cg = coset_geometry(&cube()).unwrap();
        assert_eq!(cg.geometry.type_counts(), vec![8, 12, 6]);
        assert_eq!(cg.geometry.chambers(1000).unwrap().len(), 48);
        // The action preserves incidence.
        for act in &cg.action {
            for (a, b) in cg.geometry.incidences() {
                assert!(cg.geometry.incident(act[a as usize], act[b as usize]));
            }
        }
    }

    #[test]
    fn left_multiplication_commutes_with_right() {
        let g = cube();
        let lefts = left_multiplications(&g);
        for l in &lefts {
            for r in g.gens() {
                assert_eq!(compose(l, r), compose(r, l));
            }
        }
    }

    #[test]
    fn halving_cube_gives_tetrahedron_group() {
        let h = halving_group(&cube(), (0, 1)).unwrap();
        assert_eq!(h.order(), 24);
        assert_eq!(coxeter_matrix(&h), vec![vec![1, 2, 3], vec![2, 1, 3], vec![3, 3, 1]]);
        assert!(matches!(halving_group(&cube(), (1, 2)), Err(Error::NotALeaf(1, 2))));
    }

    #[test]
    fn leaf_detection() {
        let m = vec![vec![1, 4, 2], vec![4, 1, 3], vec![2, 3, 1]];
        assert!(is_leaf(&m, (0, 1)));
        assert!(is_leaf(&m, (2, 1)));
        assert!(!is_leaf(&m, (1, 0)));
        assert!(!is_leaf(&m, (0, 2)));
    }

    #[test]
    fn generator_correspondence() {
        let g = cube();
        assert!(generators_correspond(&g, &g).unwrap());
        let swapped =
            PermGroup::new(g.degree(), vec![g.gens()[2].clone(), g.gens()[1].clone(), g.gens()[0].clone()]).unwrap();
        assert!(!generators_correspond(&g, &swapped).unwrap());
    }

    #[test]
    fn parity() {
        let p = Presentation::coxeter(&[vec![1, 4, 2], vec![4, 1, 3], vec![2, 3, 1]]).unwrap();
        assert!(relator_parity_bipartite(&p, 0));
        let q = p.with_relator(vec![0, 1, 2, 0, 1, 2, 0, 1, 2]).unwrap();
        assert!(!relator_parity_bipartite(&q, 0));
    }
}
