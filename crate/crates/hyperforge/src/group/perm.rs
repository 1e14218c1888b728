//! Permutation groups given by generators.
//!
//! Permutations are image vectors: `p[x]` is the image of point `x`, and
//! products are read left to right (`x^(ab) = (x^a)^b`).

use super::todd_coxeter::CosetTable;
use crate::error::{Error, Result};

/// A permutation as an image vector.
pub type Perm = Vec<u32>;

/// Largest degree for which the generic stabiliser chain is attempted.
const MAX_CHAIN_DEGREE: usize = 1 << 14;

/// A permutation group with its generating list and exact order.
///
/// A group is *regular* when it acts simply transitively; then points are
/// group elements, point 0 is the identity and generator `g` acts by right
/// multiplication. Regular groups come from coset enumeration over the
/// trivial subgroup and support the subgroup computations in this module
/// family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermGroup {
    degree: usize,
    gens: Vec<Perm>,
    order: u128,
    regular: bool,
}

impl PermGroup {
    /// A group generated by `gens` acting on `0..degree`; the order is
    /// computed with a stabiliser chain.
    pub fn new(degree: usize, gens: Vec<Perm>) -> Result<Self> {
        for p in &gens {
            check_perm(degree, p)?;
        }
        let order = schreier_sims_order(degree, &gens)?;
        let regular = order == degree as u128 && is_transitive(degree, &gens);
        Ok(PermGroup { degree, gens, order, regular })
    }

    /// A group whose order is already known (for instance from a search).
    pub fn with_order(degree: usize, gens: Vec<Perm>, order: u128) -> Result<Self> {
        for p in &gens {
            check_perm(degree, p)?;
        }
        let regular = order == degree as u128 && is_transitive(degree, &gens);
        Ok(PermGroup { degree, gens, order, regular })
    }

    /// A group known to act regularly.
    pub(crate) fn regular_unchecked(degree: usize, gens: Vec<Perm>) -> Self {
        PermGroup { degree, gens, order: degree as u128, regular: true }
    }

    /// The permutation group induced on the cosets of a coset table. When
    /// the table was enumerated over the trivial subgroup the result is the
    /// right-regular representation.
    pub fn from_coset_table(t: &CosetTable) -> Result<Self> {
        let gens: Vec<Perm> = (0..t.ngens()).map(|x| t.column(x)).collect();
        if t.is_regular() {
            Ok(Self::regular_unchecked(t.len(), gens))
        } else {
            Self::new(t.len(), gens)
        }
    }

    /// The same group with its generators listed in the order `order`
    /// (`order[t]` is the old index of the new generator `t`).
    pub fn reorder_generators(&self, order: &[usize]) -> Result<PermGroup> {
        let mut seen = vec![false; self.ngens()];
        if order.len() != self.ngens()
            || order.iter().any(|&k| k >= seen.len() || std::mem::replace(&mut seen[k], true))
        {
            return Err(Error::InvalidPresentation("generator order is not a permutation".into()));
        }
        let gens = order.iter().map(|&k| self.gens[k].clone()).collect();
        Ok(PermGroup { degree: self.degree, gens, order: self.order, regular: self.regular })
    }

    /// Number of points.
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Generators, in order.
    pub fn gens(&self) -> &[Perm] {
        &self.gens
    }

    /// Number of generators.
    pub fn ngens(&self) -> usize {
        self.gens.len()
    }

    /// Group order.
    pub fn order(&self) -> u128 {
        self.order
    }

    /// Whether the action is regular.
    pub fn is_regular(&self) -> bool {
        self.regular
    }

    /// Order of the subgroup generated by the generators listed in `subset`.
    pub fn subgroup_order(&self, subset: &[usize]) -> Result<u128> {
        if let Some(&bad) = subset.iter().find(|&&i| i >= self.ngens()) {
            return Err(Error::InvalidPresentation(format!("generator {bad} out of range")));
        }
        let gens: Vec<Perm> = subset.iter().map(|&i| self.gens[i].clone()).collect();
        if self.regular {
            // Subgroups of a regular group act freely: order = orbit length.
            Ok(orbit(self.degree, &gens, 0).len() as u128)
        } else {
            schreier_sims_order(self.degree, &gens)
        }
    }

    /// The regular representation of this group: itself if already
    /// regular, otherwise the action on its own elements by right
    /// multiplication, built by breadth-first search (at most `max_order`
    /// elements).
    pub fn to_regular(&self, max_order: usize) -> Result<PermGroup> {
        if self.regular {
            return Ok(self.clone());
        }
        if self.order > max_order as u128 {
            return Err(Error::SizeLimitExceeded { what: "group order for regular representation", limit: max_order });
        }
        let identity: Perm = (0..self.degree as u32).collect();
        let mut index = std::collections::HashMap::new();
        let mut elements = vec![identity.clone()];
        index.insert(identity, 0u32);
        let mut images: Vec<Vec<u32>> = vec![Vec::new(); self.ngens()];
        let mut head = 0;
        while head < elements.len() {
            for (k, g) in self.gens.iter().enumerate() {
                let prod = compose(&elements[head], g);
                let id = match index.get(&prod) {
                    Some(&id) => id,
                    None => {
                        let id = elements.len() as u32;
                        index.insert(prod.clone(), id);
                        elements.push(prod);
                        id
                    }
                };
                images[k].push(id);
            }
            head += 1;
        }
        Ok(PermGroup::regular_unchecked(elements.len(), images))
    }
}

/// Checks that `p` is a permutation of `0..degree`.
pub fn check_perm(degree: usize, p: &[u32]) -> Result<()> {
    if p.len() != degree {
        return Err(Error::InvalidPresentation(format!("permutation has length {} instead of {degree}", p.len())));
    }
    let mut seen = vec![false; degree];
    for &x in p {
        if x as usize >= degree || seen[x as usize] {
            return Err(Error::InvalidPresentation("image vector is not a permutation".into()));
        }
        seen[x as usize] = true;
    }
    Ok(())
}

/// `a` followed by `b`.
pub fn compose(a: &[u32], b: &[u32]) -> Perm {
    a.iter().map(|&x| b[x as usize]).collect()
}

/// The inverse permutation.
pub fn invert(a: &[u32]) -> Perm {
    let mut inv = vec![0u32; a.len()];
    for (x, &y) in a.iter().enumerate() {
        inv[y as usize] = x as u32;
    }
    inv
}

/// Order of a permutation (least common multiple of its cycle lengths).
pub fn perm_order(p: &[u32]) -> u128 {
    let mut seen = vec![false; p.len()];
    let mut order: u128 = 1;
    for start in 0..p.len() {
        if seen[start] {
            continue;
        }
        let mut len: u128 = 0;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = p[x] as usize;
            len += 1;
        }
        order = lcm(order, len);
    }
    order
}

fn gcd(a: u128, b: u128) -> u128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: u128, b: u128) -> u128 {
    a / gcd(a, b) * b
}

/// Points reachable from `start` under `gens`, in discovery order.
pub fn orbit(degree: usize, gens: &[Perm], start: u32) -> Vec<u32> {
    let mut seen = vec![false; degree];
    seen[start as usize] = true;
    let mut out = vec![start];
    let mut head = 0;
    while head < out.len() {
        let x = out[head];
        head += 1;
        for g in gens {
            let y = g[x as usize];
            if !seen[y as usize] {
                seen[y as usize] = true;
                out.push(y);
            }
        }
    }
    out
}

fn is_transitive(degree: usize, gens: &[Perm]) -> bool {
    degree == 0 || orbit(degree, gens, 0).len() == degree
}

struct Level {
    base: u32,
    gens: Vec<Perm>,
    /// `reps[b]` maps the base point to `b`, when `b` is in the orbit.
    reps: Vec<Option<Perm>>,
    orbit: Vec<u32>,
}

impl Level {
    fn new(degree: usize, base: u32) -> Self {
        let mut reps = vec![None; degree];
        reps[base as usize] = Some((0..degree as u32).collect());
        Level { base, gens: Vec::new(), reps, orbit: vec![base] }
    }

    fn rebuild(&mut self) {
        let degree = self.reps.len();
        self.reps = vec![None; degree];
        self.reps[self.base as usize] = Some((0..degree as u32).collect());
        self.orbit = vec![self.base];
        let mut head = 0;
        while head < self.orbit.len() {
            let x = self.orbit[head];
            head += 1;
            for g in &self.gens {
                let y = g[x as usize];
                if self.reps[y as usize].is_none() {
                    let rep = compose(self.reps[x as usize].as_ref().unwrap(), g);
                    self.reps[y as usize] = Some(rep);
                    self.orbit.push(y);
                }
            }
        }
    }
}

/// Sifts `g` through levels `from..`; returns the residue and the level at
/// which sifting stopped (`levels.len()` when it went through).
fn strip(levels: &[Level], from: usize, mut g: Perm) -> (Perm, usize) {
    for (i, lvl) in levels.iter().enumerate().skip(from) {
        let b = g[lvl.base as usize];
        match &lvl.reps[b as usize] {
            None => return (g, i),
            Some(u) => g = compose(&g, &invert(u)),
        }
    }
    let n = levels.len();
    (g, n)
}

fn is_identity(p: &[u32]) -> bool {
    p.iter().enumerate().all(|(i, &x)| i as u32 == x)
}

fn moved_point(p: &[u32]) -> Option<u32> {
    p.iter().enumerate().find(|(i, &x)| *i as u32 != x).map(|(i, _)| i as u32)
}

/// Order of the group generated by `gens`, via the deterministic
/// Schreier–Sims algorithm.
pub fn schreier_sims_order(degree: usize, gens: &[Perm]) -> Result<u128> {
    let gens: Vec<Perm> = gens.iter().filter(|g| !is_identity(g)).cloned().collect();
    if gens.is_empty() {
        return Ok(1);
    }
    if degree > MAX_CHAIN_DEGREE {
        return Err(Error::SizeLimitExceeded { what: "degree for stabiliser chain", limit: MAX_CHAIN_DEGREE });
    }
    let mut levels: Vec<Level> = Vec::new();
    // Initial base: one moved point per generator not fixing the base so far.
    for g in &gens {
        if levels.iter().all(|l| g[l.base as usize] == l.base) {
            levels.push(Level::new(degree, moved_point(g).unwrap()));
        }
    }
    for l in 0..levels.len() {
        let fixes_prefix = |g: &Perm| levels[..l].iter().all(|lv| g[lv.base as usize] == lv.base);
        let sel: Vec<Perm> = gens.iter().filter(|g| fixes_prefix(g)).cloned().collect();
        levels[l].gens = sel;
        levels[l].rebuild();
    }
    let mut i = levels.len();
    while i >= 1 {
        let li = i - 1;
        let mut restart = None;
        'outer: for oi in 0..levels[li].orbit.len() {
            let beta = levels[li].orbit[oi];
            for gi in 0..levels[li].gens.len() {
                let x = &levels[li].gens[gi];
                let u_beta = levels[li].reps[beta as usize].as_ref().unwrap();
                let img = x[beta as usize];
                let u_img = levels[li].reps[img as usize].as_ref().unwrap();
                let h = compose(&compose(u_beta, x), &invert(u_img));
                if is_identity(&h) {
                    continue;
                }
                let (y, j) = strip(&levels, li + 1, h);
                if j < levels.len() || !is_identity(&y) {
                    if j == levels.len() {
                        levels.push(Level::new(degree, moved_point(&y).unwrap()));
                    }
                    for lvl in levels.iter_mut().take(j + 1).skip(li + 1) {
                        lvl.gens.push(y.clone());
                        lvl.rebuild();
                    }
                    restart = Some(j + 1);
                    break 'outer;
                }
            }
        }
        match restart {
            Some(j) => i = j,
            None => i -= 1,
        }
    }
    Ok(levels.iter().map(|l| l.orbit.len() as u128).product())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: u32) -> Perm {
        (0..n).map(|x| (x + 1) % n).collect()
    }

    fn transposition(n: u32, a: u32, b: u32) -> Perm {
        (0..n)
            .map(|x| {
                if x == a {
                    b
                } else if x == b {
                    a
                } else {
                    x
                }
            })
            .collect()
    }

    #[test]
    fn symmetric_groups() {
        for n in 2..8u32 {
            let g = PermGroup::new(n as usize, vec![cycle(n), transposition(n, 0, 1)]).unwrap();
            let fact: u128 = (1..=n as u128).product();
            assert_eq!(g.order(), fact);
        }
    }

    #[test]
    fn cyclic_and_trivial() {
        assert_eq!(PermGroup::new(7, vec![cycle(7)]).unwrap().order(), 7);
        assert!(PermGroup::new(7, vec![cycle(7)]).unwrap().is_regular());
        assert_eq!(PermGroup::new(3, vec![]).unwrap().order(), 1);
    }

    #[test]
    fn regular_representation() {
        let g = PermGroup::new(4, vec![cycle(4), transposition(4, 0, 1)]).unwrap();
        let r = g.to_regular(100).unwrap();
        assert_eq!(r.degree(), 24);
        assert!(r.is_regular());
        assert_eq!(r.subgroup_order(&[0]).unwrap(), 4);
        assert_eq!(g.subgroup_order(&[0]).unwrap(), 4);
    }

    #[test]
    fn perm_orders() {
        assert_eq!(perm_order(&[1, 0, 3, 4, 2]), 6);
        assert_eq!(perm_order(&[0, 1]), 1);
    }

    #[test]
    fn rejects_non_permutations() {
        assert!(PermGroup::new(3, vec![vec![0, 0, 1]]).is_err());
        assert!(PermGroup::new(3, vec![vec![0, 1]]).is_err());
    }
}
