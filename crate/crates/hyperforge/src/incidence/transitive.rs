//! Chamber-transitivity of a group acting on a geometry.

use super::{automorphism_group, ElementId, IncidenceGeometry};
use crate::error::{Error, Result};

impl IncidenceGeometry {
    /// Whether `perm` is a type-preserving automorphism: a bijection on
    /// elements that keeps types and maps incident pairs to incident pairs.
    pub fn is_automorphism(&self, perm: &[ElementId]) -> bool {
        if perm.len() != self.len() {
            return false;
        }
        let mut seen = vec![false; self.len()];
        for (x, &y) in perm.iter().enumerate() {
            if y as usize >= self.len() || seen[y as usize] || self.type_of(x as ElementId) != self.type_of(y) {
                return false;
            }
            seen[y as usize] = true;
        }
        self.incidences().all(|(a, b)| self.incident(perm[a as usize], perm[b as usize]))
    }

    /// Number of orbits of the group generated by `gens` on the chambers.
    /// Every generator must be an automorphism; at most `max_chambers`
    /// chambers are enumerated.
    pub fn chamber_orbit_count(&self, gens: &[Vec<ElementId>], max_chambers: usize) -> Result<usize> {
        if let Some(k) = gens.iter().position(|p| !self.is_automorphism(p)) {
            return Err(Error::PreconditionFailed(format!("generator {k} is not an automorphism")));
        }
        let chambers = self.chambers(max_chambers)?;
        let m = chambers.len();
        let mut seen = vec![false; m];
        let mut orbits = 0;
        let mut image = vec![0; self.rank()];
        for start in 0..m {
            if seen[start] {
                continue;
            }
            orbits += 1;
            seen[start] = true;
            let mut stack = vec![start];
            while let Some(c) = stack.pop() {
                for p in gens {
                    for (t, &x) in chambers.get(c).iter().enumerate() {
                        image[t] = p[x as usize];
                    }
                    let d = chambers.position(&image).expect("automorphisms map chambers to chambers");
                    if !seen[d] {
                        seen[d] = true;
                        stack.push(d);
                    }
                }
            }
        }
        Ok(orbits)
    }

    /// Whether the group generated by `action` (or the full automorphism
    /// group when `None`) acts transitively on the chambers.
    pub fn is_flag_transitive(&self, action: Option<&[Vec<ElementId>]>, max_chambers: usize) -> Result<bool> {
        let owned;
        let gens = match action {
            Some(a) => a,
            None => {
                owned = automorphism_group(self)?.gens().to_vec();
                &owned
            }
        };
        Ok(self.chamber_orbit_count(gens, max_chambers)? == 1)
    }
}
