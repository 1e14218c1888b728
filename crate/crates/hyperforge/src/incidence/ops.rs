//! Residues, truncations and shadows.

use super::{ElementId, IncidenceGeometry};
use crate::error::{Error, Result};

/// A geometry carved out of a larger one, together with the maps back into it.
#[derive(Clone, Debug)]
pub struct SubGeometry {
    /// The carved-out geometry, with dense ids and types.
    pub geometry: IncidenceGeometry,
    /// `elements[new_id]` is the id in the parent geometry.
    pub elements: Vec<ElementId>,
    /// `types[new_type]` is the type in the parent geometry.
    pub types: Vec<usize>,
}

impl SubGeometry {
    /// Position of the parent type `t` among the kept types, if kept.
    pub fn local_type(&self, t: usize) -> Option<usize> {
        self.types.iter().position(|&u| u == t)
    }
}

impl IncidenceGeometry {
    /// Elements incident with every member of `flag` and not of a type
    /// already present in it, sorted by id.
    pub fn residue_elements(&self, flag: &[ElementId]) -> Result<Vec<ElementId>> {
        if !self.is_flag(flag) {
            return Err(Error::InvalidGeometry(format!("{flag:?} is not a flag")));
        }
        Ok(self.residue_elements_unchecked(flag))
    }

    pub(crate) fn residue_elements_unchecked(&self, flag: &[ElementId]) -> Vec<ElementId> {
        let mut used = vec![false; self.rank()];
        for &x in flag {
            used[self.type_of(x)] = true;
        }
        let Some((&first, rest)) = flag.split_first() else {
            return (0..self.len() as u32).collect();
        };
        self.neighbors(first)
            .iter()
            .copied()
            .filter(|&y| !used[self.type_of(y)] && rest.iter().all(|&z| self.incident(y, z)))
            .collect()
    }

    /// The residue of a flag: the geometry of all elements incident with the
    /// flag whose type is not in the flag, with the induced incidence.
    pub fn residue(&self, flag: &[ElementId]) -> Result<SubGeometry> {
        let elems = self.residue_elements(flag)?;
        let mut used = vec![false; self.rank()];
        for &x in flag {
            used[self.type_of(x)] = true;
        }
        let kept: Vec<usize> = (0..self.rank()).filter(|&t| !used[t]).collect();
        self.induced(elems, kept)
    }

    /// The truncation to the types in `keep`: all elements of those types with
    /// the induced incidence. Types are renumbered in increasing order.
    pub fn truncation(&self, keep: &[usize]) -> Result<SubGeometry> {
        let mut kept: Vec<usize> = keep.to_vec();
        kept.sort_unstable();
        kept.dedup();
        if kept.iter().any(|&t| t >= self.rank()) {
            return Err(Error::InvalidGeometry(format!("truncation types {keep:?} exceed rank {}", self.rank())));
        }
        let elems = (0..self.len() as u32).filter(|&x| kept.contains(&self.type_of(x))).collect();
        self.induced(elems, kept)
    }

    /// Elements of type `t` incident with `x`; the own-type shadow is `{x}`.
    pub fn shadow(&self, x: ElementId, t: usize) -> Vec<ElementId> {
        if self.type_of(x) == t {
            return vec![x];
        }
        self.neighbors(x).iter().copied().filter(|&y| self.type_of(y) == t).collect()
    }

    /// Substructure induced on a sorted element set whose types all lie in
    /// `kept` (sorted).
    pub(crate) fn induced(&self, elems: Vec<ElementId>, kept: Vec<usize>) -> Result<SubGeometry> {
        let mut local = vec![u32::MAX; self.len()];
        for (i, &x) in elems.iter().enumerate() {
            local[x as usize] = i as u32;
        }
        let mut type_index = vec![usize::MAX; self.rank()];
        for (i, &t) in kept.iter().enumerate() {
            type_index[t] = i;
        }
        let types = elems.iter().map(|&x| type_index[self.type_of(x)]).collect();
        let mut pairs = Vec::new();
        for (i, &x) in elems.iter().enumerate() {
            for &y in self.neighbors(x) {
                let j = local[y as usize];
                if j != u32::MAX && j > i as u32 {
                    pairs.push((i as u32, j));
                }
            }
        }
        let geometry = IncidenceGeometry::from_parts(kept.len(), types, &pairs)?;
        Ok(SubGeometry { geometry, elements: elems, types: kept })
    }
}
