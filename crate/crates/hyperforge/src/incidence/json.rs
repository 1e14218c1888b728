//! JSON form of a geometry.
//!
//! ```text
//! {"elements":[{"id":0,"type":0},...],"incidences":[[0,3],...],"rank":2}
//! ```
//!
//! Keys are emitted in sorted order, elements by id and incidences as
//! `[a, b]` with `a < b` in lexicographic order, so equal geometries give
//! byte-identical output. Constructed geometries carry an extra
//! `"provenance"` object.

use serde::{Deserialize, Serialize};

use super::{IncidenceGeometry, Provenance};
use crate::error::{Error, Result};

/// One element record.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ElementDoc {
    /// Element id.
    pub id: u32,
    /// Element type.
    #[serde(rename = "type")]
    pub ty: usize,
}

/// One provenance record.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ProvenanceEntryDoc {
    /// Source element.
    pub base: u32,
    /// Element id in this geometry.
    pub id: u32,
    /// Fibre or class tag.
    pub tag: u32,
}

/// Provenance record of a constructed geometry.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ProvenanceDoc {
    /// Construction name.
    pub construction: String,
    /// Per-element provenance.
    pub elements: Vec<ProvenanceEntryDoc>,
    /// Leaf the construction was applied at.
    pub leaf: [usize; 2],
}

/// Serialisable document for a geometry.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct GeometryDoc {
    /// Elements with their types.
    pub elements: Vec<ElementDoc>,
    /// Incident pairs.
    pub incidences: Vec<[u32; 2]>,
    /// Optional construction provenance.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub provenance: Option<ProvenanceDoc>,
    /// Number of types.
    pub rank: usize,
}

impl From<&IncidenceGeometry> for GeometryDoc {
    fn from(g: &IncidenceGeometry) -> Self {
        GeometryDoc {
            elements: (0..g.len() as u32).map(|x| ElementDoc { id: x, ty: g.type_of(x) }).collect(),
            incidences: g.incidences().map(|(a, b)| [a, b]).collect(),
            provenance: g.provenance().map(|p| ProvenanceDoc {
                construction: p.construction.clone(),
                elements: (0..g.len())
                    .map(|x| ProvenanceEntryDoc { base: p.base[x], id: x as u32, tag: p.tag[x] })
                    .collect(),
                leaf: [p.leaf.0, p.leaf.1],
            }),
            rank: g.rank(),
        }
    }
}

impl TryFrom<GeometryDoc> for IncidenceGeometry {
    type Error = Error;

    fn try_from(doc: GeometryDoc) -> Result<Self> {
        let n = doc.elements.len();
        let mut types = vec![usize::MAX; n];
        for e in &doc.elements {
            let slot = types
                .get_mut(e.id as usize)
                .ok_or_else(|| Error::InvalidGeometry(format!("element id {} is not below {n}", e.id)))?;
            if *slot != usize::MAX {
                return Err(Error::InvalidGeometry(format!("element id {} listed twice", e.id)));
            }
            *slot = e.ty;
        }
        let pairs: Vec<(u32, u32)> = doc.incidences.iter().map(|p| (p[0], p[1])).collect();
        let g = IncidenceGeometry::from_parts(doc.rank, types, &pairs)?;
        match doc.provenance {
            None => Ok(g),
            Some(p) => {
                let mut base = vec![u32::MAX; n];
                let mut tag = vec![0; n];
                for e in p.elements {
                    if e.id as usize >= n || base[e.id as usize] != u32::MAX {
                        return Err(Error::InvalidGeometry(format!("bad provenance entry for id {}", e.id)));
                    }
                    base[e.id as usize] = e.base;
                    tag[e.id as usize] = e.tag;
                }
                if base.contains(&u32::MAX) {
                    return Err(Error::InvalidGeometry("provenance does not cover every element".into()));
                }
                g.with_provenance(Provenance { construction: p.construction, leaf: (p.leaf[0], p.leaf[1]), base, tag })
            }
        }
    }
}

impl IncidenceGeometry {
    /// Canonical compact JSON.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&GeometryDoc::from(self)).expect("geometry documents always serialise")
    }

    /// Parses and validates the JSON form.
    pub fn from_json(text: &str) -> Result<Self> {
        let doc: GeometryDoc = serde_json::from_str(text)?;
        IncidenceGeometry::try_from(doc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_is_bit_exact() {
        let g = IncidenceGeometry::from_parts(2, vec![0, 1, 1], &[(2, 0), (0, 1)]).unwrap();
        let s = g.to_json();
        assert_eq!(
            s,
            r#"{"elements":[{"id":0,"type":0},{"id":1,"type":1},{"id":2,"type":1}],"incidences":[[0,1],[0,2]],"rank":2}"#
        );
        let h = IncidenceGeometry::from_json(&s).unwrap();
        assert_eq!(h, g);
        assert_eq!(h.to_json(), s);
    }

    #[test]
    fn provenance_round_trips() {
        let g = IncidenceGeometry::from_parts(2, vec![0, 1], &[(0, 1)])
            .unwrap()
            .with_provenance(Provenance { construction: "P".into(), leaf: (0, 1), base: vec![7, 7], tag: vec![0, 1] })
            .unwrap();
        let h = IncidenceGeometry::from_json(&g.to_json()).unwrap();
        assert_eq!(h, g);
    }

    #[test]
    fn rejects_duplicate_ids() {
        let s = r#"{"elements":[{"id":0,"type":0},{"id":0,"type":1}],"incidences":[],"rank":2}"#;
        assert!(IncidenceGeometry::from_json(s).is_err());
    }
}
