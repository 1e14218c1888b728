//! Incidence geometries checked against explicitly written-down examples.

mod common;

use std::collections::BTreeSet;

use common::{containment_geometry, cube, polygon, square_pyramid, tetrahedron};
use hyperforge::incidence::{automorphism_group, isomorphic, DiagramEntry, RankTwoLabel};
use hyperforge::toroid::{build_cubic_toroid, ToroidParams};
use hyperforge::{Error, IncidenceGeometry, Limits};

const FLAGS: usize = 1_000_000;

fn element_with(g: &IncidenceGeometry, t: usize, set: &[usize]) -> u32 {
    // Containment geometries number elements by (type, vertex set).
    let mut els: Vec<(usize, BTreeSet<usize>)> = common::cube_faces(3);
    els.sort();
    els.dedup();
    let want = (t, set.iter().copied().collect::<BTreeSet<usize>>());
    let id = els.iter().position(|e| *e == want).expect("face of the cube") as u32;
    assert_eq!(g.type_of(id), t);
    id
}

#[test]
fn smallest_geometry() {
    let g = IncidenceGeometry::from_parts(2, vec![0, 1], &[(0, 1)]).unwrap();
    assert_eq!(g.len(), 2);
    assert_eq!(g.rank(), 2);
    assert!(g.incident(0, 1) && g.incident(1, 0));
}

#[test]
fn malformed_geometries_are_rejected() {
    assert!(matches!(IncidenceGeometry::from_parts(2, vec![0, 1], &[(0, 0)]), Err(Error::InvalidGeometry(_))));
    assert!(matches!(IncidenceGeometry::from_parts(2, vec![0, 0, 1], &[(0, 1)]), Err(Error::InvalidGeometry(_))));
    assert!(matches!(IncidenceGeometry::from_parts(2, vec![0, 1], &[(0, 7)]), Err(Error::InvalidGeometry(_))));
    assert!(matches!(IncidenceGeometry::from_parts(3, vec![0, 1], &[(0, 1)]), Err(Error::InvalidGeometry(_))));
}

#[test]
fn cube_has_the_expected_elements() {
    assert_eq!(cube().type_counts(), vec![8, 12, 6]);
    assert_eq!(cube().num_incidences(), 24 + 24 + 24);
}

#[test]
fn vertex_residue_of_the_cube_is_a_triangle() {
    let g = cube();
    let v = element_with(&g, 0, &[0]);
    let r = g.residue(&[v]).unwrap();
    assert_eq!(r.types, vec![1, 2]);
    assert_eq!(r.geometry.type_counts(), vec![3, 3]);
    assert!(isomorphic(&r.geometry, &polygon(3)).unwrap());
}

#[test]
fn trivial_residues() {
    let g = cube();
    let whole = g.residue(&[]).unwrap();
    assert!(isomorphic(&whole.geometry, &g).unwrap());
    let chamber = g.chambers(FLAGS).unwrap().get(0).to_vec();
    let empty = g.residue(&chamber).unwrap();
    assert_eq!(empty.geometry.rank(), 0);
    assert!(empty.geometry.is_empty());
}

#[test]
fn vertex_edge_truncation_is_the_cube_graph() {
    let g = cube();
    let t = g.truncation(&[0, 1]).unwrap();
    assert_eq!(t.geometry.type_counts(), vec![8, 12]);
    // Oracle: vertices are bit masks, edges join masks at Hamming distance 1.
    for e in t.geometry.elements_of_type(1) {
        let ends: Vec<u32> = t.geometry.shadow(e, 0);
        assert_eq!(ends.len(), 2);
        let (a, b) = (t.elements[ends[0] as usize], t.elements[ends[1] as usize]);
        assert_eq!(((a ^ b) as u32).count_ones(), 1, "elements 0..8 are the vertices in mask order");
    }
    assert!(isomorphic(&g.truncation(&[0, 1, 2]).unwrap().geometry, &g).unwrap());
    let single = g.truncation(&[2]).unwrap();
    assert_eq!(single.geometry.type_counts(), vec![6]);
    assert_eq!(single.geometry.num_incidences(), 0);
}

#[test]
fn shadows_on_the_cube() {
    let g = cube();
    let face = element_with(&g, 2, &[0, 1, 2, 3]);
    assert_eq!(g.shadow(face, 0), vec![0, 1, 2, 3]);
    let edge = element_with(&g, 1, &[0, 4]);
    assert_eq!(g.shadow(edge, 0), vec![0, 4]);
    assert_eq!(g.shadow(5, 0), vec![5]);
}

#[test]
fn cube_chambers_and_flag_properties() {
    let g = cube();
    assert_eq!(g.chambers(FLAGS).unwrap().len(), 48);
    let r = g.flag_report(FLAGS).unwrap();
    assert!(r.is_geometry && r.thin && r.firm && r.residually_connected);
    assert!(g.is_connected());
}

#[test]
fn isolated_element_breaks_the_geometry_condition() {
    let g = IncidenceGeometry::from_parts(2, vec![0, 0, 1], &[(0, 2)]).unwrap();
    assert!(!g.is_geometry(FLAGS).unwrap());
}

#[test]
fn rank_one_geometry_has_singleton_chambers() {
    let g = IncidenceGeometry::from_parts(1, vec![0, 0, 0], &[]).unwrap();
    let ch = g.chambers(FLAGS).unwrap();
    assert_eq!(ch.iter().map(|c| c.to_vec()).collect::<Vec<_>>(), vec![vec![0], vec![1], vec![2]]);
    assert!(g.is_geometry(FLAGS).unwrap());
}

#[test]
fn two_digons_are_disconnected() {
    let g = IncidenceGeometry::from_parts(2, vec![0, 1, 0, 1], &[(0, 1), (2, 3)]).unwrap();
    assert!(!g.is_connected());
    assert!(!g.is_residually_connected(FLAGS).unwrap());
}

#[test]
fn square_pyramid_thinness() {
    // Vertices, edges and faces alone form a polyhedron, which is thin.
    let g = square_pyramid();
    assert_eq!(g.type_counts(), vec![5, 8, 5]);
    assert!(g.is_thin(FLAGS).unwrap());
    // With the solid as a fourth type, a flag missing only the solid has a
    // single extension.
    let mut els: Vec<(usize, BTreeSet<usize>)> = Vec::new();
    for x in 0..g.len() as u32 {
        els.push((g.type_of(x), g.shadow(x, 0).iter().map(|&v| v as usize).collect()));
    }
    els.push((3, (0..5).collect()));
    let lattice = containment_geometry(4, els);
    assert_eq!(lattice.type_counts(), vec![5, 8, 5, 1]);
    let r = lattice.flag_report(FLAGS).unwrap();
    assert!(r.is_geometry && !r.thin && !r.firm);
}

#[test]
fn automorphism_group_orders() {
    assert_eq!(automorphism_group(&polygon(3)).unwrap().order(), 6);
    assert_eq!(automorphism_group(&cube()).unwrap().order(), 48);
    assert_eq!(automorphism_group(&tetrahedron()).unwrap().order(), 24);
}

#[test]
fn relabelled_cube_is_isomorphic() {
    let g = cube();
    let n = g.len() as u32;
    // Reverse the ids.
    let types: Vec<usize> = (0..n).rev().map(|x| g.type_of(x)).collect();
    let pairs: Vec<(u32, u32)> = g.incidences().map(|(a, b)| (n - 1 - a, n - 1 - b)).collect();
    let h = IncidenceGeometry::from_parts(3, types, &pairs).unwrap();
    assert!(isomorphic(&g, &h).unwrap());
    assert!(!isomorphic(&g, &tetrahedron()).unwrap());
}

#[test]
fn flag_transitivity_of_the_cube() {
    let g = cube();
    let aut = automorphism_group(&g).unwrap();
    assert!(g.is_flag_transitive(Some(aut.gens()), FLAGS).unwrap());
    let identity: Vec<u32> = (0..g.len() as u32).collect();
    assert!(!g.is_flag_transitive(Some(&[identity.clone()]), FLAGS).unwrap());
    assert_eq!(g.chamber_orbit_count(&[identity], FLAGS).unwrap(), 48);
    assert!(g.is_flag_transitive(None, FLAGS).unwrap());
}

#[test]
fn toroid_is_flag_transitive_under_its_group() {
    let t = build_cubic_toroid(&ToroidParams::new(3, 1, 3).unwrap(), &Limits::default()).unwrap();
    let g = &t.coset.geometry;
    assert!(g.is_flag_transitive(Some(&t.coset.action), 8_000_000).unwrap());
    for a in &t.coset.action {
        assert!(g.is_automorphism(a));
    }
}

#[test]
fn cube_diagram() {
    let d = cube().buekenhout_diagram(FLAGS).unwrap();
    assert_eq!(d.entry(0, 1), &DiagramEntry::Uniform(RankTwoLabel::polygon(4)));
    assert_eq!(d.entry(1, 2), &DiagramEntry::Uniform(RankTwoLabel::polygon(3)));
    assert!(d.entry(0, 2).label().unwrap().is_digon());
    let digon = d.entry(0, 2).label().unwrap();
    assert_eq!((digon.gonality, digon.point_diameter, digon.line_diameter), (Some(2), Some(2), Some(2)));
}

#[test]
fn generalized_digon_label() {
    let pairs: Vec<(u32, u32)> = (0..3).flat_map(|a| (3..5).map(move |b| (a, b))).collect();
    let g = IncidenceGeometry::from_parts(2, vec![0, 0, 0, 1, 1], &pairs).unwrap();
    assert!(g.diagram_entry(0, 1, FLAGS).unwrap().label().unwrap().is_digon());
}

#[test]
fn toroid_diagram_is_linear() {
    let t = build_cubic_toroid(&ToroidParams::new(3, 1, 3).unwrap(), &Limits::default()).unwrap();
    let d = t.coset.geometry.buekenhout_diagram_at_chamber(&t.coset.base_chamber());
    assert_eq!(d.polygon_matrix().unwrap(), common::string_matrix(&[4, 3, 4]));
}

#[test]
fn json_round_trip_and_type_permutation() {
    let g = cube();
    let back = IncidenceGeometry::from_json(&g.to_json()).unwrap();
    assert_eq!(back.to_json(), g.to_json());
    assert!(isomorphic(&back, &g).unwrap());
    let dual = g.permute_types(&[2, 1, 0]).unwrap();
    assert_eq!(dual.type_counts(), vec![6, 12, 8]);
    // The octahedron: faces of the cube become vertices.
    let octa = containment_geometry(
        3,
        (0..6)
            .map(|v| (0, BTreeSet::from([v])))
            .chain(
                (0..6)
                    .flat_map(|a| (a + 1..6).filter(move |b| b / 2 != a / 2).map(move |b| (1, BTreeSet::from([a, b])))),
            )
            .chain((0..8).map(|m| (2, (0..3).map(|k| 2 * k + (m >> k & 1)).collect())))
            .collect(),
    );
    assert!(isomorphic(&dual, &octa).unwrap());
}
