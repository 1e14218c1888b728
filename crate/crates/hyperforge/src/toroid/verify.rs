//! Building cubic toroids and verifying the family of halvings: the toroid
//! itself (depth 0), its halving at `(0, 1)` (depth 1) and the halving of
//! that at `(n, n-1)` (depth 2).
//!
//! Large instances are checked through the group: once chamber
//! transitivity is established, thinness, residual connectedness and the
//! diagram are read off the subflags of one chamber. The combinatorial
//! constructions and isomorphism tests run when the geometry has at most
//! [`COMBINATORIAL_CHAMBER_LIMIT`] chambers and are reported as skipped
//! otherwise.

use std::fmt::Write as _;

use serde::Serialize;

use super::presentations::{
    cubic_toroid_presentation, double_halved_matrix, double_halved_presentation, halved_matrix, halved_presentation,
    linear_matrix, predict_degenerate_leaf, predict_truncation_bipartite, ToroidParams,
};
use crate::constructions::{check_b1, check_b2, halving_geometry, truncation_is_bipartite};
use crate::error::{Error, Result};
use crate::group::{
    check_b2_algebraic_sufficient, coset_geometry, coxeter_matrix, generators_correspond, halving_group,
    intersection_property, is_leaf, regular_group, relator_parity_bipartite, CosetGeometry, PermGroup, Presentation,
};
use crate::incidence::{isomorphic, DiagramEntry};
use crate::Limits;

/// Largest chamber count for which combinatorial constructions and
/// geometry isomorphism tests are run.
pub const COMBINATORIAL_CHAMBER_LIMIT: usize = 40_000;

/// Outcome of one check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    /// The computed value matches the expectation.
    Pass,
    /// The computed value contradicts the expectation.
    Fail,
    /// The check was not run (size ceiling or excluded case).
    Skipped,
}

/// One named check with its verdict and a short description of the values.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    /// Identifier of the check.
    pub name: String,
    /// Verdict.
    pub status: Status,
    /// Computed and expected values.
    pub detail: String,
}

impl Check {
    fn new(name: &str, ok: bool, detail: impl Into<String>) -> Self {
        Check { name: name.into(), status: if ok { Status::Pass } else { Status::Fail }, detail: detail.into() }
    }

    fn skipped(name: &str, why: impl Into<String>) -> Self {
        Check { name: name.into(), status: Status::Skipped, detail: why.into() }
    }
}

/// Results for one geometry of the family.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LevelReport {
    /// 0 for the toroid, 1 after halving at `(0, 1)`, 2 after halving again
    /// at `(n, n-1)`.
    pub depth: usize,
    /// The leaf halved to reach this level.
    pub leaf: Option<(usize, usize)>,
    /// `"P"` or `"BP"`: the construction the halving geometry dispatches to.
    pub branch: Option<String>,
    /// Order of the group.
    pub group_order: u128,
    /// Number of elements of each type of the coset geometry.
    pub type_counts: Vec<usize>,
    /// Coxeter matrix of the generators.
    pub coxeter_matrix: Vec<Vec<u32>>,
    /// Diagram labels read from the rank-two residues, `(i, j, label)` for
    /// every pair that is not a digon.
    pub diagram: Vec<(usize, usize, String)>,
    /// Coxeter matrix after halving instead at the leaf `(0, 2)`, when that
    /// is a leaf.
    pub alternate_leaf_matrix: Option<Vec<Vec<u32>>>,
    /// All checks run at this level.
    pub checks: Vec<Check>,
}

/// Verification report for one parameter cell.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyReport {
    /// The toroid parameters.
    pub params: ToroidParams,
    /// One report per depth reached.
    pub levels: Vec<LevelReport>,
    /// True when no check failed.
    pub passed: bool,
}

impl FamilyReport {
    /// All failed checks, with their depth.
    pub fn failures(&self) -> Vec<(usize, &Check)> {
        self.levels
            .iter()
            .flat_map(|l| l.checks.iter().filter(|c| c.status == Status::Fail).map(move |c| (l.depth, c)))
            .collect()
    }

    /// The check called `name` at `depth`, if it was run.
    pub fn check(&self, depth: usize, name: &str) -> Option<&Check> {
        self.levels.get(depth)?.checks.iter().find(|c| c.name == name)
    }

    /// Pretty JSON with keys in declaration order.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports always serialise")
    }

    /// Human-readable table: one line per check.
    pub fn to_table(&self) -> String {
        let p = self.params;
        let mut out =
            format!("cell (n={}, k={}, s={}): {}\n", p.n, p.k, p.s, if self.passed { "PASS" } else { "FAIL" });
        for l in &self.levels {
            let _ = writeln!(
                out,
                "  depth {} | order {} | types {:?} | branch {}",
                l.depth,
                l.group_order,
                l.type_counts,
                l.branch.as_deref().unwrap_or("-")
            );
            for c in &l.checks {
                let st = match c.status {
                    Status::Pass => "pass",
                    Status::Fail => "FAIL",
                    Status::Skipped => "skip",
                };
                let _ = writeln!(out, "    {st:4} {:30} {}", c.name, c.detail);
            }
        }
        out
    }
}

/// A cubic toroid: its presentation, the regular representation of its
/// group and the coset geometry.
#[derive(Clone, Debug)]
pub struct CubicToroid {
    /// Parameters.
    pub params: ToroidParams,
    /// The presentation the group was enumerated from.
    pub presentation: Presentation,
    /// The group in its right-regular representation.
    pub group: PermGroup,
    /// The coset geometry of the maximal parabolic subgroups.
    pub coset: CosetGeometry,
}

/// Enumerates the toroid group and builds its coset geometry, verifying
/// that it is a regular polytope with the linear diagram.
pub fn build_cubic_toroid(p: &ToroidParams, limits: &Limits) -> Result<CubicToroid> {
    let presentation = cubic_toroid_presentation(p)?;
    let group = regular_group(&presentation, limits)?;
    let coset = coset_geometry(&group)?;
    let bad: Vec<String> = hypertope_checks(&group, &coset, &linear_matrix(p.n), limits)?
        .into_iter()
        .filter(|c| c.status == Status::Fail)
        .map(|c| format!("{}: {}", c.name, c.detail))
        .collect();
    if !bad.is_empty() {
        return Err(Error::PropertyViolation(bad.join("; ")));
    }
    Ok(CubicToroid { params: *p, presentation, group, coset })
}

fn fmt_matrix(m: &[Vec<u32>]) -> String {
    let rows: Vec<String> = m.iter().map(|r| r.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")).collect();
    format!("[{}]", rows.join("; "))
}

/// Regular-hypertope checks for a group and its coset geometry: the
/// intersection property, chamber transitivity (with as many chambers as
/// group elements), thinness and residual connectedness, and the diagram.
pub fn hypertope_checks(
    group: &PermGroup,
    coset: &CosetGeometry,
    expected: &[Vec<u32>],
    limits: &Limits,
) -> Result<Vec<Check>> {
    let g = &coset.geometry;
    let mut checks = Vec::new();
    checks.push(Check::new("c-group", intersection_property(group)?, "intersection property"));
    let chambers = g.chambers(limits.max_chambers)?;
    let orbits = g.chamber_orbit_count(&coset.action, limits.max_chambers)?;
    checks.push(Check::new(
        "flag-transitive",
        orbits == 1 && chambers.len() as u128 == group.order(),
        format!("{} chamber orbit(s), {} chambers, order {}", orbits, chambers.len(), group.order()),
    ));
    let report =
        if orbits == 1 { g.flag_report_at_chamber(&coset.base_chamber())? } else { g.flag_report(limits.max_flags)? };
    checks.push(Check::new("geometry", report.is_geometry, "every maximal flag is a chamber"));
    checks.push(Check::new("thin", report.thin, "corank-one residues have two elements"));
    checks.push(Check::new("residually-connected", report.residually_connected, "residues of rank >= 2 connected"));
    let cm = coxeter_matrix(group);
    checks.push(Check::new(
        "coxeter-matrix",
        cm == expected,
        format!("computed {} expected {}", fmt_matrix(&cm), fmt_matrix(expected)),
    ));
    let diagram = if orbits == 1 {
        g.buekenhout_diagram_at_chamber(&coset.base_chamber())
    } else {
        g.buekenhout_diagram(limits.max_flags)?
    };
    let dm = diagram.polygon_matrix();
    checks.push(Check::new(
        "diagram",
        dm.as_deref() == Some(expected),
        match &dm {
            Some(m) => format!("residue labels give {}", fmt_matrix(m)),
            None => "some residue is not a generalised polygon".into(),
        },
    ));
    Ok(checks)
}

fn diagram_labels(coset: &CosetGeometry) -> Vec<(usize, usize, String)> {
    coset
        .geometry
        .buekenhout_diagram_at_chamber(&coset.base_chamber())
        .edges()
        .into_iter()
        .map(|((i, j), e)| {
            let label = match e {
                DiagramEntry::Uniform(l) => l.to_string(),
                DiagramEntry::NonUniform(ls) => {
                    ls.iter().map(|(l, c)| format!("{l}x{c}")).collect::<Vec<_>>().join("|")
                }
                DiagramEntry::Absent => "absent".into(),
            };
            (i, j, label)
        })
        .collect()
}

fn level(
    depth: usize,
    leaf: Option<(usize, usize)>,
    branch: Option<String>,
    group: &PermGroup,
    coset: &CosetGeometry,
) -> LevelReport {
    LevelReport {
        depth,
        leaf,
        branch,
        group_order: group.order(),
        type_counts: coset.geometry.type_counts(),
        coxeter_matrix: coxeter_matrix(group),
        diagram: diagram_labels(coset),
        alternate_leaf_matrix: None,
        checks: Vec::new(),
    }
}

fn small(order: u128) -> bool {
    order <= COMBINATORIAL_CHAMBER_LIMIT as u128
}

/// Checks that a presentation defines the same group as `group`, with
/// generators matching in order, and (for small groups) that the coset
/// geometries are isomorphic.
fn presentation_checks(
    pres: Result<Presentation>,
    group: &PermGroup,
    coset: &CosetGeometry,
    limits: &Limits,
) -> Result<Vec<Check>> {
    let pres = match pres {
        Ok(p) => p,
        Err(Error::UnsupportedCase(why)) => return Ok(vec![Check::skipped("presentation", why)]),
        Err(e) => return Err(e),
    };
    let holds = pres.relators.iter().all(|r| {
        let mut at = 0u32;
        r.iter().for_each(|&x| at = group.gens()[x][at as usize]);
        at == 0
    });
    let pg = regular_group(&pres, limits)?;
    let mut checks = vec![
        Check::new("presentation-relators-hold", holds, "every relator is trivial in the subgroup"),
        Check::new("presentation-order", pg.order() == group.order(), format!("{} vs {}", pg.order(), group.order())),
        Check::new(
            "presentation-coxeter-matrix",
            coxeter_matrix(&pg) == coxeter_matrix(group),
            fmt_matrix(&coxeter_matrix(&pg)),
        ),
        Check::new(
            "presentation-generators",
            generators_correspond(&pg, group)?,
            "generator i of the presentation maps to generator i of the subgroup",
        ),
    ];
    if small(group.order()) {
        let other = coset_geometry(&pg)?;
        checks.push(Check::new(
            "presentation-coset-isomorphic",
            isomorphic(&other.geometry, &coset.geometry)?,
            "type-preserving isomorphism of coset geometries",
        ));
    } else {
        checks.push(Check::skipped("presentation-coset-isomorphic", "above the combinatorial chamber limit"));
    }
    Ok(checks)
}

/// Builds the halving geometry of `source` at `leaf` and compares it with
/// the coset geometry of the halving group.
fn construction_check(
    source: &CosetGeometry,
    leaf: (usize, usize),
    target: &CosetGeometry,
    order: u128,
) -> Result<Check> {
    if !small(order) {
        return Ok(Check::skipped("halving-geometry-isomorphic", "above the combinatorial chamber limit"));
    }
    let h = halving_geometry(&source.geometry, leaf, false)?;
    let iso = isomorphic(&h, &target.geometry)?;
    let name = h.provenance().map(|p| p.construction.clone()).unwrap_or_default();
    Ok(Check::new(
        "halving-geometry-isomorphic",
        iso,
        format!("{name} construction with type counts {:?} vs coset geometry", h.type_counts()),
    ))
}

/// Runs the checks of every level up to `depth` (0, 1 or 2).
pub fn verify_family(p: &ToroidParams, depth: usize, limits: &Limits) -> Result<FamilyReport> {
    let n = p.n;
    let reverse: Vec<usize> = (0..=n).rev().collect();
    let pres = cubic_toroid_presentation(p)?;
    let g = regular_group(&pres, limits)?;
    let cg = coset_geometry(&g)?;
    let mut levels = Vec::new();

    // Depth 0: the toroid.
    let mut l0 = level(0, None, None, &g, &cg);
    l0.checks.push(Check::new(
        "order",
        g.order() == p.expected_order(),
        format!("{} vs {} cubes x {} flags", g.order(), p.cube_count(), p.expected_order() / p.cube_count()),
    ));
    let binom = |a: usize, b: usize| -> u128 { (0..b).fold(1u128, |acc, t| acc * (a - t) as u128 / (t + 1) as u128) };
    let counts: Vec<usize> = (0..=n).map(|i| (p.cube_count() * binom(n, i)) as usize).collect();
    l0.checks.push(Check::new(
        "type-counts",
        cg.geometry.type_counts() == counts,
        format!("{:?} vs {:?}", cg.geometry.type_counts(), counts),
    ));
    l0.checks.extend(hypertope_checks(&g, &cg, &linear_matrix(n), limits)?);
    let predicted = predict_truncation_bipartite(p);
    let by_relators = relator_parity_bipartite(&pres, 0);
    let by_graph = truncation_is_bipartite(&cg.geometry, (0, 1))?;
    l0.checks.push(Check::new(
        "bipartite-truncation",
        predicted == by_relators && by_relators == by_graph,
        format!("predicted {predicted}, relator parity {by_relators}, two-colouring {by_graph}"),
    ));
    let degenerate = predict_degenerate_leaf(p);
    let b1 = check_b1(&cg.geometry, (0, 1))?;
    let b2 = b1 && check_b2(&cg.geometry, (0, 1))?;
    l0.checks.push(Check::new(
        "leaf-non-degenerate",
        (b1 && b2) != degenerate,
        format!("B1 {b1}, B2 {b2}, predicted degenerate {degenerate}"),
    ));
    if b1 {
        let alg = check_b2_algebraic_sufficient(&g, (0, 1))?;
        l0.checks.push(Check::new("b2-algebraic", alg == b2, format!("algebraic {alg}, combinatorial {b2}")));
    }
    let dual = g.reorder_generators(&reverse)?;
    l0.checks.push(Check::new(
        "self-dual",
        generators_correspond(&g, &dual)?,
        "g_i -> g_{n-i} extends to an automorphism",
    ));
    levels.push(l0);

    if depth >= 1 {
        let h = halving_group(&g, (0, 1))?;
        let ch = coset_geometry(&h)?;
        let branch = if by_graph { "BP" } else { "P" };
        let mut l1 = level(1, Some((0, 1)), Some(branch.into()), &h, &ch);
        let want = if by_graph { g.order() / 2 } else { g.order() };
        l1.checks.push(Check::new(
            "halving-index",
            h.order() == want,
            format!("{} vs {} (bipartite {by_graph})", h.order(), g.order()),
        ));
        if degenerate {
            let ip = intersection_property(&h)?;
            l1.checks.push(Check::new("degenerate-not-c-group", !ip, format!("intersection property {ip}")));
            levels.push(l1);
            return Ok(finish(p, levels));
        }
        l1.checks.extend(hypertope_checks(&h, &ch, &halved_matrix(n), limits)?);
        l1.checks.extend(presentation_checks(halved_presentation(p), &h, &ch, limits)?);
        l1.checks.push(construction_check(&cg, (0, 1), &ch, g.order())?);
        let nn1 = truncation_is_bipartite(&ch.geometry, (n, n - 1))?;
        l1.checks.push(Check::new("bipartite-n-truncation", nn1, "{n,n-1} truncation two-colourable"));
        for leaf in [(n, n - 1), (0, 2), (1, 2)] {
            let b1 = check_b1(&ch.geometry, leaf)?;
            let b2 = b1 && check_b2(&ch.geometry, leaf)?;
            let expect = leaf.0 == n || !(p.k == 2 && p.s == 2);
            l1.checks.push(Check::new(
                &format!("leaf-{}-{}-non-degenerate", leaf.0, leaf.1),
                (b1 && b2) == expect,
                format!("B1 {b1}, B2 {b2}, expected non-degenerate {expect}"),
            ));
        }
        let leaves =
            (0..=n).flat_map(|i| (0..=n).map(move |j| (i, j))).filter(|&l| is_leaf(&coxeter_matrix(&h), l)).count();
        l1.checks.push(Check::new("leaf-count", leaves == 3, format!("{leaves} leaves")));
        levels.push(l1);

        if depth >= 2 {
            let hh = halving_group(&h, (n, n - 1))?;
            let chh = coset_geometry(&hh)?;
            let branch = if nn1 { "BP" } else { "P" };
            let mut l2 = level(2, Some((n, n - 1)), Some(branch.into()), &hh, &chh);
            l2.checks.push(Check::new("bp-branch", nn1, format!("branch {branch}")));
            l2.checks.push(Check::new(
                "halving-index",
                hh.order() * 2 == h.order(),
                format!("{} vs {}", hh.order(), h.order()),
            ));
            l2.checks.extend(hypertope_checks(&hh, &chh, &double_halved_matrix(n), limits)?);
            l2.checks.extend(presentation_checks(double_halved_presentation(p), &hh, &chh, limits)?);
            l2.checks.push(construction_check(&ch, (n, n - 1), &chh, h.order())?);
            // The halving at the other end is the dual of the halving at (0, 1).
            let other = halving_group(&g, (n, n - 1))?;
            l2.checks.push(Check::new(
                "duality",
                generators_correspond(&other, &h.reorder_generators(&reverse)?)?,
                "halving at (n,n-1) equals halving at (0,1) with types reversed",
            ));
            if is_leaf(&coxeter_matrix(&h), (0, 2)) {
                l2.alternate_leaf_matrix = Some(coxeter_matrix(&halving_group(&h, (0, 2))?));
            }
            levels.push(l2);
        }
    }
    Ok(finish(p, levels))
}

fn finish(p: &ToroidParams, levels: Vec<LevelReport>) -> FamilyReport {
    let passed = levels.iter().all(|l| l.checks.iter().all(|c| c.status != Status::Fail));
    FamilyReport { params: *p, levels, passed }
}
