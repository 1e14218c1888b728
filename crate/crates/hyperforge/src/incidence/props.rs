//! Flag-based structural properties: the geometry condition, connectedness,
//! residual connectedness, thinness and firmness.

use super::{ElementId, IncidenceGeometry};
use crate::error::{Error, Result};

/// Outcome of a scan over flags.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FlagReport {
    /// Every maximal flag is a chamber.
    pub is_geometry: bool,
    /// Every residue of corank at least two (including the whole geometry)
    /// is connected.
    pub residually_connected: bool,
    /// Every residue of corank one has exactly two elements.
    pub thin: bool,
    /// Every residue of corank one has at least two elements.
    pub firm: bool,
    /// Number of flags inspected.
    pub flags_visited: usize,
}

/// Scratch space for repeated connectivity tests on element subsets.
pub(crate) struct Marks {
    stamp: Vec<u32>,
    current: u32,
    queue: Vec<ElementId>,
}

impl Marks {
    pub(crate) fn new(n: usize) -> Self {
        Marks { stamp: vec![0; n], current: 0, queue: Vec::new() }
    }

    /// Whether the incidence graph induced on `set` is connected.
    /// The empty set counts as disconnected.
    pub(crate) fn connected(&mut self, g: &IncidenceGeometry, set: &[ElementId]) -> bool {
        if set.is_empty() {
            return false;
        }
        // Two stamps per call: `member` marks the set, `member + 1` marks visited.
        self.current = self.current.wrapping_add(2);
        if self.current < 2 {
            self.stamp.iter_mut().for_each(|s| *s = 0);
            self.current = 2;
        }
        let (member, seen) = (self.current, self.current + 1);
        for &x in set {
            self.stamp[x as usize] = member;
        }
        self.queue.clear();
        self.queue.push(set[0]);
        self.stamp[set[0] as usize] = seen;
        let mut reached = 1usize;
        let mut head = 0;
        while head < self.queue.len() {
            let x = self.queue[head];
            head += 1;
            for &y in g.neighbors(x) {
                if self.stamp[y as usize] == member {
                    self.stamp[y as usize] = seen;
                    reached += 1;
                    self.queue.push(y);
                }
            }
        }
        reached == set.len()
    }
}

struct Scan<'a> {
    g: &'a IncidenceGeometry,
    marks: Marks,
    report: FlagReport,
    limit: usize,
    depth_needed: usize,
}

impl Scan<'_> {
    /// Checks the flag whose residue candidates are `res` and whose types are
    /// marked in `used`, then recurses into larger flags.
    fn visit(&mut self, size: usize, max_type: Option<usize>, res: &[ElementId], used: &mut [bool]) -> Result<()> {
        self.report.flags_visited += 1;
        if self.report.flags_visited > self.limit {
            return Err(Error::SizeLimitExceeded { what: "flags", limit: self.limit });
        }
        let rank = self.g.rank();
        let corank = rank - size;
        check_residue(self.g, &mut self.marks, corank, res, used, &mut self.report);
        if size + 1 > self.depth_needed {
            return Ok(());
        }
        let start = max_type.map_or(0, |t| t + 1);
        for &x in res {
            let t = self.g.type_of(x);
            if t < start {
                continue;
            }
            let child: Vec<ElementId> = intersect_sorted(res, self.g.neighbors(x));
            used[t] = true;
            self.visit(size + 1, Some(t), &child, used)?;
            used[t] = false;
        }
        Ok(())
    }
}

fn check_residue(
    g: &IncidenceGeometry,
    marks: &mut Marks,
    corank: usize,
    res: &[ElementId],
    used: &[bool],
    report: &mut FlagReport,
) {
    if corank == 0 {
        return;
    }
    let mut present = vec![false; g.rank()];
    for &y in res {
        present[g.type_of(y)] = true;
    }
    if (0..g.rank()).any(|t| !used[t] && !present[t]) {
        report.is_geometry = false;
    }
    if corank == 1 {
        if res.len() != 2 {
            report.thin = false;
        }
        if res.len() < 2 {
            report.firm = false;
        }
    } else if !marks.connected(g, res) {
        report.residually_connected = false;
    }
}

pub(crate) fn intersect_sorted(a: &[ElementId], b: &[ElementId]) -> Vec<ElementId> {
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::new();
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

impl IncidenceGeometry {
    /// Scans every flag of size at most `rank - 1` (the empty flag included)
    /// and reports the flag-based properties. Fails once more than
    /// `max_flags` flags have been visited.
    pub fn flag_report(&self, max_flags: usize) -> Result<FlagReport> {
        let mut scan = Scan {
            g: self,
            marks: Marks::new(self.len()),
            report: FlagReport {
                is_geometry: true,
                residually_connected: true,
                thin: true,
                firm: true,
                flags_visited: 0,
            },
            limit: max_flags,
            depth_needed: self.rank().saturating_sub(1),
        };
        let all: Vec<ElementId> = (0..self.len() as u32).collect();
        let mut used = vec![false; self.rank()];
        if self.rank() == 0 {
            return Ok(scan.report);
        }
        scan.visit(0, None, &all, &mut used)?;
        Ok(scan.report)
    }

    /// The same report, restricted to the subflags of one chamber.
    ///
    /// When a group of automorphisms acts transitively on chambers every flag
    /// is an image of such a subflag, so the result equals [`Self::flag_report`].
    pub fn flag_report_at_chamber(&self, chamber: &[ElementId]) -> Result<FlagReport> {
        if chamber.len() != self.rank() || !self.is_flag(chamber) {
            return Err(Error::InvalidGeometry(format!("{chamber:?} is not a chamber")));
        }
        let mut report =
            FlagReport { is_geometry: true, residually_connected: true, thin: true, firm: true, flags_visited: 0 };
        let mut marks = Marks::new(self.len());
        let rank = self.rank();
        for mask in 0u32..(1u32 << rank) {
            let flag: Vec<ElementId> = (0..rank).filter(|&t| mask >> t & 1 == 1).map(|t| chamber[t]).collect();
            if flag.len() == rank {
                continue;
            }
            let used: Vec<bool> = (0..rank).map(|t| mask >> t & 1 == 1).collect();
            let res = self.residue_elements_unchecked(&flag);
            report.flags_visited += 1;
            check_residue(self, &mut marks, rank - flag.len(), &res, &used, &mut report);
        }
        Ok(report)
    }

    /// Every maximal flag is a chamber.
    pub fn is_geometry(&self, max_flags: usize) -> Result<bool> {
        Ok(self.flag_report(max_flags)?.is_geometry)
    }

    /// The incidence graph is connected.
    pub fn is_connected(&self) -> bool {
        let all: Vec<ElementId> = (0..self.len() as u32).collect();
        Marks::new(self.len()).connected(self, &all)
    }

    /// Every residue of corank at least two is connected.
    pub fn is_residually_connected(&self, max_flags: usize) -> Result<bool> {
        Ok(self.flag_report(max_flags)?.residually_connected)
    }

    /// Every residue of corank one has exactly two elements.
    pub fn is_thin(&self, max_flags: usize) -> Result<bool> {
        Ok(self.flag_report(max_flags)?.thin)
    }
}
