//! Coset enumeration (relator-based HLT strategy with lookahead).
//!
//! Cosets are numbered in order of definition; the finished table is
//! compacted so the numbering is deterministic. Since every generator is an
//! involution the table is symmetric: `c^x = d` iff `d^x = c`.
//!
//! When the coset ceiling is reached a lookahead pass scans every live coset
//! under every relator without defining anything, processes the resulting
//! coincidences and compacts the table. If that frees nothing the
//! enumeration fails with [`Error::Overflow`].

use super::presentation::{check_word, cyclically_reduce, freely_reduce, Presentation, Word};
use crate::error::{Error, Result};

const UNDEF: u32 = u32::MAX;

/// A complete coset table: `image(c, x)` is the coset `c·x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetTable {
    ngens: usize,
    table: Vec<u32>,
    trivial_subgroup: bool,
}

impl CosetTable {
    /// Number of generators.
    pub fn ngens(&self) -> usize {
        self.ngens
    }

    /// Number of cosets (the index of the subgroup).
    pub fn len(&self) -> usize {
        if self.ngens == 0 {
            1
        } else {
            self.table.len() / self.ngens
        }
    }

    /// Always false: a table has at least the subgroup itself.
    pub fn is_empty(&self) -> bool {
        false
    }

    /// The coset reached from `c` by generator `x`.
    pub fn image(&self, c: usize, x: usize) -> usize {
        self.table[c * self.ngens + x] as usize
    }

    /// Whether the subgroup was generated by trivial words only, in which
    /// case cosets are group elements and coset 0 is the identity.
    pub fn is_regular(&self) -> bool {
        self.trivial_subgroup
    }

    /// Column `x` as a permutation of the cosets.
    pub fn column(&self, x: usize) -> Vec<u32> {
        (0..self.len()).map(|c| self.table[c * self.ngens + x]).collect()
    }

    /// Applies a word to a coset.
    pub fn trace(&self, c: usize, w: &[usize]) -> usize {
        w.iter().fold(c, |c, &x| self.image(c, x))
    }

    /// Checks the defining properties: every relator fixes every coset and
    /// every subgroup generator fixes coset 0.
    pub fn is_consistent(&self, pres: &Presentation, subgens: &[Word]) -> bool {
        (0..self.len()).all(|c| pres.relators.iter().all(|r| self.trace(c, r) == c))
            && subgens.iter().all(|w| self.trace(0, w) == 0)
    }

    /// CSV with a header row of generator indices and one row per coset.
    pub fn to_csv(&self) -> String {
        let mut out = (0..self.ngens).map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        out.push('\n');
        for c in 0..self.len() {
            let row: Vec<String> = (0..self.ngens).map(|x| self.image(c, x).to_string()).collect();
            out.push_str(&row.join(","));
            out.push('\n');
        }
        out
    }
}

struct Full;

struct Enumerator {
    ngens: usize,
    table: Vec<u32>,
    parent: Vec<u32>,
    queue: Vec<u32>,
    live: usize,
    max: usize,
}

impl Enumerator {
    fn count(&self) -> usize {
        self.parent.len()
    }

    fn is_live(&self, c: u32) -> bool {
        self.parent[c as usize] == c
    }

    #[inline]
    fn get(&self, c: u32, x: usize) -> u32 {
        self.table[c as usize * self.ngens + x]
    }

    #[inline]
    fn set(&mut self, c: u32, x: usize, d: u32) {
        self.table[c as usize * self.ngens + x] = d;
    }

    fn new_coset(&mut self) -> std::result::Result<u32, Full> {
        if self.count() >= self.max {
            return Err(Full);
        }
        let c = self.count() as u32;
        self.parent.push(c);
        self.table.extend(std::iter::repeat(UNDEF).take(self.ngens));
        self.live += 1;
        Ok(c)
    }

    fn define(&mut self, c: u32, x: usize) -> std::result::Result<u32, Full> {
        let d = self.new_coset()?;
        self.set(c, x, d);
        self.set(d, x, c);
        Ok(d)
    }

    fn rep(&mut self, c: u32) -> u32 {
        let mut r = c;
        while self.parent[r as usize] != r {
            r = self.parent[r as usize];
        }
        let mut c = c;
        while self.parent[c as usize] != r {
            let next = self.parent[c as usize];
            self.parent[c as usize] = r;
            c = next;
        }
        r
    }

    fn merge(&mut self, a: u32, b: u32) {
        let (p, q) = (self.rep(a), self.rep(b));
        if p != q {
            let (lo, hi) = (p.min(q), p.max(q));
            self.parent[hi as usize] = lo;
            self.queue.push(hi);
            self.live -= 1;
        }
    }

    fn coincidence(&mut self, a: u32, b: u32) {
        self.merge(a, b);
        let mut i = 0;
        while i < self.queue.len() {
            let g = self.queue[i];
            i += 1;
            for x in 0..self.ngens {
                let d = self.get(g, x);
                if d == UNDEF {
                    continue;
                }
                if d != g {
                    self.set(d, x, UNDEF);
                }
                let mu = self.rep(g);
                let nu = self.rep(d);
                let mx = self.get(mu, x);
                if mx != UNDEF {
                    self.merge(nu, mx);
                } else {
                    let nx = self.get(nu, x);
                    if nx != UNDEF {
                        self.merge(mu, nx);
                    } else {
                        self.set(mu, x, nu);
                        self.set(nu, x, mu);
                    }
                }
            }
        }
        self.queue.clear();
    }

    /// Scans `w` from coset `a`, defining new cosets to complete the trace
    /// when `fill` is set. Records deductions and coincidences.
    fn scan(&mut self, a: u32, w: &[usize], fill: bool) -> std::result::Result<(), Full> {
        if w.is_empty() {
            return Ok(());
        }
        let mut f = a;
        let mut b = a;
        let mut i: isize = 0;
        let mut j: isize = w.len() as isize - 1;
        loop {
            while i <= j && self.get(f, w[i as usize]) != UNDEF {
                f = self.get(f, w[i as usize]);
                i += 1;
            }
            if i > j {
                if f != b {
                    self.coincidence(f, b);
                }
                return Ok(());
            }
            while j >= i && self.get(b, w[j as usize]) != UNDEF {
                b = self.get(b, w[j as usize]);
                j -= 1;
            }
            if j < i {
                self.coincidence(f, b);
                return Ok(());
            }
            if i == j {
                let x = w[i as usize];
                self.set(f, x, b);
                self.set(b, x, f);
                return Ok(());
            }
            if !fill {
                return Ok(());
            }
            self.define(f, w[i as usize])?;
        }
    }

    /// Renumbers live cosets consecutively; returns the new id of `keep`.
    fn compact(&mut self, keep: u32) -> u32 {
        let n = self.count();
        let mut newid = vec![UNDEF; n];
        let mut k = 0u32;
        for c in 0..n {
            if self.parent[c] == c as u32 {
                newid[c] = k;
                k += 1;
            }
        }
        let mut table = Vec::with_capacity(k as usize * self.ngens);
        for c in 0..n {
            if newid[c] != UNDEF {
                for x in 0..self.ngens {
                    let d = self.table[c * self.ngens + x];
                    table.push(if d == UNDEF { UNDEF } else { newid[d as usize] });
                }
            }
        }
        self.table = table;
        self.parent = (0..k).collect();
        self.live = k as usize;
        // `keep` may have died; continue from the next live coset.
        let mut c = keep as usize;
        while c < n && newid[c] == UNDEF {
            c += 1;
        }
        if c < n {
            newid[c]
        } else {
            k
        }
    }

    /// Lookahead: scan every live coset under every relator without
    /// defining, then compact.
    fn lookahead(&mut self, relators: &[Word], subgens: &[Word], current: u32) -> Result<u32> {
        let before = self.count();
        for w in subgens {
            let _ = self.scan(0, w, false);
        }
        for c in 0..before as u32 {
            for r in relators {
                if !self.is_live(c) {
                    break;
                }
                let _ = self.scan(c, r, false);
            }
        }
        let cur = self.compact(current);
        if self.count() >= before {
            return Err(Error::Overflow { limit: self.max });
        }
        Ok(cur)
    }
}

/// Enumerates the cosets of the subgroup generated by `subgens` in the group
/// given by `pres`, using at most `max_cosets` simultaneously defined cosets.
pub fn todd_coxeter(pres: &Presentation, subgens: &[Word], max_cosets: usize) -> Result<CosetTable> {
    pres.validate()?;
    for w in subgens {
        check_word(pres.ngens, w)?;
    }
    let ngens = pres.ngens;
    let subgens: Vec<Word> = subgens.iter().map(|w| freely_reduce(w)).filter(|w| !w.is_empty()).collect();
    let trivial_subgroup = subgens.is_empty();
    if ngens == 0 {
        return Ok(CosetTable { ngens, table: Vec::new(), trivial_subgroup });
    }
    let mut relators: Vec<Word> =
        pres.relators.iter().map(|r| cyclically_reduce(r)).filter(|r| !r.is_empty()).collect();
    relators.sort_by_key(|r| r.len());
    relators.dedup();
    let mut e =
        Enumerator { ngens, table: Vec::new(), parent: Vec::new(), queue: Vec::new(), live: 0, max: max_cosets.max(1) };
    e.new_coset().map_err(|_| Error::Overflow { limit: max_cosets })?;

    // Subgroup generators are traced from the subgroup coset first.
    'sub: loop {
        for w in &subgens {
            if e.scan(0, w, true).is_err() {
                e.lookahead(&relators, &subgens, 0)?;
                continue 'sub;
            }
        }
        break;
    }

    let mut a: u32 = 0;
    while (a as usize) < e.count() {
        if e.is_live(a) {
            let mut full = false;
            for r in &relators {
                if !e.is_live(a) {
                    break;
                }
                if e.scan(a, r, true).is_err() {
                    full = true;
                    break;
                }
            }
            if !full && e.is_live(a) {
                for x in 0..ngens {
                    if e.get(a, x) == UNDEF && e.define(a, x).is_err() {
                        full = true;
                        break;
                    }
                }
            }
            if full {
                a = e.lookahead(&relators, &subgens, a)?;
                continue;
            }
        }
        a += 1;
    }
    e.compact(0);
    debug_assert!(e.table.iter().all(|&d| d != UNDEF));
    Ok(CosetTable { ngens, table: e.table, trivial_subgroup })
}
