//! Parameters, presentations and expected diagrams of the cubic toroids
//! `{4,3^{n-2},4}_s` with `s = (s^k, 0^{n-k})`, and of their halvings.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{power, Presentation, Word};

/// Parameters `(n, k, s)` of a cubic toroid: the tessellation of
/// `n`-space by cubes, factored by the lattice spanned by the images of
/// `(s^k, 0^{n-k})`. The polytope has rank `n + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ToroidParams {
    /// Dimension of the tessellated space (at least 3).
    pub n: usize,
    /// Number of non-zero entries of the lattice vector: 1, 2 or `n`.
    pub k: usize,
    /// The non-zero entry of the lattice vector (at least 2).
    pub s: usize,
}

impl ToroidParams {
    /// Validated parameters.
    pub fn new(n: usize, k: usize, s: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidPresentation(format!("n must be at least 3, got {n}")));
        }
        if k != 1 && k != 2 && k != n {
            return Err(Error::InvalidPresentation(format!("k must be 1, 2 or n = {n}, got {k}")));
        }
        if s < 2 {
            return Err(Error::InvalidPresentation(format!("s must be at least 2, got {s}")));
        }
        Ok(ToroidParams { n, k, s })
    }

    /// Rank of the polytope (`n + 1`).
    pub fn rank(&self) -> usize {
        self.n + 1
    }

    /// Number of cubes: the index of the translation lattice.
    pub fn cube_count(&self) -> u128 {
        let sn = (self.s as u128).pow(self.n as u32);
        match self.k {
            1 => sn,
            2 => 2 * sn,
            _ => (1u128 << (self.n - 1)) * sn,
        }
    }

    /// Expected group order: cubes times the `2^n n!` flags of a cube.
    pub fn expected_order(&self) -> u128 {
        let fact: u128 = (1..=self.n as u128).product();
        self.cube_count() * (1u128 << self.n) * fact
    }
}

/// Whether the `{0,1}`-truncation is bipartite: fails exactly when `k` and
/// `s` are both odd.
pub fn predict_truncation_bipartite(p: &ToroidParams) -> bool {
    !(p.k % 2 == 1 && p.s % 2 == 1)
}

/// Whether the `(0,1)` leaf is degenerate: exactly when `k = 1`, `s = 2`.
pub fn predict_degenerate_leaf(p: &ToroidParams) -> bool {
    p.k == 1 && p.s == 2
}

/// Whether the double halving has no closed-form presentation:
/// `s = (2, 0, ...)` or `s = (2, 2, 0, ...)`.
pub fn double_halving_excluded(p: &ToroidParams) -> bool {
    p.s == 2 && (p.k == 1 || p.k == 2)
}

fn symmetric(r: usize, edges: &[(usize, usize, u32)]) -> Vec<Vec<u32>> {
    let mut m = vec![vec![2u32; r]; r];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 1;
    }
    for &(i, j, v) in edges {
        m[i][j] = v;
        m[j][i] = v;
    }
    m
}

/// The linear diagram `4 - 3 - ... - 3 - 4` on `n + 1` nodes.
pub fn linear_matrix(n: usize) -> Vec<Vec<u32>> {
    let mut edges = vec![(0, 1, 4), (n - 1, n, 4)];
    edges.extend((1..n - 1).map(|i| (i, i + 1, 3)));
    symmetric(n + 1, &edges)
}

/// The diagram after halving at `(0, 1)`: nodes 0 and 1 both hang from
/// node 2 by 3-edges, followed by the chain of 3-edges and a final 4-edge.
pub fn halved_matrix(n: usize) -> Vec<Vec<u32>> {
    let mut edges = vec![(0, 2, 3), (1, 2, 3), (n - 1, n, 4)];
    edges.extend((2..n - 1).map(|i| (i, i + 1, 3)));
    symmetric(n + 1, &edges)
}

/// The diagram after halving again at `(n, n-1)`: the 4-cycle
/// `0-2-1-3-0` for `n = 3`, the star centred at 2 for `n = 4` and the
/// double Y for `n > 4`.
pub fn double_halved_matrix(n: usize) -> Vec<Vec<u32>> {
    if n == 3 {
        return symmetric(4, &[(0, 2, 3), (2, 1, 3), (1, 3, 3), (3, 0, 3)]);
    }
    let mut edges = vec![(0, 2, 3), (1, 2, 3), (n - 2, n - 1, 3), (n - 2, n, 3)];
    edges.extend((2..n - 2).map(|i| (i, i + 1, 3)));
    symmetric(n + 1, &edges)
}

fn with_extra(matrix: &[Vec<u32>], word: Word, exponent: usize) -> Result<Presentation> {
    Presentation::coxeter(matrix)?.with_relator(power(&word, exponent))
}

/// Generator indices `a, a+1, ..., b` (empty when `a > b`).
fn up(a: usize, b: usize) -> impl Iterator<Item = usize> {
    a..=b
}

/// Generator indices `a, a-1, ..., b` (empty when `a < b`).
fn down(a: usize, b: usize) -> impl Iterator<Item = usize> {
    (b..=a).rev()
}

/// The presentation of the toroid group: the Coxeter group of the linear
/// diagram and the extra relator
/// `(g_0 g_1 ... g_{n-1} g_n g_{n-1} ... g_k)^{ks}`.
pub fn cubic_toroid_presentation(p: &ToroidParams) -> Result<Presentation> {
    let n = p.n;
    let mut w: Word = up(0, n).collect();
    if p.k < n {
        w.extend(down(n - 1, p.k));
    }
    with_extra(&linear_matrix(n), w, p.k * p.s)
}

/// The presentation of the halving group at `(0, 1)`; generator 0 is
/// `g_0 g_1 g_0`. The case `k = 2` always uses the even-case relator.
pub fn halved_presentation(p: &ToroidParams) -> Result<Presentation> {
    if predict_degenerate_leaf(p) {
        return Err(Error::UnsupportedCase(format!("({},{},{}) has a degenerate leaf", p.n, p.k, p.s)));
    }
    let (n, k, s) = (p.n, p.k, p.s);
    let m = halved_matrix(n);
    if k == 1 {
        // g0~ g2 ... gn g_{n-1} ... g2 g1
        let w: Word = [0].into_iter().chain(up(2, n)).chain(down(n - 1, 1)).collect();
        let e = if s % 2 == 1 { 2 * s } else { s };
        return with_extra(&m, w, e);
    }
    if k == n && n % 2 == 1 && s % 2 == 1 {
        let w: Word = [0].into_iter().chain(up(2, n)).chain(up(1, n)).collect();
        return with_extra(&m, w, n * s);
    }
    // k in {2, n} with k or s even.
    let tail: Vec<usize> = if k < n { down(n - 1, k).collect() } else { Vec::new() };
    let mut w: Word = vec![0];
    w.extend(up(2, n));
    w.extend(&tail);
    w.push(1);
    w.extend(up(2, n));
    w.extend(&tail);
    with_extra(&m, w, k * s / 2)
}

/// The presentation of the halving group of the halved group at
/// `(n, n-1)`; generator 0 is `g_0 g_1 g_0` and generator `n` is
/// `g_n g_{n-1} g_n`.
pub fn double_halved_presentation(p: &ToroidParams) -> Result<Presentation> {
    if double_halving_excluded(p) {
        return Err(Error::UnsupportedCase(format!("({},{},{}) is excluded from double halving", p.n, p.k, p.s)));
    }
    let (n, k, s) = (p.n, p.k, p.s);
    let m = double_halved_matrix(n);
    let odd_s = s % 2 == 1;
    let (w, e): (Word, usize) = match k {
        1 => {
            let w = [0].into_iter().chain(up(2, n)).chain(down(n - 2, 1)).collect();
            (w, if odd_s { 2 * s } else { s })
        }
        2 if n == 3 => (vec![0, 2, 1, 3, 1, 2], s),
        2 => {
            let half: Vec<usize> = up(2, n).chain(down(n - 2, 2)).collect();
            let mut w = vec![0];
            w.extend(&half);
            w.push(1);
            w.extend(&half);
            (w, s)
        }
        _ => {
            let w = [0].into_iter().chain(up(2, n - 1)).chain(up(1, n - 2)).chain([n]).collect();
            (w, if n % 2 == 1 && odd_s { n * s } else { n * s / 2 })
        }
    };
    with_extra(&m, w, e)
}
