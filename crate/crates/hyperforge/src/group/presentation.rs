//! Presentations of groups generated by involutions.
//!
//! A word is a sequence of generator indices. Every generator is an
//! involution, so inverses never appear and the relators `g^2` are implicit.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A word in the generators.
pub type Word = Vec<usize>;

/// `ngens` involutory generators subject to `relators`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Presentation {
    /// Number of generators.
    pub ngens: usize,
    /// Relators, each a word equal to the identity.
    pub relators: Vec<Word>,
}

impl Presentation {
    /// Builds a presentation, checking every generator index.
    pub fn new(ngens: usize, relators: Vec<Word>) -> Result<Self> {
        let p = Presentation { ngens, relators };
        p.validate()?;
        Ok(p)
    }

    /// Checks that every letter names an existing generator.
    pub fn validate(&self) -> Result<()> {
        for r in &self.relators {
            check_word(self.ngens, r)?;
        }
        Ok(())
    }

    /// The Coxeter presentation of a symmetric matrix: relators
    /// `(g_i g_j)^{m_ij}` for `i < j`; an entry `0` means no relation.
    pub fn coxeter(matrix: &[Vec<u32>]) -> Result<Self> {
        let n = matrix.len();
        let mut relators = Vec::new();
        for i in 0..n {
            if matrix[i].len() != n {
                return Err(Error::InvalidPresentation("Coxeter matrix is not square".into()));
            }
            for j in i + 1..n {
                if matrix[i][j] != matrix[j][i] {
                    return Err(Error::InvalidPresentation(format!("Coxeter matrix is not symmetric at ({i},{j})")));
                }
                match matrix[i][j] {
                    0 => {}
                    1 => return Err(Error::InvalidPresentation(format!("off-diagonal entry 1 at ({i},{j})"))),
                    m => relators.push(power(&[i, j], m as usize)),
                }
            }
        }
        Presentation::new(n, relators)
    }

    /// Adds a relator.
    pub fn with_relator(mut self, r: Word) -> Result<Self> {
        check_word(self.ngens, &r)?;
        self.relators.push(r);
        Ok(self)
    }

    /// Compact JSON `{"ngens":n,"relators":[[...],...]}`.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("presentations always serialise")
    }

    /// Parses and validates the JSON form.
    pub fn from_json(text: &str) -> Result<Self> {
        let p: Presentation = serde_json::from_str(text)?;
        p.validate()?;
        Ok(p)
    }
}

/// Checks that every letter of `w` is below `ngens`.
pub fn check_word(ngens: usize, w: &[usize]) -> Result<()> {
    match w.iter().find(|&&x| x >= ngens) {
        Some(x) => Err(Error::InvalidPresentation(format!("generator {x} out of range (ngens = {ngens})"))),
        None => Ok(()),
    }
}

/// `w` repeated `e` times.
pub fn power(w: &[usize], e: usize) -> Word {
    w.iter().copied().cycle().take(w.len() * e).collect()
}

/// Cancels adjacent equal letters, cyclically.
pub fn cyclically_reduce(w: &[usize]) -> Word {
    let mut out: Vec<usize> = Vec::with_capacity(w.len());
    for &x in w {
        if out.last() == Some(&x) {
            out.pop();
        } else {
            out.push(x);
        }
    }
    let (mut lo, mut hi) = (0, out.len());
    while hi - lo >= 2 && out[lo] == out[hi - 1] {
        lo += 1;
        hi -= 1;
    }
    out[lo..hi].to_vec()
}

/// Cancels adjacent equal letters.
pub fn freely_reduce(w: &[usize]) -> Word {
    let mut out: Vec<usize> = Vec::with_capacity(w.len());
    for &x in w {
        if out.last() == Some(&x) {
            out.pop();
        } else {
            out.push(x);
        }
    }
    out
}
