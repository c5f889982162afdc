//! The input datum of the whole crate: a dihedrant `Dih(n, X, Y)`.
//!
//! Vertices are the elements of the dihedral group of order `2n`, written
//! `x^0, …, x^{n−1}, x^0 τ, …, x^{n−1} τ`; the connection set is `X ∪ Yτ`
//! for exponent sets `X ⊆ {1, …, n−1}` (no loops, so `0 ∉ X`) and
//! `Y ⊆ {0, …, n−1}`.

use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DihedrantSpec {
    n: usize,
    x: Vec<usize>,
    y: Vec<usize>,
}

impl DihedrantSpec {
    /// Build a dihedrant. Inputs are reduced mod `n`, then validated:
    /// `0 ∈ X` and repeated residues are rejected.
    pub fn new(n: usize, x: &[i64], y: &[i64]) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroModulus);
        }
        let reduce = |rs: &[i64]| -> Result<Vec<usize>> {
            let mut out: Vec<usize> = rs.iter().map(|&r| r.rem_euclid(n as i64) as usize).collect();
            out.sort_unstable();
            for w in out.windows(2) {
                if w[0] == w[1] {
                    return Err(Error::DuplicateResidue { residue: w[0] });
                }
            }
            Ok(out)
        };
        let x = reduce(x)?;
        let y = reduce(y)?;
        if x.first() == Some(&0) {
            return Err(Error::LoopElement);
        }
        Ok(DihedrantSpec { n, x, y })
    }

    /// `Dih(n, X, X)`.
    pub fn with_equal_sets(n: usize, x: &[i64]) -> Result<Self> {
        Self::new(n, x, x)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Vertex count of the graph, `N = 2n`.
    pub fn vertex_count(&self) -> usize {
        2 * self.n
    }

    /// Rotation exponents, sorted ascending.
    pub fn x(&self) -> &[usize] {
        &self.x
    }

    /// Reflection exponents, sorted ascending.
    pub fn y(&self) -> &[usize] {
        &self.y
    }

    /// Degree `k = |X| + |Y|`.
    pub fn degree(&self) -> usize {
        self.x.len() + self.y.len()
    }

    pub fn x_contains(&self, r: usize) -> bool {
        self.x.binary_search(&(r % self.n)).is_ok()
    }

    pub fn y_contains(&self, r: usize) -> bool {
        self.y.binary_search(&(r % self.n)).is_ok()
    }

    /// The complement dihedrant: connection set `D_n ∖ ({e} ∪ X ∪ Yτ)`,
    /// i.e. `X' = Z_n ∖ ({0} ∪ X)` and `Y' = Z_n ∖ Y`.
    pub fn complement(&self) -> DihedrantSpec {
        let x = (1..self.n).filter(|&r| !self.x_contains(r)).collect();
        let y = (0..self.n).filter(|&r| !self.y_contains(r)).collect();
        DihedrantSpec { n: self.n, x, y }
    }

    /// Replace `Y` with `Y + b` (conjugate-translate the reflection part).
    pub fn shift_y(&self, b: i64) -> DihedrantSpec {
        let n = self.n as i64;
        let mut y: Vec<usize> = self
            .y
            .iter()
            .map(|&r| ((r as i64 + b).rem_euclid(n)) as usize)
            .collect();
        y.sort_unstable();
        DihedrantSpec { n: self.n, x: self.x.clone(), y }
    }
}

impl fmt::Display for DihedrantSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |f: &mut fmt::Formatter<'_>, v: &[usize]| -> fmt::Result {
            write!(f, "{{")?;
            for (i, r) in v.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{r}")?;
            }
            write!(f, "}}")
        };
        write!(f, "Dih({},", self.n)?;
        list(f, &self.x)?;
        write!(f, ",")?;
        list(f, &self.y)?;
        write!(f, ")")
    }
}
