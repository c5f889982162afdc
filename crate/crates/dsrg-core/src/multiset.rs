//! Multisets of residues mod `n` with explicit multiplicity counts.
//!
//! A [`ResidueMultiset`] stores, for every residue `i` in `{0, …, n−1}`, how
//! many times it occurs. Plain sets are the special case where every count
//! is 0 or 1. Residues are canonicalized into `{0, …, n−1}` on construction,
//! so equality is plain structural equality.
//!
//! Besides pointwise union/scaling/difference, the module provides the
//! additive-group vocabulary of `Z_n`: negation, sumsets (convolution of the
//! multiplicity functions), the unit-group orbits `O_v`, the subgroups
//! `vZ_n`, and coset expansion of a set of coset representatives.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::numtheory;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ResidueMultiset {
    modulus: usize,
    counts: Vec<u64>,
}

impl ResidueMultiset {
    /// The empty multiset over `Z_n`.
    pub fn empty(n: usize) -> Self {
        assert!(n > 0, "modulus must be positive");
        ResidueMultiset { modulus: n, counts: vec![0; n] }
    }

    /// Build from an explicit count vector; `counts.len()` is the modulus.
    pub fn from_counts(counts: Vec<u64>) -> Self {
        assert!(!counts.is_empty(), "modulus must be positive");
        ResidueMultiset { modulus: counts.len(), counts }
    }

    /// Build from a list of (possibly repeated, possibly negative) integers,
    /// reduced mod `n`.
    pub fn from_elements(n: usize, elements: &[i64]) -> Self {
        let mut ms = Self::empty(n);
        let m = n as i64;
        for &e in elements {
            let r = e.rem_euclid(m) as usize;
            ms.counts[r] += 1;
        }
        ms
    }

    /// The full set `Z_n`, each residue once.
    pub fn full(n: usize) -> Self {
        assert!(n > 0, "modulus must be positive");
        ResidueMultiset { modulus: n, counts: vec![1; n] }
    }

    /// The singleton `{r mod n}`.
    pub fn singleton(n: usize, r: i64) -> Self {
        Self::from_elements(n, &[r])
    }

    pub fn modulus(&self) -> usize {
        self.modulus
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    /// Multiplicity of residue `i`.
    pub fn count(&self, i: usize) -> u64 {
        self.counts[i % self.modulus]
    }

    /// Total cardinality `|A| = Σ Δ_A(i)`.
    pub fn cardinality(&self) -> u64 {
        self.counts.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.iter().all(|&c| c == 0)
    }

    /// True when every multiplicity is 0 or 1.
    pub fn is_plain_set(&self) -> bool {
        self.counts.iter().all(|&c| c <= 1)
    }

    /// Residues with positive multiplicity, ascending.
    pub fn support(&self) -> Vec<usize> {
        (0..self.modulus).filter(|&i| self.counts[i] > 0).collect()
    }

    /// Elements listed with multiplicity, ascending.
    pub fn elements(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.cardinality() as usize);
        for (i, &c) in self.counts.iter().enumerate() {
            for _ in 0..c {
                out.push(i);
            }
        }
        out
    }

    fn check_same_modulus(&self, other: &Self) -> Result<()> {
        if self.modulus != other.modulus {
            return Err(Error::ModulusMismatch { left: self.modulus, right: other.modulus });
        }
        Ok(())
    }

    /// Multiset union: counts add pointwise.
    pub fn union(&self, other: &Self) -> Result<Self> {
        self.check_same_modulus(other)?;
        let counts = self
            .counts
            .iter()
            .zip(&other.counts)
            .map(|(&a, &b)| a + b)
            .collect();
        Ok(ResidueMultiset { modulus: self.modulus, counts })
    }

    /// Scalar multiple: every count times `k`.
    pub fn scale(&self, k: u64) -> Self {
        let counts = self.counts.iter().map(|&c| c * k).collect();
        ResidueMultiset { modulus: self.modulus, counts }
    }

    /// Multiset difference, clamped at zero pointwise.
    pub fn difference(&self, other: &Self) -> Result<Self> {
        self.check_same_modulus(other)?;
        let counts = self
            .counts
            .iter()
            .zip(&other.counts)
            .map(|(&a, &b)| a.saturating_sub(b))
            .collect();
        Ok(ResidueMultiset { modulus: self.modulus, counts })
    }

    /// `−A`: the multiplicity of `i` moves to `(−i) mod n`.
    pub fn negate(&self) -> Self {
        let n = self.modulus;
        let mut counts = vec![0; n];
        for (i, &c) in self.counts.iter().enumerate() {
            counts[(n - i) % n] = c;
        }
        ResidueMultiset { modulus: n, counts }
    }

    /// Sumset `A + B` with multiplicities counted: the convolution of the
    /// two multiplicity functions mod `n`, so `|A+B| = |A|·|B|`.
    pub fn sumset(&self, other: &Self) -> Result<Self> {
        self.check_same_modulus(other)?;
        let n = self.modulus;
        let mut counts = vec![0u64; n];
        for (i, &a) in self.counts.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.counts.iter().enumerate() {
                if b == 0 {
                    continue;
                }
                counts[(i + j) % n] += a * b;
            }
        }
        Ok(ResidueMultiset { modulus: n, counts })
    }
}

/// The orbit `O_v` of the unit group acting on `Z_n`: all residues of
/// additive order `v`, i.e. `{c·(n/v) : 1 ≤ c ≤ v, gcd(c, v) = 1}`.
/// Cardinality φ(v).
pub fn orbit(n: usize, v: usize) -> Result<ResidueMultiset> {
    if v == 0 || n % v != 0 {
        return Err(Error::NotADivisor { n, v });
    }
    let step = n / v;
    let mut ms = ResidueMultiset::empty(n);
    for c in 1..=v {
        if numtheory::gcd(c as u64, v as u64) == 1 {
            ms.counts[(c * step) % n] += 1;
        }
    }
    Ok(ms)
}

/// The subgroup `vZ_n = {0, v, 2v, …, n−v}` of order `n/v`.
pub fn subgroup(n: usize, v: usize) -> Result<ResidueMultiset> {
    if v == 0 || n % v != 0 {
        return Err(Error::NotADivisor { n, v });
    }
    let mut ms = ResidueMultiset::empty(n);
    let mut i = 0;
    while i < n {
        ms.counts[i] = 1;
        i += v;
    }
    Ok(ms)
}

/// Expand coset representatives: each element `t` of `T` (which must lie in
/// `{0, …, v−1}`) contributes the full coset `t + vZ_n` with `t`'s
/// multiplicity. Cardinality `|T|·n/v`.
pub fn coset_expand(n: usize, v: usize, t: &ResidueMultiset) -> Result<ResidueMultiset> {
    if v == 0 || n % v != 0 {
        return Err(Error::NotADivisor { n, v });
    }
    for i in v..t.modulus() {
        if t.count(i) > 0 {
            return Err(Error::CosetElementOutOfRange { element: i, width: v });
        }
    }
    let mut ms = ResidueMultiset::empty(n);
    for i in 0..v.min(t.modulus()) {
        let c = t.count(i);
        if c == 0 {
            continue;
        }
        let mut r = i;
        while r < n {
            ms.counts[r] += c;
            r += v;
        }
    }
    Ok(ms)
}

impl fmt::Display for ResidueMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        let mut first = true;
        for e in self.elements() {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
            first = false;
        }
        write!(f, "}}")
    }
}
