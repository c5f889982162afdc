//! Integer group rings over the cyclic group `C_n` and the dihedral group
//! `D_n`, with checked arithmetic throughout.
//!
//! A [`CyclicRingElem`] is a coefficient vector indexed by exponents of the
//! generator: index `i` carries the coefficient of `x^i`. Multiplication is
//! schoolbook cyclic convolution; at the moduli this crate handles,
//! exactness matters and an FFT would not.
//!
//! A [`DihedralRingElem`] keeps the normal form `P + Qτ` with `P, Q` in the
//! cyclic ring; the defining relation `τ x = x^{−1} τ` is applied eagerly by
//! the multiplication, so elements never leave the normal form.
//!
//! Overflow anywhere is an error, never a wraparound: the verifiers downstream
//! compare exact integers, and a silent wrap would forge a verdict.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::dihedrant::DihedrantSpec;
use crate::error::{Error, Result};
use crate::multiset::ResidueMultiset;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CyclicRingElem {
    modulus: usize,
    coeffs: Vec<i64>,
}

impl CyclicRingElem {
    pub fn zero(n: usize) -> Self {
        assert!(n > 0, "modulus must be positive");
        CyclicRingElem { modulus: n, coeffs: vec![0; n] }
    }

    /// The ring identity `e = x^0`.
    pub fn identity(n: usize) -> Self {
        let mut e = Self::zero(n);
        e.coeffs[0] = 1;
        e
    }

    /// The sum of all group elements (every coefficient 1).
    pub fn all_ones(n: usize) -> Self {
        CyclicRingElem { modulus: n, coeffs: vec![1; n] }
    }

    pub fn from_coeffs(coeffs: Vec<i64>) -> Self {
        assert!(!coeffs.is_empty(), "modulus must be positive");
        CyclicRingElem { modulus: coeffs.len(), coeffs }
    }

    /// The sum of a set of exponents, each with coefficient 1.
    pub fn from_exponents(n: usize, exponents: &[usize]) -> Self {
        let mut elem = Self::zero(n);
        for &e in exponents {
            elem.coeffs[e % n] += 1;
        }
        elem
    }

    /// The sum of a multiset of exponents, multiplicities as coefficients.
    pub fn from_multiset(ms: &ResidueMultiset) -> Result<Self> {
        let coeffs = ms
            .counts()
            .iter()
            .map(|&c| i64::try_from(c).map_err(|_| Error::Overflow))
            .collect::<Result<Vec<_>>>()?;
        Ok(CyclicRingElem { modulus: ms.modulus(), coeffs })
    }

    pub fn modulus(&self) -> usize {
        self.modulus
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> i64 {
        self.coeffs[i % self.modulus]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    fn check_same_modulus(&self, other: &Self) -> Result<()> {
        if self.modulus != other.modulus {
            return Err(Error::ModulusMismatch { left: self.modulus, right: other.modulus });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_modulus(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(&a, &b)| a.checked_add(b).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()?;
        Ok(CyclicRingElem { modulus: self.modulus, coeffs })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_same_modulus(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(&a, &b)| a.checked_sub(b).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()?;
        Ok(CyclicRingElem { modulus: self.modulus, coeffs })
    }

    pub fn scale(&self, k: i64) -> Result<Self> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|&a| a.checked_mul(k).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()?;
        Ok(CyclicRingElem { modulus: self.modulus, coeffs })
    }

    /// Ring product: cyclic convolution of the coefficient vectors.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_same_modulus(other)?;
        let n = self.modulus;
        let mut coeffs = vec![0i64; n];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                if b == 0 {
                    continue;
                }
                let t = a.checked_mul(b).ok_or(Error::Overflow)?;
                let k = (i + j) % n;
                coeffs[k] = coeffs[k].checked_add(t).ok_or(Error::Overflow)?;
            }
        }
        Ok(CyclicRingElem { modulus: n, coeffs })
    }

    /// The canonical involution `x^i ↦ x^{−i}`: coefficient at `i` moves to
    /// `(−i) mod n`.
    pub fn involution(&self) -> Self {
        let n = self.modulus;
        let mut coeffs = vec![0i64; n];
        for (i, &c) in self.coeffs.iter().enumerate() {
            coeffs[(n - i) % n] = c;
        }
        CyclicRingElem { modulus: n, coeffs }
    }

    /// Sum of all coefficients (the image under the trivial character).
    pub fn augmentation(&self) -> Result<i64> {
        self.coeffs
            .iter()
            .try_fold(0i64, |acc, &c| acc.checked_add(c).ok_or(Error::Overflow))
    }
}

impl fmt::Display for CyclicRingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            match (c, i) {
                (c, 0) => write!(f, "{c}e")?,
                (1, 1) => write!(f, "x")?,
                (1, i) => write!(f, "x^{i}")?,
                (c, 1) => write!(f, "{c}x")?,
                (c, i) => write!(f, "{c}x^{i}")?,
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// `a + inv(a)`; for a set element this is the two-way (undirected) closure
/// whose character values control the DSRG condition.
pub fn symmetrized(a: &CyclicRingElem) -> Result<CyclicRingElem> {
    a.add(&a.involution())
}

/// `X̄ + X̄^{(−1)}` for an exponent set `X` with `0 ∉ X` (loop-free).
pub fn symmetrized_set(n: usize, x: &[usize]) -> Result<CyclicRingElem> {
    if x.iter().any(|&e| e % n == 0) {
        return Err(Error::LoopElement);
    }
    symmetrized(&CyclicRingElem::from_exponents(n, x))
}

/// An element `P + Qτ` of the integer group ring over `D_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DihedralRingElem {
    p: CyclicRingElem,
    q: CyclicRingElem,
}

impl DihedralRingElem {
    pub fn new(p: CyclicRingElem, q: CyclicRingElem) -> Result<Self> {
        if p.modulus() != q.modulus() {
            return Err(Error::ModulusMismatch { left: p.modulus(), right: q.modulus() });
        }
        Ok(DihedralRingElem { p, q })
    }

    pub fn modulus(&self) -> usize {
        self.p.modulus()
    }

    /// The `C_n` part `P`.
    pub fn rotation_part(&self) -> &CyclicRingElem {
        &self.p
    }

    /// The `τ`-coset part `Q`.
    pub fn reflection_part(&self) -> &CyclicRingElem {
        &self.q
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        Ok(DihedralRingElem { p: self.p.add(&other.p)?, q: self.q.add(&other.q)? })
    }

    /// Product in the dihedral group ring. With `τ x = x^{−1} τ`:
    /// `(P₁ + Q₁τ)(P₂ + Q₂τ) = (P₁P₂ + Q₁·inv(Q₂)) + (P₁Q₂ + Q₁·inv(P₂))τ`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        let p = self.p.mul(&other.p)?.add(&self.q.mul(&other.q.involution())?)?;
        let q = self.p.mul(&other.q)?.add(&self.q.mul(&other.p.involution())?)?;
        Ok(DihedralRingElem { p, q })
    }
}

/// The connection element `S̄ = X̄ + Ȳτ` of a dihedrant.
pub fn connection_element(spec: &DihedrantSpec) -> DihedralRingElem {
    DihedralRingElem {
        p: CyclicRingElem::from_exponents(spec.n(), spec.x()),
        q: CyclicRingElem::from_exponents(spec.n(), spec.y()),
    }
}

/// The square of the connection element: its `τ`-part equals `Ȳ·(X̄ + inv X̄)`
/// and its rotation part equals `X̄² + Ȳ·inv(Ȳ)`: exactly the two left-hand
/// sides the group-ring verifier compares against.
pub fn square_connection(spec: &DihedrantSpec) -> Result<DihedralRingElem> {
    let s = connection_element(spec);
    s.mul(&s)
}
