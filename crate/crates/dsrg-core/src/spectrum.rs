//! Characters of `C_n` and the Fourier transform on `Z_n`.
//!
//! For a function `f` on `Z_n` (a multiset's multiplicity function, or a
//! ring element's coefficient vector) the transform is
//! `(Ff)(z) = Σ_i f(i)·ζ_n^{iz}` with `ζ_n = exp(2πi/n)`; equivalently,
//! `(Ff)(z)` is the character `χ_z` applied to the corresponding group-ring
//! element. Values are computed in `f64` complex arithmetic and *snapped*
//! to integers within an explicit tolerance; every accept/reject decision
//! that matters is re-derived downstream from exact integer identities, so
//! the float layer is diagnostic.
//!
//! The module also carries the arithmetic structure theory used by the
//! classifier: Ramanujan sums (transforms of unit-group orbits), orbit
//! decompositions of rational-spectrum functions, the support/gcd data of a
//! two-valued spectrum, translation stabilizers, and coset-structure
//! extraction for functions whose nonprincipal spectrum is divisible by a
//! constant.

use alloc::vec::Vec;
use core::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::multiset::{self, ResidueMultiset};
use crate::numtheory;
use crate::ring::CyclicRingElem;

/// Default integer-snapping tolerance, `10⁻⁶·n`.
pub fn default_tolerance(n: usize) -> f64 {
    1e-6 * n as f64
}

/// The Fourier transform of a function on `Z_n`, with a snapping tolerance.
#[derive(Debug, Clone)]
pub struct SpectrumTable {
    modulus: usize,
    values: Vec<Complex64>,
    tolerance: f64,
}

impl SpectrumTable {
    fn transform<F: Fn(usize) -> f64>(n: usize, f: F, tolerance: f64) -> Self {
        // One table of n-th roots of unity; summation in ascending i so the
        // result is independent of everything but the input.
        let roots: Vec<Complex64> = (0..n)
            .map(|j| {
                let theta = 2.0 * PI * j as f64 / n as f64;
                Complex64::new(libm::cos(theta), libm::sin(theta))
            })
            .collect();
        let values = (0..n)
            .map(|z| {
                let mut acc = Complex64::new(0.0, 0.0);
                for i in 0..n {
                    let c = f(i);
                    if c != 0.0 {
                        acc += c * roots[(i * z) % n];
                    }
                }
                acc
            })
            .collect();
        SpectrumTable { modulus: n, values, tolerance }
    }

    pub fn of_multiset(ms: &ResidueMultiset, tolerance: f64) -> Self {
        Self::transform(ms.modulus(), |i| ms.count(i) as f64, tolerance)
    }

    pub fn of_ring_elem(elem: &CyclicRingElem, tolerance: f64) -> Self {
        Self::transform(elem.modulus(), |i| elem.coeff(i) as f64, tolerance)
    }

    /// Transform of an arbitrary complex vector (used to iterate `F`).
    pub fn of_values(values: &[Complex64], tolerance: f64) -> Self {
        let n = values.len();
        let roots: Vec<Complex64> = (0..n)
            .map(|j| {
                let theta = 2.0 * PI * j as f64 / n as f64;
                Complex64::new(libm::cos(theta), libm::sin(theta))
            })
            .collect();
        let out = (0..n)
            .map(|z| {
                let mut acc = Complex64::new(0.0, 0.0);
                for (i, &c) in values.iter().enumerate() {
                    acc += c * roots[(i * z) % n];
                }
                acc
            })
            .collect();
        SpectrumTable { modulus: n, values: out, tolerance }
    }

    pub fn modulus(&self) -> usize {
        self.modulus
    }

    pub fn tolerance(&self) -> f64 {
        self.tolerance
    }

    pub fn value(&self, z: usize) -> Complex64 {
        self.values[z % self.modulus]
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    /// The value at `z` as an exact integer, when it lies within tolerance
    /// of one.
    pub fn snapped(&self, z: usize) -> Option<i64> {
        let v = self.value(z);
        let r = libm::round(v.re);
        if (v.re - r).abs() <= self.tolerance && v.im.abs() <= self.tolerance {
            Some(r as i64)
        } else {
            None
        }
    }

    pub fn snapped_all(&self) -> Vec<Option<i64>> {
        (0..self.modulus).map(|z| self.snapped(z)).collect()
    }
}

/// Ramanujan sum: the transform of the orbit of order-`v` elements,
/// `μ(v/gcd(v,z)) · φ(v)/φ(v/gcd(v,z))`. Always an integer.
pub fn ramanujan(n: usize, v: usize, z: usize) -> Result<i64> {
    if v == 0 || n % v != 0 {
        return Err(Error::NotADivisor { n, v });
    }
    let g = numtheory::gcd(v as u64, z as u64);
    let w = v as u64 / g;
    let phi_v = numtheory::phi(v as u64);
    let phi_w = numtheory::phi(w);
    debug_assert_eq!(phi_v % phi_w, 0);
    Ok(numtheory::moebius(w) * (phi_v / phi_w) as i64)
}

/// A function on `Z_n` written as `Σ_v α_v · Δ_{O_v}` over the unit-group
/// orbits, possible exactly when the function is constant on every orbit,
/// which characterizes rational spectra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitDecomposition {
    modulus: usize,
    /// `(v, α_v)` for every divisor `v` of `n`, ascending in `v`.
    alpha: Vec<(usize, i64)>,
}

impl OrbitDecomposition {
    pub fn modulus(&self) -> usize {
        self.modulus
    }

    pub fn alpha(&self) -> &[(usize, i64)] {
        &self.alpha
    }

    pub fn alpha_of(&self, v: usize) -> Option<i64> {
        self.alpha.iter().find(|&&(d, _)| d == v).map(|&(_, a)| a)
    }

    /// Re-assemble the multiset `⊎_v α_v ⊕ O_v`.
    pub fn reconstruct(&self) -> ResidueMultiset {
        let n = self.modulus;
        let mut acc = ResidueMultiset::empty(n);
        for &(v, a) in &self.alpha {
            debug_assert!(a >= 0);
            let orb = multiset::orbit(n, v).expect("stored divisors divide n");
            acc = acc.union(&orb.scale(a as u64)).expect("same modulus");
        }
        acc
    }
}

/// Decompose a multiset into orbit indicators. Succeeds iff the multiplicity
/// is constant on every orbit; the error carries a witness pair from one
/// orbit with differing multiplicities.
pub fn orbit_decompose(f: &ResidueMultiset) -> Result<OrbitDecomposition> {
    let n = f.modulus();
    let mut alpha = Vec::new();
    for &v in &numtheory::divisors(n as u64) {
        let v = v as usize;
        let orb = multiset::orbit(n, v)?;
        let members = orb.support();
        let first = members[0];
        for &z in &members[1..] {
            if f.count(z) != f.count(first) {
                return Err(Error::NotOrbitConstant { v, z1: first, z2: z });
            }
        }
        alpha.push((v, f.count(first) as i64));
    }
    Ok(OrbitDecomposition { modulus: n, alpha })
}

/// Support and gcd data of a two-valued spectrum: the nonzero residues where
/// the transform equals `c`, the divisor `δ = gcd(n, gcd Γ)`, and the
/// divisors of `n` not dividing `δ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaData {
    pub c: i64,
    /// Nonzero `z` with spectrum value `c`, ascending.
    pub gamma: Vec<usize>,
    /// `gcd(n, gcd Γ)`; equals `n` when `Γ` is empty.
    pub delta: usize,
    /// Divisors of `n` that do not divide `delta`.
    pub s_set: Vec<usize>,
    /// Whether the zero set of the input equals the subgroup `(n/δ)Z_n`.
    pub zero_set_is_subgroup: bool,
}

/// Extract [`GammaData`] from a multiset whose nonprincipal spectrum takes
/// only the values `0` and `c` (within tolerance); otherwise the first
/// offending `z` is reported.
pub fn gamma_data(u: &ResidueMultiset, c: i64, tolerance: f64) -> Result<GammaData> {
    let n = u.modulus();
    let spec = SpectrumTable::of_multiset(u, tolerance);
    let mut gamma = Vec::new();
    for z in 1..n {
        match spec.snapped(z) {
            Some(0) => {}
            Some(v) if v == c => gamma.push(z),
            _ => return Err(Error::SpectrumNotTwoValued { z }),
        }
    }
    let g = gamma.iter().fold(0u64, |acc, &z| numtheory::gcd(acc, z as u64));
    let delta = numtheory::gcd(n as u64, g) as usize;
    let s_set = numtheory::divisors(n as u64)
        .into_iter()
        .map(|d| d as usize)
        .filter(|&d| delta % d != 0)
        .collect();
    let zero_set: Vec<usize> = (0..n).filter(|&z| u.count(z) == 0).collect();
    let expected = multiset::subgroup(n, n / delta)?.support();
    Ok(GammaData { c, gamma, delta, s_set, zero_set_is_subgroup: zero_set == expected })
}

/// The index of the `C_n` character that induces the `j`-th character of the
/// order-`v` quotient: `(n/v)·j`.
pub fn quotient_char_index(n: usize, v: usize, j: usize) -> Result<usize> {
    if v == 0 || n % v != 0 {
        return Err(Error::NotADivisor { n, v });
    }
    if j >= v {
        return Err(Error::IndexOutOfRange { index: j, bound: v });
    }
    Ok((n / v) * j)
}

/// Generator of the translation stabilizer `{a : Δ_U(·+a) = Δ_U(·)}`,
/// reported as the divisor `g` of `n` with stabilizer `gZ_n`. The input then
/// factors as `U = E′ + gZ_n` with `E′ ⊆ {0, …, g−1}`; `g = n` means only
/// the trivial shift fixes `U`.
pub fn period_subgroup(u: &ResidueMultiset) -> usize {
    let n = u.modulus();
    for &d in &numtheory::divisors(n as u64) {
        let d = d as usize;
        if (0..n).all(|z| u.count((z + d) % n) == u.count(z)) {
            return d;
        }
    }
    n
}

/// A multiset exhibited as a union of cosets: `E′` expanded by the subgroup
/// `width·Z_n` reproduces the input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureReport {
    pub modulus: usize,
    /// The coset width: representatives live in `{0, …, width−1}`.
    pub width: usize,
    /// Representatives with multiplicity, support inside `{0, …, width−1}`.
    pub e_set: ResidueMultiset,
}

impl StructureReport {
    /// Expand the representatives back to the full multiset.
    pub fn reconstruct(&self) -> ResidueMultiset {
        multiset::coset_expand(self.modulus, self.width, &self.e_set)
            .expect("representatives fit the stored width")
    }
}

/// Check that a multiset whose nonprincipal spectrum values are all integer
/// multiples of `c` is a union of cosets of the predicted subgroup
/// (`(n/c)Z_n` for odd `c`, `(2n/c)Z_n` for even `c`) and extract
/// the representatives.
///
/// This is an instance-level verification: a failed hypothesis names the
/// offending `z`; a failed conclusion (which the structure theory rules out
/// for multiplicity ≤ 2 inputs) names the actual stabilizer.
pub fn coset_structure_mod_c(u: &ResidueMultiset, c: i64, tolerance: f64) -> Result<StructureReport> {
    assert!(c > 0, "the structure check is stated for positive c");
    let n = u.modulus();
    let spec = SpectrumTable::of_multiset(u, tolerance);
    for z in 1..n {
        match spec.snapped(z) {
            Some(v) if v % c == 0 => {}
            _ => return Err(Error::StructureHypothesisFailed { z }),
        }
    }
    let c = c as usize;
    let width = if c % 2 == 1 {
        if n % c != 0 {
            return Err(Error::NotADivisor { n, v: c });
        }
        n / c
    } else {
        if (2 * n) % c != 0 {
            return Err(Error::NotADivisor { n: 2 * n, v: c });
        }
        2 * n / c
    };
    if width == 0 || n % width != 0 {
        return Err(Error::NotADivisor { n, v: width.max(1) });
    }
    let period = period_subgroup(u);
    if width % period != 0 {
        return Err(Error::StructureConclusionFailed { period, expected_divisor: width });
    }
    let mut counts = alloc::vec![0u64; n];
    counts[..width].copy_from_slice(&u.counts()[..width]);
    let e_set = ResidueMultiset::from_counts(counts);
    Ok(StructureReport { modulus: n, width, e_set })
}

/// Exact test that every nonprincipal character value of the ring element of
/// `u` lies in `{0, c}`: equivalent to `Ū² − c·Ū` having all coefficients
/// equal, in which case that common coefficient `α = |U|·(|U|−c)/n` is
/// returned.
pub fn two_valued_exact(u: &CyclicRingElem, c: i64) -> Result<Option<i64>> {
    let w = u.mul(u)?.sub(&u.scale(c)?)?;
    let first = w.coeff(0);
    if w.coeffs().iter().all(|&x| x == first) {
        Ok(Some(first))
    } else {
        Ok(None)
    }
}

/// All nonempty multisets over `Z_n ∖ {0}` with multiplicity ≤ 2 whose
/// nonprincipal spectrum values lie in `{0, c}`, decided exactly via
/// [`two_valued_exact`], in base-3 counter order over the residues
/// `1, …, n−1` (residue 1 least significant).
pub fn two_valued_multisets(n: usize, c: i64) -> Vec<ResidueMultiset> {
    assert!(n >= 1);
    let digits = n - 1;
    let total: u64 = 3u64.pow(digits as u32);
    let mut out = Vec::new();
    for code in 1..total {
        let mut counts = alloc::vec![0u64; n];
        let mut rest = code;
        for r in 1..n {
            counts[r] = rest % 3;
            rest /= 3;
        }
        let ms = ResidueMultiset::from_counts(counts);
        let elem = CyclicRingElem::from_multiset(&ms).expect("counts ≤ 2 fit i64");
        if two_valued_exact(&elem, c).expect("desk-scale products fit i64").is_some() {
            out.push(ms);
        }
    }
    out
}
