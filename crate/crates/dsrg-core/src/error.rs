//! Crate-wide error type.
//!
//! `Error` covers precondition violations and out-of-regime inputs. A
//! *negative verdict* (a dihedrant that is simply not a DSRG) is not an
//! error; verifiers report that through [`crate::verify::NotDsrg`].

use core::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Two operands live over different moduli.
    ModulusMismatch { left: usize, right: usize },
    /// `v` was required to divide `n` but does not.
    NotADivisor { n: usize, v: usize },
    /// A coset index was outside `{0, …, width−1}`.
    CosetElementOutOfRange { element: usize, width: usize },
    /// Integer overflow in exact ring arithmetic.
    Overflow,
    /// `0 ∈ X` would put the identity in the connection set (a loop).
    LoopElement,
    /// A residue was outside `{0, …, n−1}` where reduction is not allowed.
    ResidueOutOfRange { residue: usize, modulus: usize },
    /// A residue occurred twice where a plain set was required.
    DuplicateResidue { residue: usize },
    /// The modulus must be positive.
    ZeroModulus,
    /// A function is not constant on the orbit of elements of order `v`;
    /// `z1` and `z2` witness the disagreement.
    NotOrbitConstant { v: usize, z1: usize, z2: usize },
    /// A nonprincipal spectrum value at `z` snapped to neither `0` nor the
    /// prescribed constant.
    SpectrumNotTwoValued { z: usize },
    /// A nonprincipal spectrum value at `z` is not an integer multiple of
    /// the prescribed modulus.
    StructureHypothesisFailed { z: usize },
    /// The input satisfied the spectral hypothesis but is not the expected
    /// union of cosets; `period` is its actual translation stabilizer.
    StructureConclusionFailed { period: usize, expected_divisor: usize },
    /// Generic index bound violation.
    IndexOutOfRange { index: usize, bound: usize },
    /// `n` is outside the supported range of an exhaustive sweep.
    RangeNotSupported { n: usize, min: usize, max: usize },
    /// Exactly one of `{j, partner}` must be selected; `both` tells which
    /// way the selection failed.
    TransversalViolation { j: usize, partner: usize, both: bool },
    /// A named construction/theorem condition failed; `witness` is the first
    /// offending residue or coefficient index.
    ConditionFailed { condition: &'static str, witness: usize },
    /// A verified DSRG matched neither classification case. Should never
    /// happen; reported instead of silently dropped.
    NoCaseMatched,
    /// Parameter tuple whose eigenvalue discriminant is not a perfect square.
    NotPerfectSquare { dsq: i64 },
    /// Eigenvalue multiplicities came out non-integral: parameters infeasible.
    NonIntegralMultiplicity,
    /// A generator produced a graph the adjacency oracle rejects or assigns
    /// different parameters to.
    OracleMismatch,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ModulusMismatch { left, right } => {
                write!(f, "modulus mismatch: {left} vs {right}")
            }
            Error::NotADivisor { n, v } => write!(f, "{v} does not divide {n}"),
            Error::CosetElementOutOfRange { element, width } => {
                write!(f, "coset index {element} out of range 0..{width}")
            }
            Error::Overflow => write!(f, "integer overflow in exact arithmetic"),
            Error::LoopElement => write!(f, "0 in X puts the identity in the connection set"),
            Error::ResidueOutOfRange { residue, modulus } => {
                write!(f, "residue {residue} out of range mod {modulus}")
            }
            Error::DuplicateResidue { residue } => {
                write!(f, "residue {residue} listed more than once")
            }
            Error::ZeroModulus => write!(f, "modulus must be positive"),
            Error::NotOrbitConstant { v, z1, z2 } => {
                write!(f, "not constant on the order-{v} orbit: f({z1}) != f({z2})")
            }
            Error::SpectrumNotTwoValued { z } => {
                write!(f, "spectrum value at z={z} is neither 0 nor the prescribed constant")
            }
            Error::StructureHypothesisFailed { z } => {
                write!(f, "spectrum value at z={z} is not divisible by the prescribed constant")
            }
            Error::StructureConclusionFailed { period, expected_divisor } => {
                write!(
                    f,
                    "translation stabilizer {period} does not divide the predicted coset width {expected_divisor}"
                )
            }
            Error::IndexOutOfRange { index, bound } => {
                write!(f, "index {index} out of range 0..{bound}")
            }
            Error::RangeNotSupported { n, min, max } => {
                write!(f, "n={n} outside supported range {min}..={max}")
            }
            Error::TransversalViolation { j, partner, both } => {
                if *both {
                    write!(f, "both {j} and {partner} chosen from the pair {{{j},{partner}}}")
                } else {
                    write!(f, "neither {j} nor {partner} chosen from the pair {{{j},{partner}}}")
                }
            }
            Error::ConditionFailed { condition, witness } => {
                write!(f, "condition {condition} fails at {witness}")
            }
            Error::NoCaseMatched => {
                write!(f, "verified DSRG matched no classification case")
            }
            Error::NotPerfectSquare { dsq } => {
                write!(f, "discriminant {dsq} is not a positive perfect square")
            }
            Error::NonIntegralMultiplicity => {
                write!(f, "eigenvalue multiplicities are not non-negative integers")
            }
            Error::OracleMismatch => {
                write!(f, "construction output rejected by the adjacency oracle")
            }
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
