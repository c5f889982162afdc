//! Construction generators, the `Dih(n, X, X)` classifier, and brute-force
//! enumeration oracles.
//!
//! The classifier rests on two coset families over a divisor `v` of `n`:
//!
//! - **case (a)** (`gen_c51`): `X = T⟨x^v⟩` for a transversal `T` picking
//!   exactly one of each pair `{j, v−j}`, so that `X ⊎ X^{(−1)}` covers
//!   `C_n ∖ ⟨x^v⟩` exactly once. Exact transversals exist only for odd `v`
//!   (an even `v` self-pairs `v/2`, which can never be covered exactly once).
//! - **case (b)** (`gen_c52`): `X = T′⟨x^{2v}⟩` with `v ∈ T′`, exactly one
//!   of `{j, 2v−j}` for the other pairs, and `X ∪ x^v X = C_n`.
//!
//! Every generated entry is re-verified by the adjacency oracle before it is
//! returned; [`classify_xx`] must (and, by the test sweeps, does) coincide
//! with the plain exhaustive search [`brute_force_xx`].

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::dihedrant::DihedrantSpec;
use crate::error::{Error, Result};
use crate::multiset::{self, ResidueMultiset};
use crate::numtheory;
use crate::ring::CyclicRingElem;
use crate::verify::{self, DsrgParams, NotDsrg};

/// Which coset family a classified set belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CaseTag {
    A,
    B,
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CaseTag::A => write!(f, "a"),
            CaseTag::B => write!(f, "b"),
        }
    }
}

/// One classified dihedrant `Dih(n, X, X)`: the witness `(case, v, T)` with
/// the expanded exponent set and its oracle-checked parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationEntry {
    pub case: CaseTag,
    pub n: usize,
    pub v: usize,
    /// Coset representatives: `T ⊆ {1..v−1}` for case (a), `T′ ⊆ {1..2v−1}`
    /// (containing `v`) for case (b).
    pub t_set: Vec<usize>,
    /// The expanded exponent set `X`, ascending.
    pub x: Vec<usize>,
    pub params: DsrgParams,
}

impl ClassificationEntry {
    fn sort_key(&self) -> (CaseTag, usize, Vec<usize>) {
        (self.case, self.v, self.t_set.clone())
    }
}

fn set_from(n: usize, elems: &[usize]) -> ResidueMultiset {
    let as_i64: Vec<i64> = elems.iter().map(|&e| e as i64).collect();
    ResidueMultiset::from_elements(n, &as_i64)
}

/// Check that `t` picks exactly one element of every pair `{j, v−j}` of
/// nonzero residues mod `v`, equivalently `T ⊎ (−T) = {1, …, v−1}` with
/// every multiplicity exactly 1. Fails for every even `v` (at the
/// self-paired `v/2`) and for `v < 3` (no pairs to pick from `{1}` when
/// `v = 2`; empty `T` is rejected by the caller for `v = 1`).
fn check_pair_transversal(v: usize, t: &[usize]) -> Result<()> {
    for &e in t {
        if e == 0 || e >= v {
            return Err(Error::CosetElementOutOfRange { element: e, width: v });
        }
    }
    let mut count = vec![0u8; v];
    for &e in t {
        count[e] += 1;
        count[(v - e) % v] += 1;
    }
    for j in 1..v {
        if count[j] != 1 {
            return Err(Error::TransversalViolation {
                j,
                partner: v - j,
                both: count[j] > 1,
            });
        }
    }
    Ok(())
}

/// Build the case (a) dihedrant for an odd divisor `v ≥ 3` of `n` and a pair
/// transversal `T`: `X = T⟨x^v⟩`, parameters
/// `(2n, n−l, (n−l)/2, (n−l)/2−l, (n−l)/2)` with `l = n/v`, re-checked by the
/// adjacency oracle.
pub fn gen_c51(n: usize, v: usize, t: &[usize]) -> Result<ClassificationEntry> {
    if v == 0 || n % v != 0 {
        return Err(Error::NotADivisor { n, v });
    }
    if v < 3 {
        return Err(Error::ConditionFailed { condition: "case (a) requires v >= 3", witness: v });
    }
    check_pair_transversal(v, t)?;
    let x = multiset::coset_expand(n, v, &set_from(n, t))?.support();
    let l = (n / v) as i64;
    let nn = n as i64;
    let params =
        DsrgParams::new(2 * nn, nn - l, (nn - l) / 2, (nn - l) / 2 - l, (nn - l) / 2);
    let spec = spec_xx(n, &x);
    match verify::verify_matrix(&spec) {
        Ok(p) if p == params => {}
        _ => return Err(Error::OracleMismatch),
    }
    let mut t_set = t.to_vec();
    t_set.sort_unstable();
    Ok(ClassificationEntry { case: CaseTag::A, n, v, t_set, x, params })
}

/// Build the case (b) dihedrant for `v ≥ 2` with `2v | n` and representatives
/// `T′ ⊆ {1, …, 2v−1}` satisfying
/// (i) `v ∈ T′`, (ii) exactly one of `{j, 2v−j}` for `j ∉ {0, v}`,
/// (iii) `T′ ∪ (T′+v)` covers `Z_{2v}`. Then `X = T′⟨x^{2v}⟩`, parameters
/// `(2n, n, n/2+l′, n/2−l′, n/2+l′)` with `l′ = n/(2v)`, oracle-checked.
pub fn gen_c52(n: usize, v: usize, t: &[usize]) -> Result<ClassificationEntry> {
    if v < 2 {
        return Err(Error::ConditionFailed { condition: "case (b) requires v >= 2", witness: v });
    }
    let w = 2 * v;
    if n % w != 0 {
        return Err(Error::NotADivisor { n, v: w });
    }
    for &e in t {
        if e == 0 || e >= w {
            return Err(Error::CosetElementOutOfRange { element: e, width: w });
        }
    }
    let mut member = vec![false; w];
    for &e in t {
        if member[e] {
            return Err(Error::DuplicateResidue { residue: e });
        }
        member[e] = true;
    }
    // (i) the involution coset representative must be chosen
    if !member[v] {
        return Err(Error::ConditionFailed { condition: "(i): v must lie in T'", witness: v });
    }
    // (ii) multiset identity: T' ⊎ (−T') covers each j ∉ {0, v} exactly once
    for j in 1..w {
        if j == v {
            continue;
        }
        let chosen = u8::from(member[j]) + u8::from(member[w - j]);
        if chosen != 1 {
            return Err(Error::TransversalViolation { j, partner: w - j, both: chosen > 1 });
        }
    }
    // (iii) T' ∪ (T'+v) covers Z_{2v}
    for r in 0..w {
        if !member[r] && !member[(r + w - v) % w] {
            return Err(Error::ConditionFailed { condition: "(iii): X ∪ x^v X = C_n", witness: r });
        }
    }
    let x = multiset::coset_expand(n, w, &set_from(n, t))?.support();
    let l = (n / w) as i64;
    let nn = n as i64;
    let params = DsrgParams::new(2 * nn, nn, nn / 2 + l, nn / 2 - l, nn / 2 + l);
    let spec = spec_xx(n, &x);
    match verify::verify_matrix(&spec) {
        Ok(p) if p == params => {}
        _ => return Err(Error::OracleMismatch),
    }
    let mut t_set = t.to_vec();
    t_set.sort_unstable();
    Ok(ClassificationEntry { case: CaseTag::B, n, v, t_set, x, params })
}

fn spec_xx(n: usize, x: &[usize]) -> DihedrantSpec {
    let xi: Vec<i64> = x.iter().map(|&e| e as i64).collect();
    DihedrantSpec::with_equal_sets(n, &xi).expect("generated sets are loop-free")
}

/// Which construction family to enumerate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConstructionKind {
    C51,
    C52,
}

/// All transversals for case (a) at divisor `v`, each sorted, the list in
/// lexicographic order. Empty when no exact transversal exists (even `v`).
fn case_a_transversals(v: usize) -> Vec<Vec<usize>> {
    if v < 3 {
        return Vec::new();
    }
    let pairs: Vec<(usize, usize)> = (1..v).filter(|&j| j <= v - j).map(|j| (j, v - j)).collect();
    // A self-paired midpoint (even v) admits no exact transversal.
    if pairs.iter().any(|&(j, p)| j == p) {
        return Vec::new();
    }
    let mut out = Vec::with_capacity(1 << pairs.len());
    for mask in 0u64..(1u64 << pairs.len()) {
        let mut t: Vec<usize> = pairs
            .iter()
            .enumerate()
            .map(|(b, &(j, p))| if mask >> b & 1 == 0 { j } else { p })
            .collect();
        t.sort_unstable();
        out.push(t);
    }
    out.sort();
    out
}

/// All candidate representative sets for case (b) at `v` (before the cover
/// condition (iii) is tested), each sorted, in lexicographic order.
fn case_b_candidates(v: usize) -> Vec<Vec<usize>> {
    let w = 2 * v;
    let pairs: Vec<(usize, usize)> = (1..v).map(|j| (j, w - j)).collect();
    let mut out = Vec::with_capacity(1 << pairs.len());
    for mask in 0u64..(1u64 << pairs.len()) {
        let mut t: Vec<usize> = pairs
            .iter()
            .enumerate()
            .map(|(b, &(j, p))| if mask >> b & 1 == 0 { j } else { p })
            .collect();
        t.push(v);
        t.sort_unstable();
        out.push(t);
    }
    out.sort();
    out
}

/// Exhaustively generate every valid `(v, T)` for one construction family,
/// ascending in `v` and lexicographic in `T`; every entry is oracle-verified.
pub fn enumerate_construction(n: usize, kind: ConstructionKind) -> Vec<ClassificationEntry> {
    let mut out = Vec::new();
    match kind {
        ConstructionKind::C51 => {
            for &v in &numtheory::divisors(n as u64) {
                let v = v as usize;
                if v < 3 {
                    continue;
                }
                for t in case_a_transversals(v) {
                    let entry = gen_c51(n, v, &t).expect("transversal construction is sound");
                    out.push(entry);
                }
            }
        }
        ConstructionKind::C52 => {
            for v in 2..=n / 2 {
                if n % (2 * v) != 0 {
                    continue;
                }
                for t in case_b_candidates(v) {
                    match gen_c52(n, v, &t) {
                        Ok(entry) => out.push(entry),
                        // only the cover condition (iii) may reject a candidate
                        Err(Error::ConditionFailed { .. }) => {}
                        Err(e) => panic!("even-coset construction unsound: {e}"),
                    }
                }
            }
        }
    }
    out
}

/// Classify every `X` with `Dih(n, X, X)` a genuine DSRG: the union of both
/// construction families, keyed on `X` (keeping the smallest-`v` witness if
/// two ever produced the same set), sorted by `(case, v, T)`.
pub fn classify_xx(n: usize) -> Vec<ClassificationEntry> {
    let mut entries = enumerate_construction(n, ConstructionKind::C51);
    entries.extend(enumerate_construction(n, ConstructionKind::C52));
    let mut by_x: Vec<ClassificationEntry> = Vec::new();
    for e in entries {
        match by_x.iter_mut().find(|prev| prev.x == e.x) {
            Some(prev) => {
                if e.v < prev.v {
                    *prev = e;
                }
            }
            None => by_x.push(e),
        }
    }
    by_x.sort_by_key(|e| e.sort_key());
    by_x
}

/// Exponent set from a bitmask: bit `i` selects residue `i + offset`.
fn mask_to_set(mask: u64, offset: usize) -> Vec<i64> {
    (0..64)
        .filter(|&i| mask >> i & 1 == 1)
        .map(|i| (i + offset) as i64)
        .collect()
}

/// Brute-force oracle over a half-open mask range (bit `i` of the mask is
/// residue `i+1`): every `X` in the range with `Dih(n, X, X)` accepted as a
/// genuine DSRG by the adjacency oracle, mask-ascending.
pub fn brute_force_xx_range(n: usize, lo: u64, hi: u64) -> Vec<(Vec<usize>, DsrgParams)> {
    let mut out = Vec::new();
    for mask in lo..hi {
        let x = mask_to_set(mask, 1);
        let spec = DihedrantSpec::new(n, &x, &x).expect("masked residues are in range");
        if let Ok(params) = verify::verify_matrix(&spec) {
            if params.is_genuine() {
                out.push((spec.x().to_vec(), params));
            }
        }
    }
    out
}

/// Exhaustive sweep over all `2^{n−1}` subsets `X ⊆ {1, …, n−1}` keeping the
/// genuine DSRGs, sorted by `(|X|, X)`. Supported for `3 ≤ n ≤ 16`.
pub fn brute_force_xx(n: usize) -> Result<Vec<(Vec<usize>, DsrgParams)>> {
    if !(3..=16).contains(&n) {
        return Err(Error::RangeNotSupported { n, min: 3, max: 16 });
    }
    let mut out = brute_force_xx_range(n, 0, 1u64 << (n - 1));
    out.sort_by(|a, b| (a.0.len(), &a.0).cmp(&(b.0.len(), &b.0)));
    Ok(out)
}

/// Brute-force oracle over general pairs, X-mask range as in
/// [`brute_force_xx_range`]; for every X-mask all `2^n` reflection sets `Y`
/// are tried.
pub fn brute_force_xy_range(n: usize, lo: u64, hi: u64) -> Vec<(Vec<usize>, Vec<usize>, DsrgParams)> {
    let mut out = Vec::new();
    for xmask in lo..hi {
        let x = mask_to_set(xmask, 1);
        for ymask in 0..(1u64 << n) {
            let y = mask_to_set(ymask, 0);
            let spec = DihedrantSpec::new(n, &x, &y).expect("masked residues are in range");
            if let Ok(params) = verify::verify_matrix(&spec) {
                if params.is_genuine() {
                    out.push((spec.x().to_vec(), spec.y().to_vec(), params));
                }
            }
        }
    }
    out
}

/// Exhaustive sweep over all pairs `(X ⊆ {1, …, n−1}, Y ⊆ {0, …, n−1})`
/// keeping the genuine DSRGs, sorted by `(|X|, X, |Y|, Y)`. Supported for
/// `3 ≤ n ≤ 8`.
pub fn brute_force_xy(n: usize) -> Result<Vec<(Vec<usize>, Vec<usize>, DsrgParams)>> {
    if !(3..=8).contains(&n) {
        return Err(Error::RangeNotSupported { n, min: 3, max: 8 });
    }
    let mut out = brute_force_xy_range(n, 0, 1u64 << (n - 1));
    out.sort_by(|a, b| {
        (a.0.len(), &a.0, a.1.len(), &a.1).cmp(&(b.0.len(), &b.0, b.1.len(), &b.1))
    });
    Ok(out)
}

/// Verify the odd-order two-set family conditions in the exact group ring:
/// (i) `X̄ + inv(X̄) = C̄_n − e` and (ii) `Ȳ·inv(Ȳ) − X̄·inv(X̄) = ε·C̄_n`
/// for `ε ∈ {0, 1}`. On success the dihedrant and its parameters
/// `(2n, n−1+ε, (n−1)/2+ε, (n−3)/2+ε, (n−1)/2+ε)` are returned,
/// oracle-verified.
pub fn check_t11(n: usize, x: &[i64], y: &[i64], eps: i64) -> Result<(DihedrantSpec, DsrgParams)> {
    if n < 3 || n % 2 == 0 {
        return Err(Error::ConditionFailed { condition: "family requires odd n >= 3", witness: n });
    }
    if !(eps == 0 || eps == 1) {
        return Err(Error::ConditionFailed { condition: "epsilon must be 0 or 1", witness: eps.unsigned_abs() as usize });
    }
    let xbar = ring_elem_of(n, x)?;
    let ybar = ring_elem_of(n, y)?;
    // (i)
    let lhs = xbar.add(&xbar.involution())?;
    let rhs = CyclicRingElem::all_ones(n).sub(&CyclicRingElem::identity(n))?;
    if let Some(i) = first_mismatch(&lhs, &rhs) {
        return Err(Error::ConditionFailed { condition: "(i)", witness: i });
    }
    // (ii)
    let lhs = ybar.mul(&ybar.involution())?.sub(&xbar.mul(&xbar.involution())?)?;
    let rhs = CyclicRingElem::all_ones(n).scale(eps)?;
    if let Some(i) = first_mismatch(&lhs, &rhs) {
        return Err(Error::ConditionFailed { condition: "(ii)", witness: i });
    }
    let spec = DihedrantSpec::new(n, x, y)?;
    let nn = n as i64;
    let params = DsrgParams::new(
        2 * nn,
        nn - 1 + eps,
        (nn - 1) / 2 + eps,
        (nn - 3) / 2 + eps,
        (nn - 1) / 2 + eps,
    );
    match verify::verify_matrix(&spec) {
        Ok(p) if p == params => Ok((spec, params)),
        _ => Err(Error::OracleMismatch),
    }
}

/// Report of the even-order family check: the printed parameter claim is
/// checked against the adjacency oracle and any disagreement is surfaced,
/// not suppressed.
#[derive(Debug, Clone, PartialEq)]
pub struct T13Report {
    pub spec: DihedrantSpec,
    /// The family's claimed parameters `(2n, n−1, n/2−1, n/2−1, n/2)`.
    pub printed: DsrgParams,
    /// What the adjacency oracle actually says.
    pub oracle: core::result::Result<DsrgParams, NotDsrg>,
    /// Whether the oracle confirms the claim.
    pub matches_printed: bool,
}

/// Verify the even-order family conditions with involution `c = x^{n/2}`:
/// (i) `X̄ + inv(X̄) = C̄_n − e − c`, (ii) `Y ∈ {X, X^{(−1)}}`,
/// (iii) `X̄·c = inv(X̄)`; then report the oracle verdict next to the printed
/// parameter claim.
pub fn check_t13(n: usize, x: &[i64], y: &[i64]) -> Result<T13Report> {
    if n < 4 || n % 2 == 1 {
        return Err(Error::ConditionFailed { condition: "family requires even n >= 4", witness: n });
    }
    let xbar = ring_elem_of(n, x)?;
    let ybar = ring_elem_of(n, y)?;
    let half = n / 2;
    // (i)
    let lhs = xbar.add(&xbar.involution())?;
    let rhs = CyclicRingElem::all_ones(n)
        .sub(&CyclicRingElem::identity(n))?
        .sub(&CyclicRingElem::from_exponents(n, &[half]))?;
    if let Some(i) = first_mismatch(&lhs, &rhs) {
        return Err(Error::ConditionFailed { condition: "(i)", witness: i });
    }
    // (ii)
    if ybar != xbar && ybar != xbar.involution() {
        let vs_x = first_mismatch(&ybar, &xbar).unwrap_or(0);
        return Err(Error::ConditionFailed { condition: "(ii)", witness: vs_x });
    }
    // (iii)
    let shifted = xbar.mul(&CyclicRingElem::from_exponents(n, &[half]))?;
    if let Some(i) = first_mismatch(&shifted, &xbar.involution()) {
        return Err(Error::ConditionFailed { condition: "(iii)", witness: i });
    }
    let spec = DihedrantSpec::new(n, x, y)?;
    let nn = n as i64;
    let printed = DsrgParams::new(2 * nn, nn - 1, nn / 2 - 1, nn / 2 - 1, nn / 2);
    let oracle = verify::verify_matrix(&spec);
    let matches_printed = oracle.as_ref().is_ok_and(|p| *p == printed);
    Ok(T13Report { spec, printed, oracle, matches_printed })
}

fn ring_elem_of(n: usize, residues: &[i64]) -> Result<CyclicRingElem> {
    if n == 0 {
        return Err(Error::ZeroModulus);
    }
    let mut reduced: Vec<usize> =
        residues.iter().map(|&r| r.rem_euclid(n as i64) as usize).collect();
    reduced.sort_unstable();
    for w in reduced.windows(2) {
        if w[0] == w[1] {
            return Err(Error::DuplicateResidue { residue: w[0] });
        }
    }
    Ok(CyclicRingElem::from_exponents(n, &reduced))
}

fn first_mismatch(a: &CyclicRingElem, b: &CyclicRingElem) -> Option<usize> {
    (0..a.modulus()).find(|&i| a.coeff(i) != b.coeff(i))
}

/// Recover the classification witness `(case, v, T)` of a verified
/// `Dih(n, X, X)`: `v = n/(μ−λ)` and the case is decided by testing the two
/// families' conditions on `X`. Exactly one matches for a genuine DSRG;
/// `NoCaseMatched` would falsify the classification and is reported loudly.
pub fn structure_report(n: usize, x: &[usize], params: &DsrgParams) -> Result<ClassificationEntry> {
    let diff = params.mu - params.lambda;
    if diff <= 0 || (n as i64) % diff != 0 {
        return Err(Error::NotADivisor { n, v: diff.unsigned_abs() as usize });
    }
    let v = n / diff as usize;
    let xm = set_from(n, x);
    let ux = xm.union(&xm.negate()).expect("same modulus");

    // case (a): X = T⟨x^v⟩ and X ⊎ X^{(−1)} covers C_n ∖ ⟨x^v⟩ exactly once
    {
        let t: Vec<usize> = x.iter().copied().filter(|&e| e < v).collect();
        let expanded = multiset::coset_expand(n, v, &set_from(n, &t))?;
        let cover = ResidueMultiset::full(n)
            .difference(&multiset::subgroup(n, v)?)
            .expect("same modulus");
        if expanded == xm && ux == cover {
            let spec = spec_xx(n, x);
            let oracle = verify::verify_matrix(&spec).map_err(|_| Error::OracleMismatch)?;
            if oracle != *params {
                return Err(Error::OracleMismatch);
            }
            return Ok(ClassificationEntry {
                case: CaseTag::A,
                n,
                v,
                t_set: t,
                x: x.to_vec(),
                params: *params,
            });
        }
    }

    // case (b): X = T′⟨x^{2v}⟩, X ⊎ X^{(−1)} = (C_n ∖ ⟨x^{2v}⟩) ⊎ x^v⟨x^{2v}⟩,
    // X ∪ x^v X = C_n
    let w = 2 * v;
    if n % w == 0 {
        let t: Vec<usize> = x.iter().copied().filter(|&e| e < w).collect();
        let expanded = multiset::coset_expand(n, w, &set_from(n, &t))?;
        let cover = ResidueMultiset::full(n)
            .difference(&multiset::subgroup(n, w)?)
            .expect("same modulus")
            .union(&multiset::coset_expand(n, w, &ResidueMultiset::singleton(n, v as i64))?)
            .expect("same modulus");
        let shift = xm.sumset(&ResidueMultiset::singleton(n, v as i64)).expect("same modulus");
        let covers_all = (0..n).all(|r| xm.count(r) > 0 || shift.count(r) > 0);
        if expanded == xm && ux == cover && covers_all {
            let spec = spec_xx(n, x);
            let oracle = verify::verify_matrix(&spec).map_err(|_| Error::OracleMismatch)?;
            if oracle != *params {
                return Err(Error::OracleMismatch);
            }
            return Ok(ClassificationEntry {
                case: CaseTag::B,
                n,
                v,
                t_set: t,
                x: x.to_vec(),
                params: *params,
            });
        }
    }

    Err(Error::NoCaseMatched)
}
