//! DSRG verifiers and the parameter engine.
//!
//! A digraph on `N` vertices with adjacency matrix `A` is a DSRG with
//! parameters `(N, k, μ, λ, t)` when `AJ = JA = kJ` and
//! `A² = tI + λA + μ(J − I − A)`. Three independent routes decide this for
//! a dihedrant:
//!
//! - [`verify_matrix`]: the adjacency oracle: build `A`, square it, read
//!   `(μ, λ, t)` off and check constancy everywhere. Exact integers.
//! - [`verify_group_ring`]: the connection-element identities
//!   `Ȳ·(X̄ + inv X̄) = (λ−μ)Ȳ + μC̄_n` and
//!   `X̄² + Ȳ·inv(Ȳ) = (t−μ)e + (λ−μ)X̄ + μC̄_n`. Exact integers.
//! - [`verify_spectral`]: the same identities after Fourier transform,
//!   checked in floating point. Diagnostic; the exact verifiers are
//!   authoritative.
//!
//! The two exact verifiers must agree on everything; that agreement is
//! swept exhaustively in the test suite.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::dihedrant::DihedrantSpec;
use crate::error::{Error, Result};
use crate::numtheory;
use crate::ring::{self, CyclicRingElem};
use crate::spectrum::{self, SpectrumTable};

/// A DSRG parameter tuple `(N, k, μ, λ, t)`.
///
/// `N` is the vertex count (for a dihedrant, twice the cyclic order; the
/// two are kept strictly apart to avoid a silent factor-2 bug).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DsrgParams {
    pub vertices: i64,
    pub k: i64,
    pub mu: i64,
    pub lambda: i64,
    pub t: i64,
}

impl DsrgParams {
    pub fn new(vertices: i64, k: i64, mu: i64, lambda: i64, t: i64) -> Self {
        DsrgParams { vertices, k, mu, lambda, t }
    }

    /// Genuine means `0 < t < k`: neither an undirected SRG (`t = k`) nor a
    /// doubly regular tournament (`t = 0`).
    pub fn is_genuine(&self) -> bool {
        0 < self.t && self.t < self.k
    }

    /// As the tuple `(N, k, μ, λ, t)`.
    pub fn as_tuple(&self) -> (i64, i64, i64, i64, i64) {
        (self.vertices, self.k, self.mu, self.lambda, self.t)
    }
}

impl fmt::Display for DsrgParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{},{})", self.vertices, self.k, self.mu, self.lambda, self.t)
    }
}

/// Integer eigenvalue data of a parameter tuple: `k > ρ > σ` with
/// multiplicities `1, m_ρ, m_σ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct EigenData {
    pub d: i64,
    pub rho: i64,
    pub sigma: i64,
    pub m_rho: i64,
    pub m_sigma: i64,
}

/// Why a dihedrant is not a DSRG. A negative verdict, not an error.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NotDsrg {
    /// `k = 0`: no connection set at all.
    EmptyConnectionSet,
    /// Some vertex misses the common degree (cannot happen for a Cayley
    /// graph; kept because the oracle checks it rather than assuming it).
    NotRegular { vertex: usize, out_degree: i64, in_degree: i64 },
    /// `(A²)_{vv}` differs between vertices.
    DiagonalNotConstant { vertex: usize, expected: i64, found: i64 },
    /// A two-path count `(A²)_{gh}` breaks constancy over arcs/non-arcs;
    /// `(g, h)` is the witness pair.
    PathCountNotConstant { g: usize, h: usize, is_arc: bool, expected: i64, found: i64 },
    /// A group-ring identity fails at a coefficient index.
    CoefficientMismatch { identity: u8, index: usize },
}

impl fmt::Display for NotDsrg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NotDsrg::EmptyConnectionSet => write!(f, "empty connection set"),
            NotDsrg::NotRegular { vertex, out_degree, in_degree } => {
                write!(f, "vertex {vertex} has degrees out={out_degree}/in={in_degree}")
            }
            NotDsrg::DiagonalNotConstant { vertex, expected, found } => {
                write!(f, "vertex {vertex} lies on {found} 2-cycles, expected {expected}")
            }
            NotDsrg::PathCountNotConstant { g, h, is_arc, expected, found } => {
                let kind = if *is_arc { "arc" } else { "non-arc" };
                write!(f, "{kind} ({g},{h}) has {found} two-paths, expected {expected}")
            }
            NotDsrg::CoefficientMismatch { identity, index } => {
                write!(f, "group-ring identity ({identity}) fails at coefficient {index}")
            }
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for NotDsrg {}

/// Dense 0/1 adjacency matrix of a dihedrant, vertices indexed
/// `x^i ↦ i` and `x^i τ ↦ n+i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdjacencyMatrix {
    dim: usize,
    data: Vec<u8>,
}

impl AdjacencyMatrix {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entry(&self, i: usize, j: usize) -> u8 {
        self.data[i * self.dim + j]
    }

    pub fn row(&self, i: usize) -> &[u8] {
        &self.data[i * self.dim..(i + 1) * self.dim]
    }
}

/// Build the adjacency matrix: `g → h` iff `g⁻¹h ∈ X ∪ Yτ`. With the fixed
/// vertex indexing the four blocks are
/// `A[i][j] = [j−i ∈ X]`, `A[i][n+j] = [j−i ∈ Y]`,
/// `A[n+i][j] = [i−j ∈ Y]`, `A[n+i][n+j] = [i−j ∈ X]` (differences mod n).
pub fn adjacency_matrix(spec: &DihedrantSpec) -> AdjacencyMatrix {
    let n = spec.n();
    let dim = 2 * n;
    let mut x_ind = vec![0u8; n];
    let mut y_ind = vec![0u8; n];
    for &r in spec.x() {
        x_ind[r] = 1;
    }
    for &r in spec.y() {
        y_ind[r] = 1;
    }
    let mut data = vec![0u8; dim * dim];
    for i in 0..n {
        for j in 0..n {
            let fwd = (j + n - i) % n;
            let bwd = (i + n - j) % n;
            data[i * dim + j] = x_ind[fwd];
            data[i * dim + n + j] = y_ind[fwd];
            data[(n + i) * dim + j] = y_ind[bwd];
            data[(n + i) * dim + n + j] = x_ind[bwd];
        }
    }
    AdjacencyMatrix { dim, data }
}

/// Adjacency-matrix DSRG oracle. `t` is read off the diagonal of `A²`, `λ`
/// off the lexicographically first arc, `μ` off the first non-arc (off the
/// arc value when the digraph is complete); constancy is then asserted over
/// every ordered pair, so the extraction order only fixes which witness a
/// failure reports.
pub fn verify_matrix(spec: &DihedrantSpec) -> core::result::Result<DsrgParams, NotDsrg> {
    let k = spec.degree() as i64;
    if k == 0 {
        return Err(NotDsrg::EmptyConnectionSet);
    }
    let a = adjacency_matrix(spec);
    let dim = a.dim();

    // AJ = JA = kJ: every out- and in-degree equals k.
    for v in 0..dim {
        let out: i64 = a.row(v).iter().map(|&b| b as i64).sum();
        let inn: i64 = (0..dim).map(|g| a.entry(g, v) as i64).sum();
        if out != k || inn != k {
            return Err(NotDsrg::NotRegular { vertex: v, out_degree: out, in_degree: inn });
        }
    }

    // Bit rows and columns make A² a popcount per entry.
    debug_assert!(dim <= 128, "desk-scale moduli only");
    let mut rows = vec![0u128; dim];
    let mut cols = vec![0u128; dim];
    for i in 0..dim {
        for j in 0..dim {
            if a.entry(i, j) == 1 {
                rows[i] |= 1u128 << j;
                cols[j] |= 1u128 << i;
            }
        }
    }
    let two_paths = |g: usize, h: usize| (rows[g] & cols[h]).count_ones() as i64;

    let t = two_paths(0, 0);
    for v in 1..dim {
        let found = two_paths(v, v);
        if found != t {
            return Err(NotDsrg::DiagonalNotConstant { vertex: v, expected: t, found });
        }
    }

    let mut lambda = None;
    let mut mu = None;
    'outer: for g in 0..dim {
        for h in 0..dim {
            if g == h {
                continue;
            }
            if a.entry(g, h) == 1 {
                if lambda.is_none() {
                    lambda = Some(two_paths(g, h));
                }
            } else if mu.is_none() {
                mu = Some(two_paths(g, h));
            }
            if lambda.is_some() && mu.is_some() {
                break 'outer;
            }
        }
    }
    let lambda = lambda.expect("k >= 1 guarantees an arc");
    let mu = mu.unwrap_or(lambda); // complete digraph: no non-arc constrains μ

    for g in 0..dim {
        for h in 0..dim {
            if g == h {
                continue;
            }
            let is_arc = a.entry(g, h) == 1;
            let expected = if is_arc { lambda } else { mu };
            let found = two_paths(g, h);
            if found != expected {
                return Err(NotDsrg::PathCountNotConstant { g, h, is_arc, expected, found });
            }
        }
    }

    Ok(DsrgParams::new(dim as i64, k, mu, lambda, t))
}

/// Group-ring DSRG verifier: solves for `(μ, λ, t)` from fixed coefficient
/// positions of `Ȳ·(X̄ + inv X̄)` and `X̄² + Ȳ·inv(Ȳ)`, then asserts both
/// identities at every coefficient. Exact integer arithmetic; agrees with
/// [`verify_matrix`] on verdict and parameters.
pub fn verify_group_ring(spec: &DihedrantSpec) -> core::result::Result<DsrgParams, NotDsrg> {
    let n = spec.n();
    let k = spec.degree() as i64;
    if k == 0 {
        return Err(NotDsrg::EmptyConnectionSet);
    }
    // Coefficients stay below 2n²; these cannot overflow i64 for any input
    // a DihedrantSpec admits.
    let xbar = CyclicRingElem::from_exponents(n, spec.x());
    let ybar = CyclicRingElem::from_exponents(n, spec.y());
    let u = ring::symmetrized(&xbar).expect("bounded coefficients");
    let lhs1 = ybar.mul(&u).expect("bounded coefficients");
    let lhs2 = xbar
        .mul(&xbar)
        .and_then(|sq| sq.add(&ybar.mul(&ybar.involution())?))
        .expect("bounded coefficients");

    let t = lhs2.coeff(0);
    let lambda = if let Some(&r) = spec.y().first() {
        lhs1.coeff(r)
    } else {
        // Y empty: k >= 1 forces X nonempty, and identity (2) at r ∈ X reads λ.
        lhs2.coeff(*spec.x().first().expect("k >= 1"))
    };
    let mu = if let Some(r) = (0..n).find(|&r| !spec.y_contains(r)) {
        lhs1.coeff(r)
    } else if let Some(r) = (1..n).find(|&r| !spec.x_contains(r)) {
        lhs2.coeff(r)
    } else {
        lambda // complete digraph: no coefficient constrains μ
    };

    for r in 0..n {
        let in_y = i64::from(spec.y_contains(r));
        let rhs1 = (lambda - mu) * in_y + mu;
        if lhs1.coeff(r) != rhs1 {
            return Err(NotDsrg::CoefficientMismatch { identity: 1, index: r });
        }
        let at_e = i64::from(r == 0);
        let in_x = i64::from(spec.x_contains(r));
        let rhs2 = (t - mu) * at_e + (lambda - mu) * in_x + mu;
        if lhs2.coeff(r) != rhs2 {
            return Err(NotDsrg::CoefficientMismatch { identity: 2, index: r });
        }
    }

    Ok(DsrgParams::new(2 * n as i64, k, mu, lambda, t))
}

/// Outcome of the floating-point spectral check.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectralReport {
    pub ok: bool,
    /// Largest absolute deviation over both identities and all `z`.
    pub worst_deviation: f64,
    /// Where it occurred.
    pub worst_z: usize,
}

/// Check the Fourier transforms of the two group-ring identities pointwise:
/// with `r(z)`, `s(z)` the transforms of `X̄`, `Ȳ`,
///
/// - `s·(r + conj r) = μnΔ₀ + (λ−μ)s`
/// - `r² + |s|² = (t−μ) + μnΔ₀ + (λ−μ)r`
///
/// within the given tolerance. Diagnostic only; the exact verifiers are
/// authoritative.
pub fn verify_spectral(spec: &DihedrantSpec, params: &DsrgParams, tolerance: f64) -> SpectralReport {
    let n = spec.n();
    let r = SpectrumTable::of_ring_elem(&CyclicRingElem::from_exponents(n, spec.x()), tolerance);
    let s = SpectrumTable::of_ring_elem(&CyclicRingElem::from_exponents(n, spec.y()), tolerance);
    let (mu, lambda, t) = (params.mu as f64, params.lambda as f64, params.t as f64);
    let nf = n as f64;
    let mut worst = 0.0f64;
    let mut worst_z = 0usize;
    for z in 0..n {
        let delta0 = if z == 0 { 1.0 } else { 0.0 };
        let rv = r.value(z);
        let sv = s.value(z);
        let dev1 = (sv * (rv + rv.conj()) - (mu * nf * delta0 + (lambda - mu) * sv)).norm();
        let dev2 = (rv * rv + sv * sv.conj()
            - ((t - mu) + mu * nf * delta0 + (lambda - mu) * rv))
            .norm();
        let dev = dev1.max(dev2);
        if dev > worst {
            worst = dev;
            worst_z = z;
        }
    }
    SpectralReport { ok: worst <= tolerance, worst_deviation: worst, worst_z }
}

/// Exact two-valued-spectrum test for `U = X ⊎ (−X)`: returns `Some(α)` with
/// `Ū² − c·Ū = α·C̄_n` when every nonprincipal character value of `Ū` lies in
/// `{0, c}` (then `α = |U|·(|U|−c)/n`), `None` otherwise.
pub fn quadratic_identity_check(n: usize, x: &[usize], c: i64) -> Result<Option<i64>> {
    let u = ring::symmetrized_set(n, x)?;
    spectrum::two_valued_exact(&u, c)
}

/// Eigenvalue data of a parameter tuple:
/// `ρ = (−(μ−λ)+d)/2`, `σ = (−(μ−λ)−d)/2` with `d² = (μ−λ)² + 4(t−μ)`, and
/// multiplicities `m_ρ = −(k+σ(N−1))/(ρ−σ)`, `m_σ = (k+ρ(N−1))/(ρ−σ)`.
/// Errors when `d²` is not a positive perfect square or the multiplicities
/// are not non-negative integers.
pub fn eigen_data(params: &DsrgParams) -> Result<EigenData> {
    let DsrgParams { vertices: n, k, mu, lambda, t } = *params;
    let dsq = (mu - lambda) * (mu - lambda) + 4 * (t - mu);
    let d = match numtheory::perfect_sqrt(dsq) {
        Some(d) if d > 0 => d,
        _ => return Err(Error::NotPerfectSquare { dsq }),
    };
    debug_assert_eq!((d - (mu - lambda)).rem_euclid(2), 0);
    let rho = (-(mu - lambda) + d) / 2;
    let sigma = (-(mu - lambda) - d) / 2;
    let num_rho = -(k + sigma * (n - 1));
    let num_sigma = k + rho * (n - 1);
    if num_rho % d != 0 || num_sigma % d != 0 {
        return Err(Error::NonIntegralMultiplicity);
    }
    let m_rho = num_rho / d;
    let m_sigma = num_sigma / d;
    if m_rho < 0 || m_sigma < 0 {
        return Err(Error::NonIntegralMultiplicity);
    }
    Ok(EigenData { d, rho, sigma, m_rho, m_sigma })
}

/// All genuine parameter tuples on `N` vertices that pass the arithmetic
/// feasibility conditions:
/// `0 ≤ λ < t < k`, `0 < μ ≤ t`, `−2(k−t−1) ≤ μ−λ ≤ 2(k−t)`,
/// `k(k+(μ−λ)) = t + (N−1)μ`, and integer eigenvalue data with non-negative
/// integral multiplicities. Sorted by `(k, μ, λ, t)`.
pub fn feasible_params(vertices: usize) -> Vec<DsrgParams> {
    let n = vertices as i64;
    let mut out = Vec::new();
    for k in 1..n {
        for t in 1..k {
            for lambda in 0..t {
                for mu in 1..=t {
                    let diff = mu - lambda;
                    if diff < -2 * (k - t - 1) || diff > 2 * (k - t) {
                        continue;
                    }
                    if k * (k + diff) != t + (n - 1) * mu {
                        continue;
                    }
                    let params = DsrgParams::new(n, k, mu, lambda, t);
                    if eigen_data(&params).is_ok() {
                        out.push(params);
                    }
                }
            }
        }
    }
    out.sort_by_key(|p| (p.k, p.mu, p.lambda, p.t));
    out
}

/// Parameters of the complement digraph (`J − I − A`):
/// `k' = (N−2k)+(k−1)`, `λ' = (N−2k)+(μ−2)`, `t' = (N−2k)+(t−1)`,
/// `μ' = (N−2k)+λ`.
pub fn complement_params(params: &DsrgParams) -> DsrgParams {
    let DsrgParams { vertices: n, k, mu, lambda, t } = *params;
    let shift = n - 2 * k;
    DsrgParams::new(n, shift + (k - 1), shift + lambda, shift + (mu - 2), shift + (t - 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dih(n: usize, x: &[i64], y: &[i64]) -> DihedrantSpec {
        DihedrantSpec::new(n, x, y).unwrap()
    }

    #[test]
    fn adjacency_of_smallest_dihedrant() {
        let a = adjacency_matrix(&dih(3, &[1], &[1]));
        assert_eq!(a.row(0), &[0, 1, 0, 0, 1, 0]);
        // row sums all k
        for v in 0..6 {
            let s: u8 = a.row(v).iter().sum();
            assert_eq!(s, 2);
        }
        // the undirected edge 0 ↔ 4 (t = 1 per vertex)
        assert_eq!(a.entry(0, 4), 1);
        assert_eq!(a.entry(4, 0), 1);
    }

    #[test]
    fn matrix_oracle_known_instances() {
        let p = verify_matrix(&dih(3, &[1], &[1])).unwrap();
        assert_eq!(p.as_tuple(), (6, 2, 1, 0, 1));
        assert!(p.is_genuine());

        let p = verify_matrix(&dih(4, &[1, 2], &[1, 2])).unwrap();
        assert_eq!(p.as_tuple(), (8, 4, 3, 1, 3));
        assert!(p.is_genuine());

        assert!(verify_matrix(&dih(6, &[1, 2], &[1, 2])).is_err());
    }

    #[test]
    fn group_ring_known_instances() {
        let p = verify_group_ring(&dih(4, &[1, 2], &[1, 2])).unwrap();
        assert_eq!(p.as_tuple(), (8, 4, 3, 1, 3));
        assert_eq!(p.t, p.mu);

        // Y = X^{(−1)}
        let p = verify_group_ring(&dih(3, &[1], &[2])).unwrap();
        assert_eq!(p.as_tuple(), (6, 2, 1, 0, 1));

        assert!(verify_group_ring(&dih(4, &[1], &[1])).is_err());
    }

    #[test]
    fn verifiers_agree_on_empty() {
        let s = dih(5, &[], &[]);
        assert_eq!(verify_matrix(&s).unwrap_err(), NotDsrg::EmptyConnectionSet);
        assert_eq!(verify_group_ring(&s).unwrap_err(), NotDsrg::EmptyConnectionSet);
    }

    #[test]
    fn spectral_check_examples() {
        let tol = spectrum::default_tolerance(4);
        let s = dih(4, &[1, 2], &[1, 2]);
        let p = DsrgParams::new(8, 4, 3, 1, 3);
        assert!(verify_spectral(&s, &p, tol).ok);

        let s = dih(3, &[1], &[1]);
        let p = DsrgParams::new(6, 2, 1, 0, 1);
        assert!(verify_spectral(&s, &p, spectrum::default_tolerance(3)).ok);

        let s = dih(6, &[1, 2], &[1, 2]);
        for p in feasible_params(12) {
            assert!(!verify_spectral(&s, &p, spectrum::default_tolerance(6)).ok);
        }
    }

    #[test]
    fn quadratic_identity_examples() {
        assert_eq!(quadratic_identity_check(4, &[1, 2], -2).unwrap(), Some(6));
        assert_eq!(quadratic_identity_check(6, &[1, 4], -2).unwrap(), Some(4));
        // {1,2} and {1,4} have the same symmetrization mod 6, so the
        // two-valued condition holds for both; it is necessary, not
        // sufficient: Dih(6,{1,2},{1,2}) is still not a DSRG
        assert_eq!(quadratic_identity_check(6, &[1, 2], -2).unwrap(), Some(4));
        assert_eq!(quadratic_identity_check(6, &[1, 3], -2).unwrap(), None);
        assert_eq!(quadratic_identity_check(4, &[0], -2).unwrap_err(), Error::LoopElement);
    }

    #[test]
    fn eigen_data_examples() {
        let e = eigen_data(&DsrgParams::new(6, 2, 1, 0, 1)).unwrap();
        assert_eq!((e.d, e.rho, e.sigma, e.m_rho, e.m_sigma), (1, 0, -1, 3, 2));

        let e = eigen_data(&DsrgParams::new(8, 4, 3, 1, 3)).unwrap();
        assert_eq!((e.d, e.rho, e.sigma, e.m_rho, e.m_sigma), (2, 0, -2, 5, 2));
    }

    #[test]
    fn eigen_multiplicities_sum_to_order() {
        for n in [6usize, 8, 10, 12, 16, 18] {
            for p in feasible_params(n) {
                let e = eigen_data(&p).unwrap();
                assert_eq!(1 + e.m_rho + e.m_sigma, p.vertices);
                // zero trace
                assert_eq!(p.k + e.rho * e.m_rho + e.sigma * e.m_sigma, 0);
            }
        }
    }

    #[test]
    fn feasible_params_examples() {
        let list = feasible_params(6);
        assert!(list.contains(&DsrgParams::new(6, 2, 1, 0, 1)));
        assert!(list.contains(&DsrgParams::new(6, 3, 2, 1, 2)));
        assert!(!list.contains(&DsrgParams::new(6, 2, 1, 1, 1)));
    }

    #[test]
    fn complement_params_examples() {
        let p = DsrgParams::new(6, 2, 1, 0, 1);
        assert_eq!(complement_params(&p).as_tuple(), (6, 3, 2, 1, 2));
        let p = DsrgParams::new(8, 4, 3, 1, 3);
        assert_eq!(complement_params(&p).as_tuple(), (8, 3, 1, 1, 2));
        for p in feasible_params(10) {
            assert_eq!(complement_params(&complement_params(&p)), p);
        }
    }

    #[test]
    fn complement_digraph_verifies_with_complement_params() {
        let s = dih(3, &[1], &[1]);
        let p = verify_matrix(&s).unwrap();
        let pc = verify_matrix(&s.complement()).unwrap();
        assert_eq!(pc, complement_params(&p));
    }
}
