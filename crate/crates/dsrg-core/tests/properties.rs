//! Property tests for the algebraic laws the whole crate leans on.

use proptest::prelude::*;

use dsrg_core::multiset::{self, ResidueMultiset};
use dsrg_core::numtheory;
use dsrg_core::ring::{CyclicRingElem, DihedralRingElem};
use dsrg_core::spectrum::{self, SpectrumTable};
use dsrg_core::verify;
use dsrg_core::DihedrantSpec;

fn multiset_with_modulus(n: usize, max_count: u64) -> impl Strategy<Value = ResidueMultiset> {
    prop::collection::vec(0..=max_count, n).prop_map(ResidueMultiset::from_counts)
}

fn multiset_any(max_n: usize) -> impl Strategy<Value = ResidueMultiset> {
    (1..=max_n).prop_flat_map(|n| multiset_with_modulus(n, 3))
}

fn multiset_pair(max_n: usize) -> impl Strategy<Value = (ResidueMultiset, ResidueMultiset)> {
    (1..=max_n).prop_flat_map(|n| (multiset_with_modulus(n, 3), multiset_with_modulus(n, 3)))
}

fn ring_with_modulus(n: usize) -> impl Strategy<Value = CyclicRingElem> {
    prop::collection::vec(-3i64..=3, n).prop_map(CyclicRingElem::from_coeffs)
}

fn ring_pair(max_n: usize) -> impl Strategy<Value = (CyclicRingElem, CyclicRingElem)> {
    (1..=max_n).prop_flat_map(|n| (ring_with_modulus(n), ring_with_modulus(n)))
}

fn dihedral_triple(
    max_n: usize,
) -> impl Strategy<Value = (DihedralRingElem, DihedralRingElem, DihedralRingElem)> {
    (1..=max_n).prop_flat_map(|n| {
        let one = move || {
            (ring_with_modulus(n), ring_with_modulus(n))
                .prop_map(|(p, q)| DihedralRingElem::new(p, q).unwrap())
        };
        (one(), one(), one())
    })
}

proptest! {
    #[test]
    fn negate_is_involution(a in multiset_any(24)) {
        prop_assert_eq!(a.negate().negate(), a);
    }

    #[test]
    fn union_adds_cardinalities((a, b) in multiset_pair(24)) {
        prop_assert_eq!(a.union(&b).unwrap().cardinality(), a.cardinality() + b.cardinality());
    }

    #[test]
    fn scale_multiplies_cardinality(a in multiset_any(24), k in 0u64..=5) {
        prop_assert_eq!(a.scale(k).cardinality(), k * a.cardinality());
    }

    #[test]
    fn sumset_multiplies_cardinalities((a, b) in multiset_pair(16)) {
        prop_assert_eq!(a.sumset(&b).unwrap().cardinality(), a.cardinality() * b.cardinality());
    }

    #[test]
    fn sumset_commutes((a, b) in multiset_pair(16)) {
        prop_assert_eq!(a.sumset(&b).unwrap(), b.sumset(&a).unwrap());
    }

    #[test]
    fn sumset_associates((a, b) in multiset_pair(12), c_counts in prop::collection::vec(0u64..=3, 12)) {
        let c = ResidueMultiset::from_counts(c_counts[..a.modulus()].to_vec());
        let left = a.sumset(&b).unwrap().sumset(&c).unwrap();
        let right = a.sumset(&b.sumset(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn sumset_identity(a in multiset_any(24)) {
        let zero = ResidueMultiset::singleton(a.modulus(), 0);
        prop_assert_eq!(a.sumset(&zero).unwrap(), a);
    }

    #[test]
    fn ring_mul_commutes((a, b) in ring_pair(12)) {
        prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
    }

    #[test]
    fn augmentation_is_multiplicative((a, b) in ring_pair(12)) {
        let prod = a.mul(&b).unwrap();
        prop_assert_eq!(
            prod.augmentation().unwrap(),
            a.augmentation().unwrap() * b.augmentation().unwrap()
        );
    }

    #[test]
    fn involution_is_ring_homomorphism((a, b) in ring_pair(10)) {
        let lhs = a.mul(&b).unwrap().involution();
        let rhs = a.involution().mul(&b.involution()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn all_ones_absorbs(a in (1usize..=12).prop_flat_map(ring_with_modulus)) {
        let c = CyclicRingElem::all_ones(a.modulus());
        prop_assert_eq!(
            c.mul(&a).unwrap(),
            c.scale(a.augmentation().unwrap()).unwrap()
        );
    }

    #[test]
    fn dihedral_mul_associates((a, b, c) in dihedral_triple(12)) {
        let left = a.mul(&b).unwrap().mul(&c).unwrap();
        let right = a.mul(&b.mul(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn ring_mul_matches_sumset((a, b) in multiset_pair(16)) {
        let prod = CyclicRingElem::from_multiset(&a)
            .unwrap()
            .mul(&CyclicRingElem::from_multiset(&b).unwrap())
            .unwrap();
        let sum = a.sumset(&b).unwrap();
        prop_assert_eq!(prod, CyclicRingElem::from_multiset(&sum).unwrap());
    }

    #[test]
    fn fourier_inversion(f in multiset_any(24)) {
        let n = f.modulus();
        let tol = spectrum::default_tolerance(n);
        let once = SpectrumTable::of_multiset(&f, tol);
        let twice = SpectrumTable::of_values(once.values(), tol);
        for z in 0..n {
            let expected = (n as f64) * f.count((n - z) % n) as f64;
            prop_assert!((twice.value(z).re - expected).abs() <= tol);
            prop_assert!(twice.value(z).im.abs() <= tol);
        }
    }

    #[test]
    fn fourier_convolution_theorem((a, b) in multiset_pair(24)) {
        let n = a.modulus();
        let tol = spectrum::default_tolerance(n);
        let fa = SpectrumTable::of_multiset(&a, tol);
        let fb = SpectrumTable::of_multiset(&b, tol);
        let fs = SpectrumTable::of_multiset(&a.sumset(&b).unwrap(), tol);
        for z in 0..n {
            let prod = fa.value(z) * fb.value(z);
            // products of two transforms grow to |A||B|; scale the tolerance
            prop_assert!((fs.value(z) - prod).norm() <= tol * (1.0 + prod.norm()));
        }
    }

    #[test]
    fn fourier_of_negation_is_conjugate(a in multiset_any(24)) {
        let n = a.modulus();
        let tol = spectrum::default_tolerance(n);
        let fa = SpectrumTable::of_multiset(&a, tol);
        let fneg = SpectrumTable::of_multiset(&a.negate(), tol);
        for z in 0..n {
            prop_assert!((fneg.value(z) - fa.value(z).conj()).norm() <= tol);
        }
    }

    #[test]
    fn orbit_combinations_have_integral_spectrum(
        n in 1usize..=24,
        coeffs in prop::collection::vec(0u64..=3, 9),
    ) {
        // f = Σ α_v Δ_{O_v} transforms to Σ α_v (Ramanujan sums): integers
        let divisors = numtheory::divisors(n as u64);
        let mut f = ResidueMultiset::empty(n);
        let mut alpha = Vec::new();
        for (i, &v) in divisors.iter().enumerate() {
            let a = coeffs[i % coeffs.len()];
            alpha.push((v as usize, a));
            f = f.union(&multiset::orbit(n, v as usize).unwrap().scale(a)).unwrap();
        }
        let spec = SpectrumTable::of_multiset(&f, spectrum::default_tolerance(n));
        for z in 0..n {
            let expected: i64 = alpha
                .iter()
                .map(|&(v, a)| a as i64 * spectrum::ramanujan(n, v, z).unwrap())
                .sum();
            prop_assert_eq!(spec.snapped(z), Some(expected));
        }
        // and the decomposition reads the α back
        let dec = spectrum::orbit_decompose(&f).unwrap();
        for &(v, a) in &alpha {
            prop_assert_eq!(dec.alpha_of(v), Some(a as i64));
        }
        prop_assert_eq!(dec.reconstruct(), f);
    }

    #[test]
    fn exact_verifiers_agree_on_random_pairs(
        n in 3usize..=10,
        xmask in 0u64..512,
        ymask in 0u64..1024,
    ) {
        let x: Vec<i64> = (0..n - 1).filter(|&i| xmask >> i & 1 == 1).map(|i| i as i64 + 1).collect();
        let y: Vec<i64> = (0..n).filter(|&i| ymask >> i & 1 == 1).map(|i| i as i64).collect();
        let spec = DihedrantSpec::new(n, &x, &y).unwrap();
        let by_matrix = verify::verify_matrix(&spec);
        let by_ring = verify::verify_group_ring(&spec);
        match (by_matrix, by_ring) {
            (Ok(a), Ok(b)) => prop_assert_eq!(a, b),
            (Err(_), Err(_)) => {}
            (a, b) => prop_assert!(false, "verifiers disagree: {:?} vs {:?}", a, b),
        }
    }
}
