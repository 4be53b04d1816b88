//! Randomized structural invariants.

use proptest::prelude::*;
use ringcodes::analysis::griesmer_certify;
use ringcodes::field::{make_field_order, FieldElement, FqVector};
use ringcodes::ring_codes::{gray, lee_weight, ring_add, ring_mul, RingElement, RingKind, RingVector};
use ringcodes::simplicial::{complex_size, hypothesis_check, set_len};
use ringcodes::{alpha, enumerate_complex, Budget, SimplicialComplex};

const ORDERS: [u32; 7] = [2, 3, 4, 5, 7, 8, 9];

fn order() -> impl Strategy<Value = u32> {
    prop::sample::select(ORDERS.to_vec())
}

fn ring_vec(q: u32, n: usize) -> impl Strategy<Value = RingVector> {
    prop::collection::vec((0..q, 0..q), n)
        .prop_map(|v| RingVector(v.into_iter().map(|(x, y)| RingElement::new(FieldElement(x), FieldElement(y))).collect()))
}

fn family(m: usize) -> impl Strategy<Value = Vec<u64>> {
    prop::collection::vec(0u64..1 << m, 1..=4)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn gray_is_an_additive_isometry((q, v, w, l) in order().prop_flat_map(|q| (Just(q), 1usize..10)).prop_flat_map(|(q, n)| (Just(q), ring_vec(q, n), ring_vec(q, n), 0..q))) {
        let f = make_field_order(q).unwrap();
        prop_assert_eq!(lee_weight(&f, &v), gray(&f, &v).weight());
        let sum = v.add(&f, &w).unwrap();
        prop_assert_eq!(gray(&f, &sum), gray(&f, &v).add(&f, &gray(&f, &w)).unwrap());
        let lambda = FieldElement(l);
        prop_assert_eq!(gray(&f, &v.scale(&f, lambda)), gray(&f, &v).scale(&f, lambda));
    }

    #[test]
    fn rings_are_opposite((q, a, b, c) in order().prop_flat_map(|q| (Just(q), (0..q, 0..q), (0..q, 0..q), (0..q, 0..q)))) {
        let f = make_field_order(q).unwrap();
        let r = |(x, y): (u32, u32)| RingElement::new(FieldElement(x), FieldElement(y));
        let (a, b, c) = (r(a), r(b), r(c));
        prop_assert_eq!(ring_mul(&f, a, b, RingKind::E), ring_mul(&f, b, a, RingKind::F));
        for kind in [RingKind::E, RingKind::F] {
            prop_assert_eq!(
                ring_mul(&f, a, ring_add(&f, b, c), kind),
                ring_add(&f, ring_mul(&f, a, b, kind), ring_mul(&f, a, c, kind))
            );
            prop_assert_eq!(
                ring_mul(&f, ring_add(&f, a, b), c, kind),
                ring_add(&f, ring_mul(&f, a, c, kind), ring_mul(&f, b, c, kind))
            );
        }
    }

    #[test]
    fn independent_families_are_large((q, m, fam) in (order(), 1usize..=7).prop_flat_map(|(q, m)| (Just(q), Just(m), family(m)))) {
        let c = SimplicialComplex::from_masks(m, &fam).unwrap();
        if hypothesis_check(&c, None).per_family {
            let size = complex_size(&c, q).unwrap();
            prop_assert!(2 * size > c.power_sum(q).unwrap());
        }
    }

    #[test]
    fn dual_identity((_m, fam, beta) in (1usize..=8).prop_flat_map(|m| (Just(m), family(m), prop::collection::vec(0u32..3, m)))) {
        let b = FqVector::from_u32(&beta);
        let union = fam.iter().fold(0, |a, s| a | s);
        prop_assert_eq!(fam.iter().all(|&s| alpha(&b, s)), alpha(&b, union));
    }

    #[test]
    fn griesmer_is_monotone(n in 1u128..400, k in 1u32..6, d in 1u128..300, q in prop::sample::select(vec![2u32, 3, 4, 5])) {
        let c = griesmer_certify(n, k, d, q);
        if c.certified() && c.property == ringcodes::analysis::Property::DistanceOptimal {
            for e in d + 1..d + 20 {
                prop_assert!(ringcodes::analysis::griesmer_sum(k, e, q) > n);
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn complexes_are_downward_closed((q, m, fam) in (prop::sample::select(vec![2u32, 3, 4]), 1usize..=4).prop_flat_map(|(q, m)| (Just(q), Just(m), family(m)))) {
        let f = make_field_order(q).unwrap();
        let c = SimplicialComplex::from_masks(m, &fam).unwrap();
        let members = enumerate_complex(&c, &f, false, &Budget::default()).unwrap();
        prop_assert_eq!(members.len() as u128, complex_size(&c, q).unwrap());
        for v in &members {
            for i in 0..m {
                let mut w = v.clone();
                w.0[i] = FieldElement::ZERO;
                prop_assert!(c.contains(&w));
                // any vector with the same support is a member too
                let mut u = v.clone();
                if !u.0[i].is_zero() {
                    u.0[i] = FieldElement::ONE;
                    prop_assert!(c.contains(&u));
                }
            }
            prop_assert!(c.maximal().iter().any(|&s| v.support_mask() & !s == 0));
        }
        prop_assert!(c.maximal().iter().all(|&s| set_len(s) as usize <= m));
    }
}
