//! Closed-form parameters, distributions and character sums against the naive model.

mod common;

use common::*;
use ringcodes::closed_form::*;
use ringcodes::ring_codes::{lee_distribution, subfield_distribution};
use ringcodes::simplicial::complex_size;
use ringcodes::{make_field, make_field_order, Budget, DefiningSetKind, Error, FqVector, RingKind};

/// Families as lists of index lists.
type Families = Vec<Vec<Vec<usize>>>;

fn grid() -> Vec<(u32, usize, Families)> {
    let singles = |m: usize| families(m).into_iter().filter(|f| f.len() == 1).collect::<Vec<_>>();
    vec![(2, 2, families(2)), (2, 3, families(3)), (3, 2, families(2)), (3, 3, singles(3))]
}

#[test]
fn theorems_match_enumeration() {
    let budget = Budget::default();
    let mut checked = [0usize; 3];
    for (q, m, fams) in grid() {
        for f in &fams {
            for h in &fams {
                for kind in DefiningSetKind::ALL {
                    for ring in [RingKind::E, RingKind::F] {
                        let s = spec(q, m, ring, kind, f, h);
                        let t_ring = ring_code_params(&s);
                        let t_sub = theorem3_params(&s);
                        if t_ring.is_err() && t_sub.is_err() {
                            continue;
                        }
                        let o = oracle(q, m, ring_of(ring), kind, f, h);
                        let ctx = format!("q={q} m={m} {ring} {kind} F={f:?} H={h:?}");
                        if let Ok(p) = t_ring {
                            assert_eq!(
                                (p.n, p.size, Some(p.min_d as u64)),
                                (o.n as u128, o.size as u128, o.lee_min()),
                                "{ctx}"
                            );
                            checked[ring as usize] += 1;
                        }
                        if let Ok(p) = t_sub {
                            assert_eq!(
                                (p.n, (q as u128).pow(p.k), Some(p.min_d as u64)),
                                (o.n as u128, o.subfield_size as u128, o.subfield_min()),
                                "{ctx}"
                            );
                            checked[2] += 1;
                        }
                        let lib = lee_distribution(&s, &budget).unwrap();
                        assert_eq!(lib.distribution.to_pairs(), o.lee_pairs(), "{ctx}");
                        let sub = subfield_distribution(&s, &budget).unwrap();
                        assert_eq!(sub.distribution.to_pairs(), o.subfield_pairs(), "{ctx}");
                    }
                }
            }
        }
    }
    // every theorem is exercised on a substantial number of specs
    assert!(checked.iter().all(|&c| c > 100), "{checked:?}");
}

#[test]
fn hypothesis_errors_name_the_clause() {
    let s = spec(2, 3, RingKind::E, DefiningSetKind::D2, &[vec![1, 2, 3]], &[vec![1]]);
    match theorem1_params(&s) {
        Err(Error::Hypothesis { theorem, clause, .. }) => assert_eq!((theorem, clause), ("Theorem 1", "(3)")),
        other => panic!("{other:?}"),
    }
    let s = spec(2, 3, RingKind::F, DefiningSetKind::D1, &[vec![1]], &[vec![1, 2]]);
    assert!(matches!(theorem2_params(&s), Err(Error::Hypothesis { clause: "(1)", .. })));
}

#[test]
fn propositions_match_enumeration() {
    let mut checked = 0;
    for (q, m) in [(2u32, 2usize), (2, 3), (3, 2), (3, 3), (5, 2)] {
        for a in 0u64..1 << m {
            for b in 0u64..1 << m {
                let fa = vec![(1..=m).filter(|i| a >> (i - 1) & 1 == 1).collect::<Vec<_>>()];
                let fb = vec![(1..=m).filter(|i| b >> (i - 1) & 1 == 1).collect::<Vec<_>>()];
                for kind in DefiningSetKind::ALL {
                    let ctx = format!("q={q} m={m} {kind} A={fa:?} B={fb:?}");
                    if let Ok(d) = prop1_distribution(a, b, kind, q, m) {
                        let o = oracle(q, m, Ring::E, kind, &fa, &fb);
                        assert_eq!(d.to_pairs(), o.lee_pairs(), "E {ctx}");
                        checked += 1;
                    }
                    if let Ok(d) = prop2_distribution(a, b, kind, q, m) {
                        let o = oracle(q, m, Ring::F, kind, &fa, &fb);
                        assert_eq!(d.to_pairs(), o.lee_pairs(), "F {ctx}");
                        checked += 1;
                    }
                }
            }
        }
    }
    assert!(checked > 300, "{checked}");
}

#[test]
fn prop2_rejects_a_inside_b() {
    for kind in DefiningSetKind::ALL {
        assert!(matches!(
            prop2_distribution(0b01, 0b11, kind, 2, 2),
            Err(Error::Hypothesis { .. })
        ));
    }
}

/// Σ_{u∈F_p^s} ω^{⟨u,x⟩} is q for x = 0 and 0 otherwise.
fn naive_sum(zeros: usize, q: u32) -> i128 {
    zeros as i128 * q as i128
}

#[test]
fn character_sums_and_weights() {
    let budget = Budget::default();
    for (q, m, fams) in [(2u32, 3usize, families(3)), (3, 2, families(2))] {
        let field = make_field(q, 1).unwrap();
        let all = vectors(q, m);
        for f in &fams {
            let d1 = complex(f, m);
            let inside: Vec<&Vec<u32>> = all.iter().filter(|t| in_complex(t, f)).collect();
            let outside: Vec<&Vec<u32>> = all.iter().filter(|t| !in_complex(t, f)).collect();
            for beta in &all {
                let bv = FqVector::from_u32(beta);
                let zeros = |set: &[&Vec<u32>]| set.iter().filter(|t| dot(q, beta, t) == 0).count();
                assert_eq!(exp_sum_closed(q, &d1, &bv, false).unwrap(), naive_sum(zeros(&inside), q));
                assert_eq!(exp_sum_closed(q, &d1, &bv, true).unwrap(), naive_sum(zeros(&outside), q));
                assert_eq!(exp_sum(&field, &d1, &bv, true, &budget).unwrap(), naive_sum(zeros(&outside), q));
                let a_naive = (inside.len() - zeros(&inside)) as i128;
                assert_eq!(a_weight(&field, &d1, &bv, AMode::Formula, &budget).unwrap(), a_naive);
                assert_eq!(a_weight(&field, &d1, &bv, AMode::Direct, &budget).unwrap(), a_naive);
                for h in &fams {
                    let d2 = complex(h, m);
                    for comp in [false, true] {
                        let mut z = 0usize;
                        for t1 in &inside {
                            for t2 in &all {
                                if in_complex(t2, h) != comp && dot(q, beta, &add(q, t1, t2)) == 0 {
                                    z += 1;
                                }
                            }
                        }
                        assert_eq!(exp_sum_pair_closed(q, &d1, &d2, &bv, comp).unwrap(), naive_sum(z, q));
                    }
                    // T = |Δ1|·A2 + #{(t1, t2) ∈ Δ1 × Δ2 : ⟨β, t1 + t2⟩ ≠ 0}
                    let h_in: Vec<&Vec<u32>> = all.iter().filter(|t| in_complex(t, h)).collect();
                    let a2 = (h_in.len() - zeros(&h_in)) as i128;
                    let mut nz = 0i128;
                    for t1 in &inside {
                        for t2 in &h_in {
                            nz += (dot(q, beta, &add(q, t1, t2)) != 0) as i128;
                        }
                    }
                    let t_naive = inside.len() as i128 * a2 + nz;
                    assert_eq!(t_value(&field, &d1, &d2, &bv).unwrap(), t_naive, "T β={beta:?} F={f:?} H={h:?}");
                    assert_eq!(t_value_brute(&field, &d1, &d2, &bv, &budget).unwrap(), t_naive);
                }
            }
        }
    }
}

#[test]
fn character_sums_over_extension_fields() {
    let budget = Budget::default();
    for q in [4u32, 8, 9] {
        let field = make_field_order(q).unwrap();
        let m = 2;
        for f in families(m) {
            let d = complex(&f, m);
            for b0 in 0..q {
                for b1 in 0..q {
                    let bv = FqVector::from_u32(&[b0, b1]);
                    for comp in [false, true] {
                        assert_eq!(
                            exp_sum(&field, &d, &bv, comp, &budget).unwrap(),
                            exp_sum_closed(q, &d, &bv, comp).unwrap()
                        );
                    }
                    for h in families(m) {
                        let d2 = complex(&h, m);
                        assert_eq!(
                            exp_sum_pair(&field, &d, &d2, &bv, true, &budget).unwrap(),
                            exp_sum_pair_closed(q, &d, &d2, &bv, true).unwrap()
                        );
                    }
                }
            }
            assert!(complex_size(&d, q).unwrap() >= 1);
        }
    }
}

#[test]
fn gray_params_double_the_length() {
    let s = spec(3, 2, RingKind::F, DefiningSetKind::D3, &[vec![2]], &[vec![1]]);
    let ring = ring_code_params(&s).unwrap();
    let g = gray_params(&s).unwrap();
    assert_eq!((g.n, 3u128.pow(g.k), g.min_d), (2 * ring.n, ring.size, ring.min_d));
}
