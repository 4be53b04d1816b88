//! Exhaustive certificates against naive scans over explicit codeword lists.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use ringcodes::analysis::*;
use ringcodes::field::{make_field_order, FieldElement, FieldSpec, FqVector};
use ringcodes::{Budget, GeneratorMatrix, WeightDistribution};

fn span(f: &FieldSpec, rows: &[Vec<u32>]) -> Vec<Vec<u32>> {
    let n = rows.first().map_or(0, Vec::len);
    let mut words = vec![vec![0u32; n]];
    for r in rows {
        let mut next = Vec::new();
        for w in &words {
            for c in f.elements() {
                next.push(
                    w.iter()
                        .zip(r)
                        .map(|(&a, &b)| f.add(FieldElement(a), f.mul(c, FieldElement(b))).0)
                        .collect(),
                );
            }
        }
        words = next;
    }
    words.sort();
    words.dedup();
    words
}

fn supp(w: &[u32]) -> Vec<bool> {
    w.iter().map(|&x| x != 0).collect()
}

/// Minimal iff no codeword w ∉ F_q·u has supp(w) ⊆ supp(u), for every nonzero u.
fn naive_minimal(f: &FieldSpec, words: &[Vec<u32>]) -> bool {
    let multiples = |u: &Vec<u32>| -> Vec<Vec<u32>> {
        f.elements()
            .map(|c| u.iter().map(|&x| f.mul(c, FieldElement(x)).0).collect())
            .collect()
    };
    for u in words.iter().filter(|u| u.iter().any(|&x| x != 0)) {
        let mu = multiples(u);
        let su = supp(u);
        for w in words {
            let covered = supp(w).iter().zip(&su).all(|(&a, &b)| !a || b);
            if covered && !mu.contains(w) {
                return false;
            }
        }
    }
    true
}

fn naive_orthogonal(f: &FieldSpec, words: &[Vec<u32>], hermitian: bool) -> bool {
    words.iter().all(|a| {
        words.iter().all(|b| {
            a.iter()
                .zip(b)
                .fold(FieldElement::ZERO, |acc, (&x, &y)| {
                    let y = if hermitian { f.conjugate(FieldElement(y)).unwrap() } else { FieldElement(y) };
                    f.add(acc, f.mul(FieldElement(x), y))
                })
                .is_zero()
        })
    })
}

fn random_rows(rng: &mut ChaCha8Rng, q: u32) -> Vec<Vec<u32>> {
    let k = rng.gen_range(1..=3);
    let n = rng.gen_range(1..=7);
    // sparse entries make non-minimal codes common
    (0..k)
        .map(|_| (0..n).map(|_| if rng.gen_bool(0.4) { 0 } else { rng.gen_range(0..q) }).collect())
        .collect()
}

fn matrix(f: &FieldSpec, rows: &[Vec<u32>]) -> GeneratorMatrix {
    let n = rows[0].len();
    GeneratorMatrix::from_rows(f, rows.iter().map(|r| FqVector::from_u32(r)).collect(), n).unwrap()
}

#[test]
fn exhaustive_minimality_matches_pairwise_scan() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let budget = Budget::default();
    let mut seen = [0usize; 2];
    for q in [2u32, 3, 4] {
        let f = make_field_order(q).unwrap();
        for _ in 0..300 {
            let rows = random_rows(&mut rng, q);
            let g = matrix(&f, &rows);
            let words = span(&f, &rows);
            let expected = naive_minimal(&f, &words);
            let cert = minimal_exhaustive(&g, &budget).unwrap();
            assert_eq!(cert.certified(), expected, "q={q} rows={rows:?}");
            assert_eq!(minimal_exhaustive_compact(&g.compact(), &budget).unwrap().certified(), expected);
            seen[expected as usize] += 1;
            if let Some(Witness::Covering { u: Some(u), w: Some(w), .. }) = cert.witness {
                assert!(words.contains(&u) && words.contains(&w));
                assert!(supp(&w).iter().zip(supp(&u)).all(|(&a, b)| !a || b));
                assert!(w.iter().any(|&x| x != 0) && w != u);
            }
        }
    }
    assert!(seen.iter().all(|&c| c > 50), "{seen:?}");
}

#[test]
fn ab_certificates_imply_minimality() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for q in [2u32, 3] {
        let f = make_field_order(q).unwrap();
        for _ in 0..300 {
            let rows = random_rows(&mut rng, q);
            let words = span(&f, &rows);
            let dist = WeightDistribution::from_weights(words.iter().map(|w| w.iter().filter(|&&x| x != 0).count() as u64));
            if let Ok(c) = ab_minimal(&dist, q) {
                if c.certified() {
                    assert!(naive_minimal(&f, &words), "{rows:?}");
                }
            }
        }
    }
}

#[test]
fn gram_matches_all_pairs() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let budget = Budget::default();
    let mut certified = 0;
    for (q, hermitian) in [(2u32, false), (3, false), (4, false), (4, true)] {
        let f = make_field_order(q).unwrap();
        for _ in 0..400 {
            let rows = random_rows(&mut rng, q);
            let words = span(&f, &rows);
            let so = self_orthogonal(&matrix(&f, &rows), hermitian, &budget).unwrap();
            let expected = naive_orthogonal(&f, &words, hermitian);
            assert_eq!(so.gram.certified(), expected, "q={q} h={hermitian} {rows:?}");
            certified += expected as usize;
            let weights: Vec<u64> = words.iter().map(|w| w.iter().filter(|&&x| x != 0).count() as u64).collect();
            match (q, hermitian) {
                (3, false) | (4, true) => {
                    let d = if q == 3 { 3 } else { 2 };
                    assert_eq!(expected, weights.iter().all(|w| w % d == 0));
                    assert_eq!(so.divisibility.unwrap().certified(), expected);
                }
                (2, false) => {
                    if weights.iter().all(|w| w % 4 == 0) {
                        assert!(expected);
                    }
                    let div = so.divisibility.unwrap();
                    assert!(!div.certified() || expected);
                }
                _ => assert!(so.divisibility.is_none()),
            }
        }
    }
    assert!(certified > 20, "{certified}");
}

#[test]
fn minimality_is_invariant_under_permutation() {
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    let budget = Budget::default();
    for q in [2u32, 3] {
        let f = make_field_order(q).unwrap();
        for _ in 0..100 {
            let rows = random_rows(&mut rng, q);
            let n = rows[0].len();
            let mut perm: Vec<usize> = (0..n).collect();
            for i in (1..n).rev() {
                perm.swap(i, rng.gen_range(0..=i));
            }
            let permuted: Vec<Vec<u32>> = rows.iter().map(|r| perm.iter().map(|&j| r[j]).collect()).collect();
            let a = minimal_exhaustive(&matrix(&f, &rows), &budget).unwrap();
            let b = minimal_exhaustive(&matrix(&f, &permuted), &budget).unwrap();
            assert_eq!(a.verdict, b.verdict);
        }
    }
}

#[test]
fn budget_limits_exhaustive_scans() {
    let f = make_field_order(2).unwrap();
    let rows: Vec<Vec<u32>> = (0..6).map(|i| (0..6).map(|j| (i == j) as u32).collect()).collect();
    let tight = Budget {
        codewords: 32,
        ..Budget::default()
    };
    assert!(matches!(
        minimal_exhaustive(&matrix(&f, &rows), &tight),
        Err(ringcodes::Error::BudgetExceeded { needed: 64, limit: 32 })
    ));
}
