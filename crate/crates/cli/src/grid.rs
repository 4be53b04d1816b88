//! Canonical enumeration of complexes and specs.

use ringcodes::simplicial::full_set;
use ringcodes::{CodeSpec, DefiningSetKind, FieldSpec, RingKind, SimplicialComplex};

/// Complexes of F_q^m with at most `max_sets` maximal elements, ordered by the number of
/// maximal elements and then by their masks. {∅} is included.
pub fn families(m: usize, max_sets: usize) -> Vec<SimplicialComplex> {
    let masks: Vec<u64> = (0..=full_set(m)).collect();
    let mut out: Vec<Vec<u64>> = Vec::new();
    let mut layer: Vec<Vec<u64>> = masks.iter().map(|&s| vec![s]).collect();
    for _ in 0..max_sets {
        out.extend(layer.iter().cloned());
        let mut next = Vec::new();
        for fam in &layer {
            let last = *fam.last().expect("nonempty");
            for &s in masks.iter().filter(|&&s| s > last) {
                let incomparable = fam.iter().all(|&t| s & t != s && s & t != t);
                if incomparable {
                    let mut f = fam.clone();
                    f.push(s);
                    next.push(f);
                }
            }
        }
        layer = next;
    }
    out.iter()
        .map(|f| SimplicialComplex::from_masks(m, f).expect("antichain"))
        .collect()
}

/// Every (Δ1, Δ2, ring, variant) over the given complexes, in canonical order.
pub fn specs(
    field: &FieldSpec,
    complexes: &[SimplicialComplex],
    rings: &[RingKind],
    variants: &[DefiningSetKind],
) -> Vec<CodeSpec> {
    let mut out = Vec::new();
    for d1 in complexes {
        for d2 in complexes {
            for &ring in rings {
                for &kind in variants {
                    out.push(CodeSpec::new(field, ring, d1.clone(), d2.clone(), kind).expect("same m"));
                }
            }
        }
    }
    out
}
