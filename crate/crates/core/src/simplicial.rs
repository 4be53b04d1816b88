//! Simplicial complexes of F_q^m given by their maximal supports.

use std::fmt;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::field::{space_size, vector_from_index, FieldSpec, FqVector};
use crate::numeric::qpow;

/// Largest ambient dimension; subsets of [m] live in a u64 bitmask.
pub const MAX_M: usize = 32;

/// A subset of [m] stored as a bitmask, bit `i` standing for index `i + 1`.
pub type IndexSet = u64;

pub fn set_len(s: IndexSet) -> u32 {
    s.count_ones()
}

/// 1-based sorted indices of a bitmask.
pub fn set_indices(s: IndexSet) -> Vec<usize> {
    (0..64).filter(|i| s >> i & 1 == 1).map(|i| i + 1).collect()
}

pub fn set_from_indices(indices: &[usize], m: usize) -> Result<IndexSet> {
    indices.iter().try_fold(0u64, |acc, &i| {
        if i == 0 || i > m {
            Err(Error::IndexOutOfRange { index: i, m })
        } else {
            Ok(acc | 1 << (i - 1))
        }
    })
}

pub fn full_set(m: usize) -> IndexSet {
    if m == 64 {
        u64::MAX
    } else {
        (1u64 << m) - 1
    }
}

fn sort_key(s: IndexSet) -> (u32, Vec<usize>) {
    (set_len(s), set_indices(s))
}

/// The complex Δ = ∪_i Δ_{F_i} with Δ_F = {ω : supp(ω) ⊆ F}.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    m: usize,
    maximal: Vec<IndexSet>,
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.to_lists())
    }
}

/// Removes dominated and duplicate subsets and sorts by size, then lexicographically.
pub fn canonicalize(family: &[Vec<usize>], m: usize) -> Result<SimplicialComplex> {
    let masks = family
        .iter()
        .map(|f| set_from_indices(f, m))
        .collect::<Result<Vec<_>>>()?;
    SimplicialComplex::from_masks(m, &masks)
}

impl SimplicialComplex {
    pub fn from_masks(m: usize, masks: &[IndexSet]) -> Result<Self> {
        if m == 0 || m > MAX_M {
            return Err(Error::BadDimension(m));
        }
        if masks.is_empty() {
            return Err(Error::EmptyFamily);
        }
        if let Some(&bad) = masks.iter().find(|&&s| s & !full_set(m) != 0) {
            let index = 64 - bad.leading_zeros() as usize;
            return Err(Error::IndexOutOfRange { index, m });
        }
        let mut maximal: Vec<IndexSet> = Vec::new();
        for &s in masks {
            let dominated = masks.iter().any(|&t| t != s && s & !t == 0);
            if !dominated && !maximal.contains(&s) {
                maximal.push(s);
            }
        }
        maximal.sort_by_key(|&s| sort_key(s));
        Ok(SimplicialComplex { m, maximal })
    }

    /// Δ_F for a single support F.
    pub fn single(m: usize, f: IndexSet) -> Result<Self> {
        Self::from_masks(m, &[f])
    }

    /// The complex {0}.
    pub fn zero(m: usize) -> Result<Self> {
        Self::from_masks(m, &[0])
    }

    pub fn full(m: usize) -> Result<Self> {
        Self::from_masks(m, &[full_set(m)])
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn maximal(&self) -> &[IndexSet] {
        &self.maximal
    }

    pub fn to_lists(&self) -> Vec<Vec<usize>> {
        self.maximal.iter().map(|&s| set_indices(s)).collect()
    }

    pub fn union(&self) -> IndexSet {
        self.maximal.iter().fold(0, |acc, &s| acc | s)
    }

    pub fn is_full(&self) -> bool {
        self.maximal == [full_set(self.m)]
    }

    /// Whether a vector with this support lies in Δ.
    #[inline]
    pub fn contains_support(&self, support: IndexSet) -> bool {
        self.maximal.iter().any(|&f| support & !f == 0)
    }

    pub fn contains(&self, v: &FqVector) -> bool {
        self.contains_support(v.support_mask())
    }

    /// Σ_i q^{|F_i|}.
    pub fn power_sum(&self, q: u32) -> Result<u128> {
        self.maximal.iter().try_fold(0u128, |acc, &f| {
            acc.checked_add(qpow(q, set_len(f))?)
                .ok_or(Error::Overflow("power sum"))
        })
    }

    /// Intersections ∩S over nonempty S ⊆ 𝓕, with the sign (−1)^{|S|+1}.
    pub fn signed_intersections(&self) -> Vec<(i128, IndexSet)> {
        subset_intersections(&self.maximal)
    }
}

/// (−1)^{|S|+1} and ∩S for every nonempty S ⊆ family.
pub fn subset_intersections(family: &[IndexSet]) -> Vec<(i128, IndexSet)> {
    let l = family.len();
    assert!(l < 32, "inclusion-exclusion over {l} sets");
    (1u32..1 << l)
        .map(|sel| {
            let inter = (0..l)
                .filter(|i| sel >> i & 1 == 1)
                .fold(u64::MAX, |acc, i| acc & family[i]);
            let sign = if sel.count_ones() % 2 == 1 { 1 } else { -1 };
            (sign, inter)
        })
        .collect()
}

/// |Δ| = Σ_{∅≠S⊆𝓕} (−1)^{|S|+1} q^{|∩S|}.
pub fn complex_size(delta: &SimplicialComplex, q: u32) -> Result<u128> {
    let mut total: i128 = 0;
    for (sign, inter) in delta.signed_intersections() {
        let term = qpow(q, set_len(inter))? as i128;
        total = total
            .checked_add(sign * term)
            .ok_or(Error::Overflow("complex size"))?;
    }
    Ok(total as u128)
}

/// Members of Δ (or Δ^c) in lexicographic order.
pub fn enumerate_complex(
    delta: &SimplicialComplex,
    field: &FieldSpec,
    complement: bool,
    budget: &Budget,
) -> Result<Vec<FqVector>> {
    let q = field.q();
    let size = space_size(q, delta.m()).ok_or(Error::Overflow("q^m"))?;
    budget.enumeration(size as u128)?;
    Ok((0..size)
        .map(|i| vector_from_index(q, delta.m(), i))
        .filter(|v| delta.contains(v) != complement)
        .collect())
}

/// Outcome of the independence hypotheses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct HypothesisFlags {
    /// Every F_i has an element outside the other F_j.
    pub per_family: bool,
    /// Every F_i escapes the other F's and all H's, and every H_j escapes the other H's and all F's.
    pub joint: Option<bool>,
    /// The F half of `joint`.
    pub joint_f: Option<bool>,
    /// The H half of `joint`.
    pub joint_h: Option<bool>,
}

/// Whether `family[i]` has an element outside the other members and `extra`.
pub fn has_private(family: &[IndexSet], i: usize, extra: IndexSet) -> bool {
    let others = family
        .iter()
        .enumerate()
        .filter(|&(j, _)| j != i)
        .fold(extra, |acc, (_, &s)| acc | s);
    family[i] & !others != 0
}

pub fn all_private(family: &[IndexSet], extra: IndexSet) -> bool {
    (0..family.len()).all(|i| has_private(family, i, extra))
}

pub fn hypothesis_check(f: &SimplicialComplex, h: Option<&SimplicialComplex>) -> HypothesisFlags {
    let per_family = all_private(f.maximal(), 0);
    match h {
        None => HypothesisFlags {
            per_family,
            joint: None,
            joint_f: None,
            joint_h: None,
        },
        Some(h) => {
            let jf = all_private(f.maximal(), h.union());
            let jh = all_private(h.maximal(), f.union());
            HypothesisFlags {
                per_family,
                joint: Some(jf && jh),
                joint_f: Some(jf),
                joint_h: Some(jh),
            }
        }
    }
}

/// α(β|Δ_A): true iff supp(β) ∩ A = ∅, i.e. β ∈ Δ_A^⊥.
pub fn alpha(beta: &FqVector, a: IndexSet) -> bool {
    beta.support_mask() & a == 0
}
