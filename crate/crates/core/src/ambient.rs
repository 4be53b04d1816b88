//! Lookup tables for F_q^m: every vector by lexicographic index, its support,
//! pairwise inner products and index addition.

use rayon::prelude::*;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::field::{dot, space_size, vector_from_index, vector_index, FieldElement, FieldSpec, FqVector};
use crate::simplicial::{IndexSet, SimplicialComplex};

/// Pairwise tables are built only up to this many entries.
const TABLE_ENTRIES: usize = 1 << 24;

pub struct Ambient {
    field: FieldSpec,
    m: usize,
    size: usize,
    coords: Vec<FieldElement>,
    supports: Vec<IndexSet>,
    ip: Option<Vec<u32>>,
    sum: Option<Vec<u32>>,
}

impl Ambient {
    pub fn new(field: &FieldSpec, m: usize, budget: &Budget) -> Result<Self> {
        let size = space_size(field.q(), m).ok_or(Error::Overflow("q^m"))?;
        budget.enumeration(size as u128)?;
        let size = size as usize;
        let mut coords = Vec::with_capacity(size * m);
        let mut supports = Vec::with_capacity(size);
        for i in 0..size {
            let v = vector_from_index(field.q(), m, i as u64);
            supports.push(v.support_mask());
            coords.extend(v.0);
        }
        let mut amb = Ambient {
            field: field.clone(),
            m,
            size,
            coords,
            supports,
            ip: None,
            sum: None,
        };
        if size.checked_mul(size).is_some_and(|e| e <= TABLE_ENTRIES) {
            let ip: Vec<u32> = (0..size * size)
                .into_par_iter()
                .map(|k| dot(field, amb.coords(k / size), amb.coords(k % size)).0)
                .collect();
            let sum: Vec<u32> = (0..size * size)
                .into_par_iter()
                .map(|k| amb.raw_sum(k / size, k % size) as u32)
                .collect();
            amb.ip = Some(ip);
            amb.sum = Some(sum);
        }
        Ok(amb)
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// q^m.
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn coords(&self, i: usize) -> &[FieldElement] {
        &self.coords[i * self.m..(i + 1) * self.m]
    }

    pub fn vector(&self, i: usize) -> FqVector {
        FqVector(self.coords(i).to_vec())
    }

    pub fn index_of(&self, v: &FqVector) -> usize {
        vector_index(self.field.q(), v) as usize
    }

    pub fn support(&self, i: usize) -> IndexSet {
        self.supports[i]
    }

    /// ⟨v_b, v_t⟩.
    #[inline]
    pub fn ip(&self, b: usize, t: usize) -> FieldElement {
        match &self.ip {
            Some(tab) => FieldElement(tab[b * self.size + t]),
            None => dot(&self.field, self.coords(b), self.coords(t)),
        }
    }

    /// Index of v_a + v_b.
    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        match &self.sum {
            Some(tab) => tab[a * self.size + b] as usize,
            None => self.raw_sum(a, b),
        }
    }

    fn raw_sum(&self, a: usize, b: usize) -> usize {
        let q = self.field.q() as usize;
        self.coords(a)
            .iter()
            .zip(self.coords(b))
            .fold(0, |acc, (&x, &y)| acc * q + self.field.add(x, y).0 as usize)
    }

    /// Membership of every index in Δ.
    pub fn membership(&self, delta: &SimplicialComplex) -> Vec<bool> {
        self.supports.iter().map(|&s| delta.contains_support(s)).collect()
    }

    /// Indices selected (or rejected, with `complement`) by a membership mask.
    pub fn select(mask: &[bool], complement: bool) -> Vec<usize> {
        (0..mask.len()).filter(|&i| mask[i] != complement).collect()
    }

    /// Flat table h[β·q + a] = #{t ∈ set : ⟨β,t⟩ = a}.
    pub fn histograms(&self, set: &[usize]) -> Vec<u64> {
        let q = self.field.q() as usize;
        let mut out = vec![0u64; self.size * q];
        out.par_chunks_mut(q).enumerate().for_each(|(b, h)| {
            for &t in set {
                h[self.ip(b, t).0 as usize] += 1;
            }
        });
        out
    }
}

/// #{t ∈ set : ⟨β,t⟩ ≠ 0} for every β, from a histogram table.
pub fn nonzero_counts(hist: &[u64], q: usize, set_len: usize) -> Vec<u64> {
    hist.chunks(q).map(|h| set_len as u64 - h[0]).collect()
}
