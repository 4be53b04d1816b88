//! Linear codes over F_q: row reduction, generator matrices and a compact
//! form that keeps each distinct column once with its multiplicity.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec, FqVector};
use crate::weights::WeightDistribution;

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(f: &FieldSpec, rows: &mut Vec<Vec<FieldElement>>) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = f.inv(rows[r][c]).expect("pivot is nonzero");
        for x in rows[r].iter_mut() {
            *x = f.mul(*x, inv);
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let factor = row[c];
            for (x, &pv) in row.iter_mut().zip(&pivot_row) {
                *x = f.sub(*x, f.mul(factor, pv));
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

pub fn rank(f: &FieldSpec, rows: &[Vec<FieldElement>]) -> usize {
    let mut m = rows.to_vec();
    rref(f, &mut m).len()
}

/// Messages of F_q^k in lexicographic order.
pub(crate) fn message(q: u32, k: usize, mut index: u64) -> Vec<FieldElement> {
    let mut v = vec![FieldElement::ZERO; k];
    for slot in v.iter_mut().rev() {
        *slot = FieldElement((index % q as u64) as u32);
        index /= q as u64;
    }
    v
}

/// Row-reduced basis of a linear code.
#[derive(Clone, Debug)]
pub struct GeneratorMatrix {
    field: FieldSpec,
    rows: Vec<FqVector>,
    n: usize,
}

impl GeneratorMatrix {
    /// Row-reduces a spanning set of length-`n` vectors.
    pub fn from_rows(field: &FieldSpec, rows: Vec<FqVector>, n: usize) -> Result<Self> {
        if let Some(bad) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::LengthMismatch {
                left: bad.len(),
                right: n,
            });
        }
        let mut m: Vec<Vec<FieldElement>> = rows.into_iter().map(|r| r.0).collect();
        rref(field, &mut m);
        Ok(GeneratorMatrix {
            field: field.clone(),
            rows: m.into_iter().map(FqVector).collect(),
            n,
        })
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn rows(&self) -> &[FqVector] {
        &self.rows
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.rows.len()
    }

    /// Σ msg_i · row_i.
    pub fn encode(&self, msg: &[FieldElement]) -> FqVector {
        let f = &self.field;
        let mut out = vec![FieldElement::ZERO; self.n];
        for (row, &c) in self.rows.iter().zip(msg) {
            if c.is_zero() {
                continue;
            }
            for (o, &x) in out.iter_mut().zip(&row.0) {
                *o = f.add(*o, f.mul(c, x));
            }
        }
        FqVector(out)
    }

    /// Whether `v` lies in the row space.
    pub fn contains(&self, v: &FqVector) -> bool {
        let mut m: Vec<Vec<FieldElement>> = self.rows.iter().map(|r| r.0.clone()).collect();
        m.push(v.0.clone());
        rank(&self.field, &m) == self.k()
    }

    /// Column `j` as a length-k vector.
    pub fn column(&self, j: usize) -> Vec<FieldElement> {
        self.rows.iter().map(|r| r.0[j]).collect()
    }

    pub fn compact(&self) -> CompactCode {
        let cols = (0..self.n).map(|j| (self.column(j), 1u64));
        CompactCode::from_columns(&self.field, self.k(), cols)
    }

    /// Every codeword in message order.
    pub fn codewords(&self, budget: &Budget) -> Result<Vec<FqVector>> {
        let count = (self.field.q() as u128).pow(self.k() as u32);
        budget.codewords(count)?;
        Ok((0..count as u64)
            .map(|i| self.encode(&message(self.field.q(), self.k(), i)))
            .collect())
    }
}

/// A code given by its distinct nonzero columns (w.r.t. a basis of the code) and their
/// multiplicities. Zero columns only add length.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompactCode {
    field: FieldSpec,
    k: usize,
    n: u64,
    columns: Vec<(Vec<FieldElement>, u64)>,
}

impl CompactCode {
    /// Builds the code {(⟨x, c⟩)_c : x ∈ F_q^dim} from columns of a spanning generator matrix,
    /// reducing to a basis.
    pub fn from_columns(
        field: &FieldSpec,
        dim: usize,
        columns: impl IntoIterator<Item = (Vec<FieldElement>, u64)>,
    ) -> Self {
        let mut merged: BTreeMap<Vec<FieldElement>, u64> = BTreeMap::new();
        let mut n = 0u64;
        for (c, mult) in columns {
            debug_assert_eq!(c.len(), dim);
            n += mult;
            if mult > 0 {
                *merged.entry(c).or_default() += mult;
            }
        }
        let distinct: Vec<(Vec<FieldElement>, u64)> = merged.into_iter().collect();
        // rows of the dim × #distinct matrix, reduced to a basis of the row space
        let mut rows: Vec<Vec<FieldElement>> = (0..dim)
            .map(|i| distinct.iter().map(|(c, _)| c[i]).collect())
            .collect();
        if distinct.is_empty() {
            rows.clear();
        }
        rref(field, &mut rows);
        let k = rows.len();
        let mut reduced: BTreeMap<Vec<FieldElement>, u64> = BTreeMap::new();
        for (j, (_, mult)) in distinct.iter().enumerate() {
            let col: Vec<FieldElement> = rows.iter().map(|r| r[j]).collect();
            if col.iter().any(|x| !x.is_zero()) {
                *reduced.entry(col).or_default() += mult;
            }
        }
        CompactCode {
            field: field.clone(),
            k,
            n,
            columns: reduced.into_iter().collect(),
        }
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    /// Distinct nonzero columns with multiplicities.
    pub fn columns(&self) -> &[(Vec<FieldElement>, u64)] {
        &self.columns
    }

    pub fn weight(&self, msg: &[FieldElement]) -> u64 {
        let f = &self.field;
        self.columns
            .iter()
            .filter(|(c, _)| !crate::field::dot(f, msg, c).is_zero())
            .map(|(_, m)| m)
            .sum()
    }

    /// Hamming weight distribution over all q^k codewords.
    pub fn weight_distribution(&self, budget: &Budget) -> Result<WeightDistribution> {
        let q = self.field.q();
        let count = (q as u128)
            .checked_pow(self.k as u32)
            .ok_or(Error::Overflow("q^k"))?;
        budget.codewords(count)?;
        let weights: Vec<u64> = (0..count as u64)
            .into_par_iter()
            .map(|i| self.weight(&message(q, self.k, i)))
            .collect();
        Ok(WeightDistribution::from_weights(weights))
    }

    /// [n, k, d]; d is None for the zero code.
    pub fn params(&self, budget: &Budget) -> Result<(u64, usize, Option<u64>)> {
        let dist = self.weight_distribution(budget)?;
        Ok((self.n, self.k, dist.min_nonzero()))
    }
}
