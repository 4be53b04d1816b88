//! The rings E^s and F^s, the Gray map, and codes C_L built from defining sets
//! L ⊆ R^m by exhaustive evaluation.
//!
//! An element ax + cy is stored as the pair (x, y). Both rings have additive group
//! F_q² and multiply as
//!
//! ```text
//! E: (x1, y1)(x2, y2) = (x1 x2, x2 y1)
//! F: (x1, y1)(x2, y2) = (x1 x2, x1 y2)
//! ```

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::ambient::{nonzero_counts, Ambient};
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec, FqVector};
use crate::linear::{CompactCode, GeneratorMatrix};
use crate::numeric::log_q;
use crate::simplicial::{complex_size, SimplicialComplex};
use crate::weights::WeightDistribution;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum RingKind {
    E,
    F,
}

impl fmt::Display for RingKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RingKind::E => "E",
            RingKind::F => "F",
        })
    }
}

impl FromStr for RingKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "E" | "e" => Ok(RingKind::E),
            "F" | "f" => Ok(RingKind::F),
            _ => Err(Error::Unsupported(format!("ring {s:?}"))),
        }
    }
}

/// ax + cy as (x, y).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RingElement {
    pub x: FieldElement,
    pub y: FieldElement,
}

impl RingElement {
    pub fn new(x: FieldElement, y: FieldElement) -> Self {
        RingElement { x, y }
    }
}

pub fn ring_add(f: &FieldSpec, a: RingElement, b: RingElement) -> RingElement {
    RingElement::new(f.add(a.x, b.x), f.add(a.y, b.y))
}

pub fn ring_mul(f: &FieldSpec, r1: RingElement, r2: RingElement, kind: RingKind) -> RingElement {
    match kind {
        RingKind::E => RingElement::new(f.mul(r1.x, r2.x), f.mul(r2.x, r1.y)),
        RingKind::F => RingElement::new(f.mul(r1.x, r2.x), f.mul(r1.x, r2.y)),
    }
}

/// The F_q-module action λ(ax + cy) = a(λx) + c(λy).
pub fn ring_scale(f: &FieldSpec, lambda: FieldElement, r: RingElement) -> RingElement {
    RingElement::new(f.mul(lambda, r.x), f.mul(lambda, r.y))
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RingVector(pub Vec<RingElement>);

impl RingVector {
    pub fn zero(n: usize) -> Self {
        RingVector(vec![RingElement::default(); n])
    }

    /// aβ1 + cβ2.
    pub fn from_parts(beta1: &FqVector, beta2: &FqVector) -> Result<Self> {
        if beta1.len() != beta2.len() {
            return Err(Error::LengthMismatch {
                left: beta1.len(),
                right: beta2.len(),
            });
        }
        Ok(RingVector(
            beta1.0.iter().zip(&beta2.0).map(|(&x, &y)| RingElement::new(x, y)).collect(),
        ))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn add(&self, f: &FieldSpec, other: &Self) -> Result<Self> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch {
                left: self.len(),
                right: other.len(),
            });
        }
        Ok(RingVector(self.0.iter().zip(&other.0).map(|(&a, &b)| ring_add(f, a, b)).collect()))
    }

    pub fn scale(&self, f: &FieldSpec, lambda: FieldElement) -> Self {
        RingVector(self.0.iter().map(|&r| ring_scale(f, lambda, r)).collect())
    }
}

/// Σ_i v_i x_i in R.
pub fn ring_inner(f: &FieldSpec, kind: RingKind, v: &RingVector, x: &RingVector) -> Result<RingElement> {
    if v.len() != x.len() {
        return Err(Error::LengthMismatch {
            left: v.len(),
            right: x.len(),
        });
    }
    Ok(v.0
        .iter()
        .zip(&x.0)
        .fold(RingElement::default(), |acc, (&a, &b)| ring_add(f, acc, ring_mul(f, a, b, kind))))
}

/// ax + cy ↦ (y, x + y), laid out as the y-block followed by the (x+y)-block.
pub fn gray(f: &FieldSpec, v: &RingVector) -> FqVector {
    let mut out: Vec<FieldElement> = v.0.iter().map(|r| r.y).collect();
    out.extend(v.0.iter().map(|r| f.add(r.x, r.y)));
    FqVector(out)
}

pub fn lee_weight(f: &FieldSpec, v: &RingVector) -> usize {
    v.0.iter()
        .map(|r| usize::from(!r.y.is_zero()) + usize::from(!f.add(r.x, r.y).is_zero()))
        .sum()
}

/// The five defining sets L = aL1 + cL2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum DefiningSetKind {
    /// aΔ1 + cΔ2
    D1,
    /// aΔ1^c + cΔ2
    D2,
    /// aΔ1 + cΔ2^c
    D3,
    /// aΔ1^c + cΔ2^c
    D4,
    /// (aΔ1 + cΔ2)^c
    D5,
}

impl DefiningSetKind {
    pub const ALL: [DefiningSetKind; 5] = [
        DefiningSetKind::D1,
        DefiningSetKind::D2,
        DefiningSetKind::D3,
        DefiningSetKind::D4,
        DefiningSetKind::D5,
    ];

    /// Which factors are complemented; None for D5.
    pub fn complements(self) -> Option<(bool, bool)> {
        match self {
            DefiningSetKind::D1 => Some((false, false)),
            DefiningSetKind::D2 => Some((true, false)),
            DefiningSetKind::D3 => Some((false, true)),
            DefiningSetKind::D4 => Some((true, true)),
            DefiningSetKind::D5 => None,
        }
    }

    /// Clause number of the parameter theorems, which list aΔ1+cΔ2^c before aΔ1^c+cΔ2.
    pub fn clause(self) -> &'static str {
        match self {
            DefiningSetKind::D1 => "(1)",
            DefiningSetKind::D3 => "(2)",
            DefiningSetKind::D2 => "(3)",
            DefiningSetKind::D4 => "(4)",
            DefiningSetKind::D5 => "(5)",
        }
    }

    pub fn expression(self) -> &'static str {
        match self {
            DefiningSetKind::D1 => "aΔ1+cΔ2",
            DefiningSetKind::D2 => "aΔ1^c+cΔ2",
            DefiningSetKind::D3 => "aΔ1+cΔ2^c",
            DefiningSetKind::D4 => "aΔ1^c+cΔ2^c",
            DefiningSetKind::D5 => "(aΔ1+cΔ2)^c",
        }
    }
}

impl fmt::Display for DefiningSetKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl FromStr for DefiningSetKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        DefiningSetKind::ALL
            .into_iter()
            .find(|k| k.to_string().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Unsupported(format!("defining set {s:?}")))
    }
}

/// Everything that determines a code C_L.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodeSpec {
    pub field: FieldSpec,
    pub m: usize,
    pub ring: RingKind,
    pub delta1: SimplicialComplex,
    pub delta2: SimplicialComplex,
    pub kind: DefiningSetKind,
}

impl CodeSpec {
    pub fn new(
        field: &FieldSpec,
        ring: RingKind,
        delta1: SimplicialComplex,
        delta2: SimplicialComplex,
        kind: DefiningSetKind,
    ) -> Result<Self> {
        if delta1.m() != delta2.m() {
            return Err(Error::Shape(format!(
                "Δ1 lives in dimension {}, Δ2 in {}",
                delta1.m(),
                delta2.m()
            )));
        }
        Ok(CodeSpec {
            field: field.clone(),
            m: delta1.m(),
            ring,
            delta1,
            delta2,
            kind,
        })
    }

    pub fn q(&self) -> u32 {
        self.field.q()
    }

    /// Same complexes and defining set over the other ring.
    pub fn with_ring(&self, ring: RingKind) -> Self {
        CodeSpec { ring, ..self.clone() }
    }

    /// |L|.
    pub fn length(&self) -> Result<u128> {
        let total = crate::numeric::qpow(self.q(), self.m as u32)?;
        let d1 = complex_size(&self.delta1, self.q())?;
        let d2 = complex_size(&self.delta2, self.q())?;
        Ok(match self.kind.complements() {
            Some((c1, c2)) => {
                let l1 = if c1 { total - d1 } else { d1 };
                let l2 = if c2 { total - d2 } else { d2 };
                l1 * l2
            }
            None => total * total - d1 * d2,
        })
    }
}

impl fmt::Display for CodeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "q={} m={} ring={} {} Δ1={:?} Δ2={:?}",
            self.q(),
            self.m,
            self.ring,
            self.kind,
            self.delta1,
            self.delta2
        )
    }
}

/// Factor sets of L as ambient indices. D5 keeps Δ1 and Δ2 and subtracts their product
/// from the full square.
enum Layout {
    Product { l1: Vec<usize>, l2: Vec<usize> },
    CoProduct { d1: Vec<usize>, d2: Vec<usize> },
}

fn layout(amb: &Ambient, spec: &CodeSpec) -> Layout {
    let m1 = amb.membership(&spec.delta1);
    let m2 = amb.membership(&spec.delta2);
    match spec.kind.complements() {
        Some((c1, c2)) => Layout::Product {
            l1: Ambient::select(&m1, c1),
            l2: Ambient::select(&m2, c2),
        },
        None => Layout::CoProduct {
            d1: Ambient::select(&m1, false),
            d2: Ambient::select(&m2, false),
        },
    }
}

fn check_dim(amb: &Ambient, spec: &CodeSpec) -> Result<()> {
    if amb.m() != spec.m || amb.field() != &spec.field {
        return Err(Error::Shape(format!("tables for m={} do not match {spec}", amb.m())));
    }
    Ok(())
}

/// (t1, t2) index pairs of L, t1 outer and t2 inner, both lexicographic.
pub fn defining_pairs(amb: &Ambient, spec: &CodeSpec) -> Result<Vec<(usize, usize)>> {
    check_dim(amb, spec)?;
    Ok(match layout(amb, spec) {
        Layout::Product { l1, l2 } => l1
            .iter()
            .flat_map(|&a| l2.iter().map(move |&b| (a, b)))
            .collect(),
        Layout::CoProduct { .. } => {
            let m1 = amb.membership(&spec.delta1);
            let m2 = amb.membership(&spec.delta2);
            let n = amb.size();
            (0..n)
                .flat_map(|a| (0..n).map(move |b| (a, b)))
                .filter(|&(a, b)| !(m1[a] && m2[b]))
                .collect()
        }
    })
}

/// L as ring vectors a t1 + c t2, in coordinate order.
pub fn build_defining_set(spec: &CodeSpec, budget: &Budget) -> Result<Vec<RingVector>> {
    budget.enumeration(spec.length()?)?;
    let amb = Ambient::new(&spec.field, spec.m, budget)?;
    defining_pairs(&amb, spec)?
        .into_iter()
        .map(|(a, b)| RingVector::from_parts(&amb.vector(a), &amb.vector(b)))
        .collect()
}

/// c_L(v) = (⟨v, x⟩)_{x∈L} for v = aβ1 + cβ2, evaluated with ring arithmetic.
pub fn codeword(spec: &CodeSpec, l: &[RingVector], beta1: &FqVector, beta2: &FqVector) -> Result<RingVector> {
    for b in [beta1, beta2] {
        if b.len() != spec.m {
            return Err(Error::LengthMismatch {
                left: b.len(),
                right: spec.m,
            });
        }
    }
    let v = RingVector::from_parts(beta1, beta2)?;
    l.iter()
        .map(|x| ring_inner(&spec.field, spec.ring, &v, x))
        .collect::<Result<Vec<_>>>()
        .map(RingVector)
}

/// Lee weight distribution of C_L over distinct codewords.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LeeDistribution {
    /// Length |L| over R.
    pub n: u128,
    pub distribution: WeightDistribution,
    /// Number of distinct codewords.
    pub size: u128,
    pub min_d: Option<u64>,
    /// Messages v ∈ R^m with c_L(v) = 0.
    pub kernel: u64,
}

impl LeeDistribution {
    /// F_q-dimension log_q |C_L|.
    pub fn dimension(&self, q: u32) -> Option<u32> {
        log_q(self.size, q)
    }
}

/// Weight distribution of the subfield-like code ϕ(C_L).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LinearDistribution {
    pub n: u128,
    pub k: u32,
    pub distribution: WeightDistribution,
    pub min_d: Option<u64>,
}

fn merge_hist(mut a: BTreeMap<u64, u64>, b: BTreeMap<u64, u64>) -> BTreeMap<u64, u64> {
    for (w, c) in b {
        *a.entry(w).or_insert(0) += c;
    }
    a
}

/// Histogram-based work: one pass over each factor set per β, then the message sweep.
fn sweep_work(amb: &Ambient, spec: &CodeSpec) -> u128 {
    let n = amb.size() as u128;
    let q = spec.q() as u128;
    let sets = 3 * n;
    let messages = match spec.ring {
        RingKind::E => n * n,
        RingKind::F => n * q * q,
    };
    n * sets + messages
}

/// Per-β "hit counts" g(β) = #{(t1, t2) ∈ L : ⟨β, t1⟩ ≠ 0}.
fn first_factor_hits(amb: &Ambient, spec: &CodeSpec) -> Vec<u64> {
    let q = spec.q() as usize;
    match layout(amb, spec) {
        Layout::Product { l1, l2 } => {
            let nz = nonzero_counts(&amb.histograms(&l1), q, l1.len());
            nz.into_iter().map(|c| c * l2.len() as u64).collect()
        }
        Layout::CoProduct { d1, d2 } => {
            let all: Vec<usize> = (0..amb.size()).collect();
            let nz_all = nonzero_counts(&amb.histograms(&all), q, all.len());
            let nz_1 = nonzero_counts(&amb.histograms(&d1), q, d1.len());
            let total = amb.size() as u64;
            nz_all
                .into_iter()
                .zip(nz_1)
                .map(|(a, b)| total * a - d2.len() as u64 * b)
                .collect()
        }
    }
}

/// Exhaustive Lee weight distribution of C_L.
pub fn lee_distribution(spec: &CodeSpec, budget: &Budget) -> Result<LeeDistribution> {
    let amb = Ambient::new(&spec.field, spec.m, budget)?;
    lee_distribution_in(&amb, spec, budget)
}

/// As [`lee_distribution`], reusing prebuilt tables.
pub fn lee_distribution_in(amb: &Ambient, spec: &CodeSpec, budget: &Budget) -> Result<LeeDistribution> {
    check_dim(amb, spec)?;
    budget.work(sweep_work(amb, spec))?;
    let f = &spec.field;
    let q = spec.q() as usize;
    let size = amb.size();
    let hist = match spec.ring {
        RingKind::E => {
            // y = ⟨β2, t1⟩ and x + y = ⟨β1 + β2, t1⟩, each constant along t2
            let g = first_factor_hits(amb, spec);
            (0..size)
                .into_par_iter()
                .fold(BTreeMap::new, |mut h, b1| {
                    for b2 in 0..size {
                        *h.entry(g[b2] + g[amb.add(b1, b2)]).or_insert(0) += 1;
                    }
                    h
                })
                .reduce(BTreeMap::new, merge_hist)
        }
        RingKind::F => {
            // y = ⟨β1, t2⟩ and x + y = ⟨β1, t1⟩ + ⟨β1, t2⟩; β2 never enters
            let joint = joint_counts(amb, spec);
            let sums: Vec<usize> = (0..q * q)
                .map(|ab| f.add(FieldElement((ab / q) as u32), FieldElement((ab % q) as u32)).0 as usize)
                .collect();
            (0..size)
                .into_par_iter()
                .fold(BTreeMap::new, |mut h, b1| {
                    let n = &joint[b1 * q * q..(b1 + 1) * q * q];
                    let w: u64 = (0..q * q)
                        .map(|ab| n[ab] * (u64::from(ab % q != 0) + u64::from(sums[ab] != 0)))
                        .sum();
                    *h.entry(w).or_insert(0) += size as u64;
                    h
                })
                .reduce(BTreeMap::new, merge_hist)
        }
    };
    let (distribution, kernel) = WeightDistribution::from_message_histogram(hist)?;
    let messages = (size as u128) * (size as u128);
    Ok(LeeDistribution {
        n: spec.length()?,
        size: messages / kernel as u128,
        min_d: distribution.min_nonzero(),
        distribution,
        kernel,
    })
}

/// N[β·q² + a·q + b] = #{(t1, t2) ∈ L : ⟨β,t1⟩ = a, ⟨β,t2⟩ = b}.
fn joint_counts(amb: &Ambient, spec: &CodeSpec) -> Vec<u64> {
    let q = spec.q() as usize;
    let size = amb.size();
    let outer = |h1: &[u64], h2: &[u64], out: &mut [u64], sign: i64| {
        for a in 0..q {
            for b in 0..q {
                let v = h1[a] as i64 * h2[b] as i64 * sign;
                out[a * q + b] = (out[a * q + b] as i64 + v) as u64;
            }
        }
    };
    let mut out = vec![0u64; size * q * q];
    match layout(amb, spec) {
        Layout::Product { l1, l2 } => {
            let (h1, h2) = (amb.histograms(&l1), amb.histograms(&l2));
            for b in 0..size {
                outer(&h1[b * q..][..q], &h2[b * q..][..q], &mut out[b * q * q..][..q * q], 1);
            }
        }
        Layout::CoProduct { d1, d2 } => {
            let all: Vec<usize> = (0..size).collect();
            let (ha, h1, h2) = (amb.histograms(&all), amb.histograms(&d1), amb.histograms(&d2));
            for b in 0..size {
                let o = &mut out[b * q * q..][..q * q];
                outer(&ha[b * q..][..q], &ha[b * q..][..q], o, 1);
                outer(&h1[b * q..][..q], &h2[b * q..][..q], o, -1);
            }
        }
    }
    out
}

/// Evaluates every codeword with ring arithmetic; slow, but shares nothing with
/// [`lee_distribution`] beyond the enumeration order.
pub fn lee_distribution_direct(spec: &CodeSpec, budget: &Budget) -> Result<LeeDistribution> {
    let n = spec.length()?;
    let size = crate::numeric::qpow(spec.q(), spec.m as u32)?;
    budget.work(size * size * n.max(1) * spec.m as u128)?;
    let l = build_defining_set(spec, budget)?;
    let amb = Ambient::new(&spec.field, spec.m, budget)?;
    let hist = (0..amb.size())
        .into_par_iter()
        .map(|b1| {
            let mut h = BTreeMap::new();
            for b2 in 0..amb.size() {
                let c = codeword(spec, &l, &amb.vector(b1), &amb.vector(b2)).expect("lengths match");
                *h.entry(lee_weight(&spec.field, &c) as u64).or_insert(0) += 1;
            }
            h
        })
        .reduce(BTreeMap::new, merge_hist);
    let (distribution, kernel) = WeightDistribution::from_message_histogram(hist)?;
    Ok(LeeDistribution {
        n,
        size: size * size / kernel as u128,
        min_d: distribution.min_nonzero(),
        distribution,
        kernel,
    })
}

/// Exhaustive weight distribution of ϕ(C_L), ϕ(ax + cy) = x.
pub fn subfield_distribution(spec: &CodeSpec, budget: &Budget) -> Result<LinearDistribution> {
    let amb = Ambient::new(&spec.field, spec.m, budget)?;
    subfield_distribution_in(&amb, spec, budget)
}

pub fn subfield_distribution_in(amb: &Ambient, spec: &CodeSpec, budget: &Budget) -> Result<LinearDistribution> {
    check_dim(amb, spec)?;
    budget.work(sweep_work(amb, spec))?;
    // entries ⟨β1, t1⟩; β2 is invisible after projection
    let g = first_factor_hits(amb, spec);
    let hist = g.iter().fold(BTreeMap::new(), |mut h, &w| {
        *h.entry(w).or_insert(0u64) += 1;
        h
    });
    let (distribution, kernel) = WeightDistribution::from_message_histogram(hist)?;
    let k = log_q(amb.size() as u128 / kernel as u128, spec.q()).ok_or(Error::NonUniformFibers {
        kernel,
        count: amb.size() as u64,
    })?;
    Ok(LinearDistribution {
        n: spec.length()?,
        k,
        min_d: distribution.min_nonzero(),
        distribution,
    })
}

/// Basis messages of R^m as an F_q-module: (e_i, 0) then (0, e_i).
fn module_basis(m: usize) -> Vec<(FqVector, FqVector)> {
    let unit = |i: usize| {
        let mut v = FqVector::zero(m);
        v.0[i] = FieldElement::ONE;
        v
    };
    (0..m)
        .map(|i| (unit(i), FqVector::zero(m)))
        .chain((0..m).map(|i| (FqVector::zero(m), unit(i))))
        .collect()
}

/// ϕ(C_L) from ϕ(c_L(β1, 0)) over a basis of β1, row-reduced.
pub fn subfield_code_matrix(spec: &CodeSpec, budget: &Budget) -> Result<GeneratorMatrix> {
    let n = spec.length()?;
    budget.work(n * 2 * spec.m as u128 * spec.m as u128)?;
    let l = build_defining_set(spec, budget)?;
    let rows = module_basis(spec.m)
        .into_iter()
        .map(|(b1, b2)| {
            let c = codeword(spec, &l, &b1, &b2)?;
            Ok(FqVector(c.0.iter().map(|r| r.x).collect()))
        })
        .collect::<Result<Vec<_>>>()?;
    GeneratorMatrix::from_rows(&spec.field, rows, l.len())
}

/// φ(C_L) from Gray images over a module basis, after checking that the Gray image
/// of the code is closed under addition and F_q scaling on that basis.
pub fn gray_code_matrix(spec: &CodeSpec, budget: &Budget) -> Result<GeneratorMatrix> {
    let f = &spec.field;
    let n = spec.length()?;
    let basis = module_basis(spec.m);
    let checks = (basis.len() * basis.len() + basis.len() * f.q() as usize) as u128;
    budget.work(n * checks * spec.m as u128)?;
    let l = build_defining_set(spec, budget)?;
    let image = |b1: &FqVector, b2: &FqVector| -> Result<FqVector> { Ok(gray(f, &codeword(spec, &l, b1, b2)?)) };
    let rows = basis
        .iter()
        .map(|(b1, b2)| image(b1, b2))
        .collect::<Result<Vec<_>>>()?;
    for (i, (u1, u2)) in basis.iter().enumerate() {
        for (j, (v1, v2)) in basis.iter().enumerate().skip(i) {
            let sum = image(&u1.add(f, v1)?, &u2.add(f, v2)?)?;
            if sum != rows[i].add(f, &rows[j])? {
                return Err(Error::Nonlinear(format!("φ(c(u+v)) ≠ φ(c(u)) + φ(c(v)) for basis {i}, {j} of {spec}")));
            }
        }
        for lambda in f.nonzero() {
            let scaled = image(&u1.scale(f, lambda), &u2.scale(f, lambda))?;
            if scaled != rows[i].scale(f, lambda) {
                return Err(Error::Nonlinear(format!("φ(c(λu)) ≠ λφ(c(u)) for basis {i}, λ={lambda} of {spec}")));
            }
        }
    }
    GeneratorMatrix::from_rows(f, rows, 2 * l.len())
}

/// Column of the coordinate functional v ↦ ⟨w, ·⟩ for an ambient vector w, padded into
/// message coordinates (β1 block, β2 block).
fn column(amb: &Ambient, first: Option<usize>, second: Option<usize>) -> Vec<FieldElement> {
    let m = amb.m();
    let mut c = vec![FieldElement::ZERO; 2 * m];
    if let Some(i) = first {
        c[..m].copy_from_slice(amb.coords(i));
    }
    if let Some(i) = second {
        c[m..].copy_from_slice(amb.coords(i));
    }
    c
}

/// Multiplicity of each t1 among the pairs of L.
fn t1_multiplicities(amb: &Ambient, spec: &CodeSpec) -> Vec<u64> {
    let size = amb.size();
    let mut mult = vec![0u64; size];
    match layout(amb, spec) {
        Layout::Product { l1, l2 } => l1.iter().for_each(|&t| mult[t] = l2.len() as u64),
        Layout::CoProduct { d1, d2 } => {
            mult.iter_mut().for_each(|c| *c = size as u64);
            d1.iter().for_each(|&t| mult[t] -= d2.len() as u64);
        }
    }
    mult
}

/// φ(C_L) as distinct generator columns with multiplicities, read off the defining set
/// without evaluating codewords.
pub fn gray_code_compact(amb: &Ambient, spec: &CodeSpec) -> Result<CompactCode> {
    check_dim(amb, spec)?;
    let size = amb.size();
    let f = &spec.field;
    let cols: Vec<(Vec<FieldElement>, u64)> = match spec.ring {
        RingKind::E => {
            // y-block: ⟨β2, t1⟩, (x+y)-block: ⟨β1 + β2, t1⟩
            let mult = t1_multiplicities(amb, spec);
            (0..size)
                .filter(|&t| mult[t] > 0)
                .flat_map(|t| [(column(amb, None, Some(t)), mult[t]), (column(amb, Some(t), Some(t)), mult[t])])
                .collect()
        }
        RingKind::F => {
            // y-block: ⟨β1, t2⟩, (x+y)-block: ⟨β1, t1 + t2⟩
            let mut by_t2 = vec![0u64; size];
            let mut by_sum = vec![0u64; size];
            match layout(amb, spec) {
                Layout::Product { l1, l2 } => {
                    for &a in &l1 {
                        for &b in &l2 {
                            by_t2[b] += 1;
                            by_sum[amb.add(a, b)] += 1;
                        }
                    }
                }
                Layout::CoProduct { d1, d2 } => {
                    by_t2.iter_mut().for_each(|c| *c = size as u64);
                    by_sum.iter_mut().for_each(|c| *c = size as u64);
                    for &b in &d2 {
                        by_t2[b] -= d1.len() as u64;
                    }
                    for &a in &d1 {
                        for &b in &d2 {
                            by_sum[amb.add(a, b)] -= 1;
                        }
                    }
                }
            }
            (0..size)
                .map(|t| (amb.coords(t).to_vec(), by_t2[t]))
                .chain((0..size).map(|t| (amb.coords(t).to_vec(), by_sum[t])))
                .collect()
        }
    };
    let dim = if spec.ring == RingKind::E { 2 * spec.m } else { spec.m };
    Ok(CompactCode::from_columns(f, dim, cols))
}

/// ϕ(C_L) as distinct generator columns with multiplicities.
pub fn subfield_code_compact(amb: &Ambient, spec: &CodeSpec) -> Result<CompactCode> {
    check_dim(amb, spec)?;
    let mult = t1_multiplicities(amb, spec);
    let cols = (0..amb.size()).map(|t| (amb.coords(t).to_vec(), mult[t]));
    Ok(CompactCode::from_columns(&spec.field, spec.m, cols))
}
