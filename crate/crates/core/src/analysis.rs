//! Certificates for distance-optimality, minimality and self-orthogonality.
//!
//! Exhaustive methods (Griesmer sums, minimality scans, Gram matrices) decide a property
//! for one concrete code. The theorem-based predicates only ever certify: when their
//! inequality fails they say inconclusive.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::budget::Budget;
use crate::closed_form::{ring_code_params, theorem2_params, theorem3_params};
use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec};
use crate::linear::{message, CompactCode, GeneratorMatrix};
use crate::numeric::{ipow, mul};
use crate::ring_codes::{CodeSpec, DefiningSetKind, RingKind};
use crate::simplicial::{complex_size, set_len, subset_intersections, IndexSet, SimplicialComplex};
use crate::weights::WeightDistribution;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Property {
    DistanceOptimal,
    AlmostOptimal,
    Minimal,
    SelfOrthogonal,
    HermitianSelfOrthogonal,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Griesmer,
    AshikhminBarg,
    Exhaustive,
    Gram,
    TauCondition,
    Prop5,
    Prop6,
    Theorem6,
    Theorem7,
    Divisibility,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Certified,
    Refuted,
    Inconclusive,
}

/// Which linear code over F_q a certificate is about.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Image {
    Gray,
    Subfield,
}

/// Data that lets a reader re-check a verdict.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// S(d) = Σ_{i<k} ⌈d/q^i⌉ at d, d+1, d+2.
    Griesmer {
        n: u128,
        k: u32,
        d: u128,
        q: u32,
        s_d: u128,
        s_d1: u128,
        s_d2: u128,
        griesmer_code: bool,
    },
    WeightRatio { wt_min: u64, wt_max: u64, q: u32 },
    /// Messages of u and w, with supp(w) ⊆ supp(u) and w ∉ F_q·u; codewords when the
    /// code was given by a generator matrix.
    Covering {
        u_message: Vec<u32>,
        w_message: Vec<u32>,
        #[serde(skip_serializing_if = "Option::is_none")]
        u: Option<Vec<u32>>,
        #[serde(skip_serializing_if = "Option::is_none")]
        w: Option<Vec<u32>>,
    },
    /// Every projective codeword was checked.
    Scan { codewords: u128 },
    /// First nonzero Gram entry, or None when the whole matrix vanishes.
    Gram { rows: usize, nonzero: Option<(usize, usize, u32)> },
    Divisibility { divisor: u64, offending_weight: Option<u64> },
    /// τ values (None = no admissible pair, i.e. +∞) and the threshold applied to `used`.
    Tau {
        tau1: Option<u32>,
        tau2: Option<u32>,
        used: &'static str,
        threshold: u32,
    },
    /// lhs `relation` rhs, as evaluated.
    Inequality {
        statement: String,
        lhs: i128,
        rhs: i128,
        holds: bool,
    },
    /// Theorem 7 iff on the number of maximal elements of Δ1.
    MaximalCount { count: usize },
    Prop6 {
        tau_lenient: Option<u32>,
        digits_nonzero: bool,
        readings_disagree: bool,
        conditions: Vec<(String, i128, i128, bool)>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub property: Property,
    pub method: Method,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Certificate {
    fn new(property: Property, method: Method, verdict: Verdict, witness: Option<Witness>) -> Self {
        Certificate {
            property,
            method,
            verdict,
            witness,
            note: None,
        }
    }

    fn inconclusive(property: Property, method: Method, note: impl Into<String>) -> Self {
        Certificate {
            note: Some(note.into()),
            ..Self::new(property, method, Verdict::Inconclusive, None)
        }
    }

    fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn certified(&self) -> bool {
        self.verdict == Verdict::Certified
    }

    pub fn refuted(&self) -> bool {
        self.verdict == Verdict::Refuted
    }
}

/// S(d) = Σ_{i=0}^{k−1} ⌈d/q^i⌉.
pub fn griesmer_sum(k: u32, d: u128, q: u32) -> u128 {
    let mut total = 0u128;
    let mut pow = 1u128;
    for _ in 0..k {
        total += d.div_ceil(pow);
        pow = pow.saturating_mul(q as u128);
    }
    total
}

/// Distance-optimality of an [n, k, d]_q code judged by the Griesmer bound.
pub fn griesmer_certify(n: u128, k: u32, d: u128, q: u32) -> Certificate {
    use Property::*;
    if k == 0 || d == 0 {
        return Certificate::inconclusive(DistanceOptimal, Method::Griesmer, "needs k ≥ 1 and d ≥ 1");
    }
    let (s_d, s_d1, s_d2) = (griesmer_sum(k, d, q), griesmer_sum(k, d + 1, q), griesmer_sum(k, d + 2, q));
    let witness = Witness::Griesmer {
        n,
        k,
        d,
        q,
        s_d,
        s_d1,
        s_d2,
        griesmer_code: s_d == n,
    };
    let (property, verdict, note) = if s_d > n {
        (DistanceOptimal, Verdict::Refuted, Some("no code meets these parameters"))
    } else if s_d1 > n {
        (DistanceOptimal, Verdict::Certified, (s_d == n).then_some("Griesmer code"))
    } else if s_d2 > n {
        (AlmostOptimal, Verdict::Certified, Some("Griesmer-relative: [n, k, d+1] would meet the bound"))
    } else {
        (DistanceOptimal, Verdict::Inconclusive, Some("the bound allows [n, k, d+1]"))
    };
    let c = Certificate::new(property, Method::Griesmer, verdict, Some(witness));
    match note {
        Some(n) => c.with_note(n),
        None => c,
    }
}

/// Ashikhmin–Barg: q·wt_min > (q−1)·wt_max implies minimal.
pub fn ab_minimal(dist: &WeightDistribution, q: u32) -> Result<Certificate> {
    let (Some(wt_min), Some(wt_max)) = (dist.min_nonzero(), dist.max_weight()) else {
        return Err(Error::EmptySupport);
    };
    let witness = Witness::WeightRatio { wt_min, wt_max, q };
    let holds = q as u128 * wt_min as u128 > (q as u128 - 1) * wt_max as u128;
    let verdict = if holds { Verdict::Certified } else { Verdict::Inconclusive };
    Ok(Certificate::new(Property::Minimal, Method::AshikhminBarg, verdict, Some(witness)))
}

/// Incremental row-echelon basis; `insert` reports whether the rank grew.
struct Echelon<'a> {
    field: &'a FieldSpec,
    rows: Vec<(usize, Vec<FieldElement>)>,
}

impl<'a> Echelon<'a> {
    fn new(field: &'a FieldSpec) -> Self {
        Echelon { field, rows: Vec::new() }
    }

    fn insert(&mut self, v: &[FieldElement]) -> bool {
        let f = self.field;
        let mut v = v.to_vec();
        for (pivot, row) in &self.rows {
            let c = v[*pivot];
            if !c.is_zero() {
                for (x, &r) in v.iter_mut().zip(row) {
                    *x = f.sub(*x, f.mul(c, r));
                }
            }
        }
        let Some(pivot) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = f.inv(v[pivot]).expect("nonzero pivot");
        v.iter_mut().for_each(|x| *x = f.mul(*x, inv));
        self.rows.push((pivot, v));
        true
    }

    fn rank(&self) -> usize {
        self.rows.len()
    }

    /// A nonzero vector orthogonal (under the plain dot product) to every inserted row and
    /// not a multiple of `avoid`, if one exists.
    fn null_vector_avoiding(&self, k: usize, avoid: &[FieldElement]) -> Option<Vec<FieldElement>> {
        let f = self.field;
        // full reduction so free coordinates can be set independently
        let mut rows = self.rows.clone();
        rows.sort_by_key(|(p, _)| *p);
        for i in 0..rows.len() {
            let (p, pivot_row) = rows[i].clone();
            for (j, (_, row)) in rows.iter_mut().enumerate() {
                if j != i && !row[p].is_zero() {
                    let c = row[p];
                    for (x, &r) in row.iter_mut().zip(&pivot_row) {
                        *x = f.sub(*x, f.mul(c, r));
                    }
                }
            }
        }
        let pivots: Vec<usize> = rows.iter().map(|(p, _)| *p).collect();
        let free: Vec<usize> = (0..k).filter(|c| !pivots.contains(c)).collect();
        let basis: Vec<Vec<FieldElement>> = free
            .iter()
            .map(|&fc| {
                let mut v = vec![FieldElement::ZERO; k];
                v[fc] = FieldElement::ONE;
                for (p, row) in &rows {
                    v[*p] = f.neg(row[fc]);
                }
                v
            })
            .collect();
        let parallel = |v: &[FieldElement]| {
            let mut e = Echelon::new(f);
            e.insert(avoid);
            !e.insert(v)
        };
        basis.into_iter().find(|v| !parallel(v))
    }
}

/// Exact minimality of the code spanned by `columns` ⊆ F_q^k: a codeword ⟨x, ·⟩ is minimal
/// iff the columns it vanishes on span a hyperplane. Returns a non-minimal (x, y) pair.
fn covering_pair(
    field: &FieldSpec,
    k: usize,
    columns: &[Vec<FieldElement>],
    budget: &Budget,
) -> Result<Option<(Vec<FieldElement>, Vec<FieldElement>)>> {
    let q = field.q();
    let count = (q as u128).checked_pow(k as u32).ok_or(Error::Overflow("q^k"))?;
    budget.codewords(count)?;
    if k <= 1 {
        return Ok(None);
    }
    // vanishing and rank only see the projective class of a column
    let mut columns: Vec<Vec<FieldElement>> = columns
        .iter()
        .filter_map(|c| {
            let lead = *c.iter().find(|x| !x.is_zero())?;
            let inv = field.inv(lead).expect("nonzero");
            Some(c.iter().map(|&x| field.mul(x, inv)).collect())
        })
        .collect();
    columns.sort();
    columns.dedup();
    let found = (1..count as u64).into_par_iter().find_map_first(|i| {
        let x = message(q, k, i);
        // projective representatives: leading nonzero entry is 1
        if x.iter().find(|c| !c.is_zero()) != Some(&FieldElement::ONE) {
            return None;
        }
        let mut e = Echelon::new(field);
        for c in &columns {
            if crate::field::dot(field, &x, c).is_zero() && e.insert(c) && e.rank() == k - 1 {
                return None;
            }
        }
        e.null_vector_avoiding(k, &x).map(|y| (x, y))
    });
    Ok(found)
}

fn raw(v: &[FieldElement]) -> Vec<u32> {
    v.iter().map(|x| x.0).collect()
}

fn minimality_certificate(found: Option<(Vec<FieldElement>, Vec<FieldElement>)>, count: u128, codewords: Option<(Vec<u32>, Vec<u32>)>) -> Certificate {
    match found {
        None => Certificate::new(
            Property::Minimal,
            Method::Exhaustive,
            Verdict::Certified,
            Some(Witness::Scan { codewords: count }),
        ),
        Some((x, y)) => {
            let (u, w) = codewords.map_or((None, None), |(u, w)| (Some(u), Some(w)));
            Certificate::new(
                Property::Minimal,
                Method::Exhaustive,
                Verdict::Refuted,
                Some(Witness::Covering {
                    u_message: raw(&x),
                    w_message: raw(&y),
                    u,
                    w,
                }),
            )
        }
    }
}

/// Exhaustive minimality of the row space of `g`.
pub fn minimal_exhaustive(g: &GeneratorMatrix, budget: &Budget) -> Result<Certificate> {
    let f = g.field();
    let mut distinct: Vec<Vec<FieldElement>> = (0..g.n()).map(|j| g.column(j)).collect();
    distinct.sort();
    distinct.dedup();
    distinct.retain(|c| c.iter().any(|x| !x.is_zero()));
    let found = covering_pair(f, g.k(), &distinct, budget)?;
    let words = found
        .as_ref()
        .map(|(x, y)| (raw(&g.encode(x).0), raw(&g.encode(y).0)));
    let count = (f.q() as u128).pow(g.k() as u32);
    Ok(minimality_certificate(found, count, words))
}

/// As [`minimal_exhaustive`] for a code in compact form; the witness carries messages.
pub fn minimal_exhaustive_compact(c: &CompactCode, budget: &Budget) -> Result<Certificate> {
    let cols: Vec<Vec<FieldElement>> = c.columns().iter().map(|(col, _)| col.clone()).collect();
    let found = covering_pair(c.field(), c.k(), &cols, budget)?;
    let count = (c.field().q() as u128).pow(c.k() as u32);
    Ok(minimality_certificate(found, count, None))
}

fn so_property(hermitian: bool) -> Property {
    if hermitian {
        Property::HermitianSelfOrthogonal
    } else {
        Property::SelfOrthogonal
    }
}

/// Gram verdict over basis rows given as weighted columns.
fn gram(field: &FieldSpec, k: usize, columns: &[(Vec<FieldElement>, u64)], hermitian: bool) -> Result<Certificate> {
    if hermitian && field.q() != 4 {
        return Err(Error::HermitianNeedsQ4(field.q() as u64));
    }
    let conj = |x: FieldElement| if hermitian { field.conjugate(x).expect("q = 4") } else { x };
    for i in 0..k {
        for j in i..k {
            let mut acc = FieldElement::ZERO;
            for (c, mult) in columns {
                let term = field.mul(c[i], conj(c[j]));
                acc = field.add(acc, field.scale_int(term, *mult));
            }
            if !acc.is_zero() {
                let w = Witness::Gram {
                    rows: k,
                    nonzero: Some((i, j, acc.0)),
                };
                return Ok(Certificate::new(so_property(hermitian), Method::Gram, Verdict::Refuted, Some(w)));
            }
        }
    }
    // Hermitian Gram matrices are conjugate-symmetric, so the upper triangle suffices
    let w = Witness::Gram { rows: k, nonzero: None };
    Ok(Certificate::new(so_property(hermitian), Method::Gram, Verdict::Certified, Some(w)))
}

/// Divisor for the weight criterion, and whether it is an equivalence.
fn divisibility_rule(q: u32, hermitian: bool) -> Option<(u64, bool)> {
    match (q, hermitian) {
        (2, false) => Some((4, false)),
        (3, false) => Some((3, true)),
        (4, true) => Some((2, true)),
        _ => None,
    }
}

/// The weight-divisibility criterion; None where no criterion is known.
pub fn divisibility_certificate(dist: &WeightDistribution, q: u32, hermitian: bool) -> Option<Certificate> {
    let (divisor, iff) = divisibility_rule(q, hermitian)?;
    let offending = dist.weights().find(|w| w % divisor != 0);
    let verdict = match (offending, iff) {
        (None, _) => Verdict::Certified,
        (Some(_), true) => Verdict::Refuted,
        (Some(_), false) => Verdict::Inconclusive,
    };
    let w = Witness::Divisibility {
        divisor,
        offending_weight: offending,
    };
    Some(Certificate::new(so_property(hermitian), Method::Divisibility, verdict, Some(w)))
}

/// Gram verdict plus the divisibility diagnostic.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SelfOrthogonality {
    pub gram: Certificate,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub divisibility: Option<Certificate>,
}

/// (Hermitian) self-orthogonality of the row space of `g`.
pub fn self_orthogonal(g: &GeneratorMatrix, hermitian: bool, budget: &Budget) -> Result<SelfOrthogonality> {
    self_orthogonal_compact(&g.compact(), hermitian, budget)
}

pub fn self_orthogonal_compact(c: &CompactCode, hermitian: bool, budget: &Budget) -> Result<SelfOrthogonality> {
    let gram = gram_compact(c, hermitian)?;
    let divisibility = match divisibility_rule(c.field().q(), hermitian) {
        Some(_) => divisibility_certificate(&c.weight_distribution(budget)?, c.field().q(), hermitian),
        None => None,
    };
    Ok(SelfOrthogonality { gram, divisibility })
}

/// Only the Gram verdict, with no codeword enumeration.
pub fn gram_compact(c: &CompactCode, hermitian: bool) -> Result<Certificate> {
    gram(c.field(), c.k(), c.columns(), hermitian)
}

/// τ1, τ2 (None = +∞) and the sufficient-condition verdicts per q.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TauReport {
    pub tau1: Option<u32>,
    pub tau2: Option<u32>,
    /// q → (τ1 meets the threshold, τ2 meets the threshold).
    pub verdicts: BTreeMap<u32, (bool, bool)>,
}

fn tau_threshold(q: u32) -> Option<u32> {
    match q {
        2 => Some(2),
        3 | 4 => Some(1),
        _ => None,
    }
}

fn meets(tau: Option<u32>, threshold: u32) -> bool {
    tau.is_none_or(|t| t >= threshold)
}

/// min |∩S1| + |∩S2| − 1 over nonempty S1 ⊆ 𝓕, S2 ⊆ 𝓗, filtered by ∩S1 ≠ ∅ (τ1) or
/// ∩S1 ∪ ∩S2 ≠ ∅ (τ2).
pub fn tau_conditions(f: &SimplicialComplex, h: &SimplicialComplex) -> TauReport {
    let (s1, s2) = (subset_intersections(f.maximal()), subset_intersections(h.maximal()));
    let mut tau1: Option<u32> = None;
    let mut tau2: Option<u32> = None;
    let better = |cur: Option<u32>, v: u32| Some(cur.map_or(v, |c| c.min(v)));
    for &(_, a) in &s1 {
        for &(_, b) in &s2 {
            // the value is |∩S1| + |∩S2| − 1, which is ≥ 0 under either filter
            let v = (set_len(a) + set_len(b)).saturating_sub(1);
            if a != 0 {
                tau1 = better(tau1, v);
            }
            if a | b != 0 {
                tau2 = better(tau2, v);
            }
        }
    }
    let verdicts = [2, 3, 4]
        .into_iter()
        .map(|q| {
            let t = tau_threshold(q).expect("covered q");
            (q, (meets(tau1, t), meets(tau2, t)))
        })
        .collect();
    TauReport { tau1, tau2, verdicts }
}

/// Self-orthogonality of the Gray image or the subfield code from τ, when the parameter
/// theorem for the spec applies.
pub fn tau_certificate(spec: &CodeSpec, image: Image) -> Certificate {
    let q = spec.q();
    let property = so_property(q == 4);
    let Some(threshold) = tau_threshold(q) else {
        return Certificate::inconclusive(property, Method::TauCondition, format!("no τ criterion for q = {q}"));
    };
    let applies = match image {
        Image::Gray => ring_code_params(spec).is_ok(),
        Image::Subfield => theorem3_params(spec).is_ok(),
    };
    if !applies {
        return Certificate::inconclusive(property, Method::TauCondition, "parameter theorem hypotheses fail");
    }
    let report = tau_conditions(&spec.delta1, &spec.delta2);
    let (used, tau) = match (image, spec.ring) {
        (Image::Gray, RingKind::F) => ("tau2", report.tau2),
        _ => ("tau1", report.tau1),
    };
    let w = Witness::Tau {
        tau1: report.tau1,
        tau2: report.tau2,
        used,
        threshold,
    };
    let verdict = if meets(tau, threshold) { Verdict::Certified } else { Verdict::Inconclusive };
    Certificate::new(property, Method::TauCondition, verdict, Some(w))
}

/// Certified when `lhs > rhs`.
fn inequality(property: Property, method: Method, statement: &str, lhs: i128, rhs: i128) -> Certificate {
    comparison(property, method, statement, lhs, rhs, lhs > rhs)
}

fn comparison(property: Property, method: Method, statement: &str, lhs: i128, rhs: i128, holds: bool) -> Certificate {
    let w = Witness::Inequality {
        statement: statement.to_string(),
        lhs,
        rhs,
        holds,
    };
    let verdict = if holds { Verdict::Certified } else { Verdict::Inconclusive };
    Certificate::new(property, method, verdict, Some(w))
}

/// Σ_i q^{|F_i|+1}.
fn shifted_power_sum(c: &SimplicialComplex, q: u32) -> Result<i128> {
    c.maximal().iter().try_fold(0i128, |acc, &s| Ok(acc + ipow(q, set_len(s) + 1)?))
}

/// Minimality from Theorem 6 (F-ring Gray images) or Theorem 7 (subfield codes).
pub fn minimality_conditions(spec: &CodeSpec, image: Image) -> Result<Certificate> {
    use DefiningSetKind::*;
    let q = spec.q();
    let qi = q as i128;
    let total = ipow(q, spec.m as u32)?;
    let d1 = complex_size(&spec.delta1, q)? as i128;
    let d2 = complex_size(&spec.delta2, q)? as i128;
    match image {
        Image::Gray => {
            const M: Method = Method::Theorem6;
            if spec.ring != RingKind::F || matches!(spec.kind, D1 | D2) {
                return Err(Error::Unsupported(format!(
                    "no minimality criterion for the Gray image of {} over {}",
                    spec.kind, spec.ring
                )));
            }
            let params = match theorem2_params(spec) {
                Ok(p) => p,
                Err(e) => return Ok(Certificate::inconclusive(Property::Minimal, M, e.to_string())),
            };
            let sh1 = shifted_power_sum(&spec.delta2, q)?;
            Ok(match spec.kind {
                D3 => inequality(Property::Minimal, M, "q^m > Σ q^{|H_j|+1}", total, sh1),
                D4 => {
                    let kappa2 = params.kappa2.expect("set for D4");
                    let lhs = mul(total, (total - d1) + (total - d2) - d1)?;
                    let rhs = qi * kappa2 + (qi - 1) * d2 * spec.delta1.power_sum(q)? as i128;
                    inequality(
                        Property::Minimal,
                        M,
                        "q^m(|Δ1^c|+|Δ2^c|−|Δ1|) > qκ2 + (q−1)|Δ2|Σ q^{|F_i|}",
                        lhs,
                        rhs,
                    )
                }
                _ => inequality(
                    Property::Minimal,
                    M,
                    "q^{2m} > |Δ1| Σ q^{|H_j|+1}",
                    mul(total, total)?,
                    mul(d1, sh1)?,
                ),
            })
        }
        Image::Subfield => {
            const M: Method = Method::Theorem7;
            if let Err(e) = theorem3_params(spec) {
                return Ok(Certificate::inconclusive(Property::Minimal, M, e.to_string()));
            }
            let sf1 = shifted_power_sum(&spec.delta1, q)?;
            Ok(match spec.kind {
                D1 | D3 => {
                    let count = spec.delta1.maximal().len();
                    let verdict = if count == 1 { Verdict::Certified } else { Verdict::Refuted };
                    Certificate::new(Property::Minimal, M, verdict, Some(Witness::MaximalCount { count }))
                }
                D2 | D4 => inequality(Property::Minimal, M, "q^m > Σ q^{|F_i|+1}", total, sf1),
                D5 => inequality(
                    Property::Minimal,
                    M,
                    "q^{2m} > |Δ2| Σ q^{|F_i|+1}",
                    mul(total, total)?,
                    mul(d2, sf1)?,
                ),
            })
        }
    }
}

fn single(c: &SimplicialComplex) -> Option<IndexSet> {
    match c.maximal() {
        [a] => Some(*a),
        _ => None,
    }
}

/// Distance-optimality of the F-ring Gray image of aΔ_A + cΔ_B^c, or of the subfield code
/// of aΔ_A^c + cΔ_B, from the single-maximal-element inequalities.
pub fn prop5_certificate(spec: &CodeSpec, image: Image) -> Result<Certificate> {
    const M: Method = Method::Prop5;
    const P: Property = Property::DistanceOptimal;
    let (Some(a), Some(b)) = (single(&spec.delta1), single(&spec.delta2)) else {
        return Err(Error::Shape("needs 𝓕 = {A} and 𝓗 = {B}".into()));
    };
    match image {
        Image::Gray if spec.ring == RingKind::F && spec.kind == DefiningSetKind::D3 => {}
        Image::Subfield if spec.kind == DefiningSetKind::D2 => {}
        _ => {
            return Err(Error::Shape(format!(
                "covers the F-ring Gray image of D3 and the subfield code of D2, not {image:?} of {} {}",
                spec.ring, spec.kind
            )))
        }
    }
    let hyp = match image {
        Image::Gray => theorem2_params(spec),
        Image::Subfield => theorem3_params(spec),
    };
    if let Err(e) = hyp {
        return Ok(Certificate::inconclusive(P, M, e.to_string()));
    }
    let q = spec.q();
    let (na, nb, m) = (set_len(a), set_len(b), spec.m as u32);
    let p = |e: u32| ipow(q, e);
    let (s, lhs, rhs) = if na + nb < m {
        match image {
            Image::Gray if q == 2 => ("2q^{|A|} < |A|+|B|+2", 2 * p(na)?, (na + nb + 2) as i128),
            Image::Gray => ("0 < 2q^{|A|} < |A|+|B|+1", 2 * p(na)?, (na + nb + 1) as i128),
            Image::Subfield => ("1 ≤ q^{|B|} < |A|+|B|+1", p(nb)?, (na + nb + 1) as i128),
        }
    } else if na + nb < 2 * m {
        match image {
            Image::Gray => (
                "2q^{|A|+|B|−m}(q^{m−|B|}−1) < m",
                2 * p(na + nb - m)? * (p(m - nb)? - 1),
                m as i128,
            ),
            Image::Subfield => (
                "q^{|A|+|B|−m}(q^{m−|A|}−1) < m",
                p(na + nb - m)? * (p(m - na)? - 1),
                m as i128,
            ),
        }
    } else {
        return Ok(Certificate::inconclusive(P, M, "needs |A| + |B| ≤ 2m − 1"));
    };
    Ok(comparison(P, M, s, lhs, rhs, lhs < rhs))
}

/// Base-q digits of n, least significant first.
fn digits(mut n: u128, q: u32) -> Vec<u32> {
    let mut out = Vec::new();
    while n > 0 {
        out.push((n % q as u128) as u32);
        n /= q as u128;
    }
    out
}

/// Distance-optimality of the subfield code of aΔ1^c + cΔ2 with 𝓕 = {F1} and pairwise
/// disjoint 𝓗, from the digit condition on |𝓗| − 1.
pub fn prop6_certificate(spec: &CodeSpec) -> Result<Certificate> {
    const M: Method = Method::Prop6;
    const P: Property = Property::DistanceOptimal;
    let Some(f1) = single(&spec.delta1) else {
        return Err(Error::Shape("needs 𝓕 = {F1}".into()));
    };
    if spec.kind != DefiningSetKind::D2 {
        return Err(Error::Shape(format!("covers subfield codes of D2, not {}", spec.kind)));
    }
    let h = spec.delta2.maximal();
    let (nf, m) = (set_len(f1), spec.m as u32);
    let disjoint = h.iter().enumerate().all(|(i, a)| h[i + 1..].iter().all(|b| a & b == 0));
    let min_h = h.iter().map(|&s| set_len(s)).min().unwrap_or(0);
    if m <= nf || min_h + nf < m || !disjoint {
        return Err(Error::Shape(
            "needs m > |F1|, min |H_i| + |F1| ≥ m and pairwise disjoint H_i".into(),
        ));
    }
    if let Err(e) = theorem3_params(spec) {
        return Ok(Certificate::inconclusive(P, M, e.to_string()));
    }
    let q = spec.q();
    let km1 = h.len() as u128 - 1;
    let ds = digits(km1, q);
    let tau = ds.iter().position(|&d| d != 0).map(|t| t as u32);
    let digits_nonzero = tau.is_none_or(|t| ds[t as usize..].iter().all(|&d| d != 0));
    let d2 = complex_size(&spec.delta2, q)? as i128;
    let gap = ipow(q, m - nf)?;
    let c1 = (
        "τ + |F1| > m".to_string(),
        tau.map_or(i128::MAX, |t| (t + nf) as i128),
        m as i128,
        tau.is_none_or(|t| t + nf > m),
    );
    // (1 − q^{|F1|−m})|Δ2| < m, scaled by q^{m−|F1|}
    let (l2, r2) = (mul(gap - 1, d2)?, mul(m as i128, gap)?);
    let c2 = ("(q^{m−|F1|}−1)|Δ2| < m·q^{m−|F1|}".to_string(), l2, r2, l2 < r2);
    let lenient = c1.3 && c2.3;
    let readings_disagree = lenient && !digits_nonzero;
    let w = Witness::Prop6 {
        tau_lenient: tau,
        digits_nonzero,
        readings_disagree,
        conditions: vec![c1, c2],
    };
    let verdict = if lenient && !readings_disagree { Verdict::Certified } else { Verdict::Inconclusive };
    let c = Certificate::new(P, M, verdict, Some(w));
    Ok(if readings_disagree {
        c.with_note("zero digit between τ and the top digit: the two readings disagree")
    } else {
        c
    })
}

/// Every optimality predicate whose shape matches the spec and image.
pub fn optimality_predicates(spec: &CodeSpec, image: Image) -> Result<Vec<Certificate>> {
    let mut out = Vec::new();
    let mut reasons = Vec::new();
    match prop5_certificate(spec, image) {
        Ok(c) => out.push(c),
        Err(e) => reasons.push(format!("Proposition 5: {e}")),
    }
    if image == Image::Subfield {
        match prop6_certificate(spec) {
            Ok(c) => out.push(c),
            Err(e) => reasons.push(format!("Proposition 6: {e}")),
        }
    } else {
        reasons.push("Proposition 6: covers subfield codes only".into());
    }
    if out.is_empty() {
        return Err(Error::Shape(reasons.join("; ")));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{make_field, FqVector};
    use crate::simplicial::canonicalize;

    fn cx(fam: &[&[usize]], m: usize) -> SimplicialComplex {
        canonicalize(&fam.iter().map(|f| f.to_vec()).collect::<Vec<_>>(), m).unwrap()
    }

    fn spec(p: u32, m: usize, ring: RingKind, kind: DefiningSetKind, f: &[&[usize]], h: &[&[usize]]) -> CodeSpec {
        CodeSpec::new(&make_field(p, 1).unwrap(), ring, cx(f, m), cx(h, m), kind).unwrap()
    }

    fn matrix(p: u32, rows: &[&[u32]]) -> GeneratorMatrix {
        let f = make_field(p, 1).unwrap();
        let n = rows[0].len();
        GeneratorMatrix::from_rows(&f, rows.iter().map(|r| FqVector::from_u32(r)).collect(), n).unwrap()
    }

    #[test]
    fn griesmer_examples() {
        let c = griesmer_certify(16, 3, 8, 2);
        assert!(c.certified() && c.property == Property::DistanceOptimal);
        assert!(matches!(c.witness, Some(Witness::Griesmer { s_d: 14, s_d1: 17, .. })));
        let c = griesmer_certify(972, 5, 648, 3);
        assert!(matches!(c.witness, Some(Witness::Griesmer { s_d1: 973, .. })) && c.certified());
        let c = griesmer_certify(9, 1, 9, 5);
        assert!(matches!(c.witness, Some(Witness::Griesmer { griesmer_code: true, .. })));
        // S(5) = 10 ≤ 10 < S(6) = 11
        let c = griesmer_certify(10, 3, 4, 2);
        assert!(c.certified() && c.property == Property::AlmostOptimal);
        assert_eq!(griesmer_certify(20, 3, 4, 2).verdict, Verdict::Inconclusive);
        assert_eq!(griesmer_certify(6, 3, 4, 2).verdict, Verdict::Refuted);
    }

    #[test]
    fn griesmer_sum_saturates_at_ones() {
        assert_eq!(griesmer_sum(6, 3, 2), 3 + 2 + 1 + 1 + 1 + 1);
        assert_eq!(griesmer_sum(3, 649, 3), 649 + 217 + 73);
    }

    #[test]
    fn ab_examples() {
        let d = |pairs: &[(u64, u64)]| WeightDistribution::from_pairs(pairs.iter().copied());
        assert!(ab_minimal(&d(&[(0, 1), (4, 7)]), 2).unwrap().certified());
        assert!(ab_minimal(&d(&[(0, 1), (6, 3), (8, 4)]), 2).unwrap().certified());
        assert_eq!(ab_minimal(&d(&[(0, 1), (4, 3), (8, 4)]), 2).unwrap().verdict, Verdict::Inconclusive);
        assert_eq!(ab_minimal(&d(&[(0, 1)]), 2), Err(Error::EmptySupport));
    }

    #[test]
    fn exhaustive_minimality() {
        let simplex = matrix(2, &[&[1, 0, 1, 0, 1, 0, 1], &[0, 1, 1, 0, 0, 1, 1], &[0, 0, 0, 1, 1, 1, 1]]);
        assert!(minimal_exhaustive(&simplex, &Budget::default()).unwrap().certified());
        // (1,1,1) covers its shadow (1,1,0)
        let g = matrix(2, &[&[1, 1, 1], &[1, 1, 0]]);
        let c = minimal_exhaustive(&g, &Budget::default()).unwrap();
        assert!(c.refuted());
        let Some(Witness::Covering { u: Some(u), w: Some(w), .. }) = c.witness else { panic!() };
        assert!(w.iter().zip(&u).all(|(&wi, &ui)| wi == 0 || ui != 0) && w != u);
    }

    #[test]
    fn self_orthogonality_examples() {
        let b = Budget::default();
        let c = self_orthogonal(&matrix(3, &[&[1, 1, 1]]), false, &b).unwrap();
        assert!(c.gram.certified() && c.divisibility.unwrap().certified());
        let c = self_orthogonal(&matrix(2, &[&[1, 1, 1, 1]]), false, &b).unwrap();
        assert!(c.gram.certified() && c.divisibility.unwrap().certified());
        let c = self_orthogonal(&matrix(2, &[&[1, 1, 0]]), false, &b).unwrap();
        assert!(c.gram.certified());
        assert_eq!(c.divisibility.unwrap().verdict, Verdict::Inconclusive);
        assert!(self_orthogonal(&matrix(2, &[&[1, 0]]), false, &b).unwrap().gram.refuted());
        assert_eq!(
            self_orthogonal(&matrix(3, &[&[1, 1]]), true, &b).unwrap_err(),
            Error::HermitianNeedsQ4(3)
        );
        let zero = matrix(2, &[&[0, 0]]);
        assert!(self_orthogonal(&zero, false, &b).unwrap().gram.certified());
    }

    #[test]
    fn hermitian_gram() {
        let f = make_field(2, 2).unwrap();
        let w = f.element(&[0, 1]).unwrap();
        // (1, w, w²): 1 + w·w̄ + w²·w̄² = 1 + 1 + 1 ≠ 0; (1, 1) gives 1 + 1 = 0
        let g = GeneratorMatrix::from_rows(&f, vec![FqVector(vec![FieldElement::ONE, w, f.mul(w, w)])], 3).unwrap();
        assert!(self_orthogonal(&g, true, &Budget::default()).unwrap().gram.refuted());
        let g = GeneratorMatrix::from_rows(&f, vec![FqVector(vec![FieldElement::ONE, w])], 2).unwrap();
        let c = self_orthogonal(&g, true, &Budget::default()).unwrap();
        assert!(c.gram.certified() && c.divisibility.unwrap().certified());
    }

    #[test]
    fn tau_examples() {
        let r = tau_conditions(&cx(&[&[1, 2]], 3), &cx(&[&[3]], 3));
        assert_eq!((r.tau1, r.tau2), (Some(2), Some(2)));
        assert_eq!(r.verdicts[&2], (true, true));
        let r = tau_conditions(&cx(&[&[1], &[2]], 3), &cx(&[&[1]], 3));
        assert_eq!(r.tau1, Some(1));
        assert_eq!(r.verdicts[&2], (false, false));
    }

    #[test]
    fn theorem_conditions() {
        use DefiningSetKind::*;
        let s = spec(2, 4, RingKind::F, D3, &[&[3]], &[&[1, 2]]);
        let c = minimality_conditions(&s, Image::Gray).unwrap();
        assert!(matches!(c.witness, Some(Witness::Inequality { lhs: 16, rhs: 8, .. })) && c.certified());
        let s = spec(2, 3, RingKind::F, D5, &[&[2]], &[&[1]]);
        let c = minimality_conditions(&s, Image::Gray).unwrap();
        assert!(matches!(c.witness, Some(Witness::Inequality { lhs: 64, rhs: 8, .. })) && c.certified());
        let s = spec(2, 3, RingKind::E, D1, &[&[1], &[2]], &[&[3]]);
        assert!(minimality_conditions(&s, Image::Subfield).unwrap().refuted());
        assert!(minimality_conditions(&s, Image::Gray).is_err());
    }

    #[test]
    fn proposition_conditions() {
        use DefiningSetKind::*;
        let s = spec(2, 3, RingKind::E, D2, &[&[1]], &[&[2]]);
        let c = prop5_certificate(&s, Image::Subfield).unwrap();
        assert!(matches!(c.witness, Some(Witness::Inequality { lhs: 2, rhs: 3, .. })) && c.certified());
        let s = spec(2, 3, RingKind::F, D3, &[&[1]], &[&[2, 3]]);
        let c = prop5_certificate(&s, Image::Gray).unwrap();
        assert!(matches!(c.witness, Some(Witness::Inequality { lhs: 2, rhs: 3, .. })) && c.certified());
        assert!(prop5_certificate(&s, Image::Subfield).is_err());
    }

    #[test]
    fn prop6_digits() {
        use DefiningSetKind::*;
        // k = 5 = q² + 1 disjoint singletons, |F1| = m − 1
        let hs: Vec<Vec<usize>> = (1..=5).map(|i| vec![i]).collect();
        let h = canonicalize(&hs, 5).unwrap();
        let f = canonicalize(&[vec![1, 2, 3, 4]], 5).unwrap();
        let s = CodeSpec::new(&make_field(2, 1).unwrap(), RingKind::E, f, h, D2).unwrap();
        let c = prop6_certificate(&s).unwrap();
        assert!(c.certified(), "{c:?}");
        assert!(matches!(c.witness, Some(Witness::Prop6 { tau_lenient: Some(2), .. })));
        assert_eq!(digits(5, 2), vec![1, 0, 1]);
    }
}
