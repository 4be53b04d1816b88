//! Closed-form sizes, character sums, the weights A and T, and the code parameters
//! and weight distributions they imply.

use serde::Serialize;

use crate::ambient::Ambient;
use crate::budget::Budget;
use crate::error::{hypothesis, Error, Result};
use crate::field::{FieldSpec, FqVector};
use crate::numeric::{add, exact_div, ipow, log_q, mul, sub};
use crate::ring_codes::{CodeSpec, DefiningSetKind, RingKind};
use crate::simplicial::{
    alpha, all_private, complex_size, hypothesis_check, set_len, IndexSet, SimplicialComplex,
};
use crate::weights::WeightDistribution;

/// Σ_j c_j ω^j for a primitive p-th root of unity ω, kept modulo Σ_j ω^j = 0 by
/// shifting the coefficients so the smallest is zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclotomicInteger {
    coeffs: Vec<i64>,
}

impl CyclotomicInteger {
    pub fn zero(p: u32) -> Self {
        CyclotomicInteger {
            coeffs: vec![0; p as usize],
        }
    }

    /// Adds `count · ω^j`.
    pub fn add_power(&mut self, j: usize, count: i64) {
        let p = self.coeffs.len();
        self.coeffs[j % p] += count;
    }

    pub fn canonical(&self) -> Vec<i64> {
        let min = self.coeffs.iter().copied().min().unwrap_or(0);
        self.coeffs.iter().map(|c| c - min).collect()
    }

    /// The value when it is a rational integer, i.e. when c_1 = … = c_{p−1}.
    pub fn rational(&self) -> Option<i64> {
        let c = self.canonical();
        match c.get(1) {
            None => Some(c[0]),
            Some(&c1) => c[1..].iter().all(|&x| x == c1).then_some(c[0] - c1),
        }
    }
}

/// Table e[y·p + j] = #{u ∈ F_p^s : ⟨u, y⟩_p = j}, reading y ∈ F_q through its coordinates.
fn exponent_table(field: &FieldSpec) -> Vec<i64> {
    let (p, s, q) = (field.p() as usize, field.s() as usize, field.q() as usize);
    let mut table = vec![0i64; q * p];
    for y in 0..q {
        let yc = field.coeffs(crate::field::FieldElement(y as u32));
        for u in 0..q {
            // u ranges over F_p^s via the same digit encoding
            let uc = field.coeffs(crate::field::FieldElement(u as u32));
            let j = (0..s).map(|i| uc[i] as usize * yc[i] as usize).sum::<usize>() % p;
            table[y * p + j] += 1;
        }
    }
    table
}

/// Σ_{y} count(y) Σ_{u∈F_p^s} ω^{⟨u,y⟩_p} as a rational integer.
fn character_sum(field: &FieldSpec, counts: &[u64]) -> Result<i128> {
    let p = field.p() as usize;
    let table = exponent_table(field);
    let mut acc = CyclotomicInteger::zero(field.p());
    for (y, &c) in counts.iter().enumerate() {
        for j in 0..p {
            acc.add_power(j, table[y * p + j] * c as i64);
        }
    }
    acc.rational().map(i128::from).ok_or(Error::NonIntegerCharacterSum)
}

fn beta_index(amb: &Ambient, beta: &FqVector) -> Result<usize> {
    if beta.len() != amb.m() {
        return Err(Error::LengthMismatch {
            left: beta.len(),
            right: amb.m(),
        });
    }
    Ok(amb.index_of(beta))
}

/// Σ_{u∈F_p^s} Σ_{t∈Δ (or Δ^c)} ω^{⟨u,⟨β,t⟩_q⟩_p}, evaluated term by term.
pub fn exp_sum(field: &FieldSpec, delta: &SimplicialComplex, beta: &FqVector, complement: bool, budget: &Budget) -> Result<i128> {
    let amb = Ambient::new(field, delta.m(), budget)?;
    let b = beta_index(&amb, beta)?;
    let mut counts = vec![0u64; field.q() as usize];
    for t in Ambient::select(&amb.membership(delta), complement) {
        counts[amb.ip(b, t).0 as usize] += 1;
    }
    character_sum(field, &counts)
}

/// The inclusion–exclusion evaluation of [`exp_sum`].
pub fn exp_sum_closed(q: u32, delta: &SimplicialComplex, beta: &FqVector, complement: bool) -> Result<i128> {
    let qi = q as i128;
    let mut inside = 0i128;
    for (sign, inter) in delta.signed_intersections() {
        let a = i128::from(alpha(beta, inter));
        inside = add(inside, mul(sign * ipow(q, set_len(inter))?, 1 + (qi - 1) * a)?)?;
    }
    if !complement {
        return Ok(inside);
    }
    let all = mul(ipow(q, delta.m() as u32)?, 1 + (qi - 1) * i128::from(beta.is_zero()))?;
    sub(all, inside)
}

/// Σ_u Σ_{t1∈Δ1, t2∈Δ2 (or Δ2^c)} ω^{⟨u,⟨β,t1+t2⟩_q⟩_p}, evaluated term by term.
pub fn exp_sum_pair(
    field: &FieldSpec,
    d1: &SimplicialComplex,
    d2: &SimplicialComplex,
    beta: &FqVector,
    complement2: bool,
    budget: &Budget,
) -> Result<i128> {
    if d1.m() != d2.m() {
        return Err(Error::Shape("complexes in different dimensions".into()));
    }
    let amb = Ambient::new(field, d1.m(), budget)?;
    let b = beta_index(&amb, beta)?;
    let l1 = Ambient::select(&amb.membership(d1), false);
    let l2 = Ambient::select(&amb.membership(d2), complement2);
    budget.work(l1.len() as u128 * l2.len() as u128)?;
    let mut counts = vec![0u64; field.q() as usize];
    for &t1 in &l1 {
        for &t2 in &l2 {
            counts[amb.ip(b, amb.add(t1, t2)).0 as usize] += 1;
        }
    }
    character_sum(field, &counts)
}

/// The inclusion–exclusion evaluation of [`exp_sum_pair`].
pub fn exp_sum_pair_closed(
    q: u32,
    d1: &SimplicialComplex,
    d2: &SimplicialComplex,
    beta: &FqVector,
    complement2: bool,
) -> Result<i128> {
    let qi = q as i128;
    let mut inside = 0i128;
    for (s1, i1) in d1.signed_intersections() {
        for (s2, i2) in d2.signed_intersections() {
            let a = i128::from(alpha(beta, i1) && alpha(beta, i2));
            let term = mul(s1 * s2 * ipow(q, set_len(i1) + set_len(i2))?, 1 + (qi - 1) * a)?;
            inside = add(inside, term)?;
        }
    }
    if !complement2 {
        return Ok(inside);
    }
    let size1 = complex_size(d1, q)? as i128;
    let all = mul(
        mul(ipow(q, d1.m() as u32)?, size1)?,
        1 + (qi - 1) * i128::from(beta.is_zero()),
    )?;
    sub(all, inside)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AMode {
    /// Σ_{∅≠S⊆𝓕} (−1)^{|S|+1} q^{|∩S|−1}(q−1)(1−α(β|Δ_{∩S})).
    Formula,
    /// #{t ∈ Δ : ⟨β,t⟩ ≠ 0}.
    Direct,
}

/// A_{Δ,β}, the Hamming weight of (⟨β,t⟩)_{t∈Δ}.
pub fn a_weight(field: &FieldSpec, delta: &SimplicialComplex, beta: &FqVector, mode: AMode, budget: &Budget) -> Result<i128> {
    match mode {
        AMode::Formula => a_formula(field.q(), delta, beta),
        AMode::Direct => {
            let amb = Ambient::new(field, delta.m(), budget)?;
            let b = beta_index(&amb, beta)?;
            let hits = Ambient::select(&amb.membership(delta), false)
                .into_iter()
                .filter(|&t| !amb.ip(b, t).is_zero())
                .count();
            Ok(hits as i128)
        }
    }
}

fn a_formula(q: u32, delta: &SimplicialComplex, beta: &FqVector) -> Result<i128> {
    let mut total = 0i128;
    for (sign, inter) in delta.signed_intersections() {
        if !alpha(beta, inter) {
            // β meets ∩S, so |∩S| ≥ 1
            let term = mul(sign * (q as i128 - 1), ipow(q, set_len(inter) - 1)?)?;
            total = add(total, term)?;
        }
    }
    Ok(total)
}

/// T = (2|Δ1| − q/(q−1)·A_{Δ1,β})·A_{Δ2,β} + |Δ2|·A_{Δ1,β}.
pub fn t_value(field: &FieldSpec, d1: &SimplicialComplex, d2: &SimplicialComplex, beta: &FqVector) -> Result<i128> {
    let q = field.q();
    let qi = q as i128;
    let a1 = a_formula(q, d1, beta)?;
    let a2 = a_formula(q, d2, beta)?;
    let s1 = complex_size(d1, q)? as i128;
    let s2 = complex_size(d2, q)? as i128;
    let scaled = mul(qi, exact_div(a1, qi - 1, "q/(q−1)·A")?)?;
    add(mul(sub(2 * s1, scaled)?, a2)?, mul(s2, a1)?)
}

/// |Δ1|·A_{Δ2,β} + (|Δ1||Δ2| − Σ_u Σ_{t1,t2} ω^{⟨u,⟨β,t1+t2⟩⟩}/q), by enumeration.
pub fn t_value_brute(
    field: &FieldSpec,
    d1: &SimplicialComplex,
    d2: &SimplicialComplex,
    beta: &FqVector,
    budget: &Budget,
) -> Result<i128> {
    let q = field.q() as i128;
    let s1 = complex_size(d1, field.q())? as i128;
    let s2 = complex_size(d2, field.q())? as i128;
    let a2 = a_weight(field, d2, beta, AMode::Direct, budget)?;
    let pair = exp_sum_pair(field, d1, d2, beta, false, budget)?;
    let tilde = sub(mul(s1, s2)?, exact_div(pair, q, "pair sum / q")?)?;
    add(mul(s1, a2)?, tilde)
}

/// Parameters of a code: length, size q^k, minimum (Lee or Hamming) distance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CodeParams {
    pub n: u128,
    pub k: u32,
    pub size: u128,
    pub min_d: u128,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kappa1: Option<i128>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kappa2: Option<i128>,
}

/// Quantities shared by the parameter theorems.
struct Shape {
    q: u32,
    qi: i128,
    m: u32,
    total: i128,
    d1: i128,
    d2: i128,
    sum_f: i128,
    sum_h: i128,
    union_f: u32,
    union_fh: u32,
    f_sizes: Vec<u32>,
    h_sizes: Vec<u32>,
}

impl Shape {
    fn of(spec: &CodeSpec) -> Result<Self> {
        let q = spec.q();
        let (f, h) = (&spec.delta1, &spec.delta2);
        Ok(Shape {
            q,
            qi: q as i128,
            m: spec.m as u32,
            total: ipow(q, spec.m as u32)?,
            d1: complex_size(f, q)? as i128,
            d2: complex_size(h, q)? as i128,
            sum_f: f.power_sum(q)? as i128,
            sum_h: h.power_sum(q)? as i128,
            union_f: set_len(f.union()),
            union_fh: set_len(f.union() | h.union()),
            f_sizes: f.maximal().iter().map(|&s| set_len(s)).collect(),
            h_sizes: h.maximal().iter().map(|&s| set_len(s)).collect(),
        })
    }

    /// q^e · x for a possibly negative e, refusing inexact results.
    fn scaled(&self, e: i64, x: i128) -> Result<i128> {
        if e >= 0 {
            mul(ipow(self.q, e as u32)?, x)
        } else {
            exact_div(x, ipow(self.q, (-e) as u32)?, "negative power of q")
        }
    }

    /// (q−1)/q · x.
    fn frac(&self, x: i128) -> Result<i128> {
        exact_div(mul(self.qi - 1, x)?, self.qi, "(q−1)/q factor")
    }

    fn min_f(&self) -> u32 {
        self.f_sizes.iter().copied().min().unwrap_or(0)
    }

    fn params(&self, n: i128, k: u32, min_d: i128) -> Result<CodeParams> {
        if n < 0 || min_d < 0 {
            return Err(Error::Inexact("negative parameter"));
        }
        Ok(CodeParams {
            n: n as u128,
            k,
            size: crate::numeric::qpow(self.q, k)?,
            min_d: min_d as u128,
            kappa1: None,
            kappa2: None,
        })
    }

    fn lengths(&self, kind: DefiningSetKind) -> i128 {
        let (c1, c2) = (self.total - self.d1, self.total - self.d2);
        match kind {
            DefiningSetKind::D1 => self.d1 * self.d2,
            DefiningSetKind::D2 => c1 * self.d2,
            DefiningSetKind::D3 => self.d1 * c2,
            DefiningSetKind::D4 => c1 * c2,
            DefiningSetKind::D5 => self.total * self.total - self.d1 * self.d2,
        }
    }
}

fn require(cond: bool, theorem: &'static str, kind: DefiningSetKind, what: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(hypothesis(theorem, kind.clause(), what))
    }
}

/// Hypotheses shared by the E-ring theorem and the subfield theorem.
fn check_single_side(spec: &CodeSpec, sh: &Shape, theorem: &'static str) -> Result<()> {
    let kind = spec.kind;
    require(
        hypothesis_check(&spec.delta1, None).per_family,
        theorem,
        kind,
        "every F_i needs an element outside the other F_j",
    )?;
    if matches!(kind, DefiningSetKind::D3 | DefiningSetKind::D4) {
        require(sh.d2 < sh.total, theorem, kind, "Δ2 must be a proper subset of F_q^m")?;
    }
    if matches!(kind, DefiningSetKind::D2 | DefiningSetKind::D4 | DefiningSetKind::D5) {
        require(sh.total > sh.sum_f, theorem, kind, "needs q^m > Σ q^{|F_i|}")?;
    }
    Ok(())
}

/// Minimum distance shared by the E-ring Lee distance and the subfield Hamming distance.
fn single_side_distance(sh: &Shape, kind: DefiningSetKind) -> Result<i128> {
    let q1 = sh.qi - 1;
    let min_f = sh.min_f() as i64;
    match kind {
        DefiningSetKind::D1 => sh.scaled(min_f - 1, q1 * sh.d2),
        DefiningSetKind::D3 => sh.scaled(min_f - 1, q1 * (sh.total - sh.d2)),
        DefiningSetKind::D2 => sh.frac(mul(sh.d2, sh.total - sh.sum_f)?),
        DefiningSetKind::D4 => sh.frac(mul(sh.total - sh.d2, sh.total - sh.sum_f)?),
        DefiningSetKind::D5 => sh.frac(sub(mul(sh.total, sh.total)?, mul(sh.d2, sh.sum_f)?)?),
    }
}

/// Length, size and minimum Lee distance of an E-ring code.
pub fn theorem1_params(spec: &CodeSpec) -> Result<CodeParams> {
    if spec.ring != RingKind::E {
        return Err(Error::Shape("the E-ring parameters need ring E".into()));
    }
    let sh = Shape::of(spec)?;
    check_single_side(spec, &sh, "Theorem 1")?;
    let k = match spec.kind {
        DefiningSetKind::D1 | DefiningSetKind::D3 => 2 * sh.union_f,
        _ => 2 * sh.m,
    };
    sh.params(sh.lengths(spec.kind), k, single_side_distance(&sh, spec.kind)?)
}

/// Length, size and minimum Lee distance of an F-ring code.
pub fn theorem2_params(spec: &CodeSpec) -> Result<CodeParams> {
    if spec.ring != RingKind::F {
        return Err(Error::Shape("the F-ring parameters need ring F".into()));
    }
    const T: &str = "Theorem 2";
    let sh = Shape::of(spec)?;
    let kind = spec.kind;
    let flags = hypothesis_check(&spec.delta1, Some(&spec.delta2));
    let joint = flags.joint == Some(true);
    let q1 = sh.qi - 1;
    let (total, d1, d2) = (sh.total, sh.d1, sh.d2);
    let n = sh.lengths(kind);
    match kind {
        DefiningSetKind::D1 => {
            require(joint, T, kind, "every F_i and H_j needs an element outside all the others")?;
            let via_f = sh
                .f_sizes
                .iter()
                .map(|&f| sh.scaled(f as i64 - 1, q1 * d2))
                .collect::<Result<Vec<_>>>()?;
            let via_h = sh
                .h_sizes
                .iter()
                .map(|&h| sh.scaled(h as i64 - 1, 2 * q1 * d1))
                .collect::<Result<Vec<_>>>()?;
            let d = via_f.into_iter().chain(via_h).min().unwrap_or(0);
            sh.params(n, sh.union_fh, d)
        }
        DefiningSetKind::D3 => {
            require(flags.per_family, T, kind, "every F_i needs an element outside the other F_j")?;
            require(
                all_private(spec.delta2.maximal(), spec.delta1.union()),
                T,
                kind,
                "every H_j needs an element outside the other H's and all F's",
            )?;
            require(total > sh.sum_h, T, kind, "needs q^m > Σ q^{|H_j|}")?;
            let d = sh.frac(mul(2 * d1, sub(total, sh.sum_h)?)?)?;
            sh.params(n, sh.m, d)
        }
        DefiningSetKind::D2 => {
            require(joint, T, kind, "every F_i and H_j needs an element outside all the others")?;
            let kappa1 = mul(d2, sh.sum_f)?.max(mul(2 * d1 - total, sh.sum_h)?);
            let lhs = mul(total, d2)?;
            require(lhs > kappa1, T, kind, format!("needs q^m|Δ2| > κ1 ({lhs} ≤ {kappa1})").as_str())?;
            let mut p = sh.params(n, sh.m, sh.frac(lhs - kappa1)?)?;
            p.kappa1 = Some(kappa1);
            Ok(p)
        }
        DefiningSetKind::D4 => {
            require(joint, T, kind, "every F_i and H_j needs an element outside all the others")?;
            let (c1, c2) = (total - d1, total - d2);
            require(d1 <= c1, T, kind, "needs |Δ1| ≤ |Δ1^c|")?;
            let kappa2 = add(mul(c1 - d1, sh.sum_h)?, mul(sh.sum_h - d2, sh.sum_f)?)?;
            let lhs = mul(total, c1 - d1 + c2)?;
            require(lhs > kappa2, T, kind, format!("needs q^m(|Δ1^c|−|Δ1|+|Δ2^c|) > κ2 ({lhs} ≤ {kappa2})").as_str())?;
            let mut p = sh.params(n, sh.m, sh.frac(lhs - kappa2)?)?;
            p.kappa2 = Some(kappa2);
            Ok(p)
        }
        DefiningSetKind::D5 => {
            require(joint, T, kind, "every F_i and H_j needs an element outside all the others")?;
            let gap = sub(mul(total, total)?, mul(d1, sh.sum_h)?)?;
            require(gap > 0, T, kind, "needs q^{2m} > |Δ1| Σ q^{|H_j|}")?;
            sh.params(n, sh.m, sh.frac(2 * gap)?)
        }
    }
}

/// [n, k, d] of the subfield-like code ϕ(C_L); independent of the ring.
pub fn theorem3_params(spec: &CodeSpec) -> Result<CodeParams> {
    let sh = Shape::of(spec)?;
    check_single_side(spec, &sh, "Theorem 3")?;
    let k = match spec.kind {
        DefiningSetKind::D1 | DefiningSetKind::D3 => sh.union_f,
        _ => sh.m,
    };
    sh.params(sh.lengths(spec.kind), k, single_side_distance(&sh, spec.kind)?)
}

/// (n, size, min d_L) of C_L for its ring.
pub fn ring_code_params(spec: &CodeSpec) -> Result<CodeParams> {
    match spec.ring {
        RingKind::E => theorem1_params(spec),
        RingKind::F => theorem2_params(spec),
    }
}

/// [2n, log_q |C_L|, min d_L] of the Gray image.
pub fn gray_params(spec: &CodeSpec) -> Result<CodeParams> {
    let p = ring_code_params(spec)?;
    Ok(CodeParams {
        n: 2 * p.n,
        k: log_q(p.size, spec.q()).ok_or(Error::Inexact("code size is not a power of q"))?,
        ..p
    })
}

fn distribution(rows: Vec<(i128, i128)>) -> Result<WeightDistribution> {
    if rows.iter().any(|&(w, c)| w < 0 || c < 0) {
        return Err(Error::Inexact("negative weight or frequency"));
    }
    Ok(WeightDistribution::from_pairs(
        rows.into_iter().map(|(w, c)| (w as u64, c as u64)),
    ))
}

fn single_family_shape(q: u32, m: usize, a: IndexSet, b: IndexSet) -> Result<Shape> {
    let f = crate::field::make_field_order(q)?;
    let d1 = SimplicialComplex::single(m, a)?;
    let d2 = SimplicialComplex::single(m, b)?;
    Shape::of(&CodeSpec::new(&f, RingKind::E, d1, d2, DefiningSetKind::D1)?)
}

/// Lee weight distribution of the E-ring code with 𝓕 = {A}, 𝓗 = {B}.
pub fn prop1_distribution(a: IndexSet, b: IndexSet, kind: DefiningSetKind, q: u32, m: usize) -> Result<WeightDistribution> {
    const P: &str = "Proposition 1";
    let sh = single_family_shape(q, m, a, b)?;
    let (na, nb, mm) = (set_len(a) as i64, set_len(b) as i64, m as i64);
    require(na > 0, P, kind, "needs A ≠ ∅")?;
    if matches!(kind, DefiningSetKind::D2 | DefiningSetKind::D4 | DefiningSetKind::D5) {
        require(na < mm, P, kind, "needs |A| < m")?;
    }
    if matches!(kind, DefiningSetKind::D3 | DefiningSetKind::D4) {
        require(nb < mm, P, kind, "needs |B| < m")?;
    }
    let x = sh.qi - 1;
    let pw = |e: i64| ipow(q, e as u32);
    // q^e · v with e possibly −1
    let sc = |e: i64, v: i128| sh.scaled(e, v);
    let (qm, qa, qb) = (pw(mm)?, pw(na)?, pw(nb)?);
    let rows = match kind {
        DefiningSetKind::D1 | DefiningSetKind::D3 => {
            let w = match kind {
                DefiningSetKind::D1 => x * pw(na + nb - 1)?,
                _ => sc(na - 1, x * (qm - qb))?,
            };
            vec![(0, 1), (w, 2 * (qa - 1)), (2 * w, (qa - 1) * (qa - 1))]
        }
        _ => {
            let qma = pw(mm - na)?;
            let freqs = [
                2 * (qma - 1),
                2 * (qm - qma),
                2 * (qma - 1) * (qm - qma),
                (qm - qma) * (qm - qma),
                (qma - 1) * (qma - 1),
            ];
            let weights = match kind {
                DefiningSetKind::D2 => [
                    x * pw(mm + nb - 1)?,
                    sc(nb - 1, x * (qm - qa))?,
                    sc(nb - 1, x * (2 * qm - qa))?,
                    sc(nb - 1, 2 * x * (qm - qa))?,
                    2 * x * pw(mm + nb - 1)?,
                ],
                DefiningSetKind::D4 => {
                    let t = sc(-1, qm - qb)?;
                    [
                        sc(mm - 1, x * (qm - qb))?,
                        x * (qm - qa) * t,
                        x * (2 * qm - qa) * t,
                        2 * x * (qm - qa) * t,
                        sc(mm - 1, 2 * x * (qm - qb))?,
                    ]
                }
                _ => {
                    let (q2, qab) = (pw(2 * mm - 1)?, pw(na + nb - 1)?);
                    [x * q2, x * (q2 - qab), x * (2 * q2 - qab), 2 * x * (q2 - qab), 2 * x * q2]
                }
            };
            std::iter::once((0, 1)).chain(weights.into_iter().zip(freqs)).collect()
        }
    };
    distribution(rows)
}

/// Lee weight distribution of the F-ring code with 𝓕 = {A}, 𝓗 = {B}.
pub fn prop2_distribution(a: IndexSet, b: IndexSet, kind: DefiningSetKind, q: u32, m: usize) -> Result<WeightDistribution> {
    const P: &str = "Proposition 2";
    let sh = single_family_shape(q, m, a, b)?;
    let (na, nb, mm) = (set_len(a) as i64, set_len(b) as i64, m as i64);
    let nu = set_len(a | b) as i64;
    let nd = set_len(a & !b) as i64;
    require(nd > 0, P, kind, "needs A \\ B ≠ ∅")?;
    match kind {
        DefiningSetKind::D1 => {}
        DefiningSetKind::D2 => require(na < mm, P, kind, "needs |A| < m")?,
        DefiningSetKind::D3 => require(nb < mm, P, kind, "needs |B| < m")?,
        DefiningSetKind::D4 => require(na < mm && nb < mm, P, kind, "needs |A|, |B| < m")?,
        DefiningSetKind::D5 => require(na + nb < 2 * mm, P, kind, "needs |A| + |B| < 2m")?,
    }
    let x = sh.qi - 1;
    let pw = |e: i64| ipow(q, e as u32);
    let sc = |e: i64, v: i128| sh.scaled(e, v);
    let (qm, qa, qb) = (pw(mm)?, pw(na)?, pw(nb)?);
    let (qmu, qd) = (pw(mm - nu)?, pw(nd)?);
    let rows = match kind {
        DefiningSetKind::D1 => {
            let w = x * pw(na + nb - 1)?;
            vec![(0, 1), (w, qd - 1), (2 * w, pw(nu)? - qd)]
        }
        _ => {
            let mut freqs = [qm - pw(mm - nb)?, qmu * (qd - 1), qmu - 1];
            let weights = match kind {
                DefiningSetKind::D3 => [
                    sc(na - 1, 2 * x * (qm - qb))?,
                    sc(na - 1, x * (2 * qm - qb))?,
                    2 * x * pw(mm + na - 1)?,
                ],
                DefiningSetKind::D2 => {
                    freqs = [qmu - 1, qmu * (qd - 1), qm - pw(mm - nb)?];
                    [
                        x * pw(mm + nb - 1)?,
                        sc(nb - 1, x * (qm - qa))?,
                        sc(nb - 1, 2 * x * (qm - qa))?,
                    ]
                }
                DefiningSetKind::D4 => {
                    let t = sc(-1, qm - qa)?;
                    [
                        2 * x * t * (qm - qb),
                        x * t * (2 * qm - qb),
                        sc(mm - 1, x * (2 * qm - 2 * qa - qb))?,
                    ]
                }
                _ => {
                    let (q2, qab) = (pw(2 * mm - 1)?, pw(na + nb - 1)?);
                    [2 * x * (q2 - qab), x * (2 * q2 - qab), 2 * x * q2]
                }
            };
            std::iter::once((0, 1)).chain(weights.into_iter().zip(freqs)).collect()
        }
    };
    distribution(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::make_field;
    use crate::simplicial::canonicalize;

    fn cx(fam: &[&[usize]], m: usize) -> SimplicialComplex {
        canonicalize(&fam.iter().map(|f| f.to_vec()).collect::<Vec<_>>(), m).unwrap()
    }

    fn spec(p: u32, m: usize, ring: RingKind, kind: DefiningSetKind, f: &[&[usize]], h: &[&[usize]]) -> CodeSpec {
        CodeSpec::new(&make_field(p, 1).unwrap(), ring, cx(f, m), cx(h, m), kind).unwrap()
    }

    #[test]
    fn cyclotomic_reduction() {
        let mut c = CyclotomicInteger::zero(3);
        c.add_power(1, 2);
        c.add_power(2, 2);
        assert_eq!(c.rational(), Some(-2));
        c.add_power(1, 1);
        assert_eq!(c.rational(), None);
        assert_eq!(c.canonical(), vec![0, 3, 2]);
    }

    #[test]
    fn lemma_sums() {
        let f = make_field(2, 1).unwrap();
        let b = Budget::default();
        let d = cx(&[&[1]], 2);
        let beta = |v: &[u32]| FqVector::from_u32(v);
        assert_eq!(exp_sum(&f, &d, &beta(&[0, 0]), false, &b).unwrap(), 4);
        assert_eq!(exp_sum(&f, &d, &beta(&[0, 1]), false, &b).unwrap(), 4);
        assert_eq!(exp_sum(&f, &d, &beta(&[1, 0]), false, &b).unwrap(), 2);
        assert_eq!(exp_sum_closed(2, &d, &beta(&[1, 0]), false).unwrap(), 2);
        let h = cx(&[&[2]], 2);
        assert_eq!(exp_sum_pair(&f, &d, &h, &beta(&[1, 1]), false, &b).unwrap(), 4);
        assert_eq!(exp_sum_pair_closed(2, &d, &h, &beta(&[1, 1]), false).unwrap(), 4);
    }

    #[test]
    fn a_examples() {
        let f = make_field(2, 1).unwrap();
        let d = cx(&[&[1, 2]], 3);
        let beta = FqVector::from_u32(&[1, 0, 0]);
        for mode in [AMode::Formula, AMode::Direct] {
            assert_eq!(a_weight(&f, &d, &beta, mode, &Budget::default()).unwrap(), 2);
        }
    }

    #[test]
    fn theorem_examples() {
        use DefiningSetKind::*;
        let p = theorem1_params(&spec(2, 3, RingKind::E, D1, &[&[1]], &[&[1, 2]])).unwrap();
        assert_eq!((p.n, p.size, p.min_d), (8, 4, 4));
        let p = theorem1_params(&spec(2, 3, RingKind::E, D5, &[&[2]], &[&[1]])).unwrap();
        assert_eq!((p.n, p.size, p.min_d), (60, 64, 30));
        let err = theorem1_params(&spec(2, 3, RingKind::E, D2, &[&[1, 2, 3]], &[&[1]])).unwrap_err();
        assert!(matches!(err, Error::Hypothesis { clause: "(3)", .. }));
        let p = theorem2_params(&spec(2, 3, RingKind::F, D3, &[&[2]], &[&[1, 2]])).unwrap();
        assert_eq!((p.n, p.size, p.min_d), (8, 8, 8));
        let p = theorem2_params(&spec(3, 5, RingKind::F, D3, &[&[3]], &[&[1, 2, 3, 4]])).unwrap();
        assert_eq!((p.n, p.size, p.min_d), (486, 243, 648));
        let p = gray_params(&spec(2, 3, RingKind::F, D3, &[&[2]], &[&[1, 2]])).unwrap();
        assert_eq!((p.n, p.k, p.min_d), (16, 3, 8));
        let p = theorem3_params(&spec(2, 3, RingKind::E, D2, &[&[1, 2]], &[&[1], &[3]])).unwrap();
        assert_eq!((p.n, p.k, p.min_d), (12, 3, 6));
        let p = theorem3_params(&spec(3, 3, RingKind::F, D2, &[&[1, 3]], &[&[1]])).unwrap();
        assert_eq!((p.n, p.k, p.min_d), (54, 3, 36));
    }

    #[test]
    fn proposition_examples() {
        use DefiningSetKind::*;
        assert_eq!(prop1_distribution(0b1, 0b1, D1, 2, 2).unwrap().to_pairs(), vec![(0, 1), (2, 2), (4, 1)]);
        assert_eq!(prop2_distribution(0b01, 0b10, D1, 2, 2).unwrap().to_pairs(), vec![(0, 1), (2, 1), (4, 2)]);
        // aΔ_A^c + cΔ_B, q=2, m=3: weight (q−1)q^{m+|B|−1} = 8 with frequency 2(q^{m−|A|}−1) = 6
        assert_eq!(prop1_distribution(0b001, 0b010, D2, 2, 3).unwrap().get(8), 6);
        assert_eq!(prop2_distribution(0b001, 0b010, D2, 2, 3).unwrap().get(8), 1);
        let d = prop1_distribution(0b001, 0b010, D5, 3, 3).unwrap();
        assert_eq!(d.max_weight(), Some(2 * 2 * 3u64.pow(5)));
        assert_eq!(d.get(2 * 2 * 3u64.pow(5)), (9 - 1) * (9 - 1));
        let d = prop2_distribution(0b001, 0b010, D5, 3, 3).unwrap();
        assert_eq!(d.get(2 * 2 * 3u64.pow(5)), 3 - 1);
        assert!(prop2_distribution(0b01, 0b11, D1, 2, 2).is_err());
    }
}
