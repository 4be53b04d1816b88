//! Verification campaigns: closed forms against enumeration over grids, and certificates
//! against the exhaustive checks.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use ringcodes::ambient::Ambient;
use ringcodes::analysis::{griesmer_certify, Property};
use ringcodes::closed_form::{
    a_weight, exp_sum, exp_sum_closed, exp_sum_pair, exp_sum_pair_closed, gray_params, prop1_distribution,
    prop2_distribution, ring_code_params, t_value, t_value_brute, theorem3_params, AMode, CodeParams,
};
use ringcodes::field::vector_from_index;
use ringcodes::ring_codes::{lee_distribution_in, subfield_distribution_in};
use ringcodes::simplicial::full_set;
use ringcodes::{canonicalize, make_field_order, Budget, CodeSpec, RingKind, SimplicialComplex};

use crate::certify::{evaluate, Exhaustive, MinimalityMemo};
use crate::config::GridConfig;
use crate::error::Result;
use crate::grid::{families, specs};
use crate::report::{CampaignSummary, FoundCode};

pub const CAMPAIGNS: [&str; 5] = ["optimal_codes", "theorems", "propositions", "lemmas", "certificates"];

/// Deliberate corruptions used to show that a campaign can fail.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Faults {
    /// Adds 1 to every closed-form minimum distance.
    pub closed_form_distance: bool,
}

impl Faults {
    fn apply(self, mut p: CodeParams) -> CodeParams {
        if self.closed_form_distance {
            p.min_d += 1;
        }
        p
    }
}

const OPTIMAL_CODES: &str = include_str!("../data/optimal_codes.json");

/// The distance-optimal codes table shipped with the crate.
pub fn optimal_rows() -> Vec<FoundCode> {
    serde_json::from_str(OPTIMAL_CODES).expect("bundled table is valid")
}

pub fn found_spec(row: &FoundCode) -> Result<CodeSpec> {
    let s = &row.spec;
    let field = make_field_order(s.q)?;
    let d1 = canonicalize(&s.delta1, s.m)?;
    let d2 = canonicalize(&s.delta2, s.m)?;
    Ok(CodeSpec::new(&field, s.ring, d1, d2, s.variant)?)
}

/// Brute-force [n, k, d] of a Gray image or subfield code.
pub fn brute_params(amb: &Ambient, spec: &CodeSpec, image: &str, budget: &Budget) -> Result<Option<[u128; 3]>> {
    let q = spec.q();
    Ok(if image == "gray" {
        let d = lee_distribution_in(amb, spec, budget)?;
        d.dimension(q)
            .zip(d.min_d)
            .map(|(k, md)| [2 * d.n, k as u128, md as u128])
    } else {
        let d = subfield_distribution_in(amb, spec, budget)?;
        d.min_d.map(|md| [d.n, d.k as u128, md as u128])
    })
}

/// Every row: closed form, enumeration and the listed parameters agree, and Griesmer
/// certifies distance-optimality.
pub fn optimal_codes(rows: &[FoundCode], budget: &Budget, faults: Faults) -> Result<CampaignSummary> {
    let mut c = CampaignSummary::new("optimal_codes");
    for row in rows {
        let spec = found_spec(row)?;
        let closed = if row.image == "gray" { gray_params(&spec) } else { theorem3_params(&spec) };
        let closed = closed.map(|p| faults.apply(p)).map(|p| [p.n, p.k as u128, p.min_d]);
        let amb = Ambient::new(&spec.field, spec.m, budget)?;
        let brute = brute_params(&amb, &spec, &row.image, budget)?;
        let [n, k, d] = row.params;
        let g = griesmer_certify(n, k as u32, d, row.q);
        let ok = closed.as_ref().ok() == Some(&row.params)
            && brute == Some(row.params)
            && g.certified()
            && g.property == Property::DistanceOptimal;
        c.compared.push(format!("{spec} {}", row.image));
        c.check(ok, || {
            format!("{spec} {}: listed {:?}, closed form {closed:?}, brute force {brute:?}", row.image, row.params)
        });
    }
    Ok(c)
}

fn theorem_case(amb: &Ambient, s: &CodeSpec, budget: &Budget, faults: Faults) -> Result<CampaignSummary> {
    let mut c = CampaignSummary::default();
    let ring = ring_code_params(s);
    let sub = theorem3_params(s);
    if ring.is_err() && sub.is_err() {
        c.skipped += 1;
        return Ok(c);
    }
    c.compared.push(s.to_string());
    if let Ok(p) = ring {
        let p = faults.apply(p);
        let d = lee_distribution_in(amb, s, budget)?;
        let ok = p.n == d.n && p.size == d.size && Some(p.min_d) == d.min_d.map(u128::from);
        c.check(ok, || format!("{s}: closed ({}, {}, {}) vs brute ({}, {}, {:?})", p.n, p.size, p.min_d, d.n, d.size, d.min_d));
        c.count(match s.ring {
            RingKind::E => "theorem1",
            RingKind::F => "theorem2",
        });
    }
    if let Ok(p) = sub {
        let p = faults.apply(p);
        let d = subfield_distribution_in(amb, s, budget)?;
        let ok = p.n == d.n && p.k == d.k && Some(p.min_d) == d.min_d.map(u128::from);
        c.check(ok, || format!("{s} subfield: closed [{}, {}, {}] vs brute [{}, {}, {:?}]", p.n, p.k, p.min_d, d.n, d.k, d.min_d));
        c.count("theorem3");
    }
    Ok(c)
}

fn for_grid<F>(name: &str, grid: &GridConfig, budget: &Budget, case: F) -> Result<CampaignSummary>
where
    F: Fn(&Ambient, &CodeSpec) -> Result<CampaignSummary> + Sync,
{
    let mut total = CampaignSummary::new(name);
    for &q in &grid.q {
        let field = make_field_order(q)?;
        for m in grid.m_min..=grid.m_max {
            let amb = Ambient::new(&field, m, budget)?;
            let complexes = families(m, grid.max_sets);
            let all = specs(&field, &complexes, &grid.rings, &grid.variants);
            let parts = all.par_iter().map(|s| case(&amb, s)).collect::<Result<Vec<_>>>()?;
            parts.into_iter().for_each(|p| total.merge(p));
        }
    }
    Ok(total)
}

/// Theorems 1–3 against enumeration for every spec of the grid whose hypotheses hold.
pub fn theorems(grid: &GridConfig, budget: &Budget, faults: Faults) -> Result<CampaignSummary> {
    for_grid("theorems", grid, budget, |amb, s| theorem_case(amb, s, budget, faults))
}

/// Closed-form Lee weight distributions for single-maximal-element complexes.
pub fn propositions(grid: &GridConfig, budget: &Budget) -> Result<CampaignSummary> {
    let mut total = CampaignSummary::new("propositions");
    for &q in &grid.q {
        let field = make_field_order(q)?;
        for m in grid.m_min..=grid.m_max {
            let amb = Ambient::new(&field, m, budget)?;
            let mut cases = Vec::new();
            for a in 0..=full_set(m) {
                for b in 0..=full_set(m) {
                    for &ring in &grid.rings {
                        for &kind in &grid.variants {
                            cases.push((a, b, ring, kind));
                        }
                    }
                }
            }
            let parts = cases
                .par_iter()
                .map(|&(a, b, ring, kind)| -> Result<CampaignSummary> {
                    let mut c = CampaignSummary::default();
                    let closed = match ring {
                        RingKind::E => prop1_distribution(a, b, kind, q, m),
                        RingKind::F => prop2_distribution(a, b, kind, q, m),
                    };
                    let Ok(closed) = closed else {
                        c.skipped += 1;
                        return Ok(c);
                    };
                    let s = CodeSpec::new(
                        &field,
                        ring,
                        SimplicialComplex::single(m, a)?,
                        SimplicialComplex::single(m, b)?,
                        kind,
                    )?;
                    let d = lee_distribution_in(&amb, &s, budget)?;
                    c.compared.push(s.to_string());
                    c.check(closed == d.distribution, || {
                        format!("{s}: closed {:?} vs brute {:?}", closed.to_pairs(), d.distribution.to_pairs())
                    });
                    let prop = match ring {
                        RingKind::E => "prop1",
                        RingKind::F => "prop2",
                    };
                    c.count(&format!("{prop}:{kind}"));
                    Ok(c)
                })
                .collect::<Result<Vec<_>>>()?;
            parts.into_iter().for_each(|p| total.merge(p));
        }
    }
    Ok(total)
}

fn random_complex(rng: &mut ChaCha8Rng, m: usize, max_sets: usize) -> Result<SimplicialComplex> {
    let count = rng.gen_range(1..=max_sets);
    let masks: Vec<u64> = (0..count).map(|_| rng.gen_range(0..=full_set(m))).collect();
    Ok(SimplicialComplex::from_masks(m, &masks)?)
}

/// Randomized character-sum and weight identities: closed forms against term-by-term sums.
pub fn lemmas(grid: &GridConfig, seed: u64, budget: &Budget) -> Result<CampaignSummary> {
    let mut c = CampaignSummary::new("lemmas");
    for &q in &grid.q {
        let field = make_field_order(q)?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ q as u64);
        for _ in 0..grid.cases {
            let m = rng.gen_range(grid.m_min.max(1)..=grid.m_max);
            let d1 = random_complex(&mut rng, m, grid.max_sets)?;
            let d2 = random_complex(&mut rng, m, grid.max_sets)?;
            let size = (q as u64).pow(m as u32);
            let beta = vector_from_index(q, m, rng.gen_range(0..size));
            let comp = rng.gen_bool(0.5);
            let ctx = || format!("q={q} Δ1={d1:?} Δ2={d2:?} β={:?} complement={comp}", beta.0);
            c.compared.push(ctx());
            let l1 = (exp_sum(&field, &d1, &beta, comp, budget)?, exp_sum_closed(q, &d1, &beta, comp)?);
            c.check(l1.0 == l1.1, || format!("single sum {l1:?} at {}", ctx()));
            let l2 = (
                exp_sum_pair(&field, &d1, &d2, &beta, comp, budget)?,
                exp_sum_pair_closed(q, &d1, &d2, &beta, comp)?,
            );
            c.check(l2.0 == l2.1, || format!("pair sum {l2:?} at {}", ctx()));
            let a = (
                a_weight(&field, &d1, &beta, AMode::Formula, budget)?,
                a_weight(&field, &d1, &beta, AMode::Direct, budget)?,
            );
            c.check(a.0 == a.1, || format!("A {a:?} at {}", ctx()));
            let t = (t_value(&field, &d1, &d2, &beta)?, t_value_brute(&field, &d1, &d2, &beta, budget)?);
            c.check(t.0 == t.1, || format!("T {t:?} at {}", ctx()));
        }
    }
    Ok(c)
}

/// Every theorem-based certificate on the grid, checked against the exhaustive verdicts.
pub fn certificates(grid: &GridConfig, budget: &Budget) -> Result<CampaignSummary> {
    let memo = MinimalityMemo::default();
    let mut total = for_grid("certificates", grid, budget, |amb, s| {
        let mut c = CampaignSummary::default();
        let ev = evaluate(amb, s, budget, Exhaustive::WhenNeeded, &memo)?;
        c.compared.push(s.to_string());
        for lc in &ev.certificates {
            let cert = &lc.certificate;
            if cert.certified() || cert.refuted() {
                let verdict = if cert.certified() { "certified" } else { "refuted" };
                c.count(&format!("{}:{}:{verdict}", crate::certify::name(&lc.image), crate::certify::name(&cert.method)));
            }
        }
        for (what, ok) in ev.soundness {
            c.check(ok, || format!("{s}: {what}"));
        }
        Ok(c)
    })?;
    total.counters.insert("exhaustive_scans".into(), memo.len() as u64);
    Ok(total)
}

/// Runs the named campaigns (all when empty), recording elapsed time when asked.
pub fn run(
    grid: &GridConfig,
    seed: u64,
    budget: &Budget,
    faults: Faults,
    timing: bool,
) -> Result<Vec<CampaignSummary>> {
    let names: Vec<&str> = if grid.campaigns.is_empty() {
        CAMPAIGNS.to_vec()
    } else {
        grid.campaigns.iter().map(String::as_str).collect()
    };
    let mut out = Vec::new();
    for name in names {
        let start = Instant::now();
        let mut c = match name {
            "optimal_codes" => optimal_codes(&optimal_rows(), budget, faults)?,
            "theorems" => theorems(grid, budget, faults)?,
            "propositions" => propositions(grid, budget)?,
            "lemmas" => lemmas(grid, seed, budget)?,
            "certificates" => certificates(grid, budget)?,
            other => {
                return Err(crate::error::CliError::Config(format!(
                    "unknown campaign `{other}`; expected one of {CAMPAIGNS:?}"
                )))
            }
        };
        if !grid.list_specs {
            c.compared.clear();
        }
        if timing {
            c.elapsed_ms = Some(start.elapsed().as_millis() as u64);
        }
        out.push(c);
    }
    Ok(out)
}

