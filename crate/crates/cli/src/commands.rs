//! Single-spec commands: params, dist, check.

use ringcodes::ambient::Ambient;
use ringcodes::closed_form::{gray_params, prop1_distribution, prop2_distribution, ring_code_params, theorem3_params};
use ringcodes::ring_codes::{gray_code_compact, lee_distribution_in, subfield_distribution_in};
use ringcodes::{Budget, CodeSpec, Error, RingKind};

use crate::certify::{evaluate, Exhaustive, MinimalityMemo};
use crate::report::{Outcome, ParamsEntry, Report, SpecEcho};

fn closed_forms(spec: &CodeSpec) -> Vec<ParamsEntry> {
    vec![
        ParamsEntry::from_result("ring", &ring_code_params(spec)),
        ParamsEntry::from_result("gray", &gray_params(spec)),
        ParamsEntry::from_result("subfield", &theorem3_params(spec)),
    ]
}

/// Closed-form parameters. The outcome is a hypothesis violation when no closed form applies.
pub fn params(spec: &CodeSpec) -> Report {
    let mut r = Report::new("params");
    r.input = Some(SpecEcho::new(spec));
    r.closed_form = closed_forms(spec);
    if r.closed_form.iter().all(|p| p.error.is_some()) {
        r.outcome = Outcome::Hypothesis;
    }
    if spec.length().is_ok_and(|n| n <= 1) {
        r.notes.push("degenerate defining set".into());
    }
    r
}

/// Exhaustive distributions, compared against every closed form whose hypotheses hold.
pub fn dist(spec: &CodeSpec, budget: &Budget) -> ringcodes::Result<Report> {
    let q = spec.q();
    let amb = Ambient::new(&spec.field, spec.m, budget)?;
    let lee = lee_distribution_in(&amb, spec, budget)?;
    let sub = subfield_distribution_in(&amb, spec, budget)?;
    let mut r = Report::new("dist");
    r.input = Some(SpecEcho::new(spec));
    let lee_d = lee.min_d.map(u128::from);
    let lee_k = lee.dimension(q);
    r.brute_force = vec![
        ParamsEntry {
            code: "ring",
            n: Some(lee.n),
            k: lee_k,
            size: Some(lee.size),
            min_d: lee_d,
            ..Default::default()
        },
        ParamsEntry {
            code: "gray",
            n: Some(2 * lee.n),
            k: lee_k,
            size: Some(lee.size),
            min_d: lee_d,
            ..Default::default()
        },
        ParamsEntry {
            code: "subfield",
            n: Some(sub.n),
            k: Some(sub.k),
            size: Some((q as u128).pow(sub.k)),
            min_d: sub.min_d.map(u128::from),
            ..Default::default()
        },
    ];
    r.closed_form = closed_forms(spec);
    for (cf, bf) in r.closed_form.clone().iter().zip(r.brute_force.clone()) {
        if cf.error.is_none() {
            let same = cf.n == bf.n && cf.size == bf.size && cf.min_d == bf.min_d && cf.k == bf.k;
            r.agree(format!("{}_params", cf.code), same);
        }
    }
    if let ([a], [b]) = (spec.delta1.maximal(), spec.delta2.maximal()) {
        let closed = match spec.ring {
            RingKind::E => prop1_distribution(*a, *b, spec.kind, q, spec.m),
            RingKind::F => prop2_distribution(*a, *b, spec.kind, q, spec.m),
        };
        match closed {
            Ok(d) => {
                r.agree("lee_distribution", d == lee.distribution);
                r.distributions.insert("lee_closed_form".into(), d);
            }
            Err(e) => r.notes.push(format!("no closed-form distribution: {e}")),
        }
    }
    r.distributions.insert("lee".into(), lee.distribution);
    r.distributions.insert("subfield".into(), sub.distribution);
    Ok(r)
}

/// Every certificate, with exhaustive minimality and the Gray isometry check.
pub fn check(spec: &CodeSpec, budget: &Budget) -> ringcodes::Result<Report> {
    let amb = Ambient::new(&spec.field, spec.m, budget)?;
    let memo = MinimalityMemo::default();
    let ev = evaluate(&amb, spec, budget, Exhaustive::Always, &memo)?;
    let mut r = Report::new("check");
    r.input = Some(SpecEcho::new(spec));
    r.certificates = ev.certificates;
    for (name, ok) in ev.soundness {
        r.agree(name, ok);
    }
    r.notes = ev.notes;
    let lee = lee_distribution_in(&amb, spec, budget)?;
    match gray_code_compact(&amb, spec)?.weight_distribution(budget) {
        Ok(d) => r.agree("gray: Hamming distribution equals Lee distribution", d == lee.distribution),
        Err(e @ Error::BudgetExceeded { .. }) => r.notes.push(format!("Gray isometry check skipped: {e}")),
        Err(e) => return Err(e),
    }
    Ok(r)
}
