//! All certificates for one spec, with the soundness cross-checks between them.

use std::collections::HashMap;
use std::sync::Mutex;

use ringcodes::ambient::Ambient;
use ringcodes::analysis::{
    ab_minimal, divisibility_certificate, gram_compact, griesmer_certify, minimal_exhaustive_compact,
    minimality_conditions, optimality_predicates, tau_certificate, Certificate, Image, Property,
};
use ringcodes::ring_codes::{gray_code_compact, lee_distribution_in, subfield_code_compact, subfield_distribution_in};
use ringcodes::{Budget, CodeSpec, CompactCode, Error, WeightDistribution};

use crate::report::LabeledCertificate;

/// When to run the exhaustive minimality scan.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Exhaustive {
    Always,
    /// Only when a theorem-based certificate needs confirming.
    WhenNeeded,
}

/// Exhaustive minimality verdicts keyed by field order and column set. Minimality does not
/// depend on multiplicities, so many specs of a grid share one scan.
/// (q, k, distinct columns).
type ColumnKey = (u32, usize, Vec<Vec<u32>>);

#[derive(Default)]
pub struct MinimalityMemo {
    cache: Mutex<HashMap<ColumnKey, Certificate>>,
}

impl MinimalityMemo {
    fn run(&self, code: &CompactCode, budget: &Budget) -> ringcodes::Result<Certificate> {
        let key: ColumnKey = (
            code.field().q(),
            code.k(),
            code.columns().iter().map(|(c, _)| c.iter().map(|x| x.0).collect()).collect(),
        );
        if let Some(c) = self.cache.lock().expect("poisoned").get(&key) {
            return Ok(c.clone());
        }
        let c = minimal_exhaustive_compact(code, budget)?;
        self.cache.lock().expect("poisoned").insert(key, c.clone());
        Ok(c)
    }

    pub fn len(&self) -> usize {
        self.cache.lock().expect("poisoned").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

#[derive(Clone, Debug, Default)]
pub struct Evaluation {
    pub certificates: Vec<LabeledCertificate>,
    /// Named implications between certificates and whether they held.
    pub soundness: Vec<(String, bool)>,
    pub notes: Vec<String>,
}

pub fn name<T: serde::Serialize>(v: &T) -> String {
    match serde_json::to_value(v) {
        Ok(serde_json::Value::String(s)) => s,
        _ => "?".into(),
    }
}

/// Computes every applicable certificate for the Gray image and the subfield code.
pub fn evaluate(
    amb: &Ambient,
    spec: &CodeSpec,
    budget: &Budget,
    mode: Exhaustive,
    memo: &MinimalityMemo,
) -> ringcodes::Result<Evaluation> {
    let q = spec.q();
    let lee = lee_distribution_in(amb, spec, budget)?;
    let sub = subfield_distribution_in(amb, spec, budget)?;
    let mut out = Evaluation::default();
    for image in [Image::Gray, Image::Subfield] {
        let (dist, n, k): (&WeightDistribution, u128, Option<u32>) = match image {
            Image::Gray => (&lee.distribution, 2 * lee.n, lee.dimension(q)),
            Image::Subfield => (&sub.distribution, sub.n, Some(sub.k)),
        };
        let code = match image {
            Image::Gray => gray_code_compact(amb, spec)?,
            Image::Subfield => subfield_code_compact(amb, spec)?,
        };
        let tag = name(&image);
        let mut check = |what: String, ok: bool| out.soundness.push((format!("{tag}: {what}"), ok));

        let griesmer = match (k, dist.min_nonzero()) {
            (Some(k), Some(d)) => Some(griesmer_certify(n, k, d as u128, q)),
            _ => None,
        };
        if let Some(g) = &griesmer {
            check("brute-force parameters respect the Griesmer bound".into(), !g.refuted());
        }
        let ab = ab_minimal(dist, q).ok();
        let theorem = minimality_conditions(spec, image).ok();
        let predicates = optimality_predicates(spec, image).unwrap_or_default();
        let hermitian = q == 4;
        let tau = tau_certificate(spec, image);
        let gram = gram_compact(&code, hermitian)?;
        let div = divisibility_certificate(dist, q, hermitian);

        let needed = ab.as_ref().is_some_and(Certificate::certified)
            || theorem.as_ref().is_some_and(|t| t.certified() || t.refuted());
        let exhaustive = if mode == Exhaustive::Always || needed {
            match memo.run(&code, budget) {
                Ok(c) => Some(c),
                Err(e @ Error::BudgetExceeded { .. }) => {
                    out.notes.push(format!("{tag}: exhaustive minimality skipped: {e}"));
                    None
                }
                Err(e) => return Err(e),
            }
        } else {
            None
        };

        if let Some(ex) = &exhaustive {
            for c in ab.iter().chain(theorem.iter()) {
                let m = name(&c.method);
                if c.certified() {
                    check(format!("{m} certified ⇒ minimal"), ex.certified());
                } else if c.refuted() {
                    check(format!("{m} refuted ⇒ not minimal"), ex.refuted());
                }
            }
        }
        if tau.certified() {
            check("tau_condition certified ⇒ Gram vanishes".into(), gram.certified());
        }
        if let Some(d) = &div {
            if d.certified() {
                check("divisibility certified ⇒ Gram vanishes".into(), gram.certified());
            } else if d.refuted() {
                check("divisibility refuted ⇒ Gram nonzero".into(), gram.refuted());
            }
        }
        for p in predicates.iter().filter(|p| p.certified()) {
            let ok = griesmer
                .as_ref()
                .is_some_and(|g| g.certified() && g.property == Property::DistanceOptimal);
            check(format!("{} certified ⇒ Griesmer distance-optimal", name(&p.method)), ok);
        }

        let all = griesmer
            .into_iter()
            .chain(ab)
            .chain(exhaustive)
            .chain(theorem)
            .chain(predicates)
            .chain([tau, gram])
            .chain(div);
        out.certificates
            .extend(all.map(|certificate| LabeledCertificate { image, certificate }));
    }
    Ok(out)
}

