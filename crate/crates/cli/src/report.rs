//! Report schema. Serialization is deterministic: maps are ordered and timing is only
//! present when asked for.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use ringcodes::analysis::{Certificate, Image};
use ringcodes::closed_form::CodeParams;
use ringcodes::{CodeSpec, DefiningSetKind, RingKind, WeightDistribution};
use serde::{Deserialize, Serialize};

/// How a run ended; decides the exit code.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    #[default]
    Ok,
    Mismatch,
    Hypothesis,
}

impl Outcome {
    pub fn exit_code(self) -> u8 {
        match self {
            Outcome::Ok => 0,
            Outcome::Hypothesis => 2,
            Outcome::Mismatch => 3,
        }
    }

    /// The more severe of the two; mismatches dominate.
    pub fn max(self, other: Outcome) -> Outcome {
        let rank = |o| match o {
            Outcome::Ok => 0,
            Outcome::Hypothesis => 1,
            Outcome::Mismatch => 2,
        };
        if rank(other) > rank(self) {
            other
        } else {
            self
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpecEcho {
    pub q: u32,
    pub m: usize,
    pub ring: RingKind,
    pub variant: DefiningSetKind,
    pub delta1: Vec<Vec<usize>>,
    pub delta2: Vec<Vec<usize>>,
    /// |L|.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub length: Option<u128>,
}

impl SpecEcho {
    pub fn new(spec: &CodeSpec) -> Self {
        SpecEcho {
            q: spec.q(),
            m: spec.m,
            ring: spec.ring,
            variant: spec.kind,
            delta1: spec.delta1.to_lists(),
            delta2: spec.delta2.to_lists(),
            length: spec.length().ok(),
        }
    }
}

/// Parameters of one code, or why they could not be given.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ParamsEntry {
    /// "ring", "gray" or "subfield".
    pub code: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<u128>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub size: Option<u128>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub min_d: Option<u128>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kappa1: Option<i128>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kappa2: Option<i128>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl ParamsEntry {
    pub fn from_result(code: &'static str, r: &ringcodes::Result<CodeParams>) -> Self {
        match r {
            Ok(p) => ParamsEntry {
                code,
                n: Some(p.n),
                k: Some(p.k),
                size: Some(p.size),
                min_d: Some(p.min_d),
                kappa1: p.kappa1,
                kappa2: p.kappa2,
                error: None,
            },
            Err(e) => ParamsEntry {
                code,
                error: Some(e.to_string()),
                ..Default::default()
            },
        }
    }

    pub fn triple(&self) -> Option<[u128; 3]> {
        Some([self.n?, self.k? as u128, self.min_d?])
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LabeledCertificate {
    pub image: Image,
    #[serde(flatten)]
    pub certificate: Certificate,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CampaignSummary {
    pub name: String,
    pub checked: u64,
    pub skipped: u64,
    pub mismatches: u64,
    /// Named counters, e.g. how many certificates of each kind were exercised.
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub counters: BTreeMap<String, u64>,
    /// First few mismatches.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub examples: Vec<String>,
    /// Every compared spec or case, in canonical order.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub compared: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl CampaignSummary {
    pub fn new(name: &str) -> Self {
        CampaignSummary {
            name: name.to_string(),
            ..Default::default()
        }
    }

    pub fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.mismatches += 1;
            if self.examples.len() < 5 {
                self.examples.push(what());
            }
        }
    }

    pub fn count(&mut self, key: &str) {
        *self.counters.entry(key.to_string()).or_default() += 1;
    }

    pub fn merge(&mut self, other: CampaignSummary) {
        self.checked += other.checked;
        self.skipped += other.skipped;
        self.mismatches += other.mismatches;
        for (k, v) in other.counters {
            *self.counters.entry(k).or_default() += v;
        }
        for e in other.examples {
            if self.examples.len() < 5 {
                self.examples.push(e);
            }
        }
        self.compared.extend(other.compared);
    }

    pub fn passed(&self) -> bool {
        self.mismatches == 0 && self.checked > 0
    }
}

/// A distance-optimal code found by search.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FoundCode {
    pub q: u32,
    /// "gray" or "subfield".
    pub image: String,
    pub params: [u128; 3],
    pub spec: SpecEcho,
    #[serde(default)]
    pub griesmer_code: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Timing {
    pub total_ms: u64,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub command: &'static str,
    pub outcome: Outcome,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub input: Option<SpecEcho>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub closed_form: Vec<ParamsEntry>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub brute_force: Vec<ParamsEntry>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub distributions: BTreeMap<String, WeightDistribution>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub certificates: Vec<LabeledCertificate>,
    /// Named cross-checks; any false entry makes the outcome a mismatch.
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub agreement: BTreeMap<String, bool>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub campaigns: Vec<CampaignSummary>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub codes: Vec<FoundCode>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing: Option<Timing>,
}

impl Report {
    pub fn new(command: &'static str) -> Self {
        Report {
            command,
            ..Default::default()
        }
    }

    pub fn agree(&mut self, name: impl Into<String>, ok: bool) {
        self.agreement.insert(name.into(), ok);
        if !ok {
            self.outcome = self.outcome.max(Outcome::Mismatch);
        }
    }

    pub fn to_json(&self) -> serde_json::Result<String> {
        let mut s = serde_json::to_string_pretty(self)?;
        s.push('\n');
        Ok(s)
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "{}: {:?}", self.command, self.outcome);
        if let Some(i) = &self.input {
            let _ = writeln!(
                s,
                "q={} m={} ring={} {} Δ1={:?} Δ2={:?} |L|={}",
                i.q,
                i.m,
                i.ring,
                i.variant,
                i.delta1,
                i.delta2,
                i.length.map_or("?".into(), |n| n.to_string())
            );
        }
        for (label, list) in [("closed form", &self.closed_form), ("brute force", &self.brute_force)] {
            for p in list {
                match (&p.error, p.triple()) {
                    (Some(e), _) => {
                        let _ = writeln!(s, "{label} {}: {e}", p.code);
                    }
                    (None, Some([n, k, d])) => {
                        let _ = writeln!(s, "{label} {}: [{n}, {k}, {d}] size {}", p.code, p.size.unwrap_or(0));
                    }
                    (None, None) => {
                        let _ = writeln!(s, "{label} {}: n={:?} size={:?}", p.code, p.n, p.size);
                    }
                }
            }
        }
        for (name, d) in &self.distributions {
            let _ = writeln!(s, "distribution {name}: {:?}", d.to_pairs());
        }
        for c in &self.certificates {
            let cert = &c.certificate;
            let _ = write!(s, "{:?} {:?} via {:?}: {:?}", c.image, cert.property, cert.method, cert.verdict);
            if let Some(n) = &cert.note {
                let _ = write!(s, " ({n})");
            }
            s.push('\n');
        }
        for (name, ok) in &self.agreement {
            let _ = writeln!(s, "{name}: {}", if *ok { "agree" } else { "MISMATCH" });
        }
        for c in &self.campaigns {
            let _ = writeln!(
                s,
                "campaign {}: {} checked, {} skipped, {} mismatches",
                c.name, c.checked, c.skipped, c.mismatches
            );
            for e in &c.examples {
                let _ = writeln!(s, "  {e}");
            }
        }
        for c in &self.codes {
            let [n, k, d] = c.params;
            let _ = writeln!(
                s,
                "q={} {} [{n}, {k}, {d}] from {} {} Δ1={:?} Δ2={:?}",
                c.q, c.image, c.spec.ring, c.spec.variant, c.spec.delta1, c.spec.delta2
            );
        }
        for n in &self.notes {
            let _ = writeln!(s, "note: {n}");
        }
        if let Some(t) = &self.timing {
            let _ = writeln!(s, "time: {} ms", t.total_ms);
        }
        s
    }
}
