use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Weight → number of codewords, including weight 0.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "Vec<(u64, u64)>", from = "Vec<(u64, u64)>")]
pub struct WeightDistribution {
    counts: BTreeMap<u64, u64>,
}

impl From<WeightDistribution> for Vec<(u64, u64)> {
    fn from(d: WeightDistribution) -> Self {
        d.to_pairs()
    }
}

impl From<Vec<(u64, u64)>> for WeightDistribution {
    fn from(pairs: Vec<(u64, u64)>) -> Self {
        WeightDistribution::from_pairs(pairs)
    }
}

impl WeightDistribution {
    /// Sums frequencies of repeated weights and drops zero frequencies.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (u64, u64)>) -> Self {
        let mut counts = BTreeMap::new();
        for (w, c) in pairs {
            if c > 0 {
                *counts.entry(w).or_insert(0) += c;
            }
        }
        WeightDistribution { counts }
    }

    pub fn from_weights(weights: impl IntoIterator<Item = u64>) -> Self {
        Self::from_pairs(weights.into_iter().map(|w| (w, 1)))
    }

    /// Turns a histogram over messages into one over distinct codewords, given that every
    /// codeword has exactly `kernel` preimages.
    pub fn from_message_histogram(hist: BTreeMap<u64, u64>) -> Result<(Self, u64)> {
        let kernel = hist.get(&0).copied().unwrap_or(0);
        if kernel == 0 {
            return Err(Error::NonUniformFibers { kernel, count: 0 });
        }
        let mut counts = BTreeMap::new();
        for (w, c) in hist {
            if c % kernel != 0 {
                return Err(Error::NonUniformFibers { kernel, count: c });
            }
            if c > 0 {
                counts.insert(w, c / kernel);
            }
        }
        Ok((WeightDistribution { counts }, kernel))
    }

    pub fn counts(&self) -> &BTreeMap<u64, u64> {
        &self.counts
    }

    pub fn get(&self, w: u64) -> u64 {
        self.counts.get(&w).copied().unwrap_or(0)
    }

    pub fn to_pairs(&self) -> Vec<(u64, u64)> {
        self.counts.iter().map(|(&w, &c)| (w, c)).collect()
    }

    /// Number of codewords.
    pub fn total(&self) -> u128 {
        self.counts.values().map(|&c| c as u128).sum()
    }

    pub fn min_nonzero(&self) -> Option<u64> {
        self.counts.keys().copied().find(|&w| w > 0)
    }

    pub fn max_weight(&self) -> Option<u64> {
        self.counts.keys().copied().next_back().filter(|&w| w > 0)
    }

    pub fn weights(&self) -> impl Iterator<Item = u64> + '_ {
        self.counts.keys().copied()
    }
}
