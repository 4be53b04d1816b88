//! Search for distance-optimal Gray images and subfield codes over a grid.

use std::collections::BTreeSet;

use rayon::prelude::*;
use ringcodes::ambient::Ambient;
use ringcodes::analysis::{griesmer_certify, griesmer_sum, Property};
use ringcodes::{make_field_order, Budget, CodeSpec};

use crate::config::GridConfig;
use crate::error::Result;
use crate::grid::{families, specs};
use crate::report::{FoundCode, SpecEcho};
use crate::verify::brute_params;

fn found(amb: &Ambient, s: &CodeSpec, with_subfield: bool, budget: &Budget) -> Result<Vec<FoundCode>> {
    let mut out = Vec::new();
    let images: &[&str] = if with_subfield { &["gray", "subfield"] } else { &["gray"] };
    for &image in images {
        let Some([n, k, d]) = brute_params(amb, s, image, budget)? else {
            continue;
        };
        let g = griesmer_certify(n, k as u32, d, s.q());
        if g.certified() && g.property == Property::DistanceOptimal {
            out.push(FoundCode {
                q: s.q(),
                image: image.to_string(),
                params: [n, k, d],
                spec: SpecEcho::new(s),
                griesmer_code: griesmer_sum(k as u32, d, s.q()) == n,
            });
        }
    }
    Ok(out)
}

/// Distance-optimal codes of the grid, one per (q, image, [n, k, d]); the first spec in
/// canonical order is kept.
pub fn search(grid: &GridConfig, budget: &Budget) -> Result<Vec<FoundCode>> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    // the subfield code does not depend on the ring
    let first_ring = grid.rings.first();
    for &q in &grid.q {
        let field = make_field_order(q)?;
        for m in grid.m_min..=grid.m_max {
            let amb = Ambient::new(&field, m, budget)?;
            let complexes = families(m, grid.max_sets);
            let all = specs(&field, &complexes, &grid.rings, &grid.variants);
            let hits = all
                .par_iter()
                .map(|s| found(&amb, s, Some(&s.ring) == first_ring, budget))
                .collect::<Result<Vec<_>>>()?;
            for f in hits.into_iter().flatten() {
                if seen.insert((f.q, f.image.clone(), f.params)) {
                    out.push(f);
                }
            }
        }
    }
    Ok(out)
}
