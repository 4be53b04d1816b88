//! A deliberately naive model of the codes for prime q: integers mod p, explicit
//! defining sets and explicit codeword sets. Shares no code with the library.
#![allow(dead_code)]

use std::collections::{BTreeMap, HashSet};

use ringcodes::{canonicalize, make_field, CodeSpec, DefiningSetKind, RingKind, SimplicialComplex};

pub fn vectors(q: u32, m: usize) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for _ in 0..m {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..q).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out
}

pub fn in_complex(v: &[u32], family: &[Vec<usize>]) -> bool {
    family
        .iter()
        .any(|f| v.iter().enumerate().all(|(i, &x)| x == 0 || f.contains(&(i + 1))))
}

pub fn dot(q: u32, a: &[u32], b: &[u32]) -> u32 {
    a.iter().zip(b).map(|(x, y)| x * y).sum::<u32>() % q
}

pub fn add(q: u32, a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().zip(b).map(|(x, y)| (x + y) % q).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Ring {
    E,
    F,
}

/// The pairs (t1, t2) with t1 + u t2 ∈ L, u the second generator.
pub fn defining_set(q: u32, m: usize, kind: DefiningSetKind, f: &[Vec<usize>], h: &[Vec<usize>]) -> Vec<(Vec<u32>, Vec<u32>)> {
    let all = vectors(q, m);
    let mut out = Vec::new();
    for t1 in &all {
        for t2 in &all {
            let (a, c) = (in_complex(t1, f), in_complex(t2, h));
            let keep = match kind {
                DefiningSetKind::D1 => a && c,
                DefiningSetKind::D2 => !a && c,
                DefiningSetKind::D3 => a && !c,
                DefiningSetKind::D4 => !a && !c,
                DefiningSetKind::D5 => !(a && c),
            };
            if keep {
                out.push((t1.clone(), t2.clone()));
            }
        }
    }
    out
}

/// Codeword entries (x, y) of ⟨(β1, β2), t⟩ over E (x1x2, x2y1) or F (x1x2, x1y2).
pub fn codeword(q: u32, ring: Ring, b1: &[u32], b2: &[u32], l: &[(Vec<u32>, Vec<u32>)]) -> Vec<(u32, u32)> {
    l.iter()
        .map(|(t1, t2)| match ring {
            Ring::E => (dot(q, b1, t1), dot(q, b2, t1)),
            Ring::F => (dot(q, b1, t1), dot(q, b1, t2)),
        })
        .collect()
}

pub fn lee(c: &[(u32, u32)], q: u32) -> u64 {
    c.iter().map(|&(x, y)| (y != 0) as u64 + ((x + y) % q != 0) as u64).sum()
}

pub fn hamming_x(c: &[(u32, u32)]) -> u64 {
    c.iter().filter(|&&(x, _)| x != 0).count() as u64
}

pub struct Oracle {
    pub n: u64,
    pub lee: BTreeMap<u64, u64>,
    pub subfield: BTreeMap<u64, u64>,
    pub size: u64,
    pub subfield_size: u64,
}

impl Oracle {
    pub fn lee_min(&self) -> Option<u64> {
        self.lee.keys().copied().find(|&w| w > 0)
    }

    pub fn subfield_min(&self) -> Option<u64> {
        self.subfield.keys().copied().find(|&w| w > 0)
    }

    pub fn lee_pairs(&self) -> Vec<(u64, u64)> {
        self.lee.iter().map(|(&a, &b)| (a, b)).collect()
    }

    pub fn subfield_pairs(&self) -> Vec<(u64, u64)> {
        self.subfield.iter().map(|(&a, &b)| (a, b)).collect()
    }
}

pub fn oracle(q: u32, m: usize, ring: Ring, kind: DefiningSetKind, f: &[Vec<usize>], h: &[Vec<usize>]) -> Oracle {
    let l = defining_set(q, m, kind, f, h);
    let all = vectors(q, m);
    let mut words = HashSet::new();
    let mut sub = HashSet::new();
    for b1 in &all {
        for b2 in &all {
            let c = codeword(q, ring, b1, b2, &l);
            sub.insert(c.iter().map(|p| p.0).collect::<Vec<_>>());
            words.insert(c);
        }
    }
    let mut lee_d = BTreeMap::new();
    for w in &words {
        *lee_d.entry(lee(w, q)).or_insert(0) += 1;
    }
    let mut sub_d = BTreeMap::new();
    for w in &sub {
        *sub_d.entry(w.iter().filter(|&&x| x != 0).count() as u64).or_insert(0) += 1;
    }
    Oracle {
        n: l.len() as u64,
        lee: lee_d,
        subfield: sub_d,
        size: words.len() as u64,
        subfield_size: sub.len() as u64,
    }
}

/// Antichains of at most two subsets of [m], listed 1-based.
pub fn families(m: usize) -> Vec<Vec<Vec<usize>>> {
    let sets: Vec<Vec<usize>> = (0u32..1 << m)
        .map(|mask| (1..=m).filter(|i| mask >> (i - 1) & 1 == 1).collect())
        .collect();
    let subset = |a: &Vec<usize>, b: &Vec<usize>| a.iter().all(|x| b.contains(x));
    let mut out: Vec<Vec<Vec<usize>>> = sets.iter().map(|s| vec![s.clone()]).collect();
    for (i, a) in sets.iter().enumerate() {
        for b in &sets[i + 1..] {
            if !subset(a, b) && !subset(b, a) {
                out.push(vec![a.clone(), b.clone()]);
            }
        }
    }
    out
}

pub fn complex(family: &[Vec<usize>], m: usize) -> SimplicialComplex {
    canonicalize(family, m).unwrap()
}

pub fn spec(q: u32, m: usize, ring: RingKind, kind: DefiningSetKind, f: &[Vec<usize>], h: &[Vec<usize>]) -> CodeSpec {
    let field = make_field(q, 1).unwrap();
    CodeSpec::new(&field, ring, complex(f, m), complex(h, m), kind).unwrap()
}

pub fn ring_of(r: RingKind) -> Ring {
    match r {
        RingKind::E => Ring::E,
        RingKind::F => Ring::F,
    }
}
