//! The distance-optimal codes table: closed forms, exhaustive enumeration and Griesmer.

use ringcodes::analysis::{griesmer_certify, Property};
use ringcodes::closed_form::{gray_params, theorem3_params};
use ringcodes::ring_codes::{lee_distribution, subfield_distribution};
use ringcodes::{canonicalize, make_field, Budget, CodeSpec, DefiningSetKind, RingKind};

type Row = (u32, usize, &'static [&'static [usize]], &'static [&'static [usize]], [u128; 3]);

/// F-ring aΔ1 + cΔ2^c, Gray image.
const GRAY: &[Row] = &[
    (2, 3, &[&[2]], &[&[1, 2]], [16, 3, 8]),
    (2, 4, &[&[1]], &[&[1, 3, 4]], [32, 4, 16]),
    (2, 4, &[&[1]], &[&[1, 2]], [48, 4, 24]),
    (2, 5, &[&[2]], &[&[1, 2, 3, 4]], [64, 5, 32]),
    (2, 5, &[&[1]], &[&[2, 4]], [112, 5, 56]),
    (2, 6, &[&[1]], &[&[1, 2, 3, 4, 5]], [128, 6, 64]),
    (2, 6, &[&[4]], &[&[1, 3, 4, 5]], [192, 6, 96]),
    (2, 6, &[&[4]], &[&[2, 4, 5]], [224, 6, 112]),
    (2, 6, &[&[1]], &[&[3, 4]], [240, 6, 120]),
    (2, 6, &[&[2, 4]], &[&[1, 2, 4, 5, 6]], [256, 6, 128]),
    (3, 5, &[&[3]], &[&[1, 2, 3, 4]], [972, 5, 648]),
];

/// aΔ1^c + cΔ2, subfield-like code.
const SUBFIELD: &[Row] = &[
    (2, 3, &[&[1, 2]], &[&[1], &[3]], [12, 3, 6]),
    (2, 4, &[&[2, 3, 4]], &[&[3, 4], &[2]], [40, 4, 20]),
    (2, 5, &[&[1, 2, 4, 5]], &[&[1, 4], &[3], &[5]], [96, 5, 48]),
    (2, 5, &[&[1, 3, 4, 5]], &[&[1, 3], &[1, 2], &[2, 5]], [128, 5, 64]),
    (2, 6, &[&[1, 2, 3, 5, 6]], &[&[3, 4], &[2], &[3, 5], &[4, 6]], [288, 6, 144]),
    (2, 6, &[&[2, 3, 4, 5, 6]], &[&[1, 6], &[1, 2], &[1, 5], &[3, 5]], [320, 6, 160]),
    (3, 3, &[&[1, 3]], &[&[1]], [54, 3, 36]),
    (3, 4, &[&[1, 2, 3]], &[&[4]], [162, 4, 108]),
    (3, 4, &[&[1, 4]], &[&[2]], [216, 4, 144]),
    (3, 5, &[&[1, 2, 3, 5]], &[&[2]], [486, 5, 324]),
];

fn spec(row: &Row, ring: RingKind, kind: DefiningSetKind) -> CodeSpec {
    let (q, m, f, h, _) = *row;
    let c = |fam: &[&[usize]]| canonicalize(&fam.iter().map(|s| s.to_vec()).collect::<Vec<_>>(), m).unwrap();
    CodeSpec::new(&make_field(q, 1).unwrap(), ring, c(f), c(h), kind).unwrap()
}

#[test]
fn gray_rows() {
    for row in GRAY {
        let s = spec(row, RingKind::F, DefiningSetKind::D3);
        let p = gray_params(&s).unwrap();
        assert_eq!([p.n, p.k as u128, p.min_d], row.4, "{s}");
        let d = lee_distribution(&s, &Budget::default()).unwrap();
        let brute = [2 * d.n, d.dimension(row.0).unwrap() as u128, d.min_d.unwrap() as u128];
        assert_eq!(brute, row.4, "{s}");
        let g = griesmer_certify(row.4[0], row.4[1] as u32, row.4[2], row.0);
        assert!(g.certified() && g.property == Property::DistanceOptimal, "{s}");
    }
}

#[test]
fn subfield_rows() {
    for row in SUBFIELD {
        for ring in [RingKind::E, RingKind::F] {
            let s = spec(row, ring, DefiningSetKind::D2);
            let p = theorem3_params(&s).unwrap();
            assert_eq!([p.n, p.k as u128, p.min_d], row.4, "{s}");
            let d = subfield_distribution(&s, &Budget::default()).unwrap();
            assert_eq!([d.n, d.k as u128, d.min_d.unwrap() as u128], row.4, "{s}");
        }
        let g = griesmer_certify(row.4[0], row.4[1] as u32, row.4[2], row.0);
        assert!(g.certified() && g.property == Property::DistanceOptimal);
    }
}
