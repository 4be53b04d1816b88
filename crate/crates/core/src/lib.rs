//! Linear codes over the non-unital rings E^s and F^s defined by simplicial complexes.
//!
//! The crate builds C_L = {(⟨v, x⟩)_{x∈L} : v ∈ R^m} for the five defining sets
//! `L ⊆ R^m` assembled from two complexes Δ1, Δ2 ⊆ F_q^m, evaluates their Lee weight
//! distributions exhaustively, evaluates the closed-form parameters, and certifies
//! optimality, minimality and self-orthogonality of the Gray images and subfield-like codes.
//!
//! ```
//! use ringcodes::{canonicalize, lee_distribution, make_field, Budget, CodeSpec, DefiningSetKind, RingKind};
//!
//! let f = make_field(2, 1).unwrap();
//! let d1 = canonicalize(&[vec![2]], 3).unwrap();
//! let d2 = canonicalize(&[vec![1, 2]], 3).unwrap();
//! let spec = CodeSpec::new(&f, RingKind::F, d1, d2, DefiningSetKind::D3).unwrap();
//! let dist = lee_distribution(&spec, &Budget::default()).unwrap();
//! // Gray image is a [16, 3, 8] binary code
//! assert_eq!((2 * dist.n, dist.dimension(2), dist.min_d), (16, Some(3), Some(8)));
//! ```

pub mod ambient;
pub mod analysis;
pub mod budget;
pub mod closed_form;
pub mod error;
pub mod field;
pub mod linear;
pub mod numeric;
pub mod ring_codes;
pub mod simplicial;
pub mod weights;

pub use budget::Budget;
pub use error::{Error, Result};
pub use field::{field_arith, inner_product, make_field, make_field_order, FieldElement, FieldOp, FieldSpec, FqVector};
pub use linear::{CompactCode, GeneratorMatrix};
pub use ring_codes::{
    build_defining_set, codeword, gray, gray_code_matrix, lee_distribution, lee_weight, ring_mul,
    subfield_code_matrix, CodeSpec, DefiningSetKind, LeeDistribution, RingElement, RingKind, RingVector,
};
pub use simplicial::{alpha, canonicalize, complex_size, enumerate_complex, hypothesis_check, SimplicialComplex};
pub use weights::WeightDistribution;
