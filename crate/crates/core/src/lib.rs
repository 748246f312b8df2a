//! Seidel matrices, symmetric conference matrices and exact spectral tests.
//!
//! - [`matrix`]: the [`SeidelMatrix`] value type, graph conversion,
//!   switching, principal submatrices and the text file format.
//! - [`paley`]: prime-field Paley construction of symmetric conference
//!   matrices and exact validation of `C C^T = (n-1) I`.
//! - [`spectrum`]: characteristic polynomials over the integers
//!   (Faddeev–LeVerrier), spectral symmetry, determinants, Sturm-based
//!   root counting.
//! - [`canonical`]: canonical forms under switching and permutation.
//! - [`explore`]: enumeration and sampling of principal submatrices with
//!   CSV reports.
//!
//! ```
//! use seidel_core::{char_poly, paley_conference_for_prime};
//!
//! let c = paley_conference_for_prime(5).unwrap();
//! let p = char_poly(c.matrix());
//! assert!(p.is_symmetric_spectrum());
//! assert!(p.certify_conference_spectrum(6));
//! assert_eq!(p.render(), "-125 0 75 0 -15 0 1");
//! ```

pub mod canonical;
pub mod explore;
pub mod matrix;
pub mod paley;
pub mod poly;
pub mod spectrum;

#[cfg(any(test, feature = "oracle"))]
pub mod oracle;

pub use canonical::{
    are_equivalent, canonical_form, canonical_form_sequential, normalize_at_vertex, CanonicalForm,
};
pub use explore::{
    classify_orders, explore, ClassifyOptions, ExplorationReport, ExplorationTask, ExploreError,
    Mode, OrderSummary, SubsetRecord, Totals, DEFAULT_CAP,
};
pub use matrix::{
    graph_from_seidel, seidel_from_graph, IndexSet, MatrixError, ParseError, SeidelMatrix,
    SimpleGraph, SwitchingVector,
};
pub use paley::{
    paley_conference, paley_conference_for_prime, validate_conference, ConferenceError,
    ConferenceMatrix, FieldError, PaleyError, PrimeField,
};
pub use spectrum::{char_poly, CharPolynomial, IntervalCount, PolyError, SpectrumSummary};
