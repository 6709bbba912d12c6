//! Certified spectral data of integer matrices and polynomials.

pub mod ball;
pub mod isolate;
pub mod ratio;
pub mod summary;

pub use isolate::{isolate_roots, RootBox};
pub use ratio::{
    product_polynomial, ratio_polynomial, squarefree_part, unity_ratio_orders,
    SquarefreeDecomposition,
};
pub use summary::{
    modulus_classes, spectral_summary, spectral_summary_with_cap, Cmp1, ModulusClass, RatioFlag,
    SpectralSummary, DEFAULT_CAP_BITS,
};
