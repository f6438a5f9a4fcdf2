//! Special functions: Gamma, Mittag-Leffler, Prabhakar, continuous
//! fractional resolvents and the stability sector.

pub mod gamma;
mod matrix;
mod mittag_leffler;
mod sector;

pub use gamma::{gamma, gamma_complex, ln_gamma, rgamma};
pub use matrix::{
    check_square, diag_matrix, eigen_decomposition, eigenvalues, real_matrix, resolvent_matrix, spectral_norm, CVector,
    Eigen, SquareMatrix, EIGEN_CONDITION_CAP,
};
pub use mittag_leffler::{
    ml_asymptotic, ml_series, mittag_leffler, mittag_leffler_with, prabhakar, MlBranch, MlConfig, MlParams,
};
pub use sector::{in_stable_sector, SectorReport, CRITICAL_BAND};

/// Complex scalar used throughout.
pub type ComplexScalar = num_complex::Complex64;
