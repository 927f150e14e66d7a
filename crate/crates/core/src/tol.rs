//! Numerical tolerances shared by every module.

/// Zero / sign classification of eigenvalues and vector entries.
pub const TAU_ZERO: f64 = 1e-9;
/// Eigen-residuals and switching-invariance comparisons.
pub const TAU_RES: f64 = 1e-8;
/// Smallest Laplacian eigenvalue below this counts as singular.
pub const TAU_DET: f64 = 1e-7;
/// Variational (quadratic-form) assertions.
pub const TAU_OPT: f64 = 1e-6;
/// A checker margin below `-TAU_THM` is a violation.
pub const TAU_THM: f64 = 1e-9;
/// Margins with magnitude below this are ties.
pub const TAU_TIE: f64 = 1e-7;
