//! Signed graphs: switching, spectra, balanced-clique invariants, and
//! checkers for spectral bounds, with exhaustive small-order scans.

pub mod atlas;
pub mod bounds;
pub mod error;
pub mod graph;
pub mod invariants;
pub mod linalg;
pub mod sgr;
pub mod spectra;
pub mod tol;

pub use atlas::{generate, scan, Family, FamilySpec, ScanFilters, ScanOptions, ScanOutput};
pub use bounds::{TheoremId, TheoremReport, Verdict};
pub use error::{Error, Result};
pub use graph::{BalanceResult, Edge, Sign, SignedGraph, SwitchingFunction};
pub use linalg::{Inertia, Matrix, Spectrum};
pub use sgr::{parse_sgr, to_sgr};
