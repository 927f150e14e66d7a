//! Named graphs, exhaustive small-order enumeration, and theorem scans.

mod enumerate;
mod families;
mod scan;

pub use enumerate::{
    canonical_code, enumerate_switching_classes, enumerate_underlying, COTREE_CAP, UNDERLYING_CAP,
};
pub use families::{generate, Family, FamilySpec};
pub use scan::{
    scan, ScanFilters, ScanOptions, ScanOutput, ScanRecord, ScanSummary, DEFAULT_SCAN_CAP,
};
