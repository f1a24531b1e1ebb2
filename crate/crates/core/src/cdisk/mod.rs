//! Two-sided schematics above a thin sphere with a vertical c-disk.

mod certificate;
mod facts;
mod levels;
mod project;
mod schematic;
mod theorem;

pub use certificate::{possibly_fake, thinness_certificate, Certificate, CertificateReport};
pub use facts::{applicable_fact, fact_delta, fact_reports, pipe, FactCounts, FactReport, SplitCounts};
pub use levels::{
    alternating_levels, first_tau_alpha_max, normalize_first_tau_max, normalize_tau, r_gap, region_counts,
    AlternatingLevels, RegionCounts,
};
pub use project::{to_schematic, Labeling};
pub(crate) use schematic::running_counts;
pub use schematic::{
    validate_schematic, CDiskError, CDiskSchematic, DiskKind, SchematicEvent, SchematicReport, SchematicViolation,
    SchematicViolationKind, Side, SideCounts,
};
pub use theorem::{
    check_theorem, check_width_chain, non_thin_levels, ConclusionCheck, EqualityCheck, TheoremCase, TheoremReport,
    WidthChainReport,
};
